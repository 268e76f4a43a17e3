//! Explicit monomial lifts: the generators s_k, t_k, s~_k, J in each matrix
//! realization, the lift attached to an admissible partition, the twist
//! involution, group-membership checks, and element orders.

use crate::error::{Error, Result};
use crate::gauss::is_one;
use crate::monomial::Monomial;
use crate::partition::Partition;
use crate::tag::{Family, TypeTag};

/// Generator kinds: S and T take a 1-based index, TEll is the unconjugated
/// t at the end of the chain, STilde is the unsigned swap (2A only), J the
/// twist matrix (2A, 2D).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    S,
    T,
    TEll,
    STilde,
    J,
}

/// A monomial matrix in the standard realization of `tag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftMatrix {
    pub tag: TypeTag,
    pub mat: Monomial,
}

/// A lift together with its class data; `twisted` marks elements acting as
/// g x theta rather than g alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedElement {
    pub matrix: LiftMatrix,
    pub partition: Partition,
    pub twisted: bool,
}

impl TwistedElement {
    pub fn tag(&self) -> TypeTag {
        self.matrix.tag
    }

    /// The matrix through which the element acts on the standard module:
    /// g itself when untwisted, g*J when twisted (so for the constructed
    /// lift n = n~*J this recovers n~ because J squares to the identity).
    pub fn acting_matrix(&self) -> Monomial {
        if self.twisted {
            let j = twist_matrix(self.tag()).expect("twisted tag has J");
            self.matrix.mat.mul(&j)
        } else {
            self.matrix.mat.clone()
        }
    }
}

fn index_error(tag: TypeTag, index: usize) -> Error {
    Error::IndexOutOfRange {
        tag: tag.to_string(),
        index,
    }
}

/// Identity-except-swap of coordinates a and b (0-based), entries +1.
fn swap(n: usize, a: usize, b: usize) -> Monomial {
    let mut row: Vec<usize> = (0..n).collect();
    row.swap(a, b);
    Monomial::from_parts(row, vec![0; n])
}

/// Signed rotation in coordinates k-1, k (0-based cols): entry (k-1, k) = 1
/// and (k, k-1) = -1, identity elsewhere.
fn signed_swap(n: usize, k: usize) -> Monomial {
    let mut row: Vec<usize> = (0..n).collect();
    let mut exp = vec![0u8; n];
    row[k - 1] = k;
    exp[k - 1] = 2;
    row[k] = k - 1;
    Monomial::from_parts(row, exp)
}

/// The twist matrix J (2A and 2D only).
pub fn twist_matrix(tag: TypeTag) -> Result<Monomial> {
    let l = tag.rank;
    match tag.family {
        Family::TwoA => {
            let row: Vec<usize> = (0..l).map(|j| l - 1 - j).collect();
            let exp: Vec<u8> = if l % 2 == 0 {
                (0..l).map(|j| if j < l / 2 { 1 } else { 3 }).collect()
            } else {
                vec![0; l]
            };
            Ok(Monomial::from_parts(row, exp))
        }
        Family::TwoD => Ok(swap(2 * l + 2, l, l + 1)),
        _ => Err(Error::UnsupportedType {
            tag: tag.family.name().to_string(),
            rank: l,
            reason: "J is defined for twisted types only".to_string(),
        }),
    }
}

fn s_generator(tag: TypeTag, k: usize) -> Result<Monomial> {
    let l = tag.rank;
    let n = tag.matrix_size();
    let valid = match tag.family {
        Family::A | Family::TwoA | Family::B | Family::C | Family::D => k >= 1 && k < l,
        Family::TwoD => k >= 1 && k <= l,
    };
    if !valid {
        return Err(index_error(tag, k));
    }
    Ok(match tag.family {
        Family::A | Family::TwoA => signed_swap(n, k),
        Family::B => swap(n, k - 1, k).mul(&swap(n, 2 * l - k, 2 * l - k + 1)),
        Family::C | Family::D => swap(n, k - 1, k).mul(&swap(n, 2 * l - k - 1, 2 * l - k)),
        Family::TwoD => swap(n, k - 1, k).mul(&swap(n, 2 * l - k + 1, 2 * l - k + 2)),
    })
}

/// The unconjugated t at the top of the chain: t_l for B and C, the swap
/// t_l for D, and t_{l+1} = J for 2D.
fn t_top(tag: TypeTag) -> Result<Monomial> {
    let l = tag.rank;
    let n = tag.matrix_size();
    match tag.family {
        Family::B => {
            // Rows/cols l and l+2 swapped with +1 entries, (l+1, l+1) = -1.
            let mut row: Vec<usize> = (0..n).collect();
            let mut exp = vec![0u8; n];
            row.swap(l - 1, l + 1);
            exp[l] = 2;
            Ok(Monomial::from_parts(row, exp))
        }
        Family::C => {
            // (l, l+1) = 1 and (l+1, l) = -1.
            let mut row: Vec<usize> = (0..n).collect();
            let mut exp = vec![0u8; n];
            row[l - 1] = l;
            exp[l - 1] = 2;
            row[l] = l - 1;
            Ok(Monomial::from_parts(row, exp))
        }
        Family::D => Ok(swap(n, l - 1, l)),
        Family::TwoD => twist_matrix(tag),
        Family::A | Family::TwoA => Err(index_error(tag, l)),
    }
}

fn t_generator(tag: TypeTag, k: usize) -> Result<Monomial> {
    let l = tag.rank;
    match tag.family {
        Family::B | Family::C => {
            if !(1..=l).contains(&k) {
                return Err(index_error(tag, k));
            }
            let mut m = t_top(tag)?;
            for j in (k..l).rev() {
                let s = s_generator(tag, j)?;
                m = s.mul(&m).mul(&s);
            }
            Ok(m)
        }
        Family::D => {
            // t_k swaps coordinates k and 2l - k + 1 directly.
            if !(1..=l).contains(&k) {
                return Err(index_error(tag, k));
            }
            Ok(swap(2 * l, k - 1, 2 * l - k))
        }
        Family::TwoD => {
            if !(1..=l + 1).contains(&k) {
                return Err(index_error(tag, k));
            }
            let mut m = t_top(tag)?;
            for j in (k..=l).rev() {
                let s = s_generator(tag, j)?;
                m = s.mul(&m).mul(&s);
            }
            Ok(m)
        }
        Family::A | Family::TwoA => Err(index_error(tag, k)),
    }
}

pub fn generator(tag: TypeTag, kind: GenKind, k: usize) -> Result<LiftMatrix> {
    let mat = match kind {
        GenKind::S => s_generator(tag, k)?,
        GenKind::T => t_generator(tag, k)?,
        GenKind::TEll => t_top(tag)?,
        GenKind::STilde => {
            if tag.family != Family::TwoA || !(1..tag.rank).contains(&k) {
                return Err(index_error(tag, k));
            }
            swap(tag.rank, k - 1, k)
        }
        GenKind::J => twist_matrix(tag)?,
    };
    Ok(LiftMatrix { tag, mat })
}

/// c_nu for the B/C/D/2D chain construction: the s-product along the block
/// followed by the t at its right edge. `start` is the 0-based offset l'_nu
/// and `len` the part l_nu.
fn chain_block(tag: TypeTag, start: u64, len: u64) -> Result<Monomial> {
    let mut m = Monomial::identity(tag.matrix_size());
    for k in start + 1..start + len {
        m = m.mul(&s_generator(tag, k as usize)?);
    }
    Ok(m.mul(&t_generator(tag, (start + len) as usize)?))
}

/// The block factor c_nu for 2A; `nu` is 1-based. The first block carries
/// the sign corrections that put the full product in SL_l.
fn twoa_block(tag: TypeTag, nu: usize, start: u64, len: u64) -> Result<Monomial> {
    let l = tag.rank;
    let n = tag.matrix_size();
    let mut m = Monomial::identity(n);
    if nu > 1 {
        for k in start + 1..start + len {
            m = m.mul(&s_generator(tag, k as usize)?);
        }
        return Ok(m);
    }
    match (l % 4, len) {
        (0 | 1, _) => {
            for k in 1..len {
                m = m.mul(&s_generator(tag, k as usize)?);
            }
        }
        (_, 1) => {
            // c_1 = Diag(-1, 1, ..., 1).
            let mut exp = vec![0u8; n];
            exp[0] = 2;
            m = Monomial::from_parts((0..n).collect(), exp);
        }
        _ => {
            for k in 1..len - 1 {
                m = m.mul(&s_generator(tag, k as usize)?);
            }
            m = m.mul(&generator(tag, GenKind::STilde, (len - 1) as usize)?.mat);
        }
    }
    Ok(m)
}

/// The lift attached to an admissible partition: the product of the block
/// factors c_nu over ascending parts, times J for twisted types.
pub fn lift(tag: TypeTag, p: &Partition) -> Result<TwistedElement> {
    tag.check_admissible(p)?;
    let n = tag.matrix_size();
    let ascending = p.ascending();
    let prefixes = p.prefix_sums();
    let mut m = Monomial::identity(n);
    match tag.family {
        Family::A => {
            for k in 1..tag.rank {
                m = m.mul(&s_generator(tag, k)?);
            }
        }
        Family::B | Family::C | Family::D | Family::TwoD => {
            for (&start, &len) in prefixes.iter().zip(&ascending) {
                m = m.mul(&chain_block(tag, start, len)?);
            }
        }
        Family::TwoA => {
            for (nu, (&start, &len)) in prefixes.iter().zip(&ascending).enumerate() {
                m = m.mul(&twoa_block(tag, nu + 1, start, len)?);
            }
        }
    }
    let twisted = tag.family.is_twisted();
    if twisted {
        m = m.mul(&twist_matrix(tag)?);
    }
    Ok(TwistedElement {
        matrix: LiftMatrix { tag, mat: m },
        partition: p.clone(),
        twisted,
    })
}

/// The pinned involution on the group: Ad(J)(g^{-1})^T for 2A, J g J for 2D.
pub fn apply_theta(tag: TypeTag, g: &Monomial) -> Result<Monomial> {
    let j = twist_matrix(tag)?;
    Ok(match tag.family {
        Family::TwoA => j.mul(&g.inv().transpose()).mul(&j),
        _ => j.mul(g).mul(&j),
    })
}

/// Antidiagonal +1 matrix of size n (the symmetric form for B, D, 2D).
fn antidiag(n: usize) -> Monomial {
    Monomial::from_parts((0..n).map(|j| n - 1 - j).collect(), vec![0; n])
}

/// The symplectic form K * Diag(1,...,1,-1,...,-1) for C.
fn symplectic_form(l: usize) -> Monomial {
    let n = 2 * l;
    let row: Vec<usize> = (0..n).map(|j| n - 1 - j).collect();
    let exp: Vec<u8> = (0..n).map(|j| if j < l { 0 } else { 2 }).collect();
    Monomial::from_parts(row, exp)
}

/// Exact membership test in the realization attached to the tag:
/// special-linear for A/2A, split orthogonal for B/D/2D, symplectic for C.
pub fn is_member(tag: TypeTag, g: &Monomial) -> bool {
    if g.size() != tag.matrix_size() {
        return false;
    }
    match tag.family {
        Family::A | Family::TwoA => is_one(&g.det()),
        Family::B | Family::D | Family::TwoD => {
            let k = antidiag(g.size());
            g.transpose().mul(&k).mul(g) == k && is_one(&g.det())
        }
        Family::C => {
            let j = symplectic_form(tag.rank);
            g.transpose().mul(&j).mul(g) == j
        }
    }
}

/// Least k >= 1 with e^k = 1, where powers of a twisted element interleave
/// theta: (g x theta)^2 = g * theta(g), so the order is twice the order of
/// g * theta(g). Capped at 4 * N * 4 * lcm(parts) as a construction-bug trap.
pub fn element_order(e: &TwistedElement) -> Result<u64> {
    let n = e.matrix.mat.size() as u64;
    let cap = 16 * n * e.partition.lcm();
    if e.twisted {
        let g = &e.matrix.mat;
        let prod = g.mul(&apply_theta(e.tag(), g)?);
        Ok(2 * prod.order(cap)?)
    } else {
        e.matrix.mat.order(cap)
    }
}

/// Least k >= 1 with a scalar k-th power, capped like Monomial::order.
fn scalar_order(g: &Monomial, cap: u64) -> Result<u64> {
    let mut acc = g.clone();
    for k in 1..=cap {
        if acc.as_scalar().is_some() {
            return Ok(k);
        }
        acc = acc.mul(g);
    }
    Err(Error::OrderCapExceeded { cap })
}

/// Order of e as a torsion automorphism: least k >= 1 with e^k central in
/// the realization. For 2A the lift of a twisted class can pick up a central
/// scalar, making element_order twice this value; no odd power of a twisted
/// element is inner, so the twisted case is 2 * scalar order of g * theta(g).
pub fn order_mod_center(e: &TwistedElement) -> Result<u64> {
    let n = e.matrix.mat.size() as u64;
    let cap = 16 * n * e.partition.lcm();
    if e.twisted {
        let g = &e.matrix.mat;
        let prod = g.mul(&apply_theta(e.tag(), g)?);
        Ok(2 * scalar_order(&prod, cap)?)
    } else {
        scalar_order(&e.matrix.mat, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::gauss;

    fn tag(family: Family, rank: usize) -> TypeTag {
        TypeTag::new(family, rank).unwrap()
    }

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn a_type_simple_generator() {
        let s1 = generator(tag(Family::A, 2), GenKind::S, 1).unwrap().mat;
        assert_eq!(s1.entry(0, 1), gauss(1, 0));
        assert_eq!(s1.entry(1, 0), gauss(-1, 0));
        assert_eq!(s1.entry(0, 0), gauss(0, 0));
        assert_eq!(s1.order(16).unwrap(), 4);
    }

    #[test]
    fn b_type_t_top_matches_entrywise_description() {
        // Rank 2: 5x5 identity except coordinates 2 and 4 swapped and the
        // middle entry negated.
        let t2 = generator(tag(Family::B, 2), GenKind::TEll, 2).unwrap().mat;
        assert_eq!(t2.entry(1, 3), gauss(1, 0));
        assert_eq!(t2.entry(3, 1), gauss(1, 0));
        assert_eq!(t2.entry(2, 2), gauss(-1, 0));
        assert_eq!(t2.entry(0, 0), gauss(1, 0));
        assert_eq!(t2.order(16).unwrap(), 2);
    }

    #[test]
    fn s_generator_orders_by_family() {
        assert_eq!(generator(tag(Family::A, 4), GenKind::S, 2).unwrap().mat.order(16).unwrap(), 4);
        assert_eq!(generator(tag(Family::C, 3), GenKind::S, 1).unwrap().mat.order(16).unwrap(), 2);
        assert_eq!(generator(tag(Family::B, 3), GenKind::S, 2).unwrap().mat.order(16).unwrap(), 2);
        assert_eq!(generator(tag(Family::D, 4), GenKind::S, 3).unwrap().mat.order(16).unwrap(), 2);
        assert_eq!(generator(tag(Family::TwoD, 3), GenKind::S, 3).unwrap().mat.order(16).unwrap(), 2);
        assert_eq!(generator(tag(Family::TwoA, 5), GenKind::STilde, 2).unwrap().mat.order(16).unwrap(), 2);
    }

    #[test]
    fn c_type_t_top_is_order_four() {
        let t = generator(tag(Family::C, 3), GenKind::TEll, 3).unwrap().mat;
        assert_eq!(t.entry(2, 3), gauss(1, 0));
        assert_eq!(t.entry(3, 2), gauss(-1, 0));
        assert_eq!(t.order(16).unwrap(), 4);
    }

    #[test]
    fn twisted_a_j_matrix() {
        // Even rank: antidiagonal of i's and -i's, determinant per parity.
        let j4 = twist_matrix(tag(Family::TwoA, 4)).unwrap();
        assert_eq!(j4.entry(3, 0), gauss(0, 1));
        assert_eq!(j4.entry(0, 3), gauss(0, -1));
        assert!(j4.mul(&j4).is_identity());
        for l in 3..=10 {
            let j = twist_matrix(tag(Family::TwoA, l)).unwrap();
            assert!(j.mul(&j).is_identity());
            let expect = if (l / 2) % 2 == 0 { gauss(1, 0) } else { gauss(-1, 0) };
            assert_eq!(j.det(), expect, "det J at rank {l}");
        }
    }

    #[test]
    fn theta_is_an_involution() {
        for t in [tag(Family::TwoA, 5), tag(Family::TwoA, 6), tag(Family::TwoD, 3)] {
            for p in t.admissible_partitions() {
                let g = lift(t, &p).unwrap().matrix.mat;
                let once = apply_theta(t, &g).unwrap();
                assert_eq!(apply_theta(t, &once).unwrap(), g);
            }
        }
        // J itself is symmetric for odd rank (theta fixes it) and
        // antisymmetric for even rank (theta negates it).
        let j5 = twist_matrix(tag(Family::TwoA, 5)).unwrap();
        assert_eq!(apply_theta(tag(Family::TwoA, 5), &j5).unwrap(), j5);
        let j6 = twist_matrix(tag(Family::TwoA, 6)).unwrap();
        assert_eq!(apply_theta(tag(Family::TwoA, 6), &j6).unwrap(), j6.neg());
    }

    #[test]
    fn theta_reverses_and_negates_torus_exponents() {
        // Diag(i, 1, -1, -i, 1) maps to Diag(-1, 1, -1... ) reversed/inverted.
        let t = tag(Family::TwoA, 5);
        let d = Monomial::from_parts((0..5).collect(), vec![1, 0, 2, 3, 0]);
        let image = apply_theta(t, &d).unwrap();
        let expected = Monomial::from_parts((0..5).collect(), vec![0, 1, 2, 0, 3]);
        assert_eq!(image, expected);
    }

    #[test]
    fn membership_for_all_small_lifts() {
        for family in Family::ALL {
            let min = match family {
                Family::D | Family::TwoA => 3,
                _ => 2,
            };
            for rank in min..=6 {
                let t = tag(family, rank);
                for p in t.admissible_partitions() {
                    let e = lift(t, &p).unwrap();
                    assert!(
                        is_member(t, &e.matrix.mat),
                        "membership fails for {t} {p}"
                    );
                    assert_eq!(e.twisted, family.is_twisted());
                }
            }
        }
    }

    #[test]
    fn element_orders_match_printed_statements() {
        // Full cycle in SL_l: order 2l for even l, l for odd l.
        let a4 = lift(tag(Family::A, 4), &part(&[4])).unwrap();
        assert_eq!(element_order(&a4).unwrap(), 8);
        let a5 = lift(tag(Family::A, 5), &part(&[5])).unwrap();
        assert_eq!(element_order(&a5).unwrap(), 5);
        // Symplectic lift of (2,1): order 4 * lcm(2,1).
        let c21 = lift(tag(Family::C, 3), &part(&[2, 1])).unwrap();
        assert_eq!(element_order(&c21).unwrap(), 8);
    }

    #[test]
    fn twisted_sl_lifts_can_square_to_the_center() {
        // In SL_4 x theta the lift of (1,1,1,1) squares to -Id, so its group
        // order doubles the order of the automorphism it induces.
        let ones = lift(tag(Family::TwoA, 4), &part(&[1, 1, 1, 1])).unwrap();
        assert_eq!(element_order(&ones).unwrap(), 4);
        assert_eq!(order_mod_center(&ones).unwrap(), 2);
        // Same doubling for (3,1); at odd rank the center cannot intervene.
        let p31 = lift(tag(Family::TwoA, 4), &part(&[3, 1])).unwrap();
        assert_eq!(element_order(&p31).unwrap(), 12);
        assert_eq!(order_mod_center(&p31).unwrap(), 6);
        let p311 = lift(tag(Family::TwoA, 5), &part(&[3, 1, 1])).unwrap();
        assert_eq!(element_order(&p311).unwrap(), order_mod_center(&p311).unwrap());
        // Untwisted full cycle in SL_4: order 8 in the group, 4 mod center.
        let a4 = lift(tag(Family::A, 4), &part(&[4])).unwrap();
        assert_eq!(order_mod_center(&a4).unwrap(), 4);
    }

    #[test]
    fn twoa_first_block_case_split() {
        // l = 5 = 1 mod 4: all signed generators, n~ = s1 s2 s3 s4.
        let t5 = tag(Family::TwoA, 5);
        let e = lift(t5, &part(&[5])).unwrap();
        let mut expect = Monomial::identity(5);
        for k in 1..5 {
            expect = expect.mul(&s_generator(t5, k).unwrap());
        }
        expect = expect.mul(&twist_matrix(t5).unwrap());
        assert_eq!(e.matrix.mat, expect);

        // l = 7 = 3 mod 4, partition (1,3,3) ascending: c_1 = Diag(-1,...).
        let t7 = tag(Family::TwoA, 7);
        let e = lift(t7, &part(&[3, 3, 1])).unwrap();
        assert!(is_member(t7, &e.matrix.mat));

        // l = 6 = 2 mod 4, partition (3,3): c_1 ends with the unsigned swap.
        let t6 = tag(Family::TwoA, 6);
        let e = lift(t6, &part(&[3, 3])).unwrap();
        assert!(is_member(t6, &e.matrix.mat));
    }

    #[test]
    fn twod_acting_matrix_drops_the_twist() {
        // For n = n~ * J the standard action matrix n * J recovers n~, whose
        // order divides 2 * lcm.
        let t = tag(Family::TwoD, 4);
        let p = part(&[3, 1, 1]);
        let e = lift(t, &p).unwrap();
        let acting = e.acting_matrix();
        assert_eq!(acting.order(200).unwrap() % 2, 0);
        assert!(2 * p.lcm() % acting.order(200).unwrap() == 0);
    }

    #[test]
    fn generator_index_errors() {
        assert!(generator(tag(Family::A, 4), GenKind::S, 4).is_err());
        assert!(generator(tag(Family::A, 4), GenKind::T, 1).is_err());
        assert!(generator(tag(Family::B, 3), GenKind::STilde, 1).is_err());
        assert!(generator(tag(Family::B, 3), GenKind::J, 0).is_err());
        assert!(generator(tag(Family::TwoD, 3), GenKind::T, 5).is_err());
        assert!(generator(tag(Family::TwoD, 3), GenKind::T, 4).is_ok());
    }
}
