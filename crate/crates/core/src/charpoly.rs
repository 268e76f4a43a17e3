//! Characteristic polynomials of the lifts: the closed factored forms per
//! type, the canonical element order m, an independent dense-matrix oracle
//! over Gaussian integers (adjoint representation for twisted A), and the
//! algorithm recovering the partition from a twisted-A polynomial.

use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::gauss::{unit, GaussInt};
use crate::lifts::{twist_matrix, TwistedElement};
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::partition::Partition;
use crate::poly::{FactoredPoly, IntPoly, RootMultiset, Sign};
use crate::tag::{Family, TypeTag};

/// Which representation a characteristic polynomial was computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    Standard,
    StandardTimesJ,
    Adjoint,
}

/// Sign parity of the unit entries accumulated around a cyclic block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyResult {
    /// Closed factored form; absent for oracle outputs, which are computed
    /// directly from a matrix.
    pub factored: Option<FactoredPoly>,
    pub expanded: IntPoly,
    /// Modulus for root-of-unity bookkeeping: the canonical order per type.
    pub m: u64,
    pub rep: Rep,
}

/// Canonical order of the lift per type: 2l or l for the A-type cycle by
/// parity, 2*lcm(parts) for B/D and the twisted types, 4*lcm(parts) for C.
pub fn canonical_m(tag: TypeTag, p: &Partition) -> u64 {
    let lcm = p.lcm();
    match tag.family {
        Family::A => {
            let l = tag.rank as u64;
            if l % 2 == 0 {
                2 * l
            } else {
                l
            }
        }
        Family::B | Family::D | Family::TwoA | Family::TwoD => 2 * lcm,
        Family::C => 4 * lcm,
    }
}

/// Characteristic polynomial of one cyclic block: t^m - 1 when the product
/// of the unit entries around the cycle is +1, t^m + 1 when it is -1.
pub fn cyclic_block_charpoly(m: u64, parity: Parity) -> IntPoly {
    match parity {
        Parity::Even => IntPoly::binomial(m, Sign::Minus),
        Parity::Odd => IntPoly::binomial(m, Sign::Plus),
    }
}

/// The closed factored characteristic polynomial attached to a class.
pub fn formula_charpoly(tag: TypeTag, p: &Partition) -> Result<CharPolyResult> {
    tag.check_admissible(p)?;
    let m = canonical_m(tag, p);
    let parts = p.parts();
    let mut f = FactoredPoly::one();
    let rep = match tag.family {
        Family::A => {
            let l = tag.rank as u64;
            let sign = if l % 2 == 0 { Sign::Plus } else { Sign::Minus };
            f.push(l, sign, 1);
            Rep::Standard
        }
        Family::B => {
            let sign = if p.mu() % 2 == 0 { Sign::Minus } else { Sign::Plus };
            f.push(1, sign, 1);
            for &part in parts {
                f.push(2 * part, Sign::Minus, 1);
            }
            Rep::Standard
        }
        Family::C => {
            for &part in parts {
                f.push(2 * part, Sign::Plus, 1);
            }
            Rep::Standard
        }
        Family::D => {
            for &part in parts {
                f.push(2 * part, Sign::Minus, 1);
            }
            Rep::Standard
        }
        Family::TwoA => {
            // Adjoint polynomial: p(t) * prod (t^{2l_t}-1)^{(l_t-1)/2}
            // * prod_{r<s} (t^{2 lcm}-1)^{gcd}, with p = prod(t^{l_v}+1)/(t+1).
            f.push(1, Sign::Plus, -1);
            for &part in parts {
                f.push(part, Sign::Plus, 1);
                if part > 1 {
                    f.push(2 * part, Sign::Minus, ((part - 1) / 2) as i64);
                }
            }
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    let (a, b) = (parts[i], parts[j]);
                    f.push(2 * a.lcm(&b), Sign::Minus, a.gcd(&b) as i64);
                }
            }
            Rep::Adjoint
        }
        Family::TwoD => {
            for &part in parts {
                f.push(2 * part, Sign::Minus, 1);
            }
            Rep::StandardTimesJ
        }
    };
    let expanded = f.expand()?;
    Ok(CharPolyResult {
        factored: Some(f),
        expanded,
        m,
        rep,
    })
}

/// Converts an ascending Gaussian-integer coefficient vector to an integer
/// polynomial, rejecting any nonzero imaginary part.
fn realize(coeffs: Vec<GaussInt>) -> Result<IntPoly> {
    let mut out = Vec::with_capacity(coeffs.len());
    for (degree, c) in coeffs.into_iter().enumerate() {
        if !c.im.is_zero() {
            return Err(Error::NonRealCoefficient { degree });
        }
        out.push(c.re);
    }
    Ok(IntPoly::from_coeffs(out))
}

/// Matrix of X -> -Ad(n~)(X^T) on gl_l in the elementary basis E(a,b),
/// column-indexed by a*l + b. The operator sends E(a,b) to
/// -u_b * u_a^{-1} * E(r(b), r(a)), one entry per column.
fn adjoint_gl_matrix(n_tilde: &Monomial) -> Matrix<GaussInt> {
    let l = n_tilde.size();
    let r = n_tilde.row_of_col();
    let e = n_tilde.unit_exps();
    let mut m = Matrix::zeros(l * l, l * l);
    for a in 0..l {
        for b in 0..l {
            let exp = (e[b] + 4 - e[a] + 2) % 4;
            *m.at_mut(r[b] * l + r[a], a * l + b) = unit(exp);
        }
    }
    m
}

/// Matrix of the same operator restricted to sl_l in the basis of all
/// off-diagonal E(a,b) followed by H_i = E(i,i) - E(i+1,i+1).
fn adjoint_sl_matrix(n_tilde: &Monomial) -> Matrix<GaussInt> {
    let l = n_tilde.size();
    let r = n_tilde.row_of_col();
    let e = n_tilde.unit_exps();
    let dim = l * l - 1;
    let off_count = l * l - l;
    // Index of E(a,b) among the off-diagonal basis vectors.
    let off_index = |a: usize, b: usize| -> usize {
        let skipped = a * l + b;
        skipped - a - if b > a { 1 } else { 0 }
    };
    let mut m = Matrix::zeros(dim, dim);
    for a in 0..l {
        for b in 0..l {
            if a == b {
                continue;
            }
            let exp = (e[b] + 4 - e[a] + 2) % 4;
            *m.at_mut(off_index(r[b], r[a]), off_index(a, b)) = unit(exp);
        }
    }
    // H_i maps to the diagonal vector with -1 at r(i), +1 at r(i+1); its
    // H-coordinates are the prefix sums of that vector.
    for i in 0..l - 1 {
        let col = off_count + i;
        for k in 0..l - 1 {
            let mut c = 0i64;
            if r[i] <= k {
                c -= 1;
            }
            if r[i + 1] <= k {
                c += 1;
            }
            if c != 0 {
                *m.at_mut(off_count + k, col) = crate::gauss::gauss(c, 0);
            }
        }
    }
    m
}

/// Exact characteristic polynomial computed from the matrix itself:
/// the standard representation for A/B/C/D, the matrix g*J for twisted D,
/// and the adjoint action on trace-zero matrices for twisted A (where the
/// computation is done on both gl and sl and the (t+1) quotient relation
/// between the two is asserted).
pub fn matrix_oracle_charpoly(e: &TwistedElement) -> Result<CharPolyResult> {
    let tag = e.tag();
    let m = canonical_m(tag, &e.partition);
    match tag.family {
        Family::TwoA => {
            let n_tilde = e.acting_matrix();
            let sl = realize(adjoint_sl_matrix(&n_tilde).charpoly())?;
            let gl = realize(adjoint_gl_matrix(&n_tilde).charpoly())?;
            let t_plus_1 = IntPoly::binomial(1, Sign::Plus);
            match gl.div_exact(&t_plus_1) {
                Some(q) if q == sl => {}
                _ => {
                    return Err(Error::MismatchDetected {
                        context: "gl vs (t+1) * sl adjoint polynomials".to_string(),
                        degree: 0,
                    })
                }
            }
            Ok(CharPolyResult {
                factored: None,
                expanded: sl,
                m,
                rep: Rep::Adjoint,
            })
        }
        _ => {
            let acting = e.acting_matrix();
            let expanded = realize(acting.to_dense().charpoly())?;
            let rep = if tag.family == Family::TwoD {
                Rep::StandardTimesJ
            } else {
                Rep::Standard
            };
            Ok(CharPolyResult {
                factored: None,
                expanded,
                m,
                rep,
            })
        }
    }
}

fn root_multiset(q: &CharPolyResult) -> Result<RootMultiset> {
    match &q.factored {
        Some(f) => f.roots_mod(q.m),
        None => RootMultiset::from_poly(&q.expanded, q.m),
    }
}

/// Removes one copy of every exponent multiple of step (a full cyclic
/// subgroup) from the multiset; `true` only if all were present.
fn remove_subgroup(roots: &mut RootMultiset, step: u64, count: u64) -> bool {
    for j in 0..count {
        if !roots.remove_one(j * step % roots.modulus()) {
            return false;
        }
    }
    true
}

/// All exponents present as multiples of step with step*odd pattern:
/// removes the h roots of t^h + 1, namely exponents step * (2j+1).
fn remove_odd_coset(roots: &mut RootMultiset, step: u64, h: u64) -> bool {
    for j in 0..h {
        if !roots.remove_one(step * (2 * j + 1) % roots.modulus()) {
            return false;
        }
    }
    true
}

/// Recovers the partition from a twisted-A adjoint characteristic
/// polynomial: repeatedly strip the largest full cyclic root subgroup of
/// order 2h (h odd), leaving the l-1 roots of p(t) = prod(t^{l_v}+1)/(t+1);
/// then read the parts off p greedily by largest order. Returns p in
/// factored form together with the partition.
pub fn recover_p(q: &CharPolyResult) -> Result<(FactoredPoly, Partition)> {
    let degree = q.expanded.degree().unwrap_or(0) as u64;
    // Adjoint degree is l^2 - 1.
    let l = (1..=degree + 1).find(|&l| l * l == degree + 1).ok_or(Error::RecoveryStuck {
        remaining: degree as usize,
        expected: 0,
    })?;
    let m = q.m;
    let mut roots = root_multiset(q)?;

    // Candidate orders: odd h with 2h dividing the modulus, largest first.
    let mut odd_h: Vec<u64> =
        (1..=m / 2).filter(|h| h % 2 == 1 && m % (2 * h) == 0).collect();
    odd_h.sort_unstable_by(|a, b| b.cmp(a));

    // Phase 1: peel factors t^{2h} - 1. Any such factor contributes the
    // root 1, so we are done exactly when exponent 0 is exhausted.
    'peel: while roots.count(0) > 0 {
        for &h in &odd_h {
            let step = m / (2 * h);
            let all_present = (0..2 * h).all(|j| roots.count(j * step % m) > 0);
            if all_present {
                let removed = remove_subgroup(&mut roots, step, 2 * h);
                debug_assert!(removed);
                continue 'peel;
            }
        }
        return Err(Error::RecoveryStuck {
            remaining: roots.total() as usize,
            expected: l as usize - 1,
        });
    }
    if roots.total() != l - 1 {
        return Err(Error::RecoveryStuck {
            remaining: roots.total() as usize,
            expected: l as usize - 1,
        });
    }

    // Phase 2: multiply back by (t+1) and strip factors t^h + 1 by
    // decreasing h; each removal is one part.
    roots.insert(m / 2, 1);
    let mut parts = Vec::new();
    'read: while roots.total() > 0 {
        for &h in &odd_h {
            let step = m / (2 * h);
            let all_present = (0..h).all(|j| roots.count(step * (2 * j + 1) % m) > 0);
            if all_present {
                let removed = remove_odd_coset(&mut roots, step, h);
                debug_assert!(removed);
                parts.push(h);
                continue 'read;
            }
        }
        return Err(Error::RecoveryStuck {
            remaining: roots.total() as usize,
            expected: 0,
        });
    }
    if parts.iter().sum::<u64>() != l {
        return Err(Error::RecoveryStuck {
            remaining: 0,
            expected: l as usize,
        });
    }
    let mut f = FactoredPoly::one();
    f.push(1, Sign::Plus, -1);
    for &part in &parts {
        f.push(part, Sign::Plus, 1);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok((f, Partition::new(parts)?))
}

/// Parity of l = |p| selecting which of the two twisted-A diagonal layouts
/// (and sign conventions for the fold) applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllParity {
    EvenEll,
    OddEll,
}

/// The diagonal element realizing a twisted-A sigma list, in the per-part
/// arrangement the block decomposition expects: entry i is zeta^exps[i] for
/// zeta a primitive `modulus`-th root of unity (modulus = 2m, zeta^2 = xi),
/// the exponents are antisymmetric under index reversal, and every index is
/// classified into a row list and a column list per part (the two lists
/// differ only at their middle entries).
struct SigmaDiagonal {
    modulus: u64,
    exps: Vec<i64>,
    row_part: Vec<usize>,
    col_part: Vec<usize>,
}

impl SigmaDiagonal {
    /// Formal scalar (negate, zeta-exponent) through which Ad(d) theta maps
    /// E(i, j) onto E(l-1-j, l-1-i). The fold contributes +1 exactly when i
    /// and j straddle the middle of an even-length diagonal.
    fn coef(&self, i: usize, j: usize) -> (bool, i64) {
        let l = self.exps.len();
        let n = l / 2;
        let positive = l % 2 == 0 && ((i < n) != (j < n));
        (!positive, self.exps[i] - self.exps[j])
    }
}

fn classify(table: &mut [usize], idx: usize, v: usize) {
    assert_eq!(table[idx], usize::MAX, "index {idx} classified twice");
    table[idx] = v;
}

fn sigma_diagonal(tag: TypeTag, p: &Partition) -> Result<SigmaDiagonal> {
    let sigma = crate::kac::sigma_list(tag, p)?;
    let m = sigma.m;
    let l = tag.rank;
    let n = l / 2;
    let parts = p.parts();
    let mu = parts.len();
    let even = l % 2 == 0;
    let half = |v: usize| ((parts[v] - 1) / 2) as usize;
    // Parts are laid out smallest first, so the wing of part v starts after
    // the combined wings of all smaller parts.
    let wing_start = |v: usize| -> usize { (v + 1..mu).map(half).sum() };

    let mut exps = vec![0i64; l];
    let mut row_part = vec![usize::MAX; l];
    let mut col_part = vec![usize::MAX; l];
    for v in 0..mu {
        let part = parts[v] as i64;
        let step = (m / (2 * parts[v])) as i64;
        for k in 0..half(v) {
            let idx = wing_start(v) + k;
            // Wing exponents descend within the part; stored as zeta-powers,
            // so the half-integer xi-exponents of the even case double away.
            let e = if even {
                (part - 2 * (k as i64 + 1)) * step
            } else {
                2 * (half(v) as i64 - k as i64) * step
            };
            exps[idx] = e;
            exps[l - 1 - idx] = -e;
            classify(&mut row_part, idx, v);
            classify(&mut col_part, idx, v);
            classify(&mut row_part, l - 1 - idx, v);
            classify(&mut col_part, l - 1 - idx, v);
        }
        if even {
            classify(&mut row_part, n + mu / 2 - v - 1, v);
            classify(&mut col_part, n - mu / 2 + v, v);
        } else {
            classify(&mut row_part, n + (mu - 1) / 2 - v, v);
            classify(&mut col_part, n - (mu - 1) / 2 + v, v);
        }
    }
    if even {
        for i in n - mu / 2..n {
            exps[i] = (m / 2) as i64;
            exps[l - 1 - i] = -((m / 2) as i64);
        }
    }
    assert!(row_part.iter().chain(&col_part).all(|&v| v < mu));
    assert!((0..l).all(|i| exps[l - 1 - i] == -exps[i]));
    // The first-half entry exponents realize exactly the sigma list.
    let mut absolutes: Vec<u64> = (0..n).map(|i| exps[i].unsigned_abs()).collect();
    absolutes.sort_unstable_by(|a, b| b.cmp(a));
    let want: Vec<u64> = if even {
        sigma.values.clone()
    } else {
        sigma.values.iter().map(|&s| 2 * s).collect()
    };
    assert_eq!(absolutes, want, "diagonal exponents must realize the sigma list");
    Ok(SigmaDiagonal { modulus: 2 * m, exps, row_part, col_part })
}

/// Multiplies an ascending cyclotomic coefficient vector by (t^deg - c).
fn cyc_mul_binomial(poly: &mut Vec<CycInt>, deg: usize, c: &CycInt) {
    let old = std::mem::take(poly);
    let mut out = vec![CycInt::zero(); old.len() + deg];
    for (k, pk) in old.iter().enumerate() {
        if pk.is_zero() {
            continue;
        }
        out[k + deg] = out[k + deg].clone() + pk.clone();
        out[k] = out[k].clone() - c.clone() * pk.clone();
    }
    *poly = out;
}

/// Checks an ascending cyclotomic coefficient vector against an integer
/// polynomial, reporting the first differing degree.
fn ensure_cyc_matches_int(cyc: &[CycInt], want: &IntPoly, context: &str) -> Result<()> {
    let len = cyc.len().max(want.degree().map_or(0, |d| d + 1));
    for k in 0..len {
        let got = cyc.get(k).cloned().unwrap_or_else(CycInt::zero);
        if got.to_int().is_none_or(|g| g != want.coeff(k)) {
            return Err(Error::MismatchDetected { context: context.to_string(), degree: k });
        }
    }
    Ok(())
}

fn ensure_int_polys_equal(got: &IntPoly, want: &IntPoly, context: &str) -> Result<()> {
    if got == want {
        return Ok(());
    }
    let hi = got.degree().unwrap_or(0).max(want.degree().unwrap_or(0));
    let degree = (0..=hi).find(|&k| got.coeff(k) != want.coeff(k)).unwrap_or(hi);
    Err(Error::MismatchDetected { context: context.to_string(), degree })
}

/// Characteristic polynomial on sl_l assembled block by block: antidiagonal
/// eigenvectors, mirrored diagonal pairs, same-part wedges, and cross-part
/// wedges. Each block is checked against its closed form before the product
/// is taken and the (t+1) quotient extracted.
fn block_route_charpoly(diag: &SigmaDiagonal, p: &Partition) -> Result<IntPoly> {
    let l = diag.exps.len();
    let n = l / 2;
    let parts = p.parts();
    let mu = parts.len();
    let md = diag.modulus;
    // Diagonal pairs outside the central band; the band's own diagonal
    // orbits are wedge representatives classified into cross-part blocks.
    let wd = n - if l % 2 == 0 { mu / 2 } else { (mu - 1) / 2 };

    // t^2-coefficient of the mirror orbit through E(i,j): the product of the
    // scalar on E(i,j) and the scalar on its partner E(l-1-j, l-1-i).
    let orbit_factor = |i: usize, j: usize| -> CycInt {
        let a = diag.coef(i, j);
        let b = diag.coef(l - 1 - j, l - 1 - i);
        CycInt::signed_root(md, a.0 != b.0, a.1 + b.1)
    };

    let mut u_a = vec![CycInt::one()];
    for i in 0..l {
        let (neg, e) = diag.coef(i, l - 1 - i);
        cyc_mul_binomial(&mut u_a, 1, &CycInt::signed_root(md, neg, e));
    }
    let mut want_a = IntPoly::one();
    for &part in parts {
        want_a = want_a.mul(&IntPoly::binomial(part, Sign::Plus));
    }
    ensure_cyc_matches_int(&u_a, &want_a, "antidiagonal block")?;

    let mut u_d = vec![CycInt::one()];
    let mut want_d = IntPoly::one();
    for i in 0..wd {
        cyc_mul_binomial(&mut u_d, 2, &orbit_factor(i, i));
        want_d = want_d.mul(&IntPoly::binomial(2, Sign::Minus));
    }
    ensure_cyc_matches_int(&u_d, &want_d, "diagonal-pair block")?;

    // Wedge representatives, one per remaining mirror orbit (1-based wedge
    // bounds, stored 0-based).
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=l - i {
            reps.push((i - 1, j - 1));
        }
    }
    for j in 1..=n {
        for i in j + 1..=l - j {
            reps.push((i - 1, j - 1));
        }
    }
    for i in wd + 1..=n {
        reps.push((i - 1, i - 1));
    }
    assert_eq!(l + 2 * wd + 2 * reps.len(), l * l, "orbit accounting");

    let mut same: Vec<Vec<CycInt>> = vec![vec![CycInt::one()]; mu];
    let mut cross: BTreeMap<(usize, usize), Vec<CycInt>> = BTreeMap::new();
    for &(i, j) in &reps {
        let (rp, cp) = (diag.row_part[i], diag.col_part[j]);
        let c = orbit_factor(i, j);
        if rp == cp {
            cyc_mul_binomial(&mut same[rp], 2, &c);
        } else {
            let acc = cross
                .entry((rp.min(cp), rp.max(cp)))
                .or_insert_with(|| vec![CycInt::one()]);
            cyc_mul_binomial(acc, 2, &c);
        }
    }

    let mut gl = want_a.mul(&want_d);
    for (v, acc) in same.iter().enumerate() {
        let part = parts[v] as usize;
        // ((t^{2 part} - 1)/(t^2 - 1))^{(part-1)/2} as an even geometric sum.
        let mut base = vec![0i64; 2 * part - 1];
        for k in (0..base.len()).step_by(2) {
            base[k] = 1;
        }
        let base = IntPoly::from_i64(&base);
        let mut want = IntPoly::one();
        for _ in 0..(part - 1) / 2 {
            want = want.mul(&base);
        }
        ensure_cyc_matches_int(acc, &want, &format!("same-part wedge block {v}"))?;
        gl = gl.mul(&want);
    }
    for a in 0..mu {
        for b in a + 1..mu {
            let acc = cross.remove(&(a, b)).unwrap_or_else(|| vec![CycInt::one()]);
            let (la, lb) = (parts[a], parts[b]);
            let mut want = IntPoly::one();
            for _ in 0..la.gcd(&lb) {
                want = want.mul(&IntPoly::binomial(2 * la.lcm(&lb), Sign::Minus));
            }
            ensure_cyc_matches_int(&acc, &want, &format!("cross-part wedge block {a},{b}"))?;
            gl = gl.mul(&want);
        }
    }
    assert!(cross.is_empty(), "wedge block outside the part range");

    gl.div_exact(&IntPoly::binomial(1, Sign::Plus)).ok_or(Error::MismatchDetected {
        context: "gl block product vs (t+1) quotient".to_string(),
        degree: 0,
    })
}

/// The same operator evaluated blindly: d*J as a monomial matrix with
/// cyclotomic units, the adjoint action written out on the trace-zero basis
/// and on all of gl, the characteristic polynomials taken by the
/// division-free recurrence, and the (t+1) quotient relation asserted.
fn dense_route_charpoly(diag: &SigmaDiagonal, tag: TypeTag) -> Result<IntPoly> {
    let l = diag.exps.len();
    let md = diag.modulus;
    let j_mat = twist_matrix(tag)?;
    let r = j_mat.row_of_col().to_vec();
    // Units of d*J as zeta-exponents: J contributes powers of i = zeta^(md/4).
    let quarter = (md / 4) as i64;
    let w: Vec<i64> = (0..l)
        .map(|j| quarter * j_mat.unit_exps()[j] as i64 + diag.exps[r[j]])
        .collect();
    let gl = realize_cyc(adjoint_gl_cyc(&r, &w, md).charpoly())?;
    let sl = realize_cyc(adjoint_sl_cyc(&r, &w, md).charpoly())?;
    match gl.div_exact(&IntPoly::binomial(1, Sign::Plus)) {
        Some(q) if q == sl => Ok(sl),
        _ => Err(Error::MismatchDetected {
            context: "dense gl vs (t+1) * sl adjoint polynomials".to_string(),
            degree: 0,
        }),
    }
}

/// Cyclotomic-unit counterpart of `adjoint_gl_matrix` for g e_j = zeta^{w_j} e_{r_j}.
fn adjoint_gl_cyc(r: &[usize], w: &[i64], modulus: u64) -> Matrix<CycInt> {
    let l = r.len();
    let mut m = Matrix::zeros(l * l, l * l);
    for a in 0..l {
        for b in 0..l {
            *m.at_mut(r[b] * l + r[a], a * l + b) =
                CycInt::signed_root(modulus, true, w[b] - w[a]);
        }
    }
    m
}

/// Cyclotomic-unit counterpart of `adjoint_sl_matrix`.
fn adjoint_sl_cyc(r: &[usize], w: &[i64], modulus: u64) -> Matrix<CycInt> {
    let l = r.len();
    let dim = l * l - 1;
    let off_count = l * l - l;
    let off_index = |a: usize, b: usize| -> usize {
        let skipped = a * l + b;
        skipped - a - if b > a { 1 } else { 0 }
    };
    let mut m = Matrix::zeros(dim, dim);
    for a in 0..l {
        for b in 0..l {
            if a == b {
                continue;
            }
            *m.at_mut(off_index(r[b], r[a]), off_index(a, b)) =
                CycInt::signed_root(modulus, true, w[b] - w[a]);
        }
    }
    for i in 0..l - 1 {
        let col = off_count + i;
        for k in 0..l - 1 {
            let mut c = 0i64;
            if r[i] <= k {
                c -= 1;
            }
            if r[i + 1] <= k {
                c += 1;
            }
            if c != 0 {
                *m.at_mut(off_count + k, col) = CycInt::integer(c);
            }
        }
    }
    m
}

/// Converts ascending cyclotomic coefficients to an integer polynomial,
/// rejecting anything outside Z.
fn realize_cyc(coeffs: Vec<CycInt>) -> Result<IntPoly> {
    let mut out = Vec::with_capacity(coeffs.len());
    for (degree, c) in coeffs.into_iter().enumerate() {
        match c.to_int() {
            Some(v) => out.push(v),
            None => return Err(Error::NonRealCoefficient { degree }),
        }
    }
    Ok(IntPoly::from_coeffs(out))
}

/// Consistency check for a twisted-A sigma list: builds the diagonal element
/// whose entry exponents realize the sigma list, applies Ad(d) theta to sl_l
/// both block by block and through the dense adjoint matrices, and demands
/// that both routes reproduce the closed-form adjoint polynomial.
pub fn twoa_sigma_charpoly_check(p: &Partition, variant: EllParity) -> Result<bool> {
    let l = p.total() as usize;
    let tag = TypeTag::new(Family::TwoA, l)?;
    tag.check_admissible(p)?;
    let expected = if l % 2 == 0 { EllParity::EvenEll } else { EllParity::OddEll };
    if variant != expected {
        return Err(Error::InadmissiblePartition {
            tag: tag.to_string(),
            partition: p.to_string(),
            reason: format!("variant {variant:?} does not match the parity of l = {l}"),
        });
    }
    let formula = formula_charpoly(tag, p)?.expanded;
    let diag = sigma_diagonal(tag, p)?;
    let blocks = block_route_charpoly(&diag, p)?;
    ensure_int_polys_equal(&blocks, &formula, "block decomposition vs closed formula")?;
    let dense = dense_route_charpoly(&diag, tag)?;
    ensure_int_polys_equal(&dense, &formula, "dense adjoint oracle vs closed formula")?;
    Ok(true)
}
