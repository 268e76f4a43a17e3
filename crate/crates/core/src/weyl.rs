//! Brute-force engine for the classical Weyl groups: signed permutations,
//! (twisted) conjugacy classes, ellipticity by parabolic avoidance and by
//! fixed spaces, and regularity checks against the closed partition forms.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lifts::{apply_theta, lift};
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::partition::Partition;
use crate::tag::{Family, TypeTag};

/// Largest tag rank accepted by the enumerative routines.
pub const RANK_CAP: usize = 6;

/// Number of coordinates the group permutes; the ambient group of 2D_l is
/// D_{l+1}, every other family matches the tag rank.
fn coords(tag: TypeTag) -> usize {
    match tag.family {
        Family::TwoD => tag.rank + 1,
        _ => tag.rank,
    }
}

fn check_cap(tag: TypeTag) -> Result<()> {
    if tag.rank > RANK_CAP {
        return Err(Error::RankCapExceeded {
            rank: tag.rank,
            cap: RANK_CAP,
        });
    }
    Ok(())
}

/// A Weyl group element in its signed-permutation realization: coordinate k
/// maps to sign(k) * e_{perm(k)}. Families A and 2A carry no signs; D and
/// the ambient group of 2D flip an even number of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<bool>,
    tag: TypeTag,
}

impl SignedPermutation {
    pub fn new(tag: TypeTag, perm: Vec<usize>, flips: Vec<bool>) -> Self {
        let n = coords(tag);
        assert_eq!(perm.len(), n);
        assert_eq!(flips.len(), n);
        let mut seen = vec![false; n];
        for &to in &perm {
            assert!(to < n && !seen[to], "not a permutation");
            seen[to] = true;
        }
        match tag.family {
            Family::A | Family::TwoA => {
                assert!(flips.iter().all(|&f| !f), "type A carries no signs")
            }
            Family::D | Family::TwoD => {
                assert!(
                    flips.iter().filter(|&&f| f).count() % 2 == 0,
                    "type D flips an even number of signs"
                )
            }
            Family::B | Family::C => {}
        }
        SignedPermutation { perm, flips, tag }
    }

    pub fn identity(tag: TypeTag) -> Self {
        let n = coords(tag);
        SignedPermutation::new(tag, (0..n).collect(), vec![false; n])
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> Vec<i64> {
        self.flips.iter().map(|&f| if f { -1 } else { 1 }).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &to)| k == to) && self.flips.iter().all(|&f| !f)
    }

    /// Product acting as `self` after `other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.tag, other.tag);
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for k in 0..n {
            perm[k] = self.perm[other.perm[k]];
            flips[k] = other.flips[k] ^ self.flips[other.perm[k]];
        }
        SignedPermutation {
            perm,
            flips,
            tag: self.tag,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for k in 0..n {
            perm[self.perm[k]] = k;
            flips[self.perm[k]] = self.flips[k];
        }
        SignedPermutation {
            perm,
            flips,
            tag: self.tag,
        }
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let mut o = 1;
        while !p.is_identity() {
            p = p.mul(self);
            o += 1;
        }
        o
    }
}

/// A (theta-)conjugacy class, carried by its minimal representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: SignedPermutation,
    pub size: u64,
    pub elliptic: bool,
    pub twisted: bool,
}

/// The simple reflections of the ambient untwisted group, in diagram order.
fn simple_reflections(tag: TypeTag) -> Vec<SignedPermutation> {
    let n = coords(tag);
    let swap = |a: usize, b: usize, flip: bool| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(a, b);
        let mut flips = vec![false; n];
        if flip {
            flips[a] = true;
            flips[b] = true;
        }
        SignedPermutation::new(tag, perm, flips)
    };
    let mut gens: Vec<SignedPermutation> = (0..n - 1).map(|k| swap(k, k + 1, false)).collect();
    match tag.family {
        Family::A | Family::TwoA => {}
        Family::B | Family::C => {
            let mut flips = vec![false; n];
            flips[n - 1] = true;
            gens.push(SignedPermutation::new(tag, (0..n).collect(), flips));
        }
        Family::D | Family::TwoD => gens.push(swap(n - 2, n - 1, true)),
    }
    gens
}

/// Monomial realization of w in the standard module, with trivial torus
/// part: coordinate k sits in the column pair (k, N-1-k) and a sign flip
/// crosses the pair. Used only at the Weyl-group level.
fn embed(w: &SignedPermutation) -> Monomial {
    let n = coords(w.tag);
    let nn = w.tag.matrix_size();
    if nn == n {
        return Monomial::from_parts(w.perm.clone(), vec![0; n]);
    }
    let mut row = vec![usize::MAX; nn];
    for k in 0..n {
        let to = w.perm[k];
        if w.flips[k] {
            row[k] = nn - 1 - to;
            row[nn - 1 - k] = to;
        } else {
            row[k] = to;
            row[nn - 1 - k] = nn - 1 - to;
        }
    }
    if nn == 2 * n + 1 {
        row[n] = n;
    }
    Monomial::from_parts(row, vec![0; nn])
}

/// The signed permutation underlying a monomial matrix in the realization
/// of `tag`: unit entries are forgotten, only the coordinate pairing
/// survives (the image in N(A)/A).
pub fn weyl_image(tag: TypeTag, m: &Monomial) -> SignedPermutation {
    let n = coords(tag);
    let nn = tag.matrix_size();
    assert_eq!(m.size(), nn);
    let r = m.row_of_col();
    if nn == n {
        return SignedPermutation::new(tag, r.to_vec(), vec![false; n]);
    }
    if nn == 2 * n + 1 {
        assert_eq!(r[n], n, "monomial must fix the middle coordinate");
    }
    let mut perm = vec![0; n];
    let mut flips = vec![false; n];
    for k in 0..n {
        let to = r[k];
        if to < n {
            perm[k] = to;
        } else {
            assert!(to >= nn - n, "monomial must respect the coordinate pairing");
            perm[k] = nn - 1 - to;
            flips[k] = true;
        }
    }
    SignedPermutation::new(tag, perm, flips)
}

/// Theta acting on the Weyl group, computed by applying the pinned
/// involution to the monomial realization and reading the image back.
fn theta_on_w(w: &SignedPermutation) -> Result<SignedPermutation> {
    if !w.tag.family.is_twisted() {
        return Ok(w.clone());
    }
    Ok(weyl_image(w.tag, &apply_theta(w.tag, &embed(w))?))
}

/// Every element of the Weyl group of `tag`, sorted and without repeats.
pub fn enumerate_group(tag: TypeTag) -> Result<Vec<SignedPermutation>> {
    check_cap(tag)?;
    let n = coords(tag);
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    build_perms(n, &mut cur, &mut used, &mut perms);
    let sign_vectors: Vec<Vec<bool>> = match tag.family {
        Family::A | Family::TwoA => vec![vec![false; n]],
        Family::B | Family::C => (0u32..1 << n)
            .map(|mask| (0..n).map(|k| mask >> k & 1 == 1).collect())
            .collect(),
        Family::D | Family::TwoD => (0u32..1 << n)
            .filter(|mask| mask.count_ones() % 2 == 0)
            .map(|mask| (0..n).map(|k| mask >> k & 1 == 1).collect())
            .collect(),
    };
    let mut out = Vec::with_capacity(perms.len() * sign_vectors.len());
    for perm in &perms {
        for flips in &sign_vectors {
            out.push(SignedPermutation::new(tag, perm.clone(), flips.clone()));
        }
    }
    out.sort();
    out.dedup();
    assert_eq!(out.len(), perms.len() * sign_vectors.len());
    Ok(out)
}

fn build_perms(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for k in 0..n {
        if !used[k] {
            used[k] = true;
            cur.push(k);
            build_perms(n, cur, used, out);
            cur.pop();
            used[k] = false;
        }
    }
}

/// The full class decomposition of one group, cached per (tag, twisted).
struct ClassTable {
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjClass>,
}

static TABLES: OnceLock<Mutex<HashMap<(TypeTag, bool), Arc<ClassTable>>>> = OnceLock::new();

fn class_table(tag: TypeTag, twisted: bool) -> Result<Arc<ClassTable>> {
    assert!(
        !twisted || tag.family.is_twisted(),
        "twisted classes need a twisted tag"
    );
    check_cap(tag)?;
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(tag, twisted)) {
        return Ok(t.clone());
    }
    let table = Arc::new(build_class_table(tag, twisted)?);
    Ok(cache
        .lock()
        .unwrap()
        .entry((tag, twisted))
        .or_insert(table)
        .clone())
}

fn build_class_table(tag: TypeTag, twisted: bool) -> Result<ClassTable> {
    let elements = enumerate_group(tag)?;
    let index: HashMap<SignedPermutation, usize> =
        elements.iter().cloned().zip(0..).collect();
    let gens = simple_reflections(tag);
    let twisted_gens: Vec<SignedPermutation> = if twisted {
        gens.iter().map(theta_on_w).collect::<Result<_>>()?
    } else {
        gens.clone()
    };
    let twisted_gens_inv: Vec<SignedPermutation> =
        twisted_gens.iter().map(|g| g.inverse()).collect();

    // Orbits of x -> g x theta(g)^{-1}; seeds are taken in increasing order,
    // so each class representative is its minimal member.
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for seed in 0..elements.len() {
        if class_of[seed] != usize::MAX {
            continue;
        }
        let cid = members.len();
        let mut orbit = vec![seed];
        let mut stack = vec![seed];
        class_of[seed] = cid;
        while let Some(i) = stack.pop() {
            for (g, ginv) in gens.iter().zip(&twisted_gens_inv) {
                let y = g.mul(&elements[i]).mul(ginv);
                let j = index[&y];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    orbit.push(j);
                    stack.push(j);
                }
            }
        }
        members.push(orbit);
    }

    let in_parabolic = proper_parabolic_marks(&elements, &index, &gens, &twisted_gens);
    let order = elements.len() as u64;
    let classes: Vec<ConjClass> = members
        .iter()
        .map(|orbit| {
            let size = orbit.len() as u64;
            assert_eq!(order % size, 0, "class size divides the group order");
            ConjClass {
                representative: elements[orbit[0]].clone(),
                size,
                elliptic: orbit.iter().all(|&i| !in_parabolic[i]),
                twisted,
            }
        })
        .collect();
    assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), order);
    Ok(ClassTable {
        elements,
        index,
        class_of,
        classes,
    })
}

/// Marks every element lying in W_theta for some theta-stable proper subset
/// theta of the simple reflections (all such subsets, each parabolic closed
/// by breadth-first multiplication).
fn proper_parabolic_marks(
    elements: &[SignedPermutation],
    index: &HashMap<SignedPermutation, usize>,
    gens: &[SignedPermutation],
    twisted_gens: &[SignedPermutation],
) -> Vec<bool> {
    let theta_idx: Vec<usize> = twisted_gens
        .iter()
        .map(|t| {
            gens.iter()
                .position(|g| g == t)
                .expect("theta permutes the simple reflections")
        })
        .collect();
    let mut orbit_of = vec![usize::MAX; gens.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..gens.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut orbit = vec![i];
        if theta_idx[i] != i {
            orbit.push(theta_idx[i]);
        }
        for &k in &orbit {
            orbit_of[k] = orbits.len();
        }
        orbits.push(orbit);
    }

    let id = index[&elements
        .iter()
        .find(|e| e.is_identity())
        .expect("group contains the identity")
        .clone()];
    let mut marked = vec![false; elements.len()];
    let full: u32 = (1 << orbits.len()) - 1;
    for mask in 0..full {
        let theta: Vec<usize> = orbits
            .iter()
            .enumerate()
            .filter(|(o, _)| mask >> o & 1 == 1)
            .flat_map(|(_, orbit)| orbit.iter().copied())
            .collect();
        let mut seen = HashSet::from([id]);
        let mut stack = vec![id];
        marked[id] = true;
        while let Some(i) = stack.pop() {
            for &g in &theta {
                let j = index[&gens[g].mul(&elements[i])];
                if seen.insert(j) {
                    marked[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    marked
}

/// All theta-conjugacy classes of the Weyl group of `tag` (ordinary
/// conjugacy classes for the untwisted families), sorted by representative.
pub fn twisted_conjugacy_classes(tag: TypeTag) -> Result<Vec<ConjClass>> {
    Ok(class_table(tag, tag.family.is_twisted())?.classes.clone())
}

/// Whether the (theta-)class of w avoids W_theta for every theta-stable
/// proper subset theta of the simple reflections.
pub fn is_elliptic(w: &SignedPermutation, twisted: bool) -> Result<bool> {
    let table = class_table(w.tag, twisted)?;
    let i = *table.index.get(w).expect("element belongs to the group");
    Ok(table.classes[table.class_of[i]].elliptic)
}

/// Both ellipticity criteria for w: parabolic avoidance, and triviality of
/// the fixed space of w (times theta) on the reflection representation.
pub fn ellipticity_predicates(w: &SignedPermutation, twisted: bool) -> Result<(bool, bool)> {
    Ok((is_elliptic(w, twisted)?, fixed_space_trivial(w, twisted)))
}

/// The signed action of w, composed with theta when asked, on the
/// coordinate space: coordinate k maps to signs[k] * e_{perm[k]}.
fn signed_action(w: &SignedPermutation, twisted: bool) -> (Vec<usize>, Vec<i64>) {
    let n = coords(w.tag);
    let (theta_perm, theta_signs): (Vec<usize>, Vec<i64>) = match (twisted, w.tag.family) {
        (false, _) => ((0..n).collect(), vec![1; n]),
        (true, Family::TwoA) => ((0..n).rev().collect(), vec![-1; n]),
        (true, Family::TwoD) => ((0..n).collect(), {
            let mut s = vec![1; n];
            s[n - 1] = -1;
            s
        }),
        (true, _) => panic!("twisted action needs a twisted tag"),
    };
    let mut perm = vec![0; n];
    let mut signs = vec![0i64; n];
    for k in 0..n {
        let mid = theta_perm[k];
        perm[k] = w.perm[mid];
        signs[k] = theta_signs[k] * if w.flips[mid] { -1 } else { 1 };
    }
    (perm, signs)
}

/// Matrix of w (times theta) on the reflection representation: the full
/// coordinate space for the signed families, the sum-zero hyperplane in the
/// simple-root basis for A and 2A.
fn reflection_matrix(w: &SignedPermutation, twisted: bool) -> Matrix<BigInt> {
    let n = coords(w.tag);
    let (perm, signs) = signed_action(w, twisted);
    match w.tag.family {
        Family::A | Family::TwoA => {
            let d = n - 1;
            let mut m = Matrix::zeros(d, d);
            for j in 0..d {
                let mut u = vec![0i64; n];
                u[perm[j]] += signs[j];
                u[perm[j + 1]] -= signs[j + 1];
                let mut acc = 0;
                for k in 0..d {
                    acc += u[k];
                    *m.at_mut(k, j) = BigInt::from(acc);
                }
                debug_assert_eq!(acc + u[n - 1], 0);
            }
            m
        }
        _ => {
            let mut m = Matrix::zeros(n, n);
            for k in 0..n {
                *m.at_mut(perm[k], k) = BigInt::from(signs[k]);
            }
            m
        }
    }
}

/// det(1 - w theta) != 0 on the reflection representation.
fn fixed_space_trivial(w: &SignedPermutation, twisted: bool) -> bool {
    // det(t - M) at t = 1 is the coefficient sum of the characteristic
    // polynomial.
    let det: BigInt = reflection_matrix(w, twisted).charpoly().into_iter().sum();
    !det.is_zero()
}

/// The Weyl-group class of the standard lift attached to `p`, found by
/// forgetting the torus part of the lift matrix; errs unless elliptic.
pub fn class_of_lift(tag: TypeTag, p: &Partition) -> Result<ConjClass> {
    check_cap(tag)?;
    let e = lift(tag, p)?;
    let w = weyl_image(tag, &e.matrix.mat);
    let table = class_table(tag, e.twisted)?;
    let i = *table
        .index
        .get(&w)
        .expect("lift image lies in the enumerated group");
    let class = table.classes[table.class_of[i]].clone();
    if !class.elliptic {
        return Err(Error::NotElliptic {
            tag: tag.to_string(),
            partition: p.to_string(),
        });
    }
    Ok(class)
}

/// Outcome of the power-map conjugacy sweep; Weyl groups are rational, so
/// `counterexample` should stay empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityReport {
    pub rational: bool,
    pub counterexample: Option<(SignedPermutation, u64)>,
}

/// Checks that w^j is conjugate to w for every w and every j coprime to the
/// order of w, reporting the first failure.
pub fn check_rationality(tag: TypeTag) -> Result<RationalityReport> {
    let table = class_table(tag, false)?;
    for (i, w) in table.elements.iter().enumerate() {
        let o = w.order();
        let mut power = w.clone();
        for j in 2..o {
            power = power.mul(w);
            if o.gcd(&j) == 1 && table.class_of[table.index[&power]] != table.class_of[i] {
                return Ok(RationalityReport {
                    rational: false,
                    counterexample: Some((w.clone(), j)),
                });
            }
        }
    }
    Ok(RationalityReport {
        rational: true,
        counterexample: None,
    })
}

/// Closed-form test for regularity of the elliptic class attached to an
/// admissible partition: all parts equal for B and C; for D, 2A and 2D
/// either all parts equal or all equal with a trailing 1, with the parity
/// and divisibility side conditions listed per family below.
pub fn is_regular_elliptic_partition(tag: TypeTag, p: &Partition) -> Result<bool> {
    tag.check_admissible(p)?;
    let parts = p.parts();
    let mu = parts.len();
    let head = parts[0];
    let all_equal = parts.iter().all(|&x| x == head);
    let tail_one = mu >= 2 && parts[mu - 1] == 1 && parts[..mu - 1].iter().all(|&x| x == head);
    let l = tag.rank as u64;
    Ok(match tag.family {
        // The single admissible partition (l) is the Coxeter class.
        Family::A => true,
        Family::B | Family::C => all_equal && l % head == 0,
        Family::D => {
            (all_equal && l % head == 0 && (l / head) % 2 == 0)
                || (tail_one && (l - 1) % head == 0 && ((l - 1) / head) % 2 == 1)
        }
        Family::TwoA => {
            (tail_one && head % 2 == 1 && (l - 1) % head == 0)
                || (all_equal && head % 2 == 1 && l % head == 0)
        }
        Family::TwoD => {
            (all_equal && (l + 1) % head == 0 && ((l + 1) / head) % 2 == 1)
                || (tail_one && l % head == 0 && (l / head) % 2 == 0)
        }
    })
}

/// Direct regularity check on a Weyl-group element: the cyclic group
/// generated by w (times theta) must act freely on the ambient root system
/// and have trivial fixed space.
pub fn regular_elliptic_brute(w: &SignedPermutation, twisted: bool) -> bool {
    let n = coords(w.tag);
    let step = signed_action(w, twisted);
    let roots = ambient_roots(w.tag);
    let apply = |p: &(Vec<usize>, Vec<i64>), v: &[i64]| {
        let mut u = vec![0i64; n];
        for k in 0..n {
            u[p.0[k]] += p.1[k] * v[k];
        }
        u
    };
    let identity = ((0..n).collect::<Vec<usize>>(), vec![1i64; n]);
    let mut cur = step.clone();
    while cur != identity {
        if roots.iter().any(|r| apply(&cur, r) == *r) {
            return false;
        }
        let perm: Vec<usize> = (0..n).map(|k| step.0[cur.0[k]]).collect();
        let signs: Vec<i64> = (0..n).map(|k| cur.1[k] * step.1[cur.0[k]]).collect();
        cur = (perm, signs);
    }
    fixed_space_trivial(w, twisted)
}

/// Root system of the ambient untwisted group, as coordinate vectors.
fn ambient_roots(tag: TypeTag) -> Vec<Vec<i64>> {
    let n = coords(tag);
    let vec2 = |i: usize, a: i64, j: usize, b: i64| {
        let mut v = vec![0i64; n];
        v[i] += a;
        v[j] += b;
        v
    };
    let mut roots = Vec::new();
    match tag.family {
        Family::A | Family::TwoA => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(vec2(i, 1, j, -1));
                    }
                }
            }
        }
        Family::B | Family::C => {
            let c = if tag.family == Family::C { 2 } else { 1 };
            for i in 0..n {
                roots.push(vec2(i, c, i, 0));
                roots.push(vec2(i, -c, i, 0));
                for j in i + 1..n {
                    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(vec2(i, a, j, b));
                    }
                }
            }
        }
        Family::D | Family::TwoD => {
            for i in 0..n {
                for j in i + 1..n {
                    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(vec2(i, a, j, b));
                    }
                }
            }
        }
    }
    roots
}
