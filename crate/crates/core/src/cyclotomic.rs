//! Exact arithmetic in Z[x]/(Phi_M(x)) for a fixed primitive M-th root of
//! unity x. Modulus 0 is a plain-integer sentinel so `Zero`/`One` need no
//! ring context (required by the generic matrix code); integers promote to
//! any modulus on contact.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::poly::IntPoly;

/// Rows k = 0.. give x^(phi+k) reduced mod Phi_M, each of width phi.
type ReductionTable = Vec<Vec<BigInt>>;

fn table(modulus: u64) -> Arc<ReductionTable> {
    static TABLES: OnceLock<Mutex<HashMap<u64, Arc<ReductionTable>>>> = OnceLock::new();
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(modulus)
        .or_insert_with(|| {
            let phi_poly = IntPoly::cyclotomic(modulus);
            let phi = phi_poly.degree().expect("cyclotomic is nonzero");
            let mut rows: ReductionTable = Vec::with_capacity(phi.saturating_sub(1).max(1));
            // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}).
            let base: Vec<BigInt> = (0..phi).map(|k| -phi_poly.coeff(k)).collect();
            rows.push(base);
            for k in 1..phi.max(1) {
                let prev = rows[k - 1].clone();
                let mut next = vec![BigInt::from(0); phi];
                for (d, c) in prev.iter().enumerate() {
                    if d + 1 < phi {
                        next[d + 1] += c;
                    } else {
                        for (j, b) in rows[0].iter().enumerate() {
                            next[j] += c * b;
                        }
                    }
                }
                rows.push(next);
            }
            Arc::new(rows)
        })
        .clone()
}

fn phi_degree(modulus: u64) -> usize {
    crate::poly::euler_phi(modulus) as usize
}

#[derive(Clone, Debug)]
pub struct CycInt {
    modulus: u64,
    /// Ascending power-basis coefficients: length phi(modulus), or <= 1 for
    /// the integer sentinel.
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        CycInt { modulus: 0, coeffs: if n.is_zero() { vec![] } else { vec![n] } }
    }

    /// x^e in Z[x]/(Phi_M(x)), e taken mod M.
    pub fn root(modulus: u64, e: i64) -> Self {
        assert!(modulus >= 1);
        let e = e.rem_euclid(modulus as i64) as u64;
        match modulus {
            1 => CycInt::integer(1),
            2 => CycInt::integer(if e == 0 { 1 } else { -1 }),
            _ => {
                let phi = phi_degree(modulus);
                let mut acc = CycInt::monomial(modulus, 0);
                let mut rem = e as usize;
                while rem > 0 {
                    let step = rem.min(phi - 1);
                    acc = acc * CycInt::monomial(modulus, step);
                    rem -= step;
                }
                acc
            }
        }
    }

    /// (-1)^negate * x^e.
    pub fn signed_root(modulus: u64, negate: bool, e: i64) -> Self {
        let r = Self::root(modulus, e);
        if negate { -r } else { r }
    }

    fn monomial(modulus: u64, deg: usize) -> Self {
        let phi = phi_degree(modulus);
        assert!(deg < phi);
        let mut coeffs = vec![BigInt::from(0); phi];
        coeffs[deg] = BigInt::from(1);
        CycInt { modulus, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Some(n) when the value lies in Z.
    pub fn to_int(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(|| BigInt::from(0)))
        } else {
            None
        }
    }

    fn promote(&self, modulus: u64) -> Self {
        debug_assert_eq!(self.modulus, 0);
        let mut coeffs = vec![BigInt::from(0); phi_degree(modulus)];
        if let Some(c) = self.coeffs.first() {
            coeffs[0] = c.clone();
        }
        CycInt { modulus, coeffs }
    }

    /// Lifts the pair to a common modulus; mixing two distinct nonzero
    /// moduli is a construction bug.
    fn aligned(self, other: Self) -> (Self, Self) {
        match (self.modulus, other.modulus) {
            (0, 0) => (self, other),
            (a, 0) => {
                let p = other.promote(a);
                (self, p)
            }
            (0, b) => {
                let p = self.promote(b);
                (p, other)
            }
            (a, b) => {
                assert_eq!(a, b, "mixed cyclotomic moduli {a} and {b}");
                (self, other)
            }
        }
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.clone().aligned(other.clone());
        if a.modulus == 0 {
            return a.coeffs.first() == b.coeffs.first()
                || (a.coeffs.is_empty() && b.coeffs.iter().all(Zero::is_zero));
        }
        a.coeffs == b.coeffs
    }
}

impl Eq for CycInt {}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = self.aligned(rhs);
        if a.modulus == 0 {
            let x = a.coeffs.pop().unwrap_or_else(|| BigInt::from(0));
            let y = b.coeffs.first().cloned().unwrap_or_else(|| BigInt::from(0));
            return CycInt::integer(x + y);
        }
        for (c, d) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *c += d;
        }
        a
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.aligned(rhs);
        if a.modulus == 0 {
            let x = a.coeffs.first().cloned().unwrap_or_else(|| BigInt::from(0));
            let y = b.coeffs.first().cloned().unwrap_or_else(|| BigInt::from(0));
            return CycInt::integer(x * y);
        }
        let phi = a.coeffs.len();
        let mut conv = vec![BigInt::from(0); 2 * phi - 1];
        for (i, ci) in a.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in b.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                conv[i + j] += ci * cj;
            }
        }
        let rows = table(a.modulus);
        let mut out = conv[..phi].to_vec();
        for d in phi..conv.len() {
            if conv[d].is_zero() {
                continue;
            }
            let row = &rows[d - phi];
            for (j, rcoef) in row.iter().enumerate() {
                out[j] += &conv[d] * rcoef;
            }
        }
        CycInt { modulus: a.modulus, coeffs: out }
    }
}

impl Zero for CycInt {
    fn zero() -> Self {
        CycInt::integer(0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for CycInt {
    fn one() -> Self {
        CycInt::integer(1)
    }
    fn is_one(&self) -> bool {
        *self == CycInt::integer(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roots_multiply_to_one() {
        let a = CycInt::root(5, 2);
        let b = CycInt::root(5, 3);
        assert!((a * b).is_one());
    }

    #[test]
    fn all_fifth_roots_sum_to_zero() {
        let s = (0..5).fold(CycInt::zero(), |acc, e| acc + CycInt::root(5, e));
        assert!(s.is_zero());
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = CycInt::root(4, 1);
        assert_eq!(i.clone() * i, CycInt::integer(-1));
    }

    #[test]
    fn sixth_root_cubed() {
        assert_eq!(CycInt::root(6, 3).to_int(), Some(BigInt::from(-1)));
        assert_eq!(CycInt::root(6, 1).to_int(), None);
    }

    #[test]
    fn tiny_moduli_collapse_to_integers() {
        assert!(CycInt::root(1, 5).is_one());
        assert_eq!(CycInt::root(2, 3), CycInt::integer(-1));
    }

    #[test]
    fn integer_sentinel_mixes_with_roots() {
        let z = CycInt::integer(3) * CycInt::root(8, 2) + CycInt::root(8, 6);
        // 3x^2 + x^6 where x^4 = -1: x^6 = -x^2, so z = 2x^2.
        assert_eq!(z, CycInt::integer(2) * CycInt::root(8, 2));
        assert_eq!(CycInt::zero() + CycInt::root(7, 1), CycInt::root(7, 1));
        assert!((CycInt::root(9, 4) - CycInt::root(9, 4)).is_zero());
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(CycInt::root(12, -1), CycInt::root(12, 11));
        assert_eq!(CycInt::signed_root(12, true, 0), CycInt::integer(-1));
    }

    #[test]
    fn power_relation_in_composite_modulus() {
        // x primitive 12th root: x^6 = -1, x^4 - x^2 + 1 = 0.
        let x = CycInt::root(12, 1);
        let mut p = CycInt::one();
        for _ in 0..6 {
            p = p * x.clone();
        }
        assert_eq!(p, CycInt::integer(-1));
        let rel = CycInt::root(12, 4) - CycInt::root(12, 2) + CycInt::one();
        assert!(rel.is_zero());
    }
}
