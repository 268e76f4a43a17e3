//! Exact polynomial arithmetic for products of t^k - 1 and t^k + 1:
//! dense integer expansions, factored forms, and root-of-unity multisets.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sign in a binomial factor: `Minus` denotes t^k - 1, `Plus` denotes t^k + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// The constant term of t^k - 1 resp. t^k + 1.
    fn constant(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// Dense integer polynomial, coefficients ascending, trailing coefficient
/// nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// t^k - 1 (sign `Minus`) or t^k + 1 (sign `Plus`).
    pub fn binomial(k: u64, sign: Sign) -> Self {
        let k = k as usize;
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(sign.constant());
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Exact division by a monic divisor; fails if the remainder is nonzero.
    ///
    /// # Panics
    /// Panics if `divisor` is zero or not monic.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(divisor.is_monic(), "divisor must be monic");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let d = divisor.degree().unwrap();
        let n = self.degree().unwrap();
        if n < d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (d..=n).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate().take(d) {
                rem[i - d + j] -= &c * b;
            }
            quot[i - d] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The n-th cyclotomic polynomial, by exact division of t^n - 1 by the
    /// cyclotomic polynomials of the proper divisors of n.
    pub fn cyclotomic(n: u64) -> IntPoly {
        assert!(n >= 1);
        let mut quot = IntPoly::binomial(n, Sign::Minus);
        for d in 1..=n / 2 {
            if n % d == 0 {
                quot = quot
                    .div_exact(&IntPoly::cyclotomic(d))
                    .expect("cyclotomic division is exact");
            }
        }
        quot
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A formal product of binomials (t^k - 1)^e (t^k + 1)^e with integer
/// (possibly negative) exponents, e.g. (t^10 - 1)(t^8 - 1)^2 (t + 1)^-1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredPoly {
    // (exponent k, sign) -> multiplicity, zero multiplicities removed.
    factors: BTreeMap<(u64, Sign), i64>,
}

impl FactoredPoly {
    pub fn one() -> Self {
        FactoredPoly::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (u64, Sign, i64)>) -> Self {
        let mut f = FactoredPoly::default();
        for (k, sign, mult) in factors {
            f.push(k, sign, mult);
        }
        f
    }

    /// Multiplies by (t^k sign 1)^mult, cancelling zero multiplicities.
    pub fn push(&mut self, k: u64, sign: Sign, mult: i64) {
        assert!(k >= 1, "factor exponent must be positive");
        if mult == 0 {
            return;
        }
        let entry = self.factors.entry((k, sign)).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.factors.remove(&(k, sign));
        }
    }

    pub fn mul(&self, other: &FactoredPoly) -> FactoredPoly {
        let mut out = self.clone();
        for (&(k, sign), &mult) in &other.factors {
            out.push(k, sign, mult);
        }
        out
    }

    /// Factors as (exponent, sign, multiplicity), exponent descending and
    /// t^k - 1 preceding t^k + 1.
    pub fn factors(&self) -> Vec<(u64, Sign, i64)> {
        let mut v: Vec<_> = self
            .factors
            .iter()
            .map(|(&(k, sign), &m)| (k, sign, m))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        v
    }

    /// Degree of the expansion.
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(&(k, _), &m)| k as i64 * m)
            .sum()
    }

    /// Exact expansion; negative-multiplicity factors are divided out and
    /// must divide exactly.
    pub fn expand(&self) -> Result<IntPoly> {
        let mut num = IntPoly::one();
        let mut dens = Vec::new();
        for (&(k, sign), &mult) in &self.factors {
            let bin = IntPoly::binomial(k, sign);
            for _ in 0..mult.unsigned_abs() {
                if mult > 0 {
                    num = num.mul(&bin);
                } else {
                    dens.push((k, sign));
                }
            }
        }
        for (k, sign) in dens {
            num = num
                .div_exact(&IntPoly::binomial(k, sign))
                .ok_or(Error::NonPolynomialQuotient {
                    exponent: k,
                    sign: sign.symbol(),
                })?;
        }
        Ok(num)
    }

    /// Product of the factor values at x = 1 resp. x = -1, as a rational
    /// pair (numerator, denominator); used to spot-check expansions.
    pub fn eval_signed_unit(&self, x: i64) -> (BigInt, BigInt) {
        assert!(x == 1 || x == -1);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&(k, sign), &mult) in &self.factors {
            let base = BigInt::from(if x == 1 { 1i64 } else { (-1i64).pow((k % 2) as u32) })
                + BigInt::from(sign.constant());
            for _ in 0..mult.unsigned_abs() {
                if mult > 0 {
                    num *= &base;
                } else {
                    den *= &base;
                }
            }
        }
        (num, den)
    }

    /// The multiset of roots as powers of a primitive m-th root of unity.
    /// Fails unless every root is an m-th root of unity and multiplicities
    /// stay non-negative after cancellation.
    pub fn roots_mod(&self, m: u64) -> Result<RootMultiset> {
        assert!(m >= 1);
        let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
        for (&(k, sign), &mult) in &self.factors {
            let err = || Error::RootNotUnity {
                exponent: k,
                sign: sign.symbol(),
                modulus: m,
            };
            match sign {
                // Roots of t^k - 1: exponents (m/k) * j.
                Sign::Minus => {
                    if m % k != 0 {
                        return Err(err());
                    }
                    let step = m / k;
                    for j in 0..k {
                        *counts.entry(step * j).or_insert(0) += mult;
                    }
                }
                // Roots of t^k + 1: exponents (m/2k) * (2j + 1).
                Sign::Plus => {
                    if m % (2 * k) != 0 {
                        return Err(err());
                    }
                    let step = m / (2 * k);
                    for j in 0..k {
                        *counts.entry(step * (2 * j + 1)).or_insert(0) += mult;
                    }
                }
            }
        }
        let mut out = BTreeMap::new();
        for (e, c) in counts {
            if c < 0 {
                return Err(Error::NonPolynomialQuotient {
                    exponent: 1,
                    sign: '-',
                });
            }
            if c > 0 {
                out.insert(e, c as u64);
            }
        }
        Ok(RootMultiset {
            modulus: m,
            counts: out,
        })
    }

    /// Canonical form: the unique representation produced by greedy
    /// recombination of the root multiset (largest binomials first).
    /// Well-defined for any product with non-negative root multiplicities.
    pub fn canonical(&self) -> Result<FactoredPoly> {
        let m = self
            .factors
            .keys()
            .map(|&(k, sign)| match sign {
                Sign::Minus => k,
                Sign::Plus => 2 * k,
            })
            .fold(1u64, |acc, x| num_integer::lcm(acc, x));
        self.roots_mod(m)?.reconstruct()
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, sign, mult) in self.factors() {
            if k == 1 {
                write!(f, "(t {} 1)", sign.symbol())?;
            } else {
                write!(f, "(t^{k} {} 1)", sign.symbol())?;
            }
            if mult != 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

/// Multiset of m-th roots of unity: exponent e mod m -> multiplicity of the
/// root zeta_m^e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMultiset {
    modulus: u64,
    counts: BTreeMap<u64, u64>,
}

impl RootMultiset {
    pub fn new(modulus: u64, counts: BTreeMap<u64, u64>) -> Self {
        assert!(modulus >= 1);
        assert!(counts.keys().all(|&e| e < modulus));
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        RootMultiset { modulus, counts }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Extracts the roots of a monic integer polynomial whose roots are all
    /// m-th roots of unity, by exact division by cyclotomic polynomials.
    pub fn from_poly(p: &IntPoly, m: u64) -> Result<Self> {
        let mut out = RootMultiset::new(m, BTreeMap::new());
        let mut rest = p.clone();
        for d in (1..=m).filter(|x| m % x == 0) {
            let phi_d = IntPoly::cyclotomic(d);
            while let Some(q) = rest.div_exact(&phi_d) {
                rest = q;
                for j in (0..d).filter(|&j| num_integer::gcd(j, d) == 1) {
                    out.insert(m / d * j, 1);
                }
                if rest.degree() == Some(0) {
                    break;
                }
            }
        }
        if rest != IntPoly::one() {
            return Err(Error::RootNotUnity {
                exponent: rest.degree().unwrap_or(0) as u64,
                sign: '?',
                modulus: m,
            });
        }
        Ok(out)
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, exponent: u64) -> u64 {
        self.counts.get(&(exponent % self.modulus)).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, exponent: u64, mult: u64) {
        if mult > 0 {
            *self.counts.entry(exponent % self.modulus).or_insert(0) += mult;
        }
    }

    /// Removes one copy of the root zeta^exponent; false if absent.
    pub fn remove_one(&mut self, exponent: u64) -> bool {
        let e = exponent % self.modulus;
        match self.counts.get_mut(&e) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&e);
                }
                true
            }
            None => false,
        }
    }

    /// Multiplicity vector per cyclotomic class: order d of the root ->
    /// multiplicity, provided the multiset is Galois-stable (all primitive
    /// d-th roots share one multiplicity); None otherwise.
    fn cyclotomic_counts(&self) -> Option<BTreeMap<u64, u64>> {
        let mut by_order: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (&e, &c) in &self.counts {
            let d = self.modulus / num_integer::gcd(self.modulus, e);
            by_order.entry(d).or_default().push(c);
        }
        let mut out = BTreeMap::new();
        for (d, counts) in by_order {
            let c = counts[0];
            let phi = euler_phi(d);
            if counts.len() as u64 != phi || counts.iter().any(|&x| x != c) {
                return None;
            }
            out.insert(d, c);
        }
        Some(out)
    }

    /// Reconstructs the canonical binomial product with this root multiset.
    /// Peels from the largest order down, where the cover is forced: the top
    /// class d comes only from t^d - 1 when d is odd and only from
    /// t^{d/2} + 1 when d is even (t^d - 1 splits as (t^{d/2}-1)(t^{d/2}+1),
    /// so minus factors may be assumed odd). The atoms are then merged back,
    /// (t^k + 1)(t^k - 1) -> t^{2k} - 1 smallest k first, into the canonical
    /// form that prefers t^d - 1.
    pub fn reconstruct(&self) -> Result<FactoredPoly> {
        let fail = || Error::NonPolynomialQuotient {
            exponent: self.modulus,
            sign: '?',
        };
        let mut classes = self.cyclotomic_counts().ok_or_else(fail)?;
        let mut minus: BTreeMap<u64, u64> = BTreeMap::new();
        let mut plus: BTreeMap<u64, u64> = BTreeMap::new();
        while let Some((&d, &mult)) = classes.iter().rev().find(|&(_, &c)| c > 0) {
            // t^d - 1 covers every divisor class of d; t^{d/2} + 1 covers the
            // divisor classes with the same 2-adic valuation as d.
            let covered: Vec<u64> = (1..=d)
                .filter(|e| d % e == 0)
                .filter(|e| d % 2 == 1 || e.trailing_zeros() == d.trailing_zeros())
                .collect();
            for e in covered {
                let c = classes.get_mut(&e).ok_or_else(fail)?;
                *c = c.checked_sub(mult).ok_or_else(fail)?;
            }
            if d % 2 == 1 {
                *minus.entry(d).or_insert(0) += mult;
            } else {
                *plus.entry(d / 2).or_insert(0) += mult;
            }
        }
        loop {
            let mergeable = plus
                .iter()
                .find(|&(k, &c)| c > 0 && minus.get(k).copied().unwrap_or(0) > 0)
                .map(|(&k, _)| k);
            let Some(k) = mergeable else { break };
            let m = plus[&k].min(minus[&k]);
            *plus.get_mut(&k).expect("plus atom present") -= m;
            *minus.get_mut(&k).expect("minus atom present") -= m;
            *minus.entry(2 * k).or_insert(0) += m;
        }
        let mut out = FactoredPoly::one();
        for (&k, &c) in &minus {
            if c > 0 {
                out.push(k, Sign::Minus, c as i64);
            }
        }
        for (&k, &c) in &plus {
            if c > 0 {
                out.push(k, Sign::Plus, c as i64);
            }
        }
        Ok(out)
    }
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(factors: &[(u64, Sign, i64)]) -> FactoredPoly {
        FactoredPoly::from_factors(factors.iter().copied())
    }

    #[test]
    fn binomial_expansion() {
        let f = fp(&[(2, Sign::Minus, 1)]);
        assert_eq!(f.expand().unwrap(), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation_is_exact() {
        // (t^3 + 1)(t + 1) / (t + 1) = t^3 + 1
        let f = fp(&[(3, Sign::Plus, 1), (1, Sign::Plus, 1), (1, Sign::Plus, -1)]);
        assert_eq!(f.expand().unwrap(), IntPoly::from_i64(&[1, 0, 0, 1]));
    }

    #[test]
    fn non_exact_quotient_fails() {
        let f = fp(&[(3, Sign::Plus, 1), (2, Sign::Minus, -1)]);
        assert!(matches!(
            f.expand(),
            Err(Error::NonPolynomialQuotient { .. })
        ));
    }

    #[test]
    fn sp6_class_expansion() {
        // (t^4 + 1)(t^2 + 1) has degree 6 and sparse 0/1 coefficients.
        let f = fp(&[(4, Sign::Plus, 1), (2, Sign::Plus, 1)]);
        assert_eq!(
            f.expand().unwrap(),
            IntPoly::from_i64(&[1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn quotient_of_plus_one_binomials() {
        // (t^3 + 1) / (t + 1) = t^2 - t + 1
        let f = fp(&[(3, Sign::Plus, 1), (1, Sign::Plus, -1)]);
        assert_eq!(f.expand().unwrap(), IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn roots_of_small_binomials() {
        let f = fp(&[(2, Sign::Minus, 1)]);
        let r = f.roots_mod(2).unwrap();
        assert_eq!(r.count(0), 1);
        assert_eq!(r.count(1), 1);

        let g = fp(&[(2, Sign::Plus, 1)]);
        let r = g.roots_mod(4).unwrap();
        assert_eq!(r.count(1), 1);
        assert_eq!(r.count(3), 1);
        assert_eq!(r.count(0), 0);
    }

    #[test]
    fn roots_require_compatible_modulus() {
        let f = fp(&[(2, Sign::Plus, 1)]);
        assert!(matches!(f.roots_mod(2), Err(Error::RootNotUnity { .. })));
    }

    #[test]
    fn roots_of_sp6_class() {
        // (t^4 + 1)(t^2 + 1) over 8th roots: odd exponents and 2, 6.
        let f = fp(&[(4, Sign::Plus, 1), (2, Sign::Plus, 1)]);
        let r = f.roots_mod(8).unwrap();
        for e in [1, 3, 5, 7, 2, 6] {
            assert_eq!(r.count(e), 1, "exponent {e}");
        }
        assert_eq!(r.total(), 6);
    }

    #[test]
    fn reconstruct_merges_split_pairs() {
        // (t^3 - 1)(t^3 + 1) expands to t^6 - 1; canonical form merges it.
        let f = fp(&[(3, Sign::Minus, 1), (3, Sign::Plus, 1)]);
        let canon = f.canonical().unwrap();
        assert_eq!(canon, fp(&[(6, Sign::Minus, 1)]));
        assert_eq!(canon.expand().unwrap(), f.expand().unwrap());
    }

    #[test]
    fn reconstruct_keeps_plus_factor_when_unmergeable() {
        let f = fp(&[(3, Sign::Plus, 2), (3, Sign::Minus, 1)]);
        let canon = f.canonical().unwrap();
        assert_eq!(canon, fp(&[(6, Sign::Minus, 1), (3, Sign::Plus, 1)]));
        assert_eq!(canon.expand().unwrap(), f.expand().unwrap());
    }

    #[test]
    fn eval_at_units_matches_expansion() {
        let f = fp(&[(4, Sign::Minus, 1), (3, Sign::Plus, 2), (1, Sign::Plus, 1)]);
        let p = f.expand().unwrap();
        for x in [1i64, -1] {
            let (num, den) = f.eval_signed_unit(x);
            assert_eq!(p.eval(&BigInt::from(x)) * den, num);
        }
    }

    #[test]
    fn display_forms() {
        let f = fp(&[(10, Sign::Minus, 1), (8, Sign::Minus, 2), (1, Sign::Plus, -1)]);
        assert_eq!(f.to_string(), "(t^10 - 1)(t^8 - 1)^2(t + 1)^-1");
        let p = IntPoly::from_i64(&[1, -1, 1]);
        assert_eq!(p.to_string(), "t^2 - t + 1");
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(IntPoly::cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(IntPoly::cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(IntPoly::cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        // Phi_105 is the first with a coefficient of magnitude 2.
        let p = IntPoly::cyclotomic(105);
        assert_eq!(p.degree(), Some(48));
        assert_eq!(p.coeff(7), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for n in 1..=30 {
            assert_eq!(
                IntPoly::cyclotomic(n).degree().unwrap() as u64,
                euler_phi(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(28), 12);
        assert_eq!(euler_phi(140), 48);
    }
}
