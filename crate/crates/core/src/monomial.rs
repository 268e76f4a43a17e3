//! Monomial matrices over the Gaussian units: exactly one nonzero entry per
//! row and column, each a power of i. Every generator and lift in the six
//! realizations has this shape, so products, inverses, determinants, and
//! orders stay exact and cheap.

use crate::error::{Error, Result};
use crate::gauss::{gauss, unit, GaussInt};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    /// row_of_col[j] = row index of column j's nonzero entry.
    row_of_col: Vec<usize>,
    /// iexp[j] = k where that entry is i^k.
    iexp: Vec<u8>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial { row_of_col: (0..n).collect(), iexp: vec![0; n] }
    }

    /// `row_of_col` must be a permutation; exponents are reduced mod 4.
    pub fn from_parts(row_of_col: Vec<usize>, iexp: Vec<u8>) -> Self {
        let n = row_of_col.len();
        assert_eq!(iexp.len(), n);
        let mut seen = vec![false; n];
        for &r in &row_of_col {
            assert!(r < n && !seen[r], "not a permutation");
            seen[r] = true;
        }
        Monomial { row_of_col, iexp: iexp.into_iter().map(|a| a % 4).collect() }
    }

    pub fn size(&self) -> usize {
        self.row_of_col.len()
    }

    pub fn row_of_col(&self) -> &[usize] {
        &self.row_of_col
    }

    pub fn unit_exps(&self) -> &[u8] {
        &self.iexp
    }

    pub fn entry(&self, i: usize, j: usize) -> GaussInt {
        if self.row_of_col[j] == i {
            unit(self.iexp[j])
        } else {
            gauss(0, 0)
        }
    }

    pub fn to_dense(&self) -> Matrix<GaussInt> {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            *m.at_mut(self.row_of_col[j], j) = unit(self.iexp[j]);
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.size();
        assert_eq!(n, rhs.size());
        let mut row_of_col = vec![0usize; n];
        let mut iexp = vec![0u8; n];
        for j in 0..n {
            let mid = rhs.row_of_col[j];
            row_of_col[j] = self.row_of_col[mid];
            iexp[j] = (self.iexp[mid] + rhs.iexp[j]) % 4;
        }
        Monomial { row_of_col, iexp }
    }

    pub fn inv(&self) -> Self {
        let n = self.size();
        let mut row_of_col = vec![0usize; n];
        let mut iexp = vec![0u8; n];
        for j in 0..n {
            let r = self.row_of_col[j];
            row_of_col[r] = j;
            iexp[r] = (4 - self.iexp[j]) % 4;
        }
        Monomial { row_of_col, iexp }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let mut row_of_col = vec![0usize; n];
        let mut iexp = vec![0u8; n];
        for j in 0..n {
            let r = self.row_of_col[j];
            row_of_col[r] = j;
            iexp[r] = self.iexp[j];
        }
        Monomial { row_of_col, iexp }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Monomial {
            row_of_col: self.row_of_col.clone(),
            iexp: self.iexp.iter().map(|&a| (4 - a) % 4).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scaled(2)
    }

    /// Multiplies the whole matrix by i^k.
    pub fn scaled(&self, k: u8) -> Self {
        Monomial {
            row_of_col: self.row_of_col.clone(),
            iexp: self.iexp.iter().map(|&a| (a + k) % 4).collect(),
        }
    }

    /// Determinant as an exponent of i (always a Gaussian unit).
    pub fn det_exp(&self) -> u8 {
        let mut visited = vec![false; self.size()];
        let mut transpositions = 0usize;
        for start in 0..self.size() {
            if visited[start] {
                continue;
            }
            let mut len = 0usize;
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                j = self.row_of_col[j];
                len += 1;
            }
            transpositions += len - 1;
        }
        let unit_sum: u32 = self.iexp.iter().map(|&a| a as u32).sum();
        (((transpositions % 2) as u32 * 2 + unit_sum) % 4) as u8
    }

    pub fn det(&self) -> GaussInt {
        unit(self.det_exp())
    }

    pub fn is_identity(&self) -> bool {
        self.row_of_col.iter().enumerate().all(|(j, &r)| r == j)
            && self.iexp.iter().all(|&a| a == 0)
    }

    /// Some(k) when the matrix equals i^k times the identity.
    pub fn as_scalar(&self) -> Option<u8> {
        if self.row_of_col.iter().enumerate().all(|(j, &r)| r == j)
            && self.iexp.windows(2).all(|w| w[0] == w[1])
        {
            Some(self.iexp[0])
        } else {
            None
        }
    }

    /// Least k >= 1 with self^k = identity; errors past `cap` (a construction
    /// bug: any monomial matrix has order dividing 4 * lcm of cycle lengths).
    pub fn order(&self, cap: u64) -> Result<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(self);
        }
        Err(Error::OrderCapExceeded { cap })
    }
}
