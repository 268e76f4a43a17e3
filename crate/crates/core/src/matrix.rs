//! Dense matrices over an exact commutative ring, with a division-free
//! characteristic polynomial (Samuelson-Berkowitz recurrence).

use num_traits::{One, Zero};
use std::ops::{Neg, Sub};

/// Ring scalar usable in exact linear algebra. `Zero`/`One` bring in the
/// `Add`/`Mul` bounds; no division is ever required.
pub trait Scalar: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone().neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self.at(i, j).is_one() } else { self.at(i, j).is_zero() }
                })
            })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Coefficients of det(tI - A), ascending degree, monic of degree n.
    ///
    /// Division-free: the char vector of each leading principal minor is
    /// obtained from the previous one by a truncated convolution with the
    /// Samuelson transform [1, -a, -RC, -RAC, ...]. Zero entries are skipped,
    /// so monomial inputs cost far less than the generic O(n^4) bound.
    pub fn charpoly(&self) -> Vec<S> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return vec![S::one()];
        }
        // Descending-degree char vector of the 1x1 leading minor: t - a00.
        let mut poly = vec![S::one(), self.at(0, 0).clone().neg()];
        for k in 1..n {
            // Transform column: [1, -A[k][k], -(R C), -(R A C), ..., -(R A^{k-1} C)]
            // with A the leading k x k block, R = row k, C = column k.
            let mut items = Vec::with_capacity(k + 2);
            items.push(S::one());
            items.push(self.at(k, k).clone().neg());
            let mut v: Vec<S> = (0..k).map(|i| self.at(i, k).clone()).collect();
            for step in 0..k {
                let mut dot = S::zero();
                for (j, vj) in v.iter().enumerate() {
                    let a = self.at(k, j);
                    if !a.is_zero() && !vj.is_zero() {
                        dot = dot + a.clone() * vj.clone();
                    }
                }
                items.push(dot.neg());
                if step + 1 < k {
                    let mut nv = vec![S::zero(); k];
                    for i in 0..k {
                        for (j, vj) in v.iter().enumerate() {
                            let a = self.at(i, j);
                            if !a.is_zero() && !vj.is_zero() {
                                nv[i] = nv[i].clone() + a.clone() * vj.clone();
                            }
                        }
                    }
                    v = nv;
                }
            }
            let mut next = vec![S::zero(); k + 2];
            for (c, pc) in poly.iter().enumerate() {
                if pc.is_zero() {
                    continue;
                }
                for (d, it) in items.iter().enumerate() {
                    let r = c + d;
                    if r < k + 2 && !it.is_zero() {
                        next[r] = next[r].clone() + it.clone() * pc.clone();
                    }
                }
            }
            poly = next;
        }
        poly.reverse();
        poly
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m_i64(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows)
    }

    #[test]
    fn charpoly_of_scalar() {
        assert_eq!(m_i64(vec![vec![2]]).charpoly(), vec![-2, 1]);
    }

    #[test]
    fn charpoly_of_swap() {
        // det(tI - [[0,1],[1,0]]) = t^2 - 1.
        assert_eq!(m_i64(vec![vec![0, 1], vec![1, 0]]).charpoly(), vec![-1, 0, 1]);
    }

    #[test]
    fn charpoly_of_plain_cycle() {
        // 3-cycle permutation matrix: t^3 - 1.
        let p = m_i64(vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(p.charpoly(), vec![-1, 0, 0, 1]);
    }

    #[test]
    fn charpoly_of_signed_cycle() {
        // 4-cycle with a single -1 along the cycle: t^4 + 1.
        let p = m_i64(vec![
            vec![0, 0, 0, -1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ]);
        assert_eq!(p.charpoly(), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn charpoly_of_dense_singular_matrix() {
        // trace 15, sum of 2x2 principal minors -18, det 0.
        let a = m_i64(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(a.charpoly(), vec![0, -18, -15, 1]);
    }

    #[test]
    fn charpoly_generic_over_bigint() {
        let a = Matrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(-1), BigInt::from(0)],
        ]);
        assert_eq!(
            a.charpoly(),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn product_and_identity() {
        let a = m_i64(vec![vec![1, 2], vec![3, 4]]);
        let id = Matrix::<i64>::identity(2);
        assert_eq!(a.mul(&id), a);
        assert!(id.is_identity());
        assert!(!a.is_identity());
        let b = m_i64(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), m_i64(vec![vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn transpose_round_trip() {
        let a = m_i64(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(*a.transpose().at(2, 1), 6);
    }

    #[test]
    fn charpoly_of_block_diagonal_is_product() {
        // diag(swap, [3]) -> (t^2 - 1)(t - 3) = t^3 - 3t^2 - t + 3.
        let a = m_i64(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 3]]);
        assert_eq!(a.charpoly(), vec![3, -1, -3, 1]);
    }
}
