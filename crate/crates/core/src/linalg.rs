//! Minimal dense linear algebra: the per-element Gram and mass systems are
//! tiny (at most 9x9), so a hand-rolled LU with partial pivoting is all the
//! machinery required.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::scalar::{Cplx, Real};

/// Element of a field we can run Gaussian elimination over: the scalar
/// itself or a complex number built on it.
pub trait Field<R: Real>:
    Copy
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: R) -> Self;
    /// |x|, used for pivot selection and norms.
    fn modulus(self) -> R;
    /// |x|^2 without the square root.
    fn modulus_sq(self) -> R;
    /// Multiplication by a real scalar.
    fn scale(self, r: R) -> Self;
}

macro_rules! impl_field_real {
    ($t:ty) => {
        impl Field<$t> for $t {
            #[inline]
            fn zero() -> Self {
                0.0
            }
            #[inline]
            fn one() -> Self {
                1.0
            }
            #[inline]
            fn from_real(r: $t) -> Self {
                r
            }
            #[inline]
            fn modulus(self) -> $t {
                self.abs()
            }
            #[inline]
            fn modulus_sq(self) -> $t {
                self * self
            }
            #[inline]
            fn scale(self, r: $t) -> Self {
                self * r
            }
        }
    };
}

impl_field_real!(f32);
impl_field_real!(f64);

impl<R: Real> Field<R> for Cplx<R> {
    #[inline]
    fn zero() -> Self {
        Cplx::new(R::zero(), R::zero())
    }
    #[inline]
    fn one() -> Self {
        Cplx::new(R::one(), R::zero())
    }
    #[inline]
    fn from_real(r: R) -> Self {
        Cplx::new(r, R::zero())
    }
    #[inline]
    fn modulus(self) -> R {
        self.norm()
    }
    #[inline]
    fn modulus_sq(self) -> R {
        self.norm_sqr()
    }
    #[inline]
    fn scale(self, r: R) -> Self {
        Cplx::new(self.re * r, self.im * r)
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    n_rows: usize,
    n_cols: usize,
    data: Vec<T>,
}

/// Attempted to eliminate a (numerically) singular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularMatrix {
    /// Pivot column at which elimination broke down.
    pub pivot: usize,
}

impl fmt::Display for SingularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "singular matrix: no usable pivot in column {}", self.pivot)
    }
}

impl std::error::Error for SingularMatrix {}

impl<T: Copy> DenseMatrix<T> {
    pub fn filled(n_rows: usize, n_cols: usize, value: T) -> Self {
        Self { n_rows, n_cols, data: vec![value; n_rows * n_cols] }
    }

    pub fn from_rows(rows: &[&[T]]) -> Self {
        let n_rows = rows.len();
        let n_cols = if n_rows == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { n_rows, n_cols, data }
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        self.data[i * self.n_cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        &mut self.data[i * self.n_cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }
}

impl<R: Real, T: Field<R>> DenseMatrix<T> {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self::filled(n_rows, n_cols, T::zero())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                *out.at_mut(j, i) = self.at(i, j);
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = Self::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.at(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.n_cols {
                    *out.at_mut(i, j) += a * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.n_cols, x.len());
        (0..self.n_rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.n_cols {
                    acc += self.at(i, j) * x[j];
                }
                acc
            })
            .collect()
    }

    /// Force exact symmetry by averaging with the transpose.
    pub fn symmetrize(&mut self) {
        assert_eq!(self.n_rows, self.n_cols);
        let half = R::of(0.5);
        for i in 0..self.n_rows {
            for j in (i + 1)..self.n_cols {
                let avg = (self.at(i, j) + self.at(j, i)).scale(half);
                *self.at_mut(i, j) = avg;
                *self.at_mut(j, i) = avg;
            }
        }
    }

    /// Solves `self * X = rhs` by LU with partial pivoting, overwriting `rhs`
    /// with the solution. `self` is consumed as factorization workspace.
    pub fn lu_solve_in_place(mut self, rhs: &mut DenseMatrix<T>) -> Result<(), SingularMatrix> {
        let n = self.n_rows;
        assert_eq!(n, self.n_cols, "square matrix required");
        assert_eq!(n, rhs.n_rows);
        let k = rhs.n_cols;

        for col in 0..n {
            let mut piv = col;
            let mut best = self.at(col, col).modulus();
            for r in (col + 1)..n {
                let m = self.at(r, col).modulus();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if !(best > R::zero()) || !best.is_finite() {
                return Err(SingularMatrix { pivot: col });
            }
            if piv != col {
                for j in 0..n {
                    let tmp = self.at(col, j);
                    *self.at_mut(col, j) = self.at(piv, j);
                    *self.at_mut(piv, j) = tmp;
                }
                for j in 0..k {
                    let tmp = rhs.at(col, j);
                    *rhs.at_mut(col, j) = rhs.at(piv, j);
                    *rhs.at_mut(piv, j) = tmp;
                }
            }
            let inv = T::one() / self.at(col, col);
            for r in (col + 1)..n {
                let factor = self.at(r, col) * inv;
                if factor == T::zero() {
                    continue;
                }
                *self.at_mut(r, col) = T::zero();
                for j in (col + 1)..n {
                    let sub = factor * self.at(col, j);
                    *self.at_mut(r, j) -= sub;
                }
                for j in 0..k {
                    let sub = factor * rhs.at(col, j);
                    *rhs.at_mut(r, j) -= sub;
                }
            }
        }

        // back substitution
        for col in (0..n).rev() {
            let inv = T::one() / self.at(col, col);
            for j in 0..k {
                let mut acc = rhs.at(col, j);
                for c in (col + 1)..n {
                    acc -= self.at(col, c) * rhs.at(c, j);
                }
                *rhs.at_mut(col, j) = acc * inv;
            }
        }
        Ok(())
    }

    /// Convenience wrapper for a single right-hand side.
    pub fn lu_solve_vec(self, rhs: &[T]) -> Result<Vec<T>, SingularMatrix> {
        let mut b = DenseMatrix::zeros(rhs.len(), 1);
        for (i, &v) in rhs.iter().enumerate() {
            *b.at_mut(i, 0) = v;
        }
        self.lu_solve_in_place(&mut b)?;
        Ok(b.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_solves_small_real_system() {
        let a = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 3.0]]);
        let x = a.lu_solve_vec(&[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-14);
        assert!((x[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn lu_solves_complex_system() {
        type C = Cplx<f64>;
        let i = C::new(0.0, 1.0);
        let one = C::new(1.0, 0.0);
        let a = DenseMatrix::from_rows(&[&[one + i, i], &[i, one]]);
        // pick x = (1, -i), compute b = A x
        let x_exact = [one, -i];
        let b = a.matvec(&x_exact);
        let x = a.lu_solve_vec(&b).unwrap();
        for (xi, ei) in x.iter().zip(x_exact.iter()) {
            assert!((xi - ei).norm() < 1e-14);
        }
    }

    #[test]
    fn lu_reports_singularity() {
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
        let err = a.lu_solve_vec(&[1.0, 2.0]).unwrap_err();
        assert_eq!(err.pivot, 1);
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let a = DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let x = a.lu_solve_vec(&[3.0, 7.0]).unwrap();
        assert_eq!(x, vec![7.0, 3.0]);
    }
}
