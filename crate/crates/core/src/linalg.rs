//! Dense complex operator matrices on truncated coefficient space.

use crate::error::{CoreError, Result};
use crate::multiindex::Basis;
use crate::scalar::Real;
use crate::Space;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex;

pub type CMatrix<T> = DMatrix<Complex<T>>;
pub type CVector<T> = DVector<Complex<T>>;

/// Largest singular value of a dense complex matrix.
pub fn spectral_norm<T: Real>(m: &CMatrix<T>) -> T {
    if m.is_empty() {
        return T::zero();
    }
    let sv = m.clone().singular_values();
    sv.iter().fold(T::zero(), |acc, &s| if s > acc { s } else { acc })
}

/// Dense complex matrix tagged with the space and truncation it acts on.
/// Rows/columns are indexed by the graded-lexicographic monomial basis of
/// total degree <= `degree` in `n` complex variables.
#[derive(Clone, Debug)]
pub struct OperatorMatrix<T: Real> {
    pub space: Space,
    pub n: usize,
    pub degree: usize,
    pub mat: CMatrix<T>,
}

impl<T: Real> OperatorMatrix<T> {
    pub fn from_mat(space: Space, n: usize, degree: usize, mat: CMatrix<T>) -> Self {
        let dim = Basis::new(n, degree).len();
        assert_eq!(mat.nrows(), dim, "matrix rows must match basis size");
        assert_eq!(mat.ncols(), dim, "matrix cols must match basis size");
        OperatorMatrix {
            space,
            n,
            degree,
            mat,
        }
    }

    pub fn zeros(space: Space, n: usize, degree: usize) -> Self {
        let dim = Basis::new(n, degree).len();
        OperatorMatrix {
            space,
            n,
            degree,
            mat: CMatrix::<T>::zeros(dim, dim),
        }
    }

    pub fn identity(space: Space, n: usize, degree: usize) -> Self {
        let dim = Basis::new(n, degree).len();
        OperatorMatrix {
            space,
            n,
            degree,
            mat: CMatrix::<T>::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Conjugate transpose. The monomial basis is orthonormal in the 2-norm
    /// pairing, so this is also the Banach-space adjoint representation.
    pub fn adjoint(&self) -> Self {
        OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: self.degree,
            mat: self.mat.adjoint(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: self.degree,
            mat: &self.mat * &rhs.mat,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: self.degree,
            mat: &self.mat + &rhs.mat,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        Ok(OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: self.degree,
            mat: &self.mat - &rhs.mat,
        })
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: self.degree,
            mat: self.mat.map(|e| e * c),
        }
    }

    pub fn apply(&self, v: &CVector<T>) -> CVector<T> {
        &self.mat * v
    }

    /// self += c * x * y^H  (rank-one update).
    pub fn add_scaled_outer(&mut self, c: Complex<T>, x: &CVector<T>, y: &CVector<T>) {
        debug_assert_eq!(x.len(), self.mat.nrows());
        debug_assert_eq!(y.len(), self.mat.ncols());
        for j in 0..y.len() {
            let a = c * y[j].conj();
            if a != Complex::new(T::zero(), T::zero()) {
                self.mat.column_mut(j).axpy(a, x, Complex::new(T::one(), T::zero()));
            }
        }
    }

    /// Operator 2-norm (largest singular value); exact for p=2 because the
    /// basis is orthonormal.
    pub fn norm2(&self) -> T {
        spectral_norm(&self.mat)
    }

    /// 2-norm of the operator restricted to inputs of total degree <= d.
    /// In graded order those coefficients form a prefix, so this is the
    /// spectral norm of the leading column block.
    pub fn norm2_restricted(&self, d: usize) -> T {
        let basis = Basis::new(self.n, self.degree);
        let k = basis.len_through_degree(d.min(self.degree));
        if k == 0 {
            return T::zero();
        }
        spectral_norm(&self.mat.columns(0, k).into_owned())
    }

    /// Two-sided compression to total degree <= d (leading principal block in
    /// graded order), as its own operator on the smaller space.
    pub fn restrict(&self, d: usize) -> Self {
        let d = d.min(self.degree);
        let k = Basis::new(self.n, self.degree).len_through_degree(d);
        OperatorMatrix {
            space: self.space,
            n: self.n,
            degree: d,
            mat: self.mat.view((0, 0), (k, k)).into_owned(),
        }
    }

    pub fn frobenius(&self) -> T {
        self.mat.norm()
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.space != rhs.space || self.n != rhs.n || self.degree != rhs.degree {
            return Err(CoreError::ShapeMismatch(format!(
                "({}, n={}, N={}) vs ({}, n={}, N={})",
                self.space, self.n, self.degree, rhs.space, rhs.n, rhs.degree
            )));
        }
        Ok(())
    }
}

/// Relative 2-norm distance ||a - b|| / ||b||.
pub fn relative_error<T: Real>(a: &OperatorMatrix<T>, b: &OperatorMatrix<T>) -> Result<T> {
    let diff = a.sub(b)?;
    let denom = b.norm2();
    if denom == T::zero() {
        return Ok(diff.norm2());
    }
    Ok(diff.norm2() / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn diag(space: Space, entries: &[f64]) -> OperatorMatrix<f64> {
        let deg = entries.len() - 1;
        let mut m = OperatorMatrix::zeros(space, 1, deg);
        for (k, &v) in entries.iter().enumerate() {
            m.mat[(k, k)] = Complex::new(v, 0.0);
        }
        m
    }

    #[test]
    fn spectral_norm_diagonal() {
        let m = diag(Space::Fock, &[0.5, 0.25, 0.125]);
        assert_relative_eq!(m.norm2(), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn spectral_norm_complex_rotation() {
        // unitary => norm 1
        let mut m = OperatorMatrix::<f64>::zeros(Space::Fock, 1, 1);
        let c = Complex::new(0.6, 0.8);
        m.mat[(0, 1)] = c;
        m.mat[(1, 0)] = -c.conj();
        assert_relative_eq!(m.norm2(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn rank_one_update_and_restricted_norm() {
        let mut m = OperatorMatrix::<f64>::zeros(Space::Bergman, 1, 2);
        let x = CVector::<f64>::from_vec(vec![
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
        ]);
        let y = CVector::<f64>::from_vec(vec![
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(2.0, 0.0),
        ]);
        m.add_scaled_outer(Complex::new(1.0, 0.0), &x, &y);
        // only entry (0,2) = 2; restricting inputs to degree <= 1 kills it
        assert_relative_eq!(m.norm2(), 2.0, max_relative = 1e-12);
        assert!(m.norm2_restricted(1) < 1e-14);
    }

    #[test]
    fn adjoint_product_rule() {
        let a = diag(Space::Fock, &[1.0, 2.0]);
        let mut b = OperatorMatrix::<f64>::zeros(Space::Fock, 1, 1);
        b.mat[(0, 1)] = Complex::new(0.0, 1.0);
        let ab = a.matmul(&b).unwrap();
        let lhs = ab.adjoint();
        let rhs = b.adjoint().matmul(&a.adjoint()).unwrap();
        assert!((lhs.sub(&rhs).unwrap()).norm2() < 1e-14);
    }

    #[test]
    fn shape_mismatch_detected() {
        let a = OperatorMatrix::<f64>::identity(Space::Fock, 1, 2);
        let b = OperatorMatrix::<f64>::identity(Space::Bergman, 1, 2);
        assert!(a.matmul(&b).is_err());
    }
}
