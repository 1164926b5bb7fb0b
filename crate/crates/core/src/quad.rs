//! Gaussian quadrature built by Golub–Welsch on the three-term recurrence,
//! plus the polar product rules used for the Gaussian plane and the unit ball.
//!
//! All rules integrate monomial pairs `z^a conj(z)^b` exactly up to the degree
//! they are built for; that exactness is what the kernel/orthonormality tests
//! lean on, so rule constructors are deliberately conservative about node
//! counts.

use crate::error::{CoreError, Result};
use crate::scalar::Real;
use nalgebra::DMatrix;

/// One-dimensional rule: sum w_i f(x_i).
#[derive(Clone, Debug)]
pub struct Rule1D<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> Rule1D<T> {
    pub fn integrate(&self, mut f: impl FnMut(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Golub–Welsch with polishing: nodes start as the eigenvalues of the
/// symmetric tridiagonal Jacobi matrix (diagonal `a`, off-diagonal `b`), are
/// refined by two Newton steps on the orthonormal polynomial of degree m, and
/// weights come from the Christoffel function w_i = 1 / sum_k p_k(x_i)^2.
/// Raw eigenvector-first-component weights only carry absolute accuracy, which
/// is fatal for the exponentially small tail weights of Laguerre rules; the
/// Christoffel route keeps them accurate in the relative sense.
fn golub_welsch<T: Real>(a: &[T], b: &[T], mu0: T) -> Rule1D<T> {
    let m = a.len();
    debug_assert_eq!(b.len(), m.saturating_sub(1));
    let mut j = DMatrix::<T>::zeros(m, m);
    for i in 0..m {
        j[(i, i)] = a[i];
    }
    for i in 0..m - 1 {
        j[(i, i + 1)] = b[i];
        j[(i + 1, i)] = b[i];
    }
    let eig = j.symmetric_eigen();
    let mut nodes: Vec<T> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|p, q| p.partial_cmp(q).expect("finite nodes"));

    // orthonormal recurrence values p_0..p_m and derivative of p_m at x
    let eval = |x: T| -> (Vec<T>, T) {
        let mut p = Vec::with_capacity(m + 1);
        let mut dp_prev = T::zero(); // p'_{k-1}
        let mut dp = T::zero(); // p'_k
        p.push(T::one() / mu0.sqrt());
        for k in 0..m {
            let pk = p[k];
            let pkm1 = if k == 0 { T::zero() } else { p[k - 1] };
            let bkm1 = if k == 0 { T::zero() } else { b[k - 1] };
            let next = ((x - a[k]) * pk - bkm1 * pkm1) / b_at(b, k);
            let dnext = (pk + (x - a[k]) * dp - bkm1 * dp_prev) / b_at(b, k);
            p.push(next);
            dp_prev = dp;
            dp = dnext;
        }
        (p, dp)
    };

    let mut weights = Vec::with_capacity(m);
    for x in nodes.iter_mut() {
        for _ in 0..2 {
            let (p, dpm) = eval(*x);
            let pm = p[m];
            if dpm != T::zero() {
                let step = pm / dpm;
                *x -= step;
            }
        }
        let (p, _) = eval(*x);
        let ssq: T = p[..m].iter().map(|&v| v * v).sum();
        weights.push(T::one() / ssq);
    }
    Rule1D { nodes, weights }
}

// off-diagonal entry b_k, with the final recurrence step normalized by a
// placeholder 1 (p_m is only used for root finding, so its scale is free)
fn b_at<T: Real>(b: &[T], k: usize) -> T {
    if k < b.len() {
        b[k]
    } else {
        T::one()
    }
}

/// Gauss–Legendre on [lo, hi] with m nodes (exact on polynomials of degree 2m-1).
pub fn gauss_legendre<T: Real>(m: usize, lo: T, hi: T) -> Rule1D<T> {
    assert!(m >= 1);
    let a = vec![T::zero(); m];
    let b: Vec<T> = (1..m)
        .map(|k| {
            let k = T::of_usize(k);
            let four = T::of(4.0);
            k / (four * k * k - T::one()).sqrt()
        })
        .collect();
    let base = golub_welsch(&a, &b, T::of(2.0));
    // map [-1,1] -> [lo,hi]
    let half = (hi - lo) / T::of(2.0);
    let mid = (hi + lo) / T::of(2.0);
    Rule1D {
        nodes: base.nodes.iter().map(|&x| mid + half * x).collect(),
        weights: base.weights.iter().map(|&w| w * half).collect(),
    }
}

/// Gauss–Laguerre with weight e^{-x} on [0, inf), m nodes.
pub fn gauss_laguerre<T: Real>(m: usize) -> Rule1D<T> {
    assert!(m >= 1);
    let a: Vec<T> = (0..m).map(|k| T::of_usize(2 * k + 1)).collect();
    let b: Vec<T> = (1..m).map(|k| T::of_usize(k)).collect();
    golub_welsch(&a, &b, T::one())
}

/// Uniform angular rule: theta_j = 2 pi j / m with weight 1/m (trapezoid on the
/// circle; exact for e^{i k theta} whenever |k| < m).
pub fn angles<T: Real>(m: usize) -> Rule1D<T> {
    let two_pi = T::two_pi();
    Rule1D {
        nodes: (0..m)
            .map(|j| two_pi * T::of_usize(j) / T::of_usize(m))
            .collect(),
        weights: vec![T::one() / T::of_usize(m); m],
    }
}

/// Radial rule for the truncated Mobius-invariant measure on the ball,
/// n complex dimensions: integrates g(rho) against d lambda restricted to
/// beta(0,.) <= beta_max, via the substitution rho = tanh(beta):
/// integral_0^{beta_max} g(tanh beta) * 2n sinh^{2n-1}(beta) cosh(beta) d beta.
/// The integrand is analytic, so Gauss–Legendre in beta converges spectrally.
pub fn lambda_radial<T: Real>(n: usize, beta_max: T, m: usize) -> Rule1D<T> {
    let gl = gauss_legendre::<T>(m, T::zero(), beta_max);
    let two_n = T::of_usize(2 * n);
    let nodes: Vec<T> = gl.nodes.iter().map(|&b| b.tanh()).collect();
    let weights: Vec<T> = gl
        .nodes
        .iter()
        .zip(&gl.weights)
        .map(|(&b, &w)| {
            let sh = b.sinh();
            let ch = b.cosh();
            w * two_n * sh.powi(2 * n as i32 - 1) * ch
        })
        .collect();
    Rule1D { nodes, weights }
}

/// lambda(D(0, r)) for the ball in n complex dimensions: sinh^{2n}(r).
pub fn lambda_ball_volume<T: Real>(n: usize, r: T) -> T {
    r.sinh().powi(2 * n as i32)
}

/// Validate a requested polynomial-pair degree.
pub fn check_degree(degree: usize) -> Result<()> {
    if degree < 1 {
        return Err(CoreError::Parameter(
            "quadrature degree must be >= 1".into(),
        ));
    }
    Ok(())
}
