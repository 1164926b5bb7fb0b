//! Truncated numerical model of the Gaussian analytic-function space on C^n:
//! orthonormal monomial basis, reproducing kernels, polar Gaussian quadrature
//! for the family of Gaussian measures, p-norms, duality pairing, and Weyl
//! (phase-translation) operators.

use crate::error::{CoreError, Result};
use crate::geometry::Point;
use crate::linalg::{CMatrix, CVector, OperatorMatrix};
use crate::multiindex::{Basis, MultiIndex};
use crate::quad::{angles, gauss_laguerre, gauss_legendre};
use crate::scalar::{cabs, cexp, cx, factorial, Real};
use crate::Space;
use num_complex::Complex;

/// Parameters of the truncated Gaussian space: weight `t`, exponent `p`,
/// complex dimension `n`, and truncation degree `deg` (total degree of the
/// highest monomial kept).
#[derive(Clone, Debug)]
pub struct FockParams<T: Real> {
    pub t: T,
    pub p: T,
    pub n: usize,
    pub deg: usize,
}

impl<T: Real> FockParams<T> {
    pub fn new(t: T, p: T, n: usize, deg: usize) -> Result<Self> {
        if t <= T::zero() {
            return Err(CoreError::Parameter("gaussian weight t must be positive".into()));
        }
        if p <= T::one() {
            return Err(CoreError::Parameter("exponent p must satisfy 1 < p".into()));
        }
        if n == 0 {
            return Err(CoreError::Parameter("dimension n must be at least 1".into()));
        }
        Ok(FockParams { t, p, n, deg })
    }

    /// Conjugate exponent q with 1/p + 1/q = 1.
    pub fn q(&self) -> T {
        self.p / (self.p - T::one())
    }

    pub fn basis(&self) -> Basis {
        Basis::new(self.n, self.deg)
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }

    /// Orthonormal basis function value e_a(z) = z^a / sqrt(t^{|a|} a!).
    pub fn basis_eval(&self, a: &MultiIndex, z: &Point<T>) -> Complex<T> {
        let norm = (self.t.powi(a.degree() as i32) * a.fact::<T>()).sqrt();
        a.monomial(&z.0) / norm
    }

    /// Matrix of basis values, rows indexed by nodes and columns by basis
    /// functions in graded order. Building block for operator assembly.
    pub fn basis_matrix(&self, nodes: &[Point<T>]) -> CMatrix<T> {
        let basis = self.basis();
        let mut m = CMatrix::<T>::zeros(nodes.len(), basis.len());
        for (j, z) in nodes.iter().enumerate() {
            for (col, a) in basis.indices.iter().enumerate() {
                m[(j, col)] = self.basis_eval(a, z);
            }
        }
        m
    }

    /// Coefficients of the normalized kernel at z: c_a = conj(e_a(z)) *
    /// exp(-|z|^2/(2t)). The squared coefficient norm tends to 1 as the
    /// truncation degree grows.
    pub fn kernel_vector(&self, z: &Point<T>) -> CVector<T> {
        let basis = self.basis();
        let scale = (-z.norm_sq() / (T::of(2.0) * self.t)).exp();
        CVector::from_iterator(
            basis.len(),
            basis
                .indices
                .iter()
                .map(|a| self.basis_eval(a, z).conj() * cx(scale, T::zero())),
        )
    }

    /// Coefficients of the unnormalized kernel at z: c_a = conj(e_a(z)).
    pub fn kernel_vector_unnormalized(&self, z: &Point<T>) -> CVector<T> {
        let basis = self.basis();
        CVector::from_iterator(
            basis.len(),
            basis.indices.iter().map(|a| self.basis_eval(a, z).conj()),
        )
    }

    /// Evaluate a coefficient vector as a function of z.
    pub fn eval(&self, coeffs: &CVector<T>, z: &Point<T>) -> Complex<T> {
        let basis = self.basis();
        debug_assert_eq!(coeffs.len(), basis.len());
        basis
            .indices
            .iter()
            .enumerate()
            .map(|(i, a)| coeffs[i] * self.basis_eval(a, z))
            .fold(Complex::new(T::zero(), T::zero()), |acc, v| acc + v)
    }

    /// Kernel coefficients decay like |z|^{2k}/(t^k k!), so the truncated tail
    /// is only negligible while |z|^2/t stays below the truncation degree.
    pub fn kernel_tail_warning(&self, z: &Point<T>) -> Option<String> {
        if z.norm_sq() / self.t > T::of_usize(self.deg) {
            Some(format!(
                "kernel at |z|^2/t = {:.3} is not resolved by truncation degree {}",
                (z.norm_sq() / self.t).to64(),
                self.deg
            ))
        } else {
            None
        }
    }

    /// Phase-translation matrices mix degrees on the scale |z|^2/t; the
    /// compression is reliable only well inside the truncation.
    pub fn weyl_tail_warning(&self, z: &Point<T>) -> Option<String> {
        if z.norm_sq() / self.t > T::of_usize(self.deg) / T::of(4.0) {
            Some(format!(
                "translation by |z|^2/t = {:.3} exceeds a quarter of truncation degree {}",
                (z.norm_sq() / self.t).to64(),
                self.deg
            ))
        } else {
            None
        }
    }

    /// Duality pairing <f, g> by quadrature against the weight-t Gaussian
    /// measure. For truncated vectors this coincides with the coefficient dot
    /// product; the quadrature route exists to exercise the integral form.
    pub fn pairing(&self, f: &CVector<T>, g: &CVector<T>) -> Result<Complex<T>> {
        let rule = FockQuad::new(self.n, self.t, self.deg.max(1))?;
        Ok(rule.integrate(|z| self.eval(f, z) * self.eval(g, z).conj()))
    }

    /// Coefficient form of the duality pairing (exact for truncated vectors).
    pub fn pairing_coeff(&self, f: &CVector<T>, g: &CVector<T>) -> Complex<T> {
        f.dotc(g).conj()
    }

    /// p-norm via quadrature of |f|^p against the Gaussian measure of weight
    /// 2t/p, with one refinement step that must agree to 1e-6 relative.
    pub fn p_norm(&self, f: &CVector<T>) -> Result<T> {
        fock_norm_p(self, f, self.p)
    }

    /// Compression of the phase-translation operator by z to degree <= deg,
    /// entries <W_z e_b, e_a>. Uses the closed-form matrix elements per
    /// coordinate (finite hypergeometric-type sum); an n-dimensional entry is
    /// the product of its coordinate entries.
    pub fn weyl_matrix(&self, z: &Point<T>) -> Result<OperatorMatrix<T>> {
        if z.n() != self.n {
            return Err(CoreError::ShapeMismatch(format!(
                "point has {} coordinates, space has {}",
                z.n(),
                self.n
            )));
        }
        let basis = self.basis();
        let dim = basis.len();
        // Precompute the 1-D tables for every coordinate.
        let tables: Vec<CMatrix<T>> = (0..self.n)
            .map(|j| weyl_1d_table(z.0[j], self.t, self.deg))
            .collect();
        let mut m = CMatrix::<T>::zeros(dim, dim);
        for (col, b) in basis.indices.iter().enumerate() {
            for (row, a) in basis.indices.iter().enumerate() {
                let mut v = Complex::new(T::one(), T::zero());
                for j in 0..self.n {
                    v *= tables[j][(a.0[j] as usize, b.0[j] as usize)];
                }
                m[(row, col)] = v;
            }
        }
        Ok(OperatorMatrix::from_mat(Space::Fock, self.n, self.deg, m))
    }
}

/// Reproducing kernel value exp(w . conj(z) / t).
pub fn fock_kernel<T: Real>(z: &Point<T>, w: &Point<T>, t: T) -> Complex<T> {
    cexp(w.herm_dot(z) / cx(t, T::zero()))
}

/// Normalized kernel value k_z(w) = exp(w . conj(z)/t - |z|^2/(2t)).
pub fn fock_kernel_normalized<T: Real>(z: &Point<T>, w: &Point<T>, t: T) -> Complex<T> {
    let ex = w.herm_dot(z) / cx(t, T::zero()) - cx(z.norm_sq() / (T::of(2.0) * t), T::zero());
    cexp(ex)
}

/// One-coordinate closed form of the compressed phase-translation operator:
/// A[m, k] = exp(-|z|^2/(2t)) sqrt(t^m m! / (t^k k!))
///           * sum_{i<=min(m,k)} C(k,i) (-z)^{k-i} (conj(z)/t)^{m-i} / (m-i)!.
fn weyl_1d_table<T: Real>(z: Complex<T>, t: T, deg: usize) -> CMatrix<T> {
    let dim = deg + 1;
    let mut a = CMatrix::<T>::zeros(dim, dim);
    let pref = (-z.norm_sqr() / (T::of(2.0) * t)).exp();
    let zbar_t = z.conj() / cx(t, T::zero());
    let neg_z = -z;
    for m in 0..dim {
        for k in 0..dim {
            let scale = (t.powi(m as i32) * factorial::<T>(m)
                / (t.powi(k as i32) * factorial::<T>(k)))
            .sqrt();
            let mut sum = Complex::new(T::zero(), T::zero());
            for i in 0..=m.min(k) {
                let c = crate::scalar::binomial::<T>(k, i);
                let term = neg_z.powu((k - i) as u32) * zbar_t.powu((m - i) as u32)
                    / cx(factorial::<T>(m - i), T::zero());
                sum += term * cx(c, T::zero());
            }
            a[(m, k)] = sum * cx(pref * scale, T::zero());
        }
    }
    a
}

/// p-norm of a coefficient vector for any exponent p >= 1 (the params only
/// constrain their own p; limit exponents are allowed here for diagnostics).
///
/// |f|^p is smooth in the radius r but not in r^2, so this uses a polar rule
/// with Gauss-Legendre in r itself rather than the moment-exact Laguerre rule,
/// and accepts the value only once one refinement agrees to 1e-6 relative.
pub fn fock_norm_p<T: Real>(params: &FockParams<T>, f: &CVector<T>, p: T) -> Result<T> {
    if p < T::one() {
        return Err(CoreError::Parameter("norm exponent must satisfy p >= 1".into()));
    }
    let t_w = T::of(2.0) * params.t / p;
    // cutoff: e^{-R^2/t} must dominate the polynomial growth r^{p deg}
    let dpow = p.to64() * params.deg as f64;
    let mut u = 40.0 + dpow;
    for _ in 0..3 {
        u = 40.0 + 0.5 * dpow * (t_w.to64() * u).max(1.0).ln();
    }
    let rmax = (t_w * T::of(u)).sqrt();
    let eval_norm = |m_r: usize, m_ang: usize| -> T {
        let nodes1 = polar_r_nodes(t_w, rmax, m_r, m_ang);
        let (nodes, weights) = tensor_nodes(&nodes1, params.n);
        let mut acc = T::zero();
        for (node, w) in nodes.iter().zip(&weights) {
            let v = cabs(params.eval(f, node));
            acc += *w * v.powf(p);
        }
        acc.powf(T::one() / p)
    };
    let (mut m_r, mut m_ang) = if params.n == 1 {
        (params.deg + 48, 4 * params.deg + 16)
    } else {
        (params.deg + 28, 2 * params.deg + 8)
    };
    let mut prev = eval_norm(m_r, m_ang);
    let mut last_gap = f64::INFINITY;
    for _ in 0..3 {
        m_r += m_r / 2;
        m_ang += m_ang / 2;
        let next = eval_norm(m_r, m_ang);
        let denom = next.abs().max(T::of(1e-300));
        last_gap = ((next - prev).abs() / denom).to64();
        if last_gap <= 1e-6 {
            return Ok(next);
        }
        prev = next;
    }
    Err(CoreError::QuadratureNonconvergence {
        context: format!("p-norm with p = {}", p),
        disagreement: last_gap,
        gate: 1e-6,
    })
}

/// 1-D polar node/weight set for the weight-t Gaussian measure with the
/// radius integrated by Gauss-Legendre in r on [0, rmax].
fn polar_r_nodes<T: Real>(t_w: T, rmax: T, m_r: usize, m_ang: usize) -> Vec<(Complex<T>, T)> {
    let gl = gauss_legendre::<T>(m_r, T::zero(), rmax);
    let ang = angles::<T>(m_ang);
    let two_over_t = T::of(2.0) / t_w;
    let mut out = Vec::with_capacity(m_r * m_ang);
    for (r, wr) in gl.nodes.iter().zip(&gl.weights) {
        let radial_w = *wr * two_over_t * (-*r * *r / t_w).exp() * *r;
        for (th, wth) in ang.nodes.iter().zip(&ang.weights) {
            out.push((Complex::new(*r * th.cos(), *r * th.sin()), radial_w * *wth));
        }
    }
    out
}

/// Tensorize a 1-D complex node set over n coordinates.
fn tensor_nodes<T: Real>(nodes1: &[(Complex<T>, T)], n: usize) -> (Vec<Point<T>>, Vec<T>) {
    let total = nodes1.len().pow(n as u32);
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    let mut idx = vec![0usize; n];
    'outer: loop {
        let mut coords = Vec::with_capacity(n);
        let mut w = T::one();
        for &i in idx.iter() {
            coords.push(nodes1[i].0);
            w *= nodes1[i].1;
        }
        nodes.push(Point(coords));
        weights.push(w);
        let mut j = 0;
        loop {
            idx[j] += 1;
            if idx[j] < nodes1.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
            if j == n {
                break 'outer;
            }
        }
    }
    (nodes, weights)
}

/// Polar Gaussian quadrature for the weight-t Gaussian probability measure on
/// C^n: per coordinate, Gauss-Laguerre in x = r^2/t tensorized with a uniform
/// angle rule. Exact for monomial pairs w^a conj(w)^b with |a|, |b| <= degree,
/// with radial headroom of one extra polynomial order.
#[derive(Clone, Debug)]
pub struct FockQuad<T: Real> {
    pub nodes: Vec<Point<T>>,
    pub weights: Vec<T>,
    pub t_weight: T,
    pub degree: usize,
}

impl<T: Real> FockQuad<T> {
    pub fn new(n: usize, t_weight: T, degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(CoreError::Parameter("quadrature degree must be at least 1".into()));
        }
        if t_weight <= T::zero() {
            return Err(CoreError::Parameter("gaussian weight must be positive".into()));
        }
        if n == 0 {
            return Err(CoreError::Parameter("dimension must be at least 1".into()));
        }
        let radial = gauss_laguerre::<T>(degree + 2);
        let m_ang = if n == 1 { 4 * degree + 4 } else { 2 * degree + 2 };
        let ang = angles::<T>(m_ang);
        // 1-D polar nodes (radius, angle) with combined weights
        let mut nodes1 = Vec::with_capacity(radial.nodes.len() * m_ang);
        for (x, wx) in radial.nodes.iter().zip(&radial.weights) {
            let r = (t_weight * *x).sqrt();
            for (th, wth) in ang.nodes.iter().zip(&ang.weights) {
                nodes1.push((Complex::new(r * th.cos(), r * th.sin()), *wx * *wth));
            }
        }
        let (nodes, weights) = tensor_nodes(&nodes1, n);
        Ok(FockQuad { nodes, weights, t_weight, degree })
    }

    pub fn integrate(&self, f: impl Fn(&Point<T>) -> Complex<T>) -> Complex<T> {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(z, w)| f(z) * cx(*w, T::zero()))
            .fold(Complex::new(T::zero(), T::zero()), |a, b| a + b)
    }

    /// Largest relative error of the radial moments int |z|^{2k} = t^k
    /// (n-1+k)!/(n-1)! for k up to the declared degree.
    pub fn moment_error(&self) -> f64 {
        let n = self.nodes.first().map(|p| p.n()).unwrap_or(1);
        let mut worst = 0.0f64;
        for k in 0..=self.degree {
            let got: T = self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(z, w)| *w * z.norm_sq().powi(k as i32))
                .sum();
            let want = self.t_weight.to64().powi(k as i32) * factorial::<f64>(n - 1 + k)
                / factorial::<f64>(n - 1);
            let rel = ((got.to64() - want) / want).abs();
            if rel > worst {
                worst = rel;
            }
        }
        worst
    }
}
