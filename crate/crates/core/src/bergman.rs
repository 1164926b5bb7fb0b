//! Truncated numerical model of the analytic function space on the unit ball
//! of C^n with Lebesgue-normalized volume: orthonormal monomial basis,
//! rational reproducing kernels, disk quadrature for the volume and the
//! invariant measure, p-norms, pairing, and the involutive covariance
//! operators built from the ball automorphisms.

use crate::error::{CoreError, Result};
use crate::geometry::{mobius, Point};
use crate::linalg::{CMatrix, CVector, OperatorMatrix};
use crate::multiindex::{Basis, MultiIndex};
use crate::quad::{angles, gauss_legendre, lambda_radial};
use crate::scalar::{cabs, cpowf, cre, factorial, Real};
use crate::Space;
use num_complex::Complex;

/// Parameters of the truncated ball space: exponent `p`, dimension `n`,
/// truncation degree `deg`, and the localization weight exponent `s` with
/// 0 < s < min{p, q}.
#[derive(Clone, Debug)]
pub struct BergmanParams<T: Real> {
    pub p: T,
    pub n: usize,
    pub deg: usize,
    pub s: T,
}

impl<T: Real> BergmanParams<T> {
    pub fn new(p: T, n: usize, deg: usize, s: T) -> Result<Self> {
        if p <= T::one() {
            return Err(CoreError::Parameter("exponent p must satisfy 1 < p".into()));
        }
        if n == 0 {
            return Err(CoreError::Parameter("dimension n must be at least 1".into()));
        }
        let q = p / (p - T::one());
        if s <= T::zero() || s >= p.min(q) {
            return Err(CoreError::Parameter(
                "weight exponent must satisfy 0 < s < min(p, q)".into(),
            ));
        }
        Ok(BergmanParams { p, n, deg, s })
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

    /// Orthonormal basis value e_a(z) = z^a sqrt((n+|a|)! / (a! n!)).
    pub fn basis_eval(&self, a: &MultiIndex, z: &Point<T>) -> Complex<T> {
        a.monomial(&z.0) * cre(self.basis_norm(a))
    }

    fn basis_norm(&self, a: &MultiIndex) -> T {
        (factorial::<T>(self.n + a.degree()) / (a.fact::<T>() * factorial::<T>(self.n))).sqrt()
    }

    /// Matrix of basis values at the given nodes (rows = nodes).
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

    /// Coefficients of the unnormalized kernel at z: <K_z, e_a> = conj(e_a(z)).
    pub fn kernel_vector(&self, z: &Point<T>) -> CVector<T> {
        let basis = self.basis();
        CVector::from_iterator(
            basis.len(),
            basis.indices.iter().map(|a| self.basis_eval(a, z).conj()),
        )
    }

    /// Truncated coefficient 2-norm of K_z (approaches the closed form
    /// (1-|z|^2)^{-(n+1)/2} as the truncation degree grows).
    pub fn kernel_norm2(&self, z: &Point<T>) -> T {
        self.kernel_vector(z).norm()
    }

    /// Normalized kernel pair at z: (k_z, k_z-for-p), where k_z = K_z/|K_z|_2
    /// with the truncated norm and the p-version scales K_z by
    /// (1-|z|^2)^{(n+1)/q}.
    pub fn normalized_kernels(&self, z: &Point<T>) -> Result<(CVector<T>, CVector<T>)> {
        z.check_in_ball_named("kernel center")?;
        let kv = self.kernel_vector(z);
        let k = &kv / cre(self.kernel_norm2(z));
        let npow = (T::one() - z.norm_sq()).powf(T::of_usize(self.n + 1) / self.q());
        let kp = &kv * cre(npow);
        Ok((k, kp))
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

    /// Kernel coefficients at radius rho decay like rho^{2k} k^n, so the
    /// truncation only resolves points away from the boundary.
    pub fn kernel_tail_warning(&self, z: &Point<T>) -> Option<String> {
        let thresh = T::one() - T::of(10.0) / T::of_usize(self.deg.max(1));
        if z.norm() > thresh {
            Some(format!(
                "kernel at |z| = {:.4} is not resolved by truncation degree {}",
                z.norm().to64(),
                self.deg
            ))
        } else {
            None
        }
    }

    /// Pairing <f, g> = int f conj(g) dv by quadrature (exact for truncated
    /// vectors at this rule degree).
    pub fn pairing(&self, f: &CVector<T>, g: &CVector<T>) -> Result<Complex<T>> {
        let rule = DiskQuad::new(self.n, self.deg.max(1), DiskMeasure::Volume)?;
        Ok(rule.integrate(|z| self.eval(f, z) * self.eval(g, z).conj()))
    }

    /// Coefficient form of the pairing (exact for truncated vectors).
    pub fn pairing_coeff(&self, f: &CVector<T>, g: &CVector<T>) -> Complex<T> {
        f.dotc(g).conj()
    }

    /// p-norm by quadrature of |f|^p against dv, with a refinement step that
    /// must agree to 1e-6 relative. Radial integration runs in r itself since
    /// |f|^p is smooth in r but not in r^2.
    pub fn p_norm(&self, f: &CVector<T>) -> Result<T> {
        bergman_norm_p(self, f, self.p)
    }

    /// Compression of the involutive covariance operator at z: entries
    /// <U_z e_b, e_a> with (U_z f)(w) = f(phi_z(w)) k_z(w), where k_z uses the
    /// exact normalization (1-|z|^2)^{(n+1)/2} K_z. Assembled by quadrature at
    /// rule degree 4 deg with one refinement accepted at 1e-8 relative.
    pub fn u_matrix(&self, z: &Point<T>) -> Result<OperatorMatrix<T>> {
        z.check_in_ball_named("kernel center")?;
        let basis = self.basis();
        let dim = basis.len();
        let assemble = |degree: usize| -> Result<CMatrix<T>> {
            let rule = DiskQuad::new(self.n, degree, DiskMeasure::Volume)?;
            let mut e = CMatrix::<T>::zeros(rule.nodes.len(), dim);
            for (j, w) in rule.nodes.iter().enumerate() {
                let phi = mobius(z, w)?;
                let kzw = normalized_kernel_value(z, w, self.n);
                for (col, b) in basis.indices.iter().enumerate() {
                    e[(j, col)] = self.basis_eval(b, &phi) * kzw;
                }
            }
            // <U_z e_b, e_a> = sum_j w_j U_z e_b(x_j) conj(e_a(x_j))
            let eb = self.basis_matrix(&rule.nodes);
            let mut weighted = e;
            for (j, w) in rule.weights.iter().enumerate() {
                for col in 0..dim {
                    weighted[(j, col)] *= cre(*w);
                }
            }
            Ok(eb.adjoint() * weighted)
        };
        let coarse = assemble(4 * self.deg.max(1))?;
        let fine = assemble(4 * self.deg.max(1) + 8)?;
        let diff = (&fine - &coarse).norm();
        let denom = fine.norm().max(T::of(1e-300));
        let rel = (diff / denom).to64();
        if rel > 1e-8 {
            return Err(CoreError::QuadratureNonconvergence {
                context: format!("covariance operator at |z| = {:.4}", z.norm().to64()),
                disagreement: rel,
                gate: 1e-8,
            });
        }
        Ok(OperatorMatrix::from_mat(Space::Bergman, self.n, self.deg, fine))
    }
}

/// Reproducing kernel value K_z(w) = (1 - w . conj(z))^{-(n+1)}.
pub fn bergman_kernel<T: Real>(z: &Point<T>, w: &Point<T>) -> Complex<T> {
    let denom = Complex::new(T::one(), T::zero()) - w.herm_dot(z);
    cpowf(denom, -T::of_usize(z.n() + 1))
}

/// Exactly normalized kernel value k_z(w) = (1-|z|^2)^{(n+1)/2} K_z(w).
pub fn normalized_kernel_value<T: Real>(z: &Point<T>, w: &Point<T>, n: usize) -> Complex<T> {
    let scale = (T::one() - z.norm_sq()).powf(T::of_usize(n + 1) / T::of(2.0));
    bergman_kernel(z, w) * cre(scale)
}

/// Unitary-phase factor eta(u, z) = |1-u.conj(z)|^{n+1} / (1-u.conj(z))^{n+1}
/// relating U_u k_z to k at the automorphism image of z.
pub fn eta_phase<T: Real>(u: &Point<T>, z: &Point<T>) -> Complex<T> {
    let d = Complex::new(T::one(), T::zero()) - u.herm_dot(z);
    let np1 = T::of_usize(u.n() + 1);
    cre(cabs(d).powf(np1)) / cpowf(d, np1)
}

/// Exact closed form of the kernel 2-norm, (1-|z|^2)^{-(n+1)/2}.
pub fn kernel_norm2_exact<T: Real>(z: &Point<T>) -> T {
    (T::one() - z.norm_sq()).powf(-T::of_usize(z.n() + 1) / T::of(2.0))
}

/// Which measure a disk rule integrates.
#[derive(Clone, Debug, PartialEq)]
pub enum DiskMeasure<T: Real> {
    /// Normalized volume on the ball.
    Volume,
    /// Invariant measure dv/(1-|w|^2)^{n+1}, truncated to |w| <= rho_max.
    InvariantTruncated { rho_max: T },
}

/// Quadrature on the unit ball: radial Gauss rules tensorized with uniform
/// angles, exact on monomial pairs up to the requested degree against dv. The
/// invariant-measure variant integrates in the hyperbolic radial coordinate.
#[derive(Clone, Debug)]
pub struct DiskQuad<T: Real> {
    pub nodes: Vec<Point<T>>,
    pub weights: Vec<T>,
    pub degree: usize,
}

impl<T: Real> DiskQuad<T> {
    pub fn new(n: usize, degree: usize, measure: DiskMeasure<T>) -> Result<Self> {
        if degree < 1 {
            return Err(CoreError::Parameter("quadrature degree must be at least 1".into()));
        }
        match (n, measure) {
            (0, _) => Err(CoreError::Parameter("dimension must be at least 1".into())),
            (1, DiskMeasure::Volume) => {
                // int f dv = int_0^1 avg_theta f(sqrt(x) e^{i th}) dx
                let gl = gauss_legendre::<T>(degree + 2, T::zero(), T::one());
                let ang = angles::<T>(4 * degree + 4);
                let mut nodes = Vec::new();
                let mut weights = Vec::new();
                for (x, wx) in gl.nodes.iter().zip(&gl.weights) {
                    let r = x.sqrt();
                    for (th, wth) in ang.nodes.iter().zip(&ang.weights) {
                        nodes.push(Point(vec![Complex::new(r * th.cos(), r * th.sin())]));
                        weights.push(*wx * *wth);
                    }
                }
                Ok(DiskQuad { nodes, weights, degree })
            }
            (2, DiskMeasure::Volume) => {
                // simplex in x = (|w1|^2, |w2|^2) via the square map
                // x1 = u s, x2 = u (1-s), jacobian u, times 2 from the density
                let glu = gauss_legendre::<T>(degree + 3, T::zero(), T::one());
                let gls = gauss_legendre::<T>(degree + 2, T::zero(), T::one());
                let ang = angles::<T>(2 * degree + 2);
                let mut nodes = Vec::new();
                let mut weights = Vec::new();
                for (u, wu) in glu.nodes.iter().zip(&glu.weights) {
                    for (s, ws) in gls.nodes.iter().zip(&gls.weights) {
                        let r1 = (*u * *s).sqrt();
                        let r2 = (*u * (T::one() - *s)).sqrt();
                        let base = T::of(2.0) * *u * *wu * *ws;
                        for (t1, w1) in ang.nodes.iter().zip(&ang.weights) {
                            for (t2, w2) in ang.nodes.iter().zip(&ang.weights) {
                                nodes.push(Point(vec![
                                    Complex::new(r1 * t1.cos(), r1 * t1.sin()),
                                    Complex::new(r2 * t2.cos(), r2 * t2.sin()),
                                ]));
                                weights.push(base * *w1 * *w2);
                            }
                        }
                    }
                }
                Ok(DiskQuad { nodes, weights, degree })
            }
            (1, DiskMeasure::InvariantTruncated { rho_max }) => {
                if rho_max >= T::one() || rho_max <= T::zero() {
                    return Err(CoreError::Parameter(
                        "invariant-measure cutoff must lie in (0, 1)".into(),
                    ));
                }
                let beta_max = rho_max.atanh();
                let m = 2 * degree + 8 + (beta_max.to64() * 8.0) as usize;
                let radial = lambda_radial::<T>(1, beta_max, m);
                let ang = angles::<T>(4 * degree + 4);
                let mut nodes = Vec::new();
                let mut weights = Vec::new();
                for (rho, wr) in radial.nodes.iter().zip(&radial.weights) {
                    for (th, wth) in ang.nodes.iter().zip(&ang.weights) {
                        nodes.push(Point(vec![Complex::new(
                            *rho * th.cos(),
                            *rho * th.sin(),
                        )]));
                        weights.push(*wr * *wth);
                    }
                }
                Ok(DiskQuad { nodes, weights, degree })
            }
            (2, DiskMeasure::InvariantTruncated { rho_max }) => {
                if rho_max >= T::one() || rho_max <= T::zero() {
                    return Err(CoreError::Parameter(
                        "invariant-measure cutoff must lie in (0, 1)".into(),
                    ));
                }
                // radial hyperbolic rule times the unit-sphere rule in C^2,
                // parametrized by x = sin^2 psi and two angles
                let beta_max = rho_max.atanh();
                let m = 2 * degree + 8 + (beta_max.to64() * 8.0) as usize;
                let radial = lambda_radial::<T>(2, beta_max, m);
                let glx = gauss_legendre::<T>(degree + 2, T::zero(), T::one());
                let ang = angles::<T>(2 * degree + 2);
                let mut nodes = Vec::new();
                let mut weights = Vec::new();
                for (rho, wr) in radial.nodes.iter().zip(&radial.weights) {
                    for (x, wx) in glx.nodes.iter().zip(&glx.weights) {
                        let c = (T::one() - *x).sqrt();
                        let s = x.sqrt();
                        for (t1, w1) in ang.nodes.iter().zip(&ang.weights) {
                            for (t2, w2) in ang.nodes.iter().zip(&ang.weights) {
                                nodes.push(Point(vec![
                                    Complex::new(*rho * c * t1.cos(), *rho * c * t1.sin()),
                                    Complex::new(*rho * s * t2.cos(), *rho * s * t2.sin()),
                                ]));
                                weights.push(*wr * *wx * *w1 * *w2);
                            }
                        }
                    }
                }
                Ok(DiskQuad { nodes, weights, degree })
            }
            _ => Err(CoreError::Parameter(
                "disk quadrature implemented for n in {1, 2}".into(),
            )),
        }
    }

    pub fn integrate(&self, f: impl Fn(&Point<T>) -> Complex<T>) -> Complex<T> {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(z, w)| f(z) * cre(*w))
            .fold(Complex::new(T::zero(), T::zero()), |a, b| a + b)
    }

    /// Largest relative error of the volume moments int |w|^{2k} dv =
    /// k! n! / (n+k)! for k up to the declared degree.
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
            let want = factorial::<f64>(k) * factorial::<f64>(n) / factorial::<f64>(n + k);
            let rel = ((got.to64() - want) / want).abs();
            if rel > worst {
                worst = rel;
            }
        }
        worst
    }
}

/// p-norm for any exponent p >= 1 against dv (limit exponents allowed for
/// diagnostics; params validation still restricts its own p to (1, inf)).
pub fn bergman_norm_p<T: Real>(params: &BergmanParams<T>, f: &CVector<T>, p: T) -> Result<T> {
    if p < T::one() {
        return Err(CoreError::Parameter("norm exponent must satisfy p >= 1".into()));
    }
    let eval_norm = |m_r: usize, m_ang: usize| -> T {
        let mut acc = T::zero();
        match params.n {
            1 => {
                // int |f|^p dv = int_0^1 avg_theta |f(r e^{i th})|^p 2 r dr
                let gl = gauss_legendre::<T>(m_r, T::zero(), T::one());
                let ang = angles::<T>(m_ang);
                for (r, wr) in gl.nodes.iter().zip(&gl.weights) {
                    for (th, wth) in ang.nodes.iter().zip(&ang.weights) {
                        let z = Point(vec![Complex::new(*r * th.cos(), *r * th.sin())]);
                        let v = cabs(params.eval(f, &z));
                        acc += T::of(2.0) * *r * *wr * *wth * v.powf(p);
                    }
                }
            }
            2 => {
                // quarter-disk radii via r1 = c, r2 = s sqrt(1-c^2):
                // int f dv = 8 int int avg f c s (1-c^2) ds dc
                let glc = gauss_legendre::<T>(m_r, T::zero(), T::one());
                let gls = gauss_legendre::<T>(m_r, T::zero(), T::one());
                let ang = angles::<T>(m_ang);
                for (c, wc) in glc.nodes.iter().zip(&glc.weights) {
                    let rim = (T::one() - *c * *c).sqrt();
                    for (s, ws) in gls.nodes.iter().zip(&gls.weights) {
                        let r2 = *s * rim;
                        let base =
                            T::of(8.0) * *c * *s * (T::one() - *c * *c) * *wc * *ws;
                        for (t1, w1) in ang.nodes.iter().zip(&ang.weights) {
                            for (t2, w2) in ang.nodes.iter().zip(&ang.weights) {
                                let z = Point(vec![
                                    Complex::new(*c * t1.cos(), *c * t1.sin()),
                                    Complex::new(r2 * t2.cos(), r2 * t2.sin()),
                                ]);
                                let v = cabs(params.eval(f, &z));
                                acc += base * *w1 * *w2 * v.powf(p);
                            }
                        }
                    }
                }
            }
            _ => unreachable!("validated in params"),
        }
        acc.powf(T::one() / p)
    };
    let (mut m_r, mut m_ang) = if params.n == 1 {
        (params.deg + 32, 4 * params.deg + 16)
    } else {
        (params.deg + 20, 2 * params.deg + 8)
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
        context: format!("ball p-norm with p = {}", p),
        disagreement: last_gap,
        gate: 1e-6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::bergman_metric;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn params(p: f64, n: usize, deg: usize) -> BergmanParams<f64> {
        BergmanParams::new(p, n, deg, 1.0).unwrap()
    }

    #[test]
    fn kernel_trivial_and_norm() {
        let w = Point::c1(Complex::new(0.3, -0.4));
        let k0 = bergman_kernel(&Point::origin(1), &w);
        // K_0(w) = 1 as a function of z = 0? K_z(w) with z = 0 -> 1
        assert_abs_diff_eq!(
            bergman_kernel(&Point::<f64>::origin(1), &w).re,
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(k0.im, 0.0, epsilon = 1e-15);
        // |K_z|_2 at z = 0.5: series sum (k+1)|z|^{2k} = 1/(0.75)^2, norm 1/0.75
        let pr = params(2.0, 1, 160);
        let z = Point::re1(0.5);
        assert_relative_eq!(pr.kernel_norm2(&z), 1.0 / 0.75, max_relative = 1e-10);
        assert_relative_eq!(kernel_norm2_exact(&z), 1.0 / 0.75, max_relative = 1e-14);
    }

    #[test]
    fn reproducing_on_cube() {
        // <w^3, K_z> = z^3 with exact quadrature
        let pr = params(2.0, 1, 5);
        let mut f = CVector::<f64>::zeros(pr.dim());
        // w^3 = e_3 / 2 since e_3 = 2 w^3
        f[3] = Complex::new(0.5, 0.0);
        let z = Point::c1(Complex::new(0.4, 0.3));
        let got = pr.pairing(&f, &pr.kernel_vector(&z)).unwrap();
        let want = z.0[0].powu(3);
        assert_abs_diff_eq!(got.re, want.re, epsilon = 1e-13);
        assert_abs_diff_eq!(got.im, want.im, epsilon = 1e-13);
    }

    #[test]
    fn normalized_kernels_match_examples() {
        // z = 0: both are the constant vector
        let pr = params(4.0, 1, 24);
        let (k, kp) = pr.normalized_kernels(&Point::origin(1)).unwrap();
        assert_relative_eq!(k[0].re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(kp[0].re, 1.0, max_relative = 1e-14);
        // p = 2: the two coincide (up to truncated-vs-exact normalization)
        let pr2 = params(2.0, 1, 80);
        let z = Point::re1(0.5);
        let (k2, kp2) = pr2.normalized_kernels(&z).unwrap();
        for i in 0..pr2.dim() {
            assert_abs_diff_eq!(k2[i].re, kp2[i].re, epsilon = 1e-12);
            assert_abs_diff_eq!(k2[i].im, kp2[i].im, epsilon = 1e-12);
        }
        // p = 4, z = 0.5: leading coefficient (0.75)^{1.5}
        let pr4 = params(4.0, 1, 24);
        let (_, kp4) = pr4.normalized_kernels(&z).unwrap();
        assert_relative_eq!(kp4[0].re, 0.75f64.powf(1.5), max_relative = 1e-12);
        assert_relative_eq!(kp4[0].re, 0.649519052838329, max_relative = 1e-9);
    }

    #[test]
    fn c_p_boundedness_over_grid() {
        // |k_z^{(p)}|_p stays within a two-sided constant over a z-grid
        let pr = params(3.0, 1, 40);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for rho in [0.0, 0.2, 0.4, 0.6] {
            for arg in [0.0, 1.0, 2.5] {
                let z = Point::c1(Complex::from_polar(rho, arg));
                let (_, kp) = pr.normalized_kernels(&z).unwrap();
                let nrm = pr.p_norm(&kp).unwrap();
                lo = lo.min(nrm);
                hi = hi.max(nrm);
            }
        }
        assert!(hi / lo < 4.0, "two-sided bound violated: [{lo}, {hi}]");
        assert!(lo > 0.25 && hi < 4.0);
    }

    #[test]
    fn volume_quadrature_moments() {
        let rule = DiskQuad::<f64>::new(1, 8, DiskMeasure::Volume).unwrap();
        let total: f64 = rule.weights.iter().sum();
        assert_relative_eq!(total, 1.0, max_relative = 1e-13);
        let m4 = rule.integrate(|z| cre(z.norm_sq().powi(4)));
        assert_relative_eq!(m4.re, 0.2, max_relative = 1e-12);
        assert!(rule.moment_error() < 1e-12);
        let rule2 = DiskQuad::<f64>::new(2, 6, DiskMeasure::Volume).unwrap();
        assert!(rule2.moment_error() < 1e-12);
        let t2: f64 = rule2.weights.iter().sum();
        assert_relative_eq!(t2, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn invariant_quadrature_mass() {
        // lambda(|w| <= tanh 1) = sinh^2(1)
        let rho = 1.0f64.tanh();
        let rule = DiskQuad::<f64>::new(1, 6, DiskMeasure::InvariantTruncated { rho_max: rho })
            .unwrap();
        let total: f64 = rule.weights.iter().sum();
        assert_relative_eq!(total, 1.0f64.sinh().powi(2), max_relative = 1e-10);
        // n = 2: mass sinh^4
        let rule2 = DiskQuad::<f64>::new(2, 4, DiskMeasure::InvariantTruncated { rho_max: rho })
            .unwrap();
        let total2: f64 = rule2.weights.iter().sum();
        assert_relative_eq!(total2, 1.0f64.sinh().powi(4), max_relative = 1e-10);
        // non-radial invariant integral: lambda-average of |w1|^2 over the
        // hyperbolic ball, cross-checked against the volume rule with the
        // invariant density
        let got = rule2.integrate(|z| cre(z.0[0].norm_sqr()));
        let dv = DiskQuad::<f64>::new(2, 40, DiskMeasure::Volume).unwrap();
        let want = dv.integrate(|z| {
            if z.norm_sq() <= rho * rho {
                cre(z.0[0].norm_sqr() / (1.0 - z.norm_sq()).powi(3))
            } else {
                Complex::new(0.0, 0.0)
            }
        });
        // the dv cross-check has an O(cell) cutoff error at the rim
        assert_relative_eq!(got.re, want.re, max_relative = 2e-2);
        assert!(DiskQuad::<f64>::new(1, 4, DiskMeasure::InvariantTruncated { rho_max: 1.0 })
            .is_err());
    }

    #[test]
    fn p_norms_and_pairing() {
        let pr = params(4.0, 1, 8);
        // |1|_p = 1
        let mut one = CVector::<f64>::zeros(pr.dim());
        one[0] = Complex::new(1.0, 0.0);
        assert_relative_eq!(pr.p_norm(&one).unwrap(), 1.0, max_relative = 1e-9);
        // |z|_4^4 = 1/3 -> |z|_4 = 3^{-1/4}
        let mut f = CVector::<f64>::zeros(pr.dim());
        f[1] = Complex::new(1.0 / 2.0f64.sqrt(), 0.0); // e_1 = sqrt(2) z
        assert_relative_eq!(
            pr.p_norm(&f).unwrap(),
            (1.0f64 / 3.0).powf(0.25),
            max_relative = 1e-8
        );
        // orthonormality through the quadrature pairing
        let pr2 = params(2.0, 2, 3);
        let basis = pr2.basis();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let mut a = CVector::<f64>::zeros(pr2.dim());
                let mut b = CVector::<f64>::zeros(pr2.dim());
                a[i] = Complex::new(1.0, 0.0);
                b[j] = Complex::new(1.0, 0.0);
                let got = pr2.pairing(&a, &b).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(got.re, want, epsilon = 1e-12);
                assert_abs_diff_eq!(got.im, 0.0, epsilon = 1e-12);
            }
        }
        // p = 2 equals coefficient norm
        let pr3 = params(2.0, 1, 8);
        let mut g = CVector::<f64>::zeros(pr3.dim());
        g[2] = Complex::new(0.7, -0.1);
        g[5] = Complex::new(-0.3, 0.9);
        let coeff: f64 = g.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert_relative_eq!(pr3.p_norm(&g).unwrap(), coeff, max_relative = 1e-9);
    }

    #[test]
    fn u_matrix_antipode_and_kernel_column() {
        let pr = params(2.0, 1, 10);
        let u0 = pr.u_matrix(&Point::origin(1)).unwrap();
        for k in 0..pr.dim() {
            let want = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_abs_diff_eq!(u0.mat[(k, k)].re, want, epsilon = 1e-12);
            for j in 0..pr.dim() {
                if j != k {
                    assert_abs_diff_eq!(u0.mat[(j, k)].norm_sqr(), 0.0, epsilon = 1e-24);
                }
            }
        }
        // column 0 = coefficients of k_z (exact normalization)
        let pr2 = params(2.0, 1, 24);
        let z = Point::c1(Complex::new(0.5, 0.0));
        let uz = pr2.u_matrix(&z).unwrap();
        let kv = pr2.kernel_vector(&z) * cre(0.75f64.powf(1.0));
        for i in 0..pr2.dim() {
            assert_abs_diff_eq!(uz.mat[(i, 0)].re, kv[i].re, epsilon = 1e-10);
            assert_abs_diff_eq!(uz.mat[(i, 0)].im, kv[i].im, epsilon = 1e-10);
        }
    }

    #[test]
    fn u_matrix_involution_and_self_adjoint() {
        let pr = params(2.0, 1, 24);
        let z = Point::re1(0.5);
        let uz = pr.u_matrix(&z).unwrap();
        let sq = uz.matmul(&uz).unwrap();
        let id = OperatorMatrix::<f64>::identity(Space::Bergman, 1, 24);
        let defect = sq.sub(&id).unwrap();
        assert!(defect.restrict(12).norm2() < 1e-6);
        // self-adjointness on the compression
        let adj_defect = uz.adjoint().sub(&uz).unwrap();
        assert!(adj_defect.restrict(12).norm2() < 1e-6);
    }

    #[test]
    fn u_matrix_kernel_covariance_phase() {
        // U_u k_z = eta(u, z) k_{phi_u(z)} on coefficient vectors
        let pr = params(2.0, 1, 30);
        let u = Point::c1(Complex::new(0.3, 0.2));
        let z = Point::c1(Complex::new(-0.25, 0.35));
        let uu = pr.u_matrix(&u).unwrap();
        let (kz, _) = pr.normalized_kernels(&z).unwrap();
        let got = &uu.mat * kz;
        let target = mobius(&u, &z).unwrap();
        let (kt, _) = pr.normalized_kernels(&target).unwrap();
        let eta = eta_phase(&u, &z);
        for i in 0..pr.dim() {
            let want = kt[i] * eta;
            assert_abs_diff_eq!(got[i].re, want.re, epsilon = 1e-8);
            assert_abs_diff_eq!(got[i].im, want.im, epsilon = 1e-8);
        }
    }

    #[test]
    fn kernel_sup_lipschitz_stable() {
        // |k_u - k_v|_inf <= C beta(u,v): ratio estimated on a radial grid,
        // stable under refinement of the sample
        let ratio_sup = |grid: usize| -> f64 {
            let mut sup: f64 = 0.0;
            let pairs = [
                (Complex::new(0.1, 0.2), Complex::new(0.15, 0.18)),
                (Complex::new(0.4, -0.3), Complex::new(0.35, -0.33)),
                (Complex::new(-0.5, 0.0), Complex::new(-0.52, 0.05)),
            ];
            for (cu, cv) in pairs {
                let u = Point::c1(cu);
                let v = Point::c1(cv);
                let beta = bergman_metric(&u, &v).unwrap();
                let mut diff_sup: f64 = 0.0;
                for i in 0..grid {
                    for j in 0..grid {
                        let rho = 0.999 * (i as f64 + 0.5) / grid as f64;
                        let th = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / grid as f64;
                        let w = Point::c1(Complex::from_polar(rho, th));
                        let d = normalized_kernel_value(&u, &w, 1)
                            - normalized_kernel_value(&v, &w, 1);
                        diff_sup = diff_sup.max(d.norm_sqr().sqrt());
                    }
                }
                sup = sup.max(diff_sup / beta);
            }
            sup
        };
        let a = ratio_sup(32);
        let b = ratio_sup(45);
        assert!(a.is_finite() && a > 0.0);
        // estimator grows toward the sup; refinement must not blow it up
        assert!((b - a).abs() / a < 0.05);
    }

    #[test]
    fn radius_comparability_constant() {
        // (1-|u|^2)/(1-|v|^2) bounded two-sided for beta(u,v) <= R, with the
        // empirical constant monotone in R
        let mut prev_c = 0.0f64;
        for rr in [0.5f64, 1.0, 1.5] {
            let mut c: f64 = 1.0;
            for i in 0..24 {
                let th = 2.0 * std::f64::consts::PI * i as f64 / 24.0;
                for rho0 in [0.0, 0.3, 0.6] {
                    let u = Point::c1(Complex::from_polar(rho0, 0.3));
                    // v on the metric sphere of radius rr around u
                    let dir = Complex::from_polar(rr.tanh(), th);
                    let v = mobius(&u, &Point::c1(-dir)).unwrap();
                    assert!((bergman_metric(&u, &v).unwrap() - rr).abs() < 1e-10);
                    let ratio = (1.0 - u.norm_sq()) / (1.0 - v.norm_sq());
                    c = c.max(ratio.max(1.0 / ratio));
                }
            }
            assert!(c > prev_c, "comparability constant must grow with R");
            assert!(c <= (2.0 * rr).exp() * 1.0001, "bound e^{{2R}} violated");
            prev_c = c;
        }
    }

    #[test]
    fn tail_warning_and_validation() {
        let pr = params(2.0, 1, 20);
        assert!(pr.kernel_tail_warning(&Point::re1(0.95)).is_some());
        assert!(pr.kernel_tail_warning(&Point::re1(0.3)).is_none());
        assert!(BergmanParams::new(1.0, 1, 4, 0.5).is_err());
        assert!(BergmanParams::new(2.0, 1, 4, 0.0).is_err());
        assert!(BergmanParams::new(2.0, 1, 4, 2.0).is_err());
        assert!(BergmanParams::new(3.0, 1, 4, 1.4).is_ok()); // q = 1.5
        assert!(BergmanParams::new(3.0, 1, 4, 1.6).is_err());
    }
}
