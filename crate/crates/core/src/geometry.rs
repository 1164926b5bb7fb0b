//! Geometry of the Gaussian plane and the unit ball: points, Mobius maps,
//! the Bergman (hyperbolic) metric, separated lattices, conflict-graph
//! partitions, smooth bumps, and partitions of unity.

use crate::error::{CoreError, Result};
use crate::quad::lambda_ball_volume;
use crate::scalar::{cis, Real};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Point of C^n (n = coords.len()). Bergman-side operations additionally
/// require Euclidean norm < 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<T: Real>(pub Vec<Complex<T>>);

impl<T: Real> Point<T> {
    pub fn new(coords: Vec<Complex<T>>) -> Self {
        Point(coords)
    }

    /// One-dimensional point.
    pub fn c1(z: Complex<T>) -> Self {
        Point(vec![z])
    }

    pub fn re1(x: T) -> Self {
        Point(vec![Complex::new(x, T::zero())])
    }

    pub fn origin(n: usize) -> Self {
        Point(vec![Complex::new(T::zero(), T::zero()); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn norm_sq(&self) -> T {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    /// Hermitian product w . conj(z) summed over coordinates, with `self` = w.
    pub fn herm_dot(&self, z: &Point<T>) -> Complex<T> {
        debug_assert_eq!(self.n(), z.n());
        self.0
            .iter()
            .zip(&z.0)
            .map(|(w, zz)| w * zz.conj())
            .fold(Complex::new(T::zero(), T::zero()), |a, b| a + b)
    }

    pub fn add(&self, other: &Point<T>) -> Point<T> {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point<T>) -> Point<T> {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: Complex<T>) -> Point<T> {
        Point(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Point<T> {
        Point(self.0.iter().map(|a| -a).collect())
    }

    pub fn dist(&self, other: &Point<T>) -> T {
        self.sub(other).norm()
    }

    pub fn check_in_ball_named(&self, what: &str) -> Result<()> {
        if self.norm_sq() >= T::one() {
            return Err(CoreError::Domain(format!(
                "{what} must lie inside the unit ball (|.| = {})",
                self.norm().to64()
            )));
        }
        Ok(())
    }
}

/// Mobius involution of the unit ball interchanging 0 and a, applied to z:
/// phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - z . conj(a)), where P_a is the
/// orthogonal projection onto C a, Q_a = I - P_a, s_a = sqrt(1 - |a|^2).
pub fn mobius<T: Real>(a: &Point<T>, z: &Point<T>) -> Result<Point<T>> {
    a.check_in_ball_named("mobius center")?;
    z.check_in_ball_named("mobius argument")?;
    let a_sq = a.norm_sq();
    if a_sq == T::zero() {
        return Ok(z.neg());
    }
    let denom = Complex::new(T::one(), T::zero()) - z.herm_dot(a);
    let s = (T::one() - a_sq).sqrt();
    // P_a z = (<z, a>/|a|^2) a
    let za = z.herm_dot(a);
    let proj_coeff = za / Complex::new(a_sq, T::zero());
    let pz = a.scale(proj_coeff);
    let qz = z.sub(&pz);
    let num = a.sub(&pz).sub(&qz.scale(Complex::new(s, T::zero())));
    Ok(num.scale(denom.inv()))
}

/// Pseudo-hyperbolic distance rho(u, v) = |phi_u(v)|.
pub fn pseudo_hyperbolic<T: Real>(u: &Point<T>, v: &Point<T>) -> Result<T> {
    Ok(mobius(u, v)?.norm())
}

/// Bergman metric beta(u, v) = (1/2) log((1+rho)/(1-rho)) = artanh(rho).
pub fn bergman_metric<T: Real>(u: &Point<T>, v: &Point<T>) -> Result<T> {
    let rho = pseudo_hyperbolic(u, v)?;
    Ok(rho.atanh())
}

/// Density of the Mobius-invariant measure d lambda with respect to dv:
/// (1 - |w|^2)^{-(n+1)}.
pub fn invariant_measure_weight<T: Real>(w: &Point<T>) -> Result<T> {
    w.check_in_ball_named("measure argument")?;
    let n = w.n();
    Ok((T::one() - w.norm_sq()).powi(-(n as i32 + 1)))
}

/// Metric used by a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricTag {
    Euclidean,
    Bergman,
}

/// Finite separated point set, optionally labeled by partition class and
/// optionally carrying per-point cell weights (Riemann masses for the measure
/// the lattice discretizes).
#[derive(Clone, Debug)]
pub struct Lattice<T: Real> {
    pub points: Vec<Point<T>>,
    pub delta: T,
    pub metric: MetricTag,
    pub labels: Option<Vec<usize>>,
    pub weights: Option<Vec<T>>,
}

impl<T: Real> Lattice<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn metric_dist(&self, u: &Point<T>, v: &Point<T>) -> Result<T> {
        match self.metric {
            MetricTag::Euclidean => Ok(u.dist(v)),
            MetricTag::Bergman => bergman_metric(u, v),
        }
    }

    /// Verify the separation invariant by exhaustive pairwise check.
    pub fn verify_separation(&self) -> Result<bool> {
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                if self.metric_dist(&self.points[i], &self.points[j])? < self.delta {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Number of partition classes (0 when unlabeled).
    pub fn class_count(&self) -> usize {
        self.labels
            .as_ref()
            .map(|l| l.iter().copied().max().map_or(0, |m| m + 1))
            .unwrap_or(0)
    }
}

/// Square-grid Euclidean lattice of spacing `delta` covering |z| <= radius
/// in C^n (integer grid in every real coordinate), containing the origin.
/// Deterministic; weight of every cell is delta^{2n}.
pub fn square_lattice<T: Real>(n: usize, delta: T, radius: T) -> Result<Lattice<T>> {
    if delta <= T::zero() || radius <= T::zero() {
        return Err(CoreError::Parameter(
            "lattice spacing and radius must be positive".into(),
        ));
    }
    let kmax = (radius / delta).floor().to64() as i64;
    let mut points = Vec::new();
    let r_sq = radius * radius;
    // enumerate integer tuples in 2n real dimensions
    let dims = 2 * n;
    let mut idx = vec![-kmax; dims];
    'outer: loop {
        let coords: Vec<Complex<T>> = (0..n)
            .map(|j| {
                Complex::new(
                    delta * T::of(idx[2 * j] as f64),
                    delta * T::of(idx[2 * j + 1] as f64),
                )
            })
            .collect();
        let p = Point(coords);
        if p.norm_sq() <= r_sq {
            points.push(p);
        }
        // odometer increment
        for d in 0..dims {
            idx[d] += 1;
            if idx[d] <= kmax {
                continue 'outer;
            }
            idx[d] = -kmax;
        }
        break;
    }
    // deterministic order: by norm, then lexicographic on real coordinates
    points.sort_by(|a, b| order_points(a, b));
    let w = delta.powi(2 * n as i32);
    let m = points.len();
    Ok(Lattice {
        points,
        delta,
        metric: MetricTag::Euclidean,
        labels: None,
        weights: Some(vec![w; m]),
    })
}

fn order_points<T: Real>(a: &Point<T>, b: &Point<T>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let na = a.norm_sq();
    let nb = b.norm_sq();
    match na.partial_cmp(&nb) {
        Some(Ordering::Equal) | None => {}
        Some(o) => return o,
    }
    for (x, y) in a.0.iter().zip(&b.0) {
        for (p, q) in [(x.re, y.re), (x.im, y.im)] {
            match p.partial_cmp(&q) {
                Some(Ordering::Equal) | None => continue,
                Some(o) => return o,
            }
        }
    }
    Ordering::Equal
}

/// Greedy maximal delta-separated subset of the metric ball of the given
/// radius (either metric), by farthest-point-style insertion over a dense
/// deterministic candidate set seeded by `seed`. Contains the origin.
pub fn greedy_lattice<T: Real>(
    n: usize,
    metric: MetricTag,
    delta: T,
    radius: T,
    seed: u64,
) -> Result<Lattice<T>> {
    if delta <= T::zero() {
        return Err(CoreError::Parameter("delta must be positive".into()));
    }
    if radius <= T::zero() {
        return Err(CoreError::Parameter("radius must be positive".into()));
    }
    // Seeded rejection stream: draw candidates uniformly (Euclidean volume) on
    // the ball that carries the metric ball of the given radius, accept any
    // candidate delta-far from everything accepted so far, and stop only after
    // a long run of consecutive rejections. The streak bound makes the
    // leftover admissible region tiny, which is exactly the maximality notion
    // the rejection-sampling check probes.
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    let mut next_unit = move || {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64
    };
    let euclid_max = match metric {
        MetricTag::Euclidean => radius.to64(),
        // metric ball of radius r in beta = Euclidean ball of radius tanh(r)
        MetricTag::Bergman => radius.to64().tanh(),
    };
    let tmp = Lattice {
        points: Vec::new(),
        delta,
        metric,
        labels: None,
        weights: None,
    };
    let mut accepted: Vec<Point<T>> = vec![Point::origin(n)];
    let streak_limit = 40_000usize;
    let mut streak = 0usize;
    while streak < streak_limit {
        // uniform draw from the 2n-dimensional Euclidean ball by rejection
        // from the enclosing cube
        let mut coords = Vec::with_capacity(n);
        let mut nsq = 0.0f64;
        for _ in 0..n {
            let x = euclid_max * (2.0 * next_unit() - 1.0);
            let y = euclid_max * (2.0 * next_unit() - 1.0);
            nsq += x * x + y * y;
            coords.push(Complex::new(T::of(x), T::of(y)));
        }
        if nsq > euclid_max * euclid_max {
            continue;
        }
        let c = Point(coords);
        let within = match metric {
            MetricTag::Euclidean => c.norm() <= radius,
            MetricTag::Bergman => bergman_metric(&Point::origin(n), &c)? <= radius,
        };
        if !within {
            continue;
        }
        streak += 1;
        let mut ok = true;
        for p in &accepted {
            if tmp.metric_dist(p, &c)? < delta {
                ok = false;
                break;
            }
        }
        if ok {
            accepted.push(c);
            streak = 0;
        }
    }
    accepted.sort_by(|a, b| order_points(a, b));
    Ok(Lattice {
        points: accepted,
        delta,
        metric,
        labels: None,
        weights: None,
    })
}

/// Hyperbolic equal-area ring lattice on the disk/ball slice (n = 1 only):
/// radial edges at beta = k h up to artanh(rho_max); ring k is split into
/// ceil(pi sinh(2 r_c) / h) angular cells at its beta-midpoint radius r_c,
/// each cell carrying weight = ring lambda-mass / cell count. The result
/// discretizes the invariant measure d lambda on |w| <= rho_max.
pub fn ring_lattice<T: Real>(rho_max: T, h: T) -> Result<Lattice<T>> {
    if !(rho_max > T::zero() && rho_max < T::one()) {
        return Err(CoreError::Parameter("rho_max must lie in (0,1)".into()));
    }
    if h <= T::zero() {
        return Err(CoreError::Parameter("ring spacing h must be positive".into()));
    }
    let beta_max = rho_max.atanh();
    let rings = (beta_max / h).ceil().to64() as usize;
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for k in 0..rings {
        let b0 = h * T::of_usize(k);
        let b1 = (b0 + h).min(beta_max);
        if b1 <= b0 {
            break;
        }
        let bc = (b0 + b1) / T::of(2.0);
        let mass = lambda_ball_volume(1, b1) - lambda_ball_volume(1, b0);
        let m = (T::pi() * (T::of(2.0) * bc).sinh() / h)
            .ceil()
            .to64()
            .max(1.0) as usize;
        let rc = bc.tanh();
        let cell_w = mass / T::of_usize(m);
        for j in 0..m {
            let th = T::two_pi() * T::of_usize(j) / T::of_usize(m);
            points.push(Point::c1(cis(th) * Complex::new(rc, T::zero())));
            weights.push(cell_w);
        }
    }
    Ok(Lattice {
        points,
        delta: h,
        metric: MetricTag::Bergman,
        labels: None,
        weights: Some(weights),
    })
}

/// Greedy conflict-graph coloring that partitions a separated lattice into
/// classes whose Mobius pushforwards {phi_u(z) : u in class} stay r-separated
/// for every |z| <= rho. Edges join points with beta(u,v) <= R where
/// R = r + log((1+rho)/(1-rho)); points are colored in order of distance from
/// the origin (ties: lexicographic), each taking the smallest free color.
pub fn partition_separated<T: Real>(
    lattice: &Lattice<T>,
    r: T,
    rho: T,
) -> Result<Lattice<T>> {
    if rho >= T::one() || rho < T::zero() {
        return Err(CoreError::Parameter("rho must lie in [0,1)".into()));
    }
    if r < T::zero() {
        return Err(CoreError::Parameter("r must be nonnegative".into()));
    }
    let m = lattice.points.len();
    let big_r = r + ((T::one() + rho) / (T::one() - rho)).ln();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| order_points(&lattice.points[i], &lattice.points[j]));
    let mut labels = vec![usize::MAX; m];
    for &i in &order {
        let mut used = std::collections::BTreeSet::new();
        for &j in &order {
            if labels[j] == usize::MAX || j == i {
                continue;
            }
            // r = 0 and rho = 0 mean an empty conflict graph: D(z, 0) is empty
            // by convention, so no separation constraint binds.
            if big_r > T::zero()
                && bergman_metric(&lattice.points[i], &lattice.points[j])? <= big_r
            {
                used.insert(labels[j]);
            }
        }
        let mut c = 0usize;
        while used.contains(&c) {
            c += 1;
        }
        labels[i] = c;
    }
    Ok(Lattice {
        points: lattice.points.clone(),
        delta: lattice.delta,
        metric: lattice.metric,
        labels: Some(labels),
        weights: lattice.weights.clone(),
    })
}

/// The cardinality bound floor(lambda(D(0, R + c/2)) / lambda(D(0, c/2))) + 2
/// for the partition class count, with R = r + log((1+rho)/(1-rho)).
pub fn partition_class_bound<T: Real>(n: usize, c: T, r: T, rho: T) -> usize {
    let big_r = r + ((T::one() + rho) / (T::one() - rho)).ln();
    let half_c = c / T::of(2.0);
    let ratio = lambda_ball_volume(n, big_r + half_c) / lambda_ball_volume(n, half_c);
    ratio.floor().to64() as usize + 2
}

/// Radial bump on the ball: 1 on D(0, l), 0 outside D(0, 2l), C^1-smooth
/// smoothstep transition in the Bergman-radial coordinate.
#[derive(Clone, Debug)]
pub struct SmoothBump<T: Real> {
    pub l: T,
}

impl<T: Real> SmoothBump<T> {
    pub fn new(l: T) -> Result<Self> {
        if l <= T::zero() {
            return Err(CoreError::Parameter("bump radius l must be positive".into()));
        }
        Ok(SmoothBump { l })
    }

    /// Profile as a function of the Bergman distance d = beta(0, xi).
    pub fn profile(&self, d: T) -> T {
        if d <= self.l {
            T::one()
        } else if d >= T::of(2.0) * self.l {
            T::zero()
        } else {
            let s = (T::of(2.0) * self.l - d) / self.l;
            s * s * (T::of(3.0) - T::of(2.0) * s)
        }
    }

    /// Phi^l_0(xi).
    pub fn eval(&self, xi: &Point<T>) -> Result<T> {
        let d = bergman_metric(&Point::origin(xi.n()), xi)?;
        Ok(self.profile(d))
    }

    /// Phi^l_zeta(xi) = Phi^l_0(phi_zeta(xi)).
    pub fn eval_at(&self, zeta: &Point<T>, xi: &Point<T>) -> Result<T> {
        self.eval(&mobius(zeta, xi)?)
    }

    /// integral of Phi^l_0 against d lambda, split at the plateau edge so each
    /// radial segment's integrand is analytic (plateau part is exact).
    pub fn lambda_mass(&self, n: usize) -> T {
        let m = 60usize;
        let plateau = lambda_ball_volume(n, self.l);
        let band_rule = crate::quad::gauss_legendre::<T>(m, self.l, T::of(2.0) * self.l);
        let two_n = T::of_usize(2 * n);
        let band: T = band_rule
            .nodes
            .iter()
            .zip(&band_rule.weights)
            .map(|(&b, &w)| {
                w * self.profile(b) * two_n * b.sinh().powi(2 * n as i32 - 1) * b.cosh()
            })
            .sum();
        plateau + band
    }
}

/// Partition of unity subordinate to a covering lattice: Psi_zeta =
/// Phi^c_zeta / sum_eta Phi^c_eta.
#[derive(Clone)]
pub struct PartitionOfUnity<T: Real> {
    pub centers: Lattice<T>,
    pub c: T,
    bump: SmoothBump<T>,
}

impl<T: Real> PartitionOfUnity<T> {
    pub fn new(centers: Lattice<T>, c: T) -> Result<Self> {
        Ok(PartitionOfUnity {
            bump: SmoothBump::new(c)?,
            centers,
            c,
        })
    }

    /// Denominator sum_eta Phi^c_eta(xi); coverage error if it vanishes.
    pub fn denominator(&self, xi: &Point<T>) -> Result<T> {
        let mut s = T::zero();
        for zeta in &self.centers.points {
            s += self.bump.eval_at(zeta, xi)?;
        }
        if s <= T::zero() {
            return Err(CoreError::Coverage(format!(
                "partition denominator vanishes at |xi| = {}",
                xi.norm().to64()
            )));
        }
        Ok(s)
    }

    /// Psi_{center_i}(xi).
    pub fn eval(&self, i: usize, xi: &Point<T>) -> Result<T> {
        let num = self.bump.eval_at(&self.centers.points[i], xi)?;
        if num == T::zero() {
            return Ok(T::zero());
        }
        Ok(num / self.denominator(xi)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p1(re: f64, im: f64) -> Point<f64> {
        Point::c1(Complex::new(re, im))
    }

    #[test]
    fn mobius_interchanges_zero_and_center() {
        let a = p1(0.5, 0.2);
        let z0 = Point::origin(1);
        let got = mobius(&a, &z0).unwrap();
        assert!(got.dist(&a) < 1e-14);
        let got2 = mobius(&a, &a).unwrap();
        assert!(got2.norm() < 1e-14);
    }

    #[test]
    fn mobius_one_dim_formula() {
        // n=1: phi_a(z) = (a - z)/(1 - conj(a) z)
        let got = mobius(&p1(0.5, 0.0), &p1(0.25, 0.0)).unwrap();
        assert_relative_eq!(got.0[0].re, 2.0 / 7.0, max_relative = 1e-13);
        assert!(got.0[0].im.abs() < 1e-15);
    }

    #[test]
    fn mobius_rejects_outside_ball() {
        assert!(mobius(&p1(1.2, 0.0), &p1(0.0, 0.0)).is_err());
    }

    #[test]
    fn metric_values() {
        assert_relative_eq!(
            bergman_metric(&p1(0.0, 0.0), &p1(0.5, 0.0)).unwrap(),
            0.5f64.atanh(),
            max_relative = 1e-13
        );
        // beta(0.3, -0.3): rho = 0.6/1.09
        let rho: f64 = 0.6 / 1.09;
        assert_relative_eq!(
            bergman_metric(&p1(0.3, 0.0), &p1(-0.3, 0.0)).unwrap(),
            rho.atanh(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn invariant_weight_values() {
        assert_relative_eq!(
            invariant_measure_weight(&p1(0.0, 0.0)).unwrap(),
            1.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            invariant_measure_weight(&p1(0.5, 0.0)).unwrap(),
            (0.75f64).powi(-2),
            max_relative = 1e-13
        );
    }

    #[test]
    fn square_lattice_count() {
        // spacing-1 grid inside |z| <= 2.5 has 21 points
        let lat = square_lattice::<f64>(1, 1.0, 2.5).unwrap();
        assert_eq!(lat.len(), 21);
        assert!(lat.verify_separation().unwrap());
        assert!(lat.points.iter().any(|p| p.norm() < 1e-15));
    }

    #[test]
    fn tiny_ball_single_point() {
        let lat = greedy_lattice::<f64>(1, MetricTag::Euclidean, 1.0, 0.4, 7).unwrap();
        assert_eq!(lat.len(), 1);
        assert!(lat.points[0].norm() < 1e-15);
    }

    #[test]
    fn greedy_lattice_separated_and_maximal() {
        let lat = greedy_lattice::<f64>(1, MetricTag::Bergman, 0.5, 2.0, 42).unwrap();
        assert!(lat.len() > 10);
        assert!(lat.verify_separation().unwrap());
        // spot-check maximality with a rejection sample
        let mut state = 1234u64;
        let mut nxt = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 11) as f64) / (1u64 << 53) as f64
        };
        let origin = Point::origin(1);
        for _ in 0..2000 {
            let th = 2.0 * std::f64::consts::PI * nxt();
            let rho = (2.0f64).tanh() * nxt().sqrt();
            let cand = p1(rho * th.cos(), rho * th.sin());
            if bergman_metric(&origin, &cand).unwrap() > 2.0 {
                continue;
            }
            let min_d = lat
                .points
                .iter()
                .map(|p| bergman_metric(p, &cand).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!(
                min_d < 0.5,
                "candidate admissible but not blocked: min beta {min_d}"
            );
        }
    }

    #[test]
    fn ring_lattice_mass_matches_volume() {
        let lat = ring_lattice::<f64>(0.95, 0.3).unwrap();
        let total: f64 = lat.weights.as_ref().unwrap().iter().sum();
        let beta_max = 0.95f64.atanh();
        assert_relative_eq!(
            total,
            beta_max.sinh().powi(2),
            max_relative = 1e-10
        );
    }

    #[test]
    fn partition_single_point() {
        let lat = Lattice {
            points: vec![p1(0.0, 0.0)],
            delta: 0.5,
            metric: MetricTag::Bergman,
            labels: None,
            weights: None,
        };
        let part = partition_separated(&lat, 1.0, 0.3).unwrap();
        assert_eq!(part.class_count(), 1);
    }

    #[test]
    fn partition_r_zero_single_class() {
        let lat = greedy_lattice::<f64>(1, MetricTag::Bergman, 0.7, 1.5, 3).unwrap();
        let part = partition_separated(&lat, 0.0, 0.0).unwrap();
        assert_eq!(part.class_count(), 1);
    }

    #[test]
    fn bump_plateau_and_support() {
        let b = SmoothBump::new(0.2f64).unwrap();
        assert_eq!(b.profile(0.0), 1.0);
        assert_eq!(b.profile(0.19), 1.0);
        assert_eq!(b.profile(0.5), 0.0);
        assert_relative_eq!(b.profile(0.3), 0.5, max_relative = 1e-13);
        // mass bracket sinh^2(l) <= a_l <= sinh^2(2l)
        let mass = b.lambda_mass(1);
        assert!(mass >= 0.2f64.sinh().powi(2) && mass <= 0.4f64.sinh().powi(2));
    }

    #[test]
    fn partition_of_unity_sums_to_one() {
        let lat = greedy_lattice::<f64>(1, MetricTag::Bergman, 0.5, 2.5, 11).unwrap();
        // delta-separated maximal => delta-covering; use c = delta
        let pou = PartitionOfUnity::new(lat.clone(), 0.5).unwrap();
        let mut state = 99u64;
        let mut nxt = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 11) as f64) / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let th = 2.0 * std::f64::consts::PI * nxt();
            let rho = (1.5f64).tanh() * nxt().sqrt();
            let xi = p1(rho * th.cos(), rho * th.sin());
            let total: f64 = (0..pou.centers.len())
                .map(|i| pou.eval(i, &xi).unwrap())
                .sum();
            assert_relative_eq!(total, 1.0, max_relative = 1e-12);
        }
    }
}
