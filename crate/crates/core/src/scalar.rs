//! Scalar abstraction: the one trait every numeric routine is generic over.

use num_complex::Complex;

/// Real scalar for all numerics. `nalgebra::RealField` supplies transcendental
/// functions and drives the dense linear algebra; the `num-traits` bounds keep
/// the type usable with `num_complex::Complex` arithmetic and literal
/// conversion. Implemented for `f32` and `f64`.
pub trait Real:
    nalgebra::RealField
    + num_traits::Num
    + num_traits::NumAssign
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + std::iter::Sum
    + std::fmt::Display
    + std::fmt::LowerExp
    + Default
    + Copy
    + Send
    + Sync
    + 'static
{
    /// Short name used in reports ("f32"/"f64").
    const NAME: &'static str;

    /// Convert a literal. Panics only if the target type cannot represent
    /// finite doubles at all, which none of the implementors do.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to scalar")
    }

    /// Lossy view as f64 (for reports and diagnostics).
    #[inline]
    fn to64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }

    /// Convert a small integer exactly.
    #[inline]
    fn of_usize(k: usize) -> Self {
        Self::from_usize(k).expect("usize converts to scalar")
    }
}

impl Real for f32 {
    const NAME: &'static str = "f32";
}

impl Real for f64 {
    const NAME: &'static str = "f64";
}

/// Complex number from real parts.
#[inline]
pub fn cx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Real value as a complex number.
#[inline]
pub fn cre<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// `e^{i theta}`.
#[inline]
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Complex exponential, spelled out so it only needs `RealField` methods
/// (the inherent `Complex::exp` demands `num_traits::Float`).
#[inline]
pub fn cexp<T: Real>(c: Complex<T>) -> Complex<T> {
    cis(c.im) * c.re.exp()
}

/// Complex modulus without the `Float` bound.
#[inline]
pub fn cabs<T: Real>(c: Complex<T>) -> T {
    c.norm_sqr().sqrt()
}

/// Principal-branch complex logarithm without the `Float` bound.
#[inline]
pub fn cln<T: Real>(c: Complex<T>) -> Complex<T> {
    Complex::new(cabs(c).ln(), c.im.atan2(c.re))
}

/// Principal-branch complex power with a real exponent.
#[inline]
pub fn cpowf<T: Real>(c: Complex<T>, e: T) -> Complex<T> {
    cexp(cln(c) * e)
}

/// Factorial as a scalar (exact for small arguments, which is all we use).
pub fn factorial<T: Real>(k: usize) -> T {
    let mut acc = T::one();
    for i in 2..=k {
        acc *= T::of_usize(i);
    }
    acc
}

/// Binomial coefficient as a scalar.
pub fn binomial<T: Real>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::of_usize(n - i) / T::of_usize(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial::<f64>(0), 1.0);
        assert_eq!(factorial::<f64>(5), 120.0);
        assert_eq!(factorial::<f64>(10), 3_628_800.0);
    }

    #[test]
    fn binomial_pascal_row() {
        let row: Vec<f64> = (0..=4).map(|k| binomial::<f64>(4, k)).collect();
        assert_eq!(row, vec![1.0, 4.0, 6.0, 4.0, 1.0]);
    }

    #[test]
    fn cis_unit_modulus() {
        let z = cis::<f64>(0.7);
        assert!((z.norm() - 1.0).abs() < 1e-15);
    }
}
