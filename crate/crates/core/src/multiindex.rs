//! Multi-indices and the graded-lexicographic monomial basis.

use crate::scalar::{factorial, Real};
use num_complex::Complex;

/// Multi-index `a = (a_1, ..., a_n)` of monomial exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(a: Vec<u32>) -> Self {
        MultiIndex(a)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Total degree |a|.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    /// a! = prod a_j!
    pub fn fact<T: Real>(&self) -> T {
        self.0
            .iter()
            .map(|&k| factorial::<T>(k as usize))
            .fold(T::one(), |p, f| p * f)
    }

    /// z^a.
    pub fn monomial<T: Real>(&self, z: &[Complex<T>]) -> Complex<T> {
        debug_assert_eq!(z.len(), self.0.len());
        let mut acc = Complex::new(T::one(), T::zero());
        for (zj, &aj) in z.iter().zip(&self.0) {
            acc *= zj.powu(aj);
        }
        acc
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Monomial basis indices of total degree <= `max_degree` in `n` variables,
/// in graded-lexicographic order (degree-major; within a degree, ascending
/// lexicographic order of the exponent tuple).
#[derive(Clone, Debug)]
pub struct Basis {
    pub n: usize,
    pub max_degree: usize,
    pub indices: Vec<MultiIndex>,
}

impl Basis {
    pub fn new(n: usize, max_degree: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let mut indices = Vec::new();
        for d in 0..=max_degree {
            let mut a = vec![0u32; n];
            gen_degree(&mut a, 0, d as u32, &mut indices);
        }
        Basis {
            n,
            max_degree,
            indices,
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Position of a multi-index in this basis, if within the truncation.
    pub fn position(&self, a: &MultiIndex) -> Option<usize> {
        // Basis sizes here are a few hundred at most; linear scan is fine and
        // keeps the structure trivially serializable.
        self.indices.iter().position(|b| b == a)
    }

    /// Number of indices with total degree <= d (prefix length of the graded order).
    pub fn len_through_degree(&self, d: usize) -> usize {
        self.indices
            .iter()
            .take_while(|a| a.degree() <= d)
            .count()
    }
}

fn gen_degree(a: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == a.len() {
        a[pos] = remaining;
        out.push(MultiIndex(a.clone()));
        return;
    }
    for k in 0..=remaining {
        a[pos] = k;
        gen_degree(a, pos + 1, remaining - k, out);
    }
    a[pos] = 0;
}
