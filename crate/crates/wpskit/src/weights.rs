//! Weights vectors of weighted projective spaces, their reduction and the
//! Gorenstein/Fano predicate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coprime positive integers `(q0, ..., qn)` defining the weighted
/// projective space `P(Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsVector {
    q: Vec<BigInt>,
}

impl WeightsVector {
    pub fn new(q: Vec<BigInt>) -> Result<Self> {
        if q.len() < 2 {
            return Err(Error::Invalid("a weights vector needs at least two entries".into()));
        }
        if q.iter().any(|v| !v.is_positive()) {
            return Err(Error::Invalid("weights must be positive".into()));
        }
        let g = q.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if !g.is_one() {
            return Err(Error::Invalid(format!("weights are not coprime (gcd {})", g)));
        }
        Ok(Self { q })
    }

    pub fn from_i64(q: &[i64]) -> Result<Self> {
        Self::new(q.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Dimension `n` of `P(Q)` (one less than the number of weights).
    pub fn dim(&self) -> usize {
        self.q.len() - 1
    }

    /// Reduction of the weights vector: with `d_i` the gcd of all entries
    /// except the i-th and `a_i` the lcm of all `d_j` with `j != i`, the
    /// reduced vector is `(q_i / a_i)`. Idempotent; the result defines an
    /// isomorphic wps.
    pub fn reduced(&self) -> WeightsVector {
        let k = self.q.len();
        let d: Vec<BigInt> = (0..k)
            .map(|i| {
                self.q
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v))
            })
            .collect();
        let a: Vec<BigInt> = (0..k)
            .map(|i| {
                d.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v))
            })
            .collect();
        let q = self
            .q
            .iter()
            .zip(&a)
            .map(|(qi, ai)| {
                let (quot, rem) = qi.div_rem(ai);
                debug_assert!(rem.is_zero(), "a_i divides q_i by construction");
                let _ = rem;
                quot
            })
            .collect();
        WeightsVector::new(q).expect("reduction preserves validity")
    }

    /// `|Q|`, the sum of the weights.
    pub fn sum(&self) -> BigInt {
        self.q.iter().sum()
    }

    /// `δ`, the least common multiple of the weights.
    pub fn delta(&self) -> BigInt {
        self.q.iter().fold(BigInt::one(), |acc, v| acc.lcm(v))
    }

    /// `|Q| / δ`, the Fano index when it is an integer.
    pub fn gorenstein_index(&self) -> BigRational {
        BigRational::new(self.sum(), self.delta())
    }

    /// A wps is Gorenstein iff it is Fano, iff `δ` divides `|Q|`.
    pub fn is_gorenstein(&self) -> bool {
        self.gorenstein_index().is_integer()
    }

    /// Entries sorted ascending, for multiset comparison.
    pub fn sorted(&self) -> Vec<BigInt> {
        let mut s = self.q.clone();
        s.sort();
        s
    }
}
