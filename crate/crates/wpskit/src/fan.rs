//! Fans of weighted projective spaces: construction from weights,
//! canonical form, recognition, and weights extraction.
//!
//! A fan is represented by its ordered 1-skeleton: `n+1` integer
//! generators in `Z^n`. The associated fan matrix is the `n x (n+1)`
//! matrix whose columns are the generators in order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;
use crate::weights::WeightsVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    generators: Vec<Vec<BigInt>>,
}

impl Fan {
    pub fn new(generators: Vec<Vec<BigInt>>) -> Result<Self> {
        let k = generators.len();
        if k < 2 {
            return Err(Error::Shape("a fan needs at least two generators".into()));
        }
        let n = k - 1;
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::Shape(format!(
                "expected {} generators of length {}",
                n + 1,
                n
            )));
        }
        Ok(Self { generators })
    }

    pub fn from_i64(generators: &[&[i64]]) -> Result<Self> {
        Self::new(
            generators
                .iter()
                .map(|g| g.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.generators.len() - 1
    }

    /// The `n x (n+1)` matrix whose columns are the generators.
    pub fn fan_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.generators.clone()).expect("generators are rectangular")
    }

    /// Inverse of [`Fan::fan_matrix`]: reads the columns of an
    /// `n x (n+1)` matrix as generators.
    pub fn from_matrix(v: &IntMatrix) -> Result<Self> {
        if v.cols() != v.rows() + 1 {
            return Err(Error::Shape(format!(
                "fan matrix must be n x (n+1), got {}x{}",
                v.rows(),
                v.cols()
            )));
        }
        Self::new(v.column_vectors())
    }

    /// Each generator divided by the gcd of its entries.
    pub fn reduced(&self) -> Result<Fan> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let d = g.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if d.is_zero() {
                return Err(Error::Invalid("fan has a zero generator".into()));
            }
            gens.push(g.iter().map(|v| v / &d).collect());
        }
        Fan::new(gens)
    }

    /// Signed maximal minors `SS_i = det` of the fan matrix with column
    /// `i` removed.
    fn signed_minors(&self) -> Result<Vec<BigInt>> {
        let v = self.fan_matrix();
        (0..v.cols())
            .map(|i| v.delete_column(i)?.det())
            .collect()
    }

    /// Recognizes the 1-skeleton of a wps fan: no vanishing maximal
    /// minor, coprime absolute minors `TT`, and `Σ TT_i v_i = 0`.
    pub fn is_wps_fan(&self) -> bool {
        let Ok(ss) = self.signed_minors() else {
            return false;
        };
        if ss.iter().any(|s| s.is_zero()) {
            return false;
        }
        let tt: Vec<BigInt> = ss.iter().map(|s| s.abs()).collect();
        let g = tt.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g != BigInt::from(1) {
            return false;
        }
        let n = self.dim();
        for coord in 0..n {
            let sum: BigInt = self
                .generators
                .iter()
                .zip(&tt)
                .map(|(v, t)| t * &v[coord])
                .sum();
            if !sum.is_zero() {
                return false;
            }
        }
        true
    }

    /// The weights vector of a wps fan: the absolute maximal minors.
    pub fn weights(&self) -> Result<WeightsVector> {
        if !self.is_wps_fan() {
            return Err(Error::NotWpsFan);
        }
        let tt = self
            .signed_minors()?
            .into_iter()
            .map(|s| s.abs())
            .collect();
        WeightsVector::new(tt)
            .map_err(|e| Error::Internal(format!("fan weights failed validation: {}", e)))
    }

    /// Whether this fan defines `P(Q)`: the weights multisets agree.
    pub fn is_fan_of(&self, q: &WeightsVector) -> Result<bool> {
        Ok(self.weights()?.sorted() == q.sorted())
    }
}

/// A fan associated to `Q`, read off the unimodular transformation of the
/// Hermite normal form of the weight column: generators are the columns
/// of rows `2..n+1` of `U`.
pub fn fan_from_weights(q: &WeightsVector) -> Fan {
    let col = IntMatrix::from_columns(vec![q.entries().to_vec()]).expect("weight column");
    let (_, u) = col.hnf_row();
    let rows: Vec<Vec<BigInt>> = (1..u.rows()).map(|r| u.row(r)).collect();
    let u2 = IntMatrix::from_rows(rows).expect("rectangular");
    Fan::from_matrix(&u2).expect("null-space matrix is n x (n+1)")
}

/// The Q-canonical fan: rotate the weights, take the null-space matrix
/// from the HNF transform, normalize it by another row HNF (unique for a
/// full-row-rank matrix), and move the last generator to the front.
pub fn canonical_fan(q: &WeightsVector) -> Fan {
    let k = q.len();
    let mut rotated: Vec<BigInt> = q.entries()[1..].to_vec();
    rotated.push(q.entries()[0].clone());
    let col = IntMatrix::from_columns(vec![rotated]).expect("weight column");
    let (_, u) = col.hnf_row();
    let rows: Vec<Vec<BigInt>> = (1..k).map(|r| u.row(r)).collect();
    let u2 = IntMatrix::from_rows(rows).expect("rectangular");
    let (u3, _) = u2.hnf_row();
    let mut gens = u3.column_vectors();
    let last = gens.pop().expect("n+1 columns");
    gens.insert(0, last);
    Fan::new(gens).expect("canonical generators are rectangular")
}
