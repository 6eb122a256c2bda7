//! Polytopes of polarized weighted projective spaces: the weighted
//! transversion (fan to polytope matrix), polytope construction from
//! weights, and the recognition decomposition recovering weights, fan and
//! polarization from a square matrix or a simplex.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;
use crate::fan::{fan_from_weights, Fan};
use crate::weights::WeightsVector;

/// A simplex with `n+1` integer vertices in `Z^n`; the first vertex is
/// the translation base. The vertex-difference matrix is required to be
/// nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexPolytope {
    vertices: Vec<Vec<BigInt>>,
}

impl SimplexPolytope {
    pub fn new(vertices: Vec<Vec<BigInt>>) -> Result<Self> {
        let k = vertices.len();
        if k < 2 {
            return Err(Error::Shape("a simplex needs at least two vertices".into()));
        }
        let n = k - 1;
        if vertices.iter().any(|v| v.len() != n) {
            return Err(Error::Shape(format!(
                "expected {} vertices of dimension {}",
                n + 1,
                n
            )));
        }
        let p = Self { vertices };
        if p.matrix().det()?.is_zero() {
            return Err(Error::Invalid("degenerate simplex: vertex matrix is singular".into()));
        }
        Ok(p)
    }

    pub fn from_i64(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The `n x n` matrix whose columns are `P[i] - P[0]` for `i = 1..n`.
    pub fn matrix(&self) -> IntMatrix {
        let base = &self.vertices[0];
        let cols = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        IntMatrix::from_columns(cols).expect("vertices are rectangular")
    }

    /// Inverse of [`SimplexPolytope::matrix`]: the origin followed by the
    /// columns of `w`.
    pub fn from_matrix(w: &IntMatrix) -> Result<Self> {
        if w.rows() != w.cols() {
            return Err(Error::Shape("polytope matrix must be square".into()));
        }
        let mut vertices = vec![vec![BigInt::zero(); w.rows()]];
        vertices.extend(w.column_vectors());
        Self::new(vertices)
    }

    pub fn translated(&self, t: &[BigInt]) -> Result<Self> {
        if t.len() != self.dim() {
            return Err(Error::Shape("translation has wrong dimension".into()));
        }
        Self::new(
            self.vertices
                .iter()
                .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
                .collect(),
        )
    }

    pub fn scaled(&self, k: &BigInt) -> Result<Self> {
        Self::new(
            self.vertices
                .iter()
                .map(|v| v.iter().map(|a| a * k).collect())
                .collect(),
        )
    }
}

/// The recognition decomposition of a square matrix: candidate weights,
/// the primitive-adjugate-transpose matrix, the (possibly rational)
/// candidate fan and the polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WppDecomposition {
    pub pseudo_weights: Vec<BigInt>,
    pub what: IntMatrix,
    pub pseudo_fan: Vec<Vec<BigRational>>,
    pub polarization: BigInt,
}

impl WppDecomposition {
    /// True when the zeroth pseudo-fan generator is integral, i.e. the
    /// matrix is the weighted transverse of a wps fan.
    pub fn is_admissible(&self) -> bool {
        self.pseudo_fan[0].iter().all(|c| c.is_integer())
    }

    /// The pseudo-fan as an integer fan; only valid when admissible.
    pub fn integral_fan(&self) -> Result<Fan> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissiblePolytope);
        }
        Fan::new(
            self.pseudo_fan
                .iter()
                .map(|v| v.iter().map(|c| c.to_integer()).collect())
                .collect(),
        )
    }
}

/// Weighted transversion: the matrix of the polytope of `(P(Q), O(m))`
/// attached to a fan. The columns `w_j` are the unique solutions of
/// `<v_k, w_j> = (m δ / q_j) [k = j]` for `k, j = 1..n`; the entries are
/// integral for every wps fan.
pub fn weighted_transverse(fan: &Fan, m: &BigInt) -> Result<IntMatrix> {
    if !m.is_positive() {
        return Err(Error::Invalid("polarization must be positive".into()));
    }
    let q = fan.weights()?;
    let delta = q.delta();
    let n = fan.dim();
    // rows of at are the generators v_1 .. v_n
    let at = IntMatrix::from_rows(fan.generators()[1..].to_vec())?;
    let det = at.det()?;
    if det.is_zero() {
        return Err(Error::Internal("fan generators v_1..v_n are dependent".into()));
    }
    let adj = at.adjugate()?;
    let mut w = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let num = adj.get(i, j) * m * &delta;
            let den = &det * &q.entries()[j + 1];
            let (quot, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                return Err(Error::Internal(
                    "weighted transverse produced a non-integer entry".into(),
                ));
            }
            *w.get_mut(i, j) = quot;
        }
    }
    Ok(w)
}

/// `weighted_transverse` of the fan built from `Q`.
pub fn qpol_mat(q: &WeightsVector, m: &BigInt) -> Result<IntMatrix> {
    weighted_transverse(&fan_from_weights(q), m)
}

pub fn polytope_from_fan(fan: &Fan, m: &BigInt) -> Result<SimplexPolytope> {
    SimplexPolytope::from_matrix(&weighted_transverse(fan, m)?)
}

pub fn polytope_from_weights(q: &WeightsVector, m: &BigInt) -> Result<SimplexPolytope> {
    SimplexPolytope::from_matrix(&qpol_mat(q, m)?)
}

/// The WPP pipeline: factor out the entry gcd, take the sign-corrected
/// adjugate, make its rows primitive, and read off pseudo-weights,
/// pseudo-fan and polarization.
pub fn wpp_decompose(w1: &IntMatrix) -> Result<WppDecomposition> {
    if w1.rows() != w1.cols() {
        return Err(Error::Shape("WPP needs a square matrix".into()));
    }
    if w1.is_zero() {
        return Err(Error::Invalid("WPP needs a nonzero matrix".into()));
    }
    let m = w1.entries_gcd();
    let w = w1.div_exact(&m)?;
    let det = w.det()?;
    if det.is_zero() {
        return Err(Error::Invalid("WPP needs a nonsingular matrix".into()));
    }
    let n = w.rows();
    let adj = w.adjugate()?;
    let signed = if det.is_negative() {
        adj.scale(&BigInt::from(-1))
    } else {
        adj
    };
    // primitive rows
    let mut k_gcds = Vec::with_capacity(n);
    let mut m1_rows = Vec::with_capacity(n);
    for i in 0..n {
        let row = signed.row(i);
        let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        debug_assert!(!g.is_zero(), "adjugate of a nonsingular matrix has no zero row");
        m1_rows.push(row.iter().map(|v| v / &g).collect::<Vec<_>>());
        k_gcds.push(g);
    }
    let m1 = IntMatrix::from_rows(m1_rows)?;
    let iq = m1.mul(&w)?;
    // diag(IQ) = |det W| / K_i, positive by construction
    let q0 = m1.det()?.abs();
    let mut de_q = q0.clone();
    for i in 0..n {
        de_q = de_q.lcm(iq.get(i, i));
    }
    let mut pseudo_weights = vec![q0.clone()];
    for i in 0..n {
        pseudo_weights.push(&de_q / iq.get(i, i));
    }
    // v0 = -(1/q0) * Σ_r (deQ / IQ[r,r]) * M1 row r
    let mut v0 = vec![BigRational::zero(); n];
    for r in 0..n {
        let coeff = &de_q / iq.get(r, r);
        for c in 0..n {
            v0[c] += BigRational::from(&coeff * m1.get(r, c));
        }
    }
    let minus_q0 = BigRational::from(-q0.clone());
    for c in v0.iter_mut() {
        *c = &*c / &minus_q0;
    }
    let mut pseudo_fan = vec![v0];
    for r in 0..n {
        pseudo_fan.push(m1.row(r).into_iter().map(BigRational::from).collect());
    }
    Ok(WppDecomposition {
        pseudo_weights,
        what: m1.transpose(),
        pseudo_fan,
        polarization: m,
    })
}

pub fn is_admissible_matrix(w: &IntMatrix) -> Result<bool> {
    Ok(wpp_decompose(w)?.is_admissible())
}

pub fn is_admissible_polytope(p: &SimplexPolytope) -> Result<bool> {
    let w1 = p.matrix();
    let m = w1.entries_gcd();
    is_admissible_matrix(&w1.div_exact(&m)?)
}

/// Recognition of a polarized wps polytope: weights, fan and polarization.
pub fn recognize_polytope(p: &SimplexPolytope) -> Result<(WeightsVector, Fan, BigInt)> {
    let w1 = p.matrix();
    let m = w1.entries_gcd();
    let w = w1.div_exact(&m)?;
    let dec = wpp_decompose(&w)?;
    if !dec.is_admissible() {
        return Err(Error::NotAdmissiblePolytope);
    }
    let weights = WeightsVector::new(dec.pseudo_weights.clone())
        .map_err(|e| Error::Internal(format!("pseudo-weights of an admissible matrix: {}", e)))?;
    let fan = dec.integral_fan()?;
    Ok((weights, fan, m))
}

pub fn polytope_weights(p: &SimplexPolytope) -> Result<WeightsVector> {
    Ok(recognize_polytope(p)?.0)
}

pub fn polytope_fan(p: &SimplexPolytope) -> Result<Fan> {
    Ok(recognize_polytope(p)?.1)
}

pub fn polytope_polarization(p: &SimplexPolytope) -> Result<BigInt> {
    Ok(recognize_polytope(p)?.2)
}
