//! Equivalence of fans (same wps) and of polytopes (same polarized wps),
//! with explicit switching transforms witnessing each equivalence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{perm_match, perm_matrix, IntMatrix, Permutation};
use crate::fan::Fan;
use crate::polytope::{recognize_polytope, SimplexPolytope};
use crate::weights::WeightsVector;

/// Witness of an equivalence of fans: `fan_matrix(f1) = V(Red1)·alpha`,
/// `fan_matrix(f2) = V(Red2)·beta`, and `gamma·V(Red2)·delta = V(Red1)`
/// with `gamma` unimodular and `delta` a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanSwitchData {
    pub alpha: IntMatrix,
    pub beta: IntMatrix,
    pub gamma: IntMatrix,
    pub delta: IntMatrix,
    pub sigma: Permutation,
}

/// Witness of an equivalence of polytopes:
/// `theta·CP2·delta + nu·1ᵀ = CP1` with `theta` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeSwitchData {
    pub theta: IntMatrix,
    pub delta: IntMatrix,
    pub nu: Vec<BigInt>,
}

fn fan_weights_pair(f1: &Fan, f2: &Fan) -> Result<(WeightsVector, WeightsVector)> {
    let w1 = f1.weights().map_err(|_| Error::FirstNotWpsFan)?;
    let w2 = f2.weights().map_err(|_| Error::SecondNotWpsFan)?;
    Ok((w1, w2))
}

/// True iff the two fans define the same wps, i.e. their reduced weights
/// agree as multisets.
pub fn are_equivalent_fans(f1: &Fan, f2: &Fan) -> Result<bool> {
    let (w1, w2) = fan_weights_pair(f1, f2)?;
    Ok(w1.reduced().sorted() == w2.reduced().sorted())
}

fn generator_gcd_diag(f: &Fan) -> IntMatrix {
    let k = f.generators().len();
    let mut d = IntMatrix::zeros(k, k);
    for (i, g) in f.generators().iter().enumerate() {
        let gcd = g.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        *d.get_mut(i, i) = gcd;
    }
    d
}

/// Drop the first column (the `v_0` generator), leaving the square matrix
/// of `v_1 .. v_n`.
fn drop_first_column(m: &IntMatrix) -> Result<IntMatrix> {
    m.delete_column(0)
}

/// Compute the switching matrices `alpha, beta, gamma, delta` between two
/// equivalent fans.
pub fn fan_switch_matrices(f1: &Fan, f2: &Fan) -> Result<FanSwitchData> {
    let (w1, w2) = fan_weights_pair(f1, f2)?;
    let rw1 = w1.reduced();
    let rw2 = w2.reduced();
    if rw1.sorted() != rw2.sorted() {
        return Err(Error::FansNotEquivalent);
    }
    let alpha = generator_gcd_diag(f1);
    let beta = generator_gcd_diag(f2);
    let sigma = perm_match(rw1.entries(), rw2.entries())
        .map_err(|_| Error::FansNotEquivalent)?;
    let delta = perm_matrix(f1.generators().len(), &sigma)?;
    let v1 = f1.reduced()?.fan_matrix();
    let v2 = f2.reduced()?.fan_matrix();
    let v2d = v2.mul(&delta)?;
    let z1 = drop_first_column(&v1)?;
    let z2 = drop_first_column(&v2d)?;
    let det = z2.det()?;
    if det.is_zero() {
        return Err(Error::Internal("reduced fan matrix has dependent columns".into()));
    }
    let gamma = z1.mul(&z2.adjugate()?)?.div_exact(&det)?;
    // defining identity on the full matrices, including the v_0 column
    if gamma.mul(&v2d)? != v1 {
        return Err(Error::Internal(
            "switch matrix does not satisfy the defining identity".into(),
        ));
    }
    if !gamma.det()?.abs().is_one() {
        return Err(Error::Internal("switch matrix is not unimodular".into()));
    }
    Ok(FanSwitchData {
        alpha,
        beta,
        gamma,
        delta,
        sigma,
    })
}

/// True iff the two polytopes define isomorphic polarized wps's: same
/// weights multiset and same polarization.
pub fn are_equivalent_polytopes(p1: &SimplexPolytope, p2: &SimplexPolytope) -> Result<bool> {
    let (w1, _, m1) = recognize_polytope(p1).map_err(|_| Error::FirstNotAdmissible)?;
    let (w2, _, m2) = recognize_polytope(p2).map_err(|_| Error::SecondNotAdmissible)?;
    Ok(w1.sorted() == w2.sorted() && m1 == m2)
}

fn vertex_columns(p: &SimplexPolytope) -> IntMatrix {
    IntMatrix::from_columns(p.vertices().to_vec()).expect("vertices are rectangular")
}

/// Compute the affine switch `theta, delta, nu` between two equivalent
/// polytopes, satisfying `theta·CP2·delta + nu·1ᵀ = CP1`.
pub fn polytope_switch_data(
    p1: &SimplexPolytope,
    p2: &SimplexPolytope,
) -> Result<PolytopeSwitchData> {
    let (w1, fan1, m1) = recognize_polytope(p1).map_err(|_| Error::FirstNotAdmissible)?;
    let (w2, fan2, m2) = recognize_polytope(p2).map_err(|_| Error::SecondNotAdmissible)?;
    if w1.sorted() != w2.sorted() || m1 != m2 {
        return Err(Error::PolytopesNotEquivalent);
    }
    let fsw = fan_switch_matrices(&fan1, &fan2).map_err(|e| match e {
        Error::FansNotEquivalent => Error::PolytopesNotEquivalent,
        other => other,
    })?;
    // theta = (gamma^T)^{-1}; det gamma = ±1 so the inverse is det·adjugate
    let gt = fsw.gamma.transpose();
    let det = gt.det()?;
    let theta = gt.adjugate()?.scale(&det);
    let cp1 = vertex_columns(p1);
    let cp2 = vertex_columns(p2);
    let image = theta.mul(&cp2)?.mul(&fsw.delta)?;
    let nu: Vec<BigInt> = p1.vertices()[0]
        .iter()
        .zip(image.column(0))
        .map(|(a, b)| a - b)
        .collect();
    // verify the defining identity on every column
    let n = cp1.rows();
    for j in 0..cp1.cols() {
        for i in 0..n {
            if image.get(i, j) + &nu[i] != *cp1.get(i, j) {
                return Err(Error::Internal(
                    "polytope switch does not satisfy the defining identity".into(),
                ));
            }
        }
    }
    Ok(PolytopeSwitchData {
        theta,
        delta: fsw.delta,
        nu,
    })
}
