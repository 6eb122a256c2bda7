//! Cohomology dimensions of line bundles `O(m)` and twisted sheaves of
//! forms `Ω^p(m)` on a weighted projective space, via lattice-point
//! counting weighted by the face-dimension function, plus an independent
//! monomial-counting oracle.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    count_lattice_points, enumerate_lattice_points, face_dimension_int, FacePosition,
};
use crate::polytope::polytope_from_weights;
use crate::weights::WeightsVector;

/// Why a line-bundle cohomology dimension cannot be computed by the
/// polytope method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndeterminateReason {
    /// `m < 0` on a non-Gorenstein space: `O(m)` need not match a
    /// polytope; use `h_omega` instead.
    NonGorensteinNegative,
    /// Gorenstein with `-|Q|/δ < m < 0`: outside the Serre-duality range.
    GorensteinGapRange,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyAnswer {
    Value(BigInt),
    Indeterminate(IndeterminateReason),
}

/// Binomial coefficient with the conventional zero outside `0 <= b <= a`.
pub fn binomial(a: usize, b: i64) -> BigInt {
    if b < 0 || b as usize > a {
        return BigInt::zero();
    }
    let b = b as usize;
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn lattice_point_count(q: &WeightsVector, m: &BigInt) -> Result<BigInt> {
    let p = polytope_from_weights(q, m)?;
    count_lattice_points(&p, false)
}

/// `dim H^q(P(Q), O(m))`, by counting lattice points of the polytope of
/// the polarization and Serre duality for sufficiently negative `m`.
pub fn h_line_bundle(q: i64, m: &BigInt, weights: &WeightsVector) -> Result<CohomologyAnswer> {
    if q < 0 {
        return Err(Error::NegativeLevel);
    }
    let n = weights.dim() as i64;
    if !m.is_negative() {
        if q != 0 {
            return Ok(CohomologyAnswer::Value(BigInt::zero()));
        }
        if m.is_zero() {
            return Ok(CohomologyAnswer::Value(BigInt::one()));
        }
        return Ok(CohomologyAnswer::Value(lattice_point_count(weights, m)?));
    }
    let index = weights.gorenstein_index();
    if !index.is_integer() {
        return Ok(CohomologyAnswer::Indeterminate(
            IndeterminateReason::NonGorensteinNegative,
        ));
    }
    let k = index.to_integer();
    if *m <= -k.clone() {
        if q != n {
            return Ok(CohomologyAnswer::Value(BigInt::zero()));
        }
        let dual = -m - k;
        return h_line_bundle(0, &dual, weights);
    }
    Ok(CohomologyAnswer::Indeterminate(
        IndeterminateReason::GorensteinGapRange,
    ))
}

/// `dim H^q(P(Q), Ω^p(m))` by the binomial face-dimension sums; always
/// determinate.
pub fn h_omega(q: i64, p: i64, m: &BigInt, weights: &WeightsVector) -> Result<BigInt> {
    if q < 0 {
        return Err(Error::NegativeLevel);
    }
    if p < 0 {
        return Err(Error::NegativeFormDegree);
    }
    let n = weights.dim() as i64;
    if m.is_zero() {
        return Ok(if q == p { BigInt::one() } else { BigInt::zero() });
    }
    let (active_q, form_degree, level) = if m.is_positive() {
        (0i64, p, m.clone())
    } else {
        (n, n - p, -m.clone())
    };
    if q != active_q {
        return Ok(BigInt::zero());
    }
    let delta_m = polytope_from_weights(weights, &level)?;
    let mut total = BigInt::zero();
    for u in enumerate_lattice_points(&delta_m)? {
        let s = match face_dimension_int(&u, &delta_m)? {
            FacePosition::FaceDim(s) => s,
            FacePosition::Outside => {
                return Err(Error::Internal(
                    "enumerated point classified outside its polytope".into(),
                ))
            }
        };
        total += binomial(s, form_degree);
    }
    Ok(total)
}

/// Independent oracle: the number of exponent vectors `a` in `Z^{n+1}`
/// with `Σ a_i q_i = d` and `a_i >= 0` (or `>= 1` when `strict`).
pub fn weighted_monomial_count(weights: &WeightsVector, d: &BigInt, strict: bool) -> Result<BigInt> {
    if d.is_negative() {
        return Err(Error::Invalid("degree must be nonnegative".into()));
    }
    // Shift `a_i >= 1` down to `a_i >= 0` by spending one unit of every
    // weight up front.
    let mut degree = d.clone();
    if strict {
        degree -= weights.sum();
        if degree.is_negative() {
            return Ok(BigInt::zero());
        }
    }
    let size = usize::try_from(&degree)
        .map_err(|_| Error::Invalid("degree too large for monomial counting".into()))?;
    // Standard coin-change partition count: one table pass per weight.
    let mut table = vec![BigInt::zero(); size + 1];
    table[0] = BigInt::one();
    for q in weights.entries() {
        let step = usize::try_from(q)
            .map_err(|_| Error::Invalid("weight too large for monomial counting".into()))?;
        for t in step..=size {
            let add = table[t - step].clone();
            table[t] += add;
        }
    }
    Ok(table[size].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(q: &[i64]) -> WeightsVector {
        WeightsVector::from_i64(q).unwrap()
    }

    fn value(v: i64) -> CohomologyAnswer {
        CohomologyAnswer::Value(BigInt::from(v))
    }

    #[test]
    fn line_bundle_positive_levels() {
        let q235 = weights(&[2, 3, 5]);
        assert_eq!(h_line_bundle(0, &BigInt::from(1), &q235).unwrap(), value(21));
        assert_eq!(h_line_bundle(0, &BigInt::from(2), &q235).unwrap(), value(71));
        assert_eq!(h_line_bundle(0, &BigInt::from(3), &q235).unwrap(), value(151));
        assert_eq!(h_line_bundle(1, &BigInt::from(1), &q235).unwrap(), value(0));
    }

    #[test]
    fn line_bundle_zero_and_negative_levels() {
        let p2 = weights(&[1, 1, 1]);
        assert_eq!(h_line_bundle(0, &BigInt::zero(), &p2).unwrap(), value(1));
        assert_eq!(h_line_bundle(2, &BigInt::from(-3), &p2).unwrap(), value(1));
        assert_eq!(
            h_line_bundle(1, &BigInt::from(-1), &p2).unwrap(),
            CohomologyAnswer::Indeterminate(IndeterminateReason::GorensteinGapRange)
        );
        assert_eq!(
            h_line_bundle(0, &BigInt::from(-1), &weights(&[2, 3, 5])).unwrap(),
            CohomologyAnswer::Indeterminate(IndeterminateReason::NonGorensteinNegative)
        );
    }

    #[test]
    fn line_bundle_small_weight_tables() {
        let q112 = weights(&[1, 1, 2]);
        assert_eq!(h_line_bundle(0, &BigInt::from(1), &q112).unwrap(), value(4));
        assert_eq!(h_line_bundle(0, &BigInt::from(3), &q112).unwrap(), value(16));
        let q1332 = weights(&[1, 3, 3, 2]);
        assert_eq!(h_line_bundle(0, &BigInt::from(1), &q1332).unwrap(), value(11));
        assert_eq!(h_line_bundle(0, &BigInt::from(2), &q1332).unwrap(), value(42));
    }

    #[test]
    fn negative_q_is_an_error() {
        assert_eq!(
            h_line_bundle(-1, &BigInt::one(), &weights(&[1, 1, 1])).unwrap_err(),
            Error::NegativeLevel
        );
        assert_eq!(
            h_omega(-1, 0, &BigInt::one(), &weights(&[1, 1, 1])).unwrap_err(),
            Error::NegativeLevel
        );
        assert_eq!(
            h_omega(0, -1, &BigInt::one(), &weights(&[1, 1, 1])).unwrap_err(),
            Error::NegativeFormDegree
        );
    }

    #[test]
    fn omega_reference_values() {
        let q1223 = weights(&[1, 2, 2, 3]);
        assert_eq!(h_omega(0, 1, &BigInt::from(1), &q1223).unwrap(), BigInt::from(13));
        assert_eq!(h_omega(0, 2, &BigInt::from(1), &q1223).unwrap(), BigInt::from(3));
        let q235 = weights(&[2, 3, 5]);
        assert_eq!(h_omega(2, 0, &BigInt::from(-1), &q235).unwrap(), BigInt::from(11));
        assert_eq!(h_omega(1, 0, &BigInt::from(1), &q235).unwrap(), BigInt::zero());
        let q112 = weights(&[1, 1, 2]);
        assert_eq!(h_omega(0, 2, &BigInt::from(3), &q112).unwrap(), BigInt::from(4));
        let p2 = weights(&[1, 1, 1]);
        assert_eq!(h_omega(2, 0, &BigInt::from(-3), &p2).unwrap(), BigInt::one());
    }

    #[test]
    fn omega_level_zero_is_kronecker() {
        let p2 = weights(&[1, 1, 1]);
        assert_eq!(h_omega(0, 0, &BigInt::zero(), &p2).unwrap(), BigInt::one());
        assert_eq!(h_omega(1, 0, &BigInt::zero(), &p2).unwrap(), BigInt::zero());
        assert_eq!(h_omega(1, 1, &BigInt::zero(), &p2).unwrap(), BigInt::one());
    }

    #[test]
    fn monomial_oracle_reference_values() {
        let q235 = weights(&[2, 3, 5]);
        assert_eq!(
            weighted_monomial_count(&q235, &BigInt::from(30), false).unwrap(),
            BigInt::from(21)
        );
        assert_eq!(
            weighted_monomial_count(&q235, &BigInt::from(30), true).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(
            weighted_monomial_count(&q235, &BigInt::zero(), false).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            weighted_monomial_count(&q235, &BigInt::zero(), true).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn oracle_matches_line_bundle_on_samples() {
        for q in [vec![1i64, 1, 2], vec![2, 3, 5], vec![1, 3, 3, 2]] {
            let w = weights(&q);
            let delta = w.delta();
            for m in 1i64..=3 {
                let level = BigInt::from(m);
                let expected = weighted_monomial_count(&w, &(&level * &delta), false).unwrap();
                assert_eq!(
                    h_line_bundle(0, &level, &w).unwrap(),
                    CohomologyAnswer::Value(expected)
                );
            }
        }
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(2, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
