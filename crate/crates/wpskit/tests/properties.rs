//! Randomized property tests for the exact kernels.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use wpskit::*;

fn matrix_from(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_i64(&refs)
}

fn square_matrix(n: usize, limit: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-limit..=limit, n), n)
}

fn coprime_weights(max_len: usize, limit: i64) -> impl Strategy<Value = WeightsVector> {
    prop::collection::vec(1i64..=limit, 2..=max_len).prop_filter_map(
        "weights must be coprime",
        |v| {
            let entries: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            let g = entries
                .iter()
                .fold(BigInt::zero(), |a, b| num_integer::gcd(a, b.clone()));
            if g.is_one() {
                Some(WeightsVector::new(entries).unwrap())
            } else {
                None
            }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_transform_is_unimodular(rows in (1usize..=4).prop_flat_map(|n| square_matrix(n, 20))) {
        let a = matrix_from(&rows);
        let (h, u) = a.hnf_row();
        prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
        prop_assert!(u.det().unwrap().abs().is_one());
        // pivots (first nonzero entry of each nonzero row) are positive
        for r in 0..h.rows() {
            if let Some(c) = (0..h.cols()).find(|&c| !h.get(r, c).is_zero()) {
                prop_assert!(h.get(r, c).is_positive());
            }
        }
    }

    #[test]
    fn adjugate_identity(rows in (1usize..=5).prop_flat_map(|n| square_matrix(n, 9))) {
        let a = matrix_from(&rows);
        let det = a.det().unwrap();
        let adj = a.adjugate().unwrap();
        let n = a.rows();
        prop_assert_eq!(a.mul(&adj).unwrap(), IntMatrix::identity(n).scale(&det));
    }

    #[test]
    fn weights_reduction_is_idempotent(q in coprime_weights(5, 40)) {
        let r = q.reduced();
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert_eq!(r.len(), q.len());
        let g = r.entries().iter().fold(BigInt::zero(), |a, b| num_integer::gcd(a, b.clone()));
        prop_assert!(g.is_one());
    }

    #[test]
    fn fan_round_trip(q in coprime_weights(5, 30)) {
        let fan = fan_from_weights(&q);
        prop_assert!(fan.is_wps_fan());
        prop_assert_eq!(fan.weights().unwrap(), q.clone());
        for coord in 0..fan.dim() {
            let sum: BigInt = fan
                .generators()
                .iter()
                .zip(q.entries())
                .map(|(v, w)| w * &v[coord])
                .sum();
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn count_matches_enumeration(
        rows in (2usize..=3).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(-6i64..=6, n), n + 1)
        })
    ) {
        let vertices: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let Ok(p) = SimplexPolytope::new(vertices) else {
            // degenerate simplex: nothing to check
            return Ok(());
        };
        for strict in [false, true] {
            let listed = if strict {
                enumerate_interior_points(&p).unwrap().len()
            } else {
                enumerate_lattice_points(&p).unwrap().len()
            };
            prop_assert_eq!(
                count_lattice_points(&p, strict).unwrap(),
                BigInt::from(listed)
            );
        }
    }

    #[test]
    fn polytope_recognition_round_trip(q in coprime_weights(4, 9), m in 1i64..=3) {
        let q = q.reduced();
        let m = BigInt::from(m);
        let p = polytope_from_weights(&q, &m).unwrap();
        let (w, fan, pol) = recognize_polytope(&p).unwrap();
        prop_assert_eq!(w, q.clone());
        prop_assert_eq!(pol, m);
        prop_assert!(fan.is_fan_of(&q).unwrap());
    }
}
