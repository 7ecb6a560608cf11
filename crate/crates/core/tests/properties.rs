//! Randomized invariants over generated inputs; the deterministic sweep in
//! `verify` covers the same ground on fixed grids, this target explores the
//! parameter space more freely.

use proptest::prelude::*;
use tripow::chebyshev::{cheb_t, cheb_u, delta_poly, ChebDegree};
use tripow::cli::parse_complex;
use tripow::fibfact::{fib_poly, fib_poly_bigint, FibPolyValue};
use tripow::numkit::{mat_mul, max_abs_diff, tridiag_det, DenseMatrix, TridiagonalMatrix};
use tripow::specmat::{eigen_residual, Family, FamilySpec};
use tripow::ComplexScalar;

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn complex_box(limit: f64) -> impl Strategy<Value = ComplexScalar> {
    (-limit..limit, -limit..limit).prop_map(|(re, im)| ComplexScalar::new(re, im))
}

fn complex_vec(len: usize, limit: f64) -> impl Strategy<Value = Vec<ComplexScalar>> {
    proptest::collection::vec(complex_box(limit), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_invariant_under_band_sign_flip(
        n in 2usize..=10,
        seed_diag in complex_vec(10, 3.0),
        seed_sub in complex_vec(9, 3.0),
        seed_sup in complex_vec(9, 3.0),
    ) {
        let diag = seed_diag[..n].to_vec();
        let sub = seed_sub[..n - 1].to_vec();
        let sup = seed_sup[..n - 1].to_vec();
        let plain = TridiagonalMatrix::new(sub.clone(), diag.clone(), sup.clone()).unwrap();
        let flipped = TridiagonalMatrix::new(
            sub.iter().map(|v| -v).collect(),
            diag,
            sup.iter().map(|v| -v).collect(),
        )
        .unwrap();
        let lhs = tridiag_det(&plain);
        let rhs = tridiag_det(&flipped);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
    }

    #[test]
    fn delta_matches_second_kind_chebyshev(n in 0u32..=24, t in complex_box(2.0)) {
        let lhs = delta_poly(n, t);
        let rhs = cheb_u(n, t / 2.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
    }

    #[test]
    fn first_kind_chebyshev_matches_cosine(j in 0u32..=20, theta in 0.01f64..3.13) {
        let x = c(theta.cos(), 0.0);
        let direct = cheb_t(ChebDegree::integer(j), x);
        let expected = (j as f64 * theta).cos();
        prop_assert!((direct - c(expected, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn half_degree_chebyshev_matches_cosine(j in 1u32..=15, theta in 0.01f64..3.13) {
        let x = c(theta.cos(), 0.0);
        let direct = cheb_t(ChebDegree::half_odd(j), x);
        let expected = ((2.0 * j as f64 - 1.0) / 2.0 * theta).cos();
        prop_assert!((direct - c(expected, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn matrix_multiplication_associates(
        lhs in complex_vec(9, 2.0),
        mid in complex_vec(9, 2.0),
        rhs in complex_vec(9, 2.0),
    ) {
        let to_matrix = |v: &[ComplexScalar]| {
            DenseMatrix::from_rows(&[v[0..3].to_vec(), v[3..6].to_vec(), v[6..9].to_vec()])
                .unwrap()
        };
        let (p, q, r) = (to_matrix(&lhs), to_matrix(&mid), to_matrix(&rhs));
        let left = mat_mul(&mat_mul(&p, &q).unwrap(), &r).unwrap();
        let right = mat_mul(&p, &mat_mul(&q, &r).unwrap()).unwrap();
        let scale = left.max_abs().max(1.0);
        prop_assert!(max_abs_diff(&left, &right).unwrap() <= 1e-12 * scale);
    }

    #[test]
    fn eigen_residual_stays_small_across_parameters(
        a in complex_box(4.0),
        b_raw in complex_box(4.0),
        odd_pick in 0usize..=3,
        dagger_n in 2usize..=9,
    ) {
        // Keep b bounded away from the excluded b = 0 point.
        let b = if b_raw.norm() < 0.1 { b_raw + c(0.5, 0.5) } else { b_raw };
        let n_a = [3, 5, 7, 9][odd_pick];
        let spec_a = FamilySpec::new(Family::A, n_a, a, b).unwrap();
        let spec_d = FamilySpec::new(Family::ADagger, dagger_n, a, b).unwrap();
        for k in 1..=n_a {
            prop_assert!(eigen_residual(&spec_a, k).unwrap() <= 1e-9);
        }
        for k in 1..=dagger_n {
            prop_assert!(eigen_residual(&spec_d, k).unwrap() <= 1e-9);
        }
    }

    #[test]
    fn fib_poly_lanes_agree_on_integer_arguments(n in 0u64..=20, x in -3i64..=3) {
        let exact = fib_poly_bigint(n, x);
        let via_dispatch = fib_poly(n, c(x as f64, 0.0));
        match via_dispatch {
            FibPolyValue::Exact(v) => prop_assert_eq!(v, exact),
            FibPolyValue::Numeric(_) => prop_assert!(false, "integer argument must stay exact"),
        }
    }

    #[test]
    fn complex_argument_text_round_trips(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let z = parse_complex(&format!("{re},{im}")).unwrap();
        prop_assert_eq!(z, c(re, im));
        let real_only = parse_complex(&format!("{re}")).unwrap();
        prop_assert_eq!(real_only, c(re, 0.0));
    }
}
