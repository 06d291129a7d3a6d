use itertools::Itertools;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use plethyrs::certificate::{
    doubled_coherent_state, find_certificate, projector_check_feasible, sum_of_squares, sweep,
    sweep_cases, symmetric_probe, verify_case, Case, CaseStatus, SearchConfig, SearchOutcome,
};
use plethyrs::characters::{kronecker, symmetric_kronecker};
use plethyrs::gct::{perorbit_occurs, GctQuery};
use plethyrs::partitions::enumerate_partitions;
use plethyrs::symfunc::plethysm_coefficient;
use plethyrs::tensor::{
    apply_matrix, highest_weight_vector, inner, isotypic_project, PermutationMap, RationalMatrix,
    SparseKet, Word,
};
use plethyrs::{Partition, Rational};

/// `Σ_i ⟨a·v_λ | π·(i_1^n ⋯ i_k^n)⟩²` from the fully materialized translate.
fn dense_sum_of_squares(case: &Case, a: &RationalMatrix, pi: &PermutationMap) -> (Rational, bool) {
    let av = apply_matrix(a, &highest_weight_vector(&case.lambda, case.d).unwrap()).unwrap();
    let mut total = Rational::zero();
    let mut any_nonzero = false;
    let tuples = (0..case.k)
        .map(|_| 1..=case.d as u8)
        .multi_cartesian_product();
    for tuple in tuples {
        let x = pi.apply(&Word::blocks(&tuple, case.n)).unwrap();
        let c = inner(&av, &SparseKet::basis(case.d, x).unwrap()).unwrap();
        any_nonzero |= !c.is_zero();
        total += &c * &c;
    }
    (total, any_nonzero)
}

fn arb_instance() -> impl Strategy<Value = (Case, RationalMatrix, PermutationMap)> {
    (1usize..=2, 1usize..=2, 0usize..3)
        .prop_flat_map(|(k, n, extra)| {
            let d = k + extra;
            let shapes = enumerate_partitions(k * n, k);
            (
                proptest::sample::select(shapes),
                Just((k, n, d)),
                proptest::collection::vec(proptest::collection::vec(-2i64..=2, d), d),
                Just((1..=k * n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(lambda, (k, n, d), rows, images)| {
            (
                Case::new(lambda, k, n, d).unwrap(),
                RationalMatrix::from_integers(&rows).unwrap(),
                PermutationMap::from_images(&images).unwrap(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sum_of_squares_is_nonnegative_and_matches_dense((case, a, pi) in arb_instance()) {
        let lazy = sum_of_squares(&case, &a, &pi).unwrap();
        let (dense, any_nonzero) = dense_sum_of_squares(&case, &a, &pi);
        prop_assert!(!lazy.is_negative());
        prop_assert_eq!(&lazy, &dense);
        prop_assert_eq!(lazy.is_positive(), any_nonzero);
    }
}

#[test]
fn certificates_imply_occurrence() {
    let config = SearchConfig::default();
    for report in sweep(3, 2, 3, &config).unwrap() {
        assert_eq!(report.status, CaseStatus::Verified, "{}", report.case);
        let cert = report.certificate.as_ref().unwrap();
        assert!(cert.sum_of_squares.is_positive());
        let c =
            plethysm_coefficient(&report.case.doubled(), report.case.k, 2 * report.case.n).unwrap();
        assert_eq!(c, report.oracle_multiplicity);
        assert!(c >= 1);
    }
}

#[test]
fn doubled_state_is_isotypic_and_pairs_to_the_sum_of_squares() {
    for case in sweep_cases(2, 2, 3) {
        if !projector_check_feasible(&case) {
            continue;
        }
        let SearchOutcome::Found(cert) = find_certificate(&case, 0, 64).unwrap() else {
            panic!("{case} exhausted");
        };
        let v = doubled_coherent_state(&cert).unwrap();
        assert_eq!(isotypic_project(&case.doubled(), &v).unwrap(), v, "{case}");
        let psi = symmetric_probe(case.k, case.n, case.d).unwrap();
        assert_eq!(inner(&v, &psi).unwrap(), cert.sum_of_squares, "{case}");
    }
}

#[test]
fn projector_check_flag_is_reported() {
    let case = Case::new(Partition::new(vec![2, 2]).unwrap(), 2, 2, 2).unwrap();
    let config = SearchConfig {
        check_projector: true,
        ..SearchConfig::default()
    };
    let report = verify_case(&case, &config).unwrap();
    assert_eq!(report.projector_check, Some(true));
    assert_eq!(report.status, CaseStatus::Verified);
}

#[test]
fn search_is_deterministic() {
    for case in sweep_cases(3, 2, 3) {
        for seed in [0, 1, 42] {
            let a = find_certificate(&case, seed, 64).unwrap();
            let b = find_certificate(&case, seed, 64).unwrap();
            assert_eq!(a, b, "{case} seed {seed}");
        }
    }
}

#[test]
fn gct_witnesses_survive_larger_limits() {
    for (d, ell) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        for lambda in enumerate_partitions(d * ell, d * d) {
            let query = GctQuery::new(lambda.clone(), d, ell).unwrap();
            let full = perorbit_occurs(&query, usize::MAX).unwrap();
            for limit in 1..=full.pairs_examined + 2 {
                match perorbit_occurs(&query, limit) {
                    Ok(out) => {
                        assert_eq!(out, full, "{lambda} limit {limit}");
                        assert!(limit >= full.pairs_examined);
                    }
                    Err(_) => assert!(limit < full.pairs_examined, "{lambda} limit {limit}"),
                }
            }
        }
    }
}

#[test]
fn even_shapes_always_meet_the_plethysm_condition() {
    for (d, ell) in [(1, 2), (2, 2), (2, 4), (3, 2), (1, 4), (4, 2)] {
        for kappa in enumerate_partitions(d * ell / 2, d) {
            let mu = kappa.scale(2);
            assert!(
                plethysm_coefficient(&mu, d, ell).unwrap() >= 1,
                "{mu} d={d} ℓ={ell}"
            );
        }
    }
    // the same shapes are exactly the k = d cases of the sweep
    for report in sweep(2, 2, 2, &SearchConfig::default()).unwrap() {
        if report.case.k == report.case.d {
            assert!(report.oracle_multiplicity >= 1);
        }
    }
}

#[test]
fn column_shape_exhaustive() {
    // λ = (1,1,1,1), d = 2, ℓ = 2: direct evaluation over all ordered pairs
    let lambda = Partition::new(vec![1, 1, 1, 1]).unwrap();
    let candidates = enumerate_partitions(4, 2);
    let mut expected = false;
    for mu in &candidates {
        for nu in &candidates {
            let plethysm_ok = plethysm_coefficient(mu, 2, 2).unwrap() > 0
                && plethysm_coefficient(nu, 2, 2).unwrap() > 0;
            let kron_ok = if mu == nu {
                symmetric_kronecker(&lambda, mu).unwrap() > 0
            } else {
                kronecker(&lambda, mu, nu).unwrap() > 0
            };
            expected |= plethysm_ok && kron_ok;
        }
    }
    let out = perorbit_occurs(&GctQuery::new(lambda, 2, 2).unwrap(), usize::MAX).unwrap();
    assert_eq!(out.occurs, expected);
    // only (4) and (2,2) occur in the plethysm, and (2,2) meets the sign
    // representation in the alternating square only
    assert!(!out.occurs);
}
