use std::collections::BTreeMap;

use num_traits::One;

use plethyrs::partitions::{enumerate_partitions, partitions_of};
use plethyrs::symfunc::{
    binomial, brute_force_decomposition, brute_force_plethysm, plethysm_coefficient,
    plethysm_decomposition, plethysm_h, schur_coefficient, schur_expansion, weyl_dim,
    DEFAULT_DEGREE_LIMIT,
};
use plethyrs::tableaux::kostka;
use plethyrs::{Partition, Rational};

fn factorizations(max_degree: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=max_degree {
        for m in 1..=max_degree / k {
            out.push((k, m));
        }
    }
    out
}

#[test]
fn power_sum_route_agrees_with_brute_force() {
    for (k, m) in factorizations(8) {
        let d = k * m;
        let oracle = brute_force_decomposition(k, m, d).unwrap();
        for lambda in partitions_of(k * m) {
            let c = plethysm_coefficient(&lambda, k, m).unwrap();
            assert_eq!(
                c,
                oracle.get(&lambda).copied().unwrap_or(0),
                "{lambda} in h{k}[h{m}]"
            );
        }
    }
}

#[test]
fn single_coefficient_oracle_agrees() {
    for lambda in partitions_of(6) {
        assert_eq!(
            brute_force_plethysm(&lambda, 2, 3, 6).unwrap(),
            plethysm_coefficient(&lambda, 2, 3).unwrap()
        );
    }
}

#[test]
fn dimension_identity() {
    for (k, m) in factorizations(12) {
        let terms = plethysm_decomposition(k, m, DEFAULT_DEGREE_LIMIT).unwrap();
        for d in 1..=3 {
            let lhs: u128 = terms
                .iter()
                .map(|(lambda, c)| *c as u128 * weyl_dim(lambda, d))
                .sum();
            let inner_dim = binomial((m + d - 1) as u128, (d - 1) as u128);
            let rhs = binomial(inner_dim + k as u128 - 1, k as u128);
            assert_eq!(lhs, rhs, "k={k} m={m} d={d}");
        }
    }
}

#[test]
fn weyl_dimension_counts_tableaux() {
    // dim V_λ(C^d) is the number of SSYT with entries ≤ d
    for q in 0..=6 {
        for lambda in partitions_of(q) {
            for d in 1..=3 {
                let total: u64 = compositions(q, d)
                    .iter()
                    .map(|c| kostka(&lambda, c).unwrap())
                    .sum();
                assert_eq!(weyl_dim(&lambda, d), total as u128, "{lambda} d={d}");
            }
        }
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn coefficients_are_nonnegative_integers() {
    for (k, m) in factorizations(10) {
        let f = plethysm_h(k, m).unwrap();
        for (lambda, c) in schur_expansion(&f).unwrap() {
            assert!(c.is_integer(), "{lambda}: {c}");
            assert!(c >= Rational::from_integer(0.into()));
        }
    }
}

#[test]
fn single_row_has_multiplicity_one() {
    for (k, m) in factorizations(12) {
        let f = plethysm_h(k, m).unwrap();
        let c = schur_coefficient(&f, &Partition::row(k * m)).unwrap();
        assert!(c.is_one(), "h{k}[h{m}] row coefficient {c}");
    }
}

#[test]
fn doubled_shapes_occur() {
    for k in 1..=6 {
        for n in 1..=6 / k {
            let f = plethysm_h(k, 2 * n).unwrap();
            for lambda in enumerate_partitions(k * n, k) {
                let c = schur_coefficient(&f, &lambda.scale(2)).unwrap();
                assert!(c >= Rational::one(), "2·{lambda} in h{k}[h{}]", 2 * n);
            }
        }
    }
}

#[test]
fn two_fold_plethysm_is_even_rows() {
    // h2[hm] is the sum of s_{(2m-j, j)} over even j
    for m in 1..=6 {
        let got: BTreeMap<Partition, u64> = plethysm_decomposition(2, m, DEFAULT_DEGREE_LIMIT)
            .unwrap()
            .into_iter()
            .collect();
        let expected: BTreeMap<Partition, u64> = (0..=m)
            .step_by(2)
            .map(|j| (Partition::new(vec![2 * m - j, j]).unwrap(), 1))
            .collect();
        assert_eq!(got, expected, "m={m}");
    }
}

#[test]
fn degenerate_plethysms_are_single_rows() {
    // h_k[h_1] = h_k and h_1[h_m] = h_m
    for q in 1..=8 {
        let row = vec![(Partition::row(q), 1)];
        assert_eq!(
            plethysm_decomposition(q, 1, DEFAULT_DEGREE_LIMIT).unwrap(),
            row
        );
        assert_eq!(
            plethysm_decomposition(1, q, DEFAULT_DEGREE_LIMIT).unwrap(),
            row
        );
    }
}

#[test]
fn odd_column_controls_vanish() {
    let three_one = Partition::new(vec![3, 1]).unwrap();
    let two_one_one = Partition::new(vec![2, 1, 1]).unwrap();
    assert_eq!(plethysm_coefficient(&three_one, 2, 2).unwrap(), 0);
    assert_eq!(plethysm_coefficient(&two_one_one, 2, 2).unwrap(), 0);
    assert_eq!(brute_force_plethysm(&three_one, 2, 2, 4).unwrap(), 0);
    assert_eq!(brute_force_plethysm(&two_one_one, 2, 2, 4).unwrap(), 0);
}
