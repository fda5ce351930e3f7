use std::collections::HashMap;

use codimlab_core::codim::{
    cocharacter_table, cocharacter_table_in, graded_codimension, multiplicity_in, theta_report,
    CodimOptions, QuotientModule,
};
use codimlab_core::linalg::rank::RankMode;
use codimlab_core::symmetric::{
    character, class_representative, class_size, partitions_of, specht_dim, standard_tableaux,
    theta_admissible,
};
use codimlab_core::GradedLieAlgebra;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

const P: u64 = (1 << 61) - 1;

fn exact() -> CodimOptions {
    CodimOptions {
        rank_mode: RankMode::Exact,
        ..Default::default()
    }
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: i128) -> u64 {
    x.rem_euclid(P as i128) as u64
}

fn lift(x: u64) -> i64 {
    if x > P / 2 {
        -((P - x) as i64)
    } else {
        x as i64
    }
}

/// Columns of a full-rank `m × c` matrix mod P that form an invertible minor.
fn pivot_columns(rows: &[Vec<u64>]) -> Vec<usize> {
    let mut a = rows.to_vec();
    let m = a.len();
    let c = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..c {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = powmod(a[r][col], P - 2);
        for i in r + 1..m {
            if a[i][col] != 0 {
                let f = mulmod(a[i][col], inv);
                for j in col..c {
                    a[i][j] = (a[i][j] + P - mulmod(f, a[r][j])) % P;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    assert_eq!(r, m, "module vectors must be independent");
    pivots
}

fn invert(a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let m = a.len();
    let mut aug: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .copied()
                .chain((0..m).map(|j| u64::from(i == j)))
                .collect()
        })
        .collect();
    for col in 0..m {
        let p = (col..m).find(|&i| aug[i][col] != 0).expect("invertible");
        aug.swap(col, p);
        let inv = powmod(aug[col][col], P - 2);
        for j in 0..2 * m {
            aug[col][j] = mulmod(aug[col][j], inv);
        }
        for i in 0..m {
            if i != col && aug[i][col] != 0 {
                let f = aug[i][col];
                for j in 0..2 * m {
                    aug[i][j] = (aug[i][j] + P - mulmod(f, aug[col][j])) % P;
                }
            }
        }
    }
    aug.into_iter().map(|r| r[m..].to_vec()).collect()
}

/// Multiplicities from the character of the module: the trace of each class
/// representative, then the inner product with the irreducible characters.
fn multiplicities_by_characters(alg: &GradedLieAlgebra, n: usize) -> HashMap<Vec<usize>, i64> {
    let module = QuotientModule::build(alg, n, &exact()).unwrap();
    let mut codes: Vec<u64> = module.vectors.iter().flatten().map(|&(c, _)| c).collect();
    codes.sort_unstable();
    codes.dedup();
    let index: HashMap<u64, usize> = codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let m = module.dim_module();
    let dense: Vec<Vec<u64>> = module
        .vectors
        .iter()
        .map(|v| {
            let mut row = vec![0; codes.len()];
            for &(c, x) in v {
                row[index[&c]] = reduce(x);
            }
            row
        })
        .collect();
    let pivots = pivot_columns(&dense);
    let pivot_pos: HashMap<u64, usize> = pivots
        .iter()
        .enumerate()
        .map(|(k, &c)| (codes[c], k))
        .collect();
    let a: Vec<Vec<u64>> = dense
        .iter()
        .map(|r| pivots.iter().map(|&c| r[c]).collect())
        .collect();
    let a_inv = invert(&a);

    let mut chi_w = Vec::new();
    for mu in partitions_of(n) {
        let pi = class_representative(&mu);
        let pinv = pi.inverse();
        let b: Vec<Vec<u64>> = module
            .vectors
            .iter()
            .map(|v| {
                let mut row = vec![0; m];
                for &(code, x) in v {
                    let (s, k) = module.decode(code);
                    let j: Vec<usize> = (0..n).map(|i| s[pinv.apply(i)]).collect();
                    if let Some(&p) = pivot_pos.get(&module.encode(&j, k)) {
                        row[p] = (row[p] + reduce(x)) % P;
                    }
                }
                row
            })
            .collect();
        // trace(B A^{-1})
        let mut tr = 0u64;
        for i in 0..m {
            for k in 0..m {
                tr = (tr + mulmod(b[i][k], a_inv[k][i])) % P;
            }
        }
        chi_w.push((mu, lift(tr)));
    }
    let n_fact: i128 = (1..=n as i128).product();
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let total: i128 = chi_w
                .iter()
                .map(|(mu, chi)| {
                    class_size(mu).to_i128().unwrap()
                        * character(&lambda, mu) as i128
                        * *chi as i128
                })
                .sum();
            assert_eq!(total % n_fact, 0, "inner product not integral for {lambda}");
            (lambda.parts().to_vec(), (total / n_fact) as i64)
        })
        .collect()
}

#[test]
fn multiplicities_match_character_inner_products() {
    let l = GradedLieAlgebra::example_algebra();
    for n in 1..=5 {
        let oracle = multiplicities_by_characters(&l, n);
        let table = cocharacter_table(&l, n, &exact()).unwrap();
        for row in &table.rows {
            assert_eq!(
                row.multiplicity as i64,
                oracle[row.lambda.parts()],
                "n={n} lambda={}",
                row.lambda
            );
        }
    }
}

#[test]
fn sl2_multiplicities_match_characters() {
    let s = GradedLieAlgebra::sl2();
    for n in 1..=4 {
        let oracle = multiplicities_by_characters(&s, n);
        let table = cocharacter_table(&s, n, &exact()).unwrap();
        for row in &table.rows {
            assert_eq!(
                row.multiplicity as i64,
                oracle[row.lambda.parts()],
                "n={n} lambda={}",
                row.lambda
            );
        }
    }
}

#[test]
fn multiplicity_does_not_depend_on_tableau() {
    let l = GradedLieAlgebra::example_algebra();
    for n in 2..=4 {
        let module = QuotientModule::build(&l, n, &exact()).unwrap();
        for lambda in partitions_of(n) {
            let values: Vec<usize> = standard_tableaux(&lambda)
                .iter()
                .map(|t| multiplicity_in(&module, t, &exact()).unwrap().multiplicity)
                .collect();
            assert!(
                values.windows(2).all(|w| w[0] == w[1]),
                "{lambda}: {values:?}"
            );
        }
    }
}

#[test]
fn weighted_sum_equals_codimension() {
    let l = GradedLieAlgebra::example_algebra();
    let expected = [2u128, 4, 16, 89, 403];
    for n in 1..=5 {
        let table = cocharacter_table(&l, n, &exact()).unwrap();
        let c = graded_codimension(&l, n, &exact()).unwrap().value;
        assert_eq!(c, expected[n - 1]);
        assert_eq!(table.weighted_sum(), BigUint::from(c));
        assert_eq!(table.module_dim as u128, c);
    }
}

#[test]
fn cocharacters_of_degree_five() {
    let l = GradedLieAlgebra::example_algebra();
    let table = cocharacter_table(&l, 5, &exact()).unwrap();
    let got: Vec<(String, usize)> = table
        .rows
        .iter()
        .map(|r| (r.lambda.to_string(), r.multiplicity))
        .collect();
    let expected = [
        ("5", 6),
        ("4,1", 20),
        ("3,2", 22),
        ("3,1,1", 17),
        ("2,2,1", 16),
        ("2,1,1,1", 6),
        ("1,1,1,1,1", 1),
    ];
    assert_eq!(
        got,
        expected
            .iter()
            .map(|(a, b)| (a.to_string(), *b))
            .collect::<Vec<_>>()
    );
}

#[test]
fn theta_filter_holds_through_degree_six() {
    let l = GradedLieAlgebra::example_algebra();
    for n in 1..=6 {
        let module = QuotientModule::build(&l, n, &exact()).unwrap();
        let table = cocharacter_table_in(&module, &exact()).unwrap();
        let report = theta_report(&table);
        assert!(report.passed(), "n={n}: {:?}", report.violations);
        let total: BigUint = table
            .rows
            .iter()
            .map(|r| specht_dim(&r.lambda) * BigUint::from(r.multiplicity))
            .sum();
        assert_eq!(total, BigUint::from(module.dim_module()));
        for row in &table.rows {
            if !theta_admissible(&row.lambda) {
                assert_eq!(row.multiplicity, 0);
            }
        }
    }
}
