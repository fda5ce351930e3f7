use std::time::Instant;

use codimlab_core::asymptotics::{
    bound_report, closed_form_max, maximize_phi, mu_partition, UPPER_BOUND,
};
use codimlab_core::codim::{graded_codimension, CodimOptions};
use codimlab_core::linalg::rank::RankMode;
use codimlab_core::symmetric::theta_admissible;
use codimlab_core::GradedLieAlgebra;

#[test]
fn optimum_matches_closed_form() {
    let start = Instant::now();
    for q in 4..=8 {
        let r = maximize_phi(q, 1e-10, 42).unwrap();
        assert!(
            (r.value - closed_form_max(q)).abs() <= 1e-9,
            "q={q}: {}",
            r.value
        );
        assert!(r.infeasibility <= 1e-12);
    }
    assert!(start.elapsed().as_secs_f64() < 5.0);
    let five = maximize_phi(5, 1e-10, 7).unwrap();
    assert!((five.value - UPPER_BOUND).abs() < 1e-9);
}

#[test]
fn optimal_point_gives_admissible_partitions() {
    let r = maximize_phi(5, 1e-10, 1).unwrap();
    for n in [100, 1_000, 10_000] {
        let mu = mu_partition(&r.point, n).unwrap();
        assert_eq!(mu.n(), n);
        assert!(theta_admissible(&mu), "n={n}: {mu}");
    }
}

#[test]
fn bound_rows_for_small_degrees() {
    let l = GradedLieAlgebra::example_algebra();
    let report = bound_report(&l, 1..=6, &CodimOptions::default()).unwrap();
    assert!(report.passed());
    let c: Vec<u128> = report.rows.iter().map(|r| r.c_n).collect();
    assert_eq!(c, vec![2, 4, 16, 89, 403, 1916]);
    assert_eq!(report.rows[0].nth_root, 2.0);
    assert_eq!(report.rows[1].nth_root, 2.0);
    for r in &report.rows {
        assert_eq!(r.trivial_bound, 5u128.pow(r.n as u32 + 1));
    }
}

#[test]
fn reduced_and_full_spanning_sets_agree_in_degree_five() {
    let l = GradedLieAlgebra::example_algebra();
    let exact = CodimOptions {
        rank_mode: RankMode::Exact,
        ..Default::default()
    };
    let fast = graded_codimension(&l, 5, &exact).unwrap().value;
    let full = graded_codimension(
        &l,
        5,
        &CodimOptions {
            reduced: false,
            orbit: false,
            ..exact.clone()
        },
    )
    .unwrap()
    .value;
    let orbit_full = graded_codimension(
        &l,
        5,
        &CodimOptions {
            reduced: false,
            ..exact
        },
    )
    .unwrap()
    .value;
    assert_eq!((fast, full, orbit_full), (403, 403, 403));
}

#[test]
fn modular_rank_agrees_with_exact_in_degree_six() {
    let l = GradedLieAlgebra::example_algebra();
    let exact = graded_codimension(
        &l,
        6,
        &CodimOptions {
            rank_mode: RankMode::Exact,
            ..Default::default()
        },
    )
    .unwrap();
    let modular = graded_codimension(
        &l,
        6,
        &CodimOptions {
            rank_mode: RankMode::Modular,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(exact.value, modular.value);
    assert!(modular.report.certified);
}
