use std::time::Instant;

use codimlab_core::haction::{density_witness, trivial_action};
use codimlab_core::regev::{
    centrality_sweep, random_tuples, regev_eval_dp, regev_eval_naive, unit_tuple, Mat,
    RegevDescriptor,
};
use codimlab_core::GradedLieAlgebra;

#[test]
fn full_sweep_of_matrix_units() {
    let start = Instant::now();
    let r = centrality_sweep(2).unwrap();
    assert_eq!(r.tuples, 65_536);
    assert!(r.passed(), "{r:?}");
    assert!(!r.scalars.is_empty());
    eprintln!(
        "sweep: {} nonzero, scalars {:?}, {:?}",
        r.nonzero,
        r.scalars,
        start.elapsed()
    );
}

#[test]
fn dp_agrees_with_naive_on_random_tuples() {
    let d = RegevDescriptor::new(2).unwrap();
    for (xs, ys) in random_tuples(2, 100, 5, 2024) {
        let naive = regev_eval_naive(&d, &xs, &ys).unwrap();
        assert_eq!(naive, regev_eval_dp(&d, &xs, &ys).unwrap());
    }
}

#[test]
fn values_commute_with_off_diagonal_units() {
    let d = RegevDescriptor::new(2).unwrap();
    let e12 = Mat::<i128>::unit(2, 0, 1);
    let e21 = Mat::<i128>::unit(2, 1, 0);
    for (xs, ys) in random_tuples(2, 20, 4, 5) {
        let v = regev_eval_dp(&d, &xs, &ys).unwrap();
        assert_eq!(v.mul(&e12), e12.mul(&v));
        assert_eq!(v.mul(&e21), e21.mul(&v));
    }
}

#[test]
fn repeated_unit_argument_vanishes() {
    let d = RegevDescriptor::new(2).unwrap();
    for idx in [0usize, 17, 4097, 65_535] {
        let (mut xs, ys) = unit_tuple(2, idx);
        xs[3] = xs[2].clone();
        assert!(regev_eval_dp(&d, &xs, &ys).unwrap().is_zero());
    }
}

#[test]
fn density_witness_for_sl2() {
    let s = GradedLieAlgebra::sl2();
    let w = density_witness(&s, &trivial_action(&s), true).unwrap();
    assert!(w.verification);
    assert_eq!(w.completion.len(), 6);
    assert_eq!(w.c, 2 * w.zbar.len());
    eprintln!("K = {}", w.k);
}

#[test]
fn sweep_values_match_naive_on_a_sample() {
    let d = RegevDescriptor::new(2).unwrap();
    for idx in (0..65_536).step_by(211) {
        let (xs, ys) = unit_tuple(2, idx);
        assert_eq!(
            regev_eval_naive(&d, &xs, &ys).unwrap(),
            regev_eval_dp(&d, &xs, &ys).unwrap(),
            "tuple {idx}"
        );
    }
}
