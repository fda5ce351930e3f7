use codimlab_core::symmetric::{
    partitions_of, specht_dim, specht_dim_branching, standard_tableaux, Partition,
};
use num_bigint::BigUint;

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[test]
fn hook_and_branching_agree() {
    for n in 1..=10 {
        for lambda in partitions_of(n) {
            assert_eq!(
                specht_dim(&lambda),
                specht_dim_branching(&lambda),
                "{lambda}"
            );
        }
    }
}

#[test]
fn squares_sum_to_group_order() {
    for n in 1..=8 {
        let total: BigUint = partitions_of(n).iter().map(|l| specht_dim(l).pow(2)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn standard_tableaux_are_counted_by_the_hook_formula() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            assert_eq!(
                BigUint::from(standard_tableaux(&lambda).len()),
                specht_dim(&lambda),
                "{lambda}"
            );
        }
    }
}

#[test]
fn rectangular_lower_bound() {
    for t in 1..=4 {
        for k in 1..=5 {
            let lambda = Partition::new(vec![2 * k; t]).unwrap();
            let bound_num = factorial(2 * k * t);
            let bound_den = factorial(2 * k + t).pow(t as u32);
            assert!(specht_dim(&lambda) * &bound_den >= bound_num, "t={t} k={k}");
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}
