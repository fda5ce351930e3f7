use codimlab_core::linalg::{q, Q};
use codimlab_core::symmetric::{specht_dim, Partition};
use codimlab_core::witness::{
    build_f_family, column_constant, reference_block_value, reference_substitution, BetaVector,
    SymmetrizerOrder, WitnessEvaluator, WitnessVariant,
};
use codimlab_core::{AlgebraElement, GradedLieAlgebra};
use num_bigint::BigInt;

const U0: usize = 0;
const UU: usize = 1;
const V0: usize = 2;
const T0: usize = 4;

#[test]
fn block_constants() {
    let expected = [
        (1, -64, V0),
        (2, 16, U0),
        (3, -8, T0),
        (4, -2, U0),
        (5, -4, T0),
        (6, 1, U0),
        (7, 1, T0),
        (8, 1, UU),
    ];
    for (kind, c, j) in expected {
        assert_eq!(reference_block_value(kind).unwrap(), (q(c), j), "f_{kind}");
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

struct Evaluations {
    f: AlgebraElement,
    e_star: AlgebraElement,
    row_after_column: AlgebraElement,
    row_only: AlgebraElement,
    n: usize,
    specht: i64,
    column_order: u128,
}

fn evaluate_all(lambda: &[usize]) -> Evaluations {
    let l = GradedLieAlgebra::example_algebra();
    let beta = BetaVector::from_partition(&Partition::new(lambda.to_vec()).unwrap()).unwrap();
    let w = build_f_family(&beta).unwrap();
    let s = reference_substitution(&beta).unwrap();
    let ev = WitnessEvaluator::new(&l).unwrap();
    Evaluations {
        f: ev.evaluate(&w, &s).unwrap(),
        e_star: ev
            .symmetrized(&w, &w.tableau, &s, SymmetrizerOrder::ColumnAfterRow)
            .unwrap(),
        row_after_column: ev
            .symmetrized(&w, &w.tableau, &s, SymmetrizerOrder::RowAfterColumn)
            .unwrap(),
        row_only: ev.row_symmetrized(&w, &w.tableau, &s).unwrap(),
        n: w.degree(),
        specht: specht_dim(&beta.shape()).try_into().unwrap(),
        column_order: column_constant(&beta),
    }
}

fn multiple_of_u0(x: &AlgebraElement) -> Q {
    let (c, j) = x
        .as_multiple_of_basis()
        .expect("multiple of one basis vector");
    assert_eq!(j, U0);
    c
}

fn check_identities(e: &Evaluations) {
    // b_T a_T acts on the witness as the scalar n!/dim S^λ
    let gamma = Q::new(BigInt::from(factorial(e.n)), BigInt::from(e.specht));
    assert_eq!(multiple_of_u0(&e.e_star), multiple_of_u0(&e.f) * gamma);
    // a_T b_T f = |C_T| · a_T f
    let c = Q::from_integer(BigInt::from(e.column_order));
    assert_eq!(
        multiple_of_u0(&e.row_after_column),
        multiple_of_u0(&e.row_only) * c
    );
}

#[test]
fn double_prime_witness_is_nonzero() {
    let e = evaluate_all(&[2, 2, 2, 1, 1]);
    assert_eq!(multiple_of_u0(&e.f), q(-512));
    assert_eq!(multiple_of_u0(&e.e_star), q(-737_280));
    assert_eq!(e.column_order, 720);
    check_identities(&e);
}

#[test]
fn full_witness_is_nonzero() {
    let lambda = Partition::new(vec![3, 2, 2, 1, 1]).unwrap();
    let beta = BetaVector::from_partition(&lambda).unwrap();
    assert_eq!(beta.variant(), WitnessVariant::F);
    assert_eq!((beta.get(4), beta.get(7)), (1, 1));
    let e = evaluate_all(lambda.parts());
    assert_eq!(multiple_of_u0(&e.f), q(-256));
    assert_eq!(multiple_of_u0(&e.e_star), q(-573_440));
    check_identities(&e);
}

#[test]
fn structured_evaluation_matches_expansion_on_small_shapes() {
    let l = GradedLieAlgebra::example_algebra();
    for lambda in [vec![2, 1, 1, 1, 1], vec![2, 2, 1, 1, 1]] {
        let beta = BetaVector::from_partition(&Partition::new(lambda.clone()).unwrap()).unwrap();
        let w = build_f_family(&beta).unwrap();
        let p = w.to_lie_polynomial(10_000_000).unwrap();
        let s = reference_substitution(&beta).unwrap();
        assert_eq!(
            w.evaluate(&l, &s).unwrap(),
            codimlab_core::poly::evaluate(&l, &p, &s).unwrap(),
            "{lambda:?}"
        );
    }
}
