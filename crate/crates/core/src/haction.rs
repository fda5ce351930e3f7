//! Generalized actions on a Lie algebra, the multiplication algebra and its
//! density, and the density witness built from the Regev polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, GradedLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{common_denominator, QMatrix, Subspace, Q};
use crate::regev::{regev_eval_dp, Mat, RegevDescriptor};

/// Coefficients over the operator basis of `H`.
pub type Coeffs = Vec<Q>;

/// `ρ: H → End(L)` on a basis of `H`, with the compatibility pairs of each
/// basis element: `h·[a, b] = Σ_i [h′_i a, h″_i b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedAction {
    pub names: Vec<String>,
    pub operators: Vec<QMatrix>,
    pub compat: Vec<Vec<(Coeffs, Coeffs)>>,
}

fn unit_coeffs(k: usize, i: usize) -> Coeffs {
    (0..k)
        .map(|j| if i == j { Q::one() } else { Q::zero() })
        .collect()
}

impl GeneralizedAction {
    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn operator(&self, c: &[Q]) -> QMatrix {
        let d = self.operators[0].rows();
        let mut acc = QMatrix::zeros(d, d);
        for (x, m) in c.iter().zip(&self.operators) {
            if !x.is_zero() {
                acc = &acc + &m.scale(x);
            }
        }
        acc
    }

    /// Whether the identity lies in the span of the operators.
    pub fn has_unit(&self) -> bool {
        let d = self.operators[0].rows();
        let flat: Vec<Vec<Q>> = self.operators.iter().map(QMatrix::flatten).collect();
        Subspace::span(d * d, &flat)
            .map(|s| s.contains(&QMatrix::identity(d).flatten()))
            .unwrap_or(false)
    }
}

/// `H = F`, acting by the identity with `1·[a, b] = [a, b]`.
pub fn trivial_action(alg: &GradedLieAlgebra) -> GeneralizedAction {
    GeneralizedAction {
        names: vec!["1".into()],
        operators: vec![QMatrix::identity(alg.dim())],
        compat: vec![vec![(vec![Q::one()], vec![Q::one()])]],
    }
}

/// The dual of the semigroup algebra acting by homogeneous projections;
/// `h_t` has pairs `(h_r, h_s)` for each `r·s = t`.
pub fn dual_semigroup_action(alg: &GradedLieAlgebra) -> GeneralizedAction {
    let sg = alg.semigroup();
    let k = sg.size();
    GeneralizedAction {
        names: (0..k).map(|t| format!("h{t}")).collect(),
        operators: (0..k).map(|t| alg.projection_matrix(t)).collect(),
        compat: (0..k)
            .map(|t| {
                sg.factorizations(t)
                    .into_iter()
                    .map(|(r, s)| (unit_coeffs(k, r), unit_coeffs(k, s)))
                    .collect()
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompatReport {
    /// `(h, a, b)` with `h·[a, b] ≠ Σ [h′a, h″b]`.
    pub eq1_failures: Vec<(usize, usize, usize)>,
    /// `(h, l)` with `ρ(h) ad(l) ≠ Σ ad(h′ l) ρ(h″)`.
    pub eq3_failures: Vec<(usize, usize)>,
    pub has_unit: bool,
    pub malformed: Vec<String>,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.eq1_failures.is_empty()
            && self.eq3_failures.is_empty()
            && self.has_unit
            && self.malformed.is_empty()
    }
}

fn apply(m: &QMatrix, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::from_coords(m.apply(&x.coords).expect("square operator of algebra size"))
}

pub fn verify_compatibility(alg: &GradedLieAlgebra, act: &GeneralizedAction) -> CompatReport {
    let mut report = CompatReport::default();
    let d = alg.dim();
    if act.is_empty() || act.compat.len() != act.len() {
        report
            .malformed
            .push("operator and compatibility lists differ in length".into());
        return report;
    }
    for (i, m) in act.operators.iter().enumerate() {
        if m.rows() != d || m.cols() != d {
            report.malformed.push(format!(
                "operator {i} is {}x{}, expected {d}x{d}",
                m.rows(),
                m.cols()
            ));
        }
    }
    for (h, pairs) in act.compat.iter().enumerate() {
        if pairs
            .iter()
            .any(|(a, b)| a.len() != act.len() || b.len() != act.len())
        {
            report
                .malformed
                .push(format!("pair of operator {h} has wrong coefficient length"));
        }
    }
    if !report.malformed.is_empty() {
        return report;
    }
    report.has_unit = act.has_unit();
    let pairs: Vec<Vec<(QMatrix, QMatrix)>> = act
        .compat
        .iter()
        .map(|ps| {
            ps.iter()
                .map(|(a, b)| (act.operator(a), act.operator(b)))
                .collect()
        })
        .collect();
    let basis: Vec<AlgebraElement> = (0..d).map(|i| alg.basis_element(i)).collect();
    for (h, rho) in act.operators.iter().enumerate() {
        for a in 0..d {
            for b in 0..d {
                let lhs = apply(rho, &alg.bracket_unchecked(&basis[a], &basis[b]));
                let mut rhs = AlgebraElement::zero(d);
                for (p, q) in &pairs[h] {
                    rhs = &rhs + &alg.bracket_unchecked(&apply(p, &basis[a]), &apply(q, &basis[b]));
                }
                if lhs != rhs {
                    report.eq1_failures.push((h, a, b));
                }
            }
        }
        for l in 0..d {
            let lhs = rho * &alg.ad_basis(l);
            let mut rhs = QMatrix::zeros(d, d);
            for (p, q) in &pairs[h] {
                let adl = alg
                    .ad(&apply(p, &basis[l]))
                    .expect("element of the algebra");
                rhs = &rhs + &(&adl * q);
            }
            if lhs != rhs {
                report.eq3_failures.push((h, l));
            }
        }
    }
    report
}

/// A generator of the multiplication algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Ad(usize),
    Rho(usize),
}

/// The associative algebra generated by `ad(L)` and `ρ(H)`, with the word
/// (product of generators, left to right) that produced each basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicationAlgebra {
    pub d: usize,
    pub elements: Vec<QMatrix>,
    pub words: Vec<Vec<Generator>>,
    span: Subspace,
}

fn word_matrix(alg: &GradedLieAlgebra, act: &GeneralizedAction, word: &[Generator]) -> QMatrix {
    word.iter().fold(QMatrix::identity(alg.dim()), |acc, g| {
        let m = match *g {
            Generator::Ad(i) => alg.ad_basis(i),
            Generator::Rho(h) => act.operators[h].clone(),
        };
        &acc * &m
    })
}

pub fn multiplication_algebra(
    alg: &GradedLieAlgebra,
    act: &GeneralizedAction,
) -> MultiplicationAlgebra {
    let d = alg.dim();
    let gens: Vec<(Generator, QMatrix)> = (0..d)
        .map(|i| (Generator::Ad(i), alg.ad_basis(i)))
        .chain(
            act.operators
                .iter()
                .enumerate()
                .map(|(h, m)| (Generator::Rho(h), m.clone())),
        )
        .collect();
    let mut span = Subspace::zero(d * d);
    let mut elements = Vec::new();
    let mut words = Vec::new();
    let id = QMatrix::identity(d);
    span.insert(&id.flatten());
    elements.push(id);
    words.push(Vec::new());
    // breadth-first over word length; prepending a generator keeps words short
    let mut frontier = 0;
    while frontier < elements.len() {
        let end = elements.len();
        for idx in frontier..end {
            for (g, m) in &gens {
                let prod = m * &elements[idx];
                if span.insert(&prod.flatten()) {
                    let mut w = vec![*g];
                    w.extend_from_slice(&words[idx]);
                    elements.push(prod);
                    words.push(w);
                }
            }
        }
        frontier = end;
    }
    MultiplicationAlgebra {
        d,
        elements,
        words,
        span,
    }
}

impl MultiplicationAlgebra {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        self.span.contains(&m.flatten())
    }

    /// Products of all pairs of basis elements stay in the span.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&(a * b))))
    }
}

pub fn density_check(m: &MultiplicationAlgebra) -> bool {
    m.dim() == m.d * m.d
}

/// Outcome of probing for H-simplicity.
#[derive(Debug, Clone, PartialEq)]
pub enum HSimplicity {
    /// A proper nonzero H-invariant ideal, found as the spin of a basis vector.
    ProperIdealFound(Subspace),
    /// Dense multiplication algebra, non-abelian, and every basis spin is all of `L`.
    DenseAndSpinsConsistent,
    Unknown,
}

pub fn probe_h_simplicity(alg: &GradedLieAlgebra, act: &GeneralizedAction) -> HSimplicity {
    let d = alg.dim();
    let ops: Vec<QMatrix> = (0..d)
        .map(|i| alg.ad_basis(i))
        .chain(act.operators.iter().cloned())
        .collect();
    for i in 0..d {
        if let Ok(s) = alg.spin(&alg.basis_element(i), &ops) {
            if !s.is_zero() && s.dim() < d {
                return HSimplicity::ProperIdealFound(s);
            }
        }
    }
    let abelian = alg.derived_algebra().is_zero();
    if !abelian && density_check(&multiplication_algebra(alg, act)) {
        HSimplicity::DenseAndSpinsConsistent
    } else {
        HSimplicity::Unknown
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityWitness {
    /// Number of `z` variables (two per `ad` factor in the completing words).
    pub c: usize,
    /// Basis indices substituted for the `z` variables, in order.
    pub zbar: Vec<usize>,
    /// Words completing `ad(l_1), …, ad(l_t)` to a basis of `End(L)`.
    pub completion: Vec<Vec<Generator>>,
    pub k: Q,
    pub verification: bool,
}

fn to_integer_mat(m: &QMatrix) -> (Mat<BigInt>, BigInt) {
    let flat = m.flatten();
    let den = common_denominator(flat.iter());
    let rows = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| (m.get(i, j) * Q::from(den.clone())).to_integer())
                .collect()
        })
        .collect();
    (Mat::from_rows(rows).expect("square"), den)
}

/// Substitutes a basis of `End(L)` into `f_t` (`t = dim L`) with
/// `x_i = y_i = ad(l_i)` for `i ≤ t` and the completing words after that.
/// The result is `K·id` with `K ≠ 0` when `M(L)` is dense.
///
/// `t = 3` needs `allow_t3`.
pub fn density_witness(
    alg: &GradedLieAlgebra,
    act: &GeneralizedAction,
    allow_t3: bool,
) -> Result<DensityWitness> {
    let t = alg.dim();
    let m = multiplication_algebra(alg, act);
    if !density_check(&m) {
        return Err(Error::NotDense {
            dim: m.dim(),
            full: t * t,
        });
    }
    if t > 3 || (t == 3 && !allow_t3) {
        return Err(Error::GuardExceeded(format!(
            "density witness for dim L = {t} is not enabled"
        )));
    }
    let mut span = Subspace::zero(t * t);
    let mut ops: Vec<QMatrix> = Vec::new();
    for i in 0..t {
        let a = alg.ad_basis(i);
        if !span.insert(&a.flatten()) {
            return Err(Error::NotFaithful);
        }
        ops.push(a);
    }
    // completing words of the form ad(l_{i_1})…ad(l_{i_m})·ρ(h)
    let mut candidates: Vec<Vec<Generator>> = Vec::new();
    for w in &m.words {
        let ads: Vec<Generator> = w
            .iter()
            .copied()
            .filter(|g| matches!(g, Generator::Ad(_)))
            .collect();
        for h in 0..act.len() {
            let mut c = ads.clone();
            c.push(Generator::Rho(h));
            candidates.push(c);
        }
    }
    candidates.sort_by_key(|w| w.len());
    let mut completion = Vec::new();
    for w in candidates {
        if span.dim() == t * t {
            break;
        }
        let mat = word_matrix(alg, act, &w);
        if span.insert(&mat.flatten()) {
            ops.push(mat);
            completion.push(w);
        }
    }
    if span.dim() < t * t {
        return Err(Error::NotDense {
            dim: span.dim(),
            full: t * t,
        });
    }
    let zbar: Vec<usize> = completion
        .iter()
        .flat_map(|w| {
            w.iter().filter_map(|g| {
                if let Generator::Ad(i) = g {
                    Some(*i)
                } else {
                    None
                }
            })
        })
        .collect();
    let mut scale = BigInt::one();
    let mut ints = Vec::with_capacity(ops.len());
    for op in &ops {
        let (mi, den) = to_integer_mat(op);
        scale *= &den * &den;
        ints.push(mi);
    }
    let desc = RegevDescriptor::new(t)?;
    let value = regev_eval_dp(&desc, &ints, &ints)?;
    // each operator fills one x-slot and one y-slot
    let result = QMatrix::from_rows(
        (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| Q::new(value.get(i, j).clone(), scale.clone()))
                    .collect()
            })
            .collect(),
    )?;
    let k = result.scalar_value().unwrap_or_else(Q::zero);
    let verification = !k.is_zero() && {
        let normalized = result.scale(&(Q::one() / &k));
        (0..t).all(|i| {
            let z = AlgebraElement::basis(t, i);
            apply(&normalized, &z) == z
        })
    };
    Ok(DensityWitness {
        c: 2 * zbar.len(),
        zbar,
        completion,
        k,
        verification,
    })
}
