//! The claim suite behind `verify-paper`.
//!
//! Expected values live in `data/claims.tsv`; this module measures each claim
//! on a given algebra and compares.

use std::collections::HashMap;
use std::fmt;

use codimlab_core::ado::{adjoint_rep, graded_ado, verify_graded_ado};
use codimlab_core::asymptotics::{maximize_phi, mu_partition};
use codimlab_core::codim::{
    cocharacter_table_in, graded_codimension, theta_report, CocharacterTable, CodimOptions,
    QuotientModule,
};
use codimlab_core::haction::{
    density_witness, dual_semigroup_action, trivial_action, verify_compatibility,
};
use codimlab_core::linalg::rank::RankMode;
use codimlab_core::linalg::{fmt_q, q, Subspace, Q};
use codimlab_core::regev::{
    centrality_sweep, random_tuples, regev_eval_dp, regev_eval_naive, RegevDescriptor,
};
use codimlab_core::symmetric::{
    partitions_of, specht_dim, specht_dim_branching, theta_admissible, Partition,
};
use codimlab_core::witness::{
    build_f_family, reference_block_value_in, reference_substitution, BetaVector, SymmetrizerOrder,
    WitnessEvaluator,
};
use codimlab_core::{AlgebraElement, FiniteSemigroup, GradedLieAlgebra};
use num_bigint::BigUint;
use num_traits::Zero;

const MANIFEST: &str = include_str!("../data/claims.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Exact,
    Approx,
    Multiple,
    Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimSpec {
    pub id: String,
    pub level: Level,
    pub check: Check,
    pub expected: String,
    pub basis: String,
    pub description: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    /// For SKIPPED claims, the guard that tripped.
    pub measured: String,
    pub expected: String,
    pub basis: String,
}

pub const HEADER: &str = "#id\tstatus\tmeasured\texpected\tbasis\tdescription";

impl ClaimResult {
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.id, self.status, self.measured, self.expected, self.basis, self.description
        )
    }
}

pub fn manifest() -> Vec<ClaimSpec> {
    MANIFEST
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 6, "malformed manifest row: {l}");
            ClaimSpec {
                id: f[0].into(),
                level: match f[1] {
                    "quick" => Level::Quick,
                    "full" => Level::Full,
                    other => panic!("unknown level {other}"),
                },
                check: match f[2] {
                    "exact" => Check::Exact,
                    "approx" => Check::Approx,
                    "multiple" => Check::Multiple,
                    "predicate" => Check::Predicate,
                    other => panic!("unknown check {other}"),
                },
                expected: f[3].into(),
                basis: f[4].into(),
                description: f[5].into(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub level: Level,
    pub seed: u64,
    /// Runs the t = 3 density witness at the full level.
    pub with_t3: bool,
}

/// A measured value; `pass` is set for checks the manifest cannot decide alone.
struct Measured {
    value: String,
    pass: Option<bool>,
}

impl Measured {
    fn plain(value: impl Into<String>) -> Self {
        Measured {
            value: value.into(),
            pass: None,
        }
    }

    fn decided(value: impl Into<String>, pass: bool) -> Self {
        Measured {
            value: value.into(),
            pass: Some(pass),
        }
    }
}

enum Outcome {
    Measured(Measured),
    Skipped(String),
}

type Res<T> = Result<T, String>;

fn core<T>(r: codimlab_core::Result<T>) -> Res<T> {
    r.map_err(|e| e.to_string())
}

/// Formats `Σ c_k b_k` as `c*name + ...`.
pub fn fmt_element(alg: &GradedLieAlgebra, x: &AlgebraElement) -> String {
    let terms: Vec<String> = x
        .coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{}*{}", fmt_q(c), alg.names()[k]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn fmt_subspace(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(fmt_q).collect::<Vec<_>>().join(" ")))
        .collect();
    if rows.is_empty() {
        "0".into()
    } else {
        rows.join(" ")
    }
}

struct Context<'a> {
    alg: &'a GradedLieAlgebra,
    opts: SuiteOptions,
    codim: HashMap<usize, Res<u128>>,
    cochar: HashMap<usize, Res<CocharacterTable>>,
}

impl<'a> Context<'a> {
    fn codim_opts(&self) -> CodimOptions {
        CodimOptions {
            seed: self.opts.seed,
            ..Default::default()
        }
    }

    fn codim(&mut self, n: usize) -> Res<u128> {
        let opts = self.codim_opts();
        let alg = self.alg;
        self.codim
            .entry(n)
            .or_insert_with(|| core(graded_codimension(alg, n, &opts)).map(|r| r.value))
            .clone()
    }

    fn cochar(&mut self, n: usize) -> Res<CocharacterTable> {
        let opts = self.codim_opts();
        let alg = self.alg;
        self.cochar
            .entry(n)
            .or_insert_with(|| {
                let module = core(QuotientModule::build(alg, n, &opts))?;
                core(cocharacter_table_in(&module, &opts))
            })
            .clone()
    }

    fn need_dim5(&self) -> Res<()> {
        if self.alg.dim() != 5 {
            return Err(format!(
                "needs a five-dimensional algebra, got dimension {}",
                self.alg.dim()
            ));
        }
        Ok(())
    }

    fn measure(&mut self, spec: &ClaimSpec) -> Res<Outcome> {
        let id = spec.id.as_str();
        let alg = self.alg;
        let m = if id == "algebra.valid" {
            let report = alg.validate();
            if report.is_valid() {
                Measured::plain("valid")
            } else {
                Measured::plain(
                    format!(
                        "{} violations, first {}",
                        report.violations.len(),
                        report.violations[0]
                    )
                    .replace('\t', " "),
                )
            }
        } else if let Some(q) = id.strip_prefix("opt.q") {
            let q: usize = q.parse().map_err(|_| format!("bad claim id {id}"))?;
            Measured::plain(format!(
                "{:.12}",
                core(maximize_phi(q, 1e-12, self.opts.seed))?.value
            ))
        } else if id == "opt.mu" {
            let r = core(maximize_phi(5, 1e-12, self.opts.seed))?;
            let mu = core(mu_partition(&r.point, 10_000))?;
            Measured::plain(if theta_admissible(&mu) {
                "admissible".to_string()
            } else {
                format!("inadmissible ({mu})")
            })
        } else if let Some(k) = id
            .strip_prefix("witness.f")
            .filter(|k| k.parse::<usize>().is_ok())
        {
            self.need_dim5()?;
            let k: usize = k.parse().map_err(|_| format!("bad claim id {id}"))?;
            let (c, j) = core(reference_block_value_in(alg, k))?;
            Measured::plain(format!("{}*{}", fmt_q(&c), alg.names()[j]))
        } else if let Some(rest) = id.strip_prefix("witness.") {
            self.need_dim5()?;
            let (shape, what) = rest
                .split_once('.')
                .ok_or_else(|| format!("bad claim id {id}"))?;
            let lambda = match shape {
                "dprime" => vec![2, 2, 2, 1, 1],
                "full" => vec![3, 2, 2, 1, 1],
                _ => return Err(format!("bad claim id {id}")),
            };
            let beta = core(BetaVector::from_partition(&core(Partition::new(lambda))?))?;
            let w = core(build_f_family(&beta))?;
            let s = core(reference_substitution(&beta))?;
            let ev = core(WitnessEvaluator::new(alg))?;
            let v = match what {
                "f" => core(ev.evaluate(&w, &s))?,
                "estar" => {
                    core(ev.symmetrized(&w, &w.tableau, &s, SymmetrizerOrder::ColumnAfterRow))?
                }
                _ => return Err(format!("bad claim id {id}")),
            };
            let pass = matches!(v.as_multiple_of_basis(), Some((c, j)) if !c.is_zero() && alg.names()[j] == spec.expected);
            Measured::decided(fmt_element(alg, &v), pass)
        } else if let Some(n) = id.strip_prefix("codim.full_enum.c") {
            let n: usize = n.parse().map_err(|_| format!("bad claim id {id}"))?;
            let opts = CodimOptions {
                rank_mode: RankMode::Exact,
                reduced: false,
                orbit: false,
                ..self.codim_opts()
            };
            Measured::plain(core(graded_codimension(alg, n, &opts))?.value.to_string())
        } else if let Some(n) = id.strip_prefix("codim.c") {
            let n: usize = n.parse().map_err(|_| format!("bad claim id {id}"))?;
            Measured::plain(self.codim(n)?.to_string())
        } else if let Some(n) = id.strip_prefix("theta.n") {
            let n: usize = n.parse().map_err(|_| format!("bad claim id {id}"))?;
            let report = theta_report(&self.cochar(n)?);
            let names: Vec<String> = report.violations.iter().map(|l| format!("({l})")).collect();
            Measured::plain(if names.is_empty() {
                "0 violations".to_string()
            } else {
                format!("{} violations {}", names.len(), names.join(" "))
            })
        } else if let Some(n) = id.strip_prefix("consistency.n") {
            let n: usize = n.parse().map_err(|_| format!("bad claim id {id}"))?;
            let sum = self.cochar(n)?.weighted_sum();
            let c = BigUint::from(self.codim(n)?);
            Measured::decided(format!("{sum} vs {c}"), sum == c)
        } else if let Some(n) = id.strip_prefix("bound.n") {
            let n: usize = n.parse().map_err(|_| format!("bad claim id {id}"))?;
            let c = self.codim(n)?;
            let row = &core(bound_report_from(alg, n, c))?;
            Measured::decided(
                format!("c_n={} trivial={} root={:.6}", row.0, row.1, row.2),
                row.0 <= row.1 && row.2 <= 4.829,
            )
        } else if id == "structure.radical" {
            Measured::plain(fmt_subspace(&alg.solvable_radical()))
        } else if id == "structure.radical_graded" {
            Measured::plain(if alg.is_graded_ideal(&alg.solvable_radical()) {
                "graded ideal"
            } else {
                "not graded"
            })
        } else if id == "structure.l0_ideal" {
            let l0 = degree_zero(alg);
            Measured::plain(if alg.is_graded_ideal(&l0) {
                "graded ideal"
            } else if alg.is_ideal(&l0) {
                "ideal, not graded"
            } else {
                "not an ideal"
            })
        } else if let Some(label) = id.strip_prefix("structure.spin.") {
            self.need_dim5()?;
            let seed = spin_seed(label).ok_or_else(|| format!("bad claim id {id}"))?;
            let ops: Vec<_> = (0..alg.dim())
                .map(|i| alg.ad_basis(i))
                .chain((0..alg.semigroup().size()).map(|t| alg.projection_matrix(t)))
                .collect();
            let s = core(alg.spin(&seed, &ops))?;
            Measured::plain(if s == Subspace::full(alg.dim()) {
                "L".to_string()
            } else if s == degree_zero(alg) {
                "L_0".to_string()
            } else {
                format!("dim {}", s.dim())
            })
        } else if let Some(what) = id.strip_prefix("ado.") {
            if what == "nonabelian" {
                let k = alg.semigroup().size().max(2);
                let re = core(alg.regraded(FiniteSemigroup::left_zero(k), vec![0; alg.dim()]))?;
                let rep = core(adjoint_rep(&re))?;
                return Ok(Outcome::Measured(Measured::plain(
                    match graded_ado(&re, &rep) {
                        Err(codimlab_core::Error::NonAbelianSemigroup) => "rejected".to_string(),
                        Err(e) => format!("error: {e}"),
                        Ok(_) => "accepted".to_string(),
                    },
                )));
            }
            let g = core(graded_ado(alg, &core(adjoint_rep(alg))?))?;
            let r = verify_graded_ado(&g);
            Measured::plain(match what {
                "dim" => g.dim().to_string(),
                "homomorphism" => format!(
                    "{}/{}",
                    r.pairs_checked - r.homomorphism_failures.len(),
                    r.pairs_checked
                ),
                "injective" => format!("rank {}", r.rank),
                "containment" => format!("{} failures", r.containment_failures.len()),
                _ => return Err(format!("bad claim id {id}")),
            })
        } else if id == "action.compat" {
            let r = verify_compatibility(alg, &dual_semigroup_action(alg));
            Measured::plain(if r.passed() {
                "compatible".to_string()
            } else {
                format!("{r:?}")
            })
        } else if id == "regev.sweep" {
            let r = core(centrality_sweep(2))?;
            let scalars: Vec<String> = r.scalars.iter().map(i64::to_string).collect();
            Measured::decided(
                format!(
                    "{}/{} scalar, {} nonzero, values {{{}}}",
                    r.tuples - r.non_scalar,
                    r.tuples,
                    r.nonzero,
                    scalars.join(",")
                ),
                r.passed(),
            )
        } else if id == "regev.dp" {
            let d = core(RegevDescriptor::new(2))?;
            let tuples = random_tuples(2, 100, 5, self.opts.seed);
            let mut agree = 0;
            for (xs, ys) in &tuples {
                if core(regev_eval_naive(&d, xs, ys))? == core(regev_eval_dp(&d, xs, ys))? {
                    agree += 1;
                }
            }
            Measured::plain(format!("{agree}/{}", tuples.len()))
        } else if id == "regev.t3" {
            if !self.opts.with_t3 {
                return Ok(Outcome::Skipped("opt-in: pass --with-t3".into()));
            }
            let s = GradedLieAlgebra::sl2();
            let w = core(density_witness(&s, &trivial_action(&s), true))?;
            Measured::decided(
                format!("K={} verified={}", fmt_q(&w.k), w.verification),
                !w.k.is_zero() && w.verification,
            )
        } else if id == "specht.hook" {
            let bad = (1..=10)
                .flat_map(partitions_of)
                .filter(|l| specht_dim(l) != specht_dim_branching(l))
                .count();
            Measured::plain(format!("{bad} mismatches"))
        } else if id == "specht.squares" {
            let bad = (1..=8)
                .filter(|&n| {
                    let total: BigUint =
                        partitions_of(n).iter().map(|l| specht_dim(l).pow(2)).sum();
                    total != factorial(n)
                })
                .count();
            Measured::plain(format!("{bad} mismatches"))
        } else if id == "specht.rect" {
            let mut bad = 0;
            for t in 1..=4 {
                for k in 1..=5 {
                    let lambda = core(Partition::new(vec![2 * k; t]))?;
                    if specht_dim(&lambda) * factorial(2 * k + t).pow(t as u32)
                        < factorial(2 * k * t)
                    {
                        bad += 1;
                    }
                }
            }
            Measured::plain(format!("{bad} mismatches"))
        } else {
            return Err(format!("no measurement for claim {id}"));
        };
        Ok(Outcome::Measured(m))
    }
}

fn bound_report_from(
    alg: &GradedLieAlgebra,
    n: usize,
    c: u128,
) -> codimlab_core::Result<(u128, u128, f64)> {
    let trivial = (alg.dim() as u128)
        .checked_pow(n as u32 + 1)
        .ok_or(codimlab_core::Error::Overflow)?;
    Ok((c, trivial, (c as f64).powf(1.0 / n as f64)))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn degree_zero(alg: &GradedLieAlgebra) -> Subspace {
    let vs: Vec<Vec<Q>> = alg
        .homogeneous_basis(0)
        .into_iter()
        .map(|i| alg.basis_element(i).coords)
        .collect();
    Subspace::span(alg.dim(), &vs).expect("basis vectors have the ambient length")
}

/// `b1`..`b5`, `b2+b4`, `b2-b4` in basis coordinates.
fn spin_seed(label: &str) -> Option<AlgebraElement> {
    let mut coords = vec![q(0); 5];
    let (a, b, sign) = match label.split_once(['+', '-']) {
        Some((a, b)) => (a, Some(b), if label.contains('+') { 1 } else { -1 }),
        None => (label, None, 1),
    };
    let idx = |s: &str| {
        s.strip_prefix('b')?
            .parse::<usize>()
            .ok()
            .filter(|&i| (1..=5).contains(&i))
            .map(|i| i - 1)
    };
    coords[idx(a)?] = q(1);
    if let Some(b) = b {
        coords[idx(b)?] += q(sign);
    }
    Some(AlgebraElement::from_coords(coords))
}

fn compare(spec: &ClaimSpec, m: &Measured) -> bool {
    if let Some(p) = m.pass {
        return p;
    }
    match spec.check {
        Check::Approx => match (m.value.parse::<f64>(), spec.expected.parse::<f64>()) {
            (Ok(a), Ok(b)) => (a - b).abs() <= 1e-9,
            _ => false,
        },
        _ => m.value == spec.expected,
    }
}

/// Runs every claim in the manifest; full-level claims are SKIPPED at the quick level.
pub fn run_verify_paper(alg: &GradedLieAlgebra, opts: SuiteOptions) -> Vec<ClaimResult> {
    run_claims(alg, opts, |_| true)
}

/// As [`run_verify_paper`], restricted to claims whose id satisfies `filter`.
pub fn run_claims(
    alg: &GradedLieAlgebra,
    opts: SuiteOptions,
    filter: impl Fn(&str) -> bool,
) -> Vec<ClaimResult> {
    let mut ctx = Context {
        alg,
        opts,
        codim: HashMap::new(),
        cochar: HashMap::new(),
    };
    manifest()
        .into_iter()
        .filter(|s| filter(&s.id))
        .map(|spec| {
            let outcome = if spec.level > opts.level {
                Ok(Outcome::Skipped("full level only".into()))
            } else {
                ctx.measure(&spec)
            };
            let (status, measured) = match outcome {
                Ok(Outcome::Skipped(guard)) => (Status::Skipped, guard),
                Ok(Outcome::Measured(m)) => (
                    if compare(&spec, &m) {
                        Status::Pass
                    } else {
                        Status::Fail
                    },
                    m.value,
                ),
                Err(e) => (Status::Fail, format!("error: {e}")),
            };
            ClaimResult {
                id: spec.id,
                description: spec.description,
                status,
                measured,
                expected: spec.expected,
                basis: spec.basis,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_ids_are_unique_and_measurable() {
        let specs = manifest();
        let mut ids: Vec<&str> = specs.iter().map(|s| s.id.as_str()).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        let alg = GradedLieAlgebra::example_algebra();
        let mut ctx = Context {
            alg: &alg,
            opts: SuiteOptions {
                level: Level::Quick,
                seed: 0,
                with_t3: false,
            },
            codim: HashMap::new(),
            cochar: HashMap::new(),
        };
        for s in specs
            .iter()
            .filter(|s| s.level == Level::Quick && !s.id.starts_with("regev."))
        {
            assert!(ctx.measure(s).is_ok(), "{}", s.id);
        }
    }

    #[test]
    fn spin_labels() {
        assert_eq!(
            spin_seed("b2-b4").unwrap(),
            AlgebraElement::from_i64(&[0, 1, 0, -1, 0])
        );
        assert_eq!(
            spin_seed("b2+b4").unwrap(),
            AlgebraElement::from_i64(&[0, 1, 0, 1, 0])
        );
        assert_eq!(
            spin_seed("b5").unwrap(),
            AlgebraElement::from_i64(&[0, 0, 0, 0, 1])
        );
        assert!(spin_seed("b6").is_none());
    }

    #[test]
    fn element_formatting() {
        let alg = GradedLieAlgebra::example_algebra();
        assert_eq!(
            fmt_element(&alg, &AlgebraElement::from_i64(&[-2, 0, 0, 0, 1])),
            "-2*u0 + 1*t0"
        );
        assert_eq!(fmt_element(&alg, &AlgebraElement::zero(5)), "0");
    }
}
