use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use codimlab_core::ado::{adjoint_rep, graded_ado, verify_graded_ado};
use codimlab_core::asymptotics::{bound_report, closed_form_max, maximize_phi};
use codimlab_core::codim::{cocharacter_table, graded_codimension, CodimOptions};
use codimlab_core::linalg::rank::RankMode;
use codimlab_core::linalg::{fmt_q, QMatrix};
use codimlab_core::regev::{
    centrality_sweep, random_tuples, regev_eval_dp, sweep_value, RegevDescriptor,
};
use codimlab_core::symmetric::Partition;
use codimlab_core::witness::{
    build_f_family, reference_substitution, BetaVector, SymmetrizerOrder, WitnessEvaluator,
};
use codimlab_core::GradedLieAlgebra;

use crate::cache::Cache;
use crate::claims::{self, fmt_element, Level, Status, SuiteOptions};
use crate::error::CliError;
use crate::format::{parse_algebra, serialize_algebra};

/// The algebra shipped as `data/paper_L.alg`.
pub const DEFAULT_ALGEBRA: &str = include_str!("../data/paper_L.alg");

#[derive(Debug, Parser)]
#[command(
    name = "codimlab",
    version,
    about = "Graded codimensions and cocharacters of semigroup-graded Lie algebras"
)]
pub struct Cli {
    /// Algebra file; defaults to the shipped five-dimensional example.
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: logical cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RankArg {
    Exact,
    Modular,
    Auto,
}

impl RankArg {
    fn mode(self) -> RankMode {
        match self {
            RankArg::Exact => RankMode::Exact,
            RankArg::Modular => RankMode::Modular,
            RankArg::Auto => RankMode::default(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validates the algebra and prints basic invariants.
    Check,
    /// Graded codimensions c_1..c_n.
    Codim {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "auto")]
        rank: RankArg,
        #[arg(long, default_value_t = 7)]
        cap: usize,
    },
    /// Cocharacter multiplicities in degree n.
    Cochar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "auto")]
        rank: RankArg,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
    /// c_n^(1/n) against the bounds, or the maximum of Phi with --q.
    Bound {
        #[arg(long, required_unless_present = "q")]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value = "auto")]
        rank: RankArg,
        #[arg(long, default_value_t = 7)]
        cap: usize,
    },
    /// Builds f, f' or f'' for a shape and evaluates it at the reference substitution.
    Witness {
        /// Partition, e.g. 2,2,2,1,1.
        #[arg(long, conflicts_with = "beta")]
        lambda: Option<String>,
        /// lambda_5 followed by beta_2..beta_8.
        #[arg(long)]
        beta: Option<String>,
    },
    /// Graded embedding from the adjoint representation.
    Ado,
    /// Central polynomial evaluations on t x t matrices.
    Regev {
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// All matrix-unit tuples.
        #[arg(long, conflicts_with = "random")]
        sweep: bool,
        /// Number of seeded random integer tuples.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 5)]
        range: i64,
    },
    /// Runs the claim suite.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
        /// Include the t = 3 density witness at the full level.
        #[arg(long)]
        with_t3: bool,
    },
}

/// Parameters shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algebra: Option<PathBuf>,
    pub seed: u64,
    pub jobs: Option<usize>,
    pub cache: Cache,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        RunConfig {
            algebra: cli.algebra.clone(),
            seed: cli.seed,
            jobs: cli.jobs,
            cache: Cache::from_env(),
        }
    }

    fn algebra_text(&self) -> Result<String, CliError> {
        match &self.algebra {
            Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            }),
            None => Ok(DEFAULT_ALGEBRA.to_string()),
        }
    }
}

/// Text written to standard output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn violation_list(alg: &GradedLieAlgebra) -> Vec<String> {
    use codimlab_core::Violation as V;
    let n = |i: &usize| alg.names()[*i].clone();
    alg.validate()
        .violations
        .iter()
        .map(|v| match v {
            V::Antisymmetry { i, j } => format!("antisymmetry ({}, {})", n(i), n(j)),
            V::Jacobi { i, j, k } => format!("jacobi ({}, {}, {})", n(i), n(j), n(k)),
            V::Grading { i, j } => format!("grading ({}, {})", n(i), n(j)),
        })
        .collect()
}

/// Parses and validates an algebra file.
pub fn load_algebra(path: &std::path::Path) -> Result<GradedLieAlgebra, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_algebra_text(&text)
}

pub fn load_algebra_text(text: &str) -> Result<GradedLieAlgebra, CliError> {
    let alg = parse_algebra(text)?;
    let bad = violation_list(&alg);
    if !bad.is_empty() {
        return Err(CliError::Validation(bad.join("; ")));
    }
    Ok(alg)
}

fn codim_opts(rank: RankArg, cap: usize, seed: u64) -> CodimOptions {
    CodimOptions {
        rank_mode: rank.mode(),
        seed,
        cap,
        cochar_cap: cap,
        ..Default::default()
    }
}

fn fmt_matrix(m: &QMatrix) -> String {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(fmt_q).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "expected a comma-separated list of integers, got '{s}'"
                ))
            })
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = RunConfig::from_cli(cli);
    if let Some(j) = cfg.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    run_with(&cli.command, &cfg)
}

pub fn run_with(command: &Command, cfg: &RunConfig) -> Result<Output, CliError> {
    let text = cfg.algebra_text()?;
    match command {
        Command::Check => {
            let alg = parse_algebra(&text)?;
            let bad = violation_list(&alg);
            let mut out = String::from("#item\tvalue\n");
            let _ = writeln!(out, "dim\t{}", alg.dim());
            let _ = writeln!(out, "semigroup_size\t{}", alg.semigroup().size());
            let _ = writeln!(out, "semigroup_abelian\t{}", alg.semigroup().is_abelian());
            let _ = writeln!(out, "valid\t{}", bad.is_empty());
            if !bad.is_empty() {
                for b in &bad {
                    let _ = writeln!(out, "violation\t{b}");
                }
                return Ok(Output {
                    stdout: out,
                    code: 1,
                });
            }
            let _ = writeln!(out, "derived_dim\t{}", alg.derived_algebra().dim());
            let _ = writeln!(out, "center_dim\t{}", alg.center().dim());
            let _ = writeln!(out, "radical_dim\t{}", alg.solvable_radical().dim());
            Ok(Output::ok(out))
        }
        Command::Codim { n, rank, cap } => {
            let alg = load_algebra_text(&text)?;
            let opts = codim_opts(*rank, *cap, cfg.seed);
            let key = [serialize_algebra(&alg), format!("codim {n} {opts:?}")];
            let out = cfg.cache.get_or_compute(&[&key[0], &key[1]], || {
                let mut out = String::from("#n\tc_n\tmethod\tcertified\n");
                for k in 1..=*n {
                    let r = graded_codimension(&alg, k, &opts)?;
                    let _ = writeln!(
                        out,
                        "{k}\t{}\t{}\t{}",
                        r.value,
                        r.report.method_name(),
                        r.report.certified
                    );
                }
                Ok::<_, CliError>(out)
            })?;
            Ok(Output::ok(out))
        }
        Command::Cochar { n, rank, cap } => {
            let alg = load_algebra_text(&text)?;
            let opts = codim_opts(*rank, *cap, cfg.seed);
            let key = [serialize_algebra(&alg), format!("cochar {n} {opts:?}")];
            let out = cfg.cache.get_or_compute(&[&key[0], &key[1]], || {
                let table = cocharacter_table(&alg, *n, &opts)?;
                let mut out = String::from("#lambda\tmultiplicity\tspecht_dim\tproduct\n");
                for r in &table.rows {
                    let prod = &r.specht_dim * r.multiplicity;
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        r.lambda, r.multiplicity, r.specht_dim, prod
                    );
                }
                Ok::<_, CliError>(out)
            })?;
            Ok(Output::ok(out))
        }
        Command::Bound { n, q, rank, cap } => {
            if let Some(q) = q {
                let r = maximize_phi(*q, 1e-12, cfg.seed)?;
                let exact = closed_form_max(*q);
                let mut out = String::from("#q\tphi_max\tclosed_form\tabs_error\titerations\n");
                let _ = writeln!(
                    out,
                    "{q}\t{:.12}\t{:.12}\t{:.3e}\t{}",
                    r.value,
                    exact,
                    (r.value - exact).abs(),
                    r.iterations
                );
                return Ok(Output::ok(out));
            }
            let n = n.ok_or_else(|| CliError::Usage("bound needs --n or --q".into()))?;
            let alg = load_algebra_text(&text)?;
            let opts = codim_opts(*rank, *cap, cfg.seed);
            let key = [serialize_algebra(&alg), format!("bound {n} {opts:?}")];
            let out = cfg.cache.get_or_compute(&[&key[0], &key[1]], || {
                let report = bound_report(&alg, 1..=n, &opts)?;
                let mut out = String::from("#n\tc_n\tnth_root\tupper_bound\ttrivial_bound\n");
                for r in &report.rows {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{:.6}\t{:.6}\t{}",
                        r.n, r.c_n, r.nth_root, r.upper_bound, r.trivial_bound
                    );
                }
                Ok::<_, CliError>(out)
            })?;
            Ok(Output::ok(out))
        }
        Command::Witness { lambda, beta } => {
            let alg = load_algebra_text(&text)?;
            let beta = match (lambda, beta) {
                (Some(l), None) => BetaVector::from_partition(&Partition::new(parse_list(l)?)?)?,
                (None, Some(b)) => {
                    let v = parse_list(b)?;
                    let [l5, ref rest @ ..] = v[..] else {
                        return Err(CliError::Usage("empty --beta".into()));
                    };
                    let rest: [usize; 7] = rest.try_into().map_err(|_| {
                        CliError::Usage("--beta needs lambda_5 and seven beta values".into())
                    })?;
                    BetaVector::new(l5, rest)?
                }
                _ => return Err(CliError::Usage("witness needs --lambda or --beta".into())),
            };
            let w = build_f_family(&beta)?;
            let s = reference_substitution(&beta)?;
            let ev = WitnessEvaluator::new(&alg)?;
            let mut out = String::from("#item\tvalue\n");
            let _ = writeln!(out, "shape\t{}", beta.shape());
            let _ = writeln!(out, "variant\t{}", w.variant.name());
            let _ = writeln!(out, "degree\t{}", w.degree());
            let _ = writeln!(out, "value\t{}", fmt_element(&alg, &ev.evaluate(&w, &s)?));
            let terms = w.tableau.row_group_order() * w.tableau.column_group_order();
            if terms <= 50_000_000 {
                let e = ev.symmetrized(&w, &w.tableau, &s, SymmetrizerOrder::ColumnAfterRow)?;
                let _ = writeln!(out, "symmetrized\t{}", fmt_element(&alg, &e));
            } else {
                let _ = writeln!(out, "symmetrized\tskipped: {terms} terms");
            }
            Ok(Output::ok(out))
        }
        Command::Ado => {
            let alg = load_algebra_text(&text)?;
            let g = graded_ado(&alg, &adjoint_rep(&alg)?)?;
            let report = verify_graded_ado(&g);
            let mut out = String::from("#basis\tdegree\trow_block\tcol_block\tmatrix\n");
            for i in 0..alg.dim() {
                for (r, s) in g.block_support(i) {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{r}\t{s}\t{}",
                        alg.names()[i],
                        alg.degree(i),
                        fmt_matrix(&g.block(i, r, s))
                    );
                }
            }
            Ok(Output {
                stdout: out,
                code: if report.passed() { 0 } else { 1 },
            })
        }
        Command::Regev {
            t,
            sweep,
            random,
            range,
        } => {
            let mut out = String::from("#tuple_id\tscalar\tis_scalar\n");
            let mut all_scalar = true;
            if *sweep {
                centrality_sweep(*t)?;
                let m = t * t;
                for idx in 0..m.pow(2 * m as u32) {
                    let v = sweep_value(*t, idx);
                    all_scalar &= v.is_some();
                    let _ = writeln!(
                        out,
                        "{idx}\t{}\t{}",
                        v.map_or("NA".into(), |x| x.to_string()),
                        v.is_some()
                    );
                }
            } else if let Some(k) = random {
                let d = RegevDescriptor::new(*t)?;
                for (idx, (xs, ys)) in random_tuples(*t, *k, *range, cfg.seed).iter().enumerate() {
                    let v = regev_eval_dp(&d, xs, ys)?.scalar_value();
                    all_scalar &= v.is_some();
                    let _ = writeln!(
                        out,
                        "{idx}\t{}\t{}",
                        v.map_or("NA".into(), |x| x.to_string()),
                        v.is_some()
                    );
                }
            } else {
                return Err(CliError::Usage("regev needs --sweep or --random".into()));
            }
            Ok(Output {
                stdout: out,
                code: if all_scalar { 0 } else { 1 },
            })
        }
        Command::VerifyPaper { level, with_t3 } => {
            let alg = parse_algebra(&text)?;
            let results = claims::run_verify_paper(
                &alg,
                SuiteOptions {
                    level: *level,
                    seed: cfg.seed,
                    with_t3: *with_t3,
                },
            );
            let mut out = format!("{}\n", claims::HEADER);
            for r in &results {
                out.push_str(&r.tsv_row());
                out.push('\n');
            }
            let failed = results.iter().any(|r| r.status == Status::Fail);
            Ok(Output {
                stdout: out,
                code: if failed { 1 } else { 0 },
            })
        }
    }
}
