//! The acceptance suite: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the report always reaches stdout:
//! `cargo test -p codimlab --test acceptance`.

use std::process::Command;
use std::time::Instant;

use codimlab::claims::{run_claims, ClaimResult, Level, Status, SuiteOptions};
use codimlab_core::GradedLieAlgebra;

struct Criterion {
    number: usize,
    title: &'static str,
    prefixes: &'static [&'static str],
    /// Seconds.
    budget: f64,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "optimization oracle",
        prefixes: &["opt.q"],
        budget: 5.0,
    },
    Criterion {
        number: 2,
        title: "witness block constants",
        prefixes: &[
            "witness.f1",
            "witness.f2",
            "witness.f3",
            "witness.f4",
            "witness.f5",
            "witness.f6",
            "witness.f7",
            "witness.f8",
        ],
        budget: 1.0,
    },
    Criterion {
        number: 3,
        title: "witnesses are nonzero under e*_T",
        prefixes: &["witness.dprime.", "witness.full."],
        budget: 60.0,
    },
    Criterion {
        number: 4,
        title: "theta filter soundness, n <= 6",
        prefixes: &["theta."],
        budget: 600.0,
    },
    Criterion {
        number: 5,
        title: "consistency identity and small codimensions",
        prefixes: &["consistency.", "codim.full_enum."],
        budget: 600.0,
    },
    Criterion {
        number: 6,
        title: "trivial bound and reported roots",
        prefixes: &["bound."],
        budget: 600.0,
    },
    Criterion {
        number: 7,
        title: "radical, graded ideal and spins",
        prefixes: &["structure."],
        budget: 1.0,
    },
    Criterion {
        number: 8,
        title: "graded Ado embedding",
        prefixes: &["ado."],
        budget: 1.0,
    },
    Criterion {
        number: 9,
        title: "central polynomial sweep and evaluator agreement",
        prefixes: &["regev.sweep", "regev.dp"],
        budget: 120.0,
    },
    Criterion {
        number: 10,
        title: "Specht dimension oracles",
        prefixes: &["specht."],
        budget: 30.0,
    },
];

struct Line {
    number: usize,
    passed: bool,
    failures: Vec<String>,
}

fn report(number: usize, title: &str, passed: bool, detail: &str) -> Line {
    println!(
        "criterion {number:>2} {} {title}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    Line {
        number,
        passed,
        failures: Vec::new(),
    }
}

fn run_criterion(c: &Criterion, alg: &GradedLieAlgebra) -> Line {
    let opts = SuiteOptions {
        level: Level::Full,
        seed: 0,
        with_t3: false,
    };
    let start = Instant::now();
    let results: Vec<ClaimResult> =
        run_claims(alg, opts, |id| c.prefixes.iter().any(|p| id.starts_with(p)));
    let secs = start.elapsed().as_secs_f64();
    let failures: Vec<String> = results
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| {
            format!(
                "{} measured '{}' expected '{}'",
                r.id, r.measured, r.expected
            )
        })
        .collect();
    let in_time = secs < c.budget;
    let passed = !results.is_empty() && failures.is_empty() && in_time;
    let mut detail = format!(
        "{} claims in {secs:.2} s (budget {} s)",
        results.len(),
        c.budget
    );
    if !failures.is_empty() {
        detail.push_str(&format!("; {}", failures.join("; ")));
    }
    let mut line = report(c.number, c.title, passed, &detail);
    line.failures = results
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.id.clone())
        .collect();
    if !in_time {
        line.failures.push("runtime".into());
    }
    line
}

fn fail_ids(stdout: &[u8]) -> Vec<String> {
    String::from_utf8_lossy(stdout)
        .lines()
        .skip(1)
        .filter(|l| l.split('\t').nth(1) == Some("FAIL"))
        .map(|l| l.split('\t').next().unwrap_or_default().to_string())
        .collect()
}

fn determinism() -> Line {
    let bin = env!("CARGO_BIN_EXE_codimlab");
    let full = || {
        Command::new(bin)
            .args(["verify-paper", "--level", "full", "--seed", "7"])
            .env_remove("CODIMLAB_CACHE")
            .output()
            .unwrap()
    };
    let (a, b) = (full(), full());
    let identical = a.stdout == b.stdout && !a.stdout.is_empty();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutated.alg");
    let text = include_str!("../data/paper_L.alg");
    let mutated = text.replace("bracket u0 t0 = 2*t0", "bracket u0 t0 = 3*t0");
    assert_ne!(mutated, text);
    std::fs::write(&path, mutated).unwrap();
    let m = Command::new(bin)
        .args([
            "verify-paper",
            "--level",
            "full",
            "--seed",
            "7",
            "--algebra",
            path.to_str().unwrap(),
        ])
        .env_remove("CODIMLAB_CACHE")
        .output()
        .unwrap();
    let (base_fails, mut_fails) = (fail_ids(&a.stdout), fail_ids(&m.stdout));
    let detected = m.status.code() == Some(1) && mut_fails.len() > base_fails.len();
    report(
        11,
        "determinism and mutation detection",
        identical && detected,
        &format!(
            "identical output: {identical}; mutated run exit {:?} with {} FAIL rows (pristine {})",
            m.status.code(),
            mut_fails.len(),
            base_fails.len()
        ),
    )
}

fn optional_t3() {
    let start = Instant::now();
    let opts = SuiteOptions {
        level: Level::Full,
        seed: 0,
        with_t3: true,
    };
    let r = run_claims(&GradedLieAlgebra::sl2(), opts, |id| id == "regev.t3");
    println!(
        "optional     {} t=3 density witness on sl2: {} ({:.2} s)",
        r[0].status,
        r[0].measured,
        start.elapsed().as_secs_f64()
    );
}

fn main() {
    let alg = GradedLieAlgebra::example_algebra();
    let mut lines: Vec<Line> = CRITERIA.iter().map(|c| run_criterion(c, &alg)).collect();
    optional_t3();
    lines.push(determinism());

    let failed: Vec<(usize, Vec<String>)> = lines
        .iter()
        .filter(|l| !l.passed)
        .map(|l| (l.number, l.failures.clone()))
        .collect();
    println!(
        "{} of {} criteria pass",
        lines.iter().filter(|l| l.passed).count(),
        lines.len()
    );
    // The spin of the degree-one basis vector (v,v) lies in the four-dimensional
    // derived algebra, so it cannot be all of L; this is the only expected FAIL.
    let expected = vec![(7, vec!["structure.spin.b4".to_string()])];
    if failed != expected {
        eprintln!("unexpected criterion outcomes: {failed:?}");
        std::process::exit(1);
    }
}
