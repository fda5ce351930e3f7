//! Plain-text algebra files.
//!
//! ```text
//! semigroup 2
//! product 0 0 0
//! ...
//! basis u0:0 uu:1 v0:0 vv:1 t0:0
//! bracket u0 v0 = -2*v0
//! ```

use std::collections::HashMap;

use codimlab_core::algebra::Combination;
use codimlab_core::linalg::{fmt_q, parse_q};
use codimlab_core::{FiniteSemigroup, GradedLieAlgebra};

use crate::error::CliError;

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_algebra(text: &str) -> Result<GradedLieAlgebra, CliError> {
    let mut size: Option<(usize, usize)> = None;
    let mut products: HashMap<(usize, usize), usize> = HashMap::new();
    let mut basis: Option<(usize, Vec<String>, Vec<usize>)> = None;
    let mut brackets: Vec<(usize, String, String, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match directive {
            "semigroup" => {
                if size.is_some() {
                    return Err(err(line_no, "duplicate semigroup line"));
                }
                let k: usize = rest
                    .parse()
                    .map_err(|_| err(line_no, format!("bad semigroup size '{rest}'")))?;
                if k == 0 {
                    return Err(err(line_no, "semigroup must be nonempty"));
                }
                size = Some((k, line_no));
            }
            "product" => {
                let (k, _) = size.ok_or_else(|| err(line_no, "product before semigroup"))?;
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|s| {
                        s.parse()
                            .map_err(|_| err(line_no, format!("bad product entry '{s}'")))
                    })
                    .collect::<Result<_, _>>()?;
                let [i, j, ij] = nums[..] else {
                    return Err(err(line_no, "product needs three entries"));
                };
                if i >= k || j >= k || ij >= k {
                    return Err(err(line_no, format!("product entry out of range 0..{k}")));
                }
                if products.insert((i, j), ij).is_some() {
                    return Err(err(line_no, format!("duplicate product ({i}, {j})")));
                }
            }
            "basis" => {
                if basis.is_some() {
                    return Err(err(line_no, "duplicate basis line"));
                }
                let mut names = Vec::new();
                let mut degrees = Vec::new();
                for tok in rest.split_whitespace() {
                    let (name, deg) = tok.split_once(':').ok_or_else(|| {
                        err(line_no, format!("expected name:degree, got '{tok}'"))
                    })?;
                    let deg: usize = deg
                        .parse()
                        .map_err(|_| err(line_no, format!("bad degree in '{tok}'")))?;
                    if names.iter().any(|n| n == name) {
                        return Err(err(line_no, format!("duplicate basis name '{name}'")));
                    }
                    names.push(name.to_string());
                    degrees.push(deg);
                }
                if names.is_empty() {
                    return Err(err(line_no, "empty basis"));
                }
                basis = Some((line_no, names, degrees));
            }
            "bracket" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line_no, "bracket needs '='"))?;
                let ab: Vec<&str> = lhs.split_whitespace().collect();
                let [a, b] = ab[..] else {
                    return Err(err(line_no, "bracket needs two basis names"));
                };
                brackets.push((
                    line_no,
                    a.to_string(),
                    b.to_string(),
                    rhs.trim().to_string(),
                ));
            }
            other => return Err(err(line_no, format!("unknown directive '{other}'"))),
        }
    }

    let (k, sg_line) = size.ok_or_else(|| err(0, "missing semigroup line"))?;
    let mut table = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let v = products
                .get(&(i, j))
                .ok_or_else(|| err(sg_line, format!("missing product line for ({i}, {j})")))?;
            table[i * k + j] = *v;
        }
    }
    let semigroup =
        FiniteSemigroup::new(k, table).map_err(|e| CliError::Validation(e.to_string()))?;
    let (basis_line, names, degrees) = basis.ok_or_else(|| err(0, "missing basis line"))?;
    if let Some(d) = degrees.iter().find(|&&d| d >= k) {
        return Err(err(
            basis_line,
            format!("degree {d} is not a semigroup element"),
        ));
    }
    let index = |line: usize, name: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| err(line, format!("unknown basis name '{name}'")))
    };
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut entries = Vec::new();
    for (line, a, b, rhs) in &brackets {
        let (i, j) = (index(*line, a)?, index(*line, b)?);
        let key = (i.min(j), i.max(j));
        if let Some(first) = seen.insert(key, *line) {
            return Err(err(
                *line,
                format!("duplicate bracket ({a}, {b}), first given on line {first}"),
            ));
        }
        let mut combo: Combination = Vec::new();
        let normalized = rhs.replace(" - ", " + -");
        if normalized.trim() != "0" {
            for term in normalized.split('+') {
                let term = term.trim();
                let (c, name) = match term.split_once('*') {
                    Some((c, name)) => (
                        parse_q(c).ok_or_else(|| err(*line, format!("bad coefficient '{c}'")))?,
                        name.trim(),
                    ),
                    None => match term.strip_prefix('-') {
                        Some(name) => (parse_q("-1").expect("literal"), name.trim()),
                        None => (parse_q("1").expect("literal"), term),
                    },
                };
                combo.push((index(*line, name)?, c));
            }
        }
        entries.push((i, j, combo));
    }
    GradedLieAlgebra::new(semigroup, names, degrees, &entries)
        .map_err(|e| CliError::Validation(e.to_string()))
}

/// Writes an algebra in the text format; `[b_i, b_j]` for `i < j` only.
pub fn serialize_algebra(alg: &GradedLieAlgebra) -> String {
    let sg = alg.semigroup();
    let k = sg.size();
    let mut out = format!("semigroup {k}\n");
    for i in 0..k {
        for j in 0..k {
            out.push_str(&format!("product {i} {j} {}\n", sg.mul(i, j)));
        }
    }
    let names = alg.names();
    let basis: Vec<String> = names
        .iter()
        .zip(alg.degrees())
        .map(|(n, d)| format!("{n}:{d}"))
        .collect();
    out.push_str(&format!("basis {}\n", basis.join(" ")));
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            let c = alg.structure(i, j);
            if c.is_empty() {
                continue;
            }
            let terms: Vec<String> = c
                .iter()
                .map(|(k, x)| format!("{}*{}", fmt_q(x), names[*k]))
                .collect();
            out.push_str(&format!(
                "bracket {} {} = {}\n",
                names[i],
                names[j],
                terms.join(" + ")
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for alg in [
            GradedLieAlgebra::example_algebra(),
            GradedLieAlgebra::sl2(),
            GradedLieAlgebra::borel_uv(),
        ] {
            assert_eq!(parse_algebra(&serialize_algebra(&alg)).unwrap(), alg);
        }
    }

    #[test]
    fn rationals_and_signs() {
        let text = "semigroup 1\nproduct 0 0 0\nbasis a:0 b:0\nbracket a b = 1/2*b\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(serialize_algebra(&alg), text);
        let minus =
            parse_algebra("semigroup 1\nproduct 0 0 0\nbasis a:0 b:0\nbracket b a = -1/2*b\n")
                .unwrap();
        assert_eq!(minus, alg);
        let bare =
            parse_algebra("semigroup 1\nproduct 0 0 0\nbasis a:0 b:0 c:0\nbracket a b = c - b\n")
                .unwrap();
        assert_eq!(bare.structure(0, 1).len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let missing = "semigroup 2\nproduct 0 0 0\nproduct 0 1 0\nproduct 1 0 0\nbasis a:0\n";
        match parse_algebra(missing) {
            Err(CliError::Parse { line: 1, message }) => {
                assert!(message.contains("(1, 1)"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        let dup = "semigroup 1\nproduct 0 0 0\nbasis a:0 b:0\nbracket a b = b\nbracket b a = b\n";
        assert!(matches!(
            parse_algebra(dup),
            Err(CliError::Parse { line: 5, .. })
        ));
        let unknown = "semigroup 1\nproduct 0 0 0\nbasis a:0\nbracket a z = a\n";
        assert!(matches!(
            parse_algebra(unknown),
            Err(CliError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_algebra("frobnicate 3\n"),
            Err(CliError::Parse { line: 1, .. })
        ));
    }
}
