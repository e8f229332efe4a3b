use std::fmt::Write as _;

use deltaderiv::catalog::VerifyReport;
use deltaderiv::{DerivationSpace, LieAlgebra, Representation, ScanReport};
use serde::Serialize;

use crate::job::Format;
use crate::InputFile;

/// Pretty JSON, except that arrays of scalars stay on one line so that
/// matrices read row by row.
fn json<T: Serialize>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("plain data serialises");
    let mut s = collapse_scalar_arrays(&pretty);
    s.push('\n');
    s
}

fn collapse_scalar_arrays(pretty: &str) -> String {
    let chars: Vec<char> = pretty.chars().collect();
    let mut out = String::with_capacity(pretty.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '"' {
            let end = string_end(&chars, i);
            out.extend(&chars[i..end]);
            i = end;
            continue;
        }
        if chars[i] == '[' {
            if let Some(end) = scalar_array_end(&chars, i) {
                // rebuild the array from its elements, one space after commas
                let mut k = i + 1;
                out.push('[');
                let mut first = true;
                while k < end {
                    match chars[k] {
                        c if c.is_whitespace() || c == ',' => k += 1,
                        '"' => {
                            let e = string_end(&chars, k);
                            push_item(&mut out, &mut first, &chars[k..e]);
                            k = e;
                        }
                        _ => {
                            let e = (k..end)
                                .find(|&j| chars[j] == ',' || chars[j].is_whitespace())
                                .unwrap_or(end);
                            push_item(&mut out, &mut first, &chars[k..e]);
                            k = e;
                        }
                    }
                }
                out.push(']');
                i = end + 1;
                continue;
            }
        }
        out.push(chars[i]);
        i += 1;
    }
    out
}

fn push_item(out: &mut String, first: &mut bool, item: &[char]) {
    if !*first {
        out.push_str(", ");
    }
    *first = false;
    out.extend(item);
}

/// Index one past the closing quote of the string starting at `start`.
fn string_end(chars: &[char], start: usize) -> usize {
    let mut k = start + 1;
    while k < chars.len() {
        match chars[k] {
            '\\' => k += 2,
            '"' => return k + 1,
            _ => k += 1,
        }
    }
    chars.len()
}

/// Index of the `]` closing the array at `start`, if it holds only scalars.
fn scalar_array_end(chars: &[char], start: usize) -> Option<usize> {
    let mut k = start + 1;
    while k < chars.len() {
        match chars[k] {
            '"' => k = string_end(chars, k),
            '[' | '{' => return None,
            ']' => return Some(k),
            _ => k += 1,
        }
    }
    None
}

#[derive(Serialize)]
struct SolveOut {
    delta: String,
    dimension: usize,
    /// One matrix per basis element; row `a` is `D(e_a)`.
    basis: Vec<Vec<Vec<String>>>,
    weights: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Finding {
    delta: String,
    dimension: usize,
}

#[derive(Serialize)]
struct ScanOut {
    generic_rank: usize,
    findings: Vec<Finding>,
    nonrational_factors: Vec<String>,
}

/// Right-aligned columns, left-aligned first column.
fn table(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str("  ");
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub(crate) fn solve(algebra: &LieAlgebra, space: &DerivationSpace, format: Format) -> String {
    let basis: Vec<Vec<Vec<String>>> = space
        .basis
        .iter()
        .map(|m| {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect();
    let weights = space
        .weights
        .as_ref()
        .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>());
    match format {
        Format::Json => json(&SolveOut {
            delta: space.delta.to_string(),
            dimension: space.dim(),
            basis,
            weights,
        }),
        Format::Table => {
            let mut out = table(&[
                vec!["delta".into(), space.delta.to_string()],
                vec!["dimension".into(), space.dim().to_string()],
            ]);
            for (k, m) in basis.iter().enumerate() {
                let _ = write!(out, "\nbasis {}", k + 1);
                if let Some(w) = &weights {
                    let _ = write!(out, "  weight {}", w[k]);
                }
                out.push('\n');
                let rows: Vec<Vec<String>> = m
                    .iter()
                    .zip(algebra.labels())
                    .map(|(r, label)| {
                        let mut row = vec![format!("  {label} ->")];
                        row.extend(r.iter().cloned());
                        row
                    })
                    .collect();
                out.push_str(&table(&rows));
            }
            out
        }
    }
}

pub(crate) fn scan(report: &ScanReport, format: Format) -> String {
    let findings: Vec<Finding> = report
        .findings
        .iter()
        .map(|(d, n)| Finding {
            delta: d.to_string(),
            dimension: *n,
        })
        .collect();
    let factors: Vec<String> = report
        .nonrational_factors
        .iter()
        .map(ToString::to_string)
        .collect();
    match format {
        Format::Json => json(&ScanOut {
            generic_rank: report.generic_rank,
            findings,
            nonrational_factors: factors,
        }),
        Format::Table => {
            let mut rows = vec![vec!["delta".to_string(), "dimension".to_string()]];
            rows.extend(
                findings
                    .iter()
                    .map(|f| vec![f.delta.clone(), f.dimension.to_string()]),
            );
            let mut out = table(&rows);
            let _ = writeln!(
                out,
                "\ngeneric rank {} of {} unknowns (generic dimension {})",
                report.generic_rank,
                report.unknowns,
                report.generic_dimension()
            );
            let _ = writeln!(
                out,
                "dimension at delta = 0: {}",
                report.zero_delta_dimension
            );
            if factors.is_empty() {
                out.push_str("non-rational factors: none\n");
            } else {
                for f in factors {
                    let _ = writeln!(out, "non-rational factor: {f}");
                }
            }
            out
        }
    }
}

pub(crate) fn verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Table => report.to_table(),
    }
}

pub(crate) fn describe(
    file: &InputFile,
    algebra: &LieAlgebra,
    module: &Representation,
    format: Format,
) -> String {
    match format {
        Format::Json => json(file),
        Format::Table => {
            let mut rows = Vec::new();
            if let Some(d) = &file.descriptor {
                rows.push(vec!["algebra".to_string(), d.algebra.clone()]);
                rows.push(vec!["module".to_string(), d.module.clone()]);
            }
            rows.push(vec!["algebra dimension".into(), algebra.dim().to_string()]);
            rows.push(vec!["module dimension".into(), module.dim().to_string()]);
            rows.push(vec!["basis".into(), algebra.labels().join(" ")]);
            rows.push(vec![
                "structure constants".into(),
                algebra.structure_constants().count().to_string(),
            ]);
            let mut out = String::new();
            for r in rows {
                let _ = writeln!(out, "{:<20}{}", r[0], r[1]);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_arrays_collapse() {
        let v = serde_json::json!({"a": [["1", "-2/3"], ["x,]", "y\\\"z"]], "b": [], "c": [1, 2]});
        let s = json(&v);
        assert!(s.contains(r#"["1", "-2/3"]"#), "{s}");
        assert!(s.contains(r#"["x,]", "y\\\"z"]"#), "{s}");
        assert!(s.contains(r#""b": []"#), "{s}");
        assert!(s.contains(r#""c": [1, 2]"#), "{s}");
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
