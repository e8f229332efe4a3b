use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::semisimple::{
    expected_basis, realize, theorem_dimension, IrrepKind, ModulePart, SimpleType,
};
use super::sl2::{CaseTag, ExpectedFamily};
use super::CatalogError;
use crate::arith::{rat, Rational};
use crate::lie::{sl2, sl2_module, SL2_H};
use crate::linalg::{reduced_row_basis, Matrix};
use crate::solver::{is_delta_derivation, scan, solve, DerivationSpace, ScanOptions};

/// Whether two families of maps span the same space.
pub fn span_equal(b1: &[Matrix], b2: &[Matrix]) -> Result<bool, CatalogError> {
    let Some(first) = b1.iter().chain(b2).next() else {
        return Ok(true);
    };
    let shape = first.shape();
    if let Some(bad) = b1.iter().chain(b2).find(|m| m.shape() != shape) {
        return Err(CatalogError::ShapeMismatch {
            expected: shape,
            got: bad.shape(),
        });
    }
    let ncols = shape.0 * shape.1;
    let rref =
        |b: &[Matrix]| reduced_row_basis(b.iter().map(|m| m.as_flat().to_vec()).collect(), ncols);
    Ok(rref(b1) == rref(b2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(flatten)]
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, CheckOutcome::Fail(_)))
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    /// Aligned plain-text table, one check per line, then a summary line.
    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            let (status, reason) = match &c.outcome {
                CheckOutcome::Pass => ("PASS", ""),
                CheckOutcome::Fail(r) => ("FAIL", r.as_str()),
                CheckOutcome::Skipped(r) => ("SKIP", r.as_str()),
            };
            let _ = write!(out, "{}{}  {status}", c.name, " ".repeat(pad));
            if !reason.is_empty() {
                let _ = write!(out, "  {reason}");
            }
            out.push('\n');
        }
        let skipped = self
            .checks
            .iter()
            .filter(|c| matches!(c.outcome, CheckOutcome::Skipped(_)))
            .count();
        let _ = writeln!(
            out,
            "{} checks, {} failed, {} skipped",
            self.checks.len(),
            self.failures(),
            skipped
        );
        out
    }
}

#[derive(Debug, Clone)]
enum Job {
    Sl2Case(i64, CaseTag),
    Sl2Scan(i64),
    Sl2AdjointScan,
    Sl3AdjointHalf,
    Sl3AdjointScan,
    Sl3Natural,
    Assembly(Vec<SimpleType>, Vec<ModulePart>, Vec<Rational>),
}

impl Job {
    fn name(&self) -> String {
        match self {
            Job::Sl2Case(n, case) => format!("sl2 V({n}) {case}"),
            Job::Sl2Scan(n) => format!("sl2 V({n}) scan"),
            Job::Sl2AdjointScan => "sl2 adjoint scan".into(),
            Job::Sl3AdjointHalf => "sl3 adjoint delta=1/2 identity".into(),
            Job::Sl3AdjointScan => "sl3 adjoint scan".into(),
            Job::Sl3Natural => "sl3 natural".into(),
            Job::Assembly(g, v, _) => {
                let g: Vec<String> = g.iter().map(ToString::to_string).collect();
                let v: Vec<String> = v
                    .iter()
                    .map(|p| format!("{}@{}", p.kind, p.summand))
                    .collect();
                format!("assembly {} / {}", g.join(" o+ "), v.join(" o+ "))
            }
        }
    }

    fn run(&self) -> CheckOutcome {
        let result = match self {
            Job::Sl2Case(n, case) => sl2_case(*n, *case),
            Job::Sl2Scan(n) => {
                let mut want =
                    BTreeMap::from([(rat(1, 1), *n as usize + 1), (rat(-2, *n), *n as usize + 3)]);
                if *n >= 2 {
                    want.insert(rat(2, n + 2), *n as usize - 1);
                }
                check_scan(
                    &[SimpleType::Sl(2)],
                    &[ModulePart::new(0, IrrepKind::Sl2Irrep(*n as u32))],
                    want,
                )
            }
            Job::Sl2AdjointScan => check_scan(
                &[SimpleType::Sl(2)],
                &[ModulePart::new(0, IrrepKind::Adjoint)],
                BTreeMap::from([(rat(-1, 1), 5), (rat(1, 2), 1), (rat(1, 1), 3)]),
            ),
            Job::Sl3AdjointHalf => check_assembly(
                &[SimpleType::Sl(3)],
                &[ModulePart::new(0, IrrepKind::Adjoint)],
                &[rat(1, 2)],
            ),
            Job::Sl3AdjointScan => check_scan(
                &[SimpleType::Sl(3)],
                &[ModulePart::new(0, IrrepKind::Adjoint)],
                BTreeMap::from([(rat(1, 2), 1), (rat(1, 1), 8)]),
            ),
            Job::Sl3Natural => check_assembly(
                &[SimpleType::Sl(3)],
                &[ModulePart::new(0, IrrepKind::Natural)],
                &[rat(1, 2), rat(-1, 1), rat(-2, 3), rat(2, 5), rat(1, 1)],
            )
            .and_then(|o| match o {
                CheckOutcome::Pass => check_scan(
                    &[SimpleType::Sl(3)],
                    &[ModulePart::new(0, IrrepKind::Natural)],
                    BTreeMap::from([(rat(1, 1), 3)]),
                ),
                other => Ok(other),
            }),
            Job::Assembly(g, v, deltas) => check_assembly(g, v, deltas),
        };
        result.unwrap_or_else(|e| CheckOutcome::Fail(e.to_string()))
    }
}

fn fail(msg: String) -> Result<CheckOutcome, CatalogError> {
    Ok(CheckOutcome::Fail(msg))
}

fn sl2_case(n: i64, case: CaseTag) -> Result<CheckOutcome, CatalogError> {
    let family = match ExpectedFamily::new(n, case) {
        Ok(f) => f,
        Err(CatalogError::OutOfRange { reason, .. }) => {
            return Ok(CheckOutcome::Skipped(reason.to_string()))
        }
        Err(e) => return Err(e),
    };
    let algebra = sl2();
    let module = sl2_module(n)?;
    let expected = family.basis();
    for m in &expected {
        if !is_delta_derivation(&m.map, &algebra, &module, &family.delta)?.holds() {
            return fail(format!(
                "expected map of weight {} is not a derivation",
                m.weight
            ));
        }
    }
    let space = solve(&algebra, &module, &family.delta, Some(SL2_H))?;
    if space.dim() != family.expected_dim {
        return fail(format!(
            "dimension {} != {}",
            space.dim(),
            family.expected_dim
        ));
    }
    let kind = IrrepKind::Sl2Irrep(n as u32);
    let predicted = theorem_dimension(
        &[SimpleType::Sl(2)],
        &[ModulePart::new(0, kind)],
        &family.delta,
    )?;
    if predicted != space.dim() {
        return fail(format!(
            "predicted dimension {predicted} != {}",
            space.dim()
        ));
    }
    let maps: Vec<Matrix> = expected.iter().map(|m| m.map.clone()).collect();
    if !span_equal(&maps, &space.basis)? {
        return fail("span differs from the expected basis".into());
    }
    // weight by weight, after mapping index weights to eigenvalues
    let mut by_weight: BTreeMap<Rational, (Vec<Matrix>, Vec<Matrix>)> = BTreeMap::new();
    for m in &expected {
        by_weight
            .entry(m.raw_weight(n))
            .or_default()
            .0
            .push(m.map.clone());
    }
    let weights = space.weights.clone().unwrap_or_default();
    for (w, m) in weights.into_iter().zip(&space.basis) {
        by_weight.entry(w).or_default().1.push(m.clone());
    }
    for (w, (want, got)) in &by_weight {
        if !span_equal(want, got)? {
            return fail(format!("weight {w}: spans differ"));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn check_scan(
    g: &[SimpleType],
    v: &[ModulePart],
    want: BTreeMap<Rational, usize>,
) -> Result<CheckOutcome, CatalogError> {
    let (algebra, module) = realize(g, v)?;
    let report = scan(&algebra, &module, ScanOptions::default())?;
    if !report.nonrational_factors.is_empty() {
        return fail(format!(
            "{} non-rational factors",
            report.nonrational_factors.len()
        ));
    }
    if report.findings != want {
        return fail(format!(
            "findings {} != {}",
            show(&report.findings),
            show(&want)
        ));
    }
    for (d, dim) in &want {
        let predicted = theorem_dimension(g, v, d)?;
        if predicted != *dim {
            return fail(format!("delta={d}: predicted {predicted} != {dim}"));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn check_assembly(
    g: &[SimpleType],
    v: &[ModulePart],
    deltas: &[Rational],
) -> Result<CheckOutcome, CatalogError> {
    let (algebra, module) = realize(g, v)?;
    for d in deltas {
        let space: DerivationSpace = solve(&algebra, &module, d, None)?;
        let predicted = theorem_dimension(g, v, d)?;
        if space.dim() != predicted {
            return fail(format!(
                "delta={d}: dimension {} != predicted {predicted}",
                space.dim()
            ));
        }
        let expected = expected_basis(g, v, d)?;
        if !span_equal(&expected, &space.basis)? {
            return fail(format!("delta={d}: span differs from the assembled basis"));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn show(m: &BTreeMap<Rational, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(d, n)| format!("{d}: {n}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Runs the sl2 families for `1 ≤ n ≤ max_n` (fixed-`δ` solves with span
/// and weight comparison, and scans), the sl3 adjoint and natural modules,
/// and a few semisimple assemblies. Failures are report entries, not
/// errors. Checks run in parallel; the report order is fixed.
pub fn verify_all(max_n: usize) -> VerifyReport {
    let mut jobs = Vec::new();
    for n in 1..=max_n as i64 {
        for case in [
            CaseTag::DeltaOne,
            CaseTag::MinusTwoOverN,
            CaseTag::TwoOverNPlusTwo,
        ] {
            jobs.push(Job::Sl2Case(n, case));
        }
        if n == 2 {
            jobs.push(Job::Sl2Case(n, CaseTag::OneHalf));
        }
        jobs.push(Job::Sl2Scan(n));
    }
    jobs.push(Job::Sl2AdjointScan);
    jobs.push(Job::Sl3AdjointHalf);
    jobs.push(Job::Sl3AdjointScan);
    jobs.push(Job::Sl3Natural);
    let sl2x2 = vec![SimpleType::Sl(2), SimpleType::Sl(2)];
    jobs.push(Job::Assembly(
        sl2x2.clone(),
        vec![
            ModulePart::new(0, IrrepKind::Sl2Irrep(1)),
            ModulePart::new(1, IrrepKind::Sl2Irrep(2)),
        ],
        vec![rat(1, 1), rat(-2, 1), rat(-1, 1), rat(1, 2), rat(3, 1)],
    ));
    jobs.push(Job::Assembly(
        sl2x2,
        vec![
            ModulePart::new(0, IrrepKind::Adjoint),
            ModulePart::new(0, IrrepKind::Sl2Irrep(3)),
            ModulePart::new(1, IrrepKind::Trivial(2)),
        ],
        vec![rat(1, 1), rat(-1, 1), rat(1, 2), rat(-2, 3), rat(2, 5)],
    ));
    jobs.push(Job::Assembly(
        vec![SimpleType::Sl(2), SimpleType::Sl(3)],
        vec![
            ModulePart::new(0, IrrepKind::Natural),
            ModulePart::new(1, IrrepKind::Adjoint),
        ],
        vec![rat(1, 1), rat(-2, 1), rat(1, 2)],
    ));
    let checks = jobs
        .par_iter()
        .map(|job| CheckResult {
            name: job.name(),
            outcome: job.run(),
        })
        .collect();
    VerifyReport { max_n, checks }
}
