//! Locating every rational `δ` at which `Der_δ(L, V)` jumps.
//!
//! The pencil is split into connected blocks and each block is eliminated
//! fraction-free over `Z[δ]`. If no pivot of a block vanishes at `δ₀`, the
//! same elimination specialised at `δ₀` is valid and the block keeps its
//! generic rank. Every rank drop is therefore a root of some pivot, so the
//! rational roots of all pivots form a superset of the exceptional rational
//! values; each candidate is then confirmed by an exact fixed-`δ` solve.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;

use super::pencil::{eliminate, integer_block, pencil_blocks, rank_drop_polynomial};
use super::{assemble_system, kernel_at, SolveError};
use crate::arith::{Poly, Rational};
use crate::lie::{LieAlgebra, Representation};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Also test `δ = 0`. Off by default: every non-perfect algebra has
    /// derivations there, and the count is known in closed form
    /// ([`ScanReport::zero_delta_dimension`]).
    pub include_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// Exceptional `δ` (ascending) with `dim Der_δ`.
    pub findings: BTreeMap<Rational, usize>,
    /// Normalised factors without rational roots whose roots are genuine
    /// rank drops; their kernels are not computed.
    pub nonrational_factors: Vec<Poly>,
    /// Rank of the pencil over `Q(δ)`.
    pub generic_rank: usize,
    /// Number of unknowns, `dim L · dim V`.
    pub unknowns: usize,
    /// Every Bareiss pivot, normalised, block by block.
    pub pivots: Vec<Poly>,
    /// `dim Der_0 = (dim L − dim [L, L]) · dim V`.
    pub zero_delta_dimension: usize,
}

impl ScanReport {
    /// `dim Der_δ` at every `δ` outside the findings (and the roots of the
    /// non-rational factors).
    pub fn generic_dimension(&self) -> usize {
        self.unknowns - self.generic_rank
    }
}

pub fn scan(
    algebra: &LieAlgebra,
    module: &Representation,
    options: ScanOptions,
) -> Result<ScanReport, SolveError> {
    let system = assemble_system(algebra, module)?;
    let (blocks, _free) = pencil_blocks(&system);

    struct BlockOutcome {
        pivots: Vec<Poly>,
        candidates: Vec<Rational>,
        nonrational: Option<Poly>,
    }

    let outcomes: Vec<BlockOutcome> = blocks
        .par_iter()
        .map(|block| {
            let int_block = integer_block(&system, block);
            let elim = eliminate(int_block.clone());
            let pivots: Vec<Poly> = elim
                .pivots
                .iter()
                .map(|p| p.to_poly().normalize())
                .collect();
            let mut candidates = BTreeSet::new();
            for p in pivots.iter().filter(|p| p.degree().unwrap_or(0) > 0) {
                candidates.extend(p.rational_roots().expect("pivots are nonzero"));
            }
            // The last pivot is a maximal minor: strip its rational roots and
            // keep what remains only where the rank genuinely drops.
            let nonrational = pivots.last().and_then(|last| {
                let mut rest = last.squarefree();
                for r in rest.rational_roots().expect("nonzero") {
                    let linear = Poly::new(vec![-r, Rational::from_integer(1.into())]);
                    rest = rest.div_rem(&linear).0;
                }
                if rest.degree().unwrap_or(0) == 0 {
                    return None;
                }
                let genuine = rest.gcd(&rank_drop_polynomial(&int_block));
                (genuine.degree().unwrap_or(0) > 0).then_some(genuine)
            });
            BlockOutcome {
                pivots,
                candidates: candidates.into_iter().collect(),
                nonrational,
            }
        })
        .collect();

    let generic_rank: usize = outcomes.iter().map(|o| o.pivots.len()).sum();
    let unknowns = system.cols();
    let generic_dimension = unknowns - generic_rank;

    let mut candidates: BTreeSet<Rational> = outcomes
        .iter()
        .flat_map(|o| o.candidates.iter().cloned())
        .collect();
    if options.include_zero {
        candidates.insert(Rational::zero());
    } else {
        candidates.remove(&Rational::zero());
    }
    let checked: Vec<(Rational, usize)> = candidates
        .into_par_iter()
        .map(|d| {
            let dim = kernel_at(&system, &d).map(|s| s.dim());
            dim.map(|dim| (d, dim))
        })
        .collect::<Result<_, _>>()?;
    let findings = checked
        .into_iter()
        .filter(|(_, dim)| *dim > generic_dimension)
        .collect();

    let mut nonrational: Vec<Poly> = outcomes
        .iter()
        .filter_map(|o| o.nonrational.clone())
        .collect();
    nonrational.sort_by_key(|p| (p.degree(), p.to_string()));
    nonrational.dedup();

    Ok(ScanReport {
        findings,
        nonrational_factors: nonrational,
        generic_rank,
        unknowns,
        pivots: outcomes.into_iter().flat_map(|o| o.pivots).collect(),
        zero_delta_dimension: (algebra.dim() - algebra.derived_dim()) * module.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{adjoint_module, sl2, sl2_module};
    use crate::linalg::Matrix;

    fn findings(report: &ScanReport) -> Vec<(Rational, usize)> {
        report
            .findings
            .iter()
            .map(|(d, n)| (d.clone(), *n))
            .collect()
    }

    #[test]
    fn sl2_v3() {
        let r = scan(&sl2(), &sl2_module(3).unwrap(), ScanOptions::default()).unwrap();
        assert_eq!(
            findings(&r),
            vec![(rat(-2, 3), 6), (rat(2, 5), 2), (rat(1, 1), 4)]
        );
        assert!(r.nonrational_factors.is_empty());
        assert_eq!(r.generic_rank, 12);
    }

    #[test]
    fn sl2_v1_has_no_third_family() {
        let r = scan(&sl2(), &sl2_module(1).unwrap(), ScanOptions::default()).unwrap();
        assert_eq!(findings(&r), vec![(rat(-2, 1), 4), (rat(1, 1), 2)]);
    }

    #[test]
    fn sl2_adjoint() {
        let s = sl2();
        let r = scan(&s, &adjoint_module(&s), ScanOptions::default()).unwrap();
        assert_eq!(
            findings(&r),
            vec![(rat(-1, 1), 5), (rat(1, 2), 1), (rat(1, 1), 3)]
        );
    }

    #[test]
    fn zero_delta_closed_form() {
        let s = sl2();
        let r = scan(
            &s,
            &sl2_module(2).unwrap(),
            ScanOptions { include_zero: true },
        )
        .unwrap();
        assert!(!r.findings.contains_key(&rat(0, 1)));
        assert_eq!(r.zero_delta_dimension, 0);

        // [x, y] = y acting on a line by x ↦ 1, y ↦ 0: the pair (x, y) gives
        // (1 − δ) D(y) = 0, so D(x) is always free and D(y) only at δ = 1.
        let b = LieAlgebra::from_structure_constants(2, [(0, 1, 1, rat(1, 1))]).unwrap();
        let v = Representation::new(
            b.clone(),
            1,
            vec![Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[0]])],
        )
        .unwrap();
        let r = scan(&b, &v, ScanOptions { include_zero: true }).unwrap();
        assert_eq!(r.generic_dimension(), 1);
        assert_eq!(r.zero_delta_dimension, 1);
        let sys = assemble_system(&b, &v).unwrap();
        assert_eq!(kernel_at(&sys, &rat(0, 1)).unwrap().dim(), 1);
        assert_eq!(findings(&r), vec![(rat(1, 1), 2)]);
    }
}
