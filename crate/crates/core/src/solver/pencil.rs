//! Fraction-free elimination of the pencil `A + δB` over `Z[δ]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::DerivationSystem;
use crate::arith::{IntPoly, Poly};

/// Rows and columns of one connected component of the nonzero pattern.
/// Distinct blocks share no rows or columns, so the pencil is block
/// diagonal after permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilBlock {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Splits the pencil into connected components (ordered by smallest
/// column) and returns them with the columns that appear in no equation.
pub fn pencil_blocks(system: &DerivationSystem<'_>) -> (Vec<PencilBlock>, Vec<usize>) {
    let ncols = system.cols();
    let mut parent: Vec<usize> = (0..ncols).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut row_anchor: Vec<Option<usize>> = vec![None; system.rows()];
    let mut touched = vec![false; ncols];
    for (r, anchor) in row_anchor.iter_mut().enumerate() {
        for c in 0..ncols {
            if !system.is_structural_nonzero(r, c) {
                continue;
            }
            touched[c] = true;
            match *anchor {
                None => *anchor = Some(c),
                Some(a) => {
                    let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
                    if ra != rc {
                        parent[ra.max(rc)] = ra.min(rc);
                    }
                }
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, PencilBlock> = Default::default();
    let mut free = Vec::new();
    for c in 0..ncols {
        if !touched[c] {
            free.push(c);
            continue;
        }
        let root = find(&mut parent, c);
        by_root
            .entry(root)
            .or_insert_with(|| PencilBlock {
                rows: Vec::new(),
                cols: Vec::new(),
            })
            .cols
            .push(c);
    }
    for (r, anchor) in row_anchor.into_iter().enumerate() {
        if let Some(a) = anchor {
            let root = find(&mut parent, a);
            by_root.get_mut(&root).expect("anchored row").rows.push(r);
        }
    }
    // roots are minimal column indices, so BTreeMap order is by smallest column
    (by_root.into_values().collect(), free)
}

/// Outcome of fraction-free elimination on one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilElimination {
    /// Successive Bareiss pivots. The `k`-th is a `k×k` minor of the block,
    /// so the last one is a nonzero maximal minor: any `δ` at which the rank
    /// drops is a root of it.
    pub pivots: Vec<IntPoly>,
}

impl PencilElimination {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rows of the block as integer polynomials (each row scaled by the lcm of
/// its denominators).
pub(crate) fn integer_block(
    system: &DerivationSystem<'_>,
    block: &PencilBlock,
) -> Vec<Vec<IntPoly>> {
    let (a, b) = (system.constant_part(), system.linear_part());
    block
        .rows
        .iter()
        .map(|&r| {
            let lcm = block.cols.iter().fold(BigInt::one(), |acc, &c| {
                acc.lcm(a[(r, c)].denom()).lcm(b[(r, c)].denom())
            });
            block
                .cols
                .iter()
                .map(|&c| {
                    let scale = |x: &crate::arith::Rational| x.numer() * (&lcm / x.denom());
                    IntPoly::new(vec![scale(&a[(r, c)]), scale(&b[(r, c)])])
                })
                .collect()
        })
        .collect()
}

/// Bareiss elimination over `Z[δ]` with full pivoting: at each step the
/// pivot is the nonzero entry of lowest degree, ties broken by original
/// column, then row.
pub fn eliminate(mut m: Vec<Vec<IntPoly>>) -> PencilElimination {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut col_id: Vec<usize> = (0..ncols).collect();
    let mut prev = IntPoly::one();
    let mut pivots = Vec::new();
    for k in 0..nrows.min(ncols) {
        let mut best: Option<(usize, usize, usize, usize)> = None; // (deg, col id, row, col)
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if let Some(d) = x.degree() {
                    let key = (d, col_id[j], i, j);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, _, pr, pc)) = best else {
            break;
        };
        m.swap(k, pr);
        for row in m.iter_mut() {
            row.swap(k, pc);
        }
        col_id.swap(k, pc);
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..ncols {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&factor * &pivot_row[j]);
                }
                row[j] = if v.is_zero() { v } else { v.div_exact(&prev) };
            }
        }
        prev = m[k][k].clone();
        pivots.push(prev.clone());
    }
    PencilElimination { pivots }
}

/// The gcd of all maximal nonzero minors of a polynomial matrix, i.e. the
/// polynomial whose roots are exactly the `δ` where the rank drops below its
/// generic value. Computed by unimodular row and column reduction to a
/// diagonal over `Q[δ]`.
pub fn rank_drop_polynomial(block: &[Vec<IntPoly>]) -> Poly {
    let mut m: Vec<Vec<Poly>> = block
        .iter()
        .map(|r| r.iter().map(IntPoly::to_poly).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut product = Poly::constant(crate::arith::Rational::one());
    for k in 0..nrows.min(ncols) {
        let lowest = |m: &Vec<Vec<Poly>>, cells: &mut dyn Iterator<Item = (usize, usize)>| {
            cells
                .filter_map(|(i, j)| m[i][j].degree().map(|d| (d, i, j)))
                .min()
        };
        let all = &mut (k..nrows).flat_map(|i| (k..ncols).map(move |j| (i, j)));
        let Some((_, pi, pj)) = lowest(&m, all) else {
            break;
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut clean = true;
            for i in k + 1..nrows {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, _) = m[i][k].div_rem(&m[k][k]);
                for j in k..ncols {
                    let t = &q * &m[k][j];
                    m[i][j] = &m[i][j] - &t;
                }
                clean &= m[i][k].is_zero();
            }
            for j in k + 1..ncols {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, _) = m[k][j].div_rem(&m[k][k]);
                for row in m.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] = &row[j] - &t;
                }
                clean &= m[k][j].is_zero();
            }
            if clean {
                break;
            }
            // a remainder of lower degree than the pivot survived: promote it
            let cross = &mut (k..nrows)
                .map(|i| (i, k))
                .chain((k + 1..ncols).map(|j| (k, j)));
            let (_, pi, pj) = lowest(&m, cross).expect("pivot is nonzero");
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        product = &product * &m[k][k];
    }
    product.normalize()
}
