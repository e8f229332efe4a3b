use num_traits::{One, Zero};
use rayon::prelude::*;

use super::pencil::{pencil_blocks, PencilBlock};
use super::{assemble_system, DerivationSystem, SolveError};
use crate::arith::Rational;
use crate::lie::{invariants, weight_decomposition, LieAlgebra, Representation};
use crate::linalg::{reduced_row_basis, Matrix};

/// Exact basis of `Der_δ(L, V)`.
///
/// Each basis element is a `dim L × dim V` matrix whose row `a` holds the
/// coordinates of `D(e_a)`. Flattened row-major, the basis is in reduced
/// echelon form with unit pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub delta: Rational,
    pub basis: Vec<Matrix>,
    /// Grading weight of each basis element (eigenvalue of the designated
    /// element on the map), present for graded solves.
    pub weights: Option<Vec<Rational>>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn flat_basis(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|m| m.as_flat().to_vec()).collect()
    }
}

/// Result of checking the derivation identity on every basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// First pair `(i, j)`, `i < j`, where
    /// `D([e_i,e_j]) + δ e_j•D(e_i) − δ e_i•D(e_j)` is nonzero.
    Fails {
        pair: (usize, usize),
        residual: Vec<Rational>,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Evaluates the defining identity directly, without the linear system.
pub fn is_delta_derivation(
    map: &Matrix,
    algebra: &LieAlgebra,
    module: &Representation,
    delta: &Rational,
) -> Result<Verdict, SolveError> {
    if module.algebra() != algebra {
        return Err(SolveError::AlgebraMismatch);
    }
    let expected = (algebra.dim(), module.dim());
    if map.shape() != expected {
        return Err(SolveError::ShapeMismatch {
            expected,
            got: map.shape(),
        });
    }
    let n = algebra.dim();
    for i in 0..n {
        for j in i + 1..n {
            let mut residual = vec![Rational::zero(); module.dim()];
            for (k, c) in algebra.bracket_basis(i, j) {
                for (r, x) in residual.iter_mut().zip(map.row(k)) {
                    *r += &c * x;
                }
            }
            let ji = module.act(j, map.row(i));
            let ij = module.act(i, map.row(j));
            for ((r, a), b) in residual.iter_mut().zip(ji).zip(ij) {
                *r += delta * (a - b);
            }
            if residual.iter().any(|x| !x.is_zero()) {
                return Ok(Verdict::Fails {
                    pair: (i, j),
                    residual,
                });
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Kernel of one block at `δ`, lifted to full-length vectors and reduced.
fn block_kernel(
    system: &DerivationSystem<'_>,
    block: &PencilBlock,
    delta: &Rational,
) -> Vec<Vec<Rational>> {
    let (a, b) = (system.constant_part(), system.linear_part());
    let rows: Vec<Vec<Rational>> = block
        .rows
        .iter()
        .map(|&r| {
            block
                .cols
                .iter()
                .map(|&c| &a[(r, c)] + delta * &b[(r, c)])
                .collect()
        })
        .collect();
    let local = if rows.is_empty() {
        Matrix::zeros(0, block.cols.len())
    } else {
        Matrix::from_rows(rows)
    };
    local
        .kernel()
        .into_iter()
        .map(|v| {
            let mut full = vec![Rational::zero(); system.cols()];
            for (x, &c) in v.into_iter().zip(&block.cols) {
                full[c] = x;
            }
            full
        })
        .collect()
}

fn unit(len: usize, at: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[at] = Rational::one();
    v
}

fn leading_index(v: &[Rational]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

/// Reshapes kernel vectors into maps and re-checks each one against the
/// defining identity.
fn into_space(
    system: &DerivationSystem<'_>,
    delta: &Rational,
    vectors: Vec<Vec<Rational>>,
    weights: Option<Vec<Rational>>,
) -> Result<DerivationSpace, SolveError> {
    let (n, dv) = (system.algebra().dim(), system.module().dim());
    let basis: Vec<Matrix> = vectors
        .into_iter()
        .map(|v| Matrix::from_flat(n, dv, v))
        .collect();
    for (index, map) in basis.iter().enumerate() {
        if let Verdict::Fails { pair, .. } =
            is_delta_derivation(map, system.algebra(), system.module(), delta)?
        {
            return Err(SolveError::VerificationFailure { index, pair });
        }
    }
    Ok(DerivationSpace {
        delta: delta.clone(),
        basis,
        weights,
    })
}

/// Exact kernel of the specialised system: fraction-free elimination on each
/// connected block, back-substitution, and a final reduced echelon basis.
pub fn kernel_at(
    system: &DerivationSystem<'_>,
    delta: &Rational,
) -> Result<DerivationSpace, SolveError> {
    let (blocks, free) = pencil_blocks(system);
    let mut vectors: Vec<Vec<Rational>> = blocks
        .par_iter()
        .map(|b| block_kernel(system, b, delta))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    vectors.extend(free.into_iter().map(|c| unit(system.cols(), c)));
    let basis = reduced_row_basis(vectors, system.cols());
    into_space(system, delta, basis, None)
}

/// `Der_δ(L, V)`. With a grading element `h` (diagonal in both bases), the
/// system splits by weight: a map of weight `w` sends the `β`-eigenspace of
/// `L` into the `(β − w)`-eigenspace of `V`, and each weight is solved on its
/// own. Either way the returned basis is the same reduced echelon form.
pub fn solve(
    algebra: &LieAlgebra,
    module: &Representation,
    delta: &Rational,
    grading: Option<usize>,
) -> Result<DerivationSpace, SolveError> {
    let system = assemble_system(algebra, module)?;
    let Some(h) = grading else {
        return kernel_at(&system, delta);
    };
    let blocks = weight_decomposition(algebra, module, h)?;
    let mut alg_weight = vec![Rational::zero(); algebra.dim()];
    let mut mod_weight = vec![Rational::zero(); module.dim()];
    for b in &blocks {
        for &a in &b.algebra_indices {
            alg_weight[a] = b.weight.clone();
        }
        for &m in &b.module_indices {
            mod_weight[m] = b.weight.clone();
        }
    }
    let dv = module.dim();
    let mut grades: std::collections::BTreeMap<Rational, PencilBlock> = Default::default();
    for a in 0..algebra.dim() {
        for m in 0..dv {
            grades
                .entry(&alg_weight[a] - &mod_weight[m])
                .or_insert_with(|| PencilBlock {
                    rows: Vec::new(),
                    cols: Vec::new(),
                })
                .cols
                .push(system.column(a, m));
        }
    }
    for (p, &(i, j)) in system.pairs().iter().enumerate() {
        for m in 0..dv {
            let grade = &alg_weight[i] + &alg_weight[j] - &mod_weight[m];
            if let Some(block) = grades.get_mut(&grade) {
                block.rows.push(p * dv + m);
            }
        }
    }
    let per_grade: Vec<(Rational, Vec<Vec<Rational>>)> = grades
        .into_par_iter()
        .map(|(w, block)| {
            let kernel = block_kernel(&system, &block, delta);
            (w, reduced_row_basis(kernel, system.cols()))
        })
        .collect();
    // Supports of different grades are disjoint, so the union of the
    // per-grade reduced bases, ordered by pivot, is already reduced.
    let mut tagged: Vec<(Rational, Vec<Rational>)> = per_grade
        .into_iter()
        .flat_map(|(w, vs)| vs.into_iter().map(move |v| (w.clone(), v)))
        .collect();
    tagged.sort_by_key(|(_, v)| leading_index(v));
    let (weights, vectors): (Vec<_>, Vec<_>) = tagged.into_iter().unzip();
    into_space(&system, delta, vectors, Some(weights))
}

/// Inner 1-derivations `x ↦ x•v`. The span has dimension
/// `dim V − dim V^L`, since `v ↦ (x ↦ x•v)` has kernel `V^L`.
pub fn inner_derivations(
    algebra: &LieAlgebra,
    module: &Representation,
) -> Result<DerivationSpace, SolveError> {
    let system = assemble_system(algebra, module)?;
    let (n, dv) = (algebra.dim(), module.dim());
    let maps: Vec<Vec<Rational>> = (0..dv)
        .map(|m| {
            let v = unit(dv, m);
            (0..n).flat_map(|a| module.act(a, &v)).collect()
        })
        .collect();
    let basis = reduced_row_basis(maps, n * dv);
    debug_assert_eq!(basis.len(), dv - invariants(module).len());
    into_space(&system, &Rational::one(), basis, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{adjoint_module, sl2, sl2_module, trivial_module, SL2_H};

    #[test]
    fn zero_map_is_always_a_derivation() {
        let s = sl2();
        let v = sl2_module(3).unwrap();
        let zero = Matrix::zeros(3, 4);
        for d in [rat(0, 1), rat(1, 1), rat(-7, 3)] {
            assert!(is_delta_derivation(&zero, &s, &v, &d).unwrap().holds());
        }
    }

    #[test]
    fn inner_map_of_v0_in_v1() {
        // e− ↦ v1, h ↦ v0, e+ ↦ 0 is x ↦ x•v0
        let s = sl2();
        let v = sl2_module(1).unwrap();
        let d = Matrix::from_ints(&[&[0, 1], &[1, 0], &[0, 0]]);
        assert!(is_delta_derivation(&d, &s, &v, &rat(1, 1)).unwrap().holds());
    }

    #[test]
    fn identity_is_not_a_minus_one_derivation() {
        // identity under V(2) ≅ sl(2): e− ↦ −v2, h ↦ −v1, e+ ↦ v0
        let s = sl2();
        let v = sl2_module(2).unwrap();
        let id = Matrix::from_ints(&[&[0, 0, -1], &[0, -1, 0], &[1, 0, 0]]);
        assert!(is_delta_derivation(&id, &s, &v, &rat(1, 2))
            .unwrap()
            .holds());
        // pair (e−, h): D(2e−) + δ h•D(e−) − δ e−•D(h) = −2v2 + 4δ v2 = −6 v2 at δ = −1
        assert_eq!(
            is_delta_derivation(&id, &s, &v, &rat(-1, 1)).unwrap(),
            Verdict::Fails {
                pair: (0, 1),
                residual: vec![rat(0, 1), rat(0, 1), rat(-6, 1)]
            }
        );
    }

    #[test]
    fn shape_mismatch() {
        let s = sl2();
        let v = sl2_module(2).unwrap();
        assert!(matches!(
            is_delta_derivation(&Matrix::zeros(2, 3), &s, &v, &rat(1, 1)),
            Err(SolveError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn fixed_delta_examples() {
        let s = sl2();
        let v2 = sl2_module(2).unwrap();
        let half = solve(&s, &v2, &rat(1, 2), None).unwrap();
        assert_eq!(half.dim(), 1);
        for n in 0..5 {
            let v = sl2_module(n).unwrap();
            assert_eq!(solve(&s, &v, &rat(0, 1), None).unwrap().dim(), 0);
        }
        let v3 = sl2_module(3).unwrap();
        let sp = solve(&s, &v3, &rat(2, 5), None).unwrap();
        assert_eq!(sp.dim(), 2);
        assert_eq!(solve(&s, &v2, &rat(-1, 1), None).unwrap().dim(), 5);
        assert_eq!(
            solve(&s, &sl2_module(4).unwrap(), &rat(1, 3), None)
                .unwrap()
                .dim(),
            3
        );
    }

    #[test]
    fn graded_equals_ungraded() {
        let s = sl2();
        for n in 0..5 {
            let v = sl2_module(n).unwrap();
            for d in [rat(1, 1), rat(-2, n.max(1)), rat(2, n + 2), rat(3, 7)] {
                let plain = solve(&s, &v, &d, None).unwrap();
                let graded = solve(&s, &v, &d, Some(SL2_H)).unwrap();
                assert_eq!(plain.basis, graded.basis, "n={n} δ={d}");
                assert_eq!(graded.weights.as_ref().unwrap().len(), graded.dim());
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        let line = LieAlgebra::from_structure_constants(1, []).unwrap();
        let v = trivial_module(&line, 3);
        assert_eq!(solve(&line, &v, &rat(5, 1), None).unwrap().dim(), 3);
        let s = sl2();
        let zero = trivial_module(&s, 0);
        assert_eq!(solve(&s, &zero, &rat(1, 1), None).unwrap().dim(), 0);
    }

    #[test]
    fn inner_derivation_dimensions() {
        let s = sl2();
        for n in 1..5 {
            let v = sl2_module(n).unwrap();
            assert_eq!(inner_derivations(&s, &v).unwrap().dim(), n as usize + 1);
        }
        assert_eq!(
            inner_derivations(&s, &trivial_module(&s, 2)).unwrap().dim(),
            0
        );
        let ad = adjoint_module(&s);
        let inner = inner_derivations(&s, &ad).unwrap();
        assert_eq!(inner.basis, solve(&s, &ad, &rat(1, 1), None).unwrap().basis);
    }
}
