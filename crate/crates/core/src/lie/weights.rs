use std::collections::BTreeMap;

use super::{LieAlgebra, LieError, Representation};
use crate::arith::Rational;

/// Algebra and module basis indices sharing one eigenvalue of the designated
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBlock {
    pub weight: Rational,
    pub algebra_indices: Vec<usize>,
    pub module_indices: Vec<usize>,
}

/// Groups the bases by eigenvalue of `ad(e_h)` and `ρ(e_h)`, which must both
/// be diagonal already. Blocks are listed by decreasing weight.
///
/// The weights are raw eigenvalues. For sl(2) with `h` this gives
/// `(−2, 0, 2)` on `(e−, h, e+)` and `n − 2i` on `v_i`; the half-integer
/// index convention `(1, 0, −1)`, `i` is related by `w = −2·label` on the
/// algebra and `w = n − 2·label` on `V(n)`.
pub fn weight_decomposition(
    algebra: &LieAlgebra,
    module: &Representation,
    h_index: usize,
) -> Result<Vec<WeightBlock>, LieError> {
    if h_index >= algebra.dim() {
        return Err(LieError::IndexOutOfRange {
            index: h_index,
            dim: algebra.dim(),
        });
    }
    if module.algebra() != algebra {
        return Err(LieError::AlgebraMismatch);
    }
    let ad = algebra.ad(h_index);
    if !ad.is_diagonal() {
        return Err(LieError::NotDiagonal { what: "ad" });
    }
    let rho = module.action(h_index);
    if !rho.is_diagonal() {
        return Err(LieError::NotDiagonal { what: "action" });
    }
    let mut blocks: BTreeMap<Rational, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for a in 0..algebra.dim() {
        blocks.entry(ad[(a, a)].clone()).or_default().0.push(a);
    }
    for m in 0..module.dim() {
        blocks.entry(rho[(m, m)].clone()).or_default().1.push(m);
    }
    Ok(blocks
        .into_iter()
        .rev()
        .map(|(weight, (algebra_indices, module_indices))| WeightBlock {
            weight,
            algebra_indices,
            module_indices,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{adjoint_module, sl2, sl2_module, trivial_module, SL2_E_PLUS, SL2_H};

    #[test]
    fn sl2_weights() {
        let s = sl2();
        let blocks = weight_decomposition(&s, &adjoint_module(&s), SL2_H).unwrap();
        let weights: Vec<_> = blocks.iter().map(|b| b.weight.clone()).collect();
        assert_eq!(weights, vec![rat(2, 1), rat(0, 1), rat(-2, 1)]);
        assert_eq!(blocks[0].algebra_indices, vec![2]);
        assert_eq!(blocks[2].algebra_indices, vec![0]);
    }

    #[test]
    fn v_n_weights() {
        let s = sl2();
        for n in 0..6i64 {
            let v = sl2_module(n).unwrap();
            let blocks = weight_decomposition(&s, &v, SL2_H).unwrap();
            for b in &blocks {
                for &i in &b.module_indices {
                    assert_eq!(b.weight, rat(n - 2 * i as i64, 1));
                }
            }
        }
    }

    #[test]
    fn abelian_single_block() {
        let ab = LieAlgebra::from_structure_constants(2, []).unwrap();
        let v = trivial_module(&ab, 3);
        let blocks = weight_decomposition(&ab, &v, 0).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].algebra_indices, vec![0, 1]);
        assert_eq!(blocks[0].module_indices, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_diagonal() {
        let s = sl2();
        assert_eq!(
            weight_decomposition(&s, &sl2_module(1).unwrap(), SL2_E_PLUS),
            Err(LieError::NotDiagonal { what: "ad" })
        );
    }
}
