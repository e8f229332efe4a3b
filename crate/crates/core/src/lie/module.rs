use std::sync::Arc;

use num_traits::Zero;

use super::algebra::{direct_sum_algebras, sl2, sl_n_basis, LieAlgebra};
use super::{LieError, Validation};
use crate::arith::{rat, Rational};
use crate::linalg::Matrix;

/// A finite-dimensional module: one action matrix `ρ(e_i)` per basis
/// element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
    weight_labels: Option<Vec<i64>>,
}

impl Representation {
    /// Validates shapes and the homomorphism property on all basis pairs.
    pub fn new(
        algebra: impl Into<Arc<LieAlgebra>>,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self, LieError> {
        Self::build(algebra, dim, action, None, Validation::Full)
    }

    pub fn build(
        algebra: impl Into<Arc<LieAlgebra>>,
        dim: usize,
        action: Vec<Matrix>,
        weight_labels: Option<Vec<i64>>,
        validation: Validation,
    ) -> Result<Self, LieError> {
        let algebra = algebra.into();
        if action.len() != algebra.dim() {
            return Err(LieError::ActionCount {
                expected: algebra.dim(),
                got: action.len(),
            });
        }
        for (index, m) in action.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(LieError::ActionShape {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim,
                });
            }
        }
        if let Some(w) = &weight_labels {
            if w.len() != dim {
                return Err(LieError::WeightCount {
                    expected: dim,
                    got: w.len(),
                });
            }
        }
        let rep = Self {
            algebra,
            dim,
            action,
            weight_labels,
        };
        if validation == Validation::Full {
            rep.check_homomorphism()?;
        }
        Ok(rep)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ρ(e_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn weight_labels(&self) -> Option<&[i64]> {
        self.weight_labels.as_deref()
    }

    /// `e_i • v`.
    pub fn act(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        self.action[i].mul_vec(v)
    }

    /// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` for every `i < j`.
    pub fn check_homomorphism(&self) -> Result<(), LieError> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in self.algebra.bracket_basis(i, j) {
                    lhs = &lhs + &self.action[k].scaled(&c);
                }
                if lhs != self.action[i].commutator(&self.action[j]) {
                    return Err(LieError::HomomorphismViolation { i, j });
                }
            }
        }
        Ok(())
    }
}

/// The irreducible `(n+1)`-dimensional sl(2)-module `V(n)` with basis
/// `v_0, …, v_n`:
/// `e−•v_i = (i+1) v_{i+1}`, `h•v_i = (n−2i) v_i`, `e+•v_i = (n−i+1) v_{i−1}`.
/// Weight label of `v_i` is `i`.
pub fn sl2_module(n: i64) -> Result<Representation, LieError> {
    if n < 0 {
        return Err(LieError::InvalidParameter(format!(
            "V(n) needs n >= 0, got {n}"
        )));
    }
    let d = n as usize + 1;
    let mut e_minus = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut e_plus = Matrix::zeros(d, d);
    for i in 0..d {
        let ii = i as i64;
        if i + 1 < d {
            e_minus[(i + 1, i)] = rat(ii + 1, 1);
        }
        h[(i, i)] = rat(n - 2 * ii, 1);
        if i > 0 {
            e_plus[(i - 1, i)] = rat(n - ii + 1, 1);
        }
    }
    Representation::build(
        sl2(),
        d,
        vec![e_minus, h, e_plus],
        Some((0..=n).collect()),
        Validation::Full,
    )
}

/// sl(n) together with its natural `n`-dimensional module.
pub fn sl_n(n: usize) -> Result<(LieAlgebra, Representation), LieError> {
    let (algebra, matrices) = sl_n_basis(n)?;
    let rep = Representation::new(algebra.clone(), n, matrices)?;
    Ok((algebra, rep))
}

pub fn adjoint_module(algebra: &LieAlgebra) -> Representation {
    let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
    Representation::build(
        algebra.clone(),
        algebra.dim(),
        action,
        None,
        Validation::Skip,
    )
    .expect("ad has the right shapes")
}

pub fn trivial_module(algebra: &LieAlgebra, dim: usize) -> Representation {
    let action = vec![Matrix::zeros(dim, dim); algebra.dim()];
    Representation::build(algebra.clone(), dim, action, None, Validation::Skip)
        .expect("zero action has the right shapes")
}

/// Block-diagonal sum of modules over one algebra.
pub fn direct_sum_modules(parts: &[&Representation]) -> Result<Representation, LieError> {
    let first = parts.first().ok_or(LieError::EmptySum)?;
    if parts.iter().any(|p| p.algebra() != first.algebra()) {
        return Err(LieError::AlgebraMismatch);
    }
    if parts.len() == 1 {
        return Ok((*first).clone());
    }
    let dim = parts.iter().map(|p| p.dim).sum();
    let action = (0..first.algebra().dim())
        .map(|i| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.action[i]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let weights = parts
        .iter()
        .map(|p| p.weight_labels.clone())
        .collect::<Option<Vec<_>>>()
        .map(|w| w.concat());
    Representation::build(
        first.algebra.clone(),
        dim,
        action,
        weights,
        Validation::Skip,
    )
}

/// `V1 ⊗ V2` over `L1 ⊕ L2`: `L1` acts by `ρ1(x) ⊗ I`, `L2` by `I ⊗ ρ2(x)`.
/// Basis `v_a ⊗ w_b` sits at index `a·dim(V2) + b`.
pub fn tensor_module(
    first: &Representation,
    second: &Representation,
) -> Result<Representation, LieError> {
    tensor_modules(&[first, second])
}

/// `V1 ⊗ … ⊗ Vk` over `L1 ⊕ … ⊕ Lk`, each `Li` acting on its own factor.
/// Indices are row-major in the factors, the last factor varying fastest.
pub fn tensor_modules(parts: &[&Representation]) -> Result<Representation, LieError> {
    if parts.is_empty() {
        return Err(LieError::EmptySum);
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let algebras: Vec<&LieAlgebra> = parts.iter().map(|p| p.algebra()).collect();
    let algebra = direct_sum_algebras(&algebras)?;
    let dims: Vec<usize> = parts.iter().map(|p| p.dim).collect();
    let total: usize = dims.iter().product();
    let mut action = Vec::with_capacity(algebra.dim());
    for (p, part) in parts.iter().enumerate() {
        let before = Matrix::identity(dims[..p].iter().product());
        let after = Matrix::identity(dims[p + 1..].iter().product());
        for m in &part.action {
            action.push(before.kron(m).kron(&after));
        }
    }
    // each factor is a representation and the factors commute
    Representation::build(algebra, total, action, None, Validation::Skip)
}

/// Basis of `V^L`, the joint kernel of all action matrices, in reduced
/// echelon form.
pub fn invariants(module: &Representation) -> Vec<Vec<Rational>> {
    let refs: Vec<&Matrix> = module.action.iter().collect();
    let stacked = Matrix::vstack(&refs, module.dim);
    if stacked.rows() == 0 {
        // no algebra elements: everything is invariant
        return Matrix::zeros(0, module.dim).kernel();
    }
    stacked.kernel()
}

impl Representation {
    pub fn is_trivial(&self) -> bool {
        self.action
            .iter()
            .all(|m| m.as_flat().iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{SL2_E_MINUS, SL2_E_PLUS, SL2_H};
    use super::*;

    #[test]
    fn v1_action() {
        let v = sl2_module(1).unwrap();
        assert_eq!(
            v.act(SL2_H, &[rat(1, 1), rat(0, 1)]),
            vec![rat(1, 1), rat(0, 1)]
        );
        assert_eq!(
            v.act(SL2_H, &[rat(0, 1), rat(1, 1)]),
            vec![rat(0, 1), rat(-1, 1)]
        );
        assert!(sl2_module(-1).is_err());
    }

    #[test]
    fn sl2_modules_satisfy_commutator() {
        for n in 0..7 {
            let v = sl2_module(n).unwrap();
            let c = v.action(SL2_E_PLUS).commutator(v.action(SL2_E_MINUS));
            assert_eq!(&c, v.action(SL2_H));
        }
    }

    #[test]
    fn v2_is_adjoint() {
        // φ: v0 ↦ e+, v1 ↦ −h, v2 ↦ −e−, as columns in the (e−, h, e+) basis
        let phi = Matrix::from_ints(&[&[0, 0, -1], &[0, -1, 0], &[1, 0, 0]]);
        let v2 = sl2_module(2).unwrap();
        let ad = adjoint_module(&sl2());
        for i in 0..3 {
            assert_eq!(
                &phi * v2.action(i),
                ad.action(i) * &phi,
                "basis element {i}"
            );
        }
        assert_eq!(phi.rank(), 3);
    }

    #[test]
    fn adjoint_matches_table() {
        let ad = adjoint_module(&sl2());
        // ad(h) = diag(−2, 0, 2)
        assert_eq!(
            ad.action(SL2_H),
            &Matrix::from_ints(&[&[-2, 0, 0], &[0, 0, 0], &[0, 0, 2]])
        );
        // ad(e+): e− ↦ h, h ↦ −2e+
        assert_eq!(
            ad.action(SL2_E_PLUS),
            &Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, -2, 0]])
        );
        ad.check_homomorphism().unwrap();
        let ab = LieAlgebra::from_structure_constants(2, []).unwrap();
        assert!(adjoint_module(&ab).is_trivial());
    }

    #[test]
    fn broken_action_rejected() {
        let s = sl2();
        let mut action = sl2_module(1).unwrap().actions().to_vec();
        action[SL2_H] = Matrix::identity(2);
        assert!(matches!(
            Representation::new(s, 2, action),
            Err(LieError::HomomorphismViolation { .. })
        ));
    }

    #[test]
    fn trivial_and_invariants() {
        let s = sl2();
        assert_eq!(
            trivial_module(&s, 1).actions(),
            sl2_module(0).unwrap().actions()
        );
        assert_eq!(invariants(&trivial_module(&s, 4)).len(), 4);
        assert_eq!(invariants(&trivial_module(&s, 0)).len(), 0);
        assert_eq!(invariants(&sl2_module(0).unwrap()).len(), 1);
        for n in 1..6 {
            assert!(invariants(&sl2_module(n).unwrap()).is_empty());
        }
        assert!(invariants(&adjoint_module(&s)).is_empty());
    }

    #[test]
    fn direct_sum_of_modules() {
        let v1 = sl2_module(1).unwrap();
        let v0 = sl2_module(0).unwrap();
        let sum = direct_sum_modules(&[&v1, &v1]).unwrap();
        assert_eq!(sum.dim(), 4);
        assert_eq!(sum.action(SL2_E_MINUS)[(1, 0)], rat(1, 1));
        assert_eq!(sum.action(SL2_E_MINUS)[(3, 2)], rat(1, 1));
        assert!(sum.action(SL2_E_MINUS)[(3, 0)].is_zero());
        assert_eq!(sum.weight_labels(), Some(&[0, 1, 0, 1][..]));
        assert_eq!(direct_sum_modules(&[&v1]).unwrap(), v1);
        let mixed = direct_sum_modules(&[&v0, &v1, &v0]).unwrap();
        assert_eq!(invariants(&mixed).len(), 2);
        let (l3, nat) = sl_n(3).unwrap();
        let _ = l3;
        assert_eq!(
            direct_sum_modules(&[&v1, &nat]),
            Err(LieError::AlgebraMismatch)
        );
    }

    #[test]
    fn tensor_products() {
        let v1 = sl2_module(1).unwrap();
        let v0 = sl2_module(0).unwrap();
        let v2 = sl2_module(2).unwrap();
        let t = tensor_module(&v1, &v0).unwrap();
        assert_eq!(t.algebra().dim(), 6);
        assert_eq!(t.dim(), 2);
        for i in 3..6 {
            assert!(t.action(i).is_zero());
        }
        assert_eq!(tensor_module(&v2, &v2).unwrap().dim(), 9);
        let inv = |m: &Representation| invariants(m).len();
        for a in [&v0, &v1, &v2] {
            for b in [&v0, &v1, &v2] {
                let t = tensor_module(a, b).unwrap();
                assert_eq!(inv(&t), inv(a) * inv(b));
            }
        }
    }
}
