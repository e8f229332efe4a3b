use num_traits::Zero;

use super::SolveError;
use crate::arith::{Poly, Rational};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::Matrix;

/// The pencil `A + δB` whose kernel at `δ` is `Der_δ(L, V)`.
#[derive(Debug, Clone)]
pub struct DerivationSystem<'a> {
    module: &'a Representation,
    pairs: Vec<(usize, usize)>,
    constant: Matrix,
    linear: Matrix,
}

/// Builds the pencil for `Der_δ(algebra, module)`.
pub fn assemble_system<'a>(
    algebra: &LieAlgebra,
    module: &'a Representation,
) -> Result<DerivationSystem<'a>, SolveError> {
    if module.algebra() != algebra {
        return Err(SolveError::AlgebraMismatch);
    }
    let n = algebra.dim();
    let dv = module.dim();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut constant = Matrix::zeros(pairs.len() * dv, n * dv);
    let mut linear = Matrix::zeros(pairs.len() * dv, n * dv);
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let bracket = algebra.bracket_basis(i, j);
        let (rho_i, rho_j) = (module.action(i), module.action(j));
        for m in 0..dv {
            let row = p * dv + m;
            for (k, c) in &bracket {
                constant[(row, k * dv + m)] += c;
            }
            for mm in 0..dv {
                let a = &rho_j[(m, mm)];
                if !a.is_zero() {
                    linear[(row, i * dv + mm)] += a;
                }
                let b = &rho_i[(m, mm)];
                if !b.is_zero() {
                    linear[(row, j * dv + mm)] -= b;
                }
            }
        }
    }
    Ok(DerivationSystem {
        module,
        pairs,
        constant,
        linear,
    })
}

impl<'a> DerivationSystem<'a> {
    pub fn algebra(&self) -> &'a LieAlgebra {
        self.module.algebra()
    }

    pub fn module(&self) -> &'a Representation {
        self.module
    }

    /// Basis pairs `(i, j)`, `i < j`, in row-block order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn rows(&self) -> usize {
        self.constant.rows()
    }

    pub fn cols(&self) -> usize {
        self.constant.cols()
    }

    /// Column of the unknown `D(e_a)_m`.
    pub fn column(&self, a: usize, m: usize) -> usize {
        a * self.module.dim() + m
    }

    /// `A`: the terms coming from `D([e_i, e_j])`.
    pub fn constant_part(&self) -> &Matrix {
        &self.constant
    }

    /// `B`: the coefficient of `δ`.
    pub fn linear_part(&self) -> &Matrix {
        &self.linear
    }

    /// Entry as a polynomial of degree at most one in `δ`.
    pub fn entry(&self, row: usize, col: usize) -> Poly {
        Poly::new(vec![
            self.constant[(row, col)].clone(),
            self.linear[(row, col)].clone(),
        ])
    }

    /// `A + δB`.
    pub fn specialize(&self, delta: &Rational) -> Matrix {
        &self.constant + &self.linear.scaled(delta)
    }

    pub(crate) fn is_structural_nonzero(&self, row: usize, col: usize) -> bool {
        !self.constant[(row, col)].is_zero() || !self.linear[(row, col)].is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{sl2, sl2_module, trivial_module, SL2_E_MINUS, SL2_E_PLUS, SL2_H};

    #[test]
    fn sizes() {
        let s = sl2();
        let v1 = sl2_module(1).unwrap();
        let sys = assemble_system(&s, &v1).unwrap();
        assert_eq!((sys.rows(), sys.cols()), (6, 6));
        assert_eq!(sys.pairs(), &[(0, 1), (0, 2), (1, 2)]);
        for r in 0..6 {
            for c in 0..6 {
                assert!(sys.entry(r, c).degree().is_none_or(|d| d <= 1));
            }
        }
    }

    #[test]
    fn abelian_has_no_constant_part() {
        let ab = LieAlgebra::from_structure_constants(3, []).unwrap();
        let v = trivial_module(&ab, 2);
        let sys = assemble_system(&ab, &v).unwrap();
        assert!(sys.constant_part().is_zero());
        assert_eq!(sys.rows(), 3 * 2);
    }

    #[test]
    fn mismatched_module() {
        let ab = LieAlgebra::from_structure_constants(3, []).unwrap();
        assert!(matches!(
            assemble_system(&ab, &sl2_module(1).unwrap()),
            Err(SolveError::AlgebraMismatch)
        ));
    }

    #[test]
    fn weight_block_row_matches_hand_expansion() {
        // D(e−) = λ v_{1−α}, D(h) = μ v_{−α}, D(e+) = η v_{−1−α}. The pair
        // (h, e−) gives (−2λ + δμ(1−α) − δλ(n−2+2α)) v_{1−α}; our row is the
        // pair (e−, h), the same equation with the opposite sign.
        let s = sl2();
        for n in 2..6i64 {
            let v = sl2_module(n).unwrap();
            let sys = assemble_system(&s, &v).unwrap();
            let dv = v.dim();
            for alpha in -n + 1..=-1 {
                let (lambda, mu, eta) = (rat(3, 1), rat(-5, 2), rat(7, 3));
                let delta = rat(2, 7);
                let mut x = vec![rat(0, 1); sys.cols()];
                x[sys.column(SL2_E_MINUS, (1 - alpha) as usize)] = lambda.clone();
                x[sys.column(SL2_H, (-alpha) as usize)] = mu.clone();
                x[sys.column(SL2_E_PLUS, (-1 - alpha) as usize)] = eta.clone();
                let values = sys.specialize(&delta).mul_vec(&x);
                let row = (1 - alpha) as usize; // pair index 0, component v_{1−α}
                let a = rat(alpha, 1);
                let nn = rat(n, 1);
                let paper = rat(-2, 1) * &lambda + &delta * &mu * (rat(1, 1) - &a)
                    - &delta * &lambda * (&nn - rat(2, 1) + rat(2, 1) * &a);
                assert_eq!(values[row], -paper, "n={n} alpha={alpha}");
                let _ = dv;
            }
        }
    }
}
