use std::collections::BTreeMap;
use std::ops::Range;

use num_traits::{One, Zero};

use super::{LieError, Validation};
use crate::arith::{rat, Rational};
use crate::linalg::Matrix;

/// Basis positions of sl(2) in the fixed order `(e−, h, e+)`.
pub const SL2_E_MINUS: usize = 0;
pub const SL2_H: usize = 1;
pub const SL2_E_PLUS: usize = 2;

/// A finite-dimensional Lie algebra over Q in a fixed basis.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; antisymmetry is
/// structural. `summands` records the simple pieces of a direct sum (a
/// single range for algebras built directly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    structure: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    labels: Vec<String>,
    summands: Vec<Range<usize>>,
}

impl LieAlgebra {
    /// Builds and validates an algebra from `(i, j, k, c)` meaning
    /// `[e_i, e_j] ∋ c·e_k`.
    ///
    /// Entries with `i > j` are accepted and stored negated; repeated
    /// entries add up.
    pub fn from_structure_constants(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, LieError> {
        Self::build(dim, entries, None, Validation::Full)
    }

    pub fn build(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
        labels: Option<Vec<String>>,
        validation: Validation,
    ) -> Result<Self, LieError> {
        let check = |index| {
            if index < dim {
                Ok(())
            } else {
                Err(LieError::IndexOutOfRange { index, dim })
            }
        };
        let mut dense: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            check(i)?;
            check(j)?;
            check(k)?;
            if c.is_zero() {
                continue;
            }
            if i == j {
                return Err(LieError::SelfBracket(i));
            }
            let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            *dense
                .entry(key)
                .or_default()
                .entry(k)
                .or_insert_with(Rational::zero) += c;
        }
        let structure = dense
            .into_iter()
            .filter_map(|(key, terms)| {
                let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (!terms.is_empty()).then_some((key, terms))
            })
            .collect();
        let labels = match labels {
            Some(l) if l.len() == dim => l,
            Some(l) => {
                return Err(LieError::InvalidParameter(format!(
                    "{} labels for a {dim}-dimensional algebra",
                    l.len()
                )))
            }
            None => (0..dim).map(|i| format!("x{i}")).collect(),
        };
        let algebra = Self {
            dim,
            structure,
            labels,
            summands: std::iter::once(0..dim).collect(),
        };
        if validation == Validation::Full {
            algebra.check_jacobi()?;
        }
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index ranges of the simple summands.
    pub fn summands(&self) -> &[Range<usize>] {
        &self.summands
    }

    /// Stored structure constants as `(i, j, k, c)` with `i < j`, sorted.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.structure
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    /// Sparse `[e_i, e_j]` as `(k, c)` terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vec::new(),
            std::cmp::Ordering::Less => self.structure.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .structure
                .get(&(j, i))
                .map(|t| t.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// Bracket of coordinate vectors by bilinear expansion.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), terms) in &self.structure {
            // x_i y_j − x_j y_i
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// `ad(e_i)` in the standard basis: column `j` holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                m[(k, j)] = c;
            }
        }
        m
    }

    /// Dimension of the derived algebra `[L, L]`.
    pub fn derived_dim(&self) -> usize {
        let rows: Vec<Vec<Rational>> = self
            .structure
            .values()
            .map(|terms| {
                let mut v = vec![Rational::zero(); self.dim];
                for (k, c) in terms {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        if rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(rows).rank()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_dim() == self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_empty()
    }

    /// Exhaustive Jacobi check over all basis triples `i < j < k`; the
    /// Jacobiator is alternating, so other orderings add nothing.
    pub fn check_jacobi(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let residual = self.jacobiator(i, j, k);
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coeff) in self.bracket_basis(a, b) {
                for (n, d) in self.bracket_basis(m, c) {
                    out[n] += &coeff * &d;
                }
            }
        }
        out
    }

    pub(crate) fn with_summands(mut self, summands: Vec<Range<usize>>) -> Self {
        self.summands = summands;
        self
    }
}

/// sl(2) with basis `(e−, h, e+)`:
/// `[h, e−] = −2e−`, `[h, e+] = 2e+`, `[e+, e−] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::build(
        3,
        [
            (SL2_H, SL2_E_MINUS, SL2_E_MINUS, rat(-2, 1)),
            (SL2_H, SL2_E_PLUS, SL2_E_PLUS, rat(2, 1)),
            (SL2_E_PLUS, SL2_E_MINUS, SL2_H, rat(1, 1)),
        ],
        Some(vec!["e-".into(), "h".into(), "e+".into()]),
        Validation::Full,
    )
    .expect("sl(2) table is a Lie algebra")
}

/// sl(n) in the basis of off-diagonal units `E_ij` (row-major over `i ≠ j`)
/// followed by `H_i = E_ii − E_{i+1,i+1}`, together with the matrices of the
/// natural representation in that order.
pub(crate) fn sl_n_basis(n: usize) -> Result<(LieAlgebra, Vec<Matrix>), LieError> {
    if n < 2 {
        return Err(LieError::InvalidParameter(format!(
            "sl(n) needs n >= 2, got {n}"
        )));
    }
    let mut basis: Vec<Matrix> = Vec::new();
    let mut labels = Vec::new();
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
    };
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(i, j));
                labels.push(format!("E{},{}", i + 1, j + 1));
            }
        }
    }
    let off_diag = basis.len();
    for i in 0..n - 1 {
        let mut h = unit(i, i);
        h[(i + 1, i + 1)] = -Rational::one();
        basis.push(h);
        labels.push(format!("H{}", i + 1));
    }
    // coordinates of a traceless matrix: off-diagonal entries directly, the
    // diagonal through partial sums d_1 + … + d_i on H_i
    let coords = |m: &Matrix| -> Vec<Rational> {
        let mut v = Vec::with_capacity(n * n - 1);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    v.push(m[(i, j)].clone());
                }
            }
        }
        let mut partial = Rational::zero();
        for i in 0..n - 1 {
            partial += &m[(i, i)];
            v.push(partial.clone());
        }
        v
    };
    debug_assert_eq!(off_diag + n - 1, n * n - 1);
    let mut entries = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let c = basis[a].commutator(&basis[b]);
            for (k, x) in coords(&c).into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((a, b, k, x));
                }
            }
        }
    }
    let algebra = LieAlgebra::build(basis.len(), entries, Some(labels), Validation::Full)?;
    Ok((algebra, basis))
}

/// Block direct sum; the summand ranges of the parts are concatenated, so
/// nesting is associative.
pub fn direct_sum_algebras(parts: &[&LieAlgebra]) -> Result<LieAlgebra, LieError> {
    if parts.is_empty() {
        return Err(LieError::EmptySum);
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let mut entries = Vec::new();
    let mut labels = Vec::new();
    let mut summands = Vec::new();
    let mut offset = 0;
    for (p, part) in parts.iter().enumerate() {
        for (i, j, k, c) in part.structure_constants() {
            entries.push((i + offset, j + offset, k + offset, c.clone()));
        }
        labels.extend(part.labels().iter().map(|l| format!("{l}[{p}]")));
        summands.extend(
            part.summands()
                .iter()
                .map(|r| r.start + offset..r.end + offset),
        );
        offset += part.dim();
    }
    // the parts were validated; cross brackets vanish by construction
    Ok(LieAlgebra::build(offset, entries, Some(labels), Validation::Skip)?.with_summands(summands))
}
