use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::sl2::{CaseTag, ExpectedFamily};
use super::CatalogError;
use crate::arith::{rat, Rational};
use crate::lie::{
    adjoint_module, direct_sum_algebras, direct_sum_modules, sl2, sl2_module, sl_n, tensor_modules,
    trivial_module, LieAlgebra, Representation,
};
use crate::linalg::Matrix;

/// A simple summand of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleType {
    /// `sl(m)`, `m ≥ 2`.
    Sl(usize),
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::Sl(m) => write!(f, "sl{m}"),
        }
    }
}

/// An irreducible module over one simple summand (or a trivial one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrrepKind {
    /// `V(n)` of `sl2`.
    Sl2Irrep(u32),
    Natural,
    Adjoint,
    /// Trivial module of the given dimension.
    Trivial(usize),
}

impl fmt::Display for IrrepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepKind::Sl2Irrep(n) => write!(f, "V({n})"),
            IrrepKind::Natural => f.write_str("natural"),
            IrrepKind::Adjoint => f.write_str("adjoint"),
            IrrepKind::Trivial(d) => write!(f, "trivial({d})"),
        }
    }
}

/// A module summand: `kind` over simple summand `summand`, trivial
/// (one-dimensional) over all the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulePart {
    pub summand: usize,
    pub kind: IrrepKind,
}

impl ModulePart {
    pub fn new(summand: usize, kind: IrrepKind) -> Self {
        ModulePart { summand, kind }
    }
}

/// What a module part is up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Trivial,
    /// `V(n)`, `n ≥ 1`, over sl2.
    Sl2(i64),
    /// Adjoint of sl(m), `m ≥ 3`.
    Adjoint(usize),
    /// Natural module of sl(m), `m ≥ 3`.
    Natural(usize),
}

fn shape(g: SimpleType, kind: IrrepKind) -> Result<Shape, CatalogError> {
    let SimpleType::Sl(m) = g;
    if m < 2 {
        return Err(CatalogError::Unsupported(format!("sl{m}")));
    }
    Ok(match (m, kind) {
        (_, IrrepKind::Trivial(_)) | (2, IrrepKind::Sl2Irrep(0)) => Shape::Trivial,
        (2, IrrepKind::Sl2Irrep(n)) => Shape::Sl2(n as i64),
        (2, IrrepKind::Natural) => Shape::Sl2(1),
        (2, IrrepKind::Adjoint) => Shape::Sl2(2),
        (_, IrrepKind::Adjoint) => Shape::Adjoint(m),
        (_, IrrepKind::Natural) => Shape::Natural(m),
        (_, IrrepKind::Sl2Irrep(_)) => {
            return Err(CatalogError::Unsupported(format!("{kind} over sl{m}")))
        }
    })
}

fn shapes(g_parts: &[SimpleType], v_parts: &[ModulePart]) -> Result<Vec<Shape>, CatalogError> {
    if g_parts.is_empty() {
        return Err(CatalogError::Unsupported("no simple summands".into()));
    }
    for g in g_parts {
        let SimpleType::Sl(m) = *g;
        if m < 2 {
            return Err(CatalogError::Unsupported(format!("sl{m}")));
        }
    }
    v_parts
        .iter()
        .map(|p| {
            let g = g_parts.get(p.summand).ok_or_else(|| {
                CatalogError::Unsupported(format!(
                    "module part over summand {} of {}",
                    p.summand,
                    g_parts.len()
                ))
            })?;
            shape(*g, p.kind)
        })
        .collect()
}

/// `dim Der_δ(g, V)` as predicted for semisimple `g`: each module part
/// contributes independently, trivial parts never contribute, and a
/// nontrivial part contributes its dimension at `δ = 1`, `n + 3` at
/// `δ = −2/n` and `n − 1` at `δ = 2/(n+2)` when it is `V(n)` over sl2, and
/// `1` at `δ = 1/2` when it is an adjoint module. For `V(2)` over sl2 the
/// last two coincide and are counted once.
pub fn theorem_dimension(
    g_parts: &[SimpleType],
    v_parts: &[ModulePart],
    delta: &Rational,
) -> Result<usize, CatalogError> {
    let shapes = shapes(g_parts, v_parts)?;
    let one = Rational::one();
    let half = rat(1, 2);
    let mut total = 0;
    for s in shapes {
        total += match s {
            Shape::Trivial => 0,
            Shape::Sl2(n) if *delta == one => (n + 1) as usize,
            Shape::Natural(m) if *delta == one => m,
            Shape::Adjoint(m) if *delta == one => m * m - 1,
            Shape::Sl2(n) if *delta == rat(-2, n) => (n + 3) as usize,
            Shape::Sl2(n) if n >= 2 && *delta == rat(2, n + 2) => (n - 1) as usize,
            Shape::Adjoint(_) if *delta == half => 1,
            _ => 0,
        };
    }
    Ok(total)
}

fn simple_algebra(g: SimpleType) -> Result<LieAlgebra, CatalogError> {
    let SimpleType::Sl(m) = g;
    Ok(if m == 2 { sl2() } else { sl_n(m)?.0 })
}

fn local_module(
    g: SimpleType,
    algebra: &LieAlgebra,
    kind: IrrepKind,
) -> Result<Representation, CatalogError> {
    let SimpleType::Sl(m) = g;
    Ok(match (m, kind) {
        (_, IrrepKind::Trivial(d)) => trivial_module(algebra, d),
        (2, IrrepKind::Sl2Irrep(n)) => sl2_module(n as i64)?,
        (2, IrrepKind::Natural) => sl2_module(1)?,
        (_, IrrepKind::Natural) => sl_n(m)?.1,
        (_, IrrepKind::Adjoint) => adjoint_module(algebra),
        (_, IrrepKind::Sl2Irrep(_)) => {
            return Err(CatalogError::Unsupported(format!("{kind} over sl{m}")))
        }
    })
}

/// Builds `g = g_1 ⊕ … ⊕ g_k` and `V = ⊕ parts`, each part realised as a
/// tensor product with one-dimensional trivial factors on the other
/// summands. sl2 uses the basis `(e−, h, e+)`, sl(m) for `m ≥ 3` the
/// elementary basis of [`sl_n`].
pub fn realize(
    g_parts: &[SimpleType],
    v_parts: &[ModulePart],
) -> Result<(LieAlgebra, Representation), CatalogError> {
    shapes(g_parts, v_parts)?;
    let simple: Vec<LieAlgebra> = g_parts
        .iter()
        .map(|g| simple_algebra(*g))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&LieAlgebra> = simple.iter().collect();
    let algebra = direct_sum_algebras(&refs)?;
    let ones: Vec<Representation> = simple.iter().map(|a| trivial_module(a, 1)).collect();
    let mut parts = Vec::with_capacity(v_parts.len());
    for p in v_parts {
        let local = local_module(g_parts[p.summand], &simple[p.summand], p.kind)?;
        let factors: Vec<&Representation> = (0..simple.len())
            .map(|j| if j == p.summand { &local } else { &ones[j] })
            .collect();
        parts.push(tensor_modules(&factors)?);
    }
    let module = if parts.is_empty() {
        trivial_module(&algebra, 0)
    } else {
        direct_sum_modules(&parts.iter().collect::<Vec<_>>())?
    };
    Ok((algebra, module))
}

/// `V(2) → sl2` coordinates: `v0 ↦ e+`, `v1 ↦ −h`, `v2 ↦ −e−`.
fn v2_to_adjoint() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 1], &[0, -1, 0], &[-1, 0, 0]])
}

fn sl2_case(n: i64, delta: &Rational) -> Option<CaseTag> {
    if delta.is_one() {
        Some(CaseTag::DeltaOne)
    } else if *delta == rat(-2, n) {
        Some(CaseTag::MinusTwoOverN)
    } else if n >= 2 && *delta == rat(2, n + 2) {
        Some(CaseTag::TwoOverNPlusTwo)
    } else {
        None
    }
}

/// Inner maps `x ↦ x•v_m` of a module, one per basis vector.
fn inner_maps(module: &Representation) -> Vec<Matrix> {
    let (n, d) = (module.algebra().dim(), module.dim());
    (0..d)
        .map(|m| {
            let mut map = Matrix::zeros(n, d);
            for a in 0..n {
                for i in 0..d {
                    map[(a, i)] = module.action(a)[(i, m)].clone();
                }
            }
            map
        })
        .collect()
}

/// A spanning set of `Der_δ(g, V)` assembled from the closed-form families,
/// in the coordinates of [`realize`]. Each map is `dim g × dim V`.
pub fn expected_basis(
    g_parts: &[SimpleType],
    v_parts: &[ModulePart],
    delta: &Rational,
) -> Result<Vec<Matrix>, CatalogError> {
    let shapes = shapes(g_parts, v_parts)?;
    let simple: Vec<LieAlgebra> = g_parts
        .iter()
        .map(|g| simple_algebra(*g))
        .collect::<Result<_, _>>()?;
    let alg_offset: Vec<usize> = simple
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.dim();
            Some(o)
        })
        .collect();
    let total_alg: usize = simple.iter().map(LieAlgebra::dim).sum();
    let mut locals = Vec::new();
    for (p, s) in v_parts.iter().zip(&shapes) {
        let g = &simple[p.summand];
        let module = local_module(g_parts[p.summand], g, p.kind)?;
        let maps: Vec<Matrix> = match *s {
            Shape::Trivial => Vec::new(),
            _ if delta.is_one() => inner_maps(&module),
            Shape::Sl2(n) => {
                let tag = sl2_case(n, delta);
                let mut maps = match tag {
                    Some(tag) => ExpectedFamily::new(n, tag)?
                        .basis()
                        .into_iter()
                        .map(|m| m.map)
                        .collect(),
                    None => Vec::new(),
                };
                if p.kind == IrrepKind::Adjoint {
                    let phi = v2_to_adjoint();
                    maps = maps.iter().map(|m| m * &phi).collect();
                }
                maps
            }
            Shape::Adjoint(_) if *delta == rat(1, 2) => vec![Matrix::identity(g.dim())],
            Shape::Adjoint(_) | Shape::Natural(_) => Vec::new(),
        };
        locals.push((p.summand, module.dim(), maps));
    }
    let total_mod: usize = locals.iter().map(|(_, d, _)| d).sum();
    let mut out = Vec::new();
    let mut mod_offset = 0;
    for (summand, dim, maps) in locals {
        for local in maps {
            let mut map = Matrix::zeros(total_alg, total_mod);
            for a in 0..local.rows() {
                for i in 0..local.cols() {
                    let c = &local[(a, i)];
                    if !c.is_zero() {
                        map[(alg_offset[summand] + a, mod_offset + i)] = c.clone();
                    }
                }
            }
            out.push(map);
        }
        mod_offset += dim;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (Vec<SimpleType>, Vec<ModulePart>) {
        (
            vec![SimpleType::Sl(2), SimpleType::Sl(2)],
            vec![
                ModulePart::new(0, IrrepKind::Sl2Irrep(1)),
                ModulePart::new(1, IrrepKind::Sl2Irrep(2)),
            ],
        )
    }

    #[test]
    fn sl2_pair_dimensions() {
        let (g, v) = example();
        let dim = |d: Rational| theorem_dimension(&g, &v, &d).unwrap();
        assert_eq!(dim(rat(1, 1)), 5);
        assert_eq!(dim(rat(-2, 1)), 4);
        assert_eq!(dim(rat(-1, 1)), 5);
        assert_eq!(dim(rat(1, 2)), 1);
        assert_eq!(dim(rat(3, 1)), 0);
        assert_eq!(dim(rat(0, 1)), 0);
    }

    #[test]
    fn expected_basis_has_predicted_size() {
        let (g, v) = example();
        for d in [
            rat(1, 1),
            rat(-2, 1),
            rat(-1, 1),
            rat(1, 2),
            rat(3, 1),
            rat(2, 5),
        ] {
            let b = expected_basis(&g, &v, &d).unwrap();
            assert_eq!(b.len(), theorem_dimension(&g, &v, &d).unwrap(), "δ = {d}");
            assert!(b.iter().all(|m| m.shape() == (6, 5)));
        }
    }

    #[test]
    fn realize_shapes() {
        let (g, v) = example();
        let (alg, module) = realize(&g, &v).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(module.dim(), 5);
        assert_eq!(alg.summands().len(), 2);
        let (alg, module) = realize(&[SimpleType::Sl(3)], &[]).unwrap();
        assert_eq!((alg.dim(), module.dim()), (8, 0));
    }

    #[test]
    fn sl_m_natural_and_adjoint() {
        let g = [SimpleType::Sl(3)];
        let nat = [ModulePart::new(0, IrrepKind::Natural)];
        let adj = [ModulePart::new(0, IrrepKind::Adjoint)];
        assert_eq!(theorem_dimension(&g, &nat, &rat(1, 1)).unwrap(), 3);
        assert_eq!(theorem_dimension(&g, &nat, &rat(1, 2)).unwrap(), 0);
        assert_eq!(theorem_dimension(&g, &adj, &rat(1, 1)).unwrap(), 8);
        assert_eq!(theorem_dimension(&g, &adj, &rat(1, 2)).unwrap(), 1);
        assert_eq!(theorem_dimension(&g, &adj, &rat(-1, 1)).unwrap(), 0);
    }

    #[test]
    fn unsupported_descriptors() {
        let g = [SimpleType::Sl(3)];
        let bad = [ModulePart::new(0, IrrepKind::Sl2Irrep(1))];
        assert!(matches!(
            theorem_dimension(&g, &bad, &rat(1, 1)),
            Err(CatalogError::Unsupported(_))
        ));
        let out = [ModulePart::new(1, IrrepKind::Natural)];
        assert!(theorem_dimension(&g, &out, &rat(1, 1)).is_err());
        assert!(theorem_dimension(&[SimpleType::Sl(1)], &[], &rat(1, 1)).is_err());
        assert!(theorem_dimension(&[], &[], &rat(1, 1)).is_err());
    }
}
