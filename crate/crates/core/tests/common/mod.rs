//! Shared fixtures and independent oracles for the integration suites.
//!
//! Nothing here goes through the crate's elimination code: the oracle
//! matrix is built straight from the defining identity and reduced with
//! schoolbook Gauss-Jordan over fractions.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use deltaderiv::catalog::{realize, IrrepKind, ModulePart, SimpleType};
use deltaderiv::lie::{adjoint_module, sl2, sl2_module, tensor_modules, trivial_module};
use deltaderiv::{
    direct_sum_modules, inner_derivations, invariants, rat, scan, solve, LieAlgebra, Matrix,
    Rational, Representation, ScanOptions,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Input {
    pub name: String,
    pub algebra: LieAlgebra,
    pub module: Representation,
    pub semisimple: bool,
    /// Every algebra summand is sl2 with `h` at index 1 of each summand.
    pub sl2_only: bool,
}

fn input(name: &str, algebra: LieAlgebra, module: Representation, semisimple: bool) -> Input {
    let sl2_only =
        semisimple && algebra.dim().is_multiple_of(3) && algebra.labels()[1].starts_with('h');
    Input {
        name: name.to_string(),
        algebra,
        module,
        semisimple,
        sl2_only,
    }
}

fn from_parts(name: &str, g: &[SimpleType], v: &[ModulePart]) -> Input {
    let (a, m) = realize(g, v).unwrap();
    input(name, a, m, true)
}

/// `[x, y] = y`, acting on a line by `x ↦ 1`, `y ↦ 0`.
pub fn two_dim_nonabelian() -> (LieAlgebra, Representation) {
    let b = LieAlgebra::from_structure_constants(2, [(0, 1, 1, rat(1, 1))]).unwrap();
    let v = Representation::new(
        b.clone(),
        1,
        vec![Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[0]])],
    )
    .unwrap();
    (b, v)
}

/// Heisenberg algebra `[x, y] = z` on its 2-dim module `x ↦ E12`.
pub fn heisenberg() -> (LieAlgebra, Representation) {
    let h = LieAlgebra::from_structure_constants(3, [(0, 1, 2, rat(1, 1))]).unwrap();
    let e12 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let v = Representation::new(
        h.clone(),
        2,
        vec![e12, Matrix::zeros(2, 2), Matrix::zeros(2, 2)],
    )
    .unwrap();
    (h, v)
}

/// The inputs every property runs over.
pub fn suite() -> Vec<Input> {
    let s = sl2();
    let mut out = Vec::new();
    for n in 0..=8 {
        out.push(input(
            &format!("sl2 V({n})"),
            s.clone(),
            sl2_module(n).unwrap(),
            true,
        ));
    }
    out.push(input("sl2 adjoint", s.clone(), adjoint_module(&s), true));
    out.push(input(
        "sl2 trivial(2)",
        s.clone(),
        trivial_module(&s, 2),
        true,
    ));
    let v1 = sl2_module(1).unwrap();
    let v2 = sl2_module(2).unwrap();
    out.push(input(
        "sl2 V(1) o+ V(2)",
        s.clone(),
        direct_sum_modules(&[&v1, &v2]).unwrap(),
        true,
    ));
    out.push(input(
        "sl2 o+ sl2 V(1) (x) V(1)",
        deltaderiv::direct_sum_algebras(&[&s, &s]).unwrap(),
        tensor_modules(&[&v1, &v1]).unwrap(),
        true,
    ));
    let sl2x2 = [SimpleType::Sl(2), SimpleType::Sl(2)];
    out.push(from_parts(
        "sl2 o+ sl2 V(1)(x)V(0) o+ V(0)(x)V(2)",
        &sl2x2,
        &[
            ModulePart::new(0, IrrepKind::Sl2Irrep(1)),
            ModulePart::new(1, IrrepKind::Sl2Irrep(2)),
        ],
    ));
    out.push(from_parts(
        "sl3 natural",
        &[SimpleType::Sl(3)],
        &[ModulePart::new(0, IrrepKind::Natural)],
    ));
    out.push(from_parts(
        "sl3 adjoint",
        &[SimpleType::Sl(3)],
        &[ModulePart::new(0, IrrepKind::Adjoint)],
    ));
    let (b, bv) = two_dim_nonabelian();
    out.push(input("b2 on a line", b, bv, false));
    let (h, hv) = heisenberg();
    out.push(input("heisenberg on K^2", h, hv, false));
    out
}

/// `Σ_k c_ij^k D(e_k) + δ e_j•D(e_i) − δ e_i•D(e_j)` for every pair `i < j`,
/// evaluated entry by entry.
pub fn residual_is_zero(
    map: &Matrix,
    algebra: &LieAlgebra,
    module: &Representation,
    delta: &Rational,
) -> bool {
    let (n, dv) = (algebra.dim(), module.dim());
    for i in 0..n {
        for j in i + 1..n {
            for m in 0..dv {
                let mut r = Rational::zero();
                for (k, c) in algebra.bracket_basis(i, j) {
                    r += c * &map[(k, m)];
                }
                for p in 0..dv {
                    r += delta * &module.action(j)[(m, p)] * &map[(i, p)];
                    r -= delta * &module.action(i)[(m, p)] * &map[(j, p)];
                }
                if !r.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The specialised system, built directly from the identity.
pub fn oracle_matrix(
    algebra: &LieAlgebra,
    module: &Representation,
    delta: &Rational,
) -> Vec<Vec<Rational>> {
    let (n, dv) = (algebra.dim(), module.dim());
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket: BTreeMap<usize, Rational> =
                algebra.bracket_basis(i, j).into_iter().collect();
            for m in 0..dv {
                let mut row = vec![Rational::zero(); n * dv];
                for (k, c) in &bracket {
                    row[k * dv + m] += c;
                }
                for p in 0..dv {
                    row[i * dv + p] += delta * &module.action(j)[(m, p)];
                    row[j * dv + p] -= delta * &module.action(i)[(m, p)];
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Plain Gauss-Jordan over fractions.
pub fn naive_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn naive_dimension(algebra: &LieAlgebra, module: &Representation, delta: &Rational) -> usize {
    let cols = algebra.dim() * module.dim();
    cols - naive_rank(oracle_matrix(algebra, module, delta))
}

pub fn rank_of_maps(maps: &[Matrix]) -> usize {
    naive_rank(maps.iter().map(|m| m.as_flat().to_vec()).collect())
}

/// Spans agree iff each family has the rank of their union.
pub fn same_span(a: &[Matrix], b: &[Matrix]) -> bool {
    let union: Vec<Matrix> = a.iter().chain(b).cloned().collect();
    let r = rank_of_maps(&union);
    rank_of_maps(a) == r && rank_of_maps(b) == r
}

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// δ values probed for each input: its scan findings plus a few fixed ones.
pub fn probe_deltas(inp: &Input) -> Vec<Rational> {
    let report = scan(&inp.algebra, &inp.module, ScanOptions::default()).unwrap();
    let mut ds: Vec<Rational> = report.findings.keys().cloned().collect();
    for d in [rat(1, 1), rat(-1, 1), rat(1, 2), rat(7, 3)] {
        if !ds.contains(&d) {
            ds.push(d);
        }
    }
    ds
}

/// Every returned basis element satisfies the identity.
pub fn check_residuals(inputs: &[Input]) -> Check {
    for inp in inputs {
        for d in probe_deltas(inp) {
            let space = solve(&inp.algebra, &inp.module, &d, None).map_err(|e| e.to_string())?;
            for (k, m) in space.basis.iter().enumerate() {
                ensure(residual_is_zero(m, &inp.algebra, &inp.module, &d), || {
                    format!("{} δ={d}: basis element {k} has nonzero residual", inp.name)
                })?;
            }
        }
    }
    Ok(())
}

/// `dim Der(V1 ⊕ V2) = dim Der(V1) + dim Der(V2)` for sl2 and `V(0)..V(4)`.
pub fn check_direct_sum_additivity() -> Check {
    let s = sl2();
    let mods: Vec<Representation> = (0..=4).map(|n| sl2_module(n).unwrap()).collect();
    let deltas = [rat(1, 1), rat(-1, 1), rat(1, 2), rat(-2, 3)];
    for d in &deltas {
        let single: Vec<usize> = mods
            .iter()
            .map(|m| solve(&s, m, d, None).unwrap().dim())
            .collect();
        for a in 0..mods.len() {
            for b in a..mods.len() {
                let sum = direct_sum_modules(&[&mods[a], &mods[b]]).unwrap();
                let dim = solve(&s, &sum, d, None).unwrap().dim();
                ensure(dim == single[a] + single[b], || {
                    format!(
                        "V({a}) o+ V({b}) at δ={d}: {dim} != {} + {}",
                        single[a], single[b]
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// `dim Der(L1 ⊕ L2, V1 ⊗ V2) = dim Der(L1,V1)·dim V2^L2 + dim V1^L1·dim Der(L2,V2)`.
pub fn check_tensor_formula() -> Check {
    let s = sl2();
    let mods: Vec<Representation> = (0..=2).map(|n| sl2_module(n).unwrap()).collect();
    let deltas = [rat(-2, 1), rat(-1, 1), rat(1, 2), rat(2, 5)];
    for d in &deltas {
        for v1 in &mods {
            for v2 in &mods {
                let t = tensor_modules(&[v1, v2]).unwrap();
                let lhs = solve(t.algebra(), &t, d, None).unwrap().dim();
                let rhs = solve(&s, v1, d, None).unwrap().dim() * invariants(v2).len()
                    + invariants(v1).len() * solve(&s, v2, d, None).unwrap().dim();
                ensure(lhs == rhs, || {
                    format!(
                        "V({}) (x) V({}) at δ={d}: {lhs} != {rhs}",
                        v1.dim() - 1,
                        v2.dim() - 1
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// Graded and ungraded solves give the identical reduced basis.
pub fn check_graded_equals_ungraded(inputs: &[Input]) -> Check {
    for inp in inputs.iter().filter(|i| i.sl2_only) {
        for d in probe_deltas(inp) {
            let plain = solve(&inp.algebra, &inp.module, &d, None).map_err(|e| e.to_string())?;
            let graded =
                solve(&inp.algebra, &inp.module, &d, Some(1)).map_err(|e| e.to_string())?;
            ensure(plain.basis == graded.basis, || {
                format!("{} δ={d}: graded basis differs", inp.name)
            })?;
        }
    }
    Ok(())
}

/// Fraction-free kernel dimension equals schoolbook elimination dimension.
pub fn check_bareiss_vs_naive(inputs: &[Input]) -> Check {
    for inp in inputs {
        if inp.algebra.dim() * inp.module.dim() > 100 {
            continue;
        }
        for d in probe_deltas(inp).into_iter().chain([rat(0, 1), rat(-5, 7)]) {
            let fast = solve(&inp.algebra, &inp.module, &d, None)
                .map_err(|e| e.to_string())?
                .dim();
            let slow = naive_dimension(&inp.algebra, &inp.module, &d);
            ensure(fast == slow, || {
                format!("{} δ={d}: {fast} != naive {slow}", inp.name)
            })?;
        }
    }
    Ok(())
}

/// Random `δ = p/q` in `[−3, 3]` away from the findings have the generic
/// dimension, which is 0 for semisimple inputs. Reported values are
/// confirmed by an independent solve.
pub fn check_random_deltas(inputs: &[Input], seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for inp in inputs {
        let report = scan(
            &inp.algebra,
            &inp.module,
            ScanOptions { include_zero: true },
        )
        .map_err(|e| e.to_string())?;
        for (d, dim) in &report.findings {
            let got = naive_dimension(&inp.algebra, &inp.module, d);
            ensure(got == *dim, || {
                format!("{} δ={d}: reported {dim}, naive {got}", inp.name)
            })?;
        }
        let generic = report.generic_dimension();
        if inp.semisimple {
            ensure(generic == 0, || {
                format!("{}: generic dimension {generic}", inp.name)
            })?;
        }
        let mut tried = 0;
        while tried < 20 {
            let q: i64 = rng.gen_range(1..=12);
            let p: i64 = rng.gen_range(-3 * q..=3 * q);
            let d = rat(p, q);
            if report.findings.contains_key(&d) {
                continue;
            }
            tried += 1;
            let dim = solve(&inp.algebra, &inp.module, &d, None)
                .map_err(|e| e.to_string())?
                .dim();
            ensure(dim == generic, || {
                format!("{} δ={d}: dimension {dim}, expected {generic}", inp.name)
            })?;
        }
    }
    Ok(())
}

/// First Whitehead: 1-derivations are inner and `dim = dim V − dim V^g`.
pub fn check_whitehead(inputs: &[Input]) -> Check {
    for inp in inputs.iter().filter(|i| i.semisimple) {
        let one = rat(1, 1);
        let der = solve(&inp.algebra, &inp.module, &one, None).map_err(|e| e.to_string())?;
        let inner = inner_derivations(&inp.algebra, &inp.module).map_err(|e| e.to_string())?;
        ensure(same_span(&der.basis, &inner.basis), || {
            format!("{}: Der_1 != inner", inp.name)
        })?;
        let want = inp.module.dim() - invariants(&inp.module).len();
        ensure(der.dim() == want, || {
            format!("{}: dim Der_1 = {}, want {want}", inp.name, der.dim())
        })?;
    }
    Ok(())
}
