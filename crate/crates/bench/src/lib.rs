//! Fixtures shared by the benchmarks.

use deltaderiv::catalog::{realize, IrrepKind, ModulePart, SimpleType};
use deltaderiv::{LieAlgebra, Representation};

pub struct Fixture {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub module: Representation,
}

fn fixture(name: &'static str, g: &[SimpleType], v: &[ModulePart]) -> Fixture {
    let (algebra, module) = realize(g, v).expect("catalog descriptors are valid");
    Fixture {
        name,
        algebra,
        module,
    }
}

pub fn sl2_irrep(n: u32) -> Fixture {
    let name: &'static str = Box::leak(format!("sl2 V({n})").into_boxed_str());
    fixture(
        name,
        &[SimpleType::Sl(2)],
        &[ModulePart::new(0, IrrepKind::Sl2Irrep(n))],
    )
}

pub fn sl3_adjoint() -> Fixture {
    fixture(
        "sl3 adjoint",
        &[SimpleType::Sl(3)],
        &[ModulePart::new(0, IrrepKind::Adjoint)],
    )
}

pub fn sl2_pair() -> Fixture {
    fixture(
        "sl2 o+ sl2 V(1)(x)V(0) o+ V(0)(x)V(2)",
        &[SimpleType::Sl(2), SimpleType::Sl(2)],
        &[
            ModulePart::new(0, IrrepKind::Sl2Irrep(1)),
            ModulePart::new(1, IrrepKind::Sl2Irrep(2)),
        ],
    )
}
