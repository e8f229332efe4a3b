//! JSON interchange for user-supplied algebras and modules.
//!
//! ```json
//! { "dim": 3, "brackets": [[1, 0, 0, "-2"], …], "labels": ["e-", "h", "e+"] }
//! { "dim": 2, "action": [ [["0","0"],["1","0"]], … ] }
//! ```

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LieError, Representation, Validation};
use crate::arith::parse_rational;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSchema {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSchema {
    pub dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
}

impl AlgebraSchema {
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        Self {
            dim: algebra.dim(),
            brackets: algebra
                .structure_constants()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            labels: Some(algebra.labels().to_vec()),
        }
    }

    pub fn build(&self, validation: Validation) -> Result<LieAlgebra, LieError> {
        let entries = self
            .brackets
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rational(c)?)))
            .collect::<Result<Vec<_>, LieError>>()?;
        LieAlgebra::build(self.dim, entries, self.labels.clone(), validation)
    }
}

impl ModuleSchema {
    pub fn from_module(module: &Representation) -> Self {
        Self {
            dim: module.dim(),
            action: module
                .actions()
                .iter()
                .map(|m| {
                    m.to_rows()
                        .into_iter()
                        .map(|r| r.iter().map(ToString::to_string).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn build(
        &self,
        algebra: &LieAlgebra,
        validation: Validation,
    ) -> Result<Representation, LieError> {
        let mut action = Vec::with_capacity(self.action.len());
        for (index, rows) in self.action.iter().enumerate() {
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(LieError::ActionShape {
                    index,
                    rows: rows.len(),
                    cols: rows.first().map_or(0, Vec::len),
                    dim: self.dim,
                });
            }
            let parsed = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            action.push(if self.dim == 0 {
                Matrix::zeros(0, 0)
            } else {
                Matrix::from_rows(parsed)
            });
        }
        Representation::build(algebra.clone(), self.dim, action, None, validation)
    }
}
