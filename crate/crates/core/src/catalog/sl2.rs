use std::fmt;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::arith::{rat, Rational};
use crate::lie::{SL2_E_MINUS, SL2_E_PLUS, SL2_H};
use crate::linalg::Matrix;

/// The exceptional values of `δ` for `sl2` acting on `V(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `δ = 1`: the inner derivations.
    DeltaOne,
    /// `δ = −2/n`, dimension `n + 3`.
    MinusTwoOverN,
    /// `δ = 2/(n+2)` for `n ≥ 2`, dimension `n − 1`.
    TwoOverNPlusTwo,
    /// `δ = 1/2` on the adjoint module `V(2)`: the identity.
    OneHalf,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [
        CaseTag::DeltaOne,
        CaseTag::MinusTwoOverN,
        CaseTag::TwoOverNPlusTwo,
        CaseTag::OneHalf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::DeltaOne => "delta_one",
            CaseTag::MinusTwoOverN => "minus_two_over_n",
            CaseTag::TwoOverNPlusTwo => "two_over_n_plus_two",
            CaseTag::OneHalf => "one_half",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One explicit basis map `sl2 → V(n)`, as a `3 × (n+1)` matrix whose row
/// `a` is `D(e_a)` in the basis `v_0 … v_n`.
///
/// `weight` uses index bookkeeping: `e−`, `h`, `e+` carry `1, 0, −1` and
/// `v_i` carries `i`, so a map sending `e_a` to `v_i` has weight
/// `w(e_a) − i`. The eigenvalue of `ad h` on the map is `−2·weight − n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedMap {
    pub map: Matrix,
    pub weight: i64,
}

impl ExpectedMap {
    /// Eigenvalue of the grading element `h` on this map.
    pub fn raw_weight(&self, n: i64) -> Rational {
        rat(-2 * self.weight - n, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedFamily {
    pub case_tag: CaseTag,
    pub n: i64,
    pub delta: Rational,
    pub expected_dim: usize,
}

impl ExpectedFamily {
    pub fn new(n: i64, case_tag: CaseTag) -> Result<Self, CatalogError> {
        let out_of_range = |reason| CatalogError::OutOfRange {
            case: case_tag,
            n,
            reason,
        };
        if n < 1 {
            return Err(out_of_range("requires n ≥ 1"));
        }
        let (delta, expected_dim) = match case_tag {
            CaseTag::DeltaOne => (rat(1, 1), n + 1),
            CaseTag::MinusTwoOverN => (rat(-2, n), n + 3),
            CaseTag::TwoOverNPlusTwo => {
                if n < 2 {
                    return Err(out_of_range("requires n ≥ 2"));
                }
                (rat(2, n + 2), n - 1)
            }
            CaseTag::OneHalf => {
                if n != 2 {
                    return Err(out_of_range("requires n = 2 (the adjoint module)"));
                }
                (rat(1, 2), 1)
            }
        };
        Ok(ExpectedFamily {
            case_tag,
            n,
            delta,
            expected_dim: expected_dim as usize,
        })
    }

    pub fn basis(&self) -> Vec<ExpectedMap> {
        let n = self.n;
        let maps: Vec<(Vec<Entry>, i64)> = match self.case_tag {
            CaseTag::DeltaOne => (0..=n).map(|i| (inner(n, i), -i)).collect(),
            CaseTag::MinusTwoOverN => {
                let mut out = vec![
                    (vec![(SL2_E_PLUS, n, 1)], -n - 1),
                    (vec![(SL2_H, n, 2), (SL2_E_PLUS, n - 1, 1)], -n),
                ];
                out.extend((1..n).map(|k| {
                    (
                        vec![
                            (SL2_E_MINUS, k + 1, -1),
                            (SL2_H, k, 2),
                            (SL2_E_PLUS, k - 1, 1),
                        ],
                        -k,
                    )
                }));
                out.push((vec![(SL2_E_MINUS, 1, -1), (SL2_H, 0, 2)], 0));
                out.push((vec![(SL2_E_MINUS, 0, 1)], 1));
                out
            }
            CaseTag::TwoOverNPlusTwo => (1..n)
                .map(|k| {
                    (
                        vec![
                            (SL2_E_MINUS, k + 1, k * (k + 1)),
                            (SL2_H, k, 2 * k * (n - k)),
                            (SL2_E_PLUS, k - 1, -(n - k) * (n - k + 1)),
                        ],
                        -k,
                    )
                })
                .collect(),
            // the identity through V(2) ≅ sl2: e− ↦ −v2, h ↦ −v1, e+ ↦ v0
            CaseTag::OneHalf => vec![(
                vec![(SL2_E_MINUS, 2, -1), (SL2_H, 1, -1), (SL2_E_PLUS, 0, 1)],
                -1,
            )],
        };
        maps.into_iter()
            .map(|(entries, weight)| {
                let mut map = Matrix::zeros(3, n as usize + 1);
                for (a, i, c) in entries {
                    map[(a, i as usize)] = rat(c, 1);
                }
                ExpectedMap { map, weight }
            })
            .collect()
    }
}

/// `(algebra index, module index, coefficient)`.
type Entry = (usize, i64, i64);

/// Entries of `x ↦ x•v_i` on `V(n)`.
fn inner(n: i64, i: i64) -> Vec<Entry> {
    let mut out = Vec::new();
    if i < n {
        out.push((SL2_E_MINUS, i + 1, i + 1));
    }
    if n != 2 * i {
        out.push((SL2_H, i, n - 2 * i));
    }
    if i > 0 {
        out.push((SL2_E_PLUS, i - 1, n - i + 1));
    }
    out
}

/// The explicit basis of `Der_δ(sl2, V(n))` for the given case.
pub fn expected_sl2_basis(n: i64, case_tag: CaseTag) -> Result<Vec<Matrix>, CatalogError> {
    let family = ExpectedFamily::new(n, case_tag)?;
    Ok(family.basis().into_iter().map(|m| m.map).collect())
}
