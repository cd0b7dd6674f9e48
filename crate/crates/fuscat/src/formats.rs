//! JSON file formats.
//!
//! All exact values round-trip losslessly:
//!
//! - cyclotomic number: `{"conductor": n, "coeffs": [["p","q"], ...]}` with
//!   rationals as decimal-string numerator/denominator pairs;
//! - group: `{"order": n, "table": [[...], ...]}` (Cayley table, identity
//!   at index 0);
//! - cocycle: `{"group": <builtin name or path>, "modulus": m, "exponents":
//!   [...]}` with the flat table indexed `a·|G|² + b·|G| + c`;
//! - modular data: `{"rank": r, "dual": [...], "twists": [{"num": p,
//!   "den": q}, ...], "dims": [...], "global_dim": ..., "s_matrix":
//!   optional, "fusion": optional flat `N^k_{ij}` at `(i·r + j)·r + k`,
//!   "labels": optional}`.
//!
//! A cocycle file's `"group"` string is first tried as a builtin name
//! (`Z<N>`, `Z<N>xZ<M>`, `S3`, `S4`, `D<N>`); otherwise it is read as a
//! path to a group file, resolved relative to the cocycle file's directory.

use std::fs;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use fuscat_core::cocycle::Cocycle3;
use fuscat_core::cyclo::{Cyclotomic, Rational, MAX_CONDUCTOR};
use fuscat_core::grp::FiniteGroup;
use fuscat_core::mtc::{ModularData, Twist};

use crate::inputs::builtin_group;

/// Errors from reading or decoding the JSON formats.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("'{0}' is not a decimal integer")]
    BadInteger(String),
    #[error("a rational coefficient has denominator zero")]
    ZeroDenominator,
    #[error("{0}")]
    Invalid(String),
}

fn invalid(err: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid(err.to_string())
}

/// Serialized cyclotomic number.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CyclotomicJson {
    pub conductor: u64,
    pub coeffs: Vec<(String, String)>,
}

impl CyclotomicJson {
    /// Encode a value (canonical coefficients, numerator/denominator strings).
    pub fn encode(value: &Cyclotomic) -> Self {
        CyclotomicJson {
            conductor: value.conductor(),
            coeffs: value
                .coeffs()
                .iter()
                .map(|q| (q.numer().to_string(), q.denom().to_string()))
                .collect(),
        }
    }

    /// Decode back to an exact value.
    ///
    /// # Errors
    ///
    /// Unparsable or zero-denominator rationals, conductor 0 or out of
    /// range, or more coefficients than the conductor allows.
    pub fn decode(&self) -> Result<Cyclotomic, FormatError> {
        if self.conductor == 0 || self.conductor > MAX_CONDUCTOR {
            return Err(FormatError::Invalid(format!(
                "conductor {} out of range 1..={MAX_CONDUCTOR}",
                self.conductor
            )));
        }
        if self.coeffs.len() > self.conductor as usize {
            return Err(FormatError::Invalid(format!(
                "{} coefficients exceed conductor {}",
                self.coeffs.len(),
                self.conductor
            )));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (p, q) in &self.coeffs {
            let numer: num_bigint::BigInt =
                p.parse().map_err(|_| FormatError::BadInteger(p.clone()))?;
            let denom: num_bigint::BigInt =
                q.parse().map_err(|_| FormatError::BadInteger(q.clone()))?;
            if denom.is_zero() {
                return Err(FormatError::ZeroDenominator);
            }
            coeffs.push(Rational::new(numer, denom));
        }
        Cyclotomic::from_coeffs(self.conductor, coeffs).map_err(invalid)
    }
}

/// Serialized finite group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    /// Encode a group as its Cayley table.
    pub fn encode(group: &FiniteGroup) -> Self {
        GroupJson { order: group.order(), table: group.table_rows() }
    }

    /// Decode and re-verify the group axioms.
    ///
    /// # Errors
    ///
    /// Shape mismatch or a group-axiom violation (reported with witnesses).
    pub fn decode(&self) -> Result<FiniteGroup, FormatError> {
        if self.table.len() != self.order {
            return Err(FormatError::Invalid(format!(
                "table has {} rows, expected {}",
                self.table.len(),
                self.order
            )));
        }
        FiniteGroup::from_table(&self.table).map_err(invalid)
    }
}

/// Read a group file.
///
/// # Errors
///
/// IO, JSON shape, or group-axiom failures.
pub fn load_group(path: &Path) -> Result<FiniteGroup, FormatError> {
    let json: GroupJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    json.decode()
}

/// Serialized 3-cocycle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    /// Builtin group name or path to a group file (relative paths are
    /// resolved against the cocycle file's directory).
    pub group: String,
    pub modulus: u64,
    pub exponents: Vec<u64>,
}

impl CocycleJson {
    /// Encode a cocycle with an inline group reference string.
    pub fn encode(omega: &Cocycle3, group_ref: String) -> Self {
        CocycleJson {
            group: group_ref,
            modulus: omega.modulus(),
            exponents: omega.exponents().to_vec(),
        }
    }
}

/// Read a cocycle file and validate the cocycle condition.
///
/// # Errors
///
/// IO/JSON failures, unresolvable group reference, or an invalid table
/// (reported with the offending tuple).
pub fn load_cocycle(path: &Path) -> Result<Cocycle3, FormatError> {
    let json: CocycleJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    let group = match builtin_group(&json.group) {
        Some(group) => group,
        None => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            load_group(&base.join(&json.group))?
        }
    };
    Cocycle3::new(&group, json.modulus, json.exponents).map_err(invalid)
}

/// Serialized twist (rotation number p/q, i.e. the value exp(2πi·p/q)).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TwistJson {
    pub num: i64,
    pub den: i64,
}

/// Serialized modular data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModularJson {
    pub rank: usize,
    pub dual: Vec<usize>,
    pub twists: Vec<TwistJson>,
    pub dims: Vec<CyclotomicJson>,
    pub global_dim: CyclotomicJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_matrix: Option<Vec<Vec<CyclotomicJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fusion: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ModularJson {
    /// Encode a validated bundle.
    pub fn encode(data: &ModularData) -> Self {
        let r = data.rank();
        ModularJson {
            rank: r,
            dual: (0..r).map(|i| data.dual(i)).collect(),
            twists: (0..r)
                .map(|i| TwistJson { num: data.twist(i).numer(), den: data.twist(i).denom() })
                .collect(),
            dims: (0..r).map(|i| CyclotomicJson::encode(data.dim(i))).collect(),
            global_dim: CyclotomicJson::encode(data.global_dim()),
            s_matrix: data.s_matrix().map(|s| {
                s.iter().map(|row| row.iter().map(CyclotomicJson::encode).collect()).collect()
            }),
            fusion: Some(
                (0..r)
                    .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
                    .map(|(i, j, k)| data.verlinde(i, j, k))
                    .collect(),
            ),
            labels: Some(data.labels().to_vec()),
        }
    }

    /// Decode and run the full modular-data validation.
    ///
    /// # Errors
    ///
    /// Any schema or modular-axiom failure, with witnesses.
    pub fn decode(&self) -> Result<ModularData, FormatError> {
        if self.rank != self.dual.len() {
            return Err(FormatError::Invalid(format!(
                "rank {} disagrees with dual map length {}",
                self.rank,
                self.dual.len()
            )));
        }
        let labels = match &self.labels {
            Some(labels) => labels.clone(),
            None => (0..self.rank).map(|i| format!("X{i}")).collect(),
        };
        let twists = self
            .twists
            .iter()
            .map(|t| Twist::new(t.num, t.den).map_err(invalid))
            .collect::<Result<Vec<_>, _>>()?;
        let dims =
            self.dims.iter().map(CyclotomicJson::decode).collect::<Result<Vec<_>, _>>()?;
        let s = match &self.s_matrix {
            Some(rows) => Some(
                rows.iter()
                    .map(|row| row.iter().map(CyclotomicJson::decode).collect())
                    .collect::<Result<Vec<Vec<_>>, _>>()?,
            ),
            None => None,
        };
        ModularData::new(
            labels,
            self.dual.clone(),
            twists,
            dims,
            self.global_dim.decode()?,
            s,
            self.fusion.clone(),
        )
        .map_err(invalid)
    }
}

/// Read a modular-data file.
///
/// # Errors
///
/// IO/JSON failures or modular-axiom violations.
pub fn load_modular(path: &Path) -> Result<ModularData, FormatError> {
    let json: ModularJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    json.decode()
}
