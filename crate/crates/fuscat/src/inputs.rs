//! Parsing of command-line object specifications.
//!
//! Groups: `Z<N>`, `Z<N>xZ<M>`, `S3`, `S4`, `D<N>` (dihedral of order 2N),
//! or `file:<path>` for a Cayley-table file.  Cocycles: `trivial` (the
//! default), `cyclic:<N>:<t>` for the standard generator family on Z/N
//! (modulus N²), or `file:<path>`.  Every group that materializes is held
//! to the `FUSCAT_MAX_GROUP_ORDER` resource guard (default 64).

use std::path::Path;

use fuscat_core::cocycle::Cocycle3;
use fuscat_core::grp::FiniteGroup;

use crate::formats::{self, FormatError};

/// Order guard applied to every materialized group.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 64;

/// Errors from specification parsing.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("unknown group spec '{0}' (expected Z<N>, Z<N>xZ<M>, S3, S4, D<N>, or file:<path>)")]
    UnknownGroup(String),
    #[error("unknown cocycle spec '{0}' (expected trivial, cyclic:<N>:<t>, or file:<path>)")]
    UnknownCocycle(String),
    #[error("cocycle '{spec}' lives on a different group than '{group}'")]
    GroupMismatch { spec: String, group: String },
    #[error("group order {order} exceeds FUSCAT_MAX_GROUP_ORDER={bound}")]
    OrderGuard { order: usize, bound: u64 },
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Current value of the resource guard.
pub fn max_group_order() -> u64 {
    std::env::var("FUSCAT_MAX_GROUP_ORDER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP_ORDER)
}

fn guard_order(order: usize) -> Result<(), InputError> {
    let bound = max_group_order();
    if order as u64 > bound {
        return Err(InputError::OrderGuard { order, bound });
    }
    Ok(())
}

/// Builtin group names: `Z<N>`, `Z<N>xZ<M>`, `S3`, `S4`, `D<N>`.
pub fn builtin_group(name: &str) -> Option<FiniteGroup> {
    match name {
        "S3" => return Some(FiniteGroup::symmetric(3)),
        "S4" => return Some(FiniteGroup::symmetric(4)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('D') {
        let n: usize = rest.parse().ok().filter(|&n| n >= 1)?;
        return Some(FiniteGroup::dihedral(n));
    }
    let rest = name.strip_prefix('Z')?;
    if let Some((left, right)) = rest.split_once('x') {
        let n: usize = left.parse().ok().filter(|&n| n >= 1)?;
        let m: usize = right.strip_prefix('Z')?.parse().ok().filter(|&m| m >= 1)?;
        return Some(FiniteGroup::cyclic(n).direct_product(&FiniteGroup::cyclic(m)));
    }
    let n: usize = rest.parse().ok().filter(|&n| n >= 1)?;
    Some(FiniteGroup::cyclic(n))
}

/// Resolve a group spec.
///
/// # Errors
///
/// Unknown name, unreadable/invalid file, or the order guard.
pub fn parse_group(spec: &str) -> Result<FiniteGroup, InputError> {
    let group = if let Some(path) = spec.strip_prefix("file:") {
        formats::load_group(Path::new(path))?
    } else {
        builtin_group(spec).ok_or_else(|| InputError::UnknownGroup(spec.into()))?
    };
    guard_order(group.order())?;
    Ok(group)
}

/// Resolve a cocycle spec against an already-parsed group; the cocycle's
/// group must carry the identical Cayley table.
///
/// # Errors
///
/// Unknown spec, invalid table, or a group mismatch.
pub fn parse_cocycle(
    spec: &str,
    group: &FiniteGroup,
    group_spec: &str,
) -> Result<Cocycle3, InputError> {
    let mismatch = |spec: &str| InputError::GroupMismatch {
        spec: spec.into(),
        group: group_spec.into(),
    };
    if spec == "trivial" {
        return Ok(Cocycle3::trivial(group, 1).expect("modulus 1 is always valid"));
    }
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        let parsed = rest.split_once(':').and_then(|(n, t)| {
            let n: usize = n.parse().ok().filter(|&n| n >= 1)?;
            let t: i64 = t.parse().ok()?;
            Some((n, t))
        });
        let (n, t) = parsed.ok_or_else(|| InputError::UnknownCocycle(spec.into()))?;
        let omega = Cocycle3::omega_t(n, t);
        if omega.group().table_rows() != group.table_rows() {
            return Err(mismatch(spec));
        }
        return Ok(omega);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let omega = formats::load_cocycle(Path::new(path))?;
        if omega.group().table_rows() != group.table_rows() {
            return Err(mismatch(spec));
        }
        return Ok(omega);
    }
    Err(InputError::UnknownCocycle(spec.into()))
}
