//! Credulous and skeptical acceptance across all seven semantics.
//!
//! Queries are answered by full enumeration plus a membership scan; the
//! acceptance problems sit at the second level of the polynomial hierarchy,
//! so a dedicated decision procedure would buy nothing at this scale.

use crate::af::{Framework, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::semantics::{enumerate_with_cap, ExtensionSet, SemanticsId};
use crate::stabilizer::paracoherent_extensions_with_cap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Credulous,
    Skeptical,
}

/// An acceptance question about one argument.
#[derive(Debug, Clone)]
pub struct Query {
    pub semantics: SemanticsId,
    pub task: Task,
    pub argument: String,
}

/// Enumerates the extensions of `f` under any of the seven semantics,
/// dispatching `para` to the stabilizer solver.
pub fn extensions(f: &Framework, sem: SemanticsId) -> Result<ExtensionSet> {
    extensions_with_cap(f, sem, DEFAULT_ENUM_CAP)
}

pub fn extensions_with_cap(f: &Framework, sem: SemanticsId, cap: usize) -> Result<ExtensionSet> {
    match sem {
        SemanticsId::Para => paracoherent_extensions_with_cap(f, cap),
        other => enumerate_with_cap(f, other, cap),
    }
}

fn arg_index(f: &Framework, arg: &str) -> Result<usize> {
    f.arg_index(arg)
        .ok_or_else(|| Error::UnknownArgument(arg.to_string()))
}

/// True iff `arg` belongs to at least one extension. False when there are
/// no extensions.
pub fn credulous(f: &Framework, sem: SemanticsId, arg: &str) -> Result<bool> {
    credulous_with_cap(f, sem, arg, DEFAULT_ENUM_CAP)
}

pub fn credulous_with_cap(f: &Framework, sem: SemanticsId, arg: &str, cap: usize) -> Result<bool> {
    let i = arg_index(f, arg)?;
    Ok(extensions_with_cap(f, sem, cap)?
        .iter()
        .any(|e| e.contains(i)))
}

/// True iff `arg` belongs to every extension; vacuously true when there
/// are none (only the stable semantics can be empty here).
pub fn skeptical(f: &Framework, sem: SemanticsId, arg: &str) -> Result<bool> {
    skeptical_with_cap(f, sem, arg, DEFAULT_ENUM_CAP)
}

pub fn skeptical_with_cap(f: &Framework, sem: SemanticsId, arg: &str, cap: usize) -> Result<bool> {
    let i = arg_index(f, arg)?;
    Ok(extensions_with_cap(f, sem, cap)?
        .iter()
        .all(|e| e.contains(i)))
}

pub fn answer(f: &Framework, q: &Query) -> Result<bool> {
    match q.task {
        Task::Credulous => credulous(f, q.semantics, &q.argument),
        Task::Skeptical => skeptical(f, q.semantics, &q.argument),
    }
}
