//! Exhaustive enumerators for the classical semantics: conflict-free,
//! admissible, complete, stable, semi-stable and stage extensions.
//!
//! Candidates are walked with a conflict-free prefix pruner; range
//! maximality is resolved by keeping an antichain of incomparable ranges.
//! Output order is part of the contract: extensions sorted by cardinality,
//! then lexicographically on their sorted member names.

use std::fmt;
use std::str::FromStr;

use crate::af::{for_each_conflict_free, ArgSet, Framework, MaskTables, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};

/// The seven semantics known to the solver. `Para` is resolved by the
/// stabilizer module; the others are resolved here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsId {
    Cf,
    Adm,
    Comp,
    Stb,
    Sem,
    Stage,
    Para,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 7] = [
        SemanticsId::Cf,
        SemanticsId::Adm,
        SemanticsId::Comp,
        SemanticsId::Stb,
        SemanticsId::Sem,
        SemanticsId::Stage,
        SemanticsId::Para,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SemanticsId::Cf => "cf",
            SemanticsId::Adm => "adm",
            SemanticsId::Comp => "com",
            SemanticsId::Stb => "stb",
            SemanticsId::Sem => "sem",
            SemanticsId::Stage => "stage",
            SemanticsId::Para => "para",
        }
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SemanticsId> {
        match s {
            "cf" => Ok(SemanticsId::Cf),
            "adm" => Ok(SemanticsId::Adm),
            "com" | "comp" => Ok(SemanticsId::Comp),
            "stb" => Ok(SemanticsId::Stb),
            "sem" => Ok(SemanticsId::Sem),
            "stage" => Ok(SemanticsId::Stage),
            "para" => Ok(SemanticsId::Para),
            other => Err(Error::Input(format!("unknown semantics `{other}`"))),
        }
    }
}

/// A duplicate-free, canonically ordered collection of extensions, all
/// bound to the same framework.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSet {
    extensions: Vec<ArgSet>,
}

impl ExtensionSet {
    /// Builds the set from one-word masks, sorting into canonical order.
    pub(crate) fn from_masks(f: &Framework, masks: impl IntoIterator<Item = u64>) -> ExtensionSet {
        let mut seen = std::collections::BTreeSet::new();
        let mut keyed: Vec<(usize, Vec<String>, ArgSet)> = masks
            .into_iter()
            .filter(|m| seen.insert(*m))
            .map(|m| {
                let set = f.set_from_word(m);
                let names = set.member_names(f).expect("set built from own framework");
                (set.len(), names, set)
            })
            .collect();
        keyed.sort();
        ExtensionSet {
            extensions: keyed.into_iter().map(|(_, _, s)| s).collect(),
        }
    }

    pub(crate) fn from_sets(f: &Framework, sets: impl IntoIterator<Item = ArgSet>) -> ExtensionSet {
        let mut seen = std::collections::BTreeSet::new();
        let mut keyed: Vec<(usize, Vec<String>, ArgSet)> = sets
            .into_iter()
            .filter(|s| seen.insert(s.clone()))
            .map(|s| {
                let names = s.member_names(f).expect("set built from own framework");
                (s.len(), names, s)
            })
            .collect();
        keyed.sort();
        ExtensionSet {
            extensions: keyed.into_iter().map(|(_, _, s)| s).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgSet> {
        self.extensions.iter()
    }

    pub fn contains(&self, set: &ArgSet) -> bool {
        self.extensions.iter().any(|e| e == set)
    }

    pub fn first(&self) -> Option<&ArgSet> {
        self.extensions.first()
    }

    /// Extensions as sorted name lists, in canonical order. The workhorse
    /// for tests and the CLI printer.
    pub fn member_names(&self, f: &Framework) -> Result<Vec<Vec<String>>> {
        self.extensions.iter().map(|e| e.member_names(f)).collect()
    }
}

/// Keeps candidates whose range is not strictly contained in another
/// candidate's range. Candidates with equal ranges are all retained.
struct MaxRangeFilter {
    items: Vec<(u64, u64)>,
}

impl MaxRangeFilter {
    fn new() -> Self {
        MaxRangeFilter { items: Vec::new() }
    }

    fn offer(&mut self, set: u64, rng: u64) {
        if self.items.iter().any(|&(_, r)| r != rng && rng & r == rng) {
            return;
        }
        self.items.retain(|&(_, r)| !(r != rng && r & rng == r));
        self.items.push((set, rng));
    }

    fn into_sets(self) -> Vec<u64> {
        self.items.into_iter().map(|(s, _)| s).collect()
    }
}

fn complete_at(t: &MaskTables, a: u64, plus: u64, inu: u64) -> bool {
    // Admissible, plus: every argument defended by A is already in A.
    if inu & !plus != 0 {
        return false;
    }
    for x in 0..t.n {
        if t.inn[x] & !plus == 0 && a & (1 << x) == 0 {
            return false;
        }
    }
    true
}

/// Enumerates the extensions of `f` under `sem` with the default cap.
pub fn enumerate(f: &Framework, sem: SemanticsId) -> Result<ExtensionSet> {
    enumerate_with_cap(f, sem, DEFAULT_ENUM_CAP)
}

/// Enumerates the extensions of `f` under `sem`, allowing up to `cap`
/// arguments. `sem` must not be `Para`.
pub fn enumerate_with_cap(f: &Framework, sem: SemanticsId, cap: usize) -> Result<ExtensionSet> {
    if sem == SemanticsId::Para {
        return Err(Error::ParaDispatch);
    }
    let t = MaskTables::build(f, cap)?;
    let masks = match sem {
        SemanticsId::Cf => {
            let mut all = Vec::new();
            for_each_conflict_free(&t, &mut |a, _, _| all.push(a));
            all
        }
        SemanticsId::Adm => {
            let mut all = Vec::new();
            for_each_conflict_free(&t, &mut |a, plus, inu| {
                if inu & !plus == 0 {
                    all.push(a);
                }
            });
            all
        }
        SemanticsId::Comp => {
            let mut all = Vec::new();
            for_each_conflict_free(&t, &mut |a, plus, inu| {
                if complete_at(&t, a, plus, inu) {
                    all.push(a);
                }
            });
            all
        }
        SemanticsId::Stb => {
            let mut all = Vec::new();
            for_each_conflict_free(&t, &mut |a, plus, _| {
                if plus == t.all & !a {
                    all.push(a);
                }
            });
            all
        }
        SemanticsId::Sem => {
            let mut filter = MaxRangeFilter::new();
            for_each_conflict_free(&t, &mut |a, plus, inu| {
                if complete_at(&t, a, plus, inu) {
                    filter.offer(a, a | plus);
                }
            });
            filter.into_sets()
        }
        SemanticsId::Stage => {
            let mut filter = MaxRangeFilter::new();
            for_each_conflict_free(&t, &mut |a, plus, _| filter.offer(a, a | plus));
            filter.into_sets()
        }
        SemanticsId::Para => unreachable!(),
    };
    Ok(ExtensionSet::from_masks(f, masks))
}

/// Single-candidate membership check. Locally checkable semantics are
/// decided directly; the range-maximal ones enumerate their peers.
pub fn is_extension(f: &Framework, a: &ArgSet, sem: SemanticsId) -> Result<bool> {
    is_extension_with_cap(f, a, sem, DEFAULT_ENUM_CAP)
}

pub fn is_extension_with_cap(
    f: &Framework,
    a: &ArgSet,
    sem: SemanticsId,
    cap: usize,
) -> Result<bool> {
    a.bind_check(f)?;
    if sem == SemanticsId::Para {
        return Err(Error::ParaDispatch);
    }
    let t = MaskTables::build(f, cap)?;
    let mask = a.word(0);
    let plus = t.plus(mask);
    let cf = plus & mask == 0;
    Ok(match sem {
        SemanticsId::Cf => cf,
        SemanticsId::Adm => {
            let inu = a.iter().fold(0u64, |acc, i| acc | t.inn[i]);
            cf && inu & !plus == 0
        }
        SemanticsId::Comp => {
            let inu = a.iter().fold(0u64, |acc, i| acc | t.inn[i]);
            cf && complete_at(&t, mask, plus, inu)
        }
        SemanticsId::Stb => cf && plus == t.all & !mask,
        SemanticsId::Sem | SemanticsId::Stage => enumerate_with_cap(f, sem, cap)?.contains(a),
        SemanticsId::Para => unreachable!(),
    })
}
