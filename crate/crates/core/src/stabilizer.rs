//! Stabilizers and paracoherent extensions.
//!
//! A stabilizer of a set `A` is a set `S` with `A+ ∪ S+ = Ar \ A`: it
//! supplies exactly the attacks `A` is missing to be stable. The
//! paracoherent extensions are the conflict-free sets admitting a
//! stabilizer that is subset-minimal among all stabilizers of the
//! framework.
//!
//! Two independent routes are provided: the direct definition
//! ([`paracoherent_extensions`]) and the guarded-shadow-framework
//! reduction to minimal stable extensions ([`paracoherent_via_shadow`]).
//! They must agree; the test suites hold them against each other.

use std::collections::{BTreeMap, BTreeSet};

use crate::af::{for_each_conflict_free, ArgSet, Framework, MaskTables, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::semantics::{enumerate_with_cap, ExtensionSet, SemanticsId};

/// Name prefix for shadow arguments added by [`guarded_shadow_framework`].
pub const SHADOW_PREFIX: &str = "s__";
/// Name prefix for the guards paired with each shadow.
pub const GUARD_PREFIX: &str = "g__";

/// A set together with one of its stabilizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerWitness {
    pub extension: ArgSet,
    pub stabilizer: ArgSet,
}

/// The family of all stabilizers of a framework, reduced to what the
/// paracoherent semantics needs: its subset-minimal elements and, per
/// conflict-free set, the locally minimal stabilizers (sets without any
/// stabilizer are not indexed).
#[derive(Debug, Clone)]
pub struct SigmaF {
    minimal: Vec<ArgSet>,
    index: BTreeMap<ArgSet, Vec<ArgSet>>,
}

impl SigmaF {
    /// The subset-minimal stabilizers across the whole framework.
    pub fn minimal_elements(&self) -> &[ArgSet] {
        &self.minimal
    }

    /// The locally minimal stabilizers of `a`, if `a` admits any.
    pub fn local_minimal_of(&self, a: &ArgSet) -> Option<&[ArgSet]> {
        self.index.get(a).map(|v| v.as_slice())
    }

    /// Every (extension, locally minimal stabilizer) pair found.
    pub fn witnesses(&self) -> impl Iterator<Item = StabilizerWitness> + '_ {
        self.index.iter().flat_map(|(a, ss)| {
            ss.iter().map(move |s| StabilizerWitness {
                extension: a.clone(),
                stabilizer: s.clone(),
            })
        })
    }

    /// The empty set is a stabilizer iff the framework has a stable extension.
    pub fn contains_empty(&self) -> bool {
        self.minimal.iter().any(|s| s.is_empty())
    }
}

/// True iff `A+ ∪ S+ = Ar \ A` holds exactly.
pub fn is_stabilizer(f: &Framework, s: &ArgSet, a: &ArgSet) -> Result<bool> {
    s.bind_check(f)?;
    a.bind_check(f)?;
    let plus_a = crate::af::attacked_set(f, a)?;
    let plus_s = crate::af::attacked_set(f, s)?;
    let lhs = plus_a.union(&plus_s)?;
    let rhs = f.full_set().difference(a)?;
    Ok(lhs == rhs)
}

/// Enumerates subset-minimal covers of `universe`, where candidate `i`
/// covers `coverage[i]`. Branches on the lowest uncovered element; the
/// final prune removes non-minimal covers the branching may produce.
fn minimal_covers(universe: u64, candidates: &[(usize, u64)]) -> Vec<u64> {
    fn walk(
        universe: u64,
        candidates: &[(usize, u64)],
        chosen: u64,
        covered: u64,
        out: &mut BTreeSet<u64>,
    ) {
        let missing = universe & !covered;
        if missing == 0 {
            out.insert(chosen);
            return;
        }
        let next = 1u64 << missing.trailing_zeros();
        for &(idx, cov) in candidates {
            if cov & next != 0 {
                walk(
                    universe,
                    candidates,
                    chosen | (1 << idx),
                    covered | cov,
                    out,
                );
            }
        }
    }

    let mut raw = BTreeSet::new();
    walk(universe, candidates, 0, 0, &mut raw);
    let mut minimal: Vec<u64> = Vec::new();
    for s in raw {
        if minimal.iter().any(|&m| m & !s == 0) {
            continue;
        }
        minimal.retain(|&m| s & !m != 0);
        minimal.push(s);
    }
    minimal
}

fn minimal_stabilizer_masks(t: &MaskTables, a: u64) -> Vec<u64> {
    let plus_a = t.plus(a);
    if plus_a & a != 0 {
        // Not conflict-free: the defining equation is unsatisfiable.
        return Vec::new();
    }
    let universe = t.all & !(a | plus_a);
    if universe == 0 {
        return vec![0];
    }
    // S may contain only arguments that do not attack A, and a minimal
    // cover never includes one that contributes nothing to the universe.
    let candidates: Vec<(usize, u64)> = (0..t.n)
        .filter(|&x| t.out[x] & a == 0)
        .map(|x| (x, t.out[x] & universe))
        .filter(|&(_, cov)| cov != 0)
        .collect();
    let reachable = candidates.iter().fold(0u64, |acc, &(_, cov)| acc | cov);
    if universe & !reachable != 0 {
        return Vec::new();
    }
    minimal_covers(universe, &candidates)
}

/// All subset-minimal stabilizers of `a`. Empty when `a` is not
/// conflict-free or some uncovered argument has no admissible attacker.
pub fn minimal_stabilizers_of(f: &Framework, a: &ArgSet) -> Result<Vec<ArgSet>> {
    a.bind_check(f)?;
    let t = MaskTables::build(f, crate::af::ENUM_HARD_LIMIT)?;
    let masks = minimal_stabilizer_masks(&t, a.word(0));
    let es = ExtensionSet::from_masks(f, masks);
    Ok(es.iter().cloned().collect())
}

/// Computes the subset-minimal elements of the stabilizer family, along
/// with the per-set index of locally minimal stabilizers.
///
/// A globally minimal stabilizer is locally minimal for whichever set it
/// stabilizes, so minimizing over the union of local minima is exact.
pub fn global_minimal_stabilizers(f: &Framework) -> Result<SigmaF> {
    global_minimal_stabilizers_with_cap(f, DEFAULT_ENUM_CAP)
}

pub fn global_minimal_stabilizers_with_cap(f: &Framework, cap: usize) -> Result<SigmaF> {
    let t = MaskTables::build(f, cap)?;
    let mut index_raw: Vec<(u64, Vec<u64>)> = Vec::new();
    for_each_conflict_free(&t, &mut |a, _, _| {
        let minima = minimal_stabilizer_masks(&t, a);
        if !minima.is_empty() {
            index_raw.push((a, minima));
        }
    });

    let mut global: Vec<u64> = Vec::new();
    for (_, minima) in &index_raw {
        for &s in minima {
            if global.iter().any(|&m| m & s == m && m != s) {
                continue;
            }
            if global.contains(&s) {
                continue;
            }
            global.retain(|&m| s & m != s);
            global.push(s);
        }
    }

    let minimal: Vec<ArgSet> = ExtensionSet::from_masks(f, global)
        .iter()
        .cloned()
        .collect();
    let index = index_raw
        .into_iter()
        .map(|(a, ss)| {
            let key = f.set_from_word(a);
            let vals = ExtensionSet::from_masks(f, ss).iter().cloned().collect();
            (key, vals)
        })
        .collect();
    Ok(SigmaF { minimal, index })
}

/// The paracoherent extensions: conflict-free sets admitting a stabilizer
/// that is minimal in the whole stabilizer family.
pub fn paracoherent_extensions(f: &Framework) -> Result<ExtensionSet> {
    paracoherent_extensions_with_cap(f, DEFAULT_ENUM_CAP)
}

pub fn paracoherent_extensions_with_cap(f: &Framework, cap: usize) -> Result<ExtensionSet> {
    let sigma = global_minimal_stabilizers_with_cap(f, cap)?;
    let global: BTreeSet<&ArgSet> = sigma.minimal.iter().collect();
    let chosen: Vec<ArgSet> = sigma
        .index
        .iter()
        .filter(|(_, ss)| ss.iter().any(|s| global.contains(s)))
        .map(|(a, _)| a.clone())
        .collect();
    Ok(ExtensionSet::from_sets(f, chosen))
}

/// Extends `f` with, per attacking argument `a`, a shadow `s__a` attacking
/// every target of `a`, and a guard `g__a` in a mutual attack pair with the
/// shadow, so each shadow is freely in or out of a stable extension.
pub fn guarded_shadow_framework(f: &Framework) -> Result<Framework> {
    for name in f.arg_names() {
        if name.starts_with(SHADOW_PREFIX) || name.starts_with(GUARD_PREFIX) {
            return Err(Error::ReservedName(name.clone()));
        }
    }
    let mut args: Vec<String> = f.arg_names().to_vec();
    let mut attacks: Vec<(String, String)> = f.attack_names();
    for i in 0..f.arg_count() {
        if !f.attacks_some(i) {
            continue;
        }
        let shadow = format!("{SHADOW_PREFIX}{}", f.arg_name(i));
        let guard = format!("{GUARD_PREFIX}{}", f.arg_name(i));
        for target in f.targets_of(i).iter() {
            attacks.push((shadow.clone(), f.arg_name(target).to_string()));
        }
        attacks.push((shadow.clone(), guard.clone()));
        attacks.push((guard.clone(), shadow.clone()));
        args.push(shadow);
        args.push(guard);
    }
    Framework::new(args, &attacks)
}

/// The shadow-framework route: stable extensions of the guarded shadow
/// framework whose shadow part is subset-minimal, projected back onto the
/// original arguments. Must agree with [`paracoherent_extensions`].
pub fn paracoherent_via_shadow(f: &Framework) -> Result<ExtensionSet> {
    paracoherent_via_shadow_with_cap(f, DEFAULT_ENUM_CAP)
}

pub fn paracoherent_via_shadow_with_cap(f: &Framework, cap: usize) -> Result<ExtensionSet> {
    let shadowed = guarded_shadow_framework(f)?;
    let stable = enumerate_with_cap(&shadowed, SemanticsId::Stb, cap)?;

    let shadow_mask: u64 = (0..shadowed.arg_count())
        .filter(|&i| shadowed.arg_name(i).starts_with(SHADOW_PREFIX))
        .fold(0, |acc, i| acc | (1 << i));
    let orig_mask: u64 = if f.arg_count() == 0 {
        0
    } else {
        (1u64 << f.arg_count()) - 1
    };

    let masks: Vec<u64> = stable.iter().map(|e| e.word(0)).collect();
    let mut kept: Vec<u64> = Vec::new();
    for &m in &masks {
        let part = m & shadow_mask;
        if masks
            .iter()
            .any(|&o| (o & shadow_mask) != part && (o & shadow_mask) & part == o & shadow_mask)
        {
            continue;
        }
        kept.push(m & orig_mask);
    }
    Ok(ExtensionSet::from_masks(f, kept))
}
