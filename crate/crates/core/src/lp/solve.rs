//! The model walker behind `minimal_models` and `answer_sets`.
//!
//! Atoms are interned to bit positions in the program's canonical order and
//! assignments are walked depth-first in that order. A branch dies as soon
//! as some rule has all of its atoms assigned and is violated; since atoms
//! are assigned in index order, each rule is checked exactly once per
//! branch, when its highest atom gets a value. Candidates that survive to a
//! leaf are classical models of the program; the answer-set check then
//! descends through proper subsets of the candidate against its reduct,
//! which is the definition, verbatim.

use std::collections::BTreeMap;

use super::{Atom, Interpretation, Program};
use crate::error::{Error, Result};

/// Default ceiling on the atom-universe size. The walker prunes hard on
/// constrained programs (the transformation outputs it exists for), but it
/// is still an exhaustive procedure; past this size you are asking for an
/// overnight run.
pub const DEFAULT_ATOM_CAP: usize = 30;

const WORD_LIMIT: usize = 63;

struct MaskRule {
    head: u64,
    pos: u64,
    neg: u64,
}

struct Space {
    atoms: Vec<Atom>,
    rules: Vec<MaskRule>,
    /// Rule indices keyed by the highest atom index occurring in the rule;
    /// rules over no atoms at all (degenerate constraints) go to slot 0 of
    /// `nullary`.
    by_last: Vec<Vec<usize>>,
    nullary_violated: bool,
}

fn build_space(p: &Program, cap: usize) -> Result<Space> {
    let atoms = p.atoms();
    let effective = cap.min(WORD_LIMIT);
    if atoms.len() > effective {
        return Err(Error::TooManyAtoms {
            atoms: atoms.len(),
            cap: effective,
        });
    }
    let index: BTreeMap<&Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mask = |set: &std::collections::BTreeSet<Atom>| -> u64 {
        set.iter().fold(0u64, |acc, a| acc | (1 << index[a]))
    };

    let mut rules = Vec::with_capacity(p.len());
    let mut by_last = vec![Vec::new(); atoms.len()];
    let mut nullary_violated = false;
    for r in p.rules() {
        let m = MaskRule {
            head: mask(&r.head),
            pos: mask(&r.pos_body),
            neg: mask(&r.neg_body),
        };
        let bits = m.head | m.pos | m.neg;
        if bits == 0 {
            // A rule over no atoms fires vacuously and has no head to make
            // true: the program has no models at all.
            nullary_violated = true;
        } else {
            by_last[63 - bits.leading_zeros() as usize].push(rules.len());
        }
        rules.push(m);
    }
    Ok(Space {
        atoms,
        rules,
        by_last,
        nullary_violated,
    })
}

impl Space {
    /// All classical models of the program, as bit masks.
    fn models(&self) -> Vec<u64> {
        if self.nullary_violated {
            return Vec::new();
        }
        let mut out = Vec::new();
        self.walk(0, 0, &mut out);
        out
    }

    fn walk(&self, depth: usize, truth: u64, out: &mut Vec<u64>) {
        if depth == self.atoms.len() {
            out.push(truth);
            return;
        }
        for value in [false, true] {
            let t = if value { truth | (1 << depth) } else { truth };
            if self.by_last[depth].iter().all(|&ri| {
                let r = &self.rules[ri];
                // All atoms of r are assigned once `depth` is: violated iff
                // the body holds and every head atom is false.
                !(r.pos & t == r.pos && r.neg & t == 0 && r.head & t == 0)
            }) {
                self.walk(depth + 1, t, out);
            }
        }
    }

    /// Is `truth` a minimal model of the reduct of the program w.r.t.
    /// `truth`? Assumes `truth` is already known to be a model.
    fn is_answer_set(&self, truth: u64) -> bool {
        // Reduct rules that could fire under a subset of `truth`.
        let reduct: Vec<(u64, u64)> = self
            .rules
            .iter()
            .filter(|r| r.neg & truth == 0 && r.pos & truth == r.pos)
            .map(|r| (r.head, r.pos))
            .collect();
        if truth == 0 {
            return true;
        }
        let mut sub = (truth - 1) & truth;
        loop {
            let models_reduct = reduct
                .iter()
                .all(|&(head, pos)| !(pos & sub == pos && head & sub == 0));
            if models_reduct {
                return false;
            }
            if sub == 0 {
                return true;
            }
            sub = (sub - 1) & truth;
        }
    }

    fn to_interpretation(&self, truth: u64) -> Interpretation {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| truth & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect()
    }

    /// Canonical output order: by size, then by ascending atom indices.
    fn sorted(&self, mut masks: Vec<u64>) -> Vec<Interpretation> {
        masks.sort_by_key(|&m| {
            let idx: Vec<usize> = (0..self.atoms.len())
                .filter(|i| m & (1 << i) != 0)
                .collect();
            (idx.len(), idx)
        });
        masks
            .into_iter()
            .map(|m| self.to_interpretation(m))
            .collect()
    }
}

/// All subset-minimal classical models of a negation-free program.
pub fn minimal_models(p: &Program) -> Result<Vec<Interpretation>> {
    minimal_models_with_cap(p, DEFAULT_ATOM_CAP)
}

pub fn minimal_models_with_cap(p: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    if p.rules().iter().any(|r| !r.neg_body.is_empty()) {
        return Err(Error::Precondition(
            "minimal_models requires a negation-free program".into(),
        ));
    }
    let space = build_space(p, cap)?;
    let models = space.models();
    let mut minimal: Vec<u64> = Vec::new();
    for &m in &models {
        if models.iter().any(|&o| o != m && o & m == o) {
            continue;
        }
        minimal.push(m);
    }
    Ok(space.sorted(minimal))
}

/// All answer sets: interpretations that are minimal models of their own
/// Gelfond-Lifschitz reduct, in canonical order.
pub fn answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    answer_sets_with_cap(p, DEFAULT_ATOM_CAP)
}

pub fn answer_sets_with_cap(p: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    let space = build_space(p, cap)?;
    let stable: Vec<u64> = space
        .models()
        .into_iter()
        .filter(|&m| space.is_answer_set(m))
        .collect();
    Ok(space.sorted(stable))
}
