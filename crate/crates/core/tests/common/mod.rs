//! Definition-literal reference implementations, used as independent
//! oracles by the integration suites. Everything here works on plain name
//! sets with explicit quantifier loops; none of it shares code with the
//! bitset walkers under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use paraf_core::af::Framework;
use paraf_core::lp::{Atom, Interpretation, Program, Rule};
use paraf_core::semantics::SemanticsId;

pub type NameSet = BTreeSet<String>;

pub fn name_set(names: &[&str]) -> NameSet {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn all_subsets(items: &[String]) -> Vec<NameSet> {
    let mut out = vec![NameSet::new()];
    for item in items {
        let mut extended: Vec<NameSet> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.insert(item.clone());
                t
            })
            .collect();
        out.append(&mut extended);
    }
    out
}

pub fn plus(f: &Framework, a: &NameSet) -> NameSet {
    f.attack_names()
        .into_iter()
        .filter(|(src, _)| a.contains(src))
        .map(|(_, tgt)| tgt)
        .collect()
}

pub fn conflict_free(f: &Framework, a: &NameSet) -> bool {
    f.attack_names()
        .iter()
        .all(|(src, tgt)| !(a.contains(src) && a.contains(tgt)))
}

fn defends(f: &Framework, a: &NameSet, x: &str) -> bool {
    f.attack_names().iter().all(|(src, tgt)| {
        if tgt != x {
            return true;
        }
        // Some member of `a` must counter-attack `src`.
        f.attack_names()
            .iter()
            .any(|(s2, t2)| t2 == src && a.contains(s2))
    })
}

pub fn admissible(f: &Framework, a: &NameSet) -> bool {
    conflict_free(f, a) && a.iter().all(|x| defends(f, a, x))
}

pub fn complete(f: &Framework, a: &NameSet) -> bool {
    admissible(f, a)
        && f.arg_names()
            .iter()
            .all(|x| !defends(f, a, x) || a.contains(x))
}

pub fn stable(f: &Framework, a: &NameSet) -> bool {
    let others: NameSet = f
        .arg_names()
        .iter()
        .filter(|n| !a.contains(*n))
        .cloned()
        .collect();
    plus(f, a) == others
}

fn range_of(f: &Framework, a: &NameSet) -> NameSet {
    a.union(&plus(f, a)).cloned().collect()
}

pub fn extensions(f: &Framework, sem: SemanticsId) -> Vec<NameSet> {
    let subsets = all_subsets(f.arg_names());
    let mut picked: Vec<NameSet> = match sem {
        SemanticsId::Cf => subsets
            .into_iter()
            .filter(|a| conflict_free(f, a))
            .collect(),
        SemanticsId::Adm => subsets.into_iter().filter(|a| admissible(f, a)).collect(),
        SemanticsId::Comp => subsets.into_iter().filter(|a| complete(f, a)).collect(),
        SemanticsId::Stb => subsets.into_iter().filter(|a| stable(f, a)).collect(),
        SemanticsId::Sem => {
            let completes: Vec<NameSet> = subsets.into_iter().filter(|a| complete(f, a)).collect();
            completes
                .iter()
                .filter(|a| {
                    let ra = range_of(f, a);
                    !completes.iter().any(|b| {
                        let rb = range_of(f, b);
                        ra.is_subset(&rb) && ra != rb
                    })
                })
                .cloned()
                .collect()
        }
        SemanticsId::Stage => {
            let cfs: Vec<NameSet> = subsets
                .into_iter()
                .filter(|a| conflict_free(f, a))
                .collect();
            cfs.iter()
                .filter(|a| {
                    let ra = range_of(f, a);
                    !cfs.iter().any(|b| {
                        let rb = range_of(f, b);
                        ra.is_subset(&rb) && ra != rb
                    })
                })
                .cloned()
                .collect()
        }
        SemanticsId::Para => paracoherent(f),
    };
    picked.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    picked
}

pub fn is_stabilizer(f: &Framework, s: &NameSet, a: &NameSet) -> bool {
    let lhs: NameSet = plus(f, a).union(&plus(f, s)).cloned().collect();
    let rhs: NameSet = f
        .arg_names()
        .iter()
        .filter(|n| !a.contains(*n))
        .cloned()
        .collect();
    lhs == rhs
}

/// The whole stabilizer family, by trying every (S, A) pair.
pub fn sigma(f: &Framework) -> Vec<NameSet> {
    let subsets = all_subsets(f.arg_names());
    let mut family: Vec<NameSet> = Vec::new();
    for s in &subsets {
        if subsets.iter().any(|a| is_stabilizer(f, s, a)) {
            family.push(s.clone());
        }
    }
    family
}

pub fn sigma_minimal(f: &Framework) -> Vec<NameSet> {
    let family = sigma(f);
    let mut minimal: Vec<NameSet> = family
        .iter()
        .filter(|s| {
            !family
                .iter()
                .any(|other| other.is_subset(s) && *other != **s)
        })
        .cloned()
        .collect();
    minimal.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    minimal
}

pub fn paracoherent(f: &Framework) -> Vec<NameSet> {
    let subsets = all_subsets(f.arg_names());
    let minimal = sigma_minimal(f);
    let mut out: Vec<NameSet> = subsets
        .into_iter()
        .filter(|a| minimal.iter().any(|s| is_stabilizer(f, s, a)))
        .collect();
    out.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    out
}

pub type AtomSet = BTreeSet<Atom>;

fn rule_fires(rule: &Rule, i: &AtomSet) -> bool {
    rule.pos_body.iter().all(|a| i.contains(a)) && rule.neg_body.iter().all(|a| !i.contains(a))
}

fn is_model(i: &AtomSet, rules: &[Rule]) -> bool {
    rules
        .iter()
        .all(|r| !rule_fires(r, i) || r.head.iter().any(|a| i.contains(a)))
}

fn atom_subsets(atoms: &[Atom]) -> Vec<AtomSet> {
    let mut out = vec![AtomSet::new()];
    for atom in atoms {
        let mut extended: Vec<AtomSet> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.insert(atom.clone());
                t
            })
            .collect();
        out.append(&mut extended);
    }
    out
}

/// Answer sets straight from the definition: every interpretation, its
/// reduct, and every subset of the interpretation.
pub fn answer_sets(p: &Program) -> Vec<Interpretation> {
    let atoms = p.atoms();
    let candidates = atom_subsets(&atoms);
    let mut out = Vec::new();
    for i in &candidates {
        let reduct: Vec<Rule> = p
            .rules()
            .iter()
            .filter(|r| r.neg_body.iter().all(|c| !i.contains(c)))
            .map(|r| Rule::new(r.head.iter().cloned(), r.pos_body.iter().cloned(), []))
            .collect();
        if !is_model(i, &reduct) {
            continue;
        }
        let minimal = candidates
            .iter()
            .all(|j| !(j.is_subset(i) && j != i && is_model(j, &reduct)));
        if minimal {
            out.push(Interpretation::new(i.iter().cloned()));
        }
    }
    out.sort_by_key(|m| (m.len(), m.iter().cloned().collect::<Vec<_>>()));
    out
}

/// A random normal program: single-atom or empty heads, up to two positive
/// and two negative body atoms per rule.
pub fn random_normal_program(rng: &mut rand_chacha::ChaCha8Rng, max_atoms: usize) -> Program {
    use rand::Rng;
    let n_atoms = rng.gen_range(1..=max_atoms);
    let atoms: Vec<Atom> = (0..n_atoms).map(|i| Atom::Plain(format!("x{i}"))).collect();
    let n_rules = rng.gen_range(1..=2 * max_atoms);
    let mut rules = Vec::new();
    for _ in 0..n_rules {
        let head: Vec<Atom> = if rng.gen_bool(0.15) {
            vec![]
        } else {
            vec![atoms[rng.gen_range(0..n_atoms)].clone()]
        };
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            pos.push(atoms[rng.gen_range(0..n_atoms)].clone());
        }
        for _ in 0..rng.gen_range(0..=2) {
            neg.push(atoms[rng.gen_range(0..n_atoms)].clone());
        }
        if head.is_empty() && pos.is_empty() && neg.is_empty() {
            continue;
        }
        rules.push(Rule::new(head, pos, neg));
    }
    if rules.is_empty() {
        rules.push(Rule::fact(atoms[0].clone()));
    }
    Program::new(rules)
}

/// Canonical view of an extension set for comparisons against the oracles.
pub fn names_of(f: &Framework, es: &paraf_core::semantics::ExtensionSet) -> Vec<NameSet> {
    let mut out: Vec<NameSet> = es
        .member_names(f)
        .unwrap()
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    out.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    out
}
