//! A minimal propositional disjunctive logic-program engine: classical
//! models, the Gelfond-Lifschitz reduct, minimal models and answer sets.
//!
//! Atoms come in five kinds. `Plain` atoms form the base signature;
//! `Belief` atoms (`k__a`) say an atom is believed to hold; `Aux` atoms
//! (`l__r_i`) are the fresh atoms of the epistemic transformations;
//! `Shadow` (`s__a`) and `ShadowComplement` (`n__a`) encode the
//! externally-supported rewriting. Only plain atoms appear in user input;
//! the rest are produced by the transformation passes.

mod solve;

pub use solve::{
    answer_sets, answer_sets_with_cap, minimal_models, minimal_models_with_cap, DEFAULT_ATOM_CAP,
};

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Plain(String),
    Belief(String),
    Aux { rule: usize, pos: usize },
    Shadow(String),
    ShadowComplement(String),
}

impl Atom {
    pub fn plain(name: impl Into<String>) -> Atom {
        Atom::Plain(name.into())
    }

    pub fn belief(name: impl Into<String>) -> Atom {
        Atom::Belief(name.into())
    }

    pub fn shadow(name: impl Into<String>) -> Atom {
        Atom::Shadow(name.into())
    }

    pub fn complement(name: impl Into<String>) -> Atom {
        Atom::ShadowComplement(name.into())
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Atom::Plain(_))
    }

    /// The plain name an atom refers to, when it refers to one.
    pub fn base_name(&self) -> Option<&str> {
        match self {
            Atom::Plain(n) | Atom::Belief(n) | Atom::Shadow(n) | Atom::ShadowComplement(n) => {
                Some(n)
            }
            Atom::Aux { .. } => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Plain(n) => write!(f, "{n}"),
            Atom::Belief(n) => write!(f, "k__{n}"),
            Atom::Aux { rule, pos } => write!(f, "l__{rule}_{pos}"),
            Atom::Shadow(n) => write!(f, "s__{n}"),
            Atom::ShadowComplement(n) => write!(f, "n__{n}"),
        }
    }
}

/// `head ← pos_body, not neg_body`. An empty head is a constraint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    pub head: BTreeSet<Atom>,
    pub pos_body: BTreeSet<Atom>,
    pub neg_body: BTreeSet<Atom>,
}

impl Rule {
    pub fn new(
        head: impl IntoIterator<Item = Atom>,
        pos_body: impl IntoIterator<Item = Atom>,
        neg_body: impl IntoIterator<Item = Atom>,
    ) -> Rule {
        Rule {
            head: head.into_iter().collect(),
            pos_body: pos_body.into_iter().collect(),
            neg_body: neg_body.into_iter().collect(),
        }
    }

    pub fn fact(atom: Atom) -> Rule {
        Rule::new([atom], [], [])
    }

    pub fn constraint(
        pos_body: impl IntoIterator<Item = Atom>,
        neg_body: impl IntoIterator<Item = Atom>,
    ) -> Rule {
        Rule::new([], pos_body, neg_body)
    }

    pub fn is_normal(&self) -> bool {
        self.head.len() <= 1
    }

    pub fn is_fact(&self) -> bool {
        self.pos_body.is_empty() && self.neg_body.is_empty() && !self.head.is_empty()
    }

    fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head
            .iter()
            .chain(self.pos_body.iter())
            .chain(self.neg_body.iter())
    }
}

/// A finite list of rules. Rule ids are positions in the list; they stay
/// stable so the transformation passes can name fresh atoms
/// deterministically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Program {
        Program {
            rules: rules.into_iter().collect(),
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn push(&mut self, rule: Rule) {
        self.rules.push(rule);
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(Rule::is_normal)
    }

    /// The base signature: plain atom names in order of first occurrence.
    pub fn signature(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for rule in &self.rules {
            for atom in rule.atoms() {
                if let Atom::Plain(n) = atom {
                    if seen.insert(n.clone()) {
                        out.push(n.clone());
                    }
                }
            }
        }
        out
    }

    /// The full atom universe in canonical order: plain atoms in first
    /// occurrence order, then belief, auxiliary, shadow and complement
    /// atoms. This order fixes bit layout and output order.
    pub fn atoms(&self) -> Vec<Atom> {
        let plain: Vec<Atom> = self.signature().into_iter().map(Atom::Plain).collect();
        let mut rest: BTreeSet<Atom> = BTreeSet::new();
        for rule in &self.rules {
            for atom in rule.atoms() {
                if !atom.is_plain() {
                    rest.insert(atom.clone());
                }
            }
        }
        let mut out = plain;
        out.extend(rest);
        out
    }

    /// True iff every rule is normal with an empty positive body and no
    /// two rules share a head atom: the shape the framework translation
    /// produces, which the simplified transformations require.
    pub fn is_framework_shaped(&self) -> bool {
        let mut heads = BTreeSet::new();
        self.rules.iter().all(|r| {
            r.head.len() == 1
                && r.pos_body.is_empty()
                && r.atoms().all(Atom::is_plain)
                && heads.insert(r.head.iter().next().unwrap().clone())
        })
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{}", crate::io::render_rule(rule))?;
        }
        Ok(())
    }
}

/// A set of atoms, the classical notion of interpretation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interpretation {
    atoms: BTreeSet<Atom>,
}

impl Interpretation {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Interpretation {
        Interpretation {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.atoms.contains(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Keeps only the atoms `keep` accepts.
    pub fn filtered(&self, keep: impl Fn(&Atom) -> bool) -> Interpretation {
        Interpretation {
            atoms: self.atoms.iter().filter(|a| keep(a)).cloned().collect(),
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{atom}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<T: IntoIterator<Item = Atom>>(iter: T) -> Self {
        Interpretation::new(iter)
    }
}

fn rule_fires(rule: &Rule, i: &Interpretation) -> bool {
    rule.pos_body.iter().all(|a| i.contains(a)) && rule.neg_body.iter().all(|a| !i.contains(a))
}

/// Classical model check: every rule whose body is satisfied has a true
/// head atom.
pub fn satisfies(i: &Interpretation, p: &Program) -> bool {
    p.rules()
        .iter()
        .all(|r| !rule_fires(r, i) || r.head.iter().any(|a| i.contains(a)))
}

/// The Gelfond-Lifschitz reduct: drop rules whose negative body meets `i`,
/// strip the negative bodies of the rest.
pub fn gl_reduct(p: &Program, i: &Interpretation) -> Program {
    Program::new(
        p.rules()
            .iter()
            .filter(|r| r.neg_body.iter().all(|a| !i.contains(a)))
            .map(|r| Rule::new(r.head.iter().cloned(), r.pos_body.iter().cloned(), [])),
    )
}

/// Builds a `BTreeMap`-backed lookup from plain names for convenience in
/// tests and callers that move between frameworks and programs.
pub fn plain_set(names: &[&str]) -> Interpretation {
    names.iter().map(|n| Atom::plain(*n)).collect()
}
