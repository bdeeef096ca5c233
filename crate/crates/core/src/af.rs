//! Argumentation frameworks and the primitive set operations every
//! semantics is built from.
//!
//! A [`Framework`] is an immutable directed attack graph over named
//! arguments. Argument names are interned to dense indices at construction
//! time and all set math runs on bit vectors, since everything downstream
//! is subset enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Defect, Error, Result};

/// Default ceiling on the number of arguments accepted by the exhaustive
/// enumeration entry points (2^24 subsets). Callers can raise it explicitly,
/// up to [`ENUM_HARD_LIMIT`].
pub const DEFAULT_ENUM_CAP: usize = 24;

/// Hard ceiling for any subset enumeration: the walkers keep a whole
/// framework in a single machine word.
pub const ENUM_HARD_LIMIT: usize = 63;

static NEXT_FRAMEWORK_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn words_for(nargs: usize) -> usize {
    nargs.div_ceil(64)
}

/// Checks raw framework input and reports every structural defect found:
/// duplicate or malformed names, attacks with undeclared endpoints, and
/// duplicate attacks.
pub fn validate(args: &[String], attacks: &[(String, String)]) -> Vec<Defect> {
    let mut defects = Vec::new();
    let mut seen = BTreeMap::new();
    for (i, name) in args.iter().enumerate() {
        if !is_valid_name(name) {
            defects.push(Defect::InvalidName(name.clone()));
        }
        if seen.insert(name.as_str(), i).is_some() {
            defects.push(Defect::DuplicateName(name.clone()));
        }
    }
    let mut seen_attacks = std::collections::BTreeSet::new();
    for (src, tgt) in attacks {
        for end in [src, tgt] {
            if !seen.contains_key(end.as_str()) {
                defects.push(Defect::UnknownArgument(end.clone()));
            }
        }
        if !seen_attacks.insert((src.as_str(), tgt.as_str())) {
            defects.push(Defect::DuplicateAttack(src.clone(), tgt.clone()));
        }
    }
    defects
}

/// An immutable attack graph over named arguments.
#[derive(Debug, Clone)]
pub struct Framework {
    id: u64,
    args: Vec<String>,
    index: BTreeMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    out_rows: Vec<Box<[u64]>>,
    in_rows: Vec<Box<[u64]>>,
}

impl Framework {
    /// Builds a framework from argument names and name-level attacks.
    /// Duplicate attacks are silently collapsed (the semantics depend on the
    /// relation, not on multiplicity); every other defect is an error.
    pub fn new<S: Into<String> + Clone>(args: Vec<S>, attacks: &[(S, S)]) -> Result<Framework> {
        let args: Vec<String> = args.into_iter().map(Into::into).collect();
        let attacks: Vec<(String, String)> = attacks
            .iter()
            .map(|(a, b)| (a.clone().into(), b.clone().into()))
            .collect();
        let defects: Vec<Defect> = validate(&args, &attacks)
            .into_iter()
            .filter(|d| !matches!(d, Defect::DuplicateAttack(_, _)))
            .collect();
        if !defects.is_empty() {
            return Err(Error::InvalidFramework(defects));
        }

        let index: BTreeMap<String, usize> = args
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut pairs: Vec<(usize, usize)> = attacks
            .iter()
            .map(|(s, t)| (index[s.as_str()], index[t.as_str()]))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();

        let nwords = words_for(args.len());
        let mut out_rows = vec![vec![0u64; nwords].into_boxed_slice(); args.len()];
        let mut in_rows = vec![vec![0u64; nwords].into_boxed_slice(); args.len()];
        for &(s, t) in &pairs {
            out_rows[s][t / 64] |= 1 << (t % 64);
            in_rows[t][s / 64] |= 1 << (s % 64);
        }

        Ok(Framework {
            id: NEXT_FRAMEWORK_ID.fetch_add(1, Ordering::Relaxed),
            args,
            index,
            attacks: pairs,
            out_rows,
            in_rows,
        })
    }

    pub fn arg_count(&self) -> usize {
        self.args.len()
    }

    pub fn arg_names(&self) -> &[String] {
        &self.args
    }

    pub fn arg_name(&self, index: usize) -> &str {
        &self.args[index]
    }

    pub fn arg_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Attacks as index pairs, sorted and duplicate-free.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    /// Attacks as name pairs, in index order.
    pub fn attack_names(&self) -> Vec<(String, String)> {
        self.attacks
            .iter()
            .map(|&(s, t)| (self.args[s].clone(), self.args[t].clone()))
            .collect()
    }

    pub fn attacks_some(&self, index: usize) -> bool {
        self.out_rows[index].iter().any(|&w| w != 0)
    }

    /// The arguments attacked by `index`.
    pub fn targets_of(&self, index: usize) -> ArgSet {
        ArgSet {
            fw: self.id,
            nargs: self.args.len(),
            words: self.out_rows[index].clone(),
        }
    }

    /// The arguments attacking `index`.
    pub fn attackers_of(&self, index: usize) -> ArgSet {
        ArgSet {
            fw: self.id,
            nargs: self.args.len(),
            words: self.in_rows[index].clone(),
        }
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet {
            fw: self.id,
            nargs: self.args.len(),
            words: vec![0; words_for(self.args.len())].into_boxed_slice(),
        }
    }

    pub fn full_set(&self) -> ArgSet {
        let mut set = self.empty_set();
        for i in 0..self.args.len() {
            set.insert(i);
        }
        set
    }

    /// Builds an [`ArgSet`] bound to this framework from argument names.
    pub fn arg_set<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<ArgSet> {
        let mut set = self.empty_set();
        for name in names {
            let i = self
                .arg_index(name)
                .ok_or_else(|| Error::UnknownArgument(name.to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub(crate) fn set_from_word(&self, word: u64) -> ArgSet {
        debug_assert!(self.args.len() <= 64);
        let mut set = self.empty_set();
        if !set.words.is_empty() {
            set.words[0] = word;
        }
        set
    }
}

/// A subset of one framework's arguments, bit-indexed and tagged with the
/// framework it is bound to. Sets bound to different frameworks never
/// compare equal and refuse the binary operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgSet {
    fw: u64,
    nargs: usize,
    words: Box<[u64]>,
}

impl ArgSet {
    pub(crate) fn bind_check(&self, f: &Framework) -> Result<()> {
        if self.fw == f.id {
            Ok(())
        } else {
            Err(Error::ForeignArgSet)
        }
    }

    fn same_binding(&self, other: &ArgSet) -> Result<()> {
        if self.fw == other.fw {
            Ok(())
        } else {
            Err(Error::ForeignArgSet)
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.nargs && self.words[index / 64] & (1 << (index % 64)) != 0
    }

    pub(crate) fn insert(&mut self, index: usize) {
        debug_assert!(index < self.nargs);
        self.words[index / 64] |= 1 << (index % 64);
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nargs).filter(move |&i| self.contains(i))
    }

    /// Member names, sorted lexicographically.
    pub fn member_names(&self, f: &Framework) -> Result<Vec<String>> {
        self.bind_check(f)?;
        let mut names: Vec<String> = self.iter().map(|i| f.args[i].clone()).collect();
        names.sort();
        Ok(names)
    }

    pub fn union(&self, other: &ArgSet) -> Result<ArgSet> {
        self.same_binding(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &ArgSet) -> Result<ArgSet> {
        self.same_binding(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        Ok(out)
    }

    pub fn difference(&self, other: &ArgSet) -> Result<ArgSet> {
        self.same_binding(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        Ok(out)
    }

    pub fn subset_of(&self, other: &ArgSet) -> Result<bool> {
        self.same_binding(other)?;
        Ok(self
            .words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0))
    }

    pub(crate) fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// The set of arguments attacked by some member of `a` (written `A+`).
pub fn attacked_set(f: &Framework, a: &ArgSet) -> Result<ArgSet> {
    a.bind_check(f)?;
    let mut out = f.empty_set();
    for i in a.iter() {
        for (w, row) in out.words.iter_mut().zip(f.out_rows[i].iter()) {
            *w |= row;
        }
    }
    Ok(out)
}

/// True iff no member of `a` attacks a member of `a` (self-attacks included).
pub fn is_conflict_free(f: &Framework, a: &ArgSet) -> Result<bool> {
    let plus = attacked_set(f, a)?;
    Ok(plus.intersection(a)?.is_empty())
}

/// The range of `a`: the set together with everything it attacks.
pub fn range(f: &Framework, a: &ArgSet) -> Result<ArgSet> {
    let plus = attacked_set(f, a)?;
    a.union(&plus)
}

/// Per-argument attack masks for frameworks that fit in one machine word.
/// This is the representation every enumeration walker runs on.
pub(crate) struct MaskTables {
    pub n: usize,
    pub all: u64,
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

impl MaskTables {
    pub fn build(f: &Framework, cap: usize) -> Result<MaskTables> {
        let n = f.arg_count();
        let effective = cap.min(ENUM_HARD_LIMIT);
        if n > effective {
            return Err(Error::TooManyArguments {
                args: n,
                cap: effective,
            });
        }
        let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let out = (0..n).map(|i| f.out_rows[i][0]).collect();
        let inn = (0..n).map(|i| f.in_rows[i][0]).collect();
        Ok(MaskTables { n, all, out, inn })
    }

    pub fn plus(&self, a: u64) -> u64 {
        let mut acc = 0;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc |= self.out[i];
            rest &= rest - 1;
        }
        acc
    }
}

/// Walks every conflict-free subset, handing the visitor the subset, its
/// attacked set, and the union of its members' attackers.
pub(crate) fn for_each_conflict_free<F: FnMut(u64, u64, u64)>(t: &MaskTables, visit: &mut F) {
    fn walk<F: FnMut(u64, u64, u64)>(
        t: &MaskTables,
        i: usize,
        a: u64,
        plus: u64,
        inu: u64,
        visit: &mut F,
    ) {
        if i == t.n {
            visit(a, plus, inu);
            return;
        }
        let bit = 1u64 << i;
        // i can join iff nothing in A attacks it, it attacks nothing in A,
        // and it does not attack itself.
        if plus & bit == 0 && t.out[i] & (a | bit) == 0 {
            walk(t, i + 1, a | bit, plus | t.out[i], inu | t.inn[i], visit);
        }
        walk(t, i + 1, a, plus, inu, visit);
    }
    walk(t, 0, 0, 0, 0, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1a() -> Framework {
        Framework::new(
            vec!["a", "b", "c", "d"],
            &[("a", "b"), ("c", "b"), ("b", "d")],
        )
        .unwrap()
    }

    fn fig4() -> Framework {
        Framework::new(
            vec!["a", "b", "c", "d", "e"],
            &[
                ("a", "b"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "a"),
                ("c", "d"),
                ("d", "e"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn attacked_set_examples() {
        let f = fig1a();
        let a = f.arg_set(["a"]).unwrap();
        assert_eq!(
            attacked_set(&f, &a).unwrap().member_names(&f).unwrap(),
            ["b"]
        );

        let f = fig4();
        let a = f.arg_set(["a"]).unwrap();
        assert_eq!(
            attacked_set(&f, &a).unwrap().member_names(&f).unwrap(),
            ["b", "d"]
        );
        let empty = f.empty_set();
        assert!(attacked_set(&f, &empty).unwrap().is_empty());
    }

    #[test]
    fn conflict_free_examples() {
        let f = fig1a();
        assert!(is_conflict_free(&f, &f.arg_set(["a", "c", "d"]).unwrap()).unwrap());
        assert!(!is_conflict_free(&f, &f.arg_set(["a", "b"]).unwrap()).unwrap());
        assert!(is_conflict_free(&f, &f.empty_set()).unwrap());
    }

    #[test]
    fn self_attack_breaks_conflict_freeness() {
        let f = Framework::new(vec!["a"], &[("a", "a")]).unwrap();
        assert!(!is_conflict_free(&f, &f.arg_set(["a"]).unwrap()).unwrap());
    }

    #[test]
    fn range_examples() {
        let f = Framework::new(
            vec!["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "c"),
                ("d", "e"),
                ("e", "f"),
                ("f", "f"),
                ("f", "g"),
                ("g", "e"),
            ],
        )
        .unwrap();
        let a = f.arg_set(["a", "d"]).unwrap();
        assert_eq!(
            range(&f, &a).unwrap().member_names(&f).unwrap(),
            ["a", "b", "c", "d", "e"]
        );
        assert!(range(&f, &f.empty_set()).unwrap().is_empty());

        let sec62 = Framework::new(
            vec!["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "c"), ("c", "d"), ("d", "e")],
        )
        .unwrap();
        let bd = sec62.arg_set(["b", "d"]).unwrap();
        assert_eq!(
            range(&sec62, &bd).unwrap().member_names(&sec62).unwrap(),
            ["b", "c", "d", "e"]
        );
    }

    #[test]
    fn validate_reports_defects() {
        let ok = validate(&["a".into(), "b".into()], &[("a".into(), "b".into())]);
        assert!(ok.is_empty());

        let unknown = validate(&["a".into()], &[("a".into(), "x".into())]);
        assert_eq!(unknown, vec![Defect::UnknownArgument("x".into())]);

        let dup = validate(&["a".into(), "a".into()], &[]);
        assert_eq!(dup, vec![Defect::DuplicateName("a".into())]);

        let dup_attack = validate(
            &["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("a".into(), "b".into())],
        );
        assert_eq!(
            dup_attack,
            vec![Defect::DuplicateAttack("a".into(), "b".into())]
        );
    }

    #[test]
    fn duplicate_attacks_collapse_silently() {
        let f = Framework::new(vec!["a", "b"], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(f.attacks(), &[(0, 1)]);
    }

    #[test]
    fn foreign_sets_are_rejected() {
        let f = fig1a();
        let g = fig1a();
        let a = g.arg_set(["a"]).unwrap();
        assert!(matches!(attacked_set(&f, &a), Err(Error::ForeignArgSet)));
        let b = f.arg_set(["b"]).unwrap();
        assert!(matches!(a.union(&b), Err(Error::ForeignArgSet)));
    }

    #[test]
    fn empty_framework_is_fine() {
        let f = Framework::new(Vec::<String>::new(), &[]).unwrap();
        assert_eq!(f.arg_count(), 0);
        assert!(is_conflict_free(&f, &f.empty_set()).unwrap());
    }

    #[test]
    fn set_operations_work_past_one_word() {
        // Enumeration is capped, but construction and the primitive set
        // ops must handle frameworks of any size.
        let args: Vec<String> = (0..70).map(|i| format!("x{i}")).collect();
        let attacks: Vec<(String, String)> = (0..69)
            .map(|i| (format!("x{i}"), format!("x{}", i + 1)))
            .collect();
        let f = Framework::new(args, &attacks).unwrap();
        let a = f.arg_set(["x0", "x68"]).unwrap();
        assert_eq!(
            attacked_set(&f, &a).unwrap().member_names(&f).unwrap(),
            ["x1", "x69"]
        );
        assert!(is_conflict_free(&f, &a).unwrap());
        assert_eq!(range(&f, &a).unwrap().len(), 4);
    }
}
