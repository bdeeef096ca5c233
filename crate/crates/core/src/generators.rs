//! Parametric framework families and the hard-coded fixtures the test
//! suites run on: radial star polygons, attack cycles, stable-roommates
//! encodings, and seeded random graphs.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::af::Framework;
use crate::error::{Error, Result};

/// One person's stance in a roommates instance: a strict ranking over
/// acceptable partners, optionally closed by "alone" as the last resort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choice {
    Partner(String),
    Alone,
}

/// Strict preference rankings, one per person.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreferenceProfile {
    persons: Vec<String>,
    prefs: BTreeMap<String, Vec<Choice>>,
}

impl PreferenceProfile {
    pub fn new(entries: Vec<(String, Vec<Choice>)>) -> Result<PreferenceProfile> {
        let mut persons = Vec::new();
        let mut prefs = BTreeMap::new();
        for (person, ranking) in entries {
            if prefs.contains_key(&person) {
                return Err(Error::Input(format!("duplicate person `{person}`")));
            }
            let mut seen = BTreeSet::new();
            for (i, choice) in ranking.iter().enumerate() {
                match choice {
                    Choice::Partner(p) if p == &person => {
                        return Err(Error::Input(format!("`{person}` ranks themselves")));
                    }
                    Choice::Partner(p) => {
                        if !seen.insert(p.clone()) {
                            return Err(Error::Input(format!("`{person}` ranks `{p}` twice")));
                        }
                    }
                    Choice::Alone => {
                        if i + 1 != ranking.len() {
                            return Err(Error::Input(format!("`{person}`: alone must come last")));
                        }
                    }
                }
            }
            persons.push(person.clone());
            prefs.insert(person, ranking);
        }
        Ok(PreferenceProfile { persons, prefs })
    }

    /// Parses the one-line-per-person format `name: p1 > p2 [> alone]`.
    pub fn parse(text: &str) -> Result<PreferenceProfile> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, rest) = line.split_once(':').ok_or(Error::Parse {
                line: lineno + 1,
                msg: "expected `name: p1 > p2 > ...`".into(),
            })?;
            let name = name.trim().to_string();
            let mut ranking = Vec::new();
            for token in rest.split('>') {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "empty preference entry".into(),
                    });
                }
                ranking.push(if token == "alone" {
                    Choice::Alone
                } else {
                    Choice::Partner(token.to_string())
                });
            }
            entries.push((name, ranking));
        }
        PreferenceProfile::new(entries).map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("malformed profile: {msg}")),
            other => other,
        })
    }

    fn rank_of(&self, person: &str, partner: &str) -> Option<usize> {
        self.prefs.get(person)?.iter().position(|c| match c {
            Choice::Partner(p) => p == partner,
            Choice::Alone => false,
        })
    }

    fn declares_alone(&self, person: &str) -> bool {
        self.prefs
            .get(person)
            .is_some_and(|r| r.iter().any(|c| matches!(c, Choice::Alone)))
    }
}

/// The radial star polygon: an attack cycle `a_1 … a_n`, each `a_i`
/// attacking the consecutive pair `b_i, b_{i+1}` (indices wrapping), and
/// every `b_i` attacking the centre `c`.
pub fn gen_radial_star(n: usize) -> Result<Framework> {
    if n < 3 {
        return Err(Error::Input(format!("radial star needs n >= 3, got {n}")));
    }
    let mut args: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    args.extend((1..=n).map(|i| format!("b{i}")));
    args.push("c".to_string());

    let wrap = |i: usize| if i == n { 1 } else { i + 1 };
    let mut attacks = Vec::new();
    for i in 1..=n {
        attacks.push((format!("a{i}"), format!("a{}", wrap(i))));
    }
    for i in 1..=n {
        attacks.push((format!("a{i}"), format!("b{i}")));
        attacks.push((format!("a{i}"), format!("b{}", wrap(i))));
    }
    for i in 1..=n {
        attacks.push((format!("b{i}"), "c".to_string()));
    }
    Framework::new(args, &attacks)
}

/// The closed-form paracoherent extensions of the odd radial star:
/// `A_i = {c} ∪ {a_{i-2h mod n} : h = 0 … (n-3)/2}` for each `i`.
pub fn radial_star_odd_family(n: usize) -> Vec<Vec<String>> {
    assert!(n >= 3 && n % 2 == 1);
    (1..=n)
        .map(|i| {
            let mut ext: Vec<String> = (0..=(n - 3) / 2)
                .map(|h| {
                    let idx = (i + 2 * n - 2 * h - 1) % n + 1;
                    format!("a{idx}")
                })
                .collect();
            ext.push("c".to_string());
            ext.sort();
            ext
        })
        .collect()
}

/// A single directed attack cycle on `n` arguments; `n = 1` is the
/// self-attacking singleton.
pub fn gen_cycle(n: usize) -> Result<Framework> {
    if n < 1 {
        return Err(Error::Input("cycle needs n >= 1".into()));
    }
    let args: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let attacks: Vec<(String, String)> = (1..=n)
        .map(|i| {
            let next = if i == n { 1 } else { i + 1 };
            (format!("a{i}"), format!("a{next}"))
        })
        .collect();
    Framework::new(args, &attacks)
}

/// Encodes a roommates instance as a framework. One argument per
/// acceptable pair (named by the sorted concatenation of the two names)
/// and one per declared alone stance (named by the person). A pair attacks
/// another pair sharing person `p` when `p` strictly prefers the first
/// pair's partner; every pair containing `p` attacks `p`'s alone argument.
pub fn gen_srp(profile: &PreferenceProfile) -> Result<Framework> {
    let mut pair_names: Vec<String> = Vec::new();
    let mut pairs: BTreeMap<String, (String, String)> = BTreeMap::new();
    for person in &profile.persons {
        for choice in &profile.prefs[person] {
            if let Choice::Partner(other) = choice {
                let (x, y) = if person < other {
                    (person.clone(), other.clone())
                } else {
                    (other.clone(), person.clone())
                };
                let name = format!("{x}{y}");
                if let std::collections::btree_map::Entry::Vacant(slot) = pairs.entry(name) {
                    pair_names.push(slot.key().clone());
                    slot.insert((x, y));
                }
            }
        }
    }
    let alone_names: Vec<String> = profile
        .persons
        .iter()
        .filter(|p| profile.declares_alone(p))
        .cloned()
        .collect();

    let mut args = pair_names.clone();
    args.extend(alone_names.iter().cloned());

    let partner_in = |name: &str, person: &str| -> Option<String> {
        let (x, y) = &pairs[name];
        if x == person {
            Some(y.clone())
        } else if y == person {
            Some(x.clone())
        } else {
            None
        }
    };

    let mut attacks = Vec::new();
    for p_name in &pair_names {
        for q_name in &pair_names {
            if p_name == q_name {
                continue;
            }
            for person in [&pairs[p_name].0, &pairs[p_name].1] {
                let Some(q_partner) = partner_in(q_name, person) else {
                    continue;
                };
                let p_partner = partner_in(p_name, person).expect("person is in the pair");
                let p_rank = profile.rank_of(person, &p_partner);
                let q_rank = profile.rank_of(person, &q_partner);
                let prefers = match (p_rank, q_rank) {
                    (Some(a), Some(b)) => a < b,
                    (Some(_), None) => true,
                    _ => false,
                };
                if prefers {
                    attacks.push((p_name.clone(), q_name.clone()));
                }
            }
        }
    }
    for person in &alone_names {
        for p_name in &pair_names {
            if partner_in(p_name, person).is_some() {
                attacks.push((p_name.clone(), person.clone()));
            }
        }
    }
    Framework::new(args, &attacks)
}

/// The worked-example frameworks, byte-identical across runs.
pub fn fixtures() -> BTreeMap<&'static str, Framework> {
    fn build(args: &[&str], attacks: &[(&str, &str)]) -> Framework {
        Framework::new(args.to_vec(), attacks).expect("fixture is well-formed")
    }

    let mut map = BTreeMap::new();
    map.insert(
        "fig1a",
        build(&["a", "b", "c", "d"], &[("a", "b"), ("c", "b"), ("b", "d")]),
    );
    map.insert(
        "fig1b",
        build(
            &["a", "b", "c", "d"],
            &[("a", "a"), ("a", "b"), ("c", "b"), ("b", "d")],
        ),
    );
    map.insert(
        "fig3",
        build(
            &["a", "b", "c", "d", "e", "f", "g"],
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
        ),
    );
    map.insert(
        "fig4",
        build(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "a"),
                ("c", "d"),
                ("d", "e"),
            ],
        ),
    );
    map.insert(
        "sec61_loop",
        build(
            &["a", "b", "c", "d", "e"],
            &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
        ),
    );
    map.insert(
        "sec62_unattacked",
        build(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "c"), ("c", "d"), ("d", "e")],
        ),
    );
    map.insert(
        "srp_a",
        build(
            &["jm", "am", "ar", "jr", "js", "ms", "as", "rs", "s"],
            &[
                ("jm", "am"),
                ("am", "ar"),
                ("ar", "jr"),
                ("jr", "jm"),
                ("jm", "js"),
                ("jm", "ms"),
                ("am", "ms"),
                ("am", "as"),
                ("ar", "as"),
                ("ar", "rs"),
                ("jr", "rs"),
                ("jr", "js"),
                ("js", "s"),
                ("ms", "s"),
                ("as", "s"),
                ("rs", "s"),
            ],
        ),
    );
    map.insert(
        "srp_b",
        build(
            &["jm", "am", "aj", "js", "ms", "as", "s"],
            &[
                ("jm", "am"),
                ("am", "aj"),
                ("aj", "jm"),
                ("jm", "js"),
                ("jm", "ms"),
                ("am", "ms"),
                ("am", "as"),
                ("aj", "as"),
                ("aj", "js"),
                ("js", "s"),
                ("ms", "s"),
                ("as", "s"),
            ],
        ),
    );
    map
}

/// The preference profiles behind the two roommates fixtures.
pub fn srp_profile_a() -> PreferenceProfile {
    PreferenceProfile::parse(
        "m: j > a > s\n\
         j: r > m > s\n\
         r: a > j > s\n\
         a: m > r > s\n\
         s: alone\n",
    )
    .expect("profile is well-formed")
}

pub fn srp_profile_b() -> PreferenceProfile {
    PreferenceProfile::parse(
        "m: j > a > s\n\
         j: a > m > s\n\
         a: m > j > s\n\
         s: alone\n",
    )
    .expect("profile is well-formed")
}

/// A seed-determined random digraph: every ordered pair, self-loops
/// included, becomes an attack with probability `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Framework> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!(
            "attack probability must be in [0,1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let args: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if rng.gen::<f64>() < p {
                attacks.push((format!("a{i}"), format!("a{j}")));
            }
        }
    }
    Framework::new(args, &attacks)
}
