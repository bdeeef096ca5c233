//! The logic-programming route to paracoherent reasoning: the framework
//! translation, the epistemic transformations, gap-minimal model selection,
//! and the externally-supported (shadow atom) rewriting.

use std::collections::BTreeSet;

use crate::af::{ArgSet, Framework};
use crate::error::{Error, Result};
use crate::lp::{answer_sets_with_cap, Atom, Interpretation, Program, Rule, DEFAULT_ATOM_CAP};
use crate::semantics::ExtensionSet;

/// Translates a framework into its program: one normal rule per argument,
/// empty positive body, the argument's attackers negated. Unattacked
/// arguments become facts.
pub fn af_to_program(f: &Framework) -> Program {
    Program::new((0..f.arg_count()).map(|i| {
        Rule::new(
            [Atom::plain(f.arg_name(i))],
            [],
            f.attackers_of(i).iter().map(|j| Atom::plain(f.arg_name(j))),
        )
    }))
}

fn belief_of(atom: &Atom) -> Result<Atom> {
    match atom {
        Atom::Plain(n) => Ok(Atom::Belief(n.clone())),
        other => Err(Error::Precondition(format!(
            "cannot form a belief atom over non-plain atom `{other}`"
        ))),
    }
}

/// The epistemic transformation that regains models for incoherent
/// programs. Each rule with a non-empty negative body is replaced by a
/// guessing rule over fresh auxiliary atoms and belief atoms, projection
/// rules, and constraints; rules without negation are copied unchanged.
///
/// For a source rule with head `a_1 ∨ … ∨ a_l` and negative body
/// `c_1, …, c_n` the replacement is:
///
/// ```text
/// l__r_1 | … | l__r_l | k__c_1 | … | k__c_n :- <positive body>.
/// a_i :- l__r_i.                      for each i
/// :- l__r_i, c_j.                     for each i, j
/// l__r_i :- a_i, l__r_k.              for each i != k
/// ```
///
/// The self-referential instance of the last schema is inert and dropped.
pub fn kappa_transform(p: &Program) -> Result<Program> {
    let mut out = Program::default();
    for (rid, rule) in p.rules().iter().enumerate() {
        if rule.neg_body.is_empty() {
            out.push(rule.clone());
            continue;
        }
        let heads: Vec<Atom> = rule.head.iter().cloned().collect();
        let lambdas: Vec<Atom> = (1..=heads.len())
            .map(|i| Atom::Aux { rule: rid, pos: i })
            .collect();
        let beliefs: Vec<Atom> = rule.neg_body.iter().map(belief_of).collect::<Result<_>>()?;

        out.push(Rule::new(
            lambdas.iter().cloned().chain(beliefs),
            rule.pos_body.iter().cloned(),
            [],
        ));
        for (i, head) in heads.iter().enumerate() {
            out.push(Rule::new([head.clone()], [lambdas[i].clone()], []));
            for c in &rule.neg_body {
                out.push(Rule::constraint([lambdas[i].clone(), c.clone()], []));
            }
        }
        for (i, head) in heads.iter().enumerate() {
            for (k, lambda_k) in lambdas.iter().enumerate() {
                if i != k {
                    out.push(Rule::new(
                        [lambdas[i].clone()],
                        [head.clone(), lambda_k.clone()],
                        [],
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The collapsed transformation available on framework-shaped programs,
/// where each auxiliary atom can be unified with its head atom: a rule
/// `a :- not c_1, …, not c_n` becomes the disjunctive fact
/// `a | k__c_1 | … | k__c_n` plus the constraints `:- a, c_j`.
pub fn kappa_simplified(p: &Program) -> Result<Program> {
    require_framework_shape(p)?;
    let mut out = Program::default();
    for rule in p.rules() {
        if rule.neg_body.is_empty() {
            out.push(rule.clone());
            continue;
        }
        let head = rule.head.iter().next().expect("shape checked").clone();
        let beliefs: Vec<Atom> = rule.neg_body.iter().map(belief_of).collect::<Result<_>>()?;
        out.push(Rule::new([head.clone()].into_iter().chain(beliefs), [], []));
        for c in &rule.neg_body {
            out.push(Rule::constraint([head.clone(), c.clone()], []));
        }
    }
    Ok(out)
}

/// The extension of [`kappa_transform`] whose maximal canonical answer
/// sets are the semi-equilibrium models: adds `k__a :- a` for every
/// signature atom and a belief-level copy of every source rule.
pub fn ht_transform(p: &Program) -> Result<Program> {
    let mut out = kappa_transform(p)?;
    for name in p.signature() {
        out.push(Rule::new(
            [Atom::Belief(name.clone())],
            [Atom::Plain(name)],
            [],
        ));
    }
    for rule in p.rules() {
        let head: Vec<Atom> = rule
            .head
            .iter()
            .chain(rule.neg_body.iter())
            .map(belief_of)
            .collect::<Result<_>>()?;
        let body: Vec<Atom> = rule.pos_body.iter().map(belief_of).collect::<Result<_>>()?;
        out.push(Rule::new(head, body, []));
    }
    Ok(out)
}

/// A model paired with its gap: the belief atoms it holds without their
/// plain counterpart. Gap comparison drives paracoherent model selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapProfile {
    pub model: Interpretation,
    pub gap: BTreeSet<Atom>,
}

impl GapProfile {
    pub fn of(model: Interpretation) -> GapProfile {
        let gap = gap(&model);
        GapProfile { model, gap }
    }
}

/// The belief atoms held without their plain counterpart being true.
pub fn gap(i: &Interpretation) -> BTreeSet<Atom> {
    i.iter()
        .filter(|a| match a {
            Atom::Belief(n) => !i.contains(&Atom::Plain(n.clone())),
            _ => false,
        })
        .cloned()
        .collect()
}

/// Keeps the interpretations whose gap is not a strict superset of some
/// other interpretation's gap. Equal gaps do not dominate each other.
pub fn maximal_canonical(models: &[Interpretation]) -> Vec<Interpretation> {
    let profiles: Vec<GapProfile> = models.iter().cloned().map(GapProfile::of).collect();
    profiles
        .iter()
        .filter(|p| {
            !profiles
                .iter()
                .any(|other| other.gap != p.gap && other.gap.is_subset(&p.gap))
        })
        .map(|p| p.model.clone())
        .collect()
}

/// The reduced form a paracoherent answer set is reported in: the true
/// atoms plus the gap. Belief atoms whose plain counterpart is true are
/// determined by the transformation and dropped; on the translated
/// programs this makes the two paracoherent semantics produce literally
/// the same sets.
fn reduced_form(m: &Interpretation) -> Interpretation {
    let g = gap(m);
    m.filtered(|a| match a {
        Atom::Plain(_) => true,
        Atom::Belief(_) => g.contains(a),
        _ => false,
    })
}

fn mc_of_transformed(transformed: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    let stable = answer_sets_with_cap(transformed, cap)?;
    let selected = maximal_canonical(&stable);
    let projected: BTreeSet<Interpretation> = selected.iter().map(reduced_form).collect();
    Ok(projected.into_iter().collect())
}

/// Semi-stable models: maximal canonical answer sets of the epistemic
/// transformation, in reduced form over plain and belief atoms.
pub fn sst_models(p: &Program) -> Result<Vec<Interpretation>> {
    sst_models_with_cap(p, DEFAULT_ATOM_CAP)
}

pub fn sst_models_with_cap(p: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    mc_of_transformed(&kappa_transform(p)?, cap)
}

/// Semi-equilibrium models: as [`sst_models`], over the HT transformation.
pub fn seq_models(p: &Program) -> Result<Vec<Interpretation>> {
    seq_models_with_cap(p, DEFAULT_ATOM_CAP)
}

pub fn seq_models_with_cap(p: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    mc_of_transformed(&ht_transform(p)?, cap)
}

/// Drops everything but plain atoms and de-duplicates: the projection onto
/// the base signature.
pub fn projected_models(models: &[Interpretation]) -> Vec<Interpretation> {
    let set: BTreeSet<Interpretation> = models.iter().map(|m| m.filtered(Atom::is_plain)).collect();
    set.into_iter().collect()
}

fn require_framework_shape(p: &Program) -> Result<()> {
    if p.is_framework_shaped() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "program is not framework-shaped (normal rules, empty positive bodies, one rule per head atom)"
                .into(),
        ))
    }
}

/// The externally-supported rewriting of a framework-shaped program: each
/// negated atom `c` also gets `not s__c` in the body, and every shadow atom
/// is made free by the complementary pair `s__c :- not n__c` /
/// `n__c :- not s__c`.
pub fn mes_program(p: &Program) -> Result<Program> {
    require_framework_shape(p)?;
    let mut out = Program::default();
    let mut shadowed: BTreeSet<String> = BTreeSet::new();
    for rule in p.rules() {
        let mut neg: Vec<Atom> = rule.neg_body.iter().cloned().collect();
        for c in &rule.neg_body {
            let name = c.base_name().expect("shape checked").to_string();
            neg.push(Atom::Shadow(name.clone()));
            shadowed.insert(name);
        }
        out.push(Rule::new(rule.head.iter().cloned(), [], neg));
    }
    for name in shadowed {
        out.push(Rule::new(
            [Atom::shadow(name.clone())],
            [],
            [Atom::complement(name.clone())],
        ));
        out.push(Rule::new(
            [Atom::complement(name.clone())],
            [],
            [Atom::shadow(name)],
        ));
    }
    Ok(out)
}

/// Answer sets of the externally-supported rewriting whose set of true
/// shadow atoms is subset-minimal, reported with their shadows (the
/// complement atoms of the encoding are stripped).
pub fn mes_models(p: &Program) -> Result<Vec<Interpretation>> {
    mes_models_with_cap(p, DEFAULT_ATOM_CAP)
}

pub fn mes_models_with_cap(p: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    let stable = answer_sets_with_cap(&mes_program(p)?, cap)?;
    let shadow_parts: Vec<BTreeSet<Atom>> = stable
        .iter()
        .map(|m| {
            m.iter()
                .filter(|a| matches!(a, Atom::Shadow(_)))
                .cloned()
                .collect()
        })
        .collect();
    Ok(stable
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !shadow_parts
                .iter()
                .any(|other| other != &shadow_parts[*i] && other.is_subset(&shadow_parts[*i]))
        })
        .map(|(_, m)| m.filtered(|a| !matches!(a, Atom::ShadowComplement(_))))
        .collect())
}

/// Maps plain-atom interpretations onto argument sets of `f`. Every plain
/// atom must name an argument of `f`.
pub fn models_as_extensions(f: &Framework, models: &[Interpretation]) -> Result<ExtensionSet> {
    let sets: Vec<ArgSet> = projected_models(models)
        .iter()
        .map(|m| {
            let names: Vec<&str> = m.iter().filter_map(|a| a.base_name()).collect();
            f.arg_set(names)
        })
        .collect::<Result<_>>()?;
    Ok(ExtensionSet::from_sets(f, sets))
}

/// The whole route in one call: translate `f`, take semi-equilibrium
/// models, project onto the arguments.
pub fn seq_extensions(f: &Framework) -> Result<ExtensionSet> {
    seq_extensions_with_cap(f, DEFAULT_ATOM_CAP)
}

pub fn seq_extensions_with_cap(f: &Framework, cap: usize) -> Result<ExtensionSet> {
    let models = seq_models_with_cap(&af_to_program(f), cap)?;
    models_as_extensions(f, &models)
}

pub fn sst_extensions_with_cap(f: &Framework, cap: usize) -> Result<ExtensionSet> {
    let models = sst_models_with_cap(&af_to_program(f), cap)?;
    models_as_extensions(f, &models)
}

pub fn mes_extensions_with_cap(f: &Framework, cap: usize) -> Result<ExtensionSet> {
    let models = mes_models_with_cap(&af_to_program(f), cap)?;
    models_as_extensions(f, &models)
}
