//! The acceptance suite: every exit criterion as one test, each printing a
//! pass line. Run with
//! `cargo test -p paraf-core --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;

use paraf_core::generators::{fixtures, gen_radial_star, gen_random, radial_star_odd_family};
use paraf_core::io::render_program;
use paraf_core::lp::{answer_sets, Atom, Interpretation};
use paraf_core::paraco::{
    af_to_program, mes_extensions_with_cap, projected_models, seq_extensions_with_cap, seq_models,
    sst_models,
};
use paraf_core::reasoning::{credulous, skeptical};
use paraf_core::semantics::{enumerate, ExtensionSet, SemanticsId};
use paraf_core::stabilizer::{
    global_minimal_stabilizers, is_stabilizer, minimal_stabilizers_of, paracoherent_extensions,
    paracoherent_via_shadow_with_cap,
};
use paraf_core::Framework;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion}: PASS - {what}");
}

fn ext_names(f: &Framework, es: &ExtensionSet) -> Vec<Vec<String>> {
    es.member_names(f).unwrap()
}

fn v(items: &[&[&str]]) -> Vec<Vec<String>> {
    items
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn interp(plain: &[&str], believed: &[&str]) -> Interpretation {
    plain
        .iter()
        .map(|n| Atom::plain(*n))
        .chain(believed.iter().map(|n| Atom::belief(*n)))
        .collect()
}

#[test]
fn criterion_1_first_example_families() {
    let fx = fixtures();
    let f = &fx["fig1a"];
    assert_eq!(
        ext_names(f, &enumerate(f, SemanticsId::Cf).unwrap()),
        v(&[
            &[],
            &["a"],
            &["b"],
            &["c"],
            &["d"],
            &["a", "c"],
            &["a", "d"],
            &["c", "d"],
            &["a", "c", "d"]
        ])
    );
    assert_eq!(
        ext_names(f, &enumerate(f, SemanticsId::Adm).unwrap()),
        v(&[
            &[],
            &["a"],
            &["c"],
            &["a", "c"],
            &["a", "d"],
            &["c", "d"],
            &["a", "c", "d"]
        ])
    );
    for sem in [
        SemanticsId::Comp,
        SemanticsId::Stb,
        SemanticsId::Sem,
        SemanticsId::Stage,
    ] {
        assert_eq!(
            ext_names(f, &enumerate(f, sem).unwrap()),
            v(&[&["a", "c", "d"]]),
            "{sem}"
        );
    }
    assert_eq!(
        ext_names(f, &paracoherent_extensions(f).unwrap()),
        v(&[&["a", "c", "d"]])
    );
    pass(
        1,
        "all seven families on the four-argument example are exact",
    );
}

#[test]
fn criterion_2_seven_argument_example() {
    let fx = fixtures();
    let f = &fx["fig3"];
    assert_eq!(
        ext_names(f, &enumerate(f, SemanticsId::Sem).unwrap()),
        v(&[&["a", "d"]])
    );
    assert_eq!(
        ext_names(f, &enumerate(f, SemanticsId::Stage).unwrap()),
        v(&[&["a", "c", "e"], &["a", "c", "g"], &["a", "d", "g"]])
    );
    assert_eq!(
        ext_names(f, &paracoherent_extensions(f).unwrap()),
        v(&[
            &["a", "d"],
            &["a", "c", "e"],
            &["a", "c", "g"],
            &["a", "d", "g"]
        ])
    );
    pass(
        2,
        "semi-stable, stage and paracoherent families on the incoherent example are exact",
    );
}

#[test]
fn criterion_3_stabilizer_examples() {
    let fx = fixtures();
    let f = &fx["fig4"];
    let a = f.arg_set(["a"]).unwrap();

    let names: Vec<&str> = f.arg_names().iter().map(|s| s.as_str()).collect();
    let mut accepted: BTreeSet<Vec<String>> = BTreeSet::new();
    for bits in 0u32..(1 << names.len()) {
        let members: Vec<&str> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, n)| *n)
            .collect();
        let s = f.arg_set(members.iter().copied()).unwrap();
        if is_stabilizer(f, &s, &a).unwrap() {
            accepted.insert(members.iter().map(|n| n.to_string()).collect());
        }
    }
    let expected: BTreeSet<Vec<String>> = [
        vec!["b".to_string(), "d".to_string()],
        vec!["a".to_string(), "b".to_string(), "d".to_string()],
        vec!["b".to_string(), "d".to_string(), "e".to_string()],
        vec![
            "a".to_string(),
            "b".to_string(),
            "d".to_string(),
            "e".to_string(),
        ],
    ]
    .into_iter()
    .collect();
    assert_eq!(accepted, expected);

    let ae = f.arg_set(["a", "e"]).unwrap();
    let minima = minimal_stabilizers_of(f, &ae).unwrap();
    assert_eq!(minima.len(), 1);
    assert_eq!(minima[0].member_names(f).unwrap(), ["b"]);

    assert!(paracoherent_extensions(f).unwrap().contains(&ae));
    pass(3, "the five-argument example accepts exactly the four stabilizers of {a}; {b} is the minimal stabilizer of {a,e}; {a,e} is paracoherent");
}

#[test]
fn criterion_4_translation_and_semi_equilibrium_models() {
    let fx = fixtures();
    let f = &fx["fig3"];
    let p = af_to_program(f);
    assert_eq!(
        render_program(&p),
        "a.\n\
         b :- not a.\n\
         c :- not b, not d.\n\
         d :- not c.\n\
         e :- not d, not g.\n\
         f :- not e, not f.\n\
         g :- not f.\n"
    );

    let models: BTreeSet<Interpretation> = seq_models(&p).unwrap().into_iter().collect();
    let expected: BTreeSet<Interpretation> = [
        interp(&["a", "c", "e"], &["f"]),
        interp(&["a", "c", "g"], &["e"]),
        interp(&["a", "d", "g"], &["e"]),
        interp(&["a", "d"], &["f"]),
    ]
    .into_iter()
    .collect();
    assert_eq!(models, expected);

    let projected: BTreeSet<Interpretation> = projected_models(&seq_models(&p).unwrap())
        .into_iter()
        .collect();
    let para: BTreeSet<Interpretation> = paracoherent_extensions(f)
        .unwrap()
        .member_names(f)
        .unwrap()
        .into_iter()
        .map(|names| names.iter().map(|n| Atom::plain(n.clone())).collect())
        .collect();
    assert_eq!(projected, para);
    pass(4, "the translated program and its four semi-equilibrium models are exact; projections match the paracoherent extensions");
}

#[test]
fn criterion_5_comparison_frameworks() {
    let fx = fixtures();

    let f = &fx["sec62_unattacked"];
    assert_eq!(
        ext_names(f, &enumerate(f, SemanticsId::Stage).unwrap()),
        v(&[&["a", "d"], &["b", "d"]])
    );
    assert_eq!(
        ext_names(f, &paracoherent_extensions(f).unwrap()),
        v(&[&["a", "d"], &["a", "e"]])
    );
    assert!(skeptical(f, SemanticsId::Para, "a").unwrap());
    assert!(!skeptical(f, SemanticsId::Stage, "a").unwrap());

    let f = &fx["sec61_loop"];
    let sem = enumerate(f, SemanticsId::Sem).unwrap();
    assert_eq!(sem.len(), 1);
    assert!(sem.first().unwrap().is_empty());
    assert_eq!(
        ext_names(f, &paracoherent_extensions(f).unwrap()),
        v(&[&["c", "e"]])
    );
    pass(5, "unattacked-argument and initial-loop comparisons are exact, with the expected skeptical statuses");
}

#[test]
fn criterion_6_radial_star_symmetry() {
    for n in [4usize, 6, 8] {
        let f = gen_radial_star(n).unwrap();
        let odd: Vec<String> = (1..=n)
            .step_by(2)
            .map(|i| format!("a{i}"))
            .chain(["c".to_string()])
            .collect();
        let even: Vec<String> = (2..=n)
            .step_by(2)
            .map(|i| format!("a{i}"))
            .chain(["c".to_string()])
            .collect();
        let mut expected = vec![odd, even];
        for e in &mut expected {
            e.sort();
        }
        expected.sort();
        let mut stable = ext_names(&f, &enumerate(&f, SemanticsId::Stb).unwrap());
        stable.sort();
        assert_eq!(stable, expected, "stable extensions at n={n}");
        assert!(skeptical(&f, SemanticsId::Stb, "c").unwrap(), "n={n}");
        assert!(skeptical(&f, SemanticsId::Para, "c").unwrap(), "n={n}");
    }

    for n in [3usize, 5, 7] {
        let f = gen_radial_star(n).unwrap();
        assert!(enumerate(&f, SemanticsId::Stb).unwrap().is_empty(), "n={n}");
        let mut para = ext_names(&f, &paracoherent_extensions(&f).unwrap());
        para.sort();
        let mut family = radial_star_odd_family(n);
        family.sort();
        assert_eq!(para, family, "closed-form family at n={n}");
        assert!(skeptical(&f, SemanticsId::Para, "c").unwrap(), "n={n}");
        assert!(credulous(&f, SemanticsId::Para, "c").unwrap(), "n={n}");
    }

    let f3 = gen_radial_star(3).unwrap();
    assert!(!credulous(&f3, SemanticsId::Stage, "c").unwrap());
    pass(6, "even stars have the two alternating stable extensions, odd stars the closed-form paracoherent family, with the expected acceptance of the centre");
}

#[test]
fn criterion_7_theorem_suite_on_random_frameworks() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240811);
    for trial in 0..200 {
        let n = rng.gen_range(0..=9);
        let p = rng.gen_range(0.05..0.65);
        let f = gen_random(n, p, rng.gen()).unwrap();
        let ctx = || format!("trial {trial}, attacks {:?}", f.attack_names());

        let cf = enumerate(&f, SemanticsId::Cf).unwrap();
        let adm = enumerate(&f, SemanticsId::Adm).unwrap();
        let comp = enumerate(&f, SemanticsId::Comp).unwrap();
        let stb = enumerate(&f, SemanticsId::Stb).unwrap();
        let sem = enumerate(&f, SemanticsId::Sem).unwrap();
        let stage = enumerate(&f, SemanticsId::Stage).unwrap();
        let para = paracoherent_extensions(&f).unwrap();

        // (a) stable extensions are paracoherent.
        for e in stb.iter() {
            assert!(para.contains(e), "(a) fails: {}", ctx());
        }
        // (b) with stable extensions present the two semantics coincide.
        if !stb.is_empty() {
            assert_eq!(
                ext_names(&f, &stb),
                ext_names(&f, &para),
                "(b) fails: {}",
                ctx()
            );
        }
        // (c) structural properties of stabilizer witnesses.
        let sigma = global_minimal_stabilizers(&f).unwrap();
        for w in sigma.witnesses() {
            assert!(
                paraf_core::af::is_conflict_free(&f, &w.extension).unwrap(),
                "(c1) fails: {}",
                ctx()
            );
            let s_plus = paraf_core::af::attacked_set(&f, &w.stabilizer).unwrap();
            assert!(
                w.extension.intersection(&s_plus).unwrap().is_empty(),
                "(c2) fails: {}",
                ctx()
            );
        }
        assert_eq!(
            sigma.contains_empty(),
            !stb.is_empty(),
            "(c3) fails: {}",
            ctx()
        );

        // (d) the two paracoherent program semantics project identically.
        let program = af_to_program(&f);
        let sst_t: BTreeSet<Interpretation> = projected_models(&sst_models(&program).unwrap())
            .into_iter()
            .collect();
        let seq_t: BTreeSet<Interpretation> = projected_models(&seq_models(&program).unwrap())
            .into_iter()
            .collect();
        assert_eq!(sst_t, seq_t, "(d) fails: {}", ctx());

        // (e) every route lands on the same extensions.
        let para_names = ext_names(&f, &para);
        let seq_ext = seq_extensions_with_cap(&f, 40).unwrap();
        let mes_ext = mes_extensions_with_cap(&f, 40).unwrap();
        let shadow = paracoherent_via_shadow_with_cap(&f, 32).unwrap();
        assert_eq!(
            para_names,
            ext_names(&f, &seq_ext),
            "(e) seq fails: {}",
            ctx()
        );
        assert_eq!(
            para_names,
            ext_names(&f, &mes_ext),
            "(e) mes fails: {}",
            ctx()
        );
        assert_eq!(
            para_names,
            ext_names(&f, &shadow),
            "(e) shadow fails: {}",
            ctx()
        );

        // (f) taxonomy inclusions.
        for e in sem.iter() {
            assert!(comp.contains(e), "(f) sem/comp fails: {}", ctx());
        }
        for e in comp.iter() {
            assert!(adm.contains(e), "(f) comp/adm fails: {}", ctx());
        }
        for e in adm.iter() {
            assert!(cf.contains(e), "(f) adm/cf fails: {}", ctx());
        }
        for e in stage.iter() {
            assert!(cf.contains(e), "(f) stage/cf fails: {}", ctx());
        }
        for e in stb.iter() {
            assert!(sem.contains(e), "(f) stb/sem fails: {}", ctx());
            assert!(stage.contains(e), "(f) stb/stage fails: {}", ctx());
        }
        for e in para.iter() {
            assert!(cf.contains(e), "(f) para/cf fails: {}", ctx());
        }

        // (g) paracoherent extensions always exist.
        assert!(!para.is_empty(), "(g) fails: {}", ctx());
    }
    pass(
        7,
        "all theorem-level invariants hold on 200 seeded random frameworks with up to 9 arguments",
    );
}

#[test]
fn criterion_8_answer_set_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1889);
    for trial in 0..200 {
        let p = common::random_normal_program(&mut rng, 8);
        let fast: BTreeSet<Interpretation> = answer_sets(&p).unwrap().into_iter().collect();
        let slow: BTreeSet<Interpretation> = common::answer_sets(&p).into_iter().collect();
        assert_eq!(fast, slow, "trial {trial} disagrees on:\n{p}");
    }
    pass(8, "the answer-set engine matches the definition-literal checker on 200 seeded normal programs with up to 8 atoms");
}

#[test]
fn criterion_9_roommates_narrative() {
    let fx = fixtures();

    let f = &fx["srp_a"];
    let stb = enumerate(f, SemanticsId::Stb).unwrap();
    assert_eq!(
        ext_names(f, &stb),
        v(&[&["am", "jr", "s"], &["ar", "jm", "s"]])
    );
    assert!(skeptical(f, SemanticsId::Stb, "s").unwrap());
    assert!(skeptical(f, SemanticsId::Para, "s").unwrap());

    let f = &fx["srp_b"];
    assert!(enumerate(f, SemanticsId::Stb).unwrap().is_empty());
    let para = paracoherent_extensions(f).unwrap();
    let expected: Vec<common::NameSet> = [
        common::name_set(&["jm", "s"]),
        common::name_set(&["am", "s"]),
        common::name_set(&["aj", "s"]),
    ]
    .into_iter()
    .collect();
    let mut expected_sorted = expected.clone();
    expected_sorted.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    assert_eq!(common::names_of(f, &para), expected_sorted);
    // The independent brute-force oracle agrees.
    assert_eq!(common::paracoherent(f), expected_sorted);
    assert!(skeptical(f, SemanticsId::Para, "s").unwrap());
    pass(9, "both roommates instances behave as narrated, with the odd instance pre-verified by the brute-force oracle");
}
