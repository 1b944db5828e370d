use std::path::PathBuf;

use implicator_lab::derivation::{
    check_derivation, check_step_semantic, check_step_syntactic, inject_fault, parse_derivation,
    Derivation, Mode, StepVerdict,
};
use implicator_lab::enumerator::{models_up_to, EnumOptions};
use implicator_lab::registry::Registry;

fn shipped() -> Vec<(PathBuf, Derivation)> {
    let reg = Registry::standard();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("derivations");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|f| {
            let d = parse_derivation(&std::fs::read_to_string(&f).unwrap(), &reg).unwrap();
            (f, d)
        })
        .collect()
}

#[test]
fn shipped_derivations_replay() {
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    let all = shipped();
    assert!(all.len() >= 3);
    for (f, d) in &all {
        let rep = check_derivation(d, &models, Mode::Both, &reg).unwrap();
        assert!(rep.ok, "{}: {}", f.display(), rep.render_text());
        assert!(rep.goal_holds);
    }
}

#[test]
fn every_injected_fault_is_caught() {
    let reg = Registry::standard();
    let models = models_up_to(3, &EnumOptions::default()).unwrap().models;
    for (f, d) in shipped() {
        for i in 0..d.steps.len() {
            let rep =
                check_derivation(&inject_fault(&d, i), &models, Mode::Semantic, &reg).unwrap();
            assert!(!rep.ok, "{} step {i}", f.display());
            let bad = rep.first_bad.expect("a bad step");
            assert!(bad <= i + 2, "{} step {i} reported at {bad}", f.display());
            let witnessed = rep
                .steps
                .iter()
                .any(|s| matches!(s.semantic, Some(StepVerdict::Violated { .. })));
            assert!(witnessed, "{} step {i}", f.display());
        }
    }
}

/// A single rewrite by a law that holds in the ambient variety yields a
/// semantically valid step.
#[test]
fn syntactic_steps_are_semantically_valid() {
    let reg = Registry::standard();
    let i20 = reg.get_variety("I20").unwrap();
    let models: Vec<_> = models_up_to(3, &EnumOptions::default())
        .unwrap()
        .models
        .into_iter()
        .filter(|m| implicator_lab::checker::membership(m, &i20).unwrap().member)
        .collect();
    let mut seen = 0;
    for (_, d) in shipped() {
        let mut prev = d.goal.lhs.clone();
        for s in &d.steps {
            let mut laws = Vec::new();
            for l in &s.by {
                if let Ok(id) = reg.identity(l) {
                    laws.push(id.clone());
                }
            }
            if laws
                .iter()
                .any(|law| check_step_syntactic(&prev, &s.term, law))
            {
                seen += 1;
                assert_eq!(
                    check_step_semantic(&prev, &s.term, &models).unwrap(),
                    StepVerdict::Holds
                );
            }
            prev = s.term.clone();
        }
    }
    assert!(seen > 10);
}

#[test]
fn bad_labels_are_rejected() {
    let reg = Registry::standard();
    let text = "name: t\ngoal: x'' ≈ x''\n  x''\n  x'' by L99_9\n";
    assert!(parse_derivation(text, &reg).is_err());
}
