//! One line per acceptance criterion; exits nonzero if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use implicator_lab::algebra::{builtin, FiniteGroupoid};
use implicator_lab::checker::{check_suite, identities_hold, membership, satisfies, Sat};
use implicator_lab::cli;
use implicator_lab::derivation::{
    check_derivation, inject_fault, parse_derivation, Mode, StepVerdict,
};
use implicator_lab::enumerator::{enumerate_models, models_up_to, naive_enumerate, EnumOptions};
use implicator_lab::lab::{
    equality_check, find_counterexample, glivenko_check, inclusion_report,
    lattice_equivalence_check, semilattice_check, Battery, Counterexample,
};
use implicator_lab::registry::Registry;
use implicator_lab::term::parse_identity;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn models3() -> Vec<FiniteGroupoid> {
    models_up_to(3, &EnumOptions::default()).unwrap().models
}

fn member(reg: &Registry, m: &FiniteGroupoid, v: &str) -> bool {
    membership(m, &reg.get_variety(v).unwrap()).unwrap().member
}

fn enumeration_ground_truth() -> Outcome {
    let t = Instant::now();
    let mut out = Vec::new();
    let code = cli::run(
        ["igl", "enum", "--size", "2", "--iso"],
        &mut out,
        &mut Vec::new(),
    );
    let el = t.elapsed();
    ensure(code == 0, format!("exit code {code}"))?;
    let mut got: Vec<FiniteGroupoid> = String::from_utf8(out)
        .map_err(e)?
        .lines()
        .map(|l| {
            let f: implicator_lab::algebra::AlgebraFile = serde_json::from_str(l).map_err(e)?;
            f.to_groupoid().map_err(e)
        })
        .collect::<Result<_, _>>()?;
    got.sort();
    let mut want: Vec<FiniteGroupoid> = ["two_z", "two_s", "two_b"]
        .iter()
        .map(|n| builtin(n).unwrap().canonical_form())
        .collect();
    want.sort();
    ensure(got == want, "models differ from 2_z, 2_s, 2_b")?;
    ensure(el < Duration::from_secs(1), format!("took {el:?}"))?;
    Ok(format!("3 models in {el:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=3 {
        let t = Instant::now();
        let naive = naive_enumerate(n, false).map_err(e)?;
        let fast = enumerate_models(n, &EnumOptions::default())
            .map_err(e)?
            .models;
        let el = t.elapsed();
        ensure(
            naive == fast,
            format!("size {n}: {} vs {} classes", naive.len(), fast.len()),
        )?;
        if n == 3 {
            ensure(el < Duration::from_secs(10), format!("n=3 took {el:?}"))?;
        }
        notes.push(format!("n={n}: {}", fast.len()));
    }
    Ok(notes.join(", "))
}

fn lemma_batteries() -> Outcome {
    let reg = Registry::standard();
    let models = models3();
    let t = Instant::now();
    let suites = [
        "L2_4",
        "L2_5",
        "L2_6",
        "L2_7",
        "L2_9",
        "L9_1",
        "L10_1",
        "L10_2",
        "L12_1",
        "L13_1",
        "T8_1",
        "T8_2",
        "T8_3",
        "L4_aux",
        "L7_4",
        "L7_lattice_aux",
    ];
    for s in suites {
        let claims = reg.get_suite(s).map_err(e)?;
        if s == "L2_7" {
            ensure(claims.len() == 30, "L2_7 must have 30 items")?;
        }
        if s == "L2_9" {
            ensure(claims.len() == 6, "L2_9 must have 6 items")?;
        }
        let rep = check_suite(&models, claims, &reg).map_err(e)?;
        if let Some(v) = rep.violations.first() {
            return Err(format!(
                "{s}: {} on {:?}: {}",
                v.claim_id, v.model, v.violation.detail
            ));
        }
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(30), format!("took {el:?}"))?;
    Ok(format!("{} suites, 0 violations, {el:?}", suites.len()))
}

fn variety_equalities() -> Outcome {
    let reg = Registry::standard();
    let models = models3();
    let pairs = [
        ("I20", "MID"),
        ("MID", "JID"),
        ("MC&I20", "SCP&I20"),
        ("I10", "ID&A"),
        ("MC&ID", "I10&C"),
        ("MC&MID&A", "C&I10"),
    ];
    for (a, b) in pairs {
        let r = equality_check(
            &reg.get_variety(a).map_err(e)?,
            &reg.get_variety(b).map_err(e)?,
            &models,
        )
        .map_err(e)?;
        ensure(
            r.equal,
            format!("{a} ≠ {b}, separated by {:?}", r.first_separator()),
        )?;
    }
    Ok(format!(
        "{} equalities on {} models",
        pairs.len(),
        models.len()
    ))
}

fn inclusions_and_witnesses() -> Outcome {
    let reg = Registry::standard();
    let v = |s: &str| reg.get_variety(s).unwrap();
    let models = models3();
    for (a, b) in [("Z", "C"), ("C", "A"), ("A", "I31"), ("SCP", "MC")] {
        let r = inclusion_report(&v(a), &v(b), &models).map_err(e)?;
        ensure(r.holds_on_set, format!("{a} ⊄ {b}"))?;
    }
    let witness = |alg: &str, id: &str| -> Result<Option<Vec<usize>>, String> {
        let a = builtin(alg).map_err(e)?;
        Ok(
            match satisfies(&a, reg.identity(id).map_err(e)?).map_err(e)? {
                Sat::Holds => None,
                Sat::Fails(w) => Some(w.values),
            },
        )
    };
    let sep = |alg: &str, yes: &str, no: &str| {
        let a = builtin(alg).unwrap();
        member(&reg, &a, yes) && !member(&reg, &a, no)
    };
    ensure(
        sep("fig1", "MC", "SCP"),
        "fig1 does not separate MC from SCP",
    )?;
    ensure(
        witness("fig1", "SCP")? == Some(vec![2, 2]),
        "fig1 witness is not (2,2)",
    )?;
    ensure(
        sep("two_z", "MC", "MID"),
        "two_z does not separate MC from MID",
    )?;
    ensure(
        sep("fig3", "MID", "MC"),
        "fig3 does not separate MID from MC",
    )?;
    ensure(
        sep("two_b", "I31", "A"),
        "two_b does not separate I31 from A",
    )?;
    let assoc = parse_identity("(x -> y) -> z ≈ x -> (y -> z)").unwrap();
    ensure(
        matches!(satisfies(&builtin("two_b").unwrap(), &assoc).map_err(e)?, Sat::Fails(w) if w.values == vec![0, 0, 0]),
        "two_b is not non-associative at (0,0,0)",
    )?;
    ensure(sep("two_s", "C", "Z"), "two_s does not separate C from Z")?;

    let t = Instant::now();
    let r = find_counterexample(&v("A"), &v("C").identities, 4, Some(600.0)).map_err(e)?;
    let el = t.elapsed();
    let outcome = match &r {
        Counterexample::Found {
            model,
            identity,
            witness,
        } => {
            format!(
                "A∖C witness of size {} failing {identity} at {witness}: {model:?}",
                model.len()
            )
        }
        Counterexample::NoneUpTo { max_n } => format!("A∖C search: no witness up to n={max_n}"),
        Counterexample::Incomplete { searched_up_to } => {
            return Err(format!(
                "A∖C search did not finish within 600 s (complete below {searched_up_to})"
            ))
        }
    };
    Ok(format!("{outcome} ({el:?})"))
}

fn glivenko() -> Outcome {
    let reg = Registry::standard();
    let models = models3();
    for m in &models {
        let r = glivenko_check(m, &reg).map_err(e)?;
        ensure(r.passed(), format!("{:?}: {r:?}", m.rows()))?;
    }
    Ok(format!("{} models", models.len()))
}

fn lattice_theorem() -> Outcome {
    let reg = Registry::standard();
    let models = models3();
    let mut lattices = 0;
    for m in &models {
        let r = lattice_equivalence_check(m, &reg).map_err(e)?;
        ensure(r.consistent(), format!("{:?}: {r:?}", m.rows()))?;
        lattices += r.is_lattice as usize;
    }
    Ok(format!("{} models, {lattices} lattices", models.len()))
}

fn semilattices() -> Outcome {
    let reg = Registry::standard();
    let mut count = 0;
    for m in models3().iter().filter(|m| member(&reg, m, "C&I10")) {
        ensure(semilattice_check(m).passed(), format!("{:?}", m.rows()))?;
        count += 1;
    }
    ensure(count > 0, "no models of C ∩ I10")?;
    Ok(format!("{count} models of C ∩ I10"))
}

fn characterizations() -> Outcome {
    let reg = Registry::standard();
    let models = models3();
    let boolean = parse_identity("x /\\ x' ≈ 0").unwrap();
    let kleene = parse_identity("(x -> x) -> (y -> y) ≈ y -> y").unwrap();
    let holds =
        |m: &FiniteGroupoid, id| identities_hold(m, std::slice::from_ref(id)).unwrap().member;
    for m in &models {
        if member(&reg, m, "MID") {
            ensure(
                holds(m, &boolean) == member(&reg, m, "BA"),
                format!("Boolean characterization at {:?}", m.rows()),
            )?;
        }
        if member(&reg, m, "I20") {
            ensure(
                holds(m, &kleene) == member(&reg, m, "KL"),
                format!("Kleene characterization at {:?}", m.rows()),
            )?;
        }
        ensure(
            member(&reg, m, "Abbott") == member(&reg, m, "BA"),
            format!("Abbott ≠ BA at {:?}", m.rows()),
        )?;
    }
    let abbott2 = reg.identity("Abbott.2").map_err(e)?;
    for name in ["kleene3", "dm4"] {
        let a = builtin(name).map_err(e)?;
        ensure(member(&reg, &a, "DM"), format!("{name} not in DM"))?;
        ensure(
            !satisfies(&a, abbott2).map_err(e)?.holds(),
            format!("{name} satisfies Abbott (2)"),
        )?;
    }
    Ok(format!(
        "{} models; kleene3, dm4 fail Abbott (2)",
        models.len()
    ))
}

fn derivation_replay() -> Outcome {
    let reg = Registry::standard();
    let t = Instant::now();
    let models = models3();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("derivations");
    let mut steps = 0;
    for item in ["01", "02", "15"] {
        let path = dir.join(format!("l2_7_item{item}.drv"));
        let d = parse_derivation(&std::fs::read_to_string(&path).map_err(e)?, &reg).map_err(e)?;
        let rep = check_derivation(&d, &models, Mode::Semantic, &reg).map_err(e)?;
        ensure(
            rep.ok,
            format!("item {item}: step {:?} fails", rep.first_bad),
        )?;
        for i in 0..d.steps.len() {
            let bad =
                check_derivation(&inject_fault(&d, i), &models, Mode::Semantic, &reg).map_err(e)?;
            let witnessed = bad
                .steps
                .iter()
                .any(|s| matches!(s.semantic, Some(StepVerdict::Violated { .. })));
            ensure(
                !bad.ok && witnessed,
                format!("item {item}: fault in step {} not detected", i + 1),
            )?;
            steps += 1;
        }
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(5), format!("took {el:?}"))?;
    Ok(format!(
        "items 1, 2, 15 replay; {steps} injected faults caught; {el:?}"
    ))
}

fn fault_sensitivity() -> Outcome {
    let two_s = builtin("two_s").unwrap();
    let broken = two_s.with_entry(1, 0, 0);
    let rep = Battery::new(2)
        .override_builtin("two_s", broken)
        .map_err(e)?
        .run()
        .map_err(e)?;
    ensure(!rep.passed, "mutated 2_s went unnoticed")?;
    let failures: Vec<_> = rep.failures().collect();
    ensure(
        failures.iter().all(|f| f.witness.is_some()),
        "failure without witness",
    )?;
    let f = failures
        .iter()
        .find(|f| f.witness.as_ref().is_some_and(|w| w.assignment.is_some()))
        .or(failures.first())
        .ok_or("no failing entry")?;
    let w = f.witness.as_ref().unwrap();
    let at = w
        .assignment
        .as_ref()
        .map(|a| format!(" at {a}"))
        .unwrap_or_default();
    Ok(format!(
        "{} failing claims, e.g. {}: {}{at} on {:?}",
        failures.len(),
        f.claim_id,
        w.identity.as_deref().unwrap_or("table"),
        w.model.as_ref().ok_or("no model")?
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("enumeration ground truth", enumeration_ground_truth),
        ("oracle equivalence", oracle_equivalence),
        ("lemma batteries", lemma_batteries),
        ("variety equalities", variety_equalities),
        ("inclusions and witnesses", inclusions_and_witnesses),
        ("Glivenko battery", glivenko),
        ("lattice theorem", lattice_theorem),
        ("semilattice identification", semilattices),
        (
            "Boolean, Kleene and Abbott characterizations",
            characterizations,
        ),
        ("derivation replay", derivation_replay),
        ("fault sensitivity", fault_sensitivity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("PASS {:>2} {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
