//! Equational proof chains (`.drv` files) and their replay against models.
//!
//! ```text
//! derivation: L2_7_item1
//! ambient: I20
//! goal: (x -> 0') -> y ≈ (x -> y') -> y
//! step: (x -> 0') -> y
//! step: ((y' -> x) -> (0' -> y)')'   by I
//! ```
//!
//! A step may cite several labels separated by commas; `def` marks a purely
//! notational step. `note:` lines and `#` comments are kept as free text.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Assignment, Element, FiniteGroupoid};
use crate::checker::{membership, CheckError, CompiledIdentity, Sat, DEFAULT_VAR_CAP};
use crate::registry::{Registry, RegistryError};
use crate::term::{parse_identity, parse_term, Identity, ParseError, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: unresolved label `{label}`")]
    UnresolvedLabel { line: usize, label: String },
    #[error("missing `{0}:` header")]
    MissingHeader(&'static str),
    #[error("derivation has no steps")]
    NoSteps,
    #[error("{which} step does not match the goal's {side}")]
    Endpoint {
        which: &'static str,
        side: &'static str,
    },
    #[error("no models of the ambient variety `{0}` in the model set")]
    NoModels(String),
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

pub const DEF_LABEL: &str = "def";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// Expanded term.
    pub term: Term,
    /// Labels after `by`; empty for the first step.
    pub by: Vec<String>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub name: String,
    pub ambient: String,
    pub goal: Identity,
    pub steps: Vec<Step>,
    pub notes: Vec<String>,
}

fn split_by(rest: &str) -> (&str, Option<&str>) {
    match rest.rfind(" by ") {
        Some(i) => (&rest[..i], Some(&rest[i + 4..])),
        None => (rest, None),
    }
}

pub fn label_resolves(reg: &Registry, label: &str) -> bool {
    label == DEF_LABEL || reg.identity(label).is_ok()
}

/// Parses and resolves a `.drv` text. Endpoints must match the goal after
/// expansion.
pub fn parse_derivation(text: &str, reg: &Registry) -> Result<Derivation, DerivationError> {
    let mut name = None;
    let mut ambient = None;
    let mut goal = None;
    let mut steps = Vec::new();
    let mut notes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            return Err(DerivationError::Syntax {
                line,
                msg: format!("expected `key: value`, got `{content}`"),
            });
        };
        let rest = rest.trim();
        match key.trim() {
            "derivation" => name = Some(rest.to_string()),
            "ambient" => {
                reg.get_variety(rest)?;
                ambient = Some(rest.to_string());
            }
            "goal" => {
                goal = Some(
                    parse_identity(rest)
                        .map_err(|source| DerivationError::Parse { line, source })?,
                )
            }
            "note" => notes.push(rest.to_string()),
            "step" => {
                let (term_text, labels) = split_by(rest);
                let term = parse_term(term_text.trim())
                    .map_err(|source| DerivationError::Parse { line, source })?;
                let by: Vec<String> = labels
                    .map(|l| {
                        l.split(',')
                            .map(|s| s.trim().to_string())
                            .filter(|s| !s.is_empty())
                            .collect()
                    })
                    .unwrap_or_default();
                for label in &by {
                    if !label_resolves(reg, label) {
                        return Err(DerivationError::UnresolvedLabel {
                            line,
                            label: label.clone(),
                        });
                    }
                }
                if !steps.is_empty() && by.is_empty() {
                    return Err(DerivationError::Syntax {
                        line,
                        msg: "step needs a `by` justification".into(),
                    });
                }
                steps.push(Step { term, by, line });
            }
            other => {
                return Err(DerivationError::Syntax {
                    line,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let name = name.ok_or(DerivationError::MissingHeader("derivation"))?;
    let ambient = ambient.unwrap_or_else(|| "I20".to_string());
    let goal = goal.ok_or(DerivationError::MissingHeader("goal"))?;
    let (first, last) = match (steps.first(), steps.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(DerivationError::NoSteps),
    };
    if first.term != goal.lhs {
        return Err(DerivationError::Endpoint {
            which: "first",
            side: "left-hand side",
        });
    }
    if last.term != goal.rhs {
        return Err(DerivationError::Endpoint {
            which: "last",
            side: "right-hand side",
        });
    }
    Ok(Derivation {
        name: name.to_string(),
        ambient,
        goal: goal.named(name),
        steps,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum StepVerdict {
    Holds,
    Violated {
        model: Vec<Vec<Element>>,
        witness: Assignment,
    },
}

impl StepVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, StepVerdict::Holds)
    }
}

/// Checks `prev ≈ next` on every model given; the caller restricts `models`
/// to the ambient variety.
pub fn check_step_semantic(
    prev: &Term,
    next: &Term,
    models: &[FiniteGroupoid],
) -> Result<StepVerdict, DerivationError> {
    let id = CompiledIdentity::new(&Identity::new(prev.clone(), next.clone()), DEFAULT_VAR_CAP)?;
    for m in models {
        if let Sat::Fails(witness) = id.check(m) {
            return Ok(StepVerdict::Violated {
                model: m.rows(),
                witness,
            });
        }
    }
    Ok(StepVerdict::Holds)
}

/// One-sided matching of `pat` against `t`, extending `s`.
fn matches(pat: &Term, t: &Term, s: &mut BTreeMap<String, Term>) -> bool {
    match (pat, t) {
        (Term::Var(v), _) => match s.get(v) {
            Some(bound) => bound == t,
            None => {
                s.insert(v.clone(), t.clone());
                true
            }
        },
        (Term::Zero, Term::Zero) => true,
        (Term::Impl(pl, pr), Term::Impl(tl, tr)) => matches(pl, tl, s) && matches(pr, tr, s),
        _ => false,
    }
}

fn rewrites_once(prev: &Term, next: &Term, l: &Term, r: &Term) -> bool {
    let mut s = BTreeMap::new();
    if matches(l, prev, &mut s) && matches(r, next, &mut s) {
        return true;
    }
    match (prev, next) {
        (Term::Impl(a, b), Term::Impl(c, d)) => {
            (b == d && rewrites_once(a, c, l, r)) || (a == c && rewrites_once(b, d, l, r))
        }
        _ => false,
    }
}

/// True iff `next` comes from `prev` by rewriting exactly one subterm with
/// an instance of `law`, in either direction.
pub fn check_step_syntactic(prev: &Term, next: &Term, law: &Identity) -> bool {
    let law = law.expand();
    rewrites_once(prev, next, &law.lhs, &law.rhs) || rewrites_once(prev, next, &law.rhs, &law.lhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Semantic,
    Syntactic,
    /// Both are run; only the semantic verdicts decide the outcome.
    Both,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "semantic" => Ok(Mode::Semantic),
            "syntactic" => Ok(Mode::Syntactic),
            "both" => Ok(Mode::Both),
            _ => Err(format!("unknown mode `{s}` (semantic, syntactic, both)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    /// 1-based position of the step reached.
    pub step: usize,
    pub line: usize,
    pub from: String,
    pub to: String,
    pub by: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantic: Option<StepVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syntactic: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationReport {
    pub name: String,
    pub ambient: String,
    pub mode: Mode,
    pub models: usize,
    pub steps: Vec<StepReport>,
    /// Goal checked directly on the same models.
    pub goal_holds: bool,
    pub first_bad: Option<usize>,
    pub ok: bool,
}

impl DerivationReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} (ambient {}, {} models, {:?} mode)\n",
            self.name, self.ambient, self.models, self.mode
        );
        for s in &self.steps {
            let sem = match &s.semantic {
                None => "-".to_string(),
                Some(StepVerdict::Holds) => "holds".into(),
                Some(StepVerdict::Violated { model, witness }) => {
                    format!("VIOLATED in {model:?} at {witness}")
                }
            };
            let syn = match s.syntactic {
                None => "-",
                Some(true) => "one rewrite",
                Some(false) => "not a single rewrite",
            };
            out.push_str(&format!(
                "step {:>2} (line {}): {}  [by {}]\n    semantic: {sem}; syntactic: {syn}\n",
                s.step,
                s.line,
                s.to,
                s.by.join(", "),
            ));
        }
        out.push_str(&format!(
            "goal {} on these models; {}\n",
            if self.goal_holds { "holds" } else { "FAILS" },
            if self.ok {
                "derivation ok"
            } else {
                "derivation FAILED"
            }
        ));
        out
    }
}

pub fn check_derivation(
    d: &Derivation,
    models: &[FiniteGroupoid],
    mode: Mode,
    reg: &Registry,
) -> Result<DerivationReport, DerivationError> {
    let ambient = reg.get_variety(&d.ambient)?;
    let mut scope = Vec::new();
    for m in models {
        if membership(m, &ambient)?.member {
            scope.push(m.clone());
        }
    }
    if scope.is_empty() && mode != Mode::Syntactic {
        return Err(DerivationError::NoModels(d.ambient.clone()));
    }
    let mut steps = Vec::new();
    let mut first_bad = None;
    for (i, pair) in d.steps.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let semantic = match mode {
            Mode::Syntactic => None,
            _ => Some(check_step_semantic(&prev.term, &next.term, &scope)?),
        };
        let syntactic = match mode {
            Mode::Semantic => None,
            _ => Some(next.by.iter().any(|label| {
                if label == DEF_LABEL {
                    return prev.term == next.term;
                }
                reg.identity(label)
                    .map(|law| check_step_syntactic(&prev.term, &next.term, law))
                    .unwrap_or(false)
            })),
        };
        let bad = match mode {
            Mode::Syntactic => syntactic == Some(false),
            _ => semantic.as_ref().is_some_and(|v| !v.holds()),
        };
        if bad && first_bad.is_none() {
            first_bad = Some(i + 2);
        }
        steps.push(StepReport {
            step: i + 2,
            line: next.line,
            from: prev.term.print(true),
            to: next.term.print(true),
            by: next.by.clone(),
            semantic,
            syntactic,
        });
    }
    let goal = CompiledIdentity::new(&d.goal, DEFAULT_VAR_CAP)?;
    let goal_holds = scope.iter().all(|m| goal.check(m).holds());
    Ok(DerivationReport {
        name: d.name.clone(),
        ambient: d.ambient.clone(),
        mode,
        models: scope.len(),
        steps,
        goal_holds,
        ok: first_bad.is_none(),
        first_bad,
    })
}

/// Replaces step `index` (0-based) by its prime. Since `t ≈ t'` fails in
/// the two-element Boolean algebra, the fault is always observable when
/// that algebra is in scope.
pub fn inject_fault(d: &Derivation, index: usize) -> Derivation {
    let mut out = d.clone();
    let t = out.steps[index].term.clone();
    out.steps[index].term = Term::imp(t, Term::zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;
    use crate::term::parse_identity;

    const ITEM1: &str = "derivation: item1
ambient: I20
goal: (x -> 0') -> y ≈ (x -> y') -> y
step: (x -> 0') -> y
step: ((y' -> x) -> (0' -> y)')'   by I
step: ((y' -> x) -> y')'           by L2_4.a
step: ((y' -> x) -> (y' -> y)')'   by L2_4.d
step: (x -> y') -> y               by I
";

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn parse_item1() {
        let r = Registry::standard();
        let d = parse_derivation(ITEM1, &r).unwrap();
        assert_eq!(d.steps.len(), 5);
        assert_eq!(d.steps[1].by, vec!["I"]);
        assert_eq!(d.steps[2].line, 6);
    }

    #[test]
    fn parse_errors() {
        let r = Registry::standard();
        let wrong_end = ITEM1.replace(
            "step: (x -> y') -> y               by I",
            "step: (x -> y) -> y by I",
        );
        assert!(matches!(
            parse_derivation(&wrong_end, &r),
            Err(DerivationError::Endpoint { which: "last", .. })
        ));
        let bad_label = ITEM1.replace("by L2_4.d", "by L9_99");
        assert!(matches!(
            parse_derivation(&bad_label, &r),
            Err(DerivationError::UnresolvedLabel { line: 7, .. })
        ));
        assert!(matches!(
            parse_derivation("derivation: x\ngoal: x ≈ x\n", &r),
            Err(DerivationError::NoSteps)
        ));
    }

    #[test]
    fn syntactic_steps() {
        let r = Registry::standard();
        let i20 = r.identity("I20").unwrap();
        assert!(check_step_syntactic(&t("x''"), &t("x"), i20));
        assert!(check_step_syntactic(&t("y -> x''"), &t("y -> x"), i20));
        // two stacked rewrites at once
        assert!(!check_step_syntactic(&t("x'' -> y''"), &t("x -> y"), i20));
        let ax = r.identity("I").unwrap();
        assert!(check_step_syntactic(
            &t("(x -> 0') -> y"),
            &t("((y' -> x) -> (0' -> y)')'"),
            ax
        ));
    }

    #[test]
    fn semantic_steps() {
        let two_b = builtin("two_b").unwrap();
        let ms = [
            FiniteGroupoid::trivial(),
            two_b.clone(),
            builtin("fig3").unwrap(),
        ];
        let v = check_step_semantic(&t("(x -> 0') -> y"), &t("(y -> x)'"), &ms).unwrap();
        assert!(!v.holds());
        assert!(check_step_semantic(&t("x -> y"), &t("x -> y"), &ms)
            .unwrap()
            .holds());
        let goal = parse_identity("(x -> 0') -> y ≈ (x -> y') -> y").unwrap();
        assert!(check_step_semantic(&goal.lhs, &goal.rhs, &ms)
            .unwrap()
            .holds());
    }

    #[test]
    fn no_models() {
        let r = Registry::standard();
        let d = parse_derivation(ITEM1, &r).unwrap();
        assert!(matches!(
            check_derivation(&d, &[], Mode::Semantic, &r),
            Err(DerivationError::NoModels(_))
        ));
    }
}
