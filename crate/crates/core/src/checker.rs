//! Satisfaction of identities, variety membership and claim verdicts on
//! finite models, by exhaustive assignment.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Assignment, AxiomViolation, CompiledTerm, Element, FiniteGroupoid};
use crate::registry::{
    Claim, ClaimKind, Condition, ConditionKind, Registry, RegistryError, VarietyDef,
};
use crate::term::Identity;

pub const DEFAULT_VAR_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("identity `{identity}` has {vars} variables, above the cap of {cap}")]
    TooManyVars {
        identity: String,
        vars: usize,
        cap: usize,
    },
    #[error(transparent)]
    Registry(#[from] RegistryError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sat {
    Holds,
    Fails(Assignment),
}

impl Sat {
    pub fn holds(&self) -> bool {
        matches!(self, Sat::Holds)
    }

    pub fn witness(&self) -> Option<&Assignment> {
        match self {
            Sat::Holds => None,
            Sat::Fails(w) => Some(w),
        }
    }
}

/// An identity compiled once for repeated checks on many models.
#[derive(Clone, Debug)]
pub struct CompiledIdentity {
    pub vars: Vec<String>,
    lhs: CompiledTerm,
    rhs: CompiledTerm,
}

impl CompiledIdentity {
    pub fn new(id: &Identity, cap: usize) -> Result<Self, CheckError> {
        let id = id.expand();
        let vars = id.vars();
        if vars.len() > cap {
            return Err(CheckError::TooManyVars {
                identity: id.label(),
                vars: vars.len(),
                cap,
            });
        }
        let lhs = CompiledTerm::compile(&id.lhs, &vars).expect("vars cover the identity");
        let rhs = CompiledTerm::compile(&id.rhs, &vars).expect("vars cover the identity");
        Ok(CompiledIdentity { vars, lhs, rhs })
    }

    pub fn lhs(&self) -> &CompiledTerm {
        &self.lhs
    }

    pub fn rhs(&self) -> &CompiledTerm {
        &self.rhs
    }

    /// First failing assignment in lexicographic order (first variable most
    /// significant).
    pub fn check(&self, a: &FiniteGroupoid) -> Sat {
        let n = a.size();
        let k = self.vars.len();
        let mut values = vec![0; k];
        loop {
            if self.lhs.eval(a, &values) != self.rhs.eval(a, &values) {
                return Sat::Fails(Assignment::new(self.vars.clone(), values));
            }
            if !next_assignment(&mut values, n) {
                return Sat::Holds;
            }
        }
    }
}

/// Odometer step; returns false after the last assignment.
pub fn next_assignment(values: &mut [Element], n: usize) -> bool {
    for i in (0..values.len()).rev() {
        values[i] += 1;
        if values[i] < n {
            return true;
        }
        values[i] = 0;
    }
    false
}

pub fn satisfies(a: &FiniteGroupoid, id: &Identity) -> Result<Sat, CheckError> {
    satisfies_with_cap(a, id, DEFAULT_VAR_CAP)
}

pub fn satisfies_with_cap(
    a: &FiniteGroupoid,
    id: &Identity,
    cap: usize,
) -> Result<Sat, CheckError> {
    Ok(CompiledIdentity::new(id, cap)?.check(a))
}

/// Which defining identity failed, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub witness: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub failure: Option<Failure>,
}

impl Membership {
    fn yes() -> Self {
        Membership {
            member: true,
            failure: None,
        }
    }

    fn no(identity: String, witness: Assignment) -> Self {
        Membership {
            member: false,
            failure: Some(Failure { identity, witness }),
        }
    }
}

/// Base axioms first, then the variety's identities in registry order.
pub fn membership(a: &FiniteGroupoid, v: &VarietyDef) -> Result<Membership, CheckError> {
    if let Some(m) = base_membership(a) {
        return Ok(m);
    }
    identities_hold(a, &v.identities)
}

/// `None` when the base axioms hold.
fn base_membership(a: &FiniteGroupoid) -> Option<Membership> {
    match a.validate_axioms() {
        Ok(()) => None,
        Err(AxiomViolation::ZeroDoublePrime { .. }) => {
            Some(Membership::no("I0".into(), Assignment::new(vec![], vec![])))
        }
        Err(AxiomViolation::Implicator { x, y, z, .. }) => Some(Membership::no(
            "I".into(),
            Assignment::new(vec!["x".into(), "y".into(), "z".into()], vec![x, y, z]),
        )),
    }
}

/// Conjunction of identities (no base axioms).
pub fn identities_hold(a: &FiniteGroupoid, ids: &[Identity]) -> Result<Membership, CheckError> {
    for id in ids {
        if let Sat::Fails(w) = satisfies(a, id)? {
            return Ok(Membership::no(id.label(), w));
        }
    }
    Ok(Membership::yes())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// The claim holds (or, for equivalences, all members agree).
    Holds,
    /// The model is outside the ambient variety or misses a hypothesis.
    Vacuous,
    Violated(Violation),
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub detail: String,
    pub identity: Option<String>,
    pub witness: Option<Assignment>,
}

/// Evaluates a single condition on a model.
pub fn condition_holds(
    a: &FiniteGroupoid,
    c: &Condition,
    reg: &Registry,
) -> Result<Membership, CheckError> {
    match &c.kind {
        ConditionKind::Identities(ids) => identities_hold(a, ids),
        ConditionKind::Variety(v) => membership(a, &reg.get_variety(v)?),
    }
}

pub fn check_claim(a: &FiniteGroupoid, c: &Claim, reg: &Registry) -> Result<Verdict, CheckError> {
    if !membership(a, &reg.get_variety(&c.ambient)?)?.member {
        return Ok(Verdict::Vacuous);
    }
    match c.kind {
        ClaimKind::Unconditional | ClaimKind::Conditional => {
            for h in &c.hypotheses {
                if !condition_holds(a, h, reg)?.member {
                    return Ok(Verdict::Vacuous);
                }
            }
            for b in &c.body {
                let m = condition_holds(a, b, reg)?;
                if let Some(f) = m.failure {
                    return Ok(Verdict::Violated(Violation {
                        detail: format!("{} fails", f.identity),
                        identity: Some(f.identity),
                        witness: Some(f.witness),
                    }));
                }
            }
            Ok(Verdict::Holds)
        }
        ClaimKind::Equivalence => {
            let results = c
                .body
                .iter()
                .map(|b| condition_holds(a, b, reg))
                .collect::<Result<Vec<_>, _>>()?;
            if results.iter().all(|m| m.member) || results.iter().all(|m| !m.member) {
                return Ok(Verdict::Holds);
            }
            let truth = c
                .body
                .iter()
                .zip(&results)
                .map(|(b, m)| format!("{}={}", b.label, m.member))
                .collect::<Vec<_>>()
                .join(", ");
            let f = results.iter().find_map(|m| m.failure.clone());
            Ok(Verdict::Violated(Violation {
                detail: format!("members disagree: {truth}"),
                identity: f.as_ref().map(|f| f.identity.clone()),
                witness: f.map(|f| f.witness),
            }))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteViolation {
    pub claim_id: String,
    pub model: Vec<Vec<Element>>,
    pub violation: Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim_id: String,
    pub source: String,
    /// Models on which the claim was non-vacuous.
    pub applicable: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub models: usize,
    pub claims: Vec<ClaimSummary>,
    /// Sorted by model order, then claim order.
    pub violations: Vec<SuiteViolation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every claim on every model; models are processed in parallel and
/// the report is ordered as if run serially over the sorted model list.
pub fn check_suite(
    models: &[FiniteGroupoid],
    claims: &[Claim],
    reg: &Registry,
) -> Result<SuiteReport, CheckError> {
    let mut sorted: Vec<&FiniteGroupoid> = models.iter().collect();
    sorted.sort();
    let per_model = sorted
        .par_iter()
        .map(|m| {
            claims
                .iter()
                .map(|c| check_claim(m, c, reg))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut claims_out: Vec<ClaimSummary> = claims
        .iter()
        .map(|c| ClaimSummary {
            claim_id: c.id.clone(),
            source: c.source.clone(),
            applicable: 0,
            violations: 0,
        })
        .collect();
    let mut violations = Vec::new();
    for (m, verdicts) in sorted.iter().zip(per_model) {
        for (i, v) in verdicts.into_iter().enumerate() {
            match v {
                Verdict::Vacuous => {}
                Verdict::Holds => claims_out[i].applicable += 1,
                Verdict::Violated(violation) => {
                    claims_out[i].applicable += 1;
                    claims_out[i].violations += 1;
                    violations.push(SuiteViolation {
                        claim_id: claims[i].id.clone(),
                        model: m.rows(),
                        violation,
                    });
                }
            }
        }
    }
    Ok(SuiteReport {
        models: sorted.len(),
        claims: claims_out,
        violations,
    })
}
