//! Variety inclusion/equality over model sets, counterexample search, the
//! structural checks (lattice, A″, semilattice) and the full battery.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{builtin, AlgebraError, Assignment, Element, FiniteGroupoid, BUILTIN_NAMES};
use crate::checker::{check_suite, membership, satisfies, CheckError, Failure, Sat};
use crate::enumerator::{enumerate_models, models_up_to, EnumError, EnumOptions};
use crate::registry::{Registry, RegistryError, VarietyDef};
use crate::term::{parse_identity, Identity};

#[derive(Debug, Error)]
pub enum LabError {
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("counterexample search is limited to size {max}, got {got}")]
    SearchTooLarge { got: usize, max: usize },
}

pub const MAX_SEARCH_SIZE: usize = 4;

fn member(a: &FiniteGroupoid, v: &VarietyDef) -> Result<bool, LabError> {
    Ok(membership(a, v)?.member)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violator {
    pub model: Vec<Vec<Element>>,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    pub holds_on_set: bool,
    /// Models in the first variety but not the second, with the failing
    /// identity of the second.
    pub violators: Vec<Violator>,
}

pub fn inclusion_report(
    v1: &VarietyDef,
    v2: &VarietyDef,
    models: &[FiniteGroupoid],
) -> Result<InclusionReport, LabError> {
    let results = models
        .par_iter()
        .map(|m| -> Result<Option<Violator>, LabError> {
            if !member(m, v1)? {
                return Ok(None);
            }
            let m2 = membership(m, v2)?;
            Ok((!m2.member).then(|| Violator {
                model: m.rows(),
                failure: m2.failure,
            }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let violators: Vec<Violator> = results.into_iter().flatten().collect();
    Ok(InclusionReport {
        holds_on_set: violators.is_empty(),
        violators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub equal: bool,
    pub only_first: Vec<Vec<Vec<Element>>>,
    pub only_second: Vec<Vec<Vec<Element>>>,
}

impl EqualityReport {
    pub fn first_separator(&self) -> Option<&Vec<Vec<Element>>> {
        self.only_first.first().or(self.only_second.first())
    }
}

/// Compares membership vectors model by model.
pub fn equality_check(
    v1: &VarietyDef,
    v2: &VarietyDef,
    models: &[FiniteGroupoid],
) -> Result<EqualityReport, LabError> {
    let bits = models
        .par_iter()
        .map(|m| Ok((member(m, v1)?, member(m, v2)?)))
        .collect::<Result<Vec<_>, LabError>>()?;
    let mut only_first = Vec::new();
    let mut only_second = Vec::new();
    for (m, (a, b)) in models.iter().zip(bits) {
        match (a, b) {
            (true, false) => only_first.push(m.rows()),
            (false, true) => only_second.push(m.rows()),
            _ => {}
        }
    }
    Ok(EqualityReport {
        equal: only_first.is_empty() && only_second.is_empty(),
        only_first,
        only_second,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Counterexample {
    Found {
        model: FiniteGroupoidRows,
        identity: String,
        witness: Assignment,
    },
    NoneUpTo {
        max_n: usize,
    },
    /// Budget ran out; sizes below `searched_up_to` were fully covered.
    Incomplete {
        searched_up_to: usize,
    },
}

pub type FiniteGroupoidRows = Vec<Vec<Element>>;

impl Counterexample {
    pub fn model(&self) -> Option<FiniteGroupoid> {
        match self {
            Counterexample::Found { model, .. } => {
                Some(FiniteGroupoid::from_rows(model).expect("search output is well-formed"))
            }
            _ => None,
        }
    }
}

/// Smallest model of `sat` (by size, then canonical table) violating one of
/// `fail`. The search enforces `sat`'s identities while filling tables.
pub fn find_counterexample(
    sat: &VarietyDef,
    fail: &[Identity],
    max_n: usize,
    max_seconds: Option<f64>,
) -> Result<Counterexample, LabError> {
    if max_n > MAX_SEARCH_SIZE {
        return Err(LabError::SearchTooLarge {
            got: max_n,
            max: MAX_SEARCH_SIZE,
        });
    }
    let start = Instant::now();
    for n in 1..=max_n {
        let remaining = max_seconds.map(|s| (s - start.elapsed().as_secs_f64()).max(0.0));
        let opts = EnumOptions {
            max_seconds: remaining,
            ..Default::default()
        }
        .within(sat);
        let e = enumerate_models(n, &opts)?;
        for m in &e.models {
            for id in fail {
                if let Sat::Fails(w) = satisfies(m, id)? {
                    return Ok(Counterexample::Found {
                        model: m.rows(),
                        identity: id.label(),
                        witness: w,
                    });
                }
            }
        }
        if !e.complete {
            return Ok(Counterexample::Incomplete {
                searched_up_to: n - 1,
            });
        }
    }
    Ok(Counterexample::NoneUpTo { max_n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    /// ∧ and ∨ are commutative, associative and absorb each other.
    pub is_lattice: bool,
    pub absorption: bool,
    pub dm_identity: bool,
    pub dm_member: bool,
}

impl LatticeReport {
    pub fn consistent(&self) -> bool {
        let v = [
            self.is_lattice,
            self.absorption,
            self.dm_identity,
            self.dm_member,
        ];
        v.iter().all(|&b| b) || v.iter().all(|&b| !b)
    }
}

fn ids(texts: &[&str]) -> Vec<Identity> {
    texts
        .iter()
        .map(|t| parse_identity(t).expect("built-in identity parses"))
        .collect()
}

fn all_hold(a: &FiniteGroupoid, ids: &[Identity]) -> Result<bool, LabError> {
    for id in ids {
        if !satisfies(a, id)?.holds() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lattice_equivalence_check(
    a: &FiniteGroupoid,
    reg: &Registry,
) -> Result<LatticeReport, LabError> {
    let mj = a.mj_reduct();
    let n = a.size();
    let mut is_lattice = true;
    'outer: for x in 0..n {
        for y in 0..n {
            if mj.meet(x, y) != mj.meet(y, x)
                || mj.join(x, y) != mj.join(y, x)
                || mj.meet(x, mj.join(x, y)) != x
                || mj.join(x, mj.meet(x, y)) != x
            {
                is_lattice = false;
                break 'outer;
            }
            for z in 0..n {
                if mj.meet(mj.meet(x, y), z) != mj.meet(x, mj.meet(y, z))
                    || mj.join(mj.join(x, y), z) != mj.join(x, mj.join(y, z))
                {
                    is_lattice = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(LatticeReport {
        is_lattice,
        absorption: all_hold(a, &ids(&["x /\\ (x \\/ y) ≈ x", "x \\/ (x /\\ y) ≈ x"]))?,
        dm_identity: all_hold(a, &ids(&["(x -> y) -> x ≈ x"]))?,
        dm_member: member(a, &reg.get_variety("DM")?)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlivenkoReport {
    pub closed: bool,
    pub subalgebra: Option<FiniteGroupoidRows>,
    pub involutive: bool,
    /// Pairs (A ⊨ identity, A″ ∈ variety) for DM, KL and BA.
    pub dm: (bool, bool),
    pub kl: (bool, bool),
    pub ba: (bool, bool),
}

impl GlivenkoReport {
    pub fn passed(&self) -> bool {
        self.closed
            && self.involutive
            && self.dm.0 == self.dm.1
            && self.kl.0 == self.kl.1
            && self.ba.0 == self.ba.1
    }
}

pub fn glivenko_check(a: &FiniteGroupoid, reg: &Registry) -> Result<GlivenkoReport, LabError> {
    let sub = match a.double_prime_subalgebra() {
        Ok(s) => s,
        Err(AlgebraError::NotClosed { .. }) => {
            return Ok(GlivenkoReport {
                closed: false,
                subalgebra: None,
                involutive: false,
                dm: (false, false),
                kl: (false, false),
                ba: (false, false),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let on_a = |t: &str| all_hold(a, &ids(&[t]));
    let in_sub = |v: &str| -> Result<bool, LabError> { member(&sub, &reg.get_variety(v)?) };
    Ok(GlivenkoReport {
        closed: true,
        involutive: all_hold(&sub, &ids(&["x'' ≈ x"]))?,
        dm: (on_a("(x'' -> y'') -> x'' ≈ x''")?, in_sub("DM")?),
        kl: (
            on_a("(y'' -> y'') -> (x'' -> x'') ≈ x'' -> x''")?,
            in_sub("KL")?,
        ),
        ba: (on_a("x'' -> x'' ≈ 0'")?, in_sub("BA")?),
        subalgebra: Some(sub.rows()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemilatticeReport {
    pub associative: bool,
    pub commutative: bool,
    pub idempotent: bool,
    pub zero_is_identity: bool,
}

impl SemilatticeReport {
    pub fn passed(&self) -> bool {
        self.associative && self.commutative && self.idempotent && self.zero_is_identity
    }
}

/// The join-semilattice-with-0 axioms, reading → as ∨.
pub fn semilattice_check(a: &FiniteGroupoid) -> SemilatticeReport {
    let n = a.size();
    let e = || 0..n;
    SemilatticeReport {
        associative: e()
            .all(|x| e().all(|y| e().all(|z| a.imp(a.imp(x, y), z) == a.imp(x, a.imp(y, z))))),
        commutative: e().all(|x| e().all(|y| a.imp(x, y) == a.imp(y, x))),
        idempotent: e().all(|x| a.imp(x, x) == x),
        zero_is_identity: e().all(|x| a.imp(0, x) == x),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A search finished without deciding (no witness within the bound).
    Open,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<FiniteGroupoidRows>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Assignment>,
}

impl Witness {
    fn model(m: &FiniteGroupoid) -> Self {
        Witness {
            model: Some(m.rows()),
            ..Default::default()
        }
    }

    fn rows(rows: &FiniteGroupoidRows) -> Self {
        Witness {
            model: Some(rows.clone()),
            ..Default::default()
        }
    }

    fn failure(m: &FiniteGroupoid, f: Option<Failure>) -> Self {
        Witness {
            model: Some(m.rows()),
            identity: f.as_ref().map(|f| f.identity.clone()),
            assignment: f.map(|f| f.witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub claim_id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub max_n: usize,
    pub scope: String,
    pub models: usize,
    pub passed: bool,
    pub entries: Vec<Entry>,
}

impl BatteryReport {
    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, claim_id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.claim_id == claim_id)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} ({} models)\n", self.scope, self.models);
        let width = self
            .entries
            .iter()
            .map(|e| e.claim_id.len())
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Open => "open",
            };
            out.push_str(&format!("{status}  {:width$}  {}", e.claim_id, e.paper_ref));
            if !e.detail.is_empty() {
                out.push_str(&format!("  [{}]", e.detail));
            }
            out.push('\n');
            if let (Status::Fail, Some(w)) = (e.status, &e.witness) {
                if let Some(m) = &w.model {
                    out.push_str(&format!("      model {m:?}\n"));
                }
                if let Some(id) = &w.identity {
                    out.push_str(&format!("      fails {id}"));
                    if let Some(a) = &w.assignment {
                        out.push_str(&format!(" at {a}"));
                    }
                    out.push('\n');
                }
            }
        }
        let fails = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} failed, {} open\n",
            self.entries.len(),
            fails,
            self.entries
                .iter()
                .filter(|e| e.status == Status::Open)
                .count()
        ));
        out
    }
}

/// Configurable battery run: builtin tables can be overridden and extra
/// models injected, which is how fault sensitivity is exercised.
#[derive(Clone, Debug)]
pub struct Battery {
    max_n: usize,
    registry: Registry,
    overrides: BTreeMap<String, FiniteGroupoid>,
    injected: Vec<FiniteGroupoid>,
    search_seconds: Option<f64>,
}

pub fn verify_paper(max_n: usize) -> Result<BatteryReport, LabError> {
    Battery::new(max_n).run()
}

struct Ctx<'a> {
    reg: &'a Registry,
    models: Vec<FiniteGroupoid>,
    entries: Vec<Entry>,
}

impl Ctx<'_> {
    fn push(
        &mut self,
        id: &str,
        paper_ref: &str,
        status: Status,
        witness: Option<Witness>,
        detail: impl Into<String>,
    ) {
        self.entries.push(Entry {
            claim_id: id.into(),
            paper_ref: paper_ref.into(),
            status,
            witness,
            detail: detail.into(),
        });
    }

    fn pass_if(
        &mut self,
        id: &str,
        paper_ref: &str,
        ok: bool,
        witness: Option<Witness>,
        detail: impl Into<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(
            id,
            paper_ref,
            status,
            if ok { None } else { witness },
            detail,
        );
    }

    fn v(&self, expr: &str) -> Result<VarietyDef, LabError> {
        Ok(self.reg.get_variety(expr)?)
    }

    fn equality(&mut self, id: &str, paper_ref: &str, a: &str, b: &str) -> Result<(), LabError> {
        let r = equality_check(&self.v(a)?, &self.v(b)?, &self.models)?;
        let w = r.first_separator().map(Witness::rows);
        self.pass_if(id, paper_ref, r.equal, w, format!("{a} = {b}"));
        Ok(())
    }

    fn inclusion(&mut self, id: &str, paper_ref: &str, a: &str, b: &str) -> Result<(), LabError> {
        let r = inclusion_report(&self.v(a)?, &self.v(b)?, &self.models)?;
        let w = r.violators.first().map(|v| Witness {
            model: Some(v.model.clone()),
            identity: v.failure.as_ref().map(|f| f.identity.clone()),
            assignment: v.failure.as_ref().map(|f| f.witness.clone()),
        });
        self.pass_if(id, paper_ref, r.holds_on_set, w, format!("{a} ⊆ {b}"));
        Ok(())
    }

    /// `m` is in `inside` and fails `outside`; optionally at a fixed assignment.
    fn separates(
        &mut self,
        id: &str,
        paper_ref: &str,
        m: &FiniteGroupoid,
        inside: &str,
        outside: &str,
        at: Option<&[Element]>,
    ) -> Result<(), LabError> {
        let m_in = membership(m, &self.v(inside)?)?;
        let m_out = membership(m, &self.v(outside)?)?;
        let mut ok = m_in.member && !m_out.member;
        if let (Some(vals), Some(f)) = (at, &m_out.failure) {
            ok &= f.witness.values == vals;
        }
        let failure = if m_in.member {
            m_out.failure.clone()
        } else {
            m_in.failure.clone()
        };
        let detail = match (&m_out.failure, ok) {
            (Some(f), true) => format!("in {inside}, fails {} at {}", f.identity, f.witness),
            _ => format!("expected in {inside} and not in {outside}"),
        };
        // the witness is the point of a separation, so it is kept on success
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(
            id,
            paper_ref,
            status,
            Some(Witness::failure(m, failure)),
            detail,
        );
        Ok(())
    }

    fn search(
        &mut self,
        id: &str,
        paper_ref: &str,
        sat: &str,
        fail: &str,
        max_n: usize,
        secs: Option<f64>,
    ) -> Result<(), LabError> {
        let fail_ids = self.v(fail)?.identities;
        let r = find_counterexample(&self.v(sat)?, &fail_ids, max_n.min(MAX_SEARCH_SIZE), secs)?;
        match r {
            Counterexample::Found {
                model,
                identity,
                witness,
            } => {
                let detail = format!("search: in {sat}, fails {identity} at {witness}");
                self.push(
                    id,
                    paper_ref,
                    Status::Pass,
                    Some(Witness {
                        model: Some(model),
                        identity: Some(identity),
                        assignment: Some(witness),
                    }),
                    detail,
                );
            }
            Counterexample::NoneUpTo { max_n } => self.push(
                id,
                paper_ref,
                Status::Open,
                None,
                format!("no witness of size ≤ {max_n}"),
            ),
            Counterexample::Incomplete { searched_up_to } => self.push(
                id,
                paper_ref,
                Status::Open,
                None,
                format!("budget exhausted; no witness of size ≤ {searched_up_to}"),
            ),
        }
        Ok(())
    }
}

fn builtin_ref(name: &str) -> &'static str {
    match name {
        "two_z" | "two_s" | "two_b" => "Fig. 4",
        "fig1" => "Fig. 1",
        "fig3" => "Fig. 3",
        _ => "Abbott theorem",
    }
}

impl Battery {
    pub fn new(max_n: usize) -> Self {
        Battery {
            max_n,
            registry: Registry::standard(),
            overrides: BTreeMap::new(),
            injected: Vec::new(),
            search_seconds: None,
        }
    }

    pub fn with_registry(mut self, reg: Registry) -> Self {
        self.registry = reg;
        self
    }

    /// Replaces a named builtin table everywhere the battery uses it.
    pub fn override_builtin(mut self, name: &str, table: FiniteGroupoid) -> Result<Self, LabError> {
        if !BUILTIN_NAMES.contains(&name) {
            return Err(AlgebraError::UnknownBuiltin(name.into()).into());
        }
        self.overrides.insert(name.into(), table);
        Ok(self)
    }

    /// Adds a model to the checked set.
    pub fn inject(mut self, m: FiniteGroupoid) -> Self {
        self.injected.push(m);
        self
    }

    pub fn search_budget(mut self, seconds: Option<f64>) -> Self {
        self.search_seconds = seconds;
        self
    }

    fn builtin(&self, name: &str) -> Result<FiniteGroupoid, LabError> {
        match self.overrides.get(name) {
            Some(g) => Ok(g.clone()),
            None => Ok(builtin(name)?),
        }
    }

    pub fn run(&self) -> Result<BatteryReport, LabError> {
        let reg = &self.registry;
        let enumerated = models_up_to(self.max_n, &EnumOptions::default())?.models;
        let builtins: Vec<(&str, FiniteGroupoid)> = BUILTIN_NAMES
            .iter()
            .map(|n| Ok((*n, self.builtin(n)?)))
            .collect::<Result<_, LabError>>()?;

        // enumerated classes, then injected and builtin tables not already present
        let mut models = enumerated.clone();
        for m in self.injected.iter().chain(builtins.iter().map(|(_, g)| g)) {
            let key = if m.is_valid() {
                m.canonical_form()
            } else {
                m.clone()
            };
            if !models.contains(&key) {
                models.push(key);
            }
        }
        models.sort();
        let mut cx = Ctx {
            reg,
            models,
            entries: Vec::new(),
        };

        // the axioms themselves
        let invalid = cx
            .models
            .iter()
            .find_map(|m| m.validate_axioms().err().map(|e| (m.clone(), e)));
        let w = invalid.as_ref().map(|(m, _)| Witness::model(m));
        let detail = invalid
            .as_ref()
            .map(|(_, e)| e.to_string())
            .unwrap_or_default();
        cx.pass_if(
            "axioms.models_valid",
            "Def. 1.1",
            invalid.is_none(),
            w,
            detail,
        );
        for (name, g) in &builtins {
            let r = g.validate_axioms();
            let w = Witness {
                model: Some(g.rows()),
                identity: r.as_ref().err().map(|e| e.to_string()),
                assignment: None,
            };
            cx.pass_if(
                &format!("builtin.{name}.valid"),
                builtin_ref(name),
                r.is_ok(),
                Some(w),
                "",
            );
        }
        if self.max_n >= 2 {
            let mut expected: Vec<FiniteGroupoid> = ["two_z", "two_s", "two_b"]
                .iter()
                .map(|n| self.builtin(n).map(|g| g.canonical_form()))
                .collect::<Result<_, _>>()?;
            expected.sort();
            let found: Vec<FiniteGroupoid> = enumerated
                .iter()
                .filter(|m| m.size() == 2)
                .cloned()
                .collect();
            let missing = found
                .iter()
                .find(|m| !expected.contains(m))
                .or(expected.iter().find(|m| !found.contains(m)));
            cx.pass_if(
                "count.two_element",
                "Sec. 11",
                found == expected,
                missing.map(Witness::model),
                format!("{} two-element algebras", found.len()),
            );
        }

        // registry suites
        for suite in reg.suite_names() {
            let claims = reg.get_suite(&suite)?;
            let report = check_suite(&cx.models, claims, reg)?;
            for (c, summary) in claims.iter().zip(&report.claims) {
                let first = report.violations.iter().find(|v| v.claim_id == c.id);
                let w = first.map(|v| Witness {
                    model: Some(v.model.clone()),
                    identity: v.violation.identity.clone(),
                    assignment: v.violation.witness.clone(),
                });
                let detail = match first {
                    Some(v) => v.violation.detail.clone(),
                    None => format!("{} applicable models", summary.applicable),
                };
                cx.pass_if(&c.id, &c.source, summary.violations == 0, w, detail);
            }
        }

        // equalities and inclusions
        cx.equality("T2_10.I20_MID", "Thm 2.10", "I20", "MID")?;
        cx.equality("T2_10.MID_JID", "Thm 2.10", "MID", "JID")?;
        cx.equality("T6_3", "Thm 6.3", "MC&I20", "SCP&I20")?;
        cx.equality("T10_3", "Thm 10.3", "I10", "ID&A")?;
        cx.equality("T13_2", "Thm 13.2", "MC&ID", "I10&C")?;
        cx.equality("C11_5", "Cor. 11.5", "SL", "C&I10")?;
        cx.equality("C12_3.eq", "Cor. 12.3", "MC&MID&A", "SL")?;
        cx.inclusion("C12_3.SL_CP", "Cor. 12.3", "SL", "CP")?;
        cx.equality("C13_3", "Cor. 13.3", "MC&ID", "MC&MID&A")?;
        cx.inclusion("T6_2", "Thm 6.2", "SCP", "MC")?;
        cx.inclusion("T9_2.Z_C", "Thm 9.2", "Z", "C")?;
        cx.inclusion("T9_2.C_A", "Thm 9.2", "C", "A")?;
        cx.inclusion("T9_2.A_I31", "Thm 9.2", "A", "I31")?;
        cx.inclusion("T12_2", "Thm 12.2", "MC&MID&A", "C&I10&CP")?;

        // figure witnesses and strictness
        let g = |n: &str| self.builtin(n);
        cx.separates(
            "Fig1.MC_not_SCP",
            "Fig. 1",
            &g("fig1")?,
            "MC",
            "SCP",
            Some(&[2, 2]),
        )?;
        cx.separates("Fig2.MC_not_MID", "Fig. 2", &g("two_z")?, "MC", "MID", None)?;
        cx.separates("Fig3.MID_not_MC", "Fig. 3", &g("fig3")?, "MID", "MC", None)?;
        cx.separates("T9_2.Z_ne_C", "Thm 9.2", &g("two_s")?, "C", "Z", None)?;
        cx.separates(
            "T9_2.A_ne_I31",
            "Thm 9.2",
            &g("two_b")?,
            "I31",
            "A",
            Some(&[0, 0, 0]),
        )?;
        cx.search(
            "T9_2.C_ne_A",
            "Thm 9.2",
            "A",
            "C",
            self.max_n,
            self.search_seconds,
        )?;
        cx.search(
            "C12_3.SL_ne_CP",
            "Cor. 12.3",
            "CP",
            "SL",
            self.max_n,
            self.search_seconds,
        )?;
        for (name, variety, paper_ref) in [
            ("two_s", "SL", "Cor. 11.5"),
            ("two_z", "Z", "Cor. 11.8"),
            ("two_b", "BA", "Fig. 4"),
        ] {
            let m = g(name)?;
            let r = membership(&m, &cx.v(variety)?)?;
            cx.pass_if(
                &format!("{name}.in_{variety}"),
                paper_ref,
                r.member,
                Some(Witness::failure(&m, r.failure)),
                "",
            );
        }

        // structural checks over every model
        let models = cx.models.clone();
        let lattice = models
            .par_iter()
            .map(|m| lattice_equivalence_check(m, reg).map(|r| (m, r)))
            .collect::<Result<Vec<_>, _>>()?;
        let bad = lattice
            .iter()
            .find(|(m, r)| m.is_valid() && !r.consistent());
        cx.pass_if(
            "T7_3.lattice",
            "Thm 7.3",
            bad.is_none(),
            bad.map(|(m, _)| Witness::model(m)),
            bad.map(|(_, r)| format!("{r:?}")).unwrap_or_default(),
        );
        let gl = models
            .par_iter()
            .filter(|m| m.is_valid())
            .map(|m| glivenko_check(m, reg).map(|r| (m, r)))
            .collect::<Result<Vec<_>, _>>()?;
        let bad = gl.iter().find(|(_, r)| !r.passed());
        cx.pass_if(
            "T5_2.glivenko",
            "Lemma 5.1, Thm 5.2",
            bad.is_none(),
            bad.map(|(m, _)| Witness::model(m)),
            bad.map(|(_, r)| format!("{r:?}")).unwrap_or_default(),
        );
        let sl = cx.v("SL")?;
        let mut bad = None;
        let mut sl_models = 0;
        for m in &models {
            if member(m, &sl)? {
                sl_models += 1;
                if bad.is_none() && !semilattice_check(m).passed() {
                    bad = Some(m.clone());
                }
            }
        }
        cx.pass_if(
            "T11_4.semilattice",
            "Thm 11.4",
            bad.is_none(),
            bad.as_ref().map(Witness::model),
            format!("{sl_models} models of SL"),
        );

        // Kleene and De Morgan algebras that are not implication algebras
        let abbott2 = reg.identity("Abbott.2")?.clone();
        for name in ["kleene3", "dm4"] {
            let m = g(name)?;
            let dm = member(&m, &cx.v("DM")?)?;
            let a2 = satisfies(&m, &abbott2)?;
            let ok = dm && !a2.holds();
            let w = Witness {
                model: Some(m.rows()),
                identity: Some("Abbott.2".into()),
                assignment: a2.witness().cloned(),
            };
            let detail = match a2.witness() {
                Some(a) if dm => format!("in DM, fails Abbott.2 at {a}"),
                _ => "expected in DM and failing Abbott.2".into(),
            };
            cx.push(
                &format!("Abbott.{name}"),
                "Abbott theorem",
                if ok { Status::Pass } else { Status::Fail },
                Some(w),
                detail,
            );
        }

        let passed = cx.entries.iter().all(|e| e.status != Status::Fail);
        Ok(BatteryReport {
            max_n: self.max_n,
            scope: format!("verified on all models of size ≤ {}", self.max_n),
            models: cx.models.len(),
            passed,
            entries: cx.entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn models3() -> Vec<FiniteGroupoid> {
        models_up_to(3, &EnumOptions::default()).unwrap().models
    }

    #[test]
    fn inclusions_and_equalities() {
        let r = Registry::standard();
        let ms = models3();
        let v = |s: &str| r.get_variety(s).unwrap();
        assert!(
            inclusion_report(&v("SCP"), &v("MC"), &ms)
                .unwrap()
                .holds_on_set
        );
        assert!(
            inclusion_report(&v("Z"), &v("C"), &ms)
                .unwrap()
                .holds_on_set
        );
        let back = inclusion_report(&v("MC"), &v("SCP"), &ms).unwrap();
        let fig1 = builtin("fig1").unwrap().canonical_form();
        assert!(back.violators.iter().any(|x| x.model == fig1.rows()));
        assert!(equality_check(&v("I20"), &v("MID"), &ms).unwrap().equal);
        let sep = equality_check(&v("MC"), &v("MID"), &ms).unwrap();
        assert!(sep.only_first.contains(&builtin("two_z").unwrap().rows()));
        assert!(sep
            .only_second
            .contains(&builtin("fig3").unwrap().canonical_form().rows()));
    }

    #[test]
    fn counterexamples() {
        let r = Registry::standard();
        let v = |s: &str| r.get_variety(s).unwrap();
        let found = find_counterexample(&v("MC"), &v("SCP").identities, 3, None).unwrap();
        assert!(found
            .model()
            .unwrap()
            .is_isomorphic(&builtin("fig1").unwrap()));
        let found = find_counterexample(&v("I20"), &v("MC").identities, 3, None).unwrap();
        assert!(found
            .model()
            .unwrap()
            .is_isomorphic(&builtin("fig3").unwrap()));
        let none = find_counterexample(&v("SCP"), &v("MC").identities, 3, None).unwrap();
        assert_eq!(none, Counterexample::NoneUpTo { max_n: 3 });
        assert!(matches!(
            find_counterexample(&v("A"), &[], 5, None),
            Err(LabError::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn structural_checks_on_builtins() {
        let r = Registry::standard();
        let b = lattice_equivalence_check(&builtin("two_b").unwrap(), &r).unwrap();
        assert!(b.is_lattice && b.absorption && b.dm_identity && b.dm_member);
        let z = lattice_equivalence_check(&builtin("two_z").unwrap(), &r).unwrap();
        assert!(!z.is_lattice && !z.absorption && !z.dm_identity && !z.dm_member);

        let g = glivenko_check(&builtin("two_b").unwrap(), &r).unwrap();
        assert!(g.passed());
        assert_eq!(g.subalgebra, Some(builtin("two_b").unwrap().rows()));
        let g = glivenko_check(&builtin("two_z").unwrap(), &r).unwrap();
        assert!(g.passed());
        assert_eq!(g.subalgebra, Some(vec![vec![0]]));

        assert!(semilattice_check(&builtin("two_s").unwrap()).passed());
        assert!(semilattice_check(&FiniteGroupoid::trivial()).passed());
        assert!(!semilattice_check(&builtin("two_b").unwrap()).passed());
    }

    #[test]
    fn small_battery_passes() {
        let rep = verify_paper(2).unwrap();
        let fails: Vec<_> = rep.failures().collect();
        assert!(rep.passed, "{fails:#?}");
    }
}
