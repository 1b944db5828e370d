//! Catalog of named identities, varieties and checkable claims.
//!
//! Every variety implicitly contains the two base axioms `I` and `I0`;
//! [`VarietyDef::identities`] lists only the additional defining identities.
//! Variety names can be intersected with `&` (or `∧`, `∩`): `"MC&MID&A"`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::term::{parse_identity, Identity, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown identity label `{0}`")]
    UnknownLabel(String),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: duplicate name `{name}`")]
    Duplicate { line: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDef {
    pub name: String,
    /// Defining identities on top of the base axioms, flattened through
    /// `refines`.
    pub identities: Vec<Identity>,
    pub refines: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Unconditional,
    Conditional,
    Equivalence,
}

/// A statement about a single model: either a conjunction of identities or
/// membership in a named variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub kind: ConditionKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionKind {
    Identities(Vec<Identity>),
    Variety(String),
}

impl Condition {
    pub fn identity(id: Identity) -> Condition {
        Condition {
            label: id.label(),
            kind: ConditionKind::Identities(vec![id]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub kind: ClaimKind,
    /// Variety expression the claim lives in.
    pub ambient: String,
    /// Only non-empty for conditional claims.
    pub hypotheses: Vec<Condition>,
    pub body: Vec<Condition>,
    pub source: String,
}

impl Claim {
    /// All identities mentioned in hypotheses and body.
    pub fn identities(&self) -> impl Iterator<Item = &Identity> {
        self.hypotheses
            .iter()
            .chain(&self.body)
            .filter_map(|c| match &c.kind {
                ConditionKind::Identities(ids) => Some(ids.iter()),
                ConditionKind::Variety(_) => None,
            })
            .flatten()
    }
}

#[derive(Clone, Debug)]
struct VarietyEntry {
    identities: Vec<String>,
    refines: Option<String>,
}

/// Named identities, varieties and claim suites.
#[derive(Clone, Debug)]
pub struct Registry {
    identities: BTreeMap<String, Identity>,
    varieties: BTreeMap<String, VarietyEntry>,
    suites: BTreeMap<String, Vec<Claim>>,
}

/// Names of every listing in the registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    pub varieties: Vec<String>,
    pub suites: Vec<String>,
    pub identities: Vec<String>,
}

pub const BASE_AXIOMS: &[&str] = &["I", "I0"];

impl Default for Registry {
    fn default() -> Self {
        Registry::standard()
    }
}

impl Registry {
    /// An empty registry holding only the base axioms.
    pub fn empty() -> Self {
        let mut r = Registry {
            identities: BTreeMap::new(),
            varieties: BTreeMap::new(),
            suites: BTreeMap::new(),
        };
        r.add_identity("I", "(x -> y) -> z ≈ ((z' -> x) -> (y -> z)')'");
        r.add_identity("I0", "0'' ≈ 0");
        r.varieties.insert(
            "I".into(),
            VarietyEntry {
                identities: vec![],
                refines: None,
            },
        );
        r
    }

    /// The full built-in catalog.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        r.add_varieties();
        r.add_suites();
        r
    }

    fn add_identity(&mut self, name: &str, text: &str) {
        let id = parse_identity(text)
            .unwrap_or_else(|e| panic!("registry identity {name} `{text}`: {e}"))
            .named(name);
        let prev = self.identities.insert(name.to_string(), id);
        assert!(prev.is_none(), "duplicate registry identity {name}");
    }

    fn variety(&mut self, name: &str, refines: &str, own: &[(&str, &str)]) {
        for (id_name, text) in own {
            self.add_identity(id_name, text);
        }
        self.varieties.insert(
            name.to_string(),
            VarietyEntry {
                identities: own.iter().map(|(n, _)| n.to_string()).collect(),
                refines: Some(refines.to_string()),
            },
        );
    }

    fn add_varieties(&mut self) {
        self.variety("MID", "I", &[("MID", "x /\\ x ≈ x")]);
        self.variety("JID", "I", &[("JID", "x \\/ x ≈ x")]);
        self.variety("I20", "I", &[("I20", "x'' ≈ x")]);
        self.variety("DM", "I", &[("DM", "(x -> y) -> x ≈ x")]);
        self.variety("KL", "DM", &[("KL1", "(x -> x)' -> (y -> y)' ≈ x -> x")]);
        // Without the first prime this fails in every Boolean algebra
        // (1 -> 0 = 0). Kept so the two forms can be compared.
        self.add_identity("KL1.printed", "(x -> x) -> (y -> y)' ≈ x -> x");
        self.add_identity("KL2", "(y -> y) -> (x -> x) ≈ x -> x");
        self.variety("BA", "DM", &[("BA", "x -> x ≈ 0'")]);
        self.variety("SCP", "I", &[("SCP", "x -> y ≈ y' -> x'")]);
        self.variety("MC", "I", &[("MC", "x /\\ y ≈ y /\\ x")]);
        self.variety("Z", "I", &[("Z", "x -> y ≈ 0")]);
        self.variety("C", "I", &[("C", "x -> y ≈ y -> x")]);
        self.variety("CP", "I", &[("CP", "x -> y' ≈ y -> x'")]);
        self.variety("A", "I", &[("A", "(x -> y) -> z ≈ x -> (y -> z)")]);
        self.variety("I31", "I", &[("I31", "x''' ≈ x'")]);
        self.variety("I10", "I", &[("I10", "x' ≈ x")]);
        self.variety("ID", "I", &[("ID", "x -> x ≈ x")]);
        self.varieties.insert(
            "SL".into(),
            VarietyEntry {
                identities: vec!["I10".into(), "C".into()],
                refines: Some("I".into()),
            },
        );
        self.variety(
            "CLD",
            "I",
            &[("CLD", "x -> (y -> z) ≈ (x -> z) -> (y -> x)")],
        );
        self.variety(
            "SRD",
            "I",
            &[("SRD", "(x -> y) -> z ≈ (z -> x) -> (y -> z)")],
        );
        self.variety("RD", "I", &[("RD", "(x -> y) -> z ≈ (x -> z) -> (y -> z)")]);
        self.variety(
            "Abbott",
            "I",
            &[
                ("Abbott.1", "(x -> y) -> x ≈ x"),
                ("Abbott.2", "(x -> y) -> y ≈ (y -> x) -> x"),
                ("Abbott.3", "x -> (y -> z) ≈ y -> (x -> z)"),
            ],
        );
    }

    fn add_suites(&mut self) {
        let mut s = SuiteBuilder::new(self);

        s.equivalence(
            "L2_4",
            "L2_4",
            "I",
            "Lemma 2.4",
            &[
                ("a", "0' -> x ≈ x"),
                ("b", "x'' ≈ x"),
                ("c", "(x -> x')' ≈ x"),
                ("d", "x' -> x ≈ x"),
            ],
        );
        s.items(
            "L2_5",
            "I20",
            "Lemma 2.5",
            &[("a", "x' -> 0' ≈ 0 -> x"), ("b", "0 -> x' ≈ x -> 0'")],
        );
        s.single("L2_6", "I20", "Lemma 2.6", "x /\\ x ≈ x");
        s.equivalence_with_variety(
            "L_DMchar",
            "L_DMchar",
            "I",
            "De Morgan characterization via 0",
            &[("a", "(0 -> x) -> y ≈ y")],
            &["DM"],
        );
        s.single(
            "L_dprime",
            "I20",
            "double prime under a negated implication",
            "(x -> y'')' ≈ (x -> y)'",
        );
        s.single(
            "L_tprime",
            "I",
            "triple prime on the left of an implication",
            "x''' -> y ≈ x' -> y",
        );
        s.items(
            "L2_7",
            "I20",
            "Lemma 2.7",
            &[
                ("1", "(x -> 0') -> y ≈ (x -> y') -> y"),
                ("2", "x -> (0 -> x)' ≈ x'"),
                ("3", "(y -> x) -> y ≈ (0 -> x) -> y"),
                ("4", "[(x -> 0') -> y]' ≈ (0 -> x) -> y'"),
                ("5", "0 -> x ≈ 0 -> (0 -> x)"),
                ("6", "[x' -> (0 -> y)]' ≈ (0 -> x) -> (0 -> y)'"),
                ("7", "[x -> (y -> x)']' ≈ (x -> y) -> x"),
                ("8", "0 -> [(0 -> x) -> (0 -> y')'] ≈ 0 -> (x -> y)"),
                ("9", "0 -> {(0 -> x) -> y'} ≈ x -> (0 -> y')"),
                ("10", "0 -> (0 -> x)' ≈ 0 -> x'"),
                ("11", "0 -> (x -> y) ≈ x -> (0 -> y)"),
                ("12", "[(0 -> x) -> y] -> x ≈ [(y -> x) -> (0 -> x)']'"),
                ("13", "[{(0 -> x) -> y} -> x]' ≈ (y -> x) -> (0 -> x)'"),
                ("14", "(0 -> x') -> (y -> x) ≈ y -> x"),
                ("15", "x' -> (0 -> x) ≈ 0 -> x"),
                ("16", "(y -> x)' ≈ (0 -> x) -> (y -> x)'"),
                ("17", "(x -> y) -> (0 -> y)' ≈ (x -> y)'"),
                ("18", "0 -> (x' -> y)' ≈ x -> (0 -> y')"),
                ("19", "[(x -> y) -> x] -> [(y -> x) -> y] ≈ x -> y"),
                ("20", "[x -> (y -> x')] -> x ≈ x' -> (y -> x')'"),
                ("21", "x -> (y -> x') ≈ y -> x'"),
                ("22", "0 -> (x -> y')' ≈ 0 -> (x' -> y)"),
                ("23", "(x -> y) -> y' ≈ y -> (x -> y)'"),
                ("24", "x -> [(y -> z') -> x]' ≈ (x' -> y) -> {(0 -> z) -> x'}"),
                (
                    "25",
                    "[{((x -> 0') -> y) -> z} -> {u -> ((0 -> x) -> y')}']' ≈ (z -> u) -> {(0 -> x) -> y'}",
                ),
                ("26", "(z -> x) -> (y -> z) ≈ (0 -> x) -> (y -> z)"),
                ("27", "(x' -> y) -> [(0 -> z) -> x'] ≈ (0 -> y) -> [(0 -> z) -> x']"),
                ("28", "x -> [(y -> z') -> x]' ≈ (0 -> y) -> [(0 -> z) -> x']"),
                ("29", "(x' -> y) -> (x -> y') ≈ x -> y'"),
                ("30", "(x -> y')' -> (x' -> y)' ≈ x -> y'"),
            ],
        );
        s.items(
            "L2_9",
            "I",
            "Lemma 2.9",
            &[
                ("1", "[(x -> y) -> z]''' ≈ [(x -> y) -> z]'"),
                ("2", "(x -> y) -> z ≈ [(x -> y) -> z]''"),
                ("3", "(x -> y)' ≈ (x'' -> y)'"),
                ("4", "x /\\ y ≈ (x /\\ y)''"),
                ("5", "x \\/ y ≈ (x \\/ y)''"),
                ("6", "x /\\ y ≈ (x' \\/ y')'"),
            ],
        );
        s.equivalence(
            "KL_equiv",
            "KL_equiv",
            "DM",
            "Kleene axioms are interchangeable over De Morgan algebras",
            &[
                ("kl1", "(x -> x)' -> (y -> y)' ≈ x -> x"),
                ("kl2", "(y -> y) -> (x -> x) ≈ x -> x"),
            ],
        );
        s.equivalence_with_variety(
            "T4_1",
            "T4_1",
            "MID",
            "Theorem 4.1",
            &[("a", "x /\\ x' ≈ 0")],
            &["BA"],
        );
        s.conditional(
            "L4_aux",
            "L4_aux",
            "I20",
            "Lemma 4.2",
            &[("hyp", "(x -> x) -> (y -> y) ≈ y -> y")],
            "[x -> (x' -> x')] -> 0' ≈ 0 -> x",
        );
        s.equivalence_with_variety(
            "T4_3",
            "T4_3",
            "I20",
            "Theorem 4.3",
            &[("a", "(x -> x) -> (y -> y) ≈ y -> y")],
            &["KL"],
        );
        s.single(
            "L6_1",
            "SCP",
            "Lemma 6.1",
            "0' -> [(x -> y) -> z] ≈ (x -> y) -> z",
        );
        s.conditional(
            "L7_absorb",
            "L7_absorb",
            "I20",
            "Lemma 7.1",
            &[("hyp", "x /\\ (x \\/ y) ≈ x")],
            "(x -> y) -> x ≈ x",
        );
        s.conditional(
            "L7_lattice_aux",
            "L7_lattice_aux",
            "I",
            "Lemma 7.2",
            &[("hyp", "x /\\ (x \\/ y) ≈ x")],
            "(x -> y) -> x ≈ x",
        );
        s.equivalence_groups(
            "T7_3",
            "T7_3",
            "I",
            "Theorem 7.3",
            &[
                (
                    "lattice",
                    &[
                        "x /\\ y ≈ y /\\ x",
                        "x \\/ y ≈ y \\/ x",
                        "(x /\\ y) /\\ z ≈ x /\\ (y /\\ z)",
                        "(x \\/ y) \\/ z ≈ x \\/ (y \\/ z)",
                        "x /\\ (x \\/ y) ≈ x",
                        "x \\/ (x /\\ y) ≈ x",
                    ],
                ),
                (
                    "absorption",
                    &["x /\\ (x \\/ y) ≈ x", "x \\/ (x /\\ y) ≈ x"],
                ),
                ("dm_identity", &["(x -> y) -> x ≈ x"]),
            ],
            &["DM"],
        );
        s.conditional(
            "L7_4",
            "L7_4",
            "I20",
            "Lemma 7.4",
            &[("hyp", "x /\\ 0 ≈ 0")],
            "x -> 0' ≈ 0'",
        );
        s.equivalence_groups(
            "T7_DMchar",
            "T7_DMchar",
            "I",
            "Theorem 7.5",
            &[
                ("involutive_meet_zero", &["x'' ≈ x", "x /\\ 0 ≈ 0"]),
                ("zero_left", &["(0 -> x) -> y ≈ y"]),
            ],
            &["DM"],
        );
        s.items(
            "T8_1",
            "I",
            "Theorem 8.1(a)",
            &[
                ("a1", "(x \\/ y)' ≈ x' /\\ y'"),
                ("a2", "(x /\\ y)' ≈ x' \\/ y'"),
            ],
        );
        s.equivalence(
            "T8_1",
            "T8_1.b",
            "I",
            "Theorem 8.1(b)",
            &[("b1", "x /\\ y ≈ y /\\ x"), ("b2", "x \\/ y ≈ y \\/ x")],
        );
        s.equivalence(
            "T8_1",
            "T8_1.c",
            "I",
            "Theorem 8.1(c)",
            &[
                ("c1", "x /\\ (y \\/ z) ≈ (x /\\ y) \\/ (x /\\ z)"),
                ("c2", "x \\/ (y /\\ z) ≈ (x \\/ y) /\\ (x \\/ z)"),
            ],
        );
        s.items(
            "T8_2",
            "I",
            "Theorem 8.2",
            &[
                ("a", "(x /\\ y) /\\ (x \\/ y) ≈ x /\\ y"),
                ("b", "(x \\/ y) \\/ (x /\\ y) ≈ x \\/ y"),
            ],
        );
        s.items(
            "T8_3",
            "I20&MC",
            "Theorem 8.3",
            &[
                ("a", "x /\\ x ≈ x"),
                ("b", "x \\/ x ≈ x"),
                ("c", "x \\/ y ≈ y \\/ x"),
                ("d", "x /\\ (y \\/ z) ≈ (x /\\ y) \\/ (x /\\ z)"),
                ("e", "x \\/ (y /\\ z) ≈ (x \\/ y) /\\ (x \\/ z)"),
                ("f", "x /\\ (x \\/ y) ≈ x \\/ (x /\\ y)"),
            ],
        );
        s.items(
            "L9_1",
            "C",
            "Lemma 9.1",
            &[
                ("a", "0 ≈ 0'"),
                ("b", "x' ≈ (x -> x)'"),
                ("d", "x -> (x -> y) ≈ y' -> x"),
            ],
        );
        s.multi(
            "L9_1",
            "L9_1.c",
            "C",
            "Lemma 9.1(c)",
            &[
                ("c1", "(x -> y)' ≈ (x' -> y)'"),
                ("c2", "(x' -> y)' ≈ (x' -> y')'"),
                ("c3", "(x' -> y')' ≈ (x -> y')'"),
            ],
        );
        s.items(
            "L10_1",
            "I10",
            "Lemma 10.1",
            &[
                ("a", "(y -> z) -> x ≈ (x -> y) -> (z -> x)"),
                ("b", "(0 -> x) -> y ≈ x -> y"),
                ("c", "x -> (y -> x) ≈ (0 -> y) -> x"),
                ("d", "x -> (y -> x) ≈ y -> x"),
            ],
        );
        s.items(
            "L10_2",
            "ID&A",
            "Lemma 10.2",
            &[
                ("1", "y -> (z -> x) ≈ x -> [0 -> {y -> (z -> x')}]"),
                ("2", "x -> (y -> x') ≈ y -> x"),
                ("3", "x -> (0 -> x) ≈ x'"),
                ("4", "(x -> y) -> [0 -> {x -> (y -> (x -> y'))}] ≈ x -> y"),
                ("5", "(x -> y) -> [0 -> (x -> y)] ≈ x -> y"),
                ("6", "x -> y' ≈ x -> y"),
            ],
        );
        s.single("L11_1", "SL", "Lemma 11.1", "x -> x ≈ x");
        s.items(
            "L12_1",
            "MC&MID&A",
            "Lemma 12.1",
            &[
                ("a", "x -> (x -> 0') ≈ x"),
                ("b", "x \\/ y ≈ x -> [0 -> {y -> (0 -> (0 -> 0'))}]"),
                ("c", "x \\/ y ≈ x -> (0 -> y')"),
                ("d", "0 \\/ 0 ≈ 0"),
                ("e", "0' ≈ 0"),
                ("f", "x -> x' ≈ x"),
                ("g", "x -> [y -> (x -> y')] ≈ x -> y"),
                ("h", "x -> y' ≈ y -> x'"),
                ("i", "x -> (y -> x') ≈ y -> x"),
                ("j", "x' ≈ x"),
            ],
        );
        s.items(
            "L13_1",
            "MC&ID",
            "Lemma 13.1",
            &[
                ("a", "[(0 -> x) -> y'']' ≈ (x -> y)'"),
                ("b", "(0 -> x')' ≈ x''"),
                ("c", "(x -> x'')' ≈ x''"),
                ("d", "x'' ≈ x'"),
                ("e", "[(x -> y) -> z]' ≈ (x -> y) -> z"),
            ],
        );
        s.equivalence_with_variety(
            "Abbott",
            "Abbott",
            "I",
            "implication algebras in the sense of Abbott",
            &[],
            &["Abbott", "BA"],
        );
    }

    /// Resolves a variety name or an `&`-separated intersection.
    pub fn get_variety(&self, expr: &str) -> Result<VarietyDef, RegistryError> {
        let parts = split_variety_expr(expr);
        if parts.is_empty() {
            return Err(RegistryError::UnknownVariety(expr.to_string()));
        }
        let mut identities: Vec<Identity> = Vec::new();
        for part in &parts {
            for id in self.flatten(part)? {
                if !identities.iter().any(|j| j.name == id.name) {
                    identities.push(id);
                }
            }
        }
        let refines = if parts.len() == 1 {
            self.varieties[&parts[0]].refines.clone()
        } else {
            Some("I".into())
        };
        Ok(VarietyDef {
            name: expr.to_string(),
            identities,
            refines,
        })
    }

    fn flatten(&self, name: &str) -> Result<Vec<Identity>, RegistryError> {
        let entry = self
            .varieties
            .get(name)
            .ok_or_else(|| RegistryError::UnknownVariety(name.to_string()))?;
        let mut out = match &entry.refines {
            Some(parent) if parent != "I" => self.flatten(parent)?,
            _ => Vec::new(),
        };
        for id_name in &entry.identities {
            let id = self.identities[id_name].clone();
            if !out.iter().any(|j| j.name == id.name) {
                out.push(id);
            }
        }
        Ok(out)
    }

    pub fn has_variety(&self, expr: &str) -> bool {
        self.get_variety(expr).is_ok()
    }

    pub fn get_suite(&self, name: &str) -> Result<&[Claim], RegistryError> {
        self.suites
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| RegistryError::UnknownSuite(name.to_string()))
    }

    /// Looks up a named identity (`I`, `L2_4.a`, `L2_7.15`, `user:foo`, ...).
    pub fn identity(&self, label: &str) -> Result<&Identity, RegistryError> {
        self.identities
            .get(label)
            .ok_or_else(|| RegistryError::UnknownLabel(label.to_string()))
    }

    pub fn base_axioms(&self) -> Vec<Identity> {
        BASE_AXIOMS
            .iter()
            .map(|n| self.identities[*n].clone())
            .collect()
    }

    pub fn list_all(&self) -> Listing {
        Listing {
            varieties: self.varieties.keys().cloned().collect(),
            suites: self.suites.keys().cloned().collect(),
            identities: self.identities.keys().cloned().collect(),
        }
    }

    /// Suite names in registration-independent (sorted) order.
    pub fn suite_names(&self) -> Vec<String> {
        self.suites.keys().cloned().collect()
    }

    /// Variety names that are not `user:` additions, sorted.
    pub fn variety_names(&self) -> Vec<String> {
        self.varieties.keys().cloned().collect()
    }

    /// Loads a `.ids` file: one identity per line, optionally prefixed with
    /// `name:`, `#` comments. Identities are registered as `user:<name>`
    /// (or `user:<stem>.<line>`), and all of them together as the variety
    /// `user:<stem>`. Returns the new identity names.
    pub fn load_ids(&mut self, stem: &str, text: &str) -> Result<Vec<String>, RegistryError> {
        let mut added = Vec::new();
        let mut pending = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, body) = match line.split_once(':') {
                Some((n, b)) => (n.trim().to_string(), b),
                None => (format!("{stem}.{line_no}"), line),
            };
            let full = format!("user:{name}");
            if self.identities.contains_key(&full) || added.contains(&full) {
                return Err(RegistryError::Duplicate {
                    line: line_no,
                    name: full,
                });
            }
            let id = parse_identity(body)
                .map_err(|source| RegistryError::Parse {
                    line: line_no,
                    source,
                })?
                .named(full.clone());
            added.push(full);
            pending.push(id);
        }
        for id in pending {
            self.identities.insert(id.name.clone().unwrap(), id);
        }
        self.varieties.insert(
            format!("user:{stem}"),
            VarietyEntry {
                identities: added.clone(),
                refines: Some("I".into()),
            },
        );
        Ok(added)
    }
}

/// Splits `"MC & MID ∧ A"` into names.
pub fn split_variety_expr(expr: &str) -> Vec<String> {
    expr.split(['&', '∧', '∩'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

struct SuiteBuilder<'a> {
    reg: &'a mut Registry,
}

impl<'a> SuiteBuilder<'a> {
    fn new(reg: &'a mut Registry) -> Self {
        SuiteBuilder { reg }
    }

    fn ident(&mut self, name: &str, text: &str) -> Identity {
        self.reg.add_identity(name, text);
        self.reg.identities[name].clone()
    }

    fn push(&mut self, suite: &str, claim: Claim) {
        self.reg
            .suites
            .entry(suite.to_string())
            .or_default()
            .push(claim);
    }

    /// One unconditional claim per item, ids `suite.item`.
    fn items(&mut self, suite: &str, ambient: &str, source: &str, items: &[(&str, &str)]) {
        for (item, text) in items {
            let id = format!("{suite}.{item}");
            let ident = self.ident(&id, text);
            self.push(
                suite,
                Claim {
                    id,
                    kind: ClaimKind::Unconditional,
                    ambient: ambient.into(),
                    hypotheses: vec![],
                    body: vec![Condition::identity(ident)],
                    source: format!("{source}({item})"),
                },
            );
        }
    }

    fn single(&mut self, suite: &str, ambient: &str, source: &str, text: &str) {
        let ident = self.ident(suite, text);
        self.push(
            suite,
            Claim {
                id: suite.into(),
                kind: ClaimKind::Unconditional,
                ambient: ambient.into(),
                hypotheses: vec![],
                body: vec![Condition::identity(ident)],
                source: source.into(),
            },
        );
    }

    /// A single unconditional claim whose body has several identities.
    fn multi(
        &mut self,
        suite: &str,
        id: &str,
        ambient: &str,
        source: &str,
        items: &[(&str, &str)],
    ) {
        let suite_prefix = suite.to_string();
        let body = items
            .iter()
            .map(|(item, text)| {
                Condition::identity(self.ident(&format!("{suite_prefix}.{item}"), text))
            })
            .collect();
        self.push(
            suite,
            Claim {
                id: id.into(),
                kind: ClaimKind::Unconditional,
                ambient: ambient.into(),
                hypotheses: vec![],
                body,
                source: source.into(),
            },
        );
    }

    fn conditional(
        &mut self,
        suite: &str,
        id: &str,
        ambient: &str,
        source: &str,
        hyps: &[(&str, &str)],
        conclusion: &str,
    ) {
        let hypotheses = hyps
            .iter()
            .map(|(n, t)| Condition::identity(self.ident(&format!("{id}.{n}"), t)))
            .collect();
        let body = vec![Condition::identity(self.ident(id, conclusion))];
        self.push(
            suite,
            Claim {
                id: id.into(),
                kind: ClaimKind::Conditional,
                ambient: ambient.into(),
                hypotheses,
                body,
                source: source.into(),
            },
        );
    }

    fn equivalence(
        &mut self,
        suite: &str,
        id: &str,
        ambient: &str,
        source: &str,
        items: &[(&str, &str)],
    ) {
        self.equivalence_with_variety(suite, id, ambient, source, items, &[]);
    }

    fn equivalence_with_variety(
        &mut self,
        suite: &str,
        id: &str,
        ambient: &str,
        source: &str,
        items: &[(&str, &str)],
        varieties: &[&str],
    ) {
        let groups: Vec<(&str, Vec<&str>)> = items.iter().map(|(n, t)| (*n, vec![*t])).collect();
        let groups: Vec<(&str, &[&str])> = groups.iter().map(|(n, v)| (*n, v.as_slice())).collect();
        self.equivalence_groups(suite, id, ambient, source, &groups, varieties);
    }

    /// Equivalence whose members are conjunctions of identities and/or
    /// variety memberships.
    fn equivalence_groups(
        &mut self,
        suite: &str,
        id: &str,
        ambient: &str,
        source: &str,
        groups: &[(&str, &[&str])],
        varieties: &[&str],
    ) {
        let mut body = Vec::new();
        for (name, texts) in groups {
            let label = format!("{id}.{name}");
            let ids: Vec<Identity> = if texts.len() == 1 {
                vec![self.ident(&label, texts[0])]
            } else {
                texts
                    .iter()
                    .enumerate()
                    .map(|(i, t)| self.ident(&format!("{label}{}", i + 1), t))
                    .collect()
            };
            body.push(Condition {
                label,
                kind: ConditionKind::Identities(ids),
            });
        }
        for v in varieties {
            body.push(Condition {
                label: format!("member of {v}"),
                kind: ConditionKind::Variety(v.to_string()),
            });
        }
        assert!(body.len() >= 2, "equivalence {id} needs two members");
        self.push(
            suite,
            Claim {
                id: id.into(),
                kind: ClaimKind::Equivalence,
                ambient: ambient.into(),
                hypotheses: vec![],
                body,
                source: source.into(),
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_identity;

    #[test]
    fn variety_lookup() {
        let r = Registry::standard();
        let scp = r.get_variety("SCP").unwrap();
        assert_eq!(
            scp.identities,
            vec![parse_identity("x -> y ≈ y' -> x'").unwrap().named("SCP")]
        );

        let ba = r.get_variety("BA").unwrap();
        let names: Vec<_> = ba.identities.iter().map(|i| i.label()).collect();
        assert_eq!(names, vec!["DM", "BA"]);
        assert_eq!(
            ba.identities[1],
            parse_identity("x -> x ≈ 0'").unwrap().named("BA")
        );

        let cld = r.get_variety("CLD").unwrap();
        assert_eq!(
            cld.identities[0],
            parse_identity("x -> (y -> z) ≈ (x -> z) -> (y -> x)")
                .unwrap()
                .named("CLD")
        );
        assert!(matches!(
            r.get_variety("XYZ"),
            Err(RegistryError::UnknownVariety(_))
        ));
    }

    #[test]
    fn intersections() {
        let r = Registry::standard();
        let v = r.get_variety("MC & MID ∧ A").unwrap();
        let names: Vec<_> = v.identities.iter().map(|i| i.label()).collect();
        assert_eq!(names, vec!["MC", "MID", "A"]);
        let sl = r.get_variety("SL").unwrap();
        assert_eq!(sl.identities.len(), 2);
        let dup = r.get_variety("SL&I10").unwrap();
        assert_eq!(dup.identities.len(), 2);
    }

    #[test]
    fn suite_shapes() {
        let r = Registry::standard();
        let l27 = r.get_suite("L2_7").unwrap();
        assert_eq!(l27.len(), 30);
        assert!(l27
            .iter()
            .all(|c| c.kind == ClaimKind::Unconditional && c.ambient == "I20"));
        let l29 = r.get_suite("L2_9").unwrap();
        assert_eq!(l29.len(), 6);
        assert!(l29.iter().all(|c| c.ambient == "I"));
        let l24 = r.get_suite("L2_4").unwrap();
        assert_eq!(l24.len(), 1);
        assert_eq!(l24[0].kind, ClaimKind::Equivalence);
        assert_eq!(l24[0].body.len(), 4);
        assert!(matches!(
            r.get_suite("nope"),
            Err(RegistryError::UnknownSuite(_))
        ));
    }

    #[test]
    fn listing() {
        let r = Registry::standard();
        let l = r.list_all();
        assert!(l.varieties.contains(&"I20".to_string()));
        assert!(l.varieties.contains(&"SL".to_string()));
        assert!(l.suites.len() >= 17);
        for v in [
            "I", "MID", "JID", "I20", "DM", "KL", "BA", "SCP", "MC", "Z", "C", "CP", "A", "I31",
            "I10", "ID", "SL", "CLD", "SRD", "RD", "Abbott",
        ] {
            assert!(r.has_variety(v), "{v}");
        }
    }

    #[test]
    fn every_identity_reparses() {
        let r = Registry::standard();
        for name in r.list_all().identities {
            let id = r.identity(&name).unwrap();
            let again = parse_identity(&id.print(false)).unwrap();
            assert_eq!(again.lhs, id.lhs, "{name}");
            assert_eq!(again.rhs, id.rhs, "{name}");
            let sugared = parse_identity(&id.print(true)).unwrap();
            assert_eq!(sugared.lhs, id.lhs, "{name}");
        }
    }

    #[test]
    fn equivalences_have_two_members() {
        let r = Registry::standard();
        for s in r.suite_names() {
            for c in r.get_suite(&s).unwrap() {
                if c.kind == ClaimKind::Equivalence {
                    assert!(c.body.len() >= 2, "{}", c.id);
                }
                if c.kind == ClaimKind::Conditional {
                    assert!(!c.hypotheses.is_empty(), "{}", c.id);
                }
                assert!(r.has_variety(&c.ambient), "{}", c.id);
            }
        }
    }

    #[test]
    fn user_ids_file() {
        let mut r = Registry::standard();
        let added = r
            .load_ids(
                "mine",
                "# my identities\ncomm: x -> y ≈ y -> x\n\nx'' ≈ x  # involution\n",
            )
            .unwrap();
        assert_eq!(added, vec!["user:comm", "user:mine.4"]);
        assert_eq!(
            r.identity("user:comm").unwrap().lhs,
            r.identity("C").unwrap().lhs
        );
        assert_eq!(r.get_variety("user:mine").unwrap().identities.len(), 2);

        let err = r.load_ids("bad", "x -> \n").unwrap_err();
        assert!(matches!(err, RegistryError::Parse { line: 1, .. }));
        let err = r.load_ids("dup", "comm: x ≈ x\n").unwrap_err();
        assert!(matches!(err, RegistryError::Duplicate { line: 1, .. }));
    }

    #[test]
    fn labels_resolve() {
        let r = Registry::standard();
        for l in [
            "I", "I0", "I20", "L2_4.a", "L2_4.d", "L2_5.b", "L2_7.14", "KL2", "Abbott.2",
        ] {
            assert!(r.identity(l).is_ok(), "{l}");
        }
        assert!(matches!(
            r.identity("L9_99"),
            Err(RegistryError::UnknownLabel(_))
        ));
    }
}
