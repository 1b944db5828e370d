//! Enumeration of all implicator groupoids of a given size.
//!
//! Cells are filled in row-major order. After each cell, every instance of
//! the axioms (and of any extra identities) whose evaluation only touches
//! filled cells is checked. Isomorphic copies are removed by canonicalizing
//! every leaf into an ordered set.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Element, FiniteGroupoid};
use crate::checker::{membership, next_assignment, CheckError, CompiledIdentity, DEFAULT_VAR_CAP};
use crate::registry::{Registry, VarietyDef};
use crate::term::Identity;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("naive enumeration of size {0} needs an explicit override")]
    TooLarge(usize),
    #[error("time budget exhausted before enumeration finished")]
    Budget,
    #[error(transparent)]
    Check(#[from] CheckError),
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub iso_reduce: bool,
    pub max_seconds: Option<f64>,
    pub parallel: bool,
    /// Identities enforced during the search on top of the base axioms.
    pub extra: Vec<Identity>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            iso_reduce: true,
            max_seconds: None,
            parallel: true,
            extra: Vec::new(),
        }
    }
}

impl EnumOptions {
    pub fn serial() -> Self {
        EnumOptions {
            parallel: false,
            ..Default::default()
        }
    }

    pub fn within(mut self, v: &VarietyDef) -> Self {
        self.extra.extend(v.identities.iter().cloned());
        self
    }
}

/// Result of an enumeration; `complete` is false when the budget ran out,
/// in which case `models` holds whatever was found so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub models: Vec<FiniteGroupoid>,
    pub complete: bool,
}

const UNSET: u8 = u8::MAX;

struct Constraint {
    id: CompiledIdentity,
    /// All assignments, flattened.
    assignments: Vec<u8>,
    arity: usize,
}

struct Search<'a> {
    n: usize,
    constraints: &'a [Constraint],
    deadline: Option<Instant>,
    iso_reduce: bool,
    nodes: u64,
    timed_out: bool,
    found: BTreeSet<FiniteGroupoid>,
}

impl Search<'_> {
    fn consistent(&self, table: &[u8]) -> bool {
        let n = self.n;
        let imp = |x: Element, y: Element| {
            let v = table[x * n + y];
            (v != UNSET).then_some(v as Element)
        };
        let mut vals: Vec<Element> = Vec::with_capacity(8);
        for c in self.constraints {
            for chunk in c.assignments.chunks(c.arity.max(1)) {
                vals.clear();
                vals.extend(chunk.iter().take(c.arity).map(|&v| v as Element));
                let Some(l) = c.id.lhs().eval_with(&vals, imp) else {
                    continue;
                };
                let Some(r) = c.id.rhs().eval_with(&vals, imp) else {
                    continue;
                };
                if l != r {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, table: &mut Vec<u8>, cell: usize) {
        if self.timed_out {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                    return;
                }
            }
        }
        if cell == table.len() {
            let g =
                FiniteGroupoid::from_table(self.n, table.iter().map(|&v| v as Element).collect())
                    .expect("complete table is in range");
            let g = if self.iso_reduce {
                g.canonical_form()
            } else {
                g
            };
            self.found.insert(g);
            return;
        }
        for v in 0..self.n as u8 {
            table[cell] = v;
            if self.consistent(table) {
                self.run(table, cell + 1);
            }
        }
        table[cell] = UNSET;
    }
}

fn constraints(n: usize, extra: &[Identity]) -> Result<Vec<Constraint>, CheckError> {
    let reg = Registry::empty();
    let mut ids: Vec<Identity> = reg.base_axioms();
    ids.extend(extra.iter().cloned());
    ids.iter()
        .map(|id| {
            let id = CompiledIdentity::new(id, DEFAULT_VAR_CAP)?;
            let arity = id.vars.len();
            let mut assignments = Vec::new();
            let mut values = vec![0; arity];
            loop {
                assignments.extend(values.iter().map(|&v| v as u8));
                if !next_assignment(&mut values, n) {
                    break;
                }
            }
            if arity == 0 {
                assignments.push(0);
            }
            Ok(Constraint {
                id,
                assignments,
                arity,
            })
        })
        .collect()
}

/// All models of size `n` satisfying the base axioms and `opts.extra`,
/// sorted by table. With `iso_reduce` each isomorphism class appears once,
/// as its canonical form.
pub fn enumerate_models(n: usize, opts: &EnumOptions) -> Result<Enumeration, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroSize);
    }
    assert!(n < UNSET as usize, "size too large for the search table");
    let cons = constraints(n, &opts.extra)?;
    let deadline = opts
        .max_seconds
        .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)));
    let new_search = || Search {
        n,
        constraints: &cons,
        deadline,
        iso_reduce: opts.iso_reduce,
        nodes: 0,
        timed_out: false,
        found: BTreeSet::new(),
    };

    // partition by the first row
    let mut prefixes: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..n {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (0..n as u8).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    let run_prefix = |prefix: &Vec<u8>| {
        let mut s = new_search();
        let mut table = vec![UNSET; n * n];
        table[..n].copy_from_slice(prefix);
        if s.consistent(&table) {
            s.run(&mut table, n);
        }
        (s.found, s.timed_out)
    };
    let results: Vec<(BTreeSet<FiniteGroupoid>, bool)> = if opts.parallel {
        prefixes.par_iter().map(run_prefix).collect()
    } else {
        prefixes.iter().map(run_prefix).collect()
    };
    let mut all = BTreeSet::new();
    let mut complete = true;
    for (found, timed_out) in results {
        complete &= !timed_out;
        all.extend(found);
    }
    Ok(Enumeration {
        models: all.into_iter().collect(),
        complete,
    })
}

/// Iso-reduced models of every size `1..=max_n`, smallest first.
pub fn models_up_to(max_n: usize, opts: &EnumOptions) -> Result<Enumeration, EnumError> {
    let mut models = Vec::new();
    let mut complete = true;
    for n in 1..=max_n {
        let e = enumerate_models(n, opts)?;
        models.extend(e.models);
        complete &= e.complete;
        if !complete {
            break;
        }
    }
    Ok(Enumeration { models, complete })
}

/// Brute force over all `n^(n²)` tables. Sizes above 3 need `allow_large`.
pub fn naive_enumerate(n: usize, allow_large: bool) -> Result<Vec<FiniteGroupoid>, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroSize);
    }
    if n > 3 && !allow_large {
        return Err(EnumError::TooLarge(n));
    }
    let cells = n * n;
    let mut table = vec![0; cells];
    let mut out = BTreeSet::new();
    loop {
        let g = FiniteGroupoid::from_table(n, table.clone()).expect("entries in range");
        if g.is_valid() {
            out.insert(g.canonical_form());
        }
        if !next_assignment(&mut table, n) {
            break;
        }
    }
    Ok(out.into_iter().collect())
}

/// Number of isomorphism classes of size `n` in `v`.
pub fn count_models(
    n: usize,
    v: &VarietyDef,
    max_seconds: Option<f64>,
) -> Result<usize, EnumError> {
    let opts = EnumOptions {
        max_seconds,
        ..Default::default()
    }
    .within(v);
    let e = enumerate_models(n, &opts)?;
    if !e.complete {
        return Err(EnumError::Budget);
    }
    debug_assert!(e
        .models
        .iter()
        .all(|m| membership(m, v).map(|r| r.member).unwrap_or(false)));
    Ok(e.models.len())
}
