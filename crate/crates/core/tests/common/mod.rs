//! Reference implementations that share no code with the library beyond
//! the `Term` type and table accessors.

#![allow(dead_code)]

use implicator_lab::algebra::FiniteGroupoid;
use implicator_lab::term::Term;
use itertools::Itertools;
use std::collections::BTreeMap;

/// Direct evaluation of a sugared term; `'`, `∧`, `∨` are computed from
/// their definitions instead of expanding the term first.
pub fn eval(t: &Term, a: &FiniteGroupoid, env: &BTreeMap<String, usize>) -> usize {
    let p = |x: usize| a.imp(x, 0);
    let meet = |x: usize, y: usize| p(a.imp(x, p(y)));
    match t {
        Term::Var(v) => env[v],
        Term::Zero => 0,
        Term::Impl(l, r) => a.imp(eval(l, a, env), eval(r, a, env)),
        Term::Prime(s) => p(eval(s, a, env)),
        Term::Meet(l, r) => meet(eval(l, a, env), eval(r, a, env)),
        Term::Join(l, r) => p(meet(p(eval(l, a, env)), p(eval(r, a, env)))),
    }
}

fn collect_vars(t: &Term, out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone())
            }
        }
        Term::Zero => {}
        Term::Prime(s) => collect_vars(s, out),
        Term::Impl(l, r) | Term::Meet(l, r) | Term::Join(l, r) => {
            collect_vars(l, out);
            collect_vars(r, out);
        }
    }
}

/// First failing assignment in lexicographic order, variables ordered by
/// first occurrence (left side, then right side). Scans every assignment.
pub fn first_failure(a: &FiniteGroupoid, lhs: &Term, rhs: &Term) -> Option<Vec<(String, usize)>> {
    let mut vars = Vec::new();
    collect_vars(lhs, &mut vars);
    collect_vars(rhs, &mut vars);
    let n = a.size();
    for values in (0..vars.len()).map(|_| 0..n).multi_cartesian_product() {
        let env: BTreeMap<String, usize> =
            vars.iter().cloned().zip(values.iter().copied()).collect();
        if eval(lhs, a, &env) != eval(rhs, a, &env) {
            return Some(vars.iter().cloned().zip(values).collect());
        }
    }
    if vars.is_empty() {
        let env = BTreeMap::new();
        if eval(lhs, a, &env) != eval(rhs, a, &env) {
            return Some(vec![]);
        }
    }
    None
}

/// (I) and 0'' = 0, written out by hand.
pub fn is_model(a: &FiniteGroupoid) -> bool {
    let n = a.size();
    let i = |x, y| a.imp(x, y);
    let p = |x| a.imp(x, 0);
    if p(p(0)) != 0 {
        return false;
    }
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .all(|((x, y), z)| i(i(x, y), z) == p(i(i(p(z), x), p(i(y, z)))))
}

/// Lexicographically least table over relabellings fixing 0.
pub fn canonical(a: &FiniteGroupoid) -> Vec<usize> {
    let n = a.size();
    (1..n)
        .permutations(n - 1)
        .map(|rest| {
            let mut perm = vec![0];
            perm.extend(rest);
            let mut t = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    t[perm[x] * n + perm[y]] = perm[a.imp(x, y)];
                }
            }
            t
        })
        .min()
        .unwrap()
}

/// Every valid table of size `n`, one per isomorphism class.
pub fn all_models(n: usize) -> Vec<FiniteGroupoid> {
    let mut seen = std::collections::BTreeSet::new();
    for cells in (0..n * n).map(|_| 0..n).multi_cartesian_product() {
        let g = FiniteGroupoid::from_table(n, cells).unwrap();
        if is_model(&g) {
            seen.insert(canonical(&g));
        }
    }
    seen.into_iter()
        .map(|t| FiniteGroupoid::from_table(n, t).unwrap())
        .collect()
}
