//! Finite models of `⟨→, 0⟩`.
//!
//! Carrier is `{0, …, n−1}`, the constant is always element `0`, and the
//! table is stored row-major with the row being the left argument:
//! `table[x * n + y] = x → y`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::term::Term;

pub type Element = usize;

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &["two_z", "two_s", "two_b", "fig1", "fig3", "kleene3", "dm4"];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have at least one element")]
    Empty,
    #[error("table has {rows} rows, expected {size}")]
    RowCount { rows: usize, size: usize },
    #[error("row {row} has {len} entries, expected {size}")]
    RowLength { row: usize, len: usize, size: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for size {size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),
    #[error("double-prime image is not closed: {a} -> {b} = {value}")]
    NotClosed {
        a: Element,
        b: Element,
        value: Element,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound by the assignment")]
    Unbound(String),
    #[error("term contains sugar; expand it before evaluating")]
    Unexpanded,
}

/// A groupoid `⟨{0..n−1}, →, 0⟩`. Ordering is by size, then row-major table,
/// which is the canonical emission order used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroupoid {
    size: usize,
    table: Vec<Element>,
}

impl FiniteGroupoid {
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self, AlgebraError> {
        let size = rows.len();
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut table = Vec::with_capacity(size * size);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(AlgebraError::RowLength {
                    row,
                    len: r.len(),
                    size,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= size {
                    return Err(AlgebraError::OutOfRange {
                        row,
                        col,
                        value,
                        size,
                    });
                }
                table.push(value);
            }
        }
        Ok(FiniteGroupoid { size, table })
    }

    /// Builds from a flat row-major table.
    pub fn from_table(size: usize, table: Vec<Element>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        if table.len() != size * size {
            return Err(AlgebraError::RowCount {
                rows: table.len() / size,
                size,
            });
        }
        if let Some(i) = table.iter().position(|&v| v >= size) {
            return Err(AlgebraError::OutOfRange {
                row: i / size,
                col: i % size,
                value: table[i],
                size,
            });
        }
        Ok(FiniteGroupoid { size, table })
    }

    pub fn from_fn(size: usize, f: impl Fn(Element, Element) -> Element) -> Self {
        assert!(size > 0);
        let table = (0..size)
            .cartesian_product(0..size)
            .map(|(x, y)| {
                let v = f(x, y);
                assert!(v < size, "entry out of range at ({x}, {y})");
                v
            })
            .collect();
        FiniteGroupoid { size, table }
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        FiniteGroupoid {
            size: 1,
            table: vec![0],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    #[inline]
    pub fn imp(&self, x: Element, y: Element) -> Element {
        self.table[x * self.size + y]
    }

    /// `x' = x → 0`.
    #[inline]
    pub fn prime(&self, x: Element) -> Element {
        self.imp(x, 0)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    /// Copy with a single table entry replaced.
    pub fn with_entry(&self, x: Element, y: Element, value: Element) -> Self {
        assert!(x < self.size && y < self.size && value < self.size);
        let mut table = self.table.clone();
        table[x * self.size + y] = value;
        FiniteGroupoid {
            size: self.size,
            table,
        }
    }

    /// Image under the relabelling `perm` (element `a` becomes `perm[a]`).
    pub fn permute(&self, perm: &[Element]) -> Self {
        assert_eq!(perm.len(), self.size);
        let n = self.size;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.imp(x, y)];
            }
        }
        FiniteGroupoid { size: n, table }
    }

    /// Checks `0'' ≈ 0` and then every instance of
    /// `(x → y) → z ≈ [(z' → x) → (y → z)']'` in lexicographic order.
    pub fn validate_axioms(&self) -> Result<(), AxiomViolation> {
        let dp = self.prime(self.prime(0));
        if dp != 0 {
            return Err(AxiomViolation::ZeroDoublePrime { value: dp });
        }
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.imp(self.imp(x, y), z);
                    let rhs = self.axiom_rhs(x, y, z);
                    if lhs != rhs {
                        return Err(AxiomViolation::Implicator { x, y, z, lhs, rhs });
                    }
                }
            }
        }
        Ok(())
    }

    fn axiom_rhs(&self, x: Element, y: Element, z: Element) -> Element {
        let left = self.imp(self.prime(z), x);
        let right = self.prime(self.imp(y, z));
        self.prime(self.imp(left, right))
    }

    pub fn is_valid(&self) -> bool {
        self.validate_axioms().is_ok()
    }

    /// `{a'' : a ∈ A}` and the map `a ↦ a''`.
    pub fn prime_image(&self) -> PrimeImage {
        let map: Vec<Element> = self.elements().map(|a| self.prime(self.prime(a))).collect();
        let elements = map.iter().copied().sorted().dedup().collect();
        PrimeImage { elements, map }
    }

    /// `A''` as an algebra in its own right, relabelled in increasing order
    /// (so `0 ↦ 0`).
    pub fn double_prime_subalgebra(&self) -> Result<Self, AlgebraError> {
        let image = self.prime_image();
        let elems = &image.elements;
        let index = |v: Element| elems.binary_search(&v).ok();
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in elems {
            for &b in elems {
                let value = self.imp(a, b);
                match index(value) {
                    Some(i) => table.push(i),
                    None => return Err(AlgebraError::NotClosed { a, b, value }),
                }
            }
        }
        if elems.first() != Some(&0) {
            return Err(AlgebraError::NotClosed {
                a: 0,
                b: 0,
                value: self.prime(self.prime(0)),
            });
        }
        Ok(FiniteGroupoid { size: m, table })
    }

    /// The derived `⟨A, ∧, ∨, 0⟩` with `x ∧ y = (x → y')'` and
    /// `x ∨ y = (x' ∧ y')'`.
    pub fn mj_reduct(&self) -> BiGroupoid {
        let n = self.size;
        let meet_of = |x: Element, y: Element| self.prime(self.imp(x, self.prime(y)));
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                meet.push(meet_of(x, y));
                join.push(self.prime(meet_of(self.prime(x), self.prime(y))));
            }
        }
        BiGroupoid {
            size: n,
            meet,
            join,
        }
    }

    /// Lexicographically least table over all relabellings fixing `0`.
    pub fn canonical_form(&self) -> Self {
        self.canonical_form_with_perm().0
    }

    /// Canonical form together with the relabelling that produces it.
    pub fn canonical_form_with_perm(&self) -> (Self, Vec<Element>) {
        let n = self.size;
        let mut best = self.clone();
        let mut best_perm: Vec<Element> = (0..n).collect();
        for tail in (1..n).permutations(n - 1) {
            let mut perm = Vec::with_capacity(n);
            perm.push(0);
            perm.extend(tail);
            let candidate = self.permute(&perm);
            if candidate.table < best.table {
                best = candidate;
                best_perm = perm;
            }
        }
        (best, best_perm)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.size == other.size && self.canonical_form() == other.canonical_form()
    }

    /// Text rendering in the usual operation-table layout.
    pub fn render_table(&self) -> String {
        render_op_table("→", self.size, &self.table)
    }

    pub fn to_file(&self, name: Option<&str>) -> AlgebraFile {
        AlgebraFile {
            size: self.size,
            table: self.rows(),
            name: name.map(str::to_string),
        }
    }
}

impl fmt::Display for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_table())
    }
}

fn render_op_table(symbol: &str, n: usize, table: &[Element]) -> String {
    let width = (n.saturating_sub(1)).to_string().len();
    let mut s = format!("{symbol}: |");
    for y in 0..n {
        s.push_str(&format!(" {y:>width$}"));
    }
    s.push('\n');
    s.push_str(&"-".repeat(4 + n * (width + 1)));
    s.push('\n');
    for x in 0..n {
        s.push_str(&format!("{x:>width$}  |", width = width + 1));
        for y in 0..n {
            s.push_str(&format!(" {:>width$}", table[x * n + y]));
        }
        s.push('\n');
    }
    s
}

/// The axiom failure found by [`FiniteGroupoid::validate_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    /// `0'' ≈ 0` fails.
    ZeroDoublePrime { value: Element },
    /// First failing instance of the implicator axiom.
    Implicator {
        x: Element,
        y: Element,
        z: Element,
        lhs: Element,
        rhs: Element,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::ZeroDoublePrime { value } => write!(f, "0'' = {value} ≠ 0"),
            AxiomViolation::Implicator { x, y, z, lhs, rhs } => write!(
                f,
                "(x -> y) -> z ≈ ((z' -> x) -> (y -> z)')' fails at x={x}, y={y}, z={z}: {lhs} ≠ {rhs}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeImage {
    /// Sorted, deduplicated `{a''}`.
    pub elements: Vec<Element>,
    /// `map[a] = a''`.
    pub map: Vec<Element>,
}

/// `⟨A, ∧, ∨, 0⟩` derived from a groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiGroupoid {
    pub size: usize,
    pub meet: Vec<Element>,
    pub join: Vec<Element>,
}

impl BiGroupoid {
    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join[x * self.size + y]
    }

    pub fn meet_rows(&self) -> Vec<Vec<Element>> {
        self.meet.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    pub fn join_rows(&self) -> Vec<Vec<Element>> {
        self.join.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    pub fn render(&self) -> String {
        format!(
            "{}\n{}",
            render_op_table("∧", self.size, &self.meet),
            render_op_table("∨", self.size, &self.join)
        )
    }
}

/// JSON form: `{"size": n, "table": [[...], ...], "name": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub size: usize,
    pub table: Vec<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl AlgebraFile {
    pub fn to_groupoid(&self) -> Result<FiniteGroupoid, AlgebraError> {
        if self.table.len() != self.size {
            return Err(AlgebraError::RowCount {
                rows: self.table.len(),
                size: self.size,
            });
        }
        FiniteGroupoid::from_rows(&self.table)
    }
}

impl From<&FiniteGroupoid> for AlgebraFile {
    fn from(g: &FiniteGroupoid) -> Self {
        g.to_file(None)
    }
}

/// Maps each variable of a term to an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub vars: Vec<String>,
    pub values: Vec<Element>,
}

impl Assignment {
    pub fn new(vars: Vec<String>, values: Vec<Element>) -> Self {
        assert_eq!(vars.len(), values.len());
        Assignment { vars, values }
    }

    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, Element)>) -> Self {
        let (vars, values) = pairs.into_iter().map(|(v, e)| (v.into(), e)).unzip();
        Assignment { vars, values }
    }

    pub fn get(&self, var: &str) -> Option<Element> {
        self.vars
            .iter()
            .position(|v| v == var)
            .map(|i| self.values[i])
    }
}

/// Serialized as an object `{"x": 2, "y": 0}` in variable order.
impl Serialize for Assignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.vars.len()))?;
        for (v, e) in self.vars.iter().zip(&self.values) {
            m.serialize_entry(v, e)?;
        }
        m.end()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return f.write_str("(no variables)");
        }
        let parts = self
            .vars
            .iter()
            .zip(&self.values)
            .map(|(v, e)| format!("{v}={e}"))
            .join(", ");
        f.write_str(&parts)
    }
}

/// Evaluates an expanded term.
pub fn evaluate(t: &Term, a: &FiniteGroupoid, sigma: &Assignment) -> Result<Element, EvalError> {
    match t {
        Term::Var(v) => match sigma.get(v) {
            Some(e) if e < a.size() => Ok(e),
            Some(_) | None => Err(EvalError::Unbound(v.clone())),
        },
        Term::Zero => Ok(0),
        Term::Impl(l, r) => Ok(a.imp(evaluate(l, a, sigma)?, evaluate(r, a, sigma)?)),
        Term::Prime(_) | Term::Meet(..) | Term::Join(..) => Err(EvalError::Unexpanded),
    }
}

/// A term flattened to postfix over variable slots, for evaluating the same
/// term under many assignments.
#[derive(Clone, Debug)]
pub struct CompiledTerm {
    code: Vec<Instr>,
}

#[derive(Clone, Copy, Debug)]
enum Instr {
    Var(usize),
    Zero,
    Impl,
}

impl CompiledTerm {
    /// `vars` fixes the slot order used by [`CompiledTerm::eval`].
    pub fn compile(t: &Term, vars: &[String]) -> Result<Self, EvalError> {
        let mut code = Vec::with_capacity(t.size());
        compile_into(t, vars, &mut code)?;
        Ok(CompiledTerm { code })
    }

    /// Evaluates against an arbitrary, possibly partial, operation. Returns
    /// `None` as soon as an undefined product is needed.
    pub fn eval_with(
        &self,
        values: &[Element],
        mut imp: impl FnMut(Element, Element) -> Option<Element>,
    ) -> Option<Element> {
        let mut stack: Vec<Element> = Vec::with_capacity(16);
        for instr in &self.code {
            match *instr {
                Instr::Var(i) => stack.push(values[i]),
                Instr::Zero => stack.push(0),
                Instr::Impl => {
                    let r = stack.pop()?;
                    let l = stack.pop()?;
                    stack.push(imp(l, r)?);
                }
            }
        }
        stack.pop()
    }

    pub fn eval(&self, a: &FiniteGroupoid, values: &[Element]) -> Element {
        let mut stack: Vec<Element> = Vec::with_capacity(16);
        for instr in &self.code {
            match *instr {
                Instr::Var(i) => stack.push(values[i]),
                Instr::Zero => stack.push(0),
                Instr::Impl => {
                    let r = stack.pop().expect("stack underflow");
                    let l = stack.pop().expect("stack underflow");
                    stack.push(a.imp(l, r));
                }
            }
        }
        stack.pop().expect("empty term")
    }
}

fn compile_into(t: &Term, vars: &[String], code: &mut Vec<Instr>) -> Result<(), EvalError> {
    match t {
        Term::Var(v) => match vars.iter().position(|w| w == v) {
            Some(i) => code.push(Instr::Var(i)),
            None => return Err(EvalError::Unbound(v.clone())),
        },
        Term::Zero => code.push(Instr::Zero),
        Term::Impl(l, r) => {
            compile_into(l, vars, code)?;
            compile_into(r, vars, code)?;
            code.push(Instr::Impl);
        }
        Term::Prime(_) | Term::Meet(..) | Term::Join(..) => return Err(EvalError::Unexpanded),
    }
    Ok(())
}

/// Builds `x → y := x' ∨ y` from a lattice join and an involution.
fn from_de_morgan_lattice(
    neg: &[Element],
    join: impl Fn(Element, Element) -> Element,
) -> FiniteGroupoid {
    FiniteGroupoid::from_fn(neg.len(), |x, y| join(neg[x], y))
}

/// The named algebras: the three two-element algebras, the two separating
/// examples, and the 3-element Kleene / 4-element De Morgan algebras.
pub fn builtin(name: &str) -> Result<FiniteGroupoid, AlgebraError> {
    let rows = |r: &[&[Element]]| {
        FiniteGroupoid::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>())
            .expect("builtin table is well-formed")
    };
    Ok(match name {
        "two_z" => rows(&[&[0, 0], &[0, 0]]),
        "two_s" => rows(&[&[0, 1], &[1, 1]]),
        "two_b" => rows(&[&[1, 1], &[0, 1]]),
        "fig1" => rows(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
        "fig3" => rows(&[&[0, 1, 2], &[1, 1, 2], &[2, 1, 2]]),
        // chain 0 < 1 < 2 with 0' = 2, 1' = 1, 2' = 0
        "kleene3" => from_de_morgan_lattice(&[2, 1, 0], Element::max),
        // diamond: 0 bottom, 3 top, 1 and 2 fixed by the involution
        "dm4" => from_de_morgan_lattice(&[3, 1, 2, 0], |a, b| match (a, b) {
            _ if a == b => a,
            (0, _) => b,
            (_, 0) => a,
            _ => 3,
        }),
        other => return Err(AlgebraError::UnknownBuiltin(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn eval_str(t: &str, a: &FiniteGroupoid, pairs: &[(&str, Element)]) -> Element {
        let sigma = Assignment::from_pairs(pairs.iter().copied());
        evaluate(&parse_term(t).unwrap(), a, &sigma).unwrap()
    }

    #[test]
    fn builtin_tables() {
        assert_eq!(
            builtin("two_s").unwrap().rows(),
            vec![vec![0, 1], vec![1, 1]]
        );
        assert_eq!(
            builtin("fig3").unwrap().rows(),
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]]
        );
        assert_eq!(
            builtin("kleene3").unwrap().rows(),
            vec![vec![2, 2, 2], vec![1, 1, 2], vec![0, 1, 2]]
        );
        assert!(matches!(
            builtin("two_q"),
            Err(AlgebraError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn dm4_table() {
        let dm4 = builtin("dm4").unwrap();
        assert_eq!(
            dm4.rows(),
            vec![
                vec![3, 3, 3, 3],
                vec![1, 1, 3, 3],
                vec![2, 3, 2, 3],
                vec![0, 1, 2, 3]
            ]
        );
    }

    #[test]
    fn evaluation_examples() {
        let two_b = builtin("two_b").unwrap();
        assert_eq!(eval_str("x -> x", &two_b, &[("x", 0)]), 1);
        let two_z = builtin("two_z").unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(eval_str("(x -> y')'", &two_z, &[("x", x), ("y", y)]), 0);
            }
        }
        let fig1 = builtin("fig1").unwrap();
        assert_eq!(eval_str("x -> y", &fig1, &[("x", 2), ("y", 2)]), 1);
    }

    #[test]
    fn evaluation_errors() {
        let a = builtin("two_b").unwrap();
        let sigma = Assignment::from_pairs([("x", 0)]);
        let t = parse_term("x -> y").unwrap();
        assert_eq!(
            evaluate(&t, &a, &sigma),
            Err(EvalError::Unbound("y".into()))
        );
        let sugared = crate::term::parse_term_sugared("x'").unwrap();
        assert_eq!(evaluate(&sugared, &a, &sigma), Err(EvalError::Unexpanded));
    }

    #[test]
    fn validate_examples() {
        for name in BUILTIN_NAMES {
            assert_eq!(builtin(name).unwrap().validate_axioms(), Ok(()), "{name}");
        }
        let bad = FiniteGroupoid::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            bad.validate_axioms(),
            Err(AxiomViolation::ZeroDoublePrime { value: 1 })
        );
    }

    #[test]
    fn first_failing_axiom_instance_is_lexicographic() {
        // 0'' = 0 here, so the failure must come from the implicator axiom
        let g = FiniteGroupoid::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let found = g.validate_axioms().unwrap_err();
        let mut first = None;
        'scan: for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let lhs = g.imp(g.imp(x, y), z);
                    let rhs = g.prime(g.imp(g.imp(g.prime(z), x), g.prime(g.imp(y, z))));
                    if lhs != rhs {
                        first = Some(AxiomViolation::Implicator { x, y, z, lhs, rhs });
                        break 'scan;
                    }
                }
            }
        }
        assert_eq!(Some(found), first);
    }

    #[test]
    fn prime_images() {
        assert_eq!(builtin("two_b").unwrap().prime_image().elements, vec![0, 1]);
        assert_eq!(builtin("two_z").unwrap().prime_image().elements, vec![0]);
        assert_eq!(builtin("fig1").unwrap().prime_image().elements, vec![0]);
    }

    #[test]
    fn double_prime_subalgebras() {
        let t = builtin("two_z").unwrap().double_prime_subalgebra().unwrap();
        assert_eq!(t, FiniteGroupoid::trivial());
        let b = builtin("two_b").unwrap();
        assert_eq!(b.double_prime_subalgebra().unwrap(), b);
    }

    #[test]
    fn mj_reducts() {
        let z = builtin("two_z").unwrap().mj_reduct();
        assert!(z.meet.iter().chain(&z.join).all(|&v| v == 0));
        let f3 = builtin("fig3").unwrap().mj_reduct();
        assert_eq!(
            f3.meet_rows(),
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]]
        );
        let b = builtin("two_b").unwrap().mj_reduct();
        // 0 is the bottom of the Boolean algebra: ∧ is min, ∨ is max
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(b.meet(x, y), x.min(y));
                assert_eq!(b.join(x, y), x.max(y));
            }
        }
    }

    #[test]
    fn canonical_forms() {
        let s = builtin("two_s").unwrap();
        assert_eq!(s.canonical_form(), s);
        // fig3 happens to be fixed by swapping 1 and 2
        let f3 = builtin("fig3").unwrap();
        assert_eq!(f3.permute(&[0, 2, 1]), f3);
        let f1 = builtin("fig1").unwrap();
        let swapped = f1.permute(&[0, 2, 1]);
        assert_ne!(swapped, f1);
        assert_eq!(swapped.canonical_form(), f1.canonical_form());
        assert!(swapped.is_isomorphic(&f1));
    }

    #[test]
    fn json_round_trip() {
        let f = builtin("fig1").unwrap().to_file(Some("fig1"));
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"size":3,"table":[[0,0,0],[0,0,0],[0,0,1]],"name":"fig1"}"#
        );
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_groupoid().unwrap(), builtin("fig1").unwrap());
        let bad: AlgebraFile = serde_json::from_str(r#"{"size":2,"table":[[0,2],[0,0]]}"#).unwrap();
        assert!(matches!(
            bad.to_groupoid(),
            Err(AlgebraError::OutOfRange { .. })
        ));
    }

    #[test]
    fn render_matches_figure_layout() {
        let text = builtin("two_s").unwrap().render_table();
        assert_eq!(text, "→: | 0 1\n--------\n 0  | 0 1\n 1  | 1 1\n");
    }
}
