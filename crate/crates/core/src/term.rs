//! Terms over the signature `⟨→, 0⟩`, identities, and their text syntax.
//!
//! The surface grammar additionally offers `x'` (that is `x → 0`), `x /\ y`
//! and `x \/ y`. These are macros: [`Term::expand`] rewrites them into
//! `→`/`0` so every downstream consumer only ever sees three node kinds.
//!
//! ```text
//! identity := expr ("≈" | "=") expr
//! expr     := postfix (op postfix)?        -- a second `op` is rejected
//! postfix  := atom "'"*
//! atom     := var | "0" | "(" expr ")"
//! op       := "->" | "→" | "/\" | "∧" | "\/" | "∨"
//! ```
//!
//! `[ ]` and `{ }` are accepted as alternative brackets so identities can be
//! pasted from hand-written notes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// A term. The `Prime`, `Meet` and `Join` variants exist only before
/// expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Zero,
    Impl(Box<Term>, Box<Term>),
    Prime(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn zero() -> Term {
        Term::Zero
    }

    pub fn imp(lhs: Term, rhs: Term) -> Term {
        Term::Impl(Box::new(lhs), Box::new(rhs))
    }

    /// `t'` already expanded, i.e. `t → 0`.
    pub fn prime_of(t: Term) -> Term {
        Term::imp(t, Term::Zero)
    }

    /// Expands `′`, `∧`, `∨` into `→` and `0`.
    ///
    /// `x ∧ y := (x → y')'` and `x ∨ y := (x' ∧ y')'`.
    pub fn expand(&self) -> Term {
        match self {
            Term::Var(_) | Term::Zero => self.clone(),
            Term::Impl(a, b) => Term::imp(a.expand(), b.expand()),
            Term::Prime(t) => Term::prime_of(t.expand()),
            Term::Meet(a, b) => meet_expanded(a.expand(), b.expand()),
            Term::Join(a, b) => Term::prime_of(meet_expanded(
                Term::prime_of(a.expand()),
                Term::prime_of(b.expand()),
            )),
        }
    }

    /// True when only `Var`, `Zero` and `Impl` nodes occur.
    pub fn is_expanded(&self) -> bool {
        match self {
            Term::Var(_) | Term::Zero => true,
            Term::Impl(a, b) => a.is_expanded() && b.is_expanded(),
            Term::Prime(_) | Term::Meet(..) | Term::Join(..) => false,
        }
    }

    /// Variables in order of first occurrence (left to right).
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.iter().any(|w| w == v) {
                    out.push(v.clone());
                }
            }
            Term::Zero => {}
            Term::Prime(t) => t.collect_vars(out),
            Term::Impl(a, b) | Term::Meet(a, b) | Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Simultaneous substitution. Unbound variables are left alone.
    pub fn substitute(&self, binding: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => binding.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Zero => Term::Zero,
            Term::Impl(a, b) => Term::imp(a.substitute(binding), b.substitute(binding)),
            Term::Prime(t) => Term::Prime(Box::new(t.substitute(binding))),
            Term::Meet(a, b) => Term::Meet(
                Box::new(a.substitute(binding)),
                Box::new(b.substitute(binding)),
            ),
            Term::Join(a, b) => Term::Join(
                Box::new(a.substitute(binding)),
                Box::new(b.substitute(binding)),
            ),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero => 1,
            Term::Prime(t) => 1 + t.size(),
            Term::Impl(a, b) | Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero => 0,
            Term::Prime(t) => 1 + t.depth(),
            Term::Impl(a, b) | Term::Meet(a, b) | Term::Join(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Renders the term fully parenthesized. With `sugar` on, `t → 0` is
    /// written `t'` and the meet/join expansion patterns are folded back.
    pub fn print(&self, sugar: bool) -> String {
        let mut s = String::new();
        if sugar {
            write_term(&fold_sugar(self), &mut s);
        } else {
            write_term(&self.expand(), &mut s);
        }
        s
    }
}

fn meet_expanded(a: Term, b: Term) -> Term {
    Term::prime_of(Term::imp(a, Term::prime_of(b)))
}

fn is_zero(t: &Term) -> bool {
    matches!(t, Term::Zero)
}

/// `Some(t)` if `p` is `t → 0`.
fn as_neg(p: &Term) -> Option<&Term> {
    match p {
        Term::Impl(t, z) if is_zero(z) => Some(t),
        _ => None,
    }
}

/// `Some((a, b))` if `p` is the expansion of `a ∧ b`.
fn as_meet(p: &Term) -> Option<(&Term, &Term)> {
    let inner = as_neg(p)?;
    match inner {
        Term::Impl(a, nb) => Some((a, as_neg(nb)?)),
        _ => None,
    }
}

/// `Some((a, b))` if `p` is the expansion of `a ∨ b`.
fn as_join(p: &Term) -> Option<(&Term, &Term)> {
    let (na, nb) = as_meet(as_neg(p)?)?;
    Some((as_neg(na)?, as_neg(nb)?))
}

fn fold_sugar(t: &Term) -> Term {
    let t = t.expand();
    fold_expanded(&t)
}

fn fold_expanded(t: &Term) -> Term {
    if let Some((a, b)) = as_join(t) {
        return Term::Join(Box::new(fold_expanded(a)), Box::new(fold_expanded(b)));
    }
    if let Some((a, b)) = as_meet(t) {
        return Term::Meet(Box::new(fold_expanded(a)), Box::new(fold_expanded(b)));
    }
    if let Some(a) = as_neg(t) {
        return Term::Prime(Box::new(fold_expanded(a)));
    }
    match t {
        Term::Impl(a, b) => Term::imp(fold_expanded(a), fold_expanded(b)),
        other => other.clone(),
    }
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Zero => out.push('0'),
        Term::Prime(inner) => {
            write_term(inner, out);
            out.push('\'');
        }
        Term::Impl(a, b) => write_binary(a, " -> ", b, out),
        Term::Meet(a, b) => write_binary(a, " /\\ ", b, out),
        Term::Join(a, b) => write_binary(a, " \\/ ", b, out),
    }
}

fn write_binary(a: &Term, op: &str, b: &Term, out: &mut String) {
    out.push('(');
    write_term(a, out);
    out.push_str(op);
    write_term(b, out);
    out.push(')');
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print(true))
    }
}

/// An equation `lhs ≈ rhs`, universally quantified over its variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub name: Option<String>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        Identity {
            lhs,
            rhs,
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Identity {
        self.name = Some(name.into());
        self
    }

    /// Union of both sides' variables, lhs first.
    pub fn vars(&self) -> Vec<String> {
        let mut vars = self.lhs.free_vars();
        for v in self.rhs.free_vars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    }

    pub fn expand(&self) -> Identity {
        Identity {
            lhs: self.lhs.expand(),
            rhs: self.rhs.expand(),
            name: self.name.clone(),
        }
    }

    pub fn flipped(&self) -> Identity {
        Identity {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            name: self.name.clone(),
        }
    }

    pub fn substitute(&self, binding: &BTreeMap<String, Term>) -> Identity {
        Identity {
            lhs: self.lhs.substitute(binding),
            rhs: self.rhs.substitute(binding),
            name: self.name.clone(),
        }
    }

    pub fn print(&self, sugar: bool) -> String {
        format!("{} ≈ {}", self.lhs.print(sugar), self.rhs.print(sugar))
    }

    /// Label used in reports: the name when present, else the sugared text.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.print(true))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print(true))
    }
}

/// Result of [`parse`]: the text was either a lone term or an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Identity(Identity),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at byte {offset}, expected {expected}")]
    Unexpected {
        offset: usize,
        found: String,
        expected: &'static str,
    },
    #[error("unexpected end of input at byte {offset}, expected {expected}")]
    UnexpectedEnd {
        offset: usize,
        expected: &'static str,
    },
    #[error("ambiguous chain of binary operators at byte {offset}; parenthesize each application")]
    Ambiguous { offset: usize },
    #[error("invalid character {ch:?} at byte {offset}")]
    BadChar { offset: usize, ch: char },
    #[error("mismatched bracket at byte {offset}: expected {expected:?}")]
    Bracket { offset: usize, expected: char },
    #[error("expected an identity (`≈` or `=`) but got a term")]
    NotIdentity,
    #[error("expected a term but got an identity")]
    NotTerm,
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Unexpected { offset, .. }
            | ParseError::UnexpectedEnd { offset, .. }
            | ParseError::Ambiguous { offset }
            | ParseError::BadChar { offset, .. }
            | ParseError::Bracket { offset, .. } => Some(*offset),
            ParseError::NotIdentity | ParseError::NotTerm => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Impl,
    Meet,
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(String),
    Zero,
    Open(char),
    Close(char),
    Op(Op),
    Prime,
    Eq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::Zero => "`0`".into(),
            Tok::Open(c) | Tok::Close(c) => format!("`{c}`"),
            Tok::Op(Op::Impl) => "`->`".into(),
            Tok::Op(Op::Meet) => "`/\\`".into(),
            Tok::Op(Op::Join) => "`\\/`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Eq => "`≈`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' | '[' | '{' => Tok::Open(c),
            ')' | ']' | '}' => Tok::Close(c),
            '\'' | '′' | '’' => Tok::Prime,
            '″' => {
                toks.push((i, Tok::Prime));
                Tok::Prime
            }
            '0' => Tok::Zero,
            '≈' | '=' => Tok::Eq,
            '→' => Tok::Op(Op::Impl),
            '∧' => Tok::Op(Op::Meet),
            '∨' => Tok::Op(Op::Join),
            '-' => match chars.next() {
                Some((_, '>')) => Tok::Op(Op::Impl),
                _ => return Err(ParseError::BadChar { offset: i, ch: c }),
            },
            '/' => match chars.next() {
                Some((_, '\\')) => Tok::Op(Op::Meet),
                _ => return Err(ParseError::BadChar { offset: i, ch: c }),
            },
            '\\' => match chars.next() {
                Some((_, '/')) => Tok::Op(Op::Join),
                _ => return Err(ParseError::BadChar { offset: i, ch: c }),
            },
            c if c.is_ascii_lowercase() => {
                let mut name = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Var(name)
            }
            _ => return Err(ParseError::BadChar { offset: i, ch: c }),
        };
        toks.push((i, tok));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn closing(open: char) -> char {
    match open {
        '(' => ')',
        '[' => ']',
        _ => '}',
    }
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.toks.get(self.pos) {
            Some((offset, tok)) => ParseError::Unexpected {
                offset: *offset,
                found: tok.describe(),
                expected,
            },
            None => ParseError::UnexpectedEnd {
                offset: self.end,
                expected,
            },
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let lhs = self.postfix()?;
        let op = match self.peek() {
            Some(Tok::Op(op)) => *op,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.postfix()?;
        if let Some(Tok::Op(_)) = self.peek() {
            return Err(ParseError::Ambiguous {
                offset: self.offset(),
            });
        }
        let (a, b) = (Box::new(lhs), Box::new(rhs));
        Ok(match op {
            Op::Impl => Term::Impl(a, b),
            Op::Meet => Term::Meet(a, b),
            Op::Join => Term::Join(a, b),
        })
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while let Some(Tok::Prime) = self.peek() {
            self.pos += 1;
            t = Term::Prime(Box::new(t));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Term::Var(v))
            }
            Some(Tok::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::Open(c)) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Close(d)) if *d == closing(c) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(Tok::Close(_)) => Err(ParseError::Bracket {
                        offset: self.offset(),
                        expected: closing(c),
                    }),
                    _ => Err(self.unexpected("closing bracket")),
                }
            }
            _ => Err(self.unexpected("variable, `0` or `(`")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            Err(self.unexpected("end of input"))
        } else {
            Ok(())
        }
    }
}

fn parse_raw(text: &str) -> Result<(Term, Option<Term>), ParseError> {
    let mut p = Parser::new(text)?;
    let lhs = p.expr()?;
    let rhs = if let Some(Tok::Eq) = p.peek() {
        p.pos += 1;
        Some(p.expr()?)
    } else {
        None
    };
    p.finish()?;
    Ok((lhs, rhs))
}

/// Parses a term or an identity and expands all sugar.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    Ok(match parse_raw(text)? {
        (t, None) => Parsed::Term(t.expand()),
        (l, Some(r)) => Parsed::Identity(Identity::new(l.expand(), r.expand())),
    })
}

/// Parses a term and expands it.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_sugared(text).map(|t| t.expand())
}

/// Parses a term keeping `′`, `∧`, `∨` nodes.
pub fn parse_term_sugared(text: &str) -> Result<Term, ParseError> {
    match parse_raw(text)? {
        (t, None) => Ok(t),
        _ => Err(ParseError::NotTerm),
    }
}

/// Parses an identity and expands both sides.
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    parse_identity_sugared(text).map(|id| id.expand())
}

/// Parses an identity keeping sugar nodes.
pub fn parse_identity_sugared(text: &str) -> Result<Identity, ParseError> {
    match parse_raw(text)? {
        (l, Some(r)) => Ok(Identity::new(l, r)),
        _ => Err(ParseError::NotIdentity),
    }
}
