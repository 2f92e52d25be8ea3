//! Relation statements and index predicates as parsed text.
//!
//! Statement grammar, whitespace-separated products:
//!
//! ```text
//! expr    := ['-'] factor+ | '0'
//! factor  := Y(a,b) | H(a,b) | qH(a,b) | d | w(a,b,c,e)
//!          | [expr,expr] | [expr,expr]_q | [expr,expr]_1/q | [H(a,b)]_q
//! ```
//!
//! `d` is `q − q⁻¹`, `qH(a,b)` is `q^(H_ab)`, `w(a,b,c,e)` is the weight
//! pairing `(e_a − e_b, e_c − e_e)`. Predicates are `|`-separated
//! alternatives of `,`-separated chains such as `i<k<j` or `i!=k`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::fock::SparseOperator;
use crate::generators::GeneratorSet;
use crate::ring::{q_delta, Laurent, QExponent};
use crate::{Error, Result};

/// Index variable, by slot in the family's variable list.
pub type Var = usize;

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Zero,
    Y(Var, Var),
    H(Var, Var),
    QH(Var, Var),
    QNumber(Var, Var),
    Delta,
    Weight([Var; 4]),
    Bracket(Box<Expr>, Box<Expr>, QExponent),
}

/// `±` a product of factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub negated: bool,
    pub factors: Vec<Factor>,
}

impl Expr {
    pub fn is_zero(&self) -> bool {
        self.factors.iter().any(|f| matches!(f, Factor::Zero))
    }

    /// Evaluates under an index assignment (1-based indices per slot).
    pub fn evaluate(&self, gens: &GeneratorSet, values: &[usize]) -> Result<SparseOperator> {
        let root = gens.root();
        if self.is_zero() {
            return Ok(gens.zero());
        }
        let mut op = gens.identity();
        let mut scalar = Laurent::from_integer(root, if self.negated { -1 } else { 1 });
        for factor in &self.factors {
            match factor {
                Factor::Zero => unreachable!("handled above"),
                Factor::Y(a, b) => op = &op * gens.y(values[*a], values[*b])?,
                Factor::H(a, b) => op = &op * &gens.h(values[*a], values[*b])?,
                Factor::QH(a, b) => op = &op * &gens.q_cartan(values[*a], values[*b], 1.into())?,
                Factor::QNumber(a, b) => op = &op * &gens.q_number_cartan(values[*a], values[*b])?,
                Factor::Delta => scalar = &scalar * &q_delta(root),
                Factor::Weight(v) => {
                    let [a, b, c, e] = v.map(|x| values[x]);
                    let delta = |x: usize, y: usize| i64::from(x == y);
                    let w = delta(a, c) - delta(a, e) - delta(b, c) + delta(b, e);
                    scalar = scalar.scale(&BigRational::from_integer(w.into()));
                }
                Factor::Bracket(x, y, c) => {
                    let bracket =
                        SparseOperator::q_commutator(&x.evaluate(gens, values)?, &y.evaluate(gens, values)?, *c)?;
                    op = &op * &bracket;
                }
            }
        }
        Ok(op.scale(&scalar))
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, factor: &Factor, names: &[char]) -> fmt::Result {
    match factor {
        Factor::Zero => f.write_str("0"),
        Factor::Y(a, b) => write!(f, "Y({},{})", names[*a], names[*b]),
        Factor::H(a, b) => write!(f, "H({},{})", names[*a], names[*b]),
        Factor::QH(a, b) => write!(f, "qH({},{})", names[*a], names[*b]),
        Factor::QNumber(a, b) => write!(f, "[H({},{})]_q", names[*a], names[*b]),
        Factor::Delta => f.write_str("d"),
        Factor::Weight(v) => write!(f, "w({},{},{},{})", names[v[0]], names[v[1]], names[v[2]], names[v[3]]),
        Factor::Bracket(x, y, c) => {
            f.write_str("[")?;
            write_expr(f, x, names)?;
            f.write_str(",")?;
            write_expr(f, y, names)?;
            f.write_str("]")?;
            if *c == QExponent::from(1) {
                f.write_str("_q")?;
            } else if *c == QExponent::from(-1) {
                f.write_str("_1/q")?;
            }
            Ok(())
        }
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, names: &[char]) -> fmt::Result {
    if e.negated {
        f.write_str("-")?;
    }
    for (k, factor) in e.factors.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write_factor(f, factor, names)?;
    }
    Ok(())
}

/// An expression bundled with its variable names, for display.
pub struct Named<'a> {
    pub expr: &'a Expr,
    pub names: &'a [char],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self.expr, self.names)
    }
}

/// Variable registry shared between a predicate and its statements.
#[derive(Clone, Debug, Default)]
pub struct Vars {
    names: Vec<char>,
}

impl Vars {
    pub fn names(&self) -> &[char] {
        &self.names
    }

    fn slot(&mut self, c: char) -> Var {
        match self.names.iter().position(|&x| x == c) {
            Some(k) => k,
            None => {
                self.names.push(c);
                self.names.len() - 1
            }
        }
    }
}

fn syntax(input: &str, reason: &str) -> Error {
    Error::InvalidConfig(format!("cannot parse relation text {input:?}: {reason}"))
}

struct Parser<'a> {
    input: &'a str,
    rest: &'a str,
    vars: &'a mut Vars,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if let Some(r) = self.rest.strip_prefix(token) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(syntax(self.input, &format!("expected {token:?} at {:?}", self.rest)))
        }
    }

    fn var(&mut self) -> Result<Var> {
        self.skip_ws();
        let mut chars = self.rest.chars();
        match chars.next() {
            Some(c) if c.is_ascii_lowercase() => {
                self.rest = chars.as_str();
                Ok(self.vars.slot(c))
            }
            _ => Err(syntax(self.input, "expected an index variable")),
        }
    }

    fn pair(&mut self) -> Result<(Var, Var)> {
        self.expect("(")?;
        let a = self.var()?;
        self.expect(",")?;
        let b = self.var()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<Expr> {
        let negated = self.eat("-");
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            if self.rest.is_empty() || self.rest.starts_with(',') || self.rest.starts_with(']') {
                break;
            }
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            return Err(syntax(self.input, "empty product"));
        }
        Ok(Expr { negated, factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.eat("0") {
            return Ok(Factor::Zero);
        }
        if self.eat("qH") {
            let (a, b) = self.pair()?;
            return Ok(Factor::QH(a, b));
        }
        if self.eat("Y") {
            let (a, b) = self.pair()?;
            return Ok(Factor::Y(a, b));
        }
        if self.eat("H") {
            let (a, b) = self.pair()?;
            return Ok(Factor::H(a, b));
        }
        if self.eat("d") {
            return Ok(Factor::Delta);
        }
        if self.eat("w") {
            self.expect("(")?;
            let mut v = [0; 4];
            for (k, slot) in v.iter_mut().enumerate() {
                if k > 0 {
                    self.expect(",")?;
                }
                *slot = self.var()?;
            }
            self.expect(")")?;
            return Ok(Factor::Weight(v));
        }
        if self.eat("[") {
            let first = self.expr()?;
            if self.eat("]") {
                self.expect("_q")?;
                return match first.factors.as_slice() {
                    [Factor::H(a, b)] if !first.negated => Ok(Factor::QNumber(*a, *b)),
                    _ => Err(syntax(self.input, "only [H(a,b)]_q is a q-number")),
                };
            }
            self.expect(",")?;
            let second = self.expr()?;
            self.expect("]")?;
            let c = if self.eat("_1/q") {
                QExponent::from(-1)
            } else if self.eat("_q") {
                QExponent::from(1)
            } else {
                QExponent::ZERO
            };
            return Ok(Factor::Bracket(Box::new(first), Box::new(second), c));
        }
        Err(syntax(self.input, &format!("unexpected input at {:?}", self.rest)))
    }
}

pub fn parse_expr(input: &str, vars: &mut Vars) -> Result<Expr> {
    let mut p = Parser { input, rest: input, vars };
    let e = p.expr()?;
    p.skip_ws();
    if !p.rest.is_empty() {
        return Err(syntax(input, "trailing input"));
    }
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Less,
    Greater,
    NotEqual,
}

/// A disjunction of conjunctions of pairwise comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    alternatives: Vec<Vec<(Var, Cmp, Var)>>,
}

impl Predicate {
    pub fn holds(&self, values: &[usize]) -> bool {
        self.alternatives.iter().any(|clauses| {
            clauses.iter().all(|&(a, c, b)| match c {
                Cmp::Less => values[a] < values[b],
                Cmp::Greater => values[a] > values[b],
                Cmp::NotEqual => values[a] != values[b],
            })
        })
    }
}

pub fn parse_predicate(input: &str, vars: &mut Vars) -> Result<Predicate> {
    let mut alternatives = Vec::new();
    for alt in input.split('|') {
        let mut clauses = Vec::new();
        for chain in alt.split(',') {
            let chain: String = chain.chars().filter(|c| !c.is_whitespace()).collect();
            let mut rest = chain.as_str();
            let mut prev: Option<Var> = None;
            let mut pending: Option<Cmp> = None;
            while !rest.is_empty() {
                let mut chars = rest.chars();
                let c = chars.next().expect("non-empty");
                if c.is_ascii_lowercase() {
                    let v = vars.slot(c);
                    if let (Some(p), Some(cmp)) = (prev, pending.take()) {
                        clauses.push((p, cmp, v));
                    } else if prev.is_some() {
                        return Err(syntax(input, "two variables without a comparison"));
                    }
                    prev = Some(v);
                    rest = chars.as_str();
                } else if let Some(r) = rest.strip_prefix("!=") {
                    pending = Some(Cmp::NotEqual);
                    rest = r;
                } else if let Some(r) = rest.strip_prefix('<') {
                    pending = Some(Cmp::Less);
                    rest = r;
                } else if let Some(r) = rest.strip_prefix('>') {
                    pending = Some(Cmp::Greater);
                    rest = r;
                } else {
                    return Err(syntax(input, "unexpected character in predicate"));
                }
            }
            if pending.is_some() || prev.is_none() {
                return Err(syntax(input, "dangling comparison"));
            }
        }
        alternatives.push(clauses);
    }
    Ok(Predicate { alternatives })
}
