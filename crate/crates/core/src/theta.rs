//! Parsing of side-length expressions and canonicalization into algebraic classes.
//!
//! Accepted syntax is a small arithmetic language over rational literals with
//! `sqrt(..)` and `qroot(..)` (fourth root). Anything whose square does not land
//! in a single real quadratic field, apart from the quartic-root forms
//! `α + β·t^(1/4)`, is rejected.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_traits::One;
use thiserror::Error;

use crate::exactnum::{is_rational_square, ExactError, QuadExt, Rat};
use crate::numtheory::{factorize, FactorError};

/// Which conjugate `θ^2 = α ± sqrt(β)` denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn factor(self) -> Rat {
        match self {
            Sign::Plus => Rat::one(),
            Sign::Minus => -Rat::one(),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(format!("expected `+` or `-`, found `{s}`")),
        }
    }
}

/// `θ = α + β·t^(1/4)` with `β != 0` and `t` a fourth-power-free non-square integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticForm {
    alpha: Rat,
    beta: Rat,
    t: BigInt,
}

impl QuarticForm {
    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }

    /// True for `α = 0`, where `θ^2 = β^2 sqrt(t)` has zero rational part.
    pub fn has_zero_alpha(&self) -> bool {
        self.alpha.is_zero()
    }
}

/// Canonical algebraic class of a positive side length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ThetaClass {
    /// `θ = λ`, degree 1.
    RationalSide { lambda: Rat },
    /// `θ = λ sqrt(q)` with `q >= 2` square-free.
    QuadSurd { lambda: Rat, q: BigInt },
    /// `θ^2 = α ± sqrt(β)` with `β > 0` not a rational square.
    Biquadratic { alpha: Rat, sign: Sign, beta: Rat },
    /// Degree-4 numbers that are not of the biquadratic shape with nonzero `α`.
    NonBiquadratic(QuarticForm),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("side length is not positive")]
    NonPositive,
    #[error("unsupported nesting depth at position {pos}")]
    Nesting { pos: usize },
    #[error("unsupported expression at position {pos}: {message}")]
    Unsupported { pos: usize, message: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl From<FactorError> for ThetaError {
    fn from(e: FactorError) -> Self {
        ThetaError::Exact(ExactError::Factor(e))
    }
}

impl ThetaError {
    /// 1-based character position, when the error is tied to one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ThetaError::Syntax { pos, .. } | ThetaError::Nesting { pos } | ThetaError::Unsupported { pos, .. } => {
                Some(*pos)
            }
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// lexer and parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Sqrt,
    Qroot,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ThetaError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "sqrt" => Tok::Sqrt,
                "qroot" => Tok::Qroot,
                _ => return Err(ThetaError::Syntax { pos, message: format!("unknown function `{word}`") }),
            };
            out.push((pos, tok));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ThetaError::Syntax { pos, message: format!("unexpected character `{c}`") }),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Debug)]
enum Node {
    Num(Rat),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Sqrt(Box<Node>),
    Qroot(Box<Node>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

type Spanned = (usize, Node);

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: &str) -> Result<T, ThetaError> {
        Err(ThetaError::Syntax { pos: self.pos(), message: message.to_string() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ThetaError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.err(&format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Spanned, ThetaError> {
        let (pos, mut lhs) = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    let (_, rhs) = self.term()?;
                    lhs = Node::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    let (_, rhs) = self.term()?;
                    lhs = Node::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok((pos, lhs)),
            }
        }
    }

    fn term(&mut self) -> Result<Spanned, ThetaError> {
        let (pos, mut lhs) = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            let (_, rhs) = self.factor()?;
            lhs = Node::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok((pos, lhs))
    }

    fn factor(&mut self) -> Result<Spanned, ThetaError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                let (_, inner) = self.factor()?;
                Ok((pos, Node::Neg(Box::new(inner))))
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.factor()
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Spanned, ThetaError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.at += 1;
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return self.err("expected denominator");
                    };
                    self.at += 1;
                    let r = Rat::checked_new(n, d)
                        .map_err(|_| ThetaError::Syntax { pos, message: "zero denominator".to_string() })?;
                    return Ok((pos, Node::Num(r)));
                }
                Ok((pos, Node::Num(Rat::from_integer(n))))
            }
            Some(tok @ (Tok::Sqrt | Tok::Qroot)) => {
                self.at += 1;
                self.expect(Tok::LParen, "`(`")?;
                let (_, inner) = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                let node = if tok == Tok::Sqrt { Node::Sqrt(Box::new(inner)) } else { Node::Qroot(Box::new(inner)) };
                Ok((pos, node))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let (_, inner) = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok((pos, inner))
            }
            Some(_) => self.err("expected a number, `sqrt`, `qroot` or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

// ---------------------------------------------------------------------------
// evaluation into exact values

#[derive(Debug, Clone)]
enum Value {
    /// An element of a real quadratic field.
    Field(QuadExt),
    /// `coef * sqrt(inner)` with `inner` irrational.
    Root { coef: Rat, inner: QuadExt },
    /// `α + β t^(1/4)`.
    Quartic(QuarticForm),
}

fn unsupported(pos: usize, message: &str) -> ThetaError {
    ThetaError::Unsupported { pos, message: message.to_string() }
}

/// `r^(1/4) = c * t^(1/4)` with rational `c > 0` and fourth-power-free integer `t`.
fn fourth_root_form(r: &Rat) -> Result<(Rat, BigInt), ThetaError> {
    // n/m = n m^3 / m^4
    let n = r.numer() * num_traits::pow(r.denom().clone(), 3);
    let n: BigUint = n.to_biguint().ok_or(ThetaError::NonPositive)?;
    let mut s = BigUint::one();
    let mut t = BigUint::one();
    if !n.is_one() {
        for (p, e) in factorize(&n)?.iter() {
            s *= p.pow(e / 4);
            t *= p.pow(e % 4);
        }
    }
    let c = Rat::new(BigInt::from_biguint(BigSign::Plus, s), r.denom().clone());
    Ok((c, BigInt::from_biguint(BigSign::Plus, t)))
}

/// Canonical value of `coef * r^(1/4)` for rational `r > 0`.
fn quartic_value(coef: &Rat, r: &Rat) -> Result<Value, ThetaError> {
    let (c, t) = fourth_root_form(r)?;
    let coef = coef * &c;
    let tr = Rat::from_integer(t.clone());
    if let Some(u) = is_rational_square(&tr) {
        // t^(1/4) = sqrt(u)
        return Ok(Value::Field(QuadExt::sqrt_of(&u)?.scale(&coef)));
    }
    Ok(Value::Quartic(QuarticForm { alpha: Rat::zero(), beta: coef, t }))
}

fn eval(node: &Node, pos: usize) -> Result<Value, ThetaError> {
    Ok(match node {
        Node::Num(r) => Value::Field(QuadExt::rational(r.clone())),
        Node::Neg(x) => match eval(x, pos)? {
            Value::Field(v) => Value::Field(v.neg()),
            Value::Root { coef, inner } => Value::Root { coef: -coef, inner },
            Value::Quartic(q) => Value::Quartic(QuarticForm { alpha: -q.alpha, beta: -q.beta, t: q.t }),
        },
        Node::Add(l, r) => add(eval(l, pos)?, eval(r, pos)?, pos)?,
        Node::Sub(l, r) => {
            let rhs = eval(&Node::Neg(Box::new(clone_node(r))), pos)?;
            add(eval(l, pos)?, rhs, pos)?
        }
        Node::Mul(l, r) => mul(eval(l, pos)?, eval(r, pos)?, pos)?,
        Node::Sqrt(x) => match eval(x, pos)? {
            Value::Field(v) => {
                if v.sign() == Ordering::Less {
                    return Err(ThetaError::NonPositive);
                }
                match v.as_rational() {
                    Some(r) => Value::Field(QuadExt::sqrt_of(r)?),
                    None => Value::Root { coef: Rat::one(), inner: v },
                }
            }
            _ => return Err(ThetaError::Nesting { pos }),
        },
        Node::Qroot(x) => match eval(x, pos)? {
            Value::Field(v) => match v.as_rational() {
                Some(r) if r.is_positive() => quartic_value(&Rat::one(), r)?,
                Some(r) if r.is_zero() => Value::Field(QuadExt::zero()),
                Some(_) => return Err(ThetaError::NonPositive),
                None => return Err(ThetaError::Nesting { pos }),
            },
            _ => return Err(ThetaError::Nesting { pos }),
        },
    })
}

fn clone_node(n: &Node) -> Node {
    match n {
        Node::Num(r) => Node::Num(r.clone()),
        Node::Neg(x) => Node::Neg(Box::new(clone_node(x))),
        Node::Add(a, b) => Node::Add(Box::new(clone_node(a)), Box::new(clone_node(b))),
        Node::Sub(a, b) => Node::Sub(Box::new(clone_node(a)), Box::new(clone_node(b))),
        Node::Mul(a, b) => Node::Mul(Box::new(clone_node(a)), Box::new(clone_node(b))),
        Node::Sqrt(x) => Node::Sqrt(Box::new(clone_node(x))),
        Node::Qroot(x) => Node::Qroot(Box::new(clone_node(x))),
    }
}

fn add(l: Value, r: Value, pos: usize) -> Result<Value, ThetaError> {
    match (l, r) {
        (Value::Field(a), Value::Field(b)) => {
            a.add(&b).map(Value::Field).map_err(|_| unsupported(pos, "sum of different square roots"))
        }
        (Value::Field(a), Value::Quartic(q)) | (Value::Quartic(q), Value::Field(a)) => match a.as_rational() {
            Some(r) => Ok(Value::Quartic(QuarticForm { alpha: &q.alpha + r, ..q })),
            None => Err(unsupported(pos, "irrational term added to a fourth root")),
        },
        (Value::Quartic(p), Value::Quartic(q)) if p.t == q.t => {
            let beta = &p.beta + &q.beta;
            if beta.is_zero() {
                Ok(Value::Field(QuadExt::rational(&p.alpha + &q.alpha)))
            } else {
                Ok(Value::Quartic(QuarticForm { alpha: &p.alpha + &q.alpha, beta, t: p.t }))
            }
        }
        _ => Err(unsupported(pos, "sum outside a single quadratic layer")),
    }
}

fn mul(l: Value, r: Value, pos: usize) -> Result<Value, ThetaError> {
    let scalar = |v: &Value| match v {
        Value::Field(x) => x.as_rational().cloned(),
        _ => None,
    };
    if let Some(k) = scalar(&l).or_else(|| scalar(&r)) {
        let other = if scalar(&l).is_some() { r } else { l };
        return Ok(match other {
            Value::Field(x) => Value::Field(x.scale(&k)),
            Value::Root { coef, inner } => Value::Root { coef: coef * &k, inner },
            Value::Quartic(_) if k.is_zero() => Value::Field(QuadExt::zero()),
            Value::Quartic(q) => Value::Quartic(QuarticForm { alpha: &q.alpha * &k, beta: &q.beta * &k, t: q.t }),
        });
    }
    match (l, r) {
        (Value::Field(a), Value::Field(b)) => {
            a.mul(&b).map(Value::Field).map_err(|_| unsupported(pos, "product of different square roots"))
        }
        _ => Err(unsupported(pos, "product outside a single quadratic layer")),
    }
}

/// Class of a positive `θ` given exactly by its square in `Q(sqrt(d))`.
fn from_square(theta_sq: &QuadExt) -> Result<ThetaClass, ThetaError> {
    if !theta_sq.is_positive() {
        return Err(ThetaError::NonPositive);
    }
    if let Some(r) = theta_sq.as_rational() {
        if let Some(l) = is_rational_square(r) {
            return Ok(ThetaClass::RationalSide { lambda: l });
        }
        let root = QuadExt::sqrt_of(r)?;
        return Ok(ThetaClass::QuadSurd { lambda: root.b().clone(), q: root.d().clone() });
    }
    let beta = theta_sq.b().square() * Rat::from_integer(theta_sq.d().clone());
    let sign = if theta_sq.b().is_positive() { Sign::Plus } else { Sign::Minus };
    ThetaClass::biquadratic(theta_sq.a().clone(), sign, beta)
}

fn classify_value(v: Value) -> Result<ThetaClass, ThetaError> {
    match v {
        Value::Field(x) => {
            if !x.is_positive() {
                return Err(ThetaError::NonPositive);
            }
            if let Some(r) = x.as_rational() {
                return Ok(ThetaClass::RationalSide { lambda: r.clone() });
            }
            if x.a().is_zero() {
                return Ok(ThetaClass::QuadSurd { lambda: x.b().clone(), q: x.d().clone() });
            }
            from_square(&x.square())
        }
        Value::Root { coef, inner } => {
            if !coef.is_positive() {
                return Err(ThetaError::NonPositive);
            }
            from_square(&inner.scale(&coef.square()))
        }
        Value::Quartic(q) => {
            if !quartic_is_positive(&q) {
                return Err(ThetaError::NonPositive);
            }
            Ok(ThetaClass::NonBiquadratic(q))
        }
    }
}

/// Exact sign of `α + β t^(1/4)` by comparing fourth powers.
fn quartic_is_positive(q: &QuarticForm) -> bool {
    let (sa, sb) = (q.alpha.signum(), q.beta.signum());
    if sa >= 0 && sb >= 0 {
        return sa + sb > 0;
    }
    if sa <= 0 && sb <= 0 {
        return false;
    }
    let lhs = q.alpha.pow(4);
    let rhs = q.beta.pow(4) * Rat::from_integer(q.t.clone());
    if lhs > rhs {
        sa > 0
    } else {
        sb > 0
    }
}

/// Parses and canonicalizes a side-length expression.
pub fn parse_theta(text: &str) -> Result<ThetaClass, ThetaError> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, at: 0, end };
    let (pos, node) = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    classify_value(eval(&node, pos)?)
}

impl FromStr for ThetaClass {
    type Err = ThetaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_theta(s)
    }
}

impl ThetaClass {
    /// Validated biquadratic class; `α = 0` is routed to the quartic-root form.
    pub fn biquadratic(alpha: Rat, sign: Sign, beta: Rat) -> Result<ThetaClass, ThetaError> {
        if !beta.is_positive() || is_rational_square(&beta).is_some() {
            return Err(unsupported(0, "sqrt(beta) must be irrational"));
        }
        let root = QuadExt::sqrt_of(&beta)?;
        let theta_sq = root.scale(&sign.factor()).add_rat(&alpha);
        if !theta_sq.is_positive() {
            return Err(ThetaError::NonPositive);
        }
        if alpha.is_zero() {
            // θ = β^(1/4)
            return match quartic_value(&Rat::one(), &beta)? {
                Value::Quartic(q) => Ok(ThetaClass::NonBiquadratic(q)),
                _ => unreachable!("beta is not a rational square"),
            };
        }
        Ok(ThetaClass::Biquadratic { alpha, sign, beta })
    }

    /// Algebraic degree of θ over the rationals.
    pub fn degree(&self) -> u32 {
        match self {
            ThetaClass::RationalSide { .. } => 1,
            ThetaClass::QuadSurd { .. } => 2,
            // θ has degree 2 exactly when sqrt(α ± sqrt β) denests inside Q(sqrt β)
            ThetaClass::Biquadratic { .. } if self.theta_squared().and_then(|s| sqrt_in_field(&s)).is_some() => 2,
            ThetaClass::Biquadratic { .. } => 4,
            ThetaClass::NonBiquadratic(_) => 4,
        }
    }

    /// Exact `θ^2` when it lies in a real quadratic field.
    pub fn theta_squared(&self) -> Option<QuadExt> {
        match self {
            ThetaClass::RationalSide { lambda } => Some(QuadExt::rational(lambda.square())),
            ThetaClass::QuadSurd { lambda, q } => {
                Some(QuadExt::rational(lambda.square() * Rat::from_integer(q.clone())))
            }
            ThetaClass::Biquadratic { alpha, sign, beta } => {
                let root = QuadExt::sqrt_of(beta).expect("validated beta");
                Some(root.scale(&sign.factor()).add_rat(alpha))
            }
            ThetaClass::NonBiquadratic(q) if q.alpha.is_zero() => {
                let root = QuadExt::sqrt_of(&Rat::from_integer(q.t.clone())).expect("t > 0");
                Some(root.scale(&q.beta.square()))
            }
            ThetaClass::NonBiquadratic(_) => None,
        }
    }
}

/// `sqrt(x)` inside `Q(sqrt d)` when it exists there.
fn sqrt_in_field(x: &QuadExt) -> Option<QuadExt> {
    if x.is_rational() {
        return is_rational_square(x.a()).map(QuadExt::rational);
    }
    // (u + v sqrt d)^2 = x  <=>  u^2 + d v^2 = a, 2uv = b; u^2 = (a ± sqrt(norm)) / 2
    let n = is_rational_square(&x.norm())?;
    let half = Rat::new(1, 2);
    for u2 in [(x.a() + &n) * &half, (x.a() - &n) * &half] {
        if let Some(u) = is_rational_square(&u2) {
            if u.is_zero() {
                continue;
            }
            let v = x.b() / (Rat::from(2) * &u);
            let cand = QuadExt::new(u, v, x.d().clone()).ok()?;
            if cand.square() == *x {
                return Some(if cand.is_positive() { cand } else { cand.neg() });
            }
        }
    }
    None
}

/// The class of `λ θ` for rational `λ > 0`.
///
/// # Panics
/// If `λ <= 0`.
pub fn rescale(t: &ThetaClass, lambda: &Rat) -> ThetaClass {
    assert!(lambda.is_positive(), "rescaling factor must be positive");
    match t {
        ThetaClass::RationalSide { lambda: l } => ThetaClass::RationalSide { lambda: l * lambda },
        ThetaClass::QuadSurd { lambda: l, q } => ThetaClass::QuadSurd { lambda: l * lambda, q: q.clone() },
        ThetaClass::Biquadratic { alpha, sign, beta } => {
            let l2 = lambda.square();
            ThetaClass::Biquadratic { alpha: alpha * &l2, sign: *sign, beta: beta * &l2.square() }
        }
        ThetaClass::NonBiquadratic(q) => {
            ThetaClass::NonBiquadratic(QuarticForm { alpha: &q.alpha * lambda, beta: &q.beta * lambda, t: q.t.clone() })
        }
    }
}

fn coef_prefix(c: &Rat) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("{c}*")
    }
}

impl fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaClass::RationalSide { lambda } => write!(f, "{lambda}"),
            ThetaClass::QuadSurd { lambda, q } => write!(f, "{}sqrt({q})", coef_prefix(lambda)),
            ThetaClass::Biquadratic { alpha, sign, beta } => {
                let root = QuadExt::sqrt_of(beta).map_err(|_| fmt::Error)?;
                write!(f, "sqrt({alpha} {} {}sqrt({}))", sign.as_str(), coef_prefix(root.b()), root.d())
            }
            ThetaClass::NonBiquadratic(q) => {
                let term = format!("{}qroot({})", coef_prefix(&q.beta.abs()), q.t);
                match (q.alpha.is_zero(), q.beta.is_negative()) {
                    (true, false) => write!(f, "{term}"),
                    (true, true) => write!(f, "-{term}"),
                    (false, neg) => write!(f, "{} {} {term}", q.alpha, if neg { '-' } else { '+' }),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> ThetaClass {
        parse_theta(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    fn surd(l: Rat, q: i64) -> ThetaClass {
        ThetaClass::QuadSurd { lambda: l, q: BigInt::from(q) }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(parse("2*sqrt(7)"), surd(Rat::from(2), 7));
        assert_eq!(
            parse("sqrt(25+12*sqrt(3))"),
            ThetaClass::Biquadratic { alpha: Rat::from(25), sign: Sign::Plus, beta: Rat::from(432) }
        );
        assert_eq!(parse("sqrt(12)"), surd(Rat::from(2), 3));
        match parse("1 + qroot(2)") {
            ThetaClass::NonBiquadratic(q) => {
                assert!(!q.has_zero_alpha());
                assert_eq!(q.t(), &BigInt::from(2));
            }
            other => panic!("{other:?}"),
        }
        match parse("sqrt(sqrt(5))") {
            ThetaClass::NonBiquadratic(q) => assert!(q.has_zero_alpha()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rational_and_surd_forms() {
        assert_eq!(parse("3/2"), ThetaClass::RationalSide { lambda: Rat::new(3, 2) });
        assert_eq!(parse("sqrt(9/4)"), ThetaClass::RationalSide { lambda: Rat::new(3, 2) });
        assert_eq!(parse("sqrt(2/3)"), surd(Rat::new(1, 3), 6));
        assert_eq!(parse(" 3 * sqrt( 5 ) "), surd(Rat::from(3), 5));
        assert_eq!(parse("qroot(4)"), surd(Rat::one(), 2));
        assert_eq!(parse("qroot(16)"), ThetaClass::RationalSide { lambda: Rat::from(2) });
        assert_eq!(parse("2*sqrt(sqrt(9))"), surd(Rat::from(2), 3));
    }

    #[test]
    fn scaled_biquadratic_folds() {
        // 2 sqrt(25 + 12 sqrt 3): θ^2 = 100 + 48 sqrt 3
        assert_eq!(
            parse("2*sqrt(25+12*sqrt(3))"),
            ThetaClass::Biquadratic { alpha: Rat::from(100), sign: Sign::Plus, beta: Rat::from(6912) }
        );
        assert_eq!(
            parse("sqrt(43 - sqrt(1728))"),
            ThetaClass::Biquadratic { alpha: Rat::from(43), sign: Sign::Minus, beta: Rat::from(1728) }
        );
        // 1 + sqrt 2 has square 3 + 2 sqrt 2
        assert_eq!(
            parse("1+sqrt(2)"),
            ThetaClass::Biquadratic { alpha: Rat::from(3), sign: Sign::Plus, beta: Rat::from(8) }
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_theta("sqrt(2"), Err(ThetaError::Syntax { .. })));
        assert!(matches!(parse_theta("foo(2)"), Err(ThetaError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_theta("2 $"), Err(ThetaError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_theta("-2"), Err(ThetaError::NonPositive)));
        assert!(matches!(parse_theta("0"), Err(ThetaError::NonPositive)));
        assert!(matches!(parse_theta("sqrt(1-sqrt(2))"), Err(ThetaError::NonPositive)));
        assert!(matches!(parse_theta("sqrt(-3)"), Err(ThetaError::NonPositive)));
        assert!(matches!(parse_theta("1 - qroot(2)"), Err(ThetaError::NonPositive)));
        assert!(matches!(parse_theta("sqrt(sqrt(1+sqrt(2)))"), Err(ThetaError::Nesting { .. })));
        assert!(matches!(parse_theta("sqrt(2)+sqrt(3)"), Err(ThetaError::Unsupported { .. })));
        assert!(matches!(parse_theta("1/0"), Err(ThetaError::Syntax { .. })));
        assert!(matches!(parse_theta(""), Err(ThetaError::Syntax { .. })));
    }

    #[test]
    fn quartic_positivity() {
        assert!(parse_theta("2 - qroot(2)").is_ok());
        assert!(parse_theta("-2 + 2*qroot(2)").is_ok());
        assert!(matches!(parse_theta("-2 + qroot(2)"), Err(ThetaError::NonPositive)));
    }

    #[test]
    fn canonical_printing() {
        for (input, printed) in [
            ("2*sqrt(7)", "2*sqrt(7)"),
            ("sqrt(12)", "2*sqrt(3)"),
            ("sqrt(25+sqrt(432))", "sqrt(25 + 12*sqrt(3))"),
            ("sqrt(7/2 + sqrt(13/4))", "sqrt(7/2 + 1/2*sqrt(13))"),
            ("1 + qroot(2)", "1 + qroot(2)"),
            ("3 - 1/2*qroot(32)", "3 - qroot(2)"),
            ("sqrt(sqrt(5))", "qroot(5)"),
            ("4/6", "2/3"),
            ("sqrt(-1 + sqrt(5))", "sqrt(-1 + sqrt(5))"),
        ] {
            let t = parse(input);
            assert_eq!(t.to_string(), printed);
            assert_eq!(parse(&t.to_string()), t);
        }
    }

    #[test]
    fn rescale_examples() {
        assert_eq!(rescale(&surd(Rat::one(), 3), &Rat::from(2)), surd(Rat::from(2), 3));
        let b = ThetaClass::Biquadratic { alpha: Rat::from(25), sign: Sign::Plus, beta: Rat::from(432) };
        assert_eq!(
            rescale(&b, &Rat::new(1, 5)),
            ThetaClass::Biquadratic { alpha: Rat::one(), sign: Sign::Plus, beta: Rat::new(432, 625) }
        );
        assert_eq!(
            rescale(&ThetaClass::RationalSide { lambda: Rat::from(3) }, &Rat::new(1, 3)),
            ThetaClass::RationalSide { lambda: Rat::one() }
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(parse("5").degree(), 1);
        assert_eq!(parse("sqrt(5)").degree(), 2);
        assert_eq!(parse("sqrt(25+12*sqrt(3))").degree(), 4);
        assert_eq!(parse("1+sqrt(2)").degree(), 2);
        assert_eq!(parse("qroot(2)").degree(), 4);
    }

    #[test]
    fn theta_squared_values() {
        assert_eq!(parse("sqrt(25+12*sqrt(3))").theta_squared().unwrap().to_string(), "25 + 12*sqrt(3)");
        assert_eq!(parse("2*sqrt(7)").theta_squared().unwrap(), QuadExt::rational(Rat::from(28)));
        assert!(parse("1+qroot(2)").theta_squared().is_none());
    }
}
