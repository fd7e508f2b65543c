//! The linguistic-expression language and its three semantics.
//!
//! Grammar, lowest precedence first, binary operators left-associative:
//!
//! ```text
//! expr   := term (("or" | "xor") term)*
//! term   := factor ("and" factor)*
//! factor := "not" factor | HEDGE factor | ATOM | "(" expr ")"
//! HEDGE  := "very" | "more_or_less" | "essentially"
//! ATOM   := [A-Za-z_][A-Za-z0-9_]*   (keywords excluded)
//! ```
//!
//! An expression can be evaluated over a [`SelectionMatrix`] with set
//! operations per subject ([`eval_event`]), over vague curves with the
//! componentwise min/max connectives ([`eval_vague`]), or over real
//! membership curves with one of the t-norms ([`eval_tnorm`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::curve::{RealCurve, StepCurve};
use crate::eventology::{EventError, SelectionMatrix, Share, VagueEvent};
use crate::tnorm::{self, TNormError, TNormKind};
use crate::vague::{self, HedgeExponents, HedgeKind, VagueCurve, VagueError, VagueOp};

/// Parenthesis/prefix nesting beyond this depth is rejected.
pub const MAX_NESTING: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Atom(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    SymDiff(Box<Expr>, Box<Expr>),
    Hedge(HedgeKind, Box<Expr>),
}

impl Expr {
    pub fn atom(name: impl Into<String>) -> Self {
        Expr::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Self {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Self {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Self {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Expr, b: Expr) -> Self {
        Expr::SymDiff(Box::new(a), Box::new(b))
    }

    pub fn hedge(kind: HedgeKind, e: Expr) -> Self {
        Expr::Hedge(kind, Box::new(e))
    }

    /// Distinct atom names, sorted.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Expr::Atom(name) => {
                out.insert(name);
            }
            Expr::Not(e) | Expr::Hedge(_, e) => e.collect_atoms(out),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::SymDiff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Fully parenthesized rendering that parses back to `self`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(name) => f.write_str(name),
            Expr::Not(e) => write!(f, "(not {e})"),
            Expr::Hedge(kind, e) => write!(f, "({kind} {e})"),
            Expr::And(a, b) => write!(f, "({a} and {b})"),
            Expr::Or(a, b) => write!(f, "({a} or {b})"),
            Expr::SymDiff(a, b) => write!(f, "({a} xor {b})"),
        }
    }
}

pub fn to_text(e: &Expr) -> String {
    e.to_text()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    And,
    Or,
    Xor,
    Not,
    Hedge(HedgeKind),
    LParen,
    RParen,
    Atom(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::And => f.write_str("'and'"),
            Token::Or => f.write_str("'or'"),
            Token::Xor => f.write_str("'xor'"),
            Token::Not => f.write_str("'not'"),
            Token::Hedge(h) => write!(f, "'{h}'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::Atom(name) => write!(f, "atom '{name}'"),
        }
    }
}

/// A token with the byte offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("illegal character {found:?} at position {position}")]
    Lex { position: usize, found: char },
    #[error("expected {expected} at position {position}, found {found}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },
}

impl SyntaxError {
    pub fn position(&self) -> usize {
        match self {
            SyntaxError::Lex { position, .. } | SyntaxError::Parse { position, .. } => *position,
        }
    }
}

fn keyword(word: &str) -> Option<Token> {
    Some(match word {
        "and" => Token::And,
        "or" => Token::Or,
        "xor" => Token::Xor,
        "not" => Token::Not,
        "very" => Token::Hedge(HedgeKind::Very),
        "more_or_less" => Token::Hedge(HedgeKind::MoreOrLess),
        "essentially" => Token::Hedge(HedgeKind::Essentially),
        _ => return None,
    })
}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => {
                i += 1;
                Token::LParen
            }
            b')' => {
                i += 1;
                Token::RParen
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &input[start..i];
                keyword(word).unwrap_or_else(|| Token::Atom(word.to_owned()))
            }
            _ => {
                let found = input[start..].chars().next().expect("non-empty remainder");
                return Err(SyntaxError::Lex {
                    position: start,
                    found,
                });
            }
        };
        tokens.push(Spanned {
            token,
            position: start,
        });
    }
    Ok(tokens)
}

struct Parser<'t> {
    tokens: &'t [Spanned],
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |s| s.position)
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError::Parse {
            position: self.here(),
            expected: expected.to_owned(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_owned(), Token::to_string),
        }
    }

    fn descend(&mut self) -> Result<(), SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(SyntaxError::Parse {
                position: self.here(),
                expected: format!("at most {MAX_NESTING} levels of nesting"),
                found: "deeper nesting".to_owned(),
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            let build = match self.peek() {
                Some(Token::Or) => Expr::or,
                Some(Token::Xor) => Expr::xor,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = build(lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        self.descend()?;
        let result = match self.peek().cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                self.factor().map(Expr::not)
            }
            Some(Token::Hedge(kind)) => {
                self.pos += 1;
                self.factor().map(|e| Expr::hedge(kind, e))
            }
            Some(Token::Atom(name)) => {
                self.pos += 1;
                Ok(Expr::Atom(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("'not', a hedge, an atom or '('")),
        };
        self.depth -= 1;
        result
    }
}

/// Parses a token stream. `input_len` positions the end-of-input error.
pub fn parse_tokens(tokens: &[Spanned], input_len: usize) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        end: input_len,
        depth: 0,
    };
    let expr = p.expr()?;
    if p.pos < tokens.len() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(expr)
}

pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    let tokens = tokenize(input)?;
    parse_tokens(&tokens, input.len())
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("a hedged operand cannot take part in '{0}' under event semantics; hedges apply after aggregation")]
    HedgedOperand(&'static str),
    #[error(transparent)]
    Event(EventError),
    #[error(transparent)]
    Vague(#[from] VagueError),
    #[error(transparent)]
    TNorm(#[from] TNormError),
}

impl From<EventError> for EvalError {
    fn from(e: EventError) -> Self {
        match e {
            EventError::UnknownAtom(name) => EvalError::UnknownAtom(name),
            other => EvalError::Event(other),
        }
    }
}

/// A membership grade from event evaluation: exact unless a hedge was applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Grade {
    Exact(Share),
    Real(f64),
}

impl Grade {
    pub fn to_f64(self) -> f64 {
        match self {
            Grade::Exact(s) => s.to_f64(),
            Grade::Real(x) => x,
        }
    }

    pub fn exact(self) -> Option<Share> {
        match self {
            Grade::Exact(s) => Some(s),
            Grade::Real(_) => None,
        }
    }
}

pub type GradeCurve = StepCurve<Grade>;

enum Partial {
    Event(VagueEvent),
    Aggregated(RealCurve),
}

fn binary_events(
    a: Partial,
    b: Partial,
    connective: &'static str,
    op: fn(&VagueEvent, &VagueEvent) -> Result<VagueEvent, EventError>,
) -> Result<Partial, EvalError> {
    match (a, b) {
        (Partial::Event(a), Partial::Event(b)) => Ok(Partial::Event(op(&a, &b)?)),
        _ => Err(EvalError::HedgedOperand(connective)),
    }
}

fn event_partial(
    e: &Expr,
    matrix: &SelectionMatrix,
    hedges: &HedgeExponents,
) -> Result<Partial, EvalError> {
    Ok(match e {
        Expr::Atom(name) => Partial::Event(matrix.row(name)?),
        Expr::Not(inner) => match event_partial(inner, matrix, hedges)? {
            Partial::Event(ev) => Partial::Event(ev.not()),
            Partial::Aggregated(c) => Partial::Aggregated(tnorm::curve_complement(&c)),
        },
        Expr::Hedge(kind, inner) => {
            let exponent = hedges.exponent(*kind);
            vague::check_exponent(exponent)?;
            match event_partial(inner, matrix, hedges)? {
                p if exponent == 1.0 => p,
                Partial::Event(ev) => {
                    let real = crate::eventology::to_real(&ev.membership()?);
                    Partial::Aggregated(tnorm::curve_power(&real, exponent))
                }
                Partial::Aggregated(c) => Partial::Aggregated(tnorm::curve_power(&c, exponent)),
            }
        }
        Expr::And(a, b) => binary_events(
            event_partial(a, matrix, hedges)?,
            event_partial(b, matrix, hedges)?,
            "and",
            VagueEvent::and,
        )?,
        Expr::Or(a, b) => binary_events(
            event_partial(a, matrix, hedges)?,
            event_partial(b, matrix, hedges)?,
            "or",
            VagueEvent::or,
        )?,
        Expr::SymDiff(a, b) => binary_events(
            event_partial(a, matrix, hedges)?,
            event_partial(b, matrix, hedges)?,
            "xor",
            VagueEvent::symdiff,
        )?,
    })
}

/// Eventological semantics: connectives act on the per-subject regions of
/// the matrix rows, then the result is averaged over subjects. Hedges act on
/// the averaged curve, so a hedged sub-expression may only be negated or
/// hedged again, not combined with another operand.
pub fn eval_event(
    e: &Expr,
    matrix: &SelectionMatrix,
    hedges: &HedgeExponents,
) -> Result<GradeCurve, EvalError> {
    match event_partial(e, matrix, hedges)? {
        Partial::Event(ev) => Ok(ev.membership()?.map(|s| Grade::Exact(*s))),
        Partial::Aggregated(c) => Ok(c.map(|x| Grade::Real(*x))),
    }
}

fn lookup<'b, C>(bindings: &'b HashMap<String, C>, name: &str) -> Result<&'b C, EvalError> {
    bindings
        .get(name)
        .ok_or_else(|| EvalError::UnknownAtom(name.to_owned()))
}

/// Classic semantics over vague curves. Symmetric difference expands to
/// `(a and not b) or (not a and b)`.
pub fn eval_vague(
    e: &Expr,
    bindings: &HashMap<String, VagueCurve>,
    hedges: &HedgeExponents,
) -> Result<VagueCurve, EvalError> {
    let rec = |x: &Expr| eval_vague(x, bindings, hedges);
    let lift = |op, a: &VagueCurve, b: Option<&VagueCurve>| vague::curve_pointwise(op, a, b);
    Ok(match e {
        Expr::Atom(name) => lookup(bindings, name)?.clone(),
        Expr::Not(a) => lift(VagueOp::Not, &rec(a)?, None)?,
        Expr::Hedge(kind, a) => lift(VagueOp::Hedge(hedges.exponent(*kind)), &rec(a)?, None)?,
        Expr::And(a, b) => lift(VagueOp::And, &rec(a)?, Some(&rec(b)?))?,
        Expr::Or(a, b) => lift(VagueOp::Or, &rec(a)?, Some(&rec(b)?))?,
        Expr::SymDiff(a, b) => {
            let (a, b) = (rec(a)?, rec(b)?);
            let not_a = lift(VagueOp::Not, &a, None)?;
            let not_b = lift(VagueOp::Not, &b, None)?;
            let left = lift(VagueOp::And, &a, Some(&not_b))?;
            let right = lift(VagueOp::And, &not_a, Some(&b))?;
            lift(VagueOp::Or, &left, Some(&right))?
        }
    })
}

/// T-norm semantics over real membership curves: `and` is the t-norm, `or`
/// its dual t-conorm, `not` is `1 - x`, hedges raise to their exponent.
pub fn eval_tnorm(
    e: &Expr,
    kind: TNormKind,
    bindings: &HashMap<String, RealCurve>,
    hedges: &HedgeExponents,
) -> Result<RealCurve, EvalError> {
    let rec = |x: &Expr| eval_tnorm(x, kind, bindings, hedges);
    Ok(match e {
        Expr::Atom(name) => lookup(bindings, name)?.clone(),
        Expr::Not(a) => tnorm::curve_complement(&rec(a)?),
        Expr::Hedge(h, a) => {
            let exponent = hedges.exponent(*h);
            vague::check_exponent(exponent)?;
            tnorm::curve_power(&rec(a)?, exponent)
        }
        Expr::And(a, b) => tnorm::curve_tnorm(kind, &rec(a)?, &rec(b)?)?,
        Expr::Or(a, b) => tnorm::curve_tconorm(kind, &rec(a)?, &rec(b)?)?,
        Expr::SymDiff(a, b) => {
            let (a, b) = (rec(a)?, rec(b)?);
            let left = tnorm::curve_tnorm(kind, &a, &tnorm::curve_complement(&b))?;
            let right = tnorm::curve_tnorm(kind, &tnorm::curve_complement(&a), &b)?;
            tnorm::curve_tconorm(kind, &left, &right)?
        }
    })
}
