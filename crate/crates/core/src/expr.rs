//! Interval expressions: a small recursive-descent grammar over exact tones.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '·' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! exponent:= '-'? INT | '(' sum ')'
//! atom    := INT | INT 'i' | 'i' | SYMBOL | 'conj' '(' sum ')' | '(' sum ')'
//! ```
//!
//! Juxtaposition lets the radical text form `2^(1/2) 3^(-1)` read back.
//! Offsets count characters, not bytes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::gaussian::GaussianInteger;
use crate::pitch::Value;
use crate::radical::{embed_real, RadicalTone};
use crate::tone::{kappa, zeta, Tone};
use crate::vocabulary::Symbol;

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected an operand")]
    ExpectedOperand,
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("malformed literal {0:?}")]
    MalformedLiteral(String),
    #[error("unclosed parenthesis")]
    Unclosed,
    #[error("unmatched ')'")]
    Unmatched,
    #[error("unexpected trailing input")]
    Trailing,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the expression evaluates to zero, which is not a tone")]
    ZeroValue,
    #[error("exponent must be an integer or a rational number")]
    BadExponent,
    #[error("exponent magnitude exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("{0}")]
    Incompatible(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub offset: usize,
}

fn err<T>(kind: ExprErrorKind, offset: usize) -> Result<T, ExprError> {
    Err(ExprError { kind, offset })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Int(BigInt),
    /// `n·i`.
    Imag(BigInt),
    Symbol(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>),
}

/// A parse-tree node with the offset of its first character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub node: Node,
    pub offset: usize,
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self.node {
            Node::Add(..) | Node::Sub(..) => 1,
            Node::Mul(..) | Node::Div(..) => 2,
            Node::Neg(..) => 3,
            Node::Pow(..) => 4,
            _ => 5,
        }
    }
}

/// Fully explicit rendering that parses back to an equal tree (up to offsets).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({})", e)
            } else {
                write!(f, "{}", e)
            }
        };
        match &self.node {
            Node::Int(n) => write!(f, "{}", n),
            Node::Imag(n) => write!(f, "{}i", n),
            Node::Symbol(s) => f.write_str(s),
            Node::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, 3)
            }
            Node::Add(a, b) | Node::Sub(a, b) => {
                let op = if matches!(self.node, Node::Add(..)) { '+' } else { '-' };
                wrap(f, a, 1)?;
                write!(f, " {} ", op)?;
                wrap(f, b, 2)
            }
            Node::Mul(a, b) | Node::Div(a, b) => {
                let op = if matches!(self.node, Node::Mul(..)) { '*' } else { '/' };
                wrap(f, a, 2)?;
                write!(f, " {} ", op)?;
                wrap(f, b, 3)
            }
            Node::Pow(a, b) => {
                wrap(f, a, 5)?;
                f.write_str("^")?;
                match b.node {
                    Node::Int(_) => write!(f, "{}", b),
                    _ => write!(f, "({})", b),
                }
            }
            Node::Conj(e) => write!(f, "conj({})", e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Imag(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic()
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '′' || c == '_'
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' | '×' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n: BigInt = digits.parse().expect("ascii digits");
                if i < chars.len() && is_ident_char(chars[i]) {
                    let mut j = i;
                    while j < chars.len() && is_ident_char(chars[j]) {
                        j += 1;
                    }
                    let suffix: String = chars[i..j].iter().collect();
                    if suffix != "i" {
                        let lit: String = chars[start..j].iter().collect();
                        return err(ExprErrorKind::MalformedLiteral(lit), start);
                    }
                    i = j;
                    out.push((Tok::Imag(n), start));
                } else {
                    out.push((Tok::Int(n), start));
                }
                continue;
            }
            _ if is_ident_start(c) => {
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push((
                    if name == "i" {
                        Tok::Imag(BigInt::from(1))
                    } else {
                        Tok::Ident(name)
                    },
                    start,
                ));
                continue;
            }
            _ => return err(ExprErrorKind::UnexpectedChar(c), start),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn close(&mut self, open: usize) -> Result<(), ExprError> {
        match self.peek() {
            Some(Tok::RParen) => {
                self.pos += 1;
                Ok(())
            }
            None => err(ExprErrorKind::Unclosed, open),
            Some(_) => err(ExprErrorKind::Trailing, self.offset()),
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            let add = match self.peek() {
                Some(Tok::Plus) => true,
                Some(Tok::Minus) => false,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.product()?;
            let offset = lhs.offset;
            let (a, b) = (Box::new(lhs), Box::new(rhs));
            lhs = Expr {
                node: if add { Node::Add(a, b) } else { Node::Sub(a, b) },
                offset,
            };
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Imag(_) | Tok::Ident(_) | Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let mul = match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    true
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    false
                }
                _ if self.starts_atom() => true,
                _ => return Ok(lhs),
            };
            let rhs = self.unary()?;
            let offset = lhs.offset;
            let (a, b) = (Box::new(lhs), Box::new(rhs));
            lhs = Expr {
                node: if mul { Node::Mul(a, b) } else { Node::Div(a, b) },
                offset,
            };
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        let offset = self.offset();
        if self.eat(&Tok::Minus) {
            let e = self.unary()?;
            return Ok(Expr {
                node: Node::Neg(Box::new(e)),
                offset,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let offset = self.offset();
        let exponent = match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.close(offset)?;
                e
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Int(_)) => {
                        let (Tok::Int(n), _) = self.bump() else { unreachable!() };
                        Expr {
                            node: Node::Neg(Box::new(Expr {
                                node: Node::Int(n),
                                offset: offset + 1,
                            })),
                            offset,
                        }
                    }
                    _ => return err(ExprErrorKind::BadExponent, self.offset()),
                }
            }
            Some(Tok::Int(_)) => {
                let (Tok::Int(n), _) = self.bump() else { unreachable!() };
                Expr {
                    node: Node::Int(n),
                    offset,
                }
            }
            Some(_) => return err(ExprErrorKind::BadExponent, offset),
            None => return err(ExprErrorKind::ExpectedOperand, offset),
        };
        let o = base.offset;
        Ok(Expr {
            node: Node::Pow(Box::new(base), Box::new(exponent)),
            offset: o,
        })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return err(ExprErrorKind::ExpectedOperand, offset);
        };
        let node = match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Node::Int(n)
            }
            Tok::Imag(n) => {
                self.pos += 1;
                Node::Imag(n)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                if name == "conj" {
                    let open = self.offset();
                    if !self.eat(&Tok::LParen) {
                        return err(ExprErrorKind::ExpectedOperand, open);
                    }
                    let e = self.sum()?;
                    self.close(open)?;
                    Node::Conj(Box::new(e))
                } else if symbol_value(&name).is_some() {
                    Node::Symbol(name)
                } else {
                    return err(ExprErrorKind::UnknownSymbol(name), offset);
                }
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.sum()?;
                self.close(offset)?;
                return Ok(Expr { node: e.node, offset });
            }
            Tok::RParen => return err(ExprErrorKind::Unmatched, offset),
            _ => return err(ExprErrorKind::ExpectedOperand, offset),
        };
        Ok(Expr { node, offset })
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let e = p.sum()?;
    match p.peek() {
        None => Ok(e),
        Some(Tok::RParen) => err(ExprErrorKind::Unmatched, p.offset()),
        Some(_) => err(ExprErrorKind::Trailing, p.offset()),
    }
}

/// Value bound to a symbol name, ASCII or Greek.
pub fn symbol_value(name: &str) -> Option<Value> {
    let sym = match name {
        "alpha" | "α" => Symbol::Alpha,
        "alpha'" | "alpha′" | "α'" | "α′" => Symbol::AlphaPrime,
        "beta" | "β" => Symbol::Beta,
        "gamma" | "γ" => Symbol::Gamma,
        "delta" | "δ" => Symbol::Delta,
        "rho" | "ρ" => Symbol::Rho,
        "sigma" | "σ" => Symbol::Sigma,
        "tau" | "τ" => Symbol::Tau,
        "theta" | "θ" => Symbol::Theta,
        "nu" | "ν" => Symbol::Nu,
        "psi" | "ψ" => Symbol::Psi,
        "X" => Symbol::X,
        "Y" => Symbol::Y,
        "Z" => Symbol::Z,
        "W" => Symbol::W,
        "xi" | "ξ" => return Some(Value::Tone(Tone::gaussian(1, 1, 1))),
        "kappa" | "κ" => return Some(Value::Tone(kappa())),
        "zeta" | "ζ" => return Some(Value::Tone(zeta())),
        _ => Symbol::ALL
            .into_iter()
            .find(|s| s.ascii() == name || s.glyph() == name)?,
    };
    sym.value()
}

/// Intermediate result: zero is allowed until the end.
#[derive(Debug, Clone, PartialEq)]
enum Num {
    Zero,
    Val(Value),
}

fn tone_of(t: GaussianInteger, d: BigInt) -> Num {
    if t.is_zero() {
        Num::Zero
    } else {
        Num::Val(Value::Tone(
            Tone::new(t, GaussianInteger::real(d)).expect("nonzero"),
        ))
    }
}

fn as_gaussian_rational(v: &Value, offset: usize) -> Result<(GaussianInteger, BigInt), ExprError> {
    match v {
        Value::Tone(t) => Ok((t.num().clone(), t.den().clone())),
        Value::Radical(_) => err(
            ExprErrorKind::Incompatible("sums and differences need Gaussian rational operands"),
            offset,
        ),
    }
}

fn to_radical(v: &Value, offset: usize) -> Result<RadicalTone, ExprError> {
    match v {
        Value::Radical(r) => Ok(*r),
        Value::Tone(t) => embed_real(t).map_err(|_| ExprError {
            kind: ExprErrorKind::Incompatible(
                "radicals combine only with positive real five-limit tones",
            ),
            offset,
        }),
    }
}

fn add(a: Num, b: Num, negate: bool, offset: usize) -> Result<Num, ExprError> {
    let b = if negate { neg(b, offset)? } else { b };
    match (a, b) {
        (Num::Zero, x) | (x, Num::Zero) => Ok(x),
        (Num::Val(x), Num::Val(y)) => {
            let (xn, xd) = as_gaussian_rational(&x, offset)?;
            let (yn, yd) = as_gaussian_rational(&y, offset)?;
            let num = &(&xn * &GaussianInteger::real(yd.clone()))
                + &(&yn * &GaussianInteger::real(xd.clone()));
            Ok(tone_of(num, xd * yd))
        }
    }
}

fn neg(a: Num, offset: usize) -> Result<Num, ExprError> {
    match a {
        Num::Zero => Ok(Num::Zero),
        Num::Val(v) => {
            let (n, d) = as_gaussian_rational(&v, offset)?;
            Ok(tone_of(-n, d))
        }
    }
}

fn mul(a: &Value, b: &Value, offset: usize) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Tone(x), Value::Tone(y)) => Ok(Value::Tone(x * y)),
        _ => Ok(Value::from(to_radical(a, offset)? * to_radical(b, offset)?)),
    }
}

fn invert(a: &Value) -> Value {
    match a {
        Value::Tone(t) => Value::Tone(t.inv()),
        Value::Radical(r) => Value::Radical(r.inv()),
    }
}

fn small(n: &BigInt, offset: usize) -> Result<i64, ExprError> {
    match n.to_i64() {
        Some(k) if k.abs() <= MAX_EXPONENT => Ok(k),
        _ => err(ExprErrorKind::ExponentTooLarge, offset),
    }
}

fn power(base: Num, exponent: Num, base_off: usize, exp_off: usize) -> Result<Num, ExprError> {
    let (p, q) = match exponent {
        Num::Zero => (0, 1),
        Num::Val(Value::Tone(t)) if t.is_real() => {
            (small(&t.num().re, exp_off)?, small(t.den(), exp_off)?)
        }
        _ => return err(ExprErrorKind::BadExponent, exp_off),
    };
    let v = match base {
        Num::Zero if p > 0 => return Ok(Num::Zero),
        Num::Zero => return err(ExprErrorKind::DivisionByZero, base_off),
        Num::Val(v) => v,
    };
    if q == 1 {
        return Ok(Num::Val(match v {
            Value::Tone(t) => Value::Tone(t.pow(p)),
            Value::Radical(r) => Value::from(r.pow(p)),
        }));
    }
    let r = to_radical(&v, base_off)?;
    match r.pow(p).root(q) {
        Some(root) => Ok(Num::Val(Value::from(root))),
        None => err(
            ExprErrorKind::Incompatible("fractional power leaves the twelfth-root lattice"),
            exp_off,
        ),
    }
}

fn eval(e: &Expr) -> Result<Num, ExprError> {
    let o = e.offset;
    Ok(match &e.node {
        Node::Int(n) => tone_of(GaussianInteger::real(n.clone()), BigInt::from(1)),
        Node::Imag(n) => tone_of(GaussianInteger::new(0, n.clone()), BigInt::from(1)),
        Node::Symbol(s) => Num::Val(symbol_value(s).expect("checked while parsing")),
        Node::Neg(a) => neg(eval(a)?, o)?,
        Node::Add(a, b) => add(eval(a)?, eval(b)?, false, b.offset)?,
        Node::Sub(a, b) => add(eval(a)?, eval(b)?, true, b.offset)?,
        Node::Mul(a, b) => match (eval(a)?, eval(b)?) {
            (Num::Val(x), Num::Val(y)) => Num::Val(mul(&x, &y, b.offset)?),
            _ => Num::Zero,
        },
        Node::Div(a, b) => match (eval(a)?, eval(b)?) {
            (_, Num::Zero) => return err(ExprErrorKind::DivisionByZero, b.offset),
            (Num::Zero, _) => Num::Zero,
            (Num::Val(x), Num::Val(y)) => Num::Val(mul(&x, &invert(&y), b.offset)?),
        },
        Node::Pow(a, b) => power(eval(a)?, eval(b)?, a.offset, b.offset)?,
        Node::Conj(a) => match eval(a)? {
            Num::Zero => Num::Zero,
            Num::Val(Value::Tone(t)) => Num::Val(Value::Tone(t.conj())),
            r => r,
        },
    })
}

pub fn evaluate(e: &Expr) -> Result<Value, ExprError> {
    match eval(e)? {
        Num::Zero => err(ExprErrorKind::ZeroValue, e.offset),
        Num::Val(v) => Ok(v),
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str) -> Result<Value, ExprError> {
    evaluate(&parse_expression(text)?)
}

/// Whether the error came from the grammar rather than the arithmetic.
pub fn is_syntax_error(e: &ExprError) -> bool {
    matches!(
        e.kind,
        ExprErrorKind::UnexpectedChar(_)
            | ExprErrorKind::ExpectedOperand
            | ExprErrorKind::UnknownSymbol(_)
            | ExprErrorKind::MalformedLiteral(_)
            | ExprErrorKind::Unclosed
            | ExprErrorKind::Unmatched
            | ExprErrorKind::Trailing
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Value {
        eval_str(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(t("alpha * beta"), Value::Tone(Tone::gaussian(1, 2, 2)));
        assert_eq!(t("(1+1i)^2 / 2"), Value::Tone(Tone::i()));
        assert_eq!(t("45/32 / (25/18)"), Value::Tone(kappa()));
        assert_eq!(t("sigma^7 * tau^5"), Value::Tone(Tone::two()));
        assert_eq!(t("psi^12"), Value::Tone(Tone::two()));
        assert_eq!(t("alpha · conj(alpha)"), Value::Tone(Tone::ratio(9, 8)));
        assert_eq!(t("2^-1"), Value::Tone(Tone::ratio(1, 2)));
        assert_eq!(t("2 3"), Value::Tone(Tone::integer(6)));
    }

    #[test]
    fn left_associative_and_tight_power() {
        assert_eq!(t("8/4/2"), Value::Tone(Tone::one()));
        assert_eq!(t("2*3^2"), Value::Tone(Tone::integer(18)));
        assert_eq!(t("-2^2"), Value::Tone(Tone::integer(-4)));
    }

    #[test]
    fn radical_text_reads_back() {
        let theta = Symbol::Theta.radical().unwrap();
        assert_eq!(t(&theta.to_string()), Value::Radical(theta));
        assert_eq!(t("2^(1/2) * 2^(1/2)"), Value::Tone(Tone::two()));
        assert_eq!(t("theta^2"), Value::Tone(Tone::ratio(9, 8)));
    }

    #[test]
    fn error_offsets() {
        let e = eval_str("alpha **").unwrap_err();
        assert_eq!(e.offset, 7);
        assert_eq!(e.kind, ExprErrorKind::ExpectedOperand);
        assert_eq!(eval_str("(1+i").unwrap_err().kind, ExprErrorKind::Unclosed);
        assert_eq!(eval_str("1+i)").unwrap_err().offset, 3);
        let e = eval_str("2 * omega").unwrap_err();
        assert_eq!((e.kind, e.offset), (ExprErrorKind::UnknownSymbol("omega".into()), 4));
        assert_eq!(eval_str("3x").unwrap_err().offset, 0);
        assert_eq!(eval_str("α $").unwrap_err().offset, 2);
    }

    #[test]
    fn arithmetic_errors() {
        assert_eq!(eval_str("0").unwrap_err().kind, ExprErrorKind::ZeroValue);
        assert_eq!(eval_str("1 - 1").unwrap_err().kind, ExprErrorKind::ZeroValue);
        assert_eq!(eval_str("1/(2-2)").unwrap_err().kind, ExprErrorKind::DivisionByZero);
        assert!(eval_str("2^99999").is_err());
        assert!(eval_str("theta + 1").is_err());
        assert!(eval_str("i^(1/2)").is_err());
    }

    #[test]
    fn tree_rendering_reparses() {
        for s in ["alpha * beta", "(1+1i)^2 / 2", "-(2-i)^3", "conj(xi) 2^3", "3^(1/2) 2^(1/12)", "8/(4/2)"] {
            let e = parse_expression(s).unwrap();
            let again = parse_expression(&e.to_string()).unwrap();
            assert_eq!(evaluate(&e), evaluate(&again), "{s}");
            assert_eq!(e.to_string(), again.to_string());
        }
    }
}
