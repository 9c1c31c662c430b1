//! Expression language over q-series.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | '(' expr ')' | 'Z' '(' INT (',' INT)* ')' | 'B' '[' INT (',' INT)* ']'
//!        | 'G' '(' INT ')' | 'EulerPow' '(' '-'? INT ')' | 'D' '(' expr ')' | 'sum' '(' STRING ')'
//! ```
//!
//! `p/q` between two integer literals folds into one rational literal.

use crate::qzeta::{bracket, eisenstein, okounkov_z, sum_by_name, QZetaError, SUM_NAMES};
use crate::ring::{euler_pow, fmt_rational, QSeries, Rational, RingError};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Z(Vec<u32>),
    B(Vec<u32>),
    G(u32),
    EulerPow(i64),
    D(Box<Expr>),
    Sum(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(e: &[String]) -> String {
    if e.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", e.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error(transparent)]
    QZeta(#[from] QZetaError),
}

impl From<RingError> for EvalError {
    fn from(_: RingError) -> Self {
        EvalError::DivisionByNonUnit
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Str(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let err = |line, col, message: String| ParseError { line, col, message, expected: vec![] };
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        let bump = |chars: &mut std::iter::Peekable<std::str::Chars>, line: &mut usize, col: &mut usize| {
            let c = chars.next();
            if c == Some('\n') {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars, &mut line, &mut col);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                bump(&mut chars, &mut line, &mut col);
            }
            if chars.peek() == Some(&'.') {
                return Err(err(line, col, "decimal literals are not supported; write p/q".into()));
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                bump(&mut chars, &mut line, &mut col);
            }
            Tok::Ident(s)
        } else if c == '"' {
            bump(&mut chars, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match bump(&mut chars, &mut line, &mut col) {
                    Some('"') => break,
                    Some(d) => s.push(d),
                    None => return Err(err(l0, c0, "unterminated string".into())),
                }
            }
            Tok::Str(s)
        } else {
            bump(&mut chars, &mut line, &mut col);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                _ => return Err(err(l0, c0, format!("unexpected character {c:?}"))),
            }
        };
        out.push(Spanned { tok, line: l0, col: c0 });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> &Spanned {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            col: t.col,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        self.error_here(format!("unexpected {}", self.peek().describe()), expected)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            let d = tok.describe();
            Err(self.unexpected(&[d.as_str()]))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.next();
        }
        let at = self.pos;
        let n = self.int()?;
        let n = if neg { -n } else { n };
        n.to_i64().ok_or_else(|| {
            self.pos = at;
            self.error_here("integer out of range", &[])
        })
    }

    fn small_index(&mut self, min: u32, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.int()?;
        match n.to_u32() {
            Some(v) if v >= min => Ok(v),
            _ => {
                self.pos = at;
                Err(self.error_here(format!("{what} must be ≥ {min}"), &[]))
            }
        }
    }

    fn index_list(&mut self, close: Tok, min: u32, what: &str) -> Result<Vec<u32>, ParseError> {
        let mut v = vec![self.small_index(min, what)?];
        while *self.peek() == Tok::Comma {
            self.next();
            v.push(self.small_index(min, what)?);
        }
        self.expect(close)?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    lhs = match (lhs, rhs) {
                        (Expr::Num(p), Expr::Num(q)) if p.is_integer() && q.is_integer() && !q.is_zero() => {
                            Expr::Num(p / q)
                        }
                        (l, r) => Expr::Div(Box::new(l), Box::new(r)),
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.next();
            return Ok(match self.unary()? {
                Expr::Num(r) if r.is_integer() && !r.is_negative() => Expr::Num(-r),
                e => Expr::Neg(Box::new(e)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.next();
            let e = self.signed_int()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        const START: &[&str] = &["integer", "`(`", "Z", "B", "G", "EulerPow", "D", "sum", "`-`"];
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.next();
                match name.as_str() {
                    "Z" => {
                        self.expect(Tok::LParen)?;
                        Ok(Expr::Z(self.index_list(Tok::RParen, 2, "Okounkov index")?))
                    }
                    "B" => {
                        self.expect(Tok::LBrack)?;
                        Ok(Expr::B(self.index_list(Tok::RBrack, 1, "bracket index")?))
                    }
                    "G" => {
                        self.expect(Tok::LParen)?;
                        let at = self.pos;
                        let w = self.small_index(2, "Eisenstein weight")?;
                        if w % 2 == 1 {
                            self.pos = at;
                            return Err(self.error_here("Eisenstein weight must be even", &[]));
                        }
                        self.expect(Tok::RParen)?;
                        Ok(Expr::G(w))
                    }
                    "EulerPow" => {
                        self.expect(Tok::LParen)?;
                        let c = self.signed_int()?;
                        self.expect(Tok::RParen)?;
                        Ok(Expr::EulerPow(c))
                    }
                    "D" => {
                        self.expect(Tok::LParen)?;
                        let e = self.expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(Expr::D(Box::new(e)))
                    }
                    "sum" => {
                        self.expect(Tok::LParen)?;
                        let s = match self.peek().clone() {
                            Tok::Str(s) => s,
                            _ => return Err(self.unexpected(&["string"])),
                        };
                        if !SUM_NAMES.contains(&s.as_str()) {
                            return Err(self.error_here(format!("unknown named sum {s:?}"), SUM_NAMES));
                        }
                        self.next();
                        self.expect(Tok::RParen)?;
                        Ok(Expr::Sum(s))
                    }
                    _ => {
                        self.pos -= 1;
                        Err(self.error_here(format!("unknown generator `{name}`"), START))
                    }
                }
            }
            _ => Err(self.unexpected(START)),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected(&["operator", "end of input"]));
    }
    Ok(e)
}

// binding strength: sums 1, products 2, negation 3, powers 4, atoms 5
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Num(r) if !r.is_integer() => 2,
        Expr::Num(r) if r.is_negative() => 3,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn list(v: &[u32]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

impl Expr {
    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if prec(self) < min {
            write!(f, "(")?;
            self.write(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(r) => write!(f, "{}", fmt_rational(r)),
            Expr::Z(v) => write!(f, "Z({})", list(v)),
            Expr::B(v) => write!(f, "B[{}]", list(v)),
            Expr::G(w) => write!(f, "G({w})"),
            Expr::EulerPow(c) => write!(f, "EulerPow({c})"),
            Expr::D(e) => {
                write!(f, "D(")?;
                e.write(f, 0)?;
                write!(f, ")")
            }
            Expr::Sum(s) => write!(f, "sum({s:?})"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write(f, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write(f, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.write(f, 3)
            }
            Expr::Pow(a, e) => {
                a.write(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }

    /// Exact expansion through `q^order`.
    pub fn eval(&self, order: usize) -> Result<QSeries<Rational>, EvalError> {
        Ok(match self {
            Expr::Num(r) => QSeries::constant(r.clone(), order),
            Expr::Z(v) => okounkov_z(v, order)?,
            Expr::B(v) => bracket(v, order)?,
            Expr::G(w) => eisenstein(*w, order)?,
            Expr::EulerPow(c) => euler_pow(*c, order),
            Expr::D(e) => e.eval(order)?.q_derivative(),
            Expr::Sum(s) => sum_by_name(s, order)?,
            Expr::Neg(e) => -&e.eval(order)?,
            Expr::Add(a, b) => &a.eval(order)? + &b.eval(order)?,
            Expr::Sub(a, b) => &a.eval(order)? - &b.eval(order)?,
            Expr::Mul(a, b) => &a.eval(order)? * &b.eval(order)?,
            Expr::Div(a, b) => &a.eval(order)? * &b.eval(order)?.inverse()?,
            Expr::Pow(a, e) => {
                let base = a.eval(order)?;
                let p = base.pow(e.unsigned_abs() as u32);
                if *e < 0 {
                    p.inverse()?
                } else {
                    p
                }
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn precedence() {
        let e = parse("Z(2)^2 + 7/2*Z(4)").unwrap();
        let want = Expr::Add(
            Box::new(Expr::Pow(Box::new(Expr::Z(vec![2])), 2)),
            Box::new(Expr::Mul(Box::new(Expr::Num(rat(7, 2))), Box::new(Expr::Z(vec![4])))),
        );
        assert_eq!(e, want);
        assert_eq!(e.to_string(), "Z(2)^2 + 7/2*Z(4)");
    }

    #[test]
    fn division_chain_is_left_associative() {
        let a = parse("Z(2)/1/2").unwrap().eval(8).unwrap();
        let b = parse("Z(2)*1/2").unwrap().eval(8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn okounkov_index_diagnostic() {
        let e = parse("Z(2) +\n  Z(1)").unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
        assert!(e.to_string().contains("Okounkov index must be ≥ 2"), "{e}");
    }

    #[test]
    fn diagnostics() {
        assert!(parse("(Z(2)").unwrap_err().expected.contains(&"`)`".to_string()));
        assert!(parse("1.5").is_err());
        assert!(parse("G(3)").is_err());
        assert!(parse("sum(\"nope\")").is_err());
        assert!(parse("Y(2)").unwrap_err().message.contains("unknown generator"));
        assert!(parse("Z(2) Z(3)").is_err());
    }

    #[test]
    fn dz3_vanishes() {
        let e = parse("D(Z(3)) - 5*Z(5) + 4*Z(3,2) + 6*Z(2,3) - Z(3)").unwrap();
        assert!(e.eval(40).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(parse("B[2]").unwrap().eval(10).unwrap(), parse("Z(2)").unwrap().eval(10).unwrap());
        assert_eq!(parse("G(2) + 1/24").unwrap().eval(10).unwrap(), parse("Z(2)").unwrap().eval(10).unwrap());
        let p = parse("EulerPow(-1)").unwrap().eval(10).unwrap();
        assert_eq!(p.coeff(10), int(42));
        let one = parse("EulerPow(3)*EulerPow(-3)").unwrap().eval(10).unwrap();
        assert_eq!(one, QSeries::one(10));
        assert_eq!(parse("1/Z(2)").unwrap().eval(4), Err(EvalError::DivisionByNonUnit));
        assert_eq!(parse("(1 - Z(2))^-1 * (1 - Z(2))").unwrap().eval(6).unwrap(), QSeries::one(6));
    }

    #[test]
    fn negative_literals_round_trip() {
        for t in ["-3", "-7/2*Z(2)", "(-3)^2", "Z(2) - -1/2", "-(1/2)^3", "-Z(2)^2", "2*(7/2)"] {
            let e = parse(t).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{t} -> {e}");
        }
    }
}
