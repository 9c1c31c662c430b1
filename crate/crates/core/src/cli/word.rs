//! Operator words such as `a[-2,1,1](1X) * a[-1,1](K)/!`.

use super::expr::ParseError;
use crate::fock::{CohClass, DecoratedOp, GenPartition, SurfaceModel, TraceAlgebra};
use crate::ring::Rational;

pub const CLASS_NAMES: &[&str] = &["1X", "K", "L1", "L2", "e"];

/// One parsed factor before it is attached to a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub parts: Vec<i32>,
    pub class: String,
    pub normalized: bool,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        let before = &self.chars[..self.pos.min(self.chars.len())];
        let line = 1 + before.iter().filter(|&&c| c == '\n').count();
        let col = 1 + before.iter().rev().take_while(|&&c| c != '\n').count();
        ParseError { line, col, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |f| format!("{f:?}"));
            Err(self.err(format!("unexpected {found}"), &[&format!("`{c}`")]))
        }
    }

    fn part(&mut self) -> Result<i32, ParseError> {
        let start = self.pos;
        self.skip_ws();
        let from = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[from..self.pos].iter().collect();
        match text.parse::<i32>() {
            Ok(0) => {
                self.pos = from;
                Err(self.err("a_0 is not an operator", &[]))
            }
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.skip_ws();
                Err(self.err("expected a nonzero integer part", &["integer"]))
            }
        }
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        self.eat('a')?;
        self.eat('[')?;
        let mut parts = vec![self.part()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            parts.push(self.part()?);
        }
        self.eat(']')?;
        self.eat('(')?;
        self.skip_ws();
        let from = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let class: String = self.chars[from..self.pos].iter().collect();
        if !CLASS_NAMES.contains(&class.as_str()) {
            self.pos = from;
            return Err(self.err(format!("unknown class {class:?}"), CLASS_NAMES));
        }
        self.eat(')')?;
        let normalized = if self.peek() == Some('/') {
            self.pos += 1;
            self.eat('!')?;
            true
        } else {
            false
        };
        Ok(Factor { parts, class, normalized })
    }
}

/// Parses `factor ('*' factor)*`; an empty or blank word is the identity.
pub fn parse_word(text: &str) -> Result<Vec<Factor>, ParseError> {
    let mut c = Cursor { chars: text.chars().collect(), pos: 0 };
    let mut out = Vec::new();
    if c.peek().is_none() {
        return Ok(out);
    }
    out.push(c.factor()?);
    while c.peek() == Some('*') {
        c.pos += 1;
        out.push(c.factor()?);
    }
    if c.peek().is_some() {
        return Err(c.err("trailing input", &["`*`", "end of input"]));
    }
    Ok(out)
}

fn class_of(surface: &SurfaceModel, name: &str) -> CohClass {
    match name {
        "1X" => surface.one(),
        "e" => surface.euler(),
        d => surface.divisor(d).expect("class names are validated by the parser"),
    }
}

/// Attaches parsed factors to `surface`.
pub fn build_word(surface: &SurfaceModel, factors: &[Factor]) -> Vec<DecoratedOp<CohClass>> {
    factors
        .iter()
        .map(|f| {
            let mut class = class_of(surface, &f.class);
            if f.normalized {
                let lambda = GenPartition::from_parts(&f.parts).expect("parts are nonzero");
                class = surface.scale(&class, &Rational::from_integer(lambda.factorial()).recip());
            }
            DecoratedOp::new(f.parts.clone(), class).expect("parts are nonzero")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::trace_product;
    use crate::ring::{MPoly, QSeries};

    #[test]
    fn parses_factors() {
        let w = parse_word("a[-2,1,1](1X) * a[-1,1](K)/!").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].parts, vec![-2, 1, 1]);
        assert_eq!(w[1].class, "K");
        assert!(w[1].normalized && !w[0].normalized);
        assert!(parse_word("  ").unwrap().is_empty());
    }

    #[test]
    fn diagnostics() {
        let e = parse_word("a[-1](1X) * a[0](K)").unwrap_err();
        assert_eq!((e.line, e.col), (1, 15));
        assert!(parse_word("a[1](Q)").unwrap_err().expected.contains(&"e".to_string()));
        assert!(parse_word("a[1](K) a[-1](K)").is_err());
        assert!(parse_word("a[1(K)").is_err());
    }

    #[test]
    fn empty_word_traces_to_one() {
        let s = SurfaceModel::standard(false);
        let w = build_word(&s, &parse_word("").unwrap());
        assert_eq!(trace_product(&s, &w, 5), QSeries::<MPoly>::one(5));
    }

    #[test]
    fn normalization_divides_by_factorial() {
        let s = SurfaceModel::standard(false);
        let plain = build_word(&s, &parse_word("a[-1,-1](1X) * a[1,1](1X)").unwrap());
        let norm = build_word(&s, &parse_word("a[-1,-1](1X)/! * a[1,1](1X)").unwrap());
        let a = trace_product(&s, &plain, 6);
        let b = trace_product(&s, &norm, 6);
        assert_eq!(b.scale(&crate::ring::int(2)), a);
    }
}
