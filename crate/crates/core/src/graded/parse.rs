//! Text form of algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := atom ('*' atom)*
//! atom   := rational | factor
//! factor := name ('^' int)?
//! ```
//!
//! The printer always emits the strict shape `c * g1^e1*g2^e2`; the parser
//! also accepts a bare monomial (`u^2`) or a bare rational. Factors are
//! multiplied left to right, so `w*v` with both odd parses as `-1 * v*w`.

use std::sync::Arc;

use num::{BigInt, One, Zero};

use super::{AlgebraElement, GradedAlgebra};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Name(String),
    Star,
    Caret,
    Plus,
    Minus,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut tokens = Vec::new();
    while pos < chars.len() {
        let c = chars[pos];
        let column = pos + 1;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        match c {
            '*' => tokens.push((column, Token::Star)),
            '^' => tokens.push((column, Token::Caret)),
            '+' => tokens.push((column, Token::Plus)),
            '-' => tokens.push((column, Token::Minus)),
            d if d.is_ascii_digit() => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let numer: BigInt = chars[start..pos].iter().collect::<String>().parse().unwrap();
                let mut denom = BigInt::one();
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    let dstart = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if dstart == pos {
                        return Err(err(dstart + 1, "expected a denominator after `/`"));
                    }
                    denom = chars[dstart..pos].iter().collect::<String>().parse().unwrap();
                    if denom.is_zero() {
                        return Err(err(dstart + 1, "zero denominator"));
                    }
                }
                tokens.push((column, Token::Number(Rational::new(numer, denom))));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = pos;
                while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                    pos += 1;
                }
                tokens.push((column, Token::Name(chars[start..pos].iter().collect())));
                continue;
            }
            other => return Err(err(column, format!("unexpected character `{other}`"))),
        }
        pos += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    algebra: &'a Arc<GradedAlgebra>,
    end_column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_column)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut total = AlgebraElement::zero(self.algebra);
        let mut negative = false;
        match self.peek() {
            Some(Token::Minus) => {
                negative = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let term = self.term()?;
            total = if negative { &total - &term } else { &total + &term };
            match self.peek() {
                None => return Ok(total),
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => return Err(err(self.column(), "expected `+`, `-` or end of expression")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut value = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let next = self.atom()?;
            value = &value * &next;
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        let column = self.column();
        match self.next() {
            Some(Token::Number(q)) => Ok(AlgebraElement::one(self.algebra).scale(&q)),
            Some(Token::Name(name)) => {
                let base = AlgebraElement::named(self.algebra, &name)
                    .map_err(|_| err(column, format!("unknown generator `{name}`")))?;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let column = self.column();
                    match self.next() {
                        Some(Token::Number(q)) if q.is_integer() => {
                            let e: u32 = q
                                .to_integer()
                                .try_into()
                                .map_err(|_| err(column, "exponent out of range"))?;
                            Ok(base.pow(e))
                        }
                        _ => Err(err(column, "expected a non-negative integer exponent")),
                    }
                } else {
                    Ok(base)
                }
            }
            Some(_) => Err(err(column, "expected a coefficient or a generator name")),
            None => Err(err(column, "unexpected end of expression")),
        }
    }
}

/// Parses an element of `algebra` from its text form.
pub fn parse_element(algebra: &Arc<GradedAlgebra>, text: &str) -> Result<AlgebraElement> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        algebra,
        end_column: text.chars().count() + 1,
    };
    parser.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<GradedAlgebra> {
        GradedAlgebra::new([("u", 2), ("v", 3), ("x", 4)]).unwrap()
    }

    #[test]
    fn parses_strict_and_bare_forms() {
        let a = alg();
        let e = parse_element(&a, "1 * u^2 - 1 * x").unwrap();
        assert_eq!(e.to_text(), "-1 * x + 1 * u^2");
        let f = parse_element(&a, "u^2 - x").unwrap();
        assert_eq!(e, f);
        assert_eq!(parse_element(&a, "0").unwrap().to_text(), "0");
        assert_eq!(parse_element(&a, "-3/6").unwrap().to_text(), "-1/2");
    }

    #[test]
    fn odd_factor_order_sets_sign() {
        let a = GradedAlgebra::new([("w1", 3), ("w2", 3)]).unwrap();
        let e = parse_element(&a, "w2*w1").unwrap();
        assert_eq!(e.to_text(), "-1 * w1*w2");
        assert!(parse_element(&a, "w1^2").unwrap().is_zero());
    }

    #[test]
    fn reports_columns() {
        let a = alg();
        match parse_element(&a, "u + q") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        match parse_element(&a, "u +") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_element(&a, "u^x"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_element(&a, "1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&a, "u # v"), Err(Error::Parse { column: 3, .. })));
    }
}
