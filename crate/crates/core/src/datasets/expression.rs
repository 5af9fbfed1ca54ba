//! Factor-expression notation for class numbers, e.g. `3.(2.29+1).(2^3.29+1)`.
//!
//! ```text
//! class   := item ( "." item )*
//! item    := "(" product "+1" ")" ( "^" INT )? | INT ( "^" INT )?
//! product := INT ( "^" INT )? ( "." INT ( "^" INT )? )*
//! INT     := [0-9]+
//! ```
//!
//! `.` is multiplication. A standalone expression may also be a bare
//! `product "+1"` such as `2^3.29+1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One evaluated class-number factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorExpression {
    source_text: String,
    value: BigUint,
    base: BigUint,
    is_plus_one_form: bool,
    outer_exponent: u32,
}

impl FactorExpression {
    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    /// `base ^ outer_exponent`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// The value before the outer exponent, e.g. 11 for `(2.5+1)^2`.
    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn is_plus_one_form(&self) -> bool {
        self.is_plus_one_form
    }

    pub fn outer_exponent(&self) -> u32 {
        self.outer_exponent
    }
}

/// Evaluates a single factor: an `item`, or an unparenthesized `product+1`.
pub fn evaluate_expression(text: &str) -> Result<FactorExpression> {
    let mut parser = Parser::new(text);
    let expr = if parser.peek() == Some('(') {
        parser.item()?
    } else {
        let start = parser.pos;
        let (product, factors) = parser.product()?;
        if parser.eat_str("+1") {
            FactorExpression {
                source_text: parser.slice(start),
                value: &product + 1u8,
                base: product + 1u8,
                is_plus_one_form: true,
                outer_exponent: 1,
            }
        } else if factors == 1 {
            parser.pos = start;
            parser.item()?
        } else {
            return Err(parser.error_at(start, "expected a single factor or a product followed by +1"));
        }
    };
    parser.expect_end()?;
    Ok(expr)
}

/// Parses a `.`-separated sequence of items.
pub fn parse_class(text: &str) -> Result<Vec<FactorExpression>> {
    let mut parser = Parser::new(text);
    let items = parser.class()?;
    parser.expect_end()?;
    Ok(items)
}

/// Evaluates either a `class` or a standalone `product+1`, returning the
/// product of all factors.
pub fn evaluate_class_value(text: &str) -> Result<BigUint> {
    match parse_class(text) {
        Ok(items) => Ok(class_value(&items)),
        Err(class_error) => evaluate_expression(text)
            .map(|e| e.value)
            .map_err(|_| class_error),
    }
}

pub fn class_value(items: &[FactorExpression]) -> BigUint {
    items.iter().fold(BigUint::one(), |acc, e| acc * &e.value)
}

/// Source text of a class, items joined with `.`.
pub fn class_source(items: &[FactorExpression]) -> String {
    items
        .iter()
        .map(FactorExpression::source_text)
        .collect::<Vec<_>>()
        .join(".")
}

struct Parser<'a> {
    chars: Vec<char>,
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().collect(),
            text,
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn slice(&self, start: usize) -> String {
        self.chars[start..self.pos].iter().collect()
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Expression {
            column: pos + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let matches = self.pos + n <= self.chars.len()
            && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected character {c:?}"))),
        }
    }

    fn int(&mut self) -> Result<BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                None if self.text.is_empty() => self.error("empty expression"),
                None => self.error("expected a number, found end of input"),
                Some(c) => self.error(format!("expected a number, found {c:?}")),
            });
        }
        let digits = self.slice(start);
        Ok(digits.parse::<BigUint>().expect("ASCII digits parse"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let start = self.pos;
        let e = self.int()?;
        u32::try_from(&e)
            .ok()
            .filter(|e| *e >= 1)
            .ok_or_else(|| self.error_at(start, format!("exponent {e} must be between 1 and {}", u32::MAX)))
    }

    fn positive_int(&mut self) -> Result<BigUint> {
        let start = self.pos;
        let n = self.int()?;
        if n.is_zero() {
            return Err(self.error_at(start, "factors must be positive"));
        }
        Ok(n)
    }

    /// Returns the product value and the number of factors.
    fn product(&mut self) -> Result<(BigUint, usize)> {
        let mut value = BigUint::one();
        let mut count = 0;
        loop {
            let base = self.positive_int()?;
            let e = self.exponent()?;
            value *= base.pow(e);
            count += 1;
            // a '.' continues the product only when a digit follows
            if self.peek() == Some('.')
                && self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
            {
                self.pos += 1;
            } else {
                return Ok((value, count));
            }
        }
    }

    fn item(&mut self) -> Result<FactorExpression> {
        let start = self.pos;
        if self.eat('(') {
            let (product, _) = self.product()?;
            if !self.eat_str("+1") {
                return Err(self.error("expected \"+1\""));
            }
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            let base = product + 1u8;
            let outer_exponent = self.exponent()?;
            Ok(FactorExpression {
                source_text: self.slice(start),
                value: base.pow(outer_exponent),
                base,
                is_plus_one_form: true,
                outer_exponent,
            })
        } else {
            let base = self.positive_int()?;
            let outer_exponent = self.exponent()?;
            Ok(FactorExpression {
                source_text: self.slice(start),
                value: base.pow(outer_exponent),
                base,
                is_plus_one_form: false,
                outer_exponent,
            })
        }
    }

    fn class(&mut self) -> Result<Vec<FactorExpression>> {
        let mut items = vec![self.item()?];
        while self.eat('.') {
            items.push(self.item()?);
        }
        Ok(items)
    }
}
