//! Reader for the textual form of [`ThetaFunction`]: integers, `theta`
//! (or `θ`), `+ - * / ^` and parentheses.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, ThetaFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Theta,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                out.push(Token::Int(digits.parse().expect("ascii digits")));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Token::Op(c));
                chars.next();
            }
            'θ' => {
                out.push(Token::Theta);
                chars.next();
            }
            't' => {
                let word: String = chars.by_ref().take(5).collect();
                if word != "theta" {
                    return Err(Error::Parse(format!("unexpected identifier near '{word}'")));
                }
                out.push(Token::Theta);
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ThetaFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ThetaFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ThetaFunction> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ThetaFunction> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                let k: u32 = k
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok((0..k).fold(ThetaFunction::from(1), |acc, _| acc * base.clone()))
            }
            _ => Err(Error::Parse("expected integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<ThetaFunction> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                Ok(ThetaFunction::constant(Rational::from_integer(k)))
            }
            Some(Token::Theta) => {
                self.pos += 1;
                Ok(ThetaFunction::theta())
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(super) fn parse_theta_function(s: &str) -> Result<ThetaFunction> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(value)
}

/// Parses a rational literal such as `3`, `-2/5` or `1/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_displayed_forms() {
        for text in [
            "(2*theta)/(theta+1)",
            "theta-1",
            "0",
            "(1/2)/(theta+1)",
            "-1/2*theta^2+3",
            "(theta^2+1)/(theta)",
        ] {
            let v: ThetaFunction = text.parse().unwrap();
            assert_eq!(v.to_string(), text);
        }
    }

    #[test]
    fn reads_unnormalized_input() {
        let v: ThetaFunction = "(theta^2-1)/(theta+1)".parse().unwrap();
        assert_eq!(v.to_string(), "theta-1");
        let w: ThetaFunction = "2*θ/(2+2*θ)".parse().unwrap();
        assert_eq!(w.to_string(), "(theta)/(theta+1)");
    }

    #[test]
    fn rejects_garbage() {
        assert!("thetx".parse::<ThetaFunction>().is_err());
        assert!("(theta".parse::<ThetaFunction>().is_err());
        assert!("1/0".parse::<ThetaFunction>().is_err());
        assert!("".parse::<ThetaFunction>().is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-2/4").unwrap(), Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
