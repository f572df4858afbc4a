//! Text grammar for polynomials.
//!
//! Sums, products (explicit `*` or juxtaposition), `/` by constants, `^`
//! with non-negative integer exponents, parentheses and unary minus.
//! Identifiers are a single letter optionally followed by digits, so `z1z2`
//! reads as `z1*z2`. When a radicand is supplied the symbol `r` stands for
//! its square root.

use thiserror::Error;

use crate::poly::{MultiPoly, Vars};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("division by a non-constant or zero")]
    BadDivision,
    #[error("bad exponent at {0}")]
    BadExponent(usize),
    #[error("mixes x,y,z with z1,z2,z3")]
    MixedVariables,
    #[error("no variables found")]
    NoVariables,
    #[error("scalar error: {0}")]
    Scalar(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((Token::Num(text.parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Token::Op(c), i));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar(c, i));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    vars: &'a Vars,
    surd: Option<ExactScalar>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.checked_add(&rhs) } else { acc.checked_sub(&rhs) }
                .map_err(|e| ParseError::Scalar(e.to_string()))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Op('*')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_mul(&rhs).map_err(|e| ParseError::Scalar(e.to_string()))?;
                }
                Some(Token::Op('/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let c = constant_value(&rhs).ok_or(ParseError::BadDivision)?;
                    let inv = c.inv().map_err(|_| ParseError::BadDivision)?;
                    acc = acc.scale(&inv);
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::Op('(')) => {
                    let rhs = self.power()?;
                    acc = acc.checked_mul(&rhs).map_err(|e| ParseError::Scalar(e.to_string()))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some((Token::Num(n), at)) => {
                    let e: u32 = n.try_into().map_err(|_| ParseError::BadExponent(at))?;
                    return Ok(base.pow(e));
                }
                Some((_, at)) => return Err(ParseError::BadExponent(at)),
                None => return Err(ParseError::UnexpectedEnd),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.next() {
            Some((Token::Num(n), _)) => Ok(MultiPoly::constant(self.vars.clone(), ExactScalar::from_bigint(n))),
            Some((Token::Ident(name), _)) => {
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    Ok(MultiPoly::var(self.vars.clone(), i))
                } else if name == "r" && self.surd.is_some() {
                    Ok(MultiPoly::constant(self.vars.clone(), self.surd.clone().unwrap()))
                } else {
                    Err(ParseError::UnknownSymbol(name))
                }
            }
            Some((Token::Op('('), _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Token::Op(')'), _)) => Ok(inner),
                    Some((Token::Op(c), at)) => Err(ParseError::UnexpectedChar(c, at)),
                    Some((_, at)) => Err(ParseError::UnexpectedChar(' ', at)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some((Token::Op(c), at)) => Err(ParseError::UnexpectedChar(c, at)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

fn constant_value(p: &MultiPoly) -> Option<ExactScalar> {
    if p.is_zero() {
        return Some(ExactScalar::zero());
    }
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if m.degree() == 0 => Some((*c).clone()),
        _ => None,
    }
}

/// Parses over the given variable list, with `r = sqrt(radicand)` if any.
pub fn parse_poly_in(s: &str, vars: &Vars, radicand: Option<i64>) -> Result<MultiPoly, ParseError> {
    let surd = radicand
        .map(ExactScalar::sqrt_of)
        .transpose()
        .map_err(|e| ParseError::Scalar(e.to_string()))?;
    let mut parser = Parser { tokens: tokenize(s)?, pos: 0, vars, surd };
    let p = parser.expr()?;
    match parser.next() {
        None => Ok(p),
        Some((Token::Op(c), at)) => Err(ParseError::UnexpectedChar(c, at)),
        Some((Token::Ident(name), _)) => Err(ParseError::UnknownSymbol(name)),
        Some((Token::Num(_), at)) => Err(ParseError::UnexpectedChar(' ', at)),
    }
}

pub fn parse_poly(s: &str, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    parse_poly_in(s, &crate::poly::vars(vars), None)
}

/// Parses a form, inferring the variables: either `x,y[,z]` or
/// `z1..zk` with `k` the largest index used (at least 2).
pub fn parse_form(s: &str, radicand: Option<i64>) -> Result<MultiPoly, ParseError> {
    let idents: Vec<String> = tokenize(s)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Token::Ident(n) => Some(n),
            _ => None,
        })
        .filter(|n| !(n == "r" && radicand.is_some()))
        .collect();
    let indexed: Vec<usize> = idents
        .iter()
        .filter_map(|n| n.strip_prefix('z').and_then(|d| d.parse().ok()))
        .collect();
    let plain = idents.iter().any(|n| matches!(n.as_str(), "x" | "y" | "z"));
    let names: Vec<String> = match (indexed.is_empty(), plain) {
        (false, true) => return Err(ParseError::MixedVariables),
        (false, false) => {
            let k = indexed.iter().copied().max().unwrap_or(2).max(2);
            (1..=k).map(|i| format!("z{i}")).collect()
        }
        (true, true) => {
            let three = idents.iter().any(|n| n == "z");
            ["x", "y", "z"][..if three { 3 } else { 2 }].iter().map(|s| s.to_string()).collect()
        }
        (true, false) => match idents.first() {
            Some(n) => return Err(ParseError::UnknownSymbol(n.clone())),
            None => return Err(ParseError::NoVariables),
        },
    };
    parse_poly_in(s, &names.into(), radicand)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn implicit_multiplication_and_rationals() {
        let p = parse_poly("3/2 z1^2z2 - z2^3", &["z1", "z2"]).unwrap();
        assert_eq!(p.coefficient(&Monomial::new(&[2, 1])), ExactScalar::ratio(3, 2));
        assert_eq!(p.coefficient(&Monomial::new(&[0, 3])), ExactScalar::from_integer(-1));
    }

    #[test]
    fn surd_symbol() {
        let p = parse_form("40(1-2r)z1^3z2^3", Some(7)).unwrap();
        let c = p.coefficient(&Monomial::new(&[3, 3]));
        assert_eq!(c.to_string(), "40 + -80*sqrt(7)");
        assert!(parse_form("r*z1^2", None).is_err());
    }

    #[test]
    fn variable_inference() {
        assert_eq!(parse_form("x^4+y^4", None).unwrap().nvars(), 2);
        assert_eq!(parse_form("x^3+y^3+z^3", None).unwrap().nvars(), 3);
        assert_eq!(parse_form("z1^3+z3^3", None).unwrap().nvars(), 3);
        assert_eq!(parse_form("x+z1", None), Err(ParseError::MixedVariables));
    }

    #[test]
    fn printing_round_trips() {
        for s in ["z1^6 + 18*z1^5*z2 + 40*(1 - 2*r)*z1^3*z2^3 - 7/3*z2^6", "(z1+z2)^5 - z1z2^4"] {
            let p = parse_form(s, Some(7)).unwrap();
            assert_eq!(parse_form(&p.to_string(), Some(7)).unwrap(), p);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_form("z1^", None), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_form("z1/z2", None), Err(ParseError::BadDivision)));
        assert!(matches!(parse_form("z1 ? z2", None), Err(ParseError::UnexpectedChar('?', 3))));
    }
}
