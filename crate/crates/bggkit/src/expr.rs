//! Parser for linear expressions over ℚ(i, √2) in named variables.
//!
//! Grammar: sums and differences of products, where every product has at most
//! one non-constant factor. Constants are integers, fractions `p/q`, `i`,
//! `r2` (or `sqrt2`) and parenthesised sub-expressions.

use std::collections::BTreeMap;

use crate::error::{BggError, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `constant + Σ coeff·var`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinForm {
    pub constant: Scalar,
    pub terms: BTreeMap<String, Scalar>,
}

impl LinForm {
    fn constant(s: Scalar) -> LinForm {
        LinForm {
            constant: s,
            terms: BTreeMap::new(),
        }
    }

    fn var(name: &str) -> LinForm {
        let mut terms = BTreeMap::new();
        terms.insert(name.to_string(), Scalar::one());
        LinForm {
            constant: Scalar::zero(),
            terms,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, var: &str) -> Scalar {
        self.terms.get(var).cloned().unwrap_or_default()
    }

    fn add(mut self, other: LinForm, sign: bool) -> LinForm {
        let o = |s: Scalar| if sign { s } else { -s };
        self.constant += &o(other.constant);
        for (k, v) in other.terms {
            let e = self.terms.entry(k).or_default();
            *e += &o(v);
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    fn scale(mut self, s: &Scalar) -> LinForm {
        self.constant = &self.constant * s;
        for v in self.terms.values_mut() {
            *v = &*v * s;
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(BggError::Parse(format!(
                "unexpected character {ch:?} in {src:?}"
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> BggError {
        BggError::Parse(format!("{msg} in expression {:?}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<LinForm> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(rhs, c == '+');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LinForm> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                if rhs.is_constant() {
                    acc.scale(&rhs.constant)
                } else if acc.is_constant() {
                    rhs.scale(&acc.constant)
                } else {
                    return Err(self.err("product of two variables"));
                }
            } else {
                if !rhs.is_constant() {
                    return Err(self.err("division by a variable"));
                }
                let inv = rhs
                    .constant
                    .checked_inv()
                    .map_err(|_| self.err("division by zero"))?;
                acc.scale(&inv)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LinForm> {
        match self.peek().cloned() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.scale(&Scalar::from_int(-1)))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<LinForm> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let r: Rational = n.parse().map_err(|e: String| self.err(&e))?;
                Ok(LinForm::constant(Scalar::from_rational(r)))
            }
            Tok::Ident(id) => Ok(match id.as_str() {
                "i" | "I" => LinForm::constant(Scalar::i()),
                "r2" | "sqrt2" => LinForm::constant(Scalar::sqrt2()),
                _ => LinForm::var(&id),
            }),
            Tok::Op('(') => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("missing ')'")),
                }
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

/// Parses a linear expression in arbitrary identifiers.
pub fn parse_linear(src: &str) -> Result<LinForm> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(BggError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, src };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parses a constant expression.
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let v = parse_linear(src)?;
    if !v.is_constant() {
        return Err(BggError::Parse(format!(
            "expected a constant, found variables in {src:?}"
        )));
    }
    Ok(v.constant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_round_trip() {
        let s: Scalar = parse_scalar("1/2 - 3/4*i + 5*r2 - 7/3*i*r2").unwrap();
        assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn linear_forms() {
        let f = parse_linear("5/24*(x2 - i*x4) + 13/576*i*x1").unwrap();
        assert_eq!(f.coeff("x2"), Scalar::frac(5, 24));
        assert_eq!(f.coeff("x4"), -(&Scalar::frac(5, 24) * &Scalar::i()));
        assert_eq!(f.coeff("x1"), &Scalar::frac(13, 576) * &Scalar::i());
        assert!(f.constant.is_zero());
        assert!(
            parse_linear("-sqrt2/2*x3").unwrap().coeff("x3")
                == -(&Scalar::sqrt2() / &Scalar::from_int(2))
        );
    }

    #[test]
    fn rejects_products_of_variables() {
        assert!(parse_linear("x1*x2").is_err());
        assert!(parse_linear("1/x").is_err());
    }
}
