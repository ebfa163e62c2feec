//! Parser for homogeneous polynomials in `x`, `y`, `z`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | var ['^' integer]
//! var    := 'x' | 'y' | 'z'
//! ```
//!
//! Whitespace is ignored. Integer coefficients of any size are reduced
//! mod `p`.

use super::plane::{Monomial, PlaneCurve};
use crate::error::{Error, Result};
use crate::finite_field::{is_prime, mul_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(&src[start..i])));
                continue;
            }
            b'x' => Tok::Var(0),
            b'y' => Tok::Var(1),
            b'z' => Tok::Var(2),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected '{ch}'"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
    p: u64,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok<'a>> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, u64)>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { (self.p - c) % self.p } else { c }));
            negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                None => break,
                Some(_) => return self.error("expected '+', '-' or end of input"),
            };
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, u64)> {
        let mut exps = [0u32; 3];
        let mut coeff = 1 % self.p;
        loop {
            match self.peek() {
                Some(Tok::Int(digits)) => {
                    self.pos += 1;
                    coeff = mul_mod(coeff, reduce_decimal(digits, self.p), self.p);
                }
                Some(Tok::Var(v)) => {
                    self.pos += 1;
                    let e = if self.peek() == Some(Tok::Caret) {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[v] = match exps[v].checked_add(e) {
                        Some(total) => total,
                        None => return self.error("exponent overflow"),
                    };
                }
                _ => return self.error("expected a coefficient or one of x, y, z"),
            }
            if self.peek() != Some(Tok::Star) {
                break;
            }
            self.pos += 1;
        }
        Ok(((exps[0], exps[1], exps[2]), coeff))
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Int(digits)) => match digits.parse::<u32>() {
                Ok(e) => {
                    self.pos += 1;
                    Ok(e)
                }
                Err(_) => self.error("exponent too large"),
            },
            _ => self.error("expected an integer exponent after '^'"),
        }
    }
}

fn reduce_decimal(digits: &str, p: u64) -> u64 {
    digits.bytes().fold(0u64, |acc, d| {
        ((acc as u128 * 10 + (d - b'0') as u128) % p as u128) as u64
    })
}

/// Parse `src` as a homogeneous polynomial over `F_p`.
pub fn parse_poly(src: &str, p: u64) -> Result<PlaneCurve> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: src.len(),
        p,
    };
    let terms = parser.expr()?;
    PlaneCurve::from_terms(p, terms)
}
