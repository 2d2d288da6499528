//! Generator expressions such as `s1 s2^2 y3 e(1012) - 2 y1 e(0012)`.
//!
//! `s<k>` is `phi_k` and `y<k>` is `y_k`, both 1-based; `e(word)` is an
//! idempotent whose letters are digits, or comma separated integers.

use super::algebra::Gen;
use crate::error::{Error, Result};

/// A sum of integer multiples of generator monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(i64, Vec<Gen>)>,
}

pub fn word_to_string(ii: &[u8]) -> String {
    if ii.iter().all(|&i| i < 10) {
        ii.iter().map(|i| i.to_string()).collect()
    } else {
        ii.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad word `{s}`"));
    if s.contains(',') {
        s.split(',').map(|x| x.trim().parse::<u8>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad)).collect()
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() || self.peek() == Some(b'*') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn power(&mut self) -> Result<u64> {
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            self.number().ok_or_else(|| self.err("expected exponent"))
        } else {
            Ok(1)
        }
    }

    fn index(&mut self) -> Result<usize> {
        let k = self.number().ok_or_else(|| self.err("expected index"))?;
        if k == 0 {
            return Err(self.err("indices are 1-based"));
        }
        Ok(k as usize - 1)
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(src: &str) -> Result<Expr> {
        let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            lx.skip_ws();
            if lx.peek().is_none() {
                break;
            }
            let mut sign = 1i64;
            match lx.peek() {
                Some(b'+') => lx.pos += 1,
                Some(b'-') => {
                    sign = -1;
                    lx.pos += 1
                }
                _ if !first => return Err(lx.err("expected `+` or `-`")),
                _ => {}
            }
            first = false;
            lx.skip_ws();
            let mut coeff = 1i64;
            if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                coeff = lx.number().ok_or_else(|| lx.err("bad coefficient"))? as i64;
            }
            let mut gens = Vec::new();
            loop {
                lx.skip_ws();
                let g = match lx.peek() {
                    Some(b's') => {
                        lx.pos += 1;
                        Gen::Phi(lx.index()?)
                    }
                    Some(b'y') => {
                        lx.pos += 1;
                        Gen::Y(lx.index()?)
                    }
                    Some(b'e') => {
                        lx.pos += 1;
                        if lx.peek() != Some(b'(') {
                            return Err(lx.err("expected `(`"));
                        }
                        let close = src[lx.pos..].find(')').ok_or_else(|| lx.err("unclosed `(`"))? + lx.pos;
                        let word = parse_word(&src[lx.pos + 1..close])?;
                        lx.pos = close + 1;
                        Gen::E(word)
                    }
                    Some(b'+') | Some(b'-') | None => break,
                    Some(c) => return Err(lx.err(&format!("unexpected `{}`", c as char))),
                };
                let p = lx.power()?;
                if p == 0 {
                    return Err(lx.err("zero exponent"));
                }
                for _ in 0..p {
                    gens.push(g.clone());
                }
            }
            terms.push((sign * coeff, gens));
        }
        if terms.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        Ok(Expr { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_monomials() {
        let e: Expr = "s1 s2^2 y3 e(1012) - 2 y1*e(0,0)".parse().unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.terms[0], (1, vec![Gen::Phi(0), Gen::Phi(1), Gen::Phi(1), Gen::Y(2), Gen::E(vec![1, 0, 1, 2])]));
        assert_eq!(e.terms[1], (-2, vec![Gen::Y(0), Gen::E(vec![0, 0])]));
        assert!("s0 e(1)".parse::<Expr>().is_err());
        assert!("s1 x".parse::<Expr>().is_err());
        assert!("".parse::<Expr>().is_err());
        assert_eq!(word_to_string(&[1, 0, 1, 2]), "1012");
        assert_eq!(parse_word("10,2").unwrap(), vec![10, 2]);
    }
}
