//! Text syntax for Hecke elements: `(q-1)*T[s,t] + q*T[]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'q' | 'T[' names ']' | '(' expr ')'
//! ```
//!
//! `T[...]` lists a reduced word in generator names; `T[]` is the unit.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::algebra::HeckeAlgebra;
use super::element::HeckeElement;
use crate::{Error, IntPolynomial, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Q,
    Basis(Vec<String>),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            'q' => out.push((start, Token::Q)),
            'T' => {
                if chars.get(i + 1) != Some(&'[') {
                    return Err(Error::parse(
                        format!("column {}", i + 2),
                        "expected '[' after T",
                    ));
                }
                let close = chars[i..]
                    .iter()
                    .position(|&x| x == ']')
                    .map(|p| p + i)
                    .ok_or_else(|| Error::parse(format!("column {}", i + 1), "unclosed T["))?;
                let inner: String = chars[i + 2..close].iter().collect();
                let names = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect();
                out.push((start, Token::Basis(names)));
                i = close;
            }
            d if d.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push((start, Token::Int(digits.parse().expect("ascii digits"))));
            }
            other => {
                return Err(Error::parse(
                    format!("column {}", start + 1),
                    format!("unexpected character {other:?}"),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'p, 'a> {
    alg: &'p HeckeAlgebra<'a>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_, '_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn location(&self) -> String {
        match self.tokens.get(self.pos) {
            Some((c, _)) => format!("column {}", c + 1),
            None => "end of input".into(),
        }
    }

    fn expr(&mut self) -> Result<HeckeElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<HeckeElement> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = self.alg.mul(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<HeckeElement> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<HeckeElement> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.tokens.get(self.pos) {
            Some((_, Token::Int(n))) => usize::try_from(n)
                .map_err(|_| Error::parse(self.location(), "exponent too large"))?,
            _ => return Err(Error::parse(self.location(), "expected integer exponent")),
        };
        self.pos += 1;
        let mut acc = self.alg.one();
        for _ in 0..exp {
            acc = self.alg.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<HeckeElement> {
        let loc = self.location();
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(Error::parse(loc, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(HeckeElement::monomial(0, IntPolynomial::constant(n))),
            Token::Q => Ok(HeckeElement::monomial(0, IntPolynomial::q())),
            Token::Basis(names) => {
                let m = self.alg.ball().system();
                let word = names
                    .iter()
                    .map(|n| {
                        m.generator(n)
                            .ok_or_else(|| Error::UnknownGenerator(n.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let w = self.alg.ball().from_word(&word)?;
                if self.alg.ball().length(w) != word.len() {
                    return Err(Error::parse(
                        loc,
                        format!("T[{}] is not a reduced word", names.join(",")),
                    ));
                }
                Ok(HeckeElement::basis(w))
            }
            Token::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(Error::parse(self.location(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::parse(loc, format!("unexpected token {other:?}"))),
        }
    }
}

impl<'a> HeckeAlgebra<'a> {
    /// Parses and evaluates an element expression.
    pub fn parse_element(&self, text: &str) -> Result<HeckeElement> {
        let mut p = Parser {
            alg: self,
            tokens: tokenize(text)?,
            pos: 0,
        };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::parse(p.location(), "trailing input"));
        }
        Ok(out)
    }

    /// `T[s,t]` for the BFS reduced word of `w`.
    pub fn format_basis(&self, w: usize) -> String {
        let m = self.ball().system();
        let names: Vec<&str> = self.ball().word(w).iter().map(|&s| m.name(s)).collect();
        format!("T[{}]", names.join(","))
    }

    /// Terms listed by decreasing `(length, index)`.
    pub fn format_element(&self, a: &HeckeElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in a.terms().rev().enumerate() {
            let basis = self.format_basis(w);
            let neg_mono = c.term_count() == 1 && c.leading().is_some_and(|l| l.is_negative());
            let mag = if neg_mono { -c } else { c.clone() };
            let coeff = mag.to_string().replace(' ', "");
            let body = if mag.is_one() {
                basis
            } else if mag.term_count() == 1 {
                format!("{coeff}*{basis}")
            } else {
                format!("({coeff})*{basis}")
            };
            match (k, neg_mono) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, CayleyBall, Extent};

    fn a2() -> CayleyBall {
        let m = catalog("A2").unwrap().with_names(&["s", "t"]).unwrap();
        CayleyBall::build(&m, Extent::Complete).unwrap()
    }

    #[test]
    fn square_of_generator() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        let x = h.parse_element("T[s] * T[s]").unwrap();
        assert_eq!(h.format_element(&x), "(q-1)*T[s] + q*T[]");
        assert_eq!(h.parse_element("T[s]^2").unwrap(), x);
        assert_eq!(h.parse_element(&h.format_element(&x)).unwrap(), x);
    }

    #[test]
    fn round_trips() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        for text in [
            "-T[s,t] + 2*T[t] - q^2*T[]",
            "(q^2-q+3)*T[s,t,s] - 7*T[]",
            "0",
            "T[]",
        ] {
            let x = h.parse_element(text).unwrap();
            assert_eq!(h.parse_element(&h.format_element(&x)).unwrap(), x, "{text}");
        }
        assert_eq!(
            h.format_element(&h.parse_element("-(T[s])").unwrap()),
            "-T[s]"
        );
    }

    #[test]
    fn errors() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        assert!(matches!(
            h.parse_element("T[u]"),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            h.parse_element("T[s,s]"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(h.parse_element("(T[s]"), Err(Error::Parse { .. })));
        assert!(matches!(
            h.parse_element("T[s] +"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(h.parse_element("x"), Err(Error::Parse { .. })));
    }
}
