//! Text form of polynomials.
//!
//! Grammar: terms joined by `+`/`-`; a term is a `*`-product of factors, each
//! factor an integer, a fraction `a/b`, a variable `v` or a power `v^k`.
//! Whitespace is ignored. [`fmt::Display`] emits the canonical form: terms in
//! descending degrevlex order, `c*v^k*w` products, ` + ` / ` - ` separators.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Coeff, Monomial, Polynomial, VariableSet};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut col) = (1, 1);
        for c in src.chars() {
            if !c.is_whitespace() {
                chars.push((line, col, c));
            }
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Cursor {
            chars,
            pos: 0,
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|t| t.2)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => self.chars.last().map(|&(l, c, _)| (l, c + 1)).unwrap_or((1, 1)),
        };
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected digits"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            name.push(c);
            self.pos += 1;
        }
        name
    }
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_polynomial(ring: &VariableSet, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = Coeff::one();
        match cur.peek() {
            Some('+') => {
                cur.bump();
            }
            Some('-') => {
                cur.bump();
                sign = -sign;
            }
            _ if !first => return Err(cur.error("expected `+` or `-`")),
            _ => {}
        }
        first = false;
        let (m, c) = parse_term(ring, &mut cur)?;
        terms.push((m, c * sign));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(ring: &VariableSet, cur: &mut Cursor<'_>) -> Result<(Monomial, Coeff)> {
    let mut coeff = Coeff::one();
    let mut exps = vec![0u16; ring.len()];
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = cur.integer()?;
                let value = if cur.peek() == Some('/') {
                    cur.bump();
                    let den = cur.integer()?;
                    if den.is_zero() {
                        return Err(cur.error("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                coeff *= value;
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let save = cur.pos;
                let name = cur.identifier();
                let Some(index) = ring.index_of(&name) else {
                    cur.pos = save;
                    return Err(cur.error(format!("unknown variable `{name}`")));
                };
                let mut power: u32 = 1;
                if cur.peek() == Some('^') {
                    cur.bump();
                    let k = cur.integer()?;
                    power = u32::try_from(k)
                        .ok()
                        .filter(|&k| k <= u16::MAX as u32)
                        .ok_or_else(|| cur.error("exponent too large"))?;
                }
                let e = exps[index] as u32 + power;
                if e > u16::MAX as u32 {
                    return Err(cur.error("exponent too large"));
                }
                exps[index] = e as u16;
            }
            Some('(') => return Err(cur.error("parentheses are not part of the grammar")),
            _ => return Err(cur.error("expected a number or a variable")),
        }
        if cur.peek() == Some('*') {
            cur.bump();
            continue;
        }
        break;
    }
    Ok((Monomial::from_exponents(&exps), coeff))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &VariableSet, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> VariableSet {
        VariableSet::new(&["x0", "x1", "x2", "y0"]).unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        let r = ring();
        let p = parse_polynomial(&r, " -3/2*x0^2*x1 + x2 - 7 + y0 ").unwrap();
        assert_eq!(p.to_string(), "-3/2*x0^2*x1 + x2 + y0 - 7");
        let q = parse_polynomial(&r, "x0*x0*2").unwrap();
        assert_eq!(q.to_string(), "2*x0^2");
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
    }

    #[test]
    fn reports_line_and_column() {
        let r = ring();
        match parse_polynomial(&r, "x0 +\n  z1") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial(&r, "x0 x1").is_err());
        assert!(parse_polynomial(&r, "1/0").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::array::uniform4(0u16..4), -20i64..20, 1i64..5), 0..6).prop_map(|terms| {
            let r = ring();
            Polynomial::from_terms(
                &r,
                terms
                    .into_iter()
                    .map(|(e, n, d)| (Monomial::from_exponents(&e), BigRational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(p in arb_poly()) {
            let text = p.to_string();
            prop_assert_eq!(parse_polynomial(&ring(), &text).unwrap(), p);
        }
    }
}
