//! Parser and printer for cyclotomic values in `E(n)^k` notation.
//!
//! Grammar:
//! ```text
//! expr := ['-'] term (('+'|'-') term)*
//! term := [coef '*'] atom | coef
//! atom := 'E(' int ')' ['^' int]
//! coef := int | int '/' int
//! ```
//! The printer emits terms in ascending exponent order over the element's
//! minimal conductor, which is the normal form round-tripped by the data
//! files.

use num::{BigRational, One, Signed};

use super::cyclotomic::{Cyclotomic, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: String) -> ParseError {
        ParseError { pos: self.pos, msg }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut p = self.pos;
        if self.src.get(p) == Some(&b'-') {
            p += 1;
        }
        let digits = p;
        while p < self.src.len() && self.src[p].is_ascii_digit() {
            p += 1;
        }
        if p == digits {
            return Err(self.err("expected integer".into()));
        }
        self.pos = p;
        std::str::from_utf8(&self.src[start..p])
            .unwrap()
            .parse()
            .map_err(|e| self.err(format!("bad integer: {}", e)))
    }

    /// coef := int ['/' int]
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d == 0 {
                return Err(self.err("zero denominator".into()));
            }
            Ok(BigRational::new(n.into(), d.into()))
        } else {
            Ok(BigRational::from_integer(n.into()))
        }
    }

    /// atom := 'E(' int ')' ['^' int]
    fn atom(&mut self) -> Result<Cyclotomic, ParseError> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let n = self.integer()?;
        if n < 1 {
            return Err(self.err(format!("invalid root order {}", n)));
        }
        self.expect(b')')?;
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            1
        };
        Ok(Cyclotomic::root_of_unity(n as u64, e))
    }

    /// term := [coef '*'] atom | atom | coef (sign already consumed)
    fn term(&mut self) -> Result<Cyclotomic, ParseError> {
        match self.peek() {
            Some(b'E') => self.atom(),
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let coef = self.coefficient()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok(self.atom()?.scale(&coef))
                } else {
                    Ok(Cyclotomic::from_rational(coef))
                }
            }
            _ => Err(self.err("expected term".into())),
        }
    }

    fn expr(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            // leading sign binds to the first term
            self.pos += 1;
            neg = true;
        }
        let first = self.term()?;
        let mut acc = if neg { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                None => return Ok(acc),
                Some(c) => return Err(self.err(format!("unexpected '{}'", c as char))),
            }
        }
    }
}

/// Parse a cyclotomic value written in `E(n)^k` notation.
pub fn parse(src: &str) -> Result<Cyclotomic, ParseError> {
    Lexer::new(src).expr()
}

/// Print in normal form: ascending exponents over the minimal conductor,
/// unit coefficients elided, rationals as plain numbers.
pub fn print(x: &Cyclotomic) -> String {
    if x.conductor() == 1 {
        return x
            .as_rational()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "0".into());
    }
    let n = x.conductor();
    let mut out = String::new();
    for (i, (e, v)) in x.coeffs().iter().enumerate() {
        let sign = if v.is_negative() { "-" } else { "+" };
        if i > 0 || v.is_negative() {
            out.push_str(sign);
        }
        let a = v.abs();
        let atom = if *e == 1 {
            format!("E({})", n)
        } else {
            format!("E({})^{}", n, e)
        };
        if *e == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&atom);
        } else {
            out.push_str(&format!("{}*{}", a, atom));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::rat;

    #[test]
    fn parse_basic() {
        assert_eq!(parse("E(3)+E(3)^2").unwrap(), Cyclotomic::from_integer(-1));
        assert_eq!(parse("5").unwrap(), Cyclotomic::from_integer(5));
        assert_eq!(parse("-7/2").unwrap().as_rational().unwrap(), crate::arith::cyclotomic::ratio(-7, 2));
        assert_eq!(
            parse("2*E(5)^2").unwrap(),
            Cyclotomic::root_of_unity(5, 2).scale(&rat(2))
        );
    }

    #[test]
    fn parse_mixed_signs() {
        let a = parse("-E(8)+E(8)^3").unwrap();
        let b = Cyclotomic::root_of_unity(8, 3).sub(&Cyclotomic::root_of_unity(8, 1));
        assert_eq!(a, b);
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(parse("").is_err());
        assert!(parse("E(0)").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("E(5)^2^3").is_err());
        assert!(parse("2**E(3)").is_err());
    }

    #[test]
    fn print_forms() {
        assert_eq!(print(&Cyclotomic::zero()), "0");
        assert_eq!(print(&Cyclotomic::from_integer(-3)), "-3");
        let x = parse("E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9").unwrap();
        assert_eq!(print(&x), "E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9");
    }

    #[test]
    fn round_trip_normalizes() {
        // E(6) is not in normal form; its minimal conductor is 3
        let x = parse("E(6)").unwrap();
        assert_eq!(x.conductor(), 3);
        assert_eq!(parse(&print(&x)).unwrap(), x);
    }
}
