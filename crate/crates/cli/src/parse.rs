//! Text form of polynomials accepted on the command line.
//!
//! Grammar (whitespace ignored):
//!   poly := ['-'] term (('+'|'-') term)*
//!   term := nat | nat '*'? var | var
//!   var  := ('z'|'x') ['^' nat]
//!
//! Repeated powers accumulate, so `z+z` parses to `2z`. Coefficients are
//! arbitrary precision; there is no overflow.

use num_bigint::BigInt;
use num_traits::Zero;
use polycert::Polynomial;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { offset: self.pos, message: message.into() }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

fn is_var(b: u8) -> bool {
    b == b'z' || b == b'x'
}

/// Parses the grammar above into a canonical polynomial.
pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let mut negative = match cur.peek() {
        Some(b'-') => {
            cur.bump();
            true
        }
        _ => false,
    };
    loop {
        // one term
        let (coeff, power) = match cur.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = cur.nat()?;
                match cur.peek() {
                    Some(b'*') => {
                        cur.bump();
                        match cur.peek() {
                            Some(v) if is_var(v) => {}
                            _ => return Err(cur.error("expected variable after `*`")),
                        }
                        let power = parse_var(&mut cur)?;
                        (n, power)
                    }
                    Some(v) if is_var(v) => {
                        let power = parse_var(&mut cur)?;
                        (n, power)
                    }
                    _ => (n, 0),
                }
            }
            Some(v) if is_var(v) => (BigInt::from(1), parse_var(&mut cur)?),
            Some(b) => return Err(cur.error(format!("unexpected character `{}`", b as char))),
            None => return Err(cur.error("expected a term")),
        };
        let signed = if negative { -coeff } else { coeff };
        terms.push((power, signed));

        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                negative = false;
            }
            Some(b'-') => {
                cur.bump();
                negative = true;
            }
            Some(b) => return Err(cur.error(format!("expected `+` or `-`, found `{}`", b as char))),
        }
    }
    let max_pow = terms.iter().map(|(p, _)| *p).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_pow + 1];
    for (p, c) in terms {
        coeffs[p] += c;
    }
    Ok(Polynomial::new(coeffs))
}

fn parse_var(cur: &mut Cursor<'_>) -> Result<usize, ParseError> {
    match cur.bump() {
        Some(b) if is_var(b) => {}
        _ => return Err(cur.error("expected variable `z` or `x`")),
    }
    if cur.peek() == Some(b'^') {
        cur.bump();
        let n = cur.nat()?;
        let power: usize = n
            .try_into()
            .map_err(|_| cur.error("exponent too large"))?;
        Ok(power)
    } else {
        Ok(1)
    }
}

/// Parses a comma-separated coefficient list `a_0,a_1,...,a_n`.
pub fn parse_coeffs(text: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let trimmed = part.trim();
        if trimmed.is_empty() {
            return Err(ParseError { offset, message: "empty coefficient".into() });
        }
        let c: BigInt = trimmed
            .parse()
            .map_err(|_| ParseError { offset, message: format!("bad integer `{trimmed}`") })?;
        coeffs.push(c);
        offset += part.len() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &Polynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn parses_paper_style_text() {
        let p = parse_poly("64+56z^2+14z^4+z^6").unwrap();
        assert_eq!(coeffs(&p), vec![64, 0, 56, 0, 14, 0, 1]);

        let p = parse_poly("-3+3z+343z^2-126z^4+126z^5+14406z^6").unwrap();
        assert_eq!(coeffs(&p), vec![-3, 3, 343, 0, -126, 126, 14406]);

        let p = parse_poly("z").unwrap();
        assert_eq!(coeffs(&p), vec![0, 1]);
    }

    #[test]
    fn accepts_x_stars_and_whitespace() {
        let p = parse_poly(" 2*x^3 - x + 7 ").unwrap();
        assert_eq!(coeffs(&p), vec![7, -1, 0, 2]);
        assert_eq!(parse_poly("3x").unwrap(), parse_poly("3*z").unwrap());
    }

    #[test]
    fn accumulates_repeated_powers() {
        let p = parse_poly("z+z+1-z^2+2z^2").unwrap();
        assert_eq!(coeffs(&p), vec![1, 2, 1]);
        // cancellation normalizes away
        let p = parse_poly("z^5-z^5+1").unwrap();
        assert_eq!(coeffs(&p), vec![1]);
    }

    #[test]
    fn reports_error_offsets() {
        let err = parse_poly("64+56y").unwrap_err();
        assert_eq!(err.offset, 5);
        let err = parse_poly("").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = parse_poly("3*").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(parse_poly("1 2").is_err());
    }

    #[test]
    fn parses_coefficient_lists() {
        let p = parse_coeffs("64,0,56,0,14,0,1").unwrap();
        assert_eq!(coeffs(&p), vec![64, 0, 56, 0, 14, 0, 1]);
        assert_eq!(parse_coeffs("-2, -4, 3, -2, 2").unwrap(), parse_poly("-2-4z+3z^2-2z^3+2z^4").unwrap());
        assert!(parse_coeffs("1,,2").is_err());
        assert!(parse_coeffs("1,a").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["64+56z^2+14z^4+z^6", "-2-4z+3z^2-2z^3+2z^4", "z", "-z^3+1", "17"] {
            let p = parse_poly(text).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed).unwrap(), p, "printer broke `{text}` -> `{printed}`");
        }
    }
}
