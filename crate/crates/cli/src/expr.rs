//! The trivector expression language.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr  := '0' | ['+' | '-'] term (('+' | '-') term)*
//! term  := [rational '*'] basis '^' basis '^' basis
//! basis := 'v1'..'v6' | 'e1'..'e3' | 'f1'..'f3'     (e_i = v_i, f_i = v_{i+3})
//! rational := digits ['/' digits]
//! ```
//!
//! Repeated or unsorted indices resolve through the exterior kernel, so
//! `v2^v1^v3` contributes `−v1^v2^v3` and `v1^v1^v2` contributes nothing.

use std::fmt::Write as _;

use trivec::exterior::{tuples, Trivector};
use trivec::scalar::Rational;

/// A parse failure with the byte position where it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { text: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError { position: start, message: "integer too large".into() })
    }

    /// `digits ['/' digits]`, unsigned; the sign comes from the term separator.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.digits()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let at = self.pos;
            let denom = self.digits()?;
            if denom == 0 {
                return Err(ParseError { position: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(numer as i64, denom as i64).expect("nonzero denominator"))
        } else {
            Ok(Rational::from_int(numer as i64))
        }
    }

    fn basis_index(&mut self) -> Result<u8, ParseError> {
        let at = self.pos;
        let letter = self.bump().ok_or_else(|| self.error("expected a basis symbol"))?;
        let digit = self
            .bump()
            .filter(u8::is_ascii_digit)
            .map(|b| b - b'0')
            .ok_or_else(|| self.error("expected a basis index digit"))?;
        match (letter, digit) {
            (b'v', 1..=6) => Ok(digit),
            (b'e', 1..=3) => Ok(digit),
            (b'f', 1..=3) => Ok(digit + 3),
            (b'v' | b'e' | b'f', _) => Err(ParseError {
                position: at,
                message: format!("basis index {digit} out of range for {}", letter as char),
            }),
            _ => Err(ParseError {
                position: at,
                message: format!("unknown basis symbol {:?}", letter as char),
            }),
        }
    }

    fn term(&mut self) -> Result<(Rational, [u8; 3]), ParseError> {
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.rational()?;
            if self.peek() != Some(b'*') {
                return Err(self.error("expected '*' between coefficient and wedge"));
            }
            self.bump();
            c
        } else {
            Rational::one()
        };
        let first = self.basis_index()?;
        let mut indices = [first, 0, 0];
        for slot in indices.iter_mut().skip(1) {
            if self.peek() != Some(b'^') {
                return Err(self.error("expected '^' between basis symbols"));
            }
            self.bump();
            *slot = self.basis_index()?;
        }
        Ok((coeff, indices))
    }
}

/// Parses an expression into an exact trivector, combining like terms.
pub fn parse_trivector(text: &str) -> Result<Trivector, ParseError> {
    let mut scanner = Scanner::new(text);
    if scanner.peek() == Some(b'0') {
        scanner.bump();
        if let Some(b) = scanner.peek() {
            return Err(scanner.error(format!("unexpected {:?} after '0'", b as char)));
        }
        return Ok(Trivector::zero());
    }
    let mut terms: Vec<(Rational, [u8; 3])> = Vec::new();
    let mut negative = match scanner.peek() {
        Some(b'-') => {
            scanner.bump();
            true
        }
        Some(b'+') => {
            scanner.bump();
            false
        }
        Some(_) => false,
        None => return Err(scanner.error("empty expression")),
    };
    loop {
        let (coeff, indices) = scanner.term()?;
        terms.push((if negative { -coeff } else { coeff }, indices));
        match scanner.peek() {
            None => break,
            Some(b'+') => {
                scanner.bump();
                negative = false;
            }
            Some(b'-') => {
                scanner.bump();
                negative = true;
            }
            Some(other) => {
                return Err(scanner.error(format!("unexpected {:?}", other as char)));
            }
        }
    }
    Ok(Trivector::from_terms(&terms))
}

/// Renders a trivector as a canonical expression, parseable back to itself.
pub fn format_trivector(theta: &Trivector) -> String {
    let mut out = String::new();
    for tuple in tuples(3).iter() {
        let idx = tuple.indices();
        let coeff = theta.coeff(idx[0], idx[1], idx[2]);
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push_str("- ");
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            let _ = write!(out, "{magnitude}*");
        }
        let _ = write!(out, "v{}^v{}^v{}", idx[0], idx[1], idx[2]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trivec::scalar::{rat, ratio};

    #[test]
    fn parses_basic_forms() {
        let t = parse_trivector("e1^e2^e3").unwrap();
        assert_eq!(t.coeff(1, 2, 3), &rat(1));

        let t = parse_trivector("e1^e2^e3 + 2*f1^f2^f3").unwrap();
        assert_eq!(t.coeff(1, 2, 3), &rat(1));
        assert_eq!(t.coeff(4, 5, 6), &rat(2));

        let t = parse_trivector("v2^v1^v3").unwrap();
        assert_eq!(t.coeff(1, 2, 3), &rat(-1));
    }

    #[test]
    fn signs_coefficients_and_whitespace() {
        let t = parse_trivector("  -1/2 * v1^v2^v3+3*e1^e2^f1 - v4^v5^v6 ").unwrap();
        assert_eq!(t.coeff(1, 2, 3), &ratio(-1, 2));
        assert_eq!(t.coeff(1, 2, 4), &rat(3));
        assert_eq!(t.coeff(4, 5, 6), &rat(-1));
        // repeated index wedges vanish
        let z = parse_trivector("v1^v1^v2").unwrap();
        assert!(z.is_zero());
        assert!(parse_trivector("0").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_trivector("e1^e2").unwrap_err();
        assert_eq!(err.position, 5);
        let err = parse_trivector("g1^e2^e3").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("unknown basis symbol"));
        let err = parse_trivector("e4^e2^e3").unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_trivector("2 v1^v2^v3").unwrap_err();
        assert!(err.message.contains('*'));
        let err = parse_trivector("1/0*v1^v2^v3").unwrap_err();
        assert!(err.message.contains("zero denominator"));
        assert!(parse_trivector("").is_err());
    }

    #[test]
    fn format_round_trips() {
        for text in ["0", "v1^v2^v3", "- v1^v2^v3 + 5/3*v2^v4^v6"] {
            let theta = parse_trivector(text).unwrap();
            let rendered = format_trivector(&theta);
            assert_eq!(parse_trivector(&rendered).unwrap(), theta);
        }
    }
}
