//! Parser for ideal literals: a comma-separated generator list, each
//! generator an integer linear expression in `w` (the symbol for θ,
//! whatever the ring), e.g. `2`, `1+w`, `3-2*w`, `-w+5`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::{Element, RingSpec};

/// Parse a generator list and return the ideal it generates.
///
/// Errors with `ParseError` (and the offending position) on malformed
/// input, and with `ZeroIdeal` when every generator is zero.
pub fn parse_ideal_literal(ring: &RingSpec, s: &str) -> Result<Ideal> {
    let gens = parse_generators(s)?;
    Ideal::from_generators(ring, &gens).ok_or(Error::ZeroIdeal)
}

/// Parse the generator list without interpreting it in a ring.
pub fn parse_generators(s: &str) -> Result<Vec<Element>> {
    let mut parser = Parser { bytes: s.as_bytes(), pos: 0 };
    let mut gens = vec![parser.expression()?];
    loop {
        parser.skip_ws();
        if parser.eat(b',') {
            gens.push(parser.expression()?);
        } else if parser.pos < parser.bytes.len() {
            return Err(parser.error("expected `,`, `+`, `-`, or end of input"));
        } else {
            return Ok(gens);
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::ParseError { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expression(&mut self) -> Result<Element> {
        self.skip_ws();
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.signed_term(negative)?;
        loop {
            self.skip_ws();
            let negative = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                return Ok(acc);
            };
            acc = acc + self.signed_term(negative)?;
        }
    }

    fn signed_term(&mut self, negative: bool) -> Result<Element> {
        let term = self.term()?;
        Ok(if negative { -term } else { term })
    }

    /// term := 'w' | INT | INT '*' 'w'
    fn term(&mut self) -> Result<Element> {
        self.skip_ws();
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Element::new(0, 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer();
                self.skip_ws();
                if self.eat(b'*') {
                    self.skip_ws();
                    if self.eat(b'w') {
                        Ok(Element { x: BigInt::zero(), y: n })
                    } else {
                        Err(self.error("expected `w` after `*`"))
                    }
                } else {
                    Ok(Element { x: n, y: BigInt::zero() })
                }
            }
            Some(_) => Err(self.error("expected an integer or `w`")),
            None => Err(self.error("expected a term")),
        }
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .expect("digit run parses as an integer")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(d: i64, f: i64) -> RingSpec {
        RingSpec::new(d, f).unwrap()
    }

    fn triple(i: &Ideal) -> (i64, i64, i64) {
        let get = |n: &BigInt| -> i64 { n.try_into().unwrap() };
        (get(i.a()), get(i.b()), get(i.c()))
    }

    #[test]
    fn literal_examples() {
        let r5 = ring(-5, 1);
        assert_eq!(triple(&parse_ideal_literal(&r5, "2, 1+w").unwrap()), (2, 1, 1));
        let gauss = ring(-1, 1);
        assert_eq!(triple(&parse_ideal_literal(&gauss, "1").unwrap()), (1, 0, 1));
        assert_eq!(triple(&parse_ideal_literal(&gauss, "3-2*w").unwrap()), (13, 5, 1));
        assert_eq!(triple(&parse_ideal_literal(&gauss, "3+2*w").unwrap()), (13, 8, 1));
        // 6 and 13 both lie in the ideal, so the pair generates the unit.
        assert_eq!(triple(&parse_ideal_literal(&gauss, "3-2*w, 3+2*w").unwrap()), (1, 0, 1));
        assert_eq!(triple(&parse_ideal_literal(&gauss, " -w ").unwrap()), (1, 0, 1));
        assert_eq!(triple(&parse_ideal_literal(&gauss, "2*w + 3*w").unwrap()), (5, 0, 5));
    }

    #[test]
    fn malformed_literals_report_positions() {
        match parse_ideal_literal(&ring(-1, 1), "2 +") {
            Err(Error::ParseError { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected ParseError, got {other:?}"),
        }
        for bad in ["", "2 3", "2*", "2*x", "w*2", "+", "1,,2", "2,"] {
            assert!(
                matches!(parse_ideal_literal(&ring(-1, 1), bad), Err(Error::ParseError { .. })),
                "literal {bad:?} should fail to parse"
            );
        }
    }

    #[test]
    fn zero_generators_are_a_domain_error() {
        assert_eq!(parse_ideal_literal(&ring(-1, 1), "0, 0-0*w"), Err(Error::ZeroIdeal));
    }

    #[test]
    fn rendered_ideals_reparse_to_the_same_triple() {
        let r = ring(-5, 1);
        for literal in ["2, 1+w", "6", "3, 1+w", "2+w, 7"] {
            let ideal = parse_ideal_literal(&r, literal).unwrap();
            let rendered = ideal.to_string();
            let inner = rendered.trim_start_matches('[').trim_end_matches(']');
            let reparsed = parse_ideal_literal(&r, inner).unwrap();
            assert_eq!(reparsed, ideal, "round trip failed for {literal} -> {rendered}");
        }
    }
}
