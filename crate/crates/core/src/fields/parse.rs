//! Expression grammar for elements of Q(X).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 'X' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-X^2` is `-(X^2)`.

use num_bigint::BigInt;

use super::field::{Field, Rational};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

const MAX_EXPONENT: u64 = 4096;

pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
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

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + &rhs } else { acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = acc * &rhs;
            } else {
                if rhs.is_zero() {
                    return Err(Error::Parse {
                        position: at,
                        message: "division by the zero polynomial".into(),
                    });
                }
                acc = acc / &rhs;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let e = self.integer()?;
        let e: u64 = e
            .try_into()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::Parse {
                position: at,
                message: format!("exponent larger than {MAX_EXPONENT}"),
            })?;
        let e = if negative { -(e as i64) } else { e as i64 };
        base.pow(e).ok_or(Error::Parse {
            position: at,
            message: "negative power of zero".into(),
        })
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                Ok(RatFunc::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(Rational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected an integer, `X` or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::field::int;
    use crate::fields::poly::Poly;

    #[test]
    fn parses_the_indeterminate() {
        let x = parse_ratfunc("X").unwrap();
        assert_eq!(x.num(), &Poly::monomial(int(1), 1));
        assert!(x.den().is_one());
    }

    #[test]
    fn parses_laurent_trace() {
        let f = parse_ratfunc("-256*X^2+320-16/X^2").unwrap();
        assert_eq!(
            f.num(),
            &Poly::new(vec![int(-16), int(0), int(320), int(0), int(-256)])
        );
        assert_eq!(f.den(), &Poly::monomial(int(1), 2));
    }

    #[test]
    fn power_binds_tighter_than_unary_minus() {
        assert_eq!(parse_ratfunc("-X^2").unwrap(), parse_ratfunc("-(X^2)").unwrap());
        assert_eq!(parse_ratfunc("X^-2").unwrap(), parse_ratfunc("1/X^2").unwrap());
        assert_eq!(parse_ratfunc("2^3").unwrap(), RatFunc::constant(int(8)));
    }

    #[test]
    fn reports_error_position() {
        match parse_ratfunc("X + * 2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ratfunc("(X"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfunc("X)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfunc("4X"), Err(Error::Parse { .. })));
    }

    #[test]
    fn division_by_zero_polynomial_is_rejected() {
        match parse_ratfunc("1/(X-X)") {
            Err(Error::Parse { message, .. }) => assert!(message.contains("zero")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ratfunc("0^-1").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["X", "-X^3+1/2*X-7", "(X^2+1)/(X-3)", "-16/X^2+3", "0", "-5/7"] {
            let f = parse_ratfunc(s).unwrap();
            let again = parse_ratfunc(&f.to_expr()).unwrap();
            assert_eq!(f, again, "{s} -> {}", f.to_expr());
        }
    }
}
