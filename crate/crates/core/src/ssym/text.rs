//! ASCII text form of polynomials.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-'? atom ('^' exp)?
//! atom     := rational | 'Q' digits | '(' expr ')'
//! rational := digits ('/' digits)?
//! exp      := '-'? digits | '(' '-'? digits '/' '2' ')'
//! ```
//!
//! Whitespace is ignored. Half-integer and negative exponents are accepted
//! only on powers of `Q2` (negative integer powers also on nonzero constants).
//! Output lists terms by weight, then by exponent map.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, SSPoly};
use crate::error::{Error, Result};

pub(crate) fn format_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let factors: Vec<String> = m
        .doubled_powers()
        .iter()
        .map(|&(k, d)| match d {
            2 => format!("Q{k}"),
            d if d % 2 == 0 => format!("Q{k}^{}", d / 2),
            d => format!("Q{k}^({d}/2)"),
        })
        .collect();
    factors.join("*")
}

fn format_term(c: &Rational, m: &Monomial) -> String {
    if m.is_one() {
        c.to_string()
    } else if c.is_one() {
        format_monomial(m)
    } else {
        format!("{c}*{}", format_monomial(m))
    }
}

pub(crate) fn format_poly(f: &SSPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&Monomial, &Rational)> = f.terms().collect();
    terms.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| a.0.cmp(b.0)));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let body = format_term(&c.abs(), m);
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn parse(text: &str) -> Result<SSPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Exponent {
    Int(i64),
    /// Doubled value of an odd half-integer.
    Half(i64),
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn small(&mut self) -> Result<i64> {
        let pos = self.pos;
        let n = self.digits()?;
        i64::try_from(n).map_err(|_| Error::Syntax {
            pos,
            msg: "exponent out of range".into(),
        })
    }

    fn expr(&mut self) -> Result<SSPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SSPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SSPoly> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let exp = self.exponent()?;
        power(base, exp).map_err(|e| match e {
            Error::Syntax { msg, .. } => Error::Syntax { pos: at, msg },
            other => other,
        })
    }

    fn atom(&mut self) -> Result<SSPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'Q') => {
                self.pos += 1;
                let pos = self.pos;
                let k = u32::try_from(self.digits()?).map_err(|_| Error::Syntax {
                    pos,
                    msg: "generator index out of range".into(),
                })?;
                Ok(SSPoly::generator(k))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                if self.eat(b'/') {
                    let pos = self.pos;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(SSPoly::constant(Rational::new(n, d)))
                } else {
                    Ok(SSPoly::constant(Rational::from_integer(n)))
                }
            }
            Some(_) => Err(self.err("expected a number, a generator Qk or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let n = self.small()?;
            let n = if neg { -n } else { n };
            if self.eat(b'/') {
                let pos = self.pos;
                if self.small()? != 2 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "fractional exponents must have denominator 2".into(),
                    });
                }
                self.expect(b')')?;
                Ok(if n % 2 == 0 { Exponent::Int(n / 2) } else { Exponent::Half(n) })
            } else {
                self.expect(b')')?;
                Ok(Exponent::Int(n))
            }
        } else {
            let neg = self.eat(b'-');
            let n = self.small()?;
            Ok(Exponent::Int(if neg { -n } else { n }))
        }
    }
}

fn single_term(f: &SSPoly) -> Option<(&Monomial, &Rational)> {
    let mut it = f.terms();
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

fn power(base: SSPoly, exp: Exponent) -> Result<SSPoly> {
    let doubled = match exp {
        Exponent::Int(e) if e >= 0 => return Ok(base.pow(e as u32)),
        Exponent::Int(e) => 2 * e,
        Exponent::Half(d) => d,
    };
    let half = doubled % 2 != 0;
    let Some((m, c)) = single_term(&base) else {
        return Err(Error::Syntax {
            pos: 0,
            msg: "only powers of Q2 may have negative or half-integer exponents".into(),
        });
    };
    if let Some(&(k, _)) = m.doubled_powers().iter().find(|&&(k, _)| k != 2) {
        return Err(if half {
            Error::HalfExponent(k)
        } else {
            Error::NegativeExponent(k)
        });
    }
    if half && !c.is_one() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "half-integer power of a non-unit constant".into(),
        });
    }
    // (c Q2^{d2/2})^{doubled/2} = c^{doubled/2} Q2^{d2·doubled/4}
    let d2 = m.doubled_exponent(2);
    if (d2 * doubled) % 2 != 0 {
        return Err(Error::Syntax {
            pos: 0,
            msg: "exponent of Q2 must be a multiple of 1/2".into(),
        });
    }
    let new_doubled = d2 * doubled / 2;
    let coeff = if half {
        Rational::one()
    } else {
        let e = doubled / 2;
        if c.is_zero() {
            return Err(Error::Syntax {
                pos: 0,
                msg: "negative power of zero".into(),
            });
        }
        num_traits::pow(c.recip(), (-e) as usize)
    };
    Ok(SSPoly::term(coeff, Monomial::q2_half_power(new_doubled)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssym::{int, rat};

    #[test]
    fn parse_examples() {
        let h4 = parse("27/4*Q2^2 + 27/2*Q4").unwrap();
        let expected = (SSPoly::generator(2).pow(2) + SSPoly::generator(4).scale(&int(2)))
            .scale(&rat(27, 4));
        assert_eq!(h4, expected);
        assert_eq!(
            parse("Q2^(3/2)").unwrap(),
            SSPoly::monomial(Monomial::q2_half_power(3))
        );
        assert_eq!(parse("Q3^(1/2)"), Err(Error::HalfExponent(3)));
        assert_eq!(parse("Q3^-1"), Err(Error::NegativeExponent(3)));
        assert_eq!(parse("Q2^(-3/2)").unwrap().to_string(), "Q2^(-3/2)");
        assert_eq!(parse("Q2^-2").unwrap().to_string(), "Q2^-2");
        assert_eq!(parse("(Q2^3)^(1/2)").unwrap(), parse("Q2^(3/2)").unwrap());
        assert_eq!(parse("(2*Q2)^-1").unwrap(), parse("1/2*Q2^-1").unwrap());
        assert_eq!(parse("Q0 + Q2 - Q2").unwrap(), SSPoly::one());
        assert_eq!(parse("-9/4 * Q3").unwrap().to_string(), "-9/4*Q3");
        assert_eq!(parse(" (Q2 + Q3) * (Q2 - Q3) ").unwrap().to_string(), "Q2^2 - Q3^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse("Q2 + * Q3") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("Q2 Q3"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("Q2^(1/3)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(Q2+Q3)^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn format_order() {
        let f = parse("Q4 + Q2^2 + 3 - Q1*Q3 + Q2^(3/2)").unwrap();
        assert_eq!(f.to_string(), "3 + Q2^(3/2) - Q1*Q3 + Q2^2 + Q4");
        assert_eq!(SSPoly::zero().to_string(), "0");
        assert_eq!(parse("-1/2").unwrap().to_string(), "-1/2");
    }
}
