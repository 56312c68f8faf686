//! Polynomial expression parser for the CLI.
//!
//! Grammar: integer/rational literals (`3`, `5/2`), the variable `x`,
//! operators `+ - * ^`, and parentheses. `^` takes a nonnegative integer
//! exponent. Alternatively a comma-separated coefficient list
//! `c0,c1,...,cn` is accepted. Degree-0 and zero polynomials are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use ramify::polyring::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "syntax error at byte {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// A parsed polynomial together with its source text.
#[derive(Debug, Clone)]
pub struct PolyExpr {
    pub source: String,
    pub poly: Poly,
}

pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    let poly = if text.contains(',') {
        parse_coeff_list(text)?
    } else {
        let mut p = Parser::new(text);
        let poly = p.expression()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(p.error("unexpected trailing input"));
        }
        poly
    };
    match poly.degree() {
        None => Err(ParseError {
            message: "the zero polynomial is not a valid input".into(),
            position: 0,
        }),
        Some(0) => Err(ParseError {
            message: "degree 0: a constant generates nothing".into(),
            position: 0,
        }),
        Some(_) => Ok(PolyExpr {
            source: text.to_string(),
            poly,
        }),
    }
}

fn parse_coeff_list(text: &str) -> Result<Poly, ParseError> {
    let mut coeffs = vec![];
    let mut offset = 0;
    for part in text.split(',') {
        let trimmed = part.trim();
        if trimmed.is_empty() {
            return Err(ParseError {
                message: "empty coefficient".into(),
                position: offset,
            });
        }
        coeffs.push(parse_rational(trimmed).map_err(|message| ParseError {
            message,
            position: offset,
        })?);
        offset += part.len() + 1;
    }
    Ok(Poly::new(coeffs))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("expected an integer, got {num:?}"))?;
    match den {
        None => Ok(BigRational::from_integer(n)),
        Some(d) => {
            let d: BigInt = d
                .parse()
                .map_err(|_| format!("expected an integer denominator, got {d:?}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError {
            message: message.into(),
            position: self.pos,
        }
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

    fn expression(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate(self.term()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = add(acc, self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = add(acc, negate(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer_literal()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            let mut acc = Poly::from_ints(&[1]);
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::from_ints(&[0, 1]))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(negate(self.atom()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_literal()?;
                // a '/' directly after a literal is a rational literal
                if self.bytes.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.integer_literal()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    return Ok(constant(BigRational::new(n, d)));
                }
                Ok(constant(BigRational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected a literal, 'x', or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer_literal(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse().map_err(|_| self.error("invalid integer"))
    }
}

fn constant(c: BigRational) -> Poly {
    Poly::new(vec![c])
}

fn negate(p: Poly) -> Poly {
    p.scale(&BigRational::from_integer(BigInt::from(-1)))
}

fn add(a: Poly, b: Poly) -> Poly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(a.coeff(i) + b.coeff(i));
    }
    Poly::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramify::exactnum::{rat, rat_frac};

    #[test]
    fn parses_spec_examples() {
        assert_eq!(
            parse_poly("x^3 + 3*x + 3").unwrap().poly,
            Poly::from_ints(&[3, 3, 0, 1])
        );
        assert_eq!(
            parse_poly("3,3,0,1").unwrap().poly,
            Poly::from_ints(&[3, 3, 0, 1])
        );
        assert_eq!(
            parse_poly("x^3 - 3*x^2 + 21").unwrap().poly,
            Poly::from_ints(&[21, 0, -3, 1])
        );
    }

    #[test]
    fn parses_rationals_and_parens() {
        assert_eq!(
            parse_poly("x^2 - 5/4").unwrap().poly,
            Poly::new(vec![rat_frac(-5, 4), rat(0), rat(1)])
        );
        assert_eq!(
            parse_poly("(x + 1)^3 - 2*(x - 1)").unwrap().poly,
            Poly::new(vec![rat(3), rat(1), rat(3), rat(1)])
        );
        assert_eq!(
            parse_poly("-x^2 + x").unwrap().poly,
            Poly::new(vec![rat(0), rat(1), rat(-1)])
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("5").is_err());
        assert!(parse_poly("0,0").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("y + 1").is_err());
        let err = parse_poly("x^2 + $").unwrap_err();
        assert!(err.position >= 6, "position {}", err.position);
    }

    #[test]
    fn display_round_trip_random() {
        use proptest::prelude::*;
        use proptest::test_runner::{Config, TestRunner};
        let mut runner = TestRunner::new(Config {
            cases: 1000,
            ..Config::default()
        });
        let strat = proptest::collection::vec((-999i64..1000, 1i64..60), 2..7);
        runner
            .run(&strat, |coeffs| {
                let p = Poly::new(
                    coeffs
                        .iter()
                        .map(|(n, d)| BigRational::new(BigInt::from(*n), BigInt::from(*d)))
                        .collect(),
                );
                prop_assume!(p.degree().map(|d| d >= 1).unwrap_or(false));
                let reparsed = parse_poly(&p.to_string()).unwrap().poly;
                prop_assert_eq!(reparsed, p);
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn display_round_trip_on_canonicals() {
        for coeffs in [
            vec![rat(3), rat(3), rat(0), rat(1)],
            vec![rat(21), rat(0), rat(-3), rat(1)],
            vec![rat_frac(-5, 4), rat(0), rat(1)],
            vec![rat(1), rat(-1), rat(0), rat(1)],
        ] {
            let p = Poly::new(coeffs);
            let reparsed = parse_poly(&p.to_string()).unwrap().poly;
            assert_eq!(reparsed, p, "{p}");
        }
    }
}
