//! Polynomial expressions in `x` with rational coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. The result is scaled to a
//! primitive integer polynomial and the scale factor kept alongside.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

const MAX_EXPONENT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialExpression {
    pub source: String,
    /// Primitive integer polynomial equal to `scale` times the parsed value.
    pub polynomial: IntPoly,
    pub scale: BigRational,
}

/// Dense polynomial with rational coefficients, ascending.
type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn add(a: &RatPoly, b: &RatPoly, sign: i32) -> RatPoly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).unwrap_or(&zero);
                let y = b.get(i).unwrap_or(&zero);
                if sign < 0 {
                    x - y
                } else {
                    x + y
                }
            })
            .collect(),
    )
}

fn mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let col = pos + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Num(digits.parse().unwrap()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Ident(name), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: col,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((Tok::End, text.len() + 1));
    Ok(out)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Op(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = add(&acc, &self.term()?, 1);
            } else if self.eat('-') {
                acc = add(&acc, &self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))
    }

    fn term(&mut self) -> Result<RatPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mul(&acc, &self.unary()?);
            } else if *self.peek() == Tok::Op('/') {
                let at = self.pos();
                self.at += 1;
                let d = self.unary()?;
                match d.as_slice() {
                    [c] => acc = acc.iter().map(|a| a / c).collect(),
                    [] => return Err(Error::Parse { pos: at, msg: "division by zero".into() }),
                    _ => {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division by a non-constant polynomial".into(),
                        })
                    }
                }
            } else if self.starts_atom() {
                acc = mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatPoly> {
        if self.eat('-') {
            Ok(self.unary()?.iter().map(|c| -c).collect())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let Tok::Num(e) = self.peek().clone() else {
            return self.err("expected a nonnegative integer exponent");
        };
        let e: usize = match e.try_into() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
        };
        self.at += 1;
        let mut acc = vec![BigRational::one()];
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RatPoly> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.at += 1;
                Ok(trim(vec![BigRational::from_integer(n)]))
            }
            Tok::Ident(name) if name == "x" => {
                self.at += 1;
                Ok(vec![BigRational::zero(), BigRational::one()])
            }
            Tok::Ident(name) => Err(Error::NonUnivariate { name, pos }),
            Tok::Op('(') => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Tok::Op(c) => self.err(format!("expected a number, `x` or `(`, found `{c}`")),
            Tok::End => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` and clears denominators.
pub fn parse_polynomial(text: &str) -> Result<PolynomialExpression> {
    let mut parser = Parser { toks: lex(text)?, at: 0 };
    let value = parser.expr()?;
    if *parser.peek() != Tok::End {
        return parser.err("unexpected trailing input");
    }
    let den = value.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let num: Vec<BigInt> = value.iter().map(|c| (c * &den).to_integer()).collect();
    let content = num.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let content = if content.is_zero() { BigInt::one() } else { content };
    let polynomial = IntPoly::new(num.into_iter().map(|c| c / &content).collect());
    Ok(PolynomialExpression {
        source: text.to_string(),
        polynomial,
        scale: BigRational::new(den, content),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(text: &str) -> Vec<i64> {
        parse_polynomial(text)
            .unwrap()
            .polynomial
            .coeffs()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn basic() {
        assert_eq!(coeffs("x^5 - 4*x + 2"), [2, -4, 0, 0, 0, 1]);
        assert_eq!(coeffs("x^5 - 4x + 2"), [2, -4, 0, 0, 0, 1]);
        assert_eq!(coeffs("  -x^2+1 "), [1, 0, -1]);
        assert_eq!(coeffs("(x+1)^3"), [1, 3, 3, 1]);
        assert_eq!(coeffs("2(x - 1)(x + 1)"), [-1, 0, 1]);
        assert_eq!(coeffs("-2^2"), [-1]);
        assert_eq!(coeffs("3x^2/6 + x/2"), [0, 1, 1]);
    }

    #[test]
    fn rational_scale() {
        let e = parse_polynomial("(1/2)x^2 + x").unwrap();
        assert_eq!(e.polynomial, IntPoly::from_i64s(&[0, 2, 1]));
        assert_eq!(e.scale, BigRational::from_integer(2.into()));
        let e = parse_polynomial("6x + 4").unwrap();
        assert_eq!(e.polynomial, IntPoly::from_i64s(&[2, 3]));
        assert_eq!(e.scale, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_polynomial("x^5 + y"),
            Err(Error::NonUnivariate { name: "y".into(), pos: 7 })
        );
        assert!(matches!(parse_polynomial("x^"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_polynomial("(x + 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x / x"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_polynomial("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x # 2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_polynomial(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x^(2)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trip() {
        for c in [&[2, -4, 0, 0, 0, 1][..], &[-1, 0, 0, -3], &[0, 1], &[-1], &[0, 0, -1, 1]] {
            let f = IntPoly::from_i64s(c);
            assert_eq!(parse_polynomial(&f.to_string()).unwrap().polynomial.coeffs(), f.coeffs());
        }
    }
}
