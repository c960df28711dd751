//! Expression parser for rational functions in `a, b, c, z, q`.
//!
//! Grammar (juxtaposition is multiplication, `^` binds tightest and takes an
//! optionally signed integer, possibly parenthesized):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | var | '(' expr ')'
//! ```

use super::error::AlgError;
use super::monomial::Var;
use super::poly::LaurentPoly;
use super::ratfunc::RationalFunc;
use super::rational::Rational;

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgError> {
        Err(AlgError::Parse { pos: self.pos, msg: msg.into() })
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

    fn integer(&mut self) -> Result<Rational, AlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match s.parse::<i64>() {
            Ok(n) => Ok(Rational::from_int(n)),
            Err(_) => {
                let big: num_bigint::BigInt = s.parse().unwrap();
                Ok(Rational::from_bigints(big, 1.into()))
            }
        }
    }

    fn exponent(&mut self) -> Result<i32, AlgError> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let n = self.integer()?;
        if paren && !self.eat(b')') {
            return self.err("expected ')' after exponent");
        }
        let Rational::Small(v, 1) = n else {
            return self.err("exponent out of range");
        };
        let v = i32::try_from(v).or_else(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RationalFunc, AlgError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalFunc::constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = (c as char).to_string();
                match Var::from_name(&name) {
                    Some(v) => {
                        self.pos += 1;
                        Ok(RationalFunc::var(v))
                    }
                    None => self.err(format!("unknown variable '{name}'")),
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn power(&mut self) -> Result<RationalFunc, AlgError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return base.pow(e).or_else(|_| self.err("zero raised to a negative power"));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<RationalFunc, AlgError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn term(&mut self) -> Result<RationalFunc, AlgError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = &acc / &d;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expr(&mut self) -> Result<RationalFunc, AlgError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parses an expression into a canonical rational function.
pub fn parse_rf(s: &str) -> Result<RationalFunc, AlgError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses an expression that must be a Laurent polynomial.
pub fn parse_poly(s: &str) -> Result<LaurentPoly, AlgError> {
    let f = parse_rf(s)?;
    if !f.is_poly() {
        return Err(AlgError::NotPolynomial(f.to_string()));
    }
    Ok(f.into_parts().0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_round_trips() {
        for s in ["2*a^2*b*q^-1 - c + 1", "a - 1", "-1/2*c^-1*z", "0", "(a - 1)/(c*z - b)"] {
            let f = parse_rf(s).unwrap();
            assert_eq!(parse_rf(&f.to_string()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_rf("2*a^2*b*q^-1 - c + 1").unwrap().to_string(), "2*a^2*b*q^-1 - c + 1");
    }

    #[test]
    fn precedence_and_juxtaposition() {
        assert_eq!(parse_poly("-a^2").unwrap().to_string(), "-a^2");
        assert_eq!(parse_rf("q(1-z)").unwrap(), parse_rf("q - q*z").unwrap());
        assert_eq!(parse_rf("a^(-1)").unwrap(), parse_rf("1/a").unwrap());
        assert_eq!(parse_rf("3/4").unwrap().to_string(), "3/4");
        assert_eq!(parse_rf("abz").unwrap(), parse_rf("a*b*z").unwrap());
    }

    #[test]
    fn errors_are_reported() {
        assert!(parse_rf("a +").is_err());
        assert!(parse_rf("x").is_err());
        assert!(parse_rf("1/(a-a)").is_err());
        assert!(parse_rf("(a").is_err());
        assert!(parse_poly("1/(1-a)").is_err());
    }
}
