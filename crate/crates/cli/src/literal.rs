//! Exact literals in `v` (with `q = v²`), e.g. `3/2`, `q^2 + 1`,
//! `(v - 1/v)/(q + 1)`.

use qdirac::Scalar;

use crate::config::ConfigError;

pub fn parse_scalar(src: &str) -> Result<Scalar, ConfigError> {
    let mut p = Parser {
        src,
        chars: src.char_indices().collect(),
        pos: 0,
    };
    let x = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(x)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ConfigError {
        let at = self.chars.get(self.pos).map_or(self.src.len(), |c| c.0);
        ConfigError::Literal {
            literal: self.src.to_string(),
            reason: format!("{msg} at offset {at}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expr(&mut self) -> Result<Scalar, ConfigError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ConfigError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                let inv = rhs.inv().map_err(|_| self.error("division by zero"))?;
                &acc * &inv
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ConfigError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let e = i32::try_from(self.integer()?).map_err(|_| self.error("exponent too large"))?;
        let e = if negative { -e } else { e };
        base.pow(e).map_err(|_| self.error("zero to a negative power"))
    }

    fn atom(&mut self) -> Result<Scalar, ConfigError> {
        match self.peek() {
            Some('v') => {
                self.pos += 1;
                Ok(Scalar::v_pow(1))
            }
            Some('q') => {
                self.pos += 1;
                Ok(Scalar::q_pow(1))
            }
            Some('(') => {
                self.pos += 1;
                let x = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(x)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_int(self.integer()?)),
            _ => Err(self.error("expected a number, v, q or '('")),
        }
    }

    fn integer(&mut self) -> Result<i64, ConfigError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        digits.parse().map_err(|_| self.error("integer too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_functions() {
        assert_eq!(parse_scalar("1").unwrap(), Scalar::one());
        assert_eq!(parse_scalar("q").unwrap(), Scalar::v_pow(2));
        assert_eq!(parse_scalar("v^-3").unwrap(), Scalar::v_pow(-3));
        let x = parse_scalar("(q - q^-1)/(v+1) * 2").unwrap();
        let want = &(&(&Scalar::q_pow(1) - &Scalar::q_pow(-1)) * &(&Scalar::v_pow(1) + &Scalar::one()).inv().unwrap())
            * &Scalar::from_int(2);
        assert_eq!(x, want);
        assert_eq!(parse_scalar("-3/4 + 1").unwrap(), &Scalar::from_int(1) * &Scalar::from_int(4).inv().unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("(1").is_err());
        assert!(parse_scalar("2 3").is_err());
    }
}
