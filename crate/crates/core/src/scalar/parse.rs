//! Reader for scalar strings: integers, parameters, `+ - * / ^`, parentheses
//! and implicit multiplication by juxtaposition (`2q`, `q t`).

use num_bigint::BigInt;

use super::{Param, ParamSet, Poly, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(Param),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ScalarError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Int(digits.parse().expect("digits")));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            // a run like `qt` is read as q*t
            match Param::from_symbol(&word) {
                Some(p) => out.push(Tok::Sym(p)),
                None => {
                    for ch in word.chars() {
                        let p = Param::from_symbol(&ch.to_string())
                            .ok_or_else(|| ScalarError::UnknownParam(word.clone()))?;
                        out.push(Tok::Sym(p));
                    }
                }
            }
        } else {
            return Err(ScalarError::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    params: ParamSet,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' {
                acc.checked_add(&rhs)?
            } else {
                acc.checked_sub(&rhs)?
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.unary()?)?;
                }
                Some(Tok::Int(_)) | Some(Tok::Sym(_)) | Some(Tok::Op('(')) => {
                    acc = acc.checked_mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = matches!(self.peek(), Some(Tok::Op('-')));
            if neg {
                self.pos += 1;
            }
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: i32 = e
                        .try_into()
                        .map_err(|_| ScalarError::Parse("exponent too large".into()))?;
                    return base.powi(if neg { -e } else { e });
                }
                other => return Err(ScalarError::Parse(format!("bad exponent {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Scalar::from_rational(Rational::from_integer(n))),
            Some(Tok::Sym(p)) => {
                if !self.params.contains(p) {
                    return Err(ScalarError::UnknownParam(p.symbol().to_string()));
                }
                Ok(Scalar::from_poly(Poly::var(self.params, p)))
            }
            Some(Tok::Op('(')) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::Op(')')) => Ok(v),
                    _ => Err(ScalarError::Parse("missing `)`".into())),
                }
            }
            other => Err(ScalarError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(super) fn parse_scalar(s: &str, params: Option<ParamSet>) -> Result<Scalar, ScalarError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(ScalarError::Parse("empty input".into()));
    }
    let params = params.unwrap_or_else(|| {
        let used: Vec<Param> = toks
            .iter()
            .filter_map(|t| match t {
                Tok::Sym(p) => Some(*p),
                _ => None,
            })
            .collect();
        ParamSet::of(&used)
    });
    let mut parser = Parser {
        toks,
        pos: 0,
        params,
    };
    let v = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(ScalarError::Parse("trailing input".into()));
    }
    v.in_context(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_and_loose_forms() {
        let a = Scalar::parse("(1 - t)/(1 - q)").unwrap();
        assert_eq!(a.to_string(), "(1 - t)/(1 - q)");
        let b = Scalar::parse("((1+q)(1-t))/(1-q t)").unwrap();
        assert_eq!(b.to_string(), "(1 + q - t - q*t)/(1 - q*t)");
        assert_eq!(Scalar::parse("2q^2/4").unwrap().to_string(), "q^2/2");
        assert_eq!(Scalar::parse("q^-1").unwrap().to_string(), "1/q");
        assert_eq!(Scalar::parse("-3/6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn respects_declared_context() {
        let qt = ParamSet::of(&[Param::Q, Param::T]);
        assert!(Scalar::parse_in("u + 1", qt).is_err());
        let x = Scalar::parse_in("q", qt).unwrap();
        assert_eq!(x.params(), qt);
        assert!(Scalar::parse("1/(1-1)").is_err());
        assert!(Scalar::parse("x").is_err());
    }
}
