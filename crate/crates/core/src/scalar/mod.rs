//! Exact arithmetic: rationals, sparse polynomials in the deformation
//! parameters, reduced rational functions and truncated series in `z`.

mod gcd;
mod heugcd;
mod parse;
mod poly;
mod ratfun;
mod series;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use num_rational::BigRational as Rational;
pub use poly::{Monomial, Poly};
pub use ratfun::Scalar;
pub use series::ZSeries;

/// The symbols a [`Scalar`] may depend on. Exponent vectors are indexed by
/// [`Param::index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Q,
    T,
    Alpha,
    U,
}

pub const NUM_PARAMS: usize = 4;

impl Param {
    pub const ALL: [Param; NUM_PARAMS] = [Param::Q, Param::T, Param::Alpha, Param::U];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::T => "t",
            Param::Alpha => "α",
            Param::U => "u",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Param> {
        match s {
            "q" => Some(Param::Q),
            "t" => Some(Param::T),
            "α" | "alpha" => Some(Param::Alpha),
            "u" => Some(Param::U),
            _ => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The parameter set a computation context is declared over.
///
/// The empty set is the context of pure constants and combines with any
/// other context; two distinct non-empty contexts never combine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamSet(u8);

impl ParamSet {
    pub const EMPTY: ParamSet = ParamSet(0);

    pub fn of(params: &[Param]) -> ParamSet {
        ParamSet(params.iter().fold(0, |acc, p| acc | (1 << p.index())))
    }

    pub fn contains(self, p: Param) -> bool {
        self.0 & (1 << p.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn params(self) -> impl Iterator<Item = Param> {
        Param::ALL.into_iter().filter(move |p| self.contains(*p))
    }

    /// Resolve the context of a binary operation.
    pub fn join(self, other: ParamSet) -> Result<ParamSet, ScalarError> {
        if self == other || other.is_empty() {
            Ok(self)
        } else if self.is_empty() {
            Ok(other)
        } else {
            Err(ScalarError::ContextMismatch(self, other))
        }
    }

    /// Symbolic generator `p` of this context.
    pub fn var(self, p: Param) -> Result<Scalar, ScalarError> {
        if !self.contains(p) {
            return Err(ScalarError::UnknownParam(p.symbol().to_string()));
        }
        Ok(Scalar::from_poly(Poly::var(self, p)))
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.params().map(Param::symbol).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation pole: denominator vanishes at the given point")]
    EvaluationPole,
    #[error("assignment does not bind parameter {0}")]
    Unbound(Param),
    #[error("cannot mix parameter contexts {0} and {1}")]
    ContextMismatch(ParamSet, ParamSet),
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series is not invertible (zero constant term)")]
    NotInvertible,
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("not a polynomial in {0}")]
    NotPolynomialIn(Param),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Build an exact rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or an integer. Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(format!("not a rational: `{s}`"));
    let parse_int = |x: &str| -> Result<BigInt, ScalarError> {
        let x = x.trim();
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == BigInt::from(0) {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_without_decimals() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn contexts_join_only_when_compatible() {
        let qt = ParamSet::of(&[Param::Q, Param::T]);
        let u = ParamSet::of(&[Param::U]);
        assert_eq!(qt.join(ParamSet::EMPTY).unwrap(), qt);
        assert_eq!(ParamSet::EMPTY.join(u).unwrap(), u);
        assert!(qt.join(u).is_err());
        assert!(u.var(Param::T).is_err());
    }
}
