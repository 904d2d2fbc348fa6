use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::gcd;
use super::poly::Poly;
use super::{Param, ParamSet, Rational, ScalarError, NUM_PARAMS};

/// Element of Q(params): a reduced fraction of polynomials.
///
/// The denominator's lowest term (in display order) has coefficient 1, so two
/// equal values always share one representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::from_poly(Poly::zero(ParamSet::EMPTY))
    }

    pub fn one() -> Scalar {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::from_poly(Poly::constant(ParamSet::EMPTY, r))
    }

    pub fn from_poly(p: Poly) -> Scalar {
        let params = p.params();
        Scalar {
            num: p,
            den: Poly::one(params),
        }
    }

    /// Build `num / den` and reduce to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let params = num.params().join(den.params())?;
        Ok(Scalar::reduce(num.with_params(params), den.with_params(params)))
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        let params = num.params();
        if num.is_zero() {
            return Scalar {
                num: Poly::zero(params),
                den: Poly::one(params),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        Scalar::normalized(num, den)
    }

    /// Assumes the fraction is already reduced.
    fn normalized(num: Poly, den: Poly) -> Scalar {
        let lead = den.first_term().map(|(_, c)| c.clone()).expect("nonzero");
        if lead.is_one() {
            Scalar { num, den }
        } else {
            let inv = lead.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn params(&self) -> ParamSet {
        self.num.params()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match (self.num.constant_value(), self.den.constant_value()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn involves(&self, p: Param) -> bool {
        self.num.involves(p) || self.den.involves(p)
    }

    /// Re-tag a constant into a context, or check that the context matches.
    pub fn in_context(self, params: ParamSet) -> Result<Scalar, ScalarError> {
        let joined = self.params().join(params)?;
        if joined != params {
            return Err(ScalarError::ContextMismatch(self.params(), params));
        }
        Ok(Scalar {
            num: self.num.with_params(params),
            den: self.den.with_params(params),
        })
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let params = self.params().join(other.params())?;
        if other.is_zero() {
            return self.clone().in_context(params);
        }
        if self.is_zero() {
            return other.clone().in_context(params);
        }
        if self.den == other.den {
            let num = self.num.add(&other.num).with_params(params);
            if self.den.is_constant() {
                return Ok(Scalar::normalized_zero_aware(num, self.den.clone().with_params(params)));
            }
            return Ok(Scalar::reduce(num, self.den.clone().with_params(params)));
        }
        // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d' g)
        let g = gcd(&self.den, &other.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                other.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&d1).add(&other.num.mul(&b1)).with_params(params);
        let den = b1.mul(&d1).mul(&g).with_params(params);
        if g.is_one() {
            Ok(Scalar::normalized_zero_aware(num, den))
        } else {
            Ok(Scalar::reduce(num, den))
        }
    }

    fn normalized_zero_aware(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            let params = num.params();
            Scalar {
                num,
                den: Poly::one(params),
            }
        } else {
            Scalar::normalized(num, den)
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let params = self.params().join(other.params())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar::zero().in_context(params).expect("empty joins"));
        }
        if let Some(c) = other.constant_value() {
            return Scalar::normalized(self.num.scale(&c), self.den.clone()).in_context(params);
        }
        if let Some(c) = self.constant_value() {
            return Scalar::normalized(other.num.scale(&c), other.den.clone()).in_context(params);
        }
        // cross-cancel before multiplying
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Ok(Scalar::normalized(
            a.mul(&c).with_params(params),
            b.mul(&d).with_params(params),
        ))
    }

    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&other.recip()?)
    }

    fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// `self^e` for a signed exponent.
    pub fn powi(&self, e: i32) -> Result<Scalar, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.recip()?.pow(e.unsigned_abs()))
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero().in_context(self.params()).expect("empty joins");
        }
        Scalar::normalized(self.num.scale(c), self.den.clone())
    }

    /// Evaluate at a full assignment of the occurring parameters.
    pub fn eval(&self, assignment: &[(Param, Rational)]) -> Result<Rational, ScalarError> {
        let mut point: [Option<Rational>; NUM_PARAMS] = Default::default();
        for (p, v) in assignment {
            point[p.index()] = Some(v.clone());
        }
        let d = self.den.eval(&point)?;
        if d.is_zero() {
            return Err(ScalarError::EvaluationPole);
        }
        Ok(self.num.eval(&point)? / d)
    }

    /// Substitute a rational for one parameter, keeping the context.
    pub fn substitute(&self, p: Param, value: &Rational) -> Result<Scalar, ScalarError> {
        if !self.involves(p) {
            return Ok(self.clone());
        }
        let den = self.den.substitute(p, value);
        if den.is_zero() {
            return Err(ScalarError::EvaluationPole);
        }
        Scalar::from_fraction(self.num.substitute(p, value), den)
    }

    /// Substitute several parameters in turn.
    pub fn substitute_all(&self, assignment: &[(Param, Rational)]) -> Result<Scalar, ScalarError> {
        let mut out = self.clone();
        for (p, v) in assignment {
            out = out.substitute(*p, v)?;
        }
        Ok(out)
    }

    /// Coefficients of `self` as a polynomial in `p` over the other parameters.
    ///
    /// Fails if the denominator involves `p`.
    pub fn coefficients_in(&self, p: Param) -> Result<Vec<Scalar>, ScalarError> {
        if self.den.involves(p) {
            return Err(ScalarError::NotPolynomialIn(p));
        }
        self.num
            .coefficients_in(p)
            .into_iter()
            .map(|c| Scalar::from_fraction(c, self.den.clone()))
            .collect()
    }

    /// Degree in `p` if `self` is a polynomial in `p` over the other parameters.
    pub fn degree_in(&self, p: Param) -> Result<u16, ScalarError> {
        if self.den.involves(p) {
            return Err(ScalarError::NotPolynomialIn(p));
        }
        Ok(self.num.degree_in(p))
    }

    /// Canonical string: integer-coefficient expanded numerator and
    /// denominator with terms in graded order, e.g. `(1 - t)/(1 - q)`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<Scalar, ScalarError> {
        super::parse::parse_scalar(s, None)
    }

    /// Parse within a declared context; unknown symbols are rejected.
    pub fn parse_in(s: &str, params: ParamSet) -> Result<Scalar, ScalarError> {
        super::parse::parse_scalar(s, Some(params))
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
        items.into_iter().fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_integer::Integer;
        // one factor making every coefficient of both parts an integer with
        // overall content 1
        let (ln, gn) = self.num.integer_scale();
        let (ld, gd) = self.den.integer_scale();
        let l = ln.lcm(&ld);
        let g = gn.gcd(&gd);
        let factor = Rational::new(l, if g.is_zero() { BigInt::one() } else { g });
        let mut num = String::new();
        self.num.fmt_scaled(&factor, &mut num)?;
        let scaled_den = self.den.scale(&factor);
        if scaled_den.is_one() {
            return f.write_str(&num);
        }
        let mut den = String::new();
        self.den.fmt_scaled(&factor, &mut den)?;
        if self.num.len() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        if den.contains([' ', '*']) {
            write!(f, "/({den})")
        } else {
            write!(f, "/{den}")
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Scalar {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl Default for Scalar {
    fn default() -> Scalar {
        Scalar::zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            /// Panics on mixed contexts (and division by zero); use the
            /// `checked_*` variant to get an error value instead.
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
