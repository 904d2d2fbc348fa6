use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Param, ParamSet, Rational, ScalarError, NUM_PARAMS};

/// Exponent vector over the fixed parameter slots (q, t, α, u).
///
/// Ordered by total degree first, then by descending lexicographic order of
/// the exponents, so `1 < q < t < q^2 < q*t < t^2`. This is both the display
/// order of terms and a monomial order (the last term is the leading one).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; NUM_PARAMS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_PARAMS]);

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, p: Param) -> u16 {
        self.0[p.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0) {
            *o += e;
        }
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0; NUM_PARAMS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *o = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    pub fn with_exp(mut self, p: Param, e: u16) -> Monomial {
        self.0[p.index()] = e;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// No zero coefficient is ever stored. Exponents of parameters outside the
/// declared context are always zero.
#[derive(Clone, Debug)]
pub struct Poly {
    params: ParamSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Poly {
    pub fn zero(params: ParamSet) -> Poly {
        Poly {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: ParamSet, c: Rational) -> Poly {
        let mut p = Poly::zero(params);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(params: ParamSet) -> Poly {
        Poly::constant(params, Rational::one())
    }

    pub fn var(params: ParamSet, p: Param) -> Poly {
        Poly::term(params, Monomial::ONE.with_exp(p, 1), Rational::one())
    }

    pub fn term(params: ParamSet, m: Monomial, c: Rational) -> Poly {
        let mut p = Poly::zero(params);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        params: ParamSet,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Poly {
        let mut p = Poly::zero(params);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn params(&self) -> ParamSet {
        self.params
    }

    pub(crate) fn with_params(mut self, params: ParamSet) -> Poly {
        self.params = params;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Lowest term in display order.
    pub fn first_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Leading term for the graded monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms.keys().map(|m| m.exp(p)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn involves(&self, p: Param) -> bool {
        self.terms.keys().any(|m| m.exp(p) > 0)
    }

    /// Parameters that actually occur with positive exponent.
    pub fn occurring(&self) -> Vec<Param> {
        Param::ALL
            .into_iter()
            .filter(|p| self.involves(*p))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out.params = self.params.join(other.params).unwrap_or(self.params);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out.params = self.params.join(other.params).unwrap_or(self.params);
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            params: self.params,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let params = self.params.join(other.params).unwrap_or(self.params);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(params);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c).with_params(params);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c).with_params(params);
        }
        let mut out = Poly::zero(params);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.params);
        }
        Poly {
            params: self.params,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.params);
        }
        Poly {
            params: self.params,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.params);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.params);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.div(&lm)?;
            let qc = rc * &lc_inv;
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Evaluate at an assignment indexed by parameter slot.
    pub fn eval(&self, point: &[Option<Rational>; NUM_PARAMS]) -> Result<Rational, ScalarError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for p in Param::ALL {
                let e = m.exp(p);
                if e == 0 {
                    continue;
                }
                let x = point[p.index()].as_ref().ok_or(ScalarError::Unbound(p))?;
                v *= num_traits::pow(x.clone(), e as usize);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitute a rational value for one parameter.
    pub fn substitute(&self, p: Param, value: &Rational) -> Poly {
        let mut out = Poly::zero(self.params);
        for (m, c) in &self.terms {
            let e = m.exp(p);
            let coeff = if e == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), e as usize)
            };
            out.add_term(m.with_exp(p, 0), coeff);
        }
        out
    }

    /// Split into coefficients of powers of `p`: `self = Σ_k out[k] p^k`.
    pub fn coefficients_in(&self, p: Param) -> Vec<Poly> {
        let deg = self.degree_in(p) as usize;
        let mut out = vec![Poly::zero(self.params); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            out[m.exp(p) as usize].add_term(m.with_exp(p, 0), c.clone());
        }
        out
    }

    /// Least common multiple of coefficient denominators over gcd of numerators.
    pub(crate) fn integer_scale(&self) -> (BigInt, BigInt) {
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        (l, g)
    }

    /// Write with integer coefficients after scaling by `factor`.
    pub(crate) fn fmt_scaled(&self, factor: &Rational, f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let c = c * factor;
            debug_assert!(c.is_integer());
            let neg = c.is_negative();
            let abs = c.numer().abs();
            if i == 0 {
                if neg {
                    f.write_char('-')?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
                continue;
            }
            let mut first = true;
            if !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for p in Param::ALL {
                let e = m.exp(p);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_char('*')?;
                }
                first = false;
                f.write_str(p.symbol())?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, g) = self.integer_scale();
        let factor = if g.is_zero() {
            Rational::one()
        } else {
            Rational::new(l, BigInt::one())
        };
        let mut s = String::new();
        self.fmt_scaled(&factor, &mut s)?;
        if factor.is_one() {
            f.write_str(&s)
        } else {
            write!(f, "({s})/{}", factor)
        }
    }
}
