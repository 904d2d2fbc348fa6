//! Weight generating functions and their parameter bindings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Partition;
use crate::scalar::{Param, ParamSet, Rational, Scalar, ScalarError, ZSeries};
use crate::symfun::{weighted_power_sum_series, SymFunError};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownKind(String),
    #[error("family {kind} has no parameter {param}")]
    InactiveParam { kind: FamilyKind, param: Param },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
}

/// The generating function `Π_i W(z c_i)`; each kind fixes `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `(tz; q)_∞ / (z; q)_∞`.
    Macdonald,
    /// `(-z; q)_∞`.
    Elementary,
    /// `1 / (z; q)_∞`.
    Complete,
    /// `(1 - tz) / (1 - z)`.
    HallLittlewood,
    /// `(1 - z)^{-1/α}`.
    Jack,
    /// `1 / (1 - z)`, the `q = t` case.
    Classical,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Macdonald,
        FamilyKind::Elementary,
        FamilyKind::Complete,
        FamilyKind::HallLittlewood,
        FamilyKind::Jack,
        FamilyKind::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Macdonald => "macdonald",
            FamilyKind::Elementary => "elementary",
            FamilyKind::Complete => "complete",
            FamilyKind::HallLittlewood => "hall_littlewood",
            FamilyKind::Jack => "jack",
            FamilyKind::Classical => "classical",
        }
    }

    pub fn params(self) -> &'static [Param] {
        match self {
            FamilyKind::Macdonald => &[Param::Q, Param::T],
            FamilyKind::Elementary | FamilyKind::Complete => &[Param::Q],
            FamilyKind::HallLittlewood => &[Param::T],
            FamilyKind::Jack => &[Param::Alpha],
            FamilyKind::Classical => &[],
        }
    }

    /// Whether `t` marks the class-I colength in geometric sums.
    pub fn has_t(self) -> bool {
        matches!(self, FamilyKind::Macdonald | FamilyKind::HallLittlewood)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<FamilyKind, FamilyError> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .or(match key.as_str() {
                "e" => Some(FamilyKind::Elementary),
                "h" => Some(FamilyKind::Complete),
                "hl" => Some(FamilyKind::HallLittlewood),
                _ => None,
            })
            .ok_or_else(|| FamilyError::UnknownKind(s.to_string()))
    }
}

/// A weight family with its finite parameter list `c` and bound `q, t, α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFamily {
    kind: FamilyKind,
    c: Vec<Rational>,
    context: ParamSet,
    q: Scalar,
    t: Scalar,
    alpha: Scalar,
}

#[derive(Serialize)]
struct FamilyJson<'a> {
    kind: FamilyKind,
    c: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    bindings: Vec<(&'a str, String)>,
}

impl Serialize for WeightFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let bindings = self
            .kind
            .params()
            .iter()
            .filter_map(|&p| {
                let v = self.param(p);
                v.constant_value().map(|r| (p.symbol(), r.to_string()))
            })
            .collect();
        FamilyJson {
            kind: self.kind,
            c: self.c.iter().map(ToString::to_string).collect(),
            bindings,
        }
        .serialize(s)
    }
}

impl WeightFamily {
    /// All active parameters symbolic.
    pub fn new(kind: FamilyKind, c: Vec<Rational>) -> WeightFamily {
        let context = ParamSet::of(kind.params());
        let var = |p: Param| {
            if context.contains(p) {
                context.var(p).expect("param in context")
            } else {
                Scalar::zero()
            }
        };
        let alpha = if kind == FamilyKind::Jack {
            var(Param::Alpha)
        } else {
            Scalar::one()
        };
        WeightFamily {
            kind,
            c,
            context,
            q: var(Param::Q),
            t: var(Param::T),
            alpha,
        }
    }

    /// Replace an active parameter by a rational value.
    pub fn bind(mut self, p: Param, value: Rational) -> Result<WeightFamily, FamilyError> {
        if !self.kind.params().contains(&p) {
            return Err(FamilyError::InactiveParam {
                kind: self.kind,
                param: p,
            });
        }
        let v = Scalar::from_rational(value);
        match p {
            Param::Q => self.q = v,
            Param::T => self.t = v,
            Param::Alpha => self.alpha = v,
            Param::U => unreachable!("no family uses u"),
        }
        Ok(self)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn context(&self) -> ParamSet {
        self.context
    }

    pub fn param(&self, p: Param) -> &Scalar {
        match p {
            Param::Q => &self.q,
            Param::T => &self.t,
            Param::Alpha => &self.alpha,
            Param::U => panic!("no family uses u"),
        }
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    /// Whether `t` is still a free symbol.
    pub fn t_symbolic(&self) -> bool {
        self.kind.has_t() && !self.t.is_constant()
    }

    /// `w(k)` with `log W(z) = Σ_k w(k) z^k / k`.
    pub fn part_weight(&self, k: usize) -> Scalar {
        let k32 = k as u32;
        let one = Scalar::one();
        match self.kind {
            FamilyKind::Macdonald => (&one - self.t.pow(k32)) / (&one - self.q.pow(k32)),
            FamilyKind::Elementary => {
                let sign = Scalar::from_int(if k % 2 == 1 { 1 } else { -1 });
                sign / (&one - self.q.pow(k32))
            }
            FamilyKind::Complete => one.clone() / (&one - self.q.pow(k32)),
            FamilyKind::HallLittlewood => &one - self.t.pow(k32),
            FamilyKind::Jack => self.alpha.recip().expect("α is nonzero"),
            FamilyKind::Classical => one,
        }
    }

    /// `Σ_j w_j z^j` up to `z^order`.
    pub fn series(&self, order: usize) -> Result<ZSeries, FamilyError> {
        Ok(weighted_power_sum_series(&self.c, order, |k| self.part_weight(k))?)
    }

    /// `w_λ = Π_i w_{λ_i}`, the weight of a path of signature `λ`.
    pub fn path_weight(&self, lambda: &Partition) -> Result<Scalar, FamilyError> {
        let order = lambda.parts().first().copied().unwrap_or(0);
        let s = self.series(order)?;
        Ok(lambda
            .parts()
            .iter()
            .fold(Scalar::one(), |acc, &k| acc * s.coeff(k)))
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.c.iter().map(ToString::to_string).collect();
        write!(f, "{}(c = [{}])", self.kind, c.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::symfun::{generalized_binomial, SymmetricAlgebra};

    fn series_product(order: usize, factors: Vec<ZSeries>) -> ZSeries {
        ZSeries::mul_many(order, &factors).unwrap()
    }

    /// `Π_{k<K} (1 + q^k c z)` truncated in `z`, exact as polynomials in `q`
    /// once `K > order` is irrelevant: the `z^j` coefficient is
    /// `q^{j(j-1)/2} c^j / (q;q)_j`.
    fn elementary_oracle(c: &[Rational], q: &Scalar, order: usize) -> ZSeries {
        let one = Scalar::one();
        let factors = c
            .iter()
            .map(|ci| {
                let mut coeffs = Vec::new();
                let mut qpoch = Scalar::one();
                for j in 0..=order {
                    if j > 0 {
                        qpoch = qpoch * (&one - q.pow(j as u32));
                    }
                    let num = q.pow((j * j.saturating_sub(1) / 2) as u32)
                        .scale(&num_traits::pow(ci.clone(), j));
                    coeffs.push(num / &qpoch);
                }
                ZSeries::new(order, coeffs)
            })
            .collect();
        series_product(order, factors)
    }

    fn complete_oracle(c: &[Rational], q: &Scalar, order: usize) -> ZSeries {
        let one = Scalar::one();
        let factors = c
            .iter()
            .map(|ci| {
                let mut coeffs = Vec::new();
                let mut qpoch = Scalar::one();
                for j in 0..=order {
                    if j > 0 {
                        qpoch = qpoch * (&one - q.pow(j as u32));
                    }
                    coeffs.push(Scalar::from_rational(num_traits::pow(ci.clone(), j)) / &qpoch);
                }
                ZSeries::new(order, coeffs)
            })
            .collect();
        series_product(order, factors)
    }

    #[test]
    fn empty_parameter_list_gives_one() {
        for kind in FamilyKind::ALL {
            assert!(WeightFamily::new(kind, vec![]).series(4).unwrap().is_constant_one());
        }
    }

    #[test]
    fn macdonald_first_coefficient() {
        let f = WeightFamily::new(FamilyKind::Macdonald, vec![int(1)]);
        let one = Scalar::one();
        assert_eq!(f.series(1).unwrap().coeff(1), &((&one - f.t()) / (&one - f.q())));
        let alg = SymmetricAlgebra::new(f.q().clone(), f.t().clone(), Scalar::one()).unwrap();
        let c = vec![int(1), ratio(1, 2)];
        let g = WeightFamily::new(FamilyKind::Macdonald, c.clone());
        assert_eq!(g.series(3).unwrap(), alg.g_j_series(&c, 3).unwrap());
    }

    #[test]
    fn q_product_oracles() {
        let c = vec![int(1), ratio(-2, 3)];
        let e = WeightFamily::new(FamilyKind::Elementary, c.clone());
        assert_eq!(e.series(4).unwrap(), elementary_oracle(&c, e.q(), 4));
        let h = WeightFamily::new(FamilyKind::Complete, c.clone());
        assert_eq!(h.series(4).unwrap(), complete_oracle(&c, h.q(), 4));
    }

    #[test]
    fn jack_binomial_oracle_and_alpha_one() {
        let c = vec![int(2), ratio(1, 2)];
        let j = WeightFamily::new(FamilyKind::Jack, c.clone());
        let a = -j.alpha().recip().unwrap();
        let factors = c
            .iter()
            .map(|ci| {
                ZSeries::new(
                    4,
                    (0..=4).map(|k| generalized_binomial(&a, k).scale(&num_traits::pow(-ci.clone(), k))),
                )
            })
            .collect();
        assert_eq!(j.series(4).unwrap(), series_product(4, factors));
        let j1 = j.bind(Param::Alpha, int(1)).unwrap();
        let classical = WeightFamily::new(FamilyKind::Classical, c);
        assert_eq!(j1.series(4).unwrap(), classical.series(4).unwrap());
    }

    #[test]
    fn specializations() {
        let c = vec![int(1), ratio(1, 3)];
        let mac = WeightFamily::new(FamilyKind::Macdonald, c.clone());
        let at_t0 = mac.clone().bind(Param::T, int(0)).unwrap();
        let complete = WeightFamily::new(FamilyKind::Complete, c.clone());
        assert_eq!(at_t0.series(3).unwrap(), complete.series(3).unwrap());
        let at_q0 = mac.bind(Param::Q, int(0)).unwrap();
        let hl = WeightFamily::new(FamilyKind::HallLittlewood, c.clone());
        assert_eq!(at_q0.series(3).unwrap(), hl.series(3).unwrap());
        let h_at_0 = complete.bind(Param::Q, int(0)).unwrap();
        let classical = WeightFamily::new(FamilyKind::Classical, c);
        assert_eq!(h_at_0.series(3).unwrap(), classical.series(3).unwrap());
    }

    #[test]
    fn binding_inactive_parameter_fails() {
        let hl = WeightFamily::new(FamilyKind::HallLittlewood, vec![int(1)]);
        assert!(hl.bind(Param::Q, int(0)).is_err());
        assert_eq!("hl".parse::<FamilyKind>().unwrap(), FamilyKind::HallLittlewood);
        assert!("nope".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn json_shape() {
        let f = WeightFamily::new(FamilyKind::Macdonald, vec![int(1), ratio(1, 2)]);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"kind":"macdonald","c":["1","1/2"]}"#
        );
        let b = f.bind(Param::Q, ratio(1, 3)).unwrap();
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"kind":"macdonald","c":["1","1/2"],"bindings":[["q","1/3"]]}"#
        );
    }
}
