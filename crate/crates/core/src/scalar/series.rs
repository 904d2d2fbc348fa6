use serde::{Deserialize, Serialize};

use super::{Scalar, ScalarError};

/// Power series in the bookkeeping variable `z`, truncated at `order`.
///
/// Holds exactly `order + 1` coefficients; nothing beyond `z^order` is ever
/// computed or read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSeries {
    order: usize,
    coeffs: Vec<Scalar>,
}

impl ZSeries {
    /// Build from leading coefficients, padding with zeros or truncating.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = Scalar>) -> ZSeries {
        let mut coeffs: Vec<Scalar> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Scalar::zero());
        ZSeries { order, coeffs }
    }

    pub fn one(order: usize) -> ZSeries {
        ZSeries::new(order, [Scalar::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    fn check_order(&self, other: &ZSeries) -> Result<(), ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &ZSeries) -> Result<ZSeries, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ZSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &ZSeries) -> Result<ZSeries, ScalarError> {
        self.check_order(other)?;
        let mut coeffs = vec![Scalar::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(ZSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Product of several series of the same order; the empty product is 1.
    pub fn mul_many<'a>(
        order: usize,
        factors: impl IntoIterator<Item = &'a ZSeries>,
    ) -> Result<ZSeries, ScalarError> {
        factors
            .into_iter()
            .try_fold(ZSeries::one(order), |acc, f| acc.mul(f))
    }

    /// Substitute `z -> factor * z`: the `z^k` coefficient picks up `factor^k`.
    pub fn scale_argument(&self, factor: &Scalar) -> Result<ZSeries, ScalarError> {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        let mut power = Scalar::one();
        for c in &self.coeffs {
            coeffs.push(c.checked_mul(&power)?);
            power = power.checked_mul(factor)?;
        }
        Ok(ZSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<ZSeries, ScalarError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(ScalarError::NotInvertible);
        }
        let inv0 = c0.recip()?;
        let mut out: Vec<Scalar> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let mut acc = Scalar::zero();
            for j in 1..=k {
                acc = acc.checked_add(&self.coeffs[j].checked_mul(&out[k - j])?)?;
            }
            out.push(-(acc.checked_mul(&inv0)?));
        }
        Ok(ZSeries {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn is_constant_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Scalar::is_zero)
    }
}
