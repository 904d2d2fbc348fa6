//! Content products `r_λ(N)` and coefficient tables of the hypergeometric
//! τ-function `Σ_λ r_λ(N) s_λ s_λ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::characters::{char_table, CharacterError};
use crate::family::{FamilyError, WeightFamily};
use crate::partition::{enumerate_partitions, Partition, PartitionError};
use crate::scalar::{Rational, Scalar, ScalarError, ZSeries};
use crate::table::latex_scalar;

/// Largest `n` for τ tables.
pub const TAU_N_BOUND: usize = 8;
/// Largest series order for τ tables.
pub const TAU_D_BOUND: usize = 8;

#[derive(Debug, Error)]
pub enum TauError {
    #[error("n exceeds enumeration bound (n = {n}, bound {bound})")]
    NOverBound { n: usize, bound: usize },
    #[error("d exceeds enumeration bound (d = {d}, bound {bound})")]
    DOverBound { d: usize, bound: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// `Π_i W(z c_i) = Σ_j w_j z^j` up to `z^order`.
pub fn weight_series(family: &WeightFamily, order: usize) -> Result<ZSeries, TauError> {
    Ok(family.series(order)?)
}

/// `r_λ(N)` as a series in `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContentProductSeries {
    pub lambda: Partition,
    #[serde(rename = "N")]
    pub shift: i64,
    pub series: ZSeries,
}

fn scaled(w: &ZSeries, k: i64) -> Result<ZSeries, ScalarError> {
    w.scale_argument(&Scalar::from_int(k))
}

/// `r_0(N)`: `Π_{j=1}^{N-1} W((N-j) z)` for `N ≥ 1`, `1` at `N = 0`, and
/// `Π_{j=1}^{M} W((j-M) z)^{-1}` at `N = -M`.
pub fn r_zero(w: &ZSeries, shift: i64) -> Result<ZSeries, TauError> {
    let order = w.order();
    let factors: Vec<ZSeries> = if shift >= 1 {
        (1..shift).map(|j| scaled(w, shift - j)).collect::<Result<_, _>>()?
    } else {
        let m = -shift;
        (1..=m)
            .map(|j| scaled(w, j - m).and_then(|s| s.inverse()))
            .collect::<Result<_, _>>()?
    };
    Ok(ZSeries::mul_many(order, &factors)?)
}

fn r_lambda_from(w: &ZSeries, lambda: &Partition, shift: i64) -> Result<ZSeries, TauError> {
    let mut out = r_zero(w, shift)?;
    for c in lambda.contents() {
        let k = shift + c;
        if k != 0 {
            out = out.mul(&scaled(w, k)?)?;
        }
    }
    Ok(out)
}

/// `r_λ(N) = r_0(N) Π_{(i,j)∈λ} W(z (N + j - i))`.
pub fn r_lambda(
    lambda: &Partition,
    shift: i64,
    family: &WeightFamily,
    order: usize,
) -> Result<ContentProductSeries, TauError> {
    let w = weight_series(family, order)?;
    Ok(ContentProductSeries {
        lambda: lambda.clone(),
        shift,
        series: r_lambda_from(&w, lambda, shift)?,
    })
}

/// Coefficients of `τ(N)` in the Schur and power-sum bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTable {
    pub shift: i64,
    pub n_max: usize,
    pub d_max: usize,
    pub family: WeightFamily,
    /// `λ ↦ r_λ(N)`, for `|λ| ≤ n_max`.
    pub schur: BTreeMap<Partition, ZSeries>,
    /// `(d, μ, ν) ↦ [z^d]` coefficient of `p_μ p_ν`.
    pub powersum: BTreeMap<(usize, Partition, Partition), Scalar>,
}

/// `[z^d]` coefficient of `p_μ p_ν`: `(z_μ z_ν)^{-1} Σ_λ χ_λ(μ) χ_λ(ν) [z^d] r_λ`.
pub fn schur_to_powersum(
    n: usize,
    d: usize,
    schur: &BTreeMap<Partition, ZSeries>,
) -> Result<BTreeMap<(Partition, Partition), Scalar>, TauError> {
    let table = char_table(n)?;
    let mut out = BTreeMap::new();
    for mu in &table.irreps {
        for nu in &table.irreps {
            let mut acc = Scalar::zero();
            for lambda in &table.irreps {
                let chi = table.value(lambda, mu) * table.value(lambda, nu);
                if chi != 0 {
                    let r = schur[lambda].coeff(d);
                    acc = acc.checked_add(&r.scale(&Rational::from_integer(BigInt::from(chi))))?;
                }
            }
            let norm = Rational::new(1.into(), mu.z() * nu.z());
            out.insert((mu.clone(), nu.clone()), acc.scale(&norm));
        }
    }
    Ok(out)
}

/// Inverse transform: `[z^d] r_λ = Σ_{μ,ν} χ_λ(μ) χ_λ(ν) F^d(μ,ν)`.
pub fn powersum_to_schur(
    n: usize,
    d: usize,
    powersum: &BTreeMap<(usize, Partition, Partition), Scalar>,
) -> Result<BTreeMap<Partition, Scalar>, TauError> {
    let table = char_table(n)?;
    let mut out = BTreeMap::new();
    for lambda in &table.irreps {
        let mut acc = Scalar::zero();
        for mu in &table.irreps {
            for nu in &table.irreps {
                let chi = table.value(lambda, mu) * table.value(lambda, nu);
                if let Some(v) = powersum.get(&(d, mu.clone(), nu.clone())) {
                    acc = acc.checked_add(&v.scale(&Rational::from_integer(BigInt::from(chi))))?;
                }
            }
        }
        out.insert(lambda.clone(), acc);
    }
    Ok(out)
}

pub fn tau_tables(
    n_max: usize,
    d_max: usize,
    shift: i64,
    family: &WeightFamily,
) -> Result<TauTable, TauError> {
    if n_max > TAU_N_BOUND {
        return Err(TauError::NOverBound {
            n: n_max,
            bound: TAU_N_BOUND,
        });
    }
    if d_max > TAU_D_BOUND {
        return Err(TauError::DOverBound {
            d: d_max,
            bound: TAU_D_BOUND,
        });
    }
    let w = weight_series(family, d_max)?;
    let lambdas: Vec<Partition> = (0..=n_max)
        .map(enumerate_partitions)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let schur: BTreeMap<Partition, ZSeries> = lambdas
        .par_iter()
        .map(|l| Ok((l.clone(), r_lambda_from(&w, l, shift)?)))
        .collect::<Result<_, TauError>>()?;
    let slices: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=d_max).map(move |d| (n, d)))
        .collect();
    let parts = slices
        .par_iter()
        .map(|&(n, d)| {
            let by_n: BTreeMap<Partition, ZSeries> = schur
                .iter()
                .filter(|(l, _)| l.weight() == n)
                .map(|(l, s)| (l.clone(), s.clone()))
                .collect();
            Ok((d, schur_to_powersum(n, d, &by_n)?))
        })
        .collect::<Result<Vec<_>, TauError>>()?;
    let mut powersum = BTreeMap::new();
    for (d, part) in parts {
        for ((mu, nu), v) in part {
            powersum.insert((d, mu, nu), v);
        }
    }
    Ok(TauTable {
        shift,
        n_max,
        d_max,
        family: family.clone(),
        schur,
        powersum,
    })
}

#[derive(Serialize)]
struct SchurRow<'a> {
    lambda: &'a Partition,
    coeffs: &'a [Scalar],
}

#[derive(Serialize)]
struct PowerSumRow<'a> {
    d: usize,
    mu: &'a Partition,
    nu: &'a Partition,
    value: &'a Scalar,
}

impl Serialize for TauTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let schur: Vec<SchurRow> = self
            .schur
            .iter()
            .map(|(lambda, series)| SchurRow {
                lambda,
                coeffs: series.coeffs(),
            })
            .collect();
        let powersum: Vec<PowerSumRow> = self
            .powersum
            .iter()
            .map(|((d, mu, nu), value)| PowerSumRow { d: *d, mu, nu, value })
            .collect();
        let mut st = s.serialize_struct("TauTable", 6)?;
        st.serialize_field("N", &self.shift)?;
        st.serialize_field("n_max", &self.n_max)?;
        st.serialize_field("d_max", &self.d_max)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("schur", &schur)?;
        st.serialize_field("powersum", &powersum)?;
        st.end()
    }
}

impl TauTable {
    /// The `d` slice of the power-sum table restricted to `μ, ν ⊢ n`.
    pub fn powersum_slice(&self, n: usize, d: usize) -> BTreeMap<(Partition, Partition), Scalar> {
        self.powersum
            .iter()
            .filter(|((dd, mu, _), _)| *dd == d && mu.weight() == n)
            .map(|((_, mu, nu), v)| ((mu.clone(), nu.clone()), v.clone()))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["section", "d", "lambda_or_mu", "nu", "value"])
            .expect("in-memory write");
        for (lambda, series) in &self.schur {
            for (d, c) in series.coeffs().iter().enumerate() {
                w.write_record(["schur", &d.to_string(), &lambda.to_string(), "", &c.to_string()])
                    .expect("in-memory write");
            }
        }
        for ((d, mu, nu), v) in &self.powersum {
            w.write_record(["powersum", &d.to_string(), &mu.to_string(), &nu.to_string(), &v.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Schur section as a tabular: rows `λ`, columns `z^d`.
    pub fn to_latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{c|{}}}\n$\\lambda$", "c".repeat(self.d_max + 1));
        for d in 0..=self.d_max {
            out.push_str(&format!(" & $z^{{{d}}}$"));
        }
        out.push_str(" \\\\\n\\hline\n");
        for (lambda, series) in &self.schur {
            out.push_str(&format!("${lambda}$"));
            for c in series.coeffs() {
                out.push_str(&format!(" & ${}$", latex_scalar(c)));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyKind;
    use crate::scalar::{int, ratio, Param};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mac(c: Vec<Rational>) -> WeightFamily {
        WeightFamily::new(FamilyKind::Macdonald, c)
    }

    #[test]
    fn weight_series_examples() {
        assert!(weight_series(&mac(vec![]), 3).unwrap().is_constant_one());
        let f = mac(vec![int(1)]);
        let one = Scalar::one();
        assert_eq!(
            weight_series(&f, 2).unwrap().coeff(1),
            &((&one - f.t()) / (&one - f.q()))
        );
    }

    #[test]
    fn content_product_examples() {
        let f = mac(vec![int(1)]);
        let w = weight_series(&f, 3).unwrap();
        assert!(r_lambda(&p(&[1]), 0, &f, 3).unwrap().series.is_constant_one());
        assert_eq!(r_lambda(&p(&[2]), 0, &f, 3).unwrap().series, w);
        assert!(r_zero(&w, 0).unwrap().is_constant_one());
        assert!(r_zero(&w, 1).unwrap().is_constant_one());
        assert_eq!(r_zero(&w, 2).unwrap(), w);
        let w2 = w.scale_argument(&Scalar::from_int(-1)).unwrap().inverse().unwrap();
        assert_eq!(r_zero(&w, -2).unwrap(), w2);
    }

    #[test]
    fn shift_by_one_moves_contents() {
        let f = mac(vec![int(1), ratio(1, 2)]).bind(Param::Q, ratio(1, 3)).unwrap();
        for lambda in enumerate_partitions(3).unwrap() {
            let at1 = r_lambda(&lambda, 1, &f, 3).unwrap().series;
            let w = weight_series(&f, 3).unwrap();
            let mut direct = ZSeries::one(3);
            for c in lambda.contents() {
                direct = direct.mul(&w.scale_argument(&Scalar::from_int(1 + c)).unwrap()).unwrap();
            }
            assert_eq!(at1, direct);
        }
    }

    #[test]
    fn tables_trivial_family_and_round_trip() {
        let t = tau_tables(3, 2, 0, &mac(vec![])).unwrap();
        for ((d, mu, nu), v) in &t.powersum {
            let expected = if *d == 0 && mu == nu {
                Scalar::from_rational(mu.z_rational().recip())
            } else {
                Scalar::zero()
            };
            assert_eq!(v, &expected, "d={d} {mu} {nu}");
        }
        let f = mac(vec![int(1), ratio(1, 2)]);
        let t = tau_tables(3, 2, 0, &f).unwrap();
        for n in 0..=3 {
            for d in 0..=2 {
                let back = powersum_to_schur(n, d, &t.powersum).unwrap();
                for (lambda, v) in back {
                    assert_eq!(&v, t.schur[&lambda].coeff(d));
                }
            }
        }
        for s in t.schur.values() {
            assert!(s.coeff(0).is_one());
        }
    }

    #[test]
    fn exports_are_stable() {
        let t = tau_tables(1, 1, 0, &mac(vec![int(1)])).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"N":0,"n_max":1,"d_max":1,"family":{"kind":"macdonald","c":["1"]},"schur":[{"lambda":[],"coeffs":["1","0"]}"#));
        assert_eq!(json, serde_json::to_string(&tau_tables(1, 1, 0, &mac(vec![int(1)])).unwrap()).unwrap());
        assert!(t.to_csv().starts_with("section,d,lambda_or_mu,nu,value\nschur,0,[],,1\n"));
        assert!(t.to_latex().contains("$[1]$ & $1$ & $0$"));
    }
}
