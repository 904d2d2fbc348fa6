//! Integer partitions and the combinatorial data attached to them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;
use crate::scalar::{Param, ParamSet, Rational, Scalar};

/// Largest `n` accepted by [`enumerate_partitions`] unless a bound is given.
pub const DEFAULT_PARTITION_BOUND: usize = 12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    Invalid(Vec<usize>),
    #[error("partitions of different weight: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("n exceeds enumeration bound (n = {n}, bound {bound})")]
    OverBound { n: usize, bound: usize },
}

/// A weakly decreasing list of positive integers.
///
/// `Ord` follows the canonical table layout: by weight, then
/// reverse-lexicographically, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(parts));
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary positive parts into a partition; zeros are dropped.
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The identity class `(1^n)`.
    pub fn ones(n: usize) -> Partition {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_i` for each part size `i` that occurs.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_μ = Π i^{m_i} m_i!`, the centralizer order.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| {
                acc * num_traits::pow(BigInt::from(i), m) * factorial(m)
            })
    }

    pub fn z_rational(&self) -> Rational {
        Rational::from_integer(self.z())
    }

    /// `n_μ(q,t) = Π (1 - q^{μ_i}) / (1 - t^{μ_i})`.
    pub fn n_qt(&self, q: &Scalar, t: &Scalar) -> Scalar {
        self.0.iter().fold(Scalar::one(), |acc, &k| {
            let k = k as u32;
            acc * ((Scalar::one() - q.pow(k)) / (Scalar::one() - t.pow(k)))
        })
    }

    /// `z_μ(q,t) = z_μ n_μ(q,t)`.
    pub fn z_qt(&self, q: &Scalar, t: &Scalar) -> Scalar {
        self.n_qt(q, t).scale(&self.z_rational())
    }

    /// Size of the conjugacy class `n!/z_μ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.z()
    }

    /// Colength `ℓ*(μ) = |μ| - ℓ(μ)`.
    pub fn colength(&self) -> usize {
        self.weight() - self.len()
    }

    /// `|aut(λ)| = Π m_i!`.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_values()
            .fold(BigInt::one(), |acc, m| acc * factorial(m))
    }

    /// Cells `(i, j)`, 1-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (1..=row).map(move |j| (i + 1, j)))
    }

    /// Contents `j - i` of all cells, row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Hook product `h_λ = det(1/(λ_i - i + j)!)^{-1}`.
    pub fn hook_product(&self) -> BigInt {
        let l = self.len();
        if l == 0 {
            return BigInt::one();
        }
        let m: linalg::Matrix = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let k = self.0[i] as i64 - i as i64 + j as i64;
                        if k < 0 {
                            Rational::zero()
                        } else {
                            Rational::new(BigInt::one(), factorial(k as usize))
                        }
                    })
                    .collect()
            })
            .collect();
        let inv = linalg::determinant(&m).recip();
        debug_assert!(inv.is_integer());
        inv.to_integer()
    }

    /// `n!/h_λ`, the dimension of the irreducible representation.
    pub fn dimension(&self) -> BigInt {
        factorial(self.weight()) / self.hook_product()
    }

    /// Strict dominance `self < other`; errors on unequal weights.
    pub fn dominance_less(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.weight() != other.weight() {
            return Err(PartitionError::WeightMismatch(self.weight(), other.weight()));
        }
        Ok(self != other && self.dominated_by(other))
    }

    /// `self ≤ other` in dominance (equal weights assumed).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `(u)_λ = Π_{(i,j)} (u + j - i)` as a polynomial in `u`.
    pub fn pochhammer(&self) -> Scalar {
        let ctx = ParamSet::of(&[Param::U]);
        let u = ctx.var(Param::U).expect("u in context");
        self.contents().into_iter().fold(
            Scalar::one().in_context(ctx).expect("constant"),
            |acc, c| acc * (&u + &Scalar::from_int(c)),
        )
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n`, reverse-lexicographic, for `n ≤ 12`.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    enumerate_partitions_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn enumerate_partitions_bounded(
    n: usize,
    bound: usize,
) -> Result<Vec<Partition>, PartitionError> {
    if n > bound {
        return Err(PartitionError::OverBound { n, bound });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    Ok(out)
}

fn fill(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        cur.push(p);
        fill(rem - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` other than `(1^n)`, i.e. with colength at least 1.
pub fn nontrivial_classes(n: usize) -> Result<Vec<Partition>, PartitionError> {
    Ok(enumerate_partitions(n)?
        .into_iter()
        .filter(|p| p.colength() > 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Product of the cell hook lengths.
    fn cell_hook_product(l: &Partition) -> BigInt {
        let conj = l.conjugate();
        l.cells()
            .map(|(i, j)| {
                let arm = l.parts()[i - 1] - j;
                let leg = conj.parts()[j - 1] - i;
                BigInt::from(arm + leg + 1)
            })
            .product()
    }

    /// Standard Young tableaux counted by removing corners recursively.
    fn count_syt(l: &Partition) -> BigInt {
        if l.weight() <= 1 {
            return BigInt::one();
        }
        let parts = l.parts();
        let mut total = BigInt::zero();
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
            if is_corner {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                total += count_syt(&Partition::from_parts(smaller));
            }
        }
        total
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert!(matches!(
            enumerate_partitions(13),
            Err(PartitionError::OverBound { n: 13, bound: 12 })
        ));
    }

    #[test]
    fn enumeration_matches_brute_force_counts() {
        // count compositions sorted into partitions
        fn brute(n: usize) -> usize {
            let mut set = std::collections::BTreeSet::new();
            for mask in 0..(1u32 << n.saturating_sub(1)) {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n.saturating_sub(1) {
                    if mask & (1 << i) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                set.insert(Partition::from_parts(parts));
            }
            set.len()
        }
        for n in 1..=10 {
            assert_eq!(enumerate_partitions(n).unwrap().len(), brute(n), "n = {n}");
        }
    }

    #[test]
    fn canonical_order_matches_enumeration() {
        let mut v = enumerate_partitions(6).unwrap();
        let e = v.clone();
        v.reverse();
        v.sort();
        assert_eq!(v, e);
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1]).dominance_less(&p(&[2, 1])).unwrap());
        assert!(p(&[2, 2]).dominance_less(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1, 1, 1]).dominance_less(&p(&[2, 2, 2])).unwrap());
        assert!(!p(&[2, 2, 2]).dominance_less(&p(&[3, 1, 1, 1])).unwrap());
        assert!(p(&[2]).dominance_less(&p(&[2, 1])).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let ps = enumerate_partitions(n).unwrap();
            for a in &ps {
                assert!(a.dominated_by(a));
                for b in &ps {
                    if a != b && a.dominated_by(b) {
                        assert!(!b.dominated_by(a));
                    }
                    for c in &ps {
                        if a.dominated_by(b) && b.dominated_by(c) {
                            assert!(a.dominated_by(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        for n in 0..=8 {
            let total: BigInt = enumerate_partitions(n)
                .unwrap()
                .iter()
                .map(Partition::class_size)
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn z_qt_values_and_classical_limit() {
        let ctx = ParamSet::of(&[Param::Q, Param::T]);
        let q = ctx.var(Param::Q).unwrap();
        let t = ctx.var(Param::T).unwrap();
        let one = Scalar::one();
        let expected = (&one - q.pow(2)) / (&one - t.pow(2)) * Scalar::from_int(2);
        assert_eq!(p(&[2]).z_qt(&q, &t), expected);
        for mu in enumerate_partitions(5).unwrap() {
            let v = mu.z_qt(&q, &q);
            assert_eq!(v.constant_value(), Some(mu.z_rational()));
        }
    }

    #[test]
    fn contents_colength_aut() {
        let mut c = p(&[2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
        assert_eq!(p(&[2, 1]).colength(), 1);
        assert_eq!(p(&[2, 2, 1]).aut_order(), BigInt::from(2));
        assert_eq!(Partition::ones(4).colength(), 0);
    }

    #[test]
    fn hook_product_determinant_matches_cells_and_tableaux() {
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        for n in 0..=7 {
            for l in enumerate_partitions(n).unwrap() {
                let h = l.hook_product();
                assert_eq!(h, cell_hook_product(&l), "{l}");
                assert_eq!(&h * count_syt(&l), factorial(n), "{l}");
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        let ctx = ParamSet::of(&[Param::U]);
        let u = ctx.var(Param::U).unwrap();
        let one = Scalar::one();
        assert!(Partition::empty().pochhammer().is_one());
        assert_eq!(p(&[2, 1]).pochhammer(), &u * (&u + &one) * (&u - &one));
        assert_eq!(p(&[1, 1]).pochhammer(), &u * (&u - &one));
        let v = p(&[3, 2]).pochhammer();
        assert_eq!(v.degree_in(Param::U).unwrap(), 5);
        assert_eq!(v.eval(&[(Param::U, int(1))]).unwrap(), int(0));
    }

    #[test]
    fn rejects_invalid_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let json: Result<Partition, _> = serde_json::from_str("[1,3]");
        assert!(json.is_err());
        let ok: Partition = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[2,1]");
    }
}
