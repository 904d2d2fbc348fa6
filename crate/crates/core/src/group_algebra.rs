//! The group algebra of `S_n` for small `n`: explicit elements, the center in
//! the class-sum and idempotent bases, Jucys–Murphy elements, and transposition
//! path counts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::characters::{char_table, CharacterError};
use crate::family::{FamilyError, WeightFamily};
use crate::partition::{enumerate_partitions, factorial, Partition, PartitionError};
use crate::scalar::{Rational, Scalar, ScalarError};
use crate::symfun::{power_sum, Basis, SymFunError, SymmetricAlgebra, SymmetricFunction};
use crate::table::ClassTable;

/// Largest `n` for explicit group-algebra elements.
pub const GROUP_ALGEBRA_BOUND: usize = 6;
/// Largest `n` for transposition path enumeration.
pub const PATH_N_BOUND: usize = 6;
/// Largest number of steps for transposition path enumeration.
pub const PATH_D_BOUND: usize = 5;

#[derive(Debug, Error)]
pub enum GroupAlgebraError {
    #[error("n exceeds enumeration bound (n = {n}, bound {bound})")]
    NOverBound { n: usize, bound: usize },
    #[error("d exceeds enumeration bound (d = {d}, bound {bound})")]
    DOverBound { d: usize, bound: usize },
    #[error("elements of different groups: S_{0} vs S_{1}")]
    RankMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("partition {0} is not a class of S_{1}")]
    WrongWeight(Partition, usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

type Result<T> = std::result::Result<T, GroupAlgebraError>;

fn check_n(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(GroupAlgebraError::NOverBound { n, bound });
    }
    Ok(())
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// From 1-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] || n > u8::MAX as usize {
                return Err(GroupAlgebraError::InvalidPermutation(images));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images.iter().map(|&i| (i - 1) as u8).collect()))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    /// The transposition `(a b)`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// The permutation with consecutive cycles of the given lengths.
    pub fn class_representative(mu: &Partition) -> Permutation {
        let mut images = Vec::with_capacity(mu.weight());
        let mut start = 0u8;
        for &len in mu.parts() {
            let len = len as u8;
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type_of(&self.0)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation(cur.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i as u8);
                    rec(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

fn cycle_type_of(images: &[u8]) -> Partition {
    let mut seen = 0u32;
    let mut parts = Vec::new();
    for start in 0..images.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while seen & (1 << i) == 0 {
            seen |= 1 << i;
            i = images[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_parts(parts)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// An element `Σ a_g g` of `Q[S_n]` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupElement {
    pub fn zero(n: usize) -> GroupElement {
        GroupElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> GroupElement {
        GroupElement::from_terms(n, [(Permutation::identity(n), Rational::from_integer(1.into()))])
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> GroupElement {
        let mut x = GroupElement::zero(n);
        for (g, c) in terms {
            x.add_term(g, c);
        }
        x
    }

    fn add_term(&mut self, g: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(g).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// The class sum `C_μ` as an explicit element.
    pub fn class_sum(mu: &Partition) -> Result<GroupElement> {
        let n = mu.weight();
        check_n(n, GROUP_ALGEBRA_BOUND)?;
        let one = Rational::from_integer(1.into());
        Ok(GroupElement::from_terms(
            n,
            Permutation::all(n)
                .into_iter()
                .filter(|g| &g.cycle_type() == mu)
                .map(|g| (g, one.clone())),
        ))
    }

    /// `J_b = Σ_{a<b} (a b)`, 1-based; `J_1 = 0`.
    pub fn jucys_murphy(n: usize, b: usize) -> GroupElement {
        let one = Rational::from_integer(1.into());
        GroupElement::from_terms(
            n,
            (1..b).map(|a| (Permutation::transposition(n, a, b), one.clone())),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, g: &Permutation) -> Rational {
        self.coeffs.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> GroupElement {
        GroupElement::from_terms(self.n, self.coeffs.iter().map(|(g, a)| (g.clone(), a * c)))
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let mut acc: HashMap<Permutation, Rational> = HashMap::new();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                *acc.entry(g.compose(h)).or_insert_with(Rational::zero) += a * b;
            }
        }
        GroupElement::from_terms(self.n, acc)
    }

    pub fn pow(&self, k: usize) -> GroupElement {
        (0..k).fold(GroupElement::identity(self.n), |acc, _| acc.mul(self))
    }

    /// Coefficients on class sums, if the element is central.
    pub fn to_central(&self) -> Option<CentralElement> {
        let mut by_class: BTreeMap<Partition, Rational> = BTreeMap::new();
        for g in Permutation::all(self.n) {
            let c = self.coeff(&g);
            match by_class.entry(g.cycle_type()) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(o) => {
                    if o.get() != &c {
                        return None;
                    }
                }
            }
        }
        Some(CentralElement::from_coeffs_unchecked(
            self.n,
            CentralBasis::C,
            by_class
                .into_iter()
                .map(|(mu, c)| (mu, Scalar::from_rational(c))),
        ))
    }
}

/// Basis of the center `Z(Q[S_n])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CentralBasis {
    /// Class sums `C_μ`.
    C,
    /// Orthogonal idempotents `F_λ`.
    F,
}

/// `Σ coeff_κ B_κ` in the center, `B = C` or `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    n: usize,
    basis: CentralBasis,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl CentralElement {
    pub fn zero(n: usize, basis: CentralBasis) -> CentralElement {
        CentralElement {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity `C_(1^n) = Σ_λ F_λ`.
    pub fn identity(n: usize) -> CentralElement {
        CentralElement::class_sum(&Partition::ones(n))
    }

    pub fn class_sum(mu: &Partition) -> CentralElement {
        CentralElement::from_coeffs_unchecked(mu.weight(), CentralBasis::C, [(mu.clone(), Scalar::one())])
    }

    pub fn idempotent(lambda: &Partition) -> CentralElement {
        CentralElement::from_coeffs_unchecked(lambda.weight(), CentralBasis::F, [(lambda.clone(), Scalar::one())])
    }

    pub fn from_coeffs(
        n: usize,
        basis: CentralBasis,
        coeffs: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> Result<CentralElement> {
        let mut x = CentralElement::zero(n, basis);
        for (k, c) in coeffs {
            if k.weight() != n {
                return Err(GroupAlgebraError::WrongWeight(k, n));
            }
            x.add_term(k, &c)?;
        }
        Ok(x)
    }

    fn from_coeffs_unchecked(
        n: usize,
        basis: CentralBasis,
        coeffs: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> CentralElement {
        CentralElement::from_coeffs(n, basis, coeffs).expect("partitions of n, consistent scalars")
    }

    fn add_term(&mut self, k: Partition, c: &Scalar) -> std::result::Result<(), ScalarError> {
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.coeffs.get(&k) {
            Some(old) => old.checked_add(c)?,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, sum);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> CentralBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &Partition) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &CentralElement) -> Result<CentralElement> {
        if self.n != other.n {
            return Err(GroupAlgebraError::RankMismatch(self.n, other.n));
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<CentralElement> {
        let mut out = CentralElement::zero(self.n, self.basis);
        for (k, a) in &self.coeffs {
            out.add_term(k.clone(), &a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// Change of basis through the character table.
    pub fn to_basis(&self, target: CentralBasis) -> Result<CentralElement> {
        class_basis_change(self, target)
    }

    /// Product, computed diagonally in the `F` basis and returned in the
    /// basis of `self`.
    pub fn multiply(&self, other: &CentralElement) -> Result<CentralElement> {
        central_multiply(self, other)
    }

    /// Eigenvalue on `F_λ`, i.e. the `F_λ` coefficient.
    pub fn eigenvalue(&self, lambda: &Partition) -> Result<Scalar> {
        Ok(self.to_basis(CentralBasis::F)?.coeff(lambda))
    }

    /// Coefficient of the identity permutation.
    pub fn identity_coefficient(&self) -> Result<Scalar> {
        Ok(self.to_basis(CentralBasis::C)?.coeff(&Partition::ones(self.n)))
    }
}

impl Serialize for CentralElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<Partition, Scalar>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(&k.to_string(), v)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("CentralElement", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

/// `C_μ = Σ_λ (h_λ χ_λ(μ) / z_μ) F_λ` and `F_λ = h_λ^{-1} Σ_μ χ_λ(μ) C_μ`.
pub fn class_basis_change(x: &CentralElement, target: CentralBasis) -> Result<CentralElement> {
    if x.basis == target {
        return Ok(x.clone());
    }
    let table = char_table(x.n)?;
    let mut out = CentralElement::zero(x.n, target);
    for (k, c) in &x.coeffs {
        for other in &table.irreps {
            let factor = match target {
                CentralBasis::F => table.central_character(other, k),
                CentralBasis::C => Rational::new(
                    BigInt::from(table.value(k, other)),
                    k.hook_product(),
                ),
            };
            if !factor.is_zero() {
                out.add_term(other.clone(), &c.scale(&factor))?;
            }
        }
    }
    Ok(out)
}

pub fn central_multiply(x: &CentralElement, y: &CentralElement) -> Result<CentralElement> {
    if x.n != y.n {
        return Err(GroupAlgebraError::RankMismatch(x.n, y.n));
    }
    let xf = x.to_basis(CentralBasis::F)?;
    let yf = y.to_basis(CentralBasis::F)?;
    let mut out = CentralElement::zero(x.n, CentralBasis::F);
    for (lambda, a) in &xf.coeffs {
        if let Some(b) = yf.coeffs.get(lambda) {
            out.add_term(lambda.clone(), &a.checked_mul(b)?)?;
        }
    }
    out.to_basis(x.basis)
}

/// `f(J_1, …, J_n)` for a symmetric function `f`: in the `F` basis the
/// `λ` coefficient is `f` at the contents of `λ`.
pub fn jm_symmetric_apply(
    alg: &SymmetricAlgebra,
    f: &SymmetricFunction,
    n: usize,
) -> Result<CentralElement> {
    check_n(n, crate::characters::CHARACTER_TABLE_BOUND)?;
    let fp = if f.basis() == Basis::P {
        f.clone()
    } else {
        alg.to_p(f)?
    };
    let mut out = CentralElement::zero(n, CentralBasis::F);
    for lambda in enumerate_partitions(n)? {
        let contents: Vec<Rational> = lambda
            .contents()
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        let mut value = Scalar::zero();
        for (mu, c) in fp.coeffs() {
            let pmu: Rational = mu.parts().iter().map(|&k| power_sum(&contents, k)).product();
            value = value.checked_add(&c.scale(&pmu))?;
        }
        out.add_term(lambda, &value)?;
    }
    Ok(out)
}

/// `p_μ(J_1, …, J_n)` as an explicit group-algebra element.
pub fn jm_power_sum_explicit(mu: &Partition, n: usize) -> Result<GroupElement> {
    check_n(n, GROUP_ALGEBRA_BOUND)?;
    let jm: Vec<GroupElement> = (1..=n).map(|b| GroupElement::jucys_murphy(n, b)).collect();
    Ok(mu.parts().iter().fold(GroupElement::identity(n), |acc, &k| {
        let pk = jm
            .iter()
            .fold(GroupElement::zero(n), |s, j| s.add(&j.pow(k)));
        acc.mul(&pk)
    }))
}

/// `C_μ C_ν` by explicit multiplication of class sums.
pub fn class_product_bruteforce(mu: &Partition, nu: &Partition) -> Result<CentralElement> {
    let prod = GroupElement::class_sum(mu)?.mul(&GroupElement::class_sum(nu)?);
    Ok(prod.to_central().expect("products of class sums are central"))
}

/// Counts `m̃^λ_{μν}` of `d`-step paths `g ← (a b) g` from the class `μ` to
/// the class `ν`, split by signature `λ`: the multiplicities of the larger
/// elements `b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCountMatrix {
    n: usize,
    d: usize,
    counts: BTreeMap<(Partition, Partition, Partition), u64>,
}

#[derive(Serialize, Deserialize)]
struct PathCountRow {
    sig: Partition,
    from: Partition,
    to: Partition,
    count: u64,
}

impl Serialize for PathCountMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<PathCountRow> = self
            .counts
            .iter()
            .map(|((sig, from, to), &count)| PathCountRow {
                sig: sig.clone(),
                from: from.clone(),
                to: to.clone(),
                count,
            })
            .collect();
        let mut st = s.serialize_struct("PathCountMatrix", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("counts", &rows)?;
        st.end()
    }
}

impl PathCountMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Nonzero counts keyed by `(signature, from, to)`.
    pub fn counts(&self) -> &BTreeMap<(Partition, Partition, Partition), u64> {
        &self.counts
    }

    pub fn count(&self, sig: &Partition, from: &Partition, to: &Partition) -> u64 {
        self.counts
            .get(&(sig.clone(), from.clone(), to.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `m^λ_{μν} = (Π λ_i! / d!) m̃^λ_{μν}`.
    pub fn normalized(&self, sig: &Partition, from: &Partition, to: &Partition) -> Rational {
        let num = sig
            .parts()
            .iter()
            .fold(BigInt::from(self.count(sig, from, to)), |acc, &k| acc * factorial(k));
        Rational::new(num, factorial(self.d))
    }

    /// Sum over signatures and end classes for a start class.
    pub fn total_from(&self, from: &Partition) -> u64 {
        self.counts
            .iter()
            .filter(|((_, f, _), _)| f == from)
            .map(|(_, c)| c)
            .sum()
    }
}

type PartialCounts = HashMap<(Vec<u8>, Partition, Partition), u64>;

pub fn enumerate_paths(n: usize, d: usize) -> Result<PathCountMatrix> {
    check_n(n, PATH_N_BOUND)?;
    if d > PATH_D_BOUND {
        return Err(GroupAlgebraError::DOverBound {
            d,
            bound: PATH_D_BOUND,
        });
    }
    let classes = enumerate_partitions(n)?;
    let transpositions: Vec<(u8, u8)> = (1..n as u8)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .collect();
    let jobs: Vec<(&Partition, Option<usize>)> = classes
        .iter()
        .flat_map(|mu| {
            if d == 0 {
                vec![(mu, None)]
            } else {
                (0..transpositions.len()).map(|i| (mu, Some(i))).collect()
            }
        })
        .collect();
    let partials: Vec<PartialCounts> = jobs
        .par_iter()
        .map(|&(mu, first)| {
            let rep = Permutation::class_representative(mu);
            let mut walk = Walk {
                g: rep.0.clone(),
                inv: rep.inverse().0,
                bcount: vec![0u8; n],
                out: HashMap::new(),
                transpositions: &transpositions,
                from: mu,
            };
            match first {
                None => walk.dfs(0),
                Some(i) => {
                    walk.step(transpositions[i]);
                    walk.dfs(d - 1);
                }
            }
            walk.out
        })
        .collect();
    let mut counts = BTreeMap::new();
    for part in partials {
        for ((bc, from, to), c) in part {
            let sig = Partition::from_parts(bc.into_iter().filter(|&k| k > 0).map(usize::from).collect());
            let size = from.class_size().to_u64().expect("small class");
            *counts.entry((sig, from, to)).or_insert(0) += c * size;
        }
    }
    Ok(PathCountMatrix { n, d, counts })
}

struct Walk<'a> {
    g: Vec<u8>,
    inv: Vec<u8>,
    bcount: Vec<u8>,
    out: HashMap<(Vec<u8>, Partition, Partition), u64>,
    transpositions: &'a [(u8, u8)],
    from: &'a Partition,
}

impl Walk<'_> {
    /// `g ← (a b) g`; an involution, so it also undoes itself.
    fn swap(&mut self, (a, b): (u8, u8)) {
        let (pa, pb) = (self.inv[a as usize], self.inv[b as usize]);
        self.g.swap(pa as usize, pb as usize);
        self.inv.swap(a as usize, b as usize);
    }

    fn step(&mut self, t: (u8, u8)) {
        self.swap(t);
        self.bcount[t.1 as usize] += 1;
    }

    fn unstep(&mut self, t: (u8, u8)) {
        self.swap(t);
        self.bcount[t.1 as usize] -= 1;
    }

    fn dfs(&mut self, remaining: usize) {
        if remaining == 0 {
            let mut key = self.bcount.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            let to = cycle_type_of(&self.g);
            *self.out.entry((key, self.from.clone(), to)).or_insert(0) += 1;
            return;
        }
        for i in 0..self.transpositions.len() {
            let t = self.transpositions[i];
            self.step(t);
            self.dfs(remaining - 1);
            self.unstep(t);
        }
    }
}

/// `F^d(μ,ν) = (1/n!) Σ_{λ⊢d} w_λ m^λ_{μν}` from explicit path counts.
pub fn fd_bruteforce(n: usize, d: usize, family: &WeightFamily) -> Result<ClassTable> {
    let paths = enumerate_paths(n, d)?;
    let sigs = enumerate_partitions(d)?;
    let series = family.series(d)?;
    let weights: Vec<Scalar> = sigs
        .iter()
        .map(|lambda| {
            lambda
                .parts()
                .iter()
                .fold(Scalar::one(), |acc, &k| acc * series.coeff(k))
        })
        .collect();
    let nfact = Rational::from_integer(factorial(n));
    ClassTable::try_build(n, d, None, family.clone(), |mu, nu| {
        let mut acc = Scalar::zero();
        for (lambda, w) in sigs.iter().zip(&weights) {
            let m = paths.normalized(lambda, mu, nu);
            if !m.is_zero() {
                acc = acc.checked_add(&w.scale(&(m / &nfact)))?;
            }
        }
        Ok::<_, GroupAlgebraError>(acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyKind;
    use crate::scalar::{int, ratio};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c_elem(terms: &[(&[usize], i64)]) -> CentralElement {
        let n = terms[0].0.iter().sum();
        CentralElement::from_coeffs(
            n,
            CentralBasis::C,
            terms.iter().map(|(k, c)| (p(k), Scalar::from_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn permutations() {
        let g = Permutation::from_images(vec![2, 3, 1, 5, 4]).unwrap();
        assert_eq!(g.cycle_type(), p(&[3, 2]));
        assert_eq!(g.compose(&g.inverse()), Permutation::identity(5));
        assert_eq!(Permutation::class_representative(&p(&[3, 2])).cycle_type(), p(&[3, 2]));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        let (s, t) = (Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3));
        assert_eq!(s.compose(&t).images(), vec![2, 3, 1]);
    }

    #[test]
    fn basis_change_examples() {
        for n in 1..=5 {
            let f = CentralElement::identity(n).to_basis(CentralBasis::F).unwrap();
            for lambda in enumerate_partitions(n).unwrap() {
                assert!(f.coeff(&lambda).is_one());
            }
        }
        let c2 = CentralElement::class_sum(&p(&[2])).to_basis(CentralBasis::F).unwrap();
        assert_eq!(c2.coeff(&p(&[2])), Scalar::from_int(1));
        assert_eq!(c2.coeff(&p(&[1, 1])), Scalar::from_int(-1));
        let x = c_elem(&[(&[2, 2], 3), (&[3, 1], -2), (&[1, 1, 1, 1], 7)]);
        let back = x.to_basis(CentralBasis::F).unwrap().to_basis(CentralBasis::C).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn multiplication_examples() {
        let c21 = CentralElement::class_sum(&p(&[2, 1]));
        assert_eq!(c21.multiply(&c21).unwrap(), c_elem(&[(&[3], 3), (&[1, 1, 1], 3)]));
        let f = CentralElement::idempotent(&p(&[2, 1]));
        assert!(f.multiply(&CentralElement::idempotent(&p(&[3]))).unwrap().is_zero());
        assert_eq!(f.multiply(&f).unwrap(), f);
        let c = CentralElement::class_sum(&p(&[2, 2]));
        assert_eq!(c.multiply(&CentralElement::identity(4)).unwrap(), c);
    }

    #[test]
    fn eigen_route_matches_bruteforce_products() {
        for n in 2..=4 {
            let classes = enumerate_partitions(n).unwrap();
            for mu in &classes {
                for nu in &classes {
                    let route = CentralElement::class_sum(mu)
                        .multiply(&CentralElement::class_sum(nu))
                        .unwrap();
                    assert_eq!(route, class_product_bruteforce(mu, nu).unwrap(), "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn class_sums_act_by_central_characters() {
        for n in 2..=6 {
            let table = char_table(n).unwrap();
            for lambda in &table.irreps {
                let f = CentralElement::idempotent(lambda);
                for mu in &table.classes {
                    let lhs = f.multiply(&CentralElement::class_sum(mu)).unwrap();
                    let phi = Scalar::from_rational(table.central_character(lambda, mu));
                    assert_eq!(lhs, f.scale(&phi).unwrap());
                }
            }
        }
    }

    #[test]
    fn jucys_murphy_examples() {
        let alg = SymmetricAlgebra::symbolic();
        let p1 = SymmetricFunction::basis_element(Basis::P, &p(&[1]));
        let x = jm_symmetric_apply(&alg, &p1, 2).unwrap();
        assert_eq!(x.to_basis(CentralBasis::C).unwrap(), CentralElement::class_sum(&p(&[2])));
        assert_eq!(x.eigenvalue(&p(&[2])).unwrap(), Scalar::one());
        let one = SymmetricFunction::basis_element(Basis::P, &Partition::empty());
        let y = jm_symmetric_apply(&alg, &one, 3).unwrap();
        assert_eq!(y.to_basis(CentralBasis::C).unwrap(), CentralElement::identity(3));
    }

    #[test]
    fn eigenvalues_match_explicit_jucys_murphy_products() {
        let alg = SymmetricAlgebra::symbolic();
        for n in 1..=4 {
            for d in 0..=4 {
                for mu in enumerate_partitions(d).unwrap() {
                    let explicit = jm_power_sum_explicit(&mu, n).unwrap().to_central().unwrap();
                    let f = SymmetricFunction::basis_element(Basis::P, &mu);
                    let route = jm_symmetric_apply(&alg, &f, n).unwrap();
                    assert_eq!(route.to_basis(CentralBasis::C).unwrap(), explicit, "n={n} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn path_examples() {
        let m = enumerate_paths(2, 1).unwrap();
        assert_eq!(m.count(&p(&[1]), &p(&[1, 1]), &p(&[2])), 1);
        let m = enumerate_paths(3, 1).unwrap();
        assert_eq!(m.count(&p(&[1]), &p(&[3]), &p(&[2, 1])), 6);
        let m = enumerate_paths(3, 2).unwrap();
        let id = p(&[1, 1, 1]);
        assert_eq!(m.count(&p(&[2]), &id, &id), 3);
        assert_eq!(m.count(&p(&[1, 1]), &id, &id), 0);
        assert!(matches!(enumerate_paths(7, 1), Err(GroupAlgebraError::NOverBound { .. })));
        assert!(enumerate_paths(3, 6).is_err());
    }

    #[test]
    fn path_totals_and_symmetry() {
        for n in 1..=4 {
            for d in 0..=3 {
                let m = enumerate_paths(n, d).unwrap();
                let steps = (n * (n - 1) / 2) as u64;
                for mu in enumerate_partitions(n).unwrap() {
                    let size = mu.class_size().to_u64().unwrap();
                    assert_eq!(m.total_from(&mu), size * steps.pow(d as u32));
                }
                for ((sig, from, to), c) in m.counts() {
                    assert_eq!(*c, m.count(sig, to, from));
                }
            }
        }
    }

    #[test]
    fn path_json_shape() {
        let m = enumerate_paths(2, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"n":2,"d":1,"counts":[{"sig":[1],"from":[2],"to":[1,1],"count":1},{"sig":[1],"from":[1,1],"to":[2],"count":1}]}"#
        );
    }

    /// `m_λ(J) C_μ = Σ_ν m^λ_{μν} (z_ν / n!) C_ν`.
    #[test]
    fn monomial_endomorphism_identity() {
        let alg = SymmetricAlgebra::symbolic();
        for n in 1..=4 {
            let nfact = Rational::from_integer(factorial(n));
            let classes = enumerate_partitions(n).unwrap();
            for d in 0..=3 {
                let paths = enumerate_paths(n, d).unwrap();
                for lambda in enumerate_partitions(d).unwrap() {
                    let m = SymmetricFunction::basis_element(Basis::M, &lambda);
                    let ml = jm_symmetric_apply(&alg, &m, n).unwrap();
                    for mu in &classes {
                        let lhs = CentralElement::class_sum(mu).multiply(&ml).unwrap();
                        let rhs = CentralElement::from_coeffs(
                            n,
                            CentralBasis::C,
                            classes.iter().map(|nu| {
                                let c = paths.normalized(&lambda, mu, nu) * nu.z_rational() / &nfact;
                                (nu.clone(), Scalar::from_rational(c))
                            }),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs, "n={n} λ={lambda} μ={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn fd_small_cases() {
        let fam = WeightFamily::new(FamilyKind::Macdonald, vec![int(1)]);
        let f0 = fd_bruteforce(3, 0, &fam).unwrap();
        for (mu, nu, v) in f0.cells() {
            let expected = if mu == nu { mu.z_rational().recip() } else { Rational::zero() };
            assert_eq!(v, &Scalar::from_rational(expected));
        }
        let f1 = fd_bruteforce(2, 1, &fam).unwrap();
        let g1 = fam.series(1).unwrap().coeff(1).clone();
        assert_eq!(f1.get(&p(&[2]), &p(&[1, 1])).unwrap(), &g1.scale(&ratio(1, 2)));
        let empty = WeightFamily::new(FamilyKind::Macdonald, vec![]);
        assert!(fd_bruteforce(3, 2, &empty).unwrap().cells().all(|(_, _, v)| v.is_zero()));
    }

    #[test]
    fn fd_parity() {
        let fam = WeightFamily::new(FamilyKind::Classical, vec![int(1)]);
        for n in 2..=4 {
            for d in [1, 3] {
                let id = Partition::ones(n);
                assert!(fd_bruteforce(n, d, &fam).unwrap().get(&id, &id).unwrap().is_zero());
            }
        }
    }
}
