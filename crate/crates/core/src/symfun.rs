//! Symmetric functions of fixed degree over [`Scalar`].
//!
//! Every basis converts through power sums. Macdonald `P_λ` comes from
//! Gram-Schmidt against strictly dominated partitions under the `(q,t)`
//! power-sum pairing; the `g`, `hl_q` and `jack_g` bases are the duals of
//! the monomial basis under their respective pairings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::characters::{char_table, CharacterError};
use crate::linalg::{self, Matrix};
use crate::partition::{enumerate_partitions, Partition, PartitionError};
use crate::scalar::{Param, ParamSet, Rational, Scalar, ScalarError, ZSeries};

#[derive(Debug, Error)]
pub enum SymFunError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("partition {lambda} has weight different from degree {degree}")]
    WrongWeight { lambda: Partition, degree: usize },
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p_λ`.
    P,
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Schur functions `s_λ`.
    S,
    /// Macdonald `P_λ(x; q, t)`.
    Macdonald,
    /// `g_λ = Π g_{λ_i}(x; q, t)`.
    G,
    /// Hall-Littlewood `q_λ(x; t)`.
    HlQ,
    /// Jack `g^α_λ`.
    JackG,
}

impl Basis {
    pub const ALL: [Basis; 7] = [
        Basis::P,
        Basis::M,
        Basis::S,
        Basis::Macdonald,
        Basis::G,
        Basis::HlQ,
        Basis::JackG,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::S => "s",
            Basis::Macdonald => "P",
            Basis::G => "g",
            Basis::HlQ => "hl_q",
            Basis::JackG => "jack_g",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = SymFunError;

    fn from_str(s: &str) -> Result<Basis, SymFunError> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| SymFunError::UnknownBasis(s.to_string()))
    }
}

/// Homogeneous symmetric function: `Σ coeff_λ b_λ` over `λ ⊢ degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFunction {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymmetricFunction {
    pub fn zero(degree: usize, basis: Basis) -> SymmetricFunction {
        SymmetricFunction {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> SymmetricFunction {
        let mut f = SymmetricFunction::zero(lambda.weight(), basis);
        f.coeffs.insert(lambda.clone(), Scalar::one());
        f
    }

    pub fn from_coeffs(
        degree: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> Result<SymmetricFunction, SymFunError> {
        let mut f = SymmetricFunction::zero(degree, basis);
        for (lambda, c) in coeffs {
            if lambda.weight() != degree {
                return Err(SymFunError::WrongWeight { lambda, degree });
            }
            f.add_term(lambda, &c)?;
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: &Scalar) -> Result<(), ScalarError> {
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.coeffs.get(&lambda) {
            Some(old) => old.checked_add(c)?,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, sum);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &SymmetricFunction) -> Result<SymmetricFunction, SymFunError> {
        if self.degree != other.degree {
            return Err(SymFunError::DegreeMismatch(self.degree, other.degree));
        }
        if self.basis != other.basis {
            return Err(SymFunError::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<SymmetricFunction, SymFunError> {
        let mut out = SymmetricFunction::zero(self.degree, self.basis);
        for (lambda, x) in &self.coeffs {
            out.add_term(lambda.clone(), &x.checked_mul(c)?)?;
        }
        Ok(out)
    }
}

impl Serialize for SymmetricFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};

        struct Coeffs<'a>(&'a BTreeMap<Partition, Scalar>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(&k.to_string(), v)?;
                }
                m.end()
            }
        }

        let mut st = s.serialize_struct("SymmetricFunction", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", self.basis.tag())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SymmetricFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            basis: String,
            coeffs: BTreeMap<String, Scalar>,
        }
        let raw = Raw::deserialize(d)?;
        let basis: Basis = raw.basis.parse().map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (k, v) in raw.coeffs {
            let parts: Vec<usize> = serde_json::from_str(&k).map_err(D::Error::custom)?;
            terms.push((Partition::new(parts).map_err(D::Error::custom)?, v));
        }
        SymmetricFunction::from_coeffs(raw.degree, basis, terms).map_err(D::Error::custom)
    }
}

/// Parameter-free transition data for one degree.
struct DegreeTables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_μ = Σ_λ p_to_m[μ][λ] m_λ`.
    p_to_m: Matrix,
    /// `m_λ = Σ_μ m_to_p[λ][μ] p_μ`.
    m_to_p: Matrix,
}

/// Number of ways to distribute the parts of `mu` into rows with sums `lambda`.
fn monomial_count(mu: &[usize], lambda: &[usize]) -> u64 {
    fn go(mu: &[usize], room: &mut Vec<usize>) -> u64 {
        let Some((&first, rest)) = mu.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += go(rest, room);
                room[j] += first;
            }
        }
        total
    }
    go(mu, &mut lambda.to_vec())
}

fn degree_tables(n: usize) -> Result<Arc<DegreeTables>, SymFunError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(t));
    }
    let parts = enumerate_partitions(n)?;
    let p_to_m: Matrix = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| {
                    Rational::from_integer(BigInt::from(monomial_count(mu.parts(), lambda.parts())))
                })
                .collect()
        })
        .collect();
    let m_to_p = linalg::inverse(&p_to_m).expect("p to m transition is invertible");
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let t = Arc::new(DegreeTables {
        parts,
        index,
        p_to_m,
        m_to_p,
    });
    cache
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert_with(|| Arc::clone(&t));
    Ok(t)
}

/// Macdonald data at one degree, in the canonical partition order.
struct MacdonaldDegree {
    /// `P_λ` in power-sum coordinates.
    p_coords: Vec<Vec<Scalar>>,
    /// `P_λ` in monomial coordinates.
    m_coords: Vec<Vec<Scalar>>,
    /// `(P_λ, P_λ)_{q,t}`.
    norms: Vec<Scalar>,
}

/// Symmetric-function arithmetic with bound values of `q`, `t` and `α`.
///
/// Parameters may be symbolic (variables of one shared context) or
/// rational constants, which turns every computation into exact
/// evaluation at a point.
pub struct SymmetricAlgebra {
    q: Scalar,
    t: Scalar,
    alpha: Scalar,
    macdonald: Mutex<HashMap<usize, Arc<MacdonaldDegree>>>,
}

impl fmt::Debug for SymmetricAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymmetricAlgebra")
            .field("q", &self.q)
            .field("t", &self.t)
            .field("alpha", &self.alpha)
            .finish()
    }
}

fn product_over_parts(mu: &Partition, f: impl Fn(usize) -> Scalar) -> Scalar {
    mu.parts().iter().fold(Scalar::one(), |acc, &k| acc * f(k))
}

/// Power sum `p_k(c)` of a finite list.
pub fn power_sum(c: &[Rational], k: usize) -> Rational {
    c.iter().map(|x| num_traits::pow(x.clone(), k)).sum()
}

/// `p_μ(c)`.
pub fn power_sum_product(c: &[Rational], mu: &Partition) -> Rational {
    mu.parts().iter().map(|&k| power_sum(c, k)).product()
}

/// Series `Σ_j z^j Σ_{μ⊢j} Π_i w(μ_i) p_μ(c) / z_μ`, i.e. the expansion of
/// `exp(Σ_k w(k) p_k(c) z^k / k)`.
pub fn weighted_power_sum_series(
    c: &[Rational],
    order: usize,
    w: impl Fn(usize) -> Scalar,
) -> Result<ZSeries, SymFunError> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let mut acc = Scalar::zero();
        for mu in enumerate_partitions(j)? {
            let pc = power_sum_product(c, &mu);
            if pc.is_zero() {
                continue;
            }
            let term = product_over_parts(&mu, &w).scale(&(pc / mu.z_rational()));
            acc = acc.checked_add(&term)?;
        }
        coeffs.push(acc);
    }
    Ok(ZSeries::new(order, coeffs))
}

/// Generalized binomial coefficient `(a choose k) = Π_{i<k} (a - i) / k!`.
pub fn generalized_binomial(a: &Scalar, k: usize) -> Scalar {
    let mut out = Scalar::one();
    for i in 0..k {
        out = out * (a - &Scalar::from_int(i as i64)) / Scalar::from_int(i as i64 + 1);
    }
    out
}

impl SymmetricAlgebra {
    pub fn new(q: Scalar, t: Scalar, alpha: Scalar) -> Result<SymmetricAlgebra, SymFunError> {
        q.params().join(t.params())?.join(alpha.params())?;
        Ok(SymmetricAlgebra {
            q,
            t,
            alpha,
            macdonald: Mutex::new(HashMap::new()),
        })
    }

    /// `q`, `t` and `α` all symbolic, sharing the context `{q, t, α}`.
    pub fn symbolic() -> SymmetricAlgebra {
        let ctx = ParamSet::of(&[Param::Q, Param::T, Param::Alpha]);
        let var = |p| ctx.var(p).expect("param in context");
        SymmetricAlgebra::new(var(Param::Q), var(Param::T), var(Param::Alpha))
            .expect("shared context")
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

    /// `z_μ(q,t)`.
    pub fn z_qt(&self, mu: &Partition) -> Scalar {
        mu.z_qt(&self.q, &self.t)
    }

    /// Pairing weight `(p_μ, p_μ)` for the dual-to-`m` bases.
    fn pairing(&self, basis: Basis, mu: &Partition) -> Scalar {
        let z = Scalar::from_rational(mu.z_rational());
        match basis {
            Basis::G => self.z_qt(mu),
            Basis::HlQ => mu.z_qt(&Scalar::zero(), &self.t),
            Basis::JackG => z * self.alpha.pow(mu.len() as u32),
            _ => z,
        }
    }

    /// `g_{(n)}`, `q_{(n)}` or `g^α_{(n)}` in power sums.
    fn one_row_dual(&self, basis: Basis, n: usize) -> Result<Vec<(Partition, Scalar)>, SymFunError> {
        enumerate_partitions(n)?
            .into_iter()
            .map(|mu| {
                let c = self.pairing(basis, &mu).recip()?;
                Ok((mu, c))
            })
            .collect()
    }

    fn macdonald_degree(&self, n: usize) -> Result<Arc<MacdonaldDegree>, SymFunError> {
        if let Some(d) = self.macdonald.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(d));
        }
        let tables = degree_tables(n)?;
        let parts = &tables.parts;
        let len = parts.len();
        let zqt: Vec<Scalar> = parts.iter().map(|mu| self.z_qt(mu)).collect();
        let inner = |a: &[Scalar], b: &[Scalar]| -> Result<Scalar, ScalarError> {
            let mut acc = Scalar::zero();
            for ((x, y), z) in a.iter().zip(b).zip(&zqt) {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&x.checked_mul(y)?.checked_mul(z)?)?;
            }
            Ok(acc)
        };
        let mut p_coords: Vec<Vec<Scalar>> = vec![Vec::new(); len];
        let mut norms: Vec<Scalar> = vec![Scalar::zero(); len];
        // canonical order lists dominance-larger partitions first
        for i in (0..len).rev() {
            let m_lambda: Vec<Scalar> = tables.m_to_p[i]
                .iter()
                .map(|r| Scalar::from_rational(r.clone()))
                .collect();
            let mut v = m_lambda.clone();
            for j in (i + 1..len).rev() {
                if !parts[j].dominated_by(&parts[i]) {
                    continue;
                }
                let coef = inner(&m_lambda, &p_coords[j])?.checked_div(&norms[j])?;
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&p_coords[j]) {
                    *x = x.checked_sub(&coef.checked_mul(y)?)?;
                }
            }
            norms[i] = inner(&v, &v)?;
            p_coords[i] = v;
        }
        let m_coords = p_coords
            .iter()
            .map(|v| {
                (0..len)
                    .map(|l| {
                        let mut acc = Scalar::zero();
                        for (mu, x) in v.iter().enumerate() {
                            let r = &tables.p_to_m[mu][l];
                            if !r.is_zero() && !x.is_zero() {
                                acc = acc.checked_add(&x.scale(r))?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect::<Result<Vec<_>, ScalarError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let data = Arc::new(MacdonaldDegree {
            p_coords,
            m_coords,
            norms,
        });
        self.macdonald
            .lock()
            .expect("cache lock")
            .entry(n)
            .or_insert_with(|| Arc::clone(&data));
        Ok(data)
    }

    /// Express `f` in power sums.
    pub fn to_p(&self, f: &SymmetricFunction) -> Result<SymmetricFunction, SymFunError> {
        let n = f.degree;
        let mut out = SymmetricFunction::zero(n, Basis::P);
        match f.basis {
            Basis::P => return Ok(f.clone()),
            Basis::M => {
                let tables = degree_tables(n)?;
                for (lambda, c) in &f.coeffs {
                    let row = &tables.m_to_p[tables.index[lambda]];
                    for (mu, r) in tables.parts.iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(mu.clone(), &c.scale(r))?;
                        }
                    }
                }
            }
            Basis::S => {
                let table = char_table(n)?;
                for (lambda, c) in &f.coeffs {
                    for mu in &table.classes {
                        let chi = table.value(lambda, mu);
                        if chi != 0 {
                            let r = Rational::new(BigInt::from(chi), mu.z());
                            out.add_term(mu.clone(), &c.scale(&r))?;
                        }
                    }
                }
            }
            Basis::Macdonald => {
                let tables = degree_tables(n)?;
                let mac = self.macdonald_degree(n)?;
                for (lambda, c) in &f.coeffs {
                    let row = &mac.p_coords[tables.index[lambda]];
                    for (mu, x) in tables.parts.iter().zip(row) {
                        out.add_term(mu.clone(), &c.checked_mul(x)?)?;
                    }
                }
            }
            Basis::G | Basis::HlQ | Basis::JackG => {
                let rows: Vec<Vec<(Partition, Scalar)>> = (0..=n)
                    .map(|k| self.one_row_dual(f.basis, k))
                    .collect::<Result<_, _>>()?;
                for (lambda, c) in &f.coeffs {
                    let mut prod: Vec<(Partition, Scalar)> = vec![(Partition::empty(), c.clone())];
                    for &part in lambda.parts() {
                        let mut next = Vec::new();
                        for (acc_mu, acc_c) in &prod {
                            for (mu, x) in &rows[part] {
                                let mut joined = acc_mu.parts().to_vec();
                                joined.extend_from_slice(mu.parts());
                                next.push((Partition::from_parts(joined), acc_c.checked_mul(x)?));
                            }
                        }
                        prod = next;
                    }
                    for (mu, x) in prod {
                        out.add_term(mu, &x)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Express a power-sum expansion in `target`.
    fn express_p_in(&self, f: &SymmetricFunction, target: Basis) -> Result<SymmetricFunction, SymFunError> {
        debug_assert_eq!(f.basis, Basis::P);
        let n = f.degree;
        let mut out = SymmetricFunction::zero(n, target);
        match target {
            Basis::P => return Ok(f.clone()),
            Basis::M => {
                let tables = degree_tables(n)?;
                for (mu, c) in &f.coeffs {
                    let row = &tables.p_to_m[tables.index[mu]];
                    for (lambda, r) in tables.parts.iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(lambda.clone(), &c.scale(r))?;
                        }
                    }
                }
            }
            Basis::S => {
                let table = char_table(n)?;
                for lambda in &table.irreps {
                    let mut acc = Scalar::zero();
                    for (mu, c) in &f.coeffs {
                        let chi = table.value(lambda, mu);
                        if chi != 0 {
                            acc = acc.checked_add(&c.scale(&Rational::from_integer(chi.into())))?;
                        }
                    }
                    out.add_term(lambda.clone(), &acc)?;
                }
            }
            Basis::Macdonald => {
                let tables = degree_tables(n)?;
                let mac = self.macdonald_degree(n)?;
                let mut rest: Vec<Scalar> = self
                    .express_p_in(f, Basis::M)?
                    .coeffs
                    .into_iter()
                    .fold(vec![Scalar::zero(); tables.parts.len()], |mut v, (l, c)| {
                        v[tables.index[&l]] = c;
                        v
                    });
                for i in 0..tables.parts.len() {
                    let c = rest[i].clone();
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in rest.iter_mut().zip(&mac.m_coords[i]) {
                        *x = x.checked_sub(&c.checked_mul(y)?)?;
                    }
                    out.add_term(tables.parts[i].clone(), &c)?;
                }
            }
            Basis::G | Basis::HlQ | Basis::JackG => {
                let tables = degree_tables(n)?;
                for (l, lambda) in tables.parts.iter().enumerate() {
                    let mut acc = Scalar::zero();
                    for (mu, c) in &f.coeffs {
                        let r = &tables.m_to_p[l][tables.index[mu]];
                        if r.is_zero() {
                            continue;
                        }
                        let w = self.pairing(target, mu);
                        acc = acc.checked_add(&c.checked_mul(&w)?.scale(r))?;
                    }
                    out.add_term(lambda.clone(), &acc)?;
                }
            }
        }
        Ok(out)
    }

    pub fn convert(
        &self,
        f: &SymmetricFunction,
        target: Basis,
    ) -> Result<SymmetricFunction, SymFunError> {
        if f.basis == target {
            return Ok(f.clone());
        }
        self.express_p_in(&self.to_p(f)?, target)
    }

    /// `(f, g)_{q,t}` with `(p_λ, p_μ) = z_λ(q,t) δ_{λμ}`.
    pub fn scalar_product_qt(
        &self,
        f: &SymmetricFunction,
        g: &SymmetricFunction,
    ) -> Result<Scalar, SymFunError> {
        if f.degree != g.degree {
            return Err(SymFunError::DegreeMismatch(f.degree, g.degree));
        }
        let (fp, gp) = (self.to_p(f)?, self.to_p(g)?);
        let mut acc = Scalar::zero();
        for (mu, a) in &fp.coeffs {
            if let Some(b) = gp.coeffs.get(mu) {
                acc = acc.checked_add(&a.checked_mul(b)?.checked_mul(&self.z_qt(mu))?)?;
            }
        }
        Ok(acc)
    }

    /// Product, returned in power sums.
    pub fn mul(
        &self,
        f: &SymmetricFunction,
        g: &SymmetricFunction,
    ) -> Result<SymmetricFunction, SymFunError> {
        let (fp, gp) = (self.to_p(f)?, self.to_p(g)?);
        let mut out = SymmetricFunction::zero(f.degree + g.degree, Basis::P);
        for (a, x) in &fp.coeffs {
            for (b, y) in &gp.coeffs {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_parts(parts), &x.checked_mul(y)?)?;
            }
        }
        Ok(out)
    }

    /// Macdonald `P_λ` in the monomial basis.
    pub fn macdonald_p(&self, lambda: &Partition) -> Result<SymmetricFunction, SymFunError> {
        let n = lambda.weight();
        let tables = degree_tables(n)?;
        let mac = self.macdonald_degree(n)?;
        SymmetricFunction::from_coeffs(
            n,
            Basis::M,
            tables
                .parts
                .iter()
                .cloned()
                .zip(mac.m_coords[tables.index[lambda]].iter().cloned()),
        )
    }

    /// `b_λ(q,t) = 1 / (P_λ, P_λ)_{q,t}`.
    pub fn b_lambda(&self, lambda: &Partition) -> Result<Scalar, SymFunError> {
        let tables = degree_tables(lambda.weight())?;
        let mac = self.macdonald_degree(lambda.weight())?;
        Ok(mac.norms[tables.index[lambda]].recip()?)
    }

    /// Schur function in power sums.
    pub fn schur(&self, lambda: &Partition) -> Result<SymmetricFunction, SymFunError> {
        self.to_p(&SymmetricFunction::basis_element(Basis::S, lambda))
    }

    /// Evaluate at the finite variable list `c`.
    pub fn evaluate(&self, f: &SymmetricFunction, c: &[Rational]) -> Result<Scalar, SymFunError> {
        let fp = self.to_p(f)?;
        let mut acc = Scalar::zero();
        for (mu, a) in &fp.coeffs {
            acc = acc.checked_add(&a.scale(&power_sum_product(c, mu)))?;
        }
        Ok(acc)
    }

    /// `Σ_j g_j(c; q, t) z^j` up to `z^order`.
    pub fn g_j_series(&self, c: &[Rational], order: usize) -> Result<ZSeries, SymFunError> {
        weighted_power_sum_series(c, order, |k| {
            let k = k as u32;
            (Scalar::one() - self.t.pow(k)) / (Scalar::one() - self.q.pow(k))
        })
    }

    /// `g_λ(c; q, t) = Π g_{λ_i}(c; q, t)`.
    pub fn g_lambda_value(&self, lambda: &Partition, c: &[Rational]) -> Result<Scalar, SymFunError> {
        let order = lambda.parts().first().copied().unwrap_or(0);
        let s = self.g_j_series(c, order)?;
        Ok(product_over_parts(lambda, |k| s.coeff(k).clone()))
    }

    /// Hall-Littlewood `q_λ(c; t)`: the `g_λ` value at `q = 0`.
    pub fn hl_q_lambda(&self, lambda: &Partition, c: &[Rational]) -> Result<Scalar, SymFunError> {
        let order = lambda.parts().first().copied().unwrap_or(0);
        let s = weighted_power_sum_series(c, order, |k| Scalar::one() - self.t.pow(k as u32))?;
        Ok(product_over_parts(lambda, |k| s.coeff(k).clone()))
    }

    /// Jack `g^α_λ(c)` from `Π_i (1 - z c_i)^{-1/α}` by the binomial series.
    pub fn jack_g_lambda(&self, lambda: &Partition, c: &[Rational]) -> Result<Scalar, SymFunError> {
        let order = lambda.parts().first().copied().unwrap_or(0);
        let s = self.jack_series(c, order)?;
        Ok(product_over_parts(lambda, |k| s.coeff(k).clone()))
    }

    /// `Π_i (1 - z c_i)^{-1/α}` up to `z^order`.
    pub fn jack_series(&self, c: &[Rational], order: usize) -> Result<ZSeries, SymFunError> {
        let a = -self.alpha.recip()?;
        let binoms: Vec<Scalar> = (0..=order).map(|k| generalized_binomial(&a, k)).collect();
        let factors: Vec<ZSeries> = c
            .iter()
            .map(|ci| {
                let coeffs = binoms.iter().enumerate().map(|(k, b)| {
                    let x = num_traits::pow(-ci.clone(), k);
                    b.scale(&x)
                });
                ZSeries::new(order, coeffs)
            })
            .collect();
        Ok(ZSeries::mul_many(order, &factors)?)
    }
}
