//! Pure Hurwitz numbers, the `q`-weights `W_E` and `W_H`, geometric weighted
//! Hurwitz numbers `H^(d,e)` and the character route to `F^d`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::characters::{char_table, CharacterError, CharacterTable};
use crate::family::{FamilyError, FamilyKind, WeightFamily};
use crate::group_algebra::{
    jm_symmetric_apply, CentralBasis, CentralElement, GroupAlgebraError, GroupElement,
};
use crate::partition::{enumerate_partitions, factorial, nontrivial_classes, Partition, PartitionError};
use crate::scalar::{Param, Rational, Scalar, ScalarError};
use crate::symfun::{generalized_binomial, Basis, SymFunError, SymmetricAlgebra, SymmetricFunction};
use crate::table::ClassTable;
use crate::tau::{r_lambda, schur_to_powersum, TauError};

/// Largest `n` for geometric sums over branch configurations.
pub const HURWITZ_N_BOUND: usize = 5;
/// Largest total colength for geometric sums.
pub const HURWITZ_D_BOUND: usize = 4;

#[derive(Debug, Error)]
pub enum HurwitzError {
    #[error("n exceeds enumeration bound (n = {n}, bound {bound})")]
    NOverBound { n: usize, bound: usize },
    #[error("d exceeds enumeration bound (d = {d}, bound {bound})")]
    DOverBound { d: usize, bound: usize },
    #[error("at least one profile is required")]
    NoProfiles,
    #[error("profile {0} has colength zero")]
    ZeroColength(Partition),
    #[error("profile {0} is not a partition of {1}")]
    WeightMismatch(Partition, usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    GroupAlgebra(#[from] GroupAlgebraError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Tau(#[from] TauError),
}

type Result<T> = std::result::Result<T, HurwitzError>;

fn check_bounds(n: usize, d: usize) -> Result<()> {
    if n > HURWITZ_N_BOUND {
        return Err(HurwitzError::NOverBound {
            n,
            bound: HURWITZ_N_BOUND,
        });
    }
    if d > HURWITZ_D_BOUND {
        return Err(HurwitzError::DOverBound {
            d,
            bound: HURWITZ_D_BOUND,
        });
    }
    Ok(())
}

fn check_profiles(profiles: &[Partition], n: usize) -> Result<()> {
    if profiles.is_empty() {
        return Err(HurwitzError::NoProfiles);
    }
    for p in profiles {
        if p.weight() != n {
            return Err(HurwitzError::WeightMismatch(p.clone(), n));
        }
    }
    Ok(())
}

/// `H(μ^(1), …, μ^(k)) = Σ_λ h_λ^{k-2} Π_i χ_λ(μ^(i)) / z_{μ^(i)}`.
pub fn pure_hurwitz(profiles: &[Partition], n: usize) -> Result<Rational> {
    check_profiles(profiles, n)?;
    let table = char_table(n)?;
    let k = profiles.len() as i32;
    let mut acc = Rational::zero();
    for lambda in &table.irreps {
        let h = Rational::from_integer(lambda.hook_product()).pow(k - 2);
        let term = profiles.iter().fold(h, |acc, mu| {
            acc * Rational::new(BigInt::from(table.value(lambda, mu)), mu.z())
        });
        acc += term;
    }
    Ok(acc)
}

/// `(1/n!) #{(g_1, …, g_k) : g_i ∈ cyc(μ^(i)), g_1 ⋯ g_k = 1}` by explicit
/// multiplication in the group algebra.
pub fn pure_hurwitz_bruteforce(profiles: &[Partition], n: usize) -> Result<Rational> {
    check_profiles(profiles, n)?;
    let mut prod = GroupElement::identity(n);
    for mu in profiles {
        prod = prod.mul(&GroupElement::class_sum(mu)?);
    }
    let count = prod.coeff(&crate::group_algebra::Permutation::identity(n));
    Ok(count / Rational::from_integer(factorial(n)))
}

fn colengths(profiles: &[Partition]) -> Result<Vec<usize>> {
    if profiles.is_empty() {
        return Err(HurwitzError::NoProfiles);
    }
    profiles
        .iter()
        .map(|p| match p.colength() {
            0 => Err(HurwitzError::ZeroColength(p.clone())),
            a => Ok(a),
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out
}

fn one_minus_q_pow(q: &Scalar, e: usize) -> Scalar {
    Scalar::one() - q.pow(e as u32)
}

/// `W_E = |aut λ|^{-1} Σ_σ q^{Σ_r (k-r) a_σ(r)} / Π_s (1 - q^{a_σ(1) + ⋯ + a_σ(s)})`
/// with `a_i = ℓ*(μ^(i))` and `λ` the partition of the `a_i`.
pub fn weight_we(profiles: &[Partition], q: &Scalar) -> Result<Scalar> {
    let a = colengths(profiles)?;
    let k = a.len();
    let mut acc = Scalar::zero();
    for sigma in permutations(k) {
        let exp: usize = sigma.iter().enumerate().map(|(r, &i)| (k - 1 - r) * a[i]).sum();
        let mut den = Scalar::one();
        let mut partial = 0;
        for &i in &sigma {
            partial += a[i];
            den = den.checked_mul(&one_minus_q_pow(q, partial))?;
        }
        acc = acc.checked_add(&q.pow(exp as u32).checked_div(&den)?)?;
    }
    let aut = Partition::from_parts(a).aut_order();
    Ok(acc.scale(&Rational::new(BigInt::one(), aut)))
}

/// `W_H = (-1)^{ℓ*(λ)} |aut λ|^{-1} Σ_σ 1 / Π_s (1 - q^{a_σ(s) + ⋯ + a_σ(k)})`.
pub fn weight_wh(profiles: &[Partition], q: &Scalar) -> Result<Scalar> {
    let a = colengths(profiles)?;
    let lambda = Partition::from_parts(a.clone());
    let mut acc = Scalar::zero();
    for sigma in permutations(a.len()) {
        let mut den = Scalar::one();
        let mut tail = 0;
        for &i in sigma.iter().rev() {
            tail += a[i];
            den = den.checked_mul(&one_minus_q_pow(q, tail))?;
        }
        acc = acc.checked_add(&den.recip()?)?;
    }
    let sign = if lambda.colength().is_multiple_of(2) { 1 } else { -1 };
    Ok(acc.scale(&Rational::new(BigInt::from(sign), lambda.aut_order())))
}

/// Profiles carried by one colour: class I from the numerator factors,
/// class II from the denominator factors of the generating function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ColourGroup {
    pub class_one: Vec<Partition>,
    pub class_two: Vec<Partition>,
}

impl ColourGroup {
    pub fn class_one_colength(&self) -> usize {
        self.class_one.iter().map(Partition::colength).sum()
    }

    pub fn colength(&self) -> usize {
        self.class_one_colength() + self.class_two.iter().map(Partition::colength).sum::<usize>()
    }

    pub fn profiles(&self) -> impl Iterator<Item = &Partition> {
        self.class_one.iter().chain(&self.class_two)
    }
}

/// Colour groups with weakly decreasing colengths; the colength partition
/// is `λ = (d_1, …, d_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchConfiguration {
    pub groups: Vec<ColourGroup>,
}

impl BranchConfiguration {
    pub fn species(&self) -> usize {
        self.groups.len()
    }

    pub fn colength_partition(&self) -> Partition {
        Partition::from_parts(self.groups.iter().map(ColourGroup::colength).collect())
    }

    pub fn class_one_colength(&self) -> usize {
        self.groups.iter().map(ColourGroup::class_one_colength).sum()
    }

    pub fn profiles(&self) -> impl Iterator<Item = &Partition> {
        self.groups.iter().flat_map(ColourGroup::profiles)
    }
}

/// Multisets of nontrivial classes of `S_n` with total colength in `0..=max`.
fn profile_multisets(classes: &[Partition], max: usize) -> Vec<Vec<Partition>> {
    fn rec(
        classes: &[Partition],
        start: usize,
        budget: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        out.push(cur.clone());
        for i in start..classes.len() {
            let a = classes[i].colength();
            if a <= budget {
                cur.push(classes[i].clone());
                rec(classes, i, budget - a, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(classes, 0, max, &mut Vec::new(), &mut out);
    out
}

fn total_colength(ps: &[Partition]) -> usize {
    ps.iter().map(Partition::colength).sum()
}

/// Nonempty colour groups of colength at most `d` allowed for `kind`.
pub fn colour_groups(n: usize, d: usize, kind: FamilyKind) -> Result<Vec<ColourGroup>> {
    let classes = nontrivial_classes(n)?;
    let sets = profile_multisets(&classes, d);
    let mut out = Vec::new();
    match kind {
        FamilyKind::Macdonald | FamilyKind::HallLittlewood => {
            for one in &sets {
                for two in &sets {
                    let c = total_colength(one) + total_colength(two);
                    if c >= 1 && c <= d {
                        out.push(ColourGroup {
                            class_one: one.clone(),
                            class_two: two.clone(),
                        });
                    }
                }
            }
        }
        FamilyKind::Elementary => {
            out.extend(sets.iter().filter(|s| !s.is_empty()).map(|s| ColourGroup {
                class_one: s.clone(),
                class_two: vec![],
            }));
        }
        FamilyKind::Complete | FamilyKind::Classical | FamilyKind::Jack => {
            out.extend(sets.iter().filter(|s| !s.is_empty()).map(|s| ColourGroup {
                class_one: vec![],
                class_two: s.clone(),
            }));
        }
    }
    out.sort_by(|a, b| b.colength().cmp(&a.colength()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// All configurations with total colength `d`.
pub fn branch_configurations(n: usize, d: usize, kind: FamilyKind) -> Result<Vec<BranchConfiguration>> {
    check_bounds(n, d)?;
    let groups = colour_groups(n, d, kind)?;
    let mut out = Vec::new();
    fn rec(
        groups: &[ColourGroup],
        remaining: usize,
        cap: usize,
        cur: &mut Vec<ColourGroup>,
        out: &mut Vec<BranchConfiguration>,
    ) {
        if remaining == 0 {
            out.push(BranchConfiguration { groups: cur.clone() });
            return;
        }
        for g in groups {
            let c = g.colength();
            if c <= cap && c <= remaining {
                cur.push(g.clone());
                rec(groups, remaining - c, c, cur, out);
                cur.pop();
            }
        }
    }
    rec(&groups, d, d, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Π m_i!` over repeated identical profiles.
fn profile_multiplicity_factorials(ps: &[Partition]) -> BigInt {
    let mut m: BTreeMap<&Partition, usize> = BTreeMap::new();
    for p in ps {
        *m.entry(p).or_insert(0) += 1;
    }
    m.into_values().fold(BigInt::one(), |acc, k| acc * factorial(k))
}

fn multiset_factor(ps: &[Partition]) -> Rational {
    let aut = Partition::from_parts(ps.iter().map(Partition::colength).collect()).aut_order();
    Rational::new(aut, profile_multiplicity_factorials(ps))
}

/// The `q` used by the geometric sums of a family.
fn geometric_q(family: &WeightFamily) -> Scalar {
    match family.kind() {
        FamilyKind::HallLittlewood | FamilyKind::Classical => Scalar::zero(),
        _ => family.q().clone(),
    }
}

/// Weight of one colour group, without the `t^e` marker.
pub fn group_weight(group: &ColourGroup, family: &WeightFamily) -> Result<Scalar> {
    let q = geometric_q(family);
    match family.kind() {
        FamilyKind::Jack => {
            let k = group.class_two.len();
            let a = -family.alpha().recip()?;
            let sign = if group.colength().is_multiple_of(2) { 1 } else { -1 };
            let f = Rational::new(
                BigInt::from(sign) * factorial(k),
                profile_multiplicity_factorials(&group.class_two),
            );
            Ok(generalized_binomial(&a, k).scale(&f))
        }
        kind => {
            let mut w = Scalar::one();
            if !group.class_one.is_empty() {
                let mut we = weight_we(&group.class_one, &q)?.scale(&multiset_factor(&group.class_one));
                if kind != FamilyKind::Elementary && group.class_one_colength() % 2 == 1 {
                    we = -we;
                }
                w = w.checked_mul(&we)?;
            }
            if !group.class_two.is_empty() {
                let wh = weight_wh(&group.class_two, &q)?.scale(&multiset_factor(&group.class_two));
                w = w.checked_mul(&wh)?;
            }
            Ok(w)
        }
    }
}

/// `m_λ(c)`: the monomial symmetric function at a finite list.
pub fn monomial_value(lambda: &Partition, c: &[Rational]) -> Rational {
    fn rec(parts: &[usize], c: &[Rational], used: &mut [bool]) -> Rational {
        let Some((&k, rest)) = parts.split_first() else {
            return Rational::one();
        };
        let mut acc = Rational::zero();
        for i in 0..c.len() {
            if !used[i] && !c[i].is_zero() {
                used[i] = true;
                acc += num_traits::pow(c[i].clone(), k) * rec(rest, c, used);
                used[i] = false;
            }
        }
        acc
    }
    if lambda.len() > c.len() {
        return Rational::zero();
    }
    let total = rec(lambda.parts(), c, &mut vec![false; c.len()]);
    total / Rational::from_integer(lambda.aut_order())
}

/// `Σ configurations` weight without `t^e`: the product of group weights
/// times `m_λ(c)` of the colength partition.
pub fn configuration_weight(cfg: &BranchConfiguration, family: &WeightFamily) -> Result<Scalar> {
    let m = monomial_value(&cfg.colength_partition(), family.c());
    if m.is_zero() {
        return Ok(Scalar::zero());
    }
    let mut w = Scalar::from_rational(m);
    for g in &cfg.groups {
        w = w.checked_mul(&group_weight(g, family)?)?;
    }
    Ok(w)
}

fn eigenvalue_product<'a>(
    table: &CharacterTable,
    lambda: &Partition,
    profiles: impl Iterator<Item = &'a Partition>,
) -> Rational {
    profiles.fold(Rational::one(), |acc, p| acc * table.central_character(lambda, p))
}

/// `E^(e)_λ = Σ_{configurations with class-I colength e} weight · Π φ_λ(profiles)`.
fn geometric_eigenvalues(n: usize, d: usize, family: &WeightFamily) -> Result<Vec<BTreeMap<Partition, Scalar>>> {
    let table = char_table(n)?;
    let mut out = vec![BTreeMap::new(); d + 1];
    for cfg in branch_configurations(n, d, family.kind())? {
        let w = configuration_weight(&cfg, family)?;
        if w.is_zero() {
            continue;
        }
        let e = cfg.class_one_colength();
        for lambda in &table.irreps {
            let phi = eigenvalue_product(&table, lambda, cfg.profiles());
            if phi.is_zero() {
                continue;
            }
            let slot = out[e].entry(lambda.clone()).or_insert_with(Scalar::zero);
            *slot = slot.checked_add(&w.scale(&phi))?;
        }
    }
    Ok(out)
}

/// `(z_μ z_ν)^{-1} Σ_λ E_λ χ_λ(μ) χ_λ(ν)`, the identity coefficient of
/// `(1/n!) Σ_λ E_λ F_λ C_μ C_ν`.
fn class_table_from_eigenvalues(
    n: usize,
    d: usize,
    e: Option<usize>,
    family: &WeightFamily,
    eig: &BTreeMap<Partition, Scalar>,
) -> Result<ClassTable> {
    let table = char_table(n)?;
    ClassTable::try_build(n, d, e, family.clone(), |mu, nu| {
        let mut acc = Scalar::zero();
        for (lambda, v) in eig {
            let chi = table.value(lambda, mu) * table.value(lambda, nu);
            if chi != 0 {
                acc = acc.checked_add(&v.scale(&Rational::from_integer(BigInt::from(chi))))?;
            }
        }
        Ok::<_, HurwitzError>(acc.scale(&Rational::new(BigInt::one(), mu.z() * nu.z())))
    })
}

/// `H^(d,e)(μ,ν)` for `e = 0, …, d`.
pub fn hde_all(n: usize, d: usize, family: &WeightFamily) -> Result<Vec<ClassTable>> {
    check_bounds(n, d)?;
    geometric_eigenvalues(n, d, family)?
        .iter()
        .enumerate()
        .map(|(e, eig)| class_table_from_eigenvalues(n, d, Some(e), family, eig))
        .collect()
}

/// `H^(d,e)(μ,ν)`: the sum over branch configurations of total colength
/// `d` whose class-I profiles have total colength `e`.
pub fn hde_geometric(n: usize, d: usize, e: usize, family: &WeightFamily) -> Result<ClassTable> {
    check_bounds(n, d)?;
    if e > d {
        return class_table_from_eigenvalues(n, d, Some(e), family, &BTreeMap::new());
    }
    let eig = geometric_eigenvalues(n, d, family)?;
    class_table_from_eigenvalues(n, d, Some(e), family, &eig[e])
}

/// `Σ_e t^e H^(d,e)` (families without `t` put everything at one `e`).
pub fn fd_geometric(n: usize, d: usize, family: &WeightFamily) -> Result<ClassTable> {
    check_bounds(n, d)?;
    let t = if family.kind().has_t() {
        family.t().clone()
    } else {
        Scalar::one()
    };
    let eig = geometric_eigenvalues(n, d, family)?;
    let mut total: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (e, part) in eig.iter().enumerate() {
        let te = t.pow(e as u32);
        for (lambda, v) in part {
            let slot = total.entry(lambda.clone()).or_insert_with(Scalar::zero);
            *slot = slot.checked_add(&v.checked_mul(&te)?)?;
        }
    }
    class_table_from_eigenvalues(n, d, None, family, &total)
}

/// `F^d(μ,ν) = (z_μ z_ν)^{-1} Σ_λ χ_λ(μ) χ_λ(ν) [z^d] r_λ(0)`.
pub fn fd_character(n: usize, d: usize, family: &WeightFamily) -> Result<ClassTable> {
    let schur: BTreeMap<Partition, _> = enumerate_partitions(n)?
        .into_iter()
        .map(|l| Ok((l.clone(), r_lambda(&l, 0, family, d)?.series)))
        .collect::<Result<_>>()?;
    let cells = schur_to_powersum(n, d, &schur)?;
    ClassTable::try_build(n, d, None, family.clone(), |mu, nu| {
        Ok::<_, HurwitzError>(cells[&(mu.clone(), nu.clone())].clone())
    })
}

/// Outcome of comparing `g_j(J)` with its expansion over colour groups.
#[derive(Clone, Debug, Serialize)]
pub struct GjCheck {
    pub n: usize,
    pub j: usize,
    /// `(q, t)` when evaluated at a point, `None` when symbolic.
    pub point: Option<(String, String)>,
    pub lhs: CentralElement,
    pub rhs: CentralElement,
    pub passed: bool,
}

/// Compare `g_j(J_1, …, J_n)` for `c = (1)` with
/// `Σ_groups t^e · weight · Π C_profiles`, symbolically or at `(q, t)`.
pub fn gj_cycle_expansion_check(n: usize, j: usize, point: Option<(Rational, Rational)>) -> Result<GjCheck> {
    check_bounds(n, j)?;
    let mut family = WeightFamily::new(FamilyKind::Macdonald, vec![Rational::one()]);
    if let Some((q, t)) = &point {
        family = family.bind(Param::Q, q.clone())?.bind(Param::T, t.clone())?;
    }
    let alg = SymmetricAlgebra::new(family.q().clone(), family.t().clone(), Scalar::one())?;
    let g = SymmetricFunction::basis_element(Basis::G, &Partition::from_parts(if j == 0 { vec![] } else { vec![j] }));
    let lhs = jm_symmetric_apply(&alg, &g, n)?.to_basis(CentralBasis::C)?;

    let table = char_table(n)?;
    let mut rhs = CentralElement::zero(n, CentralBasis::F);
    if j == 0 {
        rhs = CentralElement::identity(n);
    } else {
        for group in colour_groups(n, j, FamilyKind::Macdonald)? {
            if group.colength() != j {
                continue;
            }
            let w = group_weight(&group, &family)?
                .checked_mul(&family.t().pow(group.class_one_colength() as u32))?;
            let term = CentralElement::from_coeffs(
                n,
                CentralBasis::F,
                table.irreps.iter().map(|lambda| {
                    let phi = eigenvalue_product(&table, lambda, group.profiles());
                    (lambda.clone(), w.scale(&phi))
                }),
            )?;
            rhs = rhs.add(&term)?;
        }
    }
    let rhs = rhs.to_basis(CentralBasis::C)?;
    Ok(GjCheck {
        n,
        j,
        point: point.map(|(q, t)| (q.to_string(), t.to_string())),
        passed: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::fd_bruteforce;
    use crate::scalar::{int, ratio, ParamSet};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q_sym() -> Scalar {
        ParamSet::of(&[Param::Q]).var(Param::Q).unwrap()
    }

    /// Power series coefficients in `q` of a rational function in `q` alone.
    fn q_expand(s: &Scalar, order: usize) -> Vec<Rational> {
        let coeffs = |poly: &crate::scalar::Poly| {
            let mut v = vec![Rational::zero(); order + 1];
            for (m, c) in poly.terms() {
                let e = m.exp(Param::Q) as usize;
                if e <= order {
                    v[e] += c;
                }
            }
            v
        };
        let (num, den) = (coeffs(s.numer()), coeffs(s.denom()));
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = num[k].clone();
            for j in 1..=k {
                acc -= &den[j] * &out[k - j];
            }
            out.push(acc / &den[0]);
        }
        out
    }

    fn index_tuples(k: usize, max: usize) -> Vec<Vec<usize>> {
        (0..k).fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|t| (0..=max).map(move |i| [t.clone(), vec![i]].concat()))
                .collect()
        })
    }

    #[test]
    fn pure_hurwitz_examples() {
        assert_eq!(pure_hurwitz(&[p(&[2]), p(&[2])], 2).unwrap(), ratio(1, 2));
        assert_eq!(pure_hurwitz(&[p(&[2]), p(&[2]), p(&[2])], 2).unwrap(), int(0));
        assert_eq!(pure_hurwitz(&[p(&[3]), p(&[3])], 3).unwrap(), ratio(1, 3));
        assert!(pure_hurwitz(&[p(&[2]), p(&[3])], 2).is_err());
        assert!(pure_hurwitz(&[], 2).is_err());
    }

    #[test]
    fn pure_hurwitz_matches_factorization_counts() {
        for n in 1..=4 {
            let classes = enumerate_partitions(n).unwrap();
            for a in &classes {
                for b in &classes {
                    for c in &classes {
                        let ps = [a.clone(), b.clone(), c.clone()];
                        assert_eq!(pure_hurwitz(&ps, n).unwrap(), pure_hurwitz_bruteforce(&ps, n).unwrap());
                        let rev = [c.clone(), a.clone(), b.clone()];
                        assert_eq!(pure_hurwitz(&ps, n).unwrap(), pure_hurwitz(&rev, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn weight_examples() {
        let q = q_sym();
        let one = Scalar::one();
        let w1 = one.clone() / (&one - &q);
        assert_eq!(weight_we(&[p(&[2])], &q).unwrap(), w1);
        assert_eq!(weight_wh(&[p(&[2])], &q).unwrap(), w1);
        let two = weight_we(&[p(&[2]), p(&[2])], &q).unwrap();
        assert_eq!(two, &q / &((&one - &q) * (&one - q.pow(2))));
        assert!(matches!(weight_we(&[p(&[1, 1])], &q), Err(HurwitzError::ZeroColength(_))));
        assert!(weight_wh(&[], &q).is_err());
    }

    #[test]
    fn weights_match_truncated_sums() {
        const ORDER: usize = 20;
        let q = q_sym();
        let cases: Vec<Vec<Partition>> = vec![
            vec![p(&[2])],
            vec![p(&[3])],
            vec![p(&[2]), p(&[2])],
            vec![p(&[2, 1]), p(&[3])],
            vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[2, 1, 1])],
            vec![p(&[3, 1]), p(&[4]), p(&[2, 1, 1])],
        ];
        for profiles in cases {
            let a: Vec<usize> = profiles.iter().map(Partition::colength).collect();
            let lambda = Partition::from_parts(a.clone());
            let aut = Rational::from_integer(lambda.aut_order());
            let mut strict = vec![Rational::zero(); ORDER + 1];
            let mut weak = vec![Rational::zero(); ORDER + 1];
            for idx in index_tuples(a.len(), ORDER) {
                let e: usize = idx.iter().zip(&a).map(|(i, ai)| i * ai).sum();
                if e > ORDER {
                    continue;
                }
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() == idx.len() {
                    strict[e] += Rational::one();
                }
            }
            for sigma in permutations(a.len()) {
                for idx in index_tuples(a.len(), ORDER) {
                    if idx.windows(2).any(|w| w[0] > w[1]) {
                        continue;
                    }
                    let e: usize = idx.iter().zip(&sigma).map(|(i, &s)| i * a[s]).sum();
                    if e <= ORDER {
                        weak[e] += Rational::one();
                    }
                }
            }
            let sign = if lambda.colength().is_multiple_of(2) { int(1) } else { int(-1) };
            let strict: Vec<Rational> = strict.into_iter().map(|x| x / &aut).collect();
            let weak: Vec<Rational> = weak.into_iter().map(|x| x * &sign / &aut).collect();
            assert_eq!(q_expand(&weight_we(&profiles, &q).unwrap(), ORDER), strict, "{profiles:?}");
            assert_eq!(q_expand(&weight_wh(&profiles, &q).unwrap(), ORDER), weak, "{profiles:?}");
        }
    }

    #[test]
    fn monomial_values() {
        let c = vec![int(1), ratio(1, 2), int(3)];
        assert_eq!(monomial_value(&p(&[1]), &c), ratio(9, 2));
        assert_eq!(monomial_value(&p(&[1, 1]), &c), ratio(1, 2) + int(3) + ratio(3, 2));
        assert_eq!(monomial_value(&p(&[1, 1, 1, 1]), &c), int(0));
        assert_eq!(monomial_value(&Partition::empty(), &c), int(1));
    }

    #[test]
    fn configurations_are_ordered_by_colength() {
        let cfgs = branch_configurations(3, 3, FamilyKind::Macdonald).unwrap();
        for cfg in &cfgs {
            let ds: Vec<usize> = cfg.groups.iter().map(ColourGroup::colength).collect();
            assert!(ds.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(ds.iter().sum::<usize>(), 3);
        }
        assert_eq!(branch_configurations(2, 0, FamilyKind::Macdonald).unwrap().len(), 1);
        assert!(branch_configurations(6, 1, FamilyKind::Macdonald).is_err());
    }

    #[test]
    fn hde_small_cases() {
        let fam = WeightFamily::new(FamilyKind::Macdonald, vec![int(1)]);
        let h00 = hde_geometric(3, 0, 0, &fam).unwrap();
        for (mu, nu, v) in h00.cells() {
            let expected = if mu == nu { mu.z_rational().recip() } else { int(0) };
            assert_eq!(v, &Scalar::from_rational(expected));
        }
        assert!(hde_geometric(3, 1, 2, &fam).unwrap().cells().all(|(_, _, v)| v.is_zero()));
    }

    fn assert_polynomial_in_t_matches(fd: &ClassTable, hde: &[ClassTable], t: Param) {
        for (mu, nu, v) in fd.cells() {
            let coeffs = v.coefficients_in(t).expect("polynomial in t");
            assert!(coeffs.len() <= fd.d() + 1);
            for (e, h) in hde.iter().enumerate() {
                let c = coeffs.get(e).cloned().unwrap_or_else(Scalar::zero);
                assert_eq!(&c, h.get(mu, nu).unwrap(), "d={} e={e} {mu} {nu}", fd.d());
            }
        }
    }

    #[test]
    fn geometric_equals_combinatorial_macdonald() {
        for c in [vec![int(1)], vec![int(1), ratio(1, 2)]] {
            let fam = WeightFamily::new(FamilyKind::Macdonald, c);
            for n in 1..=3 {
                for d in 0..=3 {
                    let fd = fd_character(n, d, &fam).unwrap();
                    assert_eq!(fd, fd_bruteforce(n, d, &fam).unwrap());
                    assert_polynomial_in_t_matches(&fd, &hde_all(n, d, &fam).unwrap(), Param::T);
                }
            }
        }
    }

    #[test]
    fn geometric_equals_combinatorial_other_families() {
        let c = vec![int(1), ratio(-1, 3)];
        for kind in FamilyKind::ALL {
            let fam = WeightFamily::new(kind, c.clone());
            for n in 1..=3 {
                for d in 0..=3 {
                    let fd = fd_character(n, d, &fam).unwrap();
                    let geo = fd_geometric(n, d, &fam).unwrap();
                    assert!(fd.first_difference(&geo).is_none(), "{kind} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn character_route_small_examples() {
        let fam = WeightFamily::new(FamilyKind::Macdonald, vec![]);
        assert!(fd_character(3, 2, &fam).unwrap().cells().all(|(_, _, v)| v.is_zero()));
        let fam = WeightFamily::new(FamilyKind::Macdonald, vec![int(1)]);
        let f1 = fd_character(2, 1, &fam).unwrap();
        let g1 = fam.series(1).unwrap().coeff(1).clone();
        assert_eq!(f1.get(&p(&[2]), &p(&[1, 1])).unwrap(), &g1.scale(&ratio(1, 2)));
    }

    #[test]
    fn gj_expansion() {
        for n in 1..=3 {
            for j in 0..=3 {
                assert!(gj_cycle_expansion_check(n, j, None).unwrap().passed, "n={n} j={j}");
            }
        }
        let r = gj_cycle_expansion_check(4, 3, Some((ratio(2, 7), ratio(-5, 3)))).unwrap();
        assert!(r.passed);
        let g = gj_cycle_expansion_check(2, 1, None).unwrap();
        let one = Scalar::one();
        let fam = WeightFamily::new(FamilyKind::Macdonald, vec![int(1)]);
        assert_eq!(g.lhs.coeff(&p(&[2])), (&one - fam.t()) / (&one - fam.q()));
    }
}
