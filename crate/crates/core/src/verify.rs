//! Identity suites, one per acceptance criterion, with seeded evaluation
//! points and minimal counterexamples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::family::{FamilyError, FamilyKind, WeightFamily};
use crate::group_algebra::{
    enumerate_paths, fd_bruteforce, jm_symmetric_apply, CentralBasis, CentralElement,
    GroupAlgebraError,
};
use crate::hurwitz::{
    fd_character, gj_cycle_expansion_check, hde_all, pure_hurwitz, pure_hurwitz_bruteforce,
    HurwitzError,
};
use crate::partition::{enumerate_partitions, factorial, Partition, PartitionError};
use crate::scalar::{Param, ParamSet, Rational, Scalar, ScalarError, ZSeries};
use crate::symfun::{Basis, SymFunError, SymmetricAlgebra, SymmetricFunction};
use crate::tau::{tau_tables, TauError};

/// Largest numerator or denominator of a sampled evaluation point.
pub const SAMPLE_HEIGHT: i64 = 10_000;
/// Minimum number of evaluation points per numeric check.
pub const MIN_TRIALS: usize = 5;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    GroupAlgebra(#[from] GroupAlgebraError),
    #[error(transparent)]
    Tau(#[from] TauError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("command failed: {0}")]
    Command(String),
}

type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    TheoremCombinatorial,
    TheoremGeometric,
    GjCycleSums,
    PathEndomorphism,
    MacdonaldKernel,
    Pochhammer,
    PureHurwitz,
    Specializations,
    Determinism,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::TheoremCombinatorial,
        Criterion::TheoremGeometric,
        Criterion::GjCycleSums,
        Criterion::PathEndomorphism,
        Criterion::MacdonaldKernel,
        Criterion::Pochhammer,
        Criterion::PureHurwitz,
        Criterion::Specializations,
        Criterion::Determinism,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::TheoremCombinatorial => "theorem-combinatorial",
            Criterion::TheoremGeometric => "theorem-geometric",
            Criterion::GjCycleSums => "gj-cycle-sums",
            Criterion::PathEndomorphism => "path-endomorphism",
            Criterion::MacdonaldKernel => "macdonald-kernel",
            Criterion::Pochhammer => "pochhammer",
            Criterion::PureHurwitz => "pure-hurwitz",
            Criterion::Specializations => "specializations",
            Criterion::Determinism => "determinism",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Criterion::TheoremCombinatorial => "character route = path enumeration = tau power-sum slice",
            Criterion::TheoremGeometric => "F^d is a polynomial in t whose t^e coefficients are H^(d,e)",
            Criterion::GjCycleSums => "g_j(J) equals its expansion over colour groups",
            Criterion::PathEndomorphism => "m_lambda(J) C_mu = sum_nu m^lambda_{mu nu} (z_nu/n!) C_nu",
            Criterion::MacdonaldKernel => "Macdonald orthogonality, triangularity, q=t, q=0 and Cauchy slices",
            Criterion::Pochhammer => "(u)_lambda = h_lambda s_lambda(p_k = u)",
            Criterion::PureHurwitz => "Frobenius formula = factorization counts",
            Criterion::Specializations => "t=0, q=t, limit and alpha=1 specializations of the weights",
            Criterion::Determinism => "identical configurations give byte-identical output",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Criterion> {
        if let Ok(k) = s.parse::<usize>() {
            if (1..=9).contains(&k) {
                return Ok(Criterion::ALL[k - 1]);
            }
        }
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::UnknownCriterion(s.to_string()))
    }
}

/// Seeded source of evaluation points: rationals `a/b` with
/// `|a|, b ≤ SAMPLE_HEIGHT`, avoiding `0` and `±1`.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> PointSampler {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        loop {
            let a = self.rng.gen_range(-SAMPLE_HEIGHT..=SAMPLE_HEIGHT);
            let b = self.rng.gen_range(1..=SAMPLE_HEIGHT);
            let r = Rational::new(BigInt::from(a), BigInt::from(b));
            if !r.is_zero() && !r.abs().is_one() {
                return r;
            }
        }
    }

    pub fn pair(&mut self) -> (Rational, Rational) {
        (self.rational(), self.rational())
    }
}

/// Ranges and sampling for the suites.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub d_max: usize,
    pub c_lists: Vec<Vec<Rational>>,
    pub trials: usize,
    pub seed: u64,
    /// Largest `n` checked with symbolic parameters; larger `n` use points.
    pub symbolic_n_max: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            n_max: 5,
            d_max: 3,
            c_lists: vec![
                vec![Rational::one()],
                vec![Rational::one(), Rational::new(1.into(), 2.into())],
            ],
            trials: MIN_TRIALS,
            seed: DEFAULT_SEED,
            symbolic_n_max: 4,
        }
    }
}

impl VerifyOptions {
    fn trials(&self) -> usize {
        self.trials.max(MIN_TRIALS)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub criterion: Criterion,
    pub checks: Vec<Check>,
    /// First failure, in increasing `(n, d, μ, ν, point)` order.
    pub counterexample: Option<String>,
}

impl VerifyReport {
    fn new(criterion: Criterion) -> VerifyReport {
        VerifyReport {
            criterion,
            checks: Vec::new(),
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, label: String, failure: Option<String>) {
        let passed = failure.is_none();
        if let Some(f) = failure {
            if self.counterexample.is_none() {
                self.counterexample = Some(format!("{label}: {f}"));
            }
        }
        self.checks.push(Check { label, passed });
    }

    fn ok(&mut self, label: String, passed: bool, detail: impl FnOnce() -> String) {
        self.record(label, (!passed).then(detail));
    }

    pub fn summary(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.passed).count();
        format!(
            "[{}] criterion {} {}: {}/{} checks",
            if self.passed() { "PASS" } else { "FAIL" },
            self.criterion.number(),
            self.criterion.name(),
            passed,
            self.checks.len()
        )
    }

    /// Summary, each check, and the counterexample if any.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.summary());
        for c in &self.checks {
            out.push_str(&format!("  {} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.label));
        }
        if let Some(cx) = &self.counterexample {
            out.push_str(&format!("  counterexample: {cx}\n"));
        }
        out
    }
}

pub fn run(criterion: Criterion, opts: &VerifyOptions) -> Result<VerifyReport> {
    match criterion {
        Criterion::TheoremCombinatorial => theorem_combinatorial(opts),
        Criterion::TheoremGeometric => theorem_geometric(opts),
        Criterion::GjCycleSums => gj_cycle_sums(opts),
        Criterion::PathEndomorphism => path_endomorphism(opts),
        Criterion::MacdonaldKernel => macdonald_kernel(opts),
        Criterion::Pochhammer => pochhammer(opts),
        Criterion::PureHurwitz => pure_hurwitz_counts(opts),
        Criterion::Specializations => specializations(opts),
        Criterion::Determinism => determinism(opts),
    }
}

fn fmt_c(c: &[Rational]) -> String {
    let s: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

fn fmt_point(p: &Option<(Rational, Rational)>) -> String {
    match p {
        None => "symbolic".to_string(),
        Some((q, t)) => format!("q={q}, t={t}"),
    }
}

/// Symbolic for `n ≤ symbolic_n_max`, plus `trials` seeded points when `n`
/// is above that bound or is the largest `n` checked.
fn points_for(n: usize, opts: &VerifyOptions, sampler: &mut PointSampler) -> Vec<Option<(Rational, Rational)>> {
    let mut points = Vec::new();
    if n <= opts.symbolic_n_max {
        points.push(None);
    }
    if n > opts.symbolic_n_max || n == opts.n_max {
        points.extend((0..opts.trials()).map(|_| Some(sampler.pair())));
    }
    points
}

fn macdonald_at(c: &[Rational], point: &Option<(Rational, Rational)>) -> Result<WeightFamily> {
    let fam = WeightFamily::new(FamilyKind::Macdonald, c.to_vec());
    Ok(match point {
        None => fam,
        Some((q, t)) => fam.bind(Param::Q, q.clone())?.bind(Param::T, t.clone())?,
    })
}

fn theorem_combinatorial(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::TheoremCombinatorial);
    let mut sampler = PointSampler::new(opts.seed);
    for n in 2..=opts.n_max {
        let points = points_for(n, opts, &mut sampler);
        for d in 0..=opts.d_max {
            for c in &opts.c_lists {
                for point in &points {
                    let fam = macdonald_at(c, point)?;
                    let chr = fd_character(n, d, &fam)?;
                    let paths = fd_bruteforce(n, d, &fam)?;
                    let slice = tau_tables(n, d, 0, &fam)?.powersum_slice(n, d);
                    for (mu, nu, v) in chr.cells() {
                        let by_paths = paths.get(mu, nu).cloned().unwrap_or_else(Scalar::zero);
                        let by_tau = slice.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_else(Scalar::zero);
                        let label = format!("n={n} d={d} mu={mu} nu={nu} c={} {}: {v}", fmt_c(c), fmt_point(point));
                        let failure = if &by_paths != v {
                            Some(format!("path enumeration gives {by_paths}"))
                        } else if &by_tau != v {
                            Some(format!("tau slice gives {by_tau}"))
                        } else {
                            None
                        };
                        report.record(label, failure);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn theorem_geometric(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::TheoremGeometric);
    let mut sampler = PointSampler::new(opts.seed.wrapping_add(1));
    for n in 2..=opts.n_max {
        let qs: Vec<Option<Rational>> = points_for(n, opts, &mut sampler)
            .into_iter()
            .map(|p| p.map(|(q, _)| q))
            .collect();
        for d in 0..=opts.d_max {
            for c in &opts.c_lists {
                for q in &qs {
                    let mut fam = WeightFamily::new(FamilyKind::Macdonald, c.clone());
                    if let Some(q) = q {
                        fam = fam.bind(Param::Q, q.clone())?;
                    }
                    let fd = fd_character(n, d, &fam)?;
                    let hde = hde_all(n, d, &fam)?;
                    let where_q = match q {
                        None => "q symbolic".to_string(),
                        Some(q) => format!("q={q}"),
                    };
                    for (mu, nu, v) in fd.cells() {
                        let label = format!("n={n} d={d} mu={mu} nu={nu} c={} {where_q}: {v}", fmt_c(c));
                        let failure = match v.coefficients_in(Param::T) {
                            Err(_) => Some("not polynomial in t".to_string()),
                            Ok(cs) if cs.len() > d + 1 => Some(format!("t-degree {} > {d}", cs.len() - 1)),
                            Ok(cs) => (0..=d)
                                .find(|&e| {
                                    let ce = cs.get(e).cloned().unwrap_or_else(Scalar::zero);
                                    Some(&ce) != hde[e].get(mu, nu)
                                })
                                .map(|e| format!("t^{e} coefficient differs from H^(d,e) = {:?}", hde[e].get(mu, nu).map(ToString::to_string))),
                        };
                        report.record(label, failure);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn gj_cycle_sums(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::GjCycleSums);
    let mut sampler = PointSampler::new(opts.seed.wrapping_add(2));
    for n in 2..=opts.n_max {
        let points = points_for(n, opts, &mut sampler);
        for j in 1..=opts.d_max {
            for point in &points {
                let check = gj_cycle_expansion_check(n, j, point.clone())?;
                let label = format!("n={n} j={j} {}", fmt_point(point));
                let detail = || {
                    let diff = check
                        .lhs
                        .coeffs()
                        .keys()
                        .chain(check.rhs.coeffs().keys())
                        .find(|k| check.lhs.coeff(k) != check.rhs.coeff(k))
                        .map(|k| format!("C_{k}: {} vs {}", check.lhs.coeff(k), check.rhs.coeff(k)));
                    diff.unwrap_or_default()
                };
                report.ok(label, check.passed, detail);
            }
        }
    }
    Ok(report)
}

fn path_endomorphism(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::PathEndomorphism);
    let alg = SymmetricAlgebra::new(Scalar::zero(), Scalar::zero(), Scalar::one())?;
    for n in 1..=opts.n_max {
        let classes = enumerate_partitions(n)?;
        let nfact = Rational::from_integer(factorial(n));
        for d in 0..=opts.d_max {
            let paths = enumerate_paths(n, d)?;
            for lambda in enumerate_partitions(d)? {
                let ml = jm_symmetric_apply(&alg, &SymmetricFunction::basis_element(Basis::M, &lambda), n)?;
                let mut failure = None;
                for mu in &classes {
                    let lhs = CentralElement::class_sum(mu).multiply(&ml)?;
                    let rhs = CentralElement::from_coeffs(
                        n,
                        CentralBasis::C,
                        classes.iter().map(|nu| {
                            let c = paths.normalized(&lambda, mu, nu) * nu.z_rational() / &nfact;
                            (nu.clone(), Scalar::from_rational(c))
                        }),
                    )?;
                    if lhs != rhs {
                        let nu = classes.iter().find(|nu| lhs.coeff(nu) != rhs.coeff(nu));
                        failure = nu.map(|nu| format!("mu={mu} nu={nu}: {} vs {}", lhs.coeff(nu), rhs.coeff(nu)));
                        break;
                    }
                }
                report.record(format!("n={n} lambda={lambda}"), failure);
            }
        }
    }
    Ok(report)
}

/// Degrees for the Macdonald checks.
pub const MACDONALD_ORTHOGONALITY_DEGREE: usize = 6;
pub const MACDONALD_SCHUR_DEGREE: usize = 5;
pub const MACDONALD_CAUCHY_DEGREE: usize = 4;

fn macdonald_kernel(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::MacdonaldKernel);
    let qt = ParamSet::of(&[Param::Q, Param::T]);
    let (q, t) = (qt.var(Param::Q)?, qt.var(Param::T)?);
    let alg = SymmetricAlgebra::new(q.clone(), t.clone(), Scalar::one())?;
    for n in 1..=MACDONALD_ORTHOGONALITY_DEGREE {
        let parts = enumerate_partitions(n)?;
        let ps = parts
            .iter()
            .map(|l| alg.macdonald_p(l))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut failure = None;
        for (a, pa) in parts.iter().zip(&ps) {
            if !pa.coeff(a).is_one() {
                failure = Some(format!("leading coefficient of P_{a} is {}", pa.coeff(a)));
            }
            if let Some(mu) = pa.coeffs().keys().find(|mu| !mu.dominated_by(a)) {
                failure = Some(format!("m_{mu} occurs in P_{a}"));
            }
        }
        report.record(format!("unitriangularity |lambda|={n}"), failure);
        let mut failure = None;
        for (i, (a, pa)) in parts.iter().zip(&ps).enumerate() {
            for (b, pb) in parts.iter().zip(&ps).skip(i + 1) {
                let s = alg.scalar_product_qt(pa, pb)?;
                if !s.is_zero() && failure.is_none() {
                    failure = Some(format!("(P_{a}, P_{b}) = {s}"));
                }
            }
        }
        report.record(format!("orthogonality |lambda|={n}"), failure);
    }

    let tt = ParamSet::of(&[Param::T]).var(Param::T)?;
    let diag = SymmetricAlgebra::new(tt.clone(), tt, Scalar::one())?;
    for n in 1..=MACDONALD_SCHUR_DEGREE {
        let mut failure = None;
        for lambda in enumerate_partitions(n)? {
            let mac = diag.to_p(&diag.macdonald_p(&lambda)?)?;
            if mac != diag.schur(&lambda)? {
                failure = Some(format!("P_{lambda} at q=t is not s_{lambda}"));
                break;
            }
        }
        report.record(format!("q=t gives Schur |lambda|={n}"), failure);
    }

    let hl = SymmetricAlgebra::new(Scalar::zero(), ParamSet::of(&[Param::T]).var(Param::T)?, Scalar::one())?;
    let t_only = hl.t().clone();
    for c in &opts.c_lists {
        let order = MACDONALD_CAUCHY_DEGREE;
        let factors = c
            .iter()
            .map(|ci| {
                let cz = Scalar::from_rational(ci.clone());
                let geo = (0..=order).map(|k| Scalar::from_rational(num_traits::pow(ci.clone(), k)));
                ZSeries::new(order, [Scalar::one(), -(&t_only * &cz)]).mul(&ZSeries::new(order, geo))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let product = ZSeries::mul_many(order, &factors)?;
        let mut failure = None;
        for n in 0..=order {
            for lambda in enumerate_partitions(n)? {
                let g = hl.evaluate(&SymmetricFunction::basis_element(Basis::G, &lambda), c)?;
                let direct = lambda
                    .parts()
                    .iter()
                    .fold(Scalar::one(), |acc, &k| acc * product.coeff(k));
                if g != direct {
                    failure = Some(format!("g_{lambda}(q=0) = {g}, product gives {direct}"));
                }
            }
        }
        report.record(format!("q=0 g_lambda = Hall-Littlewood q_lambda, c={}", fmt_c(c)), failure);
    }
    let schur_alg = SymmetricAlgebra::new(Scalar::zero(), Scalar::zero(), Scalar::one())?;
    let mut failure = None;
    for n in 1..=MACDONALD_CAUCHY_DEGREE {
        for lambda in enumerate_partitions(n)? {
            if schur_alg.to_p(&schur_alg.macdonald_p(&lambda)?)? != schur_alg.schur(&lambda)? {
                failure = Some(format!("P_{lambda} at q=t=0 is not s_{lambda}"));
            }
        }
    }
    report.record("q=t=0 gives Schur |lambda|<=4".to_string(), failure);

    for n in 1..=MACDONALD_CAUCHY_DEGREE {
        let parts = enumerate_partitions(n)?;
        let pcoords = parts
            .iter()
            .map(|l| Ok((alg.b_lambda(l)?, alg.to_p(&alg.macdonald_p(l)?)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut failure = None;
        for mu in &parts {
            for nu in &parts {
                let mut acc = Scalar::zero();
                for (b, pl) in &pcoords {
                    acc = acc + b * &pl.coeff(mu) * pl.coeff(nu);
                }
                let expected = if mu == nu { alg.z_qt(mu).recip()? } else { Scalar::zero() };
                if acc != expected && failure.is_none() {
                    failure = Some(format!("p_{mu} p_{nu} coefficient {acc}"));
                }
            }
        }
        report.record(format!("Cauchy kernel slice degree {n}"), failure);
    }
    Ok(report)
}

/// Largest `|λ|` in the Pochhammer check.
pub const POCHHAMMER_DEGREE: usize = 6;

fn pochhammer(_opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::Pochhammer);
    let alg = SymmetricAlgebra::new(Scalar::zero(), Scalar::zero(), Scalar::one())?;
    let uctx = ParamSet::of(&[Param::U]);
    let u = uctx.var(Param::U)?;
    for n in 0..=POCHHAMMER_DEGREE {
        let mut failure = None;
        for lambda in enumerate_partitions(n)? {
            let s = alg.schur(&lambda)?;
            let mut at_u = Scalar::zero().in_context(uctx)?;
            for (mu, c) in s.coeffs() {
                at_u = at_u.checked_add(&u.pow(mu.len() as u32).checked_mul(c)?)?;
            }
            let rhs = at_u.scale(&Rational::from_integer(lambda.hook_product()));
            let lhs = lambda.pochhammer();
            if lhs != rhs {
                failure = Some(format!("lambda={lambda}: {lhs} vs {rhs}"));
                break;
            }
        }
        report.record(format!("|lambda|={n}"), failure);
    }
    Ok(report)
}

/// Largest number of profiles in the pure Hurwitz check.
pub const PURE_HURWITZ_PROFILES: usize = 4;

fn pure_hurwitz_counts(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::PureHurwitz);
    let known = [
        (vec![vec![2], vec![2]], 2, Rational::new(1.into(), 2.into())),
        (vec![vec![3], vec![3]], 3, Rational::new(1.into(), 3.into())),
        (vec![vec![2], vec![2], vec![2]], 2, Rational::zero()),
    ];
    for (profiles, n, expected) in known {
        let ps: Vec<Partition> = profiles.into_iter().map(Partition::from_parts).collect();
        let v = pure_hurwitz(&ps, n)?;
        let label = format!("H{ps:?} = {expected}");
        report.ok(label, v == expected, || format!("got {v}"));
    }
    for n in 1..=opts.n_max {
        let classes = enumerate_partitions(n)?;
        for k in 1..=PURE_HURWITZ_PROFILES {
            let mut failure = None;
            let mut count = 0;
            for combo in multisets(classes.len(), k) {
                let ps: Vec<Partition> = combo.iter().map(|&i| classes[i].clone()).collect();
                let (a, b) = (pure_hurwitz(&ps, n)?, pure_hurwitz_bruteforce(&ps, n)?);
                count += 1;
                if a != b && failure.is_none() {
                    let names: Vec<String> = ps.iter().map(ToString::to_string).collect();
                    failure = Some(format!("profiles {}: Frobenius {a}, count {b}", names.join(" ")));
                }
            }
            report.record(format!("n={n} k={k}: {count} profile multisets"), failure);
        }
    }
    Ok(report)
}

fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(len, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Series order of the specialization checks.
pub const SPECIALIZATION_ORDER: usize = 3;

/// `h_j(c)` by summing all monomials of degree `j`.
fn complete_homogeneous(c: &[Rational], j: usize) -> Rational {
    multisets(c.len(), j)
        .into_iter()
        .map(|idx| idx.iter().fold(Rational::one(), |acc, &i| acc * &c[i]))
        .sum()
}

fn specializations(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::Specializations);
    let order = SPECIALIZATION_ORDER;
    for c in &opts.c_lists {
        let mac = WeightFamily::new(FamilyKind::Macdonald, c.clone());
        let at_t0 = mac.clone().bind(Param::T, Rational::zero())?.series(order)?;
        let complete = WeightFamily::new(FamilyKind::Complete, c.clone()).series(order)?;
        report.ok(format!("Macdonald t=0 = complete, c={}", fmt_c(c)), at_t0 == complete, || {
            format!("{at_t0:?} vs {complete:?}")
        });

        let g = mac.series(order)?;
        let e = WeightFamily::new(FamilyKind::Elementary, c.clone()).series(order)?;
        let mut failure = None;
        for j in 0..=order {
            let coeffs = g.coeff(j).coefficients_in(Param::T)?;
            let tj = coeffs.get(j).cloned().unwrap_or_else(Scalar::zero);
            let limit = if j % 2 == 0 { tj } else { -tj };
            if &limit != e.coeff(j) {
                failure = Some(format!("j={j}: {limit} vs {}", e.coeff(j)));
                break;
            }
        }
        report.record(format!("elementary = (-1)^j [t^j] g_j, c={}", fmt_c(c)), failure);

        let jack = WeightFamily::new(FamilyKind::Jack, c.clone())
            .bind(Param::Alpha, Rational::one())?
            .series(order)?;
        let mut failure = None;
        for j in 0..=order {
            let h = Scalar::from_rational(complete_homogeneous(c, j));
            if jack.coeff(j) != &h {
                failure = Some(format!("j={j}: {} vs h_j(c) = {h}", jack.coeff(j)));
                break;
            }
        }
        report.record(format!("Jack alpha=1 = h_j(c), c={}", fmt_c(c)), failure);

        let q = ParamSet::of(&[Param::Q]).var(Param::Q)?;
        let diag = SymmetricAlgebra::new(q.clone(), q, Scalar::one())?.g_j_series(c, order)?;
        let classical = WeightFamily::new(FamilyKind::Classical, c.clone()).series(order)?;
        report.ok(format!("Macdonald q=t = classical, c={}", fmt_c(c)), diag == classical, || {
            format!("{diag:?} vs {classical:?}")
        });
    }
    Ok(report)
}

/// Command lines exercised by the determinism check.
pub fn determinism_commands() -> Vec<Vec<String>> {
    let lines: [&[&str]; 8] = [
        &["chars", "--n", "5", "--format", "json"],
        &["macdonald", "--n", "3", "--format", "json"],
        &["weights", "--family", "jack", "--c", "1,1/2", "--dmax", "3", "--format", "csv"],
        &["fd", "--n", "3", "--dmax", "2", "--family", "macdonald", "--c", "1", "--mode", "symbolic", "--format", "json"],
        &["fd", "--n", "3", "--dmax", "2", "--c", "1,1/2", "--mode", "q=1/3,t=2/5", "--format", "latex"],
        &["hde", "--n", "3", "--dmax", "2", "--c", "1", "--format", "csv"],
        &["tau", "--nmax", "3", "--dmax", "2", "--N", "1", "--c", "1", "--format", "json"],
        &["verify", "pure-hurwitz", "--n", "3"],
    ];
    lines
        .iter()
        .map(|l| l.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn determinism(_opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(Criterion::Determinism);
    let dir = tempfile::tempdir().map_err(|e| VerifyError::Command(e.to_string()))?;
    let cache = dir.path().to_string_lossy().to_string();
    for args in determinism_commands() {
        let render = |threads: &str| {
            let mut full = args.clone();
            full.extend(["--cache-dir".to_string(), cache.clone(), "--threads".to_string(), threads.to_string()]);
            crate::cli::render(&full).map_err(|e| VerifyError::Command(e.to_string()))
        };
        let first = render("1")?;
        let second = render("4")?;
        let label = args.join(" ");
        report.ok(label, first == second, || "outputs differ between runs".to_string());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_seeded_and_avoids_special_values() {
        let mut a = PointSampler::new(7);
        let mut b = PointSampler::new(7);
        for _ in 0..200 {
            let x = a.rational();
            assert_eq!(x, b.rational());
            assert!(!x.is_zero() && !x.abs().is_one());
            assert!(x.denom() <= &BigInt::from(SAMPLE_HEIGHT));
            assert!(x.numer().abs() <= BigInt::from(SAMPLE_HEIGHT));
        }
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.name().parse::<Criterion>().unwrap(), c);
            assert_eq!(c.number().to_string().parse::<Criterion>().unwrap(), c);
        }
        assert!("nope".parse::<Criterion>().is_err());
    }

    #[test]
    fn complete_homogeneous_small() {
        let c = [Rational::from_integer(2.into()), Rational::from_integer(3.into())];
        assert_eq!(complete_homogeneous(&c, 2), Rational::from_integer(19.into()));
        assert_eq!(complete_homogeneous(&c, 0), Rational::one());
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions {
            n_max: 3,
            d_max: 2,
            ..VerifyOptions::default()
        };
        for c in [Criterion::TheoremCombinatorial, Criterion::PureHurwitz, Criterion::Specializations] {
            let r = run(c, &opts).unwrap();
            assert!(r.passed(), "{}", r.render());
        }
    }
}
