//! Heuristic gcd for integer polynomials.
//!
//! Evaluate the main variable at a large integer, take the gcd one level
//! down, and rebuild the candidate from its balanced digits in that base.
//! A candidate is accepted only after exact division of both inputs, so a
//! `None` result just means "use another method".

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly};
use super::{Param, Rational};

type ZPoly = BTreeMap<Monomial, BigInt>;

const ATTEMPTS: usize = 6;

fn add_term(p: &mut ZPoly, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match p.entry(m) {
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

fn content(p: &ZPoly) -> BigInt {
    p.values().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn max_norm(p: &ZPoly) -> BigInt {
    p.values().map(|c| c.abs()).max().unwrap_or_default()
}

/// Coefficient of the lexicographically largest exponent in `vars` order.
fn ground_lc<'a>(p: &'a ZPoly, vars: &[Param]) -> &'a BigInt {
    p.iter()
        .max_by(|(a, _), (b, _)| {
            let ka = vars.iter().map(|v| a.exp(*v));
            let kb = vars.iter().map(|v| b.exp(*v));
            ka.cmp(kb)
        })
        .map(|(_, c)| c)
        .expect("nonzero polynomial")
}

fn eval_at(p: &ZPoly, var: Param, x: &BigInt) -> ZPoly {
    let mut out = ZPoly::new();
    let mut powers: Vec<BigInt> = vec![BigInt::one()];
    for (m, c) in p {
        let e = m.exp(var) as usize;
        while powers.len() <= e {
            let next = powers.last().expect("nonempty") * x;
            powers.push(next);
        }
        add_term(&mut out, m.with_exp(var, 0), c * &powers[e]);
    }
    out
}

/// Exact quotient over the integers, if it exists.
fn div_exact(f: &ZPoly, h: &ZPoly) -> Option<ZPoly> {
    let (hm, hc) = h.iter().next_back()?;
    let mut rem = f.clone();
    let mut quot = ZPoly::new();
    while let Some((rm, rc)) = rem.iter().next_back() {
        let qm = rm.div(hm)?;
        let (qc, r) = rc.div_rem(hc);
        if !r.is_zero() {
            return None;
        }
        for (m, c) in h {
            add_term(&mut rem, m.mul(&qm), -(c * &qc));
        }
        quot.insert(qm, qc);
    }
    Some(quot)
}

/// Rebuild a polynomial in `var` from its image at `var = x`.
fn interpolate(mut h: ZPoly, x: &BigInt, var: Param, vars: &[Param]) -> ZPoly {
    let half = x / 2;
    let mut out = ZPoly::new();
    let mut k: u16 = 0;
    while !h.is_empty() {
        let mut digit = ZPoly::new();
        for (m, c) in &h {
            let mut r = c.mod_floor(x);
            if r > half {
                r -= x;
            }
            add_term(&mut digit, *m, r);
        }
        let mut next = ZPoly::new();
        for (m, c) in h {
            let d = digit.get(&m).cloned().unwrap_or_default();
            add_term(&mut next, m, (c - d) / x);
        }
        for (m, c) in digit {
            out.insert(m.with_exp(var, k), c);
        }
        h = next;
        k += 1;
    }
    if !out.is_empty() && ground_lc(&out, vars).is_negative() {
        for c in out.values_mut() {
            *c = -c.clone();
        }
    }
    out
}

fn primitive(mut p: ZPoly) -> ZPoly {
    let c = content(&p);
    if !c.is_zero() && !c.is_one() {
        for v in p.values_mut() {
            *v /= &c;
        }
    }
    p
}

fn scale(mut p: ZPoly, c: &BigInt) -> ZPoly {
    if !c.is_one() {
        for v in p.values_mut() {
            *v *= c;
        }
    }
    p
}

/// `(gcd, f/gcd, g/gcd)` for nonzero `f`, `g` involving only `vars`.
fn heu(f: &ZPoly, g: &ZPoly, vars: &[Param]) -> Option<(ZPoly, ZPoly, ZPoly)> {
    let Some((&main, rest)) = vars.split_first() else {
        let a = f.get(&Monomial::ONE)?;
        let b = g.get(&Monomial::ONE)?;
        let h = a.gcd(b);
        let one = |c: BigInt| ZPoly::from([(Monomial::ONE, c)]);
        return Some((one(h.clone()), one(a / &h), one(b / &h)));
    };
    let cg = content(f).gcd(&content(g));
    let f = primitive_by(f, &cg);
    let g = primitive_by(g, &cg);
    let (fnorm, gnorm) = (max_norm(&f), max_norm(&g));
    let b: BigInt = BigInt::from(2) * fnorm.clone().min(gnorm.clone()) + 29;
    let mut x = b
        .clone()
        .min(BigInt::from(99) * b.sqrt())
        .max(BigInt::from(2) * (fnorm / ground_lc(&f, vars).abs()).min(gnorm / ground_lc(&g, vars).abs()) + 2);
    for _ in 0..ATTEMPTS {
        let ff = eval_at(&f, main, &x);
        let gg = eval_at(&g, main, &x);
        if !ff.is_empty() && !gg.is_empty() {
            let (h, cff, cfg) = heu(&ff, &gg, rest)?;
            let h = primitive(interpolate(h, &x, main, vars));
            if let Some(cf) = div_exact(&f, &h) {
                if let Some(cg2) = div_exact(&g, &h) {
                    return Some((scale(h, &cg), cf, cg2));
                }
            }
            let cff = interpolate(cff, &x, main, vars);
            if let Some(h2) = div_exact(&f, &cff) {
                if let Some(cg2) = div_exact(&g, &h2) {
                    return Some((scale(h2, &cg), cff, cg2));
                }
            }
            let cfg = interpolate(cfg, &x, main, vars);
            if let Some(h2) = div_exact(&g, &cfg) {
                if let Some(cf) = div_exact(&f, &h2) {
                    return Some((scale(h2, &cg), cf, cfg));
                }
            }
        }
        x = BigInt::from(73794) * &x * x.sqrt().sqrt() / 27011;
    }
    None
}

fn primitive_by(p: &ZPoly, c: &BigInt) -> ZPoly {
    if c.is_one() {
        return p.clone();
    }
    p.iter().map(|(m, v)| (*m, v / c)).collect()
}

fn to_integer(p: &Poly) -> ZPoly {
    let l = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    p.terms()
        .map(|(m, c)| (*m, c.numer() * (&l / c.denom())))
        .collect()
}

/// Gcd of two nonzero polynomials, up to a rational factor.
pub(super) fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    let vars: Vec<Param> = Param::ALL
        .into_iter()
        .rev()
        .filter(|p| a.involves(*p) || b.involves(*p))
        .collect();
    let (h, _, _) = heu(&to_integer(a), &to_integer(b), &vars)?;
    Some(Poly::from_terms(
        a.params(),
        h.into_iter().map(|(m, c)| (m, Rational::from_integer(c))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamSet;

    #[test]
    fn recovers_bivariate_factor() {
        let ctx = ParamSet::of(&[Param::Q, Param::T]);
        let q = Poly::var(ctx, Param::Q);
        let t = Poly::var(ctx, Param::T);
        let one = Poly::one(ctx);
        let common = one.sub(&q.mul(&t).pow(2)).mul(&one.add(&q));
        let a = common.mul(&one.sub(&t.pow(3)));
        let b = common.mul(&q.pow(4).add(&t));
        let g = heuristic_gcd(&a, &b).unwrap();
        assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        assert!(common.div_exact(&g).unwrap().is_constant());
    }
}
