//! Multivariate polynomial gcd over Q.
//!
//! Recursive content/primitive-part decomposition in the highest occurring
//! variable, with the subresultant PRS for the primitive parts.

use num_traits::One;

use super::poly::{Monomial, Poly};
use super::{Param, Rational};

/// Polynomial in `var` with polynomial coefficients, lowest degree first.
struct Uni {
    var: Param,
    coeffs: Vec<Poly>,
}

impl Uni {
    fn from_poly(p: &Poly, var: Param) -> Uni {
        Uni {
            var,
            coeffs: p.coefficients_in(var),
        }
    }

    fn into_poly(self, template: &Poly) -> Poly {
        let mut out = Poly::zero(template.params());
        for (k, c) in self.coeffs.into_iter().enumerate() {
            let m = Monomial::ONE.with_exp(self.var, k as u16);
            out = out.add(&c.mul_monomial(&m, &Rational::one()));
        }
        out
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lc(&self) -> &Poly {
        self.coeffs.last().expect("nonzero")
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Poly::is_zero) {
            self.coeffs.pop();
        }
    }

    fn scale(&self, c: &Poly) -> Uni {
        let mut out = Uni {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        };
        out.trim();
        out
    }

    fn div_exact(&self, c: &Poly) -> Uni {
        Uni {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| x.div_exact(c).expect("exact coefficient division"))
                .collect(),
        }
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Uni) -> Uni {
        let mut r = Uni {
            var: self.var,
            coeffs: self.coeffs.clone(),
        };
        let lb = b.lc().clone();
        let mut e = self.degree() + 1 - b.degree();
        while !r.is_zero() && r.degree() >= b.degree() {
            let shift = r.degree() - b.degree();
            let lr = r.lc().clone();
            let mut next: Vec<Poly> = r.coeffs.iter().map(|x| x.mul(&lb)).collect();
            for (i, bc) in b.coeffs.iter().enumerate() {
                next[i + shift] = next[i + shift].sub(&bc.mul(&lr));
            }
            r.coeffs = next;
            r.trim();
            e -= 1;
        }
        if e > 0 && !r.is_zero() {
            r = r.scale(&lb.pow(e as u32));
        }
        r
    }

    fn content(&self) -> Poly {
        let mut g = Poly::zero(self.lc().params());
        for c in &self.coeffs {
            g = gcd(&g, c);
            if g.is_constant() {
                return Poly::one(g.params());
            }
        }
        g
    }
}

fn normalize(p: &Poly) -> Poly {
    match p.leading_term() {
        Some((_, c)) if !c.is_one() => p.scale(&c.recip()),
        _ => p.clone(),
    }
}

/// Greatest common divisor, normalized to a monic leading term.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    gcd_with(a, b, true)
}

fn gcd_with(a: &Poly, b: &Poly, heuristic: bool) -> Poly {
    let params = a.params().join(b.params()).unwrap_or(a.params());
    if a.is_zero() {
        return normalize(b).with_params(params);
    }
    if b.is_zero() {
        return normalize(a).with_params(params);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(params);
    }
    if a.len() == 1 || b.len() == 1 {
        return monomial_gcd(a, b).with_params(params);
    }
    if a == b {
        return normalize(a).with_params(params);
    }
    if heuristic {
        if let Some(g) = super::heugcd::heuristic_gcd(a, b) {
            return normalize(&g).with_params(params);
        }
    }
    let vars: Vec<Param> = Param::ALL
        .into_iter()
        .filter(|p| a.involves(*p) || b.involves(*p))
        .collect();
    let var = *vars.last().expect("non-constant");
    if !a.involves(var) {
        return gcd(a, &Uni::from_poly(b, var).content());
    }
    if !b.involves(var) {
        return gcd(&Uni::from_poly(a, var).content(), b);
    }
    let ua = Uni::from_poly(a, var);
    let ub = Uni::from_poly(b, var);
    let ca = ua.content();
    let cb = ub.content();
    let c = gcd(&ca, &cb);
    let pa = ua.div_exact(&ca);
    let pb = ub.div_exact(&cb);
    let g = primitive_prs(pa, pb);
    normalize(&g.into_poly(a).mul(&c)).with_params(params)
}

/// Gcd when at least one side is a single term: a monomial in the variables.
fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut exps = [u16::MAX; super::NUM_PARAMS];
    for (m, _) in a.terms().chain(b.terms()) {
        for (e, x) in exps.iter_mut().zip(m.0) {
            *e = (*e).min(x);
        }
    }
    Poly::term(a.params(), Monomial(exps), Rational::one())
}

fn primitive_prs(a: Uni, b: Uni) -> Uni {
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    let params = a.lc().params();
    let mut g = Poly::one(params);
    let mut h = Poly::one(params);
    loop {
        let delta = (a.degree() - b.degree()) as u32;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        if r.degree() == 0 {
            return Uni {
                var: a.var,
                coeffs: vec![Poly::one(params)],
            };
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r.div_exact(&divisor);
        g = a.lc().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update"),
        };
    }
    let c = b.content();
    if c.is_zero() {
        b
    } else {
        b.div_exact(&c)
    }
}
