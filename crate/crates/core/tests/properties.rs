use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qhurwitz::characters::char_table;
use qhurwitz::group_algebra::{CentralBasis, CentralElement};
use qhurwitz::partition::{enumerate_partitions, factorial, Partition};
use qhurwitz::scalar::{Monomial, Param, ParamSet, Poly, Rational, Scalar, ZSeries};

fn qt() -> ParamSet {
    ParamSet::of(&[Param::Q, Param::T])
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 0u16..3, 0u16..3), 1..4).prop_map(|terms| {
        Poly::from_terms(
            qt(),
            terms
                .into_iter()
                .map(|(c, a, b)| (Monomial::default().with_exp(Param::Q, a).with_exp(Param::T, b), Rational::from_integer(c.into()))),
        )
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| Scalar::from_fraction(n, d).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=7).prop_flat_map(|n| {
        let parts = enumerate_partitions(n).unwrap();
        prop::sample::select(parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        let back = &(&a * &b) / &b;
        prop_assert_eq!(back.to_string(), a.to_string());
        prop_assert_eq!(Scalar::parse_in(&a.to_string(), qt()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), q in rational(), t in rational()) {
        let point = [(Param::Q, q), (Param::T, t)];
        let (Ok(x), Ok(y)) = (a.eval(&point), b.eval(&point)) else { return Ok(()); };
        prop_assert_eq!((&a + &b).eval(&point).unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).eval(&point).unwrap(), &x * &y);
        prop_assert_eq!(a.substitute_all(&point).unwrap().constant_value().unwrap(), x);
    }

    #[test]
    fn series_multiplication(a in prop::collection::vec(scalar(), 4), b in prop::collection::vec(scalar(), 4)) {
        let (x, y) = (ZSeries::new(3, a.clone()), ZSeries::new(3, b));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        if !a[0].is_zero() {
            prop_assert!(x.mul(&x.inverse().unwrap()).unwrap().is_constant_one());
        }
    }

    #[test]
    fn conjugation_and_dominance(l in partition()) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
        for m in enumerate_partitions(l.weight()).unwrap() {
            prop_assert_eq!(m.dominated_by(&l), l.conjugate().dominated_by(&m.conjugate()));
        }
        prop_assert_eq!(l.class_size() * l.z(), factorial(l.weight()));
        prop_assert_eq!(l.dimension() * l.hook_product(), factorial(l.weight()));
    }

    #[test]
    fn characters_orthogonal(l in partition(), seed in any::<usize>()) {
        let n = l.weight();
        let table = char_table(n).unwrap();
        let others = enumerate_partitions(n).unwrap();
        let m = &others[seed % others.len()];
        let inner: Rational = table
            .classes
            .iter()
            .map(|mu| Rational::new(BigInt::from(table.value(&l, mu) * table.value(m, mu)), mu.z()))
            .sum();
        prop_assert_eq!(inner, if &l == m { Rational::one() } else { Rational::zero() });
    }

    #[test]
    fn class_algebra_commutes(l in partition(), seed in any::<usize>()) {
        let classes = enumerate_partitions(l.weight()).unwrap();
        let m = &classes[seed % classes.len()];
        let (a, b) = (CentralElement::class_sum(&l), CentralElement::class_sum(m));
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(&ab, &b.multiply(&a).unwrap().to_basis(CentralBasis::C).unwrap());
        prop_assert_eq!(ab.to_basis(CentralBasis::F).unwrap().to_basis(CentralBasis::C).unwrap(), ab);
    }
}
