use num_bigint::BigInt;
use proptest::prelude::*;

use lucastile::{BivariatePolynomial, Lucasnomials, Partition, Shape, Tiling, TilingKind};

fn small_poly() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((0u32..5, 0u32..4, -6i64..7), 0..6)
        .prop_map(BivariatePolynomial::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = BivariatePolynomial> {
    small_poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_div_inverts_mul(q in small_poly(), d in nonzero_poly()) {
        prop_assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), s0 in -4i64..5, t0 in -4i64..5) {
        let (s0, t0) = (BigInt::from(s0), BigInt::from(t0));
        prop_assert_eq!((&a * &b).eval_int(&s0, &t0), a.eval_int(&s0, &t0) * b.eval_int(&s0, &t0));
        prop_assert_eq!((&a + &b).eval_int(&s0, &t0), a.eval_int(&s0, &t0) + b.eval_int(&s0, &t0));
    }

    #[test]
    fn text_and_json_round_trip(a in small_poly()) {
        let text = a.to_canonical_text();
        prop_assert_eq!(BivariatePolynomial::parse(&text).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BivariatePolynomial>(&json).unwrap(), a);
    }

    #[test]
    fn text_is_injective(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(a.to_canonical_text() == b.to_canonical_text(), a == b);
    }

    #[test]
    fn complement_is_an_involution(parts in prop::collection::vec(0usize..7, 0..7)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts, 6).unwrap();
        let comp = lam.complement();
        prop_assert_eq!(lam.size() + comp.size(), lam.rect().0 * 6);
        prop_assert_eq!(comp.complement(), lam);
    }

    #[test]
    fn lucasnomial_symmetric_and_homogeneous(n in 0usize..13, k in 0usize..13) {
        prop_assume!(k <= n);
        let l = Lucasnomials::new();
        let c = l.via_recursion_fib(n, k as i64);
        prop_assert_eq!(&c, &l.via_recursion_fib(n, (n - k) as i64));
        for ((a, b), coeff) in c.terms() {
            prop_assert!(coeff > &BigInt::from(0));
            prop_assert_eq!((a + 2 * b) as usize, k * (n - k));
        }
    }

    #[test]
    fn tiling_text_round_trip(n in 0usize..9, circular in any::<bool>()) {
        let (kind, shape) = if circular {
            (TilingKind::Circular, Shape::Circular)
        } else {
            (TilingKind::Linear, Shape::Linear)
        };
        for t in lucastile::tilings::enumerate(kind, n) {
            prop_assert_eq!(Tiling::parse(&t.to_string(), shape).unwrap(), t);
        }
    }
}
