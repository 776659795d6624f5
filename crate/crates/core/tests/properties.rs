use proptest::prelude::*;

use takiff_core::algebra::{normal_form, theta, AlgebraElement, FreeWord, Generator};
use takiff_core::free::{make_gamma, make_omega, submodule_saturate};
use takiff_core::functors::{check_twist_iso, twist_target, Actor, Twisted};
use takiff_core::scalar::{fmt_rational_strict, parse_rational, ratio};
use takiff_core::weight::{make_m, Window};
use takiff_core::{PolyHH, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != ratio(0, 1))
}

fn poly(max_h: u32, max_hb: u32) -> impl Strategy<Value = PolyHH> {
    prop::collection::vec(((0..=max_h, 0..=max_hb), rational()), 0..8)
        .prop_map(|terms| PolyHH::from_terms(terms.into_iter().map(|((i, j), c)| ((i, j), c))))
}

fn generator() -> impl Strategy<Value = Generator> {
    prop::sample::select(Generator::ALL.to_vec())
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(generator(), 0..=max_len)
}

fn nf(letters: &[Generator]) -> AlgebraElement {
    normal_form(&FreeWord::word(letters.to_vec()), false).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational_strict(&r)).unwrap(), r);
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in nonzero_rational()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn poly_shift_round_trip(p in poly(4, 3), x in rational(), y in rational()) {
        let there = p.shift(&x, &y);
        prop_assert_eq!(there.shift(&-x.clone(), &-y.clone()), p);
    }

    #[test]
    fn dbar_commutes_with_shift(p in poly(4, 4), x in rational(), y in rational()) {
        prop_assert_eq!(p.shift(&x, &y).dbar(), p.dbar().shift(&x, &y));
    }

    #[test]
    fn shifted_expansion_round_trip(p in poly(4, 4), x in rational(), y in rational(), h in rational(), hb in rational()) {
        let e = p.shifted_expand(&x, &y);
        // p(h, hb) = sum c_ij (h - x)^i (hb - y)^j
        let centered = PolyHH::from_terms(e.coeffs.clone());
        prop_assert_eq!(centered.eval(&(&h - &x), &(&hb - &y)), p.eval(&h, &hb));
        prop_assert_eq!(e.to_poly(), p);
    }

    #[test]
    fn poly_text_round_trip(p in poly(4, 4)) {
        prop_assert_eq!(PolyHH::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn normal_form_is_idempotent(w in word(8)) {
        let once = nf(&w);
        let twice = normal_form(&once.to_free_word(), false).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn normal_form_is_multiplicative(u in word(4), v in word(4)) {
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(nf(&uv), nf(&u).mul(&nf(&v)));
    }

    #[test]
    fn multiplication_is_associative(u in word(3), v in word(3), w in word(3)) {
        let (a, b, c) = (nf(&u), nf(&v), nf(&w));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn theta_composes_additively(w in word(4), z in rational(), z2 in rational()) {
        let x = nf(&w);
        prop_assert_eq!(theta(&z2, &theta(&z, &x)), theta(&(&z + &z2), &x));
    }

    #[test]
    fn theta_is_multiplicative(u in word(3), v in word(3), z in rational()) {
        let (a, b) = (nf(&u), nf(&v));
        prop_assert_eq!(theta(&z, &a.mul(&b)), theta(&z, &a).mul(&theta(&z, &b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn saturation_grows_with_the_cap(l in nonzero_rational(), q0 in rational(), q1 in rational()) {
        let spec = make_omega(l, ratio(0, 1), vec![q0, q1]).unwrap();
        let small = submodule_saturate(&spec, &PolyHH::hbar(), (3, 3));
        let big = submodule_saturate(&spec, &PolyHH::hbar(), (5, 5));
        prop_assert!(small.basis.len() <= big.basis.len());
        prop_assert!(!big.contains_one);
    }

    #[test]
    fn gamma_saturates_to_everything(l in nonzero_rational(), a in rational(), b in rational()) {
        let spec = make_gamma(l, a, b).unwrap();
        let r = submodule_saturate(&spec, &PolyHH::one(), (2, 2));
        prop_assert!(r.contains_one);
    }

    #[test]
    fn twists_compose(al in rational(), be in rational(), l in nonzero_rational(), a in rational(), b in rational(),
                      z in rational(), z2 in rational()) {
        let w = Window::new(-2, 2, 3).unwrap();
        let m = make_m(al, be, l, a, b).unwrap();
        // B_z2 B_z M acts like B_{z+z2} M, and both land on M with alpha - 2(z + z2)
        let outer = Twisted::new(z2.clone(), twist_target(&z, &m)).unwrap();
        let direct = Twisted::new(&z + &z2, m.clone()).unwrap();
        for (k, s) in w.basis() {
            for g in Generator::ALL {
                prop_assert_eq!(outer.act_basis(g, k, s), direct.act_basis(g, k, s));
            }
        }
        prop_assert!(check_twist_iso(&(&z + &z2), &m, &w).unwrap().is_iso());
    }
}
