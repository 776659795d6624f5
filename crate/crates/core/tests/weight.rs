use takiff_core::algebra::Generator;
use takiff_core::scalar::{rat, ratio};
use takiff_core::weight::*;

fn window(k0: i64, k1: i64, s: u32) -> Window {
    Window::new(k0, k1, s).unwrap()
}

#[test]
fn dual_consistency_examples() {
    let w = window(-4, 4, 4);
    let m = make_m(rat(0), rat(0), rat(1), rat(0), rat(0)).unwrap();
    assert!(dual_consistency(&m, &w, 50, 1).pass());
    let n = make_n(rat(0), rat(0), rat(1), rat(0), rat(0)).unwrap();
    assert!(dual_consistency(&n, &w, 50, 2).pass());
    let v = make_v(ratio(1, 3), ratio(-2, 5), rat(1), rat(1), vec![rat(0), rat(1)]).unwrap();
    assert!(dual_consistency(&v, &w, 50, 3).pass());
}

#[test]
fn dual_consistency_generic_parameters() {
    let w = window(-4, 4, 4);
    let m = make_m(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), ratio(-7, 3)).unwrap();
    let n = make_n(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), ratio(-7, 3)).unwrap();
    let v = make_v(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), vec![ratio(1, 2), rat(-3), ratio(2, 5), rat(1)])
        .unwrap();
    for sp in [m, n, v] {
        let r = dual_consistency(&sp, &w, 60, 7);
        assert!(r.pass(), "{sp}: {:?}", r.failures);
    }
}

#[test]
fn brackets_hold_on_window() {
    let w = window(-3, 3, 4);
    let v = make_v(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), vec![ratio(1, 2), rat(-3), ratio(2, 5)]).unwrap();
    let m = make_m(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), ratio(-7, 3)).unwrap();
    let n = make_n(ratio(3, 7), ratio(-5, 2), ratio(2, 3), ratio(1, 4), ratio(-7, 3)).unwrap();
    for sp in [m, n, v] {
        let f = weight_bracket_check(&sp, &w);
        assert!(f.is_empty(), "{sp}: {:?}", &f[..f.len().min(3)]);
    }
}

#[test]
fn singular_examples() {
    let w = window(-5, 5, 5);
    let m = make_m(rat(0), rat(1), rat(1), rat(-1), rat(-2)).unwrap();
    let r = singular_vectors(&m, &w);
    assert_eq!(r.hits.len(), 1);
    assert_eq!(r.hits[0].k, 0);
    assert_eq!(r.hits[0].h_eigenvalue, rat(0));
    assert_eq!(r.hits[0].vector.terms().count(), 1);
    assert_eq!(r.hits[0].vector.terms().next().unwrap().0, &(0, 1));

    let m = make_m(rat(0), rat(1), rat(1), rat(0), rat(0)).unwrap();
    assert!(singular_vectors(&m, &w).hits.is_empty());

    let n = make_n(rat(0), rat(1), rat(1), rat(-1), rat(2)).unwrap();
    let r = singular_vectors(&n, &w);
    assert_eq!(r.hit_set().into_iter().collect::<Vec<_>>(), vec![(0, KillingPair::Raising)]);
}

#[test]
fn criterion_examples() {
    let m = make_m(rat(0), rat(1), rat(1), rat(-1), rat(-2)).unwrap();
    let c = simplicity_criterion_weight(&m);
    assert!(!c.simple);
    let wt = c.witness.unwrap();
    assert_eq!((wt.k, wt.s), (0, 1));
    let m = make_m(rat(0), rat(0), rat(1), rat(0), rat(1)).unwrap();
    assert!(simplicity_criterion_weight(&m).simple);
    // beta = a = 0: the bottom layer span{eta_{k,1}} is a proper submodule
    let v = make_v(rat(0), rat(0), rat(1), rat(0), vec![ratio(1, 3)]).unwrap();
    let c = simplicity_criterion_weight(&v);
    assert!(!c.simple);
    assert_eq!(c.witness.unwrap().kind, WitnessKind::Layer);
    assert!(layer_certificate(&v, &window(-5, 5, 5)));
    assert!(singular_vectors(&v, &window(-5, 5, 5)).hits.is_empty());
}

#[test]
fn verma_example() {
    let m = make_m(rat(0), rat(1), rat(1), rat(-1), rat(-2)).unwrap();
    let r = verma_check(&m, (0, 1), &window(-5, 0, 6), 5).unwrap();
    assert_eq!(r.dims, vec![1, 2, 3, 4, 5]);
    assert!(r.pass());
    assert!(verma_check(&m, (1, 1), &window(-5, 1, 6), 5).is_err());
}

#[test]
fn h_is_diagonal_and_hbar_is_shift() {
    let m = make_m(ratio(1, 2), rat(3), rat(2), rat(1), rat(1)).unwrap();
    for (k, s) in window(-2, 2, 4).basis() {
        let hv = m.act_basis(Generator::H, k, s);
        assert_eq!(hv, WeightVec::basis(k, s).scale(&-m.alpha_k(k)));
        let nil = m.act_basis(Generator::Hbar, k, s).add(&WeightVec::basis(k, s).scale(&m.beta));
        assert!(nil.terms().all(|(&(kk, ss), _)| kk == k && ss + 1 == s));
    }
}
