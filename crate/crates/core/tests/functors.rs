use takiff_core::algebra::Generator;
use takiff_core::functors::*;
use takiff_core::scalar::{rat, ratio};
use takiff_core::weight::*;

fn window(k0: i64, k1: i64, s: u32) -> Window {
    Window::new(k0, k1, s).unwrap()
}

fn generic_m() -> WeightModuleSpec {
    make_m(ratio(1, 3), ratio(-2, 5), ratio(3, 2), ratio(1, 4), ratio(-7, 3)).unwrap()
}

#[test]
fn twist_iso_for_several_z() {
    let w = window(-3, 3, 4);
    let m = generic_m();
    for z in [rat(1), rat(-2), ratio(1, 2)] {
        let r = check_twist_iso(&z, &m, &w).unwrap();
        assert!(r.is_iso(), "z={z}: {:?}", r.failing_probe);
    }
    assert!(twist_zero_is_identity(&m, &w).unwrap());
}

#[test]
fn twist_into_wrong_target_fails_at_f() {
    let w = window(-3, 3, 4);
    let m = generic_m();
    let z = rat(1);
    let mut wrong = twist_target(&z, &m);
    wrong.alpha = &m.alpha - &z * rat(2) + rat(2);
    let r = check_twist_iso_into(&z, &m, &wrong, &w).unwrap();
    assert_eq!(r.failing_probe.map(|p| p.generator), Some(Generator::F));
    let mut wrong_b = twist_target(&z, &m);
    wrong_b.b = &m.b + rat(1);
    let r = check_twist_iso_into(&z, &m, &wrong_b, &w).unwrap();
    assert!(!r.intertwines);
    assert_eq!(r.failing_probe.map(|p| p.generator), Some(Generator::F));
}

#[test]
fn twist_rejects_other_families() {
    let n = make_n(rat(0), rat(1), rat(1), rat(0), rat(0)).unwrap();
    assert!(check_twist_iso(&rat(1), &n, &window(0, 1, 1)).is_err());
}

#[test]
fn lambda_rescale() {
    let w = window(-3, 3, 4);
    let m = make_m(ratio(1, 2), rat(1), rat(2), rat(3), rat(-1)).unwrap();
    assert!(lambda_rescale_iso(&m, &rat(3), &w).unwrap().is_iso());
    let mut off = m.clone();
    off.lambda = rat(3);
    off.b = rat(0);
    let r = lambda_rescale_into(&m, &off, &w);
    assert!(!r.intertwines);
    let probe = r.failing_probe.unwrap();
    assert_eq!((probe.generator, probe.s), (Generator::F, 1));
    assert!(lambda_rescale_iso(&m, &rat(0), &w).is_err());
}

#[test]
fn vm_example() {
    let w = window(-3, 3, 4);
    let v = make_v(rat(0), rat(3), rat(1), rat(1), vec![rat(1), rat(1)]).unwrap();
    let r = vm_iso_check(&v, &w).unwrap();
    assert_eq!(r.p_value, rat(-6));
    assert_eq!(r.target.b, rat(-6));
    assert!(r.pass(), "{:?}", r.iso.failing_probe);
    let bad = vm_iso_check_with_b(&v, &rat(-5), &w).unwrap();
    assert!(!bad.iso.intertwines);
    assert!(!bad.p_matches_b);
}

#[test]
fn vm_generic() {
    let w = window(-2, 2, 4);
    let v = make_v(ratio(2, 7), ratio(-1, 3), ratio(3, 2), ratio(5, 4), vec![ratio(1, 2), rat(-1), ratio(2, 3)]).unwrap();
    let r = vm_iso_check(&v, &w).unwrap();
    assert!(r.pass(), "{:?}", r.iso.failing_probe);
}

#[test]
fn search_finds_identity() {
    let w = window(-2, 2, 3);
    let m = generic_m();
    let maps = intertwiner_search(&m, &m, &w);
    assert_eq!(maps.len(), 1);
    assert_eq!(maps[0].rank(), w.dim());
}

#[test]
fn search_non_integral_shift_is_empty() {
    let w = window(-2, 2, 3);
    let m0 = make_m(rat(0), rat(1), rat(1), rat(0), rat(1)).unwrap();
    let m1 = make_m(rat(1), rat(1), rat(1), rat(0), rat(1)).unwrap();
    assert!(intertwiner_search(&m0, &m1, &w).is_empty());
}

#[test]
fn search_even_shift_is_one_dimensional() {
    let w = window(-2, 2, 3);
    let m0 = generic_m();
    let mut m2 = m0.clone();
    m2.alpha = &m0.alpha + rat(2);
    let maps = intertwiner_search(&m0, &m2, &w);
    assert_eq!(maps.len(), 1);
    assert_eq!(maps[0].codomain, w.shifted(-1));
}

#[test]
fn search_n_to_m() {
    let w = window(-2, 2, 3);
    let (al, be, la, a, b) = (ratio(1, 3), ratio(-2, 5), ratio(3, 2), ratio(1, 4), ratio(-7, 3));
    let n = make_n(al.clone(), be.clone(), la.clone(), a.clone(), b.clone()).unwrap();
    let m = make_m(al, be, la, a, b).unwrap();
    let maps = intertwiner_search(&n, &m, &w);
    assert_eq!(maps.len(), 1);
    assert!(!maps[0].is_zero());
}

#[test]
fn search_different_beta_is_zero() {
    let w = window(-2, 2, 3);
    let m = generic_m();
    let mut other = m.clone();
    other.beta = &m.beta + rat(1);
    assert!(intertwiner_search(&m, &other, &w).is_empty());
}
