use std::collections::BTreeMap;

use num_traits::Zero;

use super::map::{Actor, LinearWindowMap};
use crate::algebra::Generator;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::scalar::half_integer_solution;
use crate::weight::{WeightModuleSpec, WeightVec, Window};

/// Basis of the window intertwiners from `a` to `b`.
///
/// A module map preserves `h`-weights, so `eta_{k,s}` can only go to the
/// codomain weight space `k + n0` with `alpha_a - alpha_b = 2 n0`; when no such
/// integer exists the space is zero. It also commutes with `hbar + beta`, which
/// lowers `s`, so images of window vectors have `s' <= s_max` and truncating the
/// unknowns to the shifted window loses nothing. An equation for `(y, v)` is
/// imposed only when `y . v` stays inside the window.
pub fn intertwiner_search(a: &WeightModuleSpec, b: &WeightModuleSpec, window: &Window) -> Vec<LinearWindowMap> {
    let Some(n0) = half_integer_solution(&(&a.alpha - &b.alpha)) else {
        return Vec::new();
    };
    let codomain = window.shifted(n0);
    let smax = window.s_max as usize;
    let basis = window.basis();
    let nvars = basis.len() * smax;
    let var = |k: i64, s: u32, s2: u32| window.index_of(k, s).expect("in window") * smax + (s2 as usize - 1);

    let mut ech = SparseEchelon::new(nvars);
    for y in [Generator::E, Generator::F, Generator::Ebar, Generator::Fbar, Generator::Hbar] {
        for &(k, s) in &basis {
            let yv = Actor::act_basis(a, y, k, s);
            if !yv.within(window) {
                continue;
            }
            // rows indexed by codomain basis vector
            let mut rows: BTreeMap<(i64, u32), SparseRow> = BTreeMap::new();
            for s2 in 1..=window.s_max {
                for (&key, c) in Actor::act_basis(b, y, k + n0, s2).terms() {
                    *rows.entry(key).or_default().entry(var(k, s, s2)).or_insert_with(Default::default) += c;
                }
            }
            for (&(kw, sw), c) in yv.terms() {
                for s2 in 1..=window.s_max {
                    *rows.entry((kw + n0, s2)).or_default().entry(var(kw, sw, s2)).or_insert_with(Default::default) -= c;
                }
            }
            for (_, mut row) in rows {
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|x| {
            let images = basis
                .iter()
                .map(|&(k, s)| {
                    let mut v = WeightVec::zero();
                    for s2 in 1..=window.s_max {
                        v.add_term(k + n0, s2, x[var(k, s, s2)].clone());
                    }
                    v
                })
                .collect();
            LinearWindowMap { domain: *window, codomain, images }
        })
        .collect()
}
