use rand::Rng;

use super::module::{eval_functional, WeightModuleSpec};
use super::vec::{WeightVec, Window};
use crate::algebra::{bracket, Generator};
use crate::random;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub generator: Generator,
    pub k: i64,
    pub s: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualReport {
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<Probe>,
}

impl DualReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares the closed-form action with the transpose of the parent free
/// module: `(y . eta)(p) = -eta(y . p)` at random `(k, s)`, `y` and `p`.
pub fn dual_consistency(spec: &WeightModuleSpec, window: &Window, trials: usize, seed: u64) -> DualReport {
    let parent = spec.parent();
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let k = rng.gen_range(window.k_min..=window.k_max);
        let s = rng.gen_range(1..=window.s_max);
        let y = Generator::ALL[rng.gen_range(0..6)];
        let p = random::poly(&mut rng, 5, 5);
        let lhs = spec.pair(&spec.act_basis(y, k, s), &p);
        let rhs = -eval_functional(k, s, &spec.alpha, &spec.beta, &parent.act(y, &p));
        if lhs != rhs {
            failures.push(Probe { generator: y, k, s });
        }
    }
    DualReport { trials, seed, failures }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketFailure {
    pub x: Generator,
    pub y: Generator,
    pub k: i64,
    pub s: u32,
}

/// Checks `x(y v) - y(x v) = [x, y] v` for all 15 pairs and every basis vector
/// of the window. The actions are exact on the whole basis, so nothing is truncated.
pub fn weight_bracket_check(spec: &WeightModuleSpec, window: &Window) -> Vec<BracketFailure> {
    let brackets: Vec<_> = Generator::pairs().into_iter().map(|(x, y)| (x, y, bracket(x, y).unwrap())).collect();
    let mut failures = Vec::new();
    for (k, s) in window.basis() {
        let once: Vec<WeightVec> = Generator::ALL.iter().map(|&g| spec.act_basis(g, k, s)).collect();
        let twice: Vec<Vec<WeightVec>> =
            Generator::ALL.iter().map(|&x| once.iter().map(|v| spec.act(x, v)).collect()).collect();
        for (x, y, br) in &brackets {
            let lhs = twice[x.index()][y.index()].sub(&twice[y.index()][x.index()]);
            let mut rhs = WeightVec::zero();
            for (m, c) in br.terms() {
                rhs.add_assign(&once[m.letters()[0].index()].scale(c));
            }
            if lhs != rhs {
                failures.push(BracketFailure { x: *x, y: *y, k, s });
            }
        }
    }
    failures
}
