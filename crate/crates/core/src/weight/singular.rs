use std::collections::BTreeSet;

use num_traits::Zero;

use super::module::{WeightFamily, WeightModuleSpec};
use super::vec::{WeightVec, Window};
use crate::algebra::Generator;
use crate::error::Error;
use crate::linalg::{nullspace, Echelon};
use crate::scalar::{half_integer_solution, rat, Rational};

/// Which pair annihilates a singular vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KillingPair {
    /// `f` and `fbar`: the vector is a lowest weight vector.
    Lowering,
    /// `e` and `ebar`: the vector is a highest weight vector.
    Raising,
}

impl KillingPair {
    pub fn generators(self) -> [Generator; 2] {
        match self {
            KillingPair::Lowering => [Generator::F, Generator::Fbar],
            KillingPair::Raising => [Generator::E, Generator::Ebar],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KillingPair::Lowering => "f,fbar",
            KillingPair::Raising => "e,ebar",
        }
    }

    /// Direction in `k` in which the complementary pair moves.
    fn depth_step(self) -> i64 {
        match self {
            KillingPair::Lowering => -1,
            KillingPair::Raising => 1,
        }
    }
}

fn searched_pairs(family: WeightFamily) -> &'static [KillingPair] {
    match family {
        WeightFamily::M => &[KillingPair::Lowering],
        WeightFamily::N => &[KillingPair::Raising],
        WeightFamily::V => &[KillingPair::Lowering, KillingPair::Raising],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVector {
    pub k: i64,
    pub vector: WeightVec,
    pub killed_by: KillingPair,
    pub h_eigenvalue: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularReport {
    pub window: Window,
    pub hits: Vec<SingularVector>,
}

impl SingularReport {
    pub fn hit_set(&self) -> BTreeSet<(i64, KillingPair)> {
        self.hits.iter().map(|h| (h.k, h.killed_by)).collect()
    }
}

/// Exact kernel of the killing pair on each weight space
/// `span{eta_{k,s} : s <= s_max}` of the window. Images are computed exactly,
/// so a hit is a genuine singular vector of the infinite module.
pub fn singular_vectors(spec: &WeightModuleSpec, window: &Window) -> SingularReport {
    let mut hits = Vec::new();
    for k in window.k_min..=window.k_max {
        for &pair in searched_pairs(spec.family) {
            let images: Vec<Vec<WeightVec>> = pair
                .generators()
                .iter()
                .map(|&g| (1..=window.s_max).map(|s| spec.act_basis(g, k, s)).collect())
                .collect();
            let mut keys = BTreeSet::new();
            for col in images.iter().flatten() {
                keys.extend(col.terms().map(|(key, _)| *key));
            }
            let mut rows = Vec::new();
            for per_gen in &images {
                for &(kk, ss) in &keys {
                    rows.push(per_gen.iter().map(|v| v.coeff(kk, ss)).collect::<Vec<_>>());
                }
            }
            for x in nullspace(&rows, window.s_max as usize) {
                let mut v = WeightVec::zero();
                for (i, c) in x.into_iter().enumerate() {
                    v.add_term(k, i as u32 + 1, c);
                }
                hits.push(SingularVector { k, vector: v, killed_by: pair, h_eigenvalue: spec.h_eigenvalue(k) });
            }
        }
    }
    SingularReport { window: *window, hits }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Singular(KillingPair),
    /// V with `beta = a = 0`: `span{eta_{k,1}}` is a proper submodule even when
    /// no singular vector exists.
    Layer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub k: i64,
    pub s: u32,
    pub kind: WitnessKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplicity {
    pub simple: bool,
    pub witness: Option<Witness>,
}

impl Simplicity {
    fn simple() -> Self {
        Self { simple: true, witness: None }
    }

    fn reducible(k: i64, s: u32, kind: WitnessKind) -> Self {
        Self { simple: false, witness: Some(Witness { k, s, kind }) }
    }
}

/// Integer solutions `n` of a linear condition in `alpha + 2n`.
enum Solutions {
    None,
    One(i64),
    All,
}

/// Solutions of `(alpha + 2n) beta + b = 0` over the integers.
fn linear_solutions(alpha: &Rational, beta: &Rational, b: &Rational) -> Solutions {
    if beta.is_zero() {
        return if b.is_zero() { Solutions::All } else { Solutions::None };
    }
    match half_integer_solution(&(-(b / beta) - alpha)) {
        Some(n) => Solutions::One(n),
        None => Solutions::None,
    }
}

fn alpha_solution(alpha: &Rational, target: &Rational) -> Option<i64> {
    half_integer_solution(&(target - alpha))
}

/// Closed-form simplicity test with a reducibility witness.
pub fn simplicity_criterion_weight(spec: &WeightModuleSpec) -> Simplicity {
    let beta = &spec.beta;
    match spec.family {
        WeightFamily::M | WeightFamily::N => {
            if !(beta * beta + &spec.a).is_zero() {
                return Simplicity::simple();
            }
            let (pair, offset) = match spec.family {
                WeightFamily::M => (KillingPair::Lowering, -1),
                _ => (KillingPair::Raising, 1),
            };
            match linear_solutions(&spec.alpha, beta, &spec.b) {
                Solutions::None => Simplicity::simple(),
                Solutions::One(n) => Simplicity::reducible(n + offset, 1, WitnessKind::Singular(pair)),
                Solutions::All => Simplicity::reducible(0, 1, WitnessKind::Singular(pair)),
            }
        }
        WeightFamily::V => {
            let a = &spec.a;
            let lowest = || alpha_solution(&spec.alpha, &(&spec.lambda * rat(2) * spec.beta1_at_beta()));
            let highest = || alpha_solution(&spec.alpha, &(-(spec.alpha1_at_beta() * rat(2)) / &spec.lambda));
            let low = || lowest().map(|n| Simplicity::reducible(n, 1, WitnessKind::Singular(KillingPair::Lowering)));
            let high = || highest().map(|n| Simplicity::reducible(n, 1, WitnessKind::Singular(KillingPair::Raising)));
            if beta != a && *beta != -a.clone() {
                Simplicity::simple()
            } else if a.is_zero() {
                low().or_else(high).unwrap_or(Simplicity::reducible(0, 1, WitnessKind::Layer))
            } else if beta == a {
                low().unwrap_or(Simplicity::simple())
            } else {
                high().unwrap_or(Simplicity::simple())
            }
        }
    }
}

/// All `(k, pair)` in the window at which the closed form predicts a singular
/// vector. Each one is a multiple of `eta_{k,1}`.
pub fn predicted_singular(spec: &WeightModuleSpec, window: &Window) -> BTreeSet<(i64, KillingPair)> {
    let mut out = BTreeSet::new();
    let ks = window.k_min..=window.k_max;
    let two = rat(2);
    let mut add = |sol: Solutions, offset: i64, pair| match sol {
        Solutions::None => {}
        Solutions::One(n) => {
            if ks.contains(&(n + offset)) {
                out.insert((n + offset, pair));
            }
        }
        Solutions::All => out.extend(ks.clone().map(|k| (k, pair))),
    };
    let beta = &spec.beta;
    match spec.family {
        WeightFamily::M | WeightFamily::N => {
            if (beta * beta + &spec.a).is_zero() {
                let sol = linear_solutions(&spec.alpha, beta, &spec.b);
                match spec.family {
                    WeightFamily::M => add(sol, -1, KillingPair::Lowering),
                    _ => add(sol, 1, KillingPair::Raising),
                }
            }
        }
        WeightFamily::V => {
            let to_sol = |n: Option<i64>| n.map_or(Solutions::None, Solutions::One);
            if *beta == spec.a {
                let t = &spec.lambda * &two * spec.beta1_at_beta();
                add(to_sol(alpha_solution(&spec.alpha, &t)), 0, KillingPair::Lowering);
            }
            if *beta == -spec.a.clone() {
                let t = -(spec.alpha1_at_beta() * &two) / &spec.lambda;
                add(to_sol(alpha_solution(&spec.alpha, &t)), 0, KillingPair::Raising);
            }
        }
    }
    out
}

/// True when every generator maps each `eta_{k,1}` of the window into
/// `span{eta_{k',1}}`, certifying that the bottom layer is a submodule.
pub fn layer_certificate(spec: &WeightModuleSpec, window: &Window) -> bool {
    (window.k_min..=window.k_max)
        .all(|k| Generator::ALL.iter().all(|&g| spec.act_basis(g, k, 1).terms().all(|(&(_, s), _)| s == 1)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaReport {
    pub k: i64,
    pub killed_by: KillingPair,
    /// Dimension of the generated submodule at depth `n = 0, 1, ...`.
    pub dims: Vec<usize>,
    pub expected: Vec<usize>,
    /// A window basis vector `v` with `(hbar + beta) v` nonzero but nilpotent
    /// modulo the submodule.
    pub quotient_witness: Option<(i64, u32)>,
}

impl VermaReport {
    pub fn character_matches(&self) -> bool {
        self.dims == self.expected
    }

    pub fn pass(&self) -> bool {
        self.character_matches() && self.quotient_witness.is_some()
    }
}

/// Saturates `U(g) eta_{k,s}` inside the window, dropping any vector with a
/// component outside it, and compares weight-space dimensions at depths
/// `0..depths` with the count `n + 1` of a Verma module over the two-generator
/// raising (or lowering) algebra.
pub fn verma_check(
    spec: &WeightModuleSpec,
    hit: (i64, u32),
    window: &Window,
    depths: usize,
) -> Result<VermaReport, Error> {
    let (k0, s0) = hit;
    let pair = searched_pairs(spec.family)
        .iter()
        .copied()
        .find(|p| p.generators().iter().all(|&g| spec.act_basis(g, k0, s0).is_zero()))
        .ok_or_else(|| Error::InvalidArgument(format!("eta[{k0},{s0}] is not a singular vector of {spec}")))?;
    if !window.contains(k0, s0) {
        return Err(Error::InvalidArgument("the hit lies outside the window".into()));
    }
    let mut ech = Echelon::new(window.dim());
    let seed = WeightVec::basis(k0, s0);
    ech.insert(&seed.to_coords(window));
    let mut queue = vec![seed];
    while let Some(v) = queue.pop() {
        for g in Generator::ALL {
            let w = spec.act(g, &v);
            if w.is_zero() || !w.within(window) {
                continue;
            }
            if ech.insert(&w.to_coords(window)) {
                queue.push(w);
            }
        }
    }
    // rows are in reduced echelon form over a k-major basis, so each lies in one weight space
    let step = pair.depth_step();
    let dims: Vec<usize> = (0..depths as i64)
        .map(|n| {
            let k = k0 + step * n;
            ech.pivots().iter().filter(|&&p| window.basis()[p].0 == k).count()
        })
        .collect();
    let expected = (1..=depths).collect();

    let shift = |v: &WeightVec| spec.act(Generator::Hbar, v).add(&v.scale(&spec.beta));
    let in_sub = |v: &WeightVec| v.within(window) && ech.contains(&v.to_coords(window));
    let mut quotient_witness = None;
    for s in 1..=window.s_max {
        let v = WeightVec::basis(k0, s);
        let mut w = shift(&v);
        if in_sub(&w) {
            continue;
        }
        for _ in 0..window.s_max {
            w = shift(&w);
            if in_sub(&w) {
                quotient_witness = Some((k0, s));
                break;
            }
        }
        if quotient_witness.is_some() {
            break;
        }
    }
    Ok(VermaReport { k: k0, killed_by: pair, dims, expected, quotient_witness })
}
