use std::collections::BTreeMap;

use crate::algebra::Generator;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::weight::{Probe, WeightModuleSpec, WeightVec, Window};

/// Anything with an action on the `eta_{k,s}` basis.
pub trait Actor: Sync {
    fn act_basis(&self, x: Generator, k: i64, s: u32) -> WeightVec;

    fn act(&self, x: Generator, v: &WeightVec) -> WeightVec {
        let mut out = WeightVec::zero();
        for (&(k, s), c) in v.terms() {
            out.add_assign(&self.act_basis(x, k, s).scale(c));
        }
        out
    }
}

impl Actor for WeightModuleSpec {
    fn act_basis(&self, x: Generator, k: i64, s: u32) -> WeightVec {
        WeightModuleSpec::act_basis(self, x, k, s)
    }
}

/// A linear map given by the images of the domain window's basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearWindowMap {
    pub domain: Window,
    pub codomain: Window,
    /// `images[i]` is the image of `domain.basis()[i]`.
    pub images: Vec<WeightVec>,
}

impl LinearWindowMap {
    pub fn from_fn(domain: Window, codomain: Window, phi: impl Fn(i64, u32) -> WeightVec) -> Self {
        Self { domain, codomain, images: domain.basis().into_iter().map(|(k, s)| phi(k, s)).collect() }
    }

    pub fn image_of(&self, k: i64, s: u32) -> Option<&WeightVec> {
        self.domain.index_of(k, s).map(|i| &self.images[i])
    }

    /// Rank of the images, i.e. of the matrix over the domain window.
    pub fn rank(&self) -> usize {
        image_rank(&self.images)
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(WeightVec::is_zero)
    }
}

pub fn image_rank(images: &[WeightVec]) -> usize {
    let mut index: BTreeMap<(i64, u32), usize> = BTreeMap::new();
    for v in images {
        for (key, _) in v.terms() {
            let n = index.len();
            index.entry(*key).or_insert(n);
        }
    }
    let mut ech = SparseEchelon::new(index.len());
    for v in images {
        let row: SparseRow = v.terms().map(|(key, c)| (index[key], c.clone())).collect();
        ech.insert(row);
    }
    ech.rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCheckResult {
    pub intertwines: bool,
    /// First `(generator, k, s)` with `y . phi(v) != phi(y . v)`, generators
    /// probed in the order `e, f, h, ebar, fbar, hbar`.
    pub failing_probe: Option<Probe>,
    pub rank: usize,
    pub dim: usize,
    pub window: Window,
}

impl IsoCheckResult {
    pub fn full_rank(&self) -> bool {
        self.rank == self.dim
    }

    pub fn is_iso(&self) -> bool {
        self.intertwines && self.full_rank()
    }
}

/// Checks `y . phi(v) = phi(y . v)` for all six generators and every window
/// basis vector `v`. `phi` is a formula on the whole basis, so the right-hand
/// side is never truncated.
pub fn check_map(
    domain: &dyn Actor,
    codomain: &dyn Actor,
    phi: &dyn Fn(i64, u32) -> WeightVec,
    window: &Window,
) -> IsoCheckResult {
    let apply = |v: &WeightVec| {
        let mut out = WeightVec::zero();
        for (&(k, s), c) in v.terms() {
            out.add_assign(&phi(k, s).scale(c));
        }
        out
    };
    let mut failing_probe = None;
    'outer: for y in Generator::ALL {
        for (k, s) in window.basis() {
            let lhs = codomain.act(y, &phi(k, s));
            let rhs = apply(&domain.act_basis(y, k, s));
            if lhs != rhs {
                failing_probe = Some(Probe { generator: y, k, s });
                break 'outer;
            }
        }
    }
    let images: Vec<WeightVec> = window.basis().into_iter().map(|(k, s)| phi(k, s)).collect();
    IsoCheckResult {
        intertwines: failing_probe.is_none(),
        failing_probe,
        rank: image_rank(&images),
        dim: window.dim(),
        window: *window,
    }
}

/// Like [`check_map`] for a map known only on its domain window: a probe
/// `(y, v)` is used only when `y . v` stays inside that window.
pub fn check_window_map(domain: &dyn Actor, codomain: &dyn Actor, map: &LinearWindowMap) -> IsoCheckResult {
    let apply = |v: &WeightVec| {
        let mut out = WeightVec::zero();
        for (&(k, s), c) in v.terms() {
            out.add_assign(&map.image_of(k, s).expect("inside the window").scale(c));
        }
        out
    };
    let mut failing_probe = None;
    'outer: for y in Generator::ALL {
        for (i, (k, s)) in map.domain.basis().into_iter().enumerate() {
            let yv = domain.act_basis(y, k, s);
            if !yv.within(&map.domain) {
                continue;
            }
            if codomain.act(y, &map.images[i]) != apply(&yv) {
                failing_probe = Some(Probe { generator: y, k, s });
                break 'outer;
            }
        }
    }
    IsoCheckResult {
        intertwines: failing_probe.is_none(),
        failing_probe,
        rank: map.rank(),
        dim: map.domain.dim(),
        window: map.domain,
    }
}
