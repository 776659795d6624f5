use num_traits::Zero;

use super::map::{check_map, Actor, IsoCheckResult};
use crate::algebra::{theta_generator, AlgebraElement, Generator};
use crate::error::Error;
use crate::scalar::{rat, Rational};
use crate::weight::{WeightFamily, WeightModuleSpec, WeightVec, Window};

/// `B_z M` on the transported basis `1 (x) eta_{k,s}`: `x` acts through `Theta_z(x)`,
/// which may involve `ebar^-1`.
#[derive(Debug, Clone)]
pub struct Twisted {
    pub z: Rational,
    pub spec: WeightModuleSpec,
    images: Vec<AlgebraElement>,
}

impl Twisted {
    pub fn new(z: Rational, spec: WeightModuleSpec) -> Result<Self, Error> {
        if spec.family != WeightFamily::M {
            return Err(Error::InvalidArgument("twisting is implemented on the M family".into()));
        }
        let images = Generator::ALL.iter().map(|&g| theta_generator(&z, g)).collect();
        Ok(Self { z, spec, images })
    }
}

impl Actor for Twisted {
    fn act_basis(&self, x: Generator, k: i64, s: u32) -> WeightVec {
        self.spec
            .act_element(&self.images[x.index()], &WeightVec::basis(k, s))
            .expect("ebar is invertible on M")
    }
}

pub fn twisted_act(z: &Rational, spec: &WeightModuleSpec, x: Generator, v: &WeightVec) -> Result<WeightVec, Error> {
    Ok(Twisted::new(z.clone(), spec.clone())?.act(x, v))
}

/// The target of the twist isomorphism: `M` with `alpha` replaced by `alpha - 2z`.
pub fn twist_target(z: &Rational, spec: &WeightModuleSpec) -> WeightModuleSpec {
    let mut t = spec.clone();
    t.alpha = &spec.alpha - z * rat(2);
    t
}

/// `1 (x) eta_{k,s} -> eta_{k,s}` from `B_z M` to `M` with `alpha - 2z`, or to an
/// explicitly given codomain.
pub fn check_twist_iso_into(
    z: &Rational,
    spec: &WeightModuleSpec,
    codomain: &WeightModuleSpec,
    window: &Window,
) -> Result<IsoCheckResult, Error> {
    let tw = Twisted::new(z.clone(), spec.clone())?;
    Ok(check_map(&tw, codomain, &|k, s| WeightVec::basis(k, s), window))
}

pub fn check_twist_iso(z: &Rational, spec: &WeightModuleSpec, window: &Window) -> Result<IsoCheckResult, Error> {
    check_twist_iso_into(z, spec, &twist_target(z, spec), window)
}

/// True when `B_0` acts exactly as the module itself on every window basis vector.
pub fn twist_zero_is_identity(spec: &WeightModuleSpec, window: &Window) -> Result<bool, Error> {
    let tw = Twisted::new(Rational::zero(), spec.clone())?;
    Ok(window
        .basis()
        .into_iter()
        .all(|(k, s)| Generator::ALL.iter().all(|&g| tw.act_basis(g, k, s) == spec.act_basis(g, k, s))))
}
