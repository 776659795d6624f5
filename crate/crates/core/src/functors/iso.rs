use num_traits::Zero;

use super::map::{check_map, Actor, IsoCheckResult};
use crate::algebra::Generator;
use crate::error::Error;
use crate::scalar::{pow, rat, Rational};
use crate::weight::{make_m, WeightFamily, WeightModuleSpec, WeightVec, Window};

fn require(family: WeightFamily, spec: &WeightModuleSpec) -> Result<(), Error> {
    if spec.family == family {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("expected the {} family, got {spec}", family.name())))
    }
}

/// `eta_{k,s} -> (lambda / lambda')^k eta_{k,s}` from `spec` into `codomain`.
pub fn lambda_rescale_into(spec: &WeightModuleSpec, codomain: &WeightModuleSpec, window: &Window) -> IsoCheckResult {
    let ratio = &spec.lambda / &codomain.lambda;
    check_map(spec, codomain, &|k, s| WeightVec::basis(k, s).scale(&pow(&ratio, k)), window)
}

/// Checks the rescaling map between `M` with `lambda` and `M` with `lambda2`,
/// all other parameters equal.
pub fn lambda_rescale_iso(spec: &WeightModuleSpec, lambda2: &Rational, window: &Window) -> Result<IsoCheckResult, Error> {
    require(WeightFamily::M, spec)?;
    if lambda2.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let mut target = spec.clone();
    target.lambda = lambda2.clone();
    Ok(lambda_rescale_into(spec, &target, window))
}

/// `b = -2a(lambda beta1(a) + 1)`, the only `b` for which `V` is isomorphic to
/// `M` with `a' = -a^2`.
pub fn vm_pinned_b(spec: &WeightModuleSpec) -> Rational {
    let beta1_at_a = spec.beta1.iter().rev().fold(Rational::zero(), |acc, q| acc * &spec.a + q);
    -(rat(2) * &spec.a * (&spec.lambda * beta1_at_a + rat(1)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmIsoResult {
    pub iso: IsoCheckResult,
    pub target: WeightModuleSpec,
    /// `(beta - a)/lambda alpha1(beta) - lambda (beta + a) beta1(beta) - 2a`.
    pub p_value: Rational,
    pub p_matches_b: bool,
}

impl VmIsoResult {
    pub fn pass(&self) -> bool {
        self.iso.is_iso() && self.p_matches_b
    }
}

/// Checks the map from `M(alpha, beta, lambda, -a^2, b)` to `V` sending
/// `eta_{k,s}` to `c^(k+s-1) / (2 lambda)^(s-1) e^(s-1) eta_{k+s-1,1}` with
/// `c = 2/(beta + a)`, for the given `b`.
pub fn vm_iso_check_with_b(spec: &WeightModuleSpec, b: &Rational, window: &Window) -> Result<VmIsoResult, Error> {
    require(WeightFamily::V, spec)?;
    let sum = &spec.beta + &spec.a;
    if sum.is_zero() {
        return Err(Error::InvalidArgument("beta + a must be nonzero".into()));
    }
    let target = make_m(spec.alpha.clone(), spec.beta.clone(), spec.lambda.clone(), -(&spec.a * &spec.a), b.clone())?;
    let c = rat(2) / &sum;
    let two_lambda = &spec.lambda * rat(2);
    let phi = |k: i64, s: u32| {
        let top = k + i64::from(s) - 1;
        let mut v = WeightVec::basis(top, 1);
        for _ in 1..s {
            v = Actor::act(spec, Generator::E, &v);
        }
        v.scale(&(pow(&c, top) / pow(&two_lambda, i64::from(s) - 1)))
    };
    let iso = check_map(&target, spec, &phi, window);
    let beta = &spec.beta;
    let p_value = (beta - &spec.a) / &spec.lambda * spec.alpha1_at_beta()
        - &spec.lambda * &sum * spec.beta1_at_beta()
        - rat(2) * &spec.a;
    let p_matches_b = p_value == *b;
    Ok(VmIsoResult { iso, target, p_value, p_matches_b })
}

pub fn vm_iso_check(spec: &WeightModuleSpec, window: &Window) -> Result<VmIsoResult, Error> {
    vm_iso_check_with_b(spec, &vm_pinned_b(spec), window)
}
