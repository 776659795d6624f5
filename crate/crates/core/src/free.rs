//! The rank-one `U(C h + C hbar)`-free modules Gamma, Theta and Omega on `Q[h, hbar]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, Generator};
use crate::delta::{delta_action, DeltaVariant};
use crate::error::Error;
use crate::linalg::Echelon;
use crate::poly::PolyHH;
use crate::random;
use crate::scalar::{fmt_rational, pow, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeFamily {
    Gamma,
    Theta,
    Omega,
}

impl FreeFamily {
    pub fn name(self) -> &'static str {
        match self {
            FreeFamily::Gamma => "Gamma",
            FreeFamily::Theta => "Theta",
            FreeFamily::Omega => "Omega",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gamma" | "g" => Ok(Self::Gamma),
            "theta" | "t" => Ok(Self::Theta),
            "omega" | "o" => Ok(Self::Omega),
            other => Err(Error::Parse(format!("unknown free family {other:?} (expected gamma, theta, omega)"))),
        }
    }
}

/// One concrete free module. For Omega, `a` is unused and `alpha1` is derived
/// from `beta1`; for Gamma and Theta both coefficient lists are empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleSpec {
    pub family: FreeFamily,
    pub lambda: Rational,
    pub a: Rational,
    pub b: Rational,
    pub beta1: Vec<Rational>,
    pub alpha1: Vec<Rational>,
}

impl fmt::Display for FreeModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = fmt_rational(&self.lambda);
        let b = fmt_rational(&self.b);
        match self.family {
            FreeFamily::Omega => {
                let q: Vec<_> = self.beta1.iter().map(fmt_rational).collect();
                write!(f, "Omega(lambda={l}, b={b}, beta1=({}))", q.join(","))
            }
            fam => write!(f, "{}(lambda={l}, a={}, b={b})", fam.name(), fmt_rational(&self.a)),
        }
    }
}

fn check_lambda(lambda: &Rational) -> Result<(), Error> {
    if lambda.is_zero() {
        Err(Error::ZeroLambda)
    } else {
        Ok(())
    }
}

pub fn make_gamma(lambda: Rational, a: Rational, b: Rational) -> Result<FreeModuleSpec, Error> {
    check_lambda(&lambda)?;
    Ok(FreeModuleSpec { family: FreeFamily::Gamma, lambda, a, b, beta1: vec![], alpha1: vec![] })
}

pub fn make_theta_mod(lambda: Rational, a: Rational, b: Rational) -> Result<FreeModuleSpec, Error> {
    check_lambda(&lambda)?;
    Ok(FreeModuleSpec { family: FreeFamily::Theta, lambda, a, b, beta1: vec![], alpha1: vec![] })
}

pub fn make_omega(lambda: Rational, b: Rational, beta1: Vec<Rational>) -> Result<FreeModuleSpec, Error> {
    check_lambda(&lambda)?;
    let beta1 = trim(beta1);
    let alpha1 = alpha_from_beta(&beta1, &lambda, &b);
    let residual = e34_residual(&lambda, &b, &alpha1, &beta1);
    assert!(residual.is_zero(), "alpha1 from the linkage matrix must cancel the residual");
    Ok(FreeModuleSpec { family: FreeFamily::Omega, lambda, a: Rational::zero(), b, beta1, alpha1 })
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.is_empty() {
        c.push(Rational::zero());
    }
    c
}

/// `p = lambda^2 A q` with `A` upper triangular: ones on the diagonal and
/// `2 b^(j-i)` above it.
pub fn alpha_from_beta(beta1: &[Rational], lambda: &Rational, b: &Rational) -> Vec<Rational> {
    let l2 = lambda * lambda;
    (0..beta1.len())
        .map(|i| {
            let mut acc = beta1[i].clone();
            for (j, q) in beta1.iter().enumerate().skip(i + 1) {
                acc += rat(2) * pow(b, (j - i) as i64) * q;
            }
            acc * &l2
        })
        .collect()
}

/// `(1/lambda) alpha1 - lambda beta1 - lambda (hbar + b) beta1' + (1/lambda)(hbar - b) alpha1'`.
/// This is what `[e, f] - h` multiplies by on Omega, so it must vanish.
pub fn e34_residual(lambda: &Rational, b: &Rational, alpha1: &[Rational], beta1: &[Rational]) -> PolyHH {
    let al = PolyHH::from_hbar_coeffs(alpha1);
    let be = PolyHH::from_hbar_coeffs(beta1);
    let inv = lambda.recip();
    let hb_plus = &PolyHH::hbar() + &PolyHH::constant(b.clone());
    let hb_minus = &PolyHH::hbar() - &PolyHH::constant(b.clone());
    let t1 = al.scale(&inv);
    let t2 = be.scale(lambda);
    let t3 = (&hb_plus * &be.dbar()).scale(lambda);
    let t4 = (&hb_minus * &al.dbar()).scale(&inv);
    &(&(&t1 - &t2) - &t3) + &t4
}

impl FreeModuleSpec {
    pub fn alpha1_poly(&self) -> PolyHH {
        PolyHH::from_hbar_coeffs(&self.alpha1)
    }

    pub fn beta1_poly(&self) -> PolyHH {
        PolyHH::from_hbar_coeffs(&self.beta1)
    }

    /// Replaces `alpha1` without re-deriving it. Only useful for negative tests.
    pub fn with_alpha1_unchecked(mut self, alpha1: Vec<Rational>) -> Self {
        self.alpha1 = alpha1;
        self
    }

    /// Action of one non-localized generator.
    ///
    /// # Panics
    /// On `ebar_inv`, which does not act on a free module.
    pub fn act(&self, x: Generator, p: &PolyHH) -> PolyHH {
        use Generator::*;
        match x {
            H => return &PolyHH::h() * p,
            Hbar => return &PolyHH::hbar() * p,
            EbarInv => panic!("ebar_inv does not act on {self}"),
            _ => {}
        }
        let lam = &self.lambda;
        let inv = lam.recip();
        let down = || p.shift_h(&rat(-2));
        let up = || p.shift_h(&rat(2));
        let hb = PolyHH::hbar();
        let c = |r: &Rational| PolyHH::constant(r.clone());
        let hb2a = &hb.pow(2) + &c(&self.a);
        match (self.family, x) {
            (FreeFamily::Gamma, E) => down().dbar().scale(&(rat(-2) * lam)),
            (FreeFamily::Gamma, Ebar) => down().scale(lam),
            (FreeFamily::Gamma, Fbar) => (&hb2a * &up()).scale(&(-&inv / rat(4))),
            (FreeFamily::Gamma, F) => {
                let lin = &(&(&PolyHH::h() + &c(&rat(2))) * &hb) + &c(&self.b);
                let u = up();
                (&(&lin * &u) + &(&hb2a * &u.dbar())).scale(&(-&inv / rat(2)))
            }
            (FreeFamily::Theta, F) => up().dbar().scale(&(rat(2) * lam)),
            (FreeFamily::Theta, Fbar) => up().scale(lam),
            (FreeFamily::Theta, Ebar) => (&hb2a * &down()).scale(&(-&inv / rat(4))),
            (FreeFamily::Theta, E) => {
                let lin = &(&(&PolyHH::h() - &c(&rat(2))) * &hb) + &c(&self.b);
                let d = down();
                (&(&lin * &d) - &(&hb2a * &d.dbar())).scale(&(-&inv / rat(2)))
            }
            (FreeFamily::Omega, E) => {
                let d = down();
                let lead = &PolyHH::h().scale(&(lam / rat(2))) + &self.alpha1_poly();
                let hbb = &hb + &c(&self.b);
                &(&lead * &d) - &(&hbb * &d.dbar()).scale(lam)
            }
            (FreeFamily::Omega, F) => {
                let u = up();
                let lead = &PolyHH::h().scale(&(&inv / rat(2))) - &self.beta1_poly();
                let hbb = &hb - &c(&self.b);
                -(&(&lead * &u) + &(&hbb * &u.dbar()).scale(&inv))
            }
            (FreeFamily::Omega, Ebar) => (&(&hb + &c(&self.b)) * &down()).scale(&(lam / rat(2))),
            (FreeFamily::Omega, Fbar) => (&(&hb - &c(&self.b)) * &up()).scale(&(-&inv / rat(2))),
            _ => unreachable!(),
        }
    }

    /// Left action of an enveloping-algebra element; localized elements are rejected.
    pub fn act_word(&self, w: &AlgebraElement, p: &PolyHH) -> Result<PolyHH, Error> {
        if w.is_localized() {
            return Err(Error::LocalizedGenerator);
        }
        let mut out = PolyHH::zero();
        for (m, c) in w.terms() {
            let mut acc = p.clone();
            for g in m.letters().into_iter().rev() {
                acc = self.act(g, &acc);
            }
            out = &out + &acc.scale(c);
        }
        Ok(out)
    }

    pub fn is_simple(&self) -> bool {
        simplicity_criterion_free(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairResult {
    pub x: Generator,
    pub y: Generator,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub seed: u64,
    pub trials: usize,
    pub pairs: Vec<PairResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.pairs.iter().all(|p| p.pass)
    }
}

/// Checks `x(y p) - y(x p) = [x, y] p` for all 15 pairs on `trials` random
/// polynomials of bidegree at most (5, 5).
pub fn verify_axioms(spec: &FreeModuleSpec, trials: usize, seed: u64) -> AxiomReport {
    let mut rng = random::rng(seed);
    let polys: Vec<PolyHH> = (0..trials.max(1)).map(|_| random::poly(&mut rng, 5, 5)).collect();
    let gens = Generator::ALL;
    let mut pass = vec![true; 15];
    for p in &polys {
        let once: Vec<PolyHH> = gens.iter().map(|&g| spec.act(g, p)).collect();
        let twice: Vec<Vec<PolyHH>> = gens.iter().map(|&x| once.iter().map(|q| spec.act(x, q)).collect()).collect();
        for (n, (x, y)) in Generator::pairs().into_iter().enumerate() {
            let (ix, iy) = (x.index(), y.index());
            let lhs = &twice[ix][iy] - &twice[iy][ix];
            let rhs = crate::algebra::bracket(x, y)
                .expect("non-localized")
                .terms()
                .fold(PolyHH::zero(), |acc, (m, c)| &acc + &once[m.letters()[0].index()].scale(c));
            pass[n] &= lhs == rhs;
        }
    }
    let pairs = Generator::pairs().into_iter().zip(pass).map(|((x, y), pass)| PairResult { x, y, pass }).collect();
    AxiomReport { seed, trials, pairs }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    pub basis: Vec<PolyHH>,
    pub contains_one: bool,
    pub saturated: bool,
    /// Generator images that were dropped for exceeding the cap.
    pub discarded: usize,
}

/// Exact span of everything reachable from `seed` under the six generators,
/// restricted to polynomials of bidegree at most `cap`. Images that leave the
/// cap are dropped, so the result is a lower bound on the generated submodule.
pub fn submodule_saturate(spec: &FreeModuleSpec, seed: &PolyHH, cap: (u32, u32)) -> SaturationResult {
    let (ch, cb) = cap;
    let width = (cb + 1) as usize;
    let dim = (ch as usize + 1) * width;
    let to_vec = |p: &PolyHH| {
        let mut v = vec![Rational::zero(); dim];
        for (&(i, j), c) in p.terms() {
            v[i as usize * width + j as usize] = c.clone();
        }
        v
    };
    let from_vec = |v: &[Rational]| {
        PolyHH::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (((k / width) as u32, (k % width) as u32), c.clone())),
        )
    };
    let mut ech = Echelon::new(dim);
    let mut queue = Vec::new();
    let mut discarded = 0;
    if seed.fits(ch, cb) && ech.insert(&to_vec(seed)) {
        queue.push(seed.clone());
    } else if !seed.fits(ch, cb) {
        discarded += 1;
    }
    while let Some(p) = queue.pop() {
        for g in Generator::ALL {
            let q = spec.act(g, &p);
            if q.is_zero() {
                continue;
            }
            if !q.fits(ch, cb) {
                discarded += 1;
                continue;
            }
            if ech.insert(&to_vec(&q)) {
                queue.push(q);
            }
        }
    }
    let contains_one = ech.contains(&to_vec(&PolyHH::one()));
    SaturationResult {
        basis: ech.rows().map(|r| from_vec(r)).collect(),
        contains_one,
        saturated: true,
        discarded,
    }
}

/// Gamma and Theta are always simple; Omega is simple iff `b != 0`.
pub fn simplicity_criterion_free(spec: &FreeModuleSpec) -> bool {
    match spec.family {
        FreeFamily::Gamma | FreeFamily::Theta => true,
        FreeFamily::Omega => !spec.b.is_zero(),
    }
}

/// Parameters `(lambda_D, a_D)` of the `Delta_1` module isomorphic to the layer
/// `hbar^i Q[h, hbar] / hbar^(i+1) Q[h, hbar]` of Omega with `b = 0`. On the layer
/// `hbar` acts nilpotently, so `beta1` enters through its constant term.
pub fn omega_quotient_delta_params(spec: &FreeModuleSpec, i: u32) -> Result<(Rational, Rational), Error> {
    if spec.family != FreeFamily::Omega || !spec.b.is_zero() {
        return Err(Error::InvalidArgument("layer quotients need Omega with b = 0".into()));
    }
    let q0 = spec.beta1.first().cloned().unwrap_or_else(Rational::zero);
    Ok((-spec.lambda.recip(), -(&spec.lambda * q0) + rat(i64::from(i))))
}

/// Action of `x` on the layer-`i` class of `hbar^i g(h)`, returned as the
/// polynomial in `h` multiplying `hbar^i`. Errors if the image leaves the ideal
/// `hbar^i Q[h, hbar]`.
pub fn omega_layer_action(spec: &FreeModuleSpec, i: u32, x: Generator, g: &PolyHH) -> Result<PolyHH, Error> {
    let rep = &PolyHH::monomial(Rational::one(), 0, i) * g;
    let img = spec.act(x, &rep);
    if !img.divisible_by_hbar_pow(i) {
        return Err(Error::InvalidArgument(format!("{x} does not preserve the layer {i}")));
    }
    Ok(img.hbar_coefficient(i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerCheck {
    pub layer: u32,
    pub lambda_delta: Rational,
    pub a_delta: Rational,
    pub pass: bool,
    pub failing_probe: Option<(Generator, u32)>,
}

/// Compares the layer action of `e, f, h, ebar, fbar` on `h^n`, `n <= max_n`,
/// with `Delta_1(lambda_D, a_D)`; `ebar` and `fbar` must act as zero.
pub fn check_omega_layer(spec: &FreeModuleSpec, i: u32, max_n: u32) -> Result<LayerCheck, Error> {
    let (ld, ad) = omega_quotient_delta_params(spec, i)?;
    let mut failing = None;
    'outer: for n in 0..=max_n {
        let g = PolyHH::monomial(Rational::one(), n, 0);
        for x in [Generator::E, Generator::F, Generator::H, Generator::Ebar, Generator::Fbar] {
            let got = omega_layer_action(spec, i, x, &g)?;
            let want = match x {
                Generator::Ebar | Generator::Fbar => PolyHH::zero(),
                _ => delta_action(DeltaVariant::One, &ld, &ad, x, &g)?,
            };
            if got != want {
                failing = Some((x, n));
                break 'outer;
            }
        }
    }
    Ok(LayerCheck { layer: i, lambda_delta: ld, a_delta: ad, pass: failing.is_none(), failing_probe: failing })
}

/// Canonical isomorphism invariants: two specs are isomorphic iff these agree.
pub fn iso_invariants_free(spec: &FreeModuleSpec) -> (FreeFamily, Vec<Rational>) {
    let mut t = vec![spec.lambda.clone()];
    match spec.family {
        FreeFamily::Omega => {
            t.push(spec.b.clone());
            t.extend(trim(spec.beta1.clone()));
        }
        _ => {
            t.push(spec.a.clone());
            t.push(spec.b.clone());
        }
    }
    (spec.family, t)
}

/// Random Omega parameters with `deg beta1 <= max_deg`.
pub fn random_omega<R: rand::Rng>(rng: &mut R, max_deg: usize, b: Option<Rational>) -> FreeModuleSpec {
    let lambda = random::nonzero_rational(rng);
    let b = b.unwrap_or_else(|| random::rational(rng));
    let deg = rng.gen_range(0..=max_deg);
    make_omega(lambda, b, random::coeffs(rng, deg)).expect("nonzero lambda")
}
