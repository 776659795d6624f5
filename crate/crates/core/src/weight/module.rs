use std::fmt;

use num_traits::Zero;

use super::vec::WeightVec;
use crate::algebra::{AlgebraElement, Generator};
use crate::error::Error;
use crate::free::{alpha_from_beta, make_gamma, make_omega, make_theta_mod, FreeModuleSpec};
use crate::poly::PolyHH;
use crate::scalar::{binomial, falling, fmt_rational, pow, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightFamily {
    M,
    N,
    V,
}

impl WeightFamily {
    pub fn name(self) -> &'static str {
        match self {
            WeightFamily::M => "M",
            WeightFamily::N => "N",
            WeightFamily::V => "V",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "M" | "m" => Ok(Self::M),
            "N" | "n" => Ok(Self::N),
            "V" | "v" => Ok(Self::V),
            other => Err(Error::Parse(format!("unknown weight family {other:?} (expected M, N, V)"))),
        }
    }
}

/// One weight module with basis `eta_{k,s}`. The parameter `b` is used by M and
/// N only; `beta1`/`alpha1` by V only, where `alpha1` is tied to `beta1` through
/// the linkage matrix with `b` replaced by `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightModuleSpec {
    pub family: WeightFamily,
    pub alpha: Rational,
    pub beta: Rational,
    pub lambda: Rational,
    pub a: Rational,
    pub b: Rational,
    pub beta1: Vec<Rational>,
    pub alpha1: Vec<Rational>,
}

impl fmt::Display for WeightModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = fmt_rational;
        write!(
            f,
            "{}(alpha={}, beta={}, lambda={}, a={}",
            self.family.name(),
            r(&self.alpha),
            r(&self.beta),
            r(&self.lambda),
            r(&self.a)
        )?;
        match self.family {
            WeightFamily::V => {
                let q: Vec<_> = self.beta1.iter().map(r).collect();
                write!(f, ", beta1=({}))", q.join(","))
            }
            _ => write!(f, ", b={})", r(&self.b)),
        }
    }
}

fn nonzero(lambda: &Rational) -> Result<(), Error> {
    if lambda.is_zero() {
        Err(Error::ZeroLambda)
    } else {
        Ok(())
    }
}

pub fn make_m(alpha: Rational, beta: Rational, lambda: Rational, a: Rational, b: Rational) -> Result<WeightModuleSpec, Error> {
    nonzero(&lambda)?;
    Ok(WeightModuleSpec { family: WeightFamily::M, alpha, beta, lambda, a, b, beta1: vec![], alpha1: vec![] })
}

pub fn make_n(alpha: Rational, beta: Rational, lambda: Rational, a: Rational, b: Rational) -> Result<WeightModuleSpec, Error> {
    nonzero(&lambda)?;
    Ok(WeightModuleSpec { family: WeightFamily::N, alpha, beta, lambda, a, b, beta1: vec![], alpha1: vec![] })
}

pub fn make_v(
    alpha: Rational,
    beta: Rational,
    lambda: Rational,
    a: Rational,
    beta1: Vec<Rational>,
) -> Result<WeightModuleSpec, Error> {
    nonzero(&lambda)?;
    let beta1 = if beta1.is_empty() { vec![Rational::zero()] } else { beta1 };
    let alpha1 = alpha_from_beta(&beta1, &lambda, &a);
    Ok(WeightModuleSpec { family: WeightFamily::V, alpha, beta, lambda, a, b: Rational::zero(), beta1, alpha1 })
}

fn eval_coeffs(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, ci| acc * x + ci)
}

impl WeightModuleSpec {
    /// `alpha_k = alpha + 2k`.
    pub fn alpha_k(&self, k: i64) -> Rational {
        &self.alpha + rat(2 * k)
    }

    pub fn alpha1_at_beta(&self) -> Rational {
        eval_coeffs(&self.alpha1, &self.beta)
    }

    pub fn beta1_at_beta(&self) -> Rational {
        eval_coeffs(&self.beta1, &self.beta)
    }

    /// The free module whose dual contains this one: Gamma for M, Theta for N,
    /// Omega with `b := a` for V.
    pub fn parent(&self) -> FreeModuleSpec {
        let l = self.lambda.clone();
        match self.family {
            WeightFamily::M => make_gamma(l, self.a.clone(), self.b.clone()),
            WeightFamily::N => make_theta_mod(l, self.a.clone(), self.b.clone()),
            WeightFamily::V => make_omega(l, self.a.clone(), self.beta1.clone()),
        }
        .expect("lambda checked at construction")
    }

    /// `h` eigenvalue on `eta_{k,s}`.
    pub fn h_eigenvalue(&self, k: i64) -> Rational {
        -self.alpha_k(k)
    }

    /// `x . eta_{k,s}`. Terms whose target would have `s' <= 0` vanish.
    ///
    /// # Panics
    /// On `ebar_inv` outside the M family, where no inverse is provided.
    pub fn act_basis(&self, x: Generator, k: i64, s: u32) -> WeightVec {
        use Generator::*;
        let mut out = WeightVec::zero();
        let lam = &self.lambda;
        let beta = &self.beta;
        let s_r = rat(i64::from(s));
        let s1 = rat(i64::from(s) - 1);
        let s2 = rat(i64::from(s) - 2);
        let b2a = beta * beta + &self.a;
        let two_lam = lam * rat(2);
        let four_lam = lam * rat(4);
        match x {
            H => out.add_term(k, s, self.h_eigenvalue(k)),
            Hbar => {
                out.add_term(k, s, -beta.clone());
                if s > 1 {
                    out.add_term(k, s - 1, -s1.clone());
                }
            }
            _ => {}
        }
        if matches!(x, H | Hbar) {
            return out;
        }
        match (self.family, x) {
            (WeightFamily::M, Ebar) => out.add_term(k - 1, s, -lam.clone()),
            (WeightFamily::M, E) => out.add_term(k - 1, s + 1, two_lam),
            (WeightFamily::M, EbarInv) => out.add_term(k + 1, s, -lam.recip()),
            (WeightFamily::M, Fbar) | (WeightFamily::N, Ebar) => {
                let k2 = if self.family == WeightFamily::M { k + 1 } else { k - 1 };
                if s > 2 {
                    out.add_term(k2, s - 2, &s2 * &s1 / &four_lam);
                }
                if s > 1 {
                    out.add_term(k2, s - 1, &s1 * beta / &two_lam);
                }
                out.add_term(k2, s, &b2a / &four_lam);
            }
            (WeightFamily::M, F) => {
                if s > 1 {
                    out.add_term(k + 1, s - 1, &s1 * (self.alpha_k(k) + &s_r) / &two_lam);
                }
                out.add_term(k + 1, s, (self.alpha_k(k + i64::from(s)) * beta + &self.b) / &two_lam);
                out.add_term(k + 1, s + 1, &b2a / &two_lam);
            }
            (WeightFamily::N, Fbar) => out.add_term(k + 1, s, -lam.clone()),
            (WeightFamily::N, F) => out.add_term(k + 1, s + 1, -two_lam),
            (WeightFamily::N, E) => {
                if s > 1 {
                    out.add_term(k - 1, s - 1, &s1 * (self.alpha_k(k) - &s_r) / &two_lam);
                }
                let lin = (self.alpha_k(k) - rat(2) * &s_r) * beta + &self.b;
                out.add_term(k - 1, s, lin / &two_lam);
                out.add_term(k - 1, s + 1, -(&b2a / &two_lam));
            }
            (WeightFamily::V, Fbar) => {
                out.add_term(k + 1, s, (beta - &self.a) / &two_lam);
                if s > 1 {
                    out.add_term(k + 1, s - 1, &s1 / &two_lam);
                }
            }
            (WeightFamily::V, Ebar) => {
                out.add_term(k - 1, s, -(lam * (beta + &self.a)) / rat(2));
                if s > 1 {
                    out.add_term(k - 1, s - 1, -(lam * &s1) / rat(2));
                }
            }
            (WeightFamily::V, E) => {
                let lead = (lam * self.alpha_k(k - i64::from(s) + 1) + rat(2) * self.alpha1_at_beta()) / rat(2);
                out.add_term(k - 1, s, -lead);
                out.add_term(k - 1, s + 1, lam * (beta + &self.a));
                for (t, c) in v_tail(&self.alpha1, beta, s) {
                    out.add_term(k - 1, s - t, -c);
                }
            }
            (WeightFamily::V, F) => {
                let lead = (self.alpha_k(k + i64::from(s) - 1) - &two_lam * self.beta1_at_beta()) / &two_lam;
                out.add_term(k + 1, s, lead);
                out.add_term(k + 1, s + 1, (beta - &self.a) / lam);
                for (t, c) in v_tail(&self.beta1, beta, s) {
                    out.add_term(k + 1, s - t, -c);
                }
            }
            (_, EbarInv) => panic!("ebar_inv is only provided on the M family"),
            _ => unreachable!(),
        }
        out
    }

    pub fn act(&self, x: Generator, v: &WeightVec) -> WeightVec {
        let mut out = WeightVec::zero();
        for (&(k, s), c) in v.terms() {
            out.add_assign(&self.act_basis(x, k, s).scale(c));
        }
        out
    }

    /// Left action of an enveloping-algebra element. Localized elements need the
    /// inverse of `ebar`, which is provided on M only.
    pub fn act_element(&self, w: &AlgebraElement, v: &WeightVec) -> Result<WeightVec, Error> {
        if w.is_localized() && self.family != WeightFamily::M {
            return Err(Error::LocalizedGenerator);
        }
        let mut out = WeightVec::zero();
        for (m, c) in w.terms() {
            let mut acc = v.clone();
            for g in m.letters().into_iter().rev() {
                acc = self.act(g, &acc);
            }
            out.add_assign(&acc.scale(c));
        }
        Ok(out)
    }

    /// Value of `v` on the polynomial `p`.
    pub fn pair(&self, v: &WeightVec, p: &PolyHH) -> Rational {
        v.terms().fold(Rational::zero(), |acc, (&(k, s), c)| {
            acc + c * eval_functional(k, s, &self.alpha, &self.beta, p)
        })
    }
}

/// `sum_{l>=1} sum_{t=1}^{min(l, s-1)} c_l binom(l, t) beta^(l-t) (s-1)!/(s-1-t)!`,
/// returned per shift `t`.
fn v_tail(c: &[Rational], beta: &Rational, s: u32) -> Vec<(u32, Rational)> {
    let mut out = Vec::new();
    for t in 1..s {
        let mut acc = Rational::zero();
        for (l, cl) in c.iter().enumerate().skip(t as usize) {
            let l = l as u32;
            acc += cl * binomial(l, t) * pow(beta, i64::from(l - t));
        }
        if !acc.is_zero() {
            out.push((t, acc * falling(s - 1, t)));
        }
    }
    out
}

/// `eta_{k,s}(p)`: `(s-1)!` times the coefficient of `(hbar - beta)^(s-1)` in the
/// expansion of `p` about `(alpha + 2k, beta)`, i.e. `(dbar^(s-1) p)(alpha_k, beta)`.
pub fn eval_functional(k: i64, s: u32, alpha: &Rational, beta: &Rational, p: &PolyHH) -> Rational {
    assert!(s >= 1, "functionals are indexed by s >= 1");
    let mut d = p.clone();
    for _ in 1..s {
        d = d.dbar();
    }
    d.eval(&(alpha + rat(2 * k)), beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use Generator::*;

    fn m(alpha: i64, beta: i64, lambda: i64, a: i64, b: i64) -> WeightModuleSpec {
        make_m(rat(alpha), rat(beta), rat(lambda), rat(a), rat(b)).unwrap()
    }

    #[test]
    fn functional_examples() {
        let (al, be) = (ratio(1, 3), ratio(-2, 5));
        assert_eq!(eval_functional(4, 1, &al, &be, &PolyHH::one()), rat(1));
        assert_eq!(eval_functional(0, 2, &rat(0), &rat(0), &PolyHH::hbar()), rat(1));
        let q = PolyHH::parse("h^2*hb^3 + 7*hb + 2").unwrap();
        let shifted = &(&PolyHH::h() - &PolyHH::constant(al.clone() + rat(6))) * &q;
        for s in 1..5 {
            assert_eq!(eval_functional(3, s, &al, &be, &shifted), rat(0));
        }
    }

    #[test]
    fn functional_matches_shifted_expansion() {
        let p = PolyHH::parse("3*h^2*hb^3 + -1*h*hb + 5*hb^2 + 1/2").unwrap();
        let (al, be) = (ratio(3, 2), rat(-1));
        for k in -2..3 {
            for s in 1..5 {
                let e = p.shifted_expand(&(al.clone() + rat(2 * k)), &be);
                let want = e.coeff(0, s - 1) * crate::scalar::factorial(s - 1);
                assert_eq!(eval_functional(k, s, &al, &be, &p), want);
            }
        }
    }

    #[test]
    fn m_examples() {
        let sp = m(0, 1, 2, 0, 0);
        assert_eq!(sp.act_basis(Ebar, 0, 1), WeightVec::basis(-1, 1).scale(&rat(-2)));
        let sp = make_m(ratio(1, 3), rat(2), rat(1), rat(0), rat(0)).unwrap();
        assert_eq!(sp.act_basis(H, 2, 3), WeightVec::basis(2, 3).scale(&-(ratio(1, 3) + rat(4))));
        let sp = m(0, 1, 1, -1, -2);
        assert!(sp.act_basis(F, 0, 1).is_zero());
        assert!(sp.act_basis(Fbar, 0, 1).is_zero());
    }

    #[test]
    fn n_examples() {
        let sp = make_n(rat(0), rat(1), rat(1), rat(0), rat(0)).unwrap();
        assert_eq!(sp.act_basis(Fbar, 0, 1), WeightVec::basis(1, 1).scale(&rat(-1)));
        assert_eq!(sp.act_basis(Hbar, 5, 1), WeightVec::basis(5, 1).scale(&rat(-1)));
        let sp = make_n(rat(0), rat(1), rat(1), rat(-1), rat(2)).unwrap();
        assert!(sp.act_basis(E, 0, 1).is_zero());
    }

    #[test]
    fn v_examples() {
        let sp = make_v(rat(0), rat(2), rat(1), rat(2), vec![rat(1), rat(1)]).unwrap();
        assert_eq!(sp.act_basis(Hbar, 3, 1), WeightVec::basis(3, 1).scale(&rat(-2)));
        assert!(sp.act_basis(Fbar, 3, 1).is_zero());
        let sp = make_v(rat(0), rat(0), rat(1), rat(0), vec![rat(0)]).unwrap();
        assert!(sp.act_basis(F, 0, 1).is_zero());
    }

    #[test]
    fn m_f_coefficient_forms_agree() {
        // alpha_{k+s} beta + b == (alpha_k + 2s) beta + b
        let sp = make_m(ratio(2, 7), ratio(-3, 4), rat(1), rat(0), ratio(5, 2)).unwrap();
        for k in -3..3 {
            for s in 1..5i64 {
                let lhs = sp.alpha_k(k + s) * &sp.beta + &sp.b;
                let rhs = (sp.alpha_k(k) + rat(2 * s)) * &sp.beta + &sp.b;
                assert_eq!(lhs, rhs);
            }
        }
    }
}
