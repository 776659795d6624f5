//! Sparse polynomials in the two commuting variables `h` and `hbar`.
//!
//! [`PolyHH`] is the carrier space of the rank-one free modules. Apart from ring
//! arithmetic it provides the two operations every action formula needs: the shift
//! `h -> h + d` and the partial derivative in `hbar`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{binomial, fmt_rational, parse_rational, pow, Rational};

/// Degree of a polynomial in one variable. The zero polynomial has degree
/// `NegInfinity`, which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// `sum c_{i,j} h^i hbar^j`, keyed by `(i, j)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyHH {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl PolyHH {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn h() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn hbar() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// `sum coeffs[r] hbar^r`.
    pub fn from_hbar_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (r, c) in coeffs.iter().enumerate() {
            p.add_term(0, r as u32, c.clone());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (i, j);
        let remove = match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(key, c);
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_h(&self) -> Degree {
        self.terms.keys().map(|&(i, _)| i).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn deg_hbar(&self) -> Degree {
        self.terms.keys().map(|&(_, j)| j).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// True when both partial degrees are within `(max_h, max_hbar)`. Zero fits any cap.
    pub fn fits(&self, max_h: u32, max_hbar: u32) -> bool {
        self.terms.keys().all(|&(i, j)| i <= max_h && j <= max_hbar)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// `p(h + d, hbar)`.
    pub fn shift_h(&self, d: &Rational) -> Self {
        self.shift(d, &Rational::zero())
    }

    /// `p(h + dh, hbar + dhb)`, expanded exactly.
    pub fn shift(&self, dh: &Rational, dhb: &Rational) -> Self {
        if dh.is_zero() && dhb.is_zero() {
            return self.clone();
        }
        let mut out = Self::zero();
        if dhb.is_zero() {
            let max_i = self.deg_h().finite().unwrap_or(0);
            let powers: Vec<Rational> = (0..=max_i).map(|e| pow(dh, e as i64)).collect();
            for (&(i, j), c) in &self.terms {
                let mut binom = Rational::one();
                // walk t downward from i so binom = C(i, i - t)
                for t in (0..=i).rev() {
                    out.add_term(t, j, c * &binom * &powers[(i - t) as usize]);
                    binom = binom * Rational::from_integer(t.into()) / Rational::from_integer((i - t + 1).into());
                }
            }
            return out;
        }
        for (&(i, j), c) in &self.terms {
            for t in 0..=i {
                let ch = binomial(i, t) * pow(dh, (i - t) as i64);
                if ch.is_zero() {
                    continue;
                }
                for u in 0..=j {
                    let cb = binomial(j, u) * pow(dhb, (j - u) as i64);
                    if cb.is_zero() {
                        continue;
                    }
                    out.add_term(t, u, c * &ch * cb);
                }
            }
        }
        out
    }

    /// Partial derivative in `hbar`.
    pub fn dbar(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * Rational::from_integer(j.into()));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `h = value`, leaving a polynomial in `hbar` only.
    pub fn eval_h(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(0, j, c * pow(value, i as i64));
        }
        out
    }

    pub fn eval(&self, h: &Rational, hbar: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * pow(h, i as i64) * pow(hbar, j as i64))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The coefficient of `hbar^j`, as a polynomial in `h`.
    pub fn hbar_coefficient(&self, j: u32) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|(&(_, jj), _)| jj == j).map(|(&(i, _), c)| ((i, 0), c.clone())),
        )
    }

    /// True when every term carries at least `hbar^i`.
    pub fn divisible_by_hbar_pow(&self, i: u32) -> bool {
        self.terms.keys().all(|&(_, j)| j >= i)
    }

    pub fn shifted_expand(&self, alpha0: &Rational, beta0: &Rational) -> ShiftedExpansion {
        ShiftedExpansion {
            alpha0: alpha0.clone(),
            beta0: beta0.clone(),
            coeffs: self.shift(alpha0, beta0).terms,
        }
    }

    /// Sorted term list, exponents descending lexicographically in `(h, hbar)`,
    /// e.g. `3/2*h^2*hb^1 + -1*hb^0`. The `h` factor is omitted when its
    /// exponent is zero; the `hb` factor is always written.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mut s = fmt_rational(c);
                if i > 0 {
                    s.push_str(&format!("*h^{i}"));
                }
                s.push_str(&format!("*hb^{j}"));
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the [`to_text`](Self::to_text) form and, more loosely, any sum of
    /// products of a rational coefficient with `h`, `hb`, `h^n`, `hb^n`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero();
        for term in s.split(" + ") {
            let mut coeff = Rational::one();
            let (mut i, mut j) = (0u32, 0u32);
            for factor in term.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n.trim(),
                        e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match name {
                    "h" => i += exp,
                    "hb" | "hbar" => j += exp,
                    _ => coeff *= parse_rational(factor)?,
                }
            }
            out.add_term(i, j, coeff);
        }
        Ok(out)
    }
}

impl fmt::Debug for PolyHH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyHH({})", self.to_text())
    }
}

impl fmt::Display for PolyHH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `sum c_{i,j} (h - alpha0)^i (hbar - beta0)^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedExpansion {
    pub alpha0: Rational,
    pub beta0: Rational,
    pub coeffs: BTreeMap<(u32, u32), Rational>,
}

impl ShiftedExpansion {
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-expands about the origin.
    pub fn to_poly(&self) -> PolyHH {
        let centered = PolyHH { terms: self.coeffs.clone() };
        centered.shift(&-&self.alpha0, &-&self.beta0)
    }
}

impl Add for &PolyHH {
    type Output = PolyHH;
    fn add(self, rhs: &PolyHH) -> PolyHH {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &PolyHH {
    type Output = PolyHH;
    fn sub(self, rhs: &PolyHH) -> PolyHH {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Neg for &PolyHH {
    type Output = PolyHH;
    fn neg(self) -> PolyHH {
        PolyHH { terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

impl Mul for &PolyHH {
    type Output = PolyHH;
    fn mul(self, rhs: &PolyHH) -> PolyHH {
        let mut out = PolyHH::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyHH {
            type Output = PolyHH;
            fn $m(self, rhs: PolyHH) -> PolyHH {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyHH {
    type Output = PolyHH;
    fn neg(self) -> PolyHH {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn p(s: &str) -> PolyHH {
        PolyHH::parse(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        let h = PolyHH::h();
        assert!((&h + &(-&h)).is_zero());
        let lhs = &(&h + &PolyHH::one()) * &(&h - &PolyHH::one());
        assert_eq!(lhs, p("h^2 + -1"));
        assert!(PolyHH::hbar().pow(3).scale(&rat(0)).is_zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("h^2").shift_h(&rat(-2)), p("h^2 + -4*h + 4"));
        assert_eq!(PolyHH::hbar().shift_h(&rat(-2)), PolyHH::hbar());
        // (h+2) hbar expanded by hand
        assert_eq!(p("h*hb").shift_h(&rat(2)), p("h*hb + 2*hb"));
    }

    #[test]
    fn dbar_examples() {
        assert_eq!(p("hb^2").dbar(), p("2*hb"));
        assert!(p("h^3").dbar().is_zero());
        assert_eq!(p("h*hb^2 + hb").dbar(), p("2*h*hb + 1"));
    }

    #[test]
    fn shifted_expand_examples() {
        let e = PolyHH::h().shifted_expand(&rat(3), &rat(0));
        assert_eq!(e.coeffs.len(), 2);
        assert_eq!(e.coeff(1, 0), rat(1));
        assert_eq!(e.coeff(0, 0), rat(3));

        let e = PolyHH::one().shifted_expand(&ratio(7, 2), &rat(-5));
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff(0, 0), rat(1));

        // Taylor: hbar^2 = (hbar-1)^2 + 2(hbar-1) + 1
        let e = p("hb^2").shifted_expand(&rat(0), &rat(1));
        assert_eq!(e.coeffs.len(), 3);
        assert_eq!(e.coeff(0, 2), rat(1));
        assert_eq!(e.coeff(0, 1), rat(2));
        assert_eq!(e.coeff(0, 0), rat(1));
    }

    #[test]
    fn degrees() {
        assert_eq!(PolyHH::zero().deg_h(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        let q = p("3*h^2*hb + h^4 + hb^5");
        assert_eq!(q.deg_h(), Degree::Finite(4));
        assert_eq!(q.deg_hbar(), Degree::Finite(5));
    }

    #[test]
    fn text_form() {
        let q = PolyHH::from_terms([((2, 1), ratio(3, 2)), ((0, 0), rat(-1))]);
        assert_eq!(q.to_text(), "3/2*h^2*hb^1 + -1*hb^0");
        assert_eq!(PolyHH::parse(&q.to_text()).unwrap(), q);
        assert_eq!(PolyHH::zero().to_text(), "0");
        let r = p("hb^2 + h^2 + h*hb + h");
        assert_eq!(r.to_text(), "1*h^2*hb^0 + 1*h^1*hb^1 + 1*h^1*hb^0 + 1*hb^2");
    }

    #[test]
    fn layer_helpers() {
        let q = p("h*hb^2 + 3*hb^2 + hb^3");
        assert!(q.divisible_by_hbar_pow(2));
        assert!(!q.divisible_by_hbar_pow(3));
        assert_eq!(q.hbar_coefficient(2), p("h + 3"));
        assert_eq!(q.eval(&rat(1), &rat(2)), rat(4 + 12 + 8));
    }
}
