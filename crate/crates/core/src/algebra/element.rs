use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::generator::{bracket_table, Generator};
use crate::error::Error;
use crate::scalar::{fmt_rational, rat, Rational};

/// `ebar^ebar * fbar^fbar * f^f * hbar^hbar * h^h * e^e`. Only the `ebar`
/// exponent may be negative, and only in the localized algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub ebar: i64,
    pub fbar: u32,
    pub f: u32,
    pub hbar: u32,
    pub h: u32,
    pub e: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ebar: 0, fbar: 0, f: 0, hbar: 0, h: 0, e: 0 };

    pub fn new(ebar: i64, fbar: u32, f: u32, hbar: u32, h: u32, e: u32) -> Self {
        Self { ebar, fbar, f, hbar, h, e }
    }

    pub fn generator(g: Generator) -> Self {
        let mut m = Self::ONE;
        m.bump(g, 1);
        m
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_localized(&self) -> bool {
        self.ebar < 0
    }

    pub fn degree(&self) -> u64 {
        self.ebar.unsigned_abs() + u64::from(self.fbar + self.f + self.hbar + self.h + self.e)
    }

    fn bump(&mut self, g: Generator, by: u32) {
        match g {
            Generator::Ebar => self.ebar += i64::from(by),
            Generator::EbarInv => self.ebar -= i64::from(by),
            Generator::Fbar => self.fbar += by,
            Generator::F => self.f += by,
            Generator::Hbar => self.hbar += by,
            Generator::H => self.h += by,
            Generator::E => self.e += by,
        }
    }

    /// First letter of the sl2-and-barred tail (the `ebar` block excluded).
    fn tail_leading(&self) -> Option<Generator> {
        if self.fbar > 0 {
            Some(Generator::Fbar)
        } else if self.f > 0 {
            Some(Generator::F)
        } else if self.hbar > 0 {
            Some(Generator::Hbar)
        } else if self.h > 0 {
            Some(Generator::H)
        } else if self.e > 0 {
            Some(Generator::E)
        } else {
            None
        }
    }

    /// The monomial spelled out as letters, left to right.
    pub fn letters(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        let eb = if self.ebar < 0 { Generator::EbarInv } else { Generator::Ebar };
        w.extend(std::iter::repeat(eb).take(self.ebar.unsigned_abs() as usize));
        for (g, n) in [
            (Generator::Fbar, self.fbar),
            (Generator::F, self.f),
            (Generator::Hbar, self.hbar),
            (Generator::H, self.h),
            (Generator::E, self.e),
        ] {
            w.extend(std::iter::repeat(g).take(n as usize));
        }
        w
    }

    pub fn to_text(&self) -> String {
        format!(
            "eb^{}*fb^{}*f^{}*hb^{}*h^{}*e^{}",
            self.ebar, self.fbar, self.f, self.hbar, self.h, self.e
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A finite combination of canonical monomials with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::ONE, Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::from_monomial(Monomial::ONE, c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_monomial(Monomial::generator(g), Rational::one())
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                x.is_zero()
            }
            None => {
                self.terms.insert(m, c);
                false
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_localized(&self) -> bool {
        self.terms.keys().any(Monomial::is_localized)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplies every monomial on the left by `ebar^n`.
    fn shift_ebar(&self, n: i64) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (Monomial { ebar: m.ebar + n, ..*m }, c.clone())).collect() }
    }

    /// `g * self`, in normal form.
    pub fn lmul(&self, g: Generator) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in lmul_monomial(g, m).terms {
                out.add_term(m2, c2 * c);
            }
        }
        out
    }

    /// The product `self * other` in normal form.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = other.clone();
            for g in m.letters().into_iter().rev() {
                acc = acc.lmul(g);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn to_free_word(&self) -> FreeWord {
        FreeWord { terms: self.terms.iter().map(|(m, c)| (c.clone(), m.letters())).collect() }
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{}*{}", fmt_rational(c), m.to_text()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({})", self.to_text())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `g * m` for a canonical monomial `m`.
fn lmul_monomial(g: Generator, m: &Monomial) -> AlgebraElement {
    use Generator::*;
    if matches!(g, Ebar | EbarInv) {
        let mut m = *m;
        m.bump(g, 1);
        return AlgebraElement::from_monomial(m, Rational::one());
    }
    if m.ebar != 0 {
        // only f and h fail to commute with ebar^n:
        //   f ebar^n = ebar^n f - n ebar^(n-1) hbar,  h ebar^n = ebar^n (h + 2n)
        let n = m.ebar;
        let tail = Monomial { ebar: 0, ..*m };
        let mut out = lmul_monomial(g, &tail).shift_ebar(n);
        match g {
            F => {
                let extra = lmul_monomial(Hbar, &tail).shift_ebar(n - 1).scale(&rat(-n));
                out = out.add(&extra);
            }
            H => out.add_term(*m, rat(2 * n)),
            _ => {}
        }
        return out;
    }
    let y = match m.tail_leading() {
        Some(y) if g.slot() > y.slot() => y,
        _ => {
            let mut m = *m;
            m.bump(g, 1);
            return AlgebraElement::from_monomial(m, Rational::one());
        }
    };
    // g y m' = y (g m') + [g, y] m'
    let mut rest = *m;
    match y {
        Fbar => rest.fbar -= 1,
        F => rest.f -= 1,
        Hbar => rest.hbar -= 1,
        H => rest.h -= 1,
        _ => unreachable!("e is never out of order"),
    }
    let mut out = lmul_monomial(g, &rest).lmul(y);
    if let Some((c, z)) = bracket_table(g, y) {
        out = out.add(&lmul_monomial(z, &rest).scale(&rat(c)));
    }
    out
}

/// An unreduced linear combination of words in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeWord {
    pub terms: Vec<(Rational, Vec<Generator>)>,
}

impl FreeWord {
    pub fn word(letters: Vec<Generator>) -> Self {
        Self { terms: vec![(Rational::one(), letters)] }
    }

    pub fn uses_inverse(&self) -> bool {
        self.terms.iter().any(|(_, w)| w.contains(&Generator::EbarInv))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((c1 * c2, w));
            }
        }
        Self { terms }
    }

    /// Parses sums like `e*f - f*e`, `2*h^2*e`, `eb^-1*f*eb`. Factors may be
    /// separated by `*` or whitespace; a factor that reads as a rational number is
    /// a coefficient. Negative powers are allowed on `eb` only.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut terms = Vec::new();
        for (negative, body) in split_signed_terms(s)? {
            let mut coeff = if negative { rat(-1) } else { Rational::one() };
            let mut letters = Vec::new();
            for factor in body.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                if let Ok(c) = crate::scalar::parse_rational(factor) {
                    coeff *= c;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        (n, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?)
                    }
                    None => (factor, 1),
                };
                let g = Generator::parse(name)?;
                let (g, exp) = match (g, exp < 0) {
                    (Generator::Ebar, true) => (Generator::EbarInv, -exp),
                    (Generator::EbarInv, true) => (Generator::Ebar, -exp),
                    (_, true) => return Err(Error::Parse(format!("negative power of {name} in {factor:?}"))),
                    _ => (g, exp),
                };
                letters.extend(std::iter::repeat(g).take(exp as usize));
            }
            terms.push((coeff, letters));
        }
        Ok(Self { terms })
    }
}

fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    let mut prev = ' ';
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && prev != '^' {
            if !cur.trim().is_empty() {
                out.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
            cur.clear();
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("incomplete expression {s:?}")));
    }
    out.push((negative, cur));
    Ok(out)
}

/// Rewrites a free word into canonical form. `ebar_inv` is rejected unless
/// `localized` is set.
pub fn normal_form(w: &FreeWord, localized: bool) -> Result<AlgebraElement, Error> {
    if !localized && w.uses_inverse() {
        return Err(Error::LocalizedGenerator);
    }
    let mut out = AlgebraElement::zero();
    for (c, letters) in &w.terms {
        let mut acc = AlgebraElement::scalar(c.clone());
        for g in letters.iter().rev() {
            acc = acc.lmul(*g);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Normal form of `[x, y]` for two non-localized generators.
pub fn bracket(x: Generator, y: Generator) -> Result<AlgebraElement, Error> {
    if x == Generator::EbarInv || y == Generator::EbarInv {
        return Err(Error::LocalizedGenerator);
    }
    Ok(match bracket_table(x, y) {
        Some((c, z)) => AlgebraElement::generator(z).scale(&rat(c)),
        None => AlgebraElement::zero(),
    })
}
