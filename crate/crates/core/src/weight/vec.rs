use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{fmt_rational, Rational};

/// `sum c_{k,s} eta_{k,s}` with `s >= 1`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightVec {
    terms: BTreeMap<(i64, u32), Rational>,
}

impl WeightVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: i64, s: u32) -> Self {
        let mut v = Self::zero();
        v.add_term(k, s, Rational::one());
        v
    }

    /// Terms with `s = 0` are dropped: they are the vanishing boundary terms of
    /// the action formulas.
    pub fn add_term(&mut self, k: i64, s: u32, c: Rational) {
        if s == 0 || c.is_zero() {
            return;
        }
        let key = (k, s);
        let remove = match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                x.is_zero()
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

    pub fn coeff(&self, k: i64, s: u32) -> Rational {
        self.terms.get(&(k, s)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&(k, s), c) in &other.terms {
            self.add_term(k, s, c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(k, s), c) in &other.terms {
            out.add_term(k, s, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn within(&self, w: &Window) -> bool {
        self.terms.keys().all(|&(k, s)| w.contains(k, s))
    }

    /// Coordinates over `w.basis()`. Components outside the window are ignored.
    pub fn to_coords(&self, w: &Window) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); w.dim()];
        for (&(k, s), c) in &self.terms {
            if let Some(i) = w.index_of(k, s) {
                v[i] = c.clone();
            }
        }
        v
    }

    pub fn from_coords(w: &Window, coords: &[Rational]) -> Self {
        let mut v = Self::zero();
        for ((k, s), c) in w.basis().into_iter().zip(coords) {
            v.add_term(k, s, c.clone());
        }
        v
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((k, s), c)| format!("{}*eta[{k},{s}]", fmt_rational(c)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVec({})", self.to_text())
    }
}

/// `k_min <= k <= k_max`, `1 <= s <= s_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub k_min: i64,
    pub k_max: i64,
    pub s_max: u32,
}

impl Window {
    pub fn new(k_min: i64, k_max: i64, s_max: u32) -> Result<Self, Error> {
        if k_min > k_max || s_max == 0 {
            return Err(Error::InvalidArgument(format!("empty window {k_min}:{k_max}:{s_max}")));
        }
        Ok(Self { k_min, k_max, s_max })
    }

    /// Parses `KMIN:KMAX:SMAX`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let bad = || Error::Parse(format!("window must be KMIN:KMAX:SMAX, got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let k_min = parts[0].trim().parse().map_err(|_| bad())?;
        let k_max = parts[1].trim().parse().map_err(|_| bad())?;
        let s_max = parts[2].trim().parse().map_err(|_| bad())?;
        Self::new(k_min, k_max, s_max)
    }

    pub fn contains(&self, k: i64, s: u32) -> bool {
        (self.k_min..=self.k_max).contains(&k) && (1..=self.s_max).contains(&s)
    }

    pub fn dim(&self) -> usize {
        (self.k_max - self.k_min + 1) as usize * self.s_max as usize
    }

    /// Basis indices ordered by `k`, then `s`.
    pub fn basis(&self) -> Vec<(i64, u32)> {
        (self.k_min..=self.k_max).flat_map(|k| (1..=self.s_max).map(move |s| (k, s))).collect()
    }

    pub fn index_of(&self, k: i64, s: u32) -> Option<usize> {
        self.contains(k, s).then(|| (k - self.k_min) as usize * self.s_max as usize + (s - 1) as usize)
    }

    pub fn shifted(&self, dk: i64) -> Self {
        Self { k_min: self.k_min + dk, k_max: self.k_max + dk, s_max: self.s_max }
    }

    pub fn to_text(&self) -> String {
        format!("{}:{}:{}", self.k_min, self.k_max, self.s_max)
    }
}
