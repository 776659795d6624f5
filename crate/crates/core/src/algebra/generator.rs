use std::fmt;

use crate::error::Error;

/// The six generators of the Takiff sl2, plus the inverse of `ebar` used in the
/// localized enveloping algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E,
    F,
    H,
    Ebar,
    Fbar,
    Hbar,
    EbarInv,
}

use Generator::*;

impl Generator {
    /// The non-localized generators in report order.
    pub const ALL: [Generator; 6] = [E, F, H, Ebar, Fbar, Hbar];

    pub fn name(self) -> &'static str {
        match self {
            E => "e",
            F => "f",
            H => "h",
            Ebar => "ebar",
            Fbar => "fbar",
            Hbar => "hbar",
            EbarInv => "ebar_inv",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "e" => E,
            "f" => F,
            "h" => H,
            "eb" | "ebar" => Ebar,
            "fb" | "fbar" => Fbar,
            "hb" | "hbar" => Hbar,
            "ebinv" | "ebar_inv" | "eb^-1" | "ebar^-1" => EbarInv,
            other => return Err(Error::Parse(format!("unknown generator {other:?}"))),
        })
    }

    /// Position in [`Generator::ALL`].
    ///
    /// # Panics
    /// On `ebar_inv`.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&g| g == self).expect("ebar_inv has no index")
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Ebar | Fbar | Hbar | EbarInv)
    }

    /// Position in the canonical order `ebar fbar f hbar h e`.
    pub(crate) fn slot(self) -> usize {
        match self {
            Ebar | EbarInv => 0,
            Fbar => 1,
            F => 2,
            Hbar => 3,
            H => 4,
            E => 5,
        }
    }

    /// All 15 unordered pairs of distinct non-localized generators.
    pub fn pairs() -> Vec<(Generator, Generator)> {
        let mut out = Vec::with_capacity(15);
        for (i, &x) in Self::ALL.iter().enumerate() {
            for &y in &Self::ALL[i + 1..] {
                out.push((x, y));
            }
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `[x, y]` as `c * z`, or `None` when it vanishes.
pub(crate) fn bracket_table(x: Generator, y: Generator) -> Option<(i64, Generator)> {
    let direct = |x, y| match (x, y) {
        (E, F) => Some((1, H)),
        (H, E) => Some((2, E)),
        (H, F) => Some((-2, F)),
        (E, Fbar) => Some((1, Hbar)),
        (Ebar, F) => Some((1, Hbar)),
        (H, Ebar) => Some((2, Ebar)),
        (Hbar, E) => Some((2, Ebar)),
        (H, Fbar) => Some((-2, Fbar)),
        (Hbar, F) => Some((-2, Fbar)),
        _ => None,
    };
    direct(x, y).or_else(|| direct(y, x).map(|(c, z)| (-c, z)))
}
