use super::element::{bracket, AlgebraElement, Monomial};
use super::generator::Generator;
use crate::scalar::{rat, Rational};

/// Image of one generator under `Theta_z`: `f -> f - z ebar^-1 hbar`,
/// `h -> h + 2z`, everything else fixed.
pub fn theta_generator(z: &Rational, g: Generator) -> AlgebraElement {
    let x = AlgebraElement::generator(g);
    match g {
        Generator::F => x.add(&AlgebraElement::from_monomial(Monomial::new(-1, 0, 0, 1, 0, 0), -z.clone())),
        Generator::H => x.add(&AlgebraElement::scalar(z * rat(2))),
        _ => x,
    }
}

/// `Theta_z(x)` in the localized algebra, extended multiplicatively.
pub fn theta(z: &Rational, x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        let mut acc = AlgebraElement::scalar(c.clone());
        for g in m.letters().into_iter().rev() {
            acc = theta_generator(z, g).mul(&acc);
        }
        out = out.add(&acc);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub x: Generator,
    pub y: Generator,
    pub pass: bool,
}

/// For each of the 15 generator pairs, checks
/// `[Theta_z(x), Theta_z(y)] = Theta_z([x, y])`.
pub fn check_theta_automorphism(z: &Rational) -> Vec<PairCheck> {
    Generator::pairs()
        .into_iter()
        .map(|(x, y)| {
            let lhs = theta_generator(z, x).commutator(&theta_generator(z, y));
            let rhs = theta(z, &bracket(x, y).expect("non-localized pair"));
            PairCheck { x, y, pass: lhs == rhs }
        })
        .collect()
}
