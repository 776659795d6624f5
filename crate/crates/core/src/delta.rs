//! The three rank-one `U(Ch)`-free sl2 families acting on `Q[h]`.

use crate::algebra::Generator;
use crate::error::Error;
use crate::poly::PolyHH;
use crate::scalar::{rat, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaVariant {
    One,
    Two,
    Three,
}

impl DeltaVariant {
    pub fn from_index(i: u8) -> Result<Self, Error> {
        match i {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::InvalidArgument(format!("no Delta variant {i}"))),
        }
    }
}

// h/2 + c
fn half_h_plus(c: Rational) -> PolyHH {
    &PolyHH::h().scale(&ratio(1, 2)) + &PolyHH::constant(c)
}

/// Action of `x` in `{e, f, h}` on `g(h)` in `Delta_variant(lambda, a)`.
pub fn delta_action(
    variant: DeltaVariant,
    lambda: &Rational,
    a: &Rational,
    x: Generator,
    g: &PolyHH,
) -> Result<PolyHH, Error> {
    if *lambda == rat(0) {
        return Err(Error::ZeroLambda);
    }
    let inv = -lambda.recip();
    let down = g.shift_h(&rat(-2));
    let up = g.shift_h(&rat(2));
    let lam = PolyHH::constant(lambda.clone());
    Ok(match (variant, x) {
        (_, Generator::H) => &PolyHH::h() * g,
        (DeltaVariant::One, Generator::E) => &half_h_plus(-a.clone()).scale(&inv) * &down,
        (DeltaVariant::One, Generator::F) => &half_h_plus(a.clone()).scale(lambda) * &up,
        (DeltaVariant::Two, Generator::E) => &lam * &down,
        (DeltaVariant::Two, Generator::F) => {
            &(&half_h_plus(-a.clone()) * &half_h_plus(a + rat(1))).scale(&inv) * &up
        }
        (DeltaVariant::Three, Generator::E) => {
            &(&half_h_plus(a.clone()) * &half_h_plus(-a - rat(1))).scale(&inv) * &down
        }
        (DeltaVariant::Three, Generator::F) => &lam * &up,
        (_, other) => return Err(Error::InvalidArgument(format!("{other} is not in sl2"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator::{E, F, H};

    fn p(s: &str) -> PolyHH {
        PolyHH::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let one = PolyHH::one();
        let r = delta_action(DeltaVariant::One, &rat(1), &rat(0), E, &one).unwrap();
        assert_eq!(r, p("-1/2*h"));
        let r = delta_action(DeltaVariant::Two, &rat(3), &rat(7), E, &PolyHH::h()).unwrap();
        assert_eq!(r, p("3*h + -6"));
        let r = delta_action(DeltaVariant::Three, &rat(5), &rat(2), F, &one).unwrap();
        assert_eq!(r, p("5"));
        assert!(delta_action(DeltaVariant::One, &rat(0), &rat(0), E, &one).is_err());
    }

    #[test]
    fn sl2_relations_hold() {
        let g = p("h^3 + -2*h + 5");
        for v in [DeltaVariant::One, DeltaVariant::Two, DeltaVariant::Three] {
            for (lam, a) in [(rat(1), rat(0)), (ratio(-2, 3), ratio(5, 7))] {
                let act = |x, q: &PolyHH| delta_action(v, &lam, &a, x, q).unwrap();
                let ef = &act(E, &act(F, &g)) - &act(F, &act(E, &g));
                assert_eq!(ef, act(H, &g));
                let he = &act(H, &act(E, &g)) - &act(E, &act(H, &g));
                assert_eq!(he, act(E, &g).scale(&rat(2)));
                let hf = &act(H, &act(F, &g)) - &act(F, &act(H, &g));
                assert_eq!(hf, act(F, &g).scale(&rat(-2)));
            }
        }
    }
}
