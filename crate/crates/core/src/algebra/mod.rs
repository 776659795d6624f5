//! The Takiff sl2 (`sl2 (x) C[t]/(t^2)`) and its enveloping algebra, optionally
//! localized at `ebar`.
//!
//! Elements are kept in the canonical order `ebar^n fbar^a f^b hbar^c h^d e^g`.
//! Multiplication is done one letter at a time from the left, swapping an
//! out-of-order letter past the leading one with `x y = y x + [x, y]`.

mod element;
mod generator;
mod theta;

pub use element::{bracket, normal_form, AlgebraElement, FreeWord, Monomial};
pub use generator::Generator;
pub use theta::{check_theta_automorphism, theta, theta_generator, PairCheck};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use Generator::*;

    fn nf(s: &str) -> AlgebraElement {
        normal_form(&FreeWord::parse(s).unwrap(), true).unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(E, F).unwrap(), AlgebraElement::generator(H));
        assert!(bracket(Ebar, Fbar).unwrap().is_zero());
        assert_eq!(bracket(H, Ebar).unwrap(), AlgebraElement::generator(Ebar).scale(&rat(2)));
        assert!(bracket(EbarInv, E).is_err());
        for (x, y) in Generator::pairs() {
            assert_eq!(bracket(x, y).unwrap(), bracket(y, x).unwrap().scale(&rat(-1)));
        }
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(nf("e*f"), nf("f*e + h"));
        assert_eq!(nf("f*e + h").terms().count(), 2);
        assert_eq!(nf("eb*eb^-1"), AlgebraElement::one());
        assert_eq!(nf("eb^-1*eb"), AlgebraElement::one());
        assert_eq!(nf("f*eb"), nf("eb*f - hb"));
        let expected = AlgebraElement::from_monomial(Monomial::new(0, 0, 0, 0, 2, 1), rat(1))
            .add(&AlgebraElement::from_monomial(Monomial::new(0, 0, 0, 0, 1, 1), rat(-4)))
            .add(&AlgebraElement::from_monomial(Monomial::new(0, 0, 0, 0, 0, 1), rat(4)));
        assert_eq!(nf("e*h^2"), expected);
    }

    #[test]
    fn inverse_rejected_outside_localization() {
        let w = FreeWord::parse("eb^-1*f").unwrap();
        assert!(normal_form(&w, false).is_err());
        assert!(normal_form(&w, true).is_ok());
    }

    #[test]
    fn conjugation_by_ebar() {
        // ebar^-1 x ebar is Theta_1(x)
        assert_eq!(nf("eb^-1*h*eb"), nf("h + 2"));
        assert_eq!(nf("eb^-1*f*eb"), nf("f - eb^-1*hb"));
        assert_eq!(nf("eb^-1*h*eb"), theta(&rat(1), &AlgebraElement::generator(H)));
        assert_eq!(nf("eb^-1*f*eb"), theta(&rat(1), &AlgebraElement::generator(F)));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&rat(1), &AlgebraElement::generator(H)), nf("h + 2"));
        let x = nf("e*f*hb*eb^-1 + 3*fb");
        assert_eq!(theta(&rat(0), &x), x);
        let f = AlgebraElement::generator(F);
        let z = ratio(5, 3);
        assert_eq!(theta(&-z.clone(), &theta(&z, &f)), f);
        for z in [rat(0), rat(1), ratio(1, 2)] {
            assert!(check_theta_automorphism(&z).iter().all(|c| c.pass));
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(Monomial::new(-1, 0, 1, 2, 0, 0).to_text(), "eb^-1*fb^0*f^1*hb^2*h^0*e^0");
        assert_eq!(AlgebraElement::zero().to_text(), "0");
        assert_eq!(nf("2*f*e").to_text(), "2*eb^0*fb^0*f^1*hb^0*h^0*e^1");
        let w = FreeWord::parse("-e*f - -2*h + 1/2").unwrap();
        assert_eq!(w.terms.len(), 3);
        assert_eq!(w.terms[0].0, rat(-1));
        assert_eq!(w.terms[1].0, rat(2));
        assert_eq!(w.terms[2], (ratio(1, 2), vec![]));
        assert!(FreeWord::parse("e*q").is_err());
        assert!(FreeWord::parse("e +").is_err());
        assert!(FreeWord::parse("f^-1").is_err());
    }
}
