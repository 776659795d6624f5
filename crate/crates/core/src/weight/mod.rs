//! The weight families M, N, V spanned by the functionals `eta_{k,s}` on
//! `Q[h, hbar]`, with `eta_{k,s}(p) = (dbar^(s-1) p)(alpha + 2k, beta)`.

mod checks;
mod module;
mod singular;
mod vec;

pub use checks::{dual_consistency, weight_bracket_check, BracketFailure, DualReport, Probe};
pub use module::{eval_functional, make_m, make_n, make_v, WeightFamily, WeightModuleSpec};
pub use singular::{
    layer_certificate, predicted_singular, simplicity_criterion_weight, singular_vectors, verma_check, KillingPair,
    Simplicity, SingularReport, SingularVector, VermaReport, Witness, WitnessKind,
};
pub use vec::{WeightVec, Window};
