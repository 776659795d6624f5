//! The twisting functor on M, the explicit isomorphisms between weight
//! families, and an exact search for window intertwiners.

mod iso;
mod map;
mod search;
mod twist;

pub use iso::{lambda_rescale_into, lambda_rescale_iso, vm_iso_check, vm_iso_check_with_b, vm_pinned_b, VmIsoResult};
pub use map::{check_map, check_window_map, image_rank, Actor, IsoCheckResult, LinearWindowMap};
pub use search::intertwiner_search;
pub use twist::{check_twist_iso, check_twist_iso_into, twist_target, twist_zero_is_identity, twisted_act, Twisted};
