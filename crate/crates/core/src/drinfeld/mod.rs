//! Highest weights of twisted Yangians, their Drinfeld tuples, and the
//! transformations and classification rules acting on them.

mod associate;
mod classify;
mod solve;
mod transform;
mod tuple;
mod weight;
mod yangian;

pub use associate::{associate, square_root, synthesize};
pub use classify::{
    classify_tuple, classify_weight, finite_check, finite_check_rho, g_weight, integrality_bound_holds,
    Classification, GWeight, TupleData, Verdict,
};
pub use solve::solve_shift_quotient;
pub use transform::{
    normalize_w1, normalizer_series, nu_twist, psi_twist, psi_twist_weight, restrict_tuple,
    restrict_weight, tensor_compose,
};
pub use tuple::{centers, poly2_reduce, string_set, DrinfeldTuple, SymPoly};
pub use weight::{check_nontrivial, nontrivial_violations, tilde, untilde, HighestWeight, TildeWeight};
pub use yangian::{check_nontrivial_x, YangianWeight};

/// Degree cap on solved polynomials, read from `TYK_MAX_DEGREE` (default 128).
pub fn max_degree() -> usize {
    std::env::var("TYK_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(128)
}
