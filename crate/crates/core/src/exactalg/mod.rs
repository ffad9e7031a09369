//! Exact arithmetic over ℚ: rationals, univariate polynomials and rational
//! functions in `u`, and sparse multivariate polynomials and fractions in
//! `(u, v, a, b)`.

mod multipoly;
mod multiratfunc;
mod ratfunc;
mod rational;
mod roots;
mod unipoly;

pub use multipoly::{Mono, MultiPoly, Var, NVARS};
pub use multiratfunc::{mrf_equal, MultiRatFunc};
pub use ratfunc::RatFunc;
pub(crate) use ratfunc::render_linear;
pub use rational::{q, Rational};
pub use roots::{partial_roots, rational_roots};
pub use unipoly::{RootMultiset, UniPoly};

/// `P(u + a)`.
pub fn poly_shift(p: &UniPoly, a: &Rational) -> UniPoly {
    p.shift(a)
}

/// `(−1)^{deg P} P(−u + l)`.
pub fn poly_reflect(p: &UniPoly, l: &Rational) -> UniPoly {
    p.reflect(l)
}

/// First `k` coefficients of `f` in powers of `u^{-1}`.
pub fn series_at_infinity(f: &RatFunc, k: usize) -> Result<Vec<Rational>, crate::Error> {
    f.series_at_infinity(k)
}
