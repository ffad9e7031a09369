//! Scalar functions attached to a pair: `Tr G(u)`, `p(u)`, `𝔤(u)`, `h_m(u)`.

use crate::exactalg::{RatFunc, Rational};
use crate::tensorrep::SymmetricPair;
use crate::Error;

fn lin(a: i64, b: Rational) -> RatFunc {
    RatFunc::linear(Rational::int(a), b)
}

/// `Tr G(u) = (p − q)(p + q − 4u)/(p − q − 4u)`.
pub fn trace_g(pair: &SymmetricPair) -> RatFunc {
    let (p, q) = (pair.p() as i64, pair.q as i64);
    if p == q {
        return RatFunc::zero();
    }
    lin(-4, Rational::int(p + q)).scale(&Rational::int(p - q)) / lin(-4, Rational::int(p - q))
}

fn p_with_trace(pair: &SymmetricPair, tr: &RatFunc) -> RatFunc {
    let k = pair.kappa();
    let a = lin(2, -&k).recip().scale(&Rational::int(-pair.pm()));
    let b = tr / &lin(2, -(&k + &k));
    &(&RatFunc::one() + &a) + &b
}

/// `p(u) = 1 ∓ 1/(2u − κ) + Tr G(u)/(2u − 2κ)`.
pub fn p_function(pair: &SymmetricPair) -> RatFunc {
    p_with_trace(pair, &trace_g(pair))
}

/// `p_I(u)`: the same with `G = I`.
pub fn p_identity(pair: &SymmetricPair) -> RatFunc {
    p_with_trace(pair, &RatFunc::int(pair.big_n as i64))
}

/// `𝔤(u) = [±](p + q − 4u)/(p − q − 4u)`, defined for every pair.
pub fn scr_g_any(pair: &SymmetricPair) -> RatFunc {
    let (p, q) = (pair.p() as i64, pair.q as i64);
    (lin(-4, Rational::int(p + q)) / lin(-4, Rational::int(p - q)))
        .scale(&Rational::int(pair.inner_sign()))
}

/// `𝔤(u)`; rejects `p = q` where it no longer arises from `Tr G(u)`.
pub fn scr_g(pair: &SymmetricPair) -> Result<RatFunc, Error> {
    if pair.p() == pair.q {
        return Err(Error::DegeneratePQ);
    }
    Ok(scr_g_any(pair))
}

/// `𝔤(κ − u)/𝔤(u) = (2u−κ±1)(2u+q−κ∓1)/((2u−κ∓1)(2u−q−κ±1))`.
pub fn g_ratio(pair: &SymmetricPair) -> RatFunc {
    let k = pair.kappa();
    let s = Rational::int(pair.pm());
    let qq = Rational::int(pair.q as i64);
    let f = |c: Rational| lin(2, c);
    (f(-&k + &s) * f(&qq - &k - &s)) / (f(-&k - &s) * f(-&qq - &k + &s))
}

/// `h_m(u) = u/(u + m/2) · 𝔤_m(u)/𝔤(u + m/2)` for the reduced pair.
pub fn h_shift(pair: &SymmetricPair, m: usize) -> Result<RatFunc, Error> {
    let red = pair.reduce(m)?;
    let half = Rational::new(m as i64, 2);
    let g = scr_g_any(pair).shift(&half);
    let gm = scr_g_any(&red);
    Ok(RatFunc::x() / RatFunc::linear(Rational::one(), half) * gm / g)
}
