//! The reflection equation, the symmetry relation, the trace identity and
//! unitarity for a candidate matrix `S(u)`, together with the solutions
//! `G(u)` and `K(u; a)`.
//!
//! A matrix function `S(u)` is stored as an `RFMatrix` whose entries use the
//! variable `u` for the spectral parameter and `a`, `b` for free parameters.

mod scalars;

pub use scalars::{g_ratio, h_shift, p_function, p_identity, scr_g, scr_g_any, trace_g};

use serde::Serialize;

use crate::exactalg::{MultiPoly, MultiRatFunc, Rational, Var};
use crate::tensorrep::{
    embed, gmatrices, rmatrix_cleared, trace, transpose_t, RFMatrix, SparseMatrix, SymmetricPair,
    TensorMatrix,
};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    #[serde(rename = "RE")]
    Reflection,
    #[serde(rename = "SYM")]
    Symmetry,
    #[serde(rename = "TRACE")]
    Trace,
    #[serde(rename = "UNITARITY")]
    Unitarity,
}

/// First offending entry of a failed identity, in row-major label order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub row: Vec<i32>,
    pub col: Vec<i32>,
    #[serde(serialize_with = "ser_expr")]
    pub value: MultiRatFunc,
}

fn ser_expr<S: serde::Serializer>(v: &MultiRatFunc, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_expr())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub identity: Identity,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Report {
    fn ok(identity: Identity) -> Self {
        Report { identity, holds: true, witness: None }
    }

    fn fail(identity: Identity, row: Vec<i32>, col: Vec<i32>, value: MultiRatFunc) -> Self {
        Report { identity, holds: false, witness: Some(Witness { row, col, value }) }
    }
}

fn u() -> MultiPoly {
    MultiPoly::var(Var::U)
}

fn v() -> MultiPoly {
    MultiPoly::var(Var::V)
}

/// `S(x)` for a polynomial argument `x`.
pub fn at(s: &RFMatrix, x: &MultiPoly) -> RFMatrix {
    s.map(|e| e.substitute(Var::U, x))
}

fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let g = MultiPoly::gcd(a, b);
    (a * &b.div_exact(&g).unwrap()).primitive()
}

/// `(D, D·S)` with `D` the lcm of all entry denominators.
fn clear_denominators(s: &RFMatrix) -> (MultiPoly, SparseMatrix<i32, MultiPoly>) {
    let den = s
        .entries()
        .fold(MultiPoly::one(), |acc, (_, _, e)| lcm(&acc, e.den()));
    let cleared = s.map(|e| e.num() * &den.div_exact(e.den()).unwrap());
    (den, cleared)
}

/// `R(u−v) S₁(u) R(u+v) S₂(v) = S₂(v) R(u+v) S₁(u) R(u−v)`, checked after
/// multiplying through by the common scalar denominator of both sides.
pub fn check_reflection_equation(pair: &SymmetricPair, s: &RFMatrix) -> Report {
    let (den, sc) = clear_denominators(s);
    let sv = sc.map(|e| e.substitute(Var::U, &v()));
    let (s1, _) = embed(pair, &sc);
    let (_, s2) = embed(pair, &sv);
    let xm = &u() - &v();
    let xp = &u() + &v();
    let rm = rmatrix_cleared(pair, &xm);
    let rp = rmatrix_cleared(pair, &xp);
    let lhs = &(&(&rm * &s1) * &rp) * &s2;
    let rhs = &(&(&s2 * &rp) * &s1) * &rm;
    let diff: TensorMatrix<MultiPoly> = &lhs - &rhs;
    let first = diff.entries().next().map(|(r, c, e)| (r, c, e.clone()));
    match first {
        None => Report::ok(Identity::Reflection),
        Some(((i1, i2), (j1, j2), val)) => {
            let k = MultiPoly::constant(pair.kappa());
            let scalar = &(&(&xm * &(&xm - &k)) * &(&xp * &(&xp - &k)))
                * &(&den * &den.substitute(Var::U, &v()));
            Report::fail(
                Identity::Reflection,
                vec![i1, i2],
                vec![j1, j2],
                MultiRatFunc::new(val, scalar),
            )
        }
    }
}

fn first_mismatch(a: &RFMatrix, b: &RFMatrix) -> Option<(i32, i32, MultiRatFunc)> {
    (a - b).entries().next().map(|(i, j, e)| (i, j, e.clone()))
}

/// `Sᵗ(u) = S(κ−u) ± (S(u) − S(κ−u))/(2u−κ) + (Tr G(u)·S(κ−u) − Tr S(u)·I)/(2u−2κ)`.
pub fn check_symmetry_relation(pair: &SymmetricPair, s: &RFMatrix) -> Report {
    let k = pair.kappa();
    let refl = MultiPoly::affine(k.clone(), &[(Var::U, -Rational::one())]);
    let sk = at(s, &refl);
    let two_u_k = MultiRatFunc::poly(MultiPoly::affine(-&k, &[(Var::U, Rational::int(2))]));
    let two_u_2k = MultiRatFunc::poly(MultiPoly::affine(-(&k + &k), &[(Var::U, Rational::int(2))]));
    let trg = MultiRatFunc::from_ratfunc(&trace_g(pair), Var::U);
    let trs = trace(s);
    let pm = MultiRatFunc::int(pair.pm());
    let ident = SparseMatrix::identity(&pair.indices());
    let rhs = &(&sk + &(s - &sk).scale(&(&pm / &two_u_k)))
        + &(&sk.scale(&trg) - &ident.scale(&trs)).scale(&two_u_2k.recip());
    let lhs = transpose_t(pair, s);
    match first_mismatch(&lhs, &rhs) {
        None => Report::ok(Identity::Symmetry),
        Some((i, j, e)) => Report::fail(Identity::Symmetry, vec![i], vec![j], e),
    }
}

/// `p(u)·Tr S(κ−u) = p_I(u)·Tr S(u)`.
pub fn trace_identity_check(pair: &SymmetricPair, s: &RFMatrix) -> Report {
    let k = pair.kappa();
    let refl = MultiPoly::affine(k, &[(Var::U, -Rational::one())]);
    let p = MultiRatFunc::from_ratfunc(&p_function(pair), Var::U);
    let pi = MultiRatFunc::from_ratfunc(&p_identity(pair), Var::U);
    let d = &(&p * &trace(s).substitute(Var::U, &refl)) - &(&pi * &trace(s));
    if d.is_zero() {
        Report::ok(Identity::Trace)
    } else {
        Report::fail(Identity::Trace, vec![], vec![], d)
    }
}

/// `S(u)S(−u) = w(u)·I` with `w` even; returns `w` on success.
pub fn check_unitarity(pair: &SymmetricPair, s: &RFMatrix) -> (Report, Option<MultiRatFunc>) {
    let neg = at(s, &-&u());
    let prod = s * &neg;
    let first = pair.indices()[0];
    let w = prod.get(first, first);
    let ident = SparseMatrix::identity(&pair.indices());
    if let Some((i, j, e)) = first_mismatch(&prod, &ident.scale(&w)) {
        return (Report::fail(Identity::Unitarity, vec![i], vec![j], e), None);
    }
    let wn = w.substitute(Var::U, &-&u());
    if wn != w {
        return (
            Report::fail(Identity::Unitarity, vec![first], vec![first], &w - &wn),
            None,
        );
    }
    (Report::ok(Identity::Unitarity), Some(w))
}

/// Limit of an entry as `u → ∞`, `None` if it grows.
fn limit_at_infinity(e: &MultiRatFunc) -> Option<MultiRatFunc> {
    let (dn, dd) = (e.num().degree_in(Var::U), e.den().degree_in(Var::U));
    if e.is_zero() || dn < dd {
        return Some(MultiRatFunc::zero());
    }
    if dn > dd {
        return None;
    }
    let ln = e.num().coeffs_in(Var::U).pop().unwrap();
    let ld = e.den().coeffs_in(Var::U).pop().unwrap();
    Some(MultiRatFunc::new(ln, ld))
}

/// `S(u) → G` as `u → ∞`.
pub fn has_constant_term_g(pair: &SymmetricPair, s: &RFMatrix) -> bool {
    let (g, _) = gmatrices(pair);
    let idx = pair.indices();
    idx.iter().all(|&i| {
        idx.iter()
            .all(|&j| limit_at_infinity(&s.get(i, j)).is_some_and(|l| l == g.get(i, j)))
    })
}

/// The trivial solution `G(u)`.
pub fn trivial_solution(pair: &SymmetricPair) -> RFMatrix {
    gmatrices(pair).1
}

/// `K(u; a) = k(u)(I − 2u/(u−a)·E_{−n,−n} − 2u/(u+a−2d)·E_{nn})` with
/// `k(u) = (u−a)(u+a−2d)/(u−d)²`, for `(so_N, so_{N−2} ⊕ so_2)` with `N ≥ 5`.
/// The parameter is any polynomial free of `u`, e.g. the symbol `a` or a constant.
pub fn kmatrix(pair: &SymmetricPair, a: &MultiPoly) -> Result<RFMatrix, Error> {
    if pair.symplectic() || pair.q != 2 || pair.big_n < 5 {
        return Err(Error::UnsupportedPair(format!(
            "K(u;a) needs (so_N, so_(N-2)+so_2) with N >= 5, got {pair}"
        )));
    }
    let d = MultiPoly::constant(pair.d());
    let two_d = &d + &d;
    let uu = u();
    let ua = &uu - a;
    let uad = &(&uu + a) - &two_d;
    let ud = &uu - &d;
    let k = MultiRatFunc::new(&ua * &uad, &ud * &ud);
    let n = pair.n() as i32;
    let two_u = MultiRatFunc::poly(uu.scale(&Rational::int(2)));
    let mut m = RFMatrix::zero();
    for i in pair.indices() {
        let e = if i == -n {
            &k * &(&MultiRatFunc::one() - &(&two_u / &MultiRatFunc::poly(ua.clone())))
        } else if i == n {
            &k * &(&MultiRatFunc::one() - &(&two_u / &MultiRatFunc::poly(uad.clone())))
        } else {
            k.clone()
        };
        m.set(i, i, e);
    }
    Ok(m)
}

/// All four checks in order RE, SYM, TRACE, UNITARITY.
pub fn verify_all(pair: &SymmetricPair, s: &RFMatrix) -> Vec<Report> {
    vec![
        check_reflection_equation(pair, s),
        check_symmetry_relation(pair, s),
        trace_identity_check(pair, s),
        check_unitarity(pair, s).0,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorrep::Family;

    fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
        SymmetricPair::build(f, n, qq).unwrap()
    }

    #[test]
    fn trivial_solution_so5_so4() {
        let p = pair(Family::BI, 5, 1);
        let g = trivial_solution(&p);
        for r in verify_all(&p, &g) {
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn kmatrix_symbolic_so6() {
        let p = pair(Family::DIa, 6, 2);
        let k = kmatrix(&p, &MultiPoly::var(Var::A)).unwrap();
        for r in verify_all(&p, &k) {
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn doubled_solution_only_breaks_normalization() {
        let p = pair(Family::BI, 5, 1);
        // every identity is linear in S, so only the normalization at infinity fails
        let g = trivial_solution(&p).scale(&MultiRatFunc::int(2));
        assert!(check_reflection_equation(&p, &g).holds);
        assert!(check_symmetry_relation(&p, &g).holds);
        assert!(!has_constant_term_g(&p, &g));
        assert!(has_constant_term_g(&p, &trivial_solution(&p)));
    }

    #[test]
    fn off_diagonal_perturbation_fails_reflection() {
        let p = pair(Family::BI, 5, 1);
        let mut s = SparseMatrix::identity(&p.indices());
        s.set(1, -1, MultiRatFunc::new(MultiPoly::one(), MultiPoly::var(Var::U)));
        let r = check_reflection_equation(&p, &s);
        assert!(!r.holds);
        assert!(r.witness.is_some());
    }
}
