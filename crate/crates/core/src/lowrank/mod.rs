//! The rank-one and rank-two pairs `(so_3, so_2)` and `(so_4, so_2 ⊕ so_2)`:
//! the Olshanskii `Y⁺(2)` classification data, evaluation modules and their
//! classification, and the catalog of one-dimensional representations.

use serde::{Deserialize, Serialize};

use crate::drinfeld::{
    solve_shift_quotient, tilde, DrinfeldTuple, HighestWeight, SymPoly,
};
use crate::exactalg::{MultiPoly, MultiRatFunc, RatFunc, Rational, UniPoly, Var};
use crate::tensorrep::{Algebra, Family, RFMatrix, SymmetricPair};
use crate::Error;

/// A `Y⁺(2)` weight `μ°` together with its classification pair `(P°, γ°)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Y2Data {
    #[serde(rename = "muCirc")]
    pub mu_circ: RatFunc,
    #[serde(rename = "pCirc")]
    pub p_circ: UniPoly,
    #[serde(rename = "gammaCirc")]
    pub gamma_circ: Rational,
}

/// `μ°(−u)/μ°(u) = (2u+1)/(2u−1) · P°(u+1)/P°(u) · (u−γ°)/(u+γ°)` with
/// `P°` monic, `P°(u) = P°(1−u)` and `P°(γ°) ≠ 0`.
pub fn y2_check(d: &Y2Data) -> bool {
    let p = &d.p_circ;
    if p.is_zero() || !p.lc().is_one() || p.reflect(&Rational::one()) != *p {
        return false;
    }
    if p.eval(&d.gamma_circ).is_zero() || d.mu_circ.is_zero() {
        return false;
    }
    let one = Rational::one();
    let g = &d.gamma_circ;
    let lhs = &d.mu_circ.reflect(&Rational::zero()) / &d.mu_circ;
    let rhs = &(&RatFunc::linear(Rational::int(2), one.clone())
        / &RatFunc::linear(Rational::int(2), -&one))
        * &(&(&RatFunc::new(p.shift(&one), p.clone()) * &RatFunc::linear(one.clone(), -g))
            / &RatFunc::linear(one, g.clone()));
    lhs == rhs
}

/// Data `(Q, P, α, β)` classifying a finite-dimensional module of `so_4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct So4Tuple {
    #[serde(rename = "Q")]
    pub q: SymPoly,
    #[serde(rename = "P")]
    pub p: SymPoly,
    pub alpha: Rational,
    pub beta: Rational,
}

impl So4Tuple {
    pub fn to_pretty(&self) -> String {
        format!(
            "({}, {}, {}, {})",
            self.q.to_factored(),
            self.p.to_factored(),
            self.alpha,
            self.beta
        )
    }
}

fn so3() -> SymmetricPair {
    SymmetricPair::build(Family::BI, 3, 1).expect("so3 pair")
}

fn so4() -> SymmetricPair {
    SymmetricPair::build(Family::DIa, 4, 2).expect("so4 pair")
}

fn lift(e: Error) -> Error {
    match e {
        Error::NoSolution(m) => Error::NotClassifiable(m),
        other => other,
    }
}

fn nonzero_ratio(a: &RatFunc, b: &RatFunc) -> Result<RatFunc, Error> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::NotClassifiable("vanishing tilde component".into()));
    }
    Ok(a / b)
}

/// The unique `(P, α)` with `P(u) = P(3/2 − u)`, `P(α) ≠ 0` and
/// `μ̃₀/μ̃₁ = P(u+½)/P(u) · (α−u)/(α+u−1)`.
pub fn so3_tuple(w: &HighestWeight) -> Result<DrinfeldTuple, Error> {
    if !w.pair.is_so3() {
        return Err(Error::UnsupportedPair(format!("{} is not so3/so2", w.pair)));
    }
    let t = tilde(w);
    let f = nonzero_ratio(t.get(0), t.get(1))?;
    let (p, a) = solve_shift_quotient(&f, &Rational::half(), &Rational::new(3, 2), true).map_err(lift)?;
    Ok(DrinfeldTuple { alpha: a, polys: vec![p] })
}

/// The unique `(Q, P, α, β)` with `P, Q` symmetric about 2, `P(α), Q(β) ≠ 0`,
/// `μ̃₁(u)/μ̃₂(u) = P(u+1)/P(u) · (α−u)/(α+u−1)` and
/// `μ̃₁(1−u)/μ̃₂(u) = u/(1−u) · Q(u+1)/Q(u) · (β−u)/(β+u−1)`.
pub fn so4_tuple(w: &HighestWeight) -> Result<So4Tuple, Error> {
    if !w.pair.is_so4() {
        return Err(Error::UnsupportedPair(format!("{} is not so4/so2+so2", w.pair)));
    }
    let t = tilde(w);
    let one = Rational::one();
    let two = Rational::int(2);
    let f1 = nonzero_ratio(t.get(1), t.get(2))?;
    let (p, alpha) = solve_shift_quotient(&f1, &one, &two, true).map_err(lift)?;
    let corr = RatFunc::linear(-one.clone(), one.clone()) / RatFunc::x();
    let f2 = &nonzero_ratio(&t.get(1).reflect(&one), t.get(2))? * &corr;
    let (q, beta) = solve_shift_quotient(&f2, &one, &two, true).map_err(lift)?;
    Ok(So4Tuple {
        q,
        p,
        alpha: alpha.expect("scalar requested"),
        beta: beta.expect("scalar requested"),
    })
}

fn mu_var() -> MultiPoly {
    MultiPoly::var(Var::U)
}

fn mrf(n: MultiPoly, d: MultiPoly) -> MultiRatFunc {
    MultiRatFunc::new(n, d)
}

/// Evaluation matrix of `(so_4, so_2 ⊕ so_2)` on `V(μ₁, μ₂)`:
/// `s_ii = g_ii + 2g_ii F_ii u^{-1} + (F₁₁² − F₂₂²) u^{-2}` with `F_{−i,−i} = −F_ii`.
/// The parameters may be symbols `a`, `b` or constants.
pub fn ev_so4_matrix(mu1: &MultiPoly, mu2: &MultiPoly) -> RFMatrix {
    let pair = so4();
    let u = mu_var();
    let u2 = u.pow(2);
    let quad = &mu1.pow(2) - &mu2.pow(2);
    let mut m = RFMatrix::zero();
    for i in pair.indices() {
        let g = Rational::int(pair.g_entry(i));
        let f = if i.abs() == 1 { mu1 } else { mu2 };
        let f = if i < 0 { -f } else { f.clone() };
        let num = &(&u2.scale(&g) + &(&u * &f).scale(&(&g * &Rational::int(2)))) + &quad;
        m.set(i, i, mrf(num, u2.clone()));
    }
    m
}

/// `μ_i(u) = g_ii + 2g_ii μ_i u^{-1} + (μ₁² − μ₂²) u^{-2}`.
pub fn ev_so4_weight(mu1: &Rational, mu2: &Rational) -> HighestWeight {
    let pair = so4();
    let quad = &(mu1 * mu1) - &(mu2 * mu2);
    let u2 = UniPoly::x().pow(2);
    let mu = [mu1, mu2]
        .iter()
        .zip(pair.positive_indices())
        .map(|(m, i)| {
            let g = Rational::int(pair.g_entry(i));
            let two_gm = &(&g * &Rational::int(2)) * *m;
            RatFunc::new(UniPoly::new(vec![quad.clone(), two_gm, g]), u2.clone())
        })
        .collect();
    HighestWeight::new(pair, mu).expect("two components")
}

/// Weight and matrix of the evaluation module `V(μ₁, μ₂)`.
pub fn ev_so4(mu1: &Rational, mu2: &Rational) -> (HighestWeight, RFMatrix) {
    let m = ev_so4_matrix(&MultiPoly::constant(mu1.clone()), &MultiPoly::constant(mu2.clone()));
    (ev_so4_weight(mu1, mu2), m)
}

/// Evaluation matrix of `(so_3, so_2)` on `V(μ)`, with `d = ¼`, `F^ρ₁₁ = 2μ`:
/// `s_ii = (g_ii u − d + (d(2μ)² + u F^ρ_ii)/(u + d))/(u − d)`.
pub fn ev_so3_matrix(mu: &MultiPoly) -> RFMatrix {
    let pair = so3();
    let d = MultiPoly::constant(pair.d());
    let u = mu_var();
    let f11 = mu.scale(&Rational::int(2));
    let sq = &d * &f11.pow(2);
    let den = &(&u - &d) * &(&u + &d);
    let mut m = RFMatrix::zero();
    for i in pair.indices() {
        let g = Rational::int(pair.g_entry(i));
        let f = match i.signum() {
            1 => f11.clone(),
            -1 => -&f11,
            _ => MultiPoly::zero(),
        };
        let lin = &u.scale(&g) - &d;
        let num = &(&(&lin * &(&u + &d)) + &sq) + &(&u * &f);
        m.set(i, i, mrf(num, den.clone()));
    }
    m
}

/// `μ₀ = −1 + 2d(2μ² − (u+d))/(u² − d²)`, `μ₁ = 1 + 2μ(u + 2dμ)/(u² − d²)`.
pub fn ev_so3_weight(mu: &Rational) -> HighestWeight {
    let pair = so3();
    let d = pair.d();
    let two = Rational::int(2);
    let den = UniPoly::new(vec![-(&d * &d), Rational::zero(), Rational::one()]);
    let two_d = &two * &d;
    let n0 = UniPoly::new(vec![&two_d * &(&(&two * &(mu * mu)) - &d), -two_d.clone()]);
    let n1 = UniPoly::new(vec![&(&two * mu) * &(&two_d * mu), &two * mu]);
    let mu0 = &RatFunc::int(-1) + &RatFunc::new(n0, den.clone());
    let mu1 = &RatFunc::one() + &RatFunc::new(n1, den);
    HighestWeight::new(pair, vec![mu0, mu1]).expect("two components")
}

/// Weight and matrix of the evaluation module `V(μ)`.
pub fn ev_so3(mu: &Rational) -> (HighestWeight, RFMatrix) {
    (ev_so3_weight(mu), ev_so3_matrix(&MultiPoly::constant(mu.clone())))
}

/// The `Y⁺(2)` data behind `V(μ)`: `μ°(u) = 1 + 2μ/(u + ½)`, and `(P°, γ°)`
/// read off the `so_3` tuple `(P, α)` through `P°(x) = 2^{deg P} P((x+1)/2)`,
/// `γ° = 2α − 1`.
pub fn so3_eval_y2(mu: &Rational) -> Result<Y2Data, Error> {
    let h = Rational::half();
    let mu_circ = RatFunc::linear(Rational::one(), &h + &(mu * &Rational::int(2)))
        / RatFunc::linear(Rational::one(), h.clone());
    let t = so3_tuple(&ev_so3_weight(mu))?;
    let p_circ = t.p(1).poly().compose_affine(&h, &h).monic();
    let alpha = t.alpha.expect("so3 tuples carry α");
    let gamma_circ = &(&alpha * &Rational::int(2)) - &Rational::one();
    Ok(Y2Data { mu_circ, p_circ, gamma_circ })
}

/// Shape of the family of one-dimensional representations of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OneDimKind {
    /// Only the trivial module `V(G)`.
    TrivialOnly,
    /// `V(a)` from the solution `K(u; a)`.
    KMatrix,
    /// `V(μ)` for `(so_3, so_2)`.
    So3Eval,
    /// `V(μ₁, μ₂)` for `(so_4, so_2 ⊕ so_2)`.
    So4Eval,
}

/// One-dimensional representations of a pair, up to twisting by `ν_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDimCatalog {
    pub pair: SymmetricPair,
    pub kind: OneDimKind,
    pub parameters: usize,
    pub description: String,
}

impl OneDimCatalog {
    /// Highest weight of the member with the given parameters.
    pub fn weight(&self, params: &[Rational]) -> Result<HighestWeight, Error> {
        if params.len() != self.parameters {
            return Err(Error::Parse(format!(
                "{} takes {} parameter(s), got {}",
                self.pair,
                self.parameters,
                params.len()
            )));
        }
        match self.kind {
            OneDimKind::TrivialOnly => Ok(HighestWeight::trivial(&self.pair)),
            OneDimKind::KMatrix => HighestWeight::kmatrix(&self.pair, &params[0]),
            OneDimKind::So3Eval => Ok(ev_so3_weight(&params[0])),
            OneDimKind::So4Eval => Ok(ev_so4_weight(&params[0], &params[1])),
        }
    }
}

/// The catalog of one-dimensional representations of `pair`.
pub fn onedim_catalog(pair: &SymmetricPair) -> OneDimCatalog {
    let (kind, parameters, description) = if pair.is_so3() {
        (OneDimKind::So3Eval, 1, "evaluation modules V(mu), mu in Q".to_string())
    } else if pair.is_so4() {
        (OneDimKind::So4Eval, 2, "evaluation modules V(mu1, mu2), mu1, mu2 in Q".to_string())
    } else if pair.algebra == Algebra::So
        && pair.family != Family::BCD0
        && pair.q == 2
        && pair.big_n >= 5
    {
        (
            OneDimKind::KMatrix,
            1,
            "modules V(a) of K(u;a), a in Q, with tuple (kappa - a, 1, ..., 1)".to_string(),
        )
    } else {
        (OneDimKind::TrivialOnly, 0, "the trivial module V(G) only".to_string())
    };
    OneDimCatalog { pair: pair.clone(), kind, parameters, description }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drinfeld::{associate, check_nontrivial, classify_weight, untilde, TildeWeight, Verdict};
    use crate::exactalg::q;
    use crate::reflection::{check_reflection_equation, check_symmetry_relation, trivial_solution};

    fn ratio(num: &[Rational], den: &[Rational]) -> RatFunc {
        RatFunc::new(UniPoly::from_root_list(num), UniPoly::from_root_list(den))
    }

    #[test]
    fn y2_examples() {
        let one = UniPoly::one();
        let d = |g: Rational| Y2Data { mu_circ: RatFunc::one(), p_circ: one.clone(), gamma_circ: g };
        assert!(y2_check(&d(q(1, 2))));
        assert!(!y2_check(&d(q(-1, 2))));
        for g in [q(0, 1), q(3, 2), q(-5, 4)] {
            let mu_circ = RatFunc::linear(Rational::one(), g.clone()) / RatFunc::linear(Rational::one(), q(1, 2));
            assert!(y2_check(&Y2Data { mu_circ, p_circ: one.clone(), gamma_circ: g }));
        }
        let asym = UniPoly::from_root_list(&[q(0, 1)]);
        assert!(!y2_check(&Y2Data { mu_circ: RatFunc::one(), p_circ: asym, gamma_circ: q(1, 2) }));
    }

    #[test]
    fn so4_example_weight() {
        let w = ev_so4_weight(&q(1, 1), &q(0, 1));
        let u = RatFunc::x();
        let expect = &(&RatFunc::one() + &(&RatFunc::int(2) / &u)) + &(&RatFunc::one() / &(&u * &u));
        assert_eq!(w.get(1), &expect);
    }

    #[test]
    fn zero_parameters_give_g() {
        assert_eq!(ev_so3_matrix(&MultiPoly::zero()), trivial_solution(&so3()));
        assert_eq!(ev_so4_matrix(&MultiPoly::zero(), &MultiPoly::zero()), trivial_solution(&so4()));
        assert_eq!(ev_so3_weight(&q(0, 1)), HighestWeight::trivial(&so3()));
        assert_eq!(ev_so4_weight(&q(0, 1), &q(0, 1)), HighestWeight::trivial(&so4()));
    }

    #[test]
    fn matrices_satisfy_relations_symbolically() {
        let s3 = ev_so3_matrix(&MultiPoly::var(Var::A));
        assert!(check_reflection_equation(&so3(), &s3).holds);
        assert!(check_symmetry_relation(&so3(), &s3).holds);
        let s4 = ev_so4_matrix(&MultiPoly::var(Var::A), &MultiPoly::var(Var::B));
        assert!(check_reflection_equation(&so4(), &s4).holds);
        assert!(check_symmetry_relation(&so4(), &s4).holds);
    }

    #[test]
    fn matrix_diagonal_matches_weight() {
        for mu in [q(1, 1), q(-3, 4)] {
            let (w, m) = ev_so3(&mu);
            for i in w.pair.positive_indices() {
                assert_eq!(m.get(i, i).to_ratfunc(Var::U).unwrap(), *w.get(i));
            }
        }
        let (w, m) = ev_so4(&q(2, 3), &q(-1, 2));
        for i in [1, 2] {
            assert_eq!(m.get(i, i).to_ratfunc(Var::U).unwrap(), *w.get(i));
        }
    }

    #[test]
    fn so3_trivial_tuple() {
        let t = so3_tuple(&HighestWeight::trivial(&so3())).unwrap();
        assert_eq!(t.alpha, Some(q(3, 4)));
        assert!(t.p(1).is_one());
    }

    #[test]
    fn so3_eval_tuple_shifts_alpha() {
        for mu in [q(1, 1), q(-1, 2), q(5, 3)] {
            let w = ev_so3_weight(&mu);
            assert!(check_nontrivial(&w));
            let t = so3_tuple(&w).unwrap();
            assert_eq!(t.alpha, Some(&mu + &q(3, 4)));
            assert!(t.p(1).is_one());
            assert_eq!(associate(&w).unwrap(), t);
            assert_eq!(classify_weight(&w).unwrap().verdict, Verdict::FiniteDim);
        }
    }

    #[test]
    fn so3_eval_y2_factorization() {
        for mu in [q(0, 1), q(1, 1), q(-7, 4), q(2, 5)] {
            let y = so3_eval_y2(&mu).unwrap();
            assert!(y2_check(&y), "{mu}");
            let w = ev_so3_weight(&mu);
            let prod = &y.mu_circ.compose_affine(&q(2, 1), &q(-1, 1)) * &y.mu_circ.compose_affine(&q(2, 1), &q(0, 1));
            assert_eq!(&prod, w.get(1));
        }
    }

    #[test]
    fn so4_trivial_tuple() {
        let t = so4_tuple(&HighestWeight::trivial(&so4())).unwrap();
        assert!(t.p.is_one() && t.q.is_one());
        assert_eq!((t.alpha, t.beta), (q(1, 1), q(1, 1)));
    }

    #[test]
    fn so4_eval_classifies() {
        for (a, b) in [(q(1, 1), q(0, 1)), (q(-1, 2), q(3, 2)), (q(2, 3), q(2, 3))] {
            let w = ev_so4_weight(&a, &b);
            assert!(check_nontrivial(&w));
            let t = so4_tuple(&w).unwrap();
            assert!(t.p.is_one() && t.q.is_one());
            assert_eq!(classify_weight(&w).unwrap().verdict, Verdict::FiniteDim);
        }
    }

    #[test]
    fn not_classifiable() {
        let two_u = RatFunc::linear(q(2, 1), q(0, 1));
        let t = TildeWeight::new(so3(), vec![&two_u * &ratio(&[q(1, 3)], &[q(1, 7)]), two_u]).unwrap();
        let w = untilde(&t);
        let r = so3_tuple(&w); assert!(matches!(r, Err(Error::NotClassifiable(_))), "{r:?}");
        let t = TildeWeight::new(so4(), vec![ratio(&[q(1, 3), q(1, 1)], &[q(1, 7)]), RatFunc::x()]).unwrap();
        let w = untilde(&t);
        assert!(matches!(so4_tuple(&w), Err(Error::NotClassifiable(_))));
    }

    #[test]
    fn so4_tuple_serde() {
        let t = so4_tuple(&HighestWeight::trivial(&so4())).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<So4Tuple>(&s).unwrap(), t);
    }

    #[test]
    fn catalog() {
        let cii = SymmetricPair::build(Family::CII, 8, 4).unwrap();
        assert_eq!(onedim_catalog(&cii).kind, OneDimKind::TrivialOnly);
        let dia = SymmetricPair::build(Family::DIa, 6, 2).unwrap();
        let c = onedim_catalog(&dia);
        assert_eq!((c.kind, c.parameters), (OneDimKind::KMatrix, 1));
        let t = associate(&c.weight(&[q(1, 2)]).unwrap()).unwrap();
        assert_eq!(t.alpha, Some(&dia.kappa() - &q(1, 2)));
        assert!(t.polys.iter().all(SymPoly::is_one));
        assert_eq!(onedim_catalog(&so4()).parameters, 2);
        assert_eq!(onedim_catalog(&so3()).parameters, 1);
        assert!(c.weight(&[]).is_err());
    }
}
