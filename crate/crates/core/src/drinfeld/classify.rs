//! Finite-dimensionality verdicts and the `g_N^ρ`-weight of a tuple.

use serde::{Deserialize, Serialize};

use crate::exactalg::Rational;
use crate::lowrank::{so4_tuple, So4Tuple};
use crate::tensorrep::{Algebra, Family, SymmetricPair};
use crate::Error;

use super::associate::associate;
use super::tuple::{string_set, DrinfeldTuple};
use super::weight::{nontrivial_violations, HighestWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    FiniteDim,
    NotFiniteDim,
    NecessaryOnly,
}

/// Classification data: a Drinfeld tuple, or the two-scalar data of `so4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TupleData {
    Drinfeld(DrinfeldTuple),
    So4(So4Tuple),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub tuple: Option<TupleData>,
    pub violations: Vec<String>,
}

/// Highest weight `(μ_1, …, μ_n)` of the `g_N^ρ`-module generated by the
/// highest weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GWeight {
    pub components: Vec<Rational>,
}

fn deg(t: &DrinfeldTuple, i: usize) -> Rational {
    t.polys.get(i - 1).map_or(Rational::zero(), |p| Rational::int(p.degree() as i64))
}

fn a_value(pair: &SymmetricPair, t: &DrinfeldTuple) -> Rational {
    let d1 = deg(t, 1);
    match (pair.algebra, pair.odd()) {
        (Algebra::Sp, _) => d1,
        (Algebra::So, true) => d1 / Rational::int(2),
        (Algebra::So, false) => (d1 - deg(t, 2)) / Rational::int(2),
    }
}

/// `μ_i = −½A(P) − ½Σ_{a=2}^{i} deg P_a + δ_{i>𝓀}(α − N/4)`.
pub fn g_weight(pair: &SymmetricPair, t: &DrinfeldTuple) -> GWeight {
    let half = Rational::half();
    let quarter = Rational::new(pair.big_n as i64, 4);
    let mut acc = -(&a_value(pair, t) * &half);
    let mut components = vec![];
    for i in 1..=pair.n() {
        if i >= 2 {
            acc -= &(&deg(t, i) * &half);
        }
        let mut v = acc.clone();
        if i > pair.key() {
            if let Some(a) = &t.alpha {
                v += &(a - &quarter);
            }
        }
        components.push(v);
    }
    GWeight { components }
}

fn nonneg_int(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Dominance and integrality for a highest weight of `g_size` of the given
/// type, listed as `(λ_1, …, λ_rank)`.
pub fn finite_check(g: &[Rational], algebra: Algebra, size: usize) -> bool {
    let rank = size / 2;
    if g.len() != rank {
        return false;
    }
    if rank == 0 || (algebra == Algebra::So && size == 2) {
        return true;
    }
    if !g.windows(2).all(|w| nonneg_int(&(&w[0] - &w[1]))) {
        return false;
    }
    let first = match (algebra, size % 2) {
        (Algebra::Sp, _) => -g[0].clone(),
        (Algebra::So, 1) => -(&g[0] + &g[0]),
        (Algebra::So, _) => -(&g[0] + &g[1]),
    };
    nonneg_int(&first)
}

/// [`finite_check`] applied to both summands `g_{N−2ℓ} ⊕ g_{2ℓ}`.
pub fn finite_check_rho(pair: &SymmetricPair, g: &GWeight) -> bool {
    let key = pair.key();
    let ell = pair.ell();
    g.components.len() == pair.n()
        && finite_check(&g.components[..key], pair.algebra, pair.big_n - 2 * ell)
        && finite_check(&g.components[key..], pair.algebra, 2 * ell)
}

/// `2^{1−δ}(α − N/4)` is an integer bounded by
/// `A(P) + Σ_{a=2}^{𝓀+1} deg P_a + (1 − 2^{δ−1}) deg P_{𝓀+2}`.
pub fn integrality_bound_holds(pair: &SymmetricPair, t: &DrinfeldTuple) -> bool {
    let Some(a) = &t.alpha else { return true };
    let scale = if pair.symplectic() { Rational::one() } else { Rational::int(2) };
    let lhs = &scale * &(a - &Rational::new(pair.big_n as i64, 4));
    let key = pair.key();
    let mut rhs = a_value(pair, t);
    for i in 2..=key + 1 {
        rhs += &deg(t, i);
    }
    if !pair.symplectic() {
        rhs += &(&deg(t, key + 2) * &Rational::half());
    }
    lhs.is_integer() && lhs <= rhs
}

fn is_q2(pair: &SymmetricPair) -> bool {
    pair.algebra == Algebra::So && pair.q == 2 && pair.big_n >= 5 && pair.family != Family::BCD0
}

/// Verdict for a tuple on `pair`.
pub fn classify_tuple(pair: &SymmetricPair, t: &DrinfeldTuple) -> Result<Classification, Error> {
    if pair.is_so4() {
        return Err(Error::UnsupportedPair(format!("{pair} is classified from its weight")));
    }
    t.validate(pair)?;
    let mut violations = vec![];
    let verdict = if pair.family == Family::BCD0 || pair.is_so3() || is_q2(pair) {
        Verdict::FiniteDim
    } else if pair.family == Family::BI && pair.q == 1 {
        let a = t.alpha.clone().expect("validated tuple has α");
        let half_n = Rational::new(pair.big_n as i64, 2);
        let quarter = Rational::new(pair.big_n as i64, 4);
        if !a.in_lattice(&quarter, &Rational::half()) {
            violations.push(format!("α = {a} is not in 1/2 Z + {quarter}"));
        }
        let h = Rational::half();
        let mut need = string_set(&a, &(&half_n - &a));
        need.extend(string_set(&(&a + &h), &(&(&half_n - &a) + &h)));
        need.sort();
        for s in need {
            if !t.p(2).has_root(&s) {
                violations.push(format!("string element {s} is not a root of P_2"));
            }
        }
        if violations.is_empty() {
            Verdict::FiniteDim
        } else {
            Verdict::NotFiniteDim
        }
    } else {
        if !integrality_bound_holds(pair, t) {
            violations.push("2^(1-δ)(α - N/4) fails the integrality bound".into());
        }
        if !finite_check_rho(pair, &g_weight(pair, t)) {
            violations.push("g^ρ-weight is not dominant integral".into());
        }
        if violations.is_empty() {
            Verdict::NecessaryOnly
        } else {
            Verdict::NotFiniteDim
        }
    };
    Ok(Classification { verdict, tuple: Some(TupleData::Drinfeld(t.clone())), violations })
}

/// Verdict for a weight; weights whose Verma module vanishes are rejected.
pub fn classify_weight(w: &HighestWeight) -> Result<Classification, Error> {
    let bad = nontrivial_violations(w);
    if !bad.is_empty() {
        return Err(Error::NotAssociable(bad.join("; ")));
    }
    let not_fd = |why: String| Classification {
        verdict: Verdict::NotFiniteDim,
        tuple: None,
        violations: vec![why],
    };
    if w.pair.is_so4() {
        return match so4_tuple(w) {
            Ok(t) => Ok(Classification {
                verdict: Verdict::FiniteDim,
                tuple: Some(TupleData::So4(t)),
                violations: vec![],
            }),
            Err(Error::NotClassifiable(m)) => Ok(not_fd(m)),
            Err(e) => Err(e),
        };
    }
    match associate(w) {
        Ok(t) => classify_tuple(&w.pair, &t),
        Err(Error::NotAssociable(m)) => Ok(not_fd(format!("no associated tuple: {m}"))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drinfeld::synthesize;
    use crate::exactalg::q;

    fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
        SymmetricPair::build(f, n, qq).unwrap()
    }

    #[test]
    fn so5_strings() {
        let p = pair(Family::BI, 5, 1);
        let good = DrinfeldTuple::from_roots(&p, Some(q(7, 4)), &[vec![], vec![q(3, 4), q(5, 4)]]).unwrap();
        assert_eq!(classify_tuple(&p, &good).unwrap().verdict, Verdict::FiniteDim);
        let bad = DrinfeldTuple::from_roots(&p, Some(q(7, 4)), &[vec![], vec![]]).unwrap();
        let c = classify_tuple(&p, &bad).unwrap();
        assert_eq!(c.verdict, Verdict::NotFiniteDim);
        assert_eq!(c.violations.len(), 2);
        let off = DrinfeldTuple::from_roots(&p, Some(q(1, 1)), &[vec![], vec![]]).unwrap();
        assert_eq!(classify_tuple(&p, &off).unwrap().verdict, Verdict::NotFiniteDim);
    }

    #[test]
    fn trivial_weight_verdicts() {
        let c = classify_weight(&HighestWeight::trivial(&pair(Family::BI, 5, 1))).unwrap();
        assert_eq!(c.verdict, Verdict::FiniteDim);
        let c = classify_weight(&HighestWeight::trivial(&pair(Family::CII, 8, 2))).unwrap();
        assert_eq!(c.verdict, Verdict::NecessaryOnly);
        let c = classify_weight(&HighestWeight::trivial(&pair(Family::DIa, 4, 2))).unwrap();
        assert_eq!(c.verdict, Verdict::FiniteDim);
    }

    #[test]
    fn integrality_rejects() {
        let p = pair(Family::BI, 7, 3);
        let t = DrinfeldTuple::from_roots(&p, Some(q(1, 3)), &[vec![], vec![], vec![]]).unwrap();
        let w = synthesize(&p, &t).unwrap();
        let c = classify_weight(&w).unwrap();
        assert_eq!(c.verdict, Verdict::NotFiniteDim);
    }

    #[test]
    fn g_weights() {
        let p = pair(Family::DIa, 6, 2);
        let t = DrinfeldTuple::from_roots(&p, Some(q(3, 2)), &[vec![], vec![], vec![]]).unwrap();
        assert_eq!(g_weight(&p, &t).components, vec![q(0, 1), q(0, 1), q(0, 1)]);
        let t = DrinfeldTuple::from_roots(&p, Some(q(1, 1)), &[vec![], vec![], vec![]]).unwrap();
        assert_eq!(g_weight(&p, &t).components[2], q(-1, 2));
        assert!(finite_check(&[q(-1, 1), q(-2, 1)], Algebra::Sp, 4));
        assert!(!finite_check(&[q(-1, 2)], Algebra::Sp, 2));
        assert!(finite_check(&[q(-1, 2)], Algebra::So, 3));
        assert!(finite_check(&[q(3, 2), q(-5, 2)], Algebra::So, 4));
        assert!(!finite_check(&[q(3, 2), q(-1, 2)], Algebra::So, 4));
    }
}
