//! Operations on weights and tuples: tensoring with Yangian modules,
//! restriction, the ψσ twist and the ν_g rescaling.

use std::collections::BTreeMap;

use crate::exactalg::{rational_roots, RatFunc, Rational, RootMultiset, UniPoly};
use crate::reflection::h_shift;
use crate::tensorrep::{Family, SymmetricPair};
use crate::Error;

use super::associate::associate;
use super::max_degree;
use super::tuple::{centers, poly2_reduce, DrinfeldTuple};
use super::weight::{tilde, untilde, HighestWeight, TildeWeight};

/// `(Q_i ⊙ P_i)(u) = (−1)^{deg Q_i} Q_i(u−κ/2) Q_i(c_i−κ/2−u) P_i(u)`, with the
/// reduction of `(α, P_{𝓀+1})` applied when `α` becomes a root.
pub fn tensor_compose(
    pair: &SymmetricPair,
    qs: &[UniPoly],
    t: &DrinfeldTuple,
) -> Result<DrinfeldTuple, Error> {
    t.validate(pair)?;
    if qs.len() != pair.n() {
        return Err(Error::InvalidTuple(format!("{pair} needs {} polynomials Q_i", pair.n())));
    }
    let half_k = &pair.kappa() / &Rational::int(2);
    let mut polys = Vec::with_capacity(qs.len());
    for ((qp, p), c) in qs.iter().zip(&t.polys).zip(centers(pair)) {
        if qp.is_zero() || !qp.lc().is_one() {
            return Err(Error::InvalidTuple(format!("Q = {qp} is not monic")));
        }
        let mut extra = RootMultiset::new();
        for (s, e) in rational_roots(qp)? {
            *extra.entry(&s + &half_k).or_default() += e;
            *extra.entry(&(&c - &half_k) - &s).or_default() += e;
        }
        polys.push(p.times(&extra)?);
    }
    let mut alpha = t.alpha.clone();
    if let Some(a) = &t.alpha {
        let k = pair.key() + 1;
        if polys[k - 1].has_root(a) {
            let m = if pair.key() == 0 { Rational::half() } else { Rational::one() };
            let (l, pr) = poly2_reduce(&polys[k - 1], a, &m);
            alpha = Some(a - &(&m * &Rational::int(l as i64)));
            polys[k - 1] = pr;
        }
    }
    Ok(DrinfeldTuple { alpha, polys })
}

/// `(α − m/2, P₁(u+m/2), …, P_{n−m}(u+m/2))` on the reduced pair.
pub fn restrict_tuple(
    pair: &SymmetricPair,
    t: &DrinfeldTuple,
    m: usize,
) -> Result<(SymmetricPair, DrinfeldTuple), Error> {
    let red = pair.reduce(m)?;
    t.validate(pair)?;
    let h = Rational::new(m as i64, 2);
    let alpha = if red.family == Family::BCD0 { None } else { t.alpha.as_ref().map(|a| a - &h) };
    let polys = t.polys[..pair.n() - m].iter().map(|p| p.shift(&h)).collect();
    Ok((red, DrinfeldTuple { alpha, polys }))
}

/// The weight `h_m(u) μ°ᵐ(u)` seen on the restricted module, where
/// `μ̃°ᵐ_i(u) = μ̃_i(u + m/2)`.
pub fn restrict_weight(w: &HighestWeight, m: usize) -> Result<HighestWeight, Error> {
    let red = w.pair.reduce(m)?;
    let h = h_shift(&w.pair, m)?;
    let t = tilde(w);
    let shift = Rational::new(m as i64, 2);
    let comps = red.positive_indices().into_iter().map(|i| t.get(i).shift(&shift)).collect();
    Ok(untilde(&TildeWeight { pair: red, tilde: comps }).scale_by(&h))
}

fn require_bi1(pair: &SymmetricPair) -> Result<(), Error> {
    if pair.family != Family::BI || pair.q != 1 {
        return Err(Error::UnsupportedPair(format!("the ψσ twist needs (so_2n+1, so_2n), got {pair}")));
    }
    Ok(())
}

/// Roots of `Π_{k<len} (u − a − k)(u − a − 1/2 − k)`.
fn half_string(a: &Rational, len: i64) -> RootMultiset {
    let mut r = RootMultiset::new();
    for k in 0..len {
        let base = a + &Rational::int(k);
        *r.entry(&base + &Rational::half()).or_default() += 1;
        *r.entry(base).or_default() += 1;
    }
    r
}

/// The ψσ twist on tuples: `α ↦ N/2 − α` with the matching change of `P₂`.
pub fn psi_twist(pair: &SymmetricPair, t: &DrinfeldTuple) -> Result<DrinfeldTuple, Error> {
    require_bi1(pair)?;
    t.validate(pair)?;
    let a = t.alpha.clone().expect("validated tuple has α");
    let half_n = Rational::new(pair.big_n as i64, 2);
    let quarter = Rational::new(pair.big_n as i64, 4);
    let mut out = t.clone();
    out.alpha = Some(&half_n - &a);
    if pair.n() == 1 {
        return Ok(out);
    }
    let gap = &(&a + &a) - &half_n;
    if !gap.is_integer() {
        return Err(Error::InvalidTuple(format!("α = {a} is not in 1/2 Z + {quarter}")));
    }
    let len = gap.to_i64().expect("small gap");
    if len <= 0 {
        // P_α⁻: roots α + k and α + 1/2 + k for 0 ≤ k < N/2 − 2α.
        out.polys[1] = t.polys[1].times(&half_string(&a, -len))?;
    } else {
        // P_α: roots α − 1 − k and α − 1/2 − k for 0 ≤ k < 2α − N/2.
        let start = &a - &Rational::int(len);
        let pa = half_string(&start, len);
        out.polys[1] = t.polys[1].divide(&pa).ok_or_else(|| {
            Error::StringConditionViolated(format!(
                "P_2 = {} is not divisible by the string polynomial of α = {a}",
                t.polys[1].to_factored()
            ))
        })?;
    }
    Ok(out)
}

/// The ψσ twist on weights.
pub fn psi_twist_weight(w: &HighestWeight) -> Result<HighestWeight, Error> {
    require_bi1(&w.pair)?;
    let a = associate(w)?.alpha.expect("pair has α");
    let nn = Rational::int(w.pair.big_n as i64);
    let lin = |s: i64, c: Rational| RatFunc::linear(Rational::int(s), c);
    let two_a = &a + &a;
    let common = lin(2, &Rational::int(2) - &two_a) / lin(2, &(&two_a - &nn) + &Rational::int(2));
    let f0 = &(lin(-2, &nn - &two_a) / lin(-2, two_a.clone())) * &common;
    let f1 = &(lin(2, &Rational::one() - &two_a) / lin(2, &(&two_a - &nn) + &Rational::one())) * &common;
    // μ_i is unchanged for i ≥ 2, hence so is μ̃_i.
    let mut t = tilde(w);
    t.tilde[0] = &t.tilde[0] * &f0;
    t.tilde[1] = &t.tilde[1] * &f1;
    Ok(untilde(&t))
}

/// `μ_i(u) ↦ g(u − κ/2) μ_i(u)` for even `g` with constant term 1.
pub fn nu_twist(w: &HighestWeight, g: &RatFunc) -> Result<HighestWeight, Error> {
    if !g.is_even() || g.value_at_infinity().ok() != Some(Rational::one()) {
        return Err(Error::InvalidTuple(format!("{g} is not an even series with constant term 1")));
    }
    let k = w.pair.kappa();
    Ok(w.scale_by(&g.shift(&-&(&k / &Rational::int(2)))))
}

fn inverse_nu(w: &HighestWeight) -> RatFunc {
    let n = w.pair.n() as i32;
    let mn = w.get(n);
    (mn * &mn.reflect(&Rational::zero())).recip()
}

/// The even `g` for which `w(u)` acts as 1 on the twisted module, with the
/// twisted weight.
pub fn normalize_w1(w: &HighestWeight) -> Result<(RatFunc, HighestWeight), Error> {
    let e = inverse_nu(w);
    let (lc, num, den) = e.factor().map_err(|_| Error::NoRationalNormalizer)?;
    if !lc.is_one() {
        return Err(Error::NoRationalNormalizer);
    }
    let k = w.pair.kappa();
    // Exponents F with F(x) + F(x − κ) = E(x) after pairing a(u)a(u+κ).
    let mut classes: BTreeMap<Rational, BTreeMap<Rational, i64>> = BTreeMap::new();
    for (roots, s) in [(&num, 1i64), (&den, -1i64)] {
        for (r, &m) in roots {
            let base = r - &(&Rational::from_big((r / &k).floor()) * &k);
            *classes.entry(base).or_default().entry(r.clone()).or_default() += s * m as i64;
        }
    }
    let cap = max_degree();
    let mut exps: BTreeMap<Rational, i64> = BTreeMap::new();
    for pts in classes.values() {
        let lo = pts.keys().next().expect("nonempty").clone();
        let hi = pts.keys().last().expect("nonempty").clone();
        let steps = ((&hi - &lo) / &k).to_i64().ok_or(Error::NoRationalNormalizer)?;
        if steps as usize > cap {
            return Err(Error::DegreeLimit(format!("normalizer span {steps} exceeds {cap}")));
        }
        // F(x) = Σ_{j≥0} (−1)^j E(x + jκ), downward from the top.
        let mut above = 0i64;
        for s in (0..=steps).rev() {
            let x = &lo + &(&k * &Rational::int(s));
            let f = pts.get(&x).copied().unwrap_or(0) - above;
            above = f;
            if f != 0 {
                exps.insert(x, f);
            }
        }
        if above != 0 {
            return Err(Error::NoRationalNormalizer);
        }
    }
    // a(u) has a root at x of multiplicity F(x); E(x) = F(x) + F(x + κ)
    // because a(u + κ) vanishes at x − κ.
    let (mut top, mut bot) = (RootMultiset::new(), RootMultiset::new());
    for (x, f) in exps {
        if f > 0 {
            top.insert(x, f as usize);
        } else {
            bot.insert(x, (-f) as usize);
        }
    }
    let a = RatFunc::from_roots(Rational::one(), &top, &bot);
    if &a * &a.shift(&k) != e {
        return Err(Error::NoRationalNormalizer);
    }
    let g = a.shift(&(&k / &Rational::int(2)));
    let tw = nu_twist(w, &g)?;
    Ok((g, tw))
}

/// First `order` coefficients of the series `a(u) = 1 + a₁u⁻¹ + …` with
/// `a(u)a(u+κ) = (μ_n(u)μ_n(−u))⁻¹`; used when no rational normalizer exists.
pub fn normalizer_series(w: &HighestWeight, order: usize) -> Result<Vec<Rational>, Error> {
    let e = inverse_nu(w).series_at_infinity(order)?;
    let k = w.pair.kappa();
    // C(r+j−1, j) with sign (−1)^j gives the expansion of (u+κ)^{−r}.
    let binom = |n: usize, r: usize| -> Rational {
        (0..r).fold(Rational::one(), |acc, i| {
            acc * Rational::int((n - i) as i64) / Rational::int((i + 1) as i64)
        })
    };
    let mut a: Vec<Rational> = vec![Rational::one()];
    let shifted = |a: &[Rational], s: usize| -> Rational {
        let mut acc = Rational::zero();
        for r in 1..=s.min(a.len() - 1) {
            let j = s - r;
            let c = binom(r + j - 1, j) * k.pow(j as i32);
            let c = if j % 2 == 1 { -c } else { c };
            acc += &(&a[r] * &c);
        }
        if s == 0 {
            acc += &a[0];
        }
        acc
    };
    for s in 1..order {
        a.push(Rational::zero());
        let mut rest = Rational::zero();
        for t in 0..=s {
            rest += &(&a[t] * &shifted(&a, s - t));
        }
        // a_s enters twice with coefficient 1; it is currently zero.
        let val = (&e[s] - &rest) / Rational::int(2);
        a[s] = val;
    }
    Ok(a.into_iter().take(order).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drinfeld::{classify_tuple, synthesize, SymPoly, Verdict};
    use crate::exactalg::q;

    fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
        SymmetricPair::build(f, n, qq).unwrap()
    }

    #[test]
    fn compose_identity_and_example() {
        let p = pair(Family::DIa, 6, 2);
        let t = DrinfeldTuple::trivial(&p);
        let ones = vec![UniPoly::one(); 3];
        assert_eq!(tensor_compose(&p, &ones, &t).unwrap(), t);
        let beta = q(1, 7);
        let qs = vec![UniPoly::one(), UniPoly::linear_root(&beta), UniPoly::one()];
        let out = tensor_compose(&p, &qs, &t).unwrap();
        let want = SymPoly::from_root_list(&[&beta + &q(1, 1), &q(2, 1) - &beta], q(3, 1)).unwrap();
        assert_eq!(out.polys[1], want);
        assert_eq!(out.alpha, Some(q(3, 2)));
    }

    #[test]
    fn compose_collision_reduces() {
        let p = pair(Family::DIa, 6, 2);
        let t = DrinfeldTuple::trivial(&p);
        // P_3 gains roots α and ℓ+1−α = 1/2, which poly2_reduce strips.
        let qs = vec![UniPoly::one(), UniPoly::one(), UniPoly::linear_root(&q(1, 2))];
        let out = tensor_compose(&p, &qs, &t).unwrap();
        assert_eq!(out.alpha, Some(q(1, 2)));
        assert!(out.polys[2].is_one());
    }

    #[test]
    fn restriction_of_trivial_tuple() {
        let p = pair(Family::BI, 7, 1);
        let (red, t) = restrict_tuple(&p, &DrinfeldTuple::trivial(&p), 1).unwrap();
        assert_eq!(red.id(), "so5/so4");
        assert_eq!(t, DrinfeldTuple::trivial(&red));
        let (r2, t2) = restrict_tuple(&red, &t, 1).unwrap();
        let (r3, t3) = restrict_tuple(&p, &DrinfeldTuple::trivial(&p), 2).unwrap();
        assert_eq!((r2, t2), (r3, t3));
        assert!(matches!(restrict_tuple(&p, &DrinfeldTuple::trivial(&p), 3), Err(Error::BadShiftRange(_))));
    }

    #[test]
    fn restriction_of_trivial_weight() {
        let p = pair(Family::BI, 7, 1);
        let w = restrict_weight(&HighestWeight::trivial(&p), 1).unwrap();
        assert_eq!(associate(&w).unwrap(), DrinfeldTuple::trivial(&w.pair));
    }

    #[test]
    fn psi_examples() {
        let p = pair(Family::BI, 5, 1);
        let t = DrinfeldTuple::from_roots(&p, Some(q(3, 4)), &[vec![], vec![]]).unwrap();
        let tw = psi_twist(&p, &t).unwrap();
        let want = DrinfeldTuple::from_roots(&p, Some(q(7, 4)), &[vec![], vec![q(5, 4), q(3, 4)]]).unwrap();
        assert_eq!(tw, want);
        assert_eq!(psi_twist(&p, &tw).unwrap(), t);
        let fixed = DrinfeldTuple::trivial(&p);
        assert_eq!(psi_twist(&p, &fixed).unwrap(), fixed);
        let bad = DrinfeldTuple::from_roots(&p, Some(q(7, 4)), &[vec![], vec![]]).unwrap();
        assert!(matches!(psi_twist(&p, &bad), Err(Error::StringConditionViolated(_))));
    }

    #[test]
    fn psi_weight_square() {
        let p = pair(Family::BI, 5, 1);
        let t = DrinfeldTuple::from_roots(&p, Some(q(3, 4)), &[vec![q(1, 1), q(3, 2)], vec![]]).unwrap();
        let w = synthesize(&p, &t).unwrap();
        let tw = psi_twist_weight(&w).unwrap();
        assert_eq!(associate(&tw).unwrap(), psi_twist(&p, &t).unwrap());
        assert_eq!(classify_tuple(&p, &associate(&tw).unwrap()).unwrap().verdict, Verdict::FiniteDim);
        let w = HighestWeight::trivial(&p);
        assert_eq!(psi_twist_weight(&w).unwrap(), w);
    }

    #[test]
    fn nu_twist_invariance() {
        let p = pair(Family::CII, 8, 2);
        let w = HighestWeight::trivial(&p);
        let g = RatFunc::new(
            UniPoly::new(vec![q(-1, 1), q(0, 1), q(1, 1)]),
            UniPoly::new(vec![q(-9, 4), q(0, 1), q(1, 1)]),
        );
        let tw = nu_twist(&w, &g).unwrap();
        assert_eq!(associate(&tw).unwrap(), associate(&w).unwrap());
        assert_eq!(nu_twist(&w, &RatFunc::one()).unwrap(), w);
        assert!(nu_twist(&w, &RatFunc::linear(q(1, 1), q(1, 1))).is_err());
    }

    #[test]
    fn normalize_trivial_and_twisted() {
        let p = pair(Family::DIa, 6, 2);
        let w = HighestWeight::trivial(&p);
        let (g, tw) = normalize_w1(&w).unwrap();
        assert!(g.is_one());
        assert_eq!(tw, w);
        let g0 = RatFunc::new(
            UniPoly::new(vec![q(-1, 1), q(0, 1), q(1, 1)]),
            UniPoly::new(vec![q(-4, 1), q(0, 1), q(1, 1)]),
        );
        let shifted = nu_twist(&w, &g0).unwrap();
        let (g1, back) = normalize_w1(&shifted).unwrap();
        assert_eq!(back, w);
        assert_eq!(&g1 * &g0, RatFunc::one());
    }

    #[test]
    fn normalizer_series_matches_rational_case() {
        let p = pair(Family::DIa, 6, 2);
        let g0 = RatFunc::new(
            UniPoly::new(vec![q(-1, 1), q(0, 1), q(1, 1)]),
            UniPoly::new(vec![q(-4, 1), q(0, 1), q(1, 1)]),
        );
        let w = nu_twist(&HighestWeight::trivial(&p), &g0).unwrap();
        let (g, _) = normalize_w1(&w).unwrap();
        let a = g.shift(&-&(&p.kappa() / &q(2, 1)));
        assert_eq!(normalizer_series(&w, 6).unwrap(), a.series_at_infinity(6).unwrap());
    }

    #[test]
    fn irrational_normalizer() {
        let p = pair(Family::DIa, 6, 2);
        let mut w = HighestWeight::trivial(&p);
        let f = RatFunc::new(UniPoly::linear_root(&q(1, 1)), UniPoly::linear_root(&q(2, 1)));
        w.mu[2] = &w.mu[2] * &f;
        assert!(matches!(normalize_w1(&w), Err(Error::NoRationalNormalizer)));
        assert_eq!(normalizer_series(&w, 4).unwrap().len(), 4);
    }
}
