//! The tuple attached to a weight, and a canonical weight for each tuple.

use crate::exactalg::{RatFunc, Rational, RootMultiset, UniPoly};
use crate::reflection::{g_ratio, scr_g_any};
use crate::tensorrep::{Family, SymmetricPair};
use crate::Error;

use super::solve::solve_shift_quotient;
use super::tuple::{centers, DrinfeldTuple, SymPoly};
use super::weight::{nontrivial_violations, tilde, untilde, HighestWeight, TildeWeight};
use super::yangian::YangianWeight;

fn so4_unsupported(pair: &SymmetricPair) -> Error {
    Error::UnsupportedPair(format!("{pair} carries two scalars; use lowrank::so4_tuple"))
}

/// The unique tuple `(α, P₁, …, Pₙ)` associated to `w`.
pub fn associate(w: &HighestWeight) -> Result<DrinfeldTuple, Error> {
    let pair = &w.pair;
    if pair.is_so4() {
        return Err(so4_unsupported(pair));
    }
    let bad = nontrivial_violations(w);
    if !bad.is_empty() {
        return Err(Error::NotAssociable(bad.join("; ")));
    }
    associate_tilde(&tilde(w))
}

fn quotient(a: &RatFunc, b: &RatFunc, i: usize) -> Result<RatFunc, Error> {
    if b.is_zero() {
        return Err(Error::NotAssociable(format!("relation {i}: zero component")));
    }
    Ok(a / b)
}

pub(crate) fn associate_tilde(t: &TildeWeight) -> Result<DrinfeldTuple, Error> {
    let pair = &t.pair;
    let n = pair.n();
    let key = pair.key();
    let cs = centers(pair);
    let has_alpha = pair.family != Family::BCD0;
    let lift = |i: usize, e: Error| match e {
        Error::NoSolution(m) => Error::NotAssociable(format!("relation {i}: {m}")),
        other => other,
    };
    let mut polys = Vec::with_capacity(n);
    let mut alpha = None;
    for i in (2..=n).rev() {
        let f = quotient(t.get(i as i32 - 1), t.get(i as i32), i)?;
        let wa = has_alpha && i == key + 1;
        let (p, a) = solve_shift_quotient(&f, &Rational::one(), &cs[i - 1], wa).map_err(|e| lift(i, e))?;
        polys.push(p);
        if wa {
            alpha = a;
        }
    }
    let kappa = pair.kappa();
    let (f, m, wa) = if pair.odd() {
        (quotient(t.get(0), t.get(1), 1)?, Rational::half(), has_alpha && key == 0)
    } else {
        let b = if pair.symplectic() { 1 } else { 2 };
        let corr = g_ratio(pair) * RatFunc::linear(-Rational::one(), kappa.clone()) / RatFunc::x();
        let f = quotient(&t.get(1).reflect(&kappa), t.get(b), 1)?;
        (quotient(&f, &corr, 1)?, pair.two_delta(), false)
    };
    let (p1, a) = solve_shift_quotient(&f, &m, &cs[0], wa).map_err(|e| lift(1, e))?;
    polys.push(p1);
    if wa {
        alpha = a;
    }
    polys.reverse();
    Ok(DrinfeldTuple { alpha, polys })
}

/// Monic `Q` with `P(u) = (−1)^{deg Q} Q(u−κ/2) Q(c−κ/2−u)`, taking the
/// larger root of each pair `{r, c−r}`.
pub fn square_root(p: &SymPoly, kappa: &Rational) -> Result<UniPoly, Error> {
    let c = p.center();
    let half_k = kappa / &Rational::int(2);
    let mut roots = RootMultiset::new();
    for (r, &e) in p.roots() {
        let twice = r + r;
        if &twice > c {
            *roots.entry(r - &half_k).or_default() += e;
        } else if &twice == c {
            if e % 2 == 1 {
                return Err(Error::NoSymmetricSquareRoot(format!(
                    "root {r} at the center of {} has odd multiplicity",
                    p.to_factored()
                )));
            }
            *roots.entry(r - &half_k).or_default() += e / 2;
        }
    }
    Ok(UniPoly::from_roots(&roots))
}

/// A weight associated to `t`: the scalar-only weight for `α` tensored with
/// the Yangian module whose Drinfeld polynomials are the square roots of `P_i`.
pub fn synthesize(pair: &SymmetricPair, t: &DrinfeldTuple) -> Result<HighestWeight, Error> {
    if pair.is_so4() {
        return Err(so4_unsupported(pair));
    }
    t.validate(pair)?;
    let kappa = pair.kappa();
    let qs = t.polys.iter().map(|p| square_root(p, &kappa)).collect::<Result<Vec<_>, _>>()?;
    let lam = YangianWeight::from_drinfeld(pair, &qs)?;
    let base = &RatFunc::linear(Rational::int(2), Rational::zero()) * &scr_g_any(pair);
    let outer = t.alpha().map(|a| {
        let l = Rational::int(pair.ell() as i64);
        &base * &(RatFunc::linear(-Rational::one(), &l - a) / RatFunc::linear(Rational::one(), -a))
    });
    let half_k = &kappa / &Rational::int(2);
    let key = pair.key() as i32;
    let mut comps = vec![];
    for i in pair.positive_indices() {
        let b = if i <= key { &base } else { outer.as_ref().expect("validated tuple has α") };
        let tw = &(b * &lam.get(i).shift(&-&half_k)) * &lam.get(-i).reflect(&half_k);
        comps.push(tw);
    }
    Ok(untilde(&TildeWeight { pair: pair.clone(), tilde: comps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::tensorrep::Algebra;

    fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
        SymmetricPair::build(f, n, qq).unwrap()
    }

    #[test]
    fn trivial_weight_so5() {
        let p = pair(Family::BI, 5, 1);
        let t = associate(&HighestWeight::trivial(&p)).unwrap();
        assert_eq!(t, DrinfeldTuple::trivial(&p));
        assert_eq!(t.alpha, Some(q(5, 4)));
    }

    #[test]
    fn trivial_weights() {
        let pairs = [
            pair(Family::BI, 7, 1),
            pair(Family::BI, 7, 3),
            pair(Family::BI, 7, 2),
            pair(Family::CII, 8, 2),
            pair(Family::CII, 4, 2),
            pair(Family::DIa, 8, 4),
            pair(Family::DIa, 6, 2),
            pair(Family::BI, 3, 1),
            SymmetricPair::bcd0(5, Algebra::So).unwrap(),
            SymmetricPair::bcd0(4, Algebra::Sp).unwrap(),
            SymmetricPair::bcd0(6, Algebra::So).unwrap(),
        ];
        for p in pairs {
            let w = HighestWeight::trivial(&p);
            assert_eq!(associate(&w).unwrap(), DrinfeldTuple::trivial(&p), "{p}");
            assert_eq!(synthesize(&p, &DrinfeldTuple::trivial(&p)).unwrap(), w, "{p}");
        }
    }

    #[test]
    fn kmatrix_weight_so6() {
        let p = pair(Family::DIa, 6, 2);
        let w = HighestWeight::kmatrix(&p, &q(1, 2)).unwrap();
        let t = associate(&w).unwrap();
        assert_eq!(t.alpha, Some(q(3, 2)));
        assert!(t.polys.iter().all(SymPoly::is_one));
    }

    #[test]
    fn round_trip_examples() {
        let p = pair(Family::DIa, 6, 2);
        let t = DrinfeldTuple::from_roots(&p, Some(q(1, 3)), &[vec![], vec![q(1, 1), q(2, 1)], vec![]]).unwrap();
        assert_eq!(associate(&synthesize(&p, &t).unwrap()).unwrap(), t);
        let p = pair(Family::BI, 7, 1);
        let t = DrinfeldTuple::from_roots(
            &p,
            Some(q(5, 4)),
            &[vec![q(1, 1), q(5, 2)], vec![q(1, 2), q(5, 2), q(3, 2), q(3, 2)], vec![q(-1, 1), q(3, 1)]],
        )
        .unwrap();
        assert_eq!(associate(&synthesize(&p, &t).unwrap()).unwrap(), t);
    }

    #[test]
    fn odd_center_multiplicity() {
        let p = SymPoly::from_root_list(&[q(1, 1)], q(2, 1)).unwrap();
        assert!(matches!(square_root(&p, &q(2, 1)), Err(Error::NoSymmetricSquareRoot(_))));
    }

    #[test]
    fn so4_is_delegated() {
        let p = pair(Family::DIa, 4, 2);
        assert!(matches!(associate(&HighestWeight::trivial(&p)), Err(Error::UnsupportedPair(_))));
    }

    #[test]
    fn perturbed_weight_not_associable() {
        let p = pair(Family::BI, 5, 1);
        let mut w = HighestWeight::trivial(&p);
        w.mu[1] = &w.mu[1] * &(&RatFunc::one() + &RatFunc::x().recip());
        assert!(matches!(associate(&w), Err(Error::NotAssociable(_))));
    }
}
