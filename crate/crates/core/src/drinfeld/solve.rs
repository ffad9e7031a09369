//! Solving `f(u) = P(u+m)/P(u) · ((α−u)/(α+u−l+m))^ε` for a symmetric `P`.

use std::collections::BTreeMap;

use crate::exactalg::{RatFunc, Rational, RootMultiset};
use crate::Error;

use super::max_degree;
use super::tuple::SymPoly;

/// Recovers monic `P` with `P(u) = P(l − u)` and, when `with_alpha`, a scalar
/// `α` with `P(α) ≠ 0`, such that
/// `f(u) = P(u+m)/P(u) · ((α−u)/(α+u−l+m))^{with_alpha}`.
pub fn solve_shift_quotient(
    f: &RatFunc,
    m: &Rational,
    l: &Rational,
    with_alpha: bool,
) -> Result<(SymPoly, Option<Rational>), Error> {
    if !m.is_positive() {
        return Err(Error::NoSolution(format!("step {m} must be positive")));
    }
    if f.is_zero() {
        return Err(Error::NoSolution("quotient is zero".into()));
    }
    if !with_alpha {
        return solve_plain(f, m, l).map(|p| (p, None));
    }
    let g = -f;
    let (_, num, _) = g.factor()?;
    let mut candidates: Vec<Rational> = num.keys().cloned().collect();
    candidates.push((l - m) / Rational::int(2));
    let mut found: Option<(SymPoly, Rational)> = None;
    for a in candidates {
        let beta = &(l - m) - &a;
        let corr = RatFunc::linear(Rational::one(), -&beta) / RatFunc::linear(Rational::one(), -&a);
        let Ok(p) = solve_plain(&(&g * &corr), m, l) else { continue };
        if p.has_root(&a) {
            continue;
        }
        match &found {
            None => found = Some((p, a)),
            Some((q, b)) if *q == p && *b == a => {}
            Some(_) => {
                return Err(Error::NoSolution(format!("ambiguous scalar for {f}")));
            }
        }
    }
    found
        .map(|(p, a)| (p, Some(a)))
        .ok_or_else(|| Error::NoSolution(format!("{f} has no factorization with step {m} about {l}")))
}

/// The case without `α`: root multiplicities of `P` telescope along each
/// residue class modulo `m`.
fn solve_plain(f: &RatFunc, m: &Rational, l: &Rational) -> Result<SymPoly, Error> {
    let none = |why: &str| Error::NoSolution(format!("{f} with step {m} about {l}: {why}"));
    let (lc, num, den) = f.factor()?;
    if !lc.is_one() {
        return Err(none("leading coefficient is not 1"));
    }
    // ν(x) = mult in numerator − mult in denominator, grouped by class mod m.
    let mut classes: BTreeMap<Rational, BTreeMap<Rational, i64>> = BTreeMap::new();
    let class_of = |x: &Rational| {
        let k = Rational::from_big((x / m).floor());
        x - &(&k * m)
    };
    for (roots, sign) in [(&num, 1i64), (&den, -1i64)] {
        for (r, &e) in roots {
            *classes.entry(class_of(r)).or_default().entry(r.clone()).or_default() += sign * e as i64;
        }
    }
    let cap = max_degree();
    let mut roots = RootMultiset::new();
    let mut degree = 0usize;
    for pts in classes.values() {
        if pts.values().sum::<i64>() != 0 {
            return Err(none("unbalanced residue class"));
        }
        // π(x) = −Σ_{y ≥ x} ν(y) on the lattice; walk downward.
        let pts: Vec<(&Rational, &i64)> = pts.iter().rev().collect();
        let mut run = 0i64;
        for w in 0..pts.len() {
            run -= pts[w].1;
            if run < 0 {
                return Err(none("negative multiplicity"));
            }
            if run == 0 || w + 1 == pts.len() {
                continue;
            }
            let (hi, lo) = (pts[w].0, pts[w + 1].0);
            let steps = ((hi - lo) / m).to_i64().ok_or_else(|| none("chain too long"))?;
            degree = degree.saturating_add(run as usize * steps as usize);
            if degree > cap {
                return Err(Error::DegreeLimit(format!("degree {degree} exceeds {cap}")));
            }
            for k in 0..steps {
                let x = hi - &(m * &Rational::int(k));
                *roots.entry(x).or_default() += run as usize;
            }
        }
    }
    let p = SymPoly::new(roots, l.clone()).map_err(|_| none("not symmetric"))?;
    if !p.is_literally_symmetric() {
        return Err(none("odd multiplicity at the center"));
    }
    let check = RatFunc::new(p.poly().shift(m), p.poly());
    if &check != f {
        return Err(none("verification failed"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, UniPoly};

    fn rf(num: &[Rational], den: &[Rational]) -> RatFunc {
        RatFunc::new(UniPoly::from_root_list(num), UniPoly::from_root_list(den))
    }

    #[test]
    fn simple_chain() {
        let f = rf(&[q(1, 1)], &[q(3, 1)]);
        let (p, a) = solve_shift_quotient(&f, &q(1, 1), &q(5, 1), false).unwrap();
        assert_eq!(p.poly(), UniPoly::from_root_list(&[q(2, 1), q(3, 1)]));
        assert_eq!(a, None);
    }

    #[test]
    fn two_step_quotient_has_no_symmetric_solution() {
        let f = rf(&[q(1, 1), q(4, 1)], &[q(2, 1), q(3, 1)]);
        assert!(matches!(
            solve_shift_quotient(&f, &q(1, 1), &q(5, 1), false),
            Err(Error::NoSolution(_))
        ));
    }

    #[test]
    fn constant_one() {
        let (p, a) = solve_shift_quotient(&RatFunc::one(), &q(1, 2), &q(7, 3), false).unwrap();
        assert!(p.is_one() && a.is_none());
    }

    #[test]
    fn with_alpha_half_step() {
        let f = RatFunc::linear(q(-1, 1), q(5, 4)) / RatFunc::linear(q(1, 1), q(-3, 4));
        let (p, a) = solve_shift_quotient(&f, &q(1, 2), &q(5, 2), true).unwrap();
        assert!(p.is_one());
        assert_eq!(a, Some(q(5, 4)));
    }

    #[test]
    fn alpha_at_fixed_point() {
        let (p, a) = solve_shift_quotient(&RatFunc::int(-1), &q(1, 1), &q(4, 1), true).unwrap();
        assert!(p.is_one());
        assert_eq!(a, Some(q(3, 2)));
    }

    #[test]
    fn degree_cap() {
        let f = rf(&[q(-200, 1)], &[q(200, 1)]);
        assert!(matches!(
            solve_shift_quotient(&f, &q(1, 1), &q(1, 1), false),
            Err(Error::DegreeLimit(_))
        ));
    }

    #[test]
    fn round_trip_with_alpha() {
        let l = q(3, 1);
        let p = SymPoly::from_root_list(&[q(1, 2), q(5, 2), q(-1, 1), q(4, 1)], l.clone()).unwrap();
        let alpha = q(1, 3);
        let f = RatFunc::new(p.poly().shift(&q(1, 1)), p.poly())
            * (RatFunc::linear(q(-1, 1), alpha.clone()) / RatFunc::linear(q(1, 1), &alpha - &q(2, 1)));
        let (p2, a2) = solve_shift_quotient(&f, &q(1, 1), &l, true).unwrap();
        assert_eq!((p2, a2), (p, Some(alpha)));
    }
}
