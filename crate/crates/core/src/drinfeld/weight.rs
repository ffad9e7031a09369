//! Highest weights `μ(u) = (μ_i(u))_{i ∈ I⁺}` and the tilde transform.

use serde::{Deserialize, Serialize};

use crate::exactalg::{RatFunc, Rational};
use crate::reflection::scr_g_any;
use crate::tensorrep::SymmetricPair;
use crate::Error;

/// Components `μ_i(u)` listed over `(0), 1, …, n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeight {
    pub pair: SymmetricPair,
    pub mu: Vec<RatFunc>,
}

/// Components `μ̃_i(u)` listed over `(0), 1, …, n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeWeight {
    pub pair: SymmetricPair,
    pub tilde: Vec<RatFunc>,
}

fn check_len(pair: &SymmetricPair, len: usize) -> Result<(), Error> {
    let want = pair.positive_indices().len();
    if len != want {
        return Err(Error::Parse(format!("{pair} needs {want} components, got {len}")));
    }
    Ok(())
}

fn offset(pair: &SymmetricPair) -> i32 {
    if pair.odd() {
        0
    } else {
        1
    }
}

impl HighestWeight {
    pub fn new(pair: SymmetricPair, mu: Vec<RatFunc>) -> Result<Self, Error> {
        check_len(&pair, mu.len())?;
        Ok(HighestWeight { pair, mu })
    }

    /// `μ_i` for a label `i ∈ I⁺`.
    pub fn get(&self, i: i32) -> &RatFunc {
        &self.mu[(i - offset(&self.pair)) as usize]
    }

    /// The weight `(g_ii(u))` of the trivial solution `G(u)`.
    pub fn trivial(pair: &SymmetricPair) -> Self {
        let d = pair.d();
        let mu = pair
            .positive_indices()
            .into_iter()
            .map(|i| {
                let g = Rational::int(pair.g_entry(i));
                RatFunc::linear(-g, d.clone()) / RatFunc::linear(-Rational::one(), d.clone())
            })
            .collect();
        HighestWeight { pair: pair.clone(), mu }
    }

    /// The weight `γᵃ(u)` of the one-parameter solution `K(u;a)`.
    pub fn kmatrix(pair: &SymmetricPair, a: &Rational) -> Result<Self, Error> {
        if pair.symplectic() || pair.q != 2 || pair.big_n < 5 {
            return Err(Error::UnsupportedPair(format!(
                "K(u;a) needs (so_N, so_(N-2)+so_2) with N >= 5, got {pair}"
            )));
        }
        let d = pair.d();
        let n = pair.n() as i32;
        let two_d = &d + &d;
        let den = RatFunc::linear(-Rational::one(), d).pow(2);
        let ua = RatFunc::linear(Rational::one(), -a);
        let mu = pair
            .positive_indices()
            .into_iter()
            .map(|i| {
                let s = if i == n { -Rational::one() } else { Rational::one() };
                &(&ua * &RatFunc::linear(s, a - &two_d)) / &den
            })
            .collect();
        Ok(HighestWeight { pair: pair.clone(), mu })
    }

    /// Multiplies every component by `f`.
    pub fn scale_by(&self, f: &RatFunc) -> Self {
        HighestWeight { pair: self.pair.clone(), mu: self.mu.iter().map(|m| m * f).collect() }
    }
}

impl TildeWeight {
    pub fn new(pair: SymmetricPair, tilde: Vec<RatFunc>) -> Result<Self, Error> {
        check_len(&pair, tilde.len())?;
        Ok(TildeWeight { pair, tilde })
    }

    /// `μ̃_i` for a label `i ∈ I⁺`.
    pub fn get(&self, i: i32) -> &RatFunc {
        &self.tilde[(i - offset(&self.pair)) as usize]
    }
}

fn factor(n: usize, i: i32) -> RatFunc {
    RatFunc::linear(Rational::int(2), Rational::int(i as i64 - n as i64))
}

/// `μ̃_i(u) = (2u − n + i)μ_i(u) + Σ_{l>i} μ_l(u)`.
pub fn tilde(w: &HighestWeight) -> TildeWeight {
    let n = w.pair.n();
    let idx = w.pair.positive_indices();
    let mut out = vec![RatFunc::zero(); idx.len()];
    let mut tail = RatFunc::zero();
    for (k, &i) in idx.iter().enumerate().rev() {
        out[k] = &(&factor(n, i) * &w.mu[k]) + &tail;
        tail = &tail + &w.mu[k];
    }
    TildeWeight { pair: w.pair.clone(), tilde: out }
}

/// Inverse of [`tilde`], solved downward from `i = n`.
pub fn untilde(t: &TildeWeight) -> HighestWeight {
    let n = t.pair.n();
    let idx = t.pair.positive_indices();
    let mut out = vec![RatFunc::zero(); idx.len()];
    let mut tail = RatFunc::zero();
    for (k, &i) in idx.iter().enumerate().rev() {
        out[k] = &(&t.tilde[k] - &tail) / &factor(n, i);
        tail = &tail + &out[k];
    }
    HighestWeight { pair: t.pair.clone(), mu: out }
}

/// Failed non-triviality relations, empty when the Verma module is nonzero.
pub fn nontrivial_violations(w: &HighestWeight) -> Vec<String> {
    let pair = &w.pair;
    let n = pair.n() as i32;
    let t = tilde(w);
    let mut bad = vec![];
    for i in pair.positive_indices() {
        if i == n {
            continue;
        }
        let l = Rational::int((n - i) as i64);
        let lhs = t.get(i) * &t.get(i).reflect(&l);
        let rhs = t.get(i + 1) * &t.get(i + 1).reflect(&l);
        if lhs != rhs {
            bad.push(format!("pairing relation fails at i = {i}"));
        }
    }
    if pair.odd() {
        let k = pair.kappa();
        let g = scr_g_any(pair);
        let u = RatFunc::x();
        let ku = RatFunc::linear(-Rational::one(), k.clone());
        let lhs = &(&u * &g) * &t.get(0).reflect(&k);
        let rhs = &(&ku * &g.reflect(&k)) * t.get(0);
        if lhs != rhs {
            bad.push("middle relation fails at i = 0".into());
        }
    }
    bad
}

/// Whether the Verma module of `w` is nonzero.
pub fn check_nontrivial(w: &HighestWeight) -> bool {
    nontrivial_violations(w).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::tensorrep::Family;
    use proptest::prelude::*;

    fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
        SymmetricPair::build(f, n, qq).unwrap()
    }

    #[test]
    fn trivial_tilde_so5() {
        let p = pair(Family::BI, 5, 1);
        let t = tilde(&HighestWeight::trivial(&p));
        let two_u = RatFunc::linear(q(2, 1), q(0, 1));
        assert_eq!(t.get(0), &(&two_u * &scr_g_any(&p)));
        assert_eq!(t.get(1), &two_u);
        assert_eq!(t.get(2), &two_u);
    }

    #[test]
    fn last_component_is_doubled() {
        let p = pair(Family::CII, 8, 2);
        let w = HighestWeight::trivial(&p);
        let t = tilde(&w);
        assert_eq!(t.get(4), &(&RatFunc::linear(q(2, 1), q(0, 1)) * w.get(4)));
    }

    #[test]
    fn trivial_and_kmatrix_weights_are_nontrivial() {
        for (f, n, qq) in [(Family::BI, 5, 1), (Family::BI, 7, 3), (Family::CII, 8, 2), (Family::DIa, 8, 4), (Family::CII, 4, 2)] {
            assert!(check_nontrivial(&HighestWeight::trivial(&pair(f, n, qq))));
        }
        for (f, n) in [(Family::DIa, 6), (Family::BI, 5), (Family::BI, 7), (Family::DIa, 8)] {
            let w = HighestWeight::kmatrix(&pair(f, n, 2), &q(1, 2)).unwrap();
            assert!(check_nontrivial(&w));
        }
    }

    #[test]
    fn perturbed_weight_is_trivial() {
        let p = pair(Family::DIa, 6, 2);
        let mut w = HighestWeight::kmatrix(&p, &q(1, 2)).unwrap();
        let bump = &RatFunc::one() + &RatFunc::x().recip();
        w.mu[0] = &w.mu[0] * &bump;
        assert!(!check_nontrivial(&w));
    }

    fn arb_proper() -> impl Strategy<Value = RatFunc> {
        (-4i64..=4, -4i64..=4, -4i64..=4).prop_map(|(a, b, c)| {
            let num = crate::exactalg::UniPoly::new(vec![q(b, 1), q(1, 1)]);
            let den = crate::exactalg::UniPoly::new(vec![q(c, 2), q(a.abs() + 1, 1)]);
            RatFunc::new(num, den)
        })
    }

    proptest! {
        #[test]
        fn untilde_inverts_tilde(mu in proptest::collection::vec(arb_proper(), 4)) {
            let p = pair(Family::DIa, 8, 2);
            let w = HighestWeight::new(p, mu).unwrap();
            prop_assert_eq!(untilde(&tilde(&w)), w);
        }
    }
}
