//! Highest weights `λ(u) = (λ_i(u))_{i ∈ I}` of the extended Yangian.

use serde::{Deserialize, Serialize};

use crate::exactalg::{RatFunc, Rational, UniPoly};
use crate::tensorrep::SymmetricPair;
use crate::Error;

/// Components `λ_i(u)` over all labels `−n, …, (0), …, n`; only the ambient
/// algebra of `pair` matters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YangianWeight {
    pub pair: SymmetricPair,
    pub lambda: Vec<RatFunc>,
}

impl YangianWeight {
    pub fn new(pair: SymmetricPair, lambda: Vec<RatFunc>) -> Result<Self, Error> {
        let want = pair.indices().len();
        if lambda.len() != want {
            return Err(Error::Parse(format!("{pair} needs {want} components, got {}", lambda.len())));
        }
        Ok(YangianWeight { pair, lambda })
    }

    fn pos(&self, i: i32) -> usize {
        self.pair.indices().iter().position(|&j| j == i).expect("label in range")
    }

    pub fn get(&self, i: i32) -> &RatFunc {
        &self.lambda[self.pos(i)]
    }

    /// The weight with Drinfeld polynomials `Q_1, …, Q_n`, normalized by
    /// `λ_n = 1`.
    pub fn from_drinfeld(pair: &SymmetricPair, qs: &[UniPoly]) -> Result<Self, Error> {
        let n = pair.n();
        if qs.len() != n {
            return Err(Error::InvalidTuple(format!("{pair} needs {n} Drinfeld polynomials")));
        }
        let ratio = |p: &UniPoly, s: Rational| RatFunc::new(p.shift(&s), p.clone());
        let mut w = YangianWeight { pair: pair.clone(), lambda: vec![RatFunc::one(); pair.indices().len()] };
        let ni = n as i32;
        for i in (2..=ni).rev() {
            let v = w.get(i) * &ratio(&qs[i as usize - 1], Rational::one());
            let k = w.pos(i - 1);
            w.lambda[k] = v;
        }
        let first_neg = if pair.odd() {
            let v = w.get(1) * &ratio(&qs[0], Rational::half());
            let k = w.pos(0);
            w.lambda[k] = v;
            0
        } else {
            let v = if pair.symplectic() {
                w.get(1) * &ratio(&qs[0], Rational::int(2))
            } else {
                w.get(2) * &ratio(&qs[0], Rational::one())
            };
            let k = w.pos(-1);
            w.lambda[k] = v;
            1
        };
        let kappa = pair.kappa();
        for i in first_neg..ni {
            let s = Rational::int((ni - i) as i64) - &kappa;
            let v = &(w.get(-i) * &w.get(i).shift(&s)) / &w.get(i + 1).shift(&s);
            let k = w.pos(-i - 1);
            w.lambda[k] = v;
        }
        Ok(w)
    }
}

/// `λ_{−i}(u)/λ_{−i−1}(u) = λ_{i+1}(u−κ+n−i)/λ_i(u−κ+n−i)` for `i ∈ I⁺∖{n}`.
pub fn check_nontrivial_x(w: &YangianWeight) -> bool {
    let pair = &w.pair;
    let n = pair.n() as i32;
    let kappa = pair.kappa();
    pair.positive_indices().into_iter().filter(|&i| i != n).all(|i| {
        let s = Rational::int((n - i) as i64) - &kappa;
        let lhs = w.get(-i) * &w.get(i).shift(&s);
        let rhs = w.get(-i - 1) * &w.get(i + 1).shift(&s);
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::tensorrep::Family;

    #[test]
    fn constant_weight_is_nontrivial() {
        let p = SymmetricPair::build(Family::BI, 7, 1).unwrap();
        let w = YangianWeight::new(p.clone(), vec![RatFunc::one(); 7]).unwrap();
        assert!(check_nontrivial_x(&w));
    }

    #[test]
    fn drinfeld_weights_are_nontrivial() {
        let roots = |rs: &[Rational]| UniPoly::from_root_list(rs);
        for (f, n, qq) in [(Family::BI, 7, 1), (Family::CII, 8, 2), (Family::DIa, 8, 2)] {
            let p = SymmetricPair::build(f, n, qq).unwrap();
            let qs: Vec<UniPoly> = (0..p.n())
                .map(|k| roots(&[q(k as i64, 2), q(-1, 3)]))
                .collect();
            let w = YangianWeight::from_drinfeld(&p, &qs).unwrap();
            assert!(check_nontrivial_x(&w), "{p}");
        }
    }

    #[test]
    fn mismatched_weight_is_trivial() {
        let p = SymmetricPair::build(Family::DIa, 6, 2).unwrap();
        let mut lam = vec![RatFunc::one(); 6];
        lam[0] = RatFunc::new(UniPoly::linear_root(&q(1, 1)), UniPoly::linear_root(&q(2, 1)));
        let w = YangianWeight::new(p, lam).unwrap();
        assert!(!check_nontrivial_x(&w));
    }
}
