//! Symmetric polynomials and Drinfeld tuples `(α, P₁, …, Pₙ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::{rational_roots, render_linear, Rational, RootMultiset, UniPoly};
use crate::tensorrep::{Family, SymmetricPair};
use crate::Error;

/// A monic polynomial stored by its roots, closed under `r ↦ center − r`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymPolyRepr", into = "SymPolyRepr")]
pub struct SymPoly {
    roots: RootMultiset,
    center: Rational,
}

#[derive(Serialize, Deserialize)]
struct SymPolyRepr {
    roots: Vec<Rational>,
    center: Rational,
}

impl TryFrom<SymPolyRepr> for SymPoly {
    type Error = Error;
    fn try_from(r: SymPolyRepr) -> Result<Self, Error> {
        let mut roots = RootMultiset::new();
        for x in r.roots {
            *roots.entry(x).or_default() += 1;
        }
        SymPoly::new(roots, r.center)
    }
}

impl From<SymPoly> for SymPolyRepr {
    fn from(p: SymPoly) -> Self {
        let roots = p.roots.iter().flat_map(|(r, &m)| std::iter::repeat(r.clone()).take(m)).collect();
        SymPolyRepr { roots, center: p.center }
    }
}

impl SymPoly {
    pub fn new(mut roots: RootMultiset, center: Rational) -> Result<Self, Error> {
        roots.retain(|_, m| *m > 0);
        let p = SymPoly { roots, center };
        for (r, m) in &p.roots {
            if p.roots.get(&(&p.center - r)) != Some(m) {
                return Err(Error::InvalidTuple(format!(
                    "roots {} not symmetric about {}",
                    render_linear(&p.roots),
                    p.center
                )));
            }
        }
        Ok(p)
    }

    pub fn one(center: Rational) -> Self {
        SymPoly { roots: RootMultiset::new(), center }
    }

    /// Builds from a list of roots, each listed with multiplicity.
    pub fn from_root_list(roots: &[Rational], center: Rational) -> Result<Self, Error> {
        let mut m = RootMultiset::new();
        for r in roots {
            *m.entry(r.clone()).or_default() += 1;
        }
        Self::new(m, center)
    }

    /// Factors a monic polynomial over ℚ.
    pub fn from_poly(p: &UniPoly, center: Rational) -> Result<Self, Error> {
        if !p.lc().is_one() {
            return Err(Error::InvalidTuple(format!("{p} is not monic")));
        }
        Self::new(rational_roots(p)?, center)
    }

    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn degree(&self) -> usize {
        self.roots.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn multiplicity(&self, r: &Rational) -> usize {
        self.roots.get(r).copied().unwrap_or(0)
    }

    pub fn has_root(&self, r: &Rational) -> bool {
        self.multiplicity(r) > 0
    }

    pub fn poly(&self) -> UniPoly {
        UniPoly::from_roots(&self.roots)
    }

    /// `P(u) = P(center − u)` holds literally, not only up to sign.
    pub fn is_literally_symmetric(&self) -> bool {
        self.multiplicity(&(&self.center / &Rational::int(2))) % 2 == 0
    }

    /// `P(u + a)`, symmetric about `center − 2a`.
    pub fn shift(&self, a: &Rational) -> Self {
        SymPoly {
            roots: self.roots.iter().map(|(r, &m)| (r - a, m)).collect(),
            center: &self.center - &(a + a),
        }
    }

    /// Product with the root multiset `extra`, which must itself be symmetric.
    pub fn times(&self, extra: &RootMultiset) -> Result<Self, Error> {
        let mut roots = self.roots.clone();
        for (r, &m) in extra {
            *roots.entry(r.clone()).or_default() += m;
        }
        Self::new(roots, self.center.clone())
    }

    /// Exact quotient by `extra`, or `None` if it does not divide.
    pub fn divide(&self, extra: &RootMultiset) -> Option<Self> {
        let mut roots = self.roots.clone();
        for (r, &m) in extra {
            let e = roots.get_mut(r)?;
            if *e < m {
                return None;
            }
            *e -= m;
        }
        Self::new(roots, self.center.clone()).ok()
    }

    pub fn to_factored(&self) -> String {
        if self.roots.is_empty() {
            "1".into()
        } else {
            render_linear(&self.roots)
        }
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.to_factored(), self.center)
    }
}

/// Symmetry centers `κ + 2^δ` for `P₁` and `n − i + 2` for `P_i`, `i ≥ 2`.
pub fn centers(pair: &SymmetricPair) -> Vec<Rational> {
    let n = pair.n() as i64;
    (1..=n)
        .map(|i| {
            if i == 1 {
                &pair.kappa() + &pair.two_delta()
            } else {
                Rational::int(n - i + 2)
            }
        })
        .collect()
}

/// `(α, P₁, …, Pₙ)`; `α` is absent for the pairs `(g_N, g_N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DrinfeldTuple {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    pub polys: Vec<SymPoly>,
}

impl DrinfeldTuple {
    /// `(N/4, 1, …, 1)`, or `(1, …, 1)` without `α`.
    pub fn trivial(pair: &SymmetricPair) -> Self {
        let alpha = (pair.family != Family::BCD0).then(|| Rational::new(pair.big_n as i64, 4));
        DrinfeldTuple { alpha, polys: centers(pair).into_iter().map(SymPoly::one).collect() }
    }

    /// Tuple `(α, P₁, …, Pₙ)` from root lists, centers taken from the pair.
    pub fn from_roots(
        pair: &SymmetricPair,
        alpha: Option<Rational>,
        roots: &[Vec<Rational>],
    ) -> Result<Self, Error> {
        let cs = centers(pair);
        if roots.len() != cs.len() {
            return Err(Error::InvalidTuple(format!("{pair} needs {} polynomials", cs.len())));
        }
        let polys = roots
            .iter()
            .zip(cs)
            .map(|(r, c)| SymPoly::from_root_list(r, c))
            .collect::<Result<_, _>>()?;
        let t = DrinfeldTuple { alpha, polys };
        t.validate(pair)?;
        Ok(t)
    }

    pub fn alpha(&self) -> Option<&Rational> {
        self.alpha.as_ref()
    }

    /// `P_i` for `1 ≤ i ≤ n`.
    pub fn p(&self, i: usize) -> &SymPoly {
        &self.polys[i - 1]
    }

    /// Checks length, centers, literal symmetry and `α ∉ Z(P_{𝓀+1})`.
    pub fn validate(&self, pair: &SymmetricPair) -> Result<(), Error> {
        let bad = |m: String| Err(Error::InvalidTuple(m));
        let cs = centers(pair);
        if self.polys.len() != cs.len() {
            return bad(format!("{pair} needs {} polynomials, got {}", cs.len(), self.polys.len()));
        }
        for (i, (p, c)) in self.polys.iter().zip(&cs).enumerate() {
            if p.center() != c {
                return bad(format!("P_{} has center {}, expected {c}", i + 1, p.center()));
            }
            if !p.is_literally_symmetric() {
                return bad(format!("P_{} has odd multiplicity at its center", i + 1));
            }
        }
        match (&self.alpha, pair.family == Family::BCD0) {
            (None, true) => Ok(()),
            (Some(_), true) => bad(format!("{pair} takes no scalar α")),
            (None, false) => bad(format!("{pair} needs a scalar α")),
            (Some(a), false) => {
                let k = pair.key() + 1;
                if k <= pair.n() && self.p(k).has_root(a) {
                    return bad(format!("α = {a} is a root of P_{k}"));
                }
                Ok(())
            }
        }
    }

    pub fn to_pretty(&self) -> String {
        let mut parts: Vec<String> = vec![];
        if let Some(a) = &self.alpha {
            parts.push(a.to_string());
        }
        parts.extend(self.polys.iter().map(SymPoly::to_factored));
        format!("({})", parts.join(", "))
    }
}

/// `S(α, β) = {β, β+1, …, α−1}` when `α − β` is a positive integer.
pub fn string_set(alpha: &Rational, beta: &Rational) -> Vec<Rational> {
    let diff = alpha - beta;
    if !diff.is_integer() || !diff.is_positive() {
        return vec![];
    }
    let len = diff.to_i64().expect("string length fits in i64");
    (0..len).map(|k| beta + &Rational::int(k)).collect()
}

/// Strips the factors `(u−α+km)(u−l+α−km)` for `k = 0, 1, …` while
/// `α − km` remains a root; returns the count and the quotient.
pub fn poly2_reduce(p: &SymPoly, alpha: &Rational, m: &Rational) -> (usize, SymPoly) {
    let l = p.center().clone();
    let mut cur = p.clone();
    let mut k = 0usize;
    loop {
        let a = alpha - &(m * &Rational::int(k as i64));
        if !cur.has_root(&a) {
            return (k, cur);
        }
        let mut pair = RootMultiset::new();
        *pair.entry(a.clone()).or_default() += 1;
        *pair.entry(&l - &a).or_default() += 1;
        match cur.divide(&pair) {
            Some(next) => {
                cur = next;
                k += 1;
            }
            None => return (k, cur),
        }
    }
}
