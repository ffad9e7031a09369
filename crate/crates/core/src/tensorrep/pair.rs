//! Symmetric pairs `(g_N, g_N^ρ)` and their numerical invariants.
//!
//! A pair is described by `N`, the ambient algebra (orthogonal or symplectic),
//! the number `q` of `−1` entries of the diagonal matrix `G`, and the sign
//! `G` takes on the inner block `{|i| ≤ 𝓀}`. Every pair of the standard
//! table has the form below; restriction produces further pairs of the same
//! shape whose inner block may be the larger one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    BI,
    CII,
    DIa,
    BCD0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    So,
    Sp,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PairSpec")]
pub struct SymmetricPair {
    pub family: Family,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub q: usize,
    pub algebra: Algebra,
    /// `false` for pairs produced by restriction that fall outside the table.
    #[serde(skip)]
    pub standard: bool,
}

#[derive(Deserialize)]
struct PairSpec {
    family: Family,
    #[serde(rename = "N")]
    big_n: usize,
    #[serde(default)]
    q: usize,
    #[serde(default)]
    algebra: Option<Algebra>,
}

impl TryFrom<PairSpec> for SymmetricPair {
    type Error = Error;

    fn try_from(s: PairSpec) -> Result<Self, Error> {
        match (s.family, s.algebra) {
            (Family::BCD0, Some(a)) => SymmetricPair::bcd0(s.big_n, a),
            _ => SymmetricPair::build(s.family, s.big_n, s.q),
        }
    }
}

impl SymmetricPair {
    /// Builds a pair of the standard table.
    pub fn build(family: Family, big_n: usize, q: usize) -> Result<Self, Error> {
        let bad = |m: &str| Error::UnsupportedPair(format!("{family:?} N={big_n} q={q}: {m}"));
        if big_n < 3 {
            return Err(bad("N must be at least 3"));
        }
        let p = big_n.checked_sub(q).ok_or_else(|| bad("q > N"))?;
        let algebra = match family {
            Family::BI => {
                if big_n % 2 == 0 {
                    return Err(bad("BI needs N odd"));
                }
                if q == 0 || p < q {
                    return Err(bad("BI needs 0 < q <= p"));
                }
                Algebra::So
            }
            Family::CII | Family::DIa => {
                if big_n % 2 == 1 {
                    return Err(bad("N must be even"));
                }
                if q % 2 == 1 {
                    return Err(bad("both p and q odd (type DI(b)) is excluded"));
                }
                if q == 0 || p < q {
                    return Err(bad("needs 0 < q <= p"));
                }
                if family == Family::CII {
                    Algebra::Sp
                } else {
                    Algebra::So
                }
            }
            Family::BCD0 => {
                if q != 0 {
                    return Err(bad("BCD0 has q = 0"));
                }
                Algebra::So
            }
        };
        Ok(SymmetricPair { family, big_n, q, algebra, standard: true })
    }

    /// The trivial pair `(g_N, g_N)`.
    pub fn bcd0(big_n: usize, algebra: Algebra) -> Result<Self, Error> {
        if big_n < 3 || (algebra == Algebra::Sp && big_n % 2 == 1) {
            return Err(Error::UnsupportedPair(format!("BCD0 {algebra:?} N={big_n}")));
        }
        Ok(SymmetricPair { family: Family::BCD0, big_n, q: 0, algebra, standard: true })
    }

    pub fn n(&self) -> usize {
        self.big_n / 2
    }

    pub fn p(&self) -> usize {
        self.big_n - self.q
    }

    pub fn odd(&self) -> bool {
        self.big_n % 2 == 1
    }

    pub fn symplectic(&self) -> bool {
        self.algebra == Algebra::Sp
    }

    /// `δ`: 1 for symplectic, 0 for orthogonal.
    pub fn delta(&self) -> usize {
        usize::from(self.symplectic())
    }

    /// `2^δ`.
    pub fn two_delta(&self) -> Rational {
        Rational::int(if self.symplectic() { 2 } else { 1 })
    }

    /// Upper sign `+1` for orthogonal, lower `−1` for symplectic.
    pub fn pm(&self) -> i64 {
        if self.symplectic() {
            -1
        } else {
            1
        }
    }

    /// Sign of `G` on the inner block; also the bracket sign `[±]`.
    pub fn inner_sign(&self) -> i64 {
        if self.family == Family::BI && self.q % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// `ℓ`: half the size of the outer block.
    pub fn ell(&self) -> usize {
        if self.inner_sign() < 0 {
            self.p() / 2
        } else {
            self.q / 2
        }
    }

    /// `𝓀 = n − ℓ`.
    pub fn key(&self) -> usize {
        self.n() - self.ell()
    }

    /// `κ = N/2 ∓ 1`.
    pub fn kappa(&self) -> Rational {
        Rational::new(self.big_n as i64, 2) - Rational::int(self.pm())
    }

    /// `d = (p − q)/4`.
    pub fn d(&self) -> Rational {
        Rational::new(self.p() as i64 - self.q as i64, 4)
    }

    /// `θ_ij`.
    pub fn theta(&self, i: i32, j: i32) -> i64 {
        if self.symplectic() {
            (i.signum() * j.signum()) as i64
        } else {
            1
        }
    }

    /// Labels `−n, …, −1, (0), 1, …, n`.
    pub fn indices(&self) -> Vec<i32> {
        let n = self.n() as i32;
        (-n..=n).filter(|&i| i != 0 || self.odd()).collect()
    }

    /// Labels of the highest-weight components: `(0), 1, …, n`.
    pub fn positive_indices(&self) -> Vec<i32> {
        let n = self.n() as i32;
        (if self.odd() { 0 } else { 1 }..=n).collect()
    }

    /// Diagonal entry `g_ii` of `G`.
    pub fn g_entry(&self, i: i32) -> i64 {
        if (i.unsigned_abs() as usize) <= self.key() {
            self.inner_sign()
        } else {
            -self.inner_sign()
        }
    }

    pub fn is_so3(&self) -> bool {
        self.family == Family::BI && self.big_n == 3 && self.q == 1
    }

    pub fn is_so4(&self) -> bool {
        self.family == Family::DIa && self.big_n == 4 && self.q == 2
    }

    /// Largest legal restriction index `ℓ − δ_{ℓ,n}`.
    pub fn max_restriction(&self) -> usize {
        let l = self.ell();
        if l == self.n() {
            l.saturating_sub(1)
        } else {
            l
        }
    }

    /// The pair `(g_{N−2m}, g_{N−2ℓ} ⊕ g_{2(ℓ−m)})` seen by the restricted action.
    pub fn reduce(&self, m: usize) -> Result<SymmetricPair, Error> {
        if m == 0 || m > self.max_restriction() {
            return Err(Error::BadShiftRange(format!(
                "m = {m} outside 1..={} for {self}",
                self.max_restriction()
            )));
        }
        let big_n = self.big_n - 2 * m;
        if m == self.ell() {
            return Ok(SymmetricPair {
                family: Family::BCD0,
                big_n,
                q: 0,
                algebra: self.algebra,
                standard: true,
            });
        }
        let q = if self.inner_sign() < 0 { self.q } else { self.q - 2 * m };
        Ok(SymmetricPair {
            family: self.family,
            big_n,
            q,
            algebra: self.algebra,
            standard: big_n - q >= q,
        })
    }

    /// Short identifier such as `so6/so4+so2`.
    pub fn id(&self) -> String {
        let a = match self.algebra {
            Algebra::So => "so",
            Algebra::Sp => "sp",
        };
        if self.q == 0 {
            return format!("{a}{0}/{a}{0}", self.big_n);
        }
        let (x, y) = (self.p().max(self.q), self.p().min(self.q));
        if self.family == Family::BI && y == 1 {
            return format!("{a}{}/{a}{x}", self.big_n);
        }
        format!("{a}{}/{a}{x}+{a}{y}", self.big_n)
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Accepts `Family,N,q` (e.g. `BI,5,1`) or identifiers such as `so5/so4`,
/// `so6/so4+so2`, `sp8/sp6+sp2`, `sp4/sp4`.
impl FromStr for SymmetricPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad pair `{s}`"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() == 3 {
            let fam = match parts[0] {
                "BI" => Family::BI,
                "CII" => Family::CII,
                "DIa" | "DI" => Family::DIa,
                "BCD0" => Family::BCD0,
                _ => return Err(bad()),
            };
            let n: usize = parts[1].parse().map_err(|_| bad())?;
            let q: usize = parts[2].parse().map_err(|_| bad())?;
            return SymmetricPair::build(fam, n, q);
        }
        let parse_alg = |t: &str| -> Result<(Algebra, usize), Error> {
            let (a, rest) = t.split_at(t.len().min(2));
            let alg = match a {
                "so" => Algebra::So,
                "sp" => Algebra::Sp,
                _ => return Err(bad()),
            };
            Ok((alg, rest.parse().map_err(|_| bad())?))
        };
        let (lhs, rhs) = s.split_once('/').ok_or_else(bad)?;
        let (alg, big_n) = parse_alg(lhs)?;
        let summands: Vec<(Algebra, usize)> = rhs
            .split('+')
            .map(|t| parse_alg(t.trim()))
            .collect::<Result<_, _>>()?;
        if summands.iter().any(|(a, _)| *a != alg) {
            return Err(bad());
        }
        match summands.as_slice() {
            [(_, m)] if *m == big_n => SymmetricPair::bcd0(big_n, alg),
            [(_, m)] if alg == Algebra::So && *m + 1 == big_n => {
                SymmetricPair::build(Family::BI, big_n, 1)
            }
            [(_, x), (_, y)] if x + y == big_n => {
                let fam = match (alg, big_n % 2) {
                    (Algebra::Sp, _) => Family::CII,
                    (Algebra::So, 1) => Family::BI,
                    _ => Family::DIa,
                };
                SymmetricPair::build(fam, big_n, (*x).min(*y))
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn table_invariants() {
        let p = SymmetricPair::build(Family::BI, 5, 1).unwrap();
        assert_eq!((p.n(), p.kappa(), p.d(), p.ell(), p.key(), p.delta()), (2, q(3, 2), q(3, 4), 2, 0, 0));
        let p = SymmetricPair::build(Family::DIa, 6, 2).unwrap();
        assert_eq!((p.n(), p.kappa(), p.d(), p.ell(), p.key(), p.delta()), (3, q(2, 1), q(1, 2), 1, 2, 0));
        assert!(matches!(
            SymmetricPair::build(Family::DIa, 6, 3),
            Err(Error::UnsupportedPair(_))
        ));
    }

    #[test]
    fn g_diagonal_counts() {
        for (f, n, qq) in [(Family::BI, 5, 1), (Family::BI, 7, 3), (Family::BI, 7, 2), (Family::CII, 8, 2), (Family::DIa, 8, 4)] {
            let p = SymmetricPair::build(f, n, qq).unwrap();
            let neg = p.indices().iter().filter(|&&i| p.g_entry(i) < 0).count();
            assert_eq!(neg, qq, "{p}");
        }
        let p = SymmetricPair::build(Family::BI, 5, 1).unwrap();
        let g: Vec<i64> = p.indices().iter().map(|&i| p.g_entry(i)).collect();
        assert_eq!(g, vec![1, 1, -1, 1, 1]);
    }

    #[test]
    fn identifiers() {
        for s in ["so5/so4", "so6/so4+so2", "sp8/sp6+sp2", "sp4/sp4", "so7/so4+so3", "so5/so3+so2"] {
            let p: SymmetricPair = s.parse().unwrap();
            assert_eq!(p.id(), s);
        }
        let p: SymmetricPair = "so7/so4+so3".parse().unwrap();
        assert_eq!((p.family, p.q), (Family::BI, 3));
        let p: SymmetricPair = "so5/so3+so2".parse().unwrap();
        assert_eq!((p.family, p.q), (Family::BI, 2));
    }

    #[test]
    fn reductions() {
        let p = SymmetricPair::build(Family::BI, 7, 1).unwrap();
        assert_eq!(p.max_restriction(), 2);
        assert_eq!(p.reduce(2).unwrap().id(), "so3/so2");
        let p = SymmetricPair::build(Family::DIa, 8, 2).unwrap();
        let r = p.reduce(1).unwrap();
        assert_eq!((r.family, r.big_n), (Family::BCD0, 6));
        assert!(p.reduce(2).is_err());
    }
}
