//! Sparse square matrices with ordered row and column labels.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::{MultiPoly, MultiRatFunc, Rational};

/// Commutative ring operations needed by the matrix code.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(c: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn from_rational(c: &Rational) -> Self {
        MultiPoly::constant(c.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for MultiRatFunc {
    fn zero() -> Self {
        MultiRatFunc::zero()
    }
    fn one() -> Self {
        MultiRatFunc::one()
    }
    fn is_zero(&self) -> bool {
        MultiRatFunc::is_zero(self)
    }
    fn from_rational(c: &Rational) -> Self {
        MultiRatFunc::constant(c.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Rows keyed by label, each row a sparse map to nonzero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<K: Ord + Copy, T: Ring> {
    rows: BTreeMap<K, BTreeMap<K, T>>,
}

impl<K: Ord + Copy, T: Ring> Default for SparseMatrix<K, T> {
    fn default() -> Self {
        SparseMatrix { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Copy, T: Ring> SparseMatrix<K, T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity(labels: &[K]) -> Self {
        Self::scalar(labels, T::one())
    }

    pub fn scalar(labels: &[K], c: T) -> Self {
        let mut m = Self::zero();
        for &k in labels {
            m.set(k, k, c.clone());
        }
        m
    }

    pub fn get(&self, i: K, j: K) -> T {
        self.rows
            .get(&i)
            .and_then(|r| r.get(&j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: K, j: K, v: T) {
        if v.is_zero() {
            if let Some(r) = self.rows.get_mut(&i) {
                r.remove(&j);
                if r.is_empty() {
                    self.rows.remove(&i);
                }
            }
        } else {
            self.rows.entry(i).or_default().insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: K, j: K, v: &T) {
        let cur = self.get(i, j);
        self.set(i, j, cur.add(v));
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (K, K, &T)> {
        self.rows
            .iter()
            .flat_map(|(&i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<K, U> {
        let mut out = SparseMatrix::zero();
        for (i, j, v) in self.entries() {
            out.set(i, j, f(v));
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.mul(c))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for (i, j, v) in self.entries() {
            out.set(j, i, v.clone());
        }
        out
    }

    /// Relabels entries through `f`, which must be injective.
    pub fn relabel<L: Ord + Copy>(&self, f: impl Fn(K, K) -> (L, L, bool)) -> SparseMatrix<L, T> {
        let mut out = SparseMatrix::zero();
        for (i, j, v) in self.entries() {
            let (a, b, neg) = f(i, j);
            out.set(a, b, if neg { v.neg() } else { v.clone() });
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }
}

impl<K: Ord + Copy, T: Ring> Add for &SparseMatrix<K, T> {
    type Output = SparseMatrix<K, T>;
    fn add(self, o: &SparseMatrix<K, T>) -> SparseMatrix<K, T> {
        let mut out = self.clone();
        for (i, j, v) in o.entries() {
            out.add_to(i, j, v);
        }
        out
    }
}

impl<K: Ord + Copy, T: Ring> Sub for &SparseMatrix<K, T> {
    type Output = SparseMatrix<K, T>;
    fn sub(self, o: &SparseMatrix<K, T>) -> SparseMatrix<K, T> {
        self + &(-o)
    }
}

impl<K: Ord + Copy, T: Ring> Neg for &SparseMatrix<K, T> {
    type Output = SparseMatrix<K, T>;
    fn neg(self) -> SparseMatrix<K, T> {
        self.map(|v| v.neg())
    }
}

impl<K: Ord + Copy, T: Ring> Mul for &SparseMatrix<K, T> {
    type Output = SparseMatrix<K, T>;
    fn mul(self, o: &SparseMatrix<K, T>) -> SparseMatrix<K, T> {
        let mut rows = BTreeMap::new();
        for (&i, r) in &self.rows {
            let mut acc: BTreeMap<K, T> = BTreeMap::new();
            for (&k, a) in r {
                if let Some(orow) = o.rows.get(&k) {
                    for (&j, b) in orow {
                        let t = a.mul(b);
                        match acc.get_mut(&j) {
                            Some(x) => *x = x.add(&t),
                            None => {
                                acc.insert(j, t);
                            }
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            if !acc.is_empty() {
                rows.insert(i, acc);
            }
        }
        SparseMatrix { rows }
    }
}

/// Kronecker product with pair labels.
pub fn kron<T: Ring>(
    a: &SparseMatrix<i32, T>,
    b: &SparseMatrix<i32, T>,
) -> SparseMatrix<(i32, i32), T> {
    let mut out = SparseMatrix::zero();
    for (i1, j1, x) in a.entries() {
        for (i2, j2, y) in b.entries() {
            out.set((i1, i2), (j1, j2), x.mul(y));
        }
    }
    out
}
