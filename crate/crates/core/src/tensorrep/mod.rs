//! Matrices on `C^N` and `C^N ⊗ C^N` labelled by `𝓘_N`: the transposition
//! `t`, the operators `P` and `Q`, the R-matrix and the matrices `G`, `G(u)`.
//!
//! `R(x) = I − P/x + Q/(x − κ)`, where `P = Σ E_ij ⊗ E_ji` and
//! `Q = Σ θ_ij E_ij ⊗ E_{−i,−j}`; `(E_ij)^t = θ_ij E_{−j,−i}`.

mod matrix;
mod pair;

pub use matrix::{kron, Ring, SparseMatrix};
pub use pair::{Algebra, Family, SymmetricPair};

use crate::exactalg::{MultiPoly, MultiRatFunc, Rational, Var};

/// `N × N` matrix over `ℚ(u, v, a, b)` with rows and columns in `𝓘_N`.
pub type RFMatrix = SparseMatrix<i32, MultiRatFunc>;

/// Operator on `C^N ⊗ C^N`, labelled by pairs.
pub type TensorMatrix<T> = SparseMatrix<(i32, i32), T>;

pub fn build_pair(family: Family, big_n: usize, q: usize) -> Result<SymmetricPair, crate::Error> {
    SymmetricPair::build(family, big_n, q)
}

pub fn tensor_labels(pair: &SymmetricPair) -> Vec<(i32, i32)> {
    let idx = pair.indices();
    idx.iter()
        .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
        .collect()
}

/// `(P, Q)` as constant operators.
pub fn perm_and_proj<T: Ring>(pair: &SymmetricPair) -> (TensorMatrix<T>, TensorMatrix<T>) {
    let idx = pair.indices();
    let mut p = TensorMatrix::zero();
    let mut qm = TensorMatrix::zero();
    for &i in &idx {
        for &j in &idx {
            p.set((i, j), (j, i), T::one());
            qm.set(
                (i, -i),
                (j, -j),
                T::from_rational(&Rational::int(pair.theta(i, j))),
            );
        }
    }
    (p, qm)
}

/// `R(x)` for a polynomial argument `x` such as `u − v`.
pub fn rmatrix(pair: &SymmetricPair, x: &MultiPoly) -> TensorMatrix<MultiRatFunc> {
    let (p, qm) = perm_and_proj::<MultiRatFunc>(pair);
    let xk = x - &MultiPoly::constant(pair.kappa());
    let inv_x = MultiRatFunc::new(MultiPoly::one(), x.clone());
    let inv_xk = MultiRatFunc::new(MultiPoly::one(), xk);
    let id = TensorMatrix::identity(&tensor_labels(pair));
    &(&id - &p.scale(&inv_x)) + &qm.scale(&inv_xk)
}

/// `x(x − κ)·R(x) = x(x − κ)I − (x − κ)P + xQ`, a polynomial operator.
pub fn rmatrix_cleared(pair: &SymmetricPair, x: &MultiPoly) -> TensorMatrix<MultiPoly> {
    let (p, qm) = perm_and_proj::<MultiPoly>(pair);
    let xk = x - &MultiPoly::constant(pair.kappa());
    let id = TensorMatrix::identity(&tensor_labels(pair));
    &(&id.scale(&(x * &xk)) - &p.scale(&xk)) + &qm.scale(x)
}

/// `G` and `G(u) = (dI − uG)/(d − u)`, the latter in the variable `u`.
pub fn gmatrices(pair: &SymmetricPair) -> (RFMatrix, RFMatrix) {
    let d = MultiPoly::constant(pair.d());
    let u = MultiPoly::var(Var::U);
    let mut g = RFMatrix::zero();
    let mut gu = RFMatrix::zero();
    for i in pair.indices() {
        let gi = Rational::int(pair.g_entry(i));
        g.set(i, i, MultiRatFunc::constant(gi.clone()));
        gu.set(
            i,
            i,
            MultiRatFunc::new(&d - &u.scale(&gi), &d - &u),
        );
    }
    (g, gu)
}

/// `M^t` with `(E_ij)^t = θ_ij E_{−j,−i}`.
pub fn transpose_t<T: Ring>(pair: &SymmetricPair, m: &SparseMatrix<i32, T>) -> SparseMatrix<i32, T> {
    m.relabel(|i, j| (-j, -i, pair.theta(i, j) < 0))
}

/// `X ⊗ I` and `I ⊗ X`.
pub fn embed<T: Ring>(pair: &SymmetricPair, x: &SparseMatrix<i32, T>) -> (TensorMatrix<T>, TensorMatrix<T>) {
    let id = SparseMatrix::identity(&pair.indices());
    (kron(x, &id), kron(&id, x))
}

/// Trace of a square matrix.
pub fn trace<T: Ring>(m: &SparseMatrix<i32, T>) -> T {
    m.entries()
        .filter(|(i, j, _)| i == j)
        .fold(T::zero(), |acc, (_, _, v)| acc.add(v))
}
