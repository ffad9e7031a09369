#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tyk::drinfeld::{centers, psi_twist, DrinfeldTuple, SymPoly};
use tyk::exactalg::{q, RatFunc, Rational, UniPoly};
use tyk::tensorrep::{Algebra, Family, SymmetricPair};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pair(f: Family, n: usize, qq: usize) -> SymmetricPair {
    SymmetricPair::build(f, n, qq).unwrap()
}

pub fn bcd0(n: usize, a: Algebra) -> SymmetricPair {
    SymmetricPair::bcd0(n, a).unwrap()
}

/// Every pair of the standard table with `N ≤ max_n`, including `(g_N, g_N)`.
pub fn all_pairs(max_n: usize) -> Vec<SymmetricPair> {
    let mut out = vec![];
    for n in 3..=max_n {
        for qq in 1..=n / 2 {
            for f in [Family::BI, Family::CII, Family::DIa] {
                if let Ok(p) = SymmetricPair::build(f, n, qq) {
                    out.push(p);
                }
            }
        }
        out.push(bcd0(n, Algebra::So));
        if n % 2 == 0 {
            out.push(bcd0(n, Algebra::Sp));
        }
    }
    out
}

/// A random element of `step·ℤ ∩ [lo, hi]`.
pub fn lattice(r: &mut ChaCha8Rng, step: i64, lo: i64, hi: i64) -> Rational {
    let k = r.gen_range(lo * step..=hi * step);
    q(k, step)
}

/// Random symmetric root list about `c` with `pairs` root pairs drawn from
/// `½ℤ ∩ [−5, 5]`.
pub fn random_roots(r: &mut ChaCha8Rng, c: &Rational, pairs: usize) -> Vec<Rational> {
    let lo = q(-5, 1);
    let hi = q(5, 1);
    let mut out = vec![];
    while out.len() < 2 * pairs {
        let x = lattice(r, 2, -5, 5);
        let y = c - &x;
        if y < lo || y > hi || !(&y * &q(2, 1)).is_integer() {
            continue;
        }
        out.push(x);
        out.push(y);
    }
    out
}

/// Random tuple with roots in `½ℤ ∩ [−5, 5]`, total degree at most
/// `max_deg`, and `α` drawn from `¼ℤ ∩ [−5, 5]` off the roots of `P_{𝓀+1}`.
pub fn random_tuple(r: &mut ChaCha8Rng, p: &SymmetricPair, max_deg: usize) -> DrinfeldTuple {
    let cs = centers(p);
    let mut roots: Vec<Vec<Rational>> = vec![vec![]; cs.len()];
    let pairs = r.gen_range(0..=max_deg / 2);
    for _ in 0..pairs {
        let i = r.gen_range(0..cs.len());
        roots[i].extend(random_roots(r, &cs[i], 1));
    }
    loop {
        let alpha = (p.family != Family::BCD0).then(|| lattice(r, 4, -5, 5));
        if let Ok(t) = DrinfeldTuple::from_roots(p, alpha, &roots) {
            return t;
        }
    }
}

/// Random even `g` with `g(∞) = 1` and numerator, denominator of degree ≤ 4.
pub fn random_even(r: &mut ChaCha8Rng) -> RatFunc {
    let quad = |r: &mut ChaCha8Rng| {
        let a = q(r.gen_range(1..=12), r.gen_range(1..=4));
        RatFunc::poly(UniPoly::new(vec![-(&a * &a), Rational::zero(), Rational::one()]))
    };
    let mut g = RatFunc::one();
    for _ in 0..r.gen_range(0..=2) {
        g = &(&g * &quad(r)) / &quad(r);
    }
    g
}

/// Monic symmetric polynomial about `c` with root pairs `{c + t, −t}`,
/// `t = 3 + j + 1/3`, used where only degrees matter.
pub fn generic_sym(c: &Rational, deg: usize) -> SymPoly {
    let roots: Vec<Rational> = (0..deg / 2)
        .flat_map(|j| {
            let t = q(3 * (3 + j as i64) + 1, 3);
            [c + &t, -t]
        })
        .collect();
    SymPoly::from_root_list(&roots, c.clone()).unwrap()
}

pub fn tuple_with_degrees(p: &SymmetricPair, alpha: Option<Rational>, degs: &[usize]) -> DrinfeldTuple {
    let cs = centers(p);
    let polys = cs.iter().zip(degs).map(|(c, &d)| generic_sym(c, d)).collect();
    let t = DrinfeldTuple { alpha, polys };
    t.validate(p).unwrap();
    t
}

/// Random BI q = 1 tuple with `α ∈ N/4 − ½ℕ`, or its ψσ twist.
pub fn admissible(r: &mut ChaCha8Rng, p: &SymmetricPair) -> DrinfeldTuple {
    let quarter = Rational::new(p.big_n as i64, 4);
    loop {
        let mut t = random_tuple(r, p, 6);
        let k = r.gen_range(0..=6);
        t.alpha = Some(&quarter - &q(k, 2));
        if t.validate(p).is_err() {
            continue;
        }
        if r.gen_bool(0.5) {
            return t;
        }
        if let Ok(s) = psi_twist(p, &t) {
            return s;
        }
    }
}
