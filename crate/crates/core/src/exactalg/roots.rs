//! Exact rational roots.
//!
//! Each square-free part is cleared to a primitive integer polynomial `G`.
//! Its rational roots `a/b` have `a | G(0)` and `b | lc(G)`, so they are
//! recovered by lifting simple roots modulo a good prime `p` past
//! `2·|G(0)|·|lc(G)|` and running rational reconstruction. Every candidate is
//! checked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::unipoly::{RootMultiset, UniPoly};
use crate::Error;

/// Roots with multiplicity; fails unless `P` splits into linear factors over ℚ.
pub fn rational_roots(p: &UniPoly) -> Result<RootMultiset, Error> {
    let found = partial_roots(p);
    let total: usize = found.values().sum();
    if total != p.deg() {
        return Err(Error::NonRationalRoot(p.to_string()));
    }
    Ok(found)
}

/// All rational roots with multiplicity, ignoring irreducible factors.
pub fn partial_roots(p: &UniPoly) -> RootMultiset {
    let mut out = RootMultiset::new();
    if p.is_zero() {
        return out;
    }
    for (part, mult) in p.squarefree_parts() {
        for r in squarefree_roots(&part) {
            *out.entry(r).or_insert(0) += mult;
        }
    }
    out
}

fn integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let l = Rational::lcm_denoms(p.coeffs());
    let mut v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c.numer() * &l) / c.denom())
        .collect();
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

fn squarefree_roots(p: &UniPoly) -> Vec<Rational> {
    let mut roots = vec![];
    let mut g = integer_coeffs(p);
    if g.len() <= 1 {
        return roots;
    }
    if g[0].is_zero() {
        roots.push(Rational::zero());
        g.remove(0);
    }
    if g.len() == 2 {
        roots.push(Rational::from_bigs(-g[0].clone(), g[1].clone()));
        return roots;
    }
    if g.len() < 2 {
        return roots;
    }
    let lc = g.last().unwrap().abs();
    let a0 = g[0].abs();
    let bound: BigInt = BigInt::from(2) * &lc * &a0 + 1;
    let prime = good_prime(&g);
    let pb = BigInt::from(prime);
    let dg: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    for r0 in roots_mod_p(&g, prime) {
        let mut m = pb.clone();
        let mut r = BigInt::from(r0);
        while m <= bound {
            let m2 = &m * &m;
            let fr = eval_mod(&g, &r, &m2);
            let dr = eval_mod(&dg, &r, &m2);
            let inv = mod_inverse(&dr, &m2);
            r = (r - fr * inv).mod_floor(&m2);
            m = m2;
        }
        if let Some(c) = reconstruct(&r, &m, &a0, &lc) {
            if eval_exact(&g, &c) {
                roots.push(c);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn eval_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = (acc * x + a).mod_floor(m);
    }
    acc
}

fn eval_exact(c: &[BigInt], x: &Rational) -> bool {
    let mut acc = Rational::zero();
    for a in c.iter().rev() {
        acc = acc * x + Rational::from_big(a.clone());
    }
    acc.is_zero()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

fn reconstruct(r: &BigInt, m: &BigInt, nbound: &BigInt, dbound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > nbound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let s2 = &s0 - &qt * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > *dbound {
        return None;
    }
    Some(Rational::from_bigs(r1, s1))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&k| (2..).take_while(|d| d * d <= k).all(|d| k % d != 0))
}

fn reduce(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    c.iter()
        .map(|a| a.mod_floor(&pb).to_u64().unwrap())
        .collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn gcd_deg_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % p;
            let off = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + p - c * bj % p) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// First odd prime not dividing the leading coefficient for which `G` stays square-free.
fn good_prime(g: &[BigInt]) -> u64 {
    let lc = g.last().unwrap();
    for p in small_primes() {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = reduce(g, p);
        let dp: Vec<u64> = gp
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * (k as u64 % p) % p)
            .collect();
        if gcd_deg_mod(&gp, &dp, p) == 0 {
            return p;
        }
    }
    unreachable!()
}

fn roots_mod_p(g: &[BigInt], p: u64) -> Vec<u64> {
    let gp = reduce(g, p);
    (0..p)
        .filter(|&x| gp.iter().rev().fold(0u64, |acc, c| (acc * x + c) % p) == 0)
        .collect()
}
