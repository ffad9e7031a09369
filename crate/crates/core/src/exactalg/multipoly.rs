//! Sparse polynomials over ℚ in the variables `(u, v, a, b)`.
//!
//! Terms are stored in graded-lex order (total degree first, then exponent of
//! `u`, `v`, `a`, `b`), so the leading term is the last entry of the map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::Error;

pub const NVARS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U = 0,
    V = 1,
    A = 2,
    B = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::U, Var::V, Var::A, Var::B];

    pub fn name(self) -> &'static str {
        ["u", "v", "a", "b"][self as usize]
    }

    fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Mono(pub [u32; NVARS]);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(o.0.iter()) {
            *x += y;
        }
        Mono(e)
    }

    fn div(&self, o: &Mono) -> Option<Mono> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(o.0.iter()) {
            *x = x.checked_sub(*y)?;
        }
        Some(Mono(e))
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::default(), c);
        }
        MultiPoly { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v, 1, Rational::one())
    }

    pub fn monomial(v: Var, e: u32, c: Rational) -> Self {
        let mut m = Mono::default();
        m.0[v as usize] = e;
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c0 + Σ c_v · v`.
    pub fn affine(c0: Rational, parts: &[(Var, Rational)]) -> Self {
        let mut p = Self::constant(c0);
        for (v, c) in parts {
            p = &p + &Self::monomial(*v, 1, c.clone());
        }
        p
    }

    pub fn from_unipoly(p: &UniPoly, v: Var) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = Mono::default();
            m.0[v as usize] = k as u32;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Univariate view when only `v` occurs.
    pub fn to_unipoly(&self, v: Var) -> Option<UniPoly> {
        let mut c = vec![];
        for (m, a) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != v as usize && e > 0) {
                return None;
            }
            let k = m.0[v as usize] as usize;
            if c.len() <= k {
                c.resize(k + 1, Rational::zero());
            }
            c[k] = a.clone();
        }
        Some(UniPoly::new(c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v as usize]).max().unwrap_or(0)
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    fn mul_term(&self, m: &Mono, c: &Rational) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    /// Coefficients of `v^0, v^1, …` as polynomials free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, a) in &self.terms {
            let k = m.0[v as usize] as usize;
            let mut mm = *m;
            mm.0[v as usize] = 0;
            out[k].add_term(mm, a.clone());
        }
        out
    }

    fn from_coeffs_in(cs: &[MultiPoly], v: Var) -> Self {
        let mut out = Self::zero();
        for (k, c) in cs.iter().enumerate() {
            let mut m = Mono::default();
            m.0[v as usize] = k as u32;
            for (mm, a) in &c.terms {
                out.add_term(mm.mul(&m), a.clone());
            }
        }
        out
    }

    /// Replace `v` by the polynomial `s`.
    pub fn substitute(&self, v: Var, s: &MultiPoly) -> Self {
        if !self.has_var(v) {
            return self.clone();
        }
        let cs = self.coeffs_in(v);
        let mut acc = Self::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * s) + c;
        }
        acc
    }

    pub fn eval_var(&self, v: Var, x: &Rational) -> Self {
        self.substitute(v, &Self::constant(x.clone()))
    }

    /// Full evaluation; unspecified variables read as zero.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Rational {
        let mut acc = Rational::zero();
        for (m, a) in &self.terms {
            let mut t = a.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t * point[i].pow(e as i32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Exact quotient if `d` divides `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let dinv = dc.recip();
        let mut r = self.clone();
        let mut qt = MultiPoly::zero();
        while let Some((m, c)) = r.leading().map(|(m, c)| (*m, c.clone())) {
            let mm = m.div(&dm)?;
            let cc = &c * &dinv;
            r = &r - &d.mul_term(&mm, &cc);
            qt.add_term(mm, cc);
        }
        Some(qt)
    }

    /// `self = c · p` with `p` integral, primitive, positive leading coefficient.
    pub fn split_content(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), Self::zero());
        }
        let l = Rational::lcm_denoms(self.terms.values());
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(&((c.numer() * &l) / c.denom())));
        let mut c = Rational::from_bigs(g, l);
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        (c.clone(), self.scale(&c.recip()))
    }

    pub fn primitive(&self) -> MultiPoly {
        self.split_content().1
    }

    /// Normalized gcd (integral, primitive, positive leading coefficient).
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let x = match Var::ALL.into_iter().find(|&v| a.has_var(v) || b.has_var(v)) {
            Some(v) => v,
            None => return Self::one(),
        };
        if !a.has_var(x) {
            return Self::gcd(a, &content(&b.coeffs_in(x)));
        }
        if !b.has_var(x) {
            return Self::gcd(&content(&a.coeffs_in(x)), b);
        }
        let ac = a.coeffs_in(x);
        let bc = b.coeffs_in(x);
        let ca = content(&ac);
        let cb = content(&bc);
        let c = Self::gcd(&ca, &cb);
        let mut pa = divide_all(&ac, &ca);
        let mut pb = divide_all(&bc, &cb);
        if pa.len() < pb.len() {
            std::mem::swap(&mut pa, &mut pb);
        }
        loop {
            if pb.is_empty() {
                break;
            }
            if pb.len() == 1 {
                pa = vec![MultiPoly::one()];
                break;
            }
            let r = prem(&pa, &pb);
            pa = pb;
            if r.is_empty() {
                break;
            }
            let r = divide_all(&r, &content(&r));
            pb = Self::from_coeffs_in(&r, x).primitive().coeffs_in(x);
        }
        let g = Self::from_coeffs_in(&divide_all(&pa, &content(&pa)), x);
        (&g * &c).primitive()
    }

    /// Descending graded-lex rendering, e.g. `u^2*a - 3/2*v + 1`.
    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = vec![];
            for v in Var::ALL {
                match m.0[v as usize] {
                    0 => {}
                    1 => factors.push(v.name().into()),
                    e => factors.push(format!("{}^{e}", v.name())),
                }
            }
            if factors.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&format!("{a}*"));
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }

    /// Parses sums of monomials such as `3/2*u^2*a - v + 1`.
    pub fn parse(src: &str) -> Result<MultiPoly, Error> {
        let bad = |m: &str| Error::Parse(format!("bad polynomial `{src}`: {m}"));
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = MultiPoly::zero();
        let mut terms: Vec<(bool, String)> = vec![];
        let mut cur = String::new();
        let mut sign = false;
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && s[..i].ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((sign, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(bad("dangling sign"));
                }
                sign = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        terms.push((sign, cur));
        for (neg, t) in terms {
            let mut c = Rational::one();
            let mut m = Mono::default();
            for f in t.split('*') {
                if f.is_empty() {
                    return Err(bad("empty factor"));
                }
                let (base, e) = match f.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (f, 1),
                };
                match Var::from_name(base) {
                    Some(v) => m.0[v as usize] += e,
                    None => {
                        let r: Rational = base.parse().map_err(|_| bad("bad factor"))?;
                        c = c * r.pow(e as i32);
                    }
                }
            }
            out.add_term(m, if neg { -c } else { c });
        }
        Ok(out)
    }
}

fn content(cs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = MultiPoly::gcd(&g, c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    if g.is_zero() {
        MultiPoly::one()
    } else {
        g
    }
}

fn divide_all(cs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    cs.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` as coefficient vectors in one variable.
fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let off = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[off + j] = &r[off + j] - &(&lr * bj);
        }
        trim(&mut r);
    }
    r
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let t = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x += &t,
                    None => {
                        acc.insert(m, t);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly {
                (&self).$m(&o)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        let p = mp("3/2*u^2*a - v + 1");
        assert_eq!(p.to_expr(), "3/2*u^2*a - v + 1");
        assert_eq!(mp(&p.to_expr()), p);
        assert!(MultiPoly::parse("u +").is_err());
        assert!(MultiPoly::parse("u*w").is_err());
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let g = MultiPoly::gcd(&mp("u^2 - v^2"), &mp("2*u - 2*v"));
        assert_eq!(g, mp("u - v"));
    }

    #[test]
    fn gcd_three_variables() {
        let f = mp("u*a + v - 1");
        let g = mp("u - a + 2");
        let h = mp("v^2 + a");
        let x = &(&f * &g) * &h;
        let y = &(&f * &h) * &mp("u + v + a");
        assert_eq!(MultiPoly::gcd(&x, &y), (&f * &h).primitive());
    }

    #[test]
    fn exact_division() {
        let p = mp("u^2 - v^2");
        assert_eq!(p.div_exact(&mp("u + v")).unwrap(), mp("u - v"));
        assert!(p.div_exact(&mp("u + 1")).is_none());
    }

    #[test]
    fn substitution() {
        let p = mp("u^2 + a");
        let s = p.substitute(Var::U, &mp("u - v"));
        assert_eq!(s, mp("u^2 - 2*u*v + v^2 + a"));
    }
}
