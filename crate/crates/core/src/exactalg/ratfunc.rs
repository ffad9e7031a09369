//! Reduced univariate rational functions `num/den` with monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rational::Rational;
use super::roots::rational_roots;
use super::unipoly::{RootMultiset, UniPoly};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = UniPoly::gcd(&num, &den);
        let (mut n, mut d) = (num.div_exact(&g), den.div_exact(&g));
        let lc = d.lc();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::int(c))
    }

    pub fn x() -> Self {
        Self::poly(UniPoly::x())
    }

    pub fn poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    /// `(a·u + b)`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::poly(UniPoly::new(vec![b, a]))
    }

    /// `c · Π(u − r)^{m} / Π(u − s)^{m'}`.
    pub fn from_roots(c: Rational, num: &RootMultiset, den: &RootMultiset) -> Self {
        Self::new(UniPoly::from_roots(num).scale(&c), UniPoly::from_roots(den))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.deg() == 0 && self.den.deg() == 0
    }

    pub fn is_proper(&self) -> bool {
        self.num.is_zero() || self.num.deg() <= self.den.deg()
    }

    /// Limit as `u → ∞`; requires a proper function.
    pub fn value_at_infinity(&self) -> Result<Rational, Error> {
        if !self.is_proper() {
            return Err(Error::ImproperAtInfinity(self.to_string()));
        }
        if self.num.is_zero() || self.num.deg() < self.den.deg() {
            return Ok(Rational::zero());
        }
        Ok(self.num.lc())
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        let b = if e < 0 { self.recip() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &b)
    }

    /// `f(a·u + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        Self::new(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// `f(u + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose_affine(&Rational::one(), a)
    }

    /// `f(l − u)`.
    pub fn reflect(&self, l: &Rational) -> Self {
        self.compose_affine(&-Rational::one(), l)
    }

    pub fn is_even(&self) -> bool {
        *self == self.reflect(&Rational::zero())
    }

    /// Leading coefficient and root multisets of numerator and denominator.
    pub fn factor(&self) -> Result<(Rational, RootMultiset, RootMultiset), Error> {
        Ok((self.num.lc(), rational_roots(&self.num)?, rational_roots(&self.den)?))
    }

    /// First `k` coefficients of the expansion in `u^{-1}`.
    pub fn series_at_infinity(&self, k: usize) -> Result<Vec<Rational>, Error> {
        if !self.is_proper() {
            return Err(Error::ImproperAtInfinity(self.to_string()));
        }
        let m = self.den.deg();
        let nt: Vec<Rational> = (0..=m).map(|j| self.num.coeff(m - j)).collect();
        let dt: Vec<Rational> = (0..=m).map(|j| self.den.coeff(m - j)).collect();
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        for j in 0..k {
            let mut c = nt.get(j).cloned().unwrap_or_else(Rational::zero);
            for i in 1..=j.min(m) {
                c -= &(&dt[i] * &out[j - i]);
            }
            out.push(c / &dt[0]);
        }
        Ok(out)
    }

    pub fn to_expr(&self) -> String {
        if self.den.is_one() {
            return self.num.to_string();
        }
        format!("({})/({})", self.num, self.den)
    }

    /// Factored rendering when both parts split over ℚ.
    pub fn to_factored(&self) -> String {
        match self.factor() {
            Ok((c, n, d)) => {
                let mut s = String::new();
                if n.is_empty() {
                    s.push_str(&c.to_string());
                } else if c == -Rational::one() {
                    s.push('-');
                } else if !c.is_one() {
                    s.push_str(&c.to_string());
                }
                s.push_str(&render_linear(&n));
                if !d.is_empty() {
                    let r = render_linear(&d);
                    if d.len() == 1 {
                        s.push_str(&format!("/{r}"));
                    } else {
                        s.push_str(&format!("/({r})"));
                    }
                }
                s
            }
            Err(_) => self.to_expr(),
        }
    }
}

pub(crate) fn render_linear(roots: &RootMultiset) -> String {
    let mut s = String::new();
    for (r, &m) in roots {
        let f = if r.is_zero() {
            "u".to_string()
        } else if r.is_negative() {
            format!("(u+{})", r.abs())
        } else {
            format!("(u-{r})")
        };
        s.push_str(&f);
        if m > 1 {
            s.push_str(&format!("^{m}"));
        }
    }
    s
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RatFuncRepr {
    num: UniPoly,
    #[serde(default = "UniPoly::one")]
    den: UniPoly,
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        if r.den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(RatFunc::new(r.num, r.den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
