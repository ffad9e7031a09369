//! Reduced fractions of `MultiPoly`, with primitive integral denominator of
//! positive leading coefficient.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::multipoly::{MultiPoly, Var, NVARS};
use super::ratfunc::RatFunc;
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiRatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl MultiRatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (n, d) = if den.is_constant() {
            (num, den)
        } else {
            let g = MultiPoly::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let (c, d) = d.split_content();
        MultiRatFunc { num: n.scale(&c.recip()), den: d }
    }

    pub fn zero() -> Self {
        MultiRatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        Self::poly(MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(MultiPoly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::poly(MultiPoly::var(v))
    }

    pub fn poly(p: MultiPoly) -> Self {
        MultiRatFunc { num: p, den: MultiPoly::one() }
    }

    /// Embeds a function of `u` as a function of `v`.
    pub fn from_ratfunc(f: &RatFunc, v: Var) -> Self {
        Self::new(
            MultiPoly::from_unipoly(f.num(), v),
            MultiPoly::from_unipoly(f.den(), v),
        )
    }

    /// Univariate view when only `v` occurs.
    pub fn to_ratfunc(&self, v: Var) -> Option<RatFunc> {
        Some(RatFunc::new(self.num.to_unipoly(v)?, self.den.to_unipoly(v)?))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.num.has_var(v) || self.den.has_var(v)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiRatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn substitute(&self, v: Var, s: &MultiPoly) -> Self {
        Self::new(self.num.substitute(v, s), self.den.substitute(v, s))
    }

    /// Value at a point, `None` on a pole.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    pub fn to_expr(&self) -> String {
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            return self.num.to_expr();
        }
        format!("({})/({})", self.num, self.den)
    }
}

/// Identity test by cross-multiplication.
pub fn mrf_equal(f: &MultiRatFunc, g: &MultiRatFunc) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl fmt::Display for MultiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for MultiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiRatFunc {
    type Output = MultiRatFunc;
    fn add(self, o: &MultiRatFunc) -> MultiRatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return MultiRatFunc::new(&self.num + &o.num, self.den.clone());
        }
        MultiRatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &MultiRatFunc {
    type Output = MultiRatFunc;
    fn sub(self, o: &MultiRatFunc) -> MultiRatFunc {
        self + &(-o)
    }
}

impl Mul for &MultiRatFunc {
    type Output = MultiRatFunc;
    fn mul(self, o: &MultiRatFunc) -> MultiRatFunc {
        if self.is_zero() || o.is_zero() {
            return MultiRatFunc::zero();
        }
        MultiRatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &MultiRatFunc {
    type Output = MultiRatFunc;
    fn div(self, o: &MultiRatFunc) -> MultiRatFunc {
        assert!(!o.is_zero(), "division by zero");
        MultiRatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &MultiRatFunc {
    type Output = MultiRatFunc;
    fn neg(self) -> MultiRatFunc {
        MultiRatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiRatFunc {
            type Output = MultiRatFunc;
            fn $m(self, o: MultiRatFunc) -> MultiRatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&MultiRatFunc> for MultiRatFunc {
            type Output = MultiRatFunc;
            fn $m(self, o: &MultiRatFunc) -> MultiRatFunc {
                (&self).$m(o)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for MultiRatFunc {
    type Output = MultiRatFunc;
    fn neg(self) -> MultiRatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mr(n: &str, d: &str) -> MultiRatFunc {
        MultiRatFunc::new(MultiPoly::parse(n).unwrap(), MultiPoly::parse(d).unwrap())
    }

    #[test]
    fn cancels_common_factor() {
        let f = mr("u^2 - v^2", "u - v");
        assert_eq!(f, mr("u + v", "1"));
        assert!(mrf_equal(&f, &mr("u + v", "1")));
        assert!(!mrf_equal(&mr("u", "v"), &mr("v", "u")));
    }

    #[test]
    fn canonical_denominator() {
        let f = mr("1", "-2*u + 1");
        assert_eq!(f.den().to_expr(), "2*u - 1");
        assert_eq!(f.num().to_expr(), "-1");
    }
}
