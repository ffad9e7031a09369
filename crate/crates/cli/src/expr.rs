//! Rational expressions in `u, v, a, b`, e.g. `(u-5/4)(u-3/4)` or
//! `1 + 2/u + 1/u^2`. Juxtaposition multiplies.

use tyk::exactalg::{MultiRatFunc, RatFunc, Rational, UniPoly, Var};
use tyk::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Var(Var),
    Op(char),
}

fn bad(src: &str, m: &str) -> Error {
    Error::Parse(format!("bad expression `{src}`: {m}"))
}

fn lex(src: &str) -> Result<Vec<Tok>, Error> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let s = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let d: String = cs[s..i].iter().collect();
                out.push(Tok::Num(d.parse()?));
            }
            'u' | 'v' | 'a' | 'b' => {
                let v = match c {
                    'u' => Var::U,
                    'v' => Var::V,
                    'a' => Var::A,
                    _ => Var::B,
                };
                out.push(Tok::Var(v));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            '\u{2212}' => {
                out.push(Tok::Op('-'));
                i += 1;
            }
            _ => return Err(bad(src, &format!("unexpected `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiRatFunc, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiRatFunc, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(bad(self.src, "division by zero"));
                }
                acc = &acc / &d;
            } else if matches!(self.peek(), Some(Tok::Var(_)) | Some(Tok::Op('('))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiRatFunc, Error> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiRatFunc, Error> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() => n.clone(),
            _ => return Err(bad(self.src, "exponent must be an integer")),
        };
        self.pos += 1;
        let e: u32 = e.to_string().parse().map_err(|_| bad(self.src, "exponent too large"))?;
        let mut out = MultiRatFunc::one();
        for _ in 0..e {
            out = &out * &base;
        }
        if neg {
            if out.is_zero() {
                return Err(bad(self.src, "division by zero"));
            }
            out = out.recip();
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<MultiRatFunc, Error> {
        let t = self.peek().cloned().ok_or_else(|| bad(self.src, "unexpected end"))?;
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(MultiRatFunc::constant(n)),
            Tok::Var(v) => Ok(MultiRatFunc::var(v)),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(bad(self.src, "missing `)`"));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(bad(self.src, &format!("unexpected `{c}`"))),
        }
    }
}

pub fn parse_multi(src: &str) -> Result<MultiRatFunc, Error> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(bad(src, "empty"));
    }
    let mut p = Parser { src, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(bad(src, "trailing input"));
    }
    Ok(e)
}

/// A rational function of `u` alone.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc, Error> {
    parse_multi(src)?
        .to_ratfunc(Var::U)
        .ok_or_else(|| bad(src, "only the variable u is allowed here"))
}

/// A polynomial in `u`.
pub fn parse_poly(src: &str) -> Result<UniPoly, Error> {
    let f = parse_ratfunc(src)?;
    if f.den().degree() != Some(0) {
        return Err(bad(src, "not a polynomial"));
    }
    Ok(&f.num().clone() * &UniPoly::constant(f.den().lc().recip()))
}

/// A rational number.
pub fn parse_rational(src: &str) -> Result<Rational, Error> {
    let f = parse_ratfunc(src)?;
    if f.num().degree().unwrap_or(0) > 0 || f.den().degree() != Some(0) {
        return Err(bad(src, "not a rational number"));
    }
    f.value_at_infinity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::strategy::Strategy;
    use tyk::exactalg::q;

    #[test]
    fn products_and_fractions() {
        let p = parse_poly("(u-5/4)(u-3/4)").unwrap();
        assert_eq!(p, parse_poly("u^2 - 2u + 15/16").unwrap());
        let f = parse_ratfunc("1 + 2/u + 1/u^2").unwrap();
        assert_eq!(f, parse_ratfunc("(u+1)^2/u^2").unwrap());
        assert_eq!(parse_ratfunc("u^-1").unwrap(), parse_ratfunc("1/u").unwrap());
    }

    #[test]
    fn unicode_minus_and_precedence() {
        assert_eq!(parse_rational("−3/4").unwrap(), q(-3, 4));
        assert_eq!(parse_rational("-2^2").unwrap(), q(-4, 1));
        assert_eq!(parse_rational("1/2/2").unwrap(), q(1, 4));
    }

    #[test]
    fn symbolic_parameter() {
        let f = parse_multi("a*u - b").unwrap();
        assert!(f.has_var(Var::A) && f.has_var(Var::B));
        assert!(parse_ratfunc("a + u").is_err());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "u +", "(u", "u)", "1/0", "x", "u^u", "u^(2)"] {
            assert!(parse_multi(s).is_err(), "{s}");
        }
        assert!(parse_poly("1/u").is_err());
        assert!(parse_rational("u").is_err());
    }

    fn ratfunc_from_roots(c: i64, num: &[(i64, i64)], den: &[(i64, i64)]) -> RatFunc {
        let lin = |&(a, b): &(i64, i64)| RatFunc::linear(Rational::one(), -q(a, b));
        let mut f = RatFunc::constant(Rational::int(c));
        for r in num {
            f = &f * &lin(r);
        }
        for r in den {
            f = &f / &lin(r);
        }
        f
    }

    proptest::proptest! {
        #[test]
        fn renderings_parse_back(
            c in (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
            num in proptest::collection::vec((-9i64..=9, 1i64..=4), 0..4),
            den in proptest::collection::vec((-9i64..=9, 1i64..=4), 0..4),
        ) {
            let f = ratfunc_from_roots(c, &num, &den);
            proptest::prop_assert_eq!(parse_ratfunc(&f.to_factored()).unwrap(), f.clone());
            proptest::prop_assert_eq!(parse_ratfunc(&f.to_expr()).unwrap(), f);
        }
    }
}
