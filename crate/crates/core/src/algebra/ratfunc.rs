//! Normalized rational functions `num/den` over ℚ.
//!
//! Invariants: `den != 0`, `gcd(num, den) = 1`, and `den` has leading
//! coefficient 1 in the canonical term order. Zero is `0/1`. Under these
//! rules structural equality is mathematical equality.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::multipoly::MultiPoly;
use super::rational::Q;
use super::unipoly::UniPoly;
use super::var::Var;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from(MultiPoly::one())
    }

    pub fn constant(c: Q) -> Self {
        RatFunc::from(MultiPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        RatFunc::from(MultiPoly::int(n))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from(MultiPoly::var(v))
    }

    /// Builds and normalizes `num/den`. Panics on a zero denominator.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        RatFunc::from_coprime(num, den)
    }

    /// `num/den` already coprime; only fixes the leading coefficient.
    fn from_coprime(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = Q::one() / lc;
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn checked_new(num: MultiPoly, den: MultiPoly) -> Option<Self> {
        (!den.is_zero()).then(|| RatFunc::new(num, den))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.involves(v)).collect()
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let k = e.unsigned_abs();
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn derivative(&self, v: Var) -> RatFunc {
        if !self.involves(v) {
            return RatFunc::zero();
        }
        if self.den.is_one() || !self.den.involves(v) {
            return RatFunc::new(self.num.derivative(v), self.den.clone());
        }
        // (n/d)' = (n' d - n d')/d^2; with g = gcd(d, d'), divide through by g
        let dd = self.den.derivative(v);
        let g = gcd(&self.den, &dd);
        let d_g = self.den.div_exact(&g).unwrap();
        let dd_g = dd.div_exact(&g).unwrap();
        let num = &(&self.num.derivative(v) * &d_g) - &(&self.num * &dd_g);
        RatFunc::new(num, &self.den * &d_g)
    }

    /// Substitutes `v := value` in numerator and denominator.
    pub fn substitute(&self, v: Var, value: &RatFunc) -> RatFunc {
        if !self.involves(v) {
            return self.clone();
        }
        let (pn, pd) = (&value.num, &value.den);
        let dn = self.num.degree(v);
        let dd = self.den.degree(v);
        let n = homogenized_substitute(&self.num, v, pn, pd, dn);
        let d = homogenized_substitute(&self.den, v, pn, pd, dd);
        // num/den = (n / pd^dn) / (d / pd^dd)
        let (n, d) = if dn >= dd {
            (n, &d * &pd.pow(dn - dd))
        } else {
            (&n * &pd.pow(dd - dn), d)
        };
        RatFunc::new(n, d)
    }

    /// Simultaneous substitution. Panics if a value mentions one of the
    /// substituted variables.
    pub fn substitute_many(&self, subs: &[(Var, RatFunc)]) -> RatFunc {
        let clash = subs.iter().any(|(_, val)| subs.iter().any(|(v, _)| val.involves(*v)));
        assert!(!clash, "simultaneous substitution with overlapping variables is not supported");
        subs.iter().fold(self.clone(), |acc, (v, val)| acc.substitute(*v, val))
    }

    /// Numerator and denominator as univariate polynomials in `v`.
    pub fn to_uni(&self, v: Var) -> Option<(UniPoly, UniPoly)> {
        Some((self.num.to_unipoly(v)?, self.den.to_unipoly(v)?))
    }

    pub fn from_uni(num: &UniPoly, den: &UniPoly, v: Var) -> RatFunc {
        RatFunc::new(MultiPoly::from_unipoly(num, v), MultiPoly::from_unipoly(den, v))
    }

    pub fn eval_var(&self, v: Var, x: &Q) -> Option<RatFunc> {
        let d = self.den.eval_var(v, x);
        if d.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.num.eval_var(v, x), d))
    }

    pub fn eval_all(&self, point: &[(Var, Q)]) -> Option<Q> {
        let d = self.den.eval_all(point).constant_value()?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_all(point).constant_value()? / d)
    }
}

/// Whether `p` vanishes after substituting each `v := n/d` in turn. Works on
/// cleared denominators, so no gcd is ever taken; the values must not
/// mention variables substituted later.
pub fn vanishes_under(p: &MultiPoly, subs: &[(Var, RatFunc)]) -> bool {
    let mut acc = p.clone();
    for (v, val) in subs {
        let k = acc.degree(*v);
        acc = homogenized_substitute(&acc, *v, &val.num, &val.den, k);
    }
    acc.is_zero()
}

/// `p(n/d) * d^k` for `k >= deg_v p`, as a polynomial.
pub fn homogenized_substitute(p: &MultiPoly, v: Var, n: &MultiPoly, d: &MultiPoly, k: u32) -> MultiPoly {
    let coeffs = p.coefficients_in(v);
    let mut npow = vec![MultiPoly::one()];
    let mut dpow = vec![MultiPoly::one()];
    for _ in 0..k {
        let a = npow.last().unwrap() * n;
        npow.push(a);
        let b = dpow.last().unwrap() * d;
        dpow.push(b);
    }
    let mut out = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &(&(c * &npow[i]) * &dpow[k as usize - i]);
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let den = &(&b1 * &d1) * &g;
        if g.is_one() {
            return RatFunc::from_coprime(t, den);
        }
        let g2 = gcd(&t, &g);
        if g2.is_one() {
            RatFunc::from_coprime(t, den)
        } else {
            RatFunc::from_coprime(t.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
