//! Dense univariate polynomials over ℚ.
//!
//! The univariate algorithms (squarefree decomposition, factoring, partial
//! fractions, Hermite reduction) all run on this type; the sparse
//! [`MultiPoly`](super::MultiPoly) converts in and out at the edges.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{q, rat_sqrt_exact, rational_content, Q};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    c: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Q::one())
    }

    pub fn constant(a: Q) -> Self {
        UniPoly::new(vec![a])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Q::zero(), Q::one()])
    }

    /// `x - a`
    pub fn linear_root(a: Q) -> Self {
        UniPoly::new(vec![-a, Q::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&n| q(n)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Q::one() / self.lc();
        self.scale(&inv)
    }

    pub fn scale(&self, a: &Q) -> UniPoly {
        UniPoly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        UniPoly { c }
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * q(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> UniPoly {
        let mut c = vec![Q::zero()];
        for (k, a) in self.c.iter().enumerate() {
            c.push(a / q(k as i64 + 1));
        }
        UniPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut r = UniPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(a.clone());
        }
        acc
    }

    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let dn = d.degree();
        let inv = Q::one() / d.lc();
        let mut qc = vec![Q::zero(); r.len() - dn];
        for k in (0..qc.len()).rev() {
            let coef = &r[k + dn] * &inv;
            if !coef.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dj;
                }
            }
            qc[k] = coef;
        }
        r.truncate(dn);
        (UniPoly::new(qc), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (qq, r) = self.divrem(d);
        r.is_zero().then_some(qq)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (qq, r) = r0.divrem(&r1);
            let s = &s0 - &(&qq * &s1);
            let t = &t0 - &(&qq * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Q::one() / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b` (requires gcd(a,b) | c).
    pub fn solve_bezout(a: &UniPoly, b: &UniPoly, c: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let (g, s, t) = a.xgcd(b);
        let (qq, r) = c.divrem(&g);
        if !r.is_zero() {
            return None;
        }
        let mut s = &s * &qq;
        let mut t = &t * &qq;
        if !b.is_zero() && !s.is_zero() && s.degree() >= b.degree() {
            let (qs, rs) = s.divrem(b);
            s = rs;
            t = &t + &(&qs * a);
        }
        Some((s, t))
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// factors `(f_i, i)` with `self = lc * prod f_i^i`. Constant factors are
    /// omitted.
    pub fn squarefree(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.degree() == 0 {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).unwrap().monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Integer coefficients with content 1 and positive leading coefficient,
    /// plus the rational factor `k` with `self = k * prim`.
    pub fn primitive_integer(&self) -> (Q, Vec<BigInt>) {
        if self.is_zero() {
            return (Q::zero(), vec![]);
        }
        let mut cont = rational_content(self.c.iter());
        if self.lc().is_negative() {
            cont = -cont;
        }
        let ints = self.c.iter().map(|a| (a / &cont).to_integer()).collect();
        (cont, ints)
    }

    pub fn from_bigints(c: &[BigInt]) -> UniPoly {
        UniPoly::new(c.iter().map(|n| Q::from_integer(n.clone())).collect())
    }

    /// Exact square root in ℚ[x], if one exists.
    pub fn sqrt(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let lc_root = rat_sqrt_exact(&self.lc())?;
        let mut root = UniPoly::constant(lc_root);
        for (f, m) in self.squarefree() {
            if m % 2 == 1 {
                return None;
            }
            root = &root * &f.pow((m / 2) as u32);
        }
        (&root * &root == *self).then_some(root)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.c.len().max(rhs.c.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.c.len().max(rhs.c.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|a| -a.clone()).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| match k {
                0 => format!("{a}"),
                1 => format!("({a})*x"),
                _ => format!("({a})*x^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
