//! Towers of simple algebraic extensions ℚ ⊂ ℚ(α₁) ⊂ ℚ(α₁, α₂) ⊂ …
//!
//! Each level is given by a monic squarefree polynomial over the previous
//! level that need not be irreducible, so a tower is really a product of
//! fields. Inverting a zero divisor exposes a factorization of one of the
//! moduli; it is reported as a [`Split`], and the caller restarts on the two
//! projected towers (dynamic evaluation). Nothing ever needs factoring over
//! an extension.

use num_traits::Zero;

use super::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    Rat(Q),
    /// Coefficients (low to high) over the level below; no trailing zeros.
    Poly(Vec<Elem>),
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Rat(x) => x.is_zero(),
            Elem::Poly(v) => v.is_empty(),
        }
    }

    /// The rational value, if the element is a constant of the tower.
    pub fn as_rational(&self) -> Option<Q> {
        match self {
            Elem::Rat(x) => Some(x.clone()),
            Elem::Poly(v) if v.is_empty() => Some(Q::zero()),
            Elem::Poly(v) if v.len() == 1 => v[0].as_rational(),
            Elem::Poly(_) => None,
        }
    }
}

/// One of the moduli (at `level`, 1-based) has the proper monic factor `factor`.
#[derive(Clone, Debug)]
pub struct Split {
    pub level: usize,
    pub factor: Vec<Elem>,
}

/// Univariate polynomial over a tower level, low to high.
pub type TPoly = Vec<Elem>;

#[derive(Clone, Debug, Default)]
pub struct Tower {
    mods: Vec<TPoly>,
}

fn trim(mut v: TPoly) -> TPoly {
    while v.last().is_some_and(Elem::is_zero) {
        v.pop();
    }
    v
}

pub fn add(a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
        (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(padd(x, y)),
        _ => panic!("mixed tower levels"),
    }
}

pub fn neg(a: &Elem) -> Elem {
    match a {
        Elem::Rat(x) => Elem::Rat(-x),
        Elem::Poly(v) => Elem::Poly(v.iter().map(neg).collect()),
    }
}

pub fn sub(a: &Elem, b: &Elem) -> Elem {
    add(a, &neg(b))
}

pub fn padd(a: &[Elem], b: &[Elem]) -> TPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: TPoly = long.to_vec();
    for (i, s) in short.iter().enumerate() {
        out[i] = add(&out[i], s);
    }
    trim(out)
}

pub fn psub(a: &[Elem], b: &[Elem]) -> TPoly {
    let nb: TPoly = b.iter().map(neg).collect();
    padd(a, &nb)
}

pub fn deg(a: &[Elem]) -> usize {
    a.len().saturating_sub(1)
}

impl Tower {
    pub fn rational() -> Self {
        Tower { mods: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.mods.len()
    }

    /// Number of geometric points over ℚ̄ represented by the tower.
    pub fn degree(&self) -> usize {
        self.mods.iter().map(|m| deg(m)).product()
    }

    /// Adjoins a root of the monic polynomial `m` over the top level.
    pub fn extend(&self, m: TPoly) -> Tower {
        assert!(deg(&m) >= 1, "extension by a constant");
        let mut mods = self.mods.clone();
        mods.push(m);
        Tower { mods }
    }

    pub fn modulus(&self, level: usize) -> &[Elem] {
        &self.mods[level - 1]
    }

    pub fn zero(&self, level: usize) -> Elem {
        if level == 0 {
            Elem::Rat(Q::zero())
        } else {
            Elem::Poly(Vec::new())
        }
    }

    pub fn from_q(&self, level: usize, c: &Q) -> Elem {
        if level == 0 {
            Elem::Rat(c.clone())
        } else if c.is_zero() {
            Elem::Poly(Vec::new())
        } else {
            Elem::Poly(vec![self.from_q(level - 1, c)])
        }
    }

    pub fn one(&self, level: usize) -> Elem {
        self.from_q(level, &Q::from_integer(1.into()))
    }

    /// The adjoined root at the top level.
    pub fn generator(&self) -> Elem {
        let k = self.depth();
        assert!(k > 0);
        let below = k - 1;
        if deg(&self.mods[k - 1]) == 1 {
            // root of x + c is -c
            return self.lift(&neg(&self.mods[k - 1][0]), below, k);
        }
        Elem::Poly(vec![self.zero(below), self.one(below)])
    }

    /// Embeds an element of level `from` into level `to`.
    pub fn lift(&self, e: &Elem, from: usize, to: usize) -> Elem {
        let mut e = e.clone();
        for _ in from..to {
            e = if e.is_zero() { Elem::Poly(Vec::new()) } else { Elem::Poly(vec![e]) };
        }
        e
    }

    pub fn mul(&self, a: &Elem, b: &Elem, level: usize) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Poly(x), Elem::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::Poly(Vec::new());
                }
                let p = self.pmul(x, y, level - 1);
                Elem::Poly(self.prem_monic(&p, &self.mods[level - 1], level - 1))
            }
            _ => panic!("mixed tower levels"),
        }
    }

    pub fn scale_q(&self, a: &Elem, c: &Q) -> Elem {
        match a {
            Elem::Rat(x) => Elem::Rat(x * c),
            Elem::Poly(v) => {
                if c.is_zero() {
                    Elem::Poly(Vec::new())
                } else {
                    Elem::Poly(v.iter().map(|e| self.scale_q(e, c)).collect())
                }
            }
        }
    }

    /// Inverse of a structurally nonzero element, or the split it exposes.
    pub fn inv(&self, a: &Elem, level: usize) -> Result<Elem, Split> {
        assert!(!a.is_zero(), "inverse of zero");
        match a {
            Elem::Rat(x) => Ok(Elem::Rat(x.recip())),
            Elem::Poly(v) => {
                let m = &self.mods[level - 1];
                let (g, s, _) = self.pxgcd(v, m, level - 1)?;
                if deg(&g) > 0 {
                    return Err(Split { level, factor: g });
                }
                Ok(Elem::Poly(self.prem_monic(&s, m, level - 1)))
            }
        }
    }

    pub fn pmul(&self, a: &[Elem], b: &[Elem], level: usize) -> TPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(level); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = add(&out[i + j], &self.mul(x, y, level));
            }
        }
        trim(out)
    }

    pub fn pscale(&self, a: &[Elem], c: &Elem, level: usize) -> TPoly {
        trim(a.iter().map(|x| self.mul(x, c, level)).collect())
    }

    /// Remainder by a monic polynomial; needs no inversion.
    pub fn prem_monic(&self, a: &[Elem], m: &[Elem], level: usize) -> TPoly {
        let dm = deg(m);
        let mut r: TPoly = a.to_vec();
        while r.len() > dm {
            let k = r.len() - 1;
            let c = r[k].clone();
            for (j, mj) in m.iter().enumerate().take(dm) {
                let i = k - dm + j;
                r[i] = sub(&r[i], &self.mul(&c, mj, level));
            }
            r.pop();
            r = trim(r);
        }
        trim(r)
    }

    pub fn pdivrem(&self, a: &[Elem], b: &[Elem], level: usize) -> Result<(TPoly, TPoly), Split> {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = deg(b);
        let li = self.inv(b.last().unwrap(), level)?;
        let mut r: TPoly = a.to_vec();
        let mut qv = vec![self.zero(level); a.len().saturating_sub(db)];
        while !r.is_empty() && r.len() > db {
            let k = r.len() - 1;
            let c = self.mul(&r[k], &li, level);
            for (j, bj) in b.iter().enumerate().take(db) {
                let i = k - db + j;
                r[i] = sub(&r[i], &self.mul(&c, bj, level));
            }
            qv[k - db] = c;
            r.pop();
            r = trim(r);
        }
        Ok((trim(qv), r))
    }

    pub fn pmonic(&self, a: &[Elem], level: usize) -> Result<TPoly, Split> {
        match a.last() {
            None => Ok(Vec::new()),
            Some(l) => {
                let li = self.inv(l, level)?;
                Ok(self.pscale(a, &li, level))
            }
        }
    }

    /// Monic gcd together with Bézout cofactors.
    pub fn pxgcd(&self, a: &[Elem], b: &[Elem], level: usize) -> Result<(TPoly, TPoly, TPoly), Split> {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![self.one(level)], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![self.one(level)]);
        while !r1.is_empty() {
            let (qq, r) = self.pdivrem(&r0, &r1, level)?;
            let s = psub(&s0, &self.pmul(&qq, &s1, level));
            let t = psub(&t0, &self.pmul(&qq, &t1, level));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_empty() {
            return Ok((r0, s0, t0));
        }
        let li = self.inv(r0.last().unwrap(), level)?;
        Ok((
            self.pscale(&r0, &li, level),
            self.pscale(&s0, &li, level),
            self.pscale(&t0, &li, level),
        ))
    }

    pub fn pgcd(&self, a: &[Elem], b: &[Elem], level: usize) -> Result<TPoly, Split> {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.pdivrem(&x, &y, level)?.1;
            x = std::mem::replace(&mut y, r);
        }
        self.pmonic(&x, level)
    }

    pub fn pderiv(&self, a: &[Elem]) -> TPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| self.scale_q(c, &Q::from_integer((k as i64).into())))
                .collect(),
        )
    }

    pub fn peval(&self, a: &[Elem], x: &Elem, level: usize) -> Elem {
        let mut acc = self.zero(level);
        for c in a.iter().rev() {
            acc = add(&self.mul(&acc, x, level), c);
        }
        acc
    }

    /// `a(y + c)`.
    pub fn ptaylor(&self, a: &[Elem], c: &Elem, level: usize) -> TPoly {
        let mut out: TPoly = Vec::new();
        let lin = trim(vec![c.clone(), self.one(level)]);
        for coef in a.iter().rev() {
            out = padd(&self.pmul(&out, &lin, level), std::slice::from_ref(coef));
        }
        out
    }

    /// Yun's squarefree decomposition of a nonzero polynomial: monic
    /// `(factor, multiplicity)` pairs of positive degree.
    pub fn psquarefree(&self, f: &[Elem], level: usize) -> Result<Vec<(TPoly, usize)>, Split> {
        let mut out = Vec::new();
        if deg(f) == 0 {
            return Ok(out);
        }
        let f = self.pmonic(f, level)?;
        let fp = self.pderiv(&f);
        let a0 = self.pgcd(&f, &fp, level)?;
        let mut b = self.pdivrem(&f, &a0, level)?.0;
        let mut c = self.pdivrem(&fp, &a0, level)?.0;
        let mut d = psub(&c, &self.pderiv(&b));
        let mut i = 1;
        while deg(&b) > 0 {
            let a = self.pgcd(&b, &d, level)?;
            if deg(&a) > 0 {
                out.push((a.clone(), i));
            }
            b = self.pdivrem(&b, &a, level)?.0;
            c = self.pdivrem(&d, &a, level)?.0;
            d = psub(&c, &self.pderiv(&b));
            i += 1;
        }
        Ok(out)
    }

    /// The two towers obtained from a split, with element projections.
    pub fn split(&self, s: &Split) -> [Projection; 2] {
        let l = s.level;
        let m = &self.mods[l - 1];
        let (cof, r) = self.pdivrem(m, &s.factor, l - 1).expect("monic division");
        debug_assert!(r.is_empty());
        [s.factor.clone(), cof].map(|newmod| {
            let mut p = Projection { tower: self.clone(), level: l };
            p.tower.mods[l - 1] = newmod;
            for j in l..self.mods.len() {
                let projected: TPoly = self.mods[j].iter().map(|c| p.elem(c, j)).collect();
                p.tower.mods[j] = trim(projected);
            }
            p
        })
    }
}

pub struct Projection {
    pub tower: Tower,
    level: usize,
}

impl Projection {
    /// Image of an element of level `level` in the projected tower.
    pub fn elem(&self, e: &Elem, level: usize) -> Elem {
        use std::cmp::Ordering::*;
        match level.cmp(&self.level) {
            Less => e.clone(),
            Equal => match e {
                Elem::Poly(v) => Elem::Poly(self.tower.prem_monic(
                    v,
                    &self.tower.mods[self.level - 1],
                    self.level - 1,
                )),
                Elem::Rat(_) => unreachable!(),
            },
            Greater => match e {
                Elem::Poly(v) => Elem::Poly(trim(v.iter().map(|c| self.elem(c, level - 1)).collect())),
                Elem::Rat(_) => unreachable!(),
            },
        }
    }
}
