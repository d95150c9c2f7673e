//! Local δ-invariants by repeated quadratic transformation.
//!
//! A local equation is a bivariate polynomial over a [`Tower`] whose points
//! all sit at the origin. The tower stands for `deg(tower)` geometric points
//! at once, so every contribution is weighted by that degree and the result
//! is the sum of δ over all of them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::algebra::rational::Q;
use crate::algebra::tower::{self, deg, Elem, Split, TPoly, Tower};
use crate::algebra::{MultiPoly, Var};

pub const MAX_BLOWUP_DEPTH: usize = 12;

/// Sparse bivariate polynomial `Σ c_ij x^i y^j` over a tower level.
pub type BiPoly = BTreeMap<(u32, u32), Elem>;

#[derive(Debug)]
pub(crate) enum LocalError {
    Split(Split),
    Depth,
}

impl From<Split> for LocalError {
    fn from(s: Split) -> Self {
        LocalError::Split(s)
    }
}

fn push(g: &mut BiPoly, key: (u32, u32), e: Elem) {
    if e.is_zero() {
        return;
    }
    let v = match g.remove(&key) {
        Some(old) => tower::add(&old, &e),
        None => e,
    };
    if !v.is_zero() {
        g.insert(key, v);
    }
}

fn binom(n: u32, k: u32) -> Q {
    Q::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn powers(t: &Tower, a: &Elem, n: u32, level: usize) -> Vec<Elem> {
    let mut out = vec![t.one(level)];
    for _ in 0..n {
        let next = t.mul(out.last().unwrap(), a, level);
        out.push(next);
    }
    out
}

pub fn from_multipoly(t: &Tower, f: &MultiPoly, xv: Var, yv: Var) -> BiPoly {
    let level = t.depth();
    let mut g = BiPoly::new();
    for (m, c) in f.terms() {
        push(&mut g, (m.exp(xv) as u32, m.exp(yv) as u32), t.from_q(level, c));
    }
    g
}

pub fn lift(t: &Tower, g: &BiPoly, from: usize, to: usize) -> BiPoly {
    g.iter().map(|(k, e)| (*k, t.lift(e, from, to))).collect()
}

/// `g(x + a, y + b)`.
pub fn translate(t: &Tower, g: &BiPoly, a: &Elem, b: &Elem) -> BiPoly {
    let level = t.depth();
    let dx = g.keys().map(|k| k.0).max().unwrap_or(0);
    let dy = g.keys().map(|k| k.1).max().unwrap_or(0);
    let pa = powers(t, a, dx, level);
    let pb = powers(t, b, dy, level);
    let mut out = BiPoly::new();
    for (&(i, j), c) in g {
        for k in 0..=i {
            let ck = t.mul(c, &t.scale_q(&pa[(i - k) as usize], &binom(i, k)), level);
            if ck.is_zero() {
                continue;
            }
            for l in 0..=j {
                let e = t.mul(&ck, &t.scale_q(&pb[(j - l) as usize], &binom(j, l)), level);
                push(&mut out, (k, l), e);
            }
        }
    }
    out
}

/// `g(x + c y, y)`.
pub fn shear(t: &Tower, g: &BiPoly, c: &Elem) -> BiPoly {
    let level = t.depth();
    let dx = g.keys().map(|k| k.0).max().unwrap_or(0);
    let pc = powers(t, c, dx, level);
    let mut out = BiPoly::new();
    for (&(i, j), a) in g {
        for k in 0..=i {
            let e = t.mul(a, &t.scale_q(&pc[(i - k) as usize], &binom(i, k)), level);
            push(&mut out, (k, i - k + j), e);
        }
    }
    out
}

fn project(p: &tower::Projection, g: &BiPoly, level: usize) -> BiPoly {
    let mut out = BiPoly::new();
    for (k, e) in g {
        push(&mut out, *k, p.elem(e, level));
    }
    out
}

/// Multiplicity at the origin, valid on every component of the tower.
pub(crate) fn multiplicity(t: &Tower, g: &BiPoly) -> Result<u32, Split> {
    let level = t.depth();
    let max = g.keys().map(|k| k.0 + k.1).max().unwrap_or(0);
    for k in 0..=max {
        if let Some((_, e)) = g.iter().find(|((i, j), _)| i + j == k) {
            t.inv(e, level)?;
            return Ok(k);
        }
    }
    Ok(max)
}

/// Sum of δ over all points represented by `(t, g)`.
pub(crate) fn delta_sum(t: &Tower, g: &BiPoly, depth: usize) -> Result<u64, LocalError> {
    match delta_node(t, g, depth) {
        Err(LocalError::Split(s)) => {
            let level = t.depth();
            let mut total = 0;
            for p in t.split(&s) {
                total += delta_sum(&p.tower, &project(&p, g, level), depth)?;
            }
            Ok(total)
        }
        other => other,
    }
}

fn tangent_cone_at(t: &Tower, g: &BiPoly, m: u32, c: &Elem) -> Elem {
    // f_m(c, 1)
    let level = t.depth();
    let mut acc = t.zero(level);
    let pc = powers(t, c, m, level);
    for (&(i, _), e) in g.iter().filter(|((i, j), _)| i + j == m) {
        let term = t.mul(e, &pc[i as usize], level);
        acc = tower::add(&acc, &term);
    }
    acc
}

fn delta_node(t: &Tower, g: &BiPoly, depth: usize) -> Result<u64, LocalError> {
    let level = t.depth();
    let m = multiplicity(t, g)?;
    if m <= 1 {
        return Ok(0);
    }
    if depth >= MAX_BLOWUP_DEPTH {
        return Err(LocalError::Depth);
    }
    let mut total = (t.degree() as u64) * (m as u64) * (m as u64 - 1) / 2;

    // make x = 0 a non-tangent direction so one chart sees every tangent
    let mut g = g.clone();
    for step in 0..=(m as i64 + 1) {
        let c = if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 };
        let ce = t.from_q(level, &Q::from_integer(c.into()));
        let v = tangent_cone_at(t, &g, m, &ce);
        if v.is_zero() {
            continue;
        }
        t.inv(&v, level)?;
        if c != 0 {
            g = shear(t, &g, &ce);
        }
        break;
    }

    // strict transform under y = x y1
    let mut g1 = BiPoly::new();
    for (&(i, j), e) in &g {
        push(&mut g1, (i + j - m, j), e.clone());
    }
    let mut h: TPoly = vec![t.zero(level); m as usize + 1];
    for (&(i, j), e) in &g1 {
        if i == 0 {
            h[j as usize] = e.clone();
        }
    }
    let sq = t.psquarefree(&h, level)?;
    for (s, k) in sq {
        if k < 2 {
            continue;
        }
        let sub = if deg(&s) == 1 {
            let r = tower::neg(&s[0]);
            delta_sum(t, &translate(t, &g1, &t.zero(level), &r), depth + 1)
        } else {
            let ext = t.extend(s);
            let lifted = lift(&ext, &g1, level, level + 1);
            let theta = ext.generator();
            delta_sum(&ext, &translate(&ext, &lifted, &ext.zero(level + 1), &theta), depth + 1)
        };
        total += sub?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_ratfunc;

    fn local(text: &str) -> BiPoly {
        let f = parse_ratfunc(text).unwrap().num().clone();
        from_multipoly(&Tower::rational(), &f, Var::Z, Var::W)
    }

    fn delta(text: &str) -> u64 {
        delta_sum(&Tower::rational(), &local(text), 0).unwrap()
    }

    // z plays x and w plays y in these local equations
    #[test]
    fn node_and_cusp() {
        assert_eq!(delta("w^2 - z^2*(z + 1)"), 1);
        assert_eq!(delta("w^2 - z^3"), 1);
    }

    #[test]
    fn ordinary_triple_point() {
        assert_eq!(delta("z^3 - w^3 + z^4"), 3);
    }

    #[test]
    fn tacnode_and_higher_cusps() {
        // tacnode y^2 = x^4: delta 2; A_4 cusp y^2 = x^5: delta 2; y^3 = x^4 (E_6): delta 3
        assert_eq!(delta("w^2 - z^4"), 2);
        assert_eq!(delta("w^2 - z^5"), 2);
        assert_eq!(delta("w^3 - z^4"), 3);
    }

    #[test]
    fn irrational_tangents() {
        // y^2 - 2 x^2 + higher: node with tangents y = ±sqrt2 x
        assert_eq!(delta("w^2 - 2*z^2 + z^3"), 1);
        // quadruple point with tangents y = ±sqrt2 x, each doubled; smooth after one blowup
        assert_eq!(delta("(w^2 - 2*z^2)^2 - z^5"), 6);
        // same tangents, but each branch pair stays tangent: one more node per direction
        assert_eq!(delta("(w^2 - 2*z^2)^2 - z^6"), 6 + 2);
    }

    #[test]
    fn smooth_point() {
        assert_eq!(delta("w - z^2"), 0);
    }
}
