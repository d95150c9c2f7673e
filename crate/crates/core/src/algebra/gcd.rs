//! Multivariate polynomial gcd over ℚ.
//!
//! Recursive: pick a main variable, split off contents (gcd of coefficients,
//! computed recursively), then run a primitive pseudo-remainder sequence on
//! the primitive parts. A univariate image at a random point detects the
//! common case of coprime inputs without running the PRS.

use num_traits::One;

use super::multipoly::MultiPoly;
use super::rational::{q, rational_content, Q};
use super::var::Var;

/// Monic (in the canonical term order) greatest common divisor.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return a.monic();
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd(&content(a, v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd(a, &content(b, v));
    }
    let x = *va
        .iter()
        .min_by_key(|&&v| a.degree(v).max(b.degree(v)))
        .unwrap();
    let ca = content(a, x);
    let cb = content(b, x);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = if probably_coprime(&pa, &pb, x) {
        MultiPoly::one()
    } else {
        prs_gcd(&pa, &pb, x)
    };
    (&c * &g).monic()
}

/// gcd of the coefficients of `a` viewed as a polynomial in `v`.
pub fn content(a: &MultiPoly, v: Var) -> MultiPoly {
    let mut g = MultiPoly::zero();
    let mut coeffs = a.coefficients_in(v);
    // cheap ones first: more likely to drive the gcd to 1 early
    coeffs.sort_by_key(|c| c.num_terms());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
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

pub fn primitive_part(a: &MultiPoly, v: Var) -> MultiPoly {
    if a.is_zero() {
        return a.clone();
    }
    a.div_exact(&content(a, v)).expect("content divides")
}

/// lcm, monic.
pub fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let g = gcd(a, b);
    (a * &b.div_exact(&g).unwrap()).monic()
}

/// Evaluation points for the coprimality test; deterministic.
const PROBE: [i64; 9] = [3, -5, 7, 11, -2, 13, 17, -19, 23];

/// True only when `a` and `b` (primitive in `x`) certainly share no factor
/// of positive degree in `x`: their images at a point where neither leading
/// coefficient vanishes are coprime.
fn probably_coprime(a: &MultiPoly, b: &MultiPoly, x: Var) -> bool {
    let others: Vec<Var> = a.vars().into_iter().chain(b.vars()).filter(|&v| v != x).collect();
    let la = a.leading_coeff_in(x);
    let lb = b.leading_coeff_in(x);
    for shift in 0..3 {
        let point: Vec<(Var, Q)> = others
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, q(PROBE[(i + shift) % PROBE.len()] + shift as i64)))
            .collect();
        if la.eval_all(&point).is_zero() || lb.eval_all(&point).is_zero() {
            continue;
        }
        let ua = a.eval_all(&point).to_unipoly(x).unwrap();
        let ub = b.eval_all(&point).to_unipoly(x).unwrap();
        return ua.gcd(&ub).degree() == 0;
    }
    false
}

/// Pseudo-remainder of `f` by `g` in the variable `x`.
pub fn prem(f: &MultiPoly, g: &MultiPoly, x: Var) -> MultiPoly {
    let dg = g.degree(x);
    let lg = g.leading_coeff_in(x);
    let mut r = f.clone();
    let mut df = r.degree(x);
    if df < dg {
        return r;
    }
    let mut e = df - dg + 1;
    while !r.is_zero() && r.degree(x) >= dg {
        df = r.degree(x);
        let lr = r.leading_coeff_in(x);
        let shift = MultiPoly::monomial(Q::one(), super::multipoly::Monomial::var(x, (df - dg) as u16));
        r = &(&r * &lg) - &(&(&lr * &shift) * g);
        e -= 1;
    }
    if e > 0 {
        r = &r * &lg.pow(e);
    }
    r
}

fn prs_gcd(a: &MultiPoly, b: &MultiPoly, x: Var) -> MultiPoly {
    let (mut f, mut g) = if a.degree(x) >= b.degree(x) {
        (integer_primitive(a), integer_primitive(b))
    } else {
        (integer_primitive(b), integer_primitive(a))
    };
    if let Some(qq) = f.div_exact(&g) {
        let _ = qq;
        return primitive_part(&g, x).monic();
    }
    loop {
        let r = prem(&f, &g, x);
        if r.is_zero() {
            return primitive_part(&g, x).monic();
        }
        if r.degree(x) == 0 {
            return MultiPoly::one();
        }
        f = g;
        g = integer_primitive(&primitive_part(&r, x));
    }
}

/// Divides out the rational content so PRS coefficients stay integral and small.
fn integer_primitive(a: &MultiPoly) -> MultiPoly {
    a.scale(&rational_content(a.terms().map(|(_, c)| c)).recip())
}

pub fn is_one(p: &MultiPoly) -> bool {
    p.constant_value().is_some_and(|c| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }

    #[test]
    fn gcd_z2_minus_1_and_z_minus_1() {
        let z = v(Var::Z);
        let a = &z.pow(2) - &c(1);
        let b = &z - &c(1);
        assert_eq!(gcd(&a, &b), b);
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let p = &v(Var::Z).scale(&q(3)) + &c(6);
        assert_eq!(gcd(&p, &MultiPoly::zero()), &v(Var::Z) + &c(2));
        assert!(gcd(&MultiPoly::zero(), &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn gcd_bivariate_common_factor() {
        // gcd((w-z)^2 (w+1), (w-z)(w+2)) = w - z
        let w = v(Var::W);
        let z = v(Var::Z);
        let wz = &w - &z;
        let a = &(&wz * &wz) * &(&w + &c(1));
        let b = &wz * &(&w + &c(2));
        let g = gcd(&a, &b);
        // oracle: trial division of both inputs by the claimed gcd, and the
        // cofactors share nothing of positive degree
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
        assert_eq!(g, wz.monic());
    }

    #[test]
    fn gcd_three_variables() {
        let (z, t, l) = (v(Var::Z), v(Var::T), v(Var::Lambda));
        let g0 = &(&z * &t) + &(&l.pow(2) - &c(3));
        let a = &g0 * &(&z + &t);
        let b = &g0 * &(&(&t * &l) - &z);
        let g = gcd(&a, &b);
        assert_eq!(g, g0.monic());
    }

    #[test]
    fn content_extraction() {
        let (z, w) = (v(Var::Z), v(Var::W));
        let p = &(&z + &c(1)) * &(&w.pow(2) + &(&z * &w));
        assert_eq!(content(&p, Var::W), (&z + &c(1)).monic());
    }
}
