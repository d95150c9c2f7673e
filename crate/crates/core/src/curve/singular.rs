//! Singular points of plane curves, affine and at infinity.

use num_traits::{One, Zero};

use super::delta::{delta_sum, from_multipoly, multiplicity, translate, BiPoly, LocalError};
use super::{CurveError, PlaneCurve};
use crate::algebra::factor::factor;
use crate::algebra::gcd::gcd;
use crate::algebra::rational::{q, Q};
use crate::algebra::resultant::resultant;
use crate::algebra::tower::{deg, Elem, TPoly, Tower};
use crate::algebra::{MultiPoly, UniPoly, Var};

const SHEARS: i64 = 24;

/// A Galois orbit of singular points, given over ℚ(α) with α a root of
/// `minimal_poly`. Coordinates are polynomials in α: the affine point
/// `(x, y)`, or the point `(x : y : 0)` at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCluster {
    pub minimal_poly: UniPoly,
    pub x: UniPoly,
    pub y: UniPoly,
    pub at_infinity: bool,
    pub multiplicity: u32,
    /// δ of each point of the orbit.
    pub delta: u64,
}

impl SingularCluster {
    pub fn size(&self) -> usize {
        self.minimal_poly.degree()
    }

    /// Rational coordinates, when the cluster is a single affine ℚ-point.
    pub fn rational_point(&self) -> Option<(Q, Q)> {
        if self.at_infinity || self.size() != 1 {
            return None;
        }
        let root = -self.minimal_poly.coeff(0);
        Some((self.x.eval(&root), self.y.eval(&root)))
    }
}

fn level1(t: &Tower, p: &UniPoly) -> Elem {
    let coeffs: TPoly = p.coeffs().iter().map(|c| Elem::Rat(c.clone())).collect();
    Elem::Poly(t.prem_monic(&coeffs, t.modulus(1), 0))
}

fn to_uni(e: &Elem) -> UniPoly {
    match e {
        Elem::Rat(c) => UniPoly::constant(c.clone()),
        Elem::Poly(v) => UniPoly::new(v.iter().map(|c| c.as_rational().expect("level 1")).collect()),
    }
}

/// `f(α, y)` as a polynomial in `y` over ℚ(α).
fn specialize_x(t: &Tower, f: &MultiPoly, x: Var, y: Var) -> TPoly {
    let mut out: TPoly = f
        .coefficients_in(y)
        .iter()
        .map(|c| level1(t, &c.to_unipoly(x).expect("bivariate")))
        .collect();
    while out.last().is_some_and(Elem::is_zero) {
        out.pop();
    }
    out
}

fn local_delta(t: &Tower, g: &BiPoly) -> Result<(u32, u64), CurveError> {
    let m = multiplicity(t, g).map_err(|_| CurveError::Internal("reducible cluster polynomial"))?;
    let total = match delta_sum(t, g, 0) {
        Ok(v) => v,
        Err(LocalError::Depth) => return Err(CurveError::BlowupDepthExceeded),
        Err(LocalError::Split(_)) => unreachable!("delta_sum resolves splits"),
    };
    Ok((m, total / t.degree() as u64))
}

fn irreducible_factors(p: &UniPoly) -> Vec<UniPoly> {
    if p.degree() == 0 {
        return Vec::new();
    }
    factor(p).factors.into_iter().map(|(f, _)| f).collect()
}

fn affine(c: &PlaneCurve) -> Result<Vec<SingularCluster>, CurveError> {
    let (x, y) = (Var::X, Var::Y);
    let d = c.degree();
    'shear: for step in 0..SHEARS {
        let s = if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 };
        let sheared = MultiPoly::var(x) + MultiPoly::var(y).scale(&q(s));
        let ft = c.f().substitute(x, &sheared);
        if ft.degree(y) != d {
            continue;
        }
        let fx = ft.derivative(x);
        let fy = ft.derivative(y);
        let r1 = resultant(&ft, &fy, y).expect("degree d - 1 > 0");
        let r2 = if fx.degree(y) > 0 { resultant(&ft, &fx, y).expect("positive degree") } else { fx.clone() };
        let r = gcd(&r1, &r2).to_unipoly(x).expect("eliminated y");
        let mut out = Vec::new();
        for p in irreducible_factors(&r) {
            let t = Tower::rational().extend(p.coeffs().iter().map(|c| Elem::Rat(c.clone())).collect());
            let a = specialize_x(&t, &ft, x, y);
            let b = specialize_x(&t, &fx, x, y);
            let cc = specialize_x(&t, &fy, x, y);
            let reducible = |_| CurveError::Internal("reducible resultant factor");
            let g = t.pgcd(&t.pgcd(&a, &b, 1).expect("field"), &cc, 1).map_err(reducible)?;
            // distinct y-coordinates over this x; the factors are monic
            let mut roots = t.psquarefree(&g, 1).map_err(reducible)?.into_iter().map(|(f, _)| f);
            let g = match (roots.next(), roots.next()) {
                (None, _) => continue,
                (Some(f), None) if deg(&f) == 1 => f,
                _ => continue 'shear,
            };
            let alpha = t.generator();
            let beta = crate::algebra::tower::neg(&g[0]);
            let local = translate(&t, &from_multipoly(&t, &ft, x, y), &alpha, &beta);
            let (m, delta) = local_delta(&t, &local)?;
            let by = to_uni(&beta);
            let bx = (&UniPoly::x() + &by.scale(&q(s))).rem(&p);
            out.push(SingularCluster {
                minimal_poly: p,
                x: bx,
                y: by,
                at_infinity: false,
                multiplicity: m,
                delta,
            });
        }
        return Ok(out);
    }
    Err(CurveError::Internal("no admissible shear"))
}

/// Homogenization with `u` as the third coordinate.
pub fn homogenize(f: &MultiPoly) -> MultiPoly {
    let d = f.degree_in(&[Var::X, Var::Y]);
    MultiPoly::from_terms(f.terms().map(|(m, c)| {
        let k = d - m.exp(Var::X) as u32 - m.exp(Var::Y) as u32;
        (m.with(Var::U, k as u16), c.clone())
    }))
}

fn at_infinity(c: &PlaneCurve) -> Result<Vec<SingularCluster>, CurveError> {
    let (x, s) = (Var::X, Var::U);
    let big_f = homogenize(c.f());
    let mut out = Vec::new();
    // chart y = 1
    let h = big_f.eval_var(Var::Y, &Q::one());
    let at0 = |p: &MultiPoly| p.eval_var(s, &Q::zero()).to_unipoly(x).expect("univariate");
    let u = at0(&h).gcd(&at0(&h.derivative(x))).gcd(&at0(&h.derivative(s)));
    for p in irreducible_factors(&u) {
        let t = Tower::rational().extend(p.coeffs().iter().map(|c| Elem::Rat(c.clone())).collect());
        let local = translate(&t, &from_multipoly(&t, &h, x, s), &t.generator(), &t.zero(1));
        let (m, delta) = local_delta(&t, &local)?;
        out.push(SingularCluster {
            minimal_poly: p,
            x: UniPoly::x(),
            y: UniPoly::one(),
            at_infinity: true,
            multiplicity: m,
            delta,
        });
    }
    // the point (1 : 0 : 0)
    let hh = big_f.eval_var(Var::X, &Q::one());
    let origin = [(Var::Y, Q::zero()), (s, Q::zero())];
    let vanish = |p: &MultiPoly| p.eval_all(&origin).is_zero();
    if vanish(&hh) && vanish(&hh.derivative(Var::Y)) && vanish(&hh.derivative(s)) {
        let t = Tower::rational();
        let local = from_multipoly(&t, &hh, Var::Y, s);
        let (m, delta) = local_delta(&t, &local)?;
        out.push(SingularCluster {
            minimal_poly: UniPoly::x(),
            x: UniPoly::one(),
            y: UniPoly::zero(),
            at_infinity: true,
            multiplicity: m,
            delta,
        });
    }
    Ok(out)
}

/// All singular points of the projective closure, one entry per Galois orbit.
pub fn singular_points(c: &PlaneCurve) -> Result<Vec<SingularCluster>, CurveError> {
    if c.degree() <= 1 {
        return Ok(Vec::new());
    }
    let mut out = affine(c)?;
    out.extend(at_infinity(c)?);
    Ok(out)
}
