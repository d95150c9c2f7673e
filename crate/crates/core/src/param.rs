//! Rational parametrizations w = r1(t, z), wp = r2(t, z) of F(z, w, wp) = 0.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::gcd::{gcd, primitive_part};
use crate::algebra::rational::{q, qf};
use crate::algebra::resultant::resultant;
use crate::algebra::ratfunc::{homogenized_substitute, vanishes_under};
use crate::algebra::{MultiPoly, RatFunc, Var};
use crate::curve::singular::homogenize;

/// Largest numerator and denominator tried when looking for a point on a conic.
pub const CONIC_SEARCH_HEIGHT: i64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamSource {
    UserSupplied,
    BuiltinLine,
    BuiltinConic,
    BuiltinMonoid,
}

impl fmt::Display for ParamSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamSource::UserSupplied => "user_supplied",
            ParamSource::BuiltinLine => "builtin_line",
            ParamSource::BuiltinConic => "builtin_conic",
            ParamSource::BuiltinMonoid => "builtin_monoid",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("no built-in parametrization: {0}")]
    NotSupported(String),
    #[error("param_w does not depend on t")]
    ConstantInT,
    #[error("parametrization may only use t and z")]
    Variables,
    #[error("F(z, r1, r2) is not identically zero")]
    NotOnCurve,
}

/// A checked parametrization: `F(z, r1, r2) ≡ 0` and `r1` depends on `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    r1: RatFunc,
    r2: RatFunc,
    source: ParamSource,
}

impl Parametrization {
    pub fn new(big_f: &MultiPoly, r1: RatFunc, r2: RatFunc, source: ParamSource) -> Result<Self, ParamError> {
        let ok_vars = |r: &RatFunc| r.vars().iter().all(|v| *v == Var::T || *v == Var::Z);
        if !ok_vars(&r1) || !ok_vars(&r2) {
            return Err(ParamError::Variables);
        }
        if !r1.involves(Var::T) {
            return Err(ParamError::ConstantInT);
        }
        if !verify_parametrization(big_f, &r1, &r2) {
            return Err(ParamError::NotOnCurve);
        }
        Ok(Parametrization { r1, r2, source })
    }

    pub fn r1(&self) -> &RatFunc {
        &self.r1
    }

    pub fn r2(&self) -> &RatFunc {
        &self.r2
    }

    pub fn source(&self) -> ParamSource {
        self.source
    }
}

/// Whether `F(z, r1, r2)` vanishes identically.
pub fn verify_parametrization(big_f: &MultiPoly, r1: &RatFunc, r2: &RatFunc) -> bool {
    if r1.involves(Var::W) || r1.involves(Var::Wp) || r2.involves(Var::W) || r2.involves(Var::Wp) {
        return false;
    }
    vanishes_under(big_f, &[(Var::W, r1.clone()), (Var::Wp, r2.clone())])
}

/// An affine chart of the projective closure of `f(x, y) = 0`.
#[derive(Clone, Copy, Debug)]
enum Chart {
    /// u = 1, coordinates (x, y)
    Affine,
    /// y = 1, coordinates (x, u)
    InfY,
    /// x = 1, coordinates (y, u)
    InfX,
}

impl Chart {
    fn vars(self) -> (Var, Var) {
        match self {
            Chart::Affine => (Var::X, Var::Y),
            Chart::InfY => (Var::X, Var::U),
            Chart::InfX => (Var::Y, Var::U),
        }
    }

    fn equation(self, f: &MultiPoly) -> MultiPoly {
        match self {
            Chart::Affine => f.clone(),
            Chart::InfY => homogenize(f).eval_var(Var::Y, &q(1)),
            Chart::InfX => homogenize(f).eval_var(Var::X, &q(1)),
        }
    }

    /// Affine (w, wp) from chart coordinates.
    fn back(self, a: RatFunc, b: RatFunc) -> Option<(RatFunc, RatFunc)> {
        match self {
            Chart::Affine => Some((a, b)),
            Chart::InfY => {
                let inv = b.inv()?;
                Some((&a * &inv, inv))
            }
            Chart::InfX => {
                let inv = b.inv()?;
                Some((inv.clone(), &a * &inv))
            }
        }
    }
}

/// A root in ℚ(z) of `Σ c_k s^k` with `deg ≤ 2`.
fn rational_root(c: &[MultiPoly]) -> Option<RatFunc> {
    let deg = c.iter().rposition(|p| !p.is_zero())?;
    let r = |p: &MultiPoly| RatFunc::from(p.clone());
    match deg {
        0 => None,
        1 => Some(&-&r(&c[0]) / &r(&c[1])),
        2 => {
            let disc = &(&c[1] * &c[1]) - &(&c[0] * &c[2]).scale(&q(4));
            let s = disc.to_unipoly(Var::Z)?.sqrt()?;
            let s = RatFunc::from(MultiPoly::from_unipoly(&s, Var::Z));
            Some(&(&s - &r(&c[1])) / &r(&c[2]).scale(&q(2)))
        }
        _ => None,
    }
}

/// Parametrizes `h = 0` by the lines `b − q = t (a − p)` through a point of
/// multiplicity `d − 1`. `None` if `(p, q)` is not such a point.
fn pencil(h: &MultiPoly, (a, b): (Var, Var), p: &RatFunc, qq: &RatFunc, d: u32) -> Option<(RatFunc, RatFunc)> {
    let s = RatFunc::var(Var::V);
    let ts = &RatFunc::var(Var::T) * &s;
    let g = RatFunc::from(h.clone()).substitute(a, &(p + &s)).substitute(b, &(qq + &ts));
    let coeffs = g.num().coefficients_in(Var::V);
    let k = (d - 1) as usize;
    if coeffs.len() != k + 2 || coeffs[..k].iter().any(|c| !c.is_zero()) || coeffs[k].is_zero() {
        return None;
    }
    let sv = RatFunc::new(-&coeffs[k], coeffs[k + 1].clone());
    let x = p + &sv;
    let y = qq + &(&RatFunc::var(Var::T) * &sv);
    Some((x, y))
}

/// The only root over ℚ(z) of the univariate (in `a`) polynomial `g`, if it
/// has exactly one distinct root and that root is rational.
fn single_root(g: &MultiPoly, a: Var) -> Option<RatFunc> {
    if g.is_zero() || g.degree(a) == 0 {
        return None;
    }
    let g = primitive_part(g, a);
    let sqf = g.div_exact(&gcd(&g, &g.derivative(a)))?;
    if sqf.degree(a) != 1 {
        return None;
    }
    Some(RatFunc::new(-&sqf.coeff_in(a, 0), sqf.coeff_in(a, 1)))
}

fn eliminate(polys: &[MultiPoly], elim: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (i, f) in polys.iter().enumerate() {
        for g in &polys[i + 1..] {
            let r = match (f.degree(elim), g.degree(elim)) {
                (0, _) => f.clone(),
                (_, 0) => g.clone(),
                _ => resultant(f, g, elim).unwrap_or_else(|_| MultiPoly::zero()),
            };
            if !r.is_zero() {
                acc = if acc.is_zero() { r } else { gcd(&acc, &r) };
            }
        }
    }
    acc
}

/// Candidate for the point of multiplicity `d − 1` in chart coordinates: the
/// common zero of all partial derivatives of order at most `d − 2`.
///
/// The highest derivatives are tried alone first. Any common zero of the full
/// set is one of theirs, so a unique zero there is already the candidate;
/// lower orders are added only while the zero is not unique.
fn high_multiplicity_point(h: &MultiPoly, (a, b): (Var, Var), d: u32) -> Option<(RatFunc, RatFunc)> {
    let mut layers = vec![vec![h.clone()]];
    for _ in 0..d - 2 {
        let layer = layers.last().unwrap();
        let mut next: Vec<MultiPoly> = layer.iter().map(|p| p.derivative(a)).collect();
        next.push(layer.last().unwrap().derivative(b));
        layers.push(next);
    }
    for from in (0..layers.len()).rev() {
        let polys: Vec<MultiPoly> = layers[from..].iter().rev().flatten().filter(|p| !p.is_zero()).cloned().collect();
        let Some(pa) = single_root(&eliminate(&polys, b), a) else { continue };
        // with `a` known, `b` is the common root of the specialized polynomials
        let at_pa = polys
            .iter()
            .map(|p| homogenized_substitute(p, a, pa.num(), pa.den(), p.degree(a)))
            .fold(MultiPoly::zero(), |g, p| gcd(&g, &p));
        let Some(pb) = single_root(&at_pa, b) else { continue };
        return Some((pa, pb));
    }
    None
}

fn small_rationals() -> impl Iterator<Item = num_rational::BigRational> {
    let n = CONIC_SEARCH_HEIGHT;
    let mut out: Vec<(i64, i64)> = Vec::new();
    for den in 1..=n {
        for num in -n..=n {
            if num.gcd(&den) == 1 {
                out.push((num, den));
            }
        }
    }
    out.sort_by_key(|&(a, b)| (a.abs().max(b), a.abs(), a < 0, b));
    out.into_iter().map(|(a, b)| qf(a, b))
}

/// Points of the affine conic with one coordinate fixed to a rational.
fn conic_points(f: &MultiPoly) -> impl Iterator<Item = (RatFunc, RatFunc)> + '_ {
    let fixed = |fix: Var, free: Var, c: num_rational::BigRational| {
        let root = rational_root(&f.eval_var(fix, &c).coefficients_in(free))?;
        let c = RatFunc::constant(c);
        Some(if fix == Var::X { (c, root) } else { (root, c) })
    };
    let intercepts = [(Var::Y, Var::X), (Var::X, Var::Y)].into_iter().filter_map(move |(fix, free)| fixed(fix, free, q(0)));
    let above = small_rationals()
        .filter(|c| !c.is_zero())
        .flat_map(|c| [(Var::X, Var::Y, c.clone()), (Var::Y, Var::X, c)])
        .filter_map(move |(fix, free, c)| fixed(fix, free, c));
    intercepts.chain(above)
}

fn finish(big_f: &MultiPoly, chart: Chart, a: RatFunc, b: RatFunc, source: ParamSource) -> Option<Parametrization> {
    let (w, wp) = chart.back(a, b)?;
    Parametrization::new(big_f, w, wp, source).ok()
}

/// Tries the built-in constructions on the curve `F(z, x, y) = 0` over ℚ(z):
/// lines, conics with an easily found point, and monoids.
pub fn auto_parametrize(big_f: &MultiPoly) -> Result<Parametrization, ParamError> {
    let f = big_f.rename(&[(Var::W, Var::X), (Var::Wp, Var::Y)]);
    let d = f.degree_in(&[Var::X, Var::Y]);
    match d {
        0 => Err(ParamError::NotSupported("equation does not involve w or wp".into())),
        1 => {
            let b = f.coeff_in(Var::Y, 1);
            if b.is_zero() {
                return Err(ParamError::NotSupported("equation does not involve wp".into()));
            }
            let rest = f.coeff_in(Var::Y, 0).rename(&[(Var::X, Var::T)]);
            let wp = RatFunc::new(-&rest, b.rename(&[(Var::X, Var::T)]));
            Parametrization::new(big_f, RatFunc::var(Var::T), wp, ParamSource::BuiltinLine)
        }
        2 => {
            for (p, pq) in conic_points(&f) {
                if let Some((a, b)) = pencil(&f, Chart::Affine.vars(), &p, &pq, 2) {
                    if let Some(par) = finish(big_f, Chart::Affine, a, b, ParamSource::BuiltinConic) {
                        return Ok(par);
                    }
                }
            }
            for chart in [Chart::InfY, Chart::InfX] {
                let h = chart.equation(&f);
                let (a, b) = chart.vars();
                let p = match chart {
                    Chart::InfY => rational_root(&h.eval_var(b, &q(0)).coefficients_in(a)),
                    _ => h.eval_all(&[(a, q(0)), (b, q(0))]).is_zero().then(RatFunc::zero),
                };
                let Some(p) = p else { continue };
                if let Some((x, u)) = pencil(&h, (a, b), &p, &RatFunc::zero(), 2) {
                    if let Some(par) = finish(big_f, chart, x, u, ParamSource::BuiltinConic) {
                        return Ok(par);
                    }
                }
            }
            Err(ParamError::NotSupported(format!(
                "no rational point found on the conic with coordinates of height at most {CONIC_SEARCH_HEIGHT}"
            )))
        }
        _ => {
            for chart in [Chart::Affine, Chart::InfY, Chart::InfX] {
                let h = chart.equation(&f);
                let vars = chart.vars();
                let Some((p, pq)) = high_multiplicity_point(&h, vars, d) else { continue };
                if let Some((a, b)) = pencil(&h, vars, &p, &pq, d) {
                    if let Some(par) = finish(big_f, chart, a, b, ParamSource::BuiltinMonoid) {
                        return Ok(par);
                    }
                }
            }
            Err(ParamError::NotSupported(format!("degree {d} curve without a rational point of multiplicity {}", d - 1)))
        }
    }
}
