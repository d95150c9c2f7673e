//! Rational general solutions of `v' + v² = r`, of linear `t' = B t + C`,
//! and of constant-coefficient Riccati equations.
//!
//! Classical equations follow Kovacic's first case restricted to double
//! poles: pick a residue for every conjugate pole cluster and an exponent at
//! infinity, solve for a polynomial `P` of the forced degree, and read off a
//! particular solution `ω + P'/P`. The one-parameter family then comes from
//! `v = v0 + 1/u` with `u' = 2 v0 u + 1`.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{GeneralSolution, Provenance, RiccatiOde, Stage};
use crate::algebra::hermite::hermite_integrate;
use crate::algebra::linalg::nullspace;
use crate::algebra::numberfield::{NfElem, NumberField};
use crate::algebra::partial_fractions::partial_fractions;
use crate::algebra::rational::{int_sqrt_exact, q, qf, to_i64, Q};
use crate::algebra::residue::extension_residue;
use crate::algebra::{RatFunc, UniPoly, Var};

/// Cap on conjugate pole clusters; the search visits `2^(clusters + 1)` branches.
pub const MAX_CLUSTERS: usize = 16;

/// Exponents of `exp(∫ B)` beyond this are treated as non-rational.
const MAX_EXPONENT: i64 = 10_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("coefficient is not a rational function of z alone")]
    NotUnivariate,
    #[error("{0} pole clusters exceed the cap of {MAX_CLUSTERS}")]
    TooManyClusters(usize),
}

/// Which necessary condition for a rational general solution failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// deg(num r) − deg(den r) ≤ −2
    Degree,
    /// every pole of r has order at most 2
    PoleOrder,
    /// every double pole has 4β = n² − 1 with an integer n ≥ 2
    DoublePole,
    /// 4β∞ + 1 is the square of an integer
    Infinity,
    /// no residue choice yields a rational solution
    NoParticular,
    /// exp(∫ 2 v0) or the integral in the general solution is not rational
    NonRationalIntegral,
    /// constant coefficients: u' + u² = c with c ≠ 0, or u' = b u + c with b ≠ 0
    ConstantCase,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Degree => "deg p - deg q <= -2",
            Clause::PoleOrder => "r has only double poles",
            Clause::DoublePole => "4 beta = n^2 - 1 with integer n >= 2 at every double pole",
            Clause::Infinity => "4 beta_inf + 1 is an integer square",
            Clause::NoParticular => "a rational particular solution exists",
            Clause::NonRationalIntegral => "the exponential and integral of the general solution are rational",
            Clause::ConstantCase => "constant-coefficient reduction",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoRgs {
    pub clause: Clause,
    pub detail: String,
}

impl fmt::Display for NoRgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violates {}: {}", self.clause, self.detail)
    }
}

fn no_rgs(clause: Clause, detail: impl Into<String>) -> NoRgs {
    NoRgs { clause, detail: detail.into() }
}

/// Laurent data of `r` at the roots of one irreducible factor of its denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleDatum {
    pub q: UniPoly,
    pub mult: usize,
    pub field: NumberField,
    /// coefficient of (z − α)^(−2)
    pub beta: NfElem,
    /// coefficient of (z − α)^(−1)
    pub gamma: NfElem,
    pub n: Option<u32>,
}

fn uni(r: &RatFunc) -> Option<(UniPoly, UniPoly)> {
    r.to_uni(Var::Z)
}

/// Integer `n ≥ 0` with `n² = x`.
fn int_square_root(x: &Q) -> Option<u32> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    int_sqrt_exact(x.numer()).and_then(|n| u32::try_from(n).ok())
}

/// Pole data of `r ∈ ℚ(z)`, or the first violated necessary condition.
pub fn analyze_poles(r: &RatFunc) -> Result<Vec<PoleDatum>, NoRgs> {
    let (n, d) = uni(r).expect("r is a rational function of z");
    let excess = n.degree() as i64 - d.degree() as i64;
    if n.is_zero() || excess > -2 {
        return Err(no_rgs(Clause::Degree, format!("deg p - deg q = {excess}")));
    }
    let mut out = Vec::new();
    for (qf, mult) in crate::algebra::factor::factor(&d).factors {
        if mult > 2 {
            return Err(no_rgs(Clause::PoleOrder, format!("pole of order {mult} at the roots of {qf}")));
        }
        let (field, beta) = extension_residue(r, &qf, 2).expect("factor of the denominator");
        let (_, gamma) = extension_residue(r, &qf, 1).expect("factor of the denominator");
        let nn = beta.as_rational().and_then(|b| int_square_root(&(b * q(4) + q(1))));
        match nn {
            Some(k) if k >= 2 => {}
            _ => {
                return Err(no_rgs(
                    Clause::DoublePole,
                    format!("at the roots of {qf}: pole order {mult}, beta = {beta}"),
                ))
            }
        }
        out.push(PoleDatum { q: qf, mult, field, beta, gamma, n: nn });
    }
    Ok(out)
}

/// Exponents `c` with `v ~ c/z` at infinity.
fn exponents_at_infinity(r: &RatFunc) -> Result<Vec<Q>, NoRgs> {
    let (n, d) = uni(r).expect("r is a rational function of z");
    if n.degree() + 2 < d.degree() {
        return Ok(vec![q(0), q(1)]);
    }
    let b_inf = n.lc() / d.lc();
    let k = int_square_root(&(&b_inf * q(4) + q(1)))
        .ok_or_else(|| no_rgs(Clause::Infinity, format!("beta_inf = {b_inf}")))?;
    let k = q(k as i64);
    let mut out = vec![(q(1) + &k) / q(2), (q(1) - &k) / q(2)];
    out.dedup();
    Ok(out)
}

/// Polynomials `P` of degree ≤ d with `P'' + 2ωP' + (ω' + ω² − r)P = 0`.
pub fn polynomial_solutions(omega: &RatFunc, r: &RatFunc, d: usize) -> Vec<UniPoly> {
    let coef = &(&omega.derivative(Var::Z) + &(omega * omega)) - r;
    let (Some((on, od)), Some((cn, cd))) = (uni(omega), uni(&coef)) else {
        return Vec::new();
    };
    let den = {
        let g = od.gcd(&cd);
        &od * &cd.div_exact(&g).expect("gcd divides")
    };
    let om = &on * &den.div_exact(&od).expect("lcm");
    let cm = &cn * &den.div_exact(&cd).expect("lcm");
    let cols: Vec<UniPoly> = (0..=d)
        .map(|k| {
            let zk = |e: usize| UniPoly::one().shift_up(e);
            let mut acc = &cm * &zk(k);
            if k >= 1 {
                acc = &acc + &(&om * &zk(k - 1)).scale(&q(2 * k as i64));
            }
            if k >= 2 {
                acc = &acc + &(&den * &zk(k - 2)).scale(&q((k * (k - 1)) as i64));
            }
            acc
        })
        .collect();
    let nrows = cols.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<Q>> = (0..nrows).map(|i| cols.iter().map(|c| c.coeff(i)).collect()).collect();
    if rows.is_empty() {
        return (0..=d).map(|k| UniPoly::one().shift_up(k)).collect();
    }
    nullspace(&rows, d + 1).into_iter().map(UniPoly::new).collect()
}

/// `Σ a · q'/q` over clusters.
fn log_derivative_sum(poles: &[PoleDatum], choice: &[Q]) -> RatFunc {
    let mut omega = RatFunc::zero();
    for (p, a) in poles.iter().zip(choice) {
        let term = RatFunc::from_uni(&p.q.derivative().scale(a), &p.q, Var::Z);
        omega = &omega + &term;
    }
    omega
}

fn is_solution(v: &RatFunc, r: &RatFunc) -> bool {
    RiccatiOde::classical(r.clone()).residual(v).is_zero()
}

/// All particular solutions the branch search finds, one per successful branch.
fn particular_solutions<'a>(r: &'a RatFunc, poles: &'a [PoleDatum]) -> impl Iterator<Item = RatFunc> + 'a {
    let inf = exponents_at_infinity(r).unwrap_or_default();
    let branches = 1usize << poles.len().min(MAX_CLUSTERS);
    (0..branches)
        .flat_map(move |mask| inf.clone().into_iter().map(move |c| (mask, c)))
        .filter_map(move |(mask, c_inf)| {
            let choice: Vec<Q> = poles
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let n = q(p.n.expect("checked") as i64);
                    let sign = if mask >> i & 1 == 0 { q(1) } else { q(-1) };
                    (q(1) + sign * n) / q(2)
                })
                .collect();
            let spent: Q = poles.iter().zip(&choice).map(|(p, a)| a * q(p.q.degree() as i64)).sum();
            let d = to_i64(&(c_inf - spent)).filter(|d| *d >= 0)?;
            let omega = log_derivative_sum(poles, &choice);
            let p = polynomial_solutions(&omega, r, d as usize).into_iter().next()?;
            let v0 = &omega + &RatFunc::from_uni(&p.derivative(), &p, Var::Z);
            is_solution(&v0, r).then_some(v0)
        })
}

/// A rational solution of `v' + v² = r`, checked before it is returned.
pub fn particular_rational_solution(r: &RatFunc, poles: &[PoleDatum]) -> Option<RatFunc> {
    if uni(r).is_none() || poles.iter().any(|p| p.n.is_none()) || poles.len() > MAX_CLUSTERS {
        return None;
    }
    particular_solutions(r, poles).next()
}

/// `exp(∫ b)` when it is rational: `b` must be a sum of `m q'/q` with integer `m`.
fn exp_integral(b: &RatFunc) -> Option<RatFunc> {
    let pf = partial_fractions(b)?;
    if !pf.poly_part.is_zero() {
        return None;
    }
    let (mut num, mut den) = (UniPoly::one(), UniPoly::one());
    for t in &pf.terms {
        if t.k != 1 {
            return None;
        }
        let dq = t.q.derivative();
        let m = t.a.lc() / dq.lc();
        if t.a != dq.scale(&m) {
            return None;
        }
        let m = to_i64(&m).filter(|m| m.abs() <= MAX_EXPONENT)?;
        let f = t.q.pow(m.unsigned_abs() as u32);
        if m > 0 {
            num = &num * &f;
        } else {
            den = &den * &f;
        }
    }
    Some(RatFunc::from_uni(&num, &den, Var::Z))
}

/// `∫ f` when it is rational.
fn rational_integral(f: &RatFunc) -> Option<RatFunc> {
    let h = hermite_integrate(f)?;
    h.log_free.then_some(h.rational_part)
}

fn lambda() -> RatFunc {
    RatFunc::var(Var::Lambda)
}

/// `v = v0 + 1/(N (λ + ∫ N⁻¹))` with `N = exp(∫ 2 v0)`.
pub fn general_from_particular(v0: &RatFunc, r: &RatFunc) -> Option<GeneralSolution> {
    let n = exp_integral(&v0.scale(&q(2)))?;
    let integral = rational_integral(&n.inv()?)?;
    let u = &n * &(&lambda() + &integral);
    let v = v0 + &u.inv()?;
    GeneralSolution::for_riccati(v, Stage::V, Provenance::Case1, &RiccatiOde::classical(r.clone()))
}

/// `t = E (λ + ∫ C/E)` with `E = exp(∫ B)`.
pub fn solve_linear_riccati(b: &RatFunc, c: &RatFunc) -> Option<GeneralSolution> {
    let e = exp_integral(b)?;
    let integral = rational_integral(&(c / &e))?;
    let t = &e * &(&lambda() + &integral);
    GeneralSolution::for_riccati(t, Stage::T, Provenance::Case2, &RiccatiOde::new(RatFunc::zero(), b.clone(), c.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalOutcome {
    Solved(GeneralSolution),
    NoRgs(NoRgs),
}

/// Decides `v' + v² = r` for `r ∈ ℚ(z)`.
pub fn solve_classical(r: &RatFunc) -> Result<ClassicalOutcome, SolverError> {
    if uni(r).is_none() {
        return Err(SolverError::NotUnivariate);
    }
    if r.is_zero() {
        let v = (&RatFunc::var(Var::Z) + &lambda()).inv().expect("nonzero");
        let sol = GeneralSolution::for_riccati(v, Stage::V, Provenance::Case1, &RiccatiOde::classical(r.clone()))
            .expect("1/(z + lambda) solves v' + v^2 = 0");
        return Ok(ClassicalOutcome::Solved(sol));
    }
    let poles = match analyze_poles(r) {
        Ok(p) => p,
        Err(e) => return Ok(ClassicalOutcome::NoRgs(e)),
    };
    if poles.len() > MAX_CLUSTERS {
        return Err(SolverError::TooManyClusters(poles.len()));
    }
    if let Err(e) = exponents_at_infinity(r) {
        return Ok(ClassicalOutcome::NoRgs(e));
    }
    let mut found = false;
    for v0 in particular_solutions(r, &poles) {
        found = true;
        if let Some(sol) = general_from_particular(&v0, r) {
            return Ok(ClassicalOutcome::Solved(sol));
        }
    }
    Ok(ClassicalOutcome::NoRgs(if found {
        no_rgs(Clause::NonRationalIntegral, "every particular solution leads to a non-rational exp or integral")
    } else {
        no_rgs(Clause::NoParticular, "no residue choice gives a polynomial solution")
    }))
}

/// Constant `t' = a t² + b t + c`: rational general solutions exist only for
/// `b² − 4ac = 0` (then `v' + v² = 0`) when `a ≠ 0`, and only for `b = 0`
/// when `a = 0`.
pub fn solve_constant_riccati(rc: &RiccatiOde) -> Option<Result<GeneralSolution, NoRgs>> {
    let (a, b, c) = (rc.a.constant_value()?, rc.b.constant_value()?, rc.c.constant_value()?);
    let z = RatFunc::var(Var::Z);
    let t = if a.is_zero() {
        if !b.is_zero() {
            return Some(Err(no_rgs(Clause::ConstantCase, format!("u' = {b} u + {c} needs exp({b} z)"))));
        }
        &z.scale(&c) + &lambda()
    } else {
        // t = −u/a, u = v + b/2 turns it into v' + v² = b²/4 − ac
        let r = &b * &b / q(4) - &a * &c;
        if !r.is_zero() {
            return Some(Err(no_rgs(Clause::ConstantCase, format!("v' + v^2 = {r} with a nonzero constant"))));
        }
        let v = (&z + &lambda()).inv().expect("nonzero");
        let u = &v + &RatFunc::constant(b * qf(1, 2));
        -&u.scale(&a.recip())
    };
    Some(GeneralSolution::for_riccati(t, Stage::T, Provenance::ConstantCoeff, rc).ok_or_else(|| {
        no_rgs(Clause::ConstantCase, "internal: constant-case family failed its check")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn poles_of_the_example_two_normal_form() {
        let poles = analyze_poles(&rf("-6/(z^2 + 2)^2")).unwrap();
        assert_eq!(poles.len(), 1);
        assert_eq!(poles[0].q, UniPoly::from_ints(&[2, 0, 1]));
        assert_eq!(poles[0].beta.as_rational(), Some(qf(3, 4)));
        assert_eq!(poles[0].n, Some(2));
        // the residues at ±i√2 are ±(3/8)α and cancel in the trace
        assert_eq!(poles[0].field.trace(&poles[0].gamma), q(0));
    }

    #[test]
    fn poles_two_over_z_squared() {
        let poles = analyze_poles(&rf("2/z^2")).unwrap();
        assert_eq!(poles[0].n, Some(3));
    }

    #[test]
    fn rejected_pole_structures() {
        assert_eq!(analyze_poles(&rf("1/z")).unwrap_err().clause, Clause::Degree);
        assert_eq!(analyze_poles(&rf("z")).unwrap_err().clause, Clause::Degree);
        assert_eq!(analyze_poles(&rf("1/z^3")).unwrap_err().clause, Clause::PoleOrder);
        assert_eq!(analyze_poles(&rf("1/z^2")).unwrap_err().clause, Clause::DoublePole);
        // a simple pole has beta = 0, so n = 1
        assert_eq!(analyze_poles(&rf("1/(z^2*(z - 1))")).unwrap_err().clause, Clause::DoublePole);
    }

    #[test]
    fn particular_solutions_found() {
        let r = rf("2/z^2");
        let v0 = particular_rational_solution(&r, &analyze_poles(&r).unwrap()).unwrap();
        assert_eq!(v0, rf("2/z"));
        let r = rf("-6/(z^2 + 2)^2");
        let v0 = particular_rational_solution(&r, &analyze_poles(&r).unwrap()).unwrap();
        assert!(is_solution(&v0, &r));
        // the lambda -> infinity member of the printed family
        assert!(is_solution(&rf("-z/(z^2 + 2) + 1/z"), &r));
        assert!(!is_solution(&rf("-z/(z^2 + 2)"), &r));
        assert_eq!(particular_rational_solution(&rf("z"), &[]), None);
    }

    #[test]
    fn polynomial_solution_spaces() {
        assert_eq!(polynomial_solutions(&rf("2/z"), &rf("2/z^2"), 0), vec![UniPoly::one()]);
        // ω = −1/z already solves, so only constants up to degree 2; z³ appears at degree 3
        let basis = polynomial_solutions(&rf("-1/z"), &rf("2/z^2"), 1);
        assert_eq!(basis, vec![UniPoly::one()]);
        assert_eq!(polynomial_solutions(&rf("-1/z"), &rf("2/z^2"), 3).len(), 2);
        assert!(polynomial_solutions(&RatFunc::zero(), &RatFunc::one(), 3).is_empty());
    }

    #[test]
    fn general_solutions() {
        let g = general_from_particular(&rf("2/z"), &rf("2/z^2")).unwrap();
        assert_eq!(g.expr(), &rf("2/z + 3/(3*lambda*z^4 - z)"));
        let g = general_from_particular(&RatFunc::zero(), &RatFunc::zero()).unwrap();
        assert_eq!(g.expr(), &rf("1/(z + lambda)"));
        let r = rf("-6/(z^2 + 2)^2");
        assert!(general_from_particular(&rf("2/(z*(z^2 + 2))"), &r).is_some());
    }

    #[test]
    fn linear_cases() {
        assert_eq!(solve_linear_riccati(&RatFunc::zero(), &rf("1/27")).unwrap().expr(), &rf("z/27 + lambda"));
        assert_eq!(solve_linear_riccati(&rf("1/z"), &RatFunc::zero()).unwrap().expr(), &rf("lambda*z"));
        assert!(solve_linear_riccati(&RatFunc::one(), &RatFunc::zero()).is_none());
        // ∫ 1/z is a logarithm
        assert!(solve_linear_riccati(&RatFunc::zero(), &rf("1/z")).is_none());
    }

    #[test]
    fn classical_outcomes() {
        let ClassicalOutcome::Solved(g) = solve_classical(&rf("-6/(z^2 + 2)^2")).unwrap() else { panic!() };
        assert_eq!(g.stage(), Stage::V);
        let ClassicalOutcome::NoRgs(e) = solve_classical(&rf("1/z")).unwrap() else { panic!() };
        assert_eq!(e.clause, Clause::Degree);
        // beta = 3/32 at ±i: 4 beta + 1 is not a square
        let ClassicalOutcome::NoRgs(e) = solve_classical(&rf("3/(16*(z^2 + 1))")).unwrap() else { panic!() };
        assert_eq!(e.clause, Clause::DoublePole);
    }

    #[test]
    fn constant_coefficients() {
        let ode = |a: i64, b: i64, c: i64| RiccatiOde::new(RatFunc::int(a), RatFunc::int(b), RatFunc::int(c));
        // u' + u² = 0
        assert_eq!(solve_constant_riccati(&ode(-1, 0, 0)).unwrap().unwrap().expr(), &rf("1/(z + lambda)"));
        assert!(solve_constant_riccati(&ode(0, 2, 5)).unwrap().is_err());
        assert_eq!(solve_constant_riccati(&ode(0, 0, 5)).unwrap().unwrap().expr(), &rf("5*z + lambda"));
        assert!(solve_constant_riccati(&ode(-1, 0, 3)).unwrap().is_err());
        assert!(solve_constant_riccati(&RiccatiOde::classical(rf("z"))).is_none());
    }
}
