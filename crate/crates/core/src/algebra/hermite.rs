//! Hermite reduction of rational functions in `z`.
//!
//! Splits `∫ A/D` into a rational part plus `∫ a/d` with `d` squarefree. The
//! integral is rational exactly when the leftover `a` vanishes, which is all
//! the solver needs; the logarithmic part is never built.

use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::var::Var;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteResult {
    pub rational_part: RatFunc,
    /// Proper fraction with squarefree denominator left to integrate.
    pub remainder: RatFunc,
    pub log_free: bool,
}

/// Linear-cost variant (Mack) on a proper fraction `a/d`.
pub fn hermite_reduce(a: &UniPoly, d: &UniPoly) -> (RatFunc, UniPoly, UniPoly) {
    let mut g = RatFunc::zero();
    let mut a = a.clone();
    let mut dm = d.gcd(&d.derivative());
    let ds = d.div_exact(&dm).expect("gcd divides");
    while dm.degree() > 0 {
        let dm2 = dm.gcd(&dm.derivative());
        let dms = dm.div_exact(&dm2).expect("gcd divides");
        let lhs = -&(&ds * &dm.derivative()).div_exact(&dm).expect("D* D-' / D- is polynomial");
        let (b, c) = UniPoly::solve_bezout(&lhs, &dms, &a).expect("coprime by squarefreeness");
        let corr = (&b.derivative() * &ds).div_exact(&dms).expect("D- star divides D*");
        a = &c - &corr;
        g = &g + &RatFunc::from_uni(&b, &dm, Var::Z);
        dm = dm2;
    }
    (g, a, ds)
}

pub fn hermite_integrate(r: &RatFunc) -> Option<HermiteResult> {
    let (n, d) = r.to_uni(Var::Z)?;
    let (p, rem) = n.divrem(&d);
    let poly = RatFunc::from_uni(&p.integral(), &UniPoly::one(), Var::Z);
    if rem.is_zero() {
        return Some(HermiteResult { rational_part: poly, remainder: RatFunc::zero(), log_free: true });
    }
    let (g, a, ds) = hermite_reduce(&rem, &d);
    let remainder = RatFunc::from_uni(&a, &ds, Var::Z);
    Some(HermiteResult {
        rational_part: &poly + &g,
        log_free: a.is_zero(),
        remainder,
    })
}
