//! From a parametrization to `t' = A t² + B t + C`, and from there to
//! `v' + v² = r`.

use thiserror::Error;

use super::RiccatiOde;
use crate::algebra::{MultiPoly, RatFunc, Var};
use crate::param::Parametrization;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error(
        "dt/dz is not a quadratic polynomial in t (degree {t_degree} in the numerator, t in the denominator: {t_in_denominator}); the equation has movable critical points"
    )]
    FuchsViolation { t_degree: u32, t_in_denominator: bool },
    #[error("back substitution divides by an identically zero expression")]
    DegenerateSolution,
    #[error("normal form failed its symbolic self-check")]
    ChainCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeadingCoeff {
    Pass,
    /// The coefficient of the highest power of wp, which involves w.
    Fail(MultiPoly),
}

/// The coefficient of `wp^m` must not involve `w`.
pub fn leading_coeff_check(big_f: &MultiPoly) -> LeadingCoeff {
    let a0 = big_f.leading_coeff_in(Var::Wp);
    if a0.involves(Var::W) {
        LeadingCoeff::Fail(a0)
    } else {
        LeadingCoeff::Pass
    }
}

/// `dt/dz` along solutions `w = r1(t(z), z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TParamOde {
    pub rhs: RatFunc,
}

pub fn derive_param_ode(p: &Parametrization) -> TParamOde {
    let num = p.r2() - &p.r1().derivative(Var::Z);
    let den = p.r1().derivative(Var::T);
    TParamOde { rhs: &num / &den }
}

pub fn cast_to_riccati(o: &TParamOde) -> Result<RiccatiOde, ReductionError> {
    let (num, den) = (o.rhs.num(), o.rhs.den());
    let t_degree = num.degree(Var::T);
    let t_in_denominator = den.involves(Var::T);
    if t_degree > 2 || t_in_denominator {
        return Err(ReductionError::FuchsViolation { t_degree, t_in_denominator });
    }
    let coeff = |k| RatFunc::new(num.coeff_in(Var::T, k), den.clone());
    Ok(RiccatiOde::new(coeff(2), coeff(1), coeff(0)))
}

/// One change of dependent variable, read from the outside in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `w = r1(t, z)`
    W { r1: RatFunc },
    /// `t = −u / A`
    TFromU { a: RatFunc },
    /// `u = v + β`
    UFromV { beta: RatFunc },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubstitutionChain {
    steps: Vec<Step>,
    /// `r` of the normal form, when the chain ends in `v`.
    target: Option<RatFunc>,
}

impl SubstitutionChain {
    pub fn identity() -> Self {
        SubstitutionChain::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn target(&self) -> Option<&RatFunc> {
        self.target.as_ref()
    }

    /// Puts `w = r1(t, z)` in front.
    pub fn with_parametrization(mut self, r1: RatFunc) -> Self {
        self.steps.insert(0, Step::W { r1 });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Classical { r: RatFunc, chain: SubstitutionChain },
    /// `A ≡ 0`: `t' = B t + C`.
    Linear { b: RatFunc, c: RatFunc },
}

/// For a fresh function `v` (symbol `v`, derivative symbol `y`), checks that
/// pushing `v' + v² − r` through the chain gives `t' − (A t² + B t + C)`
/// up to the factor `−1/A`.
pub fn chain_identity(rc: &RiccatiOde, chain: &SubstitutionChain) -> bool {
    let Some(r) = chain.target() else {
        return false;
    };
    let (v, dv) = (RatFunc::var(Var::V), RatFunc::var(Var::Y));
    // value and z-derivative of the current dependent variable
    let (mut x, mut dx) = (v.clone(), dv.clone());
    for step in chain.steps().iter().rev() {
        match step {
            Step::UFromV { beta } => {
                x = &x + beta;
                dx = &dx + &beta.derivative(Var::Z);
            }
            Step::TFromU { a } => {
                let Some(ia) = a.inv() else { return false };
                let da = a.derivative(Var::Z);
                let nx = -&(&x * &ia);
                dx = &(&-&dx * &ia) + &(&(&x * &da) * &(&ia * &ia));
                x = nx;
            }
            Step::W { .. } => return false,
        }
    }
    let rhs = &(&(&rc.a * &(&x * &x)) + &(&rc.b * &x)) + &rc.c;
    let e_t = &dx - &rhs;
    let e_v = &(&dv + &(&v * &v)) - r;
    (&(&e_t * &-&rc.a) - &e_v).is_zero()
}

pub fn normalize_riccati(rc: &RiccatiOde) -> Result<Normalized, ReductionError> {
    let Some(ia) = rc.a.inv() else {
        return Ok(Normalized::Linear { b: rc.b.clone(), c: rc.c.clone() });
    };
    let bt = &rc.b + &(&rc.a.derivative(Var::Z) * &ia);
    let beta = bt.scale(&crate::algebra::rational::qf(1, 2));
    let r = &(&(&beta * &beta) - &beta.derivative(Var::Z)) - &(&rc.a * &rc.c);
    let chain = SubstitutionChain {
        steps: vec![Step::TFromU { a: rc.a.clone() }, Step::UFromV { beta }],
        target: Some(r.clone()),
    };
    if !chain_identity(rc, &chain) {
        return Err(ReductionError::ChainCheck);
    }
    Ok(Normalized::Classical { r, chain })
}

fn substitute_checked(f: &RatFunc, var: Var, value: &RatFunc) -> Result<RatFunc, ReductionError> {
    if RatFunc::from(f.den().clone()).substitute(var, value).is_zero() {
        return Err(ReductionError::DegenerateSolution);
    }
    Ok(f.substitute(var, value))
}

/// Replays the chain from the inside out on a solution of its innermost
/// equation.
pub fn back_substitute(chain: &SubstitutionChain, inner: &RatFunc) -> Result<RatFunc, ReductionError> {
    let mut x = inner.clone();
    for step in chain.steps().iter().rev() {
        x = match step {
            Step::UFromV { beta } => &x + beta,
            Step::TFromU { a } => -&(&x / a),
            Step::W { r1 } => substitute_checked(r1, Var::T, &x)?,
        };
    }
    Ok(x)
}
