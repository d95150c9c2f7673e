//! Riccati reduction of parametrized equations and rational solutions of
//! the resulting Riccati equations.

pub mod reduce;
pub mod solve;

use std::fmt;

use crate::algebra::ratfunc::vanishes_under;
use crate::algebra::{MultiPoly, RatFunc, Var};

pub use reduce::{
    back_substitute, cast_to_riccati, chain_identity, derive_param_ode, leading_coeff_check, normalize_riccati,
    LeadingCoeff, Normalized, ReductionError, Step, SubstitutionChain, TParamOde,
};
pub use solve::{
    analyze_poles, general_from_particular, particular_rational_solution, polynomial_solutions, solve_classical,
    solve_constant_riccati, solve_linear_riccati, Clause, ClassicalOutcome, NoRgs, PoleDatum, SolverError,
    MAX_CLUSTERS,
};

/// `t' = A t² + B t + C` with coefficients in ℚ(z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiccatiOde {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
}

impl RiccatiOde {
    pub fn new(a: RatFunc, b: RatFunc, c: RatFunc) -> Self {
        RiccatiOde { a, b, c }
    }

    /// `v' + v² = r`, written as `v' = −v² + r`.
    pub fn classical(r: RatFunc) -> Self {
        RiccatiOde { a: RatFunc::int(-1), b: RatFunc::zero(), c: r }
    }

    pub fn is_constant(&self) -> bool {
        [&self.a, &self.b, &self.c].iter().all(|x| x.constant_value().is_some())
    }

    /// `y' − (A y² + B y + C)`, with `'` = d/dz.
    pub fn residual(&self, y: &RatFunc) -> RatFunc {
        let rhs = &(&(&self.a * &(y * y)) + &(&self.b * y)) + &self.c;
        &y.derivative(Var::Z) - &rhs
    }
}

/// `F(z, w, ∂w/∂z)`.
pub fn ode_residual(big_f: &MultiPoly, w: &RatFunc) -> RatFunc {
    let wp = w.derivative(Var::Z);
    RatFunc::from(big_f.clone()).substitute_many(&[(Var::W, w.clone()), (Var::Wp, wp)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    V,
    T,
    U,
    W,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::V => "v",
            Stage::T => "t",
            Stage::U => "u",
            Stage::W => "w",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ConstantCoeff,
    Case1,
    Case2,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ConstantCoeff => "constant_coeff",
            Provenance::Case1 => "case1",
            Provenance::Case2 => "case2",
        })
    }
}

/// A one-parameter family in `(z, λ)` that satisfies its stage equation;
/// both properties are checked when it is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSolution {
    expr: RatFunc,
    stage: Stage,
    provenance: Provenance,
}

fn is_family(expr: &RatFunc) -> bool {
    expr.vars().iter().all(|v| *v == Var::Z || *v == Var::Lambda) && !expr.derivative(Var::Lambda).is_zero()
}

impl GeneralSolution {
    pub fn for_riccati(expr: RatFunc, stage: Stage, provenance: Provenance, ode: &RiccatiOde) -> Option<Self> {
        (is_family(&expr) && ode.residual(&expr).is_zero()).then_some(GeneralSolution { expr, stage, provenance })
    }

    pub fn for_equation(expr: RatFunc, provenance: Provenance, big_f: &MultiPoly) -> Option<Self> {
        let wp = expr.derivative(Var::Z);
        (is_family(&expr) && vanishes_under(big_f, &[(Var::W, expr.clone()), (Var::Wp, wp)])).then_some(GeneralSolution {
            expr,
            stage: Stage::W,
            provenance,
        })
    }

    /// A family that has not been checked against its equation.
    pub(crate) fn unverified(expr: RatFunc, provenance: Provenance) -> Self {
        GeneralSolution { expr, stage: Stage::W, provenance }
    }

    pub fn expr(&self) -> &RatFunc {
        &self.expr
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}
