//! The full solver: genus, parametrization, Riccati reduction, solution,
//! back substitution and verification.

use std::fmt;

use crate::algebra::gcd::{content, gcd};
use crate::algebra::{MultiPoly, RatFunc, Var};
use crate::curve::{algebraic_genus, Consensus, CurveError, GenusReport};
use crate::expr::render;
use crate::expr::report::{ReportJson, RiccatiJson};
use crate::expr::Problem;
use crate::param::{auto_parametrize, ParamError, ParamSource, Parametrization};
use crate::riccati::{
    back_substitute, cast_to_riccati, derive_param_ode, leading_coeff_check, normalize_riccati, ode_residual,
    solve_classical, solve_constant_riccati, solve_linear_riccati, ClassicalOutcome, GeneralSolution,
    LeadingCoeff, Normalized, ReductionError, RiccatiOde, SolverError, SubstitutionChain,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Solved,
    NoRationalGeneralSolution,
    Inconclusive,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Solved => "solved",
            Status::NoRationalGeneralSolution => "no_rational_general_solution",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineResult {
    pub status: Status,
    pub genus: Option<GenusReport>,
    pub riccati: Option<RiccatiOde>,
    pub normal_r: Option<RatFunc>,
    /// Family `w(z, λ)`.
    pub solution: Option<GeneralSolution>,
    pub verified: bool,
    pub reason: String,
    /// An internal limit (blowup depth, pole clusters) stopped the run.
    pub resource_cap: bool,
}

impl PipelineResult {
    fn new() -> Self {
        PipelineResult {
            status: Status::Inconclusive,
            genus: None,
            riccati: None,
            normal_r: None,
            solution: None,
            verified: false,
            reason: String::new(),
            resource_cap: false,
        }
    }

    fn finish(mut self, status: Status, reason: impl Into<String>) -> Self {
        self.status = status;
        self.reason = reason.into();
        self
    }

    /// CLI exit code.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Solved => 0,
            Status::NoRationalGeneralSolution => 1,
            Status::Inconclusive if self.resource_cap => 4,
            Status::Inconclusive => 2,
            Status::Error => 3,
        }
    }

    pub fn to_report(&self) -> ReportJson {
        ReportJson {
            status: self.status.to_string(),
            genus: self.genus.as_ref().and_then(GenusReport::genus).map(|g| g as i64),
            riccati: self.riccati.as_ref().map(|rc| RiccatiJson {
                A: render(&rc.a),
                B: render(&rc.b),
                C: render(&rc.c),
            }),
            normal_r: self.normal_r.as_ref().map(render),
            solution: self.solution.as_ref().map(|s| render(s.expr())),
            verified: self.verified,
            reason: self.reason.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub samples: usize,
    pub seed: u64,
    /// Skip the final exact check of the family against F.
    pub no_verify: bool,
}

impl SolveOptions {
    pub fn from_problem(p: &Problem) -> Self {
        SolveOptions { samples: p.samples, seed: p.seed, no_verify: false }
    }
}

/// `F(z, w, w_z) ≡ 0` and `∂w/∂λ ≢ 0`.
pub fn verify_general_solution(big_f: &MultiPoly, w: &RatFunc) -> bool {
    let vars_ok = w.vars().iter().all(|v| *v == Var::Z || *v == Var::Lambda);
    vars_ok && !w.derivative(Var::Lambda).is_zero() && ode_residual(big_f, w).is_zero()
}

/// Removes factors of `F` that only involve `z`.
fn strip_z_content(f: &MultiPoly) -> MultiPoly {
    let c = content(&content(f, Var::Wp), Var::W);
    if c.is_constant() {
        f.clone()
    } else {
        f.div_exact(&c).expect("content divides")
    }
}

fn is_squarefree(f: &MultiPoly) -> bool {
    let g = gcd(f, &gcd(&f.derivative(Var::W), &f.derivative(Var::Wp)));
    !g.involves(Var::W) && !g.involves(Var::Wp)
}

pub fn solve_pipeline(p: &Problem) -> PipelineResult {
    solve_with(p, SolveOptions::from_problem(p))
}

pub fn solve_with(p: &Problem, opts: SolveOptions) -> PipelineResult {
    let mut res = PipelineResult::new();
    let big_f = strip_z_content(&p.equation);

    // step 1 surrogate
    if !is_squarefree(&big_f) {
        return res.finish(Status::Error, "F has a repeated factor in (w, wp); supply its squarefree part");
    }

    // step 2
    let report = match algebraic_genus(&big_f, opts.samples, opts.seed) {
        Ok(r) => r,
        Err(CurveError::BlowupDepthExceeded) => {
            res.resource_cap = true;
            return res.finish(Status::Inconclusive, CurveError::BlowupDepthExceeded.to_string());
        }
        Err(e) => return res.finish(Status::Error, format!("genus computation failed: {e}")),
    };
    let consensus = report.consensus.clone();
    let summary = report.summary();
    res.genus = Some(report);
    match consensus {
        Consensus::Genus(0) => {}
        Consensus::Genus(g) => {
            return res.finish(
                Status::NoRationalGeneralSolution,
                format!("algebraic genus is {g}, not 0 (samples: {summary})"),
            )
        }
        Consensus::Inconsistent => {
            return res.finish(Status::Inconclusive, format!("genus samples disagree ({summary})"))
        }
        Consensus::ReducibleSuspected => {
            return res.finish(
                Status::Inconclusive,
                format!("F(z, w, wp) appears reducible; factor it first (samples: {summary})"),
            )
        }
    }

    // step 3 surrogate
    if let LeadingCoeff::Fail(a0) = leading_coeff_check(&big_f) {
        return res.finish(
            Status::NoRationalGeneralSolution,
            format!(
                "Fuchs condition (1) fails: the leading coefficient in wp is {}, which involves w",
                crate::expr::render_poly(&a0)
            ),
        );
    }

    // step 4
    let param = match &p.parametrization {
        Some((r1, r2)) => match Parametrization::new(&big_f, r1.clone(), r2.clone(), ParamSource::UserSupplied) {
            Ok(par) => par,
            Err(e) => return res.finish(Status::Error, format!("supplied parametrization rejected: {e}")),
        },
        None => match auto_parametrize(&big_f) {
            Ok(par) => par,
            Err(ParamError::NotSupported(why)) => {
                return res.finish(
                    Status::Inconclusive,
                    format!("{why}; supply param_w and param_wp in the problem file"),
                )
            }
            Err(e) => return res.finish(Status::Error, format!("built-in parametrization failed: {e}")),
        },
    };

    // step 5
    let rc = match cast_to_riccati(&derive_param_ode(&param)) {
        Ok(rc) => rc,
        Err(e @ ReductionError::FuchsViolation { .. }) => {
            return res.finish(
                Status::NoRationalGeneralSolution,
                format!("{e} (shape test standing in for Fuchs conditions (2) and (3))"),
            )
        }
        Err(e) => return res.finish(Status::Error, e.to_string()),
    };
    res.riccati = Some(rc.clone());

    // step 6
    let constant = !big_f.involves(Var::Z) && rc.is_constant();
    let normalized = match normalize_riccati(&rc) {
        Ok(n) => n,
        Err(e) => return res.finish(Status::Error, e.to_string()),
    };
    let w_chain = |chain: SubstitutionChain| chain.with_parametrization(param.r1().clone());
    let (inner, chain) = match normalized {
        Normalized::Linear { b, c } => {
            let found = if constant {
                solve_constant_riccati(&rc).expect("constant coefficients").ok()
            } else {
                solve_linear_riccati(&b, &c)
            };
            match found {
                Some(t) => (t, w_chain(SubstitutionChain::identity())),
                None => {
                    let why = if constant {
                        "constant-coefficient linear case t' = b t + c with b != 0 has only exp(b z) solutions"
                    } else {
                        "linear case: exp(int B) or int C/exp(int B) is not rational"
                    };
                    return res.finish(Status::NoRationalGeneralSolution, why);
                }
            }
        }
        Normalized::Classical { r, chain } => {
            res.normal_r = Some(r.clone());
            if constant {
                match solve_constant_riccati(&rc).expect("constant coefficients") {
                    Ok(t) => (t, w_chain(SubstitutionChain::identity())),
                    Err(e) => return res.finish(Status::NoRationalGeneralSolution, e.to_string()),
                }
            } else {
                match solve_classical(&r) {
                    Ok(ClassicalOutcome::Solved(v)) => (v, w_chain(chain)),
                    Ok(ClassicalOutcome::NoRgs(e)) => {
                        return res.finish(Status::NoRationalGeneralSolution, format!("v' + v^2 = r {e}"))
                    }
                    Err(e @ SolverError::TooManyClusters(_)) => {
                        res.resource_cap = true;
                        return res.finish(Status::Inconclusive, e.to_string());
                    }
                    Err(e) => return res.finish(Status::Error, e.to_string()),
                }
            }
        }
    };
    let w = match back_substitute(&chain, inner.expr()) {
        Ok(w) => w,
        Err(e) => return res.finish(Status::Inconclusive, e.to_string()),
    };
    let provenance = inner.provenance();

    if opts.no_verify {
        res.solution = Some(GeneralSolution::unverified(w, provenance));
        return res.finish(Status::Inconclusive, "family computed but not verified (--no-verify)");
    }
    match GeneralSolution::for_equation(w, provenance, &big_f) {
        Some(sol) if verify_general_solution(&p.equation, sol.expr()) => {
            res.solution = Some(sol);
            res.verified = true;
            let how = format!(
                "{} parametrization, {} solution of the {} equation",
                param.source(),
                inner.provenance(),
                inner.stage()
            );
            res.finish(Status::Solved, how)
        }
        _ => res.finish(Status::Error, "internal: back-substituted family does not satisfy F"),
    }
}
