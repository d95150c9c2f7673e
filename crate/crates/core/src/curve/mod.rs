//! Genus of F(z, w, wp) = 0 as a curve in (w, wp), by specialization of z.

pub mod delta;
pub mod singular;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::gcd::gcd;
use crate::algebra::rational::Q;
use crate::algebra::{MultiPoly, Var};

pub use singular::{singular_points, SingularCluster};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve polynomial is constant")]
    Constant,
    #[error("curve polynomial may only involve x and y")]
    Variables,
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,
    #[error("degenerate specialization at z = {0}")]
    DegenerateSample(Q),
    #[error("singularities exceed the genus budget: the curve is probably reducible")]
    ReducibleSuspected,
    #[error("blowup recursion exceeded depth {}", delta::MAX_BLOWUP_DEPTH)]
    BlowupDepthExceeded,
    #[error("internal: {0}")]
    Internal(&'static str),
}

/// A squarefree plane curve f(x, y) = 0 over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    f: MultiPoly,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(f: MultiPoly) -> Result<Self, CurveError> {
        if f.vars().iter().any(|v| *v != Var::X && *v != Var::Y) {
            return Err(CurveError::Variables);
        }
        if f.is_constant() {
            return Err(CurveError::Constant);
        }
        let g = gcd(&f, &gcd(&f.derivative(Var::X), &f.derivative(Var::Y)));
        if !g.is_constant() {
            return Err(CurveError::NotSquarefree);
        }
        let degree = f.total_degree();
        Ok(PlaneCurve { f, degree })
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// The curve `F(z0, x, y) = 0`, with `w ↦ x` and `wp ↦ y`.
pub fn specialize(big_f: &MultiPoly, z0: &Q) -> Result<PlaneCurve, CurveError> {
    let f = big_f.eval_var(Var::Z, z0).rename(&[(Var::W, Var::X), (Var::Wp, Var::Y)]);
    if f.total_degree() != big_f.degree_in(&[Var::W, Var::Wp]) {
        return Err(CurveError::DegenerateSample(z0.clone()));
    }
    PlaneCurve::new(f).map_err(|e| match e {
        CurveError::NotSquarefree | CurveError::Constant => CurveError::DegenerateSample(z0.clone()),
        other => other,
    })
}

/// Genus and the singular data it was computed from.
pub fn genus_with_points(c: &PlaneCurve) -> Result<(u64, Vec<SingularCluster>), CurveError> {
    let d = c.degree() as i64;
    let pts = singular_points(c)?;
    let spent: i64 = pts.iter().map(|p| p.size() as i64 * p.delta as i64).sum();
    let g = (d - 1) * (d - 2) / 2 - spent;
    if g < 0 {
        return Err(CurveError::ReducibleSuspected);
    }
    Ok((g as u64, pts))
}

pub fn genus_plane(c: &PlaneCurve) -> Result<u64, CurveError> {
    genus_with_points(c).map(|(g, _)| g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleOutcome {
    Genus(u64),
    Degenerate,
    ReducibleSuspected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSample {
    pub z0: Q,
    pub outcome: SampleOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Consensus {
    Genus(u64),
    Inconsistent,
    ReducibleSuspected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub samples: Vec<GenusSample>,
    pub consensus: Consensus,
}

impl GenusReport {
    pub fn genus(&self) -> Option<u64> {
        match self.consensus {
            Consensus::Genus(g) => Some(g),
            _ => None,
        }
    }

    pub fn summary(&self) -> String {
        let vals: Vec<String> = self
            .samples
            .iter()
            .map(|s| match &s.outcome {
                SampleOutcome::Genus(g) => format!("z={}: {}", s.z0, g),
                SampleOutcome::Degenerate => format!("z={}: degenerate", s.z0),
                SampleOutcome::ReducibleSuspected => format!("z={}: reducible?", s.z0),
            })
            .collect();
        vals.join(", ")
    }
}

const INITIAL_BOUND: i64 = 16;

/// Samples `n` non-degenerate specializations (at most `3n` tries) at
/// seeded integer points and takes a strict-majority vote.
pub fn algebraic_genus(big_f: &MultiPoly, n: usize, seed: u64) -> Result<GenusReport, CurveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = INITIAL_BOUND;
    let mut samples: Vec<GenusSample> = Vec::new();
    let mut cache: Vec<(MultiPoly, SampleOutcome)> = Vec::new();
    let mut good = 0;
    while good < n && samples.len() < 3 * n.max(1) {
        let z0 = Q::from_integer(rng.gen_range(-bound..=bound).into());
        if samples.iter().any(|s| s.z0 == z0) {
            bound *= 2;
            continue;
        }
        let outcome = match specialize(big_f, &z0) {
            Err(CurveError::DegenerateSample(_)) => SampleOutcome::Degenerate,
            Err(e) => return Err(e),
            Ok(c) => {
                match cache.iter().find(|(f, _)| f == c.f()) {
                    Some((_, o)) => o.clone(),
                    None => {
                        let o = match genus_plane(&c) {
                            Ok(g) => SampleOutcome::Genus(g),
                            Err(CurveError::ReducibleSuspected) => SampleOutcome::ReducibleSuspected,
                            Err(e) => return Err(e),
                        };
                        cache.push((c.f().clone(), o.clone()));
                        o
                    }
                }
            }
        };
        if outcome == SampleOutcome::Degenerate {
            bound *= 2;
        } else {
            good += 1;
        }
        samples.push(GenusSample { z0, outcome });
    }
    let consensus = if samples.iter().any(|s| s.outcome == SampleOutcome::ReducibleSuspected) {
        Consensus::ReducibleSuspected
    } else {
        let vals: Vec<u64> = samples
            .iter()
            .filter_map(|s| match s.outcome {
                SampleOutcome::Genus(g) => Some(g),
                _ => None,
            })
            .collect();
        vals.iter()
            .copied()
            .find(|g| 2 * vals.iter().filter(|h| *h == g).count() > vals.len())
            .map_or(Consensus::Inconsistent, Consensus::Genus)
    };
    Ok(GenusReport { samples, consensus })
}
