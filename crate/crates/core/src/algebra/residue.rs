//! Laurent coefficients of a rational function at the roots of an
//! irreducible factor, computed once for the whole conjugate cluster.

use thiserror::Error;

use super::numberfield::{NfElem, NumberField, NumberFieldError};
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::var::Var;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResidueError {
    #[error("not a rational function of z")]
    NotUnivariate,
    #[error("{0} does not divide the denominator")]
    NotAPole(String),
    #[error(transparent)]
    Field(#[from] NumberFieldError),
}

/// Multiplicity of `q` in `d`.
pub fn multiplicity(d: &UniPoly, q: &UniPoly) -> usize {
    let mut m = 0;
    let mut d = d.clone();
    while let Some(next) = d.div_exact(q) {
        d = next;
        m += 1;
    }
    m
}

/// Coefficient of `(z - α)^(-k)` in the Laurent expansion of `r` at a root
/// `α` of `q`, as an element of ℚ(α).
pub fn extension_residue(r: &RatFunc, q: &UniPoly, k: usize) -> Result<(NumberField, NfElem), ResidueError> {
    let (n, d) = r.to_uni(Var::Z).ok_or(ResidueError::NotUnivariate)?;
    let field = NumberField::new(q)?;
    let qm = field.minimal_poly().clone();
    let m = multiplicity(&d, &qm);
    if m == 0 {
        return Err(ResidueError::NotAPole(qm.to_string()));
    }
    if k > m || k == 0 {
        return Ok((field.clone(), field.zero()));
    }
    // r (z-α)^m = n / (q̃^m h) with q = (z-α) q̃ and d = q^m h
    let alpha = field.generator();
    let h = d.div_exact(&qm.pow(m as u32)).expect("multiplicity");
    let qt = field.deflate(&field.lift_poly(&qm), &alpha);
    let mut den = field.lift_poly(&h);
    for _ in 0..m {
        den = field.pmul(&den, &qt);
    }
    let num = field.taylor_shift(&field.lift_poly(&n), &alpha);
    let den = field.taylor_shift(&den, &alpha);
    let order = m - k;
    let series = field
        .series_div(&num, &den, order + 1)
        .expect("cofactor is a unit at the root");
    let c = series[order].clone();
    Ok((field, c))
}
