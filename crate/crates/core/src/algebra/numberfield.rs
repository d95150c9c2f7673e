//! Simple number fields ℚ(α) = ℚ[z]/(q) with q irreducible.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::is_irreducible;
use super::rational::Q;
use super::unipoly::UniPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumberFieldError {
    #[error("defining polynomial must have positive degree")]
    Constant,
    #[error("defining polynomial {0} is reducible over Q")]
    Reducible(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: UniPoly,
}

/// Element of a [`NumberField`], reduced modulo the minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfElem(UniPoly);

impl NfElem {
    pub fn poly(&self) -> &UniPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.0.is_constant().then(|| self.0.coeff(0))
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_string();
        write!(f, "{}", s.replace('z', "alpha"))
    }
}

impl NumberField {
    /// ℚ(α) for a root α of `q`; `q` is made monic and must be irreducible.
    pub fn new(q: &UniPoly) -> Result<Self, NumberFieldError> {
        if q.degree() == 0 {
            return Err(NumberFieldError::Constant);
        }
        if !is_irreducible(q) {
            return Err(NumberFieldError::Reducible(q.to_string()));
        }
        Ok(NumberField { modulus: q.monic() })
    }

    pub fn minimal_poly(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn elem(&self, p: &UniPoly) -> NfElem {
        NfElem(p.rem(&self.modulus))
    }

    pub fn from_q(&self, c: Q) -> NfElem {
        NfElem(UniPoly::constant(c))
    }

    pub fn zero(&self) -> NfElem {
        NfElem(UniPoly::zero())
    }

    pub fn one(&self) -> NfElem {
        NfElem(UniPoly::one())
    }

    pub fn generator(&self) -> NfElem {
        self.elem(&UniPoly::x())
    }

    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(-&a.0)
    }

    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.elem(&(&a.0 * &b.0))
    }

    pub fn scale(&self, a: &NfElem, c: &Q) -> NfElem {
        NfElem(a.0.scale(c))
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.0.xgcd(&self.modulus);
        debug_assert!(g == UniPoly::one());
        Some(self.elem(&s))
    }

    pub fn div(&self, a: &NfElem, b: &NfElem) -> Option<NfElem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Value at α of a polynomial with rational coefficients.
    pub fn eval(&self, p: &UniPoly) -> NfElem {
        self.elem(p)
    }

    /// Value at α of a polynomial with coefficients in the field.
    pub fn eval_poly(&self, p: &[NfElem], x: &NfElem) -> NfElem {
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    pub fn lift_poly(&self, p: &UniPoly) -> Vec<NfElem> {
        p.coeffs().iter().map(|c| self.from_q(c.clone())).collect()
    }

    pub fn pmul(&self, a: &[NfElem], b: &[NfElem]) -> Vec<NfElem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        out
    }

    /// `p(z + c)`.
    pub fn taylor_shift(&self, p: &[NfElem], c: &NfElem) -> Vec<NfElem> {
        let mut out: Vec<NfElem> = Vec::new();
        let lin = [c.clone(), self.one()];
        for coef in p.iter().rev() {
            out = self.pmul(&out, &lin);
            if out.is_empty() {
                out.push(coef.clone());
            } else {
                out[0] = self.add(&out[0], coef);
            }
        }
        out
    }

    /// Quotient of `p` by `z - c` (synthetic division); the remainder is dropped.
    pub fn deflate(&self, p: &[NfElem], c: &NfElem) -> Vec<NfElem> {
        if p.len() <= 1 {
            return Vec::new();
        }
        let n = p.len() - 1;
        let mut out = vec![self.zero(); n];
        let mut carry = self.zero();
        for k in (0..n).rev() {
            carry = self.add(&p[k + 1], &self.mul(&carry, c));
            out[k] = carry.clone();
        }
        out
    }

    /// First `n` coefficients of the power series `num/den` (den(0) ≠ 0).
    pub fn series_div(&self, num: &[NfElem], den: &[NfElem], n: usize) -> Option<Vec<NfElem>> {
        let d0 = self.inv(den.first()?)?;
        let mut out: Vec<NfElem> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num.get(k).cloned().unwrap_or_else(|| self.zero());
            for j in 1..=k.min(den.len().saturating_sub(1)) {
                acc = self.sub(&acc, &self.mul(&den[j], &out[k - j]));
            }
            out.push(self.mul(&acc, &d0));
        }
        Some(out)
    }

    pub fn is_rational(&self, a: &NfElem) -> bool {
        a.as_rational().is_some()
    }

    pub fn trace(&self, a: &NfElem) -> Q {
        // sum of conjugates: trace of multiplication-by-a on the power basis
        let n = self.degree();
        let mut t = Q::zero();
        let mut basis = UniPoly::one();
        for i in 0..n {
            let img = self.elem(&(&a.0 * &basis));
            t += img.0.coeff(i);
            basis = basis.shift_up(1);
        }
        t
    }

    pub fn is_one(&self, a: &NfElem) -> bool {
        a.0.is_constant() && a.0.coeff(0).is_one()
    }
}
