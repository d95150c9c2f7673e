//! Full partial-fraction decomposition over the irreducible factors of ℚ[z].

use super::factor::factor;
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::var::Var;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfTerm {
    /// Monic irreducible factor of the denominator.
    pub q: UniPoly,
    pub k: usize,
    /// Numerator, of degree below `deg q`.
    pub a: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub poly_part: UniPoly,
    pub terms: Vec<PfTerm>,
}

impl PartialFractions {
    pub fn reassemble(&self) -> RatFunc {
        let mut acc = RatFunc::from_uni(&self.poly_part, &UniPoly::one(), Var::Z);
        for t in &self.terms {
            acc = &acc + &RatFunc::from_uni(&t.a, &t.q.pow(t.k as u32), Var::Z);
        }
        acc
    }

    /// Terms grouped by factor: `(q, highest k)`.
    pub fn pole_orders(&self) -> Vec<(UniPoly, usize)> {
        let mut out: Vec<(UniPoly, usize)> = Vec::new();
        for t in &self.terms {
            match out.iter_mut().find(|(q, _)| *q == t.q) {
                Some(e) => e.1 = e.1.max(t.k),
                None => out.push((t.q.clone(), t.k)),
            }
        }
        out
    }

    pub fn numerator(&self, q: &UniPoly, k: usize) -> UniPoly {
        self.terms
            .iter()
            .find(|t| t.q == *q && t.k == k)
            .map(|t| t.a.clone())
            .unwrap_or_else(UniPoly::zero)
    }
}

/// Decomposes `num/den` (den ≠ 0).
pub fn decompose(num: &UniPoly, den: &UniPoly) -> PartialFractions {
    let (poly_part, rem) = num.divrem(den);
    let mut terms = Vec::new();
    if rem.is_zero() {
        return PartialFractions { poly_part, terms };
    }
    let fac = factor(den);
    let lc = fac.content.clone();
    for (qj, e) in &fac.factors {
        let pj = qj.pow(*e as u32);
        let cof = den.div_exact(&pj).expect("factor divides").scale(&(lc.recip()));
        // rem/den = (rem/lc) / (pj * cof); numerator over pj is rem/lc * cof^{-1} mod pj
        let (g, s, _) = cof.xgcd(&pj);
        debug_assert!(g.degree() == 0);
        let mut aj = (&rem.scale(&lc.recip()) * &s).rem(&pj);
        // q-adic expansion aj = sum a_i q^i gives a_i / q^(e - i)
        for i in 0..*e {
            let (quot, digit) = aj.divrem(qj);
            if !digit.is_zero() {
                terms.push(PfTerm { q: qj.clone(), k: e - i, a: digit });
            }
            aj = quot;
        }
    }
    terms.sort_by(|a, b| {
        let ia = fac.factors.iter().position(|(q, _)| *q == a.q);
        let ib = fac.factors.iter().position(|(q, _)| *q == b.q);
        ia.cmp(&ib).then(a.k.cmp(&b.k))
    });
    PartialFractions { poly_part, terms }
}

/// Partial fractions of a rational function of `z` alone.
pub fn partial_fractions(r: &RatFunc) -> Option<PartialFractions> {
    let (n, d) = r.to_uni(Var::Z)?;
    Some(decompose(&n, &d))
}
