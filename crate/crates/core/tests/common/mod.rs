#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratsode::algebra::{MultiPoly, RatFunc, UniPoly, Var, Q};

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z() -> RatFunc {
    RatFunc::var(Var::Z)
}

pub fn lambda() -> RatFunc {
    RatFunc::var(Var::Lambda)
}

pub fn rf(s: &str) -> RatFunc {
    ratsode::expr::parse_ratfunc(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn poly(s: &str) -> MultiPoly {
    let r = rf(s);
    assert!(r.is_polynomial(), "{s} is not a polynomial");
    r.num().clone()
}

pub fn uni(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `v' + v² − r`, computed with plain field operations.
pub fn classical_residual(v: &RatFunc, r: &RatFunc) -> RatFunc {
    &(&v.derivative(Var::Z) + &(v * v)) - r
}

/// Evaluates at rational points, giving `None` at a pole.
pub fn eval(r: &RatFunc, point: &[(Var, Q)]) -> Option<Q> {
    let num = r.num().eval_all(point).constant_value()?;
    let den = r.den().eval_all(point).constant_value()?;
    (!den.is_zero()).then(|| num / den)
}

/// A manufactured instance `r = v0' + v0²` with `v0 = Σ aᵢ/(z − zᵢ)`.
#[derive(Clone, Debug)]
pub struct RiccatiInstance {
    pub poles: Vec<(Q, i64)>,
    pub v0: RatFunc,
    pub r: RatFunc,
}

impl RiccatiInstance {
    pub fn new(poles: Vec<(Q, i64)>) -> Self {
        let mut v0 = RatFunc::zero();
        for (zi, a) in &poles {
            let term = (&z() - &RatFunc::constant(zi.clone())).inv().unwrap().scale(&q(*a));
            v0 = &v0 + &term;
        }
        let r = &v0.derivative(Var::Z) + &(&v0 * &v0);
        RiccatiInstance { poles, v0, r }
    }
}

/// Generalized binomial coefficient `C(e, k)` for integer `e`.
fn binom(e: i64, k: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc = acc * q(e - i as i64) / q(i as i64 + 1);
    }
    acc
}

/// Coefficients of `(c + h)^e` in `h` up to `h^n`, with `c ≠ 0`.
fn binomial_series(c: &Q, e: i64, n: usize) -> Vec<Q> {
    let ce = if e >= 0 { num_traits::pow(c.clone(), e as usize) } else { num_traits::pow(c.recip(), (-e) as usize) };
    (0..=n).map(|k| &ce * binom(e, k) / num_traits::pow(c.clone(), k)).collect()
}

fn series_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().min(b.len());
    (0..n).map(|k| (0..=k).fold(Q::zero(), |acc, i| acc + &a[i] * &b[k - i])).collect()
}

/// Whether `v0 + 1/(N (λ + ∫ N⁻¹))`, `N = Π (z − zᵢ)^(2aᵢ)`, is rational,
/// that is whether every residue of `N⁻¹` vanishes. Residues come from
/// truncated Laurent series at each pole.
pub fn general_solution_is_rational(poles: &[(Q, i64)]) -> bool {
    poles.iter().enumerate().all(|(j, (zj, aj))| {
        let order = 2 * aj;
        if order <= 0 {
            return true;
        }
        let n = (order - 1) as usize;
        let mut series = vec![Q::zero(); n + 1];
        series[0] = Q::one();
        for (i, (zi, ai)) in poles.iter().enumerate() {
            if i != j {
                series = series_mul(&series, &binomial_series(&(zj - zi), -2 * ai, n));
            }
        }
        series[n].is_zero()
    })
}

/// Random instances with 1 to 4 distinct poles `p/q`, `|p| ≤ 9`, `1 ≤ q ≤ 9`,
/// and nonzero residues in `-3..=3`. Returns `(accepted, tried)`.
pub fn riccati_corpus(count: usize, seed: u64) -> (Vec<RiccatiInstance>, usize) {
    let mut g = rng(seed);
    let mut out = Vec::new();
    let mut tried = 0;
    while out.len() < count {
        tried += 1;
        let k = g.gen_range(1..=4);
        let mut poles: Vec<(Q, i64)> = Vec::new();
        while poles.len() < k {
            let zi = qf(g.gen_range(-9..=9), g.gen_range(1..=9));
            let a = [-3, -2, -1, 1, 2, 3][g.gen_range(0..6)];
            if poles.iter().all(|(p, _)| *p != zi) {
                poles.push((zi, a));
            }
        }
        if general_solution_is_rational(&poles) {
            out.push(RiccatiInstance::new(poles));
        }
    }
    (out, tried)
}

/// Random polynomial in the given variables with small integer coefficients.
pub fn random_poly<R: Rng>(g: &mut R, vars: &[Var], max_deg: u16, terms: usize, coeff: i64) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..terms {
        let mut m = MultiPoly::int(g.gen_range(-coeff..=coeff));
        for v in vars {
            m = &m * &MultiPoly::var(*v).pow(g.gen_range(0..=max_deg) as u32);
        }
        p = &p + &m;
    }
    p
}
