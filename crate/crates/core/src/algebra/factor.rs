//! Factorization of univariate polynomials over ℚ (Zassenhaus).
//!
//! Squarefree decomposition first; each squarefree part is factored modulo a
//! small prime, Hensel-lifted to a power exceeding the Mignotte bound, and the
//! true factors are recovered by subset recombination with trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Fp};
use super::rational::Q;
use super::unipoly::UniPoly;

/// `p = content * prod f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Q,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }
}

pub fn factor(p: &UniPoly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut factors = Vec::new();
    for (sq, mult) in p.squarefree() {
        for f in factor_squarefree(&sq) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Factorization { content: p.lc(), factors }
}

pub fn is_irreducible(p: &UniPoly) -> bool {
    if p.degree() == 0 {
        return false;
    }
    let f = factor(p);
    f.factors.len() == 1 && f.factors[0].1 == 1
}

/// Monic irreducible factors of a squarefree polynomial.
pub fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let n = f.degree();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![f.monic()];
    }
    // pull out x as a factor first; keeps the constant term nonzero
    if f.coeff(0).is_zero() {
        let rest = f.div_exact(&UniPoly::x()).unwrap();
        let mut out = vec![UniPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let (_, ints) = f.primitive_integer();
    zassenhaus(&ints)
        .into_iter()
        .map(|g| UniPoly::from_bigints(&g).monic())
        .collect()
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    modp::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Prime, its factorization pattern and the number of factors.
type PrimeChoice = (u64, Vec<(Fp, usize)>, usize);

fn choose_prime(f: &[BigInt]) -> Option<(u64, Vec<(Fp, usize)>)> {
    let lc = f.last().unwrap();
    let mut best: Option<PrimeChoice> = None;
    let mut tried = 0;
    for p in modp::small_primes(5000).into_iter().skip(1) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::monic(&to_fp(f, p), p);
        if modp::deg(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) > 0 {
            continue;
        }
        let ddf = modp::distinct_degree(&fp, p);
        let count: usize = ddf.iter().map(|(h, d)| modp::deg(h) / d).sum();
        if best.as_ref().is_none_or(|b| count < b.2) {
            best = Some((p, ddf, count));
        }
        tried += 1;
        if count == 1 || tried >= 6 {
            break;
        }
    }
    best.map(|(p, ddf, _)| (p, ddf))
}

fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let (p, ddf) = choose_prime(f).expect("no suitable prime below 5000");
    let count: usize = ddf.iter().map(|(h, d)| modp::deg(h) / d).sum();
    if count == 1 {
        return vec![f.to_vec()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut modular: Vec<Fp> = Vec::new();
    for (h, d) in ddf {
        modular.extend(modp::equal_degree(&h, d, p, &mut rng));
    }

    let lc = f.last().unwrap().clone();
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    // Mignotte: every factor coefficient is below 2^n * sqrt(n+1) * max|a_i|
    let bound = BigInt::from(2u32) * lc.abs() * (BigInt::one() << n) * (maxc * BigInt::from(n + 1) + 1u32);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }

    let lifted = multifactor_lift(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zp_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zp_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zp_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zp_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

fn zp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zp_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
            .collect(),
    )
}

fn zp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    zp_reduce(&c, m)
}

/// Division by a monic divisor modulo m.
fn zp_divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    if a.len() < d.len() {
        return (vec![], zp_reduce(a, m));
    }
    let dn = d.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    let mut qv = vec![BigInt::zero(); a.len() - dn];
    for k in (0..qv.len()).rev() {
        let c = r[k + dn].mod_floor(m);
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * dj).mod_floor(m);
            }
        }
        qv[k] = c;
    }
    r.truncate(dn);
    (zp_trim(qv), zp_reduce(&r, m))
}

fn fp_to_z(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// One quadratic Hensel step: `f = g h mod m`, `s g + t h = 1 mod m`, `h` monic
/// -> the same relations modulo `m^2`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = zp_sub(&zp_reduce(f, &m2), &zp_mul(g, h, &m2), &m2);
    let (qq, r) = zp_divrem_monic(&zp_mul(s, &e, &m2), h, &m2);
    let g2 = zp_add(&zp_add(g, &zp_mul(t, &e, &m2), &m2), &zp_mul(&qq, g, &m2), &m2);
    let h2 = zp_add(h, &r, &m2);
    let b = zp_sub(
        &zp_add(&zp_mul(s, &g2, &m2), &zp_mul(t, &h2, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zp_divrem_monic(&zp_mul(s, &b, &m2), &h2, &m2);
    let s2 = zp_sub(s, &d, &m2);
    let t2 = zp_sub(&zp_sub(t, &zp_mul(t, &b, &m2), &m2), &zp_mul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factors of `f` (whose product is `f / lc` mod p)
/// to monic factors modulo `target`.
fn multifactor_lift(f: &[BigInt], factors: &[Fp], p: u64, target: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        // f = lc * g mod target, g monic
        let lc = f.last().unwrap();
        let inv = lc.modinv(target).expect("lc invertible mod p^k");
        return vec![zp_reduce(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let prod = |fs: &[Fp]| fs.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let h0 = prod(left);
    let lcp = to_fp(&[f.last().unwrap().clone()], p);
    let g0 = modp::mul(&prod(right), &lcp, p);
    let (_, s0, t0) = modp::xgcd(&g0, &h0, p);

    let pb = BigInt::from(p);
    let (mut g, mut h, mut s, mut t) = (fp_to_z(&g0), fp_to_z(&h0), fp_to_z(&s0), fp_to_z(&t0));
    let mut m = pb;
    while &m < target {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        g = next.0;
        h = next.1;
        s = next.2;
        t = next.3;
        m = &m * &m;
    }
    let g = zp_reduce(&g, target);
    let h = zp_reduce(&h, target);
    let mut out = multifactor_lift(&h, left, p, target);
    out.extend(multifactor_lift(&g, right, p, target));
    out
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let c = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = if a.last().unwrap().is_negative() { -1 } else { 1 };
    a.iter().map(|x| x / &c * sign).collect()
}

fn trial_divide(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    // g primitive, so by Gauss's lemma the quotient is integral whenever it exists
    let qq = UniPoly::from_bigints(f).div_exact(&UniPoly::from_bigints(g))?;
    qq.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut result = Vec::new();
    let mut f = f.to_vec();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut found = false;
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &idx {
                cand = zp_mul(&cand, &lifted[i], m);
            }
            let cand: Vec<BigInt> = zp_trim(cand.iter().map(|c| symmetric(c, m)).collect());
            let cand = primitive(&cand);
            if let Some(quot) = trial_divide(&f, &cand) {
                result.push(cand);
                f = quot;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if f.len() > 1 {
        result.push(primitive(&f));
    }
    result
}
