//! Dense polynomials over a prime field F_p (p odd, below 2^31).

use rand::Rng;

pub type Fp = Vec<u64>;

pub fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &Fp) -> usize {
    a.len().saturating_sub(1)
}

pub fn inv(a: u64, p: u64) -> u64 {
    powmod_int(a, p - 2, p)
}

fn powmod_int(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(c)
}

pub fn divrem(a: &Fp, d: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!d.is_empty());
    if a.len() < d.len() {
        return (vec![], a.clone());
    }
    let mut r = a.clone();
    let dn = d.len() - 1;
    let li = inv(*d.last().unwrap(), p);
    let mut qv = vec![0u64; a.len() - dn];
    for k in (0..qv.len()).rev() {
        let c = r[k + dn] * li % p;
        if c != 0 {
            for (j, &dj) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * dj % p) % p;
            }
        }
        qv[k] = c;
    }
    r.truncate(dn);
    (trim(qv), trim(r))
}

pub fn rem(a: &Fp, d: &Fp, p: u64) -> Fp {
    divrem(a, d, p).1
}

pub fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&x| x * li % p).collect()
        }
    }
}

pub fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// `(g, s, t)` with `s a + t b = g` monic.
pub fn xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (qq, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&qq, &s1, p), p);
        let t = sub(&t0, &mul(&qq, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let li = inv(*r0.last().unwrap(), p);
    let sc = |v: &Fp| trim(v.iter().map(|&x| x * li % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

pub fn derivative(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &x)| (k as u64 % p) * x % p)
            .collect(),
    )
}

/// `base^e mod m` where `e` is given as a big exponent `p^d` style via repeated powering.
pub fn powmod(base: &Fp, mut e: u128, m: &Fp, p: u64) -> Fp {
    let mut r = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let mut g = x.clone();
    let mut d = 1;
    while deg(&f) >= 2 * d {
        g = powmod(&g, p as u128, &f, p);
        let h = gcd(&f, &sub(&g, &x, p), p);
        if deg(&h) > 0 {
            f = divrem(&f, &h, p).0;
            g = rem(&g, &f, p);
            out.push((h, d));
        }
        d += 1;
    }
    if deg(&f) > 0 {
        let n = deg(&f);
        out.push((f, n));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting into monic factors of degree `d`.
pub fn equal_degree<R: Rng>(f: &Fp, d: usize, p: u64, rng: &mut R) -> Vec<Fp> {
    let n = deg(f);
    if n == d {
        return vec![f.clone()];
    }
    let e = (p as u128).pow(d as u32).saturating_sub(1) / 2;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if deg(&a) == 0 {
            continue;
        }
        let g = gcd(&a, f, p);
        let split = if deg(&g) > 0 {
            g
        } else {
            let b = powmod(&a, e, f, p);
            gcd(&sub(&b, &vec![1u64], p), f, p)
        };
        if deg(&split) > 0 && deg(&split) < n {
            let other = divrem(f, &split, p).0;
            let mut res = equal_degree(&split, d, p, rng);
            res.extend(equal_degree(&monic(&other, p), d, p, rng));
            return res;
        }
    }
}

pub fn small_primes(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = vec![];
    for i in 2..=limit as usize {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}
