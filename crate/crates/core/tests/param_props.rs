mod common;

use common::*;
use num_traits::Zero;
use rand::Rng;

use ratsode::algebra::gcd::gcd;
use ratsode::algebra::{MultiPoly, Var, Q};
use ratsode::param::{auto_parametrize, verify_parametrization, ParamSource};

/// Homogeneous form of degree `k` in (w, wp) with coefficients `a + b z`.
fn form(g: &mut impl Rng, k: u32) -> MultiPoly {
    let mut f = MultiPoly::zero();
    for i in 0..=k {
        let c = &MultiPoly::int(g.gen_range(-4..=4)) + &MultiPoly::var(Var::Z).scale(&q(g.gen_range(-2..=2)));
        let m = &MultiPoly::var(Var::W).pow(i) * &MultiPoly::var(Var::Wp).pow(k - i);
        f = &f + &(&c * &m);
    }
    f
}

/// `f_d + f_(d−1)` moved so that the `(d−1)`-fold point sits at `(z, 1)`.
fn random_monoid(g: &mut impl Rng, d: u32) -> MultiPoly {
    loop {
        let (top, low) = (form(g, d), form(g, d - 1));
        if top.is_zero() || low.is_zero() || !gcd(&top, &low).is_constant() || top.degree_in(&[Var::W, Var::Wp]) != d {
            continue;
        }
        let shift = [
            (Var::W, &MultiPoly::var(Var::W) - &MultiPoly::var(Var::Z)),
            (Var::Wp, &MultiPoly::var(Var::Wp) - &MultiPoly::int(1)),
        ];
        return (&top + &low).substitute_many(&shift);
    }
}

/// Exact check of `F(z0, r1, r2) = 0` at sample points off the poles.
fn vanishes_at_points(f: &MultiPoly, r1: &ratsode::algebra::RatFunc, r2: &ratsode::algebra::RatFunc) -> bool {
    let mut checked = 0;
    for (t0, z0) in [(qf(1, 3), qf(2, 7)), (qf(-5, 2), qf(3, 1)), (qf(7, 4), qf(-1, 5)), (qf(11, 3), qf(13, 2))] {
        let pt: [(Var, Q); 2] = [(Var::T, t0), (Var::Z, z0.clone())];
        let (Some(w), Some(wp)) = (eval(r1, &pt), eval(r2, &pt)) else { continue };
        let val = f.eval_all(&[(Var::Z, z0), (Var::W, w), (Var::Wp, wp)]).constant_value().unwrap();
        if !val.is_zero() {
            return false;
        }
        checked += 1;
    }
    checked > 0
}


#[test]
fn random_monoids_parametrize() {
    let mut g = rng(31);
    for i in 0..24 {
        let d = 3 + (i % 2) as u32;
        let f = random_monoid(&mut g, d);
        let p = auto_parametrize(&f).unwrap_or_else(|e| panic!("{f:?}: {e}"));
        assert_eq!(p.source(), ParamSource::BuiltinMonoid);
        assert!(verify_parametrization(&f, p.r1(), p.r2()));
        assert!(vanishes_at_points(&f, p.r1(), p.r2()), "{f:?}");
    }
}

#[test]
fn conics_through_a_point_parametrize() {
    let mut g = rng(32);
    for _ in 0..20 {
        let f = random_monoid(&mut g, 2);
        let p = auto_parametrize(&f).unwrap_or_else(|e| panic!("{f:?}: {e}"));
        assert!(matches!(p.source(), ParamSource::BuiltinConic | ParamSource::BuiltinMonoid));
        assert!(verify_parametrization(&f, p.r1(), p.r2()));
        assert!(vanishes_at_points(&f, p.r1(), p.r2()), "{f:?}");
    }
}

#[test]
fn lines_parametrize() {
    let mut g = rng(33);
    for _ in 0..20 {
        let f = &form(&mut g, 1) + &MultiPoly::var(Var::Wp);
        let f = &f + &random_poly(&mut g, &[Var::Z], 2, 2, 5);
        if f.degree(Var::Wp) == 0 {
            continue;
        }
        let p = auto_parametrize(&f).unwrap();
        assert_eq!(p.source(), ParamSource::BuiltinLine);
        assert!(vanishes_at_points(&f, p.r1(), p.r2()), "{f:?}");
    }
}

#[test]
fn example_two_parametrizes_exactly() {
    let f = poly("z^2*(wp^2 + 2*w*wp/z - 4*z*w^3 + (1 + 12*z^2)*w^2/z^2 - 12*w/z + 4/z^2)");
    let p = auto_parametrize(&f).unwrap();
    assert!(vanishes_at_points(&f, p.r1(), p.r2()));
}
