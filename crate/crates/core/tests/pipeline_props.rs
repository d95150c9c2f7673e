mod common;

use common::*;
use rand::Rng;

use ratsode::algebra::{RatFunc, Var};
use ratsode::expr::{load_problem, Problem};
use ratsode::pipeline::{solve_pipeline, solve_with, verify_general_solution, SolveOptions, Status};
use ratsode::riccati::ode_residual;

fn problems() -> Vec<(String, Problem)> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("problems");
    let mut out: Vec<(String, Problem)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), load_problem(&p).unwrap()))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[test]
fn solved_implies_independently_verified() {
    let mut solved = 0;
    for (name, p) in problems() {
        let res = solve_pipeline(&p);
        match res.status {
            Status::Solved => {
                solved += 1;
                assert!(res.verified, "{name}");
                let w = res.solution.as_ref().unwrap().expr();
                assert!(verify_general_solution(&p.equation, w), "{name}");
                assert!(ode_residual(&p.equation, w).is_zero(), "{name}");
            }
            Status::NoRationalGeneralSolution => assert!(!res.reason.is_empty(), "{name}"),
            _ => {}
        }
    }
    assert!(solved >= 4);
}

#[test]
fn deterministic_given_problem_and_seed() {
    for (name, p) in problems() {
        let a = solve_pipeline(&p).to_report().to_json();
        let b = solve_pipeline(&p).to_report().to_json();
        assert_eq!(a, b, "{name}");
    }
    let p = Problem::parse("equation: wp^2 - w^3 - 1\n").unwrap();
    for seed in 0..4 {
        let opts = SolveOptions { seed, ..SolveOptions::from_problem(&p) };
        let first = solve_with(&p, opts);
        assert_eq!(first, solve_with(&p, opts));
        assert_eq!(first.status, Status::NoRationalGeneralSolution);
    }
}

/// `w = t²` with `t = (aλ + b)/(cλ + d)`: from `t' = A t² + B t + C`,
/// `w' = 2t (A w + C) + 2B w`, so `(w' − 2B w)² = 4 w (A w + C)²`.
#[test]
fn manufactured_problems_are_solved() {
    let mut g = rng(51);
    let mut done = 0;
    while done < 12 {
        let mut lin = || RatFunc::from(random_poly(&mut g, &[Var::Z], 1, 2, 3));
        let (a, b, c, d) = (lin(), lin(), lin(), lin());
        let det = &(&a * &d) - &(&b * &c);
        if det.is_zero() {
            continue;
        }
        let dz = |x: &RatFunc| x.derivative(Var::Z);
        let x11 = &(&(&dz(&a) * &d) - &(&dz(&b) * &c)) / &det;
        let x12 = &(&(&dz(&b) * &a) - &(&dz(&a) * &b)) / &det;
        let x21 = &(&(&dz(&c) * &d) - &(&dz(&d) * &c)) / &det;
        let x22 = &(&(&dz(&d) * &a) - &(&dz(&c) * &b)) / &det;
        let (ca, cb, cc) = (-&x21, &x11 - &x22, x12);
        if ca.is_zero() || cc.is_zero() {
            continue;
        }
        let (w, wp) = (RatFunc::var(Var::W), RatFunc::var(Var::Wp));
        let lhs = &wp - &(&w * &cb.scale(&q(2)));
        let inner = &(&ca * &w) + &cc;
        let f = &(&lhs * &lhs) - &(&w * &(&inner * &inner)).scale(&q(4));
        let big_f = f.num().clone();
        let t = &(&(&a * &lambda()) + &b) / &(&(&c * &lambda()) + &d);
        assert!(ode_residual(&big_f, &(&t * &t)).is_zero());
        let Ok(p) = Problem::new(big_f) else { continue };
        let res = solve_pipeline(&p);
        assert_eq!(res.status, Status::Solved, "{}: {}", ratsode::expr::render_poly(&p.equation), res.reason);
        assert!(verify_general_solution(&p.equation, res.solution.as_ref().unwrap().expr()));
        done += 1;
    }
}

#[test]
fn seeds_do_not_change_the_verdict_on_random_riccati_equations() {
    let mut g = rng(52);
    for _ in 0..6 {
        let n = g.gen_range(1..=3);
        let text = format!("equation: wp + w^2 - {}/z^2\n", n * (n + 1));
        let p = Problem::parse(&text).unwrap();
        let verdicts: Vec<Status> = (0..3)
            .map(|seed| solve_with(&p, SolveOptions { seed, ..SolveOptions::from_problem(&p) }).status)
            .collect();
        assert!(verdicts.iter().all(|s| *s == Status::Solved), "{text}: {verdicts:?}");
    }
}
