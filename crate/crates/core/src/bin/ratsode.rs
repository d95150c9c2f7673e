use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ratsode::expr::{load_problem, render};
use ratsode::pipeline::{solve_with, PipelineResult, SolveOptions};

#[derive(Parser)]
#[command(name = "ratsode", version, about = "Rational general solutions of first-order algebraic ODEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the equation in a problem file
    Solve {
        file: PathBuf,
        /// Print the result as JSON
        #[arg(long)]
        json: bool,
        /// Number of genus samples (overrides the file)
        #[arg(long)]
        samples: Option<usize>,
        /// Sampling seed (overrides the file)
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the final exact check of the solution family
        #[arg(long)]
        no_verify: bool,
    },
}

const INPUT_ERROR: u8 = 3;

fn print_human(r: &PipelineResult) {
    println!("status:   {}", r.status);
    match &r.genus {
        Some(g) => match g.genus() {
            Some(v) => println!("genus:    {v}  [{}]", g.summary()),
            None => println!("genus:    {:?}  [{}]", g.consensus, g.summary()),
        },
        None => println!("genus:    -"),
    }
    if let Some(rc) = &r.riccati {
        println!("riccati:  t' = A t^2 + B t + C");
        println!("  A = {}", render(&rc.a));
        println!("  B = {}", render(&rc.b));
        println!("  C = {}", render(&rc.c));
    }
    if let Some(nr) = &r.normal_r {
        println!("normal:   v' + v^2 = {}", render(nr));
    }
    if let Some(s) = &r.solution {
        println!("solution: w = {}", render(s.expr()));
    }
    println!("verified: {}", r.verified);
    println!("reason:   {}", r.reason);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Solve { file, json, samples, seed, no_verify } = cli.command;
    let problem = match load_problem(&file) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("ratsode: {}: {e}", file.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    if samples == Some(0) {
        eprintln!("ratsode: --samples must be positive");
        return ExitCode::from(INPUT_ERROR);
    }
    let opts = SolveOptions {
        samples: samples.unwrap_or(problem.samples),
        seed: seed.unwrap_or(problem.seed),
        no_verify,
    };
    let result = solve_with(&problem, opts);
    if json {
        println!("{}", result.to_report().to_json());
    } else {
        print_human(&result);
    }
    ExitCode::from(result.exit_code() as u8)
}
