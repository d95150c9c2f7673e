//! Expression syntax, problem files and result serialization.

pub mod parse;
pub mod problem;
pub mod render;
pub mod report;

pub use parse::{parse_expr, parse_ratfunc, Expr, ExprError, ParseError};
pub use problem::{load_problem, Problem, ProblemError};
pub use render::{render, render_poly};
