//! Exact arithmetic over ℚ and simple algebraic extensions.

pub mod factor;
pub mod gcd;
pub mod hermite;
pub mod linalg;
pub mod modp;
pub mod multipoly;
pub mod numberfield;
pub mod partial_fractions;
pub mod ratfunc;
pub mod rational;
pub mod residue;
pub mod resultant;
pub mod tower;
pub mod unipoly;
pub mod var;

pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use rational::Q;
pub use unipoly::UniPoly;
pub use var::Var;
