pub mod algebra;
pub mod expr;
pub mod param;
pub mod pipeline;
pub mod riccati;
pub mod curve;
