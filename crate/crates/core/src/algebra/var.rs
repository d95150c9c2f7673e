use std::fmt;

/// The closed set of symbols a polynomial may mention.
///
/// The declaration order is also the lexicographic variable order used to
/// break ties inside the graded term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    W,
    Wp,
    T,
    Lambda,
    X,
    Y,
    U,
    V,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Z,
        Var::W,
        Var::Wp,
        Var::T,
        Var::Lambda,
        Var::X,
        Var::Y,
        Var::U,
        Var::V,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::W => "w",
            Var::Wp => "wp",
            Var::T => "t",
            Var::Lambda => "lambda",
            Var::X => "x",
            Var::Y => "y",
            Var::U => "u",
            Var::V => "v",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
