//! Error type shared by the library.
//!
//! Variants map onto the three failure classes the CLI distinguishes:
//! bad input, resource limits, and internal invariant violations (the last
//! surface as panics, never as `Error` values).

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not irreducible over the rationals")]
    NotIrreducible,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("box does not isolate exactly one root of the polynomial")]
    BoxNotIsolating,
    #[error("no primitive element found with multiplier bound {bound}")]
    ExtensionFailed { bound: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("precision cap of {cap_bits} bits exceeded")]
    PrecisionCap { cap_bits: u32 },
    #[error("expression is identically zero; its zero set is all of C")]
    IdenticallyZero,
    #[error("recursion depth cap of {cap} exceeded")]
    DepthCap { cap: u32 },
    #[error("height {height} exceeds the cap of {cap}")]
    HeightCap { height: u32, cap: u32 },
    #[error("expression is not a constant")]
    NotConstant,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid algebraic constant: {0}")]
    BadAlgebraicConstant(Box<Error>),
}

impl Error {
    /// Process exit code class: 1 input, 2 resource limit.
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotIrreducible
            | Error::NotSquareFree
            | Error::BoxNotIsolating
            | Error::DivisionByZero
            | Error::ZeroPolynomial
            | Error::IdenticallyZero
            | Error::NotConstant
            | Error::Syntax { .. }
            | Error::BadAlgebraicConstant(_) => 1,
            Error::ExtensionFailed { .. }
            | Error::DegreeCap { .. }
            | Error::PrecisionCap { .. }
            | Error::DepthCap { .. }
            | Error::HeightCap { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
