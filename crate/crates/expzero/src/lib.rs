//! Symbolic computation in the free exponential polynomial ring over the
//! algebraic numbers, with exact number fields, certified complex root
//! isolation, and rigorous ball arithmetic for numeric cross-checks.

pub mod error;
pub mod decomp;
pub mod expcore;
pub mod frontend;
pub mod mvpoly;
pub(crate) mod ratlin;
pub mod zerofinder;
pub mod numberfield;
pub mod numeric;
pub mod poly;

pub use error::{Error, Result};
pub use expcore::ExpPoly;
pub use numberfield::roots::AlgebraicRoot;
pub use numberfield::{FieldElement, FieldPoly, NumberField};
pub use poly::{IntPoly, Poly, RatPoly};

/// Resource limits for potentially expensive operations.
#[derive(Clone, Debug)]
pub struct Config {
    /// Working ball precision in bits.
    pub precision: u32,
    /// Hard ceiling for adaptive precision escalation.
    pub precision_cap: u32,
    /// Maximum degree for integer polynomial factorization.
    pub factor_degree_cap: usize,
    /// Maximum total degree in multivariate gcd computations.
    pub gcd_degree_cap: usize,
    /// Maximum recursion depth across nested zero searches.
    pub depth_cap: u32,
    /// Largest shift multiplier tried when joining two number fields.
    pub extension_bound: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: 256,
            precision_cap: 1 << 14,
            factor_degree_cap: 12,
            gcd_degree_cap: 16,
            depth_cap: 16,
            extension_bound: 20,
        }
    }
}
