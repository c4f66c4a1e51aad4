//! Rigorous numerics: dyadic floats, complex ball arithmetic, and ball
//! evaluation of exponential polynomials.

pub mod ball;
pub mod dyadic;
pub mod expeval;

pub use ball::{ComplexBall, Prec};
pub use dyadic::Dyadic;
pub use expeval::{certify_nonzero, eval_ball, root_ball};
