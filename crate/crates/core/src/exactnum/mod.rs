//! Exact rationals, quadratic surds and fixed-point reals.

pub mod bigreal;
pub mod quadratic;
pub mod rational;
pub mod recognize;
pub mod trig;

pub use bigreal::{pairwise_sum, BigReal, DEFAULT_DIGITS};
pub use quadratic::{quadratic_arith, ArithOp, QuadraticNumber};
pub use rational::{int, parse_rational, rat, rational_to_string, Rational};
pub use recognize::{recognize_quadratic, recognize_quadratic_confirmed, Recognition, DEFAULT_DENOMINATOR_BOUND};
pub use trig::{trig_at_rational_angle, TrigFn};
