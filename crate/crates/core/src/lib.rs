//! Exact-arithmetic exploration of the unramified unitary dual of `Sp(2n,F)`
//! through exponent-vector norms.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod jordan;
pub mod orderings;
pub mod rational;
pub mod spectrum;
pub mod verifier;

pub use error::{Error, Result};
pub use jordan::{enumerate_jord_sn, JordSN, OddPartition, SelfDualChar};
pub use orderings::{interval_desc, segment_exponents, ExpVector};
pub use rational::Rational;
pub use spectrum::{check_dual_conditions, DualPoint, GLChar, NegativeRep, UnitaryChar, Verdict};
