//! Congruences on prime divisors of class numbers of solvable extensions.
//!
//! * [`arithmetic`]: bignum primality, factorization, totient, multiplicative order.
//! * [`bound`]: the explicit geometric class-number bound `H_F`, rounded upward.
//! * [`congruence`]: the coprimality, odd-degree and geometric predicates.
//! * [`towers`]: cyclic towers and the step-by-step descent.
//! * [`datasets`]: factor-expression parsing, bundled tables, verification reports.
//! * [`cli`]: the command-line front end.

pub mod arithmetic;
pub mod bound;
pub mod cli;
pub mod congruence;
pub mod datasets;
pub mod error;
pub mod towers;

pub use arithmetic::Factorization;
pub use bound::{BoundInput, BoundValue};
pub use congruence::{RankData, Verdict, VerdictKind};
pub use datasets::{FieldRecord, VerificationReport};
pub use error::{Error, Result};
pub use towers::{CyclicTower, DescentTrace};
