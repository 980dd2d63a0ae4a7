//! Exact predicates for RKBS pairs of Bessel potential spaces.
//!
//! A pair `H^{u,p}(R^d), H^{v,q}(R^d)` is an RKBS pair with the Matérn kernel
//! `K_s` exactly when
//!
//! * `1/p + 1/q >= 1`,
//! * `d/p < u < 2s - d/p'`,
//! * `d/q < v < 2s - d/q'`,
//! * `u + v >= 2s + d(1/p + 1/q - 1)`, strictly if `min(p, q) = 1` and
//!   `max(p, q) < inf`.
//!
//! All decisions are made in exact rational arithmetic; `inf` is a symbol.

mod checks;
mod exponent;
mod interval;
mod sweep;

pub use checks::{
    embedding_check, integrability_check, norming_check, rkbs_pair_check, rkbs_space_check,
    self_pair_check, sequence_pair_check, Bound, Condition, ConditionId, PairQuery, Status,
    Verdict,
};
pub use exponent::{holder_conjugate, Exponent, Rational};
pub use interval::{kernel_interval, KernelInterval};
pub use sweep::{consistency_sweep, random_query, SweepReport};
