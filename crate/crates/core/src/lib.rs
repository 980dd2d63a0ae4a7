//! Reproducing kernel Banach space (RKBS) pairs of Bessel potential spaces.
//!
//! The Matérn kernel `K_s(x, y) = G_{2s}(x - y)` reproduces point evaluations
//! not only in the Hilbert space `H^{s,2}(R^d)` but in a whole family of
//! Banach space pairs `H^{u,p}(R^d), H^{v,q}(R^d)`. This crate provides
//!
//! * [`admissibility`]: exact rational predicates deciding which pairs,
//!   self-pairs and norming pairs admit `K_s`, together with the interval
//!   of admissible kernel orders for a fixed pair;
//! * [`specfun`]: the Gamma function, the modified Bessel function `K_ν`
//!   and the Bessel kernel `G_s` with its near/far-field behaviour;
//! * [`spectral`]: a periodized Fourier calculus on uniform grids for the
//!   Bessel potential `J_σ`, `L^p` and `H^{s,p}` norms, the reproducing
//!   pairing and kernel sections;
//! * [`experiments`]: numerical evidence for the positive constructions
//!   (reproducing property, Young bounds, norming identity) and for the
//!   blow-up counterexamples that rule out the remaining pairs;
//! * [`cli`]: the command-line front end used by the `bessel-rkbs` binary.
//!
//! ```
//! use bessel_rkbs::admissibility::{rkbs_pair_check, Exponent, PairQuery};
//!
//! let query = PairQuery::parse(1, "3", "2", "3", "2", "2").unwrap();
//! assert!(rkbs_pair_check(&query).admissible);
//! ```

pub mod admissibility;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod quadrature;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
