//! Exact-rational engine for degenerate multiple-cover contributions
//! in Gromov-Witten theory.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * degenerate contribution series of embedded curves, as integer
//!   powers of the sine-ratio series `S(t) = sin(t/2)/(t/2)`, by two
//!   independent routes ([`contributions`]);
//! * Hodge integral values over moduli spaces of curves: the alpha
//!   coefficients, kappa integrals, the Faber ratio and the psi-lambda
//!   integrals ([`hodge`]);
//! * BPS state counts extracted from Gromov-Witten tables by the
//!   multiple-cover expansion, with an integrality audit, and
//!   enumerative invariants obtained by the degree-1 correction solve
//!   ([`transforms`]).
//!
//! Scalars are arbitrary-precision rationals ([`Rational`]); series
//! are truncated even power series ([`EvenSeries`]). The [`verify`]
//! module cross-checks every pair of independent routes.
//!
//! ```
//! use multicover::contributions::{
//!     contribution_partition_sum, contribution_series, GeometrySignature,
//! };
//! use multicover::Rational;
//!
//! // Degree-1 contributions of a rigid rational curve: S(t)^-2.
//! let sig = GeometrySignature::calabi_yau(0);
//! let series = contribution_series(sig, 3);
//! assert_eq!(series.coeff(1), &Rational::new(1, 12));
//!
//! // The partition-sum route lands on the same coefficient.
//! assert_eq!(contribution_partition_sum(sig, 1), Rational::new(1, 12));
//! ```

pub mod contributions;
pub mod hodge;
pub mod number_theory;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod transforms;
pub mod verify;

pub use rational::Rational;
pub use series::EvenSeries;
