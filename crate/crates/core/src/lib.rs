//! Information gain versus disturbance for two quantum states.
//!
//! When an eavesdropper probes a system secretly prepared in one of two
//! states, any information she gains about the preparation comes at the
//! price of disturbing the states themselves. This crate provides the
//! machinery to make that tradeoff quantitative:
//!
//! - [`linalg`]: a dense complex-matrix kernel (Hermitian eigensolver,
//!   operator functions, tensor product, partial trace) sized for the small
//!   operators that appear here.
//! - [`quantum`]: density operators, POVMs, and Kraus channels, including
//!   the construction of a reduced channel from a joint unitary and of a
//!   POVM from an explicit ancilla model.
//! - [`measures`]: classical and quantum distinguishability measures —
//!   statistical overlap, mutual information, guessing error, the Helstrom
//!   bound with its optimal measurement, fidelity, entropy, and the Holevo
//!   bound.
//! - [`eavesdrop`]: the probe-interaction model and four disturbance
//!   measures (average fidelity, detection probability, entanglement
//!   fidelity and its disturbance).
//! - [`tradeoff`]: the closed-form error-probability-versus-disturbance
//!   curve for a pair of equally likely nonorthogonal pure qubit states,
//!   together with the three-parameter probe family behind it.
//! - [`optimize`]: an independent numerical check of that curve by
//!   multi-start penalized simplex search, over both the probe family and
//!   general isometries.
//! - [`broadcast`]: exact broadcasting of commuting mixed states, numerical
//!   no-cloning/no-broadcasting evidence for noncommuting ones, and the
//!   block-diagonal example of information gain with zero disturbance.
//! - [`verify`]: the runtime invariant suites behind `qtradeoff verify`.
//!
//! All state is immutable and every operation is a pure function, so the
//! whole API is safe for concurrent use.
//!
//! ```
//! use qtradeoff::measures::{helstrom, PriorPair};
//! use qtradeoff::tradeoff::{analytic_curve, reference_pair};
//!
//! // The α = π/8 pair: overlap ⟨0|1⟩ = sin 2α = 1/√2.
//! let pair = reference_pair();
//! let curve = analytic_curve(&pair, 51).unwrap();
//!
//! // No disturbance means no information: the curve starts at Pₑ = ½ ...
//! assert!((curve.points[0].pe - 0.5).abs() < 1e-12);
//!
//! // ... and ends at the unconstrained minimum-error bound.
//! let eq = PriorPair::equal();
//! let bound = helstrom(&eq, &pair.density(0), &pair.density(1)).unwrap();
//! let last = curve.points.last().unwrap();
//! assert!((last.pe - bound.error_probability).abs() < 1e-12);
//! assert!((last.d - 0.0669872981).abs() < 1e-9);
//! ```

pub mod broadcast;
pub mod eavesdrop;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod optimize;
pub mod quantum;
pub mod sampling;
pub mod simplex;
pub mod tradeoff;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{CMatrix, EigenDecomposition, Subsystem};
pub use measures::{HelstromResult, PriorPair};
pub use quantum::{DensityOperator, KrausChannel, Povm, PureState};
pub use tradeoff::{CurvePoint, ProbeParams, Provenance, PurePair, TradeoffCurve};

/// Shorthand for the complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;
