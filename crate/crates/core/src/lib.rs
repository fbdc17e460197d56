//! Exact tone arithmetic over the Gaussian rationals.
//!
//! Tones are ratios of Gaussian integers, or real radicals `2^a 3^b 5^c` with
//! exponents in twelfths. Scales are cumulative products of aggregation
//! sequences, and the [`systems`] module re-derives every semitone system that
//! satisfies a set of fixed-note constraints, with a brute-force search to
//! confirm nothing was missed.

pub mod catalog;
pub mod expr;
pub mod errata;
pub mod export;
pub mod gaussian;
pub mod par;
pub mod pitch;
pub mod radical;
pub mod reference;
pub mod report;
pub mod scales;
pub mod systems;
pub mod tone;
pub mod vocabulary;

pub use gaussian::{CanonicalPrime, Factorization, GaussianInteger, Unity};
pub use pitch::{Pitch, Value};
pub use radical::RadicalTone;
pub use tone::{FactoredTone, Tone};
