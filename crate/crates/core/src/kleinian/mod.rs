//! Kleinian groups: assembly from circle pairings and combinations, orbit
//! enumeration, limit sets, and dimension estimates.

pub mod combine;
pub mod dimension;
pub mod enumerate;
pub mod group;
pub mod invariance;
pub mod limit_set;
pub mod panelled;
pub mod region;
pub mod sign;

use thiserror::Error;

use crate::moebius::{ComplexPoint, MoebiusError};
use crate::word::{Label, Word};

pub use combine::{first_combination, second_combination};
pub use dimension::{box_counting_dimension, DimensionEstimate, ScaleLadder};
pub use enumerate::{enumerate_reduced_words, reduced_word_count};
pub use group::{adjoin_extension, complex_twist, conjugate, fuchsian_schottky, Generator, GroupSpec, SchottkyLayout, Step};
pub use invariance::{check_pairwise_precisely_invariant, check_precisely_invariant, InvarianceCheck, Witness};
pub use limit_set::{limit_set_sample, LimitSetSample};
pub use region::{Region, Side};
pub use sign::{dimension_threshold_check, scalar_sign, ScalarSign, Sign, ThresholdHint};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KleinianError {
    #[error("group labels must be single lowercase letters, got {0}")]
    BadLabel(Label),
    #[error("generator label {0} is used twice")]
    LabelCollision(Label),
    #[error("no generator labeled {0}")]
    UnknownLabel(Label),
    #[error("generator {0} is the identity")]
    IdentityGenerator(Label),
    #[error("all 26 generator labels are in use")]
    LabelsExhausted,
    #[error("circles {0} and {1} of the layout overlap")]
    OverlappingCircles(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("extension check failed: {0}")]
    ExtensionCheckFailed(String),
    #[error("shared generator {0} differs between the two groups")]
    SharedGeneratorMismatch(Label),
    #[error("precise invariance failed: word {} moves {} to {}", .0.word, .0.point, .0.image)]
    PreciseInvarianceFailed(Box<Witness>),
    #[error("conjugation check failed: f {h1} f^-1 is not {h2} or its inverse")]
    ConjugationFailed { h1: Label, h2: Label },
    #[error("f does not carry the boundary of B1 onto the boundary of B2 (sample {point} -> {image})")]
    RegionMapFailed { point: ComplexPoint, image: ComplexPoint },
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("twist root does not satisfy a0^q = a (residual {0:e})")]
    PowerCheckFailed(f64),
    #[error("need at least 100 finite points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate scale ladder: {0}")]
    DegenerateScales(String),
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

/// Convenience for a word and its printed form in error messages.
pub(crate) fn word_of(syms: &[enumerate::Sym], labels: &[Label]) -> Word {
    enumerate::to_word(syms, labels)
}
