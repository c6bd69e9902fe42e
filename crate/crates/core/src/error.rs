use thiserror::Error;

use crate::lie::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid field tag: {0}")]
    InvalidFieldTag(String),

    #[error("the algebra is not nilpotent (lower central series stabilizes at dimension {stable_dim})")]
    NotNilpotent { stable_dim: usize },

    #[error("subspace is not a graded subspace")]
    MixedWeightSubspace,

    #[error("subspace is not an ideal: [{generator}, v] escapes it")]
    NotAnIdeal { generator: String },

    #[error("algebra fails validation: {0}")]
    InvalidAlgebra(ValidationReport),

    #[error("characteristic polynomial of derivation {derivation} does not split over the rationals")]
    FieldNotSplit { derivation: usize },

    #[error("matrix {derivation} is not a derivation (fails on [{a}, {b}])")]
    NotADerivation { derivation: usize, a: String, b: String },

    #[error("derivations {first} and {second} do not commute")]
    NonCommutingAction { first: usize, second: usize },

    #[error("derivation {derivation} mixes basis elements of different fields")]
    ActionMixesFields { derivation: usize },

    #[error("not standard solvable: principal weight of {label} is zero")]
    NotStandardSolvable { label: String },

    #[error("cone dimension is only available for archimedean algebras")]
    NonArchimedeanUnsupported,

    #[error("not of mixed type: {0}")]
    NotMixedType(String),

    #[error("missing residue cardinality on nonarchimedean element {label}")]
    MissingResidueCardinality { label: String },

    #[error("modular scale is not an integer power product: {0}")]
    NonIntegralModulus(String),

    #[error("condition (*) violated: V contains coordinate axis {axis}")]
    StarConditionViolated { axis: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("inconsistent rule set: lower bound {lower} exceeds upper bound {upper}")]
    InconsistentBounds { lower: String, upper: String },
}
