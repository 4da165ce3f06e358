use crate::semilattice::ValidationReport;

/// Everything that can go wrong when building or combining structures.
///
/// `Malformed`, `Io`, and `Json` are shape problems (a table has the wrong
/// dimensions, an index is out of range, a file does not parse). The other
/// variants are semantic: the data is well shaped but fails a law or a
/// precondition, and the variant carries the witness when there is one.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("validation failed: {0}")]
    Invalid(ValidationReport),

    #[error("structure is not principal: element {element} has no closure")]
    NotPrincipal { element: usize },

    #[error("closure is not additive: K({a} v {b}) != K({a}) v K({b})")]
    NotAdditive { a: usize, b: usize },

    #[error("map is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("map does not preserve the zero element")]
    NotZeroPreserving,

    #[error("structures do not match: {0}")]
    Mismatch(String),

    #[error("structure has no zero element")]
    NoZero,

    #[error("closed-set family is not intersection-closed: witness sets {x:#b} and {y:#b}")]
    NotIntersectionClosed { x: u32, y: u32 },

    #[error("closed-set family does not contain the ground set")]
    MissingGroundSet,

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("partition is not a join congruence: witness ({a}, {a1}, {b}, {b1})")]
    NotCongruence { a: usize, a1: usize, b: usize, b1: usize },

    #[error("partition admits no interpolant for {a} below {b} ~ {b1} below {c}")]
    NoInterpolant { a: usize, b: usize, b1: usize, c: usize },

    #[error("carrier size {size} exceeds the limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("enumeration needs {required} candidate maps, over the budget {budget}")]
    Budget { required: u128, budget: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
