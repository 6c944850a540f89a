use thiserror::Error;

/// Errors raised by constructors and operations on finite preorders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("relation is not reflexive: missing ({0}, {0})")]
    NotReflexive(usize),

    #[error("relation is not transitive: ({0}, {1}) and ({1}, {2}) present, ({0}, {2}) missing")]
    NotTransitive(usize, usize, usize),

    #[error("map is not monotone: ({0}, {1}) related in the domain but ({2}, {3}) unrelated in the codomain")]
    NotMonotone(usize, usize, usize, usize),

    #[error("subset is not complemented: pair ({inside}, {outside}) crosses the boundary")]
    NotComplemented { inside: usize, outside: usize },

    #[error("boundary mismatch: expected an arrow out of the given object")]
    BoundaryMismatch,

    #[error("target is not the coproduct of the given summands")]
    NotACoproduct,

    #[error("member list contains duplicates or is not sorted")]
    BadMemberList,

    #[error("enumeration would exceed the configured bound ({candidates} candidates > {bound})")]
    EnumerationTooLarge { candidates: u128, bound: u128 },

    #[error("enumeration is only supported up to size {max}, got {got}")]
    SizeTooLarge { got: usize, max: usize },

    #[error("oracle does not support {0}")]
    MissingCapability(&'static str),

    #[error("comparison morphism is not invertible in the target category")]
    NotInvertible,
}
