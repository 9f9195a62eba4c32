use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid cyclic factor {0}: every factor must be at least 2")]
    InvalidFactor(u64),
    #[error("cannot parse group literal {0:?} (expected e.g. Z6 or Z2xZ4)")]
    BadLiteral(String),
    #[error("element index {index} out of range for a group of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("group of order {order} exceeds the configured guard {guard}")]
    GuardExceeded { order: usize, guard: usize },
    #[error("table of length {len} is not a bijection on {order} elements")]
    NotBijective { len: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("groups do not match: {0}")]
    GroupMismatch(String),
    #[error("identity is mapped to {image}")]
    IdentityMoved { image: usize },
    #[error("no power of the permutation matches the displacement at a={a} (witness b={b})")]
    NoPower { a: usize, b: usize },
    #[error("coset partition is not invariant: element {a} and {b} share a coset but their images do not")]
    NotInvariant { a: usize, b: usize },
    #[error("induced quotient map is not a skew morphism: {0}")]
    QuotientNotSkew(String),
    #[error("expected a cyclic group, got {0}")]
    NotCyclic(String),
    #[error("expected a non-cyclic group, got {0} (use the cyclic predicate instead)")]
    Cyclic(String),
    #[error("parameter rejected: {0}")]
    Parameter(String),
    #[error("direct product is not a skew morphism: power value {value} at {side} element {element} is not 1 mod {modulus}")]
    ProductRejected {
        side: &'static str,
        element: usize,
        value: u64,
        modulus: u64,
    },
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
