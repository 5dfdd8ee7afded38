use crate::group::Family;
use crate::quad::Ring;

/// Every failure the library reports. Variants are grouped by the module that raises them.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature is not hyperbolic (normalized area {0})")]
    NonHyperbolic(String),
    #[error("signature is already Fuchsian")]
    AlreadyFuchsian,
    #[error("order {order} does not give an integral genus >= 2 for {signature}")]
    NonIntegralGenus { signature: String, order: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{p} does not split in the {ring} integers")]
    DoesNotSplit { p: u64, ring: Ring },
    #[error("zero has no quotient ring")]
    ZeroModulus,
    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("element or family does not belong to this group")]
    SpecMismatch,
    #[error("family {0} carries no orientation-reversing extension")]
    FamilyUnsupported(Family),

    #[error("genus {0} is outside the classified range (need g > 5)")]
    GenusTooSmall(u64),
    #[error("action {0} is not full")]
    NotFull(String),
    #[error("action {0} failed validation: {1}")]
    Invalid(String, String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
    }
}
