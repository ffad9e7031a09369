use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial does not split over Q: {0}")]
    NonRationalRoot(String),
    #[error("rational function is not proper at infinity: {0}")]
    ImproperAtInfinity(String),
    #[error("unsupported symmetric pair: {0}")]
    UnsupportedPair(String),
    #[error("p = q: the scalar function g(u) is undefined")]
    DegeneratePQ,
    #[error("restriction index out of range: {0}")]
    BadShiftRange(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("weight is not associable: {0}")]
    NotAssociable(String),
    #[error("no symmetric square root: {0}")]
    NoSymmetricSquareRoot(String),
    #[error("string condition violated: {0}")]
    StringConditionViolated(String),
    #[error("no rational normalizer")]
    NoRationalNormalizer,
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not classifiable: {0}")]
    NotClassifiable(String),
    #[error("degree limit exceeded: {0}")]
    DegreeLimit(String),
}

impl Error {
    /// Variant name, as reported by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonRationalRoot(_) => "NonRationalRoot",
            Error::ImproperAtInfinity(_) => "ImproperAtInfinity",
            Error::UnsupportedPair(_) => "UnsupportedPair",
            Error::DegeneratePQ => "DegeneratePQ",
            Error::BadShiftRange(_) => "BadShiftRange",
            Error::NoSolution(_) => "NoSolution",
            Error::NotAssociable(_) => "NotAssociable",
            Error::NoSymmetricSquareRoot(_) => "NoSymmetricSquareRoot",
            Error::StringConditionViolated(_) => "StringConditionViolated",
            Error::NoRationalNormalizer => "NoRationalNormalizer",
            Error::InvalidTuple(_) => "InvalidTuple",
            Error::Parse(_) => "Parse",
            Error::NotClassifiable(_) => "NotClassifiable",
            Error::DegreeLimit(_) => "DegreeLimit",
        }
    }
}
