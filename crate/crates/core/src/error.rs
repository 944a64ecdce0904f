use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("degree {0} is too small (need at least 2)")]
    DegreeTooSmall(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no prime q = 1 + (2k-1)*{n} found for k <= {limit}")]
    SearchExhausted { n: u64, limit: u64 },

    #[error("prime {ell} divides the leading coefficient")]
    LeadingCoefficientVanishes { ell: u64 },
    #[error("degree {0} is outside the supported group tables (5, 7, 11, 13, 17, 19, 23)")]
    UnsupportedDegree(usize),
    #[error("cycle type {cycle_type} observed mod {prime} lies in no candidate group")]
    InconsistentEvidence { prime: u64, cycle_type: String },

    #[error("degree {0} is not a prime >= 5")]
    NonPrimeDegree(usize),
    #[error("no irreducibility certificate found (effort {0}); pass an explicit assertion to override")]
    Uncertified(usize),
    #[error("real roots {r} + 2 * complex pairs {k} != degree {p}")]
    InconsistentCounts { p: usize, r: usize, k: usize },

    #[error("cyclotomic elements with different conductors {0} and {1}")]
    MixedConductor(u64, u64),
    #[error("{t} is not coprime to {q}")]
    NotCoprime { t: u64, q: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("element is not fixed by the requested automorphism power")]
    NotFixed,
    #[error("coefficient of x^{0} is not rational")]
    NonRationalCoefficient(usize),
    #[error("conjugates of the element are not pairwise distinct")]
    RepeatedConjugate,

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unexpected identifier `{name}` at {pos}: only `x` is allowed")]
    NonUnivariate { name: String, pos: usize },
    #[error("group table line {line}: {msg}")]
    TableFormat { line: usize, msg: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Errors caused by malformed user input rather than mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::NonUnivariate { .. } | Error::TableFormat { .. } | Error::Io(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
