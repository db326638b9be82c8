use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    InvalidDegree(u32),
    FieldTooLarge { p: u32, k: u32 },
    /// An element whose encoding does not belong to the field it was used with.
    ElementOutOfRange { value: u32, q: u32 },
    DivisionByZero,
    ZeroVector,
    NotPrimePower(u64),
    /// Parameters outside the range for which a construction is defined.
    OutOfRange(String),
    /// A structural statement about a polarity graph failed to hold.
    FrameInvariant(String),
    /// A construction produced a graph that the verifier rejected.
    Construction(String),
    Graph6(String),
    /// A predicate defined only on C4-free graphs was given a graph with this 4-cycle.
    ContainsC4([usize; 4]),
    OrderMismatch { expected: usize, actual: usize },
    VacuousParameters { n: u64 },
    BudgetExceeded,
    TrialsExhausted { trials: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidDegree(k) => write!(f, "extension degree must be at least 1, got {k}"),
            Error::FieldTooLarge { p, k } => write!(f, "field order {p}^{k} exceeds 2^16"),
            Error::ElementOutOfRange { value, q } => {
                write!(f, "element encoding {value} is not in a field of order {q}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ZeroVector => f.write_str("the zero vector is not a projective point"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::OutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::FrameInvariant(msg) => write!(f, "frame invariant violated: {msg}"),
            Error::Construction(msg) => write!(f, "construction failed verification: {msg}"),
            Error::Graph6(msg) => write!(f, "malformed graph6: {msg}"),
            Error::ContainsC4([a, b, c, d]) => write!(f, "graph contains the 4-cycle {a}-{b}-{c}-{d}"),
            Error::OrderMismatch { expected, actual } => {
                write!(f, "graph has {actual} vertices, expected {expected}")
            }
            Error::VacuousParameters { n } => {
                write!(f, "parameters are vacuous for n = {n} (m would be < 1)")
            }
            Error::BudgetExceeded => f.write_str("budget exceeded"),
            Error::TrialsExhausted { trials } => {
                write!(f, "no successful trial in {trials} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}
