use core::fmt;

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parts were not weakly decreasing.
    NotAPartition,
    CellOutOfDiagram { row: usize, col: usize },
    /// A beta-set must be non-empty with distinct elements.
    InvalidBetaSet,
    /// Requested beta-set size is below the partition length.
    SizeTooSmall { length: usize, size: usize },
    InvalidMove { from: usize, to: usize },
    NotPrime(u64),
    SizeMismatch { partition: usize, cycle_type: usize },
    BadResidue(i64),
    InvalidLabel(String),
    OutOfTheoremRange(String),
    PreconditionViolation(String),
    DegenerateCore(usize),
    ExhaustedSearch { n: usize, p: u64, c: usize },
    CertificateInvalid(String),
    ClaimViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition => f.write_str("parts are not weakly decreasing"),
            Error::CellOutOfDiagram { row, col } => {
                write!(f, "cell ({row},{col}) is not in the Young diagram")
            }
            Error::InvalidBetaSet => f.write_str("beta-set must be non-empty with distinct elements"),
            Error::SizeTooSmall { length, size } => {
                write!(f, "beta-set size {size} is smaller than partition length {length}")
            }
            Error::InvalidMove { from, to } => write!(f, "cannot move bead {from} to {to}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::SizeMismatch { partition, cycle_type } => write!(
                f,
                "partition of {partition} cannot be evaluated on a cycle type of {cycle_type}"
            ),
            Error::BadResidue(r) => write!(f, "residue must be 1 or -1, got {r}"),
            Error::InvalidLabel(why) => write!(f, "invalid block label: {why}"),
            Error::OutOfTheoremRange(why) => write!(f, "out of theorem range: {why}"),
            Error::PreconditionViolation(why) => write!(f, "precondition violated: {why}"),
            Error::DegenerateCore(c) => write!(f, "staircase core of {c} rows has no split classes"),
            Error::ExhaustedSearch { n, p, c } => {
                write!(f, "search budget exhausted for n={n}, p={p}, c={c}")
            }
            Error::CertificateInvalid(why) => write!(f, "certificate invalid: {why}"),
            Error::ClaimViolated(why) => write!(f, "claim violated: {why}"),
        }
    }
}
