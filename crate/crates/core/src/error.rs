use core::fmt;

/// Errors reported by the arithmetic, algebra and counting layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A group index or count argument was zero.
    Zero,
    /// Two elements from different dihedral groups were combined.
    GroupMismatch {
        /// Index of the group the operation expected.
        expected: u64,
        /// Index of the group that was supplied.
        found: u64,
    },
    /// A value exceeded the limit of the operation it was passed to.
    OutOfRange {
        /// Which quantity was out of range.
        what: &'static str,
        /// The offending value.
        value: u128,
        /// The inclusive upper limit.
        limit: u128,
    },
    /// A pair of generator images does not satisfy the defining relations.
    NotAHomomorphism,
    /// Text could not be parsed as a dihedral element.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Zero => f.write_str("value must be a positive integer"),
            Error::GroupMismatch { expected, found } => {
                write!(
                    f,
                    "element of D_{found} used where D_{expected} was expected"
                )
            }
            Error::OutOfRange { what, value, limit } => {
                write!(f, "{what} {value} exceeds the limit {limit}")
            }
            Error::NotAHomomorphism => {
                f.write_str("generator images do not satisfy the dihedral relations")
            }
            Error::Parse(msg) => write!(f, "invalid element: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
