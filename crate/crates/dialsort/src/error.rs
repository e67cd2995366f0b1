//! Error type shared across the crate.

use std::error;
use std::fmt;

/// Errors reported by sorting, histogram, and simulator operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Universe of size zero was requested; keys need at least one cell.
    EmptyUniverse,
    /// Universe exceeds the library ceiling of 2^32 cells.
    UniverseTooLarge { size: u64 },
    /// The allocator could not provide the requested number of cells.
    AllocationFailed { cells: u64 },
    /// A key fell outside `[0, universe)`. `index` is the position of the
    /// offending key in the input sequence, when one exists.
    KeyOutOfRange {
        key: u32,
        index: Option<usize>,
        universe: u64,
    },
    /// A histogram cell would exceed its 64-bit capacity.
    CountOverflow { key: u32 },
    /// A caller-supplied buffer did not have the required length.
    BufferSizeMismatch { expected: usize, actual: usize },
    /// `range_count` arguments violated `0 <= lo <= hi < universe`.
    InvalidRange { lo: u32, hi: u32, universe: u64 },
    /// Histograms over different universes cannot be merged.
    UniverseMismatch { left: u64, right: u64 },
    /// A worker count of zero was supplied.
    ZeroWorkers,
    /// A lane count of zero was supplied.
    ZeroLanes,
    /// A worker failed during parallel ingestion; the whole operation aborts.
    WorkerFailed { worker: usize, source: Box<Error> },
    /// A codec produced an index outside its declared universe.
    CodecIndexOutOfRange { index: u64, universe: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyUniverse => write!(f, "universe must contain at least one key"),
            Error::UniverseTooLarge { size } => {
                write!(f, "universe of {size} cells exceeds the 2^32 ceiling")
            }
            Error::AllocationFailed { cells } => {
                write!(f, "failed to allocate histogram storage for {cells} cells")
            }
            Error::KeyOutOfRange {
                key,
                index,
                universe,
            } => match index {
                Some(i) => write!(
                    f,
                    "key {key} at index {i} out of range for universe of size {universe}"
                ),
                None => write!(f, "key {key} out of range for universe of size {universe}"),
            },
            Error::CountOverflow { key } => {
                write!(f, "count for key {key} overflowed 64 bits")
            }
            Error::BufferSizeMismatch { expected, actual } => {
                write!(f, "buffer holds {actual} keys but {expected} are required")
            }
            Error::InvalidRange { lo, hi, universe } => write!(
                f,
                "range [{lo}, {hi}] invalid for universe of size {universe}"
            ),
            Error::UniverseMismatch { left, right } => write!(
                f,
                "histograms over universes of size {left} and {right} cannot be combined"
            ),
            Error::ZeroWorkers => write!(f, "worker count must be at least 1"),
            Error::ZeroLanes => write!(f, "lane count must be at least 1"),
            Error::WorkerFailed { worker, source } => {
                write!(f, "worker {worker} failed: {source}")
            }
            Error::CodecIndexOutOfRange { index, universe } => write!(
                f,
                "codec produced index {index} outside universe of size {universe}"
            ),
        }
    }
}

impl error::Error for Error {
    fn source(&self) -> Option<&(dyn error::Error + 'static)> {
        match self {
            Error::WorkerFailed { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
