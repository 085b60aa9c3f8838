//! SCAN command language: grammar, interpreter, exhaustive enumeration, and
//! the train/test split builders used by the experiments.
//!
//! All operations here are pure functions on immutable values and safe to
//! call concurrently.

pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod grammar;
pub mod interp;
pub mod splits;
pub mod token;

pub use enumerate::{enumerate_all, Pair, COMMAND_COUNT, MAX_ACTION_LEN, MAX_COMMAND_LEN};
pub use error::ScanError;
pub use grammar::{parse, ParseTree};
pub use interp::{execute, interpret};
pub use splits::{DatasetSplit, SplitKind};
pub use token::{ActionSequence, ActionToken, Command, CommandToken};
