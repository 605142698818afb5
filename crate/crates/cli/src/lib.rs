//! Pieces of the `qeuler` command shared with its tests: the JSON record
//! format and the text/LaTeX renderers.

pub mod record;
pub mod render;

pub use record::{NumberRow, OutputRecord, PolynomialRow, RecordKind};
