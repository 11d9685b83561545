//! Batch front end: algebra input, model runs, verification and table rendering.

pub mod document;
pub mod input;
pub mod run;

pub use document::{AlgebraDocument, DocumentError};
pub use input::{load_file, parse_preset, InputError};
pub use run::{is_internal, run, Coefficients, IntegralRow, ResultTable};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for invalid input or a failed validation.
pub const EXIT_VALIDATION: i32 = 1;
/// Exit status for a broken internal invariant, such as `d² ≠ 0`.
pub const EXIT_INTERNAL: i32 = 2;
