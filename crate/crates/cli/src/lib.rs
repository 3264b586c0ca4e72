//! Problem files, report formatting and exit codes for the `jetforge` binary.

pub mod commands;
pub mod json;
pub mod problem;

pub use commands::{
    fiber_cmd, flatness_cmd, jetify_cmd, jetify_json, smooth_cmd, tangent_cmd, verify_cmd, CliError, Output, EXIT_ERROR,
};
pub use json::{poly_from_terms, JsonJetGenerator, JsonJetIdeal, JsonTerm};
pub use problem::{ProblemError, ProblemFile};
