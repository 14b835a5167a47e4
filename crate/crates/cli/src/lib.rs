//! Matrix file format, renderers and command dispatch for the `matpfd`
//! binary.

pub mod input;
pub mod render;
pub mod run;

pub use input::{parse_hints, parse_matrix, render_matrix_file, InputError};
pub use render::Format;
pub use run::{run_command, Command, Outcome, Request, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
