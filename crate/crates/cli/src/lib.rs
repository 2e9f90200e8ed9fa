//! Library backing the `lcmbinom` binary: rendering, b-file handling, and
//! verification suites over the lcm-binomial triangle.

pub mod bfile;
mod error;
pub mod render;
pub mod verify;

pub use error::CliError;
