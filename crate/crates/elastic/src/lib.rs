//! Command line tool and local HTTP service around `elastic-core`.
//!
//! JSON output from both front ends goes through [`json`], which writes
//! numbers with 17 significant digits.

pub mod api;
pub mod json;
pub mod render;
pub mod server;
pub mod table;
