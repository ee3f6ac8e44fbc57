//! File formats and rendering behind the `spanarea` binary, exposed as a
//! library so integration tests can parse what the binary writes.

pub mod formats;
pub mod svg;
