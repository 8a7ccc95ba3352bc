//! Command-line lab for `sharpnorm-core`: file formats, run manifests,
//! tolerance configuration and the check suites behind `sharpnorm certify`.

pub mod cli;
pub mod format;
pub mod manifest;
pub mod signal_io;
pub mod signals;
pub mod suites;
pub mod tolerances;
