//! File formats, reports, reference oracles, parallel drivers and the
//! command-line interface on top of `c4book-core`.

pub mod cli;
pub mod io;
pub mod oracle;
pub mod parallel;
pub mod report;
pub mod reproduce;
