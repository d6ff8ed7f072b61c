//! Standard-library companion to `jetres-core`: JSON schemas for
//! polynomials, fans, jet graphs, and verification reports, plus the
//! theorem-table checks behind the `jetres` command-line tool.

pub mod json;
pub mod theorem;
