//! Exact computational toolkit for jet schemes of surface singularities in
//! three-space: sparse integer polynomials in jet variables, the contact
//! walk that discovers essential weight vectors, Newton polyhedra with
//! their dual fans, regular (unimodular) subdivisions, and toric chart
//! certificates for embedded resolutions.
//!
//! Everything is exact: coefficients are arbitrary-precision integers,
//! rational comparisons use explicit cross-multiplication or big
//! rationals, and all containers iterate in a deterministic order.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod fan;
pub mod jets;
pub mod lin;
pub mod newton;
pub mod poly;
pub mod toric;
