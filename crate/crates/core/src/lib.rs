//! Combinatorics of colored Khovanov-Rozansky complexes of braids: grading
//! shifts, diagonals and zones, resolution censuses, homological order
//! bounds, closed web evaluation and HOMFLY-PT stabilization.

pub mod bounds;
pub mod braid;
pub mod census;
pub mod diagonal;
pub mod error;
pub mod homfly;
pub mod poly;
pub mod quantum;
pub mod shift;
pub mod stable;
pub mod web;

pub use error::{Error, Result};
