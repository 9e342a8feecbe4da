//! Strain-gradient (Mindlin) elastic solids equivalent to dilute two-phase
//! composites.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod admissibility;
pub mod assembly;
pub mod cases;
pub mod discrepancy;
pub mod error;
pub mod moduli;
pub mod rve;
pub mod tables;
pub mod tensor;

pub use error::{Error, Result};
