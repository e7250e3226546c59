//! Exact computer algebra for the Harish-Chandra images of higher-order
//! quantum Casimir elements of types B, C and D.

pub mod basis_change;
pub mod casimir;
pub mod error;
pub mod exact_arith;
pub mod root_data;
pub mod verify;
pub mod weyl_charring;

pub use error::{Error, Result};
