//! Exact arithmetic for Drinfeld modules over finite fields.

pub mod action;
pub mod apoly;
pub mod census;
pub mod drinfeld;
pub mod endring;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod ftilde;
pub mod golden;
pub mod io;
pub mod lattice;
pub mod orders;
pub mod skew;
pub mod text;

pub use error::{Error, Result};
