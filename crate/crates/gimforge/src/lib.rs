//! Exact arithmetic toolkit for generalized intersection matrices.

pub mod arith;
pub mod braid;
pub mod classify;
pub mod cli;
pub mod error;
pub mod gim;
pub mod io;
pub mod liealg;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
