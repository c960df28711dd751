pub mod classify;
pub mod cli;
pub mod contiguous;
pub mod diffop;
pub mod error;
pub mod exactalg;
pub mod numerics;
pub mod paramgroup;
pub mod qterm;

pub use error::{Error, Result};
