#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactarith;
pub mod groups;
pub mod cocycle;
pub mod bicrossed;
pub mod comodrep;
pub mod classify;
pub mod corpus;

pub use error::{HopfError, Result};
