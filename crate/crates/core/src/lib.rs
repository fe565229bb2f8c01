//! Abstract Young representations of finite Coxeter groups and their
//! Iwahori–Hecke algebras, in exact arithmetic.

pub mod ayrep;
pub mod bitset;
pub mod cells;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod induce;
pub mod matrix;
pub mod scalars;
pub mod specht;

pub use error::{Error, Result};
