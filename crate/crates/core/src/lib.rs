//! Highest-weight theory of twisted Yangians for the orthogonal and
//! symplectic symmetric pairs, computed exactly over ℚ.

pub mod drinfeld;
pub mod exactalg;
pub mod lowrank;
pub mod reflection;
pub mod tensorrep;
mod error;

pub use error::Error;
