//! Exact linear algebra for Cartan geometries and BGG solution operators.

pub mod catalog;
pub mod connection;
pub mod coords;
pub mod error;
pub mod expr;
pub mod extension;
pub mod kostant;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod solutions;
pub mod sparse;
#[cfg(test)]
mod testutil;

pub use error::{BggError, Result};
pub use matrix::Matrix;
pub use rational::Rational;
pub use scalar::Scalar;
