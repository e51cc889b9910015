pub mod affine;
pub mod error;
pub mod json;
pub mod kcode;
pub mod order_lab;
pub mod shapes;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
