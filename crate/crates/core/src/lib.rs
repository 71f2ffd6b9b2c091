pub mod cli;
pub mod error;
pub mod groebner;
pub mod lur;
pub mod numeric;
pub mod quotient;
pub mod uniroot;
pub mod polynomial;

pub use error::{Error, Result};
