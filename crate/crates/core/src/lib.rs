pub mod arith;
pub mod cli;
pub mod error;
pub mod generators;
pub mod invariants;
pub mod params;
pub mod render;
pub mod rowspan;
pub mod square_tiled;
pub mod verify;

pub use error::{Error, Result};
pub use params::CurveParams;
