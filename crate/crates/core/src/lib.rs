pub mod catalog;
pub mod construct;
pub mod error;
pub mod game;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod quantum;
pub mod screen;
pub mod structures;
pub mod subset;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use subset::Subset;
