//! Eccentricity-based topological indices (total eccentricity, average
//! eccentricity, eccentric connectivity, Randić), constructors for the
//! extremal unicyclic and bicyclic families, and exhaustive sweeps that check
//! which conjugated graphs, those with a perfect matching, are extremal.
//!
//! ```
//! use eccx_core::{families::FamilySpec, indices::total_eccentricity};
//!
//! let g = FamilySpec::U1Bar(10).build().unwrap();
//! assert_eq!(total_eccentricity(&g).unwrap(), 32);
//! ```

pub mod blocks;
pub mod canon;
pub mod eccentricity;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod indices;
pub mod io;
pub mod matching;

pub use error::{Error, Result};
pub use graph::Graph;
