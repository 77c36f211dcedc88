//! Discrete curvature, Poincaré–Hopf indices and proper-coloring probability
//! spaces on finite simple graphs, in exact rational arithmetic.
//!
//! The curvature `K(x)` of a vertex is the expected Poincaré–Hopf index of a
//! uniformly random proper coloring, for any color count at least the
//! chromatic number. Summing over vertices gives Gauss–Bonnet.
//!
//! ```
//! use chromacurv::{coloring::ColoringSpace, curvature, generators, rational::rat};
//!
//! let g = generators::octahedron();
//! assert_eq!(curvature::curvatures(&g), vec![rat(1, 3); 6]);
//! let space = ColoringSpace::enumerate(&g, 3).unwrap();
//! assert_eq!(space.len(), 6);
//! assert_eq!(space.index_expectation().unwrap(), curvature::curvatures(&g));
//! ```

pub mod cli;
pub mod coloring;
pub mod curvature;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod polynomial;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::Graph;
pub use rational::Rational;
