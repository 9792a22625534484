//! Combinatorial kernel for essential simple closed curves on punctured
//! surfaces of genus at most two.
//!
//! Curves are stored in normal coordinates with respect to a fixed base
//! triangulation per surface; all operations (intersection numbers, Dehn and
//! half twists, complement decompositions, unique-determination queries and
//! rigid expansions) are exact integer/rational computations.

pub mod coords;
pub mod curve;
pub mod mapping;
pub mod error;
pub mod enumerate;
pub mod expansion;
pub mod families;
pub mod geom;
pub mod overlay;
pub mod surface;
pub mod trace;

pub use error::{CurveError, ExpansionError, FamilyError, SurfaceError};
pub use surface::{build_base_triangulation, SurfaceSpec, Triangulation};
