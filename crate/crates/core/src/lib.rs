//! Star graphs of cyclic presentations, generalized polygon recognition and the
//! classification of special cyclic presentations.
//!
//! The main entry points are [`word::presentation_flags`] to build a presentation,
//! [`star::cyclic_star_graph`] for its star graph and [`classify::classify`] for the
//! speciality verdict.

pub mod classify;
pub mod diffset;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;
pub mod par;
pub mod polygon;
pub mod report;
pub mod smallcancel;
pub mod star;
pub mod sweep;
pub mod word;

pub use error::{Error, Result};
pub use graph::{Bound, Multigraph};
pub use word::{parse_word, presentation_flags, CyclicPresentation, SignClass, Word};
