//! Knotoid diagrams as (extended) oriented Gauss codes: parsing, embeddings,
//! Reidemeister moves, polynomial invariants, double branched covers, and the
//! tabulation pipeline for prime knotoids in the plane and in the sphere.

pub mod embed;
pub mod error;
pub mod gauss;
pub mod enumerate;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod state;

pub use error::{InvariantError, NotRealizable, ParseError};
