//! Knot Floer invariants of (1,1)-knots.
//!
//! The pipeline decodes four-parameter diagram descriptions into
//! doubly-pointed genus-1 Heegaard diagrams, realizes them as exact
//! rational polylines, enumerates holomorphic-disk counts combinatorially
//! (immersed disk fillings in the universal cover of the torus), and
//! derives graded homology, the Alexander polynomial, tau, and slice-genus
//! verdicts.

pub mod algebra;
pub mod diagram;
pub mod floer;
pub mod geometry;
pub mod gradings;
pub mod invariants;
pub mod pipeline;
pub mod reference;
pub mod render;
pub mod report;
pub mod verify;
