//! Exact face-coloring state sums for framed links.
//!
//! The crate parses planar diagram (PD) codes into combinatorial maps,
//! enumerates admissible black/white face colorings, and evaluates the
//! resulting state sum exactly in the cyclotomic ring Z[ζ₅]. The weights
//! come from a symbolic model whose invariance equations are verified by
//! polynomial reduction modulo a Groebner basis. A Kauffman-bracket Jones
//! polynomial evaluator is included for cross-checking chirality detection,
//! and a seeded fuzzer exercises invariance under local moves.
//!
//! Two quadruples are computed per diagram: `statesum::invariant` is
//! unchanged by every Reidemeister move (ambient isotopy), while
//! `statesum::framed_invariant` keeps the blackboard framing and rotates
//! by a fifth root of unity per curl (framed isotopy). Both conjugate
//! under mirroring.
//!
//! ```
//! use facesum::{diagram::Diagram, statesum};
//!
//! let trefoil = Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")?;
//! let value = statesum::invariant(&trefoil)?;
//! assert_eq!(value.to_string(), "⌊1,-1,4,1⌋");
//! // The quadruple is not its own conjugate, so the trefoil is chiral.
//! assert!(!statesum::amphichiral_obstruction(value));
//! assert_eq!(statesum::invariant(&trefoil.mirror())?, value.conj());
//! # Ok::<(), facesum::diagram::DiagramError>(())
//! ```

pub mod braid;
pub mod cyclotomic;
pub mod jones;
pub mod diagram;
pub mod fuzz;
pub mod polyring;
pub mod statesum;
