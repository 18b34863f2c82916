//! Free full-evaluation logic and free short-circuit logic, decided through
//! evaluation trees.
//!
//! Terms are evaluated to binary decision trees ([`fe`], [`se`], [`ce`]). Two
//! terms are equal in the free logic exactly when their trees coincide, and
//! each logic has a normal form ([`normalize`]) that is unique per tree.
//! [`decompose`] inverts evaluation back to normal forms.

pub mod decompose;
pub mod equiv;
pub mod error;
pub mod evaltree;
pub mod normalize;
pub mod terms;

pub use error::{Error, ParseError, Result};
pub use evaltree::{ce, fe, from_traces, memorize, parse_tree, se, traces, HoleTree, Trace, Tree};
pub use terms::{classify_language, parse_term, Atom, Language, Languages, Term};
