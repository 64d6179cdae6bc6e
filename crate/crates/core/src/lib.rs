//! Profunctor calculus over finite categories, with exhaustive validators
//! for monoidal, braided, balanced, traced, autonomous and star-autonomous
//! structure, and the coend machinery relating the two levels.
//!
//! Everything is finite and checked by enumeration: categories are dense
//! integer tables, profunctors are finite element sets with explicit action
//! tables, and coends are union-find quotients of tagged pairs. All values
//! are immutable after construction and every operation is a pure function.

pub mod fincat;
pub mod profcalc;
pub mod report;
pub mod stock;

pub mod monoidal;
pub mod traced;

pub mod duality;
pub mod staraut;

pub use fincat::{FiniteCategory, Functor, Idempotent, MorId, ObjId};
pub use profcalc::{CoendPresentation, Profunctor, TwoCell};
pub use report::{Budget, StructuralError, ValidationReport, Violation};
