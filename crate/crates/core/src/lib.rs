//! Finite strict semi-monoidal categories and their units.
//!
//! Everything here is decided by exhaustive enumeration over explicit
//! composition and tensor tables:
//!
//! * [`fincat`]: finite categories, functors, natural transformations;
//! * [`tensor`]: strict tensor products, cancellable objects and arrows;
//! * [`units`]: LR units, Saavedra units, their correspondence, unit
//!   morphisms and the category of units;
//! * [`monfun`]: multiplicative functors, unit compatibilities (strong and
//!   lax), lifts to unit categories, monoidal transformations, monoids;
//! * [`fair`]: gentle functors and fair presentations;
//! * [`gen`]: semigroup deloopings and other generated test stock.

pub mod error;
pub mod exec;
pub mod fair;
pub mod fincat;
pub mod fixtures;
pub mod gen;
pub mod monfun;
pub mod tensor;
pub mod units;
pub mod validation;

pub use error::{Error, Result};
pub use exec::{AuditConfig, Budget, ExecMode};
pub use fincat::{CategoryBuilder, FinCategory, Functor, MorId, Morphism, NatTransformation, ObjId};
pub use tensor::SemiMonCat;
pub use units::{LrUnit, SaavedraUnit};
pub use validation::{ValidationReport, Violation};
