//! Monomial ideal engine for deciding when the maximal ideal is associated
//! to powers of a monomial ideal.

pub mod assoc;
pub mod criteria;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod parse;
pub mod properties;
pub mod random;
pub mod report;
pub mod reproduce;
pub mod ring;
pub mod script;

pub use assoc::{AssSet, CornerWitness};
pub use decompose::IrreducibleComponent;
pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, MonomialPrime};
pub use ring::{Limits, Monomial, RingContext};
