//! Diagram monoids with circles, their normal forms, the free symmetric
//! self-adjunction on one object and its matrix representation.

pub mod adjunction;
pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod matrep;
pub mod par;
pub mod semantics;
pub mod term;
pub mod verify;

pub use diagram::{Diagram, SKDiagram};
pub use error::{Error, Result};
pub use term::{Generator, NormalForm, Term};
