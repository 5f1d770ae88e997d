//! Automatic-structure toolkit for the Schreier graph of a self-similar
//! group action on the binary tree boundary.
//!
//! The library has three independent views of the same graph and the
//! machinery to prove them equal at desk scale:
//!
//! * [`schreier`] — the transducer action on canonical vertex encodings,
//!   built from the Mealy machine in [`mealy`];
//! * [`automatic`] — finite acceptors (over [`dfa`] and the padded-pair
//!   alphabet of [`conv`]) for the vertex language and every labelled edge
//!   relation, verified against brute-force oracles;
//! * [`intline`] — the integer-line construction with chord families, tied
//!   back to the action by a discovered affine correspondence.
//!
//! [`growth`] measures ball growth in either view and evaluates the
//! intermediate-growth signatures.

pub mod automatic;
pub mod conv;
pub mod dfa;
pub mod error;
pub mod growth;
pub mod intline;
pub mod mealy;
pub mod report;
pub mod schreier;

pub use error::{Error, Result};
pub use mealy::{GeneratorLetter, GroupWord, Letter, MealyMachine, Sign};
pub use report::VerificationReport;
pub use schreier::{ActionModel, EncodedVertex, OmegaSpec};
