//! The Ackermannian Goodstein process: Ackermann normal forms in base `k`,
//! base change, symbolic predecessor, and the fixed-point-free Veblen
//! notation below Gamma_0 that bounds the process.

pub mod cli;
pub mod error;
pub mod goodstein;
pub mod nat;
pub mod nf;
pub mod oracle;
pub mod ordinal;
pub mod term;
pub mod verify;

pub use error::{Error, Result};
pub use nat::Nat;
pub use term::{Ack, Block, Term, Veblen};

/// Hereditary base-`k` Ackermann term.
pub type NfTerm = Term<Ack>;
/// Fixed-point-free Veblen term.
pub type OrdTerm = Term<Veblen>;
