//! A finite-model workbench for S5-subordination algebras and their
//! completions: round-ideal frames, MacNeille completions, booleanization,
//! and the dual finite-space constructions, together with a small text
//! format for defining instances and a deterministic suite runner that
//! checks every structural law on exhaustively enumerated or seeded
//! populations of finite structures.

pub mod bitrel;
pub mod boolcore;
pub mod dsl;
pub mod duality;
pub mod frames;
pub mod functors;
pub mod harness;
pub mod morphclass;
pub mod partition;
pub mod rng;
pub mod subord;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("atom count {0} outside the supported range 1..=12")]
    AtomCount(u32),

    #[error("element {mask:#x} out of range for an algebra with {n_atoms} atoms")]
    ElementRange { mask: u32, n_atoms: u32 },

    #[error("mixed algebras: expected {expected} atoms, got {got}")]
    AlgebraMismatch { expected: u32, got: u32 },

    #[error("{what} capped at {limit}, got {got}")]
    CapExceeded {
        what: &'static str,
        limit: u32,
        got: u32,
    },

    #[error("family tagged {kind} fails the tag invariant: {detail}")]
    BadFamilyTag { kind: &'static str, detail: String },

    #[error("partition must cover at least one point")]
    EmptyPartition,

    #[error("partition label {label} out of range for {points} points")]
    PartitionLabelRange { label: u32, points: usize },

    #[error("malformed partition: {0}")]
    PartitionShape(String),

    #[error("not a valid frame: {0}")]
    InvalidFrame(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
