//! Pattern avoidance in generic rectangulations.
//!
//! The crate models rectangulations as compact integer drawings, enumerates
//! them exhaustively to serve as an oracle, and implements generating trees
//! and bijections that relate pattern-avoiding classes to inversion
//! sequences, Dyck paths and compositions.

pub mod bijections;
pub mod error;
pub mod gentree;
pub mod invseq;
pub mod par;
pub mod paths;
pub mod patterns;
pub mod rect;
pub mod render;
pub mod series;
pub mod universe;
pub mod verify;

pub use error::{Error, Result};
pub use par::Execution;
pub use rect::{Rect, RectDrawing};
