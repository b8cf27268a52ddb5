//! Transaction costs as a two-player game.
//!
//! Two actors each choose an effort level with a direct cost; together the
//! choices fix the probability of losing the exposure. This crate finds the
//! cost-minimal pair and how it moves with exposure ([`efficiency`]), the
//! game induced by a cost-sharing rule and its equilibria ([`sharing`]),
//! and the follow-on game of disputing the split ([`dispute`]). The
//! [`cli`] module is the file-and-report front end behind the `tcgame`
//! binary.
//!
//! Every solver is generic over [`Scalar`]: use `f64` for speed or
//! [`Rational`] for exact results.

pub mod cli;
pub mod dispute;
pub mod efficiency;
pub mod error;
pub mod grid;
pub mod linalg;
pub mod lp;
pub mod model;
pub mod scalar;
pub mod sharing;

pub use error::{Error, Result};
pub use grid::{Cell, Grid};
pub use model::{ChoiceSet, CostBreakdown, Diagnostic, Exposure, TransactionType};
pub use scalar::{Rational, Scalar};
