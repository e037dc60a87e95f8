//! Exact algebraic machinery for high-dimensional knots.
//!
//! The crate is organised bottom-up:
//!
//! - [`laurent`]: Laurent polynomials over the integers and their determinants.
//! - [`forms`]: integer symmetric bilinear forms, exact signatures and the
//!   standard lattices (hyperbolic plane, E8, the Kummer form).
//! - [`seifert`]: Seifert matrices of odd-dimensional knots, Alexander
//!   polynomials, signatures and the knot models built from them.
//! - [`spin`]: the spinning operator on knot models.
//! - [`projection`]: compositional projection expressions, lifts, the
//!   classification of lifts by over/under assignments and the liftability
//!   rules for immersed spheres.
//! - [`handles`]: signed double points on immersed disks, framings and the
//!   intersection forms of framed-link handlebodies.
//! - [`io`]: text formats and expression grammars, with positioned errors.
//! - [`cli`]: the command-line front end used by the `hdknot` binary.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod forms;
pub mod handles;
pub mod io;
pub mod laurent;
mod matrix;
pub mod projection;
pub mod seifert;
pub mod spin;

pub use error::{Error, Result};
pub use forms::{FormInvariants, SymForm};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use projection::{ImmersedSphereExpr, LiftAssignment, ProjectionExpr, Sign};
pub use seifert::{KnotModel, SeifertMatrix};
