//! Exact symbolic computation of two-dimensional chiral operations attached
//! to Laman graphs.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`] provides rational polynomials, rational functions with
//!   factored denominators and exterior forms.
//! * [`graphs`] holds directed multigraphs with Laplacians, spanning trees,
//!   cut sets and Green's functions.
//! * [`laman`] recognizes Laman graphs and builds them by Henneberg moves.
//! * [`jouanolou`] embeds the Jouanolou algebra into rational forms and
//!   checks its identities.
//! * [`chiral`] runs the weight recursion and integrates over box
//!   parameters.
//! * [`sampling`] has seeded random generators shared by tests and the CLI.

pub mod chiral;
pub mod error;
pub mod exactalg;
pub mod graphs;
pub mod jouanolou;
pub mod laman;
pub mod sampling;

pub use error::{Error, Result};
