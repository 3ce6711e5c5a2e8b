//! Exact power domination, zero forcing and domination polynomials.
//!
//! The crate is organised bottom-up: [`graph`] and [`polynomial`] supply the
//! value types, [`propagation`] implements the colour-change rules and fort
//! machinery, [`counting`] enumerates vertex subsets to produce polynomials,
//! [`closed_forms`] and [`threshold`] compute them by formula, [`roots`]
//! analyses their zeros and [`catalog`] runs audits over graph collections.

pub mod catalog;
pub mod closed_forms;
pub mod counting;
pub mod error;
pub mod graph;
pub mod polynomial;
pub mod propagation;
pub mod roots;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet};
pub use polynomial::IntPolynomial;
