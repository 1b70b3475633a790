//! Cellular resolutions of generalized Ferrers ideals and their specializations.

pub mod complex;
pub mod error;
pub mod linalg;
pub mod monomial;
pub mod resolution;
pub mod shape;
pub mod graphs;
pub mod oracle;
