//! Ordered simplicial complexes and quasi-matroidal classes.

pub mod activities;
pub mod axioms;
pub mod cli;
pub mod complex;
pub mod error;
pub mod generate;
pub mod laplacian;
pub mod multicomplex;
pub mod oracle;
pub mod polynomial;
pub mod posets;
pub mod shifted;
pub mod stanley;
pub mod sweep;
pub mod tutte;
pub mod vertex_set;

pub use complex::{ComplexFile, OrderedComplex, Shuffle};
pub use error::{Error, Result};
pub use polynomial::{BivariatePolynomial, UnivariatePolynomial};
pub use vertex_set::VertexSet;
