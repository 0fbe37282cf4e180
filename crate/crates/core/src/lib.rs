//! Toric cluster variables of the dP3 quiver computed four ways: by mutation,
//! by closed forms, by dimer partition functions on brane-tiling subgraphs and
//! by taut double-dimer enumeration.

pub mod cluster;
pub mod contour;
pub mod error;
pub mod formula;
pub mod geom;
pub mod laurent;
pub mod matching;
pub mod taut;
pub mod tiling;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial, RationalExpr};
