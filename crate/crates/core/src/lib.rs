//! Exact symbolic and numeric toolkit for Lie bialgebras, Drinfel'd doubles,
//! classical r-matrices, contraction limits and Poisson homogeneous spaces of
//! the 3D Euclidean, (2+1) Poincare and so(3,1) Lie algebras.
//!
//! The algebraic layers ([`scalar`], [`algebra`], [`bialgebra`], [`double`],
//! [`contraction`]) work over exact rational functions in named parameters, so
//! every identity is checked symbolically. The group-level layer
//! ([`homspace`]) is numeric: exponential-product charts, invariant vector
//! fields and Sklyanin brackets evaluated in `f64` against closed-form
//! targets. [`catalog`] holds the citable instances everything else is tested
//! against, and [`schema`] reads and writes the TOML/JSON exchange format.
//!
//! ```
//! use drinfeld::{bialgebra, catalog, scalar::Scalar};
//!
//! // the diagonal Euclidean r-matrix sits at (p, mu) = (0, 2)
//! let e3 = catalog::euclid3();
//! let r = catalog::get("euclid3.classII")?.r_matrix()?;
//! let h = catalog::rotation_subalgebra(&e3)?;
//! let t = catalog::translation_subalgebra(&e3)?;
//! let inv = bialgebra::stachura_invariants(&e3, &r, &h, &t)?;
//! assert!(inv.p.is_zero());
//! assert_eq!(inv.mu, Scalar::from_int(2));
//! # Ok::<(), drinfeld::Error>(())
//! ```

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod contraction;
pub mod double;
pub mod error;
pub mod homspace;
pub mod scalar;
pub mod schema;

pub use error::{Error, Result};
