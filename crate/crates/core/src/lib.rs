//! Finite split metacyclic group actions on closed orientable surfaces.
//!
//! A data set records a topological equivalence class of actions of
//! `Z_n ⋊_k Z_m`. This crate validates data sets, derives the data sets of
//! the two cyclic factors, enumerates all classes in a given genus and checks
//! everything against a brute-force search for surface-kernel epimorphisms.

pub mod applications;
pub mod arith;
pub mod cyclic;
pub mod dataset;
pub mod derive;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod oracle;
mod text;

pub use cyclic::{CyclicDataSet, Pair};
pub use dataset::{MetacyclicDataSet, Triple, ValidationReport};
pub use derive::{derive_df, derive_dg, derive_factors, CyclicFactors};
pub use error::{Error, Result};
pub use group::{Element, GroupParams};
