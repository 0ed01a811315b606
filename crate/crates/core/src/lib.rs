//! Exact, mechanical verification of the classification of smooth toroidal
//! compactifications (X, D) of ball quotients with 3c̄₂ = c̄₁² and c̄₂ = 1
//! whose minimal model is not bi-elliptic.
//!
//! - [`rings`]: ℤ, ℤ[i], ℤ[τ] arithmetic.
//! - [`lattices`]: Smith normal form and torsion subgroups of ℂ/Λ.
//! - [`surfaces`]: elliptic curves through the origin of C × C, good
//!   configurations and their canonical forms.
//! - [`chern`]: Chern and logarithmic Chern numbers.
//! - [`caselaw`]: the case tree and its report.
//! - [`cli`]: the `toroidal` command line.

pub mod caselaw;
pub mod chern;
pub mod cli;
pub mod lattices;
pub mod rings;
pub mod surfaces;

pub use caselaw::{run_classification, run_classification_with, ClassificationReport};
pub use rings::{OrderKind, QuadInt};
pub use surfaces::{Configuration, Slope};
