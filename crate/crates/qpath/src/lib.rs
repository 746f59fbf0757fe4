//! Exact arithmetic for lattice path statistics and their q-analogues.
//!
//! The crate machine-checks a family of equidistribution facts about
//! northeast lattice paths: the area under a path from (0,0) to (n,n),
//! reduced mod 2n-1, takes every residue equally often, and the same
//! happens for inversions of balanced binary words, subset sums, subset
//! products in prime fields, and several refinements with other moduli.
//! Everything is verified two ways where possible: by direct enumeration
//! of the finite objects, and through coefficient arithmetic on Gaussian
//! binomials, which carry the same counts as polynomial content.
//!
//! All arithmetic is exact. Counts and coefficients are arbitrary
//! precision; there is no floating point anywhere in the library.
//!
//! Module map:
//!
//! * [`poly`] - dense integer polynomials in `q`, exact division, content
//!   sums per residue class.
//! * [`gaussian`] - Gaussian binomial coefficients, q-Catalan numbers,
//!   and the identities connecting them.
//! * [`paths`] - lattice paths, binary words, and their statistics
//!   (area, inversions, major index, exceedance).
//! * [`cyclic`] - the cyclic maps that realize the equidistributions,
//!   and orbit computation.
//! * [`numtheory`] - plain binomials, Catalan numbers, primitive roots,
//!   discrete logs.
//! * [`dist`] - residue-class distributions of the statistics and the
//!   verdict machinery for the uniformity checks.
//! * [`render`] - table, JSON, CSV, and SVG output used by the CLI.

pub mod cyclic;
pub mod dist;
mod error;
pub mod gaussian;
pub mod numtheory;
pub mod paths;
pub mod poly;
pub mod render;

pub use error::{Error, Result};
pub use poly::Poly;
