//! Exact representation-theoretic arithmetic for su(N) and its affine
//! extension ŝu(N): tensor product decompositions (Littlewood-Richardson),
//! fusion coefficients at a level (Kac-Walton), threshold levels of
//! couplings, and *fusion bases* — inequality systems over `(k, λ, n)`
//! whose nonnegative integer solution counts reproduce the fusion
//! coefficients, built by dualizing the elementary couplings.
//!
//! All arithmetic is exact over `i64`; there is no floating point
//! anywhere. Results are deterministic, with pinned canonical orderings
//! (descending lexicographic generators, scalar coupling first in fusion
//! bases).
//!
//! Module map:
//! - [`weights`]: finite and affine weights in Dynkin labels;
//! - [`tableaux`]: LR tableaux, the LR inequality system, tensor products;
//! - [`affine`]: reflection to the dominant chamber, fusion products,
//!   threshold levels;
//! - [`cones`]: Hilbert bases of solution monoids and their duals;
//! - [`basis`]: elementary couplings, fusion-basis construction,
//!   verification, and coupling decomposition;
//! - [`cli`]: the `sunfuse` command-line interface.

pub mod affine;
pub mod basis;
pub mod cli;
pub mod cones;
pub mod error;
pub mod tableaux;
pub mod weights;

pub use error::{Error, Result};
