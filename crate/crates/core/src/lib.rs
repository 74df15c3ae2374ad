//! Extended-precision evaluation of associated Legendre, conical and Ferrers
//! functions for one large parameter, using uniform asymptotic expansions
//! whose coefficients are recursively generated polynomials carried in the
//! argument of exponential, hyperbolic or trigonometric functions.
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! arith      extended-precision real/complex scalars
//! specfun    complex gamma; modified/cylinder Bessel kernel
//! maps       Liouville-type variable transformations and branch handling
//! coeffs     recursive coefficient tables (F, E, a), re-expansions
//! cauchy     contour quadrature for the pole-excluded disks
//! expand     assembled function evaluators for the four regimes
//! oracle     convergent-series ground truth (test/validation only)
//! verify     identity-residual sweeps and the target manifest
//! ```

pub mod arith;
pub mod cauchy;

pub mod coeffs;
pub mod error;
pub mod expand;
pub mod oracle;

pub mod maps;

pub mod specfun;
pub mod verify;


pub use arith::{BigComplex, BigReal, Precision};
pub use error::{Error, Result};
