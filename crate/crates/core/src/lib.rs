//! Separable eigenbases of the Zernike system on the unit disk and the
//! interbasis expansion coefficients that connect them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: exact rationals and the closed algebra `i^k · q · √s`.
//! * [`hypergeom`]: terminating `pFq(…|1)` series, Hahn, dual Hahn and Racah
//!   polynomials and the transformations between balanced `4F3` series.
//! * [`bases`]: classical polynomials, coordinate charts and the three bases
//!   (polar I, x-oriented II, y-oriented III) on the disk and hemisphere.
//! * [`coupling`]: su(2) Clebsch–Gordan coefficients and the 6j parameter map.
//! * [`interbasis`]: the I–II, I–III and II–III coefficients by every route.
//! * [`oracle`]: quadrature and finite-difference cross-checks.
//! * [`verify`]: named invariant suites used by the CLI.

pub mod bases;
pub mod coupling;
mod error;
pub mod exact;
pub mod hypergeom;
pub mod interbasis;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactValue, Rational};

pub use num_complex::Complex64;
