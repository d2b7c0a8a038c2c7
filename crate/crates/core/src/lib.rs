//! Complex correntropy and the maximum complex correntropy criterion (MCCC).
//!
//! The crate is split into four layers:
//!
//! * [`correntropy`]: sample estimators of complex correntropy (rectangular and
//!   polar forms), the real-valued reference estimator, the Parzen joint
//!   density view and numeric diagnostics for its limiting behaviour.
//! * [`filters`]: adaptive linear filters under the `y = wᴴx` convention. The
//!   MCCC fixed-point solver plus CLMS, CRLS and LAD baselines.
//! * [`channel`]: a 16-QAM source, a two-tap complex FIR channel, symmetric
//!   alpha-stable noise calibrated by GSNR, symbol decisions and error rates.
//! * [`harness`]: seeded Monte-Carlo sweeps, aggregation and CSV/JSON output.
//!
//! [`properties`] bundles the numeric checks of the estimator's analytic
//! properties into a reusable suite.

pub mod channel;
pub mod correntropy;
mod error;
pub mod filters;
pub mod harness;
pub mod properties;
mod sum;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use correntropy::{ComplexSeries, KernelFamily, KernelSpec, PolarComplex, TaylorDiagnostics};
pub use filters::{Algorithm, FilterState, Regressor, SolverReport};
