//! Adaptive linear filters over complex regressors.
//!
//! Every filter models `y = wᴴx` and is trained toward a desired output `d`,
//! so the a-priori error is `e = d − wᴴx`. All weights start at zero.

mod gradient;
mod linalg;
mod mccc;
mod rls;
mod training;

use std::collections::VecDeque;

use nalgebra::DMatrix;

use crate::{Complex64, Error, KernelSpec, Result};

pub use gradient::{clms_step, csign, lad_step};
pub use mccc::{fixed_point_map, mccc_fixed_point, mccc_objective, FixedPointOptions};
pub use rls::crls_step;
pub use training::{run_training, Schedule};

/// Weight norm above which a filter is declared diverged.
pub const DIVERGENCE_LIMIT: f64 = 1e12;

/// One input snapshot `x` (length `L`) with its desired output `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Regressor {
    pub x: Vec<Complex64>,
    pub d: Complex64,
}

impl Regressor {
    pub fn new(x: Vec<Complex64>, d: Complex64) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::domain("regressor must have at least one tap"));
        }
        if !d.is_finite() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("regressor entries must be finite"));
        }
        Ok(Self { x, d })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// `d − wᴴx`.
    pub fn error(&self, w: &[Complex64]) -> Complex64 {
        self.d - output(w, &self.x)
    }
}

/// Filter output `wᴴx`.
pub fn output(w: &[Complex64], x: &[Complex64]) -> Complex64 {
    w.iter().zip(x).map(|(wi, xi)| wi.conj() * xi).sum()
}

/// Training configuration of one adaptive algorithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    /// Fixed-point maximum complex correntropy filter.
    Mccc {
        sigma: f64,
        /// Relative proximal ridge; see [`FixedPointOptions::ridge`].
        ridge: f64,
    },
    /// Complex LMS with step size `mu`.
    Clms { mu: f64 },
    /// Exponentially weighted complex RLS; `P` starts at `I / delta`.
    Crls { lambda: f64, delta: f64 },
    /// Least-absolute-deviation baseline (complex sign-error LMS).
    Lad { mu: f64 },
}

impl Algorithm {
    pub const DEFAULT_MU: f64 = 0.01;
    pub const DEFAULT_RIDGE: f64 = 1e-8;
    pub const DEFAULT_CRLS_DELTA: f64 = 1e-9;

    pub fn mccc(sigma: f64) -> Self {
        Algorithm::Mccc {
            sigma,
            ridge: Self::DEFAULT_RIDGE,
        }
    }

    pub fn clms() -> Self {
        Algorithm::Clms { mu: Self::DEFAULT_MU }
    }

    pub fn crls() -> Self {
        Algorithm::Crls {
            lambda: 1.0,
            delta: Self::DEFAULT_CRLS_DELTA,
        }
    }

    pub fn lad() -> Self {
        Algorithm::Lad { mu: Self::DEFAULT_MU }
    }

    /// Short lowercase name used in result tables.
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Mccc { .. } => "mccc",
            Algorithm::Clms { .. } => "clms",
            Algorithm::Crls { .. } => "crls",
            Algorithm::Lad { .. } => "lad",
        }
    }

    /// Kernel size for MCCC, `None` for the baselines.
    pub fn sigma(&self) -> Option<f64> {
        match self {
            Algorithm::Mccc { sigma, .. } => Some(*sigma),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Algorithm::Mccc { sigma, ridge } => sigma > 0.0 && sigma.is_finite() && ridge >= 0.0 && ridge.is_finite(),
            Algorithm::Clms { mu } | Algorithm::Lad { mu } => mu > 0.0 && mu.is_finite(),
            Algorithm::Crls { lambda, delta } => lambda > 0.0 && lambda <= 1.0 && delta > 0.0 && delta.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("invalid algorithm parameters: {self:?}")))
        }
    }
}

/// Outcome of a batch fixed-point solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverReport {
    pub iterations: usize,
    /// `‖w_{t+1} − w_t‖₂` of the last iteration.
    pub final_weight_delta: f64,
    pub converged: bool,
    /// Iterations where the sample objective decreased by more than
    /// `1e-12` of the kernel peak.
    pub ascent_violations: usize,
}

#[derive(Debug, Clone)]
pub(crate) enum Aux {
    Mccc {
        kernel: KernelSpec,
        ridge: f64,
        window: VecDeque<Regressor>,
        capacity: Option<usize>,
        inner_iterations: usize,
    },
    Clms {
        mu: f64,
    },
    Crls {
        lambda: f64,
        p: DMatrix<Complex64>,
        /// Largest `|P − Pᴴ|` entry seen before the last re-symmetrization.
        asymmetry: f64,
    },
    Lad {
        mu: f64,
    },
}

/// Weight vector plus the per-algorithm state needed to continue training.
#[derive(Debug, Clone)]
pub struct FilterState {
    w: Vec<Complex64>,
    pub(crate) aux: Aux,
}

impl FilterState {
    /// Zero-initialized state of `taps` weights for `algo`.
    pub fn new(algo: Algorithm, taps: usize) -> Result<Self> {
        Self::with_schedule(algo, taps, &Schedule::default())
    }

    pub fn with_schedule(algo: Algorithm, taps: usize, schedule: &Schedule) -> Result<Self> {
        if taps == 0 {
            return Err(Error::domain("filter needs at least one tap"));
        }
        algo.validate()?;
        let aux = match algo {
            Algorithm::Mccc { sigma, ridge } => Aux::Mccc {
                kernel: KernelSpec::gaussian(sigma)?,
                ridge,
                window: VecDeque::new(),
                capacity: schedule.window_length,
                inner_iterations: schedule.inner_iterations,
            },
            Algorithm::Clms { mu } => Aux::Clms { mu },
            Algorithm::Crls { lambda, delta } => Aux::Crls {
                lambda,
                p: DMatrix::identity(taps, taps) * Complex64::new(1.0 / delta, 0.0),
                asymmetry: 0.0,
            },
            Algorithm::Lad { mu } => Aux::Lad { mu },
        };
        Ok(Self {
            w: vec![Complex64::new(0.0, 0.0); taps],
            aux,
        })
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.w
    }

    pub fn taps(&self) -> usize {
        self.w.len()
    }

    /// Replaces the weights (e.g. to warm-start from a known solution).
    pub fn set_weights(&mut self, w: Vec<Complex64>) -> Result<()> {
        if w.len() != self.w.len() {
            return Err(Error::domain("weight length mismatch"));
        }
        self.w = w;
        self.check_divergence()
    }

    pub fn algorithm_name(&self) -> &'static str {
        match self.aux {
            Aux::Mccc { .. } => "mccc",
            Aux::Clms { .. } => "clms",
            Aux::Crls { .. } => "crls",
            Aux::Lad { .. } => "lad",
        }
    }

    /// CRLS inverse-correlation matrix, if this is a CRLS state.
    pub fn inverse_correlation(&self) -> Option<&DMatrix<Complex64>> {
        match &self.aux {
            Aux::Crls { p, .. } => Some(p),
            _ => None,
        }
    }

    /// Largest entry of `|P − Pᴴ|` just before the last CRLS symmetrization.
    pub fn crls_asymmetry(&self) -> Option<f64> {
        match &self.aux {
            Aux::Crls { asymmetry, .. } => Some(*asymmetry),
            _ => None,
        }
    }

    /// Processes one regressor with whichever algorithm this state carries.
    pub fn update(&mut self, r: &Regressor) -> Result<()> {
        match self.aux {
            Aux::Mccc { .. } => mccc::mccc_step(self, r),
            Aux::Clms { .. } => clms_step(self, r),
            Aux::Crls { .. } => crls_step(self, r),
            Aux::Lad { .. } => lad_step(self, r),
        }
    }

    pub(crate) fn check_regressor(&self, r: &Regressor) -> Result<()> {
        if r.len() != self.w.len() {
            return Err(Error::domain(format!(
                "regressor has {} taps, filter has {}",
                r.len(),
                self.w.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_divergence(&self) -> Result<()> {
        let norm = norm2(&self.w);
        if norm.is_finite() && norm <= DIVERGENCE_LIMIT {
            Ok(())
        } else {
            Err(Error::Diverged { norm })
        }
    }
}

pub(crate) fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn wrong_algorithm(expected: &str, state: &FilterState) -> Error {
    Error::domain(format!(
        "{expected} step applied to a {} filter state",
        state.algorithm_name()
    ))
}
