use super::{wrong_algorithm, Aux, FilterState, Regressor};
use crate::{Complex64, Result};

/// Complex LMS: `w ← w + μ·x·e*` with `e = d − wᴴx`.
pub fn clms_step(state: &mut FilterState, r: &Regressor) -> Result<()> {
    let Aux::Clms { mu } = state.aux else {
        return Err(wrong_algorithm("CLMS", state));
    };
    state.check_regressor(r)?;
    let e = r.error(&state.w);
    apply_step(state, r, mu * e.conj())
}

/// Least-absolute-deviation baseline as complex sign-error LMS:
/// `w ← w + μ·x·csign(e)*`.
///
/// Each step moves the weights by at most `μ·√2·‖x‖₂`.
pub fn lad_step(state: &mut FilterState, r: &Regressor) -> Result<()> {
    let Aux::Lad { mu } = state.aux else {
        return Err(wrong_algorithm("LAD", state));
    };
    state.check_regressor(r)?;
    let e = r.error(&state.w);
    apply_step(state, r, mu * csign(e).conj())
}

/// Component-wise sign, `sign(Re z) + j·sign(Im z)` with `sign(0) = 0`.
pub fn csign(z: Complex64) -> Complex64 {
    let sign = |v: f64| {
        if v > 0.0 {
            1.0
        } else if v < 0.0 {
            -1.0
        } else {
            0.0
        }
    };
    Complex64::new(sign(z.re), sign(z.im))
}

fn apply_step(state: &mut FilterState, r: &Regressor, scale: Complex64) -> Result<()> {
    if scale == Complex64::new(0.0, 0.0) {
        return Ok(());
    }
    for (w, x) in state.w.iter_mut().zip(&r.x) {
        *w += x * scale;
    }
    state.check_divergence()
}
