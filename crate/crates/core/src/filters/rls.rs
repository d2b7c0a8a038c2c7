use nalgebra::DVector;

use super::{wrong_algorithm, Aux, FilterState, Regressor};
use crate::{Complex64, Result};

/// Exponentially weighted complex RLS under the `wᴴx` convention:
///
/// ```text
/// k = P x / (λ + xᴴ P x)
/// w ← w + k·e*,   e = d − wᴴx
/// P ← (P − k xᴴ P) / λ
/// ```
///
/// `P` is re-symmetrized as `(P + Pᴴ)/2` after every update.
pub fn crls_step(state: &mut FilterState, r: &Regressor) -> Result<()> {
    state.check_regressor(r)?;
    let e = r.error(&state.w);
    let Aux::Crls { lambda, p, asymmetry } = &mut state.aux else {
        return Err(wrong_algorithm("CRLS", state));
    };
    let x = DVector::from_column_slice(&r.x);
    let px = &*p * &x;
    let denom = Complex64::new(*lambda, 0.0) + x.dotc(&px);
    // xᴴP = (P x)ᴴ for Hermitian P.
    let xh_p = px.adjoint();
    let k = px / denom;
    *p -= &k * xh_p;
    *p /= Complex64::new(*lambda, 0.0);
    let skew = &*p - p.adjoint();
    *asymmetry = skew.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let sym = (&*p + p.adjoint()) * Complex64::new(0.5, 0.0);
    *p = sym;

    let ec = e.conj();
    for (w, ki) in state.w.iter_mut().zip(k.iter()) {
        *w += ki * ec;
    }
    state.check_divergence()
}
