use nalgebra::{Cholesky, DMatrix, DVector};

use crate::{Complex64, Error, Result};

/// Condition estimates beyond this are treated as singular.
const MAX_CONDITION: f64 = 1e15;

/// Solves `A·w = b` for Hermitian positive-definite `A` by Cholesky.
///
/// The condition estimate is `(max Lᵢᵢ / min Lᵢᵢ)²` from the factor, a lower
/// bound on the true 2-norm condition number.
pub(crate) fn solve_hermitian(a: DMatrix<Complex64>, b: &DVector<Complex64>) -> Result<DVector<Complex64>> {
    let Some(chol) = Cholesky::new(a) else {
        return Err(Error::Singular { condition: f64::INFINITY });
    };
    let diag = chol.l_dirty().diagonal();
    let (lo, hi) = diag
        .iter()
        .map(|v| v.re)
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let condition = if lo > 0.0 { (hi / lo).powi(2) } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(Error::Singular { condition });
    }
    Ok(chol.solve(b))
}
