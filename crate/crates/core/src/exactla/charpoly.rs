use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, IntPoly};
use crate::Result;

/// `det(xI - m)` via Faddeev–LeVerrier.
///
/// With `M_0 = 0` and `c_n = 1`, iterate `M_k = m M_{k-1} + c_{n-k+1} I` and
/// `c_{n-k} = -tr(m M_k) / k`. Over `Z` the traces are `k`-multiples (Newton
/// identities), so each division is exact.
pub fn charpoly_exact(m: &IntMatrix) -> Result<IntPoly> {
    m.require_square()?;
    let n = m.rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m * &mk;
        mk.add_scalar_diagonal(&c[n - k + 1]);
        let tr = (m * &mk).trace();
        let kk = BigInt::from(k);
        debug_assert!((&tr % &kk).is_zero());
        c[n - k] = -(tr / kk);
    }
    Ok(IntPoly::new(c))
}
