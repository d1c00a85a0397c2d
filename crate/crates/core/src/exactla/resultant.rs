use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{det_exact, IntMatrix, IntPoly};
use crate::{Error, Result};

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `k`), size
/// `(m + k) x (m + k)`, coefficients written highest degree first.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Result<IntMatrix> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let k = g.degree().ok_or(Error::ZeroPolynomial)?;
    let size = m + k;
    let mut s = IntMatrix::zeros(size, size);
    for r in 0..k {
        for (i, c) in f.coeffs().iter().rev().enumerate() {
            s[(r, r + i)] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.coeffs().iter().rev().enumerate() {
            s[(k + r, r + i)] = c.clone();
        }
    }
    Ok(s)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix. Zero if either
/// argument is the zero polynomial.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let s = sylvester_matrix(f, g).expect("nonzero inputs");
    det_exact(&s).expect("Sylvester matrix is square")
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`, the discriminant of `f`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let res = resultant(f, &f.derivative());
    let lc = f.leading_coeff().expect("nonzero");
    let (q, r) = res.div_rem(lc);
    debug_assert!(r.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}
