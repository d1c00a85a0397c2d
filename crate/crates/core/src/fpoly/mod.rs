//! Polynomials over the prime field `F_p` (odd `p`): gcd, squarefree part,
//! complete factorization, and the bridges to and from `Z[x]`.

mod factor;
mod poly;

pub use factor::{
    factor_fp, is_irreducible, multiple_irreducible_factors, squarefree_decomposition,
    squarefree_part, FpFactorization,
};
pub use poly::FpPoly;

use num_bigint::BigInt;

use crate::exactla::integer::{reduce_big, require_odd_prime};
use crate::exactla::IntPoly;
use crate::{Error, Result};

/// Monic gcd over `F_p`; zero only when both inputs are zero.
pub fn gcd_fp(f: &FpPoly, g: &FpPoly) -> Result<FpPoly> {
    if f.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch(f.modulus(), g.modulus()));
    }
    Ok(f.gcd(g))
}

/// Coefficientwise reduction of an integer polynomial.
pub fn reduce_mod_p(f: &IntPoly, p: u64) -> Result<FpPoly> {
    require_odd_prime(p)?;
    FpPoly::new(p, f.coeffs().iter().map(|c| reduce_big(c, p)).collect())
}

/// The integer polynomial with coefficients in `0..p` that reduces to `f`.
pub fn lift_to_int(f: &FpPoly) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}
