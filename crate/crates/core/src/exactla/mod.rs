//! Arbitrary-precision integer linear algebra.
//!
//! Everything here is exact: determinants use fraction-free elimination,
//! characteristic polynomials use Faddeev–LeVerrier with exact divisions and
//! resultants are Sylvester determinants. Nothing is ever rounded.

mod charpoly;
mod det;
pub mod integer;
mod matrix;
mod modp;
mod poly;
mod rational;
mod resultant;
mod snf;

pub use charpoly::charpoly_exact;
pub use det::det_exact;
pub use matrix::IntMatrix;
pub use modp::{nullity_mod_p, nullspace_mod_p, rank_mod_p};
pub use poly::IntPoly;
pub use rational::{rational_inverse, RationalMatrix};
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use snf::{snf, snf_with_transforms, SmithNormalForm, SnfDecomposition};

/// `f(m)` by Horner's scheme.
pub fn mat_poly_eval(f: &IntPoly, m: &IntMatrix) -> crate::Result<IntMatrix> {
    m.require_square()?;
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in f.coeffs().iter().rev() {
        acc = &acc * m;
        acc.add_scalar_diagonal(c);
    }
    Ok(acc)
}
