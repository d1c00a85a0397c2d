use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::Result;

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the elimination is exact. The 0x0 determinant is 1.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = pivot * &row[j] - &row[k] * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -d } else { d })
}
