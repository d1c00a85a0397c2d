use super::integer::{inv_mod, mul_mod, reduce_big, require_prime, sub_mod};
use super::IntMatrix;
use crate::Result;

fn reduce(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| reduce_big(x, p)).collect())
        .collect()
}

/// In-place reduced row echelon form over `F_p`; returns pivot columns.
fn rref(a: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i == r || a[i][c] == 0 {
                continue;
            }
            let k = a[i][c];
            let pivot_row = a[r].clone();
            for (x, &y) in a[i][c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x = sub_mod(*x, mul_mod(k, y, p), p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of `m` reduced modulo the prime `p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    require_prime(p)?;
    let mut a = reduce(m, p);
    Ok(rref(&mut a, p).len())
}

/// `cols - rank_p(m)`, the dimension of `{z : m z = 0}` over `F_p`.
pub fn nullity_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    Ok(m.cols() - rank_mod_p(m, p)?)
}

/// A basis of the right nullspace of `m` over `F_p`, one vector per free
/// column, entries in `0..p`.
pub fn nullspace_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    require_prime(p)?;
    let mut a = reduce(m, p);
    let pivots = rref(&mut a, p);
    let cols = m.cols();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut z = vec![0u64; cols];
        z[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            z[pc] = sub_mod(0, a[r][free], p);
        }
        basis.push(z);
    }
    Ok(basis)
}
