use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Invariant factors of an integer matrix.
///
/// `factors` holds the nonzero invariant factors `d_1 | d_2 | ... | d_r`, all
/// positive; `r` is the rank over `Q`. Positions `r+1..=order` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    factors: Vec<BigInt>,
    order: usize,
}

impl SmithNormalForm {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `d_1, ..., d_n` with trailing zeros for a rank-deficient matrix.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let mut d = self.factors.clone();
        d.resize(self.order, BigInt::zero());
        d
    }

    /// `d_n`, the last invariant factor (zero when singular).
    pub fn last(&self) -> BigInt {
        if self.rank() == self.order {
            self.factors.last().cloned().unwrap_or_else(BigInt::one)
        } else {
            BigInt::zero()
        }
    }

    /// `d_1 * ... * d_n`, equal to `|det|` for square input.
    pub fn product(&self) -> BigInt {
        self.diagonal().iter().product()
    }

    /// Number of `d_i` divisible by `p` (zeros included). For a square
    /// matrix this is its nullity over `F_p`.
    pub fn count_divisible_by(&self, p: &BigInt) -> usize {
        self.diagonal()
            .iter()
            .filter(|d| d.is_multiple_of(p))
            .count()
    }
}

/// Result of [`snf_with_transforms`]: `left * diag(form) * right == input`
/// with `left`, `right` unimodular.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub form: SmithNormalForm,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn snf(m: &IntMatrix) -> SmithNormalForm {
    let mut calc = SnfCalc::new(m.clone(), false);
    calc.run();
    calc.form()
}

pub fn snf_with_transforms(m: &IntMatrix) -> SnfDecomposition {
    let mut calc = SnfCalc::new(m.clone(), true);
    calc.run();
    let form = calc.form();
    let SnfCalc { left, right, .. } = calc;
    SnfDecomposition {
        form,
        left: left.expect("tracked"),
        right: right.expect("tracked"),
    }
}

// Invariant while running: left * a * right == original.
struct SnfCalc {
    a: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
    done: usize,
}

impl SnfCalc {
    fn new(a: IntMatrix, track: bool) -> Self {
        let (left, right) = if track {
            (
                Some(IntMatrix::identity(a.rows())),
                Some(IntMatrix::identity(a.cols())),
            )
        } else {
            (None, None)
        };
        SnfCalc {
            a,
            left,
            right,
            done: 0,
        }
    }

    fn form(&self) -> SmithNormalForm {
        SmithNormalForm {
            factors: (0..self.done).map(|i| self.a[(i, i)].clone()).collect(),
            order: self.a.rows().min(self.a.cols()),
        }
    }

    // row[dst] += k * row[src]
    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some(u) = self.left.as_mut() {
            u.add_col_multiple(src, dst, &-k);
        }
    }

    // col[dst] += k * col[src]
    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        if let Some(v) = self.right.as_mut() {
            v.add_row_multiple(src, dst, &-k);
        }
    }

    fn row_swap(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(u) = self.left.as_mut() {
            u.swap_cols(x, y);
        }
    }

    fn col_swap(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some(v) = self.right.as_mut() {
            v.swap_rows(x, y);
        }
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = self.left.as_mut() {
            u.negate_col(i);
        }
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.magnitude() < self.a[(bi, bj)].magnitude()) {
                    best = Some((i, j));
                    if v.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
            let v = &self.a[(i, j)];
            let cur = &self.a[*best];
            if !v.is_zero() && (cur.is_zero() || v.magnitude() < cur.magnitude()) {
                *best = (i, j);
            }
        };
        for i in t + 1..self.a.rows() {
            consider(i, t, &mut best);
        }
        for j in t + 1..self.a.cols() {
            consider(t, j, &mut best);
        }
        best
    }

    fn move_to_pivot(&mut self, t: usize, (i, j): (usize, usize)) {
        self.row_swap(t, i);
        self.col_swap(t, j);
    }

    fn run(&mut self) {
        let lim = self.a.rows().min(self.a.cols());
        while self.done < lim {
            let t = self.done;
            let Some(pos) = self.smallest_in_block(t) else {
                break;
            };
            self.move_to_pivot(t, pos);
            loop {
                let mut clean = true;
                for i in t + 1..self.a.rows() {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    if !q.is_zero() {
                        self.row_add(i, t, &-q);
                    }
                    clean &= self.a[(i, t)].is_zero();
                }
                for j in t + 1..self.a.cols() {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    if !q.is_zero() {
                        self.col_add(j, t, &-q);
                    }
                    clean &= self.a[(t, j)].is_zero();
                }
                if !clean {
                    let pos = self.smallest_in_cross(t);
                    self.move_to_pivot(t, pos);
                    continue;
                }
                // Pivot must divide the remaining block for the chain d_i | d_{i+1}.
                let pivot = self.a[(t, t)].clone();
                if pivot.magnitude().is_one() {
                    break;
                }
                let offender = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.row_negate(t);
            }
            self.done += 1;
        }
    }
}
