use std::fmt;
use std::ops::{Index, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::{Error, Result};

/// Dense matrix of exact rationals. `BigRational` keeps every entry reduced
/// with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RationalMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .entries()
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    /// Permutation matrix with a 1 at `(i, perm[i])`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[i * n + j] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    /// The integer matrix, if every entry is an integer.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        let data = self.data.iter().map(|x| x.to_integer()).collect();
        Some(IntMatrix::new(self.rows, self.cols, data).expect("same shape"))
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| &self[(i, j)] * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Parses whitespace-separated entries `a` or `a/b`, one row per
    /// non-empty line. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let mut row = Vec::new();
            for (col, tok) in line.split_whitespace().enumerate() {
                row.push(parse_fraction(tok).ok_or_else(|| Error::MatrixText {
                    line: ln + 1,
                    column: col + 1,
                    message: format!("invalid rational entry {tok:?}"),
                })?);
            }
            if !row.is_empty() {
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(Error::MatrixText {
                            line: ln + 1,
                            column: row.len(),
                            message: format!("expected {} entries, found {}", first.len(), row.len()),
                        });
                    }
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let r = rows.len();
        let c = rows[0].len();
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Inverse of [`RationalMatrix::parse`]: `a/b`, or `a` when `b == 1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn parse_fraction(tok: &str) -> Option<BigRational> {
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (BigInt::from_str(a).ok()?, BigInt::from_str(b).ok()?),
        None => (BigInt::from_str(tok).ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix{}x{}\n{}", self.rows, self.cols, self.to_text())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Exact inverse by Gauss–Jordan elimination over `Q`.
pub fn rational_inverse(m: &IntMatrix) -> Result<RationalMatrix> {
    m.require_square()?;
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(c, pr);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &k * p;
            }
        }
    }
    let data = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    RationalMatrix::new(n, n, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn inverse_of_diagonal() {
        let inv = rational_inverse(&IntMatrix::diagonal(&[2, 3])).unwrap();
        assert_eq!(inv.entries(), &[q(1, 2), q(0, 1), q(0, 1), q(1, 3)]);
        assert!(rational_inverse(&IntMatrix::identity(3)).unwrap().is_identity());
    }

    #[test]
    fn singular_rejected() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(rational_inverse(&m), Err(Error::Singular));
    }

    #[test]
    fn text_format_reduces_fractions() {
        let m = RationalMatrix::parse("2/4 1\n-3/6 0/5\n").unwrap();
        assert_eq!(m.to_text(), "1/2 1\n-1/2 0\n");
        assert_eq!(m.denominator_lcm(), BigInt::from(2));
        assert!(RationalMatrix::parse("1 2\n3\n").is_err());
        assert!(RationalMatrix::parse("1/0").is_err());
        assert_eq!(RationalMatrix::parse("  \n"), Err(Error::EmptyInput));
    }
}
