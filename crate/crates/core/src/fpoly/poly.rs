use std::fmt;

use num_bigint::BigUint;

use crate::exactla::integer::{add_mod, inv_mod, mul_mod, require_odd_prime, sub_mod};
use crate::Result;

/// Dense polynomial over `F_p`, coefficients in `0..p`, ascending degree,
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Checks that `p` is an odd prime and reduces the coefficients.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        require_odd_prime(p)?;
        Ok(Self::raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Result<Self> {
        require_odd_prime(p)?;
        let pi = p as i128;
        Ok(Self::raw(
            p,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(pi) as u64)
                .collect(),
        ))
    }

    // Caller guarantees `p` is an odd prime and coefficients are reduced.
    pub(crate) fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::raw(self.p, self.coeffs.iter().map(|&c| mul_mod(c, k, self.p)).collect())
    }

    /// `self / lc(self)`; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(inv_mod(lc, self.p)),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::raw(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..len)
                .map(|i| add_mod(self.coeff(i), other.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..len)
                .map(|i| sub_mod(self.coeff(i), other.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Self::raw(p, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.p), |acc, _| acc.mul(self))
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let p = self.p;
        let inv = inv_mod(d.leading_coeff(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &dj) in d.coeffs.iter().enumerate() {
                r[k + j] = sub_mod(r[k + j], mul_mod(c, dj, p), p);
            }
        }
        r.truncate(dd);
        (Self::raw(p, q), Self::raw(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// For `self = g(x^p)`, returns `g`, the `p`-th root over `F_p`.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        debug_assert!(self.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || i % p == 0));
        Self::raw(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Sort key: degree, then coefficient sequence from the constant term.
    pub(crate) fn order_key(&self) -> (usize, &[u64]) {
        (self.coeffs.len(), &self.coeffs)
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[{}]({self})", self.p)
    }
}

/// Compact form with canonical residues, e.g. `x^2+2x+1`, `x+2`.
impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c != 1 || i == 0 {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = FpPoly::from_i64(5, &[-1, 0, 1]).unwrap();
        let g = FpPoly::from_i64(5, &[-1, 1]).unwrap();
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, FpPoly::from_i64(5, &[1, 1]).unwrap());
        assert!(r.is_zero());
        assert_eq!(f.to_string(), "x^2+4");
        assert_eq!(f.derivative().to_string(), "2x");
    }

    #[test]
    fn derivative_vanishes_on_pth_powers() {
        let f = FpPoly::from_i64(3, &[1, 0, 0, 1]).unwrap(); // x^3 + 1
        assert!(f.derivative().is_zero());
        assert_eq!(f.pth_root().to_string(), "x+1");
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(FpPoly::new(2, vec![1]).is_err());
        assert!(FpPoly::new(15, vec![1]).is_err());
    }

    #[test]
    fn fermat_via_pow_mod() {
        let m = FpPoly::from_i64(7, &[3, 1, 0, 1]).unwrap();
        let x = FpPoly::x(7);
        assert_eq!(x.pow_mod(&BigUint::from(1u32), &m), x);
        assert_eq!(x.pow_mod(&BigUint::from(3u32), &m), FpPoly::from_i64(7, &[-3, -1]).unwrap());
    }
}
