use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactla::integer::{factorize, is_probable_prime};
use crate::exactla::{
    charpoly_exact, det_exact, discriminant, snf, IntMatrix, IntPoly, SmithNormalForm,
};
use crate::{Error, Graph, Result};

/// `W = [e, Ae, ..., A^{n-1}e]`, column `j` holding the number of walks of
/// length `j` starting at each vertex.
pub fn walk_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    let a = g.adjacency();
    let mut w = IntMatrix::zeros(n, n);
    let mut col = vec![BigInt::from(1); n];
    for j in 0..n {
        for (i, v) in col.iter().enumerate() {
            w[(i, j)] = v.clone();
        }
        if j + 1 < n {
            col = a.mul_vec(&col);
        }
    }
    w
}

/// Invariants of a graph derived from its walk matrix and characteristic
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralInvariants {
    pub order: usize,
    pub walk: IntMatrix,
    pub det_walk: BigInt,
    /// `det W / 2^{floor(n/2)}`, always an integer.
    pub halved_det: BigInt,
    /// `chi(A; x)`.
    pub charpoly: IntPoly,
    /// `chi(A + J; x)`.
    pub charpoly_plus_j: IntPoly,
    /// Discriminant of `chi(A; x)`.
    pub delta: BigInt,
    /// `gcd(|halved_det|, |delta|)`.
    pub theta: BigInt,
    pub snf_walk: SmithNormalForm,
    pub controllable: bool,
}

impl SpectralInvariants {
    pub fn theta_is_odd(&self) -> bool {
        self.theta.is_odd()
    }

    /// `d_n(W)`.
    pub fn last_invariant_factor(&self) -> BigInt {
        self.snf_walk.last()
    }
}

pub fn compute_invariants(g: &Graph) -> SpectralInvariants {
    let n = g.order();
    let a = g.adjacency();
    let walk = walk_matrix(g);
    let det_walk = det_exact(&walk).expect("square");
    let pow2 = BigInt::from(1) << (n / 2);
    let (halved_det, rem) = det_walk.div_rem(&pow2);
    assert!(rem.is_zero(), "2^floor(n/2) must divide det W");
    let charpoly = charpoly_exact(&a).expect("square");
    let a_plus_j = &a + &IntMatrix::ones(n, n);
    let charpoly_plus_j = charpoly_exact(&a_plus_j).expect("square");
    let delta = if n == 0 {
        BigInt::from(1)
    } else {
        discriminant(&charpoly).expect("monic of degree n >= 1")
    };
    let theta = halved_det.abs().gcd(&delta.abs());
    let snf_walk = snf(&walk);
    SpectralInvariants {
        order: n,
        controllable: !det_walk.is_zero(),
        walk,
        det_walk,
        halved_det,
        charpoly,
        charpoly_plus_j,
        delta,
        theta,
        snf_walk,
    }
}

/// `p`-adic valuation of an integer, with `ord_p(0) = infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrdValue {
    Finite(u32),
    Infinite,
}

impl OrdValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            OrdValue::Finite(k) => Some(k),
            OrdValue::Infinite => None,
        }
    }
}

impl fmt::Display for OrdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdValue::Finite(k) => write!(f, "{k}"),
            OrdValue::Infinite => write!(f, "inf"),
        }
    }
}

pub fn ord_p(m: &BigInt, p: &BigInt) -> Result<OrdValue> {
    if p.is_negative() || !is_probable_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if m.is_zero() {
        return Ok(OrdValue::Infinite);
    }
    let mut k = 0;
    let mut rest = m.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(OrdValue::Finite(k));
        }
        rest = q;
        k += 1;
    }
}

/// Prime factors of `theta`, split into those dividing it exactly once and
/// those whose square divides it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ThetaPrimes {
    pub factorization: Vec<(BigInt, u32)>,
    pub simple: Vec<BigInt>,
    pub multiple: Vec<BigInt>,
}

impl ThetaPrimes {
    pub fn is_squarefree(&self) -> bool {
        self.multiple.is_empty()
    }

    /// Renders like `2×3²×759799`; `1` for the empty product.
    pub fn pretty(&self) -> String {
        pretty_factorization(&self.factorization)
    }
}

pub fn theta_prime_classification(theta: &BigInt) -> Result<ThetaPrimes> {
    if theta.is_zero() {
        return Err(Error::ZeroTheta);
    }
    let factorization = factorize(theta);
    let (multiple, simple): (Vec<_>, Vec<_>) = factorization.iter().partition(|(_, e)| *e >= 2);
    Ok(ThetaPrimes {
        simple: simple.into_iter().map(|(p, _)| p.clone()).collect(),
        multiple: multiple.into_iter().map(|(p, _)| p.clone()).collect(),
        factorization,
    })
}

/// `2×3²×759799`-style rendering of a factorization.
pub fn pretty_factorization(f: &[(BigInt, u32)]) -> String {
    if f.is_empty() {
        return "1".into();
    }
    f.iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}{}", superscript(*e))
            }
        })
        .collect::<Vec<_>>()
        .join("×")
}

fn superscript(e: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    e.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// `p` as a `u64` if it fits; the mod-p kernels need machine-word primes.
pub(crate) fn small_prime(p: &BigInt) -> Option<u64> {
    p.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn walk_matrix_small() {
        assert_eq!(walk_matrix(&Graph::empty(1)), IntMatrix::from_rows(&[[1]]).unwrap());
        let w = walk_matrix(&Graph::complete(2));
        assert_eq!(w, IntMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap());
        let inv = compute_invariants(&Graph::complete(2));
        assert!(!inv.controllable);
        assert_eq!(inv.det_walk, b(0));
    }

    #[test]
    fn ord_values() {
        assert_eq!(ord_p(&b(-75), &b(3)).unwrap(), OrdValue::Finite(1));
        assert_eq!(ord_p(&b(-207), &b(3)).unwrap(), OrdValue::Finite(2));
        assert_eq!(ord_p(&b(0), &b(3)).unwrap(), OrdValue::Infinite);
        assert_eq!(ord_p(&b(7), &b(3)).unwrap(), OrdValue::Finite(0));
        assert!(ord_p(&b(7), &b(4)).is_err());
        assert!(OrdValue::Finite(100) < OrdValue::Infinite);
    }

    #[test]
    fn theta_classification() {
        let t = theta_prime_classification(&b(27)).unwrap();
        assert_eq!(t.multiple, vec![b(3)]);
        assert!(t.simple.is_empty());
        let t = theta_prime_classification(&b(164_025)).unwrap();
        assert_eq!(t.multiple, vec![b(3), b(5)]);
        assert_eq!(t.pretty(), "3⁸×5²");
        let t = theta_prime_classification(&b(1)).unwrap();
        assert!(t.multiple.is_empty() && t.simple.is_empty());
        assert_eq!(theta_prime_classification(&b(0)), Err(Error::ZeroTheta));
        let t = theta_prime_classification(&b(15)).unwrap();
        assert_eq!(t.simple, vec![b(3), b(5)]);
    }

    #[test]
    fn pretty_printing() {
        let f = vec![(b(2), 1), (b(3), 2), (b(759_799), 1)];
        assert_eq!(pretty_factorization(&f), "2×3²×759799");
        assert_eq!(pretty_factorization(&[(b(3), 12)]), "3¹²");
    }
}
