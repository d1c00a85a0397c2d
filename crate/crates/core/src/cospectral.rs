//! Rational regular orthogonal matrices and cospectral-mate certificates.
//!
//! A controllable graph `G` is DGS exactly when every `Q` in
//! `Q(G) = { Q in RO_n(Q) : Q^T A(G) Q is a 0/1 matrix }` has level 1. This
//! module can only ever assert the negative direction, and only with an
//! explicit, exactly verified `Q` of level greater than one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::criteria::{compute_invariants, walk_matrix, SpectralInvariants};
use crate::exactla::integer::factorize;
use crate::exactla::{charpoly_exact, rational_inverse};
use crate::{Error, Graph, Result};

pub use crate::exactla::RationalMatrix;

/// Least positive `k` with `k q` integral.
pub fn level(q: &RationalMatrix) -> BigInt {
    q.denominator_lcm()
}

/// `q^T q = I` and `q e = e`, exactly.
pub fn is_regular_orthogonal(q: &RationalMatrix) -> bool {
    check_regular_orthogonal(q).is_ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonMemberReason {
    NotSquare,
    NotOrthogonal,
    NotRegular,
    NotZeroOne,
    NonzeroDiagonal,
}

impl NonMemberReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NonMemberReason::NotSquare => "NOT_SQUARE",
            NonMemberReason::NotOrthogonal => "NOT_ORTHOGONAL",
            NonMemberReason::NotRegular => "NOT_REGULAR",
            NonMemberReason::NotZeroOne => "CONJUGATE_NOT_01",
            NonMemberReason::NonzeroDiagonal => "CONJUGATE_NONZERO_DIAGONAL",
        }
    }
}

impl fmt::Display for NonMemberReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_regular_orthogonal(q: &RationalMatrix) -> std::result::Result<(), NonMemberReason> {
    if !q.is_square() {
        return Err(NonMemberReason::NotSquare);
    }
    if !(&q.transpose() * q).is_identity() {
        return Err(NonMemberReason::NotOrthogonal);
    }
    let e = vec![BigRational::one(); q.cols()];
    if q.mul_vec(&e) != e {
        return Err(NonMemberReason::NotRegular);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub mate: Option<Graph>,
    pub reason: Option<NonMemberReason>,
}

/// Decides `q in Q(g)`; on success the mate `H` with `A(H) = q^T A(g) q`.
pub fn verify_membership(q: &RationalMatrix, g: &Graph) -> Result<Membership> {
    let n = g.order();
    if q.rows() != n || q.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if q.rows() != n { q.rows() } else { q.cols() },
        });
    }
    let fail = |reason| Membership {
        member: false,
        mate: None,
        reason: Some(reason),
    };
    if let Err(reason) = check_regular_orthogonal(q) {
        return Ok(fail(reason));
    }
    let a = RationalMatrix::from_int(&g.adjacency());
    let conj = &(&q.transpose() * &a) * q;
    let zero = BigRational::zero();
    let one = BigRational::one();
    if conj.entries().iter().any(|x| *x != zero && *x != one) {
        return Ok(fail(NonMemberReason::NotZeroOne));
    }
    if (0..n).any(|i| conj[(i, i)] != zero) {
        return Ok(fail(NonMemberReason::NonzeroDiagonal));
    }
    let mate = Graph::from_matrix(&conj.to_int().expect("0/1 entries"))?;
    Ok(Membership {
        member: true,
        mate: Some(mate),
        reason: None,
    })
}

/// A verified element of `Q(source)` together with its mate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCertificate {
    pub q: RationalMatrix,
    pub level: BigInt,
    pub source: Graph,
    pub mate: Graph,
}

impl QCertificate {
    /// `None` when `q` is not a member of `Q(source)`.
    pub fn verify(q: RationalMatrix, source: &Graph) -> Result<Option<Self>> {
        let m = verify_membership(&q, source)?;
        Ok(m.mate.map(|mate| QCertificate {
            level: level(&q),
            q,
            source: source.clone(),
            mate,
        }))
    }

    /// Level above one: the source graph has a non-isomorphic generalized
    /// cospectral mate and is not DGS.
    pub fn refutes_dgs(&self) -> bool {
        self.level > BigInt::one()
    }

    /// Arithmetic constraints every certificate must satisfy against the
    /// source graph's invariants.
    pub fn level_constraints(&self, inv: &SpectralInvariants) -> LevelConstraints {
        let dn = inv.last_invariant_factor();
        let primes: Vec<BigInt> = factorize(&self.level).into_iter().map(|(p, _)| p).collect();
        LevelConstraints {
            divides_last_invariant_factor: !dn.is_zero() && dn.is_multiple_of(&self.level),
            divides_det_walk: !inv.det_walk.is_zero() && inv.det_walk.is_multiple_of(&self.level),
            primes_divide_delta: primes.iter().all(|p| inv.delta.is_multiple_of(p)),
            level_primes: primes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelConstraints {
    pub level_primes: Vec<BigInt>,
    /// `level | d_n(W)`.
    pub divides_last_invariant_factor: bool,
    /// `level | det W`.
    pub divides_det_walk: bool,
    /// Every prime of `level` divides `Delta`.
    pub primes_divide_delta: bool,
}

impl LevelConstraints {
    pub fn all_hold(&self) -> bool {
        self.divides_last_invariant_factor && self.divides_det_walk && self.primes_divide_delta
    }
}

/// `Q` with `Q^T = W(h) W(g)^{-1}`.
pub fn q_from_walk_matrices(g: &Graph, h: &Graph) -> Result<RationalMatrix> {
    if g.order() != h.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: h.order(),
        });
    }
    let wg = walk_matrix(g);
    let inv = rational_inverse(&wg).map_err(|e| match e {
        Error::Singular => Error::NotControllable,
        other => other,
    })?;
    let wh = RationalMatrix::from_int(&walk_matrix(h));
    Ok((&wh * &inv).transpose())
}

/// Same characteristic polynomial for the graphs and for their complements.
pub fn generalized_cospectral(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let chi = |x: &Graph| charpoly_exact(&x.adjacency()).expect("square");
    chi(g) == chi(h) && chi(&g.complement()) == chi(&h.complement())
}

/// `theta(g) == theta(h)` for generalized cospectral `g`, `h`.
pub fn theta_invariance_check(g: &Graph, h: &Graph) -> Result<bool> {
    if !generalized_cospectral(g, h) {
        return Err(Error::NotCospectral);
    }
    Ok(compute_invariants(g).theta == compute_invariants(h).theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_member() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = verify_membership(&RationalMatrix::identity(4), &g).unwrap();
        assert!(m.member);
        assert_eq!(m.mate.unwrap(), g);
        assert_eq!(level(&RationalMatrix::identity(4)), BigInt::one());
    }

    #[test]
    fn sign_flip_is_not_regular() {
        let q = RationalMatrix::parse("1 0\n0 -1").unwrap();
        assert!(!is_regular_orthogonal(&q));
        let m = verify_membership(&q, &Graph::complete(2)).unwrap();
        assert_eq!(m.reason, Some(NonMemberReason::NotRegular));
        let half = RationalMatrix::parse("1/2 1/2\n1/2 1/2").unwrap();
        assert_eq!(
            verify_membership(&half, &Graph::complete(2)).unwrap().reason,
            Some(NonMemberReason::NotOrthogonal)
        );
    }

    #[test]
    fn permutation_levels_and_dimension_errors() {
        let p = RationalMatrix::permutation(&[2, 0, 1]);
        assert_eq!(level(&p), BigInt::one());
        assert!(is_regular_orthogonal(&p));
        assert!(verify_membership(&p, &Graph::empty(2)).is_err());
    }

    #[test]
    fn cospectral_basics() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(generalized_cospectral(&g, &g));
        assert!(!generalized_cospectral(&Graph::complete(2), &Graph::empty(2)));
        assert_eq!(
            theta_invariance_check(&Graph::complete(2), &Graph::empty(2)),
            Err(Error::NotCospectral)
        );
        assert_eq!(
            q_from_walk_matrices(&Graph::complete(2), &Graph::complete(2)),
            Err(Error::NotControllable)
        );
    }
}
