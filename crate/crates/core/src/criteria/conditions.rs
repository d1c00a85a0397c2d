use num_bigint::BigInt;
use num_integer::Integer;

use super::invariants::{compute_invariants, ord_p, OrdValue, SpectralInvariants};
use crate::exactla::integer::{add_mod, mul_mod, require_odd_prime};
use crate::exactla::{det_exact, mat_poly_eval, nullspace_mod_p, rank_mod_p, IntMatrix};
use crate::fpoly::{factor_fp, lift_to_int, reduce_mod_p, squarefree_part, FpFactorization, FpPoly};
use crate::{Graph, Result};

/// `Phi_p(G; x) = gcd(chi(A; x), chi(A + J; x))` over `F_p`.
pub fn phi_p(g: &Graph, p: u64) -> Result<FpPoly> {
    require_odd_prime(p)?;
    let a = g.adjacency();
    let n = g.order();
    let chi = crate::exactla::charpoly_exact(&a)?;
    let chi_j = crate::exactla::charpoly_exact(&(&a + &IntMatrix::ones(n, n)))?;
    phi_p_from_charpolys(&chi, &chi_j, p)
}

pub(crate) fn phi_p_of(inv: &SpectralInvariants, p: u64) -> Result<FpPoly> {
    phi_p_from_charpolys(&inv.charpoly, &inv.charpoly_plus_j, p)
}

fn phi_p_from_charpolys(
    chi: &crate::exactla::IntPoly,
    chi_j: &crate::exactla::IntPoly,
    p: u64,
) -> Result<FpPoly> {
    let f = reduce_mod_p(chi, p)?;
    let g = reduce_mod_p(chi_j, p)?;
    Ok(f.gcd(&g))
}

/// The older sufficient condition: `theta` odd and squarefree.
pub fn check_theorem_old(inv: &SpectralInvariants) -> bool {
    if !inv.controllable || inv.theta.is_even() {
        return false;
    }
    super::theta_prime_classification(&inv.theta)
        .map(|t| t.is_squarefree())
        .unwrap_or(false)
}

/// Outcome of the exclusion condition at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionCheck {
    /// `rank_p W == n - 1`.
    pub applicable: bool,
    pub passed: bool,
    pub rank_p: usize,
    /// Spanning vector of the nullspace of `W^T` mod `p`, when applicable.
    pub witness: Option<Vec<u64>>,
}

pub fn check_exclusion_condition(g: &Graph, p: u64) -> Result<ExclusionCheck> {
    require_odd_prime(p)?;
    exclusion_of(&compute_invariants(g), p)
}

pub(crate) fn exclusion_of(inv: &SpectralInvariants, p: u64) -> Result<ExclusionCheck> {
    let n = inv.order;
    let rank_p = rank_mod_p(&inv.walk, p)?;
    // Two independent routes to nullity_p W must agree.
    assert_eq!(
        n - rank_p,
        inv.snf_walk.count_divisible_by(&BigInt::from(p)),
        "rank over F_{p} disagrees with the Smith normal form of W"
    );
    if n == 0 || rank_p != n - 1 {
        return Ok(ExclusionCheck {
            applicable: false,
            passed: false,
            rank_p,
            witness: None,
        });
    }
    let mut basis = nullspace_mod_p(&inv.walk.transpose(), p)?;
    debug_assert_eq!(basis.len(), 1);
    let z = basis.pop().expect("one-dimensional nullspace");
    let norm = z
        .iter()
        .fold(0u64, |acc, &zi| add_mod(acc, mul_mod(zi, zi, p), p));
    Ok(ExclusionCheck {
        applicable: true,
        passed: norm != 0,
        rank_p,
        witness: Some(z),
    })
}

/// Outcome of the improved condition at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovedCheck {
    /// `p` divides `d_n(W)` exactly once.
    pub applicable: bool,
    pub passed: bool,
    pub ord_last_factor: OrdValue,
    pub sfp_degree: usize,
    pub nullity_p: usize,
}

pub fn check_improved_condition(g: &Graph, p: u64) -> Result<ImprovedCheck> {
    require_odd_prime(p)?;
    improved_of(&compute_invariants(g), p)
}

pub(crate) fn improved_of(inv: &SpectralInvariants, p: u64) -> Result<ImprovedCheck> {
    let ord_last_factor = ord_p(&inv.last_invariant_factor(), &BigInt::from(p))?;
    let phi = phi_p_of(inv, p)?;
    let sfp_degree = if phi.is_zero() {
        0
    } else {
        squarefree_part(&phi)?.degree().unwrap_or(0)
    };
    let nullity_p = inv.order - rank_mod_p(&inv.walk, p)?;
    let applicable = ord_last_factor == OrdValue::Finite(1);
    Ok(ImprovedCheck {
        applicable,
        passed: applicable && sfp_degree == nullity_p,
        ord_last_factor,
        sfp_degree,
        nullity_p,
    })
}

/// One multiple irreducible factor `phi` of `Phi_p` and the two
/// determinants compared against its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCheck {
    pub factor: FpPoly,
    pub degree: usize,
    pub det_a: BigInt,
    pub det_a_plus_j: BigInt,
    pub ord_a: OrdValue,
    pub ord_a_plus_j: OrdValue,
    /// `min(ord_a, ord_a_plus_j) == degree`.
    pub holds: bool,
}

impl FactorCheck {
    pub fn min_ord(&self) -> OrdValue {
        self.ord_a.min(self.ord_a_plus_j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainCheck {
    pub phi_p: FpPoly,
    pub factorization: FpFactorization,
    pub factors: Vec<FactorCheck>,
    /// Every multiple factor satisfies the equality (vacuous if none).
    pub passed: bool,
}

pub fn check_main_condition(g: &Graph, p: u64) -> Result<MainCheck> {
    require_odd_prime(p)?;
    main_of(g, &compute_invariants(g), p)
}

pub(crate) fn main_of(g: &Graph, inv: &SpectralInvariants, p: u64) -> Result<MainCheck> {
    let n = g.order();
    let a = g.adjacency();
    let aj = &a + &IntMatrix::ones(n, n);
    let phi = phi_p_of(inv, p)?;
    let factorization = factor_fp(&phi)?;
    let bp = BigInt::from(p);
    let mut factors = Vec::new();
    for f in factorization.multiple_factors() {
        let lifted = lift_to_int(&f);
        let degree = f.degree().expect("irreducible factor");
        let det_a = det_exact(&mat_poly_eval(&lifted, &a)?)?;
        let det_a_plus_j = det_exact(&mat_poly_eval(&lifted, &aj)?)?;
        let ord_a = ord_p(&det_a, &bp)?;
        let ord_a_plus_j = ord_p(&det_a_plus_j, &bp)?;
        let min = ord_a.min(ord_a_plus_j);
        debug_assert!(min >= OrdValue::Finite(degree as u32));
        factors.push(FactorCheck {
            holds: min == OrdValue::Finite(degree as u32),
            factor: f,
            degree,
            det_a,
            det_a_plus_j,
            ord_a,
            ord_a_plus_j,
        });
    }
    Ok(MainCheck {
        phi_p: phi,
        passed: factors.iter().all(|f| f.holds),
        factorization,
        factors,
    })
}
