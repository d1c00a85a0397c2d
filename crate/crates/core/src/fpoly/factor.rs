use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FpPoly;
use crate::{Error, Result};

/// Seed of the per-call Cantor–Zassenhaus stream.
const SPLIT_SEED: u64 = 0x00c0_ffee_5eed;
/// Below this value of `p * deg`, linear factors come from trying every
/// residue instead of random splitting.
const ROOT_SEARCH_LIMIT: u64 = 4096;

/// `unit * prod(factor^multiplicity)` with distinct monic irreducible
/// factors, sorted by degree and then coefficient sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, usize)>,
    p: u64,
}

impl FpFactorization {
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> FpPoly {
        self.factors
            .iter()
            .fold(FpPoly::one(self.p).scale(self.unit), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    pub fn multiple_factors(&self) -> Vec<FpPoly> {
        self.factors
            .iter()
            .filter(|(_, m)| *m >= 2)
            .map(|(f, _)| f.clone())
            .collect()
    }
}

/// Renders like `(x+1)^2 (x+2)^3`; a non-unit scalar is printed first.
impl fmt::Display for FpFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit != 1 || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (g, m) in &self.factors {
            let base = if g.degree() == Some(1) && g.coeff(0) == 0 {
                "x".to_string()
            } else {
                format!("({g})")
            };
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        f.write_str(&parts.join(" "))
    }
}

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime
/// squarefree monic parts `(a_i, i)` with `monic(f) = prod a_i^i`.
/// Handles the `f' = 0` case through `p`-th roots.
pub fn squarefree_decomposition(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    sqf_into(&f.monic(), 1, &mut out);
    Ok(out)
}

fn sqf_into(f: &FpPoly, scale: usize, out: &mut Vec<(FpPoly, usize)>) {
    if f.degree() == Some(0) {
        return;
    }
    let p = f.modulus() as usize;
    let df = f.derivative();
    if df.is_zero() {
        sqf_into(&f.pth_root(), scale * p, out);
        return;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        sqf_into(&c.pth_root(), scale * p, out);
    }
}

/// Product of the distinct monic irreducible factors of `f`.
pub fn squarefree_part(f: &FpPoly) -> Result<FpPoly> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts
        .iter()
        .fold(FpPoly::one(f.modulus()), |acc, (g, _)| acc.mul(g)))
}

/// Complete factorization: squarefree decomposition, distinct-degree
/// splitting, then equal-degree splitting (root search for small `p * deg`,
/// Cantor–Zassenhaus with a fixed seed otherwise).
pub fn factor_fp(f: &FpPoly) -> Result<FpFactorization> {
    let p = f.modulus();
    let parts = squarefree_decomposition(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors: Vec<(FpPoly, usize)> = Vec::new();
    for (part, mult) in parts {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.order_key().cmp(&b.0.order_key()));
    let mut merged: Vec<(FpPoly, usize)> = Vec::with_capacity(factors.len());
    for (g, m) in factors {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    Ok(FpFactorization {
        unit: f.leading_coeff(),
        factors: merged,
        p,
    })
}

/// Irreducible factors of multiplicity at least two, in factorization order.
pub fn multiple_irreducible_factors(f: &FpPoly) -> Result<Vec<FpPoly>> {
    Ok(factor_fp(f)?.multiple_factors())
}

/// Rabin's test: `x^(p^d) = x mod f` and `gcd(x^(p^(d/q)) - x, f) = 1` for
/// every prime `q | d`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let f = f.monic();
    let p = f.modulus();
    let x = FpPoly::x(p);
    let frob = |k: usize| {
        let pe = BigUint::from(p);
        (0..k).fold(x.rem(&f), |acc, _| acc.pow_mod(&pe, &f))
    };
    if frob(d) != x.rem(&f) {
        return false;
    }
    prime_divisors(d)
        .into_iter()
        .all(|q| frob(d / q).sub(&x).gcd(&f).is_one())
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a squarefree monic polynomial into `(product of all irreducible
/// factors of degree d, d)` blocks.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let pe = BigUint::from(p);
    let x = FpPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let p = f.modulus();
    if d == 1 && p.saturating_mul(n as u64) <= ROOT_SEARCH_LIMIT {
        return (0..p)
            .filter(|&a| f.eval(a) == 0)
            .map(|a| FpPoly::raw(p, vec![(p - a) % p, 1]))
            .collect();
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    let one = FpPoly::one(p);
    loop {
        let a = FpPoly::raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd(&a);
        let split = if !g.is_one() {
            g
        } else {
            f.gcd(&a.pow_mod(&exp, f).sub(&one))
        };
        let k = split.degree().unwrap_or(0);
        if k > 0 && k < n {
            let mut out = equal_degree(&split, d, rng);
            out.extend(equal_degree(&f.div_exact(&split), d, rng));
            return out;
        }
    }
}
