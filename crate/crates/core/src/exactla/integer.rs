//! Scalar integer helpers: primality, factorization and `Z/pZ` arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 1_000_000;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Canonical representative of `x mod p` in `0..p`.
pub fn reduce_big(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Deterministic Miller–Rabin; exact for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (d, s) = split_pow2(n - 1);
    MR_BASES.iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

fn split_pow2(mut d: u64) -> (u64, u32) {
    let s = d.trailing_zeros();
    d >>= s;
    (d, s)
}

/// Miller–Rabin over the first twelve prime bases. Deterministic below
/// 3.3e24, a strong probable-prime test above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    MR_BASES.iter().all(|&a| {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            return true;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                return true;
            }
        }
        false
    })
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

pub fn require_odd_prime(p: u64) -> Result<()> {
    if p != 2 && is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p.to_string()))
    }
}

/// Prime factorization of `|n|` as `(prime, exponent)` pairs in ascending
/// order. Trial division up to 10^6, then Brent–Pollard rho with fixed
/// starting parameters. `0` and `±1` have no factors.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut rest = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if rest <= BigInt::one() {
        return out;
    }
    let push = |out: &mut Vec<(BigInt, u32)>, p: BigInt, e: u32| {
        if let Some(slot) = out.iter_mut().find(|(q, _)| *q == p) {
            slot.1 += e;
        } else {
            out.push((p, e));
        }
    };

    let tz = rest.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        push(&mut out, BigInt::from(2), tz as u32);
        rest >>= tz;
    }
    let mut d: u64 = 3;
    while d <= TRIAL_LIMIT && rest > BigInt::one() {
        if BigInt::from(d) * BigInt::from(d) > rest {
            break;
        }
        if d % 64 == 3 && is_probable_prime(&rest) {
            break;
        }
        let e = strip_factor(&mut rest, d);
        if e > 0 {
            push(&mut out, BigInt::from(d), e);
        }
        d += 2;
    }

    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(&mut out, m, 1);
            continue;
        }
        if let Some((root, k)) = perfect_power(&m) {
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        let f = pollard_rho(&m);
        let g = &m / &f;
        stack.push(f);
        stack.push(g);
    }
    out.sort();
    out
}

fn strip_factor(rest: &mut BigInt, d: u64) -> u32 {
    let mut e = 0;
    if let Some(mut small) = rest.to_u64() {
        while small % d == 0 {
            small /= d;
            e += 1;
        }
        *rest = BigInt::from(small);
        return e;
    }
    let bd = BigInt::from(d);
    loop {
        let (q, r) = rest.div_rem(&bd);
        if !r.is_zero() {
            return e;
        }
        *rest = q;
        e += 1;
    }
}

/// A nontrivial factor of the odd composite `n` (Brent's cycle detection).
/// `m = r^k` with `k >= 2` maximal over the smallest root found.
fn perfect_power(m: &BigInt) -> Option<(BigInt, u32)> {
    let bits = m.bits() as u32;
    for k in 2..=bits {
        let r = m.nth_root(k);
        if r <= BigInt::one() {
            break;
        }
        if num_traits::pow(r.clone(), k as usize) == *m {
            return Some((r, k));
        }
    }
    None
}

fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g;
        let mut x;
        let mut ys = y.clone();
        const BATCH: u64 = 128;
        loop {
            x = y.clone();
            g = BigInt::one();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
            if !g.is_one() {
                break;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}
