//! Arithmetic DGS criteria for controllable graphs.
//!
//! A graph is certified when every prime that could divide the level of a
//! rational regular orthogonal matrix in `Q(G)` is ruled out. When `theta`
//! is odd, only odd primes whose square divides `theta` remain candidates;
//! each of them is tested with the exclusion condition (EC), the improved
//! condition (IC) and the main condition on the multiple irreducible
//! factors of `Phi_p`. The [`Mode`] selects which of these may exclude a
//! prime.

mod conditions;
mod invariants;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use conditions::{
    check_exclusion_condition, check_improved_condition, check_main_condition,
    check_theorem_old, phi_p, ExclusionCheck, FactorCheck, ImprovedCheck, MainCheck,
};
pub use invariants::{
    compute_invariants, ord_p, pretty_factorization, theta_prime_classification, walk_matrix,
    OrdValue, SpectralInvariants, ThetaPrimes,
};

use crate::fpoly::{FpFactorization, FpPoly};
use crate::{Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// `theta` odd and squarefree.
    OldOnly,
    /// Old theorem plus EC / IC per multiple prime.
    OldEcIc,
    /// Main condition per multiple prime.
    MainOnly,
    /// Any of EC, IC, main per multiple prime.
    Combined,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::OldOnly, Mode::OldEcIc, Mode::MainOnly, Mode::Combined];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::OldOnly => "OLD_ONLY",
            Mode::OldEcIc => "OLD_EC_IC",
            Mode::MainOnly => "MAIN_ONLY",
            Mode::Combined => "COMBINED",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    /// Accepts `MAIN_ONLY`, `main-only`, `main`, and so on.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "old" | "old-only" => Ok(Mode::OldOnly),
            "old-ec-ic" | "ec-ic" => Ok(Mode::OldEcIc),
            "main" | "main-only" => Ok(Mode::MainOnly),
            "combined" | "all" => Ok(Mode::Combined),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    OldTheorem,
    Exclusion,
    Improved,
    Main,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::OldTheorem => "THEOREM_OLD",
            Criterion::Exclusion => "EC",
            Criterion::Improved => "IC",
            Criterion::Main => "MAIN",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    DgsCertified,
    Inconclusive,
    NotControllable,
    ThetaEven,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::DgsCertified => "DGS_CERTIFIED",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::NotControllable => "NOT_CONTROLLABLE",
            Status::ThetaEven => "THETA_EVEN",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All criteria evaluated at one multiple prime of `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeAnalysis {
    pub p: u64,
    pub phi_p: FpPoly,
    pub phi_p_factorization: FpFactorization,
    pub multiple_factors: Vec<FactorCheck>,
    pub ec: ExclusionCheck,
    pub ic: ImprovedCheck,
    pub main_passed: bool,
    /// Whether the active mode rules `p` out.
    pub excluded: bool,
    pub excluded_by: Option<Criterion>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub mode: Mode,
    pub status: Status,
    pub certified_by: Vec<Criterion>,
    pub unresolved_primes: Vec<BigInt>,
    pub invariants: SpectralInvariants,
    /// Empty unless `theta` is odd and nonzero.
    pub theta_primes: ThetaPrimes,
    pub analyses: Vec<PrimeAnalysis>,
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        self.status == Status::DgsCertified
    }
}

/// Mode-independent analysis of one graph; [`Analysis::verdict`] projects
/// it onto a [`Mode`] without recomputation.
#[derive(Clone, Debug)]
pub struct Analysis {
    invariants: SpectralInvariants,
    theta_primes: ThetaPrimes,
    analyses: Vec<PrimeAnalysis>,
    /// Multiple primes too large for the word-sized mod-p kernels.
    oversized: Vec<BigInt>,
}

pub fn analyze_full(g: &Graph) -> Result<Analysis> {
    let invariants = compute_invariants(g);
    let mut out = Analysis {
        invariants,
        theta_primes: ThetaPrimes::default(),
        analyses: Vec::new(),
        oversized: Vec::new(),
    };
    let inv = &out.invariants;
    if !inv.controllable || !inv.theta_is_odd() {
        return Ok(out);
    }
    let primes = theta_prime_classification(&inv.theta)?;
    for p in &primes.multiple {
        let Some(ps) = invariants::small_prime(p) else {
            out.oversized.push(p.clone());
            continue;
        };
        let ec = conditions::exclusion_of(inv, ps)?;
        let ic = conditions::improved_of(inv, ps)?;
        let main = conditions::main_of(g, inv, ps)?;
        out.analyses.push(PrimeAnalysis {
            p: ps,
            phi_p: main.phi_p,
            phi_p_factorization: main.factorization,
            multiple_factors: main.factors,
            ec,
            ic,
            main_passed: main.passed,
            excluded: false,
            excluded_by: None,
        });
    }
    out.theta_primes = primes;
    Ok(out)
}

impl Analysis {
    pub fn invariants(&self) -> &SpectralInvariants {
        &self.invariants
    }

    pub fn verdict(&self, mode: Mode) -> Verdict {
        let inv = &self.invariants;
        let mut v = Verdict {
            mode,
            status: Status::NotControllable,
            certified_by: Vec::new(),
            unresolved_primes: Vec::new(),
            invariants: inv.clone(),
            theta_primes: self.theta_primes.clone(),
            analyses: Vec::new(),
        };
        if !inv.controllable {
            return v;
        }
        if !inv.theta_is_odd() {
            v.status = Status::ThetaEven;
            return v;
        }
        let mut analyses = self.analyses.clone();
        for a in &mut analyses {
            a.excluded_by = match mode {
                Mode::OldOnly => None,
                Mode::MainOnly => a.main_passed.then_some(Criterion::Main),
                Mode::OldEcIc => first_pass(a, false),
                Mode::Combined => first_pass(a, true),
            };
            a.excluded = a.excluded_by.is_some();
        }
        v.unresolved_primes = analyses
            .iter()
            .filter(|a| !a.excluded)
            .map(|a| BigInt::from(a.p))
            .chain(self.oversized.iter().cloned())
            .collect();
        v.unresolved_primes.sort();
        if v.unresolved_primes.is_empty() {
            v.status = Status::DgsCertified;
            if analyses.is_empty() && self.oversized.is_empty() {
                v.certified_by.push(match mode {
                    Mode::MainOnly => Criterion::Main,
                    _ => Criterion::OldTheorem,
                });
            } else {
                let mut tags: Vec<Criterion> = analyses.iter().filter_map(|a| a.excluded_by).collect();
                tags.sort();
                tags.dedup();
                v.certified_by = tags;
            }
        } else {
            v.status = Status::Inconclusive;
        }
        v.analyses = analyses;
        v
    }
}

fn first_pass(a: &PrimeAnalysis, with_main: bool) -> Option<Criterion> {
    if a.ec.passed {
        Some(Criterion::Exclusion)
    } else if a.ic.passed {
        Some(Criterion::Improved)
    } else if with_main && a.main_passed {
        Some(Criterion::Main)
    } else {
        None
    }
}

/// Runs the full pipeline and reports the verdict for `mode`.
pub fn analyze(g: &Graph, mode: Mode) -> Result<Verdict> {
    Ok(analyze_full(g)?.verdict(mode))
}
