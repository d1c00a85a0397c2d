//! JSON, CSV and human-readable renderings of analysis results.
//!
//! JSON output carries `"schema": 1`; integers of any size are emitted as
//! bare JSON numbers, never strings or floats.

use std::fmt::Write as _;

use dgs_core::cospectral::{LevelConstraints, Membership};
use dgs_core::criteria::{
    pretty_factorization, ExclusionCheck, FactorCheck, ImprovedCheck, OrdValue, PrimeAnalysis,
    SpectralInvariants, Status, Verdict,
};
use dgs_core::exactla::integer::factorize;
use dgs_core::fpoly::FpFactorization;
use dgs_core::Graph;
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Beyond this many digits a number is printed without factoring it.
const FACTOR_DIGITS: usize = 24;

pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal is a JSON number"))
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

fn ord(o: OrdValue) -> Value {
    match o {
        OrdValue::Finite(k) => json!(k),
        OrdValue::Infinite => json!("inf"),
    }
}

/// `-3³×759799`; plain digits when the number is zero, a unit, or too large
/// to factor quickly.
pub fn pretty(n: &BigInt) -> String {
    let digits = n.abs().to_string();
    if n.abs() <= BigInt::from(1) || digits.len() > FACTOR_DIGITS {
        return n.to_string();
    }
    let sign = if n.is_negative() { "-" } else { "" };
    format!("{sign}{}", pretty_factorization(&factorize(n)))
}

fn joined(v: &[BigInt], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn invariants_value(inv: &SpectralInvariants) -> Value {
    json!({
        "controllable": inv.controllable,
        "det_walk": big(&inv.det_walk),
        "halved_det": big(&inv.halved_det),
        "delta": big(&inv.delta),
        "theta": big(&inv.theta),
        "snf_walk": bigs(&inv.snf_walk.diagonal()),
        "charpoly": inv.charpoly.to_string(),
        "charpoly_plus_j": inv.charpoly_plus_j.to_string(),
    })
}

fn ec_value(ec: &ExclusionCheck) -> Value {
    json!({
        "applicable": ec.applicable,
        "passed": ec.passed,
        "rank_p": ec.rank_p,
        "witness": ec.witness,
    })
}

fn ic_value(ic: &ImprovedCheck) -> Value {
    json!({
        "applicable": ic.applicable,
        "passed": ic.passed,
        "ord_last_factor": ord(ic.ord_last_factor),
        "sfp_degree": ic.sfp_degree,
        "nullity_p": ic.nullity_p,
    })
}

fn factor_value(f: &FactorCheck) -> Value {
    json!({
        "factor": f.factor.to_string(),
        "degree": f.degree,
        "det_a": big(&f.det_a),
        "det_a_plus_j": big(&f.det_a_plus_j),
        "ord_a": ord(f.ord_a),
        "ord_a_plus_j": ord(f.ord_a_plus_j),
        "holds": f.holds,
    })
}

fn prime_value(a: &PrimeAnalysis) -> Value {
    json!({
        "p": a.p,
        "phi_p": a.phi_p_factorization.to_string(),
        "multiple_factors": a.multiple_factors.iter().map(factor_value).collect::<Vec<_>>(),
        "ec": ec_value(&a.ec),
        "ic": ic_value(&a.ic),
        "main_passed": a.main_passed,
        "excluded": a.excluded,
        "excluded_by": a.excluded_by.map(|c| c.as_str()),
    })
}

pub fn verdict_json(g: &Graph, v: &Verdict) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "graph6": g.to_graph6(),
        "order": g.order(),
        "mode": v.mode.as_str(),
        "status": v.status.as_str(),
        "certified_by": v.certified_by.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "unresolved_primes": bigs(&v.unresolved_primes),
        "theta": big(&v.invariants.theta),
        "theta_factorization": v.theta_primes.pretty(),
        "multiple_primes": bigs(&v.theta_primes.multiple),
        "invariants": invariants_value(&v.invariants),
        "primes": v.analyses.iter().map(prime_value).collect::<Vec<_>>(),
    })
}

pub const VERDICT_CSV_HEADER: &str = "graph6,order,mode,status,theta,certified_by,unresolved_primes";

pub fn verdict_csv_row(g: &Graph, v: &Verdict) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        csv_field(&g.to_graph6()),
        g.order(),
        v.mode,
        v.status,
        v.invariants.theta,
        v.certified_by.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(";"),
        joined(&v.unresolved_primes, ";"),
    )
}

/// graph6 may contain `"` and `,`; quote when needed.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn push_invariants_human(out: &mut String, inv: &SpectralInvariants) {
    let half = inv.order / 2;
    let _ = writeln!(out, "det W          {}", inv.det_walk);
    let _ = writeln!(out, "det W / 2^{half:<4} {}", pretty(&inv.halved_det));
    let _ = writeln!(out, "Delta          {}", inv.delta);
    let _ = writeln!(out, "theta          {}", pretty(&inv.theta));
    let _ = writeln!(out, "SNF(W)         {}", joined(&inv.snf_walk.diagonal(), ","));
    let _ = writeln!(out, "d_n(W)         {}", pretty(&inv.last_invariant_factor()));
}

fn ec_human(ec: &ExclusionCheck, n: usize, p: u64) -> String {
    if !ec.applicable {
        format!("not applicable (rank_{p} W = {}, needs {})", ec.rank_p, n.saturating_sub(1))
    } else if ec.passed {
        "passed".into()
    } else {
        "failed (kernel vector is isotropic)".into()
    }
}

fn ic_human(ic: &ImprovedCheck, p: u64) -> String {
    let detail = format!("deg sfp(Phi_{p}) = {}, nullity_{p} W = {}", ic.sfp_degree, ic.nullity_p);
    if !ic.applicable {
        format!("not applicable (ord_{p} d_n(W) = {})", ic.ord_last_factor)
    } else if ic.passed {
        format!("passed ({detail})")
    } else {
        format!("failed ({detail})")
    }
}

pub fn verdict_human(g: &Graph, v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph          {} (n = {})", g.to_graph6(), g.order());
    let _ = writeln!(out, "mode           {}", v.mode);
    let status = match v.status {
        Status::DgsCertified => format!(
            "{} by {}",
            v.status,
            v.certified_by.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("+")
        ),
        Status::Inconclusive => format!(
            "{} (unresolved primes: {})",
            v.status,
            joined(&v.unresolved_primes, ", ")
        ),
        _ => v.status.to_string(),
    };
    let _ = writeln!(out, "status         {status}");
    push_invariants_human(&mut out, &v.invariants);
    for a in &v.analyses {
        let p = a.p;
        let _ = writeln!(out, "\np = {p}");
        let _ = writeln!(out, "  Phi_{p}        {}", a.phi_p_factorization);
        let _ = writeln!(out, "  EC           {}", ec_human(&a.ec, g.order(), p));
        let _ = writeln!(out, "  IC           {}", ic_human(&a.ic, p));
        if a.multiple_factors.is_empty() {
            let _ = writeln!(out, "  main         holds (no multiple factor)");
        }
        for f in &a.multiple_factors {
            let _ = writeln!(
                out,
                "  main         {}: det = {} / {}, ord_{p} = {} / {}, deg {} -> {}",
                f.factor,
                pretty(&f.det_a),
                pretty(&f.det_a_plus_j),
                f.ord_a,
                f.ord_a_plus_j,
                f.degree,
                if f.holds { "T" } else { "F" }
            );
        }
        let _ = writeln!(
            out,
            "  excluded     {}",
            a.excluded_by.map_or("no".to_string(), |c| format!("yes, by {c}"))
        );
    }
    out
}

/// `Phi_p` factorizations for every multiple prime of `theta`.
pub type PhiTable = Vec<(u64, FpFactorization)>;

pub fn invariants_json(g: &Graph, inv: &SpectralInvariants, phis: &PhiTable) -> Value {
    let mut v = json!({
        "schema": SCHEMA_VERSION,
        "graph6": g.to_graph6(),
        "order": g.order(),
    });
    let obj = v.as_object_mut().expect("object");
    if let Value::Object(fields) = invariants_value(inv) {
        obj.extend(fields);
    }
    obj.insert(
        "phi_p".into(),
        Value::Array(
            phis.iter()
                .map(|(p, f)| json!({"p": p, "factorization": f.to_string()}))
                .collect(),
        ),
    );
    v
}

pub fn invariants_human(g: &Graph, inv: &SpectralInvariants, phis: &PhiTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph          {} (n = {})", g.to_graph6(), g.order());
    if !inv.controllable {
        let _ = writeln!(out, "not controllable: det W = 0");
        return out;
    }
    push_invariants_human(&mut out, inv);
    for (p, f) in phis {
        let _ = writeln!(out, "Phi_{p:<10} {f}");
    }
    out
}

pub const INVARIANTS_CSV_HEADER: &str = "graph6,order,det_walk,halved_det,delta,theta,snf_walk";

pub fn invariants_csv_row(g: &Graph, inv: &SpectralInvariants) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        csv_field(&g.to_graph6()),
        g.order(),
        inv.det_walk,
        inv.halved_det,
        inv.delta,
        inv.theta,
        joined(&inv.snf_walk.diagonal(), ";"),
    )
}

/// Result of checking a candidate `Q` against a graph.
pub struct QReport<'a> {
    pub graph: &'a Graph,
    pub membership: &'a Membership,
    pub level: &'a BigInt,
    pub constraints: Option<&'a LevelConstraints>,
}

pub fn q_json(r: &QReport<'_>) -> Value {
    let m = r.membership;
    json!({
        "schema": SCHEMA_VERSION,
        "graph6": r.graph.to_graph6(),
        "member": m.member,
        "reason": m.reason.map(|x| x.as_str()),
        "level": big(r.level),
        "refutes_dgs": m.member && *r.level > BigInt::from(1),
        "mate_graph6": m.mate.as_ref().map(|h| h.to_graph6()),
        "level_constraints": r.constraints.map(|c| json!({
            "level_primes": bigs(&c.level_primes),
            "divides_last_invariant_factor": c.divides_last_invariant_factor,
            "divides_det_walk": c.divides_det_walk,
            "primes_divide_delta": c.primes_divide_delta,
        })),
    })
}

pub fn q_human(r: &QReport<'_>) -> String {
    let m = r.membership;
    let mut out = String::new();
    let _ = writeln!(out, "graph          {} (n = {})", r.graph.to_graph6(), r.graph.order());
    let _ = writeln!(out, "level          {}", r.level);
    match (&m.mate, m.reason) {
        (Some(h), _) => {
            let _ = writeln!(out, "member         yes");
            let _ = writeln!(out, "mate           {}", h.to_graph6());
            if *r.level > BigInt::from(1) {
                let _ = writeln!(out, "conclusion     not DGS (verified mate, level {})", r.level);
            } else {
                let _ = writeln!(out, "conclusion     level 1: permutation, mate is isomorphic");
            }
        }
        (None, reason) => {
            let _ = writeln!(
                out,
                "member         no ({})",
                reason.map_or("unknown", |x| x.as_str())
            );
        }
    }
    if let Some(c) = r.constraints {
        let yn = |b: bool| if b { "yes" } else { "NO" };
        let _ = writeln!(out, "level | d_n(W) {}", yn(c.divides_last_invariant_factor));
        let _ = writeln!(out, "level | det W  {}", yn(c.divides_det_walk));
        let _ = writeln!(out, "primes | Delta {}", yn(c.primes_divide_delta));
    }
    out
}
