//! Command implementations for the `polycert` binary. Each runner returns
//! the text to print on stdout; errors carry the process exit code so the
//! binary stays a thin dispatcher.

pub mod parse;
pub mod svg;

use num_bigint::BigInt;
use polycert::arith::ArithError;
use polycert::certify::{self, AnalysisReport, AnalyzeConfig, CertifyError, Verdict, Verification};
use polycert::criteria::{Certificate, CriteriaError, PrimeCertainty};
use polycert::newton::{self, DegreeBound, NewtonError};
use polycert::oracle::{self, OracleError, OracleLimits};
use polycert::poly::Polynomial;
use serde::Serialize;
use std::fmt::Write as _;

/// Exit codes: 0 success/pass, 1 verification failure, 2 input error,
/// 3 budget exhaustion.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    VerifyFailed(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::VerifyFailed(m) | CliError::Budget(m) => m,
        }
    }
}

fn map_certify(e: CertifyError) -> CliError {
    match e {
        CertifyError::Criteria(CriteriaError::Arith(ArithError::BudgetExceeded)) => {
            CliError::Budget("factoring budget exceeded".into())
        }
        other => CliError::Input(other.to_string()),
    }
}

fn map_newton(e: NewtonError) -> CliError {
    CliError::Input(e.to_string())
}

fn map_oracle(e: OracleError) -> CliError {
    match e {
        OracleError::BudgetExceeded => CliError::Budget(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn describe_delta(delta: &DegreeBound) -> String {
    match &delta.witness {
        Some(w) => {
            let d2 = w.d2.map(|d| format!(", d2={d}")).unwrap_or_default();
            format!("{} via p={}, j={}, d1={}{}", delta.bound, w.prime, w.j, w.d1, d2)
        }
        None => format!("{} (trivial)", delta.bound),
    }
}

fn describe_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let loc = match (&cert.m, cert.reversed) {
        (Some(m), _) => format!(" at m={m}"),
        (None, true) => " on the coefficient reversal".into(),
        (None, false) => String::new(),
    };
    let _ = writeln!(out, "{}{}: at most {} irreducible factor(s)", cert.theorem, loc, cert.bound);
    if !cert.primes.is_empty() {
        let parts: Vec<String> = cert
            .primes
            .iter()
            .map(|cp| {
                let j = cp.j.map(|j| format!(" (j={j})")).unwrap_or_default();
                format!("{}^{}{}", cp.p, cp.k, j)
            })
            .collect();
        let _ = writeln!(out, "  sign {}, primes: {}", if cert.sign < 0 { "-" } else { "+" }, parts.join(", "));
    }
    if let Some(d) = &cert.d {
        let _ = writeln!(out, "  d = {d}");
    }
    if let Some(q) = &cert.q {
        let _ = writeln!(out, "  q = {q}");
    }
    if let Some(delta) = &cert.delta {
        let _ = writeln!(out, "  delta: {}", describe_delta(delta));
    }
    if cert.prime_certainty == PrimeCertainty::Probable {
        let _ = writeln!(out, "  primality: probable (beyond the deterministic range)");
    }
    out
}

fn describe_report(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {}", report.poly);
    let _ = writeln!(out, "content: {}", report.content);
    let _ = writeln!(out, "delta: {}", describe_delta(&report.delta));
    match &report.verdict {
        Verdict::Irreducible => {
            let _ = writeln!(out, "verdict: irreducible");
        }
        Verdict::AtMost(b) => {
            let _ = writeln!(out, "verdict: at most {b} irreducible factors");
        }
        Verdict::Unknown => {
            let _ = writeln!(out, "verdict: unknown (no criterion certified)");
        }
    }
    if let Some(best) = &report.best {
        let _ = write!(out, "best certificate: {}", describe_certificate(best));
    }
    if let Some(range) = &report.tried_m {
        let _ = writeln!(out, "tried m: {}..{} ({} values)", range.from, range.to, range.count);
    }
    let _ = writeln!(out, "certificates found: {}", report.all_certificates.len());
    let _ = writeln!(
        out,
        "timing: delta {} ms, direct {} ms, scan {} ms",
        report.timings.delta_ms, report.timings.direct_ms, report.timings.scan_ms
    );
    out
}

pub struct AnalyzeOptions {
    pub m_min: Option<BigInt>,
    pub m_max: Option<BigInt>,
    pub budget_ms: Option<u64>,
    pub criteria: Option<String>,
    pub json: bool,
    pub seed: Option<u64>,
}

pub fn run_analyze(f: &Polynomial, opts: &AnalyzeOptions) -> Result<String, CliError> {
    let mut config = AnalyzeConfig {
        m_min: opts.m_min.clone(),
        m_max: opts.m_max.clone(),
        ..Default::default()
    };
    if let Some(ms) = opts.budget_ms {
        config.factor_budget_ms = ms;
    }
    if let Some(list) = &opts.criteria {
        config.criteria = certify::CriteriaMask::parse(list).map_err(CliError::Input)?;
    }
    if let Some(seed) = opts.seed {
        config.seed = seed;
    }
    let report = certify::analyze(f, &config).map_err(map_certify)?;
    if opts.json {
        Ok(certify::report_to_json(&report))
    } else {
        Ok(describe_report(&report))
    }
}

#[derive(Serialize)]
struct NewtonJson {
    prime: String,
    points: Vec<(usize, u64)>,
    vertices: Vec<(usize, u64)>,
    edges: Vec<NewtonEdgeJson>,
    delta_candidates: Vec<DeltaCandidateJson>,
    best_delta: Option<DeltaCandidateJson>,
}

#[derive(Serialize, Clone)]
struct NewtonEdgeJson {
    from: (usize, u64),
    to: (usize, u64),
    width: usize,
    slope: String,
    lattice_count: u64,
}

#[derive(Serialize, Clone)]
struct DeltaCandidateJson {
    j: usize,
    bound: usize,
    d1: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    d2: Option<u64>,
}

pub fn run_newton(
    f: &Polynomial,
    prime: &BigInt,
    svg_path: Option<&std::path::Path>,
    json: bool,
) -> Result<String, CliError> {
    let np = newton::newton_polygon(f, prime).map_err(map_newton)?;
    let n = f.degree();
    let mut candidates = Vec::new();
    let mut failures = Vec::new();
    for j in 1..=n {
        match newton::theorem5_bound(f, prime, j) {
            Ok(db) => {
                let w = db.witness.expect("witnessed");
                candidates.push(DeltaCandidateJson { j, bound: db.bound, d1: w.d1, d2: w.d2 });
            }
            Err(NewtonError::HypothesisFailed { condition, index }) => {
                failures.push((j, condition, index));
            }
            Err(e) => return Err(map_newton(e)),
        }
    }
    let best = candidates.iter().max_by_key(|c| c.bound).cloned();

    if let Some(path) = svg_path {
        std::fs::write(path, svg::render(&np))
            .map_err(|e| CliError::Input(format!("cannot write svg: {e}")))?;
    }

    if json {
        let wire = NewtonJson {
            prime: prime.to_string(),
            points: np.points.iter().map(|p| (p.x, p.y)).collect(),
            vertices: np.vertices.iter().map(|p| (p.x, p.y)).collect(),
            edges: np
                .edges
                .iter()
                .map(|e| NewtonEdgeJson {
                    from: (e.from.x, e.from.y),
                    to: (e.to.x, e.to.y),
                    width: e.width,
                    slope: e.slope.to_string(),
                    lattice_count: e.lattice_count,
                })
                .collect(),
            delta_candidates: candidates,
            best_delta: best,
        };
        return Ok(serde_json::to_string_pretty(&wire).expect("serializes"));
    }

    let mut out = String::new();
    let _ = writeln!(out, "prime: {prime}");
    let pts: Vec<String> = np.points.iter().map(|p| format!("({},{})", p.x, p.y)).collect();
    let _ = writeln!(out, "points: {}", pts.join(" "));
    let verts: Vec<String> = np.vertices.iter().map(|p| format!("({},{})", p.x, p.y)).collect();
    let _ = writeln!(out, "vertices: {}", verts.join(" "));
    for (i, e) in np.edges.iter().enumerate() {
        let _ = writeln!(
            out,
            "edge {}: ({},{}) -> ({},{}), width {}, slope {}, lattice points {}",
            i + 1,
            e.from.x,
            e.from.y,
            e.to.x,
            e.to.y,
            e.width,
            e.slope,
            e.lattice_count
        );
    }
    if candidates.is_empty() {
        let _ = writeln!(out, "delta candidates: none (no j satisfies the hypothesis)");
    } else {
        let _ = writeln!(out, "delta candidates:");
        for c in &candidates {
            let d2 = c.d2.map(|d| format!(", d2={d}")).unwrap_or_default();
            let _ = writeln!(out, "  j={}: bound {} (d1={}{})", c.j, c.bound, c.d1, d2);
        }
    }
    for (j, condition, index) in failures {
        let _ = writeln!(out, "  j={j}: fails {condition} at i={index}");
    }
    if let Some(b) = candidates.iter().max_by_key(|c| c.bound) {
        let _ = writeln!(out, "best delta for prime {}: {} (j={})", prime, b.bound, b.j);
    }
    Ok(out)
}

pub fn run_verify(f: &Polynomial, cert_text: &str) -> Result<String, CliError> {
    let cert = certify::certificate_from_json(cert_text).map_err(map_certify)?;
    match certify::verify_certificate(f, &cert).map_err(map_certify)? {
        Verification::Pass => Ok("verification: PASS\n".into()),
        Verification::Fail { condition } => {
            Err(CliError::VerifyFailed(format!("verification: FAIL ({condition})")))
        }
    }
}

#[derive(Serialize)]
struct OracleJson {
    unit: i8,
    content: String,
    count: usize,
    factors: Vec<Vec<String>>,
}

pub fn run_oracle(f: &Polynomial, json: bool, max_degree: Option<usize>) -> Result<String, CliError> {
    let mut limits = OracleLimits::default();
    if let Some(d) = max_degree {
        limits.max_degree = d;
    }
    let fac = oracle::oracle_factor(f, &limits).map_err(map_oracle)?;
    if json {
        let wire = OracleJson {
            unit: fac.unit,
            content: fac.content.to_string(),
            count: fac.count(),
            factors: fac
                .factors
                .iter()
                .map(|g| g.coeffs().iter().map(BigInt::to_string).collect())
                .collect(),
        };
        return Ok(serde_json::to_string_pretty(&wire).expect("serializes"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "input: {f}");
    let _ = writeln!(out, "unit: {}", if fac.unit < 0 { "-1" } else { "+1" });
    let _ = writeln!(out, "content: {}", fac.content);
    let _ = writeln!(out, "factors ({}, counted with multiplicity):", fac.count());
    for g in &fac.factors {
        let _ = writeln!(out, "  {g}");
    }
    Ok(out)
}
