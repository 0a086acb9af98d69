//! Certified upper bounds on the number of irreducible factors of integer
//! polynomials.
//!
//! The library applies valuation criteria to a polynomial `f`: it factors
//! `|f(m)|` or the leading shifted coefficient at integer witnesses `m`,
//! checks exact divisibility and Newton-polygon slope conditions, and emits
//! a self-contained [`criteria::Certificate`] bounding the number of
//! irreducible factors of `f` in `Z[z]` (bound 1 certifies irreducibility).
//! Certificates are serializable and re-checkable by an independent
//! verifier, and a brute-force Kronecker [`oracle`] provides ground truth at
//! desk scale for the test suite and the CLI.

pub mod arith;
pub mod certify;
pub mod criteria;
pub mod newton;
pub mod oracle;
pub mod poly;

pub use arith::{FactorPolicy, Factorization, Primality, Valuation};
pub use certify::{
    analyze, certificate_from_json, certificate_to_json, verify_certificate, AnalysisReport,
    AnalyzeConfig, CriteriaMask, Verdict, Verification,
};
pub use criteria::{CertPrime, Certificate, CriterionOutcome, PrimeCertainty, TheoremId};
pub use newton::{DegreeBound, DeltaWitness, NewtonPolygon, ValuationPoint};
pub use oracle::{oracle_count, oracle_factor, OracleFactorization, OracleLimits};
pub use poly::{Polynomial, Rational, ShiftedCoefficients};
