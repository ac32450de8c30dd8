//! Verification reports: per-identity verdicts with paper loci, machine-readable
//! output, and the ledger of printed-text discrepancies.
//!
//! `paper-discrepancy` is distinct from `fail`: it marks an engine-consistent
//! result that contradicts a display in the printed text. A suite whose only
//! non-passes are discrepancies is internally sound.

use crate::algebra::Monomial;
use num::BigRational;
use serde::Serialize;
use std::fmt::Write as _;

/// Verdict for a single identity instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "paper-discrepancy")]
    PaperDiscrepancy,
}

/// Witness attached to a failing or discrepant check.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub locus: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

/// Exponent bound for verification sweeps, plus the maximal dual word length.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bound {
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub t: i32,
    pub j: i32,
    pub wordlen: u32,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            k: 2,
            l: 2,
            m: 2,
            n: 2,
            t: 2,
            j: 1,
            wordlen: 4,
        }
    }
}

impl Bound {
    /// All basis monomials within the bound (min(k, l) = 0 by construction).
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for k in 0..=self.k {
            for l in 0..=self.l {
                if k.min(l) != 0 {
                    continue;
                }
                for t in -self.t..=self.t {
                    for m in 0..=self.m {
                        for n in 0..=self.n {
                            for j in -self.j..=self.j {
                                out.push(Monomial::new(k, l, t, m, n, j));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Unlocalized basis monomials: j = 0, and both k and l range freely
    /// (inputs are built as generator words, so k,l > 0 together is allowed).
    pub fn unlocalized_basis(&self) -> Vec<(u32, u32, i32, u32, u32)> {
        let mut out = Vec::new();
        for k in 0..=self.k {
            for l in 0..=self.l {
                for t in -self.t..=self.t {
                    for m in 0..=self.m {
                        for n in 0..=self.n {
                            out.push((k, l, t, m, n));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Numeric spot-check values for r and s.
#[derive(Debug, Clone, Serialize)]
pub struct Spot {
    #[serde(serialize_with = "ser_rational")]
    pub r: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub s: BigRational,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub bound: Bound,
    pub spot: Option<Spot>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip)]
    pub timing_ms: u128,
}

impl Report {
    pub fn new(suite: &str, bound: Bound, spot: Option<Spot>) -> Self {
        Report {
            suite: suite.to_string(),
            bound,
            spot,
            checks: Vec::new(),
            summary: Summary {
                pass: 0,
                fail: 0,
                discrepancy: 0,
            },
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::PaperDiscrepancy => self.summary.discrepancy += 1,
        }
        self.checks.push(check);
    }

    pub fn pass(&mut self, id: &str, locus: &str) {
        self.push(Check {
            id: id.to_string(),
            locus: locus.to_string(),
            status: Status::Pass,
            counterexample: None,
        });
    }

    pub fn fail(&mut self, id: &str, locus: &str, ce: Option<Counterexample>) {
        self.push(Check {
            id: id.to_string(),
            locus: locus.to_string(),
            status: Status::Fail,
            counterexample: ce,
        });
    }

    pub fn discrepancy(&mut self, id: &str, locus: &str, ce: Option<Counterexample>) {
        self.push(Check {
            id: id.to_string(),
            locus: locus.to_string(),
            status: Status::PaperDiscrepancy,
            counterexample: ce,
        });
    }

    /// Record an exact assertion: pass when the sides agree symbolically
    /// (and numerically at the spot, when one is set).
    pub fn assert_eq_scalar(
        &mut self,
        id: &str,
        locus: &str,
        at: &Monomial,
        lhs: &crate::scalar::Scalar,
        rhs: &crate::scalar::Scalar,
    ) -> bool {
        let mut ok = lhs == rhs;
        if ok {
            if let Some(spot) = &self.spot {
                ok = match (lhs.substitute(&spot.r, &spot.s), rhs.substitute(&spot.r, &spot.s)) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
            }
        }
        if ok {
            self.pass(id, locus);
        } else {
            self.fail(
                id,
                locus,
                Some(Counterexample {
                    monomial: at.to_string(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            );
        }
        ok
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        self.timing_ms += other.timing_ms;
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.discrepancy == 0
    }

    /// Exit-code contract: 0 all pass, 1 any fail, 3 discrepancies only.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.discrepancy > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Plain-text table, deterministic for fixed inputs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let b = &self.bound;
        let _ = writeln!(
            out,
            "bound: k={} l={} m={} n={} t={} j={} wordlen={}",
            b.k, b.l, b.m, b.n, b.t, b.j, b.wordlen
        );
        if let Some(spot) = &self.spot {
            let _ = writeln!(out, "spot: r={} s={}", spot.r, spot.s);
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::PaperDiscrepancy => "PAPER-DISCREPANCY",
            };
            let _ = writeln!(out, "{:<18} {:<44} {}", tag, c.id, c.locus);
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "    at {}: engine {} vs stated {}", ce.monomial, ce.lhs, ce.rhs);
            }
        }
        let _ = writeln!(
            out,
            "summary: pass={} fail={} discrepancy={}",
            self.summary.pass, self.summary.fail, self.summary.discrepancy
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_summary_zeros() {
        let r = Report::new("empty", Bound::default(), None);
        assert_eq!(r.summary.pass, 0);
        assert_eq!(r.summary.fail, 0);
        assert_eq!(r.summary.discrepancy, 0);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x", Bound::default(), None);
        r.pass("a", "p");
        assert_eq!(r.exit_code(), 0);
        r.discrepancy("b", "p", None);
        assert_eq!(r.exit_code(), 3);
        r.fail("c", "p", None);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_is_deterministic() {
        let mut r = Report::new("x", Bound::default(), None);
        r.pass("a", "locus");
        assert_eq!(r.to_json(), r.to_json());
        assert!(r.to_json().contains("\"suite\": \"x\""));
    }

    #[test]
    fn default_bound_monomial_count() {
        // (k,l) with min = 0 and k,l <= 2: 5 choices; m,n: 3 each; t: 5; j: 3
        assert_eq!(Bound::default().monomials().len(), 5 * 3 * 3 * 5 * 3);
    }
}
