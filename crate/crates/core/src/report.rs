//! Verification report records: per-identity, per-parameter-instance
//! pass/fail results with reproduction data. Reports are machine-readable
//! JSON first; the schema is versioned.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

pub const REPORT_SCHEMA: u32 = 1;

/// Cap on stored failure records per report; sweeps run in ascending
/// parameter order, so the stored ones are the minimal counterexamples.
pub const MAX_STORED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Mixed,
}

/// One failing instance with everything needed to reproduce it.
#[derive(Debug, Clone, Serialize)]
pub struct FailureRecord {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub instances_checked: u64,
    pub failures: Vec<FailureRecord>,
    pub failure_count: u64,
    pub status: Status,
    /// Sign branches, n-resolutions, adjudicated variants and similar
    /// per-suite metadata.
    pub strategy: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn new(identity_id: &str, params: BTreeMap<String, String>) -> Self {
        VerificationReport {
            schema: REPORT_SCHEMA,
            identity_id: identity_id.to_string(),
            params,
            instances_checked: 0,
            failures: Vec::new(),
            failure_count: 0,
            status: Status::Pass,
            strategy: BTreeMap::new(),
        }
    }

    /// Record one checked instance. Failures keep full reproduction data up
    /// to the storage cap; the count is always exact.
    pub fn check(
        &mut self,
        ok: bool,
        params: impl FnOnce() -> BTreeMap<String, String>,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        self.instances_checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(FailureRecord {
                    params: params(),
                    lhs: lhs(),
                    rhs: rhs(),
                });
            }
        }
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.strategy.insert(key.to_string(), value.to_string());
    }

    /// Fix the final status: PASS iff no failures, FAIL iff all instances
    /// failed, MIXED otherwise.
    pub fn finalize(&mut self) -> Status {
        self.status = if self.failure_count == 0 {
            Status::Pass
        } else if self.failure_count == self.instances_checked {
            Status::Fail
        } else {
            Status::Mixed
        };
        self.status
    }
}

/// Serialize BigInts as JSON integers when they fit i64, decimal strings
/// otherwise (JSON numbers cannot carry arbitrary precision).
pub fn serialize_bigints<S: Serializer>(
    v: &[BigInt],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for c in v {
        match c.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

/// Shared helper: parameter map for one field instance.
pub fn field_params(
    p: u64,
    r: u32,
    ell: u32,
    gamma: &str,
    poly: &[u64],
) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("p".into(), p.to_string());
    m.insert("r".into(), r.to_string());
    m.insert("ell".into(), ell.to_string());
    m.insert("gamma".into(), gamma.to_string());
    m.insert(
        "poly".into(),
        poly.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let mut r = VerificationReport::new("X", BTreeMap::new());
        r.check(true, BTreeMap::new, String::new, String::new);
        assert_eq!(r.finalize(), Status::Pass);
        r.check(false, BTreeMap::new, || "1".into(), || "2".into());
        assert_eq!(r.finalize(), Status::Mixed);
        let mut r2 = VerificationReport::new("Y", BTreeMap::new());
        r2.check(false, BTreeMap::new, || "1".into(), || "2".into());
        assert_eq!(r2.finalize(), Status::Fail);
        assert_eq!(r2.failures.len(), 1);
        assert_eq!(r2.failures[0].lhs, "1");
    }

    #[test]
    fn failure_cap_keeps_exact_count() {
        let mut r = VerificationReport::new("Z", BTreeMap::new());
        for _ in 0..100 {
            r.check(false, BTreeMap::new, || "l".into(), || "r".into());
        }
        assert_eq!(r.failure_count, 100);
        assert_eq!(r.failures.len(), MAX_STORED_FAILURES);
    }

    #[test]
    fn json_shape() {
        let mut r = VerificationReport::new("CN-SUM", BTreeMap::new());
        r.check(true, BTreeMap::new, String::new, String::new);
        r.finalize();
        let js = serde_json::to_value(&r).unwrap();
        assert_eq!(js["schema"], 1);
        assert_eq!(js["identity_id"], "CN-SUM");
        assert_eq!(js["status"], "PASS");
    }
}
