//! Coverage beyond the release criteria: the adjudicated identities on an
//! l = 5 field with odd cofactor, and the default large-field workload.

use cyclolab::report::Status;
use cyclolab::verify::{run_suite, FieldParams, Lab, SuiteId};

/// q = 151, l = 5: k = 3 is odd, the parity that exposes every sign
/// subtlety, at the larger order 50.
#[test]
fn ell_five_with_odd_cofactor() {
    let lab = Lab::build(&FieldParams::new(151, 1, 5)).unwrap();
    assert_eq!(lab.engine.k % 2, 1);
    for suite in [
        SuiteId::CnSum,
        SuiteId::CnRows,
        SuiteId::CnCols,
        SuiteId::CnSym,
        SuiteId::DhSum,
        SuiteId::DhZero,
        SuiteId::JacSym,
        SuiteId::JacDh1,
        SuiteId::At1,
        SuiteId::Lm1,
        SuiteId::Thm2Trace,
    ] {
        let rep = run_suite(&lab, suite).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{} on q=151: {:?}",
            suite.id(),
            rep.failures.first()
        );
    }
}

/// A field at the default workload scale (q just below 10^6): the O(q)
/// passes and the identity suites stay fast and exact.
#[test]
fn large_prime_field_workload() {
    let lab = Lab::build(&FieldParams::new(999883, 1, 3)).unwrap();
    assert_eq!(lab.engine.q, 999883);
    assert_eq!(lab.engine.k, 55549); // odd cofactor again
    for suite in [
        SuiteId::CnSum,
        SuiteId::JacSym,
        SuiteId::JacDh1,
        SuiteId::At1,
        SuiteId::Lm1,
        SuiteId::Thm2Trace,
    ] {
        let rep = run_suite(&lab, suite).unwrap();
        assert_eq!(
            rep.status,
            Status::Pass,
            "{} on q=999883: {:?}",
            suite.id(),
            rep.failures.first()
        );
    }
}
