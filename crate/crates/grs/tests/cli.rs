//! Exit-code contract and output determinism of the command-line front end.

use grs::cli::run;
use grs::report::{Bound, Report};

fn run_args(args: &[&str]) -> i32 {
    run(args.iter().map(|s| s.to_string()))
}

#[test]
fn exit_code_contract() {
    // all-pass suites exit 0
    assert_eq!(run_args(&["verify", "confluence"]), 0);
    assert_eq!(run_args(&["verify", "dual-units"]), 0);
    // suites with recorded discrepancies but no failures exit 3
    assert_eq!(run_args(&["verify", "rtt"]), 3);
    assert_eq!(
        run_args(&["verify", "pairing", "--bound", "k=1,l=1,m=1,n=1,t=1"]),
        3
    );
    // usage errors exit 2
    assert_eq!(run_args(&["verify", "no-such-suite"]), 2);
    assert_eq!(run_args(&["normalize", "q+1"]), 2);
    assert_eq!(run_args(&["omega", "w3", "a"]), 2);
    assert_eq!(run_args(&["verify", "hopf", "--spot", "r=2,s=9"]), 2);
    // one-shot queries exit 0
    assert_eq!(run_args(&["normalize", "d*a"]), 0);
    assert_eq!(run_args(&["pair", "B*C", "a^2*d"]), 0);
    assert_eq!(run_args(&["counit", "Det^-1"]), 0);
}

#[test]
fn injected_failure_exits_one() {
    // the exit-code mapping itself, with a failing check injected
    let mut rep = Report::new("injected", Bound::default(), None);
    rep.pass("ok", "x");
    rep.discrepancy("disc", "x", None);
    assert_eq!(rep.exit_code(), 3);
    rep.fail("bad", "x", None);
    assert_eq!(rep.exit_code(), 1);
}

#[test]
fn structured_output_is_byte_stable() {
    // identical invocations produce byte-identical reports
    let bound = Bound {
        k: 1,
        l: 1,
        m: 1,
        n: 1,
        t: 1,
        j: 1,
        wordlen: 4,
    };
    let a = grs::dual::verify_dual_algebra(&bound, None).to_json();
    let b = grs::dual::verify_dual_algebra(&bound, None).to_json();
    assert_eq!(a, b);
    let a = grs::rmatrix::rtt_extract(&grs::rmatrix::build_r(), &bound, None)
        .report
        .to_text();
    let b = grs::rmatrix::rtt_extract(&grs::rmatrix::build_r(), &bound, None)
        .report
        .to_text();
    assert_eq!(a, b);
}
