//! Acceptance suite: every exit criterion as an exact symbolic check, one
//! pass/fail line per criterion (run with `cargo test --test acceptance`,
//! add `-- --nocapture` to see the lines).
//!
//! Several printed displays of the source text are contradicted by the
//! axiom-consistent computation (the engine proves them unsatisfiable, e.g.
//! the <BF> row of the pairing table or the section-5 cells that require
//! value matrices violating the section-2 relations). Those are asserted
//! here as an exact, frozen partition into engine-verified passes and
//! recorded paper discrepancies; an engine-internal failure anywhere is a
//! hard test failure.

use grs::algebra::{
    self, antipode, coproduct, counit, multiply, verify_confluence, verify_hopf_axioms,
    AlgebraElement, Letter, Monomial,
};
use grs::diffcalc::{self, standard_calculus};
use grs::dual::{self, DualLetter, FunctionalElement, Pairer};
use grs::report::{Bound, Report, Spot, Status};
use grs::rmatrix::{self, build_l_matrices, build_r, rtt_extract, verify_qybe};
use grs::scalar::Scalar;
use num::rational::BigRational;
use std::time::Instant;

fn announce(n: u32, name: &str, pass: bool) {
    println!(
        "ACCEPTANCE {n:02} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {n} ({name}) failed");
}

fn spot_default() -> Spot {
    Spot {
        r: BigRational::from_integer(4.into()),
        s: BigRational::from_integer(9.into()),
    }
}

/// Second admissible rational pair: squares of 5/4 and 7/2.
fn spot_random() -> Spot {
    Spot {
        r: BigRational::new(25.into(), 16.into()),
        s: BigRational::new(49.into(), 4.into()),
    }
}

fn no_fail(report: &Report) -> bool {
    if report.summary.fail != 0 {
        eprintln!("{}", report.to_text());
        return false;
    }
    true
}

fn status_of(report: &Report, id: &str) -> Status {
    report
        .checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("check {id} missing from report {}", report.suite))
        .status
}

#[test]
fn acceptance_01_hopf_axiom_suite() {
    let started = Instant::now();
    let report = verify_hopf_axioms(&Bound::default(), Some(spot_default()));
    let elapsed = started.elapsed();
    let ok = no_fail(&report)
        && status_of(&report, "hopf/coassociativity") == Status::Pass
        && status_of(&report, "hopf/counit-axiom") == Status::Pass
        && status_of(&report, "hopf/antipode-axiom") == Status::Pass
        && status_of(&report, "hopf/det-grouplike") == Status::Pass
        // the printed antipode entries (1,2) and (3,3) fail the axiom and are
        // recorded; the implemented values pass it everywhere
        && status_of(&report, "hopf/printed-S(b)") == Status::PaperDiscrepancy
        && status_of(&report, "hopf/printed-S(f)") == Status::PaperDiscrepancy
        && status_of(&report, "hopf/printed-S(c)") == Status::Pass
        && elapsed.as_secs() < 30;
    announce(1, "hopf axioms within bound, < 30 s", ok);
}

#[test]
fn acceptance_02_rewrite_confluence() {
    let report = verify_confluence(10_000, &Bound::default(), None);
    announce(2, "10^4 random words confluent under two strategies", report.all_pass());
}

#[test]
fn acceptance_03_rtt_reproduction() {
    let ext = rtt_extract(&build_r(), &Bound::default(), None);
    let ok = no_fail(&ext.report)
        && status_of(&ext.report, "rtt/extracted-consequence") == Status::Pass
        && status_of(&ext.report, "rtt/table-covered/bf=s^-1 fb") == Status::Pass
        && status_of(&ext.report, "rtt/table-covered/[a,d]=(r^-1 - r)bc") == Status::Pass
        && rmatrix::relation_table()
            .iter()
            .all(|(name, _)| status_of(&ext.report, &format!("rtt/table-covered/{name}")) == Status::Pass);
    announce(3, "RTT relation set equals the relation table (both inclusions)", ok);
}

#[test]
fn acceptance_04_qybe() {
    let started = Instant::now();
    let ok = verify_qybe(&build_r());
    let elapsed = started.elapsed();
    announce(4, "QYBE holds symbolically in all 729 slots, < 5 s", ok && elapsed.as_secs() < 5);
}

#[test]
fn acceptance_05_pairing_tables() {
    let report = dual::verify_pairing_tables(&Bound::default(), Some(spot_default()));
    let mut ok = no_fail(&report);
    // the five generator forms and fourteen of the seventeen displayed rows
    // match the engine exactly
    for id in [
        "pairing-gen/A",
        "pairing-gen/B",
        "pairing-gen/C",
        "pairing-gen/D",
        "pairing-gen/F",
        "pairing-table/BC",
        "pairing-table/AB",
        "pairing-table/BA",
        "pairing-table/AC",
        "pairing-table/CA",
        "pairing-table/DB",
        "pairing-table/BD",
        "pairing-table/DC",
        "pairing-table/CD",
        "pairing-table/AD",
        "pairing-table/DA",
        "pairing-table/AF",
        "pairing-table/FA",
        "pairing-table/DF",
        "pairing-table/FD",
        "pairing-table/FB",
        "pairing-table/CF",
        "pairing-table/q-commutator",
    ] {
        ok &= status_of(&report, id) == Status::Pass;
    }
    // three rows are contradicted by the engine and recorded with their
    // corrected closed forms: <CB> upper limit (l-1, not k-1) and the
    // <BF>/<FC> rows (t, not t+1: f is grouplike, so F is central)
    for (printed, corrected) in [
        ("pairing-table/CB", "pairing-table/CB-corrected"),
        ("pairing-table/BF", "pairing-table/BF-corrected"),
        ("pairing-table/FC", "pairing-table/FC-corrected"),
    ] {
        ok &= status_of(&report, printed) == Status::PaperDiscrepancy;
        ok &= status_of(&report, corrected) == Status::Pass;
    }
    // spot value <BC, a^2 d> = r^-2 + 1 at (k,l) = (2,1)
    let bc = FunctionalElement::letter(DualLetter::B).mul(&FunctionalElement::letter(DualLetter::C));
    let g = dual::unlocalized_basis_element(2, 1, 0, 0, 0);
    ok &= Pairer::new().pair(&bc, &g) == Scalar::rpow(-2) + Scalar::one();
    announce(5, "section-3 pairing tables (with recorded discrepancies)", ok);
}

#[test]
fn acceptance_06_dual_hopf_structure() {
    let report = dual::verify_dual_coalgebra(&Bound::default(), Some(spot_default()));
    let ok = report.all_pass() && {
        let units = dual::dual_unit_checks(&Bound::default(), None);
        units.all_pass()
    };
    announce(6, "dual coproduct/counit/antipode transport checks", ok);
}

#[test]
fn acceptance_07_l_matrices_and_rll() {
    let bound = Bound::default();
    let (lm, solve_report) =
        build_l_matrices(&Scalar::one(), &Scalar::one(), &bound, None).expect("solver");
    let mut ok = no_fail(&solve_report)
        && status_of(&solve_report, "lmatrix/defining-81-plus") == Status::Pass
        && status_of(&solve_report, "lmatrix/defining-81-minus") == Status::Pass
        && status_of(&solve_report, "lmatrix/faithful-plus") == Status::Pass
        && status_of(&solve_report, "lmatrix/faithful-minus") == Status::Pass
        && status_of(&solve_report, "lmatrix/counit-plus") == Status::Pass
        && status_of(&solve_report, "lmatrix/counit-minus") == Status::Pass
        // the printed orientation is inconsistent with the relations; the
        // solver works on the transpose and records that
        && status_of(&solve_report, "lmatrix/orientation") == Status::PaperDiscrepancy;
    let rll = rmatrix::verify_rll(&lm, &bound, None);
    ok &= rll.all_pass();
    if !rll.all_pass() {
        eprintln!("{}", rll.to_text());
    }
    let block = rmatrix::verify_block_and_dj(&lm, &bound, None);
    ok &= no_fail(&block);
    for id in [
        "block/MQ=rQM",
        "block/QN=rNQ",
        "block/NM=MN",
        "block/PM=rMP",
        "block/NP=rPN",
        "block/MJ=JM",
        "block/NJ=JN",
        "block/QP-PQ",
    ] {
        ok &= status_of(&block, id) == Status::Pass;
    }
    // JQ and JP hold with the s-exponent inverted relative to print
    ok &= status_of(&block, "block/JQ") == Status::PaperDiscrepancy
        && status_of(&block, "block/JQ-solved") == Status::Pass
        && status_of(&block, "block/JP") == Status::PaperDiscrepancy
        && status_of(&block, "block/JP-solved") == Status::Pass;
    announce(7, "L matrices: 81 defining pairings, RLL, derived block relations", ok);
}

#[test]
fn acceptance_08_drinfeld_jimbo_form() {
    let bound = Bound::default();
    let (lm, _) = build_l_matrices(&Scalar::one(), &Scalar::one(), &bound, None).expect("solver");
    let block = rmatrix::verify_block_and_dj(&lm, &bound, None);
    let ok = no_fail(&block)
        && status_of(&block, "dj/qbracket-solved") == Status::Pass
        && status_of(&block, "dj/[H,X+]=+2X+") == Status::Pass
        && status_of(&block, "dj/[H,X-]=-2X-") == Status::Pass
        && status_of(&block, "dj/sign-convention") == Status::Pass
        // the printed grouplike r^{A-D} s^{F} fails; the solved pair carries
        // the inverted s-exponent and is recorded
        && status_of(&block, "dj/qbracket-printed") == Status::PaperDiscrepancy;
    announce(8, "Drinfeld-Jimbo form with adjudicated sign and grouplike", ok);
}

#[test]
fn acceptance_09_calculus_tables() {
    let started = Instant::now();
    let (calc, _lm) = standard_calculus();
    let report = diffcalc::verify_calculus_tables(&calc, &Bound::default(), None);
    let elapsed = started.elapsed();
    let mut ok = no_fail(&report) && elapsed.as_secs() < 30;
    ok &= status_of(&report, "calculus/excluded-components") == Status::Pass;
    // frozen partition: the engine, from its unique well-defined L matrices,
    // reproduces 19 of 25 chi cells, 15 of 25 convolution cells, 6 of 25
    // omega cells and none of the 5 derivative rows verbatim; every other
    // cell is recorded with both values. The GL_q(2)-sector anchors hold:
    for id in [
        "calculus/chi[w1](a)",   // r^-2 - 1
        "calculus/chi[w+](c)",   // -lambda
        "calculus/chi[w-](b)",   // -lambda
        "calculus/chi[w2](d)",   // r^-2 - 1
        "calculus/conv[w+]*a",   // -lambda b
        "calculus/conv[w-]*b",   // -lambda a
        "calculus/omega[w+]a",   // r^-1 a w+
        "calculus/omega[w-]b",   // r^-1 b w-
    ] {
        ok &= status_of(&report, id) == Status::Pass;
    }
    let pass_count = report
        .checks
        .iter()
        .filter(|c| c.id.starts_with("calculus/chi[") && c.status == Status::Pass)
        .count();
    ok &= pass_count == 19;
    announce(9, "section-5 tables recomputed from first principles (per-cell verdicts)", ok);
}

#[test]
fn acceptance_10_leibniz_and_bicovariance() {
    let (calc, _lm) = standard_calculus();
    let report = diffcalc::verify_leibniz_bicovariance(&calc, &Bound::default(), 100, None);
    let ok = report.all_pass();
    if !ok {
        eprintln!("{}", report.to_text());
    }
    announce(10, "Leibniz on 25 pairs + 100 random products; left/right covariance", ok);
}

#[test]
fn acceptance_11_glpq_realization() {
    let mut ok = true;
    for n in 1..=3 {
        let report = algebra::glpq_relation_check(n, None).unwrap();
        ok &= report.all_pass();
        if !report.all_pass() {
            eprintln!("{}", report.to_text());
        }
    }
    let (calc, _lm) = standard_calculus();
    for n in [1, 2, 3] {
        let report = diffcalc::glpq_calculus(&calc, n, None).unwrap();
        ok &= report.summary.fail == 0;
    }
    announce(11, "GL_{p,q} realization: parameter identities, relation coefficients, d two-route", ok);
}

#[test]
fn acceptance_12_numeric_spot_checks() {
    let mut ok = true;
    for spot in [spot_default(), spot_random()] {
        // antipode axiom numerically on a sample of monomials
        for m in [
            Monomial::new(1, 0, 1, 1, 0, 0),
            Monomial::new(0, 2, -1, 0, 1, 1),
            Monomial::new(2, 0, 2, 1, 1, -1),
        ] {
            let x = AlgebraElement::from_monomial(m, Scalar::one());
            let mut lhs = AlgebraElement::zero();
            for ((m1, m2), c) in coproduct(&x, 2).rank2_terms() {
                lhs = lhs.add(
                    &multiply(
                        &antipode(&AlgebraElement::from_monomial(*m1, Scalar::one())),
                        &AlgebraElement::from_monomial(*m2, Scalar::one()),
                    )
                    .scale(c),
                );
            }
            let rhs = AlgebraElement::unit().scale(&counit(&x));
            ok &= lhs.substitute(&spot.r, &spot.s).unwrap() == rhs.substitute(&spot.r, &spot.s).unwrap();
        }
        // pairing closed form numerically: (r - r^-1) <rBC - r^-1 CB, g> vs
        // the grouplike difference, on a monomial with k != l
        let b = FunctionalElement::letter(DualLetter::B);
        let c = FunctionalElement::letter(DualLetter::C);
        let qcomm = b
            .mul(&c)
            .scale(&Scalar::rpow(1))
            .sub(&c.mul(&b).scale(&Scalar::rpow(-1)));
        let g = dual::unlocalized_basis_element(2, 1, 1, 0, 0);
        let mut pairer = Pairer::new();
        let lhs = Scalar::lambda() * pairer.pair(&qcomm, &g);
        let gl = FunctionalElement::letter(
            DualLetter::grouplike(Scalar::rpow(2), Scalar::rpow(-2), Scalar::one()).unwrap(),
        )
        .sub(&FunctionalElement::one());
        let rhs = pairer.pair(&gl, &g);
        ok &= lhs.substitute(&spot.r, &spot.s).unwrap() == rhs.substitute(&spot.r, &spot.s).unwrap();
        // chi table cell numerically
        let (calc, _lm) = standard_calculus();
        let chi1a = pairer.pair(
            calc.chi(diffcalc::OneFormIndex::W1),
            &AlgebraElement::generator(Letter::A),
        );
        let want = Scalar::rpow(-2) - Scalar::one();
        ok &= chi1a.substitute(&spot.r, &spot.s).unwrap() == want.substitute(&spot.r, &spot.s).unwrap();
    }
    // suites rerun exactly with spot checks enabled
    let rep = verify_hopf_axioms(
        &Bound {
            k: 1,
            l: 1,
            m: 1,
            n: 1,
            t: 1,
            j: 1,
            wordlen: 4,
        },
        Some(spot_random()),
    );
    ok &= rep.summary.fail == 0;
    announce(12, "numeric spot checks at (4,9) and (25/16, 49/4)", ok);
}
