use grs::report::Bound;
use grs::scalar::Scalar;
use std::time::Instant;
fn main() {
    let bound = Bound::default();
    let t0 = Instant::now();
    let (lm, rep) = grs::rmatrix::build_l_matrices(&Scalar::one(), &Scalar::one(), &bound, None).unwrap();
    println!("lmatrix: pass={} fail={} disc={} ({:?})", rep.summary.pass, rep.summary.fail, rep.summary.discrepancy, t0.elapsed());
    let t0 = Instant::now();
    let rep = grs::rmatrix::verify_rll(&lm, &bound, None);
    println!("rll: pass={} fail={} disc={} ({:?})", rep.summary.pass, rep.summary.fail, rep.summary.discrepancy, t0.elapsed());
    if rep.summary.fail > 0 { println!("{}", rep.to_text()); }
    let t0 = Instant::now();
    let rep = grs::rmatrix::verify_block_and_dj(&lm, &bound, None);
    println!("block-dj: pass={} fail={} disc={} ({:?})", rep.summary.pass, rep.summary.fail, rep.summary.discrepancy, t0.elapsed());
    println!("{}", rep.to_text());
}
