//! Command-line front end: one-shot Hopf/pairing/calculus queries, named
//! verification suites, and machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 any check fails, 2 usage or parse error,
//! 3 printed-text discrepancies only (every engine-internal check passes).

use crate::algebra;
use crate::diffcalc::{self, OneFormIndex};
use crate::dual::{self, Pairer};
use crate::parse;
use crate::report::{Bound, Report, Spot};
use crate::rmatrix;
use crate::scalar::Scalar;
use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use num::rational::BigRational;
use std::time::Instant;

#[derive(ClapParser)]
#[command(
    name = "grs",
    about = "Exact symbolic engine for the two-parameter quantum group G_{r,s}",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normalal-order a word of generators
    #[command(name = "normalize")]
    Normalize { expr: String },
    /// Coproduct of an algebra expression (rank 2 or 3)
    Coproduct {
        expr: String,
        #[arg(long, default_value_t = 2)]
        rank: u8,
    },
    /// Counit of an algebra expression
    Counit { expr: String },
    /// Antipode of an algebra expression
    Antipode { expr: String },
    /// Duality pairing <dual, algebra>
    Pair { dual: String, algebra: String },
    /// Left convolution product (1 (x) dual) Delta(algebra)
    Convolve { dual: String, algebra: String },
    /// Exterior derivative, printed in left-normal form
    D { expr: String },
    /// Left-normalize omega^i * expr for i in {w0, w1, w+, w-, w2}
    Omega { form: String, expr: String },
    /// Run a verification suite
    Verify {
        /// hopf | confluence | qybe | rtt | pairing | dual-algebra |
        /// dual-coalgebra | dual-units | lmatrix | rll | dj | calculus |
        /// leibniz | glpq | glpq-calculus | all
        suite: Option<String>,
        #[arg(long)]
        suite_flag: Option<String>,
        /// k=2,l=2,m=2,n=2,t=2,j=1,wordlen=4 (partial updates allowed)
        #[arg(long)]
        bound: Option<String>,
        /// numeric spot check, e.g. r=4,s=9 (rational squares)
        #[arg(long)]
        spot: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the engine-derived section-5 tables
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the known printed-text discrepancies with their loci
    Ledger {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

pub fn run(args: impl Iterator<Item = String>) -> i32 {
    let argv: Vec<String> = std::iter::once("grs".to_string()).chain(args).collect();
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn parse_bound(spec: &str) -> Result<Bound, String> {
    let mut b = Bound::default();
    for part in spec.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("bad bound component '{part}'"))?;
        let v: i64 = val.trim().parse().map_err(|_| format!("bad bound value '{val}'"))?;
        match key.trim() {
            "k" => b.k = v as u32,
            "l" => b.l = v as u32,
            "m" => b.m = v as u32,
            "n" => b.n = v as u32,
            "t" => b.t = v as i32,
            "j" => b.j = v as i32,
            "wordlen" => b.wordlen = v as u32,
            other => return Err(format!("unknown bound key '{other}'")),
        }
    }
    Ok(b)
}

fn parse_spot(spec: &str) -> Result<Spot, String> {
    let mut r = None;
    let mut s = None;
    for part in spec.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("bad spot component '{part}'"))?;
        let q: BigRational = val
            .trim()
            .parse()
            .map_err(|_| format!("bad rational '{val}'"))?;
        match key.trim() {
            "r" => r = Some(q),
            "s" => s = Some(q),
            other => return Err(format!("unknown spot key '{other}'")),
        }
    }
    let spot = Spot {
        r: r.ok_or("spot needs r=..")?,
        s: s.ok_or("spot needs s=..")?,
    };
    // both must admit rational square roots; probe with r^(1/2) s^(1/2)
    let probe = Scalar::rpow_half(1) * Scalar::spow_half(1);
    probe
        .substitute(&spot.r, &spot.s)
        .map_err(|e| format!("invalid spot values: {e}"))?;
    Ok(spot)
}

const ALL_SUITES: &[&str] = &[
    "hopf",
    "confluence",
    "qybe",
    "rtt",
    "pairing",
    "dual-algebra",
    "dual-coalgebra",
    "dual-units",
    "lmatrix",
    "rll",
    "dj",
    "calculus",
    "leibniz",
    "glpq",
    "glpq-calculus",
];

fn run_suite(name: &str, bound: &Bound, spot: Option<Spot>) -> Result<Report, String> {
    let started = Instant::now();
    let mut report = match name {
        "hopf" => algebra::verify_hopf_axioms(bound, spot),
        "confluence" => algebra::verify_confluence(10_000, bound, spot),
        "qybe" => rmatrix::verify_r_report(bound, spot),
        "rtt" => rmatrix::rtt_extract(&rmatrix::build_r(), bound, spot).report,
        "pairing" => dual::verify_pairing_tables(bound, spot),
        "dual-algebra" => dual::verify_dual_algebra(bound, spot),
        "dual-coalgebra" => dual::verify_dual_coalgebra(bound, spot),
        "dual-units" => dual::dual_unit_checks(bound, spot),
        "lmatrix" => {
            rmatrix::build_l_matrices(&Scalar::one(), &Scalar::one(), bound, spot)
                .map_err(|e| e.to_string())?
                .1
        }
        "rll" => {
            let (lm, _) = rmatrix::build_l_matrices(&Scalar::one(), &Scalar::one(), bound, None)
                .map_err(|e| e.to_string())?;
            rmatrix::verify_rll(&lm, bound, spot)
        }
        "dj" => {
            let (lm, _) = rmatrix::build_l_matrices(&Scalar::one(), &Scalar::one(), bound, None)
                .map_err(|e| e.to_string())?;
            rmatrix::verify_block_and_dj(&lm, bound, spot)
        }
        "calculus" => {
            let (calc, _) = diffcalc::standard_calculus();
            diffcalc::verify_calculus_tables(&calc, bound, spot)
        }
        "leibniz" => {
            let (calc, _) = diffcalc::standard_calculus();
            diffcalc::verify_leibniz_bicovariance(&calc, bound, 100, spot)
        }
        "glpq" => {
            let mut merged = Report::new("glpq", *bound, spot.clone());
            for n in 1..=3 {
                merged.merge(algebra::glpq_relation_check(n, spot.clone()).map_err(String::from)?);
            }
            merged
        }
        "glpq-calculus" => {
            let (calc, _) = diffcalc::standard_calculus();
            let mut merged = Report::new("glpq-calculus", *bound, spot.clone());
            for n in [1, 2] {
                merged.merge(diffcalc::glpq_calculus(&calc, n, spot.clone()).map_err(String::from)?);
            }
            merged
        }
        other => return Err(format!("unknown suite '{other}'")),
    };
    report.timing_ms = started.elapsed().as_millis();
    Ok(report)
}

fn run_verify(
    suite: &str,
    bound: &Bound,
    spot: Option<Spot>,
    format: Format,
) -> Result<i32, String> {
    let report = if suite == "all" {
        let mut merged = Report::new("all", *bound, spot.clone());
        for name in ALL_SUITES {
            merged.merge(run_suite(name, bound, spot.clone())?);
        }
        merged
    } else {
        run_suite(suite, bound, spot)?
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(report.exit_code())
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Normalize { expr } => {
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            println!("{el}");
            Ok(0)
        }
        Command::Coproduct { expr, rank } => {
            if rank != 2 && rank != 3 {
                return Err("rank must be 2 or 3".to_string());
            }
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            println!("{}", algebra::coproduct(&el, rank));
            Ok(0)
        }
        Command::Counit { expr } => {
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            println!("{}", algebra::counit(&el));
            Ok(0)
        }
        Command::Antipode { expr } => {
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            println!("{}", algebra::antipode(&el));
            Ok(0)
        }
        Command::Pair { dual, algebra } => {
            let phi = parse::parse_dual(&dual).map_err(|e| e.to_string())?;
            let x = parse::parse_algebra(&algebra).map_err(|e| e.to_string())?;
            println!("{}", Pairer::new().pair(&phi, &x));
            Ok(0)
        }
        Command::Convolve { dual, algebra } => {
            let phi = parse::parse_dual(&dual).map_err(|e| e.to_string())?;
            let x = parse::parse_algebra(&algebra).map_err(|e| e.to_string())?;
            println!("{}", diffcalc::convolve(&phi, &x));
            Ok(0)
        }
        Command::D { expr } => {
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            let (calc, _) = diffcalc::standard_calculus();
            let gamma = calc.exterior_d(&el)?;
            println!("{gamma}");
            Ok(0)
        }
        Command::Omega { form, expr } => {
            let w = OneFormIndex::parse(&form)
                .ok_or_else(|| format!("unknown one-form '{form}' (use w0, w1, w+, w-, w2)"))?;
            let el = parse::parse_algebra(&expr).map_err(|e| e.to_string())?;
            let (calc, _) = diffcalc::standard_calculus();
            println!("{}", calc.omega_commute(w, &el));
            Ok(0)
        }
        Command::Verify {
            suite,
            suite_flag,
            bound,
            spot,
            format,
        } => {
            let name = suite.or(suite_flag).unwrap_or_else(|| "all".to_string());
            let bound = match bound {
                Some(b) => parse_bound(&b)?,
                None => Bound::default(),
            };
            let spot = match spot {
                Some(s) => Some(parse_spot(&s)?),
                None => None,
            };
            run_verify(&name, &bound, spot, format)
        }
        Command::Tables { format } => {
            let (calc, _) = diffcalc::standard_calculus();
            let mut pairer = Pairer::new();
            let gens = [
                algebra::Letter::A,
                algebra::Letter::B,
                algebra::Letter::C,
                algebra::Letter::D,
                algebra::Letter::F,
            ];
            let mut chi_lines = Vec::new();
            let mut conv_lines = Vec::new();
            let mut omega_lines = Vec::new();
            let mut d_lines = Vec::new();
            for w in OneFormIndex::ALL {
                for g in gens {
                    let ge = algebra::AlgebraElement::generator(g);
                    chi_lines.push(format!(
                        "chi[{w}]({}) = {}",
                        g.symbol(),
                        pairer.pair(calc.chi(w), &ge)
                    ));
                    conv_lines.push(format!(
                        "chi[{w}]*{} = {}",
                        g.symbol(),
                        diffcalc::convolve(calc.chi(w), &ge)
                    ));
                    omega_lines.push(format!(
                        "{w} {} = {}",
                        g.symbol(),
                        calc.omega_commute(w, &ge)
                    ));
                }
            }
            for g in gens {
                let ge = algebra::AlgebraElement::generator(g);
                d_lines.push(format!("d({}) = {}", g.symbol(), calc.exterior_d(&ge)?));
            }
            match format {
                Format::Text => {
                    println!("# vector fields");
                    chi_lines.iter().for_each(|l| println!("{l}"));
                    println!("# convolutions");
                    conv_lines.iter().for_each(|l| println!("{l}"));
                    println!("# one-form commutations");
                    omega_lines.iter().for_each(|l| println!("{l}"));
                    println!("# exterior derivatives");
                    d_lines.iter().for_each(|l| println!("{l}"));
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "chi": chi_lines,
                        "convolutions": conv_lines,
                        "omega": omega_lines,
                        "exterior": d_lines,
                    });
                    println!("{}", serde_json::to_string_pretty(&obj).unwrap());
                }
            }
            Ok(0)
        }
        Command::Ledger { format } => {
            let bound = Bound::default();
            let mut merged = Report::new("ledger", bound, None);
            for name in ALL_SUITES {
                merged.merge(run_suite(name, &bound, None)?);
            }
            let discrepancies: Vec<_> = merged
                .checks
                .iter()
                .filter(|c| c.status == crate::report::Status::PaperDiscrepancy)
                .cloned()
                .collect();
            match format {
                Format::Text => {
                    println!("known printed-text discrepancies ({}):", discrepancies.len());
                    for c in &discrepancies {
                        println!("  {:<44} {}", c.id, c.locus);
                        if let Some(ce) = &c.counterexample {
                            println!("      at {}: engine {} vs printed {}", ce.monomial, ce.lhs, ce.rhs);
                        }
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&discrepancies).unwrap());
                }
            }
            Ok(if discrepancies.is_empty() { 0 } else { 3 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_and_spot_parsing() {
        let b = parse_bound("k=1,t=3,wordlen=2").unwrap();
        assert_eq!((b.k, b.l, b.t, b.wordlen), (1, 2, 3, 2));
        assert!(parse_bound("x=1").is_err());
        let s = parse_spot("r=4,s=9").unwrap();
        assert_eq!(s.r, BigRational::from_integer(4.into()));
        assert!(parse_spot("r=2,s=9").is_err(), "2 has no rational sqrt");
        assert!(parse_spot("r=4").is_err());
    }
}
