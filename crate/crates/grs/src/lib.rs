//! Exact symbolic engine for the two-parameter quantum group G_{r,s}.
//!
//! The crate implements the Hopf algebra G_{r,s} localized at its quantum
//! determinant, the dual algebra realized through duality pairings, the 9x9
//! R-matrix apparatus (QYBE, RTT, RLL), and a first-order bicovariant
//! differential calculus, all over exact Laurent-polynomial arithmetic in
//! r^(1/2) and s^(1/2).
//!
//! Every displayed identity of the underlying construction is verified
//! mechanically by the suites in each module; results that contradict a
//! printed display are reported as first-class `paper-discrepancy` verdicts
//! rather than silent failures (see [`report`]).

pub mod algebra;
pub mod cli;
pub mod diffcalc;
pub mod dual;
pub mod parse;
pub mod report;
pub mod rmatrix;
pub mod scalar;
