//! The 9x9 R-matrix apparatus: construction and QYBE, RTT extraction against
//! the relation table, the L+- functional matrices solved from their defining
//! pairings, the RLL relations, and the Drinfeld-Jimbo reduction of the dual.
//!
//! Index convention: rows and columns are pairs (i, j) with i, j in {0, 1, 2},
//! stored row-major as 3i + j. Index 0 carries f; the 2x2 block at indices
//! {1, 2} carries a, b, c, d: the generator matrix is
//! T = [[f, 0, 0], [0, a, b], [0, c, d]].
//!
//! The printed block display is transcribed verbatim by [`build_r`]. Standard
//! RTT/RLL conventions require its transpose; the solver adjudicates this and
//! the reports record the orientation as a paper discrepancy rather than
//! silently absorbing it.

use crate::algebra::{normal_form, AlgebraElement, GeneratorWord, Letter, Monomial};
use crate::dual::{DualLetter, FunctionalElement, Pairer};
use crate::report::{Bound, Counterexample, Report, Spot};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

// ---------------------------------------------------------------------------
// RMatrix
// ---------------------------------------------------------------------------

/// A 9x9 matrix of scalars acting on the tensor square of the 3-dimensional
/// defining representation.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    entries: Vec<Scalar>, // 81, row-major
}

impl RMatrix {
    pub fn zero() -> Self {
        RMatrix {
            entries: vec![Scalar::zero(); 81],
        }
    }

    pub fn identity() -> Self {
        let mut m = RMatrix::zero();
        for i in 0..9 {
            m.entries[i * 9 + i] = Scalar::one();
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * 9 + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        self.entries[row * 9 + col] = v;
    }

    /// Entry addressed by index pairs ((i1,i2),(j1,j2)).
    pub fn entry(&self, row: (usize, usize), col: (usize, usize)) -> &Scalar {
        self.get(3 * row.0 + row.1, 3 * col.0 + col.1)
    }

    pub fn set_entry(&mut self, row: (usize, usize), col: (usize, usize), v: Scalar) {
        self.set(3 * row.0 + row.1, 3 * col.0 + col.1, v);
    }

    pub fn transpose(&self) -> RMatrix {
        let mut out = RMatrix::zero();
        for i in 0..9 {
            for j in 0..9 {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn matmul(&self, other: &RMatrix) -> RMatrix {
        let mut out = RMatrix::zero();
        for i in 0..9 {
            for k in 0..9 {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..9 {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    /// Exact inverse by Gaussian elimination; pivots must be invertible
    /// monomials, which holds for every matrix built here.
    pub fn inverse(&self) -> Option<RMatrix> {
        let mut a: Vec<Vec<Scalar>> = (0..9)
            .map(|i| (0..9).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..9)
            .map(|i| {
                (0..9)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        for col in 0..9 {
            let piv = (col..9).find(|&row| a[row][col].is_monomial())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let scale = a[col][col].inverse().ok()?;
            for j in 0..9 {
                a[col][j] = &a[col][j] * &scale;
                inv[col][j] = &inv[col][j] * &scale;
            }
            for row in 0..9 {
                if row == col || a[row][col].is_zero() {
                    continue;
                }
                let f = a[row][col].clone();
                for j in 0..9 {
                    a[row][j] = &a[row][j] - &(&f * &a[col][j]);
                    inv[row][j] = &inv[row][j] - &(&f * &inv[col][j]);
                }
            }
        }
        let mut out = RMatrix::zero();
        for i in 0..9 {
            for j in 0..9 {
                out.set(i, j, inv[i][j].clone());
            }
        }
        Some(out)
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..9 {
            for j in 0..9 {
                let e = self.get(i, j);
                if !e.is_zero() {
                    writeln!(f, "  [({},{}) ,({},{})] = {}", i / 3, i % 3, j / 3, j % 3, e)?;
                }
            }
        }
        Ok(())
    }
}

/// The section-4 block matrix, transcribed entry by entry from the printed
/// (00),(01),(02),(10),(20),(11),(12),(21),(22) listing into row-major order.
pub fn build_r() -> RMatrix {
    let lam = Scalar::lambda();
    let mut m = RMatrix::zero();
    m.set_entry((0, 0), (0, 0), Scalar::rpow(1));
    // S^{-1} block on rows {(01),(02)}
    m.set_entry((0, 1), (0, 1), Scalar::spow(-1));
    m.set_entry((0, 2), (0, 2), Scalar::one());
    // Lambda block on rows {(10),(20)}, cols {(01),(02)}
    m.set_entry((1, 0), (0, 1), lam.clone());
    m.set_entry((2, 0), (0, 2), lam.clone());
    // S block
    m.set_entry((1, 0), (1, 0), Scalar::spow(1));
    m.set_entry((2, 0), (2, 0), Scalar::one());
    // R_r block on {(11),(12),(21),(22)}
    m.set_entry((1, 1), (1, 1), Scalar::rpow(1));
    m.set_entry((1, 2), (1, 2), Scalar::one());
    m.set_entry((2, 1), (1, 2), lam);
    m.set_entry((2, 1), (2, 1), Scalar::one());
    m.set_entry((2, 2), (2, 2), Scalar::rpow(1));
    m
}

/// The section-2 sum form, reconstructed as
/// r sum_i e_ii(x)e_ii + sum_{i<>j} f_ij e_ii(x)e_jj + lambda sum_{i<j} e_ij(x)e_ji
/// with f_12 = f_23 = 1, f_13 = s, f_ji = f_ij^{-1}, then relabeled 3 -> 0.
pub fn build_r_sum_form() -> RMatrix {
    let lam = Scalar::lambda();
    // old labels 1..3; f weights
    let f_w = |i: usize, j: usize| -> Scalar {
        match (i, j) {
            (1, 2) | (2, 3) | (2, 1) | (3, 2) => Scalar::one(),
            (1, 3) => Scalar::spow(1),
            (3, 1) => Scalar::spow(-1),
            _ => unreachable!(),
        }
    };
    let relabel = |i: usize| -> usize {
        if i == 3 {
            0
        } else {
            i
        }
    };
    let mut m = RMatrix::zero();
    for i in 1..=3 {
        m.set_entry(
            (relabel(i), relabel(i)),
            (relabel(i), relabel(i)),
            Scalar::rpow(1),
        );
        for j in 1..=3 {
            if i == j {
                continue;
            }
            m.set_entry(
                (relabel(i), relabel(j)),
                (relabel(i), relabel(j)),
                f_w(i, j),
            );
            if i < j {
                m.set_entry(
                    (relabel(i), relabel(j)),
                    (relabel(j), relabel(i)),
                    lam.clone(),
                );
            }
        }
    }
    m
}

/// The amended RLL matrix: the block-diagonal of the section-4 display with
/// the Lambda block removed, transposed into the working orientation. This is
/// exactly c^- <L^-, T>^{-1} once L^- is built (verified in [`verify_rll`]).
pub fn build_r_rll() -> RMatrix {
    let mut m = build_r();
    // drop the Lambda block
    m.set_entry((1, 0), (0, 1), Scalar::zero());
    m.set_entry((2, 0), (0, 2), Scalar::zero());
    m.transpose()
}

/// Exact check of R12 R13 R23 = R23 R13 R12 on the 27-dimensional triple
/// tensor space.
pub fn verify_qybe(r: &RMatrix) -> bool {
    // embed into 27x27
    let embed = |legs: (usize, usize)| -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); 27]; 27];
        for i in 0..27 {
            let idx = [i / 9, (i / 3) % 3, i % 3];
            for j in 0..27 {
                let jdx = [j / 9, (j / 3) % 3, j % 3];
                let mut ok = true;
                for leg in 0..3 {
                    if leg != legs.0 && leg != legs.1 && idx[leg] != jdx[leg] {
                        ok = false;
                    }
                }
                if !ok {
                    continue;
                }
                out[i][j] = r
                    .entry((idx[legs.0], idx[legs.1]), (jdx[legs.0], jdx[legs.1]))
                    .clone();
            }
        }
        out
    };
    let mm = |a: &Vec<Vec<Scalar>>, b: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); 27]; 27];
        for i in 0..27 {
            for k in 0..27 {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..27 {
                    if b[k][j].is_zero() {
                        continue;
                    }
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
        out
    };
    let r12 = embed((0, 1));
    let r13 = embed((0, 2));
    let r23 = embed((1, 2));
    let lhs = mm(&mm(&r12, &r13), &r23);
    let rhs = mm(&mm(&r23, &r13), &r12);
    lhs == rhs
}

/// QYBE and sum-form comparison report.
pub fn verify_r_report(bound: &Bound, spot: Option<Spot>) -> Report {
    let mut report = Report::new("qybe", *bound, spot);
    let r = build_r();
    if verify_qybe(&r) {
        report.pass("qybe/block-matrix", "sec2 'satisfies the quantum Yang-Baxter equation'");
    } else {
        report.fail("qybe/block-matrix", "sec2 QYBE claim", None);
    }
    let sum = build_r_sum_form();
    if verify_qybe(&sum) {
        report.pass("qybe/sum-form", "sec2 sum-form R (reconstructed)");
    } else {
        report.fail("qybe/sum-form", "sec2 sum-form R", None);
    }
    // stated equivalence: 'labelling the index 3 as 0 and transposing'
    let relabel_transpose = sum.transpose();
    if relabel_transpose == r {
        report.pass("rmatrix/relabel-transpose-equivalence", "sec4 relabel/transpose claim");
    } else {
        let mut bad = Vec::new();
        for i in 0..9 {
            for j in 0..9 {
                if relabel_transpose.get(i, j) != r.get(i, j) {
                    bad.push(format!("(({},{}),({},{}))", i / 3, i % 3, j / 3, j % 3));
                }
            }
        }
        report.discrepancy(
            "rmatrix/relabel-transpose-equivalence",
            "sec4 'labelling the index 3 as 0 and transposing': lambda slots differ in the 0-sector",
            Some(Counterexample {
                monomial: bad.join(" "),
                lhs: "transpose(relabeled sum form)".to_string(),
                rhs: "printed block matrix".to_string(),
            }),
        );
        // the two agree on the GL(2) sector after transposing, and on the
        // 0-sector without it; both reproduce the relation table via RTT
        let mut sector12_ok = true;
        for &i in &[4usize, 5, 7, 8] {
            for &j in &[4usize, 5, 7, 8] {
                if relabel_transpose.get(i, j) != r.get(i, j) {
                    sector12_ok = false;
                }
            }
        }
        if sector12_ok {
            report.pass(
                "rmatrix/relabel-transpose-12-sector",
                "sec4 equivalence holds on the a,b,c,d sector",
            );
        } else {
            report.fail("rmatrix/relabel-transpose-12-sector", "sec4 equivalence", None);
        }
    }
    report
}

// ---------------------------------------------------------------------------
// RTT extraction
// ---------------------------------------------------------------------------

fn t_letter(i: usize, j: usize) -> Option<Letter> {
    match (i, j) {
        (0, 0) => Some(Letter::F),
        (1, 1) => Some(Letter::A),
        (1, 2) => Some(Letter::B),
        (2, 1) => Some(Letter::C),
        (2, 2) => Some(Letter::D),
        _ => None,
    }
}

/// A degree-2 element of the free algebra on the five generators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeQuadratic(BTreeMap<(Letter, Letter), Scalar>);

impl FreeQuadratic {
    fn add(&mut self, w: (Letter, Letter), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(w).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Image in G_{r,s}: zero iff the relation is a consequence of the table.
    pub fn reduce(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for ((x, y), c) in &self.0 {
            let mut w = GeneratorWord::new(vec![*x, *y]);
            w.coeff = c.clone();
            acc = acc.add(&normal_form(&w));
        }
        acc
    }

    /// True when self = q * other for some nonzero scalar monomial q.
    pub fn proportional(&self, other: &FreeQuadratic) -> bool {
        if self.0.len() != other.0.len() || self.0.is_empty() {
            return self.0.is_empty() && other.0.is_empty();
        }
        let (w0, c0) = self.0.iter().next().unwrap();
        let Some(d0) = other.0.get(w0) else {
            return false;
        };
        if !d0.is_monomial() || !c0.is_monomial() {
            // fall back to cross multiplication on every word
            return self
                .0
                .iter()
                .all(|(w, c)| other.0.get(w).map(|d| c * d0 == d * c0).unwrap_or(false));
        }
        self.0
            .iter()
            .all(|(w, c)| other.0.get(w).map(|d| c * d0 == d * c0).unwrap_or(false))
    }
}

impl fmt::Display for FreeQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((x, y), c) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{}{}", x.symbol(), y.symbol())?;
        }
        Ok(())
    }
}

/// The nine relations of the section-2 table as free quadratics (lhs - rhs).
pub fn relation_table() -> Vec<(&'static str, FreeQuadratic)> {
    use Letter::*;
    let rel = |x: Letter, y: Letter, q: Scalar, u: Letter, v: Letter| {
        let mut f = FreeQuadratic::default();
        f.add((x, y), Scalar::one());
        f.add((u, v), -q);
        f
    };
    let mut ad = FreeQuadratic::default();
    // [a,d] = (r^{-1} - r) bc
    ad.add((A, D), Scalar::one());
    ad.add((D, A), -Scalar::one());
    ad.add((B, C), Scalar::rpow(1) - Scalar::rpow(-1));
    vec![
        ("ab=r^-1 ba", rel(A, B, Scalar::rpow(-1), B, A)),
        ("ac=r^-1 ca", rel(A, C, Scalar::rpow(-1), C, A)),
        ("db=r bd", rel(D, B, Scalar::rpow(1), B, D)),
        ("dc=r cd", rel(D, C, Scalar::rpow(1), C, D)),
        ("bc=cb", rel(B, C, Scalar::one(), C, B)),
        ("[a,d]=(r^-1 - r)bc", ad),
        ("af=fa", rel(A, F, Scalar::one(), F, A)),
        ("cf=s fc", rel(C, F, Scalar::spow(1), F, C)),
        ("bf=s^-1 fb", rel(B, F, Scalar::spow(-1), F, B)),
        ("df=fd", rel(D, F, Scalar::one(), F, D)),
    ]
}

pub struct RttExtraction {
    /// Deduplicated nonzero extracted relations.
    pub relations: Vec<FreeQuadratic>,
    pub report: Report,
}

/// Expand R T1 T2 = T2 T1 R entrywise over the free algebra and compare the
/// extracted ideal with the section-2 relation table.
///
/// The input is the section-4 block matrix; the expansion runs on its
/// transpose, which is the orientation of the reference R-matrix that the
/// section-2 RTT claim is about (section 4 transposed it). The
/// direct expansion of the printed orientation is also evaluated and its
/// r-inverted GL(2) sector recorded as a discrepancy.
pub fn rtt_extract(r_sec4: &RMatrix, bound: &Bound, spot: Option<Spot>) -> RttExtraction {
    let mut report = Report::new("rtt", *bound, spot);

    let expand = |m: &RMatrix| -> Vec<FreeQuadratic> {
        let mut out = Vec::new();
        for i1 in 0..3 {
            for i2 in 0..3 {
                for j1 in 0..3 {
                    for j2 in 0..3 {
                        let mut vec = FreeQuadratic::default();
                        for k1 in 0..3 {
                            for k2 in 0..3 {
                                let rv = m.entry((i1, i2), (k1, k2));
                                if !rv.is_zero() {
                                    if let (Some(x), Some(y)) = (t_letter(k1, j1), t_letter(k2, j2))
                                    {
                                        vec.add((x, y), rv.clone());
                                    }
                                }
                                let rv2 = m.entry((k1, k2), (j1, j2));
                                if !rv2.is_zero() {
                                    if let (Some(x), Some(y)) = (t_letter(i2, k2), t_letter(i1, k1))
                                    {
                                        vec.add((x, y), -rv2.clone());
                                    }
                                }
                            }
                        }
                        if !vec.is_zero() {
                            out.push(vec);
                        }
                    }
                }
            }
        }
        // dedupe up to scalar
        let mut dedup: Vec<FreeQuadratic> = Vec::new();
        for v in out {
            if !dedup.iter().any(|u| u.proportional(&v)) {
                dedup.push(v);
            }
        }
        dedup
    };

    let working = r_sec4.transpose();
    let extracted = expand(&working);

    // every extracted relation must be a consequence of the table
    let mut all_reduce = true;
    for v in &extracted {
        if !v.reduce().is_zero() {
            all_reduce = false;
            report.fail(
                "rtt/extracted-consequence",
                "sec2 'recast in the form of the RTT-relations'",
                Some(Counterexample {
                    monomial: v.to_string(),
                    lhs: v.reduce().to_string(),
                    rhs: "0".to_string(),
                }),
            );
        }
    }
    if all_reduce {
        report.pass(
            "rtt/extracted-consequence",
            "sec2 every extracted relation reduces to zero",
        );
    }

    // every table relation must appear among the extracted ones
    for (name, rel) in relation_table() {
        let id = format!("rtt/table-covered/{name}");
        if extracted.iter().any(|v| v.proportional(&rel)) {
            report.pass(&id, "sec2 relation table");
        } else {
            report.fail(
                &id,
                "sec2 relation table",
                Some(Counterexample {
                    monomial: rel.to_string(),
                    lhs: "not among extracted relations".to_string(),
                    rhs: "expected".to_string(),
                }),
            );
        }
    }

    // the printed orientation, expanded directly, flips r in the GL(2) sector
    let direct = expand(r_sec4);
    let direct_ok = direct.iter().all(|v| v.reduce().is_zero());
    if direct_ok {
        report.pass("rtt/printed-orientation", "sec4 block matrix expanded directly");
    } else {
        let witness = direct.iter().find(|v| !v.reduce().is_zero()).unwrap();
        report.discrepancy(
            "rtt/printed-orientation",
            "sec4 block matrix under direct RTT yields the r-inverted GL(2) relations; its transpose reproduces sec2",
            Some(Counterexample {
                monomial: witness.to_string(),
                lhs: witness.reduce().to_string(),
                rhs: "0".to_string(),
            }),
        );
    }

    RttExtraction {
        relations: extracted,
        report,
    }
}

// ---------------------------------------------------------------------------
// 3x3 scalar matrices and generator value matrices
// ---------------------------------------------------------------------------

/// 3x3 matrix over the scalar ring.
#[derive(Clone, PartialEq, Eq)]
pub struct M3(pub [[Scalar; 3]; 3]);

impl M3 {
    pub fn zero() -> Self {
        M3(std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero())))
    }

    pub fn identity() -> Self {
        let mut m = M3::zero();
        for i in 0..3 {
            m.0[i][i] = Scalar::one();
        }
        m
    }

    pub fn matmul(&self, other: &M3) -> M3 {
        let mut out = M3::zero();
        for i in 0..3 {
            for k in 0..3 {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..3 {
                    if other.0[k][j].is_zero() {
                        continue;
                    }
                    out.0[i][j] = &out.0[i][j] + &(&self.0[i][k] * &other.0[k][j]);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &M3) -> M3 {
        let mut out = M3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = &self.0[i][j] - &other.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> M3 {
        let mut out = M3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = &self.0[i][j] * c;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    /// Adjugate inverse; requires a monomial determinant.
    pub fn inverse(&self) -> Option<M3> {
        let a = &self.0;
        let det = &(&(&a[0][0] * &a[1][1]) * &a[2][2]) + &(&(&a[0][1] * &a[1][2]) * &a[2][0]);
        let det = &det + &(&(&a[0][2] * &a[1][0]) * &a[2][1]);
        let det = &det - &(&(&a[0][2] * &a[1][1]) * &a[2][0]);
        let det = &det - &(&(&a[0][0] * &a[1][2]) * &a[2][1]);
        let det = &det - &(&(&a[0][1] * &a[1][0]) * &a[2][2]);
        let det_inv = det.inverse().ok()?;
        let mut out = M3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let rows: Vec<usize> = (0..3).filter(|&p| p != i).collect();
                let cols: Vec<usize> = (0..3).filter(|&q| q != j).collect();
                let cof = &(&a[rows[0]][cols[0]] * &a[rows[1]][cols[1]])
                    - &(&a[rows[0]][cols[1]] * &a[rows[1]][cols[0]]);
                let signed = if (i + j) % 2 == 0 { cof } else { -cof };
                out.0[j][i] = &signed * &det_inv;
            }
        }
        Some(out)
    }
}

/// Value matrices of a matrix functional on each generator, extended to all
/// letters: the value on a monomial is the ordered product of letter values.
#[derive(Clone)]
pub struct GeneratorValues {
    pub a: M3,
    pub b: M3,
    pub c: M3,
    pub d: M3,
    pub f: M3,
    f_inv: M3,
    det: M3,
    det_inv: M3,
}

impl GeneratorValues {
    fn new(a: M3, b: M3, c: M3, d: M3, f: M3) -> Option<Self> {
        let det = a.matmul(&d).sub(&b.matmul(&c).scale(&Scalar::rpow(-1)));
        Some(GeneratorValues {
            f_inv: f.inverse()?,
            det_inv: det.inverse()?,
            a,
            b,
            c,
            d,
            f,
            det,
        })
    }

    pub fn of_letter(&self, l: Letter) -> &M3 {
        match l {
            Letter::A => &self.a,
            Letter::B => &self.b,
            Letter::C => &self.c,
            Letter::D => &self.d,
            Letter::F => &self.f,
            Letter::FInv => &self.f_inv,
            Letter::Det => &self.det,
            Letter::DetInv => &self.det_inv,
        }
    }

    /// Transfer-matrix value on a basis monomial.
    pub fn of_monomial(&self, m: &Monomial) -> M3 {
        let mut acc = M3::identity();
        for l in m.letters() {
            acc = acc.matmul(self.of_letter(l));
        }
        acc
    }

    /// Check that the value matrices are compatible with every defining
    /// relation, i.e. the matrix functional is well defined on the quotient.
    fn well_defined(&self) -> Result<(), String> {
        let rels: Vec<(&str, M3, M3)> = vec![
            ("ab=r^-1 ba", self.a.matmul(&self.b), self.b.matmul(&self.a).scale(&Scalar::rpow(-1))),
            ("ac=r^-1 ca", self.a.matmul(&self.c), self.c.matmul(&self.a).scale(&Scalar::rpow(-1))),
            ("db=r bd", self.d.matmul(&self.b), self.b.matmul(&self.d).scale(&Scalar::rpow(1))),
            ("dc=r cd", self.d.matmul(&self.c), self.c.matmul(&self.d).scale(&Scalar::rpow(1))),
            ("bc=cb", self.b.matmul(&self.c), self.c.matmul(&self.b)),
            ("af=fa", self.a.matmul(&self.f), self.f.matmul(&self.a)),
            ("cf=s fc", self.c.matmul(&self.f), self.f.matmul(&self.c).scale(&Scalar::spow(1))),
            ("bf=s^-1 fb", self.b.matmul(&self.f), self.f.matmul(&self.b).scale(&Scalar::spow(-1))),
            ("df=fd", self.d.matmul(&self.f), self.f.matmul(&self.d)),
            (
                "[a,d]=(r^-1 - r)bc",
                self.a.matmul(&self.d).sub(&self.d.matmul(&self.a)),
                self.b
                    .matmul(&self.c)
                    .scale(&(Scalar::rpow(-1) - Scalar::rpow(1))),
            ),
        ];
        for (name, lhs, rhs) in rels {
            if lhs != rhs {
                return Err(name.to_string());
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// L matrices
// ---------------------------------------------------------------------------

/// A 3x3 matrix of dual functionals.
#[derive(Clone)]
pub struct FunctionalMatrix(pub [[FunctionalElement; 3]; 3]);

impl FunctionalMatrix {
    pub fn zero() -> Self {
        FunctionalMatrix(std::array::from_fn(|_| {
            std::array::from_fn(|_| FunctionalElement::zero())
        }))
    }

    /// Matrix product with convolution products of entries.
    pub fn matmul(&self, other: &FunctionalMatrix) -> FunctionalMatrix {
        let mut out = FunctionalMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = FunctionalElement::zero();
                for k in 0..3 {
                    acc = acc.add(&self.0[i][k].mul(&other.0[k][j]));
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    /// Convolution inverse (the matrix antipode) for triangular matrices whose
    /// diagonal entries are single grouplike letters.
    pub fn antipode(&self) -> FunctionalMatrix {
        let inv_diag = |f: &FunctionalElement| -> FunctionalElement {
            let (word, c) = f.terms().next().expect("diagonal entry");
            assert_eq!(word.len(), 1, "diagonal entry must be one grouplike letter");
            let DualLetter::Grouplike(u, v, w) = &word[0] else {
                panic!("diagonal entry must be grouplike");
            };
            FunctionalElement::word(
                &[DualLetter::Grouplike(
                    u.inverse().unwrap(),
                    v.inverse().unwrap(),
                    w.inverse().unwrap(),
                )],
                c.inverse().unwrap(),
            )
        };
        let mut out = FunctionalMatrix::zero();
        for i in 0..3 {
            out.0[i][i] = inv_diag(&self.0[i][i]);
        }
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !self.0[i][j].is_zero() {
                    out.0[i][j] = out.0[i][i]
                        .mul(&self.0[i][j])
                        .mul(&out.0[j][j])
                        .scale(&-Scalar::one());
                }
            }
        }
        out
    }
}

/// Solved L matrices together with their defining value matrices.
pub struct LMatrices {
    pub plus: FunctionalMatrix,
    pub minus: FunctionalMatrix,
    pub plus_values: GeneratorValues,
    pub minus_values: GeneratorValues,
    pub cplus: Scalar,
    pub cminus: Scalar,
}

impl LMatrices {
    /// Diagonal grouplike entries (J, M, N) of L^+.
    pub fn plus_diag(&self, i: usize) -> &FunctionalElement {
        &self.plus.0[i][i]
    }
    pub fn minus_diag(&self, i: usize) -> &FunctionalElement {
        &self.minus.0[i][i]
    }
    /// The B-type entry of L^+ at position (2,1).
    pub fn q_entry(&self) -> &FunctionalElement {
        &self.plus.0[2][1]
    }
    /// The C-type entry of L^- at position (1,2).
    pub fn p_entry(&self) -> &FunctionalElement {
        &self.minus.0[1][2]
    }
}

fn slice_plus(r: &RMatrix, c: usize, d: usize, cplus: &Scalar) -> M3 {
    // (R^+)^{ac}_{bd} = c^+ R^{ca}_{db}
    let mut m = M3::zero();
    for a in 0..3 {
        for b in 0..3 {
            m.0[a][b] = r.entry((c, a), (d, b)) * cplus;
        }
    }
    m
}

fn slice_minus(rinv: &RMatrix, c: usize, d: usize, cminus: &Scalar) -> M3 {
    // (R^-)^{ac}_{bd} = c^- (R^{-1})^{ac}_{bd}
    let mut m = M3::zero();
    for a in 0..3 {
        for b in 0..3 {
            m.0[a][b] = rinv.entry((a, c), (b, d)) * cminus;
        }
    }
    m
}

fn values_from(r: &RMatrix, plus: bool, cval: &Scalar) -> Option<GeneratorValues> {
    let slice = |c: usize, d: usize| -> M3 {
        if plus {
            slice_plus(r, c, d, cval)
        } else {
            slice_minus(r, c, d, cval)
        }
    };
    GeneratorValues::new(
        slice(1, 1),
        slice(1, 2),
        slice(2, 1),
        slice(2, 2),
        slice(0, 0),
    )
}

/// Word representation of one value-matrix triangle: grouplike diagonal
/// letters plus at most one B- or C-pattern entry, built from the
/// skew-primitive structure Delta(l_ij) = l_ii (x) l_ij + l_ij (x) l_jj.
fn functional_matrix_from_values(v: &GeneratorValues) -> Result<FunctionalMatrix, String> {
    let mut out = FunctionalMatrix::zero();
    let mut diag: Vec<(Scalar, Scalar, Scalar)> = Vec::new();
    for i in 0..3 {
        let (u, vv, w) = (
            v.a.0[i][i].clone(),
            v.d.0[i][i].clone(),
            v.f.0[i][i].clone(),
        );
        out.0[i][i] =
            FunctionalElement::letter(DualLetter::grouplike(u.clone(), vv.clone(), w.clone())?);
        diag.push((u, vv, w));
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let vb = &v.b.0[i][j];
            let vc = &v.c.0[i][j];
            if vb.is_zero() && vc.is_zero() {
                if !v.a.0[i][j].is_zero() || !v.d.0[i][j].is_zero() || !v.f.0[i][j].is_zero() {
                    return Err(format!("unexpected diagonal-letter value at ({i},{j})"));
                }
                continue;
            }
            let (pattern, value, kp) = if !vb.is_zero() {
                (
                    DualLetter::B,
                    vb,
                    (Scalar::rpow(1), Scalar::rpow(-1), Scalar::spow(-1)),
                )
            } else {
                (
                    DualLetter::C,
                    vc,
                    (Scalar::rpow(1), Scalar::rpow(-1), Scalar::spow(1)),
                )
            };
            // Delta(entry) = G_i (x) entry + entry (x) G_j forces G_j = K_pattern * G_i
            let gi = &diag[i];
            let gj = &diag[j];
            if *gj != (&kp.0 * &gi.0, &kp.1 * &gi.1, &kp.2 * &gi.2) {
                return Err(format!(
                    "entry at ({i},{j}) is not skew-primitive between the solved diagonals"
                ));
            }
            // word sigma * [pattern, G_i]; the pattern letter eats the b/c leg
            // and G_i the complementary generator (d for B, a for C)
            let base = match pattern {
                DualLetter::B => gi.1.clone(),
                _ => gi.0.clone(),
            };
            let sigma = value * &base.inverse().map_err(|e| e.to_string())?;
            out.0[i][j] = FunctionalElement::word(
                &[
                    pattern,
                    DualLetter::grouplike(gi.0.clone(), gi.1.clone(), gi.2.clone())?,
                ],
                sigma,
            );
        }
    }
    Ok(out)
}

/// Solve the L matrices from their defining pairings within the grouplike
/// monomial ansatz. Tries the printed section-4 orientation first; when its
/// value matrices are inconsistent with the section-2 relations, solves on the
/// transpose and records the orientation discrepancy.
pub fn build_l_matrices(
    cplus: &Scalar,
    cminus: &Scalar,
    bound: &Bound,
    spot: Option<Spot>,
) -> Result<(LMatrices, Report), String> {
    if !cplus.is_monomial() || !cminus.is_monomial() {
        return Err("c+ and c- must be nonzero Laurent monomials".to_string());
    }
    let mut report = Report::new("lmatrix", *bound, spot);
    let printed = build_r();
    let transposed = printed.transpose();

    let attempt = |r: &RMatrix| -> Result<(GeneratorValues, GeneratorValues), String> {
        let rinv = r.inverse().ok_or("R not invertible")?;
        let vp = values_from(r, true, cplus).ok_or("singular f/Det value for L+")?;
        let vm = values_from(&rinv, false, cminus).ok_or("singular f/Det value for L-")?;
        vp.well_defined().map_err(|rel| format!("L+ violates {rel}"))?;
        vm.well_defined().map_err(|rel| format!("L- violates {rel}"))?;
        Ok((vp, vm))
    };

    let (vp, vm) = match attempt(&printed) {
        Ok(pair) => {
            report.pass("lmatrix/orientation", "sec4 printed orientation is consistent");
            pair
        }
        Err(residual) => {
            let pair = attempt(&transposed).map_err(|e| {
                format!("no well-defined L matrices in either orientation: {e}")
            })?;
            report.discrepancy(
                "lmatrix/orientation",
                "sec4 R+- recipes on the printed block matrix are inconsistent with the sec2 relations; solved on the transpose",
                Some(Counterexample {
                    monomial: "relation residual".to_string(),
                    lhs: residual,
                    rhs: "0".to_string(),
                }),
            );
            pair
        }
    };

    let plus = functional_matrix_from_values(&vp)?;
    let minus = functional_matrix_from_values(&vm)?;
    let lm = LMatrices {
        plus,
        minus,
        plus_values: vp,
        minus_values: vm,
        cplus: cplus.clone(),
        cminus: cminus.clone(),
    };

    // faithfulness: word representation equals transfer evaluation on the bound
    let mut pairer = Pairer::new();
    let monos = bound.monomials();
    for (name, fm, gv) in [
        ("plus", &lm.plus, &lm.plus_values),
        ("minus", &lm.minus, &lm.minus_values),
    ] {
        let mut ok = true;
        let mut witness = None;
        'outer: for m in &monos {
            let tv = gv.of_monomial(m);
            for i in 0..3 {
                for j in 0..3 {
                    let got = pairer.pair(
                        &fm.0[i][j],
                        &AlgebraElement::from_monomial(*m, Scalar::one()),
                    );
                    if got != tv.0[i][j] {
                        ok = false;
                        witness = Some(Counterexample {
                            monomial: format!("{m} entry ({i},{j})"),
                            lhs: got.to_string(),
                            rhs: tv.0[i][j].to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        let id = format!("lmatrix/faithful-{name}");
        if ok {
            report.pass(&id, "word representation equals transfer evaluation");
        } else {
            report.fail(&id, "word representation vs transfer", witness);
        }
    }

    // counit condition L(1) = identity
    for (name, fm) in [("plus", &lm.plus), ("minus", &lm.minus)] {
        let mut ok = true;
        for i in 0..3 {
            for j in 0..3 {
                let v = pairer.pair(&fm.0[i][j], &AlgebraElement::unit());
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                if v != want {
                    ok = false;
                }
            }
        }
        let id = format!("lmatrix/counit-{name}");
        if ok {
            report.pass(&id, "sec4 L(1) = identity");
        } else {
            report.fail(&id, "sec4 L(1) = identity", None);
        }
    }

    // defining pairings, all 81 slots per sign, against the amended R+-
    // (the unamended Lambda slots pair a zero L-entry with a zero T-entry
    // against a nonzero R value; removing them is the stated amendment)
    let amended = build_r_rll();
    let amended_inv = amended.inverse().ok_or("amended R not invertible")?;
    for (name, fm, plus_side) in [("plus", &lm.plus, true), ("minus", &lm.minus, false)] {
        let mut ok = true;
        let mut witness = None;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        let lhs = match t_letter(c, d) {
                            Some(g) => pairer.pair(&fm.0[a][b], &AlgebraElement::generator(g)),
                            None => Scalar::zero(),
                        };
                        let rhs = if plus_side {
                            amended.entry((c, a), (d, b)) * cplus
                        } else {
                            amended_inv.entry((a, c), (b, d)) * cminus
                        };
                        if lhs != rhs {
                            ok = false;
                            if witness.is_none() {
                                witness = Some(Counterexample {
                                    monomial: format!("<L^{a}_{b}, T^{c}_{d}>"),
                                    lhs: lhs.to_string(),
                                    rhs: rhs.to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
        let id = format!("lmatrix/defining-81-{name}");
        if ok {
            report.pass(&id, "sec4 <L^a_b, T^c_d> = (R^+-)^{ac}_{bd}");
        } else {
            report.fail(&id, "sec4 defining pairings", witness);
        }
    }

    // compare solved grouplike exponents against the printed J, M, N display
    // (second version; the first differs only by the absorbed c^+ r prefactor)
    let printed_diag_plus = [
        ("J", Scalar::spow(-1), Scalar::one(), Scalar::rpow(1)),
        ("M", Scalar::rpow(1), Scalar::one(), Scalar::spow_half(1)),
        ("N", Scalar::one(), Scalar::rpow(1), Scalar::one()),
    ];
    for (i, (name, pu, pv, pw)) in printed_diag_plus.into_iter().enumerate() {
        let solved = (
            lm.plus_values.a.0[i][i].clone(),
            lm.plus_values.d.0[i][i].clone(),
            lm.plus_values.f.0[i][i].clone(),
        );
        let id = format!("lmatrix/printed-exponents-{name}");
        let locus = "sec4 L+ diagonal display";
        if solved == (pu.clone(), pv.clone(), pw.clone()) {
            report.pass(&id, locus);
        } else {
            report.discrepancy(
                &id,
                locus,
                Some(Counterexample {
                    monomial: format!("{name} values on (a,d,f)"),
                    lhs: format!("({}, {}, {})", solved.0, solved.1, solved.2),
                    rhs: format!("({pu}, {pv}, {pw})"),
                }),
            );
        }
    }
    // printed L- diagonal claims the literal inverses (J^-1, M^-1, N^-1)
    for i in 0..3 {
        let name = ["J", "M", "N"][i];
        let prod = (
            &lm.plus_values.a.0[i][i] * &lm.minus_values.a.0[i][i],
            &lm.plus_values.d.0[i][i] * &lm.minus_values.d.0[i][i],
            &lm.plus_values.f.0[i][i] * &lm.minus_values.f.0[i][i],
        );
        let id = format!("lmatrix/minus-diag-inverse-{name}");
        let locus = "sec4 L- = diag(J^-1, M^-1, N^-1) claim";
        if prod == (Scalar::one(), Scalar::one(), Scalar::one()) {
            report.pass(&id, locus);
        } else {
            report.discrepancy(
                &id,
                locus,
                Some(Counterexample {
                    monomial: format!("{name} * {name}' values on (a,d,f)"),
                    lhs: format!("({}, {}, {})", prod.0, prod.1, prod.2),
                    rhs: "(1, 1, 1)".to_string(),
                }),
            );
        }
    }
    // printed positions: P = lambda C-type inside L+, Q = -lambda B-type inside L-;
    // solved: B-type (value +lambda) sits in L+ at (3,2), C-type (value -lambda)
    // in L- at (2,3) [1-based]
    let q_val = pairer.pair(lm.q_entry(), &AlgebraElement::generator(Letter::B));
    let p_val = pairer.pair(lm.p_entry(), &AlgebraElement::generator(Letter::C));
    if q_val == Scalar::lambda() && p_val == -Scalar::lambda() && lm.plus.0[1][2].is_zero() {
        report.discrepancy(
            "lmatrix/printed-pq-placement",
            "sec4 prints P = lambda C~ in L+ and Q = -lambda B~ in L-; solved L+- carry the transposed placement with swapped signs",
            Some(Counterexample {
                monomial: "off-diagonal entries".to_string(),
                lhs: format!("L+[3,2] value on b = {q_val}; L-[2,3] value on c = {p_val}"),
                rhs: "L+[2,3] = lambda C~; L-[3,2] = -lambda B~".to_string(),
            }),
        );
    } else {
        report.pass("lmatrix/printed-pq-placement", "sec4 P, Q placement");
    }

    Ok((lm, report))
}

// ---------------------------------------------------------------------------
// RLL relations
// ---------------------------------------------------------------------------

/// The three RLL matrix relations, verified as pairing identities on every
/// basis monomial within bound, with the amended R matrix. Also closes the
/// consistency loop R12 = c^- <L^-, T>^{-1}.
pub fn verify_rll(lm: &LMatrices, bound: &Bound, spot: Option<Spot>) -> Report {
    let mut report = Report::new("rll", *bound, spot);
    let r12 = build_r_rll();
    let mut pairer = Pairer::new();
    let monos = bound.monomials();

    // consistency loop: <L-, T> arranged as ((a,c),(b,d)) inverts to c^- R12
    {
        let mut m = RMatrix::zero();
        for (cc, dd) in [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)] {
            let g = AlgebraElement::generator(t_letter(cc, dd).unwrap());
            for a in 0..3 {
                for b in 0..3 {
                    let v = pairer.pair(&lm.minus.0[a][b], &g);
                    if !v.is_zero() {
                        m.set_entry((a, cc), (b, dd), v);
                    }
                }
            }
        }
        match m.inverse() {
            Some(inv) => {
                let scaled = {
                    let mut s = RMatrix::zero();
                    for i in 0..9 {
                        for j in 0..9 {
                            s.set(i, j, inv.get(i, j) * &lm.cminus);
                        }
                    }
                    s
                };
                if scaled == r12 {
                    report.pass(
                        "rll/amended-r-consistency",
                        "sec4 R12 = c^- <L^-, T>^{-1} (transposed amended block matrix)",
                    );
                } else {
                    report.fail("rll/amended-r-consistency", "sec4 amended R claim", None);
                }
            }
            None => report.fail("rll/amended-r-consistency", "sec4 amended R claim", None),
        }
    }

    // R12 A2 B1 = B1 A2 R12 for (A,B) in {(+,+), (-,-), (+,-)}
    let cases = [
        ("rll/plus-plus", &lm.plus, &lm.plus),
        ("rll/minus-minus", &lm.minus, &lm.minus),
        ("rll/plus-minus", &lm.plus, &lm.minus),
    ];
    for (id, a_mat, b_mat) in cases {
        let mut ok = true;
        let mut witness = None;
        'slots: for i1 in 0..3 {
            for i2 in 0..3 {
                for j1 in 0..3 {
                    for j2 in 0..3 {
                        let mut lhs = FunctionalElement::zero();
                        let mut rhs = FunctionalElement::zero();
                        for k1 in 0..3 {
                            for k2 in 0..3 {
                                let rv = r12.entry((i1, i2), (k1, k2));
                                if !rv.is_zero() {
                                    lhs = lhs
                                        .add(&a_mat.0[k2][j2].mul(&b_mat.0[k1][j1]).scale(rv));
                                }
                                let rv2 = r12.entry((k1, k2), (j1, j2));
                                if !rv2.is_zero() {
                                    rhs = rhs
                                        .add(&b_mat.0[i1][k1].mul(&a_mat.0[i2][k2]).scale(rv2));
                                }
                            }
                        }
                        if lhs == rhs {
                            continue;
                        }
                        let diff = lhs.sub(&rhs);
                        for m in &monos {
                            let v = pairer
                                .pair(&diff, &AlgebraElement::from_monomial(*m, Scalar::one()));
                            if !v.is_zero() {
                                ok = false;
                                witness = Some(Counterexample {
                                    monomial: format!("slot (({i1},{i2}),({j1},{j2})) at {m}"),
                                    lhs: v.to_string(),
                                    rhs: "0".to_string(),
                                });
                                break 'slots;
                            }
                        }
                    }
                }
            }
        }
        if ok {
            report.pass(id, "sec4 R12 L2 L1 = L1 L2 R12");
        } else {
            report.fail(id, "sec4 RLL relation", witness);
        }
    }

    report
}

// ---------------------------------------------------------------------------
// block relations and the Drinfeld-Jimbo form
// ---------------------------------------------------------------------------

fn grouplike_inverse(f: &FunctionalElement) -> FunctionalElement {
    let (word, c) = f.terms().next().expect("grouplike entry");
    assert_eq!(word.len(), 1);
    let DualLetter::Grouplike(u, v, w) = &word[0] else {
        panic!("not grouplike")
    };
    FunctionalElement::word(
        &[DualLetter::Grouplike(
            u.inverse().unwrap(),
            v.inverse().unwrap(),
            w.inverse().unwrap(),
        )],
        c.inverse().unwrap(),
    )
}

/// q-commutation coefficients among J, M, N, P, Q; the QP-PQ identity; and the
/// Drinfeld-Jimbo brackets, each verified as a pairing identity within bound.
pub fn verify_block_and_dj(lm: &LMatrices, bound: &Bound, spot: Option<Spot>) -> Report {
    let mut report = Report::new("block-dj", *bound, spot);
    let mut pairer = Pairer::new();
    let monos = bound.monomials();

    let j_pl = lm.plus_diag(0).clone();
    let m_pl = lm.plus_diag(1).clone();
    let n_pl = lm.plus_diag(2).clone();
    let m_mi = lm.minus_diag(1).clone();
    let n_mi = lm.minus_diag(2).clone();
    let q = lm.q_entry().clone(); // B-type, value +lambda on b
    let p = lm.p_entry().clone(); // C-type, value -lambda on c

    let mut check = |report: &mut Report,
                     id: &str,
                     locus: &str,
                     lhs: &FunctionalElement,
                     rhs: &FunctionalElement,
                     discrepancy_when_fails: bool|
     -> bool {
        if lhs == rhs {
            report.pass(id, locus);
            return true;
        }
        let diff = lhs.sub(rhs);
        for m in &monos {
            let v = pairer.pair(&diff, &AlgebraElement::from_monomial(*m, Scalar::one()));
            if !v.is_zero() {
                let ce = Counterexample {
                    monomial: m.to_string(),
                    lhs: pairer
                        .pair(lhs, &AlgebraElement::from_monomial(*m, Scalar::one()))
                        .to_string(),
                    rhs: pairer
                        .pair(rhs, &AlgebraElement::from_monomial(*m, Scalar::one()))
                        .to_string(),
                };
                if discrepancy_when_fails {
                    report.discrepancy(id, locus, Some(ce));
                } else {
                    report.fail(id, locus, Some(ce));
                }
                return false;
            }
        }
        report.pass(id, locus);
        true
    };

    // diagonal commutations, as printed
    check(&mut report, "block/MJ=JM", "sec4 MJ = JM", &m_pl.mul(&j_pl), &j_pl.mul(&m_pl), false);
    check(&mut report, "block/NJ=JN", "sec4 NJ = JN", &n_pl.mul(&j_pl), &j_pl.mul(&n_pl), false);
    check(&mut report, "block/NM=MN", "sec4 NM = MN", &n_pl.mul(&m_pl), &m_pl.mul(&n_pl), false);

    // q-commutations with P and Q, printed coefficients first
    struct QComm {
        id: &'static str,
        locus: &'static str,
        x: FunctionalElement,
        y: FunctionalElement,
        printed: Scalar,
        corrected: Option<Scalar>,
    }
    let cases = vec![
        QComm {
            id: "block/MQ=rQM",
            locus: "sec4 MQ = rQM",
            x: m_pl.clone(),
            y: q.clone(),
            printed: Scalar::rpow(1),
            corrected: None,
        },
        QComm {
            id: "block/QN=rNQ",
            locus: "sec4 QN = rNQ",
            x: q.clone(),
            y: n_pl.clone(),
            printed: Scalar::rpow(1),
            corrected: None,
        },
        QComm {
            id: "block/PM=rMP",
            locus: "sec4 PM = rMP",
            x: p.clone(),
            y: m_pl.clone(),
            printed: Scalar::rpow(1),
            corrected: None,
        },
        QComm {
            id: "block/NP=rPN",
            locus: "sec4 NP = rPN",
            x: n_pl.clone(),
            y: p.clone(),
            printed: Scalar::rpow(1),
            corrected: None,
        },
        QComm {
            id: "block/JQ",
            locus: "sec4 JQ = s^-1 QJ",
            x: j_pl.clone(),
            y: q.clone(),
            printed: Scalar::spow(-1),
            corrected: Some(Scalar::spow(1)),
        },
        QComm {
            id: "block/JP",
            locus: "sec4 JP = s PJ",
            x: j_pl.clone(),
            y: p.clone(),
            printed: Scalar::spow(1),
            corrected: Some(Scalar::spow(-1)),
        },
    ];
    for case in cases {
        let lhs = case.x.mul(&case.y);
        let rhs = case.y.mul(&case.x).scale(&case.printed);
        let as_discrepancy = case.corrected.is_some();
        let passed = check(&mut report, case.id, case.locus, &lhs, &rhs, as_discrepancy);
        if let Some(coeff) = case.corrected {
            if !passed {
                let rhs2 = case.y.mul(&case.x).scale(&coeff);
                let cid = format!("{}-solved", case.id);
                check(
                    &mut report,
                    &cid,
                    "solved exponent (s-power inverted vs print)",
                    &lhs,
                    &rhs2,
                    false,
                );
            }
        }
    }

    // QP - PQ = -lambda(N^-1 M - N M^-1), with N^-1 and M^-1 read as the solved
    // L- diagonal entries (which is what the display's notation denotes)
    let lam = Scalar::lambda();
    {
        let lhs = q.mul(&p).sub(&p.mul(&q));
        let rhs = n_mi
            .mul(&m_pl)
            .sub(&n_pl.mul(&m_mi))
            .scale(&-lam.clone());
        check(
            &mut report,
            "block/QP-PQ",
            "sec4 QP - PQ = -lambda(N^-1 M - N M^-1) with the L- diagonals",
            &lhs,
            &rhs,
            false,
        );
        // literal value-inverses differ by the s-weight of the f-component
        let rhs_lit = grouplike_inverse(&n_pl)
            .mul(&m_pl)
            .sub(&n_pl.mul(&grouplike_inverse(&m_pl)))
            .scale(&-lam.clone());
        check(
            &mut report,
            "block/QP-PQ-literal-inverses",
            "sec4 display with literal N^-1, M^-1 value inverses",
            &lhs,
            &rhs_lit,
            true,
        );
    }

    // bracket table for the tilde letters: A~, D~ pair classically, B~, C~ are
    // the solved P/Q entries up to the lambda normalization
    let a_l = FunctionalElement::letter(DualLetter::A);
    let d_l = FunctionalElement::letter(DualLetter::Dt);
    let f_l = FunctionalElement::letter(DualLetter::F);
    let brackets = [
        ("block/[A~,Q]=Q", &a_l, &q, Some(1i64)),
        ("block/[A~,P]=-P", &a_l, &p, Some(-1)),
        ("block/[D~,Q]=-Q", &d_l, &q, Some(-1)),
        ("block/[D~,P]=P", &d_l, &p, Some(1)),
        ("block/[F~,Q]=0", &f_l, &q, None),
        ("block/[F~,P]=0", &f_l, &p, None),
        ("block/[A~,D~]=0", &a_l, &d_l, None),
        ("block/[F~,A~]=0", &f_l, &a_l, None),
    ];
    for (id, x, y, coeff) in brackets {
        let lhs = x.commutator(y);
        let rhs = match coeff {
            Some(c) => y.scale(&Scalar::from_int(c)),
            None => FunctionalElement::zero(),
        };
        check(&mut report, id, "sec4 tilde bracket table", &lhs, &rhs, false);
    }

    // Drinfeld-Jimbo: [H, X+-] = +-2 X+- with H realized as A~ - D~ (the
    // central F~ contributes nothing); the sign convention is adjudicated
    let h = a_l.sub(&d_l);
    let plus2 = check(
        &mut report,
        "dj/[H,X+]=+2X+",
        "sec4 [H, X+] with X+ the B-type entry",
        &h.commutator(&q),
        &q.scale(&Scalar::from_int(2)),
        false,
    );
    let minus2 = check(
        &mut report,
        "dj/[H,X-]=-2X-",
        "sec4 [H, X-] with X- the C-type entry",
        &h.commutator(&p),
        &p.scale(&Scalar::from_int(-2)),
        false,
    );
    if plus2 && minus2 {
        report.pass(
            "dj/sign-convention",
            "sec4 '[H,X+-]=2X+-' holds with the +- sign convention (+2 on X+, -2 on X-)",
        );
    } else {
        report.fail("dj/sign-convention", "sec4 DJ sign", None);
    }

    // [X+, X-] = [H]_q with the grouplike pair solved from the L diagonals:
    // PQ - QP = lambda (N'M - M'N) where N', M' are the L- diagonals. In the
    // printed normalization X+ = Q/lambda, X- = -P/lambda this is exactly
    // [X+,X-] = (K - K')/lambda with K = N'M, K' = M'N.
    {
        let lhs = p.mul(&q).sub(&q.mul(&p));
        let k1 = n_mi.mul(&m_pl);
        let k2 = m_mi.mul(&n_pl);
        let rhs = k1.sub(&k2).scale(&lam);
        check(
            &mut report,
            "dj/qbracket-solved",
            "sec4 [X+,X-] = q-bracket of the solved grouplike pair (s-exponent inverted vs print)",
            &lhs,
            &rhs,
            false,
        );
        // the printed grouplike r^{A-D} s^{F} and its literal inverse
        let kp = FunctionalElement::letter(
            DualLetter::grouplike(Scalar::rpow(1), Scalar::rpow(-1), Scalar::spow(1)).unwrap(),
        );
        let kp_inv = FunctionalElement::letter(
            DualLetter::grouplike(Scalar::rpow(-1), Scalar::rpow(1), Scalar::spow(-1)).unwrap(),
        );
        let rhs_printed = kp.sub(&kp_inv).scale(&lam);
        check(
            &mut report,
            "dj/qbracket-printed",
            "sec4 [X+,X-] = [H] with K = r^{A~-D~} s^{F~} as printed",
            &lhs,
            &rhs_printed,
            true,
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_entries_match_display() {
        let r = build_r();
        assert_eq!(*r.entry((0, 0), (0, 0)), Scalar::rpow(1));
        assert_eq!(*r.entry((0, 1), (0, 1)), Scalar::spow(-1));
        assert_eq!(*r.entry((1, 2), (2, 1)), Scalar::zero());
        assert_eq!(*r.entry((2, 1), (1, 2)), Scalar::lambda());
    }

    #[test]
    fn qybe_holds_and_breaks_under_perturbation() {
        assert!(verify_qybe(&build_r()));
        assert!(verify_qybe(&RMatrix::identity()));
        let mut bad = build_r();
        bad.set_entry((0, 1), (0, 1), Scalar::spow(1));
        assert!(!verify_qybe(&bad));
    }

    #[test]
    fn inverse_roundtrip() {
        let r = build_r();
        let inv = r.inverse().unwrap();
        assert_eq!(r.matmul(&inv), RMatrix::identity());
    }

    #[test]
    fn rtt_reproduces_relation_table() {
        let bound = Bound::default();
        let ext = rtt_extract(&build_r(), &bound, None);
        assert_eq!(ext.report.summary.fail, 0, "{}", ext.report.to_text());
        // exactly one discrepancy: the printed orientation flips r
        assert_eq!(ext.report.summary.discrepancy, 1, "{}", ext.report.to_text());
        // nine plain reorderings plus the two orientations of the [a,d]
        // rewrite (one of them written over cb, a combination with bc = cb)
        assert_eq!(ext.relations.len(), 11);
    }

    #[test]
    fn l_matrices_solve_and_pass_their_defining_checks() {
        let bound = Bound {
            k: 1,
            l: 1,
            m: 1,
            n: 1,
            t: 1,
            j: 1,
            wordlen: 4,
        };
        let (lm, report) = build_l_matrices(&Scalar::one(), &Scalar::one(), &bound, None).unwrap();
        assert_eq!(report.summary.fail, 0, "{}", report.to_text());
        // solved values: J = G(s,1,r), M = G(r,1,s^-1), N = G(1,r,1)
        assert_eq!(lm.plus_values.a.0[0][0], Scalar::spow(1));
        assert_eq!(lm.plus_values.f.0[1][1], Scalar::spow(-1));
        assert_eq!(lm.plus_values.d.0[2][2], Scalar::rpow(1));
        // Q pairs b with value lambda; P pairs c with value -lambda
        let mut pairer = Pairer::new();
        assert_eq!(
            pairer.pair(lm.q_entry(), &AlgebraElement::generator(Letter::B)),
            Scalar::lambda()
        );
        assert_eq!(
            pairer.pair(lm.p_entry(), &AlgebraElement::generator(Letter::C)),
            -Scalar::lambda()
        );
    }
}
