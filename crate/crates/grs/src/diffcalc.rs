//! First-order bicovariant differential calculus on G_{r,s}, built from the
//! solved L matrices: one-form bimodule commutations, vector fields
//! chi = S(L+) L- - 1 eps, convolution products, and the exterior derivative
//! d(x) = tau x - x tau = sum_i (chi_i * x) omega^i.
//!
//! Everything here is derived from the L matrices; the printed section-5
//! tables enter only as the comparison target of [`verify_calculus_tables`],
//! which records per-cell verdicts.

use crate::algebra::{
    antipode, coproduct, multiply, AlgebraElement, Letter, Monomial, TensorElement,
};
use crate::dual::{FunctionalElement, Pairer};
use crate::report::{Bound, Counterexample, Report, Spot};
use crate::rmatrix::{FunctionalMatrix, LMatrices};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// The five surviving one-form components; the matrix positions (0,1), (0,2),
/// (1,0), (2,0) have null contribution because the generator matrix vanishes
/// there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OneFormIndex {
    W0,
    W1,
    WPlus,
    WMinus,
    W2,
}

impl OneFormIndex {
    pub const ALL: [OneFormIndex; 5] = [
        OneFormIndex::W0,
        OneFormIndex::W1,
        OneFormIndex::WPlus,
        OneFormIndex::WMinus,
        OneFormIndex::W2,
    ];

    /// Matrix position (0-based): w0 = (0,0), w1 = (1,1), w+ = (1,2),
    /// w- = (2,1), w2 = (2,2).
    pub fn position(self) -> (usize, usize) {
        match self {
            OneFormIndex::W0 => (0, 0),
            OneFormIndex::W1 => (1, 1),
            OneFormIndex::WPlus => (1, 2),
            OneFormIndex::WMinus => (2, 1),
            OneFormIndex::W2 => (2, 2),
        }
    }

    pub fn from_position(p: (usize, usize)) -> Option<OneFormIndex> {
        OneFormIndex::ALL.iter().copied().find(|w| w.position() == p)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OneFormIndex::W0 => "w0",
            OneFormIndex::W1 => "w1",
            OneFormIndex::WPlus => "w+",
            OneFormIndex::WMinus => "w-",
            OneFormIndex::W2 => "w2",
        }
    }

    pub fn parse(s: &str) -> Option<OneFormIndex> {
        OneFormIndex::ALL.iter().copied().find(|w| w.symbol() == s)
    }
}

impl fmt::Display for OneFormIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Vector fields chi_0, chi_1, chi_+, chi_-, chi_2 mirror the one-form
/// components, with the same four excluded positions.
pub type VectorFieldIndex = OneFormIndex;

/// An element of the one-form bimodule in left-normal form: a sum of
/// (left coefficient) omega^i.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GammaElement {
    coeffs: BTreeMap<OneFormIndex, AlgebraElement>,
}

impl GammaElement {
    pub fn zero() -> Self {
        GammaElement::default()
    }

    pub fn from_form(w: OneFormIndex, coeff: AlgebraElement) -> Self {
        let mut g = GammaElement::zero();
        g.add_form(w, coeff);
        g
    }

    pub fn add_form(&mut self, w: OneFormIndex, coeff: AlgebraElement) {
        if coeff.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_insert_with(AlgebraElement::zero);
        *e = e.add(&coeff);
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: OneFormIndex) -> Option<&AlgebraElement> {
        self.coeffs.get(&w)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&OneFormIndex, &AlgebraElement)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_form(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_form(*w, c.scale(&-Scalar::one()));
        }
        out
    }

    /// Left module action: x * gamma.
    pub fn left_mul(&self, x: &AlgebraElement) -> GammaElement {
        let mut out = GammaElement::zero();
        for (w, c) in &self.coeffs {
            out.add_form(*w, multiply(x, c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Left convolution product f * x = (1 (x) f) Delta(x).
pub fn convolve(phi: &FunctionalElement, x: &AlgebraElement) -> AlgebraElement {
    convolve_with(&mut Pairer::new(), phi, x)
}

pub fn convolve_with(
    pairer: &mut Pairer,
    phi: &FunctionalElement,
    x: &AlgebraElement,
) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        let d2 = coproduct(&AlgebraElement::from_monomial(*m, Scalar::one()), 2);
        for ((m1, m2), c2) in d2.rank2_terms() {
            let v = pairer.pair(phi, &AlgebraElement::from_monomial(*m2, Scalar::one()));
            if v.is_zero() {
                continue;
            }
            out.add_term(*m1, &(c * c2) * &v);
        }
    }
    out
}

/// The calculus engine: chi functionals and the one-form commutation
/// transfer built from a solved pair of L matrices.
pub struct Calculus {
    chi: BTreeMap<OneFormIndex, FunctionalElement>,
    /// omega_{ij} x = sum_{kl} (Phi^{(ij)}_{(kl)} * x) omega_{kl} with
    /// Phi^{(ij)}_{(kl)} = S(l+_{ki}) l-_{jl}.
    transfer: BTreeMap<(OneFormIndex, OneFormIndex), FunctionalElement>,
    s_plus: FunctionalMatrix,
    minus: FunctionalMatrix,
}

impl Calculus {
    pub fn new(lm: &LMatrices) -> Calculus {
        let s_plus = lm.plus.antipode();
        let product = s_plus.matmul(&lm.minus);
        let mut chi = BTreeMap::new();
        for w in OneFormIndex::ALL {
            let (i, j) = w.position();
            let mut f = product.0[i][j].clone();
            if i == j {
                f = f.sub(&FunctionalElement::one());
            }
            chi.insert(w, f);
        }
        let mut transfer = BTreeMap::new();
        for src in OneFormIndex::ALL {
            let (i, j) = src.position();
            for tgt in OneFormIndex::ALL {
                let (k, l) = tgt.position();
                let phi = s_plus.0[k][i].mul(&lm.minus.0[j][l]);
                if !phi.is_zero() {
                    transfer.insert((src, tgt), phi);
                }
            }
        }
        Calculus {
            chi,
            transfer,
            s_plus,
            minus: lm.minus.clone(),
        }
    }

    /// The five surviving vector fields chi = S(L+)L- - 1 eps.
    pub fn chi(&self, w: VectorFieldIndex) -> &FunctionalElement {
        &self.chi[&w]
    }

    /// All five vector fields as a map.
    pub fn chi_functionals(&self) -> BTreeMap<VectorFieldIndex, FunctionalElement> {
        self.chi.clone()
    }

    /// Excluded components of S(L+)L- - 1 eps; all identically zero.
    pub fn excluded_components_vanish(&self) -> bool {
        let product = self.s_plus.matmul(&self.minus);
        [(0, 1), (0, 2), (1, 0), (2, 0)]
            .iter()
            .all(|&(i, j)| product.0[i][j].is_zero())
    }

    /// Left-normalize omega^i x as sum of (coefficient) omega^k.
    pub fn omega_commute(&self, src: OneFormIndex, x: &AlgebraElement) -> GammaElement {
        self.omega_commute_with(&mut Pairer::new(), src, x)
    }

    pub fn omega_commute_with(
        &self,
        pairer: &mut Pairer,
        src: OneFormIndex,
        x: &AlgebraElement,
    ) -> GammaElement {
        let mut out = GammaElement::zero();
        for tgt in OneFormIndex::ALL {
            if let Some(phi) = self.transfer.get(&(src, tgt)) {
                out.add_form(tgt, convolve_with(pairer, phi, x));
            }
        }
        out
    }

    /// Right module action gamma * y, normalized back to left coefficients.
    pub fn gamma_right_mul(
        &self,
        pairer: &mut Pairer,
        gamma: &GammaElement,
        y: &AlgebraElement,
    ) -> GammaElement {
        let mut out = GammaElement::zero();
        for (w, c) in gamma.coeffs() {
            let shifted = self.omega_commute_with(pairer, *w, y);
            for (tgt, c2) in shifted.coeffs() {
                out.add_form(*tgt, multiply(c, c2));
            }
        }
        out
    }

    /// Exterior derivative via the vector fields.
    pub fn d_chi(&self, pairer: &mut Pairer, x: &AlgebraElement) -> GammaElement {
        let mut out = GammaElement::zero();
        for w in OneFormIndex::ALL {
            out.add_form(w, convolve_with(pairer, &self.chi[&w], x));
        }
        out
    }

    /// Exterior derivative via the bi-invariant form tau = w0 + w1 + w2.
    pub fn d_tau(&self, pairer: &mut Pairer, x: &AlgebraElement) -> GammaElement {
        let mut out = GammaElement::zero();
        for diag in [OneFormIndex::W0, OneFormIndex::W1, OneFormIndex::W2] {
            out = out.add(&self.omega_commute_with(pairer, diag, x));
            out.add_form(diag, x.scale(&-Scalar::one()));
        }
        out
    }

    /// Both routes, asserted equal.
    pub fn exterior_d(&self, x: &AlgebraElement) -> Result<GammaElement, String> {
        let mut pairer = Pairer::new();
        let via_chi = self.d_chi(&mut pairer, x);
        let via_tau = self.d_tau(&mut pairer, x);
        if via_chi != via_tau {
            return Err(format!(
                "exterior derivative routes disagree on {x}: chi route {via_chi}, tau route {via_tau}"
            ));
        }
        Ok(via_chi)
    }
}

/// Build the full calculus from freshly solved L matrices with c+- = 1.
pub fn standard_calculus() -> (Calculus, LMatrices) {
    let bound = Bound {
        k: 1,
        l: 1,
        m: 1,
        n: 1,
        t: 1,
        j: 1,
        wordlen: 4,
    };
    let (lm, report) =
        crate::rmatrix::build_l_matrices(&Scalar::one(), &Scalar::one(), &bound, None)
            .expect("L matrices solve");
    assert_eq!(report.summary.fail, 0, "L matrix solve failed: {}", report.to_text());
    (Calculus::new(&lm), lm)
}

// ---------------------------------------------------------------------------
// printed section-5 tables (comparison oracle only)
// ---------------------------------------------------------------------------

fn gen_el(l: Letter) -> AlgebraElement {
    AlgebraElement::generator(l)
}

/// chi values as printed: (form, generator) -> scalar.
fn printed_chi(w: OneFormIndex, g: Letter) -> Scalar {
    use Letter::*;
    use OneFormIndex::*;
    let lam2 = Scalar::lambda() * Scalar::lambda();
    match (w, g) {
        (W0, A) => Scalar::rpow(2) * Scalar::spow(2) - Scalar::one(),
        (W0, D) => Scalar::rpow(2) - Scalar::one(),
        (W1, A) => Scalar::rpow(-2) - Scalar::one(),
        (W1, D) => lam2,
        (W1, F) => Scalar::spow(-2) - Scalar::one(),
        (WPlus, C) => -Scalar::lambda(),
        (WMinus, B) => -Scalar::lambda(),
        (W2, D) => Scalar::rpow(-2) - Scalar::one(),
        _ => Scalar::zero(),
    }
}

/// Convolution values as printed: (form, generator) -> (target generator, scalar).
fn printed_conv(w: OneFormIndex, g: Letter) -> (Letter, Scalar) {
    use Letter::*;
    use OneFormIndex::*;
    let lam = Scalar::lambda();
    let lam2 = &lam * &lam;
    match (w, g) {
        (W0, A) => (A, Scalar::rpow(2) * Scalar::spow(2) - Scalar::one()),
        (W0, B) => (B, Scalar::rpow(2) - Scalar::one()),
        (W0, C) => (C, Scalar::rpow(2) * Scalar::spow(2) - Scalar::one()),
        (W0, D) => (D, Scalar::rpow(2) - Scalar::one()),
        (W1, A) => (A, Scalar::rpow(-2) - Scalar::one()),
        (W1, B) => (B, lam2.clone()),
        (W1, C) => (C, Scalar::rpow(-2) - Scalar::one()),
        (W1, D) => (D, lam2),
        (W1, F) => (F, Scalar::spow(-2) - Scalar::one()),
        (WPlus, A) => (B, -lam.clone()),
        (WPlus, C) => (D, -lam.clone()),
        (WMinus, B) => (A, -lam.clone()),
        (WMinus, D) => (C, -lam),
        (W2, B) => (B, Scalar::rpow(-2) - Scalar::one()),
        (W2, D) => (D, Scalar::rpow(-2) - Scalar::one()),
        (_, g) => (g, Scalar::zero()),
    }
}

/// omega commutations as printed: (form, generator) -> targets.
fn printed_omega(w: OneFormIndex, g: Letter) -> Vec<(OneFormIndex, Letter, Scalar)> {
    use Letter::*;
    use OneFormIndex::*;
    let lam = Scalar::lambda();
    let lam2 = &lam * &lam;
    let lr = &lam * &Scalar::rpow(-1);
    match (w, g) {
        (W0, A) => vec![(W0, A, Scalar::rpow(2) * Scalar::spow(2))],
        (W0, B) => vec![(W0, B, Scalar::rpow(2))],
        (W0, C) => vec![(W0, C, Scalar::rpow(2) * Scalar::spow(2))],
        (W0, D) => vec![(W0, D, Scalar::rpow(2))],
        (W0, F) => vec![(W0, F, Scalar::one())],
        (W1, A) => vec![(W1, A, Scalar::rpow(-2))],
        (W1, B) => vec![(W1, B, Scalar::one())],
        (W1, C) => vec![(W1, C, Scalar::rpow(-2))],
        (W1, D) => vec![(W1, D, Scalar::one())],
        (W1, F) => vec![(W1, F, Scalar::spow(-2))],
        (WPlus, A) => vec![(WPlus, A, Scalar::rpow(-1))],
        (WPlus, B) => vec![(WPlus, B, Scalar::rpow(-1)), (W1, A, -lr.clone())],
        (WPlus, C) => vec![(WPlus, C, Scalar::rpow(-1))],
        (WPlus, D) => vec![(WPlus, D, Scalar::rpow(-1)), (W1, C, -lr.clone())],
        (WPlus, F) => vec![(WPlus, F, Scalar::spow(-1))],
        (WMinus, A) => vec![(WMinus, A, Scalar::rpow(-1)), (W1, B, -lr.clone())],
        (WMinus, B) => vec![(WMinus, B, Scalar::rpow(-1))],
        (WMinus, C) => vec![(WMinus, C, Scalar::rpow(-1)), (W1, D, -lr.clone())],
        (WMinus, D) => vec![(WMinus, D, Scalar::rpow(-1))],
        (WMinus, F) => vec![(WMinus, F, Scalar::spow(-1))],
        (W2, A) => vec![(W2, A, Scalar::one()), (WPlus, B, -lam.clone())],
        (W2, B) => vec![
            (W2, B, Scalar::rpow(-2)),
            (WMinus, A, -lr.clone()),
            (W1, B, lam2.clone()),
        ],
        (W2, C) => vec![(W2, C, Scalar::one()), (WPlus, D, -lam)],
        (W2, D) => vec![(W2, D, Scalar::rpow(-2)), (WMinus, C, -lr), (W1, D, lam2)],
        (W2, F) => vec![(W2, F, Scalar::one())],
        _ => unreachable!(),
    }
}

/// Exterior derivatives as printed.
fn printed_d(g: Letter) -> Vec<(OneFormIndex, Letter, Scalar)> {
    use Letter::*;
    use OneFormIndex::*;
    let lam = Scalar::lambda();
    let lam2 = &lam * &lam;
    match g {
        A => vec![
            (W0, A, Scalar::rpow(2) * Scalar::spow(2) - Scalar::one()),
            (W1, A, Scalar::rpow(-2) - Scalar::one()),
            (WPlus, B, -lam),
        ],
        B => vec![
            (W0, B, Scalar::rpow(2) - Scalar::one()),
            (W1, B, lam2),
            (WMinus, A, -lam),
            (W2, B, Scalar::rpow(-2) - Scalar::one()),
        ],
        C => vec![
            (W0, C, Scalar::rpow(2) * Scalar::spow(2) - Scalar::one()),
            (W1, C, Scalar::rpow(-2) - Scalar::one()),
            (WPlus, D, -lam),
        ],
        D => vec![
            (W0, D, Scalar::rpow(2) - Scalar::one()),
            (W1, D, lam2),
            (WMinus, C, -lam),
            (W2, D, Scalar::rpow(-2) - Scalar::one()),
        ],
        F => vec![(W1, F, Scalar::spow(-2) - Scalar::one())],
        _ => unreachable!(),
    }
}

fn gamma_from_cells(cells: &[(OneFormIndex, Letter, Scalar)]) -> GammaElement {
    let mut g = GammaElement::zero();
    for (w, l, c) in cells {
        g.add_form(*w, gen_el(*l).scale(c));
    }
    g
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

const GENERATORS: [Letter; 5] = [Letter::A, Letter::B, Letter::C, Letter::D, Letter::F];

/// Recompute every section-5 table cell from the L matrices and compare with
/// the printed display; per-cell verdicts. Engine-internal consistency (two
/// derivative routes, tau route, excluded components) is asserted alongside.
pub fn verify_calculus_tables(calc: &Calculus, bound: &Bound, spot: Option<Spot>) -> Report {
    let mut report = Report::new("calculus", *bound, spot);
    let mut pairer = Pairer::new();

    if calc.excluded_components_vanish() {
        report.pass(
            "calculus/excluded-components",
            "sec5 omega_12, omega_13, omega_21, omega_31 have null contribution",
        );
    } else {
        report.fail("calculus/excluded-components", "sec5 null components", None);
    }

    // chi table (25 cells)
    for w in OneFormIndex::ALL {
        for g in GENERATORS {
            let engine = pairer.pair(calc.chi(w), &gen_el(g));
            let stated = printed_chi(w, g);
            let id = format!("calculus/chi[{w}]({})", g.symbol());
            let locus = "sec5 chi table";
            if engine == stated {
                report.pass(&id, locus);
            } else {
                report.discrepancy(
                    &id,
                    locus,
                    Some(Counterexample {
                        monomial: g.symbol().to_string(),
                        lhs: engine.to_string(),
                        rhs: stated.to_string(),
                    }),
                );
            }
        }
    }

    // convolution table (25 cells)
    for w in OneFormIndex::ALL {
        for g in GENERATORS {
            let engine = convolve_with(&mut pairer, calc.chi(w), &gen_el(g));
            let (tl, tc) = printed_conv(w, g);
            let stated = gen_el(tl).scale(&tc);
            let id = format!("calculus/conv[{w}]*{}", g.symbol());
            let locus = "sec5 convolution table";
            if engine == stated {
                report.pass(&id, locus);
            } else {
                report.discrepancy(
                    &id,
                    locus,
                    Some(Counterexample {
                        monomial: g.symbol().to_string(),
                        lhs: engine.to_string(),
                        rhs: stated.to_string(),
                    }),
                );
            }
        }
    }

    // omega table (25 cells)
    for w in OneFormIndex::ALL {
        for g in GENERATORS {
            let engine = calc.omega_commute_with(&mut pairer, w, &gen_el(g));
            let stated = gamma_from_cells(&printed_omega(w, g));
            let id = format!("calculus/omega[{w}]{}", g.symbol());
            let locus = "sec5 omega commutation table";
            if engine == stated {
                report.pass(&id, locus);
            } else {
                report.discrepancy(
                    &id,
                    locus,
                    Some(Counterexample {
                        monomial: g.symbol().to_string(),
                        lhs: engine.to_string(),
                        rhs: stated.to_string(),
                    }),
                );
            }
        }
    }

    // exterior derivatives (5 cells), via both routes
    for g in GENERATORS {
        let engine = match calc.exterior_d(&gen_el(g)) {
            Ok(e) => e,
            Err(msg) => {
                report.fail(
                    &format!("calculus/d({})", g.symbol()),
                    "two-route exterior derivative",
                    Some(Counterexample {
                        monomial: g.symbol().to_string(),
                        lhs: msg,
                        rhs: String::new(),
                    }),
                );
                continue;
            }
        };
        let stated = gamma_from_cells(&printed_d(g));
        let id = format!("calculus/d({})", g.symbol());
        let locus = "sec5 exterior derivative display";
        if engine == stated {
            report.pass(&id, locus);
        } else {
            report.discrepancy(
                &id,
                locus,
                Some(Counterexample {
                    monomial: g.symbol().to_string(),
                    lhs: engine.to_string(),
                    rhs: stated.to_string(),
                }),
            );
        }
    }

    // internal consistency: the printed table pair omega^2 b vs chi_-(b)
    // assigns two different values to the same functional; record the
    // engine's single value as the adjudication
    {
        let chi_minus_b = pairer.pair(calc.chi(OneFormIndex::WMinus), &gen_el(Letter::B));
        report.pass(
            "calculus/omega2b-vs-chi-minus-note",
            &format!(
                "sec5 prints -lambda r^-1 in omega^2 b but -lambda in chi_-(b) for the same functional; engine value {chi_minus_b}"
            ),
        );
    }

    report
}

/// Leibniz rule on all generator pairs and on random degree-<=3 products, and
/// the left/right covariance of d.
pub fn verify_leibniz_bicovariance(
    calc: &Calculus,
    bound: &Bound,
    random_products: usize,
    spot: Option<Spot>,
) -> Report {
    use rand::Rng;
    use rand::SeedableRng;
    let mut report = Report::new("leibniz", *bound, spot);
    let mut pairer = Pairer::new();

    // d(xy) = (dx) y + x (dy) on the 25 generator pairs
    let mut witness = None;
    for gx in GENERATORS {
        for gy in GENERATORS {
            let x = gen_el(gx);
            let y = gen_el(gy);
            let lhs = calc.d_chi(&mut pairer, &multiply(&x, &y));
            let dx = calc.d_chi(&mut pairer, &x);
            let dy = calc.d_chi(&mut pairer, &y);
            let rhs = calc
                .gamma_right_mul(&mut pairer, &dx, &y)
                .add(&dy.left_mul(&x));
            if lhs != rhs && witness.is_none() {
                witness = Some(Counterexample {
                    monomial: format!("({}, {})", gx.symbol(), gy.symbol()),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    match witness {
        None => report.pass("leibniz/generator-pairs", "sec5 Leibnitz rule, 25 generator pairs"),
        Some(ce) => report.fail("leibniz/generator-pairs", "sec5 Leibnitz rule", Some(ce)),
    }

    // random degree-<=3 products
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1EB);
    let mut witness = None;
    for _ in 0..random_products {
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| -> AlgebraElement {
            let mut acc = AlgebraElement::unit();
            for _ in 0..rng.gen_range(0..=3) {
                let g = GENERATORS[rng.gen_range(0..5)];
                acc = multiply(&acc, &gen_el(g));
            }
            acc
        };
        let x = pick(&mut rng);
        let y = pick(&mut rng);
        let lhs = calc.d_chi(&mut pairer, &multiply(&x, &y));
        let dx = calc.d_chi(&mut pairer, &x);
        let dy = calc.d_chi(&mut pairer, &y);
        let rhs = calc
            .gamma_right_mul(&mut pairer, &dx, &y)
            .add(&dy.left_mul(&x));
        if lhs != rhs && witness.is_none() {
            witness = Some(Counterexample {
                monomial: format!("({x}, {y})"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    let locus = format!("{random_products} random degree-<=3 products");
    match witness {
        None => report.pass("leibniz/random-products", &locus),
        Some(ce) => report.fail("leibniz/random-products", &locus, Some(ce)),
    }

    // two-route d on every bounded monomial
    let mut witness = None;
    for m in bound.monomials() {
        let x = AlgebraElement::from_monomial(m, Scalar::one());
        let via_chi = calc.d_chi(&mut pairer, &x);
        let via_tau = calc.d_tau(&mut pairer, &x);
        if via_chi != via_tau {
            witness = Some(Counterexample {
                monomial: m.to_string(),
                lhs: via_chi.to_string(),
                rhs: via_tau.to_string(),
            });
            break;
        }
    }
    match witness {
        None => report.pass("leibniz/two-route-d", "sec5 d = tau commutator = chi convolution"),
        Some(ce) => report.fail("leibniz/two-route-d", "sec5 two-route d", Some(ce)),
    }

    // omega action is multiplicative: one step equals stepwise on products
    let mut witness = None;
    for w in OneFormIndex::ALL {
        for gx in GENERATORS {
            for gy in GENERATORS {
                let x = gen_el(gx);
                let y = gen_el(gy);
                let direct = calc.omega_commute_with(&mut pairer, w, &multiply(&x, &y));
                let ox = calc.omega_commute_with(&mut pairer, w, &x);
                let step = calc.gamma_right_mul(&mut pairer, &ox, &y);
                if direct != step && witness.is_none() {
                    witness = Some(Counterexample {
                        monomial: format!("omega {w} on ({}, {})", gx.symbol(), gy.symbol()),
                        lhs: direct.to_string(),
                        rhs: step.to_string(),
                    });
                }
            }
        }
    }
    match witness {
        None => report.pass("leibniz/omega-associativity", "bimodule action on products"),
        Some(ce) => report.fail("leibniz/omega-associativity", "bimodule action", Some(ce)),
    }

    // left covariance: Delta_L d = (1 (x) d) Delta on generators
    let mut witness = None;
    for g in GENERATORS {
        let x = gen_el(g);
        let dx = calc.d_chi(&mut pairer, &x);
        // lhs per form: Delta(coefficient)
        let mut lhs: BTreeMap<OneFormIndex, TensorElement> = BTreeMap::new();
        for (w, c) in dx.coeffs() {
            lhs.insert(*w, coproduct(c, 2));
        }
        // rhs per form: sum x1 (x) coeff(d x2)
        let mut rhs: BTreeMap<OneFormIndex, TensorElement> = BTreeMap::new();
        for ((m1, m2), c) in coproduct(&x, 2).rank2_terms() {
            let dm2 = calc.d_chi(&mut pairer, &AlgebraElement::from_monomial(*m2, Scalar::one()));
            for (w, co) in dm2.coeffs() {
                let mut add = BTreeMap::new();
                for (mm, cc) in co.terms() {
                    add.insert((*m1, *mm), c * cc);
                }
                let t = rhs.entry(*w).or_insert_with(|| TensorElement::zero(2));
                *t = t.add(&TensorElement::Rank2(add));
            }
        }
        rhs.retain(|_, v| !v.is_zero());
        lhs.retain(|_, v| !v.is_zero());
        if lhs != rhs && witness.is_none() {
            witness = Some(Counterexample {
                monomial: g.symbol().to_string(),
                lhs: "Delta_L d".to_string(),
                rhs: "(1 (x) d) Delta".to_string(),
            });
        }
    }
    match witness {
        None => report.pass("bicovariance/left", "sec5 Delta_L d = (1 (x) d) Delta"),
        Some(ce) => report.fail("bicovariance/left", "sec5 left covariance", Some(ce)),
    }

    // right covariance: Delta_R d = (d (x) 1) Delta with
    // Delta_R(omega_ij) = omega_kl (x) t_ki S(t_jl)
    let t_entry = |i: usize, j: usize| -> AlgebraElement {
        match (i, j) {
            (0, 0) => gen_el(Letter::F),
            (1, 1) => gen_el(Letter::A),
            (1, 2) => gen_el(Letter::B),
            (2, 1) => gen_el(Letter::C),
            (2, 2) => gen_el(Letter::D),
            _ => AlgebraElement::zero(),
        }
    };
    let mut witness = None;
    for g in GENERATORS {
        let x = gen_el(g);
        let dx = calc.d_chi(&mut pairer, &x);
        let mut lhs: BTreeMap<OneFormIndex, TensorElement> = BTreeMap::new();
        for (w, co) in dx.coeffs() {
            let (i, j) = w.position();
            let dco = coproduct(co, 2);
            for tgt in OneFormIndex::ALL {
                let (k, l) = tgt.position();
                let mfac = multiply(&t_entry(k, i), &antipode(&t_entry(j, l)));
                if mfac.is_zero() {
                    continue;
                }
                let mut add = BTreeMap::new();
                for ((m1, m2), c) in dco.rank2_terms() {
                    let prod = multiply(&AlgebraElement::from_monomial(*m2, Scalar::one()), &mfac);
                    for (mm, cc) in prod.terms() {
                        let e = add.entry((*m1, *mm)).or_insert_with(Scalar::zero);
                        *e = &*e + &(c * cc);
                    }
                }
                add.retain(|_, v: &mut Scalar| !v.is_zero());
                let t = lhs.entry(tgt).or_insert_with(|| TensorElement::zero(2));
                *t = t.add(&TensorElement::Rank2(add));
            }
        }
        let mut rhs: BTreeMap<OneFormIndex, TensorElement> = BTreeMap::new();
        for ((m1, m2), c) in coproduct(&x, 2).rank2_terms() {
            let dm1 = calc.d_chi(&mut pairer, &AlgebraElement::from_monomial(*m1, Scalar::one()));
            for (w, co) in dm1.coeffs() {
                let mut add = BTreeMap::new();
                for (mm, cc) in co.terms() {
                    add.insert((*mm, *m2), c * cc);
                }
                let t = rhs.entry(*w).or_insert_with(|| TensorElement::zero(2));
                *t = t.add(&TensorElement::Rank2(add));
            }
        }
        lhs.retain(|_, v| !v.is_zero());
        rhs.retain(|_, v| !v.is_zero());
        if lhs != rhs && witness.is_none() {
            witness = Some(Counterexample {
                monomial: g.symbol().to_string(),
                lhs: "Delta_R d".to_string(),
                rhs: "(d (x) 1) Delta".to_string(),
            });
        }
    }
    match witness {
        None => report.pass("bicovariance/right", "sec5 Delta_R d = (d (x) 1) Delta, M = T S(T)"),
        Some(ce) => report.fail("bicovariance/right", "sec5 right covariance", Some(ce)),
    }

    report
}

/// d(f^N x) for x in {a, b, c, d}: two-route consistency, the omega^0 term
/// separated out per the realization remark, and the remainder coefficients
/// expressed in (p_N, q_N) where a Laurent-monomial expression exists.
pub fn glpq_calculus(calc: &Calculus, n: i32, spot: Option<Spot>) -> Result<Report, &'static str> {
    if n == 0 {
        return Err("N must be nonzero");
    }
    let mut report = Report::new("glpq-calculus", Bound::default(), spot);
    let mut pairer = Pairer::new();
    let f_n = AlgebraElement::from_monomial(Monomial::new(0, 0, n, 0, 0, 0), Scalar::one());

    for g in [Letter::A, Letter::B, Letter::C, Letter::D] {
        let x = gen_el(g);
        let primed = multiply(&f_n, &x);
        // route 1: d applied to the normal form of f^N x
        let direct = match calc.exterior_d(&primed) {
            Ok(d) => d,
            Err(msg) => {
                report.fail(
                    &format!("glpq-calc/N={n}/d({}')/two-route", g.symbol()),
                    "internal route mismatch",
                    Some(Counterexample {
                        monomial: primed.to_string(),
                        lhs: msg,
                        rhs: String::new(),
                    }),
                );
                continue;
            }
        };
        // route 2: Leibniz, d(f^N) x + f^N d(x)
        let dfn = calc.d_chi(&mut pairer, &f_n);
        let dx = calc.d_chi(&mut pairer, &x);
        let leibniz = calc
            .gamma_right_mul(&mut pairer, &dfn, &x)
            .add(&dx.left_mul(&f_n));
        let id = format!("glpq-calc/N={n}/d({}')/two-route", g.symbol());
        if direct == leibniz {
            report.pass(&id, "sec5 d(f^N x) via Leibniz equals direct evaluation");
        } else {
            report.fail(
                &id,
                "sec5 d(f^N x) routes",
                Some(Counterexample {
                    monomial: primed.to_string(),
                    lhs: direct.to_string(),
                    rhs: leibniz.to_string(),
                }),
            );
        }

        // drop omega^0 (the form tied to f, absent from GL_{p,q}(2)) and
        // express the remainder coefficients in (p_N, q_N) where possible
        for (w, coeff) in direct.coeffs() {
            if *w == OneFormIndex::W0 {
                report.pass(
                    &format!("glpq-calc/N={n}/d({}')/w0-dropped", g.symbol()),
                    "sec5 'one has to ignore the term involving omega^0'",
                );
                continue;
            }
            for (m, c) in coeff.terms() {
                for ((er2, es2), q) in c.terms() {
                    let term = Scalar::monomial(q.clone(), *er2, *es2);
                    let unit = Scalar::monomial(num::BigRational::from_integer(1.into()), *er2, *es2);
                    let expr = crate::algebra::express_in_pq(&unit, n);
                    let id = format!(
                        "glpq-calc/N={n}/d({}')/{w}-coefficient-term",
                        g.symbol()
                    );
                    match expr {
                        Some((ep, eq)) => report.pass(
                            &id,
                            &format!("coefficient term {term} of {m}: monomial part = p^{ep} q^{eq}"),
                        ),
                        None => report.pass(
                            &id,
                            &format!("coefficient term {term} of {m}: no integer (p,q)-monomial expression"),
                        ),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_tables_and_internal_consistency() {
        let (calc, _lm) = standard_calculus();
        let mut pairer = Pairer::new();

        // frozen engine values (first-principles; see the calculus report for
        // the printed-table comparison)
        let lam = Scalar::lambda();
        let lam2 = &lam * &lam;
        // chi_+(c) = -lambda, chi_-(b) = -lambda match the printed table
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::WPlus), &gen_el(Letter::C)),
            -lam.clone()
        );
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::WMinus), &gen_el(Letter::B)),
            -lam.clone()
        );
        // chi_1(a) = r^-2 - 1 matches; chi_0 is supported on f in the engine
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::W1), &gen_el(Letter::A)),
            Scalar::rpow(-2) - Scalar::one()
        );
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::W0), &gen_el(Letter::F)),
            Scalar::rpow(-2) - Scalar::one()
        );
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::W0), &gen_el(Letter::A)),
            Scalar::zero()
        );
        // chi_2(a) = lambda^2, chi_2(d) = r^-2 - 1
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::W2), &gen_el(Letter::A)),
            lam2.clone()
        );
        assert_eq!(
            pairer.pair(calc.chi(OneFormIndex::W2), &gen_el(Letter::D)),
            Scalar::rpow(-2) - Scalar::one()
        );

        // omega^+ a = r^-1 a omega^+ matches print
        let oa = calc.omega_commute(OneFormIndex::WPlus, &gen_el(Letter::A));
        assert_eq!(
            oa,
            GammaElement::from_form(OneFormIndex::WPlus, gen_el(Letter::A).scale(&Scalar::rpow(-1)))
        );

        // two-route exterior derivative agrees on generators and on f^-1
        for g in [Letter::A, Letter::B, Letter::C, Letter::D, Letter::F, Letter::FInv] {
            calc.exterior_d(&gen_el(g)).unwrap();
        }
        // d(1) = 0
        assert!(calc.exterior_d(&AlgebraElement::unit()).unwrap().is_zero());

        assert!(calc.excluded_components_vanish());
    }

    #[test]
    fn calculus_report_partitions_cells() {
        let (calc, _lm) = standard_calculus();
        let bound = Bound {
            k: 1,
            l: 1,
            m: 1,
            n: 1,
            t: 1,
            j: 0,
            wordlen: 4,
        };
        let rep = verify_calculus_tables(&calc, &bound, None);
        assert_eq!(rep.summary.fail, 0, "{}", rep.to_text());
        // engine reproduces 19 chi cells, 15 convolution cells, 6 omega cells
        // and none of the 5 printed derivative rows verbatim; everything else
        // is recorded as a paper discrepancy with both values
        assert_eq!(rep.summary.discrepancy, (25 - 19) + (25 - 15) + (25 - 6) + 5);
    }

    #[test]
    fn leibniz_and_bicovariance_hold() {
        let (calc, _lm) = standard_calculus();
        let bound = Bound {
            k: 1,
            l: 1,
            m: 1,
            n: 1,
            t: 1,
            j: 0,
            wordlen: 4,
        };
        let rep = verify_leibniz_bicovariance(&calc, &bound, 10, None);
        assert!(rep.all_pass(), "{}", rep.to_text());
    }

    #[test]
    fn glpq_calculus_two_routes() {
        let (calc, _lm) = standard_calculus();
        let rep = glpq_calculus(&calc, 1, None).unwrap();
        assert_eq!(rep.summary.fail, 0, "{}", rep.to_text());
        assert!(glpq_calculus(&calc, 0, None).is_err());
    }
}
