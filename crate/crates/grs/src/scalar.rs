//! Exact arithmetic in the coefficient ring: Laurent polynomials in r^(1/2), s^(1/2)
//! over the rationals.
//!
//! Exponents are stored doubled, so a term r^(p/2) s^(q/2) is keyed by the integer
//! pair (p, q). Every operation is exact; there is no fraction field. Identities
//! with a denominator are checked by cross multiplication, see [`ratio_equal`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors from scalar construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("exponent {0}/{1} is not a half-integer")]
    NonHalfIntegerExponent(i64, i64),
    #[error("substitution value must be nonzero")]
    ZeroSubstitution,
    #[error("substitution value {0} has no rational square root")]
    IrrationalSqrt(BigRational),
    #[error("zero denominator in ratio comparison")]
    ZeroDenominator,
    #[error("scalar {0} is not an invertible monomial")]
    NotInvertible(String),
}

/// A Laurent polynomial in r^(1/2) and s^(1/2) with rational coefficients.
///
/// Canonical form: no zero coefficients are stored, so equality of ring
/// elements is map equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::monomial(BigRational::one(), 0, 0)
    }

    /// The term q * r^(er2/2) * s^(es2/2); exponents are given doubled.
    pub fn monomial(coeff: BigRational, er2: i32, es2: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((er2, es2), coeff);
        }
        Scalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::monomial(BigRational::from_integer(BigInt::from(n)), 0, 0)
    }

    pub fn from_rational(num: i64, den: i64) -> Self {
        Scalar::monomial(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            0,
            0,
        )
    }

    /// r^n for integer n.
    pub fn rpow(n: i32) -> Self {
        Scalar::monomial(BigRational::one(), 2 * n, 0)
    }

    /// s^n for integer n.
    pub fn spow(n: i32) -> Self {
        Scalar::monomial(BigRational::one(), 0, 2 * n)
    }

    /// r^(n/2).
    pub fn rpow_half(n: i32) -> Self {
        Scalar::monomial(BigRational::one(), n, 0)
    }

    /// s^(n/2).
    pub fn spow_half(n: i32) -> Self {
        Scalar::monomial(BigRational::one(), 0, n)
    }

    /// lambda = r - r^{-1}.
    pub fn lambda() -> Self {
        Scalar::rpow(1) - Scalar::rpow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// True if the scalar is a single term (a unit of the Laurent ring when nonzero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    fn insert(&mut self, key: (i32, i32), coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse, defined only for single-term scalars.
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.terms.len() != 1 {
            return Err(ScalarError::NotInvertible(self.to_string()));
        }
        let ((er, es), c) = self.terms.iter().next().unwrap();
        Ok(Scalar::monomial(c.recip(), -er, -es))
    }

    /// Integer power of an invertible monomial (or nonnegative power of anything).
    pub fn pow(&self, n: i32) -> Result<Scalar, ScalarError> {
        if n >= 0 {
            let mut acc = Scalar::one();
            for _ in 0..n {
                acc = &acc * self;
            }
            Ok(acc)
        } else {
            self.inverse()?.pow(-n)
        }
    }

    /// Exact evaluation at r = r0, s = s0. Both values must be nonzero squares
    /// of rationals so that the half-powers stay rational.
    pub fn substitute(&self, r0: &BigRational, s0: &BigRational) -> Result<BigRational, ScalarError> {
        let sqrt_r = rational_sqrt(r0)?;
        let sqrt_s = rational_sqrt(s0)?;
        let mut acc = BigRational::zero();
        for ((er, es), c) in &self.terms {
            acc += c * ratpow(&sqrt_r, *er) * ratpow(&sqrt_s, *es);
        }
        Ok(acc)
    }
}

fn ratpow(base: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num::pow::pow(base.clone(), e as usize)
    } else {
        num::pow::pow(base.recip(), (-e) as usize)
    }
}

/// Rational square root, or an error when none exists.
fn rational_sqrt(x: &BigRational) -> Result<BigRational, ScalarError> {
    if x.is_zero() {
        return Err(ScalarError::ZeroSubstitution);
    }
    if x.is_negative() {
        return Err(ScalarError::IrrationalSqrt(x.clone()));
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Ok(BigRational::new(sn, sd))
    } else {
        Err(ScalarError::IrrationalSqrt(x.clone()))
    }
}

/// n1/d1 == n2/d2 via cross multiplication; no division is performed.
pub fn ratio_equal(n1: &Scalar, d1: &Scalar, n2: &Scalar, d2: &Scalar) -> Result<bool, ScalarError> {
    if d1.is_zero() || d2.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(n1 * d2 == n2 * d1)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, v.clone());
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, -v.clone());
        }
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for ((e1, f1), c1) in &self.terms {
            for ((e2, f2), c2) in &rhs.terms {
                out.insert((e1 + e2, f1 + f2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar { (&self).$f(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_exponent(sym: &str, e2: i32, out: &mut Vec<String>) {
    if e2 == 0 {
        return;
    }
    if e2 % 2 == 0 {
        let e = e2 / 2;
        if e == 1 {
            out.push(sym.to_string());
        } else {
            out.push(format!("{sym}^{e}"));
        }
    } else {
        out.push(format!("{sym}^({e2}/2)"));
    }
}

impl fmt::Display for Scalar {
    /// Deterministic text form: terms in descending lexicographic order on
    /// (e_r, e_s), each as `q * r^p * s^p'` with unit factors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((er, es), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (*er == 0 && *es == 0) {
                parts.push(mag.to_string());
            }
            fmt_exponent("r", *er, &mut parts);
            fmt_exponent("s", *es, &mut parts);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Arithmetic expression tree over r, s and rationals, the input form of
/// scalar normalization. Built by the CLI parser.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarExpr {
    R,
    S,
    Rational(BigRational),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Sub(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
    Neg(Box<ScalarExpr>),
    /// base ^ (num/den); den must be 1 or 2, and for den = 2 the base must be
    /// r or s so half-powers stay exact.
    Pow(Box<ScalarExpr>, i64, i64),
}

impl ScalarExpr {
    /// Canonical [`Scalar`] of the tree; equal expressions yield identical term maps.
    pub fn normalize(&self) -> Result<Scalar, ScalarError> {
        match self {
            ScalarExpr::R => Ok(Scalar::rpow(1)),
            ScalarExpr::S => Ok(Scalar::spow(1)),
            ScalarExpr::Rational(q) => Ok(Scalar::monomial(q.clone(), 0, 0)),
            ScalarExpr::Add(a, b) => Ok(a.normalize()? + b.normalize()?),
            ScalarExpr::Sub(a, b) => Ok(a.normalize()? - b.normalize()?),
            ScalarExpr::Mul(a, b) => Ok(a.normalize()? * b.normalize()?),
            ScalarExpr::Neg(a) => Ok(-a.normalize()?),
            ScalarExpr::Pow(base, num, den) => match den {
                1 => {
                    let b = base.normalize()?;
                    let n = i32::try_from(*num)
                        .map_err(|_| ScalarError::NonHalfIntegerExponent(*num, 1))?;
                    b.pow(n)
                }
                2 => {
                    let n = i32::try_from(*num)
                        .map_err(|_| ScalarError::NonHalfIntegerExponent(*num, 2))?;
                    match **base {
                        ScalarExpr::R => Ok(Scalar::rpow_half(n)),
                        ScalarExpr::S => Ok(Scalar::spow_half(n)),
                        _ => Err(ScalarError::NonHalfIntegerExponent(*num, 2)),
                    }
                }
                _ => Err(ScalarError::NonHalfIntegerExponent(*num, *den)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r() -> Scalar {
        Scalar::rpow(1)
    }
    fn rinv() -> Scalar {
        Scalar::rpow(-1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (r() - rinv()) * (r() + rinv());
        let rhs = Scalar::rpow(2) - Scalar::rpow(-2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_times_r_inverse_is_one() {
        assert!((r() * rinv()).is_one());
    }

    #[test]
    fn lambda_squared() {
        let lhs = Scalar::lambda() * Scalar::lambda();
        let rhs = Scalar::rpow(2) - Scalar::from_int(2) + Scalar::rpow(-2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_examples() {
        let four = BigRational::from_integer(4.into());
        let nine = BigRational::from_integer(9.into());
        // r - r^-1 at r = 4: 4 - 1/4 = 15/4
        let x = r() - rinv();
        assert_eq!(
            x.substitute(&four, &nine).unwrap(),
            BigRational::new(15.into(), 4.into())
        );
        // s^(1/2) at s = 9 -> 3
        let y = Scalar::spow_half(1);
        assert_eq!(
            y.substitute(&four, &nine).unwrap(),
            BigRational::from_integer(3.into())
        );
        // r^2 s^2 - 1 at (4, 9) -> 16*81 - 1 = 1295
        let z = Scalar::rpow(2) * Scalar::spow(2) - Scalar::one();
        assert_eq!(
            z.substitute(&four, &nine).unwrap(),
            BigRational::from_integer(1295.into())
        );
    }

    #[test]
    fn substitute_rejects_irrational_and_zero() {
        let x = Scalar::rpow_half(1);
        let two = BigRational::from_integer(2.into());
        let nine = BigRational::from_integer(9.into());
        assert!(matches!(
            x.substitute(&two, &nine),
            Err(ScalarError::IrrationalSqrt(_))
        ));
        assert!(matches!(
            x.substitute(&BigRational::zero(), &nine),
            Err(ScalarError::ZeroSubstitution)
        ));
    }

    #[test]
    fn ratio_equal_examples() {
        // (r^2 - 1)/(r - r^-1) == r/1
        let n1 = Scalar::rpow(2) - Scalar::one();
        let d1 = Scalar::lambda();
        assert!(ratio_equal(&n1, &d1, &r(), &Scalar::one()).unwrap());
        assert!(!ratio_equal(&n1, &d1, &rinv(), &Scalar::one()).unwrap());
        assert!(matches!(
            ratio_equal(&n1, &Scalar::zero(), &r(), &Scalar::one()),
            Err(ScalarError::ZeroDenominator)
        ));
    }

    #[test]
    fn display_ordering_is_descending() {
        let x = Scalar::one() + Scalar::rpow(-2);
        assert_eq!(x.to_string(), "1 + r^-2");
        let y = Scalar::rpow(2) - Scalar::from_int(2) + Scalar::rpow(-2);
        assert_eq!(y.to_string(), "r^2 - 2 + r^-2");
        let h = Scalar::monomial(BigRational::new(3.into(), 2.into()), 1, -3);
        assert_eq!(h.to_string(), "3/2*r^(1/2)*s^(-3/2)");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        proptest::collection::vec(((-4i32..=4, -4i32..=4), -9i64..=9), 0..5).prop_map(|v| {
            let mut s = Scalar::zero();
            for ((er, es), c) in v {
                s = s + Scalar::monomial(BigRational::from_integer(c.into()), er, es);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &Scalar::one(), a.clone());
            prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        }

        #[test]
        fn substitute_is_ring_homomorphism(a in arb_scalar(), b in arb_scalar()) {
            let r0 = BigRational::new(25.into(), 4.into());
            let s0 = BigRational::new(9.into(), 16.into());
            let ab = (&a * &b).substitute(&r0, &s0).unwrap();
            prop_assert_eq!(ab, a.substitute(&r0, &s0).unwrap() * b.substitute(&r0, &s0).unwrap());
            let apb = (&a + &b).substitute(&r0, &s0).unwrap();
            prop_assert_eq!(apb, a.substitute(&r0, &s0).unwrap() + b.substitute(&r0, &s0).unwrap());
        }
    }
}
