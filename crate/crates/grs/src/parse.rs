//! Expression parser for the CLI: scalar arithmetic over r, s and rationals,
//! algebra words over {a,b,c,d,f,Det}, and dual words over {A,B,C,Dt,F,G[u;v;w]}.
//!
//! Grammar:
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := atom ['^' exponent] | '(' expr ')' ['^' exponent]
//!   exponent := ['-'] int | '(' ['-'] int '/' int ')'
//!
//! Mixing algebra and dual atoms in one expression is rejected. `Det` names
//! the quantum determinant; the dual letter D is spelled `Dt`.

use crate::algebra::{normal_form_sum, AlgebraElement, GeneratorWord, Letter};
use crate::dual::{DualLetter, FunctionalElement};
use crate::scalar::Scalar;
use num::bigint::BigInt;
use num::rational::BigRational;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '[' => {
                out.push((i, Token::LBracket));
                i += 1;
            }
            ']' => {
                out.push((i, Token::RBracket));
                i += 1;
            }
            ';' => {
                out.push((i, Token::Semi));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().unwrap();
                out.push((start, Token::Int(n)));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character {c:?}")),
        }
    }
    Ok(out)
}

/// A parsed value: scalar, algebra word sum, or dual functional.
#[derive(Debug, Clone)]
pub enum Value {
    Scalar(Scalar),
    Algebra(Vec<(Scalar, Vec<Letter>)>),
    Dual(FunctionalElement),
}

impl Value {
    pub fn into_algebra(self, offset: usize) -> Result<AlgebraElement, ParseError> {
        match self {
            Value::Scalar(c) => Ok(AlgebraElement::unit().scale(&c)),
            Value::Algebra(words) => Ok(normal_form_sum(
                &words
                    .into_iter()
                    .map(|(coeff, letters)| GeneratorWord { coeff, letters })
                    .collect::<Vec<_>>(),
            )),
            Value::Dual(_) => err(offset, "expected an algebra expression, found dual letters"),
        }
    }

    pub fn into_dual(self, offset: usize) -> Result<FunctionalElement, ParseError> {
        match self {
            Value::Scalar(c) => Ok(FunctionalElement::one().scale(&c)),
            Value::Dual(f) => Ok(f),
            Value::Algebra(_) => {
                err(offset, "expected a dual expression, found algebra letters")
            }
        }
    }

    pub fn into_scalar(self, offset: usize) -> Result<Scalar, ParseError> {
        match self {
            Value::Scalar(c) => Ok(c),
            _ => err(offset, "expected a scalar expression"),
        }
    }

    fn add(self, other: Value, offset: usize) -> Result<Value, ParseError> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a + b)),
            (Value::Algebra(mut a), Value::Algebra(b)) => {
                a.extend(b);
                Ok(Value::Algebra(a))
            }
            (Value::Dual(a), Value::Dual(b)) => Ok(Value::Dual(a.add(&b))),
            (Value::Scalar(c), Value::Algebra(mut ws)) | (Value::Algebra(mut ws), Value::Scalar(c)) => {
                ws.push((c, Vec::new()));
                Ok(Value::Algebra(ws))
            }
            (Value::Scalar(c), Value::Dual(f)) | (Value::Dual(f), Value::Scalar(c)) => {
                Ok(Value::Dual(f.add(&FunctionalElement::one().scale(&c))))
            }
            _ => err(offset, "cannot mix algebra and dual atoms in one expression"),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(c) => Value::Scalar(-c),
            Value::Algebra(ws) => {
                Value::Algebra(ws.into_iter().map(|(c, w)| (-c, w)).collect())
            }
            Value::Dual(f) => Value::Dual(f.scale(&-Scalar::one())),
        }
    }

    fn mul(self, other: Value, offset: usize) -> Result<Value, ParseError> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a * b)),
            (Value::Scalar(c), Value::Algebra(ws)) | (Value::Algebra(ws), Value::Scalar(c)) => Ok(
                Value::Algebra(ws.into_iter().map(|(q, w)| (&q * &c, w)).collect()),
            ),
            (Value::Scalar(c), Value::Dual(f)) | (Value::Dual(f), Value::Scalar(c)) => {
                Ok(Value::Dual(f.scale(&c)))
            }
            (Value::Algebra(a), Value::Algebra(b)) => {
                let mut out = Vec::new();
                for (ca, wa) in &a {
                    for (cb, wb) in &b {
                        let mut w = wa.clone();
                        w.extend_from_slice(wb);
                        out.push((ca * cb, w));
                    }
                }
                Ok(Value::Algebra(out))
            }
            (Value::Dual(a), Value::Dual(b)) => Ok(Value::Dual(a.mul(&b))),
            _ => err(offset, "cannot mix algebra and dual atoms in one expression"),
        }
    }

    fn pow(self, num: i64, den: i64, offset: usize) -> Result<Value, ParseError> {
        if den == 2 {
            // half powers only for the scalar symbols r and s
            if let Value::Scalar(c) = &self {
                if *c == Scalar::rpow(1) {
                    return Ok(Value::Scalar(Scalar::rpow_half(num as i32)));
                }
                if *c == Scalar::spow(1) {
                    return Ok(Value::Scalar(Scalar::spow_half(num as i32)));
                }
            }
            return err(offset, "half-integer exponents are only defined for r and s");
        }
        if den != 1 {
            return err(offset, "exponent denominator must be 1 or 2");
        }
        match self {
            Value::Scalar(c) => c
                .pow(num as i32)
                .map(Value::Scalar)
                .map_err(|e| ParseError {
                    offset,
                    message: e.to_string(),
                }),
            Value::Algebra(ws) => {
                if num >= 0 {
                    let mut acc = Value::Algebra(vec![(Scalar::one(), Vec::new())]);
                    for _ in 0..num {
                        acc = acc.mul(Value::Algebra(ws.clone()), offset)?;
                    }
                    Ok(acc)
                } else if ws.len() == 1 && ws[0].1.len() == 1 && ws[0].0.is_monomial() {
                    let inv = match ws[0].1[0] {
                        Letter::F => Letter::FInv,
                        Letter::FInv => Letter::F,
                        Letter::Det => Letter::DetInv,
                        Letter::DetInv => Letter::Det,
                        l => {
                            return err(offset, format!("{} is not invertible", l.symbol()))
                        }
                    };
                    let coeff = ws[0].0.inverse().unwrap().pow(1).unwrap();
                    let mut out = Value::Algebra(vec![(coeff, vec![inv])]);
                    for _ in 1..(-num) {
                        out = out.mul(
                            Value::Algebra(vec![(
                                ws[0].0.inverse().unwrap(),
                                vec![inv],
                            )]),
                            offset,
                        )?;
                    }
                    Ok(out)
                } else {
                    err(offset, "negative powers are only defined for f and Det")
                }
            }
            Value::Dual(f) => {
                if num >= 0 {
                    let mut acc = FunctionalElement::one();
                    for _ in 0..num {
                        acc = acc.mul(&f);
                    }
                    Ok(Value::Dual(acc))
                } else {
                    // negative powers only for a single grouplike letter
                    let mut terms = f.terms();
                    match (terms.next(), terms.next()) {
                        (Some((word, c)), None) if word.len() == 1 => {
                            if let DualLetter::Grouplike(u, v, w) = &word[0] {
                                let inv = FunctionalElement::word(
                                    &[DualLetter::Grouplike(
                                        u.inverse().unwrap(),
                                        v.inverse().unwrap(),
                                        w.inverse().unwrap(),
                                    )],
                                    c.inverse().map_err(|e| ParseError {
                                        offset,
                                        message: e.to_string(),
                                    })?,
                                );
                                let mut acc = FunctionalElement::one();
                                for _ in 0..(-num) {
                                    acc = acc.mul(&inv);
                                }
                                return Ok(Value::Dual(acc));
                            }
                            err(offset, "negative powers are only defined for grouplikes")
                        }
                        _ => err(offset, "negative powers are only defined for grouplikes"),
                    }
                }
            }
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token, what: &str) -> Result<(), ParseError> {
        let off = self.offset();
        match self.next() {
            Some(got) if got == t => Ok(()),
            _ => err(off, format!("expected {what}")),
        }
    }

    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut neg = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            neg = true;
        }
        let mut acc = self.parse_term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    let off = self.offset();
                    self.next();
                    let t = self.parse_term()?;
                    acc = acc.add(t, off)?;
                }
                Some(Token::Minus) => {
                    let off = self.offset();
                    self.next();
                    let t = self.parse_term()?;
                    acc = acc.add(t.neg(), off)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            let off = self.offset();
            self.next();
            let f = self.parse_factor()?;
            acc = acc.mul(f, off)?;
        }
        Ok(acc)
    }

    fn parse_exponent(&mut self) -> Result<(i64, i64), ParseError> {
        let off = self.offset();
        match self.next() {
            Some(Token::Int(n)) => Ok((to_i64(&n, off)?, 1)),
            Some(Token::Minus) => match self.next() {
                Some(Token::Int(n)) => Ok((-to_i64(&n, off)?, 1)),
                _ => err(off, "expected integer exponent"),
            },
            Some(Token::LParen) => {
                let mut sign = 1i64;
                if self.peek() == Some(&Token::Minus) {
                    self.next();
                    sign = -1;
                }
                let o2 = self.offset();
                let num = match self.next() {
                    Some(Token::Int(n)) => to_i64(&n, o2)?,
                    _ => return err(o2, "expected integer"),
                };
                self.expect(Token::Slash, "'/' in exponent")?;
                let o3 = self.offset();
                let den = match self.next() {
                    Some(Token::Int(n)) => to_i64(&n, o3)?,
                    _ => return err(o3, "expected integer denominator"),
                };
                self.expect(Token::RParen, "')'")?;
                Ok((sign * num, den))
            }
            _ => err(off, "expected exponent"),
        }
    }

    fn parse_factor(&mut self) -> Result<Value, ParseError> {
        let off = self.offset();
        let base = match self.next() {
            Some(Token::Int(n)) => {
                // rational literal n or n/m
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    let o2 = self.offset();
                    match self.next() {
                        Some(Token::Int(d)) => Value::Scalar(Scalar::monomial(
                            BigRational::new(n, d),
                            0,
                            0,
                        )),
                        _ => return err(o2, "expected denominator"),
                    }
                } else {
                    Value::Scalar(Scalar::monomial(BigRational::from_integer(n), 0, 0))
                }
            }
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen, "')'")?;
                inner
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "r" => Value::Scalar(Scalar::rpow(1)),
                "s" => Value::Scalar(Scalar::spow(1)),
                "a" => Value::Algebra(vec![(Scalar::one(), vec![Letter::A])]),
                "b" => Value::Algebra(vec![(Scalar::one(), vec![Letter::B])]),
                "c" => Value::Algebra(vec![(Scalar::one(), vec![Letter::C])]),
                "d" => Value::Algebra(vec![(Scalar::one(), vec![Letter::D])]),
                "f" => Value::Algebra(vec![(Scalar::one(), vec![Letter::F])]),
                "Det" => Value::Algebra(vec![(Scalar::one(), vec![Letter::Det])]),
                "A" => Value::Dual(FunctionalElement::letter(DualLetter::A)),
                "B" => Value::Dual(FunctionalElement::letter(DualLetter::B)),
                "C" => Value::Dual(FunctionalElement::letter(DualLetter::C)),
                "Dt" => Value::Dual(FunctionalElement::letter(DualLetter::Dt)),
                "F" => Value::Dual(FunctionalElement::letter(DualLetter::F)),
                "G" => {
                    self.expect(Token::LBracket, "'[' after G")?;
                    let u = self.parse_expr()?.into_scalar(off)?;
                    self.expect(Token::Semi, "';'")?;
                    let v = self.parse_expr()?.into_scalar(off)?;
                    self.expect(Token::Semi, "';'")?;
                    let w = self.parse_expr()?.into_scalar(off)?;
                    self.expect(Token::RBracket, "']'")?;
                    let g = DualLetter::grouplike(u, v, w).map_err(|m| ParseError {
                        offset: off,
                        message: m,
                    })?;
                    Value::Dual(FunctionalElement::letter(g))
                }
                other => return err(off, format!("unknown symbol '{other}'")),
            },
            _ => return err(off, "expected a factor"),
        };
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let (num, den) = self.parse_exponent()?;
            base.pow(num, den, off)
        } else {
            Ok(base)
        }
    }
}

fn to_i64(n: &BigInt, offset: usize) -> Result<i64, ParseError> {
    use num::ToPrimitive;
    n.to_i64()
        .ok_or_else(|| ParseError {
            offset,
            message: "exponent too large".to_string(),
        })
}

/// Parse an expression into a scalar, algebra, or dual value.
pub fn parse(input: &str) -> Result<Value, ParseError> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return err(0, "empty expression");
    }
    let mut p = Parser { tokens, pos: 0 };
    let v = p.parse_expr()?;
    if p.pos != p.tokens.len() {
        return err(p.offset(), "trailing input");
    }
    Ok(v)
}

pub fn parse_algebra(input: &str) -> Result<AlgebraElement, ParseError> {
    parse(input)?.into_algebra(0)
}

pub fn parse_dual(input: &str) -> Result<FunctionalElement, ParseError> {
    parse(input)?.into_dual(0)
}

pub fn parse_scalar(input: &str) -> Result<Scalar, ParseError> {
    parse(input)?.into_scalar(0)
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Dual(d) => write!(f, "{d}"),
            Value::Algebra(ws) => write!(f, "{} words", ws.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{multiply, Monomial};
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn basic_words() {
        // "d*a" normalizes to Det + r b c
        let el = parse_algebra("d*a").unwrap();
        let mut want = AlgebraElement::from_monomial(Monomial::new(0, 0, 0, 0, 0, 1), Scalar::one());
        want.add_term(Monomial::new(0, 0, 0, 1, 1, 0), Scalar::rpow(1));
        assert_eq!(el, want);
        // printed form round-trips
        assert_eq!(el.to_string(), "Det + r * b*c");
        assert_eq!(parse_algebra(&el.to_string()).unwrap(), el);
    }

    #[test]
    fn dual_words_and_grouplikes() {
        let f = parse_dual("B*C").unwrap();
        let b = FunctionalElement::letter(DualLetter::B);
        let c = FunctionalElement::letter(DualLetter::C);
        assert_eq!(f, b.mul(&c));
        let g = parse_dual("G[r^2;r^-2;1]").unwrap();
        assert_eq!(
            g,
            FunctionalElement::letter(
                DualLetter::grouplike(Scalar::rpow(2), Scalar::rpow(-2), Scalar::one()).unwrap()
            )
        );
        // half powers
        let h = parse_scalar("r^(1/2)*s^(-3/2)").unwrap();
        assert_eq!(h, Scalar::rpow_half(1) * Scalar::spow_half(-3));
    }

    #[test]
    fn det_inverse_letter() {
        let el = parse_algebra("a^2*Det^-1").unwrap();
        assert_eq!(
            el,
            AlgebraElement::from_monomial(Monomial::new(2, 0, 0, 0, 0, -1), Scalar::one())
        );
    }

    #[test]
    fn mixing_is_rejected_with_offset() {
        let e = parse("a*B").unwrap_err();
        assert!(e.message.contains("mix"), "{e}");
        let e = parse("a + (").unwrap_err();
        assert!(e.offset >= 4, "{e}");
        assert!(parse("q").is_err());
        assert!(parse("b^-1").is_err());
    }

    #[test]
    fn roundtrip_random_elements() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let letters = [
            Letter::A,
            Letter::B,
            Letter::C,
            Letter::D,
            Letter::F,
            Letter::FInv,
            Letter::Det,
            Letter::DetInv,
        ];
        for _ in 0..60 {
            let mut el = AlgebraElement::zero();
            for _ in 0..rng.gen_range(1..4) {
                let mut acc = AlgebraElement::unit().scale(&Scalar::monomial(
                    BigRational::new(rng.gen_range(-6i64..7).into(), rng.gen_range(1i64..4).into()),
                    rng.gen_range(-2i32..3) * 2,
                    rng.gen_range(-2i32..3) * 2,
                ));
                for _ in 0..rng.gen_range(0..5) {
                    acc = multiply(&acc, &AlgebraElement::generator(letters[rng.gen_range(0..8)]));
                }
                el = el.add(&acc);
            }
            let printed = el.to_string();
            assert_eq!(parse_algebra(&printed).unwrap(), el, "roundtrip of {printed}");
        }
    }

    #[test]
    fn roundtrip_random_functionals() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let base = [
            DualLetter::A,
            DualLetter::B,
            DualLetter::C,
            DualLetter::Dt,
            DualLetter::F,
        ];
        for _ in 0..60 {
            let mut f = FunctionalElement::zero();
            for _ in 0..rng.gen_range(1..4) {
                let mut word = Vec::new();
                for _ in 0..rng.gen_range(0..4) {
                    if rng.gen_bool(0.25) {
                        word.push(
                            DualLetter::grouplike(
                                Scalar::rpow(rng.gen_range(-2..3)),
                                Scalar::rpow(rng.gen_range(-2..3)),
                                Scalar::spow(rng.gen_range(-2..3)),
                            )
                            .unwrap(),
                        );
                    } else {
                        word.push(base[rng.gen_range(0..5)].clone());
                    }
                }
                f.add_word(
                    &word,
                    Scalar::monomial(
                        BigRational::from_integer(rng.gen_range(-5i64..6).into()),
                        rng.gen_range(-2i32..3) * 2,
                        0,
                    ),
                );
            }
            if f.is_zero() {
                continue;
            }
            let printed = f.to_string();
            assert_eq!(parse_dual(&printed).unwrap(), f, "roundtrip of {printed}");
        }
    }
}
