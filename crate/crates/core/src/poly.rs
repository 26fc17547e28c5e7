//! Dense univariate polynomials over GF(4).
//!
//! Text format (used on the command line, in JSON and in tables):
//!
//! ```text
//! polynomial := term ('+' term)*
//! term       := coeff | coeff '*' mono | mono
//! mono       := 'x' | 'x^' uint
//! coeff      := '0' | '1' | 'w' | 'w^2'
//! ```
//!
//! Whitespace is ignored and `X` is accepted for `x`. Printing emits terms in
//! descending degree, e.g. `x^5+w*x^4+x^3+x^2+w^2*x+1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::F4;
use crate::error::{Error, Result};

/// Polynomial over GF(4), coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PolyF4 {
    coeffs: Vec<F4>,
}

impl PolyF4 {
    pub fn zero() -> PolyF4 {
        PolyF4 { coeffs: Vec::new() }
    }

    pub fn one() -> PolyF4 {
        PolyF4::constant(F4::ONE)
    }

    pub fn x() -> PolyF4 {
        PolyF4::monomial(F4::ONE, 1)
    }

    pub fn constant(c: F4) -> PolyF4 {
        PolyF4::from_coeffs(vec![c])
    }

    pub fn monomial(c: F4, degree: usize) -> PolyF4 {
        let mut coeffs = vec![F4::ZERO; degree + 1];
        coeffs[degree] = c;
        PolyF4::from_coeffs(coeffs)
    }

    /// x + c
    pub fn linear(c: F4) -> PolyF4 {
        PolyF4::from_coeffs(vec![c, F4::ONE])
    }

    /// x^n - 1 (= x^n + 1 in characteristic 2).
    pub fn xn_minus_1(n: usize) -> PolyF4 {
        let mut p = PolyF4::monomial(F4::ONE, n);
        p.coeffs[0] += F4::ONE;
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<F4>) -> PolyF4 {
        let mut p = PolyF4 { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F4 {
        self.coeffs.get(i).copied().unwrap_or(F4::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for divisors of x^n - 1.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [F4::ONE]
    }

    pub fn leading(&self) -> F4 {
        self.coeffs.last().copied().unwrap_or(F4::ZERO)
    }

    pub fn constant_term(&self) -> F4 {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == F4::ONE
    }

    pub fn scale(&self, c: F4) -> PolyF4 {
        PolyF4::from_coeffs(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Leading coefficient normalized to 1; zero stays zero.
    pub fn monic(&self) -> PolyF4 {
        match self.leading().inv() {
            Ok(inv) => self.scale(inv),
            Err(_) => PolyF4::zero(),
        }
    }

    pub fn eval(&self, x: F4) -> F4 {
        self.coeffs.iter().rev().fold(F4::ZERO, |acc, &c| acc * x + c)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> PolyF4 {
        if self.is_zero() {
            return PolyF4::zero();
        }
        let mut coeffs = vec![F4::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        PolyF4 { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> PolyF4 {
        let mut base = self.clone();
        let mut acc = PolyF4::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn divmod(&self, divisor: &PolyF4) -> Result<(PolyF4, PolyF4)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((PolyF4::zero(), self.clone()));
        }
        let mut quot = vec![F4::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let q = c * lead_inv;
            quot[i - dd] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] += q * dc;
            }
        }
        rem.truncate(dd);
        Ok((PolyF4::from_coeffs(quot), PolyF4::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &PolyF4) -> Result<PolyF4> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &PolyF4) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Exact quotient, failing with [`Error::NotDivisor`] if a remainder is left.
    pub fn exact_div(&self, divisor: &PolyF4) -> Result<PolyF4> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistent(format!("{divisor} does not divide {self}")))
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyF4) -> Result<PolyF4> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// p(0)^{-1} * x^deg(p) * p(1/x).
    pub fn reciprocal(&self) -> Result<PolyF4> {
        let c0 = self.constant_term().inv().map_err(|_| Error::ZeroConstantTerm)?;
        let coeffs = self.coeffs.iter().rev().map(|&c| c * c0).collect();
        Ok(PolyF4::from_coeffs(coeffs))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().is_ok_and(|r| &r == self)
    }

    /// Coefficient-wise Frobenius twist.
    pub fn frobenius(&self) -> PolyF4 {
        PolyF4::from_coeffs(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Compares coefficient sequences from the constant term up, with
    /// 0 < 1 < w < w^2; a proper prefix sorts first.
    pub fn cmp_lex(&self, other: &PolyF4) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }

    /// Coefficient vector of length `n` (for reduced residues mod x^n - 1).
    pub fn to_vec(&self, n: usize) -> Vec<F4> {
        let mut v = vec![F4::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i % n] += c;
        }
        v
    }
}

impl Add for &PolyF4 {
    type Output = PolyF4;
    fn add(self, rhs: &PolyF4) -> PolyF4 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyF4::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for PolyF4 {
    type Output = PolyF4;
    fn add(self, rhs: PolyF4) -> PolyF4 {
        &self + &rhs
    }
}

impl Mul for &PolyF4 {
    type Output = PolyF4;
    fn mul(self, rhs: &PolyF4) -> PolyF4 {
        if self.is_zero() || rhs.is_zero() {
            return PolyF4::zero();
        }
        let mut out = vec![F4::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyF4::from_coeffs(out)
    }
}

impl Mul for PolyF4 {
    type Output = PolyF4;
    fn mul(self, rhs: PolyF4) -> PolyF4 {
        &self * &rhs
    }
}

impl<'a> std::iter::Product<&'a PolyF4> for PolyF4 {
    fn product<I: Iterator<Item = &'a PolyF4>>(iter: I) -> PolyF4 {
        iter.fold(PolyF4::one(), |acc, p| &acc * p)
    }
}

impl std::iter::Product for PolyF4 {
    fn product<I: Iterator<Item = PolyF4>>(iter: I) -> PolyF4 {
        iter.fold(PolyF4::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for PolyF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (d, c == F4::ONE) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{c}*x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyF4({self})")
    }
}

impl From<PolyF4> for String {
    fn from(p: PolyF4) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PolyF4 {
    type Error = Error;
    fn try_from(s: String) -> Result<PolyF4> {
        s.parse()
    }
}

impl FromStr for PolyF4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<PolyF4> {
        Parser::new(s).polynomial()
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Parser {
        Parser {
            chars: s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            at: 0,
            end: s.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(self.pos(), msg))
    }

    fn polynomial(&mut self) -> Result<PolyF4> {
        let mut coeffs: Vec<F4> = Vec::new();
        loop {
            let (c, d) = self.term()?;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, F4::ZERO);
            }
            coeffs[d] += c;
            if self.peek().is_none() {
                break;
            }
            if !self.eat('+') {
                return self.error("expected '+'");
            }
        }
        Ok(PolyF4::from_coeffs(coeffs))
    }

    fn term(&mut self) -> Result<(F4, usize)> {
        match self.peek() {
            Some('x' | 'X') => Ok((F4::ONE, self.mono()?)),
            Some(_) => {
                let c = self.coeff()?;
                if self.eat('*') {
                    Ok((c, self.mono()?))
                } else {
                    Ok((c, 0))
                }
            }
            None => self.error("expected a term"),
        }
    }

    fn coeff(&mut self) -> Result<F4> {
        match self.peek() {
            Some('0') => {
                self.at += 1;
                Ok(F4::ZERO)
            }
            Some('1') => {
                self.at += 1;
                Ok(F4::ONE)
            }
            Some('w' | 'W') => {
                self.at += 1;
                if self.eat('^') {
                    if self.eat('2') {
                        Ok(F4::W2)
                    } else {
                        self.error("only w^2 is a valid power of w")
                    }
                } else {
                    Ok(F4::W)
                }
            }
            _ => self.error("expected a coefficient 0, 1, w or w^2"),
        }
    }

    fn mono(&mut self) -> Result<usize> {
        if !(self.eat('x') || self.eat('X')) {
            return self.error("expected 'x'");
        }
        if !self.eat('^') {
            return Ok(1);
        }
        let start = self.at;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| Error::parse(self.pos(), "exponent too large"))?;
            self.at += 1;
        }
        if self.at == start {
            return self.error("expected an exponent");
        }
        if value > 1 << 16 {
            return Err(Error::parse(self.chars[start].0, "exponent too large"));
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PolyF4 {
        s.parse().unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p("x+w") * &p("x+w^2"), p("x^2+x+1"));
        let prod: PolyF4 = [p("x^2+w*x+1"), p("x^2+w^2*x+1"), p("x+1")].into_iter().product();
        assert_eq!(prod, PolyF4::xn_minus_1(5));
        // cross-check the first product at all four field points
        let lhs = &p("x+w") * &p("x+w^2");
        for x in F4::ALL {
            assert_eq!(lhs.eval(x), (x + F4::W) * (x + F4::W2));
        }
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p("x^3+1").divmod(&p("x+1")).unwrap();
        assert_eq!(q, p("x^2+x+1"));
        assert!(r.is_zero());
        assert_eq!(p("x").divmod(&PolyF4::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x+w").gcd(&p("x+w^2")).unwrap(), PolyF4::one());
        assert_eq!(PolyF4::xn_minus_1(5).gcd(&p("x^2+w*x+1")).unwrap(), p("x^2+w*x+1"));
        assert_eq!(p("w*x+1").gcd(&PolyF4::zero()).unwrap(), p("x+w^2"));
        assert_eq!(PolyF4::zero().gcd(&PolyF4::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x+w").reciprocal().unwrap(), p("x+w^2"));
        assert_eq!(p("x^2+w*x+1").reciprocal().unwrap(), p("x^2+w*x+1"));
        assert_eq!(p("x+1").reciprocal().unwrap(), p("x+1"));
        assert_eq!(p("x^3+x").reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(p("x+w").frobenius(), p("x+w^2"));
        assert_eq!(p("x^3+x+1").frobenius(), p("x^3+x+1"));
        assert_eq!(p("x^2+w*x+w^2").frobenius(), p("x^2+w^2*x+w"));
    }

    #[test]
    fn parse_and_print() {
        let q = p("x^5+w*x^4+x^3+x^2+w^2*x+1");
        assert_eq!(q.degree(), Some(5));
        assert_eq!(q.coeffs(), &[F4::ONE, F4::W2, F4::ONE, F4::ONE, F4::W, F4::ONE]);
        assert_eq!(q.to_string(), "x^5+w*x^4+x^3+x^2+w^2*x+1");
        assert_eq!(p("x+1").to_string(), "x+1");
        assert_eq!(p("1"), PolyF4::one());
        assert_eq!(p(" X^2 + W * X + 1 "), p("x^2+w*x+1"));
        // repeated monomials add
        assert_eq!(p("x^5+x^5+x"), p("x"));
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_position() {
        for (text, pos) in [("x^", 2), ("x+", 2), ("x+y", 2), ("w^3*x", 2), ("1*", 2), ("x x", 2)] {
            match text.parse::<PolyF4>() {
                Err(Error::Parse { pos: got, .. }) => assert_eq!(got, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!("".parse::<PolyF4>().is_err());
    }

    fn arb_f4() -> impl Strategy<Value = F4> {
        (0u8..4).prop_map(F4::from_bits)
    }

    fn arb_poly() -> impl Strategy<Value = PolyF4> {
        prop::collection::vec(arb_f4(), 0..12).prop_map(PolyF4::from_coeffs)
    }

    fn arb_unit_constant_monic() -> impl Strategy<Value = PolyF4> {
        (prop::collection::vec(arb_f4(), 0..8), 1u8..4).prop_map(|(mut c, c0)| {
            c.insert(0, F4::from_bits(c0));
            c.push(F4::ONE);
            PolyF4::from_coeffs(c)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &a).is_zero());
        }

        #[test]
        fn divmod_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&b * &q) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()) && !c.is_zero());
            let ac = &a * &c;
            let bc = &b * &c;
            let g = ac.gcd(&bc).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&ac) && g.divides(&bc));
            prop_assert!(c.monic().divides(&g));
        }

        #[test]
        fn reciprocal_laws(a in arb_unit_constant_monic(), b in arb_unit_constant_monic()) {
            let ra = a.reciprocal().unwrap();
            prop_assert!(ra.is_monic());
            prop_assert_eq!(ra.reciprocal().unwrap(), a.clone());
            prop_assert_eq!((&a * &b).reciprocal().unwrap(), &ra * &b.reciprocal().unwrap());
            prop_assert_eq!(a.frobenius().reciprocal().unwrap(), ra.frobenius());
        }

        #[test]
        fn frobenius_is_multiplicative_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).frobenius(), &a.frobenius() * &b.frobenius());
            prop_assert_eq!(a.frobenius().frobenius(), a);
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<PolyF4>().unwrap(), a);
        }
    }
}
