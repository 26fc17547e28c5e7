//! Arithmetic in GF(4) and in the matrix ring A = M2(F2).
//!
//! GF(4) is F2[w] with w^2 = w + 1. An element c0 + c1*w is stored in two
//! bits, c0 in bit 0 and c1 in bit 1, so addition is XOR.
//!
//! A is written A = F4 + i*F4 where i^2 = 1 and i*w = w^2*i. The canonical
//! form of an element is the pair (a, b) meaning a + i*b. Moving a scalar
//! across i conjugates it (x*i = i*conj(x)), which gives the product
//!
//! ```text
//! (a + i b)(c + i d) = (a c + conj(b) d) + i (conj(a) d + b c)
//! ```
//!
//! The element u = 1 + i is nilpotent and A = F4 + u*F4 as an additive group;
//! [`AElem::to_u_coords`] exposes that view. [`MatF2`] is the concrete 2x2
//! matrix model with i = [[0,1],[1,0]] and w = [[0,1],[1,1]].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of GF(4) = {0, 1, w, w^2}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct F4(u8);

const MUL_TABLE: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const W: F4 = F4(2);
    pub const W2: F4 = F4(3);

    /// All four elements in encoding order 0, 1, w, w^2.
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::W2];

    /// Builds an element from its 2-bit code; higher bits are ignored.
    #[inline]
    pub const fn from_bits(bits: u8) -> F4 {
        F4(bits & 3)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Result<F4> {
        match self.0 {
            0 => Err(Error::ZeroInverse),
            1 => Ok(F4::ONE),
            2 => Ok(F4::W2),
            _ => Ok(F4::W),
        }
    }

    pub fn pow(self, mut e: u64) -> F4 {
        let mut base = self;
        let mut acc = F4::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Frobenius conjugation x -> x^2; swaps w and w^2 and fixes F2.
    #[inline]
    pub const fn conj(self) -> F4 {
        // c0 + c1 w  ->  (c0 + c1) + c1 w
        let c0 = self.0 & 1;
        let c1 = self.0 >> 1;
        F4((c0 ^ c1) | (c1 << 1))
    }
}

// characteristic 2: addition is XOR
impl Add for F4 {
    type Output = F4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl AddAssign for F4 {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F4 {
    type Output = F4;
    #[inline]
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for F4 {
    #[inline]
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w^2",
        })
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for F4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<F4> {
        match s.trim() {
            "0" => Ok(F4::ZERO),
            "1" => Ok(F4::ONE),
            "w" | "W" => Ok(F4::W),
            "w^2" | "W^2" => Ok(F4::W2),
            other => Err(Error::parse(0, format!("not a GF(4) element: {other:?}"))),
        }
    }
}

impl From<F4> for String {
    fn from(x: F4) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for F4 {
    type Error = Error;
    fn try_from(s: String) -> Result<F4> {
        s.parse()
    }
}

/// 2x2 matrix over F2, row-major in the low four bits:
/// bit 0 = m00, bit 1 = m01, bit 2 = m10, bit 3 = m11.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct MatF2(u8);

impl MatF2 {
    pub const ZERO: MatF2 = MatF2(0);
    pub const IDENTITY: MatF2 = MatF2(0b1001);
    /// [[0,1],[1,0]]
    pub const I: MatF2 = MatF2(0b0110);
    /// [[0,1],[1,1]]
    pub const W: MatF2 = MatF2(0b1110);

    pub const fn from_bits(bits: u8) -> MatF2 {
        MatF2(bits & 0xf)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn from_rows(rows: [[u8; 2]; 2]) -> MatF2 {
        MatF2((rows[0][0] & 1) | ((rows[0][1] & 1) << 1) | ((rows[1][0] & 1) << 2) | ((rows[1][1] & 1) << 3))
    }

    #[inline]
    pub fn entry(self, r: usize, c: usize) -> u8 {
        (self.0 >> (2 * r + c)) & 1
    }

    pub fn det(self) -> u8 {
        (self.entry(0, 0) & self.entry(1, 1)) ^ (self.entry(0, 1) & self.entry(1, 0))
    }

    pub fn all() -> impl Iterator<Item = MatF2> {
        (0u8..16).map(MatF2)
    }
}

impl Add for MatF2 {
    type Output = MatF2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: MatF2) -> MatF2 {
        MatF2(self.0 ^ rhs.0)
    }
}

impl Mul for MatF2 {
    type Output = MatF2;
    fn mul(self, rhs: MatF2) -> MatF2 {
        let mut rows = [[0u8; 2]; 2];
        for (r, row) in rows.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = (self.entry(r, 0) & rhs.entry(0, c)) ^ (self.entry(r, 1) & rhs.entry(1, c));
            }
        }
        MatF2::from_rows(rows)
    }
}

/// Element a + i*b of A = M2(F2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AElem {
    pub a: F4,
    pub b: F4,
}

impl AElem {
    pub const ZERO: AElem = AElem::new(F4::ZERO, F4::ZERO);
    pub const ONE: AElem = AElem::new(F4::ONE, F4::ZERO);
    pub const W: AElem = AElem::new(F4::W, F4::ZERO);
    pub const I: AElem = AElem::new(F4::ZERO, F4::ONE);
    /// u = 1 + i
    pub const U: AElem = AElem::new(F4::ONE, F4::ONE);

    pub const fn new(a: F4, b: F4) -> AElem {
        AElem { a, b }
    }

    /// The element c embedded through F4 -> A.
    pub const fn scalar(c: F4) -> AElem {
        AElem::new(c, F4::ZERO)
    }

    /// All 16 elements, ordered by (a, b) codes.
    pub fn all() -> impl Iterator<Item = AElem> {
        F4::ALL
            .into_iter()
            .flat_map(|a| F4::ALL.into_iter().map(move |b| AElem::new(a, b)))
    }

    /// 4-bit code: a in bits 0..2, b in bits 2..4.
    pub const fn bits(self) -> u8 {
        self.a.bits() | (self.b.bits() << 2)
    }

    pub const fn from_bits(bits: u8) -> AElem {
        AElem::new(F4::from_bits(bits), F4::from_bits(bits >> 2))
    }

    pub const fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Conjugation a + i b -> conj(a) + i b.
    pub const fn conj(self) -> AElem {
        AElem::new(self.a.conj(), self.b)
    }

    /// 0 for zero, 1 for invertible, 2 for singular nonzero elements.
    ///
    /// This equals the number of nonzero components of (a, b); the matrix
    /// characterisation is checked against it in the tests.
    pub const fn bachoc_weight(self) -> u32 {
        (!self.a.is_zero()) as u32 + (!self.b.is_zero()) as u32
    }

    /// Coordinates (a', b') with self = a' + u*b'.
    pub fn to_u_coords(self) -> (F4, F4) {
        (self.a + self.b, self.b)
    }

    pub fn from_u_coords(a: F4, b: F4) -> AElem {
        AElem::new(a + b, b)
    }

    pub fn to_matrix(self) -> MatF2 {
        f4_matrix(self.a) + MatF2::I * f4_matrix(self.b)
    }

    pub fn from_matrix(m: MatF2) -> AElem {
        AElem::all()
            .find(|x| x.to_matrix() == m)
            .expect("the matrix embedding is a bijection")
    }

    pub fn is_invertible(self) -> bool {
        self.to_matrix().det() == 1
    }
}

fn f4_matrix(c: F4) -> MatF2 {
    let mut m = MatF2::ZERO;
    if c.bits() & 1 != 0 {
        m = m + MatF2::IDENTITY;
    }
    if c.bits() & 2 != 0 {
        m = m + MatF2::W;
    }
    m
}

impl Add for AElem {
    type Output = AElem;
    #[inline]
    fn add(self, rhs: AElem) -> AElem {
        AElem::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for AElem {
    #[inline]
    fn add_assign(&mut self, rhs: AElem) {
        *self = *self + rhs;
    }
}

impl Mul for AElem {
    type Output = AElem;
    #[inline]
    fn mul(self, rhs: AElem) -> AElem {
        AElem::new(
            self.a * rhs.a + self.b.conj() * rhs.b,
            self.a.conj() * rhs.b + self.b * rhs.a,
        )
    }
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+i*{}", self.a, self.b)
    }
}

impl fmt::Debug for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts sums of terms `c`, `i`, `u`, `i*c`, `u*c` with c in GF(4), so both
/// `a+i*b` and `a+u*b` parse.
impl FromStr for AElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<AElem> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(0, "empty ring element"));
        }
        let mut acc = AElem::ZERO;
        let mut pos = 0;
        for term in compact.split('+') {
            let (unit, coeff) = match term.split_once('*') {
                Some((u, c)) if u == "i" || u == "u" => (Some(u), c),
                _ if term == "i" || term == "u" => (Some(term), "1"),
                _ => (None, term),
            };
            let c: F4 = coeff
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad term {term:?}")))?;
            acc += match unit {
                None => AElem::scalar(c),
                Some("i") => AElem::new(F4::ZERO, c),
                _ => AElem::from_u_coords(F4::ZERO, c),
            };
            pos += term.len() + 1;
        }
        Ok(acc)
    }
}
