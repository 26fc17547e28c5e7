//! The Bachoc map A^n -> F4^(2n), a + i*b -> (a, b), and the trivariate
//! Bachoc weight enumerator.
//!
//! The map is an isometry from Bachoc weight to Hamming weight. On a code C
//! of the triple (f, g, h) its image is {(r + t, t)}, which is the Plotkin
//! sum {(t, t + r)} of the torsion and residue codes with the two halves
//! exchanged, and is equivalent to the cyclic code of length 2n generated
//! by f^2 * h.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::acode::{ACyclicCode, AVector};
use crate::algebra::F4;
use crate::error::{Error, Result};
use crate::gf2::F2Space;
use crate::qcode::{plotkin_sum, Engine, LinearCodeQ, QCyclicCode, WeightEnumerator};

/// Componentwise (a_1..a_n, b_1..b_n).
pub fn bachoc_map(v: &AVector) -> Vec<F4> {
    let (a, b) = v.i_parts();
    a.into_iter().chain(b).collect()
}

/// phi(C), built from the images of an F2 basis of C. The basis is closed
/// under GF(4) scaling, so the GF(4) span is the F2 span.
pub fn bachoc_image(code: &ACyclicCode) -> LinearCodeQ {
    let n = code.length();
    LinearCodeQ::new(2 * n, code.f2_basis().iter().map(bachoc_map).collect()).expect("rows of length 2n")
}

/// The Plotkin sum of torsion and residue with its halves exchanged.
pub fn plotkin_image(code: &ACyclicCode) -> Result<LinearCodeQ> {
    plotkin_sum(&code.torsion().to_linear(), &code.residue().to_linear())?.swap_halves()
}

/// Cyclic code of length 2n generated by f^2 * h.
pub fn doubled_cyclic_image(code: &ACyclicCode) -> QCyclicCode {
    let gen = &(code.f() * code.f()) * code.h();
    QCyclicCode::new(2 * code.length(), &gen).expect("f^2 h divides (x^n - 1)^2")
}

/// Counts of codewords by (n1, n2): the numbers of coordinates of Bachoc
/// weight 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BachocEnumerator {
    n: usize,
    counts: BTreeMap<(usize, usize), BigUint>,
}

impl BachocEnumerator {
    pub fn new(n: usize, counts: BTreeMap<(usize, usize), BigUint>) -> Result<BachocEnumerator> {
        if let Some(&(a, b)) = counts.keys().find(|&&(a, b)| a + b > n) {
            return Err(Error::Inconsistent(format!("key ({a},{b}) exceeds length {n}")));
        }
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(BachocEnumerator { n, counts })
    }

    pub fn zero_code(n: usize) -> BachocEnumerator {
        BachocEnumerator {
            n,
            counts: BTreeMap::from([((0, 0), BigUint::one())]),
        }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.counts
    }

    pub fn count(&self, n1: usize, n2: usize) -> BigUint {
        self.counts.get(&(n1, n2)).cloned().unwrap_or_default()
    }

    pub fn cardinality(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Hamming enumerator of the image: a = x^2, b = xy, c = y^2, i.e. an
    /// entry (n1, n2) lands on weight n1 + 2 n2 of length 2n.
    pub fn substitution(&self) -> WeightEnumerator {
        let mut counts = vec![BigUint::zero(); 2 * self.n + 1];
        for (&(n1, n2), c) in &self.counts {
            counts[n1 + 2 * n2] += c;
        }
        WeightEnumerator::new(2 * self.n, counts).expect("weights bounded by 2n")
    }

    /// Enumerates an F2 space of packed A^n vectors (see [`AVector::pack`]).
    pub fn from_f2_space(space: &F2Space, n: usize, max_log2: u32) -> Result<BachocEnumerator> {
        if space.dim() > max_log2 as usize {
            return Err(Error::Budget {
                needed: (space.dim() as u32).div_ceil(2),
                cap: max_log2 / 2,
            });
        }
        let mask = (1u128 << n) - 1;
        let mut counts: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        let mut tally = vec![0u64; (n + 1) * (n + 1)];
        for v in space.elements() {
            let a = (v | v >> 32) & mask;
            let b = (v >> 64 | v >> 96) & mask;
            let n1 = (a ^ b).count_ones() as usize;
            let n2 = (a & b).count_ones() as usize;
            tally[n1 * (n + 1) + n2] += 1;
        }
        for (k, &c) in tally.iter().enumerate() {
            if c > 0 {
                counts.insert((k / (n + 1), k % (n + 1)), BigUint::from(c));
            }
        }
        BachocEnumerator::new(n, counts)
    }
}

impl fmt::Display for BachocEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|((a, b), c)| format!("({a},{b}):{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for BachocEnumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};
        struct Counts<'a>(&'a BTreeMap<(usize, usize), BigUint>);
        impl Serialize for Counts<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for ((a, b), c) in self.0 {
                    m.serialize_entry(&format!("{a},{b}"), &c.to_string())?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("BachocEnumerator", 3)?;
        st.serialize_field("length", &self.n)?;
        st.serialize_field("cardinality", &self.cardinality().to_string())?;
        st.serialize_field("counts", &Counts(&self.counts))?;
        st.end()
    }
}

/// bwe of C through the distance engine, one projective class at a time.
pub fn bachoc_weight_enumerator(code: &ACyclicCode, engine: &Engine) -> Result<BachocEnumerator> {
    let n = code.length();
    let image = bachoc_image(code);
    let mask = (1u64 << n) - 1;
    let side = n + 1;
    let parts = engine.fold_projective(
        &image,
        || vec![0u64; side * side],
        |acc, w| {
            let s = w.support();
            let (a, b) = (s & mask, s >> n);
            let n1 = (a ^ b).count_ones() as usize;
            let n2 = (a & b).count_ones() as usize;
            acc[n1 * side + n2] += 1;
        },
        |_| false,
    )?;
    let mut counts: BTreeMap<(usize, usize), BigUint> = BTreeMap::from([((0, 0), BigUint::one())]);
    for part in parts {
        for (k, c) in part.into_iter().enumerate() {
            if c > 0 {
                *counts.entry((k / side, k % side)).or_default() += BigUint::from(c) * 3u32;
            }
        }
    }
    BachocEnumerator::new(n, counts)
}

/// Dense polynomial in (b, c) with a implied by homogeneity, index j*(n+1)+l.
struct Bc {
    side: usize,
    coeffs: Vec<BigInt>,
}

impl Bc {
    fn one(n: usize) -> Bc {
        let side = n + 1;
        let mut coeffs = vec![BigInt::zero(); side * side];
        coeffs[0] = BigInt::one();
        Bc { side, coeffs }
    }

    /// Multiplies by (ka*a + kb*b + kc*c).
    fn mul_linear(&mut self, ka: i64, kb: i64, kc: i64) {
        let side = self.side;
        let mut out = vec![BigInt::zero(); side * side];
        for j in 0..side {
            for l in 0..side - j {
                let c = &self.coeffs[j * side + l];
                if c.is_zero() {
                    continue;
                }
                out[j * side + l] += c * ka;
                if j + l + 1 < side {
                    out[(j + 1) * side + l] += c * kb;
                    out[j * side + l + 1] += c * kc;
                }
            }
        }
        self.coeffs = out;
    }
}

/// (1/|C|) bwe_C(a + 6b + 9c, a + 2b - 3c, a - 2b + c): the Bachoc weight
/// enumerator of the Euclidean dual.
pub fn bwe_macwilliams(bwe: &BachocEnumerator, cardinality: &BigUint) -> Result<BachocEnumerator> {
    if &bwe.cardinality() != cardinality {
        return Err(Error::Inconsistent(format!(
            "cardinality {cardinality} differs from the sum of counts {}",
            bwe.cardinality()
        )));
    }
    if cardinality.is_zero() {
        return Err(Error::Inconsistent("empty enumerator".into()));
    }
    let n = bwe.n;
    let side = n + 1;
    let mut total = vec![BigInt::zero(); side * side];
    for (&(n1, n2), c) in &bwe.counts {
        let mut p = Bc::one(n);
        for _ in 0..n - n1 - n2 {
            p.mul_linear(1, 6, 9);
        }
        for _ in 0..n1 {
            p.mul_linear(1, 2, -3);
        }
        for _ in 0..n2 {
            p.mul_linear(1, -2, 1);
        }
        let c = BigInt::from(c.clone());
        for (t, v) in total.iter_mut().zip(&p.coeffs) {
            if !v.is_zero() {
                *t += &c * v;
            }
        }
    }
    let card = BigInt::from(cardinality.clone());
    let mut counts = BTreeMap::new();
    for (k, t) in total.into_iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let (q, r) = t.div_rem(&card);
        let key = (k / side, k % side);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("coefficient of {key:?} is not an integer")));
        }
        if q.sign() == Sign::Minus {
            return Err(Error::Inconsistent(format!("coefficient of {key:?} is negative")));
        }
        counts.insert(key, q.magnitude().clone());
    }
    BachocEnumerator::new(n, counts)
}
