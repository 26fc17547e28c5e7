//! Cyclic codes over A of odd length, parametrized by factor triples.
//!
//! A triple (f, g, h) with f*g*h = x^n - 1 defines the code
//!
//! ```text
//! C = { c1 + u*c2 : c1 in (f*h), c2 in (f) }
//! ```
//!
//! where (p) is the quaternary cyclic code generated by p. In i-form the
//! word c1 + u*c2 is (c1 + c2) + i*c2, so C = {(r + t, t)} with r in the
//! residue code (fh) and t in the torsion code (f).
//!
//! Vectors of A^n with n <= 32 are packed into a `u128` as four bit planes
//! (low and high bit of the a part, then of the b part), which turns every
//! F2-linear question about C into linear algebra over F2; see [`crate::gf2`].

mod audit;

pub use audit::{audit_claims, AuditReport, AuditScope, Claim, Verdict, AUDIT_SCHEMA};

use std::fmt;

use serde::Serialize;

use crate::algebra::{AElem, F4};
use crate::error::{Error, Result};
use crate::factor::check_odd;
use crate::gf2::F2Space;
use crate::poly::PolyF4;
use crate::qcode::{LinearCodeQ, QCyclicCode};

/// Longest length handled by the packed F2 representation.
pub const MAX_PACKED_LENGTH: usize = 32;

/// An element of A^n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AVector(pub Vec<AElem>);

impl AVector {
    pub fn zero(n: usize) -> AVector {
        AVector(vec![AElem::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Builds c1 + u*c2 from its two quaternary components.
    pub fn from_u_parts(c1: &[F4], c2: &[F4]) -> Result<AVector> {
        if c1.len() != c2.len() {
            return Err(Error::LengthMismatch {
                left: c1.len(),
                right: c2.len(),
            });
        }
        Ok(AVector(
            c1.iter().zip(c2).map(|(&x, &y)| AElem::from_u_coords(x, y)).collect(),
        ))
    }

    /// The pair (c1, c2) with v = c1 + u*c2.
    pub fn u_parts(&self) -> (Vec<F4>, Vec<F4>) {
        self.0.iter().map(|e| e.to_u_coords()).unzip()
    }

    /// The pair (a, b) with v = a + i*b.
    pub fn i_parts(&self) -> (Vec<F4>, Vec<F4>) {
        self.0.iter().map(|e| (e.a, e.b)).unzip()
    }

    /// Cyclic shift: coordinate j moves to j + 1 (multiplication by x).
    pub fn shift(&self) -> AVector {
        let mut v = self.0.clone();
        v.rotate_right(1);
        AVector(v)
    }

    pub fn left_mul(&self, s: AElem) -> AVector {
        AVector(self.0.iter().map(|&e| s * e).collect())
    }

    pub fn right_mul(&self, s: AElem) -> AVector {
        AVector(self.0.iter().map(|&e| e * s).collect())
    }

    pub fn add(&self, other: &AVector) -> AVector {
        AVector(self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect())
    }

    pub fn bachoc_weight(&self) -> u32 {
        self.0.iter().map(|e| e.bachoc_weight()).sum()
    }

    pub fn pack(&self) -> Result<u128> {
        let n = self.len();
        if n > MAX_PACKED_LENGTH {
            return Err(Error::LengthTooLarge {
                len: n,
                max: MAX_PACKED_LENGTH,
            });
        }
        let mut v = 0u128;
        for (j, e) in self.0.iter().enumerate() {
            let bits = e.bits() as u128;
            for q in 0..4 {
                v |= (bits >> q & 1) << (32 * q + j);
            }
        }
        Ok(v)
    }

    pub fn unpack(v: u128, n: usize) -> AVector {
        AVector(
            (0..n)
                .map(|j| {
                    let bits = (0..4).fold(0u8, |acc, q| acc | (((v >> (32 * q + j)) & 1) as u8) << q);
                    AElem::from_bits(bits)
                })
                .collect(),
        )
    }
}

impl fmt::Display for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_len(x: &AVector, y: &AVector) -> Result<()> {
    if x.len() != y.len() {
        Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        })
    } else {
        Ok(())
    }
}

/// E(x, y) = sum_j x_j y_j.
pub fn euclidean_form(x: &AVector, y: &AVector) -> Result<AElem> {
    check_len(x, y)?;
    Ok(x.0.iter().zip(&y.0).fold(AElem::ZERO, |acc, (&a, &b)| acc + a * b))
}

/// H(x, y) = sum_j x_j conj(y_j).
pub fn hermitian_form(x: &AVector, y: &AVector) -> Result<AElem> {
    check_len(x, y)?;
    Ok(x.0
        .iter()
        .zip(&y.0)
        .fold(AElem::ZERO, |acc, (&a, &b)| acc + a * b.conj()))
}

/// Cyclic code over A given by a factor triple of x^n - 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ACyclicCode {
    n: usize,
    f: PolyF4,
    g: PolyF4,
    h: PolyF4,
}

impl ACyclicCode {
    /// Validates a triple: n odd, f*g*h = x^n - 1, factors pairwise coprime.
    pub fn build(f: &PolyF4, g: &PolyF4, h: &PolyF4, n: usize) -> Result<ACyclicCode> {
        check_odd(n)?;
        let (f, g, h) = (f.monic(), g.monic(), h.monic());
        if f.is_zero() || g.is_zero() || h.is_zero() {
            return Err(Error::ProductMismatch { product: "0".into(), n });
        }
        let product = &(&f * &g) * &h;
        if product != PolyF4::xn_minus_1(n) {
            return Err(Error::ProductMismatch {
                product: product.to_string(),
                n,
            });
        }
        for (p, q) in [(&f, &g), (&f, &h), (&g, &h)] {
            if !p.gcd(q)?.is_one() {
                return Err(Error::NotCoprime(p.to_string(), q.to_string()));
            }
        }
        Ok(ACyclicCode { n, f, g, h })
    }

    /// Builds the triple with g = (x^n - 1) / (f*h).
    pub fn from_f_h(n: usize, f: &PolyF4, h: &PolyF4) -> Result<ACyclicCode> {
        check_odd(n)?;
        let fh = (f * h).monic();
        let xn = PolyF4::xn_minus_1(n);
        if fh.is_zero() || !fh.divides(&xn) {
            return Err(Error::NotDivisor {
                poly: fh.to_string(),
                n,
            });
        }
        let g = xn.exact_div(&fh)?;
        ACyclicCode::build(f, &g, h, n)
    }

    /// The trivial self-dual code u*A^n, triple (1, 1, x^n - 1).
    pub fn trivial(n: usize) -> Result<ACyclicCode> {
        ACyclicCode::build(&PolyF4::one(), &PolyF4::one(), &PolyF4::xn_minus_1(n), n)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &PolyF4 {
        &self.f
    }

    pub fn g(&self) -> &PolyF4 {
        &self.g
    }

    pub fn h(&self) -> &PolyF4 {
        &self.h
    }

    pub fn is_trivial(&self) -> bool {
        self.f.is_one() && self.g.is_one()
    }

    /// Residue code, generator f*h, dimension deg g.
    pub fn residue(&self) -> QCyclicCode {
        QCyclicCode::new(self.n, &(&self.f * &self.h)).expect("fh divides x^n - 1")
    }

    /// Torsion code, generator f, dimension deg g + deg h.
    pub fn torsion(&self) -> QCyclicCode {
        QCyclicCode::new(self.n, &self.f).expect("f divides x^n - 1")
    }

    /// log_4 |C| = 2 deg g + deg h.
    pub fn cardinality_exp(&self) -> usize {
        2 * self.g.deg() + self.h.deg()
    }

    /// Triple of the dual: (g*, f*, h*).
    pub fn predicted_dual(&self) -> ACyclicCode {
        let r = |p: &PolyF4| p.reciprocal().expect("divisors of x^n - 1 have p(0) != 0");
        ACyclicCode::build(&r(&self.g), &r(&self.f), &r(&self.h), self.n)
            .expect("reciprocals of a valid triple form a valid triple")
    }

    /// h = h* and g = f*.
    pub fn is_self_dual_triple(&self) -> bool {
        self.h.is_self_reciprocal() && self.f.reciprocal().map(|r| r == self.g).unwrap_or(false)
    }

    /// Membership via the generator description: c1 in (fh), c2 in (f).
    pub fn contains(&self, v: &AVector) -> bool {
        if v.len() != self.n {
            return false;
        }
        let (c1, c2) = v.u_parts();
        let in_code = |c: Vec<F4>, gen: &PolyF4| gen.divides(&PolyF4::from_coeffs(c));
        in_code(c1, &(&self.f * &self.h)) && in_code(c2, &self.f)
    }

    /// An F2 basis of C: (r, 0) and (t, t) in i-form for r, w*r over the
    /// residue rows and t, w*t over the torsion rows.
    pub fn f2_basis(&self) -> Vec<AVector> {
        let zero = vec![F4::ZERO; self.n];
        let mut out = Vec::new();
        for r in self.residue().generator_rows() {
            for c in [F4::ONE, F4::W] {
                let rc: Vec<F4> = r.iter().map(|&x| x * c).collect();
                out.push(AVector::from_u_parts(&rc, &zero).expect("equal lengths"));
            }
        }
        for t in self.torsion().generator_rows() {
            for c in [F4::ONE, F4::W] {
                let tc: Vec<F4> = t.iter().map(|&x| x * c).collect();
                out.push(AVector::from_u_parts(&zero, &tc).expect("equal lengths"));
            }
        }
        out
    }

    /// C as an F2-subspace of the packed ambient space (n <= 32).
    pub fn f2_space(&self) -> Result<F2Space> {
        let packed = self.f2_basis().iter().map(|v| v.pack()).collect::<Result<Vec<_>>>()?;
        Ok(F2Space::span(packed))
    }

    /// Every codeword, for codes with at most 2^max_log2 elements.
    pub fn codewords(&self, max_log2: u32) -> Result<Vec<AVector>> {
        let bits = 2 * self.cardinality_exp() as u32;
        if bits > max_log2 {
            return Err(Error::Budget {
                needed: bits.div_ceil(2),
                cap: max_log2 / 2,
            });
        }
        let basis = self.f2_basis();
        let mut out = vec![AVector::zero(self.n)];
        for b in &basis {
            let extra: Vec<AVector> = out.iter().map(|v| v.add(b)).collect();
            out.extend(extra);
        }
        Ok(out)
    }
}

impl fmt::Display for ACyclicCode {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "n={} f={} g={} h={}", self.n, self.f, self.g, self.h)
    }
}

/// Quaternary code spanned by F2-spanning vectors that are closed under
/// GF(4) scaling (the F2 span then equals the GF(4) span).
fn quaternary_span(n: usize, vectors: impl IntoIterator<Item = Vec<F4>>) -> LinearCodeQ {
    LinearCodeQ::new(n, vectors.into_iter().collect()).expect("vectors have length n")
}

/// Residue code recomputed from the codeword set: mu(C), the projection on
/// the first u-coordinate.
pub fn residue_from_set(code: &ACyclicCode) -> LinearCodeQ {
    quaternary_span(code.n, code.f2_basis().into_iter().map(|v| v.u_parts().0))
}

/// Torsion code recomputed from the codeword set: the largest quaternary
/// code D with u*D contained in C.
pub fn torsion_from_set(code: &ACyclicCode) -> Result<LinearCodeQ> {
    let n = code.n;
    let space = code.f2_space()?;
    // d -> u*d mod C on the F2 basis {e_j, w*e_j} of F4^n
    let unit = |k: usize| -> Vec<F4> {
        let mut d = vec![F4::ZERO; n];
        d[k / 2] = if k.is_multiple_of(2) { F4::ONE } else { F4::W };
        d
    };
    let to_packed = |d: &[F4]| -> u128 {
        AVector(d.iter().map(|&x| AElem::U * AElem::scalar(x)).collect())
            .pack()
            .expect("length checked by f2_space")
    };
    // coordinates of d are stored in the low 2n bits of the kernel vectors
    let basis: Vec<u128> = (0..2 * n).map(|k| 1u128 << k).collect();
    let ker = crate::gf2::kernel(&basis, |coords| {
        let mut acc = 0u128;
        for k in 0..2 * n {
            if coords >> k & 1 == 1 {
                acc ^= to_packed(&unit(k));
            }
        }
        space.reduce(acc)
    });
    Ok(quaternary_span(
        n,
        ker.into_iter()
            .map(|coords| (0..n).map(|j| F4::from_bits((coords >> (2 * j) & 3) as u8)).collect()),
    ))
}
