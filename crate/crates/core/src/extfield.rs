//! Extension fields F_{4^m} = F4[y]/(p(y)) used to build roots of unity.

use crate::algebra::F4;
use crate::error::{Error, Result};
use crate::poly::PolyF4;

/// Largest supported extension degree; 4^m - 1 must fit in a u64.
pub const MAX_DEGREE: usize = 31;

/// Distinct prime factors of `n` by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime factors of 4^m - 1 = (2^m - 1)(2^m + 1), factoring each half separately.
fn order_prime_factors(m: usize) -> Vec<u64> {
    let mut out = prime_factors((1u64 << m) - 1);
    out.extend(prime_factors((1u64 << m) + 1));
    out.sort_unstable();
    out.dedup();
    out
}

fn mulmod(a: &PolyF4, b: &PolyF4, modulus: &PolyF4) -> PolyF4 {
    (a * b).rem(modulus).expect("modulus is nonzero")
}

/// x -> x^4 mod `modulus`.
fn frobenius4(a: &PolyF4, modulus: &PolyF4) -> PolyF4 {
    let sq = mulmod(a, a, modulus);
    mulmod(&sq, &sq, modulus)
}

/// Rabin's irreducibility test over F4.
pub fn is_irreducible(p: &PolyF4) -> bool {
    let m = match p.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(m) => m,
    };
    let x = PolyF4::x();
    // x^(4^k) mod p for k = 0..=m
    let mut powers = Vec::with_capacity(m + 1);
    let mut cur = x.rem(p).expect("nonzero");
    powers.push(cur.clone());
    for _ in 0..m {
        cur = frobenius4(&cur, p);
        powers.push(cur.clone());
    }
    if powers[m] != powers[0] {
        return false;
    }
    prime_factors(m as u64).into_iter().all(|q| {
        let k = m / q as usize;
        let diff = &powers[k] + &x;
        diff.gcd(p).is_ok_and(|g| g.is_one())
    })
}

/// Monic polynomial of degree `m` whose lower coefficients, read as base-4
/// digits with the constant term least significant, form `index`.
fn monic_by_index(m: usize, index: u64) -> PolyF4 {
    let mut coeffs: Vec<F4> = (0..m).map(|j| F4::from_bits((index >> (2 * j)) as u8)).collect();
    coeffs.push(F4::ONE);
    PolyF4::from_coeffs(coeffs)
}

/// The irreducible of degree `m` with the smallest index in the base-4
/// ordering of [`monic_by_index`].
pub fn least_irreducible(m: usize) -> Result<PolyF4> {
    if m == 0 || m > MAX_DEGREE {
        return Err(Error::LengthTooLarge {
            len: m,
            max: MAX_DEGREE,
        });
    }
    (0u64..)
        .map(|k| monic_by_index(m, k))
        .find(is_irreducible)
        .ok_or_else(|| Error::Inconsistent(format!("no irreducible of degree {m}")))
}

/// F4[y]/(p) for an irreducible p; elements are reduced polynomials in y.
#[derive(Clone, Debug)]
pub struct ExtField {
    modulus: PolyF4,
    degree: usize,
}

impl ExtField {
    /// Field of degree `m` over F4 built on [`least_irreducible`].
    pub fn new(m: usize) -> Result<ExtField> {
        Ok(ExtField {
            modulus: least_irreducible(m)?,
            degree: m,
        })
    }

    pub fn modulus(&self) -> &PolyF4 {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Size of the multiplicative group, 4^m - 1.
    pub fn group_order(&self) -> u64 {
        (1u64 << (2 * self.degree)) - 1
    }

    pub fn mul(&self, a: &PolyF4, b: &PolyF4) -> PolyF4 {
        mulmod(a, b, &self.modulus)
    }

    pub fn pow(&self, a: &PolyF4, mut e: u64) -> PolyF4 {
        let mut base = a.rem(&self.modulus).expect("nonzero");
        let mut acc = PolyF4::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Least generator of the multiplicative group in the index ordering.
    pub fn primitive_element(&self) -> PolyF4 {
        let order = self.group_order();
        let primes = order_prime_factors(self.degree);
        (1u64..)
            .map(|k| {
                let coeffs = (0..self.degree).map(|j| F4::from_bits((k >> (2 * j)) as u8)).collect();
                PolyF4::from_coeffs(coeffs)
            })
            .find(|g| primes.iter().all(|&r| !self.pow(g, order / r).is_one()))
            .expect("a finite field has a primitive element")
    }

    /// An element of multiplicative order exactly `n`; `n` must divide 4^m - 1.
    pub fn root_of_unity(&self, n: u64) -> Result<PolyF4> {
        let order = self.group_order();
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::Inconsistent(format!(
                "{n} does not divide the group order {order}"
            )));
        }
        let g = self.primitive_element();
        Ok(self.pow(&g, order / n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_factor_examples() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(60), vec![2, 3, 5]);
        assert_eq!(order_prime_factors(5), vec![3, 11, 31]);
        assert_eq!(order_prime_factors(29), {
            let mut v = prime_factors((1u64 << 58) - 1);
            v.sort_unstable();
            v
        });
    }

    #[test]
    fn irreducibility_small_degrees_by_root_search() {
        // degree 2 and 3: irreducible iff no root in F4
        for m in 2..=3 {
            for k in 0..(1u64 << (2 * m)) {
                let p = monic_by_index(m, k);
                let has_root = F4::ALL.iter().any(|&x| p.eval(x).is_zero());
                assert_eq!(is_irreducible(&p), !has_root, "{p}");
            }
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree m over F4
        let expected = [(1, 4u64), (2, 6), (3, 20), (4, 60), (5, 204)];
        for (m, count) in expected {
            let got = (0..(1u64 << (2 * m)))
                .filter(|&k| is_irreducible(&monic_by_index(m, k)))
                .count() as u64;
            assert_eq!(got, count, "degree {m}");
        }
    }

    #[test]
    fn reducible_quartic_with_no_roots_detected() {
        let q: PolyF4 = "x^2+x+w".parse().unwrap();
        assert!(is_irreducible(&q));
        assert!(!is_irreducible(&(&q * &q)));
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        let field = ExtField::new(5).unwrap();
        let beta = field.root_of_unity(31).unwrap();
        assert!(field.pow(&beta, 31).is_one());
        assert!(!beta.is_one());
        assert!(field.root_of_unity(7).is_err());
    }

    #[test]
    fn primitive_element_generates() {
        let field = ExtField::new(2).unwrap();
        let g = field.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut cur = PolyF4::one();
        for _ in 0..15 {
            assert!(seen.insert(cur.clone()));
            cur = field.mul(&cur, &g);
        }
        assert!(cur.is_one());
    }
}
