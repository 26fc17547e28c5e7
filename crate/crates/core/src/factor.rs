//! Factorization of x^n - 1 over GF(4) for odd n.
//!
//! Each irreducible factor is the minimal polynomial of beta^s where beta is
//! a primitive n-th root of unity in F_{4^m}, m = ord_n(4), and s runs over
//! representatives of the 4-cyclotomic cosets of Z_n. Negating a coset
//! corresponds to taking the reciprocal of its factor.

use serde::Serialize;

use crate::algebra::F4;
use crate::error::{Error, Result};
use crate::extfield::{ExtField, MAX_DEGREE};
use crate::poly::PolyF4;

pub(crate) fn check_odd(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroLength)
    } else if n.is_multiple_of(2) {
        Err(Error::EvenLength(n))
    } else {
        Ok(())
    }
}

/// Smallest j >= 1 with 4^j = 1 (mod n); 1 for n = 1.
pub fn order_of_4(n: usize) -> Result<u32> {
    check_odd(n)?;
    if n == 1 {
        return Ok(1);
    }
    let n = n as u64;
    let mut acc = 4 % n;
    let mut j = 1;
    while acc != 1 {
        acc = acc * 4 % n;
        j += 1;
    }
    Ok(j)
}

/// Orbit of Z_n under multiplication by 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicCoset {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn negated(&self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.members.iter().map(|&s| (n - s) % n).collect();
        v.sort_unstable();
        v
    }

    pub fn is_symmetric(&self, n: usize) -> bool {
        self.negated(n) == self.members
    }
}

/// Cyclotomic cosets ordered by representative (their smallest member).
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<CyclotomicCoset>> {
    check_odd(n)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for rep in 0..n {
        if seen[rep] {
            continue;
        }
        let mut members = Vec::new();
        let mut s = rep;
        while !seen[s] {
            seen[s] = true;
            members.push(s);
            s = s * 4 % n;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            representative: rep,
            members,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorItem {
    pub coset: CyclotomicCoset,
    pub factor: PolyF4,
    /// Index of the item whose factor is the reciprocal of this one.
    pub partner: usize,
}

impl FactorItem {
    pub fn is_self_reciprocal(&self, index: usize) -> bool {
        self.partner == index
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Factorization {
    pub n: usize,
    pub extension_degree: usize,
    pub field_modulus: PolyF4,
    pub items: Vec<FactorItem>,
}

impl Factorization {
    pub fn factors(&self) -> impl Iterator<Item = &PolyF4> {
        self.items.iter().map(|it| &it.factor)
    }

    pub fn product(&self) -> PolyF4 {
        self.factors().product()
    }

    pub fn index_of(&self, p: &PolyF4) -> Option<usize> {
        self.items.iter().position(|it| &it.factor == p)
    }

    /// Indices of self-reciprocal factors.
    pub fn self_reciprocal(&self) -> Vec<usize> {
        (0..self.items.len()).filter(|&i| self.items[i].partner == i).collect()
    }

    /// Pairs (i, j), i < j, of mutually reciprocal distinct factors.
    pub fn asymmetric_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.items.len())
            .filter_map(|i| {
                let j = self.items[i].partner;
                (i < j).then_some((i, j))
            })
            .collect()
    }

    /// Splits a divisor of x^n - 1 into factor indices (sorted).
    pub fn decompose(&self, p: &PolyF4) -> Option<Vec<usize>> {
        let mut rest = p.monic();
        let mut out = Vec::new();
        for (i, it) in self.items.iter().enumerate() {
            if it.factor.divides(&rest) {
                rest = rest.exact_div(&it.factor).ok()?;
                out.push(i);
            }
        }
        rest.is_one().then_some(out)
    }
}

/// Minimal polynomial of beta^s: product of (x - beta^j) over the coset.
fn minimal_polynomial(field: &ExtField, beta: &PolyF4, coset: &CyclotomicCoset) -> Result<PolyF4> {
    // coefficients in the extension field, lowest degree first
    let mut acc: Vec<PolyF4> = vec![PolyF4::one()];
    for &j in &coset.members {
        let root = field.pow(beta, j as u64);
        let mut next = vec![PolyF4::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] + &field.mul(c, &root);
        }
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| match c.degree() {
            None => Ok(F4::ZERO),
            Some(0) => Ok(c.constant_term()),
            Some(_) => Err(Error::Inconsistent(format!(
                "minimal polynomial coefficient {c} is not in GF(4)"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyF4::from_coeffs(coeffs))
}

pub fn factorize_xn_minus_1(n: usize) -> Result<Factorization> {
    let m = order_of_4(n)? as usize;
    if m > MAX_DEGREE {
        return Err(Error::LengthTooLarge {
            len: n,
            max: MAX_DEGREE,
        });
    }
    let field = ExtField::new(m)?;
    let beta = field.root_of_unity(n as u64)?;
    let cosets = cyclotomic_cosets(n)?;
    let factors = cosets
        .iter()
        .map(|c| minimal_polynomial(&field, &beta, c))
        .collect::<Result<Vec<_>>>()?;
    let items = cosets
        .into_iter()
        .zip(&factors)
        .map(|(coset, factor)| {
            let recip = factor.reciprocal()?;
            let partner = factors
                .iter()
                .position(|p| *p == recip)
                .ok_or_else(|| Error::Inconsistent(format!("no reciprocal partner for {factor}")))?;
            Ok(FactorItem {
                coset,
                factor: factor.clone(),
                partner,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Factorization {
        n,
        extension_degree: m,
        field_modulus: field.modulus().clone(),
        items,
    })
}

/// Outcome of the existence test for nontrivial Euclidean self-dual codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SelfDualExistence {
    /// Some coset is not closed under negation.
    Exists { witness: CyclotomicCoset },
    /// 4^power = -1 (mod n), so every coset is symmetric.
    Absent { power: u32 },
}

impl SelfDualExistence {
    pub fn exists(&self) -> bool {
        matches!(self, SelfDualExistence::Exists { .. })
    }
}

/// Decides whether -1 lies outside the subgroup generated by 4 in (Z/n)^*.
///
/// The arithmetic answer is paired with a witness coset found by scanning,
/// and the two routes must agree.
pub fn selfdual_exists(n: usize) -> Result<SelfDualExistence> {
    let ord = order_of_4(n)?;
    let nn = n as u64;
    let minus_one = (nn - 1) % nn;
    let mut acc = 1 % nn;
    let mut power = None;
    for j in 0..ord {
        if acc == minus_one {
            power = Some(j);
            break;
        }
        acc = acc * 4 % nn;
    }
    let witness = cyclotomic_cosets(n)?.into_iter().find(|c| !c.is_symmetric(n));
    match (power, witness) {
        (Some(power), None) => Ok(SelfDualExistence::Absent { power }),
        (None, Some(witness)) => Ok(SelfDualExistence::Exists { witness }),
        _ => Err(Error::Inconsistent(format!(
            "power-of-4 test and coset scan disagree at n = {n}"
        ))),
    }
}

/// Whether ord_n(4) is odd. This is sufficient for existence but not
/// necessary (n = 15 has even order and still admits self-dual codes).
pub fn order_of_4_is_odd(n: usize) -> Result<bool> {
    Ok(order_of_4(n)? % 2 == 1)
}
