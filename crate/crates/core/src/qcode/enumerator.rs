use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hamming weight enumerator of a code of length N: counts[w] = A_w.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    length: usize,
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(length: usize, mut counts: Vec<BigUint>) -> Result<WeightEnumerator> {
        if counts.len() > length + 1 {
            if counts[length + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Inconsistent(format!("weights above the length {length}")));
            }
            counts.truncate(length + 1);
        }
        counts.resize(length + 1, BigUint::zero());
        Ok(WeightEnumerator { length, counts })
    }

    pub fn from_u64(length: usize, counts: &[u64]) -> Result<WeightEnumerator> {
        WeightEnumerator::new(length, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Enumerator of the zero code.
    pub fn zero_code(length: usize) -> WeightEnumerator {
        let mut counts = vec![BigUint::zero(); length + 1];
        counts[0] = BigUint::one();
        WeightEnumerator { length, counts }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    pub fn cardinality(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<u32> {
        (1..=self.length).find(|&w| !self.counts[w].is_zero()).map(|w| w as u32)
    }

    /// Nonzero coefficients as (weight, count) pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl std::fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.nonzero().map(|(w, c)| format!("{w}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct EnumeratorJson {
    length: usize,
    cardinality: String,
    counts: BTreeMap<String, String>,
}

impl Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // keys sorted numerically, not lexicographically
        use serde::ser::SerializeMap;
        struct Counts<'a>(&'a WeightEnumerator);
        impl Serialize for Counts<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(None)?;
                for (w, c) in self.0.nonzero() {
                    m.serialize_entry(&w.to_string(), &c.to_string())?;
                }
                m.end()
            }
        }
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeightEnumerator", 3)?;
        st.serialize_field("length", &self.length)?;
        st.serialize_field("cardinality", &self.cardinality().to_string())?;
        st.serialize_field("counts", &Counts(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = EnumeratorJson::deserialize(d)?;
        let mut counts = vec![BigUint::zero(); raw.length + 1];
        for (k, v) in &raw.counts {
            let w: usize = k.parse().map_err(D::Error::custom)?;
            if w > raw.length {
                return Err(D::Error::custom(format!("weight {w} exceeds length {}", raw.length)));
            }
            counts[w] = v.parse().map_err(D::Error::custom)?;
        }
        let we = WeightEnumerator::new(raw.length, counts).map_err(D::Error::custom)?;
        let card: BigUint = raw.cardinality.parse().map_err(D::Error::custom)?;
        if card != we.cardinality() {
            return Err(D::Error::custom("cardinality differs from the sum of counts"));
        }
        Ok(we)
    }
}

pub(crate) fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Krawtchouk values K_j(w) for q = 4, all 0 <= j, w <= n, indexed [j][w].
pub fn krawtchouk_table(n: usize) -> Vec<Vec<BigInt>> {
    let binom = binomials(n);
    let c = |a: usize, b: usize| -> BigInt {
        if b > a {
            BigInt::zero()
        } else {
            binom[a][b].clone()
        }
    };
    let pow3: Vec<BigInt> = (0..=n).map(|e| BigInt::from(3u32).pow(e as u32)).collect();
    (0..=n)
        .map(|j| {
            (0..=n)
                .map(|w| {
                    let mut acc = BigInt::zero();
                    for s in 0..=j.min(w) {
                        let term = &pow3[j - s] * c(w, s) * c(n - w, j - s);
                        if s % 2 == 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Enumerator of the dual code: (1/|C|) W(x + 3y, x - y).
///
/// Fails with [`Error::Inconsistent`] when `cardinality` is not the sum of
/// the counts or when a coefficient comes out negative or fractional.
pub fn macwilliams_transform(we: &WeightEnumerator, cardinality: &BigUint) -> Result<WeightEnumerator> {
    if &we.cardinality() != cardinality {
        return Err(Error::Inconsistent(format!(
            "cardinality {cardinality} differs from the sum of counts {}",
            we.cardinality()
        )));
    }
    if cardinality.is_zero() {
        return Err(Error::Inconsistent("empty enumerator".into()));
    }
    let n = we.length();
    let kraw = krawtchouk_table(n);
    let card = BigInt::from(cardinality.clone());
    let counts = (0..=n)
        .map(|j| {
            let total: BigInt = we.nonzero().map(|(w, a)| BigInt::from(a.clone()) * &kraw[j][w]).sum();
            let (q, r) = total.div_rem(&card);
            if !r.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "coefficient of weight {j} is not an integer"
                )));
            }
            match q.sign() {
                Sign::Minus => Err(Error::Inconsistent(format!("coefficient of weight {j} is negative"))),
                _ => Ok(q.magnitude().clone()),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    WeightEnumerator::new(n, counts)
}

/// True when the enumerator is a fixed point of the MacWilliams transform.
pub fn is_formally_self_dual(we: &WeightEnumerator) -> Result<bool> {
    Ok(&macwilliams_transform(we, &we.cardinality())? == we)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn we(n: usize, counts: &[u64]) -> WeightEnumerator {
        WeightEnumerator::from_u64(n, counts).unwrap()
    }

    #[test]
    fn transform_examples() {
        let full1 = we(1, &[1, 3]);
        assert_eq!(macwilliams_transform(&full1, &4u32.into()).unwrap(), we(1, &[1, 0]));
        let zero1 = we(1, &[1]);
        assert_eq!(macwilliams_transform(&zero1, &1u32.into()).unwrap(), full1);
        // [3,2] code generated by x + w; its dual is the [3,1] code with weights {0:1, 3:3}
        let c = we(3, &[1, 0, 9, 6]);
        assert_eq!(macwilliams_transform(&c, &16u32.into()).unwrap(), we(3, &[1, 0, 0, 3]));
    }

    #[test]
    fn formal_self_duality_examples() {
        assert!(!is_formally_self_dual(&we(2, &[1, 6, 9])).unwrap());
        assert!(is_formally_self_dual(&we(2, &[1, 0, 3])).unwrap());
    }

    #[test]
    fn rejects_inconsistent_inputs() {
        assert!(macwilliams_transform(&we(2, &[1, 2]), &3u32.into()).is_err());
        assert!(macwilliams_transform(&we(2, &[1, 2]), &4u32.into()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = we(3, &[1, 0, 9, 6]);
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"length":3,"cardinality":"16","counts":{"0":"1","2":"9","3":"6"}}"#
        );
        let back: WeightEnumerator = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
        let bad = r#"{"length":3,"cardinality":"17","counts":{"0":"1","2":"9","3":"6"}}"#;
        assert!(serde_json::from_str::<WeightEnumerator>(bad).is_err());
    }

    #[test]
    fn krawtchouk_orthogonality() {
        // sum_w K_i(w) K_w(j) = 4^n [i = j]
        let n = 5;
        let k = krawtchouk_table(n);
        for i in 0..=n {
            for j in 0..=n {
                let s: BigInt = (0..=n).map(|w| &k[i][w] * &k[w][j]).sum();
                let expect = if i == j {
                    BigInt::from(4u32).pow(n as u32)
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expect);
            }
        }
    }
}
