use serde::Serialize;

use crate::algebra::F4;
use crate::error::{Error, Result};
use crate::factor::check_odd;
use crate::poly::PolyF4;
use crate::qcode::packed::PackedWord;

/// A GF(4)-linear code given by a generator matrix, kept in reduced row
/// echelon form so that equal codes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCodeQ {
    n: usize,
    rows: Vec<Vec<F4>>,
}

fn rref(rows: &mut Vec<Vec<F4>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = row[col];
                for (x, &t) in row.iter_mut().zip(&pivot) {
                    *x += c * t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl LinearCodeQ {
    pub fn new(n: usize, mut rows: Vec<Vec<F4>>) -> Result<LinearCodeQ> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: bad.len(),
                right: n,
            });
        }
        rref(&mut rows, n);
        Ok(LinearCodeQ { n, rows })
    }

    pub fn zero(n: usize) -> LinearCodeQ {
        LinearCodeQ { n, rows: Vec::new() }
    }

    pub fn full(n: usize) -> LinearCodeQ {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { F4::ONE } else { F4::ZERO }).collect())
            .collect();
        LinearCodeQ { n, rows }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F4>] {
        &self.rows
    }

    pub fn packed_rows(&self) -> Result<Vec<PackedWord>> {
        self.rows.iter().map(|r| PackedWord::from_symbols(r)).collect()
    }

    pub fn contains(&self, v: &[F4]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(&mut rows, self.n);
        rows.len() == self.rows.len()
    }

    /// Euclidean dual {y : sum x_j y_j = 0 for all x in C}.
    pub fn dual(&self) -> LinearCodeQ {
        let mut rows = self.rows.clone();
        let pivots = rref(&mut rows, self.n);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let dual_rows = free
            .iter()
            .map(|&fc| {
                let mut v = vec![F4::ZERO; self.n];
                v[fc] = F4::ONE;
                // x_pivot = -sum_{free} a_{r,free} x_free; char 2 drops the sign
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = rows[r][fc];
                }
                v
            })
            .collect();
        LinearCodeQ::new(self.n, dual_rows).expect("rows have the code length")
    }

    /// Exchanges the first and second halves of every coordinate vector.
    pub fn swap_halves(&self) -> Result<LinearCodeQ> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::Inconsistent(format!("length {} is odd", self.n)));
        }
        let h = self.n / 2;
        let rows = self
            .rows
            .iter()
            .map(|r| r[h..].iter().chain(&r[..h]).copied().collect())
            .collect();
        LinearCodeQ::new(self.n, rows)
    }

    /// Cyclic shift of one coordinate to the right applied to every row.
    pub fn shifted_rows(&self) -> Vec<Vec<F4>> {
        self.rows
            .iter()
            .map(|r| {
                let mut s = r.clone();
                s.rotate_right(1);
                s
            })
            .collect()
    }
}

/// Plotkin (u, u+v) sum of two codes of equal length.
pub fn plotkin_sum(c1: &LinearCodeQ, c2: &LinearCodeQ) -> Result<LinearCodeQ> {
    if c1.length() != c2.length() {
        return Err(Error::LengthMismatch {
            left: c1.length(),
            right: c2.length(),
        });
    }
    let n = c1.length();
    let mut rows: Vec<Vec<F4>> = c1
        .rows()
        .iter()
        .map(|r| [r.as_slice(), r.as_slice()].concat())
        .collect();
    rows.extend(c2.rows().iter().map(|r| {
        let mut v = vec![F4::ZERO; n];
        v.extend_from_slice(r);
        v
    }));
    LinearCodeQ::new(2 * n, rows)
}

/// Cyclic code of length n over GF(4) with a monic generator dividing x^n - 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QCyclicCode {
    n: usize,
    gen: PolyF4,
}

impl QCyclicCode {
    pub fn new(n: usize, gen: &PolyF4) -> Result<QCyclicCode> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let gen = gen.monic();
        if gen.is_zero() || !gen.divides(&PolyF4::xn_minus_1(n)) {
            return Err(Error::NotDivisor {
                poly: gen.to_string(),
                n,
            });
        }
        Ok(QCyclicCode { n, gen })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> &PolyF4 {
        &self.gen
    }

    pub fn dim(&self) -> usize {
        self.n - self.gen.deg()
    }

    /// (x^n - 1) / gen
    pub fn check_polynomial(&self) -> PolyF4 {
        PolyF4::xn_minus_1(self.n)
            .exact_div(&self.gen)
            .expect("generator divides x^n - 1")
    }

    /// Rows x^j * gen for j < k.
    pub fn generator_rows(&self) -> Vec<Vec<F4>> {
        (0..self.dim()).map(|j| self.gen.shift(j).to_vec(self.n)).collect()
    }

    pub fn to_linear(&self) -> LinearCodeQ {
        LinearCodeQ::new(self.n, self.generator_rows()).expect("rows have the code length")
    }

    /// The Euclidean dual, generated by the reciprocal of the check polynomial.
    pub fn dual(&self) -> QCyclicCode {
        let h = self.check_polynomial();
        let gen = h.reciprocal().expect("divisors of x^n - 1 have nonzero constant term");
        QCyclicCode::new(self.n, &gen).expect("reciprocal of a divisor divides x^n - 1")
    }

    /// Encodes m(x) * gen(x) mod x^n - 1 for a message of length k.
    pub fn encode(&self, message: &[F4]) -> Vec<F4> {
        let m = PolyF4::from_coeffs(message.to_vec());
        (&m * &self.gen).to_vec(self.n)
    }
}

/// Cyclic code of length 2n with generator g1^2 * g2, where g1 * g2 divides
/// x^n - 1 for odd n.
pub fn repeated_root_double(g1: &PolyF4, g2: &PolyF4, n: usize) -> Result<QCyclicCode> {
    check_odd(n)?;
    let g12 = g1 * g2;
    if g12.is_zero() || !g12.monic().divides(&PolyF4::xn_minus_1(n)) {
        return Err(Error::NotDivisor {
            poly: g12.to_string(),
            n,
        });
    }
    QCyclicCode::new(2 * n, &(&g12 * g1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyF4 {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_code_basics() {
        let c = QCyclicCode::new(7, &(&p("x+1") * &p("x^3+x+1"))).unwrap();
        assert_eq!(c.dim(), 3);
        let lin = c.to_linear();
        assert_eq!(lin.dim(), 3);
        for row in lin.shifted_rows() {
            assert!(lin.contains(&row));
        }
        assert!(matches!(
            QCyclicCode::new(7, &p("x^2+1")),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn cyclic_dual_matches_nullspace() {
        for n in [3usize, 5, 7, 9, 15] {
            let fact = crate::factor::factorize_xn_minus_1(n).unwrap();
            let t = fact.items.len();
            for mask in 0u32..(1 << t) {
                let g: PolyF4 = (0..t)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| &fact.items[i].factor)
                    .product();
                let c = QCyclicCode::new(n, &g).unwrap();
                assert_eq!(c.dual().to_linear(), c.to_linear().dual(), "n={n} g={g}");
            }
        }
    }

    #[test]
    fn dual_of_full_and_zero() {
        assert_eq!(LinearCodeQ::full(4).dual(), LinearCodeQ::zero(4));
        assert_eq!(LinearCodeQ::zero(4).dual(), LinearCodeQ::full(4));
    }

    #[test]
    fn plotkin_dimensions() {
        let t = QCyclicCode::new(3, &p("x+w")).unwrap().to_linear();
        let r = QCyclicCode::new(3, &(&p("x+w") * &p("x+1"))).unwrap().to_linear();
        let s = plotkin_sum(&t, &r).unwrap();
        assert_eq!(s.length(), 6);
        assert_eq!(s.dim(), 3);
        assert!(plotkin_sum(&t, &LinearCodeQ::zero(4)).is_err());
    }

    #[test]
    fn repeated_root_preconditions() {
        let c = repeated_root_double(&p("x+w"), &p("x+1"), 3).unwrap();
        assert_eq!(c.length(), 6);
        assert_eq!(c.generator(), &(&(&p("x+w") * &p("x+w")) * &p("x+1")));
        assert_eq!(c.dim(), 3);
        assert!(repeated_root_double(&p("x+w"), &p("x+1"), 4).is_err());
        assert!(repeated_root_double(&p("x+w"), &p("x+w"), 3).is_err());
    }
}
