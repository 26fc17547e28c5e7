//! Euclidean self-dual triples for odd n and their distance tables.
//!
//! A triple is self-dual iff h = h* and g = f*. Every self-reciprocal
//! irreducible factor of x^n - 1 must therefore sit in h, and each pair
//! {p, p*} of mutually reciprocal factors goes either entirely into h, or
//! p into f and p* into g, or the other way round. With t such pairs this
//! gives 3^t - 1 nontrivial triples (all-into-h is the trivial code).
//! Exchanging f and g reverses coordinates, so classes up to reversal number
//! (3^t - 1) / 2.

mod reference;

pub use reference::{
    compare_with_reference, GeneratorCheck, ReferenceComparison, ReferenceData, ReferenceRow, ReferenceRowResult,
    RowStatus,
};

use std::cmp::Ordering;

use serde::Serialize;

use crate::acode::ACyclicCode;
use crate::error::Result;
use crate::factor::{factorize_xn_minus_1, Factorization};
use crate::poly::PolyF4;
use crate::qcode::Engine;

/// Placement of one pair {p, p*} of reciprocal factors (p has the smaller
/// factor index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairAssignment {
    /// p and p* both divide h.
    H,
    /// p divides f, p* divides g.
    F,
    /// p divides g, p* divides f.
    G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualClass {
    pub code: ACyclicCode,
    pub assignment: Vec<PairAssignment>,
    /// True when f precedes g in coefficient order, i.e. this triple is the
    /// representative of its reversal class.
    pub canonical: bool,
}

impl SelfDualClass {
    pub fn reversal_partner(&self) -> SelfDualClass {
        let swap = |a: &PairAssignment| match a {
            PairAssignment::H => PairAssignment::H,
            PairAssignment::F => PairAssignment::G,
            PairAssignment::G => PairAssignment::F,
        };
        let c = &self.code;
        SelfDualClass {
            code: ACyclicCode::build(c.g(), c.f(), c.h(), c.length()).expect("swapping f and g keeps validity"),
            assignment: self.assignment.iter().map(swap).collect(),
            canonical: !self.canonical,
        }
    }
}

/// Number of reciprocal pairs t.
pub fn asymmetric_pair_count(n: usize) -> Result<usize> {
    Ok(factorize_xn_minus_1(n)?.asymmetric_pairs().len())
}

fn triple_of(fact: &Factorization, assignment: &[PairAssignment]) -> (PolyF4, PolyF4, PolyF4) {
    let mut f = PolyF4::one();
    let mut g = PolyF4::one();
    let mut h: PolyF4 = fact.self_reciprocal().iter().map(|&i| &fact.items[i].factor).product();
    for (&(i, j), a) in fact.asymmetric_pairs().iter().zip(assignment) {
        let (p, q) = (&fact.items[i].factor, &fact.items[j].factor);
        match a {
            PairAssignment::H => h = &(&h * p) * q,
            PairAssignment::F => {
                f = &f * p;
                g = &g * q;
            }
            PairAssignment::G => {
                f = &f * q;
                g = &g * p;
            }
        }
    }
    (f, g, h)
}

/// All nontrivial self-dual triples of length n, or one representative per
/// reversal class. Order: assignments counted in base 3 with the first pair
/// as the least significant digit (H < F < G).
pub fn enumerate_selfdual(n: usize, up_to_reversal: bool) -> Result<Vec<SelfDualClass>> {
    let fact = factorize_xn_minus_1(n)?;
    let t = fact.asymmetric_pairs().len();
    let total = 3usize.pow(t as u32);
    let mut out = Vec::new();
    for idx in 1..total {
        let assignment: Vec<PairAssignment> = (0..t)
            .map(|k| match idx / 3usize.pow(k as u32) % 3 {
                0 => PairAssignment::H,
                1 => PairAssignment::F,
                _ => PairAssignment::G,
            })
            .collect();
        let (f, g, h) = triple_of(&fact, &assignment);
        let canonical = f.cmp_lex(&g) == Ordering::Less;
        if up_to_reversal && !canonical {
            continue;
        }
        let code = ACyclicCode::build(&f, &g, &h, n)?;
        out.push(SelfDualClass {
            code,
            assignment,
            canonical,
        });
    }
    Ok(out)
}

/// Comparison status of a computed row against the reference tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReferenceStatus {
    Match,
    /// Differs from the printed value but equals a recorded, verified
    /// correction.
    Corrected,
    Mismatch,
    /// No reference row for this class although the length has a table.
    Absent,
    /// No reference table for this length.
    NoRef,
    /// Not compared (comparison not requested or distances missing).
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub h: String,
    pub f: String,
    pub g: String,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    #[serde(rename = "dim_T")]
    pub dim_t: usize,
    #[serde(rename = "d_R")]
    pub d_r: Option<u32>,
    #[serde(rename = "d_T")]
    pub d_t: Option<u32>,
    pub min: Option<u32>,
    #[serde(rename = "paper")]
    pub reference: ReferenceStatus,
}

/// Cost exponent of the cheaper of direct and dual enumeration.
fn cost(dim: usize, n: usize) -> usize {
    dim.min(n - dim)
}

fn distance(engine: Option<&Engine>, code: &crate::qcode::QCyclicCode) -> Option<u32> {
    let e = engine?;
    if code.dim() == 0 {
        return None;
    }
    e.min_distance(&code.to_linear()).ok()
}

/// Table rows in class order. Distances are computed when an engine is
/// given; codes above its budget get `None`. Rows are evaluated cheapest
/// first, which only affects scheduling.
pub fn table_rows(classes: &[SelfDualClass], engine: Option<&Engine>) -> Vec<TableRow> {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| {
        let c = &classes[i].code;
        let n = c.length();
        cost(c.residue().dim(), n).max(cost(c.torsion().dim(), n))
    });
    let mut rows: Vec<Option<TableRow>> = vec![None; classes.len()];
    for i in order {
        let c = &classes[i].code;
        let (res, tor) = (c.residue(), c.torsion());
        let d_r = distance(engine, &res);
        let d_t = distance(engine, &tor);
        let min = match (d_r, d_t) {
            (Some(r), Some(t)) => Some(r.min(2 * t)),
            _ => None,
        };
        rows[i] = Some(TableRow {
            n: c.length(),
            h: c.h().to_string(),
            f: c.f().to_string(),
            g: c.g().to_string(),
            dim_r: res.dim(),
            dim_t: tor.dim(),
            d_r,
            d_t,
            min,
            reference: ReferenceStatus::Unchecked,
        });
    }
    rows.into_iter().map(|r| r.expect("every row computed")).collect()
}
