//! Embedded reference tables and the row-by-row comparison against them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{ReferenceStatus, SelfDualClass, TableRow};
use crate::error::{Error, Result};
use crate::poly::PolyF4;

const EMBEDDED: &str = include_str!("../../data/reference_tables.toml");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawData {
    schema: u32,
    length: Vec<RawLength>,
    #[serde(default)]
    generator: Vec<RawGenerator>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLength {
    n: usize,
    #[serde(default)]
    factors: BTreeMap<String, String>,
    #[serde(default)]
    factor_corrections: BTreeMap<String, RawCorrection>,
    table: Vec<RawTable>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCorrection {
    corrected: String,
    reason: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    caption: String,
    h_base: Option<String>,
    f_prefix: Option<String>,
    rows: Vec<RawRow>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRow {
    column: Option<String>,
    h: String,
    f: String,
    #[serde(rename = "d_R")]
    d_r: u32,
    #[serde(rename = "d_T")]
    d_t: u32,
    min: u32,
    corrected: Option<RawValues>,
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawValues {
    #[serde(rename = "d_R")]
    d_r: u32,
    #[serde(rename = "d_T")]
    d_t: u32,
    min: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    n: usize,
    h: String,
    f: String,
}

/// (d_R, d_T, min(2 d_T, d_R)).
pub type Values = [u32; 3];

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceRow {
    pub caption: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<String>,
    pub h_label: String,
    pub f_label: String,
    pub h: PolyF4,
    pub f: PolyF4,
    pub printed: Values,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<Values>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorCorrection {
    pub label: String,
    pub printed: PolyF4,
    pub corrected: PolyF4,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
struct LengthData {
    /// Named factors as printed.
    factors: BTreeMap<String, PolyF4>,
    corrections: Vec<FactorCorrection>,
    rows: Vec<ReferenceRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceGenerator {
    pub n: usize,
    pub h: PolyF4,
    pub f: PolyF4,
}

/// Parsed reference data.
#[derive(Clone, Debug)]
pub struct ReferenceData {
    lengths: BTreeMap<usize, LengthData>,
    generators: BTreeMap<usize, ReferenceGenerator>,
}

fn poly(text: &str) -> Result<PolyF4> {
    text.parse().map_err(|e| Error::Data(format!("{text:?}: {e}")))
}

/// Resolves "1", a polynomial, or a product of names like "f1f2*".
fn resolve(label: &str, names: &BTreeMap<String, PolyF4>) -> Result<PolyF4> {
    if label == "1" {
        return Ok(PolyF4::one());
    }
    if !label.starts_with('f') {
        return poly(label);
    }
    let mut acc = PolyF4::one();
    let bytes = label.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'f' {
            return Err(Error::Data(format!("bad factor label {label:?}")));
        }
        let mut j = i + 1;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        let name = &label[i..j];
        let p = names
            .get(name)
            .ok_or_else(|| Error::Data(format!("unknown factor {name:?} in {label:?}")))?;
        if j < bytes.len() && bytes[j] == b'*' {
            acc = &acc * &p.reciprocal()?;
            j += 1;
        } else {
            acc = &acc * p;
        }
        i = j;
    }
    Ok(acc)
}

impl ReferenceData {
    /// The tables shipped with the crate.
    pub fn embedded() -> Result<ReferenceData> {
        ReferenceData::parse(EMBEDDED)
    }

    pub fn parse(text: &str) -> Result<ReferenceData> {
        let raw: RawData = toml::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
        if raw.schema != 1 {
            return Err(Error::Data(format!("unsupported schema {}", raw.schema)));
        }
        let mut lengths = BTreeMap::new();
        for len in raw.length {
            let mut data = LengthData::default();
            for (k, v) in &len.factors {
                data.factors.insert(k.clone(), poly(v)?);
            }
            let mut names = data.factors.clone();
            for (label, c) in &len.factor_corrections {
                let printed = data
                    .factors
                    .get(label)
                    .cloned()
                    .ok_or_else(|| Error::Data(format!("correction for unknown factor {label}")))?;
                let corrected = poly(&c.corrected)?;
                names.insert(label.clone(), corrected.clone());
                data.corrections.push(FactorCorrection {
                    label: label.clone(),
                    printed,
                    corrected,
                    reason: c.reason.clone(),
                });
            }
            for t in &len.table {
                let base = resolve(t.h_base.as_deref().unwrap_or("1"), &names)?;
                let prefix = resolve(t.f_prefix.as_deref().unwrap_or("1"), &names)?;
                for r in &t.rows {
                    data.rows.push(ReferenceRow {
                        caption: t.caption.clone(),
                        column: r.column.clone(),
                        h_label: r.h.clone(),
                        f_label: r.f.clone(),
                        h: &base * &resolve(&r.h, &names)?,
                        f: &prefix * &resolve(&r.f, &names)?,
                        printed: [r.d_r, r.d_t, r.min],
                        corrected: r.corrected.as_ref().map(|c| [c.d_r, c.d_t, c.min]),
                        note: r.note.clone(),
                    });
                }
            }
            if lengths.insert(len.n, data).is_some() {
                return Err(Error::Data(format!("length {} listed twice", len.n)));
            }
        }
        let mut generators = BTreeMap::new();
        for g in raw.generator {
            generators.insert(
                g.n,
                ReferenceGenerator {
                    n: g.n,
                    h: poly(&g.h)?,
                    f: poly(&g.f)?,
                },
            );
        }
        Ok(ReferenceData { lengths, generators })
    }

    /// Lengths with full tables.
    pub fn table_lengths(&self) -> Vec<usize> {
        self.lengths.keys().copied().collect()
    }

    pub fn rows(&self, n: usize) -> &[ReferenceRow] {
        self.lengths.get(&n).map(|d| d.rows.as_slice()).unwrap_or(&[])
    }

    /// Named factors as printed, before corrections.
    pub fn printed_factors(&self, n: usize) -> Vec<(String, PolyF4)> {
        self.lengths
            .get(&n)
            .map(|d| d.factors.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
            .unwrap_or_default()
    }

    pub fn factor_corrections(&self, n: usize) -> &[FactorCorrection] {
        self.lengths.get(&n).map(|d| d.corrections.as_slice()).unwrap_or(&[])
    }

    pub fn generator(&self, n: usize) -> Option<&ReferenceGenerator> {
        self.generators.get(&n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum RowStatus {
    Match,
    /// Computed values equal the recorded correction, not the printed ones.
    Corrected,
    ValueMismatch,
    #[serde(rename = "PAPER-ROW-ABSENT")]
    RowAbsent,
    /// The class exists but its distances were not computed.
    Uncomputed,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceRowResult {
    #[serde(flatten)]
    pub row: ReferenceRow,
    pub computed: Option<[Option<u32>; 3]>,
    pub status: RowStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub h: PolyF4,
    pub f: PolyF4,
    pub found: bool,
    /// "f", "g", or "conjugate" when only the coefficient-conjugate matches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_as: Option<String>,
    /// g = (x^n - 1) / (f h) when f h divides x^n - 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<PolyF4>,
    /// Whether (f, complement, h) satisfies h = h* and g = f*.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_self_dual: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtraClass {
    pub h: String,
    pub f: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceComparison {
    pub n: usize,
    pub reference: bool,
    pub factor_corrections: Vec<FactorCorrection>,
    pub rows: Vec<ReferenceRowResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorCheck>,
    pub extra_classes: Vec<ExtraClass>,
    pub mismatches: usize,
}

impl ReferenceComparison {
    pub fn count(&self, s: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == s).count()
    }
}

fn same_class(c: &SelfDualClass, h: &PolyF4, f: &PolyF4) -> bool {
    c.code.h() == h && (c.code.f() == f || c.code.g() == f)
}

/// Matches reference rows against `classes` (aligned with `rows`) and sets
/// each row's `reference` status.
pub fn compare_with_reference(
    data: &ReferenceData,
    n: usize,
    classes: &[SelfDualClass],
    rows: &mut [TableRow],
) -> Result<ReferenceComparison> {
    if classes.len() != rows.len() {
        return Err(Error::LengthMismatch {
            left: classes.len(),
            right: rows.len(),
        });
    }
    let has_table = data.lengths.contains_key(&n);
    let reference_gen = data.generator(n);
    let mut matched = vec![false; classes.len()];
    let mut results = Vec::new();
    for prow in data.rows(n) {
        let hit = classes.iter().position(|c| same_class(c, &prow.h, &prow.f));
        let (computed, status) = match hit {
            None => (None, RowStatus::RowAbsent),
            Some(i) => {
                matched[i] = true;
                let r = &rows[i];
                let computed = [r.d_r, r.d_t, r.min];
                let status = match (r.d_r, r.d_t, r.min) {
                    (Some(a), Some(b), Some(c)) => {
                        let v = [a, b, c];
                        if v == prow.printed {
                            RowStatus::Match
                        } else if prow.corrected == Some(v) {
                            RowStatus::Corrected
                        } else {
                            RowStatus::ValueMismatch
                        }
                    }
                    _ => RowStatus::Uncomputed,
                };
                rows[i].reference = match status {
                    RowStatus::Match => ReferenceStatus::Match,
                    RowStatus::Corrected => ReferenceStatus::Corrected,
                    RowStatus::ValueMismatch => ReferenceStatus::Mismatch,
                    _ => ReferenceStatus::Unchecked,
                };
                (Some(computed), status)
            }
        };
        results.push(ReferenceRowResult {
            row: prow.clone(),
            computed,
            status,
        });
    }
    let generator = reference_gen.map(|g| {
        let conj = g.f.frobenius();
        let mut matched_as = None;
        for (i, c) in classes.iter().enumerate() {
            if c.code.h() != &g.h {
                continue;
            }
            let how = if c.code.f() == &g.f {
                Some("f")
            } else if c.code.g() == &g.f {
                Some("g")
            } else if c.code.f() == &conj || c.code.g() == &conj {
                Some("conjugate")
            } else {
                None
            };
            if let Some(how) = how {
                matched[i] = true;
                rows[i].reference = ReferenceStatus::Match;
                matched_as.get_or_insert_with(|| how.to_string());
            }
        }
        let fh = &g.f * &g.h;
        let complement = PolyF4::xn_minus_1(n).exact_div(&fh).ok();
        let complement_self_dual = complement
            .as_ref()
            .and_then(|c| crate::acode::ACyclicCode::build(&g.f, c, &g.h, n).ok())
            .map(|code| code.is_self_dual_triple());
        GeneratorCheck {
            h: g.h.clone(),
            f: g.f.clone(),
            found: matched_as.is_some(),
            matched_as,
            complement,
            complement_self_dual,
        }
    });
    let mut extra = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        if matched[i] {
            continue;
        }
        if has_table || reference_gen.is_some() {
            rows[i].reference = ReferenceStatus::Absent;
            extra.push(ExtraClass {
                h: c.code.h().to_string(),
                f: c.code.f().to_string(),
            });
        } else {
            rows[i].reference = ReferenceStatus::NoRef;
        }
    }
    let mismatches = results.iter().filter(|r| r.status == RowStatus::ValueMismatch).count();
    Ok(ReferenceComparison {
        n,
        reference: has_table || reference_gen.is_some(),
        factor_corrections: data.factor_corrections(n).to_vec(),
        rows: results,
        generator,
        extra_classes: extra,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_parses() {
        let d = ReferenceData::embedded().unwrap();
        assert_eq!(d.table_lengths(), vec![3, 7, 11, 15, 21, 27, 31]);
        assert_eq!(d.rows(15).len(), 13);
        assert_eq!(d.rows(21).len(), 21);
        assert_eq!(d.rows(31).len(), 13);
        assert!(d.generator(19).is_some());
        assert!(d.rows(9).is_empty());
        let r = &d.rows(15)[1];
        let f1: PolyF4 = "x^2+x+w".parse().unwrap();
        let f2: PolyF4 = "x^2+x+w^2".parse().unwrap();
        let f3s: PolyF4 = "x+w^2".parse().unwrap();
        assert_eq!(r.f, &(&f1 * &f2) * &f3s);
        assert_eq!(r.h, "x^5+1".parse().unwrap());
    }

    #[test]
    fn label_resolution() {
        let names = BTreeMap::from([("f1".to_string(), "x+w".parse::<PolyF4>().unwrap())]);
        assert_eq!(resolve("1", &names).unwrap(), PolyF4::one());
        assert_eq!(resolve("f1f1*", &names).unwrap(), "x^2+x+1".parse().unwrap());
        assert!(resolve("f2", &names).is_err());
        assert_eq!(resolve("x+1", &names).unwrap(), "x+1".parse().unwrap());
    }
}
