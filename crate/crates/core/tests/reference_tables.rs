//! Distance tables against the embedded reference data.

use m2codes::classify::{
    compare_with_reference, enumerate_selfdual, table_rows, ReferenceData, ReferenceStatus, RowStatus,
};
use m2codes::factor::{factorize_xn_minus_1, selfdual_exists};
use m2codes::qcode::Engine;
use m2codes::PolyF4;

fn p(s: &str) -> PolyF4 {
    s.parse().unwrap()
}

#[test]
fn tables_through_27_match() {
    let data = ReferenceData::embedded().unwrap();
    let engine = Engine::new(14);
    for (n, printed, extra) in [(3, 1, 0), (7, 1, 0), (11, 1, 0), (15, 13, 0), (21, 21, 19), (27, 13, 0)] {
        let classes = enumerate_selfdual(n, true).unwrap();
        let mut rows = table_rows(&classes, Some(&engine));
        let cmp = compare_with_reference(&data, n, &classes, &mut rows).unwrap();
        assert_eq!(cmp.rows.len(), printed, "n = {n}");
        assert_eq!(cmp.count(RowStatus::Match), printed, "n = {n}");
        assert_eq!(cmp.extra_classes.len(), extra, "n = {n}");
        assert_eq!(cmp.mismatches, 0);
        let absent = rows.iter().filter(|r| r.reference == ReferenceStatus::Absent).count();
        assert_eq!(absent, extra);
    }
}

#[test]
fn named_factors_divide() {
    let data = ReferenceData::embedded().unwrap();
    for n in [15, 21, 27] {
        let fact = factorize_xn_minus_1(n).unwrap();
        for (_, f) in data.printed_factors(n) {
            assert!(fact.index_of(&f).is_some(), "n = {n}: {f}");
            assert!(fact.index_of(&f.reciprocal().unwrap()).is_some());
        }
    }
    // n = 31: f3 as printed is reducible; its recorded correction is a factor
    let fact = factorize_xn_minus_1(31).unwrap();
    let printed = p("x^5+x^2+x+1");
    assert_eq!(printed, &p("x+1").pow(2) * &p("x^3+x+1"));
    assert!(!printed.divides(&PolyF4::xn_minus_1(31)));
    let corr = &data.factor_corrections(31)[0];
    assert_eq!(corr.printed, printed);
    assert!(fact.index_of(&corr.corrected).is_some());
}

#[test]
fn reference_generators() {
    let data = ReferenceData::embedded().unwrap();
    for (n, found) in [(19, true), (23, true), (29, false)] {
        let classes = enumerate_selfdual(n, true).unwrap();
        let mut rows = table_rows(&classes, None);
        let g = compare_with_reference(&data, n, &classes, &mut rows)
            .unwrap()
            .generator
            .unwrap();
        assert_eq!(g.found, found, "n = {n}");
    }
    // the length-29 factor is self-reciprocal and 4^7 = -1 (mod 29)
    let g29 = data.generator(29).unwrap();
    assert!(g29.f.is_self_reciprocal());
    assert!(!selfdual_exists(29).unwrap().exists());
}
