//! MacWilliams transform against duals found by scanning the whole space.

use m2codes::qcode::{macwilliams_transform, Engine, QCyclicCode, WeightEnumerator};
use m2codes::{PolyF4, F4};

fn all_words(n: usize) -> impl Iterator<Item = Vec<F4>> {
    (0..4usize.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let c = F4::from_bits((k % 4) as u8);
                k /= 4;
                c
            })
            .collect()
    })
}

fn weight(v: &[F4]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

fn dot(a: &[F4], b: &[F4]) -> F4 {
    a.iter().zip(b).fold(F4::ZERO, |s, (&x, &y)| s + x * y)
}

/// Monic divisors of x^n - 1 found by trial division of every monic
/// polynomial of degree at most n.
fn divisors(n: usize) -> Vec<PolyF4> {
    let target = PolyF4::xn_minus_1(n);
    let mut out = Vec::new();
    for d in 0..=n {
        for mut low in all_words(d) {
            low.push(F4::ONE);
            let p = PolyF4::from_coeffs(low);
            if p.divides(&target) {
                out.push(p);
            }
        }
    }
    out
}

fn enumerator_by_scan(n: usize, keep: impl Fn(&[F4]) -> bool) -> WeightEnumerator {
    let mut counts = vec![0u64; n + 1];
    for v in all_words(n) {
        if keep(&v) {
            counts[weight(&v)] += 1;
        }
    }
    WeightEnumerator::from_u64(n, &counts).unwrap()
}

#[test]
fn transform_equals_scanned_dual() {
    let engine = Engine::new(14);
    for n in [3, 5, 7] {
        let divs = divisors(n);
        assert_eq!(divs.len(), 8, "x^{n}-1 has three irreducible factors");
        for g in divs {
            let code = QCyclicCode::new(n, &g).unwrap();
            let rows = code.generator_rows();
            let lin = code.to_linear();
            let we = enumerator_by_scan(n, |v| lin.contains(v));
            assert_eq!(we, engine.weight_enumerator_direct(&lin).unwrap(), "n={n} g={g}");
            let dual = enumerator_by_scan(n, |v| rows.iter().all(|r| dot(r, v).is_zero()));
            assert_eq!(
                macwilliams_transform(&we, &we.cardinality()).unwrap(),
                dual,
                "n={n} g={g}"
            );
            assert_eq!(
                engine.weight_enumerator(&code.dual().to_linear()).unwrap(),
                dual,
                "n={n} g={g}"
            );
        }
    }
}
