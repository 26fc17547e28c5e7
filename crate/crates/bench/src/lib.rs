//! Fixtures shared by the benchmarks.

use m2codes::acode::ACyclicCode;
use m2codes::classify::enumerate_selfdual;
use m2codes::qcode::{LinearCodeQ, QCyclicCode};
use m2codes::PolyF4;

fn p(s: &str) -> PolyF4 {
    s.parse().expect("fixture polynomial")
}

/// First reversal class of length n.
pub fn first_class(n: usize) -> ACyclicCode {
    enumerate_selfdual(n, true).expect("odd length")[0].code.clone()
}

/// [31, k] cyclic code generated by (x+1) and the given number of quintic
/// factors (k = 30 - 5 * quintics).
pub fn length31(quintics: usize) -> LinearCodeQ {
    let factors = [
        "x^5+x^2+1",
        "x^5+x^3+x^2+x+1",
        "x^5+x^4+x^2+x+1",
        "x^5+x^3+1",
        "x^5+x^4+x^3+x^2+1",
    ];
    let gen = factors[..quintics].iter().fold(p("x+1"), |acc, f| &acc * &p(f));
    QCyclicCode::new(31, &gen).expect("divisor of x^31-1").to_linear()
}
