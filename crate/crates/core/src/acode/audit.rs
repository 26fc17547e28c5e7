//! Brute-force checks of structural claims about a single code over A.
//!
//! Every verdict is computed from the codeword set or the ambient space,
//! never from the triple formulas being checked. Linear questions (closure,
//! annihilators) are answered exactly by F2 linear algebra on packed
//! vectors; the `full` scope adds literal scans over the ambient space for
//! small lengths, which double-check the linear-algebra answers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::acode::{euclidean_form, hermitian_form, residue_from_set, torsion_from_set, ACyclicCode, AVector};
use crate::algebra::{AElem, F4};
use crate::bachoc::{bachoc_map, bwe_macwilliams, BachocEnumerator};
use crate::error::{Error, Result};
use crate::factor::{order_of_4, selfdual_exists};
use crate::gf2::{kernel, F2Space};

pub const AUDIT_SCHEMA: u32 = 1;

/// Largest number of form evaluations a literal scan may perform (2^24).
const LITERAL_BUDGET_LOG2: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditScope {
    Fast,
    Full,
}

impl FromStr for AuditScope {
    type Err = Error;
    fn from_str(s: &str) -> Result<AuditScope> {
        match s {
            "fast" => Ok(AuditScope::Fast),
            "full" => Ok(AuditScope::Full),
            _ => Err(Error::parse(0, format!("unknown audit scope {s:?}"))),
        }
    }
}

impl fmt::Display for AuditScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditScope::Fast => "fast",
            AuditScope::Full => "full",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub instance: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub schema: u32,
    pub n: usize,
    pub f: String,
    pub g: String,
    pub h: String,
    pub scope: AuditScope,
    pub self_dual_triple: bool,
    pub claims: Vec<Claim>,
}

impl AuditReport {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == v).count()
    }

    /// True when every failing claim carries a counterexample.
    pub fn failures_have_witnesses(&self) -> bool {
        self.claims
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .all(|c| c.counterexample.as_ref().is_some_and(|w| !w.is_empty()))
    }
}

/// Which argument of the form ranges over the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Order {
    /// {y : B(x, y) = 0 for all x in C}
    CodeLeft,
    /// {y : B(y, x) = 0 for all x in C}
    CodeRight,
}

impl Order {
    fn tag(self) -> &'static str {
        match self {
            Order::CodeLeft => "code-left",
            Order::CodeRight => "code-right",
        }
    }
}

type Form = fn(&AVector, &AVector) -> Result<AElem>;

fn eval(form: Form, order: Order, x: &AVector, y: &AVector) -> AElem {
    let r = match order {
        Order::CodeLeft => form(x, y),
        Order::CodeRight => form(y, x),
    };
    r.expect("equal lengths")
}

fn ambient_basis(n: usize) -> Vec<u128> {
    (0..4)
        .flat_map(|q| (0..n).map(move |j| 1u128 << (32 * q + j)))
        .collect()
}

/// Annihilator of C under `form` as an F2 space.
fn annihilator(code_basis: &[AVector], n: usize, form: Form, order: Order) -> F2Space {
    let mut v = ambient_basis(n);
    for x in code_basis {
        v = kernel(&v, |y| eval(form, order, x, &AVector::unpack(y, n)).bits() as u128);
    }
    F2Space::span(v)
}

struct Ctx<'a> {
    code: &'a ACyclicCode,
    n: usize,
    instance: String,
    basis: Vec<AVector>,
    space: F2Space,
    claims: Vec<Claim>,
}

impl Ctx<'_> {
    fn push(
        &mut self,
        id: impl Into<String>,
        statement: &str,
        verdict: Verdict,
        detail: String,
        cex: Option<Vec<String>>,
    ) {
        // counting claims have no vector witness; the computed numbers are it
        let cex = match (verdict, cex) {
            (Verdict::Fail, None) => Some(vec![detail.clone()]),
            (_, cex) => cex,
        };
        self.claims.push(Claim {
            id: id.into(),
            statement: statement.into(),
            instance: self.instance.clone(),
            verdict,
            detail,
            counterexample: cex,
        });
    }

    fn contains(&self, v: &AVector) -> bool {
        self.space.contains(v.pack().expect("length checked"))
    }

    fn vec(&self, bits: u128) -> String {
        AVector::unpack(bits, self.n).to_string()
    }

    /// First basis vector whose image under `op` leaves C.
    fn closure_witness(&self, op: impl Fn(&AVector) -> AVector) -> Option<Vec<String>> {
        self.basis.iter().find_map(|x| {
            let y = op(x);
            (!self.contains(&y)).then(|| vec![format!("x = {x}"), format!("image = {y}")])
        })
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Runs every applicable check on `code`.
pub fn audit_claims(code: &ACyclicCode, scope: AuditScope) -> Result<AuditReport> {
    let n = code.length();
    let space = code.f2_space()?;
    let mut ctx = Ctx {
        code,
        n,
        instance: code.to_string(),
        basis: code.f2_basis(),
        space,
        claims: Vec::new(),
    };
    cardinality_claims(&mut ctx, scope);
    closure_claims(&mut ctx);
    residue_torsion_claims(&mut ctx)?;
    duality_claims(&mut ctx, scope)?;
    hermitian_claims(&mut ctx);
    chain_claims(&mut ctx);
    existence_claim(&mut ctx)?;
    Ok(AuditReport {
        schema: AUDIT_SCHEMA,
        n,
        f: code.f().to_string(),
        g: code.g().to_string(),
        h: code.h().to_string(),
        scope,
        self_dual_triple: code.is_self_dual_triple(),
        claims: ctx.claims,
    })
}

fn cardinality_claims(ctx: &mut Ctx, scope: AuditScope) {
    let e = ctx.code.cardinality_exp();
    let dim = ctx.space.dim();
    ctx.push(
        "cardinality",
        "|C| = 4^(2 deg g + deg h)",
        verdict(dim == 2 * e),
        format!("F2-dimension {dim}, expected {}", 2 * e),
        None,
    );
    if scope == AuditScope::Full {
        match ctx.code.codewords(LITERAL_BUDGET_LOG2) {
            Ok(words) => {
                let distinct: BTreeSet<u128> = words.iter().map(|w| w.pack().expect("n <= 32")).collect();
                let all_in = words.iter().all(|w| ctx.code.contains(w));
                ctx.push(
                    "cardinality-literal",
                    "listing C gives 4^(2 deg g + deg h) distinct words, all accepted by the generator test",
                    verdict(distinct.len() == 1usize << (2 * e) && all_in),
                    format!("{} distinct words", distinct.len()),
                    None,
                );
            }
            Err(_) => ctx.push(
                "cardinality-literal",
                "listing C gives 4^(2 deg g + deg h) distinct words",
                Verdict::Skip,
                format!("|C| = 4^{e} exceeds the listing budget"),
                None,
            ),
        }
    }
}

fn closure_claims(ctx: &mut Ctx) {
    let cex = ctx.closure_witness(|x| x.shift());
    ctx.push(
        "shift-closure",
        "C is closed under the cyclic shift",
        verdict(cex.is_none()),
        String::new(),
        cex,
    );
    for (side, stmt) in [
        ("right", "C is closed under right multiplication by s"),
        ("left", "C is closed under left multiplication by s"),
    ] {
        for s in AElem::all() {
            let cex = if side == "right" {
                ctx.closure_witness(|x| x.right_mul(s))
            } else {
                ctx.closure_witness(|x| x.left_mul(s))
            };
            ctx.push(
                format!("{side}-scalar-closure[{s}]"),
                stmt,
                verdict(cex.is_none()),
                format!("s = {s}"),
                cex,
            );
        }
    }
}

fn residue_torsion_claims(ctx: &mut Ctx) -> Result<()> {
    let res = residue_from_set(ctx.code);
    let tor = torsion_from_set(ctx.code)?;
    let res_gen = ctx.code.residue().to_linear();
    let tor_gen = ctx.code.torsion().to_linear();
    ctx.push(
        "residue-set-level",
        "the first u-coordinate projection of C is the cyclic code generated by f*h",
        verdict(res == res_gen),
        format!(
            "projection dimension {}, generator dimension {}",
            res.dim(),
            res_gen.dim()
        ),
        (res != res_gen).then(|| vec![format!("projection rows {:?}", res.rows())]),
    );
    ctx.push(
        "torsion-set-level",
        "the largest D with u*D inside C is the cyclic code generated by f",
        verdict(tor == tor_gen),
        format!(
            "set-level dimension {}, generator dimension {}",
            tor.dim(),
            tor_gen.dim()
        ),
        (tor != tor_gen).then(|| vec![format!("set-level rows {:?}", tor.rows())]),
    );
    Ok(())
}

fn duality_claims(ctx: &mut Ctx, scope: AuditScope) -> Result<()> {
    let n = ctx.n;
    let pred = ctx.code.predicted_dual();
    ctx.push(
        "dual-cardinality",
        "|C| * |predicted dual| = 16^n",
        verdict(ctx.code.cardinality_exp() + pred.cardinality_exp() == 2 * n),
        format!(
            "exponents {} + {} (base 4)",
            ctx.code.cardinality_exp(),
            pred.cardinality_exp()
        ),
        None,
    );
    ctx.push(
        "dual-involution",
        "the predicted dual of the predicted dual is C",
        verdict(pred.predicted_dual() == *ctx.code),
        String::new(),
        None,
    );
    ctx.push(
        "self-dual-triple",
        "(h = h* and g = f*) iff the predicted dual is C",
        verdict(ctx.code.is_self_dual_triple() == (pred == *ctx.code)),
        format!("self-dual triple: {}", ctx.code.is_self_dual_triple()),
        None,
    );
    let pred_space = pred.f2_space()?;
    for order in [Order::CodeLeft, Order::CodeRight] {
        let ann = annihilator(&ctx.basis, n, euclidean_form, order);
        let ok = ann == pred_space;
        let cex = if ok {
            None
        } else if let Some(v) = ann.witness_outside(&pred_space) {
            Some(vec![format!("in annihilator, not in predicted dual: {}", ctx.vec(v))])
        } else {
            pred_space
                .witness_outside(&ann)
                .map(|v| vec![format!("in predicted dual, not in annihilator: {}", ctx.vec(v))])
        };
        ctx.push(
            format!("predicted-dual[{}]", order.tag()),
            "the Euclidean annihilator of C equals the code of the triple (g*, f*, h*)",
            verdict(ok),
            format!(
                "annihilator 2^{}, predicted dual 2^{}, intersection 2^{}",
                ann.dim(),
                pred_space.dim(),
                intersection_dim(&ann, &pred_space)
            ),
            cex,
        );
        if scope == AuditScope::Full {
            literal_annihilator_claim(ctx, &ann, order);
            bwe_dual_claim(ctx, &ann, order);
        }
    }
    if ctx.code.is_self_dual_triple() {
        let mut cex = None;
        'outer: for x in &ctx.basis {
            for y in &ctx.basis {
                let v = euclidean_form(x, y)?;
                if !v.is_zero() {
                    cex = Some(vec![format!("x = {x}"), format!("y = {y}"), format!("E(x, y) = {v}")]);
                    break 'outer;
                }
            }
        }
        ctx.push(
            "euclidean-self-orthogonal",
            "E(x, y) = 0 for all x, y in C",
            verdict(cex.is_none()),
            String::new(),
            cex,
        );
    } else {
        ctx.push(
            "euclidean-self-orthogonal",
            "E(x, y) = 0 for all x, y in C",
            Verdict::Skip,
            "triple is not self-dual".into(),
            None,
        );
    }
    Ok(())
}

fn intersection_dim(a: &F2Space, b: &F2Space) -> usize {
    let mut sum = a.clone();
    for &v in b.basis() {
        sum.insert(v);
    }
    a.dim() + b.dim() - sum.dim()
}

fn literal_annihilator_claim(ctx: &mut Ctx, ann: &F2Space, order: Order) {
    let n = ctx.n;
    let id = format!("literal-annihilator[{}]", order.tag());
    let stmt = "scanning all of A^n against all codewords reproduces the annihilator";
    let e = ctx.code.cardinality_exp();
    if 4 * n + 2 * e > LITERAL_BUDGET_LOG2 as usize {
        ctx.push(
            id,
            stmt,
            Verdict::Skip,
            format!("16^{n} * 4^{e} products exceed the scan budget"),
            None,
        );
        return;
    }
    let words = ctx.code.codewords(LITERAL_BUDGET_LOG2).expect("within budget");
    let mut found = 0u64;
    let mut cex = None;
    for bits in 0u128..(1u128 << (4 * n)) {
        // spread the 4n scan bits over the packed planes
        let mut y = 0u128;
        for q in 0..4 {
            y |= (bits >> (q * n) & ((1u128 << n) - 1)) << (32 * q);
        }
        let yv = AVector::unpack(y, n);
        let orth = words.iter().all(|x| eval(euclidean_form, order, x, &yv).is_zero());
        if orth {
            found += 1;
        }
        if orth != ann.contains(y) && cex.is_none() {
            cex = Some(vec![format!("y = {yv}"), format!("scan says orthogonal: {orth}")]);
        }
    }
    let ok = cex.is_none() && found == 1u64 << ann.dim();
    ctx.push(id, stmt, verdict(ok), format!("{found} orthogonal vectors found"), cex);
}

fn bwe_dual_claim(ctx: &mut Ctx, ann: &F2Space, order: Order) {
    let id = format!("bwe-dual-transform[{}]", order.tag());
    let stmt = "the Bachoc MacWilliams transform of bwe(C) is the bwe of the annihilator";
    let n = ctx.n;
    let (Ok(c), Ok(a)) = (
        BachocEnumerator::from_f2_space(&ctx.space, n, LITERAL_BUDGET_LOG2),
        BachocEnumerator::from_f2_space(ann, n, LITERAL_BUDGET_LOG2),
    ) else {
        ctx.push(
            id,
            stmt,
            Verdict::Skip,
            "enumeration exceeds the listing budget".into(),
            None,
        );
        return;
    };
    match bwe_macwilliams(&c, &c.cardinality()) {
        Ok(t) => {
            let ok = t == a;
            ctx.push(
                id,
                stmt,
                verdict(ok),
                format!("transform {t}, annihilator {a}"),
                (!ok).then(|| vec![format!("transform = {t}"), format!("annihilator bwe = {a}")]),
            );
        }
        Err(e) => ctx.push(
            id,
            stmt,
            Verdict::Fail,
            format!("transform failed: {e}"),
            Some(vec![format!("bwe(C) = {c}")]),
        ),
    }
}

fn hermitian_claims(ctx: &mut Ctx) {
    let n = ctx.n;
    for order in [Order::CodeLeft, Order::CodeRight] {
        let ann = annihilator(&ctx.basis, n, hermitian_form, order);
        let equal = ann == ctx.space;
        let id = format!("not-hermitian-self-dual[{}]", order.tag());
        let stmt = "C differs from its Hermitian annihilator";
        let detail = format!("Hermitian annihilator 2^{}, |C| = 2^{}", ann.dim(), ctx.space.dim());
        if ctx.code.is_trivial() {
            ctx.push(
                id,
                stmt,
                Verdict::Skip,
                format!("trivial triple; equal: {equal}; {detail}"),
                None,
            );
        } else {
            let cex = equal.then(|| {
                vec![format!(
                    "C equals its Hermitian annihilator; basis vector {}",
                    ctx.basis[0]
                )]
            });
            ctx.push(id, stmt, verdict(!equal), detail, cex);
        }
    }

    // (a + b i) conj(a' + b' i) = (a conj(a') + b conj(b')) + (b a' + a b') i,
    // with elements written with i on the right
    let right = |a: F4, b: F4| AElem::new(a, b.conj());
    let mut cex = None;
    'all: for a in F4::ALL {
        for b in F4::ALL {
            for a2 in F4::ALL {
                for b2 in F4::ALL {
                    let lhs = right(a, b) * right(a2, b2).conj();
                    let rhs = right(a * a2.conj() + b * b2.conj(), b * a2 + a * b2);
                    if lhs != rhs {
                        cex = Some(vec![format!("a={a} b={b} a'={a2} b'={b2}")]);
                        break 'all;
                    }
                }
            }
        }
    }
    ctx.push(
        "hermitian-expansion",
        "(a+bi) conj(a'+b'i) = a conj(a') + b conj(b') + (b a' + a b') i",
        verdict(cex.is_none()),
        "checked on all 256 pairs".into(),
        cex,
    );

    // self-orthogonality transfer through the Bachoc map
    let mut premise_cex = None;
    'p: for x in &ctx.basis {
        for y in &ctx.basis {
            let v = hermitian_form(x, y).expect("equal lengths");
            if !v.is_zero() {
                premise_cex = Some(format!("H({x}, {y}) = {v}"));
                break 'p;
            }
        }
    }
    let stmt = "if C is Hermitian self-orthogonal then its Bachoc image is self-orthogonal for sum x_j y_j^2";
    match premise_cex {
        Some(w) => ctx.push(
            "hermitian-transfer",
            stmt,
            Verdict::Skip,
            format!("premise fails: {w}"),
            None,
        ),
        None => {
            let mut cex = None;
            'c: for x in &ctx.basis {
                for y in &ctx.basis {
                    let (px, py) = (bachoc_map(x), bachoc_map(y));
                    let v = px.iter().zip(&py).fold(F4::ZERO, |acc, (&a, &b)| acc + a * b * b);
                    if !v.is_zero() {
                        cex = Some(vec![format!("x = {x}"), format!("y = {y}")]);
                        break 'c;
                    }
                }
            }
            ctx.push("hermitian-transfer", stmt, verdict(cex.is_none()), String::new(), cex);
        }
    }
}

/// All 67 additive subgroups of A as 16-bit membership masks.
fn additive_subgroups() -> Vec<u16> {
    let mut seen: BTreeSet<u16> = BTreeSet::from([1u16]);
    let mut frontier = vec![1u16];
    while let Some(s) = frontier.pop() {
        for e in 0..16u8 {
            if s >> e & 1 == 1 {
                continue;
            }
            let mut t = s;
            for x in 0..16u8 {
                if s >> x & 1 == 1 {
                    t |= 1 << (x ^ e);
                }
            }
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

fn chain_claims(ctx: &mut Ctx) {
    let n = ctx.n;
    let subgroups = additive_subgroups();
    let members = |s: u16| (0..16u8).filter(move |e| s >> e & 1 == 1).map(AElem::from_bits);
    for alpha in [F4::ONE, F4::W, F4::W2] {
        if alpha.pow(n as u64) != F4::ONE {
            continue;
        }
        let al = AElem::scalar(alpha);
        // x + alpha divides x^n - 1; in the quotient by x + alpha, x acts as alpha
        for (scalars_right, x_left, label) in [
            (true, true, "right A-module, x acting on the left"),
            (true, false, "right A-module, x acting on the right"),
            (false, true, "left A-module, x acting on the left"),
            (false, false, "left A-module, x acting on the right"),
        ] {
            let subs: Vec<u16> = subgroups
                .iter()
                .copied()
                .filter(|&s| {
                    members(s).all(|e| {
                        let xe = if x_left { al * e } else { e * al };
                        let inside = |v: AElem| s >> v.bits() & 1 == 1;
                        inside(xe) && AElem::all().all(|c| inside(if scalars_right { e * c } else { c * e }))
                    })
                })
                .collect();
            let chain = subs.iter().all(|&a| subs.iter().all(|&b| a & b == a || a & b == b));
            let list: Vec<String> = subs
                .iter()
                .map(|&s| {
                    let els: Vec<String> = members(s).map(|e| e.to_string()).collect();
                    format!("{{{}}}", els.join(", "))
                })
                .collect();
            let conv = if scalars_right { "right" } else { "left" };
            let side = if x_left { "xl" } else { "xr" };
            ctx.push(
                format!("chain[x+{alpha};{conv};{side}]"),
                "the submodules of A[x]/(x + alpha) form a chain",
                verdict(chain),
                format!("{label}: {} submodules", subs.len()),
                (!chain).then_some(list),
            );
        }
    }
}

fn existence_claim(ctx: &mut Ctx) -> Result<()> {
    let n = ctx.n;
    let ord = order_of_4(n)?;
    let exists = selfdual_exists(n)?.exists();
    let odd = ord % 2 == 1;
    let detail = format!("ord_n(4) = {ord}; nontrivial self-dual triples exist: {exists}");
    ctx.push(
        "existence-order-parity",
        "self-dual triples exist at length n iff ord_n(4) is odd",
        verdict(exists == odd),
        detail.clone(),
        (exists != odd).then(|| vec![format!("n = {n}"), detail]),
    );
    Ok(())
}
