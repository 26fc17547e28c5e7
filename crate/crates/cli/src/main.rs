use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use m2codes::acode::{audit_claims, ACyclicCode, AuditScope, Verdict};
use m2codes::bachoc::{bachoc_image, bachoc_weight_enumerator, doubled_cyclic_image, plotkin_image, BachocEnumerator};
use m2codes::classify::{
    compare_with_reference, enumerate_selfdual, table_rows, ReferenceComparison, ReferenceData, TableRow,
};
use m2codes::factor::{factorize_xn_minus_1, selfdual_exists, SelfDualExistence};
use m2codes::qcode::{
    is_formally_self_dual, macwilliams_transform, Engine, LinearCodeQ, QCyclicCode, WeightEnumerator,
};
use m2codes::{Error, PolyF4, F4};

const SCHEMA: u32 = 1;
const DEFAULT_CAP: u32 = 14;
const SLOW_CAP: u32 = 16;

#[derive(Parser)]
#[command(
    name = "m2codes",
    version,
    about = "Cyclic codes over M2(F2), their classification and quaternary images"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Enumeration budget exponent E: at most 4^E words per request.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=32))]
    cap: Option<u32>,
    /// Use the larger default budget (E = 16).
    #[arg(long, global = true)]
    slow: bool,
    /// Number of work partitions for the enumeration engine.
    #[arg(long, global = true, env = "M2CODES_PARTITIONS", value_parser = clap::value_parser!(u64).range(1..))]
    partitions: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 over GF(4) by cyclotomic cosets.
    Factor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Minimum distance of the quaternary cyclic code generated by a divisor of x^n - 1.
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long = "gen")]
        generator: String,
        #[arg(long)]
        json: bool,
    },
    /// Hamming weight enumerator of a quaternary cyclic code.
    Wenum {
        #[arg(long)]
        n: usize,
        #[arg(long = "gen")]
        generator: String,
        #[arg(long)]
        json: bool,
    },
    /// MacWilliams transform of a weight enumerator read from JSON.
    Macwilliams {
        #[arg(long)]
        json_file: PathBuf,
        /// Also report whether the enumerator is a fixed point.
        #[arg(long)]
        check_fsd: bool,
        #[arg(long)]
        json: bool,
    },
    /// Euclidean self-dual cyclic codes of length n.
    Classify {
        #[arg(long)]
        n: usize,
        /// List both members of every reversal pair.
        #[arg(long, conflicts_with = "up_to_reversal")]
        all: bool,
        /// One representative per reversal pair (default).
        #[arg(long)]
        up_to_reversal: bool,
        /// Compute d_R, d_T and min(2 d_T, d_R).
        #[arg(long)]
        distances: bool,
        /// Compare with the embedded reference tables (implies --distances).
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// Brute-force checks of the structural claims for one code.
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value = "fast")]
        scope: AuditScope,
        #[arg(long)]
        json: bool,
    },
    /// Bachoc image of a code: generator rows, bwe, doubled cyclic form.
    Bachoc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        image: bool,
        #[arg(long)]
        bwe: bool,
        #[arg(long)]
        doubled: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// Invalid input that is not a library error (unreadable JSON and so on).
#[derive(Debug)]
struct Precondition(String);

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Precondition {}

struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Report {
        Report { text, code: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn odd(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::ZeroLength.into())
    } else if n.is_multiple_of(2) {
        Err(Error::EvenLength(n).into())
    } else {
        Ok(n)
    }
}

fn poly(text: &str) -> Result<PolyF4> {
    text.parse::<PolyF4>()
        .with_context(|| format!("cannot parse polynomial {text:?}"))
}

fn word(v: &[F4]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn engine(cli: &Cli) -> Engine {
    let cap = cli.cap.unwrap_or(if cli.slow { SLOW_CAP } else { DEFAULT_CAP });
    let e = Engine::new(cap);
    match cli.partitions {
        Some(p) => e.with_partitions(p as usize),
        None => e,
    }
}

#[derive(Serialize)]
struct FactorEntry {
    representative: usize,
    members: Vec<usize>,
    factor: String,
    partner: usize,
}

#[derive(Serialize)]
struct FactorReport {
    schema: u32,
    n: usize,
    extension_degree: usize,
    field_modulus: String,
    factors: Vec<FactorEntry>,
    selfdual_exists: SelfDualExistence,
}

fn factor(n: usize, as_json: bool) -> Result<Report> {
    let n = odd(n)?;
    let fact = factorize_xn_minus_1(n)?;
    let report = FactorReport {
        schema: SCHEMA,
        n,
        extension_degree: fact.extension_degree,
        field_modulus: fact.field_modulus.to_string(),
        factors: fact
            .items
            .iter()
            .map(|it| FactorEntry {
                representative: it.coset.representative,
                members: it.coset.members.clone(),
                factor: it.factor.to_string(),
                partner: fact.items[it.partner].coset.representative,
            })
            .collect(),
        selfdual_exists: selfdual_exists(n)?,
    };
    if as_json {
        return Ok(Report::ok(json(&report)?));
    }
    let mut s = String::new();
    writeln!(
        s,
        "x^{n}-1 over GF(4), splitting field GF(4^{})",
        report.extension_degree
    )?;
    writeln!(s, "{:>5}  {:>7}  {:<24}  factor", "coset", "partner", "members")?;
    for e in &report.factors {
        let members = format!("{:?}", e.members);
        writeln!(
            s,
            "{:>5}  {:>7}  {:<24}  {}",
            e.representative, e.partner, members, e.factor
        )?;
    }
    match report.selfdual_exists {
        SelfDualExistence::Exists { witness } => writeln!(
            s,
            "nontrivial self-dual codes exist (coset {} is not closed under negation)",
            witness.representative
        )?,
        SelfDualExistence::Absent { power } => writeln!(s, "no nontrivial self-dual codes: 4^{power} = -1 (mod {n})")?,
    }
    Ok(Report::ok(s))
}

fn cyclic(n: usize, generator: &str) -> Result<QCyclicCode> {
    Ok(QCyclicCode::new(odd(n)?, &poly(generator)?)?)
}

#[derive(Serialize)]
struct DistanceReport {
    schema: u32,
    n: usize,
    generator: String,
    dim: usize,
    distance: u32,
}

fn distance(engine: &Engine, n: usize, generator: &str, as_json: bool) -> Result<Report> {
    let code = cyclic(n, generator)?;
    let report = DistanceReport {
        schema: SCHEMA,
        n,
        generator: code.generator().to_string(),
        dim: code.dim(),
        distance: engine.min_distance(&code.to_linear())?,
    };
    if as_json {
        return Ok(Report::ok(json(&report)?));
    }
    Ok(Report::ok(format!(
        "[{}, {}, {}] generated by {}\n",
        report.n, report.dim, report.distance, report.generator
    )))
}

#[derive(Serialize)]
struct EnumeratorReport<'a> {
    schema: u32,
    #[serde(flatten)]
    enumerator: &'a WeightEnumerator,
}

fn wenum(engine: &Engine, n: usize, generator: &str, as_json: bool) -> Result<Report> {
    let code = cyclic(n, generator)?;
    let we = engine.weight_enumerator(&code.to_linear())?;
    if as_json {
        return Ok(Report::ok(json(&EnumeratorReport {
            schema: SCHEMA,
            enumerator: &we,
        })?));
    }
    Ok(Report::ok(format!("{we}\n")))
}

#[derive(Serialize)]
struct MacWilliamsReport<'a> {
    schema: u32,
    input: &'a WeightEnumerator,
    dual: &'a WeightEnumerator,
    #[serde(skip_serializing_if = "Option::is_none")]
    formally_self_dual: Option<bool>,
}

fn macwilliams(path: &PathBuf, check_fsd: bool, as_json: bool) -> Result<Report> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let we: WeightEnumerator = serde_json::from_str(&text)
        .map_err(|e| Precondition(format!("{}: not a weight enumerator: {e}", path.display())))?;
    let dual = macwilliams_transform(&we, &we.cardinality())?;
    let fsd = if check_fsd {
        Some(is_formally_self_dual(&we)?)
    } else {
        None
    };
    if as_json {
        return Ok(Report::ok(json(&MacWilliamsReport {
            schema: SCHEMA,
            input: &we,
            dual: &dual,
            formally_self_dual: fsd,
        })?));
    }
    let mut s = format!("dual: {dual}\n");
    if let Some(f) = fsd {
        writeln!(s, "formally self-dual: {f}")?;
    }
    Ok(Report::ok(s))
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    schema: u32,
    n: usize,
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
    up_to_reversal: bool,
    records: &'a [TableRow],
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<&'a ReferenceComparison>,
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn classify(engine: &Engine, n: usize, all: bool, distances: bool, compare: bool, format: Format) -> Result<Report> {
    let n = odd(n)?;
    let existence = selfdual_exists(n)?;
    let message = match existence {
        SelfDualExistence::Absent { power } => Some(format!(
            "no nontrivial Euclidean self-dual cyclic code of length {n} exists: 4^{power} = -1 (mod {n})"
        )),
        SelfDualExistence::Exists { .. } => None,
    };
    let classes = enumerate_selfdual(n, !all)?;
    let distances = distances || compare;
    let mut rows = table_rows(&classes, distances.then_some(engine));
    let comparison = if compare {
        Some(compare_with_reference(
            &ReferenceData::embedded()?,
            n,
            &classes,
            &mut rows,
        )?)
    } else {
        None
    };
    let incomplete = distances && rows.iter().any(|r| r.min.is_none());
    let code = match &comparison {
        Some(c) if c.mismatches > 0 => 4,
        _ if incomplete => 3,
        _ => 0,
    };
    let report = ClassifyReport {
        schema: SCHEMA,
        n,
        exists: existence.exists(),
        message: message.clone(),
        up_to_reversal: !all,
        records: &rows,
        comparison: comparison.as_ref(),
    };
    let mut s = String::new();
    match format {
        Format::Json => s = json(&report)?,
        Format::Csv => {
            writeln!(s, "n,h,f,g,dim_R,dim_T,d_R,d_T,min,paper")?;
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.h,
                    r.f,
                    r.g,
                    r.dim_r,
                    r.dim_t,
                    opt(r.d_r),
                    opt(r.d_t),
                    opt(r.min),
                    serde_json::to_value(r.reference)?.as_str().unwrap_or_default()
                )?;
            }
        }
        Format::Table => {
            if let Some(m) = &message {
                writeln!(s, "{m}")?;
            }
            writeln!(s, "{} classes of length {n}", rows.len())?;
            for r in &rows {
                writeln!(s, "h = {}", r.h)?;
                writeln!(s, "  f = {}", r.f)?;
                writeln!(s, "  g = {}", r.g)?;
                writeln!(
                    s,
                    "  dim_R {}  dim_T {}  d_R {}  d_T {}  min {}  ref {}",
                    r.dim_r,
                    r.dim_t,
                    opt(r.d_r),
                    opt(r.d_t),
                    opt(r.min),
                    serde_json::to_value(r.reference)?.as_str().unwrap_or_default()
                )?;
            }
            if let Some(c) = &comparison {
                write_comparison(&mut s, c)?;
            }
        }
    }
    if incomplete {
        eprintln!(
            "some distances exceed the budget 4^{}; rerun with --slow or --cap",
            engine.cap_exp
        );
    }
    Ok(Report { text: s, code })
}

fn write_comparison(s: &mut String, c: &ReferenceComparison) -> Result<()> {
    if !c.reference {
        writeln!(s, "no reference data for length {}", c.n)?;
        return Ok(());
    }
    for fc in &c.factor_corrections {
        writeln!(
            s,
            "FACTOR-CORRECTED {}: printed {} -> {} ({})",
            fc.label, fc.printed, fc.corrected, fc.reason
        )?;
    }
    for r in &c.rows {
        let tag = serde_json::to_value(r.status)?;
        let computed = r
            .computed
            .map(|v| format!("{} {} {}", opt(v[0]), opt(v[1]), opt(v[2])))
            .unwrap_or_else(|| "-".into());
        let [a, b, m] = r.row.printed;
        writeln!(
            s,
            "{} [{}] h={} f={}: printed {a} {b} {m}, computed {computed}",
            tag.as_str().unwrap_or_default(),
            r.row.caption,
            r.row.h_label,
            r.row.f_label
        )?;
    }
    for x in &c.extra_classes {
        writeln!(s, "PAPER-ROW-ABSENT h={} f={}", x.h, x.f)?;
    }
    if let Some(g) = &c.generator {
        writeln!(
            s,
            "reference generator {}: {}",
            g.f,
            match (&g.matched_as, g.complement_self_dual) {
                (Some(how), _) => format!("found (as {how})"),
                (None, Some(false)) => "not found; with its complementary factor it is not a self-dual triple".into(),
                (None, _) => "not found".into(),
            }
        )?;
    }
    writeln!(s, "{} value mismatches", c.mismatches)?;
    Ok(())
}

fn triple(n: usize, f: &str, h: &str) -> Result<ACyclicCode> {
    Ok(ACyclicCode::from_f_h(odd(n)?, &poly(f)?, &poly(h)?)?)
}

fn audit(n: usize, f: &str, h: &str, scope: AuditScope, as_json: bool) -> Result<Report> {
    let code = triple(n, f, h)?;
    let report = audit_claims(&code, scope)?;
    if as_json {
        return Ok(Report::ok(json(&report)?));
    }
    let mut s = format!("{code}  scope {scope}\n");
    for c in &report.claims {
        let v = match c.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        };
        writeln!(s, "{v:4}  {}  [{}]  {}", c.id, c.instance, c.detail)?;
        for w in c.counterexample.iter().flatten() {
            writeln!(s, "        {w}")?;
        }
    }
    writeln!(
        s,
        "{} pass, {} fail, {} skip",
        report.count(Verdict::Pass),
        report.count(Verdict::Fail),
        report.count(Verdict::Skip)
    )?;
    Ok(Report::ok(s))
}

#[derive(Serialize)]
struct ImageReport {
    length: usize,
    dim: usize,
    rows: Vec<String>,
    equals_swapped_plotkin_sum: bool,
}

#[derive(Serialize)]
struct DoubledReport {
    generator: String,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    same_weight_enumerator: Option<bool>,
}

#[derive(Serialize)]
struct BachocReport<'a> {
    schema: u32,
    n: usize,
    f: String,
    g: String,
    h: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<ImageReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bwe: Option<&'a BachocEnumerator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_weight_enumerator: Option<&'a WeightEnumerator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    doubled: Option<DoubledReport>,
}

fn rows_of(code: &LinearCodeQ) -> Vec<String> {
    code.rows().iter().map(|r| word(r)).collect()
}

fn bachoc(engine: &Engine, n: usize, f: &str, h: &str, sel: [bool; 3], as_json: bool) -> Result<Report> {
    let code = triple(n, f, h)?;
    let [mut want_image, want_bwe, mut want_doubled] = sel;
    if !want_image && !want_bwe && !want_doubled {
        want_image = true;
        want_doubled = true;
    }
    let img = bachoc_image(&code);
    let image = want_image
        .then(|| -> Result<ImageReport> {
            Ok(ImageReport {
                length: img.length(),
                dim: img.dim(),
                rows: rows_of(&img),
                equals_swapped_plotkin_sum: plotkin_image(&code)? == img,
            })
        })
        .transpose()?;
    let bwe = want_bwe.then(|| bachoc_weight_enumerator(&code, engine)).transpose()?;
    let image_we = bwe.as_ref().map(|b| b.substitution());
    let doubled = want_doubled
        .then(|| -> Result<DoubledReport> {
            let d = doubled_cyclic_image(&code);
            let same = match &image_we {
                Some(w) => Some(&engine.weight_enumerator(&d.to_linear())? == w),
                None => None,
            };
            Ok(DoubledReport {
                generator: d.generator().to_string(),
                dim: d.dim(),
                same_weight_enumerator: same,
            })
        })
        .transpose()?;
    let report = BachocReport {
        schema: SCHEMA,
        n: code.length(),
        f: code.f().to_string(),
        g: code.g().to_string(),
        h: code.h().to_string(),
        image,
        bwe: bwe.as_ref(),
        image_weight_enumerator: image_we.as_ref(),
        doubled,
    };
    if as_json {
        return Ok(Report::ok(json(&report)?));
    }
    let mut s = format!("{code}\n");
    if let Some(im) = &report.image {
        writeln!(
            s,
            "image: [{}, {}], swapped Plotkin sum: {}",
            im.length, im.dim, im.equals_swapped_plotkin_sum
        )?;
        for r in &im.rows {
            writeln!(s, "  {r}")?;
        }
    }
    if let Some(b) = report.bwe {
        writeln!(s, "bwe: {b}")?;
    }
    if let Some(w) = report.image_weight_enumerator {
        writeln!(s, "W(image): {w}")?;
    }
    if let Some(d) = &report.doubled {
        write!(s, "doubled: generator {}, dim {}", d.generator, d.dim)?;
        if let Some(same) = d.same_weight_enumerator {
            write!(s, ", same weight enumerator: {same}")?;
        }
        s.push('\n');
    }
    Ok(Report::ok(s))
}

fn run(cli: &Cli) -> Result<Report> {
    let e = engine(cli);
    match &cli.command {
        Command::Factor { n, json } => factor(*n, *json),
        Command::Distance { n, generator, json } => distance(&e, *n, generator, *json),
        Command::Wenum { n, generator, json } => wenum(&e, *n, generator, *json),
        Command::Macwilliams {
            json_file,
            check_fsd,
            json,
        } => macwilliams(json_file, *check_fsd, *json),
        Command::Classify {
            n,
            all,
            up_to_reversal: _,
            distances,
            compare,
            format,
            json,
        } => classify(
            &e,
            *n,
            *all,
            *distances,
            *compare,
            if *json { Format::Json } else { *format },
        ),
        Command::Audit { n, f, h, scope, json } => audit(*n, f, h, *scope, *json),
        Command::Bachoc {
            n,
            f,
            h,
            image,
            bwe,
            doubled,
            json,
        } => bachoc(&e, *n, f, h, [*image, *bwe, *doubled], *json),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.chain().find_map(|c| c.downcast_ref::<Error>()) {
        return match e {
            Error::Budget { .. } => 3,
            Error::Inconsistent(_) | Error::Data(_) => 1,
            _ => 2,
        };
    }
    if err.chain().any(|c| c.is::<Precondition>()) {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{}", report.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(report.code)
}
