//! Command-line interface: constructor ingestion, shift/adjacency/Betti
//! computation, and the verification pipeline over single inputs or the
//! built-in corpus.
//!
//! Exit codes are stable: 0 success, 1 verification checks failed,
//! 2 malformed input (JSON, file I/O, flag syntax), 3 ideal validation or
//! linear-quotients failure, 4 non-matroidal input where a matroid is
//! required, 5 ground set over the oracle cap.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use matshift::betti_oracle::{betti_table_oracle, ORACLE_MAX_VARS};
use matshift::corpus::{self, Family};
use matshift::ideal::{IdealError, IdealParseError};
use matshift::linear_quotients::{verify_theorem, LinearQuotientsError, LinearQuotientsOrder};
use matshift::matroid::{GraphicSpec, MatroidSpec, MultiGraph, TransversalSpec};
use matshift::{GroundSet, Matroid, MonomialIdeal, SquarefreeMonomial};

const EXIT_CHECKS_FAILED: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_NOT_MATROIDAL: u8 = 4;
const EXIT_ORACLE_CAP: u8 = 5;

#[derive(Parser)]
#[command(
    name = "matshift",
    version,
    about = "Matroidal ideals, multigraded shift ideals, adjacency ideals, and Betti tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute shift ideals J_ell with their Betti multiplicities
    Shifts {
        #[command(flatten)]
        input: InputArgs,
        /// Homological degrees to print: a single "L" or a range "A..B"
        #[arg(long, value_name = "A[..B]")]
        ell: Option<String>,
        /// Emit JSON instead of tables
        #[arg(long)]
        json: bool,
    },
    /// Compute the adjacency ideal
    Adjacency {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check that every shift ideal is matroidal and equals the iterated
    /// adjacency ideal, over one input or the generated corpus
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Corpus family: uniform | graphic | transversal | all
        #[arg(long, value_name = "FAMILY")]
        corpus: Option<String>,
        /// Bound on the ground set for the uniform corpus family
        #[arg(long, default_value_t = corpus::DEFAULT_MAX_N, value_name = "K")]
        max_n: u32,
        /// Cross-check Betti tables against the homology oracle
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the linear-quotients Betti table, optionally the homology
    /// oracle table, and their diff
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit a matroid or ideal JSON document from a constructor
    Gen {
        #[command(flatten)]
        input: InputArgs,
        /// Document kind to emit
        #[arg(long, value_enum, default_value_t = EmitKind::Matroid)]
        emit: EmitKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitKind {
    Matroid,
    Ideal,
}

#[derive(Args)]
struct InputArgs {
    /// Ideal document: a path or inline JSON {"n":3,"generators":[[1,2],...]}
    #[arg(long, value_name = "PATH|JSON")]
    ideal: Option<String>,
    /// Uniform matroid U_{r,n}, written "r,n"
    #[arg(long, value_name = "R,N")]
    uniform: Option<String>,
    /// Graphic matroid: a path or inline JSON {"vertices":4,"edges":[[1,2],...]}
    #[arg(long, value_name = "PATH|JSON")]
    graphic: Option<String>,
    /// Transversal matroid: a path or inline JSON {"n":3,"sets":[[1,2],...]}
    #[arg(long, value_name = "PATH|JSON")]
    transversal: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Shifts { input, ell, json } => cmd_shifts(&input, ell.as_deref(), json),
        Command::Adjacency { input, json } => cmd_adjacency(&input, json),
        Command::Verify { input, corpus, max_n, oracle, json } => {
            cmd_verify(&input, corpus.as_deref(), max_n, oracle, json)
        }
        Command::Betti { input, oracle, json } => cmd_betti(&input, oracle, json),
        Command::Gen { input, emit } => cmd_gen(&input, emit),
    }
}

/// Reads inline JSON (anything starting with `{`) or a file path.
fn read_source(value: &str) -> Result<String, Failure> {
    if value.trim_start().starts_with('{') {
        return Ok(value.to_string());
    }
    std::fs::read_to_string(value)
        .map_err(|e| Failure::new(EXIT_MALFORMED, format!("cannot read {value}: {e}")))
}

fn parse_graphic(source: &str) -> Result<Matroid, Failure> {
    let spec: GraphicSpec = serde_json::from_str(source)
        .map_err(|e| Failure::new(EXIT_MALFORMED, format!("malformed graph document: {e}")))?;
    let graph = MultiGraph::new(spec.vertices, spec.edges)
        .map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))?;
    Matroid::graphic(&graph).map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))
}

fn parse_transversal(source: &str) -> Result<Matroid, Failure> {
    let spec: TransversalSpec = serde_json::from_str(source).map_err(|e| {
        Failure::new(EXIT_MALFORMED, format!("malformed set-system document: {e}"))
    })?;
    MatroidSpec::Transversal { transversal: spec }
        .build()
        .map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))
}

fn parse_uniform(value: &str) -> Result<Matroid, Failure> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    let parsed = match parts[..] {
        [r, n] => r.parse::<u32>().ok().zip(n.parse::<u32>().ok()),
        _ => None,
    };
    let Some((r, n)) = parsed else {
        return Err(Failure::new(
            EXIT_MALFORMED,
            format!("--uniform expects \"r,n\", got {value:?}"),
        ));
    };
    let ground = GroundSet::new(n).map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))?;
    Matroid::uniform(r, ground).map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))
}

/// Resolves the input flags to a matroid when a constructor flag was given.
fn resolve_matroid(input: &InputArgs) -> Result<Option<Matroid>, Failure> {
    let mut found: Option<Matroid> = None;
    let mut count = 0;
    if let Some(v) = &input.uniform {
        found = Some(parse_uniform(v)?);
        count += 1;
    }
    if let Some(v) = &input.graphic {
        found = Some(parse_graphic(&read_source(v)?)?);
        count += 1;
    }
    if let Some(v) = &input.transversal {
        found = Some(parse_transversal(&read_source(v)?)?);
        count += 1;
    }
    if count > 1 || (count == 1 && input.ideal.is_some()) {
        return Err(Failure::new(
            EXIT_MALFORMED,
            "give exactly one of --ideal, --uniform, --graphic, --transversal",
        ));
    }
    Ok(found)
}

/// Resolves the input flags to an ideal.
fn resolve_ideal(input: &InputArgs) -> Result<MonomialIdeal, Failure> {
    if let Some(matroid) = resolve_matroid(input)? {
        return Ok(MonomialIdeal::from_matroid(&matroid));
    }
    let Some(source) = &input.ideal else {
        return Err(Failure::new(
            EXIT_MALFORMED,
            "no input: give one of --ideal, --uniform, --graphic, --transversal",
        ));
    };
    MonomialIdeal::from_json(&read_source(source)?).map_err(|e| match e {
        IdealParseError::Json(err) => {
            Failure::new(EXIT_MALFORMED, format!("malformed ideal document: {err}"))
        }
        IdealParseError::Invalid(err) => Failure::new(EXIT_VALIDATION, err.to_string()),
    })
}

fn linear_quotients(ideal: &MonomialIdeal) -> Result<LinearQuotientsOrder, Failure> {
    LinearQuotientsOrder::new_lex(ideal).map_err(|e| match &e {
        LinearQuotientsError::Violation { .. } => Failure::new(
            EXIT_VALIDATION,
            format!("linear quotients fail under the lexicographic order\n{e}"),
        ),
        _ => Failure::new(EXIT_VALIDATION, e.to_string()),
    })
}

/// The shift and adjacency commands require an equigenerated nonzero ideal.
fn require_equigenerated(ideal: &MonomialIdeal) -> Result<(), Failure> {
    if ideal.is_zero() {
        return Err(Failure::new(EXIT_VALIDATION, IdealError::ZeroIdeal.to_string()));
    }
    if ideal.degree().is_none() {
        return Err(Failure::new(EXIT_VALIDATION, IdealError::NotEquigenerated.to_string()));
    }
    Ok(())
}

fn parse_ell_range(value: &str, projdim: u32) -> Result<(u32, u32), Failure> {
    let bad =
        || Failure::new(EXIT_MALFORMED, format!("--ell expects \"a\" or \"a..b\", got {value:?}"));
    let (lo, hi) = match value.split_once("..") {
        None => {
            let v = value.trim().parse::<u32>().map_err(|_| bad())?;
            (v, v)
        }
        Some((a, b)) => {
            let lo = a.trim().parse::<u32>().map_err(|_| bad())?;
            let hi = b.trim().parse::<u32>().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            (lo, hi)
        }
    };
    if hi > projdim {
        eprintln!("warning: --ell {value} clamped to 0..={projdim} (the projective dimension)");
    }
    Ok((lo.min(projdim), hi.min(projdim)))
}

fn betti_line(slice: &[(SquarefreeMonomial, u64)]) -> String {
    slice.iter().map(|(a, mult)| format!("{a} ({mult})")).collect::<Vec<_>>().join(", ")
}

fn cmd_shifts(input: &InputArgs, ell: Option<&str>, as_json: bool) -> CmdResult {
    let ideal = resolve_ideal(input)?;
    require_equigenerated(&ideal)?;
    let lq = linear_quotients(&ideal)?;
    let projdim = lq.projdim();
    let (lo, hi) = match ell {
        None => (0, projdim),
        Some(range) => parse_ell_range(range, projdim)?,
    };
    if as_json {
        let levels: Vec<serde_json::Value> = (lo..=hi)
            .map(|ell| {
                let slice = lq.shifts(ell);
                json!({
                    "ell": ell,
                    "J": slice.ideal.generators().iter().map(|g| g.indices()).collect::<Vec<_>>(),
                    "betti": slice.multiplicities.iter()
                        .map(|(a, mult)| json!({"a": a.indices(), "mult": mult}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({
            "ideal": ideal.generators().iter().map(|g| g.indices()).collect::<Vec<_>>(),
            "n": ideal.ground().size(),
            "projdim": projdim,
            "levels": levels,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("ideal: {ideal}");
        println!("projdim: {projdim}");
        for ell in lo..=hi {
            let slice = lq.shifts(ell);
            println!("J_{ell} = {}", slice.ideal);
            println!("  betti_{ell}: {}", betti_line(&slice.multiplicities));
        }
    }
    Ok(())
}

fn cmd_adjacency(input: &InputArgs, as_json: bool) -> CmdResult {
    let ideal = resolve_ideal(input)?;
    require_equigenerated(&ideal)?;
    let adjacency =
        ideal.adjacency_ideal().map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))?;
    if as_json {
        println!("{}", adjacency.to_json());
    } else {
        println!("A(I) = {adjacency}");
    }
    Ok(())
}

struct VerifyOutcome {
    name: String,
    report: matshift::TheoremReport,
    oracle_diff: Option<usize>,
}

fn verify_one(
    name: &str,
    ideal: &MonomialIdeal,
    with_oracle: bool,
) -> Result<VerifyOutcome, Failure> {
    let report = verify_theorem(ideal);
    let oracle_diff = if with_oracle && report.applicable {
        if ideal.ground().size() > ORACLE_MAX_VARS {
            return Err(Failure::new(
                EXIT_ORACLE_CAP,
                format!(
                    "{name}: ground set {} exceeds the oracle cap {ORACLE_MAX_VARS}",
                    ideal.ground().size()
                ),
            ));
        }
        let lq = linear_quotients(ideal)?;
        let oracle = betti_table_oracle(ideal)
            .map_err(|e| Failure::new(EXIT_ORACLE_CAP, e.to_string()))?;
        Some(lq.betti_table().diff(&oracle).len())
    } else {
        None
    };
    Ok(VerifyOutcome { name: name.to_string(), report, oracle_diff })
}

fn cmd_verify(
    input: &InputArgs,
    corpus_family: Option<&str>,
    max_n: u32,
    oracle: bool,
    as_json: bool,
) -> CmdResult {
    let mut targets: Vec<(String, MonomialIdeal)> = Vec::new();
    if let Some(family_name) = corpus_family {
        let Some(family) = Family::parse(family_name) else {
            return Err(Failure::new(
                EXIT_MALFORMED,
                format!("unknown corpus family {family_name:?} (uniform|graphic|transversal|all)"),
            ));
        };
        for member in corpus::corpus(family, max_n) {
            targets.push((member.name.clone(), member.ideal()));
        }
    } else {
        let ideal = resolve_ideal(input)?;
        // A single non-matroidal input is a usage error, not a failed check.
        if let Err(IdealError::NotMatroidal(witness)) = ideal.is_matroidal() {
            return Err(Failure::new(
                EXIT_NOT_MATROIDAL,
                format!("input is not matroidal: {witness}"),
            ));
        }
        targets.push(("input".to_string(), ideal));
    }

    let mut outcomes = Vec::new();
    for (name, ideal) in &targets {
        outcomes.push(verify_one(name, ideal, oracle)?);
    }
    let all_passed =
        outcomes.iter().all(|o| o.report.all_passed() && o.oracle_diff.unwrap_or(0) == 0);

    if as_json {
        let entries: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.name,
                    "report": serde_json::to_value(&o.report).expect("serializable"),
                    "oracle_diff_entries": o.oracle_diff,
                })
            })
            .collect();
        let doc = json!({"results": entries, "all_passed": all_passed});
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for o in &outcomes {
            println!("== {}", o.name);
            print!("{}", o.report.render());
            if let Some(diff) = o.oracle_diff {
                if diff == 0 {
                    println!("oracle: tables agree");
                } else {
                    println!("oracle: {diff} entries differ");
                }
            }
            println!();
        }
        println!(
            "verified {} ideal(s): {}",
            outcomes.len(),
            if all_passed { "all checks passed" } else { "CHECKS FAILED" }
        );
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::new(EXIT_CHECKS_FAILED, "verification checks failed"))
    }
}

fn cmd_betti(input: &InputArgs, oracle: bool, as_json: bool) -> CmdResult {
    let ideal = resolve_ideal(input)?;
    if ideal.is_zero() {
        return Err(Failure::new(EXIT_VALIDATION, IdealError::ZeroIdeal.to_string()));
    }
    if oracle && ideal.ground().size() > ORACLE_MAX_VARS {
        return Err(Failure::new(
            EXIT_ORACLE_CAP,
            format!("ground set {} exceeds the oracle cap {ORACLE_MAX_VARS}", ideal.ground().size()),
        ));
    }
    let lq = linear_quotients(&ideal)?;
    let table = lq.betti_table();
    let oracle_table = if oracle {
        Some(betti_table_oracle(&ideal).map_err(|e| Failure::new(EXIT_ORACLE_CAP, e.to_string()))?)
    } else {
        None
    };
    let diff = oracle_table.as_ref().map(|o| table.diff(o));

    if as_json {
        let mut doc = serde_json::Map::new();
        doc.insert(
            "linear_quotients".into(),
            serde_json::from_str(&table.to_json()).expect("round-trip"),
        );
        if let Some(o) = &oracle_table {
            doc.insert("oracle".into(), serde_json::from_str(&o.to_json()).expect("round-trip"));
        }
        if let Some(d) = &diff {
            let entries: Vec<serde_json::Value> = d
                .iter()
                .map(|e| {
                    json!({
                        "i": e.i,
                        "a": e.a.indices(),
                        "linear_quotients": e.left,
                        "oracle": e.right,
                    })
                })
                .collect();
            doc.insert("diff".into(), json!(entries));
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Object(doc)).expect("serializable")
        );
    } else {
        println!("ideal: {ideal}");
        println!("linear quotients table:");
        print!("{}", table.render());
        if let Some(o) = &oracle_table {
            println!("oracle table:");
            print!("{}", o.render());
        }
        if let Some(d) = &diff {
            if d.is_empty() {
                println!("diff: tables agree");
            } else {
                println!("diff:");
                let mut lines = String::new();
                for e in d {
                    let _ = writeln!(
                        lines,
                        "  i={} a={}  linear-quotients {} vs oracle {}",
                        e.i, e.a, e.left, e.right
                    );
                }
                print!("{lines}");
            }
        }
    }
    if diff.is_none_or(|d| d.is_empty()) {
        Ok(())
    } else {
        Err(Failure::new(EXIT_CHECKS_FAILED, "Betti tables disagree"))
    }
}

fn cmd_gen(input: &InputArgs, emit: EmitKind) -> CmdResult {
    let matroid = match resolve_matroid(input)? {
        Some(matroid) => matroid,
        None => {
            let ideal = resolve_ideal(input)?;
            ideal.is_matroidal().map_err(|e| match e {
                IdealError::NotMatroidal(w) => {
                    Failure::new(EXIT_NOT_MATROIDAL, format!("input is not matroidal: {w}"))
                }
                other => Failure::new(EXIT_VALIDATION, other.to_string()),
            })?
        }
    };
    match emit {
        EmitKind::Matroid => println!("{}", matroid.to_json()),
        EmitKind::Ideal => println!("{}", MonomialIdeal::from_matroid(&matroid).to_json()),
    }
    Ok(())
}
