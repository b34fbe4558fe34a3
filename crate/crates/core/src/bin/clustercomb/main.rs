use clap::{Args, Parser, Subcommand, ValueEnum};
use clustercomb::counting::{
    enumerate_angulations, enumerate_diagrams, enumerate_plane_trees, enumerate_trees,
    fuss_catalan, CountFamily,
};
use clustercomb::dispatch::{map_json, MapError, MAPS};
use clustercomb::induction::{apply_steps, normal_form, orbit, InductionError, InductionStep};
use clustercomb::verify::{run_suite, VerifyError};
use clustercomb::{CircularOrder, ColouredTree, SizeLimitExceeded, WorkLimit};
use num_bigint::BigUint;
use std::io::{Read, Write};
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "clustercomb", version, about = "Coloured trees, diagrams and m-angulations")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of exact counts as TSV.
    Count(CountArgs),
    /// List every object of a family as JSON lines.
    Enumerate(EnumerateArgs),
    /// Apply a named bijection to a JSON object.
    Map(MapArgs),
    /// Apply induction moves to a tree.
    Induct(InductArgs),
    /// All trees reachable from a tree by adjacent induction moves.
    Orbit(InputArg),
    /// Run an exhaustive self-check suite.
    Verify(VerifyArgs),
    /// Render an object in another format.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "T")]
    T,
    #[value(name = "S")]
    S,
    #[value(name = "U")]
    U,
    /// Fuss-Catalan numbers; `--m` gives the degree.
    Fuss,
}

#[derive(Args)]
struct CountArgs {
    family: Family,
    #[arg(long, default_value_t = 6)]
    kmax: usize,
    #[arg(long)]
    kmin: Option<usize>,
    /// Values of m (repeat or separate by commas).
    #[arg(long = "m", value_delimiter = ',', default_values_t = [3, 4, 5, 6])]
    m: Vec<usize>,
    /// Print the bundled reference table recomputed from the formulas and
    /// exit with status 2 if any cell disagrees.
    #[arg(long)]
    check_tables: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trees,
    Diagrams,
    Angulations,
    PlaneTrees,
}

#[derive(Args)]
struct EnumerateArgs {
    kind: Kind,
    #[arg(long)]
    k: usize,
    #[arg(long = "m")]
    m: usize,
    /// Keep only trees with this circular order, e.g. "(3 2 1)".
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    noncrossing: bool,
    /// Print only the number of objects.
    #[arg(long)]
    count_only: bool,
}

#[derive(Args)]
struct InputArg {
    /// JSON input file; `-` reads standard input.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct MapArgs {
    /// Map name, e.g. diagram->forest or family:2->6.
    name: Option<String>,
    #[command(flatten)]
    input: InputArg,
    /// List the available maps.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct InductArgs {
    #[command(flatten)]
    input: InputArg,
    /// JSON array of steps `{"kind":"R","i":1,"j":2,"chain":[1,2,3]}`.
    #[arg(long, conflicts_with = "normal_form")]
    steps: Option<String>,
    /// Reduce to colours S_1 and S_m, printing the tree and the moves used.
    #[arg(long)]
    normal_form: bool,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long = "m", default_value_t = 3)]
    m: usize,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Args)]
struct ExportArgs {
    format: Format,
    #[command(flatten)]
    input: InputArg,
}

/// An error carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(m: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: m.to_string(),
        }
    }

    fn invalid(m: impl ToString) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: m.to_string(),
        }
    }
}

impl From<SizeLimitExceeded> for Failure {
    fn from(e: SizeLimitExceeded) -> Self {
        Failure::usage(e)
    }
}

impl From<InductionError> for Failure {
    fn from(e: InductionError) -> Self {
        match e {
            InductionError::SizeLimit(s) => s.into(),
            other => Failure::invalid(other),
        }
    }
}

impl From<MapError> for Failure {
    fn from(e: MapError) -> Self {
        match e {
            MapError::UnknownMap(_) => Failure::usage(e),
            _ => Failure::invalid(e),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_tree(input: &InputArg) -> Result<ColouredTree, Failure> {
    ColouredTree::from_json(&read_input(&input.input)?).map_err(Failure::invalid)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Count(a) => count(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Map(a) => map(a, &mut out),
        Command::Induct(a) => induct(a, &mut out),
        Command::Orbit(a) => run_orbit(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Export(a) => export(a, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn count(a: CountArgs, out: &mut impl Write) -> Outcome {
    let fam = match a.family {
        Family::T => Some(CountFamily::T),
        Family::S => Some(CountFamily::S),
        Family::U => Some(CountFamily::U),
        Family::Fuss => None,
    };
    if a.check_tables {
        let f = fam.ok_or_else(|| Failure::usage("--check-tables needs T, S or U"))?;
        let table = f.table();
        write!(out, "m")?;
        for k in &table.ks {
            write!(out, "\tk={k}")?;
        }
        writeln!(out)?;
        for (m, _) in &table.rows {
            write!(out, "{m}")?;
            for &k in &table.ks {
                write!(out, "\t{}", f.count(k, *m))?;
            }
            writeln!(out)?;
        }
        let bad = table.mismatches(f);
        if !bad.is_empty() {
            for (k, m, want, got) in &bad {
                eprintln!("mismatch at k={k}, m={m}: reference {want}, formula {got}");
            }
            return Err(Failure {
                code: EXIT_MISMATCH,
                message: format!("{} cells disagree with the reference table", bad.len()),
            });
        }
        return Ok(());
    }
    let kmin = a.kmin.unwrap_or(match a.family {
        Family::U => 1,
        _ => 0,
    });
    if kmin > a.kmax {
        return Err(Failure::usage("--kmin exceeds --kmax"));
    }
    for &m in &a.m {
        let ok = match a.family {
            Family::Fuss => m >= 1,
            _ => m >= 2,
        };
        if !ok {
            return Err(Failure::usage(format!("m = {m} is out of range for this family")));
        }
    }
    if matches!(a.family, Family::U) && kmin == 0 {
        return Err(Failure::usage("U is defined for k >= 1"));
    }
    write!(out, "m")?;
    for k in kmin..=a.kmax {
        write!(out, "\tk={k}")?;
    }
    writeln!(out)?;
    for &m in &a.m {
        write!(out, "{m}")?;
        for k in kmin..=a.kmax {
            let v: BigUint = match fam {
                Some(f) => f.count(k, m),
                None => fuss_catalan(k, m),
            };
            write!(out, "\t{v}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn print_all<T: serde::Serialize>(items: &[T], count_only: bool, out: &mut impl Write) -> Outcome {
    if count_only {
        writeln!(out, "{}", items.len())?;
    } else {
        for x in items {
            writeln!(out, "{}", serde_json::to_string(x).expect("objects serialise"))?;
        }
    }
    Ok(())
}

fn enumerate(a: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let limit = WorkLimit::from_env();
    if a.k == 0 {
        return Err(Failure::usage("--k must be at least 1"));
    }
    match a.kind {
        Kind::Trees => {
            if a.m == 0 {
                return Err(Failure::usage("--m must be at least 1"));
            }
            let order = a
                .order
                .as_deref()
                .map(|s| CircularOrder::parse_cycles(s, Some(a.k)))
                .transpose()
                .map_err(Failure::usage)?;
            print_all(&enumerate_trees(a.k, a.m, order.as_ref(), limit)?, a.count_only, out)
        }
        Kind::Diagrams => {
            if a.m == 0 {
                return Err(Failure::usage("--m must be at least 1"));
            }
            let d = enumerate_diagrams(a.k, a.m, a.connected, a.noncrossing, limit)?;
            print_all(&d, a.count_only, out)
        }
        Kind::Angulations => {
            if a.m < 3 {
                return Err(Failure::usage("angulations need --m at least 3"));
            }
            print_all(&enumerate_angulations(a.k, a.m, limit)?, a.count_only, out)
        }
        Kind::PlaneTrees => {
            if a.m < 2 {
                return Err(Failure::usage("plane trees have m - 1 children, so --m must be at least 2"));
            }
            print_all(&enumerate_plane_trees(a.k, a.m - 1, limit)?, a.count_only, out)
        }
    }
}

fn map(a: MapArgs, out: &mut impl Write) -> Outcome {
    if a.list {
        for (name, what) in MAPS {
            writeln!(out, "{name}\t{what}")?;
        }
        return Ok(());
    }
    let name = a.name.ok_or_else(|| Failure::usage("missing map name; use --list"))?;
    let input = read_input(&a.input.input)?;
    writeln!(out, "{}", map_json(&name, &input)?)?;
    Ok(())
}

fn induct(a: InductArgs, out: &mut impl Write) -> Outcome {
    let tree = read_tree(&a.input)?;
    if a.normal_form {
        let (g, steps) = normal_form(&tree);
        let v = serde_json::json!({ "tree": g, "steps": steps });
        writeln!(out, "{v}")?;
        return Ok(());
    }
    let steps_json = a
        .steps
        .ok_or_else(|| Failure::usage("give --steps or --normal-form"))?;
    let steps: Vec<InductionStep> = serde_json::from_str(&steps_json).map_err(Failure::invalid)?;
    let g = apply_steps(&tree, &steps)?;
    writeln!(out, "{}", g.to_json())?;
    Ok(())
}

fn run_orbit(a: InputArg, out: &mut impl Write) -> Outcome {
    let tree = read_tree(&a)?;
    let o = orbit(&tree, WorkLimit::from_env())?;
    let v = serde_json::json!({ "size": o.len(), "orbit": o });
    writeln!(out, "{v}")?;
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut impl Write) -> Outcome {
    if a.k == 0 {
        return Err(Failure::usage("--k must be at least 1"));
    }
    let report = run_suite(&a.suite, a.k, a.m, WorkLimit::from_env())?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("reports serialise"))?;
    } else {
        for c in &report.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "{tag}  {}", c.name)?;
            } else {
                writeln!(out, "{tag}  {} ({})", c.name, c.detail)?;
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("suite {} failed", report.suite),
        })
    }
}

fn export(a: ExportArgs, out: &mut impl Write) -> Outcome {
    let input = read_input(&a.input.input)?;
    match a.format {
        Format::Dot => {
            let dot = clustercomb::dot::json_to_dot(&input).map_err(Failure::invalid)?;
            write!(out, "{dot}")?;
        }
    }
    Ok(())
}
