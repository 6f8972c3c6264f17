//! Command-line front end: `classify`, `vectors`, `hsop` and `homology`.
//!
//! Exit codes: 0 completed, 2 usage error, 3 input error, 4 a resource cap
//! was hit (an `UNKNOWN` verdict or `CAP_REACHED`), 1 anything else.

mod cache;
mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cmcheck::{classify_complex_with, classify_triangular_with, CheckLimits};
use crate::complexes::{
    f_vector, h_vector, independence_complex, read_complex, triangular_complex,
    triangular_f_closed, write_complex, FVector, SimplicialComplex,
};
use crate::graphs::{independence_number, is_unmixed, parse_edge_list, triangular, Graph};
use crate::homology::{reduced_betti_table, FieldSpec};
use crate::ideals::{
    default_degree_cap, hsop, verify_regular_with, HsopKind, RationalMode, VerifyOptions,
};
use crate::Error;

pub use cache::{Cache, TOOL_VERSION};
pub use report::{
    BettiReport, DegreeReport, FormReport, GraphSummary, HsopReport, InputDescriptor, Report,
    TermReport, VerdictReport, VerifyReport, WitnessReport,
};

/// Largest face count of `Δ(n)` for which `vectors --closed-form` also
/// enumerates faces, and `classify --triangular` enumerates maximal
/// independent sets to report unmixedness.
pub const ENUMERATION_FACE_LIMIT: u64 = 2_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "tricm",
    version,
    about = "Cohen-Macaulay tests for independence complexes of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the independence complex is Cohen-Macaulay
    Classify(ClassifyArgs),
    /// Print the f- and h-vectors of the independence complex
    Vectors(VectorsArgs),
    /// Print a system of parameters and optionally verify it is regular
    Hsop(HsopArgs),
    /// Reduced homology of an independence complex or a complex file
    Homology(HomologyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::Vectors(_) => "vectors",
            Command::Hsop(_) => "hsop",
            Command::Homology(_) => "homology",
        }
    }

    fn output(&self) -> &OutputArgs {
        match self {
            Command::Classify(a) => &a.output,
            Command::Vectors(a) => &a.output,
            Command::Hsop(a) => &a.output,
            Command::Homology(a) => &a.output,
        }
    }
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Use the triangular graph T_N
    #[arg(long, value_name = "N")]
    pub triangular: Option<usize>,
    /// Read an edge list
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ComplexSource {
    /// Use the independence complex of T_N
    #[arg(long, value_name = "N")]
    pub triangular: Option<usize>,
    /// Use the independence complex of an edge-list graph
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Read a complex file
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// Write the JSON report here ("-" for stdout instead of the text summary)
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Reuse and store finished computations in this directory
    #[arg(long, value_name = "DIR", env = "TRICM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Field characteristic, 0 or a prime (repeatable)
    #[arg(long = "char", value_name = "P", default_value = "0")]
    pub chars: Vec<FieldSpec>,
    /// Always run the full Reisner check and cross-check any shortcut
    #[arg(long)]
    pub full: bool,
    /// Give up (UNKNOWN) on complexes with more faces than this
    #[arg(long, value_name = "COUNT")]
    pub max_faces: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VectorsArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Use the closed-form face counts of Δ(n) and check them against enumeration
    #[arg(long)]
    pub closed_form: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    /// Sums over independent sets of each size
    Elementary,
    /// Power sums of the variables
    Powersum,
}

impl From<KindArg> for HsopKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Elementary => HsopKind::IndependentSetSums,
            KindArg::Powersum => HsopKind::PowerSums,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct HsopArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Check regularity degree by degree
    #[arg(long)]
    pub verify: bool,
    /// Field characteristic, 0 or a prime (repeatable)
    #[arg(long = "char", value_name = "P", default_value = "0")]
    pub chars: Vec<FieldSpec>,
    /// Highest degree to check (default: Hilbert polynomial degree + 2)
    #[arg(long, value_name = "D")]
    pub degree_cap: Option<usize>,
    /// Stop with CAP_REACHED when a degree has more monomials than this
    #[arg(long, value_name = "COUNT")]
    pub max_columns: Option<usize>,
    /// Over Q, skip the prime certificate and use exact rational ranks
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub source: ComplexSource,
    /// Field characteristic, 0 or a prime (repeatable)
    #[arg(long = "char", value_name = "P", default_value = "0")]
    pub chars: Vec<FieldSpec>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(Error::InvalidArgument(_) | Error::Parse { .. } | Error::Io(_)) => 3,
            CliError::Lib(_) => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Entry point of the `tricm` binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first), runs the command and prints the
/// result. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return e.exit_code();
        }
    };
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let json = &cli.command.output().json;
    if json.as_deref() == Some(Path::new("-")) {
        let _ = write!(out, "{}", report.to_json());
    } else {
        let _ = write!(out, "{}", render_text(&report));
        if let Some(path) = json {
            if let Err(e) = fs::write(path, report.to_json()) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 3;
            }
        }
    }
    if report.hit_cap() {
        4
    } else {
        0
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(command: &Command) -> CliResult<Report> {
    let start = Instant::now();
    let cache = command.output().cache_dir.as_ref().map(Cache::new);
    let ctx = Ctx { cache };
    let mut report = match command {
        Command::Classify(a) => ctx.classify(a)?,
        Command::Vectors(a) => ctx.vectors(a)?,
        Command::Hsop(a) => ctx.hsop(a)?,
        Command::Homology(a) => ctx.homology(a)?,
    };
    report.timings.insert("total".into(), millis(start));
    Ok(report)
}

fn millis(start: Instant) -> String {
    start.elapsed().as_millis().to_string()
}

fn dedup_fields(chars: &[FieldSpec]) -> Vec<FieldSpec> {
    let mut out: Vec<FieldSpec> = Vec::new();
    for &c in chars {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Runs `f` once per field on scoped threads; results come back in field
/// order.
fn per_field<T, F>(fields: &[FieldSpec], f: F) -> CliResult<Vec<(T, String)>>
where
    T: Send,
    F: Fn(FieldSpec) -> CliResult<T> + Sync,
{
    thread::scope(|s| {
        let handles: Vec<_> = fields
            .iter()
            .map(|&p| {
                let f = &f;
                s.spawn(move || {
                    let t = Instant::now();
                    f(p).map(|v| (v, millis(t)))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

enum Source {
    Triangular(usize),
    Graph(Graph),
    Complex(SimplicialComplex),
}

struct Loaded {
    source: Source,
    descriptor: InputDescriptor,
    /// Cache identity of the input.
    subject: String,
}

impl Loaded {
    fn graph(&self) -> crate::Result<Graph> {
        match &self.source {
            Source::Triangular(n) => triangular(*n),
            Source::Graph(g) => Ok(g.clone()),
            Source::Complex(_) => unreachable!("complex inputs have no graph"),
        }
    }

    fn complex(&self) -> SimplicialComplex {
        match &self.source {
            Source::Triangular(n) => triangular_complex(*n),
            Source::Graph(g) => independence_complex(g),
            Source::Complex(c) => c.clone(),
        }
    }

    fn graph_summary(&self) -> Option<GraphSummary> {
        match &self.source {
            Source::Triangular(n) => {
                let v = n * n.saturating_sub(1) / 2;
                Some(GraphSummary {
                    vertices: v.to_string(),
                    edges: (v * n.saturating_sub(2)).to_string(),
                    labels: None,
                })
            }
            Source::Graph(g) => Some(GraphSummary {
                vertices: g.vertex_count().to_string(),
                edges: g.edge_count().to_string(),
                labels: g.labels().map(|l| l.to_vec()),
            }),
            Source::Complex(_) => None,
        }
    }
}

fn triangular_input(n: usize) -> CliResult<Loaded> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("T_n needs n >= 2, got {n}")).into());
    }
    Ok(Loaded {
        source: Source::Triangular(n),
        descriptor: InputDescriptor {
            kind: "triangular".into(),
            n: Some(n.to_string()),
            path: None,
            sha256: None,
        },
        subject: format!("triangular {n}"),
    })
}

fn read_input(path: &Path) -> CliResult<(String, String)> {
    let bytes = fs::read(path).map_err(|e| {
        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
    })?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::InvalidArgument(format!("{} is not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn graph_input(path: &Path) -> CliResult<Loaded> {
    let (text, digest) = read_input(path)?;
    let g = parse_edge_list(&text)?;
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut subject = format!("graph {}\n", g.vertex_count());
    for (u, v) in edges {
        let _ = writeln!(subject, "{u} {v}");
    }
    Ok(Loaded {
        source: Source::Graph(g),
        descriptor: InputDescriptor {
            kind: "graph".into(),
            n: None,
            path: Some(path.display().to_string()),
            sha256: Some(digest),
        },
        subject,
    })
}

fn complex_input(path: &Path) -> CliResult<Loaded> {
    let (_, digest) = read_input(path)?;
    let c = read_complex(path)?;
    let subject = format!("complex\n{}", write_complex(&c));
    Ok(Loaded {
        source: Source::Complex(c),
        descriptor: InputDescriptor {
            kind: "complex".into(),
            n: None,
            path: Some(path.display().to_string()),
            sha256: Some(digest),
        },
        subject,
    })
}

fn load_graph_source(src: &GraphSource) -> CliResult<Loaded> {
    match (src.triangular, &src.graph) {
        (Some(n), None) => triangular_input(n),
        (None, Some(p)) => graph_input(p),
        _ => Err(CliError::Usage(
            "give exactly one of --triangular or --graph".into(),
        )),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Vectors {
    f: Vec<String>,
    h: Vec<String>,
}

impl Vectors {
    fn of(f: &FVector) -> Self {
        Vectors {
            f: f.to_strings(),
            h: h_vector(f).to_strings(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Stats {
    vectors: Vectors,
    independence_number: String,
    unmixed: Option<bool>,
}

fn face_total(f: &FVector) -> BigInt {
    f.entries.iter().sum()
}

struct Ctx {
    cache: Option<Cache>,
}

impl Ctx {
    fn cached<T, F>(
        &self,
        subject: &str,
        op: &str,
        field: Option<FieldSpec>,
        params: &str,
        compute: F,
    ) -> CliResult<T>
    where
        T: Serialize + serde::de::DeserializeOwned,
        F: FnOnce() -> CliResult<T>,
    {
        let Some(cache) = &self.cache else {
            return compute();
        };
        let key = Cache::key(subject, op, field, params);
        if let Some(v) = cache.load(&key) {
            return Ok(v);
        }
        let v = compute()?;
        cache.store(&key, &v)?;
        Ok(v)
    }

    fn stats(&self, input: &Loaded) -> CliResult<Stats> {
        self.cached(&input.subject, "stats", None, "", || match &input.source {
            Source::Triangular(n) => {
                let f = triangular_f_closed(*n)?;
                let unmixed = if face_total(&f) <= BigInt::from(ENUMERATION_FACE_LIMIT) {
                    Some(is_unmixed(&triangular(*n)?))
                } else {
                    None
                };
                Ok(Stats {
                    independence_number: (f.entries.len() - 1).to_string(),
                    vectors: Vectors::of(&f),
                    unmixed,
                })
            }
            Source::Graph(g) => Ok(Stats {
                vectors: Vectors::of(&f_vector(&independence_complex(g))?),
                independence_number: independence_number(g).to_string(),
                unmixed: Some(is_unmixed(g)),
            }),
            Source::Complex(_) => unreachable!("stats need a graph"),
        })
    }

    fn classify(&self, a: &ClassifyArgs) -> CliResult<Report> {
        let input = load_graph_source(&a.source)?;
        let mut report = Report::new("classify", input.descriptor.clone());
        report.graph = input.graph_summary();

        let t = Instant::now();
        let stats = self.stats(&input)?;
        report.timings.insert("stats".into(), millis(t));
        report.f_vector = Some(stats.vectors.f);
        report.h_vector = Some(stats.vectors.h);
        report.independence_number = Some(stats.independence_number);
        report.unmixed = stats.unmixed;

        let limits = CheckLimits {
            max_faces: a.max_faces,
        };
        let params = format!(
            "full={};max_faces={}",
            a.full,
            a.max_faces.map_or("-".into(), |m| m.to_string())
        );
        let complex = match &input.source {
            Source::Graph(g) => Some(independence_complex(g)),
            _ => None,
        };
        let fields = dedup_fields(&a.chars);
        let verdicts = per_field(&fields, |p| {
            self.cached(&input.subject, "classify", Some(p), &params, || {
                let v = match (&input.source, &complex) {
                    (Source::Triangular(n), _) => classify_triangular_with(*n, p, a.full, limits)?,
                    (_, Some(c)) => classify_complex_with(c, p, a.full, limits)?,
                    _ => unreachable!(),
                };
                Ok(VerdictReport::from(&v))
            })
        })?;
        for (v, ms) in verdicts {
            report.timings.insert(format!("classify/{}", v.char), ms);
            report.verdicts.push(v);
        }
        Ok(report)
    }

    fn vectors(&self, a: &VectorsArgs) -> CliResult<Report> {
        let input = load_graph_source(&a.source)?;
        let mut report = Report::new("vectors", input.descriptor.clone());
        report.graph = input.graph_summary();
        if a.closed_form && !matches!(input.source, Source::Triangular(_)) {
            return Err(CliError::Usage("--closed-form needs --triangular".into()));
        }
        let params = format!("closed_form={}", a.closed_form);
        let mut timings = BTreeMap::new();
        let v = self.cached(&input.subject, "vectors", None, &params, || {
            let enumerate = |timings: &mut BTreeMap<String, String>| -> CliResult<FVector> {
                let t = Instant::now();
                let f = f_vector(&input.complex())?;
                timings.insert("enumeration".into(), millis(t));
                Ok(f)
            };
            let f = match &input.source {
                Source::Triangular(n) if a.closed_form => {
                    let t = Instant::now();
                    let closed = triangular_f_closed(*n)?;
                    timings.insert("closed-form".into(), millis(t));
                    if face_total(&closed) <= BigInt::from(ENUMERATION_FACE_LIMIT) {
                        let counted = enumerate(&mut timings)?;
                        if counted != closed {
                            return Err(Error::Inconsistent(format!(
                                "closed form {closed} disagrees with enumeration {counted}"
                            ))
                            .into());
                        }
                    }
                    closed
                }
                _ => enumerate(&mut timings)?,
            };
            Ok(Vectors::of(&f))
        })?;
        report.timings.extend(timings);
        report.f_vector = Some(v.f);
        report.h_vector = Some(v.h);
        Ok(report)
    }

    fn hsop(&self, a: &HsopArgs) -> CliResult<Report> {
        let input = load_graph_source(&a.source)?;
        let mut report = Report::new("hsop", input.descriptor.clone());
        report.graph = input.graph_summary();
        let g = input.graph()?;
        let seq = hsop(&g, a.kind.into())?;
        let mut h = HsopReport::new(&seq, g.labels());
        if a.verify {
            let cap = match a.degree_cap {
                Some(c) => c,
                None => default_degree_cap(&g, &seq)?,
            };
            let options = VerifyOptions {
                rational: if a.exact {
                    RationalMode::Exact
                } else {
                    RationalMode::PrimeCertificate
                },
                max_columns: a.max_columns,
            };
            let params = format!(
                "kind={};cap={cap};exact={};max_columns={}",
                seq.kind.as_str(),
                a.exact,
                a.max_columns.map_or("-".into(), |m| m.to_string())
            );
            let fields = dedup_fields(&a.chars);
            let verdicts = per_field(&fields, |p| {
                self.cached(&input.subject, "verify", Some(p), &params, || {
                    let v = verify_regular_with(&g, &seq, p, cap, options)?;
                    Ok(VerifyReport::new(&v, cap))
                })
            })?;
            for (p, (v, ms)) in fields.iter().zip(verdicts) {
                let c = p.characteristic().to_string();
                report.timings.insert(format!("verify/{c}"), ms);
                h.verify.insert(c, v);
            }
        }
        report.hsop = Some(h);
        Ok(report)
    }

    fn homology(&self, a: &HomologyArgs) -> CliResult<Report> {
        let src = &a.source;
        let input = match (src.triangular, &src.graph, &src.complex) {
            (Some(n), None, None) => triangular_input(n)?,
            (None, Some(p), None) => graph_input(p)?,
            (None, None, Some(p)) => complex_input(p)?,
            _ => {
                return Err(CliError::Usage(
                    "give exactly one of --triangular, --graph or --complex".into(),
                ))
            }
        };
        let mut report = Report::new("homology", input.descriptor.clone());
        report.graph = input.graph_summary();
        let t = Instant::now();
        let c = input.complex();
        report.timings.insert("enumeration".into(), millis(t));
        let fields = dedup_fields(&a.chars);
        let tables = per_field(&fields, |p| {
            self.cached(&input.subject, "homology", Some(p), "", || {
                Ok(BettiReport::from(&reduced_betti_table(&c, p)))
            })
        })?;
        for (b, ms) in tables {
            report.timings.insert(format!("homology/{}", b.char), ms);
            report.betti.push(b);
        }
        Ok(report)
    }
}

fn field_name(char: &str) -> String {
    if char == "0" {
        "Q".into()
    } else {
        format!("F_{char}")
    }
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

/// Human-readable summary of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let name = match (&r.input.n, &r.input.path) {
        (Some(n), _) => format!("T_{n}"),
        (_, Some(p)) => p.clone(),
        _ => r.input.kind.clone(),
    };
    match &r.graph {
        Some(g) => {
            let _ = writeln!(s, "{name}: {} vertices, {} edges", g.vertices, g.edges);
        }
        None => {
            let _ = writeln!(s, "{name}");
        }
    }
    if let Some(f) = &r.f_vector {
        let _ = writeln!(s, "f = {}", tuple(f));
    }
    if let Some(h) = &r.h_vector {
        let _ = writeln!(s, "h = {}", tuple(h));
    }
    if let Some(a) = &r.independence_number {
        let _ = writeln!(s, "independence number: {a}");
    }
    if let Some(u) = r.unmixed {
        let _ = writeln!(s, "unmixed: {u}");
    }
    for v in &r.verdicts {
        let _ = write!(s, "{}: {} [{}]", field_name(&v.char), v.status, v.method);
        for w in &v.witnesses {
            let _ = write!(s, " {}", w.text);
        }
        s.push('\n');
    }
    for b in &r.betti {
        let _ = writeln!(s, "{}: H̃ = {}", field_name(&b.char), tuple(&b.dims));
    }
    if let Some(h) = &r.hsop {
        let _ = writeln!(s, "{} forms:", h.kind);
        for (i, f) in h.forms.iter().enumerate() {
            let _ = writeln!(s, "  θ{} (degree {}) = {}", i + 1, f.degree, f.text);
        }
        for (c, v) in &h.verify {
            let _ = write!(s, "{}: {}", field_name(c), v.status);
            if let Some(d) = &v.failing_degree {
                let _ = write!(s, " (first mismatch in degree {d})");
            }
            if let Some(p) = &v.certified_by {
                let _ = write!(s, " (certified mod {p})");
            }
            s.push('\n');
            let actual: Vec<String> = v.per_degree.iter().map(|d| d.actual.clone()).collect();
            let _ = writeln!(s, "  Hilbert function {}", tuple(&actual));
        }
    }
    s
}
