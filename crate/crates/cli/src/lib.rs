//! The `dihedral` command line: argument parsing, dispatch and rendering.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dihedral_forms::export::{matrix_json, matrix_text, scalar_json};
use dihedral_forms::forms::{dimension, is_nondegenerate, skew_dimension, symmetric_dimension};
use dihedral_forms::irreps::{count_faithful_irreps, count_irrep_images, count_nontrivial_kernel_irreps, image_of_irrep};
use dihedral_forms::reps::{count_reps, enumerate_reps, image_of_rep};
use dihedral_forms::{
    subspace_equal, CyclotomicField, DihedralGroup, ElementSet, Error, IrrepKind, MultiplicityVector, Realization,
    Scalar, ScalarField,
};

const K_HELP: &str = "Multiplicities k_1,...,k_r in canonical irrep order: \
rho_1 (a->1, b->1), rho_2 (a->1, b->-1), then for even m rho_3 (a->-1, b->-1) and rho_4 (a->-1, b->1), \
then the degree-2 irreps for t = 1, 2, ..., floor((m-1)/2). \
The vector has (m+3)/2 entries for odd m and (m+6)/2 for even m. Example for m = 3: 1,1,1";

#[derive(Parser, Debug)]
#[command(name = "dihedral", version, about = "Representations of dihedral groups D_m and their invariant bilinear forms")]
struct Cli {
    /// Arithmetic used for matrices and linear solves.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// The group is D_m, of order 2m (m >= 3).
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct KArg {
    #[arg(long, long_help = K_HELP, help = "Multiplicity vector, comma separated, in canonical irrep order (see --help)")]
    k: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the irreducible representations with degree, t, faithfulness and image.
    Irreps(GroupArg),
    /// Character table, one row per irrep and one column per conjugacy class.
    CharTable(GroupArg),
    /// Number of representations of degree n up to isomorphism.
    Count {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        /// Cross-check against the enumeration.
        #[arg(long)]
        check: bool,
    },
    /// All multiplicity vectors of degree n.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
    },
    /// Basis of the invariant bilinear forms, their dimensions and a nondegenerate witness.
    Forms {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        k: KArg,
    },
    /// Closed-form kernel counts next to the brute-force list of faithful irreps.
    Faithful(GroupArg),
    /// Isomorphism class of the image of a representation.
    Image {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        k: KArg,
    },
    /// Check every representation of degree 1..=n against the linear-solve oracle.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Irreps(_) => "irreps",
            Command::CharTable(_) => "char-table",
            Command::Count { .. } => "count",
            Command::Enumerate { .. } => "enumerate",
            Command::Forms { .. } => "forms",
            Command::Faithful(_) => "faithful",
            Command::Image { .. } => "image",
            Command::Verify { .. } => "verify",
        }
    }

    fn m(&self) -> usize {
        match self {
            Command::Irreps(g) | Command::CharTable(g) | Command::Faithful(g) => g.m,
            Command::Count { group, .. }
            | Command::Enumerate { group, .. }
            | Command::Forms { group, .. }
            | Command::Image { group, .. }
            | Command::Verify { group, .. } => group.m,
        }
    }
}

/// A named comparison between an expected and an observed value.
struct Check {
    name: String,
    expected: Value,
    actual: Value,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl Into<Value>, actual: impl Into<Value>) -> Self {
        Check { name: name.into(), expected: expected.into(), actual: actual.into() }
    }

    fn pass(&self) -> bool {
        self.expected == self.actual
    }

    fn to_json(&self) -> Value {
        json!({ "name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.pass() })
    }

    fn to_text(&self) -> String {
        let status = if self.pass() { "ok" } else { "MISMATCH" };
        format!("check {}: {status} (expected {}, got {})", self.name, self.expected, self.actual)
    }
}

struct Report {
    result: Value,
    text: String,
    checks: Vec<Check>,
    /// Text output lists only the failing checks.
    terse: bool,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGroupOrder(_)
            | Error::ZeroDegree
            | Error::MultiplicityLength { .. }
            | Error::Parse(_)
            | Error::GroupMismatch(..) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code: 0 on success, 1 if a verification check
/// fails, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let failed = report.checks.iter().any(|c| !c.pass());
            let written = match cli.format {
                Format::Json => writeln!(out, "{}", document(&cli, &report)),
                Format::Text => write_text(out, &report),
            };
            if written.is_err() {
                return 1;
            }
            i32::from(failed)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            1
        }
    }
}

fn write_text(out: &mut dyn Write, report: &Report) -> std::io::Result<()> {
    write!(out, "{}", report.text)?;
    for c in report.checks.iter().filter(|c| !report.terse || !c.pass()) {
        writeln!(out, "{}", c.to_text())?;
    }
    Ok(())
}

fn document(cli: &Cli, report: &Report) -> String {
    let m = cli.command.m();
    let conductor = match cli.mode {
        Mode::Exact => Value::from(CyclotomicField::for_dihedral(m).conductor()),
        Mode::Float => Value::Null,
    };
    let doc = json!({
        "m": m,
        "conductor": conductor,
        "command": cli.command.name(),
        "result": report.result,
        "checks": report.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    });
    doc.to_string()
}

fn group(m: usize) -> Result<DihedralGroup, Failure> {
    Ok(DihedralGroup::new(m)?)
}

fn degree(n: usize) -> Result<usize, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(n)
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let g = group(cli.command.m())?;
    match cli.mode {
        Mode::Exact => dispatch(&cli.command, &Realization::exact(g)),
        Mode::Float => dispatch(&cli.command, &Realization::float(g)),
    }
}

fn dispatch<F: ScalarField>(command: &Command, r: &Realization<F>) -> Result<Report, Failure>
where
    Realization<F>: Sync,
{
    let g = *r.group();
    match command {
        Command::Irreps(_) => Ok(irreps(r)),
        Command::CharTable(_) => Ok(char_table(r)),
        Command::Count { n, check, .. } => count(&g, degree(*n)?, *check),
        Command::Enumerate { n, .. } => enumerate(&g, degree(*n)?),
        Command::Forms { k, .. } => forms(r, &MultiplicityVector::parse(&g, &k.k)?),
        Command::Faithful(_) => Ok(faithful(r)),
        Command::Image { k, .. } => image(r, &MultiplicityVector::parse(&g, &k.k)?),
        Command::Verify { n, .. } => verify(r, degree(*n)?),
    }
}

fn kind_json(kind: IrrepKind) -> Value {
    match kind {
        IrrepKind::Linear { on_a, on_b } => json!({ "a": on_a, "b": on_b }),
        IrrepKind::Planar { t } => json!({ "t": t }),
    }
}

fn irreps<F: ScalarField>(r: &Realization<F>) -> Report {
    let mut rows = Vec::new();
    let mut text = format!("{:<8} {:>6} {:>4} {:>8} {:>6} {:>7}\n", "irrep", "degree", "t", "faithful", "image", "kernel");
    for ir in r.irreps() {
        let kernel = r.kernel(ir);
        let faithful = r.is_faithful(ir);
        let img = image_of_irrep(ir);
        let t = ir.t().map_or("-".to_string(), |t| t.to_string());
        text.push_str(&format!(
            "{:<8} {:>6} {:>4} {:>8} {:>6} {:>7}\n",
            ir.label(),
            ir.degree(),
            t,
            if faithful { "yes" } else { "no" },
            img.to_string(),
            kernel.len()
        ));
        rows.push(json!({
            "index": ir.index(),
            "label": ir.label(),
            "degree": ir.degree(),
            "t": ir.t(),
            "generators": kind_json(ir.kind()),
            "faithful": faithful,
            "image": img.to_string(),
            "kernel": kernel.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    Report { result: Value::Array(rows), text, checks: Vec::new(), terse: false }
}

fn char_table<F: ScalarField>(r: &Realization<F>) -> Report {
    let classes = r.group().conjugacy_classes();
    let values: Vec<Vec<F::Elem>> =
        r.irreps().iter().map(|ir| classes.iter().map(|cl| r.character(ir, cl[0])).collect()).collect();
    let result = json!({
        "classes": classes.iter().map(|c| json!({ "representative": c[0].to_string(), "size": c.len() })).collect::<Vec<_>>(),
        "rows": r.irreps().iter().zip(&values).map(|(ir, row)| json!({
            "irrep": ir.label(),
            "degree": ir.degree(),
            "t": ir.t(),
            "values": row.iter().map(scalar_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let mut grid = vec![std::iter::once(String::new()).chain(classes.iter().map(|c| format!("{} [{}]", c[0], c.len()))).collect::<Vec<_>>()];
    for (ir, row) in r.irreps().iter().zip(&values) {
        grid.push(std::iter::once(ir.label()).chain(row.iter().map(scalar_text)).collect());
    }
    let widths: Vec<usize> = (0..grid[0].len()).map(|c| grid.iter().map(|l| l[c].chars().count()).max().unwrap_or(0)).collect();
    let mut text = String::new();
    for line in grid {
        let cells: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    Report { result, text, checks: Vec::new(), terse: false }
}

fn scalar_text<S: Scalar>(x: &S) -> String {
    x.exact_string().unwrap_or_else(|| {
        let c = x.to_complex();
        if c.im.abs() < 1e-12 { format!("{:.6}", c.re) } else { format!("{:.6}{:+.6}i", c.re, c.im) }
    })
}

fn big_json(x: &num_bigint::BigUint) -> Value {
    u64::try_from(x).map_or_else(|_| Value::from(x.to_string()), Value::from)
}

fn count(g: &DihedralGroup, n: usize, check: bool) -> Result<Report, Failure> {
    let value = count_reps(g, n)?;
    let mut checks = Vec::new();
    if check {
        let listed = enumerate_reps(g, n)?.len();
        checks.push(Check::new("enumeration", big_json(&value), listed));
    }
    Ok(Report { result: json!({ "n": n, "count": big_json(&value) }), text: format!("{value}\n"), checks, terse: false })
}

fn enumerate(g: &DihedralGroup, n: usize) -> Result<Report, Failure> {
    let all = enumerate_reps(g, n)?;
    let text: String = all.iter().map(|k| format!("{k}\n")).collect();
    Ok(Report {
        result: json!({ "n": n, "vectors": all.iter().map(MultiplicityVector::to_json).collect::<Vec<_>>() }),
        text,
        checks: Vec::new(),
        terse: false,
    })
}

fn forms<F: ScalarField>(r: &Realization<F>, k: &MultiplicityVector) -> Result<Report, Failure> {
    let basis = r.invariant_space_basis(k)?;
    let witness = r.nondegenerate_witness(k)?;
    let (dim, sym, skew) = (dimension(k), symmetric_dimension(k), skew_dimension(k));
    let witness_ok = r.is_invariant(&witness, k)? && is_nondegenerate(&witness);
    let checks = vec![
        Check::new("oracle dimension", dim, r.oracle_dimension(k)?),
        Check::new("oracle symmetric dimension", sym, r.oracle_symmetric_dimension(k)?),
        Check::new("oracle skew dimension", skew, r.oracle_skew_dimension(k)?),
        Check::new("witness invariant and nondegenerate", true, witness_ok),
    ];
    let mut result = basis.to_json();
    result["symmetric_dimension"] = sym.into();
    result["skew_dimension"] = skew.into();
    result["witness"] = matrix_json(witness.matrix());
    let cuts: Vec<usize> = basis.layout.iter().map(|s| s.offset).collect();
    let text = format!(
        "representation {k} of degree {}\ndimension {dim}, sym {sym}, skew {skew}\n{}witness:\n{}",
        k.degree(),
        basis.to_text(),
        matrix_text(witness.matrix(), &cuts)
    );
    Ok(Report { result, text, checks, terse: false })
}

fn faithful<F: ScalarField>(r: &Realization<F>) -> Report {
    let g = r.group();
    let faithful: Vec<_> = r.irreps().iter().filter(|ir| r.is_faithful(ir)).collect();
    let ts: Vec<String> = faithful.iter().filter_map(|ir| ir.t()).map(|t| t.to_string()).collect();
    let brute_nontrivial = r.irreps().len() - faithful.len();
    let (closed_nontrivial, closed_faithful) = (count_nontrivial_kernel_irreps(g), count_faithful_irreps(g));
    let text = format!(
        "faithful irreps: {} (t={})\nirreps with nontrivial kernel: {brute_nontrivial}\nclosed forms: nontrivial kernel {closed_nontrivial}, faithful {closed_faithful}\ndistinct images: {}\n",
        faithful.len(),
        ts.join(","),
        r.brute_image_count()
    );
    let result = json!({
        "faithful": faithful.iter().map(|ir| json!({ "irrep": ir.label(), "t": ir.t() })).collect::<Vec<_>>(),
        "nontrivial_kernel_count": brute_nontrivial,
        "closed_form": {
            "nontrivial_kernel_count": closed_nontrivial,
            "faithful_count": closed_faithful,
            "image_count": count_irrep_images(g),
        },
        "image_count": r.brute_image_count(),
    });
    let checks = vec![
        Check::new("nontrivial-kernel count", closed_nontrivial, brute_nontrivial),
        Check::new("faithful count", closed_faithful, faithful.len()),
        Check::new("image count", count_irrep_images(g), r.brute_image_count()),
    ];
    Report { result, text, checks, terse: false }
}

fn image<F: ScalarField>(r: &Realization<F>, k: &MultiplicityVector) -> Result<Report, Failure> {
    let closed = image_of_rep(k);
    let brute = r.brute_image_of_rep(k)?;
    let text = format!("image of {k}: {closed} (order {})\n", closed.order());
    let result = json!({ "spec": k.to_json(), "image": closed.to_string(), "order": closed.order() });
    let checks = vec![Check::new("brute-force image", closed.to_string(), brute.to_string())];
    Ok(Report { result, text, checks, terse: false })
}

fn verify_one<F: ScalarField>(r: &Realization<F>, k: &MultiplicityVector) -> Result<Vec<Check>, Failure> {
    let gens = r.brute_invariant_space(k, ElementSet::GeneratorsOnly)?;
    let every = r.brute_invariant_space(k, ElementSet::AllElements)?;
    let built = r.invariant_space_basis(k)?;
    let witness = r.nondegenerate_witness(k)?;
    let witness_ok = r.is_invariant_under_all(&witness, k)? && is_nondegenerate(&witness);
    Ok(vec![
        Check::new(format!("{k} oracle dimension"), dimension(k), gens.len()),
        Check::new(format!("{k} basis size"), dimension(k), built.dimension()),
        Check::new(format!("{k} span"), true, subspace_equal(&gens, &built.basis)?),
        Check::new(format!("{k} symmetric dimension"), symmetric_dimension(k), r.oracle_symmetric_dimension(k)?),
        Check::new(format!("{k} skew dimension"), skew_dimension(k), r.oracle_skew_dimension(k)?),
        Check::new(format!("{k} generators suffice"), true, subspace_equal(&gens, &every)?),
        Check::new(format!("{k} witness"), true, witness_ok),
    ])
}

/// Runs `verify_one` over `all` on worker threads; results come back in
/// the order of `all`.
fn verify_all<F: ScalarField>(r: &Realization<F>, all: &[MultiplicityVector]) -> Result<Vec<Vec<Check>>, Failure>
where
    Realization<F>: Sync,
{
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(all.len().max(1));
    let chunk = all.len().div_ceil(workers).max(1);
    let parts: Vec<Result<Vec<Vec<Check>>, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = all
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|k| verify_one(r, k)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(all.len());
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn verify<F: ScalarField>(r: &Realization<F>, n_max: usize) -> Result<Report, Failure>
where
    Realization<F>: Sync,
{
    let g = *r.group();
    let mut checks = Vec::new();
    let mut failing = Vec::new();
    let mut total = 0;
    for n in 1..=n_max {
        let all = enumerate_reps(&g, n)?;
        checks.push(Check::new(format!("n={n} count"), big_json(&count_reps(&g, n)?), all.len()));
        for (k, found) in all.iter().zip(verify_all(r, &all)?) {
            total += 1;
            if found.iter().any(|c| !c.pass()) {
                failing.push(k.to_string());
            }
            checks.extend(found);
        }
    }
    let passed = checks.iter().filter(|c| c.pass()).count();
    let text = format!(
        "verified {total} representations of degree 1..={n_max}: {passed} of {} checks passed\n",
        checks.len()
    );
    let result = json!({ "n": n_max, "representations": total, "checks_passed": passed, "mismatches": failing });
    Ok(Report { result, text, checks, terse: true })
}
