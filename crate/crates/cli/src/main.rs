//! `acmgon`: analysis, liaison, enumeration and verification commands for
//! ACM space curves.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input.

mod table;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use acm_gonality::quadform::q_lambda;
use acm_gonality::walkthrough::{walkthrough, WalkthroughCheck};
use acm_gonality::{
    destabilizer_search, enumerate_s_basic, enumerate_s_minimal, link_hvector, predict_gonality,
    scan_exceptions, verify_range, BiliaisonType, DestabilizerCandidate, Error, GonalityReport,
    HVector, PicardModel, ScanHit, VerificationReport,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::table::Table;

#[derive(Parser)]
#[command(
    name = "acmgon",
    version,
    about = "Invariants, liaison and gonality of ACM space curves"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for the parallel commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Basic,
    Minimal,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for an h-vector; reads one h-vector per line from stdin
    /// when none is given.
    Analyze { hvector: Option<String> },
    /// h-vector of the curve linked by a complete intersection of type (a, b).
    Link {
        hvector: String,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// List the s-basic h-vectors or the s-minimal biliaison types.
    Enumerate {
        #[arg(long)]
        s: i64,
        #[arg(long, value_enum, default_value_t = Kind::Minimal)]
        kind: Kind,
    },
    /// s-basic h-vectors next to their linked s-minimal types and q.
    Table {
        #[arg(long)]
        s: i64,
    },
    /// Exhaustive checks of the quadratic form q for every s in range.
    Verify {
        #[arg(long, default_value_t = 4)]
        s_min: i64,
        #[arg(long, default_value_t = 10)]
        s_max: i64,
    },
    /// (s, d, g) of decreasing-type curves where Δ ≤ 0 at k = d - k_offset.
    Scan {
        #[arg(long, default_value_t = 4)]
        s_min: i64,
        #[arg(long, default_value_t = 8)]
        s_max: i64,
        #[arg(long, default_value_t = 45)]
        d_max: i64,
        #[arg(long, default_value_t = 4)]
        k_offset: i64,
    },
    /// Candidate destabilizing classes for a pencil of degree k.
    Destabilize {
        hvector: String,
        #[arg(long)]
        k: i64,
    },
    /// Recompute the two worked examples; exits 1 on any mismatch.
    Examples,
}

enum Failure {
    Input(Error),
    Check,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: could not start {n} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = io::stdout().lock();
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Analyze {
            hvector: Some(text),
        } => {
            let report = predict_gonality(&text.parse()?)?;
            emit(out, fmt, &report, render_report)
        }
        Command::Analyze { hvector: None } => analyze_batch(out, fmt),
        Command::Link { hvector, a, b } => {
            let h: HVector = hvector.parse()?;
            let linked = link_hvector(&h, *a, *b)?;
            let row = LinkRow {
                hvector: h,
                a: *a,
                b: *b,
                lambda: BiliaisonType::from_hvector(&linked),
                linked,
            };
            emit(out, fmt, &row, |r| {
                format!(
                    "{} linked by ({}, {}) -> {}  type {}\n",
                    r.hvector, r.a, r.b, r.linked, r.lambda
                )
            })
        }
        Command::Enumerate { s, kind } => {
            require_range("s", *s, 1, 12)?;
            match kind {
                Kind::Basic => {
                    let rows: Vec<_> = enumerate_s_basic(*s)
                        .into_iter()
                        .map(|h| BasicRow {
                            d: h.degree(),
                            g: h.genus(),
                            hvector: h,
                        })
                        .collect();
                    emit(out, fmt, &rows, |rows| {
                        let mut t = Table::new(["hvector", "d", "g"]);
                        for r in rows {
                            t.row([r.hvector.to_string(), r.d.to_string(), r.g.to_string()]);
                        }
                        t.render()
                    })
                }
                Kind::Minimal => {
                    let rows = enumerate_s_minimal(*s)
                        .into_iter()
                        .map(|lambda| {
                            Ok(MinimalRow {
                                d: lambda.degree(),
                                q: q_lambda(&lambda, *s)?,
                                lambda,
                            })
                        })
                        .collect::<Result<Vec<_>, Error>>()?;
                    emit(out, fmt, &rows, |rows| {
                        let mut t = Table::new(["lambda", "d", "q"]);
                        for r in rows {
                            t.row([r.lambda.to_string(), r.d.to_string(), r.q.to_string()]);
                        }
                        t.render()
                    })
                }
            }
        }
        Command::Table { s } => {
            require_range("s", *s, 2, 12)?;
            let rows = basic_table(*s)?;
            emit(out, fmt, &rows, |rows| {
                let mut t = Table::new(["s-basic h", "d", "g", "linked h", "lambda", "q"]);
                for r in rows {
                    t.row([
                        r.hvector.to_string(),
                        r.d.to_string(),
                        r.g.to_string(),
                        r.linked.to_string(),
                        r.lambda.to_string(),
                        r.q.to_string(),
                    ]);
                }
                t.render()
            })
        }
        Command::Verify { s_min, s_max } => {
            let reports = verify_range(*s_min, *s_max)?;
            emit(out, fmt, &reports, render_verify)?;
            if reports.iter().all(VerificationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Scan {
            s_min,
            s_max,
            d_max,
            k_offset,
        } => {
            let hits = scan_exceptions(*s_min, *s_max, *d_max, *k_offset)?;
            emit(out, fmt, &hits, |hits: &Vec<ScanHit>| {
                let mut t = Table::new(["s", "d", "g"]);
                for h in hits {
                    t.row([h.s, h.d, h.g]);
                }
                t.render()
            })
        }
        Command::Destabilize { hvector, k } => {
            let model = PicardModel::new(&hvector.parse()?)?;
            let found = destabilizer_search(&model, *k)?;
            emit(out, fmt, &found, |found| render_candidates(found))
        }
        Command::Examples => {
            let rows = walkthrough()?;
            emit(out, fmt, &rows, render_walkthrough)?;
            if rows.iter().all(|r| r.pass) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn require_range(name: &str, value: i64, lo: i64, hi: i64) -> Result<(), Error> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "{name} must lie in {lo}..={hi}, got {value}"
        )))
    }
}

fn emit<T: Serialize>(
    out: &mut impl Write,
    fmt: Format,
    value: &T,
    text: impl Fn(&T) -> String,
) -> Outcome {
    match fmt {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)?;
        }
        Format::Text => write!(out, "{}", text(value))?,
    }
    Ok(())
}

/// Every non-blank line is analysed; bad lines are reported on stderr and
/// make the exit code 2 once the whole batch has been processed.
fn analyze_batch(out: &mut impl Write, fmt: Format) -> Outcome {
    let mut reports = Vec::new();
    let mut first_error = None;
    for (lineno, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match text.parse::<HVector>().and_then(|h| predict_gonality(&h)) {
            Ok(report) => reports.push(report),
            Err(e) => {
                eprintln!("line {}: {e}", lineno + 1);
                first_error.get_or_insert(e);
            }
        }
    }
    match fmt {
        Format::Json => emit(out, fmt, &reports, |_| String::new())?,
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", render_report(r))?;
            }
        }
    }
    match first_error {
        Some(e) => Err(Failure::Input(e)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct LinkRow {
    hvector: HVector,
    a: i64,
    b: i64,
    linked: HVector,
    lambda: BiliaisonType,
}

#[derive(Serialize)]
struct BasicRow {
    hvector: HVector,
    d: i64,
    g: i64,
}

#[derive(Serialize)]
struct MinimalRow {
    lambda: BiliaisonType,
    d: i64,
    q: i64,
}

#[derive(Serialize)]
struct TableRow {
    hvector: HVector,
    d: i64,
    g: i64,
    linked: HVector,
    lambda: BiliaisonType,
    q: i64,
}

fn basic_table(s: i64) -> Result<Vec<TableRow>, Error> {
    enumerate_s_basic(s)
        .into_iter()
        .map(|h| {
            let linked = link_hvector(&h, s, s)?;
            let lambda = BiliaisonType::from_hvector(&linked);
            Ok(TableRow {
                d: h.degree(),
                g: h.genus(),
                q: q_lambda(&lambda, s)?,
                hvector: h,
                linked,
                lambda,
            })
        })
        .collect()
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn render_report(r: &GonalityReport) -> String {
    let mut s = String::new();
    let lambda = BiliaisonType::from_hvector(&r.hvector);
    s += &format!("h-vector       {}\n", r.hvector);
    s += &format!(
        "d g s t e      {} {} {} {} {}\n",
        r.d,
        r.g,
        r.s,
        opt(r.t),
        r.e
    );
    s += &format!("type           {lambda}\n");
    if let Ok(gaps) = lambda.gap_decomposition() {
        let pieces: Vec<String> = gaps.pieces.iter().map(|p| p.to_string()).collect();
        s += &format!("gap pieces     {}\n", pieces.join(" "));
    }
    s += &format!("case           {:?}\n", r.case);
    s += &format!("l              {}\n", opt(r.l));
    s += &format!("gonality       {}\n", opt(r.gonality));
    s += &format!("clifford       {}\n", opt(r.clifford));
    s += &format!("unique pencil  {}\n", r.unique_pencil);
    let mut flags = Vec::new();
    if r.flags.thm1_undecided {
        flags.push("gonality-undecided");
    }
    if r.flags.thm3_undecided {
        flags.push("clifford-undecided");
    }
    if r.flags.elliptic_quartic_extra_pencil {
        flags.push("elliptic-quartic-extra-pencil");
    }
    if r.flags.not_decreasing_type {
        flags.push("not-decreasing-type");
    }
    s += &format!(
        "flags          {}\n",
        if flags.is_empty() {
            "-".to_string()
        } else {
            flags.join(" ")
        }
    );
    if let Some(m) = &r.model {
        s += &format!("linked (s,t)   {} type {}\n", m.linked, m.linked_lambda);
        s += &format!("phi(C,C)       {}\n", m.phi_cc());
        if m.rank() > 0 {
            s += "\n";
            let mut t = Table::new(["i", "lambda", "d_i", "q_i", "b_i", "C.D_i"]);
            for (i, c) in m.components.iter().enumerate() {
                t.row([
                    (i + 1).to_string(),
                    c.lambda.to_string(),
                    c.degree.to_string(),
                    c.q.to_string(),
                    c.b.to_string(),
                    m.c_dot_component(i).to_string(),
                ]);
            }
            s += &t.render();
        }
        if let Some(o) = r.lattice_secant_order {
            s += &format!("C.L            {o}\n");
        }
    }
    for (label, cands, k) in [
        ("candidates at k = gon", &r.candidates, r.gonality),
        (
            "candidates at k = gon - 1",
            &r.candidates_below,
            r.gonality.map(|g| g - 1),
        ),
    ] {
        let Some(k) = k else { continue };
        s += &format!("\n{label} ({k})\n");
        match cands {
            Some(c) if c.is_empty() => s += "  none\n",
            Some(c) => s += &render_candidates(c),
            None => s += "  Δ ≤ 0, search not applicable\n",
        }
    }
    s
}

fn render_candidates(found: &[DestabilizerCandidate]) -> String {
    if found.is_empty() {
        return "no candidate classes\n".to_string();
    }
    let mut t = Table::new(["c", "a", "x", "phiAA", "phiAC", "class"]);
    for c in found {
        let a: Vec<String> = c.a.iter().map(|v| v.to_string()).collect();
        t.row([
            c.c.to_string(),
            format!("({})", a.join(",")),
            c.x.to_string(),
            c.phi_aa.to_string(),
            c.phi_ac.to_string(),
            c.classification.to_string(),
        ]);
    }
    t.render()
}

fn render_verify(reports: &Vec<VerificationReport>) -> String {
    let mut t = Table::new(["s", "check", "cases", "result"]);
    let mut witnesses = String::new();
    for r in reports {
        for c in &r.checks {
            t.row([
                r.s.to_string(),
                c.name.to_string(),
                c.cases.to_string(),
                if c.passed { "pass" } else { "FAIL" }.to_string(),
            ]);
            for w in &c.witnesses {
                witnesses += &format!("s = {}, {}: {w}\n", r.s, c.name);
            }
        }
    }
    let mut s = t.render();
    s += &witnesses;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    s += &format!(
        "{} of {} values of s passed\n",
        reports.len() - failed,
        reports.len()
    );
    s
}

fn render_walkthrough(rows: &Vec<WalkthroughCheck>) -> String {
    let mut t = Table::new(["example", "quantity", "expected", "actual", "result"]);
    for r in rows {
        t.row([
            r.example.to_string(),
            r.quantity.to_string(),
            r.expected.clone(),
            r.actual.clone(),
            if r.pass { "pass" } else { "FAIL" }.to_string(),
        ]);
    }
    t.render()
}
