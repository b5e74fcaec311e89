//! Command-line frontend for `tiled-core`.
//!
//! Every command reads orders as `{"alpha": [[...]]}` JSON files and writes
//! plain text (or DOT / JSON) to stdout. Vertices and permutations are
//! 1-based on the command line and in all output.
//!
//! Exit codes: 0 when the question was answered (including "no"), 1 for an
//! invalid order, a negative isomorphism verdict or an enumeration limit, and
//! 2 for unreadable input or usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use std::fmt;

pub mod document;

/// Failures surfaced by the CLI, each mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    /// The order (or a derived computation) is rejected by the library.
    Invalid(tiled_core::Error),
    Usage(String),
    /// An enumeration bound (`--max-n`) was hit.
    Limit(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Io(m) => write!(f, "{m}"),
            Self::Parse(m) => write!(f, "parse error: {m}"),
            Self::Invalid(e) => write!(f, "{e}"),
            Self::Usage(m) | Self::Limit(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

use document::{OrderFile, ReportDocument};
use tiled_core::lifting::{lift_system, valuation_mismatch, LiftSolution};
use tiled_core::{
    aut_structure_report, hereditary_order, liftable_subgroup, link_graph, orders_isomorphic,
    valued_quiver, Error, ExponentMatrix, MonomialLift, Perm, PiStyle, DEFAULT_MAX_N,
};

#[derive(Debug, Parser)]
#[command(name = "tiled", version, about = "Automorphisms of tiled orders")]
pub struct Cli {
    /// Largest n for which Aut(Q) or S_n is enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,

    /// Print π instead of pi in lift matrices.
    #[arg(long, global = true)]
    pub unicode: bool,

    /// Worker threads for the parallel routines (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the exponent-matrix axioms.
    Validate { path: PathBuf },
    /// Print the link graph.
    Quiver {
        path: PathBuf,
        /// Attach v(i,j) to every arrow.
        #[arg(long)]
        valued: bool,
        /// Emit a DOT digraph.
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether a permutation lifts and print its monomial lift.
    Lift {
        path: PathBuf,
        /// Cycle notation "(1 2 3)" or one-line "[2,3,1]".
        #[arg(long)]
        perm: String,
    },
    /// Print Aut(Q), O_Lambda and its generators.
    Group { path: PathBuf },
    /// Full structure report.
    Report {
        path: PathBuf,
        /// Canonical JSON with sorted keys.
        #[arg(long)]
        json: bool,
    },
    /// Search for a monomial conjugation between two orders.
    Iso { a: PathBuf, b: PathBuf },
    /// Emit the basic hereditary order of size n as an order file.
    Hereditary { n: usize },
}

impl Cli {
    fn pi_style(&self) -> PiStyle {
        if self.unicode {
            PiStyle::Unicode
        } else {
            PiStyle::Ascii
        }
    }
}

/// Runs `cli`, honouring `--workers`, and returns the exit code.
pub fn run_with_workers(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    #[cfg(feature = "parallel")]
    if let Some(workers) = cli.workers {
        return match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => {
                let (mut o, mut e) = (Vec::new(), Vec::new());
                let code = pool.install(|| run(cli, &mut o, &mut e));
                let _ = out.write_all(&o);
                let _ = err.write_all(&e);
                code
            }
            Err(e) => {
                let _ = writeln!(err, "cannot start {workers} workers: {e}");
                2
            }
        };
    }
    run(cli, out, err)
}

/// Runs `cli` on the current thread pool and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            exit_code(cli, &e)
        }
    }
}

fn exit_code(cli: &Cli, e: &CliError) -> i32 {
    match (e, &cli.command) {
        (CliError::Io(_) | CliError::Parse(_) | CliError::Usage(_), _) => 2,
        (CliError::Invalid(_), Command::Iso { .. }) => 2,
        (CliError::Invalid(_) | CliError::Limit(_), _) => 1,
    }
}

fn load(path: &Path) -> Result<ExponentMatrix, CliError> {
    OrderFile::read(path)?.validate()
}

fn too_large(e: Error) -> CliError {
    match e {
        Error::TooLarge { n, max_n } => CliError::Limit(format!(
            "n={n} exceeds --max-n {max_n}; raise --max-n to enumerate (cost grows like n!)"
        )),
        other => CliError::Invalid(other),
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(format!("write error: {e}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Validate { path } => {
            let file = OrderFile::read(path)?;
            match file.validate() {
                Ok(a) => {
                    writeln!(out, "valid, n={}", a.n()).map_err(io)?;
                    Ok(0)
                }
                Err(CliError::Invalid(e)) => {
                    writeln!(out, "{e}").map_err(io)?;
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Quiver { path, valued, dot } => {
            let a = load(path)?;
            write_quiver(&a, *valued, *dot, out).map_err(io)?;
            Ok(0)
        }
        Command::Lift { path, perm } => {
            let a = load(path)?;
            let sigma = Perm::parse(perm, a.n())
                .map_err(|e| CliError::Usage(format!("--perm {perm:?}: {e}")))?;
            write_lift(&a, &sigma, cli.pi_style(), out)?;
            Ok(0)
        }
        Command::Group { path } => {
            let a = load(path)?;
            let g = liftable_subgroup(&a, cli.max_n).map_err(too_large)?;
            let kind = if g.is_cyclic() {
                "cyclic"
            } else {
                "not cyclic"
            };
            let ab = if g.is_abelian() {
                "abelian"
            } else {
                "non-abelian"
            };
            writeln!(
                out,
                "|Aut(Q)|={}, |O_Lambda|={}, {kind}, {ab}",
                g.aut_q_order(),
                g.order()
            )
            .map_err(io)?;
            for l in g.generators() {
                write_generator(l, cli.pi_style(), out).map_err(io)?;
            }
            Ok(0)
        }
        Command::Report { path, json } => {
            let a = load(path)?;
            let r = aut_structure_report(&a, cli.max_n).map_err(too_large)?;
            let doc = ReportDocument::from_report(&a, &r)?;
            if *json {
                writeln!(out, "{}", doc.to_canonical_json()).map_err(io)?;
            } else {
                write_report_text(&r, &doc, cli.pi_style(), out).map_err(io)?;
            }
            Ok(0)
        }
        Command::Iso { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            match orders_isomorphic(&a, &b, cli.max_n).map_err(CliError::Invalid)? {
                Some((sigma, x)) => {
                    writeln!(out, "isomorphic: sigma={sigma}, x={x}").map_err(io)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "not isomorphic").map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::Hereditary { n } => {
            let h = hereditary_order(*n)
                .map_err(|_| CliError::Usage("hereditary: n must be at least 1".into()))?;
            let file = OrderFile { alpha: h.rows() };
            writeln!(out, "{}", file.render()).map_err(io)?;
            Ok(0)
        }
    }
}

fn write_quiver(
    a: &ExponentMatrix,
    valued: bool,
    dot: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let vq = valued_quiver(a);
    if dot {
        writeln!(out, "digraph Q {{")?;
        for v in 1..=a.n() {
            writeln!(out, "  \"{v}\";")?;
        }
        for (i, j, v) in vq.valued_arrows() {
            if valued {
                writeln!(out, "  \"{}\" -> \"{}\" [label=\"v={v}\"];", i + 1, j + 1)?;
            } else {
                writeln!(out, "  \"{}\" -> \"{}\";", i + 1, j + 1)?;
            }
        }
        writeln!(out, "}}")
    } else {
        for (i, j, v) in vq.valued_arrows() {
            if valued {
                writeln!(out, "{} -> {} [v={v}]", i + 1, j + 1)?;
            } else {
                writeln!(out, "{} -> {}", i + 1, j + 1)?;
            }
        }
        Ok(())
    }
}

fn write_lift(
    a: &ExponentMatrix,
    sigma: &Perm,
    style: PiStyle,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let q = link_graph(a);
    let in_aut = q
        .arrows()
        .all(|(i, j)| q.has_arrow(sigma.apply(i), sigma.apply(j)));
    writeln!(out, "sigma = {sigma}").map_err(io)?;
    if !in_aut {
        writeln!(out, "sigma is not an automorphism of Q(Lambda)").map_err(io)?;
    }
    match lift_system(a, sigma).map_err(CliError::Invalid)? {
        LiftSolution::Inconsistent { i, j } => {
            writeln!(
                out,
                "not liftable: equation for the pair ({},{}) is inconsistent",
                i + 1,
                j + 1
            )
            .map_err(io)?;
        }
        LiftSolution::Consistent(x) => {
            let lift = MonomialLift::for_order(a, sigma.clone(), x).map_err(CliError::Invalid)?;
            writeln!(out, "liftable: x = {}", lift.x()).map_err(io)?;
            writeln!(out, "matrix = {}", lift.matrix().render(style)).map_err(io)?;
            if in_aut {
                let verdict = match valuation_mismatch(a, sigma).map_err(CliError::Invalid)? {
                    None => "yes".to_string(),
                    Some((i, j)) => format!(
                        "no (v({},{})={} but v({},{})={})",
                        i + 1,
                        j + 1,
                        a.get(i, j),
                        sigma.apply(i) + 1,
                        sigma.apply(j) + 1,
                        a.get(sigma.apply(i), sigma.apply(j))
                    ),
                };
                writeln!(out, "valuation-preserving: {verdict}").map_err(io)?;
            }
        }
    }
    Ok(())
}

fn write_generator(l: &MonomialLift, style: PiStyle, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "generator {}: x={} matrix={}",
        l.sigma(),
        l.x(),
        l.matrix().render(style)
    )
}

fn write_report_text(
    r: &tiled_core::StructureReport,
    doc: &ReportDocument,
    style: PiStyle,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "n={}", doc.n)?;
    writeln!(out, "valid: yes")?;
    writeln!(out, "basic: {}", yes_no(doc.basic))?;
    writeln!(out, "(0,1)-order: {}", yes_no(doc.zero_one))?;
    let arrows: Vec<String> = doc
        .valued_arrows
        .iter()
        .map(|[i, j, v]| format!("{i}->{j}[v={v}]"))
        .collect();
    writeln!(out, "arrows: {}", arrows.join(" "))?;
    let loops: Vec<String> = doc.loops.iter().map(usize::to_string).collect();
    if loops.is_empty() {
        writeln!(out, "loops: none")?;
    } else {
        writeln!(out, "loops: {}", loops.join(" "))?;
    }
    writeln!(out, "|Aut(Q)|={}", doc.aut_q_order)?;
    writeln!(out, "|O_Lambda|={}", doc.o_lambda_order)?;
    writeln!(out, "all_liftable: {}", yes_no(doc.all_liftable))?;
    for l in r.group.generators() {
        write_generator(l, style, out)?;
    }
    if r.basic_zero_one_confirmed {
        writeln!(
            out,
            "basic (0,1)-order: every automorphism of Q(Lambda) lifts (confirmed)"
        )?;
    }
    writeln!(out, "{}", r.structure_line())
}
