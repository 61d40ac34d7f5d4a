//! Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::abacus::{core, is_e_core, twisted_two_quotient, two_core};
use crate::crystal::{orders_coincide_bound, Charge, FockContext, Realization};
use crate::error::{Error, Result};
use crate::fixtures::selftest;
use crate::graph::{diff_graphs, generate_component, GraphDiff};
use crate::hc::{build_hc_graph, hecke_parameters, SeriesParams};
use crate::io::{to_dot, DotOptions, GraphDocument, Metadata};
use crate::isomorphism::crystal_isomorphism_phi;
use crate::multipartition::{Bipartition, Multipartition};
use crate::partition::{n_function, Partition};
use crate::symbol::{a_function, phi_t};

#[derive(Debug, Parser)]
#[command(
    name = "fock-crystal",
    version,
    about = "Fock space crystals and Harish-Chandra branching graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// Emit the JSON graph document
    #[arg(long)]
    json: bool,
    /// Emit Graphviz DOT
    #[arg(long)]
    dot: bool,
    /// Label DOT arrows with their color
    #[arg(long, requires = "dot")]
    colors: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Component of the empty multipartition, truncated at a rank
    Crystal {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        e: usize,
        /// Comma-separated, e.g. -1,0
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long, value_parser = ["uglov", "kleshchev"])]
        realization: String,
        #[arg(long)]
        max_rank: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Image of a Kleshchev vertex in Uglov's realization
    Phi {
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
    },
    /// Twisted 2-quotient and 2-core parameter t
    Quotient {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// 2-core (or e-core with --e)
    Core {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        e: Option<usize>,
    },
    /// n(λ) = Σ (i−1) λ_i
    Nfun {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// a-function for parameters q², q^(2t+1)
    Afun {
        #[arg(long)]
        t: usize,
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Partition with 2-core Δ_t and the given twisted 2-quotient
    Phit {
        #[arg(long)]
        t: usize,
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Predicted Harish-Chandra branching graph for GU_r(q)
    Hcgraph {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        iota: Option<u8>,
        #[command(flatten)]
        format: Format,
    },
    /// Compare two JSON graph documents
    Diff {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        ignore_colors: bool,
    },
    /// Recompute the regression fixtures and compare
    Selftest,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Domain(Error::InvalidArgument(format!("cannot write output: {e}"))))
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T> {
    s.parse()
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Crystal {
            level,
            e,
            charge,
            realization,
            max_rank,
            format,
        } => {
            let charge: Charge = parse(&charge)?;
            if charge.level() != level {
                return Err(Failure::Usage(format!(
                    "--charge has {} entries but --level is {level}",
                    charge.level()
                )));
            }
            let ctx = FockContext::new(e, charge, parse::<Realization>(&realization)?)?;
            let g = generate_component(&ctx, max_rank);
            if format.json {
                let doc = GraphDocument::from_crystal(&g, Metadata::for_context(&ctx, max_rank));
                out.write_all(&doc.to_json()).map_err(io_failure)?;
            } else if format.dot {
                emit(out, &to_dot(&g, &dot_options(format.colors)))?;
            } else {
                let mut text = format!(
                    "# {} realization, e = {}, charge {}, rank ≤ {}\n",
                    ctx.realization(),
                    e,
                    ctx.charge(),
                    max_rank
                );
                if level >= 2 {
                    let bound = orders_coincide_bound(ctx.charge(), e)?;
                    text.push_str(&format!("# both realizations agree up to rank {bound}\n"));
                }
                text.push_str(&plain_listing(
                    g.vertices().iter().map(|m| (m.rank(), m.display_text())),
                    g.labeled_edges()
                        .map(|(s, t, c)| (s.display_text(), t.display_text(), c)),
                ));
                emit(out, &text)?;
            }
        }
        Command::Phi { e, charge, vertex } => {
            let charge: Charge = parse(&charge)?;
            let m: Multipartition = parse(&vertex)?;
            let image = crystal_isomorphism_phi(&m, &charge, e)?;
            emit(out, &format!("{}\n", image.display_text()))?;
        }
        Command::Quotient { partition } => {
            let p: Partition = parse(&partition)?;
            let q = twisted_two_quotient(&p);
            emit(out, &format!("({})\nt={}\n", q.display_text(), two_core(&p).t()))?;
        }
        Command::Core { partition, e } => {
            let p: Partition = parse(&partition)?;
            match e {
                None => {
                    let c = two_core(&p);
                    emit(out, &format!("({})\nt={}\n", c.partition().display_text(), c.t()))?;
                }
                Some(e) => {
                    let c = core(&p, e)?;
                    let yes = if is_e_core(&p, e)? { "yes" } else { "no" };
                    emit(out, &format!("({})\ne-core: {yes}\n", c.display_text()))?;
                }
            }
        }
        Command::Nfun { partition } => {
            let p: Partition = parse(&partition)?;
            emit(out, &format!("{}\n", n_function(&p)))?;
        }
        Command::Afun { t, bipartition } => {
            let b: Bipartition = parse(&bipartition)?;
            emit(out, &format!("{}\n", a_function(&b, t)))?;
        }
        Command::Phit { t, bipartition } => {
            let b: Bipartition = parse(&bipartition)?;
            emit(out, &format!("({})\n", phi_t(&b, t)?.display_text()))?;
        }
        Command::Hcgraph {
            s,
            e,
            max_rank,
            iota,
            format,
        } => {
            let params = match iota {
                Some(iota) => SeriesParams::with_iota(s, e, iota as usize)?,
                None => SeriesParams::new(s, e)?,
            };
            let g = build_hc_graph(&params, max_rank)?;
            if format.json {
                let doc = GraphDocument::from_hc(&g, Metadata::for_series(&params, max_rank));
                out.write_all(&doc.to_json()).map_err(io_failure)?;
            } else if format.dot {
                emit(out, &to_dot(&g, &dot_options(format.colors)))?;
            } else {
                let hecke = hecke_parameters(s);
                let mut text = format!(
                    "# series s = {s}, e = {e}, charge {}, Hecke parameters {hecke} ({})\n# r = 2(m + n) + ι with m = {}, ι = {}\n",
                    params.charge(),
                    hecke.ariki_koike(),
                    params.m(),
                    params.iota()
                );
                text.push_str(&plain_listing(
                    g.vertices().iter().map(|v| {
                        (
                            v.crystal_rank,
                            format!(
                                "{} [{}] r={}",
                                v.label.display_text(),
                                v.bipartition.display_text(),
                                v.group_degree
                            ),
                        )
                    }),
                    g.labeled_edges()
                        .map(|(a, b, c)| (a.label.display_text(), b.label.display_text(), c)),
                ));
                emit(out, &text)?;
            }
        }
        Command::Diff {
            left,
            right,
            ignore_colors,
        } => {
            let read = |p: &PathBuf| -> CliResult<GraphDocument> {
                let bytes = std::fs::read(p).map_err(|e| {
                    Failure::Domain(Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))
                })?;
                Ok(GraphDocument::from_json(&bytes)?)
            };
            let (a, b) = (read(&left)?.to_graph()?, read(&right)?.to_graph()?);
            emit(out, &render_diff(&diff_graphs(&a, &b, ignore_colors)))?;
        }
        Command::Selftest => {
            let checks = selftest();
            let mut text = String::new();
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
            }
            emit(out, &text)?;
            return Ok(if checks.iter().all(|c| c.passed) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Domain(Error::InvalidArgument(format!("cannot write output: {e}")))
}

fn dot_options(show_colors: bool) -> DotOptions {
    DotOptions {
        show_colors,
        bold_diff: None,
    }
}

fn plain_listing(
    vertices: impl Iterator<Item = (usize, String)>,
    edges: impl Iterator<Item = (String, String, usize)>,
) -> String {
    let mut text = String::new();
    let mut current = None;
    for (rank, label) in vertices {
        if current != Some(rank) {
            if current.is_some() {
                text.push('\n');
            }
            text.push_str(&format!("rank {rank}:"));
            current = Some(rank);
        }
        text.push_str(&format!(" {label}"));
    }
    text.push('\n');
    for (s, t, c) in edges {
        text.push_str(&format!("{s} -> {t} [{c}]\n"));
    }
    text
}

fn render_diff(d: &GraphDiff) -> String {
    if d.is_empty() {
        return "identical\n".to_string();
    }
    let mut text = String::new();
    for (side, map) in [("left", &d.vertices_only_left), ("right", &d.vertices_only_right)] {
        for (rank, labels) in map {
            text.push_str(&format!("vertices only in {side}, rank {rank}: {}\n", labels.join(" ")));
        }
    }
    for (side, edges) in [("left", &d.edges_only_left), ("right", &d.edges_only_right)] {
        for (s, t, c) in edges {
            match c {
                Some(c) => text.push_str(&format!("edge only in {side}: {s} -> {t} [{c}]\n")),
                None => text.push_str(&format!("edge only in {side}: {s} -> {t}\n")),
            }
        }
    }
    for (rank, l, r) in &d.rank_counts {
        text.push_str(&format!("rank {rank}: {l} vs {r} vertices\n"));
    }
    text
}
