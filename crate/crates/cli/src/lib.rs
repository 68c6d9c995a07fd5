//! The `qquiver` command line: argument model, input resolution and the
//! subcommand pipelines. `main.rs` only parses arguments, picks the output
//! stream and maps errors to exit codes.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use quandle_quiver::diagram::{corpus_names, table_links};
use quandle_quiver::quiver::ToDot;
use quandle_quiver::tables::{bundled_quandle, BUNDLED_QUANDLES};
use quandle_quiver::{
    action_polynomial, action_quiver, counting_invariant, enumerate_colorings,
    enumerate_endomorphisms, full_coloring_quiver, load_corpus, parse_crossing_list, parse_pd,
    parse_signed_gauss, reproduce_tables, Diagram, ErrorKind, Quandle,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] quandle_quiver::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{context}: {source}")]
    InFile {
        context: String,
        source: quandle_quiver::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0} blocking table cells do not match")]
    TablesDiffer(usize),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) | CliError::InFile { source: e, .. } => e.kind().exit_code(),
            CliError::Io { .. } | CliError::Usage(_) => ErrorKind::Input.exit_code(),
            CliError::TablesDiffer(_) | CliError::Output(_) => ErrorKind::Internal.exit_code(),
        }
    }
}

fn core<E: Into<quandle_quiver::Error>>(e: E) -> CliError {
    CliError::Core(e.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LinkFormat {
    Native,
    Pd,
    Gauss,
}

#[derive(Debug, Parser)]
#[command(
    name = "qquiver",
    version,
    about = "Quandle colorings, action quivers and action polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to this file instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Maximum number of colorings kept in memory
    #[arg(long, global = true, env = "QQUIVER_CAP")]
    pub cap: Option<usize>,
    /// Print element labels and other details to standard error
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Args)]
pub struct QuandleArg {
    /// Quandle file, bundled name, or `dihedral:n`, `trivial:n`,
    /// `alexander:n:t`, `conj:<group file>`
    #[arg(long, short)]
    pub quandle: String,
}

#[derive(Debug, Clone, Args)]
pub struct LinkArg {
    /// Diagram file or bundled diagram name
    #[arg(long, short)]
    pub link: String,
    /// Diagram file format; detected from the contents when omitted
    #[arg(long, value_enum)]
    pub link_format: Option<LinkFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quandle axioms
    Validate {
        #[command(flatten)]
        quandle: QuandleArg,
    },
    /// List all colorings of a diagram
    Colorings {
        #[command(flatten)]
        quandle: QuandleArg,
        #[command(flatten)]
        link: LinkArg,
    },
    /// Print the counting invariant
    Count {
        #[command(flatten)]
        quandle: QuandleArg,
        #[command(flatten)]
        link: LinkArg,
    },
    /// Build the action quiver, or the full coloring quiver with --full
    Quiver {
        #[command(flatten)]
        quandle: QuandleArg,
        #[command(flatten)]
        link: LinkArg,
        /// Acting elements (1-indexed, comma separated) or `all`
        #[arg(long, short, default_value = "all")]
        element: String,
        /// Use every quandle endomorphism instead of the inner maps
        #[arg(long)]
        full: bool,
    },
    /// Print action polynomials
    Poly {
        #[command(flatten)]
        quandle: QuandleArg,
        #[command(flatten)]
        link: LinkArg,
        /// Acting element (1-indexed) or `all`
        #[arg(long, short)]
        element: String,
    },
    /// Action polynomials for a batch of bundled links
    Table {
        #[command(flatten)]
        quandle: QuandleArg,
        /// Comma separated names, a range `A..B` over the link table, or `all`
        #[arg(long, default_value = "all")]
        links: String,
        /// Acting element (1-indexed) or `all`
        #[arg(long, short, default_value = "all")]
        element: String,
    },
    /// Recompute the reference tables and compare with the stored values
    Reproduce,
}

/// Resolves a quandle source.
pub fn load_quandle(source: &str) -> Result<Quandle, CliError> {
    let number = |s: &str, what: &str| -> Result<i64, CliError> {
        s.parse::<i64>()
            .map_err(|_| CliError::Usage(format!("{what} in {source:?} is not an integer")))
    };
    let order = |s: &str| -> Result<usize, CliError> {
        match number(s, "order")? {
            n if n >= 1 => Ok(n as usize),
            _ => Err(CliError::Usage(format!(
                "order in {source:?} must be positive"
            ))),
        }
    };
    let parts: Vec<&str> = source.splitn(3, ':').collect();
    match parts.as_slice() {
        ["dihedral", n] => Ok(Quandle::dihedral(order(n)?)),
        ["trivial", n] => Ok(Quandle::trivial(order(n)?)),
        ["alexander", n, t] => Quandle::alexander(order(n)?, number(t, "parameter")?).map_err(core),
        ["conj", _, ..] => {
            let path = &source["conj:".len()..];
            let text = read(path)?;
            Quandle::parse_conjugation(&text).map_err(|e| CliError::InFile {
                context: path.to_string(),
                source: e.into(),
            })
        }
        _ if Path::new(source).is_file() => {
            let text = read(source)?;
            Quandle::parse(&text).map_err(|e| CliError::InFile {
                context: source.to_string(),
                source: e.into(),
            })
        }
        _ => bundled_quandle(source).ok_or_else(|| {
            CliError::Usage(format!(
                "{source:?} is not a file, a bundled quandle ({}) or a builtin spec",
                BUNDLED_QUANDLES.join(", ")
            ))
        }),
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn detect_format(text: &str) -> LinkFormat {
    let body: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if body.iter().any(|l| l.contains("X[")) {
        LinkFormat::Pd
    } else if body
        .first()
        .and_then(|l| l.chars().next())
        .is_some_and(|c| matches!(c.to_ascii_uppercase(), 'O' | 'U' | 'V'))
    {
        LinkFormat::Gauss
    } else {
        LinkFormat::Native
    }
}

pub fn parse_diagram(
    text: &str,
    format: Option<LinkFormat>,
) -> Result<Diagram, quandle_quiver::DiagramError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        LinkFormat::Native => parse_crossing_list(text),
        LinkFormat::Pd => parse_pd(text),
        LinkFormat::Gauss => parse_signed_gauss(text),
    }
}

/// Resolves a diagram source: an existing file, else a bundled name.
pub fn load_link(source: &str, format: Option<LinkFormat>) -> Result<Diagram, CliError> {
    if Path::new(source).is_file() {
        let text = read(source)?;
        let d = parse_diagram(&text, format).map_err(|e| CliError::InFile {
            context: source.to_string(),
            source: e.into(),
        })?;
        return Ok(match d.name() {
            Some(_) => d,
            None => d.with_name(source),
        });
    }
    load_corpus(source).map_err(core)
}

/// Parses `all` or a 1-indexed element list into 0-indexed elements.
pub fn parse_elements(spec: &str, n: usize) -> Result<Vec<usize>, CliError> {
    if spec == "all" {
        return Ok((0..n).collect());
    }
    spec.split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
            _ => Err(CliError::Usage(format!(
                "element {:?} is not `all` or an integer in 1..={n}",
                s.trim()
            ))),
        })
        .collect()
}

/// Parses a link list: `all`, `A..B` over the link table, or names.
pub fn parse_links(spec: &str) -> Result<Vec<String>, CliError> {
    if spec == "all" {
        return Ok(table_links().iter().map(|s| s.to_string()).collect());
    }
    if let Some((a, b)) = spec.split_once("..") {
        let order: Vec<&str> = if table_links().contains(&a) && table_links().contains(&b) {
            table_links().to_vec()
        } else {
            corpus_names().collect()
        };
        let find = |name: &str| {
            order
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| core(quandle_quiver::DiagramError::UnknownName(name.to_string())))
        };
        let (i, j) = (find(a)?, find(b)?);
        if i > j {
            return Err(CliError::Usage(format!("empty link range {spec:?}")));
        }
        return Ok(order[i..=j].iter().map(|s| s.to_string()).collect());
    }
    Ok(spec.split(',').map(|s| s.trim().to_string()).collect())
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "format {format:?} is not available for `{command}`"
        )))
    }
}

fn describe_labels(q: &Quandle, diag: &mut dyn Write) -> io::Result<()> {
    if let Some(labels) = q.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(diag, "element {} = {}", i + 1, l)?;
        }
    }
    Ok(())
}

/// Runs one command, writing results to `out` and verbose details to `diag`.
pub fn run(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { quandle } => {
            require_format(g.format, &[Format::Text], "validate")?;
            let q = load_quandle(&quandle.quandle)?;
            writeln!(out, "valid quandle of order {}", q.order())?;
            if g.verbose {
                describe_labels(&q, diag)?;
                for x in 0..q.order() {
                    writeln!(diag, "inner map {}: order {}", x + 1, q.inner_map(x).order)?;
                }
                let classes: Vec<String> = q
                    .action_classes()
                    .iter()
                    .map(|c| {
                        let v: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                        format!("{{{}}}", v.join(","))
                    })
                    .collect();
                writeln!(diag, "action classes: {}", classes.join(" "))?;
            }
        }
        Command::Colorings { quandle, link } => {
            require_format(g.format, &[Format::Text, Format::Csv], "colorings")?;
            let q = load_quandle(&quandle.quandle)?;
            let d = load_link(&link.link, link.link_format)?;
            let h = enumerate_colorings(&d, &q, g.cap).map_err(core)?;
            out.write_all(h.to_text().as_bytes())?;
        }
        Command::Count { quandle, link } => {
            require_format(g.format, &[Format::Text], "count")?;
            let q = load_quandle(&quandle.quandle)?;
            let d = load_link(&link.link, link.link_format)?;
            writeln!(out, "{}", counting_invariant(&d, &q, g.cap).map_err(core)?)?;
        }
        Command::Quiver {
            quandle,
            link,
            element,
            full,
        } => {
            require_format(g.format, &[Format::Text, Format::Dot], "quiver")?;
            let q = load_quandle(&quandle.quandle)?;
            let d = load_link(&link.link, link.link_format)?;
            let h = enumerate_colorings(&d, &q, g.cap).map_err(core)?;
            if g.verbose {
                describe_labels(&q, diag)?;
            }
            let text = if *full {
                let endos = enumerate_endomorphisms(&q, None).map_err(core)?;
                if g.verbose {
                    for (k, f) in endos.iter().enumerate() {
                        let v: Vec<String> = f.iter().map(|x| (x + 1).to_string()).collect();
                        writeln!(diag, "f{} = [{}]", k + 1, v.join(","))?;
                    }
                }
                let fq = full_coloring_quiver(&h, endos).map_err(core)?;
                match g.format {
                    Format::Dot => fq.to_dot(),
                    _ => {
                        let mut s = vertex_listing(&h);
                        for e in fq.edges() {
                            let _ = writeln!(s, "{} -> {} f{}", e.from, e.to, e.endo + 1);
                        }
                        s
                    }
                }
            } else {
                let labels = parse_elements(element, q.order())?;
                let aq = action_quiver(&h, Some(&labels));
                match g.format {
                    Format::Dot => aq.to_dot(),
                    _ => {
                        let mut s = vertex_listing(&h);
                        for e in aq.edges() {
                            let _ = writeln!(s, "{} -> {} {}", e.from, e.to, e.label + 1);
                        }
                        s
                    }
                }
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Poly {
            quandle,
            link,
            element,
        } => {
            require_format(g.format, &[Format::Text, Format::Csv], "poly")?;
            let q = load_quandle(&quandle.quandle)?;
            let d = load_link(&link.link, link.link_format)?;
            let elements = parse_elements(element, q.order())?;
            let h = enumerate_colorings(&d, &q, g.cap).map_err(core)?;
            if g.verbose {
                describe_labels(&q, diag)?;
            }
            if g.format == Format::Csv {
                writeln!(out, "link,quandle,element,polynomial,counting")?;
            }
            let link_name = d.name().unwrap_or(&link.link).to_string();
            for &x in &elements {
                let p = action_polynomial(&h, x).poly;
                match g.format {
                    Format::Csv => writeln!(
                        out,
                        "{},{},{},{},{}",
                        link_name,
                        quandle.quandle,
                        x + 1,
                        p,
                        h.len()
                    )?,
                    _ if element == "all" => writeln!(out, "{}: {}", x + 1, p)?,
                    _ => writeln!(out, "{p}")?,
                }
            }
        }
        Command::Table {
            quandle,
            links,
            element,
        } => {
            require_format(g.format, &[Format::Text, Format::Csv], "table")?;
            let q = load_quandle(&quandle.quandle)?;
            let elements = parse_elements(element, q.order())?;
            let names = parse_links(links)?;
            let diagrams = names
                .iter()
                .map(|n| load_link(n, None))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = diagrams
                .par_iter()
                .map(|d| {
                    let h = enumerate_colorings(d, &q, g.cap).map_err(core)?;
                    let polys: Vec<_> = elements
                        .iter()
                        .map(|&x| action_polynomial(&h, x).poly)
                        .collect();
                    Ok((h.len(), polys))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            if g.format == Format::Csv {
                writeln!(out, "link,quandle,element,polynomial,counting")?;
            }
            for (name, (count, polys)) in names.iter().zip(&rows) {
                for (&x, p) in elements.iter().zip(polys) {
                    match g.format {
                        Format::Csv => writeln!(
                            out,
                            "{},{},{},{},{}",
                            name,
                            quandle.quandle,
                            x + 1,
                            p,
                            count
                        )?,
                        _ => writeln!(
                            out,
                            "{:<8} {:>2}  {:<32} {}",
                            name,
                            x + 1,
                            p.to_string(),
                            count
                        )?,
                    }
                }
            }
        }
        Command::Reproduce => {
            require_format(g.format, &[Format::Text, Format::Csv], "reproduce")?;
            let report = reproduce_tables();
            match g.format {
                Format::Csv => out.write_all(report.to_csv().as_bytes())?,
                _ => out.write_all(report.render().as_bytes())?,
            }
            let failures = report.blocking_failures().len();
            if failures > 0 {
                return Err(CliError::TablesDiffer(failures));
            }
        }
    }
    Ok(())
}

fn vertex_listing(h: &quandle_quiver::Homset<'_>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices {}", h.len());
    for (i, c) in h.colorings().iter().enumerate() {
        let _ = writeln!(s, "{i}: {c}");
    }
    s
}
