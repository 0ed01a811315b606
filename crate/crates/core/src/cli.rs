//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad element, mismatched
//! orders, I/O), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::caselaw::{self, ClassificationReport, Rule};
use crate::chern::{self, ChernError, LogPair, SurfaceClass};
use crate::lattices::{self, BasisPoint, LatticeError};
use crate::rings::{OrderKind, QuadInt, RingError};
use crate::surfaces::{self, Slope, SurfaceError};

/// JSON schema of the `classify --json` report.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "toroidal", version, about = "Exact verification of the c2bar = 1 toroidal compactification classification")]
pub struct CliConfig {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the output to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

impl CliConfig {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Units of an endomorphism order (Z, Z[i], Z[tau]); with an element,
    /// its conjugate, norm (= index of x*Lambda in Lambda) and trace.
    Rings {
        order: OrderKind,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Points z of C/Lambda with gamma*z = 0 mod Lambda, in the basis (1, g).
    Torsion {
        order: OrderKind,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
    },
    /// Intersection number and points of the curves w = s1*z and w = s2*z
    /// (`inf` is the curve z = 0).
    Intersect {
        order: OrderKind,
        #[arg(allow_hyphen_values = true)]
        s1: String,
        #[arg(allow_hyphen_values = true)]
        s2: String,
    },
    /// Canonical classes of good configurations (four curves pairwise
    /// meeting once) on C x C.
    Search { order: OrderKind },
    /// Log Chern numbers of a blown-up minimal surface with elliptic
    /// boundary curves, with the Noether and 3 c2bar = c1bar^2 checks.
    Chern {
        /// abelian, bielliptic, k3, enriques, p2, hirzebruch, ruled:<g>, kodaira1:<d>
        #[arg(long)]
        base: SurfaceClass,
        #[arg(long, default_value_t = 0)]
        blowups: u32,
        /// Boundary self-intersections, comma separated (e.g. -1,-1,-1,-1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        boundary: Vec<i64>,
    },
    /// Run the full case tree for 3 c2bar = c1bar^2, c2bar = 1.
    Classify {
        /// Endomorphism orders to search: comma list from rational, gaussian, eisenstein.
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<OrderKind>>,
    },
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(&config).and_then(|doc| match &config.output {
        Some(path) => std::fs::write(path, doc).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => out.write_all(doc.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs the subcommand and renders its output document.
pub fn execute(config: &CliConfig) -> Result<String, CliError> {
    let format = config.format();
    match &config.command {
        Command::Rings { order, element } => rings_doc(*order, element.as_deref(), format),
        Command::Torsion { order, gamma } => torsion_doc(*order, gamma, format),
        Command::Intersect { order, s1, s2 } => intersect_doc(*order, s1, s2, format),
        Command::Search { order } => search_doc(*order, format),
        Command::Chern {
            base,
            blowups,
            boundary,
        } => chern_doc(*base, *blowups, boundary, format),
        Command::Classify { orders } => {
            let orders = orders.clone().unwrap_or_else(|| OrderKind::ALL.to_vec());
            let report = caselaw::run_classification_with(&orders);
            Ok(emit_report(&report, format))
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn point_json(p: &BasisPoint) -> serde_json::Value {
    json!([p.0.to_string(), p.1.to_string()])
}

fn rings_doc(order: OrderKind, element: Option<&str>, format: Format) -> Result<String, CliError> {
    let units: Vec<String> = QuadInt::units(order).iter().map(ToString::to_string).collect();
    let element = element
        .map(|s| -> Result<_, CliError> {
            let x = QuadInt::parse(order, s)?;
            let (conj, norm, trace) = x.conj_norm_trace()?;
            Ok((x, conj, norm, trace))
        })
        .transpose()?;
    Ok(match format {
        Format::Json => {
            let mut v = json!({
                "order": order,
                "trace_of_gen": order.trace_of_gen(),
                "norm_of_gen": order.norm_of_gen(),
                "units": units,
            });
            if let Some((x, conj, norm, trace)) = element {
                v["element"] = json!({
                    "value": x.to_string(),
                    "conj": conj.to_string(),
                    "norm": norm,
                    "trace": trace,
                });
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            match order.symbol() {
                Some(g) => writeln!(
                    s,
                    "order: {order} ({g}^2 = {}*{g} - {})",
                    order.trace_of_gen(),
                    order.norm_of_gen()
                ),
                None => writeln!(s, "order: {order}"),
            }
            .unwrap();
            writeln!(s, "units: {}", units.join(", ")).unwrap();
            if let Some((x, conj, norm, trace)) = element {
                writeln!(s, "element: {x}\nconj: {conj}\nnorm: {norm}\ntrace: {trace}").unwrap();
            }
            s
        }
    })
}

fn torsion_doc(order: OrderKind, gamma: &str, format: Format) -> Result<String, CliError> {
    let gamma = QuadInt::parse(order, gamma)?;
    let group = lattices::quotient_reps(&gamma)?;
    Ok(match format {
        Format::Json => pretty(&serde_json::Value::Array(group.reps().iter().map(point_json).collect())),
        Format::Text => {
            let mut s = format!("kernel of multiplication by {gamma} on C/Lambda ({order}): {} points\n", group.len());
            for p in group.reps() {
                writeln!(s, "{}", lattices::format_point(p)).unwrap();
            }
            s
        }
    })
}

fn intersect_doc(order: OrderKind, s1: &str, s2: &str, format: Format) -> Result<String, CliError> {
    let s1 = Slope::parse(order, s1)?;
    let s2 = Slope::parse(order, s2)?;
    let number = surfaces::intersection_number(&s1, &s2)?;
    let points = surfaces::intersection_points(&s1, &s2)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "order": order,
            "s1": s1,
            "s2": s2,
            "intersection_number": number,
            "points": points.points.iter().map(|(w, z)| json!({"w": point_json(w), "z": point_json(z)})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("C_{s1} . C_{s2} = {number}\n");
            for (w, z) in &points.points {
                writeln!(s, "w = {}, z = {}", lattices::format_point(w), lattices::format_point(z)).unwrap();
            }
            s
        }
    })
}

fn search_doc(order: OrderKind, format: Format) -> Result<String, CliError> {
    let classes = surfaces::search_good_configurations(order)?;
    Ok(match format {
        Format::Json => pretty(&json!(classes
            .iter()
            .map(|c| c.slopes().to_vec())
            .collect::<Vec<_>>())),
        Format::Text => {
            if classes.is_empty() {
                format!("no good configuration over the {order} order\n")
            } else {
                classes.iter().map(|c| format!("{c}\n")).collect()
            }
        }
    })
}

fn chern_doc(base: SurfaceClass, blowups: u32, boundary: &[i64], format: Format) -> Result<String, CliError> {
    let pair = LogPair::new(base, blowups, boundary.to_vec())?;
    let lc = chern::log_chern_numbers(&pair);
    let noether = chern::noether_filter(pair.k_squared(), pair.c2());
    let bmy = chern::bmy_equality(lc.c1bar_sq, lc.c2bar);
    Ok(match format {
        Format::Json => pretty(&json!({
            "base": base.to_string(),
            "blowups": blowups,
            "boundary_selfints": boundary,
            "k_squared": pair.k_squared(),
            "c2": pair.c2(),
            "c1bar_sq": lc.c1bar_sq,
            "c2bar": lc.c2bar,
            "noether": noether,
            "bmy_equality": bmy,
        })),
        Format::Text => format!(
            "base: {base}, blowups: {blowups}, boundary: {boundary:?}\n\
             K_X^2 = {}, c2(X) = {}\n\
             c1bar^2 = {}\nc2bar = {}\n\
             noether (K_X^2 + c2 = 0 mod 12): {noether}\n\
             3 c2bar = c1bar^2: {bmy}\n",
            pair.k_squared(),
            pair.c2(),
            lc.c1bar_sq,
            lc.c2bar
        ),
    })
}

/// Renders a report; text follows the order of the case tree.
pub fn emit_report(report: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::from("case tree for 3 c2bar = c1bar^2, c2bar = 1\n");
            let orders: Vec<&str> = report.orders.iter().map(|o| o.name()).collect();
            writeln!(s, "orders searched: {}\n", orders.join(", ")).unwrap();
            for step in &report.steps {
                let rule = match step.rule {
                    Rule::Arithmetic => "arithmetic",
                    Rule::CitedGeometric => "cited",
                };
                writeln!(s, "[{}] {} ({rule})", step.verdict, step.case_id).unwrap();
                writeln!(s, "    {}", step.detail).unwrap();
                writeln!(s, "    ref: {}", step.citation).unwrap();
            }
            s.push('\n');
            match &report.survivor {
                Some(v) => {
                    let slopes: Vec<String> = v.slopes.iter().map(ToString::to_string).collect();
                    let boundary: Vec<String> = v.boundary_selfints.iter().map(ToString::to_string).collect();
                    writeln!(s, "survivor: {} order", v.order).unwrap();
                    writeln!(s, "  slopes: {}", slopes.join(", ")).unwrap();
                    writeln!(s, "  boundary: {}", boundary.join(", ")).unwrap();
                    writeln!(s, "  (c1bar^2, c2bar) = ({}, {})", v.c1bar_sq, v.c2bar).unwrap();
                    writeln!(s, "  3 c2bar = c1bar^2: {}", v.bmy_equality).unwrap();
                }
                None => s.push_str("no survivor\n"),
            }
            s
        }
    }
}

pub fn parse_report(json: &str) -> Result<ClassificationReport, CliError> {
    Ok(serde_json::from_str(json)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(std::iter::once("toroidal").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["torsion", "eisenstein", "2-1t"]).0, 0);
        assert_eq!(run(&["torsion", "eisenstein", "0"]).0, 1);
        assert_eq!(run(&["torsion", "eisenstein", "2-1i"]).0, 1);
        assert_eq!(run(&["torsion", "quaternion", "1"]).0, 2);
        assert_eq!(run(&["classify", "--bogus"]).0, 2);
        assert_eq!(run(&["intersect", "eisenstein", "1", "1"]).0, 1);
        assert_eq!(run(&["chern", "--base", "abelian", "--blowups", "1", "--boundary", "-1,2"]).0, 1);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn negative_elements_are_not_flags() {
        let (code, out, _) = run(&["rings", "eisenstein", "-1+t"]);
        assert_eq!(code, 0);
        assert!(out.contains("norm: 1"));
    }

    #[test]
    fn chern_subcommand() {
        let (code, out, _) = run(&["chern", "--base", "abelian", "--blowups", "1", "--boundary", "-1,-1,-1,-1"]);
        assert_eq!(code, 0);
        assert!(out.contains("c1bar^2 = 3\nc2bar = 1"));
        assert!(out.contains("3 c2bar = c1bar^2: true"));
    }

    #[test]
    fn search_text() {
        assert_eq!(run(&["search", "eisenstein"]).1, "{inf, 0, 1, t}\n");
        assert!(run(&["search", "gaussian"]).1.starts_with("no good configuration"));
    }
}
