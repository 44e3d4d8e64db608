//! Command line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::equivalences::{certify_integral_equivalence, phi, psi};
use crate::error::{Error, Result};
use crate::facelattice::{face_labeling, region_count};
use crate::flowpoly::{embed_hatted_hasse, truncated_dual};
use crate::hooklength::naruse_count;
use crate::matrices::{is_asmcry_vertex, RationalMatrix};
use crate::polytope::{dimension, polytope_report, satisfies_inequalities, vertices, PasmPolytopeSpec};
use crate::rational::{format_rational, Rational};
use crate::shapes::Partition;
use crate::skewposet::count_linear_extensions;

#[derive(Debug, Parser)]
#[command(name = "pasm", version, about = "Partial alternating sign matrix polytopes of skew shapes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the vertices M^mu, lambda ⊆ mu ⊆ nu.
    Vertices(Common),
    /// Test whether a matrix lies in the polytope.
    Check {
        #[command(flatten)]
        common: Common,
        /// JSON matrix {"m":..,"n":..,"entries":[[..]]}; entries are integers or "p/q".
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Affine dimension, region count of the face labeling, and |nu| - |lambda|.
    Dim(Common),
    /// Linear extensions by backtracking and by the Naruse formula.
    Volume(Common),
    /// Lattice points of dilates and the Ehrhart polynomial.
    Ehrhart {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        tmax: i64,
    },
    /// The sum-labeling of the face spanned by the vertices.
    FaceLabeling(Common),
    /// The truncated dual of the Hasse diagram of the hatted poset.
    FlowGraph(Common),
    /// Images of the vertices under phi, checked against the ASM conditions.
    Phi(Common),
    /// Certify the integral equivalence with the order polytope.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        tmax: i64,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Inner partition, comma separated (empty for the empty partition).
    #[arg(long, default_value = "", value_parser = parse_partition)]
    lambda: Partition,
    /// Outer partition, comma separated.
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    /// Ambient rows; defaults to len(nu) + 1.
    #[arg(long)]
    m: Option<usize>,
    /// Ambient columns; defaults to nu_1 + 1.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let s = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

impl Common {
    fn spec(&self) -> Result<PasmPolytopeSpec> {
        let m = self.m.unwrap_or(self.nu.len() + 1);
        let n = self.n.unwrap_or(self.nu.part(1) + 1);
        PasmPolytopeSpec::new(self.nu.clone(), self.lambda.clone(), m, n)
    }
}

/// A finished report: its text and whether every check in it passed.
struct Report {
    body: String,
    passed: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, passed: true }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn execute(command: &Command) -> std::result::Result<(Report, Option<PathBuf>), Failure> {
    let (common, report) = match command {
        Command::Vertices(c) => (c, vertices_report(c)?),
        Command::Check { common, matrix } => (common, check_report(common, matrix)?),
        Command::Dim(c) => (c, dim_report(c)?),
        Command::Volume(c) => (c, volume_report(c)?),
        Command::Ehrhart { common, tmax } => (common, ehrhart_report(common, *tmax)?),
        Command::FaceLabeling(c) => (c, face_report(c)?),
        Command::FlowGraph(c) => (c, flow_report(c)?),
        Command::Phi(c) => (c, phi_report(c)?),
        Command::Certify { common, tmax } => (common, certify_report(common, *tmax)?),
    };
    Ok((report, common.out.clone()))
}

fn vertices_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let verts = vertices(&spec);
    Ok(Report::ok(match c.format {
        Format::Json => to_json(&verts),
        Format::Text => {
            let mut s = format!("{} vertices\n", verts.len());
            for v in &verts {
                let _ = write!(s, "\n{v}\n");
            }
            s
        }
        Format::Dot => return Err(unsupported(c.format, "vertices")),
    }))
}

fn check_report(c: &Common, path: &PathBuf) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let x: RationalMatrix =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let member = satisfies_inequalities(&x, &spec)?;
    let point = if member { Some(psi(&x, &spec)?) } else { None };
    let body = match c.format {
        Format::Json => to_json(&json!({ "member": member, "psi": point })),
        Format::Text => match &point {
            Some(p) => format!("member: true\npsi: {}\n", crate::equivalences::format_point(p)),
            None => "member: false\n".into(),
        },
        Format::Dot => return Err(unsupported(c.format, "check")),
    };
    Ok(Report { body, passed: member })
}

fn dim_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let rank = dimension(&spec);
    let regions = region_count(&face_labeling(&spec));
    let expected = spec.shape().size();
    let passed = rank == expected && regions == expected;
    let body = match c.format {
        Format::Json => to_json(&json!({ "dimension": rank, "regions": regions, "expected": expected })),
        Format::Text => format!("{rank}\nregions: {regions}\n|nu|-|lambda|: {expected}\n"),
        Format::Dot => return Err(unsupported(c.format, "dim")),
    };
    Ok(Report { body, passed })
}

fn volume_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let extensions = count_linear_extensions(&spec.poset());
    let naruse = naruse_count(spec.nu(), spec.lambda())?;
    let d = spec.shape().size();
    let factorial: num_bigint::BigInt = (1..=d).map(num_bigint::BigInt::from).product();
    let volume = format_rational(&Rational::new(extensions.into(), factorial));
    let body = match c.format {
        Format::Json => to_json(&json!({
            "linear_extensions": extensions.to_string(),
            "naruse": naruse.to_string(),
            "volume": volume,
        })),
        Format::Text => format!("linear extensions: {extensions}\nnaruse: {naruse}\nvolume: {volume}\n"),
        Format::Dot => return Err(unsupported(c.format, "volume")),
    };
    Ok(Report { body, passed: extensions == naruse })
}

fn ehrhart_report(c: &Common, tmax: i64) -> std::result::Result<Report, Failure> {
    if tmax < 0 {
        return Err(Failure::Usage("--tmax must be nonnegative".into()));
    }
    let spec = c.spec()?;
    let report = polytope_report(&spec, tmax)?;
    let passed = report.ehrhart_values.iter().all(|&(t, v)| report.ehrhart_poly.eval_int(t) == Rational::from_integer(v.into()));
    let body = match c.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for (t, v) in &report.ehrhart_values {
                let _ = writeln!(s, "L({t}) = {v}");
            }
            let _ = writeln!(s, "L(t) = {}", report.ehrhart_poly);
            s
        }
        Format::Dot => return Err(unsupported(c.format, "ehrhart")),
    };
    Ok(Report { body, passed })
}

fn face_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let labeling = face_labeling(&spec);
    Ok(Report::ok(match c.format {
        Format::Json => to_json(&labeling),
        Format::Dot => labeling.to_dot(),
        Format::Text => {
            let mut s = String::new();
            for (e, l) in labeling.iter() {
                let label = match (l.zero, l.one) {
                    (true, true) => "{0,1}",
                    (false, true) => "{1}",
                    _ => "{0}",
                };
                let _ = writeln!(s, "{e} {label}");
            }
            let _ = writeln!(s, "regions: {}", region_count(&labeling));
            s
        }
    }))
}

fn flow_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let graph = truncated_dual(&embed_hatted_hasse(&spec.poset())?)?;
    let describe = |v: crate::flowpoly::HatVertex| match v {
        crate::flowpoly::HatVertex::Bottom => json!("0hat"),
        crate::flowpoly::HatVertex::Top => json!("1hat"),
        crate::flowpoly::HatVertex::Element(k) => json!(spec.poset().elements()[k]),
    };
    Ok(Report::ok(match c.format {
        Format::Dot => graph.to_dot(),
        Format::Json => {
            let edges: Vec<_> = graph
                .edges()
                .iter()
                .map(|e| json!({ "from": e.from, "to": e.to, "lower": describe(e.lower), "upper": describe(e.upper) }))
                .collect();
            to_json(&json!({
                "vertices": graph.vertex_count(),
                "source": graph.source(),
                "sink": graph.sink(),
                "edges": edges,
            }))
        }
        Format::Text => {
            let mut s = format!(
                "{} vertices, {} edges, source {}, sink {}\n",
                graph.vertex_count(),
                graph.edges().len(),
                graph.source(),
                graph.sink()
            );
            for (k, e) in graph.edges().iter().enumerate() {
                let _ = writeln!(s, "e{k}: {} -> {} crossing {} < {}", e.from, e.to, describe(e.lower), describe(e.upper));
            }
            s
        }
    }))
}

fn phi_report(c: &Common) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let mut images = Vec::new();
    let mut passed = true;
    for v in vertices(&spec) {
        let image = phi(&v)?;
        let ok = is_asmcry_vertex(&image, spec.lambda());
        passed &= ok;
        images.push((v, image, ok));
    }
    let mut distinct: Vec<_> = images.iter().map(|(_, im, _)| im.clone()).collect();
    distinct.sort();
    distinct.dedup();
    passed &= distinct.len() == images.len();
    let body = match c.format {
        Format::Json => {
            let rows: Vec<_> = images.iter().map(|(v, im, ok)| json!({ "vertex": v, "phi": im, "asm": ok })).collect();
            to_json(&json!({ "images": rows, "injective": distinct.len() == images.len() }))
        }
        Format::Text => {
            let mut s = String::new();
            for (v, im, ok) in &images {
                let _ = write!(s, "{v}\n->\n{im}\nasm: {ok}\n\n");
            }
            let _ = writeln!(s, "injective: {}", distinct.len() == images.len());
            s
        }
        Format::Dot => return Err(unsupported(c.format, "phi")),
    };
    Ok(Report { body, passed })
}

fn certify_report(c: &Common, tmax: i64) -> std::result::Result<Report, Failure> {
    let spec = c.spec()?;
    let report = certify_integral_equivalence(&spec, tmax)?;
    let passed = report.passed();
    let body = match c.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = format!(
                "affine unimodular: {}\nvertex bijection: {}\n",
                report.affine_unimodular, report.vertex_bijection
            );
            for d in &report.dilate_counts {
                let _ = writeln!(s, "t = {}: {} lattice points, {} order-preserving maps", d.t, d.pasm, d.order);
            }
            if let Some(ce) = &report.counterexample {
                let _ = writeln!(s, "counterexample: {ce}");
            }
            let _ = writeln!(s, "{}", if passed { "PASS" } else { "FAIL" });
            s
        }
        Format::Dot => return Err(unsupported(c.format, "certify")),
    };
    Ok(Report { body, passed })
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out` or to the `--out` file. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, path)) => {
            let written = match path {
                Some(p) => std::fs::write(&p, &report.body).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(report.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if report.passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("pasm").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn vertices_json() {
        let (code, out, _) = run_str(&["vertices", "--lambda", "3,1", "--nu", "4,2,2", "--m", "4", "--n", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 10);
    }

    #[test]
    fn volume_and_dim() {
        let (code, out, _) = run_str(&["volume", "--lambda", "3,1", "--nu", "4,2,2"]);
        assert_eq!(code, 0);
        assert!(out.contains("linear extensions: 8") && out.contains("naruse: 8"));
        let (code, out, _) = run_str(&["dim", "--lambda", "3,1", "--nu", "4,2,2", "--m", "4", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("4"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["vertices", "--lambda", "3", "--nu", "2"]).0, 2);
        assert_eq!(run_str(&["vertices", "--nu", "2", "--bogus"]).0, 2);
        assert_eq!(run_str(&["vertices", "--nu", "1,2"]).0, 2);
        assert_eq!(run_str(&["vertices", "--nu", "2", "--m", "1"]).0, 2);
        assert_eq!(run_str(&["dim", "--nu", "2", "--format", "dot"]).0, 2);
    }
}
