//! `dgla`: coefficient tables, verification certificates and model documents
//! for the symmetric triangle and `k`-gon models.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on usage or configuration errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dgla_core::cell::{based_triangle_model, CellModel, ModelDoc};
use dgla_core::certificate::Certificate;
use dgla_core::element::Element;
use dgla_core::linalg::SpectrumDoc;
use dgla_core::lyndon::{lyndon_coordinates, LyndonMonomial};
use dgla_core::rational::{display_rational, format_rational, parse_rational, Rational};
use dgla_core::symmetric::{
    connector_names, connectors, kgon_linear_part, kgon_symmetric_data, universal_word, Corruption, SymmetricData,
};
use dgla_core::verify::{verify, Shape, VerifyConfig};
use dgla_core::Error;

#[derive(Parser, Debug)]
#[command(name = "dgla", version, about = "Exact symmetric DGLA models of the triangle and k-gons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lyndon-coordinate tables of the connectors.
    Coefficients {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Also print gamma as a Lie word in (alpha, beta) (triangle only).
        #[arg(long)]
        universal: bool,
    },
    /// Run the invariant suite and emit a certificate.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Seed of the randomized property suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per property suite (0 skips the suites).
        #[arg(long, default_value_t = 100)]
        instances: usize,
        /// Debug: perturb `alpha`, `x` or `q` to exercise a failing run.
        #[arg(long, value_name = "NAME")]
        corrupt: Option<String>,
    },
    /// Emit the cell model as a JSON document.
    Model {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
        /// Emit the model based at this vertex instead of the symmetric one.
        #[arg(long, value_parser = ["a", "b", "c"])]
        based: Option<String>,
        /// Transform the model by a named symmetry before emitting it.
        #[arg(long, value_name = "ELEMENT")]
        symmetry: Option<String>,
        /// Emit the full symmetric data (named elements and certificates).
        #[arg(long, conflicts_with = "based")]
        with_data: bool,
    },
    /// Depth-0 spectrum of the subdivision map.
    KgonSpectrum {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long, value_enum, default_value_t = ShapeArg::Triangle)]
    shape: ShapeArg,
    /// Number of sides for `--shape kgon`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..=100))]
    k: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Triangle,
    Kgon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Failure categories mapped to exit codes.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl ShapeArgs {
    fn resolve(&self) -> Result<Shape, Failure> {
        match (self.shape, self.k) {
            (ShapeArg::Triangle, None | Some(3)) => Ok(Shape::Triangle),
            (ShapeArg::Triangle, Some(k)) => Err(Failure::Usage(format!("--k {k} conflicts with --shape triangle"))),
            (ShapeArg::Kgon, Some(k)) => Ok(Shape::Kgon(k as usize)),
            (ShapeArg::Kgon, None) => Err(Failure::Usage("--shape kgon requires --k".into())),
        }
    }
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct CoordinateRow {
    depth: usize,
    monomial: String,
    coeff: String,
}

#[derive(Serialize)]
struct Table {
    name: String,
    generators: Vec<String>,
    rows: Vec<CoordinateRow>,
}

#[derive(Serialize)]
struct CoefficientsDoc {
    shape: String,
    k: usize,
    depth: usize,
    tables: Vec<Table>,
}

fn table(name: &str, x: &Element) -> Result<Table, Failure> {
    let t = x.table();
    let coords: Vec<(LyndonMonomial, Rational)> = lyndon_coordinates(x)?;
    Ok(Table {
        name: name.into(),
        generators: t.generators().iter().map(|g| g.name.clone()).collect(),
        rows: coords
            .into_iter()
            .map(|(m, c)| CoordinateRow { depth: m.depth(), monomial: m.render(t), coeff: format_rational(&c) })
            .collect(),
    })
}

fn render_table(out: &mut String, t: &Table) {
    let width = t.rows.iter().map(|r| r.monomial.chars().count()).max().unwrap_or(8).max(8);
    let _ = writeln!(out, "{} in ({})", t.name, t.generators.join(", "));
    let _ = writeln!(out, "  {:<5}  {:<width$}  coefficient", "depth", "monomial");
    for r in &t.rows {
        let pad = width - r.monomial.chars().count();
        let _ = writeln!(out, "  {:<5}  {}{}  {}", r.depth, r.monomial, " ".repeat(pad), pretty(&r.coeff));
    }
    if t.rows.is_empty() {
        let _ = writeln!(out, "  (zero)");
    }
    out.push('\n');
}

/// `p/q` as it reads best in a table (`-1`, `0`, `1/2`).
fn pretty(coeff: &str) -> String {
    parse_rational(coeff).map(|r| display_rational(&r)).unwrap_or_else(|_| coeff.to_string())
}

fn shape_name(shape: Shape) -> String {
    match shape {
        Shape::Triangle => "triangle".into(),
        Shape::Kgon(_) => "kgon".into(),
    }
}

fn cmd_coefficients(shape: Shape, depth: usize, output: Output, universal: bool) -> Result<String, Failure> {
    let k = shape.k();
    if universal && k != 3 {
        return Err(Failure::Usage("--universal is only available for the triangle".into()));
    }
    let conns = if k == 3 {
        let (a, b, c) = connectors(depth)?;
        vec![a, b, c]
    } else {
        kgon_symmetric_data(k, depth, None)?.connectors
    };
    let mut tables = Vec::new();
    for (name, c) in connector_names(k).iter().zip(&conns) {
        tables.push(table(name, c)?);
    }
    if universal {
        let u = universal_word(&conns[0], &conns[1], &conns[2])?;
        tables.push(table("gamma as F(alpha, beta)", &u.word)?);
    }
    let doc = CoefficientsDoc { shape: shape_name(shape), k, depth, tables };
    Ok(match output {
        Output::Json => json(&doc),
        Output::Text => {
            let mut s = format!("{} (k = {k}), through depth {depth}\n\n", doc.shape);
            for t in &doc.tables {
                render_table(&mut s, t);
            }
            s
        }
    })
}

fn render_certificate(c: &Certificate) -> String {
    let mut s = format!("{} (k = {}), depth {}, seed {}\n", c.shape, c.k, c.depth, c.seed);
    let width = c.checks.iter().map(|x| x.name.len()).max().unwrap_or(0);
    for x in &c.checks {
        let _ = writeln!(
            s,
            "  {}  {:<width$}  depth {}  {}",
            if x.passed { "PASS" } else { "FAIL" },
            x.name,
            x.depth,
            x.detail
        );
    }
    if let Some(sp) = &c.spectrum {
        let _ = writeln!(s, "spectrum: {}", sp.rendered);
    }
    for n in &c.notes {
        let _ = writeln!(s, "note: {n}");
    }
    let passed = c.checks.iter().filter(|x| x.passed).count();
    let _ = writeln!(s, "{passed}/{} checks passed", c.checks.len());
    s
}

fn cmd_verify(cfg: &VerifyConfig, output: Output) -> Result<(String, Option<String>), Failure> {
    let cert = verify(cfg)?;
    let body = match output {
        Output::Json => json(&cert),
        Output::Text => render_certificate(&cert),
    };
    let failure = cert.first_failure().map(|f| format!("check {} failed at depth {}: {}", f.name, f.depth, f.detail));
    Ok((body, failure))
}

fn model_output(doc: &ModelDoc, output: Output) -> String {
    match output {
        Output::Json => json(doc),
        Output::Text => {
            let mut s = format!("model through word length {}\n", doc.truncation);
            for d in &doc.differentials {
                let el = d.value.to_element().map(|e| e.to_string()).unwrap_or_else(|e| e.to_string());
                let _ = writeln!(s, "∂{} = {}", d.generator, el);
            }
            s
        }
    }
}

fn cmd_model(
    shape: Shape,
    depth: usize,
    output: Output,
    based: Option<&str>,
    symmetry: Option<&str>,
    with_data: bool,
) -> Result<String, Failure> {
    let k = shape.k();
    let (model, data): (CellModel, Option<SymmetricData>) = match based {
        Some(v) => {
            if k != 3 {
                return Err(Failure::Usage("--based is only available for the triangle".into()));
            }
            (based_triangle_model(v, depth + 1)?, None)
        }
        None => {
            let d = kgon_symmetric_data(k, depth, None)?;
            (d.model.clone(), Some(d))
        }
    };
    let model = match symmetry {
        Some(name) => {
            let polygon = match &data {
                Some(d) => d.polygon.clone(),
                None => dgla_core::symmetric::Polygon::triangle(),
            };
            model.transformed(&polygon.group_element(model.space(), name)?)?
        }
        None => model,
    };
    if with_data {
        let d = data.expect("with_data conflicts with based");
        let mut doc = d.to_doc(d.checks()?);
        doc.model = model.to_doc();
        return Ok(json(&doc));
    }
    Ok(model_output(&model.to_doc(), output))
}

#[derive(Serialize)]
struct SpectrumReport {
    k: usize,
    generators: Vec<String>,
    spectrum: SpectrumDoc,
}

fn cmd_spectrum(shape: Shape, output: Output) -> Result<(String, bool), Failure> {
    let k = shape.k();
    let lp = kgon_linear_part(k)?;
    let report = SpectrumReport { k, generators: lp.generators.clone(), spectrum: lp.to_doc() };
    let ok = report.spectrum.roots_in_unit_disc;
    let body = match output {
        Output::Json => json(&report),
        Output::Text => {
            let sp = &report.spectrum;
            let mut s = format!("k = {k}, depth-0 map on ({})\n", report.generators.join(", "));
            for row in &sp.matrix {
                let row: Vec<String> = row.iter().map(|c| pretty(c)).collect();
                let _ = writeln!(s, "  [{}]", row.join(", "));
            }
            let _ = writeln!(s, "characteristic polynomial: {}", sp.rendered);
            let _ = writeln!(s, "zero roots: {}", sp.zero_root_multiplicity);
            if let Some(m) = &sp.nonzero_root_modulus_squared {
                let _ = writeln!(s, "nonzero root modulus squared: {m}");
            }
            let _ = writeln!(s, "all roots in the open unit disc: {}", sp.roots_in_unit_disc);
            for n in &sp.notes {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
    };
    Ok((body, ok))
}

fn run(cli: Cli) -> Result<(String, Option<String>), Failure> {
    match cli.command {
        Command::Coefficients { shape, depth, output, universal } => {
            Ok((cmd_coefficients(shape.resolve()?, depth as usize, output, universal)?, None))
        }
        Command::Verify { shape, depth, output, seed, instances, corrupt } => {
            let mut cfg = VerifyConfig::new(shape.resolve()?, depth as usize, seed);
            cfg.property_instances = instances;
            cfg.corrupt = corrupt.as_deref().map(Corruption::parse).transpose()?;
            cmd_verify(&cfg, output)
        }
        Command::Model { shape, depth, output, based, symmetry, with_data } => Ok((
            cmd_model(shape.resolve()?, depth as usize, output, based.as_deref(), symmetry.as_deref(), with_data)?,
            None,
        )),
        Command::KgonSpectrum { shape, output } => {
            let (body, ok) = cmd_spectrum(shape.resolve()?, output)?;
            Ok((body, (!ok).then(|| "characteristic roots are not inside the unit disc".to_string())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((body, failure)) => {
            print!("{body}");
            match failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
