mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use hermsym::branching::decompose;
use hermsym::jordan::Element;
use hermsym::moment::{moment_general, moment_polytope, moment_to_weight, PairPoint};
use hermsym::okounkov::okounkov_pipeline;
use hermsym::random::{random_element_scaled, seeded};
use hermsym::registry::{k_max, section_budget, HermitianSpace};
use hermsym::verify::{run_suite, Check, Status, Suite, VerifyConfig};
use hermsym::{Error, JordanModel};

use report::{Format, Meta, Report, Table};

/// Models with a larger V are refused without `--force`.
const MAX_DIM: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "hermsym", version, about = "Compact Hermitian symmetric spaces: Jordan pairs, moment maps, branching and Okounkov bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Model spec, `rect:p,q` or `spin:n`.
    model: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for every random sample.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip the size and k budget guards.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, dimension, structure constant, frame, roots and polytope vertices.
    Describe {
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites; exit 1 on any failure.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suites to run (repeatable or comma separated); all by default.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        /// Float tolerance for the numeric checks.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Random instances per check.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Highest k for the branching and okounkov suites.
        #[arg(long)]
        k: Option<u32>,
    },
    /// K-type decomposition of the sections of 𝓛ᵏ.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Vertices of k·Π_s.
    Polytope {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Generators, Λ-images and body vertices of the Okounkov body.
    Okounkov {
        #[command(flatten)]
        common: Common,
        /// Highest level at which finite generation is checked.
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Evaluate the moment map at a point ⟦x : a⟧.
    MomentEval {
        #[command(flatten)]
        common: Common,
        /// Coordinates of x, comma separated complex numbers (random if absent).
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Coordinates of a (zero if absent).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
    },
}

enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ModelSpec(_) | Error::UnsupportedModel(_) | Error::Dimension { .. } => {
                CliError::Usage(e.to_string())
            }
            e => CliError::Failure(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(msg) = init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let format = cli_format(&cli.command);
    match run(cli.command) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if let Err(e) = report.render(format, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if report.failed() {
                if let Some(c) = report.checks.iter().find(|c| c.status == Status::Fail) {
                    eprintln!("verification failed: {}: {}", c.name, c.detail);
                }
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// `HERMSYM_THREADS` caps the rayon pool.
fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("HERMSYM_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("HERMSYM_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn cli_format(cmd: &Command) -> Format {
    match cmd {
        Command::Describe { common }
        | Command::Verify { common, .. }
        | Command::Decompose { common, .. }
        | Command::Polytope { common, .. }
        | Command::Okounkov { common, .. }
        | Command::MomentEval { common, .. } => common.format,
    }
}

fn run(cmd: Command) -> CliResult<Report> {
    match cmd {
        Command::Describe { common } => describe(&common),
        Command::Verify {
            common,
            suite,
            tolerance,
            samples,
            k,
        } => verify(&common, &suite, tolerance, samples, k),
        Command::Decompose { common, k } => cmd_decompose(&common, k),
        Command::Polytope { common, k } => polytope(&common, k),
        Command::Okounkov { common, k } => okounkov(&common, k),
        Command::MomentEval { common, x, a } => moment_eval(&common, x.as_deref(), a.as_deref()),
    }
}

/// Parses the model and applies the size guard, plus the k guard when `k` is given.
fn space(common: &Common, k: Option<(u32, u32)>) -> CliResult<HermitianSpace> {
    let model = JordanModel::parse(&common.model)?;
    if common.force {
        return Ok(HermitianSpace::new(model)?);
    }
    if model.dim() > MAX_DIM {
        return Err(CliError::Usage(format!(
            "{model} has dim V = {} > {MAX_DIM}; rerun with --force",
            model.dim()
        )));
    }
    if let Some((k, limit)) = k {
        if k > limit {
            return Err(CliError::Usage(format!(
                "k = {k} exceeds k_max = {limit} for {model}; rerun with --force"
            )));
        }
    }
    Ok(HermitianSpace::new(model)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report data serializes")
}

fn join(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn describe(common: &Common) -> CliResult<Report> {
    let sp = space(common, None)?;
    let d = sp.describe()?;
    let mut table = Table::new(["field", "value"]);
    let rows: Vec<(&str, String)> = vec![
        ("model", d.model.clone()),
        ("type", d.lie_type.clone()),
        ("rank", d.rank.to_string()),
        ("dim", d.dim.to_string()),
        ("structure_constant", d.structure_constant.to_string()),
        ("k_max", d.k_max.to_string()),
        ("lambda", join(&d.lambda)),
    ];
    for (k, v) in rows {
        table.push(vec![k.to_string(), v]);
    }
    for (j, f) in d.frame.iter().enumerate() {
        table.push(vec![format!("frame[{}]", j + 1), join(f)]);
    }
    for (j, g) in d.gammas.iter().enumerate() {
        table.push(vec![format!("gamma[{}]", j + 1), join(g)]);
    }
    for (j, v) in d.vertices.iter().enumerate() {
        table.push(vec![format!("lambda[{j}]"), join(v)]);
    }
    Ok(Report {
        tabulated_checks: false,
        meta: Meta::new("describe", d.model.clone(), common.seed),
        data: to_value(&d),
        checks: Vec::new(),
        table,
        footer: Vec::new(),
    })
}

fn verify(
    common: &Common,
    suites: &[Suite],
    tolerance: f64,
    samples: usize,
    k: Option<u32>,
) -> CliResult<Report> {
    let model = JordanModel::parse(&common.model)?;
    space(common, k.map(|k| (k, k_max(model))))?;
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(CliError::Usage(format!("tolerance must be non-negative, got {tolerance}")));
    }
    let budget = section_budget(model);
    let cfg = VerifyConfig {
        seed: common.seed,
        tolerance,
        samples,
        k_max: k,
        section_budget: k.map(|k| if common.force { k } else { k.min(budget) }),
    };
    let selected: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        let mut s: Vec<Suite> = Vec::new();
        for &x in suites {
            if !s.contains(&x) {
                s.push(x);
            }
        }
        s
    };
    let mut checks = Vec::new();
    let mut summary = Vec::new();
    let mut table = Table::new(["suite", "check", "status", "detail"]);
    for suite in selected {
        let results: Vec<Check> = run_suite(model, suite, &cfg);
        let count = |st: Status| results.iter().filter(|c| c.status == st).count();
        summary.push(json!({
            "suite": suite.name(),
            "passed": count(Status::Pass),
            "failed": count(Status::Fail),
            "skipped": count(Status::Skip),
        }));
        for c in results {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skip => "skip",
            };
            table.push(vec![suite.name().into(), c.name.clone(), status.into(), c.detail.clone()]);
            checks.push(Check {
                name: format!("{}/{}", suite.name(), c.name),
                ..c
            });
        }
    }
    let mut meta = Meta::new("verify", model.to_string(), common.seed);
    meta.k = k;
    let ok = !checks.iter().any(|c| c.status == Status::Fail);
    Ok(Report {
        tabulated_checks: false,
        meta,
        data: json!({ "tolerance": tolerance, "samples": samples, "suites": summary }),
        checks,
        table,
        footer: vec![if ok { "all checks passed".into() } else { "verification FAILED".into() }],
    }
    .checks_in_table())
}

fn cmd_decompose(common: &Common, k: u32) -> CliResult<Report> {
    let model = JordanModel::parse(&common.model)?;
    let sp = space(common, Some((k, k_max(model))))?;
    let table_data = decompose(&sp.parabolic, k)?;
    let mut table = Table::new(["m", "label", "dominant", "dimension"]);
    for e in &table_data.entries {
        table.push(vec![
            format!("({})", e.m.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")),
            join(&e.label.to_strings()),
            join(&e.dominant.to_strings()),
            e.dimension.to_string(),
        ]);
    }
    let checks = vec![
        Check::new(
            "dimension-identity",
            table_data.is_consistent(),
            format!("Σ dim = {}, weyl dimension = {}", table_data.total, table_data.expected_total),
        ),
        Check::new(
            "multiplicity-free",
            table_data.is_multiplicity_free(),
            format!("{} K-types", table_data.entries.len()),
        ),
    ];
    let mut meta = Meta::new("decompose", model.to_string(), common.seed);
    meta.k = Some(k);
    Ok(Report {
        tabulated_checks: false,
        meta,
        footer: vec![format!("total {}", table_data.total)],
        data: to_value(&table_data),
        checks,
        table,
    })
}

fn polytope(common: &Common, k: u32) -> CliResult<Report> {
    let model = JordanModel::parse(&common.model)?;
    let sp = space(common, Some((k, k_max(model))))?;
    let vertices = moment_polytope(&sp.parabolic, k);
    let dim = vertices.first().map_or(0, |v| v.dim());
    let mut table = Table::new(
        std::iter::once("vertex".to_string()).chain((1..=dim).map(|i| format!("e{i}"))),
    );
    for (j, v) in vertices.iter().enumerate() {
        table.push(std::iter::once(j.to_string()).chain(v.to_strings()).collect());
    }
    let mut meta = Meta::new("polytope", model.to_string(), common.seed);
    meta.k = Some(k);
    let data: Vec<Vec<String>> = vertices.iter().map(|v| v.to_strings()).collect();
    Ok(Report {
        tabulated_checks: false,
        meta,
        data: json!({ "vertices": data }),
        checks: Vec::new(),
        table,
        footer: Vec::new(),
    })
}

fn okounkov(common: &Common, k: u32) -> CliResult<Report> {
    let model = JordanModel::parse(&common.model)?;
    if let JordanModel::Spin { .. } = model {
        return Err(Error::UnsupportedModel(format!("{model} (okounkov supports rect models)")).into());
    }
    let sp = space(common, Some((k, section_budget(model))))?;
    let names = [
        "lambda-image",
        "distinct-valuations",
        "lambda-bijection",
        "finite-generation",
        "hull-size",
        "hull-vertices",
    ];
    let mut meta = Meta::new("okounkov", sp.model.to_string(), common.seed);
    meta.k = Some(k);
    let d = match okounkov_pipeline(sp.model, k) {
        Ok(d) => d,
        Err(Error::Okounkov { check, m, detail }) => {
            let checks = names
                .iter()
                .map(|n| {
                    if *n == check {
                        Check::new(*n, false, format!("m = {m:?}: {detail}"))
                    } else {
                        Check::skip(*n, "not reached or passed before the failure")
                    }
                })
                .collect();
            return Ok(Report {
                tabulated_checks: false,
                meta,
                data: Value::Null,
                checks,
                table: Table::default(),
                footer: Vec::new(),
            });
        }
        Err(e) => return Err(e.into()),
    };
    meta.convention = Some(
        match d.convention.convention {
            hermsym::okounkov::Convention::Positive => "positive",
            hermsym::okounkov::Convention::Negative => "negative",
        }
        .to_string(),
    );
    let with_level = |v: &Vec<u32>| -> Vec<u32> { std::iter::once(1).chain(v.iter().copied()).collect() };
    let generators: Vec<Vec<u32>> = d.generators.iter().map(with_level).collect();
    let images: Vec<Vec<String>> = d.lambda_images.iter().map(|w| w.to_strings()).collect();
    let n = d.generators.first().map_or(0, Vec::len);
    let mut table = Table::new(
        std::iter::once("vertex".to_string()).chain((1..=n).map(|i| format!("v{i}"))),
    );
    for (j, v) in d.body_vertices.iter().enumerate() {
        table.push(std::iter::once(j.to_string()).chain(v.iter().map(u32::to_string)).collect());
    }
    let levels = d.levels_checked.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
    let checks = names
        .iter()
        .map(|n| {
            let detail = match *n {
                "finite-generation" if d.levels_checked.is_empty() => "no level above 1 requested".into(),
                "finite-generation" => format!("levels {levels}"),
                "hull-size" => format!("{} vertices", d.body_vertices.len()),
                _ => format!("{} generators", d.generators.len()),
            };
            Check::new(*n, true, detail)
        })
        .collect();
    let footer = generators
        .iter()
        .zip(&images)
        .map(|(g, w)| {
            let g: Vec<String> = g.iter().map(u32::to_string).collect();
            format!("generator {} ↦ Λ = {}", join(&g), join(w))
        })
        .chain(std::iter::once(format!("vacuous convention test: {}", d.convention.vacuous)))
        .collect();
    Ok(Report {
        tabulated_checks: false,
        meta,
        data: json!({
            "convention": d.convention,
            "generators": generators,
            "lambda_images": images,
            "body_vertices": d.body_vertices,
            "levels_checked": d.levels_checked,
        }),
        checks,
        table,
        footer,
    })
}

fn parse_point(model: JordanModel, s: &str) -> CliResult<Element<Complex64>> {
    let coords = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Complex64>()
                .map_err(|_| CliError::Usage(format!("cannot parse `{}` as a complex number", t.trim())))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if coords.len() != model.dim() {
        return Err(Error::Dimension {
            expected: model.dim(),
            got: coords.len(),
        }
        .into());
    }
    Ok(Element { model, coords })
}

fn moment_eval(common: &Common, x: Option<&str>, a: Option<&str>) -> CliResult<Report> {
    let sp = space(common, None)?;
    let model = sp.model;
    let mut rng = seeded(common.seed);
    let x = match x {
        Some(s) => parse_point(model, s)?,
        None => random_element_scaled(model, 1.0, &mut rng),
    };
    let a = match a {
        Some(s) => parse_point(model, s)?,
        None => Element {
            model,
            coords: vec![Complex64::new(0.0, 0.0); model.dim()],
        },
    };
    let point = PairPoint::new(x.clone(), a.clone())?;
    let value = moment_general(&point)?;
    let weight = point
        .adapted_frame()
        .and_then(|(frame, _)| moment_to_weight(&value, &frame, &sp.parabolic));
    let op = &value.operator;
    let operator: Vec<Vec<[f64; 2]>> = (0..op.rows())
        .map(|i| (0..op.cols()).map(|j| [op.get(i, j).re, op.get(i, j).im]).collect())
        .collect();
    let defect = value.anti_hermitian_defect();
    let mut checks = vec![Check::new("anti-hermitian", defect <= 1e-9, format!("defect {defect:e}"))];
    let mut table = Table::new(["j", "nu"]);
    let weight_json = match &weight {
        Ok(w) => {
            for (j, v) in w.nu.iter().enumerate() {
                table.push(vec![(j + 1).to_string(), format!("{v:.12}")]);
            }
            checks.push(Check::new("chamber", w.in_polytope(), format!("nu = {:?}", w.nu)));
            to_value(w)
        }
        Err(e) => {
            checks.push(Check::skip("chamber", format!("no adapted frame: {e}")));
            Value::Null
        }
    };
    let pair = |e: &Element<Complex64>| -> Vec<[f64; 2]> { e.coords.iter().map(|c| [c.re, c.im]).collect() };
    Ok(Report {
        tabulated_checks: false,
        meta: Meta::new("moment-eval", model.to_string(), common.seed),
        data: json!({
            "x": pair(&x),
            "a": pair(&a),
            "operator": operator,
            "anti_hermitian_defect": defect,
            "moment_weight": weight_json,
        }),
        checks,
        table,
        footer: weight
            .as_ref()
            .map(|w| vec![format!("weight {:?}", w.weight)])
            .unwrap_or_default(),
    })
}
