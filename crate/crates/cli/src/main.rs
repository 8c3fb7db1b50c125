//! Command-line front end: membership checks, extremal generators,
//! bound tables, the verification suite, operator reductions, and SVG
//! renders of disc images.
//!
//! Exit codes: 0 pass/member, 1 fail/non-member, 2 not certified,
//! 64 usage or malformed input.

mod render;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qharm_core::bounds::{bound_table, covering_radius, B1Factor};
use qharm_core::classes::{
    coefficient_functional, extremal_function, extreme_point_g, extreme_point_h,
    is_member_restricted, Verdict,
};
use qharm_core::json::{parse_extremal_weights, parse_series, SeriesJson};
use qharm_core::qcore::ClassParams;
use qharm_core::series::GridSpec;
use qharm_core::sweep::{random_class_params, random_margin_positive, rng_from_seed};
use qharm_core::verify::{
    b1_factor_comparison, default_necessity_radii, necessity_witness, reduction_q1_errors,
    verify_covering, verify_distortion, verify_injectivity_sampled, verify_ratio_condition,
    verify_reduction_m0, verify_reduction_q1, verify_sense_preserving, VerificationReport,
};
use qharm_core::{ClassParams64, GridSpec64, HarmonicSeries64};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DEFAULT_TRUNCATION_ORDER: usize = 64;
const TRUNCATION_ENV: &str = "QHARM_TRUNC_ORDER";

#[derive(Parser)]
#[command(
    name = "qharm",
    version,
    about = "q-difference operators and coefficient classes for planar harmonic mappings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Deformation parameter q, strictly inside (0, 1)
    #[arg(long)]
    q: f64,
    /// Operator order m
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Class order alpha, in [0, 1)
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
}

impl ParamArgs {
    fn to_params(&self) -> Result<ClassParams64, CliError> {
        Ok(ClassParams::from_parts(self.q, self.m, self.alpha)?)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PointKind {
    H,
    G,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    M0,
    Q1,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient-functional membership test for a series file
    Check {
        #[command(flatten)]
        params: ParamArgs,
        /// Series JSON file
        #[arg(long)]
        input: PathBuf,
        /// Use the exact characterization for the restricted sign family
        #[arg(long)]
        restricted: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the margin-zero extremal function for a weight file
    Extremal {
        #[command(flatten)]
        params: ParamArgs,
        /// Weight JSON file: {"x": [[n, re, im], ...], "y": [[n, re, im], ...]}
        #[arg(long)]
        input: PathBuf,
        /// Truncation order (defaults to 64, or QHARM_TRUNC_ORDER)
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit extreme points of the restricted hull
    ExtremePoints {
        #[command(flatten)]
        params: ParamArgs,
        /// Single index to emit; otherwise 1..=count are emitted
        #[arg(long)]
        n: Option<u32>,
        /// Which family of points: h (analytic term) or g (co-analytic term)
        #[arg(long, value_enum, default_value = "h")]
        kind: PointKind,
        #[arg(long, default_value_t = 8)]
        count: u32,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Distortion bound table over radii
    Distort {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0.0)]
        b1: f64,
        /// Radii to tabulate
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 0.9])]
        radii: Vec<f64>,
        /// Use the alternate b1 factor in the bracket
        #[arg(long)]
        variant: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Covering radius, optionally with the b1-factor comparison table
    Cover {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0.0)]
        b1: f64,
        /// Emit the grid-search comparison of the b1 factors instead
        #[arg(long)]
        b1_table: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suite on a series file or a random sweep
    Verify {
        /// Deformation parameter q (required with --input)
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Series JSON file to verify
        #[arg(long, conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Sweep over random margin-positive members instead
        #[arg(long)]
        random: bool,
        /// Require the input to be in the restricted sign family
        #[arg(long)]
        restricted: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: u32,
        /// Grid as RADIIxANGLES, e.g. 32x128
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 0.999)]
        max_radius: f64,
        #[arg(long, default_value_t = qharm_core::verify::GRID_CHECK_TOL)]
        tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Operator reduction checks: m0 (identity) or q1 (classical limit)
    Reduce {
        #[arg(value_enum)]
        which: ReduceKind,
        /// For q1: increasing q values; for m0: the single operator q
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.9, 0.99, 0.999])]
        q: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Series JSON file (defaults to z + z^2)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render the image of concentric circles as SVG, with the covering
    /// disc and distortion annuli overlaid
    Render {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        input: PathBuf,
        /// Source-circle radii to render
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.2, 0.4, 0.6, 0.8, 0.95])]
        rings: Vec<f64>,
        /// Radii whose distortion annuli are overlaid
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.5, 0.9])]
        annuli: Vec<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct CliError {
    message: String,
}

impl From<qharm_core::Error> for CliError {
    fn from(e: qharm_core::Error) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

impl From<String> for CliError {
    fn from(message: String) -> Self {
        CliError { message }
    }
}

fn truncation_order(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var(TRUNCATION_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_TRUNCATION_ORDER)
}

fn read_series(path: &Path) -> Result<HarmonicSeries64, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::from(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_series(&text)?)
}

/// Write the content with exactly one trailing newline, to the file or
/// to stdout, so both sinks carry identical bytes.
fn emit(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    let text = if content.ends_with('\n') {
        content.to_string()
    } else {
        format!("{content}\n")
    };
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::from(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<S: Serialize>(value: &S) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

#[derive(Serialize)]
struct CheckOutput {
    command: &'static str,
    restricted: bool,
    params: ClassParams64,
    functional_value: f64,
    budget: f64,
    margin: f64,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    necessity_r0: Option<f64>,
}

fn run_check(
    params: ClassParams64,
    input: &Path,
    restricted: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let f = read_series(input)?;
    let report = if restricted {
        is_member_restricted(&f, &params)?
    } else {
        coefficient_functional(&f, &params)
    };
    let necessity_r0 = if restricted && report.margin < 0.0 {
        necessity_witness(&f, &params, &default_necessity_radii())?
    } else {
        None
    };
    let out = CheckOutput {
        command: "check",
        restricted,
        params,
        functional_value: report.functional_value,
        budget: report.budget,
        margin: report.margin,
        verdict: report.verdict,
        necessity_r0,
    };
    let content = match format {
        Format::Json => to_json(&out),
        Format::Csv => format!(
            "functional_value,budget,margin,verdict\n{},{},{},{}\n",
            out.functional_value,
            out.budget,
            out.margin,
            verdict_name(out.verdict)
        ),
    };
    emit(output, &content)?;
    Ok(match report.verdict {
        Verdict::MemberSufficient | Verdict::MemberIff => 0,
        Verdict::NonMember => 1,
        Verdict::NotCertified => 2,
    })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::MemberSufficient => "member-sufficient",
        Verdict::NotCertified => "not-certified",
        Verdict::MemberIff => "member-iff",
        Verdict::NonMember => "non-member",
    }
}

fn run_extremal(
    params: ClassParams64,
    input: &Path,
    order: Option<usize>,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::from(format!("cannot read {}: {e}", input.display())))?;
    let weights = parse_extremal_weights(&text)?;
    let order = truncation_order(order).max(weights.max_index() as usize);
    let f = extremal_function(&params, &weights, order)?;
    emit(output, &qharm_core::json::series_to_string(&f))?;
    Ok(0)
}

#[derive(Serialize)]
struct ExtremePointOutput {
    n: u32,
    kind: &'static str,
    hull_boundary: bool,
    series: SeriesJson,
}

#[derive(Serialize)]
struct ExtremePointsOutput {
    command: &'static str,
    params: ClassParams64,
    points: Vec<ExtremePointOutput>,
}

fn run_extreme_points(
    params: ClassParams64,
    n: Option<u32>,
    kind: PointKind,
    count: u32,
    order: Option<usize>,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let indices: Vec<u32> = match n {
        Some(n) => vec![n],
        None => (1..=count).collect(),
    };
    let order = truncation_order(order).max(indices.iter().copied().max().unwrap_or(1) as usize);
    let mut points = Vec::new();
    for idx in indices {
        let (f, name) = match kind {
            PointKind::H => (extreme_point_h(&params, idx, order)?, "h"),
            PointKind::G => (extreme_point_g(&params, idx, order)?, "g"),
        };
        points.push(ExtremePointOutput {
            n: idx,
            kind: name,
            hull_boundary: f.is_hull_boundary(),
            series: SeriesJson::from_harmonic(&f),
        });
    }
    let out = ExtremePointsOutput {
        command: "extreme-points",
        params,
        points,
    };
    emit(output, &to_json(&out))?;
    Ok(0)
}

fn run_distort(
    params: ClassParams64,
    b1: f64,
    radii: &[f64],
    variant: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let factor = if variant {
        B1Factor::Variant
    } else {
        B1Factor::Printed
    };
    let rows = bound_table(&params, b1, radii, factor)?;
    let content = match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("q,m,alpha,b1,r,lower,upper,covering_radius\n");
            for row in &rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    row.q,
                    row.m,
                    row.alpha,
                    row.b1,
                    row.r,
                    row.lower,
                    row.upper,
                    row.covering_radius
                ));
            }
            s
        }
    };
    emit(output, &content)?;
    Ok(0)
}

fn run_cover(
    params: ClassParams64,
    b1: f64,
    b1_table: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    if b1_table {
        let report = b1_factor_comparison(256, qharm_core::verify::GRID_CHECK_TOL);
        let content = match format {
            Format::Json => to_json(&report),
            Format::Csv => {
                let mut s = String::from(
                    "q,m,alpha,b1,r,family,lower_printed,lower_variant,min_modulus,\
                     upper_printed,upper_variant,max_modulus,covering_printed,\
                     lower_limit_printed,upper_violation,lower_violation\n",
                );
                for row in &report.rows {
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                        row.q,
                        row.m,
                        row.alpha,
                        row.b1,
                        row.r,
                        row.family,
                        row.lower_printed,
                        row.lower_variant,
                        row.min_modulus,
                        row.upper_printed,
                        row.upper_variant,
                        row.max_modulus,
                        row.covering_printed,
                        row.lower_limit_printed,
                        row.upper_violation,
                        row.lower_violation
                    ));
                }
                s
            }
        };
        emit(output, &content)?;
        return Ok(0);
    }
    let radius = covering_radius(&params, b1)?;
    let content = match format {
        Format::Json => to_json(&serde_json::json!({
            "command": "cover",
            "params": params,
            "b1": b1,
            "covering_radius": radius,
        })),
        Format::Csv => format!(
            "q,m,alpha,b1,covering_radius\n{},{},{},{},{}\n",
            params.q.get(),
            params.m,
            params.alpha,
            b1,
            radius
        ),
    };
    emit(output, &content)?;
    Ok(0)
}

#[derive(Serialize)]
struct MemberVerification {
    index: usize,
    params: ClassParams64,
    margin: f64,
    restricted_form: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    necessity_r0: Option<f64>,
    checks: Vec<VerificationReport<f64>>,
}

#[derive(Serialize)]
struct VerifyOutput {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    tol: f64,
    grid: GridSpec64,
    members: Vec<MemberVerification>,
    failures: usize,
    pass: bool,
}

fn parse_grid(spec: Option<&str>, max_radius: f64) -> Result<GridSpec64, CliError> {
    let (radii, angles) = match spec {
        None => (32usize, 128usize),
        Some(text) => {
            let mut it = text.split(['x', 'X']);
            let r = it.next().and_then(|v| v.parse().ok());
            let a = it.next().and_then(|v| v.parse().ok());
            match (r, a, it.next()) {
                (Some(r), Some(a), None) if r >= 2 && a >= 1 => (r, a),
                _ => {
                    return Err(CliError::from(format!(
                        "grid must be RADIIxANGLES with at least 2 radii, got {text}"
                    )))
                }
            }
        }
    };
    if max_radius <= 0.05 || max_radius >= 1.0 {
        return Err(CliError::from(format!(
            "max radius must lie in (0.05, 1), got {max_radius}"
        )));
    }
    Ok(GridSpec::geometric(radii, 0.05, max_radius, angles))
}

/// Run the whole suite on one member; returns the member record and the
/// number of failed checks.
fn verify_member(
    index: usize,
    f: &HarmonicSeries64,
    p: &ClassParams64,
    grid: &GridSpec64,
    tol: f64,
) -> Result<(MemberVerification, usize), CliError> {
    let mut checks = vec![
        verify_ratio_condition(f, p, grid, tol)?.strip_grid(),
        verify_sense_preserving(f, grid)?.strip_grid(),
        verify_injectivity_sampled(f, grid, tol)?.strip_grid(),
        verify_reduction_m0(f, p.q, grid).strip_grid(),
        verify_reduction_q1(
            f.h(),
            p.m,
            &[0.9, 0.99, 0.999],
            qharm_core::verify::IDENTITY_TOL,
        )?
        .strip_grid(),
    ];

    let restricted_form = qharm_core::classes::restricted_form_violation(f).is_none();
    let mut necessity_r0 = None;
    let mut margin = coefficient_functional(f, p).margin;
    if restricted_form {
        let rep = is_member_restricted(f, p)?;
        margin = rep.margin;
        // Margin-zero members can round a few ulps below zero; they
        // still belong on the bound-check path.
        if rep.margin >= -1e-12 {
            checks.push(verify_distortion(
                f,
                p,
                &[0.25, 0.5, 0.9],
                grid.angles_per_ring,
                tol,
            )?);
            checks.push(verify_covering(
                f,
                p,
                1.0 - 1e-3,
                grid.angles_per_ring,
                tol,
            )?);
        } else {
            necessity_r0 = necessity_witness(f, p, &default_necessity_radii())?;
        }
    }

    let failures = checks.iter().filter(|c| !c.pass).count();
    Ok((
        MemberVerification {
            index,
            params: *p,
            margin,
            restricted_form,
            necessity_r0,
            checks,
        },
        failures,
    ))
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    q: Option<f64>,
    m: u32,
    alpha: f64,
    input: Option<&Path>,
    random: bool,
    restricted: bool,
    seed: u64,
    count: u32,
    grid_spec: Option<&str>,
    max_radius: f64,
    tol: f64,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let grid = parse_grid(grid_spec, max_radius)?;
    let mut members = Vec::new();
    let mut failures = 0usize;

    if random {
        let mut rng = rng_from_seed(seed);
        for index in 0..count as usize {
            let p = random_class_params(&mut rng);
            let f = random_margin_positive(&mut rng, &p, 16);
            let (member, member_failures) = verify_member(index, &f, &p, &grid, tol)?;
            failures += member_failures;
            members.push(member);
        }
    } else {
        let input = input
            .ok_or_else(|| CliError::from("verify needs --input FILE or --random".to_string()))?;
        let q = q.ok_or_else(|| CliError::from("--q is required with --input".to_string()))?;
        let p = ClassParams::from_parts(q, m, alpha)?;
        let f = read_series(input)?;
        if restricted {
            if let Some(reason) = qharm_core::classes::restricted_form_violation(&f) {
                return Err(qharm_core::Error::NotRestrictedForm(reason).into());
            }
        }
        let (member, member_failures) = verify_member(0, &f, &p, &grid, tol)?;
        failures += member_failures;
        members.push(member);
    }

    let out = VerifyOutput {
        command: "verify",
        seed: random.then_some(seed),
        tol,
        grid,
        members,
        failures,
        pass: failures == 0,
    };
    emit(output, &to_json(&out))?;
    Ok(if failures == 0 { 0 } else { 1 })
}

#[derive(Serialize)]
struct ReduceQ1Output {
    command: &'static str,
    which: &'static str,
    m: u32,
    rows: Vec<qharm_core::verify::ReductionRow<f64>>,
    pass: bool,
    final_max_abs_error: f64,
}

fn run_reduce(
    which: ReduceKind,
    q: &[f64],
    m: u32,
    input: Option<&Path>,
    format: Format,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let f = match input {
        Some(path) => read_series(path)?,
        None => parse_series(r#"{"a": [[1.0, 0.0], [1.0, 0.0]]}"#)?,
    };
    match which {
        ReduceKind::M0 => {
            let qv = *q
                .first()
                .ok_or_else(|| CliError::from("m0 needs one q value".to_string()))?;
            let qp = qharm_core::qcore::QParam::new(qv)?;
            let grid = GridSpec::geometric(16, 0.05, 0.95, 64);
            let report = verify_reduction_m0(&f, qp, &grid).strip_grid();
            let pass = report.pass;
            let content = match format {
                Format::Json => to_json(&serde_json::json!({
                    "command": "reduce",
                    "which": "m0",
                    "q": qv,
                    "report": report,
                })),
                Format::Csv => format!("q,extremum,pass\n{},{},{}\n", qv, report.extremum, pass),
            };
            emit(output, &content)?;
            Ok(if pass { 0 } else { 1 })
        }
        ReduceKind::Q1 => {
            let rows = reduction_q1_errors(f.h(), m, q)?;
            let report = verify_reduction_q1(f.h(), m, q, qharm_core::verify::IDENTITY_TOL)?;
            let out = ReduceQ1Output {
                command: "reduce",
                which: "q1",
                m,
                rows,
                pass: report.pass,
                final_max_abs_error: report.extremum,
            };
            let content = match format {
                Format::Json => to_json(&out),
                Format::Csv => {
                    let mut s = String::from("q,max_abs_error,worst_index\n");
                    for row in &out.rows {
                        s.push_str(&format!(
                            "{},{},{}\n",
                            row.q, row.max_abs_error, row.worst_index
                        ));
                    }
                    s
                }
            };
            emit(output, &content)?;
            Ok(if out.pass { 0 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Check {
            params,
            input,
            restricted,
            format,
            output,
        } => run_check(
            params.to_params()?,
            &input,
            restricted,
            format,
            output.as_deref(),
        ),
        Command::Extremal {
            params,
            input,
            order,
            output,
        } => run_extremal(params.to_params()?, &input, order, output.as_deref()),
        Command::ExtremePoints {
            params,
            n,
            kind,
            count,
            order,
            output,
        } => run_extreme_points(
            params.to_params()?,
            n,
            kind,
            count,
            order,
            output.as_deref(),
        ),
        Command::Distort {
            params,
            b1,
            radii,
            variant,
            format,
            output,
        } => run_distort(
            params.to_params()?,
            b1,
            &radii,
            variant,
            format,
            output.as_deref(),
        ),
        Command::Cover {
            params,
            b1,
            b1_table,
            format,
            output,
        } => run_cover(params.to_params()?, b1, b1_table, format, output.as_deref()),
        Command::Verify {
            q,
            m,
            alpha,
            input,
            random,
            restricted,
            seed,
            count,
            grid,
            max_radius,
            tol,
            output,
        } => run_verify(
            q,
            m,
            alpha,
            input.as_deref(),
            random,
            restricted,
            seed,
            count,
            grid.as_deref(),
            max_radius,
            tol,
            output.as_deref(),
        ),
        Command::Reduce {
            which,
            q,
            m,
            input,
            format,
            output,
        } => run_reduce(which, &q, m, input.as_deref(), format, output.as_deref()),
        Command::Render {
            params,
            input,
            rings,
            annuli,
            output,
        } => {
            let p = params.to_params()?;
            let f = read_series(&input)?;
            let svg = render::render_svg(&f, &p, &rings, &annuli)?;
            emit(output.as_deref(), &svg)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(64)
        }
    }
}
