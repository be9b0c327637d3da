//! Command-line front-end for the symmetric-square toolkit: model builders,
//! class pairings, effective-cone certificates, the sixteen-curve graph, the
//! weighted-projective model, the plane interpolation oracle, and the
//! one-shot verification suite.
//!
//! Output conventions: payloads go to stdout and are byte-deterministic for
//! fixed flags (rationals rendered as `"p/q"` strings, no timestamps);
//! timings and diagnostics go to stderr. Exit codes: 0 on success, 1 on
//! verification failure, 2 on usage errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symsquare_core::cone::{effective_cone_xtilde, TorsionOrder};
use symsquare_core::lattice::DivClass;
use symsquare_core::plane::{
    build_config, default_config, dn_plane_data, kernel_curve, monomial_basis, oracle_unique_curve,
};
use symsquare_core::surfaces::{
    build_sym2, build_x, build_xtilde_g1, build_xtilde_span, build_z, dn_class, rn_class,
    z_intersection_graph, SurfaceModel,
};
use symsquare_core::verify::{run_all_with_ladder, DEFAULT_LADDER};
use symsquare_core::wps::{
    antidiagonal_components, build_wps, build_wps_preset_g1, preset_diagonal_curves,
    verify_curve_on_x, TangentParam,
};
use symsquare_core::{rat_string, Rat};

#[derive(Parser)]
#[command(
    name = "symsquare",
    version,
    about = "Exact lattice, cone and interpolation computations for symmetric squares of hyperelliptic curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    /// Second symmetric product of the curve (rank 2).
    Sym2,
    /// Quotient by the hyperelliptic involution (rank 2, with cover map).
    X,
    /// Genus-1 quotient blown up at one point (rank 3, 2-torsion).
    XtildeG1,
    /// Pairing table of the five spanning classes at genus ≥ 2.
    XtildeSpan,
    /// Full rank-10 resolution lattice.
    Z,
}

#[derive(Subcommand)]
enum Command {
    /// Print a model: Gram matrix, named classes and relations, as JSON.
    Lattice {
        #[arg(value_enum)]
        model: ModelArg,
        /// Curve genus (used by sym2, x, xtilde-span).
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
    /// Print the intersection pairing of two named classes.
    Pair {
        #[arg(value_enum)]
        model: ModelArg,
        /// Curve genus (used by sym2, x, xtilde-span).
        #[arg(long, default_value_t = 1)]
        genus: u32,
        /// First class name (case-insensitive, e.g. "delta+").
        a: String,
        /// Second class name (case-insensitive).
        b: String,
    },
    /// Print the n-th negative curve and its integer rounding, as JSON.
    Dn {
        #[arg(long)]
        n: u64,
    },
    /// Print effective-cone generators and the containment certificate.
    Cone {
        /// Torsion order: an integer ≥ 2, or "inf" for the infinite case.
        #[arg(long)]
        m: String,
        /// Rung count for the infinite-order ladder.
        #[arg(long, default_value_t = DEFAULT_LADDER)]
        ladder: u64,
    },
    /// Print the sixteen-curve intersection graph (DOT by default).
    Zgraph {
        /// Emit JSON instead of DOT.
        #[arg(long)]
        json: bool,
    },
    /// Print the weighted-projective double-plane model, as JSON.
    Wps {
        #[arg(long, default_value_t = 1)]
        genus: u32,
        /// Comma-separated tangency parameters (rationals or "inf"),
        /// 2·genus + 2 distinct values. Defaults to the standard genus-1
        /// configuration.
        #[arg(long)]
        params: Option<String>,
        /// Also verify and print the named curves (standard genus-1
        /// configuration only).
        #[arg(long)]
        verify_curves: bool,
    },
    /// Print plane fat-point data and the interpolation oracle, as JSON.
    Plane {
        /// Family index n ≥ 1 (the oracle is sized for n ≤ 3).
        #[arg(long)]
        n: u64,
        /// Comma-separated configuration parameters: five distinct
        /// rationals (four tangency values and the marked point).
        #[arg(long)]
        t_values: Option<String>,
        /// Also print the kernel curve's coefficient vector.
        #[arg(long)]
        kernel: bool,
    },
    /// Run the acceptance suite: one line per criterion, exit 1 on failure.
    Verify {
        /// Rung count for the non-polyhedral ladder criterion.
        #[arg(long, default_value_t = DEFAULT_LADDER)]
        ladder: u64,
        /// Emit a JSON report instead of summary lines.
        #[arg(long)]
        json: bool,
    },
}

/// Usage failure: message to stderr, exit code 2.
struct UsageError(String);

impl From<symsquare_core::surfaces::ModelError> for UsageError {
    fn from(e: symsquare_core::surfaces::ModelError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<symsquare_core::cone::ConeError> for UsageError {
    fn from(e: symsquare_core::cone::ConeError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<symsquare_core::wps::WpsError> for UsageError {
    fn from(e: symsquare_core::wps::WpsError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<symsquare_core::plane::PlaneError> for UsageError {
    fn from(e: symsquare_core::plane::PlaneError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<symsquare_core::lattice::LatticeError> for UsageError {
    fn from(e: symsquare_core::lattice::LatticeError) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lattice { model, genus } => cmd_lattice(model, genus),
        Command::Pair { model, genus, a, b } => cmd_pair(model, genus, &a, &b),
        Command::Dn { n } => cmd_dn(n),
        Command::Cone { m, ladder } => cmd_cone(&m, ladder),
        Command::Zgraph { json } => cmd_zgraph(json),
        Command::Wps {
            genus,
            params,
            verify_curves,
        } => cmd_wps(genus, params.as_deref(), verify_curves),
        Command::Plane {
            n,
            t_values,
            kernel,
        } => cmd_plane(n, t_values.as_deref(), kernel),
        Command::Verify { ladder, json } => return cmd_verify(ladder, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build_model(model: ModelArg, genus: u32) -> Result<SurfaceModel, UsageError> {
    Ok(match model {
        ModelArg::Sym2 => build_sym2(genus)?,
        ModelArg::X => build_x(genus)?.0,
        ModelArg::XtildeG1 => build_xtilde_g1()?,
        ModelArg::XtildeSpan => build_xtilde_span(genus)?,
        ModelArg::Z => build_z()?,
    })
}

/// Case-insensitive class lookup, so "delta+" finds "Delta+".
fn find_class<'a>(model: &'a SurfaceModel, name: &str) -> Result<&'a DivClass, UsageError> {
    let wanted = name.to_lowercase();
    for candidate in model.class_names() {
        if candidate.to_lowercase() == wanted {
            return Ok(model.class(candidate)?);
        }
    }
    Err(UsageError(format!(
        "no class named {name:?} in {}; available: {}",
        model.name(),
        model.class_names().join(", ")
    )))
}

/// Write a line to stdout, exiting quietly if the downstream pipe closed
/// (e.g. output piped into `head`).
fn print_line(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(1);
    }
}

fn print_json(v: &Value) {
    print_line(&serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_lattice(model: ModelArg, genus: u32) -> Result<(), UsageError> {
    let model = build_model(model, genus)?;
    print_json(&model.to_json());
    Ok(())
}

fn cmd_pair(model: ModelArg, genus: u32, a: &str, b: &str) -> Result<(), UsageError> {
    let model = build_model(model, genus)?;
    let value = find_class(&model, a)?.pair(find_class(&model, b)?)?;
    print_line(&rat_string(&value));
    Ok(())
}

fn cmd_dn(n: u64) -> Result<(), UsageError> {
    let xtilde = build_xtilde_g1()?;
    let dn = dn_class(&xtilde, n)?;
    let k = xtilde.class("K")?;
    let z = build_z()?;
    let rn = rn_class(&z, n)?;
    print_json(&json!({
        "n": n,
        "class": dn.to_json(),
        "self_int": rat_string(&dn.self_int()),
        "with_canonical": rat_string(&dn.pair(k)?),
        "rounding": rn.to_json(),
        "rounding_self_int": rat_string(&rn.self_int()),
        "rounding_with_antidiagonal": rat_string(&rn.pair(z.class("Delta-")?)?),
    }));
    Ok(())
}

fn cmd_cone(m: &str, ladder: u64) -> Result<(), UsageError> {
    let (order, label) = match m.to_lowercase().as_str() {
        "inf" | "infinity" | "oo" => (TorsionOrder::Infinite, "infinity".to_string()),
        other => {
            let v: u64 = other.parse().map_err(|_| {
                UsageError(format!("--m must be an integer ≥ 2 or \"inf\", got {m:?}"))
            })?;
            (TorsionOrder::Finite(v), v.to_string())
        }
    };
    let (spec, cert) = effective_cone_xtilde(order, ladder)?;
    print_json(&json!({
        "m": label,
        "spec": spec.to_json(),
        "certificate": cert.to_json(),
    }));
    Ok(())
}

fn cmd_zgraph(as_json: bool) -> Result<(), UsageError> {
    let z = build_z()?;
    let graph = z_intersection_graph(&z)?;
    if as_json {
        print_json(&graph.to_json());
    } else {
        print_line(graph.to_dot().trim_end());
    }
    Ok(())
}

fn parse_params(params: &str) -> Result<Vec<TangentParam>, UsageError> {
    params
        .split(',')
        .map(|s| TangentParam::from_str(s.trim()).map_err(UsageError::from))
        .collect()
}

fn cmd_wps(genus: u32, params: Option<&str>, verify_curves: bool) -> Result<(), UsageError> {
    let surface = match params {
        Some(p) => build_wps(genus, parse_params(p)?)?,
        None => {
            if genus != 1 {
                return Err(UsageError(
                    "--params is required for genus ≠ 1 (no standard configuration)".into(),
                ));
            }
            build_wps_preset_g1()?
        }
    };
    let mut payload = surface.to_json();
    if verify_curves {
        if !surface.is_preset_g1() {
            return Err(UsageError(
                "--verify-curves needs the standard genus-1 configuration".into(),
            ));
        }
        let mut curves = preset_diagonal_curves(&surface)?;
        let (delta_minus, delta) = antidiagonal_components(&surface)?;
        curves.push(delta_minus);
        curves.push(delta);
        let mut rendered = Vec::with_capacity(curves.len());
        for curve in &curves {
            verify_curve_on_x(&surface, curve)?;
            let mut v = curve.to_json();
            v["verified"] = json!(true);
            rendered.push(v);
        }
        payload["curves"] = Value::Array(rendered);
    }
    print_json(&payload);
    Ok(())
}

fn parse_t_values(t_values: &str) -> Result<[Rat; 5], UsageError> {
    let parts: Vec<&str> = t_values.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(UsageError(format!(
            "--t-values needs exactly 5 comma-separated rationals, got {}",
            parts.len()
        )));
    }
    let mut out = Vec::with_capacity(5);
    for p in parts {
        let r = Rat::from_str(p).map_err(|e| UsageError(format!("bad rational {p:?}: {e}")))?;
        out.push(r);
    }
    Ok(out.try_into().expect("length checked"))
}

fn cmd_plane(n: u64, t_values: Option<&str>, kernel: bool) -> Result<(), UsageError> {
    let config = match t_values {
        Some(tv) => build_config(parse_t_values(tv)?)?,
        None => default_config(),
    };
    let spec = dn_plane_data(&config, n)?;
    let report = oracle_unique_curve(&spec)?;
    let multiplicities: Vec<usize> = spec.points().iter().map(|p| p.multiplicity()).collect();
    let near: Vec<usize> = spec
        .points()
        .iter()
        .filter(|p| p.near_multiplicity() > 0)
        .map(|p| p.near_multiplicity())
        .collect();
    let mut payload = json!({
        "n": n,
        "degree": spec.degree(),
        "multiplicities": multiplicities,
        "near_multiplicities": near,
        "arithmetic_genus": rat_string(&spec.arithmetic_genus()),
        "rows": report.rows,
        "cols": report.cols,
        "rank": report.rank,
        "corank": report.kernel_dim,
        "exists": report.exists,
        "unique": report.unique,
    });
    if kernel {
        let curve = kernel_curve(&spec)?;
        let coeffs: Vec<String> = monomial_basis(spec.degree())
            .into_iter()
            .map(|e| rat_string(&curve.coeff(e)))
            .collect();
        payload["kernel_curve"] = json!(coeffs);
    }
    print_json(&payload);
    Ok(())
}

fn cmd_verify(ladder: u64, as_json: bool) -> ExitCode {
    let outcomes = run_all_with_ladder(ladder);
    let mut failed = false;
    if as_json {
        let report: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                let mut v = json!({
                    "id": o.id,
                    "label": o.label,
                    "passed": o.passed,
                    "failures": o.failures,
                });
                if let Some(detail) = &o.detail {
                    v["detail"] = json!(detail);
                }
                v
            })
            .collect();
        print_json(&Value::Array(report));
    }
    for o in &outcomes {
        if !as_json {
            print_line(&o.summary_line());
        }
        eprintln!(
            "criterion {}: {} ms{}",
            o.id,
            o.elapsed.as_millis(),
            o.limit
                .map(|l| format!(" (budget {} ms)", l.as_millis()))
                .unwrap_or_default()
        );
        for f in &o.failures {
            eprintln!("  - {f}");
        }
        if !o.passed {
            failed = true;
        }
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
