//! Command-line surface: load algebra bundles, run the verifiers, compute
//! operator cohomology, enumerate Rota-Baxter grids, analyze deformations,
//! and run the Leibniz-to-triple-system transfer suite.
//!
//! Exit codes are a stable contract: 0 when every requested check passes,
//! 1 on a mathematical failure (an identity violated, a class obstructed),
//! 2 on I/O, parse or usage errors.

mod bundle;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ltsys::cohomology::{cohomology_dims, leibniz_rb_report, t_complex, transfer_checks};
use ltsys::deform::{is_extendable, obstruction, verify_order_n, DeformationSeries};
use ltsys::json::{format_rational, operator_to_file, report_to_value};
use ltsys::op::{classify_grid, nijenhuis_report, rota_baxter_report, RbContext, RelRb};
use ltsys::rep::verify_representation;
use ltsys::{Error, QMatrix, QRbContext, QRelRb, Report, Q};

use bundle::{load, Bundle};

#[derive(Parser)]
#[command(name = "ltsys")]
#[command(about = "Exact computations with Leibniz triple systems and Rota-Baxter operators")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining identities of an object in a bundle
    Verify {
        /// Which object to verify
        what: VerifyWhat,
        /// Bundle path or builtin:NAME
        input: Option<String>,
        /// Builtin bundle name (alternative to a path)
        #[arg(long)]
        fixture: Option<String>,
        /// Also write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cohomology dimensions of a relative Rota-Baxter operator
    Cohomology {
        input: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate integer operator matrices passing the relative identity
    ClassifyGrid {
        input: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        /// Entries range over [-BOUND, BOUND]
        #[arg(long, default_value_t = 1)]
        bound: i64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify, obstruct or extend a truncated deformation series
    Deform {
        action: DeformAction,
        input: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        /// Truncate the series to this order first
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Transfer checks from a Leibniz algebra operator to its triple system
    Functor {
        input: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Lts,
    Leibniz,
    Rep,
    Rb,
    RelativeRb,
    Nijenhuis,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeformAction {
    Verify,
    Obstruction,
    Extend,
}

/// Error with a process exit code: 2 for usage/parse, 1 for math failures
/// that cannot produce a structured report.
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify {
            what,
            input,
            fixture,
            json,
        } => cmd_verify(what, load(input.as_deref(), fixture.as_deref())?, json),
        Command::Cohomology {
            input,
            fixture,
            json,
        } => cmd_cohomology(load(input.as_deref(), fixture.as_deref())?, json),
        Command::ClassifyGrid {
            input,
            fixture,
            bound,
            json,
        } => cmd_classify_grid(load(input.as_deref(), fixture.as_deref())?, bound, json),
        Command::Deform {
            action,
            input,
            fixture,
            order,
            json,
        } => cmd_deform(action, load(input.as_deref(), fixture.as_deref())?, order, json),
        Command::Functor {
            input,
            fixture,
            json,
        } => cmd_functor(load(input.as_deref(), fixture.as_deref())?, json),
    }
}

fn require<T>(section: Option<T>, name: &str) -> Result<T, CliError> {
    section.ok_or_else(|| CliError::usage(format!("bundle has no {name:?} section")))
}

fn context_of(bundle: &Bundle) -> Result<QRbContext, CliError> {
    let lts = require(bundle.lts.clone(), "lts")?;
    let rep = require(bundle.representation.clone(), "representation")?;
    RbContext::new(lts, rep).map_err(|e| CliError::usage(format!("inconsistent bundle: {e}")))
}

fn operator_of(bundle: &Bundle, ctx: &Arc<QRbContext>) -> Result<QRelRb, CliError> {
    let matrix = require(bundle.operator.clone(), "operator")?;
    RelRb::new(ctx.clone(), matrix).map_err(|e| CliError::usage(format!("bad operator: {e}")))
}

fn print_report(report: &Report<Q>) {
    if report.ok() {
        println!("ok");
    } else {
        print!("{report}");
    }
}

fn write_json(path: Option<PathBuf>, value: &Value) -> Result<(), CliError> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::usage(format!("cannot serialize report: {e}")))?;
        text.push('\n');
        std::fs::write(&path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn finish_report(report: Report<Q>, json: Option<PathBuf>) -> Result<bool, CliError> {
    print_report(&report);
    write_json(json, &report_to_value(&report))?;
    Ok(report.ok())
}

fn cmd_verify(what: VerifyWhat, bundle: Bundle, json: Option<PathBuf>) -> Result<bool, CliError> {
    let report = match what {
        VerifyWhat::Lts => require(bundle.lts.clone(), "lts")?.verify(),
        VerifyWhat::Leibniz => require(bundle.leibniz.clone(), "leibniz")?.verify(),
        VerifyWhat::Rep => {
            let ctx = context_of(&bundle)?;
            verify_representation(ctx.lts(), ctx.rep())
        }
        VerifyWhat::Rb => {
            let lts = require(bundle.lts.clone(), "lts")?;
            let op = require(bundle.operator.clone(), "operator")?;
            if !op.is_square() || op.rows() != lts.dim() {
                return Err(CliError::usage("square operator of the algebra dimension required"));
            }
            rota_baxter_report(&lts, &op)
        }
        VerifyWhat::RelativeRb => {
            let ctx = Arc::new(context_of(&bundle)?);
            operator_of(&bundle, &ctx)?.verify()
        }
        VerifyWhat::Nijenhuis => {
            let lts = require(bundle.lts.clone(), "lts")?;
            let op = require(bundle.operator.clone(), "operator")?;
            if !op.is_square() || op.rows() != lts.dim() {
                return Err(CliError::usage("square operator of the algebra dimension required"));
            }
            nijenhuis_report(&lts, &op)
        }
    };
    finish_report(report, json)
}

fn cmd_cohomology(bundle: Bundle, json: Option<PathBuf>) -> Result<bool, CliError> {
    let ctx = Arc::new(context_of(&bundle)?);
    let rep_report = verify_representation(ctx.lts(), ctx.rep());
    if !rep_report.ok() {
        println!("representation is invalid:");
        print_report(&rep_report);
        write_json(
            json,
            &json!({"h1": null, "h3": null, "complex_ok": false,
                    "witnesses": report_to_value(&rep_report)["witnesses"]}),
        )?;
        return Ok(false);
    }
    let op = operator_of(&bundle, &ctx)?;
    let op_report = op.verify();
    if !op_report.ok() {
        println!("operator fails the relative Rota-Baxter identity:");
        print_report(&op_report);
        write_json(
            json,
            &json!({"h1": null, "h3": null, "complex_ok": false,
                    "witnesses": report_to_value(&op_report)["witnesses"]}),
        )?;
        return Ok(false);
    }
    let complex = t_complex(&op).map_err(|e| CliError::math(format!("complex failed: {e}")))?;
    let (h1, h3) =
        cohomology_dims(&complex).map_err(|e| CliError::math(format!("cohomology failed: {e}")))?;
    println!("h1 = {h1}");
    println!("h3 = {h3}");
    println!("complex_ok = true");
    write_json(
        json,
        &json!({"h1": h1, "h3": h3, "complex_ok": true, "witnesses": []}),
    )?;
    Ok(true)
}

fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    operator_to_file(m).matrix
}

fn cmd_classify_grid(bundle: Bundle, bound: i64, json: Option<PathBuf>) -> Result<bool, CliError> {
    let ctx = context_of(&bundle)?;
    let grid = match classify_grid(&ctx, bound) {
        Ok(grid) => grid,
        Err(e @ Error::GridTooLarge { .. }) => return Err(CliError::usage(e.to_string())),
        Err(e) => return Err(CliError::math(e.to_string())),
    };
    for mat in &grid.passing {
        let rows: Vec<String> = (0..mat.rows())
            .map(|i| {
                let row: Vec<String> =
                    (0..mat.cols()).map(|j| format_rational(mat.at(i, j))).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        println!("[{}]", rows.join(", "));
    }
    println!(
        "{} of {} candidate matrices satisfy the identity (bound {bound})",
        grid.passing.len(),
        grid.total
    );
    write_json(
        json,
        &json!({
            "bound": bound,
            "total": grid.total.to_string(),
            "count": grid.passing.len(),
            "passing": grid.passing.iter().map(matrix_strings).collect::<Vec<_>>(),
        }),
    )?;
    Ok(true)
}

fn series_of(bundle: &Bundle, order: Option<usize>) -> Result<DeformationSeries<Q>, CliError> {
    let ctx = Arc::new(context_of(bundle)?);
    let coeffs = require(bundle.deformation.clone(), "deformation")?;
    if coeffs.is_empty() {
        return Err(CliError::usage("deformation needs at least the base coefficient"));
    }
    if let Some(op) = &bundle.operator {
        if *op != coeffs[0] {
            return Err(CliError::usage(
                "deformation coefficient 0 differs from the operator section",
            ));
        }
    }
    let op = RelRb::new(ctx, coeffs[0].clone())
        .map_err(|e| CliError::usage(format!("bad operator: {e}")))?;
    op.verify();
    let series = DeformationSeries::new(op, coeffs[1..].to_vec())
        .map_err(|e| CliError::usage(format!("bad deformation: {e}")))?;
    Ok(match order {
        Some(order) => series.truncated(order),
        None => series,
    })
}

fn cmd_deform(
    action: DeformAction,
    bundle: Bundle,
    order: Option<usize>,
    json: Option<PathBuf>,
) -> Result<bool, CliError> {
    let series = series_of(&bundle, order)?;
    let order_report = verify_order_n(&series);
    for (s, report) in order_report.orders.iter().enumerate() {
        if report.ok() {
            println!("order {s}: ok");
        } else {
            println!("order {s}: FAILED");
            print!("{report}");
        }
    }
    let orders_json: Vec<Value> = order_report
        .orders
        .iter()
        .enumerate()
        .map(|(s, r)| json!({"order": s, "ok": r.ok()}))
        .collect();
    if !order_report.ok() {
        write_json(
            json,
            &json!({"orders": orders_json, "obstruction": null, "extension": null}),
        )?;
        return Ok(false);
    }
    if matches!(action, DeformAction::Verify) {
        write_json(
            json,
            &json!({"orders": orders_json, "obstruction": null, "extension": null}),
        )?;
        return Ok(true);
    }

    let ob = obstruction(&series).map_err(|e| CliError::math(e.to_string()))?;
    let extension = is_extendable(&series).map_err(|e| CliError::math(e.to_string()))?;
    let summary = if ob.is_zero() {
        "zero"
    } else if extension.is_some() {
        "coboundary"
    } else {
        "nontrivial-class"
    };
    println!("obstruction: {summary}");
    let mut ok = true;
    let extension_json = match (&action, &extension) {
        (DeformAction::Extend, Some(next)) => {
            println!("extension coefficient found:");
            for row in matrix_strings(next) {
                println!("  [{}]", row.join(", "));
            }
            let extended = series
                .extended(next.clone())
                .map_err(|e| CliError::math(e.to_string()))?;
            let recheck = verify_order_n(&extended);
            println!(
                "re-verified at order {}: {}",
                extended.order(),
                if recheck.ok() { "ok" } else { "FAILED" }
            );
            ok = recheck.ok();
            json!(matrix_strings(next))
        }
        (DeformAction::Extend, None) => {
            println!("not extendable: the obstruction class is nontrivial");
            ok = false;
            Value::Null
        }
        _ => extension.as_ref().map(|m| json!(matrix_strings(m))).unwrap_or(Value::Null),
    };
    write_json(
        json,
        &json!({"orders": orders_json, "obstruction": summary, "extension": extension_json}),
    )?;
    Ok(ok)
}

fn cmd_functor(bundle: Bundle, json: Option<PathBuf>) -> Result<bool, CliError> {
    let alg = require(bundle.leibniz.clone(), "leibniz")?;
    let rep = require(bundle.leibniz_representation.clone(), "leibniz_representation")?;
    let t = require(bundle.operator.clone(), "operator")?;
    if t.rows() != alg.dim() || t.cols() != rep.module_dim() {
        return Err(CliError::usage("operator shape does not match the context"));
    }
    let alg_report = alg.verify();
    if !alg_report.ok() {
        println!("leibniz algebra is invalid:");
        return finish_report(alg_report, json);
    }
    let rb = leibniz_rb_report(&alg, &rep, &t);
    if !rb.ok() {
        println!("operator fails the Leibniz relative Rota-Baxter identity:");
        return finish_report(rb, json);
    }
    let report = transfer_checks(&alg, &rep, &t).map_err(|e| CliError::math(e.to_string()))?;
    println!(
        "relative-rb on triple system: {}",
        if report.relative_rb_on_lts { "ok" } else { "FAILED" }
    );
    println!(
        "1-cocycles transfer:          {}",
        if report.cocycle_transfer { "ok" } else { "FAILED" }
    );
    println!(
        "2-cocycles give 3-cocycles:   {}",
        if report.omega_transfer { "ok" } else { "FAILED" }
    );
    println!(
        "degree-1 lemma identity:      {}",
        if report.lemma_identity { "ok" } else { "FAILED" }
    );
    write_json(
        json,
        &json!({
            "relative_rb_on_lts": report.relative_rb_on_lts,
            "cocycle_transfer": report.cocycle_transfer,
            "omega_transfer": report.omega_transfer,
            "lemma_identity": report.lemma_identity,
        }),
    )?;
    Ok(report.all_ok())
}
