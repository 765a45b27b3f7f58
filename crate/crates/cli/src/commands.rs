use std::fs;
use std::path::Path;
use std::time::Instant;

use mems_core::figures::{self, format_significant, Family};
use mems_core::io::{load_ensemble, state_to_json};
use mems_core::mems::workload_warning;
use mems_core::search::{maximize_component, saturation_report, SearchConfig};
use mems_core::{ensemble_mems, entropy_product, mems_vector, mems_vector_detailed, transform_forbidden, MemsError, PureState};

use crate::args::*;
use crate::error::{CliError, CliResult, EXIT_PARSE, EXIT_SIZE};
use crate::registry::{build_named, from_file, parse_range, parse_spec};
use crate::report::*;

/// What a command produced: stdout text plus stderr diagnostics.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

pub struct Context {
    pub argv: Vec<String>,
    pub strict: bool,
    pub site_cap: usize,
    pub started: Instant,
}

impl Context {
    fn meta(&self) -> Meta {
        Meta {
            command: self.argv.clone(),
            tool_version: env!("CARGO_PKG_VERSION"),
            wall_time_s: self.started.elapsed().as_secs_f64(),
        }
    }

    /// Warns about costly sizes, or fails under `--strict`.
    fn check_workload(&self, n_sites: usize, out: &mut Output) -> CliResult<()> {
        if let Some(msg) = workload_warning(n_sites, self.site_cap) {
            if self.strict {
                return Err(CliError::new(EXIT_SIZE, format!("{msg} (--strict)")));
            }
            out.warnings.push(msg);
        }
        Ok(())
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::unwritable(path, e))
}

fn resolve_state(args: &StateArgs) -> CliResult<PureState> {
    match (&args.state, &args.state_file) {
        (_, Some(path)) => from_file(path),
        (Some(name), None) => build_named(name, args.n, args.dims.as_deref()),
        (None, None) => Err(CliError::new(EXIT_PARSE, "give --state or --state-file")),
    }
}

pub fn compute(ctx: &Context, args: &ComputeArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let state = resolve_state(&args.state)?;
    ctx.check_workload(state.n_sites(), &mut out)?;
    if state.was_renormalized() {
        out.warnings.push("input amplitudes were not normalized; rescaled".into());
    }
    let v = if args.detail { mems_vector_detailed(&state)? } else { mems_vector(&state)? };
    let se = if args.entropy_product { Some(entropy_product(&state)?) } else { None };
    let report = RunReport {
        label: state.label().map(str::to_owned),
        dims: v.dims.clone(),
        mems: v.values.clone(),
        per_subset: v.per_subset,
        entropy_product: se,
        seed: None,
        meta: ctx.meta(),
    };
    out.stdout = if args.json { to_json(&report) } else { report.render_text() };
    Ok(out)
}

pub fn sweep(ctx: &Context, args: &SweepArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let family: Family = args.state.parse()?;
    let sizes = parse_range(&args.n, "--n")?;
    let max_n = *sizes.iter().max().expect("non-empty range");
    ctx.check_workload(max_n, &mut out)?;
    let components = match &args.components {
        Some(text) => parse_range(text, "--components")?,
        None => (1..=max_n / 2).collect(),
    };
    if let Some(i) = components.iter().find(|&&i| i == 0) {
        return Err(CliError::new(EXIT_SIZE, format!("component {i} out of range")));
    }
    let rows = figures::sweep(family, &sizes, &components)?;
    for r in figures::discrepancies(&rows, args.tol) {
        out.warnings.push(format!(
            "n={} i={}: computed {} differs from closed form {} by {:.3e}",
            r.n,
            r.i,
            format_significant(r.s_i, 12),
            format_significant(r.closed_form.unwrap_or(f64::NAN), 12),
            r.discrepancy().unwrap_or(f64::NAN)
        ));
    }
    let csv = figures::to_csv(&rows);
    match &args.out {
        Some(path) => write_file(path, &csv)?,
        None => out.stdout = csv,
    }
    Ok(out)
}

pub fn compare(ctx: &Context, args: &CompareArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let a = parse_spec(&args.a)?;
    let b = parse_spec(&args.b)?;
    if a.dims() != b.dims() {
        return Err(MemsError::ShapeMismatch(format!("dims {:?} vs {:?}", a.dims(), b.dims())).into());
    }
    ctx.check_workload(a.n_sites(), &mut out)?;
    let (va, vb) = (mems_vector(&a)?, mems_vector(&b)?);
    let report = CompareReport {
        tol: args.tol,
        a_to_b: transform_forbidden(&va, &vb, args.tol)?,
        b_to_a: transform_forbidden(&vb, &va, args.tol)?,
        a: Side {
            label: a.label().map(str::to_owned),
            dims: va.dims,
            mems: va.values,
        },
        b: Side {
            label: b.label().map(str::to_owned),
            dims: vb.dims,
            mems: vb.values,
        },
        meta: ctx.meta(),
    };
    out.stdout = if args.json { to_json(&report) } else { report.render_text() };
    Ok(out)
}

pub fn ensemble(ctx: &Context, args: &EnsembleArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let ens = load_ensemble(&args.file).map_err(|e| match e {
        MemsError::Io(io) => CliError::new(EXIT_PARSE, format!("cannot read {}: {io}", args.file.display())),
        other => other.into(),
    })?;
    ctx.check_workload(ens.dims().len(), &mut out)?;
    let v = ensemble_mems(&ens)?;
    let report = RunReport {
        label: Some(format!("ensemble of {}", ens.members().len())),
        dims: v.dims,
        mems: v.values,
        per_subset: None,
        entropy_product: None,
        seed: None,
        meta: ctx.meta(),
    };
    out.stdout = if args.json { to_json(&report) } else { report.render_text() };
    Ok(out)
}

fn dims_from(n: Option<usize>, dims: &Option<Vec<usize>>) -> Vec<usize> {
    match dims {
        Some(d) => d.clone(),
        None => vec![2; n.unwrap_or(0)],
    }
}

pub fn search(ctx: &Context, args: &SearchArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let mut cfg = SearchConfig::new(dims_from(args.n, &args.dims), args.component, args.seed);
    cfg.restarts = args.restarts;
    cfg.max_iters = args.max_iters;
    cfg.step_init = args.step_init;
    cfg.step_min = args.step_min;
    cfg.validate()?;
    ctx.check_workload(cfg.n_sites, &mut out)?;
    let result = maximize_component(&cfg)?;
    if let Some(path) = &args.out {
        let mut text = state_to_json(&result.best_state);
        text.push('\n');
        write_file(path, &text)?;
    }
    if let Some(path) = &args.trace {
        let mut csv = String::from("iteration,value\n");
        for p in &result.trace {
            csv.push_str(&format!("{},{}\n", p.iteration, format_significant(p.value, 12)));
        }
        write_file(path, &csv)?;
    }
    let report = SearchReport {
        seed: cfg.seed,
        dims: cfg.dims.clone(),
        component: cfg.component,
        restarts: cfg.restarts,
        max_iters: cfg.max_iters,
        step_init: cfg.step_init,
        step_min: cfg.step_min,
        best_value: result.best_value,
        restart_index: result.restart_index,
        restart_values: result.restart_values,
        best_mems: mems_vector(&result.best_state)?.values,
        meta: ctx.meta(),
    };
    out.stdout = if args.json { to_json(&report) } else { report.render_text() };
    Ok(out)
}

pub fn saturate(ctx: &Context, args: &SaturateArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let dims = dims_from(args.n, &args.dims);
    if dims.len() < 2 || dims.iter().any(|&d| d < 2) {
        return Err(MemsError::InvalidDims(dims).into());
    }
    ctx.check_workload(dims.len(), &mut out)?;
    let report = SaturateReport {
        seed: args.seed,
        report: saturation_report(&dims, args.component, args.seed)?,
        meta: ctx.meta(),
    };
    out.stdout = if args.json { to_json(&report) } else { report.render_text() };
    Ok(out)
}

pub fn export(_ctx: &Context, args: &ExportArgs) -> CliResult<Output> {
    let mut out = Output::default();
    let mut text = state_to_json(&resolve_state(&args.state)?);
    text.push('\n');
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => out.stdout = text,
    }
    Ok(out)
}
