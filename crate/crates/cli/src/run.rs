//! Executing a parsed configuration.

use std::fmt::Write as _;
use std::sync::Arc;

use geoslice::bounds::BoundSet;
use geoslice::engine::{geodesic_dag, partial_slice_table, slice, slice_profile, window_for_capped};
use geoslice::extension::export::{edge_list, edges_in_window, figure, to_dot, to_svg, Figure};
use geoslice::extension::{appendix_graph, build_reduction, hex_brick_graph, hex_completion, triangular_graph};
use geoslice::verify::{run_suite, CheckConfig, SuiteScale};
use geoslice::{GeoError, ImplicitGraph, PlainGrid, ReductionSpec, Vertex, WeightParams, WeightedLattice, Window};

use crate::config::{CliConfig, CommandKind, Format, GraphKind, GraphSpec};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, PartialEq, Eq)]
pub struct CliError {
    pub status: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { status: EXIT_USAGE, message: message.into() }
    }
}

impl From<GeoError> for CliError {
    fn from(e: GeoError) -> Self {
        let status = match e {
            GeoError::WindowTooLarge { .. } | GeoError::CapExceeded(_) => EXIT_RESOURCE,
            GeoError::InvalidModulus(_)
            | GeoError::InvalidParams(_)
            | GeoError::InvalidReduction(_)
            | GeoError::InvalidWindow(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        let hint = match e {
            GeoError::WindowTooLarge { .. } => "; raise --cell-cap",
            GeoError::CapExceeded(_) => "; raise --cap",
            _ => "",
        };
        CliError { status, message: format!("{e}{hint}") }
    }
}

/// Rendered output and the exit status to report.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

fn params(spec: &GraphSpec) -> Result<WeightParams, CliError> {
    Ok(WeightParams::new(spec.p, spec.a, spec.b)?.with_rule(spec.rule))
}

pub fn build_graph(spec: &GraphSpec) -> Result<Box<dyn ImplicitGraph>, CliError> {
    Ok(match spec.kind {
        GraphKind::H => Box::new(WeightedLattice::new(params(spec)?)),
        GraphKind::Grid => Box::new(PlainGrid),
        GraphKind::Appendix => Box::new(appendix_graph()),
        GraphKind::Triangular => Box::new(triangular_graph()),
        GraphKind::Hex => Box::new(hex_brick_graph()),
        GraphKind::HexCompletion => Box::new(hex_completion()),
        GraphKind::Reduction => {
            let w = params(spec)?;
            let rs = match spec.n {
                Some(n) => ReductionSpec::new(w, spec.m, n)?,
                None => ReductionSpec::with_default_scale(w, spec.m)?,
            };
            Box::new(build_reduction(rs, Arc::new(PlainGrid))?)
        }
    })
}

fn pair(cfg: &CliConfig) -> Result<(Vertex, Vertex), CliError> {
    match (cfg.from, cfg.to) {
        (Some(u), Some(v)) => Ok((u, v)),
        _ => Err(CliError::usage("--from and --to are required")),
    }
}

fn capped_window(cfg: &CliConfig) -> Result<Window, CliError> {
    let w = cfg.window.ok_or_else(|| CliError::usage("--window is required"))?;
    if w.cells() > cfg.cell_cap {
        return Err(GeoError::WindowTooLarge { required: w.cells(), cap: cfg.cell_cap }.into());
    }
    Ok(w)
}

fn unsupported(cfg: &CliConfig) -> CliError {
    CliError::usage(format!("format {:?} is not available for {:?}", cfg.format, cfg.command))
}

pub fn run(cfg: &CliConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        CommandKind::Build => build(cfg),
        CommandKind::Dist => dist(cfg),
        CommandKind::Slice => slices(cfg),
        CommandKind::Count => count(cfg),
        CommandKind::Verify => verify(cfg),
        CommandKind::Export => export(cfg),
    }
}

fn build(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let graph = build_graph(&cfg.graph)?;
    let window = capped_window(cfg)?;
    let weighted = graph.max_cost() > 1;
    let out = match cfg.format {
        Format::Edges => edge_list(&edges_in_window(&*graph, &window), weighted),
        Format::Dot => to_dot(&edges_in_window(&*graph, &window), &graph.name(), weighted),
        Format::Svg => to_svg(&*graph, &window),
        Format::Json => json(&edges_in_window(&*graph, &window)),
        _ => return Err(unsupported(cfg)),
    };
    Ok(Outcome::ok(out))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn dist(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let graph = build_graph(&cfg.graph)?;
    let (u, v) = pair(cfg)?;
    let window = window_for_capped(&*graph, u, v, cfg.cell_cap)?;
    let d = geoslice::engine::distance(&*graph, u, v, &window)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Text => format!("{d}\n"),
        Format::Json => json(&serde_json::json!({ "from": u, "to": v, "distance": d })),
        _ => return Err(unsupported(cfg)),
    }))
}

fn slices(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let graph = build_graph(&cfg.graph)?;
    let (u, v) = pair(cfg)?;
    let window = window_for_capped(&*graph, u, v, cfg.cell_cap)?;
    if let Some(k) = cfg.k {
        let mut s = slice(&*graph, u, v, k, &window)?;
        s.sort();
        return Ok(Outcome::ok(match cfg.format {
            Format::Text => s.iter().fold(String::new(), |mut acc, w| {
                let _ = writeln!(acc, "{},{}", w.x, w.y);
                acc
            }),
            Format::Json => json(&s),
            _ => return Err(unsupported(cfg)),
        }));
    }
    let mut report = slice_profile(&*graph, u, v, &window)?;
    let mut warning = None;
    if cfg.graph.kind == GraphKind::H {
        let p = params(&cfg.graph)?;
        let dag = geodesic_dag(&*graph, u, v, &window)?;
        match partial_slice_table(&dag, p.p(), cfg.cap) {
            Ok(table) => report = report.with_partial(&table),
            Err(GeoError::CapExceeded(c)) => {
                warning = Some(format!("partial slices omitted: more than {c} geodesics"));
            }
            Err(e) => return Err(e.into()),
        }
        report = report.with_bounds(BoundSet::for_params(&p));
    }
    if let Some(w) = warning {
        eprintln!("geoslice: {w}");
    }
    let status = if report.passed() { 0 } else { EXIT_FAILURE };
    let output = match cfg.format {
        Format::Csv => report.to_csv(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("d({},{} -> {},{}) = {}\nmax slice = {}\n", u.x, u.y, v.x, v.y, report.distance, report.max_size);
            for verdict in &report.verdicts {
                let mark = if verdict.pass { "ok" } else { "EXCEEDED" };
                let _ = writeln!(s, "{}: {} <= {} {mark}", verdict.name, verdict.value, verdict.limit);
            }
            s
        }
        _ => return Err(unsupported(cfg)),
    };
    Ok(Outcome { output, status })
}

fn count(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let graph = build_graph(&cfg.graph)?;
    let (u, v) = pair(cfg)?;
    let window = window_for_capped(&*graph, u, v, cfg.cell_cap)?;
    let n = geoslice::engine::count_geodesics(&*graph, u, v, &window, cfg.cap)?.ok_or(GeoError::CapExceeded(cfg.cap))?;
    Ok(Outcome::ok(match cfg.format {
        Format::Text => format!("{n}\n"),
        Format::Json => json(&serde_json::json!({ "from": u, "to": v, "geodesics": n })),
        _ => return Err(unsupported(cfg)),
    }))
}

fn verify(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let base = match cfg.scale {
        SuiteScale::Quick => CheckConfig::quick(),
        SuiteScale::Full => CheckConfig::default(),
    };
    let check_cfg = CheckConfig { params: params(&cfg.graph)?, seed: cfg.seed, cap: cfg.cap, cell_cap: cfg.cell_cap, ..base };
    let golden = match &cfg.golden {
        Some(path) => Some(
            std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?,
        ),
        None => None,
    };
    let report = run_suite(&check_cfg, &cfg.checks, cfg.scale, golden.as_deref()).map_err(CliError::usage)?;
    let output = match cfg.format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
        _ => return Err(unsupported(cfg)),
    };
    Ok(Outcome { output, status: if report.pass { 0 } else { EXIT_FAILURE } })
}

fn export(cfg: &CliConfig) -> Result<Outcome, CliError> {
    if cfg.format != Format::Svg {
        return build(cfg);
    }
    match &cfg.figure {
        Some(name) => {
            let fig: Figure = name.parse().map_err(CliError::usage)?;
            if let Some(w) = cfg.window {
                capped_window(&CliConfig { window: Some(w), ..cfg.clone() })?;
            }
            Ok(Outcome::ok(figure(fig, cfg.window).render()))
        }
        None => build(cfg),
    }
}
