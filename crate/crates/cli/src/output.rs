//! CSV, metadata sidecar and plot emission.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::config::{DeltaChoice, ScanSpec};
use crate::scan::{source_name, Cell, ScanOutput};
use crate::CliError;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn csv_body(out: &ScanOutput) -> String {
    let mut s = out.columns.join(",");
    s.push('\n');
    for row in &out.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| match *c {
                Cell::Int(v) => v.to_string(),
                Cell::Real(v) => format_real(v),
            })
            .collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("meta.json")
}

pub fn svg_path(csv: &Path) -> PathBuf {
    csv.with_extension("svg")
}

pub fn metadata(spec: &ScanSpec, out: &ScanOutput, wall_seconds: f64) -> Value {
    let mut params = Map::new();
    for (k, (v, origin)) in &spec.resolved {
        params.insert(k.clone(), json!({ "value": v, "source": origin.label() }));
    }
    let delta = match spec.delta {
        DeltaChoice::Fixed(d) => json!({ "policy": "fixed", "value": d, "description": spec.delta.describe() }),
        other => json!({
            "policy": match other {
                DeltaChoice::Zero => "zero",
                DeltaChoice::Maximize => "maximize",
                _ => "maximize_at_origin",
            },
            "description": other.describe(),
            "search": {
                "lo": spec.delta_search.lo,
                "hi": spec.delta_search.hi,
                "coarse_step": spec.delta_search.coarse_step,
                "tol": spec.delta_search.tol,
            },
        }),
    };
    json!({
        "command": spec.command.name(),
        "library_version": coulomb_wavepacket::VERSION,
        "cli_version": env!("CARGO_PKG_VERSION"),
        "parameters": params,
        "delta": delta,
        "truncation": {
            "window_sigmas": spec.truncation.window_sigmas,
            "m_cut": spec.truncation.m_cut.map_or(json!("max(2, ceil(4 beta / sqrt 2))"), |m| json!(m)),
            "term_floor": spec.truncation.term_floor,
        },
        "wigner_source": source_name(spec.source),
        "columns": out.columns,
        "rows": out.rows.len(),
        "angle_units": "radians",
        "notes": out.notes,
        "threads": spec.threads,
        "wall_time_seconds": wall_seconds,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Writes the CSV, the sidecar and (if rendered) the plot; returns the paths written.
pub fn write_outputs(spec: &ScanSpec, out: &ScanOutput, wall_seconds: f64) -> Result<Vec<PathBuf>, CliError> {
    let mut written = Vec::new();
    write(&spec.out, &csv_body(out))?;
    written.push(spec.out.clone());
    let meta = serde_json::to_string_pretty(&metadata(spec, out, wall_seconds)).expect("metadata serializes");
    let meta_path = sidecar_path(&spec.out);
    write(&meta_path, &(meta + "\n"))?;
    written.push(meta_path);
    if let Some(svg) = &out.svg {
        let p = svg_path(&spec.out);
        write(&p, svg)?;
        written.push(p);
    }
    Ok(written)
}
