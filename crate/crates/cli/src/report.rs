//! CSV and JSON emitters. Floats are written with 17 significant digits so
//! the text round-trips to the same f64.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::run::{Cell, ResultRow, RunOutput};

const INTEGRATOR: &str = "magnus4";
const QUADRATURE: &str = "trapezoid";

fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_cell(c: &Cell) -> String {
    match c {
        Cell::Value(v) => fmt_float(*v),
        Cell::Error(kind) => (*kind).to_string(),
    }
}

fn ratio(c: &Cell, tau: f64) -> Cell {
    match c {
        Cell::Value(v) => Cell::Value(v / tau),
        other => other.clone(),
    }
}

pub fn header(out: &RunOutput) -> Vec<String> {
    let bounds = &out.config.bounds;
    let mut h = vec!["scenario_id".to_string(), "tau".to_string()];
    h.extend(bounds.iter().map(|b| b.column().to_string()));
    h.extend(bounds.iter().map(|b| format!("{}_over_tau", b.column())));
    h.extend(out.extra_columns.iter().cloned());
    h.extend(["relative_purity_end", "affinity_end", "error"].map(String::from));
    h
}

fn record(row: &ResultRow) -> Vec<String> {
    let mut r = vec![row.scenario_id.clone(), fmt_float(row.tau)];
    r.extend(row.bounds.iter().map(fmt_cell));
    r.extend(row.bounds.iter().map(|c| fmt_cell(&ratio(c, row.tau))));
    r.extend(row.extras.iter().map(fmt_cell));
    r.push(row.relative_purity_end.map(fmt_float).unwrap_or_default());
    r.push(row.affinity_end.map(fmt_float).unwrap_or_default());
    r.push(row.error.clone().unwrap_or_default());
    r
}

pub fn write_csv<W: Write>(out: &RunOutput, w: W) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(w);
    let io = |e: csv::Error| CliError::Write(e.to_string());
    csv.write_record(header(out)).map_err(io)?;
    for row in &out.rows {
        csv.write_record(record(row)).map_err(io)?;
    }
    csv.flush().map_err(|e| CliError::Write(e.to_string()))
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Value(v) => json!(v),
        Cell::Error(kind) => json!(kind),
    }
}

pub fn to_json(out: &RunOutput) -> Value {
    let cfg = &out.config;
    let mut meta = Map::new();
    meta.insert("experiment".into(), json!(cfg.experiment.name()));
    meta.insert("seed".into(), json!(cfg.seed));
    meta.insert("steps".into(), json!(cfg.steps));
    meta.insert("grid".into(), json!(cfg.tau_grid));
    meta.insert("gamma_over_j".into(), json!(cfg.gamma_over_j));
    if cfg.experiment == crate::config::Experiment::Fig1a {
        meta.insert("instances".into(), json!(cfg.instances));
    }
    meta.insert("ensemble".into(), json!(out.ensemble));
    meta.insert("integrator".into(), json!(INTEGRATOR));
    meta.insert("quadrature".into(), json!(QUADRATURE));
    meta.insert("bounds".into(), json!(cfg.bounds.iter().map(|b| b.column()).collect::<Vec<_>>()));

    let rows: Vec<Value> = out
        .rows
        .iter()
        .map(|row| {
            let mut m = Map::new();
            m.insert("scenario_id".into(), json!(row.scenario_id));
            m.insert("tau".into(), json!(row.tau));
            for (b, c) in cfg.bounds.iter().zip(&row.bounds) {
                m.insert(b.column().into(), cell_json(c));
            }
            for (b, c) in cfg.bounds.iter().zip(&row.bounds) {
                m.insert(format!("{}_over_tau", b.column()), cell_json(&ratio(c, row.tau)));
            }
            for (name, c) in out.extra_columns.iter().zip(&row.extras) {
                m.insert(name.clone(), cell_json(c));
            }
            m.insert("relative_purity_end".into(), json!(row.relative_purity_end));
            m.insert("affinity_end".into(), json!(row.affinity_end));
            m.insert("error".into(), json!(row.error));
            Value::Object(m)
        })
        .collect();
    json!({ "meta": meta, "rows": rows })
}

pub fn write_json<W: Write>(out: &RunOutput, mut w: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut w, &to_json(out)).map_err(|e| CliError::Write(e.to_string()))?;
    writeln!(w).map_err(|e| CliError::Write(e.to_string()))
}
