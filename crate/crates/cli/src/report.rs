use anyhow::Result;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};
use crate::suites::Case;

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub config: Value,
    pub cases: Vec<Case>,
    pub wall_ms: u128,
}

/// The resolved configuration, seed included.
pub fn config_echo(cfg: &RunConfig) -> Value {
    let mut grids = Map::new();
    for (k, v) in &cfg.grids {
        grids.insert(k.clone(), json!(v));
    }
    let mut options = Map::new();
    for (k, v) in &cfg.options {
        options.insert(k.clone(), json!(v));
    }
    json!({
        "seed": cfg.seed,
        "trials": cfg.trials,
        "window": cfg.window.to_text(),
        "grids": grids,
        "options": options,
    })
}

impl Report {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    /// Everything except the timing, which lives in its own top-level field.
    pub fn payload(&self) -> Value {
        let cases: Vec<Value> = self
            .cases
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut params = Map::new();
                for (k, v) in &c.params {
                    params.insert(k.clone(), json!(v));
                }
                json!({"case": i, "params": params, "pass": c.pass, "result": c.result})
            })
            .collect();
        json!({
            "schema": SCHEMA,
            "suite": self.suite,
            "config": self.config,
            "aggregate": if self.pass() { "pass" } else { "fail" },
            "cases": cases,
        })
    }

    pub fn to_json(&self) -> String {
        let mut doc = self.payload();
        doc["timing"] = json!({"wall_ms": self.wall_ms});
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    /// One row per case: the parameters, `pass`, then the result fields.
    /// Nested values are written as compact JSON.
    pub fn to_csv(&self) -> Result<String> {
        let mut param_cols: Vec<String> = Vec::new();
        let mut result_cols: Vec<String> = Vec::new();
        for c in &self.cases {
            for (k, _) in &c.params {
                if !param_cols.contains(k) {
                    param_cols.push(k.clone());
                }
            }
            for k in c.result.keys() {
                if !result_cols.contains(k) {
                    result_cols.push(k.clone());
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["case".to_string()];
        header.extend(param_cols.iter().cloned());
        header.push("pass".into());
        header.extend(result_cols.iter().cloned());
        w.write_record(&header)?;
        for (i, c) in self.cases.iter().enumerate() {
            let mut row = vec![i.to_string()];
            for k in &param_cols {
                row.push(c.params.iter().find(|(pk, _)| pk == k).map_or(String::new(), |(_, v)| v.clone()));
            }
            row.push(c.pass.to_string());
            for k in &result_cols {
                row.push(match c.result.get(k) {
                    None | Some(Value::Null) => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    Some(v) => v.to_string(),
                });
            }
            w.write_record(&row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn emit(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }
}
