//! Rendering of command results as aligned tables, CSV or JSON.

use clap::ValueEnum;
use riordan_core::{Rat, Series, Triangle};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Triangle,
    Series,
    Pair,
    Boolean,
}

/// A command result. Rows hold exact rationals rendered as `n` or `p/q`.
/// Pair documents carry one row per component and name them in
/// `meta.labels`.
#[derive(Clone, Debug, Serialize)]
pub struct OutputDoc {
    pub kind: Kind,
    pub rows: Vec<Vec<String>>,
    pub meta: Map<String, Value>,
}

pub fn rat(r: &Rat) -> String {
    r.to_string()
}

fn series_row(s: &Series) -> Vec<String> {
    s.coeffs().iter().map(rat).collect()
}

impl OutputDoc {
    pub fn triangle(t: &Triangle) -> Self {
        let rows = t.rows().iter().map(|r| r.iter().map(rat).collect()).collect();
        OutputDoc { kind: Kind::Triangle, rows, meta: Map::new() }
    }

    pub fn series(s: &Series) -> Self {
        OutputDoc { kind: Kind::Series, rows: vec![series_row(s)], meta: Map::new() }
    }

    pub fn pair(labels: [&str; 2], a: &Series, b: &Series) -> Self {
        let mut doc = OutputDoc { kind: Kind::Pair, rows: vec![series_row(a), series_row(b)], meta: Map::new() };
        doc.meta.insert("labels".into(), Value::from(labels.to_vec()));
        doc
    }

    pub fn boolean(value: bool) -> Self {
        OutputDoc { kind: Kind::Boolean, rows: vec![vec![value.to_string()]], meta: Map::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.into(), value.into());
        self
    }

    fn labels(&self) -> Option<Vec<String>> {
        let labels = self.meta.get("labels")?.as_array()?;
        Some(labels.iter().map(|v| v.as_str().unwrap_or_default().to_string()).collect())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
                s.push('\n');
                s
            }
        }
    }

    fn labelled_rows(&self) -> Vec<Vec<String>> {
        match self.labels() {
            Some(labels) if self.kind == Kind::Pair => self
                .rows
                .iter()
                .zip(labels)
                .map(|(row, label)| std::iter::once(label).chain(row.iter().cloned()).collect())
                .collect(),
            _ => self.rows.clone(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for row in self.labelled_rows() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_table(&self) -> String {
        if self.kind == Kind::Boolean {
            return self.render_verdict();
        }
        let rows = self.labelled_rows();
        let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0; columns];
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let labelled = self.kind == Kind::Pair && self.labels().is_some();
        let mut out = String::new();
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(i, cell)| {
                    if labelled && i == 0 {
                        format!("{cell:<width$}", width = widths[i])
                    } else {
                        format!("{cell:>width$}", width = widths[i])
                    }
                })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    fn render_verdict(&self) -> String {
        let equal = self.rows.first().and_then(|r| r.first()).is_some_and(|v| v == "true");
        if equal {
            return "equal\n".into();
        }
        match self.meta.get("mismatch") {
            Some(m) => format!(
                "not equal: first mismatch at ({}, {}): lhs = {}, rhs = {}\n",
                m["n"], m["k"], m["lhs"].as_str().unwrap_or_default(), m["rhs"].as_str().unwrap_or_default()
            ),
            None => "not equal\n".into(),
        }
    }
}
