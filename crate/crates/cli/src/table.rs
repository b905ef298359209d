// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use crate::error::{Result, SimError};

/// Rectangular table whose first column is strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    headers: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl ResultTable {
    /// Builds a table from a leading axis column and value columns with
    /// matching lengths.
    pub fn from_columns(
        axis_header: &str,
        axis: Vec<f64>,
        columns: Vec<(String, Vec<f64>)>,
    ) -> Result<Self> {
        let mut headers = Vec::with_capacity(columns.len() + 1);
        headers.push(axis_header.to_string());
        for (name, values) in &columns {
            if values.len() != axis.len() {
                return Err(SimError::config(format!(
                    "column '{name}' has {} rows, axis has {}",
                    values.len(),
                    axis.len()
                )));
            }
            headers.push(name.clone());
        }
        let rows = axis
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                std::iter::once(t)
                    .chain(columns.iter().map(|(_, v)| v[i]))
                    .collect()
            })
            .collect();
        Self::new(headers, rows)
    }

    pub fn new(headers: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if headers.is_empty() {
            return Err(SimError::config("table needs at least one column"));
        }
        if let Some(h) = headers.iter().find(|h| h.contains(',') || h.contains('\n')) {
            return Err(SimError::config(format!(
                "header '{h}' contains a separator"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != headers.len() {
                return Err(SimError::config(format!(
                    "row {i} has {} cells, expected {}",
                    row.len(),
                    headers.len()
                )));
            }
        }
        if let Some(i) = rows.windows(2).position(|w| !(w[1][0] > w[0][0])) {
            return Err(SimError::config(format!(
                "first column not strictly increasing at row {}",
                i + 1
            )));
        }
        Ok(Self { headers, rows })
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column_index(&self, header: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == header)
    }

    pub fn column(&self, index: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[index]).collect()
    }

    pub fn column_by_name(&self, header: &str) -> Option<Vec<f64>> {
        self.column_index(header).map(|i| self.column(i))
    }

    /// Every cell rounded to the precision written by [`to_csv`](Self::to_csv).
    pub fn quantized(&self) -> Self {
        Self {
            headers: self.headers.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| quantize(v)).collect())
                .collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "{}", format_cell(*v)).expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let headers: Vec<String> = lines
            .next()
            .ok_or_else(|| SimError::config("empty CSV"))?
            .split(',')
            .map(str::to_string)
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row = line
                .split(',')
                .map(|cell| {
                    cell.parse::<f64>().map_err(|_| SimError::ConfigLine {
                        line: i + 2,
                        message: format!("bad number '{cell}'"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::new(headers, rows)
    }
}

/// Scientific notation with 12 significant digits.
pub fn format_cell(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn quantize(v: f64) -> f64 {
    format_cell(v).parse().expect("formatted float parses")
}

/// Header for the column of a given replacement probability.
pub fn p_header(p: f64) -> String {
    format!("p={p}")
}
