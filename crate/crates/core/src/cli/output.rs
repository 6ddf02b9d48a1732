use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    /// `index value` per line, one sequence only
    Bfile,
}

/// A rectangular table of already-formatted cells.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Right-aligned columns separated by two spaces.
    pub fn plain(&self) -> String {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.headers[c].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut out = line(&self.headers);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of row objects keyed by header, in column order. Columns listed
    /// in `numeric` are emitted as JSON numbers, everything else as strings.
    pub fn json(&self, numeric: &[&str]) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (h, cell) in self.headers.iter().zip(row) {
                        let v = if numeric.contains(&h.as_str()) {
                            cell.parse::<u64>()
                                .map(Value::from)
                                .unwrap_or_else(|_| Value::String(cell.clone()))
                        } else {
                            Value::String(cell.clone())
                        };
                        obj.insert(h.clone(), v);
                    }
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    /// Two-column table as `index value` lines.
    pub fn bfile(&self) -> Option<String> {
        if self.headers.len() != 2 {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|r| format!("{} {}\n", r[0], r[1]))
                .collect(),
        )
    }
}
