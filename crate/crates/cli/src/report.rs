//! Aligned text tables and line-delimited JSON records.

use std::fmt::Write as _;

use num_rational::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Records,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i128),
    Text(String),
    Bool(bool),
    Ratio(Ratio<i128>),
    Missing,
}

impl Value {
    fn table(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
            Value::Ratio(r) => ratio_text(r),
            Value::Missing => "-".to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Value::Bool(b) => b.to_string(),
            Value::Ratio(r) => format!("\"{}\"", ratio_text(r)),
            Value::Missing => "null".to_string(),
        }
    }
}

pub fn ratio_text(r: &Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl From<u128> for Value {
    fn from(v: u128) -> Self {
        i128::try_from(v).map_or_else(|_| Value::Text(v.to_string()), Value::Int)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(v: $t) -> Self {
                Value::Int(v as i128)
            }
        }
    )*};
}
int_value!(u32, u64, usize, i64);

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<Ratio<i128>> for Value {
    fn from(v: Ratio<i128>) -> Self {
        Value::Ratio(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Missing, Into::into)
    }
}

/// Ordered `(column, value)` pairs.
#[derive(Debug, Clone, Default)]
pub struct Row(Vec<(&'static str, Value)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.0.push((key, value.into()));
        self
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.0.push((key, value.into()));
    }

    fn json(&self) -> String {
        let fields: Vec<String> = self.0.iter().map(|(k, v)| format!("\"{k}\":{}", v.json())).collect();
        format!("{{{}}}", fields.join(","))
    }
}

/// A command's output. In records mode, `records` (when non-empty) replaces
/// the rows.
#[derive(Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
    pub records: Vec<String>,
    pub skipped: Vec<(String, String)>,
    pub formulas: Vec<(&'static str, &'static str)>,
    pub mismatch: bool,
}

impl Report {
    pub fn skip(&mut self, point: String, reason: impl std::fmt::Display) {
        self.skipped.push((point, reason.to_string()));
    }

    pub fn uses(&mut self, anchor: (&'static str, &'static str)) {
        if !self.formulas.contains(&anchor) {
            self.formulas.push(anchor);
        }
    }

    pub fn render(&self, format: Format, explain: bool) -> String {
        match format {
            Format::Table => self.table(explain),
            Format::Records => self.lines(explain),
        }
    }

    fn table(&self, explain: bool) -> String {
        let mut out = String::new();
        if !self.rows.is_empty() {
            // Rows may differ in their columns; missing cells print as "-".
            let mut header: Vec<&str> = Vec::new();
            for row in &self.rows {
                for (k, _) in &row.0 {
                    if !header.contains(k) {
                        header.push(k);
                    }
                }
            }
            let cells: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|r| {
                    header
                        .iter()
                        .map(|h| {
                            r.0.iter()
                                .find(|(k, _)| k == h)
                                .map_or("-".to_string(), |(_, v)| v.table())
                        })
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|c| c[i].chars().count())
                        .chain([header[i].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: Vec<&str>| -> String {
                let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            out.push_str(&line(header.clone()));
            out.push('\n');
            for c in &cells {
                out.push_str(&line(c.iter().map(String::as_str).collect()));
                out.push('\n');
            }
        }
        if !self.skipped.is_empty() {
            let _ = writeln!(out, "skipped {} point(s):", self.skipped.len());
            for (point, reason) in &self.skipped {
                let _ = writeln!(out, "  {point}: {reason}");
            }
        }
        if explain && !self.formulas.is_empty() {
            out.push_str("formulas:\n");
            for (id, text) in &self.formulas {
                let _ = writeln!(out, "  {id}: {text}");
            }
        }
        out
    }

    fn lines(&self, explain: bool) -> String {
        let mut out = String::new();
        if self.records.is_empty() {
            for r in &self.rows {
                out.push_str(&r.json());
                out.push('\n');
            }
        } else {
            for r in &self.records {
                out.push_str(r);
                out.push('\n');
            }
        }
        for (point, reason) in &self.skipped {
            let row = Row::new()
                .with("skipped", point.as_str())
                .with("reason", reason.as_str());
            out.push_str(&row.json());
            out.push('\n');
        }
        if explain {
            for (id, text) in &self.formulas {
                out.push_str(&Row::new().with("formula", *id).with("definition", *text).json());
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::default();
        r.rows.push(
            Row::new()
                .with("n", 2usize)
                .with("size", 5u128)
                .with("tau", Ratio::new(785i128, 3)),
        );
        r.rows.push(
            Row::new()
                .with("n", 10usize)
                .with("size", Value::Missing)
                .with("tau", Ratio::from_integer(4)),
        );
        r.skip("n=1 t=2".into(), "t exceeds n");
        r
    }

    #[test]
    fn table_is_aligned() {
        let text = sample().render(Format::Table, false);
        let expected = "n   size  tau\n2   5     785/3\n10  -     4/1\nskipped 1 point(s):\n  n=1 t=2: t exceeds n\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn table_unions_columns() {
        let mut r = Report::default();
        r.rows.push(Row::new().with("alg", "min").with("status", "ok"));
        r.rows
            .push(Row::new().with("alg", "sauer").with("bound", 9u32).with("status", "ok"));
        assert_eq!(
            r.render(Format::Table, false),
            "alg    status  bound\nmin    ok      -\nsauer  ok      9\n"
        );
    }

    #[test]
    fn records_keep_field_order() {
        let text = sample().render(Format::Records, false);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), r#"{"n":2,"size":5,"tau":"785/3"}"#);
        assert_eq!(lines.next().unwrap(), r#"{"n":10,"size":null,"tau":"4/1"}"#);
        assert_eq!(lines.next().unwrap(), r#"{"skipped":"n=1 t=2","reason":"t exceeds n"}"#);
    }
}
