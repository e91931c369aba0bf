//! Columnar tables of figure data and their CSV / JSON forms.
//!
//! CSV has one header row of `name [unit]` cells followed by values with 17
//! significant digits. JSON is a single object
//!
//! ```text
//! { "schema_version": 1, "figure_id": "gravity-cauchy" | null, "title": …,
//!   "metadata": { "nu_grid", "t_grid", "x_grid", "tolerances",
//!                 "artifact_version", "notes" },
//!   "units":   { name: unit, … },
//!   "columns": { name: [value | null, …], … } }
//! ```
//!
//! with NaN written as `null`. Column order is preserved in both formats.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::tolerances::Tolerances;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FigureId {
    GreenProfiles,
    MaxVelocityCauchy,
    MaxHyperbolaCauchy,
    MaxLocValProdCauchy,
    MaxVelocitySignaling,
    MaxLocValSignaling,
    GravityCauchy,
    GravitySignaling,
    MedianTable,
}

impl FigureId {
    pub const ALL: [FigureId; 9] = [
        FigureId::GreenProfiles,
        FigureId::MaxVelocityCauchy,
        FigureId::MaxHyperbolaCauchy,
        FigureId::MaxLocValProdCauchy,
        FigureId::MaxVelocitySignaling,
        FigureId::MaxLocValSignaling,
        FigureId::GravityCauchy,
        FigureId::GravitySignaling,
        FigureId::MedianTable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::GreenProfiles => "green-profiles",
            FigureId::MaxVelocityCauchy => "max-velocity-cauchy",
            FigureId::MaxHyperbolaCauchy => "max-hyperbola-cauchy",
            FigureId::MaxLocValProdCauchy => "max-loc-val-prod-cauchy",
            FigureId::MaxVelocitySignaling => "max-velocity-signaling",
            FigureId::MaxLocValSignaling => "max-loc-val-signaling",
            FigureId::GravityCauchy => "gravity-cauchy",
            FigureId::GravitySignaling => "gravity-signaling",
            FigureId::MedianTable => "median-table",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        FigureId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| {
                let known: Vec<&str> = FigureId::ALL.iter().map(|id| id.as_str()).collect();
                Error::Usage(format!("unknown figure id '{s}', expected one of: {}", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub nu_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    #[serde(default)]
    pub x_grid: Vec<f64>,
    pub tolerances: Tolerances,
    pub artifact_version: String,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Metadata {
    pub fn new(nu_grid: Vec<f64>, t_grid: Vec<f64>, tolerances: Tolerances) -> Self {
        Self {
            nu_grid,
            t_grid,
            x_grid: Vec::new(),
            tolerances,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
}

impl Column {
    pub fn new(name: impl Into<String>, unit: impl Into<String>, values: Vec<f64>) -> Self {
        Self {
            name: name.into(),
            unit: unit.into(),
            values,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub figure_id: Option<FigureId>,
    pub title: String,
    pub metadata: Metadata,
    pub columns: Vec<Column>,
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    schema_version: u32,
    figure_id: Option<FigureId>,
    title: String,
    metadata: Metadata,
    units: Map<String, Value>,
    columns: Map<String, Value>,
}

impl FigureTable {
    pub fn new(figure_id: Option<FigureId>, title: impl Into<String>, metadata: Metadata, columns: Vec<Column>) -> Result<Self> {
        let t = Self {
            figure_id,
            title: title.into(),
            metadata,
            columns,
        };
        t.validate()?;
        Ok(t)
    }

    /// Columns non-empty, uniquely named and of equal length.
    pub fn validate(&self) -> Result<()> {
        let first = self
            .columns
            .first()
            .ok_or_else(|| Error::Domain("a table needs at least one column".into()))?;
        for (i, c) in self.columns.iter().enumerate() {
            if c.name.is_empty() || c.name.contains(['[', ']', ',', '"', '\n']) {
                return Err(Error::Domain(format!("invalid column name '{}'", c.name)));
            }
            if c.values.len() != first.values.len() {
                return Err(Error::Domain(format!(
                    "column '{}' has {} rows, expected {}",
                    c.name,
                    c.values.len(),
                    first.values.len()
                )));
            }
            if self.columns[..i].iter().any(|d| d.name == c.name) {
                return Err(Error::Domain(format!("duplicate column '{}'", c.name)));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|c| c.name == name).map(|c| c.values.as_slice())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(self.columns.iter().map(|c| format!("{} [{}]", c.name, c.unit)))
            .map_err(io)?;
        for i in 0..self.rows() {
            w.write_record(self.columns.iter().map(|c| format_value(c.values[i])))
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// Parses the output of [`FigureTable::to_csv`] back into columns.
    pub fn columns_from_csv(text: &str) -> Result<Vec<Column>> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let bad = |m: String| Error::Domain(format!("malformed table CSV: {m}"));
        let headers = r.headers().map_err(|e| bad(e.to_string()))?.clone();
        let mut columns = Vec::with_capacity(headers.len());
        for h in headers.iter() {
            let (name, unit) = h
                .strip_suffix(']')
                .and_then(|s| s.split_once(" ["))
                .ok_or_else(|| bad(format!("header cell '{h}' is not 'name [unit]'")))?;
            columns.push(Column::new(name, unit, Vec::new()));
        }
        for rec in r.records() {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            for (c, cell) in columns.iter_mut().zip(rec.iter()) {
                let v: f64 = cell.parse().map_err(|_| bad(format!("'{cell}' is not a number")))?;
                c.values.push(v);
            }
        }
        Ok(columns)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut units = Map::new();
        let mut columns = Map::new();
        for c in &self.columns {
            units.insert(c.name.clone(), Value::String(c.unit.clone()));
            let values = c
                .values
                .iter()
                .map(|&v| serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number))
                .collect();
            columns.insert(c.name.clone(), Value::Array(values));
        }
        let doc = JsonDoc {
            schema_version: SCHEMA_VERSION,
            figure_id: self.figure_id,
            title: self.title.clone(),
            metadata: self.metadata.clone(),
            units,
            columns,
        };
        serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |m: String| Error::Domain(format!("malformed table JSON: {m}"));
        let doc: JsonDoc = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(bad(format!("unsupported schema_version {}", doc.schema_version)));
        }
        let mut columns = Vec::with_capacity(doc.columns.len());
        for (name, values) in doc.columns {
            let unit = doc
                .units
                .get(&name)
                .and_then(Value::as_str)
                .ok_or_else(|| bad(format!("no unit for column '{name}'")))?;
            let values = values
                .as_array()
                .ok_or_else(|| bad(format!("column '{name}' is not an array")))?
                .iter()
                .map(|v| match v {
                    Value::Null => Ok(f64::NAN),
                    _ => v.as_f64().ok_or_else(|| bad(format!("non-numeric value in '{name}'"))),
                })
                .collect::<Result<Vec<f64>>>()?;
            columns.push(Column::new(name, unit, values));
        }
        Self::new(doc.figure_id, doc.title, doc.metadata, columns)
    }
}

fn format_value(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> FigureTable {
        FigureTable::new(
            Some(FigureId::GravityCauchy),
            "gravity",
            Metadata::new(vec![0.5, 1.0], vec![1.0], Tolerances::default()),
            vec![
                Column::new("nu", "1", vec![0.5, 1.0]),
                Column::new("g_c", "1", vec![1.128_379_167_095_512_6, f64::NAN]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn figure_ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.as_str().parse::<FigureId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert_eq!("median_table".parse::<FigureId>().unwrap(), FigureId::MedianTable);
        assert!("fig7".parse::<FigureId>().is_err());
    }

    #[test]
    fn unequal_columns_are_rejected() {
        let e = FigureTable::new(
            None,
            "t",
            Metadata::new(vec![], vec![], Tolerances::default()),
            vec![Column::new("a", "1", vec![1.0]), Column::new("b", "1", vec![])],
        );
        assert!(e.is_err());
    }

    #[test]
    fn csv_is_lossless() {
        let t = sample();
        let text = t.to_csv().unwrap();
        assert!(text.starts_with("nu [1],g_c [1]\n"));
        let cols = FigureTable::columns_from_csv(&text).unwrap();
        assert_eq!(cols[1].values[0], t.columns[1].values[0]);
        assert!(cols[1].values[1].is_nan());
    }

    #[test]
    fn json_round_trips() {
        let t = sample();
        let back = FigureTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back.figure_id, t.figure_id);
        assert_eq!(back.metadata, t.metadata);
        assert_eq!(back.columns[0], t.columns[0]);
        assert_eq!(back.columns[1].values[0], t.columns[1].values[0]);
        assert!(back.columns[1].values[1].is_nan());
    }
}
