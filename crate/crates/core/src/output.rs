//! Tabular output (CSV and JSON with the same schema), atomic file writes
//! and the per-run manifest.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::solver::EigenState;
use crate::units::{PhysicalConstants, WellConfig};

/// Environment variable naming the directory relative output paths live in.
pub const OUTPUT_DIR_ENV: &str = "DIRAC_WELL_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(if v { "pass" } else { "fail" }.to_string())
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// 17 significant digits in scientific notation; locale independent. Negative
/// zero prints as zero.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        "0.0000000000000000e0".into()
    } else if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.16e}")
    }
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Float(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(v) => serde_json::Number::from_f64(*v)
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv)).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Invalid(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
    }

    /// Array of objects keyed by the CSV column names, in column order.
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (name, cell) in self.columns.iter().zip(row) {
                        obj.insert((*name).to_string(), cell.to_json());
                    }
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => to_json_string(&self.to_json_value()),
        }
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub const STATE_COLUMNS: [&str; 9] = [
    "l",
    "n",
    "E_kin_meV",
    "zeta_per_m",
    "xi_per_m",
    "ln_kappa",
    "log10_kappa",
    "skin_depth_nm",
    "boundary_residual",
];

/// One row per state, columns as in [`STATE_COLUMNS`]. A negative κ shows up
/// as a negative sign on `log10_kappa` being impossible, so ln|κ| is reported
/// and the sign lives in the manifest summary.
pub fn state_table(states: &[EigenState]) -> Table {
    let mut t = Table::new(STATE_COLUMNS.to_vec());
    for s in states {
        t.push(state_row(s));
    }
    t
}

pub fn state_row(s: &EigenState) -> Vec<Cell> {
    vec![
        s.azimuthal_l.into(),
        s.radial_n.into(),
        s.energy_kinetic_mev().into(),
        s.wave_numbers.zeta_per_m().into(),
        s.wave_numbers.xi_per_m().into(),
        s.ln_kappa.into(),
        s.log10_kappa().into(),
        (1.0 / s.wave_numbers.xi).into(),
        s.boundary_residual.into(),
    ]
}

/// Resolves a user-supplied output path against [`OUTPUT_DIR_ENV`] when it
/// is relative and the variable is set.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Invalid(format!("writing {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// `foo.csv` → `foo.csv.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSummary {
    pub label: String,
    pub potential_ev: f64,
    pub e_kin_mev: f64,
    pub ln_kappa: f64,
    pub kappa_sign: f64,
    pub boundary_residual: f64,
}

impl StateSummary {
    pub fn new(potential_ev: f64, s: &EigenState) -> Self {
        Self {
            label: s.label(),
            potential_ev,
            e_kin_mev: s.energy_kinetic_mev(),
            ln_kappa: s.ln_kappa,
            kappa_sign: s.kappa_sign,
            boundary_residual: s.boundary_residual,
        }
    }
}

/// Describes one CLI run. Data files never carry timestamps; this does.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub config: Option<WellConfig>,
    pub states_solved: Vec<StateSummary>,
    pub output_paths: Vec<String>,
    pub tool_version: String,
    pub constants_used: PhysicalConstants,
    pub created_unix_seconds: u64,
    pub notes: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, constants: PhysicalConstants) -> Self {
        Self {
            command: command.to_string(),
            arguments: std::env::args().skip(1).collect(),
            config: None,
            states_solved: Vec::new(),
            output_paths: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            constants_used: constants,
            created_unix_seconds: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            notes: Vec::new(),
        }
    }
}
