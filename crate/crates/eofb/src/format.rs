//! On-disk formats: density-matrix input files, JSON reports and CSV rows.
//!
//! Floats in JSON are written with 17 significant digits so every value
//! round-trips exactly.

use std::io;

use eofb_core::bounds::BoundReport;
use eofb_core::linalg::ComplexMatrix;
use eofb_core::states::DensityMatrix;
use eofb_core::Complex64;
use serde::ser::Serialize;
use serde::{Deserialize, Serialize as SerializeDerive};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Density matrix with explicit `[re, im]` pairs, row-major, basis order
/// `a_11, ..., a_1d, a_21, ..., a_2d`.
#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub d: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixFile {
    pub fn from_density(rho: &DensityMatrix, label: Option<String>) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.rows())
            .map(|r| m.row(r).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        Self {
            d: rho.d(),
            matrix,
            label,
        }
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, CliError> {
        serde_json::from_slice(bytes).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Shape checks, then full density-matrix validation against `tol`.
    pub fn to_density(&self, tol: f64) -> Result<DensityMatrix, CliError> {
        let n = 2 * self.d;
        if self.d < 2 {
            return Err(CliError::Invalid(format!(
                "d must be at least 2, got {}",
                self.d
            )));
        }
        if self.matrix.len() != n || self.matrix.iter().any(|row| row.len() != n) {
            return Err(CliError::Invalid(format!(
                "matrix must be {n}x{n} for d = {}",
                self.d
            )));
        }
        let data = self
            .matrix
            .iter()
            .flatten()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let m =
            ComplexMatrix::from_vec(n, n, data).map_err(|e| CliError::Invalid(e.to_string()))?;
        DensityMatrix::new(self.d, m, tol).map_err(|e| CliError::Invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct ChannelEntry {
    pub i: usize,
    pub j: usize,
    pub lambdas: Vec<f64>,
    pub c: f64,
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct ReportBody {
    pub d: usize,
    pub mode: String,
    pub channels: Vec<ChannelEntry>,
    pub c_db: f64,
    pub eof_lower: f64,
    /// Wootters' concurrence, two-qubit inputs only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub concurrence: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ReportBody {
    pub fn new(report: &BoundReport, label: Option<String>) -> Self {
        Self {
            d: report.d,
            mode: report.mode.as_str().to_string(),
            channels: report
                .spectra
                .iter()
                .zip(&report.c_ij)
                .map(|(sp, &c)| ChannelEntry {
                    i: sp.channel.0,
                    j: sp.channel.1,
                    lambdas: sp.lambdas.clone(),
                    c,
                })
                .collect(),
            c_db: report.c_db,
            eof_lower: report.eof_lower,
            concurrence: report.concurrence,
            label,
        }
    }
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    pub tol: f64,
    pub report: ReportBody,
}

impl ReportFile {
    pub fn new(input: &[u8], tol: f64, report: &BoundReport, label: Option<String>) -> Self {
        Self {
            tool: "eofb".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: sha256_hex(input),
            tol,
            report: ReportBody::new(report, label),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Pretty JSON with every float at 17 significant digits.
struct ExactFloats(serde_json::ser::PrettyFormatter<'static>);

impl serde_json::ser::Formatter for ExactFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, ExactFloats(Default::default()));
    value.serialize(&mut ser).expect("in-memory serialization");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Shortest exact float text for CSV cells.
pub fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Channel column names `c_12, c_13, ...` in lexicographic order.
pub fn channel_columns(d: usize) -> Vec<String> {
    (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| format!("c_{i}{j}")))
        .collect()
}

/// One-row CSV for a single report: `d,mode,c_12,...,c_db,eof_lower`.
pub fn report_csv(report: &BoundReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["d".to_string(), "mode".to_string()];
    header.extend(channel_columns(report.d));
    header.extend(["c_db".to_string(), "eof_lower".to_string()]);
    w.write_record(&header).map_err(CliError::from_csv)?;
    let mut row = vec![report.d.to_string(), report.mode.as_str().to_string()];
    row.extend(report.c_ij.iter().map(|&c| csv_float(c)));
    row.extend([csv_float(report.c_db), csv_float(report.eof_lower)]);
    w.write_record(&row).map_err(CliError::from_csv)?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}
