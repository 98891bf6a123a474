//! Deterministic output formatting: 12 significant digits, lowercase `e`
//! exponent, byte-stable across runs.

/// Format a float with 12 significant digits in scientific notation.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// One scan row; oracle columns are optional.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub mu: f64,
    pub e: f64,
    pub err: f64,
    pub oracle_e: Option<f64>,
    pub oracle_dev: Option<f64>,
}

/// Reproducibility metadata carried by scan and compute output.
#[derive(Debug, Clone)]
pub struct Metadata {
    pub model: String,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub version: &'static str,
    pub constants: &'static str,
}

impl Metadata {
    pub fn new(model: &str, rel_tol: f64, abs_tol: f64) -> Self {
        Metadata {
            model: model.to_string(),
            rel_tol,
            abs_tol,
            version: env!("CARGO_PKG_VERSION"),
            constants: "hbar c = 197.3269804 MeV fm (CODATA 2018)",
        }
    }

    pub fn json_object(&self) -> String {
        format!(
            "{{\"model\":\"{}\",\"rel_tol\":\"{}\",\"abs_tol\":\"{}\",\"version\":\"{}\",\"constants\":\"{}\"}}",
            self.model,
            sig12(self.rel_tol),
            sig12(self.abs_tol),
            self.version,
            self.constants
        )
    }
}

/// Tabulated scan result; rows are kept sorted by mu ascending.
#[derive(Debug, Clone)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub metadata: Metadata,
}

impl ScanResult {
    /// CSV with the fixed header `mu,e,err,oracle_e,oracle_dev`; absent
    /// oracle columns are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mu,e,err,oracle_e,oracle_dev\n");
        for r in &self.rows {
            out.push_str(&sig12(r.mu));
            out.push(',');
            out.push_str(&sig12(r.e));
            out.push(',');
            out.push_str(&sig12(r.err));
            out.push(',');
            if let Some(o) = r.oracle_e {
                out.push_str(&sig12(o));
            }
            out.push(',');
            if let Some(d) = r.oracle_dev {
                out.push_str(&sig12(d));
            }
            out.push('\n');
        }
        out
    }

    /// JSON per the schema documented in the README; numbers are emitted
    /// with the same fixed 12-significant-digit formatting as CSV.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"metadata\":");
        out.push_str(&self.metadata.json_object());
        out.push_str(",\"rows\":[");
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"mu\":{},\"e\":{},\"err\":{},\"oracle_e\":{},\"oracle_dev\":{}}}",
                sig12(r.mu),
                sig12(r.e),
                sig12(r.err),
                r.oracle_e.map_or("null".to_string(), sig12),
                r.oracle_dev.map_or("null".to_string(), sig12),
            ));
        }
        out.push_str("]}");
        out
    }
}
