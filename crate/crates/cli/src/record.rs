use std::path::Path;

use anyhow::{ensure, Context, Result};
use serde::{Deserialize, Serialize};

/// Bytes per stored real and per stored index.
pub const BYTES_PER_REAL: usize = 8;
pub const BYTES_PER_INDEX: usize = 4;

/// Memory of `duals` values of `capacity` derivative slots each:
/// `(1 + capacity)` reals and indices per value, 12 bytes per pair.
pub fn peak_bytes_estimate(duals: usize, capacity: usize) -> u64 {
    (duals * (1 + capacity) * (BYTES_PER_REAL + BYTES_PER_INDEX)) as u64
}

/// One timed run. Serialized with the CSV header
/// `case,n,capacity,wall_time_ns,peak_bytes_estimate,jacobian_nnz`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    #[serde(rename = "case")]
    pub case_name: String,
    #[serde(rename = "n")]
    pub n_independent: usize,
    pub capacity: usize,
    pub wall_time_ns: u64,
    pub peak_bytes_estimate: u64,
    pub jacobian_nnz: usize,
}

impl BenchRecord {
    pub fn validate(&self) -> Result<()> {
        ensure!(self.wall_time_ns > 0, "{}: zero wall time", self.case_name);
        Ok(())
    }
}

pub fn write_csv(path: &Path, records: &[BenchRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_row() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        let r = BenchRecord {
            case_name: "stencil-sparse".into(),
            n_independent: 10,
            capacity: 3,
            wall_time_ns: 1234,
            peak_bytes_estimate: peak_bytes_estimate(20, 3),
            jacobian_nnz: 24,
        };
        write_csv(&path, &[r]).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "case,n,capacity,wall_time_ns,peak_bytes_estimate,jacobian_nnz\nstencil-sparse,10,3,1234,960,24\n"
        );
    }

    #[test]
    fn byte_accounting() {
        assert_eq!(peak_bytes_estimate(1, 3), 48);
        assert_eq!(peak_bytes_estimate(1, 14), 180);
    }
}
