//! Persisted sweep rows: append-only JSONL (one record per line) and a CSV
//! export with identical columns.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One scanned graph: where it came from, its graph6 form, and both sides of
/// the quarter-unit identity (`sz4 + dsq = (n+2) n^2`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub run: String,
    pub n: usize,
    pub base: String,
    pub lengths: Vec<usize>,
    pub g6: String,
    pub sz4: i64,
    pub dsq: i64,
    /// True when the record attained the running maximum of its scan
    /// partition. Never persisted.
    #[serde(skip)]
    pub is_current_max: bool,
}

impl SweepRecord {
    /// The identity every tricyclic record must satisfy.
    pub fn identity_holds(&self) -> bool {
        let n = self.n as i64;
        self.sz4 + self.dsq == (n + 2) * n * n
    }
}

/// Serialization format for record sinks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RecordFormat {
    #[default]
    Jsonl,
    Csv,
}

pub const CSV_HEADER: &str = "run,n,base,lengths,g6,sz4,dsq";

/// Appends one record to `out` in the given format. CSV lengths are
/// space-separated so the field needs no quoting.
pub fn write_record<W: Write>(out: &mut W, rec: &SweepRecord, format: RecordFormat) -> Result<()> {
    match format {
        RecordFormat::Jsonl => {
            serde_json::to_writer(&mut *out, rec).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n")?;
        }
        RecordFormat::Csv => {
            let lengths = rec
                .lengths
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                rec.run, rec.n, rec.base, lengths, rec.g6, rec.sz4, rec.dsq
            )?;
        }
    }
    Ok(())
}

/// Reads a JSONL record stream, validating the quarter-unit identity of
/// every row on reload.
pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: SweepRecord = serde_json::from_str(&line).map_err(|e| Error::RecordParse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        if !rec.identity_holds() {
            return Err(Error::RecordInvariant {
                line: i + 1,
                n: rec.n,
                sz4: rec.sz4,
                dsq: rec.dsq,
            });
        }
        out.push(rec);
    }
    Ok(out)
}
