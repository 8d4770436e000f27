//! File formats: PGM (P2/P5) images and the CSV tables emitted by the CLI.

use std::io::{Read, Write};

use crate::error::{parse, Result};

mod pgm;

pub use pgm::{decode_pgm, encode_p2_heatmap, encode_p5, Pgm};

/// CSV writer with LF record terminators.
pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

/// Writes a sequence as `d,value` rows.
pub fn write_sequence_csv<W: Write>(out: W, values: &[f64]) -> Result<()> {
    let mut wtr = csv_writer(out);
    wtr.write_record(["d", "value"])?;
    for (d, v) in values.iter().enumerate() {
        wtr.write_record([d.to_string(), v.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

/// Reads a `d,value` table. Rows must list `d = 0, 1, 2, ...` in order and
/// every value must be finite.
pub fn read_sequence_csv<R: Read>(input: R) -> Result<Vec<f64>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    if headers.len() != 2 || &headers[0] != "d" || &headers[1] != "value" {
        return Err(parse(format!(
            "sequence CSV must have header `d,value`, got `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut values = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let record = record?;
        if record.len() != 2 {
            return Err(parse(format!("row {}: expected 2 fields", row + 1)));
        }
        let d: u64 = record[0]
            .parse()
            .map_err(|_| parse(format!("row {}: bad index `{}`", row + 1, &record[0])))?;
        if d != row as u64 {
            return Err(parse(format!(
                "row {}: expected index {row}, got {d}",
                row + 1
            )));
        }
        let v: f64 = record[1]
            .parse()
            .map_err(|_| parse(format!("row {}: bad value `{}`", row + 1, &record[1])))?;
        if !v.is_finite() {
            return Err(parse(format!("row {}: value must be finite", row + 1)));
        }
        values.push(v);
    }
    Ok(values)
}
