//! CSV formats.
//!
//! * Signals: header `x,value`, one row per grid point, uniform spacing.
//! * Extension sweeps: header `x,y,u,v`.

use std::io::{Read, Write};

use sharpnorm_core::hilbert::{ExtensionPoint, SampledSignal};
use thiserror::Error;

use crate::format::fmt17;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("grid is not uniform at row {row}")]
    NonUniform { row: usize },
    #[error("invalid signal: {0}")]
    Signal(sharpnorm_core::Error),
}

/// Reads a two-column signal and checks that the grid is uniform.
pub fn read_signal<R: Read>(input: R) -> Result<SampledSignal, CsvError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let mut xs = Vec::new();
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = i + 2;
        if record.len() != 2 {
            return Err(CsvError::Row { row, message: format!("expected 2 columns, found {}", record.len()) });
        }
        let parse = |k: usize| {
            record[k]
                .parse::<f64>()
                .map_err(|_| CsvError::Row { row, message: format!("cannot parse `{}`", &record[k]) })
        };
        xs.push(parse(0)?);
        values.push(parse(1)?);
    }
    if xs.len() < 2 {
        return Err(CsvError::Row { row: xs.len() + 2, message: "too few rows".into() });
    }
    let dx = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    for (j, &x) in xs.iter().enumerate() {
        let expected = xs[0] + j as f64 * dx;
        if (x - expected).abs() > 1e-6 * dx.abs() {
            return Err(CsvError::NonUniform { row: j + 2 });
        }
    }
    SampledSignal::new(xs[0], dx, values).map_err(CsvError::Signal)
}

pub fn write_signal<W: Write>(output: W, signal: &SampledSignal) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(output);
    w.write_record(["x", "value"])?;
    for (j, v) in signal.values().iter().enumerate() {
        w.write_record([fmt17(signal.x(j)), fmt17(*v)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_extension<W: Write>(output: W, points: &[ExtensionPoint]) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(output);
    w.write_record(["x", "y", "u", "v"])?;
    for e in points {
        w.write_record([fmt17(e.z.re), fmt17(e.z.im), fmt17(e.u), fmt17(e.v)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Writes a table with a header and 17-digit cells.
pub fn write_table<W: Write>(output: W, header: &[&str], rows: &[Vec<f64>]) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(output);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|v| fmt17(*v)))?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signal_round_trip() {
        let s = SampledSignal::from_fn(-1.5, 0.1, 32, |x| (x * 3.0).sin()).unwrap();
        let mut buf = Vec::new();
        write_signal(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("x,value\n"));
        let back = read_signal(buf.as_slice()).unwrap();
        assert_eq!(back.values(), s.values());
        assert!((back.dx() - 0.1).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(read_signal("x,value\n0,1\n1,abc\n".as_bytes()).is_err());
        assert!(read_signal("x,value\n0,1,2\n".as_bytes()).is_err());
        let mut text = String::from("x,value\n");
        for j in 0..20 {
            let x = if j == 7 { 7.5 } else { j as f64 };
            text.push_str(&format!("{x},0\n"));
        }
        assert!(matches!(read_signal(text.as_bytes()), Err(CsvError::NonUniform { .. })));
    }
}
