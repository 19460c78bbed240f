//! CSV reading and writing for points and labels.

use std::fs::File;
use std::path::{Path, PathBuf};

use laclust::{ClusterError, Dataset, Labeling};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse { path: PathBuf, line: u64, column: usize, message: String },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

impl CliError {
    /// 3 for I/O failures, 2 for everything the user can fix in the input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            _ => 2,
        }
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    fn parse(path: &Path, line: u64, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse { path: path.to_path_buf(), line, column, message: message.into() }
    }

    fn csv(path: &Path, err: csv::Error) -> Self {
        let line = err.position().map_or(0, |p| p.line());
        match err.into_kind() {
            csv::ErrorKind::Io(e) => CliError::io(path, e),
            csv::ErrorKind::Utf8 { err, .. } => CliError::parse(path, line, err.field() + 1, "invalid UTF-8"),
            other => CliError::parse(path, line, 1, format!("{other:?}")),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Reads every record of `path`, handing each one with its 1-based line
/// number to `row`.
fn read_rows(path: &Path, header: bool, mut row: impl FnMut(u64, &csv::StringRecord) -> Result<()>) -> Result<usize> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut reader =
        csv::ReaderBuilder::new().has_headers(header).flexible(true).trim(csv::Trim::All).from_reader(file);
    let mut count = 0;
    let mut record = csv::StringRecord::new();
    loop {
        match reader.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {
                let line = record.position().map_or(0, |p| p.line());
                row(line, &record)?;
                count += 1;
            }
            Err(e) => return Err(CliError::csv(path, e)),
        }
    }
    Ok(count)
}

/// One point per row, comma-separated coordinates.
pub fn parse_points(path: &Path, header: bool) -> Result<Dataset> {
    let mut values = Vec::new();
    let mut dim = None;
    let rows = read_rows(path, header, |line, record| {
        let d = *dim.get_or_insert(record.len());
        if record.len() != d {
            return Err(CliError::parse(
                path,
                line,
                d.min(record.len()) + 1,
                format!("expected {d} coordinates, found {}", record.len()),
            ));
        }
        for (j, field) in record.iter().enumerate() {
            let v: f64 =
                field.parse().map_err(|_| CliError::parse(path, line, j + 1, format!("'{field}' is not a number")))?;
            if !v.is_finite() {
                return Err(CliError::parse(path, line, j + 1, format!("'{field}' is not finite")));
            }
            values.push(v);
        }
        Ok(())
    })?;
    if rows == 0 {
        return Err(CliError::Invalid(format!("{}: no points", path.display())));
    }
    Ok(Dataset::new(values, rows, dim.unwrap_or(0))?)
}

/// One 0-based cluster id per row. With `k` given every id must be below
/// it; otherwise `k` is one more than the largest id.
pub fn parse_labels(path: &Path, header: bool, k: Option<usize>) -> Result<Labeling> {
    let mut assign = Vec::new();
    read_rows(path, header, |line, record| {
        if record.len() != 1 {
            return Err(CliError::parse(path, line, 2, format!("expected one label, found {}", record.len())));
        }
        let field = &record[0];
        let label: usize =
            field.parse().map_err(|_| CliError::parse(path, line, 1, format!("'{field}' is not a cluster id")))?;
        if let Some(k) = k.filter(|&k| label >= k) {
            return Err(CliError::parse(path, line, 1, format!("label {label} out of range for k={k}")));
        }
        assign.push(label);
        Ok(())
    })?;
    if assign.is_empty() {
        return Err(CliError::Invalid(format!("{}: no labels", path.display())));
    }
    let k = k.unwrap_or_else(|| assign.iter().max().map_or(0, |m| m + 1));
    Ok(Labeling::new(assign, k)?)
}

fn writer(path: &Path) -> Result<csv::Writer<File>> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    Ok(csv::WriterBuilder::new().has_headers(false).from_writer(file))
}

/// Coordinates are written in shortest round-trip form.
pub fn write_points(path: &Path, data: &Dataset) -> Result<()> {
    let mut w = writer(path)?;
    for row in data.rows() {
        w.write_record(row.iter().map(|v| v.to_string())).map_err(|e| CliError::csv(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn write_labels(path: &Path, labels: &Labeling) -> Result<()> {
    let mut w = writer(path)?;
    for l in labels.as_slice() {
        w.write_record([l.to_string()]).map_err(|e| CliError::csv(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file_with(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn points_with_header_and_crlf() {
        let f = file_with("x,y\r\n1.5, -2\r\n3e2,0\r\n");
        let data = parse_points(f.path(), true).unwrap();
        assert_eq!(data.as_slice(), &[1.5, -2.0, 300.0, 0.0]);
        assert_eq!(data.dim(), 2);
    }

    #[test]
    fn bad_number_reports_position() {
        let f = file_with("1,2\n3,abc\n");
        match parse_points(f.path(), false).unwrap_err() {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (2, 2)),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        let f = file_with("1,2\n3\n");
        let err = parse_points(f.path(), false).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn empty_inputs_are_invalid() {
        let f = file_with("");
        assert_eq!(parse_points(f.path(), false).unwrap_err().exit_code(), 2);
        assert_eq!(parse_labels(f.path(), false, None).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn label_range() {
        let f = file_with("0\n1\n2\n");
        assert_eq!(parse_labels(f.path(), false, None).unwrap().k(), 3);
        let err = parse_labels(f.path(), false, Some(2)).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, column: 1, .. }), "{err}");
        assert!(parse_labels(file_with("-1\n").path(), false, None).is_err());
    }

    #[test]
    fn missing_file_is_io() {
        let err = parse_points(Path::new("/nonexistent/points.csv"), false).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
