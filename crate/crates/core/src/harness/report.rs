use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::run::{Algorithm, RunReport};

pub const CSV_HEADER: [&str; 12] = [
    "algo",
    "n",
    "m",
    "k",
    "b",
    "build_s",
    "query_s",
    "total_s",
    "lcp_queries",
    "frontier_total",
    "checks",
    "reps",
];

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn record(r: &RunReport) -> [String; 12] {
    [
        r.algo.name().to_string(),
        r.n.to_string(),
        r.m.to_string(),
        r.k.to_string(),
        opt(r.block),
        format!("{:.6}", r.build_s),
        format!("{:.6}", r.query_s),
        format!("{:.6}", r.total_s),
        opt(r.lcp_queries),
        opt(r.frontier_total),
        opt(r.checks),
        r.reps.to_string(),
    ]
}

/// Header plus one row per report.
pub fn write_csv<W: Write>(reports: &[RunReport], out: W) -> Result<()> {
    write_rows(reports, out, true)
}

fn write_rows<W: Write>(reports: &[RunReport], out: W, header: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(CSV_HEADER)?;
    }
    for r in reports {
        w.write_record(record(r))?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

/// Writes a fresh CSV file at `path`.
pub fn emit_csv(reports: &[RunReport], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(reports, file)
}

/// Appends rows to `path`, writing the header first if the file is new or empty.
pub fn append_csv(reports: &[RunReport], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::io(path, e))?;
    let empty = file.metadata().map_err(|e| Error::io(path, e))?.len() == 0;
    write_rows(reports, file, empty)
}

fn field<T: std::str::FromStr>(row: &csv::StringRecord, i: usize) -> Result<T> {
    let raw = row.get(i).unwrap_or("");
    raw.parse()
        .map_err(|_| Error::InvalidOption(format!("column {} holds {raw:?}", CSV_HEADER[i])))
}

fn opt_field(row: &csv::StringRecord, i: usize) -> Result<Option<usize>> {
    match row.get(i) {
        None | Some("") => Ok(None),
        Some(_) => field(row, i).map(Some),
    }
}

/// Parses CSV produced by [`write_csv`].
pub fn read_csv<R: Read>(input: R) -> Result<Vec<RunReport>> {
    let mut rd = csv::Reader::from_reader(input);
    if rd.headers()?.iter().ne(CSV_HEADER) {
        return Err(Error::InvalidOption("unexpected CSV header".into()));
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row?;
        let algo: Algorithm = row.get(0).unwrap_or("").parse()?;
        let reps: usize = field(&row, 11)?;
        out.push(RunReport {
            algo,
            n: field(&row, 1)?,
            m: field(&row, 2)?,
            k: field(&row, 3)?,
            block: opt_field(&row, 4)?,
            build_s: field(&row, 5)?,
            query_s: field(&row, 6)?,
            total_s: field(&row, 7)?,
            lcp_queries: opt_field(&row, 8)?,
            frontier_total: opt_field(&row, 9)?,
            checks: opt_field(&row, 10)?,
            reps,
            median: reps > 1,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp_report() -> RunReport {
        RunReport {
            algo: Algorithm::Dp,
            n: 6,
            m: 7,
            k: 3,
            block: None,
            build_s: 0.0,
            query_s: 0.000_012_4,
            total_s: 0.000_012_4,
            lcp_queries: None,
            frontier_total: None,
            checks: None,
            reps: 1,
            median: false,
        }
    }

    #[test]
    fn single_dp_row() {
        let mut buf = Vec::new();
        write_csv(&[dp_report()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "algo,n,m,k,b,build_s,query_s,total_s,lcp_queries,frontier_total,checks,reps");
        assert_eq!(lines[1], "dp,6,7,3,,0.000000,0.000012,0.000012,,,,1");
        assert_eq!(lines.len(), 2);
    }

    #[test]
    fn append_duplicates() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        append_csv(&[dp_report()], &path).unwrap();
        append_csv(&[dp_report()], &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1], lines[2]);
    }

    #[test]
    fn parse_back() {
        let original = RunReport {
            algo: Algorithm::BfsBh,
            block: Some(32),
            build_s: 0.25,
            query_s: 1.5,
            total_s: 1.75,
            lcp_queries: Some(1234),
            frontier_total: Some(441),
            reps: 3,
            median: true,
            ..dp_report()
        };
        let mut buf = Vec::new();
        write_csv(&[original.clone(), dp_report()], &mut buf).unwrap();
        let back = read_csv(buf.as_slice()).unwrap();
        assert_eq!(back[0], original);
        assert_eq!(back[1].algo, Algorithm::Dp);
        assert_eq!(back[1].query_s, 0.000012);
    }

    #[test]
    fn unwritable_path() {
        let dir = tempfile::tempdir().unwrap();
        let err = emit_csv(&[dp_report()], dir.path().join("no/such/dir.csv")).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
