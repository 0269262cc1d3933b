use std::fmt;
use std::str::FromStr;

use splinedim_core::dimension::{DimReport, Method};

use crate::CliError;

/// One line of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub r: u32,
    pub d: u32,
    pub lower_bound: i64,
    pub correction: u64,
    pub total: i64,
    pub method: Method,
    pub oracle_total: Option<u64>,
}

impl TableRow {
    pub fn from_report(report: &DimReport) -> Self {
        Self {
            r: report.r,
            d: report.d,
            lower_bound: report.lower_bound,
            correction: report.correction,
            total: report.total,
            method: report.method,
            oracle_total: None,
        }
    }

    /// Present exactly when an oracle value is attached.
    pub fn matches(&self) -> Option<bool> {
        self.oracle_total.map(|o| i64::try_from(o) == Ok(self.total))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Tsv,
    Pretty,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "tsv" => Ok(Self::Tsv),
            "pretty" => Ok(Self::Pretty),
            _ => Err(format!("unknown format {s:?} (expected csv, tsv or pretty)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Tsv => "tsv",
            Self::Pretty => "pretty",
        })
    }
}

const BASE_HEADER: [&str; 6] = ["r", "d", "L", "H1", "dim", "method"];
const VERIFY_HEADER: [&str; 2] = ["oracle", "match"];

fn cells(row: &TableRow, verified: bool) -> Vec<String> {
    let mut out = vec![
        row.r.to_string(),
        row.d.to_string(),
        row.lower_bound.to_string(),
        row.correction.to_string(),
        row.total.to_string(),
        row.method.tag().to_owned(),
    ];
    if verified {
        out.push(row.oracle_total.map(|o| o.to_string()).unwrap_or_default());
        out.push(row.matches().map(|m| m.to_string()).unwrap_or_default());
    }
    out
}

fn header(verified: bool) -> Vec<&'static str> {
    let mut h = BASE_HEADER.to_vec();
    if verified {
        h.extend(VERIFY_HEADER);
    }
    h
}

/// Renders a table; oracle columns appear when any row carries one.
pub fn emit(rows: &[TableRow], format: Format) -> String {
    let verified = rows.iter().any(|r| r.oracle_total.is_some());
    match format {
        Format::Csv | Format::Tsv => {
            let delimiter = if format == Format::Csv { b',' } else { b'\t' };
            let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(Vec::new());
            w.write_record(header(verified)).expect("in-memory write");
            for row in rows {
                w.write_record(cells(row, verified)).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
        }
        Format::Pretty => {
            let head: Vec<String> = header(verified).into_iter().map(String::from).collect();
            let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, verified)).collect();
            let widths: Vec<usize> = (0..head.len())
                .map(|j| body.iter().map(|c| c[j].len()).chain([head[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |c: &[String]| -> String {
                let padded: Vec<String> = c.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
                padded.join("  ").trim_end().to_owned() + "\n"
            };
            let mut out = line(&head);
            for c in &body {
                out.push_str(&line(c));
            }
            out
        }
    }
}

/// Reads back a CSV table produced by [`emit`].
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, CliError> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| CliError::Parse(e.to_string()))?.clone();
    let names: Vec<&str> = headers.iter().collect();
    let verified = if names == header(false) {
        false
    } else if names == header(true) {
        true
    } else {
        return Err(CliError::Parse(format!("unexpected table header {names:?}")));
    };
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse(e.to_string()))?;
        let field = |j: usize| record.get(j).unwrap_or_default();
        fn num<T: FromStr>(s: &str, name: &str) -> Result<T, CliError> {
            s.parse().map_err(|_| CliError::Parse(format!("bad {name} value {s:?}")))
        }
        let method: Method = field(5)
            .parse()
            .map_err(|_| CliError::Parse(format!("bad method tag {:?}", field(5))))?;
        let oracle_total = if verified && !field(6).is_empty() { Some(num(field(6), "oracle")?) } else { None };
        let row = TableRow {
            r: num(field(0), "r")?,
            d: num(field(1), "d")?,
            lower_bound: num(field(2), "L")?,
            correction: num(field(3), "H1")?,
            total: num(field(4), "dim")?,
            method,
            oracle_total,
        };
        if verified {
            let recorded = if field(7).is_empty() { None } else { Some(num::<bool>(field(7), "match")?) };
            if recorded != row.matches() {
                return Err(CliError::Parse(format!("match column disagrees with values at d={}", row.d)));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(verified: bool) -> Vec<TableRow> {
        (0..4)
            .map(|d| TableRow {
                r: 2,
                d,
                lower_bound: 10 + d as i64,
                correction: d as u64 % 2,
                total: 10 + d as i64 + (d as i64 % 2),
                method: Method::Lattice,
                oracle_total: verified.then_some(10 + d as u64 + (d as u64 % 2) + (d == 3) as u64),
            })
            .collect()
    }

    #[test]
    fn csv_header_contract() {
        assert!(emit(&sample(false), Format::Csv).starts_with("r,d,L,H1,dim,method\n"));
        assert!(emit(&sample(true), Format::Csv).starts_with("r,d,L,H1,dim,method,oracle,match\n"));
        assert!(emit(&sample(false), Format::Tsv).starts_with("r\td\tL\tH1\tdim\tmethod\n"));
    }

    #[test]
    fn csv_round_trip() {
        for verified in [false, true] {
            let rows = sample(verified);
            assert_eq!(parse_csv(&emit(&rows, Format::Csv)).unwrap(), rows);
        }
    }

    #[test]
    fn match_column() {
        let rows = sample(true);
        assert_eq!(rows[0].matches(), Some(true));
        assert_eq!(rows[3].matches(), Some(false));
        let text = emit(&rows, Format::Csv);
        assert!(text.lines().nth(4).unwrap().ends_with(",false"));
    }

    #[test]
    fn pretty_is_aligned() {
        let text = emit(&sample(false), Format::Pretty);
        let lens: Vec<usize> = text.lines().map(str::len).collect();
        assert!(lens.windows(2).all(|w| w[0] == w[1]), "{text}");
    }
}
