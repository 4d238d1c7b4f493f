use std::io::{Read, Write};

use super::{ExperimentConfig, ResultRow};
use crate::random::Model;
use crate::{Error, Result};

pub const CSV_SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 14] = [
    "trial",
    "seed",
    "n",
    "edges",
    "energy",
    "energy_per_n",
    "mcclelland",
    "koolen_moulton",
    "aj",
    "ad",
    "tp",
    "tpg",
    "global",
    "degree_hist",
];

const MAGIC: &str = "graph-energy-experiment";

/// Metadata carried in the leading `#` line of an experiment CSV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvHeader {
    pub version: u32,
    pub model: Model,
    pub n: usize,
    pub trials: usize,
    pub lambda: Option<f64>,
    pub seed: u64,
}

impl CsvHeader {
    fn from_config(c: &ExperimentConfig) -> Self {
        CsvHeader {
            version: CSV_SCHEMA_VERSION,
            model: c.model,
            n: c.n,
            trials: c.trials,
            lambda: (c.model == Model::Er).then_some(c.lambda),
            seed: c.seed,
        }
    }

    fn render(&self) -> String {
        let model = match self.model {
            Model::BaTree => "ba",
            Model::Er => "er",
        };
        let mut line = format!(
            "# {MAGIC} v{} model={model} n={} trials={}",
            self.version, self.n, self.trials
        );
        if let Some(lambda) = self.lambda {
            line.push_str(&format!(" lambda={lambda}"));
        }
        line.push_str(&format!(" seed={}", self.seed));
        line
    }

    fn parse(line: &str) -> Option<Self> {
        let mut tokens = line.trim_start_matches('#').split_whitespace();
        if tokens.next()? != MAGIC {
            return None;
        }
        let version = tokens.next()?.strip_prefix('v')?.parse().ok()?;
        let (mut model, mut n, mut trials, mut lambda, mut seed) = (None, None, None, None, None);
        for tok in tokens {
            let (key, value) = tok.split_once('=')?;
            match key {
                "model" => {
                    model = Some(match value {
                        "ba" => Model::BaTree,
                        "er" => Model::Er,
                        _ => return None,
                    })
                }
                "n" => n = value.parse().ok(),
                "trials" => trials = value.parse().ok(),
                "lambda" => lambda = value.parse().ok(),
                "seed" => seed = value.parse().ok(),
                _ => {}
            }
        }
        Some(CsvHeader {
            version,
            model: model?,
            n: n?,
            trials: trials?,
            lambda,
            seed: seed?,
        })
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes the versioned comment line, the column header and one record per
/// row. Each row's soundness is re-checked first; a violation aborts the
/// write.
pub fn write_csv<W: Write>(config: &ExperimentConfig, rows: &[ResultRow], mut out: W) -> Result<()> {
    for row in rows {
        row.check_soundness()?;
    }
    let header = CsvHeader::from_config(config).render();
    writeln!(out, "{header}").map_err(|e| Error::io("<csv>", e))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in rows {
        let b = &r.bounds;
        w.write_record([
            r.trial.to_string(),
            r.seed.to_string(),
            r.n.to_string(),
            r.edges.to_string(),
            r.energy.to_string(),
            r.energy_per_n.to_string(),
            b.mcclelland.to_string(),
            opt(b.koolen_moulton),
            b.aj.to_string(),
            opt(b.ad),
            opt(b.tp),
            b.tpg.to_string(),
            opt(b.global),
            b.degree_hist.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("<csv>", e))?;
    Ok(())
}

/// A parsed experiment CSV. `rows[i][j]` is column `CSV_COLUMNS[j]` of record
/// `i`, `None` where the field was empty.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Option<CsvHeader>,
    pub rows: Vec<Vec<Option<f64>>>,
}

impl CsvTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        CSV_COLUMNS.iter().position(|&c| c == name)
    }

    pub fn values(&self, name: &str) -> Vec<Option<f64>> {
        let j = self.column(name).expect("unknown column");
        self.rows.iter().map(|r| r[j]).collect()
    }
}

pub fn read_csv<R: Read>(mut input: R) -> Result<CsvTable> {
    let mut text = String::new();
    input
        .read_to_string(&mut text)
        .map_err(|e| Error::io("<csv>", e))?;
    let header = text
        .lines()
        .next()
        .filter(|l| l.starts_with('#'))
        .and_then(CsvHeader::parse);

    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let columns: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if columns.iter().all(|c| c.is_empty()) {
        return Err(Error::Schema("empty CSV".into()));
    }
    let mut index = Vec::with_capacity(CSV_COLUMNS.len());
    for name in CSV_COLUMNS {
        match columns.iter().position(|c| c == name) {
            Some(j) => index.push(j),
            None => return Err(Error::Schema(format!("missing column {name:?}"))),
        }
    }

    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let mut row = Vec::with_capacity(index.len());
        for (&j, name) in index.iter().zip(CSV_COLUMNS) {
            let field = record.get(j).unwrap_or("").trim();
            if field.is_empty() {
                row.push(None);
            } else {
                let v = field.parse::<f64>().map_err(|_| {
                    Error::Schema(format!("record {}: bad value {field:?} in {name}", i + 1))
                })?;
                row.push(Some(v));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Schema("CSV has no records".into()));
    }
    Ok(CsvTable { header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::run_experiment;

    fn config() -> ExperimentConfig {
        ExperimentConfig {
            model: Model::Er,
            n: 40,
            trials: 4,
            lambda: 1.0,
            seed: 11,
            threads: 1,
        }
    }

    #[test]
    fn header_and_columns() {
        let c = config();
        let rows = run_experiment(&c).unwrap();
        let mut buf = Vec::new();
        write_csv(&c, &rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "# graph-energy-experiment v1 model=er n=40 trials=4 lambda=1 seed=11"
        );
        assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
        assert_eq!(lines.count(), 4);

        let table = read_csv(text.as_bytes()).unwrap();
        let h = table.header.unwrap();
        assert_eq!((h.model, h.n, h.trials, h.lambda, h.seed), (Model::Er, 40, 4, Some(1.0), 11));
        assert_eq!(table.rows.len(), 4);
        for (r, row) in rows.iter().zip(&table.rows) {
            assert_eq!(row[4], Some(r.energy));
            assert_eq!(row[12], r.bounds.global);
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(read_csv("".as_bytes()), Err(Error::Schema(_))));
        let missing = "trial,seed,n\n0,1,2\n";
        assert!(matches!(read_csv(missing.as_bytes()), Err(Error::Schema(_))));
        let header_only = format!("{}\n", CSV_COLUMNS.join(","));
        assert!(matches!(read_csv(header_only.as_bytes()), Err(Error::Schema(_))));
        let bad = format!("{}\n0,1,2,3,x,,,,,,,,,\n", CSV_COLUMNS.join(","));
        assert!(matches!(read_csv(bad.as_bytes()), Err(Error::Schema(_))));
    }

    #[test]
    fn refuses_unsound_rows() {
        let c = config();
        let mut rows = run_experiment(&c).unwrap();
        rows[2].energy = rows[2].bounds.mcclelland * 2.0 + 1.0;
        assert!(matches!(write_csv(&c, &rows, Vec::new()), Err(Error::Soundness { trial: 2, .. })));
    }
}
