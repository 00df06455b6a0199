use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::BenchRow;
use crate::solve::Algorithm;

pub const CSV_HEADER: &str =
    "instance,algorithm,k,k_best_known,reps,time_mean_us,time_median_us,time_stddev_us,restarts,seed";

const NOT_AVAILABLE: &str = "N/A";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(ReportError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown report format {0:?} (expected csv or md)")]
    UnknownFormat(String),
    #[error("csv header mismatch: {0:?}")]
    Header(String),
    #[error("record {record}: bad {field} value {value:?}")]
    Field {
        record: usize,
        field: &'static str,
        value: String,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn time_cell(t: Option<f64>) -> String {
    t.map_or_else(|| NOT_AVAILABLE.to_string(), |t| format!("{t:.3}"))
}

fn opt_cell(v: Option<usize>, missing: &str) -> String {
    v.map_or_else(|| missing.to_string(), |v| v.to_string())
}

pub fn render_report(rows: &[BenchRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(rows),
        ReportFormat::Markdown => render_markdown(rows),
    }
}

fn render_csv(rows: &[BenchRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CSV_HEADER.split(','))
        .expect("in-memory write");
    for row in rows {
        writer
            .write_record([
                row.instance.clone(),
                row.algorithm.name().to_string(),
                opt_cell(row.k, NOT_AVAILABLE),
                opt_cell(row.best_known, ""),
                row.repetitions.to_string(),
                time_cell(row.time_mean_us),
                time_cell(row.time_median_us),
                time_cell(row.time_stddev_us),
                opt_cell(row.restarts, ""),
                row.seed.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// One line per instance, a (k, mean time) column pair per algorithm.
fn render_markdown(rows: &[BenchRow]) -> String {
    let mut algorithms: Vec<Algorithm> = Vec::new();
    let mut instances: Vec<(&str, Option<usize>)> = Vec::new();
    let mut cells: BTreeMap<(usize, Algorithm), &BenchRow> = BTreeMap::new();
    for row in rows {
        if !algorithms.contains(&row.algorithm) {
            algorithms.push(row.algorithm);
        }
        let idx = match instances.iter().position(|(name, _)| *name == row.instance) {
            Some(i) => i,
            None => {
                instances.push((&row.instance, row.best_known));
                instances.len() - 1
            }
        };
        if instances[idx].1.is_none() {
            instances[idx].1 = row.best_known;
        }
        cells.insert((idx, row.algorithm), row);
    }

    let mut out = String::from("| Graph (k*) |");
    for alg in &algorithms {
        write!(out, " {alg} k | {alg} time (μs) |").unwrap();
    }
    out.push_str("\n|---|");
    for _ in &algorithms {
        out.push_str("---:|---:|");
    }
    out.push('\n');
    for (idx, (name, best)) in instances.iter().enumerate() {
        match best {
            Some(k) => write!(out, "| {name} ({k}) |").unwrap(),
            None => write!(out, "| {name} |").unwrap(),
        }
        for alg in &algorithms {
            match cells.get(&(idx, *alg)) {
                Some(row) => write!(
                    out,
                    " {} | {} |",
                    opt_cell(row.k, NOT_AVAILABLE),
                    time_cell(row.time_mean_us)
                )
                .unwrap(),
                None => out.push_str(" - | - |"),
            }
        }
        out.push('\n');
    }
    out
}

fn parse_opt<T: FromStr>(
    value: &str,
    missing: &str,
    record: usize,
    field: &'static str,
) -> Result<Option<T>, ReportError> {
    if value == missing {
        return Ok(None);
    }
    value.parse().map(Some).map_err(|_| ReportError::Field {
        record,
        field,
        value: value.to_string(),
    })
}

/// Reads back a CSV produced by [`render_report`].
pub fn parse_csv(text: &str) -> Result<Vec<BenchRow>, ReportError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(ReportError::Header(header.join(",")));
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let r = i + 1;
        let field = |name: &'static str, idx: usize| -> Result<String, ReportError> {
            record
                .get(idx)
                .map(str::to_string)
                .ok_or(ReportError::Field {
                    record: r,
                    field: name,
                    value: String::new(),
                })
        };
        let algorithm_text = field("algorithm", 1)?;
        let algorithm = algorithm_text.parse().map_err(|_| ReportError::Field {
            record: r,
            field: "algorithm",
            value: algorithm_text.clone(),
        })?;
        let required = |name: &'static str, idx: usize| -> Result<u64, ReportError> {
            let v = field(name, idx)?;
            parse_opt::<u64>(&v, "", r, name)?.ok_or(ReportError::Field {
                record: r,
                field: name,
                value: v,
            })
        };
        rows.push(BenchRow {
            instance: field("instance", 0)?,
            algorithm,
            k: parse_opt(&field("k", 2)?, NOT_AVAILABLE, r, "k")?,
            best_known: parse_opt(&field("k_best_known", 3)?, "", r, "k_best_known")?,
            repetitions: required("reps", 4)? as usize,
            time_mean_us: parse_opt(&field("time_mean_us", 5)?, NOT_AVAILABLE, r, "time_mean_us")?,
            time_median_us: parse_opt(
                &field("time_median_us", 6)?,
                NOT_AVAILABLE,
                r,
                "time_median_us",
            )?,
            time_stddev_us: parse_opt(
                &field("time_stddev_us", 7)?,
                NOT_AVAILABLE,
                r,
                "time_stddev_us",
            )?,
            restarts: parse_opt(&field("restarts", 8)?, "", r, "restarts")?,
            seed: required("seed", 9)?,
        });
    }
    Ok(rows)
}

/// For each algorithm other than WFC-C, the mean over instances of
/// `mean time / WFC-C mean time`, using instances where both completed.
pub fn speed_ratios(rows: &[BenchRow]) -> Vec<(Algorithm, f64)> {
    let wfcc: BTreeMap<&str, f64> = rows
        .iter()
        .filter(|r| r.algorithm == Algorithm::Wfcc)
        .filter_map(|r| Some((r.instance.as_str(), r.time_mean_us?)))
        .collect();
    let mut ratios: BTreeMap<Algorithm, Vec<f64>> = BTreeMap::new();
    for row in rows.iter().filter(|r| r.algorithm != Algorithm::Wfcc) {
        if let (Some(t), Some(&base)) = (row.time_mean_us, wfcc.get(row.instance.as_str())) {
            if base > 0.0 {
                ratios.entry(row.algorithm).or_default().push(t / base);
            }
        }
    }
    ratios
        .into_iter()
        .map(|(alg, v)| (alg, v.iter().sum::<f64>() / v.len() as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(instance: &str, algorithm: Algorithm, k: Option<usize>, t: Option<f64>) -> BenchRow {
        BenchRow {
            instance: instance.to_string(),
            algorithm,
            k,
            best_known: Some(28),
            repetitions: 100,
            time_mean_us: t,
            time_median_us: t,
            time_stddev_us: t.map(|_| 0.5),
            restarts: (algorithm == Algorithm::Wfcc).then_some(1),
            seed: 7,
        }
    }

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(render_report(&[], ReportFormat::Csv), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn csv_field_order() {
        let text = render_report(
            &[row("dsjc250.5", Algorithm::Wfcc, Some(37), Some(13.5123))],
            ReportFormat::Csv,
        );
        assert_eq!(
            text,
            format!("{CSV_HEADER}\ndsjc250.5,wfcc,37,28,100,13.512,13.512,0.500,1,7\n")
        );
    }

    #[test]
    fn csv_not_available_round_trip() {
        let rows = vec![
            row("C2000.5", Algorithm::Rlf, None, None),
            row("a,b", Algorithm::Ig, Some(3), Some(2.0)),
        ];
        let text = render_report(&rows, ReportFormat::Csv);
        assert!(text.contains("C2000.5,rlf,N/A,28,100,N/A,N/A,N/A,,7"));
        assert_eq!(parse_csv(&text).unwrap(), rows);
    }

    #[test]
    fn csv_rejects_foreign_header() {
        assert!(matches!(parse_csv("a,b\n1,2\n"), Err(ReportError::Header(_))));
        let bad = format!("{CSV_HEADER}\nx,wfcc,two,,1,1.0,1.0,0.0,,0\n");
        assert!(matches!(
            parse_csv(&bad),
            Err(ReportError::Field { record: 1, field: "k", .. })
        ));
    }

    #[test]
    fn markdown_groups_by_instance() {
        let rows = vec![
            row("dsjc250.5", Algorithm::Wfcc, Some(37), Some(13.512)),
            row("dsjc250.5", Algorithm::Dsatur, Some(41), Some(23751.985)),
        ];
        let md = render_report(&rows, ReportFormat::Markdown);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            "| Graph (k*) | wfcc k | wfcc time (μs) | dsatur k | dsatur time (μs) |"
        );
        assert_eq!(lines[2], "| dsjc250.5 (28) | 37 | 13.512 | 41 | 23751.985 |");
    }

    #[test]
    fn markdown_marks_timeouts() {
        let rows = vec![
            row("C2000.5", Algorithm::Wfcc, Some(209), Some(124.225)),
            row("C2000.5", Algorithm::Rlf, None, None),
        ];
        let md = render_report(&rows, ReportFormat::Markdown);
        assert!(md.contains("| C2000.5 (28) | 209 | 124.225 | N/A | N/A |"));
    }

    #[test]
    fn ratios() {
        let rows = vec![
            row("a", Algorithm::Wfcc, Some(3), Some(2.0)),
            row("a", Algorithm::Dsatur, Some(3), Some(8.0)),
            row("b", Algorithm::Wfcc, Some(3), Some(1.0)),
            row("b", Algorithm::Dsatur, Some(3), Some(2.0)),
            row("b", Algorithm::Rlf, None, None),
        ];
        assert_eq!(speed_ratios(&rows), vec![(Algorithm::Dsatur, 3.0)]);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<ReportFormat>().unwrap(), ReportFormat::Csv);
        assert_eq!("md".parse::<ReportFormat>().unwrap(), ReportFormat::Markdown);
        assert!("html".parse::<ReportFormat>().is_err());
    }
}
