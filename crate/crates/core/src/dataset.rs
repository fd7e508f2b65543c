//! Judgment dataset files.
//!
//! ```text
//! # comment lines start with '#'
//! subject,name,lo,hi,polarity
//! s01,young_man,14,32,for
//! s01,young_man,60,80,against
//! ```
//!
//! Each row is one interval `[lo, hi)`; a written closed interval `[a, b]`
//! is read as `[a, b)`. The `polarity` column is optional and defaults to
//! `for`. Rows with `lo == hi` record an empty judgment.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::eventology::{EventError, Judgment, Polarity, SelectionMatrix, SubjectId};
use crate::region::{Region, RegionError, Universe};

pub const HEADER: [&str; 5] = ["subject", "name", "lo", "hi", "polarity"];

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("line {line}: {source}")]
    Region { line: u64, source: RegionError },
    #[error(transparent)]
    Event(#[from] EventError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// A parsed judgment together with the 1-based line it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub line: u64,
    pub judgment: Judgment,
}

fn malformed(line: u64, message: impl Into<String>) -> DatasetError {
    DatasetError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_endpoint(field: &str, column: &str, line: u64) -> Result<f64, DatasetError> {
    let value: f64 = field
        .parse()
        .map_err(|_| malformed(line, format!("{column} {field:?} is not a decimal number")))?;
    if !value.is_finite() {
        return Err(malformed(line, format!("{column} {field:?} is not finite")));
    }
    Ok(value)
}

fn parse_record(raw: &str) -> Result<csv::StringRecord, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(raw.as_bytes());
    let mut record = csv::StringRecord::new();
    reader.read_record(&mut record)?;
    Ok(record)
}

pub fn read_rows<R: Read>(mut input: R, universe: Universe) -> Result<Vec<Row>, DatasetError> {
    let mut text = String::new();
    input
        .read_to_string(&mut text)
        .map_err(|e| malformed(0, format!("cannot read dataset: {e}")))?;
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx as u64 + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let record = parse_record(raw)?;
        if !header_seen {
            let fields: Vec<&str> = record.iter().collect();
            if fields != HEADER[..4] && fields != HEADER[..] {
                return Err(malformed(
                    line,
                    format!("expected header `{}`, found `{}`", HEADER.join(","), fields.join(",")),
                ));
            }
            header_seen = true;
            continue;
        }
        if record.len() < 4 || record.len() > 5 {
            return Err(malformed(line, format!("expected 4 or 5 fields, found {}", record.len())));
        }
        let subject = SubjectId::new(&record[0]).map_err(|_| malformed(line, "empty subject"))?;
        let name = &record[1];
        let valid_name = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_name {
            return Err(malformed(line, format!("name {name:?} is not an identifier")));
        }
        let lo = parse_endpoint(&record[2], "lo", line)?;
        let hi = parse_endpoint(&record[3], "hi", line)?;
        if lo > hi {
            return Err(malformed(line, format!("lo {lo} exceeds hi {hi}")));
        }
        let polarity = match record.get(4).unwrap_or("") {
            "" | "for" => Polarity::For,
            "against" => Polarity::Against,
            other => return Err(malformed(line, format!("polarity {other:?} is not for/against"))),
        };
        let region = Region::interval(lo, hi, universe)
            .map_err(|source| DatasetError::Region { line, source })?;
        rows.push(Row {
            line,
            judgment: Judgment::new(subject, name, region, polarity),
        });
    }
    if !header_seen {
        return Err(malformed(1, format!("missing header `{}`", HEADER.join(","))));
    }
    Ok(rows)
}

/// Counts gathered while loading a dataset.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DatasetSummary {
    pub rows: usize,
    /// Judgment rows per name, `(for, against)`.
    pub per_name: BTreeMap<String, (usize, usize)>,
}

pub fn load_matrix<R: Read>(
    input: R,
    universe: Universe,
) -> Result<(SelectionMatrix, DatasetSummary), DatasetError> {
    let rows = read_rows(input, universe)?;
    let mut summary = DatasetSummary {
        rows: rows.len(),
        ..Default::default()
    };
    let mut builder = SelectionMatrix::builder(universe);
    for Row { judgment, .. } in rows {
        let counts = summary.per_name.entry(judgment.name.clone()).or_default();
        match judgment.polarity {
            Polarity::For => counts.0 += 1,
            Polarity::Against => counts.1 += 1,
        }
        builder.add(judgment)?;
    }
    Ok((builder.build()?, summary))
}

pub const EXAMPLE_NAMES: [&str; 2] = ["young_man", "young_woman"];

/// Synthetic stand-in for an age survey over `[0, 80)`.
///
/// Each subject draws a personal lower and upper "youth" threshold and uses
/// them for both names, so the two rows are strongly co-monotone:
///
/// - `young_man`:   lo = round(4 + 14a) in [4, 18],  hi = round(26 + 20b) in [26, 46]
/// - `young_woman`: lo = max(0, round(2 + 14a) + j) in [0, 19], hi = round(24 + 20b) + k in [21, 47]
///
/// with `a, b` uniform on `[0, 1)` and jitters `j, k` uniform on `{-3, ..., 3}`.
/// Every interval contains `[19, 21)`, so each membership curve rises and
/// then falls. Output is a pure function of `(seed, subjects)`.
pub fn generate_example(seed: u64, subjects: usize) -> Result<String, EventError> {
    if subjects == 0 {
        return Err(EventError::EmptyPopulation);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = subjects.to_string().len();
    let mut out = String::new();
    writeln!(out, "# synthetic age judgments: seed={seed} subjects={subjects} universe=[0,80)").unwrap();
    writeln!(out, "{}", HEADER.join(",")).unwrap();
    for i in 1..=subjects {
        let a: f64 = rng.gen();
        let b: f64 = rng.gen();
        let j: i32 = rng.gen_range(-3..=3);
        let k: i32 = rng.gen_range(-3..=3);
        let man = ((4.0 + 14.0 * a).round() as i32, (26.0 + 20.0 * b).round() as i32);
        let woman = (
            ((2.0 + 14.0 * a).round() as i32 + j).max(0),
            (24.0 + 20.0 * b).round() as i32 + k,
        );
        for (name, (lo, hi)) in EXAMPLE_NAMES.iter().zip([man, woman]) {
            writeln!(out, "s{i:0width$},{name},{lo},{hi},for").unwrap();
        }
    }
    Ok(out)
}
