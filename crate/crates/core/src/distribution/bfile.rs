//! OEIS b-files: one `index value` pair per line, `#` comments allowed.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::BFile {
            line: i + 1,
            msg: msg.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected 'index value'"));
        };
        let index = index.parse().map_err(|_| err("bad index"))?;
        let value = value.parse().map_err(|_| err("bad value"))?;
        if let Some(prev) = out.last().map(|e: &BFileEntry| e.index) {
            if index != prev + 1 {
                return Err(err("indices must be consecutive"));
            }
        }
        out.push(BFileEntry { index, value });
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFileReport {
    pub compared: usize,
    /// `(b-file index, b-file value, computed value)`
    pub mismatches: Vec<(i64, BigInt, BigUint)>,
    /// b-file entries past the end of the computed rows
    pub uncovered: usize,
}

impl BFileReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare a triangle read by rows against b-file entries. `rows` start at
/// `n = 0` and each row runs through its last nonzero entry; the first
/// b-file entry aligns with `a(0, 0)`.
pub fn compare_triangle(rows: &[Vec<BigUint>], entries: &[BFileEntry]) -> BFileReport {
    let flat: Vec<&BigUint> = rows.iter().flatten().collect();
    let mut report = BFileReport::default();
    for (pos, entry) in entries.iter().enumerate() {
        match flat.get(pos) {
            Some(&computed) => {
                report.compared += 1;
                if BigInt::from(computed.clone()) != entry.value {
                    report
                        .mismatches
                        .push((entry.index, entry.value.clone(), computed.clone()));
                }
            }
            None => report.uncovered += 1,
        }
    }
    report
}
