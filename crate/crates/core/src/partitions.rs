//! Partitions contained in an `m x n` rectangle, stored with exactly `m`
//! parts (zeros kept), and their rectangle complements.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    cols: usize,
}

impl Partition {
    /// Validates `parts` as a partition inside the `parts.len() x cols` rectangle.
    pub fn new(parts: Vec<usize>, cols: usize) -> Result<Self> {
        if let Some(&big) = parts.iter().find(|&&p| p > cols) {
            return Err(Error::Domain(format!("part {big} exceeds column bound {cols}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self { parts, cols })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Rectangle `(rows, cols)` the partition lives in.
    pub fn rect(&self) -> (usize, usize) {
        (self.parts.len(), self.cols)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths of the part of the rectangle not covered by `self`,
    /// largest first, as a partition inside the transposed rectangle.
    pub fn complement(&self) -> Partition {
        let (m, n) = self.rect();
        let parts = (1..=n)
            .map(|j| m - self.parts.iter().filter(|&&p| p + j > n).count())
            .collect();
        Partition { parts, cols: m }
    }

    /// Parses `[3,2,2,0,0]` as a partition inside `len x cols`.
    pub fn parse(text: &str, cols: usize) -> Result<Self> {
        Self::new(parse_parts(text)?, cols)
    }
}

/// Parses the bracketed, comma-separated part list without validating it.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let err = |message: &str| Error::Parse {
        position: 0,
        message: format!("{message} in partition {text:?}"),
    };
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err("expected brackets"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|piece| {
            let piece = piece.trim();
            if piece.is_empty() || !piece.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a nonnegative integer"));
            }
            piece.parse().map_err(|_| err("part out of range"))
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions with `rows` parts, each at most `cols`, in lexicographic
/// order starting from the all-zero partition.
pub fn enumerate_in_rect(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = vec![0usize; rows];
    loop {
        out.push(Partition {
            parts: parts.clone(),
            cols,
        });
        // next in lexicographic order: bump the rightmost position that can grow
        let Some(i) = (0..rows).rev().find(|&i| {
            let cap = if i == 0 { cols } else { parts[i - 1] };
            parts[i] < cap
        }) else {
            return out;
        };
        parts[i] += 1;
        for p in parts.iter_mut().skip(i + 1) {
            *p = 0;
        }
    }
}
