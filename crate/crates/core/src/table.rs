//! Cayley tables of finite quasigroups and their text format.
//!
//! The text format is one line holding the order `n`, followed by `n` lines of
//! `n` whitespace-separated integers. Lines starting with `#` are comments and
//! blank lines are ignored. Any `n` distinct integer labels may be used; on
//! load they are sorted and renamed to `0..n`, row `i` and column `i` both
//! standing for the `i`-th smallest label.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Line, Result};

/// A validated Latin square: `entries[x][y] = x·y` over elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// Validates rows of a square array and returns the table.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty table".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in &row {
                if v >= n {
                    return Err(Error::ElementOutOfRange { element: v, order: n });
                }
            }
            cells.extend(row);
        }
        Self::from_cells(n, cells)
    }

    /// Validates a row-major cell vector of length `n*n`.
    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 || cells.len() != order * order {
            return Err(Error::SizeMismatch {
                expected: order * order,
                found: cells.len(),
            });
        }
        if let Some(&v) = cells.iter().find(|&&v| v >= order) {
            return Err(Error::ElementOutOfRange { element: v, order });
        }
        let t = Self { order, cells };
        t.check_latin()?;
        Ok(t)
    }

    /// Tabulates `op` over `0..n`, then validates.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let cells = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x, y)))
            .map(|(x, y)| op(x, y))
            .collect();
        Self::from_cells(order, cells)
    }

    /// Skips validation; callers must guarantee the Latin property.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        Self { order, cells }
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.fill(false);
            for y in 0..n {
                let v = self.get(x, y);
                if seen[v] {
                    return Err(Error::NotLatinSquare { line: Line::Row, index: x, value: v });
                }
                seen[v] = true;
            }
        }
        for y in 0..n {
            seen.fill(false);
            for x in 0..n {
                let v = self.get(x, y);
                if seen[v] {
                    return Err(Error::NotLatinSquare { line: Line::Column, index: y, value: v });
                }
                seen[v] = true;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// `x·y`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// The unique `x` with `x·y = z`.
    pub fn left_division(&self, z: usize, y: usize) -> usize {
        (0..self.order).find(|&x| self.get(x, y) == z).expect("column is a permutation")
    }

    /// The unique `y` with `x·y = z`.
    pub fn right_division(&self, x: usize, z: usize) -> usize {
        (0..self.order).find(|&y| self.get(x, y) == z).expect("row is a permutation")
    }

    /// Parses the text format, returning the table and the original labels
    /// (index `i` of the table corresponds to `labels[i]`).
    pub fn parse_text(text: &str) -> Result<(Self, Vec<i64>)> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Malformed("missing order line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Malformed(format!("bad order line {header:?}")))?;
        if n == 0 {
            return Err(Error::Malformed("order must be positive".into()));
        }
        let mut raw: Vec<Vec<i64>> = Vec::with_capacity(n);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| Error::Malformed(format!("bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {} has {} entries, expected {n}",
                    raw.len(),
                    row.len()
                )));
            }
            raw.push(row);
        }
        if raw.len() != n {
            return Err(Error::Malformed(format!("expected {n} rows, found {}", raw.len())));
        }
        let labels: Vec<i64> = raw.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if labels.len() != n {
            return Err(Error::Malformed(format!(
                "table uses {} distinct labels, expected {n}",
                labels.len()
            )));
        }
        let rows = raw
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| labels.binary_search(&v).expect("label collected above"))
                    .collect()
            })
            .collect();
        Ok((Self::new(rows)?, labels))
    }

    /// Renders the text format with elements `0..n`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.cells.chunks(self.order) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyTable")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tables_validate() {
        assert!(CayleyTable::from_fn(3, |x, y| (x + y) % 3).is_ok());
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn repeated_column_entry_is_reported() {
        let err = CayleyTable::new(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::NotLatinSquare { line: Line::Column, index: 0, value: 0 });
    }

    #[test]
    fn repeated_row_entry_is_reported() {
        let err = CayleyTable::new(vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotLatinSquare { line: Line::Row, index: 0, value: 0 });
    }

    #[test]
    fn non_square_is_malformed() {
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 1], vec![1]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn text_round_trip_with_comments() {
        let text = "# Z_3\n3\n0 1 2\n1 2 0\n\n# tail\n2 0 1\n";
        let (t, labels) = CayleyTable::parse_text(text).unwrap();
        assert_eq!(labels, vec![0, 1, 2]);
        assert_eq!(t, CayleyTable::from_fn(3, |x, y| (x + y) % 3).unwrap());
        assert_eq!(CayleyTable::parse_text(&t.to_text()).unwrap().0, t);
    }

    #[test]
    fn labels_are_normalized() {
        let text = "2\n10 20\n20 10\n";
        let (t, labels) = CayleyTable::parse_text(text).unwrap();
        assert_eq!(labels, vec![10, 20]);
        assert_eq!(t.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn too_many_labels_rejected() {
        assert!(CayleyTable::parse_text("2\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn divisions() {
        let t = CayleyTable::from_fn(5, |x, y| (2 * x + 3 * y + 1) % 5).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                let z = t.get(x, y);
                assert_eq!(t.left_division(z, y), x);
                assert_eq!(t.right_division(x, z), y);
            }
        }
    }
}
