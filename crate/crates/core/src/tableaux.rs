//! Semistandard Young tableaux of fixed shape and content, and the Kostka
//! numbers that count them.
//!
//! Tableaux are filled cell by cell in row-major order, trying entries in
//! increasing order, so enumeration is already sorted by row reading word.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::partitions::Partition;

/// A filling of a Young diagram with positive integers; rows weakly increase
/// and columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// `content[i-1]` = number of entries equal to `i`, padded to `len`.
    pub fn content(&self, len: usize) -> Vec<usize> {
        let mut c = vec![0; len];
        for &e in self.rows.iter().flatten() {
            if e > c.len() {
                c.resize(e, 0);
            }
            c[e - 1] += 1;
        }
        c
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Checks the row/column conditions.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&e| e > 0) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi)
        });
        rows_ok && cols_ok
    }
}

struct Filler<'a> {
    shape: &'a [usize],
    remaining: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Filler<'_> {
    fn run(&mut self, row: usize, col: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if row == self.shape.len() {
            visit(&self.rows);
            return;
        }
        if col == self.shape[row] {
            self.run(row + 1, 0, visit);
            return;
        }
        let left = if col > 0 { self.rows[row][col - 1] } else { 1 };
        let above = if row > 0 {
            self.rows[row - 1][col] + 1
        } else {
            1
        };
        let lo = left.max(above);
        for value in lo..=self.remaining.len() {
            if self.remaining[value - 1] == 0 {
                continue;
            }
            self.remaining[value - 1] -= 1;
            self.rows[row].push(value);
            self.run(row, col + 1, visit);
            self.rows[row].pop();
            self.remaining[value - 1] += 1;
        }
    }
}

fn for_each_ssyt(
    shape: &Partition,
    content: &[usize],
    visit: &mut dyn FnMut(&[Vec<usize>]),
) -> Result<()> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return domain(format!(
            "content {content:?} has size {total}, shape {shape} has size {}",
            shape.size()
        ));
    }
    let mut filler = Filler {
        shape: shape.parts(),
        remaining: content.to_vec(),
        rows: shape
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect(),
    };
    filler.run(0, 0, visit);
    Ok(())
}

/// Every SSYT of `shape` and `content`, ordered by row reading word.
///
/// `content` may contain zeros and need not be sorted.
pub fn enumerate_ssyt(shape: &Partition, content: &[usize]) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_ssyt(shape, content, &mut |rows| {
        out.push(Tableau {
            rows: rows.to_vec(),
        })
    })?;
    Ok(out)
}

/// The Kostka number `K_{shape, content}`.
pub fn kostka(shape: &Partition, content: &[usize]) -> Result<u64> {
    let mut count = 0u64;
    for_each_ssyt(shape, content, &mut |_| count += 1)?;
    Ok(count)
}
