//! Fillings: the diagram view of a tableau, and recovery of the chain from
//! a filling by stripping the largest letter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Tableau;
use crate::error::{Error, Result};
use crate::schur::Family;
use crate::superpartition::{Partition, SuperPartition};

/// One row of a filling. Letter 0 marks a cell or circle of the inner shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillRow {
    pub cells: Vec<usize>,
    pub circle: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filling {
    pub rows: Vec<FillRow>,
}

impl Filling {
    pub(super) fn of(t: &Tableau) -> Filling {
        let outer = t.outer();
        let mut rows: Vec<FillRow> =
            (1..=outer.num_rows()).map(|r| FillRow { cells: vec![0; outer.star().row(r)], circle: None }).collect();
        for (i, w) in t.chain.windows(2).enumerate() {
            let (a, b) = (w[0].star(), w[1].star());
            for r in 1..=b.len() {
                for c in a.row(r)..b.row(r) {
                    rows[r - 1].cells[c] = i + 1;
                }
            }
        }
        for (&r, &letter) in outer.circle_rows().iter().zip(&t.word.0) {
            rows[r - 1].circle = Some(letter);
        }
        Filling { rows }
    }

    /// The shape read off the filling.
    pub fn shape(&self) -> Result<SuperPartition> {
        let star = Partition::new(self.rows.iter().map(|r| r.cells.len()).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not weakly decreasing".into()))?;
        let rows: Vec<usize> = (1..=self.rows.len()).filter(|&r| self.rows[r - 1].circle.is_some()).collect();
        SuperPartition::from_star_rows(&star, &rows)
            .ok_or_else(|| Error::InvalidTableau("circles do not form a superpartition".into()))
    }

    fn cell(&self, r: usize, c: usize) -> Option<usize> {
        self.rows.get(r.checked_sub(1)?)?.cells.get(c.checked_sub(1)?).copied()
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(|r| r.cells.is_empty() && r.circle.is_none()) {
            self.rows.pop();
        }
    }

    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let mut items: Vec<String> =
                    row.cells.iter().map(|&v| if v == 0 { "\\bl".to_string() } else { v.to_string() }).collect();
                if let Some(v) = row.circle {
                    let inside = if v == 0 { String::new() } else { v.to_string() };
                    items.push(format!("\\bl\\tcercle{{{inside}}}"));
                }
                items.join("&")
            })
            .collect();
        format!("\\tableau[scY]{{{}}}", rows.join("\\\\"))
    }
}

fn show(v: usize) -> String {
    if v == 0 {
        ".".to_string()
    } else {
        v.to_string()
    }
}

impl fmt::Display for Filling {
    /// One line per row, cells separated by spaces, the circle as `(i)` and
    /// inner-shape entries as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let mut items: Vec<String> = row.cells.iter().map(|&v| show(v)).collect();
            if let Some(v) = row.circle {
                items.push(format!("({})", show(v)));
            }
            f.write_str(&items.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Filling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse { input: s.to_string(), reason: why.to_string() };
        let entry = |t: &str| -> Result<usize> {
            if t == "." {
                Ok(0)
            } else {
                t.parse().map_err(|_| bad("entries are numbers or '.'"))
            }
        };
        let mut rows = Vec::new();
        for line in s.lines() {
            let mut row = FillRow { cells: Vec::new(), circle: None };
            for tok in line.split_whitespace() {
                if row.circle.is_some() {
                    return Err(bad("the circle must end its row"));
                }
                match tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                    Some(inner) => row.circle = Some(entry(inner)?),
                    None => row.cells.push(entry(tok)?),
                }
            }
            rows.push(row);
        }
        let mut f = Filling { rows };
        f.trim();
        Ok(f)
    }
}

/// Column where the circle with `letter` started: the leftmost column with
/// no plain cell holding that letter, or its column in the inner shape.
fn start_column(f: &Filling, letter: usize, inner_col: Option<usize>) -> usize {
    if let Some(c) = inner_col {
        return c;
    }
    (1..).find(|&c| !f.rows.iter().any(|r| r.cells.get(c - 1) == Some(&letter))).expect("finite diagram")
}

/// The letter on the path of a circle in row r, at row r − 1, if the path
/// gets that far.
fn path_end(f: &Filling, letter: usize, row: usize, column: usize) -> Option<usize> {
    let top = (1..row).find(|&t| f.cell(t, column).is_some_and(|v| v > letter))?;
    let mut j = f.cell(top, column)?;
    for t in top + 1..row {
        j = *f.rows[t - 1].cells.iter().find(|&&v| v > j)?;
    }
    Some(j)
}

fn strip(f: &Filling, n: usize, inner: &SuperPartition, family: Family) -> Result<Filling> {
    let inner_cols: Vec<usize> = inner.circle_rows().iter().map(|&r| inner.circle_col(r)).collect();
    let mut inner_seen = 0;
    let mut moves = Vec::new();
    for r in 1..=f.rows.len() {
        let Some(letter) = f.rows[r - 1].circle else { continue };
        let inner_col = if letter == 0 {
            inner_seen += 1;
            Some(
                *inner_cols
                    .get(inner_seen - 1)
                    .ok_or_else(|| Error::InvalidTableau("too many inner circles".into()))?,
            )
        } else {
            None
        };
        if letter == n {
            continue;
        }
        let up = match family {
            Family::S => path_end(f, letter, r, start_column(f, letter, inner_col)) == Some(n),
            _ => f.cell(r - 1, f.rows[r - 1].cells.len() + 1) == Some(n),
        };
        if up {
            moves.push(r);
        }
    }
    let mut out = f.clone();
    for row in &mut out.rows {
        row.cells.retain(|&v| v != n);
        if row.circle == Some(n) {
            row.circle = None;
        }
    }
    for r in moves {
        if out.rows[r - 2].circle.is_some() {
            return Err(Error::InvalidTableau(format!("two circles meet in row {}", r - 1)));
        }
        out.rows[r - 2].circle = out.rows[r - 1].circle.take();
    }
    out.trim();
    Ok(out)
}

/// Recovers Λ_(0), …, Λ_(steps) from a filling by repeatedly removing the
/// largest letter. Circles of the inner shape Ω are needed to place their
/// paths.
pub fn reconstruct(f: &Filling, inner: &SuperPartition, steps: usize, family: Family) -> Result<Vec<SuperPartition>> {
    let mut cur = f.clone();
    let mut chain = vec![cur.shape()?];
    for n in (1..=steps).rev() {
        cur = strip(&cur, n, inner, family)?;
        chain.push(cur.shape()?);
    }
    chain.reverse();
    Ok(chain)
}
