use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of a strip added to a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripKind {
    /// At most one cell per column.
    Horizontal,
    /// At most one cell per row.
    Vertical,
}

/// An integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `row` (1-based); zero beyond the last part.
    pub fn row(&self, row: usize) -> usize {
        debug_assert!(row >= 1);
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-based).
    pub fn col(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    /// Parts padded with zeros to length `len` (panics if too short).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.0.len(), "partition {self} does not fit in {len} rows");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.col(c)).collect())
    }

    /// Dominance order: partial sums of `self` never exceed those of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for r in 1..=len {
            a += self.row(r);
            b += other.row(r);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Whether the diagram of `inner` is contained in that of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Whether `self / inner` is a strip of the given kind.
    pub fn is_strip_over(&self, inner: &Partition, kind: StripKind) -> bool {
        if !self.contains(inner) {
            return false;
        }
        match kind {
            StripKind::Horizontal => (2..=self.len()).all(|r| self.row(r) <= inner.row(r - 1)),
            StripKind::Vertical => (1..=self.len()).all(|r| self.row(r) <= inner.row(r) + 1),
        }
    }

    /// All μ ⊇ self such that μ/self is a strip of `ell` cells of the given
    /// kind, in lexicographically decreasing order.
    pub fn strips(&self, ell: usize, kind: StripKind) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        match kind {
            StripKind::Horizontal => self.horizontal_rec(1, ell, &mut cur, &mut out),
            StripKind::Vertical => self.vertical_rec(1, ell, &mut cur, &mut out),
        }
        out
    }

    fn horizontal_rec(&self, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = self.row(row);
        if row > self.len() + 1 || (left == 0 && row > self.len()) {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip is a partition"));
            }
            return;
        }
        let cap = if row == 1 { base + left } else { self.row(row - 1).min(base + left) };
        for v in (base..=cap).rev() {
            cur.push(v);
            self.horizontal_rec(row + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }

    fn vertical_rec(&self, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 && row > self.len() {
            out.push(Partition::new(cur.clone()).expect("strip is a partition"));
            return;
        }
        let base = self.row(row);
        for add in [1, 0] {
            if add > left {
                continue;
            }
            let v = base + add;
            if row > 1 && v > cur[row - 2] {
                continue;
            }
            if v == 0 {
                // nothing below an empty row can grow
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("strip is a partition"));
                }
                continue;
            }
            cur.push(v);
            self.vertical_rec(row + 1, left - add, cur, out);
            cur.pop();
        }
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// z_λ = Π_i i^{n_i} n_i!, where n_i is the multiplicity of i.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut k = 0;
            while i < self.0.len() && self.0[i] == p {
                k += 1;
                i += 1;
                z *= (p as u128) * (k as u128);
            }
        }
        z
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
