//! Superpartitions Λ = (Λ^a; Λ^s) and their diagram pair (Λ^⊛, Λ^*).

mod partition;

pub use partition::{Partition, StripKind};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A superpartition. `a` holds the fermionic parts (strictly decreasing, a
/// trailing zero allowed) and `s` the bosonic partition.
///
/// The derived diagrams are cached: `star` is the sorted merge of `a` and
/// `s`, and `rows` are the 1-based rows carrying a circle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPartition {
    a: Vec<usize>,
    s: Partition,
    star: Partition,
    circled: Partition,
    rows: Vec<usize>,
}

impl SuperPartition {
    pub fn new(a: Vec<usize>, s: Partition) -> Result<Self> {
        if a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSuperPartition(format!("fermionic parts {a:?} are not strictly decreasing")));
        }
        let mut merged: Vec<usize> = a.iter().chain(s.parts()).copied().collect();
        merged.sort_unstable_by(|x, y| y.cmp(x));
        let total_rows = merged.len();
        let star = Partition::from_unsorted(merged);
        // A circle sits at the top of the block of equal rows, which is the
        // only row of that length with an addable corner.
        let rows: Vec<usize> = a.iter().map(|&v| star.parts().iter().filter(|&&p| p > v).count() + 1).collect();
        let mut circ = star.padded(total_rows.max(star.len()));
        for &r in &rows {
            circ[r - 1] += 1;
        }
        let circled = Partition::new(circ).expect("circled diagram is a partition");
        Ok(SuperPartition { a, s, star, circled, rows })
    }

    /// Convenience constructor from plain slices.
    pub fn from_parts(a: &[usize], s: &[usize]) -> Result<Self> {
        Self::new(a.to_vec(), Partition::new(s.to_vec())?)
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), Partition::empty()).expect("empty superpartition")
    }

    /// Rebuilds Λ from Λ^* and Λ^⊛.
    pub fn from_star_circled(star: &Partition, circled: &Partition) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidSuperPartition(format!("({circled}, {star}): {why}")));
        if !circled.contains(star) {
            return bad("star diagram is not contained in the circled one");
        }
        let mut a = Vec::new();
        let mut s = Vec::new();
        let mut cols = Vec::new();
        for r in 1..=circled.len() {
            match circled.row(r) - star.row(r) {
                0 => s.push(star.row(r)),
                1 => {
                    a.push(star.row(r));
                    cols.push(star.row(r) + 1);
                }
                _ => return bad("two circles in one row"),
            }
        }
        if cols.windows(2).any(|w| w[0] <= w[1]) {
            return bad("two circles in one column");
        }
        Self::new(a, Partition::new(s)?)
    }

    /// Builds the superpartition whose bosonic diagram is `star` and whose
    /// circles sit in the given rows, if that is a valid configuration.
    pub fn from_star_rows(star: &Partition, rows: &[usize]) -> Option<Self> {
        let len = rows.iter().copied().max().unwrap_or(0).max(star.len());
        let mut circ = star.padded(len);
        for &r in rows {
            if r == 0 {
                return None;
            }
            circ[r - 1] += 1;
        }
        let circled = Partition::new(circ).ok()?;
        let sp = Self::from_star_circled(star, &circled).ok()?;
        (sp.rows.len() == rows.len()).then_some(sp)
    }

    pub fn fermionic(&self) -> &[usize] {
        &self.a
    }

    pub fn bosonic(&self) -> &Partition {
        &self.s
    }

    /// Λ^*: the diagram without circles.
    pub fn star(&self) -> &Partition {
        &self.star
    }

    /// Λ^⊛: the diagram with circles counted as cells.
    pub fn circled(&self) -> &Partition {
        &self.circled
    }

    /// Fermionic degree m.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Bosonic degree n = |Λ^*|.
    pub fn n(&self) -> usize {
        self.star.size()
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    /// Number of rows of Λ^⊛.
    pub fn num_rows(&self) -> usize {
        self.circled.len()
    }

    /// Rows α_1 < … < α_m of the circles, 1-based.
    pub fn circle_rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column of the circle in row `row`.
    pub fn circle_col(&self, row: usize) -> usize {
        self.star.row(row) + 1
    }

    pub fn conjugate(&self) -> SuperPartition {
        SuperPartition::from_star_circled(&self.star.conjugate(), &self.circled.conjugate())
            .expect("conjugate of a superpartition is a superpartition")
    }

    /// Ω ≤ Λ: equal degrees and dominance on both diagrams.
    pub fn dominance_leq(&self, other: &SuperPartition) -> bool {
        self.degree() == other.degree()
            && self.star.dominance_leq(&other.star)
            && self.circled.dominance_leq(&other.circled)
    }

    /// All superpartitions of degree (n|m), ascending in [`Ord`].
    pub fn all(n: usize, m: usize) -> Vec<SuperPartition> {
        let mut out = Vec::new();
        for a in strict_parts(m, n) {
            let k: usize = a.iter().sum();
            for s in Partition::all(n - k) {
                out.push(SuperPartition::new(a.clone(), s).expect("valid by construction"));
            }
        }
        out.sort();
        out
    }

    /// The largest number of rows any superpartition of degree (n|m) can
    /// have, i.e. the smallest variable count in which no monomial function
    /// of that degree vanishes.
    pub fn max_rows(n: usize, m: usize) -> usize {
        let min_a = m * m.saturating_sub(1) / 2;
        if n < min_a {
            m
        } else {
            m + n - min_a
        }
    }

    /// Text form accepted by [`FromStr`]: `a1,a2;s1,s2`.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("{};{}", join(&self.a), join(self.s.parts()))
    }

    fn order_key(&self) -> (&Partition, &Partition) {
        (&self.circled, &self.star)
    }
}

/// Strictly decreasing m-tuples of nonnegative integers with sum ≤ n.
fn strict_parts(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, below: Option<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        // the remaining m parts need at least 0+1+…+(m-1)
        let need = m * (m - 1) / 2;
        let hi = match below {
            Some(0) => return,
            Some(b) => b - 1,
            None => left,
        };
        for v in (m - 1..=hi.min(left)).rev() {
            if left - v < need - (m - 1) {
                continue;
            }
            cur.push(v);
            rec(m - 1, left - v, Some(v), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, None, &mut Vec::new(), &mut out);
    out
}

/// A total order refining dominance: lexicographic on Λ^⊛, then on Λ^*.
impl Ord for SuperPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n(), self.m()).cmp(&(other.n(), other.m())).then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SuperPartition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let t = input.trim();
        let t = t.strip_prefix('(').map(|x| x.strip_suffix(')').unwrap_or(x)).unwrap_or(t);
        let (fa, fs) = t.split_once(';').ok_or_else(|| err("missing ';' between fermionic and bosonic parts"))?;
        let list = |s: &str| -> Result<Vec<usize>> {
            let s = s.trim();
            if s.is_empty() || s == "∅" {
                return Ok(Vec::new());
            }
            s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| err(&format!("bad part {x:?}")))).collect()
        };
        let a = list(fa)?;
        let s = list(fs)?;
        let s = Partition::new(s).map_err(|_| err("bosonic parts must be weakly decreasing"))?;
        SuperPartition::new(a, s).map_err(|e| err(&e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    a: Vec<usize>,
    s: Vec<usize>,
}

impl Serialize for SuperPartition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { a: self.a.clone(), s: self.s.parts().to_vec() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SuperPartition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(de)?;
        let s = Partition::new(w.s).map_err(serde::de::Error::custom)?;
        SuperPartition::new(w.a, s).map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests: `sp("3,1;2,1")`.
pub fn sp(text: &str) -> SuperPartition {
    text.parse().unwrap_or_else(|e| panic!("{e}"))
}
