//! Kostka matrices from chained Pieri rules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{Basis, SymSuperFunc};
use crate::error::{Error, Result};
use crate::pieri::{multiply_by_generator, Generator};
use crate::superpartition::SuperPartition;

/// K expands h in s̄* and gives the monomial expansion of s̄; K̄ does the
/// same for s* and s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KostkaKind {
    K,
    KBar,
}

impl KostkaKind {
    pub fn name(self) -> &'static str {
        match self {
            KostkaKind::K => "K",
            KostkaKind::KBar => "Kbar",
        }
    }

    /// The dual family whose Pieri rules build the matrix.
    fn dual_basis(self) -> Basis {
        match self {
            KostkaKind::K => Basis::SBarStar,
            KostkaKind::KBar => Basis::SStar,
        }
    }
}

impl fmt::Display for KostkaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KostkaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" => Ok(KostkaKind::K),
            "Kbar" | "kbar" | "KBar" => Ok(KostkaKind::KBar),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected K or Kbar".into() }),
        }
    }
}

/// Entries K_{ΩΛ}, where h_Λ = Σ_Ω K_{ΩΛ} X_Ω for the dual family X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaMatrix {
    pub n: usize,
    pub m: usize,
    pub which: KostkaKind,
    /// All superpartitions of the degree, largest first.
    pub index: Vec<SuperPartition>,
    entries: BTreeMap<(SuperPartition, SuperPartition), i64>,
}

impl KostkaMatrix {
    /// K_{ΩΛ}.
    pub fn get(&self, omega: &SuperPartition, lambda: &SuperPartition) -> i64 {
        self.entries.get(&(omega.clone(), lambda.clone())).copied().unwrap_or(0)
    }

    /// Row Ω: the monomial expansion of s̄_Ω (for K) or s_Ω (for K̄).
    pub fn row(&self, omega: &SuperPartition) -> BTreeMap<SuperPartition, i64> {
        self.entries.iter().filter(|((o, _), _)| o == omega).map(|((_, l), &v)| (l.clone(), v)).collect()
    }

    /// Rows and columns in the order of `index`.
    pub fn dense(&self) -> Vec<Vec<i64>> {
        self.index.iter().map(|o| self.index.iter().map(|l| self.get(o, l)).collect()).collect()
    }

    /// 1 on the diagonal and K_{ΩΛ} = 0 unless Λ ≤ Ω in dominance.
    pub fn is_unitriangular(&self) -> bool {
        self.index.iter().all(|l| self.get(l, l) == 1)
            && self.entries.iter().all(|((o, l), &v)| v == 0 || l.dominance_leq(o))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v >= 0)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&SuperPartition, &SuperPartition, i64)> {
        self.entries.iter().map(|((o, l), &v)| (o, l, v))
    }
}

type Cache = RwLock<HashMap<(usize, usize, KostkaKind), Arc<KostkaMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// h_Λ in the dual family, by multiplying 1 by h̃_{Λ_1}, …, h̃_{Λ_m} and then
/// the bosonic h's, one Pieri step at a time.
pub fn h_in_dual(lambda: &SuperPartition, which: KostkaKind) -> Result<SymSuperFunc> {
    let mut f = SymSuperFunc::one(which.dual_basis());
    for &k in lambda.fermionic() {
        f = multiply_by_generator(&f, Generator::HTilde(k))?;
    }
    for &r in lambda.bosonic().parts() {
        f = multiply_by_generator(&f, Generator::H(r))?;
    }
    Ok(f)
}

/// The Kostka matrix at degree (n|m), computed once and shared.
pub fn kostka(n: usize, m: usize, which: KostkaKind) -> Arc<KostkaMatrix> {
    let key = (n, m, which);
    if let Some(k) = cache().read().get(&key) {
        return k.clone();
    }
    let mut index = SuperPartition::all(n, m);
    index.reverse();
    let columns: Vec<Vec<((SuperPartition, SuperPartition), i64)>> = index
        .par_iter()
        .map(|lambda| {
            let h = h_in_dual(lambda, which).expect("h generators multiply the dual families");
            h.terms()
                .map(|(o, c)| ((o.clone(), lambda.clone()), c.to_i64().expect("Kostka numbers are integers")))
                .collect()
        })
        .collect();
    let entries = columns.into_iter().flatten().collect();
    let k = Arc::new(KostkaMatrix { n, m, which, index, entries });
    cache().write().insert(key, k.clone());
    k
}
