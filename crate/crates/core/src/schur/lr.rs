//! Littlewood-Richardson coefficients and skew Schur functions.

use std::collections::BTreeMap;

use crate::bases::{convert, to_m, SymSuperFunc};
use crate::error::{Error, Result};
use crate::superpartition::SuperPartition;

use super::Family;

fn check_family(family: Family) -> Result<()> {
    match family {
        Family::S | Family::SBar => Ok(()),
        _ => Err(Error::UnsupportedBasis(family.to_string())),
    }
}

/// X_Γ X_Ω = Σ_Λ c^Λ_{ΓΩ} X_Λ for X = s or s̄.
pub fn lr(gamma: &SuperPartition, omega: &SuperPartition, family: Family) -> Result<BTreeMap<SuperPartition, i64>> {
    check_family(family)?;
    let b = family.basis();
    let prod = to_m(&SymSuperFunc::element(b, gamma.clone())).mul(&to_m(&SymSuperFunc::element(b, omega.clone())));
    let prod = convert(&prod, b)?;
    Ok(prod.terms().map(|(k, c)| (k.clone(), c.to_i64().expect("LR coefficients are integers"))).collect())
}

/// A single coefficient c^Λ_{ΓΩ}.
pub fn lr_coefficient(
    lambda: &SuperPartition,
    gamma: &SuperPartition,
    omega: &SuperPartition,
    family: Family,
) -> Result<i64> {
    Ok(lr(gamma, omega, family)?.get(lambda).copied().unwrap_or(0))
}

/// Coefficients c^Λ_{ΓΩ} for all Γ, Ω whose product has |Λ^*| ≤ `max_n` and
/// fermionic degree ≤ `max_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrTable {
    pub family: Family,
    pub max_n: usize,
    pub max_m: usize,
    entries: BTreeMap<(SuperPartition, SuperPartition, SuperPartition), i64>,
}

impl LrTable {
    pub fn build(family: Family, max_n: usize, max_m: usize) -> Result<Self> {
        check_family(family)?;
        let mut sps = Vec::new();
        for n in 0..=max_n {
            for m in 0..=max_m {
                sps.extend(SuperPartition::all(n, m));
            }
        }
        let mut entries = BTreeMap::new();
        for g in &sps {
            for o in &sps {
                if g.n() + o.n() > max_n || g.m() + o.m() > max_m {
                    continue;
                }
                for (l, c) in lr(g, o, family)? {
                    entries.insert((g.clone(), o.clone(), l), c);
                }
            }
        }
        Ok(LrTable { family, max_n, max_m, entries })
    }

    /// c^Λ_{ΓΩ}, zero outside the table.
    pub fn get(&self, lambda: &SuperPartition, gamma: &SuperPartition, omega: &SuperPartition) -> i64 {
        self.entries.get(&(gamma.clone(), omega.clone(), lambda.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries as (Γ, Ω, Λ, c).
    pub fn iter(&self) -> impl Iterator<Item = (&SuperPartition, &SuperPartition, &SuperPartition, i64)> {
        self.entries.iter().map(|((g, o, l), &c)| (g, o, l, c))
    }
}

/// s_{Λ/Ω} = Σ_Γ c̄^{Λ′}_{Γ′Ω′} s_Γ and s̄_{Λ/Ω} = Σ_Γ c^Λ_{ΩΓ} s̄_Γ, in the
/// family's own basis.
pub fn skew(lambda: &SuperPartition, omega: &SuperPartition, family: Family) -> Result<SymSuperFunc> {
    check_family(family)?;
    let mut out = SymSuperFunc::zero(family.basis());
    if omega.n() > lambda.n() || omega.m() > lambda.m() {
        return Ok(out);
    }
    let (n, m) = (lambda.n() - omega.n(), lambda.m() - omega.m());
    for gamma in SuperPartition::all(n, m) {
        let c = match family {
            Family::S => lr_coefficient(&lambda.conjugate(), &gamma.conjugate(), &omega.conjugate(), Family::SBar)?,
            _ => lr_coefficient(lambda, omega, &gamma, Family::S)?,
        };
        if c != 0 {
            out.add_term(gamma, &c.into());
        }
    }
    Ok(out)
}
