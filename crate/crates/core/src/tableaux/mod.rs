//! s-tableaux and s̄-tableaux.
//!
//! A tableau is a chain Ω = Λ_(0), …, Λ_(n) = Λ in which each step is a term
//! of s*·h_ℓ / s*·h̃_ℓ (s family) or s̄*·h_ℓ / s̄*·h̃_ℓ (s̄ family). Chains are
//! the stored object; fillings are derived in [`diagram`].

mod diagram;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{Basis, SymSuperFunc};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::pieri::{pieri_steps, PieriKind, PieriStep};
use crate::schur::Family;
use crate::superpartition::SuperPartition;

pub use diagram::{reconstruct, FillRow, Filling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LetterKind {
    Bosonic,
    Fermionic,
}

/// A weight letter: `3` is bosonic, `3~` fermionic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub value: usize,
    pub kind: LetterKind,
}

impl Letter {
    pub fn bosonic(value: usize) -> Self {
        Letter { value, kind: LetterKind::Bosonic }
    }

    pub fn fermionic(value: usize) -> Self {
        Letter { value, kind: LetterKind::Fermionic }
    }

    pub fn is_fermionic(self) -> bool {
        self.kind == LetterKind::Fermionic
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.is_fermionic() {
            f.write_str("~")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (digits, kind) = match t.strip_suffix('~') {
            Some(d) => (d, LetterKind::Fermionic),
            None => (t, LetterKind::Bosonic),
        };
        let value = digits
            .parse()
            .map_err(|_| Error::Parse { input: s.to_string(), reason: "expected a letter like 3 or 3~".into() })?;
        Ok(Letter { value, kind })
    }
}

/// Parses a comma-separated weight such as `1~,0~,2,1,1`.
pub fn parse_weight(text: &str) -> Result<Vec<Letter>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

pub fn weight_to_text(weight: &[Letter]) -> String {
    weight.iter().map(Letter::to_string).collect::<Vec<_>>().join(",")
}

/// The weight attached to m_Γ: fermionic parts first, then the nonzero
/// bosonic ones.
pub fn weight_of(gamma: &SuperPartition) -> Vec<Letter> {
    gamma
        .fermionic()
        .iter()
        .map(|&v| Letter::fermionic(v))
        .chain(gamma.bosonic().parts().iter().map(|&v| Letter::bosonic(v)))
        .collect()
}

/// Circle fillings read top to bottom. Circles already present in the
/// inner shape carry 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircleWord(pub Vec<usize>);

impl CircleWord {
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count()).sum()
    }

    pub fn sign(&self) -> i8 {
        if self.inversions() % 2 == 1 {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub family: Family,
    pub weight: Vec<Letter>,
    pub chain: Vec<SuperPartition>,
    pub word: CircleWord,
    step_sign: i8,
}

impl Tableau {
    pub fn inner(&self) -> &SuperPartition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &SuperPartition {
        self.chain.last().expect("chains are nonempty")
    }

    /// (−1)^{inv} of the circle word.
    pub fn sign(&self) -> i8 {
        self.word.sign()
    }

    /// Product of the Pieri step signs.
    pub fn step_sign(&self) -> i8 {
        self.step_sign
    }

    pub fn filling(&self) -> Filling {
        Filling::of(self)
    }

    pub fn render(&self) -> String {
        self.filling().to_string()
    }

    pub fn render_latex(&self) -> String {
        self.filling().to_latex()
    }
}

fn kinds(family: Family) -> Result<(PieriKind, PieriKind)> {
    match family {
        Family::S => Ok((PieriKind::SStarH, PieriKind::SStarHTilde)),
        Family::SBar => Ok((PieriKind::SBarStarH, PieriKind::SBarStarHTilde)),
        f => Err(Error::UnsupportedBasis(f.name().to_string())),
    }
}

fn steps(family: Family, from: &SuperPartition, letter: Letter) -> Vec<PieriStep> {
    let (bos, fer) = kinds(family).expect("family checked by caller");
    pieri_steps(if letter.is_fermionic() { fer } else { bos }, from, letter.value)
}

/// Next circle word after a step: the new circle's letter goes in at its row.
fn next_word(word: &[usize], to: &SuperPartition, step: &PieriStep, letter: usize) -> Vec<usize> {
    let mut w = word.to_vec();
    if let Some(r) = step.new_circle {
        let at = to.circle_rows().iter().filter(|&&x| x < r).count();
        w.insert(at, letter);
    }
    w
}

#[derive(Clone)]
struct Partial {
    chain: Vec<SuperPartition>,
    word: Vec<usize>,
    sign: i8,
}

impl Partial {
    fn extend(&self, step: PieriStep, letter: usize) -> Partial {
        let word = next_word(&self.word, &step.omega, &step, letter);
        let mut chain = self.chain.clone();
        chain.push(step.omega);
        Partial { chain, word, sign: self.sign * step.sign }
    }
}

fn fits(cur: &SuperPartition, target: &SuperPartition) -> bool {
    cur.m() <= target.m() && target.star().contains(cur.star()) && target.circled().contains(cur.circled())
}

fn dfs(family: Family, weight: &[Letter], target: Option<&SuperPartition>, p: Partial, out: &mut Vec<Partial>) {
    let i = p.chain.len() - 1;
    if i == weight.len() {
        if target.is_none_or(|t| p.chain[i] == *t) {
            out.push(p);
        }
        return;
    }
    for step in steps(family, &p.chain[i], weight[i]) {
        if target.is_some_and(|t| !fits(&step.omega, t)) {
            continue;
        }
        dfs(family, weight, target, p.extend(step, i + 1), out);
    }
}

fn run(
    family: Family,
    omega: &SuperPartition,
    weight: &[Letter],
    target: Option<&SuperPartition>,
) -> Result<Vec<Tableau>> {
    kinds(family)?;
    let start = Partial { chain: vec![omega.clone()], word: vec![0; omega.m()], sign: 1 };
    let found: Vec<Partial> = if weight.is_empty() {
        let mut out = Vec::new();
        dfs(family, weight, target, start, &mut out);
        out
    } else {
        let first: Vec<Partial> = steps(family, omega, weight[0])
            .into_iter()
            .filter(|s| target.is_none_or(|t| fits(&s.omega, t)))
            .map(|s| start.extend(s, 1))
            .collect();
        first
            .into_par_iter()
            .map(|p| {
                let mut out = Vec::new();
                dfs(family, weight, target, p, &mut out);
                out
            })
            .flatten_iter()
            .collect()
    };
    Ok(found
        .into_iter()
        .map(|p| Tableau {
            family,
            weight: weight.to_vec(),
            chain: p.chain,
            word: CircleWord(p.word),
            step_sign: p.sign,
        })
        .collect())
}

/// All tableaux of shape Λ/Ω and the given weight, each with its sign. An
/// inconsistent weight gives an empty list; only the s and s̄ families are
/// accepted.
pub fn enumerate(
    lambda: &SuperPartition,
    omega: &SuperPartition,
    weight: &[Letter],
    family: Family,
) -> Result<Vec<(Tableau, i8)>> {
    kinds(family)?;
    let size: usize = weight.iter().map(|l| l.value).sum();
    let fermionic = weight.iter().filter(|l| l.is_fermionic()).count();
    if lambda.n() < omega.n() || lambda.m() < omega.m() {
        return Ok(Vec::new());
    }
    if size != lambda.n() - omega.n() || fermionic != lambda.m() - omega.m() {
        return Ok(Vec::new());
    }
    let ts = run(family, omega, weight, Some(lambda))?;
    Ok(ts
        .into_iter()
        .map(|t| {
            let s = t.sign();
            (t, s)
        })
        .collect())
}

/// Every tableau with inner shape Ω and the given weight, whatever its outer
/// shape.
pub fn enumerate_from(omega: &SuperPartition, weight: &[Letter], family: Family) -> Result<Vec<Tableau>> {
    run(family, omega, weight, None)
}

/// Signed tableau counts of inner shape Ω and the given weight, by outer
/// shape. This is the expansion of s*_Ω h_γ (or s̄*_Ω h_γ) in its family.
pub fn signed_counts(
    omega: &SuperPartition,
    weight: &[Letter],
    family: Family,
) -> Result<BTreeMap<SuperPartition, i64>> {
    let mut out = BTreeMap::new();
    for t in enumerate_from(omega, weight, family)? {
        *out.entry(t.outer().clone()).or_insert(0) += t.sign() as i64;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Σ_T (−1)^{inv(T)} over tableaux of shape Λ/Ω and the given weight.
pub fn signed_count(lambda: &SuperPartition, omega: &SuperPartition, weight: &[Letter], family: Family) -> Result<i64> {
    Ok(enumerate(lambda, omega, weight, family)?.iter().map(|(_, s)| *s as i64).sum())
}

/// The tableau generating function of shape Λ/Ω in the monomial basis: the
/// coefficient of m_Γ is the signed count at the weight of Γ.
pub fn generating_function(lambda: &SuperPartition, omega: &SuperPartition, family: Family) -> Result<SymSuperFunc> {
    kinds(family)?;
    if lambda.n() < omega.n() || lambda.m() < omega.m() {
        return Ok(SymSuperFunc::zero(Basis::M));
    }
    let gammas = SuperPartition::all(lambda.n() - omega.n(), lambda.m() - omega.m());
    let counts: Vec<(SuperPartition, i64)> = gammas
        .into_par_iter()
        .map(|g| {
            let c = signed_count(lambda, omega, &weight_of(&g), family)?;
            Ok((g, c))
        })
        .collect::<Result<_>>()?;
    Ok(SymSuperFunc::from_terms(
        Basis::M,
        counts.into_iter().filter(|(_, c)| *c != 0).map(|(g, c)| (g, Coefficient::from_int(c))),
    ))
}

#[cfg(test)]
mod tests;
