//! Pieri rules: products of a Schur-family element with a single generator,
//! computed on superpartitions.

mod rules;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{convert, generator_in_m, to_m, Basis, SymSuperFunc};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::schur::Family;
use crate::superpartition::{StripKind, SuperPartition};

/// The ten rules, named `<family>_<generator>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieriKind {
    SStarH,
    SStarHTilde,
    SBarE,
    SBarETilde,
    SBarStarH,
    SBarStarHTilde,
    SE,
    SETilde,
    SH,
    SPTilde,
}

impl PieriKind {
    pub const ALL: [PieriKind; 10] = [
        PieriKind::SStarH,
        PieriKind::SStarHTilde,
        PieriKind::SBarE,
        PieriKind::SBarETilde,
        PieriKind::SBarStarH,
        PieriKind::SBarStarHTilde,
        PieriKind::SE,
        PieriKind::SETilde,
        PieriKind::SH,
        PieriKind::SPTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PieriKind::SStarH => "sstar_h",
            PieriKind::SStarHTilde => "sstar_htilde",
            PieriKind::SBarE => "sbar_e",
            PieriKind::SBarETilde => "sbar_etilde",
            PieriKind::SBarStarH => "sbarstar_h",
            PieriKind::SBarStarHTilde => "sbarstar_htilde",
            PieriKind::SE => "s_e",
            PieriKind::SETilde => "s_etilde",
            PieriKind::SH => "s_h",
            PieriKind::SPTilde => "s_ptilde",
        }
    }

    pub fn family(self) -> Family {
        use PieriKind::*;
        match self {
            SStarH | SStarHTilde => Family::SStar,
            SBarE | SBarETilde => Family::SBar,
            SBarStarH | SBarStarHTilde => Family::SBarStar,
            SE | SETilde | SH | SPTilde => Family::S,
        }
    }

    pub fn generator(self, ell: usize) -> Generator {
        use PieriKind::*;
        match self {
            SStarH | SBarStarH | SH => Generator::H(ell),
            SStarHTilde | SBarStarHTilde => Generator::HTilde(ell),
            SBarE | SE => Generator::E(ell),
            SBarETilde | SETilde => Generator::ETilde(ell),
            SPTilde => Generator::PTilde(ell),
        }
    }

    pub fn is_fermionic(self) -> bool {
        self.generator(0).is_fermionic()
    }

    /// The rule whose terms are the conjugates of this one's.
    pub fn transpose(self) -> Option<PieriKind> {
        use PieriKind::*;
        match self {
            SStarH => Some(SBarE),
            SBarE => Some(SStarH),
            SStarHTilde => Some(SBarETilde),
            SBarETilde => Some(SStarHTilde),
            SBarStarH => Some(SE),
            SE => Some(SBarStarH),
            SBarStarHTilde => Some(SETilde),
            SETilde => Some(SBarStarHTilde),
            SH | SPTilde => None,
        }
    }

    /// The rule for multiplying `family` by `gen`, if there is one.
    pub fn for_product(family: Family, gen: Generator) -> Option<PieriKind> {
        PieriKind::ALL.into_iter().find(|k| k.family() == family && k.generator(gen.ell()) == gen)
    }
}

impl fmt::Display for PieriKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PieriKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PieriKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "unknown Pieri kind".into() })
    }
}

/// A one-part generator. Fermionic ones carry a tilde.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    H(usize),
    HTilde(usize),
    E(usize),
    ETilde(usize),
    PTilde(usize),
}

impl Generator {
    pub fn ell(self) -> usize {
        match self {
            Generator::H(l) | Generator::HTilde(l) | Generator::E(l) | Generator::ETilde(l) | Generator::PTilde(l) => l,
        }
    }

    pub fn is_fermionic(self) -> bool {
        matches!(self, Generator::HTilde(_) | Generator::ETilde(_) | Generator::PTilde(_))
    }

    fn basis(self) -> Basis {
        match self {
            Generator::H(_) | Generator::HTilde(_) => Basis::H,
            Generator::E(_) | Generator::ETilde(_) => Basis::E,
            Generator::PTilde(_) => Basis::P,
        }
    }

    /// The generator in the monomial basis.
    pub fn to_m(self) -> Result<SymSuperFunc> {
        generator_in_m(self.basis(), self.ell(), self.is_fermionic())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tilde = if self.is_fermionic() { "~" } else { "" };
        write!(f, "{}{tilde}{}", self.basis().name(), self.ell())
    }
}

impl FromStr for Generator {
    type Err = Error;
    /// Parses `h3`, `h~3`, `e2`, `e~0`, `p~1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.into() };
        let t = s.trim();
        let (head, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad("missing index"))?);
        let ell: usize = rest.parse().map_err(|_| bad("bad index"))?;
        match head {
            "h" => Ok(Generator::H(ell)),
            "h~" => Ok(Generator::HTilde(ell)),
            "e" => Ok(Generator::E(ell)),
            "e~" => Ok(Generator::ETilde(ell)),
            "p~" => Ok(Generator::PTilde(ell)),
            _ => Err(bad("expected h, h~, e, e~ or p~")),
        }
    }
}

/// One term ±Ω of a Pieri expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTerm {
    pub omega: SuperPartition,
    pub sign: i8,
}

impl fmt::Display for SignedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{s}({})", self.omega.to_text())
    }
}

/// A Pieri term together with the row where a fermionic generator put its
/// new circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriStep {
    pub omega: SuperPartition,
    pub sign: i8,
    pub new_circle: Option<usize>,
}

/// The terms of the family element at Λ times the generator of index ℓ,
/// with the generator on the right. Largest Ω first.
pub fn pieri(kind: PieriKind, lambda: &SuperPartition, ell: usize) -> Vec<SignedTerm> {
    pieri_steps(kind, lambda, ell).into_iter().map(|s| SignedTerm { omega: s.omega, sign: s.sign }).collect()
}

/// As [`pieri`], keeping the position of the new circle.
pub fn pieri_steps(kind: PieriKind, lambda: &SuperPartition, ell: usize) -> Vec<PieriStep> {
    use PieriKind::*;
    let raw = match kind {
        SStarH => rules::sstar_h(lambda, ell),
        SBarE => rules::sbar_e(lambda, ell),
        SStarHTilde => rules::sstar_htilde(lambda, ell),
        SBarETilde => rules::sbar_etilde(lambda, ell),
        // the s rule for h coincides with the s̄* one, and likewise for p̃ and h̃
        SBarStarH | SH => rules::bosonic_sliding(lambda, ell, StripKind::Horizontal),
        SE => rules::bosonic_sliding(lambda, ell, StripKind::Vertical),
        SBarStarHTilde | SPTilde => rules::fermionic_sliding(lambda, ell, StripKind::Horizontal),
        SETilde => rules::fermionic_sliding(lambda, ell, StripKind::Vertical),
    };
    let mut terms: Vec<PieriStep> =
        raw.into_iter().map(|(omega, sign, new_circle)| PieriStep { omega, sign, new_circle }).collect();
    terms.sort_by(|a, b| b.omega.cmp(&a.omega));
    debug_assert!(terms.windows(2).all(|w| w[0].omega != w[1].omega), "{kind} produced a repeated term");
    terms
}

/// A term list as an element of the rule's family.
pub fn terms_to_func(kind: PieriKind, terms: &[SignedTerm]) -> SymSuperFunc {
    SymSuperFunc::from_terms(
        kind.family().basis(),
        terms.iter().map(|t| (t.omega.clone(), Coefficient::from_int(t.sign as i64))),
    )
}

fn family_of(basis: Basis) -> Option<Family> {
    Family::ALL.into_iter().find(|f| f.basis() == basis)
}

/// f·g for f in a Schur-family basis, by the Pieri rules.
pub fn multiply_by_generator(f: &SymSuperFunc, gen: Generator) -> Result<SymSuperFunc> {
    let incompatible =
        || Error::IncompatibleGenerator { generator: gen.to_string(), family: f.basis().name().to_string() };
    let family = family_of(f.basis()).ok_or_else(incompatible)?;
    let kind = PieriKind::for_product(family, gen).ok_or_else(incompatible)?;
    let mut out = SymSuperFunc::zero(f.basis());
    for (lambda, c) in f.terms() {
        for t in pieri(kind, lambda, gen.ell()) {
            out.add_term(t.omega, &(c * &Coefficient::from_int(t.sign as i64)));
        }
    }
    Ok(out)
}

/// g·f, from f·g and the sign (−1)^m for a fermionic generator past an
/// element of fermionic degree m.
pub fn multiply_by_generator_left(gen: Generator, f: &SymSuperFunc) -> Result<SymSuperFunc> {
    let right = multiply_by_generator(f, gen)?;
    if !gen.is_fermionic() {
        return Ok(right);
    }
    // the product has fermionic degree m+1
    let terms = right.terms().map(|(k, c)| (k.clone(), if k.m() % 2 == 0 { -c } else { c.clone() }));
    Ok(SymSuperFunc::from_terms(right.basis(), terms))
}

/// The same product computed by expanding both factors in monomials and
/// converting back to the rule's family.
pub fn brute_force(kind: PieriKind, lambda: &SuperPartition, ell: usize) -> Result<SymSuperFunc> {
    let basis = kind.family().basis();
    let left = to_m(&SymSuperFunc::element(basis, lambda.clone()));
    let prod = match kind.generator(ell) {
        Generator::H(0) | Generator::E(0) => left,
        gen => left.mul(&gen.to_m()?),
    };
    convert(&prod, basis)
}

/// A disagreement between a rule and the brute-force product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub kind: PieriKind,
    pub lambda: SuperPartition,
    pub ell: usize,
    pub rule: SymSuperFunc,
    pub brute_force: SymSuperFunc,
}

/// Checks every rule against `brute_force` for all Λ with |Λ^*| ≤ `max_n`,
/// m ≤ `max_m`, and ℓ ≤ `max_ell` (ℓ ≥ 1 for bosonic generators). Returns
/// the number of cases checked and the failures.
pub fn verify_against_oracle(
    kinds: &[PieriKind],
    max_n: usize,
    max_m: usize,
    max_ell: usize,
) -> (usize, Vec<Mismatch>) {
    let mut cases = Vec::new();
    for &kind in kinds {
        for n in 0..=max_n {
            for m in 0..=max_m {
                for lambda in SuperPartition::all(n, m) {
                    let first = if kind.is_fermionic() { 0 } else { 1 };
                    for ell in first..=max_ell {
                        cases.push((kind, lambda.clone(), ell));
                    }
                }
            }
        }
    }
    let mut failures: Vec<Mismatch> = cases
        .par_iter()
        .filter_map(|(kind, lambda, ell)| {
            let rule = terms_to_func(*kind, &pieri(*kind, lambda, *ell));
            let brute = brute_force(*kind, lambda, *ell).expect("brute force is defined at desk degrees");
            (rule != brute).then(|| Mismatch {
                kind: *kind,
                lambda: lambda.clone(),
                ell: *ell,
                rule,
                brute_force: brute,
            })
        })
        .collect();
    failures.sort_by(|a, b| (a.kind, &a.lambda, a.ell).cmp(&(b.kind, &b.lambda, b.ell)));
    (cases.len(), failures)
}

/// One instance of a product identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub lambda: SuperPartition,
    pub holds: bool,
}

/// Products of fermionic generators that are single Schur-family elements:
///
/// - h_{(Λ^a;∅)} = s*_{(Λ^a;∅)} = s̄*_{(Λ^a;∅)}
/// - e_{(Λ^a;∅)} = (−1)^{C(m,2)} s̄_{(Λ^a;∅)′} = (−1)^{C(m,2)} s_{(Λ^a;∅)′}
/// - p_{(Λ^a;∅)} = s_{(Λ^a;∅)}
///
/// checked in the monomial basis for all strict Λ^a with |Λ^a| ≤ `max_n`
/// and at most `max_m` parts.
pub fn product_identities(max_n: usize, max_m: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in 1..=max_m {
            for lambda in SuperPartition::all(n, m).into_iter().filter(|l| l.bosonic().is_empty()) {
                let sign = if (m * (m - 1) / 2) % 2 == 1 { -Coefficient::one() } else { Coefficient::one() };
                let el = |b: Basis, l: &SuperPartition| to_m(&SymSuperFunc::element(b, l.clone()));
                let conj = lambda.conjugate();
                let h = el(Basis::H, &lambda);
                let e = el(Basis::E, &lambda);
                let p = el(Basis::P, &lambda);
                let checks = [
                    ("h-is-sstar", h == el(Basis::SStar, &lambda)),
                    ("h-is-sbarstar", h == el(Basis::SBarStar, &lambda)),
                    ("e-is-sbar-conjugate", e == el(Basis::SBar, &conj).scale(&sign)),
                    ("e-is-s-conjugate", e == el(Basis::S, &conj).scale(&sign)),
                    ("p-is-s", p == el(Basis::S, &lambda)),
                ];
                for (identity, holds) in checks {
                    out.push(IdentityCheck { identity, lambda: lambda.clone(), holds });
                }
            }
        }
    }
    out
}

/// Signed term lists keyed by Ω, for comparisons that ignore order.
pub fn term_map(terms: &[SignedTerm]) -> BTreeMap<SuperPartition, i8> {
    terms.iter().map(|t| (t.omega.clone(), t.sign)).collect()
}
