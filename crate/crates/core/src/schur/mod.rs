//! The four Schur families, Kostka matrices, φ, Littlewood-Richardson
//! coefficients, skew functions and the Cauchy identity.

mod cauchy;
mod duality;
mod kostka;
mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::linalg::invert;
use crate::bases::{convert, omega, to_m, Basis, SymSuperFunc};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::keyops::{sbar_rep, schur_rep};
use crate::superpartition::SuperPartition;
use crate::superpoly::vandermonde;

pub use cauchy::{cauchy_check, cauchy_product, cauchy_slices, cauchy_sum, CauchySlice};
pub use duality::{duality_suite, DualityReport};
pub use kostka::{h_in_dual, kostka, KostkaKind, KostkaMatrix};
pub use lr::{lr, lr_coefficient, skew, LrTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    S,
    SBar,
    SStar,
    SBarStar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::S, Family::SBar, Family::SStar, Family::SBarStar];

    pub fn basis(self) -> Basis {
        match self {
            Family::S => Basis::S,
            Family::SBar => Basis::SBar,
            Family::SStar => Basis::SStar,
            Family::SBarStar => Basis::SBarStar,
        }
    }

    pub fn name(self) -> &'static str {
        self.basis().name()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "unknown family".into() })
    }
}

/// m-expansion of s_Λ or s̄_Λ from the Key-polynomial construction, read off
/// the bisymmetric image without rebuilding the superpolynomial.
pub fn key_expansion(lambda: &SuperPartition, family: Family) -> BTreeMap<SuperPartition, Coefficient> {
    let (n, m) = lambda.degree();
    let nvars = SuperPartition::max_rows(n, m);
    let rep = match family {
        Family::S => schur_rep(lambda, nvars),
        Family::SBar => sbar_rep(lambda, nvars),
        _ => panic!("the Key construction covers s and s̄ only"),
    }
    .expect("max_rows variables always suffice");
    let full = rep.mul(&vandermonde(nvars, m));
    let mut out = BTreeMap::new();
    for omega in SuperPartition::all(n, m) {
        let mut e: Vec<u8> = omega.fermionic().iter().map(|&v| v as u8).collect();
        e.extend(omega.bosonic().padded(nvars - m).into_iter().map(|v| v as u8));
        let c = full.coeff(&e);
        if !c.is_zero() {
            out.insert(omega, c);
        }
    }
    out
}

/// How a Schur function is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Key polynomials and divided differences; duals through ω.
    Key,
    /// Kostka matrices built from the Pieri rules.
    Pieri,
}

fn sign_binom2(m: usize) -> Coefficient {
    if (m * m.saturating_sub(1) / 2) % 2 == 1 {
        -Coefficient::one()
    } else {
        Coefficient::one()
    }
}

/// The family element at Λ in the monomial basis.
pub fn schur(lambda: &SuperPartition, family: Family) -> SymSuperFunc {
    to_m(&SymSuperFunc::element(family.basis(), lambda.clone()))
}

pub fn schur_by(lambda: &SuperPartition, family: Family, route: Route) -> Result<SymSuperFunc> {
    match route {
        Route::Key => Ok(schur(lambda, family)),
        Route::Pieri => schur_via_pieri(lambda, family),
    }
}

/// s_Λ = Σ_Ω K̄_{ΛΩ} m_Ω and s̄_Λ = Σ_Ω K_{ΛΩ} m_Ω; the duals come from
/// inverting h_Λ = Σ_Ω K̄_{ΩΛ} s*_Ω (resp. K and s̄*).
pub fn schur_via_pieri(lambda: &SuperPartition, family: Family) -> Result<SymSuperFunc> {
    let (n, m) = lambda.degree();
    let which = match family {
        Family::S | Family::SStar => KostkaKind::KBar,
        Family::SBar | Family::SBarStar => KostkaKind::K,
    };
    let k = kostka(n, m, which);
    match family {
        Family::S | Family::SBar => {
            Ok(SymSuperFunc::from_terms(Basis::M, k.row(lambda).into_iter().map(|(o, v)| (o, v.into()))))
        }
        Family::SStar | Family::SBarStar => {
            let mat: Vec<Vec<Coefficient>> =
                k.dense().into_iter().map(|r| r.into_iter().map(Coefficient::from).collect()).collect();
            let inv = invert(&mat)?;
            let j = k.index.iter().position(|o| o == lambda).expect("Λ is indexed");
            let h = SymSuperFunc::from_terms(
                Basis::H,
                k.index.iter().zip(&inv).map(|(l, row)| (l.clone(), row[j].clone())),
            );
            Ok(to_m(&h))
        }
    }
}

/// The duality formulas s*_Λ = (−1)^{C(m,2)} ω s̄_{Λ′} and
/// s̄*_Λ = (−1)^{C(m,2)} ω s_{Λ′}, evaluated in the monomial basis.
pub fn dual_by_omega(lambda: &SuperPartition, family: Family) -> Result<SymSuperFunc> {
    let other = match family {
        Family::SStar => Family::SBar,
        Family::SBarStar => Family::S,
        _ => return Err(Error::UnsupportedBasis(family.to_string())),
    };
    let f = omega(&schur(&lambda.conjugate(), other))?;
    Ok(f.scale(&sign_binom2(lambda.m())))
}

/// The homomorphism with φ(p̃_r) = ẽ_r and φ(h_r) = e_r, returned in the
/// basis of the input. On bosonic power sums it is φ(p_r) = (−1)^{r−1} p_r.
pub fn phi(f: &SymSuperFunc) -> Result<SymSuperFunc> {
    let p = convert(f, Basis::P)?;
    let mut acc = SymSuperFunc::zero(Basis::M);
    for (lambda, c) in p.terms() {
        let ferm = SuperPartition::from_parts(lambda.fermionic(), &[])?;
        let bos = SuperPartition::from_parts(&[], lambda.bosonic().parts())?;
        let e = to_m(&SymSuperFunc::element(Basis::E, ferm));
        let pb = to_m(&SymSuperFunc::element(Basis::P, bos));
        let odd = (lambda.bosonic().size() - lambda.bosonic().len()) % 2 == 1;
        let c = if odd { -c } else { c.clone() };
        acc = acc.add(&e.mul(&pb).scale(&c))?;
    }
    convert(&acc, f.basis())
}
