//! The duality suite: orthonormality of the dual families, ω as an
//! isometric involution, φ on s_Λ, and the ω formulas for the duals.

use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{omega, scalar_product, Basis, SymSuperFunc};
use crate::coeff::Coefficient;
use crate::superpartition::SuperPartition;

use super::{dual_by_omega, phi, schur, sign_binom2, Family};

#[derive(Clone, Debug, Default, Serialize)]
pub struct DualityReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn degree_checks(n: usize, m: usize) -> (usize, Vec<String>) {
    let all = SuperPartition::all(n, m);
    let mut checks = 0;
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: String| {
        checks += 1;
        if !ok {
            bad.push(what);
        }
    };
    let pairs = [(Family::SStar, Family::S), (Family::SBarStar, Family::SBar)];
    for l in &all {
        for o in &all {
            let delta = if l == o { Coefficient::one() } else { Coefficient::zero() };
            for (a, b) in pairs {
                let got = scalar_product(&schur(l, a), &schur(o, b)).expect("m basis converts");
                check(got == delta, format!("<<{a}_{l}, {b}_{o}>> = {got}"));
            }
            let (f, g) = (schur(l, Family::S), schur(o, Family::SBar));
            let (wf, wg) = (omega(&f).expect("ω"), omega(&g).expect("ω"));
            let same = scalar_product(&wf, &wg).expect("m basis") == scalar_product(&f, &g).expect("m basis");
            check(same, format!("ω is not an isometry on s_{l}, sbar_{o}"));
        }
        for fam in Family::ALL {
            let f = schur(l, fam);
            check(omega(&omega(&f).expect("ω")).expect("ω") == f, format!("ω² ≠ 1 on {fam}_{l}"));
        }
        let s = SymSuperFunc::element(Basis::S, l.clone());
        let want = SymSuperFunc::element(Basis::S, l.conjugate()).scale(&sign_binom2(m));
        check(phi(&s).ok() == Some(want), format!("φ(s_{l}) is not ±s_{}", l.conjugate()));
        for fam in [Family::SStar, Family::SBarStar] {
            check(dual_by_omega(l, fam).ok() == Some(schur(l, fam)), format!("ω formula fails for {fam}_{l}"));
        }
    }
    (checks, bad)
}

/// Runs every check for all degrees (n|m) with n ≤ `max_n`, m ≤ `max_m`.
pub fn duality_suite(max_n: usize, max_m: usize) -> DualityReport {
    let degrees: Vec<(usize, usize)> = (0..=max_n).flat_map(|n| (0..=max_m).map(move |m| (n, m))).collect();
    let parts: Vec<(usize, Vec<String>)> = degrees.into_par_iter().map(|(n, m)| degree_checks(n, m)).collect();
    let mut report = DualityReport::default();
    for (c, f) in parts {
        report.checks += c;
        report.failures.extend(f);
    }
    report
}
