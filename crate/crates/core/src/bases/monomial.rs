//! The monomial basis: realization, extraction, and products.

use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::superpartition::{Partition, SuperPartition};
use crate::superpoly::{normal_order, SuperMonomial, SuperPolynomial, ThetaSet};

/// m_Λ in `nvars` variables. Zero when Λ has more rows than variables.
pub fn realize_monomial(lambda: &SuperPartition, nvars: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    let m = lambda.m();
    if m + lambda.bosonic().len() > nvars {
        return out;
    }
    let a = lambda.fermionic();
    let boson_vals = lambda.bosonic().padded(nvars - m);
    let mut slots = vec![usize::MAX; m];
    let mut used = vec![false; nvars];
    place_fermions(a, 0, &mut slots, &mut used, &boson_vals, &mut out);
    out
}

fn place_fermions(
    a: &[usize],
    k: usize,
    slots: &mut Vec<usize>,
    used: &mut Vec<bool>,
    bosons: &[usize],
    out: &mut SuperPolynomial,
) {
    let n = used.len();
    if k == a.len() {
        let free: Vec<usize> = (0..n).filter(|&i| !used[i]).collect();
        let (_, sign) = normal_order(&slots.iter().map(|&i| i + 1).collect::<Vec<_>>()).expect("distinct slots");
        let (set, _) = ThetaSet::from_indices(&slots.iter().map(|&i| i + 1).collect::<Vec<_>>()).expect("distinct");
        let mut base = vec![0u8; n];
        for (j, &i) in slots.iter().enumerate() {
            base[i] = a[j] as u8;
        }
        let c = Coefficient::from_int(sign as i64);
        for arr in distinct_arrangements(bosons) {
            let mut x = base.clone();
            for (&i, &v) in free.iter().zip(&arr) {
                x[i] = v as u8;
            }
            out.add_term(SuperMonomial { x: x.into_iter().collect(), thetas: set }, c.clone());
        }
        return;
    }
    for i in 0..n {
        if !used[i] {
            used[i] = true;
            slots[k] = i;
            place_fermions(a, k + 1, slots, used, bosons, out);
            used[i] = false;
        }
    }
}

/// All distinct orderings of a multiset.
fn distinct_arrangements(vals: &[usize]) -> Vec<Vec<usize>> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in vals {
        *counts.entry(v).or_default() += 1;
    }
    let mut kinds: Vec<(usize, usize)> = counts.into_iter().collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(vals.len());
    fn rec(kinds: &mut [(usize, usize)], len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in 0..kinds.len() {
            if kinds[k].1 > 0 {
                kinds[k].1 -= 1;
                cur.push(kinds[k].0);
                rec(kinds, len, cur, out);
                cur.pop();
                kinds[k].1 += 1;
            }
        }
    }
    rec(&mut kinds, vals.len(), &mut cur, &mut out);
    out
}

/// Reads off the m-expansion of a diagonal-invariant superpolynomial: the
/// coefficient of m_Γ is that of θ_1⋯θ_m x^{(Γ^a, Γ^s)}.
pub fn extract_monomial(p: &SuperPolynomial) -> Result<BTreeMap<SuperPartition, Coefficient>> {
    if !p.is_diagonal_invariant() {
        return Err(Error::NotSymmetric);
    }
    let n = p.nvars();
    let mut out = BTreeMap::new();
    for (mono, c) in p.terms() {
        let m = mono.thetas.len();
        if mono.thetas != ThetaSet::first(m) {
            continue;
        }
        let x: Vec<usize> = mono.x.iter().map(|&v| v as usize).collect();
        let (fa, fs) = x.split_at(m);
        if fa.windows(2).any(|w| w[0] <= w[1]) || fs.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let deg: usize = x.iter().sum();
        let needed = SuperPartition::max_rows(deg, m);
        if n < needed {
            return Err(Error::TooFewVariables { needed, available: n });
        }
        let gamma = SuperPartition::new(fa.to_vec(), Partition::from_unsorted(fs.to_vec()))?;
        out.insert(gamma, c.clone());
    }
    Ok(out)
}

/// m_Λ · m_Ω expanded in the monomial basis.
///
/// The coefficient of m_Γ is the coefficient of θ_1⋯θ_m x^γ in the product,
/// with γ = (Γ^a, Γ^s). Each of the first m variables carries the θ of
/// exactly one factor; the search assigns parts of both factors position
/// by position.
pub fn monomial_product(lambda: &SuperPartition, omega: &SuperPartition) -> BTreeMap<SuperPartition, Coefficient> {
    let (n1, m1) = lambda.degree();
    let (n2, m2) = omega.degree();
    let (n, m) = (n1 + n2, m1 + m2);
    let mut out = BTreeMap::new();
    for gamma in SuperPartition::all(n, m) {
        if !fits(lambda, omega, &gamma) {
            continue;
        }
        let c = product_coefficient(lambda, omega, &gamma);
        if c != 0 {
            out.insert(gamma, Coefficient::from_int(c));
        }
    }
    out
}

/// Cheap necessary condition: Γ needs at least as many rows as either factor
/// and cannot have more rows than both together.
fn fits(l: &SuperPartition, o: &SuperPartition, g: &SuperPartition) -> bool {
    let rows = |s: &SuperPartition| s.m() + s.bosonic().len();
    let r = rows(g);
    r >= rows(l).max(rows(o)) && r <= rows(l) + rows(o)
}

struct Factor {
    ferm: Vec<usize>,
    used: Vec<bool>,
    /// multiplicities of nonzero bosonic parts, indexed by value
    bos: Vec<usize>,
    /// θ positions per fermionic part
    slot: Vec<usize>,
}

impl Factor {
    fn new(s: &SuperPartition, maxv: usize) -> Self {
        let mut bos = vec![0; maxv + 1];
        for &p in s.bosonic().parts() {
            bos[p] += 1;
        }
        Factor { ferm: s.fermionic().to_vec(), used: vec![false; s.m()], bos, slot: vec![0; s.m()] }
    }

    fn done(&self) -> bool {
        self.used.iter().all(|&u| u) && self.bos.iter().all(|&c| c == 0)
    }

    fn bosonic_options(&self, target: usize) -> impl Iterator<Item = usize> + '_ {
        // zero is always available
        (0..=target.min(self.bos.len() - 1)).filter(move |&v| v == 0 || self.bos[v] > 0)
    }
}

fn product_coefficient(l: &SuperPartition, o: &SuperPartition, g: &SuperPartition) -> i64 {
    let m = g.m();
    let mut gamma: Vec<usize> = g.fermionic().to_vec();
    gamma.extend_from_slice(g.bosonic().parts());
    let maxv = gamma.iter().copied().max().unwrap_or(0);
    let too_big = |s: &SuperPartition| s.bosonic().parts().first().is_some_and(|&p| p > maxv);
    if too_big(l) || too_big(o) {
        return 0;
    }
    let mut fs = [Factor::new(l, maxv), Factor::new(o, maxv)];
    let mut total = 0i64;
    search(0, m, &gamma, &mut fs, &mut total);
    total
}

fn take_boson(f: &mut Factor, q: usize) -> bool {
    if q == 0 {
        return true;
    }
    if q < f.bos.len() && f.bos[q] > 0 {
        f.bos[q] -= 1;
        true
    } else {
        false
    }
}

fn give_boson(f: &mut Factor, q: usize) {
    if q != 0 {
        f.bos[q] += 1;
    }
}

fn search(pos: usize, m: usize, gamma: &[usize], fs: &mut [Factor; 2], total: &mut i64) {
    if pos == gamma.len() {
        if fs[0].done() && fs[1].done() {
            let idx: Vec<usize> = fs[0].slot.iter().chain(&fs[1].slot).map(|&p| p + 1).collect();
            let (_, sign) = normal_order(&idx).expect("θ positions are distinct");
            *total += sign as i64;
        }
        return;
    }
    let g = gamma[pos];
    if pos < m {
        // the θ at this position comes from factor w
        for w in 0..2 {
            for k in 0..fs[w].ferm.len() {
                let p = fs[w].ferm[k];
                if fs[w].used[k] || p > g || !take_boson(&mut fs[1 - w], g - p) {
                    continue;
                }
                fs[w].used[k] = true;
                fs[w].slot[k] = pos;
                search(pos + 1, m, gamma, fs, total);
                fs[w].used[k] = false;
                give_boson(&mut fs[1 - w], g - p);
            }
        }
    } else {
        let opts: Vec<usize> = fs[0].bosonic_options(g).collect();
        for p in opts {
            take_boson(&mut fs[0], p);
            if take_boson(&mut fs[1], g - p) {
                search(pos + 1, m, gamma, fs, total);
                give_boson(&mut fs[1], g - p);
            }
            give_boson(&mut fs[0], p);
        }
    }
}
