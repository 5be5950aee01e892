//! Randomized checks of the operator identities behind the Pieri rules.
//!
//! Each identity is instantiated on concrete data (a number of variables,
//! row lists, partitions, and a random test polynomial when the identity is
//! an operator identity), and both sides are compared exactly.

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::ops::{key, prefix_monomial, OperatorWord};
use super::{composition_sa, p_word, r_word, sbar_rep, schur_rep, star_monomial};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::superpartition::{Partition, StripKind, SuperPartition};
use crate::superpoly::Poly;

/// Largest number of variables used by the randomized instances.
const MAX_VARS: usize = 6;
/// Bound on the total degree of the data entering an instance.
const MAX_DEGREE: usize = 6;
const MAX_M: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// K_{(Λ^s)^R,Λ^a} = ℛ_{N,[α]} x^{Λ^*}.
    KeyReorder,
    /// x^{Λ^*} e_ℓ as a sum over vertical strips of products of 𝛑_{i,I}.
    MonomialTimesE,
    /// ℛ π_{α_i−1} = ℛ_{[…,α_i−1,…]} and ℛ π_β = ℛ otherwise.
    RAbsorbsPi,
    /// A circle without an addable corner can be moved up to one that has it.
    RAddableCorner,
    /// ∂_{ω_{(N−m)^c}} ℛ_{N,[α]} = 0 when two α's coincide.
    REqualRowsVanish,
    /// e^{(v)}_ℓ π_{ω_v} = Σ_j π_{ω_{v−1}} π_(v−1,j) x_1⋯x_{j−1} e^{(1..j)}_{ℓ−j+1}.
    ETimesLongestPi,
    /// Expansion of ∂_{ω_{(v−1)^c}} e^{(v)}_ℓ ℛ over rows r ∉ α.
    RExpansion,
    /// x^λ h_k as a sum over horizontal strips.
    MonomialTimesH,
    /// The five rules for 𝒫_{N,[α]} followed by π's or 𝛑's.
    PAbsorbsPi,
    /// ∂_{ω_{m+1}} π_{ω_{(m+1)^c}} e^{(m+1)}_ℓ π_[m+1,N−1] as a sum of π̂ intervals.
    EPiInterval,
    /// The final expansion of the fermionic 𝒫 computation over rows r ∉ α.
    PExpansion,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::KeyReorder,
        Identity::MonomialTimesE,
        Identity::RAbsorbsPi,
        Identity::RAddableCorner,
        Identity::REqualRowsVanish,
        Identity::ETimesLongestPi,
        Identity::RExpansion,
        Identity::MonomialTimesH,
        Identity::PAbsorbsPi,
        Identity::EPiInterval,
        Identity::PExpansion,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::KeyReorder => "key-reorder",
            Identity::MonomialTimesE => "monomial-times-e",
            Identity::RAbsorbsPi => "r-absorbs-pi",
            Identity::RAddableCorner => "r-addable-corner",
            Identity::REqualRowsVanish => "r-equal-rows-vanish",
            Identity::ETimesLongestPi => "e-times-longest-pi",
            Identity::RExpansion => "r-e-expansion",
            Identity::MonomialTimesH => "monomial-times-h",
            Identity::PAbsorbsPi => "p-absorbs-pi",
            Identity::EPiInterval => "e-pi-interval",
            Identity::PExpansion => "p-e-expansion",
        }
    }

    fn sample(self, rng: &mut ChaCha8Rng) -> Instance {
        match self {
            Identity::KeyReorder => key_reorder(rng),
            Identity::MonomialTimesE => monomial_times_e(rng),
            Identity::RAbsorbsPi => r_absorbs_pi(rng),
            Identity::RAddableCorner => r_addable_corner(rng),
            Identity::REqualRowsVanish => r_equal_rows_vanish(rng),
            Identity::ETimesLongestPi => e_times_longest_pi(rng),
            Identity::RExpansion => r_e_expansion(rng),
            Identity::MonomialTimesH => monomial_times_h(rng),
            Identity::PAbsorbsPi => p_absorbs_pi(rng),
            Identity::EPiInterval => e_pi_interval(rng),
            Identity::PExpansion => p_e_expansion(rng),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL.into_iter().find(|i| i.id() == s).ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One concrete instance: a description and both sides.
struct Instance {
    description: String,
    lhs: Poly,
    rhs: Poly,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub seed: u64,
    pub instances: usize,
    /// Instances whose left side is not zero.
    pub nontrivial: usize,
    /// Descriptions of the failing instances.
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `count` random instances of `identity`. Instance k uses a ChaCha8
/// stream seeded with `seed + k`, so any failure can be replayed on its own.
pub fn check_identity(identity: Identity, seed: u64, count: usize) -> IdentityReport {
    let outcomes: Vec<(bool, Option<String>)> = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let inst = identity.sample(&mut rng);
            let failure = (inst.lhs != inst.rhs)
                .then(|| format!("#{k}: {} (lhs = {}, rhs = {})", inst.description, inst.lhs, inst.rhs));
            (!inst.lhs.is_zero(), failure)
        })
        .collect();
    IdentityReport {
        identity,
        seed,
        instances: count,
        nontrivial: outcomes.iter().filter(|(nz, _)| *nz).count(),
        failures: outcomes.into_iter().filter_map(|(_, f)| f).collect(),
    }
}

// ---------------------------------------------------------------- helpers

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    while p.is_zero() {
        for _ in 0..rng.random_range(1..=3) {
            let deg = rng.random_range(0..=3);
            let mut e = vec![0usize; nvars];
            for _ in 0..deg {
                e[rng.random_range(0..nvars)] += 1;
            }
            let c = rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 };
            p.add_assign(&Poly::monomial(&e).scale(&Coefficient::from_int(c)));
        }
    }
    p
}

/// A random m-subset of {1..N}, sorted.
fn random_rows(rng: &mut ChaCha8Rng, nvars: usize, m: usize) -> Vec<usize> {
    let all: Vec<usize> = (1..=nvars).collect();
    let mut v: Vec<usize> = all.choose_multiple(rng, m).copied().collect();
    v.sort_unstable();
    v
}

fn random_partition(rng: &mut ChaCha8Rng, max_size: usize, max_len: usize) -> Partition {
    let size = rng.random_range(0..=max_size);
    let choices: Vec<Partition> = Partition::all(size).into_iter().filter(|p| p.len() <= max_len).collect();
    choices.choose(rng).cloned().unwrap_or_else(Partition::empty)
}

fn random_superpartition(rng: &mut ChaCha8Rng, max_vars: usize) -> SuperPartition {
    loop {
        let m = rng.random_range(0..=MAX_M);
        let n = rng.random_range(m * m.saturating_sub(1) / 2..=MAX_DEGREE);
        let choices: Vec<SuperPartition> =
            SuperPartition::all(n, m).into_iter().filter(|l| l.num_rows() <= max_vars).collect();
        if let Some(l) = choices.choose(rng) {
            return l.clone();
        }
    }
}

/// e_k in the variables {1..N} minus `skip`; zero when k < 0.
fn e_without(nvars: usize, skip: &[usize], k: isize) -> Poly {
    if k < 0 {
        return Poly::zero(nvars);
    }
    let vars: Vec<usize> = (1..=nvars).filter(|v| !skip.contains(v)).collect();
    Poly::elementary(nvars, &vars, k as usize)
}

/// e_k(x_1..x_j); zero when k < 0.
fn e_first(nvars: usize, j: usize, k: isize) -> Poly {
    if k < 0 {
        return Poly::zero(nvars);
    }
    let vars: Vec<usize> = (1..=j).collect();
    Poly::elementary(nvars, &vars, k as usize)
}

/// 𝛑_{i,[a,b]} = π_[b−i,b−1] ⋯ π_[a+1,a+i] π_[a,a+i−1].
fn bold_pi(i: usize, a: usize, b: usize) -> OperatorWord {
    let mut w = OperatorWord::identity();
    if i == 0 || i > b - a {
        return w;
    }
    for k in (0..=b - a - i).rev() {
        w = w.then(&OperatorWord::pi_up(a + k, a + k + i - 1));
    }
    w
}

/// x_a ⋯ x_{a+i−1}.
fn block_monomial(nvars: usize, i: usize, a: usize) -> Poly {
    let mut e = vec![0; nvars];
    for v in e.iter_mut().skip(a - 1).take(i) {
        *v = 1;
    }
    Poly::monomial(&e)
}

/// Maximal intervals of rows 1..N on which the padded partition is constant.
fn equal_blocks(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 1;
    for r in 1..=parts.len() {
        if r == parts.len() || parts[r] != parts[r - 1] {
            out.push((start, r));
            start = r + 1;
        }
    }
    out
}

/// Inserts r into the sorted list, returning the new list and the number of
/// entries below r.
fn insert_row(alphas: &[usize], r: usize) -> (Vec<usize>, usize) {
    let pos = alphas.iter().filter(|&&a| a < r).count();
    let mut v = alphas.to_vec();
    v.insert(pos, r);
    (v, pos)
}

fn signed(p: Poly, negative: bool) -> Poly {
    if negative {
        p.scale(&(-1).into())
    } else {
        p
    }
}

// ---------------------------------------------------------------- instances

fn key_reorder(rng: &mut ChaCha8Rng) -> Instance {
    let l = random_superpartition(rng, MAX_VARS);
    let nvars = rng.random_range(l.num_rows().max(1)..=MAX_VARS);
    Instance {
        description: format!("Λ={l}, N={nvars}"),
        lhs: key(&composition_sa(&l, nvars)),
        rhs: r_word(nvars, l.circle_rows()).apply(&star_monomial(&l, nvars)),
    }
}

fn monomial_times_e(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(1..=MAX_VARS);
    let mu = random_partition(rng, 4, nvars);
    let ell = rng.random_range(0..=(MAX_DEGREE - mu.size()).min(nvars));
    let parts = mu.padded(nvars);
    let x = Poly::monomial(&parts);
    let lhs = x.mul(&e_without(nvars, &[], ell as isize));
    let blocks = equal_blocks(&parts);
    let mut rhs = Poly::zero(nvars);
    // all (i_1..i_k) with 0 ≤ i_j ≤ |I_j| summing to ℓ
    let mut choice = vec![0usize; blocks.len()];
    fn rec(
        j: usize,
        left: usize,
        blocks: &[(usize, usize)],
        choice: &mut Vec<usize>,
        x: &Poly,
        nvars: usize,
        rhs: &mut Poly,
    ) {
        if j == blocks.len() {
            if left == 0 {
                let mut word = OperatorWord::identity();
                let mut p = x.clone();
                for (&(a, b), &i) in blocks.iter().zip(choice.iter()) {
                    word = word.then(&bold_pi(i, a, b));
                    p = p.mul(&block_monomial(nvars, i, a));
                }
                rhs.add_assign(&word.apply(&p));
            }
            return;
        }
        let (a, b) = blocks[j];
        for i in 0..=(b + 1 - a).min(left) {
            choice[j] = i;
            rec(j + 1, left - i, blocks, choice, x, nvars, rhs);
        }
        choice[j] = 0;
    }
    rec(0, ell, &blocks, &mut choice, &x, nvars, &mut rhs);
    Instance { description: format!("Λ*={mu}, ℓ={ell}, N={nvars}"), lhs, rhs }
}

fn r_absorbs_pi(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let nvars = rng.random_range(2..=MAX_VARS);
        let m = rng.random_range(1..=MAX_M.min(nvars - 1));
        let alphas = random_rows(rng, nvars, m);
        let f = random_poly(rng, nvars);
        let r = r_word(nvars, &alphas);
        if rng.random_bool(0.5) {
            let i = rng.random_range(0..m);
            if alphas[i] < 2 {
                continue;
            }
            let beta = alphas[i] - 1;
            let mut moved = alphas.clone();
            moved[i] = beta;
            return Instance {
                description: format!("rule 1, N={nvars}, α={alphas:?}, i={}, f={f}", i + 1),
                lhs: r.apply(&super::pi(&f, beta)),
                rhs: r_word(nvars, &moved).apply(&f),
            };
        }
        let free: Vec<usize> = (1..nvars).filter(|b| !alphas.iter().any(|&a| a == b + 1)).collect();
        let Some(&beta) = free.choose(rng) else { continue };
        return Instance {
            description: format!("rule 2, N={nvars}, α={alphas:?}, β={beta}, f={f}"),
            lhs: r.apply(&super::pi(&f, beta)),
            rhs: r.apply(&f),
        };
    }
}

fn r_addable_corner(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let nvars = rng.random_range(2..=MAX_VARS);
        let m = rng.random_range(1..=MAX_M.min(nvars - 1));
        let mu = random_partition(rng, MAX_DEGREE, nvars).padded(nvars);
        let alphas = random_rows(rng, nvars, m);
        let stuck: Vec<usize> = (0..m).filter(|&i| alphas[i] >= 2 && mu[alphas[i] - 1] == mu[alphas[i] - 2]).collect();
        let Some(&i) = stuck.choose(rng) else { continue };
        let mut top = alphas[i];
        while top > 1 && mu[top - 2] == mu[top - 1] {
            top -= 1;
        }
        let mut moved = alphas.clone();
        moved[i] = top;
        let x = Poly::monomial(&mu);
        return Instance {
            description: format!("N={nvars}, μ={mu:?}, α={alphas:?}, row {} → {top}", alphas[i]),
            lhs: r_word(nvars, &alphas).apply(&x),
            rhs: r_word(nvars, &moved).apply(&x),
        };
    }
}

fn r_equal_rows_vanish(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(3..=MAX_VARS);
    let m = rng.random_range(2..=MAX_M.min(nvars - 1));
    let mut alphas = random_rows(rng, nvars, m - 1);
    let dup = *alphas.choose(rng).expect("nonempty");
    // α_i must not exceed N−m+i for the factors to be well defined
    alphas.push(dup);
    alphas.sort_unstable();
    let v = nvars - m;
    if alphas.iter().enumerate().any(|(i, &a)| a > v + i + 1) {
        return r_equal_rows_vanish(rng);
    }
    let f = random_poly(rng, nvars);
    let lhs = OperatorWord::partial_longest(v + 1, nvars).then(&r_word(nvars, &alphas)).apply(&f);
    Instance { description: format!("N={nvars}, α={alphas:?}, f={f}"), lhs, rhs: Poly::zero(nvars) }
}

fn e_times_longest_pi(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(1..=MAX_VARS);
    let v = rng.random_range(1..=nvars);
    let ell = rng.random_range(0..=nvars.min(3));
    let f = random_poly(rng, nvars);
    let lhs = e_without(nvars, &[v], ell as isize).mul(&OperatorWord::pi_longest(1, v).apply(&f));
    let mut rhs = Poly::zero(nvars);
    for j in 1..=v {
        let skip: Vec<usize> = (1..=j).collect();
        let coeff = prefix_monomial(nvars, j - 1).mul(&e_without(nvars, &skip, ell as isize - j as isize + 1));
        let word = OperatorWord::pi_longest(1, v - 1).then(&OperatorWord::pi_down(v - 1, j));
        rhs.add_assign(&word.apply(&coeff.mul(&f)));
    }
    Instance { description: format!("N={nvars}, v={v}, ℓ={ell}, f={f}"), lhs, rhs }
}

fn r_e_expansion(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(2..=MAX_VARS);
    let m = rng.random_range(0..=MAX_M.min(nvars - 1));
    let v = nvars - m;
    let alphas = random_rows(rng, nvars, m);
    let ell = rng.random_range(0..=3i64) as isize;
    let f = random_poly(rng, nvars);
    let outer = OperatorWord::partial_longest(v, nvars);
    let lhs = outer.apply(&e_without(nvars, &[v], ell).mul(&r_word(nvars, &alphas).apply(&f)));
    let mut inner = Poly::zero(nvars);
    for r in (1..=nvars).filter(|r| !alphas.contains(r)) {
        let (bigger, pos) = insert_row(&alphas, r);
        let skip: Vec<usize> = (1..=r).collect();
        let coeff = prefix_monomial(nvars, r - 1).mul(&e_without(nvars, &skip, ell - r as isize + 1));
        inner.add_assign(&signed(r_word(nvars, &bigger).apply(&coeff.mul(&f)), pos % 2 == 1));
    }
    Instance { description: format!("N={nvars}, α={alphas:?}, ℓ={ell}, f={f}"), lhs, rhs: outer.apply(&inner) }
}

fn monomial_times_h(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(1..=MAX_VARS);
    let lambda = random_partition(rng, 4, nvars);
    let k = rng.random_range(0..=MAX_DEGREE - lambda.size());
    let lam = lambda.padded(nvars);
    let all: Vec<usize> = (1..=nvars).collect();
    let lhs = Poly::monomial(&lam).mul(&Poly::complete(nvars, &all, k));
    let mut rhs = Poly::zero(nvars);
    for mu in lambda.strips(k, StripKind::Horizontal) {
        if mu.len() > nvars {
            continue;
        }
        let mu = mu.padded(nvars);
        let mut word = OperatorWord::identity();
        for i in (1..nvars).rev() {
            if mu[i] == lam[i - 1] {
                word.push(super::Op::Pi(i));
            }
        }
        rhs.add_assign(&word.apply(&Poly::monomial(&mu)));
    }
    Instance { description: format!("λ={lambda}, k={k}, N={nvars}"), lhs, rhs }
}

fn p_absorbs_pi(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let nvars = rng.random_range(2..=MAX_VARS);
        let m = rng.random_range(1..=MAX_M.min(nvars - 1));
        let alphas = random_rows(rng, nvars, m);
        let f = random_poly(rng, nvars);
        let p = p_word(nvars, &alphas);
        let rule = rng.random_range(1..=5);
        let i = rng.random_range(0..m);
        let a = alphas[i];
        let next = alphas.get(i + 1).copied().unwrap_or(nvars + 1);
        let desc = |extra: String| format!("rule {rule}, N={nvars}, α={alphas:?}, {extra}, f={f}");
        match rule {
            1 => {
                // also holds when row α_i+1 carries a circle
                if a >= nvars {
                    continue;
                }
                let mut moved = alphas.clone();
                moved[i] = a + 1;
                return Instance {
                    description: desc(format!("i={}", i + 1)),
                    lhs: p.apply(&super::pi(&f, a)),
                    rhs: p.apply(&f).add(&p_word(nvars, &moved).apply(&f)),
                };
            }
            2 => {
                if a < 2 {
                    continue;
                }
                return Instance {
                    description: desc(format!("i={}", i + 1)),
                    lhs: p.apply(&super::pi(&f, a - 1)),
                    rhs: Poly::zero(nvars),
                };
            }
            3 => {
                let free: Vec<usize> =
                    (1..nvars).filter(|b| !alphas.contains(b) && !alphas.contains(&(b + 1))).collect();
                let Some(&beta) = free.choose(rng) else { continue };
                return Instance {
                    description: desc(format!("β={beta}")),
                    lhs: p.apply(&super::pi(&f, beta)),
                    rhs: p.apply(&f),
                };
            }
            4 => {
                // I = [α_i, b] with no other circle inside, and 1 ≤ i_j < |I|
                let b = rng.random_range(a..next.min(nvars + 1));
                let len = b + 1 - a;
                if len < 2 {
                    continue;
                }
                let ij = rng.random_range(1..len);
                let mut moved = alphas.clone();
                moved[i] = a + ij;
                return Instance {
                    description: desc(format!("I=[{a},{b}], i_j={ij}")),
                    lhs: p.clone().then(&bold_pi(ij, a, b)).apply(&f),
                    rhs: p.apply(&f).add(&p_word(nvars, &moved).apply(&f)),
                };
            }
            _ => {
                // I = [β, b] with β ∉ α and no circle inside I
                let starts: Vec<usize> = (1..=nvars).filter(|b| !alphas.contains(b)).collect();
                let Some(&beta) = starts.choose(rng) else { continue };
                let stop = alphas.iter().copied().find(|&x| x > beta).unwrap_or(nvars + 1);
                let b = rng.random_range(beta..stop);
                let ij = rng.random_range(0..=b + 1 - beta);
                return Instance {
                    description: desc(format!("I=[{beta},{b}], i_j={ij}")),
                    lhs: p.clone().then(&bold_pi(ij, beta, b)).apply(&f),
                    rhs: p.apply(&f),
                };
            }
        }
    }
}

fn e_pi_interval(rng: &mut ChaCha8Rng) -> Instance {
    let nvars = rng.random_range(2..=MAX_VARS);
    let m = rng.random_range(0..=MAX_M.min(nvars - 1));
    let ell = rng.random_range(0..=3i64) as isize;
    let f = random_poly(rng, nvars);
    let outer = OperatorWord::partial_longest(1, m + 1).then(&OperatorWord::pi_longest(m + 2, nvars));
    let lhs = outer.apply(&e_without(nvars, &[m + 1], ell).mul(&OperatorWord::pi_up(m + 1, nvars - 1).apply(&f)));
    let mut inner = Poly::zero(nvars);
    for i in 1..=nvars - m {
        let term = OperatorWord::pihat_up(m + 1, m + i - 1).apply(&e_first(nvars, m + i - 1, ell).mul(&f));
        inner.add_assign(&term);
    }
    Instance { description: format!("N={nvars}, m={m}, ℓ={ell}, f={f}"), lhs, rhs: outer.apply(&inner) }
}

fn p_e_expansion(rng: &mut ChaCha8Rng) -> Instance {
    let l = loop {
        let l = random_superpartition(rng, MAX_VARS);
        if l.m() < MAX_M && l.num_rows() < MAX_VARS {
            break l;
        }
    };
    let m = l.m();
    let nvars = rng.random_range(l.num_rows().max(m + 1)..=MAX_VARS);
    let ell = rng.random_range(0..=3i64) as isize;
    let alphas = l.circle_rows().to_vec();
    let x = star_monomial(&l, nvars);
    let mut tail = OperatorWord::pihat_longest(1, m);
    for (i, &a) in alphas.iter().enumerate().rev() {
        tail = tail.then(&OperatorWord::pihat_up(i + 1, a - 1));
    }
    let tx = tail.apply(&x);
    let outer = OperatorWord::partial_longest(1, m + 1).then(&OperatorWord::pi_longest(m + 2, nvars));
    let mut inner = Poly::zero(nvars);
    for j in 1..=nvars - m {
        inner.add_assign(&OperatorWord::pihat_up(m + 1, m + j - 1).apply(&e_first(nvars, m + j - 1, ell).mul(&tx)));
    }
    let lhs = outer.apply(&inner);
    let mut rhs = Poly::zero(nvars);
    for r in (1..=nvars).filter(|r| !alphas.contains(r)) {
        let (bigger, pos) = insert_row(&alphas, r);
        let term = p_word(nvars, &bigger).apply(&e_first(nvars, r - 1, ell).mul(&x));
        rhs.add_assign(&signed(term, pos % 2 == 1));
    }
    Instance { description: format!("Λ={l}, N={nvars}, ℓ={ell}"), lhs, rhs }
}

// ---------------------------------------------------------------- large limit

#[derive(Clone, Debug, Serialize)]
pub struct LargeLimitReport {
    pub cases: usize,
    /// Cases where the s_Λ image differs from s_λ(x_1..x_m) s_μ(x_{m+1}..x_N).
    pub s_failures: Vec<String>,
    /// Cases where the s̄_Λ image differs from s_λ(x_1..x_N) s_μ(x_{m+1}..x_N).
    pub sbar_failures: Vec<String>,
}

impl LargeLimitReport {
    pub fn passed(&self) -> bool {
        self.s_failures.is_empty() && self.sbar_failures.is_empty()
    }
}

/// s_λ in the variables x_{offset+1}..x_{offset+k} of an `nvars`-variable ring.
fn schur_in(lambda: &Partition, k: usize, offset: usize, nvars: usize) -> Poly {
    if lambda.len() > k {
        return Poly::zero(nvars);
    }
    let mut eta = lambda.padded(k);
    eta.reverse();
    key(&super::Composition(eta)).embed(nvars, offset)
}

/// Checks the large m, N limit for every (λ, μ) with |λ|+|μ| ≤ `max_size`,
/// at m = N − m = max(|λ|+|μ|, 1).
pub fn large_limit_check(max_size: usize) -> LargeLimitReport {
    let mut pairs = Vec::new();
    for total in 0..=max_size {
        for a in 0..=total {
            for lambda in Partition::all(a) {
                for mu in Partition::all(total - a) {
                    pairs.push((lambda.clone(), mu));
                }
            }
        }
    }
    let results: Vec<(Option<String>, Option<String>)> = pairs
        .par_iter()
        .map(|(lambda, mu)| {
            let k = (lambda.size() + mu.size()).max(1);
            let (m, nvars) = (k, 2 * k);
            let a: Vec<usize> = (0..m).map(|i| lambda.row(i + 1) + (m - 1 - i)).collect();
            let l = SuperPartition::new(a, mu.clone()).expect("λ + δ is strictly decreasing");
            let desc = format!("λ={lambda}, μ={mu}, Λ={l}, m={m}, N={nvars}");
            let smu = schur_in(mu, nvars - m, m, nvars);
            let s_want = schur_in(lambda, m, 0, nvars).mul(&smu);
            let s_got = schur_rep(&l, nvars).expect("enough variables");
            let sbar_want = schur_in(lambda, nvars, 0, nvars).mul(&smu);
            let sbar_got = sbar_rep(&l, nvars).expect("enough variables");
            ((s_got != s_want).then(|| desc.clone()), (sbar_got != sbar_want).then_some(desc))
        })
        .collect();
    let (s_failures, sbar_failures) = results.into_iter().fold((vec![], vec![]), |(mut a, mut b), (x, y)| {
        a.extend(x);
        b.extend(y);
        (a, b)
    });
    LargeLimitReport { cases: pairs.len(), s_failures, sbar_failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_instances() {
        // x^λ h_2 with λ = (2,1), N = 3
        let lam = [2, 1, 0];
        let lhs = Poly::monomial(&lam).mul(&Poly::complete(3, &[1, 2, 3], 2));
        let mut rhs = Poly::zero(3);
        for mu in Partition::new(vec![2, 1]).unwrap().strips(2, StripKind::Horizontal) {
            if mu.len() > 3 {
                continue;
            }
            let mu = mu.padded(3);
            let mut word = OperatorWord::identity();
            for i in (1..3).rev() {
                if mu[i] == lam[i - 1] {
                    word.push(super::super::Op::Pi(i));
                }
            }
            rhs.add_assign(&word.apply(&Poly::monomial(&mu)));
        }
        assert_eq!(lhs, rhs);

        // 𝒫 π_{α_i−1} = 0 for N = 5, α = [2, 4]
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let f = random_poly(&mut rng, 5);
            for beta in [1, 3] {
                assert!(p_word(5, &[2, 4]).apply(&super::super::pi(&f, beta)).is_zero());
            }
        }
    }

    #[test]
    fn bold_pi_is_trivial_on_full_blocks() {
        assert!(bold_pi(3, 2, 4).is_empty());
        assert_eq!(bold_pi(1, 1, 2).len(), 1);
        assert_eq!(equal_blocks(&[3, 3, 1, 0, 0]), vec![(1, 2), (3, 3), (4, 5)]);
    }

    #[test]
    fn identity_ids_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.id().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().is_err());
    }

    #[test]
    fn large_limit_holds() {
        let report = large_limit_check(3);
        assert_eq!(report.cases, 18);
        assert!(report.passed(), "{report:#?}");
    }

    #[test]
    fn battery_passes() {
        for id in Identity::ALL {
            let report = check_identity(id, 42, 25);
            assert!(report.passed(), "{id}: {:#?}", report.failures);
            println!("{id}: {} of 25 nonzero", report.nontrivial);
        }
    }
}
