//! The Cauchy identity Π_{i,j}(1 + x_i y_j + θ_i φ_j) = Σ_Λ s_Λ(x,θ) s̄_{Λ′}(y,φ).
//!
//! Both sides live in one ring with x_1..x_{N_x}, y_1..y_{N_y} as variables
//! 1..N_x+N_y, and θ_i, φ_j as the matching odd variables. Every θ comes
//! before every φ in the normal order; s̄_{Λ′}(y,φ) is built with the φ's in
//! increasing order and multiplied on the right of s_Λ(x,θ).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bases::{realize, Basis};
use crate::coeff::Coefficient;
use crate::superpartition::SuperPartition;
use crate::superpoly::{SuperMonomial, SuperPolynomial};

/// Comparison of one bihomogeneous piece: x-degree n, θ-degree m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchySlice {
    pub n: usize,
    pub m: usize,
    pub terms: usize,
    pub holds: bool,
}

type Slices = BTreeMap<(usize, usize), SuperPolynomial>;

fn slice(p: &SuperPolynomial, nx: usize, max_degree: usize, max_m: usize) -> Slices {
    let mut out: Slices = BTreeMap::new();
    for (mono, c) in p.terms() {
        let n: usize = mono.x[..nx].iter().map(|&e| e as usize).sum();
        let m = mono.thetas.indices().iter().filter(|&&i| i <= nx).count();
        if n <= max_degree && m <= max_m {
            out.entry((n, m)).or_insert_with(|| SuperPolynomial::zero(p.nvars())).add_term(mono.clone(), c.clone());
        }
    }
    out
}

/// The product side, truncated to x-degree ≤ `max_degree`.
pub fn cauchy_product(max_degree: usize, nx: usize, ny: usize) -> SuperPolynomial {
    let nv = nx + ny;
    let mut acc = SuperPolynomial::one(nv);
    for i in 1..=nx {
        for j in 1..=ny {
            let mut factor = SuperPolynomial::one(nv);
            let mut x = vec![0; nv];
            x[i - 1] = 1;
            x[nx + j - 1] = 1;
            factor.add_assign(&SuperPolynomial::term(&x, &[], Coefficient::one()));
            factor.add_assign(&SuperPolynomial::term(&vec![0; nv], &[i, nx + j], Coefficient::one()));
            acc = truncate(&acc.mul(&factor), nx, max_degree);
        }
    }
    acc
}

fn truncate(p: &SuperPolynomial, nx: usize, max_degree: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(p.nvars());
    for (mono, c) in p.terms() {
        if mono.x[..nx].iter().map(|&e| e as usize).sum::<usize>() <= max_degree {
            out.add_term(SuperMonomial { x: mono.x.clone(), thetas: mono.thetas }, c.clone());
        }
    }
    out
}

/// The sum side over all Λ with |Λ^*| ≤ `max_degree` and m ≤ `max_m`.
pub fn cauchy_sum(max_degree: usize, nx: usize, ny: usize, max_m: usize) -> SuperPolynomial {
    let nv = nx + ny;
    let mut acc = SuperPolynomial::zero(nv);
    for n in 0..=max_degree {
        for m in 0..=max_m {
            for lambda in SuperPartition::all(n, m) {
                let left = realize(&lambda, Basis::S, nx);
                if left.is_zero() {
                    continue;
                }
                let right = realize(&lambda.conjugate(), Basis::SBar, ny);
                acc.add_assign(&left.embed(nv, 0).mul(&right.embed(nv, nx)));
            }
        }
    }
    acc
}

/// Compares both sides piece by piece, for x-degree ≤ `max_degree` and
/// fermionic degree ≤ min(N_x, N_y).
pub fn cauchy_slices(max_degree: usize, nx: usize, ny: usize) -> Vec<CauchySlice> {
    let max_m = nx.min(ny);
    let lhs = slice(&cauchy_product(max_degree, nx, ny), nx, max_degree, max_m);
    let rhs = slice(&cauchy_sum(max_degree, nx, ny, max_m), nx, max_degree, max_m);
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for m in 0..=max_m {
            let zero = SuperPolynomial::zero(nx + ny);
            let l = lhs.get(&(n, m)).unwrap_or(&zero);
            let r = rhs.get(&(n, m)).unwrap_or(&zero);
            out.push(CauchySlice { n, m, terms: l.len(), holds: l == r });
        }
    }
    out
}

pub fn cauchy_check(max_degree: usize, nx: usize, ny: usize) -> bool {
    cauchy_slices(max_degree, nx, ny).iter().all(|s| s.holds)
}
