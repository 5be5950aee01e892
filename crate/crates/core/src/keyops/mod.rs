//! Divided differences, Key polynomials, and the Key-polynomial construction
//! of s_Λ and s̄_Λ.

mod identities;
mod ops;

pub use identities::{check_identity, large_limit_check, Identity, IdentityReport, LargeLimitReport};
pub use ops::{key, key_hat, key_random_schedule, partial, pi, pihat, prefix_monomial, Composition, Op, OperatorWord};

use crate::error::{Error, Result};
use crate::superpartition::SuperPartition;
use crate::superpoly::{reconstruct, Poly, SuperPolynomial};

/// ℛ_{N,[α]} = π_{ω_{N−m}} π_(N−m,α_1) π_(N−m+1,α_2) ⋯ π_(N−1,α_m).
///
/// The α's need not be distinct, so that the vanishing on repeated rows
/// can be tested.
pub fn r_word(nvars: usize, alphas: &[usize]) -> OperatorWord {
    let m = alphas.len();
    assert!(m <= nvars);
    let v = nvars - m;
    let mut w = OperatorWord::pi_longest(1, v);
    for (i, &a) in alphas.iter().enumerate() {
        w = w.then(&OperatorWord::pi_down(v + i, a));
    }
    w
}

/// 𝒫_{N,[α]} = ∂_{ω_m} π_{ω_{m^c}} π̂_{ω_m} π̂_[m,α_m−1] ⋯ π̂_[1,α_1−1].
pub fn p_word(nvars: usize, alphas: &[usize]) -> OperatorWord {
    let m = alphas.len();
    assert!(m <= nvars);
    let mut w = OperatorWord::partial_longest(1, m)
        .then(&OperatorWord::pi_longest(m + 1, nvars))
        .then(&OperatorWord::pihat_longest(1, m));
    for (i, &a) in alphas.iter().enumerate().rev() {
        w = w.then(&OperatorWord::pihat_up(i + 1, a.saturating_sub(1)));
    }
    w
}

pub fn apply_r(nvars: usize, alphas: &[usize], p: &Poly) -> Poly {
    r_word(nvars, alphas).apply(p)
}

pub fn apply_p(nvars: usize, alphas: &[usize], p: &Poly) -> Poly {
    p_word(nvars, alphas).apply(p)
}

/// x^{Λ^*} in `nvars` variables.
pub fn star_monomial(lambda: &SuperPartition, nvars: usize) -> Poly {
    Poly::monomial(&lambda.star().padded(nvars))
}

fn check_rows(lambda: &SuperPartition, nvars: usize) -> Result<()> {
    let needed = lambda.num_rows();
    if nvars < needed {
        Err(Error::TooFewVariables { needed, available: nvars })
    } else {
        Ok(())
    }
}

fn binom2_sign(m: usize) -> bool {
    (m * m.saturating_sub(1) / 2) % 2 == 1
}

/// The composition ((Λ^a)^R, Λ^s) of length N.
pub fn composition_as(lambda: &SuperPartition, nvars: usize) -> Composition {
    let mut eta: Vec<usize> = lambda.fermionic().iter().rev().copied().collect();
    eta.extend(lambda.bosonic().padded(nvars - lambda.m()));
    Composition(eta)
}

/// The composition ((Λ^s)^R, Λ^a) of length N.
pub fn composition_sa(lambda: &SuperPartition, nvars: usize) -> Composition {
    let mut eta: Vec<usize> = lambda.bosonic().padded(nvars - lambda.m());
    eta.reverse();
    eta.extend_from_slice(lambda.fermionic());
    Composition(eta)
}

/// Bisymmetric image of s_Λ: (−1)^{C(m,2)} ∂_{ω_m} π_{ω_{m^c}} K̂_{(Λ^a)^R,Λ^s}.
pub fn schur_rep(lambda: &SuperPartition, nvars: usize) -> Result<Poly> {
    check_rows(lambda, nvars)?;
    let m = lambda.m();
    let k = key_hat(&composition_as(lambda, nvars));
    let w = OperatorWord::partial_longest(1, m).then(&OperatorWord::pi_longest(m + 1, nvars));
    let f = w.apply(&k);
    Ok(if binom2_sign(m) { f.scale(&(-1).into()) } else { f })
}

/// Bisymmetric image of s̄_Λ: ∂'_{ω_{(N−m)^c}} K_{(Λ^s)^R,Λ^a}(y) with
/// y_i = x_{N+1−i}.
pub fn sbar_rep(lambda: &SuperPartition, nvars: usize) -> Result<Poly> {
    check_rows(lambda, nvars)?;
    let m = lambda.m();
    let k = key(&composition_sa(lambda, nvars));
    let f = OperatorWord::partial_longest(nvars - m + 1, nvars).apply(&k);
    Ok(f.reverse_vars())
}

/// s_Λ(x, θ) in N variables, built from its bisymmetric image.
pub fn schur_oracle(lambda: &SuperPartition, nvars: usize) -> Result<SuperPolynomial> {
    reconstruct(&schur_rep(lambda, nvars)?, lambda.m(), nvars)
}

/// s̄_Λ(x, θ) in N variables.
pub fn sbar_oracle(lambda: &SuperPartition, nvars: usize) -> Result<SuperPolynomial> {
    reconstruct(&sbar_rep(lambda, nvars)?, lambda.m(), nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpartition::sp;
    use crate::Coefficient;

    /// Coefficient of m_Ω in the superpolynomial whose bisymmetric image is
    /// `rep`: the coefficient of θ_1⋯θ_m x^{(Ω^a,Ω^s)}.
    fn m_coeff(rep: &Poly, omega: &SuperPartition) -> Coefficient {
        let n = rep.nvars();
        let full = rep.mul(&crate::superpoly::vandermonde(n, omega.m()));
        let mut e: Vec<usize> = omega.fermionic().to_vec();
        e.extend(omega.bosonic().padded(n - omega.m()));
        full.coeff(&e.iter().map(|&v| v as u8).collect::<Vec<_>>())
    }

    fn expansion(rep: &Poly, lambda: &SuperPartition) -> Vec<(SuperPartition, i64)> {
        let (n, m) = lambda.degree();
        SuperPartition::all(n, m)
            .into_iter()
            .filter_map(|o| {
                let c = m_coeff(rep, &o);
                (!c.is_zero()).then(|| (o, c.to_i64().unwrap()))
            })
            .collect()
    }

    #[test]
    fn schur_example_expansion() {
        let l = sp("3,1;2,1,1");
        let rep = schur_rep(&l, SuperPartition::max_rows(8, 2)).unwrap();
        let got = expansion(&rep, &l);
        let mut want = vec![(sp("3,1;1,1,1,1"), 3), (sp("3,1;2,1,1"), 1)];
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sbar_example_expansion() {
        let l = sp("2,0;3");
        let rep = sbar_rep(&l, SuperPartition::max_rows(5, 2)).unwrap();
        let mut got = expansion(&rep, &l);
        got.sort();
        let mut want = vec![
            (sp("1,0;1,1,1,1"), 3),
            (sp("1,0;2,1,1"), 2),
            (sp("1,0;2,2"), 1),
            (sp("1,0;3,1"), 1),
            (sp("2,0;1,1,1"), 1),
            (sp("2,0;2,1"), 1),
            (sp("2,0;3"), 1),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn oracle_small_cases() {
        let s = schur_oracle(&sp("0;"), 3).unwrap();
        let mut want = SuperPolynomial::zero(3);
        for i in 1..=3 {
            want.add_assign(&SuperPolynomial::theta(3, i));
        }
        assert_eq!(s, want);
        // classical: s_{(∅;2)} in three variables is h_2
        let rep = schur_rep(&sp(";2"), 3).unwrap();
        assert_eq!(rep, Poly::complete(3, &[1, 2, 3], 2));
        assert_eq!(sbar_rep(&sp(";2"), 3).unwrap(), rep);
        assert!(schur_rep(&sp("2,1,0;1"), 3).is_err());
    }

    #[test]
    fn oracles_are_invariant_with_unit_leading_term() {
        for (n, m) in [(3, 1), (3, 2), (4, 2)] {
            let nv = SuperPartition::max_rows(n, m);
            for l in SuperPartition::all(n, m) {
                for rep in [schur_rep(&l, nv).unwrap(), sbar_rep(&l, nv).unwrap()] {
                    assert!(rep.is_symmetric_in(1, m) && rep.is_symmetric_in(m + 1, nv), "{l}");
                    assert_eq!(m_coeff(&rep, &l), Coefficient::one(), "{l}");
                    for o in SuperPartition::all(n, m) {
                        if !m_coeff(&rep, &o).is_zero() {
                            assert!(o.dominance_leq(&l), "{o} in expansion of {l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_is_stable_in_the_number_of_variables() {
        for (n, m) in [(2, 1), (3, 1), (4, 2), (3, 0)] {
            let nv = SuperPartition::max_rows(n, m);
            for l in SuperPartition::all(n, m) {
                let a = schur_oracle(&l, nv).unwrap();
                let b = schur_oracle(&l, nv + 1).unwrap();
                // restrict b to monomials avoiding x_{N+1} and θ_{N+1}
                let mut restricted = SuperPolynomial::zero(nv);
                for (mono, c) in b.terms() {
                    if mono.x[nv] == 0 && !mono.thetas.indices().contains(&(nv + 1)) {
                        let x: Vec<usize> = mono.x[..nv].iter().map(|&v| v as usize).collect();
                        restricted.add_assign(&SuperPolynomial::term(&x, &mono.thetas.indices(), c.clone()));
                    }
                }
                assert_eq!(restricted, a, "{l}");
                assert!(a.is_diagonal_invariant());
            }
        }
    }

    #[test]
    fn r_and_p_reproduce_the_keys() {
        for (n, m) in [(3, 1), (4, 2), (5, 2), (4, 3)] {
            let nv = SuperPartition::max_rows(n, m);
            for l in SuperPartition::all(n, m) {
                let x = star_monomial(&l, nv);
                assert_eq!(apply_r(nv, l.circle_rows(), &x), key(&composition_sa(&l, nv)), "{l}");
                let lhs = OperatorWord::partial_longest(1, m)
                    .then(&OperatorWord::pi_longest(m + 1, nv))
                    .apply(&key_hat(&composition_as(&l, nv)));
                assert_eq!(apply_p(nv, l.circle_rows(), &x), lhs, "{l}");
            }
        }
        // with no circles ℛ is the full symmetrizer
        let s21 = apply_r(3, &[], &Poly::monomial(&[2, 1, 0]));
        assert_eq!(s21, key(&Composition(vec![0, 1, 2])));
    }
}
