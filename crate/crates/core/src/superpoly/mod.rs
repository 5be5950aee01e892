//! Polynomials in commuting x_1..x_N and anticommuting θ_1..θ_N.

mod perm;
mod poly;

pub use perm::Permutation;
pub use poly::{Exponents, Poly};

use std::collections::HashMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use poly::{fmt_monomial, to_u8};

/// A normal-ordered product of distinct θ's, stored as a bit set
/// (bit i-1 for θ_i).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct ThetaSet(u64);

impl ThetaSet {
    pub const EMPTY: ThetaSet = ThetaSet(0);

    pub fn from_indices(idx: &[usize]) -> Option<(ThetaSet, i8)> {
        let (sorted, sign) = normal_order(idx)?;
        Some((ThetaSet(sorted.iter().fold(0, |acc, &i| acc | 1 << (i - 1))), sign))
    }

    /// θ_1⋯θ_m.
    pub fn first(m: usize) -> ThetaSet {
        ThetaSet(if m == 0 { 0 } else { u64::MAX >> (64 - m) })
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// θ_self · θ_other, normal-ordered: `None` if they share an index.
    pub fn wedge(self, other: ThetaSet) -> Option<(ThetaSet, i8)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // each θ of `other` must move left past the θ's of `self` with a
        // larger index
        let mut swaps = 0u32;
        let mut o = other.0;
        while o != 0 {
            let b = o.trailing_zeros();
            swaps += (self.0 >> b).count_ones();
            o &= o - 1;
        }
        Some((ThetaSet(self.0 | other.0), if swaps.is_multiple_of(2) { 1 } else { -1 }))
    }

    pub fn bits(&self) -> u64 {
        self.0
    }
}

/// Sorts θ indices, returning the sign of the sorting permutation, or `None`
/// when an index repeats (the product vanishes).
pub fn normal_order(idx: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = idx.to_vec();
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                _ => {}
            }
        }
    }
    v.sort_unstable();
    Some((v, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperMonomial {
    pub x: Exponents,
    pub thetas: ThetaSet,
}

/// How a permutation acts on a superpolynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Permute x's and θ's simultaneously.
    Diagonal,
    /// Permute the x's only.
    XOnly,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    nvars: usize,
    terms: HashMap<SuperMonomial, Coefficient>,
}

impl SuperPolynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= 64, "at most 64 variables are supported");
        SuperPolynomial { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(&Poly::one(nvars), ThetaSet::EMPTY)
    }

    /// c · θ_S · x^e for a normal-ordered set S.
    pub fn term(x: &[usize], thetas: &[usize], c: Coefficient) -> Self {
        let mut p = Self::zero(x.len());
        if let Some((set, sign)) = ThetaSet::from_indices(thetas) {
            assert!(thetas.iter().all(|&t| t >= 1 && t <= x.len()), "θ index out of range");
            let c = if sign < 0 { -c } else { c };
            p.add_term(SuperMonomial { x: x.iter().map(|&e| to_u8(e)).collect(), thetas: set }, c);
        }
        p
    }

    pub fn theta(nvars: usize, i: usize) -> Self {
        Self::term(&vec![0; nvars], &[i], Coefficient::one())
    }

    pub fn x(nvars: usize, i: usize) -> Self {
        Self::from_poly(&Poly::var(nvars, i), ThetaSet::EMPTY)
    }

    /// θ_S · f.
    pub fn from_poly(f: &Poly, thetas: ThetaSet) -> Self {
        let mut p = Self::zero(f.nvars());
        for (e, c) in f.terms() {
            p.add_term(SuperMonomial { x: e.clone(), thetas }, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &[usize], thetas: &[usize]) -> Coefficient {
        let Some((set, sign)) = ThetaSet::from_indices(thetas) else {
            return Coefficient::zero();
        };
        let key = SuperMonomial { x: x.iter().map(|&e| to_u8(e)).collect(), thetas: set };
        let c = self.terms.get(&key).cloned().unwrap_or_default();
        if sign < 0 {
            -c
        } else {
            c
        }
    }

    pub fn add_term(&mut self, mono: SuperMonomial, c: Coefficient) {
        debug_assert_eq!(mono.x.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(mono) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let Some((set, sign)) = m1.thetas.wedge(m2.thetas) else { continue };
                let x: Exponents =
                    m1.x.iter().zip(&m2.x).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect();
                let c = c1 * c2;
                out.add_term(SuperMonomial { x, thetas: set }, if sign < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable count mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coefficient::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable count mismatch")
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, d) in &self.terms {
            out.terms.insert(m.clone(), d * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// Applies σ: x_i ↦ x_{σ(i)} (and θ_i ↦ θ_{σ(i)} in diagonal mode).
    pub fn act(&self, sigma: &Permutation, mode: Action) -> Self {
        assert_eq!(sigma.len(), self.nvars, "permutation size mismatch");
        let map = sigma.one_line();
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut x = Exponents::from_elem(0, self.nvars);
            for (i, &s) in map.iter().enumerate() {
                x[s - 1] = m.x[i];
            }
            let (thetas, sign) = match mode {
                Action::XOnly => (m.thetas, 1),
                Action::Diagonal => {
                    let idx: Vec<usize> = m.thetas.indices().iter().map(|&i| map[i - 1]).collect();
                    ThetaSet::from_indices(&idx).expect("permutation is injective")
                }
            };
            out.add_term(SuperMonomial { x, thetas }, if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Invariant under every simultaneous transposition of (x_i, θ_i) and
    /// (x_{i+1}, θ_{i+1}).
    pub fn is_diagonal_invariant(&self) -> bool {
        (1..self.nvars).all(|i| self.act(&Permutation::simple(self.nvars, i), Action::Diagonal) == *self)
    }

    /// The coefficient of θ_1⋯θ_m, as an ordinary polynomial.
    pub fn theta_coefficient(&self, m: usize) -> Poly {
        let target = ThetaSet::first(m);
        let mut out = Poly::zero(self.nvars);
        for (mono, c) in &self.terms {
            if mono.thetas == target {
                out.add_term(mono.x.clone(), c.clone());
            }
        }
        out
    }

    /// Splits into θ-homogeneous pieces keyed by fermionic degree.
    pub fn fermionic_components(&self) -> Vec<(usize, SuperPolynomial)> {
        let mut parts: std::collections::BTreeMap<usize, SuperPolynomial> = Default::default();
        for (m, c) in &self.terms {
            parts
                .entry(m.thetas.len())
                .or_insert_with(|| SuperPolynomial::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Embeds into `nvars` variables, sending (x_i, θ_i) to
    /// (x_{offset+i}, θ_{offset+i}). Relative θ order is kept, so no signs.
    pub fn embed(&self, nvars: usize, offset: usize) -> SuperPolynomial {
        assert!(offset + self.nvars <= nvars);
        let mut out = SuperPolynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut x = Exponents::from_elem(0, nvars);
            x[offset..offset + self.nvars].copy_from_slice(&m.x);
            out.terms.insert(SuperMonomial { x, thetas: ThetaSet(m.thetas.0 << offset) }, c.clone());
        }
        out
    }

    /// Terms in graded-lex order on x then lex order on θ.
    pub fn sorted_terms(&self) -> Vec<(SuperMonomial, Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: usize = a.x.iter().map(|&x| x as usize).sum();
            let db: usize = b.x.iter().map(|&x| x as usize).sum();
            db.cmp(&da).then_with(|| b.x.cmp(&a.x)).then_with(|| a.thetas.indices().cmp(&b.thetas.indices()))
        });
        v
    }
}

/// Δ_m = Π_{i<j≤m} (x_i − x_j) in `nvars` variables.
pub fn vandermonde(nvars: usize, m: usize) -> Poly {
    let mut out = Poly::one(nvars);
    for i in 1..=m {
        for j in i + 1..=m {
            out = out.mul(&Poly::var(nvars, i).sub(&Poly::var(nvars, j)));
        }
    }
    out
}

/// f / Δ_m, by dividing out one linear factor at a time.
pub fn vandermonde_divide(f: &Poly, m: usize) -> Result<Poly> {
    let mut q = f.clone();
    for i in 1..=m {
        for j in i + 1..=m {
            q = q.div_linear(i, j)?;
        }
    }
    Ok(q)
}

/// Inverse of the identification P ↦ P|_{θ_1⋯θ_m} / Δ_m: sums 𝒦_σ θ_1⋯θ_m Δ_m f
/// over minimal coset representatives of S_N / (S_m × S_{N−m}).
pub fn reconstruct(f: &Poly, m: usize, nvars: usize) -> Result<SuperPolynomial> {
    if f.nvars() != nvars {
        return Err(Error::VariableMismatch(f.nvars(), nvars));
    }
    if m > nvars {
        return Err(Error::TooFewVariables { needed: m, available: nvars });
    }
    let g = f.mul(&vandermonde(nvars, m));
    let base = SuperPolynomial::from_poly(&g, ThetaSet::first(m));
    let mut out = SuperPolynomial::zero(nvars);
    for sigma in Permutation::shuffles(nvars, m) {
        out.add_assign(&base.act(&sigma, Action::Diagonal));
    }
    Ok(out)
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let xconst = m.x.iter().all(|&x| x == 0);
            let bare = xconst && m.thetas.is_empty();
            if !mag.is_one() || bare {
                write!(f, "{mag}")?;
                if !bare {
                    write!(f, "*")?;
                }
            }
            for (i, t) in m.thetas.indices().iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "θ{t}")?;
            }
            if !xconst {
                if !m.thetas.is_empty() {
                    write!(f, "*")?;
                }
                fmt_monomial(f, &m.x, 'x')?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn th(n: usize, i: usize) -> SuperPolynomial {
        SuperPolynomial::theta(n, i)
    }

    fn x(n: usize, i: usize) -> SuperPolynomial {
        SuperPolynomial::x(n, i)
    }

    #[test]
    fn normal_ordering() {
        assert_eq!(normal_order(&[2, 1]), Some((vec![1, 2], -1)));
        assert_eq!(normal_order(&[1, 2, 3]), Some((vec![1, 2, 3], 1)));
        assert_eq!(normal_order(&[3, 1, 2]), Some((vec![1, 2, 3], 1)));
        assert_eq!(normal_order(&[1, 3, 1]), None);
    }

    #[test]
    fn anticommutation() {
        let t12 = SuperPolynomial::term(&[0, 0], &[1, 2], 1.into());
        assert_eq!(th(2, 1).mul(&th(2, 2)), t12);
        assert_eq!(th(2, 2).mul(&th(2, 1)), t12.scale(&(-1).into()));
        assert!(th(2, 1).mul(&th(2, 1)).is_zero());
        let p = x(2, 1).mul(&th(2, 2)).add(&x(2, 2).mul(&th(2, 1)));
        let q = x(2, 1).mul(&th(2, 2));
        // only x_2θ_1 · x_1θ_2 survives, and θ_1θ_2 is already normal-ordered
        assert_eq!(p.mul(&q), SuperPolynomial::term(&[1, 1], &[1, 2], 1.into()));
        assert_eq!(q.mul(&p), SuperPolynomial::term(&[1, 1], &[1, 2], (-1).into()));
        assert!(th(2, 1).try_mul(&th(3, 1)).is_err());
    }

    #[test]
    fn actions() {
        let s1 = Permutation::simple(2, 1);
        let p = x(2, 1).mul(&th(2, 1));
        assert_eq!(p.act(&s1, Action::Diagonal), x(2, 2).mul(&th(2, 2)));
        assert_eq!(p.act(&s1, Action::XOnly), x(2, 2).mul(&th(2, 1)));
        let sigma = Permutation::simple(3, 1).compose(&Permutation::simple(3, 2));
        let t12 = SuperPolynomial::term(&[0, 0, 0], &[1, 2], 1.into());
        assert_eq!(t12.act(&sigma, Action::Diagonal), SuperPolynomial::term(&[0, 0, 0], &[2, 3], 1.into()));
    }

    #[test]
    fn invariance_checks() {
        let p1 = x(3, 1).add(&x(3, 2)).add(&x(3, 3));
        assert!(p1.is_diagonal_invariant());
        assert!(!x(2, 1).is_diagonal_invariant());
        let d = Poly::var(2, 1).sub(&Poly::var(2, 2));
        assert!(d.is_antisymmetric_in(1, 2));
    }

    #[test]
    fn identification() {
        let d = Poly::var(2, 1).sub(&Poly::var(2, 2));
        let p = SuperPolynomial::from_poly(&d, ThetaSet::first(2));
        assert_eq!(p.theta_coefficient(2), d);
        assert_eq!(vandermonde_divide(&d, 2).unwrap(), Poly::one(2));
        assert_eq!(vandermonde_divide(&d, 1).unwrap(), d);
        assert_eq!(vandermonde_divide(&d, 0).unwrap(), d);
        assert!(vandermonde_divide(&Poly::var(2, 1), 2).is_err());

        let r = reconstruct(&Poly::one(2), 1, 2).unwrap();
        assert_eq!(r, th(2, 1).add(&th(2, 2)));
        let r = reconstruct(&Poly::var(2, 1), 1, 2).unwrap();
        assert_eq!(r, x(2, 1).mul(&th(2, 1)).add(&x(2, 2).mul(&th(2, 2))));
        let e1 = Poly::var(3, 1).add(&Poly::var(3, 2)).add(&Poly::var(3, 3));
        assert_eq!(reconstruct(&e1, 0, 3).unwrap(), SuperPolynomial::from_poly(&e1, ThetaSet::EMPTY));
    }

    #[test]
    fn display() {
        let p = x(2, 1).mul(&th(2, 2)).sub(&SuperPolynomial::term(&[0, 0], &[2, 1], 2.into()));
        assert_eq!(p.to_string(), "θ2*x1 + 2*θ1*θ2");
    }

    fn arb_homogeneous(n: usize, a: usize) -> impl Strategy<Value = SuperPolynomial> {
        let mono = (
            proptest::collection::vec(0usize..3, n),
            proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), a),
            -3i64..=3,
        );
        proptest::collection::vec(mono, 0..5).prop_map(move |ts| {
            let mut p = SuperPolynomial::zero(n);
            for (e, th, c) in ts {
                p.add_assign(&SuperPolynomial::term(&e, &th, c.into()));
            }
            p
        })
    }

    fn arb_any(n: usize) -> impl Strategy<Value = SuperPolynomial> {
        (0..=n.min(3)).prop_flat_map(move |a| arb_homogeneous(n, a))
    }

    fn arb_pair() -> impl Strategy<Value = (SuperPolynomial, SuperPolynomial, usize, usize)> {
        (2usize..=5).prop_flat_map(|n| {
            (0..=n.min(3), 0..=n.min(3))
                .prop_flat_map(move |(a, b)| (arb_homogeneous(n, a), arb_homogeneous(n, b), Just(a), Just(b)))
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn graded_commutativity((p, q, a, b) in arb_pair()) {
            let sign: Coefficient = if (a * b) % 2 == 0 { 1.into() } else { (-1).into() };
            prop_assert_eq!(p.mul(&q), q.mul(&p).scale(&sign));
        }

        #[test]
        fn associativity(p in arb_any(4), q in arb_any(4), r in arb_any(4)) {
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        }

        #[test]
        fn action_composes(p in arb_any(4), s in arb_perm(4), t in arb_perm(4)) {
            for mode in [Action::Diagonal, Action::XOnly] {
                prop_assert_eq!(p.act(&t, mode).act(&s, mode), p.act(&s.compose(&t), mode));
            }
            prop_assert_eq!(p.act(&s, Action::Diagonal).mul(&p.act(&s, Action::Diagonal)),
                            p.mul(&p).act(&s, Action::Diagonal));
        }
    }
}
