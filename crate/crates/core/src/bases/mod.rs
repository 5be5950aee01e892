//! Bases of symmetric functions in superspace, changes of basis, the d
//! operator, the ω involution and the scalar product.

pub(crate) mod linalg;
mod monomial;

pub use linalg::{invert, Matrix};
pub use monomial::{extract_monomial, monomial_product, realize_monomial};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::superpartition::{Partition, SuperPartition};
use crate::superpoly::{normal_order, SuperMonomial, SuperPolynomial, ThetaSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    P,
    E,
    H,
    S,
    SBar,
    SStar,
    SBarStar,
}

impl Basis {
    pub const ALL: [Basis; 8] =
        [Basis::M, Basis::P, Basis::E, Basis::H, Basis::S, Basis::SBar, Basis::SStar, Basis::SBarStar];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
            Basis::SBar => "sbar",
            Basis::SStar => "sstar",
            Basis::SBarStar => "sbarstar",
        }
    }

    /// Whether the m-expansion of every element is m_Λ plus terms strictly
    /// below Λ in the total order.
    fn is_unitriangular(self) -> bool {
        matches!(self, Basis::M | Basis::S | Basis::SBar)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), reason: "unknown basis".into() })
    }
}

/// z_λ = Π_i i^{n_i} n_i!.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZWeight(u128);

impl ZWeight {
    pub fn of(lambda: &Partition) -> Self {
        ZWeight(lambda.z())
    }

    pub fn value(self) -> u128 {
        self.0
    }
}

/// A symmetric function in superspace, as a finite combination of basis
/// elements. Degrees may be mixed; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SymSuperFunc {
    basis: Basis,
    #[serde(serialize_with = "serialize_terms")]
    coeffs: BTreeMap<SuperPartition, Coefficient>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &BTreeMap<SuperPartition, Coefficient>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(terms.len()))?;
    for (k, v) in terms.iter().rev() {
        seq.serialize_element(&(k, v))?;
    }
    seq.end()
}

impl SymSuperFunc {
    pub fn zero(basis: Basis) -> Self {
        SymSuperFunc { basis, coeffs: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::element(basis, SuperPartition::empty())
    }

    pub fn element(basis: Basis, lambda: SuperPartition) -> Self {
        Self::from_terms(basis, [(lambda, Coefficient::one())])
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (SuperPartition, Coefficient)>) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            f.add_term(k, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &SuperPartition) -> Coefficient {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in decreasing order.
    pub fn terms(&self) -> impl Iterator<Item = (&SuperPartition, &Coefficient)> {
        self.coeffs.iter().rev()
    }

    pub fn as_map(&self) -> &BTreeMap<SuperPartition, Coefficient> {
        &self.coeffs
    }

    /// Number of non-zero terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: SuperPartition, c: &Coefficient) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::from_terms(self.basis, self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Coefficient::one())
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let other = convert(other, self.basis)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product, expressed in the monomial basis.
    pub fn mul(&self, other: &Self) -> Self {
        multiply(&to_m(self), &to_m(other))
    }

    /// Degrees (n|m) present.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut d: Vec<_> = self.coeffs.keys().map(|k| k.degree()).collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn in_basis(&self, target: Basis) -> Result<Self> {
        convert(self, target)
    }
}

impl fmt::Display for SymSuperFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}{}", self.basis, k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymSuperFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Expansion = BTreeMap<SuperPartition, Coefficient>;

#[derive(Default)]
struct Caches {
    products: RwLock<HashMap<(SuperPartition, SuperPartition), Arc<Expansion>>>,
    elements: RwLock<HashMap<(Basis, SuperPartition), Arc<Expansion>>>,
    inverses: RwLock<HashMap<(Basis, usize, usize), Arc<Transition>>>,
}

static CACHES: OnceLock<Caches> = OnceLock::new();
static CACHE_ENABLED: AtomicBool = AtomicBool::new(true);

fn caches() -> &'static Caches {
    CACHES.get_or_init(Caches::default)
}

/// Turns memoization of expansions and transition matrices on or off.
/// Results are the same either way.
pub fn set_cache_enabled(on: bool) {
    CACHE_ENABLED.store(on, Ordering::SeqCst);
}

pub fn clear_cache() {
    let c = caches();
    c.products.write().clear();
    c.elements.write().clear();
    c.inverses.write().clear();
}

fn memo<K, V>(map: &RwLock<HashMap<K, Arc<V>>>, key: K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq,
{
    if !CACHE_ENABLED.load(Ordering::SeqCst) {
        return Arc::new(compute());
    }
    if let Some(v) = map.read().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    map.write().entry(key).or_insert(v).clone()
}

fn cached_product(a: &SuperPartition, b: &SuperPartition) -> Arc<Expansion> {
    memo(&caches().products, (a.clone(), b.clone()), || monomial_product(a, b))
}

/// Product of two m-basis expansions.
fn multiply(f: &SymSuperFunc, g: &SymSuperFunc) -> SymSuperFunc {
    debug_assert!(f.basis == Basis::M && g.basis == Basis::M);
    let mut acc: Expansion = BTreeMap::new();
    for (a, c) in &f.coeffs {
        for (b, d) in &g.coeffs {
            let cd = c * d;
            for (k, v) in cached_product(a, b).iter() {
                *acc.entry(k.clone()).or_default() += &(&cd * v);
            }
        }
    }
    SymSuperFunc::from_terms(Basis::M, acc)
}

fn m_of(expansion: Expansion) -> SymSuperFunc {
    SymSuperFunc::from_terms(Basis::M, expansion)
}

/// m-expansion of a single generator of the p, e or h family.
fn generator(basis: Basis, k: usize, fermionic: bool) -> SymSuperFunc {
    let m = |a: &[usize], s: &[usize]| SuperPartition::from_parts(a, s).expect("valid generator index");
    let one = Coefficient::one();
    match (basis, fermionic) {
        (Basis::P, true) => SymSuperFunc::element(Basis::M, m(&[k], &[])),
        (Basis::P, false) => SymSuperFunc::element(Basis::M, m(&[], &[k])),
        (Basis::E, true) => SymSuperFunc::element(Basis::M, m(&[0], &vec![1; k])),
        (Basis::E, false) => SymSuperFunc::element(Basis::M, m(&[], &vec![1; k])),
        (Basis::H, true) => SymSuperFunc::from_terms(
            Basis::M,
            SuperPartition::all(k, 1).into_iter().map(|l| {
                let c = Coefficient::from(l.fermionic()[0] + 1);
                (l, c)
            }),
        ),
        (Basis::H, false) => {
            SymSuperFunc::from_terms(Basis::M, Partition::all(k).into_iter().map(|p| (m(&[], p.parts()), one.clone())))
        }
        _ => unreachable!("{basis} has no generators"),
    }
}

/// The m-expansion of the p, e or h generator with the given index.
pub fn generator_in_m(basis: Basis, k: usize, fermionic: bool) -> Result<SymSuperFunc> {
    match basis {
        Basis::P | Basis::E | Basis::H if fermionic || k >= 1 => Ok(generator(basis, k, fermionic)),
        Basis::P | Basis::E | Basis::H => {
            Err(Error::Parse { input: format!("{basis}_{k}"), reason: "bosonic generators need k ≥ 1".into() })
        }
        _ => Err(Error::UnsupportedBasis(basis.to_string())),
    }
}

fn multiplicative_element(basis: Basis, lambda: &SuperPartition) -> Expansion {
    let mut acc = SymSuperFunc::one(Basis::M);
    for &k in lambda.fermionic() {
        acc = multiply(&acc, &generator(basis, k, true));
    }
    for &r in lambda.bosonic().parts() {
        acc = multiply(&acc, &generator(basis, r, false));
    }
    acc.coeffs
}

fn binom2_odd(m: usize) -> bool {
    (m * m.saturating_sub(1) / 2) % 2 == 1
}

/// The m-expansion of a single basis element.
pub fn element_in_m(basis: Basis, lambda: &SuperPartition) -> Arc<Expansion> {
    memo(&caches().elements, (basis, lambda.clone()), || match basis {
        Basis::M => BTreeMap::from([(lambda.clone(), Coefficient::one())]),
        Basis::P | Basis::E | Basis::H => multiplicative_element(basis, lambda),
        Basis::S => crate::schur::key_expansion(lambda, crate::schur::Family::S),
        Basis::SBar => crate::schur::key_expansion(lambda, crate::schur::Family::SBar),
        // the duals are (−1)^{C(m,2)} ω applied to the other family at Λ′
        Basis::SStar | Basis::SBarStar => {
            let other = if basis == Basis::SStar { Basis::SBar } else { Basis::S };
            let f = omega_p(&SymSuperFunc::element(other, lambda.conjugate())).expect("ω is defined at desk degrees");
            let f = to_m(&f);
            let f = if binom2_odd(lambda.m()) { f.neg() } else { f };
            f.coeffs
        }
    })
}

/// Any element re-expressed in the monomial basis.
pub fn to_m(f: &SymSuperFunc) -> SymSuperFunc {
    if f.basis == Basis::M {
        return f.clone();
    }
    let mut acc: Expansion = BTreeMap::new();
    for (k, c) in &f.coeffs {
        for (g, d) in element_in_m(f.basis, k).iter() {
            *acc.entry(g.clone()).or_default() += &(c * d);
        }
    }
    m_of(acc)
}

struct Transition {
    index: Vec<SuperPartition>,
    pos: HashMap<SuperPartition, usize>,
    /// Rows give the target-basis coordinates of each m_Γ.
    inverse: Matrix,
}

fn transition(basis: Basis, n: usize, m: usize) -> Result<Arc<Transition>> {
    let key = (basis, n, m);
    if CACHE_ENABLED.load(Ordering::SeqCst) {
        if let Some(t) = caches().inverses.read().get(&key) {
            return Ok(t.clone());
        }
    }
    let index = SuperPartition::all(n, m);
    let pos: HashMap<_, _> = index.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let size = index.len();
    let mut mat: Matrix = vec![vec![Coefficient::zero(); size]; size];
    for (i, l) in index.iter().enumerate() {
        for (g, c) in element_in_m(basis, l).iter() {
            mat[i][pos[g]] = c.clone();
        }
    }
    let t = Arc::new(Transition { inverse: invert(&mat)?, index, pos });
    if CACHE_ENABLED.load(Ordering::SeqCst) {
        caches().inverses.write().insert(key, t.clone());
    }
    Ok(t)
}

fn from_m(f: &SymSuperFunc, target: Basis) -> Result<SymSuperFunc> {
    debug_assert_eq!(f.basis, Basis::M);
    if target == Basis::M {
        return Ok(f.clone());
    }
    if target.is_unitriangular() {
        return triangular_solve(f, target);
    }
    let mut out = SymSuperFunc::zero(target);
    let mut groups: BTreeMap<(usize, usize), Vec<(&SuperPartition, &Coefficient)>> = BTreeMap::new();
    for (k, c) in &f.coeffs {
        groups.entry(k.degree()).or_default().push((k, c));
    }
    for ((n, m), terms) in groups {
        let t = transition(target, n, m)?;
        let mut row = vec![Coefficient::zero(); t.index.len()];
        for (k, c) in terms {
            let i = t.pos[k];
            for (j, v) in t.inverse[i].iter().enumerate() {
                if !v.is_zero() {
                    row[j] += &(c * v);
                }
            }
        }
        for (j, c) in row.into_iter().enumerate() {
            out.add_term(t.index[j].clone(), &c);
        }
    }
    Ok(out)
}

/// Peels off leading terms, using that X_Λ = m_Λ + lower.
fn triangular_solve(f: &SymSuperFunc, target: Basis) -> Result<SymSuperFunc> {
    let mut rest = f.coeffs.clone();
    let mut out = SymSuperFunc::zero(target);
    while let Some((lead, c)) = rest.pop_last() {
        let e = element_in_m(target, &lead);
        if e.get(&lead).is_none_or(|v| !v.is_one()) || e.keys().next_back() != Some(&lead) {
            return Err(Error::Singular);
        }
        for (g, d) in e.iter() {
            if g == &lead {
                continue;
            }
            let v = rest.entry(g.clone()).or_default();
            *v -= &(&c * d);
            if v.is_zero() {
                rest.remove(g);
            }
        }
        out.add_term(lead, &c);
    }
    Ok(out)
}

/// Change of basis.
pub fn convert(f: &SymSuperFunc, target: Basis) -> Result<SymSuperFunc> {
    if f.basis == target {
        return Ok(f.clone());
    }
    from_m(&to_m(f), target)
}

/// The basis element X_Λ as a polynomial in `nvars` variables.
pub fn realize(lambda: &SuperPartition, basis: Basis, nvars: usize) -> SuperPolynomial {
    realize_func(&SymSuperFunc::element(basis, lambda.clone()), nvars)
}

pub fn realize_func(f: &SymSuperFunc, nvars: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    for (k, c) in to_m(f).coeffs {
        out.add_assign(&realize_monomial(&k, nvars).scale(&c));
    }
    out
}

/// Inverse of [`realize`] on diagonal-invariant superpolynomials.
pub fn to_monomial(p: &SuperPolynomial) -> Result<SymSuperFunc> {
    Ok(m_of(extract_monomial(p)?))
}

/// d = Σ_i θ_i ∂/∂x_i.
pub fn d_operator(p: &SuperPolynomial) -> SuperPolynomial {
    let n = p.nvars();
    let mut out = SuperPolynomial::zero(n);
    for (mono, c) in p.terms() {
        for i in 0..n {
            let e = mono.x[i];
            if e == 0 {
                continue;
            }
            let (single, _) = ThetaSet::from_indices(&[i + 1]).expect("single θ");
            let Some((thetas, sign)) = single.wedge(mono.thetas) else { continue };
            let mut x = mono.x.clone();
            x[i] -= 1;
            let v = c * &Coefficient::from(e as usize);
            out.add_term(SuperMonomial { x, thetas }, if sign < 0 { -v } else { v });
        }
    }
    out
}

/// ω(p_Λ) = (−1)^{|Λ^a| + |Λ^s| − ℓ(Λ^s)} p_Λ, extended linearly; the result
/// is returned in the basis of the input.
pub fn omega(f: &SymSuperFunc) -> Result<SymSuperFunc> {
    convert(&omega_p(f)?, f.basis)
}

fn omega_p(f: &SymSuperFunc) -> Result<SymSuperFunc> {
    let p = convert(f, Basis::P)?;
    Ok(SymSuperFunc::from_terms(
        Basis::P,
        p.coeffs.iter().map(|(k, c)| {
            let odd = (k.n() - k.bosonic().len()) % 2 == 1;
            (k.clone(), if odd { -c } else { c.clone() })
        }),
    ))
}

/// ⟨⟨p_Λ, p_Ω⟩⟩ = δ_{ΛΩ} z_{Λ^s}, extended bilinearly.
pub fn scalar_product(f: &SymSuperFunc, g: &SymSuperFunc) -> Result<Coefficient> {
    let f = convert(f, Basis::P)?;
    let g = convert(g, Basis::P)?;
    let mut total = Coefficient::zero();
    for (k, c) in &f.coeffs {
        if let Some(d) = g.coeffs.get(k) {
            let z = Coefficient::from_int(ZWeight::of(k.bosonic()).value() as i64);
            total += &(&(c * d) * &z);
        }
    }
    Ok(total)
}

/// The product of generators X̃_{a_1}⋯X̃_{a_m} X_{s_1}⋯ for arbitrary index
/// order, reduced to ±X_Λ by normal ordering the fermionic generators.
pub fn generator_product(basis: Basis, fermionic: &[usize], bosonic: &[usize]) -> Result<SymSuperFunc> {
    if !matches!(basis, Basis::P | Basis::E | Basis::H) {
        return Err(Error::UnsupportedBasis(basis.to_string()));
    }
    if bosonic.contains(&0) {
        return Err(Error::Parse { input: format!("{bosonic:?}"), reason: "bosonic generators need k ≥ 1".into() });
    }
    // sort decreasing: order on reversed values
    let keys: Vec<usize> = fermionic.iter().map(|&a| usize::MAX - a).collect();
    let Some((_, sign)) = normal_order(&keys) else {
        return Ok(SymSuperFunc::zero(basis));
    };
    let mut a = fermionic.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let lambda = SuperPartition::new(a, Partition::from_unsorted(bosonic.to_vec()))?;
    let f = SymSuperFunc::element(basis, lambda);
    Ok(if sign < 0 { f.neg() } else { f })
}

#[cfg(test)]
mod tests;
