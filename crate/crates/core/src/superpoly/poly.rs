use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// Exponent vector of a monomial in the commuting variables.
pub type Exponents = SmallVec<[u8; 16]>;

/// Sparse polynomial in commuting variables x_1..x_N with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: HashMap<Exponents, Coefficient>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: HashMap::new() }
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Exponents::from_elem(0, nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    /// x^exps with coefficient 1.
    pub fn monomial(exps: &[usize]) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.iter().map(|&e| to_u8(e)).collect(), Coefficient::one());
        p
    }

    /// The variable x_i (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(&e)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u8]) -> Coefficient {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, c: Coefficient) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(exps) {
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

    fn check(&self, other: &Poly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents =
                    e1.iter().zip(e2).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Panicking variants for internal use where the variable counts are
    /// known to agree.
    pub fn add(&self, other: &Poly) -> Poly {
        self.try_add(other).expect("variable count mismatch")
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Coefficient::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.try_mul(other).expect("variable count mismatch")
    }

    pub fn scale(&self, c: &Coefficient) -> Poly {
        let mut out = Poly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, d) in &self.terms {
            out.terms.insert(e.clone(), d * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// Multiplies by the monomial x^exps.
    pub fn mul_monomial(&self, exps: &[usize]) -> Poly {
        assert_eq!(exps.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let ne: Exponents = e.iter().zip(exps).map(|(a, &b)| to_u8(*a as usize + b)).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Substitutes x_i ↦ x_{σ(i)}; `sigma` is 1-based one-line notation.
    pub fn permute(&self, sigma: &[usize]) -> Poly {
        assert_eq!(sigma.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = Exponents::from_elem(0, self.nvars);
            for (i, &s) in sigma.iter().enumerate() {
                ne[s - 1] = e[i];
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// κ_{i,i+1}: exchanges x_i and x_{i+1}.
    pub fn swap(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i - 1, i);
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Reverses the variable order: x_i ↦ x_{N+1-i}.
    pub fn reverse_vars(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let ne: Exponents = e.iter().rev().copied().collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Embeds into a ring with more variables, placing x_i at x_{offset+i}.
    pub fn embed(&self, nvars: usize, offset: usize) -> Poly {
        assert!(offset + self.nvars <= nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = Exponents::from_elem(0, nvars);
            ne[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// e_k in the listed variables (1-based), as a polynomial in `nvars`
    /// variables. e_0 = 1 and e_k = 0 for k larger than the list.
    pub fn elementary(nvars: usize, vars: &[usize], k: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        fn rec(vars: &[usize], k: usize, e: &mut Exponents, out: &mut Poly) {
            if k == 0 {
                out.add_term(e.clone(), Coefficient::one());
                return;
            }
            for (j, &v) in vars.iter().enumerate() {
                if vars.len() - j < k {
                    break;
                }
                e[v - 1] += 1;
                rec(&vars[j + 1..], k - 1, e, out);
                e[v - 1] -= 1;
            }
        }
        rec(vars, k, &mut Exponents::from_elem(0, nvars), &mut out);
        out
    }

    /// h_k in the listed variables (1-based).
    pub fn complete(nvars: usize, vars: &[usize], k: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        fn rec(vars: &[usize], k: usize, e: &mut Exponents, out: &mut Poly) {
            let Some((&v, rest)) = vars.split_first() else {
                if k == 0 {
                    out.add_term(e.clone(), Coefficient::one());
                }
                return;
            };
            for p in 0..=k {
                e[v - 1] = to_u8(p);
                rec(rest, k - p, e, out);
            }
            e[v - 1] = 0;
        }
        rec(vars, k, &mut Exponents::from_elem(0, nvars), &mut out);
        out
    }

    /// Total degree of the highest term (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    pub fn is_symmetric_in(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| self.swap(i) == *self)
    }

    pub fn is_antisymmetric_in(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| self.swap(i) == self.scale(&-Coefficient::one()))
    }

    /// Exact division by x_i − x_j (i ≠ j, 1-based).
    pub fn div_linear(&self, i: usize, j: usize) -> Result<Poly> {
        let (a, b) = (i - 1, j - 1);
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.nvars);
        // Peel off the term of highest x_i-degree until none is left.
        loop {
            let lead = rem
                .terms
                .iter()
                .filter(|(e, _)| e[a] > 0)
                .max_by(|(e1, _), (e2, _)| e1[a].cmp(&e2[a]).then_with(|| e1.cmp(e2)))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = lead else { break };
            let mut q = e.clone();
            q[a] -= 1;
            quo.add_term(q.clone(), c.clone());
            // rem -= (x_i − x_j) c x^q
            rem.add_term(e, -c.clone());
            let mut t = q;
            t[b] = t[b].checked_add(1).expect("exponent overflow");
            rem.add_term(t, c);
        }
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NotDivisible { i, j })
        }
    }

    /// Terms sorted graded-lex descending, for printing and comparisons.
    pub fn sorted_terms(&self) -> Vec<(Exponents, Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: usize = a.iter().map(|&x| x as usize).sum();
            let db: usize = b.iter().map(|&x| x as usize).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

pub(crate) fn to_u8(e: usize) -> u8 {
    u8::try_from(e).expect("exponent exceeds 255")
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, e: &[u8], var: char) -> fmt::Result {
    let mut first = true;
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{var}{}", i + 1)?;
        if x > 1 {
            write!(f, "^{x}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let constant = e.iter().all(|&x| x == 0);
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            if !constant {
                fmt_monomial(f, e, 'x')?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
