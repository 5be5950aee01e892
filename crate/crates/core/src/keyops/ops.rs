use std::fmt;

use crate::coeff::Coefficient;
use crate::superpoly::{Exponents, Poly};

fn check_index(p: &Poly, i: usize) {
    assert!(i >= 1 && i < p.nvars(), "operator index {i} outside 1..{}", p.nvars());
}

/// ∂_i = (1 − κ_{i,i+1}) / (x_i − x_{i+1}).
pub fn partial(p: &Poly, i: usize) -> Poly {
    check_index(p, i);
    let (a, b) = (i - 1, i);
    let mut out = Poly::zero(p.nvars());
    for (e, c) in p.terms() {
        let (ea, eb) = (e[a], e[b]);
        if ea == eb {
            continue;
        }
        // x_i^{lo+d} x_{i+1}^{lo} ↦ Σ_{k<d} x_i^{lo+d−1−k} x_{i+1}^{lo+k}
        let (lo, d, c) = if ea > eb { (eb, ea - eb, c.clone()) } else { (ea, eb - ea, -c.clone()) };
        for k in 0..d {
            let mut ne = e.clone();
            ne[a] = lo + d - 1 - k;
            ne[b] = lo + k;
            out.add_term(ne, c.clone());
        }
    }
    out
}

/// π_i = ∂_i x_i.
pub fn pi(p: &Poly, i: usize) -> Poly {
    check_index(p, i);
    let (a, b) = (i - 1, i);
    let mut out = Poly::zero(p.nvars());
    for (e, c) in p.terms() {
        let (ea, eb) = (e[a], e[b]);
        if ea >= eb {
            let d = ea - eb;
            for k in 0..=d {
                let mut ne = e.clone();
                ne[a] = eb + d - k;
                ne[b] = eb + k;
                out.add_term(ne, c.clone());
            }
        } else {
            // −x_i x_{i+1} Σ_{k ≤ d−2} x_i^k x_{i+1}^{d−2−k}, times (x_i x_{i+1})^{ea}
            let d = eb - ea;
            for k in 0..d.saturating_sub(1) {
                let mut ne = e.clone();
                ne[a] = ea + 1 + k;
                ne[b] = ea + 1 + (d - 2 - k);
                out.add_term(ne, -c.clone());
            }
        }
    }
    out
}

/// π̂_i = π_i − 1.
pub fn pihat(p: &Poly, i: usize) -> Poly {
    pi(p, i).sub(p)
}

/// One factor of an operator word.
#[derive(Clone, PartialEq, Eq)]
pub enum Op {
    Partial(usize),
    Pi(usize),
    PiHat(usize),
    /// Multiplication by a fixed polynomial.
    Mul(Poly),
}

impl Op {
    pub fn apply(&self, p: &Poly) -> Poly {
        match self {
            Op::Partial(i) => partial(p, *i),
            Op::Pi(i) => pi(p, *i),
            Op::PiHat(i) => pihat(p, *i),
            Op::Mul(q) => q.mul(p),
        }
    }
}

impl fmt::Debug for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Partial(i) => write!(f, "∂{i}"),
            Op::Pi(i) => write!(f, "π{i}"),
            Op::PiHat(i) => write!(f, "π̂{i}"),
            Op::Mul(q) => write!(f, "[{q}]"),
        }
    }
}

/// A product of operators written left to right; the rightmost factor acts
/// first.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct OperatorWord(Vec<Op>);

impl OperatorWord {
    pub fn identity() -> Self {
        OperatorWord(Vec::new())
    }

    pub fn from_ops(ops: Vec<Op>) -> Self {
        OperatorWord(ops)
    }

    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// self · other (other acts first).
    pub fn then(mut self, other: &OperatorWord) -> Self {
        self.0.extend(other.0.iter().cloned());
        self
    }

    pub fn push(&mut self, op: Op) {
        self.0.push(op);
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        self.0.iter().rev().fold(p.clone(), |acc, op| op.apply(&acc))
    }

    fn simple(kind: fn(usize) -> Op, idx: impl IntoIterator<Item = usize>) -> Self {
        OperatorWord(idx.into_iter().map(kind).collect())
    }

    /// π_(b,a) = π_b π_{b−1} ⋯ π_a, the identity when b < a.
    pub fn pi_down(b: usize, a: usize) -> Self {
        Self::simple(Op::Pi, (a..=b).rev())
    }

    /// π_[c,d] = π_c π_{c+1} ⋯ π_d, the identity when c > d.
    pub fn pi_up(c: usize, d: usize) -> Self {
        Self::simple(Op::Pi, c..=d)
    }

    /// π̂_[c,d] = π̂_c ⋯ π̂_d, the identity when c > d.
    pub fn pihat_up(c: usize, d: usize) -> Self {
        Self::simple(Op::PiHat, c..=d)
    }

    /// A reduced word for the longest permutation of {lo..hi}, built from
    /// the given generator.
    pub fn longest(kind: fn(usize) -> Op, lo: usize, hi: usize) -> Self {
        // (s_lo)(s_{lo+1} s_lo)(s_{lo+2} s_{lo+1} s_lo)⋯
        let mut ops = Vec::new();
        for top in lo..hi {
            ops.extend((lo..=top).rev().map(kind));
        }
        OperatorWord(ops)
    }

    /// Multiplication by a polynomial.
    pub fn mul(q: Poly) -> Self {
        OperatorWord(vec![Op::Mul(q)])
    }

    /// ∂_{ω} on {lo..hi}.
    pub fn partial_longest(lo: usize, hi: usize) -> Self {
        Self::longest(Op::Partial, lo, hi)
    }

    /// π_{ω} on {lo..hi}.
    pub fn pi_longest(lo: usize, hi: usize) -> Self {
        Self::longest(Op::Pi, lo, hi)
    }

    /// π̂_{ω} on {lo..hi}.
    pub fn pihat_longest(lo: usize, hi: usize) -> Self {
        Self::longest(Op::PiHat, lo, hi)
    }
}

impl fmt::Debug for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, op) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{op:?}")?;
        }
        Ok(())
    }
}

/// A composition η ∈ ℤ_{≥0}^N.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence of indices i_1, i_2, … such that η = s_{i_1} s_{i_2} ⋯ η⁺
    /// with each step an ascent, η⁺ the decreasing rearrangement. Found by
    /// repeatedly swapping the leftmost ascent.
    fn ascent_schedule(&self) -> (Vec<usize>, Vec<usize>) {
        let mut eta = self.0.clone();
        let mut steps = Vec::new();
        while let Some(i) = eta.windows(2).position(|w| w[0] < w[1]) {
            steps.push(i + 1);
            eta.swap(i, i + 1);
        }
        (steps, eta)
    }
}

fn key_with(eta: &Composition, kind: fn(usize) -> Op) -> Poly {
    let (steps, sorted) = eta.ascent_schedule();
    let word = OperatorWord::simple(kind, steps);
    word.apply(&Poly::monomial(&sorted))
}

/// The Key polynomial K_η.
pub fn key(eta: &Composition) -> Poly {
    key_with(eta, Op::Pi)
}

/// The adjoint Key polynomial K̂_η.
pub fn key_hat(eta: &Composition) -> Poly {
    key_with(eta, Op::PiHat)
}

/// Key polynomial computed along an arbitrary (random) choice of ascents;
/// used to test independence of the schedule.
pub fn key_random_schedule(eta: &Composition, hat: bool, rng: &mut impl rand::Rng) -> Poly {
    let mut cur = eta.0.clone();
    let mut steps = Vec::new();
    loop {
        let ascents: Vec<usize> = cur.windows(2).enumerate().filter(|(_, w)| w[0] < w[1]).map(|(i, _)| i).collect();
        if ascents.is_empty() {
            break;
        }
        let i = ascents[rng.random_range(0..ascents.len())];
        steps.push(i + 1);
        cur.swap(i, i + 1);
    }
    let word = OperatorWord::simple(if hat { Op::PiHat } else { Op::Pi }, steps);
    word.apply(&Poly::monomial(&cur))
}

/// x_1 x_2 ⋯ x_k in `nvars` variables.
pub fn prefix_monomial(nvars: usize, k: usize) -> Poly {
    let e: Exponents = (0..nvars).map(|i| u8::from(i < k)).collect();
    let mut p = Poly::zero(nvars);
    p.add_term(e, Coefficient::one());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn small_values() {
        assert_eq!(pi(&x(2, 1), 1), x(2, 1).add(&x(2, 2)));
        assert_eq!(partial(&x(2, 1), 1), Poly::one(2));
        // π̂_1 x_1²x_2 = π_1 x_1²x_2 − x_1²x_2 = x_1x_2²
        assert_eq!(pihat(&Poly::monomial(&[2, 1]), 1), Poly::monomial(&[1, 2]));
        assert_eq!(key(&Composition(vec![2, 1])), Poly::monomial(&[2, 1]));
        assert_eq!(key(&Composition(vec![0, 1])), x(2, 1).add(&x(2, 2)));
        assert_eq!(key_hat(&Composition(vec![0, 1])), x(2, 2));
    }

    #[test]
    fn key_of_increasing_is_schur() {
        // K_{(0,1,2)} = s_{21}(x1,x2,x3), which has 8 terms: 6 of type x²y and 2·x1x2x3
        let k = key(&Composition(vec![0, 1, 2]));
        assert_eq!(k.len(), 7);
        assert_eq!(k.coeff(&[1, 1, 1]), Coefficient::from_int(2));
        assert!(k.is_symmetric_in(1, 3));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0usize..4, n), -3i64..=3), 1..6).prop_map(move |ts| {
            let mut p = Poly::zero(n);
            for (e, c) in ts {
                p.add_term(e.iter().map(|&v| v as u8).collect(), c.into());
            }
            p
        })
    }

    fn arb_case() -> impl Strategy<Value = (usize, usize, Poly)> {
        (3usize..=5).prop_flat_map(|n| (Just(n), 1..n - 1, arb_poly(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn quadratic_relations((n, i, p) in arb_case()) {
            let _ = n;
            prop_assert_eq!(pi(&pi(&p, i), i), pi(&p, i));
            prop_assert_eq!(pihat(&pihat(&p, i), i), pihat(&p, i).scale(&(-1).into()));
            prop_assert!(partial(&partial(&p, i), i).is_zero());
            prop_assert!(pi(&pihat(&p, i), i).is_zero());
            prop_assert!(pihat(&pi(&p, i), i).is_zero());
            prop_assert!(partial(&pi(&p, i), i).is_zero());
            prop_assert_eq!(pi(&p, i), partial(&x(n, i).mul(&p), i));
        }

        #[test]
        fn braid_relations((_n, i, p) in arb_case()) {
            let j = i + 1;
            for f in [pi as fn(&Poly, usize) -> Poly, pihat, partial] {
                prop_assert_eq!(f(&f(&f(&p, i), j), i), f(&f(&f(&p, j), i), j));
            }
        }

        #[test]
        fn commutation_with_variables((n, i, p) in arb_case()) {
            // π_i x_i = x_{i+1} π_i + x_i and π_i x_{i+1} = x_i π_i − x_i
            prop_assert_eq!(pi(&x(n, i).mul(&p), i), x(n, i + 1).mul(&pi(&p, i)).add(&x(n, i).mul(&p)));
            prop_assert_eq!(pi(&x(n, i + 1).mul(&p), i), x(n, i).mul(&pi(&p, i)).sub(&x(n, i).mul(&p)));
        }

        #[test]
        fn key_is_schedule_independent(eta in prop::collection::vec(0usize..4, 2..6), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let eta = Composition(eta);
            prop_assert_eq!(key_random_schedule(&eta, false, &mut rng), key(&eta));
            prop_assert_eq!(key_random_schedule(&eta, true, &mut rng), key_hat(&eta));
        }
    }
}
