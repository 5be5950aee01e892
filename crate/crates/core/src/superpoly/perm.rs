use crate::error::{Error, Result};

/// A permutation of {1..N} in one-line notation: `σ(i) = map[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse { input: format!("{one_line:?}"), reason: "not a permutation".into() });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The adjacent transposition s_i = (i, i+1).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not defined in S_{n}");
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.len()];
        for (i, &s) in self.0.iter().enumerate() {
            v[s - 1] = i + 1;
        }
        Permutation(v)
    }

    /// Minimal-length representatives of S_N / (S_m × S_{N−m}): the
    /// permutations increasing on {1..m} and on {m+1..N}.
    pub fn shuffles(n: usize, m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn rec(n: usize, m: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if chosen.len() == m {
                let rest = (1..=n).filter(|v| !chosen.contains(v));
                out.push(Permutation(chosen.iter().copied().chain(rest).collect()));
                return;
            }
            for v in start..=n {
                chosen.push(v);
                rec(n, m, v + 1, chosen, out);
                chosen.pop();
            }
        }
        rec(n, m, 1, &mut chosen, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(s1.compose(&s2).one_line(), &[2, 3, 1]);
        assert_eq!(s1.compose(&s1), Permutation::identity(3));
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert_eq!(Permutation::shuffles(4, 2).len(), 6);
        assert_eq!(Permutation::shuffles(3, 0), vec![Permutation::identity(3)]);
    }
}
