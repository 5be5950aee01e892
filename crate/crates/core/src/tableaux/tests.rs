use super::*;
use crate::bases::to_m;
use crate::schur::{kostka, schur, skew, KostkaKind};
use crate::superpartition::sp;

fn w(text: &str) -> Vec<Letter> {
    parse_weight(text).unwrap()
}

fn empty() -> SuperPartition {
    SuperPartition::empty()
}

#[test]
fn letters_parse_and_print() {
    let weight = w("1~,0~,2,1,1");
    assert_eq!(weight[1], Letter::fermionic(0));
    assert_eq!(weight[2], Letter::bosonic(2));
    assert_eq!(weight_to_text(&weight), "1~,0~,2,1,1");
    assert!("x".parse::<Letter>().is_err());
    assert_eq!(weight_of(&sp("3,1;2,1")), w("3~,1~,2,1"));
}

#[test]
fn circle_word_sign() {
    assert_eq!(CircleWord(vec![1, 2, 3]).sign(), 1);
    assert_eq!(CircleWord(vec![2, 1, 3]).sign(), -1);
    assert_eq!(CircleWord(vec![3, 1, 2]).inversions(), 2);
}

#[test]
fn one_row() {
    let ts = enumerate(&sp(";2"), &empty(), &w("2"), Family::S).unwrap();
    assert_eq!(ts.len(), 1);
    assert_eq!(ts[0].1, 1);
    assert_eq!(ts[0].0.render(), "1 1");
}

#[test]
fn worked_s_example() {
    let lambda = sp("3,1;2,1,1");
    let ts = enumerate(&lambda, &empty(), &w("3~,1~,1,1,1,1"), Family::S).unwrap();
    assert_eq!(ts.len(), 3);
    assert!(ts.iter().all(|(_, s)| *s == 1));
    let shown = ["1 1 1 (1)\n2 6\n3 (2)\n4\n5", "1 1 1 (1)\n2 5\n3 (2)\n4\n6", "1 1 1 (1)\n2 4\n3 (2)\n5\n6"];
    let mut got: Vec<String> = ts.iter().map(|(t, _)| t.render()).collect();
    got.sort();
    let mut want = shown.map(String::from).to_vec();
    want.sort();
    assert_eq!(got, want);
    let ts = enumerate(&lambda, &empty(), &w("3~,1~,2,1,1"), Family::S).unwrap();
    assert_eq!(ts.len(), 1);
    assert_eq!(ts[0].0.render(), "1 1 1 (1)\n2 3\n3 (2)\n4\n5");
    assert!(ts[0].0.render_latex().starts_with("\\tableau[scY]{1&1&1&\\bl\\tcercle{1}\\\\2&3"));
}

#[test]
fn worked_sbar_example() {
    let ts = enumerate(&sp("2,0;3"), &empty(), &w("1~,0~,2,1,1"), Family::SBar).unwrap();
    assert_eq!(ts.len(), 2);
    assert_eq!(ts.iter().map(|(_, s)| *s as i64).sum::<i64>(), 2);
}

#[test]
fn inconsistent_weight_is_empty() {
    assert!(enumerate(&sp(";2"), &empty(), &w("1"), Family::S).unwrap().is_empty());
    assert!(enumerate(&sp("1;"), &empty(), &w("1"), Family::S).unwrap().is_empty());
    assert!(enumerate(&sp(";2"), &empty(), &w("2"), Family::SStar).is_err());
}

#[test]
fn long_s_example_reconstructs() {
    // weight (1,3~,1,3~,1,3) on (2,0;5,3,2)
    let f: Filling = "1 2 2 3 4\n2 4 6\n4 5 (4)\n6 6\n(2)".parse().unwrap();
    let chain = reconstruct(&f, &empty(), 6, Family::S).unwrap();
    let want: Vec<SuperPartition> = ["", ";1", "3;1", "1;4", "2,1;5", "2,0;5,2", "2,0;5,3,2"]
        .iter()
        .map(|t| if t.is_empty() { empty() } else { sp(t) })
        .collect();
    assert_eq!(chain, want);
    let ts = enumerate(&sp("2,0;5,3,2"), &empty(), &w("1,3~,1,3~,1,3"), Family::S).unwrap();
    let t = ts.iter().find(|(t, _)| t.chain == want).expect("listed");
    assert_eq!(t.0.filling(), f);
}

#[test]
fn long_sbar_example_reconstructs() {
    // weight (3,1~,2~,1,3~,5,0~)
    let f: Filling = "1 1 1 5 6 6 (5)\n2 3 4 6 (7)\n3 5 6 (3)\n5 6 (2)".parse().unwrap();
    let chain = reconstruct(&f, &empty(), 7, Family::SBar).unwrap();
    let lambda = f.shape().unwrap();
    assert_eq!(chain.last(), Some(&lambda));
    let ts = enumerate(&lambda, &empty(), &w("3,1~,2~,1,3~,5,0~"), Family::SBar).unwrap();
    let t = ts.iter().find(|(t, _)| t.chain == chain).expect("listed");
    assert_eq!(t.0.filling(), f);
}

#[test]
fn generating_function_is_schur() {
    assert_eq!(generating_function(&sp("3,1;2,1,1"), &empty(), Family::S).unwrap(), schur(&sp("3,1;2,1,1"), Family::S));
    for n in 0..=5 {
        for m in 0..=2 {
            for l in SuperPartition::all(n, m) {
                for fam in [Family::S, Family::SBar] {
                    assert_eq!(generating_function(&l, &empty(), fam).unwrap(), schur(&l, fam), "{fam} {l}");
                }
            }
        }
    }
}

#[test]
fn generating_function_is_skew() {
    let got = generating_function(&sp(";2,1"), &sp(";1"), Family::S).unwrap();
    let want =
        SymSuperFunc::from_terms(Basis::M, [(sp(";2"), Coefficient::one()), (sp(";1,1"), Coefficient::from_int(2))]);
    assert_eq!(got, want);
    let mut negative = false;
    for n in 1..=4 {
        for m in 0..=2 {
            for l in SuperPartition::all(n, m) {
                for o in [sp(";1"), sp("0;"), sp("1;"), sp("0;1")] {
                    for fam in [Family::S, Family::SBar] {
                        let g = generating_function(&l, &o, fam).unwrap();
                        assert_eq!(g, to_m(&skew(&l, &o, fam).unwrap()), "{fam} {l}/{o}");
                        negative |= g.terms().any(|(_, c)| *c < Coefficient::zero());
                    }
                }
            }
        }
    }
    assert!(negative, "some skew coefficient should be negative");
}

#[test]
fn kostka_matches_tableaux() {
    for n in 0..=4 {
        for m in 0..=2 {
            let kbar = kostka(n, m, KostkaKind::KBar);
            let k = kostka(n, m, KostkaKind::K);
            for l in SuperPartition::all(n, m) {
                for g in SuperPartition::all(n, m) {
                    let wt = weight_of(&g);
                    assert_eq!(signed_count(&l, &empty(), &wt, Family::S).unwrap(), kbar.get(&l, &g));
                    assert_eq!(signed_count(&l, &empty(), &wt, Family::SBar).unwrap(), k.get(&l, &g));
                }
            }
        }
    }
}

#[test]
fn step_signs_match_circle_words_and_fillings_round_trip() {
    let mut checked = 0;
    for n in 0..=4 {
        for m in 0..=2 {
            for g in SuperPartition::all(n, m) {
                let weight = weight_of(&g);
                for inner in [empty(), sp("0;"), sp(";1")] {
                    for fam in [Family::S, Family::SBar] {
                        for t in enumerate_from(&inner, &weight, fam).unwrap() {
                            assert_eq!(t.step_sign(), t.sign(), "{fam} {:?}", t.chain);
                            let f: Filling = t.render().parse().unwrap();
                            assert_eq!(f, t.filling());
                            let chain = reconstruct(&f, &inner, weight.len(), fam).unwrap();
                            assert_eq!(chain, t.chain, "{fam}\n{}", t.render());
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

/// Sequences of letters of total size n with m fermionic ones; bosonic
/// letters are positive.
fn weights(n: usize, m: usize) -> Vec<Vec<Letter>> {
    fn rec(n: usize, m: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if n == 0 && m == 0 {
            out.push(cur.clone());
        }
        if m > 0 {
            for v in 0..=n {
                cur.push(Letter::fermionic(v));
                rec(n - v, m - 1, cur, out);
                cur.pop();
            }
        }
        for v in 1..=n {
            cur.push(Letter::bosonic(v));
            rec(n - v, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

#[test]
fn weight_symmetry() {
    for n in 0..=5 {
        for m in 0..=2 {
            for weight in weights(n, m) {
                for fam in [Family::S, Family::SBar] {
                    let base = signed_counts(&empty(), &weight, fam).unwrap();
                    for i in 0..weight.len().saturating_sub(1) {
                        let mut swapped = weight.clone();
                        swapped.swap(i, i + 1);
                        let got = signed_counts(&empty(), &swapped, fam).unwrap();
                        let flip = if weight[i].is_fermionic() && weight[i + 1].is_fermionic() { -1 } else { 1 };
                        let want: BTreeMap<_, _> = base.iter().map(|(k, v)| (k.clone(), v * flip)).collect();
                        assert_eq!(got, want, "{fam} {} swap {i}", weight_to_text(&weight));
                    }
                }
            }
        }
    }
}

#[test]
fn fermionic_first_weights_have_positive_signs() {
    for n in 0..=5 {
        for m in 0..=2 {
            for g in SuperPartition::all(n, m) {
                for fam in [Family::S, Family::SBar] {
                    for t in enumerate_from(&empty(), &weight_of(&g), fam).unwrap() {
                        assert_eq!(t.sign(), 1, "{fam}\n{}", t.render());
                    }
                }
            }
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_weight() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0usize..=3, any::<bool>()), 0..=4).prop_map(|v| {
            v.into_iter().map(|(x, f)| if f { Letter::fermionic(x) } else { Letter::bosonic(x) }).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn any_swap_acts_by_the_expected_sign(weight in arb_weight(), i in 0usize..4, j in 0usize..4, bar in any::<bool>()) {
            prop_assume!(i < j && j < weight.len());
            let fam = if bar { Family::SBar } else { Family::S };
            let base = signed_counts(&empty(), &weight, fam).unwrap();
            let mut swapped = weight.clone();
            swapped.swap(i, j);
            // moving letter i past letters i+1..j and back is 2(j−i)−1 adjacent swaps
            let f = |k: usize| weight[k].is_fermionic();
            let mut odd = f(i) && f(j);
            for k in i + 1..j {
                if f(k) && (f(i) != f(j)) {
                    odd = !odd;
                }
            }
            let sign = if odd { -1 } else { 1 };
            let want: BTreeMap<_, _> = base.iter().map(|(k, v)| (k.clone(), v * sign)).collect();
            prop_assert_eq!(signed_counts(&empty(), &swapped, fam).unwrap(), want);
        }

        #[test]
        fn step_signs_agree_with_words(weight in arb_weight(), bar in any::<bool>()) {
            let fam = if bar { Family::SBar } else { Family::S };
            for t in enumerate_from(&empty(), &weight, fam).unwrap() {
                prop_assert_eq!(t.step_sign(), t.sign());
                prop_assert_eq!(t.outer().m(), weight.iter().filter(|l| l.is_fermionic()).count());
            }
        }
    }
}
