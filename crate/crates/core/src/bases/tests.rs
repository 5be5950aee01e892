use super::*;
use crate::superpartition::sp;
use proptest::prelude::*;

fn c(v: i64) -> Coefficient {
    Coefficient::from_int(v)
}

fn m_terms(f: &SymSuperFunc) -> Vec<(String, i64)> {
    to_m(f).terms().map(|(k, v)| (k.to_text(), v.to_i64().unwrap())).collect()
}

fn generator_poly(basis: Basis, k: usize, fermionic: bool, nvars: usize) -> SuperPolynomial {
    realize_func(&generator_in_m(basis, k, fermionic).unwrap(), nvars)
}

#[test]
fn realize_examples() {
    let t = realize(&sp("0;"), Basis::M, 2);
    assert_eq!(t, SuperPolynomial::theta(2, 1).add(&SuperPolynomial::theta(2, 2)));
    let p = realize(&sp("1;"), Basis::P, 2);
    let want = SuperPolynomial::term(&[1, 0], &[1], c(1)).add(&SuperPolynomial::term(&[0, 1], &[2], c(1)));
    assert_eq!(p, want);
    let h = SymSuperFunc::element(Basis::H, sp("1;"));
    assert_eq!(m_terms(&h), vec![("1;".to_string(), 2), ("0;1".to_string(), 1)]);
    // classical elements
    assert_eq!(m_terms(&SymSuperFunc::element(Basis::H, sp(";2"))), vec![(";2".into(), 1), (";1,1".into(), 1)]);
}

#[test]
fn to_monomial_examples() {
    let sum = realize(&sp("0;"), Basis::M, 4);
    assert_eq!(to_monomial(&sum).unwrap(), SymSuperFunc::element(Basis::M, sp("0;")));
    let e2 = realize(&sp(";2"), Basis::E, 3);
    assert_eq!(to_monomial(&e2).unwrap(), SymSuperFunc::element(Basis::M, sp(";1,1")));
    let prod = generator_poly(Basis::H, 1, true, 3).mul(&generator_poly(Basis::H, 1, false, 3));
    let got = to_monomial(&prod).unwrap();
    assert_eq!(got.coeff(&sp("2;")), c(2));
    // θ_1x_1x_2 arises as 2θ_1x_1·x_2 and as θ_1x_2·x_1
    assert_eq!(got.coeff(&sp("1;1")), c(3));
    assert_eq!(got, SymSuperFunc::element(Basis::H, sp("1;1")).mul(&SymSuperFunc::one(Basis::M)));
    assert_eq!(to_monomial(&SuperPolynomial::theta(2, 1)), Err(Error::NotSymmetric));
}

#[test]
fn convert_examples() {
    let p1 = SymSuperFunc::element(Basis::P, sp(";1"));
    assert_eq!(convert(&p1, Basis::M).unwrap(), SymSuperFunc::element(Basis::M, sp(";1")));
    let m11 = SymSuperFunc::element(Basis::M, sp(";1,1"));
    assert_eq!(convert(&m11, Basis::E).unwrap(), SymSuperFunc::element(Basis::E, sp(";2")));
    let h2 = convert(&SymSuperFunc::element(Basis::H, sp(";2")), Basis::M).unwrap();
    assert_eq!(h2, SymSuperFunc::from_terms(Basis::M, [(sp(";2"), c(1)), (sp(";1,1"), c(1))]));
}

#[test]
fn conversions_round_trip() {
    for (n, m) in [(3, 0), (2, 1), (3, 1), (3, 2), (4, 2), (3, 3)] {
        for target in Basis::ALL {
            for l in SuperPartition::all(n, m) {
                let f = SymSuperFunc::element(Basis::M, l.clone());
                let there = convert(&f, target).unwrap();
                assert_eq!(convert(&there, Basis::M).unwrap(), f, "{target} {l}");
                let g = SymSuperFunc::element(target, l.clone());
                assert_eq!(convert(&to_m(&g), target).unwrap(), g, "{target} {l}");
            }
        }
    }
}

#[test]
fn d_operator_on_generators() {
    let n = 3;
    let p1 = realize(&sp(";1"), Basis::P, n);
    assert_eq!(d_operator(&p1), realize(&sp("0;"), Basis::P, n));
    for k in 0..=3 {
        let dp = d_operator(&generator_poly(Basis::P, k + 1, false, n));
        assert_eq!(dp, generator_poly(Basis::P, k, true, n).scale(&Coefficient::from(k + 1)), "p {k}");
        for b in [Basis::E, Basis::H] {
            assert_eq!(d_operator(&generator_poly(b, k + 1, false, n)), generator_poly(b, k, true, n), "{b} {k}");
        }
    }
}

#[test]
fn omega_examples() {
    let p2 = SymSuperFunc::element(Basis::P, sp(";2"));
    assert_eq!(omega(&p2).unwrap(), p2.neg());
    let pt1 = SymSuperFunc::element(Basis::P, sp("1;"));
    assert_eq!(omega(&pt1).unwrap(), pt1.neg());
    let h2 = SymSuperFunc::element(Basis::H, sp(";2"));
    assert_eq!(convert(&omega(&h2).unwrap(), Basis::E).unwrap(), SymSuperFunc::element(Basis::E, sp(";2")));
}

#[test]
fn omega_sends_h_to_e_and_is_an_involution() {
    for (n, m) in [(2, 0), (3, 1), (4, 1), (3, 2), (4, 2)] {
        for l in SuperPartition::all(n, m) {
            let h = SymSuperFunc::element(Basis::H, l.clone());
            let e = SymSuperFunc::element(Basis::E, l.clone());
            assert_eq!(to_m(&omega(&h).unwrap()), to_m(&e), "{l}");
            for b in Basis::ALL {
                let f = SymSuperFunc::element(b, l.clone());
                assert_eq!(omega(&omega(&f).unwrap()).unwrap(), f, "{b} {l}");
            }
        }
    }
}

#[test]
fn scalar_product_examples() {
    let p2 = SymSuperFunc::element(Basis::P, sp(";2"));
    assert_eq!(scalar_product(&p2, &p2).unwrap(), c(2));
    let f = SymSuperFunc::element(Basis::P, sp("1;1"));
    assert_eq!(scalar_product(&f, &f).unwrap(), c(1));
}

#[test]
fn h_and_m_are_dual() {
    for n in 0..=5 {
        for m in 0..=2 {
            let all = SuperPartition::all(n, m);
            for l in &all {
                let h = SymSuperFunc::element(Basis::H, l.clone());
                for o in &all {
                    let mo = SymSuperFunc::element(Basis::M, o.clone());
                    let want = if l == o { c(1) } else { c(0) };
                    assert_eq!(scalar_product(&h, &mo).unwrap(), want, "{l} {o}");
                }
            }
        }
    }
}

#[test]
fn realize_is_multiplicative() {
    for (n, m) in [(3, 1), (3, 2), (4, 2), (3, 3)] {
        let nv = SuperPartition::max_rows(n, m);
        for b in [Basis::P, Basis::E, Basis::H] {
            for l in SuperPartition::all(n, m) {
                let mut prod = SuperPolynomial::one(nv);
                for &k in l.fermionic() {
                    prod = prod.mul(&generator_poly(b, k, true, nv));
                }
                for &r in l.bosonic().parts() {
                    prod = prod.mul(&generator_poly(b, r, false, nv));
                }
                assert_eq!(realize(&l, b, nv), prod, "{b} {l}");
            }
        }
    }
}

#[test]
fn to_monomial_is_stable_in_the_number_of_variables() {
    for (n, m) in [(3, 1), (3, 2)] {
        let nv = SuperPartition::max_rows(n, m);
        for l in SuperPartition::all(n, m) {
            for b in [Basis::E, Basis::H, Basis::S] {
                let a = to_monomial(&realize(&l, b, nv)).unwrap();
                let z = to_monomial(&realize(&l, b, nv + 1)).unwrap();
                assert_eq!(a, z, "{b} {l}");
                assert_eq!(a, to_m(&SymSuperFunc::element(b, l.clone())));
            }
        }
    }
    let few = realize(&sp("1,0;1"), Basis::M, 4);
    assert!(matches!(to_monomial(&few.mul(&few.add(&few))), Ok(_) | Err(Error::TooFewVariables { .. })));
}

#[test]
fn generator_products_are_normal_ordered() {
    let f = generator_product(Basis::P, &[0, 1], &[2]).unwrap();
    assert_eq!(f, SymSuperFunc::element(Basis::P, sp("1,0;2")).neg());
    assert!(generator_product(Basis::E, &[1, 1], &[]).unwrap().is_zero());
    // agrees with multiplying the generators in the given order
    let lhs = to_m(&f);
    let rhs = generator_in_m(Basis::P, 0, true)
        .unwrap()
        .mul(&generator_in_m(Basis::P, 1, true).unwrap())
        .mul(&generator_in_m(Basis::P, 2, false).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn cache_does_not_change_results() {
    let l = sp("2,0;1,1");
    let with: Vec<_> = Basis::ALL.iter().map(|&b| to_m(&SymSuperFunc::element(b, l.clone()))).collect();
    set_cache_enabled(false);
    let without: Vec<_> = Basis::ALL.iter().map(|&b| to_m(&SymSuperFunc::element(b, l.clone()))).collect();
    set_cache_enabled(true);
    assert_eq!(with, without);
}

fn arb_func() -> impl Strategy<Value = SymSuperFunc> {
    let all = SuperPartition::all(3, 1);
    let k = all.len();
    (prop::collection::vec((0..k, -3i64..=3), 1..4), 0..Basis::ALL.len()).prop_map(move |(terms, b)| {
        SymSuperFunc::from_terms(Basis::ALL[b], terms.into_iter().map(|(i, v)| (all[i].clone(), c(v))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn omega_is_an_isometry(f in arb_func(), g in arb_func()) {
        let lhs = scalar_product(&omega(&f).unwrap(), &omega(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, scalar_product(&f, &g).unwrap());
    }

    #[test]
    fn scalar_product_is_bilinear(f in arb_func(), g in arb_func(), h in arb_func(), k in -3i64..=3) {
        let fg = f.add(&g.scale(&c(k))).unwrap();
        let lhs = scalar_product(&fg, &h).unwrap();
        let rhs = scalar_product(&f, &h).unwrap() + c(k) * scalar_product(&g, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
