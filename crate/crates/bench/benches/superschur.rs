use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superschur::pieri::{pieri, PieriKind};
use superschur::schur::{h_in_dual, key_expansion, Family, KostkaKind};
use superschur::tableaux::{enumerate_from, weight_of};
use superschur::SuperPartition;

fn sp(text: &str) -> SuperPartition {
    text.parse().unwrap()
}

fn bench_pieri(c: &mut Criterion) {
    let lambda = sp("4,1,0;2");
    let mut g = c.benchmark_group("pieri");
    for kind in [PieriKind::SStarH, PieriKind::SStarHTilde, PieriKind::SBarE, PieriKind::SPTilde] {
        g.bench_function(kind.to_string(), |b| b.iter(|| pieri(kind, black_box(&lambda), 3)));
    }
    g.finish();
}

fn bench_key_expansion(c: &mut Criterion) {
    let mut g = c.benchmark_group("key_expansion");
    g.sample_size(20);
    for (family, lambda) in [(Family::S, "3,1;2,1,1"), (Family::SBar, "2,0;3"), (Family::S, "2,1;2,1")] {
        let l = sp(lambda);
        g.bench_function(format!("{family} {lambda}"), |b| b.iter(|| key_expansion(black_box(&l), family)));
    }
    g.finish();
}

// The matrices themselves are cached, so time the column builds directly.
fn bench_kostka(c: &mut Criterion) {
    let mut g = c.benchmark_group("kostka_columns");
    g.sample_size(10);
    for (n, m) in [(4, 1), (5, 2)] {
        let all = SuperPartition::all(n, m);
        g.bench_function(format!("({n}|{m})"), |b| {
            b.iter(|| {
                for l in &all {
                    black_box(h_in_dual(l, KostkaKind::KBar).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn bench_tableaux(c: &mut Criterion) {
    let mut g = c.benchmark_group("tableaux");
    g.sample_size(10);
    let empty = SuperPartition::empty();
    for lambda in ["2,1;2,1", "1,0;2,1,1"] {
        let weight = weight_of(&sp(lambda));
        for family in [Family::S, Family::SBar] {
            g.bench_function(format!("{family} weight {lambda}"), |b| {
                b.iter(|| enumerate_from(black_box(&empty), &weight, family).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, bench_pieri, bench_key_expansion, bench_kostka, bench_tableaux);
criterion_main!(benches);
