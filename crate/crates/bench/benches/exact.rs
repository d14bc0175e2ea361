use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hermsym::branching::decompose;
use hermsym::jordan::{bergman, triple};
use hermsym::okounkov::{build_section_space, okounkov_pipeline, Trivialization};
use hermsym::random::{random_element, seeded};
use hermsym::{Element, GaussRat, JordanModel};
use hermsym_bench::GRASSMANNIAN;

fn branching(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    for (model, k) in [(JordanModel::Rect { p: 1, q: 1 }, 20), (GRASSMANNIAN, 6), (JordanModel::Rect { p: 2, q: 3 }, 4)] {
        let par = model.parabolic().unwrap();
        g.bench_with_input(BenchmarkId::new(model.to_string(), k), &k, |b, &k| {
            b.iter(|| decompose(black_box(&par), k).unwrap())
        });
    }
    g.finish();
}

fn jordan(c: &mut Criterion) {
    let mut rng = seeded(1);
    let model = JordanModel::Rect { p: 2, q: 3 };
    let x: Element<GaussRat> = random_element(model, &mut rng);
    let y: Element<GaussRat> = random_element(model, &mut rng);
    let z: Element<GaussRat> = random_element(model, &mut rng);
    c.bench_function("triple rect:2,3 exact", |b| b.iter(|| triple(black_box(&x), &y, &z).unwrap()));
    c.bench_function("bergman rect:2,3 exact", |b| b.iter(|| bergman(black_box(&x), &y).unwrap()));
}

fn sections(c: &mut Criterion) {
    let triv = Trivialization::new(GRASSMANNIAN).unwrap();
    let mut g = c.benchmark_group("section space rect:2,2");
    g.sample_size(10);
    for k in 1..=3 {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| build_section_space(&triv, k).unwrap())
        });
    }
    g.finish();
    let mut g = c.benchmark_group("okounkov pipeline");
    g.sample_size(10);
    g.bench_function("rect:2,2 level 2", |b| b.iter(|| okounkov_pipeline(GRASSMANNIAN, 2).unwrap()));
    g.finish();
}

criterion_group!(benches, branching, jordan, sections);
criterion_main!(benches);
