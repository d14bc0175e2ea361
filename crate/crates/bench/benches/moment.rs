use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hermsym::moment::{moment_chart, moment_general, moment_normal_form, PairPoint};
use hermsym::random::{random_element_scaled, seeded};
use hermsym::verify::RandomNormalForm;
use hermsym_bench::models;

fn chart(c: &mut Criterion) {
    let mut g = c.benchmark_group("moment chart");
    for model in models() {
        let x = random_element_scaled(model, 1.0, &mut seeded(2));
        g.bench_with_input(BenchmarkId::from_parameter(model), &x, |b, x| b.iter(|| moment_chart(black_box(x))));
    }
    g.finish();
}

fn general(c: &mut Criterion) {
    let mut g = c.benchmark_group("moment general at normal forms");
    for model in models() {
        let mut rng = seeded(3);
        let nf = RandomNormalForm::sample(model, &mut rng).build(&[]).unwrap();
        let point = PairPoint::from_normal_form(nf.clone());
        g.bench_with_input(BenchmarkId::new("general", model), &point, |b, p| {
            b.iter(|| moment_general(black_box(p)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("normal form", model), &nf, |b, nf| {
            b.iter(|| moment_normal_form(black_box(nf)))
        });
    }
    g.finish();
}

criterion_group!(benches, chart, general);
criterion_main!(benches);
