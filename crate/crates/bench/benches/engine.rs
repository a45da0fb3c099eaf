use std::hint::black_box;

use blowup_core::blowup::{fiber_cone, mu_power, rees_ideal};
use blowup_core::hilbert::hilbert_series;
use blowup_core::{buchberger, curve_ideal, CurveSpec, Field, Ideal, Ring};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn curve(degrees: &[u32]) -> Ideal {
    curve_ideal(&CurveSpec::new(degrees.to_vec()).unwrap(), Field::Rationals).unwrap()
}

fn family(a: u32) -> Ideal {
    let ring = Ring::standard(5, Field::Rationals);
    let gens = [
        format!("x2*x3^{a} - x0^{a}*x4 + x2^2 - x1*x3"),
        "x1*x2 - x0*x3".into(),
        "x1^2 - x0*x2".into(),
        format!("x3^{} - x0^{}*x1*x4", a + 1, a - 1),
        format!("x2*x3^{a} - x0^{a}*x4"),
    ];
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ideal::parse(&ring, &refs).unwrap()
}

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("curve_ideal");
    for deg in [[1, 2, 3, 9], [1, 2, 3, 10], [1, 2, 3, 14], [2, 3, 5, 7]] {
        let label = format!("{deg:?}");
        g.bench_with_input(BenchmarkId::from_parameter(label), &deg, |b, d| b.iter(|| curve(black_box(d))));
    }
    g.finish();

    let i = curve(&[1, 2, 3, 10]);
    let square = i.power(2);
    c.bench_function("buchberger/square_of_C(1,2,3,10)", |b| {
        b.iter(|| buchberger(square.ring(), black_box(square.gens())).unwrap())
    });
}

fn invariants(c: &mut Criterion) {
    let i = curve(&[1, 2, 3, 10]);
    let mut g = c.benchmark_group("mu_power");
    for t in 1..=3 {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| b.iter(|| mu_power(&i, t).unwrap()));
    }
    g.finish();

    let big = curve(&[1, 2, 3, 13]).power(2);
    c.bench_function("hilbert_series/square", |b| b.iter(|| hilbert_series(black_box(&big)).unwrap()));

    let mut g = c.benchmark_group("blowup");
    g.sample_size(10);
    let cubic = curve(&[1, 3, 4]);
    g.bench_function("rees_ideal/C(1,3,4)", |b| b.iter(|| rees_ideal(cubic.gens()).unwrap()));
    let inhom = family(3);
    g.bench_function("fiber_cone/inhomogeneous_generators", |b| b.iter(|| fiber_cone(inhom.gens()).unwrap()));
    g.finish();
}

criterion_group!(benches, groebner, invariants);
criterion_main!(benches);
