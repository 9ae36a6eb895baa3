use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use heckesym::intertwiners::{iterated_left_inverse, left_inverse_apply, quantum_determinant, IndexSet};
use heckesym::markov::{gram_rank, markov_trace};
use heckesym::model::{epsilon_rep, gq_operator, image_algebra_dimension};
use heckesym::special::build_a;
use heckesym::RationalScalar;
use heckesym_bench::{dense_element, longest};
use num_rational::BigRational;

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("hecke-multiply");
    for n in [3, 4, 5] {
        let a = dense_element(n);
        let b = longest(n);
        g.bench_with_input(BenchmarkId::new("dense-by-longest", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).multiply(black_box(&b)).unwrap())
        });
    }
    g.bench_function("antisymmetrizer/5", |bench| bench.iter(|| build_a(black_box(5), 5).unwrap()));
    g.finish();
}

fn traces(c: &mut Criterion) {
    let mut g = c.benchmark_group("markov");
    let lambda = RationalScalar::lambda_d(-3).unwrap();
    let h = dense_element(4);
    g.bench_function("trace/dense-4", |bench| bench.iter(|| markov_trace(black_box(&h), &lambda)));
    let q0 = BigRational::from_integer(2.into());
    let l0 = BigRational::new((-1).into(), 3.into());
    for n in [3, 4] {
        g.bench_with_input(BenchmarkId::new("gram-rank", n), &n, |bench, &n| {
            bench.iter(|| gram_rank(n, &l0, &q0))
        });
    }
    g.finish();
}

fn model(c: &mut Criterion) {
    let mut g = c.benchmark_group("model");
    g.sample_size(20);
    let a4 = build_a(4, 4).unwrap();
    for d in [2, 3] {
        g.bench_with_input(BenchmarkId::new("epsilon-A4", d), &d, |bench, &d| {
            bench.iter(|| epsilon_rep(black_box(&a4), d))
        });
    }
    let q0 = BigRational::from_integer(2.into());
    for (n, d) in [(4, 3), (5, 2), (5, 3)] {
        g.bench_with_input(BenchmarkId::new("image-dim", format!("n{}d{}", n, d)), &(n, d), |bench, &(n, d)| {
            bench.iter(|| image_algebra_dimension(n, d, &q0).unwrap())
        });
    }
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("determinant");
    g.sample_size(20);
    for d in [3, 4] {
        let idx = IndexSet::full(d);
        g.bench_with_input(BenchmarkId::new("build", d), &idx, |bench, idx| {
            bench.iter(|| quantum_determinant(black_box(idx)))
        });
        let gq = gq_operator(d);
        g.bench_with_input(BenchmarkId::new("left-inverse-g", d), &idx, |bench, idx| {
            bench.iter(|| left_inverse_apply(idx, black_box(&gq)).unwrap())
        });
    }
    let t = epsilon_rep(&dense_element(3), 3);
    g.bench_function("iterated-left-inverse/d3-n3", |bench| {
        bench.iter(|| iterated_left_inverse(3, black_box(&t)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, multiply, traces, model, determinants);
criterion_main!(benches);
