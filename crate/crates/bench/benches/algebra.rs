use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gint_bench::{cyclic_cubics, skew_lines_and_line, twisted_cubic};
use gint_core::buchberger;
use gint_core::modalg::{ext_dims, quotient_module, tensor_over_ring};
use gint_core::resolve::minimal_resolution;

fn groebner(c: &mut Criterion) {
    let tc = twisted_cubic();
    c.bench_function("gb twisted cubic", |b| b.iter(|| buchberger(black_box(&tc)).unwrap()));
    let cy = cyclic_cubics();
    c.bench_function("gb cyclic cubics", |b| b.iter(|| buchberger(black_box(&cy)).unwrap()));
}

fn resolution(c: &mut Criterion) {
    let tc = twisted_cubic();
    c.bench_function("resolve twisted cubic", |b| {
        b.iter(|| minimal_resolution(&quotient_module(black_box(&tc)).unwrap()).unwrap())
    });
    c.bench_function("resolve skew lines in 6 vars", |b| {
        b.iter(|| minimal_resolution(&skew_lines_and_line(6).0).unwrap())
    });
}

fn tensor_and_ext(c: &mut Criterion) {
    c.bench_function("tensor skew lines", |b| {
        b.iter(|| {
            let (m, n) = skew_lines_and_line(4);
            tensor_over_ring(&m, &n).unwrap()
        })
    });
    c.bench_function("ext skew lines in 6 vars", |b| {
        b.iter(|| ext_dims(&skew_lines_and_line(6).0).unwrap())
    });
}

criterion_group!(benches, groebner, resolution, tensor_and_ext);
criterion_main!(benches);
