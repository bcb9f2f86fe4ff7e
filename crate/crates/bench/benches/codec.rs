use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dnalabel::analysis::brute_force_m_ell;
use dnalabel::catalogs::make_reference;
use dnalabel::constrained::{eta_closed_form, eta_dp};
use dnalabel::labeling::label_set;
use dnalabel::LabelingCodec;
use num_bigint::BigUint;

fn codec(c: &mut Criterion) {
    let mut group = c.benchmark_group("codec");
    for (n, ell) in [(256, 4), (1024, 5), (4096, 6)] {
        let reference = make_reference(n, ell).unwrap();
        let codec = LabelingCodec::new(reference.sequence.clone(), ell).unwrap();
        let message = codec.capacity() / BigUint::from(3u8);
        let codeset = codec.encode(&message).unwrap();
        let output = label_set(&reference.sequence, &codeset);
        let id = format!("n={n},ell={ell}");
        group.bench_function(BenchmarkId::new("encode", &id), |b| {
            b.iter(|| codec.encode(black_box(&message)).unwrap())
        });
        group.bench_function(BenchmarkId::new("label", &id), |b| {
            b.iter(|| label_set(black_box(&reference.sequence), black_box(&codeset)))
        });
        group.bench_function(BenchmarkId::new("decode", &id), |b| {
            b.iter(|| codec.decode(black_box(&output)).unwrap())
        });
    }
    group.finish();
}

fn eta(c: &mut Criterion) {
    let mut group = c.benchmark_group("eta");
    for n in [256, 1024, 4096] {
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| eta_closed_form(n, 3))
        });
        group.bench_with_input(BenchmarkId::new("dp", n), &n, |b, &n| {
            b.iter(|| eta_dp(n, 3))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let seq = make_reference(8, 2).unwrap().sequence;
    c.bench_function("oracle/M_ell n=8 ell=2", |b| {
        b.iter(|| brute_force_m_ell(black_box(&seq), 2).unwrap())
    });
}

criterion_group!(benches, codec, eta, oracle);
criterion_main!(benches);
