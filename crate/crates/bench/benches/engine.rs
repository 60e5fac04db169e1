use criterion::{black_box, criterion_group, criterion_main, Criterion};

use codewheel_core::enumerate::{canonical_form, enumerate_connected};
use codewheel_core::obstructions::minimal_code;
use codewheel_core::parse::parse_complex;
use codewheel_core::pipeline::{classify_code, ClassifyOptions};
use codewheel_core::samples;
use codewheel_core::topo::is_contractible;
use codewheel_core::wheels::{find_sprocket, find_wheel_frame, find_wire_wheel};

fn bench_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    g.bench_function("n6_k4", |b| {
        b.iter(|| enumerate_connected(black_box(6), 4..=4, None).unwrap().len())
    });
    g.bench_function("n6_pure_dim3", |b| {
        b.iter(|| enumerate_connected(black_box(6), 1..=15, Some(3)).unwrap().len())
    });
    g.bench_function("n5_all", |b| {
        b.iter(|| enumerate_connected(black_box(5), 1..=10, None).unwrap().len())
    });
    g.finish();
}

fn bench_detectors(c: &mut Criterion) {
    let cstar = samples::c_star();
    let ctl = samples::c_tl();
    let c2 = samples::c_2();
    let mut g = c.benchmark_group("wheel_search");
    g.bench_function("sprocket_c2", |b| {
        b.iter(|| find_sprocket(black_box(&c2)).is_some())
    });
    g.bench_function("wire_wheel_ctl", |b| {
        b.iter(|| find_wire_wheel(black_box(&ctl)).is_some())
    });
    g.bench_function("wheel_frame_cstar", |b| {
        b.iter(|| find_wheel_frame(black_box(&cstar)).is_some())
    });
    g.finish();
}

fn bench_classification(c: &mut Criterion) {
    let cx = parse_complex("123 145 245 246 346", None).unwrap();
    let opts = ClassifyOptions::default();
    c.bench_function("classify_minimal_ctl", |b| {
        b.iter(|| {
            let code = minimal_code(black_box(&cx)).unwrap();
            classify_code(&code, &opts).unwrap().status
        })
    });
}

fn bench_topology(c: &mut Criterion) {
    // hollow 4-simplex boundary: collapse search fails, homology decides
    let hollow = parse_complex("1234 1235 1245 1345 2345", None).unwrap();
    let path = parse_complex("15 25 26 36", None).unwrap();
    let mut g = c.benchmark_group("topology");
    g.bench_function("contractibility_hollow4", |b| {
        b.iter(|| is_contractible(black_box(&hollow)).unwrap())
    });
    g.bench_function("contractibility_path", |b| {
        b.iter(|| is_contractible(black_box(&path)).unwrap())
    });
    g.bench_function("canonical_form_ctl", |b| {
        let cx = parse_complex("123 145 245 246 346", None).unwrap();
        b.iter(|| canonical_form(black_box(&cx)).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_detectors,
    bench_classification,
    bench_topology
);
criterion_main!(benches);
