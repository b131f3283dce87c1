use criterion::{black_box, criterion_group, criterion_main, Criterion};
use festcal_core::{
    coincides, fixed_to_hebrew, hebrew_new_year, scan_range_with, Festival, FixedDay, Predicate,
    ScanOptions,
};

fn bench_conversions(c: &mut Criterion) {
    c.bench_function("hebrew_new_year", |b| {
        b.iter(|| hebrew_new_year(black_box(5772)))
    });
    c.bench_function("fixed_to_hebrew", |b| {
        b.iter(|| fixed_to_hebrew(black_box(FixedDay(734_496))))
    });
    c.bench_function("coincides_hanukkah", |b| {
        b.iter(|| coincides(black_box(2011), Festival::HANUKKAH, Predicate::DEFAULT))
    });
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_1801_20000");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            scan_range_with(
                1801,
                20_000,
                Festival::HANUKKAH,
                Predicate::DEFAULT,
                ScanOptions::SEQUENTIAL,
            )
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            scan_range_with(
                1801,
                20_000,
                Festival::HANUKKAH,
                Predicate::DEFAULT,
                ScanOptions::default(),
            )
        })
    });
    group.finish();
}

criterion_group!(benches, bench_conversions, bench_scan);
criterion_main!(benches);
