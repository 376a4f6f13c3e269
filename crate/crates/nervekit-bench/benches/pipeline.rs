use criterion::{criterion_group, criterion_main, Criterion};
use std::sync::Arc;

use nervekit::bisimplicial::{diag, diag_to_total, total_complex};
use nervekit::cocycle::{enumerate_three_cocycles, BrCoefficients};
use nervekit::corpus::disc_cyclic;
use nervekit::hocolim::bisimplicial_s_br;
use nervekit::homology::{homology, normalized_complex};
use nervekit::nerves::geometric_nerve_br;
use nervekit::smith::smith_normal_form;
use nervekit::DEFAULT_BUDGET;
use nervekit_bench::{arrow_identity_diagram, dense_test_matrix};

fn bench_enumeration(c: &mut Criterion) {
    let z2 = Arc::new(disc_cyclic(2));
    c.bench_function("three_cocycles_disc_z2_n4", |b| {
        let co = BrCoefficients::constant(&z2, 4);
        b.iter(|| enumerate_three_cocycles(4, &co, DEFAULT_BUDGET).unwrap().len())
    });
}

fn bench_total_complex(c: &mut Criterion) {
    let d = arrow_identity_diagram();
    c.bench_function("total_complex_arrow_n3", |b| {
        let s = bisimplicial_s_br(&d, 3, DEFAULT_BUDGET).unwrap();
        b.iter(|| {
            let t = total_complex(&s.bis);
            let dg = diag(&s.bis);
            diag_to_total(&s.bis, &dg, &t).dims.len()
        })
    });
}

fn bench_smith(c: &mut Criterion) {
    let a = dense_test_matrix(24, 32);
    c.bench_function("smith_normal_form_24x32", |b| {
        b.iter(|| smith_normal_form(&a).rank)
    });
}

fn bench_homology(c: &mut Criterion) {
    let z2 = Arc::new(disc_cyclic(2));
    c.bench_function("geometric_nerve_h2_n4", |b| {
        let g = geometric_nerve_br(&z2, 4, DEFAULT_BUDGET).unwrap();
        b.iter(|| {
            let cc = normalized_complex(&g.space);
            homology(&cc, 2).torsion.len()
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_total_complex,
    bench_smith,
    bench_homology
);
criterion_main!(benches);
