//! Benchmarks for the hot paths: subset rank kernels, connectivity sweeps,
//! census classification, and isomorphism search.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use matroid_core::catalog;
use matroid_core::census;
use matroid_core::connectivity::{connectivities_in, is_vertically_k_connected_in};
use matroid_core::iso;
use matroid_core::SplitMix64;

fn rank_kernels(c: &mut Criterion) {
    let n9 = catalog::n9();
    let mk5 = catalog::mk5();
    let full_n9 = n9.full_mask().bits();
    // memoized table path, the kernel under every sweep
    c.bench_function("rank_bits_n9_all_subsets", |b| {
        b.iter(|| {
            let mut acc = 0u32;
            for x in 0..=full_n9 {
                acc = acc.wrapping_add(n9.rank_bits(black_box(x)));
            }
            acc
        })
    });
    // raw elimination without the table
    c.bench_function("matrix_rank_mk5_random_subsets", |b| {
        let matrix = mk5.matrix();
        let mut rng = SplitMix64::new(7);
        b.iter(|| {
            let mask = (rng.next_u64() as u32) & mk5.full_mask().bits();
            matrix.rank_of_columns(black_box(mask))
        })
    });
}

fn connectivity_sweeps(c: &mut Criterion) {
    let n9 = catalog::n9();
    let p8 = catalog::p8();
    c.bench_function("connectivities_n9", |b| {
        b.iter(|| connectivities_in(&n9, black_box(n9.full_mask().bits())))
    });
    c.bench_function("vertical_4_check_p8", |b| {
        b.iter(|| is_vertically_k_connected_in(&p8, black_box(p8.full_mask().bits()), 4))
    });
}

fn census_slice(c: &mut Criterion) {
    let points = census::projective_points(2, 4).expect("constant parameters");
    // a contiguous band of sweep keys around ten-element subsets
    c.bench_function("classify_sweep_band", |b| {
        b.iter(|| {
            let mut spanning = 0u32;
            for key in 0x2f00u64..0x2f40 {
                let m = census::point_matroid(2, &points, black_box(key)).unwrap();
                if m.full_rank() == 4 {
                    let (v, _) = connectivities_in(&m, m.full_mask().bits());
                    spanning += u32::from(v.at_least(4));
                }
            }
            spanning
        })
    });
    c.bench_function("sample_ternary_rank4_n10", |b| {
        b.iter(|| census::sample_ternary(4, 10, black_box(4), 99).unwrap().records.len())
    });
}

fn isomorphism(c: &mut Criterion) {
    let n9 = catalog::n9();
    let p8 = catalog::p8();
    let ag = catalog::ag23_minus_e();
    c.bench_function("iso_n9_deletion_vs_p8", |b| {
        b.iter(|| {
            let d = n9.delete(matroid_core::SubsetMask::singleton(0, 9));
            iso::are_isomorphic(black_box(&d), &p8).unwrap()
        })
    });
    c.bench_function("iso_negative_p8_vs_ag23e", |b| {
        b.iter(|| iso::are_isomorphic(black_box(&p8), &ag).unwrap())
    });
}

criterion_group!(benches, rank_kernels, connectivity_sweeps, census_slice, isomorphism);
criterion_main!(benches);
