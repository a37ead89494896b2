use std::time::Instant;

use antypes::complex::*;
use antypes::tree::{binary_unpainted, planar_trees};
use antypes::Exec;

fn sphere(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[0] += 1;
    b[d] += 1;
    b
}

#[test]
fn k5_matches_tree_counts() {
    let start = Instant::now();
    let k5 = build_k(5).unwrap();
    assert_eq!(k5.f_vector(), [14, 21, 9, 1]);
    assert_eq!(k5.f_vector()[0], binary_unpainted(5).unwrap().len());
    assert_eq!(k5.cells().len(), planar_trees(5).unwrap().len());
    assert_eq!(k5.euler_characteristic(), 1);
    eprintln!("K_5 in {:?}", start.elapsed());
}

#[test]
fn sphere_certification() {
    let start = Instant::now();
    for n in 4..=7 {
        let l = build(Family::L, n, BuildOptions::default()).unwrap();
        assert_eq!(l.homology_ranks(Exec::Parallel), sphere(n - 3), "L_{n}");
        assert_eq!(l.euler_characteristic(), 1 + (-1i64).pow(n as u32 - 3));
    }
    for n in 3..=5 {
        let h = build(Family::H, n, BuildOptions::default()).unwrap();
        assert_eq!(h.homology_ranks(Exec::Parallel), sphere(n - 2), "H_{n}");
        assert_eq!(h.euler_characteristic(), 1 + (-1i64).pow(n as u32 - 2));
    }
    eprintln!("spheres in {:?}", start.elapsed());
}

#[test]
fn solids_are_acyclic() {
    for n in 2..=7 {
        let k = build_k(n).unwrap();
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(k.cells().len(), planar_trees(n).unwrap().len());
        // one top cell, Σ_{t=2}^{n-1} (n-t+1) facets
        let f = k.f_vector();
        assert_eq!(f[n - 2], 1);
        let top = k.cells().len() - 1;
        let facets: usize = (2..n).map(|t| n - t + 1).sum();
        assert_eq!(k.boundary_of(top).len(), facets);
    }
    for n in 1..=5 {
        let j = build_j(n).unwrap();
        assert_eq!(j.euler_characteristic(), 1, "J_{n}");
        assert_eq!(j.f_vector()[n - 1], 1);
    }
    assert_eq!(build_j(4).unwrap().f_vector(), [21, 32, 13, 1]);
    assert_eq!(
        build_k(5).unwrap().homology_ranks(Exec::Sequential),
        [1, 0, 0, 0]
    );
}

#[test]
fn largest_builds() {
    let start = Instant::now();
    let k8 = build_k(8).unwrap();
    assert_eq!(k8.cells().len(), 4279);
    let j6 = build_j(6).unwrap();
    assert_eq!(j6.euler_characteristic(), 1);
    eprintln!(
        "K_8, J_6 in {:?}; J_6 f = {:?}",
        start.elapsed(),
        j6.f_vector()
    );
}

#[test]
fn generation_order_does_not_matter() {
    for (family, n) in [(Family::K, 6), (Family::J, 4), (Family::H, 4)] {
        let fwd = build(
            family,
            n,
            BuildOptions {
                exec: Exec::Parallel,
                reverse: false,
            },
        )
        .unwrap();
        let rev = build(
            family,
            n,
            BuildOptions {
                exec: Exec::Sequential,
                reverse: true,
            },
        )
        .unwrap();
        assert_eq!(export_complex(&fwd), export_complex(&rev), "{family}_{n}");
    }
}
