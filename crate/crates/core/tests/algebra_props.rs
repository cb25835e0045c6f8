mod common;

use common::*;
use proptest::prelude::*;
use reclift::algebra::QuiverPresentation;
use reclift::Mat;

/// Number of paths in an acyclic quiver, including trivial ones, by
/// dynamic programming over path length.
fn count_paths(nv: usize, arrows: &[(usize, usize)]) -> usize {
    let mut total = nv;
    let mut ending: Vec<usize> = vec![1; nv];
    for _ in 0..nv {
        let mut next = vec![0; nv];
        for &(s, t) in arrows {
            next[t] += ending[s];
        }
        total += next.iter().sum::<usize>();
        ending = next;
    }
    total
}

prop_compose! {
    /// Random acyclic quiver: arrows only go from lower to higher vertex.
    fn acyclic()(nv in 1usize..5)(
        nv in Just(nv),
        arrows in prop::collection::vec((0usize..4, 0usize..4), 0..5)
    ) -> (usize, Vec<(usize, usize)>) {
        let arrows = arrows
            .into_iter()
            .filter(|(s, t)| s < t && *t < nv)
            .collect();
        (nv, arrows)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relation_free_dimension_counts_paths((nv, arrows) in acyclic()) {
        let names: Vec<String> = (0..nv).map(|v| format!("v{v}")).collect();
        let mut q = QuiverPresentation::new(gf(3), names.clone());
        for (k, &(s, t)) in arrows.iter().enumerate() {
            q.arrow(&format!("a{k}"), &names[s], &names[t]).unwrap();
        }
        let alg = q.to_algebra().unwrap();
        prop_assert_eq!(alg.dim(), count_paths(nv, &arrows));
    }

    #[test]
    fn corner_and_complement_split(i in algebra_index(), mask in 1u32..8) {
        let alg = zoo()[i].clone();
        let nv = alg.num_vertices();
        let chosen: Vec<String> = (0..nv)
            .filter(|v| mask & (1 << v) != 0)
            .map(|v| alg.vertex_labels()[v].clone())
            .collect();
        prop_assume!(!chosen.is_empty());
        let refs: Vec<&str> = chosen.iter().map(String::as_str).collect();
        let e = alg.idempotent_sum(&refs).unwrap();
        prop_assert!(alg.is_idempotent(&e));
        let corner = alg.corner(&e).unwrap();
        // eΛe is the image of x ↦ exe
        let exe = alg.left_mult_by(&e).mul(&alg.right_mult_by(&e));
        prop_assert_eq!(corner.algebra.dim(), exe.rank());
        prop_assert_eq!(corner.retraction.mul(&corner.embedding), Mat::identity(alg.field(), corner.algebra.dim()));
        let ideal = alg.two_sided_ideal(&e).unwrap();
        let (quot, pi) = alg.quotient(&ideal).unwrap();
        prop_assert_eq!(quot.dim() + ideal.rank(), alg.dim());
        pi.verify().unwrap();
    }

    #[test]
    fn radical_is_nilpotent(i in algebra_index()) {
        let alg = zoo()[i].clone();
        let rad = alg.require_radical().unwrap().clone();
        // the span of products of k radical elements shrinks to zero
        let mut span = rad.clone();
        let mut steps = 0;
        while span.cols() > 0 {
            let mut cols = Vec::new();
            for a in 0..rad.cols() {
                for b in 0..span.cols() {
                    cols.push(alg.mul(&rad.col(a), &span.col(b)));
                }
            }
            span = Mat::from_columns(alg.field(), alg.dim(), &cols).image_basis();
            steps += 1;
            prop_assert!(steps <= alg.dim());
        }
    }

    #[test]
    fn opposite_is_an_involution_on_dimensions(i in algebra_index()) {
        let alg = zoo()[i].clone();
        let op = alg.opposite();
        prop_assert_eq!(op.dim(), alg.dim());
        let back = op.opposite();
        prop_assert_eq!(back.constants(), alg.constants());
    }
}

#[test]
fn a3_dimensions() {
    assert_eq!(a3(2, false).dim(), 6);
    assert_eq!(a3(2, true).dim(), 5);
    assert_eq!(two_cycle(2).dim(), 4);
    assert_eq!(truncated_poly3(3).dim(), 3);
}
