//! Cross-module checks: even subgroups against brute-force enumeration,
//! and graph automorphism groups against the parity subgroups predicted by
//! the case table, with every predicted set rebuilt by filtering the full
//! group rather than reusing the closure machinery.

use rigidspace_core::perm::enumerate_signed;
use rigidspace_core::topo::{aut_group_double, aut_group_simple, enumerate_plain, verify_case};
use rigidspace_core::{
    BitVector, CaseLabel, EvenSubgroup, FactorizedGraph, GraphShape, IntervalPartition, NodeKind,
};

fn all_vectors(n: usize) -> Vec<BitVector> {
    (0..1u32 << n)
        .map(|mask| {
            let bits: Vec<u8> = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
            let s: String = bits.iter().map(|b| char::from(b'0' + b)).collect();
            s.parse().unwrap()
        })
        .collect()
}

#[test]
fn syndrome_kernels_match_enumeration_for_every_variant() {
    for n in 1..=6usize {
        let mut subgroups = vec![
            EvenSubgroup::trivial(n).unwrap(),
            EvenSubgroup::plus(n).unwrap(),
            EvenSubgroup::full(n).unwrap(),
        ];
        if n >= 2 {
            let sizes = if n == 2 { vec![1, 1] } else { vec![2, n - 2] };
            let part = IntervalPartition::new(sizes).unwrap();
            subgroups.push(EvenSubgroup::blockwise(part).unwrap());
        }
        for h in subgroups {
            let kernel: Vec<BitVector> = all_vectors(n)
                .into_iter()
                .filter(|v| h.syndrome(v).unwrap().is_zero())
                .collect();
            let mut enumerated = h.enumerate().unwrap();
            enumerated.sort();
            let mut kernel = kernel;
            kernel.sort();
            assert_eq!(kernel, enumerated, "{h}");
            assert_eq!(h.order(), enumerated.len(), "{h}");
            assert_eq!(h.order() * h.coset_count(), 1 << n, "{h}");
        }
    }
}

#[test]
fn coset_counts_by_variant() {
    for n in 1..=6usize {
        assert_eq!(EvenSubgroup::trivial(n).unwrap().coset_count(), 1 << n);
        assert_eq!(EvenSubgroup::plus(n).unwrap().coset_count(), 2);
        assert_eq!(EvenSubgroup::full(n).unwrap().coset_count(), 1);
    }
    for sizes in [vec![2usize, 2], vec![2, 1, 3], vec![1, 1, 1, 1]] {
        let m = sizes.len();
        let h = EvenSubgroup::blockwise(IntervalPartition::new(sizes).unwrap()).unwrap();
        assert_eq!(h.coset_count(), 1 << m);
    }
}

#[test]
fn induced_factorization_shapes() {
    // Trivial: one class per axis (a signed pair in the double kind, since
    // the mod-2 syndrome cannot see signs). Plus: basepoint plus one big
    // class. Blockwise: basepoint plus one class per block. Full: a single
    // class.
    let n = 4;
    let part = IntervalPartition::new(vec![2, 2]).unwrap();
    for kind in [NodeKind::Double, NodeKind::Simple] {
        let node_count = match kind {
            NodeKind::Double => 2 * n + 1,
            NodeKind::Simple => n + 1,
        };
        let f = EvenSubgroup::trivial(n).unwrap().induced_factorization(kind).unwrap();
        assert_eq!(f.class_count(), n + 1);
        if kind == NodeKind::Double {
            assert_eq!(f.classes()[1], vec![1, -1]);
        }
        let f = EvenSubgroup::plus(n).unwrap().induced_factorization(kind).unwrap();
        assert_eq!(f.class_count(), 2);
        assert_eq!(f.classes()[0], vec![0]);
        let f = EvenSubgroup::blockwise(part.clone())
            .unwrap()
            .induced_factorization(kind)
            .unwrap();
        assert_eq!(f.class_count(), 1 + part.block_count());
        assert_eq!(f.classes()[0], vec![0]);
        let f = EvenSubgroup::full(n).unwrap().induced_factorization(kind).unwrap();
        assert_eq!(f.class_count(), 1);
        assert_eq!(f.classes()[0].len(), node_count);
    }
}

#[test]
fn double_case_table_against_filtered_kernels() {
    for n in 2..=4usize {
        let full: Vec<_> = enumerate_signed(n).unwrap();

        let axes = FactorizedGraph::canonical(NodeKind::Double, n, &GraphShape::Axes).unwrap();
        let got = aut_group_double(&axes, 1 << 16).unwrap();
        let want: Vec<_> = full
            .iter()
            .filter(|p| p.negative_parity() == 1)
            .cloned()
            .collect();
        assert!(got.set_equals(&want), "axes, n = {n}");

        let one = FactorizedGraph::canonical(NodeKind::Double, n, &GraphShape::One).unwrap();
        let got = aut_group_double(&one, 1 << 16).unwrap();
        let want: Vec<_> = full.iter().filter(|p| p.det() == 1).cloned().collect();
        assert!(got.set_equals(&want), "one, n = {n}");

        let point = FactorizedGraph::canonical(NodeKind::Double, n, &GraphShape::Point).unwrap();
        let got = aut_group_double(&point, 1 << 16).unwrap();
        assert!(got.set_equals(&full), "point, n = {n}");
    }
}

#[test]
fn blockwise_case_table_entries() {
    // For these partitions the generated group is the whole signed
    // permutation group, strictly larger than the blockwise parity kernel.
    for (sizes, n, order) in [(vec![2usize, 1], 3usize, 48usize), (vec![2, 2], 4, 384)] {
        let part = IntervalPartition::new(sizes).unwrap();
        let shape = GraphShape::Blocks(part.clone());
        let g = FactorizedGraph::canonical(NodeKind::Double, n, &shape).unwrap();
        let report = verify_case(&g, 1 << 16).unwrap();
        assert_eq!(report.label, Some(CaseLabel::PnPm(part)));
        assert_eq!(report.computed_order, order);
        assert_eq!(report.expected_order, Some(order));
        assert_eq!(report.set_equal, Some(true));
        assert!(!report.preserves_classes);
    }
}

#[test]
fn simple_case_table_against_filtered_kernels() {
    for n in 2..=5usize {
        let full: Vec<_> = enumerate_plain(n).unwrap();

        let one = FactorizedGraph::canonical(NodeKind::Simple, n, &GraphShape::One).unwrap();
        let got = aut_group_simple(&one, 1 << 16).unwrap();
        let want: Vec<_> = full.iter().filter(|p| p.sign() == 1).cloned().collect();
        assert!(got.set_equals(&want), "one, n = {n}");
        assert_eq!(got.order(), [0, 1, 1, 3, 12, 60][n], "alternating order, n = {n}");

        let point = FactorizedGraph::canonical(NodeKind::Simple, n, &GraphShape::Point).unwrap();
        let got = aut_group_simple(&point, 1 << 16).unwrap();
        assert!(got.set_equals(&full), "point, n = {n}");
    }
}

#[test]
fn case_reports_carry_orders_and_labels() {
    let g = FactorizedGraph::canonical(NodeKind::Double, 3, &GraphShape::Axes).unwrap();
    let r = verify_case(&g, 1 << 16).unwrap();
    assert_eq!(r.label, Some(CaseLabel::PnMinus));
    assert_eq!(r.computed_order, 24);
    assert_eq!(r.set_equal, Some(true));
    assert!(r.preserves_classes);

    let g = FactorizedGraph::canonical(NodeKind::Simple, 4, &GraphShape::One).unwrap();
    let r = verify_case(&g, 1 << 16).unwrap();
    assert_eq!(r.label, Some(CaseLabel::SnPlus));
    assert_eq!(r.computed_order, 12);
    assert_eq!(r.set_equal, Some(true));
    assert!(r.preserves_classes);
}
