//! The claim catalog behind `verify` and `embed`.
//!
//! Each claim recomputes a fact from scratch through the library and
//! compares it with a pinned expectation. Expectations record the actual
//! mathematics, including the one place where the naive statement fails:
//! the blockwise parity kernel does not contain the group its standard
//! generators produce (see `groups.blockwise.closure.*`), so that claim's
//! expected value is the divergence itself, stated exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigidspace_core::discrete::{
    b_add, b_associativity_failures, b_mul, d_add, d_mul, mod2_signed, CircleResidue,
};
use rigidspace_core::perm::{closure_signed, composite_parity, enumerate_signed, standard_generators};
use rigidspace_core::topo::verify_case;
use rigidspace_core::{
    check_pseudo_orthogonal, check_su_embedding, expand_to_real, givens_decompose,
    quat_group_closure, random_metric_word, random_so, random_su, realify, signature_metric,
    word_matrix, ComplexMatrix, EvenSubgroup, FactorizedGraph, GaussMat2, GeneratorKind,
    GraphShape, IntervalPartition, NodeKind, Quat2, SignedPerm, C64,
};

use crate::report::{RunConfig, Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fields,
    Groups,
    Graphs,
    Quotients,
}

/// Resolve a suite name to the suites it selects. The section aliases
/// number the suites in dependency order: fields, groups, graphs,
/// quotients.
pub fn parse_suites(name: &str) -> Option<Vec<Suite>> {
    match name {
        "all" => Some(vec![Suite::Fields, Suite::Groups, Suite::Graphs, Suite::Quotients]),
        "fields" | "section0" => Some(vec![Suite::Fields]),
        "groups" | "section1" => Some(vec![Suite::Groups]),
        "graphs" | "section2" => Some(vec![Suite::Graphs]),
        "quotients" | "section3" => Some(vec![Suite::Quotients]),
        _ => None,
    }
}

pub fn canonical_suite_name(suites: &[Suite]) -> &'static str {
    if suites.len() != 1 {
        return "all";
    }
    match suites[0] {
        Suite::Fields => "fields",
        Suite::Groups => "groups",
        Suite::Graphs => "graphs",
        Suite::Quotients => "quotients",
    }
}

struct Outcome {
    status: Status,
    computed: String,
    expected: String,
}

fn graded(pass: bool, computed: String, expected: String) -> Outcome {
    Outcome {
        status: if pass { Status::Pass } else { Status::Fail },
        computed,
        expected,
    }
}

fn skipped(expected: String, why: String) -> Outcome {
    Outcome { status: Status::Skipped, computed: why, expected }
}

struct Claim {
    id: String,
    suite: Suite,
    anchor: &'static str,
    run: Box<dyn Fn(&RunConfig) -> Outcome>,
}

fn full_order(n: usize) -> usize {
    (1usize << n) * (1..=n).product::<usize>()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

// ---------------------------------------------------------------- fields

fn field_claims(out: &mut Vec<Claim>) {
    out.push(Claim {
        id: "fields.d.tables".into(),
        suite: Suite::Fields,
        anchor: "parity field on {0,1}: addition is xor, multiplication is and",
        run: Box::new(|_| {
            let add: String = (0..2)
                .flat_map(|x| (0..2).map(move |y| char::from(b'0' + d_add(x, y))))
                .collect();
            let mul: String = (0..2)
                .flat_map(|x| (0..2).map(move |y| char::from(b'0' + d_mul(x, y))))
                .collect();
            let computed = format!("add {add}, mul {mul}");
            let expected = "add 0110, mul 0001".to_string();
            graded(computed == expected, computed, expected)
        }),
    });

    out.push(Claim {
        id: "fields.b.add-is-signed-mod2".into(),
        suite: Suite::Fields,
        anchor: "signed parity addition agrees with the signed mod-2 of the integer sum",
        run: Box::new(|_| {
            let mut matches = 0;
            for x in [-1i8, 0, 1] {
                for y in [-1i8, 0, 1] {
                    if b_add(x, y) == mod2_signed(x as i64 + y as i64) {
                        matches += 1;
                    }
                }
            }
            graded(
                matches == 9,
                format!("{matches}/9 sums match"),
                "9/9 sums match".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "fields.b.nonassociative".into(),
        suite: Suite::Fields,
        anchor: "signed parity addition is not associative",
        run: Box::new(|_| {
            let failures = b_associativity_failures();
            graded(
                failures.len() == 4,
                format!("{} associativity violations", failures.len()),
                "4 associativity violations".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "fields.k.restricts-to-d".into(),
        suite: Suite::Fields,
        anchor: "circle residue arithmetic restricted to {0,1} is the parity field",
        run: Box::new(|_| {
            let mut add = 0;
            let mut mul = 0;
            for x in [0u8, 1] {
                for y in [0u8, 1] {
                    let a = CircleResidue::from_signed_unit(x as i8);
                    let b = CircleResidue::from_signed_unit(y as i8);
                    if a.k_add(b).to_signed_unit() == Some(d_add(x, y) as i8) {
                        add += 1;
                    }
                    if a.k_mul(b).to_signed_unit() == Some(d_mul(x, y) as i8) {
                        mul += 1;
                    }
                }
            }
            graded(
                add == 4 && mul == 4,
                format!("{add}/4 add, {mul}/4 mul"),
                "4/4 add, 4/4 mul".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "fields.k.restricts-to-b".into(),
        suite: Suite::Fields,
        anchor: "circle residue arithmetic restricted to {-1,0,1} is the signed parity set",
        run: Box::new(|_| {
            let mut add = 0;
            let mut mul = 0;
            for x in [-1i8, 0, 1] {
                for y in [-1i8, 0, 1] {
                    let a = CircleResidue::from_signed_unit(x);
                    let b = CircleResidue::from_signed_unit(y);
                    if a.k_add(b).to_signed_unit() == Some(b_add(x, y)) {
                        add += 1;
                    }
                    if a.k_mul(b).to_signed_unit() == Some(b_mul(x, y)) {
                        mul += 1;
                    }
                }
            }
            graded(
                add == 9 && mul == 9,
                format!("{add}/9 add, {mul}/9 mul"),
                "9/9 add, 9/9 mul".to_string(),
            )
        }),
    });
}

// ---------------------------------------------------------------- groups

fn group_claims(out: &mut Vec<Claim>) {
    for n in [2usize, 3, 4] {
        let expected_order = full_order(n);
        out.push(Claim {
            id: format!("groups.order.n{n}"),
            suite: Suite::Groups,
            anchor: "the signed permutation group has order 2^n n!",
            run: Box::new(move |cfg| {
                let expected = format!("{expected_order}");
                if n > cfg.max_n {
                    return skipped(expected, format!("degree {n} beyond --max-n {}", cfg.max_n));
                }
                let count = enumerate_signed(n).expect("degree in range").len();
                let gens = standard_generators(&GeneratorKind::Full, n).expect("degree in range");
                let closed = closure_signed(n, &gens, expected_order + 1)
                    .expect("cap covers the group")
                    .order();
                graded(
                    count == expected_order && closed == expected_order,
                    format!("{count} enumerated, {closed} generated"),
                    expected,
                )
            }),
        });

        out.push(Claim {
            id: format!("groups.rotations.n{n}"),
            suite: Suite::Groups,
            anchor: "adjacent rotations generate exactly the unit-determinant subgroup",
            run: Box::new(move |cfg| {
                let expected = format!("order {}, equals determinant kernel", expected_order / 2);
                if n > cfg.max_n {
                    return skipped(expected, format!("degree {n} beyond --max-n {}", cfg.max_n));
                }
                let gens = standard_generators(&GeneratorKind::Even, n).expect("degree in range");
                let closure =
                    closure_signed(n, &gens, expected_order + 1).expect("cap covers the group");
                let kernel: Vec<SignedPerm> = enumerate_signed(n)
                    .expect("degree in range")
                    .into_iter()
                    .filter(|p| p.det() == 1)
                    .collect();
                let equal = closure.set_equals(&kernel);
                graded(
                    equal && closure.order() == expected_order / 2,
                    format!(
                        "order {}, equals determinant kernel: {equal}",
                        closure.order()
                    ),
                    expected,
                )
            }),
        });

        out.push(Claim {
            id: format!("groups.signed-swaps.n{n}"),
            suite: Suite::Groups,
            anchor: "adjacent signed swaps generate exactly the even-negatives subgroup",
            run: Box::new(move |cfg| {
                let expected =
                    format!("order {}, equals negative-parity kernel", expected_order / 2);
                if n > cfg.max_n {
                    return skipped(expected, format!("degree {n} beyond --max-n {}", cfg.max_n));
                }
                let gens =
                    standard_generators(&GeneratorKind::EvenInverse, n).expect("degree in range");
                let closure =
                    closure_signed(n, &gens, expected_order + 1).expect("cap covers the group");
                let kernel: Vec<SignedPerm> = enumerate_signed(n)
                    .expect("degree in range")
                    .into_iter()
                    .filter(|p| p.negative_parity() == 1)
                    .collect();
                let equal = closure.set_equals(&kernel);
                graded(
                    equal && closure.order() == expected_order / 2,
                    format!(
                        "order {}, equals negative-parity kernel: {equal}",
                        closure.order()
                    ),
                    expected,
                )
            }),
        });
    }

    for (tag, sizes, n) in [("2p1", vec![2usize, 1], 3usize), ("2p2", vec![2, 2], 4)] {
        let part = IntervalPartition::new(sizes).expect("valid partition");
        let gen_part = part.clone();
        out.push(Claim {
            id: format!("groups.blockwise.generators.{tag}"),
            suite: Suite::Groups,
            anchor: "every blockwise standard generator has block-determinant product +1",
            run: Box::new(move |cfg| {
                let gens = standard_generators(&GeneratorKind::Composite(gen_part.clone()), n)
                    .expect("degree in range");
                let expected = format!("{}/{} generators have parity +1", gens.len(), gens.len());
                if n > cfg.max_n {
                    return skipped(expected, format!("degree {n} beyond --max-n {}", cfg.max_n));
                }
                let good = gens
                    .iter()
                    .filter(|g| composite_parity(g, &gen_part).expect("matching degree") == 1)
                    .count();
                graded(
                    good == gens.len(),
                    format!("{good}/{} generators have parity +1", gens.len()),
                    expected,
                )
            }),
        });

        let closure_part = part.clone();
        out.push(Claim {
            id: format!("groups.blockwise.closure.{tag}"),
            suite: Suite::Groups,
            anchor: "the blockwise parity is not a homomorphism: the generated group is the \
                     whole signed permutation group, escaping the parity kernel; witness \
                     (block rotation * boundary swap)^3 with parity -1",
            run: Box::new(move |cfg| {
                let expected = format!(
                    "closure order {}, kernel size {}, containment false, equality false",
                    full_order(n),
                    full_order(n) / 2
                );
                if n > cfg.max_n {
                    return skipped(expected, format!("degree {n} beyond --max-n {}", cfg.max_n));
                }
                let gens =
                    standard_generators(&GeneratorKind::Composite(closure_part.clone()), n)
                        .expect("degree in range");
                let closure =
                    closure_signed(n, &gens, full_order(n) + 1).expect("cap covers the group");
                let kernel: Vec<SignedPerm> = enumerate_signed(n)
                    .expect("degree in range")
                    .into_iter()
                    .filter(|p| composite_parity(p, &closure_part).expect("matching degree") == 1)
                    .collect();
                let contained = closure.elements().iter().all(|p| kernel.contains(p));
                let equal = closure.set_equals(&kernel);
                graded(
                    !contained && !equal && closure.order() == full_order(n),
                    format!(
                        "closure order {}, kernel size {}, containment {contained}, equality {equal}",
                        closure.order(),
                        kernel.len()
                    ),
                    expected,
                )
            }),
        });
    }

    for (tag, sizes) in [
        ("p3", vec![3usize]),
        ("p2p1", vec![2, 1]),
        ("p2p2", vec![2, 2]),
    ] {
        let part = IntervalPartition::new(sizes).expect("valid partition");
        out.push(Claim {
            id: format!("groups.metric.{tag}"),
            suite: Suite::Groups,
            anchor: "every word of rotation and boost generators preserves the block signature \
                     form and has determinant 1",
            run: Box::new(move |cfg| {
                let n = part.n();
                let metric = signature_metric(&part);
                let eta = metric.to_matrix();
                let mut good = 0;
                let mut max_form: f64 = 0.0;
                let mut max_det: f64 = 0.0;
                for i in 0..100u64 {
                    let len = 1 + (i as usize * 7) % 50;
                    let seed = cfg.seed.wrapping_mul(1009).wrapping_add(i);
                    let word = random_metric_word(&part, len, seed).expect("valid partition");
                    let m = word_matrix(&word, n).expect("matching degree");
                    let form_err = m
                        .transpose()
                        .mul(&eta)
                        .and_then(|x| x.mul(&m))
                        .and_then(|x| x.max_abs_diff(&eta))
                        .expect("matching dimensions");
                    let det_err = (m.det() - 1.0).abs();
                    max_form = max_form.max(form_err);
                    max_det = max_det.max(det_err);
                    if check_pseudo_orthogonal(&m, &metric, cfg.tolerance).expect("matching size")
                    {
                        good += 1;
                    }
                }
                graded(
                    good == 100,
                    format!(
                        "{good}/100 words within tolerance, max form error {max_form:.3e}, \
                         max det error {max_det:.3e}"
                    ),
                    format!("100/100 words within tolerance {:e}", cfg.tolerance),
                )
            }),
        });
    }

    for n in 2..=8usize {
        out.push(Claim {
            id: format!("groups.givens.n{n}"),
            suite: Suite::Groups,
            anchor: "adjacent plane rotations reconstruct every sampled special orthogonal matrix",
            run: Box::new(move |cfg| {
                let mut good = 0;
                let mut max_err: f64 = 0.0;
                let cap = n * (n - 1) / 2;
                let mut max_len = 0;
                for i in 0..50u64 {
                    let seed = cfg.seed.wrapping_mul(2003).wrapping_add(1000 * n as u64 + i);
                    let m = random_so(n, seed).expect("degree at least 1");
                    let word = givens_decompose(&m, cfg.tolerance).expect("input is a rotation");
                    max_len = max_len.max(word.len());
                    let rebuilt = word_matrix(&word, n).expect("matching degree");
                    let err = rebuilt.max_abs_diff(&m).expect("matching size");
                    max_err = max_err.max(err);
                    if err < cfg.tolerance {
                        good += 1;
                    }
                }
                graded(
                    good == 50 && max_len <= cap,
                    format!(
                        "50 samples: {good} reconstructed within tolerance, max error \
                         {max_err:.3e}, longest word {max_len}"
                    ),
                    format!(
                        "50 reconstructed within {:e}, words no longer than {cap}",
                        cfg.tolerance
                    ),
                )
            }),
        });
    }
}

// ---------------------------------------------------------------- graphs

fn graph_claims(out: &mut Vec<Claim>) {
    let double_cases: [(&str, GraphShape, [usize; 3], [bool; 3]); 4] = [
        ("axes", GraphShape::Axes, [4, 24, 192], [true, true, true]),
        ("one", GraphShape::One, [4, 24, 192], [true, true, true]),
        // Blocks uses the partition [1,1] / [2,1] / [2,2] at n = 2/3/4; from
        // n = 3 on, the generated group is the whole signed group and the
        // moves stop preserving the classes.
        ("blocks", GraphShape::Blocks(IntervalPartition::whole(1).expect("valid")),
            [4, 48, 384], [true, false, false]),
        ("point", GraphShape::Point, [8, 48, 384], [true, true, true]),
    ];
    for (tag, shape, orders, preserves) in double_cases {
        for (i, n) in (2usize..=4).enumerate() {
            let order = orders[i];
            let keeps = preserves[i];
            let shape = if tag == "blocks" {
                let sizes = if n == 2 { vec![1, 1] } else { vec![2, n - 2] };
                GraphShape::Blocks(IntervalPartition::new(sizes).expect("valid partition"))
            } else {
                shape.clone()
            };
            out.push(Claim {
                id: format!("graphs.double.{tag}.n{n}"),
                suite: Suite::Graphs,
                anchor: "case table: the allowed moves of a factorized signed-axis graph \
                         generate the predicted parity subgroup",
                run: Box::new(move |cfg| {
                    let expected = format!(
                        "order {order}, set equality true, class-preserving {keeps}"
                    );
                    if n > cfg.max_n {
                        return skipped(
                            expected,
                            format!("degree {n} beyond --max-n {}", cfg.max_n),
                        );
                    }
                    let g = FactorizedGraph::canonical(NodeKind::Double, n, &shape)
                        .expect("canonical shape");
                    let r = verify_case(&g, full_order(n) + 1).expect("cap covers the group");
                    let computed = format!(
                        "order {}, set equality {}, class-preserving {}",
                        r.computed_order,
                        r.set_equal.map_or("none".to_string(), |b| b.to_string()),
                        r.preserves_classes
                    );
                    graded(computed == expected, computed, expected)
                }),
            });
        }
    }

    let simple_cases: [(&str, GraphShape, [usize; 4]); 2] = [
        ("one", GraphShape::One, [1, 3, 12, 60]),
        ("point", GraphShape::Point, [2, 6, 24, 120]),
    ];
    for (tag, shape, orders) in simple_cases {
        for (i, n) in (2usize..=5).enumerate() {
            let order = orders[i];
            let shape = shape.clone();
            out.push(Claim {
                id: format!("graphs.simple.{tag}.n{n}"),
                suite: Suite::Graphs,
                anchor: "case table: one-class simple graphs give the alternating group, \
                         the collapsed graph gives the full symmetric group",
                run: Box::new(move |cfg| {
                    let expected = format!("order {order}, set equality true");
                    if n > cfg.simple_max() {
                        return skipped(
                            expected,
                            format!("degree {n} beyond simple bound {}", cfg.simple_max()),
                        );
                    }
                    let g = FactorizedGraph::canonical(NodeKind::Simple, n, &shape)
                        .expect("canonical shape");
                    let r = verify_case(&g, factorial(n) + 1).expect("cap covers the group");
                    let computed = format!(
                        "order {}, set equality {}",
                        r.computed_order,
                        r.set_equal.map_or("none".to_string(), |b| b.to_string()),
                    );
                    graded(computed == expected, computed, expected)
                }),
            });
        }
    }
}

// ------------------------------------------------------------- quotients

fn blockwise_partition(n: usize) -> IntervalPartition {
    let sizes = if n == 1 {
        vec![1]
    } else if n == 2 {
        vec![1, 1]
    } else {
        vec![2, n - 2]
    };
    IntervalPartition::new(sizes).expect("valid partition")
}

fn quotient_claims(out: &mut Vec<Claim>) {
    let variants: [(&str, fn(usize) -> EvenSubgroup); 4] = [
        ("trivial", |n| EvenSubgroup::trivial(n).expect("degree in range")),
        ("plus", |n| EvenSubgroup::plus(n).expect("degree in range")),
        ("blockwise", |n| {
            EvenSubgroup::blockwise(blockwise_partition(n)).expect("degree in range")
        }),
        ("full", |n| EvenSubgroup::full(n).expect("degree in range")),
    ];

    for (tag, make) in variants {
        out.push(Claim {
            id: format!("quotients.kernel.{tag}"),
            suite: Suite::Quotients,
            anchor: "the syndrome's kernel is exactly the even subgroup, and cosets fill the \
                     ambient space",
            run: Box::new(move |_| {
                let mut ok = true;
                for n in 1..=6usize {
                    let h = make(n);
                    let mut members = h.enumerate().expect("dimension under cap");
                    members.sort();
                    let mut kernel = Vec::new();
                    for mask in 0..1u32 << n {
                        let bits: Vec<u8> =
                            (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
                        let v = rigidspace_core::BitVector::new(bits).expect("nonempty");
                        if h.syndrome(&v).expect("matching length").is_zero() {
                            kernel.push(v);
                        }
                    }
                    kernel.sort();
                    ok &= kernel == members
                        && h.order() == members.len()
                        && h.order() * h.coset_count() == 1 << n;
                }
                graded(
                    ok,
                    format!("kernel matches enumeration for n = 1..6: {ok}"),
                    "kernel matches enumeration for n = 1..6: true".to_string(),
                )
            }),
        });
    }

    out.push(Claim {
        id: "quotients.cosets".into(),
        suite: Suite::Quotients,
        anchor: "coset counts: 2^n for the trivial subgroup, 2 for the even subgroup, 2^m for \
                 m blocks, 1 for the full group",
        run: Box::new(|_| {
            let mut ok = true;
            for n in 1..=6usize {
                ok &= EvenSubgroup::trivial(n).expect("in range").coset_count() == 1 << n;
                ok &= EvenSubgroup::plus(n).expect("in range").coset_count() == 2;
                ok &= EvenSubgroup::full(n).expect("in range").coset_count() == 1;
                let part = blockwise_partition(n);
                let m = part.block_count();
                ok &= EvenSubgroup::blockwise(part).expect("in range").coset_count() == 1 << m;
            }
            graded(
                ok,
                format!("counts match for n = 1..6: {ok}"),
                "counts match for n = 1..6: true".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "quotients.factorization".into(),
        suite: Suite::Quotients,
        anchor: "subgroup cosets cut the node set into the four canonical class shapes",
        run: Box::new(|_| {
            let n = 4;
            let part = IntervalPartition::new(vec![2, 2]).expect("valid partition");
            let shape = |h: EvenSubgroup| -> String {
                let d = h.induced_factorization(NodeKind::Double).expect("in range");
                let s = h.induced_factorization(NodeKind::Simple).expect("in range");
                format!("double {} classes, simple {} classes", d.class_count(), s.class_count())
            };
            let computed = format!(
                "trivial: {}; plus: {}; blockwise 2+2: {}; full: {}",
                shape(EvenSubgroup::trivial(n).expect("in range")),
                shape(EvenSubgroup::plus(n).expect("in range")),
                shape(EvenSubgroup::blockwise(part).expect("in range")),
                shape(EvenSubgroup::full(n).expect("in range")),
            );
            let expected = "trivial: double 5 classes, simple 5 classes; \
                            plus: double 2 classes, simple 2 classes; \
                            blockwise 2+2: double 3 classes, simple 3 classes; \
                            full: double 1 classes, simple 1 classes"
                .to_string();
            graded(computed == expected, computed, expected)
        }),
    });

    out.push(Claim {
        id: "quotients.realify.product".into(),
        suite: Suite::Quotients,
        anchor: "entrywise complex-to-real expansion is a ring homomorphism",
        run: Box::new(|cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(3001));
            let mut max_mul: f64 = 0.0;
            let mut max_adj: f64 = 0.0;
            for _ in 0..100 {
                let mut sample = || {
                    let data: Vec<C64> = (0..9)
                        .map(|_| C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                        .collect();
                    ComplexMatrix::new(3, data).expect("finite entries")
                };
                let a = sample();
                let b = sample();
                let lhs = realify(&a.mul(&b).expect("matching size"));
                let rhs = realify(&a).mul(&realify(&b)).expect("matching size");
                max_mul = max_mul.max(lhs.max_abs_diff(&rhs).expect("matching size"));
                let adj = realify(&a.adjoint())
                    .max_abs_diff(&realify(&a).transpose())
                    .expect("matching size");
                max_adj = max_adj.max(adj);
            }
            graded(
                max_mul < 1e-12 && max_adj < 1e-12,
                format!(
                    "100 pairs: max product deviation {max_mul:.3e}, max adjoint-transpose \
                     deviation {max_adj:.3e}"
                ),
                "100 pairs within 1e-12".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "quotients.realify.su".into(),
        suite: Suite::Quotients,
        anchor: "special unitary matrices expand to special orthogonal ones",
        run: Box::new(|cfg| {
            let mut good = 0;
            let total = 5 * 50;
            for n in 1..=5usize {
                for i in 0..50u64 {
                    let seed = cfg.seed.wrapping_mul(4001).wrapping_add(100 * n as u64 + i);
                    let u = random_su(n, seed).expect("degree at least 1");
                    if check_su_embedding(&u, cfg.tolerance).expect("consistent size") {
                        good += 1;
                    }
                }
            }
            graded(
                good == total,
                format!("{good}/{total} samples embed (n = 1..5)"),
                format!("{total}/{total} samples embed (n = 1..5)"),
            )
        }),
    });

    out.push(Claim {
        id: "quotients.realify.rotation".into(),
        suite: Suite::Quotients,
        anchor: "a unit complex scalar expands to the plane rotation by its phase",
        run: Box::new(|_| {
            let angles = [0.0, 0.4, -0.4, 1.3, -2.9, 3.1, core::f64::consts::FRAC_PI_2, -1.0];
            let mut max_err: f64 = 0.0;
            for &theta in &angles {
                let u = ComplexMatrix::new(1, vec![C64::new(theta.cos(), theta.sin())])
                    .expect("finite entries");
                let rot = rigidspace_core::ortho::plane_rotation(2, 1, theta)
                    .expect("position in range");
                max_err = max_err.max(realify(&u).max_abs_diff(&rot).expect("matching size"));
            }
            graded(
                max_err < 1e-12,
                format!("{} angles, max deviation {max_err:.3e}", angles.len()),
                "deviation under 1e-12".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "quotients.quat.closure".into(),
        suite: Suite::Quotients,
        anchor: "the four quaternion basis matrices close into the eight-element group",
        run: Box::new(|_| {
            let c = quat_group_closure().expect("cap covers the group");
            let [u1, u2, u3, u4] = GaussMat2::quat_basis();
            let expected_set =
                vec![u1, u2, u3, u4, u1.neg(), u2.neg(), u3.neg(), u4.neg()];
            let equal = c.set_equals(&expected_set);
            graded(
                c.order() == 8 && equal,
                format!("order {}, equals signed basis set: {equal}", c.order()),
                "order 8, equals signed basis set: true".to_string(),
            )
        }),
    });

    out.push(Claim {
        id: "quotients.quat.expansion".into(),
        suite: Suite::Quotients,
        anchor: "every quaternion unit expands to a degree-4 transition matrix of \
                 determinant +1",
        run: Box::new(|_| quat_expansion_outcome()),
    });

    out.push(Claim {
        id: "quotients.quat.unitary".into(),
        suite: Suite::Quotients,
        anchor: "unit quaternion matrices are special unitary",
        run: Box::new(|cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(5003));
            let mut units: Vec<Quat2> = Quat2::basis().to_vec();
            while units.len() < 54 {
                let q = Quat2::new(
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                );
                if q.norm_sq() >= 1e-4 {
                    units.push(q.normalize().expect("nonzero norm"));
                }
            }
            let mut max_gram: f64 = 0.0;
            let mut max_det: f64 = 0.0;
            for q in &units {
                let m = q.to_matrix();
                let gram = m
                    .adjoint()
                    .mul(&m)
                    .and_then(|g| g.max_abs_diff(&ComplexMatrix::identity(2).expect("size 2")))
                    .expect("matching size");
                let det = (m.det() - C64::new(1.0, 0.0)).norm();
                max_gram = max_gram.max(gram);
                max_det = max_det.max(det);
            }
            graded(
                max_gram < 1e-12 && max_det < 1e-12,
                format!(
                    "{} units: max gram deviation {max_gram:.3e}, max det deviation \
                     {max_det:.3e}",
                    units.len()
                ),
                "deviations under 1e-12".to_string(),
            )
        }),
    });
}

fn quat_expansion_outcome() -> Outcome {
    let c = quat_group_closure().expect("cap covers the group");
    let mut transitions = Vec::new();
    let mut dets_ok = true;
    for g in c.elements() {
        match expand_to_real(g) {
            Ok(t) => {
                dets_ok &= t.det() == 1;
                transitions.push(t);
            }
            Err(_) => dets_ok = false,
        }
    }
    transitions.sort();
    transitions.dedup();
    let distinct = transitions.len();
    graded(
        dets_ok && distinct == 8,
        format!("8 elements: {distinct} distinct transitions, all determinant +1: {dets_ok}"),
        "8 elements: 8 distinct transitions, all determinant +1: true".to_string(),
    )
}

// ---------------------------------------------------------------- driver

fn catalog() -> Vec<Claim> {
    let mut out = Vec::new();
    field_claims(&mut out);
    group_claims(&mut out);
    graph_claims(&mut out);
    quotient_claims(&mut out);
    out
}

/// Run the selected suites and return reports sorted by claim id.
pub fn run_suites(suites: &[Suite], config: &RunConfig) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = catalog()
        .into_iter()
        .filter(|c| suites.contains(&c.suite))
        .map(|c| {
            let o = (c.run)(config);
            VerificationReport {
                claim_id: c.id,
                status: o.status,
                computed: o.computed,
                expected: o.expected,
                anchor: c.anchor.to_string(),
            }
        })
        .collect();
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    reports
}

/// The `embed su-to-so` check for one degree.
pub fn embed_su_report(n: usize, config: &RunConfig) -> VerificationReport {
    let mut good = 0;
    for i in 0..50u64 {
        let seed = config.seed.wrapping_mul(4001).wrapping_add(100 * n as u64 + i);
        let u = random_su(n, seed).expect("degree at least 1");
        if check_su_embedding(&u, config.tolerance).expect("consistent size") {
            good += 1;
        }
    }
    let status = if good == 50 { Status::Pass } else { Status::Fail };
    VerificationReport {
        claim_id: format!("embed.su-to-so.n{n}"),
        status,
        computed: format!("{good}/50 samples embed"),
        expected: "50/50 samples embed".to_string(),
        anchor: "special unitary matrices expand to special orthogonal ones".to_string(),
    }
}

/// The `embed quat-to-perm` check.
pub fn embed_quat_report() -> VerificationReport {
    let o = quat_expansion_outcome();
    VerificationReport {
        claim_id: "embed.quat-to-perm".to_string(),
        status: o.status,
        computed: o.computed,
        expected: o.expected,
        anchor: "every quaternion unit expands to a degree-4 transition matrix of \
                 determinant +1"
            .to_string(),
    }
}
