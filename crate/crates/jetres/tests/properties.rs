//! Randomized property suite, runnable standalone:
//! `cargo test -p jetres --test properties`.
//!
//! Covers the algebra laws of the polynomial ring, arc-evaluation
//! consistency of the jet substitution, the monomial-content split,
//! weight monotonicity along explored walk edges, and the
//! exceptional-times-strict factorization of chart transforms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use jetres_core::catalog::{cross_checks, Instance};
use jetres_core::jets::explore;
use jetres_core::lin::V3;
use jetres_core::poly::{Axis, Poly, Var};
use jetres_core::toric::{route_charts, total_transform};

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        ((0i64..4, 0i64..4, 0i64..4), -5i64..=5),
        0..6,
    )
    .prop_map(|terms| {
        Poly::from_support(
            terms
                .into_iter()
                .map(|((a, b, c), coeff)| ([a, b, c] as V3, BigInt::from(coeff))),
        )
    })
}

fn arc_strategy(m: usize) -> impl Strategy<Value = BTreeMap<Var, BigInt>> {
    prop::collection::vec(-3i64..=3, 3 * (m + 1)).prop_map(move |coeffs| {
        let mut arc = BTreeMap::new();
        let mut it = coeffs.into_iter();
        for axis in Axis::ALL {
            for order in 0..=m {
                arc.insert(Var::new(axis, order as u16), BigInt::from(it.next().unwrap()));
            }
        }
        arc
    })
}

/// Evaluates `f` along the arc as a truncated power series in `t`,
/// multiplying coefficient vectors directly.
fn series_evaluation(f: &Poly, arc: &BTreeMap<Var, BigInt>, m: usize) -> Vec<BigInt> {
    let series = |axis: Axis| -> Vec<BigInt> {
        (0..=m).map(|o| arc[&Var::new(axis, o as u16)].clone()).collect()
    };
    let mul_trunc = |p: &[BigInt], q: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::from(0); m + 1];
        for (i, pi) in p.iter().enumerate() {
            for (j, qj) in q.iter().enumerate() {
                if i + j <= m {
                    out[i + j] += pi * qj;
                }
            }
        }
        out
    };
    let mut acc = vec![BigInt::from(0); m + 1];
    for (mono, coeff) in f.terms() {
        let mut term = vec![BigInt::from(0); m + 1];
        term[0] = coeff.clone();
        for (var, e) in mono.iter() {
            let s = series(var.axis);
            for _ in 0..e {
                term = mul_trunc(&term, &s);
            }
        }
        for (slot, val) in acc.iter_mut().zip(term) {
            *slot += val;
        }
    }
    acc
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
        prop_assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn multiplication_is_associative_commutative_distributive(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert_eq!(&a * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn jet_substitution_matches_series_evaluation(
        f in poly_strategy(),
        arc in arc_strategy(3),
    ) {
        let m = 3usize;
        let expected = series_evaluation(&f, &arc, m);
        let fs = f.substitute_jets(m);
        for (i, fi) in fs.iter().enumerate() {
            prop_assert_eq!(fi.evaluate(&arc), expected[i].clone(), "coefficient of t^{}", i);
        }
    }

    #[test]
    fn monomial_content_roundtrips(f in poly_strategy()) {
        prop_assume!(!f.is_zero());
        let (content, cofactor) = f.monomial_content();
        prop_assert_eq!(&Poly::term(content, BigInt::from(1)) * &cofactor, f);
        let (residual, _) = cofactor.monomial_content();
        prop_assert!(residual.is_one(), "cofactor must carry no further content");
    }
}

#[test]
fn weights_never_decrease_along_explored_edges() {
    for check in cross_checks() {
        let f = check.instance.equation();
        for (center, m_max) in &check.depths {
            let graph = explore(&f, center, *m_max).expect("walk");
            for node in &graph.nodes {
                for &p in &node.parents {
                    let pw = graph.nodes[p].weight;
                    assert!(
                        (0..3).all(|i| pw[i] <= node.weight[i]),
                        "{}: weight dropped along an edge",
                        check.instance.name()
                    );
                }
            }
        }
    }
}

#[test]
fn every_wedge_chart_factors_as_exceptional_times_strict() {
    for k in 2i64..=5 {
        for l in 2..=k {
            let inst = Instance::BOddBig { k, l };
            let f = inst.equation();
            let (cones, _) = inst.theorem_subdivision().expect("subdivision");
            let (_, charts) = route_charts(&f, &cones);
            for chart in &charts {
                let total = total_transform(&f, &chart.cone);
                assert_eq!(
                    chart.strict.mul_monomial(chart.exceptional),
                    total,
                    "{} chart {:?}",
                    inst.name(),
                    chart.cone
                );
            }
        }
    }
}
