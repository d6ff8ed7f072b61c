//! Acceptance gate: one test per published acceptance criterion, so the
//! harness prints one pass/fail line for each.
//!
//! Criterion 7 is expected to fail: four sweep instances are genuinely
//! degenerate along one compact face (see the assertion message), and
//! the check reports them faithfully instead of papering over them.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use jetres_core::catalog::{cross_checks, sweep, Instance};
use jetres_core::fan::{verify_regular_subdivision, Cone};
use jetres_core::jets::{brute_force_components, center_vanishing, explore};
use jetres_core::lin::{det3, V3};
use jetres_core::newton::{is_nondegenerate, newton_polyhedron, NONDEGENERACY_PRIMES};
use jetres_core::poly::{Axis, Monomial, Poly, Var};
use jetres_core::toric::{
    chart_report, route_charts, strict_transform, total_transform, verify_embedded_resolution,
    ChartVerdict, Route, Smoothness,
};

fn v(a: Axis, o: u16) -> Var {
    Var::new(a, o)
}

fn vanishing(vs: &[Var]) -> BTreeSet<Var> {
    vs.iter().copied().collect()
}

fn mono(pairs: &[(Var, u32)]) -> Monomial {
    Monomial::from_exps(pairs.iter().copied())
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_1_jet_exploration_recovers_the_published_vectors() {
    let inst = Instance::E60;
    let f = inst.equation();
    let t0 = Instant::now();
    let yz = explore(&f, &[Axis::Y, Axis::Z], 18).expect("yz walk");
    let xz = explore(&f, &[Axis::X, Axis::Z], 2).expect("xz walk");
    let elapsed = t0.elapsed();

    let mut found: BTreeSet<V3> = yz.essential_vectors();
    found.extend(xz.essential_vectors());

    let mut expected: BTreeSet<V3> =
        inst.theorem_vectors().expect("vector table").into_iter().collect();
    assert_eq!(expected.len(), 14, "the published table has 14 rows");
    expected.insert([1, 0, 1]);
    expected.insert([1, 0, 2]);

    assert_eq!(found, expected, "essential vectors differ from the published set");
    assert!(
        elapsed < Duration::from_secs(10),
        "exploration took {elapsed:?}, budget is 10 s"
    );
}

#[test]
fn criterion_2_jet_equation_normal_forms() {
    let f = Instance::E60.equation();
    let fs = f.substitute_jets(6);
    let one = BigInt::from(1);

    let g2 = fs[2].reduce_mod_vanishing(&vanishing(&[v(Axis::Y, 0), v(Axis::Z, 0)]));
    assert_eq!(
        g2,
        Poly::term(mono(&[(v(Axis::X, 0), 2), (v(Axis::Y, 1), 2)]), one.clone())
    );

    let g3 = fs[3].reduce_mod_vanishing(&vanishing(&[
        v(Axis::X, 0),
        v(Axis::Y, 0),
        v(Axis::Z, 0),
    ]));
    assert_eq!(g3, Poly::term(mono(&[(v(Axis::Z, 1), 3)]), one.clone()));

    let g4 = fs[4].reduce_mod_vanishing(&vanishing(&[
        v(Axis::X, 0),
        v(Axis::Y, 0),
        v(Axis::Z, 0),
        v(Axis::Z, 1),
    ]));
    assert_eq!(
        g4,
        Poly::term(mono(&[(v(Axis::X, 1), 2), (v(Axis::Y, 1), 2)]), one.clone())
    );

    let g6 = fs[6].reduce_mod_vanishing(&vanishing(&[
        v(Axis::X, 0),
        v(Axis::X, 1),
        v(Axis::Y, 0),
        v(Axis::Z, 0),
        v(Axis::Z, 1),
        v(Axis::Z, 2),
    ]));
    let (content, cofactor) = g6.monomial_content();
    assert_eq!(content, mono(&[(v(Axis::Y, 1), 2)]));
    assert!(cofactor.term_count() > 1, "the level-6 cofactor is not a monomial");
}

#[test]
fn criterion_3_walk_components_match_the_brute_force_oracle() {
    let t0 = Instant::now();
    for inst in [Instance::E60, Instance::AEq { k: 1, m: 2 }] {
        let f = inst.equation();
        for center in inst.centers() {
            let graph = explore(&f, &center, 6).expect("walk");
            for m in 1..=6usize {
                let oracle: BTreeSet<BTreeSet<Var>> =
                    brute_force_components(&f, &center, m).into_iter().collect();
                let walk: BTreeSet<BTreeSet<Var>> = match graph
                    .snapshots
                    .keys()
                    .filter(|&&l| l <= m)
                    .max()
                {
                    Some(&level) => graph.snapshots[&level]
                        .iter()
                        .map(|&id| graph.nodes[id].z.clone())
                        .collect(),
                    // Below the first interesting level every jet
                    // equation vanishes on the center, so the single
                    // component is the center itself.
                    None => [center_vanishing(&center)].into_iter().collect(),
                };
                assert_eq!(
                    oracle,
                    walk,
                    "{} center {:?} level {}",
                    inst.name(),
                    center,
                    m
                );
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "oracle comparison took {elapsed:?}, budget is 60 s"
    );
}

#[test]
fn criterion_4_subdivision_determinant_identities() {
    // First decomposition family: vertical strips.
    for k in 1i64..=6 {
        for b in k..=k + 5 {
            assert_eq!(det3([k, 1, b], [k, 1, b + 1], [1, 0, 0]), 1, "C1 k={k} b={b}");
        }
    }
    // Second: the diagonal ladder.
    for a in 0i64..=5 {
        assert_eq!(det3([1, 0, 0], [a, 1, a], [a + 1, 1, a + 1]), 1, "C2 a={a}");
    }
    // Third, case of a ceiling at height k.
    for k in 1i64..=6 {
        for a in 1..=k - 1 {
            for b in a..=k - 1 {
                assert_eq!(
                    det3([a - 1, 1, k], [a, 1, b], [a, 1, b + 1]),
                    -1,
                    "C3 low k={k} a={a} b={b}"
                );
                assert_eq!(
                    det3([a + 1, 1, k], [a, 1, b], [a, 1, b + 1]),
                    1,
                    "C3 high k={k} a={a} b={b}"
                );
            }
        }
    }
    // Third, case of diagonal neighbours.
    for a in 1i64..=5 {
        for b in a..=a + 5 {
            assert_eq!(
                det3([a + 1, 1, a + 1], [a, 1, b], [a, 1, b + 1]),
                1,
                "C3 diag-up a={a} b={b}"
            );
            assert_eq!(
                det3([a - 1, 1, a - 1], [a, 1, b], [a, 1, b + 1]),
                -1,
                "C3 diag-down a={a} b={b}"
            );
        }
    }
    // Fourth: strips bounded by the slanted roof.
    for k in 1i64..=6 {
        for m in 1..=k {
            for s in 0..=k - 1 {
                for b in k..=k + m - s {
                    if s >= 1 {
                        assert_eq!(
                            det3([s - 1, 1, k], [s, 1, b], [s, 1, b + 1]),
                            -1,
                            "C4 low k={k} m={m} s={s} b={b}"
                        );
                    }
                    assert_eq!(
                        det3([s + 1, 1, k], [s, 1, b], [s, 1, b + 1]),
                        1,
                        "C4 high k={k} m={m} s={s} b={b}"
                    );
                }
                assert_eq!(
                    det3([s + 1, 1, k + m - s - 1], [s, 1, k + m - s], [s, 1, k + m - s + 1]),
                    1,
                    "C4 roof-up k={k} m={m} s={s}"
                );
                if s >= 1 {
                    assert_eq!(
                        det3([s - 1, 1, k + m - s + 1], [s, 1, k + m - s], [s, 1, k + m - s + 1]),
                        -1,
                        "C4 roof-down k={k} m={m} s={s}"
                    );
                }
            }
        }
    }
    // Fifth: cones along the roof line and the closing cone.
    for k in 1i64..=6 {
        for m in 1..=k {
            for a in 0..=k {
                assert_eq!(
                    det3([0, 0, 1], [a, 1, k + m - a], [a + 1, 1, k + m - 1 - a]),
                    -1,
                    "C5 k={k} m={m} a={a}"
                );
            }
            assert_eq!(det3([k, 1, m], [1, 0, 0], [0, 0, 1]), -1, "C5 close k={k} m={m}");
        }
    }
    // Alignment determinants: three collinearity families, all zero.
    for k in 1i64..=6 {
        for m in 1..=k {
            for r in 1..=(k - m) / 2 {
                assert_eq!(
                    det3([m + r, 1, k - r], [m + k, 2, m + k], [m, 1, k]),
                    0,
                    "align-1 k={k} m={m} r={r}"
                );
            }
            for l in m..=k {
                for a in 0..=m {
                    assert_eq!(
                        det3([a, 1, k + l - a], [m, 1, k + l - m], [0, 1, k + l]),
                        0,
                        "align-2 k={k} l={l} m={m} a={a}"
                    );
                }
            }
            for s in 0..=k + m {
                assert_eq!(
                    det3([k, 1, m], [0, 1, k + m], [s, 1, k + m - s]),
                    0,
                    "align-3 k={k} m={m} s={s}"
                );
            }
            // Odd total: the midpoint cones are unimodular.
            if (k + m) % 2 == 1 {
                let e = (k + m - 1) / 2;
                assert_eq!(
                    det3([e, 1, e + 1], [e, 1, e], [m + k, 2, m + k]),
                    -1,
                    "odd-mid k={k} m={m}"
                );
                assert_eq!(
                    det3([1, 0, 0], [e, 1, e], [m + k, 2, m + k]),
                    1,
                    "odd-axis k={k} m={m}"
                );
            }
        }
    }
}

#[test]
fn criterion_5_regular_subdivisions_verify() {
    let t0 = Instant::now();
    let mut instances = vec![Instance::E60];
    for k in 1..=4 {
        for m in k..=6 {
            instances.push(Instance::AEq { k, m });
        }
    }
    for k in 1..=5 {
        for l in 1..=k {
            for m in 1..=l {
                instances.push(Instance::AGe { k, l, m });
            }
        }
    }
    for k in 2..=5 {
        for l in 2..=4 {
            instances.push(Instance::BEven { k, l });
        }
    }
    for k in 1..=5 {
        instances.push(Instance::D { k });
    }

    for inst in &instances {
        let f = inst.equation();
        let (cones, method) = inst.theorem_subdivision().expect("subdivision");
        let newton = newton_polyhedron(&f);
        let report = verify_regular_subdivision(&cones, &newton);
        assert!(
            report.all_true(),
            "{} via {}: fan={} cover={} regular={} refines={}",
            inst.name(),
            method.name(),
            report.is_fan,
            report.covers_octant,
            report.all_regular,
            report.refines_dual
        );
    }
    let elapsed = t0.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "{} subdivisions took {elapsed:?}, budget is 60 s",
        instances.len()
    );
}

/// Expected strict transforms of the three hand-checked charts of the
/// wedge construction, as (exponent, coefficient) term lists.
fn wedge_chart_data(k: i64, l: i64) -> [(Cone, V3, Vec<(V3, i64)>); 2] {
    [
        (
            [[1, 0, 0], [l - 1, 1, k], [l, 1, k + 1]],
            [0, 2 * k + l - 1, 2 * k + l + 1],
            vec![
                ([0, k - l + 1, k - l + 2], 1),
                ([1, 0, 1], 1),
                ([0, 0, 0], -1),
                ([0, k - l + 2, k - l + 1], -1),
                ([1, 1, 0], -1),
            ],
        ),
        (
            [[1, 0, 0], [1, 0, 1], [l, 1, k + 1]],
            [0, 1, 2 * k + l + 1],
            vec![
                ([0, 2, k - l + 2], 1),
                ([1, 2, 1], 1),
                ([0, 1, 0], -1),
                ([0, 0, k - l + 1], -1),
                ([1, 0, 0], -1),
            ],
        ),
    ]
}

#[test]
fn criterion_6_wedge_family_resolves_by_charts() {
    for k in 2i64..=5 {
        for l in 2..=k {
            let inst = Instance::BOddBig { k, l };
            let f = inst.equation();
            let (cones, _) = inst.theorem_subdivision().expect("wedge subdivision");
            let newton = newton_polyhedron(&f);
            let report = verify_regular_subdivision(&cones, &newton);
            assert!(report.is_fan && report.covers_octant && report.all_regular);
            assert!(
                !report.refines_dual,
                "{}: the wedge must not refine the dual fan",
                inst.name()
            );

            let res = verify_embedded_resolution(&f, &cones, Route::Auto);
            assert_eq!(res.verdict, "resolved-by-charts", "{}", inst.name());

            // Ladder charts: one strip per step, certified via the
            // first chart variable with unit partial +1.
            for s in (l - 1)..k {
                let cone: Cone = [[1, 0, 0], [l - 1, 1, s], [l - 1, 1, s + 1]];
                let total = total_transform(&f, &cone);
                let (content, strict) = strict_transform(&total);
                assert_eq!(content, [0, 2 * s + l - 1, 2 * s + l + 1]);
                let expected = jetres_core::toric::ChartPoly::from_terms([
                    ([0, s - l + 1, s - l + 2], 1),
                    ([1, 0, 0], 1),
                    ([0, 0, 0], -1),
                    ([0, 2 * k - s - l + 2, 2 * k - s - l + 1], -1),
                    ([1, 2 * k - 2 * s + 1, 2 * k - 2 * s - 1], -1),
                ]);
                assert_eq!(strict, expected, "ladder strict k={k} l={l} s={s}");
                assert_eq!(
                    strict.mul_monomial(content),
                    total,
                    "ladder reconstruction k={k} l={l} s={s}"
                );
                let chart = chart_report(&f, &cone);
                match chart.verdict {
                    ChartVerdict::CertifiedVia { var, ref unit } => {
                        assert_eq!(var, 0, "ladder chart certifies via the first variable");
                        assert_eq!(unit, &BigInt::from(1));
                    }
                    other => panic!("ladder chart k={k} l={l} s={s}: {}", other.name()),
                }
            }

            // The two closing charts: the first misses the divisor, the
            // second certifies via the first variable with unit −1.
            let [(cone2, content2, terms2), (cone3, content3, terms3)] = wedge_chart_data(k, l);
            let total2 = total_transform(&f, &cone2);
            let (c2, s2) = strict_transform(&total2);
            assert_eq!(c2, content2);
            assert_eq!(s2, jetres_core::toric::ChartPoly::from_terms(terms2));
            assert_eq!(s2.mul_monomial(c2), total2);
            let chart2 = chart_report(&f, &cone2);
            assert!(
                matches!(chart2.verdict, ChartVerdict::MissesDivisor),
                "closing chart 1 k={k} l={l}: {}",
                chart2.verdict.name()
            );

            let total3 = total_transform(&f, &cone3);
            let (c3, s3) = strict_transform(&total3);
            assert_eq!(c3, content3);
            assert_eq!(s3, jetres_core::toric::ChartPoly::from_terms(terms3));
            assert_eq!(s3.mul_monomial(c3), total3);
            let chart3 = chart_report(&f, &cone3);
            match chart3.verdict {
                ChartVerdict::CertifiedVia { var, ref unit } => {
                    assert_eq!(var, 0);
                    assert_eq!(unit, &BigInt::from(-1));
                }
                other => panic!("closing chart 2 k={k} l={l}: {}", other.name()),
            }

            // Every certificate produced on the distinguished charts
            // resolves via the first chart variable with a unit.
            for cone in [cone2, cone3]
                .into_iter()
                .chain(((l - 1)..k).map(|s| [[1, 0, 0], [l - 1, 1, s], [l - 1, 1, s + 1]]))
            {
                let total = total_transform(&f, &cone);
                let (_, strict) = strict_transform(&total);
                let exc: Vec<usize> = (0..3)
                    .filter(|&i| {
                        let g = cone[i];
                        g != [1, 0, 0] && g != [0, 1, 0] && g != [0, 0, 1]
                    })
                    .collect();
                match jetres_core::toric::smoothness_certificate(&strict, &exc) {
                    Smoothness::CertifiedVia { var, unit } => {
                        assert_eq!(var, 0, "certificate must use the first variable");
                        assert_eq!(unit.magnitude(), BigInt::from(1).magnitude());
                    }
                    Smoothness::MissesDivisor => {}
                    Smoothness::Inconclusive => {
                        panic!("inconclusive distinguished chart k={k} l={l}")
                    }
                }
            }
        }
    }
}

#[test]
fn criterion_7_nondegeneracy_across_the_sweep() {
    let mut degenerate: Vec<String> = Vec::new();
    for inst in sweep() {
        let report = is_nondegenerate(&inst.equation(), &NONDEGENERACY_PRIMES);
        if !report.is_nondegenerate() {
            degenerate.push(format!("  {}: {:?}", inst.name(), report));
        }
    }
    assert!(
        degenerate.is_empty(),
        "every sweep instance should be nondegenerate, but {} are not:\n{}\n\
         These failures are genuine, not implementation artifacts: for the B families \
         with l >= k+2 the compact face with normal (2k+1,2,2k+1) has face polynomial \
         z^3+x*z^2-y^(2k+1)*z-x*y^(2k+1) = (z+x)(z^2-y^(2k+1)), which vanishes together \
         with all three partials at the torus point (1,1,-1) over the rationals, hence \
         modulo every prime. The published blanket nondegeneracy claim does not hold for \
         these normal forms. Their embedded resolutions are nevertheless verified \
         chart-by-chart (`jetres verify-theorem --all` exits 0).",
        degenerate.len(),
        degenerate.join("\n")
    );
}

#[test]
fn criterion_8_property_spot_checks() {
    // Ring axioms on fixed mixed polynomials.
    let a = Instance::E60.equation();
    let b = Instance::BOddBig { k: 3, l: 2 }.equation();
    let c = Poly::parse("x*y-2*z+3").unwrap();
    assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    assert_eq!(&a * &b, &b * &a);
    assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    assert_eq!(&a - &a, Poly::zero());
    assert_eq!(&a * &Poly::one(), a);

    // Arc evaluation: substituting jet series then evaluating equals
    // evaluating the truncated series directly.
    let m = 5usize;
    let arc: BTreeMap<Var, BigInt> = [
        (v(Axis::X, 0), 1),
        (v(Axis::X, 1), -2),
        (v(Axis::X, 2), 1),
        (v(Axis::X, 3), 0),
        (v(Axis::X, 4), 3),
        (v(Axis::X, 5), 1),
        (v(Axis::Y, 0), 2),
        (v(Axis::Y, 1), 1),
        (v(Axis::Y, 2), 0),
        (v(Axis::Y, 3), -1),
        (v(Axis::Y, 4), 2),
        (v(Axis::Y, 5), 0),
        (v(Axis::Z, 0), -1),
        (v(Axis::Z, 1), 3),
        (v(Axis::Z, 2), 2),
        (v(Axis::Z, 3), 1),
        (v(Axis::Z, 4), -2),
        (v(Axis::Z, 5), 1),
    ]
    .into_iter()
    .map(|(var, c)| (var, BigInt::from(c)))
    .collect();
    let series = |axis: Axis| -> Vec<BigInt> {
        (0..=m).map(|o| arc[&v(axis, o as u16)].clone()).collect()
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
    for f in [&a, &b] {
        let direct = {
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
        };
        let fs = f.substitute_jets(m);
        for (i, fi) in fs.iter().enumerate() {
            assert_eq!(fi.evaluate(&arc), direct[i], "arc coefficient t^{i}");
        }
    }

    // Monomial-content roundtrip on the jet equations.
    for fi in a.substitute_jets(6).iter().filter(|p| !p.is_zero()) {
        let (content, cofactor) = fi.monomial_content();
        assert_eq!(&Poly::term(content, BigInt::from(1)) * &cofactor, *fi);
        let (residual, _) = cofactor.monomial_content();
        assert!(residual.is_one(), "cofactor must be content-free");
    }

    // Weight monotonicity along every explored edge of the cross-check
    // walks.
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

    // Exceptional × strict reconstruction on every chart of the wedge
    // family sweep.
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
