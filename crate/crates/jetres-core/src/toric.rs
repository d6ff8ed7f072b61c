//! Monomial chart maps from unimodular cones, total and strict
//! transforms, smoothness/transversality certificates, and the two
//! verification routes for embedded resolutions.
//!
//! A unimodular cone with generator rows g₁,g₂,g₃ defines the chart
//! substitution sending the ambient monomial with exponent vector e to
//! the chart monomial with exponents (g₁·e, g₂·e, g₃·e). The total
//! transform of the surface equation then splits as an exceptional
//! monomial (its content) times the strict transform. Smoothness is
//! certified by the implicit-function criterion — a chart variable
//! whose partial derivative is a nonzero constant on the exceptional
//! locus — and transversality by re-running that certificate on each
//! divisor's restriction. The certificates are sufficient conditions:
//! a failed certificate yields an honest `Inconclusive`, never a false
//! positive.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::fan::{self, Cone, SubdivisionReport};
use crate::lin::{self, V3};
use crate::newton::{
    is_nondegenerate, newton_polyhedron, NondegeneracyReport, NONDEGENERACY_PRIMES,
};
use crate::poly::Poly;

/// A polynomial in the three chart variables, keyed by exponent
/// vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct ChartPoly(BTreeMap<V3, BigInt>);

impl ChartPoly {
    pub fn zero() -> ChartPoly {
        ChartPoly(BTreeMap::new())
    }

    pub fn from_terms<I: IntoIterator<Item = (V3, i64)>>(terms: I) -> ChartPoly {
        let mut p = ChartPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: V3, c: BigInt) {
        let entry = self.0.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.0.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&V3, &BigInt)> + '_ {
        self.0.iter()
    }

    /// The coefficient when the polynomial is a single constant term.
    pub fn as_nonzero_const(&self) -> Option<&BigInt> {
        if self.0.len() == 1 {
            self.0.get(&[0, 0, 0])
        } else {
            None
        }
    }

    /// Drops every term with a positive exponent in any of the listed
    /// variables (evaluation at zero along those divisors).
    pub fn reduce_exc(&self, exc: &[usize]) -> ChartPoly {
        ChartPoly(
            self.0
                .iter()
                .filter(|(e, _)| exc.iter().all(|&i| e[i] == 0))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        )
    }

    /// Formal partial derivative in chart variable `i`.
    pub fn partial(&self, i: usize) -> ChartPoly {
        let mut out = ChartPoly::zero();
        for (e, c) in &self.0 {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.add_term(e2, c * BigInt::from(e[i]));
        }
        out
    }

    /// Restriction to the hyperplane where variable `i` vanishes.
    pub fn restrict(&self, i: usize) -> ChartPoly {
        ChartPoly(
            self.0
                .iter()
                .filter(|(e, _)| e[i] == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        )
    }

    /// Multiplies by the monomial with exponent vector `m`.
    pub fn mul_monomial(&self, m: V3) -> ChartPoly {
        ChartPoly(
            self.0
                .iter()
                .map(|(e, c)| ([e[0] + m[0], e[1] + m[1], e[2] + m[2]], c.clone()))
                .collect(),
        )
    }

    /// Text form with chart variables x_1, y_1, z_1, highest exponent
    /// vector first.
    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (e, c) in self.0.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let is_const = *e == [0, 0, 0];
            if !mag.is_one() || is_const {
                let _ = write!(out, "{}", mag);
            }
            for (i, name) in ["x_1", "y_1", "z_1"].iter().enumerate() {
                match e[i] {
                    0 => {}
                    1 => out.push_str(name),
                    k => {
                        let _ = write!(out, "{}^{}", name, k);
                    }
                }
            }
        }
        out
    }
}

/// The exponent matrix of the chart substitution: entry (row, column)
/// is the exponent of chart variable `column` in the image of ambient
/// variable `row`, so columns are the cone's generators. Panics on a
/// non-unimodular cone.
pub fn monomial_map(cone: &Cone) -> [[i64; 3]; 3] {
    assert!(
        fan::is_regular_cone(cone),
        "chart maps require a unimodular cone: {:?}",
        cone
    );
    let mut m = [[0i64; 3]; 3];
    for (col, gen) in cone.iter().enumerate() {
        for row in 0..3 {
            m[row][col] = gen[row];
        }
    }
    m
}

/// Renders the chart substitution, one line per ambient variable.
pub fn monomial_map_text(cone: &Cone) -> [String; 3] {
    let m = monomial_map(cone);
    let names = ["x", "y", "z"];
    let chart = ["x_1", "y_1", "z_1"];
    core::array::from_fn(|row| {
        let mut s = alloc::format!("{} = ", names[row]);
        let mut any = false;
        for col in 0..3 {
            match m[row][col] {
                0 => {}
                1 => {
                    s.push_str(chart[col]);
                    any = true;
                }
                k => {
                    let _ = write!(s, "{}^{}", chart[col], k);
                    any = true;
                }
            }
        }
        if !any {
            s.push('1');
        }
        s
    })
}

/// Substitutes the chart monomials of `cone` into `f`: the ambient
/// exponent vector e becomes (g₁·e, g₂·e, g₃·e).
pub fn total_transform(f: &Poly, cone: &Cone) -> ChartPoly {
    let mut out = ChartPoly::zero();
    for (mono, c) in f.terms() {
        let e = mono
            .exponents3()
            .expect("total transforms act on ambient polynomials");
        let key = [
            lin::dot3(cone[0], e),
            lin::dot3(cone[1], e),
            lin::dot3(cone[2], e),
        ];
        out.add_term(key, c.clone());
    }
    out
}

/// Splits a total transform into its exceptional monomial content and
/// the strict transform. Panics on the zero polynomial.
pub fn strict_transform(total: &ChartPoly) -> (V3, ChartPoly) {
    assert!(!total.is_zero(), "the strict transform of zero is undefined");
    let mut mins = [i64::MAX; 3];
    for (e, _) in total.terms() {
        for i in 0..3 {
            mins[i] = mins[i].min(e[i]);
        }
    }
    let strict = ChartPoly(
        total
            .0
            .iter()
            .map(|(e, c)| ([e[0] - mins[0], e[1] - mins[1], e[2] - mins[2]], c.clone()))
            .collect(),
    );
    (mins, strict)
}

/// Outcome of the implicit-function smoothness certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Smoothness {
    /// Some chart variable has a constant unit partial derivative along
    /// the exceptional locus.
    CertifiedVia { var: usize, unit: BigInt },
    /// The strict transform restricts to a nonzero constant on the
    /// exceptional locus and so stays away from it.
    MissesDivisor,
    /// No certificate found; no claim either way.
    Inconclusive,
}

/// Outcome of the transversality certificate along one divisor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Transversality {
    /// The strict transform does not meet this divisor in the chart.
    Empty,
    /// The divisor lies inside the strict transform: not transversal.
    Contained,
    CertifiedVia { var: usize, unit: BigInt },
    MissesDivisor,
    Inconclusive,
}

/// Searches for a non-exceptional chart variable whose partial
/// derivative reduces to a nonzero constant modulo the exceptional
/// variables; failing that, checks whether the strict transform itself
/// reduces to a nonzero constant.
pub fn smoothness_certificate(strict: &ChartPoly, exc: &[usize]) -> Smoothness {
    for i in 0..3 {
        if exc.contains(&i) {
            continue;
        }
        let dp = strict.partial(i).reduce_exc(exc);
        if let Some(c) = dp.as_nonzero_const() {
            return Smoothness::CertifiedVia { var: i, unit: c.clone() };
        }
    }
    if strict.reduce_exc(exc).as_nonzero_const().is_some() {
        return Smoothness::MissesDivisor;
    }
    Smoothness::Inconclusive
}

/// Restricts the strict transform to one exceptional divisor and
/// re-runs the smoothness certificate there with the remaining
/// exceptional variables.
pub fn transversality_certificate(
    strict: &ChartPoly,
    dvar: usize,
    exc: &[usize],
) -> Transversality {
    let g = strict.restrict(dvar);
    if g.as_nonzero_const().is_some() {
        return Transversality::Empty;
    }
    if g.is_zero() {
        return Transversality::Contained;
    }
    let rest: Vec<usize> = exc.iter().copied().filter(|&i| i != dvar).collect();
    match smoothness_certificate(&g, &rest) {
        Smoothness::CertifiedVia { var, unit } => Transversality::CertifiedVia { var, unit },
        Smoothness::MissesDivisor => Transversality::MissesDivisor,
        Smoothness::Inconclusive => Transversality::Inconclusive,
    }
}

/// Overall verdict for one chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChartVerdict {
    /// The strict transform is a nonzero constant: the chart sees only
    /// exceptional divisors.
    DivisorOnly,
    CertifiedVia { var: usize, unit: BigInt },
    MissesDivisor,
    Inconclusive,
}

impl ChartVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            ChartVerdict::DivisorOnly => "divisor-only",
            ChartVerdict::CertifiedVia { .. } => "certified",
            ChartVerdict::MissesDivisor => "misses-divisor",
            ChartVerdict::Inconclusive => "inconclusive",
        }
    }
}

impl Transversality {
    pub fn name(&self) -> &'static str {
        match self {
            Transversality::Empty => "empty",
            Transversality::Contained => "contained",
            Transversality::CertifiedVia { .. } => "certified",
            Transversality::MissesDivisor => "misses-divisor",
            Transversality::Inconclusive => "inconclusive",
        }
    }

    fn acceptable(&self) -> bool {
        matches!(
            self,
            Transversality::Empty
                | Transversality::CertifiedVia { .. }
                | Transversality::MissesDivisor
        )
    }
}

/// Everything verified about one chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartReport {
    pub cone: Cone,
    pub exceptional: V3,
    pub strict: ChartPoly,
    /// Chart variables whose rays are not coordinate axes: the
    /// exceptional divisors visible in this chart.
    pub exceptional_vars: Vec<usize>,
    pub verdict: ChartVerdict,
    pub transversal: BTreeMap<usize, Transversality>,
    pub ok: bool,
}

/// Runs the full certificate chain on one chart.
pub fn chart_report(f: &Poly, cone: &Cone) -> ChartReport {
    let total = total_transform(f, cone);
    let (exceptional, strict) = strict_transform(&total);
    let exceptional_vars: Vec<usize> =
        (0..3).filter(|&i| !lin::is_axis(cone[i])).collect();
    if strict.as_nonzero_const().is_some() {
        return ChartReport {
            cone: *cone,
            exceptional,
            strict,
            exceptional_vars,
            verdict: ChartVerdict::DivisorOnly,
            transversal: BTreeMap::new(),
            ok: true,
        };
    }
    let sc = smoothness_certificate(&strict, &exceptional_vars);
    let verdict = match sc {
        Smoothness::CertifiedVia { var, unit } => ChartVerdict::CertifiedVia { var, unit },
        Smoothness::MissesDivisor => ChartVerdict::MissesDivisor,
        Smoothness::Inconclusive => ChartVerdict::Inconclusive,
    };
    let mut ok = matches!(
        verdict,
        ChartVerdict::CertifiedVia { .. } | ChartVerdict::MissesDivisor
    );
    let mut transversal = BTreeMap::new();
    if let ChartVerdict::CertifiedVia { .. } = verdict {
        for &i in &exceptional_vars {
            let t = transversality_certificate(&strict, i, &exceptional_vars);
            if !t.acceptable() {
                ok = false;
            }
            transversal.insert(i, t);
        }
    }
    ChartReport { cone: *cone, exceptional, strict, exceptional_vars, verdict, transversal, ok }
}

/// Verifies every chart of a fan; true when all charts are ok.
pub fn route_charts(f: &Poly, cones: &[Cone]) -> (bool, Vec<ChartReport>) {
    let reports: Vec<ChartReport> = cones.iter().map(|c| chart_report(f, c)).collect();
    let ok = reports.iter().all(|r| r.ok);
    (ok, reports)
}

/// Which verification route to attempt.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// Nondegeneracy when the fan refines the dual fan, charts
    /// otherwise.
    Auto,
    /// Require refinement plus nondegeneracy.
    Varchenko,
    /// Chart certificates only.
    Charts,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Auto => "auto",
            Route::Varchenko => "varchenko",
            Route::Charts => "charts",
        }
    }
}

/// The aggregate embedded-resolution report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionReport {
    pub subdivision: SubdivisionReport,
    pub route: Route,
    /// Route that actually decided the verdict: "varchenko", "charts",
    /// or "none" when the fan preconditions already failed.
    pub applied: &'static str,
    pub nondegeneracy: Option<NondegeneracyReport>,
    pub charts: Vec<ChartReport>,
    /// "resolved-by-nondegeneracy", "resolved-by-charts",
    /// "inconclusive" (certificates failed), or "not-resolved"
    /// (preconditions failed).
    pub verdict: &'static str,
}

/// Checks that the fan is a regular subdivision of the octant, then
/// resolves by the requested route: refinement of the dual fan plus
/// nondegeneracy, or per-chart smoothness/transversality certificates.
pub fn verify_embedded_resolution(f: &Poly, cones: &[Cone], route: Route) -> ResolutionReport {
    let newton = newton_polyhedron(f);
    let subdivision = fan::verify_regular_subdivision(cones, &newton);
    let mut report = ResolutionReport {
        subdivision,
        route,
        applied: "none",
        nondegeneracy: None,
        charts: Vec::new(),
        verdict: "not-resolved",
    };
    if !(report.subdivision.is_fan
        && report.subdivision.covers_octant
        && report.subdivision.all_regular)
    {
        return report;
    }
    match route {
        Route::Varchenko => {
            report.applied = "varchenko";
            if !report.subdivision.refines_dual {
                return report;
            }
            let nd = is_nondegenerate(f, &NONDEGENERACY_PRIMES);
            let ok = nd.is_nondegenerate();
            report.nondegeneracy = Some(nd);
            if ok {
                report.verdict = "resolved-by-nondegeneracy";
            }
        }
        Route::Charts => {
            report.applied = "charts";
            let (ok, charts) = route_charts(f, cones);
            report.charts = charts;
            report.verdict = if ok { "resolved-by-charts" } else { "inconclusive" };
        }
        Route::Auto => {
            if report.subdivision.refines_dual {
                let nd = is_nondegenerate(f, &NONDEGENERACY_PRIMES);
                let ok = nd.is_nondegenerate();
                report.nondegeneracy = Some(nd);
                if ok {
                    report.applied = "varchenko";
                    report.verdict = "resolved-by-nondegeneracy";
                    return report;
                }
            }
            report.applied = "charts";
            let (ok, charts) = route_charts(f, cones);
            report.charts = charts;
            report.verdict = if ok { "resolved-by-charts" } else { "inconclusive" };
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const E1: V3 = [1, 0, 0];
    const E2: V3 = [0, 1, 0];
    const E3: V3 = [0, 0, 1];
    const IDENTITY: Cone = [E1, E2, E3];

    fn b_odd_32() -> Poly {
        // the m = 2l−1 family member at k=3, l=2
        Poly::parse("z^3+(x-y)*z^2-y^7*z-x*y^7").unwrap()
    }

    #[test]
    fn identity_chart_is_a_no_op() {
        let f = Poly::parse("z^3+y^3*z+x^2*y^2").unwrap();
        let total = total_transform(&f, &IDENTITY);
        let expected = ChartPoly::from_terms([
            ([0, 0, 3], 1),
            ([0, 3, 1], 1),
            ([2, 2, 0], 1),
        ]);
        assert_eq!(total, expected);
        let (content, strict) = strict_transform(&total);
        assert_eq!(content, [0, 0, 0]);
        assert_eq!(strict, expected);
    }

    #[test]
    fn chart_map_text_and_plane_image() {
        let cone: Cone = [[1, 0, 0], [1, 0, 1], [2, 1, 4]];
        let lines = monomial_map_text(&cone);
        assert_eq!(lines[0], "x = x_1y_1z_1^2");
        assert_eq!(lines[1], "y = z_1");
        assert_eq!(lines[2], "z = y_1z_1^4");
        let total = total_transform(&Poly::parse("z").unwrap(), &cone);
        assert_eq!(total, ChartPoly::from_terms([([0, 1, 4], 1)]));
    }

    #[test]
    fn first_k_chart_identity() {
        // cone ((1,0,0),(l−1,1,s),(l−1,1,s+1)) at k=3, l=2, s=2
        let cone: Cone = [[1, 0, 0], [1, 1, 2], [1, 1, 3]];
        let total = total_transform(&b_odd_32(), &cone);
        let (content, strict) = strict_transform(&total);
        assert_eq!(content, [0, 5, 7]);
        let expected = ChartPoly::from_terms([
            ([0, 1, 2], 1),
            ([1, 0, 0], 1),
            ([0, 0, 0], -1),
            ([0, 4, 3], -1),
            ([1, 3, 1], -1),
        ]);
        assert_eq!(strict, expected);
        assert_eq!(strict.mul_monomial(content), total);

        let report = chart_report(&b_odd_32(), &cone);
        assert_eq!(report.exceptional_vars, vec![1, 2]);
        assert_eq!(
            report.verdict,
            ChartVerdict::CertifiedVia { var: 0, unit: BigInt::from(1) }
        );
        assert!(report.transversal.values().all(|t| t.acceptable()));
        assert!(report.ok);
    }

    #[test]
    fn second_k_chart_identity() {
        // cone ((1,0,0),(l−1,1,k),(l,1,k+1)) at k=3, l=2
        let cone: Cone = [[1, 0, 0], [1, 1, 3], [2, 1, 4]];
        let total = total_transform(&b_odd_32(), &cone);
        let (content, strict) = strict_transform(&total);
        assert_eq!(content, [0, 7, 9]);
        let expected = ChartPoly::from_terms([
            ([0, 2, 3], 1),
            ([1, 0, 1], 1),
            ([0, 0, 0], -1),
            ([0, 3, 2], -1),
            ([1, 1, 0], -1),
        ]);
        assert_eq!(strict, expected);

        let report = chart_report(&b_odd_32(), &cone);
        assert_eq!(report.verdict, ChartVerdict::MissesDivisor);
        assert!(report.transversal.is_empty());
        assert!(report.ok);
    }

    #[test]
    fn third_k_chart_identity() {
        // cone ((1,0,0),(1,0,1),(l,1,k+1)) at k=3, l=2
        let cone: Cone = [[1, 0, 0], [1, 0, 1], [2, 1, 4]];
        let total = total_transform(&b_odd_32(), &cone);
        let (content, strict) = strict_transform(&total);
        assert_eq!(content, [0, 1, 9]);
        let expected = ChartPoly::from_terms([
            ([0, 2, 3], 1),
            ([1, 2, 1], 1),
            ([0, 1, 0], -1),
            ([0, 0, 2], -1),
            ([1, 0, 0], -1),
        ]);
        assert_eq!(strict, expected);

        let report = chart_report(&b_odd_32(), &cone);
        assert_eq!(
            report.verdict,
            ChartVerdict::CertifiedVia { var: 0, unit: BigInt::from(-1) }
        );
        assert!(report.ok);
    }

    #[test]
    fn divisor_only_chart() {
        let cone: Cone = [E1, E2, [1, 1, 1]];
        let report = chart_report(&Poly::parse("x").unwrap(), &cone);
        assert_eq!(report.verdict, ChartVerdict::DivisorOnly);
        assert_eq!(report.exceptional, [1, 0, 1]);
        assert!(report.ok);
    }

    #[test]
    fn transversality_edge_cases() {
        // x - y z restricted to z = 0 leaves x: certified
        let p = ChartPoly::from_terms([([1, 0, 0], 1), ([0, 1, 1], -1)]);
        assert_eq!(
            transversality_certificate(&p, 2, &[1, 2]),
            Transversality::CertifiedVia { var: 0, unit: BigInt::from(1) }
        );
        // x^2 restricted to z = 0 stays x^2: inconclusive
        let q = ChartPoly::from_terms([([2, 0, 0], 1)]);
        assert_eq!(transversality_certificate(&q, 2, &[2]), Transversality::Inconclusive);
        // y z restricted to y = 0 vanishes identically: contained
        let r = ChartPoly::from_terms([([0, 1, 1], 1)]);
        assert_eq!(transversality_certificate(&r, 1, &[1, 2]), Transversality::Contained);
    }

    #[test]
    fn smoothness_examples() {
        // x^2 + y^2 with exceptional z: no linear variable
        let p = ChartPoly::from_terms([([2, 0, 0], 1), ([0, 2, 0], 1)]);
        assert_eq!(smoothness_certificate(&p, &[2]), Smoothness::Inconclusive);
        // 1 + y with exceptional y: constant on the divisor
        let q = ChartPoly::from_terms([([0, 0, 0], 1), ([0, 1, 0], 1)]);
        assert_eq!(smoothness_certificate(&q, &[1]), Smoothness::MissesDivisor);
    }

    #[test]
    fn resolution_routes_on_a_smooth_plane() {
        let f = Poly::parse("z").unwrap();
        let cones = vec![IDENTITY];
        let auto = verify_embedded_resolution(&f, &cones, Route::Auto);
        assert_eq!(auto.verdict, "resolved-by-nondegeneracy");
        assert_eq!(auto.applied, "varchenko");
        let charts = verify_embedded_resolution(&f, &cones, Route::Charts);
        assert_eq!(charts.verdict, "resolved-by-charts");
        assert_eq!(charts.charts.len(), 1);
        assert_eq!(charts.charts[0].verdict, ChartVerdict::DivisorOnly);
    }

    #[test]
    fn precondition_failure_is_not_resolved() {
        let f = Poly::parse("z").unwrap();
        let cones = vec![[E1, E2, [1, 1, 2]]];
        let report = verify_embedded_resolution(&f, &cones, Route::Auto);
        assert_eq!(report.verdict, "not-resolved");
        assert_eq!(report.applied, "none");
        assert!(!report.subdivision.all_regular);
    }

    #[test]
    fn cone_singularity_is_honestly_inconclusive() {
        // the octant alone neither refines the dual fan nor certifies
        let f = Poly::parse("x^2+y^2+z^2").unwrap();
        let report = verify_embedded_resolution(&f, &vec![IDENTITY], Route::Auto);
        assert_eq!(report.applied, "charts");
        assert_eq!(report.verdict, "inconclusive");
        assert!(!report.subdivision.refines_dual);
        assert_eq!(report.charts[0].verdict.name(), "inconclusive");
    }

    #[test]
    fn chart_poly_text_form() {
        let p = ChartPoly::from_terms([
            ([0, 1, 2], 1),
            ([1, 0, 0], 1),
            ([0, 0, 0], -1),
            ([0, 4, 3], -1),
            ([1, 3, 1], -2),
        ]);
        assert_eq!(p.to_text(), "-2x_1y_1^3z_1+x_1-y_1^4z_1^3+y_1z_1^2-1");
        assert_eq!(ChartPoly::zero().to_text(), "0");
    }
}
