//! Simplicial fans in the positive octant: the four-flag subdivision
//! verifier (fan property, octant coverage, regularity, refinement of a
//! dual fan) and two deterministic triangulation strategies.
//!
//! The verifier works in exact rational arithmetic on the slice
//! `a + b + c = 1`: a ray maps to the point `(a/s, b/s)` with
//! `s = a + b + c`, cones become triangles, and pairwise intersections
//! are computed by Sutherland–Hodgman clipping. Coverage is decided by
//! half-edge counting (boundary edges appear once, interior edges twice)
//! together with an exact total-area check.
//!
//! `triangulate` searches for a unimodular triangulation of a given ray
//! set by advancing a front of directed edges inward from the octant
//! boundary; every placed triangle must be unimodular, empty of other
//! rays, and contained in one region of the target fan. When no
//! unimodular triangulation exists on the ray set, `triangulate_any`
//! finds some empty triangulation and `stellar_resolve` regularizes it
//! by stellar subdivision at deepest fundamental-domain points.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lin::{self, V3, AXES};
use crate::newton::{DualCone, NewtonPolyhedron};

/// A full-dimensional simplicial cone, as three generator rays.
pub type Cone = [V3; 3];

/// Reorders the last two generators if needed so the determinant is
/// positive. Panics on degenerate triples.
pub fn ccw(c: Cone) -> Cone {
    let d = lin::det3(c[0], c[1], c[2]);
    assert!(d != 0, "degenerate cone {:?}", c);
    if d > 0 {
        c
    } else {
        [c[0], c[2], c[1]]
    }
}

/// True if the listed generators are linearly independent and span a
/// direct summand of the lattice: a unimodular (regular) cone of their
/// own dimension. Three generators are regular exactly when their
/// determinant is plus or minus one.
pub fn is_regular_cone(gens: &[V3]) -> bool {
    if gens.is_empty() || gens.iter().any(|&g| g == [0, 0, 0]) {
        return false;
    }
    if lin::rank3(gens) != gens.len() {
        return false;
    }
    lin::maximal_minors_gcd(gens) == 1
}

fn in_cone3_closed(r: V3, c: &Cone) -> bool {
    debug_assert!(lin::det3(c[0], c[1], c[2]) > 0);
    lin::det3(r, c[1], c[2]) >= 0
        && lin::det3(c[0], r, c[2]) >= 0
        && lin::det3(c[0], c[1], r) >= 0
}

/// Full-dimensional overlap test for two cones given by generator lists,
/// by searching for a separating plane among pairwise cross products.
pub fn cones_overlap(a: &[V3], b: &[V3]) -> bool {
    let gens: Vec<V3> = a.iter().chain(b.iter()).copied().collect();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let c = lin::cross3(gens[i], gens[j]);
            if c == [0, 0, 0] {
                continue;
            }
            for n in [c, lin::neg3(c)] {
                if a.iter().all(|&g| lin::dot3(g, n) >= 0)
                    && b.iter().all(|&g| lin::dot3(g, n) <= 0)
                {
                    return false;
                }
            }
        }
    }
    true
}

type QPt = (BigRational, BigRational);

fn frac_pt(r: V3) -> QPt {
    let s = BigInt::from(r[0] + r[1] + r[2]);
    (
        BigRational::new(BigInt::from(r[0]), s.clone()),
        BigRational::new(BigInt::from(r[1]), s),
    )
}

fn side(a: &QPt, b: &QPt, p: &QPt) -> BigRational {
    (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0)
}

/// Clips a polygon to the left half-plane of the directed line `a -> b`,
/// deduplicating consecutive (and wrapping) repeats.
fn clip_poly(poly: &[QPt], a: &QPt, b: &QPt) -> Vec<QPt> {
    let m = poly.len();
    let mut out: Vec<QPt> = Vec::new();
    for i in 0..m {
        let p = &poly[i];
        let q = &poly[(i + 1) % m];
        let sp = side(a, b, p);
        let sq = side(a, b, q);
        if !sp.is_negative() {
            out.push(p.clone());
        }
        if (sp.is_positive() && sq.is_negative()) || (sp.is_negative() && sq.is_positive()) {
            let t = &sp / (&sp - &sq);
            out.push((&p.0 + &t * (&q.0 - &p.0), &p.1 + &t * (&q.1 - &p.1)));
        }
    }
    let mut ded: Vec<QPt> = Vec::new();
    for p in out {
        if ded.last() != Some(&p) {
            ded.push(p);
        }
    }
    if ded.len() > 1 && ded.first() == ded.last() {
        ded.pop();
    }
    ded
}

fn poly_area2(poly: &[QPt]) -> BigRational {
    let mut s = BigRational::zero();
    for i in 0..poly.len() {
        let (x1, y1) = &poly[i];
        let (x2, y2) = &poly[(i + 1) % poly.len()];
        s += x1 * y2 - x2 * y1;
    }
    s
}

/// Why a cone list fails to be a fan: the offending pair and a reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanViolation {
    pub first: usize,
    pub second: usize,
    pub reason: &'static str,
}

/// Checks that every pairwise intersection of cones is exactly the cone
/// on their common rays (a shared face).
pub fn is_fan(cones: &[Cone]) -> Result<(), FanViolation> {
    let cones: Vec<Cone> = cones.iter().map(|&c| ccw(c)).collect();
    let polys: Vec<Vec<QPt>> =
        cones.iter().map(|c| c.iter().map(|&r| frac_pt(r)).collect()).collect();
    for i in 0..cones.len() {
        for j in (i + 1)..cones.len() {
            let mut q = polys[i].clone();
            for k in 0..3 {
                q = clip_poly(&q, &polys[j][k], &polys[j][(k + 1) % 3]);
                if q.is_empty() {
                    break;
                }
            }
            let a: BTreeSet<V3> = cones[i].iter().copied().collect();
            let common: BTreeSet<V3> =
                cones[j].iter().copied().filter(|r| a.contains(r)).collect();
            if q.is_empty() {
                if !common.is_empty() {
                    return Err(FanViolation {
                        first: i,
                        second: j,
                        reason: "common ray but empty intersection",
                    });
                }
                continue;
            }
            if !poly_area2(&q).is_zero() {
                return Err(FanViolation { first: i, second: j, reason: "full-dim overlap" });
            }
            let cpts: BTreeSet<QPt> = common.iter().map(|&r| frac_pt(r)).collect();
            let qpts: BTreeSet<QPt> = q.into_iter().collect();
            if qpts.len() == 1 {
                if common.len() != 1 || qpts != cpts {
                    return Err(FanViolation {
                        first: i,
                        second: j,
                        reason: "point contact not a shared ray",
                    });
                }
            } else {
                if common.len() != 2 {
                    return Err(FanViolation {
                        first: i,
                        second: j,
                        reason: "segment contact not spanned by common rays",
                    });
                }
                let lo = qpts.iter().next().expect("nonempty").clone();
                let hi = qpts.iter().next_back().expect("nonempty").clone();
                let ends: BTreeSet<QPt> = [lo, hi].into_iter().collect();
                if ends != cpts {
                    return Err(FanViolation {
                        first: i,
                        second: j,
                        reason: "segment exceeds common-ray cone",
                    });
                }
            }
        }
    }
    Ok(())
}

/// Why a cone list fails to cover the octant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoverViolation {
    /// An unordered ray pair appearing the wrong number of times: twice
    /// for interior walls, once for walls on the octant boundary.
    Edge { pair: [V3; 2], count: usize, boundary: bool },
    /// The slice areas do not add up to the full octant slice.
    Area { total: BigRational },
}

/// Checks by half-edge counting and exact slice area that the cones
/// tile the whole positive octant.
pub fn covers_octant(cones: &[Cone]) -> Result<(), CoverViolation> {
    let mut cnt: BTreeMap<[V3; 2], usize> = BTreeMap::new();
    for c in cones {
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            let mut pair = [c[a], c[b]];
            pair.sort();
            *cnt.entry(pair).or_insert(0) += 1;
        }
    }
    for (pair, count) in cnt {
        let [u, v] = pair;
        let boundary = (0..3).any(|i| u[i] == 0 && v[i] == 0);
        let expected = if boundary { 1 } else { 2 };
        if count != expected {
            return Err(CoverViolation::Edge { pair, count, boundary });
        }
    }
    let mut total = BigRational::zero();
    for c in cones {
        let poly: Vec<QPt> = c.iter().map(|&r| frac_pt(r)).collect();
        total += poly_area2(&poly).abs();
    }
    if total != BigRational::one() {
        return Err(CoverViolation::Area { total });
    }
    Ok(())
}

/// Checks that every cone is unimodular, returning the offenders.
pub fn all_regular(cones: &[Cone]) -> Result<(), Vec<Cone>> {
    let bad: Vec<Cone> = cones
        .iter()
        .copied()
        .filter(|c| lin::det3(c[0], c[1], c[2]).abs() != 1)
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Checks that each cone lies inside a single maximal cone of the dual
/// fan of the Newton polyhedron.
pub fn refines(cones: &[Cone], newton: &NewtonPolyhedron) -> Result<(), Cone> {
    for &c in cones {
        if !newton
            .dual_cones
            .iter()
            .any(|k| c.iter().all(|&r| k.contains(r)))
        {
            return Err(c);
        }
    }
    Ok(())
}

/// The four verification flags for a proposed regular subdivision,
/// together with the first witness of each failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdivisionReport {
    pub is_fan: bool,
    pub covers_octant: bool,
    pub all_regular: bool,
    pub refines_dual: bool,
    pub fan_violation: Option<FanViolation>,
    pub cover_violation: Option<CoverViolation>,
    pub irregular: Vec<Cone>,
    pub nonrefining: Option<Cone>,
}

impl SubdivisionReport {
    /// All four flags hold.
    pub fn all_true(&self) -> bool {
        self.is_fan && self.covers_octant && self.all_regular && self.refines_dual
    }
}

/// Runs all four subdivision checks against a Newton polyhedron.
pub fn verify_regular_subdivision(
    cones: &[Cone],
    newton: &NewtonPolyhedron,
) -> SubdivisionReport {
    let fan = is_fan(cones);
    let cover = covers_octant(cones);
    let regular = all_regular(cones);
    let refine = refines(cones, newton);
    SubdivisionReport {
        is_fan: fan.is_ok(),
        covers_octant: cover.is_ok(),
        all_regular: regular.is_ok(),
        refines_dual: refine.is_ok(),
        fan_violation: fan.err(),
        cover_violation: cover.err(),
        irregular: regular.err().unwrap_or_default(),
        nonrefining: refine.err(),
    }
}

/// Default search budget for the triangulators.
pub const DEFAULT_MAX_STEPS: u64 = 4_000_000;

struct Front {
    edges: BTreeSet<(usize, usize)>,
}

enum Op {
    Del((usize, usize)),
    Add((usize, usize)),
}

impl Front {
    /// Places a triangle: each of its three directed edges either
    /// consumes the matching front edge or extends the front with its
    /// reverse; meeting the same orientation already on the front means
    /// the triangle would cover ground twice, so placement is refused.
    fn try_place(&mut self, t: [usize; 3]) -> Option<Vec<Op>> {
        let mut ops: Vec<Op> = Vec::with_capacity(3);
        for e in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            let rev = (e.1, e.0);
            if self.edges.contains(&e) {
                ops.push(Op::Del(e));
            } else if self.edges.contains(&rev) {
                return None;
            } else {
                ops.push(Op::Add(rev));
            }
        }
        for op in &ops {
            match op {
                Op::Del(e) => {
                    self.edges.remove(e);
                }
                Op::Add(e) => {
                    self.edges.insert(*e);
                }
            }
        }
        Some(ops)
    }

    fn undo(&mut self, ops: &[Op]) {
        for op in ops {
            match op {
                Op::Del(e) => {
                    self.edges.insert(*e);
                }
                Op::Add(e) => {
                    self.edges.remove(e);
                }
            }
        }
    }

    fn key(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }
}

/// Seeds the advancing front with the octant boundary, split at every
/// ray lying on a coordinate plane, ordered so the interior is on the
/// left of each directed edge.
fn seed_front(rays: &[V3]) -> Front {
    let mut edges = BTreeSet::new();
    // (zero coordinate, numerator coordinate, denominator coordinates, descending?)
    let specs: [(usize, usize, (usize, usize), bool); 3] = [
        (2, 1, (0, 1), false), // e1 -> e2 along c = 0, ascending b-share
        (0, 1, (1, 2), true),  // e2 -> e3 along a = 0, descending b-share
        (1, 0, (0, 2), false), // e3 -> e1 along b = 0, ascending a-share
    ];
    for (zero, num, den, descending) in specs {
        let mut pts: Vec<usize> =
            (0..rays.len()).filter(|&i| rays[i][zero] == 0).collect();
        pts.sort_by(|&i, &j| {
            let (a, b) = (rays[i], rays[j]);
            let o = lin::cmp_frac(
                a[num],
                a[den.0] + a[den.1],
                b[num],
                b[den.0] + b[den.1],
            );
            if descending {
                o.reverse()
            } else {
                o
            }
        });
        for w in pts.windows(2) {
            edges.insert((w[0], w[1]));
        }
    }
    Front { edges }
}

fn region_masks(rays: &[V3], regions: &[DualCone]) -> Vec<u64> {
    rays.iter()
        .map(|&r| {
            let mut mask = 0u64;
            for (j, k) in regions.iter().enumerate() {
                if k.contains(r) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect()
}

/// Searches for a unimodular triangulation of the octant on exactly the
/// given rays, refining `regions` (the maximal cones of a dual fan).
/// `forced` cones are placed first; candidates overlapping any `avoid`
/// cone are discarded. Returns oriented cones, or `None` if the search
/// space is exhausted or the step budget runs out.
pub fn triangulate(
    rays: &[V3],
    regions: &[DualCone],
    forced: &[Cone],
    avoid: &[Cone],
    max_steps: u64,
) -> Option<Vec<Cone>> {
    let rays: Vec<V3> = {
        let s: BTreeSet<V3> = rays.iter().copied().collect();
        s.into_iter().collect()
    };
    let n = rays.len();
    let memb = region_masks(&rays, regions);

    let mut tris: Vec<[usize; 3]> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if memb[i] & memb[j] & memb[k] == 0 {
                    continue;
                }
                let d = lin::det3(rays[i], rays[j], rays[k]);
                let t = match d {
                    1 => [i, j, k],
                    -1 => [i, k, j],
                    _ => continue,
                };
                let cone = [rays[t[0]], rays[t[1]], rays[t[2]]];
                if avoid.iter().any(|f| cones_overlap(&cone, f)) {
                    continue;
                }
                let empty = (0..n)
                    .filter(|&m| m != i && m != j && m != k)
                    .all(|m| !in_cone3_closed(rays[m], &cone));
                if empty {
                    tris.push(t);
                }
            }
        }
    }
    let mut cand_by_edge: BTreeMap<(usize, usize), Vec<[usize; 3]>> = BTreeMap::new();
    for &t in &tris {
        for e in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            cand_by_edge.entry(e).or_default().push(t);
        }
    }
    for v in cand_by_edge.values_mut() {
        v.sort();
    }

    let mut front = seed_front(&rays);
    let mut placed: Vec<[usize; 3]> = Vec::new();
    for f in forced {
        let mut t = f.map(|g| {
            rays.binary_search(&g).expect("forced cone ray must be in the ray set")
        });
        let cone = [rays[t[0]], rays[t[1]], rays[t[2]]];
        if lin::det3(cone[0], cone[1], cone[2]) == -1 {
            t.swap(1, 2);
        }
        assert_eq!(
            lin::det3(rays[t[0]], rays[t[1]], rays[t[2]]),
            1,
            "forced cone must be unimodular: {:?}",
            f
        );
        let ops = front.try_place(t);
        assert!(ops.is_some(), "forced cone rejected by the front: {:?}", f);
        placed.push(t);
    }

    struct Search<'a> {
        cand_by_edge: &'a BTreeMap<(usize, usize), Vec<[usize; 3]>>,
        front: Front,
        placed: Vec<[usize; 3]>,
        seen_fail: BTreeSet<Vec<(usize, usize)>>,
        steps: u64,
        max_steps: u64,
    }

    impl Search<'_> {
        fn options(&self, e: (usize, usize)) -> Vec<[usize; 3]> {
            let mut out = Vec::new();
            if let Some(cands) = self.cand_by_edge.get(&e) {
                for &t in cands {
                    let cyc = [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])];
                    if !cyc.contains(&e) {
                        continue;
                    }
                    let bad = cyc.iter().any(|&e2| {
                        e2 != e
                            && !self.front.edges.contains(&e2)
                            && self.front.edges.contains(&(e2.1, e2.0))
                    });
                    if !bad {
                        out.push(t);
                    }
                }
            }
            out
        }

        fn dfs(&mut self) -> bool {
            if self.front.edges.is_empty() {
                return true;
            }
            self.steps += 1;
            if self.steps > self.max_steps {
                return false;
            }
            let key = self.front.key();
            if self.seen_fail.contains(&key) {
                return false;
            }
            let mut pick: Option<((usize, usize), Vec<[usize; 3]>)> = None;
            for e in self.front.edges.iter().copied().collect::<Vec<_>>() {
                let o = self.options(e);
                if o.is_empty() {
                    if self.seen_fail.len() < 2_000_000 {
                        self.seen_fail.insert(key);
                    }
                    return false;
                }
                let better = match &pick {
                    None => true,
                    Some((_, best)) => o.len() < best.len(),
                };
                if better {
                    let single = o.len() == 1;
                    pick = Some((e, o));
                    if single {
                        break;
                    }
                }
            }
            let (_, opts) = pick.expect("front is nonempty");
            for t in opts {
                if let Some(ops) = self.front.try_place(t) {
                    self.placed.push(t);
                    if self.dfs() {
                        return true;
                    }
                    self.placed.pop();
                    self.front.undo(&ops);
                }
            }
            if self.seen_fail.len() < 2_000_000 {
                self.seen_fail.insert(key);
            }
            false
        }
    }

    let mut search = Search {
        cand_by_edge: &cand_by_edge,
        front,
        placed,
        seen_fail: BTreeSet::new(),
        steps: 0,
        max_steps,
    };
    if search.dfs() {
        Some(
            search
                .placed
                .iter()
                .map(|t| [rays[t[0]], rays[t[1]], rays[t[2]]])
                .collect(),
        )
    } else {
        None
    }
}

/// Like [`triangulate`], but admits empty candidate triangles of any
/// nonzero determinant, preferring small ones; the result generally
/// needs [`stellar_resolve`] afterwards.
pub fn triangulate_any(
    rays: &[V3],
    regions: &[DualCone],
    max_steps: u64,
) -> Option<Vec<Cone>> {
    let rays: Vec<V3> = {
        let s: BTreeSet<V3> = rays.iter().copied().collect();
        s.into_iter().collect()
    };
    let n = rays.len();
    let memb = region_masks(&rays, regions);
    if memb.iter().any(|&m| m == 0) {
        return None;
    }

    let mut cands: Vec<(i64, [usize; 3])> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if memb[i] & memb[j] & memb[k] == 0 {
                    continue;
                }
                let d = lin::det3(rays[i], rays[j], rays[k]);
                if d == 0 {
                    continue;
                }
                let (d, t) = if d > 0 { (d, [i, j, k]) } else { (-d, [i, k, j]) };
                let cone = [rays[t[0]], rays[t[1]], rays[t[2]]];
                let empty = (0..n)
                    .filter(|&m| m != i && m != j && m != k)
                    .all(|m| !in_cone3_closed(rays[m], &cone));
                if empty {
                    cands.push((d, t));
                }
            }
        }
    }
    cands.sort_by_key(|&(d, t)| (d, [rays[t[0]], rays[t[1]], rays[t[2]]]));
    let mut cand_by_edge: BTreeMap<(usize, usize), Vec<[usize; 3]>> = BTreeMap::new();
    for &(_, t) in &cands {
        for e in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            cand_by_edge.entry(e).or_default().push(t);
        }
    }

    struct Search<'a> {
        cand_by_edge: &'a BTreeMap<(usize, usize), Vec<[usize; 3]>>,
        front: Front,
        placed: Vec<[usize; 3]>,
        fail_memo: BTreeSet<Vec<(usize, usize)>>,
        steps: u64,
        max_steps: u64,
    }

    impl Search<'_> {
        fn options(&mut self, e: (usize, usize)) -> Vec<[usize; 3]> {
            let mut out = Vec::new();
            if let Some(cands) = self.cand_by_edge.get(&e).cloned() {
                for t in cands {
                    if let Some(ops) = self.front.try_place(t) {
                        self.front.undo(&ops);
                        out.push(t);
                    }
                }
            }
            out
        }

        fn dfs(&mut self) -> bool {
            self.steps += 1;
            if self.steps > self.max_steps {
                return false;
            }
            if self.front.edges.is_empty() {
                return true;
            }
            let key = self.front.key();
            if self.fail_memo.contains(&key) {
                return false;
            }
            let mut pick: Option<((usize, usize), Vec<[usize; 3]>)> = None;
            for e in self.front.edges.iter().copied().collect::<Vec<_>>() {
                let o = self.options(e);
                if o.is_empty() {
                    if self.fail_memo.len() < 2_000_000 {
                        self.fail_memo.insert(key);
                    }
                    return false;
                }
                let better = match &pick {
                    None => true,
                    Some((_, best)) => o.len() < best.len(),
                };
                if better {
                    let single = o.len() == 1;
                    pick = Some((e, o));
                    if single {
                        break;
                    }
                }
            }
            let (_, opts) = pick.expect("front is nonempty");
            for t in opts {
                if let Some(ops) = self.front.try_place(t) {
                    self.placed.push(t);
                    if self.dfs() {
                        return true;
                    }
                    self.placed.pop();
                    self.front.undo(&ops);
                }
            }
            if self.fail_memo.len() < 2_000_000 {
                self.fail_memo.insert(key);
            }
            false
        }
    }

    let mut search = Search {
        cand_by_edge: &cand_by_edge,
        front: seed_front(&rays),
        placed: Vec::new(),
        fail_memo: BTreeSet::new(),
        steps: 0,
        max_steps,
    };
    if search.dfs() {
        Some(
            search
                .placed
                .iter()
                .map(|t| [rays[t[0]], rays[t[1]], rays[t[2]]])
                .collect(),
        )
    } else {
        None
    }
}

/// The primitive lattice point in the half-open fundamental
/// parallelepiped of a non-unimodular cone (excluding the origin and
/// the generators) that minimizes the sum of barycentric coefficients.
/// Returns `None` for unimodular cones.
pub fn hilbert_point(cone: Cone) -> Option<V3> {
    let [u, mut v, mut w] = cone;
    let mut d = lin::det3(u, v, w);
    assert!(d != 0, "degenerate cone");
    if d < 0 {
        core::mem::swap(&mut v, &mut w);
        d = -d;
    }
    if d == 1 {
        return None;
    }
    // best = (numerator sum, point); keys compared as na+nb+nc over d,
    // which shares a denominator, so the numerator sum orders them
    let mut best: Option<(i64, V3)> = None;
    for pa in 0..=(u[0] + v[0] + w[0]) {
        for pb in 0..=(u[1] + v[1] + w[1]) {
            for pc in 0..=(u[2] + v[2] + w[2]) {
                let p = [pa, pb, pc];
                if p == [0, 0, 0] || p == u || p == v || p == w {
                    continue;
                }
                if lin::primitive(p) != p {
                    continue;
                }
                let na = lin::det3(p, v, w);
                let nb = lin::det3(u, p, w);
                let nc = lin::det3(u, v, p);
                if !(0..d).contains(&na) || !(0..d).contains(&nb) || !(0..d).contains(&nc) {
                    continue;
                }
                if na == 0 && nb == 0 && nc == 0 {
                    continue;
                }
                let key = (na + nb + nc, p);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    Some(best.expect("non-unimodular cone has a fundamental-domain point").1)
}

/// Stellar-subdivides until every cone is unimodular: repeatedly picks
/// the first non-regular cone, finds its deepest fundamental-domain
/// point, and splits every cone containing that point.
pub fn stellar_resolve(cones: &[Cone]) -> Vec<Cone> {
    let mut cones: Vec<Cone> = cones.iter().map(|&c| ccw(c)).collect();
    for _ in 0..10_000 {
        let mut bad: Vec<Cone> = cones
            .iter()
            .copied()
            .filter(|c| lin::det3(c[0], c[1], c[2]).abs() != 1)
            .collect();
        if bad.is_empty() {
            return cones;
        }
        bad.sort();
        let p = hilbert_point(bad[0]).expect("non-unimodular");
        let mut next: Vec<Cone> = Vec::new();
        for c in cones {
            if c.contains(&p) || !in_cone3_closed(p, &c) {
                next.push(c);
                continue;
            }
            let [u, v, w] = c;
            for child in [[p, v, w], [u, p, w], [u, v, p]] {
                if lin::det3(child[0], child[1], child[2]) != 0 {
                    next.push(ccw(child));
                }
            }
        }
        cones = next;
    }
    panic!("stellar resolution did not terminate");
}

/// How a subdivision was produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubdivisionMethod {
    /// Shipped as explicit cone data.
    Explicit,
    /// Found directly by the unimodular triangulator.
    Unimodular,
    /// Any-determinant triangulation regularized by stellar subdivision.
    Stellar,
}

impl SubdivisionMethod {
    pub fn name(self) -> &'static str {
        match self {
            SubdivisionMethod::Explicit => "explicit",
            SubdivisionMethod::Unimodular => "unimodular",
            SubdivisionMethod::Stellar => "stellar",
        }
    }
}

/// Builds a regular subdivision refining the dual fan of `newton` on the
/// primitivized theorem vectors, the axes, and all dual-cone rays:
/// first the unimodular triangulator, then the any-determinant
/// triangulator followed by stellar resolution.
pub fn build_subdivision(
    newton: &NewtonPolyhedron,
    tvecs: &[V3],
    forced: &[Cone],
    avoid: &[Cone],
) -> Option<(Vec<Cone>, SubdivisionMethod)> {
    let mut rays: BTreeSet<V3> = tvecs.iter().map(|&v| lin::primitive(v)).collect();
    rays.extend(AXES);
    for c in &newton.dual_cones {
        rays.extend(c.rays.iter().copied());
    }
    let rays: Vec<V3> = rays.into_iter().collect();
    if let Some(cones) =
        triangulate(&rays, &newton.dual_cones, forced, avoid, DEFAULT_MAX_STEPS)
    {
        return Some((cones, SubdivisionMethod::Unimodular));
    }
    let cones = triangulate_any(&rays, &newton.dual_cones, DEFAULT_MAX_STEPS)?;
    Some((stellar_resolve(&cones), SubdivisionMethod::Stellar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::newton_polyhedron;
    use crate::poly::Poly;

    const E1: V3 = [1, 0, 0];
    const E2: V3 = [0, 1, 0];
    const E3: V3 = [0, 0, 1];

    fn octant() -> NewtonPolyhedron {
        NewtonPolyhedron::from_points(alloc::vec![[0, 0, 0]])
    }

    #[test]
    fn octant_region_is_the_full_octant() {
        let n = octant();
        assert_eq!(n.dual_cones.len(), 1);
        assert_eq!(n.dual_cones[0].rays, alloc::vec![E3, E2, E1]);
        assert!(n.dual_cones[0].contains([3, 1, 4]));
    }

    #[test]
    fn trivial_fan_verifies() {
        let cones = alloc::vec![[E1, E2, E3]];
        let rep = verify_regular_subdivision(&cones, &octant());
        assert!(rep.all_true(), "{:?}", rep);
    }

    #[test]
    fn barycentric_split_verifies() {
        let v = [1, 1, 1];
        let cones = alloc::vec![[E1, E2, v], [E2, E3, v], [E3, E1, v]];
        let rep = verify_regular_subdivision(&cones, &octant());
        assert!(rep.all_true(), "{:?}", rep);
    }

    #[test]
    fn overlap_is_reported() {
        let cones = alloc::vec![[E1, E2, E3], [E1, E2, [1, 1, 1]]];
        let err = is_fan(&cones).unwrap_err();
        assert_eq!(err.reason, "full-dim overlap");
    }

    #[test]
    fn coverage_gap_is_reported() {
        let v = [1, 1, 1];
        let cones = alloc::vec![[E1, E2, v], [E2, E3, v]];
        match covers_octant(&cones) {
            Err(CoverViolation::Edge { count, boundary, .. }) => {
                assert_eq!(count, 1);
                assert!(!boundary);
            }
            other => panic!("expected an edge violation, got {:?}", other),
        }
    }

    #[test]
    fn irregular_cone_is_reported() {
        let cones = alloc::vec![[E1, E2, [1, 1, 2]]];
        let bad = all_regular(&cones).unwrap_err();
        assert_eq!(bad, alloc::vec![[E1, E2, [1, 1, 2]]]);
    }

    #[test]
    fn refinement_against_a_real_dual_fan() {
        let f = Poly::parse("z^3+y^3*z+x^2*y^2").unwrap();
        let n = newton_polyhedron(&f);
        assert!(refines(&alloc::vec![[E1, E2, [5, 4, 6]]], &n).is_ok());
        let bad = [E1, E3, [1, 1, 1]];
        assert_eq!(refines(&alloc::vec![bad], &n).unwrap_err(), bad);
    }

    #[test]
    fn triangulate_reproduces_the_barycentric_split() {
        let rays = alloc::vec![E1, E2, E3, [1, 1, 1]];
        let n = octant();
        let cones =
            triangulate(&rays, &n.dual_cones, &[], &[], DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(cones.len(), 3);
        let rep = verify_regular_subdivision(&cones, &n);
        assert!(rep.all_true(), "{:?}", rep);
        let again =
            triangulate(&rays, &n.dual_cones, &[], &[], DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(cones, again);
    }

    #[test]
    fn triangulate_honors_forced_cones() {
        let rays = alloc::vec![E1, E2, E3, [1, 1, 1]];
        let n = octant();
        let forced = [[E2, E3, [1, 1, 1]]];
        let cones =
            triangulate(&rays, &n.dual_cones, &forced, &[], DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(ccw(cones[0]), ccw(forced[0]));
        assert!(verify_regular_subdivision(&cones, &n).all_true());
    }

    #[test]
    fn no_unimodular_triangulation_on_a_deficient_ray_set() {
        let rays = alloc::vec![E1, E2, E3, [1, 1, 2]];
        let n = octant();
        assert!(triangulate(&rays, &n.dual_cones, &[], &[], DEFAULT_MAX_STEPS).is_none());
        let any = triangulate_any(&rays, &n.dual_cones, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(any.len(), 3);
        let resolved = stellar_resolve(&any);
        let rep = verify_regular_subdivision(&resolved, &n);
        assert!(rep.all_true(), "{:?}", rep);
    }

    #[test]
    fn hilbert_points() {
        assert_eq!(hilbert_point([E1, E2, E3]), None);
        assert_eq!(hilbert_point([E1, E2, [1, 1, 2]]), Some([1, 1, 1]));
        assert_eq!(hilbert_point([E1, E2, [1, 1, 3]]), Some([1, 1, 2]));
    }

    #[test]
    fn stellar_resolution_of_a_determinant_two_cone() {
        let v = [1, 1, 2];
        let cones = alloc::vec![[E1, E2, v], [E2, E3, v], [E3, E1, v]];
        let resolved = stellar_resolve(&cones);
        assert_eq!(resolved.len(), 5);
        assert!(all_regular(&resolved).is_ok());
        let rep = verify_regular_subdivision(&resolved, &octant());
        assert!(rep.all_true(), "{:?}", rep);
        assert_eq!(
            resolved,
            alloc::vec![
                [[1, 1, 1], E2, v],
                [E1, [1, 1, 1], v],
                [E1, E2, [1, 1, 1]],
                [E2, E3, v],
                [E3, E1, v],
            ]
        );
    }

    #[test]
    fn overlap_test_respects_shared_walls() {
        let a = [E1, E2, [1, 1, 1]];
        let b = [E1, [1, 1, 1], E3];
        assert!(!cones_overlap(&a, &b));
        assert!(cones_overlap(&a, &a));
        assert!(cones_overlap(&[E1, E2, E3], &a));
    }

    #[test]
    fn regular_cone_generator_lists() {
        assert!(is_regular_cone(&[E1, E2, E3]));
        assert!(is_regular_cone(&[E1, [1, 1, 1]]));
        assert!(is_regular_cone(&[[5, 4, 6]]));
        assert!(!is_regular_cone(&[[2, 0, 0]]));
        assert!(!is_regular_cone(&[E1, E2, [1, 1, 2]]));
        assert!(!is_regular_cone(&[[1, 1, 0], [1, -1, 0]]));
        assert!(!is_regular_cone(&[E1, [2, 0, 0]]));
        assert!(!is_regular_cone(&[]));
    }
}
