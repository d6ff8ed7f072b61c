//! Newton polyhedra of ambient polynomials: facets (compact and
//! noncompact), vertices, the dual fan of vertex normal cones, compact
//! faces, face polynomials, and a modular nondegeneracy check.
//!
//! The polyhedron of a polynomial with support `S` is `conv(S) + R^3_+`.
//! Facet normals are found among primitivized cross products of support
//! differences and axes; a candidate is a facet normal when its argmin
//! face together with its zero-coordinate recession directions spans a
//! plane. Noncompact facets are kept — they are needed both for vertex
//! detection and for the compactness test on faces.
//!
//! Nondegeneracy is certified modulo several primes: for every compact
//! face, the face polynomial and its three partials must have no common
//! zero on the torus `(F_p^*)^3`. Faces are quasi-homogeneous, so the
//! scan shrinks one variable to a transversal of the scaling action;
//! two-term faces are decided by a closed form. Both shortcuts are
//! cross-validated against the naive scan in the test suite.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::lin::{self, V3, AXES};
use crate::poly::Poly;

/// A facet of the Newton polyhedron: the primitive inner normal, the
/// minimum of the normal over the support, and the support points
/// attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: V3,
    pub offset: i64,
    pub argmin: Vec<V3>,
}

/// The normal cone of a vertex of the Newton polyhedron: all weight
/// vectors whose minimum over the support is attained at that vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualCone {
    pub vertex: V3,
    pub rays: Vec<V3>,
    constraints: Vec<V3>,
}

impl DualCone {
    /// True if the (closed) cone contains `w`.
    pub fn contains(&self, w: V3) -> bool {
        self.constraints.iter().all(|&c| lin::dot3(w, c) >= 0)
    }
}

/// A compact face: its support points and a strictly positive weight
/// vector realizing it as an argmin face.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CompactFace {
    pub points: Vec<V3>,
    pub normal: V3,
}

/// The Newton polyhedron `conv(support) + R^3_+` of an ambient
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonPolyhedron {
    pub points: Vec<V3>,
    pub facets: Vec<Facet>,
    pub vertices: Vec<V3>,
    pub dual_cones: Vec<DualCone>,
}

/// Builds the Newton polyhedron of a nonzero ambient polynomial.
pub fn newton_polyhedron(f: &Poly) -> NewtonPolyhedron {
    NewtonPolyhedron::from_points(f.support3())
}

impl NewtonPolyhedron {
    /// Builds the polyhedron of a nonempty set of lattice points.
    pub fn from_points(points: Vec<V3>) -> NewtonPolyhedron {
        assert!(!points.is_empty(), "Newton polyhedron of an empty support");
        let points: Vec<V3> = {
            let s: BTreeSet<V3> = points.into_iter().collect();
            s.into_iter().collect()
        };

        let mut candidates: BTreeSet<V3> = BTreeSet::new();
        let push = |v: V3, candidates: &mut BTreeSet<V3>| {
            for s in [v, lin::neg3(v)] {
                if s != [0, 0, 0] && s.iter().all(|&c| c >= 0) {
                    candidates.insert(lin::primitive(s));
                }
            }
        };
        for a in AXES {
            candidates.insert(a);
        }
        let mut diffs: Vec<V3> = Vec::new();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                diffs.push(lin::sub3(points[i], points[j]));
            }
        }
        for &d in &diffs {
            for a in AXES {
                push(lin::cross3(d, a), &mut candidates);
            }
        }
        for i in 0..diffs.len() {
            for j in (i + 1)..diffs.len() {
                push(lin::cross3(diffs[i], diffs[j]), &mut candidates);
            }
        }

        let mut facets: Vec<Facet> = Vec::new();
        for &w in &candidates {
            let offset = points.iter().map(|&p| lin::dot3(w, p)).min().expect("nonempty");
            let argmin: Vec<V3> =
                points.iter().copied().filter(|&p| lin::dot3(w, p) == offset).collect();
            let mut dirs: Vec<V3> = Vec::new();
            for i in 1..argmin.len() {
                dirs.push(lin::sub3(argmin[i], argmin[0]));
            }
            for (i, a) in AXES.iter().enumerate() {
                if w[i] == 0 {
                    dirs.push(*a);
                }
            }
            if lin::rank3(&dirs) == 2 {
                facets.push(Facet { normal: w, offset, argmin });
            }
        }

        let vertices: Vec<V3> = points
            .iter()
            .copied()
            .filter(|&p| {
                let normals: Vec<V3> = facets
                    .iter()
                    .filter(|f| f.argmin.contains(&p))
                    .map(|f| f.normal)
                    .collect();
                lin::rank3(&normals) == 3
            })
            .collect();

        let dual_cones: Vec<DualCone> =
            vertices.iter().map(|&v| dual_cone_of(&points, v)).collect();

        NewtonPolyhedron { points, facets, vertices, dual_cones }
    }

    /// The largest facet offset among strictly positive facet normals:
    /// the natural jet depth at which every vertex contact has fired.
    pub fn default_max_level(&self) -> i64 {
        self.facets
            .iter()
            .filter(|f| f.normal.iter().all(|&c| c > 0))
            .map(|f| f.offset)
            .max()
            .unwrap_or(0)
    }

    /// The dual cones whose vertex attains the minimum of `w` over the
    /// support (equivalently, the maximal dual-fan cones containing `w`).
    pub fn cones_containing(&self, w: V3) -> Vec<&DualCone> {
        self.dual_cones.iter().filter(|c| c.contains(w)).collect()
    }

    /// All compact faces (of every dimension), each with a strictly
    /// positive realizing normal. Faces are intersections of facet
    /// argmin sets; a face is compact exactly when its containing facet
    /// normals jointly touch all three coordinates, and the sum of those
    /// normals is then a strictly positive weight realizing the face.
    pub fn compact_faces(&self) -> Vec<CompactFace> {
        let argmins: Vec<BTreeSet<V3>> =
            self.facets.iter().map(|f| f.argmin.iter().copied().collect()).collect();
        let mut faces: BTreeSet<Vec<V3>> = BTreeSet::new();
        for a in &argmins {
            faces.insert(a.iter().copied().collect());
        }
        loop {
            let mut fresh: Vec<Vec<V3>> = Vec::new();
            let list: Vec<Vec<V3>> = faces.iter().cloned().collect();
            for i in 0..list.len() {
                for j in (i + 1)..list.len() {
                    let a: BTreeSet<V3> = list[i].iter().copied().collect();
                    let cap: Vec<V3> =
                        list[j].iter().copied().filter(|p| a.contains(p)).collect();
                    if !cap.is_empty() && !faces.contains(&cap) {
                        fresh.push(cap);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            faces.extend(fresh);
        }

        let mut out: Vec<CompactFace> = Vec::new();
        for face in faces {
            let face_set: BTreeSet<V3> = face.iter().copied().collect();
            let containing: Vec<&Facet> = self
                .facets
                .iter()
                .filter(|f| face_set.iter().all(|p| f.argmin.contains(p)))
                .collect();
            let mut wsum = [0i64; 3];
            for f in &containing {
                for i in 0..3 {
                    wsum[i] += f.normal[i];
                }
            }
            if wsum.iter().all(|&c| c > 0) {
                out.push(CompactFace { points: face, normal: wsum });
            }
        }
        out.sort();
        out
    }
}

fn dual_cone_of(points: &[V3], vertex: V3) -> DualCone {
    let mut constraints: Vec<V3> = points
        .iter()
        .copied()
        .filter(|&q| q != vertex)
        .map(|q| lin::sub3(q, vertex))
        .collect();
    constraints.extend(AXES);
    let mut rays: BTreeSet<V3> = BTreeSet::new();
    for i in 0..constraints.len() {
        for j in (i + 1)..constraints.len() {
            let c = lin::cross3(constraints[i], constraints[j]);
            for r in [c, lin::neg3(c)] {
                if r == [0, 0, 0] {
                    continue;
                }
                let r = lin::primitive(r);
                if constraints.iter().any(|&c| lin::dot3(r, c) < 0) {
                    continue;
                }
                let active: Vec<V3> = constraints
                    .iter()
                    .copied()
                    .filter(|&c| lin::dot3(r, c) == 0)
                    .collect();
                if lin::rank3(&active) == 2 {
                    rays.insert(r);
                }
            }
        }
    }
    DualCone { vertex, rays: rays.into_iter().collect(), constraints }
}

/// The dual fan of a Newton polyhedron, as a shared ray list plus one
/// cone (a sorted list of ray indices) per vertex. Cones of vertices
/// with four or more extreme rays are not simplicial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualFan {
    pub rays: Vec<V3>,
    pub cones: Vec<Vec<usize>>,
}

/// Assembles the dual fan from the vertex normal cones.
pub fn dual_newton_fan(n: &NewtonPolyhedron) -> DualFan {
    let rays: Vec<V3> = {
        let mut s: BTreeSet<V3> = BTreeSet::new();
        for c in &n.dual_cones {
            s.extend(c.rays.iter().copied());
        }
        s.into_iter().collect()
    };
    let cones: Vec<Vec<usize>> = n
        .dual_cones
        .iter()
        .map(|c| {
            c.rays
                .iter()
                .map(|r| rays.binary_search(r).expect("cone ray in ray list"))
                .collect()
        })
        .collect();
    DualFan { rays, cones }
}

/// The terms of `f` minimizing the weight `w` over the support.
pub fn face_polynomial(f: &Poly, w: V3) -> Poly {
    let min = f
        .terms()
        .map(|(m, _)| lin::dot3(w, m.exponents3().expect("ambient polynomial")))
        .min()
        .expect("nonzero polynomial");
    Poly::from_terms(
        f.terms()
            .filter(|(m, _)| lin::dot3(w, m.exponents3().expect("ambient")) == min)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Primes used by the default nondegeneracy certificate.
pub const NONDEGENERACY_PRIMES: [u64; 3] = [101, 211, 307];

/// Outcome of the modular nondegeneracy check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NondegeneracyReport {
    /// No compact face has a singular torus point modulo any of the
    /// primes checked.
    Nondegenerate { faces_checked: usize },
    /// A compact face polynomial and its partials share a torus zero.
    Degenerate { prime: u64, face_points: Vec<V3>, witness: [u64; 3] },
}

impl NondegeneracyReport {
    pub fn is_nondegenerate(&self) -> bool {
        matches!(self, NondegeneracyReport::Nondegenerate { .. })
    }
}

/// Checks every compact face of the Newton polyhedron of `f` for torus
/// singular points modulo each prime.
pub fn is_nondegenerate(f: &Poly, primes: &[u64]) -> NondegeneracyReport {
    let n = newton_polyhedron(f);
    let faces = n.compact_faces();
    for face in &faces {
        let face_terms: Vec<(V3, &BigInt)> = f
            .terms()
            .map(|(m, c)| (m.exponents3().expect("ambient"), c))
            .filter(|(e, _)| face.points.contains(e))
            .collect();
        for &p in primes {
            let terms: Vec<(V3, u64)> = face_terms
                .iter()
                .map(|&(e, c)| (e, mod_p(c, p)))
                .filter(|&(_, c)| c != 0)
                .collect();
            if let Some(witness) = face_witness(&terms, face.normal, p) {
                return NondegeneracyReport::Degenerate {
                    prime: p,
                    face_points: face.points.clone(),
                    witness,
                };
            }
        }
    }
    NondegeneracyReport::Nondegenerate { faces_checked: faces.len() }
}

fn mod_p(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    r.to_u64().expect("residue fits u64")
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let factors = prime_factors(order);
    for g in 2..p {
        if factors.iter().all(|&q| powmod(g, order / q, p) != 1) {
            return g;
        }
    }
    unreachable!("F_p* is cyclic")
}

/// Searches the torus for a common zero of a quasi-homogeneous face
/// polynomial (given as exponent/coefficient pairs modulo `p`, zero
/// coefficients removed) and its partial derivatives. `w` is a strictly
/// positive weight under which the terms share one weighted degree; the
/// scaling action it induces lets one variable range over a transversal
/// instead of the full torus.
fn face_witness(terms: &[(V3, u64)], w: V3, p: u64) -> Option<[u64; 3]> {
    match terms.len() {
        0 => return Some([1, 1, 1]),
        1 => return None,
        2 => {
            if !two_term_degenerate(terms, p) {
                return None;
            }
            // the closed form only decides existence; recover an actual
            // witness with the naive scan (this path only runs on
            // degenerate inputs, which end the whole check anyway)
            let w = full_scan(terms, p);
            debug_assert!(w.is_some(), "closed form and scan disagree");
            return w;
        }
        _ => {}
    }

    let present: [bool; 3] = core::array::from_fn(|i| terms.iter().any(|&(e, _)| e[i] > 0));
    // pick the present variable whose scaling orbit is largest, i.e.
    // whose transversal gcd(w_i, p-1) is smallest
    let orbit = (0..3)
        .filter(|&i| present[i])
        .min_by_key(|&i| lin::gcd(w[i] as u64, p - 1))?;
    let g = lin::gcd(w[orbit] as u64, p - 1);
    let gen = primitive_root(p);
    let transversal: Vec<u64> = (0..g).map(|j| powmod(gen, j, p)).collect();
    let full: Vec<u64> = (1..p).collect();
    let fixed: Vec<u64> = alloc::vec![1];
    let ranges: [&[u64]; 3] = core::array::from_fn(|i| {
        if !present[i] {
            &fixed[..]
        } else if i == orbit {
            &transversal[..]
        } else {
            &full[..]
        }
    });
    scan(terms, ranges, present, p)
}

/// Closed-form degeneracy test for a two-term face `c1*X^a + c2*X^b`:
/// on the torus locus `f = 0` the partials reduce to
/// `c1*(a_i - b_i)*X^(a - e_i)`, so all three vanish exactly when `p`
/// divides every coordinate of `a - b`; the locus itself is nonempty
/// exactly when `-c2/c1` is a `gcd(a-b, p-1)`-th power.
fn two_term_degenerate(terms: &[(V3, u64)], p: u64) -> bool {
    let (a, c1) = terms[0];
    let (b, c2) = terms[1];
    let gamma = lin::sub3(a, b);
    if gamma.iter().any(|&gi| gi.unsigned_abs() % p != 0) {
        return false;
    }
    let g = gamma
        .iter()
        .fold(p - 1, |acc, &gi| lin::gcd(acc, gi.unsigned_abs()));
    let inv_c1 = powmod(c1, p - 2, p);
    let u = ((p - c2) as u128 * inv_c1 as u128 % p as u128) as u64;
    powmod(u, (p - 1) / g, p) == 1
}

/// Naive torus scan over all of `(F_p^*)^3`. Used as the fallback
/// witness finder and as the oracle the shortcuts are validated against.
fn full_scan(terms: &[(V3, u64)], p: u64) -> Option<[u64; 3]> {
    let present: [bool; 3] = core::array::from_fn(|i| terms.iter().any(|&(e, _)| e[i] > 0));
    let full: Vec<u64> = (1..p).collect();
    scan(terms, [&full, &full, &full], present, p)
}

fn scan(
    terms: &[(V3, u64)],
    ranges: [&[u64]; 3],
    present: [bool; 3],
    p: u64,
) -> Option<[u64; 3]> {
    let max_e = terms
        .iter()
        .flat_map(|&(e, _)| e.into_iter())
        .max()
        .unwrap_or(0) as usize;
    // pw[e][b] = b^e mod p
    let mut pw: Vec<Vec<u64>> = Vec::with_capacity(max_e + 1);
    pw.push(alloc::vec![1; p as usize]);
    for e in 1..=max_e {
        let prev = &pw[e - 1];
        let mut row = alloc::vec![0u64; p as usize];
        for b in 0..p as usize {
            row[b] = (prev[b] as u128 * b as u128 % p as u128) as u64;
        }
        pw.push(row);
    }

    let tbl: Vec<([usize; 3], u64)> = terms
        .iter()
        .map(|&(e, c)| ([e[0] as usize, e[1] as usize, e[2] as usize], c))
        .collect();
    // partial-derivative term tables for the variables that occur
    let partials: [Vec<([usize; 3], u64)>; 3] = core::array::from_fn(|i| {
        if !present[i] {
            return Vec::new();
        }
        tbl.iter()
            .filter(|&&(e, _)| e[i] > 0)
            .map(|&(mut e, c)| {
                let coeff = (c as u128 * (e[i] as u64 % p) as u128 % p as u128) as u64;
                e[i] -= 1;
                (e, coeff)
            })
            .filter(|&(_, c)| c != 0)
            .collect()
    });

    let eval = |table: &[([usize; 3], u64)], x: usize, y: usize, z: usize| -> u64 {
        let mut acc = 0u128;
        for &(e, c) in table {
            let t = pw[e[0]][x] as u128 * pw[e[1]][y] as u128 % p as u128;
            acc += t * pw[e[2]][z] as u128 % p as u128 * c as u128 % p as u128;
        }
        (acc % p as u128) as u64
    };

    for &x in ranges[0] {
        for &y in ranges[1] {
            for &z in ranges[2] {
                let (x, y, z) = (x as usize, y as usize, z as usize);
                if eval(&tbl, x, y, z) != 0 {
                    continue;
                }
                if (0..3).all(|i| !present[i] || eval(&partials[i], x, y, z) == 0) {
                    return Some([x as u64, y as u64, z as u64]);
                }
            }
        }
    }
    None
}
