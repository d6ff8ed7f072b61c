//! Level-by-level exploration of the irreducible components of jet
//! schemes over a singular center, as a walk on vanishing sets of jet
//! variables.
//!
//! A state is a set `Z` of jet variables forced to vanish. At each
//! level the equation coefficient `F_level` is reduced modulo `Z`: a
//! zero reduction lets the state survive unchanged; a nonzero reduction
//! makes it branch into one child per inclusion-minimal hitting set of
//! the reduction's term supports. When the content-free part of the
//! reduction is non-monomial, a non-branching bookkeeping child records
//! the regular stratum it leaves behind. States reached twice are
//! merged (recording every parent), and each level ends with an
//! inclusion-pruning pass over vanishing sets.
//!
//! Essential components are selected by four conditions: renewed
//! contact with the equation after birth, a weight vector different
//! from every parent's, a monomial firing shape for a root born at
//! level zero, and Hilbert-indecomposability of the weight vector in
//! every maximal dual cone containing it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::lin::{self, V3};
use crate::newton::{newton_polyhedron, NewtonPolyhedron};
use crate::poly::{Axis, Poly, Var, VarStyle};

/// How a node continues the walk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeStatus {
    /// A vanishing-set component; branches further.
    Monomial,
    /// A regular-stratum bookkeeping node of supported shape; carried
    /// but never branched.
    NonMonomial,
    /// A bookkeeping node whose equation falls outside the supported
    /// shapes; reported, never silently dropped.
    Frozen,
}

impl NodeStatus {
    pub fn name(self) -> &'static str {
        match self {
            NodeStatus::Monomial => "monomial",
            NodeStatus::NonMonomial => "non-monomial",
            NodeStatus::Frozen => "frozen",
        }
    }
}

/// One node of the jet graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Node {
    /// Jet variables forced to vanish.
    pub z: BTreeSet<Var>,
    /// Extra equations beyond the vanishing set; empty for monomial
    /// nodes, the stratum equation for bookkeeping nodes.
    pub extra: Vec<Poly>,
    /// Level at which the node was created.
    pub born: usize,
    /// Ids of all recorded parents (merged states keep several).
    pub parents: Vec<usize>,
    pub weight: V3,
    pub status: NodeStatus,
    /// First level after birth where the reduced equation coefficient
    /// is nonzero, within the explored range.
    pub first_fire: Option<usize>,
    pub essential: bool,
}

/// The levelled graph produced by [`explore`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetGraph {
    /// Nodes in creation order; node 0 is the root.
    pub nodes: Vec<Node>,
    /// Birth level of the root.
    pub initial_level: usize,
    pub max_level: usize,
    /// Monomial node ids alive at each level, after pruning.
    pub snapshots: BTreeMap<usize, Vec<usize>>,
}

impl JetGraph {
    /// The set of weight vectors of essential nodes.
    pub fn essential_vectors(&self) -> BTreeSet<V3> {
        self.nodes
            .iter()
            .filter(|n| n.essential)
            .map(|n| n.weight)
            .collect()
    }
}

/// The vanishing set of a center: the index-0 jet variable of each
/// defining axis.
pub fn center_vanishing(center: &[Axis]) -> BTreeSet<Var> {
    center.iter().map(|&axis| Var::new(axis, 0)).collect()
}

/// The root state over a center: its vanishing set and birth level,
/// the last level up to which every equation coefficient reduces to
/// zero. `None` when the center does not lie on the hypersurface.
pub fn initial_state(f: &Poly, center: &[Axis], m_max: usize) -> Option<(BTreeSet<Var>, usize)> {
    let fs = f.substitute_jets(m_max);
    initial_state_from(&fs, center, m_max)
}

fn initial_state_from(
    fs: &[Poly],
    center: &[Axis],
    m_max: usize,
) -> Option<(BTreeSet<Var>, usize)> {
    let z0 = center_vanishing(center);
    if !fs[0].reduce_mod_vanishing(&z0).is_zero() {
        return None;
    }
    let mut m0 = 0;
    while m0 + 1 <= m_max && fs[m0 + 1].reduce_mod_vanishing(&z0).is_zero() {
        m0 += 1;
    }
    Some((z0, m0))
}

/// Weight vector of a vanishing set: per axis, the smallest jet index
/// not forced to vanish.
pub fn weight_vector(z: &BTreeSet<Var>) -> V3 {
    let mut w = [0i64; 3];
    for (i, &axis) in Axis::ALL.iter().enumerate() {
        let mut k: u16 = 0;
        while z.contains(&Var::new(axis, k)) {
            k += 1;
        }
        w[i] = i64::from(k);
    }
    w
}

/// All inclusion-minimal sets of variables meeting the support of
/// every term of `g`. Empty when `g` has a constant term (nothing can
/// hit it); contains the empty set never.
pub fn minimal_hitting_sets(g: &Poly) -> Vec<BTreeSet<Var>> {
    let mut supports: BTreeSet<BTreeSet<Var>> = BTreeSet::new();
    for (m, _) in g.terms() {
        let s: BTreeSet<Var> = m.vars().collect();
        if s.is_empty() {
            return Vec::new();
        }
        supports.insert(s);
    }
    let mut supports: Vec<BTreeSet<Var>> = supports.into_iter().collect();
    supports.sort_by_key(|s| (s.len(), s.clone()));
    let mut kept: Vec<BTreeSet<Var>> = Vec::new();
    for s in supports {
        if !kept.iter().any(|t| t.is_subset(&s)) {
            kept.push(s);
        }
    }

    fn bt(
        kept: &[BTreeSet<Var>],
        i: usize,
        chosen: &mut BTreeSet<Var>,
        sols: &mut Vec<BTreeSet<Var>>,
    ) {
        if sols.iter().any(|s| s.is_subset(chosen)) {
            return;
        }
        if i == kept.len() {
            sols.push(chosen.clone());
            return;
        }
        let s = kept[i].clone();
        if !chosen.is_disjoint(&s) {
            bt(kept, i + 1, chosen, sols);
            return;
        }
        for v in s {
            chosen.insert(v);
            bt(kept, i + 1, chosen, sols);
            chosen.remove(&v);
        }
    }
    let mut sols: Vec<BTreeSet<Var>> = Vec::new();
    bt(&kept, 0, &mut BTreeSet::new(), &mut sols);

    let minimal: BTreeSet<BTreeSet<Var>> = sols
        .iter()
        .filter(|s| !sols.iter().any(|t| t.is_subset(s) && t.len() < s.len()))
        .cloned()
        .collect();
    let mut out: Vec<BTreeSet<Var>> = minimal.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// If `g` factors as monomial times a genuinely non-monomial part,
/// returns the content-free part; otherwise `None`.
pub fn stratify_nonmonomial(g: &Poly) -> Option<Poly> {
    if g.term_count() <= 1 {
        return None;
    }
    let (_, cofactor) = g.monomial_content();
    if cofactor.term_count() > 1 {
        Some(cofactor)
    } else {
        None
    }
}

/// Whether a stratum equation has the supported two-term shape: one
/// term a power of a single variable, the other a monomial in at most
/// two variables.
pub fn supported_stratum_shape(g: &Poly) -> bool {
    let terms: Vec<usize> = g.terms().map(|(m, _)| m.vars().count()).collect();
    if terms.len() != 2 {
        return false;
    }
    (terms[0] == 1 && terms[1] <= 2) || (terms[1] == 1 && terms[0] <= 2)
}

/// Whether `w` is primitive and admits no splitting `w = u + r` with
/// both parts nonzero and inside the same maximal dual cone, for every
/// maximal dual cone containing `w`.
pub fn hilbert_indecomposable(newton: &NewtonPolyhedron, w: V3) -> bool {
    if lin::gcd3(w) != 1 {
        return false;
    }
    let cones = newton.cones_containing(w);
    assert!(!cones.is_empty(), "a nonnegative weight lies in some maximal dual cone");
    for cone in cones {
        for a in 0..=w[0] {
            for b in 0..=w[1] {
                for c in 0..=w[2] {
                    let u = [a, b, c];
                    if u == [0, 0, 0] || u == w {
                        continue;
                    }
                    let r = [w[0] - a, w[1] - b, w[2] - c];
                    if cone.contains(u) && cone.contains(r) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The essential-component test for a monomial node: renewed contact
/// (`first_fire` within range), weight different from every parent's,
/// a monomial firing shape when the node is a root born at level zero,
/// and Hilbert-indecomposability of the weight.
pub fn is_essential(
    newton: &NewtonPolyhedron,
    weight: V3,
    parent_weights: &[V3],
    first_fire_reduction: Option<&Poly>,
    root_born_at_zero: bool,
) -> bool {
    let contact = first_fire_reduction.is_some();
    let weight_moves = parent_weights.iter().all(|&pw| pw != weight);
    let root_ok = if root_born_at_zero {
        match first_fire_reduction {
            Some(g) => stratify_nonmonomial(g).is_none(),
            None => true,
        }
    } else {
        true
    };
    contact && weight_moves && root_ok && hilbert_indecomposable(newton, weight)
}

/// Explores the component graph over a center up to `m_max`, returning
/// `None` when the center does not lie on the hypersurface.
pub fn explore(f: &Poly, center: &[Axis], m_max: usize) -> Option<JetGraph> {
    let fs = f.substitute_jets(m_max);
    let (z0, m0) = initial_state_from(&fs, center, m_max)?;

    let mut nodes: Vec<Node> = Vec::new();
    let mut index: BTreeMap<BTreeSet<Var>, usize> = BTreeMap::new();
    let mut bookkeeping_seen: BTreeSet<(usize, Poly)> = BTreeSet::new();
    let root = Node {
        weight: weight_vector(&z0),
        z: z0.clone(),
        extra: Vec::new(),
        born: m0,
        parents: Vec::new(),
        status: NodeStatus::Monomial,
        first_fire: None,
        essential: false,
    };
    nodes.push(root);
    index.insert(z0.clone(), 0);

    let mut alive: BTreeMap<BTreeSet<Var>, usize> = BTreeMap::new();
    alive.insert(z0, 0);
    let mut snapshots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    snapshots.insert(m0, alloc::vec![0]);

    for level in (m0 + 1)..=m_max {
        let mut new_alive: BTreeMap<BTreeSet<Var>, usize> = BTreeMap::new();
        let current: Vec<(BTreeSet<Var>, usize)> =
            alive.iter().map(|(z, &id)| (z.clone(), id)).collect();
        for (z, id) in current {
            let g = fs[level].reduce_mod_vanishing(&z);
            if g.is_zero() {
                new_alive.insert(z, id);
                continue;
            }
            for t in minimal_hitting_sets(&g) {
                let mut z2 = z.clone();
                z2.extend(t);
                if let Some(&existing) = new_alive.get(&z2) {
                    if !nodes[existing].parents.contains(&id) {
                        nodes[existing].parents.push(id);
                    }
                } else if let Some(&existing) = index.get(&z2) {
                    if !nodes[existing].parents.contains(&id) {
                        nodes[existing].parents.push(id);
                    }
                    new_alive.insert(z2, existing);
                } else {
                    let child = Node {
                        weight: weight_vector(&z2),
                        z: z2.clone(),
                        extra: Vec::new(),
                        born: level,
                        parents: alloc::vec![id],
                        status: NodeStatus::Monomial,
                        first_fire: None,
                        essential: false,
                    };
                    let child_id = nodes.len();
                    nodes.push(child);
                    index.insert(z2.clone(), child_id);
                    new_alive.insert(z2, child_id);
                }
            }
            if let Some(cofactor) = stratify_nonmonomial(&g) {
                if bookkeeping_seen.insert((id, cofactor.clone())) {
                    let status = if supported_stratum_shape(&cofactor) {
                        NodeStatus::NonMonomial
                    } else {
                        NodeStatus::Frozen
                    };
                    nodes.push(Node {
                        weight: nodes[id].weight,
                        z: nodes[id].z.clone(),
                        extra: alloc::vec![cofactor],
                        born: level,
                        parents: alloc::vec![id],
                        status,
                        first_fire: None,
                        essential: false,
                    });
                }
            }
        }
        let keys: Vec<BTreeSet<Var>> = new_alive.keys().cloned().collect();
        alive = new_alive
            .into_iter()
            .filter(|(z, _)| !keys.iter().any(|other| other.len() < z.len() && other.is_subset(z)))
            .collect();
        snapshots.insert(level, alive.values().copied().collect());
    }

    let newton = newton_polyhedron(f);
    for node in nodes.iter_mut() {
        if node.status != NodeStatus::Monomial {
            continue;
        }
        let mut fire: Option<usize> = None;
        for level in (node.born + 1)..=m_max {
            if !fs[level].reduce_mod_vanishing(&node.z).is_zero() {
                fire = Some(level);
                break;
            }
        }
        node.first_fire = fire;
    }
    for id in 0..nodes.len() {
        if nodes[id].status != NodeStatus::Monomial {
            continue;
        }
        let parent_weights: Vec<V3> =
            nodes[id].parents.iter().map(|&p| nodes[p].weight).collect();
        let reduction =
            nodes[id].first_fire.map(|l| fs[l].reduce_mod_vanishing(&nodes[id].z));
        let root_born_at_zero = nodes[id].parents.is_empty() && nodes[id].born == 0;
        nodes[id].essential = is_essential(
            &newton,
            nodes[id].weight,
            &parent_weights,
            reduction.as_ref(),
            root_born_at_zero,
        );
    }

    Some(JetGraph { nodes, initial_level: m0, max_level: m_max, snapshots })
}

/// Independent oracle: all inclusion-minimal vanishing sets containing
/// the center under which every equation coefficient up to level `m`
/// reduces to zero, by exhaustive subset enumeration.
pub fn brute_force_components(f: &Poly, center: &[Axis], m: usize) -> Vec<BTreeSet<Var>> {
    let fs = f.substitute_jets(m);
    let z0 = center_vanishing(center);
    let mut vars: BTreeSet<Var> = BTreeSet::new();
    for fi in &fs {
        vars.extend(fi.variables());
    }
    for v in &z0 {
        vars.remove(v);
    }
    let vars: Vec<Var> = vars.into_iter().collect();
    let n = vars.len();
    assert!(n <= 25, "brute-force size guard exceeded: {} free variables", n);
    let pos: BTreeMap<Var, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut masks: BTreeSet<u32> = BTreeSet::new();
    for fi in &fs {
        'term: for (mono, _) in fi.terms() {
            let mut mask: u32 = 0;
            for v in mono.vars() {
                if z0.contains(&v) {
                    continue 'term;
                }
                mask |= 1 << pos[&v];
            }
            masks.insert(mask);
        }
    }
    let masks: Vec<u32> = masks.into_iter().collect();

    let total: usize = 1 << n;
    let mut is_solution = alloc::vec![false; total];
    for s in 0..total as u32 {
        if masks.iter().all(|&mk| mk & s != 0) {
            is_solution[s as usize] = true;
        }
    }
    let mut out: Vec<BTreeSet<Var>> = Vec::new();
    for s in 0..total as u32 {
        if !is_solution[s as usize] {
            continue;
        }
        let mut rest = s;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if is_solution[(s & !bit) as usize] {
                minimal = false;
                break;
            }
            rest ^= bit;
        }
        if minimal {
            let mut z = z0.clone();
            z.extend((0..n).filter(|&i| s >> i & 1 == 1).map(|i| vars[i]));
            out.push(z);
        }
    }
    out.sort();
    out
}

/// Renders the graph as a DOT digraph: one line per node labelled with
/// the weight vector, the stratum equation for bookkeeping nodes, and
/// the birth level; essential nodes bold, bookkeeping nodes dashed.
pub fn emit_dot(graph: &JetGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph jets {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    for (id, node) in graph.nodes.iter().enumerate() {
        let [a, b, c] = node.weight;
        let mut label = alloc::format!("({},{},{})", a, b, c);
        for eq in &node.extra {
            let _ = write!(label, "\\n{}", eq.to_compact(VarStyle::Jet));
        }
        let _ = write!(label, "\\nm={}", node.born);
        let style = if node.status != NodeStatus::Monomial {
            ", style=dashed"
        } else if node.essential {
            ", style=bold"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"{}];", id, label, style);
    }
    for (id, node) in graph.nodes.iter().enumerate() {
        for &p in &node.parents {
            let _ = writeln!(out, "  n{} -> n{};", p, id);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(axis: Axis, order: u16) -> Var {
        Var::new(axis, order)
    }

    fn zset(vars: &[Var]) -> BTreeSet<Var> {
        vars.iter().copied().collect()
    }

    fn e60() -> Poly {
        Poly::parse("z^3+y^3*z+x^2*y^2").unwrap()
    }

    #[test]
    fn weight_vectors_of_vanishing_sets() {
        use Axis::*;
        assert_eq!(weight_vector(&zset(&[v(Y, 0), v(Z, 0)])), [0, 1, 1]);
        assert_eq!(weight_vector(&zset(&[v(X, 0), v(Y, 0), v(Z, 0), v(Z, 1)])), [1, 1, 2]);
        assert_eq!(weight_vector(&BTreeSet::new()), [0, 0, 0]);
        // a gap above the leading run does not count
        assert_eq!(weight_vector(&zset(&[v(Y, 0), v(Y, 2)])), [0, 1, 0]);
    }

    #[test]
    fn initial_states_of_the_two_centers() {
        use Axis::*;
        let f = e60();
        let (z, m0) = initial_state(&f, &[Y, Z], 18).unwrap();
        assert_eq!(z, zset(&[v(Y, 0), v(Z, 0)]));
        assert_eq!(m0, 1);
        assert_eq!(weight_vector(&z), [0, 1, 1]);

        let (z, m0) = initial_state(&f, &[X, Z], 2).unwrap();
        assert_eq!(z, zset(&[v(X, 0), v(Z, 0)]));
        assert_eq!(m0, 0);

        // the x-axis is not on the surface cut out by z alone
        assert!(initial_state(&Poly::parse("z+x").unwrap(), &[Z], 3).is_none());
    }

    #[test]
    fn hitting_sets_of_walk_reductions() {
        use Axis::*;
        let f = e60();
        let fs = f.substitute_jets(6);

        let g2 = fs[2].reduce_mod_vanishing(&zset(&[v(Y, 0), v(Z, 0)]));
        assert_eq!(
            minimal_hitting_sets(&g2),
            vec![zset(&[v(X, 0)]), zset(&[v(Y, 1)])]
        );

        let g6 = fs[6].reduce_mod_vanishing(&zset(&[
            v(X, 0),
            v(X, 1),
            v(Y, 0),
            v(Z, 0),
            v(Z, 1),
            v(Z, 2),
        ]));
        // g6 = x_2^2 y_1^2 + y_1^3 z_3: hit {y_1} or {x_2, z_3}
        assert_eq!(
            minimal_hitting_sets(&g6),
            vec![zset(&[v(Y, 1)]), zset(&[v(X, 2), v(Z, 3)])]
        );

        // a constant term admits no hitting set
        assert!(minimal_hitting_sets(&Poly::parse("x+1").unwrap()).is_empty());
    }

    #[test]
    fn stratum_cofactors_and_shapes() {
        use Axis::*;
        let f = e60();
        let fs = f.substitute_jets(6);
        let g6 = fs[6].reduce_mod_vanishing(&zset(&[
            v(X, 0),
            v(X, 1),
            v(Y, 0),
            v(Z, 0),
            v(Z, 1),
            v(Z, 2),
        ]));
        let cof = stratify_nonmonomial(&g6).unwrap();
        assert_eq!(cof.to_compact(VarStyle::Jet), "y_1z_3+x_2^2");
        assert!(supported_stratum_shape(&cof));

        // monomials have no stratum part
        let g2 = fs[2].reduce_mod_vanishing(&zset(&[v(Y, 0), v(Z, 0)]));
        assert!(stratify_nonmonomial(&g2).is_none());

        // three terms fall outside the supported shapes
        let three = Poly::parse("x^2*y^2+y^3*z+z^3").unwrap();
        assert!(!supported_stratum_shape(&three));
    }

    #[test]
    fn e60_singular_center_essential_vectors() {
        use Axis::*;
        let graph = explore(&e60(), &[Y, Z], 18).unwrap();
        let expected: BTreeSet<V3> = [
            [0, 1, 1],
            [0, 2, 1],
            [1, 1, 1],
            [0, 3, 2],
            [1, 1, 2],
            [1, 2, 2],
            [2, 1, 2],
            [2, 1, 3],
            [2, 2, 3],
            [3, 2, 3],
            [3, 2, 4],
            [3, 3, 4],
            [4, 3, 5],
            [5, 4, 6],
        ]
        .into_iter()
        .collect();
        assert_eq!(graph.essential_vectors(), expected);
    }

    #[test]
    fn e60_axis_center_essential_vectors() {
        use Axis::*;
        let graph = explore(&e60(), &[X, Z], 2).unwrap();
        let expected: BTreeSet<V3> = [[1, 0, 1], [1, 0, 2]].into_iter().collect();
        assert_eq!(graph.essential_vectors(), expected);
    }

    #[test]
    fn bookkeeping_nodes_in_the_e60_walk() {
        use Axis::*;
        let graph = explore(&e60(), &[Y, Z], 18).unwrap();
        let books: Vec<&Node> = graph
            .nodes
            .iter()
            .filter(|n| n.status != NodeStatus::Monomial)
            .collect();
        assert_eq!(books.len(), 28);
        assert!(books.iter().all(|n| !n.essential && n.extra.len() == 1));

        // the two-term shapes of the small levels are supported
        let c61 = books
            .iter()
            .find(|n| n.weight == [1, 2, 2] && n.born == 6)
            .expect("regular-stratum node of the level-6 component");
        assert_eq!(c61.status, NodeStatus::NonMonomial);
        assert_eq!(c61.extra[0].to_compact(VarStyle::Jet), "z_2^3+x_1^2y_2^2");

        let a1 = books
            .iter()
            .find(|n| n.weight == [2, 1, 3] && n.born == 6)
            .expect("quadratic-shape node of the level-6 component");
        assert_eq!(a1.extra[0].to_compact(VarStyle::Jet), "y_1z_3+x_2^2");

        // at the quasi-degree the full equation shape reappears and is frozen
        let top = books
            .iter()
            .find(|n| n.weight == [5, 4, 6])
            .expect("self-similar node at the quasi-degree");
        assert_eq!(top.status, NodeStatus::Frozen);
        assert_eq!(top.born, 18);
        assert_eq!(top.extra[0].to_compact(VarStyle::Jet), "z_6^3+y_4^3z_6+x_5^2y_4^2");
    }

    #[test]
    fn smooth_surface_walk_is_a_chain() {
        use Axis::*;
        let graph = explore(&Poly::parse("z").unwrap(), &[Z], 5).unwrap();
        assert_eq!(graph.initial_level, 0);
        assert_eq!(graph.nodes.iter().filter(|n| n.status == NodeStatus::Monomial).count(), 6);
        assert!(graph.nodes.iter().all(|n| n.parents.len() <= 1));
        let expected: BTreeSet<V3> = [[0, 0, 1]].into_iter().collect();
        assert_eq!(graph.essential_vectors(), expected);
    }

    #[test]
    fn brute_force_matches_the_level_four_components() {
        use Axis::*;
        let f = e60();
        let out = brute_force_components(&f, &[Y, Z], 4);
        let expected = vec![
            zset(&[v(X, 0), v(X, 1), v(Y, 0), v(Z, 0), v(Z, 1)]),
            zset(&[v(X, 0), v(Y, 0), v(Y, 1), v(Z, 0), v(Z, 1)]),
            zset(&[v(Y, 0), v(Y, 1), v(Y, 2), v(Z, 0), v(Z, 1)]),
        ];
        let out_set: BTreeSet<_> = out.into_iter().collect();
        let expected_set: BTreeSet<_> = expected.into_iter().collect();
        assert_eq!(out_set, expected_set);

        assert_eq!(
            brute_force_components(&f, &[Y, Z], 1),
            vec![zset(&[v(Y, 0), v(Z, 0)])]
        );
    }

    #[test]
    fn walk_snapshots_agree_with_brute_force_at_small_levels() {
        use Axis::*;
        let f = e60();
        let graph = explore(&f, &[Y, Z], 4).unwrap();
        for m in 1..=4usize {
            let oracle: BTreeSet<BTreeSet<Var>> =
                brute_force_components(&f, &[Y, Z], m).into_iter().collect();
            let level = *graph.snapshots.keys().filter(|&&l| l <= m).max().unwrap();
            let walk: BTreeSet<BTreeSet<Var>> = graph.snapshots[&level]
                .iter()
                .map(|&id| graph.nodes[id].z.clone())
                .collect();
            assert_eq!(oracle, walk, "level {}", m);
        }
    }

    #[test]
    fn walk_reductions_vanish_up_to_birth() {
        use Axis::*;
        let f = e60();
        let fs = f.substitute_jets(8);
        let graph = explore(&f, &[Y, Z], 8).unwrap();
        for node in &graph.nodes {
            if node.status != NodeStatus::Monomial {
                continue;
            }
            for fi in fs.iter().take(node.born + 1) {
                assert!(fi.reduce_mod_vanishing(&node.z).is_zero());
            }
        }
    }

    #[test]
    fn essential_test_rejects_imprimitive_and_parent_weights() {
        let f = e60();
        let newton = newton_polyhedron(&f);
        // primitive, indecomposable, fresh weight
        assert!(is_essential(&newton, [1, 1, 1], &[[0, 1, 1]], Some(&Poly::one()), false));
        // same weight as a parent
        assert!(!is_essential(&newton, [1, 1, 1], &[[1, 1, 1]], Some(&Poly::one()), false));
        // no further contact
        assert!(!is_essential(&newton, [1, 1, 1], &[], None, false));
        // imprimitive weight
        assert!(!is_essential(&newton, [2, 2, 2], &[], Some(&Poly::one()), false));
        // root born at level zero with a non-monomial firing shape
        let g = Poly::parse("x^2+y^2").unwrap();
        assert!(!is_essential(&newton, [1, 1, 1], &[], Some(&g), true));
        assert!(is_essential(&newton, [1, 1, 1], &[], Some(&g), false));
    }

    #[test]
    fn indecomposable_weights_of_e60() {
        let newton = newton_polyhedron(&e60());
        assert!(hilbert_indecomposable(&newton, [5, 4, 6]));
        assert!(hilbert_indecomposable(&newton, [0, 1, 1]));
        assert!(!hilbert_indecomposable(&newton, [0, 2, 2]));
        // (1,1,2) = (1,0,1) + (0,1,1)? both parts must sit in a common
        // containing cone; (1,1,2) is listed essential, so none exists
        assert!(hilbert_indecomposable(&newton, [1, 1, 2]));
    }

    #[test]
    fn dot_rendering_of_the_e60_graph() {
        use Axis::*;
        let graph = explore(&e60(), &[Y, Z], 8).unwrap();
        let dot = emit_dot(&graph);
        assert!(dot.starts_with("digraph jets {"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("(1,2,2)\\nz_2^3+x_1^2y_2^2"));
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("style=bold"));
        let again = emit_dot(&graph);
        assert_eq!(dot, again);
    }
}
