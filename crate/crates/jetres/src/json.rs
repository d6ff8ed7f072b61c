//! JSON views of polynomials, fans, jet graphs, and verification
//! reports.
//!
//! Every emitter here is deterministic: term lists follow the ordered
//! map behind `Poly`, ray lists are sorted, and struct fields serialize
//! in declaration order, so the same input always produces the same
//! bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use jetres_core::fan::{Cone, CoverViolation, SubdivisionReport};
use jetres_core::jets::JetGraph;
use jetres_core::lin::V3;
use jetres_core::newton::{DualFan, NondegeneracyReport};
use jetres_core::poly::{Axis, Monomial, Poly, Var, VarStyle};
use jetres_core::toric::{ChartPoly, ChartReport, ChartVerdict, ResolutionReport};

/// Version stamp carried by every report this crate writes.
pub const SCHEMA: u32 = 1;

/// Names of the chart variables, indexed like cone generators.
pub const CHART_VARS: [&str; 3] = ["x_1", "y_1", "z_1"];

// ---------------------------------------------------------------------------
// Polynomials

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TermJson {
    /// Integer coefficient, kept as a decimal string so arbitrary
    /// precision survives the trip.
    pub c: String,
    /// Exponents aligned with the `vars` list of the polynomial.
    pub e: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

/// Renders a polynomial. Ambient polynomials (all variables of jet
/// order zero) always use the full `["x","y","z"]` list; polynomials in
/// jet variables list exactly the variables that appear, in order.
pub fn poly_to_json(f: &Poly) -> PolyJson {
    let present = f.variables();
    let ambient_only = present.iter().all(|v| v.order == 0);
    let (vars, names): (Vec<Var>, Vec<String>) = if ambient_only {
        let vs: Vec<Var> = Axis::ALL.iter().map(|&a| Var::ambient(a)).collect();
        let ns = vs.iter().map(|v| v.render(VarStyle::Ambient)).collect();
        (vs, ns)
    } else {
        let vs: Vec<Var> = present.iter().copied().collect();
        let ns = vs.iter().map(|v| v.render(VarStyle::Jet)).collect();
        (vs, ns)
    };
    let terms = f
        .terms()
        .map(|(m, c)| TermJson {
            c: c.to_string(),
            e: vars.iter().map(|&v| m.exponent(v)).collect(),
        })
        .collect();
    PolyJson { vars: names, terms }
}

fn var_from_name(s: &str) -> Result<Var> {
    if let Some(axis) = Axis::from_name(s) {
        return Ok(Var::ambient(axis));
    }
    let (head, tail) = s
        .split_once('_')
        .ok_or_else(|| anyhow!("unknown variable name `{s}`"))?;
    let axis =
        Axis::from_name(head).ok_or_else(|| anyhow!("unknown variable name `{s}`"))?;
    let order: u16 = tail
        .parse()
        .with_context(|| format!("bad jet order in variable `{s}`"))?;
    Ok(Var::new(axis, order))
}

/// Rebuilds a polynomial from its JSON form.
pub fn poly_from_json(j: &PolyJson) -> Result<Poly> {
    let vars: Vec<Var> = j
        .vars
        .iter()
        .map(|n| var_from_name(n))
        .collect::<Result<_>>()?;
    let mut terms: Vec<(Monomial, BigInt)> = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        if t.e.len() != vars.len() {
            bail!(
                "term has {} exponents but the polynomial lists {} variables",
                t.e.len(),
                vars.len()
            );
        }
        let c = BigInt::from_str(&t.c)
            .with_context(|| format!("bad coefficient `{}`", t.c))?;
        let m = Monomial::from_exps(vars.iter().copied().zip(t.e.iter().copied()));
        terms.push((m, c));
    }
    Ok(Poly::from_terms(terms))
}

// ---------------------------------------------------------------------------
// Fans

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FanJson {
    pub rays: Vec<V3>,
    /// Each cone is a list of indices into `rays`.
    pub cones: Vec<Vec<usize>>,
}

/// Renders a list of full-dimensional cones with a shared sorted ray
/// pool.
pub fn cones_to_json(cones: &[Cone]) -> FanJson {
    let pool: BTreeSet<V3> = cones.iter().flat_map(|c| c.iter().copied()).collect();
    let rays: Vec<V3> = pool.into_iter().collect();
    let cone_ids = cones
        .iter()
        .map(|c| {
            c.iter()
                .map(|g| rays.binary_search(g).expect("generator drawn from pool"))
                .collect()
        })
        .collect();
    FanJson { rays, cones: cone_ids }
}

/// Renders a dual Newton fan. Its cones may have more than three rays.
pub fn dual_fan_to_json(fan: &DualFan) -> FanJson {
    FanJson { rays: fan.rays.clone(), cones: fan.cones.clone() }
}

/// Reads a fan back as full-dimensional cones. Every cone must have
/// exactly three generators; anything else is a usage error, because
/// the verification routines only accept simplicial candidates.
pub fn cones_from_json(j: &FanJson) -> Result<Vec<Cone>> {
    let mut out = Vec::with_capacity(j.cones.len());
    for (i, cone) in j.cones.iter().enumerate() {
        if cone.len() != 3 {
            bail!("cone {i} has {} rays; expected exactly 3", cone.len());
        }
        let mut gens = [[0i64; 3]; 3];
        for (slot, &idx) in gens.iter_mut().zip(cone.iter()) {
            *slot = *j
                .rays
                .get(idx)
                .ok_or_else(|| anyhow!("cone {i} references missing ray {idx}"))?;
        }
        out.push(gens);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Jet graphs

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NodeJson {
    pub id: usize,
    pub level: usize,
    /// Vanishing jet variables as `(axis, order)` pairs.
    #[serde(rename = "Z")]
    pub z: Vec<(String, u16)>,
    /// Extra non-monomial equations carried by the component.
    #[serde(rename = "E")]
    pub e: Vec<PolyJson>,
    pub weight: V3,
    pub essential: bool,
    pub status: String,
    pub parents: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct JetsJson {
    pub schema: u32,
    pub center: String,
    pub initial_level: usize,
    pub max_level: usize,
    /// Sorted essential weight vectors, deduplicated across nodes.
    pub essential_vectors: Vec<V3>,
    pub nodes: Vec<NodeJson>,
}

/// Renders an explored jet graph.
pub fn jets_to_json(graph: &JetGraph, center: &[Axis]) -> JetsJson {
    let nodes = graph
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| NodeJson {
            id,
            level: n.born,
            z: n.z.iter().map(|v| (v.axis.name().to_string(), v.order)).collect(),
            e: n.extra.iter().map(poly_to_json).collect(),
            weight: n.weight,
            essential: n.essential,
            status: n.status.name().to_string(),
            parents: n.parents.clone(),
        })
        .collect();
    JetsJson {
        schema: SCHEMA,
        center: center.iter().map(|a| a.name()).collect(),
        initial_level: graph.initial_level,
        max_level: graph.max_level,
        essential_vectors: graph.essential_vectors().into_iter().collect(),
        nodes,
    }
}

// ---------------------------------------------------------------------------
// Subdivision and resolution reports

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SubdivisionJson {
    pub schema: u32,
    pub is_fan: bool,
    pub covers_octant: bool,
    pub all_regular: bool,
    pub refines_dual: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fan_violation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cover_violation: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub irregular: Vec<Cone>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nonrefining: Option<Cone>,
}

/// Renders the four-flag subdivision report with human-readable
/// violation summaries.
pub fn subdivision_to_json(r: &SubdivisionReport) -> SubdivisionJson {
    let fan_violation = r.fan_violation.as_ref().map(|v| {
        format!("cones {} and {}: {}", v.first, v.second, v.reason)
    });
    let cover_violation = r.cover_violation.as_ref().map(|v| match v {
        CoverViolation::Edge { pair, count, boundary } => format!(
            "wall {:?}-{:?} appears {} time(s); expected {} ({} wall)",
            pair[0],
            pair[1],
            count,
            if *boundary { 1 } else { 2 },
            if *boundary { "boundary" } else { "interior" },
        ),
        CoverViolation::Area { total } => {
            format!("slice areas sum to {total}, not the full octant")
        }
    });
    SubdivisionJson {
        schema: SCHEMA,
        is_fan: r.is_fan,
        covers_octant: r.covers_octant,
        all_regular: r.all_regular,
        refines_dual: r.refines_dual,
        fan_violation,
        cover_violation,
        irregular: r.irregular.clone(),
        nonrefining: r.nonrefining,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NondegeneracyJson {
    pub nondegenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub faces_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub face: Option<Vec<V3>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<[u64; 3]>,
}

pub fn nondegeneracy_to_json(r: &NondegeneracyReport) -> NondegeneracyJson {
    match r {
        NondegeneracyReport::Nondegenerate { faces_checked } => NondegeneracyJson {
            nondegenerate: true,
            faces_checked: Some(*faces_checked),
            prime: None,
            face: None,
            witness: None,
        },
        NondegeneracyReport::Degenerate { prime, face_points, witness } => {
            NondegeneracyJson {
                nondegenerate: false,
                faces_checked: None,
                prime: Some(*prime),
                face: Some(face_points.clone()),
                witness: Some(*witness),
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ChartJson {
    pub cone: Cone,
    /// The three monomial substitutions defining the chart.
    pub map: [String; 3],
    /// Exceptional monomial factored out of the total transform.
    pub exceptional: String,
    /// Strict transform in the chart variables.
    pub strict: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certified_via: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unit: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub transversality: BTreeMap<String, String>,
    pub ok: bool,
}

pub fn chart_to_json(r: &ChartReport) -> ChartJson {
    let (certified_via, unit) = match &r.verdict {
        ChartVerdict::CertifiedVia { var, unit } => {
            (Some(CHART_VARS[*var].to_string()), Some(unit.to_string()))
        }
        _ => (None, None),
    };
    let exceptional = ChartPoly::from_terms([(r.exceptional, 1)]).to_text();
    ChartJson {
        cone: r.cone,
        map: jetres_core::toric::monomial_map_text(&r.cone),
        exceptional,
        strict: r.strict.to_text(),
        verdict: r.verdict.name().to_string(),
        certified_via,
        unit,
        transversality: r
            .transversal
            .iter()
            .map(|(&v, t)| (CHART_VARS[v].to_string(), t.name().to_string()))
            .collect(),
        ok: r.ok,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ResolutionJson {
    pub schema: u32,
    /// Route requested on the command line.
    pub route: String,
    /// Route that actually decided the verdict.
    pub applied: String,
    pub verdict: String,
    pub subdivision: SubdivisionJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nondegeneracy: Option<NondegeneracyJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub charts: Vec<ChartJson>,
}

pub fn resolution_to_json(r: &ResolutionReport) -> ResolutionJson {
    ResolutionJson {
        schema: SCHEMA,
        route: r.route.name().to_string(),
        applied: r.applied.to_string(),
        verdict: r.verdict.to_string(),
        subdivision: subdivision_to_json(&r.subdivision),
        nondegeneracy: r.nondegeneracy.as_ref().map(nondegeneracy_to_json),
        charts: r.charts.iter().map(chart_to_json).collect(),
    }
}

// ---------------------------------------------------------------------------
// Catalog emissions

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct VectorsJson {
    pub schema: u32,
    pub name: String,
    /// Published essential weight vectors, in table order.
    pub vectors: Vec<V3>,
    /// Rows that are integer multiples of shorter vectors; they are
    /// primitivized before appearing as rays.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub non_primitive: Vec<V3>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ConesJson {
    pub schema: u32,
    pub name: String,
    /// How the subdivision was obtained: "explicit", "unimodular", or
    /// "stellar".
    pub method: String,
    pub rays: Vec<V3>,
    pub cones: Vec<Vec<usize>>,
}

// ---------------------------------------------------------------------------
// Output helpers

/// Serializes a report as pretty-printed JSON with a trailing newline,
/// so emitted files are stable down to the byte.
pub fn to_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut buf = serde_json::to_vec_pretty(value).expect("report serializes");
    buf.push(b'\n');
    buf
}
