//! The catalog of non-isolated rational-triple-point surface families:
//! parameterized defining equations, the published essential-vector
//! lists, and explicit or reconstructed cone decompositions for each
//! instance.
//!
//! Every family is a surface in ℂ³ singular along a coordinate axis.
//! `theorem_vectors` transcribes the published vector lists verbatim
//! (duplicates dropped, non-primitive entries kept but flagged);
//! `theorem_subdivision` returns the explicit cone list where one is
//! published (E_{6,0}) and otherwise reconstructs a regular subdivision
//! on the mandated rays, with the B_odd (l ≤ k) wedge cones forced.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::fan::{build_subdivision, Cone, SubdivisionMethod};
use crate::lin::{self, V3};
use crate::newton::newton_polyhedron;
use crate::poly::{Axis, Poly};

/// One member of the catalog, parameters included.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Instance {
    E60,
    E70,
    E07,
    /// k = l ≤ m.
    AEq { k: i64, m: i64 },
    /// k ≥ l ≥ m.
    AGe { k: i64, l: i64, m: i64 },
    /// Odd third parameter m = 2l−1 with l ≤ k.
    BOddBig { k: i64, l: i64 },
    /// Odd third parameter m = 2l−1 with k + 1 ≤ l.
    BOddSmall { k: i64, l: i64 },
    /// Even third parameter m = 2l.
    BEven { k: i64, l: i64 },
    C { k: i64, l: i64 },
    D { k: i64 },
    F { k: i64 },
    H { n: i64 },
}

/// Keeps first occurrences of rows that are non-negative and nonzero.
fn dedup_rows(rows: Vec<V3>) -> Vec<V3> {
    let mut out: Vec<V3> = Vec::new();
    for v in rows {
        if v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0) && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn parse(src: &str) -> Poly {
    Poly::parse(src).expect("catalog equations are well-formed")
}

impl Instance {
    /// Builds an instance from a family name and named parameters,
    /// validating the family's constraints. "B_odd" dispatches on
    /// l ≤ k versus k + 1 ≤ l.
    pub fn build(
        family: &str,
        k: Option<i64>,
        l: Option<i64>,
        m: Option<i64>,
        n: Option<i64>,
    ) -> Result<Instance, String> {
        fn need(p: Option<i64>, name: &str, family: &str) -> Result<i64, String> {
            p.ok_or_else(|| format!("family {} requires parameter {}", family, name))
        }
        let instance = match family {
            "E60" => Instance::E60,
            "E70" => Instance::E70,
            "E07" => Instance::E07,
            "A_eq" => Instance::AEq { k: need(k, "k", family)?, m: need(m, "m", family)? },
            "A_ge" => Instance::AGe {
                k: need(k, "k", family)?,
                l: need(l, "l", family)?,
                m: need(m, "m", family)?,
            },
            "B_odd" => {
                let k = need(k, "k", family)?;
                let l = need(l, "l", family)?;
                if l <= k {
                    Instance::BOddBig { k, l }
                } else {
                    Instance::BOddSmall { k, l }
                }
            }
            "B_odd_big" => Instance::BOddBig { k: need(k, "k", family)?, l: need(l, "l", family)? },
            "B_odd_small" => {
                Instance::BOddSmall { k: need(k, "k", family)?, l: need(l, "l", family)? }
            }
            "B_even" => Instance::BEven { k: need(k, "k", family)?, l: need(l, "l", family)? },
            "C" => Instance::C { k: need(k, "k", family)?, l: need(l, "l", family)? },
            "D" => Instance::D { k: need(k, "k", family)? },
            "F" => Instance::F { k: need(k, "k", family)? },
            "H" => Instance::H { n: need(n, "n", family)? },
            other => return Err(format!("unknown family: {}", other)),
        };
        instance.validate()?;
        Ok(instance)
    }

    /// Parses the display form produced by `name`: a bare family name
    /// or `Family(k=3,l=2)` with parameters in any order.
    pub fn parse_name(s: &str) -> Result<Instance, String> {
        let s = s.trim();
        let (family, args) = match s.split_once('(') {
            None => (s, ""),
            Some((family, rest)) => {
                let args = rest
                    .strip_suffix(')')
                    .ok_or_else(|| format!("unbalanced parentheses in instance name: {}", s))?;
                (family, args)
            }
        };
        let (mut k, mut l, mut m, mut n) = (None, None, None, None);
        for part in args.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got: {}", part))?;
            let value: i64 = value
                .trim()
                .parse()
                .map_err(|_| format!("invalid integer parameter: {}", part))?;
            match key.trim() {
                "k" => k = Some(value),
                "l" => l = Some(value),
                "m" => m = Some(value),
                "n" => n = Some(value),
                other => return Err(format!("unknown parameter name: {}", other)),
            }
        }
        Instance::build(family, k, l, m, n)
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Instance::E60 => "E60",
            Instance::E70 => "E70",
            Instance::E07 => "E07",
            Instance::AEq { .. } => "A_eq",
            Instance::AGe { .. } => "A_ge",
            Instance::BOddBig { .. } => "B_odd_big",
            Instance::BOddSmall { .. } => "B_odd_small",
            Instance::BEven { .. } => "B_even",
            Instance::C { .. } => "C",
            Instance::D { .. } => "D",
            Instance::F { .. } => "F",
            Instance::H { .. } => "H",
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Instance::E60 | Instance::E70 | Instance::E07 => String::from(self.family_name()),
            Instance::AEq { k, m } => format!("A_eq(k={},m={})", k, m),
            Instance::AGe { k, l, m } => format!("A_ge(k={},l={},m={})", k, l, m),
            Instance::BOddBig { k, l } => format!("B_odd_big(k={},l={})", k, l),
            Instance::BOddSmall { k, l } => format!("B_odd_small(k={},l={})", k, l),
            Instance::BEven { k, l } => format!("B_even(k={},l={})", k, l),
            Instance::C { k, l } => format!("C(k={},l={})", k, l),
            Instance::D { k } => format!("D(k={})", k),
            Instance::F { k } => format!("F(k={})", k),
            Instance::H { n } => format!("H(n={})", n),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        let ok = match *self {
            Instance::E60 | Instance::E70 | Instance::E07 => true,
            Instance::AEq { k, m } => k >= 1 && m >= k,
            Instance::AGe { k, l, m } => m >= 1 && l >= m && k >= l,
            Instance::BOddBig { k, l } => k >= 2 && l >= 2 && l <= k,
            Instance::BOddSmall { k, l } => k >= 2 && l >= k + 1,
            Instance::BEven { k, l } => k >= 2 && l >= 2,
            Instance::C { k, l } => k >= 1 && l >= 2,
            Instance::D { k } => k >= 1,
            Instance::F { k } => k >= 2,
            Instance::H { n } => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("invalid parameters for {}", self.name()))
        }
    }

    /// The family's defining equation with the parameters substituted.
    pub fn equation(&self) -> Poly {
        self.validate().expect("equation of an invalid instance");
        match *self {
            Instance::E60 => parse("z^3+y^3*z+x^2*y^2"),
            Instance::E70 => parse("z^3+x^2*y*z+y^4"),
            Instance::E07 => parse("z^3+y^5+x^2*y^2"),
            Instance::AEq { k, m } => {
                if k == m {
                    Instance::AGe { k, l: k, m: k }.equation()
                } else {
                    parse(&format!(
                        "z^3+(x-y^{k})*z^2-(x+y^{k}+y^{m})*y^{k}*z+y^{e}",
                        k = k,
                        m = m,
                        e = 2 * k + m
                    ))
                }
            }
            Instance::AGe { k, l, m } => parse(&format!(
                "z^3+x*z^2-(x+y^{k}+y^{l}+y^{m})*y^{k}*z+y^{e}",
                k = k,
                l = l,
                m = m,
                e = 2 * k + l
            )),
            Instance::BOddBig { k, l } | Instance::BOddSmall { k, l } => parse(&format!(
                "z^3+(x-y^{})*z^2-y^{e}*z-x*y^{e}",
                l - 1,
                e = 2 * k + 1
            )),
            Instance::BEven { k, l } => parse(&format!(
                "z^3+x*z^2-(y^{}+y^{l})*y^{k}*z-x*y^{e}",
                k + 1,
                l = l,
                k = k,
                e = 2 * k + 1
            )),
            Instance::C { k, l } => parse(&format!(
                "z^3+x*z^2-{l}*x^{}*y^{e}*z-(x^{l}+y^2)*y^{e}",
                l - 1,
                l = l,
                e = 2 * k
            )),
            Instance::D { k } => parse(&format!(
                "z^3+(x+y^{e})*z^2+(2*x*y^{k}-y^2)*y^{k}*z+x^2*y^{e}",
                k = k,
                e = 2 * k
            )),
            Instance::F { k } => parse(&format!(
                "z^3+(x+y^{e})*z^2+2*x*y^{e}*z+(x^2+y^3)*y^{e}",
                e = 2 * k
            )),
            Instance::H { n } => {
                let k = (n + 1) / 3;
                match n % 3 {
                    2 => {
                        if k == 1 {
                            parse("z^3+x^2*y*(x+1)")
                        } else {
                            parse(&format!("z^3+x^2*y*(x+y^{})", k - 1))
                        }
                    }
                    0 => parse(&format!("z^3+x*y^{}*z+x^3*y", k)),
                    _ => parse(&format!("z^3+x*y^{}*z+x^3*y^2", k + 1)),
                }
            }
        }
    }

    /// The published essential-vector list, verbatim with duplicates
    /// removed. Err for C instances outside k = 3q − 1, where no list
    /// is stated.
    pub fn theorem_vectors(&self) -> Result<Vec<V3>, String> {
        self.validate()?;
        let rows = match *self {
            Instance::E60 => vec![
                [0, 1, 1], [0, 2, 1], [1, 1, 1], [0, 3, 2], [1, 1, 2], [1, 2, 2], [2, 1, 2],
                [2, 1, 3], [2, 2, 3], [3, 2, 3], [3, 2, 4], [3, 3, 4], [4, 3, 5], [5, 4, 6],
            ],
            Instance::E70 => vec![
                [0, 1, 1], [0, 2, 1], [0, 1, 2], [0, 1, 3], [1, 1, 1], [1, 1, 2], [1, 2, 2],
                [1, 2, 3], [1, 2, 4], [2, 2, 3], [2, 3, 4], [2, 3, 5], [3, 3, 4], [3, 4, 5],
                [3, 4, 6], [4, 5, 7], [5, 6, 8],
            ],
            Instance::E07 => vec![
                [0, 1, 1], [0, 2, 1], [1, 1, 1], [0, 3, 2], [1, 1, 2], [1, 2, 2], [2, 1, 2],
                [2, 2, 3], [3, 2, 3], [3, 2, 4], [3, 3, 4], [4, 3, 5], [5, 3, 5], [5, 4, 6],
                [6, 4, 7], [7, 5, 8], [9, 6, 10],
            ],
            Instance::AEq { k, m } => {
                let mut out: Vec<V3> = (1..=k + m).map(|c| [0, 1, c]).collect();
                for s in 1..k {
                    out.extend((s..=m + k - s).map(|c| [s, 1, c]));
                }
                out.extend((k..=m).map(|c| [k, 1, c]));
                out
            }
            Instance::AGe { k, l, m } => {
                let mut out: Vec<V3> = (1..=k + l).map(|c| [0, 1, c]).collect();
                for s in 1..m {
                    out.extend((s..=l + k - s).map(|c| [s, 1, c]));
                }
                out.extend((m..=k + l - m).map(|c| [m, 1, c]));
                for r in 1..=(k - m) / 2 {
                    out.extend((m + r..=k - r).map(|c| [m + r, 1, c]));
                }
                out
            }
            Instance::BOddBig { k, l } => {
                let mut out: Vec<V3> = Vec::new();
                for a in 0..l {
                    out.extend((a.max(1)..=k + 1).map(|c| [a, 1, c]));
                }
                out.push([l, 1, k + 1]);
                out.extend((0..=2 * l - 2).map(|a| [a, 2, 2 * k + 1]));
                out
            }
            Instance::BOddSmall { k, .. } => {
                let mut out: Vec<V3> = Vec::new();
                for a in 0..=k {
                    out.extend((a.max(1)..=k + 1).map(|c| [a, 1, c]));
                }
                out.push([k + 1, 1, k + 1]);
                out.extend((0..=2 * k + 1).map(|a| [a, 2, 2 * k + 1]));
                out
            }
            Instance::BEven { k, l } => {
                let mut out: Vec<V3> = (1..=k + 1).map(|c| [0, 1, c]).collect();
                for a in 1..=l {
                    out.extend((a..=k + 1).map(|c| [a, 1, c]));
                }
                let mut j = 1;
                while l + j <= k - j {
                    out.extend((l + j..=k - j).map(|c| [l + j, 1, c]));
                    j += 1;
                }
                let e = (l + k) / 2;
                out.push([e, 1, e]);
                if (l + k) % 2 == 1 {
                    out.push([e, 1, e + 1]);
                }
                let a_end = (2 * l - 1).min(2 * k + 1);
                out.extend((0..=a_end).map(|a| [a, 2, 2 * k + 1]));
                out
            }
            Instance::C { k, l } => {
                let q = (k + 1) / 3;
                if 3 * q - 1 != k {
                    return Err(format!(
                        "theorem vectors for family C are stated only for k = 3q-1 (got k={})",
                        k
                    ));
                }
                let p = l / 2;
                let mut out: Vec<V3> = (1..=k).map(|c| [0, 1, c]).collect();
                out.extend((1..=k + 1).map(|c| [1, 1, c]));
                out.extend((2..=k).map(|c| [2, 1, c]));
                for a in 3..=2 * q {
                    let end = k - 1 - (a - 3) / 2;
                    out.extend((a..=end).map(|c| [a, 1, c]));
                }
                for b in 1..=p {
                    out.push([1, b, (k + 1) * b - 1]);
                    out.push([1, b, (k + 1) * b]);
                }
                if l % 2 == 1 {
                    out.push([1, p + 1, (k + 1) * (p + 1) - 1]);
                }
                out.extend((1..=l).map(|b| [2, b, (k + 1) * b - 1]));
                out
            }
            Instance::D { k } => {
                let mut out: Vec<V3> = vec![[1, 0, 1], [1, 0, 2]];
                out.extend((1..=k).map(|c| [0, 1, c]));
                out.extend((1..=k + 1).map(|c| [1, 1, c]));
                out.push([2, 2, 2 * k + 1]);
                out.extend((2..=k + 2).map(|c| [2, 1, c]));
                let m = k / 2;
                for a in 3..=m {
                    out.extend((a..=k + 2 - a).map(|c| [a, 1, c]));
                }
                out.extend([[m, 1, m], [m, 1, m + 1], [m, 1, m + 2], [m + 1, 1, m + 1]]);
                out.extend([[3, 2, 2 * k + 1], [3, 2, 2 * k + 2]]);
                if k % 2 == 1 {
                    out.extend([[m + 1, 1, m + 2], [k + 2, 2, k + 2]]);
                }
                out
            }
            Instance::F { k } => tv_f(k),
            Instance::H { n } => tv_h(n),
        };
        Ok(dedup_rows(rows))
    }

    /// Theorem vectors that are not primitive (kept verbatim in the
    /// list, primitivized when used as subdivision rays).
    pub fn non_primitive_vectors(&self) -> Vec<V3> {
        self.theorem_vectors()
            .map(|vs| vs.into_iter().filter(|&v| lin::primitive(v) != v).collect())
            .unwrap_or_default()
    }

    /// The explicit cone decomposition where one is published (E60),
    /// the forced wedge cones for B_odd with l ≤ k, and otherwise a
    /// reconstructed regular subdivision on the mandated rays.
    pub fn theorem_subdivision(&self) -> Result<(Vec<Cone>, SubdivisionMethod), String> {
        if let Instance::E60 = self {
            return Ok((e60_figure4(), SubdivisionMethod::Explicit));
        }
        let tvecs = self.theorem_vectors()?;
        let newton = newton_polyhedron(&self.equation());
        let forced = if let Instance::BOddBig { k, l } = *self {
            let mut forced: Vec<Cone> = (l - 1..k)
                .map(|s| [[1, 0, 0], [l - 1, 1, s], [l - 1, 1, s + 1]])
                .collect();
            forced.push([[1, 0, 0], [l - 1, 1, k], [l, 1, k + 1]]);
            forced.push([[1, 0, 0], [1, 0, 1], [l, 1, k + 1]]);
            forced.push([[l - 1, 1, k], [2 * l - 2, 2, 2 * k + 1], [l, 1, k + 1]]);
            forced
        } else {
            Vec::new()
        };
        build_subdivision(&newton, &tvecs, &forced, &forced)
            .ok_or_else(|| format!("no regular subdivision found for {}", self.name()))
    }

    /// The vanishing centers the jet walk can start from: the
    /// coordinate-axis ideals among (y,z) and (x,z) that contain the
    /// equation.
    pub fn centers(&self) -> Vec<[Axis; 2]> {
        let f = self.equation();
        [[Axis::Y, Axis::Z], [Axis::X, Axis::Z]]
            .into_iter()
            .filter(|pair| {
                f.terms().all(|(mono, _)| {
                    pair.iter().any(|axis| {
                        mono.exponents3().map(|e| e[axis.index()] > 0).unwrap_or(false)
                    })
                })
            })
            .collect()
    }

    /// Default exploration depth derived from the Newton polyhedron.
    pub fn default_max_level(&self) -> usize {
        newton_polyhedron(&self.equation()).default_max_level() as usize
    }
}

/// All instances exercised by the acceptance sweeps (parameters
/// bounded as in the published small-parameter tables).
pub fn sweep() -> Vec<Instance> {
    let mut out = vec![Instance::E60, Instance::E70, Instance::E07];
    for k in 1..=4 {
        for m in k..=6 {
            out.push(Instance::AEq { k, m });
        }
    }
    for k in 1..=5 {
        for l in 1..=k {
            for m in 1..=l {
                out.push(Instance::AGe { k, l, m });
            }
        }
    }
    for k in 2..=5 {
        for l in 2..=4 {
            out.push(Instance::BEven { k, l });
        }
    }
    for k in 2..=5i64 {
        for l in 2..=k {
            out.push(Instance::BOddBig { k, l });
        }
    }
    for k in 2..=4i64 {
        for l in k + 1..=5 {
            out.push(Instance::BOddSmall { k, l });
        }
    }
    for k in 1..=5 {
        for l in 2..=5 {
            out.push(Instance::C { k, l });
        }
    }
    for k in 1..=5 {
        out.push(Instance::D { k });
    }
    for k in 2..=5 {
        out.push(Instance::F { k });
    }
    for n in 2..=5 {
        out.push(Instance::H { n });
    }
    out
}

/// One pinned comparison between the jet walk and the published
/// vector list.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub instance: Instance,
    /// Exploration depth per center; the first entry is the default
    /// depth of the instance.
    pub depths: Vec<([Axis; 2], usize)>,
    /// Essential vectors found by the walk beyond the published list.
    pub extras: Vec<V3>,
}

/// The small instances whose explored essential vectors are pinned
/// against the published lists: the lists are always contained in the
/// union of the explored sets over the listed centers, and the extras
/// are exactly as recorded here.
pub fn cross_checks() -> Vec<CrossCheck> {
    const YZ: [Axis; 2] = [Axis::Y, Axis::Z];
    const XZ: [Axis; 2] = [Axis::X, Axis::Z];
    vec![
        CrossCheck {
            instance: Instance::E60,
            depths: vec![(YZ, 18), (XZ, 2)],
            extras: vec![[1, 0, 1], [1, 0, 2]],
        },
        CrossCheck {
            instance: Instance::AEq { k: 1, m: 2 },
            depths: vec![(YZ, 4)],
            extras: vec![],
        },
        CrossCheck {
            instance: Instance::BOddBig { k: 3, l: 2 },
            depths: vec![(YZ, 16), (XZ, 6)],
            extras: vec![[4, 1, 5], [6, 1, 6]],
        },
        CrossCheck {
            instance: Instance::H { n: 3 },
            depths: vec![(YZ, 6), (XZ, 6)],
            extras: vec![[1, 0, 2]],
        },
    ]
}

/// F-family vector rows: printed prefixes for the second- and
/// third-coordinate rows, continued by the (+2, −1) step until the
/// closed-form terminal vector, which exists only when the terminal
/// formulas have an admissible index (k = 2 has none).
fn tv_f(k: i64) -> Vec<V3> {
    let mut out: Vec<V3> = (1..=k).map(|c| [0, 1, c]).collect();
    out.extend((1..=k + 1).map(|c| [1, 1, c]));
    out.extend((2..=k + 1).map(|c| [2, 1, c]));
    let mut a = 3;
    while a <= k - (a - 3) {
        out.extend((a..=k - (a - 3)).map(|c| [a, 1, c]));
        a += 1;
    }
    let term2: Option<V3> = match k % 3 {
        0 => {
            out.push([(2 * k + 3) / 3, 1, (2 * k + 3) / 3]);
            Some([(4 * k + 6) / 3, 2, (4 * k + 6) / 3])
        }
        1 => {
            out.push([(2 * k + 1) / 3, 1, (2 * k + 4) / 3]);
            Some([(4 * k + 2) / 3, 2, (4 * k + 8) / 3])
        }
        _ if k >= 5 => {
            out.push([(2 * k - 1) / 3, 1, (2 * k + 5) / 3]);
            Some([(4 * k + 4) / 3, 2, (4 * k + 7) / 3])
        }
        _ => None,
    };
    fn walk(prefix: [V3; 4], term: Option<V3>, step_from: (i64, i64)) -> Vec<V3> {
        let mut row = Vec::new();
        for v in prefix {
            row.push(v);
            if Some(v) == term {
                return row;
            }
        }
        if let Some(t) = term {
            let (mut a, mut d) = step_from;
            loop {
                a += 2;
                d -= 1;
                let v = [a, prefix[0][1], d];
                row.push(v);
                if v == t {
                    return row;
                }
                assert!(d > 0, "terminal vector not reached");
            }
        }
        row
    }
    out.extend(walk(
        [[2, 2, 2 * k + 1], [3, 2, 2 * k + 2], [4, 2, 2 * k + 1], [6, 2, 2 * k]],
        term2,
        (6, 2 * k),
    ));
    out.extend(walk(
        [[4, 3, 3 * k + 2], [5, 3, 3 * k + 2], [7, 3, 3 * k + 1], [9, 3, 3 * k]],
        Some([2 * k + 3, 3, 2 * k + 3]),
        (9, 3 * k),
    ));
    if k % 3 == 1 {
        out.push([3 * k + 2, 3, 3 * k + 2]);
    }
    out
}

/// H-family vector rows by the residue of n modulo 3.
fn tv_h(n: i64) -> Vec<V3> {
    let mut out: Vec<V3> = Vec::new();
    match n % 3 {
        2 => {
            let k = (n + 1) / 3;
            out.extend([[2, 0, 1], [3, 0, 2]]);
            out.extend((0..k).map(|a| [a, 1, a + 1]));
            out.extend((0..2 * k - 1).map(|a| [a, 2, a + 1]));
            out.extend((0..3 * k - 2).map(|a| [a, 3, a + 1]));
            out.push([1, 0, 1]);
            out.extend((1..=k).map(|a| [a, 1, a]));
        }
        0 => {
            let k = n / 3;
            out.push([2, 0, 1]);
            out.extend((0..=k).map(|a| [a, 1, a + 1]));
            out.extend((0..2 * k).map(|a| [a, 2, a + 1]));
            out.extend((0..3 * k - 1).map(|a| [a, 3, a + 1]));
            out.push([1, 0, 1]);
            out.extend((1..=k).map(|a| [a, 1, a]));
        }
        _ => {
            let k = (n - 1) / 3;
            out.extend((0..=k).map(|a| [a, 1, a + 1]));
            out.extend((0..=2 * k).map(|a| [a, 2, a + 1]));
            out.extend((0..3 * k).map(|a| [a, 3, a + 2]));
            out.extend([[1, 0, 1], [1, 0, 2], [2, 0, 1]]);
            out.extend((1..=k).map(|a| [a, 1, a]));
        }
    }
    out
}

/// The published 28-cone decomposition for E_{6,0}: two fans of eight
/// cones around the interior rays (1,1,1) and (2,1,2), plus twelve
/// further cones closing the region between them.
pub fn e60_figure4() -> Vec<Cone> {
    const E1: V3 = [1, 0, 0];
    const E2: V3 = [0, 1, 0];
    const E3: V3 = [0, 0, 1];
    let fans: [(V3, [V3; 8]); 2] = [
        (
            [1, 1, 1],
            [E1, E2, [0, 2, 1], [0, 3, 2], [1, 2, 2], [3, 3, 4], [5, 4, 6], [3, 2, 3]],
        ),
        (
            [2, 1, 2],
            [E1, [1, 0, 1], [1, 0, 2], [2, 1, 3], [3, 2, 4], [4, 3, 5], [5, 4, 6], [3, 2, 3]],
        ),
    ];
    let mut cones: Vec<Cone> = Vec::new();
    for (center, cycle) in fans {
        for i in 0..cycle.len() {
            cones.push([center, cycle[i], cycle[(i + 1) % cycle.len()]]);
        }
    }
    cones.extend([
        [E3, [0, 1, 1], [1, 1, 2]],
        [[0, 1, 1], [0, 3, 2], [1, 2, 2]],
        [[0, 1, 1], [1, 2, 2], [1, 1, 2]],
        [[1, 1, 2], [1, 2, 2], [2, 2, 3]],
        [[1, 2, 2], [3, 3, 4], [2, 2, 3]],
        [[2, 2, 3], [3, 3, 4], [5, 4, 6]],
        [[2, 2, 3], [5, 4, 6], [4, 3, 5]],
        [[2, 2, 3], [4, 3, 5], [3, 2, 4]],
        [[2, 2, 3], [3, 2, 4], [2, 1, 3]],
        [[1, 1, 2], [2, 2, 3], [2, 1, 3]],
        [[1, 1, 2], [2, 1, 3], [1, 0, 2]],
        [[1, 1, 2], [1, 0, 2], E3],
    ]);
    cones
}
