//! Small exact integer linear algebra on 3-vectors: determinants, cross
//! products, gcd normalization, and matrix rank by minors. All products
//! are computed in `i128` so the `i64` coordinates used elsewhere cannot
//! overflow silently.

use alloc::vec::Vec;
use core::cmp::Ordering;

/// A lattice vector (or exponent vector) in three coordinates.
pub type V3 = [i64; 3];

/// The three coordinate axes e1, e2, e3.
pub const AXES: [V3; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn widen(v: V3) -> [i128; 3] {
    [v[0] as i128, v[1] as i128, v[2] as i128]
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("3-vector arithmetic overflowed i64")
}

/// Componentwise difference `a - b`.
pub fn sub3(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Componentwise negation.
pub fn neg3(a: V3) -> V3 {
    [-a[0], -a[1], -a[2]]
}

/// Dot product.
pub fn dot3(a: V3, b: V3) -> i64 {
    let (a, b) = (widen(a), widen(b));
    narrow(a[0] * b[0] + a[1] * b[1] + a[2] * b[2])
}

/// Cross product.
pub fn cross3(a: V3, b: V3) -> V3 {
    let (a, b) = (widen(a), widen(b));
    [
        narrow(a[1] * b[2] - a[2] * b[1]),
        narrow(a[2] * b[0] - a[0] * b[2]),
        narrow(a[0] * b[1] - a[1] * b[0]),
    ]
}

/// Determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: V3, b: V3, c: V3) -> i64 {
    let (a, b, c) = (widen(a), widen(b), widen(c));
    narrow(
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]),
    )
}

/// Greatest common divisor of two non-negative integers.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd of the absolute values of all three coordinates (0 for the zero vector).
pub fn gcd3(v: V3) -> u64 {
    gcd(gcd(v[0].unsigned_abs(), v[1].unsigned_abs()), v[2].unsigned_abs())
}

/// The primitive vector on the same ray (the zero vector maps to itself).
pub fn primitive(v: V3) -> V3 {
    let g = gcd3(v);
    if g <= 1 {
        v
    } else {
        let g = g as i64;
        [v[0] / g, v[1] / g, v[2] / g]
    }
}

/// True if `v` is one of the three coordinate axis vectors.
pub fn is_axis(v: V3) -> bool {
    AXES.contains(&v)
}

/// Rank of the integer matrix whose rows are `rows`, via minors.
pub fn rank3(rows: &[V3]) -> usize {
    let n = rows.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if det3(rows[i], rows[j], rows[k]) != 0 {
                    return 3;
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if cross3(rows[i], rows[j]) != [0, 0, 0] {
                return 2;
            }
        }
    }
    if rows.iter().any(|&r| r != [0, 0, 0]) {
        1
    } else {
        0
    }
}

/// Compares the fractions `an/ad` and `bn/bd` (denominators must be
/// positive) by exact cross-multiplication.
pub fn cmp_frac(an: i64, ad: i64, bn: i64, bd: i64) -> Ordering {
    debug_assert!(ad > 0 && bd > 0);
    (an as i128 * bd as i128).cmp(&(bn as i128 * ad as i128))
}

/// All maximal minors (of every size up to 3) of the matrix with the given
/// rows have gcd 1: the rows generate a direct summand of the lattice.
/// Used to decide regularity of lower-dimensional cones.
pub fn maximal_minors_gcd(rows: &[V3]) -> u64 {
    match rank3(rows) {
        3 => {
            let n = rows.len();
            let mut g = 0u64;
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        g = gcd(g, det3(rows[i], rows[j], rows[k]).unsigned_abs());
                    }
                }
            }
            g
        }
        2 => {
            let n = rows.len();
            let mut g = 0u64;
            for i in 0..n {
                for j in (i + 1)..n {
                    g = gcd(g, gcd3(cross3(rows[i], rows[j])));
                }
            }
            g
        }
        1 => {
            let mut g = 0u64;
            for &r in rows {
                g = gcd(g, gcd3(r));
            }
            g
        }
        _ => 0,
    }
}

/// Deduplicates while preserving first-occurrence order.
pub fn dedup_preserving<T: Clone + Ord>(items: &[T]) -> Vec<T> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::new();
    for it in items {
        if seen.insert(it.clone()) {
            out.push(it.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det3_matches_cofactor_expansion() {
        assert_eq!(det3([1, 0, 0], [0, 1, 0], [0, 0, 1]), 1);
        assert_eq!(det3([0, 1, 0], [1, 0, 0], [0, 0, 1]), -1);
        assert_eq!(det3([2, 3, 5], [7, 11, 13], [17, 19, 23]), -78);
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = [3, -1, 4];
        let b = [1, 5, -9];
        let c = cross3(a, b);
        assert_eq!(dot3(a, c), 0);
        assert_eq!(dot3(b, c), 0);
    }

    #[test]
    fn primitive_divides_out_content() {
        assert_eq!(primitive([4, 6, 10]), [2, 3, 5]);
        assert_eq!(primitive([0, 0, 7]), [0, 0, 1]);
        assert_eq!(primitive([0, 0, 0]), [0, 0, 0]);
        assert_eq!(primitive([-4, 2, 0]), [-2, 1, 0]);
    }

    #[test]
    fn rank_by_minors() {
        assert_eq!(rank3(&[]), 0);
        assert_eq!(rank3(&[[0, 0, 0]]), 0);
        assert_eq!(rank3(&[[1, 2, 3]]), 1);
        assert_eq!(rank3(&[[1, 2, 3], [2, 4, 6]]), 1);
        assert_eq!(rank3(&[[1, 2, 3], [2, 4, 7]]), 2);
        assert_eq!(rank3(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]), 2);
        assert_eq!(rank3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3);
    }

    #[test]
    fn fraction_comparison_is_exact() {
        assert_eq!(cmp_frac(1, 3, 1, 2), Ordering::Less);
        assert_eq!(cmp_frac(2, 4, 1, 2), Ordering::Equal);
        assert_eq!(cmp_frac(-1, 2, 0, 1), Ordering::Less);
        // would overflow naive i64 cross-multiplication
        assert_eq!(
            cmp_frac(i64::MAX / 2, i64::MAX / 3, 2, 1),
            Ordering::Less
        );
    }

    #[test]
    fn minors_gcd_detects_non_saturated_sublattices() {
        // index-2 sublattice of a plane
        assert_eq!(maximal_minors_gcd(&[[2, 0, 0], [0, 2, 0]]), 4);
        assert_eq!(maximal_minors_gcd(&[[1, 0, 0], [0, 2, 0]]), 2);
        assert_eq!(maximal_minors_gcd(&[[1, 0, 0], [0, 1, 0]]), 1);
        assert_eq!(maximal_minors_gcd(&[[1, 1, 1], [1, 1, 3]]), 2);
    }
}
