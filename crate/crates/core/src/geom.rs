//! Exact planar geometry in lattice coordinates.
//!
//! A point `(p, q)` stands for `p·e1 + q·e2` with `e1 = (1, 0)` and
//! `e2 = (1/2, √3/2)`. Coordinates are integers in units of `1/S`; `S` is
//! divisible by every denominator the tilings, contours, cell centroids and
//! midpoints need, so all tests below are exact integer arithmetic.

/// Units per lattice step.
pub const S: i64 = 25920;

pub type Pt = (i64, i64);

pub fn add(a: Pt, b: Pt) -> Pt {
    (a.0 + b.0, a.1 + b.1)
}

pub fn sub(a: Pt, b: Pt) -> Pt {
    (a.0 - b.0, a.1 - b.1)
}

pub fn scale(a: Pt, k: i64) -> Pt {
    (a.0 * k, a.1 * k)
}

/// Lattice offset `(ox, oy)` in units.
pub fn lat(o: (i64, i64)) -> Pt {
    (o.0 * S, o.1 * S)
}

/// A rational point `(xn/xd, yn/yd)` in units. Panics if not representable.
pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Pt {
    assert!(S % xd == 0 && S % yd == 0, "denominator not supported");
    (xn * (S / xd), yn * (S / yd))
}

pub fn cross(a: Pt, b: Pt) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Exact division of a point, asserting the result stays on the grid.
pub fn div_exact(a: Pt, k: i64) -> Pt {
    assert!(a.0 % k == 0 && a.1 % k == 0, "point {a:?} not divisible by {k}");
    (a.0 / k, a.1 / k)
}

pub fn midpoint(a: Pt, b: Pt) -> Pt {
    div_exact(add(a, b), 2)
}

/// Twice the signed area (in lattice coordinates).
pub fn area2(pts: &[Pt]) -> i128 {
    let n = pts.len();
    (0..n).map(|i| cross(pts[i], pts[(i + 1) % n])).sum()
}

/// Integer part of a point, i.e. the fundamental-domain translate it lies in.
pub fn floor_cell(p: Pt) -> (i64, i64) {
    (p.0.div_euclid(S), p.1.div_euclid(S))
}

/// Position inside the fundamental domain.
pub fn frac_part(p: Pt) -> Pt {
    (p.0.rem_euclid(S), p.1.rem_euclid(S))
}

/// On one of the three lattice line families (integer x, y or x + y).
pub fn on_lattice_line(p: Pt) -> bool {
    p.0 % S == 0 || p.1 % S == 0 || (p.0 + p.1) % S == 0
}

/// Winding number of `poly` around `pt`; `poly` may or may not repeat its first point.
pub fn winding(pt: Pt, poly: &[Pt]) -> i32 {
    let mut n = poly.len();
    if n > 1 && poly[0] == poly[n - 1] {
        n -= 1;
    }
    let mut w = 0;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let c = cross(sub(b, a), sub(pt, a));
        if a.1 <= pt.1 {
            if b.1 > pt.1 && c > 0 {
                w += 1;
            }
        } else if b.1 <= pt.1 && c < 0 {
            w -= 1;
        }
    }
    w
}

pub fn on_segment(p: Pt, a: Pt, b: Pt) -> bool {
    cross(sub(b, a), sub(p, a)) == 0
        && a.0.min(b.0) <= p.0
        && p.0 <= a.0.max(b.0)
        && a.1.min(b.1) <= p.1
        && p.1 <= a.1.max(b.1)
}

/// On any segment of a polyline.
pub fn on_polyline(p: Pt, pts: &[Pt]) -> bool {
    pts.windows(2).any(|w| on_segment(p, w[0], w[1]))
}

/// Cartesian coordinates as floats, for drawing and distance comparisons.
pub fn cartesian(p: Pt) -> (f64, f64) {
    let x = p.0 as f64 / S as f64;
    let y = p.1 as f64 / S as f64;
    (x + y / 2.0, y * 3f64.sqrt() / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winding_of_unit_triangle() {
        let tri = [(0, 0), (S, 0), (0, S)];
        assert_eq!(winding((S / 4, S / 4), &tri), 1);
        let rev = [(0, 0), (0, S), (S, 0)];
        assert_eq!(winding((S / 4, S / 4), &rev), -1);
        assert_eq!(winding((S, S), &tri), 0);
    }

    #[test]
    fn denominators_fit() {
        for d in [2, 3, 4, 5, 6, 12, 15, 30, 72, 96, 864, 1728, 2592] {
            assert_eq!(S % d, 0, "{d}");
        }
    }
}
