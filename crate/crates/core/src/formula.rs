//! Closed-form toric cluster variables `z^(m)_{i,j,k}` for the four models.

use serde::{Deserialize, Serialize};

use crate::cluster::Point;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalExpr};

/// The five building blocks and the six `Y_r` of one model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelConstants {
    pub a: RationalExpr,
    pub b: RationalExpr,
    pub c: RationalExpr,
    pub d: RationalExpr,
    pub e: RationalExpr,
    pub y: [RationalExpr; 6],
}

fn r(num: &str, den: &str) -> RationalExpr {
    RationalExpr::parse(num, den).expect("built-in constant")
}

fn xs() -> [RationalExpr; 6] {
    [1, 2, 3, 4, 5, 6].map(|i| RationalExpr::from_poly(LaurentPoly::var(i)))
}

/// A commonly quoted numerator of `B` for Model 2 that does not survive the
/// substitution bridge from Model 1; see [`constants`].
pub const MODEL2_B_VARIANT: &str = "x4*x6^2 + x1*x2*x5 + x3*x4*x5";

const MODEL3_E: &str = "x1^2*x2^2*x6^2 + 2*x1*x2*x3*x6^3 + x3^2*x6^4 + x1^2*x2^2*x4*x5 \
    + 3*x1*x2*x3*x4*x5*x6 + 2*x3^2*x4*x5*x6^2 + x3^2*x4^2*x5^2";
const MODEL4_C: &str = "x6^6 + 2*x1*x2*x3*x6^3 + x1^2*x2^2*x3^2 + 3*x4*x5*x6^4 \
    + 2*x1*x2*x3*x4*x5*x6 + 3*x4^2*x5^2*x6^2 + x4^3*x5^3";
const MODEL4_E: &str = "x6^6 + 2*x1*x2*x3*x6^3 + x1^2*x2^2*x3^2 + 3*x4*x5*x6^4 \
    + 3*x1*x2*x3*x4*x5*x6 + 3*x4^2*x5^2*x6^2 + x4^3*x5^3";

/// Constants of model `m`.
///
/// Model 2's `B` uses the numerator `x4 x6^2 + x1 x2 x5 + x3 x5 x6`. The
/// variant ending in `x3 x4 x5` is inconsistent with both neighbouring models
/// and with the mutation engine.
pub fn constants(m: u8) -> ModelConstants {
    let x = xs();
    match m {
        1 => ModelConstants {
            a: r("x3*x5 + x4*x6", "x1*x2"),
            b: r("x1*x6 + x2*x5", "x3*x4"),
            c: r("x1*x3 + x2*x4", "x5*x6"),
            d: r("x1*x3*x6 + x2*x3*x5 + x2*x4*x6", "x1*x4*x5"),
            e: r("x2*x4*x5 + x1*x3*x5 + x1*x4*x6", "x2*x3*x6"),
            y: x,
        },
        2 => ModelConstants {
            a: r("x1", "x2"),
            b: r("x4*x6^2 + x1*x2*x5 + x3*x5*x6", "x1*x3*x4"),
            c: r("x1*x2*x4 + x3*x4*x6 + x3^2*x5", "x1*x5*x6"),
            d: r("x1*x2 + x3*x6", "x4*x5"),
            e: r("x4^2*x6^2 + x1*x2*x4*x5 + 2*x3*x4*x5*x6 + x3^2*x5^2", "x1*x2*x3*x6"),
            y: {
                let mut y = x;
                y[0] = r("x4*x6 + x3*x5", "x1");
                y
            },
        },
        3 => ModelConstants {
            a: r("x1", "x2"),
            b: r("x4*x5 + x6^2", "x1*x3"),
            c: r("x1^2*x2^2 + 2*x1*x2*x3*x6 + x3^2*x6^2 + x3^2*x4*x5", "x1*x4*x5*x6"),
            d: r("x4", "x5"),
            e: r(MODEL3_E, "x1*x2*x3*x4^2*x6"),
            y: {
                let mut y = x;
                y[0] = r("x1*x2*x6 + x3*x6^2 + x3*x4*x5", "x1*x4");
                y[3] = r("x1*x2 + x3*x6", "x4");
                y
            },
        },
        4 => ModelConstants {
            a: r("x1", "x2"),
            b: r("x3", "x1"),
            c: r(MODEL4_C, "x1*x3^2*x4*x5*x6"),
            d: r("x4", "x5"),
            e: r(MODEL4_E, "x1*x2*x3*x4^2*x6"),
            y: {
                let mut y = x;
                y[0] = r("x6^4 + x1*x2*x3*x6 + 2*x4*x5*x6^2 + x4^2*x5^2", "x1*x3*x4");
                y[2] = r("x4*x5 + x6^2", "x3");
                y[3] = r("x1*x2*x3 + x4*x5*x6 + x6^3", "x3*x4");
                y
            },
        },
        _ => panic!("model must be 1..=4, got {m}"),
    }
}

/// Lift to the six side lengths of a contour.
pub fn phi(p: Point) -> [i64; 6] {
    let (i, j, k) = p;
    [j + k, -i - j - k, i + k, j + 1 - k, -i - j - 1 + k, i + 1 - k]
}

/// Which `Y_r` a point uses.
pub fn residue_r(p: Point) -> usize {
    let (i, j, k) = p;
    match (2 * (i - j) + 3 * k).rem_euclid(6) {
        5 => 1,
        2 => 2,
        4 => 3,
        1 => 4,
        3 => 5,
        _ => 6,
    }
}

/// Exponents of `A, B, C, D, E` at a point.
pub fn exponents(p: Point) -> [i64; 5] {
    let (i, j, k) = p;
    let q = i * i + i * j + j * j + 1;
    [
        (q + i + 2 * j).div_euclid(3),
        (q + 2 * i + j).div_euclid(3),
        q.div_euclid(3),
        ((k - 1) * (k - 1)).div_euclid(4),
        (k * k).div_euclid(4),
    ]
}

/// `z^(m)` at `p` as a fraction, before the final division.
pub fn z_rational(m: u8, p: Point) -> Result<RationalExpr> {
    let c = constants(m);
    let ex = exponents(p);
    let mut acc = c.y[residue_r(p) - 1].clone();
    for (base, e) in [&c.a, &c.b, &c.c, &c.d, &c.e].into_iter().zip(ex) {
        if e != 0 {
            acc = acc.mul(&base.pow(e)?);
        }
    }
    Ok(acc)
}

/// The toric cluster variable `z^(m)_{i,j,k}`.
pub fn z(m: u8, p: Point) -> Result<LaurentPoly> {
    z_rational(m, p)?.to_laurent()
}

/// `Y~''_4 = x1 x2 x3 + x4 x5 x6 + x6^3`.
pub fn y4_tilde() -> LaurentPoly {
    crate::laurent::poly("x1*x2*x3 + x4*x5*x6 + x6^3")
}

/// Both sides of the hexahedron identity that `p` belongs to with parameter `n`.
pub fn hexahedron_identity(p: Point, n: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let (i, j, k) = p;
    let even = k == 2 * n;
    let odd = k == 2 * n + 1;
    let lead = match (i, j) {
        (0, 0) if even => RationalExpr::from_poly(LaurentPoly::var(6)),
        (0, 0) if odd => RationalExpr::from_poly(LaurentPoly::var(5)),
        (-1, 1) if even => RationalExpr::from_poly(LaurentPoly::var(1)),
        (0, -1) if even => RationalExpr::from_poly(LaurentPoly::var(2)),
        (1, 0) if even => RationalExpr::from_poly(LaurentPoly::var(3)),
        (1, -1) if odd => RationalExpr::new(y4_tilde(), crate::laurent::poly("x1*x4"))?,
        (0, 1) if odd => RationalExpr::new(y4_tilde(), crate::laurent::poly("x2*x4"))?,
        (-1, 0) if odd => RationalExpr::new(y4_tilde(), crate::laurent::poly("x3*x4"))?,
        _ => return Err(Error::NotInFamily(p)),
    };
    let (de, ee) = if even { (n * (n - 1), n * n) } else { (n * n, n * (n + 1)) };
    let c = constants(4);
    let rhs = lead.mul(&c.d.pow(de)?).mul(&c.e.pow(ee)?).to_laurent()?;
    Ok((z(4, p)?, rhs))
}
