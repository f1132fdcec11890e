//! Points, Bézier curves and the planar transforms strokes move under.
//!
//! Strokes deform either projectively (8 dof, morphing allowed) or, for
//! primitive shapes, by affine maps only (6 dof). The affine case can be
//! split into two rotations and an anisotropic scale via a closed-form
//! 2x2 singular value decomposition, which is what [`decompose_affine`]
//! does.

use crate::error::{Error, Result};

/// A point in canvas coordinates (pixels, y grows downward).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A single Bézier curve of degree `p - 1` over `p >= 2` control points.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierPath {
    control_points: Vec<Point>,
}

impl BezierPath {
    pub fn new(control_points: Vec<Point>) -> Result<Self> {
        if control_points.len() < 2 {
            return Err(Error::Domain(format!(
                "a Bezier path needs at least 2 control points, got {}",
                control_points.len()
            )));
        }
        if control_points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::Domain("non-finite control point".into()));
        }
        Ok(Self { control_points })
    }

    pub fn points(&self) -> &[Point] {
        &self.control_points
    }

    pub fn points_mut(&mut self) -> &mut [Point] {
        &mut self.control_points
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    /// Axis-aligned bounding box of the control polygon. The curve is
    /// contained in the convex hull of its control points, so this bounds
    /// the curve as well.
    pub fn control_bbox(&self) -> (Point, Point) {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.control_points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        (min, max)
    }
}

/// 6-dof planar map: linear part plus translation, last homogeneous row (0,0,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineTransform {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl AffineTransform {
    pub fn identity() -> Self {
        Self { a11: 1.0, a12: 0.0, a21: 0.0, a22: 1.0, tx: 0.0, ty: 0.0 }
    }

    pub fn translation(tx: f64, ty: f64) -> Self {
        Self { tx, ty, ..Self::identity() }
    }

    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self { a11: c, a12: -s, a21: s, a22: c, tx: 0.0, ty: 0.0 }
    }
}

/// 8-dof projective map stored as a full 3x3 homogeneous matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveTransform {
    pub m: [[f64; 3]; 3],
}

impl ProjectiveTransform {
    pub fn identity() -> Self {
        Self { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] }
    }

    pub fn from_affine(t: &AffineTransform) -> Self {
        Self {
            m: [
                [t.a11, t.a12, t.tx],
                [t.a21, t.a22, t.ty],
                [0.0, 0.0, 1.0],
            ],
        }
    }
}

/// Result of splitting the linear part of an affine map into
/// `R(theta) * R(-phi) * diag(s1, s2) * R(phi)`.
///
/// `s1 >= |s2|`; `s2` carries the sign of the input determinant, so
/// orientation-reversing maps reconstruct exactly as well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineDecomposition {
    pub theta: f64,
    pub phi: f64,
    pub s1: f64,
    pub s2: f64,
}

impl AffineDecomposition {
    /// Rebuild the 2x2 linear part this decomposition came from.
    pub fn reconstruct(&self) -> [[f64; 2]; 2] {
        let rot = |a: f64| {
            let (s, c) = a.sin_cos();
            [[c, -s], [s, c]]
        };
        let mul = |a: [[f64; 2]; 2], b: [[f64; 2]; 2]| {
            let mut out = [[0.0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            out
        };
        let scale = [[self.s1, 0.0], [0.0, self.s2]];
        mul(mul(rot(self.theta), rot(-self.phi)), mul(scale, rot(self.phi)))
    }
}

/// Evaluate a Bézier curve at parameter `t` by de Casteljau subdivision.
pub fn eval_bezier(path: &BezierPath, t: f64) -> Result<Point> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("Bezier parameter t={t} outside [0, 1]")));
    }
    let mut pts: Vec<Point> = path.points().to_vec();
    let n = pts.len();
    for level in 1..n {
        for i in 0..n - level {
            pts[i] = Point::new(
                (1.0 - t) * pts[i].x + t * pts[i + 1].x,
                (1.0 - t) * pts[i].y + t * pts[i + 1].y,
            );
        }
    }
    Ok(pts[0])
}

/// Apply an affine transform to a point.
pub fn apply_affine(t: &AffineTransform, pt: Point) -> Point {
    Point::new(
        t.a11 * pt.x + t.a12 * pt.y + t.tx,
        t.a21 * pt.x + t.a22 * pt.y + t.ty,
    )
}

/// Apply a projective transform with perspective division.
pub fn apply_projective(p: &ProjectiveTransform, pt: Point) -> Result<Point> {
    let m = &p.m;
    let w = m[2][0] * pt.x + m[2][1] * pt.y + m[2][2];
    if w.abs() < 1e-12 {
        return Err(Error::Degenerate(format!(
            "projective denominator {w:e} vanishes at ({}, {})",
            pt.x, pt.y
        )));
    }
    Ok(Point::new(
        (m[0][0] * pt.x + m[0][1] * pt.y + m[0][2]) / w,
        (m[1][0] * pt.x + m[1][1] * pt.y + m[1][2]) / w,
    ))
}

fn wrap_angle(a: f64) -> f64 {
    // Normalize to (-pi, pi].
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut a = a % two_pi;
    if a <= -std::f64::consts::PI {
        a += two_pi;
    } else if a > std::f64::consts::PI {
        a -= two_pi;
    }
    a
}

/// Closed-form SVD of the 2x2 linear part `[[a11, a12], [a21, a22]]`.
///
/// Returns angles `theta`, `phi` in `(-pi, pi]` and scales with
/// `s1 >= |s2|`. When the singular values coincide the split into
/// `R(-phi) S R(phi)` is arbitrary, so `phi` is canonicalized to zero
/// (the identity therefore maps to all-zero angles).
pub fn decompose_affine(linear: [[f64; 2]; 2]) -> Result<AffineDecomposition> {
    let [[a, b], [c, d]] = linear;
    if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
        return Err(Error::Domain("non-finite matrix entry".into()));
    }
    let e = (a + d) / 2.0;
    let f = (a - d) / 2.0;
    let g = (c + b) / 2.0;
    let h = (c - b) / 2.0;
    let q = e.hypot(h);
    let r = f.hypot(g);
    let s1 = q + r;
    let s2 = q - r;
    // u_angle rotates first (V^T side), v_angle second (U side):
    // A = R(u_total) diag(s1, s2) R(v_total).
    let a1 = if f == 0.0 && g == 0.0 { 0.0 } else { g.atan2(f) };
    let a2 = if e == 0.0 && h == 0.0 { 0.0 } else { h.atan2(e) };
    let u_total = (a2 + a1) / 2.0;
    let v_total = (a2 - a1) / 2.0;
    let degenerate = r <= 1e-14 * q.max(1.0);
    let (theta, phi) = if degenerate {
        // Repeated singular values: phi is free, pick zero.
        (wrap_angle(u_total + v_total), 0.0)
    } else {
        (wrap_angle(u_total + v_total), wrap_angle(v_total))
    };
    Ok(AffineDecomposition { theta, phi, s1, s2 })
}
