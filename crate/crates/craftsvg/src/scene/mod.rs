//! The canvas data model: colored Bézier strokes in compositing order.

mod svg;

pub use svg::{from_svg, to_svg};

use crate::error::{Error, Result};
use crate::geometry::BezierPath;

/// RGBA color, each channel clamped to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Color {
    pub r: f64,
    pub g: f64,
    pub b: f64,
    pub a: f64,
}

impl Color {
    pub fn new(r: f64, g: f64, b: f64, a: f64) -> Self {
        let c = |v: f64| if v.is_nan() { 0.0 } else { v.clamp(0.0, 1.0) };
        Self { r: c(r), g: c(g), b: c(b), a: c(a) }
    }

    pub fn black() -> Self {
        Self::new(0.0, 0.0, 0.0, 1.0)
    }

    pub fn white() -> Self {
        Self::new(1.0, 1.0, 1.0, 1.0)
    }
}

/// Which motions a stroke is allowed during optimization: primitives keep
/// their shape under 6-dof affine maps, free Bézier strokes may morph
/// under the full 8-dof projective family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformClass {
    AffineOnly,
    Projective,
}

/// One Bézier stroke with width, opacity and color.
#[derive(Debug, Clone, PartialEq)]
pub struct Stroke {
    pub path: BezierPath,
    pub width: f64,
    pub opacity: f64,
    pub color: Color,
    pub transform_class: TransformClass,
}

impl Stroke {
    /// Build a stroke, validating the invariants. Paths are capped at 4
    /// control points (cubic) so every stroke has an exact SVG path
    /// representation.
    pub fn new(
        path: BezierPath,
        width: f64,
        opacity: f64,
        color: Color,
        transform_class: TransformClass,
    ) -> Result<Self> {
        if path.points().len() > 4 {
            return Err(Error::Domain(format!(
                "stroke paths support at most 4 control points, got {}",
                path.points().len()
            )));
        }
        if !(width > 0.0) || !width.is_finite() {
            return Err(Error::Domain(format!("stroke width must be positive, got {width}")));
        }
        if !(0.0..=1.0).contains(&opacity) {
            return Err(Error::Domain(format!("stroke opacity must be in [0, 1], got {opacity}")));
        }
        Ok(Self { path, width, opacity, color, transform_class })
    }
}

/// The SVG under optimization: an ordered stroke list over a background.
/// Later strokes composite on top of earlier ones.
#[derive(Debug, Clone, PartialEq)]
pub struct Canvas {
    width: u32,
    height: u32,
    pub strokes: Vec<Stroke>,
    pub background: Color,
}

impl Canvas {
    pub fn new(width: u32, height: u32, background: Color) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Domain(format!("canvas dimensions must be positive, got {width}x{height}")));
        }
        Ok(Self { width, height, strokes: Vec::new(), background })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn stroke_count(&self) -> usize {
        self.strokes.len()
    }

    /// Append a stroke on top of the existing ones.
    pub fn add_stroke(&mut self, stroke: Stroke) {
        self.strokes.push(stroke);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn unit_cubic() -> BezierPath {
        BezierPath::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap()
    }

    #[test]
    fn color_channels_clamp() {
        let c = Color::new(-0.5, 1.5, 0.25, f64::NAN);
        assert_eq!((c.r, c.g, c.b, c.a), (0.0, 1.0, 0.25, 0.0));
    }

    #[test]
    fn stroke_invariants_enforced() {
        let p = unit_cubic();
        assert!(Stroke::new(p.clone(), 0.0, 0.5, Color::black(), TransformClass::Projective).is_err());
        assert!(Stroke::new(p.clone(), 1.0, 1.5, Color::black(), TransformClass::Projective).is_err());
        assert!(Stroke::new(p, 1.0, 0.5, Color::black(), TransformClass::Projective).is_ok());
    }

    #[test]
    fn add_stroke_appends_in_order() {
        let mut canvas = Canvas::new(64, 64, Color::white()).unwrap();
        assert_eq!(canvas.stroke_count(), 0);
        let s1 = Stroke::new(unit_cubic(), 1.0, 0.5, Color::black(), TransformClass::Projective).unwrap();
        let mut s2 = s1.clone();
        s2.width = 2.0;
        canvas.add_stroke(s1.clone());
        assert_eq!(canvas.stroke_count(), 1);
        canvas.add_stroke(s2.clone());
        assert_eq!(canvas.stroke_count(), 2);
        assert_eq!(canvas.strokes[0], s1);
        assert_eq!(canvas.strokes[1], s2);
    }

    #[test]
    fn zero_canvas_rejected() {
        assert!(Canvas::new(0, 64, Color::white()).is_err());
    }
}
