//! Axis-aligned box arithmetic shared by the loss, post-processing,
//! evaluation and dataset code.
//!
//! Coordinates are continuous pixel values with no "+1 pixel" inclusive
//! convention: the box (0,0)..(1,1) has area exactly 1. Degenerate
//! (zero-area) boxes are legal inputs everywhere in this module; callers
//! that cannot tolerate them guard at their own level.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("box field {name} = {value} is not finite")]
    NonFinite { name: &'static str, value: f64 },
    #[error("box corners are inverted: ({x_min},{y_min})..({x_max},{y_max})")]
    Inverted {
        x_min: f64,
        y_min: f64,
        x_max: f64,
        y_max: f64,
    },
    #[error("negative extent {name} = {value}")]
    NegativeExtent { name: &'static str, value: f64 },
}

/// Axis-aligned rectangle in corner form (x_min, y_min, x_max, y_max).
///
/// Invariants enforced at construction: all fields finite, `x_min <= x_max`
/// and `y_min <= y_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    x_min: f64,
    y_min: f64,
    x_max: f64,
    y_max: f64,
}

impl BBox {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self, GeometryError> {
        for (name, value) in [
            ("x_min", x_min),
            ("y_min", y_min),
            ("x_max", x_max),
            ("y_max", y_max),
        ] {
            if !value.is_finite() {
                return Err(GeometryError::NonFinite { name, value });
            }
        }
        if x_min > x_max || y_min > y_max {
            return Err(GeometryError::Inverted {
                x_min,
                y_min,
                x_max,
                y_max,
            });
        }
        Ok(Self {
            x_min,
            y_min,
            x_max,
            y_max,
        })
    }

    #[inline]
    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    #[inline]
    pub fn y_min(&self) -> f64 {
        self.y_min
    }

    #[inline]
    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    #[inline]
    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    #[inline]
    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    /// Area in square pixels; zero for degenerate boxes.
    #[inline]
    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    #[inline]
    pub fn center(&self) -> (f64, f64) {
        ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0)
    }

    /// Corners as `[x_min, y_min, x_max, y_max]`.
    #[inline]
    pub fn corners(&self) -> [f64; 4] {
        [self.x_min, self.y_min, self.x_max, self.y_max]
    }

    /// Overlapping region of two boxes, or `None` when they do not overlap
    /// with positive extent on both axes.
    pub fn intersection(&self, other: &BBox) -> Option<BBox> {
        let x_min = self.x_min.max(other.x_min);
        let y_min = self.y_min.max(other.y_min);
        let x_max = self.x_max.min(other.x_max);
        let y_max = self.y_max.min(other.y_max);
        if x_min < x_max && y_min < y_max {
            Some(BBox {
                x_min,
                y_min,
                x_max,
                y_max,
            })
        } else {
            None
        }
    }

    #[inline]
    pub fn intersection_area(&self, other: &BBox) -> f64 {
        let iw = (self.x_max.min(other.x_max) - self.x_min.max(other.x_min)).max(0.0);
        let ih = (self.y_max.min(other.y_max) - self.y_min.max(other.y_min)).max(0.0);
        iw * ih
    }

    /// Intersection over union. Returns 0 when the union has zero area
    /// (two degenerate boxes).
    pub fn iou(&self, other: &BBox) -> f64 {
        let inter = self.intersection_area(other);
        let union = self.area() + other.area() - inter;
        if union > 0.0 {
            inter / union
        } else {
            0.0
        }
    }

    /// Smallest axis-aligned box containing both inputs.
    pub fn enclosing(&self, other: &BBox) -> BBox {
        BBox {
            x_min: self.x_min.min(other.x_min),
            y_min: self.y_min.min(other.y_min),
            x_max: self.x_max.max(other.x_max),
            y_max: self.y_max.max(other.y_max),
        }
    }

    /// Exact algebraic conversion to center/size form.
    pub fn to_cwh(&self) -> CwhBox {
        CwhBox {
            cx: (self.x_min + self.x_max) / 2.0,
            cy: (self.y_min + self.y_max) / 2.0,
            w: self.x_max - self.x_min,
            h: self.y_max - self.y_min,
        }
    }

    /// True when `other` lies strictly inside `self` (no touching edges).
    pub fn strictly_contains(&self, other: &BBox) -> bool {
        self.x_min < other.x_min
            && other.x_max < self.x_max
            && self.y_min < other.y_min
            && other.y_max < self.y_max
    }
}

/// Axis-aligned rectangle in center/size form (cx, cy, w, h).
///
/// Invariants: all fields finite, `w >= 0`, `h >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CwhBox {
    cx: f64,
    cy: f64,
    w: f64,
    h: f64,
}

impl CwhBox {
    pub fn new(cx: f64, cy: f64, w: f64, h: f64) -> Result<Self, GeometryError> {
        for (name, value) in [("cx", cx), ("cy", cy), ("w", w), ("h", h)] {
            if !value.is_finite() {
                return Err(GeometryError::NonFinite { name, value });
            }
        }
        if w < 0.0 {
            return Err(GeometryError::NegativeExtent {
                name: "w",
                value: w,
            });
        }
        if h < 0.0 {
            return Err(GeometryError::NegativeExtent {
                name: "h",
                value: h,
            });
        }
        Ok(Self { cx, cy, w, h })
    }

    #[inline]
    pub fn cx(&self) -> f64 {
        self.cx
    }

    #[inline]
    pub fn cy(&self) -> f64 {
        self.cy
    }

    #[inline]
    pub fn w(&self) -> f64 {
        self.w
    }

    #[inline]
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Exact algebraic conversion back to corner form.
    ///
    /// Round-tripping `BBox -> CwhBox -> BBox` is exact on dyadic pixel
    /// grids and otherwise accurate to one unit in the last place at the
    /// scale of the box coordinates.
    pub fn to_corners(&self) -> BBox {
        // w, h >= 0 guarantees ordered corners; overflow is impossible at
        // pixel scale.
        BBox {
            x_min: self.cx - self.w / 2.0,
            y_min: self.cy - self.h / 2.0,
            x_max: self.cx + self.w / 2.0,
            y_max: self.cy + self.h / 2.0,
        }
    }
}
