//! Complex scalars, root-form polynomials and single-valued square-root
//! branches continued along paths.
//!
//! Polynomials are kept as a leading coefficient plus a root list and are
//! never expanded: every integrand downstream is a product of linear factors,
//! and root form avoids coefficient cancellation. Square roots of linear
//! factors are made single-valued by tracking a continuous argument along a
//! polyline, starting from the principal argument at the path's first point.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative exclusion-tube radius: a tracked root closer than this fraction
/// of the local step to the path is a hard error.
pub(crate) const EXCLUSION_REL: f64 = 1e-3;

/// Largest argument change allowed per accepted step; larger steps are halved.
const MAX_ARG_STEP: f64 = std::f64::consts::FRAC_PI_4;

const MAX_SUBDIV: u32 = 48;

pub fn ensure_finite(z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFiniteValue(z))
    }
}

/// A polynomial stored as `leading * prod (x - root_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootPoly {
    roots: Vec<Complex64>,
    leading: Complex64,
}

impl RootPoly {
    pub fn from_roots(roots: Vec<Complex64>, leading: Complex64) -> Result<Self> {
        if leading.norm() == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        ensure_finite(leading)?;
        for r in &roots {
            ensure_finite(*r)?;
        }
        Ok(Self { roots, leading })
    }

    pub fn one() -> Self {
        Self {
            roots: Vec::new(),
            leading: Complex64::new(1.0, 0.0),
        }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.roots
            .iter()
            .fold(self.leading, |acc, r| acc * (x - r))
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn leading(&self) -> Complex64 {
        self.leading
    }
}

/// Running continuous argument of `point - root` along a path.
///
/// The tracker is advanced step by step; each step adjusts the principal
/// argument at the new point by the multiple of 2*pi closest to the current
/// value. Steps that would rotate by more than pi/4 are subdivided, so the
/// unwinding is unambiguous as long as the path stays out of the exclusion
/// tube of the root.
#[derive(Debug, Clone)]
pub(crate) struct ArgTracker {
    root: Complex64,
    pos: Complex64,
    arg: f64,
}

impl ArgTracker {
    pub(crate) fn start(root: Complex64, at: Complex64) -> Result<Self> {
        let d = at - root;
        if d.norm() == 0.0 {
            return Err(Error::ExclusionTube { root, dist: 0.0 });
        }
        Ok(Self {
            root,
            pos: at,
            arg: d.arg(),
        })
    }

    pub(crate) fn arg(&self) -> f64 {
        self.arg
    }

    pub(crate) fn root(&self) -> Complex64 {
        self.root
    }

    /// Continued square root of `(pos - root)` at the current position.
    pub(crate) fn sqrt_factor(&self) -> Complex64 {
        Complex64::from_polar((self.pos - self.root).norm().sqrt(), 0.5 * self.arg)
    }

    pub(crate) fn advance_to(&mut self, to: Complex64) -> Result<()> {
        let step = (to - self.pos).norm();
        if step == 0.0 {
            return Ok(());
        }
        let dist = dist_point_segment(self.root, self.pos, to);
        if dist < EXCLUSION_REL * step {
            return Err(Error::ExclusionTube {
                root: self.root,
                dist,
            });
        }
        self.advance_inner(to, 0)
    }

    fn advance_inner(&mut self, to: Complex64, depth: u32) -> Result<()> {
        let principal = (to - self.root).arg();
        let k = ((self.arg - principal) / std::f64::consts::TAU).round();
        let candidate = principal + k * std::f64::consts::TAU;
        if (candidate - self.arg).abs() <= MAX_ARG_STEP {
            self.arg = candidate;
            self.pos = to;
            return Ok(());
        }
        if depth >= MAX_SUBDIV {
            return Err(Error::PathDiverged(self.root));
        }
        let mid = 0.5 * (self.pos + to);
        self.advance_inner(mid, depth + 1)?;
        self.advance_inner(to, depth + 1)
    }
}

pub(crate) fn dist_point_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Parameter of the orthogonal projection of `p` onto the line through `a`, `b`
/// (0 at `a`, 1 at `b`), unclamped.
pub(crate) fn projection_parameter(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return 0.0;
    }
    ((p - a).re * ab.re + (p - a).im * ab.im) / len2
}

/// Single-valued branch of `(x - root)^{1/2}` continued along `path`.
///
/// Continuation starts from the principal argument at `path[0]`, follows the
/// polyline through every waypoint and then moves to `x` (a no-op when `x`
/// equals the final waypoint).
pub fn continued_sqrt_factor(root: Complex64, path: &[Complex64], x: Complex64) -> Result<Complex64> {
    if path.is_empty() {
        return Err(Error::InvalidParameter("empty continuation path".into()));
    }
    let mut tracker = ArgTracker::start(root, path[0])?;
    for w in &path[1..] {
        tracker.advance_to(*w)?;
    }
    tracker.advance_to(x)?;
    Ok(tracker.sqrt_factor())
}
