//! Compact planar sets: validation, boundary sampling and the farthest-point
//! distance function.
//!
//! A [`SetSpec`] describes a compact set `E` in the plane, either through an
//! analytic shape (disk, segment, polygon, circular arc) or through explicit
//! node data (finite point set, discretized curve). Boundary sampling is
//! arclength-uniform per piece, which keeps discrete maxima within `O(1/N)`
//! of the analytic values.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Shape catalogue for compact planar sets.
#[derive(Debug, Clone, PartialEq)]
pub enum SetKind {
    Disk {
        center: Complex64,
        radius: f64,
    },
    Segment {
        a: Complex64,
        b: Complex64,
    },
    Polygon {
        vertices: Vec<Complex64>,
    },
    CircularArc {
        center: Complex64,
        radius: f64,
        angle0: f64,
        angle1: f64,
    },
    FinitePoints {
        points: Vec<Complex64>,
    },
    DiscretizedCurve {
        closed: bool,
        nodes: Vec<Complex64>,
    },
}

/// A compact planar set together with the target node count used whenever its
/// boundary has to be discretized.
#[derive(Debug, Clone, PartialEq)]
pub struct SetSpec {
    pub kind: SetKind,
    pub boundary_samples: usize,
}

/// Default boundary discretization when a spec file omits `boundary_samples`.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 512;

impl SetSpec {
    pub fn disk(center: Complex64, radius: f64) -> Self {
        Self::with_kind(SetKind::Disk { center, radius })
    }

    pub fn segment(a: Complex64, b: Complex64) -> Self {
        Self::with_kind(SetKind::Segment { a, b })
    }

    pub fn polygon(vertices: Vec<Complex64>) -> Self {
        Self::with_kind(SetKind::Polygon { vertices })
    }

    pub fn circular_arc(center: Complex64, radius: f64, angle0: f64, angle1: f64) -> Self {
        Self::with_kind(SetKind::CircularArc {
            center,
            radius,
            angle0,
            angle1,
        })
    }

    pub fn finite_points(points: Vec<Complex64>) -> Self {
        Self::with_kind(SetKind::FinitePoints { points })
    }

    pub fn discretized_curve(nodes: Vec<Complex64>, closed: bool) -> Self {
        Self::with_kind(SetKind::DiscretizedCurve { closed, nodes })
    }

    fn with_kind(kind: SetKind) -> Self {
        SetSpec {
            kind,
            boundary_samples: DEFAULT_BOUNDARY_SAMPLES,
        }
    }

    pub fn with_boundary_samples(mut self, samples: usize) -> Self {
        self.boundary_samples = samples;
        self
    }

    /// Same set, discretized with at least `samples` boundary nodes.
    pub fn densified(&self, samples: usize) -> Self {
        self.clone()
            .with_boundary_samples(self.boundary_samples.max(samples))
    }

    pub fn is_finite_points(&self) -> bool {
        matches!(self.kind, SetKind::FinitePoints { .. })
    }

    /// Short deterministic identifier used in report rows.
    pub fn descriptor(&self) -> String {
        match &self.kind {
            SetKind::Disk { center, radius } => {
                format!("disk(({},{}),{})", center.re, center.im, radius)
            }
            SetKind::Segment { a, b } => {
                format!("segment(({},{}),({},{}))", a.re, a.im, b.re, b.im)
            }
            SetKind::Polygon { vertices } => format!("polygon({})", vertices.len()),
            SetKind::CircularArc {
                radius,
                angle0,
                angle1,
                ..
            } => {
                format!("arc(r={},span={})", radius, angle1 - angle0)
            }
            SetKind::FinitePoints { points } => format!("points({})", points.len()),
            SetKind::DiscretizedCurve { nodes, closed } => {
                format!("curve({},closed={})", nodes.len(), closed)
            }
        }
    }

    /// Check all structural invariants of the description.
    pub fn validate(&self) -> Result<()> {
        let finite = |z: &Complex64| z.re.is_finite() && z.im.is_finite();
        match &self.kind {
            SetKind::Disk { center, radius } => {
                if !finite(center) || !radius.is_finite() || *radius <= 0.0 {
                    return Err(Error::InvalidSet(
                        "disk needs a finite center and radius > 0".into(),
                    ));
                }
            }
            SetKind::Segment { a, b } => {
                if !finite(a) || !finite(b) || a == b {
                    return Err(Error::InvalidSet(
                        "segment endpoints must be finite and distinct".into(),
                    ));
                }
            }
            SetKind::Polygon { vertices } => validate_polygon(vertices)?,
            SetKind::CircularArc {
                center,
                radius,
                angle0,
                angle1,
            } => {
                let span = angle1 - angle0;
                if !finite(center) || !radius.is_finite() || *radius <= 0.0 {
                    return Err(Error::InvalidSet(
                        "arc needs a finite center and radius > 0".into(),
                    ));
                }
                if !span.is_finite() || span <= 0.0 || span > TAU + 1e-12 {
                    return Err(Error::InvalidSet(
                        "arc span must satisfy 0 < angle1 - angle0 <= 2*pi".into(),
                    ));
                }
            }
            SetKind::FinitePoints { points } => {
                if points.is_empty() {
                    return Err(Error::InvalidSet(
                        "finite point set needs at least one point".into(),
                    ));
                }
                if points.iter().any(|p| !finite(p)) {
                    return Err(Error::InvalidSet("point coordinates must be finite".into()));
                }
                if !all_distinct(points) {
                    return Err(Error::InvalidSet(
                        "finite point set must have distinct points".into(),
                    ));
                }
            }
            SetKind::DiscretizedCurve { nodes, .. } => {
                if nodes.len() < 3 || nodes.iter().any(|p| !finite(p)) || !all_distinct(nodes) {
                    return Err(Error::InvalidSet(
                        "discretized curve needs >= 3 distinct finite nodes".into(),
                    ));
                }
            }
        }
        if !self.is_discrete() && self.boundary_samples < 8 {
            return Err(Error::InvalidSet("boundary_samples must be >= 8".into()));
        }
        Ok(())
    }

    fn is_discrete(&self) -> bool {
        matches!(
            self.kind,
            SetKind::FinitePoints { .. } | SetKind::DiscretizedCurve { .. }
        )
    }

    /// Sample at least `boundary_samples` points on the boundary of `E`.
    ///
    /// Analytic kinds are parametrized exactly and sampled uniformly in
    /// arclength per piece; discrete kinds return their node list. For closed
    /// curves the list is cyclically ordered.
    pub fn boundary_nodes(&self) -> Result<Vec<Complex64>> {
        Ok(self.boundary_nodes_with_params()?.0)
    }

    /// Boundary nodes, plus the boundary parameter of each node for kinds
    /// that carry an exact parametrization (used for local refinement of
    /// boundary suprema).
    pub(crate) fn boundary_nodes_with_params(&self) -> Result<(Vec<Complex64>, Option<Vec<f64>>)> {
        self.validate()?;
        let n = self.boundary_samples;
        match &self.kind {
            SetKind::Disk { .. } => {
                let params: Vec<f64> = (0..n).map(|k| k as f64 / n as f64).collect();
                let nodes = params.iter().map(|t| self.point_at(*t)).collect();
                Ok((nodes, Some(params)))
            }
            SetKind::Segment { .. } => {
                let params: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
                let nodes = params.iter().map(|t| self.point_at(*t)).collect();
                Ok((nodes, Some(params)))
            }
            SetKind::Polygon { vertices } => {
                let lengths: Vec<f64> = edges(vertices).map(|(a, b)| (b - a).norm()).collect();
                let perimeter: f64 = lengths.iter().sum();
                let mut params = Vec::with_capacity(n + vertices.len());
                let mut offset = 0.0;
                for len in &lengths {
                    let pieces = ((n as f64 * len / perimeter).ceil() as usize).max(1);
                    for j in 0..pieces {
                        params.push((offset + j as f64 * len / pieces as f64) / perimeter);
                    }
                    offset += len;
                }
                let nodes = params.iter().map(|t| self.point_at(*t)).collect();
                Ok((nodes, Some(params)))
            }
            SetKind::CircularArc { angle0, angle1, .. } => {
                let full_circle = angle1 - angle0 >= TAU - 1e-12;
                let params: Vec<f64> = if full_circle {
                    (0..n).map(|k| k as f64 / n as f64).collect()
                } else {
                    (0..n).map(|k| k as f64 / (n - 1) as f64).collect()
                };
                let nodes = params.iter().map(|t| self.point_at(*t)).collect();
                Ok((nodes, Some(params)))
            }
            SetKind::FinitePoints { points } => Ok((points.clone(), None)),
            SetKind::DiscretizedCurve { nodes, .. } => Ok((nodes.clone(), None)),
        }
    }

    /// Exact point on the boundary for parameter `t` in [0, 1]; periodic for
    /// closed shapes. Only meaningful for parametric kinds.
    pub(crate) fn point_at(&self, t: f64) -> Complex64 {
        match &self.kind {
            SetKind::Disk { center, radius } => center + Complex64::from_polar(*radius, TAU * t),
            SetKind::Segment { a, b } => a + (b - a) * t,
            SetKind::Polygon { vertices } => {
                let lengths: Vec<f64> = edges(vertices).map(|(a, b)| (b - a).norm()).collect();
                let perimeter: f64 = lengths.iter().sum();
                let mut s = (t.rem_euclid(1.0)) * perimeter;
                for (k, (a, b)) in edges(vertices).enumerate() {
                    if s <= lengths[k] || k == vertices.len() - 1 {
                        return a + (b - a) * (s / lengths[k]).min(1.0);
                    }
                    s -= lengths[k];
                }
                vertices[0]
            }
            SetKind::CircularArc {
                center,
                radius,
                angle0,
                angle1,
            } => center + Complex64::from_polar(*radius, angle0 + t * (angle1 - angle0)),
            SetKind::FinitePoints { points } => points[0],
            SetKind::DiscretizedCurve { nodes, .. } => nodes[0],
        }
    }

    fn is_periodic_boundary(&self) -> bool {
        match &self.kind {
            SetKind::Disk { .. } | SetKind::Polygon { .. } => true,
            SetKind::CircularArc { angle0, angle1, .. } => angle1 - angle0 >= TAU - 1e-12,
            _ => false,
        }
    }

    /// Farthest-point distance `max over t in E of |z - t|`.
    ///
    /// Closed forms are used for the analytic kinds; discrete kinds take the
    /// maximum over their nodes.
    pub fn farthest_distance(&self, z: Complex64) -> Result<f64> {
        self.validate()?;
        Ok(match &self.kind {
            SetKind::Disk { center, radius } => (z - center).norm() + radius,
            SetKind::Segment { a, b } => (z - a).norm().max((z - b).norm()),
            SetKind::Polygon { vertices } => {
                vertices.iter().map(|v| (z - v).norm()).fold(0.0, f64::max)
            }
            SetKind::CircularArc {
                center,
                radius,
                angle0,
                angle1,
            } => {
                let endpoints = (z - self.point_at(0.0))
                    .norm()
                    .max((z - self.point_at(1.0)).norm());
                let offset = z - center;
                if offset.norm() < 1e-300 {
                    // Every arc point is equidistant from the center.
                    return Ok(*radius);
                }
                // The maximum over the full circle sits at the antipode of
                // the projection of z; use it when it lies on the arc.
                let antipode_angle = offset.im.atan2(offset.re) + std::f64::consts::PI;
                if angle_on_arc(antipode_angle, *angle0, *angle1) {
                    offset.norm() + radius
                } else {
                    endpoints
                }
            }
            SetKind::FinitePoints { points } => {
                points.iter().map(|p| (z - p).norm()).fold(0.0, f64::max)
            }
            SetKind::DiscretizedCurve { nodes, .. } => {
                nodes.iter().map(|p| (z - p).norm()).fold(0.0, f64::max)
            }
        })
    }

    /// Supremum of pairwise distances.
    pub fn diameter(&self) -> Result<f64> {
        self.validate()?;
        Ok(match &self.kind {
            SetKind::Disk { radius, .. } => 2.0 * radius,
            SetKind::Segment { a, b } => (b - a).norm(),
            SetKind::Polygon { vertices } => pairwise_max(vertices),
            SetKind::CircularArc {
                radius,
                angle0,
                angle1,
                ..
            } => {
                let span = angle1 - angle0;
                if span >= std::f64::consts::PI {
                    2.0 * radius
                } else {
                    2.0 * radius * (span / 2.0).sin()
                }
            }
            SetKind::FinitePoints { points } => pairwise_max(points),
            SetKind::DiscretizedCurve { nodes, .. } => pairwise_max(nodes),
        })
    }

    /// Maximize a continuous function over the boundary.
    ///
    /// Scans a grid of at least `min_samples` nodes and then refines around
    /// the best grid cell by ternary search in the boundary parameter, so the
    /// usual `O((deg/N)^2)` grid underestimation of polynomial sup norms is
    /// removed. Discrete kinds return the exact maximum over their nodes.
    pub fn boundary_supremum(
        &self,
        min_samples: usize,
        f: impl Fn(Complex64) -> f64,
    ) -> Result<(f64, Complex64)> {
        let dense = self.densified(min_samples);
        let (nodes, params) = dense.boundary_nodes_with_params()?;
        let mut best = f64::NEG_INFINITY;
        let mut best_idx = 0;
        for (i, z) in nodes.iter().enumerate() {
            let v = f(*z);
            if v > best {
                best = v;
                best_idx = i;
            }
        }
        let mut best_point = nodes[best_idx];
        if let Some(params) = params {
            let periodic = self.is_periodic_boundary();
            let m = params.len();
            let (mut lo, mut hi) = if periodic {
                let prev = params[(best_idx + m - 1) % m];
                let next = params[(best_idx + 1) % m];
                let lo = if best_idx == 0 { prev - 1.0 } else { prev };
                let hi = if best_idx == m - 1 { next + 1.0 } else { next };
                (lo, hi)
            } else {
                (
                    params[best_idx.saturating_sub(1)],
                    params[(best_idx + 1).min(m - 1)],
                )
            };
            for _ in 0..90 {
                let t1 = lo + (hi - lo) / 3.0;
                let t2 = hi - (hi - lo) / 3.0;
                if f(dense.point_at(t1.rem_euclid(1.0))) < f(dense.point_at(t2.rem_euclid(1.0))) {
                    lo = t1;
                } else {
                    hi = t2;
                }
            }
            let t = 0.5 * (lo + hi);
            let z = dense.point_at(t.rem_euclid(1.0));
            let v = f(z);
            if v > best {
                best = v;
                best_point = z;
            }
        }
        Ok((best, best_point))
    }
}

/// `max over k of |z - c_k|` for an explicit point tuple.
pub fn max_distance_to_tuple(tuple: &[Complex64], z: Complex64) -> Result<f64> {
    if tuple.is_empty() {
        return Err(Error::EmptyTuple);
    }
    Ok(tuple.iter().map(|c| (z - c).norm()).fold(0.0, f64::max))
}

fn pairwise_max(points: &[Complex64]) -> f64 {
    let mut best = 0.0_f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max((p - q).norm());
        }
    }
    best
}

fn all_distinct(points: &[Complex64]) -> bool {
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if p == q {
                return false;
            }
        }
    }
    true
}

fn edges(vertices: &[Complex64]) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
    (0..vertices.len()).map(move |i| (vertices[i], vertices[(i + 1) % vertices.len()]))
}

fn angle_on_arc(angle: f64, angle0: f64, angle1: f64) -> bool {
    let span = angle1 - angle0;
    let rel = (angle - angle0).rem_euclid(TAU);
    rel <= span + 1e-12
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segments_properly_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn validate_polygon(vertices: &[Complex64]) -> Result<()> {
    if vertices.len() < 3 {
        return Err(Error::InvalidSet(
            "polygon needs at least 3 vertices".into(),
        ));
    }
    if vertices
        .iter()
        .any(|v| !v.re.is_finite() || !v.im.is_finite())
    {
        return Err(Error::InvalidSet("polygon vertices must be finite".into()));
    }
    if !all_distinct(vertices) {
        return Err(Error::InvalidSet(
            "polygon vertices must be distinct".into(),
        ));
    }
    // Non-collinearity: the signed area must not vanish.
    let area: f64 = edges(vertices)
        .map(|(a, b)| a.re * b.im - b.re * a.im)
        .sum();
    if area.abs() < 1e-300 {
        return Err(Error::InvalidSet("polygon vertices are collinear".into()));
    }
    let n = vertices.len();
    for i in 0..n {
        for j in i + 1..n {
            // Skip adjacent edges (they share a vertex).
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
            let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
            if segments_properly_intersect(a1, a2, b1, b2) {
                return Err(Error::InvalidSet(
                    "polygon chain is self-intersecting".into(),
                ));
            }
        }
    }
    Ok(())
}

// --- JSON wire format -----------------------------------------------------
//
// {"kind": "disk"|"segment"|"polygon"|"arc"|"points"|"curve", ...fields,
//  "boundary_samples": int}. Complex numbers are [re, im] pairs and numeric
// fields may be given as floats or decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FlexNum {
    Num(f64),
    Str(String),
}

impl FlexNum {
    fn value(&self) -> std::result::Result<f64, String> {
        match self {
            FlexNum::Num(x) => Ok(*x),
            FlexNum::Str(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {s:?}: {e}")),
        }
    }
}

type FlexComplex = [FlexNum; 2];

fn flex_complex(c: &FlexComplex) -> std::result::Result<Complex64, String> {
    Ok(Complex64::new(c[0].value()?, c[1].value()?))
}

fn to_flex(z: Complex64) -> FlexComplex {
    [FlexNum::Num(z.re), FlexNum::Num(z.im)]
}

#[derive(Serialize, Deserialize)]
struct SetSpecWire {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    center: Option<FlexComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radius: Option<FlexNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<FlexComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<FlexComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<FlexComplex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle0: Option<FlexNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle1: Option<FlexNum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<FlexComplex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    closed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nodes: Option<Vec<FlexComplex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    boundary_samples: Option<usize>,
}

impl Serialize for SetSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut wire = SetSpecWire {
            kind: String::new(),
            center: None,
            radius: None,
            a: None,
            b: None,
            vertices: None,
            angle0: None,
            angle1: None,
            points: None,
            closed: None,
            nodes: None,
            boundary_samples: Some(self.boundary_samples),
        };
        match &self.kind {
            SetKind::Disk { center, radius } => {
                wire.kind = "disk".into();
                wire.center = Some(to_flex(*center));
                wire.radius = Some(FlexNum::Num(*radius));
            }
            SetKind::Segment { a, b } => {
                wire.kind = "segment".into();
                wire.a = Some(to_flex(*a));
                wire.b = Some(to_flex(*b));
            }
            SetKind::Polygon { vertices } => {
                wire.kind = "polygon".into();
                wire.vertices = Some(vertices.iter().map(|v| to_flex(*v)).collect());
            }
            SetKind::CircularArc {
                center,
                radius,
                angle0,
                angle1,
            } => {
                wire.kind = "arc".into();
                wire.center = Some(to_flex(*center));
                wire.radius = Some(FlexNum::Num(*radius));
                wire.angle0 = Some(FlexNum::Num(*angle0));
                wire.angle1 = Some(FlexNum::Num(*angle1));
            }
            SetKind::FinitePoints { points } => {
                wire.kind = "points".into();
                wire.points = Some(points.iter().map(|p| to_flex(*p)).collect());
            }
            SetKind::DiscretizedCurve { closed, nodes } => {
                wire.kind = "curve".into();
                wire.closed = Some(*closed);
                wire.nodes = Some(nodes.iter().map(|p| to_flex(*p)).collect());
            }
        }
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SetSpecWire::deserialize(deserializer)?;
        let err = |m: String| D::Error::custom(m);
        let kind = match wire.kind.as_str() {
            "disk" => SetKind::Disk {
                center: flex_complex(
                    wire.center
                        .as_ref()
                        .ok_or_else(|| err("disk needs `center`".into()))?,
                )
                .map_err(err)?,
                radius: wire
                    .radius
                    .as_ref()
                    .ok_or_else(|| err("disk needs `radius`".into()))?
                    .value()
                    .map_err(err)?,
            },
            "segment" => SetKind::Segment {
                a: flex_complex(
                    wire.a
                        .as_ref()
                        .ok_or_else(|| err("segment needs `a`".into()))?,
                )
                .map_err(err)?,
                b: flex_complex(
                    wire.b
                        .as_ref()
                        .ok_or_else(|| err("segment needs `b`".into()))?,
                )
                .map_err(err)?,
            },
            "polygon" => SetKind::Polygon {
                vertices: wire
                    .vertices
                    .as_ref()
                    .ok_or_else(|| err("polygon needs `vertices`".into()))?
                    .iter()
                    .map(flex_complex)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(err)?,
            },
            "arc" => SetKind::CircularArc {
                center: flex_complex(
                    wire.center
                        .as_ref()
                        .ok_or_else(|| err("arc needs `center`".into()))?,
                )
                .map_err(err)?,
                radius: wire
                    .radius
                    .as_ref()
                    .ok_or_else(|| err("arc needs `radius`".into()))?
                    .value()
                    .map_err(err)?,
                angle0: wire
                    .angle0
                    .as_ref()
                    .ok_or_else(|| err("arc needs `angle0`".into()))?
                    .value()
                    .map_err(err)?,
                angle1: wire
                    .angle1
                    .as_ref()
                    .ok_or_else(|| err("arc needs `angle1`".into()))?
                    .value()
                    .map_err(err)?,
            },
            "points" => SetKind::FinitePoints {
                points: wire
                    .points
                    .as_ref()
                    .ok_or_else(|| err("points needs `points`".into()))?
                    .iter()
                    .map(flex_complex)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(err)?,
            },
            "curve" => SetKind::DiscretizedCurve {
                closed: wire.closed.unwrap_or(true),
                nodes: wire
                    .nodes
                    .as_ref()
                    .ok_or_else(|| err("curve needs `nodes`".into()))?
                    .iter()
                    .map(flex_complex)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(err)?,
            },
            other => return Err(err(format!("unknown set kind {other:?}"))),
        };
        Ok(SetSpec {
            kind,
            boundary_samples: wire.boundary_samples.unwrap_or(DEFAULT_BOUNDARY_SAMPLES),
        })
    }
}
