//! Integer-distance geometry on the plane lattice: Diophantine figures,
//! closed-path parity, the four-type triangle taxonomy from the enveloping
//! rectangle, construction of type-4 instances, triangle completion along a
//! rational line, extension search, and cathetus fans.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::perfect_sqrt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Squared Euclidean distance, exact.
pub fn dist2(p: LatticePoint, q: LatticePoint) -> i128 {
    let dx = (p.x - q.x) as i128;
    let dy = (p.y - q.y) as i128;
    dx * dx + dy * dy
}

/// The distance when it is an integer.
pub fn int_dist(p: LatticePoint, q: LatticePoint) -> Option<i64> {
    perfect_sqrt(dist2(p, q)).map(|d| d as i64)
}

/// An ordered list of at least two distinct lattice points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Figure {
    vertices: Vec<LatticePoint>,
}

/// Outcome of the all-pairs integrality check; `violation` names the first
/// offending pair in vertex order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiophantineCheck {
    pub diophantine: bool,
    pub violation: Option<(LatticePoint, LatticePoint)>,
}

/// The enveloping-rectangle class of a triangle. Types 1 to 4 are the
/// provable cases (three box corners; two corners on a common side; two
/// diagonal corners; one corner). `Anomalous` is reserved for any signature
/// outside those, such as a vertex strictly inside the box, and is counted
/// rather than hidden by scans.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleType {
    Type1,
    Type2,
    Type3,
    Type4,
    Anomalous,
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleType::Type1 => "type1",
            TriangleType::Type2 => "type2",
            TriangleType::Type3 => "type3",
            TriangleType::Type4 => "type4",
            TriangleType::Anomalous => "anomalous",
        })
    }
}

/// An axis-aligned right triangle filling the space between one triangle
/// side and the enveloping rectangle. `vertices` lists the two side
/// endpoints with the right-angle corner between them; `legs` are the
/// absolute coordinate differences and `hypotenuse` the side length, so each
/// complement is itself a Pythagorean triangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Complement {
    pub legs: (i64, i64),
    pub hypotenuse: i64,
    pub vertices: [LatticePoint; 3],
}

/// Classification result: the type, one complement per non-axis-aligned
/// side (in side order AB, BC, CA), and whether the triangle happens to be
/// right-angled regardless of orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleClass {
    pub class: TriangleType,
    pub complements: Vec<Complement>,
    pub right_angled: bool,
}

/// The rational line `2*b1*x + 2*b2*y = b^2 + c^2 - a^2` carrying every
/// completion candidate, in parametric form when solvable in integers. The
/// direction is perpendicular to the segment from the origin to `B`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CompletionLine {
    pub solvable: bool,
    pub base: Option<LatticePoint>,
    pub direction: Option<(i64, i64)>,
}

/// A type-4 triangle produced from the parameter quadruple, with side
/// lengths in vertex order (AB, BC, CA).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Type4Triangle {
    pub vertices: [LatticePoint; 3],
    pub sides: [i64; 3],
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FigureError {
    TooFewVertices,
    DuplicateVertex(LatticePoint),
    Json(String),
    PathNotClosed,
    PathIndexOutOfRange(usize),
    PathConsecutiveRepeat(usize),
    NotDiophantine(LatticePoint, LatticePoint),
    NonIntegerSide(LatticePoint, LatticePoint),
    CollinearVertices,
    DegenerateParameters,
    NonPositiveLength,
    HypotenuseMismatch { b: LatticePoint, c: i64 },
    CoordinateOverflow,
}

impl fmt::Display for FigureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigureError::TooFewVertices => write!(f, "a figure needs at least two vertices"),
            FigureError::DuplicateVertex(p) => write!(f, "duplicate vertex {p}"),
            FigureError::Json(msg) => write!(f, "invalid figure JSON: {msg}"),
            FigureError::PathNotClosed => write!(f, "path must start and end at the same vertex"),
            FigureError::PathIndexOutOfRange(i) => write!(f, "path index {i} out of range"),
            FigureError::PathConsecutiveRepeat(i) => {
                write!(f, "path repeats vertex index {i} consecutively")
            }
            FigureError::NotDiophantine(p, q) => {
                write!(f, "figure is not Diophantine: |{p} {q}| is irrational")
            }
            FigureError::NonIntegerSide(p, q) => {
                write!(f, "side |{p} {q}| is not an integer")
            }
            FigureError::CollinearVertices => write!(f, "vertices are collinear"),
            FigureError::DegenerateParameters => {
                write!(f, "parameters do not yield three positive legs")
            }
            FigureError::NonPositiveLength => write!(f, "side lengths must be positive"),
            FigureError::HypotenuseMismatch { b, c } => {
                write!(f, "c^2 = {} does not equal |{b}|^2", (*c as i128) * (*c as i128))
            }
            FigureError::CoordinateOverflow => write!(f, "coordinates exceed the 64-bit range"),
        }
    }
}

impl std::error::Error for FigureError {}

#[derive(Serialize, Deserialize)]
struct FigureRepr {
    vertices: Vec<(i64, i64)>,
}

impl Figure {
    /// Builds a figure, rejecting duplicate vertices and fewer than two.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self, FigureError> {
        if vertices.len() < 2 {
            return Err(FigureError::TooFewVertices);
        }
        let mut seen = HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(FigureError::DuplicateVertex(v));
            }
        }
        Ok(Figure { vertices })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Corners of the axis-aligned bounding box: (min, max).
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// All-pairs integer-distance check with the first violating pair.
    pub fn is_diophantine(&self) -> DiophantineCheck {
        for (i, &p) in self.vertices.iter().enumerate() {
            for &q in &self.vertices[i + 1..] {
                if int_dist(p, q).is_none() {
                    return DiophantineCheck {
                        diophantine: false,
                        violation: Some((p, q)),
                    };
                }
            }
        }
        DiophantineCheck {
            diophantine: true,
            violation: None,
        }
    }

    /// Sum of segment lengths along a cycle of vertex indices (first equals
    /// last, consecutive entries distinct). The figure must be Diophantine;
    /// the result is then always even.
    pub fn closed_path_length(&self, path: &[usize]) -> Result<i64, FigureError> {
        if path.len() < 2 {
            return Err(FigureError::PathNotClosed);
        }
        for &i in path {
            if i >= self.vertices.len() {
                return Err(FigureError::PathIndexOutOfRange(i));
            }
        }
        if path.first() != path.last() {
            return Err(FigureError::PathNotClosed);
        }
        for w in path.windows(2) {
            if w[0] == w[1] {
                return Err(FigureError::PathConsecutiveRepeat(w[0]));
            }
        }
        let check = self.is_diophantine();
        if let Some((p, q)) = check.violation {
            return Err(FigureError::NotDiophantine(p, q));
        }
        let mut total = 0i64;
        for w in path.windows(2) {
            total += int_dist(self.vertices[w[0]], self.vertices[w[1]])
                .expect("figure verified Diophantine");
        }
        Ok(total)
    }

    /// Serializes as `{"vertices": [[x, y], ...]}` preserving vertex order.
    pub fn to_json(&self) -> String {
        let repr = FigureRepr {
            vertices: self.vertices.iter().map(|p| (p.x, p.y)).collect(),
        };
        serde_json::to_string(&repr).expect("plain data serializes")
    }

    /// Parses the JSON form, rejecting non-integers, duplicates, and
    /// fewer than two vertices.
    pub fn from_json(s: &str) -> Result<Self, FigureError> {
        let repr: FigureRepr =
            serde_json::from_str(s).map_err(|e| FigureError::Json(e.to_string()))?;
        Figure::new(
            repr.vertices
                .into_iter()
                .map(|(x, y)| LatticePoint::new(x, y))
                .collect(),
        )
    }
}

fn sub(p: LatticePoint, q: LatticePoint) -> (i128, i128) {
    ((p.x - q.x) as i128, (p.y - q.y) as i128)
}

fn cross(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

fn dot(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.0 + u.1 * v.1
}

/// Classifies the triangle `A, B, C` by the positions of its vertices on the
/// enveloping rectangle and returns the complements tiling the rest of the
/// box.
pub fn classify_triangle(
    a: LatticePoint,
    b: LatticePoint,
    c: LatticePoint,
) -> Result<TriangleClass, FigureError> {
    let sides = [(a, b, c), (b, c, a), (c, a, b)];
    for &(p, q, _) in &sides {
        if int_dist(p, q).is_none() {
            return Err(FigureError::NonIntegerSide(p, q));
        }
    }
    if cross(sub(b, a), sub(c, a)) == 0 {
        return Err(FigureError::CollinearVertices);
    }

    let pts = [a, b, c];
    let min_x = pts.iter().map(|p| p.x).min().unwrap();
    let max_x = pts.iter().map(|p| p.x).max().unwrap();
    let min_y = pts.iter().map(|p| p.y).min().unwrap();
    let max_y = pts.iter().map(|p| p.y).max().unwrap();

    let mut corners: Vec<LatticePoint> = Vec::new();
    let mut edge_count = 0usize;
    for &p in &pts {
        let xe = p.x == min_x || p.x == max_x;
        let ye = p.y == min_y || p.y == max_y;
        match (xe, ye) {
            (true, true) => corners.push(p),
            (false, false) => {}
            _ => edge_count += 1,
        }
    }
    let class = match (corners.len(), edge_count) {
        (3, 0) => TriangleType::Type1,
        (2, 1) => {
            if corners[0].x == corners[1].x || corners[0].y == corners[1].y {
                TriangleType::Type2
            } else {
                TriangleType::Type3
            }
        }
        (1, 2) => TriangleType::Type4,
        _ => TriangleType::Anomalous,
    };

    let mut complements = Vec::new();
    for &(p, q, t) in &sides {
        if p.x == q.x || p.y == q.y {
            continue;
        }
        // of the two box corners cut off by this side, the complement corner
        // is the one on the opposite side of the line from the third vertex
        let third_sign = cross(sub(q, p), sub(t, p)).signum();
        let r1 = LatticePoint::new(p.x, q.y);
        let r = if cross(sub(q, p), sub(r1, p)).signum() == -third_sign {
            r1
        } else {
            LatticePoint::new(q.x, p.y)
        };
        complements.push(Complement {
            legs: ((p.x - q.x).abs(), (p.y - q.y).abs()),
            hypotenuse: int_dist(p, q).expect("checked above"),
            vertices: [p, r, q],
        });
    }

    let right_angled = dot(sub(b, a), sub(c, a)) == 0
        || dot(sub(a, b), sub(c, b)) == 0
        || dot(sub(a, c), sub(b, c)) == 0;

    Ok(TriangleClass {
        class,
        complements,
        right_angled,
    })
}

/// Builds a type-4 triangle from four integers via the two-squares
/// substitution `x+iy = (a+ib)^2 + (c+id)^2`. Vertices are `(0,0)`,
/// `(u^2-v^2, 2uv)`, `(x^2-y^2, 2xy)`; sides come out as `u^2+v^2`,
/// `p^2+q^2`, `x^2+y^2`.
pub fn type4_construct(a: i64, b: i64, c: i64, d: i64) -> Result<Type4Triangle, FigureError> {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    let x = a * a - b * b + c * c - d * d;
    let y = 2 * (a * b + c * d);
    let u = a * a - b * b - c * c + d * d;
    let v = 2 * (a * b - c * d);
    let p = 2 * (a * d + b * c);
    let q = 2 * (a * c - b * d);
    if !(x > y && y > 0 && u > v && v > 0 && p > q && q > 0) {
        return Err(FigureError::DegenerateParameters);
    }
    let point = |px: i128, py: i128| -> Result<LatticePoint, FigureError> {
        Ok(LatticePoint::new(
            i64::try_from(px).map_err(|_| FigureError::CoordinateOverflow)?,
            i64::try_from(py).map_err(|_| FigureError::CoordinateOverflow)?,
        ))
    };
    let va = LatticePoint::new(0, 0);
    let vb = point(u * u - v * v, 2 * u * v)?;
    let vc = point(x * x - y * y, 2 * x * y)?;
    let side = |s: i128| i64::try_from(s).map_err(|_| FigureError::CoordinateOverflow);
    let sides = [side(u * u + v * v)?, side(p * p + q * q)?, side(x * x + y * y)?];
    debug_assert_eq!(int_dist(va, vb), Some(sides[0]));
    debug_assert_eq!(int_dist(vb, vc), Some(sides[1]));
    debug_assert_eq!(int_dist(vc, va), Some(sides[2]));
    Ok(Type4Triangle {
        vertices: [va, vb, vc],
        sides,
    })
}

/// The line that must carry the third vertex `X` of a triangle with
/// `|AX| = b`, `|BX| = a`, `A` at the origin, `B` given with `|AB| = c`.
/// Solvable in integers iff `gcd(2*b1, 2*b2)` divides `b^2 + c^2 - a^2`.
pub fn completion_line(
    b_vertex: LatticePoint,
    a: i64,
    b: i64,
    c: i64,
) -> Result<CompletionLine, FigureError> {
    if a <= 0 || b <= 0 || c <= 0 {
        return Err(FigureError::NonPositiveLength);
    }
    let (b1, b2) = (b_vertex.x as i128, b_vertex.y as i128);
    let (a, b, c) = (a as i128, b as i128, c as i128);
    if c * c != b1 * b1 + b2 * b2 {
        return Err(FigureError::HypotenuseMismatch {
            b: b_vertex,
            c: c as i64,
        });
    }
    let rhs = b * b + c * c - a * a;
    let eg = (2 * b1).extended_gcd(&(2 * b2));
    if rhs % eg.gcd != 0 {
        return Ok(CompletionLine {
            solvable: false,
            base: None,
            direction: None,
        });
    }
    let scale = rhs / eg.gcd;
    let mut base = (eg.x * scale, eg.y * scale);
    let g = num_integer::gcd(b1, b2);
    let dir = (b2 / g, -b1 / g);
    // slide the base point to the lattice solution nearest the origin;
    // keeps reported coordinates small and deterministic
    let t = nearest_int(-(base.0 * dir.0 + base.1 * dir.1), dir.0 * dir.0 + dir.1 * dir.1);
    base = (base.0 + t * dir.0, base.1 + t * dir.1);
    let narrow = |v: i128| i64::try_from(v).map_err(|_| FigureError::CoordinateOverflow);
    Ok(CompletionLine {
        solvable: true,
        base: Some(LatticePoint::new(narrow(base.0)?, narrow(base.1)?)),
        direction: Some((narrow(dir.0)?, narrow(dir.1)?)),
    })
}

/// Nearest integer to `a / n` for `n > 0`, ties toward `+inf`.
fn nearest_int(a: i128, n: i128) -> i128 {
    (2 * a + n).div_euclid(2 * n)
}

/// All integer points `X` completing the triangle: on the completion line
/// with `|AX| = b` exactly (`|BX| = a` then follows). Unsolvable lines give
/// an empty list. Sorted by `(x, y)`.
pub fn complete_triangle(
    b_vertex: LatticePoint,
    a: i64,
    b: i64,
    c: i64,
) -> Result<Vec<LatticePoint>, FigureError> {
    let line = completion_line(b_vertex, a, b, c)?;
    if !line.solvable {
        return Ok(Vec::new());
    }
    let base = line.base.expect("solvable line has a base");
    let dir = line.direction.expect("solvable line has a direction");
    let (px, py) = (base.x as i128, base.y as i128);
    let (dx, dy) = (dir.0 as i128, dir.1 as i128);
    let b128 = b as i128;

    // |base + t*dir|^2 = b^2 as a quadratic in t
    let qa = dx * dx + dy * dy;
    let qb = 2 * (px * dx + py * dy);
    let qc = px * px + py * py - b128 * b128;
    let disc = qb * qb - 4 * qa * qc;
    if disc < 0 {
        return Ok(Vec::new());
    }
    let Some(s) = perfect_sqrt(disc) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for num in [-qb + s, -qb - s] {
        if num % (2 * qa) != 0 {
            continue;
        }
        let t = num / (2 * qa);
        let x = LatticePoint::new(
            i64::try_from(px + t * dx).map_err(|_| FigureError::CoordinateOverflow)?,
            i64::try_from(py + t * dy).map_err(|_| FigureError::CoordinateOverflow)?,
        );
        debug_assert_eq!(dist2(LatticePoint::new(0, 0), x), b128 * b128);
        debug_assert_eq!(dist2(b_vertex, x), (a as i128) * (a as i128));
        out.push(x);
    }
    out.sort_unstable_by_key(|p| (p.x, p.y));
    out.dedup();
    Ok(out)
}

/// Every lattice point within Chebyshev distance `radius` of the figure's
/// bounding box that has integer distance to all vertices and is not itself
/// a vertex. Scanned and returned in `(y, x)` order. An empty result means
/// only "no extension within this radius".
pub fn erdos_extend(f: &Figure, radius: i64) -> Vec<LatticePoint> {
    assert!(radius >= 1, "radius must be positive");
    let (lo, hi) = f.bounding_box();
    let taken: HashSet<LatticePoint> = f.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for y in (lo.y - radius)..=(hi.y + radius) {
        for x in (lo.x - radius)..=(hi.x + radius) {
            let p = LatticePoint::new(x, y);
            if taken.contains(&p) {
                continue;
            }
            if f.vertices().iter().all(|&v| int_dist(p, v).is_some()) {
                out.push(p);
            }
        }
    }
    out
}

/// The fan over cathetus `n`: vertices `(0,0)` and `(0,n)` plus `(x, 0)` for
/// every leg `x` with `x^2 + n^2` a perfect square, ascending. Always
/// Diophantine; the number of fan triangles equals the leg count of `n`.
pub fn cathetus_fan(n: i64) -> Figure {
    assert!((1..=1 << 31).contains(&n), "cathetus out of range");
    let mut vertices = vec![LatticePoint::new(0, 0), LatticePoint::new(0, n)];
    let n2 = (n as i128) * (n as i128);
    for d in (1..n as i128).rev() {
        if n2 % d == 0 {
            let e = n2 / d;
            if (e - d) % 2 == 0 {
                vertices.push(LatticePoint::new(((e - d) / 2) as i64, 0));
            }
        }
    }
    Figure::new(vertices).expect("fan vertices are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn fig(pts: &[(i64, i64)]) -> Figure {
        Figure::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn diophantine_examples() {
        assert!(fig(&[(0, 0), (3, 0), (0, 4)]).is_diophantine().diophantine);

        let check = fig(&[(0, 0), (1, 1)]).is_diophantine();
        assert!(!check.diophantine);
        assert_eq!(check.violation, Some((pt(0, 0), pt(1, 1))));

        let fan = fig(&[(0, 0), (0, 12), (5, 0), (9, 0), (16, 0), (35, 0)]);
        assert!(fan.is_diophantine().diophantine);
    }

    #[test]
    fn figure_construction_rejects() {
        assert_eq!(
            Figure::new(vec![pt(0, 0)]),
            Err(FigureError::TooFewVertices)
        );
        assert_eq!(
            Figure::new(vec![pt(0, 0), pt(1, 2), pt(0, 0)]),
            Err(FigureError::DuplicateVertex(pt(0, 0)))
        );
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let f = fig(&[(0, 0), (3, 0), (0, 4)]);
        let s = f.to_json();
        assert_eq!(s, r#"{"vertices":[[0,0],[3,0],[0,4]]}"#);
        assert_eq!(Figure::from_json(&s), Ok(f));

        assert!(matches!(
            Figure::from_json(r#"{"vertices":[[0,0],[1.5,2]]}"#),
            Err(FigureError::Json(_))
        ));
        assert_eq!(
            Figure::from_json(r#"{"vertices":[[0,0],[0,0]]}"#),
            Err(FigureError::DuplicateVertex(pt(0, 0)))
        );
        assert_eq!(
            Figure::from_json(r#"{"vertices":[[4,4]]}"#),
            Err(FigureError::TooFewVertices)
        );
    }

    #[test]
    fn path_lengths() {
        let tri = fig(&[(0, 0), (3, 0), (0, 4)]);
        assert_eq!(tri.closed_path_length(&[0, 1, 2, 0]), Ok(12));
        assert_eq!(tri.closed_path_length(&[0, 1, 0]), Ok(6));

        let fan = cathetus_fan(12);
        assert_eq!(fan.closed_path_length(&[0, 1, 2, 0]), Ok(30));

        assert_eq!(
            tri.closed_path_length(&[0, 1, 2]),
            Err(FigureError::PathNotClosed)
        );
        assert_eq!(
            tri.closed_path_length(&[0]),
            Err(FigureError::PathNotClosed)
        );
        assert_eq!(
            tri.closed_path_length(&[0, 5, 0]),
            Err(FigureError::PathIndexOutOfRange(5))
        );
        assert_eq!(
            tri.closed_path_length(&[0, 1, 1, 0]),
            Err(FigureError::PathConsecutiveRepeat(1))
        );
        let bad = fig(&[(0, 0), (1, 1), (2, 0)]);
        assert_eq!(
            bad.closed_path_length(&[0, 2, 0]),
            Err(FigureError::NotDiophantine(pt(0, 0), pt(1, 1)))
        );
    }

    #[test]
    fn classify_type1() {
        let t = classify_triangle(pt(0, 0), pt(4, 0), pt(4, 3)).unwrap();
        assert_eq!(t.class, TriangleType::Type1);
        assert!(t.right_angled);
        assert_eq!(t.complements.len(), 1);
        assert_eq!(t.complements[0].legs, (4, 3));
        assert_eq!(t.complements[0].hypotenuse, 5);
    }

    #[test]
    fn classify_type2() {
        let t = classify_triangle(pt(0, 0), pt(14, 0), pt(5, 12)).unwrap();
        assert_eq!(t.class, TriangleType::Type2);
        assert!(!t.right_angled);
        let mut hyps: Vec<i64> = t.complements.iter().map(|c| c.hypotenuse).collect();
        hyps.sort_unstable();
        assert_eq!(hyps, vec![13, 15]);
    }

    #[test]
    fn classify_type3() {
        let t = classify_triangle(pt(0, 0), pt(20, 21), pt(20, 15)).unwrap();
        assert_eq!(t.class, TriangleType::Type3);
        let mut hyps: Vec<i64> = t.complements.iter().map(|c| c.hypotenuse).collect();
        hyps.sort_unstable();
        assert_eq!(hyps, vec![25, 29]);
    }

    #[test]
    fn classify_constructed_type4_triangle() {
        let t = classify_triangle(pt(0, 0), pt(189, 180), pt(125, 300)).unwrap();
        assert_eq!(t.class, TriangleType::Type4);
        assert!(!t.right_angled);
        let legs: Vec<(i64, i64)> = t.complements.iter().map(|c| c.legs).collect();
        assert_eq!(legs, vec![(189, 180), (64, 120), (125, 300)]);
        let hyps: Vec<i64> = t.complements.iter().map(|c| c.hypotenuse).collect();
        assert_eq!(hyps, vec![261, 136, 325]);
    }

    #[test]
    fn classify_tilted_right_triangle() {
        let t = classify_triangle(pt(0, 0), pt(12, 9), pt(-12, 16)).unwrap();
        assert_eq!(t.class, TriangleType::Type4);
        assert!(t.right_angled);
    }

    #[test]
    fn classify_rejects() {
        assert_eq!(
            classify_triangle(pt(0, 0), pt(1, 1), pt(5, 0)),
            Err(FigureError::NonIntegerSide(pt(0, 0), pt(1, 1)))
        );
        assert_eq!(
            classify_triangle(pt(0, 0), pt(3, 0), pt(7, 0)),
            Err(FigureError::CollinearVertices)
        );
        assert_eq!(
            classify_triangle(pt(0, 0), pt(3, 0), pt(3, 0)),
            Err(FigureError::CollinearVertices)
        );
    }

    #[test]
    fn complement_tiling() {
        let cases = [
            [(0, 0), (4, 0), (4, 3)],
            [(0, 0), (14, 0), (5, 12)],
            [(0, 0), (20, 21), (20, 15)],
            [(0, 0), (189, 180), (125, 300)],
            [(0, 0), (12, 9), (-12, 16)],
        ];
        for case in cases {
            let [a, b, c] = case.map(|(x, y)| pt(x, y));
            let t = classify_triangle(a, b, c).unwrap();
            let xs = [a.x, b.x, c.x];
            let ys = [a.y, b.y, c.y];
            let w = (xs.iter().max().unwrap() - xs.iter().min().unwrap()) as i128;
            let h = (ys.iter().max().unwrap() - ys.iter().min().unwrap()) as i128;
            let tri2 = cross(sub(b, a), sub(c, a)).abs();
            let comp2: i128 = t
                .complements
                .iter()
                .map(|c| (c.legs.0 as i128) * (c.legs.1 as i128))
                .sum();
            assert_eq!(2 * w * h, tri2 + comp2, "{a} {b} {c}");
            for comp in &t.complements {
                let (l1, l2) = comp.legs;
                let hyp = comp.hypotenuse;
                assert_eq!(
                    (l1 as i128) * (l1 as i128) + (l2 as i128) * (l2 as i128),
                    (hyp as i128) * (hyp as i128)
                );
            }
        }
    }

    #[test]
    fn type4_construct_examples() {
        let t = type4_construct(4, 1, 1, 1).unwrap();
        assert_eq!(t.sides, [261, 136, 325]);
        assert_eq!(t.vertices, [pt(0, 0), pt(189, 180), pt(125, 300)]);
        let c = classify_triangle(t.vertices[0], t.vertices[1], t.vertices[2]).unwrap();
        assert_eq!(c.class, TriangleType::Type4);

        let t = type4_construct(5, 1, 1, 1).unwrap();
        assert_eq!(t.sides, [640, 208, 720]);
        assert_eq!(t.vertices, [pt(0, 0), pt(512, 384), pt(432, 576)]);

        let t = type4_construct(6, 1, 1, 1).unwrap();
        assert_eq!(t.sides, [1325, 296, 1421]);

        assert_eq!(
            type4_construct(1, 1, 1, 1),
            Err(FigureError::DegenerateParameters)
        );
        assert_eq!(
            type4_construct(0, 0, 0, 0),
            Err(FigureError::DegenerateParameters)
        );
    }

    #[test]
    fn completion_line_examples() {
        let line = completion_line(pt(0, 3), 5, 4, 3).unwrap();
        assert!(line.solvable);
        assert_eq!(line.base, Some(pt(0, 0)));
        assert_eq!(line.direction, Some((1, 0)));

        let line = completion_line(pt(3, 4), 8, 5, 5).unwrap();
        assert!(line.solvable);
        let base = line.base.unwrap();
        let dir = line.direction.unwrap();
        assert_eq!(3 * base.x + 4 * base.y, -7);
        assert_eq!(dir, (4, -3));
        // (3, -4) lies on the line
        assert_eq!(3 * 3 + 4 * (-4), -7);

        let line = completion_line(pt(0, 3), 3, 1, 3).unwrap();
        assert!(!line.solvable);
        assert_eq!(line.base, None);

        assert_eq!(
            completion_line(pt(0, 3), 5, 4, 7),
            Err(FigureError::HypotenuseMismatch { b: pt(0, 3), c: 7 })
        );
        assert_eq!(
            completion_line(pt(0, 3), 0, 4, 3),
            Err(FigureError::NonPositiveLength)
        );
    }

    #[test]
    fn completion_direction_is_perpendicular() {
        for (bx, by, a, b, c) in [(0i64, 3i64, 5i64, 4i64, 3i64), (3, 4, 8, 5, 5), (5, 12, 15, 14, 13)] {
            let line = completion_line(pt(bx, by), a, b, c).unwrap();
            if let Some(dir) = line.direction {
                assert_eq!(bx * dir.0 + by * dir.1, 0);
                let base = line.base.unwrap();
                assert_eq!(
                    2 * bx as i128 * base.x as i128 + 2 * by as i128 * base.y as i128,
                    (b as i128).pow(2) + (c as i128).pow(2) - (a as i128).pow(2)
                );
            }
        }
    }

    #[test]
    fn complete_triangle_examples() {
        assert_eq!(
            complete_triangle(pt(0, 3), 5, 4, 3),
            Ok(vec![pt(-4, 0), pt(4, 0)])
        );
        assert_eq!(complete_triangle(pt(3, 4), 8, 5, 5), Ok(vec![pt(3, -4)]));
        assert_eq!(complete_triangle(pt(0, 3), 3, 1, 3), Ok(vec![]));
    }

    #[test]
    fn completion_points_check_out() {
        let origin = pt(0, 0);
        for (bv, a, b, c) in [
            (pt(0, 3), 5i64, 4i64, 3i64),
            (pt(3, 4), 8, 5, 5),
            (pt(0, 5), 13, 12, 5),
            (pt(4, 3), 13, 12, 5),
        ] {
            for x in complete_triangle(bv, a, b, c).unwrap() {
                assert_eq!(int_dist(origin, x), Some(b), "B={bv} a={a} b={b} c={c}");
                assert_eq!(int_dist(bv, x), Some(a), "B={bv} a={a} b={b} c={c}");
            }
        }
    }

    #[test]
    fn even_rhs_is_not_required_for_solvability() {
        // b^2 + c^2 odd here, yet the completion exists
        let pts = complete_triangle(pt(0, 3), 5, 4, 3).unwrap();
        assert!(pts.contains(&pt(4, 0)));
    }

    #[test]
    fn extension_examples() {
        let tri = fig(&[(0, 0), (3, 0), (0, 4)]);
        let ext = erdos_extend(&tri, 10);
        assert!(ext.contains(&pt(-3, 0)));
        assert!(ext.contains(&pt(0, -4)));
        for p in &ext {
            for &v in tri.vertices() {
                assert!(int_dist(*p, v).is_some());
            }
        }
        // returned in scan order: y ascending, then x
        let mut sorted = ext.clone();
        sorted.sort_unstable_by_key(|p| (p.y, p.x));
        assert_eq!(ext, sorted);

        let seg = fig(&[(0, 0), (3, 0)]);
        let ext = erdos_extend(&seg, 2);
        assert!(ext.contains(&pt(-1, 0)));
        assert!(ext.contains(&pt(4, 0)));
    }

    #[test]
    fn fan_examples() {
        let f = cathetus_fan(12);
        let expected: Vec<LatticePoint> = [(0, 0), (0, 12), (5, 0), (9, 0), (16, 0), (35, 0)]
            .iter()
            .map(|&(x, y)| pt(x, y))
            .collect();
        assert_eq!(f.vertices(), expected.as_slice());
        assert!(f.is_diophantine().diophantine);

        let f = cathetus_fan(3);
        assert_eq!(f.vertices(), [pt(0, 0), pt(0, 3), pt(4, 0)]);

        let f = cathetus_fan(1);
        assert_eq!(f.vertices(), [pt(0, 0), pt(0, 1)]);
    }

    #[test]
    fn fan_count_matches_leg_count() {
        for n in 1..=60 {
            let f = cathetus_fan(n);
            assert!(f.is_diophantine().diophantine, "n = {n}");
            assert_eq!(
                f.vertices().len() as u64,
                crate::census::kappa_bruteforce(n as u64) + 2,
                "n = {n}"
            );
        }
    }
}
