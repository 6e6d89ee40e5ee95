//! Newton polyhedra in three variables.
//!
//! `Gamma_+` is the convex hull of `supp + R^3_{>=0}`. Its 2-faces are found
//! by testing candidate normals: cross products of differences of support
//! points and coordinate directions, normalised to primitive non-negative
//! vectors. A candidate is a face normal when its minimising set, together
//! with the recession directions orthogonal to it, spans a plane.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::gcd_i64;

pub type P3 = [i64; 3];

pub fn dot(a: &P3, b: &P3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn sub(a: &P3, b: &P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn primitive(v: &P3) -> P3 {
    let g = gcd_i64(gcd_i64(v[0], v[1]), v[2]);
    if g == 0 {
        return *v;
    }
    [v[0] / g, v[1] / g, v[2] / g]
}

/// Lattice length of the segment `[a, b]`.
pub fn lattice_length(a: &P3, b: &P3) -> i64 {
    let d = sub(b, a);
    gcd_i64(gcd_i64(d[0], d[1]), d[2])
}

/// gcd of the 2-minors of the matrix with rows `a` and `b`.
pub fn minor_gcd(a: &P3, b: &P3) -> i64 {
    let c = cross(a, b);
    gcd_i64(gcd_i64(c[0], c[1]), c[2])
}

const AXES: [P3; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// Finite set of exponents in `Z^3_{>=0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Support {
    points: Vec<P3>,
}

impl Support {
    pub fn new(points: Vec<P3>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("empty support".into()));
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.iter().any(|&c| c < 0) {
                return Err(Error::InvalidArgument(format!("negative exponent in {p:?}")));
            }
            if !seen.insert(*p) {
                return Err(Error::InvalidArgument(format!("duplicate point {p:?}")));
            }
        }
        Ok(Support { points })
    }

    /// Parses `p <a> <b> <c>` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        let mut seen = HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] != "p" || fields.len() != 4 {
                return Err(Error::parse(lineno, "expected `p <a> <b> <c>`"));
            }
            let mut p = [0i64; 3];
            for k in 0..3 {
                p[k] = fields[k + 1]
                    .parse::<u32>()
                    .map_err(|_| Error::parse(lineno, format!("bad exponent {}", fields[k + 1])))?
                    as i64;
            }
            if !seen.insert(p) {
                return Err(Error::parse(lineno, "duplicate point"));
            }
            points.push(p);
        }
        if points.is_empty() {
            return Err(Error::parse(0, "empty support"));
        }
        Ok(Support { points })
    }

    pub fn points(&self) -> &[P3] {
        &self.points
    }

    pub fn to_text(&self) -> String {
        self.points
            .iter()
            .map(|p| format!("p {} {} {}\n", p[0], p[1], p[2]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceKind {
    Triangle,
    Trapezoid,
    /// A compact face with more than four vertices.
    Polygon,
    NonCompact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub normal: P3,
    pub level: i64,
    /// Vertices of the face; in cyclic order when the face is compact.
    pub vertices: Vec<P3>,
    pub compact: bool,
    pub kind: FaceKind,
}

impl Face {
    pub fn contains_on_plane(&self, p: &P3) -> bool {
        dot(&self.normal, p) == self.level
    }

    /// Edges `(u, w)` of a compact face in cyclic order.
    pub fn edges(&self) -> Vec<(P3, P3)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }
}

/// Common edge of a compact face `a` and an adjacent face `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeData {
    pub a: usize,
    pub b: usize,
    pub endpoints: (P3, P3),
    /// One more than the number of interior lattice points of the edge.
    pub t: i64,
    /// gcd of the 2-minors of the two normals.
    pub n: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NewtonDiagram {
    pub support: Support,
    /// Compact faces first, each group sorted by normal.
    pub faces: Vec<Face>,
    /// One entry per edge of a compact face; compact-compact pairs appear
    /// once, with `a < b`.
    pub edges: Vec<EdgeData>,
    /// Vertices of `Gamma_+`, sorted.
    pub vertices: Vec<P3>,
}

fn cross2(o: &[i128; 2], a: &[i128; 2], b: &[i128; 2]) -> i128 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Indices of the strict vertices of the convex hull of `pts`, in
/// counter-clockwise order.
fn hull_2d(pts: &[[i128; 2]]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| pts[i]);
    idx.dedup_by_key(|i| pts[*i]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && cross2(&pts[lower[lower.len() - 2]], &pts[lower[lower.len() - 1]], &pts[i]) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross2(&pts[upper[upper.len() - 2]], &pts[upper[upper.len() - 1]], &pts[i]) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn rank_of(vectors: &[P3]) -> usize {
    let nonzero: Vec<&P3> = vectors.iter().filter(|v| **v != [0, 0, 0]).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let first = nonzero[0];
    let mut second: Option<&P3> = None;
    for v in &nonzero[1..] {
        if cross(first, v) != [0, 0, 0] {
            second = Some(v);
            break;
        }
    }
    match second {
        None => 1,
        Some(s) => {
            let c = cross(first, s);
            if nonzero.iter().any(|v| dot(&c, v) != 0) {
                3
            } else {
                2
            }
        }
    }
}

/// Computes all 2-faces of `Gamma_+`, their vertices and the edge data.
///
/// Fails only when `Gamma_+` has a single vertex (a monomial support, up to
/// dominated points), since then the diagram carries no geometry.
pub fn build_diagram(s: &Support) -> Result<NewtonDiagram> {
    let pts = s.points();
    let mut dirs: Vec<P3> = AXES.to_vec();
    for i in 0..pts.len() {
        for j in 0..pts.len() {
            if i != j {
                dirs.push(sub(&pts[j], &pts[i]));
            }
        }
    }
    let mut candidates = BTreeSet::new();
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            let c = cross(&dirs[i], &dirs[j]);
            if c == [0, 0, 0] {
                continue;
            }
            let mut c = primitive(&c);
            if c[0] + c[1] + c[2] < 0 {
                c = [-c[0], -c[1], -c[2]];
            }
            if c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0) {
                candidates.insert(c);
            }
        }
    }

    let cmax = pts.iter().flat_map(|p| p.iter()).copied().max().unwrap_or(0) as i128;
    let far = 4 * (cmax + 1);
    let mut faces = Vec::new();
    for normal in candidates {
        let level = pts.iter().map(|p| dot(&normal, p)).min().expect("nonempty");
        let minimizers: Vec<P3> = pts
            .iter()
            .filter(|p| dot(&normal, p) == level)
            .copied()
            .collect();
        let recession: Vec<P3> = (0..3).filter(|&k| normal[k] == 0).map(|k| AXES[k]).collect();
        let mut span: Vec<P3> = minimizers.iter().map(|p| sub(p, &minimizers[0])).collect();
        span.extend(recession.iter().copied());
        if rank_of(&span) != 2 {
            continue;
        }
        // project along a coordinate where the normal is nonzero
        let drop = (0..3).max_by_key(|&k| (normal[k], -(k as i64))).expect("3 axes");
        let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
        let project = |p: &P3| -> [i128; 2] { [p[keep[0]] as i128, p[keep[1]] as i128] };
        let mut plane_pts: Vec<[i128; 2]> = minimizers.iter().map(project).collect();
        for m in &minimizers {
            for r in &recession {
                let q = project(m);
                let d = project(r);
                plane_pts.push([q[0] + far * d[0], q[1] + far * d[1]]);
            }
        }
        let hull = hull_2d(&plane_pts);
        let vertices: Vec<P3> = hull
            .into_iter()
            .filter(|&i| i < minimizers.len())
            .map(|i| minimizers[i])
            .collect();
        let compact = recession.is_empty();
        let kind = if !compact {
            FaceKind::NonCompact
        } else {
            match vertices.len() {
                3 => FaceKind::Triangle,
                4 => FaceKind::Trapezoid,
                _ => FaceKind::Polygon,
            }
        };
        let vertices = if compact {
            vertices
        } else {
            let mut v = vertices;
            v.sort_unstable();
            v
        };
        faces.push(Face {
            normal,
            level,
            vertices,
            compact,
            kind,
        });
    }
    faces.sort_by_key(|f| (!f.compact, f.normal));

    let mut vertices: Vec<P3> = faces.iter().flat_map(|f| f.vertices.iter().copied()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() <= 1 {
        return Err(Error::Diagram(
            "the Newton boundary is a single point; there is no compact face".into(),
        ));
    }

    let mut edges = Vec::new();
    for (a, fa) in faces.iter().enumerate() {
        if !fa.compact {
            continue;
        }
        for (u, w) in fa.edges() {
            let others: Vec<usize> = (0..faces.len())
                .filter(|&b| b != a && faces[b].contains_on_plane(&u) && faces[b].contains_on_plane(&w))
                .collect();
            if others.len() != 1 {
                return Err(Error::Diagram(format!(
                    "edge {u:?}-{w:?} lies on {} other faces",
                    others.len()
                )));
            }
            let b = others[0];
            if faces[b].compact && b < a {
                continue;
            }
            edges.push(EdgeData {
                a,
                b,
                endpoints: (u, w),
                t: lattice_length(&u, &w),
                n: minor_gcd(&fa.normal, &faces[b].normal),
            });
        }
    }

    Ok(NewtonDiagram {
        support: s.clone(),
        faces,
        edges,
        vertices,
    })
}

fn ge_frac(a_num: i128, a_den: i128, b_num: i128, b_den: i128) -> bool {
    // a_num/a_den >= b_num/b_den with positive denominators
    a_num * b_den >= b_num * a_den
}

impl NewtonDiagram {
    pub fn compact_faces(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| self.faces[i].compact).collect()
    }

    /// Faces adjacent to face `a` along one of its edges, with `(t, n)`.
    pub fn neighbors(&self, a: usize) -> Vec<(usize, i64, i64)> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.a == a {
                    Some((e.b, e.t, e.n))
                } else if e.b == a {
                    Some((e.a, e.t, e.n))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&EdgeData> {
        self.edges
            .iter()
            .find(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a))
    }

    /// Membership in `Gamma_+`, tested against every facet.
    pub fn in_gamma_plus(&self, p: &P3) -> bool {
        self.faces.iter().all(|f| dot(&f.normal, p) >= f.level)
    }

    /// Lattice points of a compact face.
    pub fn face_lattice_points(&self, face: usize) -> Vec<P3> {
        let f = &self.faces[face];
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for v in &f.vertices {
            for k in 0..3 {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    if f.contains_on_plane(&p) && self.in_gamma_plus(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Whether `q` lies in the cone over the compact faces with vertex `0`.
    pub fn in_gamma_minus(&self, q: &P3) -> bool {
        if *q == [0, 0, 0] {
            return true;
        }
        if q.iter().any(|&c| c < 0) {
            return false;
        }
        // the ray t*q leaves Gamma_+ at t0 = max_F level_F / <N_F, q>
        let mut best: Option<(i128, i128, bool)> = None;
        for f in &self.faces {
            let d = dot(&f.normal, q) as i128;
            if d <= 0 {
                if f.level > 0 {
                    return false;
                }
                continue;
            }
            let num = f.level as i128;
            match best {
                None => best = Some((num, d, f.compact)),
                Some((bn, bd, bc)) => {
                    if num * bd > bn * d {
                        best = Some((num, d, f.compact));
                    } else if num * bd == bn * d {
                        best = Some((bn, bd, bc || f.compact));
                    }
                }
            }
        }
        match best {
            Some((num, den, compact)) => compact && ge_frac(num, den, 1, 1),
            None => false,
        }
    }

    /// Corner of a box containing `Gamma_-`.
    pub fn gamma_minus_bound(&self) -> P3 {
        let mut b = [0i64; 3];
        for f in self.faces.iter().filter(|f| f.compact) {
            for v in &f.vertices {
                for k in 0..3 {
                    b[k] = b[k].max(v[k]);
                }
            }
        }
        b
    }
}

/// A vertex on every coordinate plane and, for every axis, a vertex at
/// distance at most one from it.
pub fn check_isolated(d: &NewtonDiagram) -> bool {
    let on_planes = (0..3).all(|k| d.vertices.iter().any(|v| v[k] == 0));
    let near_axes = (0..3).all(|k| {
        d.vertices
            .iter()
            .any(|v| (0..3).filter(|&j| j != k).map(|j| v[j]).sum::<i64>() <= 1)
    });
    on_planes && near_axes
}

/// No lattice point of a compact face has all coordinates positive.
pub fn check_rhs(d: &NewtonDiagram) -> bool {
    d.compact_faces().into_iter().all(|f| {
        d.face_lattice_points(f)
            .iter()
            .all(|p| p.contains(&0))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Kind of every compact face, by face index.
    pub kinds: Vec<(usize, FaceKind)>,
    /// The all-even Brieskorn diagram `z1^2a + z2^2b + z3^2c`.
    pub special: bool,
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn permute(p: &P3, s: &[usize; 3]) -> P3 {
    [p[s[0]], p[s[1]], p[s[2]]]
}

/// Vertex pattern `(p,0,n), (0,q,n), (r1, r2+tq, 0), (r1+tp, r2, 0)` up to
/// a permutation of coordinates.
fn is_standard_trapezoid(vs: &[P3]) -> bool {
    if vs.len() != 4 {
        return false;
    }
    for s in &PERMS {
        let w: Vec<P3> = vs.iter().map(|v| permute(v, s)).collect();
        let top: Vec<&P3> = w.iter().filter(|v| v[2] > 0).collect();
        let bottom: Vec<&P3> = w.iter().filter(|v| v[2] == 0).collect();
        if top.len() != 2 || bottom.len() != 2 || top[0][2] != top[1][2] {
            continue;
        }
        let (a, b) = if top[0][1] == 0 { (top[0], top[1]) } else { (top[1], top[0]) };
        if a[1] != 0 || b[0] != 0 {
            continue;
        }
        let (p, q) = (a[0], b[1]);
        if p <= 0 || q <= 0 || gcd_i64(p, q) != 1 {
            continue;
        }
        for (u, v) in [(bottom[0], bottom[1]), (bottom[1], bottom[0])] {
            // u = (r1, r2 + t q, 0), v = (r1 + t p, r2, 0)
            let dx = v[0] - u[0];
            let dy = u[1] - v[1];
            if dx <= 0 || dx % p != 0 || dy != (dx / p) * q {
                continue;
            }
            if u[0] >= 0 && v[1] >= 0 {
                return true;
            }
        }
    }
    false
}

fn is_all_even_brieskorn(d: &NewtonDiagram) -> bool {
    let compact = d.compact_faces();
    if compact.len() != 1 {
        return false;
    }
    let f = &d.faces[compact[0]];
    if f.vertices.len() != 3 {
        return false;
    }
    let on_axes = f
        .vertices
        .iter()
        .all(|v| v.iter().filter(|&&c| c == 0).count() == 2);
    on_axes
        && f.vertices.iter().all(|v| v.iter().all(|&c| c % 2 == 0))
        && f.edges().iter().all(|(u, w)| lattice_length(u, w) > 1)
}

/// Labels the compact faces and checks the edge conditions of an RHS
/// diagram: at most one edge per face carries interior lattice points, and
/// such an edge lies in a coordinate plane.
pub fn classify_faces(d: &NewtonDiagram) -> Result<Classification> {
    if is_all_even_brieskorn(d) {
        let f = d.compact_faces()[0];
        return Ok(Classification {
            kinds: vec![(f, FaceKind::Triangle)],
            special: true,
        });
    }
    let mut kinds = Vec::new();
    for f in d.compact_faces() {
        let face = &d.faces[f];
        let kind = match face.vertices.len() {
            3 => FaceKind::Triangle,
            4 if is_standard_trapezoid(&face.vertices) => FaceKind::Trapezoid,
            k => {
                return Err(Error::Diagram(format!(
                    "face {f} with {k} vertices is neither a triangle nor a standard trapezoid"
                )))
            }
        };
        let long: Vec<(P3, P3)> = face
            .edges()
            .into_iter()
            .filter(|(u, w)| lattice_length(u, w) > 1)
            .collect();
        if long.len() > 1 {
            return Err(Error::Diagram(format!(
                "face {f} has {} edges with interior lattice points",
                long.len()
            )));
        }
        if let Some((u, w)) = long.first() {
            if !(0..3).any(|k| u[k] == 0 && w[k] == 0) {
                return Err(Error::Diagram(format!(
                    "face {f}: edge {u:?}-{w:?} with interior points is not in a coordinate plane"
                )));
            }
        }
        kinds.push((f, kind));
    }
    Ok(Classification {
        kinds,
        special: false,
    })
}

/// Number of lattice points with all entries positive in `Gamma_-`.
pub fn mt_count(d: &NewtonDiagram) -> u64 {
    let b = d.gamma_minus_bound();
    let mut count = 0;
    for x in 1..=b[0] {
        for y in 1..=b[1] {
            for z in 1..=b[2] {
                if d.in_gamma_minus(&[x, y, z]) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn diagram(text: &str) -> NewtonDiagram {
        build_diagram(&Support::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn brieskorn_single_face() {
        let d = diagram(examples::BRIESKORN_2_3_5);
        let c = d.compact_faces();
        assert_eq!(c.len(), 1);
        assert_eq!(d.faces[c[0]].normal, [15, 10, 6]);
        assert_eq!(d.faces[c[0]].level, 30);
        assert_eq!(d.faces[c[0]].kind, FaceKind::Triangle);
        // three coordinate planes border the face
        let nb = d.neighbors(c[0]);
        assert_eq!(nb.len(), 3);
        for (b, t, n) in nb {
            assert!(!d.faces[b].compact);
            assert_eq!(t, 1);
            assert!(n > 1);
        }
    }

    #[test]
    fn two_face_triangles() {
        let d = diagram(examples::TWO_FACE_SUPPORT);
        let c = d.compact_faces();
        assert_eq!(c.len(), 2);
        let normals: Vec<P3> = c.iter().map(|&f| d.faces[f].normal).collect();
        assert_eq!(normals, vec![[6, 33, 26], [33, 6, 26]]);
        for &f in &c {
            let mut vs = d.faces[f].vertices.clone();
            vs.sort_unstable();
            assert!(vs.contains(&[2, 2, 0]) && vs.contains(&[0, 0, 3]));
            assert_eq!(d.faces[f].kind, FaceKind::Triangle);
        }
        let e = d.edge_between(c[0], c[1]).unwrap();
        assert_eq!(e.t, 1);
        assert!(check_isolated(&d));
        assert!(check_rhs(&d));
        let cl = classify_faces(&d).unwrap();
        assert!(!cl.special);
        assert_eq!(cl.kinds.len(), 2);
    }

    #[test]
    fn single_monomial_is_rejected() {
        let s = Support::parse("p 1 0 0").unwrap();
        assert!(matches!(build_diagram(&s), Err(Error::Diagram(_))));
    }

    #[test]
    fn not_isolated() {
        let d = diagram("p 2 2 0\np 0 0 3");
        assert!(d.compact_faces().is_empty());
        assert!(!check_isolated(&d));
    }

    #[test]
    fn rhs_failure() {
        let d = diagram("p 3 0 0\np 0 3 0\np 0 0 3\np 1 1 1");
        assert!(!check_rhs(&d));
        assert!(check_rhs(&diagram(examples::BRIESKORN_2_3_5)));
    }

    #[test]
    fn all_even_brieskorn_is_special() {
        let d = diagram(examples::BRIESKORN_2_4_6);
        assert!(check_rhs(&d));
        assert!(classify_faces(&d).unwrap().special);
    }

    #[test]
    fn trapezoid_pattern() {
        // (1,0,1), (0,1,1), (0,3,0), (2,1,0): p = q = 1, t = 2, r = (0,1)
        assert!(is_standard_trapezoid(&[[1, 0, 1], [0, 1, 1], [0, 3, 0], [2, 1, 0]]));
        assert!(!is_standard_trapezoid(&[[1, 0, 1], [0, 1, 1], [0, 3, 0], [3, 1, 0]]));
    }

    #[test]
    fn milnor_counts() {
        assert_eq!(mt_count(&diagram(examples::BRIESKORN_2_3_5)), 0);
        assert_eq!(mt_count(&diagram(examples::BRIESKORN_2_3_13)), 2);
        assert_eq!(mt_count(&diagram(examples::BRIESKORN_2_3_18)), 3);
        assert_eq!(mt_count(&diagram(examples::TWO_FACE_SUPPORT)), 5);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Support::parse("p 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Support::parse("p 1 2 -3"), Err(Error::Parse { .. })));
        assert!(matches!(
            Support::parse("p 1 2 3\np 1 2 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Support::parse("# nothing").is_err());
    }
}
