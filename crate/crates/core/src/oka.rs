//! Oka's algorithm: the resolution graph of a Newton non-degenerate germ
//! read off from its Newton diagram.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::gcd_i64;
use crate::newton::{check_isolated, check_rhs, dot, minor_gcd, NewtonDiagram, P3};
use crate::plumbing::{Cycle, PlumbingGraph};

/// Negative continued fraction `n/c = e_1 - 1/(e_2 - ...)`, all `e_i >= 2`.
/// Empty for `c = 0`.
pub fn neg_continued_fraction(n: i64, c: i64) -> Result<Vec<i64>> {
    if n <= 0 || c < 0 || c >= n {
        return Err(Error::InvalidArgument(format!(
            "continued fraction needs 0 <= c < n, got n={n}, c={c}"
        )));
    }
    if c > 0 && gcd_i64(n, c) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({n}, {c}) != 1")));
    }
    let mut out = Vec::new();
    let (mut a, mut b) = (n, c);
    while b != 0 {
        let e = (a + b - 1) / b;
        out.push(e);
        (a, b) = (b, e * b - a);
    }
    Ok(out)
}

/// `(n, c, N_{D,U})` for adjacent faces with normals `nd` and `nu`.
pub fn splitting_data(nd: &P3, nu: &P3) -> Result<(i64, i64, P3)> {
    let n = minor_gcd(nd, nu);
    if n == 0 {
        return Err(Error::Diagram(format!(
            "normals {nd:?} and {nu:?} are parallel"
        )));
    }
    if n == 1 {
        return Ok((1, 0, *nu));
    }
    let hits: Vec<i64> = (1..n)
        .filter(|&c| (0..3).all(|k| (nu[k] + c * nd[k]) % n == 0))
        .collect();
    match hits.as_slice() {
        [c] => {
            let c = *c;
            Ok((
                n,
                c,
                [
                    (nu[0] + c * nd[0]) / n,
                    (nu[1] + c * nd[1]) / n,
                    (nu[2] + c * nd[2]) / n,
                ],
            ))
        }
        _ => Err(Error::Diagram(format!(
            "no unique splitting for {nd:?}, {nu:?} (n = {n})"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrowhead {
    pub id: String,
    /// Core vertex carrying the arrow.
    pub vertex: usize,
    /// Normal of the non-compact face.
    pub normal: P3,
    pub face: usize,
}

/// The resolution graph `G` with its multiplicity vectors and the
/// arrowheads of `G^e`.
#[derive(Debug, Clone)]
pub struct ExtendedGraph {
    pub core: PlumbingGraph,
    pub nvec: Vec<P3>,
    pub arrowheads: Vec<Arrowhead>,
    /// `(face index, core vertex)` for every compact face.
    pub face_vertices: Vec<(usize, usize)>,
    /// Compact faces adjacent to a non-compact face without a chain in
    /// between; such diagrams are not minimal.
    pub bare_arrows: Vec<usize>,
    /// `(face vertex, neighbouring core vertex, diagram edge index)`, one
    /// entry per chain leaving a face vertex.
    pub face_links: Vec<(usize, usize, usize)>,
}

impl ExtendedGraph {
    pub fn is_node(&self, v: usize) -> bool {
        self.face_vertices.iter().any(|&(_, w)| w == v)
    }

    pub fn node_mask(&self) -> Vec<bool> {
        (0..self.core.len()).map(|v| self.is_node(v)).collect()
    }

    /// Arrowheads supported on `v`.
    pub fn arrows_at(&self, v: usize) -> impl Iterator<Item = &Arrowhead> {
        self.arrowheads.iter().filter(move |a| a.vertex == v)
    }

    /// `b_v N_v + sum_{w ~ v} N_w` over `G^e`; zero at every vertex.
    pub fn residual(&self, v: usize) -> P3 {
        let mut r = [0i64; 3];
        for k in 0..3 {
            r[k] = self.core.selfint(v) * self.nvec[v][k];
            for &w in self.core.neighbors(v) {
                r[k] += self.nvec[w][k];
            }
            for a in self.arrows_at(v) {
                r[k] += a.normal[k];
            }
        }
        r
    }

    /// Graph file text with `# nvec` and `# arrow` annotations.
    pub fn to_text(&self) -> String {
        let mut s = self.core.to_text();
        for (v, id) in self.core.ids().iter().enumerate() {
            let n = self.nvec[v];
            s.push_str(&format!("# nvec {id} {} {} {}\n", n[0], n[1], n[2]));
        }
        for a in &self.arrowheads {
            s.push_str(&format!(
                "# arrow {} {} {} {} {}\n",
                a.id,
                self.core.ids()[a.vertex],
                a.normal[0],
                a.normal[1],
                a.normal[2]
            ));
        }
        s
    }
}

struct Builder {
    ids: Vec<String>,
    selfint: Vec<i64>,
    nvec: Vec<P3>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn add(&mut self, id: String, b: i64, n: P3) -> usize {
        self.ids.push(id);
        self.selfint.push(b);
        self.nvec.push(n);
        self.ids.len() - 1
    }
}

/// Builds `G^e` from a diagram satisfying the isolatedness and rational
/// homology sphere conditions.
pub fn build_resolution(d: &NewtonDiagram) -> Result<ExtendedGraph> {
    if !check_isolated(d) {
        return Err(Error::Diagram("diagram does not define an isolated singularity".into()));
    }
    if !check_rhs(d) {
        return Err(Error::Diagram("link is not a rational homology sphere".into()));
    }
    let compact = d.compact_faces();
    if compact.is_empty() {
        return Err(Error::Diagram("no compact face".into()));
    }
    let mut bld = Builder {
        ids: Vec::new(),
        selfint: Vec::new(),
        nvec: Vec::new(),
        edges: Vec::new(),
    };
    let mut vertex_of_face = vec![usize::MAX; d.faces.len()];
    for &f in &compact {
        // decoration filled in below
        vertex_of_face[f] = bld.add(format!("F{f}"), 0, d.faces[f].normal);
    }
    let mut arrowheads = Vec::new();
    let mut bare_arrows = Vec::new();
    let mut face_links = Vec::new();
    for (ei, e) in d.edges.iter().enumerate() {
        let (a, b) = (e.a, e.b);
        let na = d.faces[a].normal;
        let nb = d.faces[b].normal;
        let (n, c, nmid) = splitting_data(&na, &nb)?;
        let chain = neg_continued_fraction(n, c)?;
        let target = if d.faces[b].compact {
            if e.t != 1 {
                return Err(Error::Diagram(format!(
                    "compact faces {a} and {b} share an edge of lattice length {}",
                    e.t
                )));
            }
            format!("F{b}")
        } else {
            format!("X{b}")
        };
        for copy in 0..e.t {
            let first = bld.ids.len();
            let mut prev_vertex = vertex_of_face[a];
            let mut prev = na;
            let mut cur = nmid;
            for (pos, &ei) in chain.iter().enumerate() {
                let v = bld.add(format!("F{a}-{target}.{copy}.{pos}"), -ei, cur);
                bld.edges.push((prev_vertex, v));
                let next = [
                    ei * cur[0] - prev[0],
                    ei * cur[1] - prev[1],
                    ei * cur[2] - prev[2],
                ];
                prev = cur;
                cur = next;
                prev_vertex = v;
            }
            if cur != nb {
                return Err(Error::Invariant(format!(
                    "chain from face {a} ends at {cur:?}, expected {nb:?}"
                )));
            }
            if d.faces[b].compact {
                let vb = vertex_of_face[b];
                bld.edges.push((prev_vertex, vb));
                face_links.push((vertex_of_face[a], if chain.is_empty() { vb } else { first }, ei));
                face_links.push((vb, prev_vertex, ei));
            } else {
                if !chain.is_empty() {
                    face_links.push((vertex_of_face[a], first, ei));
                }
                if chain.is_empty() {
                    bare_arrows.push(a);
                }
                arrowheads.push(Arrowhead {
                    id: format!("A{a}-{b}.{copy}"),
                    vertex: prev_vertex,
                    normal: nb,
                    face: b,
                });
            }
        }
    }

    // face decorations: b N_D + sum_U t N_{D,U} = 0
    for &f in &compact {
        let nf = d.faces[f].normal;
        let mut sum = [0i64; 3];
        for (g, t, _) in d.neighbors(f) {
            let (_, _, nmid) = splitting_data(&nf, &d.faces[g].normal)?;
            for k in 0..3 {
                sum[k] += t * nmid[k];
            }
        }
        if sum[0] % nf[0] != 0 {
            return Err(Error::Diagram(format!("face {f}: decoration is not integral")));
        }
        let b = -sum[0] / nf[0];
        if (0..3).any(|k| b * nf[k] + sum[k] != 0) {
            return Err(Error::Diagram(format!(
                "face {f}: decoration equations are inconsistent"
            )));
        }
        bld.selfint[vertex_of_face[f]] = b;
    }

    let core = PlumbingGraph::new(bld.ids, bld.selfint, bld.edges)?;
    if !core.is_negative_definite() {
        return Err(Error::Invariant("resolution graph is not negative definite".into()));
    }
    let face_vertices = compact.iter().map(|&f| (f, vertex_of_face[f])).collect();
    let eg = ExtendedGraph {
        core,
        nvec: bld.nvec,
        arrowheads,
        face_vertices,
        bare_arrows,
        face_links,
    };
    for v in 0..eg.core.len() {
        if eg.residual(v) != [0, 0, 0] {
            return Err(Error::Invariant(format!(
                "multiplicity relation fails at {}",
                eg.core.ids()[v]
            )));
        }
        if eg.nvec[v].iter().any(|&x| x <= 0) {
            return Err(Error::Invariant(format!(
                "non-positive multiplicity vector at {}",
                eg.core.ids()[v]
            )));
        }
    }
    Ok(eg)
}

/// `wt(S) = sum_v min_{p in S} <N_v, p> E_v`.
pub fn weight_cycle(eg: &ExtendedGraph, s: &[P3]) -> Result<Cycle> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("weight of an empty set".into()));
    }
    Ok(Cycle(
        eg.nvec
            .iter()
            .map(|n| s.iter().map(|p| dot(n, p)).min().expect("nonempty"))
            .collect(),
    ))
}

/// `Z_K - E = wt(f) - wt(z1 z2 z3)`.
pub fn zk_cross_check(eg: &ExtendedGraph, support: &[P3]) -> Result<bool> {
    let zk = eg.core.anticanonical()?;
    let lhs = &zk - &Cycle::reduced(eg.core.len());
    let rhs = &weight_cycle(eg, support)? - &weight_cycle(eg, &[[1, 1, 1]])?;
    Ok(lhs == rhs)
}

/// The half-space system `<N_v, p> >= m_v(l)` over all vertices of `G^e`,
/// with `m_a = -1` on arrowheads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaE {
    pub constraints: Vec<(P3, i64)>,
}

impl GammaE {
    pub fn contains(&self, p: &P3) -> bool {
        self.constraints.iter().all(|(n, m)| dot(n, p) >= *m)
    }
}

pub fn polytope_gamma_e(eg: &ExtendedGraph, l: &Cycle) -> Result<GammaE> {
    if l.len() != eg.core.len() {
        return Err(Error::IndexMismatch {
            expected: eg.core.len(),
            got: l.len(),
        });
    }
    let mut constraints: Vec<(P3, i64)> = (0..l.len()).map(|v| (eg.nvec[v], l[v])).collect();
    constraints.extend(eg.arrowheads.iter().map(|a| (a.normal, -1)));
    Ok(GammaE { constraints })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::newton::{build_diagram, Support};
    use crate::plumbing::isomorphic;

    fn eg(text: &str) -> (NewtonDiagram, ExtendedGraph) {
        let d = build_diagram(&Support::parse(text).unwrap()).unwrap();
        let g = build_resolution(&d).unwrap();
        (d, g)
    }

    /// Evaluates `e_1 - 1/(e_2 - ...)` as a reduced fraction.
    fn eval_cf(es: &[i64]) -> (i64, i64) {
        let (mut num, mut den) = (1i64, 0i64);
        for &e in es.iter().rev() {
            (num, den) = (e * num - den, num);
        }
        (num, den)
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(neg_continued_fraction(5, 3).unwrap(), vec![2, 3]);
        assert_eq!(neg_continued_fraction(7, 5).unwrap(), vec![2, 2, 3]);
        assert_eq!(neg_continued_fraction(9, 1).unwrap(), vec![9]);
        assert!(neg_continued_fraction(5, 0).unwrap().is_empty());
        assert!(neg_continued_fraction(5, 5).is_err());
        assert!(neg_continued_fraction(5, -1).is_err());
        for n in 2..40 {
            for c in 1..n {
                if gcd_i64(n, c) == 1 {
                    let es = neg_continued_fraction(n, c).unwrap();
                    assert!(es.iter().all(|&e| e >= 2));
                    assert_eq!(eval_cf(&es), (n, c));
                }
            }
        }
    }

    #[test]
    fn splitting() {
        assert_eq!(splitting_data(&[1, 1, 1], &[0, 0, 1]).unwrap(), (1, 0, [0, 0, 1]));
        assert_eq!(splitting_data(&[15, 10, 6], &[1, 0, 0]).unwrap(), (2, 1, [8, 5, 3]));
        assert!(splitting_data(&[1, 2, 3], &[1, 2, 3]).is_err());
    }

    #[test]
    fn e8_from_brieskorn() {
        let (_, g) = eg(examples::BRIESKORN_2_3_5);
        let e8 = PlumbingGraph::parse(examples::E8_GRAPH).unwrap();
        assert!(isomorphic(&g.core, &e8));
        assert_eq!(g.core.determinant().unwrap(), 1.into());
        assert_eq!(g.arrowheads.len(), 3);
        assert!(g.bare_arrows.is_empty());
    }

    #[test]
    fn two_face_graph() {
        let (d, g) = eg(examples::TWO_FACE_SUPPORT);
        let printed = PlumbingGraph::parse(examples::TWO_FACE_GRAPH).unwrap();
        assert!(isomorphic(&g.core, &printed));
        assert!(zk_cross_check(&g, d.support.points()).unwrap());
        let nodes: Vec<usize> = (0..g.core.len()).filter(|&v| g.core.degree(v) >= 3).collect();
        assert_eq!(nodes.len(), 2);
        assert!(nodes.iter().all(|&v| g.is_node(v)));
    }

    #[test]
    fn coordinate_slices_are_weights_of_variables() {
        let (_, g) = eg(examples::TWO_FACE_SUPPORT);
        for k in 0..3 {
            let mut e = [0i64; 3];
            e[k] = 1;
            let w = weight_cycle(&g, &[e]).unwrap();
            assert_eq!(w.0, g.nvec.iter().map(|n| n[k]).collect::<Vec<_>>());
        }
        assert!(weight_cycle(&g, &[[0, 0, 0]]).unwrap().is_zero());
    }

    #[test]
    fn cross_check_on_brieskorn() {
        for text in [examples::BRIESKORN_2_3_5, examples::BRIESKORN_2_3_13] {
            let (d, g) = eg(text);
            assert!(zk_cross_check(&g, d.support.points()).unwrap());
        }
    }

    #[test]
    fn gamma_e_at_zk_minus_e() {
        let (d, g) = eg(examples::TWO_FACE_SUPPORT);
        let zk = g.core.anticanonical().unwrap();
        let l = &zk - &Cycle::reduced(g.core.len());
        let poly = polytope_gamma_e(&g, &l).unwrap();
        for x in -1..16 {
            for y in -1..16 {
                for z in -1..6 {
                    let p = [x, y, z];
                    let shifted = [x + 1, y + 1, z + 1];
                    assert_eq!(poly.contains(&p), d.in_gamma_plus(&shifted), "{p:?}");
                }
            }
        }
        let zero = polytope_gamma_e(&g, &Cycle::zero(g.core.len())).unwrap();
        assert!(zero.contains(&[0, 0, 0]));
        assert!(zero.contains(&[3, 0, 7]));
    }

    #[test]
    fn preconditions() {
        let d = build_diagram(&Support::parse("p 3 0 0\np 0 3 0\np 0 0 3\np 1 1 1").unwrap()).unwrap();
        assert!(matches!(build_resolution(&d), Err(Error::Diagram(_))));
        let d = build_diagram(&Support::parse("p 2 2 0\np 0 0 3").unwrap()).unwrap();
        assert!(matches!(build_resolution(&d), Err(Error::Diagram(_))));
    }
}
