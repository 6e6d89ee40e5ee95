//! The computation sequence from `0` to `Z_K - E` driven by the ratio test,
//! the lattice-point partition it induces, and the resulting certificate for
//! `p_g` together with an optimal path.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{determinant, solve};
use crate::newton::{classify_faces, dot, lattice_length, mt_count, NewtonDiagram, P3};
use crate::oka::{polytope_gamma_e, ExtendedGraph};
use crate::path::{path_cost, LatticePath};
use crate::plumbing::{Cycle, PlumbingGraph};

/// Upper bound on the length of a completion loop before giving up.
const COMPLETION_GUARD: u64 = 50_000_000;

fn rhs_bound(g: &PlumbingGraph, v: usize) -> i64 {
    2 - g.degree(v) as i64
}

/// Components of the subgraph spanned by the vertices off `nodes`.
fn chains(g: &PlumbingGraph, nodes: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = nodes.to_vec();
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A cycle below `c(l)` agreeing with `l` on the nodes.
///
/// On a component `C` of the complement of the nodes the conditions read
/// `I_C x >= ...` with `-I_C` positive definite and `(-I_C)^{-1} >= 0`, so
/// every admissible `x` dominates the rational solution of the boundary
/// system.
fn node_lower_bound(g: &PlumbingGraph, nodes: &[bool], l: &Cycle) -> Result<Cycle> {
    let mut x = Cycle::zero(g.len());
    for v in 0..g.len() {
        if nodes[v] {
            x[v] = l[v];
        }
    }
    for comp in chains(g, nodes) {
        let pos = |u: usize| comp.iter().position(|&c| c == u);
        let m: Vec<Vec<i64>> = comp
            .iter()
            .map(|&u| {
                comp.iter()
                    .map(|&w| {
                        if u == w {
                            -g.selfint(u)
                        } else if g.neighbors(u).contains(&w) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        // (x, E_u) <= 2 - delta_u  <=>  (-I_C) x_C >= delta_u - 2 + sum_{n ~ u} l_n
        let rhs: Vec<BigRational> = comp
            .iter()
            .map(|&u| {
                let from_nodes: i64 = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| nodes[w])
                    .map(|&w| l[w])
                    .sum();
                BigRational::from_integer(BigInt::from(from_nodes - rhs_bound(g, u)))
            })
            .collect();
        let sol = solve(&m, &rhs).ok_or(Error::NotDefinite)?;
        for (&u, q) in comp.iter().zip(&sol) {
            debug_assert!(pos(u).is_some());
            x[u] = i64::try_from(q.ceil().to_integer())
                .map_err(|_| Error::Invariant("completion bound out of range".into()))?;
        }
    }
    Ok(x)
}

/// Runs the completion loop from `start`, returning the added vertices.
fn completion_from(
    g: &PlumbingGraph,
    nodes: &[bool],
    x: &mut Cycle,
    mut ceiling: Option<&Cycle>,
) -> Result<Vec<usize>> {
    let mut steps = Vec::new();
    loop {
        let v = (0..g.len()).find(|&v| !nodes[v] && g.dot_e(x, v) > rhs_bound(g, v));
        let Some(v) = v else { break };
        x[v] += 1;
        steps.push(v);
        if steps.len() as u64 > COMPLETION_GUARD {
            return Err(Error::NonTermination(COMPLETION_GUARD));
        }
        if let Some(top) = ceiling.as_mut() {
            if x[v] > top[v] {
                return Err(Error::Invariant(format!(
                    "completion exceeds Z_K - E at {}",
                    g.ids()[v]
                )));
            }
        }
    }
    Ok(steps)
}

/// `c(l)`: the smallest cycle equal to `l` on `nodes` with
/// `(c(l), E_v) <= 2 - delta_v` at every other vertex.
pub fn complete(g: &PlumbingGraph, nodes: &[bool], l: &Cycle) -> Result<Cycle> {
    if l.len() != g.len() || nodes.len() != g.len() {
        return Err(Error::IndexMismatch {
            expected: g.len(),
            got: l.len().min(nodes.len()),
        });
    }
    let mut x = node_lower_bound(g, nodes, l)?;
    completion_from(g, nodes, &mut x, None)?;
    Ok(x)
}

/// Result of the ratio test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioChoice {
    pub vertex: usize,
    /// Number of eligible vertices attaining the minimum.
    pub candidates: usize,
}

/// The ratio test `R(v) = m_v(l) / m_v(Z_K - E)`: a minimising vertex with a
/// neighbour of strictly larger finite ratio. Ties go to the smallest index.
pub fn ratio_choice(g: &PlumbingGraph, zke: &Cycle, l: &Cycle) -> Option<RatioChoice> {
    let ratio = |v: usize| -> Option<BigRational> {
        (zke[v] != 0).then(|| BigRational::new(BigInt::from(l[v]), BigInt::from(zke[v])))
    };
    let min = (0..g.len()).filter_map(ratio).min()?;
    let eligible: Vec<usize> = (0..g.len())
        .filter(|&v| ratio(v).as_ref() == Some(&min))
        .filter(|&v| {
            g.neighbors(v)
                .iter()
                .any(|&w| ratio(w).is_some_and(|r| r > min))
        })
        .collect();
    eligible.first().map(|&v| RatioChoice {
        vertex: v,
        candidates: eligible.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepKind {
    /// The first step `0 -> E_{v(0)}`.
    Initial,
    /// A step `zbar_i -> zbar_i + E_{v(i)}` chosen by the ratio test.
    Ratio,
    /// An intermediate step of a completion loop.
    Laufer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTrace {
    pub zk: Cycle,
    pub zbar: Vec<Cycle>,
    /// `z_0, ..., z_t`.
    pub full: Vec<Cycle>,
    /// `v(i)` for every step of `full`.
    pub chosen: Vec<usize>,
    pub kinds: Vec<StepKind>,
    /// `(E_{v(i)}, z_i)`.
    pub pairings: Vec<i64>,
    /// `max{0, 1 - (E_{v(i)}, z_i)}`.
    pub costs: Vec<u64>,
    pub partitions: Vec<Vec<P3>>,
    /// Ratio tests with more than one eligible minimiser.
    pub ties: usize,
}

impl SequenceTrace {
    pub fn total_cost(&self) -> u64 {
        self.costs.iter().sum()
    }

    pub fn total_points(&self) -> u64 {
        self.partitions.iter().map(|p| p.len() as u64).sum()
    }
}

fn upper_corner(d: &NewtonDiagram) -> P3 {
    d.gamma_minus_bound()
}

fn box_points(lo: i64, hi: &P3) -> Vec<P3> {
    let mut out = Vec::new();
    for x in lo..=hi[0] {
        for y in lo..=hi[1] {
            for z in lo..=hi[2] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// `P_i = (Gamma^e_+(z_i) \ Gamma^e_+(z_{i+1})) cap Z^3_{>=0}` for every step.
pub fn partitions(eg: &ExtendedGraph, d: &NewtonDiagram, trace: &SequenceTrace) -> Result<Vec<Vec<P3>>> {
    let pts = box_points(0, &upper_corner(d));
    let mut out = Vec::with_capacity(trace.chosen.len());
    let mut inside: Vec<bool> = {
        let poly = polytope_gamma_e(eg, &trace.full[0])?;
        pts.iter().map(|p| poly.contains(p)).collect()
    };
    for i in 0..trace.chosen.len() {
        let poly = polytope_gamma_e(eg, &trace.full[i + 1])?;
        let next: Vec<bool> = pts.iter().map(|p| poly.contains(p)).collect();
        out.push(
            pts.iter()
                .zip(inside.iter().zip(&next))
                .filter(|(_, (&a, &b))| a && !b)
                .map(|(p, _)| *p)
                .collect(),
        );
        inside = next;
    }
    Ok(out)
}

fn ade_trace(n: usize) -> SequenceTrace {
    SequenceTrace {
        zk: Cycle::zero(n),
        zbar: vec![Cycle::zero(n)],
        full: vec![Cycle::zero(n)],
        chosen: Vec::new(),
        kinds: Vec::new(),
        pairings: Vec::new(),
        costs: Vec::new(),
        partitions: Vec::new(),
        ties: 0,
    }
}

/// Builds the sequence `z_0 = 0, ..., z_t = Z_K - E`.
///
/// The first vertex is the smallest node in the support of `Z_K - E`; the
/// completion of `E_v` at a non-node `v` collapses back to `0`, so a node is
/// needed for the sequence to move. For the same reason every step is
/// completed by the loop started at `zbar_i + E_v`, which yields the smallest
/// admissible cycle above it; `c(zbar_i + E_v)` itself would undo earlier
/// steps at leaves.
pub fn run_sequence(eg: &ExtendedGraph, d: &NewtonDiagram) -> Result<SequenceTrace> {
    let g = &eg.core;
    let n = g.len();
    let class = classify_faces(d)?;
    if class.special {
        return Err(Error::Diagram(
            "all-even Brieskorn diagram: the sequence is not run on this case".into(),
        ));
    }
    let zk = g.anticanonical()?;
    if zk.is_zero() {
        return Ok(ade_trace(n));
    }
    let nodes = g.nodes();
    if nodes != eg.node_mask() {
        return Err(Error::Diagram(
            "nodes of the resolution graph differ from its face vertices".into(),
        ));
    }
    let zke = &zk - &Cycle::reduced(n);
    if zke.0.iter().any(|&x| x < 0) {
        return Err(Error::Invariant(format!("Z_K - E = {zke} is not effective")));
    }
    let mut trace = SequenceTrace {
        zk: zk.clone(),
        zbar: vec![Cycle::zero(n)],
        full: vec![Cycle::zero(n)],
        chosen: Vec::new(),
        kinds: Vec::new(),
        pairings: Vec::new(),
        costs: Vec::new(),
        partitions: Vec::new(),
        ties: 0,
    };
    let push = |trace: &mut SequenceTrace, v: usize, kind: StepKind| {
        let z = trace.full.last().expect("nonempty").clone();
        let p = g.dot_e(&z, v);
        let mut next = z;
        next[v] += 1;
        trace.chosen.push(v);
        trace.kinds.push(kind);
        trace.pairings.push(p);
        trace.costs.push((1 - p).max(0) as u64);
        trace.full.push(next);
    };
    let budget: i64 = zke.0.iter().sum();
    let mut zbar = Cycle::zero(n);
    while zbar != zke {
        let (v, kind) = if trace.chosen.is_empty() {
            let v = (0..n)
                .find(|&v| nodes[v] && zke[v] > 0)
                .ok_or_else(|| Error::Invariant("no node in the support of Z_K - E".into()))?;
            (v, StepKind::Initial)
        } else {
            let c = ratio_choice(g, &zke, &zbar)
                .ok_or_else(|| Error::Invariant(format!("ratio test makes no choice at {zbar}")))?;
            if c.candidates > 1 {
                trace.ties += 1;
            }
            if zbar[c.vertex] >= zke[c.vertex] {
                return Err(Error::Invariant(format!(
                    "ratio test chose {} outside the support of Z_K - E - zbar",
                    g.ids()[c.vertex]
                )));
            }
            (c.vertex, StepKind::Ratio)
        };
        push(&mut trace, v, kind);
        let mut x = trace.full.last().expect("nonempty").clone();
        let added = completion_from(g, &nodes, &mut x, Some(&zke))?;
        for u in added {
            push(&mut trace, u, StepKind::Laufer);
        }
        let target = trace.full.last().expect("nonempty").clone();
        // the loop gives the smallest admissible cycle above zbar + E_v,
        // which dominates c(zbar + E_v)
        if !complete(g, &nodes, &target)?.le(&target) {
            return Err(Error::Invariant(format!(
                "completion after {} lies below c(l)",
                g.ids()[v]
            )));
        }
        if trace.chosen.len() as i64 > budget {
            return Err(Error::Invariant("sequence overshoots Z_K - E".into()));
        }
        zbar = target;
        trace.zbar.push(zbar.clone());
    }
    trace.partitions = partitions(eg, d, &trace)?;
    Ok(trace)
}

/// Diagnostics of one node step `zbar_i -> zbar_i + E_{v(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeStepCheck {
    pub step: usize,
    pub vertex: usize,
    pub face: usize,
    pub pairing: i64,
    pub points: usize,
    /// The constant `c` of the edge functionals; `max{0, c + 1}` counts the
    /// lattice points of `F_i^{cn-}`.
    pub lat_constant: i64,
    pub cone_points: usize,
    /// `1 - (E_v, zbar_i) <= |P_i|`.
    pub bound_holds: bool,
    pub collinear: bool,
    /// `P_i` equals the lattice points of `F_i`, `F_i^{nb}` and `F_i^{cn-}`.
    pub polygons_agree: bool,
    /// The face is standard and equals `F^{nb}_v(Z_K - E) + (1,1,1)`.
    pub standard: bool,
    /// The long edge functional and each adjacent one form a basis.
    pub unimodular: bool,
}

impl NodeStepCheck {
    pub fn ok(&self) -> bool {
        self.bound_holds
            && self.collinear
            && self.polygons_agree
            && self.standard
            && self.unimodular
            && self.cone_points as i64 == (self.lat_constant + 1).max(0)
            && self.cone_points == self.points
    }
}

fn is_parallel(a: &P3, b: &P3) -> bool {
    a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 && a[0] * b[1] - a[1] * b[0] == 0
}

fn diff(a: &P3, b: &P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn on_segment(p: &P3, u: &P3, w: &P3) -> bool {
    let d = diff(w, u);
    let q = diff(p, u);
    is_parallel(&d, &q) && dot(&q, &d) >= 0 && dot(&q, &d) <= dot(&d, &d)
}

/// Standardness of a compact face and its agreement with
/// `F^{nb}_v(Z_K - E)` shifted by `(1,1,1)`.
fn face_is_standard(eg: &ExtendedGraph, d: &NewtonDiagram, zke: &Cycle, v: usize, f: usize) -> bool {
    let face = &d.faces[f];
    let points = d.face_lattice_points(f);
    let edges = face.edges();
    let interior = points
        .iter()
        .filter(|p| !edges.iter().any(|(u, w)| on_segment(p, u, w)))
        .count();
    let long_edges = edges.iter().filter(|(u, w)| lattice_length(u, w) > 1).count();
    if interior != 0 || long_edges > 1 {
        return false;
    }
    let g = &eg.core;
    let bound = upper_corner(d);
    let shifted: BTreeSet<P3> = box_points(-1, &bound)
        .into_iter()
        .filter(|p| {
            dot(&eg.nvec[v], p) == zke[v]
                && g.neighbors(v).iter().all(|&w| dot(&eg.nvec[w], p) >= zke[w])
        })
        .map(|p| [p[0] + 1, p[1] + 1, p[2] + 1])
        .collect();
    shifted == points.into_iter().collect()
}

fn node_step_check(
    eg: &ExtendedGraph,
    d: &NewtonDiagram,
    trace: &SequenceTrace,
    zke: &Cycle,
    step: usize,
) -> Result<NodeStepCheck> {
    let g = &eg.core;
    let v = trace.chosen[step];
    let z = &trace.full[step];
    let face = eg
        .face_vertices
        .iter()
        .find(|&&(_, w)| w == v)
        .map(|&(f, _)| f)
        .ok_or_else(|| Error::Invariant(format!("{} is not a face vertex", g.ids()[v])))?;
    let pairing = trace.pairings[step];
    let pi = &trace.partitions[step];
    let nv = eg.nvec[v];
    let level = z[v];
    let nbrs = g.neighbors(v);

    // r_w m_w(zbar) = m_v(zbar) m_w(Z_K-E) / m_v(Z_K-E), as a fraction
    let cone_num = |w: usize| level as i128 * zke[w] as i128;
    let cone_den = zke[v] as i128;
    let ceil_div = |a: i128, b: i128| -> i128 { Integer::div_ceil(&a, &b) };

    let bound = upper_corner(d);
    let plane: Vec<P3> = box_points(0, &bound)
        .into_iter()
        .filter(|p| dot(&nv, p) == level)
        .collect();
    let in_cone = |p: &P3| {
        nbrs.iter()
            .all(|&w| dot(&eg.nvec[w], p) as i128 * cone_den >= cone_num(w))
    };
    let eps: Vec<i128> = nbrs
        .iter()
        .map(|&w| {
            let on_edge = plane
                .iter()
                .any(|p| in_cone(p) && dot(&eg.nvec[w], p) as i128 * cone_den == cone_num(w));
            let strictly_below = cone_num(w) < z[w] as i128 * cone_den;
            i128::from(on_edge && strictly_below)
        })
        .collect();
    let in_cone_minus = |p: &P3| {
        nbrs.iter().zip(&eps).all(|(&w, &e)| {
            dot(&eg.nvec[w], p) as i128 >= ceil_div(cone_num(w), cone_den) + e
        })
    };
    let f_full: BTreeSet<P3> = plane
        .iter()
        .filter(|p| (0..g.len()).all(|w| w == v || dot(&eg.nvec[w], p) >= z[w]))
        .copied()
        .collect();
    let f_nb: BTreeSet<P3> = plane
        .iter()
        .filter(|p| nbrs.iter().all(|&w| dot(&eg.nvec[w], p) >= z[w]))
        .copied()
        .collect();
    let f_cn_minus: BTreeSet<P3> = plane.iter().filter(|p| in_cone_minus(p)).copied().collect();
    let p_set: BTreeSet<P3> = pi.iter().copied().collect();
    let polygons_agree = p_set == f_full && p_set == f_nb && p_set == f_cn_minus;

    // sum_w N_w = -b_v N_v, hence sum_w l_w = -b_v m_v(zbar) - sum_w (ceil + eps)
    let mut sum_n = [0i64; 3];
    for &w in nbrs {
        for k in 0..3 {
            sum_n[k] += eg.nvec[w][k];
        }
    }
    let lambda = -g.selfint(v);
    if (0..3).any(|k| sum_n[k] != lambda * nv[k]) {
        return Err(Error::Invariant(format!(
            "edge functionals at {} do not sum to a multiple of N_v",
            g.ids()[v]
        )));
    }
    let lat_constant = lambda as i128 * level as i128
        - nbrs
            .iter()
            .zip(&eps)
            .map(|(&w, &e)| ceil_div(cone_num(w), cone_den) + e)
            .sum::<i128>();

    let collinear = match pi.as_slice() {
        [] | [_] => true,
        [p0, p1, rest @ ..] => {
            let dir = diff(p1, p0);
            let line = rest.iter().all(|p| is_parallel(&diff(p, p0), &dir));
            let long = d.faces[face]
                .edges()
                .into_iter()
                .map(|(u, w)| (lattice_length(&u, &w), diff(&w, &u)))
                .collect::<Vec<_>>();
            let tmax = long.iter().map(|(t, _)| *t).max().unwrap_or(1);
            line && long
                .iter()
                .any(|(t, e)| (tmax == 1 || *t == tmax) && is_parallel(e, &dir))
        }
    };

    let links: Vec<(usize, usize)> = eg
        .face_links
        .iter()
        .filter(|&&(a, _, _)| a == v)
        .map(|&(_, w, e)| (w, e))
        .collect();
    let unimodular = match links.iter().max_by_key(|(_, e)| (d.edges[*e].t, usize::MAX - *e)) {
        None => false,
        Some(&(w1, e1)) => {
            let (a1, b1) = d.edges[e1].endpoints;
            links
                .iter()
                .filter(|&&(_, e)| e != e1)
                .filter(|&&(_, e)| {
                    let (a, b) = d.edges[e].endpoints;
                    a == a1 || a == b1 || b == a1 || b == b1
                })
                .all(|&(w2, _)| {
                    let m = vec![nv.to_vec(), eg.nvec[w1].to_vec(), eg.nvec[w2].to_vec()];
                    determinant(&m).abs() == BigInt::from(1)
                })
        }
    };

    let points = pi.len();
    Ok(NodeStepCheck {
        step,
        vertex: v,
        face,
        pairing,
        points,
        lat_constant: lat_constant as i64,
        cone_points: f_cn_minus.len(),
        bound_holds: 1 - pairing <= points as i64,
        collinear,
        polygons_agree,
        standard: face_is_standard(eg, d, zke, v, face),
        unimodular,
    })
}

/// Per-step record of the certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub vertex: String,
    pub kind: StepKind,
    pub pairing: i64,
    pub cost: u64,
    pub points: usize,
    pub cumulative_cost: u64,
    pub cumulative_points: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PgCertificate {
    pub pg: u64,
    pub path: LatticePath,
    pub path_cost: u64,
    pub mt_count: u64,
    pub steps: Vec<StepReport>,
    pub node_steps: Vec<NodeStepCheck>,
    /// `(step, vertex)` of ratio steps at leaves, where the pairing is 1.
    pub leaf_steps: Vec<(usize, usize)>,
    pub ties: usize,
}

/// `Z_K - z_{t-j}`, preceded by a zero-cost build of `E` in BFS order.
fn dual_path(g: &PlumbingGraph, trace: &SequenceTrace) -> LatticePath {
    let mut steps = Vec::new();
    if !trace.chosen.is_empty() {
        let mut seen = vec![false; g.len()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            steps.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        steps.extend(trace.chosen.iter().rev());
    }
    LatticePath::new(steps)
}

/// Runs the sequence and certifies `p_g = sum of costs = sum |P_i| = MT count`,
/// together with an optimal path of that cost.
pub fn pg_certificate(eg: &ExtendedGraph, d: &NewtonDiagram) -> Result<PgCertificate> {
    let trace = run_sequence(eg, d)?;
    certify(eg, d, &trace)
}

pub fn certify(eg: &ExtendedGraph, d: &NewtonDiagram, trace: &SequenceTrace) -> Result<PgCertificate> {
    let g = &eg.core;
    let n = g.len();
    let zke = &trace.zk - &Cycle::reduced(n);
    let mut steps = Vec::new();
    let mut node_steps = Vec::new();
    let mut leaf_steps = Vec::new();
    let mut failures = Vec::new();
    let (mut cc, mut cp) = (0u64, 0u64);
    for i in 0..trace.chosen.len() {
        let v = trace.chosen[i];
        let kind = trace.kinds[i];
        let points = trace.partitions[i].len();
        cc += trace.costs[i];
        cp += points as u64;
        steps.push(StepReport {
            vertex: g.ids()[v].clone(),
            kind,
            pairing: trace.pairings[i],
            cost: trace.costs[i],
            points,
            cumulative_cost: cc,
            cumulative_points: cp,
        });
        if trace.costs[i] > points as u64 {
            failures.push(format!("step {i} ({}): cost {} > |P_i| = {points}", g.ids()[v], trace.costs[i]));
        }
        match kind {
            StepKind::Initial => {
                if trace.partitions[i] != [[0, 0, 0]] {
                    failures.push(format!("step {i}: P_0 is not {{(0,0,0)}}"));
                }
            }
            StepKind::Laufer => {
                if !trace.partitions[i].is_empty() || trace.costs[i] != 0 {
                    failures.push(format!("step {i} ({}): completion step is not trivial", g.ids()[v]));
                }
            }
            StepKind::Ratio => match g.degree(v) {
                2 => failures.push(format!("step {i}: ratio test chose the chain vertex {}", g.ids()[v])),
                1 => {
                    leaf_steps.push((i, v));
                    if trace.pairings[i] != 1 {
                        failures.push(format!(
                            "step {i}: leaf {} has pairing {}",
                            g.ids()[v],
                            trace.pairings[i]
                        ));
                    }
                }
                _ if trace.pairings[i] > 0 => {
                    if !trace.partitions[i].is_empty() {
                        failures.push(format!("step {i}: positive pairing but P_i nonempty"));
                    }
                }
                _ => {
                    let c = node_step_check(eg, d, trace, &zke, i)?;
                    if !c.ok() {
                        failures.push(format!("step {i} ({}): {c:?}", g.ids()[v]));
                    }
                    node_steps.push(c);
                }
            },
        }
    }

    // the P_i partition the shifted lattice points of Gamma_-
    let mut union = BTreeSet::new();
    for p in trace.partitions.iter().flatten() {
        if !union.insert(*p) {
            failures.push(format!("point {p:?} lies in two partition sets"));
        }
    }
    let bound = upper_corner(d);
    let expected: BTreeSet<P3> = box_points(1, &bound)
        .into_iter()
        .filter(|q| d.in_gamma_minus(q))
        .map(|q| [q[0] - 1, q[1] - 1, q[2] - 1])
        .collect();
    if union != expected {
        failures.push(format!(
            "partition union has {} points, Gamma_- has {}",
            union.len(),
            expected.len()
        ));
    }

    let pg = trace.total_cost();
    let mt = mt_count(d);
    if pg != trace.total_points() || pg != mt {
        failures.push(format!(
            "totals disagree: costs {pg}, points {}, Merle-Teissier {mt}",
            trace.total_points()
        ));
    }
    let path = dual_path(g, trace);
    let path_cost = path_cost(g, &trace.zk, &path)?;
    if path_cost != pg {
        failures.push(format!("dual path costs {path_cost}, expected {pg}"));
    }
    if !failures.is_empty() {
        return Err(Error::Invariant(failures.join("; ")));
    }
    Ok(PgCertificate {
        pg,
        path,
        path_cost,
        mt_count: mt,
        steps,
        node_steps,
        leaf_steps,
        ties: trace.ties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::newton::{build_diagram, Support};
    use crate::oka::build_resolution;

    fn setup(text: &str) -> (NewtonDiagram, ExtendedGraph) {
        let d = build_diagram(&Support::parse(text).unwrap()).unwrap();
        let eg = build_resolution(&d).unwrap();
        (d, eg)
    }

    #[test]
    fn completion_fixed_points() {
        let (_, eg) = setup(examples::TWO_FACE_SUPPORT);
        let g = &eg.core;
        let nodes = g.nodes();
        let zke = &g.anticanonical().unwrap() - &Cycle::reduced(g.len());
        assert_eq!(complete(g, &nodes, &zke).unwrap(), zke);
        assert!(complete(g, &nodes, &Cycle::zero(g.len())).unwrap().is_zero());
    }

    #[test]
    fn completion_on_a_chain_is_minus_e() {
        let a3 = PlumbingGraph::parse("v a -2\nv b -2\nv c -2\ne a b\ne b c").unwrap();
        let c = complete(&a3, &a3.nodes(), &Cycle::zero(3)).unwrap();
        assert_eq!(c.0, vec![-1, -1, -1]);
    }

    #[test]
    fn ratio_test_excludes_constant_ratio() {
        let (_, eg) = setup(examples::TWO_FACE_SUPPORT);
        let g = &eg.core;
        let zke = &g.anticanonical().unwrap() - &Cycle::reduced(g.len());
        assert!(ratio_choice(g, &zke, &zke).is_none());
        assert!(ratio_choice(g, &zke, &Cycle::zero(g.len())).is_none());
    }

    #[test]
    fn two_face_certificate() {
        let (d, eg) = setup(examples::TWO_FACE_SUPPORT);
        let cert = pg_certificate(&eg, &d).unwrap();
        assert_eq!(cert.pg, 5);
        assert_eq!(cert.mt_count, 5);
        assert_eq!(cert.path_cost, 5);
        assert!(!cert.node_steps.is_empty());
    }

    #[test]
    fn brieskorn_certificates() {
        let (d, eg) = setup(examples::BRIESKORN_2_3_13);
        assert_eq!(pg_certificate(&eg, &d).unwrap().pg, 2);
        let (d, eg) = setup(examples::BRIESKORN_2_3_5);
        let cert = pg_certificate(&eg, &d).unwrap();
        assert_eq!((cert.pg, cert.path.len()), (0, 0));
    }

    #[test]
    fn trace_shape() {
        let (d, eg) = setup(examples::TWO_FACE_SUPPORT);
        let t = run_sequence(&eg, &d).unwrap();
        let n = eg.core.len();
        assert!(t.full[0].is_zero());
        assert_eq!(t.full.last().unwrap(), &(&t.zk - &Cycle::reduced(n)));
        for w in t.full.windows(2) {
            let dlt = &w[1] - &w[0];
            assert_eq!(dlt.0.iter().sum::<i64>(), 1);
            assert!(dlt.0.iter().all(|&x| x >= 0));
        }
        assert_eq!(t.partitions[0], vec![[0, 0, 0]]);
    }
}
