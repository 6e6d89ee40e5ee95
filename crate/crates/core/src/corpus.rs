//! Seeded random corpora of plumbing trees and Newton diagrams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use crate::newton::{build_diagram, check_isolated, check_rhs, classify_faces, NewtonDiagram, Support};
use crate::oka::{build_resolution, ExtendedGraph};
use crate::plumbing::isomorphic;
use crate::{Cycle, PlumbingGraph};

/// Random negative definite, numerically Gorenstein trees with at most
/// `max_vertices` vertices and `0 <= Z_K <= max_zk`, pairwise distinct.
pub fn random_trees(seed: u64, count: usize, max_vertices: usize, max_zk: i64) -> Vec<(PlumbingGraph, Cycle)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(PlumbingGraph, Cycle)> = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=max_vertices);
        let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let selfint: Vec<i64> = (0..n)
            .map(|_| if rng.gen_bool(0.15) { -1 } else { rng.gen_range(-7..=-2) })
            .collect();
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
        let Ok(g) = PlumbingGraph::new(ids, selfint, edges) else { continue };
        if !g.is_negative_definite() {
            continue;
        }
        let Ok(zk) = g.anticanonical() else { continue };
        if zk.0.iter().any(|&x| x < 0 || x > max_zk) || zk.is_zero() {
            continue;
        }
        if !out.iter().any(|(h, _)| isomorphic(h, &g)) {
            out.push((g, zk));
        }
    }
    out
}

/// Random Newton non-degenerate diagrams with rational homology sphere
/// links, between `min_faces` and `max_faces` compact faces, and
/// `0 < p_g <= max_pg`, pairwise distinct up to permuting coordinates.
pub fn random_diagrams(
    seed: u64,
    count: usize,
    min_faces: usize,
    max_faces: usize,
    max_pg: u64,
) -> Vec<(NewtonDiagram, ExtendedGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    while out.len() < count {
        let mut pts = vec![
            [rng.gen_range(2..12), 0, 0],
            [0, rng.gen_range(2..12), 0],
            [0, 0, rng.gen_range(2..12)],
        ];
        for _ in 0..rng.gen_range(0..6) {
            let k = rng.gen_range(0..3);
            let mut p = [rng.gen_range(1..8), rng.gen_range(1..8), rng.gen_range(1..8)];
            p[k] = 0;
            pts.push(p);
        }
        let Ok(s) = Support::new(pts) else { continue };
        let Ok(d) = build_diagram(&s) else { continue };
        if !check_isolated(&d) || !check_rhs(&d) || !(min_faces..=max_faces).contains(&d.compact_faces().len()) {
            continue;
        }
        match classify_faces(&d) {
            Ok(c) if !c.special => {}
            _ => continue,
        }
        let Ok(eg) = build_resolution(&d) else { continue };
        if !eg.bare_arrows.is_empty() {
            continue;
        }
        let pg = crate::newton::mt_count(&d);
        if pg == 0 || pg > max_pg {
            continue;
        }
        if seen.insert(canonical_vertices(&d)) {
            out.push((d, eg));
        }
    }
    out
}

/// Sorted vertices, minimized over the permutations of the coordinates.
pub fn canonical_vertices(d: &NewtonDiagram) -> Vec<[i64; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS
        .iter()
        .map(|s| {
            let mut v: Vec<[i64; 3]> = d.vertices.iter().map(|p| [p[s[0]], p[s[1]], p[s[2]]]).collect();
            v.sort();
            v
        })
        .min()
        .expect("six permutations")
}
