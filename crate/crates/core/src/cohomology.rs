//! Lattice cohomology of a weighted cubical grid.
//!
//! A [`CubeComplexLevels`] is a rectangle `[0, top]` with an integer weight on
//! every lattice point. A cube gets the maximum weight of its vertices and
//! `S_N` is the union of the cubes of weight at most `N`. The table of reduced
//! Betti numbers of the `S_N` determines `m`, `eu(H^0)` and `eu(H^*)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{walk_box, LatticeBox};
use crate::plumbing::{Cycle, PlumbingGraph};

/// Weighted lattice points of a rectangle; cube weights are derived.
#[derive(Debug, Clone)]
pub struct CubeComplexLevels {
    bx: LatticeBox,
    weights: Vec<i64>,
}

impl CubeComplexLevels {
    pub fn new(top: &[i64], weights: Vec<i64>, budget: u64) -> Result<Self> {
        let bx = LatticeBox::new(top, budget)?;
        if weights.len() != bx.len() {
            return Err(Error::IndexMismatch {
                expected: bx.len(),
                got: weights.len(),
            });
        }
        Ok(CubeComplexLevels { bx, weights })
    }

    pub fn lattice_box(&self) -> &LatticeBox {
        &self.bx
    }

    pub fn dim(&self) -> usize {
        self.bx.dim()
    }

    pub fn top(&self) -> &[i64] {
        self.bx.top()
    }

    pub fn vertex_weight(&self, idx: usize) -> i64 {
        self.weights[idx]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Axes along which a cube based at `coords` may extend.
    fn free_axes(&self, coords: &[i64]) -> u32 {
        let mut mask = 0u32;
        for (i, (&c, &t)) in coords.iter().zip(self.bx.top()).enumerate() {
            if c < t {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Weight of the cube spanned by the axes in `mask` at base point `base`:
    /// the maximum of the vertex weights.
    pub fn cube_weight(&self, base: usize, mask: u32) -> i64 {
        let mut best = i64::MIN;
        let mut sub = mask;
        loop {
            let mut idx = base;
            for i in 0..self.dim() {
                if sub >> i & 1 == 1 {
                    idx += self.bx.stride(i);
                }
            }
            best = best.max(self.weights[idx]);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        best
    }

    /// Calls `f(base, mask)` for every cube of the rectangle.
    fn for_each_cube(&self, mut f: impl FnMut(usize, u32)) {
        let mut coords = vec![0i64; self.dim()];
        for base in 0..self.bx.len() {
            self.bx.coords_into(base, &mut coords);
            let free = self.free_axes(&coords);
            let mut sub = free;
            loop {
                f(base, sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
    }

    pub fn min_weight(&self) -> i64 {
        self.weights.iter().copied().min().unwrap_or(0)
    }

    pub fn max_weight(&self) -> i64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }
}

/// Weights `chi(l)` on the rectangle `[0, Z_K]` of a numerically Gorenstein
/// graph.
pub fn build_levels(g: &PlumbingGraph, zk: &Cycle, budget: u64) -> Result<CubeComplexLevels> {
    if zk.len() != g.len() {
        return Err(Error::IndexMismatch {
            expected: g.len(),
            got: zk.len(),
        });
    }
    let bx = LatticeBox::new(&zk.0, budget)?;
    let mut weights = vec![0i64; bx.len()];
    walk_box(g, &bx, |idx, _, chi, _| weights[idx] = chi);
    Ok(CubeComplexLevels { bx, weights })
}

/// Reduced Betti numbers of the sublevel complexes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    /// Minimal weight.
    pub m: i64,
    /// `rows[k]` holds `[b_0, b_1, ...]` (reduced) for `N = m + k`.
    pub rows: Vec<Vec<u64>>,
    /// First level at which `S_N` is the whole rectangle.
    pub stabilized_at: i64,
}

impl CohomologyTable {
    /// Reduced Betti numbers of `S_N`; empty below `m`.
    pub fn row(&self, n: i64) -> Vec<u64> {
        if n < self.m {
            return Vec::new();
        }
        let k = (n - self.m) as usize;
        match self.rows.get(k) {
            Some(r) => r.clone(),
            None => vec![0; self.rows.first().map_or(1, Vec::len)],
        }
    }

    /// `sum_N b_q(S_N)`, i.e. the rank of the reduced `H^q`.
    pub fn rank(&self, q: usize) -> u64 {
        self.rows.iter().map(|r| r.get(q).copied().unwrap_or(0)).sum()
    }

    pub fn eu_h0(&self) -> i64 {
        -self.m + self.rank(0) as i64
    }

    pub fn eu_star(&self) -> i64 {
        let q_max = self.rows.first().map_or(0, Vec::len);
        let alt: i64 = (0..q_max)
            .map(|q| {
                let r = self.rank(q) as i64;
                if q % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum();
        -self.m + alt
    }
}

/// `sw = -eu(H^*) - (K^2 + |V|)/8`.
pub fn sw_invariant(t: &CohomologyTable, k2v: &BigRational) -> BigRational {
    BigRational::from_integer(BigInt::from(-t.eu_star())) - k2v / BigRational::from_integer(8.into())
}

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (ra, rb) = if self.rank[ra as usize] < self.rank[rb as usize] {
            (rb, ra)
        } else {
            (ra, rb)
        };
        self.parent[rb as usize] = ra;
        if self.rank[ra as usize] == self.rank[rb as usize] {
            self.rank[ra as usize] += 1;
        }
        true
    }
}

/// Number of components of `S_N` for every `N` in `m..=max`, by adding
/// vertices and edges in weight order.
fn components_per_level(levels: &CubeComplexLevels, m: i64, top: i64) -> Vec<u64> {
    let len = levels.bx.len();
    let width = (top - m + 1) as usize;
    let mut new_vertices = vec![0i64; width];
    let mut merges_by_level: Vec<Vec<(u32, u32)>> = vec![Vec::new(); width];
    let mut coords = vec![0i64; levels.dim()];
    for idx in 0..len {
        let w = levels.weights[idx];
        new_vertices[(w - m) as usize] += 1;
        levels.bx.coords_into(idx, &mut coords);
        for i in 0..levels.dim() {
            if coords[i] < levels.top()[i] {
                let j = idx + levels.bx.stride(i);
                let we = w.max(levels.weights[j]);
                merges_by_level[(we - m) as usize].push((idx as u32, j as u32));
            }
        }
    }
    let mut uf = UnionFind::new(len);
    let mut comps = 0i64;
    let mut out = Vec::with_capacity(width);
    for k in 0..width {
        comps += new_vertices[k];
        for &(a, b) in &merges_by_level[k] {
            if uf.union(a, b) {
                comps -= 1;
            }
        }
        out.push(comps as u64);
    }
    out
}

/// `cells[k][q]`: number of `q`-cubes of weight `m + k`.
fn cube_histogram(levels: &CubeComplexLevels, m: i64, top: i64) -> Vec<Vec<i64>> {
    let s = levels.dim();
    let width = (top - m + 1) as usize;
    let mut hist = vec![vec![0i64; s + 1]; width];
    levels.for_each_cube(|base, mask| {
        let w = levels.cube_weight(base, mask);
        hist[(w - m) as usize][mask.count_ones() as usize] += 1;
    });
    hist
}

type Column = Vec<(u32, BigRational)>;

fn axpy(col: &Column, factor: &BigRational, other: &Column) -> Column {
    // col - factor * other, both sorted by row
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < other.len() {
        if j == other.len() || (i < col.len() && col[i].0 < other[j].0) {
            out.push(col[i].clone());
            i += 1;
        } else if i == col.len() || other[j].0 < col[i].0 {
            out.push((other[j].0, -(factor * &other[j].1)));
            j += 1;
        } else {
            let v = &col[i].1 - factor * &other[j].1;
            if !v.is_zero() {
                out.push((col[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Betti numbers `b_q(S_N)` (unreduced, `q >= 1`) for all levels via
/// persistent homology over the rationals.
fn persistent_betti(levels: &CubeComplexLevels, m: i64, top: i64) -> Vec<Vec<u64>> {
    let s = levels.dim();
    let mut cells: Vec<(i64, u32, u32, u32)> = Vec::new();
    levels.for_each_cube(|base, mask| {
        cells.push((
            levels.cube_weight(base, mask),
            mask.count_ones(),
            base as u32,
            mask,
        ));
    });
    cells.sort_unstable();
    let position: HashMap<(u32, u32), u32> = cells
        .iter()
        .enumerate()
        .map(|(k, &(_, _, b, mk))| ((b, mk), k as u32))
        .collect();

    let mut reduced: Vec<Option<Column>> = vec![None; cells.len()];
    let mut pivot_owner: HashMap<u32, u32> = HashMap::new();
    let mut killed_at: Vec<Option<i64>> = vec![None; cells.len()];
    for (k, &(w, dim, base, mask)) in cells.iter().enumerate() {
        if dim == 0 {
            continue;
        }
        let mut col: Column = Vec::with_capacity(2 * dim as usize);
        let mut sign = 1i64;
        for i in 0..s {
            if mask >> i & 1 == 0 {
                continue;
            }
            let face = mask & !(1 << i);
            let up = base as usize + levels.bx.stride(i);
            let hi = position[&(up as u32, face)];
            let lo = position[&(base, face)];
            col.push((hi, BigRational::from_integer(sign.into())));
            col.push((lo, BigRational::from_integer((-sign).into())));
            sign = -sign;
        }
        col.sort_by_key(|e| e.0);
        while let Some(&(low, _)) = col.last() {
            match pivot_owner.get(&low) {
                Some(&owner) => {
                    let other = reduced[owner as usize].as_ref().expect("pivot column");
                    let factor = &col.last().unwrap().1 / &other.last().unwrap().1;
                    col = axpy(&col, &factor, other);
                }
                None => break,
            }
        }
        if let Some(&(low, _)) = col.last() {
            pivot_owner.insert(low, k as u32);
            killed_at[low as usize] = Some(w);
            reduced[k] = Some(col);
        }
    }

    let width = (top - m + 1) as usize;
    let mut out = vec![vec![0u64; s.max(1)]; width];
    for (k, &(w, dim, _, _)) in cells.iter().enumerate() {
        let dim = dim as usize;
        if dim == 0 || dim >= s || reduced[k].is_some() {
            continue;
        }
        let end = killed_at[k].map_or(width as i64, |d| d - m);
        for level in (w - m)..end {
            out[level as usize][dim] += 1;
        }
    }
    out
}

/// Computes the reduced Betti table of the sublevel filtration.
///
/// `b_0` comes from union-find. For grids of dimension at most two the
/// subcomplexes are planar, so `H_2 = 0` and `b_1` follows from the Euler
/// characteristic; in higher dimension the remaining ranks come from an exact
/// persistence computation. Every level is checked against the
/// Euler-Poincare identity.
pub fn cohomology_table(levels: &CubeComplexLevels) -> Result<CohomologyTable> {
    let m = levels.min_weight();
    let top = levels.max_weight();
    let s = levels.dim();
    let comps = components_per_level(levels, m, top);
    let hist = cube_histogram(levels, m, top);
    let higher = if s >= 3 {
        Some(persistent_betti(levels, m, top))
    } else {
        None
    };

    let mut rows = Vec::new();
    let mut cumulative = vec![0i64; s + 1];
    for k in 0..(top - m + 1) as usize {
        for q in 0..=s {
            cumulative[q] += hist[k][q];
        }
        let euler: i64 = cumulative
            .iter()
            .enumerate()
            .map(|(q, &c)| if q % 2 == 0 { c } else { -c })
            .sum();
        let mut row = vec![0u64; s.max(1)];
        row[0] = comps[k] - 1;
        match &higher {
            None => {
                if s == 2 {
                    let b1 = row[0] as i64 - (euler - 1);
                    if b1 < 0 {
                        return Err(Error::Invariant(format!(
                            "negative first Betti number at level {}",
                            m + k as i64
                        )));
                    }
                    row[1] = b1 as u64;
                }
            }
            Some(h) => row[1..s].copy_from_slice(&h[k][1..s]),
        }
        let alt: i64 = row
            .iter()
            .enumerate()
            .map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if alt != euler - 1 {
            return Err(Error::Invariant(format!(
                "Euler-Poincare mismatch at level {}: {} vs {}",
                m + k as i64,
                alt,
                euler - 1
            )));
        }
        rows.push(row);
    }
    if rows.last().is_some_and(|r| r.iter().any(|&b| b != 0)) {
        return Err(Error::Invariant("full rectangle is not acyclic".into()));
    }
    Ok(CohomologyTable {
        m,
        rows,
        stabilized_at: top,
    })
}

/// `b_q` of the whole filtration at every level, straight from a
/// persistence computation. Used to cross-check the fast path.
pub fn cohomology_table_persistent(levels: &CubeComplexLevels) -> Result<CohomologyTable> {
    let m = levels.min_weight();
    let top = levels.max_weight();
    let s = levels.dim();
    let comps = components_per_level(levels, m, top);
    let higher = persistent_betti(levels, m, top);
    let rows: Vec<Vec<u64>> = (0..(top - m + 1) as usize)
        .map(|k| {
            let mut row = vec![0u64; s.max(1)];
            row[0] = comps[k] - 1;
            if s >= 2 {
                row[1..s].copy_from_slice(&higher[k][1..s]);
            }
            row
        })
        .collect();
    Ok(CohomologyTable {
        m,
        rows,
        stabilized_at: top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use num_traits::One;

    fn grid(top: &[i64], w: &[i64]) -> CubeComplexLevels {
        CubeComplexLevels::new(top, w.to_vec(), 1 << 20).unwrap()
    }

    #[test]
    fn single_point() {
        let a1 = PlumbingGraph::parse("v 1 -2").unwrap();
        let lv = build_levels(&a1, &Cycle::zero(1), 10).unwrap();
        assert_eq!(lv.lattice_box().len(), 1);
        assert_eq!(lv.vertex_weight(0), 0);
        let t = cohomology_table(&lv).unwrap();
        assert_eq!(t.m, 0);
        assert_eq!(t.rows, vec![vec![0]]);
        assert_eq!((t.eu_h0(), t.eu_star()), (0, 0));
    }

    #[test]
    fn e8_sw() {
        let e8 = PlumbingGraph::parse(examples::E8_GRAPH).unwrap();
        let lv = build_levels(&e8, &Cycle::zero(8), 10).unwrap();
        let t = cohomology_table(&lv).unwrap();
        let sw = sw_invariant(&t, &BigRational::from_integer(8.into()));
        assert_eq!(sw, -BigRational::one());
    }

    #[test]
    fn two_components_on_a_segment() {
        // weights 0, 2, 0 on a segment: two components at N = 0, 1
        let lv = grid(&[2], &[0, 2, 0]);
        let t = cohomology_table(&lv).unwrap();
        assert_eq!(t.m, 0);
        assert_eq!(t.rows, vec![vec![1], vec![1], vec![0]]);
        assert_eq!(t.eu_h0(), 2);
        assert_eq!(t.stabilized_at, 2);
    }

    #[test]
    fn a_loop_in_the_plane() {
        // 3x3 grid with a high center: S_0 is a square loop
        let w = [0, 0, 0, 0, 5, 0, 0, 0, 0];
        let t = cohomology_table(&grid(&[2, 2], &w)).unwrap();
        assert_eq!(t.row(0), vec![0, 1]);
        assert_eq!(t.row(4), vec![0, 1]);
        assert_eq!(t.row(5), vec![0, 0]);
        assert_eq!(t.rank(1), 5);
        assert_eq!(t.eu_star(), -5);
    }

    #[test]
    fn hollow_cube_has_h2() {
        // 3x3x3 grid, center vertex high: S_0 is a hollow cube, b_2 = 1
        let mut w = vec![0i64; 27];
        w[13] = 1;
        let lv = grid(&[2, 2, 2], &w);
        let t = cohomology_table(&lv).unwrap();
        assert_eq!(t.row(0), vec![0, 0, 1]);
        assert_eq!(t.row(1), vec![0, 0, 0]);
        assert_eq!(t.eu_star(), 1);
        assert_eq!(cohomology_table_persistent(&lv).unwrap().rows, t.rows);
    }

    #[test]
    fn planar_fast_path_matches_persistence() {
        let w = [0, 3, 1, 2, -1, 2, 0, 4, 0, 1, 3, -1];
        let lv = grid(&[3, 2], &w);
        let a = cohomology_table(&lv).unwrap();
        let b = cohomology_table_persistent(&lv).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.m, -1);
    }

    #[test]
    fn face_weights_do_not_exceed_cube_weights() {
        let w: Vec<i64> = (0..27).map(|i| (i * 7 % 5) as i64 - 2).collect();
        let lv = grid(&[2, 2, 2], &w);
        lv.for_each_cube(|base, mask| {
            let cw = lv.cube_weight(base, mask);
            for i in 0..3 {
                if mask >> i & 1 == 1 {
                    let f = mask & !(1 << i);
                    assert!(lv.cube_weight(base, f) <= cw);
                    assert!(lv.cube_weight(base + lv.bx.stride(i), f) <= cw);
                }
            }
        });
    }
}
