//! Monotone lattice paths from `0` to `Z_K` and their `eu(H^0)` cost.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{walk_box, LatticeBox};
use crate::plumbing::{Cycle, PlumbingGraph};
use crate::reduction::{laufer_off, ReducedLevels};

/// A path `l_0 = 0, l_{i+1} = l_i + E_{v(i)}` stored as its step list.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LatticePath {
    pub steps: Vec<usize>,
}

impl LatticePath {
    pub fn new(steps: Vec<usize>) -> Self {
        LatticePath { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Partial sums `l_0, ..., l_t`.
    pub fn points(&self, n: usize) -> Vec<Cycle> {
        let mut l = Cycle::zero(n);
        let mut out = vec![l.clone()];
        for &v in &self.steps {
            l[v] += 1;
            out.push(l.clone());
        }
        out
    }
}

/// Per-step costs `max(0, (l_i, E_{v(i)}) - 1)` of a path from `0` to `zk`.
pub fn step_costs(g: &PlumbingGraph, zk: &Cycle, p: &LatticePath) -> Result<Vec<u64>> {
    if zk.len() != g.len() {
        return Err(Error::IndexMismatch {
            expected: g.len(),
            got: zk.len(),
        });
    }
    let mut l = Cycle::zero(g.len());
    let mut costs = Vec::with_capacity(p.len());
    for (i, &v) in p.steps.iter().enumerate() {
        if v >= g.len() {
            return Err(Error::InvalidPath(format!("step {i} names vertex {v}")));
        }
        costs.push((g.dot_e(&l, v) - 1).max(0) as u64);
        l[v] += 1;
        if l[v] > zk[v] {
            return Err(Error::InvalidPath(format!(
                "step {i} leaves the rectangle at {}",
                g.ids()[v]
            )));
        }
    }
    if &l != zk {
        return Err(Error::InvalidPath(format!("path ends at {l}, not at {zk}")));
    }
    Ok(costs)
}

/// `eu(H^0(path)) = sum_i max(0, chi(l_i) - chi(l_{i+1}))`.
pub fn path_cost(g: &PlumbingGraph, zk: &Cycle, p: &LatticePath) -> Result<u64> {
    Ok(step_costs(g, zk, p)?.iter().sum())
}

/// Exact minimum of [`path_cost`] over all monotone paths from `0` to `zk`.
///
/// The rectangle is a DAG whose index order is topological, so a single
/// sweep computes all distances; the cost of entering `l` from `l - E_v` is
/// `max(0, (l - E_v, E_v) - 1)`. Among optimal predecessors the one with the
/// smallest vertex index is kept, which makes the witness deterministic.
pub fn min_path(g: &PlumbingGraph, zk: &Cycle, budget: u64) -> Result<(u64, LatticePath)> {
    if zk.len() != g.len() {
        return Err(Error::IndexMismatch {
            expected: g.len(),
            got: zk.len(),
        });
    }
    let bx = LatticeBox::new(&zk.0, budget)?;
    let n = g.len();
    let mut dist = vec![u32::MAX; bx.len()];
    let mut pred = vec![u8::MAX; bx.len()];
    let strides: Vec<usize> = (0..n).map(|v| bx.stride(v)).collect();
    let b: Vec<i64> = g.selfints().to_vec();
    walk_box(g, &bx, |idx, coords, _, y| {
        if idx == 0 {
            dist[0] = 0;
            return;
        }
        let mut best = u32::MAX;
        let mut arg = u8::MAX;
        for v in 0..n {
            if coords[v] == 0 {
                continue;
            }
            let from = idx - strides[v];
            // (l - E_v, E_v) = (l, E_v) - b_v
            let c = (y[v] - b[v] - 1).max(0) as u32;
            let d = dist[from].saturating_add(c);
            if d < best {
                best = d;
                arg = v as u8;
            }
        }
        dist[idx] = best;
        pred[idx] = arg;
    });
    let mut steps = Vec::new();
    let mut idx = bx.len() - 1;
    while idx != 0 {
        let v = pred[idx] as usize;
        steps.push(v);
        idx -= strides[v];
    }
    steps.reverse();
    Ok((dist[bx.len() - 1] as u64, LatticePath::new(steps)))
}

/// A good path through the reduced rectangle, lifted to `[0, Z_K]`.
///
/// The optimal path of the reduced rectangle (step cost
/// `max(0, (x(x), E_v) - 1)` along bad vertex `v`) is lifted by inserting the
/// Laufer steps between consecutive cycles `x(x)` and finished greedily up to
/// `Z_K`. The returned cost is that of the lifted path, recomputed with
/// [`path_cost`], so it is an upper bound for [`min_path`].
pub fn reduced_path_bound(
    g: &PlumbingGraph,
    zk: &Cycle,
    red: &ReducedLevels,
) -> Result<(u64, LatticePath)> {
    let bx = red.levels.lattice_box();
    let k = red.bad.len();
    let mut dist = vec![u64::MAX; bx.len()];
    let mut pred = vec![usize::MAX; bx.len()];
    let mut coords = vec![0i64; k];
    dist[0] = 0;
    for idx in 1..bx.len() {
        bx.coords_into(idx, &mut coords);
        for j in 0..k {
            if coords[j] == 0 {
                continue;
            }
            let from = idx - bx.stride(j);
            let x = Cycle(red.lift_slice(from).to_vec());
            let c = (g.dot_e(&x, red.bad[j]) - 1).max(0) as u64;
            let d = dist[from] + c;
            if d < dist[idx] {
                dist[idx] = d;
                pred[idx] = j;
            }
        }
    }
    let mut reduced_steps = Vec::new();
    let mut idx = bx.len() - 1;
    while idx != 0 {
        let j = pred[idx];
        reduced_steps.push(j);
        idx -= bx.stride(j);
    }
    reduced_steps.reverse();

    let mut is_bad = vec![false; g.len()];
    for &v in &red.bad {
        is_bad[v] = true;
    }
    let mut steps = Vec::new();
    let mut x = Cycle::zero(g.len());
    let extend = |x: &mut Cycle, steps: &mut Vec<usize>| -> Result<()> {
        let before = x.clone();
        laufer_off(g, &is_bad, zk, x)?;
        // record the Laufer steps in a valid order
        let mut cur = before;
        while &cur != x {
            let u = (0..g.len())
                .find(|&u| !is_bad[u] && cur[u] < x[u] && g.dot_e(&cur, u) > 0)
                .ok_or_else(|| Error::Invariant("no Laufer step available".into()))?;
            cur[u] += 1;
            steps.push(u);
        }
        Ok(())
    };
    extend(&mut x, &mut steps)?;
    for j in reduced_steps {
        let v = red.bad[j];
        x[v] += 1;
        steps.push(v);
        extend(&mut x, &mut steps)?;
    }
    // from x(Z_K|B) to Z_K, one vertex at a time
    let mut cur = x;
    while &cur != zk {
        let u = (0..g.len())
            .filter(|&u| cur[u] < zk[u])
            .min_by_key(|&u| (g.dot_e(&cur, u), u))
            .expect("cur < zk");
        cur[u] += 1;
        steps.push(u);
    }
    let path = LatticePath::new(steps);
    let cost = path_cost(g, zk, &path)?;
    Ok((cost, path))
}
