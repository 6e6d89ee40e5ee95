//! Rectangular lattice boxes `[0, top]` with a mixed-radix index.
//!
//! The first coordinate is the most significant digit, so index order is the
//! lexicographic order of coordinate vectors.

use crate::error::{Error, Result};
use crate::plumbing::PlumbingGraph;

/// Default cap on the number of lattice points any enumeration may visit.
pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

/// Number of lattice points of `[0, top]` (zero if some entry is negative).
pub fn box_size(top: &[i64]) -> u128 {
    top.iter()
        .map(|&t| if t < 0 { 0 } else { t as u128 + 1 })
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .unwrap_or(u128::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBox {
    top: Vec<i64>,
    strides: Vec<usize>,
    len: usize,
}

impl LatticeBox {
    pub fn new(top: &[i64], budget: u64) -> Result<Self> {
        if top.iter().any(|&t| t < 0) {
            return Err(Error::InvalidArgument(
                "box corner has a negative entry".into(),
            ));
        }
        let states = box_size(top);
        if states > budget as u128 {
            return Err(Error::BoxTooLarge { states, budget });
        }
        let mut strides = vec![1usize; top.len()];
        for i in (0..top.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (top[i + 1] as usize + 1);
        }
        Ok(LatticeBox {
            top: top.to_vec(),
            strides,
            len: states as usize,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        coords.len() == self.top.len()
            && coords.iter().zip(&self.top).all(|(&c, &t)| 0 <= c && c <= t)
    }

    pub fn index(&self, coords: &[i64]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub fn coords_into(&self, mut idx: usize, out: &mut [i64]) {
        for (o, &s) in out.iter_mut().zip(&self.strides) {
            *o = (idx / s) as i64;
            idx %= s;
        }
    }

    pub fn coords(&self, idx: usize) -> Vec<i64> {
        let mut out = vec![0; self.top.len()];
        self.coords_into(idx, &mut out);
        out
    }
}

/// Visits every point of `bx` in index order, passing
/// `(index, coords, chi, y)` where `y[v] = (l, E_v)`.
///
/// `chi` is `-(l, l + K)/2` for the canonical class of `g`; it is updated
/// incrementally through `chi(l + E_v) = chi(l) + 1 - (l, E_v)`.
pub(crate) fn walk_box<F>(g: &PlumbingGraph, bx: &LatticeBox, mut visit: F)
where
    F: FnMut(usize, &[i64], i64, &[i64]),
{
    let n = bx.dim();
    debug_assert_eq!(n, g.len());
    let mut coords = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut chi = 0i64;
    let top = bx.top();
    for idx in 0..bx.len() {
        visit(idx, &coords, chi, &y);
        if idx + 1 == bx.len() {
            break;
        }
        let mut axis = n - 1;
        while coords[axis] == top[axis] {
            let k = top[axis];
            let b = g.selfint(axis);
            // chi(l - kE) = chi(l) + chi(-kE) + k (l, E)
            chi += -(k * k * b + k * (2 + b)) / 2 + k * y[axis];
            y[axis] -= k * b;
            for &u in g.neighbors(axis) {
                y[u] -= k;
            }
            coords[axis] = 0;
            axis -= 1;
        }
        chi += 1 - y[axis];
        y[axis] += g.selfint(axis);
        for &u in g.neighbors(axis) {
            y[u] += 1;
        }
        coords[axis] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip_and_order() {
        let bx = LatticeBox::new(&[2, 1, 3], 1000).unwrap();
        assert_eq!(bx.len(), 24);
        let mut prev: Option<Vec<i64>> = None;
        for i in 0..bx.len() {
            let c = bx.coords(i);
            assert_eq!(bx.index(&c), i);
            if let Some(p) = prev {
                assert!(p < c);
            }
            prev = Some(c);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = LatticeBox::new(&[9, 9, 9], 999).unwrap_err();
        assert_eq!(
            err,
            Error::BoxTooLarge {
                states: 1000,
                budget: 999
            }
        );
        assert!(LatticeBox::new(&[9, 9, 9], 1000).is_ok());
    }

    #[test]
    fn single_point_box() {
        let bx = LatticeBox::new(&[0, 0], 1).unwrap();
        assert_eq!(bx.len(), 1);
        assert_eq!(bx.coords(0), vec![0, 0]);
    }
}
