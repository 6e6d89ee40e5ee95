//! Semigroup formulas for the links `S^3_{-d}(K)` of superisolated
//! singularities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::gcd_i64;

/// A numerical semigroup given by generators, with its gaps and conductor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Semigroup {
    pub generators: Vec<u64>,
    /// Sorted gaps.
    pub gaps: Vec<u64>,
    /// Conductor: every integer `>= mu` is in the semigroup.
    pub mu: u64,
}

impl Semigroup {
    /// The semigroup `<p, q>` of the cusp `x^p = y^q`.
    pub fn from_pair(p: u64, q: u64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidArgument(format!("pair ({p}, {q}) needs p, q >= 2")));
        }
        if gcd_i64(p as i64, q as i64) != 1 {
            return Err(Error::InvalidArgument(format!("pair ({p}, {q}) is not coprime")));
        }
        Self::from_generators(vec![p, q])
    }

    /// Semigroup generated by `gens`; it must be symmetric, `mu = 2 |gaps|`,
    /// as the semigroup of a plane branch is.
    pub fn from_generators(mut gens: Vec<u64>) -> Result<Self> {
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidArgument("semigroup needs a positive generator".into()));
        }
        let g = gens.iter().fold(0i64, |acc, &x| gcd_i64(acc, x as i64));
        if g != 1 {
            return Err(Error::InvalidArgument(format!(
                "generators {gens:?} have common divisor {g}"
            )));
        }
        // the Frobenius number is below g_min * g_max
        let limit = (gens[0] * gens[gens.len() - 1]) as usize + 1;
        let mut member = vec![false; limit + 1];
        member[0] = true;
        for k in 1..=limit {
            member[k] = gens
                .iter()
                .any(|&g| g as usize <= k && member[k - g as usize]);
        }
        let gaps: Vec<u64> = (0..=limit).filter(|&k| !member[k]).map(|k| k as u64).collect();
        let mu = gaps.last().map_or(0, |&f| f + 1);
        if mu != 2 * gaps.len() as u64 {
            return Err(Error::InvalidArgument(format!(
                "semigroup {gens:?} is not symmetric (conductor {mu}, {} gaps)",
                gaps.len()
            )));
        }
        Ok(Semigroup {
            generators: gens,
            gaps,
            mu,
        })
    }

    pub fn contains(&self, k: u64) -> bool {
        self.gaps.binary_search(&k).is_err()
    }

    /// Number of gaps `>= beta`.
    pub fn gaps_from(&self, beta: u64) -> u64 {
        (self.gaps.len() - self.gaps.partition_point(|&g| g < beta)) as u64
    }

    /// Number of integers `k >= beta` outside the semigroup; negative
    /// integers are never in it.
    pub fn gaps_from_int(&self, beta: i64) -> u64 {
        if beta >= 0 {
            self.gaps_from(beta as u64)
        } else {
            beta.unsigned_abs() + self.gaps.len() as u64
        }
    }
}

/// Degree and cusp semigroups of a rational cuspidal plane curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SISpec {
    pub d: u64,
    pub cusps: Vec<Semigroup>,
}

impl SISpec {
    pub fn new(d: u64, cusps: Vec<Semigroup>) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidArgument(format!("degree {d} is below 3")));
        }
        if cusps.is_empty() {
            return Err(Error::InvalidArgument("no cusps given".into()));
        }
        Ok(SISpec { d, cusps })
    }

    /// Lines `d <degree>`, then `pair <p> <q>` or `gens <g1> <g2> ...` per
    /// cusp. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut d = None;
        let mut cusps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let key = words.next().expect("nonempty line");
            let nums: Vec<u64> = words
                .map(|w| {
                    w.parse::<u64>()
                        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, got {w:?}")))
                })
                .collect::<Result<_>>()?;
            match (key, nums.as_slice()) {
                ("d", [x]) => {
                    if d.replace(*x).is_some() {
                        return Err(Error::parse(line, "degree given twice"));
                    }
                }
                ("pair", [p, q]) => cusps.push(
                    Semigroup::from_pair(*p, *q).map_err(|e| Error::parse(line, e.to_string()))?,
                ),
                ("gens", gs) if !gs.is_empty() => cusps.push(
                    Semigroup::from_generators(gs.to_vec())
                        .map_err(|e| Error::parse(line, e.to_string()))?,
                ),
                _ => return Err(Error::parse(line, format!("cannot read {content:?}"))),
            }
        }
        let d = d.ok_or_else(|| Error::parse(0, "missing degree line"))?;
        SISpec::new(d, cusps)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("d {}\n", self.d);
        for c in &self.cusps {
            let gens: Vec<String> = c.generators.iter().map(|g| g.to_string()).collect();
            s.push_str(&format!("gens {}\n", gens.join(" ")));
        }
        s
    }

    pub fn mu_total(&self) -> u64 {
        self.cusps.iter().map(|c| c.mu).sum()
    }

    /// `sum mu_i = (d-1)(d-2)`, forced by the rationality of the curve.
    pub fn realizable(&self) -> bool {
        self.mu_total() == (self.d - 1) * (self.d - 2)
    }
}

/// `W(beta) = sum_i #{gaps of S_i >= beta_i}`.
pub fn wbar(betas: &[u64], cusps: &[Semigroup]) -> Result<u64> {
    if betas.len() != cusps.len() {
        return Err(Error::IndexMismatch {
            expected: cusps.len(),
            got: betas.len(),
        });
    }
    Ok(betas.iter().zip(cusps).map(|(&b, c)| c.gaps_from(b)).sum())
}

/// The same weight for arbitrary integer `beta`.
pub fn wbar_star(betas: &[i64], cusps: &[Semigroup]) -> Result<u64> {
    if betas.len() != cusps.len() {
        return Err(Error::IndexMismatch {
            expected: cusps.len(),
            got: betas.len(),
        });
    }
    Ok(betas.iter().zip(cusps).map(|(&b, c)| c.gaps_from_int(b)).sum())
}

fn min_rec(cusps: &[Semigroup], i: usize, left: u64, acc: u64, best: &mut u64) {
    if acc >= *best {
        return;
    }
    if i + 1 == cusps.len() {
        *best = (*best).min(acc + cusps[i].gaps_from(left));
        return;
    }
    for b in 0..=left.min(cusps[i].mu) {
        min_rec(cusps, i + 1, left - b, acc + cusps[i].gaps_from(b), best);
    }
}

/// Minimum of [`wbar`] over the compositions of `n + 1` into `cusps.len()`
/// nonnegative parts. Parts above the conductor are moved to the last
/// coordinate, which never increases the weight.
pub fn min_wbar_on_simplex(n: u64, cusps: &[Semigroup]) -> u64 {
    if cusps.is_empty() {
        return 0;
    }
    let mut best = u64::MAX;
    min_rec(cusps, 0, n + 1, 0, &mut best);
    best
}

/// Number of `j >= 0` with `j d + 1 < sum mu_i`; later terms vanish.
pub fn surgery_terms(spec: &SISpec) -> u64 {
    let total = spec.mu_total();
    (0..).find(|&j| j * spec.d + 1 >= total).expect("unbounded range")
}

/// `eu(H^0(S^3_{-d}(K))) = sum_{j >= 0} min W on the simplex of j d`.
pub fn eu_surgery(spec: &SISpec) -> u64 {
    (0..surgery_terms(spec))
        .map(|j| min_wbar_on_simplex(j * spec.d, &spec.cusps))
        .sum()
}

/// `(j - d + 1)(j - d + 2) / 2` for `0 <= j <= d - 2`.
pub fn bl_expected(j: i64, d: i64) -> Result<i64> {
    if j < 0 || j > d - 2 {
        return Err(Error::InvalidArgument(format!("j = {j} outside [0, {}]", d - 2)));
    }
    Ok((j - d + 1) * (j - d + 2) / 2)
}

/// `p_g = d(d-1)(d-2)/6`.
pub fn pg_superisolated(d: u64) -> u64 {
    d * d.saturating_sub(1) * d.saturating_sub(2) / 6
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryTerm {
    pub j: u64,
    pub min: u64,
    /// Closed form, present when the spec is realizable and `j <= d - 2`.
    pub expected: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub d: u64,
    pub mu_total: u64,
    pub realizable: bool,
    pub terms: Vec<SurgeryTerm>,
    pub eu: u64,
    pub pg: u64,
}

impl SurgeryReport {
    /// All closed-form comparisons hold and `eu = p_g`; `None` when the spec
    /// is not realizable.
    pub fn oracle_agrees(&self) -> Option<bool> {
        self.realizable.then(|| {
            self.terms
                .iter()
                .all(|t| t.expected.is_none_or(|e| e == t.min as i64))
                && self.eu == self.pg
        })
    }
}

/// Per-`j` minima (up to `d - 2` or the truncation point, whichever is
/// later), the oracle values and the totals.
pub fn surgery_report(spec: &SISpec) -> SurgeryReport {
    let realizable = spec.realizable();
    let last = surgery_terms(spec).max(spec.d - 1);
    let terms = (0..last)
        .map(|j| SurgeryTerm {
            j,
            min: min_wbar_on_simplex(j * spec.d, &spec.cusps),
            expected: if realizable {
                bl_expected(j as i64, spec.d as i64).ok()
            } else {
                None
            },
        })
        .collect();
    SurgeryReport {
        d: spec.d,
        mu_total: spec.mu_total(),
        realizable,
        terms,
        eu: eu_surgery(spec),
        pg: pg_superisolated(spec.d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn pair(p: u64, q: u64) -> Semigroup {
        Semigroup::from_pair(p, q).unwrap()
    }

    #[test]
    fn pair_semigroups() {
        assert_eq!(pair(3, 4).gaps, vec![1, 2, 5]);
        assert_eq!(pair(3, 4).mu, 6);
        assert_eq!(pair(2, 7).gaps, vec![1, 3, 5]);
        assert_eq!(pair(2, 3).gaps, vec![1]);
        assert_eq!(pair(2, 3).mu, 2);
        assert!(Semigroup::from_pair(4, 6).is_err());
        assert!(Semigroup::from_pair(1, 6).is_err());
        // <3,4,5> has gaps {1,2} and conductor 3
        assert!(Semigroup::from_generators(vec![3, 4, 5]).is_err());
        // two Puiseux pairs: <4, 6, 13>
        let s = Semigroup::from_generators(vec![4, 6, 13]).unwrap();
        assert_eq!(s.mu, 16);
    }

    #[test]
    fn weights() {
        let cusps = [pair(3, 4), pair(2, 7)];
        assert_eq!(wbar(&[1, 0], &cusps).unwrap(), 6);
        assert_eq!(wbar(&[0, 0], &cusps).unwrap(), 6);
        assert_eq!(wbar(&[6, 6], &cusps).unwrap(), 0);
        assert!(wbar(&[0], &cusps).is_err());
        assert_eq!(wbar_star(&[-2, 0], &cusps).unwrap(), 8);
        assert_eq!(min_wbar_on_simplex(0, &cusps), 6);
        assert_eq!(min_wbar_on_simplex(11, &cusps), 0);
        assert_eq!(min_wbar_on_simplex(4, &[pair(3, 4)]), 1);
    }

    #[test]
    fn c4_surgery() {
        let spec = SISpec::parse(examples::C4_SI).unwrap();
        assert!(spec.realizable());
        let r = surgery_report(&spec);
        let mins: Vec<u64> = r.terms.iter().map(|t| t.min).collect();
        assert_eq!(mins, vec![6, 3, 1, 0]);
        assert_eq!((r.eu, r.pg), (10, 10));
        assert_eq!(r.oracle_agrees(), Some(true));
    }

    #[test]
    fn quartic_with_one_cusp() {
        let spec = SISpec::new(4, vec![pair(3, 4)]).unwrap();
        assert_eq!(eu_surgery(&spec), 4);
        assert_eq!(pg_superisolated(4), 4);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(bl_expected(0, 5).unwrap(), 6);
        assert_eq!(bl_expected(1, 5).unwrap(), 3);
        assert_eq!(bl_expected(3, 5).unwrap(), 0);
        assert!(bl_expected(4, 5).is_err());
        assert_eq!(pg_superisolated(5), 10);
        assert_eq!(pg_superisolated(3), 1);
        assert_eq!(pg_superisolated(2), 0);
    }

    #[test]
    fn unrealizable_spec_is_flagged() {
        let spec = SISpec::new(5, vec![pair(2, 3)]).unwrap();
        let r = surgery_report(&spec);
        assert!(!r.realizable);
        assert_eq!(r.oracle_agrees(), None);
        assert_eq!(r.eu, 1);
    }

    #[test]
    fn spec_validation() {
        assert!(SISpec::parse("d 2\npair 2 3").is_err());
        assert!(SISpec::parse("d 5").is_err());
        assert!(SISpec::parse("pair 2 3").is_err());
        assert!(SISpec::parse("d 5\npair 2 4").is_err());
        assert!(SISpec::parse("d 5\nfoo 1").is_err());
        let s = SISpec::parse("d 5\ngens 3 4\npair 2 7").unwrap();
        assert_eq!(SISpec::parse(&s.to_text()).unwrap(), s);
    }
}
