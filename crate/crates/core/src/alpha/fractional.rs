//! Fractional chromatic number by exact linear programming.
//!
//! The covering LP `min Σ x_I` s.t. `Σ_{I∋v} x_I ≥ 1` has dual
//! `max Σ y_v` s.t. `Σ_{v∈I} y_v ≤ 1` for every independent set `I`. We solve
//! the dual over a growing family of rows (one per independent set) and
//! price with the weighted solver: a set of weight above 1 is a violated
//! row. Adding dual rows is the same as adding primal columns, and the slack
//! basis is always feasible, so no phase 1 is needed.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::max_weight_independent_set;
use crate::error::{GraphError, Result};
use crate::graph::{SimpleGraph, Vertex};

pub const FRACTIONAL_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalChromatic {
    pub value: BigRational,
    /// Primal certificate: independent sets with positive weight covering every vertex.
    pub coloring: Vec<(Vec<Vertex>, BigRational)>,
    /// Dual certificate: vertex weights with every independent set weighing at most 1.
    pub weights: Vec<BigRational>,
}

impl FractionalChromatic {
    /// Checks both certificates against `g`, including dual feasibility via the solver.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let total_x: BigRational = self.coloring.iter().map(|(_, x)| x.clone()).sum();
        let total_y: BigRational = self.weights.iter().cloned().sum();
        if total_x != self.value || total_y != self.value {
            return false;
        }
        let mut cover = vec![BigRational::zero(); g.n()];
        for (set, x) in &self.coloring {
            if !g.is_independent(set) || !x.is_positive() {
                return false;
            }
            for &v in set {
                cover[v] += x;
            }
        }
        if cover.iter().any(|c| *c < BigRational::one()) {
            return false;
        }
        if self.weights.iter().any(|w| w.is_negative()) {
            return false;
        }
        g.n() == 0 || max_weight_independent_set(g, &self.weights).0 <= BigRational::one()
    }
}

struct LpSolution {
    value: BigRational,
    y: Vec<BigRational>,
    x: Vec<BigRational>,
}

/// `max Σ y` s.t. `Σ_{v∈row} y_v ≤ 1`, `y ≥ 0`, by tableau simplex with Bland's rule.
fn solve_dual(n: usize, rows: &[Vec<Vertex>]) -> LpSolution {
    let r = rows.len();
    let cols = n + r;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut t: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut line = vec![zero.clone(); cols + 1];
            for &v in row {
                line[v] = one.clone();
            }
            line[n + i] = one.clone();
            line[cols] = one.clone();
            line
        })
        .collect();
    // reduced costs; the last entry holds the objective value
    let mut obj = vec![zero.clone(); cols + 1];
    for c in obj.iter_mut().take(n) {
        *c = -one.clone();
    }
    let mut basis: Vec<usize> = (n..cols).collect();

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) {
        let leave = (0..r)
            .filter(|&i| t[i][enter].is_positive())
            .min_by(|&a, &b| {
                let ra = &t[a][cols] / &t[a][enter];
                let rb = &t[b][cols] / &t[b][enter];
                ra.cmp(&rb).then(basis[a].cmp(&basis[b]))
            })
            .expect("dual LP is bounded by the singleton rows");
        let pivot = t[leave][enter].clone();
        for x in t[leave].iter_mut() {
            *x /= &pivot;
        }
        let prow = t[leave].clone();
        for (i, line) in t.iter_mut().enumerate() {
            if i == leave || line[enter].is_zero() {
                continue;
            }
            let f = line[enter].clone();
            for (x, p) in line.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        basis[leave] = enter;
    }

    let mut y = vec![zero.clone(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            y[b] = t[i][cols].clone();
        }
    }
    let x = (0..r).map(|i| obj[n + i].clone()).collect();
    LpSolution {
        value: obj[cols].clone(),
        y,
        x,
    }
}

fn certificate(g: &SimpleGraph, rows: &[Vec<Vertex>], sol: LpSolution) -> FractionalChromatic {
    let coloring = rows
        .iter()
        .zip(sol.x)
        .filter(|(_, x)| x.is_positive())
        .map(|(row, x)| (row.clone(), x))
        .collect();
    let out = FractionalChromatic {
        value: sol.value,
        coloring,
        weights: sol.y,
    };
    debug_assert!(out.verify(g));
    out
}

fn greedy_maximal(g: &SimpleGraph, start: Vertex) -> Vec<Vertex> {
    let mut blocked = vec![false; g.n()];
    let mut set = Vec::new();
    for v in (start..g.n()).chain(0..start) {
        if !blocked[v] {
            set.push(v);
            blocked[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    set.sort_unstable();
    set
}

/// Exact `χ_f(G)` by row generation on the dual LP.
pub fn fractional_chromatic(g: &SimpleGraph) -> Result<FractionalChromatic> {
    if g.n() > FRACTIONAL_CAP {
        return Err(GraphError::CapExceeded {
            n: g.n(),
            cap: FRACTIONAL_CAP,
        });
    }
    let n = g.n();
    let mut rows: Vec<Vec<Vertex>> = (0..n).map(|v| greedy_maximal(g, v)).collect();
    rows.sort();
    rows.dedup();
    loop {
        let sol = solve_dual(n, &rows);
        if n == 0 {
            return Ok(certificate(g, &rows, sol));
        }
        let (weight, set) = max_weight_independent_set(g, &sol.y);
        if weight <= BigRational::one() {
            return Ok(certificate(g, &rows, sol));
        }
        debug_assert!(!rows.contains(&set));
        rows.push(set);
    }
}

/// Reference computation over every maximal independent set; for small graphs only.
pub fn fractional_chromatic_exhaustive(g: &SimpleGraph) -> Result<FractionalChromatic> {
    const CAP: usize = 16;
    if g.n() > CAP {
        return Err(GraphError::CapExceeded { n: g.n(), cap: CAP });
    }
    let n = g.n();
    let mut rows = Vec::new();
    for mask in 1u32..1 << n {
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !g.is_independent(&set) {
            continue;
        }
        let maximal = (0..n).all(|v| {
            mask >> v & 1 == 1 || g.neighbors(v).iter().any(|&u| mask >> u & 1 == 1)
        });
        if maximal {
            rows.push(set);
        }
    }
    let sol = solve_dual(n, &rows);
    Ok(certificate(g, &rows, sol))
}

#[cfg(test)]
pub(crate) fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn c5_is_five_halves() {
        let f = fractional_chromatic(&cycle(5)).unwrap();
        assert_eq!(f.value, ratio(5, 2));
        assert!(f.verify(&cycle(5)));
        assert_eq!(fractional_chromatic_exhaustive(&cycle(5)).unwrap().value, ratio(5, 2));
    }

    #[test]
    fn simple_values() {
        assert_eq!(fractional_chromatic(&path(4)).unwrap().value, ratio(2, 1));
        assert_eq!(fractional_chromatic(&cycle(6)).unwrap().value, ratio(2, 1));
        assert_eq!(fractional_chromatic(&complete(4)).unwrap().value, ratio(4, 1));
        assert_eq!(fractional_chromatic(&cycle(7)).unwrap().value, ratio(7, 3));
        assert_eq!(fractional_chromatic(&SimpleGraph::empty(3)).unwrap().value, ratio(1, 1));
        assert_eq!(fractional_chromatic(&SimpleGraph::empty(0)).unwrap().value, ratio(0, 1));
    }

    #[test]
    fn cap() {
        assert!(matches!(
            fractional_chromatic(&cycle(21)),
            Err(GraphError::CapExceeded { n: 21, cap: 20 })
        ));
    }
}
