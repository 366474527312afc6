//! The injective hull of the cyclic metric space `X_N`.
//!
//! `X_N = {0, ..., N-1}` with `d(j, k) = |k-j| (N - |k-j|)`. The hull is the
//! bounded-face complex of `Delta(X) = {f : f(j) + f(k) >= d(j, k)}`; its
//! vertices are the integer vectors `f_lambda`, one per `lambda` in `Y_N`,
//! and its faces are Boolean lattices below a top partition.

use std::collections::{BTreeSet, HashMap};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_n, check_range, Error, Result};
use crate::moebius::{all_sites, extend_function, Site};
use crate::partition::{binomial, enumerate_young, Corner, Partition};

/// Largest `N` the brute-force vertex oracle accepts.
pub const ORACLE_MAX_N: usize = 8;

/// `|k - j| (N - |k - j|)` for `j, k` in `0..N`.
pub fn cyclic_distance(j: usize, k: usize, n: usize) -> Result<u64> {
    for idx in [j, k] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    let gap = j.abs_diff(k) as u64;
    Ok(gap * (n as u64 - gap))
}

/// The metric space `X_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicMetric {
    n: usize,
}

impl CyclicMetric {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(CyclicMetric { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between residues; indices are reduced mod `N`.
    pub fn d(&self, j: usize, k: usize) -> u64 {
        cyclic_distance(j % self.n, k % self.n, self.n).expect("reduced indices")
    }

    /// Row `j` of the distance matrix, which is the vertex `f` of the
    /// rectangle `(j^(N-j))`.
    pub fn row(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|k| self.d(j, k) as i64).collect()
    }
}

/// A 0-face of the hull.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HullVertex {
    #[serde(rename = "partition")]
    pub lambda: Partition,
    #[serde(rename = "f")]
    pub values: Vec<i64>,
}

impl HullVertex {
    pub fn l1_norm(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn as_rational(&self) -> Vec<Rational64> {
        self.values
            .iter()
            .map(|&v| Rational64::from_integer(v))
            .collect()
    }
}

/// `f_lambda(l) = |tau^l(lambda)|`.
pub fn vertex_direct(lambda: &Partition, n: usize) -> Result<HullVertex> {
    lambda.check_young(n)?;
    let mut values = Vec::with_capacity(n);
    let mut cur = lambda.clone();
    for _ in 0..n {
        values.push(cur.size() as i64);
        cur = cur.tau_unchecked(n);
    }
    debug_assert_eq!(&cur, lambda);
    Ok(HullVertex {
        lambda: lambda.clone(),
        values,
    })
}

/// Update of `f_mu` to `f_lambda` when `lambda` arises from `mu` by adding
/// the box `added`. With the box at site `(j, k + 1)`, coordinates
/// `0..=j` gain one, `j+1..=k` lose one, and `k+1..N` gain one.
pub fn recursive_step(f_mu: &[i64], added: Corner, n: usize) -> Vec<i64> {
    let j = added.col - 1;
    let k = n - added.row;
    debug_assert!(j < k, "box outside Y_N");
    f_mu.iter()
        .enumerate()
        .map(|(l, &v)| if l > j && l <= k { v - 1 } else { v + 1 })
        .collect()
}

/// `f_lambda` built up from `f_() (l) = l (N - l)` along a saturated chain.
/// The chain is the one that strips the lowest-row corner first.
pub fn vertex_recursive(lambda: &Partition, n: usize) -> Result<HullVertex> {
    lambda.check_young(n)?;
    let mut removed = Vec::with_capacity(lambda.size());
    let mut cur = lambda.clone();
    while let Some(&corner) = cur.inner_corners().last() {
        removed.push(corner);
        cur = cur.remove_corner(corner)?;
    }
    let mut f: Vec<i64> = (0..n as i64).map(|l| l * (n as i64 - l)).collect();
    for &corner in removed.iter().rev() {
        f = recursive_step(&f, corner, n);
    }
    Ok(HullVertex {
        lambda: lambda.clone(),
        values: f,
    })
}

/// `f` lies in `Delta(X)`: `f~ >= 0` on every site.
pub fn in_delta(f: &[Rational64], n: usize) -> Result<bool> {
    let ext = extend_function(f, n)?;
    Ok(ext.min() >= Rational64::zero())
}

/// `f` lies in `E(X)`: in `Delta(X)` and every `j` has a site `(j, k)` with
/// `f~(j, k) = 0`.
pub fn in_hull(f: &[Rational64], n: usize) -> Result<bool> {
    let ext = extend_function(f, n)?;
    if ext.min() < Rational64::zero() {
        return Ok(false);
    }
    let mut touched = vec![false; n];
    for site in ext.zeros() {
        touched[site.j] = true;
        touched[site.k] = true;
    }
    Ok(touched.into_iter().all(|t| t))
}

/// A face of the hull: the cube spanned by removing any subset of
/// `corners` from the top partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    #[serde(rename = "top")]
    pub lambda: Partition,
    pub corners: Vec<Corner>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.corners.len()
    }

    /// The `2^dim` partitions at the vertices, in subset-bitmask order.
    pub fn vertex_partitions(&self) -> Result<Vec<Partition>> {
        let d = self.dim();
        (0..1usize << d)
            .map(|mask| {
                let chosen: Vec<Corner> = (0..d)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| self.corners[b])
                    .collect();
                self.lambda.remove_corners(&chosen)
            })
            .collect()
    }

    pub fn vertices(&self, n: usize) -> Result<Vec<HullVertex>> {
        self.vertex_partitions()?
            .iter()
            .map(|nu| vertex_direct(nu, n))
            .collect()
    }
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            if len - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Every `v`-face, one per pair (partition, `v`-subset of its inner
/// corners); partitions in enumeration order, subsets lexicographic.
pub fn enumerate_faces(n: usize, v: usize) -> Result<Vec<Face>> {
    let mut faces = Vec::new();
    for lambda in enumerate_young(n)? {
        let corners = lambda.inner_corners();
        for subset in combinations(corners.len(), v) {
            faces.push(Face {
                corners: subset.iter().map(|&i| corners[i]).collect(),
                lambda: lambda.clone(),
            });
        }
    }
    Ok(faces)
}

/// `2^(N-2v-1) N / (N-v) C(N-v, v)`, zero when `2v > N`.
pub fn face_count_closed(n: usize, v: usize) -> Result<u64> {
    check_n(n)?;
    if 2 * v > n {
        return Ok(0);
    }
    let (n, v) = (n as u64, v as u64);
    // 2^(N-2v-1) may be 1/2, so work with twice the numerator
    let numerator = (1u64 << (n - 2 * v)) * n * binomial(n - v, v);
    let denominator = 2 * (n - v);
    debug_assert_eq!(numerator % denominator, 0);
    Ok(numerator / denominator)
}

/// `sum_s C(N, 2s) C(s, v)`: faces counted by the number of corners of
/// their top partition.
pub fn face_count_by_corners(n: usize, v: usize) -> Result<u64> {
    check_n(n)?;
    let n = n as u64;
    Ok((0..=n / 2)
        .map(|s| binomial(n, 2 * s) * binomial(s, v as u64))
        .sum())
}

/// The 1-skeleton: vertices in enumeration order, edges as sorted index
/// pairs of covering partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    pub n: usize,
    pub vertices: Vec<HullVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl Skeleton {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.lambda.cmp(lambda))
            .ok()
    }
}

pub fn hasse_skeleton(n: usize) -> Result<Skeleton> {
    let partitions = enumerate_young(n)?;
    let index: HashMap<&Partition, usize> =
        partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (i, lambda) in partitions.iter().enumerate() {
        for corner in lambda.inner_corners() {
            let mu = lambda.remove_corner(corner)?;
            let m = index[&mu];
            edges.push([m.min(i), m.max(i)]);
        }
    }
    edges.sort_unstable();
    let vertices = partitions
        .iter()
        .map(|p| vertex_direct(p, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Skeleton { n, vertices, edges })
}

/// JSON form of a list of faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesExport {
    pub n: usize,
    pub dim: usize,
    pub faces: Vec<Face>,
}

/// Incrementally reduced row echelon form over `Q` of the equations
/// `f(j) + f(k) = d(j, k)` chosen so far.
#[derive(Clone)]
struct Echelon {
    // (pivot column, row of length n + 1 with the right-hand side last)
    rows: Vec<(usize, Vec<Rational64>)>,
}

impl Echelon {
    fn with_row(&self, mut row: Vec<Rational64>) -> Option<Echelon> {
        let n = row.len() - 1;
        for (p, r) in &self.rows {
            let factor = row[*p];
            if !factor.is_zero() {
                for c in 0..=n {
                    row[c] -= factor * r[c];
                }
            }
        }
        let pivot = (0..n).find(|&c| !row[c].is_zero())?;
        let inv = row[pivot].recip();
        for v in row.iter_mut() {
            *v *= inv;
        }
        let mut rows = self.rows.clone();
        for (_, r) in rows.iter_mut() {
            let factor = r[pivot];
            if !factor.is_zero() {
                for c in 0..=n {
                    r[c] -= factor * row[c];
                }
            }
        }
        rows.push((pivot, row));
        Some(Echelon { rows })
    }

    fn solution(&self, n: usize) -> Vec<Rational64> {
        let mut x = vec![Rational64::zero(); n];
        for (p, r) in &self.rows {
            x[*p] = r[n];
        }
        x
    }
}

/// Brute-force vertex enumeration of `Delta(X_N)`: every `N`-subset of
/// sites whose equations are independent is solved exactly, and the
/// solution kept when it satisfies all inequalities. Sorted, deduplicated.
pub fn oracle_vertices(n: usize) -> Result<Vec<Vec<Rational64>>> {
    check_range("oracle_vertices", n, 2, ORACLE_MAX_N)?;
    let sites = all_sites(n);
    let d = |s: &Site| cyclic_distance(s.j, s.k, n).expect("canonical") as i64;
    let rows: Vec<Vec<Rational64>> = sites
        .iter()
        .map(|s| {
            let mut r: Vec<Rational64> = s
                .incidence(n)
                .into_iter()
                .map(Rational64::from_integer)
                .collect();
            r.push(Rational64::from_integer(d(s)));
            r
        })
        .collect();
    let dists: Vec<i64> = sites.iter().map(d).collect();

    let feasible = |x: &[Rational64]| {
        sites
            .iter()
            .zip(&dists)
            .all(|(s, &dist)| x[s.j] + x[s.k] >= Rational64::from_integer(dist))
    };

    fn dfs(
        start: usize,
        depth: usize,
        n: usize,
        state: &Echelon,
        rows: &[Vec<Rational64>],
        feasible: &dyn Fn(&[Rational64]) -> bool,
        out: &mut BTreeSet<Vec<Rational64>>,
    ) {
        if depth == n {
            let x = state.solution(n);
            if feasible(&x) {
                out.insert(x);
            }
            return;
        }
        for i in start..rows.len() {
            if rows.len() - i < n - depth {
                break;
            }
            if let Some(next) = state.with_row(rows[i].clone()) {
                dfs(i + 1, depth + 1, n, &next, rows, feasible, out);
            }
        }
    }

    let empty = Echelon { rows: Vec::new() };
    let found = (0..sites.len())
        .into_par_iter()
        .map(|first| {
            let mut out = BTreeSet::new();
            if let Some(state) = empty.with_row(rows[first].clone()) {
                dfs(first + 1, 1, n, &state, &rows, &feasible, &mut out);
            }
            out
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().collect())
}

/// Extreme values of the coordinate sum over the hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormExtremes {
    pub max: i64,
    pub argmax: Vec<Partition>,
    pub min: i64,
    pub argmin: Vec<Partition>,
}

/// The coordinate sum is linear, so over every face its extremes are taken
/// at vertices; scanning all vertices gives the extremes over the hull.
pub fn norm_extremes(n: usize) -> Result<NormExtremes> {
    let vertices = enumerate_young(n)?
        .iter()
        .map(|p| vertex_direct(p, n))
        .collect::<Result<Vec<_>>>()?;
    let max = vertices
        .iter()
        .map(HullVertex::l1_norm)
        .max()
        .expect("nonempty");
    let min = vertices
        .iter()
        .map(HullVertex::l1_norm)
        .min()
        .expect("nonempty");
    let pick = |target: i64| {
        vertices
            .iter()
            .filter(|v| v.l1_norm() == target)
            .map(|v| v.lambda.clone())
            .collect()
    };
    Ok(NormExtremes {
        max,
        argmax: pick(max),
        min,
        argmin: pick(min),
    })
}

/// The staircase `(h, h-1, ..., 1)` with `h = ceil(N/2) - 1` for odd `N` and
/// `h = N/2` for even `N`; the `tau`-fixed point, resp. the top of the
/// central cube.
pub fn staircase(n: usize) -> Partition {
    let h = if n % 2 == 1 { n.div_ceil(2) - 1 } else { n / 2 };
    Partition::new((1..=h).rev().collect()).expect("decreasing")
}

/// Squared Euclidean distance between two integer vectors.
pub fn squared_distance(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Sup-norm distance, the metric of the injective hull.
pub fn sup_distance(a: &[Rational64], b: &[Rational64]) -> Rational64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(Rational64::zero)
}
