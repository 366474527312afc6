//! The discrete Möbius strip over the `N`-cycle and its homotopically
//! nontrivial `N`-site loops ("rims").
//!
//! A site is an unordered pair `{j, k}` of residues mod `N`. On the
//! universal cover `{(j, k) : j <= k <= j + N}` the deck transformation is
//! `(j, k) -> (k, j + N)`. We use Russian coordinates `x = j + k`,
//! `y = j - k`, in which adjacent sites differ by one in `x` and one in `y`.
//! A rim lifts to the graph of a function `h` with `h(x + N) = -N - h(x)`,
//! stored as [`RimHeight`].
//!
//! The box in row `r`, column `c` of a Young diagram sits at the cover
//! point `(c - 1, N + 1 - r)`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{check_n, Error, Result};
use crate::hull::cyclic_distance;
use crate::linalg::det_bareiss;
use crate::partition::Partition;

/// A site of the strip in canonical form `0 <= j <= k <= N - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Site {
    pub j: usize,
    pub k: usize,
}

impl Site {
    /// Canonical representative of the class of `(j, k)`.
    pub fn canonical(j: i64, k: i64, n: usize) -> Site {
        let n = n as i64;
        let a = j.rem_euclid(n) as usize;
        let b = k.rem_euclid(n) as usize;
        Site {
            j: a.min(b),
            k: a.max(b),
        }
    }

    pub fn is_boundary(&self) -> bool {
        self.j == self.k
    }

    /// Translation `(j, k) -> (j + 1, k + 1)` along the strip.
    pub fn shift(&self, n: usize) -> Site {
        Site::canonical(self.j as i64 + 1, self.k as i64 + 1, n)
    }

    /// Position of this site in [`all_sites`].
    pub fn index(&self, n: usize) -> usize {
        // rows j' < j contribute n - j' sites each
        self.j * n - self.j * self.j.saturating_sub(1) / 2 + (self.k - self.j)
    }

    /// The vector `e_j + e_k`.
    pub fn incidence(&self, n: usize) -> Vec<i64> {
        let mut row = vec![0; n];
        row[self.j] += 1;
        row[self.k] += 1;
        row
    }
}

impl From<[usize; 2]> for Site {
    fn from([j, k]: [usize; 2]) -> Self {
        Site {
            j: j.min(k),
            k: j.max(k),
        }
    }
}

impl From<Site> for [usize; 2] {
    fn from(s: Site) -> Self {
        [s.j, s.k]
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

/// Free-function form of [`Site::canonical`].
pub fn canonical_site(j: i64, k: i64, n: usize) -> Site {
    Site::canonical(j, k, n)
}

/// All `N(N+1)/2` sites, sorted lexicographically.
pub fn all_sites(n: usize) -> Vec<Site> {
    (0..n)
        .flat_map(|j| (j..n).map(move |k| Site { j, k }))
        .collect()
}

/// Lifted rim as the heights `h(x)` for `x = start .. start + N`
/// (`N + 1` values), extended by `h(x + N) = -N - h(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHeight {
    n: usize,
    start: i64,
    heights: Vec<i64>,
}

impl RimHeight {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, x: i64) -> i64 {
        let n = self.n as i64;
        let offset = x - self.start;
        let period = offset.div_euclid(n);
        let base = self.heights[offset.rem_euclid(n) as usize];
        if period.rem_euclid(2) == 0 {
            base
        } else {
            -n - base
        }
    }

    /// The rim of `lambda`, walked from the site `(0, l1)` along the cells
    /// just outside the diagram up to `(l1, N)`.
    pub fn of_partition(lambda: &Partition, n: usize) -> Result<RimHeight> {
        lambda.check_young(n)?;
        let points = cell_walk(lambda, n);
        Ok(RimHeight {
            n,
            start: points[0].0 + points[0].1,
            heights: points.iter().map(|&(j, k)| j - k).collect(),
        })
    }

    fn from_cover_walk(n: usize, walk: &[(i64, i64)]) -> RimHeight {
        RimHeight {
            n,
            start: walk[0].0 + walk[0].1,
            heights: walk.iter().map(|&(j, k)| j - k).collect(),
        }
    }

    /// Reads the diagram: box `(r, c)` belongs to it iff its site lies
    /// strictly below the rim.
    fn partition(&self) -> Option<Partition> {
        let n = self.n as i64;
        let mut parts = Vec::new();
        for r in 1..=n {
            let row = (1..=n + 1 - r)
                .take_while(|&c| {
                    let (x, y) = (n + c - r, c + r - n - 2);
                    y < self.at(x)
                })
                .count();
            let total_below = (1..=n + 1 - r)
                .filter(|&c| (c + r - n - 2) < self.at(n + c - r))
                .count();
            if row != total_below {
                return None;
            }
            parts.push(row);
        }
        Partition::new(parts).ok()
    }
}

/// Cover points of the outer rim, `N + 1` of them; first and last are the
/// same site.
fn cell_walk(lambda: &Partition, n: usize) -> Vec<(i64, i64)> {
    let first = lambda.part(1);
    let rows = n + 1 - first;
    let mut pts = Vec::with_capacity(n + 1);
    for r in (1..=rows).rev() {
        let lo = lambda.part(r) + 1;
        let hi = if r == 1 {
            first + 1
        } else {
            lambda.part(r - 1) + 1
        };
        for c in lo..=hi {
            pts.push(((c - 1) as i64, (n + 1 - r) as i64));
        }
    }
    debug_assert_eq!(pts.len(), n + 1);
    pts
}

/// An outer rim: `N` sites forming a homotopically nontrivial loop.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rim {
    n: usize,
    sites: Vec<Site>,
}

impl Rim {
    /// Validates a site set as a rim.
    pub fn new(n: usize, sites: impl IntoIterator<Item = Site>) -> Result<Rim> {
        let rim = Rim::from_sites_unchecked(n, sites);
        partition_of_rim(&rim)?;
        Ok(rim)
    }

    pub(crate) fn from_sites_unchecked(n: usize, sites: impl IntoIterator<Item = Site>) -> Rim {
        let set: BTreeSet<Site> = sites.into_iter().collect();
        Rim {
            n,
            sites: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sites in lexicographic order.
    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn contains(&self, site: &Site) -> bool {
        self.sites.binary_search(site).is_ok()
    }

    /// Length of the unique cycle of the graph on `0..N` with one edge
    /// `{j, k}` per site, or `None` if that graph is not connected with
    /// exactly one cycle.
    pub fn cycle_length(&self) -> Option<usize> {
        let n = self.n;
        if self.sites.len() != n {
            return None;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for s in &self.sites {
            let (a, b) = (find(&mut parent, s.j), find(&mut parent, s.k));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (0..n).any(|v| find(&mut parent, v) != root) {
            return None;
        }
        // strip leaves; what remains is the cycle
        let mut alive: Vec<bool> = vec![true; self.sites.len()];
        let mut degree = vec![0usize; n];
        for s in &self.sites {
            degree[s.j] += 1;
            degree[s.k] += 1;
        }
        loop {
            let leaf = self.sites.iter().enumerate().find(|(i, s)| {
                alive[*i] && !s.is_boundary() && (degree[s.j] == 1 || degree[s.k] == 1)
            });
            match leaf {
                Some((i, s)) => {
                    alive[i] = false;
                    degree[s.j] -= 1;
                    degree[s.k] -= 1;
                }
                None => break,
            }
        }
        Some(alive.iter().filter(|&&a| a).count())
    }
}

impl Serialize for Rim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sites.serialize(s)
    }
}

/// The outer rim of `lambda`.
pub fn rim_of_partition(lambda: &Partition, n: usize) -> Result<Rim> {
    lambda.check_young(n)?;
    let walk = cell_walk(lambda, n);
    Ok(Rim::from_sites_unchecked(
        n,
        walk.iter().map(|&(j, k)| Site::canonical(j, k, n)),
    ))
}

/// Monotone chains of `N` adjacent sites from `(1, k)` to `(k, N)` in the
/// triangular fundamental domain; closing with `(k, N) = (0, k)` they are
/// the rims containing `(0, k)` and `(1, k)`.
fn chains_from(
    n: usize,
    k: usize,
    allow: impl Fn((i64, i64)) -> bool,
    mut keep: impl FnMut(&[(i64, i64)]) -> bool,
) {
    let mut walk = vec![(0i64, k as i64), (1i64, k as i64)];
    type Keep<'a> = dyn FnMut(&[(i64, i64)]) -> bool + 'a;
    fn go(
        n: i64,
        k: i64,
        walk: &mut Vec<(i64, i64)>,
        allow: &dyn Fn((i64, i64)) -> bool,
        keep: &mut Keep<'_>,
    ) -> bool {
        let &(j, kk) = walk.last().unwrap();
        if (j, kk) == (k, n) {
            return keep(walk);
        }
        for next in [(j + 1, kk), (j, kk + 1)] {
            if next.0 <= k && next.1 <= n && allow(next) {
                walk.push(next);
                let stop = go(n, k, walk, allow, keep);
                walk.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
    go(n as i64, k as i64, &mut walk, &allow, &mut keep);
}

/// The partition whose outer rim is `rim`.
pub fn partition_of_rim(rim: &Rim) -> Result<Partition> {
    let n = rim.n;
    check_n(n)?;
    if rim.sites.len() != n {
        return Err(Error::NotARim(format!(
            "expected {n} distinct sites, got {}",
            rim.sites.len()
        )));
    }
    if let Some(bad) = rim.sites.iter().find(|s| s.k >= n) {
        return Err(Error::NotARim(format!("site {bad} is not canonical")));
    }
    let canon = |(j, k): (i64, i64)| Site::canonical(j, k, n);
    for k in 1..=n {
        if !rim.contains(&canon((0, k as i64))) || !rim.contains(&canon((1, k as i64))) {
            continue;
        }
        let mut found = None;
        chains_from(
            n,
            k,
            |pt| rim.contains(&canon(pt)),
            |walk| {
                // walk[0] = (0, k) duplicates the last point
                if walk[1..].iter().all(|&p| rim.contains(&canon(p))) {
                    let height = RimHeight::from_cover_walk(n, walk);
                    if let Some(lambda) = height.partition() {
                        if lambda.in_young(n)
                            && rim_of_partition(&lambda, n)
                                .map(|r| &r == rim)
                                .unwrap_or(false)
                        {
                            found = Some(lambda);
                            return true;
                        }
                    }
                }
                false
            },
        );
        if let Some(lambda) = found {
            return Ok(lambda);
        }
    }
    Err(Error::NotARim(
        "sites do not form a homotopically nontrivial loop".into(),
    ))
}

/// All rims by direct loop search: for each `1 <= k <= N` every chain from
/// `(1, k)` to `(k, N)`. Does not consult the partition side.
pub fn enumerate_rims(n: usize) -> Result<Vec<Rim>> {
    check_n(n)?;
    let mut out = BTreeSet::new();
    for k in 1..=n {
        chains_from(
            n,
            k,
            |_| true,
            |walk| {
                out.insert(Rim::from_sites_unchecked(
                    n,
                    walk[1..].iter().map(|&(j, kk)| Site::canonical(j, kk, n)),
                ));
                false
            },
        );
    }
    Ok(out.into_iter().collect())
}

/// The matrix with rows `e_L` for `L` in the rim, rows in site order.
pub fn rim_matrix(lambda: &Partition, n: usize) -> Result<Vec<Vec<i64>>> {
    let rim = rim_of_partition(lambda, n)?;
    Ok(rim.sites.iter().map(|s| s.incidence(n)).collect())
}

/// Exact determinant of [`rim_matrix`]; its absolute value is always 2.
pub fn rim_matrix_det(lambda: &Partition, n: usize) -> Result<i64> {
    Ok(det_bareiss(rim_matrix(lambda, n)?))
}

/// A function on the sites of the strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripFunction {
    n: usize,
    values: Vec<Rational64>,
}

impl StripFunction {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, site: Site) -> Rational64 {
        self.values[site.index(self.n)]
    }

    /// Value at the class of the (not necessarily canonical) pair `(j, k)`.
    pub fn at(&self, j: i64, k: i64) -> Rational64 {
        self.get(Site::canonical(j, k, self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Site, Rational64)> + '_ {
        all_sites(self.n)
            .into_iter()
            .zip(self.values.iter().copied())
    }

    pub fn zeros(&self) -> Vec<Site> {
        self.iter()
            .filter(|(_, v)| *v == Rational64::from_integer(0))
            .map(|(s, _)| s)
            .collect()
    }

    pub fn min(&self) -> Rational64 {
        self.values
            .iter()
            .copied()
            .min()
            .expect("at least one site")
    }
}

/// `f~(j, k) = (f(j) + f(k) - d(j, k)) / 2` on every site.
pub fn extend_function(f: &[Rational64], n: usize) -> Result<StripFunction> {
    check_n(n)?;
    if f.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: f.len(),
        });
    }
    let half = Rational64::new(1, 2);
    let values = all_sites(n)
        .into_iter()
        .map(|s| {
            let d = cyclic_distance(s.j, s.k, n).expect("canonical indices") as i64;
            (f[s.j] + f[s.k] - Rational64::from_integer(d)) * half
        })
        .collect();
    Ok(StripFunction { n, values })
}

/// [`extend_function`] for integer vectors.
pub fn extend_integer_function(f: &[i64], n: usize) -> Result<StripFunction> {
    let f: Vec<Rational64> = f.iter().map(|&v| Rational64::from_integer(v)).collect();
    extend_function(&f, n)
}

/// Number of boxes of the shape bordered by the rim of `lambda` whose bottom
/// box is at `site`; zero on the rim. Computed from the rim geometry alone.
pub fn box_count_alpha(lambda: &Partition, site: Site, n: usize) -> Result<usize> {
    let h = RimHeight::of_partition(lambda, n)?;
    if site.k >= n {
        return Err(Error::IndexOutOfRange { index: site.k, n });
    }
    // the lift lying below the rim; the deck map swaps the two sides
    let (j, k) = (site.j as i64, site.k as i64);
    let mut lift = (j + k, j - k);
    if lift.1 >= h.at(lift.0) {
        lift = (k + j + n as i64, k - j - n as i64);
    }
    let (x0, y0) = lift;
    if y0 >= h.at(x0) {
        return Ok(0);
    }
    let column = |x: i64| -> i64 {
        let gap = h.at(x) - y0 - (x - x0).abs();
        if gap > 0 {
            gap / 2
        } else {
            0
        }
    };
    let mut total = column(x0);
    for dir in [-1i64, 1] {
        let mut x = x0 + dir;
        loop {
            let c = column(x);
            if c == 0 {
                break;
            }
            total += c;
            x += dir;
        }
    }
    Ok(total as usize)
}

/// The 2x2 squares `(A, B, C, D) = ((j,k+1), (j,k), (j+1,k+1), (j+1,k))`
/// for `0 <= j < k <= N - 1`.
pub fn squares(n: usize) -> Vec<[Site; 4]> {
    let c = |j: usize, k: usize| Site::canonical(j as i64, k as i64, n);
    (0..n)
        .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
        .map(|(j, k)| [c(j, k + 1), c(j, k), c(j + 1, k + 1), c(j + 1, k)])
        .collect()
}

/// The boundary triples `(A, B, C) = ((j,j+1), (j,j), (j+1,j+1))`.
pub fn triples(n: usize) -> Vec<[Site; 3]> {
    let c = |j: usize, k: usize| Site::canonical(j as i64, k as i64, n);
    (0..n)
        .map(|j| [c(j, j + 1), c(j, j), c(j + 1, j + 1)])
        .collect()
}
