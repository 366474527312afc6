//! Cross-module consistency checks for one `N`, collected into a report.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::continuous::{discretize_profile, distance_d, random_profile, rectangular_r, Q};
use crate::error::{check_n, check_range, Result};
use crate::hull::{
    cyclic_distance, enumerate_faces, face_count_by_corners, face_count_closed, hasse_skeleton,
    in_hull, norm_extremes, oracle_vertices, squared_distance, vertex_recursive, ORACLE_MAX_N,
};
use crate::moebius::{
    box_count_alpha, enumerate_rims, extend_integer_function, partition_of_rim, rim_matrix_det,
    rim_of_partition, squares, triples,
};
use crate::partition::{binomial, count_by_inner_corners, enumerate_young};
use crate::projection::{circulant_det, ngon_vertex, projection_matrix, Circulant};

pub const VERIFY_MAX_N: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<width$}  {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub oracle: bool,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle: false,
            samples: 100,
            seed: 0,
        }
    }
}

pub fn verify(n: usize, opts: VerifyOptions) -> Result<Report> {
    check_n(n)?;
    check_range("verify", n, 2, VERIFY_MAX_N)?;
    if opts.oracle {
        check_range("the vertex oracle", n, 2, ORACLE_MAX_N)?;
    }
    let mut report = Report {
        n,
        checks: Vec::new(),
    };
    let young = enumerate_young(n)?;
    let expected = 1usize << (n - 1);
    report.push(
        "cardinality",
        young.len() == expected,
        format!("{} partitions, expected {expected}", young.len()),
    );

    let round_trip = young.par_iter().all(
        |l| matches!(rim_of_partition(l, n).and_then(|r| partition_of_rim(&r)), Ok(m) if m == *l),
    );
    let rims = enumerate_rims(n)?.len();
    report.push(
        "rim bijection",
        round_trip && rims == expected,
        format!(
            "{rims} rims, round trip {}",
            if round_trip { "exact" } else { "broken" }
        ),
    );

    let bad_det = young
        .par_iter()
        .filter(|l| rim_matrix_det(l, n).map(|d| d.abs() != 2).unwrap_or(true))
        .count();
    report.push(
        "rim determinant",
        bad_det == 0,
        format!("{bad_det} rims with |det| != 2"),
    );

    let skeleton = hasse_skeleton(n)?;
    let formulas = skeleton
        .vertices
        .par_iter()
        .all(|v| matches!(vertex_recursive(&v.lambda, n), Ok(r) if r == *v));
    report.push(
        "vertex formulas",
        formulas,
        "direct and recursive formulas agree",
    );

    let metric_ok = skeleton.vertices.par_iter().all(|v| {
        let f = v.as_rational();
        in_hull(&f, n).unwrap_or(false)
            && rim_of_partition(&v.lambda, n).is_ok_and(|rim| {
                rim.sites().iter().all(|s| {
                    v.values[s.j] + v.values[s.k]
                        == cyclic_distance(s.j, s.k, n).unwrap_or(0) as i64
                })
            })
    });
    report.push(
        "vertex tightness",
        metric_ok,
        "every vertex lies in E(X) and is tight on its rim",
    );

    let alpha_ok = skeleton.vertices.par_iter().all(|v| {
        extend_integer_function(&v.values, n).is_ok_and(|ext| {
            ext.iter().all(|(site, val)| {
                box_count_alpha(&v.lambda, site, n)
                    .is_ok_and(|a| Rational64::from_integer(a as i64) == val.abs())
            })
        })
    });
    report.push(
        "box counts",
        alpha_ok,
        "extended vertex equals box count on every site",
    );

    let one = Rational64::from_integer(1);
    let two = Rational64::from_integer(2);
    let big_n = Rational64::from_integer(n as i64);
    let identities_ok = skeleton.vertices.par_iter().all(|v| {
        extend_integer_function(&v.values, n).is_ok_and(|ext| {
            squares(n)
                .iter()
                .all(|[a, b, c, d]| ext.get(*a) + ext.get(*d) - ext.get(*b) - ext.get(*c) == one)
                && triples(n)
                    .iter()
                    .all(|[a, b, c]| two * ext.get(*a) + big_n - ext.get(*b) - ext.get(*c) == one)
        })
    });
    report.push(
        "square identities",
        identities_ok,
        "square and boundary triple identities",
    );

    let equivariant = skeleton.vertices.par_iter().all(|v| {
        v.lambda.tau(n).is_ok_and(|t| {
            skeleton
                .index_of(&t)
                .map(|i| &skeleton.vertices[i].values)
                .is_some_and(|w| (0..n).all(|l| w[l] == v.values[(l + 1) % n]))
        })
    });
    let fixed: Vec<String> = young
        .iter()
        .filter(|l| l.tau(n).is_ok_and(|t| t == **l))
        .map(|l| l.to_string())
        .collect();
    report.push(
        "tau equivariance",
        equivariant,
        format!("tau-fixed partitions: [{}]", fixed.join("; ")),
    );

    let mut census = Vec::new();
    let mut census_ok = true;
    for s in 0..=n / 2 {
        let got = count_by_inner_corners(n, s)?;
        let want = binomial(n as u64, 2 * s as u64);
        census_ok &= got == want;
        census.push(format!("{got}"));
    }
    report.push(
        "inner corner census",
        census_ok,
        format!("by s: {}", census.join(" ")),
    );

    let mut counts = Vec::new();
    let mut faces_ok = true;
    for v in 0..=n / 2 {
        let enumerated = enumerate_faces(n, v)?.len() as u64;
        let closed = face_count_closed(n, v)?;
        let by_corners = face_count_by_corners(n, v)?;
        faces_ok &= enumerated == closed && closed == by_corners;
        counts.push(format!("v={v}:{enumerated}"));
    }
    report.push("face counts", faces_ok, counts.join(" "));

    let edges_ok = skeleton.edges.iter().all(|[a, b]| {
        let (x, y) = (&skeleton.vertices[*a].values, &skeleton.vertices[*b].values);
        squared_distance(x, y) == n as i64 && x.iter().zip(y).all(|(p, q)| (p - q).abs() == 1)
    });
    report.push(
        "edge lengths",
        edges_ok,
        format!("{} edges of squared length {n}", skeleton.edges.len()),
    );

    let ext = norm_extremes(n)?;
    let n3 = (n * n * n) as i64;
    let min_want = if n % 2 == 1 {
        (n3 - n as i64) / 8
    } else {
        n3 / 8
    };
    report.push(
        "norm extremes",
        ext.max == (n3 - n as i64) / 6 && ext.min == min_want,
        format!(
            "max {} min {} ({} minimizers)",
            ext.max,
            ext.min,
            ext.argmin.len()
        ),
    );

    let det = Circulant::new(n)?.det_exact();
    let closed = circulant_det(n)?;
    report.push(
        "circulant determinant",
        det == closed,
        format!("det = {det}"),
    );

    let proj = projection_matrix(n)?;
    let metric_rows = crate::hull::CyclicMetric::new(n)?;
    let ngon_ok = (0..n).all(|j| {
        let p = proj.apply_int(&metric_rows.row(j));
        let q = ngon_vertex(j, n);
        (p[0] - q[0]).abs() < 1e-9 && (p[1] - q[1]).abs() < 1e-9
    });
    let origin: Vec<String> = skeleton
        .vertices
        .iter()
        .filter(|v| {
            let p = proj.apply_int(&v.values);
            p[0].abs() < 1e-9 && p[1].abs() < 1e-9
        })
        .map(|v| v.lambda.to_string())
        .collect();
    report.push(
        "projection",
        ngon_ok,
        format!("regular {n}-gon; at origin: [{}]", origin.join("; ")),
    );

    if opts.oracle {
        let found = oracle_vertices(n)?;
        let mut ours: Vec<Vec<Rational64>> =
            skeleton.vertices.iter().map(|v| v.as_rational()).collect();
        ours.sort();
        let matched = found
            .iter()
            .filter(|f| ours.binary_search(f).is_ok())
            .count();
        report.push(
            "oracle",
            found == ours,
            format!(
                "{matched} vertices matched, {} edges, {} two-faces",
                skeleton.edges.len(),
                enumerate_faces(n, 2).map(|f| f.len()).unwrap_or(0)
            ),
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut identity_ok = true;
    for _ in 0..opts.samples {
        let f = random_profile(&mut rng, 6, 24);
        for k in 0..4 {
            let a = f.u() + Q::new(BigInt::from(k), BigInt::from(4));
            let (lhs, rhs) = f.rectangle_identity(&a);
            identity_ok &= lhs == rhs;
        }
    }
    report.push(
        "rectangle identity",
        identity_ok,
        format!("{} random profiles, seed {}", opts.samples, opts.seed),
    );

    let discrete_ok = young.par_iter().all(|l| {
        discretize_profile(l, n)
            .is_ok_and(|d| d.scaled().is_ok() && d.at(0) == 2 * l.durfee_side() as i64)
    });
    let n_q = |j: usize| Q::new(BigInt::from(j), BigInt::from(n));
    let mut d_ok = true;
    for j in 0..n {
        for k in 0..n {
            let scaled = distance_d(&n_q(j), &n_q(k))? * Q::from_integer(BigInt::from(n * n))
                / Q::from_integer(BigInt::from(2));
            d_ok &= scaled == Q::from_integer(BigInt::from(cyclic_distance(j, k, n)?));
        }
    }
    let r_ok = (0..=n)
        .all(|j| rectangular_r(&n_q(j)).is_ok_and(|f| f.area_min() == Q::from_integer(0.into())));
    report.push(
        "discretization",
        discrete_ok && d_ok && r_ok,
        "profiles valid, D matches d, every R_r has a zero of F",
    );
    Ok(report)
}
