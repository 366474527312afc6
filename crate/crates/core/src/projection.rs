//! Planar projection of the hull.
//!
//! The distance matrix `C_N` of `X_N` is circulant and invertible. Its
//! columns are the hull vertices of the rectangles `(j^(N-j))`, so the map
//! `P = Rot(-pi/2) [cos; sin] C_N^{-1}` sends those vertices to a regular
//! `N`-gon and carries the rest of the 1-skeleton along.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};
use serde::Serialize;

use crate::error::{check_n, Error, Result};
use crate::hull::{hasse_skeleton, CyclicMetric};
use crate::linalg::{det_bareiss, inverse};
use crate::partition::Partition;

/// The distance matrix of `X_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circulant {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl Circulant {
    pub fn new(n: usize) -> Result<Circulant> {
        let metric = CyclicMetric::new(n)?;
        Ok(Circulant {
            n,
            entries: (0..n).map(|j| metric.row(j)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact determinant by fraction-free elimination over big integers.
    pub fn det_exact(&self) -> BigInt {
        det_bareiss(
            self.entries
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn inverse_exact(&self) -> Vec<Vec<BigRational>> {
        let m: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        inverse(&m).expect("C_N is invertible for N >= 2")
    }
}

/// `(-1)^(N+1) (2N)^(N-2) (N^2 - 1) / 3`.
pub fn circulant_det(n: usize) -> Result<BigInt> {
    check_n(n)?;
    let big_n = BigInt::from(n);
    let power: BigInt = Pow::pow(BigInt::from(2 * n), (n - 2) as u32);
    let value = power * (&big_n * &big_n - BigInt::one()) / BigInt::from(3);
    Ok(if n % 2 == 1 { value } else { -value })
}

/// The 2 x N real matrix `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneProjection {
    n: usize,
    rows: [Vec<f64>; 2],
}

impl PlaneProjection {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<f64>; 2] {
        &self.rows
    }

    pub fn apply(&self, f: &[f64]) -> [f64; 2] {
        let dot = |row: &[f64]| row.iter().zip(f).map(|(a, b)| a * b).sum::<f64>();
        [dot(&self.rows[0]), dot(&self.rows[1])]
    }

    pub fn apply_int(&self, f: &[i64]) -> [f64; 2] {
        let f: Vec<f64> = f.iter().map(|&v| v as f64).collect();
        self.apply(&f)
    }
}

/// Image of the `j`-th rectangle vertex under `P`: the point at angle
/// `2 pi j / N - pi / 2` on the unit circle.
pub fn ngon_vertex(j: usize, n: usize) -> [f64; 2] {
    let theta = 2.0 * PI * j as f64 / n as f64;
    [theta.sin(), -theta.cos()]
}

/// Builds `P` with `C_N^{-1}` computed exactly and rounded once.
pub fn projection_matrix(n: usize) -> Result<PlaneProjection> {
    let inv = Circulant::new(n)?.inverse_exact();
    let inv: Vec<Vec<f64>> = inv
        .iter()
        .map(|row| row.iter().map(|v| v.to_f64().expect("finite")).collect())
        .collect();
    let angle = |j: usize| 2.0 * PI * j as f64 / n as f64;
    let cos: Vec<f64> = (0..n).map(|j| angle(j).cos()).collect();
    let sin: Vec<f64> = (0..n).map(|j| angle(j).sin()).collect();
    // rotation block [[0, 1], [-1, 0]] turns (cos, sin) into (sin, -cos)
    let row = |coeffs: &[f64], sign: f64| -> Vec<f64> {
        (0..n)
            .map(|k| sign * (0..n).map(|j| coeffs[j] * inv[j][k]).sum::<f64>())
            .collect()
    };
    Ok(PlaneProjection {
        n,
        rows: [row(&sin, 1.0), row(&cos, -1.0)],
    })
}

/// Projected 1-skeleton.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Embedding {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub points: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

impl Embedding {
    /// Partitions whose image is within `tol` of the origin.
    pub fn at_origin(&self, tol: f64) -> Vec<Partition> {
        self.partitions
            .iter()
            .zip(&self.points)
            .filter(|(_, p)| p[0].abs() <= tol && p[1].abs() <= tol)
            .map(|(l, _)| l.clone())
            .collect()
    }
}

pub fn project_skeleton(n: usize) -> Result<Embedding> {
    let skeleton = hasse_skeleton(n)?;
    let proj = projection_matrix(n)?;
    Ok(Embedding {
        n,
        points: skeleton
            .vertices
            .iter()
            .map(|v| proj.apply_int(&v.values))
            .collect(),
        partitions: skeleton.vertices.into_iter().map(|v| v.lambda).collect(),
        edges: skeleton.edges,
    })
}

/// Drawing options; sizes in pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    pub scale: f64,
    pub radius: f64,
    pub stroke_width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 100.0,
            radius: 2.0,
            stroke_width: 1.0,
        }
    }
}

/// SVG text for an embedding: one `line` per edge, then one `circle` per
/// vertex, on a canvas fitted to the points with a 5% margin.
pub fn render_svg(embedding: &Embedding, opts: &SvgOptions) -> String {
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(first) = embedding.points.first() {
        (min_x, max_x, min_y, max_y) = (first[0], first[0], first[1], first[1]);
    }
    for p in &embedding.points {
        min_x = min_x.min(p[0]);
        max_x = max_x.max(p[0]);
        min_y = min_y.min(p[1]);
        max_y = max_y.max(p[1]);
    }
    let inner_w = (max_x - min_x) * opts.scale;
    let inner_h = (max_y - min_y) * opts.scale;
    let extent = inner_w.max(inner_h).max(1.0);
    let margin = 0.05 * extent + opts.radius;
    let width = inner_w + 2.0 * margin;
    let height = inner_h + 2.0 * margin;
    // SVG y grows downwards
    let to_px = |p: &[f64; 2]| {
        (
            clean((p[0] - min_x) * opts.scale + margin),
            clean((max_y - p[1]) * opts.scale + margin),
        )
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.3}\" height=\"{:.3}\" viewBox=\"0 0 {:.3} {:.3}\">",
        width, height, width, height
    );
    let _ = writeln!(
        out,
        "<g stroke=\"black\" stroke-width=\"{:.3}\">",
        opts.stroke_width
    );
    for [a, b] in &embedding.edges {
        let (x1, y1) = to_px(&embedding.points[*a]);
        let (x2, y2) = to_px(&embedding.points[*b]);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\"/>"
        );
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for p in &embedding.points {
        let (cx, cy) = to_px(p);
        let _ = writeln!(
            out,
            "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{:.3}\"/>",
            opts.radius
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

// avoid printing "-0.000"
fn clean(v: f64) -> f64 {
    if v.abs() < 5e-4 {
        0.0
    } else {
        v
    }
}

pub fn write_svg(embedding: &Embedding, path: &Path, opts: &SvgOptions) -> Result<()> {
    std::fs::write(path, render_svg(embedding, opts)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Rotates a point by `angle` radians.
pub fn rotate(p: [f64; 2], angle: f64) -> [f64; 2] {
    let (s, c) = angle.sin_cos();
    [c * p[0] - s * p[1], s * p[0] + c * p[1]]
}
