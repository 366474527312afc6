//! Continuous partitions: 1-Lipschitz profiles `Lambda` with
//! `Lambda(t + 1) = 1 - Lambda(t)`, their 2-periodic area functions
//! `F_Lambda`, the boundary family `R_r`, and the discretization of
//! partitions in `Y_N` into such profiles.
//!
//! All arithmetic is exact over `BigRational`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::RimHeight;
use crate::partition::Partition;

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

fn half() -> Q {
    q_frac(1, 2)
}

/// A profile given by its values on one period `[u, u + 1]`, linear between
/// breakpoints and extended antiperiodically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    u: Q,
    points: Vec<(Q, Q)>,
}

/// Builds a validated profile.
///
/// The breakpoints must start at `(u, -u)`. They must end at
/// `(u + 1, u + 1)`, or, when `complete` is set, at some `(v, v)` with
/// `v < u + 1`, in which case the profile continues as `t -> t` up to `u + 1`.
pub fn make_profile(u: Q, breakpoints: Vec<(Q, Q)>, complete: bool) -> Result<PLFunction> {
    let bad = |msg: String| Err(Error::Profile(msg));
    if u < q(-1) || u > q(0) {
        return bad(format!("u = {u} is outside [-1, 0]"));
    }
    let mut points = breakpoints;
    match points.first() {
        None => return bad("no breakpoints".into()),
        Some((t, v)) if *t != u || *v != -u.clone() => {
            return bad(format!(
                "first breakpoint ({t}, {v}) is not (u, -u) = ({u}, {})",
                -u.clone()
            ))
        }
        _ => {}
    }
    let end = &u + q(1);
    let (last_t, last_v) = points.last().cloned().expect("nonempty");
    if last_t != end {
        if complete && last_t < end && last_v == last_t {
            points.push((end.clone(), end.clone()));
        } else {
            return bad(format!(
                "last breakpoint ({last_t}, {last_v}) is not (u + 1, u + 1) = ({end}, {end})"
            ));
        }
    } else if last_v != end {
        return bad(format!("value {last_v} at u + 1 = {end} should be {end}"));
    }
    for (i, w) in points.windows(2).enumerate() {
        let (t0, v0) = &w[0];
        let (t1, v1) = &w[1];
        if t1 <= t0 {
            return bad(format!(
                "segment {i}: breakpoints not increasing ({t0} then {t1})"
            ));
        }
        if (v1 - v0).abs() > t1 - t0 {
            return bad(format!(
                "segment {i} from ({t0}, {v0}) to ({t1}, {v1}) has slope above 1 in absolute value"
            ));
        }
    }
    // implied by the boundary values and the Lipschitz bound; checked anyway
    if let Some((t, v)) = points.iter().find(|(_, v)| *v < q(0) || *v > q(1)) {
        return bad(format!("value {v} at {t} is outside [0, 1]"));
    }
    Ok(PLFunction { u, points })
}

impl PLFunction {
    pub fn u(&self) -> &Q {
        &self.u
    }

    pub fn breakpoints(&self) -> &[(Q, Q)] {
        &self.points
    }

    /// Value on the base period `[u, u + 1]`.
    fn base(&self, t: &Q) -> Q {
        let idx = self.points.partition_point(|(s, _)| s <= t);
        if idx == 0 {
            return self.points[0].1.clone();
        }
        if idx == self.points.len() {
            return self.points[idx - 1].1.clone();
        }
        let (t0, v0) = &self.points[idx - 1];
        let (t1, v1) = &self.points[idx];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    /// Splits `t = u + n + s` with `s` in `[0, 1)`.
    fn split(&self, t: &Q) -> (BigInt, Q) {
        let off = t - &self.u;
        let n = off.floor().to_integer();
        let s = off - Q::from_integer(n.clone());
        (n, s)
    }

    pub fn eval(&self, t: &Q) -> Q {
        let (n, s) = self.split(t);
        let v = self.base(&(&self.u + s));
        if n.is_even() {
            v
        } else {
            q(1) - v
        }
    }

    /// `int_u^{u+s} Lambda` for `s` in `[0, 1]`.
    fn base_integral(&self, s: &Q) -> Q {
        let end = &self.u + s;
        let mut total = Q::zero();
        for w in self.points.windows(2) {
            let (t0, v0) = &w[0];
            let (t1, v1) = &w[1];
            if *t0 >= end {
                break;
            }
            let hi = if *t1 < end { t1.clone() } else { end.clone() };
            let v_hi = v0 + (v1 - v0) * (&hi - t0) / (t1 - t0);
            total += (v0 + v_hi) * (&hi - t0) * half();
        }
        total
    }

    /// `G(t) = int_u^t Lambda`, using `G(t + 2) = G(t) + 1`.
    fn primitive(&self, t: &Q) -> Q {
        let off = t - &self.u;
        let two = q(2);
        let periods = (&off / &two).floor();
        let r = off - &periods * &two;
        let within = if r < q(1) {
            self.base_integral(&r)
        } else {
            let s = &r - q(1);
            self.base_integral(&q(1)) + &s - self.base_integral(&s)
        };
        periods + within
    }

    pub fn integral(&self, a: &Q, b: &Q) -> Q {
        self.primitive(b) - self.primitive(a)
    }

    /// Breakpoints over two periods `[u, u + 2]`.
    fn double_period(&self) -> Vec<(Q, Q)> {
        let mut nodes = self.points.clone();
        nodes.extend(
            self.points
                .iter()
                .skip(1)
                .map(|(t, v)| (t + q(1), q(1) - v)),
        );
        nodes
    }

    /// Leftmost `a` with `a + Lambda(a) = t`. The map `a -> a + Lambda(a)` is
    /// continuous and nondecreasing and advances by 2 over two periods.
    pub fn solve_anchor(&self, t: &Q) -> Q {
        let two = q(2);
        let periods = (t / &two).floor();
        let target = t - &periods * &two;
        let nodes = self.double_period();
        let phi: Vec<Q> = nodes.iter().map(|(a, v)| a + v).collect();
        // phi(u) = 0 and phi(u + 2) = 2; target lies in [0, 2)
        let idx = phi.partition_point(|p| *p < target);
        let a = if phi[idx] == target {
            nodes[idx].0.clone()
        } else {
            let (a0, a1) = (&nodes[idx - 1].0, &nodes[idx].0);
            let (p0, p1) = (&phi[idx - 1], &phi[idx]);
            a0 + (&target - p0) * (a1 - a0) / (p1 - p0)
        };
        a + periods * two
    }

    /// `F(t) = int_a^{a+1} Lambda - (Lambda(a)^2 + Lambda(a+1)^2) / 2` where
    /// `t = a + Lambda(a)`.
    pub fn area(&self, t: &Q) -> Q {
        let a = self.solve_anchor(t);
        self.area_at_anchor(&a)
    }

    fn area_at_anchor(&self, a: &Q) -> Q {
        let b = a + q(1);
        let (la, lb) = (self.eval(a), self.eval(&b));
        self.integral(a, &b) - (&la * &la + &lb * &lb) * half()
    }

    /// Both sides of `F(a + Lambda(a)) + F(b + Lambda(b)) = 2 Lambda(a) Lambda(b)`
    /// for `b = a + 1`.
    pub fn rectangle_identity(&self, a: &Q) -> (Q, Q) {
        let b = a + q(1);
        let (la, lb) = (self.eval(a), self.eval(&b));
        let lhs = self.area(&(a + &la)) + self.area(&(&b + &lb));
        let rhs = q(2) * la * lb;
        (lhs, rhs)
    }

    /// Some `r` in `[0, 1]` with `Lambda(2r) = 0`, if `Lambda` has a zero.
    ///
    /// On `[u, u + 1]` we have `Lambda(t) >= |t|`, so a zero there can only
    /// sit at 0; on `[u + 1, u + 2]` zeros come from values 1 one period
    /// earlier.
    pub fn zero(&self) -> Option<Q> {
        if self.eval(&q(0)).is_zero() {
            return Some(q(0));
        }
        let top = self
            .points
            .iter()
            .find(|(_, v)| *v == q(1))
            .map(|(t, _)| t + q(1))?;
        Some(top * half())
    }

    /// Minimum of `F` over a period, exact. `F` as a function of the anchor
    /// `a` has derivative `(1 - 2 Lambda(a)) (1 + Lambda'(a))`, so minima sit
    /// at breakpoints or where `Lambda = 1/2`.
    pub fn area_min(&self) -> Q {
        let nodes = self.double_period();
        let mut candidates: Vec<Q> = nodes.iter().map(|(a, _)| a.clone()).collect();
        for w in nodes.windows(2) {
            let (a0, v0) = &w[0];
            let (a1, v1) = &w[1];
            let h = half();
            if v0 != v1 && (v0.min(v1) <= &h) && (&h <= v0.max(v1)) {
                candidates.push(a0 + (&h - v0) * (a1 - a0) / (v1 - v0));
            }
        }
        candidates
            .iter()
            .map(|a| self.area_at_anchor(a))
            .min()
            .expect("nonempty")
    }

    /// Pointwise equality as functions on the real line.
    pub fn same_function(&self, other: &PLFunction) -> bool {
        let mut ts: Vec<Q> = self.points.iter().map(|(t, _)| t.clone()).collect();
        for (t, _) in &other.points {
            let off = t - &self.u;
            ts.push(&self.u + (&off - off.floor()));
        }
        // agreement on one period plus antiperiodicity gives agreement everywhere
        ts.iter().all(|t| self.eval(t) == other.eval(t))
    }
}

/// The profile `R_r`: `t + 2 - 2r` on `[r - 1, 2r - 1]` and `2r - t` on
/// `[2r - 1, r]`. It is the unique profile vanishing at `2r`.
pub fn rectangular_r(r: &Q) -> Result<PLFunction> {
    if *r < q(0) || *r > q(1) {
        return Err(Error::ParameterOutOfRange(r.to_string()));
    }
    let u = r - q(1);
    let peak = q(2) * r - q(1);
    let mut pts = vec![
        (u.clone(), -u.clone()),
        (peak, q(1)),
        (r.clone(), r.clone()),
    ];
    pts.dedup_by(|b, a| a.0 == b.0);
    make_profile(u, pts, false)
}

/// `D(r, s) = 2 |s - r| (1 - |s - r|)`.
pub fn distance_d(r: &Q, s: &Q) -> Result<Q> {
    for x in [r, s] {
        if *x < q(0) || *x > q(1) {
            return Err(Error::ParameterOutOfRange(x.to_string()));
        }
    }
    let gap = (s - r).abs();
    Ok(q(2) * &gap * (q(1) - gap))
}

/// Largest `|F_{R_r}(t) - F_{R_s}(t)|` over `samples` equally spaced `t`
/// in one period `[0, 2)`.
pub fn distance_d_sampled(r: &Q, s: &Q, samples: usize) -> Result<f64> {
    let (fr, fs) = (rectangular_r(r)?, rectangular_r(s)?);
    let mut best = 0.0f64;
    for k in 0..samples {
        let t = q_frac(2 * k as i64, samples as i64);
        let gap = (fr.area(&t) - fs.area(&t)).abs();
        best = best.max(gap.to_f64().unwrap_or(f64::NAN));
    }
    Ok(best)
}

/// Integer profile of a partition: `Lambda_N(j + k - N) = N - (k - j)` for
/// rim sites `(j, k)`, extended by `Lambda_N(t + N) = N - Lambda_N(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discretization {
    n: usize,
    rim: RimHeight,
    first: usize,
}

impl Discretization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, t: i64) -> i64 {
        self.rim.at(t + self.n as i64) + self.n as i64
    }

    /// The `N` consecutive abscissae `l1 - N ..= l1 - 1` read off the rim.
    pub fn domain(&self) -> std::ops::RangeInclusive<i64> {
        let (n, l1) = (self.n as i64, self.first as i64);
        l1 - n..=l1 - 1
    }

    pub fn table(&self) -> Vec<(i64, i64)> {
        self.domain().map(|t| (t, self.at(t))).collect()
    }

    /// The profile `(t, h) -> (t / N, h / N)` on `[u, u + 1]` with
    /// `u = l1 / N - 1`.
    pub fn scaled(&self) -> Result<PLFunction> {
        let (n, l1) = (self.n as i64, self.first as i64);
        let pts = (l1 - n..=l1)
            .map(|t| (q_frac(t, n), q_frac(self.at(t), n)))
            .collect();
        make_profile(q_frac(l1 - n, n), pts, false)
    }
}

pub fn discretize_profile(lambda: &Partition, n: usize) -> Result<Discretization> {
    Ok(Discretization {
        n,
        rim: RimHeight::of_partition(lambda, n)?,
        first: lambda.part(1),
    })
}

/// A random profile with breakpoints on the grid `1/denom`.
///
/// Interior abscissae are drawn first; each value is then drawn from the
/// interval that keeps the slope within `[-1, 1]` and the end point
/// `(u + 1, u + 1)` reachable.
pub fn random_profile<R: Rng + ?Sized>(rng: &mut R, pieces: usize, denom: i64) -> PLFunction {
    let g = |k: i64| q_frac(k, denom);
    let u_k = -rng.gen_range(0..=denom);
    let mut interior: Vec<i64> = (1..denom).collect();
    let take = pieces.saturating_sub(1).min(interior.len());
    for i in 0..take {
        let j = rng.gen_range(i..interior.len());
        interior.swap(i, j);
    }
    let mut ts: Vec<i64> = interior[..take].iter().map(|&d| u_k + d).collect();
    ts.sort_unstable();
    ts.push(u_k + denom);

    let end_t = u_k + denom;
    let end_v = u_k + denom;
    let mut pts = vec![(g(u_k), g(-u_k))];
    let (mut prev_t, mut prev_v) = (u_k, -u_k);
    for &t in &ts {
        let dt = t - prev_t;
        let rem = end_t - t;
        let lo = (prev_v - dt).max(end_v - rem);
        let hi = (prev_v + dt).min(end_v + rem);
        let v = if t == end_t {
            end_v
        } else {
            rng.gen_range(lo..=hi)
        };
        pts.push((g(t), g(v)));
        (prev_t, prev_v) = (t, v);
    }
    make_profile(g(u_k), pts, false).expect("generator respects the constraints")
}

/// JSON form `{"u": "p/q", "breakpoints": [["p/q", "p/q"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub u: String,
    pub breakpoints: Vec<[String; 2]>,
}

impl From<&PLFunction> for ProfileJson {
    fn from(p: &PLFunction) -> Self {
        ProfileJson {
            u: p.u.to_string(),
            breakpoints: p
                .points
                .iter()
                .map(|(t, v)| [t.to_string(), v.to_string()])
                .collect(),
        }
    }
}

impl TryFrom<ProfileJson> for PLFunction {
    type Error = Error;

    fn try_from(j: ProfileJson) -> Result<Self> {
        let parse = |s: &str| {
            Q::from_str(s.trim()).map_err(|_| Error::Profile(format!("not a rational: {s:?}")))
        };
        let u = parse(&j.u)?;
        let pts = j
            .breakpoints
            .iter()
            .map(|[t, v]| Ok((parse(t)?, parse(v)?)))
            .collect::<Result<Vec<_>>>()?;
        make_profile(u, pts, false)
    }
}

impl Serialize for PLFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProfileJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PLFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ProfileJson::deserialize(d)?;
        PLFunction::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_profile() {
        let r0 = make_profile(q(0), vec![(q(0), q(0)), (q(1), q(1))], false).unwrap();
        assert!(r0.same_function(&rectangular_r(&q(0)).unwrap()));
        assert!(make_profile(
            q(0),
            vec![(q(0), q(0)), (half(), q(1)), (q(1), q(1))],
            false
        )
        .is_err());
    }

    #[test]
    fn completion_flag() {
        let short = vec![
            (q_frac(-1, 2), half()),
            (q(0), q(0)),
            (q_frac(1, 4), q_frac(1, 4)),
        ];
        assert!(make_profile(q_frac(-1, 2), short.clone(), false).is_err());
        let done = make_profile(q_frac(-1, 2), short, true).unwrap();
        assert_eq!(done.eval(&half()), half());
    }

    #[test]
    fn rejects_bad_boundaries() {
        assert!(make_profile(q(1), vec![(q(1), q(-1))], false).is_err());
        assert!(make_profile(q(0), vec![(q(0), half()), (q(1), q(1))], false).is_err());
        let err = make_profile(
            q(0),
            vec![(q(0), q(0)), (half(), q(1)), (q(1), q(1))],
            false,
        )
        .unwrap_err();
        assert!(err.to_string().contains("segment 0"));
    }

    #[test]
    fn rectangular_examples() {
        for (a, b) in [(1, 3), (1, 2), (2, 5), (0, 1), (1, 1)] {
            let r = q_frac(a, b);
            let f = rectangular_r(&r).unwrap();
            assert_eq!(f.eval(&r), r);
            assert!(f.eval(&(q(2) * &r)).is_zero());
        }
        let (r0, r1) = (rectangular_r(&q(0)).unwrap(), rectangular_r(&q(1)).unwrap());
        for k in -20..=20 {
            let t = q_frac(k, 7);
            assert_eq!(r0.eval(&t), r1.eval(&t));
        }
        assert!(rectangular_r(&q(2)).is_err());
    }

    #[test]
    fn area_of_rectangular() {
        for (a, b) in [(0, 1), (1, 3), (1, 2), (3, 4), (1, 1)] {
            let r = q_frac(a, b);
            let f = rectangular_r(&r).unwrap();
            for k in 0..=16 {
                let t = q(2) * &r + q_frac(k, 8);
                let want = half() * (&t - q(2) * &r) * (q(2) * &r + q(2) - &t);
                assert_eq!(f.area(&t), want, "r={r} t={t}");
            }
        }
    }

    #[test]
    fn worked_rectangle_identity() {
        let f = rectangular_r(&q(0)).unwrap();
        let a = q_frac(-1, 2);
        assert_eq!(f.area(&q(0)), q(0));
        assert_eq!(f.area(&q(1)), half());
        let (lhs, rhs) = f.rectangle_identity(&a);
        assert_eq!(lhs, half());
        assert_eq!(rhs, half());
    }

    #[test]
    fn distance_examples() {
        assert!(distance_d(&half(), &half()).unwrap().is_zero());
        assert_eq!(distance_d(&q(0), &half()).unwrap(), half());
        for (r, s) in [
            (q(0), half()),
            (q_frac(1, 5), q_frac(3, 4)),
            (q_frac(1, 3), q(1)),
        ] {
            let sup = distance_d_sampled(&r, &s, 10_000).unwrap();
            let exact = distance_d(&r, &s).unwrap().to_f64().unwrap();
            assert!((sup - exact).abs() < 1e-9, "r={r} s={s}: {sup} vs {exact}");
        }
        for n in 2..=9i64 {
            for j in 0..n {
                for k in 0..n {
                    let d = distance_d(&q_frac(j, n), &q_frac(k, n)).unwrap();
                    let gap = (j - k).abs();
                    assert_eq!(d * q(n * n) * half(), q(gap * (n - gap)));
                }
            }
        }
    }

    #[test]
    fn discretized_example() {
        let d = discretize_profile(&p("5,3,3,2"), 9).unwrap();
        let table: Vec<i64> = d.table().iter().map(|&(_, v)| v).collect();
        assert_eq!(table, vec![4, 5, 6, 5, 6, 5, 4, 5, 6]);
        assert_eq!(d.domain(), -4..=4);
        assert_eq!((d.at(-4), d.at(5)), (4, 5));
        assert_eq!(d.at(0), 2 * 3);
    }

    #[test]
    fn empty_partition_profile() {
        for n in 2..=8 {
            let d = discretize_profile(&Partition::empty(), n).unwrap();
            for (t, v) in d.table() {
                assert_eq!(v, t.abs());
            }
            assert!(d
                .scaled()
                .unwrap()
                .same_function(&rectangular_r(&q(0)).unwrap()));
        }
    }

    #[test]
    fn zeros_and_area_zeros() {
        for (a, b) in [(0, 1), (1, 3), (1, 2), (5, 7)] {
            let r = q_frac(a, b);
            let f = rectangular_r(&r).unwrap();
            let z = f.zero().expect("R_r has a zero");
            assert!(f.eval(&(q(2) * &z)).is_zero());
            assert!(f.same_function(&rectangular_r(&z).unwrap()));
            assert!(f.area_min().is_zero());
        }
        let flat = make_profile(
            q_frac(-1, 2),
            vec![(q_frac(-1, 2), half()), (q(0), half()), (half(), half())],
            false,
        )
        .unwrap();
        assert!(flat.zero().is_none());
        assert!(flat.area_min() > q(0));
    }

    #[test]
    fn random_profiles_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let f = random_profile(&mut rng, 6, 24);
            for w in f.breakpoints().windows(2) {
                assert!((&w[1].1 - &w[0].1).abs() <= &w[1].0 - &w[0].0);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = rectangular_r(&q_frac(1, 3)).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"u":"-2/3","breakpoints":[["-2/3","2/3"],["-1/3","1"],["1/3","1/3"]]}"#
        );
        let back: PLFunction = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<PLFunction>(r#"{"u":"x","breakpoints":[]}"#).is_err());
    }
}
