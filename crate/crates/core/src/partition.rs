//! Integer partitions restricted to the lattice `Y_N` of partitions whose
//! maximal hook length is below `N`, together with the cyclic actions
//! `tau` and `sigma` of order `N` on that lattice.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_n, Error, Result};

/// A partition stored as weakly decreasing positive parts.
///
/// The empty partition is the empty sequence. Trailing zeros are never
/// stored, so two partitions are equal exactly when their parts are.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A removable box, 1-based `(row, column)`. Serialized as `[row, col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Corner {
    pub row: usize,
    pub col: usize,
}

impl From<[usize; 2]> for Corner {
    fn from([row, col]: [usize; 2]) -> Self {
        Corner { row, col }
    }
}

impl From<Corner> for [usize; 2] {
    fn from(c: Corner) -> Self {
        [c.row, c.col]
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::PartitionSyntax {
                text: format!("{parts:?}"),
                reason: "zero part before a positive part".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartitionSyntax {
                text: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Rectangle with `rows` rows of length `width`; empty if either is zero.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` with the 1-based convention; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Hook length of the box (1,1); zero for the empty partition.
    pub fn max_hook(&self) -> usize {
        match self.parts.first() {
            None => 0,
            Some(&first) => first + self.parts.len() - 1,
        }
    }

    pub fn in_young(&self, n: usize) -> bool {
        self.max_hook() < n
    }

    pub(crate) fn check_young(&self, n: usize) -> Result<()> {
        check_n(n)?;
        if self.in_young(n) {
            Ok(())
        } else {
            Err(Error::NotInYoungN {
                partition: self.clone(),
                hook: self.max_hook(),
                n,
            })
        }
    }

    /// The transposed diagram.
    pub fn dual(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Removable boxes, top row first.
    pub fn inner_corners(&self) -> Vec<Corner> {
        let m = self.parts.len();
        (0..m)
            .filter(|&i| i + 1 == m || self.parts[i + 1] < self.parts[i])
            .map(|i| Corner {
                row: i + 1,
                col: self.parts[i],
            })
            .collect()
    }

    pub fn is_inner_corner(&self, corner: Corner) -> bool {
        corner.row >= 1
            && self.part(corner.row) == corner.col
            && corner.col > 0
            && self.part(corner.row + 1) < corner.col
    }

    /// Removes one box given as an inner corner.
    pub fn remove_corner(&self, corner: Corner) -> Result<Partition> {
        if !self.is_inner_corner(corner) {
            return Err(Error::NotACorner {
                partition: self.clone(),
                row: corner.row,
                col: corner.col,
            });
        }
        let mut parts = self.parts.clone();
        parts[corner.row - 1] -= 1;
        Partition::new(parts)
    }

    /// Removes a set of inner corners at once. Distinct inner corners sit in
    /// distinct rows and stay removable after each other's removal.
    pub fn remove_corners(&self, corners: &[Corner]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for &c in corners {
            if !self.is_inner_corner(c) {
                return Err(Error::NotACorner {
                    partition: self.clone(),
                    row: c.row,
                    col: c.col,
                });
            }
            parts[c.row - 1] -= 1;
        }
        Partition::new(parts)
    }

    /// Side of the largest square fitting in the top-left of the diagram.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// True iff `other` is obtained from `self` by deleting one inner corner.
    pub fn covers(&self, other: &Partition) -> bool {
        if self.size() != other.size() + 1 {
            return false;
        }
        if other.len() > self.len() {
            return false;
        }
        let mut diff_rows = (1..=self.len()).filter(|&i| self.part(i) != other.part(i));
        match (diff_rows.next(), diff_rows.next()) {
            (Some(row), None) => {
                self.part(row) == other.part(row) + 1
                    && self.is_inner_corner(Corner {
                        row,
                        col: self.part(row),
                    })
            }
            _ => false,
        }
    }

    /// The cyclic action `tau`: `(N-m-1, l1-1, ..., lm-1)` with trailing
    /// zeros removed, where the empty partition is read as `m = 0, l1 = 1`.
    pub fn tau(&self, n: usize) -> Result<Partition> {
        self.check_young(n)?;
        Ok(self.tau_unchecked(n))
    }

    pub(crate) fn tau_unchecked(&self, n: usize) -> Partition {
        let m = self.parts.len();
        let mut parts = Vec::with_capacity(m + 1);
        parts.push(n - m - 1);
        parts.extend(self.parts.iter().map(|&p| p - 1));
        // an empty first part means the result is empty
        Partition::new(parts).expect("tau keeps parts decreasing")
    }

    /// Inverse of [`Partition::tau`]: `(l2+1, ..., l_{N-l1}+1)` with zero
    /// padding, where the empty partition is read as `m = 1, l1 = 0`.
    pub fn sigma(&self, n: usize) -> Result<Partition> {
        self.check_young(n)?;
        let first = self.part(1);
        let parts = (2..=n - first).map(|i| self.part(i) + 1).collect();
        Partition::new(parts)
    }

    /// Applies `tau` `times` times.
    pub fn tau_pow(&self, n: usize, times: usize) -> Result<Partition> {
        self.check_young(n)?;
        let mut cur = self.clone();
        for _ in 0..times % n {
            cur = cur.tau_unchecked(n);
        }
        Ok(cur)
    }

    /// Size of the `tau`-orbit of `self` inside `Y_N`.
    pub fn tau_orbit_len(&self, n: usize) -> Result<usize> {
        self.check_young(n)?;
        let mut cur = self.tau_unchecked(n);
        let mut len = 1;
        while &cur != self {
            cur = cur.tau_unchecked(n);
            len += 1;
        }
        Ok(len)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated decreasing parts; `0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let syntax = |reason: &str| Error::PartitionSyntax {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        if text == "0" {
            return Ok(Partition::empty());
        }
        if text.is_empty() {
            return Err(syntax("empty text; use 0 for the empty partition"));
        }
        let parts = text
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| syntax(&e.to_string()))?;
        if parts.contains(&0) {
            return Err(syntax("parts must be positive"));
        }
        Partition::new(parts).map_err(|_| syntax("parts must be weakly decreasing"))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// All partitions with maximal hook below `n`, lexicographic on parts
/// with the empty partition first. There are `2^(n-1)` of them.
pub fn enumerate_young(n: usize) -> Result<Vec<Partition>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut stack = Vec::new();
    push_extensions(n, &mut stack, &mut out);
    Ok(out)
}

fn push_extensions(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: prefix.clone(),
    });
    let (max_part, first) = match prefix.first() {
        None => (n - 1, None),
        Some(&f) => (*prefix.last().unwrap(), Some(f)),
    };
    for p in 1..=max_part {
        // hook of the extended partition: first part + new length - 1
        let hook = first.unwrap_or(p) + prefix.len();
        if hook >= n {
            break;
        }
        prefix.push(p);
        push_extensions(n, prefix, out);
        prefix.pop();
    }
}

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of partitions in `Y_N` with exactly `s` inner corners, counted
/// over the enumeration. Equals `C(N, 2s)`.
pub fn count_by_inner_corners(n: usize, s: usize) -> Result<u64> {
    Ok(enumerate_young(n)?
        .iter()
        .filter(|l| l.inner_corners().len() == s)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn max_hook_examples() {
        assert_eq!(p("5,3,3,2").max_hook(), 8);
        assert_eq!(Partition::empty().max_hook(), 0);
        assert_eq!(p("2,2").max_hook(), 3);
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(
            enumerate_young(2).unwrap(),
            vec![Partition::empty(), p("1")]
        );
        assert_eq!(enumerate_young(5).unwrap().len(), 16);
        assert_eq!(enumerate_young(6).unwrap().len(), 32);
        assert!(enumerate_young(1).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_young(8).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|l| l.in_young(8)));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(Partition::empty().dual(), Partition::empty());
        assert_eq!(p("5,3,3,2").dual(), p("4,4,3,1,1"));
        assert_eq!(p("2,2,2").dual(), p("3,3"));
    }

    #[test]
    fn inner_corner_examples() {
        let rows: Vec<usize> = p("5,3,3,2").inner_corners().iter().map(|c| c.row).collect();
        assert_eq!(rows, vec![1, 3, 4]);
        assert!(Partition::empty().inner_corners().is_empty());
        assert_eq!(p("2,2").inner_corners(), vec![Corner { row: 2, col: 2 }]);
    }

    #[test]
    fn covers_examples() {
        assert!(p("1").covers(&Partition::empty()));
        assert!(p("5,3,3,2").covers(&p("5,3,3,1")));
        assert!(!p("2,2").covers(&p("2")));
        assert!(!p("2,1").covers(&p("1,1,1")));
        assert!(!p("3,1").covers(&p("2,2")));
    }

    #[test]
    fn tau_sigma_examples() {
        assert_eq!(Partition::empty().tau(4).unwrap(), p("3"));
        assert_eq!(p("3").sigma(4).unwrap(), Partition::empty());
        assert_eq!(p("2,1").tau(5).unwrap(), p("2,1"));
        assert_eq!(p("5,3,3,2").tau(9).unwrap(), p("4,4,2,2,1"));
        assert!(p("3,1").tau(4).is_err());
    }

    #[test]
    fn inner_corner_census() {
        assert_eq!(count_by_inner_corners(9, 0).unwrap(), 1);
        assert_eq!(count_by_inner_corners(9, 2).unwrap(), 126);
        for n in 2..=10 {
            let total: u64 = (0..=n / 2)
                .map(|s| count_by_inner_corners(n, s).unwrap())
                .sum();
            assert_eq!(total, 1 << (n - 1));
        }
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p("5,3,3,2").durfee_side(), 3);
        assert_eq!(Partition::empty().durfee_side(), 0);
        assert_eq!(p("1").durfee_side(), 1);
    }

    #[test]
    fn text_format() {
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(" 5, 3,3 ,2").to_string(), "5,3,3,2");
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_as_array() {
        let json = serde_json::to_string(&p("4,1")).unwrap();
        assert_eq!(json, "[4,1]");
        let back: Partition = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back, p("4,1"));
        assert!(serde_json::from_str::<Partition>("[1,4]").is_err());
    }
}
