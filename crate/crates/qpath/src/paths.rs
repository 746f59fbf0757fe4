//! Northeast lattice paths and the binary words that encode them.
//!
//! A path is a sequence of unit east and north steps starting at (0,0).
//! Writing 1 for north and 0 for east, leftmost digit first, identifies
//! paths to (k, n-k) with binary words containing k zeros and n-k ones.
//!
//! The central statistic is [`LatticePath::area`]: the number of unit
//! squares enclosed between the path and the lower-right boundary of its
//! bounding rectangle. Under the word encoding this is exactly the number
//! of inversions, i.e. pairs of a 1 before a 0 (not necessarily adjacent),
//! and both are implemented independently so they can confirm each other.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on `width + height` for exhaustive enumeration unless the
/// caller raises it explicitly.
pub const DEFAULT_STEP_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    North,
}

/// A lattice path from the origin, as its step sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Parses a step string. East steps may be written `E`, `e`, or `0`;
    /// north steps `N`, `n`, or `1`, so both path notation and word
    /// notation are accepted anywhere a path is expected.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' | 'e' | '0' => Ok(Step::East),
                'N' | 'n' | '1' => Ok(Step::North),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected step character {other:?}; use E/N or 0/1"
                ))),
            })
            .collect::<Result<Vec<Step>>>()?;
        Ok(LatticePath::new(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of east steps.
    pub fn width(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::East).count()
    }

    /// Number of north steps.
    pub fn height(&self) -> usize {
        self.len() - self.width()
    }

    pub fn endpoint(&self) -> (usize, usize) {
        (self.width(), self.height())
    }

    /// The enclosed area: unit squares between the path and the
    /// lower-right boundary of its bounding rectangle. Each north step
    /// contributes one square per east step to its right, so this equals
    /// the inversion count of the word encoding.
    pub fn area(&self) -> u64 {
        let mut norths_seen = 0u64;
        let mut area = 0u64;
        for s in &self.steps {
            match s {
                Step::North => norths_seen += 1,
                Step::East => area += norths_seen,
            }
        }
        area
    }

    /// Reflection across the main diagonal: east and north steps swap.
    pub fn transpose(&self) -> Self {
        LatticePath::new(
            self.steps
                .iter()
                .map(|s| match s {
                    Step::East => Step::North,
                    Step::North => Step::East,
                })
                .collect(),
        )
    }

    /// For a square path, the number of north steps that start on or
    /// above the main diagonal y = x.
    pub fn exceedance(&self) -> Result<u64> {
        let (w, h) = self.endpoint();
        if w != h {
            return Err(Error::InvalidArgument(format!(
                "exceedance needs a square endpoint, got ({w}, {h})"
            )));
        }
        let (mut x, mut y) = (0u64, 0u64);
        let mut count = 0u64;
        for s in &self.steps {
            match s {
                Step::North => {
                    if y >= x {
                        count += 1;
                    }
                    y += 1;
                }
                Step::East => x += 1,
            }
        }
        Ok(count)
    }

    /// Whether the square path stays weakly below the diagonal, i.e. has
    /// exceedance zero.
    pub fn is_dyck(&self) -> Result<bool> {
        Ok(self.exceedance()? == 0)
    }

    /// Enclosed area split by column, left to right. The column counts
    /// are weakly increasing and sum to the area, exhibiting the enclosed
    /// region as a partition in an n-by-n box when the path is square.
    pub fn column_partition(&self) -> Vec<u64> {
        let mut easts_before_north = Vec::with_capacity(self.height());
        let mut easts = 0u64;
        for s in &self.steps {
            match s {
                Step::East => easts += 1,
                Step::North => easts_before_north.push(easts),
            }
        }
        (1..=self.width() as u64)
            .map(|col| easts_before_north.iter().filter(|&&x| x < col).count() as u64)
            .collect()
    }

    pub fn to_word(&self) -> BinaryWord {
        BinaryWord::new(self.steps.iter().map(|s| *s == Step::North).collect())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LatticePath::parse(s)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

/// A binary word; `true` digits print as 1 and stand for north steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    digits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(digits: Vec<bool>) -> Self {
        BinaryWord { digits }
    }

    /// Accepts 0/1 digits or the equivalent E/N step letters.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(LatticePath::parse(s)?.to_word())
    }

    pub fn digits(&self) -> &[bool] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.digits.iter().filter(|d| **d).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Whether the word has as many ones as zeros.
    pub fn is_balanced(&self) -> bool {
        self.len() == 2 * self.ones()
    }

    /// Number of pairs of a 1 strictly before a 0, adjacent or not.
    pub fn inversions(&self) -> u64 {
        let mut ones_seen = 0u64;
        let mut inv = 0u64;
        for &d in &self.digits {
            if d {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        inv
    }

    /// Major index: the sum of the 1-based positions i where digit i is 1
    /// and digit i + 1 is 0.
    pub fn major_index(&self) -> u64 {
        self.digits
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }

    pub fn to_path(&self) -> LatticePath {
        LatticePath::new(
            self.digits
                .iter()
                .map(|&d| if d { Step::North } else { Step::East })
                .collect(),
        )
    }
}

impl FromStr for BinaryWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BinaryWord::parse(s)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(if d { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Enumerates every path from (0,0) to (width, height) in lexicographic
/// step order (east before north), refusing jobs past
/// [`DEFAULT_STEP_LIMIT`] total steps.
pub fn enumerate_paths(width: usize, height: usize) -> Result<PathEnumeration> {
    enumerate_paths_with_limit(width, height, DEFAULT_STEP_LIMIT)
}

/// Same, with an explicit step bound for callers that accept the cost.
pub fn enumerate_paths_with_limit(
    width: usize,
    height: usize,
    limit: usize,
) -> Result<PathEnumeration> {
    let steps = width + height;
    if steps > limit {
        return Err(Error::LimitExceeded { steps, limit });
    }
    let mut first = vec![Step::East; width];
    first.extend(std::iter::repeat_n(Step::North, height));
    Ok(PathEnumeration { next: Some(first) })
}

pub struct PathEnumeration {
    next: Option<Vec<Step>>,
}

impl Iterator for PathEnumeration {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let current = self.next.take()?;
        self.next = next_multiset_permutation(current.clone());
        Some(LatticePath::new(current))
    }
}

/// Standard in-place successor: find the rightmost ascent, swap it with
/// the smallest larger element to its right, reverse the tail.
fn next_multiset_permutation(mut a: Vec<Step>) -> Option<Vec<Step>> {
    if a.len() < 2 {
        return None;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    Some(a)
}
