//! The cyclic maps behind the uniform residue distributions, and orbit
//! computation for them.
//!
//! Each map is a bijection on a finite family whose orbits hit every
//! residue class of a statistic exactly once:
//!
//! * [`rotate_step`] moves the last step of a path to the front. On paths
//!   to (k, n-k) one rotation changes the area by k or by -(n-k), both
//!   congruent to k mod n.
//! * [`phi_square`] fixes the first step of a square path and rotates the
//!   remaining 2n-1 steps. The area moves by n-1 mod 2n-1 on paths that
//!   start east and by n on paths that start north; on the latter the map
//!   agrees with conjugating by transposition, since relabeling steps
//!   commutes with permuting positions.
//! * [`phi_word`] is the same shuffle on binary words.
//! * [`phi_sequence`] is the companion map on increasing sequences drawn
//!   from [1, 2n]: entries shift up by one (the first entry is exempt
//!   when it equals 1) and an entry at the ceiling 2n wraps around to 2.
//! * [`catalan_restrict_step`] rotates a path to (n+1, n) until it again
//!   passes through (n, n); across one such move the area of the embedded
//!   (n, n)-path shifts by exactly 1 mod n+1.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{BinaryWord, LatticePath, Step};

/// Moves the last step to the front: `(p_1 .. p_n) -> (p_n p_1 .. p_{n-1})`.
pub fn rotate_step(path: &LatticePath) -> Result<LatticePath> {
    let steps = path.steps();
    let Some((&last, front)) = steps.split_last() else {
        return Err(Error::InvalidArgument("cannot rotate an empty path".into()));
    };
    let mut out = Vec::with_capacity(steps.len());
    out.push(last);
    out.extend_from_slice(front);
    Ok(LatticePath::new(out))
}

/// The square-path map: the first step stays, the remaining 2n-1 steps
/// rotate right by one.
pub fn phi_square(path: &LatticePath) -> Result<LatticePath> {
    let (w, h) = path.endpoint();
    if w != h || w == 0 {
        return Err(Error::InvalidArgument(format!(
            "the square cyclic map needs a nonempty square path, got endpoint ({w}, {h})"
        )));
    }
    let steps = path.steps();
    let len = steps.len();
    let mut out = Vec::with_capacity(len);
    out.push(steps[0]);
    out.push(steps[len - 1]);
    out.extend_from_slice(&steps[1..len - 1]);
    Ok(LatticePath::new(out))
}

/// The same first-digit-fixed rotation on a binary word of length >= 2.
pub fn phi_word(word: &BinaryWord) -> Result<BinaryWord> {
    let d = word.digits();
    if d.len() < 2 {
        return Err(Error::InvalidArgument(
            "the cyclic word map needs length >= 2".into(),
        ));
    }
    let mut out = Vec::with_capacity(d.len());
    out.push(d[0]);
    out.push(d[d.len() - 1]);
    out.extend_from_slice(&d[1..d.len() - 1]);
    Ok(BinaryWord::new(out))
}

/// A strictly increasing sequence of integers from `[1, bound]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncreasingSequence {
    terms: Vec<u64>,
    bound: u64,
}

impl IncreasingSequence {
    pub fn new(terms: Vec<u64>, bound: u64) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument("sequence must be nonempty".into()));
        }
        for (i, &t) in terms.iter().enumerate() {
            if t < 1 || t > bound {
                return Err(Error::InvalidArgument(format!(
                    "entry {t} is outside [1, {bound}]"
                )));
            }
            if i > 0 && terms[i - 1] >= t {
                return Err(Error::InvalidArgument(format!(
                    "entries must be strictly increasing, got {} before {t}",
                    terms[i - 1]
                )));
            }
        }
        Ok(IncreasingSequence { terms, bound })
    }

    /// Parses a comma-separated list like `1,3,4`.
    pub fn parse(s: &str, bound: u64) -> Result<Self> {
        let terms = s
            .split(',')
            .map(|part| {
                part.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidArgument(format!("cannot read {part:?} as a positive integer"))
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        IncreasingSequence::new(terms, bound)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.terms.iter().sum()
    }
}

impl fmt::Display for IncreasingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// The cyclic map on length-n sequences from [1, 2n]: every entry moves
/// up by one, except that a leading 1 stays put and the ceiling entry 2n
/// wraps to 2. The image is re-sorted; the shift rules guarantee it has
/// no duplicates, and the implementation asserts that rather than
/// accepting a collision silently.
///
/// The sum moves by n-1 mod 2n-1 when the sequence starts at 1 and by n
/// otherwise, mirroring the two area shifts of the square-path map.
pub fn phi_sequence(seq: &IncreasingSequence) -> Result<IncreasingSequence> {
    let n = seq.len() as u64;
    if seq.bound() != 2 * n {
        return Err(Error::InvalidArgument(format!(
            "the cyclic sequence map needs bound 2n = {}, got {}",
            2 * n,
            seq.bound()
        )));
    }
    let wrap = |x: u64| if x < 2 * n { x + 1 } else { 2 };
    let terms = seq.terms();
    let mut out: Vec<u64> = if terms[0] == 1 {
        std::iter::once(1)
            .chain(terms[1..].iter().map(|&t| wrap(t)))
            .collect()
    } else {
        terms.iter().map(|&t| wrap(t)).collect()
    };
    out.sort_unstable();
    assert!(
        out.windows(2).all(|w| w[0] < w[1]),
        "cyclic image of {seq} produced a duplicate entry; the shift rules exclude this"
    );
    IncreasingSequence::new(out, seq.bound())
}

/// One move of the rotation induced on paths to (n+1, n) that pass
/// through (n, n) (equivalently, end with an east step): rotate until the
/// path again ends with an east step.
pub fn catalan_restrict_step(path: &LatticePath) -> Result<LatticePath> {
    let (w, h) = path.endpoint();
    if w != h + 1 {
        return Err(Error::InvalidArgument(format!(
            "restricted rotation acts on paths to (n+1, n), got endpoint ({w}, {h})"
        )));
    }
    if path.steps().last() != Some(&Step::East) {
        return Err(Error::InvalidArgument(
            "restricted rotation starts from a path ending east (one passing through (n, n))".into(),
        ));
    }
    let mut p = rotate_step(path)?;
    while p.steps().last() != Some(&Step::East) {
        p = rotate_step(&p)?;
    }
    Ok(p)
}

/// A full orbit of one of the cyclic maps: the elements in visiting
/// order, their statistic values, and the modulus the statistic is read
/// against.
#[derive(Debug, Clone)]
pub struct Orbit<T> {
    elements: Vec<T>,
    statistics: Vec<u64>,
    modulus: u64,
}

impl<T> Orbit<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Statistic values parallel to [`Orbit::elements`].
    pub fn statistics(&self) -> &[u64] {
        &self.statistics
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The statistics reduced mod the orbit modulus.
    pub fn residues(&self) -> Vec<u64> {
        self.statistics.iter().map(|s| s % self.modulus).collect()
    }
}

/// Iterates `step` from `start` until the start reappears. The maps here
/// all have orbit sizes dividing (or equal to) their modulus, so failing
/// to close within `modulus` steps is an invariant violation and panics.
pub fn orbit_of<T, S, F>(start: T, modulus: u64, statistic: S, step: F) -> Result<Orbit<T>>
where
    T: Clone + PartialEq,
    S: Fn(&T) -> u64,
    F: Fn(&T) -> Result<T>,
{
    assert!(modulus >= 1, "orbit modulus must be positive");
    let mut elements = vec![start.clone()];
    let mut statistics = vec![statistic(&start)];
    let mut current = start.clone();
    loop {
        let next = step(&current)?;
        if next == start {
            break;
        }
        assert!(
            (elements.len() as u64) < modulus,
            "orbit failed to close within {modulus} steps"
        );
        statistics.push(statistic(&next));
        elements.push(next.clone());
        current = next;
    }
    Ok(Orbit { elements, statistics, modulus })
}

/// The maps addressable by name from the CLI and the C ABI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedMap {
    Rotate,
    PhiSquare,
    PhiWord,
    PhiSequence,
    CatalanRestrict,
}

impl NamedMap {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "rotate" => Ok(NamedMap::Rotate),
            "phi-square" => Ok(NamedMap::PhiSquare),
            "phi-word" => Ok(NamedMap::PhiWord),
            "phi-seq" => Ok(NamedMap::PhiSequence),
            "catalan" => Ok(NamedMap::CatalanRestrict),
            other => Err(Error::InvalidArgument(format!(
                "unknown map {other:?}; expected rotate, phi-square, phi-word, phi-seq, or catalan"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedMap::Rotate => "rotate",
            NamedMap::PhiSquare => "phi-square",
            NamedMap::PhiWord => "phi-word",
            NamedMap::PhiSequence => "phi-seq",
            NamedMap::CatalanRestrict => "catalan",
        }
    }

    /// What the statistic column means for this map's orbits.
    pub fn statistic_name(&self) -> &'static str {
        match self {
            NamedMap::Rotate | NamedMap::PhiSquare => "area",
            NamedMap::PhiWord => "inversions",
            NamedMap::PhiSequence => "sum",
            NamedMap::CatalanRestrict => "embedded area",
        }
    }
}

impl std::str::FromStr for NamedMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedMap::parse(s)
    }
}

/// A starting object for a named orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitObject {
    Path(LatticePath),
    Word(BinaryWord),
    Sequence(IncreasingSequence),
}

impl fmt::Display for OrbitObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitObject::Path(p) => write!(f, "{p}"),
            OrbitObject::Word(w) => write!(f, "{w}"),
            OrbitObject::Sequence(s) => write!(f, "{s}"),
        }
    }
}

fn embedded_area(path: &LatticePath) -> u64 {
    let steps = path.steps();
    LatticePath::new(steps[..steps.len() - 1].to_vec()).area()
}

/// Computes the orbit of `start` under a named map, choosing the right
/// statistic and modulus for that map.
pub fn named_orbit(map: NamedMap, start: OrbitObject) -> Result<Orbit<OrbitObject>> {
    match map {
        NamedMap::Rotate => {
            let OrbitObject::Path(p) = &start else {
                return Err(Error::InvalidArgument("rotate acts on paths".into()));
            };
            if p.is_empty() {
                return Err(Error::InvalidArgument("cannot rotate an empty path".into()));
            }
            let modulus = p.len() as u64;
            orbit_of(
                start,
                modulus,
                |o| match o {
                    OrbitObject::Path(p) => p.area(),
                    _ => unreachable!(),
                },
                |o| match o {
                    OrbitObject::Path(p) => Ok(OrbitObject::Path(rotate_step(p)?)),
                    _ => unreachable!(),
                },
            )
        }
        NamedMap::PhiSquare => {
            let OrbitObject::Path(p) = &start else {
                return Err(Error::InvalidArgument("phi-square acts on paths".into()));
            };
            let probe = phi_square(p)?;
            debug_assert_eq!(probe.len(), p.len());
            let modulus = p.len() as u64 - 1;
            orbit_of(
                start,
                modulus.max(1),
                |o| match o {
                    OrbitObject::Path(p) => p.area(),
                    _ => unreachable!(),
                },
                |o| match o {
                    OrbitObject::Path(p) => Ok(OrbitObject::Path(phi_square(p)?)),
                    _ => unreachable!(),
                },
            )
        }
        NamedMap::PhiWord => {
            let OrbitObject::Word(w) = &start else {
                return Err(Error::InvalidArgument("phi-word acts on binary words".into()));
            };
            if w.len() < 2 {
                return Err(Error::InvalidArgument(
                    "the cyclic word map needs length >= 2".into(),
                ));
            }
            let modulus = w.len() as u64 - 1;
            orbit_of(
                start,
                modulus,
                |o| match o {
                    OrbitObject::Word(w) => w.inversions(),
                    _ => unreachable!(),
                },
                |o| match o {
                    OrbitObject::Word(w) => Ok(OrbitObject::Word(phi_word(w)?)),
                    _ => unreachable!(),
                },
            )
        }
        NamedMap::PhiSequence => {
            let OrbitObject::Sequence(s) = &start else {
                return Err(Error::InvalidArgument(
                    "phi-seq acts on increasing sequences".into(),
                ));
            };
            if s.bound() != 2 * s.len() as u64 {
                return Err(Error::InvalidArgument(format!(
                    "the cyclic sequence map needs bound 2n = {}, got {}",
                    2 * s.len(),
                    s.bound()
                )));
            }
            let modulus = s.bound() - 1;
            orbit_of(
                start,
                modulus,
                |o| match o {
                    OrbitObject::Sequence(s) => s.sum(),
                    _ => unreachable!(),
                },
                |o| match o {
                    OrbitObject::Sequence(s) => Ok(OrbitObject::Sequence(phi_sequence(s)?)),
                    _ => unreachable!(),
                },
            )
        }
        NamedMap::CatalanRestrict => {
            let OrbitObject::Path(p) = &start else {
                return Err(Error::InvalidArgument("catalan acts on paths".into()));
            };
            let (w, h) = p.endpoint();
            if w != h + 1 || p.steps().last() != Some(&Step::East) {
                return Err(Error::InvalidArgument(
                    "catalan orbits start from a path to (n+1, n) ending east".into(),
                ));
            }
            let modulus = h as u64 + 1;
            orbit_of(
                start,
                modulus,
                |o| match o {
                    OrbitObject::Path(p) => embedded_area(p),
                    _ => unreachable!(),
                },
                |o| match o {
                    OrbitObject::Path(p) => Ok(OrbitObject::Path(catalan_restrict_step(p)?)),
                    _ => unreachable!(),
                },
            )
        }
    }
}
