//! Permutations of `{0, …, n-1}` stored as image arrays.
//!
//! Composition follows the right-action convention: `x^(pq) = (x^p)^q`, so
//! `p.compose(q)` applies `p` first. Cycle notation at the I/O boundary is
//! 1-based, `()` being the identity.

use std::fmt;

use crate::error::{check_degree, Error, Result};

pub type Point = u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[Point]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let i = x as usize;
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<Point>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[Point]]) -> Result<Self> {
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let xi = x as usize;
                if xi >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {degree}",
                        x + 1
                    )));
                }
                if std::mem::replace(&mut seen[xi], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears more than once",
                        x + 1
                    )));
                }
                images[xi] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn transposition(degree: usize, a: Point, b: Point) -> Result<Self> {
        Self::from_cycles(degree, &[&[a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: Point) -> Point {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i as Point == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.then(other))
    }

    /// Unchecked composition for internal hot paths; degrees must agree.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as Point;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    /// Nontrivial cycles, each starting from its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as Point);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4)"` or `"()"`.
    /// Points inside a cycle may be separated by whitespace or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        let refs: Vec<&[Point]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(degree, &refs).map_err(|e| match e {
            Error::InvalidPermutation(msg) => Error::Parse(msg),
            other => other,
        })
    }

    /// Largest point mentioned in 1-based cycle notation (0 for `"()"`).
    pub fn cycle_notation_max_point(text: &str) -> Result<usize> {
        Ok(parse_cycle_list(text)?
            .iter()
            .flatten()
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0))
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<Point>>> {
    let mut rest = text.trim();
    let mut cycles = Vec::new();
    if rest.is_empty() {
        return Err(Error::Parse("empty cycle notation".into()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed cycle".into()))?;
        let mut cycle = Vec::new();
        for token in body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let point: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("invalid point {token:?}")))?;
            if point == 0 {
                return Err(Error::Parse("points are 1-based; found 0".into()));
            }
            let point = Point::try_from(point - 1)
                .map_err(|_| Error::Parse(format!("point {point} too large")))?;
            if cycle.contains(&point) {
                return Err(Error::Parse(format!(
                    "point {} appears more than once",
                    point + 1
                )));
            }
            cycle.push(point);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    let mut all: Vec<Point> = cycles.iter().flatten().copied().collect();
    all.sort_unstable();
    if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!(
            "point {} appears more than once",
            w[0] + 1
        )));
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{self}", self.degree())
    }
}
