use std::fmt;

use crate::error::{check_degree, Error, Result};
use crate::perm::{Permutation, Point};

use super::Radix;

/// A sequence of disjoint nonempty classes covering `{0, …, domain-1}`.
/// Class order is significant; points within a class are kept sorted.
///
/// The canonical encoding is the label vector: `labels[x]` is the index of
/// the class containing `x`. A label vector is valid iff its labels are
/// exactly `0..r` for some `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderedPartition {
    domain: usize,
    classes: Vec<Vec<Point>>,
}

impl OrderedPartition {
    pub fn new(domain: usize, classes: Vec<Vec<Point>>) -> Result<Self> {
        let mut labels = vec![u8::MAX; domain];
        if classes.len() > u8::MAX as usize {
            return Err(Error::InvalidArgument("too many classes".into()));
        }
        let mut classes = classes;
        for (c, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidArgument(format!("class {} is empty", c + 1)));
            }
            class.sort_unstable();
            for &x in class.iter() {
                let slot = labels.get_mut(x as usize).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "point {} outside domain of size {domain}",
                        x + 1
                    ))
                })?;
                if *slot != u8::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "point {} lies in two classes",
                        x + 1
                    )));
                }
                *slot = c as u8;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == u8::MAX) {
            return Err(Error::InvalidArgument(format!(
                "point {} is not covered",
                x + 1
            )));
        }
        Ok(OrderedPartition { domain, classes })
    }

    /// `None` unless the used labels are exactly `0..r`.
    pub fn from_labels(labels: &[u8]) -> Option<Self> {
        let r = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); r];
        for (x, &l) in labels.iter().enumerate() {
            classes[l as usize].push(x as Point);
        }
        if classes.iter().any(Vec::is_empty) {
            return None;
        }
        Some(OrderedPartition {
            domain: labels.len(),
            classes,
        })
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Point>] {
        &self.classes
    }

    pub fn labels(&self) -> Vec<u8> {
        let mut labels = vec![0u8; self.domain];
        for (c, class) in self.classes.iter().enumerate() {
            for &x in class {
                labels[x as usize] = c as u8;
            }
        }
        labels
    }

    /// Label-vector code in base `base`; `base` must be at least the class
    /// count.
    pub fn encode(&self, base: usize) -> Result<u64> {
        if base < self.class_count() {
            return Err(Error::InvalidArgument(format!(
                "base {base} below class count {}",
                self.class_count()
            )));
        }
        let radix = Radix::new(base, self.domain)
            .ok_or_else(|| Error::budget("partition encoding", u64::MAX))?;
        Ok(radix.encode(&self.labels()))
    }

    /// Parses 1-based notation such as `"[{1,3}|{2}]"`.
    pub fn parse(text: &str, domain: usize) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {text:?}")))?;
        let classes = body
            .split('|')
            .map(|class| {
                let inner = class
                    .trim()
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("class must be braced: {class:?}")))?;
                inner
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| match t.parse::<Point>() {
                        Ok(p) if p >= 1 => Ok(p - 1),
                        _ => Err(Error::Parse(format!("invalid point {t:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        OrderedPartition::new(domain, classes).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (c, class) in self.classes.iter().enumerate() {
            if c > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (i, x) in class.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str("}")?;
        }
        f.write_str("]")
    }
}

/// Setwise image of each class; class `i` maps to class `i`.
pub fn act_on_partition(p: &Permutation, partition: &OrderedPartition) -> Result<OrderedPartition> {
    check_degree(partition.domain, p.degree())?;
    let classes = partition
        .classes
        .iter()
        .map(|class| {
            let mut image: Vec<Point> = class.iter().map(|&x| p.image(x)).collect();
            image.sort_unstable();
            image
        })
        .collect();
    Ok(OrderedPartition {
        domain: partition.domain,
        classes,
    })
}

/// Number of ordered partitions of an `n`-set with at most `m` classes:
/// `sum_{r<=m} r! S(n, r)`.
pub fn ordered_partition_count(n: usize, m: usize) -> u128 {
    let mut total = 0u128;
    for r in 1..=m.min(n) {
        // inclusion-exclusion: sum_j (-1)^j C(r, j) (r-j)^n
        let mut s: i128 = 0;
        let mut binom: i128 = 1;
        for j in 0..=r {
            let term = binom * (r as i128 - j as i128).pow(n as u32);
            s += if j % 2 == 0 { term } else { -term };
            binom = binom * (r - j) as i128 / (j + 1) as i128;
        }
        total += s as u128;
    }
    if n == 0 {
        1
    } else {
        total
    }
}

/// All valid label vectors with at most `m` classes, as codes in base
/// `min(m, n)`, ascending.
pub(crate) fn enumerate_partition_codes(n: usize, m: usize) -> Vec<u64> {
    let base = m.min(n).max(1);
    let radix = Radix::new(base, n).expect("partition space overflow checked by caller");
    let mut out = Vec::new();
    let mut labels = vec![0u8; n];
    for r in 1..=base {
        fill_surjections(&mut labels, 0, r, 0, &mut |l| out.push(radix.encode(l)));
    }
    out.sort_unstable();
    out
}

fn fill_surjections(
    labels: &mut [u8],
    pos: usize,
    r: usize,
    used: u64,
    emit: &mut dyn FnMut(&[u8]),
) {
    let n = labels.len();
    let missing = r - used.count_ones() as usize;
    if n - pos < missing {
        return;
    }
    if pos == n {
        emit(labels);
        return;
    }
    for l in 0..r {
        labels[pos] = l as u8;
        fill_surjections(labels, pos + 1, r, used | (1 << l), emit);
    }
}
