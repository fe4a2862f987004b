//! The partition map `α ↦ Π(α)`.
//!
//! An m-tuple `α` of points of `Γ^d` is read as a `d × m` matrix whose
//! columns are the entries of `α`. Row `i` is the m-tuple of `i`-th
//! coordinates, an m-tuple over `Γ`. `Π(α)` groups the rows by their
//! `K`-orbit on `Γ^m`, classes ordered by ascending orbit index.

use crate::error::{Error, Result};
use crate::perm::Point;

use super::{ObjectSpace, OrbitColoring, OrderedPartition, PointTuple, Radix};

fn coloring_shape(coloring: &OrbitColoring) -> Result<(usize, usize)> {
    match coloring.space() {
        ObjectSpace::Tuples { degree, arity } => Ok((degree, arity)),
        ObjectSpace::Partitions { .. } => Err(Error::InvalidArgument(
            "partition map needs a coloring of tuples".into(),
        )),
    }
}

/// Row `i` of `α`, as a code in `Γ^m`.
fn row_code(alpha: &PointTuple, i: usize, point_radix: &Radix, row_radix: &Radix) -> u64 {
    let row: Vec<u64> = alpha
        .entries()
        .iter()
        .map(|&omega| point_radix.digit(omega as u64, i))
        .collect();
    row_radix.encode(&row)
}

pub fn pi_of_tuple(
    coloring: &OrbitColoring,
    alpha: &PointTuple,
    d: usize,
    m: usize,
) -> Result<OrderedPartition> {
    let (n, arity) = coloring_shape(coloring)?;
    if arity != m || alpha.arity() != m {
        return Err(Error::InvalidArgument(format!(
            "arity mismatch: coloring {arity}, tuple {}, requested {m}",
            alpha.arity()
        )));
    }
    let point_radix = Radix::new(n, d).ok_or_else(|| Error::budget("product degree", u64::MAX))?;
    if alpha.domain() as u64 != point_radix.size() {
        return Err(Error::DegreeMismatch {
            expected: point_radix.size() as usize,
            found: alpha.domain(),
        });
    }
    let row_radix = Radix::new(n, m).ok_or_else(|| Error::budget("tuple encoding", u64::MAX))?;
    let row_colors: Vec<u32> = (0..d)
        .map(|i| {
            coloring
                .color(row_code(alpha, i, &point_radix, &row_radix))
                .expect("every tuple is colored")
        })
        .collect();
    let mut used = row_colors.clone();
    used.sort_unstable();
    used.dedup();
    let classes = used
        .iter()
        .map(|c| {
            row_colors
                .iter()
                .enumerate()
                .filter(|(_, rc)| *rc == c)
                .map(|(i, _)| i as Point)
                .collect()
        })
        .collect();
    OrderedPartition::new(d, classes)
}

/// The m-tuple of `Γ^d` whose row `i` is `rows[i]`.
pub fn tuple_from_rows(rows: &[Vec<Point>], n: usize) -> Result<PointTuple> {
    let d = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::InvalidArgument("rows of unequal length".into()));
    }
    let point_radix = Radix::new(n, d).ok_or_else(|| Error::budget("product degree", u64::MAX))?;
    let entries = (0..m)
        .map(|j| {
            let column: Vec<Point> = rows.iter().map(|r| r[j]).collect();
            point_radix.encode(&column) as Point
        })
        .collect();
    PointTuple::new(point_radix.size() as usize, entries)
}
