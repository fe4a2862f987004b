//! Backtracking over images of points `0, 1, 2, …` in order.
//!
//! Every object (tuple or ordered partition) is attached to the first depth
//! at which its image is determined by the assigned prefix: a tuple at its
//! largest entry, a partition at the largest point outside the class of the
//! last point (that class maps onto the complement of the other classes'
//! images). A branch survives only if every object checked so far keeps its
//! color, so a completed permutation has been checked against all objects.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use crate::actions::{ObjectSpace, OrbitColoring};
use crate::error::{Error, Result};
use crate::exec::{Budget, Exec};
use crate::perm::{Permutation, Point};

use super::SearchStats;

/// Objects grouped by the depth at which they are checked.
pub(crate) struct CheckTable {
    degree: usize,
    levels: Vec<Level>,
}

#[derive(Default)]
struct Level {
    colors: Vec<u32>,
    kind: LevelKind,
}

enum LevelKind {
    /// `arity` entries per tuple; image code is `Σ f(e_i) w_i`.
    Tuples { arity: usize, entries: Vec<Point> },
    /// For each partition: offset `c·Σw` and `depth+1` label deltas
    /// `λ(x) - c`; image code is `offset + Σ delta_x w[f(x)]`.
    Partitions { offsets: Vec<i64>, deltas: Vec<i8> },
}

impl Default for LevelKind {
    fn default() -> Self {
        LevelKind::Tuples {
            arity: 0,
            entries: Vec::new(),
        }
    }
}

impl CheckTable {
    pub(crate) fn build(coloring: &OrbitColoring) -> Result<Self> {
        let space = coloring.space();
        let n = space.degree();
        let radix = space.radix()?;
        let mut levels: Vec<Level> = (0..n).map(|_| Level::default()).collect();
        let mut digits = vec![0u32; radix.len()];
        match space {
            ObjectSpace::Tuples { arity, .. } => {
                for level in &mut levels {
                    level.kind = LevelKind::Tuples {
                        arity,
                        entries: Vec::new(),
                    };
                }
                if arity == 0 {
                    return Ok(CheckTable { degree: n, levels });
                }
                for code in 0..radix.size() {
                    radix.decode_into(code, &mut digits);
                    let top = *digits.iter().max().expect("arity > 0") as usize;
                    let level = &mut levels[top];
                    level
                        .colors
                        .push(coloring.color(code).expect("tuple colored"));
                    if let LevelKind::Tuples { entries, .. } = &mut level.kind {
                        entries.extend_from_slice(&digits);
                    }
                }
            }
            ObjectSpace::Partitions { .. } => {
                let weight_sum: i64 = radix.weights().iter().map(|&w| w as i64).sum();
                for level in &mut levels {
                    level.kind = LevelKind::Partitions {
                        offsets: Vec::new(),
                        deltas: Vec::new(),
                    };
                }
                for code in 0..radix.size() {
                    let Some(color) = coloring.color(code) else {
                        continue;
                    };
                    radix.decode_into(code, &mut digits);
                    let rest = digits[n - 1];
                    let Some(top) = digits.iter().rposition(|&l| l != rest) else {
                        continue;
                    };
                    let level = &mut levels[top];
                    level.colors.push(color);
                    if let LevelKind::Partitions { offsets, deltas } = &mut level.kind {
                        offsets.push(rest as i64 * weight_sum);
                        deltas.extend(
                            digits[..=top]
                                .iter()
                                .map(|&l| (l as i64 - rest as i64) as i8),
                        );
                    }
                }
            }
        }
        Ok(CheckTable { degree: n, levels })
    }
}

struct Searcher<'a> {
    table: &'a CheckTable,
    coloring: &'a OrbitColoring,
    dense: Option<&'a [u32]>,
    weights: Vec<u64>,
    images: Vec<Point>,
    used: Vec<bool>,
    stats: SearchStats,
    found: Vec<Permutation>,
    budget: &'a Budget,
    abort: &'a AtomicBool,
    leaves: &'a AtomicUsize,
}

impl<'a> Searcher<'a> {
    fn new(
        table: &'a CheckTable,
        coloring: &'a OrbitColoring,
        budget: &'a Budget,
        abort: &'a AtomicBool,
        leaves: &'a AtomicUsize,
    ) -> Result<Self> {
        let n = table.degree;
        Ok(Searcher {
            table,
            coloring,
            dense: coloring.dense(),
            weights: coloring.space().radix()?.weights().to_vec(),
            images: vec![0; n],
            used: vec![false; n],
            stats: SearchStats::default(),
            found: Vec::new(),
            budget,
            abort,
            leaves,
        })
    }

    #[inline]
    fn lookup(&self, code: u64) -> Option<u32> {
        match self.dense {
            Some(d) => d.get(code as usize).copied().filter(|&c| c != u32::MAX),
            None => self.coloring.color(code),
        }
    }

    /// All objects attached to `depth` keep their color under the prefix.
    fn level_ok(&self, depth: usize) -> bool {
        let level = &self.table.levels[depth];
        let w = &self.weights;
        match &level.kind {
            LevelKind::Tuples { arity, entries } => entries
                .chunks_exact(*arity)
                .zip(&level.colors)
                .all(|(tuple, &color)| {
                    let code: u64 = tuple
                        .iter()
                        .zip(w)
                        .map(|(&x, &wi)| self.images[x as usize] as u64 * wi)
                        .sum();
                    self.lookup(code) == Some(color)
                }),
            LevelKind::Partitions { offsets, deltas } => deltas
                .chunks_exact(depth + 1)
                .zip(offsets)
                .zip(&level.colors)
                .all(|((delta, &offset), &color)| {
                    let code = delta.iter().enumerate().fold(offset, |acc, (x, &dl)| {
                        acc + dl as i64 * w[self.images[x] as usize] as i64
                    });
                    self.lookup(code as u64) == Some(color)
                }),
        }
    }

    fn assign(&mut self, depth: usize, image: Point) -> bool {
        self.stats.nodes += 1;
        self.images[depth] = image;
        if self.level_ok(depth) {
            true
        } else {
            self.stats.prunes += 1;
            false
        }
    }

    fn dfs(&mut self, depth: usize) -> Result<()> {
        let n = self.table.degree;
        if depth == n {
            self.stats.leaves += 1;
            let total = self.leaves.fetch_add(1, Ordering::Relaxed) + 1;
            if total > self.budget.max_elements {
                self.abort.store(true, Ordering::Relaxed);
                return Err(Error::budget(
                    "closure elements",
                    self.budget.max_elements as u64,
                ));
            }
            self.found
                .push(Permutation::from_images_unchecked(self.images.clone()));
            return Ok(());
        }
        if self.stats.nodes.is_multiple_of(1024) {
            if self.abort.load(Ordering::Relaxed) {
                return Err(Error::budget("aborted", 0));
            }
            if self.budget.expired() {
                self.abort.store(true, Ordering::Relaxed);
                return Err(Error::budget("wall clock", 0));
            }
        }
        for image in 0..n as Point {
            if self.used[image as usize] {
                continue;
            }
            if self.assign(depth, image) {
                self.used[image as usize] = true;
                let r = self.dfs(depth + 1);
                self.used[image as usize] = false;
                r?;
            }
        }
        Ok(())
    }
}

/// Every permutation preserving each color class of `coloring`, sorted.
pub(crate) fn preservers(
    coloring: &OrbitColoring,
    budget: &Budget,
    exec: Exec,
) -> Result<(Vec<Permutation>, SearchStats)> {
    let start = Instant::now();
    let table = CheckTable::build(coloring)?;
    let n = table.degree;
    if n == 0 {
        return Ok((vec![Permutation::identity(0)], SearchStats::default()));
    }
    let abort = AtomicBool::new(false);
    let leaves = AtomicUsize::new(0);
    let roots: Vec<Point> = (0..n as Point).collect();
    let subtrees = exec.map(roots, |image| -> Result<(Vec<Permutation>, SearchStats)> {
        let mut s = Searcher::new(&table, coloring, budget, &abort, &leaves)?;
        if s.assign(0, image) {
            s.used[image as usize] = true;
            s.dfs(1)?;
        }
        Ok((s.found, s.stats))
    });
    let mut elements = Vec::new();
    let mut stats = SearchStats::default();
    let mut errors = Vec::new();
    for sub in subtrees {
        match sub {
            Ok((found, st)) => {
                elements.extend(found);
                stats.absorb(&st);
            }
            Err(e) => errors.push(e),
        }
    }
    stats.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    if !errors.is_empty() {
        // report the limit that triggered the abort, not the abort itself
        let cause = errors
            .iter()
            .position(|e| {
                !matches!(
                    e,
                    Error::Budget {
                        resource: "aborted",
                        ..
                    }
                )
            })
            .unwrap_or(0);
        return Err(match errors.swap_remove(cause) {
            Error::Budget {
                resource, limit, ..
            } => Error::Budget {
                resource,
                limit,
                partial: Some(stats),
            },
            other => other,
        });
    }
    Ok((elements, stats))
}
