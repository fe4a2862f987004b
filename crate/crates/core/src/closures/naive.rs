//! Reference closures that test every element of `Sym(Ω)` against the
//! closure argument directly: `f` is kept iff every object's image under
//! `f` is also its image under some element of `G`. No orbit coloring and
//! no search are involved.

use std::collections::HashSet;

use crate::actions::{act_on_partition, act_on_tuple, OrderedPartition, PointTuple};
use crate::error::{Error, Result};
use crate::exec::{Budget, Exec};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

fn all_permutations(n: usize, budget: &Budget) -> Result<Vec<Permutation>> {
    let count: u128 = (1..=n as u128).product();
    if count > budget.max_elements as u128 {
        return Err(Error::budget("group elements", budget.max_elements as u64));
    }
    let mut current: Vec<Point> = (0..n as Point).collect();
    let mut out = Vec::with_capacity(count as usize);
    loop {
        out.push(Permutation::from_images_unchecked(current.clone()));
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    Ok(out)
}

fn filter_group(
    n: usize,
    budget: &Budget,
    exec: Exec,
    keep: impl Fn(&Permutation) -> bool + Sync + Send,
) -> Result<PermGroup> {
    let candidates = all_permutations(n, budget)?;
    let chunks: Vec<Vec<Permutation>> = candidates
        .chunks(256)
        .map(<[Permutation]>::to_vec)
        .collect();
    let kept: Vec<Permutation> = exec
        .map(chunks, |chunk| {
            chunk.into_iter().filter(|f| keep(f)).collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    let provisional = PermGroup::from_sorted_elements(n, kept, Vec::new());
    let gens = provisional.greedy_generators(budget)?;
    Ok(PermGroup::from_sorted_elements(
        n,
        provisional.elements().cloned().collect(),
        gens,
    ))
}

pub fn naive_m_closure(g: &PermGroup, m: usize, budget: &Budget, exec: Exec) -> Result<PermGroup> {
    let n = g.degree();
    let space = (n as u128).pow(m as u32);
    budget.check_objects(space.saturating_mul(g.order() as u128))?;
    let tuples: Vec<PointTuple> = (0..space as u64)
        .map(|code| PointTuple::decode(n, m, code))
        .collect::<Result<_>>()?;
    let images: Vec<HashSet<PointTuple>> = tuples
        .iter()
        .map(|t| {
            g.elements()
                .map(|e| act_on_tuple(e, t).expect("degrees agree"))
                .collect()
        })
        .collect();
    filter_group(n, budget, exec, |f| {
        tuples
            .iter()
            .zip(&images)
            .all(|(t, reachable)| reachable.contains(&act_on_tuple(f, t).expect("degrees agree")))
    })
}

pub fn naive_partition_closure(
    g: &PermGroup,
    m: usize,
    budget: &Budget,
    exec: Exec,
) -> Result<PermGroup> {
    let n = g.degree();
    let labels_base = m.min(n).max(1);
    let space = (labels_base as u128).pow(n as u32);
    budget.check_objects(space.saturating_mul(g.order() as u128))?;
    let mut partitions = Vec::new();
    let mut labels = vec![0u8; n];
    for mut code in 0..space as u64 {
        for l in labels.iter_mut().rev() {
            *l = (code % labels_base as u64) as u8;
            code /= labels_base as u64;
        }
        if let Some(p) = OrderedPartition::from_labels(&labels) {
            if p.class_count() <= m {
                partitions.push(p);
            }
        }
    }
    let images: Vec<HashSet<OrderedPartition>> = partitions
        .iter()
        .map(|p| {
            g.elements()
                .map(|e| act_on_partition(e, p).expect("degrees agree"))
                .collect()
        })
        .collect();
    filter_group(n, budget, exec, |f| {
        partitions.iter().zip(&images).all(|(p, reachable)| {
            reachable.contains(&act_on_partition(f, p).expect("degrees agree"))
        })
    })
}
