use std::collections::HashMap;

use serde::Serialize;

use crate::error::{check_degree, Error, Result};
use crate::exec::Budget;
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::partition::enumerate_partition_codes;
use super::{ordered_partition_count, OrderedPartition, PointTuple, Radix};

/// The set of objects a coloring ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "objects", rename_all = "snake_case")]
pub enum ObjectSpace {
    /// All of `Ω^arity`.
    Tuples { degree: usize, arity: usize },
    /// Ordered partitions of `Ω` with at most `max_classes` classes.
    Partitions { degree: usize, max_classes: usize },
}

impl ObjectSpace {
    pub fn degree(&self) -> usize {
        match *self {
            ObjectSpace::Tuples { degree, .. } | ObjectSpace::Partitions { degree, .. } => degree,
        }
    }

    /// Radix of the code; for partitions `min(max_classes, degree)`.
    pub fn base(&self) -> usize {
        match *self {
            ObjectSpace::Tuples { degree, .. } => degree,
            ObjectSpace::Partitions {
                degree,
                max_classes,
            } => max_classes.min(degree).max(1),
        }
    }

    pub fn digits(&self) -> usize {
        match *self {
            ObjectSpace::Tuples { arity, .. } => arity,
            ObjectSpace::Partitions { degree, .. } => degree,
        }
    }

    pub fn code_space(&self) -> u128 {
        Radix::space_size(self.base(), self.digits())
    }

    pub fn object_count(&self) -> u128 {
        match *self {
            ObjectSpace::Tuples { .. } => self.code_space(),
            ObjectSpace::Partitions {
                degree,
                max_classes,
            } => ordered_partition_count(degree, max_classes),
        }
    }

    pub(crate) fn radix(&self) -> Result<Radix> {
        Radix::new(self.base(), self.digits())
            .ok_or_else(|| Error::budget("object encoding", u64::MAX))
    }

    pub fn is_partitions(&self) -> bool {
        matches!(self, ObjectSpace::Partitions { .. })
    }
}

/// Reusable scratch for computing images of encoded objects.
pub(crate) struct ObjectCodec {
    space: ObjectSpace,
    radix: Radix,
    digits: Vec<u32>,
}

impl ObjectCodec {
    pub(crate) fn new(space: ObjectSpace) -> Result<Self> {
        let radix = space.radix()?;
        Ok(ObjectCodec {
            digits: vec![0; radix.len()],
            radix,
            space,
        })
    }

    pub(crate) fn radix(&self) -> &Radix {
        &self.radix
    }

    pub(crate) fn is_valid(&mut self, code: u64) -> bool {
        match self.space {
            ObjectSpace::Tuples { .. } => true,
            ObjectSpace::Partitions { .. } => {
                self.radix.decode_into(code, &mut self.digits);
                let mut used = 0u64;
                let mut top = 0;
                for &l in &self.digits {
                    used |= 1 << l;
                    top = top.max(l + 1);
                }
                used.count_ones() == top
            }
        }
    }

    /// Code of `code^p`.
    pub(crate) fn image(&mut self, code: u64, p: &Permutation) -> u64 {
        self.radix.decode_into(code, &mut self.digits);
        let w = self.radix.weights();
        match self.space {
            ObjectSpace::Tuples { .. } => self
                .digits
                .iter()
                .zip(w)
                .map(|(&x, &wi)| p.image(x) as u64 * wi)
                .sum(),
            ObjectSpace::Partitions { .. } => self
                .digits
                .iter()
                .enumerate()
                .map(|(x, &l)| l as u64 * w[p.image(x as Point) as usize])
                .sum(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OrbitStrategy {
    /// Dense when the code space fits the object budget, sparse otherwise.
    #[default]
    Auto,
    /// Color array indexed by code.
    Dense,
    /// Hash map from valid codes to colors.
    Sparse,
}

#[derive(Clone, Debug)]
enum Colors {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

const NO_COLOR: u32 = u32::MAX;

/// Orbit index of every object in an [`ObjectSpace`]. Colors are numbered
/// `0..orbit_count` by ascending minimal code, which is also each orbit's
/// canonical representative.
#[derive(Clone, Debug)]
pub struct OrbitColoring {
    space: ObjectSpace,
    colors: Colors,
    representatives: Vec<u64>,
    sizes: Vec<u64>,
}

impl OrbitColoring {
    pub fn space(&self) -> ObjectSpace {
        self.space
    }

    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }

    /// Color of an encoded object; `None` for codes that are not objects.
    pub fn color(&self, code: u64) -> Option<u32> {
        let c = match &self.colors {
            Colors::Dense(v) => *v.get(code as usize)?,
            Colors::Sparse(m) => *m.get(&code)?,
        };
        (c != NO_COLOR).then_some(c)
    }

    pub(crate) fn dense(&self) -> Option<&[u32]> {
        match &self.colors {
            Colors::Dense(v) => Some(v),
            Colors::Sparse(_) => None,
        }
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.colors, Colors::Dense(_))
    }

    pub fn representatives(&self) -> &[u64] {
        &self.representatives
    }

    pub fn orbit_sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn tuple_color(&self, t: &PointTuple) -> Result<u32> {
        match self.space {
            ObjectSpace::Tuples { degree, arity } => {
                check_degree(degree, t.domain())?;
                if t.arity() != arity {
                    return Err(Error::InvalidArgument(format!(
                        "tuple arity {} does not match coloring arity {arity}",
                        t.arity()
                    )));
                }
                Ok(self.color(t.encode()?).expect("every tuple is colored"))
            }
            ObjectSpace::Partitions { .. } => Err(Error::InvalidArgument(
                "coloring is over partitions, not tuples".into(),
            )),
        }
    }

    pub fn partition_color(&self, p: &OrderedPartition) -> Result<u32> {
        match self.space {
            ObjectSpace::Partitions {
                degree,
                max_classes,
            } => {
                check_degree(degree, p.domain())?;
                if p.class_count() > max_classes {
                    return Err(Error::InvalidArgument(format!(
                        "partition has {} classes, coloring allows {max_classes}",
                        p.class_count()
                    )));
                }
                Ok(self
                    .color(p.encode(self.space.base())?)
                    .expect("every partition is colored"))
            }
            ObjectSpace::Tuples { .. } => Err(Error::InvalidArgument(
                "coloring is over tuples, not partitions".into(),
            )),
        }
    }

    pub fn representative_tuple(&self, color: usize) -> Result<PointTuple> {
        match self.space {
            ObjectSpace::Tuples { degree, arity } => {
                PointTuple::decode(degree, arity, self.representatives[color])
            }
            ObjectSpace::Partitions { .. } => {
                Err(Error::InvalidArgument("coloring is over partitions".into()))
            }
        }
    }

    pub fn representative_partition(&self, color: usize) -> Result<OrderedPartition> {
        let radix = self.space.radix()?;
        match self.space {
            ObjectSpace::Partitions { .. } => {
                let mut labels = vec![0u8; radix.len()];
                radix.decode_into(self.representatives[color], &mut labels);
                Ok(OrderedPartition::from_labels(&labels).expect("representative is valid"))
            }
            ObjectSpace::Tuples { .. } => {
                Err(Error::InvalidArgument("coloring is over tuples".into()))
            }
        }
    }

    /// Codes of every object with the given color, ascending.
    pub fn members(&self, color: u32) -> Vec<u64> {
        let mut out: Vec<u64> = match &self.colors {
            Colors::Dense(v) => v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == color)
                .map(|(i, _)| i as u64)
                .collect(),
            Colors::Sparse(m) => m
                .iter()
                .filter(|(_, &c)| c == color)
                .map(|(&k, _)| k)
                .collect(),
        };
        out.sort_unstable();
        out
    }

    /// Color of every code in `0..code_space`, `None` for non-objects.
    pub fn color_vector(&self) -> Vec<Option<u32>> {
        let n = self.space.code_space() as u64;
        (0..n).map(|code| self.color(code)).collect()
    }

    /// Canonical JSON: array of color ids indexed by code, `null` for codes
    /// that do not encode an object.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(&self.color_vector()).expect("plain array serializes")
    }

    /// Same space and same color on every object.
    pub fn same_as(&self, other: &OrbitColoring) -> bool {
        self.space == other.space
            && self.representatives == other.representatives
            && self.color_vector() == other.color_vector()
    }
}

pub fn orbits_on_tuples(g: &PermGroup, m: usize, budget: &Budget) -> Result<OrbitColoring> {
    orbits_on_tuples_with(g, m, budget, OrbitStrategy::Auto)
}

pub fn orbits_on_tuples_with(
    g: &PermGroup,
    m: usize,
    budget: &Budget,
    strategy: OrbitStrategy,
) -> Result<OrbitColoring> {
    let space = ObjectSpace::Tuples {
        degree: g.degree(),
        arity: m,
    };
    orbits_on(g, space, budget, strategy)
}

pub fn orbits_on_partitions(g: &PermGroup, m: usize, budget: &Budget) -> Result<OrbitColoring> {
    orbits_on_partitions_with(g, m, budget, OrbitStrategy::Auto)
}

pub fn orbits_on_partitions_with(
    g: &PermGroup,
    m: usize,
    budget: &Budget,
    strategy: OrbitStrategy,
) -> Result<OrbitColoring> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "class bound must be at least 1".into(),
        ));
    }
    let space = ObjectSpace::Partitions {
        degree: g.degree(),
        max_classes: m,
    };
    orbits_on(g, space, budget, strategy)
}

fn orbits_on(
    g: &PermGroup,
    space: ObjectSpace,
    budget: &Budget,
    strategy: OrbitStrategy,
) -> Result<OrbitColoring> {
    let dense = match strategy {
        OrbitStrategy::Dense => true,
        OrbitStrategy::Sparse => false,
        OrbitStrategy::Auto => space.code_space() <= budget.max_objects as u128,
    };
    if dense {
        budget.check_objects(space.code_space())?;
        dense_orbits(g, space)
    } else {
        budget.check_objects(space.object_count())?;
        sparse_orbits(g, space)
    }
}

fn dense_orbits(g: &PermGroup, space: ObjectSpace) -> Result<OrbitColoring> {
    let mut codec = ObjectCodec::new(space)?;
    let size = codec.radix().size() as usize;
    let mut colors = vec![NO_COLOR; size];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for start in 0..size as u64 {
        if colors[start as usize] != NO_COLOR || !codec.is_valid(start) {
            continue;
        }
        let color = representatives.len() as u32;
        representatives.push(start);
        colors[start as usize] = color;
        queue.clear();
        queue.push(start);
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for gen in g.generators() {
                let y = codec.image(x, gen);
                if colors[y as usize] == NO_COLOR {
                    colors[y as usize] = color;
                    queue.push(y);
                }
            }
        }
        sizes.push(queue.len() as u64);
    }
    Ok(OrbitColoring {
        space,
        colors: Colors::Dense(colors),
        representatives,
        sizes,
    })
}

fn sparse_orbits(g: &PermGroup, space: ObjectSpace) -> Result<OrbitColoring> {
    let mut codec = ObjectCodec::new(space)?;
    let codes: Box<dyn Iterator<Item = u64>> = match space {
        ObjectSpace::Tuples { .. } => Box::new(0..codec.radix().size()),
        ObjectSpace::Partitions {
            degree,
            max_classes,
        } => Box::new(enumerate_partition_codes(degree, max_classes).into_iter()),
    };
    let mut colors: HashMap<u64, u32> = HashMap::new();
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for start in codes {
        if colors.contains_key(&start) {
            continue;
        }
        let color = representatives.len() as u32;
        representatives.push(start);
        colors.insert(start, color);
        queue.clear();
        queue.push(start);
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for gen in g.generators() {
                let y = codec.image(x, gen);
                if let std::collections::hash_map::Entry::Vacant(e) = colors.entry(y) {
                    e.insert(color);
                    queue.push(y);
                }
            }
        }
        sizes.push(queue.len() as u64);
    }
    Ok(OrbitColoring {
        space,
        colors: Colors::Sparse(colors),
        representatives,
        sizes,
    })
}
