//! Induced actions on tuples and ordered partitions, orbit colorings, and
//! product-action constructions.

mod orbits;
mod partition;
mod pimap;
mod products;
mod structure;
mod tuple;

pub(crate) use orbits::ObjectCodec;
pub use orbits::{
    orbits_on_partitions, orbits_on_partitions_with, orbits_on_tuples, orbits_on_tuples_with,
    ObjectSpace, OrbitColoring, OrbitStrategy,
};
pub use partition::{act_on_partition, ordered_partition_count, OrderedPartition};
pub use pimap::{pi_of_tuple, tuple_from_rows};
pub use products::{
    imprimitive_wreath, product_action_direct, product_action_wreath, wreath_point_code,
    wreath_point_coords, WreathElement,
};
pub use structure::{is_2_transitive, is_primitive, minimal_block};
pub use tuple::{act_on_tuple, PointTuple};

/// Mixed-radix codec with the first digit most significant, so numeric
/// order on codes is lexicographic order on digit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Radix {
    base: u64,
    weights: Vec<u64>,
}

impl Radix {
    /// `None` when `base^len` overflows `u64`.
    pub(crate) fn new(base: usize, len: usize) -> Option<Self> {
        let base = base as u64;
        let mut weights = vec![0u64; len];
        let mut w = 1u64;
        for i in (0..len).rev() {
            weights[i] = w;
            w = w.checked_mul(base)?;
        }
        Some(Radix { base, weights })
    }

    pub(crate) fn space_size(base: usize, len: usize) -> u128 {
        (base as u128).checked_pow(len as u32).unwrap_or(u128::MAX)
    }

    pub(crate) fn len(&self) -> usize {
        self.weights.len()
    }

    pub(crate) fn size(&self) -> u64 {
        if self.weights.is_empty() {
            1
        } else {
            self.weights[0] * self.base
        }
    }

    pub(crate) fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub(crate) fn encode<T: Copy + Into<u64>>(&self, digits: &[T]) -> u64 {
        digits
            .iter()
            .zip(&self.weights)
            .map(|(&d, &w)| d.into() * w)
            .sum()
    }

    pub(crate) fn decode_into<T: TryFrom<u64>>(&self, mut code: u64, out: &mut [T])
    where
        T::Error: std::fmt::Debug,
    {
        for i in (0..self.weights.len()).rev() {
            out[i] = T::try_from(code % self.base).expect("digit fits");
            code /= self.base;
        }
    }

    pub(crate) fn digit(&self, code: u64, index: usize) -> u64 {
        (code / self.weights[index]) % self.base
    }
}
