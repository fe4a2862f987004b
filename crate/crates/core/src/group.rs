//! Permutation groups held as fully enumerated element sets.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;
use sha2::{Digest, Sha256};

use crate::error::{check_degree, Error, Result};
use crate::exec::Budget;
use crate::perm::{Permutation, Point};

/// A permutation group with every element stored, sorted lexicographically
/// by image array. Membership is a hash lookup.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        PermGroup {
            degree,
            generators: Vec::new(),
            elements,
        }
    }

    /// Enumerates the group generated by `gens` by breadth-first closure.
    pub fn generate(degree: usize, gens: &[Permutation], budget: &Budget) -> Result<Self> {
        for g in gens {
            check_degree(degree, g.degree())?;
        }
        let mut generators: Vec<Permutation> = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        let mut next = 0;
        while next < elements.len() {
            let current = elements[next].clone();
            next += 1;
            for g in &generators {
                let product = current.then(g);
                if !elements.contains(&product) {
                    elements.insert(product);
                    budget.check_elements(elements.len())?;
                }
            }
            if next % 4096 == 0 && budget.expired() {
                return Err(Error::budget("wall clock", 0));
            }
        }
        elements.sort();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps an element set already known to be a group. `elements` must be
    /// sorted and closed; callers guarantee both.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        PermGroup {
            degree,
            generators,
            elements: elements.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> + '_ {
        self.elements.iter()
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn is_member(&self, p: &Permutation) -> Result<bool> {
        check_degree(self.degree, p.degree())?;
        Ok(self.elements.contains(p))
    }

    pub(crate) fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// True iff every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        check_degree(self.degree, other.degree)?;
        if self.order() > other.order() || !other.order().is_multiple_of(self.order()) {
            return Ok(false);
        }
        Ok(self.elements.iter().all(|e| other.elements.contains(e)))
    }

    /// Some element of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &PermGroup) -> Option<&Permutation> {
        self.elements.iter().find(|e| !other.elements.contains(*e))
    }

    /// Hex SHA-256 over the degree and the sorted element images.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.degree as u64).to_le_bytes());
        for e in &self.elements {
            for &x in e.images() {
                hasher.update(x.to_le_bytes());
            }
        }
        hex::encode(hasher.finalize())
    }

    /// Point orbits as sorted vectors, ordered by smallest point.
    pub fn point_orbits(&self) -> Vec<Vec<Point>> {
        let n = self.degree;
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<Point>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start as Point];
            orbit_of[start] = id;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                i += 1;
                for g in &self.generators {
                    let y = g.image(x);
                    if orbit_of[y as usize] == usize::MAX {
                        orbit_of[y as usize] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() <= 1
    }

    /// Minimal generating subset by greedy selection: repeatedly adjoin the
    /// smallest element outside the span of the generators chosen so far.
    pub(crate) fn greedy_generators(&self, budget: &Budget) -> Result<Vec<Permutation>> {
        let mut chosen: Vec<Permutation> = Vec::new();
        let mut span = PermGroup::trivial(self.degree);
        while span.order() < self.order() {
            let next = self
                .elements
                .iter()
                .find(|e| !span.contains(e))
                .expect("span is a proper subgroup")
                .clone();
            chosen.push(next);
            span = PermGroup::generate(self.degree, &chosen, budget)?;
        }
        debug_assert!(span == *self);
        Ok(chosen)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().eq(other.elements.iter())
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens [",
            self.degree,
            self.order()
        )?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

pub fn subgroup_le(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    g.is_subgroup_of(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGroup {
    Sym,
    Alt,
    Cyclic,
    Dihedral,
    Trivial,
}

impl NamedGroup {
    pub fn as_str(self) -> &'static str {
        match self {
            NamedGroup::Sym => "sym",
            NamedGroup::Alt => "alt",
            NamedGroup::Cyclic => "cyclic",
            NamedGroup::Dihedral => "dihedral",
            NamedGroup::Trivial => "trivial",
        }
    }

    /// Standard generators on `n` points.
    pub fn generators(self, n: usize) -> Result<Vec<Permutation>> {
        if n == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let np = n as Point;
        let long_cycle =
            || Permutation::from_images_unchecked((0..np).map(|i| (i + 1) % np).collect());
        Ok(match self {
            NamedGroup::Trivial => Vec::new(),
            NamedGroup::Sym if n == 1 => Vec::new(),
            NamedGroup::Sym => vec![Permutation::transposition(n, 0, 1)?, long_cycle()],
            NamedGroup::Alt => (2..np)
                .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
                .collect::<Result<_>>()?,
            NamedGroup::Cyclic if n == 1 => Vec::new(),
            NamedGroup::Cyclic => vec![long_cycle()],
            NamedGroup::Dihedral => {
                if n < 3 {
                    return Err(Error::InvalidArgument(
                        "dihedral group needs at least 3 points".into(),
                    ));
                }
                let reflection =
                    Permutation::from_images_unchecked((0..np).map(|i| (np - i) % np).collect());
                vec![long_cycle(), reflection]
            }
        })
    }
}

impl FromStr for NamedGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sym" | "symmetric" | "s" => Ok(NamedGroup::Sym),
            "alt" | "alternating" | "a" => Ok(NamedGroup::Alt),
            "cyclic" | "cyc" | "c" => Ok(NamedGroup::Cyclic),
            "dihedral" | "dih" | "d" => Ok(NamedGroup::Dihedral),
            "trivial" | "triv" | "1" => Ok(NamedGroup::Trivial),
            other => Err(Error::Parse(format!("unknown group name {other:?}"))),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn named_group(name: NamedGroup, n: usize, budget: &Budget) -> Result<PermGroup> {
    let gens = name.generators(n)?;
    PermGroup::generate(n, &gens, budget)
}

/// Shorthand constructors with the default budget, for small degrees.
pub fn sym(n: usize) -> PermGroup {
    named_group(NamedGroup::Sym, n, &Budget::default()).expect("sym within default budget")
}

pub fn alt(n: usize) -> PermGroup {
    named_group(NamedGroup::Alt, n, &Budget::default()).expect("alt within default budget")
}

pub fn cyclic(n: usize) -> PermGroup {
    named_group(NamedGroup::Cyclic, n, &Budget::default()).expect("cyclic within default budget")
}

pub fn dihedral(n: usize) -> PermGroup {
    named_group(NamedGroup::Dihedral, n, &Budget::default())
        .expect("dihedral within default budget")
}

/// Symmetric group on an arbitrary subset of the points, fixing the rest.
pub(crate) fn sym_on_points(degree: usize, points: &[Point]) -> Result<Vec<Permutation>> {
    if points.len() < 2 {
        return Ok(Vec::new());
    }
    let transposition = Permutation::from_cycles(degree, &[&points[..2]])?;
    let cycle = Permutation::from_cycles(degree, &[points])?;
    Ok(vec![transposition, cycle])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn cyclic_group_from_one_generator() {
        let g = PermGroup::generate(
            3,
            &[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::generate(2, &[], &Budget::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, PermGroup::trivial(2));
    }

    #[test]
    fn named_orders() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(alt(4).order(), 12);
        assert_eq!(dihedral(4).order(), 8);
        for n in 1..=6 {
            assert_eq!(sym(n).order(), factorial(n));
            assert_eq!(cyclic(n).order(), n);
            assert_eq!(alt(n).order(), if n < 2 { 1 } else { factorial(n) / 2 });
            assert_eq!(
                named_group(NamedGroup::Trivial, n, &Budget::default())
                    .unwrap()
                    .order(),
                1
            );
        }
        for n in 3..=7 {
            assert_eq!(dihedral(n).order(), 2 * n);
        }
    }

    #[test]
    fn alternating_elements_are_even() {
        assert!(alt(5).elements().all(Permutation::is_even));
    }

    #[test]
    fn generation_respects_cap() {
        let budget = Budget {
            max_elements: 100,
            ..Budget::default()
        };
        let err = named_group(NamedGroup::Sym, 5, &budget).unwrap_err();
        assert!(err.is_budget());
        assert!(err.to_string().contains("100"), "{err}");
    }

    #[test]
    fn bad_names_and_degrees() {
        assert!("klein".parse::<NamedGroup>().is_err());
        assert!(named_group(NamedGroup::Dihedral, 2, &Budget::default()).is_err());
        assert!(named_group(NamedGroup::Sym, 0, &Budget::default()).is_err());
    }

    #[test]
    fn membership() {
        let odd = Permutation::transposition(3, 0, 1).unwrap();
        assert!(!alt(3).is_member(&odd).unwrap());
        assert!(sym(3).is_member(&odd).unwrap());
        assert!(cyclic(5).is_member(&Permutation::identity(5)).unwrap());
        assert!(sym(3).is_member(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn subgroup_relation() {
        assert!(subgroup_le(&alt(4), &sym(4)).unwrap());
        assert!(!subgroup_le(&sym(4), &alt(4)).unwrap());
        assert!(subgroup_le(&dihedral(5), &dihedral(5)).unwrap());
        assert!(subgroup_le(&alt(3), &sym(4)).is_err());
    }

    #[test]
    fn closed_under_products_and_inverses() {
        for n in 1..=5 {
            for g in [sym(n), alt(n), cyclic(n)] {
                assert!(g.contains(&Permutation::identity(n)));
                for a in g.elements() {
                    assert!(g.contains(&a.inverse()));
                    for b in g.elements() {
                        assert!(g.contains(&a.then(b)));
                    }
                }
                for gen in g.generators() {
                    assert!(g.contains(gen));
                }
                assert_eq!(factorial(n) % g.order(), 0);
            }
        }
    }

    #[test]
    fn deterministic_sorted_elements() {
        let a = dihedral(6);
        let b = PermGroup::generate(
            6,
            &a.generators().iter().rev().cloned().collect::<Vec<_>>(),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.digest(), b.digest());
        let listed: Vec<_> = a.elements().collect();
        assert!(listed.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn greedy_generators_span_group() {
        let g = sym(4);
        let gens = g.greedy_generators(&Budget::default()).unwrap();
        assert_eq!(
            PermGroup::generate(4, &gens, &Budget::default()).unwrap(),
            g
        );
        // (3 4), (2 3), (1 2) in 1-based notation.
        let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(3 4)", "(2 3)", "(1 2)"]);
    }

    #[test]
    fn point_orbits_of_intransitive_group() {
        let g = PermGroup::generate(
            4,
            &[Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap()],
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(g.point_orbits(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_transitive());
    }
}
