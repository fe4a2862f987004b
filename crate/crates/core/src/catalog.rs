//! The fixed list of small groups the property checks sweep over.

use crate::exec::Budget;
use crate::group::{NamedGroup, PermGroup};
use crate::groupspec::GroupSpec;

/// Symmetric and alternating groups are listed only up to this degree.
pub const FULL_GROUPS_MAX_DEGREE: usize = 7;

const EXTRA: &[&str] = &[
    "(1 2)(3 4)@4",
    "(1 2);(3 4)@4",
    "(1 2)(3 4);(1 3)(2 4)@4",
    "(1 2 3);(4 5)@5",
    "(1 2 3)(4 5 6);(1 4)(2 5)(3 6)@6",
    "(1 2)(3 4)(5 6);(1 3 5)(2 4 6)@6",
    "(1 2 3);(4 5 6);(1 4)(2 5)(3 6)@6",
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub group: PermGroup,
}

/// Catalog groups of degree at most `max_degree`, ordered by degree.
pub fn catalog(max_degree: usize) -> Vec<CatalogEntry> {
    let mut specs = Vec::new();
    for n in 1..=max_degree {
        specs.push(GroupSpec::named(NamedGroup::Trivial, n));
        if (2..=FULL_GROUPS_MAX_DEGREE).contains(&n) {
            specs.push(GroupSpec::named(NamedGroup::Sym, n));
        }
        if (3..=FULL_GROUPS_MAX_DEGREE).contains(&n) {
            specs.push(GroupSpec::named(NamedGroup::Alt, n));
        }
        if n >= 3 {
            specs.push(GroupSpec::named(NamedGroup::Cyclic, n));
        }
        if n >= 4 {
            specs.push(GroupSpec::named(NamedGroup::Dihedral, n));
        }
        for text in EXTRA {
            let spec: GroupSpec = text.parse().expect("catalog spec parses");
            if spec.degree() == n {
                specs.push(spec);
            }
        }
    }
    let budget = Budget::default();
    specs
        .into_iter()
        .map(|spec| CatalogEntry {
            group: spec.build(&budget).expect("catalog group builds"),
            spec,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_ordered_by_degree() {
        let c = catalog(6);
        assert!(c
            .windows(2)
            .all(|w| w[0].group.degree() <= w[1].group.degree()));
        assert!(c.iter().any(|e| e.spec.label() == "alt:5"));
        assert!(c.iter().all(|e| e.group.degree() <= 6));
        assert_eq!(catalog(6).len(), c.len());
    }
}
