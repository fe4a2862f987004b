use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::group::PermGroup;
use crate::perm::Point;

use super::orbits_on_tuples;

/// One orbit on ordered pairs of distinct points.
pub fn is_2_transitive(k: &PermGroup) -> Result<bool> {
    if k.degree() < 2 {
        return Err(Error::InvalidArgument(
            "2-transitivity needs degree at least 2".into(),
        ));
    }
    Ok(orbits_on_tuples(k, 2, &Budget::default())?.orbit_count() == 2)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smallest block of imprimitivity containing `a` and `b`, sorted.
pub fn minimal_block(g: &PermGroup, a: Point, b: Point) -> Vec<Point> {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut pending = vec![(a as usize, b as usize)];
    let ra = find(&mut parent, a as usize);
    let rb = find(&mut parent, b as usize);
    if ra != rb {
        parent[rb] = ra;
    }
    while let Some((x, y)) = pending.pop() {
        for gen in g.generators() {
            let gx = find(&mut parent, gen.image(x as Point) as usize);
            let gy = find(&mut parent, gen.image(y as Point) as usize);
            if gx != gy {
                parent[gy] = gx;
                pending.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a as usize);
    (0..n)
        .filter(|&x| find(&mut parent, x) == root)
        .map(|x| x as Point)
        .collect()
}

/// Transitive with no nontrivial proper block. Intransitive groups are
/// reported as not primitive; degree 1 counts as primitive.
pub fn is_primitive(l: &PermGroup) -> bool {
    if !l.is_transitive() {
        return false;
    }
    let n = l.degree();
    (1..n as Point).all(|b| minimal_block(l, 0, b).len() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alt, cyclic, dihedral, sym};
    use crate::perm::Permutation;

    #[test]
    fn two_transitivity() {
        assert!(is_2_transitive(&sym(2)).unwrap());
        assert!(is_2_transitive(&sym(4)).unwrap());
        assert!(is_2_transitive(&alt(4)).unwrap());
        // regular on 3 points, so two orbits on distinct pairs
        assert!(!is_2_transitive(&alt(3)).unwrap());
        assert!(!is_2_transitive(&cyclic(4)).unwrap());
        assert!(is_2_transitive(&PermGroup::trivial(1)).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&sym(4)));
        assert!(is_primitive(&alt(3)));
        assert!(is_primitive(&cyclic(5)));
        assert!(!is_primitive(&cyclic(4)));
        assert!(!is_primitive(&dihedral(6)));
        assert!(is_primitive(&dihedral(5)));
        assert!(is_primitive(&PermGroup::trivial(1)));
        assert!(!is_primitive(&PermGroup::trivial(2)));
        assert!(is_primitive(&sym(2)));
    }

    #[test]
    fn cyclic4_block() {
        assert_eq!(minimal_block(&cyclic(4), 0, 2), vec![0, 2]);
        assert_eq!(minimal_block(&cyclic(4), 0, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn intransitive_is_not_primitive() {
        let g = PermGroup::generate(
            4,
            &[Permutation::parse_cycles("(1 2 3)", 4).unwrap()],
            &Budget::default(),
        )
        .unwrap();
        assert!(!is_primitive(&g));
    }
}
