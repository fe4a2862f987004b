//! Wreath and direct products.
//!
//! Product-action points of `Γ^d` are coded with coordinate 0 most
//! significant: `ω ↦ Σ ω_i |Γ|^(d-1-i)`. Points of `Γ × Δ` are coded as
//! `γ·d + δ`.

use crate::error::{check_degree, Error, Result};
use crate::exec::Budget;
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::Radix;

/// `(g_1, …, g_d; ḡ)`: `top` permutes the `d` coordinates, `bottom[i]`
/// acts inside coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    top: Permutation,
    bottom: Vec<Permutation>,
}

impl WreathElement {
    pub fn new(top: Permutation, bottom: Vec<Permutation>) -> Result<Self> {
        check_degree(top.degree(), bottom.len())?;
        if let Some(first) = bottom.first() {
            for b in &bottom[1..] {
                check_degree(first.degree(), b.degree())?;
            }
        }
        Ok(WreathElement { top, bottom })
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn bottom(&self) -> &[Permutation] {
        &self.bottom
    }

    /// The permutation of `Γ^d` given by
    /// `(ω^g)_{j^ḡ} = (ω_j)^{g_j}`.
    pub fn induced(&self, base_degree: usize) -> Result<Permutation> {
        if let Some(b) = self.bottom.first() {
            check_degree(base_degree, b.degree())?;
        }
        let d = self.top.degree();
        let radix =
            Radix::new(base_degree, d).ok_or_else(|| Error::budget("product degree", u64::MAX))?;
        let size = radix.size() as usize;
        let mut coords = vec![0 as Point; d];
        let mut moved = vec![0 as Point; d];
        let mut images = Vec::with_capacity(size);
        for code in 0..size as u64 {
            radix.decode_into(code, &mut coords);
            for j in 0..d {
                moved[self.top.image(j as Point) as usize] = self.bottom[j].image(coords[j]);
            }
            images.push(radix.encode(&moved) as Point);
        }
        Ok(Permutation::from_images_unchecked(images))
    }
}

pub fn wreath_point_code(coords: &[Point], base_degree: usize) -> u64 {
    Radix::new(base_degree, coords.len())
        .expect("product degree fits u64")
        .encode(coords)
}

pub fn wreath_point_coords(code: u64, base_degree: usize, d: usize) -> Vec<Point> {
    let radix = Radix::new(base_degree, d).expect("product degree fits u64");
    let mut coords = vec![0; d];
    radix.decode_into(code, &mut coords);
    coords
}

fn checked_order(k: usize, d: usize, l: usize, budget: &Budget) -> Result<()> {
    let order = (k as u128)
        .checked_pow(d as u32)
        .and_then(|x| x.checked_mul(l as u128));
    match order {
        Some(o) if o <= budget.max_elements as u128 => Ok(()),
        _ => Err(Error::budget("group elements", budget.max_elements as u64)),
    }
}

fn check_product_degree(degree: u128, budget: &Budget) -> Result<usize> {
    if degree > budget.max_degree as u128 {
        Err(Error::budget("product degree", budget.max_degree as u64))
    } else {
        Ok(degree as usize)
    }
}

/// `K ↑ L`: the wreath product in product action on `Γ^d`.
pub fn product_action_wreath(k: &PermGroup, l: &PermGroup, budget: &Budget) -> Result<PermGroup> {
    let n = k.degree();
    let d = l.degree();
    let degree = check_product_degree(Radix::space_size(n, d), budget)?;
    checked_order(k.order(), d, l.order(), budget)?;
    let id_k = Permutation::identity(n);
    let id_l = Permutation::identity(d);
    let mut gens = Vec::new();
    for j in 0..d {
        for g in k.generators() {
            let mut bottom = vec![id_k.clone(); d];
            bottom[j] = g.clone();
            gens.push(WreathElement::new(id_l.clone(), bottom)?.induced(n)?);
        }
    }
    for t in l.generators() {
        gens.push(WreathElement::new(t.clone(), vec![id_k.clone(); d])?.induced(n)?);
    }
    PermGroup::generate(degree, &gens, budget)
}

/// `K × L` acting on `Γ × Δ` by `(γ, δ)^(k, l) = (γ^k, δ^l)`.
pub fn product_action_direct(k: &PermGroup, l: &PermGroup, budget: &Budget) -> Result<PermGroup> {
    let n = k.degree();
    let d = l.degree();
    let degree = check_product_degree(n as u128 * d as u128, budget)?;
    checked_order(k.order(), 1, l.order(), budget)?;
    let lift = |f: &dyn Fn(Point, Point) -> (Point, Point)| {
        let images = (0..degree as Point)
            .map(|code| {
                let (g, e) = f(code / d as Point, code % d as Point);
                g * d as Point + e
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let mut gens = Vec::new();
    for g in k.generators() {
        gens.push(lift(&|x, y| (g.image(x), y)));
    }
    for h in l.generators() {
        gens.push(lift(&|x, y| (x, h.image(y))));
    }
    PermGroup::generate(degree, &gens, budget)
}

/// `K ≀ L` in imprimitive action on `Γ × Δ`, blocks `Γ × {j}`.
pub fn imprimitive_wreath(k: &PermGroup, l: &PermGroup, budget: &Budget) -> Result<PermGroup> {
    let n = k.degree();
    let d = l.degree();
    let degree = check_product_degree(n as u128 * d as u128, budget)?;
    checked_order(k.order(), d, l.order(), budget)?;
    let lift = |f: &dyn Fn(Point, Point) -> (Point, Point)| {
        let images = (0..degree as Point)
            .map(|code| {
                let (g, e) = f(code / d as Point, code % d as Point);
                g * d as Point + e
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let mut gens = Vec::new();
    for j in 0..d as Point {
        for g in k.generators() {
            gens.push(lift(&|x, y| if y == j { (g.image(x), y) } else { (x, y) }));
        }
    }
    for h in l.generators() {
        gens.push(lift(&|x, y| (x, h.image(y))));
    }
    PermGroup::generate(degree, &gens, budget)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::group::{alt, cyclic, dihedral, sym};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn displayed_action_formula() {
        // g_1 = (0 1), g_2 = id, ḡ swaps the coordinates: (0,1) ↦ (1,1).
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        let w = WreathElement::new(swap.clone(), vec![swap, Permutation::identity(2)]).unwrap();
        let p = w.induced(2).unwrap();
        let omega = wreath_point_code(&[0, 1], 2);
        assert_eq!(
            wreath_point_coords(p.image(omega as Point) as u64, 2, 2),
            vec![1, 1]
        );
    }

    #[test]
    fn sym2_wr_alt3_product_action() {
        let g = product_action_wreath(&sym(2), &alt(3), &budget()).unwrap();
        assert_eq!(g.degree(), 8);
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn degree_one_top_group_gives_k() {
        let k = dihedral(4);
        let g = product_action_wreath(&k, &PermGroup::trivial(1), &budget()).unwrap();
        assert_eq!(g, k);
    }

    /// Every WreathElement of K^d × L, enumerated directly.
    fn all_induced(k: &PermGroup, l: &PermGroup) -> HashSet<Permutation> {
        let d = l.degree();
        let ks: Vec<&Permutation> = k.elements().collect();
        let mut out = HashSet::new();
        let mut idx = vec![0usize; d];
        loop {
            for t in l.elements() {
                let bottom = idx.iter().map(|&i| ks[i].clone()).collect();
                out.insert(
                    WreathElement::new(t.clone(), bottom)
                        .unwrap()
                        .induced(k.degree())
                        .unwrap(),
                );
            }
            let mut pos = 0;
            while pos < d {
                idx[pos] += 1;
                if idx[pos] < ks.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
        out
    }

    #[test]
    fn product_action_is_faithful_and_complete() {
        let cases = [
            (sym(2), alt(3)),
            (cyclic(3), sym(2)),
            (sym(3), sym(2)),
            (sym(2), sym(2)),
        ];
        for (k, l) in cases {
            let g = product_action_wreath(&k, &l, &budget()).unwrap();
            let enumerated = all_induced(&k, &l);
            let expected = k.order().pow(l.degree() as u32) * l.order();
            assert_eq!(enumerated.len(), expected);
            assert_eq!(g.order(), expected);
            assert!(g.elements().all(|e| enumerated.contains(e)));
        }
    }

    #[test]
    fn direct_products() {
        let g = product_action_direct(&sym(2), &sym(2), &budget()).unwrap();
        assert_eq!((g.degree(), g.order()), (4, 4));
        let a = product_action_direct(&alt(3), &PermGroup::trivial(1), &budget()).unwrap();
        assert_eq!(a, alt(3));
    }

    #[test]
    fn direct_product_point_orbits_multiply() {
        let groups = [sym(2), cyclic(3), PermGroup::trivial(2), alt(4)];
        for k in &groups {
            for l in &groups {
                let g = product_action_direct(k, l, &budget()).unwrap();
                assert_eq!(
                    g.point_orbits().len(),
                    k.point_orbits().len() * l.point_orbits().len()
                );
                assert_eq!(g.order(), k.order() * l.order());
            }
        }
    }

    #[test]
    fn imprimitive_wreaths() {
        let g = imprimitive_wreath(&sym(2), &sym(2), &budget()).unwrap();
        assert_eq!((g.degree(), g.order()), (4, 8));
        assert_eq!(
            imprimitive_wreath(&alt(4), &PermGroup::trivial(1), &budget()).unwrap(),
            alt(4)
        );
        let g = imprimitive_wreath(&sym(3), &sym(2), &budget()).unwrap();
        assert_eq!(g.order(), 72);
        // blocks Γ × {j}: points with equal second coordinate stay together
        for e in g.elements() {
            for a in 0..6 {
                for b in 0..6 {
                    if a % 2 == b % 2 {
                        assert_eq!(e.image(a) % 2, e.image(b) % 2);
                    }
                }
            }
        }
    }

    #[test]
    fn caps_enforced() {
        let tight = Budget {
            max_degree: 8,
            ..Budget::default()
        };
        assert!(product_action_wreath(&sym(3), &sym(2), &tight)
            .unwrap_err()
            .is_budget());
        let tight = Budget {
            max_elements: 20,
            ..Budget::default()
        };
        assert!(product_action_wreath(&sym(2), &alt(3), &tight)
            .unwrap_err()
            .is_budget());
    }
}
