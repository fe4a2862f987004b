//! Frozen expected values for small worked instances.

use closurelab::actions::{
    act_on_partition, act_on_tuple, imprimitive_wreath, is_2_transitive, is_primitive,
    orbits_on_partitions, orbits_on_tuples, ordered_partition_count, pi_of_tuple,
    product_action_direct, product_action_wreath, tuple_from_rows,
};
use closurelab::closures::closure_chain;
use closurelab::group::{alt, cyclic, sym};
use closurelab::verifier::verify_theorem1;
use closurelab::{
    m_closure, partition_closure, Budget, ClosureKind, Config, GroupSpec, OrderedPartition,
    PermGroup, Permutation, PointTuple, WreathElement,
};

fn b() -> Budget {
    Budget::default()
}

fn p(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap()
}

#[test]
fn tuple_action() {
    let t = PointTuple::new(2, vec![0, 0, 1]).unwrap();
    assert_eq!(
        act_on_tuple(&p("(1 2)", 2), &t).unwrap().entries(),
        &[1, 1, 0]
    );
    let c = orbits_on_tuples(&sym(2), 2, &b()).unwrap();
    let off = c
        .tuple_color(&PointTuple::new(2, vec![0, 1]).unwrap())
        .unwrap();
    assert_eq!(c.members(off), vec![1, 2]);
}

#[test]
fn partition_action() {
    let x = OrderedPartition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
    let y = act_on_partition(&p("(1 2 3)", 3), &x).unwrap();
    assert_eq!(
        y,
        OrderedPartition::new(3, vec![vec![1], vec![0, 2]]).unwrap()
    );
    let swapped = OrderedPartition::new(3, vec![vec![1, 2], vec![0]]).unwrap();
    let c = orbits_on_partitions(&sym(3), 3, &b()).unwrap();
    assert_ne!(
        c.partition_color(&x).unwrap(),
        c.partition_color(&swapped).unwrap()
    );
}

#[test]
fn orbit_counts() {
    // equality patterns of m positions: Bell numbers for n >= m
    for (m, bell) in [(1, 1), (2, 2), (3, 5), (4, 15)] {
        assert_eq!(
            orbits_on_tuples(&sym(5), m, &b()).unwrap().orbit_count(),
            bell
        );
    }
    assert_eq!(
        orbits_on_tuples(&PermGroup::trivial(3), 2, &b())
            .unwrap()
            .orbit_count(),
        9
    );
    assert_eq!(
        orbits_on_partitions(&alt(3), 2, &b())
            .unwrap()
            .orbit_count(),
        3
    );
    let trivial = orbits_on_partitions(&PermGroup::trivial(4), 4, &b()).unwrap();
    assert_eq!(trivial.orbit_count() as u128, ordered_partition_count(4, 4));
    assert_eq!(ordered_partition_count(4, 4), 75);
    // Sym(n) orbits are the compositions of n into at most m parts
    assert_eq!(
        orbits_on_partitions(&sym(4), 2, &b())
            .unwrap()
            .orbit_count(),
        4
    );
}

#[test]
fn products() {
    let w = product_action_wreath(&sym(2), &alt(3), &b()).unwrap();
    assert_eq!((w.degree(), w.order()), (8, 24));
    let e =
        WreathElement::new(p("(1 2)", 2), vec![p("(1 2)", 2), Permutation::identity(2)]).unwrap();
    // (0,1) has code 1, (1,1) has code 3
    assert_eq!(e.induced(2).unwrap().image(1), 3);
    assert_eq!(
        product_action_wreath(&alt(4), &PermGroup::trivial(1), &b()).unwrap(),
        alt(4)
    );
    let d = product_action_direct(&sym(2), &sym(2), &b()).unwrap();
    assert_eq!((d.degree(), d.order()), (4, 4));
    assert_eq!(
        product_action_direct(&alt(3), &PermGroup::trivial(1), &b()).unwrap(),
        alt(3)
    );
    let i = imprimitive_wreath(&sym(2), &sym(2), &b()).unwrap();
    assert_eq!((i.degree(), i.order()), (4, 8));
    assert_eq!(
        imprimitive_wreath(&cyclic(5), &PermGroup::trivial(1), &b()).unwrap(),
        cyclic(5)
    );
}

#[test]
fn pi_map() {
    let c = orbits_on_tuples(&sym(2), 2, &b()).unwrap();
    let alpha = tuple_from_rows(&[vec![0, 0], vec![0, 1], vec![1, 1]], 2).unwrap();
    let pi = pi_of_tuple(&c, &alpha, 3, 2).unwrap();
    assert_eq!(
        pi,
        OrderedPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap()
    );
}

#[test]
fn structure() {
    assert!(is_2_transitive(&sym(2)).unwrap());
    assert!(!is_2_transitive(&alt(3)).unwrap());
    assert!(!is_2_transitive(&cyclic(4)).unwrap());
    assert!(is_primitive(&sym(4)));
    assert!(!is_primitive(&cyclic(4)));
    assert!(is_primitive(&alt(3)));
}

#[test]
fn closures() {
    let cfg = Config::default();
    let w = product_action_wreath(&sym(2), &alt(3), &b()).unwrap();
    let expected = product_action_wreath(&sym(2), &sym(3), &b()).unwrap();
    assert_eq!(m_closure(&w, 2, &cfg).unwrap().closure, expected);
    assert_eq!(m_closure(&alt(4), 3, &cfg).unwrap().closure, alt(4));
    assert_eq!(
        m_closure(&PermGroup::trivial(1), 4, &cfg)
            .unwrap()
            .closure
            .order(),
        1
    );
    assert_eq!(m_closure(&alt(3), 2, &cfg).unwrap().closure, alt(3));
    assert_eq!(partition_closure(&alt(4), 3, &cfg).unwrap().closure, sym(4));
    assert_eq!(partition_closure(&alt(4), 4, &cfg).unwrap().closure, alt(4));
    assert_eq!(
        partition_closure(&cyclic(6), 1, &cfg).unwrap().closure,
        sym(6)
    );
    assert_eq!(partition_closure(&alt(3), 2, &cfg).unwrap().closure, sym(3));
}

#[test]
fn chains() {
    let cfg = Config::default();
    let c = closure_chain(&alt(3), ClosureKind::PointTuple, 3, &cfg).unwrap();
    assert_eq!(c.orders(), [6, 3, 3]);
    assert_eq!(c.stabilization_index, Some(2));
    let c = closure_chain(&cyclic(5), ClosureKind::Partition, 5, &cfg).unwrap();
    assert!(c.is_monotone());
    assert!(c.stabilization_index.is_some_and(|m| m <= 5));
}

#[test]
fn theorem1_instances() {
    let cfg = Config::default();
    let spec = |s: &str| s.parse::<GroupSpec>().unwrap();
    for (k, l) in [("sym:2", "alt:3"), ("sym:2", "sym:2"), ("alt:3", "sym:2")] {
        let r = verify_theorem1(&spec(k), &spec(l), 2, &cfg).unwrap();
        assert!(r.passed, "{k} {l}: {:?}", r.verdict);
    }
}

#[test]
fn hamming_scheme_group_is_two_closed() {
    let h = product_action_wreath(&sym(3), &sym(2), &b()).unwrap();
    assert_eq!((h.degree(), h.order()), (9, 72));
    assert_eq!(m_closure(&h, 2, &Config::default()).unwrap().closure, h);
}
