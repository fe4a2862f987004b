//! Exact `G^(m)` and `G^[m]`: the full preserver groups of the orbit
//! colorings on m-tuples and on ordered partitions with at most `m` classes.

mod cache;
mod chain;
mod naive;
mod search;

use serde::{Deserialize, Serialize};

use crate::actions::{orbits_on_partitions, orbits_on_tuples, ObjectCodec, OrbitColoring};
use crate::error::{Error, Result};
use crate::exec::{Budget, Config};
use crate::group::{sym_on_points, PermGroup};
use crate::perm::Permutation;

pub use cache::ClosureCache;
pub use chain::{closure_chain, ChainReport};
pub use naive::{naive_m_closure, naive_partition_closure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosureKind {
    /// `G^(m)`, orbits on m-tuples.
    #[serde(rename = "point_tuple_m")]
    PointTuple,
    /// `G^[m]`, orbits on ordered partitions with at most `m` classes.
    #[serde(rename = "partition_m")]
    Partition,
}

impl ClosureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosureKind::PointTuple => "point_tuple_m",
            ClosureKind::Partition => "partition_m",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub leaves: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SearchStats {
    pub(crate) fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
        self.leaves += other.leaves;
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub closure: PermGroup,
    pub kind: ClosureKind,
    pub m: usize,
    /// The closure equals the input group.
    pub stabilized: bool,
    pub stats: SearchStats,
}

/// Serialized form of a [`ClosureResult`]; also the on-disk cache format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureRecord {
    pub kind: ClosureKind,
    pub m: usize,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub stabilized: bool,
    pub stats: SearchStats,
}

impl ClosureResult {
    pub fn record(&self, timings: bool) -> ClosureRecord {
        ClosureRecord {
            kind: self.kind,
            m: self.m,
            degree: self.closure.degree(),
            order: self.closure.order(),
            generators: self
                .closure
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect(),
            stabilized: self.stabilized,
            stats: if timings {
                self.stats
            } else {
                self.stats.without_timing()
            },
        }
    }

    pub fn to_json(&self, timings: bool) -> String {
        serde_json::to_string(&self.record(timings)).expect("record serializes")
    }

    pub fn from_record(record: &ClosureRecord, budget: &Budget) -> Result<Self> {
        let gens = record
            .generators
            .iter()
            .map(|g| Permutation::parse_cycles(g, record.degree))
            .collect::<Result<Vec<_>>>()?;
        let closure = PermGroup::generate(record.degree, &gens, budget)?;
        if closure.order() != record.order {
            return Err(Error::Parse(format!(
                "closure record claims order {} but generators give {}",
                record.order,
                closure.order()
            )));
        }
        Ok(ClosureResult {
            closure,
            kind: record.kind,
            m: record.m,
            stabilized: record.stabilized,
            stats: record.stats,
        })
    }
}

fn check_arity(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument(
            "closure arity must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// `G^(m)`.
pub fn m_closure(g: &PermGroup, m: usize, cfg: &Config) -> Result<ClosureResult> {
    check_arity(m)?;
    cached(g, ClosureKind::PointTuple, m, cfg, || {
        if m == 1 {
            return point_closure(g, &cfg.budget);
        }
        let coloring = orbits_on_tuples(g, m, &cfg.budget)?;
        close_over(g, &coloring, ClosureKind::PointTuple, m, cfg)
    })
}

/// `G^[m]`.
pub fn partition_closure(g: &PermGroup, m: usize, cfg: &Config) -> Result<ClosureResult> {
    check_arity(m)?;
    cached(g, ClosureKind::Partition, m, cfg, || {
        if m == 1 || g.degree() <= 1 {
            let all: Vec<_> = (0..g.degree() as u32).collect();
            let gens = sym_on_points(g.degree(), &all)?;
            let closure = PermGroup::generate(g.degree(), &gens, &cfg.budget)?;
            return finish(
                g,
                closure,
                ClosureKind::Partition,
                m,
                SearchStats::default(),
            );
        }
        let coloring = orbits_on_partitions(g, m, &cfg.budget)?;
        close_over(g, &coloring, ClosureKind::Partition, m, cfg)
    })
}

fn cached(
    g: &PermGroup,
    kind: ClosureKind,
    m: usize,
    cfg: &Config,
    compute: impl FnOnce() -> Result<ClosureResult>,
) -> Result<ClosureResult> {
    let Some(dir) = &cfg.cache_dir else {
        return compute();
    };
    let cache = ClosureCache::new(dir.clone());
    if let Some(hit) = cache.load(g, kind, m, &cfg.budget) {
        return Ok(hit);
    }
    let result = compute()?;
    cache.store(g, &result)?;
    Ok(result)
}

/// The largest group with the same point orbits: the product of the
/// symmetric groups on the orbits of `g`.
fn point_closure(g: &PermGroup, budget: &Budget) -> Result<ClosureResult> {
    let mut gens = Vec::new();
    for orbit in g.point_orbits() {
        gens.extend(sym_on_points(g.degree(), &orbit)?);
    }
    let closure = PermGroup::generate(g.degree(), &gens, budget)?;
    finish(
        g,
        closure,
        ClosureKind::PointTuple,
        1,
        SearchStats::default(),
    )
}

fn close_over(
    g: &PermGroup,
    coloring: &OrbitColoring,
    kind: ClosureKind,
    m: usize,
    cfg: &Config,
) -> Result<ClosureResult> {
    let (elements, stats) = search::preservers(coloring, &cfg.budget, cfg.exec)?;
    let provisional = PermGroup::from_sorted_elements(g.degree(), elements, Vec::new());
    let gens = provisional.greedy_generators(&cfg.budget)?;
    let elements: Vec<Permutation> = provisional.elements().cloned().collect();
    let closure = PermGroup::from_sorted_elements(g.degree(), elements, gens);
    assert!(
        preserves(&closure, coloring),
        "closure generators must preserve the coloring"
    );
    finish(g, closure, kind, m, stats)
}

fn finish(
    g: &PermGroup,
    closure: PermGroup,
    kind: ClosureKind,
    m: usize,
    stats: SearchStats,
) -> Result<ClosureResult> {
    let extensive = g.generators().iter().all(|x| closure.contains(x));
    assert!(extensive, "closure must contain the input group");
    let stabilized = closure.order() == g.order();
    Ok(ClosureResult {
        closure,
        kind,
        m,
        stabilized,
        stats,
    })
}

/// Every generator of `h` maps each object to one of the same color.
pub fn preserves(h: &PermGroup, coloring: &OrbitColoring) -> bool {
    let space = coloring.space();
    let Ok(mut codec) = ObjectCodec::new(space) else {
        return false;
    };
    let size = space.code_space() as u64;
    h.generators().iter().all(|gen| {
        (0..size).all(|code| match coloring.color(code) {
            None => true,
            Some(c) => coloring.color(codec.image(code, gen)) == Some(c),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::product_action_wreath;
    use crate::group::{alt, cyclic, dihedral, sym};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn alt3_pair_closure_is_itself() {
        // Alt(3) is regular, so it has two orbits on distinct pairs
        let r = m_closure(&alt(3), 2, &cfg()).unwrap();
        assert_eq!(r.closure, alt(3));
        assert!(r.stabilized);
    }

    #[test]
    fn alt4_three_closure() {
        assert_eq!(m_closure(&alt(4), 3, &cfg()).unwrap().closure, alt(4));
        assert_eq!(m_closure(&alt(4), 2, &cfg()).unwrap().closure, sym(4));
    }

    #[test]
    fn trivial_degree_one() {
        for m in 1..=3 {
            let r = m_closure(&PermGroup::trivial(1), m, &cfg()).unwrap();
            assert_eq!(r.closure.order(), 1);
        }
    }

    #[test]
    fn displayed_counterexample_lhs() {
        let b = Budget::default();
        let g = product_action_wreath(&sym(2), &alt(3), &b).unwrap();
        let expected = product_action_wreath(&sym(2), &sym(3), &b).unwrap();
        let r = m_closure(&g, 2, &cfg()).unwrap();
        assert_eq!(r.closure, expected);
        assert_eq!(r.closure.order(), 48);
        assert!(!r.stabilized);
    }

    #[test]
    fn point_closure_is_product_of_syms() {
        let g = PermGroup::generate(
            5,
            &[Permutation::parse_cycles("(1 2 3)(4 5)", 5).unwrap()],
            &Budget::default(),
        )
        .unwrap();
        let r = m_closure(&g, 1, &cfg()).unwrap();
        assert_eq!(r.closure.order(), 12);
        // agrees with the search on the point coloring
        let c = orbits_on_tuples(&g, 1, &Budget::default()).unwrap();
        let (elements, _) = search::preservers(&c, &Budget::default(), cfg().exec).unwrap();
        assert_eq!(elements.len(), 12);
        assert!(elements.iter().all(|e| r.closure.contains(e)));
    }

    #[test]
    fn partition_closures_of_alt() {
        assert_eq!(
            partition_closure(&alt(4), 3, &cfg()).unwrap().closure,
            sym(4)
        );
        assert_eq!(
            partition_closure(&alt(4), 4, &cfg()).unwrap().closure,
            alt(4)
        );
        assert_eq!(
            partition_closure(&alt(3), 2, &cfg()).unwrap().closure,
            sym(3)
        );
        for g in [cyclic(4), dihedral(5), PermGroup::trivial(3)] {
            let n = g.degree();
            assert_eq!(partition_closure(&g, 1, &cfg()).unwrap().closure, sym(n));
        }
    }

    #[test]
    fn zero_arity_rejected() {
        assert!(m_closure(&sym(3), 0, &cfg()).is_err());
        assert!(partition_closure(&sym(3), 0, &cfg()).is_err());
    }

    #[test]
    fn element_budget_is_an_error() {
        let tight = Config {
            budget: Budget {
                max_elements: 10,
                ..Budget::default()
            },
            ..Config::default()
        };
        let err = m_closure(&alt(4), 2, &tight).unwrap_err();
        match err {
            Error::Budget { partial, .. } => assert!(partial.is_some()),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let b = Budget::default();
        let g = product_action_wreath(&sym(2), &alt(3), &b).unwrap();
        let seq = m_closure(&g, 2, &Config::sequential()).unwrap();
        let par = m_closure(&g, 2, &Config::default()).unwrap();
        assert_eq!(seq.closure, par.closure);
        assert_eq!(seq.to_json(false), par.to_json(false));
    }

    #[test]
    fn record_round_trip() {
        let r = m_closure(&dihedral(5), 2, &cfg()).unwrap();
        let json = r.to_json(false);
        let record: ClosureRecord = serde_json::from_str(&json).unwrap();
        let back = ClosureResult::from_record(&record, &Budget::default()).unwrap();
        assert_eq!(back.closure, r.closure);
        assert!(json
            .starts_with(r#"{"kind":"point_tuple_m","m":2,"degree":5,"order":10,"generators":["#));
        assert!(!json.contains("elapsed"));
    }

    #[test]
    fn closures_preserve_colorings() {
        let g = dihedral(6);
        let r = m_closure(&g, 2, &cfg()).unwrap();
        assert!(preserves(
            &r.closure,
            &orbits_on_tuples(&g, 2, &Budget::default()).unwrap()
        ));
        let r = partition_closure(&g, 3, &cfg()).unwrap();
        assert!(preserves(
            &r.closure,
            &orbits_on_partitions(&g, 3, &Budget::default()).unwrap()
        ));
    }
}
