use serde::Serialize;

use crate::error::Result;
use crate::exec::Config;
use crate::group::PermGroup;

use super::{m_closure, partition_closure, ClosureKind, ClosureRecord, ClosureResult};

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub kind: ClosureKind,
    /// Closures for `m = 1, 2, …` in order.
    pub results: Vec<ClosureResult>,
    /// First `m` whose closure equals the input group.
    pub stabilization_index: Option<usize>,
    /// A budget error stopped the chain early.
    pub truncated: bool,
    pub error: Option<String>,
}

#[derive(Serialize)]
struct ChainJson<'a> {
    kind: ClosureKind,
    closures: Vec<ClosureRecord>,
    stabilization_index: Option<usize>,
    truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: &'a Option<String>,
}

impl ChainReport {
    pub fn orders(&self) -> Vec<usize> {
        self.results.iter().map(|r| r.closure.order()).collect()
    }

    /// Each closure contains the next one.
    pub fn is_monotone(&self) -> bool {
        self.results
            .windows(2)
            .all(|w| w[1].closure.is_subgroup_of(&w[0].closure).unwrap_or(false))
    }

    pub fn to_json(&self, timings: bool) -> String {
        serde_json::to_string(&ChainJson {
            kind: self.kind,
            closures: self.results.iter().map(|r| r.record(timings)).collect(),
            stabilization_index: self.stabilization_index,
            truncated: self.truncated,
            error: &self.error,
        })
        .expect("chain serializes")
    }
}

/// `G^(1) ≥ G^(2) ≥ …` or `G^[1] ≥ G^[2] ≥ …` up to `max_m`. Budget errors
/// truncate the chain; other errors propagate.
pub fn closure_chain(
    g: &PermGroup,
    kind: ClosureKind,
    max_m: usize,
    cfg: &Config,
) -> Result<ChainReport> {
    let mut report = ChainReport {
        kind,
        results: Vec::new(),
        stabilization_index: None,
        truncated: false,
        error: None,
    };
    for m in 1..=max_m {
        let step = match kind {
            ClosureKind::PointTuple => m_closure(g, m, cfg),
            ClosureKind::Partition => partition_closure(g, m, cfg),
        };
        match step {
            Ok(r) => {
                if r.stabilized && report.stabilization_index.is_none() {
                    report.stabilization_index = Some(m);
                }
                report.results.push(r);
            }
            Err(e) if e.is_budget() => {
                report.truncated = true;
                report.error = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alt, cyclic, sym};

    #[test]
    fn alt3_point_chain() {
        let c = closure_chain(&alt(3), ClosureKind::PointTuple, 3, &Config::default()).unwrap();
        assert_eq!(c.orders(), vec![6, 3, 3]);
        assert_eq!(c.stabilization_index, Some(2));
        assert!(c.is_monotone());
    }

    #[test]
    fn alt4_partition_chain() {
        let c = closure_chain(&alt(4), ClosureKind::Partition, 5, &Config::default()).unwrap();
        assert_eq!(c.orders(), vec![24, 24, 24, 12, 12]);
        assert_eq!(c.stabilization_index, Some(4));
    }

    #[test]
    fn partition_chain_stabilizes_by_degree() {
        for g in [cyclic(5), sym(3), alt(5)] {
            let n = g.degree();
            let c = closure_chain(&g, ClosureKind::Partition, n, &Config::default()).unwrap();
            assert!(c.is_monotone());
            assert!(c.stabilization_index.is_some_and(|i| i <= n));
        }
    }

    #[test]
    fn budget_truncates() {
        let mut cfg = Config::default();
        cfg.budget.max_objects = 30;
        let c = closure_chain(&cyclic(5), ClosureKind::PointTuple, 4, &cfg).unwrap();
        assert!(c.truncated);
        assert_eq!(c.results.len(), 2);
        assert!(c.to_json(false).contains("\"truncated\":true"));
    }
}
