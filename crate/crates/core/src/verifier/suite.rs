use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::closures::{m_closure, partition_closure};
use crate::error::{Error, Result};
use crate::exec::Config;
use crate::group::NamedGroup;
use crate::groupspec::GroupSpec;

use super::report::{TheoremId, TheoremReport, Verdict};
use super::theorems::{verify_direct_product, verify_theorem1, verify_theorem2, verify_theorem3};

fn default_time_budget() -> f64 {
    120.0
}

/// A grid of instances: every pair `(K, L)` drawn from `groups` (or from
/// `groups` × `l_groups`), every `m` in the inclusive `m_range`, every
/// selected theorem, skipping instances whose product degree exceeds
/// `degree_cap`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub groups: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_groups: Option<Vec<GroupSpec>>,
    pub m_range: [usize; 2],
    pub degree_cap: usize,
    /// Per-instance wall-clock budget in seconds.
    #[serde(default = "default_time_budget")]
    pub time_budget_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremId>>,
}

/// Catalog groups of degree at most 3, `m ∈ {2, 3}`, product degree ≤ 9.
pub fn default_grid() -> GridSpec {
    let mut groups = Vec::new();
    for n in 1..=3 {
        groups.push(GroupSpec::named(NamedGroup::Trivial, n));
    }
    groups.push(GroupSpec::named(NamedGroup::Sym, 2));
    groups.push(GroupSpec::named(NamedGroup::Sym, 3));
    groups.push(GroupSpec::named(NamedGroup::Alt, 3));
    groups.push(GroupSpec::named(NamedGroup::Cyclic, 3));
    GridSpec {
        groups,
        l_groups: None,
        m_range: [2, 3],
        degree_cap: 9,
        time_budget_s: default_time_budget(),
        theorems: None,
    }
}

struct Task {
    theorem: TheoremId,
    k: GroupSpec,
    l: GroupSpec,
    m: usize,
    product_degree: u128,
}

impl GridSpec {
    fn tasks(&self) -> Result<Vec<Task>> {
        let [lo, hi] = self.m_range;
        if lo == 0 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "m_range [{lo}, {hi}] must satisfy 1 <= lo <= hi"
            )));
        }
        if !(self.time_budget_s.is_finite() && self.time_budget_s > 0.0) {
            return Err(Error::InvalidArgument(
                "time_budget_s must be positive".into(),
            ));
        }
        let theorems = self.theorems.as_deref().unwrap_or(&TheoremId::ALL);
        let ls = self.l_groups.as_ref().unwrap_or(&self.groups);
        let mut tasks = Vec::new();
        for k in &self.groups {
            for l in ls {
                let (n, d) = (k.degree() as u128, l.degree() as u32);
                for m in lo..=hi {
                    for &theorem in theorems {
                        let product_degree = match theorem {
                            TheoremId::DirectProduct => n * d as u128,
                            _ => n.checked_pow(d).unwrap_or(u128::MAX),
                        };
                        if product_degree <= self.degree_cap as u128 {
                            tasks.push(Task {
                                theorem,
                                k: k.clone(),
                                l: l.clone(),
                                m,
                                product_degree,
                            });
                        }
                    }
                }
            }
        }
        // stable: ties keep grid order
        tasks.sort_by_key(|t| t.product_degree);
        Ok(tasks)
    }
}

/// Runs every instance of the grid, cheapest first. Budget overruns become
/// `budget_exceeded` reports and the suite continues.
pub fn run_suite(grid: &GridSpec, cfg: &Config) -> Result<Vec<TheoremReport>> {
    let tasks = grid.tasks()?;
    let limit = Duration::from_secs_f64(grid.time_budget_s);
    let reports = cfg.exec.map(tasks, |task| {
        let mut local = cfg.clone();
        local.budget = local.budget.with_time_limit(limit);
        let verify = match task.theorem {
            TheoremId::Theorem1 => verify_theorem1,
            TheoremId::Theorem2 => verify_theorem2,
            TheoremId::Theorem3 => verify_theorem3,
            TheoremId::DirectProduct => verify_direct_product,
        };
        verify(&task.k, &task.l, task.m, &local)
    });
    reports.into_iter().collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub budget_exceeded: usize,
    /// `theorem2` reports in the exceptional case.
    pub exceptions: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[TheoremReport]) -> Self {
        let mut s = SuiteSummary {
            total: reports.len(),
            ..Default::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::BudgetExceeded => s.budget_exceeded += 1,
                _ if !r.passed => s.failed += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
                _ => s.passed += 1,
            }
            if r.exception == Some(true) {
                s.exceptions += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExploreHit {
    pub group: String,
    pub order: usize,
    pub partition_closure_order: usize,
}

/// Catalog groups with `L^(2) = L` and `L^[2] > L`. Entries that exceed the
/// budget are skipped.
pub fn scan_orbit_equivalent_overgroups(entries: &[CatalogEntry], cfg: &Config) -> Vec<ExploreHit> {
    let hits = cfg.exec.map(entries.to_vec(), |entry| {
        let g = &entry.group;
        let two = m_closure(g, 2, cfg).ok()?;
        if !two.stabilized {
            return None;
        }
        let part = partition_closure(g, 2, cfg).ok()?;
        (part.closure.order() > g.order()).then(|| ExploreHit {
            group: entry.spec.label(),
            order: g.order(),
            partition_closure_order: part.closure.order(),
        })
    });
    hits.into_iter().flatten().collect()
}
