use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::PermGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `(K↑L)^(m) = K^(m) ↑ L^[k]`, `k = min(k_m, d)`.
    Theorem1,
    /// `(K↑L)^(m) ≤ K^(m) ↑ L^(m)` unless `m = 2` and `K` is 2-transitive.
    Theorem2,
    /// `(K↑L)^(m) = K^(m) ↑ L` for `m ≥ 3`, `L` primitive and not
    /// alternating in its standard action.
    Theorem3,
    /// `(K×L)^(m) = K^(m) × L^(m)` on `Γ × Δ`.
    DirectProduct,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [
        TheoremId::Theorem1,
        TheoremId::Theorem2,
        TheoremId::Theorem3,
        TheoremId::DirectProduct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Theorem1 => "theorem1",
            TheoremId::Theorem2 => "theorem2",
            TheoremId::Theorem3 => "theorem3",
            TheoremId::DirectProduct => "direct_product",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "theorem1" => Ok(TheoremId::Theorem1),
            "2" | "theorem2" => Ok(TheoremId::Theorem2),
            "3" | "theorem3" => Ok(TheoremId::Theorem3),
            "direct" | "direct_product" | "direct-product" => Ok(TheoremId::DirectProduct),
            other => Err(Error::Parse(format!("unknown theorem {other:?}"))),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    LhsStrictlyContained,
    Mismatch,
    NotApplicable,
    BudgetExceeded,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::LhsStrictlyContained => "lhs_strictly_contained",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not_applicable",
            Verdict::BudgetExceeded => "budget_exceeded",
            Verdict::Error => "error",
        }
    }

    /// Compares element sets: equal, `lhs < rhs`, or neither.
    pub fn compare(lhs: &PermGroup, rhs: &PermGroup) -> (Verdict, Option<String>) {
        if lhs == rhs {
            return (Verdict::Equal, None);
        }
        match lhs.witness_outside(rhs) {
            None => (
                Verdict::LhsStrictlyContained,
                rhs.witness_outside(lhs).map(ToString::to_string),
            ),
            Some(w) => (Verdict::Mismatch, Some(w.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub k: String,
    pub l: String,
    pub m: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    /// Degree of the domain the left-hand side acts on.
    pub product_degree: usize,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// `|orb_m(Sym(n))|` by brute force, `n` the degree of `K`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sym_orbit_count: Option<usize>,
    /// Number of ordered partitions of an m-set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordered_partitions_of_m: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: Instance,
    pub quantities: Quantities,
    pub verdict: Verdict,
    pub passed: bool,
    /// `theorem2` only: `m = 2` and `K` is 2-transitive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_digest: Option<String>,
    /// An element on one side only, in 1-based cycle notation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl TheoremReport {
    pub(crate) fn new(theorem: TheoremId, instance: Instance) -> Self {
        TheoremReport {
            theorem,
            instance,
            quantities: Quantities::default(),
            verdict: Verdict::Error,
            passed: false,
            exception: None,
            lhs_digest: None,
            rhs_digest: None,
            witness: None,
            note: None,
            elapsed_ms: None,
        }
    }

    pub(crate) fn sides(&mut self, lhs: &PermGroup, rhs: &PermGroup) {
        self.quantities.lhs_order = Some(lhs.order());
        self.quantities.rhs_order = Some(rhs.order());
        self.lhs_digest = Some(lhs.digest());
        self.rhs_digest = Some(rhs.digest());
        let (verdict, witness) = Verdict::compare(lhs, rhs);
        self.verdict = verdict;
        self.witness = witness;
    }

    pub(crate) fn add_note(&mut self, note: impl Into<String>) {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
    }

    /// One JSON line; timing only when requested.
    pub fn to_json_line(&self, timings: bool) -> String {
        if timings {
            serde_json::to_string(self)
        } else {
            let mut copy = self.clone();
            copy.elapsed_ms = None;
            serde_json::to_string(&copy)
        }
        .expect("report serializes")
    }
}
