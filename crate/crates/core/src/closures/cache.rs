use std::fs;
use std::path::PathBuf;

use crate::error::Result;
use crate::exec::Budget;
use crate::group::PermGroup;

use super::{ClosureKind, ClosureRecord, ClosureResult};

/// Closure results on disk, one [`ClosureRecord`] JSON file per
/// `(group digest, kind, m)`.
#[derive(Clone, Debug)]
pub struct ClosureCache {
    dir: PathBuf,
}

impl ClosureCache {
    pub fn new(dir: PathBuf) -> Self {
        ClosureCache { dir }
    }

    pub fn path_for(&self, g: &PermGroup, kind: ClosureKind, m: usize) -> PathBuf {
        self.dir
            .join(format!("{}-{}-{m}.json", g.digest(), kind.as_str()))
    }

    /// `None` on a miss or an unreadable entry.
    pub fn load(
        &self,
        g: &PermGroup,
        kind: ClosureKind,
        m: usize,
        budget: &Budget,
    ) -> Option<ClosureResult> {
        let text = fs::read_to_string(self.path_for(g, kind, m)).ok()?;
        let record: ClosureRecord = serde_json::from_str(&text).ok()?;
        if record.kind != kind || record.m != m || record.degree != g.degree() {
            return None;
        }
        ClosureResult::from_record(&record, budget).ok()
    }

    pub fn store(&self, g: &PermGroup, result: &ClosureResult) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(g, result.kind, result.m);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, result.to_json(false))?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}
