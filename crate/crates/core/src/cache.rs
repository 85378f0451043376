//! On-disk cache of computed polynomials, keyed on `(n, k, tool_version)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::exact_poly::IntPoly;
use crate::gp_graph::GpParams;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_CACHE_DIR: &str = "./.ipgp-cache";
pub const CACHE_DIR_ENV: &str = "IPGP_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: usize,
    pub k: usize,
    pub coeffs: Vec<String>,
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, TOOL_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Cache {
            dir: dir.into(),
            version: version.to_string(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, params: GpParams) -> PathBuf {
        self.dir
            .join(format!("gp-n{}-k{}.json", params.n(), params.k()))
    }

    /// `None` on a miss, a stale version, or an unreadable entry.
    pub fn get(&self, params: GpParams) -> Option<IntPoly> {
        let text = fs::read_to_string(self.path_for(params)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.n != params.n() || entry.k != params.k() || entry.tool_version != self.version {
            return None;
        }
        IntPoly::from_decimal_strings(&entry.coeffs).ok()
    }

    /// Writes to a temporary file in the cache directory and renames it
    /// into place.
    pub fn put(&self, params: GpParams, poly: &IntPoly) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            n: params.n(),
            k: params.k(),
            coeffs: poly.to_decimal_strings(),
            tool_version: self.version.clone(),
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path_for(params)).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn get_or_compute<E>(
        &self,
        params: GpParams,
        compute: impl FnOnce(GpParams) -> Result<IntPoly, E>,
    ) -> Result<IntPoly, E> {
        if let Some(p) = self.get(params) {
            return Ok(p);
        }
        let p = compute(params)?;
        // a failed write only costs a recomputation later
        let _ = self.put(params, &p);
        Ok(p)
    }
}
