//! On-disk cache for character tables and rewrite systems.
//!
//! Entries are validated on load; a corrupt entry is deleted and rebuilt.
//! Cache failures never change a verdict, they only cost time.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use hyperoct::characters::{install_character_table, is_character_table_loaded, character_table, CharacterTable};
use hyperoct::rings::engine::{install_rewrite_system, is_rewrite_system_loaded};
use hyperoct::rings::{rewrite_system, Flavor, RewriteSystem};
use hyperoct::signed::MAX_RANK;
use hyperoct::rings::generators::MAX_RING_RANK;
use hyperoct::Rational;
use num_traits::{One, Zero};
use serde_json::Value;

pub const CACHE_ENV: &str = "HYPEROCT_CACHE";

const FLAVORS: [Flavor; 2] = [Flavor::Graded, Flavor::Filtered];

#[derive(Debug, thiserror::Error)]
enum EntryError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Library(#[from] hyperoct::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    warnings: Vec<String>,
}

fn table_file(n: usize) -> String {
    format!("character_table_{n}.json")
}

fn rewrite_file(flavor: Flavor, rank: usize) -> String {
    format!("rewrite_{}_{rank}.json", flavor.name())
}

fn read_json(path: &Path) -> Result<Value, EntryError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn check_orthonormal(table: &CharacterTable) -> Result<(), EntryError> {
    let rows = table.rows();
    for (a, f) in rows {
        for (b, g) in rows {
            let want = if a == b { Rational::one() } else { Rational::zero() };
            if f.inner_product(g) != want {
                return Err(EntryError::Invalid(format!("rows {a} and {b} are not orthonormal")));
            }
        }
    }
    Ok(())
}

fn load_table(path: &Path, n: usize) -> Result<CharacterTable, EntryError> {
    let table = CharacterTable::from_json(&read_json(path)?)?;
    if table.rank() != n {
        return Err(EntryError::Invalid(format!("holds rank {}, expected {n}", table.rank())));
    }
    check_orthonormal(&table)?;
    Ok(table)
}

fn load_rewrite(path: &Path, flavor: Flavor, rank: usize) -> Result<RewriteSystem, EntryError> {
    let system = RewriteSystem::from_json(&read_json(path)?)?;
    if system.rank() != rank || system.flavor() != flavor {
        return Err(EntryError::Invalid(format!(
            "holds {} rank {}, expected {} rank {rank}",
            system.flavor().name(),
            system.rank(),
            flavor.name()
        )));
    }
    Ok(system)
}

fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(contents.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

impl Cache {
    /// The cache named by the environment, if any.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(|v| Self::new(PathBuf::from(v)))
    }

    pub fn new(dir: PathBuf) -> Self {
        Self {
            dir,
            warnings: Vec::new(),
        }
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    fn discard(&mut self, path: &Path, err: EntryError) {
        self.warnings
            .push(format!("discarding cache entry {}: {err}", path.display()));
        if let Err(e) = fs::remove_file(path) {
            self.warnings
                .push(format!("could not remove {}: {e}", path.display()));
        }
    }

    /// Installs every valid entry found in the directory.
    pub fn load(&mut self) {
        if !self.dir.is_dir() {
            return;
        }
        for n in 1..=MAX_RANK {
            let path = self.dir.join(table_file(n));
            if !path.exists() {
                continue;
            }
            match load_table(&path, n) {
                Ok(table) => install_character_table(table),
                Err(e) => self.discard(&path, e),
            }
        }
        for rank in 1..=MAX_RING_RANK {
            for flavor in FLAVORS {
                let path = self.dir.join(rewrite_file(flavor, rank));
                if !path.exists() {
                    continue;
                }
                match load_rewrite(&path, flavor, rank) {
                    Ok(system) => {
                        install_rewrite_system(system);
                    }
                    Err(e) => self.discard(&path, e),
                }
            }
        }
    }

    /// Writes every table built during the run that is not yet on disk.
    pub fn save(&mut self) {
        if let Err(e) = fs::create_dir_all(&self.dir) {
            self.warnings
                .push(format!("cache directory {} unusable: {e}", self.dir.display()));
            return;
        }
        let mut pending: Vec<(PathBuf, String)> = Vec::new();
        for n in 1..=MAX_RANK {
            let path = self.dir.join(table_file(n));
            if is_character_table_loaded(n) && !path.exists() {
                pending.push((path, character_table(n).to_json().to_string()));
            }
        }
        for rank in 1..=MAX_RING_RANK {
            for flavor in FLAVORS {
                let path = self.dir.join(rewrite_file(flavor, rank));
                if is_rewrite_system_loaded(rank, flavor) && !path.exists() {
                    match rewrite_system(rank, flavor) {
                        Ok(s) => pending.push((path, s.to_json().to_string())),
                        Err(e) => self.warnings.push(format!("rewrite system unavailable: {e}")),
                    }
                }
            }
        }
        for (path, contents) in pending {
            if let Err(e) = write_atomic(&path, &contents) {
                self.warnings
                    .push(format!("could not write {}: {e}", path.display()));
                return;
            }
        }
    }
}
