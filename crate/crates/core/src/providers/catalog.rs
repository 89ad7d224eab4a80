//! Persistent store of provider results, one JSON grid file per entry.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format;
use crate::grid::SignedGrid;
use crate::spec::ArraySpec;

use super::{check_magic_rectangle, check_square_heffter, check_tight_heffter};

/// Environment variable naming the catalog directory.
pub const CATALOG_ENV: &str = "SMA_CATALOG_DIR";

/// Family and parameters of a stored array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogKey {
    MagicRectangle { m: usize, n: usize },
    TightHeffter { m: usize, n: usize },
    SquareHeffter { n: usize, k: usize },
}

impl CatalogKey {
    pub fn spec(&self) -> ArraySpec {
        match *self {
            CatalogKey::MagicRectangle { m, n } | CatalogKey::TightHeffter { m, n } => ArraySpec::tight(m, n),
            CatalogKey::SquareHeffter { n, k } => ArraySpec::square(n, k),
        }
    }

    /// Checks the family invariants; the error names the first violation.
    pub fn check(&self, grid: &SignedGrid) -> std::result::Result<(), String> {
        match *self {
            CatalogKey::MagicRectangle { m, n } => check_magic_rectangle(grid, m, n),
            CatalogKey::TightHeffter { m, n } => check_tight_heffter(grid, m, n),
            CatalogKey::SquareHeffter { n, k } => check_square_heffter(grid, n, k),
        }
    }

    fn file_name(&self) -> String {
        format!("{}.json", self.to_string().replace('/', "_"))
    }

    /// Guesses the family of a grid from its contents.
    pub fn infer(grid: &SignedGrid, spec: &ArraySpec) -> Option<CatalogKey> {
        let candidates = if spec.is_tight() {
            vec![CatalogKey::MagicRectangle { m: spec.m, n: spec.n }, CatalogKey::TightHeffter { m: spec.m, n: spec.n }]
        } else if spec.m == spec.n {
            vec![CatalogKey::SquareHeffter { n: spec.n, k: spec.s }]
        } else {
            vec![]
        };
        candidates.into_iter().find(|k| k.check(grid).is_ok())
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::MagicRectangle { m, n } => write!(f, "magic-rectangle/{m}x{n}"),
            CatalogKey::TightHeffter { m, n } => write!(f, "tight-heffter/{m}x{n}"),
            CatalogKey::SquareHeffter { n, k } => write!(f, "square-heffter/{n}-{k}"),
        }
    }
}

impl FromStr for CatalogKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad catalog key {s:?}"));
        let s_norm = s.replace('_', "/");
        let (family, params) = s_norm.split_once('/').ok_or_else(bad)?;
        let pair = |sep: char| -> Result<(usize, usize)> {
            let (a, b) = params.split_once(sep).ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        match family {
            "magic-rectangle" => pair('x').map(|(m, n)| CatalogKey::MagicRectangle { m, n }),
            "tight-heffter" => pair('x').map(|(m, n)| CatalogKey::TightHeffter { m, n }),
            "square-heffter" => pair('-').map(|(n, k)| CatalogKey::SquareHeffter { n, k }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    Searched,
    UserSupplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Builtin => "builtin",
            Provenance::Searched => "searched",
            Provenance::UserSupplied => "user-supplied",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "builtin" => Ok(Provenance::Builtin),
            "searched" => Ok(Provenance::Searched),
            "user-supplied" => Ok(Provenance::UserSupplied),
            _ => Err(Error::Parse(format!("unknown provenance {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: CatalogKey,
    pub grid: SignedGrid,
    pub provenance: Provenance,
    pub digest: String,
}

impl CatalogEntry {
    /// Verifies the grid against its family and computes its digest.
    pub fn new(key: CatalogKey, grid: SignedGrid, provenance: Provenance) -> Result<Self> {
        key.check(&grid).map_err(|reason| Error::Integrity { key: key.to_string(), reason })?;
        let mut grid = grid;
        grid.meta = Default::default();
        let digest = digest(&grid);
        Ok(CatalogEntry { key, grid, provenance, digest })
    }

    fn to_file(&self) -> String {
        let mut grid = self.grid.clone();
        grid.meta.method = Some(self.provenance.to_string());
        grid.meta.provider_key = Some(self.key.to_string());
        grid.meta.digest = Some(self.digest.clone());
        format::to_json(&grid, &self.key.spec())
    }
}

/// SHA-256 over the row-major cell list.
pub fn digest(grid: &SignedGrid) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("{}x{}\n", grid.rows(), grid.cols()));
    for ((i, j), v) in grid.entries() {
        hasher.update(format!("{i},{j},{v}\n"));
    }
    hex::encode(hasher.finalize())
}

const HEFFTER_3X4: [[i64; 4]; 3] = [[1, 2, 3, -6], [8, -12, -7, 11], [-9, 10, 4, -5]];

const HEFFTER_4_3: [[Option<i64>; 4]; 4] = [
    [Some(4), Some(8), None, Some(-12)],
    [Some(-9), Some(3), Some(6), None],
    [None, Some(-11), Some(1), Some(10)],
    [Some(5), None, Some(-7), Some(2)],
];

const MAGIC_3X7: [[i64; 7]; 3] = [[0, 19, 8, 13, 4, 9, 17], [18, 10, 2, 14, 15, 5, 6], [12, 1, 20, 3, 11, 16, 7]];

fn builtin_entries() -> Vec<CatalogEntry> {
    let dense = |rows: &[Vec<i64>]| SignedGrid::from_dense(rows).expect("literal");
    let heffter_3x4 = dense(&HEFFTER_3X4.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let magic_3x7 = dense(&MAGIC_3X7.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let heffter_4_3 =
        SignedGrid::from_rows(&HEFFTER_4_3.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("literal");
    vec![
        CatalogEntry::new(CatalogKey::TightHeffter { m: 3, n: 4 }, heffter_3x4, Provenance::Builtin),
        CatalogEntry::new(CatalogKey::SquareHeffter { n: 4, k: 3 }, heffter_4_3, Provenance::Builtin),
        CatalogEntry::new(CatalogKey::MagicRectangle { m: 3, n: 7 }, magic_3x7, Provenance::Builtin),
    ]
    .into_iter()
    .map(|e| e.expect("builtin seed verifies"))
    .collect()
}

/// Builtin seeds plus an optional directory of stored entries.
#[derive(Debug, Clone)]
pub struct Catalog {
    builtins: Vec<CatalogEntry>,
    dir: Option<PathBuf>,
}

/// What `put` did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PutOutcome {
    Stored,
    AlreadyPresent,
}

impl Catalog {
    /// Builtin seeds only; nothing is written.
    pub fn builtin() -> Self {
        Catalog { builtins: builtin_entries(), dir: None }
    }

    /// Builtins backed by a directory, created on first write.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        Catalog { builtins: builtin_entries(), dir: Some(dir.into()) }
    }

    /// Directory from the environment, defaulting to `./catalog`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CATALOG_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("catalog"));
        Self::with_dir(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn get(&self, key: &CatalogKey) -> Result<Option<CatalogEntry>> {
        if let Some(e) = self.builtins.iter().find(|e| e.key == *key) {
            return Ok(Some(e.clone()));
        }
        let Some(dir) = &self.dir else { return Ok(None) };
        let path = dir.join(key.file_name());
        if !path.exists() {
            return Ok(None);
        }
        read_entry(&path, Some(*key)).map(Some)
    }

    pub fn has_square_heffter(&self, n: usize, k: usize) -> bool {
        matches!(self.get(&CatalogKey::SquareHeffter { n, k }), Ok(Some(_)))
    }

    /// Stores a verified entry. Storing identical content twice is a no-op;
    /// different content under an existing key is refused.
    pub fn put(&self, entry: &CatalogEntry) -> Result<PutOutcome> {
        entry.key.check(&entry.grid).map_err(|reason| Error::Integrity { key: entry.key.to_string(), reason })?;
        if let Some(existing) = self.get(&entry.key)? {
            return if existing.digest == entry.digest {
                Ok(PutOutcome::AlreadyPresent)
            } else {
                Err(Error::Integrity {
                    key: entry.key.to_string(),
                    reason: "a different array is already stored under this key".into(),
                })
            };
        }
        let dir = self.dir.as_ref().ok_or_else(|| Error::Argument("catalog has no directory".into()))?;
        fs::create_dir_all(dir)?;
        let path = dir.join(entry.key.file_name());
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, entry.to_file())?;
        fs::rename(&tmp, &path)?;
        Ok(PutOutcome::Stored)
    }

    /// All entries, builtins first, then stored files in key order.
    /// Unreadable files are reported as errors in place.
    pub fn list(&self) -> Vec<std::result::Result<CatalogEntry, Error>> {
        let mut out: Vec<_> = self.builtins.iter().cloned().map(Ok).collect();
        for path in self.stored_files() {
            out.push(read_entry(&path, None));
        }
        out
    }

    /// Removes stored files that fail integrity checks or duplicate a builtin.
    /// Returns the removed file names.
    pub fn gc(&self) -> Result<Vec<String>> {
        let mut removed = Vec::new();
        for path in self.stored_files() {
            let drop = match read_entry(&path, None) {
                Err(_) => true,
                Ok(e) => self.builtins.iter().any(|b| b.key == e.key),
            };
            if drop {
                fs::remove_file(&path)?;
                removed.push(path.file_name().unwrap_or_default().to_string_lossy().into_owned());
            }
        }
        Ok(removed)
    }

    fn stored_files(&self) -> Vec<PathBuf> {
        let Some(dir) = &self.dir else { return vec![] };
        let Ok(read) = fs::read_dir(dir) else { return vec![] };
        let mut files: Vec<PathBuf> = read
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        files
    }
}

fn read_entry(path: &Path, expected: Option<CatalogKey>) -> Result<CatalogEntry> {
    let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
    let integrity = |reason: String| Error::Integrity { key: name.clone(), reason };
    let text = fs::read_to_string(path)?;
    let (grid, spec) = format::from_json(&text).map_err(|e| integrity(e.to_string()))?;
    let key: CatalogKey = match &grid.meta.provider_key {
        Some(k) => k.parse().map_err(|e: Error| integrity(e.to_string()))?,
        None => name.parse().map_err(|e: Error| integrity(e.to_string()))?,
    };
    if let Some(want) = expected {
        if key != want {
            return Err(integrity(format!("file holds {key}")));
        }
    }
    if spec != key.spec() {
        return Err(integrity(format!("spec {spec} does not match key")));
    }
    let provenance = grid
        .meta
        .method
        .as_deref()
        .map(str::parse)
        .transpose()
        .map_err(|e: Error| integrity(e.to_string()))?
        .unwrap_or(Provenance::UserSupplied);
    let stored_digest = grid.meta.digest.clone();
    let entry = CatalogEntry::new(key, grid, provenance).map_err(|e| integrity(e.to_string()))?;
    if let Some(d) = stored_digest {
        if d != entry.digest {
            return Err(integrity("digest mismatch".into()));
        }
    }
    Ok(entry)
}
