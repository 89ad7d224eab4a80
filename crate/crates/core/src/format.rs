//! JSON and text grid files.
//!
//! JSON: `{"m","n","s","t","cells":[{"r","c","v"}],"meta":{"method","provider_key"}}`
//! with 1-based indices. Text: a `# m n s t` header, then one row per line,
//! whitespace-separated, `.` for an empty cell.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridMeta, SignedGrid};
use crate::spec::ArraySpec;

#[derive(Debug, Serialize, Deserialize)]
struct CellRecord {
    r: usize,
    c: usize,
    v: i64,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct MetaRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provider_key: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    digest: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GridFile {
    m: usize,
    n: usize,
    s: usize,
    t: usize,
    cells: Vec<CellRecord>,
    #[serde(default)]
    meta: MetaRecord,
}

pub fn to_json(grid: &SignedGrid, spec: &ArraySpec) -> String {
    let file = GridFile {
        m: spec.m,
        n: spec.n,
        s: spec.s,
        t: spec.t,
        cells: grid.entries().map(|((i, j), v)| CellRecord { r: i + 1, c: j + 1, v }).collect(),
        meta: MetaRecord {
            method: grid.meta.method.clone(),
            provider_key: grid.meta.provider_key.clone(),
            digest: grid.meta.digest.clone(),
        },
    };
    let mut out = serde_json::to_string_pretty(&file).expect("grid serializes");
    out.push('\n');
    out
}

pub fn from_json(input: &str) -> Result<(SignedGrid, ArraySpec)> {
    let file: GridFile = serde_json::from_str(input).map_err(|e| Error::Parse(format!("grid json: {e}")))?;
    let spec = ArraySpec { m: file.m, n: file.n, s: file.s, t: file.t };
    let mut grid = SignedGrid::new(file.m, file.n);
    for cell in &file.cells {
        if cell.r == 0 || cell.c == 0 || cell.r > file.m || cell.c > file.n {
            return Err(Error::Parse(format!("cell ({},{}) out of range", cell.r, cell.c)));
        }
        grid.place(cell.r - 1, cell.c - 1, cell.v)
            .map_err(|_| Error::Parse(format!("duplicate cell ({},{})", cell.r, cell.c)))?;
    }
    grid.meta = GridMeta { method: file.meta.method, provider_key: file.meta.provider_key, digest: file.meta.digest };
    Ok((grid, spec))
}

/// Rows only, fixed-width columns.
pub fn to_text_body(grid: &SignedGrid) -> String {
    let width = grid.values().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in grid.to_rows() {
        let line: Vec<String> = row
            .iter()
            .map(|c| {
                let s = c.map_or_else(|| ".".to_string(), |v| v.to_string());
                format!("{s:>width$}")
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_text(grid: &SignedGrid, spec: &ArraySpec) -> String {
    format!("# {} {} {} {}\n{}", spec.m, spec.n, spec.s, spec.t, to_text_body(grid))
}

pub fn from_text(input: &str) -> Result<(SignedGrid, ArraySpec)> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let header = header.trim().strip_prefix('#').ok_or_else(|| Error::Parse("missing '# m n s t' header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|w| w.parse().map_err(|_| Error::Parse(format!("bad header field {w:?}"))))
        .collect::<Result<_>>()?;
    let [m, n, s, t] = dims[..] else {
        return Err(Error::Parse("header needs four fields".into()));
    };
    let mut rows = Vec::with_capacity(m);
    for line in lines {
        let row: Vec<Option<i64>> = line
            .split_whitespace()
            .map(|w| match w {
                "." => Ok(None),
                _ => w.parse().map(Some).map_err(|_| Error::Parse(format!("bad cell {w:?}"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("row {} has {} cells, want {n}", rows.len() + 1, row.len())));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(Error::Parse(format!("{} rows, want {m}", rows.len())));
    }
    let grid = if m == 0 { SignedGrid::new(0, n) } else { SignedGrid::from_rows(&rows)? };
    Ok((grid, ArraySpec { m, n, s, t }))
}

/// Parses either format, choosing by the first non-blank character.
pub fn parse_grid(input: &str) -> Result<(SignedGrid, ArraySpec)> {
    match input.trim_start().chars().next() {
        Some('{') => from_json(input),
        Some('#') => from_text(input),
        _ => Err(Error::Parse("unrecognized grid format".into())),
    }
}
