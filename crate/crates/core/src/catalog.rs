//! Append-only catalog of extremal records.
//!
//! One record per line, tab separated:
//! `n  h_g6  f_g6  value  exhaustive  witnesses  truncated`, where the flags are
//! `1`/`0` and witnesses are joined by `;`. The last line for a key wins.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::canon::canonical_graph6;
use crate::counting::CopyCount;
use crate::enumerate::ENUMERATION_LIMIT;
use crate::error::{Error, Result};
use crate::extremal::{generalized_turan, ExtremalRecord};
use crate::graph::Graph;

pub type CatalogKey = (usize, String, String);

pub fn format_record(rec: &ExtremalRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        rec.n,
        rec.h_g6,
        rec.f_g6,
        rec.value,
        u8::from(rec.exhaustive),
        rec.witnesses.join(";"),
        u8::from(rec.truncated)
    )
}

pub fn parse_record(line: &str, lineno: usize) -> Result<ExtremalRecord> {
    let bad = |reason: &str| Error::CatalogFormat {
        line: lineno,
        reason: reason.to_string(),
    };
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 6 && fields.len() != 7 {
        return Err(bad("expected 6 or 7 tab-separated fields"));
    }
    let flag = |s: &str, what: &str| match s {
        "1" => Ok(true),
        "0" => Ok(false),
        _ => Err(bad(&format!("{what} flag must be 0 or 1"))),
    };
    let n = fields[0].parse().map_err(|_| bad("bad vertex count"))?;
    let value = fields[3].parse().map_err(|_| bad("bad value"))?;
    for g6 in [fields[1], fields[2]] {
        crate::graph6::graph_from_graph6(g6).map_err(|e| bad(&e.to_string()))?;
    }
    let witnesses: Vec<String> = if fields[5].is_empty() {
        vec![]
    } else {
        fields[5].split(';').map(str::to_string).collect()
    };
    Ok(ExtremalRecord {
        n,
        h_g6: fields[1].to_string(),
        f_g6: fields[2].to_string(),
        value,
        exhaustive: flag(fields[4], "exhaustive")?,
        witnesses,
        truncated: match fields.get(6) {
            Some(s) => flag(s, "truncated")?,
            None => false,
        },
    })
}

#[derive(Debug)]
pub struct Catalog {
    path: PathBuf,
    index: HashMap<CatalogKey, ExtremalRecord>,
}

impl Catalog {
    /// Opens `path`, reading existing records. A missing file is an empty catalog.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut index = HashMap::new();
        match File::open(&path) {
            Ok(file) => {
                for (i, line) in BufReader::new(file).lines().enumerate() {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let rec = parse_record(&line, i + 1)?;
                    index.insert(rec.key(), rec);
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        Ok(Catalog { path, index })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Durably appends `rec`; it replaces any earlier record for its key.
    pub fn put(&mut self, rec: ExtremalRecord) -> Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{}", format_record(&rec))?;
        file.sync_data()?;
        self.index.insert(rec.key(), rec);
        Ok(())
    }

    pub fn get_key(&self, key: &CatalogKey) -> Option<&ExtremalRecord> {
        self.index.get(key)
    }

    pub fn get(&self, n: usize, h: &Graph, f: &Graph) -> Option<&ExtremalRecord> {
        self.get_key(&(n, canonical_graph6(h), canonical_graph6(f)))
    }

    /// Records for the pair `(h, f)`, sorted by `n`.
    pub fn records_for(&self, h: &Graph, f: &Graph) -> Vec<&ExtremalRecord> {
        let (hk, fk) = (canonical_graph6(h), canonical_graph6(f));
        let mut out: Vec<_> = self.index.values().filter(|r| r.h_g6 == hk && r.f_g6 == fk).collect();
        out.sort_by_key(|r| r.n);
        out
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }
}

/// Where exhaustive values of `ex(n, h, f)` come from.
pub trait ExtremalSource {
    /// The exact value, or `None` if this source does not know it.
    fn exact(&mut self, n: usize, h: &Graph, f: &Graph) -> Result<Option<CopyCount>>;
}

/// Looks values up only; non-exhaustive records are ignored.
impl ExtremalSource for Catalog {
    fn exact(&mut self, n: usize, h: &Graph, f: &Graph) -> Result<Option<CopyCount>> {
        Ok(self.get(n, h, f).filter(|r| r.exhaustive).map(|r| r.value))
    }
}

/// Computes missing values by enumeration (up to [`ENUMERATION_LIMIT`]),
/// storing them in the catalog when one is attached.
pub struct Computing<'a> {
    pub catalog: Option<&'a mut Catalog>,
}

impl ExtremalSource for Computing<'_> {
    fn exact(&mut self, n: usize, h: &Graph, f: &Graph) -> Result<Option<CopyCount>> {
        if let Some(cat) = self.catalog.as_deref_mut() {
            if let Some(v) = cat.exact(n, h, f)? {
                return Ok(Some(v));
            }
        }
        if n > ENUMERATION_LIMIT {
            return Ok(None);
        }
        let rec = generalized_turan(n, h, f)?;
        let value = rec.value;
        if let Some(cat) = self.catalog.as_deref_mut() {
            cat.put(rec)?;
        }
        Ok(Some(value))
    }
}
