//! Append-only JSON-lines cache of oracle results, keyed by `(n, family)`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use turan_core::{ExtremalRecord, ForbiddenFamily};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cache {0} is locked by another writer")]
    Busy(PathBuf),
}

/// A line that could not be parsed; it is skipped on load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorruptLine {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for CorruptLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cache line {}: {}", self.line, self.message)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    n: usize,
    family: String,
    record: ExtremalRecord,
}

type Key = (usize, String);

pub struct ResultCache {
    path: PathBuf,
    entries: HashMap<Key, ExtremalRecord>,
    corrupt: Vec<CorruptLine>,
    writer: Option<File>,
}

impl ResultCache {
    /// Loads every readable line of `path`. A missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, CacheError> {
        let path = path.as_ref().to_path_buf();
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };
        let mut entries = HashMap::new();
        let mut corrupt = Vec::new();
        match File::open(&path) {
            Ok(file) => {
                for (i, line) in BufReader::new(file).lines().enumerate() {
                    let line = line.map_err(io_err)?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match parse_line(&line) {
                        Ok((key, record)) => {
                            entries.entry(key).or_insert(record);
                        }
                        Err(message) => corrupt.push(CorruptLine { line: i + 1, message }),
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(io_err(e)),
        }
        Ok(ResultCache {
            path,
            entries,
            corrupt,
            writer: None,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn corrupt_lines(&self) -> &[CorruptLine] {
        &self.corrupt
    }

    pub fn lookup(&self, n: usize, family: &ForbiddenFamily) -> Option<&ExtremalRecord> {
        self.entries.get(&(n, family.to_string()))
    }

    /// Appends one line and makes the record visible to [`lookup`](Self::lookup).
    /// The first append takes an exclusive lock on the file for the lifetime of
    /// this cache; a second writer gets [`CacheError::Busy`].
    pub fn append(&mut self, record: &ExtremalRecord) -> Result<(), CacheError> {
        let line = CacheLine {
            n: record.n,
            family: record.family.to_string(),
            record: record.clone(),
        };
        let mut text = serde_json::to_string(&line).expect("record serializes");
        text.push('\n');
        let path = self.path.clone();
        let io_err = |source| CacheError::Io { path: path.clone(), source };
        if self.writer.is_none() {
            self.writer = Some(self.open_writer()?);
        }
        let w = self.writer.as_mut().expect("writer just opened");
        w.write_all(text.as_bytes()).map_err(io_err)?;
        w.flush().map_err(io_err)?;
        self.entries.entry((line.n, line.family)).or_insert(line.record);
        Ok(())
    }

    fn open_writer(&self) -> Result<File, CacheError> {
        let io_err = |source| CacheError::Io {
            path: self.path.clone(),
            source,
        };
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&self.path)
            .map_err(io_err)?;
        match file.try_lock() {
            Ok(()) => {}
            Err(std::fs::TryLockError::WouldBlock) => return Err(CacheError::Busy(self.path.clone())),
            Err(std::fs::TryLockError::Error(e)) => return Err(io_err(e)),
        }
        // A torn final line must not swallow the next record.
        let len = file.metadata().map_err(io_err)?.len();
        if len > 0 {
            let mut last = [0u8];
            file.seek(SeekFrom::Start(len - 1)).map_err(io_err)?;
            file.read_exact(&mut last).map_err(io_err)?;
            if last[0] != b'\n' {
                file.write_all(b"\n").map_err(io_err)?;
            }
        }
        Ok(file)
    }
}

fn parse_line(line: &str) -> Result<(Key, ExtremalRecord), String> {
    let parsed: CacheLine = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let family: ForbiddenFamily = parsed.family.parse().map_err(|e| format!("bad family key: {e}"))?;
    if parsed.n != parsed.record.n || family != parsed.record.family {
        return Err("key does not match the stored record".into());
    }
    Ok(((parsed.n, family.to_string()), parsed.record))
}
