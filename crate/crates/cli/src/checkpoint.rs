//! JSON lines checkpoints for the exhaustive search: a header line naming
//! the search configuration, then one finished shard per line.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use anyhow::{bail, Context, Result};
use coinciding::search::{SearchConfig, ShardResult};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    search: SearchConfig,
}

pub struct Checkpoint {
    file: Mutex<File>,
}

impl Checkpoint {
    /// Starts a fresh checkpoint file.
    pub fn create(path: &Path, config: &SearchConfig) -> Result<Self> {
        let mut file =
            File::create(path).with_context(|| format!("creating {}", path.display()))?;
        writeln!(
            file,
            "{}",
            serde_json::to_string(&Header { search: *config })?
        )?;
        Ok(Self {
            file: Mutex::new(file),
        })
    }

    /// Loads the shards already recorded in `path` and reopens it for
    /// appending. A torn final line from an interrupted run is dropped.
    pub fn resume(path: &Path, config: &SearchConfig) -> Result<(Self, Vec<ShardResult>)> {
        let reader = BufReader::new(
            File::open(path).with_context(|| format!("opening {}", path.display()))?,
        );
        let mut lines = reader.lines();
        let header: Header = match lines.next() {
            Some(line) => serde_json::from_str(&line?).context("checkpoint header")?,
            None => bail!("{} is empty", path.display()),
        };
        if header.search != *config {
            bail!(
                "checkpoint was written for {:?}, not {:?}",
                header.search,
                config
            );
        }
        let keys: HashSet<Vec<u64>> = config.shards().into_iter().collect();
        let mut done = Vec::new();
        let lines: Vec<String> = lines.collect::<std::io::Result<_>>()?;
        for (i, line) in lines.iter().enumerate() {
            match serde_json::from_str::<ShardResult>(line) {
                Ok(shard) if keys.contains(&shard.key) => done.push(shard),
                Ok(shard) => bail!("shard {:?} does not belong to this search", shard.key),
                Err(_) if i + 1 == lines.len() => {}
                Err(e) => bail!("line {} of {}: {e}", i + 2, path.display()),
            }
        }
        let mut file = File::create(path)?;
        writeln!(file, "{}", serde_json::to_string(&header)?)?;
        for shard in &done {
            writeln!(file, "{}", serde_json::to_string(shard)?)?;
        }
        drop(file);
        let file = OpenOptions::new().append(true).open(path)?;
        Ok((
            Self {
                file: Mutex::new(file),
            },
            done,
        ))
    }

    pub fn record(&self, shard: &ShardResult) -> Result<()> {
        let line = serde_json::to_string(shard)?;
        let mut file = self.file.lock().expect("checkpoint lock");
        writeln!(file, "{line}")?;
        file.flush()?;
        Ok(())
    }
}
