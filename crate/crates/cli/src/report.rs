use std::path::PathBuf;

use anyhow::{bail, Result};
use coinciding::cube::MAX_UNBOUNDED_GENERATORS;
use coinciding::search::default_ceiling;
use coinciding::structure::MAX_CLASSIFY_SIZE;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Format;

/// Resource limits in force for a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ceilings {
    pub max_unbounded_generators: usize,
    pub max_classify_size: usize,
    /// `(size, largest max_element)` for the search.
    pub search_max_element: Vec<(usize, u64)>,
}

impl Default for Ceilings {
    fn default() -> Self {
        Self {
            max_unbounded_generators: MAX_UNBOUNDED_GENERATORS,
            max_classify_size: MAX_CLASSIFY_SIZE,
            search_max_element: [1, 2, 4, 8, 16].map(|k| (k, default_ceiling(k))).to_vec(),
        }
    }
}

/// Everything needed to reproduce a run; echoed into every JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    /// Arguments after the program name, verbatim.
    pub argv: Vec<String>,
    pub format: Format,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub ceilings: Ceilings,
}

/// The outcome of one command, renderable in each format.
pub struct Report {
    /// False when a checked property fails.
    pub ok: bool,
    pub result: Value,
    pub text: String,
    pub csv: Option<String>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    config: &'a RunConfig,
    ok: bool,
    result: &'a Value,
}

impl Report {
    pub fn new(ok: bool, result: Value, text: impl Into<String>) -> Self {
        Self {
            ok,
            result,
            text: text.into(),
            csv: None,
        }
    }

    pub fn render(&self, config: &RunConfig) -> Result<String> {
        Ok(match config.format {
            Format::Json => {
                let envelope = Envelope {
                    config,
                    ok: self.ok,
                    result: &self.result,
                };
                serde_json::to_string_pretty(&envelope)? + "\n"
            }
            Format::Text => {
                let mut text = self.text.clone();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                text
            }
            Format::Csv => match &self.csv {
                Some(csv) => csv.clone(),
                None => bail!("csv output is only available for `repfn`"),
            },
        })
    }
}
