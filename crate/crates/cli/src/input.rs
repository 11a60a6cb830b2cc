use std::fs;
use std::path::Path;

use clap::ValueEnum;
use spectral_cycles::{parse_alist, parse_edgelist, BipartiteGraph};

use crate::failure::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Alist,
    Edgelist,
}

impl InputFormat {
    /// `.alist` is alist; `.el`, `.edges` and `.edgelist` are edge lists.
    pub fn from_extension(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "alist" => Some(InputFormat::Alist),
            "el" | "edges" | "edgelist" => Some(InputFormat::Edgelist),
            _ => None,
        }
    }

    /// Edge lists start with the word `bipartite`; anything else is alist.
    pub fn sniff(text: &str) -> Self {
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .find(|l| !l.is_empty());
        match first {
            Some(l) if l.starts_with("bipartite") => InputFormat::Edgelist,
            _ => InputFormat::Alist,
        }
    }
}

pub fn load(path: &Path, format: Option<InputFormat>) -> Result<BipartiteGraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let format = format
        .or_else(|| InputFormat::from_extension(path))
        .unwrap_or_else(|| InputFormat::sniff(&text));
    let parsed = match format {
        InputFormat::Alist => parse_alist(&text),
        InputFormat::Edgelist => parse_edgelist(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}
