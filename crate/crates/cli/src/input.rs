use std::io::Read;
use std::path::Path;

use powerdom::graph::{from_edge_list_text, from_graph6};
use powerdom::Graph;

use crate::{Failure, Format, InputArgs};

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

/// Edge lists start with a two-integer header; anything else is graph6.
fn guess_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.split_whitespace().count() == 2 => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph, Failure> {
    match format.unwrap_or_else(|| guess_format(text)) {
        Format::Edgelist => Ok(from_edge_list_text(text)?),
        Format::Graph6 => {
            let lines: Vec<&str> = text
                .lines()
                .map(str::trim)
                .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l))
                .filter(|l| !l.is_empty())
                .collect();
            match lines.as_slice() {
                [line] => Ok(from_graph6(line)?),
                [] => Err(Failure::input("input holds no graph")),
                _ => Err(Failure::input(format!(
                    "expected one graph, found {} lines",
                    lines.len()
                ))),
            }
        }
    }
}

pub fn load(args: &InputArgs) -> Result<Graph, Failure> {
    let text = read_text(&args.path)?;
    parse_graph(&text, args.format).map_err(|f| Failure {
        message: format!("{}: {}", args.path.display(), f.message),
        ..f
    })
}

pub fn load_path(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    parse_graph(&text, None).map_err(|f| Failure {
        message: format!("{}: {}", path.display(), f.message),
        ..f
    })
}
