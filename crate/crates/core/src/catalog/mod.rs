//! Batch work over graph collections: ingesting graph6 catalogs with
//! resumable results, grouping by polynomial, uniqueness and unimodality
//! audits, and the exhaustive property suites.

mod suite;
mod uniqueness;

pub use suite::{catalog_suite, labeled_suite, CheckResult, SuiteReport};
pub use uniqueness::{
    group_by_polynomial, k1_k2_uniqueness_check, nonuniqueness_families, uniqueness_report,
    ExtensionReport, NonuniqueFamily, PolyClass, UniquenessReport,
};

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{pd_polynomial, Method};
use crate::error::{Error, Result};
use crate::graph::{from_graph6, to_graph6, Graph};
use crate::polynomial::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryFlags {
    pub connected: bool,
    pub isolate_count: usize,
    pub gamma_p: usize,
    pub unimodal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub key: String,
    pub n: usize,
    pub poly: IntPolynomial,
    pub flags: EntryFlags,
}

impl CatalogEntry {
    pub fn new(g: &Graph, poly: IntPolynomial) -> Self {
        CatalogEntry {
            key: to_graph6(g),
            n: g.order(),
            flags: EntryFlags {
                connected: g.is_connected(),
                isolate_count: g.isolates().len(),
                gamma_p: poly.lowest_power().unwrap_or(0),
                unimodal: poly.is_unimodal(),
            },
            poly,
        }
    }

    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(Self::new(g, pd_polynomial(g, Method::Auto)?))
    }

    pub fn graph(&self) -> Graph {
        from_graph6(&self.key).expect("keys are produced by the encoder")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineError {
    /// 1-based line number in the input file.
    pub line: usize,
    pub text: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IngestOutcome {
    pub entries: Vec<CatalogEntry>,
    pub errors: Vec<LineError>,
    /// Entries whose polynomial came from the results file.
    pub reused: usize,
}

#[derive(Default)]
pub struct IngestOptions<'a> {
    /// Append-only JSON-lines file of `{"g6": .., "pd": [..]}` records.
    pub results: Option<&'a Path>,
    /// Called with `(done, total)` after each batch.
    pub progress: Option<&'a (dyn Fn(usize, usize) + Sync)>,
}

/// `(line, key, (polynomial, reused))` for one parsed graph.
type Computed = (usize, String, Result<(IntPolynomial, bool)>);

#[derive(Serialize, Deserialize)]
struct ResultRecord {
    g6: String,
    pd: IntPolynomial,
}

/// Splits catalog text into parsed graphs and per-line errors. Blank lines
/// are skipped.
pub fn parse_catalog(text: &str) -> (Vec<(usize, Graph)>, Vec<LineError>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        match from_graph6(t) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => errors.push(LineError {
                line: i + 1,
                text: t.to_string(),
                message: e.to_string(),
            }),
        }
    }
    (graphs, errors)
}

fn load_results(path: &Path) -> Result<HashMap<String, IntPolynomial>> {
    let mut known = HashMap::new();
    let Ok(file) = File::open(path) else {
        return Ok(known);
    };
    for line in BufReader::new(file).lines() {
        // A torn final record from an interrupted run is simply recomputed.
        if let Ok(rec) = serde_json::from_str::<ResultRecord>(&line?) {
            known.insert(rec.g6, rec.pd);
        }
    }
    Ok(known)
}

fn open_for_append(path: &Path) -> Result<File> {
    let mut file = OpenOptions::new()
        .create(true)
        .read(true)
        .append(true)
        .open(path)?;
    let len = file.metadata()?.len();
    if len > 0 {
        let mut last = [0u8; 1];
        file.seek(SeekFrom::Start(len - 1))?;
        file.read_exact(&mut last)?;
        if last[0] != b'\n' {
            file.write_all(b"\n")?;
        }
    }
    Ok(file)
}

const BATCH: usize = 4096;

/// Reads a graph6 catalog and computes every polynomial. Bad lines are
/// collected and skipped; it is an error only if no line is usable.
pub fn ingest(path: &Path, opts: &IngestOptions) -> Result<IngestOutcome> {
    let text = std::fs::read_to_string(path)?;
    ingest_text(&text, opts)
}

pub fn ingest_text(text: &str, opts: &IngestOptions) -> Result<IngestOutcome> {
    let (graphs, mut errors) = parse_catalog(text);
    if graphs.is_empty() {
        return Err(Error::Ingest(if errors.is_empty() {
            "no graphs in input".into()
        } else {
            format!(
                "all {} lines are malformed; first: line {}: {}",
                errors.len(),
                errors[0].line,
                errors[0].message
            )
        }));
    }
    let known = match opts.results {
        Some(p) => load_results(p)?,
        None => HashMap::new(),
    };
    let mut writer = match opts.results {
        Some(p) => Some(open_for_append(p)?),
        None => None,
    };
    let total = graphs.len();
    let mut entries = Vec::with_capacity(total);
    let mut reused = 0;
    for batch in graphs.chunks(BATCH) {
        let computed: Vec<Computed> = batch
            .par_iter()
            .map(|(line, g)| {
                let key = to_graph6(g);
                let result = match known.get(&key) {
                    Some(p) => Ok((p.clone(), true)),
                    None => pd_polynomial(g, Method::Auto).map(|p| (p, false)),
                };
                (*line, key, result)
            })
            .collect();
        for ((line, key, result), (_, g)) in computed.into_iter().zip(batch) {
            match result {
                Ok((poly, from_cache)) => {
                    if from_cache {
                        reused += 1;
                    } else if let Some(w) = writer.as_mut() {
                        let rec = ResultRecord {
                            g6: key.clone(),
                            pd: poly.clone(),
                        };
                        writeln!(w, "{}", serde_json::to_string(&rec)?)?;
                    }
                    entries.push(CatalogEntry::new(g, poly));
                }
                Err(e) => errors.push(LineError {
                    line,
                    text: key,
                    message: e.to_string(),
                }),
            }
        }
        if let Some(w) = writer.as_mut() {
            w.flush()?;
        }
        if let Some(progress) = opts.progress {
            progress(entries.len() + errors.len(), total);
        }
    }
    errors.sort_by_key(|e| e.line);
    Ok(IngestOutcome {
        entries,
        errors,
        reused,
    })
}

/// Every labeled graph on `n ≤ 7` vertices, by counting through edge masks
/// (bit `k` is the `k`-th pair in the order (0,1), (0,2), (1,2), (0,3), …).
pub fn generate_all_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::TooLarge {
            n,
            cap: 7,
            what: "labeled graph generation",
        });
    }
    if n == 0 {
        return Err(Error::Domain("graph order must be at least 1".into()));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Graph::from_adjacency(adj).expect("mask gives a simple graph")
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct UnimodalityViolation {
    pub key: String,
    pub poly: IntPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnimodalityAudit {
    pub checked: usize,
    pub violations: Vec<UnimodalityViolation>,
}

/// Reports every non-unimodal polynomial. Nothing is asserted.
pub fn unimodality_audit<'a>(
    items: impl IntoIterator<Item = (&'a str, &'a IntPolynomial)>,
) -> UnimodalityAudit {
    let mut checked = 0;
    let mut violations = Vec::new();
    for (key, poly) in items {
        checked += 1;
        if !poly.is_unimodal() {
            violations.push(UnimodalityViolation {
                key: key.to_string(),
                poly: poly.clone(),
            });
        }
    }
    UnimodalityAudit {
        checked,
        violations,
    }
}

pub fn unimodality_audit_entries(entries: &[CatalogEntry]) -> UnimodalityAudit {
    unimodality_audit(entries.iter().map(|e| (e.key.as_str(), &e.poly)))
}

/// CSV with columns `graph6, n, gamma_p, c0..cN, unimodal, class_id`, where
/// `class_id` numbers the distinct polynomials in order of first appearance.
pub fn write_csv<W: Write>(entries: &[CatalogEntry], out: W) -> Result<()> {
    let width = entries.iter().map(|e| e.n + 1).max().unwrap_or(1);
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["graph6".to_string(), "n".into(), "gamma_p".into()];
    header.extend((0..width).map(|i| format!("c{i}")));
    header.extend(["unimodal".to_string(), "class_id".into()]);
    w.write_record(&header).map_err(csv_err)?;
    let mut ids: HashMap<&IntPolynomial, usize> = HashMap::new();
    for e in entries {
        let next = ids.len();
        let id = *ids.entry(&e.poly).or_insert(next);
        let mut row = vec![e.key.clone(), e.n.to_string(), e.flags.gamma_p.to_string()];
        row.extend((0..width).map(|i| e.poly.coeff(i).to_string()));
        row.extend([e.flags.unimodal.to_string(), id.to_string()]);
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
