use std::collections::BTreeMap;
use std::path::Path;

use powerdom::catalog::{
    catalog_suite, ingest_text, k1_k2_uniqueness_check, labeled_suite, unimodality_audit_entries,
    uniqueness_report, write_csv, CatalogEntry, IngestOptions,
};
use powerdom::closed_forms::{
    check_gadget, corona_poly, disjoint_union_poly, dominating_vertex_poly, formula_polynomial,
    identification_poly, join_poly,
};
use powerdom::counting::{
    dom_polynomial, pd_polynomial, pd_tail_coefficients, zf_polynomial, Method,
};
use powerdom::graph::{to_graph6, Family};
use powerdom::propagation::{check_ip_bound, enumerate_forts, fort_neighborhood_family};
use powerdom::roots::{analyze_graph, classify_by_distinct_roots, find_roots_partial, DEFAULT_TOL};
use powerdom::threshold::threshold_pd_polynomial_any;
use powerdom::{Graph, IntPolynomial};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{load, load_path, read_text};
use crate::{Audit, CatalogArgs, DecomposeArgs, Failure, InputArgs, MethodArg, Op, Which};

const SCHEMA: u32 = 1;
const VERIFY_AUTO_MAX: usize = 12;

fn emit(mut value: Value) {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    println!("{value}");
}

pub fn compute(input: &InputArgs, method: MethodArg, which: Which) -> Result<(), Failure> {
    let g = load(input)?;
    let mut out = json!({ "n": g.order() });
    if matches!(which, Which::Pd | Which::All) {
        let pd = match method {
            MethodArg::Formula => {
                let run = formula_polynomial(&g)?;
                out["enumerated_pieces"] = json!(run.enumerated_pieces);
                run.polynomial
            }
            MethodArg::Auto => pd_polynomial(&g, Method::Auto)?,
            MethodArg::Lattice => pd_polynomial(&g, Method::Lattice)?,
            MethodArg::Plain => pd_polynomial(&g, Method::Plain)?,
        };
        out["pd"] = json!(pd);
    }
    if matches!(which, Which::Zf | Which::All) {
        out["zf"] = json!(zf_polynomial(&g)?);
    }
    if matches!(which, Which::Dom | Which::All) {
        out["dom"] = json!(dom_polynomial(&g)?);
    }
    emit(out);
    Ok(())
}

pub fn tail(input: &InputArgs, kmax: usize) -> Result<(), Failure> {
    let g = load(input)?;
    let n = g.order();
    let coefficients: Vec<Value> = pd_tail_coefficients(&g, kmax)?
        .into_iter()
        .map(|(k, c)| json!({ "k": n - k, "index": k, "count": c.to_string() }))
        .collect();
    emit(json!({ "n": n, "kmax": kmax, "coefficients": coefficients }));
    Ok(())
}

pub fn roots(input: &InputArgs, tol: f64) -> Result<(), Failure> {
    let g = load(input)?;
    let report = analyze_graph(&g, tol)?;
    if !report.residuals_ok {
        return Err(Failure::numeric("root residuals exceed the tolerance"));
    }
    let mut out = json!(report);
    out["n"] = json!(g.order());
    out["pd"] = json!(pd_polynomial(&g, Method::Auto)?);
    emit(out);
    Ok(())
}

pub fn threshold(bits: &str) -> Result<(), Failure> {
    let run = threshold_pd_polynomial_any(bits)?;
    let n = bits.trim().len();
    // Block partition of the string as given: (symbol, length) per run.
    let mut blocks: Vec<(u8, usize)> = Vec::new();
    for c in bits.trim().bytes() {
        let s = c - b'0';
        match blocks.last_mut() {
            Some((last, len)) if *last == s => *len += 1,
            _ => blocks.push((s, 1)),
        }
    }
    let intermediates: Vec<Value> = run
        .intermediates
        .iter()
        .map(|(order, p)| json!({ "order": order, "pd": p }))
        .collect();
    emit(json!({
        "bits": bits.trim(),
        "n": n,
        "pd": run.polynomial,
        "blocks": blocks,
        "ops": run.ops,
        "intermediates": intermediates,
    }));
    Ok(())
}

pub fn forts(input: &InputArgs, minimal: bool, ip_bound: bool) -> Result<(), Failure> {
    let g = load(input)?;
    let forts = enumerate_forts(&g, minimal)?;
    let neighborhoods = fort_neighborhood_family(&g)?;
    let mut out = json!({
        "n": g.order(),
        "minimal": minimal,
        "forts": forts,
        "fort_count": forts.len(),
        "neighborhoods": neighborhoods,
    });
    if ip_bound {
        out["ip_bound"] = json!(check_ip_bound(&g)?);
    }
    emit(out);
    Ok(())
}

fn parse_gadget(spec: &str) -> Result<(Graph, usize), Failure> {
    let (path, root) = spec
        .rsplit_once(':')
        .ok_or_else(|| Failure::input(format!("gadget {spec:?} is not FILE:ROOT")))?;
    let root: usize = root
        .parse()
        .map_err(|_| Failure::input(format!("gadget {spec:?}: bad root {root:?}")))?;
    Ok((load_path(Path::new(path))?, root))
}

fn second_operand(args: &DecomposeArgs) -> Result<Graph, Failure> {
    match &args.with {
        Some(path) => load_path(path),
        None => Err(Failure::input("this operation needs --with FILE")),
    }
}

/// Polynomial of `h ∘ g2`. Complete `g2` has a closed form; otherwise each
/// copy of `g2` plus its attachment vertex is a gadget, used when it meets
/// the identification hypotheses.
fn corona_formula(h: &Graph, g2: &Graph) -> Result<(IntPolynomial, &'static str), Failure> {
    let k = g2.order();
    if k > 1 && g2.edge_count() == k * (k - 1) / 2 {
        return Ok((corona_poly(h, k)?, "corona_closed_form"));
    }
    let gadget = g2.with_dominating_vertex()?;
    if check_gadget(&gadget, k).is_ok() {
        let gadgets: Vec<(Graph, usize)> = (0..h.order()).map(|_| (gadget.clone(), k)).collect();
        return Ok((identification_poly(h, &gadgets)?, "identification"));
    }
    Ok((pd_polynomial(&h.corona(g2)?, Method::Auto)?, "enumeration"))
}

pub fn decompose(args: &DecomposeArgs) -> Result<(), Failure> {
    let g = load(&args.input)?;
    let (composed, poly, via) = match args.op {
        Op::Union => {
            let h = second_operand(args)?;
            let p = disjoint_union_poly(
                &pd_polynomial(&g, Method::Auto)?,
                &pd_polynomial(&h, Method::Auto)?,
            )?;
            (g.disjoint_union(&h)?, p, "product")
        }
        Op::Join => {
            let h = second_operand(args)?;
            (g.join(&h)?, join_poly(&g, &h)?, "join")
        }
        Op::Corona => {
            let h = second_operand(args)?;
            let composed = g.corona(&h)?;
            let (p, via) = corona_formula(&g, &h)?;
            (composed, p, via)
        }
        Op::DominatingVertex => (
            g.with_dominating_vertex()?,
            dominating_vertex_poly(&g)?,
            "join",
        ),
        Op::Identify => {
            let gadgets = args
                .gadgets
                .iter()
                .map(|s| parse_gadget(s))
                .collect::<Result<Vec<_>, _>>()?;
            (
                g.identify(&gadgets)?,
                identification_poly(&g, &gadgets)?,
                "identification",
            )
        }
    };
    let n = composed.order();
    let verify = if args.verify {
        true
    } else if args.no_verify {
        false
    } else {
        n <= VERIFY_AUTO_MAX
    };
    let verified = if verify {
        let brute = pd_polynomial(&composed, Method::Auto)?;
        if brute != poly {
            return Err(Failure::numeric(format!(
                "formula {poly} disagrees with enumeration {brute}"
            )));
        }
        Some(true)
    } else {
        None
    };
    emit(json!({
        "n": n,
        "graph6": to_graph6(&composed),
        "via": via,
        "pd": poly,
        "verified": verified,
    }));
    Ok(())
}

pub fn gen(family: &str, params: &[usize]) -> Result<(), Failure> {
    let g = Family::parse(family, params)?.build()?;
    println!("{}", to_graph6(&g));
    Ok(())
}

fn roots_audit(entries: &[CatalogEntry]) -> (Value, usize) {
    let results: Vec<Result<(String, usize, bool), String>> = entries
        .par_iter()
        .map(|e| {
            let report = find_roots_partial(&e.poly, DEFAULT_TOL)
                .map_err(|err| format!("{}: {err}", e.key))?;
            if !report.converged || !report.residuals_ok {
                return Err(format!("{}: root finder did not converge", e.key));
            }
            let class = classify_by_distinct_roots(&e.graph()).class;
            let consistent = match class.expected_distinct() {
                Some(d) => report.distinct_count == d,
                None => report.distinct_count >= 4,
            };
            Ok((
                class.as_str().to_string(),
                report.distinct_count,
                consistent,
            ))
        })
        .collect();
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    let mut distinct: BTreeMap<usize, usize> = BTreeMap::new();
    let mut inconsistent = Vec::new();
    let mut failures = Vec::new();
    for (e, r) in entries.iter().zip(results) {
        match r {
            Ok((class, d, ok)) => {
                *classes.entry(class).or_default() += 1;
                *distinct.entry(d).or_default() += 1;
                if !ok {
                    inconsistent.push(e.key.clone());
                }
            }
            Err(msg) => failures.push(msg),
        }
    }
    let failed = failures.len();
    (
        json!({
            "classes": classes,
            "distinct_root_counts": distinct,
            "inconsistent": inconsistent,
            "failures": failures,
        }),
        failed,
    )
}

pub fn catalog(args: &CatalogArgs) -> Result<(), Failure> {
    let text = read_text(&args.path)?;
    let progress = |done: usize, total: usize| eprintln!("progress {done}/{total}");
    let opts = IngestOptions {
        results: args.results.as_deref(),
        progress: if args.progress { Some(&progress) } else { None },
    };
    let outcome = ingest_text(&text, &opts)?;
    if let Some(path) = &args.csv {
        let file = std::fs::File::create(path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        write_csv(&outcome.entries, std::io::BufWriter::new(file))?;
    }
    let entries = &outcome.entries;
    let mut failed = outcome.errors.len();
    let report = match args.audit {
        Audit::Unimodality => json!(unimodality_audit_entries(entries)),
        Audit::Uniqueness => {
            let mut report = json!(uniqueness_report(entries, args.complete));
            if args.complete {
                report["extensions"] = json!(k1_k2_uniqueness_check(entries)?);
            }
            report
        }
        Audit::Roots => {
            let (report, bad) = roots_audit(entries);
            failed += bad;
            report
        }
        Audit::Suite => {
            let suite = catalog_suite(entries)?;
            let mut report = json!({ "passed": suite.passed(), "catalog": suite });
            if let Some(n) = args.labeled {
                let labeled = labeled_suite(n)?;
                report["passed"] = json!(suite.passed() && labeled.passed());
                report["labeled"] = json!(labeled);
            }
            report
        }
    };
    emit(json!({
        "audit": audit_name(args.audit),
        "graphs": entries.len(),
        "reused": outcome.reused,
        "errors": outcome.errors,
        "report": report,
    }));
    if failed > 0 {
        return Err(Failure::partial(format!(
            "{failed} graph(s) could not be processed"
        )));
    }
    Ok(())
}

fn audit_name(a: Audit) -> &'static str {
    match a {
        Audit::Unimodality => "unimodality",
        Audit::Uniqueness => "uniqueness",
        Audit::Roots => "roots",
        Audit::Suite => "suite",
    }
}
