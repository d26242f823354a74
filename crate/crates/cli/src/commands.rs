//! Subcommand implementations. Each writes its report into `out` and
//! returns an error only after the report is complete, so a mismatch is
//! still printed in full.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use demcrystal::character::{character_of, crystal_demazure_chain, demazure_d_w, CharacterElement};
use demcrystal::crystal::{demazure_crystal, enumerate_image, Budget, CrystalContext, ZVector};
use demcrystal::extremal::{extremal_oracle, extremal_weight, solve_extremal};
use demcrystal::polyhedral::{
    ample_verdict, box_from_points, enumerate_truncated, generate_xi, nontrivial,
    render_inequalities,
};
use demcrystal::rootdata::WeightOffset;

use crate::config::Problem;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy)]
pub struct Flags {
    pub paper_order: bool,
    pub verify: bool,
    pub oracle: bool,
    pub strict: bool,
    pub full: bool,
    pub format: Format,
}

fn context(p: &Problem) -> CliResult<CrystalContext> {
    Ok(CrystalContext::with_weight(
        p.cartan.clone(),
        p.iota.clone(),
        p.lambda.clone(),
    )?)
}

fn budget(p: &Problem) -> Budget {
    Budget {
        max_elements: p.budgets.max_elements,
        max_depth: p.budgets.max_depth,
    }
}

/// Coordinates `x_1..x_width`, reversed when printing in `(..., x_2, x_1)` order.
fn coords(x: &ZVector, width: usize, paper_order: bool) -> Vec<i64> {
    let mut v = x.padded(width.max(1));
    if paper_order {
        v.reverse();
    }
    v
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn json<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("plain data serializes"));
    out.push('\n');
}

#[derive(Serialize)]
struct ElementRow {
    x: Vec<i64>,
    wt: Vec<i64>,
}

#[derive(Serialize)]
struct DemazureReport {
    iota: String,
    word: Vec<usize>,
    size: usize,
    elements: Vec<ElementRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

pub fn demazure(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let ctx = context(p)?;
    let set = demazure_crystal(&ctx, &p.word)?;
    let width = p.word.len();
    let mut verdict = None;
    let mut failure = None;
    if flags.verify {
        let image = enumerate_image(&ctx, budget(p))?;
        if image.complete {
            let truncated: BTreeSet<ZVector> = image
                .points
                .into_iter()
                .filter(|x| x.truncated_at(width))
                .collect();
            verdict = Some(truncated == set);
            if truncated != set {
                failure = Some(CliError::Mismatch(format!(
                    "B_w has {} elements, truncated image has {}",
                    set.len(),
                    truncated.len()
                )));
            }
        } else if flags.strict {
            failure = Some(CliError::Budget("full crystal not enumerated".into()));
        }
    }
    let report = DemazureReport {
        iota: p.iota.to_string(),
        word: p.word.letters().to_vec(),
        size: set.len(),
        elements: set
            .iter()
            .map(|x| ElementRow {
                x: coords(x, width, flags.paper_order),
                wt: ctx.wt(x).c,
            })
            .collect(),
        verified: verdict,
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            writeln!(out, "iota: {}", report.iota).unwrap();
            writeln!(out, "word: {}", p.word).unwrap();
            writeln!(out, "|B_w(lambda)| = {}", report.size).unwrap();
            for x in &set {
                writeln!(
                    out,
                    "{}  {}",
                    tuple(&coords(x, width, flags.paper_order)),
                    ctx.wt(x)
                )
                .unwrap();
            }
            match verdict {
                Some(true) => writeln!(out, "truncation check: match").unwrap(),
                Some(false) => writeln!(out, "truncation check: MISMATCH").unwrap(),
                None if flags.verify => {
                    writeln!(out, "truncation check: skipped (budget)").unwrap()
                }
                None => {}
            }
        }
    }
    failure.map_or(Ok(()), Err)
}

#[derive(Serialize)]
struct ExtremalReport {
    word: Vec<usize>,
    x: Vec<i64>,
    weight: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

pub fn extremal(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let x = solve_extremal(&p.cartan, &p.iota, &p.lambda, &p.word)?;
    let weight: WeightOffset = extremal_weight(&p.cartan, &p.lambda, &p.word)?;
    let width = p.word.len();
    let oracle = if flags.oracle {
        Some(extremal_oracle(&p.cartan, &p.iota, &p.lambda, &p.word)?)
    } else {
        None
    };
    let matches = oracle.as_ref().map(|y| *y == x);
    let report = ExtremalReport {
        word: p.word.letters().to_vec(),
        x: coords(&x, width, flags.paper_order),
        weight: weight.c.clone(),
        oracle: oracle.as_ref().map(|y| coords(y, width, flags.paper_order)),
        matches,
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            writeln!(out, "word: {}", p.word).unwrap();
            writeln!(out, "x_w = {}", tuple(&report.x)).unwrap();
            writeln!(out, "wt = {weight}").unwrap();
            if let (Some(y), Some(m)) = (&report.oracle, matches) {
                let verdict = if m { "match" } else { "MISMATCH" };
                writeln!(out, "oracle = {} ({verdict})", tuple(y)).unwrap();
            }
        }
    }
    if matches == Some(false) {
        return Err(CliError::Mismatch("solver and oracle disagree".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct PolytopeReport {
    closed: bool,
    count_cutoff: usize,
    var_cutoff: usize,
    ample: bool,
    inequalities: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lattice_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    crystal_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

pub fn polytope(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let xi = generate_xi(
        &p.iota,
        &p.cartan,
        Some(&p.lambda),
        p.budgets.var_cutoff,
        p.budgets.count_cutoff,
    )?;
    let ample = ample_verdict(&xi).holds;
    let forms: Vec<_> = nontrivial(&xi).cloned().collect();
    let mut failure = None;
    if !xi.closed && flags.strict {
        failure = Some(CliError::Budget(format!(
            "inequality generation hit the count cutoff {}",
            p.budgets.count_cutoff
        )));
    }

    let mut lattice_points = None;
    let mut crystal_points = None;
    let mut matches = None;
    let mut note = None;
    if flags.verify {
        let ctx = context(p)?;
        let image = enumerate_image(&ctx, budget(p))?;
        let len = image
            .points
            .iter()
            .map(|x| x.support_len())
            .max()
            .unwrap_or(0);
        if !image.complete {
            note = Some("skipped: crystal enumeration hit its budget".to_string());
            if flags.strict && failure.is_none() {
                failure = Some(CliError::Budget("full crystal not enumerated".into()));
            }
        } else if len > p.budgets.var_cutoff {
            note = Some(format!(
                "skipped: crystal uses {len} coordinates, beyond var_cutoff {}",
                p.budgets.var_cutoff
            ));
        } else {
            let restricted: Vec<_> = forms.iter().map(|f| f.restricted(len)).collect();
            let bounds = box_from_points(&image.points, len);
            let lattice = enumerate_truncated(&restricted, len, &bounds);
            lattice_points = Some(lattice.len());
            crystal_points = Some(image.points.len());
            matches = Some(lattice == image.points);
            if lattice != image.points && failure.is_none() {
                failure = Some(CliError::Mismatch(format!(
                    "{} lattice points, {} crystal points",
                    lattice.len(),
                    image.points.len()
                )));
            }
        }
    }

    let report = PolytopeReport {
        closed: xi.closed,
        count_cutoff: p.budgets.count_cutoff,
        var_cutoff: p.budgets.var_cutoff,
        ample,
        inequalities: forms.iter().map(|f| format!("{f} >= 0")).collect(),
        lattice_points,
        crystal_points,
        matches,
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            if xi.closed {
                writeln!(out, "closed: true").unwrap();
            } else {
                writeln!(out, "closed: false (cutoff {})", p.budgets.count_cutoff).unwrap();
            }
            let scope = if xi.closed {
                "certified"
            } else {
                "up to cutoff"
            };
            writeln!(out, "ample: {ample} ({scope})").unwrap();
            writeln!(out, "inequalities: {}", forms.len()).unwrap();
            out.push_str(&render_inequalities(&forms));
            match (matches, note) {
                (Some(true), _) => {
                    writeln!(out, "match: {} points", crystal_points.unwrap()).unwrap()
                }
                (Some(false), _) => writeln!(
                    out,
                    "MISMATCH: {} lattice points, {} crystal points",
                    lattice_points.unwrap(),
                    crystal_points.unwrap()
                )
                .unwrap(),
                (None, Some(n)) => writeln!(out, "verify: {n}").unwrap(),
                (None, None) => {}
            }
        }
    }
    failure.map_or(Ok(()), Err)
}

#[derive(Serialize)]
struct CharacterReport {
    crystal: String,
    demazure: String,
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit_chain: Option<bool>,
}

pub fn character(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let ctx = context(p)?;
    let set = demazure_crystal(&ctx, &p.word)?;
    let ch = character_of(&ctx, &set);
    let dw = demazure_d_w(
        &p.cartan,
        &p.word,
        &CharacterElement::highest(p.lambda.clone()),
    )?;
    let unit_chain = if flags.verify {
        let chain = crystal_demazure_chain(&ctx, &p.word)?;
        Some(chain.terms().len() == set.len() && set.iter().all(|b| chain.coeff(b) == 1))
    } else {
        None
    };
    let report = CharacterReport {
        crystal: ch.to_string(),
        demazure: dw.to_string(),
        equal: ch == dw,
        unit_chain,
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            writeln!(out, "ch(B_w(lambda)) = {}", report.crystal).unwrap();
            writeln!(out, "D_w(e^lambda)   = {}", report.demazure).unwrap();
            writeln!(out, "{}", if report.equal { "EQUAL" } else { "DIFFER" }).unwrap();
            if let Some(u) = unit_chain {
                let verdict = if u {
                    "unit sum over B_w(lambda)"
                } else {
                    "NOT the unit sum"
                };
                writeln!(out, "operator chain: {verdict}").unwrap();
            }
        }
    }
    if !report.equal {
        return Err(CliError::Mismatch("characters differ".into()));
    }
    if unit_chain == Some(false) {
        return Err(CliError::Mismatch(
            "operator chain is not the unit sum".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct Edge {
    from: usize,
    to: usize,
    i: usize,
}

#[derive(Serialize)]
struct GraphReport {
    nodes: Vec<Vec<i64>>,
    edges: Vec<Edge>,
    complete: bool,
}

pub fn graph(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let ctx = context(p)?;
    let (set, complete) = if flags.full {
        let image = enumerate_image(&ctx, budget(p))?;
        (image.points, image.complete)
    } else {
        (demazure_crystal(&ctx, &p.word)?, true)
    };
    let width = if flags.full {
        set.iter().map(|x| x.support_len()).max().unwrap_or(0)
    } else {
        p.word.len()
    };
    let nodes: Vec<&ZVector> = set.iter().collect();
    let index_of = |x: &ZVector| nodes.binary_search(&x).ok();
    let mut edges = Vec::new();
    for (from, x) in nodes.iter().enumerate() {
        for i in 1..=ctx.rank() {
            if let Some(y) = ctx.f_tilde(i, x)? {
                if let Some(to) = index_of(&y) {
                    edges.push(Edge { from, to, i });
                }
            }
        }
    }
    let report = GraphReport {
        nodes: nodes
            .iter()
            .map(|x| coords(x, width, flags.paper_order))
            .collect(),
        edges,
        complete,
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            writeln!(out, "digraph crystal {{").unwrap();
            for (k, x) in report.nodes.iter().enumerate() {
                writeln!(out, "  n{k} [label=\"{}\"];", tuple(x)).unwrap();
            }
            for e in &report.edges {
                writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.i).unwrap();
            }
            writeln!(out, "}}").unwrap();
        }
    }
    if !complete && flags.strict {
        return Err(CliError::Budget("full crystal not enumerated".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct ValidateReport {
    rank: usize,
    symmetrizer: Vec<i64>,
    iota: String,
    word: Vec<usize>,
    lambda: Vec<i64>,
}

pub fn validate(p: &Problem, flags: Flags, out: &mut String) -> CliResult<()> {
    let report = ValidateReport {
        rank: p.cartan.rank(),
        symmetrizer: p.cartan.symmetrizer(),
        iota: p.iota.to_string(),
        word: p.word.letters().to_vec(),
        lambda: p.lambda.coeffs().to_vec(),
    };
    match flags.format {
        Format::Json => json(out, &report),
        _ => {
            writeln!(out, "ok").unwrap();
            writeln!(out, "cartan: {}", p.cartan).unwrap();
            writeln!(out, "symmetrizer: {}", tuple(&report.symmetrizer)).unwrap();
            writeln!(out, "iota: {}", report.iota).unwrap();
            writeln!(out, "word: {} (reduced)", p.word).unwrap();
            writeln!(out, "lambda: {} (dominant)", tuple(&report.lambda)).unwrap();
        }
    }
    Ok(())
}
