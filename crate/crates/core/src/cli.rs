//! The `ngr` command line: six subcommands, each printing a JSON report.
//!
//! Exit codes: 0 when every claim in the report passes, 1 when a claim
//! fails, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::coherence::{coherence_probe, euler_characteristic, ideal_syzygies, resolve_simple, BettiTable};
use crate::error::Error;
use crate::format::{basis_json, format_presentation, parse_generators, parse_presentation};
use crate::groebner::{buchberger_complete, check_r_processing, proof_properties_check, GroebnerBasis, Side};
use crate::hilbert::{hilbert_matrix, verify_koszul_identity, MatrixSeries, TransferTable};
use crate::ngr::{closed_form_dims, ngr_presentation_with, NgrInstance, NgrOrder};
use crate::quiver::QuiverPresentation;

pub const SCHEMA_VERSION: &str = "1";
pub const DEFAULT_MAX_DEGREE_CAP: usize = 12;
pub const CAP_VAR: &str = "NGR_MAX_DEGREE_CAP";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ngr", version, about = "Groebner bases, Hilbert series and syzygies for periodic quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the presentation of the Z-algebra for a given n
    Gen(GenArgs),
    /// Complete the relations to a Groebner basis
    Gb(GbArgs),
    /// Hilbert series matrix
    Hilbert(HilbertArgs),
    /// Check a property of the algebra
    Check(CheckArgs),
    /// Syzygies of a right ideal, or of random ideals
    Syzygy(SyzygyArgs),
    /// Minimal resolution of a simple module
    Resolve(ResolveArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Alternating)]
    order: OrderArg,
    /// Output file; the presentation goes to stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Alternating,
    Uniform,
}

impl From<OrderArg> for NgrOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Alternating => NgrOrder::Alternating,
            OrderArg::Uniform => NgrOrder::Uniform,
        }
    }
}

#[derive(Args, Debug)]
struct GbArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    max_degree: usize,
    /// Basis JSON file; embedded in the report when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 8)]
    trunc: usize,
    /// Fold an even period in half
    #[arg(long)]
    fold: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Pbw,
    Processing,
    Koszul,
    Gorenstein,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
    Both,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    what: What,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    degree_bound: Option<usize>,
    #[arg(long, value_enum, default_value_t = SideArg::Both)]
    side: SideArg,
    #[arg(long, default_value_t = 8)]
    trunc: usize,
}

#[derive(Args, Debug)]
struct SyzygyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, conflicts_with = "random")]
    gens: Option<PathBuf>,
    #[arg(long, requires = "d")]
    random: bool,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    cutoff: Option<usize>,
    /// Completion degree; defaults to the cutoff
    #[arg(long)]
    max_degree: Option<usize>,
}

#[derive(Args, Debug)]
struct ResolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long, default_value_t = 5)]
    hom_bound: usize,
    #[arg(long, default_value_t = 6)]
    deg_bound: usize,
}

/// Why a command stopped before producing a report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(_) => Failure::Math(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// A finished command: the report plus any extra text for stdout.
pub struct Outcome {
    pub report: Option<Value>,
    pub stdout: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub pass: bool,
    pub details: Value,
}

impl Claim {
    fn new(id: impl Into<String>, pass: bool, details: Value) -> Self {
        Claim {
            id: id.into(),
            pass,
            details,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "claim_id": self.id,
            "status": if self.pass { "pass" } else { "fail" },
            "details": self.details,
        })
    }
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

fn report(command: &str, input_digest: String, parameters: Value, result: Value, claims: &[Claim]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_digest": input_digest,
        "parameters": parameters,
        "result": result,
        "verified_claims": claims.iter().map(Claim::to_json).collect::<Vec<_>>(),
    })
}

/// Exit code implied by a report.
pub fn exit_code(report: &Value) -> i32 {
    let failed = report["verified_claims"]
        .as_array()
        .is_some_and(|cs| cs.iter().any(|c| c["status"] != "pass"));
    if failed {
        EXIT_CLAIM_FAILED
    } else {
        EXIT_PASS
    }
}

pub fn degree_cap() -> std::result::Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE_CAP),
    }
}

fn check_cap(name: &str, value: usize) -> std::result::Result<(), Failure> {
    let cap = degree_cap()?;
    if value > cap {
        return Err(Failure::Usage(format!(
            "{name} = {value} exceeds the degree cap {cap} (set {CAP_VAR} to raise it)"
        )));
    }
    Ok(())
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<(String, QuiverPresentation), Failure> {
    let text = read_file(path)?;
    let pres = parse_presentation(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok((text, pres))
}

fn complete(pres: &QuiverPresentation, max_degree: usize) -> std::result::Result<GroebnerBasis, Failure> {
    check_cap("completion degree", max_degree)?;
    Ok(buchberger_complete(pres, max_degree)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn cmd_gen(a: &GenArgs) -> CmdResult {
    if a.n < 3 {
        return Err(Failure::Usage(format!("--n must be at least 3, got {}", a.n)));
    }
    let order: NgrOrder = a.order.into();
    let inst = ngr_presentation_with(a.n, order)?;
    let text = format_presentation(&inst.presentation);
    let Some(out) = &a.out else {
        return Ok(Outcome {
            report: None,
            stdout: Some(text),
        });
    };
    write_file(out, &text)?;
    let pres = &inst.presentation;
    let parameters = json!({ "n": a.n, "order": order.name() });
    let result = json!({
        "period": pres.period(),
        "arrows_per_residue": (0..pres.period()).map(|r| pres.arrow_count(r)).collect::<Vec<_>>(),
        "relations_per_residue": (0..pres.period())
            .map(|r| pres.relations().iter().filter(|p| p.start() == Some(r)).count())
            .collect::<Vec<_>>(),
        "relation_count": pres.relations().len(),
        "output_digest": digest(&[text.as_bytes()]),
    });
    let input = parameters.to_string();
    Ok(Outcome {
        report: Some(report("gen", digest(&[input.as_bytes()]), parameters, result, &[])),
        stdout: None,
    })
}

fn pbw_route_completion(gb: &GroebnerBasis) -> Value {
    json!({
        "quadratic": gb.is_quadratic(),
        "max_rule_degree": gb.max_rule_degree(),
        "completed_through": gb.completed_through(),
        "closed": gb.is_closed(),
    })
}

fn cmd_gb(a: &GbArgs) -> CmdResult {
    let (text, pres) = load(&a.input)?;
    let top = pres.relations().iter().filter_map(|r| r.degree()).max().unwrap_or(0);
    if a.max_degree < top {
        return Err(Failure::Usage(format!(
            "--max-degree {} is below the relation degree {top}",
            a.max_degree
        )));
    }
    let gb = complete(&pres, a.max_degree)?;
    let basis = basis_json(&gb);
    let mut result = json!({
        "rule_count": basis["rule_count"],
        "rules_per_residue": basis["rules_per_residue"],
        "max_rule_degree": gb.max_rule_degree(),
        "completed_through": gb.completed_through(),
        "closed": gb.is_closed(),
    });
    match &a.out {
        Some(out) => write_file(out, &(serde_json::to_string_pretty(&basis).expect("json") + "\n"))?,
        None => result["basis"] = basis,
    }
    let mut claims = Vec::new();
    if top == 2 {
        claims.push(Claim::new("prop-3.2-pbw", gb.is_quadratic(), pbw_route_completion(&gb)));
    }
    Ok(Outcome {
        report: Some(report(
            "gb",
            digest(&[text.as_bytes()]),
            json!({ "max_degree": a.max_degree }),
            result,
            &claims,
        )),
        stdout: None,
    })
}

fn matrix_json(m: &MatrixSeries) -> Value {
    json!({
        "size": m.size(),
        "trunc": m.trunc(),
        "entries": m.entries(),
        "text": m.render(),
    })
}

/// Folded Hilbert matrix through `t^3` against the closed-form dimensions.
fn hilbert_t3_claim(gb: &GroebnerBasis, n: usize) -> std::result::Result<Claim, Failure> {
    let h = hilbert_matrix(gb, 3, true)?;
    let dims = closed_form_dims(n)?;
    let mut mismatches = Vec::new();
    for i in 0..3 {
        for len in 0..=3 {
            let j = (i + len) % 3;
            let want = dims.component(i, len).expect("length at most 3");
            let got = h.coefficient(i, j, len);
            if got != want {
                mismatches.push(json!({ "i": i, "length": len, "expected": want, "found": got }));
            }
        }
    }
    Ok(Claim::new(
        "prop-3.1-hilbert-t3",
        mismatches.is_empty(),
        json!({ "n": n, "mismatches": mismatches }),
    ))
}

fn cmd_hilbert(a: &HilbertArgs) -> CmdResult {
    let (text, pres) = load(&a.input)?;
    check_cap("--trunc", a.trunc)?;
    let gb = complete(&pres, a.trunc.max(2))?;
    let m = hilbert_matrix(&gb, a.trunc, a.fold)?;
    let mut claims = Vec::new();
    if let Some(inst) = NgrInstance::recognize(&pres) {
        if a.fold && a.trunc >= 3 {
            claims.push(hilbert_t3_claim(&gb, inst.n)?);
        }
    }
    Ok(Outcome {
        report: Some(report(
            "hilbert",
            digest(&[text.as_bytes()]),
            json!({ "trunc": a.trunc, "fold": a.fold }),
            json!({ "matrix": matrix_json(&m) }),
            &claims,
        )),
        stdout: None,
    })
}

fn require_ngr(pres: &QuiverPresentation, what: &str) -> std::result::Result<NgrInstance, Failure> {
    NgrInstance::recognize(pres)
        .ok_or_else(|| Failure::Usage(format!("--what {what} needs a generated NGr presentation")))
}

/// Counts of the monomial algebra cut out by the relation leads, at every
/// residue and length up to 3, against the closed forms.
fn pbw_route_counts(pres: &QuiverPresentation, n: usize) -> std::result::Result<(bool, Value), Failure> {
    let leads: Vec<_> = crate::groebner::relation_rules(pres).into_iter().map(|r| r.lead).collect();
    let table = TransferTable::from_leads(pres, leads.iter())?;
    let dims = closed_form_dims(n)?;
    let mut ok = true;
    let mut rows = Vec::new();
    for i in 0..pres.period() {
        let counts = table.counts(i, 3);
        let expected: Vec<i64> = (0..=3).map(|l| dims.component(i, l).expect("length at most 3")).collect();
        ok &= counts == expected;
        rows.push(json!({ "start": i, "counts": counts, "expected": expected }));
    }
    Ok((ok, json!(rows)))
}

fn processing_claim(gb: &GroebnerBasis, r: usize, bound: usize, side: Side) -> std::result::Result<Claim, Failure> {
    let rep = check_r_processing(gb, r, bound, side)?;
    let pres = gb.presentation();
    let cx = rep.counterexample.as_ref().map(|c| {
        json!({
            "u": pres.format_word(&c.u),
            "u_start": c.u.start(),
            "w": pres.format_word(&c.w),
            "w_start": c.w.start(),
            "s": pres.format_word(&c.s),
            "s_start": c.s.start(),
        })
    });
    let id = match side {
        Side::Right => format!("prop-3.3-processing-r{r}"),
        Side::Left => format!("remark-3.4-left-processing-r{r}"),
    };
    Ok(Claim::new(
        id,
        rep.verified,
        json!({
            "side": side,
            "degree_bound": bound,
            "pairs_checked": rep.pairs_checked,
            "counterexample": cx,
        }),
    ))
}

/// Betti table of the simple at `s` with the checks behind the Gorenstein
/// pattern: finite length, one-dimensional top, Euler characteristic of a
/// simple, and for generated instances the Koszul dual dimensions.
fn gorenstein_row(
    gb: &GroebnerBasis,
    s: usize,
    hom_bound: usize,
    deg_bound: usize,
    ngr: Option<&NgrInstance>,
) -> std::result::Result<(bool, Value), Failure> {
    let betti = resolve_simple(gb, s, hom_bound, deg_bound)?;
    let euler = euler_characteristic(gb, &betti)?;
    let euler_ok = euler.iter().enumerate().all(|(k, &v)| v == i64::from(k == 0));
    let len = betti.length();
    let finite = len + 1 < hom_bound;
    let top = betti.rows.get(len).cloned().unwrap_or_default();
    let top_ok = top.len() == 1 && top[0].1 == 1;
    let mut pattern_ok = true;
    if let Some(inst) = ngr {
        let pres = &inst.presentation;
        let rels = pres.relations().iter().filter(|p| p.start() == Some(s)).count();
        let expected = [(0, 1), (1, pres.arrow_count(s)), (2, rels), (3, 1)];
        pattern_ok = len == 3 && expected.iter().enumerate().all(|(h, &(sh, m))| betti.rows[h] == vec![(sh, m)]);
    }
    let ok = euler_ok && finite && top_ok && pattern_ok;
    Ok((ok, betti_json(&betti, &euler)))
}

fn betti_json(b: &BettiTable, euler: &[i64]) -> Value {
    let rows: Vec<Value> = b
        .rows
        .iter()
        .map(|r| Value::Array(r.iter().map(|&(shift, mult)| json!({ "shift": shift, "multiplicity": mult })).collect()))
        .collect();
    json!({
        "residue": b.residue,
        "hom_bound": b.hom_bound,
        "deg_bound": b.deg_bound,
        "length": b.length(),
        "totals": (0..b.rows.len()).map(|h| b.total(h)).collect::<Vec<_>>(),
        "rows": rows,
        "euler_characteristic": euler,
    })
}

fn cmd_check(a: &CheckArgs) -> CmdResult {
    let (text, pres) = load(&a.input)?;
    let mut params = json!({ "what": format!("{:?}", a.what).to_lowercase() });
    let mut result = json!({});
    let mut claims = Vec::new();
    match a.what {
        What::Pbw => {
            let bound = a.degree_bound.unwrap_or(4);
            params["degree_bound"] = json!(bound);
            let gb = complete(&pres, bound.max(2))?;
            let route1 = pbw_route_completion(&gb);
            let mut pass = gb.is_quadratic();
            result["completion"] = route1.clone();
            let mut details = json!({ "completion": route1 });
            if let Some(inst) = NgrInstance::recognize(&pres) {
                let (ok, counts) = pbw_route_counts(&pres, inst.n)?;
                pass &= ok;
                details["counts"] = json!({ "pass": ok, "rows": counts });
                result["n"] = json!(inst.n);
                result["order"] = json!(inst.order.name());
                if gb.is_quadratic() {
                    let props = proof_properties_check(&gb)?;
                    result["proof_properties"] = json!({
                        "kinds_preserved": props.kinds_preserved,
                        "second_letter_nonincreasing": props.second_letter_nonincreasing,
                        "downward_closed": props.downward_closed,
                    });
                }
            }
            claims.push(Claim::new("prop-3.2-pbw", pass, details));
        }
        What::Processing => {
            let bound = a.degree_bound.unwrap_or(9);
            params["r"] = json!(a.r);
            params["degree_bound"] = json!(bound);
            params["side"] = json!(format!("{:?}", a.side).to_lowercase());
            let gb = complete(&pres, bound.max(2))?;
            result["basis"] = pbw_route_completion(&gb);
            let sides: &[Side] = match a.side {
                SideArg::Right => &[Side::Right],
                SideArg::Left => &[Side::Left],
                SideArg::Both => &[Side::Right, Side::Left],
            };
            for &side in sides {
                claims.push(processing_claim(&gb, a.r, bound, side)?);
            }
        }
        What::Koszul => {
            let inst = require_ngr(&pres, "koszul")?;
            check_cap("--trunc", a.trunc)?;
            params["trunc"] = json!(a.trunc);
            let gb = complete(&pres, a.trunc.max(3))?;
            let claim = match verify_koszul_identity(&gb, inst.n, a.trunc) {
                Ok(rep) => {
                    result["koszul"] = to_json(&rep);
                    Claim::new("prop-3.1-koszul-identity", true, json!({ "orientation": rep.verified }))
                }
                Err(Error::Inconsistency(msg)) => {
                    Claim::new("prop-3.1-koszul-identity", false, json!({ "message": msg }))
                }
                Err(e) => return Err(e.into()),
            };
            claims.push(claim);
            claims.push(hilbert_t3_claim(&gb, inst.n)?);
        }
        What::Gorenstein => {
            let bound = a.degree_bound.unwrap_or(6);
            params["degree_bound"] = json!(bound);
            let gb = complete(&pres, bound.max(2))?;
            let inst = NgrInstance::recognize(&pres);
            let mut all = true;
            let mut tables = Vec::new();
            for s in 0..pres.period() {
                let (ok, table) = gorenstein_row(&gb, s, 5, bound, inst.as_ref())?;
                all &= ok;
                tables.push(json!({ "residue": s, "pass": ok, "betti": table }));
            }
            result["betti"] = json!(tables);
            claims.push(Claim::new("sec-2.1-gorenstein", all, json!({ "residues": pres.period() })));
        }
    }
    Ok(Outcome {
        report: Some(report("check", digest(&[text.as_bytes()]), params, result, &claims)),
        stdout: None,
    })
}

fn histogram(degrees: impl IntoIterator<Item = usize>) -> Value {
    let mut m = std::collections::BTreeMap::new();
    for d in degrees {
        *m.entry(d.to_string()).or_insert(0usize) += 1;
    }
    json!(m)
}

fn cmd_syzygy(a: &SyzygyArgs) -> CmdResult {
    let (text, pres) = load(&a.input)?;
    let mut params = json!({});
    if a.random {
        let d = a.d.expect("clap requires --d");
        if d == 0 {
            return Err(Failure::Usage("--d must be positive".into()));
        }
        let cutoff = d + 8;
        if let Some(c) = a.cutoff {
            if c != cutoff {
                return Err(Failure::Usage(format!("random probes use cutoff d + 8 = {cutoff}")));
            }
        }
        let max_degree = a.max_degree.unwrap_or(cutoff);
        if max_degree < cutoff {
            return Err(Failure::Usage(format!(
                "cutoff {cutoff} exceeds the completion degree {max_degree}"
            )));
        }
        let gb = complete(&pres, max_degree)?;
        let n = NgrInstance::recognize(&pres).map_or(pres.arrow_count(1), |i| i.n);
        let rep = coherence_probe(&gb, n, d, a.trials, a.seed)?;
        params = json!({ "random": true, "d": d, "trials": a.trials, "seed": a.seed, "cutoff": cutoff });
        let hist = histogram(rep.summaries.iter().flat_map(|s| s.minimal_syzygy_degrees.iter().copied()));
        let claim = Claim::new(
            "remark-3.7-bound",
            rep.passed,
            json!({
                "bound": rep.bound,
                "max_syzygy_degree": rep.max_syzygy_degree,
                "violations": to_json(&rep.violations),
                "unsound_trials": rep.unsound,
            }),
        );
        let mut result = to_json(&rep);
        result["minimal_syzygy_histogram"] = hist;
        return Ok(Outcome {
            report: Some(report(
                "syzygy",
                digest(&[text.as_bytes(), params.to_string().as_bytes()]),
                params,
                result,
                &[claim],
            )),
            stdout: None,
        });
    }
    let Some(gens_path) = &a.gens else {
        return Err(Failure::Usage("give --gens FILE or --random --d D".into()));
    };
    let gens_text = read_file(gens_path)?;
    let gens = parse_generators(&pres, &gens_text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", gens_path.display())))?;
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let cutoff = a.cutoff.unwrap_or(top + 8);
    let max_degree = a.max_degree.unwrap_or(cutoff);
    if cutoff > max_degree {
        return Err(Failure::Usage(format!(
            "cutoff {cutoff} exceeds the completion degree {max_degree}"
        )));
    }
    check_cap("--cutoff", cutoff)?;
    params = json!({ "random": false, "cutoff": cutoff, "max_degree": max_degree });
    let digest_in = digest(&[text.as_bytes(), gens_text.as_bytes()]);
    let bound = top + 6;
    if gens.is_empty() {
        let claim = Claim::new(
            "remark-3.7-bound",
            true,
            json!({ "bound": bound, "max_syzygy_degree": null, "vacuous": true }),
        );
        let result = json!({ "generator_count": 0, "minimal_syzygy_histogram": {} });
        return Ok(Outcome {
            report: Some(report("syzygy", digest_in, params, result, &[claim])),
            stdout: None,
        });
    }
    let gb = complete(&pres, max_degree)?;
    let rep = ideal_syzygies(&gb, &gens, cutoff)?;
    let max_deg = rep.minimal_syzygy_degrees.iter().copied().max();
    let pass = max_deg.is_none_or(|m| m <= bound);
    let claim = Claim::new(
        "remark-3.7-bound",
        pass,
        json!({ "bound": bound, "max_syzygy_degree": max_deg, "vacuous": false }),
    );
    let mut result = to_json(&rep);
    result["generator_count"] = json!(gens.len());
    result["minimal_syzygy_histogram"] = histogram(rep.minimal_syzygy_degrees.iter().copied());
    Ok(Outcome {
        report: Some(report("syzygy", digest_in, params, result, &[claim])),
        stdout: None,
    })
}

fn cmd_resolve(a: &ResolveArgs) -> CmdResult {
    let (text, pres) = load(&a.input)?;
    if a.s >= pres.period() {
        return Err(Failure::Usage(format!("--s {} outside period {}", a.s, pres.period())));
    }
    let gb = complete(&pres, a.deg_bound.max(2))?;
    let inst = NgrInstance::recognize(&pres);
    let (ok, table) = gorenstein_row(&gb, a.s, a.hom_bound, a.deg_bound, inst.as_ref())?;
    let claim = Claim::new("sec-2.1-gorenstein", ok, json!({ "residue": a.s }));
    Ok(Outcome {
        report: Some(report(
            "resolve",
            digest(&[text.as_bytes()]),
            json!({ "s": a.s, "hom_bound": a.hom_bound, "deg_bound": a.deg_bound }),
            json!({ "betti": table }),
            &[claim],
        )),
        stdout: None,
    })
}

/// Runs one command line, writing the report to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Gb(a) => cmd_gb(a),
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Check(a) => cmd_check(a),
        Command::Syzygy(a) => cmd_syzygy(a),
        Command::Resolve(a) => cmd_resolve(a),
    };
    match outcome {
        Ok(o) => {
            if let Some(text) = &o.stdout {
                let _ = out.write_all(text.as_bytes());
            }
            match &o.report {
                Some(r) => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(r).expect("json"));
                    exit_code(r)
                }
                None => EXIT_PASS,
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "claim failed: {e}");
            EXIT_CLAIM_FAILED
        }
    }
}
