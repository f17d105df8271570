//! Subcommand implementations: load inputs, call the library, render the
//! report.  Human output goes to standard output; `--json` swaps in the
//! machine format.  All counts print as exact decimal strings.

use std::fmt;
use std::path::{Path, PathBuf};

use folded_codes::bounds::{density_experiment, dually_qmds_bounds};
use folded_codes::code::{
    expand_code, DistanceMethod, Isometry, LinearCode, DEFAULT_ENUMERATION_BUDGET,
};
use folded_codes::constructions::{
    binary_long_code, pi_code, qmds_subcode, repetition_dual_code, split_moduli, SplitMode,
};
use folded_codes::fqmat::MatrixFq;
use folded_codes::gf::{Extension, FieldSpec, OrderedBasis};
use folded_codes::pseudoarc::{
    arc_equivalence_witness, arc_from_code, code_from_arc, verify_arc_equivalence, PseudoArc,
};
use folded_codes::qmds::classify_with_budget;
use folded_codes::serialize;
use folded_codes::wdist::{
    macwilliams_check, reconstruct_distribution, wdist_exhaustive_with_budget, wdist_formula,
    WeightDistribution,
};
use folded_codes::Error;
use num::BigUint;
use serde_json::json;

use crate::args::{
    BlocksFlag, BudgetFlag, ConstructKind, DistanceFlag, FieldFlags, InputFile, IsometryKind,
    OutputFile, PseudoarcKind, SplitFlag, WdistFlag,
};

/// Failures with their exit codes: domain and file errors exit 1, usage
/// errors exit 2.
#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    File { path: PathBuf, source: std::io::Error },
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::File { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::File { path: path.into(), source })
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::File { path: path.into(), source })
}

fn load_code(path: &Path) -> Result<LinearCode, CliError> {
    Ok(serialize::code_from_json(&read_text(path)?)?)
}

fn load_arc(path: &Path) -> Result<PseudoArc, CliError> {
    Ok(serialize::arc_from_json(&read_text(path)?)?)
}

fn load_isometry(path: &Path) -> Result<Isometry, CliError> {
    Ok(serialize::isometry_from_json(&read_text(path)?)?)
}

/// Factors a prime power `q = p^e`; `None` when `q` is not one.
fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut v = q;
            let mut e = 0;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            return (v == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

fn resolve_field(flags: &FieldFlags) -> Result<FieldSpec, CliError> {
    match (flags.q, flags.p) {
        (Some(q), None) => {
            let (p, e) = prime_power(q)
                .ok_or_else(|| CliError::Domain(Error::OutOfRange(format!(
                    "{q} is not a prime power"
                ))))?;
            Ok(FieldSpec::new(p, e, None)?)
        }
        (None, Some(p)) => Ok(FieldSpec::new(p, flags.e.unwrap_or(1), None)?),
        _ => unreachable!("the flag group admits exactly one of --q and --p"),
    }
}

/// Converts 1-based command-line block numbers to 0-based indices.
fn zero_based(blocks: &[usize]) -> Result<Vec<usize>, CliError> {
    blocks
        .iter()
        .map(|&b| {
            b.checked_sub(1)
                .ok_or_else(|| CliError::Usage("--blocks entries are 1-based".into()))
        })
        .collect()
}

fn budget_of(flag: &BudgetFlag) -> u128 {
    flag.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET)
}

fn distance_method(flag: DistanceFlag) -> DistanceMethod {
    match flag {
        DistanceFlag::Rank => DistanceMethod::RankBlocks,
        DistanceFlag::Exhaustive => DistanceMethod::Exhaustive,
    }
}

/// Writes a code to `--out` (reporting the destination) or prints its JSON.
fn emit_code(code: &LinearCode, output: &OutputFile, json: bool) -> Result<(), CliError> {
    let text = serialize::code_to_json(code)?;
    match &output.path {
        Some(path) => {
            write_text(path, &(text + "\n"))?;
            if json {
                println!(
                    "{}",
                    json!({
                        "path": path.display().to_string(),
                        "q": code.field().order(),
                        "n": code.n(),
                        "r": code.r(),
                        "k": code.k(),
                    })
                );
            } else {
                println!(
                    "wrote {} over F_{} to {}",
                    code.params_string(),
                    code.field().order(),
                    path.display()
                );
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_arc(arc: &PseudoArc, output: &OutputFile, json: bool) -> Result<(), CliError> {
    let text = serialize::arc_to_json(arc)?;
    match &output.path {
        Some(path) => {
            write_text(path, &(text + "\n"))?;
            if json {
                println!(
                    "{}",
                    json!({
                        "path": path.display().to_string(),
                        "q": arc.field().order(),
                        "n": arc.n(),
                        "r": arc.r(),
                        "m": arc.m(),
                    })
                );
            } else {
                println!(
                    "wrote arc of {} subspaces ({}x{}) over F_{} to {}",
                    arc.n(),
                    arc.m(),
                    arc.r(),
                    arc.field().order(),
                    path.display()
                );
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn print_distribution(dist: &WeightDistribution, json: bool) -> Result<(), CliError> {
    if json {
        println!("{}", serialize::distribution_to_json(dist)?);
        return Ok(());
    }
    println!("A = {}", dist.counts_string());
    let width = dist
        .counts()
        .iter()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1)
        .max("A_j".len());
    let jw = dist.n().to_string().len().max(1);
    println!("{:>jw$}  {:>width$}", "j", "A_j");
    for (j, c) in dist.counts().iter().enumerate() {
        let c = c.to_string();
        println!("{j:>jw$}  {c:>width$}");
    }
    Ok(())
}

pub fn construct(kind: ConstructKind) -> Result<(), CliError> {
    match kind {
        ConstructKind::Pi { field, r, n, k, method, output, json } => {
            let field = resolve_field(&field)?;
            let mode = match method {
                SplitFlag::Distinct => SplitMode::DistinctRoots,
                SplitFlag::Repeated => SplitMode::RepeatedRoot,
            };
            let moduli = split_moduli(&field, n, r, mode)?;
            let code = pi_code(&moduli, k)?;
            emit_code(&code, &output, json.json)
        }
        ConstructKind::BinaryLong { r, output, json } => {
            emit_code(&binary_long_code(r)?, &output, json.json)
        }
        ConstructKind::RepetitionDual { field, r, n, output, json } => {
            let field = resolve_field(&field)?;
            emit_code(&repetition_dual_code(n, r, &field)?, &output, json.json)
        }
        ConstructKind::Subcode { input, k, output, json } => {
            let code = load_code(&input.path)?;
            emit_code(&qmds_subcode(&code, k)?, &output, json.json)
        }
        ConstructKind::Expand { input, output, json } => {
            let code = load_code(&input.path)?;
            if code.r() != 1 {
                return Err(CliError::Domain(Error::ParamMismatch(format!(
                    "expand needs a width-1 input code (one field symbol per block), got r = {}",
                    code.r()
                ))));
            }
            let big = code.field().clone();
            let base = FieldSpec::prime(big.characteristic())?;
            let ext = Extension::new(base, big)?;
            let basis = OrderedBasis::power_basis(&ext);
            let expanded = expand_code(&basis, code.generator())?;
            emit_code(&expanded, &output, json.json)
        }
    }
}

pub fn classify(
    input: &InputFile,
    method: DistanceFlag,
    budget: &BudgetFlag,
    json: bool,
) -> Result<(), CliError> {
    let code = load_code(&input.path)?;
    let c = classify_with_budget(&code, distance_method(method), budget_of(budget))?;
    if json {
        println!("{}", serialize::classification_to_json(&c)?);
    } else {
        println!("{} {}", c.label(), code.params_string_with_distance(c.d));
        println!("d_perp = {}", c.d_perp);
    }
    Ok(())
}

pub fn wdist(
    method: WdistFlag,
    input: Option<&Path>,
    params: Option<&[u64]>,
    budget: &BudgetFlag,
    json: bool,
) -> Result<(), CliError> {
    let budget = budget_of(budget);
    match method {
        WdistFlag::Exhaustive => {
            let code = require_input(input)?;
            let dist = wdist_exhaustive_with_budget(&code, budget)?;
            print_distribution(&dist, json)
        }
        WdistFlag::Formula => {
            let (n, r, k, q) = match (params, input) {
                (Some(v), _) => {
                    if v.len() != 4 {
                        return Err(CliError::Usage(
                            "--params takes exactly four values: n,r,k,q".into(),
                        ));
                    }
                    (v[0] as usize, v[1] as usize, v[2] as usize, v[3])
                }
                (None, Some(path)) => {
                    let code = load_code(path)?;
                    (code.n(), code.r(), code.k(), code.field().order())
                }
                (None, None) => {
                    return Err(CliError::Usage(
                        "the closed form needs --params n,r,k,q or --in".into(),
                    ))
                }
            };
            print_distribution(&wdist_formula(q, n, r, k)?, json)
        }
        WdistFlag::MacwilliamsCheck => {
            let code = require_input(input)?;
            let primal = wdist_exhaustive_with_budget(&code, budget)?;
            let dual = wdist_exhaustive_with_budget(&code.dual(), budget)?;
            let residuals = macwilliams_check(&primal, &dual)?;
            let holds = residuals.iter().all(num::Zero::is_zero);
            if json {
                let strings: Vec<String> = residuals.iter().map(ToString::to_string).collect();
                println!("{}", json!({ "residuals": strings, "holds": holds }));
            } else {
                let joined: Vec<String> = residuals.iter().map(ToString::to_string).collect();
                println!("residuals = {}", joined.join(","));
                println!("identity holds: {}", if holds { "yes" } else { "no" });
            }
            Ok(())
        }
        WdistFlag::Reconstruct => {
            let code = require_input(input)?;
            let (n, r, k, q) = (code.n(), code.r(), code.k(), code.field().order());
            let d = code.min_distance_with_budget(DistanceMethod::RankBlocks, budget)?;
            let d_perp =
                code.dual().min_distance_with_budget(DistanceMethod::RankBlocks, budget)?;
            let head: Vec<BigUint> = if n >= d_perp && n - d_perp >= d {
                let full = wdist_exhaustive_with_budget(&code, budget)?;
                full.counts()[d..=n - d_perp].to_vec()
            } else {
                Vec::new()
            };
            if !json {
                println!("d = {d}, d_perp = {d_perp}, head length = {}", head.len());
            }
            let dist = reconstruct_distribution(q, n, r, k, d, d_perp, &head)?;
            print_distribution(&dist, json)
        }
    }
}

fn require_input(input: Option<&Path>) -> Result<LinearCode, CliError> {
    let path = input.ok_or_else(|| CliError::Usage("--in is required here".into()))?;
    load_code(path)
}

pub fn restrict_or_shorten(
    input: &InputFile,
    blocks: &BlocksFlag,
    output: &OutputFile,
    json: bool,
    shorten: bool,
) -> Result<(), CliError> {
    let code = load_code(&input.path)?;
    let picked = zero_based(&blocks.blocks)?;
    let derived = if shorten { code.shorten(&picked)? } else { code.restrict(&picked)? };
    emit_code(&derived, output, json)
}

pub fn bounds(
    field: &FieldFlags,
    r: usize,
    k: usize,
    n: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let q = resolve_field(field)?.order();
    let report = dually_qmds_bounds(q, r, k, n)?;
    if json {
        let reports: Vec<_> = report
            .reports
            .iter()
            .map(|rep| {
                json!({
                    "name": rep.name,
                    "bounds": rep.bounds,
                    "value": rep.value.to_string(),
                    "hypothesis": rep.hypothesis,
                    "applies": rep.applies,
                    "attained_by": rep.attained_by,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "q": report.q,
                "r": report.r,
                "k": report.k,
                "n": report.n,
                "epsilon": report.epsilon,
                "delta": report.delta,
                "reports": reports,
            })
        );
        return Ok(());
    }
    println!("epsilon = {}, delta = {}", report.epsilon, report.delta);
    for rep in &report.reports {
        let applies = match rep.applies {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown without n",
        };
        println!(
            "{}: {} <= {}   [{}; applies: {}]",
            rep.name, rep.bounds, rep.value, rep.hypothesis, applies
        );
        if let Some(witness) = &rep.attained_by {
            println!("  attained by {witness}");
        }
    }
    Ok(())
}

pub fn density(
    field: &FieldFlags,
    n: usize,
    r: usize,
    k: usize,
    trials: u64,
    seed: u64,
    json: bool,
) -> Result<(), CliError> {
    let field = resolve_field(field)?;
    let report = density_experiment(&field, n, r, k, trials, seed)?;
    if json {
        println!("{}", serialize::density_to_json(&report)?);
    } else {
        println!("trials = {}, seed = {}", report.trials, report.seed);
        println!("dually QMDS count = {}/{}", report.dually_count, report.trials);
        println!("empirical = {}", report.empirical);
        let marker = if report.bound_vacuous { " (vacuous)" } else { "" };
        println!("guaranteed lower bound = {}{marker}", report.lower_bound);
    }
    Ok(())
}

pub fn pseudoarc(kind: PseudoarcKind) -> Result<(), CliError> {
    match kind {
        PseudoarcKind::FromCode { input, output, json } => {
            let code = load_code(&input.path)?;
            emit_arc(&arc_from_code(&code)?, &output, json.json)
        }
        PseudoarcKind::ToCode { input, output, json } => {
            let arc = load_arc(&input.path)?;
            emit_code(&code_from_arc(&arc)?, &output, json.json)
        }
        PseudoarcKind::Params { input, json } => {
            let arc = load_arc(&input.path)?;
            let params = arc.params()?;
            if json.json {
                println!(
                    "{}",
                    json!({
                        "n": params.n,
                        "r": params.r,
                        "m": params.m,
                        "t": params.t,
                        "nondegenerate": params.nondegenerate,
                    })
                );
            } else {
                println!("arc [{},{},{},{}]", params.n, params.r, params.m, params.t);
                println!(
                    "nondegenerate: {}",
                    if params.nondegenerate { "yes" } else { "no" }
                );
            }
            Ok(())
        }
    }
}

fn print_matrix(m: &MatrixFq) {
    for i in 0..m.rows() {
        let row: Vec<String> =
            m.row(i).iter().map(|&a| m.field().fmt_element(a)).collect();
        println!("  [{}]", row.join(" "));
    }
}

pub fn isometry(kind: IsometryKind) -> Result<(), CliError> {
    match kind {
        IsometryKind::Apply { input, iso, output, json } => {
            let code = load_code(&input.path)?;
            let iso = load_isometry(&iso.path)?;
            emit_code(&code.apply_isometry(&iso)?, &output, json.json)
        }
        IsometryKind::DualWitness { input, iso, json } => {
            let code = load_code(&input.path)?;
            let iso = load_isometry(&iso.path)?;
            let b = arc_equivalence_witness(&code, &iso)?;
            let verified = verify_arc_equivalence(&code, &iso, &b)?;
            if json.json {
                let matrix: serde_json::Value =
                    serde_json::from_str(&serialize::matrix_to_json(&b)?)
                        .map_err(Error::from)?;
                println!("{}", json!({ "verified": verified, "b": matrix }));
            } else {
                println!("verified: {}", if verified { "yes" } else { "no" });
                println!("B =");
                print_matrix(&b);
            }
            Ok(())
        }
    }
}
