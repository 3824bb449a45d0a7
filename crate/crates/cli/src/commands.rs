use serde::Serialize;
use serde_json::{json, Value};

use cyclic_es::extremal::verify_alpha_exhaustive_with;
use cyclic_es::extremal::enumerate_extremal_with;
use cyclic_es::grid::phi_inverse_matrices;
use cyclic_es::monotone::linear_witness;
use cyclic_es::perm::parse_values;
use cyclic_es::stochastic::estimate_mu_with;
use cyclic_es::{
    alpha, construct_extremal, count_extremal_linear, count_syt_rect, cyclic_lds_length,
    cyclic_lis_length, cyclic_witness, erdos_szekeres_check, grid_assignment, grid_drawing,
    lds_length, lis_length, partition_witness, verify_extremal, CyclicPermutation, Direction,
    Error, Execution, MuEstimate, Permutation, StructureKind, DEFAULT_BUDGET,
};

use crate::{BijectionArgs, Command, Format, OptionalBounds};

pub const BUDGET_ENV: &str = "CYCLIC_ES_BUDGET";

pub enum Output {
    Json(Value),
    Csv(String),
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: String,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, kind: "Usage".into(), message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let (kind, code) = classify(&err);
        CliError { code, kind: kind.into(), message: err.to_string() }
    }
}

/// Malformed input exits with 2; well-formed input the mathematics rejects
/// exits with 1.
fn classify(err: &Error) -> (&'static str, u8) {
    match err {
        Error::EmptyInput => ("EmptyInput", 2),
        Error::DuplicateValue { .. } => ("DuplicateValue", 2),
        Error::OutOfRangeValue { .. } => ("OutOfRangeValue", 2),
        Error::ContainsOne { .. } => ("ContainsOne", 2),
        Error::Parse(_) => ("Parse", 2),
        Error::NotAPermutationFilling { .. } => ("NotAPermutationFilling", 2),
        Error::RowNotIncreasing(_) => ("RowNotIncreasing", 2),
        Error::ColumnNotIncreasing(_) => ("ColumnNotIncreasing", 2),
        Error::Ragged { .. } => ("Ragged", 2),
        Error::InvalidTableau { .. } => ("InvalidTableau", 2),
        Error::InvalidBound { .. } => ("InvalidBound", 1),
        Error::InvalidShape { .. } => ("InvalidShape", 1),
        Error::ShapeMismatch { .. } => ("ShapeMismatch", 1),
        Error::LengthMismatch { .. } => ("LengthMismatch", 1),
        Error::NotExtremal { .. } => ("NotExtremal", 1),
        Error::BudgetExceeded { .. } => ("BudgetExceeded", 1),
    }
}

pub struct Context {
    exec: Execution,
    budget: Result<u64, CliError>,
}

impl Context {
    pub fn from_env(sequential: bool) -> Self {
        let exec = if sequential { Execution::Sequential } else { Execution::default() };
        let budget = match std::env::var(BUDGET_ENV) {
            Err(_) => Ok(DEFAULT_BUDGET),
            Ok(text) => text
                .trim()
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("{BUDGET_ENV}={text:?} is not a non-negative integer"))),
        };
        Context { exec, budget }
    }

    fn budget(&self) -> Result<u64, CliError> {
        match &self.budget {
            Ok(b) => Ok(*b),
            Err(e) => Err(CliError { code: e.code, kind: e.kind.clone(), message: e.message.clone() }),
        }
    }
}

/// Runs one subcommand. The first value echoes the normalized input and is
/// included in the output document whether or not the command succeeds.
pub fn run(ctx: &Context, command: Command) -> (Value, Result<Output, CliError>) {
    match command {
        Command::Analyze { perm, cyclic, bounds } => {
            let input = json!({ "permutation": perm, "cyclic": cyclic, "k": bounds.k, "ℓ": bounds.l });
            (input, analyze(&perm, cyclic, bounds))
        }
        Command::Construct { k, l, structure } => {
            let input = json!({ "k": k, "ℓ": l, "structure": structure });
            (input, construct(k, l, &structure))
        }
        Command::Count { k, l } => (json!({ "k": k, "ℓ": l }), count(k, l)),
        Command::Bijection(args) => {
            let input = json!({
                "forward": args.forward,
                "inverse": args.inverse,
                "k": args.bounds.k,
                "ℓ": args.bounds.l,
            });
            (input, bijection(args))
        }
        Command::Enumerate { k, l, limit, offset, format } => {
            let input = json!({ "k": k, "ℓ": l, "limit": limit, "offset": offset });
            (input, enumerate(ctx, k, l, limit, offset, format))
        }
        Command::VerifyAlpha { k, l } => (json!({ "k": k, "ℓ": l }), verify_alpha(ctx, k, l)),
        Command::EstimateMu { n, samples, seed, format } => {
            let input = json!({ "n": n, "samples": samples, "seed": seed });
            (input, estimate(ctx, &n, samples, seed, format))
        }
        Command::GridExport { perm, bounds } => {
            let input = json!({ "permutation": perm, "k": bounds.k, "ℓ": bounds.l });
            (input, grid_export(&perm, bounds))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize to JSON")
}

fn as_usize(v: u64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::usage(format!("{v} does not fit in usize")))
}

/// Resolves optional `--k/--l`, defaulting to the permutation's own LIS and
/// LDS.
fn resolve_bounds(p: &Permutation, bounds: OptionalBounds) -> Result<(usize, usize), CliError> {
    let k = bounds.k.map(as_usize).transpose()?.unwrap_or_else(|| lis_length(p));
    let l = bounds.l.map(as_usize).transpose()?.unwrap_or_else(|| lds_length(p));
    Ok((k, l))
}

fn analyze(text: &str, cyclic_flag: bool, bounds: OptionalBounds) -> Result<Output, CliError> {
    let (values, parenthesized) = parse_values(text)?;
    let p = Permutation::from_signed(&values)?;
    let k = bounds.k.map(as_usize).transpose()?;
    let l = bounds.l.map(as_usize).transpose()?;
    let check = match (k, l) {
        (Some(k), Some(l)) => Some((k, l)),
        (None, None) => None,
        _ => return Err(CliError::usage("--k and --l must be given together")),
    };

    let payload = if cyclic_flag || parenthesized {
        let c = CyclicPermutation::from_permutation(&p);
        let lis = cyclic_lis_length(&c);
        let lds = cyclic_lds_length(&c);
        let mut doc = json!({
            "n": c.len(),
            "canonical": c.values(),
            "cyclic_lis": lis,
            "cyclic_lds": lds,
            "increasing_witness": cyclic_witness(&c, Direction::Increasing),
            "decreasing_witness": cyclic_witness(&c, Direction::Decreasing),
        });
        if let Some((k, l)) = check {
            doc["cyclic_bound"] = json!({
                "alpha": alpha(k, l)?,
                "forced": lis > k || lds > l,
            });
        }
        doc
    } else {
        let mut doc = json!({
            "n": p.len(),
            "lis": lis_length(&p),
            "lds": lds_length(&p),
            "increasing_witness": linear_witness(&p, Direction::Increasing),
            "decreasing_witness": linear_witness(&p, Direction::Decreasing),
        });
        if let Some((k, l)) = check {
            doc["erdos_szekeres"] = to_json(&erdos_szekeres_check(&p, k, l)?);
        }
        doc
    };
    Ok(Output::Json(payload))
}

fn construct(k: usize, l: usize, structure: &str) -> Result<Output, CliError> {
    let kind: StructureKind = structure.parse().map_err(CliError::usage)?;
    let s = construct_extremal(k, l, kind)?;
    Ok(Output::Json(json!({
        "structure": s.kind,
        "k": k,
        "ℓ": l,
        "cycle": s.cyclic,
        "text": s.cyclic.to_string(),
        "verification": verify_extremal(&s.cyclic, k, l),
        "partition": partition_witness(&s),
    })))
}

fn count(k: usize, l: usize) -> Result<Output, CliError> {
    Ok(Output::Json(json!({
        "shape": [l, k],
        "syt": count_syt_rect(l, k)?,
        "extremal_linear": count_extremal_linear(k, l)?,
    })))
}

fn bijection(args: BijectionArgs) -> Result<Output, CliError> {
    if let Some(text) = args.forward {
        let (values, _) = parse_values(&text)?;
        let p = Permutation::from_signed(&values)?;
        let (k, l) = resolve_bounds(&p, args.bounds)?;
        return Ok(Output::Json(to_json(&grid_assignment(&p, k, l)?)));
    }
    let pair = args.inverse.unwrap_or_default();
    if args.bounds.k.is_some() || args.bounds.l.is_some() {
        return Err(CliError::usage("--k/--l apply to --forward only; --inverse reads the shape from the tableaux"));
    }
    let parse = |which: &str, text: &str| -> Result<Vec<Vec<i64>>, CliError> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("tableau {which} is not a JSON matrix of integers: {e}")).into())
    };
    let r = parse("R", &pair[0])?;
    let v = parse("V", &pair[1])?;
    let p = phi_inverse_matrices(&r, &v)?;
    let l = r.len();
    let k = r.first().map_or(0, Vec::len);
    Ok(Output::Json(json!({
        "k": k,
        "ℓ": l,
        "permutation": p,
        "lis": lis_length(&p),
        "lds": lds_length(&p),
    })))
}

fn enumerate(
    ctx: &Context,
    k: usize,
    l: usize,
    limit: Option<usize>,
    offset: usize,
    format: Format,
) -> Result<Output, CliError> {
    let all = enumerate_extremal_with(k, l, ctx.budget()?, ctx.exec)?;
    let total = all.len();
    let page: Vec<(usize, CyclicPermutation)> = all
        .into_iter()
        .enumerate()
        .skip(offset)
        .take(limit.unwrap_or(usize::MAX))
        .collect();

    if format == Format::Csv {
        #[derive(Serialize)]
        struct Row {
            index: usize,
            cycle: String,
        }
        return write_csv(page.iter().map(|(i, c)| Row { index: i + 1, cycle: c.to_string() }));
    }
    let cycles: Vec<&CyclicPermutation> = page.iter().map(|(_, c)| c).collect();
    Ok(Output::Json(json!({
        "k": k,
        "ℓ": l,
        "length": alpha(k, l)? - 1,
        "total": total,
        "cycles": cycles,
    })))
}

fn verify_alpha(ctx: &Context, k: usize, l: usize) -> Result<Output, CliError> {
    let budget = ctx.budget()?;
    let report = verify_alpha_exhaustive_with(k, l, budget, ctx.exec)?;
    // Cross-check the raw scan against the tableau route when that route is
    // defined and affordable.
    let agrees = enumerate_extremal_with(k, l, budget, ctx.exec)
        .ok()
        .map(|via_tableaux| via_tableaux == report.survivors);
    let mut doc = to_json(&report);
    doc["survivor_count"] = json!(report.survivor_count());
    doc["tableau_route_agrees"] = json!(agrees);
    Ok(Output::Json(doc))
}

fn parse_lengths(text: &str) -> Result<Vec<usize>, CliError> {
    let lengths: Vec<usize> = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| CliError::usage(format!("cycle length {:?} must be a positive integer", tok.trim())))
        })
        .collect::<Result<_, _>>()?;
    Ok(lengths)
}

fn estimate(ctx: &Context, n: &str, samples: usize, seed: u64, format: Format) -> Result<Output, CliError> {
    let lengths = parse_lengths(n)?;
    if samples == 0 {
        return Err(CliError::usage("samples must be at least 1"));
    }
    let estimates: Vec<MuEstimate> = lengths
        .iter()
        .map(|&n| estimate_mu_with(n, samples, seed, ctx.exec))
        .collect();
    match format {
        Format::Csv => write_csv(estimates.iter()),
        Format::Json if estimates.len() == 1 => Ok(Output::Json(to_json(&estimates[0]))),
        Format::Json => Ok(Output::Json(json!({ "estimates": estimates }))),
    }
}

fn grid_export(text: &str, bounds: OptionalBounds) -> Result<Output, CliError> {
    let (values, _) = parse_values(text)?;
    let p = Permutation::from_signed(&values)?;
    let (k, l) = resolve_bounds(&p, bounds)?;
    Ok(Output::Json(to_json(&grid_drawing(&p, k, l)?)))
}

fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<Output, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| CliError { code: 1, kind: "Io".into(), message: e.to_string() })?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError { code: 1, kind: "Io".into(), message: e.to_string() })?;
    Ok(Output::Csv(String::from_utf8(bytes).expect("csv output is UTF-8")))
}
