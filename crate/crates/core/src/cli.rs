//! Command-line front end. [`run`] returns the rendered report and the exit
//! code so that tests can drive it without spawning a process.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or input error, 3 budget
//! exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::codes::{
    code_params, hilbert_by_rank, singleton_check, MinDistance, DEFAULT_DIST_BUDGET,
    DEFAULT_MATRIX_BUDGET,
};
use crate::cyclegraph::{
    cardinality_formula, enumerate_toric_set, CycleFamilySpec, DEFAULT_ENUM_BUDGET,
};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::hilbert::{
    degenerate_torus_hilbert, hilbert_footprint_table, hilbert_union_formula,
    regularity_bruteforce, regularity_formula, solve_betas,
};
use crate::ideal::build_generators;
use crate::poly::{first_failing_pair, MonomialOrder};
use crate::{Count, Integer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "oddcycle",
    version,
    about = "Toric sets of odd-cycle families over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "plain")]
    pub format: Format,
    /// Work limit for enumerating X*.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BUDGET)]
    pub enum_budget: u128,
    /// Message-count limit for exact minimum distance.
    #[arg(long, global = true, default_value_t = DEFAULT_DIST_BUDGET)]
    pub dist_budget: u128,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Field size: an odd prime up to 65521 or 2^e with e <= 8.
    #[arg(long)]
    pub q: u64,
    /// Cycle family such as "5" or "3x2,5".
    #[arg(long)]
    pub spec: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the points of X*.
    Enumerate(Target),
    /// |X*| from the closed form and from enumeration.
    Card(Target),
    /// Print the generators of I(X*).
    Ideal(Target),
    /// Check the generators against Buchberger's criterion.
    GroebnerCheck(Target),
    /// Hilbert function table.
    Hilbert {
        #[command(flatten)]
        target: Target,
        /// Last degree; defaults to the regularity index plus one.
        #[arg(long)]
        dmax: Option<u32>,
        /// Add the evaluation-matrix rank column.
        #[arg(long)]
        rank: bool,
    },
    /// Regularity index: closed form and first degree where H reaches |X*|.
    Regularity(Target),
    /// Coefficients of H over the degenerate tori of a single cycle.
    Betas(Target),
    /// Parameters of the evaluation code of degree d.
    Code {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        d: u32,
    },
    /// Recompute the worked q = 5 pentagon example.
    Selftest,
}

/// Rendered report plus process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome {
            text,
            code: EXIT_OK,
        }
    }

    fn check(text: String, passed: bool) -> Outcome {
        Outcome {
            text,
            code: if passed { EXIT_OK } else { EXIT_CHECK },
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::UnsupportedField(_)
        | Error::UnsupportedSpec(_)
        | Error::Parse { .. }
        | Error::Oddity(_)
        | Error::Multiplicity(_) => EXIT_USAGE,
        _ => EXIT_CHECK,
    }
}

struct Resolved {
    field: Field,
    spec: CycleFamilySpec,
}

fn resolve(t: &Target) -> Result<Resolved> {
    Ok(Resolved {
        field: Field::new(t.q)?,
        spec: parse_spec_string(&t.spec)?,
    })
}

pub fn parse_spec_string(s: &str) -> Result<CycleFamilySpec> {
    s.parse()
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn int_json(v: &Integer) -> Value {
    v.to_i64()
        .map_or_else(|| Value::String(v.to_string()), Value::from)
}

fn count_json(v: &Count) -> Value {
    v.to_u64()
        .map_or_else(|| Value::String(v.to_string()), Value::from)
}

/// Runs one parsed command. Errors become an outcome with the matching exit code.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome {
            text: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Enumerate(t) => enumerate_cmd(&resolve(t)?, fmt, cli.enum_budget),
        Command::Card(t) => card_cmd(&resolve(t)?, fmt, cli.enum_budget),
        Command::Ideal(t) => ideal_cmd(&resolve(t)?, fmt),
        Command::GroebnerCheck(t) => groebner_cmd(&resolve(t)?, fmt),
        Command::Hilbert { target, dmax, rank } => {
            hilbert_cmd(&resolve(target)?, fmt, *dmax, *rank, cli.enum_budget)
        }
        Command::Regularity(t) => regularity_cmd(&resolve(t)?, fmt, cli.enum_budget),
        Command::Betas(t) => betas_cmd(&resolve(t)?, fmt),
        Command::Code { target, d } => code_cmd(
            &resolve(target)?,
            target,
            fmt,
            *d,
            cli.enum_budget,
            cli.dist_budget,
        ),
        Command::Selftest => Ok(selftest()),
    }
}

fn enumerate_cmd(r: &Resolved, fmt: Format, budget: u128) -> Result<Outcome> {
    let x = enumerate_toric_set(&r.spec, &r.field, budget)?;
    let text = match fmt {
        Format::Plain => x.to_text(),
        Format::Csv => x.to_text().replace(' ', ","),
        Format::Json => {
            let pts: Vec<Vec<u32>> = x
                .points()
                .map(|p| p.iter().map(|c| c.index()).collect())
                .collect();
            render_json(&json!({ "q": r.field.q(), "spec": r.spec.to_string(), "points": pts }))
        }
    };
    Ok(Outcome::ok(text))
}

fn card_cmd(r: &Resolved, fmt: Format, budget: u128) -> Result<Outcome> {
    let formula = cardinality_formula(&r.spec, r.field.q() as u64);
    let x = enumerate_toric_set(&r.spec, &r.field, budget)?;
    let enumerated = Count::from(x.len());
    let agree = formula == enumerated;
    let text = match fmt {
        Format::Plain => format!("formula {formula}, enumerated {enumerated}, agree={agree}\n"),
        Format::Csv => format!("formula,enumerated,agree\n{formula},{enumerated},{agree}\n"),
        Format::Json => render_json(&json!({
            "q": r.field.q(),
            "spec": r.spec.to_string(),
            "formula": count_json(&formula),
            "enumerated": count_json(&enumerated),
            "agree": agree,
        })),
    };
    Ok(Outcome::check(text, agree))
}

fn ideal_cmd(r: &Resolved, fmt: Format) -> Result<Outcome> {
    let gens = build_generators(&r.spec, &r.field);
    let text = match fmt {
        Format::Plain | Format::Csv => gens.to_text(&r.field),
        Format::Json => {
            let list: Vec<String> = gens.to_text(&r.field).lines().map(str::to_string).collect();
            render_json(
                &json!({ "q": r.field.q(), "spec": r.spec.to_string(), "generators": list }),
            )
        }
    };
    Ok(Outcome::ok(text))
}

fn groebner_cmd(r: &Resolved, fmt: Format) -> Result<Outcome> {
    let gens = build_generators(&r.spec, &r.field);
    let polys = gens.polynomials(&r.field);
    let failure = first_failing_pair(&polys, &r.field)?;
    let ok = failure.is_none();
    let detail = failure
        .as_ref()
        .map(|(i, j, rem)| (*i, *j, rem.render(&r.field)));
    let text = match fmt {
        Format::Plain => match &detail {
            None => format!("groebner=true generators={}\n", polys.len()),
            Some((i, j, rem)) => format!("groebner=false pair=({i},{j}) remainder={rem}\n"),
        },
        Format::Csv => match &detail {
            None => format!("groebner,generators\ntrue,{}\n", polys.len()),
            Some((i, j, rem)) => format!("groebner,i,j,remainder\nfalse,{i},{j},{rem}\n"),
        },
        Format::Json => {
            let mut v = json!({
                "q": r.field.q(),
                "spec": r.spec.to_string(),
                "order": MonomialOrder::Grlex.name(),
                "generators": polys.len(),
                "groebner": ok,
            });
            if let Some((i, j, rem)) = detail {
                v["failing_pair"] = json!([i, j]);
                v["remainder"] = json!(rem);
            }
            render_json(&v)
        }
    };
    Ok(Outcome::check(text, ok))
}

/// First degree at which the footprint count reaches the closed-form `|X*|`.
fn footprint_stabilization(r: &Resolved) -> u32 {
    let card = cardinality_formula(&r.spec, r.field.q() as u64);
    let top = r.spec.edge_count() as u32 * (r.field.q() - 2);
    let t = hilbert_footprint_table(&r.spec, &r.field, top);
    t.values
        .iter()
        .position(|v| *v == card)
        .unwrap_or(top as usize) as u32
}

fn hilbert_cmd(
    r: &Resolved,
    fmt: Format,
    dmax: Option<u32>,
    rank: bool,
    budget: u128,
) -> Result<Outcome> {
    let reg = match regularity_formula(&r.spec, r.field.q() as u64) {
        Some(v) => v as u32,
        None => footprint_stabilization(r),
    };
    let dmax = dmax.unwrap_or(reg + 1);
    let footprint = hilbert_footprint_table(&r.spec, &r.field, dmax);
    // The union formula covers one cycle with 2 | q - 1; elsewhere the column is empty.
    let union: Option<Vec<Count>> = match r.spec.single_cycle() {
        Some(k) => (0..=dmax)
            .map(|d| hilbert_union_formula(k, &r.field, d))
            .collect::<Result<_>>()
            .ok(),
        None => None,
    };
    let ranks = if rank {
        let x = enumerate_toric_set(&r.spec, &r.field, budget)?;
        Some(hilbert_by_rank(&x, dmax, DEFAULT_MATRIX_BUDGET)?.values)
    } else {
        None
    };
    let mut agree = true;
    let mut rows = Vec::new();
    for d in 0..=dmax as usize {
        let f = &footprint.values[d];
        let u = union.as_ref().map(|u| &u[d]);
        let k = ranks.as_ref().map(|k| &k[d]);
        agree &= u.is_none_or(|u| u == f) && k.is_none_or(|k| k == f);
        rows.push((d, f, u, k));
    }
    let opt = |v: Option<&Count>| v.map_or(String::new(), |c| c.to_string());
    let text = match fmt {
        Format::Plain | Format::Csv => {
            let sep = if fmt == Format::Csv { "," } else { " " };
            let mut s = String::new();
            let mut header = vec!["d", "footprint", "union"];
            if rank {
                header.push("rank");
            }
            writeln!(s, "{}", header.join(sep)).unwrap();
            for (d, f, u, k) in &rows {
                let mut cells = vec![d.to_string(), f.to_string(), opt(*u)];
                if rank {
                    cells.push(opt(*k));
                }
                let line = cells.join(sep);
                writeln!(
                    s,
                    "{}",
                    if fmt == Format::Plain {
                        line.trim_end().to_string()
                    } else {
                        line
                    }
                )
                .unwrap();
            }
            s
        }
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|(d, f, u, k)| {
                    let mut v =
                        json!({ "d": d, "footprint": count_json(f), "union": u.map(count_json) });
                    if rank {
                        v["rank"] = json!(k.map(count_json));
                    }
                    v
                })
                .collect();
            render_json(
                &json!({ "q": r.field.q(), "spec": r.spec.to_string(), "table": table, "agree": agree }),
            )
        }
    };
    Ok(Outcome::check(text, agree))
}

fn regularity_cmd(r: &Resolved, fmt: Format, budget: u128) -> Result<Outcome> {
    let formula = regularity_formula(&r.spec, r.field.q() as u64);
    let brute = regularity_bruteforce(&r.spec, &r.field, budget)?;
    let agree = formula.is_none_or(|f| f == brute);
    let shown = formula.map_or_else(|| "n/a".to_string(), |f| f.to_string());
    let text = match fmt {
        Format::Plain => format!("formula {shown}, brute-force {brute}, agree={agree}\n"),
        Format::Csv => format!(
            "formula,brute_force,agree\n{},{brute},{agree}\n",
            formula.map_or(String::new(), |f| f.to_string())
        ),
        Format::Json => render_json(&json!({
            "q": r.field.q(),
            "spec": r.spec.to_string(),
            "formula": formula,
            "brute_force": brute,
            "agree": agree,
        })),
    };
    Ok(Outcome::check(text, agree))
}

fn betas_cmd(r: &Resolved, fmt: Format) -> Result<Outcome> {
    let k = r.spec.single_cycle().ok_or_else(|| {
        Error::UnsupportedSpec(format!("betas need a single cycle, got {}", r.spec))
    })?;
    let b = solve_betas(k, &r.field, &[])?;
    let text = match fmt {
        Format::Plain => {
            let vals: Vec<String> = b.betas.iter().map(|v| v.to_string()).collect();
            format!(
                "betas ({}), verified through d = {}\n",
                vals.join(", "),
                b.verified_through
            )
        }
        Format::Csv => {
            let mut s = "i,beta\n".to_string();
            for (i, v) in b.betas.iter().enumerate() {
                writeln!(s, "{i},{v}").unwrap();
            }
            s
        }
        Format::Json => {
            let betas: Vec<Value> = b.betas.iter().map(int_json).collect();
            render_json(
                &json!({ "k": b.k, "q": b.q, "betas": betas, "verified_through": b.verified_through }),
            )
        }
    };
    Ok(Outcome::ok(text))
}

fn code_cmd(
    r: &Resolved,
    t: &Target,
    fmt: Format,
    d: u32,
    enum_budget: u128,
    dist_budget: u128,
) -> Result<Outcome> {
    let x = enumerate_toric_set(&r.spec, &r.field, enum_budget)?;
    let p = code_params(&x, d, dist_budget)?;
    let singleton = singleton_check(&p);
    let passed = singleton != Some(false);
    let text = match fmt {
        Format::Plain => {
            let dist = match p.min_distance {
                MinDistance::Exact(v) => v.to_string(),
                MinDistance::Bracket { lower, upper } => format!("[{lower}, {upper}]"),
            };
            let ok = singleton.map_or("n/a".to_string(), |b| b.to_string());
            format!(
                "n {}, dimension {}, min distance {dist}, singleton_ok={ok}\n",
                p.n, p.dimension
            )
        }
        Format::Csv => {
            let (lo, hi) = match p.min_distance {
                MinDistance::Exact(v) => (v, v),
                MinDistance::Bracket { lower, upper } => (lower, upper),
            };
            let ok = singleton.map_or(String::new(), |b| b.to_string());
            format!(
                "n,dimension,distance_lower,distance_upper,singleton_ok\n{},{},{lo},{hi},{ok}\n",
                p.n, p.dimension
            )
        }
        Format::Json => {
            let mut v = json!({
                "q": p.q,
                "spec": t.spec,
                "d": p.d,
                "n": p.n,
                "dimension": p.dimension,
                "singleton_ok": singleton,
            });
            match p.min_distance {
                MinDistance::Exact(delta) => v["min_distance"] = json!(delta),
                MinDistance::Bracket { lower, upper } => {
                    v["min_distance_bracket"] = json!([lower, upper])
                }
            }
            render_json(&v)
        }
    };
    Ok(Outcome::check(text, passed))
}

/// The pentagon over F_5: footprint, degenerate tori, betas, regularity, size
/// and the Gröbner property, against fixed values.
pub fn selftest() -> Outcome {
    let mut lines = Vec::new();
    let mut all = true;
    let mut record = |name: &str, got: String, want: &str| {
        let ok = got == want;
        all &= ok;
        lines.push(format!(
            "{} {name}: {got}{}",
            if ok { "ok" } else { "FAIL" },
            if ok {
                String::new()
            } else {
                format!(" (want {want})")
            }
        ));
    };
    let run = || -> Result<Vec<(&'static str, String, &'static str)>> {
        let field = Field::new(5)?;
        let spec = CycleFamilySpec::cycle(5)?;
        let h = hilbert_footprint_table(&spec, &field, 9);
        let at = |d: usize| h.values[d].to_string();
        let tori = |i: u32| -> Result<String> {
            let v: Vec<String> = [1, 2, 9]
                .iter()
                .map(|&d| degenerate_torus_hilbert(i, 5, &field, d).map(|c| c.to_string()))
                .collect::<Result<_>>()?;
            Ok(v.join(","))
        };
        let betas = solve_betas(5, &field, &[1, 2, 9])?;
        let betas: Vec<String> = betas.betas.iter().map(|b| b.to_string()).collect();
        let x = enumerate_toric_set(&spec, &field, DEFAULT_ENUM_BUDGET)?;
        let gens = build_generators(&spec, &field);
        let groebner = first_failing_pair(&gens.polynomials(&field), &field)?.is_none();
        Ok(vec![
            (
                "H(1),H(2),H(9)",
                format!("{},{},{}", at(1), at(2), at(9)),
                "6,21,512",
            ),
            ("H_X2(1,2,9)", tori(2)?, "6,18,128"),
            ("H_X1(1,2,9)", tori(1)?, "6,17,64"),
            ("H_X0(1,2,9)", tori(0)?, "6,16,32"),
            ("betas", betas.join(","), "6,-15,10"),
            (
                "reg formula",
                regularity_formula(&spec, 5).map_or("n/a".into(), |v| v.to_string()),
                "9",
            ),
            (
                "reg brute-force",
                regularity_bruteforce(&spec, &field, DEFAULT_ENUM_BUDGET)?.to_string(),
                "9",
            ),
            ("|X*|", x.len().to_string(), "512"),
            ("groebner", groebner.to_string(), "true"),
        ])
    };
    match run() {
        Ok(checks) => {
            for (name, got, want) in checks {
                record(name, got, want);
            }
        }
        Err(e) => {
            all = false;
            lines.push(format!("FAIL error: {e}"));
        }
    }
    let mut text = lines.join("\n");
    text.push('\n');
    Outcome::check(text, all)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            Outcome {
                text: e.to_string(),
                code,
            }
        }
    }
}
