//! `pfpoly` — exact computations on parking function polytopes.
//!
//! Every subcommand takes the polytope either as `--u a,b,c` (the defining
//! vector, entries `p` or `p/q`) or as `--m` plus `--d` (multiplicity and
//! data vectors).  Output is JSON by default (`--format csv` for flat rows)
//! and is byte-identical across runs.  Exit codes: 0 success, 2 invalid
//! input, 3 unsupported computation for this input, 4 oracle disagreement
//! (from `check`).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pfpoly_core::ehrhart::{ehrhart_polynomial, minkowski_hypersimplex, volume};
use pfpoly_core::enumerative::h_polynomial;
use pfpoly_core::oracle::{is_extreme, lattice_count, oracle_f_vector, oracle_is_facet};
use pfpoly_core::point::Point;
use pfpoly_core::poly::{parse_rational, rat_int, rational_to_string, Rational};
use pfpoly_core::polytope::{
    f_vector, face_poset, facets, inequality_description, is_simple, is_simplicial_polytope,
    locate_vertex, rays, vertices, MDPair, UVector,
};

#[derive(Parser)]
#[command(name = "pfpoly", version, about = "Exact parking function polytope computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckLevel {
    Quick,
    Full,
}

#[derive(Args)]
struct InputArgs {
    /// Defining vector u as comma-separated rationals, e.g. `0,1,5/2`.
    #[arg(long)]
    u: Option<String>,
    /// Multiplicity vector m as comma-separated integers (alternative to --u).
    #[arg(long)]
    m: Option<String>,
    /// Data vector d as comma-separated increasing positive rationals (with --m).
    #[arg(long)]
    d: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Parallelism hint; execution is single-threaded and the output does
    /// not depend on this value (PFPOLY_JOBS is the env fallback).
    #[arg(long)]
    jobs: Option<String>,
    /// Override the size guards on expensive enumerations.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// All vertices of PF(u), sorted lexicographically.
    Vertices(InputArgs),
    /// The irredundant facet inequalities of PF(u).
    Facets(InputArgs),
    /// The rays of the normal fan of PF(u).
    Rays(InputArgs),
    /// The f-vector (f_0, ..., f_n) of PF(u).
    Fvector(InputArgs),
    /// The h-polynomial of PF(u) (simple polytopes only).
    Hpoly(InputArgs),
    /// The Ehrhart polynomial of PF(u) (integral u only).
    Ehrhart {
        #[command(flatten)]
        input: InputArgs,
        /// Evaluate at this dilation instead of printing coefficients.
        #[arg(long)]
        t: Option<u32>,
    },
    /// The normalized volume of PF(u).
    Volume(InputArgs),
    /// The Minkowski decomposition of PF(u) into dilated PF(1,...,1) pieces.
    Decompose(InputArgs),
    /// The full face poset of PF(u).
    Faceposet(InputArgs),
    /// The MD pair of u and the simple/simplicial classification.
    Classify(InputArgs),
    /// The vertex type maximized by a linear functional c.
    Locate {
        #[command(flatten)]
        input: InputArgs,
        /// The functional as comma-separated rationals (length n).
        #[arg(long)]
        c: String,
    },
    /// Cross-check the formulas against the brute-force oracles.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "quick")]
        level: CheckLevel,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn invalid(msg: impl Into<String>) -> Failure {
        Failure { code: 2, msg: msg.into() }
    }

    fn unsupported(msg: impl Into<String>) -> Failure {
        Failure { code: 3, msg: msg.into() }
    }
}

fn parse_rational_list(s: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',')
        .map(|tok| {
            parse_rational(tok.trim())
                .map_err(|e| Failure::invalid(format!("bad {what} entry {tok:?}: {e}")))
        })
        .collect()
}

/// Resolves --u or --m/--d to the MD pair (the combinatorial data).
fn resolve_md(input: &InputArgs) -> Result<MDPair, Failure> {
    match (&input.u, &input.m) {
        (Some(_), Some(_)) => Err(Failure::invalid("give either --u or --m, not both")),
        (Some(u), None) => {
            if input.d.is_some() {
                return Err(Failure::invalid("--d only applies together with --m"));
            }
            let entries = parse_rational_list(u, "u")?;
            Ok(UVector::new(entries).map_err(|e| Failure::invalid(e.0))?.md_pair())
        }
        (None, Some(m)) => {
            let m: Vec<u32> = m
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Failure::invalid(format!("bad m entry {tok:?}")))
                })
                .collect::<Result<_, _>>()?;
            let d = match &input.d {
                Some(d) => parse_rational_list(d, "d")?,
                // Unit data d = (1, ..., ell) when only the type matters.
                None => (1..m.len() as i64).map(rat_int).collect(),
            };
            Ok(MDPair::new(m, d).map_err(|e| Failure::invalid(e.0))?)
        }
        (None, None) => Err(Failure::invalid("missing input: give --u or --m (with --d)")),
    }
}

fn resolve_u(input: &InputArgs) -> Result<UVector, Failure> {
    Ok(resolve_md(input)?.u())
}

/// Validates --jobs / PFPOLY_JOBS; the value itself is unused because all
/// enumerations are single-threaded and canonically ordered.
fn validate_jobs(input: &InputArgs) -> Result<(), Failure> {
    let spec = input
        .jobs
        .clone()
        .or_else(|| std::env::var("PFPOLY_JOBS").ok());
    if let Some(spec) = spec {
        let k: usize = spec
            .trim()
            .parse()
            .map_err(|_| Failure::invalid(format!("bad --jobs value {spec:?}")))?;
        if k == 0 {
            return Err(Failure::invalid("--jobs must be positive"));
        }
    }
    Ok(())
}

fn guard(n: u32, limit: u32, what: &str, force: bool) -> Result<(), Failure> {
    if n > limit && !force {
        return Err(Failure::invalid(format!(
            "{what} refused for n = {n} > {limit}; pass --force to override"
        )));
    }
    Ok(())
}

fn points_json(pts: &[Point]) -> Value {
    Value::Array(
        pts.iter()
            .map(|p| {
                Value::Array(p.coords().iter().map(|c| json!(rational_to_string(c))).collect())
            })
            .collect(),
    )
}

fn points_csv(pts: &[Point]) -> String {
    pts.iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(rational_to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn strings_output(parts: &[String], format: Format) -> String {
    match format {
        Format::Json => Value::Array(parts.iter().map(|s| json!(s)).collect()).to_string(),
        Format::Csv => parts.join(","),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let (input, result) = match &cli.command {
        Command::Vertices(input) => {
            let md = resolve_md(input)?;
            guard(md.n(), 12, "vertex enumeration", input.force)?;
            let v = vertices(&md);
            let out = match input.format {
                Format::Json => points_json(&v).to_string(),
                Format::Csv => points_csv(&v),
            };
            (input, out)
        }
        Command::Facets(input) => {
            let u = resolve_u(input)?;
            let fs = facets(&u);
            let out = match input.format {
                Format::Json => Value::Array(
                    fs.iter()
                        .map(|q| {
                            json!({
                                "coeffs": q.coeffs.iter().map(rational_to_string).collect::<Vec<_>>(),
                                "rhs": rational_to_string(&q.rhs),
                                "facet": q.facet,
                            })
                        })
                        .collect(),
                )
                .to_string(),
                Format::Csv => fs
                    .iter()
                    .map(|q| {
                        let mut row: Vec<String> =
                            q.coeffs.iter().map(rational_to_string).collect();
                        row.push(rational_to_string(&q.rhs));
                        row.join(",")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            (input, out)
        }
        Command::Rays(input) => {
            let md = resolve_md(input)?;
            let r = rays(&md);
            let out = match input.format {
                Format::Json => points_json(&r).to_string(),
                Format::Csv => points_csv(&r),
            };
            (input, out)
        }
        Command::Fvector(input) => {
            let md = resolve_md(input)?;
            let f: Vec<String> = f_vector(&md).iter().map(|x| x.to_string()).collect();
            (input, strings_output(&f, input.format))
        }
        Command::Hpoly(input) => {
            let md = resolve_md(input)?;
            let h = h_polynomial(&md).map_err(|e| Failure::unsupported(e.0))?;
            let cs: Vec<String> = h.coeffs().iter().map(rational_to_string).collect();
            (input, strings_output(&cs, input.format))
        }
        Command::Ehrhart { input, t } => {
            let u = resolve_u(input)?;
            guard(u.n() as u32, 6, "draconian enumeration", input.force)?;
            let i = ehrhart_polynomial(&u).map_err(|e| Failure::unsupported(e.0))?;
            let out = match t {
                Some(t) => {
                    let value = rational_to_string(&i.eval(&rat_int(*t as i64)));
                    match input.format {
                        Format::Json => json!(value).to_string(),
                        Format::Csv => value,
                    }
                }
                None => {
                    let cs: Vec<String> =
                        (0..=u.n()).map(|k| rational_to_string(&i.coeff(k))).collect();
                    strings_output(&cs, input.format)
                }
            };
            (input, out)
        }
        Command::Volume(input) => {
            let u = resolve_u(input)?;
            guard(u.n() as u32, 6, "draconian enumeration", input.force)?;
            let v = rational_to_string(&volume(&u));
            let out = match input.format {
                Format::Json => json!(v).to_string(),
                Format::Csv => v,
            };
            (input, out)
        }
        Command::Decompose(input) => {
            let u = resolve_u(input)?;
            guard(u.n() as u32, 6, "draconian enumeration", input.force)?;
            let dec = minkowski_hypersimplex(&u);
            let ehr = if u.is_integral() {
                let i = ehrhart_polynomial(&u).map_err(|e| Failure::unsupported(e.0))?;
                Some(
                    (0..=u.n())
                        .map(|k| rational_to_string(&i.coeff(k)))
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            let vol = rational_to_string(&volume(&u));
            let out = match input.format {
                Format::Json => json!({
                    "ehrhart": ehr,
                    "volume": vol,
                    "decomposition": dec
                        .iter()
                        .map(|(k, y)| json!({"size": k, "y": rational_to_string(y)}))
                        .collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut rows = vec![format!("volume,{vol}")];
                    if let Some(ehr) = &ehr {
                        rows.push(format!("ehrhart,{}", ehr.join(",")));
                    }
                    for (k, y) in &dec {
                        rows.push(format!("summand,{k},{}", rational_to_string(y)));
                    }
                    rows.join("\n")
                }
            };
            (input, out)
        }
        Command::Faceposet(input) => {
            let md = resolve_md(input)?;
            guard(md.n(), 12, "face poset enumeration", input.force)?;
            let fp = face_poset(&md);
            let out = match input.format {
                Format::Json => json!({
                    "nodes": fp
                        .nodes
                        .iter()
                        .map(|(b, d)| json!({"partition": b.to_string(), "dim": d}))
                        .collect::<Vec<_>>(),
                    "covers": fp.covers,
                })
                .to_string(),
                Format::Csv => {
                    let mut rows: Vec<String> = fp
                        .nodes
                        .iter()
                        .enumerate()
                        .map(|(i, (b, d))| format!("node,{i},{d},\"{b}\""))
                        .collect();
                    rows.extend(fp.covers.iter().map(|(i, j)| format!("cover,{i},{j}")));
                    rows.join("\n")
                }
            };
            (input, out)
        }
        Command::Classify(input) => {
            let md = resolve_md(input)?;
            let d: Vec<String> = md.d().iter().map(rational_to_string).collect();
            let simple = is_simple(&md);
            let simplicial = is_simplicial_polytope(&md);
            let out = match input.format {
                Format::Json => json!({
                    "m": md.m(),
                    "d": d,
                    "simple": simple,
                    "simplicial": simplicial,
                })
                .to_string(),
                Format::Csv => {
                    let m: Vec<String> = md.m().iter().map(|x| x.to_string()).collect();
                    [
                        format!("m,{}", m.join(",")),
                        format!("d,{}", d.join(",")),
                        format!("simple,{simple}"),
                        format!("simplicial,{simplicial}"),
                    ]
                    .join("\n")
                }
            };
            (input, out)
        }
        Command::Locate { input, c } => {
            let md = resolve_md(input)?;
            let c = parse_rational_list(c, "c")?;
            if c.len() != md.n() as usize {
                return Err(Failure::invalid(format!(
                    "functional has {} entries but n = {}",
                    c.len(),
                    md.n()
                )));
            }
            let b = locate_vertex(&md, &c);
            let out = match input.format {
                Format::Json => json!(b.to_string()).to_string(),
                Format::Csv => b.to_string(),
            };
            (input, out)
        }
        Command::Check { input, level } => {
            let out = run_check(input, *level)?;
            (input, out)
        }
    };
    validate_jobs(input)?;
    Ok(result)
}

/// Oracle agreement suites.  `quick` checks vertex extremeness, facet
/// flags, and two Ehrhart values; `full` adds dilations up to 3, the
/// f-vector against the incidence face lattice, and for n ≤ 3 the
/// Minkowski vertex-sum reconstruction.
fn run_check(input: &InputArgs, level: CheckLevel) -> Result<String, Failure> {
    let md = resolve_md(input)?;
    let u = md.u();
    let n = md.n();
    if level == CheckLevel::Full {
        guard(n, 6, "check --level full", input.force)?;
    }
    let mut checks: u64 = 0;
    let mut failures: Vec<String> = Vec::new();

    let verts = vertices(&md);
    // Each extremeness test is an exact LP over the whole vertex set, so
    // the quick level samples a deterministic prefix.
    let sample = match level {
        CheckLevel::Quick => verts.len().min(64),
        CheckLevel::Full => verts.len(),
    };
    for v in &verts[..sample] {
        checks += 1;
        if !is_extreme(v, &verts) {
            failures.push(format!("vertex {v} is not extreme"));
        }
    }

    let desc = inequality_description(&u);
    for q in &desc {
        checks += 1;
        if q.facet != oracle_is_facet(&verts, q) {
            failures.push(format!("facet flag mismatch on {q}"));
        }
    }

    // Draconian enumeration behind the Ehrhart formula explodes past
    // n = 6, so the comparison is restricted to where it is tractable.
    if u.is_integral() && n <= 6 {
        let i = ehrhart_polynomial(&u).expect("integral u");
        let ts: &[u32] = match level {
            CheckLevel::Quick => &[0, 1],
            CheckLevel::Full => &[0, 1, 2, 3],
        };
        for &t in ts {
            checks += 1;
            let counted = rat_int(lattice_count(&desc, t) as i64);
            if i.eval(&rat_int(t as i64)) != counted {
                failures.push(format!(
                    "ehrhart({t}) = {} but the oracle counts {}",
                    rational_to_string(&i.eval(&rat_int(t as i64))),
                    rational_to_string(&counted)
                ));
            }
        }
    }

    if level == CheckLevel::Full {
        checks += 1;
        let formula_f: Vec<u64> = f_vector(&md)
            .iter()
            .map(|x| x.to_string().parse().expect("f-vector entry fits in u64"))
            .collect();
        if formula_f != oracle_f_vector(&verts, &desc) {
            failures.push("f-vector disagrees with the incidence face lattice".into());
        }
        if n <= 3 {
            checks += 1;
            if let Some(rebuilt) = minkowski_reconstruction(&u) {
                if rebuilt != verts {
                    failures.push("Minkowski vertex sums do not reproduce the vertices".into());
                }
            }
        }
    }

    if !failures.is_empty() {
        return Err(Failure {
            code: 4,
            msg: format!("oracle disagreement: {}", failures.join("; ")),
        });
    }
    let level = match level {
        CheckLevel::Quick => "quick",
        CheckLevel::Full => "full",
    };
    Ok(match input.format {
        Format::Json => json!({"level": level, "checks": checks, "passed": true}).to_string(),
        Format::Csv => format!("level,{level}\nchecks,{checks}\npassed,true"),
    })
}

/// Rebuilds the vertex set of PF(u) by summing the hypersimplex-type
/// summands with the vertex-sum oracle; skipped (None) when a coefficient
/// is negative, where the decomposition is not a plain Minkowski sum.
fn minkowski_reconstruction(u: &UVector) -> Option<Vec<Point>> {
    let n = u.n() as u32;
    let dec = minkowski_hypersimplex(u);
    if dec.iter().any(|(_, y)| y < &rat_int(0)) {
        return None;
    }
    let mut acc = vec![Point::zero(n as usize)];
    for (k, y) in &dec {
        let ones = UVector::new(
            (0..n as usize)
                .map(|i| if i < n as usize - k { rat_int(0) } else { rat_int(1) })
                .collect(),
        )
        .expect("valid 0/1 vector");
        let summand: Vec<Point> = vertices(&ones.md_pair())
            .iter()
            .map(|p| p.scale(y))
            .collect();
        acc = pfpoly_core::oracle::minkowski_vertex_sum(&acc, &summand);
    }
    Some(acc)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
