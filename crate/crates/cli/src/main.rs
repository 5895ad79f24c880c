use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use pforge_core::error::InvariantError;
use pforge_core::field::CoefficientField;
use pforge_core::forge::{forge, ForgeConfig, ScanConfig, DEFAULT_MAX_ATTEMPTS};
use pforge_core::invariants as inv;
use pforge_core::pfaffian::{AnySkewMatrix, SkewMatrixJson};
use pforge_core::poly::{Polynomial, PolynomialJson};
use pforge_core::smooth::{count_points, singular_points};
use pforge_core::steiner::{ConstructionOptions, Registry};
use pforge_core::tables::{render_table1, render_table2};

#[derive(Parser)]
#[command(
    name = "pforge",
    version,
    about = "Pfaffian hypersurfaces and their numerical invariants"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a seeded instance, extract its form and scan for singular points.
    Forge(ForgeArgs),
    /// Print the rank/discriminant and charge tables as TSV.
    Tables {
        #[arg(long, value_enum, default_value = "all")]
        table: TableChoice,
    },
    /// Evaluate closed-form invariants.
    Invariants {
        #[command(subcommand)]
        target: InvariantTarget,
    },
    /// Scan a homogeneous polynomial for singular rational points.
    CheckSmooth(CheckSmoothArgs),
    /// Read a JSON skew matrix and print its Pfaffian.
    Pfaffian {
        /// JSON file; `-` or omitted reads stdin.
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// `Q`, a prime `p`, `F_p` or `F_p^2`.
    #[arg(long, default_value = "101")]
    field: String,
    /// Extension degree over the prime field (1 or 2).
    #[arg(long, default_value_t = 1)]
    ext: u32,
}

impl FieldArgs {
    fn resolve(&self) -> Result<CoefficientField, String> {
        let f: CoefficientField = self.field.parse().map_err(|e| format!("{e}"))?;
        match (self.ext, f.extension_degree()) {
            (1, _) => Ok(f),
            (2, 2) => Ok(f),
            (2, 1) if f.size().is_some() => {
                CoefficientField::quadratic(f.characteristic()).map_err(|e| e.to_string())
            }
            (e, _) => Err(format!("unsupported extension degree {e} over {f}")),
        }
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Largest `q^(n+1)` a scan may visit.
    #[arg(long, env = "PFORGE_BUDGET", default_value_t = 1_000_000_000)]
    budget: u128,
}

#[derive(Args)]
struct ForgeArgs {
    #[arg(long)]
    kind: String,
    /// Pfaffian degree for `linear-pfaffian`.
    #[arg(long)]
    degree: Option<usize>,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    budget: BudgetArg,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    max_attempts: u32,
    /// Skip the singular-point scan.
    #[arg(long)]
    no_scan: bool,
    /// Keep an instance with singular points instead of drawing again.
    #[arg(long)]
    keep_singular: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    All,
}

#[derive(Subcommand)]
enum InvariantTarget {
    /// Degree, chi(O_Y), Y^2 and canonical twist of the surface.
    Surface {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        k: i64,
    },
    /// Pfaffian lattice discriminant, from a kind or explicit Chern data.
    Delta {
        #[arg(long, conflicts_with_all = ["r", "e"])]
        kind: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        /// Half the rank of the bundle.
        #[arg(long, requires = "e")]
        r: Option<i64>,
        #[arg(long, default_value_t = 1)]
        l: i64,
        /// `e1,e2,e3,e4,e5`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e: Option<Vec<i64>>,
        /// Pfaffian degree; defaults to `r l - e1`.
        #[arg(long)]
        d: Option<i64>,
    },
    /// Largest admissible charge.
    Bound {
        #[arg(long)]
        d: i64,
    },
    /// Charge polynomial and the Gram lattice at `s = k`.
    Charge {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// Complete-intersection class check on a cubic fourfold.
    Ci {
        #[arg(long)]
        k: i64,
    },
    /// `chi(E(t))` and `c1` of an instanton.
    Chi {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 4)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        t: i64,
    },
    /// Ulrich moduli numerics.
    Ulrich {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        a: i64,
    },
    /// Dimension counts for linear Pfaffians.
    Locus {
        #[arg(long)]
        d: i64,
    },
}

#[derive(Args)]
struct CheckSmoothArgs {
    /// Polynomial text such as `1*x0^3 + 1*x1^3`; needs --vars.
    #[arg(long, conflicts_with = "input")]
    poly: Option<String>,
    #[arg(long, requires = "poly")]
    vars: Option<usize>,
    /// JSON polynomial file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    budget: BudgetArg,
    /// Only count points.
    #[arg(long)]
    count_only: bool,
}

struct Output {
    text: String,
    code: ExitCode,
}

impl Output {
    fn json<T: Serialize>(value: &T) -> Result<Self, String> {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        text.push('\n');
        Ok(Self {
            text,
            code: ExitCode::SUCCESS,
        })
    }
}

fn read_input(path: Option<&Path>) -> Result<String, String> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
    }
}

fn read_stdin() -> Result<String, String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| e.to_string())?;
    Ok(s)
}

fn cmd_forge(a: &ForgeArgs) -> Result<Output, String> {
    let registry = Registry::builtin();
    let construction = registry
        .create(&a.kind, &ConstructionOptions { degree: a.degree })
        .map_err(|e| {
            format!(
                "{e} (known kinds: {})",
                registry.names().collect::<Vec<_>>().join(", ")
            )
        })?;
    let field = a.field.resolve()?;
    let cfg = ForgeConfig {
        kind: construction.kind(),
        field,
        seed: a.seed,
        max_attempts: a.max_attempts,
        scan: (!a.no_scan).then(|| ScanConfig {
            budget: a.budget.budget,
            regenerate_singular: !a.keep_singular,
            ..ScanConfig::default()
        }),
    };
    let report = forge(&cfg).map_err(|e| e.to_string())?;
    let mut out = Output::json(&json!({ "command": "forge", "report": report }))?;
    if report.scan.report().is_some_and(|r| !r.is_clean()) {
        out.code = ExitCode::from(3);
    }
    Ok(out)
}

fn cmd_tables(t: TableChoice) -> Output {
    let text = match t {
        TableChoice::One => render_table1(),
        TableChoice::Two => render_table2(),
        TableChoice::All => format!("{}\n{}", render_table1(), render_table2()),
    };
    Output {
        text,
        code: ExitCode::SUCCESS,
    }
}

fn report(target: &str, formula: &[&str], inputs: Value, result: Value) -> Result<Output, String> {
    Output::json(&json!({
        "command": "invariants",
        "target": target,
        "formulas": formula,
        "inputs": inputs,
        "result": result,
    }))
}

fn to_value<T: Serialize>(v: T) -> Result<Value, String> {
    serde_json::to_value(v).map_err(|e| e.to_string())
}

fn cmd_invariants(t: &InvariantTarget) -> Result<Output, String> {
    let err = |e: InvariantError| e.to_string();
    match *t {
        InvariantTarget::Surface { d, s, k } => {
            let v = inv::surface_invariants(d, s, k).map_err(err)?;
            let lattice = inv::LatticeReport::from_gram(d, v.deg_y, v.y_squared).map_err(err)?;
            report(
                "surface",
                &[
                    "surface.degree",
                    "surface.chi",
                    "surface.self-intersection",
                    "surface.canonical",
                    "lattice.gram",
                ],
                json!({ "d": d, "s": s, "k": k }),
                json!({ "invariants": v, "lattice": lattice }),
            )
        }
        InvariantTarget::Delta {
            ref kind,
            degree,
            r,
            l,
            ref e,
            d,
        } => {
            let (params, inputs) = match (kind, r, e) {
                (Some(name), _, _) => {
                    let k = Registry::builtin()
                        .create(name, &ConstructionOptions { degree })
                        .map_err(|e| e.to_string())?
                        .kind();
                    let p = inv::steiner_type_params(k).map_err(err)?;
                    (p, json!({ "kind": name }))
                }
                (None, Some(r), Some(e)) => {
                    let chern: [i64; 5] = e
                        .as_slice()
                        .try_into()
                        .map_err(|_| "--e takes five values".to_string())?;
                    let mut p = inv::PfaffianTypeParams::with_expected_degree(r, l, chern);
                    if let Some(d) = d {
                        p.degree = d;
                    }
                    (p, json!({ "r": r, "l": l, "e": chern, "d": p.degree }))
                }
                _ => return Err("delta needs --kind or --r with --e".into()),
            };
            let v = inv::pfaffian_discriminant(&params).map_err(err)?;
            report(
                "delta",
                &[
                    "pfaffian.c2-h2",
                    "pfaffian.c2-squared",
                    "pfaffian.delta",
                    "lattice.gram",
                ],
                inputs,
                json!({ "params": params, "c2_h2": v.c2_h2, "c2_sq": v.c2_sq, "delta": v.delta }),
            )
        }
        InvariantTarget::Bound { d } => {
            let k = inv::charge_bound(d).map_err(err)?;
            report(
                "bound",
                &["charge.bound"],
                json!({ "d": d }),
                json!({ "k_max": k, "discriminant_at_bound": inv::charge_discriminant(d, k).to_string() }),
            )
        }
        InvariantTarget::Charge { d, k } => {
            let lattice = inv::LatticeReport::of_surface(d, k).map_err(err)?;
            report(
                "charge",
                &["charge.discriminant", "lattice.gram"],
                json!({ "d": d, "k": k }),
                json!({ "charge_discriminant": inv::charge_discriminant(d, k).to_string(), "lattice": lattice }),
            )
        }
        InvariantTarget::Ci { k } => report(
            "ci",
            &["ci.lambda", "ci.compatibility"],
            json!({ "k": k }),
            to_value(inv::ci_class_check(k))?,
        ),
        InvariantTarget::Chi { r, k, n, d, t } => {
            let chi = inv::chi_twist(r, k, n, d, t).map_err(err)?;
            report(
                "chi",
                &["instanton.c1", "instanton.chi"],
                json!({ "r": r, "k": k, "n": n, "d": d, "t": t }),
                json!({ "c1": inv::instanton_c1(r, d).to_string(), "chi": chi }),
            )
        }
        InvariantTarget::Ulrich { r, a } => report(
            "ulrich",
            &[
                "ulrich.moduli-dimension",
                "ulrich.delta",
                "ulrich.c3",
                "ulrich.c4",
            ],
            json!({ "r": r, "a": a }),
            to_value(inv::ulrich_numerics(r, a).map_err(err)?)?,
        ),
        InvariantTarget::Locus { d } => report(
            "locus",
            &["locus.dimensions"],
            json!({ "d": d }),
            to_value(inv::pfaffian_locus_dimension(d).map_err(err)?)?,
        ),
    }
}

fn cmd_check_smooth(a: &CheckSmoothArgs) -> Result<Output, String> {
    let f = match (&a.poly, &a.input) {
        (Some(text), _) => {
            let field = a.field.resolve()?;
            let vars = a.vars.ok_or("--poly needs --vars")?;
            Polynomial::parse(&field, vars, text).map_err(|e| e.to_string())?
        }
        (None, path) => {
            let raw = read_input(path.as_deref())?;
            let json: PolynomialJson = serde_json::from_str(&raw).map_err(|e| e.to_string())?;
            Polynomial::from_json(&json).map_err(|e| e.to_string())?
        }
    };
    if a.count_only {
        let n = count_points(&f, a.budget.budget).map_err(|e| e.to_string())?;
        return Output::json(
            &json!({ "command": "check-smooth", "field": f.field().to_string(), "count_on_hypersurface": n }),
        );
    }
    let r = singular_points(&f, a.budget.budget).map_err(|e| e.to_string())?;
    let mut out = Output::json(&json!({
        "command": "check-smooth",
        "verdict": r.verdict(),
        "report": r,
    }))?;
    if !r.is_clean() {
        out.code = ExitCode::from(3);
    }
    Ok(out)
}

fn cmd_pfaffian(input: Option<&Path>) -> Result<Output, String> {
    let raw = read_input(input)?;
    let json: SkewMatrixJson = serde_json::from_str(&raw).map_err(|e| e.to_string())?;
    let m = AnySkewMatrix::from_json(&json).map_err(|e| e.to_string())?;
    let pf = m.pfaffian_text().map_err(|e| e.to_string())?;
    Output::json(&json!({
        "command": "pfaffian",
        "size": json.size,
        "ring": json.ring,
        "pfaffian": pf,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Forge(a) => cmd_forge(a),
        Command::Tables { table } => Ok(cmd_tables(*table)),
        Command::Invariants { target } => cmd_invariants(target),
        Command::CheckSmooth(a) => cmd_check_smooth(a),
        Command::Pfaffian { input } => cmd_pfaffian(input.as_deref()),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(out.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    out.code
}
