//! Command-line front end: group presets, tree listings, one-shot
//! computations on JSON elements, abelian tables, and the verification
//! suites. All heavy lifting lives in the library; this binary only wires
//! arguments to it.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tatehh::abelian::{mhat1_closed, mhat2_closed, mhat3_closed, AbelianCochain};
use tatehh::decomp::{iota_hat, project, rho_hat, s_hat, DecomposedElement, DecomposedElementJson};
use tatehh::group::{ConjugacyData, FiniteGroup, GroupJson};
use tatehh::products::{cup, m3};
use tatehh::scalar::FieldSpec;
use tatehh::tate::{dprime, TateElement, TateElementJson};
use tatehh::transfer::mhat;
use tatehh::trees::{PlanarTree, SignPolicy};
use tatehh::verify::{self, VerifyConfig};

#[derive(Parser)]
#[command(name = "tatehh", version, about = "Tate-Hochschild complexes of finite group algebras, their additive decomposition, and transferred A-infinity operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect groups or list the available presets
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Planar {2,3}-ary rooted trees
    Trees {
        #[command(subcommand)]
        action: TreesAction,
    },
    /// One-shot computations on JSON elements
    Compute {
        #[command(subcommand)]
        op: ComputeOp,
    },
    /// Closed-form operation tables for abelian groups
    Abelian {
        #[command(subcommand)]
        action: AbelianAction,
    },
    /// Verification suites; exits nonzero when a check fails
    Verify {
        /// all | complex | retract | leibniz | m2 | stasheff | abelian | signs
        suite: String,
        #[command(flatten)]
        scope: Scope,
        #[arg(long, default_value_t = 3)]
        window: i32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Ground field: Q, F2, F3, ... (default: Q or $TATEHH_FIELD)
        #[arg(long)]
        field: Option<String>,
        /// Write the JSON report here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Emit reusable JSON descriptions (currently: groups)
    Export {
        #[command(subcommand)]
        what: ExportWhat,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// Order, abelianness, class and centralizer structure (JSON by
    /// default, --pretty for a readable table)
    Info {
        #[command(flatten)]
        scope: Scope,
        #[arg(long)]
        pretty: bool,
    },
    /// Names accepted by --preset
    List,
}

#[derive(Subcommand)]
enum TreesAction {
    /// All {2,3}-ary planar trees with the given number of leaves
    List { leaves: usize },
}

#[derive(Subcommand)]
enum AbelianAction {
    /// Tabulate a closed-form operation on every basis tuple
    Table {
        #[command(flatten)]
        scope: Scope,
        /// m1 | m2 | m3
        #[arg(long)]
        op: String,
        /// Input degrees, comma separated (one per operation slot)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degrees: Vec<i32>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum ExportWhat {
    Group {
        #[command(flatten)]
        scope: Scope,
    },
}

#[derive(Subcommand)]
enum ComputeOp {
    /// Sign-modified total differential of a Tate element
    Diff(ElementIo),
    /// Cup product of two Tate elements
    Cup(ElementIo),
    /// Ternary operation on three Tate elements
    M3(ElementIo),
    /// Transferred operation on decomposed elements (arity = input count)
    Mhat(ElementIo),
    /// Subcomplex components of a Tate element
    Decompose(ElementIo),
    /// Inclusion of a decomposed element into the total complex
    Iota(ElementIo),
    /// Projection of a Tate element onto the decomposition
    Rho(ElementIo),
    /// Homotopy of the retract
    S(ElementIo),
}

#[derive(Args)]
struct Scope {
    /// Preset name, e.g. S3, Z4, Z2xZ2, D4, Q8, Z6, Z2xZ3
    #[arg(long = "group", alias = "preset", conflicts_with = "group_file")]
    preset: Option<String>,
    /// Group JSON file {"name", "order", "table"}
    #[arg(long)]
    group_file: Option<PathBuf>,
}

#[derive(Args)]
struct ElementIo {
    #[command(flatten)]
    scope: Scope,
    /// Input element files, one per operation slot
    #[arg(long = "input", alias = "inputs", required = true)]
    inputs: Vec<PathBuf>,
    /// Expected arity; checked against the number of inputs when given
    #[arg(long)]
    n: Option<usize>,
    /// Ground field: Q, F2, F3, ... (default: Q or $TATEHH_FIELD)
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    pretty: bool,
}

fn parse_field(s: Option<&str>) -> Result<FieldSpec, String> {
    let value = match s {
        Some(v) => v.to_string(),
        None => std::env::var("TATEHH_FIELD").unwrap_or_else(|_| "Q".into()),
    };
    let v = value.trim();
    if v.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::rational());
    }
    let digits = v
        .strip_prefix('F')
        .or_else(|| v.strip_prefix('f'))
        .map(|r| r.trim_start_matches('p').trim_start_matches(':'))
        .ok_or_else(|| format!("unrecognized field {v:?} (use Q, F2, or Fp:2)"))?;
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("unrecognized field {v:?} (use Q or Fp)"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn load_group(scope: &Scope) -> Result<FiniteGroup, String> {
    match (&scope.preset, &scope.group_file) {
        (Some(name), _) => FiniteGroup::preset(name).map_err(|e| e.to_string()),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let j: GroupJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            FiniteGroup::from_json(&j).map_err(|e| e.to_string())
        }
        (None, None) => Err("provide --group or --group-file".into()),
    }
}

fn load_tate(group: &FiniteGroup, path: &PathBuf) -> Result<TateElement, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let j: TateElementJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    TateElement::from_json(group, &j).map_err(|e| e.to_string())
}

fn load_decomposed(cd: &ConjugacyData, path: &PathBuf) -> Result<DecomposedElement, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let j: DecomposedElementJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    DecomposedElement::from_json(cd, &j).map_err(|e| e.to_string())
}

fn emit<T: serde::Serialize>(value: &T, pretty: bool) -> Result<(), String> {
    let s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| e.to_string())?;
    println!("{s}");
    Ok(())
}

fn expect_arity(io: &ElementIo, n: usize) -> Result<(), String> {
    if io.inputs.len() == n {
        Ok(())
    } else {
        Err(format!("expected {n} --input files, got {}", io.inputs.len()))
    }
}

fn run_compute(op: &ComputeOp) -> Result<(), String> {
    let io = match op {
        ComputeOp::Diff(io)
        | ComputeOp::Cup(io)
        | ComputeOp::M3(io)
        | ComputeOp::Mhat(io)
        | ComputeOp::Decompose(io)
        | ComputeOp::Iota(io)
        | ComputeOp::Rho(io)
        | ComputeOp::S(io) => io,
    };
    if let Some(n) = io.n {
        if n != io.inputs.len() {
            return Err(format!("--n {n} but {} --input files given", io.inputs.len()));
        }
    }
    let group = load_group(&io.scope)?;
    let cd = ConjugacyData::new(&group);
    match op {
        ComputeOp::Diff(_) => {
            expect_arity(io, 1)?;
            let a = load_tate(&group, &io.inputs[0])?;
            emit(&dprime(&group, &a).to_json(), io.pretty)
        }
        ComputeOp::Cup(_) => {
            expect_arity(io, 2)?;
            let a = load_tate(&group, &io.inputs[0])?;
            let b = load_tate(&group, &io.inputs[1])?;
            emit(&cup(&group, &a, &b).to_json(), io.pretty)
        }
        ComputeOp::M3(_) => {
            expect_arity(io, 3)?;
            let a = load_tate(&group, &io.inputs[0])?;
            let b = load_tate(&group, &io.inputs[1])?;
            let c = load_tate(&group, &io.inputs[2])?;
            emit(&m3(&group, &a, &b, &c).to_json(), io.pretty)
        }
        ComputeOp::Mhat(_) => {
            let inputs: Vec<DecomposedElement> = io
                .inputs
                .iter()
                .map(|p| load_decomposed(&cd, p))
                .collect::<Result<_, _>>()?;
            let out = mhat(&cd, SignPolicy::default(), &inputs).map_err(|e| e.to_string())?;
            emit(&out.to_json(&cd), io.pretty)
        }
        ComputeOp::Decompose(_) => {
            expect_arity(io, 1)?;
            let a = load_tate(&group, &io.inputs[0])?;
            let parts: Vec<serde_json::Value> = project(&cd, &a)
                .into_iter()
                .map(|(tag, el)| {
                    serde_json::json!({
                        "class": tag.class_rep as usize,
                        "element": el.to_json(),
                    })
                })
                .collect();
            emit(&parts, io.pretty)
        }
        ComputeOp::Iota(_) => {
            expect_arity(io, 1)?;
            let e = load_decomposed(&cd, &io.inputs[0])?;
            emit(&iota_hat(&cd, &e).to_json(), io.pretty)
        }
        ComputeOp::Rho(_) => {
            expect_arity(io, 1)?;
            let a = load_tate(&group, &io.inputs[0])?;
            emit(&rho_hat(&cd, &a).to_json(&cd), io.pretty)
        }
        ComputeOp::S(_) => {
            expect_arity(io, 1)?;
            let a = load_tate(&group, &io.inputs[0])?;
            emit(&s_hat(&cd, &a).to_json(), io.pretty)
        }
    }
}

fn run_abelian_table(
    scope: &Scope,
    op: &str,
    degrees: &[i32],
    field: Option<&str>,
    csv: bool,
) -> Result<(), String> {
    let group = load_group(scope)?;
    if !group.is_abelian() {
        return Err(format!("{} is not abelian", group.name()));
    }
    let spec = parse_field(field)?;
    let arity = match op {
        "m1" => 1,
        "m2" => 2,
        "m3" => 3,
        other => return Err(format!("unknown op {other:?} (use m1|m2|m3)")),
    };
    if degrees.len() != arity {
        return Err(format!("op {op} needs {arity} degrees, got {}", degrees.len()));
    }
    let bases: Vec<Vec<_>> = degrees
        .iter()
        .map(|&d| AbelianCochain::basis(&group, d))
        .collect();
    let mut rows = Vec::new();
    let mut index = vec![0usize; arity];
    'outer: loop {
        let inputs: Vec<AbelianCochain> = (0..arity)
            .map(|i| AbelianCochain::basis_term(&group, degrees[i], spec, &bases[i][index[i]]))
            .collect();
        let out = match arity {
            1 => mhat1_closed(&group, &inputs[0]),
            2 => mhat2_closed(&group, &inputs[0], &inputs[1]),
            _ => mhat3_closed(&group, &inputs[0], &inputs[1], &inputs[2]),
        }
        .map_err(|e| e.to_string())?;
        let keys: Vec<Vec<usize>> = index
            .iter()
            .enumerate()
            .map(|(i, &j)| bases[i][j].iter().map(|&e| e as usize).collect())
            .collect();
        let terms: Vec<(Vec<usize>, String)> = out
            .terms()
            .map(|(k, c)| (k.iter().map(|&e| e as usize).collect(), c.to_string()))
            .collect();
        rows.push((keys, terms));
        // advance the multi-index
        for i in (0..arity).rev() {
            index[i] += 1;
            if index[i] < bases[i].len() {
                continue 'outer;
            }
            index[i] = 0;
            if i == 0 {
                break 'outer;
            }
        }
        if arity == 0 {
            break;
        }
    }
    if csv {
        println!("inputs;output");
        for (keys, terms) in rows {
            let ins: Vec<String> = keys.iter().map(|k| format!("{k:?}")).collect();
            let outs: Vec<String> = terms.iter().map(|(k, c)| format!("{c}*{k:?}")).collect();
            println!("{};{}", ins.join("|"), outs.join(" + "));
        }
    } else {
        let json: Vec<serde_json::Value> = rows
            .into_iter()
            .map(|(keys, terms)| {
                serde_json::json!({
                    "inputs": keys,
                    "output": terms.into_iter().map(|(k, c)| serde_json::json!({"key": k, "coeff": c})).collect::<Vec<_>>(),
                })
            })
            .collect();
        emit(&json, true)?;
    }
    Ok(())
}

fn run_verify(
    suite: &str,
    scope: &Scope,
    cfg: &VerifyConfig,
    field: FieldSpec,
    output: Option<&PathBuf>,
    pretty: bool,
) -> Result<bool, String> {
    let group = load_group(scope)?;
    let reports = match suite {
        "all" => verify::check_all(&group, field, cfg),
        "complex" => vec![verify::check_complex(&group, field, cfg)],
        "retract" => vec![verify::check_retract(&group, field, cfg)],
        "leibniz" => vec![verify::check_leibniz(&group, field, cfg)],
        "m2" => vec![verify::check_m2_theorem(&group, field, cfg)],
        "stasheff" => vec![verify::check_stasheff(&group, field, cfg)],
        "abelian" => vec![verify::check_abelian(&group, field, cfg)],
        "signs" => vec![verify::check_sign_regression(&group, field, cfg)],
        other => return Err(format!("unknown suite {other:?}")),
    };
    let all_pass = reports.iter().all(|r| r.pass);
    let json = if pretty {
        serde_json::to_string_pretty(&reports)
    } else {
        serde_json::to_string(&reports)
    }
    .map_err(|e| e.to_string())?;
    match output {
        Some(path) => std::fs::write(path, json).map_err(|e| e.to_string())?,
        None => println!("{json}"),
    }
    for r in &reports {
        for line in &r.checks {
            eprintln!(
                "[{}] {} ... {}",
                r.suite,
                line.name,
                if line.pass { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(all_pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<ExitCode, String> = (|| {
        match &cli.command {
            Command::Group { action } => match action {
                GroupAction::Info { scope, pretty } => {
                    let group = load_group(scope)?;
                    let cd = ConjugacyData::new(&group);
                    if !*pretty {
                        let classes: Vec<serde_json::Value> = (0..cd.class_count())
                            .map(|x| {
                                serde_json::json!({
                                    "rep": cd.reps()[x] as usize,
                                    "size": cd.class_size(x),
                                    "centralizer_order": cd.centralizer(x).len(),
                                })
                            })
                            .collect();
                        emit(
                            &serde_json::json!({
                                "name": group.name(),
                                "order": group.order(),
                                "abelian": group.is_abelian(),
                                "classes": classes,
                            }),
                            true,
                        )?;
                    } else {
                        println!("group {} of order {}", group.name(), group.order());
                        println!("abelian: {}", group.is_abelian());
                        print!("class sizes:");
                        for x in 0..cd.class_count() {
                            print!(" {}", cd.class_size(x));
                        }
                        println!();
                        for x in 0..cd.class_count() {
                            println!(
                                "class of {}: size {}, |centralizer| {}",
                                cd.reps()[x],
                                cd.class_size(x),
                                cd.centralizer(x).len()
                            );
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                GroupAction::List => {
                    for name in FiniteGroup::preset_names() {
                        println!("{name}");
                    }
                    println!("Zn (any n <= 32), ZaxZb (products of cyclic groups)");
                    Ok(ExitCode::SUCCESS)
                }
            },
            Command::Trees { action } => match action {
                TreesAction::List { leaves } => {
                    for t in PlanarTree::enumerate(*leaves) {
                        println!("{}", t.encode());
                    }
                    Ok(ExitCode::SUCCESS)
                }
            },
            Command::Compute { op } => {
                run_compute(op)?;
                Ok(ExitCode::SUCCESS)
            }
            Command::Abelian { action } => match action {
                AbelianAction::Table {
                    scope,
                    op,
                    degrees,
                    field,
                    csv,
                } => {
                    run_abelian_table(scope, op, degrees, field.as_deref(), *csv)?;
                    Ok(ExitCode::SUCCESS)
                }
            },
            Command::Verify {
                suite,
                scope,
                window,
                seed,
                samples,
                field,
                output,
                pretty,
            } => {
                let cfg = VerifyConfig {
                    window: *window,
                    seed: *seed,
                    samples: *samples,
                };
                let field = parse_field(field.as_deref())?;
                let pass = run_verify(suite, scope, &cfg, field, output.as_ref(), *pretty)?;
                Ok(if pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(3)
                })
            }
            Command::Export { what } => match what {
                ExportWhat::Group { scope } => {
                    let group = load_group(scope)?;
                    emit(&group.to_json(), true)?;
                    Ok(ExitCode::SUCCESS)
                }
            },
        }
    })();
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
