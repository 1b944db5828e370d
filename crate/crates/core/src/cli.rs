//! The `igl` command line. Output is JSON unless `--text` is given.
//!
//! Exit codes: 0 success, 1 mathematical failure (identity fails, battery
//! check fails, no counterexample, bad derivation step), 2 usage or I/O.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{builtin, AlgebraFile, FiniteGroupoid};
use crate::checker::{check_suite, membership, satisfies_with_cap, Sat, DEFAULT_VAR_CAP};
use crate::derivation::{check_derivation, parse_derivation, Mode};
use crate::enumerator::{enumerate_models, models_up_to, EnumOptions};
use crate::lab::{find_counterexample, Battery, Counterexample};
use crate::registry::Registry;
use crate::term::{parse_identity, Identity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "igl",
    version,
    about = "Finite-model laboratory for implicator groupoids"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Args, Debug, Clone)]
struct UserIds {
    /// Extra identities (`.ids` file), registered as `user:NAME`.
    #[arg(long = "ids", value_name = "FILE")]
    ids: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one identity on one algebra.
    Check {
        /// `builtin:NAME` or a JSON algebra file.
        #[arg(long)]
        algebra: String,
        /// Identity text, or the name of a registered identity.
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
        max_vars: usize,
        #[command(flatten)]
        user: UserIds,
        #[command(flatten)]
        out: Output,
    },
    /// Membership of an algebra in every registered variety.
    Classify {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        user: UserIds,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate models of a given size.
    Enum {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        variety: Option<String>,
        /// Keep one model per isomorphism class (default).
        #[arg(long, overrides_with = "no_iso")]
        iso: bool,
        #[arg(long)]
        no_iso: bool,
        #[arg(long, env = "IGL_MAX_SECONDS")]
        max_seconds: Option<f64>,
        /// Write one JSON model per line here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        serial: bool,
        #[command(flatten)]
        user: UserIds,
        #[command(flatten)]
        output: Output,
    },
    /// Smallest model of a variety violating some identity.
    Find {
        #[arg(long)]
        sat: String,
        /// Identity text or registered name; repeatable.
        #[arg(long, required = true)]
        fail: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, env = "IGL_MAX_SECONDS")]
        max_seconds: Option<f64>,
        #[command(flatten)]
        user: UserIds,
        #[command(flatten)]
        out: Output,
    },
    /// Check one registry suite on all models up to a size.
    Suite {
        name: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run the full battery of checks.
    VerifyPaper {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Replace a builtin table: `NAME=FILE`.
        #[arg(long = "override", value_name = "NAME=FILE")]
        overrides: Vec<String>,
        /// Add a model (JSON file) to the checked set.
        #[arg(long, value_name = "FILE")]
        inject: Vec<PathBuf>,
        /// Time budget for the strictness searches.
        #[arg(long, env = "IGL_MAX_SECONDS")]
        max_seconds: Option<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// Replay a `.drv` derivation.
    Derive {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value = "semantic")]
        mode: Mode,
        #[command(flatten)]
        out: Output,
    },
    /// List registered varieties, suites and identities.
    List {
        #[command(flatten)]
        user: UserIds,
        #[command(flatten)]
        out: Output,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Usage>;

pub fn load_algebra(spec: &str) -> Result<FiniteGroupoid, String> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin(name).map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|e| format!("{spec}: {e}"))?;
    file.to_groupoid().map_err(|e| format!("{spec}: {e}"))
}

fn registry(user: &UserIds) -> Result<Registry, Usage> {
    let mut reg = Registry::standard();
    for path in &user.ids {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("ids");
        reg.load_ids(stem, &text)
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(reg)
}

/// Registered name first, then identity text.
fn resolve_identity(reg: &Registry, s: &str) -> Result<Identity, Usage> {
    if let Ok(id) = reg.identity(s) {
        return Ok(id.clone());
    }
    parse_identity(s).map_err(|e| Usage(format!("`{s}`: {e}")))
}

fn emit<T: Serialize>(w: &mut dyn Write, v: &T) -> Result<(), Usage> {
    serde_json::to_writer_pretty(&mut *w, v)?;
    writeln!(w)?;
    Ok(())
}

fn model_line(m: &FiniteGroupoid) -> String {
    serde_json::to_string(&json!({"size": m.size(), "table": m.rows()})).expect("serializable")
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "igl: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, w: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Check {
            algebra,
            identity,
            max_vars,
            user,
            out,
        } => {
            let reg = registry(&user)?;
            let a = load_algebra(&algebra)?;
            let id = resolve_identity(&reg, &identity)?;
            let sat = satisfies_with_cap(&a, &id, max_vars)?;
            if out.text {
                match &sat {
                    Sat::Holds => writeln!(w, "holds: {}", id.print(true))?,
                    Sat::Fails(a) => writeln!(w, "fails: {} at {a}", id.print(true))?,
                }
            } else {
                emit(
                    w,
                    &json!({
                        "identity": id.print(true),
                        "holds": sat.holds(),
                        "witness": sat.witness(),
                    }),
                )?;
            }
            Ok(if sat.holds() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Classify { algebra, user, out } => {
            let reg = registry(&user)?;
            let a = load_algebra(&algebra)?;
            let mut rows = Vec::new();
            for name in reg.variety_names() {
                let m = membership(&a, &reg.get_variety(&name)?)?;
                rows.push((name, m));
            }
            if out.text {
                write!(w, "{}", a.render_table())?;
                for (name, m) in &rows {
                    match &m.failure {
                        None => writeln!(w, "  {name:<10} yes")?,
                        Some(f) => writeln!(
                            w,
                            "  {name:<10} no   ({} fails at {})",
                            f.identity, f.witness
                        )?,
                    }
                }
            } else {
                let members: Vec<&String> = rows
                    .iter()
                    .filter(|(_, m)| m.member)
                    .map(|(n, _)| n)
                    .collect();
                let detail: serde_json::Map<String, serde_json::Value> = rows
                    .iter()
                    .map(|(n, m)| (n.clone(), serde_json::to_value(m).expect("serializable")))
                    .collect();
                emit(
                    w,
                    &json!({"table": a.rows(), "members": members, "membership": detail}),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Enum {
            size,
            variety,
            iso: _,
            no_iso,
            max_seconds,
            out,
            serial,
            user,
            output,
        } => {
            let reg = registry(&user)?;
            let mut opts = EnumOptions {
                iso_reduce: !no_iso,
                max_seconds,
                parallel: !serial,
                extra: vec![],
            };
            if let Some(v) = &variety {
                opts = opts.within(&reg.get_variety(v)?);
            }
            let e = enumerate_models(size, &opts)?;
            let mut text = String::new();
            for m in &e.models {
                if output.text {
                    text.push_str(&m.render_table());
                    text.push('\n');
                } else {
                    text.push_str(&model_line(m));
                    text.push('\n');
                }
            }
            match &out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => w.write_all(text.as_bytes())?,
            }
            if !e.complete {
                return Err(Usage(format!(
                    "time budget exhausted; {} models found so far",
                    e.models.len()
                )));
            }
            if output.text || out.is_some() {
                writeln!(w, "{} models", e.models.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Find {
            sat,
            fail,
            max_size,
            max_seconds,
            user,
            out,
        } => {
            let reg = registry(&user)?;
            let v = reg.get_variety(&sat)?;
            let fails = fail
                .iter()
                .map(|s| resolve_identity(&reg, s))
                .collect::<Result<Vec<_>, _>>()?;
            let r = find_counterexample(&v, &fails, max_size, max_seconds)?;
            if out.text {
                match &r {
                    Counterexample::Found {
                        identity, witness, ..
                    } => {
                        write!(w, "{}", r.model().expect("found").render_table())?;
                        writeln!(w, "in {sat}, fails {identity} at {witness}")?;
                    }
                    Counterexample::NoneUpTo { max_n } => {
                        writeln!(w, "no counterexample of size ≤ {max_n}")?
                    }
                    Counterexample::Incomplete { searched_up_to } => {
                        writeln!(w, "budget exhausted; none of size ≤ {searched_up_to}")?
                    }
                }
            } else {
                emit(w, &r)?;
            }
            Ok(match r {
                Counterexample::Found { .. } => EXIT_OK,
                _ => EXIT_FAIL,
            })
        }
        Command::Suite {
            name,
            max_size,
            out,
        } => {
            let reg = Registry::standard();
            let claims = reg.get_suite(&name)?;
            let models = models_up_to(max_size, &EnumOptions::default())?.models;
            let rep = check_suite(&models, claims, &reg)?;
            if out.text {
                for c in &rep.claims {
                    let status = if c.violations == 0 { "pass" } else { "FAIL" };
                    writeln!(
                        w,
                        "{status}  {:<12} {} applicable, {} violations",
                        c.claim_id, c.applicable, c.violations
                    )?;
                }
                for v in &rep.violations {
                    writeln!(
                        w,
                        "  {} in {:?}: {}",
                        v.claim_id, v.model, v.violation.detail
                    )?;
                }
            } else {
                emit(w, &rep)?;
            }
            Ok(if rep.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::VerifyPaper {
            max_size,
            json,
            overrides,
            inject,
            max_seconds,
            out,
        } => {
            let mut battery = Battery::new(max_size).search_budget(max_seconds);
            for o in &overrides {
                let (name, path) = o
                    .split_once('=')
                    .ok_or_else(|| Usage(format!("--override expects NAME=FILE, got `{o}`")))?;
                battery = battery.override_builtin(name, load_algebra(path)?)?;
            }
            for path in &inject {
                battery = battery.inject(load_algebra(&path.to_string_lossy())?);
            }
            let rep = battery.run()?;
            if let Some(path) = &json {
                let text = serde_json::to_string_pretty(&rep)?;
                fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            if out.text {
                write!(w, "{}", rep.render_text())?;
            } else if json.is_none() {
                emit(w, &rep)?;
            } else {
                let failed: Vec<&str> = rep.failures().map(|e| e.claim_id.as_str()).collect();
                emit(
                    w,
                    &json!({"passed": rep.passed, "checks": rep.entries.len(), "failed": failed}),
                )?;
            }
            Ok(if rep.passed { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Derive {
            file,
            max_size,
            mode,
            out,
        } => {
            let reg = Registry::standard();
            let text = read(&file)?;
            let d = parse_derivation(&text, &reg)?;
            let models = models_up_to(max_size, &EnumOptions::default())?.models;
            let rep = check_derivation(&d, &models, mode, &reg)?;
            if out.text {
                write!(w, "{}", rep.render_text())?;
            } else {
                emit(w, &rep)?;
            }
            Ok(if rep.ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::List { user, out } => {
            let reg = registry(&user)?;
            let l = reg.list_all();
            if out.text {
                writeln!(w, "varieties: {}", l.varieties.join(" "))?;
                writeln!(w, "suites: {}", l.suites.join(" "))?;
                for name in &l.identities {
                    writeln!(w, "  {name:<16} {}", reg.identity(name)?.print(true))?;
                }
            } else {
                emit(
                    w,
                    &json!({"varieties": l.varieties, "suites": l.suites, "identities": l.identities}),
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn read(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}
