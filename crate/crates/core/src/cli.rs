//! Command-line front end. JSON goes to standard output with sorted keys;
//! short human-readable summaries go to standard error.
//!
//! Exit status: 0 on success, 1 for malformed input (bad flags, unreadable
//! or unparsable files), 2 when a mathematical precondition fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::decomp::{sample_component, witness_decomposition};
use crate::error::Error;
use crate::invariants::kronecker_structure;
use crate::pencil::{FactoredForm, Pencil};
use crate::strata::{
    closure_includes, components_of, dimension, dimension_report, generic_pencil, hasse_export, ComponentId,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pencil-strata", version, about = "Exact orbit-closure and component computations for matrix pencils")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ComponentArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    a: usize,
}

impl ComponentArgs {
    fn id(&self) -> Result<ComponentId, Error> {
        ComponentId::new(self.m, self.n, self.r, self.a)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kronecker structure of a pencil.
    Classify { pencil: PathBuf },
    /// Whether Q lies in the orbit closure of P.
    Include { p: PathBuf, q: PathBuf },
    /// Every a with Q in the component C_a^r.
    Components {
        q: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// The generic pencil K_a of a component.
    Generic(ComponentArgs),
    /// Rank-one witness decomposition of a canonical form.
    Decompose {
        form: PathBuf,
        #[command(flatten)]
        c: ComponentArgs,
    },
    /// Random pencil of a component with its decomposition.
    Sample {
        #[command(flatten)]
        c: ComponentArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        height: u64,
    },
    /// Dimension of a component, optionally checked by Jacobian rank.
    Dim {
        #[command(flatten)]
        c: ComponentArgs,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hasse diagram of closure inclusion among the given pencils.
    Hasse {
        #[arg(required = true)]
        pencils: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => EXIT_MALFORMED,
            Failure::Lib(e) if e.is_malformed_input() => EXIT_MALFORMED,
            Failure::Lib(_) => EXIT_PRECONDITION,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Io(msg) => json!({"error": {"code": "io", "message": msg}}),
            Failure::Lib(Error::NotMember(v)) => json!({
                "error": {"code": "not_member", "message": Error::NotMember(v.clone()).to_string(), "witness": v}
            }),
            Failure::Lib(e) => json!({"error": {"code": e.code(), "message": e.to_string()}}),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(msg) => msg.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_pencil(path: &Path) -> Result<Pencil, Failure> {
    Pencil::from_json_str(&read(path)?).map_err(|e| match e {
        Error::Parse(msg) => Failure::Lib(Error::Parse(format!("{}: {msg}", path.display()))),
        other => Failure::Lib(other),
    })
}

fn load_form(path: &Path) -> Result<FactoredForm, Failure> {
    FactoredForm::from_json_str(&read(path)?).map_err(|e| match e {
        Error::Parse(msg) => Failure::Lib(Error::Parse(format!("{}: {msg}", path.display()))),
        other => Failure::Lib(other),
    })
}

struct Output {
    json: Option<Value>,
    text: Option<String>,
    summary: String,
}

fn execute(cmd: Command) -> Result<Output, Failure> {
    let out = match cmd {
        Command::Classify { pencil } => {
            let s = kronecker_structure(&load_pencil(&pencil)?);
            let summary = format!(
                "normal rank {}, right indices {:?}, left indices {:?}, {} finite class(es), infinite {:?}",
                s.nrank,
                s.right,
                s.left,
                s.finite.len(),
                s.infinite
            );
            Output { json: Some(s.to_json_value()), text: None, summary }
        }
        Command::Include { p, q } => {
            let v = closure_includes(&load_pencil(&p)?, &load_pencil(&q)?)?;
            let mut summary = format!("included: {}", v.included);
            if let Some(w) = &v.witness {
                summary.push_str(&format!(" ({w})"));
            }
            Output { json: Some(serde_json::to_value(&v).expect("verdict serializes")), text: None, summary }
        }
        Command::Components { q, r } => {
            let found = components_of(&load_pencil(&q)?, r)?;
            let summary = format!("components with r = {r}: a in {found:?}");
            Output { json: Some(json!(found)), text: None, summary }
        }
        Command::Generic(c) => {
            let id = c.id()?;
            Output {
                json: Some(generic_pencil(&id).to_json_value()),
                text: None,
                summary: format!("generic pencil of {id}"),
            }
        }
        Command::Decompose { form, c } => {
            let id = c.id()?;
            let d = witness_decomposition(&load_form(&form)?, &id)?;
            Output {
                json: Some(d.to_json_value()),
                text: None,
                summary: format!("{} rank-one terms, a = {}", d.r(), d.a),
            }
        }
        Command::Sample { c, seed, height } => {
            let id = c.id()?;
            let (_, pencil, d) = sample_component(&id, seed, height);
            Output {
                json: Some(json!({"pencil": pencil.to_json_value(), "decomposition": d.to_json_value()})),
                text: None,
                summary: format!("sampled {}×{} pencil with seed {seed}", id.m, id.n),
            }
        }
        Command::Dim { c, verify, trials, seed } => {
            let id = c.id()?;
            if verify {
                let rep = dimension_report(&id, trials, seed);
                let summary = format!(
                    "dimension {}, max Jacobian rank {}, verified: {}",
                    rep.dimension, rep.max_rank, rep.verified
                );
                Output { json: Some(serde_json::to_value(&rep).expect("report serializes")), text: None, summary }
            } else {
                let d = dimension(&id);
                Output { json: Some(json!(d)), text: None, summary: format!("dimension {d}") }
            }
        }
        Command::Hasse { pencils, out } => {
            let named = pencils
                .iter()
                .map(|p| {
                    let name =
                        p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
                    Ok((name, load_pencil(p)?))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let dot = hasse_export(&named)?;
            let edges = dot.matches("->").count();
            let summary = format!("{} node(s), {edges} edge(s)", named.len());
            match out {
                Some(path) => {
                    std::fs::write(&path, &dot).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Output { json: None, text: None, summary: format!("{summary}, written to {}", path.display()) }
                }
                None => Output { json: None, text: Some(dot), summary },
            }
        }
    };
    Ok(out)
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            if let Some(v) = o.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value serializes"));
            }
            if let Some(t) = o.text {
                let _ = write!(out, "{t}");
            }
            let _ = writeln!(err, "{}", o.summary);
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&f.to_json()).expect("JSON value serializes"));
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}
