//! Problem files: JSON in, typed tasks out. Every failure here is a parse
//! error (exit code 2) whose message names the offending field.

use std::collections::BTreeMap;
use std::fmt;

use hypertheta::fpmod::{module_from_ideal, BaseRing, FPModule};
use hypertheta::{EngineConfig, Field, Hypersurface, Matrix, PolyRing, Polynomial, SingularityContext};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub field: String,
    pub f: String,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDef>,
    pub tasks: Vec<TaskSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ModuleDef {
    Ideal {
        ideal: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
    },
    Presentation {
        presentation: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees: Option<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub command: String,
    #[serde(default)]
    pub args: Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail<T>(field: &str, msg: impl fmt::Display) -> Result<T, ParseError> {
    Err(ParseError(format!("{field}: {msg}")))
}

#[derive(Debug, Clone)]
pub enum Command {
    Theta { m: String, n: String },
    Tor { m: String, n: String },
    Ext { m: String, n: String },
    Mf { m: String },
    Resolve { m: String },
    Mcm { m: String },
    Milnor,
    Hilbert { m: String, max_degree: i64 },
    Serre { i: Vec<Polynomial>, j: Vec<Polynomial> },
    Theorem12 { i: Vec<Polynomial>, j: Vec<Polynomial> },
    ParityCheck { pairs: Vec<(String, String)> },
}

pub const COMMANDS: &[&str] =
    &["theta", "tor", "ext", "mf", "resolve", "mcm", "milnor", "hilbert", "serre", "theorem12", "parity-check"];

#[derive(Debug, Clone)]
pub struct Task {
    pub spec: TaskSpec,
    pub command: Command,
}

pub struct Problem {
    pub hs: Hypersurface,
    pub defs: BTreeMap<String, ModuleDef>,
    pub modules: BTreeMap<String, FPModule>,
    pub tasks: Vec<Task>,
}

/// Overrides from the command line.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub field: Option<String>,
    pub config: EngineConfig,
}

pub fn parse_text(text: &str, over: &Overrides) -> Result<Problem, ParseError> {
    let file: ProblemFile = serde_json::from_str(text)
        .map_err(|e| ParseError(format!("line {} column {}: {e}", e.line(), e.column())))?;
    build(file, over)
}

fn parse_field(s: &str, name: &str) -> Result<Field, ParseError> {
    s.parse::<Field>().or_else(|e| fail(name, e))
}

pub fn build(file: ProblemFile, over: &Overrides) -> Result<Problem, ParseError> {
    let field = match &over.field {
        Some(s) => parse_field(s, "--field")?,
        None => parse_field(&file.field, "field")?,
    };
    if file.variables.is_empty() {
        return fail("variables", "at least one variable is required");
    }
    let vars: Vec<&str> = file.variables.iter().map(String::as_str).collect();
    let mut ring = PolyRing::new(&vars, field);
    if let Some(w) = &file.weights {
        ring = ring.with_weights(w.clone()).or_else(|e| fail("weights", e))?;
    }
    let f = ring.parse(&file.f).or_else(|e| fail("f", e))?;
    let ctx = SingularityContext::new(ring, f).or_else(|e| fail("f", e))?;
    let hs = Hypersurface::with_config(ctx, over.config.clone());

    let mut modules = BTreeMap::new();
    for (name, def) in &file.modules {
        modules.insert(name.clone(), module_of(&hs, def, &format!("modules.{name}"))?);
    }
    let mut tasks = Vec::new();
    for (k, spec) in file.tasks.iter().enumerate() {
        let command = command_of(&hs, &file.modules, spec, &format!("tasks[{k}]"))?;
        tasks.push(Task { spec: spec.clone(), command });
    }
    Ok(Problem { hs, defs: file.modules, modules, tasks })
}

fn base_ring(ring: &Option<String>, at: &str) -> Result<BaseRing, ParseError> {
    match ring.as_deref() {
        None | Some("R") => Ok(BaseRing::R),
        Some("P") => Ok(BaseRing::P),
        Some(other) => fail(&format!("{at}.ring"), format!("expected \"P\" or \"R\", got {other:?}")),
    }
}

fn polys(hs: &Hypersurface, gens: &[String], at: &str) -> Result<Vec<Polynomial>, ParseError> {
    gens.iter().enumerate().map(|(k, s)| hs.parse(s).or_else(|e| fail(&format!("{at}[{k}]"), e))).collect()
}

pub fn module_of(hs: &Hypersurface, def: &ModuleDef, at: &str) -> Result<FPModule, ParseError> {
    match def {
        ModuleDef::Ideal { ideal, ring } => {
            let gens = polys(hs, ideal, &format!("{at}.ideal"))?;
            Ok(module_from_ideal(hs, &gens, base_ring(ring, at)?))
        }
        ModuleDef::Presentation { presentation, degrees, ring } => {
            let cols = presentation.first().map_or(0, Vec::len);
            let mut rows = Vec::new();
            for (i, row) in presentation.iter().enumerate() {
                if row.len() != cols {
                    return fail(&format!("{at}.presentation[{i}]"), format!("expected {cols} entries, got {}", row.len()));
                }
                rows.push(polys(hs, row, &format!("{at}.presentation[{i}]"))?);
            }
            if let Some(d) = degrees {
                if d.len() != rows.len() {
                    return fail(&format!("{at}.degrees"), format!("expected {} degrees, got {}", rows.len(), d.len()));
                }
            }
            let pres = if rows.is_empty() { Matrix::zeros(0, 0, hs.nvars()) } else { Matrix::from_rows(hs.nvars(), rows) };
            Ok(FPModule::new(base_ring(ring, at)?, pres, degrees.clone()))
        }
    }
}

fn arg<'a>(spec: &'a TaskSpec, key: &str, at: &str) -> Result<&'a Value, ParseError> {
    spec.args.get(key).ok_or_else(|| ParseError(format!("{at}.args.{key}: missing")))
}

fn module_name(spec: &TaskSpec, defs: &BTreeMap<String, ModuleDef>, key: &str, at: &str) -> Result<String, ParseError> {
    let field = format!("{at}.args.{key}");
    match arg(spec, key, at)? {
        Value::String(s) if defs.contains_key(s) => Ok(s.clone()),
        Value::String(s) => fail(&field, format!("unknown module {s:?}")),
        _ => fail(&field, "expected a module name"),
    }
}

/// An ideal argument: a module name defined by an ideal, or a list of polynomials.
fn ideal_arg(
    hs: &Hypersurface,
    spec: &TaskSpec,
    defs: &BTreeMap<String, ModuleDef>,
    key: &str,
    at: &str,
) -> Result<Vec<Polynomial>, ParseError> {
    let field = format!("{at}.args.{key}");
    match arg(spec, key, at)? {
        Value::String(s) => match defs.get(s) {
            Some(ModuleDef::Ideal { ideal, .. }) => polys(hs, ideal, &format!("modules.{s}.ideal")),
            Some(_) => fail(&field, format!("module {s:?} is not given by an ideal")),
            None => fail(&field, format!("unknown module {s:?}")),
        },
        Value::Array(items) => {
            let strs: Option<Vec<String>> = items.iter().map(|v| v.as_str().map(String::from)).collect();
            match strs {
                Some(s) => polys(hs, &s, &field),
                None => fail(&field, "expected polynomial strings"),
            }
        }
        _ => fail(&field, "expected a module name or a list of polynomials"),
    }
}

fn command_of(
    hs: &Hypersurface,
    defs: &BTreeMap<String, ModuleDef>,
    spec: &TaskSpec,
    at: &str,
) -> Result<Command, ParseError> {
    if !spec.args.is_null() && !spec.args.is_object() {
        return fail(&format!("{at}.args"), "expected an object");
    }
    let name = |key: &str| module_name(spec, defs, key, at);
    let ideal = |key: &str| ideal_arg(hs, spec, defs, key, at);
    Ok(match spec.command.as_str() {
        "theta" => Command::Theta { m: name("M")?, n: name("N")? },
        "tor" => Command::Tor { m: name("M")?, n: name("N")? },
        "ext" => Command::Ext { m: name("M")?, n: name("N")? },
        "mf" => Command::Mf { m: name("M")? },
        "resolve" => Command::Resolve { m: name("M")? },
        "mcm" => Command::Mcm { m: name("M")? },
        "milnor" => Command::Milnor,
        "hilbert" => {
            let max_degree = match spec.args.get("maxDegree") {
                None => 10,
                Some(v) => match v.as_i64() {
                    Some(d) if d >= 0 => d,
                    _ => return fail(&format!("{at}.args.maxDegree"), "expected a non-negative integer"),
                },
            };
            Command::Hilbert { m: name("M")?, max_degree }
        }
        "serre" => Command::Serre { i: ideal("I")?, j: ideal("J")? },
        "theorem12" => Command::Theorem12 { i: ideal("I")?, j: ideal("J")? },
        "parity-check" => {
            let field = format!("{at}.args.pairs");
            let Some(items) = arg(spec, "pairs", at)?.as_array() else {
                return fail(&field, "expected a list of [M, N] pairs");
            };
            let mut pairs = Vec::new();
            for (k, item) in items.iter().enumerate() {
                let here = format!("{field}[{k}]");
                let pair: Option<Vec<&str>> = item.as_array().and_then(|a| a.iter().map(Value::as_str).collect());
                match pair.as_deref() {
                    Some([m, n]) => {
                        for s in [m, n] {
                            if !defs.contains_key(*s) {
                                return fail(&here, format!("unknown module {s:?}"));
                            }
                        }
                        pairs.push((m.to_string(), n.to_string()));
                    }
                    _ => return fail(&here, "expected [M, N]"),
                }
            }
            Command::ParityCheck { pairs }
        }
        other => return fail(&format!("{at}.command"), format!("unknown command {other:?} (one of {})", COMMANDS.join(", "))),
    })
}
