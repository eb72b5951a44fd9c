//! Task dispatch. Each command returns a JSON payload or an engine error.

use std::collections::BTreeMap;

use hypertheta::fpmod::{hilbert_series, BaseRing, FPModule};
use hypertheta::graded::{serre_intersection, theorem_1_2_check};
use hypertheta::hypersurface::{
    is_mcm, matrix_factorization, mcm_approximation, milnor_number, parity_vanishing_check, resolve, stable_ext,
    stable_tor,
};
use hypertheta::{Error, Hypersurface, Matrix};
use serde_json::{json, Value};

use crate::problem::{Command, ModuleDef, Problem, Task};

fn text(hs: &Hypersurface, m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|e| hs.format(e)).collect()).collect()
}

fn ring_tag(ring: BaseRing) -> Option<String> {
    match ring {
        BaseRing::R => None,
        BaseRing::P => Some("P".into()),
    }
}

/// A definition that reparses to exactly `m`.
pub fn echo(hs: &Hypersurface, m: &FPModule) -> ModuleDef {
    ModuleDef::Presentation { presentation: text(hs, &m.presentation), degrees: m.degrees.clone(), ring: ring_tag(m.ring) }
}

/// The definition as given, with polynomials in canonical text form.
fn canonical(hs: &Hypersurface, def: &ModuleDef) -> ModuleDef {
    let norm = |s: &String| hs.parse(s).map(|p| hs.format(&p)).unwrap_or_else(|_| s.clone());
    match def {
        ModuleDef::Ideal { ideal, ring } => ModuleDef::Ideal { ideal: ideal.iter().map(norm).collect(), ring: ring.clone() },
        ModuleDef::Presentation { presentation, degrees, ring } => ModuleDef::Presentation {
            presentation: presentation.iter().map(|r| r.iter().map(norm).collect()).collect(),
            degrees: degrees.clone(),
            ring: ring.clone(),
        },
    }
}

fn with_modules(p: &Problem, names: &[&String], payload: Value) -> Value {
    let mut out = payload;
    let echoed: BTreeMap<&String, ModuleDef> = names.iter().map(|n| (*n, canonical(&p.hs, &p.defs[*n]))).collect();
    out["modules"] = serde_json::to_value(echoed).unwrap();
    out
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

pub fn execute(p: &Problem, task: &Task) -> Result<Value, Error> {
    let hs = &p.hs;
    let module = |name: &String| &p.modules[name];
    Ok(match &task.command {
        Command::Theta { m, n } => {
            let r = stable_tor(hs, module(m), module(n))?;
            with_modules(p, &[m, n], json!({"theta": r.theta, "lenEven": r.len_even, "lenOdd": r.len_odd, "stableIndex": r.stable_index}))
        }
        Command::Tor { m, n } => with_modules(p, &[m, n], to_value(&stable_tor(hs, module(m), module(n))?)),
        Command::Ext { m, n } => with_modules(p, &[m, n], to_value(&stable_ext(hs, module(m), module(n))?)),
        Command::Mf { m } => {
            let (mcm, steps) = mcm_approximation(hs, module(m))?;
            if mcm.rank == 0 {
                return Err(Error::Precondition(format!("module {m:?} has finite projective dimension")));
            }
            let mf = matrix_factorization(hs, &mcm)?;
            let mut out = to_value(&mf.view(&hs.ctx.ring));
            out["steps"] = json!(steps);
            out["valid"] = json!(mf.is_valid());
            with_modules(p, &[m], out)
        }
        Command::Resolve { m } => {
            let r = resolve(hs, module(m))?;
            let diffs: Vec<_> = r.differentials.iter().map(|d| text(hs, d)).collect();
            let tail = r.tail.as_ref().map(|mf| to_value(&mf.view(&hs.ctx.ring)));
            with_modules(p, &[m], json!({"differentials": diffs, "stabilizedAt": r.stabilized_at, "tail": tail}))
        }
        Command::Mcm { m } => {
            let (mcm, steps) = mcm_approximation(hs, module(m))?;
            let out = json!({"steps": steps, "isMcm": is_mcm(hs, &mcm), "module": echo(hs, &mcm)});
            with_modules(p, &[m], out)
        }
        Command::Milnor => json!({"mu": milnor_number(hs)?}),
        Command::Hilbert { m, max_degree } => {
            let s = hilbert_series(hs, module(m))?;
            let mut out = to_value(&s);
            out["text"] = json!(s.to_string());
            out["dimensions"] = json!(s.dimensions(*max_degree));
            with_modules(p, &[m], out)
        }
        Command::Serre { i, j } => json!({"serre": serre_intersection(hs, i, j)?}),
        Command::Theorem12 { i, j } => to_value(&theorem_1_2_check(hs, i, j)?),
        Command::ParityCheck { pairs } => {
            let mods: Vec<(FPModule, FPModule)> = pairs.iter().map(|(m, n)| (module(m).clone(), module(n).clone())).collect();
            let thetas = parity_vanishing_check(hs, &mods)?;
            json!({"thetas": thetas, "allZero": thetas.iter().all(|&t| t == 0)})
        }
    })
}

/// Name of the error variant, e.g. `WrongPoleOrder`.
pub fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}
