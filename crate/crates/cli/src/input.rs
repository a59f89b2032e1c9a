use std::path::{Path, PathBuf};

use clap::Args;
use nichols_core::braided::{MonomialBraiding, SetSolution};
use nichols_core::json::{braiding_from_json, braiding_to_json, family_from_json, family_to_json};
use nichols_core::suzuki::{i_family, k_braiding, l_family, n_braiding, v_abe, Family};
use serde_json::{json, Map, Value};

use crate::fail::{CliResult, Failure};

/// A family given by flags, or a JSON file.
#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Vabe, K, N, L or I.
    #[arg(long)]
    pub family: Option<String>,
    /// Family descriptor or braiding JSON.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub params: Params,
}

/// Family parameters. Scalars take `1`, `-1`, `zM` or `zM^k`.
#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<String>,
    #[arg(long = "N")]
    pub big_n: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<i32>,
}

#[derive(Debug)]
pub enum Input {
    Family(Family),
    Braiding(MonomialBraiding),
}

impl Input {
    /// Canonical JSON: built in a fixed key order, so equal inputs print equally.
    pub fn canonical(&self) -> Value {
        match self {
            Input::Family(f) => family_to_json(f),
            Input::Braiding(c) => braiding_to_json(c),
        }
    }

    pub fn braiding(&self) -> CliResult<MonomialBraiding> {
        match self {
            Input::Braiding(c) => Ok(c.clone()),
            Input::Family(f) => family_braiding(f),
        }
    }
}

pub fn family_braiding(f: &Family) -> CliResult<MonomialBraiding> {
    Ok(match f {
        Family::Vabe(p) => v_abe(p)?,
        Family::K(p) => k_braiding(p)?,
        Family::N(p) => n_braiding(p)?,
        Family::L { .. } | Family::I { .. } => {
            return Err(Failure::Usage(format!(
                "family {} is set-theoretic only; its braiding coefficients are not available",
                f.tag()
            )))
        }
    })
}

pub fn family_solution(f: &Family) -> CliResult<SetSolution> {
    Ok(match f {
        Family::L { n } => l_family(*n)?.solution,
        Family::I { n } => i_family(*n)?.solution,
        other => family_braiding(other)?.solution().clone(),
    })
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

impl Source {
    pub fn resolve(&self) -> CliResult<Input> {
        match (&self.family, &self.file) {
            (Some(tag), None) => Ok(Input::Family(family_from_json(&self.params.descriptor(tag)?)?)),
            (None, Some(path)) => {
                let v = read_json(path)?;
                if v.get("family").is_some() {
                    Ok(Input::Family(family_from_json(&v)?))
                } else {
                    Ok(Input::Braiding(braiding_from_json(&v)?))
                }
            }
            (None, None) => Err(Failure::Usage("give --family or --file".into())),
            (Some(_), Some(_)) => Err(Failure::Usage("--family and --file are exclusive".into())),
        }
    }
}

impl Params {
    /// Defaults: N = 1, k = p = q = 0, s = 1, mu = lambda = 1, and j = 2 (or 1 when lambda = -1).
    fn descriptor(&self, tag: &str) -> CliResult<Value> {
        let mut p = Map::new();
        let need = |name: &str, v: &Option<String>| {
            v.clone()
                .ok_or_else(|| Failure::Usage(format!("family {tag} needs --{name}")))
        };
        match tag {
            "Vabe" => {
                p.insert("a".into(), json!(need("a", &self.a)?));
                p.insert("b".into(), json!(need("b", &self.b)?));
                p.insert("e".into(), json!(need("e", &self.e)?));
            }
            "K" | "N" => {
                let n = self.n.ok_or_else(|| Failure::Usage(format!("family {tag} needs --n")))?;
                let lambda = self.lambda.unwrap_or(1);
                p.insert("N".into(), json!(self.big_n.unwrap_or(1)));
                p.insert("n".into(), json!(n));
                p.insert("k".into(), json!(self.k.unwrap_or(0)));
                p.insert("p".into(), json!(self.p.unwrap_or(0)));
                p.insert("s".into(), json!(self.s.unwrap_or(1)));
                p.insert("mu".into(), json!(self.mu.unwrap_or(1)));
                p.insert("lambda".into(), json!(lambda));
                if tag == "K" {
                    p.insert("j".into(), json!(self.j.unwrap_or(if lambda == -1 { 1 } else { 2 })));
                } else {
                    p.insert("q".into(), json!(self.q.unwrap_or(0)));
                }
            }
            "L" | "I" => {
                let n = self.n.ok_or_else(|| Failure::Usage(format!("family {tag} needs --n")))?;
                p.insert("n".into(), json!(n));
            }
            other => return Err(Failure::Usage(format!("unknown family `{other}`"))),
        }
        Ok(json!({ "family": tag, "params": p }))
    }
}
