use std::path::{Path, PathBuf};

use clap::Subcommand;
use nichols_core::braided::{rack_isomorphic, Rack, SetSolution};
use nichols_core::json::{braiding_from_json, family_from_json, rack_from_json, rack_to_json, solution_from_json, solution_to_json};
use serde_json::{json, Value};

use crate::fail::{CliResult, Failure};
use crate::input::{family_solution, read_json};

#[derive(Subcommand, Debug)]
pub enum RackCmd {
    /// Print the dihedral rack `i |> j = 2i - j mod m` (labels 1..m, m for 0).
    Dihedral {
        #[arg(long)]
        m: usize,
    },
    /// YBE, bijectivity, nondegeneracy and involutivity of a solution.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// The derived rack of a nondegenerate solution.
    Derive {
        #[arg(long)]
        file: PathBuf,
    },
    /// Conjugate a solution by T, or by `--map f1,f2,...` (1-based).
    Conjugate {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        map: Option<Vec<usize>>,
    },
    /// Search for (or check, with `--map`) an isomorphism between two racks.
    Iso {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long, value_delimiter = ',')]
        map: Option<Vec<usize>>,
    },
}

/// Solution, rack (as its solution), braiding (its underlying solution) or family JSON.
fn load_solution(path: &Path) -> CliResult<SetSolution> {
    let v = read_json(path)?;
    if v.get("family").is_some() {
        return family_solution(&family_from_json(&v)?);
    }
    if v.get("dim").is_some() {
        return Ok(braiding_from_json(&v)?.solution().clone());
    }
    if v.get("table").is_some() {
        return Ok(rack_from_json(&v)?.to_solution());
    }
    Ok(solution_from_json(&v)?)
}

fn load_rack(path: &Path) -> CliResult<Rack> {
    let v = read_json(path)?;
    if v.get("table").is_some() {
        return Ok(rack_from_json(&v)?);
    }
    Ok(load_solution(path)?.derived_rack()?)
}

fn zero_based(map: &[usize]) -> CliResult<Vec<usize>> {
    map.iter()
        .map(|&x| x.checked_sub(1).ok_or_else(|| Failure::Usage("--map labels start at 1".into())))
        .collect()
}

pub fn run(cmd: &RackCmd) -> CliResult<Value> {
    Ok(match cmd {
        RackCmd::Dihedral { m } => {
            if *m == 0 {
                return Err(Failure::Usage("--m must be at least 1".into()));
            }
            let to_label: Vec<usize> = (0..*m).map(|r| (r + m - 1) % m).collect();
            rack_to_json(&Rack::dihedral(*m).relabel(&to_label)?)
        }
        RackCmd::Check { file } => {
            let s = load_solution(file)?;
            let c = s.checks();
            json!({
                "size": s.size(),
                "ybe": c.ybe,
                "ybe_violation": s.ybe_violation().map(|(i, j, k)| [i + 1, j + 1, k + 1]),
                "bijective": s.is_bijective(),
                "nondegenerate": c.nondegenerate,
                "involutive": c.involutive,
                "rack_shaped": s.is_rack_shaped(),
            })
        }
        RackCmd::Derive { file } => rack_to_json(&load_solution(file)?.derived_rack()?),
        RackCmd::Conjugate { file, map } => {
            let s = load_solution(file)?;
            let out = match map {
                Some(f) => s.conjugate_by(&zero_based(f)?)?,
                None => s.conjugate_by_t()?,
            };
            solution_to_json(&out)
        }
        RackCmd::Iso { file, other, map } => {
            let (a, b) = (load_rack(file)?, load_rack(other)?);
            let f = map.as_deref().map(zero_based).transpose()?;
            let found = rack_isomorphic(&a, &b, f.as_deref())?;
            json!({
                "isomorphic": found.is_some(),
                "map": found.map(|f| f.iter().map(|x| x + 1).collect::<Vec<_>>()),
            })
        }
    })
}
