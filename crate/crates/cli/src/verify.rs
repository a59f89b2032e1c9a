//! `verify`: re-checks the family case tables, rack isomorphisms, and the
//! braid and cocycle identities of a given braiding.

use clap::ValueEnum;
use nichols_core::braided::{twist_conjugate, MonomialBraiding};
use nichols_core::json::cyclo_to_json;
use nichols_core::suzuki::{
    i_family, k_braiding, k_closed_form, k_twist, l_family, n_braiding, n_closed_form, n_twist, DihedralFamily,
    KParams, NParams, Variant,
};
use serde_json::{json, Value};

use crate::fail::{CliResult, Failure};
use crate::input::Source;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    KLemmas,
    NLemmas,
    LRack,
    IRack,
    Cocycle,
    Braid,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    /// Every valid parameter tuple up to the given `N`.
    #[default]
    All,
    /// `k = 0`, `s = 1`, varying signs and `p`.
    Sample,
}

pub struct Case {
    pub label: String,
    pub failure: Option<String>,
    pub extra: Value,
}

pub struct Report {
    pub target: Target,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.failure.is_none())
    }

    pub fn to_json(&self) -> Value {
        let failed = self.cases.iter().filter(|c| c.failure.is_some()).count();
        let first = self.cases.iter().find(|c| c.failure.is_some());
        json!({
            "target": format!("{:?}", self.target),
            "pass": self.passed(),
            "cases": self.cases.len(),
            "failed": failed,
            "first_failure": first.map(|c| json!({ "case": c.label, "reason": c.failure })),
            "results": self.cases.iter().map(|c| json!({
                "case": c.label,
                "pass": c.failure.is_none(),
                "reason": c.failure,
                "detail": c.extra,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            match &c.failure {
                None => out.push_str(&format!("PASS  {}\n", c.label)),
                Some(why) => out.push_str(&format!("FAIL  {}: {why}\n", c.label)),
            }
        }
        let failed = self.cases.iter().filter(|c| c.failure.is_some()).count();
        out.push_str(&format!("{} cases, {failed} failed\n", self.cases.len()));
        out
    }
}

/// First `(a, b)` where two braidings disagree, with both images.
fn first_difference(table: &MonomialBraiding, conj: &MonomialBraiding) -> Option<String> {
    let d = conj.dim();
    (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).find_map(|(a, b)| {
        let (x, y) = (table.apply(a, b), conj.apply(a, b));
        (x != y).then(|| {
            format!(
                "at ({}, {}): table gives {} w{} w{}, conjugation gives {} w{} w{}",
                a + 1,
                b + 1,
                x.2,
                x.0 + 1,
                x.1 + 1,
                y.2,
                y.0 + 1,
                y.1 + 1
            )
        })
    })
}

fn lemma_case(
    c: nichols_core::Result<MonomialBraiding>,
    twist: nichols_core::Result<nichols_core::braided::TwistPair>,
    bar: nichols_core::Result<MonomialBraiding>,
    tilde: nichols_core::Result<MonomialBraiding>,
) -> Option<String> {
    let run = || -> nichols_core::Result<Option<String>> {
        let c = c?;
        if let Some((i, j, k)) = c.braid_violation() {
            return Ok(Some(format!("braid equation fails at ({}, {}, {})", i + 1, j + 1, k + 1)));
        }
        let out = twist_conjugate(&c, &twist?)?;
        if !out.equal {
            return Ok(Some(format!("tilde and bar differ {}", first_difference(&out.bar, &out.tilde).unwrap_or_default())));
        }
        if let Some(d) = first_difference(&bar?, &out.bar) {
            return Ok(Some(format!("bar table {d}")));
        }
        if let Some(d) = first_difference(&tilde?, &out.tilde) {
            return Ok(Some(format!("tilde table {d}")));
        }
        Ok(None)
    };
    run().unwrap_or_else(|e| Some(e.to_string()))
}

fn range(given: Option<u32>, default: std::ops::RangeInclusive<u32>, name: &str) -> CliResult<Vec<u32>> {
    match given {
        Some(0) => Err(Failure::Usage(format!("--{name} must be at least 1"))),
        Some(v) => Ok(vec![v]),
        None => Ok(default.collect()),
    }
}

fn big_ns(given: Option<u32>, default_max: u32) -> CliResult<Vec<u32>> {
    match given {
        Some(0) => Err(Failure::Usage("--N must be at least 1".into())),
        Some(v) => Ok(vec![v]),
        None => Ok((1..=default_max).collect()),
    }
}

pub fn k_tuples(n: u32, big_n: u32, sweep: Sweep) -> Vec<KParams> {
    let mut out = Vec::new();
    for lambda in [1, -1] {
        let js = if lambda == 1 { [2, 4] } else { [1, 3] };
        for j in js {
            for k in 0..big_n {
                for p in 0..2 {
                    for s in 1..=big_n {
                        for mu in [1, -1] {
                            if sweep == Sweep::Sample && (k != 0 || s != 1 || j > 2) {
                                continue;
                            }
                            out.push(KParams { big_n, n, j, k, p, s, mu, lambda });
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn n_tuples(n: u32, big_n: u32, sweep: Sweep) -> Vec<NParams> {
    let mut out = Vec::new();
    for lambda in [1, -1] {
        for k in 0..big_n {
            for p in 0..2 {
                for q in 0..2 {
                    for s in 1..=big_n {
                        for mu in [1, -1] {
                            if sweep == Sweep::Sample && (k != 0 || s != 1) {
                                continue;
                            }
                            out.push(NParams { big_n, n, k, p, q, s, mu, lambda });
                        }
                    }
                }
            }
        }
    }
    out
}

fn k_label(p: &KParams) -> String {
    format!("K n={} N={} j={} k={} p={} s={} mu={} lambda={}", p.n, p.big_n, p.j, p.k, p.p, p.s, p.mu, p.lambda)
}

fn n_label(p: &NParams) -> String {
    format!("N n={} N={} k={} p={} q={} s={} mu={} lambda={}", p.n, p.big_n, p.k, p.p, p.q, p.s, p.mu, p.lambda)
}

fn dihedral_case(label: String, fam: nichols_core::Result<DihedralFamily>) -> Case {
    match fam {
        Err(e) => Case { label, failure: Some(e.to_string()), extra: Value::Null },
        Ok(fam) => {
            let f: Vec<usize> = fam.f.iter().map(|x| x + 1).collect();
            let failure = match (fam.conjugated(), fam.congruence_holds()) {
                (Ok(conj), Ok(true)) if conj == fam.dihedral_target() => None,
                (Ok(_), Ok(true)) => Some("conjugated solution differs from the dihedral rack".into()),
                (Ok(_), Ok(false)) => Some("gamma is not 2a - b modulo the size".into()),
                (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
            };
            Case { label, failure, extra: json!({ "f": f }) }
        }
    }
}

pub fn run(target: Target, src: &Source, sweep: Sweep) -> CliResult<Report> {
    let params = &src.params;
    let mut cases = Vec::new();
    match target {
        Target::KLemmas => {
            for n in range(params.n, 1..=4, "n")? {
                for big_n in big_ns(params.big_n, 3)? {
                    for p in k_tuples(n, big_n, sweep) {
                        let failure = lemma_case(
                            k_braiding(&p),
                            k_twist(&p),
                            k_closed_form(&p, Variant::Bar),
                            k_closed_form(&p, Variant::Tilde),
                        );
                        cases.push(Case { label: k_label(&p), failure, extra: Value::Null });
                    }
                }
            }
        }
        Target::NLemmas => {
            for n in range(params.n, 1..=3, "n")? {
                for big_n in big_ns(params.big_n, 2)? {
                    for p in n_tuples(n, big_n, sweep) {
                        let failure = lemma_case(
                            n_braiding(&p),
                            n_twist(&p),
                            n_closed_form(&p, Variant::Bar),
                            n_closed_form(&p, Variant::Tilde),
                        );
                        cases.push(Case { label: n_label(&p), failure, extra: Value::Null });
                    }
                }
            }
        }
        Target::LRack => {
            for n in range(params.n, 1..=6, "n")? {
                cases.push(dihedral_case(format!("L n={n} ~ D_{}", 2 * n + 1), l_family(n as usize)));
            }
        }
        Target::IRack => {
            if params.n == Some(1) {
                return Err(Failure::Usage("I needs --n at least 2".into()));
            }
            for n in range(params.n, 2..=6, "n")? {
                cases.push(dihedral_case(format!("I n={n} ~ D_{}", 2 * n), i_family(n as usize)));
            }
        }
        Target::Braid | Target::Cocycle => {
            let c = src.resolve()?.braiding()?;
            let (label, hit) = if target == Target::Braid {
                ("braid equation", c.braid_violation())
            } else {
                ("cocycle condition", c.cocycle_violation()?)
            };
            let failure = hit.map(|(i, j, k)| format!("fails at triple (i, j, k) = ({}, {}, {})", i + 1, j + 1, k + 1));
            let extra = json!({
                "dim": c.dim(),
                "triple": hit.map(|(i, j, k)| [i + 1, j + 1, k + 1]),
                "coefficients": c.coefficients().iter().map(cyclo_to_json).collect::<Vec<_>>(),
            });
            cases.push(Case { label: label.into(), failure, extra });
        }
    }
    Ok(Report { target, cases })
}
