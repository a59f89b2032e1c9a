//! Dimension verdicts, read off the stated conditions without computing ranks.

use serde::Serialize;

use super::{k_verdict, v_abe_verdict, KParams, NParams, VAbeParams};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Finite {
        total: u64,
        #[serde(rename = "type")]
        type_name: String,
    },
    Infinite { rule: String },
    Open { problem: String },
}

impl Verdict {
    pub fn finite(total: u64, type_name: &str) -> Self {
        Verdict::Finite {
            total,
            type_name: type_name.into(),
        }
    }

    pub fn infinite(rule: &str) -> Self {
        Verdict::Infinite { rule: rule.into() }
    }

    pub fn open(problem: &str) -> Self {
        Verdict::Open {
            problem: problem.into(),
        }
    }

    pub fn dimension(&self) -> Option<u64> {
        match self {
            Verdict::Finite { total, .. } => Some(*total),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyVerdict {
    pub family: String,
    pub params: serde_json::Value,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Vabe(VAbeParams),
    K(KParams),
    N(NParams),
    L { n: usize },
    I { n: usize },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Vabe(_) => "Vabe",
            Family::K(_) => "K",
            Family::N(_) => "N",
            Family::L { .. } => "L",
            Family::I { .. } => "I",
        }
    }
}

pub(crate) const D2N_RULE: &str = "D_{2n} rack, n>2";

const ODD_DIHEDRAL: &str = "Nichols algebras of dihedral rack type D_{2n+1} are not determined";

pub fn classify(family: &Family) -> Result<FamilyVerdict> {
    let with = |params: serde_json::Value, verdict: Verdict| FamilyVerdict {
        family: family.tag().into(),
        params,
        verdict,
    };
    Ok(match family {
        Family::Vabe(p) => v_abe_verdict(p),
        Family::K(p) => k_verdict(p)?,
        Family::N(p) => {
            p.validate()?;
            with(serde_json::to_value(p).expect("params serialise"), Verdict::open(ODD_DIHEDRAL))
        }
        Family::L { n } => {
            if *n == 0 {
                return Err(crate::Error::Parameter("n must be at least 1".into()));
            }
            with(serde_json::json!({ "n": n }), Verdict::open(ODD_DIHEDRAL))
        }
        Family::I { n } => {
            let params = serde_json::json!({ "n": n });
            match *n {
                0 | 1 => return Err(crate::Error::Parameter("n must be at least 2".into())),
                2 => with(
                    params,
                    Verdict::open("rack type D_4; the set solution alone does not fix the cocycle"),
                ),
                _ => with(params, Verdict::infinite(D2N_RULE)),
            }
        }
    })
}
