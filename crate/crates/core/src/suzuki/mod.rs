//! Explicit braided vector spaces over the Suzuki algebras: `V_abe`, the `K`
//! and `N` families with their twists and closed-form conjugated tables, the
//! `L` and `I` set-theoretic solutions, and the dimension verdicts.
//!
//! Coefficients are assembled as exponents of a fixed primitive root `w`
//! (the field generator) and only turned into field elements at the end.
//! Labels in the case tables are 1-based, as in the family definitions.

pub mod dihedral;
pub mod kfam;
pub mod nfam;
pub mod vabe;
pub mod verdict;

pub use dihedral::{i_family, l_family, l_family_literal, DihedralFamily};
pub use kfam::{k_bar_n2, k_braiding, k_closed_form, k_q, k_twist, k_verdict, KParams};
pub use nfam::{n_braiding, n_closed_form, n_twist, NParams};
pub use vabe::{v_abe, v_abe_diagonalize, v_abe_verdict, VAbeDiagonal, VAbeParams};
pub use verdict::{classify, Family, FamilyVerdict, Verdict};

use crate::braided::MonomialBraiding;
use crate::cyclo::CycloField;
use crate::error::{Error, Result};

/// Which twisted braiding a closed-form table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `(phi_2^-1 (x) phi_1^-1) c (phi_2 (x) phi_1)`
    Bar,
    /// `(phi_1^-1 (x) phi_2^-1) c (phi_1 (x) phi_2)`
    Tilde,
}

/// Picks the unique case whose condition holds, or reports how many did.
pub(crate) fn select<T>(table: &'static str, a: usize, b: usize, cases: Vec<(bool, T)>) -> Result<T> {
    let mut hits = cases.into_iter().filter(|(when, _)| *when).map(|(_, v)| v);
    let first = hits.next();
    let extra = hits.count();
    match (first, extra) {
        (Some(v), 0) => Ok(v),
        (first, extra) => Err(Error::CaseTotality {
            table,
            a,
            b,
            matched: first.map_or(0, |_| 1 + extra),
        }),
    }
}

/// One line of a closed-form table: `w^exp * x_num / x_den`, sent to `target`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub exp: i64,
    pub x_num: Option<i64>,
    pub x_den: Option<i64>,
    pub target: (i64, i64),
}

impl Term {
    pub fn new(exp: i64, target: (i64, i64)) -> Self {
        Term {
            exp,
            x_num: None,
            x_den: None,
            target,
        }
    }

    pub fn x(mut self, num: i64, den: i64) -> Self {
        self.x_num = Some(num);
        self.x_den = Some(den);
        self
    }
}

fn label(v: i64, dim: usize) -> Result<usize> {
    if (1..=dim as i64).contains(&v) {
        Ok(v as usize - 1)
    } else {
        Err(Error::IndexOutOfRange {
            index: v.max(0) as usize,
            max: dim,
        })
    }
}

/// Builds a braiding on `dim` from a table rule `(a, b) -> Term`, with the
/// `x`-sequence exponents `xs` (index 0 holds `x_1`).
pub(crate) fn braiding_from_terms(
    field: &CycloField,
    dim: usize,
    xs: Option<&[i64]>,
    rule: impl Fn(usize, usize) -> Result<Term>,
) -> Result<MonomialBraiding> {
    let x_exp = |i: i64| -> Result<i64> {
        let xs = xs.ok_or_else(|| Error::Parameter("table uses x but none was supplied".into()))?;
        Ok(xs[label(i, xs.len())?])
    };
    MonomialBraiding::from_fn(field, dim, |i, j| {
        let t = rule(i + 1, j + 1)?;
        let mut e = t.exp;
        if let Some(u) = t.x_num {
            e += x_exp(u)?;
        }
        if let Some(v) = t.x_den {
            e -= x_exp(v)?;
        }
        Ok((label(t.target.0, dim)?, label(t.target.1, dim)?, field.root_power(e)))
    })
}

pub(crate) fn even(x: usize) -> bool {
    x.is_multiple_of(2)
}
