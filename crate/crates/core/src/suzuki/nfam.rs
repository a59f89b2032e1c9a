//! The `(2n+1)`-dimensional family `N^s_{k,pq}` over `Q(w)`, `w` of order `8N(2n+1)`.

use serde::{Deserialize, Serialize};

use super::{braiding_from_terms, even, select, Term, Variant};
use crate::braided::{MonomialBraiding, TwistPair};
use crate::cyclo::CycloField;
use crate::error::{Error, Result};
use crate::exactla::MonomialOperator;

/// `lambda` is not one of the module labels but enters through `R^gamma`
/// and the twist, so it is carried here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NParams {
    #[serde(rename = "N")]
    pub big_n: u32,
    pub n: u32,
    pub k: u32,
    pub p: u32,
    pub q: u32,
    pub s: u32,
    pub mu: i32,
    pub lambda: i32,
}

impl NParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Parameter(m));
        if self.big_n == 0 || self.n == 0 {
            return bad("N and n must be at least 1".into());
        }
        if !matches!(self.mu, 1 | -1) || !matches!(self.lambda, 1 | -1) {
            return bad("mu and lambda must be 1 or -1".into());
        }
        if self.k >= self.big_n {
            return bad(format!("k = {} must lie in [0, N-1]", self.k));
        }
        if self.p > 1 || self.q > 1 {
            return bad("p and q must be 0 or 1".into());
        }
        if self.s == 0 || self.s > self.big_n {
            return bad(format!("s = {} must lie in [1, N]", self.s));
        }
        u32::try_from(8 * self.big_n as u64 * (2 * self.n as u64 + 1))
            .map_err(|_| Error::Parameter("field order 8N(2n+1) overflows".into()))?;
        Ok(())
    }

    /// `8N(2n+1)`, the order of `w`.
    pub fn order(&self) -> u32 {
        8 * self.big_n * (2 * self.n + 1)
    }

    pub fn dim(&self) -> usize {
        2 * self.n as usize + 1
    }

    pub fn field(&self) -> Result<CycloField> {
        self.validate()?;
        CycloField::new(self.order())
    }

    fn exps(&self) -> Exps {
        let m = self.order() as i64;
        let half = m / 2;
        let n = self.n as i64;
        // the square root of mu is taken to be 1 or z4 = w^(M/4)
        let root_mu = if self.mu == -1 { m / 4 } else { 0 };
        Exps {
            n,
            s: self.s as i64,
            p: self.p as i64 * half,
            q: self.q as i64 * half,
            lam: if self.lambda == -1 { half } else { 0 },
            b: root_mu + 2 * self.k as i64 * (2 * n + 1),
        }
    }
}

/// Exponents of `w`; `b` is that of `B`.
#[derive(Clone, Copy)]
struct Exps {
    n: i64,
    s: i64,
    p: i64,
    q: i64,
    lam: i64,
    b: i64,
}

impl Exps {
    /// `x_1 = 1`, `x_{2k} = lambda B^{4n-4k+2}`, `x_{2k+1} = B^{4k}`.
    fn xs(&self) -> Vec<i64> {
        let n = self.n;
        (1..=2 * n + 1)
            .map(|i| {
                if i % 2 == 0 {
                    self.lam + (4 * n - 2 * i + 2) * self.b
                } else {
                    2 * (i - 1) * self.b
                }
            })
            .collect()
    }

    fn bp(&self, t: i64) -> i64 {
        t * self.b
    }

    /// `R^gamma (w_alpha (x) w_beta)`
    fn r_map(&self, gamma: i64, alpha: i64, beta: i64) -> (i64, (i64, i64)) {
        let n = self.n;
        let second = 2 * n - alpha + 2;
        let sum = beta + gamma;
        if sum <= 2 * n + 1 {
            (0, (sum, second))
        } else if sum == 2 * n + 2 {
            (self.p + self.lam + self.b, (2 * n + 1, second))
        } else {
            (self.p + self.lam + self.bp(2 * sum - 4 * n - 3), (4 * n + 3 - sum, second))
        }
    }

    /// `L^gamma (w_alpha (x) w_beta)`
    fn l_map(&self, gamma: i64, alpha: i64, beta: i64) -> Result<(i64, (i64, i64))> {
        let n = self.n;
        let second = 2 * n - alpha + 2;
        select(
            "N, L map",
            alpha as usize,
            beta as usize,
            vec![
                (gamma < beta, (self.bp(2 * gamma), (beta - gamma, second))),
                (
                    (beta..=beta + 2 * n).contains(&gamma),
                    (self.p + self.bp(2 * beta - 1), (gamma - beta + 1, second)),
                ),
            ],
        )
    }
}

pub fn n_braiding(p: &NParams) -> Result<MonomialBraiding> {
    let field = p.field()?;
    let x = p.exps();
    let n = x.n;
    let s = x.s;
    braiding_from_terms(&field, p.dim(), None, |a, b| {
        let (al, be) = (a as i64, b as i64);
        let sum_even = even(a + b);
        let low = al < n + 1;
        let high = al > n + 1;
        let lead_low = x.q + x.bp(2 * (2 * al + s - n - 2));
        let lead_high = x.q + x.bp(2 * (s + n));
        let case = select(
            "N braiding",
            a,
            b,
            vec![
                (al == n + 1, 1),
                (low && sum_even, 2),
                (high && !sum_even, 3),
                (low && !sum_even, 4),
                (high && sum_even, 5),
            ],
        )?;
        let (lead, (e, t)) = match case {
            1 => (x.q + x.bp(2 * (al + s - 1)), (0, (be, 2 * n - al + 2))),
            2 => (lead_low, x.l_map(2 * (n - al + 1), al, be)?),
            3 => (lead_high, x.l_map(2 * (al - 1 - n), al, be)?),
            4 => (lead_low, x.r_map(2 * (n - al + 1), al, be)),
            _ => (lead_high, x.r_map(2 * (al - 1 - n), al, be)),
        };
        Ok(Term::new(lead + e, t))
    })
}

/// `phi_1` scales by `x_a` and reflects odd `a`; `phi_2` reflects even `a`.
pub fn n_twist(p: &NParams) -> Result<TwistPair> {
    let field = p.field()?;
    let xs = p.exps().xs();
    let dim = p.dim();
    let reflect = |a: usize| dim + 1 - a; // label 2n+2-a, as an index
    let mut img1 = Vec::with_capacity(dim);
    let mut img2 = Vec::with_capacity(dim);
    let mut co1 = Vec::with_capacity(dim);
    for i in 0..dim {
        let a = i + 1;
        img1.push(if even(a) { i } else { reflect(a) - 1 });
        co1.push(field.root_power(xs[i]));
        img2.push(if even(a) { reflect(a) - 1 } else { i });
    }
    let phi1 = MonomialOperator::new(&field, img1, co1)?;
    let phi2 = MonomialOperator::permutation(&field, img2)?;
    TwistPair::new(phi1, phi2)
}

/// The conjugated braidings written out case by case, independent of any conjugation.
pub fn n_closed_form(p: &NParams, variant: Variant) -> Result<MonomialBraiding> {
    let field = p.field()?;
    let x = p.exps();
    let xs = x.xs();
    let n = x.n;
    let s = x.s;
    let (pq, q, lam) = (x.p + x.q, x.q, x.lam);
    let bp = |t: i64| x.bp(t);
    match variant {
        Variant::Tilde => braiding_from_terms(&field, p.dim(), Some(&xs), |a, b| {
            let (ai, bi) = (a as i64, b as i64);
            let (ea, eb) = (even(a), even(b));
            let sum_even = even(a + b);
            let g = 2 * ai - bi;
            if ai == n + 1 {
                return Ok(Term::new(q + bp(2 * n + 2 * s), (2 * n + 2 - bi, n + 1)).x(n + 1, 2 * n + 2 - bi));
            }
            let lines: Vec<(bool, (i64, i64))> = if ai < n + 1 && g > 0 {
                vec![
                    (sum_even, (q + bp(2 * n + 2 * s), g)),
                    (ea && !eb, (q + bp(4 * ai + 2 * s - 2 * n - 4), g)),
                    (!ea && eb, (q + bp(6 * n + 4 + 2 * s - 4 * ai), g)),
                ]
            } else if ai < n + 1 {
                let t = 2 * n + 1 + g;
                vec![
                    (ea && eb, (pq + bp(2 * n - 1 + 4 * ai - 2 * bi + 2 * s), t)),
                    (!ea && !eb, (pq + lam + bp(2 * n + 1 - 4 * ai + 2 * bi + 2 * s), t)),
                    (ea && !eb, (pq + lam + bp(-2 * n - 3 + 2 * bi + 2 * s), t)),
                    (!ea && eb, (pq + bp(6 * n + 3 - 2 * bi + 2 * s), t)),
                ]
            } else if g <= 2 * n + 1 {
                vec![
                    (sum_even, (q + bp(2 * n + 2 * s), g)),
                    (ea && !eb, (q + bp(-2 * n - 4 + 4 * ai + 2 * s), g)),
                    (!ea && eb, (q + bp(6 * n + 4 - 4 * ai + 2 * s), g)),
                ]
            } else if g == 2 * n + 2 {
                vec![
                    (ea && eb, (pq + lam + bp(2 * n + 1 + 2 * s), 1)),
                    (!ea && eb, (pq + lam + bp(6 * n + 5 - 4 * ai + 2 * s), 1)),
                ]
            } else {
                let t = g - 2 * n - 1;
                vec![
                    (ea && eb, (pq + lam + bp(-2 * n - 3 + 4 * ai - 2 * bi + 2 * s), t)),
                    (!ea && !eb, (pq + bp(6 * n + 3 - 4 * ai + 2 * bi + 2 * s), t)),
                    (ea && !eb, (pq + bp(2 * n - 1 + 2 * bi + 2 * s), t)),
                    (!ea && eb, (pq + lam + bp(2 * n + 1 - 2 * bi + 2 * s), t)),
                ]
            };
            let (e, t) = select("N tilde", a, b, lines)?;
            Ok(Term::new(e, (t, ai)).x(ai, t))
        }),
        Variant::Bar => braiding_from_terms(&field, p.dim(), Some(&xs), |a, b| {
            let (ai, bi) = (a as i64, b as i64);
            let (ea, eb) = (even(a), even(b));
            let sum_even = even(a + b);
            let g = 2 * ai - bi;
            if ai == n + 1 {
                return Ok(Term::new(q + bp(2 * n + 2 * s), (2 * n + 2 - bi, n + 1)).x(bi, n + 1));
            }
            let lines: Vec<(bool, (i64, i64))> = if ai < n + 1 && g > 0 {
                vec![
                    (sum_even, (q + bp(2 * n + 2 * s), g)),
                    (!ea && eb, (q + bp(-2 * n - 4 + 4 * ai + 2 * s), g)),
                    (ea && !eb, (q + bp(6 * n + 4 - 4 * ai + 2 * s), g)),
                ]
            } else if ai < n + 1 && g == 0 {
                vec![
                    (ea && eb, (pq + lam + bp(2 * n + 1 + 2 * s), 2 * n + 1)),
                    (!ea && eb, (pq + lam + bp(-2 * n - 3 + 4 * ai + 2 * s), 2 * n + 1)),
                ]
            } else if ai < n + 1 {
                let t = 2 * n + 1 + g;
                vec![
                    (ea && eb, (pq + lam + bp(2 * n + 1 - 4 * ai + 2 * bi + 2 * s), t)),
                    (!ea && !eb, (pq + bp(2 * n - 1 + 4 * ai - 2 * bi + 2 * s), t)),
                    (!ea && eb, (pq + lam + bp(-2 * n - 3 + 2 * bi + 2 * s), t)),
                    (ea && !eb, (pq + bp(6 * n + 3 - 2 * bi + 2 * s), t)),
                ]
            } else if g < 2 * n + 2 {
                vec![
                    (sum_even, (q + bp(2 * n + 2 * s), g)),
                    (ea && !eb, (q + bp(6 * n + 4 - 4 * ai + 2 * s), g)),
                    (!ea && eb, (q + bp(-2 * n - 4 + 4 * ai + 2 * s), g)),
                ]
            } else {
                let t = g - 2 * n - 1;
                vec![
                    (ea && eb, (pq + bp(6 * n + 3 - 4 * ai + 2 * bi + 2 * s), t)),
                    (!ea && !eb, (pq + lam + bp(-2 * n - 3 + 4 * ai - 2 * bi + 2 * s), t)),
                    (ea && !eb, (pq + lam + bp(2 * n + 1 - 2 * bi + 2 * s), t)),
                    (!ea && eb, (pq + bp(2 * n - 1 + 2 * bi + 2 * s), t)),
                ]
            };
            let (e, t) = select("N bar", a, b, lines)?;
            Ok(Term::new(e, (t, ai)).x(bi, ai))
        }),
    }
}
