//! The `2n`-dimensional family `K^s_{jk,p}` over `Q(w)`, `w` of order `8nN`.

use serde::{Deserialize, Serialize};

use super::{braiding_from_terms, even, select, Term, Variant};
use crate::braided::{MonomialBraiding, TwistPair};
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::exactla::MonomialOperator;
use crate::suzuki::verdict::{FamilyVerdict, Verdict, D2N_RULE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KParams {
    #[serde(rename = "N")]
    pub big_n: u32,
    pub n: u32,
    pub j: u32,
    pub k: u32,
    pub p: u32,
    pub s: u32,
    pub mu: i32,
    pub lambda: i32,
}

fn sign_ok(x: i32) -> bool {
    x == 1 || x == -1
}

impl KParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Parameter(m));
        if self.big_n == 0 || self.n == 0 {
            return bad("N and n must be at least 1".into());
        }
        if !sign_ok(self.mu) || !sign_ok(self.lambda) {
            return bad("mu and lambda must be 1 or -1".into());
        }
        let j_ok = if self.lambda == -1 {
            matches!(self.j, 1 | 3)
        } else {
            matches!(self.j, 2 | 4)
        };
        if !j_ok {
            return bad(format!("j = {} is not allowed for lambda = {}", self.j, self.lambda));
        }
        if self.k >= self.big_n {
            return bad(format!("k = {} must lie in [0, N-1]", self.k));
        }
        if self.p > 1 {
            return bad("p must be 0 or 1".into());
        }
        if self.s == 0 || self.s > self.big_n {
            return bad(format!("s = {} must lie in [1, N]", self.s));
        }
        u32::try_from(8 * self.n as u64 * self.big_n as u64)
            .map_err(|_| Error::Parameter("field order 8nN overflows".into()))?;
        Ok(())
    }

    /// `8nN`, the order of `w`.
    pub fn order(&self) -> u32 {
        8 * self.n * self.big_n
    }

    pub fn dim(&self) -> usize {
        2 * self.n as usize
    }

    pub fn field(&self) -> Result<CycloField> {
        self.validate()?;
        CycloField::new(self.order())
    }

    fn exps(&self) -> Exps {
        let m = self.order() as i64;
        let half = m / 2;
        let n = self.n as i64;
        Exps {
            n,
            s: self.s as i64,
            sign: self.p as i64 * half,
            lam: if self.lambda == -1 { half } else { 0 },
            mk: (if self.mu == -1 { half } else { 0 }) + 8 * n * self.k as i64,
            jj: 2 * self.j as i64 * self.big_n as i64,
        }
    }
}

/// Exponents of `w` for the scalars in the tables; `mk` is `mu K`.
#[derive(Clone, Copy)]
struct Exps {
    n: i64,
    s: i64,
    sign: i64,
    lam: i64,
    mk: i64,
    jj: i64,
}

impl Exps {
    /// `x_1 = 1`, `x_{2k} = (J^-1 K mu)^{n-2k+1}`, `x_{2k+1} = lambda (J K mu)^{-n+2k}`.
    fn xs(&self) -> Vec<i64> {
        let n = self.n;
        (1..=2 * n)
            .map(|i| {
                if i == 1 {
                    0
                } else if i % 2 == 0 {
                    (n - i + 1) * (self.mk - self.jj)
                } else {
                    self.lam + (i - 1 - n) * (self.jj + self.mk)
                }
            })
            .collect()
    }

    /// `(-1)^p lambda^l (mu K)^u J^v`
    fn coeff(&self, l: i64, u: i64, v: i64) -> i64 {
        self.sign + l * self.lam + u * self.mk + v * self.jj
    }

    fn q(&self) -> i64 {
        self.coeff(0, self.s, 0)
    }
}

/// `q = (-1)^p (K mu)^s`.
pub fn k_q(p: &KParams) -> Result<CycloNum> {
    Ok(p.field()?.root_power(p.exps().q()))
}

pub fn k_braiding(p: &KParams) -> Result<MonomialBraiding> {
    let field = p.field()?;
    let x = p.exps();
    let n = x.n;
    let s = x.s;
    braiding_from_terms(&field, p.dim(), None, |a, b| {
        let (ai, bi) = (a as i64, b as i64);
        let psi_e = bi + 2 * ai - 2;
        let (r, d) = (psi_e.div_euclid(2 * n), psi_e.rem_euclid(2 * n));
        let psi_o = 2 * n + 1 - bi + 2 * ai - 2;
        let (e, f) = (psi_o.div_euclid(2 * n), psi_o.rem_euclid(2 * n));
        let second = 2 * n - ai + 2;
        let sum_even = even(a + b);
        select(
            "K braiding",
            a,
            b,
            vec![
                (a == 1, Term::new(x.q(), (bi, 1))),
                (
                    a > 1 && d == 0 && sum_even,
                    Term::new(x.coeff(r, s + n * (r - 2), n * (r - 2)), (2 * n, second)),
                ),
                (
                    a > 1 && d > 0 && sum_even,
                    Term::new(x.coeff(r + 1, s + n * (r - 1), n * (r - 1)), (d, second)),
                ),
                (
                    a > 1 && f == 0 && !sum_even,
                    Term::new(x.coeff(e, s - n * e - 2 + 2 * ai, -n * e), (1, second)),
                ),
                (
                    a > 1 && f > 0 && !sum_even,
                    Term::new(
                        x.coeff(e + 1, s - n * (e + 1) - 2 + 2 * ai, -n * (e + 1)),
                        (2 * n + 1 - f, second),
                    ),
                ),
            ],
        )
    })
}

/// `phi_1` scales by `x_b` and reflects odd `b != 1`; `phi_2` reflects even indices.
pub fn k_twist(p: &KParams) -> Result<TwistPair> {
    let field = p.field()?;
    let x = p.exps();
    let xs = x.xs();
    let dim = p.dim();
    let reflect = |a: usize| dim + 2 - a;
    let mut img1 = Vec::with_capacity(dim);
    let mut img2 = Vec::with_capacity(dim);
    let mut co1 = Vec::with_capacity(dim);
    for i in 0..dim {
        let a = i + 1;
        img1.push(if a != 1 && !even(a) { reflect(a) - 1 } else { i });
        co1.push(field.root_power(xs[i]));
        img2.push(if even(a) { reflect(a) - 1 } else { i });
    }
    let phi1 = MonomialOperator::new(&field, img1, co1)?;
    let phi2 = MonomialOperator::permutation(&field, img2)?;
    TwistPair::new(phi1, phi2)
}

fn parity_split(a: usize, b: usize) -> (bool, bool) {
    (even(a), even(b))
}

/// The conjugated braidings written out case by case, independent of any conjugation.
pub fn k_closed_form(p: &KParams, variant: Variant) -> Result<MonomialBraiding> {
    let field = p.field()?;
    let x = p.exps();
    let xs = x.xs();
    let n = x.n;
    let s = x.s;
    let dim = p.dim();
    match variant {
        Variant::Bar => braiding_from_terms(&field, dim, Some(&xs), |a, b| {
            let (ai, bi) = (a as i64, b as i64);
            let (ea, eb) = parity_split(a, b);
            if a == 1 {
                return select(
                    "K bar, a = 1",
                    a,
                    b,
                    vec![
                        (eb, Term::new(x.q(), (2 * n + 2 - bi, 1)).x(bi, 1)),
                        (b == 1, Term::new(x.q(), (1, 1))),
                        (b != 1 && !eb, Term::new(x.q(), (2 * n + 2 - bi, 1)).x(bi, 1)),
                    ],
                );
            }
            if even(a + b) {
                let psi = select(
                    "K bar, Psi_E",
                    a,
                    b,
                    vec![
                        (ea && eb, 4 * n + 2 + bi - 2 * ai),
                        (!ea && b == 1, 2 * ai - 1),
                        (!ea && b != 1 && !eb, 2 * n + 2 * ai - bi),
                    ],
                )?;
                let (r, d) = (psi.div_euclid(2 * n), psi.rem_euclid(2 * n));
                let c1 = x.coeff(r + 1, s + n * (r - 1), n * (r - 1));
                select(
                    "K bar, a+b even",
                    a,
                    b,
                    vec![
                        (d == 0, Term::new(x.coeff(r, s + n * (r - 2), n * (r - 2)), (2, ai)).x(bi, ai)),
                        (d != 0 && d % 2 == 0, Term::new(c1, (2 * n + 2 - d, ai)).x(bi, ai)),
                        (d % 2 == 1, Term::new(c1, (d, ai)).x(bi, ai)),
                    ],
                )
            } else {
                let psi = select(
                    "K bar, Psi_O",
                    a,
                    b,
                    vec![
                        (ea && b == 1, 6 * n + 2 - 2 * ai),
                        (ea && b != 1 && !eb, 4 * n + 1 + bi - 2 * ai),
                        (!ea && eb, 2 * n - 1 + 2 * ai - bi),
                    ],
                )?;
                let (e, f) = (psi.div_euclid(2 * n), psi.rem_euclid(2 * n));
                select(
                    "K bar, a+b odd",
                    a,
                    b,
                    vec![
                        (
                            f == 0,
                            Term::new(x.coeff(e, s + n * (4 - e) + 2 - 2 * ai, -n * e), (1, ai)).x(bi, ai),
                        ),
                        (
                            f != 0 && f % 2 == 0,
                            Term::new(
                                x.coeff(e + 1, s + n * (3 - e) + 2 - 2 * ai, -n * (e + 1)),
                                (2 * n + 1 - f, ai),
                            )
                            .x(bi, ai),
                        ),
                        (
                            f % 2 == 1,
                            Term::new(
                                x.coeff(e + 1, s - n * (e + 1) - 2 + 2 * ai, -n * (e + 1)),
                                (1 + f, ai),
                            )
                            .x(bi, ai),
                        ),
                    ],
                )
            }
        }),
        Variant::Tilde => braiding_from_terms(&field, dim, Some(&xs), |a, b| {
            let (ai, bi) = (a as i64, b as i64);
            let (ea, eb) = parity_split(a, b);
            if a == 1 {
                return select(
                    "K tilde, a = 1",
                    a,
                    b,
                    vec![
                        (b != 1, Term::new(x.q(), (2 * n + 2 - bi, 1)).x(1, 2 * n + 2 - bi)),
                        (b == 1, Term::new(x.q(), (1, 1))),
                    ],
                );
            }
            if even(a + b) {
                let psi = select(
                    "K tilde, Psi_E",
                    a,
                    b,
                    vec![(ea && eb, 2 * n + 2 * ai - bi), (!ea && !eb, 4 * n + 2 + bi - 2 * ai)],
                )?;
                let (r, d) = (psi.div_euclid(2 * n), psi.rem_euclid(2 * n));
                let c1 = x.coeff(r + 1, s + n * (r - 1), n * (r - 1));
                select(
                    "K tilde, a+b even",
                    a,
                    b,
                    vec![
                        (
                            d == 0,
                            Term::new(x.coeff(r, s + n * (r - 2), n * (r - 2)), (2 * n, ai)).x(ai, 2 * n),
                        ),
                        (d != 0 && d % 2 == 0, Term::new(c1, (d, ai)).x(ai, d)),
                        (d == 1, Term::new(c1, (1, ai)).x(ai, 1)),
                        (d != 1 && d % 2 == 1, Term::new(c1, (2 * n + 2 - d, ai)).x(ai, 2 * n + 2 - d)),
                    ],
                )
            } else {
                let psi = select(
                    "K tilde, Psi_O",
                    a,
                    b,
                    vec![(ea && !eb, 2 * n - 1 + 2 * ai - bi), (!ea && eb, 4 * n + 1 + bi - 2 * ai)],
                )?;
                let (e, f) = (psi.div_euclid(2 * n), psi.rem_euclid(2 * n));
                select(
                    "K tilde, a+b odd",
                    a,
                    b,
                    vec![
                        (
                            f == 0,
                            Term::new(x.coeff(e, s - n * e + 2 * ai - 2, -n * e), (1, ai)).x(ai, 1),
                        ),
                        (
                            f != 0 && f % 2 == 0,
                            Term::new(
                                x.coeff(e + 1, s - n * (e + 1) + 2 * ai - 2, -n * (e + 1)),
                                (f + 1, ai),
                            )
                            .x(ai, f + 1),
                        ),
                        (
                            f % 2 == 1,
                            Term::new(
                                x.coeff(e + 1, s + n * (3 - e) - 2 * ai + 2, -n * (e + 1)),
                                (2 * n + 1 - f, ai),
                            )
                            .x(ai, 2 * n + 1 - f),
                        ),
                    ],
                )
            }
        }),
    }
}

/// The sixteen explicit values of the bar-conjugated braiding for `n = 2`.
pub fn k_bar_n2(p: &KParams) -> Result<MonomialBraiding> {
    if p.n != 2 {
        return Err(Error::Parameter("the explicit table is for n = 2".into()));
    }
    let field = p.field()?;
    let x = p.exps();
    let q = x.q();
    // (lambda power, (mu K) power, J power), target
    let table = |a: usize, b: usize| -> ((i64, i64, i64), (i64, i64)) {
        match (a, b) {
            (1, 1) => ((0, 0, 0), (1, 1)),
            (1, 2) => ((0, 1, -1), (4, 1)),
            (1, 3) => ((1, 0, 0), (3, 1)),
            (1, 4) => ((0, -1, 1), (2, 1)),
            (2, 1) => ((1, -1, -5), (3, 2)),
            (2, 2) => ((0, 0, 0), (2, 2)),
            (2, 3) => ((1, 1, -3), (1, 2)),
            (2, 4) => ((1, 0, 4), (4, 2)),
            (3, 1) => ((1, 0, 0), (1, 3)),
            (3, 2) => ((1, 1, -5), (4, 3)),
            (3, 3) => ((0, 0, 0), (3, 3)),
            (3, 4) => ((1, -1, -3), (2, 3)),
            (4, 1) => ((0, -1, -5), (3, 4)),
            (4, 2) => ((1, 0, -4), (2, 4)),
            (4, 3) => ((0, 1, -3), (1, 4)),
            _ => ((0, 0, 0), (4, 4)),
        }
    };
    braiding_from_terms(&field, 4, None, |a, b| {
        let ((l, u, v), t) = table(a, b);
        Ok(Term::new(q + l * x.lam + u * x.mk + v * x.jj, t))
    })
}

fn order_of(x: &CycloNum) -> Option<u32> {
    x.root_order()
}

/// Finite iff one of the stated conditions holds; never computes ranks.
pub fn k_verdict(p: &KParams) -> Result<FamilyVerdict> {
    let field = p.field()?;
    let q = k_q(p)?;
    let lam = field.from_int(p.lambda as i64);
    let one = field.one();
    let verdict = match p.n {
        1 => {
            let q2 = &q * &q;
            let q3 = &q2 * &q;
            let m = order_of(&q).expect("q is a root of unity");
            if (&lam * &q2).is_one() && q != one {
                Verdict::finite(m as u64 * m as u64, "Cartan A1xA1")
            } else if (&lam * &q3).is_one() && q != one {
                Verdict::finite((m as u64).pow(3), "Cartan A2")
            } else {
                Verdict::infinite("n = 1, neither lambda q^2 = 1 != q nor lambda q^3 = 1 != q")
            }
        }
        2 => {
            if q == field.from_int(-1) && p.lambda == 1 {
                Verdict::finite(64, "Cartan A2xA2")
            } else {
                Verdict::infinite("n = 2 without q = -1 and lambda = 1")
            }
        }
        _ => Verdict::infinite(D2N_RULE),
    };
    Ok(FamilyVerdict {
        family: "K".into(),
        params: serde_json::to_value(p).expect("params serialise"),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::twist_conjugate;

    pub(crate) fn sample(n: u32) -> KParams {
        KParams {
            big_n: 1,
            n,
            j: 2,
            k: 0,
            p: 1,
            s: 1,
            mu: 1,
            lambda: 1,
        }
    }

    #[test]
    fn validation() {
        assert!(sample(2).validate().is_ok());
        for bad in [
            KParams { j: 1, ..sample(2) },
            KParams { lambda: -1, ..sample(2) },
            KParams { k: 1, ..sample(2) },
            KParams { s: 0, ..sample(2) },
            KParams { p: 2, ..sample(2) },
            KParams { mu: 0, ..sample(2) },
            KParams { n: 0, ..sample(2) },
        ] {
            assert!(matches!(bad.validate(), Err(Error::Parameter(_))), "{bad:?}");
        }
    }

    #[test]
    fn q_for_the_64_example() {
        let p = sample(2);
        assert_eq!(k_q(&p).unwrap(), p.field().unwrap().from_int(-1));
    }

    #[test]
    fn a_equals_one_row() {
        let p = KParams {
            big_n: 3,
            k: 2,
            s: 2,
            ..sample(3)
        };
        let c = k_braiding(&p).unwrap();
        let q = k_q(&p).unwrap();
        for b in 0..6 {
            assert_eq!(c.apply(0, b), (b, 0, &q));
        }
    }

    #[test]
    fn n1_x2_is_one() {
        let p = KParams {
            big_n: 2,
            k: 1,
            ..sample(1)
        };
        assert_eq!(p.exps().xs()[1].rem_euclid(p.order() as i64), 0);
    }

    #[test]
    fn phi2_fixes_odd_indices() {
        let t = k_twist(&sample(3)).unwrap();
        for i in (0..6).step_by(2) {
            assert_eq!(t.phi2.at(i).0, i);
        }
        assert_eq!(t.phi2.at(1).0, 5);
    }

    #[test]
    fn small_case_twist_and_tables() {
        for n in 1..=3 {
            let p = sample(n);
            let c = k_braiding(&p).unwrap();
            assert!(c.check_braid_equation());
            let out = twist_conjugate(&c, &k_twist(&p).unwrap()).unwrap();
            assert!(out.equal);
            assert_eq!(k_closed_form(&p, Variant::Bar).unwrap(), out.bar);
            assert_eq!(k_closed_form(&p, Variant::Tilde).unwrap(), out.tilde);
        }
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(k_verdict(&sample(2)).unwrap().verdict, Verdict::finite(64, "Cartan A2xA2"));
        assert!(matches!(k_verdict(&sample(3)).unwrap().verdict, Verdict::Infinite { .. }));
        // n = 1, lambda = 1, q = -1
        assert_eq!(k_verdict(&sample(1)).unwrap().verdict, Verdict::finite(4, "Cartan A1xA1"));
    }
}
