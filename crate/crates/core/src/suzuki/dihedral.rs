//! The rack-type set solutions underlying the `L` and `I` families, and the
//! relabellings that turn them into dihedral racks.

use super::{even, select};
use crate::braided::{Rack, SetSolution};
use crate::error::{Error, Result};

/// A rack-type solution `r(a, b) = (gamma(a, b), a)` with its relabelling `f`
/// (0-based), such that `(f^-1 x f^-1) r (f x f)` is dihedral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralFamily {
    pub solution: SetSolution,
    pub f: Vec<usize>,
}

impl DihedralFamily {
    pub fn size(&self) -> usize {
        self.f.len()
    }

    pub fn conjugated(&self) -> Result<SetSolution> {
        self.solution.conjugate_by(&self.f)
    }

    /// `D_m` on the labels `1..=m`, where label `m` stands for the residue `0`.
    pub fn dihedral_target(&self) -> SetSolution {
        let m = self.size();
        let g: Vec<usize> = (0..m).map(|r| (r + m - 1) % m).collect();
        Rack::dihedral(m)
            .relabel(&g)
            .expect("shift is a bijection")
            .to_solution()
    }

    /// Every conjugated pair has the form `(gamma, a)` with `gamma = 2a - b mod m`.
    pub fn congruence_holds(&self) -> Result<bool> {
        let m = self.size() as i64;
        let conj = self.conjugated()?;
        Ok((1..=m).all(|a| {
            (1..=m).all(|b| {
                let (g, second) = conj.r(a as usize - 1, b as usize - 1);
                second as i64 + 1 == a && (g as i64 + 1 - (2 * a - b)).rem_euclid(m) == 0
            })
        }))
    }
}

fn from_rule(m: usize, rule: impl Fn(usize, usize) -> Result<i64>) -> Result<SetSolution> {
    let mut sigma = vec![vec![0; m]; m];
    let mut tau = vec![vec![0; m]; m];
    for a in 1..=m {
        for b in 1..=m {
            let g = rule(a, b)?;
            if !(1..=m as i64).contains(&g) {
                return Err(Error::IndexOutOfRange {
                    index: g.max(0) as usize,
                    max: m,
                });
            }
            sigma[a - 1][b - 1] = g as usize - 1;
            tau[b - 1][a - 1] = a - 1;
        }
    }
    SetSolution::new(sigma, tau)
}

/// How the first line of the odd-sum table of the `L` solution is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LFirstLine {
    /// `d_1 = 0`: the only reading under which the table is total.
    D1Zero,
    /// `d_0 = 0`, as printed; overlaps the `d_1 = 1, d_0 = 0` line and leaves
    /// `d_1 = 0` uncovered.
    D0Zero,
}

fn l_rule(n: usize, a: usize, b: usize, first: LFirstLine) -> Result<i64> {
    let m = 2 * n as i64 + 1;
    let (ai, bi) = (a as i64, b as i64);
    if !even(a + b) {
        let v = bi + 2 * ai - 1;
        let (d1, d0) = (v.div_euclid(m), v.rem_euclid(m));
        let first_cond = match first {
            LFirstLine::D1Zero => d1 == 0,
            LFirstLine::D0Zero => d0 == 0,
        };
        select(
            "L, a+b odd",
            a,
            b,
            vec![
                (first_cond, v),
                (d1 == 1 && d0 == 0, m),
                (d1 == 1 && d0 != 0, m + 1 - d0),
                (d1 == 2 && d0 == 0, 1),
                (d1 == 2 && d0 != 0, d0),
            ],
        )
    } else {
        let w = 2 * ai - 1 - bi;
        let (d1, d0) = (w.div_euclid(m), w.rem_euclid(m));
        select(
            "L, a+b even",
            a,
            b,
            vec![
                (2 * ai - 1 < bi, bi - 2 * ai + 1),
                (w >= 0 && d1 == 0, 2 * ai - bi),
                (w >= 0 && d1 == 1, m - d0),
            ],
        )
    }
}

/// The `L` solution on `[1, 2n+1]` with `f(a) = a` for odd `a`, `2n+2-a` for even `a`.
pub fn l_family(n: usize) -> Result<DihedralFamily> {
    l_family_literal(n, LFirstLine::D1Zero)
}

pub fn l_family_literal(n: usize, first: LFirstLine) -> Result<DihedralFamily> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let m = 2 * n + 1;
    let solution = from_rule(m, |a, b| l_rule(n, a, b, first))?;
    let f = (1..=m).map(|a| if even(a) { m + 1 - a } else { a } - 1).collect();
    Ok(DihedralFamily { solution, f })
}

fn i_rule(n: usize, a: usize, b: usize) -> Result<i64> {
    let n_ = n as i64;
    let (ai, bi) = (a as i64, b as i64);
    let a_low = a <= n;
    let b_low = b <= n;
    let se = even(a + b);
    let (p, m) = (2 * ai + bi, 2 * ai - bi);
    let lines: Vec<(bool, i64)> = match (se, a_low, b_low) {
        (true, true, true) => vec![
            (bi == 2 * ai, 1),
            (bi > 2 * ai, bi - 2 * ai + 1),
            (0 < m && m <= n_, m),
            (n_ < m, 2 * n_ + 1 - m),
        ],
        (false, true, true) => vec![
            (p - 1 <= n_, p - 1),
            (n_ <= p - 2 && p - 2 < 2 * n_, 2 * n_ + 2 - p),
            (2 * n_ <= p - 2, p - 2 * n_ - 1),
        ],
        (false, false, false) => vec![
            (3 * n_ + 3 <= p && p <= 4 * n_ + 1, p - 2 * n_ - 1),
            (4 * n_ + 2 <= p && p <= 5 * n_ + 1, 6 * n_ + 2 - p),
            (5 * n_ + 2 <= p, p - 4 * n_ - 1),
        ],
        (true, false, false) => vec![
            (m == n_, n_ + 1),
            (n_ < m && m <= 2 * n_, m),
            (2 * n_ < m && m < 3 * n_, 4 * n_ + 1 - m),
            (0 < m && m < n_, 2 * n_ + 1 - m),
        ],
        (true, false, true) => vec![
            (2 * n_ + 3 <= p && p <= 3 * n_ + 1, p - 2 * n_ - 1),
            (3 * n_ + 2 <= p && p <= 4 * n_ + 1, 4 * n_ + 2 - p),
            (4 * n_ + 2 <= p && p <= 5 * n_, p - 4 * n_ - 1),
        ],
        (false, false, true) => vec![
            (m == 2 * n_, 1),
            (2 * n_ < m && m <= 3 * n_, m - 2 * n_),
            (3 * n_ < m && m < 4 * n_, 4 * n_ + 1 - m),
            (n_ < m && m < 2 * n_, 2 * n_ + 1 - m),
        ],
        (false, true, false) => vec![
            (m == -n_, n_ + 1),
            (-n_ < m && m <= 0, 2 * n_ + m),
            (1 <= m, 2 * n_ + 1 - m),
            (m < -n_, 1 - m),
        ],
        (true, true, false) => vec![
            (p <= 2 * n_ + 1, p - 1),
            (2 * n_ + 2 <= p && p <= 3 * n_ + 1, 4 * n_ + 2 - p),
            (p >= 3 * n_ + 2, p - 2 * n_ - 1),
        ],
    };
    let table = match (se, a_low, b_low) {
        (true, true, true) => "I, case 1",
        (false, true, true) => "I, case 2",
        (false, false, false) => "I, case 3",
        (true, false, false) => "I, case 4",
        (true, false, true) => "I, case 5",
        (false, false, true) => "I, case 6",
        (false, true, false) => "I, case 7",
        (true, true, false) => "I, case 8",
    };
    select(table, a, b, lines)
}

/// The `I` solution on `[1, 2n]` (`m_a` is `w_{n+a}`), with
/// `f(a) = 2n+1-a` for even `a` in `(1, n]` and odd `a` in `(n, 2n)`.
pub fn i_family(n: usize) -> Result<DihedralFamily> {
    if n < 2 {
        return Err(Error::Parameter("n must be at least 2".into()));
    }
    let m = 2 * n;
    let solution = from_rule(m, |a, b| i_rule(n, a, b))?;
    let f = (1..=m)
        .map(|a| {
            let moved = (even(a) && 1 < a && a <= n) || (!even(a) && n < a && a < m);
            (if moved { m + 1 - a } else { a }) - 1
        })
        .collect();
    Ok(DihedralFamily { solution, f })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_family_is_dihedral() {
        for n in 1..=6 {
            let fam = l_family(n).unwrap();
            assert!(fam.solution.is_rack_shaped());
            assert!(fam.congruence_holds().unwrap(), "n = {n}");
            assert_eq!(fam.conjugated().unwrap(), fam.dihedral_target());
        }
    }

    #[test]
    fn printed_first_line_is_not_total() {
        assert!(matches!(
            l_family_literal(2, LFirstLine::D0Zero),
            Err(Error::CaseTotality { matched: 0, .. })
        ));
    }

    #[test]
    fn i_case_eight_sample() {
        // n = 3, a = 1, b = 5: 2a + b = 7 = 2n + 1
        assert_eq!(i_rule(3, 1, 5).unwrap(), 6);
    }
}
