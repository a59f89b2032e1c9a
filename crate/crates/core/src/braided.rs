//! Set-theoretic Yang-Baxter solutions, racks, monomial braidings and twist
//! conjugation.
//!
//! Everything is 0-based internally; the JSON formats in [`crate::json`] shift
//! to the 1-based labels used by the family tables.

use crate::cyclo::{CycloField, CycloNum};
use crate::exactla::MonomialOperator;
use crate::error::{Error, Result};

fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter()
        .all(|&x| x < row.len() && !std::mem::replace(&mut seen[x], true))
}

fn invert_permutation(row: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; row.len()];
    for (i, &x) in row.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// A map `r(i, j) = (sigma_i(j), tau_j(i))` on `X x X`, `X = {0..size}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSolution {
    size: usize,
    /// `sigma[i][j] = sigma_i(j)`
    sigma: Vec<Vec<usize>>,
    /// `tau[j][i] = tau_j(i)`
    tau: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolutionChecks {
    pub ybe: bool,
    pub nondegenerate: bool,
    pub involutive: bool,
}

impl SetSolution {
    pub fn new(sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Self> {
        let size = sigma.len();
        if tau.len() != size {
            return Err(Error::SizeMismatch(size, tau.len()));
        }
        for row in sigma.iter().chain(&tau) {
            if row.len() != size {
                return Err(Error::SizeMismatch(size, row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= size) {
                return Err(Error::IndexOutOfRange { index: x, max: size });
            }
        }
        Ok(SetSolution { size, sigma, tau })
    }

    /// Builds the tables from `r` itself.
    pub fn from_map(size: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut sigma = vec![vec![0; size]; size];
        let mut tau = vec![vec![0; size]; size];
        for i in 0..size {
            for j in 0..size {
                let (u, v) = r(i, j);
                sigma[i][j] = u;
                tau[j][i] = v;
            }
        }
        Self::new(sigma, tau)
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(size: usize) -> Self {
        Self::from_map(size, |i, j| (j, i)).expect("flip is well formed")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn r(&self, i: usize, j: usize) -> (usize, usize) {
        (self.sigma[i][j], self.tau[j][i])
    }

    pub fn sigma(&self, i: usize, j: usize) -> usize {
        self.sigma[i][j]
    }

    pub fn tau(&self, j: usize, i: usize) -> usize {
        self.tau[j][i]
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.size;
        let mut seen = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                let (u, v) = self.r(i, j);
                if std::mem::replace(&mut seen[u * n + v], true) {
                    return false;
                }
            }
        }
        true
    }

    /// First triple violating `r12 r23 r12 = r23 r12 r23`, if any.
    pub fn ybe_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (x, y) = self.r(a, b);
            (x, y, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (x, y) = self.r(b, c);
            (a, x, y)
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = (i, j, k);
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.sigma.iter().all(|r| is_permutation(r)) && self.tau.iter().all(|r| is_permutation(r))
    }

    pub fn is_involutive(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let (u, v) = self.r(i, j);
                self.r(u, v) == (i, j)
            })
        })
    }

    pub fn checks(&self) -> SolutionChecks {
        SolutionChecks {
            ybe: self.is_bijective() && self.ybe_violation().is_none(),
            nondegenerate: self.is_nondegenerate(),
            involutive: self.is_involutive(),
        }
    }

    /// True when `tau_y = id` for every `y`, i.e. `r(x, y) = (x |> y, x)`.
    pub fn is_rack_shaped(&self) -> bool {
        self.tau
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, &x)| i == x))
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if let Some(i) = self.sigma.iter().position(|r| !is_permutation(r)) {
            return Err(Error::Degenerate(format!("sigma_{} is not a bijection", i + 1)));
        }
        if let Some(j) = self.tau.iter().position(|r| !is_permutation(r)) {
            return Err(Error::Degenerate(format!("tau_{} is not a bijection", j + 1)));
        }
        Ok(())
    }

    /// `x |> y = tau_x sigma_{tau_y^-1(x)} (y)`.
    pub fn derived_rack(&self) -> Result<Rack> {
        self.require_nondegenerate()?;
        let tau_inv: Vec<Vec<usize>> = self.tau.iter().map(|r| invert_permutation(r)).collect();
        let n = self.size;
        let mut op = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let u = tau_inv[y][x];
                op[x][y] = self.tau[x][self.sigma[u][y]];
            }
        }
        Rack::new(op)
    }

    /// `T r T^-1` for `T(x, y) = (tau_y(x), y)`, computed from `T` directly.
    pub fn conjugate_by_t(&self) -> Result<SetSolution> {
        self.require_nondegenerate()?;
        let tau_inv: Vec<Vec<usize>> = self.tau.iter().map(|r| invert_permutation(r)).collect();
        SetSolution::from_map(self.size, |x, y| {
            let (u, v) = (tau_inv[y][x], y);
            let (p, q) = self.r(u, v);
            (self.tau[q][p], q)
        })
    }

    /// `(f^-1 x f^-1) r (f x f)` for a bijection `f`.
    pub fn conjugate_by(&self, f: &[usize]) -> Result<SetSolution> {
        if f.len() != self.size {
            return Err(Error::SizeMismatch(self.size, f.len()));
        }
        if !is_permutation(f) {
            return Err(Error::Parameter("conjugating map is not a bijection".into()));
        }
        let finv = invert_permutation(f);
        SetSolution::from_map(self.size, |a, b| {
            let (u, v) = self.r(f[a], f[b]);
            (finv[u], finv[v])
        })
    }
}

/// A rack `(X, |>)` with `op[i][j] = i |> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    op: Vec<Vec<usize>>,
}

impl Rack {
    /// Validates bijective left translations and self-distributivity.
    pub fn new(op: Vec<Vec<usize>>) -> Result<Self> {
        let n = op.len();
        for (i, row) in op.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(n, row.len()));
            }
            if !is_permutation(row) {
                return Err(Error::NotARack(format!("left translation by {} is not a bijection", i + 1)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if op[i][op[j][k]] != op[op[i][j]][op[i][k]] {
                        return Err(Error::NotARack(format!(
                            "self-distributivity fails at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(Rack { op })
    }

    /// `x |> y = y`.
    pub fn trivial(n: usize) -> Self {
        Rack {
            op: vec![(0..n).collect(); n],
        }
    }

    /// `D_n`: `Z_n` with `i |> j = 2i - j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral rack needs n >= 1");
        let op = (0..n)
            .map(|i| (0..n).map(|j| (2 * i + n - j) % n).collect())
            .collect();
        Rack { op }
    }

    pub fn size(&self) -> usize {
        self.op.len()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.op[i][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    /// `r(x, y) = (x |> y, x)`.
    pub fn to_solution(&self) -> SetSolution {
        SetSolution::from_map(self.size(), |x, y| (self.op[x][y], x)).expect("rack tables are square")
    }

    /// The rack transported along the bijection `f`: `f(x) |>' f(y) = f(x |> y)`.
    pub fn relabel(&self, f: &[usize]) -> Result<Rack> {
        if f.len() != self.size() || !is_permutation(f) {
            return Err(Error::Parameter("relabelling is not a bijection".into()));
        }
        let n = self.size();
        let mut op = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                op[f[x]][f[y]] = f[self.op[x][y]];
            }
        }
        Ok(Rack { op })
    }

    fn is_hom(&self, other: &Rack, f: &[usize]) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| f[self.op[x][y]] == other.op[f[x]][f[y]]))
    }
}

/// Largest rack size searched exhaustively when no candidate map is given.
pub const ISO_SEARCH_LIMIT: usize = 8;

/// Checks `f(x |> y) = f(x) |> f(y)` for a given bijection, or searches all
/// bijections (sizes up to [`ISO_SEARCH_LIMIT`]).
pub fn rack_isomorphic(a: &Rack, b: &Rack, f: Option<&[usize]>) -> Result<Option<Vec<usize>>> {
    let n = a.size();
    if b.size() != n {
        return Err(Error::SizeMismatch(n, b.size()));
    }
    if let Some(f) = f {
        if f.len() != n || !is_permutation(f) {
            return Err(Error::Parameter("candidate isomorphism is not a bijection".into()));
        }
        return Ok(a.is_hom(b, f).then(|| f.to_vec()));
    }
    if n > ISO_SEARCH_LIMIT {
        return Err(Error::Parameter(format!(
            "brute-force isomorphism search is limited to size {ISO_SEARCH_LIMIT}"
        )));
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(iso_search(a, b, 0, &mut f, &mut used).then_some(f))
}

fn iso_search(a: &Rack, b: &Rack, x: usize, f: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.size();
    if x == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        f[x] = cand;
        // every pair among 0..=x whose product is also assigned must be respected
        let ok = (0..=x).all(|u| {
            (0..=x).all(|v| {
                let w = a.op[u][v];
                w > x || f[w] == b.op[f[u]][f[v]]
            })
        });
        if ok {
            used[cand] = true;
            if iso_search(a, b, x + 1, f, used) {
                return true;
            }
            used[cand] = false;
        }
    }
    f[x] = usize::MAX;
    false
}

/// `c(w_i (x) w_j) = R_{i,j} w_{sigma_i(j)} (x) w_{tau_j(i)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialBraiding {
    field: CycloField,
    solution: SetSolution,
    /// `coeff[i * d + j] = R_{i,j}`
    coeff: Vec<CycloNum>,
}

impl MonomialBraiding {
    pub fn new(field: &CycloField, solution: SetSolution, coeff: Vec<CycloNum>) -> Result<Self> {
        let d = solution.size();
        if coeff.len() != d * d {
            return Err(Error::DimensionMismatch(d * d, coeff.len()));
        }
        for (idx, c) in coeff.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::ZeroCoefficient(idx / d + 1, idx % d + 1));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.order(), c.field().order()));
            }
        }
        if !solution.is_bijective() {
            return Err(Error::NotABraiding("underlying map on basis pairs is not bijective".into()));
        }
        Ok(MonomialBraiding {
            field: field.clone(),
            solution,
            coeff,
        })
    }

    /// Builds from `(i, j) -> (sigma_i(j), tau_j(i), R_{i,j})`, 0-based.
    pub fn from_fn(
        field: &CycloField,
        d: usize,
        mut f: impl FnMut(usize, usize) -> Result<(usize, usize, CycloNum)>,
    ) -> Result<Self> {
        let mut sigma = vec![vec![0; d]; d];
        let mut tau = vec![vec![0; d]; d];
        let mut coeff = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let (u, v, c) = f(i, j)?;
                if u >= d || v >= d {
                    return Err(Error::IndexOutOfRange { index: u.max(v) + 1, max: d });
                }
                sigma[i][j] = u;
                tau[j][i] = v;
                coeff.push(c);
            }
        }
        Self::new(field, SetSolution::new(sigma, tau)?, coeff)
    }

    /// The flip `w_i (x) w_j -> w_j (x) w_i`.
    pub fn flip(field: &CycloField, d: usize) -> Self {
        Self::new(field, SetSolution::flip(d), vec![field.one(); d * d]).expect("flip is a braiding")
    }

    /// Diagonal type: `c(w_i (x) w_j) = q[i][j] w_j (x) w_i`.
    pub fn diagonal(field: &CycloField, q: &[Vec<CycloNum>]) -> Result<Self> {
        let d = q.len();
        Self::from_fn(field, d, |i, j| Ok((j, i, q[i][j].clone())))
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.solution.size()
    }

    pub fn solution(&self) -> &SetSolution {
        &self.solution
    }

    pub fn coeff(&self, i: usize, j: usize) -> &CycloNum {
        &self.coeff[i * self.dim() + j]
    }

    pub fn coefficients(&self) -> &[CycloNum] {
        &self.coeff
    }

    /// `(sigma_i(j), tau_j(i), R_{i,j})`.
    pub fn apply(&self, i: usize, j: usize) -> (usize, usize, &CycloNum) {
        let (u, v) = self.solution.r(i, j);
        (u, v, self.coeff(i, j))
    }

    /// `c` as a monomial operator on `V (x) V`, basis `w_i (x) w_j` at `i * d + j`.
    pub fn to_operator(&self) -> MonomialOperator {
        let d = self.dim();
        let mut image = Vec::with_capacity(d * d);
        let mut coeff = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let (u, v, c) = self.apply(i, j);
                image.push(u * d + v);
                coeff.push(c.clone());
            }
        }
        MonomialOperator::new(&self.field, image, coeff).expect("braiding coefficients are nonzero")
    }

    pub fn from_operator(op: &MonomialOperator, d: usize) -> Result<Self> {
        if op.dim() != d * d {
            return Err(Error::DimensionMismatch(d * d, op.dim()));
        }
        Self::from_fn(op.field(), d, |i, j| {
            let (t, c) = op.at(i * d + j);
            Ok((t / d, t % d, c.clone()))
        })
    }

    /// First basis triple where `c1 c2 c1 != c2 c1 c2`, compared coefficient-exactly.
    pub fn braid_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let cop = self.to_operator();
        let id = MonomialOperator::identity(&self.field, d);
        let c1 = MonomialOperator::tensor(&cop, &id).ok()?;
        let c2 = MonomialOperator::tensor(&id, &cop).ok()?;
        let lhs = MonomialOperator::compose(&c1, &MonomialOperator::compose(&c2, &c1).ok()?).ok()?;
        let rhs = MonomialOperator::compose(&c2, &MonomialOperator::compose(&c1, &c2).ok()?).ok()?;
        (0..d * d * d)
            .find(|&t| lhs.at(t) != rhs.at(t))
            .map(|t| (t / (d * d), (t / d) % d, t % d))
    }

    pub fn check_braid_equation(&self) -> bool {
        self.braid_violation().is_none()
    }

    /// The coefficient identity on `R` for this braiding's own solution.
    pub fn cocycle_check(&self) -> Result<bool> {
        cocycle_check(&self.solution, &self.coeff)
    }

    pub fn cocycle_violation(&self) -> Result<Option<(usize, usize, usize)>> {
        cocycle_violation(&self.solution, &self.coeff)
    }
}

/// `R_{i,j} R_{tau_j(i),k} R_{sigma_i(j), sigma_{tau_j(i)}(k)}
///  = R_{j,k} R_{i,sigma_j(k)} R_{tau_{sigma_j(k)}(i), tau_k(j)}` for all triples.
pub fn cocycle_check(sol: &SetSolution, r: &[CycloNum]) -> Result<bool> {
    Ok(cocycle_violation(sol, r)?.is_none())
}

/// First triple `(i, j, k)` where the identity fails.
pub fn cocycle_violation(sol: &SetSolution, r: &[CycloNum]) -> Result<Option<(usize, usize, usize)>> {
    let d = sol.size();
    if r.len() != d * d {
        return Err(Error::DimensionMismatch(d * d, r.len()));
    }
    if let Some(idx) = r.iter().position(|c| c.is_zero()) {
        return Err(Error::ZeroCoefficient(idx / d + 1, idx % d + 1));
    }
    let rr = |a: usize, b: usize| &r[a * d + b];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let tji = sol.tau(j, i);
                let lhs = rr(i, j) * rr(tji, k);
                let lhs = &lhs * rr(sol.sigma(i, j), sol.sigma(tji, k));
                let sjk = sol.sigma(j, k);
                let rhs = rr(j, k) * rr(i, sjk);
                let rhs = &rhs * rr(sol.tau(sjk, i), sol.tau(k, j));
                if lhs != rhs {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

/// Two invertible maps `(phi_1, phi_2)` on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistPair {
    pub phi1: MonomialOperator,
    pub phi2: MonomialOperator,
}

impl TwistPair {
    pub fn new(phi1: MonomialOperator, phi2: MonomialOperator) -> Result<Self> {
        if phi1.dim() != phi2.dim() {
            return Err(Error::DimensionMismatch(phi1.dim(), phi2.dim()));
        }
        if !phi1.is_invertible() || !phi2.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(TwistPair { phi1, phi2 })
    }
}

#[derive(Clone, Debug)]
pub struct TwistOutcome {
    /// `(phi_1^-1 (x) phi_2^-1) c (phi_1 (x) phi_2)`
    pub tilde: MonomialBraiding,
    /// `(phi_2^-1 (x) phi_1^-1) c (phi_2 (x) phi_1)`
    pub bar: MonomialBraiding,
    pub equal: bool,
}

fn conjugate(c: &MonomialOperator, f: &MonomialOperator, g: &MonomialOperator) -> Result<MonomialOperator> {
    let fg = MonomialOperator::tensor(f, g)?;
    let fg_inv = fg.inverse()?;
    MonomialOperator::compose(&fg_inv, &MonomialOperator::compose(c, &fg)?)
}

pub fn twist_conjugate(c: &MonomialBraiding, t: &TwistPair) -> Result<TwistOutcome> {
    let d = c.dim();
    if t.phi1.dim() != d {
        return Err(Error::DimensionMismatch(d, t.phi1.dim()));
    }
    if !t.phi1.is_invertible() || !t.phi2.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let cop = c.to_operator();
    let tilde = MonomialBraiding::from_operator(&conjugate(&cop, &t.phi1, &t.phi2)?, d)?;
    let bar = MonomialBraiding::from_operator(&conjugate(&cop, &t.phi2, &t.phi1)?, d)?;
    let equal = tilde == bar;
    Ok(TwistOutcome { tilde, bar, equal })
}

/// Named finite-dimensional rank-two diagonal types that occur for these families.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum DiagonalType {
    /// Disconnected, vertices of orders `m1`, `m2`: dimension `m1 * m2`.
    A1xA1 { m1: u32, m2: u32 },
    /// Cartan `A2` at a root of order `n`: dimension `n^3`.
    CartanA2 { n: u32 },
    /// Super type `A2` with both vertices `-1`, edge of order `m`: dimension `4m`.
    SuperA2 { m: u32 },
    /// Super type `A2` with one vertex `-1`, the other of order `n`: dimension `4n`.
    SuperA2Mixed { n: u32 },
}

impl DiagonalType {
    pub fn dimension(&self) -> u64 {
        match *self {
            DiagonalType::A1xA1 { m1, m2 } => m1 as u64 * m2 as u64,
            DiagonalType::CartanA2 { n } => (n as u64).pow(3),
            DiagonalType::SuperA2 { m } => 4 * m as u64,
            DiagonalType::SuperA2Mixed { n } => 4 * n as u64,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DiagonalType::A1xA1 { .. } => "Cartan A1xA1",
            DiagonalType::CartanA2 { .. } => "Cartan A2",
            DiagonalType::SuperA2 { .. } | DiagonalType::SuperA2Mixed { .. } => "super A2",
        }
    }
}

/// Generalised Dynkin data `(q11, q12 q21, q22)` of a rank-two diagonal braiding.
#[derive(Clone, Debug, PartialEq)]
pub struct Dynkin2 {
    pub q11: CycloNum,
    pub q12q21: CycloNum,
    pub q22: CycloNum,
}

impl Dynkin2 {
    /// Lookup against the rank-two types above; `None` when unrecognised.
    pub fn classify(&self) -> Option<DiagonalType> {
        let ord = |x: &CycloNum| x.root_order();
        let (o1, o2, oe) = (ord(&self.q11)?, ord(&self.q22)?, ord(&self.q12q21)?);
        if oe == 1 {
            return (o1 > 1 && o2 > 1).then_some(DiagonalType::A1xA1 { m1: o1, m2: o2 });
        }
        let minus = |x: &CycloNum| x.root_order() == Some(2);
        if self.q11 == self.q22 && o1 > 1 && (&self.q12q21 * &self.q11).is_one() {
            return Some(DiagonalType::CartanA2 { n: o1 });
        }
        if minus(&self.q11) && minus(&self.q22) && oe > 2 {
            return Some(DiagonalType::SuperA2 { m: oe });
        }
        let mixed = |v: &CycloNum, other: &CycloNum| {
            minus(other) && ord(v).is_some_and(|o| o > 2) && (&self.q12q21 * v).is_one()
        };
        if mixed(&self.q22, &self.q11) {
            return Some(DiagonalType::SuperA2Mixed { n: o2 });
        }
        if mixed(&self.q11, &self.q22) {
            return Some(DiagonalType::SuperA2Mixed { n: o1 });
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalProfile {
    pub q: Vec<Vec<CycloNum>>,
    /// Present for dimension two.
    pub dynkin: Option<Dynkin2>,
}

/// The matrix `q_ij` when `c(w_i (x) w_j) = q_ij w_j (x) w_i` for all pairs.
pub fn diagonal_profile(c: &MonomialBraiding) -> Option<DiagonalProfile> {
    let d = c.dim();
    let sol = c.solution();
    let diagonal = (0..d).all(|i| (0..d).all(|j| sol.r(i, j) == (j, i)));
    if !diagonal {
        return None;
    }
    let q: Vec<Vec<CycloNum>> = (0..d)
        .map(|i| (0..d).map(|j| c.coeff(i, j).clone()).collect())
        .collect();
    let dynkin = (d == 2).then(|| Dynkin2 {
        q11: q[0][0].clone(),
        q12q21: &q[0][1] * &q[1][0],
        q22: q[1][1].clone(),
    });
    Some(DiagonalProfile { q, dynkin })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vabe(field: &CycloField, a: CycloNum, b: CycloNum, e: CycloNum) -> MonomialBraiding {
        MonomialBraiding::from_fn(field, 2, |i, j| {
            Ok(match (i, j) {
                (0, 0) => (1, 1, a.clone()),
                (0, 1) => (0, 1, b.clone()),
                (1, 0) => (1, 0, b.clone()),
                _ => (0, 0, e.clone()),
            })
        })
        .unwrap()
    }

    #[test]
    fn flip_and_vabe_satisfy_braid_equation() {
        let q = CycloField::new(1).unwrap();
        assert!(MonomialBraiding::flip(&q, 3).check_braid_equation());
        assert!(vabe(&q, q.one(), q.one(), q.one()).check_braid_equation());
    }

    #[test]
    fn vabe_is_braiding_for_any_parameters() {
        let q = CycloField::new(1).unwrap();
        let c = vabe(&q, q.from_int(2), q.from_int(-3), q.from_int(5));
        assert!(c.check_braid_equation());
        assert!(c.cocycle_check().unwrap());
    }

    #[test]
    fn perturbed_coefficient_breaks_braid_equation() {
        let q = CycloField::new(1).unwrap();
        let sol = Rack::dihedral(3).to_solution();
        let mut r = vec![q.one(); 9];
        r[1] = q.from_int(2);
        let c = MonomialBraiding::new(&q, sol, r).unwrap();
        assert!(c.braid_violation().is_some());
        assert!(!c.cocycle_check().unwrap());
    }

    #[test]
    fn dihedral_solution_flags() {
        let s = Rack::dihedral(3).to_solution();
        assert_eq!(
            s.checks(),
            SolutionChecks {
                ybe: true,
                nondegenerate: true,
                involutive: false
            }
        );
        assert_eq!(s.r(0, 1), (2, 0));
        assert_eq!(s.r(2, 0), (1, 2));
        assert_eq!(
            SetSolution::flip(4).checks(),
            SolutionChecks {
                ybe: true,
                nondegenerate: true,
                involutive: true
            }
        );
    }

    #[test]
    fn degenerate_row_detected() {
        let sigma = vec![vec![0, 0], vec![0, 1]];
        let tau = vec![vec![0, 1], vec![0, 1]];
        let s = SetSolution::new(sigma, tau).unwrap();
        assert!(!s.checks().nondegenerate);
        assert!(matches!(s.derived_rack(), Err(Error::Degenerate(_))));
        assert!(matches!(s.conjugate_by_t(), Err(Error::Degenerate(_))));
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(Rack::dihedral(3).op(1, 2), 0);
        assert_eq!(Rack::dihedral(4).op(0, 1), 3);
        for n in 1..9 {
            let d = Rack::dihedral(n);
            assert!(Rack::new(d.table().to_vec()).is_ok());
            assert!((0..n).all(|i| d.op(i, i) == i));
        }
    }

    #[test]
    fn derived_rack_examples() {
        let d5 = Rack::dihedral(5);
        assert_eq!(d5.to_solution().derived_rack().unwrap(), d5);
        assert_eq!(SetSolution::flip(4).derived_rack().unwrap(), Rack::trivial(4));
        let flip_t = SetSolution::flip(3).conjugate_by_t().unwrap();
        assert_eq!(flip_t, Rack::trivial(3).to_solution());
    }

    #[test]
    fn isomorphism_examples() {
        let d3 = Rack::dihedral(3);
        let id = [0, 1, 2];
        assert_eq!(rack_isomorphic(&d3, &d3, Some(&id)).unwrap(), Some(id.to_vec()));
        assert_eq!(rack_isomorphic(&d3, &Rack::trivial(3), None).unwrap(), None);
        assert!(matches!(
            rack_isomorphic(&d3, &Rack::dihedral(4), None),
            Err(Error::SizeMismatch(3, 4))
        ));
        // D_4 relabelled by an arbitrary bijection is found again
        let f = [2, 0, 3, 1];
        let shuffled = Rack::dihedral(4).relabel(&f).unwrap();
        let found = rack_isomorphic(&Rack::dihedral(4), &shuffled, None).unwrap().unwrap();
        assert!(rack_isomorphic(&Rack::dihedral(4), &shuffled, Some(&found)).unwrap().is_some());
    }

    #[test]
    fn invalid_rack_rejected() {
        assert!(matches!(Rack::new(vec![vec![0, 0], vec![0, 1]]), Err(Error::NotARack(_))));
        // bijective rows, not self-distributive
        let op = vec![vec![1, 0, 2], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(matches!(Rack::new(op), Err(Error::NotARack(_))));
    }

    #[test]
    fn cocycle_constant_coefficients() {
        let f = CycloField::new(5).unwrap();
        let sol = Rack::dihedral(5).to_solution();
        assert!(cocycle_check(&sol, &vec![f.one(); 25]).unwrap());
        assert!(cocycle_check(&sol, &vec![f.root_power(2); 25]).unwrap());
        let mut bad = vec![f.one(); 25];
        bad[3] = f.zero();
        assert!(matches!(cocycle_check(&sol, &bad), Err(Error::ZeroCoefficient(1, 4))));
    }

    #[test]
    fn identity_twist_is_trivial() {
        let f = CycloField::new(3).unwrap();
        let c = vabe(&f, f.root_power(1), f.root_power(2), f.one());
        let id = MonomialOperator::identity(&f, 2);
        let t = TwistPair::new(id.clone(), id).unwrap();
        let out = twist_conjugate(&c, &t).unwrap();
        assert!(out.equal);
        assert_eq!(out.tilde, c);
        assert_eq!(out.bar, c);
    }

    #[test]
    fn non_invertible_twist_rejected() {
        let f = CycloField::new(1).unwrap();
        let bad = MonomialOperator::permutation(&f, vec![0, 0]).unwrap();
        let id = MonomialOperator::identity(&f, 2);
        assert!(matches!(TwistPair::new(bad.clone(), id.clone()), Err(Error::NotInvertible)));
        let c = MonomialBraiding::flip(&f, 2);
        let t = TwistPair { phi1: bad, phi2: id };
        assert!(matches!(twist_conjugate(&c, &t), Err(Error::NotInvertible)));
    }

    #[test]
    fn diagonal_profiles() {
        let f = CycloField::new(3).unwrap();
        let q = vec![vec![f.root_power(1), f.one()], vec![f.one(), f.root_power(1)]];
        let c = MonomialBraiding::diagonal(&f, &q).unwrap();
        let p = diagonal_profile(&c).unwrap();
        assert_eq!(p.q, q);
        let dy = p.dynkin.unwrap();
        assert_eq!(dy.classify(), Some(DiagonalType::A1xA1 { m1: 3, m2: 3 }));
        assert!(diagonal_profile(&vabe(&f, f.one(), f.one(), f.one())).is_none());
    }

    #[test]
    fn rank_two_lookup() {
        let f = CycloField::new(6).unwrap();
        let z3 = f.root_power(2);
        let m1 = f.from_int(-1);
        let a2 = Dynkin2 {
            q11: z3.clone(),
            q12q21: z3.inv().unwrap(),
            q22: z3.clone(),
        };
        assert_eq!(a2.classify(), Some(DiagonalType::CartanA2 { n: 3 }));
        let sup = Dynkin2 {
            q11: m1.clone(),
            q12q21: z3.clone(),
            q22: m1.clone(),
        };
        assert_eq!(sup.classify(), Some(DiagonalType::SuperA2 { m: 3 }));
        assert_eq!(sup.classify().unwrap().dimension(), 12);
        let affine = Dynkin2 {
            q11: z3.clone(),
            q12q21: z3.clone(),
            q22: z3.clone(),
        };
        assert_eq!(affine.classify(), None);
    }
}
