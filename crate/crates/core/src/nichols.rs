//! Quantum symmetrizers and graded dimensions of Nichols algebras.
//!
//! `dim B^n(V) = rank S_n`. The literal symmetrizer (`n!` monomial terms) is
//! available through [`symmetrizer`]; [`graded_dims`] and [`finiteness_scan`]
//! instead carry an echelon basis of `Im S_{n-1}` forward, using
//! `Im S_n = S_{n-1,1}(Im S_{n-1} (x) V)`, and eliminate separately on each
//! orbit of the braid group action on basis tuples.
//!
//! Tuples of basis indices are encoded base `d`, slot 1 most significant.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Duration;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;
#[cfg(target_arch = "wasm32")]
use web_time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::braided::MonomialBraiding;
use crate::error::{Error, Result};
use crate::exactla::{accumulate, sparse_sum, EchelonBasis, MonomialOperator, SparseMatrix, SparseVec};

fn tensor_dim(d: usize, n: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|n| d.checked_pow(n))
        .filter(|&s| s <= u32::MAX as usize)
        .ok_or_else(|| Error::Parameter(format!("V^(x){n} is too large for d = {d}")))
}

/// `id^(i-1) (x) c (x) id^(n-i-1)` on `V^(x)n`; `i` is 1-based.
pub fn c_i(c: &MonomialBraiding, n: usize, i: usize) -> Result<MonomialOperator> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let d = c.dim();
    let size = tensor_dim(d, n)?;
    let hi = d.pow((n - i) as u32);
    let lo = hi / d;
    let mut image = Vec::with_capacity(size);
    let mut coeff = Vec::with_capacity(size);
    for t in 0..size {
        let (a, b) = ((t / hi) % d, (t / lo) % d);
        let (u, v, r) = c.apply(a, b);
        image.push(t - a * hi - b * lo + u * hi + v * lo);
        coeff.push(r.clone());
    }
    MonomialOperator::new(c.field(), image, coeff)
}

/// The `n!` monomial terms of `S_n`, from `S_1 = id` and
/// `S_n = S_{n-1,1} (S_{n-1} (x) id)`,
/// `S_{n-1,1} = id + c_{n-1} + c_{n-2} c_{n-1} + ... + c_1 ... c_{n-1}`.
pub fn symmetrizer_terms(c: &MonomialBraiding, n: usize) -> Result<Vec<MonomialOperator>> {
    if n == 0 {
        return Err(Error::Parameter("symmetrizer degree must be at least 1".into()));
    }
    let d = c.dim();
    let field = c.field();
    let id_v = MonomialOperator::identity(field, d);
    let mut terms = vec![id_v.clone()];
    for m in 2..=n {
        let size = tensor_dim(d, m)?;
        let mut partial = vec![MonomialOperator::identity(field, size)];
        for i in (1..m).rev() {
            let next = MonomialOperator::compose(&c_i(c, m, i)?, partial.last().unwrap())?;
            partial.push(next);
        }
        let lifted: Vec<MonomialOperator> = terms
            .iter()
            .map(|s| MonomialOperator::tensor(s, &id_v))
            .collect::<Result<_>>()?;
        let mut next = Vec::with_capacity(partial.len() * lifted.len());
        for x in &partial {
            for s in &lifted {
                next.push(MonomialOperator::compose(x, s)?);
            }
        }
        terms = next;
    }
    Ok(terms)
}

/// `S_n` assembled as a sparse matrix.
pub fn symmetrizer(c: &MonomialBraiding, n: usize) -> Result<SparseMatrix> {
    accumulate(&symmetrizer_terms(c, n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimsVerdict {
    /// A zero rank was reached; `total` is the dimension of the Nichols algebra.
    Finite { total: u64, top_degree: usize },
    /// All ranks up to `degree` are positive.
    Undetermined { degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    /// `dims[n] = dim B^n`; ends at the first zero, or at the cap.
    pub dims: Vec<usize>,
    pub verdict: DimsVerdict,
}

impl GradedDims {
    pub fn is_finite(&self) -> bool {
        matches!(self.verdict, DimsVerdict::Finite { .. })
    }

    pub fn total(&self) -> Option<u64> {
        match self.verdict {
            DimsVerdict::Finite { total, .. } => Some(total),
            DimsVerdict::Undetermined { .. } => None,
        }
    }

    pub fn top_degree(&self) -> Option<usize> {
        match self.verdict {
            DimsVerdict::Finite { top_degree, .. } => Some(top_degree),
            DimsVerdict::Undetermined { .. } => None,
        }
    }

    /// `1 + 2t + t^2` style rendering of the computed part.
    pub fn hilbert_polynomial(&self) -> String {
        hilbert_string(&self.dims)
    }
}

pub fn hilbert_string(dims: &[usize]) -> String {
    let mut parts = Vec::new();
    for (n, &x) in dims.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let coef = if x == 1 && n > 0 { String::new() } else { x.to_string() };
        parts.push(match n {
            0 => coef,
            1 => format!("{coef}t"),
            _ => format!("{coef}t^{n}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Wall-clock limit for a scan.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None }
    }

    pub fn seconds(secs: u64) -> Self {
        Budget {
            limit: Some(Duration::from_secs(secs)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub degree: usize,
    /// `d^n`
    pub space_dim: usize,
    /// Vectors `u (x) w_k` pushed through `S_{n-1,1}`.
    pub candidates: usize,
    /// Braid-group orbits on tuples that carry a candidate.
    pub blocks: usize,
    pub largest_block: usize,
    pub rank: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub dims: Vec<usize>,
    pub verdict: DimsVerdict,
    pub total: Option<u64>,
    pub top_degree: Option<usize>,
    pub hilbert: String,
    pub degrees: Vec<DegreeStats>,
    /// Rank one degree past the first zero; always zero for a braiding.
    pub next_rank: Option<usize>,
    pub budget_exceeded: bool,
    pub millis: u128,
}

impl ScanReport {
    pub fn graded(&self) -> GradedDims {
        GradedDims {
            dims: self.dims.clone(),
            verdict: self.verdict.clone(),
        }
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Incremental computation of `Im S_n`, one degree at a time.
pub struct ImageEngine<'a> {
    c: &'a MonomialBraiding,
    degree: usize,
    basis: Vec<SparseVec>,
}

impl<'a> ImageEngine<'a> {
    /// Starts at degree 1, where the image is all of `V`.
    pub fn new(c: &'a MonomialBraiding) -> Self {
        let one = c.field().one();
        let basis = (0..c.dim()).map(|k| vec![(k, one.clone())]).collect();
        ImageEngine { c, degree: 1, basis }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    fn apply_ci(&self, n: usize, i: usize, v: &SparseVec) -> SparseVec {
        let d = self.c.dim();
        let hi = d.pow((n - i) as u32);
        let lo = hi / d;
        let mut out: SparseVec = v
            .iter()
            .map(|(t, x)| {
                let (a, b) = ((t / hi) % d, (t / lo) % d);
                let (u, w, r) = self.c.apply(a, b);
                (t - a * hi - b * lo + u * hi + w * lo, r * x)
            })
            .collect();
        out.sort_unstable_by_key(|(t, _)| *t);
        out
    }

    /// `S_{n-1,1}` on a vector of `V^(x)n`.
    fn partial_symmetrizer(&self, n: usize, v: SparseVec) -> SparseVec {
        let mut pieces = vec![v];
        for i in (1..n).rev() {
            let next = self.apply_ci(n, i, pieces.last().unwrap());
            pieces.push(next);
        }
        sparse_sum(&pieces)
    }

    fn orbits(&self, n: usize) -> Result<Vec<u32>> {
        let d = self.c.dim();
        let size = tensor_dim(d, n)?;
        let mut uf = UnionFind::new(size);
        for i in 1..n {
            let hi = d.pow((n - i) as u32);
            let lo = hi / d;
            for t in 0..size {
                let (a, b) = ((t / hi) % d, (t / lo) % d);
                let (u, w) = self.c.solution().r(a, b);
                let s = t - a * hi - b * lo + u * hi + w * lo;
                uf.union(t as u32, s as u32);
            }
        }
        Ok((0..size as u32).map(|t| uf.find(t)).collect())
    }

    /// Advances to the next degree. Returns `None` if `stop` was raised
    /// before the degree finished; the engine is then left unchanged.
    pub fn step(&mut self, stop: &AtomicBool) -> Result<Option<DegreeStats>> {
        let start = Instant::now();
        let n = self.degree + 1;
        let d = self.c.dim();
        let space_dim = tensor_dim(d, n)?;
        let orbit = self.orbits(n)?;
        let mut orbit_size: HashMap<u32, usize> = HashMap::new();
        for &o in &orbit {
            *orbit_size.entry(o).or_default() += 1;
        }
        let mut blocks: HashMap<u32, Vec<SparseVec>> = HashMap::new();
        let mut candidates = 0;
        for u in &self.basis {
            for k in 0..d {
                if stop.load(Ordering::Relaxed) {
                    return Ok(None);
                }
                let w: SparseVec = u.iter().map(|(t, x)| (t * d + k, x.clone())).collect();
                let img = self.partial_symmetrizer(n, w);
                candidates += 1;
                if let Some(&(t, _)) = img.first() {
                    blocks.entry(orbit[t]).or_default().push(img);
                }
            }
        }
        let mut keyed: Vec<(u32, Vec<SparseVec>)> = blocks.into_iter().collect();
        keyed.sort_unstable_by_key(|(o, _)| *o);
        let nblocks = keyed.len();
        let largest_block = keyed.iter().map(|(o, _)| orbit_size[o]).max().unwrap_or(0);
        let reduced: Vec<Option<Vec<SparseVec>>> = keyed
            .into_par_iter()
            .map(|(o, vecs)| -> Result<Option<Vec<SparseVec>>> {
                let full = orbit_size[&o];
                let mut eb = EchelonBasis::new();
                for v in &vecs {
                    if stop.load(Ordering::Relaxed) {
                        return Ok(None);
                    }
                    eb.insert(v)?;
                    if eb.rank() == full {
                        break;
                    }
                }
                Ok(Some(eb.into_vectors()))
            })
            .collect::<Result<_>>()?;
        let mut basis = Vec::new();
        for r in reduced {
            match r {
                Some(v) => basis.extend(v),
                None => return Ok(None),
            }
        }
        self.basis = basis;
        self.degree = n;
        Ok(Some(DegreeStats {
            degree: n,
            space_dim,
            candidates,
            blocks: nblocks,
            largest_block,
            rank: self.basis.len(),
            millis: start.elapsed().as_millis(),
        }))
    }
}

/// Graded dimensions up to `cap`, stopping at the first zero.
pub fn graded_dims(c: &MonomialBraiding, cap: usize) -> Result<GradedDims> {
    if cap < 1 {
        return Err(Error::Parameter("cap must be at least 1".into()));
    }
    Ok(scan(c, cap, Budget::unlimited(), false)?.graded())
}

/// [`graded_dims`] plus timing, per-degree statistics, a wall-clock budget,
/// and one extra degree after the first zero.
pub fn finiteness_scan(c: &MonomialBraiding, cap: usize, budget: Budget) -> Result<ScanReport> {
    if cap < 2 {
        return Err(Error::Parameter("cap must be at least 2".into()));
    }
    scan(c, cap, budget, true)
}

fn scan(c: &MonomialBraiding, cap: usize, budget: Budget, extra: bool) -> Result<ScanReport> {
    let start = Instant::now();
    let stop = AtomicBool::new(false);
    let mut engine = ImageEngine::new(c);
    let mut dims = vec![1, c.dim()];
    let mut degrees = Vec::new();
    let mut budget_exceeded = false;
    let mut next_rank = None;

    let done = AtomicBool::new(false);
    std::thread::scope(|s| -> Result<()> {
        if let Some(limit) = budget.limit {
            let (stop, done) = (&stop, &done);
            s.spawn(move || {
                let tick = Duration::from_millis(20);
                while !done.load(Ordering::Relaxed) {
                    if start.elapsed() >= limit {
                        stop.store(true, Ordering::Relaxed);
                        return;
                    }
                    std::thread::sleep(tick);
                }
            });
        }
        let result = (|| {
            let over = || budget.limit.is_some_and(|l| start.elapsed() >= l);
            while *dims.last().unwrap() > 0 && dims.len() <= cap {
                if over() {
                    stop.store(true, Ordering::Relaxed);
                }
                match engine.step(&stop)? {
                    Some(st) => {
                        dims.push(st.rank);
                        degrees.push(st);
                    }
                    None => {
                        budget_exceeded = true;
                        return Ok(());
                    }
                }
            }
            if extra && *dims.last().unwrap() == 0 {
                if let Some(st) = engine.step(&stop)? {
                    next_rank = Some(st.rank);
                } else {
                    budget_exceeded = true;
                }
            }
            Ok(())
        })();
        done.store(true, Ordering::Relaxed);
        result
    })?;

    if dims.len() > cap + 1 {
        dims.truncate(cap + 1);
    }
    let verdict = match dims.iter().position(|&x| x == 0) {
        Some(z) => DimsVerdict::Finite {
            total: dims.iter().map(|&x| x as u64).sum(),
            top_degree: z - 1,
        },
        None => DimsVerdict::Undetermined {
            degree: dims.len() - 1,
        },
    };
    let (total, top_degree) = match verdict {
        DimsVerdict::Finite { total, top_degree } => (Some(total), Some(top_degree)),
        DimsVerdict::Undetermined { .. } => (None, None),
    };
    Ok(ScanReport {
        hilbert: hilbert_string(&dims),
        dims,
        verdict,
        total,
        top_degree,
        degrees,
        next_rank,
        budget_exceeded,
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{MonomialBraiding, SetSolution};
    use crate::cyclo::CycloField;

    fn one_dim(v: i64) -> MonomialBraiding {
        let q = CycloField::new(1).unwrap();
        MonomialBraiding::new(&q, SetSolution::flip(1), vec![q.from_int(v)]).unwrap()
    }

    fn vabe(a: i64, b: i64, e: i64) -> MonomialBraiding {
        let q = CycloField::new(1).unwrap();
        let (a, b, e) = (q.from_int(a), q.from_int(b), q.from_int(e));
        MonomialBraiding::from_fn(&q, 2, |i, j| {
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
    fn c_i_examples() {
        let c = vabe(1, -1, 1);
        assert_eq!(c_i(&c, 2, 1).unwrap(), c.to_operator());
        let q = CycloField::new(1).unwrap();
        let flip = MonomialBraiding::flip(&q, 2);
        let op = c_i(&flip, 3, 2).unwrap();
        // (x1, x2, x3) -> (x1, x3, x2)
        assert_eq!(op.image(), &[0, 2, 1, 3, 4, 6, 5, 7]);
        assert!(matches!(c_i(&flip, 3, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(c_i(&flip, 3, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn symmetrizer_examples() {
        let c = vabe(1, -1, 1);
        assert_eq!(symmetrizer(&c, 1).unwrap(), SparseMatrix::identity(c.field(), 2));
        let s = symmetrizer(&one_dim(-1), 2).unwrap();
        assert_eq!((s.rows(), s.nnz()), (1, 0));
        let q = CycloField::new(1).unwrap();
        let flip = MonomialBraiding::flip(&q, 2);
        assert_eq!(symmetrizer(&flip, 2).unwrap().rank().unwrap(), 3);
        assert_eq!(symmetrizer_terms(&flip, 4).unwrap().len(), 24);
    }

    #[test]
    fn graded_dims_examples() {
        let poly = graded_dims(&one_dim(1), 6).unwrap();
        assert_eq!(poly.dims, vec![1; 7]);
        assert_eq!(poly.verdict, DimsVerdict::Undetermined { degree: 6 });
        let ext = graded_dims(&one_dim(-1), 6).unwrap();
        assert_eq!(ext.dims, vec![1, 1, 0]);
        assert_eq!(ext.total(), Some(2));
        let g = graded_dims(&vabe(1, -1, 1), 8).unwrap();
        assert_eq!(g.dims, vec![1, 2, 1, 0]);
        assert_eq!(g.verdict, DimsVerdict::Finite { total: 4, top_degree: 2 });
        assert_eq!(g.hilbert_polynomial(), "1 + 2t + t^2");
    }

    #[test]
    fn engine_matches_literal_symmetrizer() {
        for c in [vabe(1, -1, 1), vabe(2, 3, -1), vabe(1, 1, 1)] {
            let g = graded_dims(&c, 4).unwrap();
            for (n, &dim) in g.dims.iter().enumerate().skip(1) {
                assert_eq!(symmetrizer(&c, n).unwrap().rank().unwrap(), dim);
            }
        }
    }

    #[test]
    fn scan_reports_next_rank_and_stats() {
        let r = finiteness_scan(&vabe(1, -1, 1), 8, Budget::unlimited()).unwrap();
        assert_eq!(r.next_rank, Some(0));
        assert_eq!(r.degrees.len(), 2);
        assert_eq!(r.degrees[0].space_dim, 4);
        assert!(!r.budget_exceeded);
        assert!(matches!(finiteness_scan(&one_dim(1), 1, Budget::unlimited()), Err(Error::Parameter(_))));
    }

    #[test]
    fn zero_budget_gives_partial_report() {
        let q = CycloField::new(1).unwrap();
        let r = finiteness_scan(&MonomialBraiding::flip(&q, 3), 40, Budget { limit: Some(Duration::ZERO) }).unwrap();
        assert!(r.budget_exceeded);
        assert!(matches!(r.verdict, DimsVerdict::Undetermined { .. }));
    }
}
