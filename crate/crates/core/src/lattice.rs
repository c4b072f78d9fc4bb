//! Exact integer lattice engine.
//!
//! Lattices are full rank and stored in canonical Hermite normal form:
//! rows are basis vectors, the basis is lower triangular with a positive
//! diagonal, and every entry left of the diagonal lies in `[0, diag)` of
//! its column. Two lattices are equal exactly when their HNFs are.
//!
//! LLL runs on exact integers (the integral Gram-Schmidt recurrences), so
//! there is no precision failure mode. Enumeration walks the
//! Schnorr-Euchner tree with a floating-point pruning bound that carries a
//! relative slack; every candidate leaf is re-measured in exact integer
//! arithmetic, so the returned length is exact.
#![allow(clippy::needless_range_loop)]

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Row = Vec<BigInt>;

/// Default largest dimension handed to exact enumeration.
pub const DEFAULT_ENUM_CAP: usize = 32;

/// Relative slack on the floating-point pruning radius.
const PRUNE_SLACK: f64 = 1e-9;

/// How often (in nodes) enumeration polls its deadline.
const DEADLINE_POLL: u64 = 1 << 12;

/// A full-rank integer lattice in canonical HNF.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntLattice {
    basis: Vec<Row>,
}

impl IntLattice {
    pub fn identity(dim: usize) -> Self {
        Self::scaled_identity(dim, &BigInt::one())
    }

    pub fn scaled_identity(dim: usize, c: &BigInt) -> Self {
        assert!(c.is_positive(), "scale must be positive");
        let basis = (0..dim)
            .map(|i| {
                let mut r = vec![BigInt::zero(); dim];
                r[i] = c.clone();
                r
            })
            .collect();
        IntLattice { basis }
    }

    /// Wrap a basis that is already in canonical HNF, checking the shape.
    pub fn from_hnf(basis: Vec<Row>) -> Result<Self> {
        let d = basis.len();
        for (i, row) in basis.iter().enumerate() {
            if row.len() != d {
                return Err(Error::Input(format!("row {i} has length {}, expected {d}", row.len())));
            }
            if !row[i].is_positive() || row[i + 1..].iter().any(|x| !x.is_zero()) {
                return Err(Error::Input(format!("row {i} is not in lower-triangular HNF")));
            }
            for j in 0..i {
                if row[j].is_negative() || row[j] >= basis[j][j] {
                    return Err(Error::Input(format!("entry ({i},{j}) is not reduced")));
                }
            }
        }
        Ok(IntLattice { basis })
    }

    pub(crate) fn from_hnf_unchecked(basis: Vec<Row>) -> Self {
        debug_assert!(Self::from_hnf(basis.clone()).is_ok());
        IntLattice { basis }
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn determinant(&self) -> BigInt {
        self.basis
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, r)| acc * &r[i])
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Row> {
        if v.len() != self.dim() {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = vec![BigInt::zero(); self.dim()];
        for i in (0..self.dim()).rev() {
            let (q, r) = rest[i].div_rem(&self.basis[i][i]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for j in 0..=i {
                    rest[j] -= &q * &self.basis[i][j];
                }
            }
            coords[i] = q;
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// A lattice vector with its exact squared Euclidean length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVector {
    pub coords: Row,
    pub squared_length: BigInt,
}

impl LatticeVector {
    pub fn new(coords: Row) -> Self {
        let squared_length = squared_norm(&coords);
        LatticeVector { coords, squared_length }
    }
}

pub fn squared_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

fn check_rows(rows: &[Row], dim: usize) -> Result<()> {
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
        return Err(Error::Input(format!("row {i} has length {}, expected {dim}", r.len())));
    }
    Ok(())
}

fn content_reduce(v: &mut Row) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Indices of a maximal linearly independent subset of `rows`, greedily
/// from the front (fraction-free elimination).
fn independent_rows(rows: &[Row], dim: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Row)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for (pc, e) in &echelon {
            if v[*pc].is_zero() {
                continue;
            }
            let a = e[*pc].clone();
            let b = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(e) {
                *x = &a * &*x - &b * y;
            }
            content_reduce(&mut v);
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((pc, v));
            chosen.push(idx);
            if chosen.len() == dim {
                break;
            }
        }
    }
    chosen
}

/// Determinant of a square matrix by fraction-free Bareiss elimination.
pub fn bareiss_determinant(m: &[Row]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Canonical HNF of the row span of `rows` in `Z^dim`.
pub fn hnf(rows: &[Row], dim: usize) -> Result<IntLattice> {
    check_rows(rows, dim)?;
    let chosen = independent_rows(rows, dim);
    if chosen.len() < dim {
        return Err(Error::Rank { expected: dim, found: chosen.len() });
    }
    let square: Vec<Row> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let m = bareiss_determinant(&square).abs();
    Ok(hnf_with_modulus(rows, dim, &m))
}

/// HNF of the row span, given a positive `m` with `m * Z^dim` inside the
/// lattice. All intermediate entries stay below `m`.
pub fn hnf_with_modulus(rows: &[Row], dim: usize, m: &BigInt) -> IntLattice {
    assert!(m.is_positive(), "modulus must be positive");
    let mut active: Vec<Row> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(m)).collect::<Row>())
        .filter(|r: &Row| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut basis: Vec<Row> = vec![Vec::new(); dim];
    for c in (0..dim).rev() {
        let mut pivot = vec![BigInt::zero(); dim];
        pivot[c] = m.clone();
        for row in active.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot[c].clone();
            let b = row[c].clone();
            let ext = a.extended_gcd(&b);
            let (g, x, y) = (ext.gcd, ext.x, ext.y);
            let ag = &a / &g;
            let bg = &b / &g;
            for j in 0..c {
                let pj = (&x * &pivot[j] + &y * &row[j]).mod_floor(m);
                let rj = (&ag * &row[j] - &bg * &pivot[j]).mod_floor(m);
                pivot[j] = pj;
                row[j] = rj;
            }
            pivot[c] = g;
            row[c] = BigInt::zero();
        }
        if pivot[c].is_negative() {
            for x in pivot.iter_mut() {
                *x = -&*x;
            }
        }
        basis[c] = pivot;
        active.retain(|r| r[..c].iter().any(|x| !x.is_zero()));
    }
    for i in 0..dim {
        for j in (0..i).rev() {
            let q = basis[i][j].div_floor(&basis[j][j]);
            if !q.is_zero() {
                let (head, tail) = basis.split_at_mut(i);
                for (x, y) in tail[0][..=j].iter_mut().zip(&head[j][..=j]) {
                    *x -= &q * y;
                }
            }
        }
    }
    IntLattice::from_hnf_unchecked(basis)
}

pub fn determinant(lattice: &IntLattice) -> BigInt {
    lattice.determinant()
}

pub fn lattice_equal(a: &IntLattice, b: &IntLattice) -> bool {
    a == b
}

/// LLL parameter `delta = num / den`, strictly between 1/4 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Delta {
    num: u64,
    den: u64,
}

impl Delta {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        // 1/4 < num/den < 1
        if den == 0 || 4 * num <= den || num >= den {
            return Err(Error::Input(format!("LLL delta {num}/{den} is outside (1/4, 1)")));
        }
        Ok(Delta { num, den })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl Default for Delta {
    fn default() -> Self {
        Delta { num: 99, den: 100 }
    }
}

/// Integral Gram-Schmidt data: `d[i]` is the Gram determinant of the first
/// `i` vectors (`d[0] = 1`), and `lambda[k][j] = d[j+1] * mu[k][j]`.
#[derive(Clone, Debug)]
pub struct IntegralGso {
    pub d: Vec<BigInt>,
    pub lambda: Vec<Row>,
}

impl IntegralGso {
    /// `|b*_i|^2` as a float.
    pub fn bstar_sq(&self, i: usize) -> f64 {
        ratio_to_f64(&self.d[i + 1], &self.d[i])
    }

    pub fn mu(&self, k: usize, j: usize) -> f64 {
        ratio_to_f64(&self.lambda[k][j], &self.d[j + 1])
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integral Gram-Schmidt of linearly independent rows.
pub fn integral_gso(rows: &[Row]) -> Result<IntegralGso> {
    let n = rows.len();
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::one();
    let mut lambda = vec![vec![BigInt::zero(); n]; n];
    for k in 0..n {
        gso_row(rows, k, &mut d, &mut lambda)?;
    }
    Ok(IntegralGso { d, lambda })
}

fn gso_row(rows: &[Row], k: usize, d: &mut [BigInt], lambda: &mut [Row]) -> Result<()> {
    for j in 0..=k {
        let mut u = dot(&rows[k], &rows[j]);
        for i in 0..j {
            u = (&d[i + 1] * &u - &lambda[k][i] * &lambda[j][i]) / &d[i];
        }
        if j < k {
            lambda[k][j] = u;
        } else {
            if u.is_zero() {
                return Err(Error::Rank { expected: rows.len(), found: k });
            }
            d[k + 1] = u;
        }
    }
    Ok(())
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest integer to a/b for b > 0
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

/// LLL-reduce linearly independent rows; returns the reduced rows and their
/// integral Gram-Schmidt data.
pub fn lll_reduce_rows(rows: &[Row], delta: Delta) -> Result<(Vec<Row>, IntegralGso)> {
    let n = rows.len();
    let mut b = rows.to_vec();
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::one();
    let mut lam = vec![vec![BigInt::zero(); n]; n];
    if n == 0 {
        return Ok((b, IntegralGso { d, lambda: lam }));
    }
    gso_row(&b, 0, &mut d, &mut lam)?;
    let num = BigInt::from(delta.num);
    let den = BigInt::from(delta.den);
    let mut kmax = 0;
    let mut k = 1;
    while k < n {
        if k > kmax {
            kmax = k;
            gso_row(&b, k, &mut d, &mut lam)?;
        }
        size_reduce(&mut b, &mut lam, &d, k, k - 1);
        let lhs = &den * &d[k + 1] * &d[k - 1];
        let rhs = &num * &d[k] * &d[k] - &den * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = std::mem::take(&mut lam[k][j]);
                lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
            }
            let l = lam[k][k - 1].clone();
            let big_b = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
                lam[i][k - 1] = (&big_b * &t + &l * &lam[i][k]) / &d[k + 1];
            }
            d[k] = big_b;
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                size_reduce(&mut b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    Ok((b, IntegralGso { d, lambda: lam }))
}

fn size_reduce(b: &mut [Row], lam: &mut [Row], d: &[BigInt], k: usize, l: usize) {
    let dl = &d[l + 1];
    if (&lam[k][l] * BigInt::from(2)).abs() <= *dl {
        return;
    }
    let q = round_div(&lam[k][l], dl);
    let (head, tail) = b.split_at_mut(k);
    for (x, y) in tail[0].iter_mut().zip(&head[l]) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * dl;
    let (lh, lt) = lam.split_at_mut(k);
    for i in 0..l {
        lt[0][i] -= &q * &lh[l][i];
    }
}

/// LLL-reduced basis of the lattice.
pub fn lll_reduce(lattice: &IntLattice, delta: Delta) -> Vec<Row> {
    lll_reduce_rows(lattice.basis(), delta)
        .expect("HNF rows are independent")
        .0
}

/// `a / b` as a float, robust to operands beyond the `f64` range.
pub fn ratio_to_f64(a: &BigInt, b: &BigInt) -> f64 {
    let (ma, ea) = mantissa(a);
    let (mb, eb) = mantissa(b);
    (ma / mb) * 2f64.powi((ea - eb) as i32)
}

fn mantissa(x: &BigInt) -> (f64, i64) {
    let shift = x.bits().saturating_sub(64);
    ((x >> shift).to_f64().unwrap_or(0.0), shift as i64)
}

/// Natural logarithm of a positive integer.
pub fn big_ln(x: &BigInt) -> f64 {
    let (m, e) = mantissa(x);
    m.ln() + e as f64 * std::f64::consts::LN_2
}

/// Enumeration limits.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub cap: usize,
    pub deadline: Option<Instant>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { cap: DEFAULT_ENUM_CAP, deadline: None }
    }
}

struct Enumerator<'a> {
    basis: &'a [Row],
    mu: Vec<Vec<f64>>,
    bstar: Vec<f64>,
    x: Vec<i64>,
    bound: f64,
    best: BigInt,
    found: Vec<Row>,
    nodes: u64,
    deadline: Option<Instant>,
}

impl Enumerator<'_> {
    fn set_bound(&mut self) {
        let b = self.best.to_f64().unwrap_or(f64::MAX);
        self.bound = b * (1.0 + PRUNE_SLACK) + PRUNE_SLACK;
    }

    fn search(&mut self, k: usize, partial: f64) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(DEADLINE_POLL) && self.deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(Error::Cancelled);
        }
        let n = self.x.len();
        let center: f64 = -(k + 1..n).map(|j| self.x[j] as f64 * self.mu[j][k]).sum::<f64>();
        let base = center.round() as i64;
        let mut t = base;
        while partial + (t as f64 - center).powi(2) * self.bstar[k] <= self.bound {
            self.visit(k, t, partial + (t as f64 - center).powi(2) * self.bstar[k])?;
            t += 1;
        }
        t = base - 1;
        while partial + (t as f64 - center).powi(2) * self.bstar[k] <= self.bound {
            self.visit(k, t, partial + (t as f64 - center).powi(2) * self.bstar[k])?;
            t -= 1;
        }
        self.x[k] = 0;
        Ok(())
    }

    fn visit(&mut self, k: usize, t: i64, dist: f64) -> Result<()> {
        self.x[k] = t;
        if k > 0 {
            return self.search(k - 1, dist);
        }
        if self.x.iter().all(|&c| c == 0) {
            return Ok(());
        }
        let dim = self.basis[0].len();
        let mut v = vec![BigInt::zero(); dim];
        for (c, row) in self.x.iter().zip(self.basis) {
            if *c != 0 {
                let c = BigInt::from(*c);
                for (vi, bi) in v.iter_mut().zip(row) {
                    *vi += &c * bi;
                }
            }
        }
        let len = squared_norm(&v);
        match len.cmp(&self.best) {
            Ordering::Less => {
                self.best = len;
                self.found = vec![v];
                self.set_bound();
            }
            Ordering::Equal => self.found.push(v),
            Ordering::Greater => {}
        }
        Ok(())
    }
}

/// Make the first nonzero coordinate positive.
pub fn sign_normalize(v: &mut [BigInt]) {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
}

/// All shortest nonzero vectors up to sign, sign-normalized and sorted
/// lexicographically.
pub fn shortest_vectors(lattice: &IntLattice, cfg: &EnumConfig) -> Result<(BigInt, Vec<Row>)> {
    let dim = lattice.dim();
    if dim == 0 {
        return Err(Error::Input("zero-dimensional lattice has no nonzero vector".into()));
    }
    if dim > cfg.cap {
        return Err(Error::DimensionCap { dim, cap: cfg.cap });
    }
    let (basis, gso) = lll_reduce_rows(lattice.basis(), Delta::default())?;
    let bstar = (0..dim).map(|i| gso.bstar_sq(i)).collect();
    let mu = (0..dim)
        .map(|k| (0..dim).map(|j| if j < k { gso.mu(k, j) } else { 0.0 }).collect())
        .collect();
    let (first, best) = basis
        .iter()
        .map(|r| (r.clone(), squared_norm(r)))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("nonempty basis");
    let mut e = Enumerator {
        basis: &basis,
        mu,
        bstar,
        x: vec![0; dim],
        bound: 0.0,
        best,
        found: vec![first],
        nodes: 0,
        deadline: cfg.deadline,
    };
    e.set_bound();
    e.search(dim - 1, 0.0)?;
    let mut found = e.found;
    for v in found.iter_mut() {
        sign_normalize(v);
    }
    found.sort();
    found.dedup();
    Ok((e.best, found))
}

/// A shortest nonzero vector; ties go to the lexicographically smallest
/// sign-normalized minimizer.
pub fn svp_exact_with(lattice: &IntLattice, cfg: &EnumConfig) -> Result<LatticeVector> {
    let (len, mut vs) = shortest_vectors(lattice, cfg)?;
    let coords = vs.swap_remove(0);
    debug_assert_eq!(squared_norm(&coords), len);
    Ok(LatticeVector { coords, squared_length: len })
}

pub fn svp_exact(lattice: &IntLattice) -> Result<LatticeVector> {
    svp_exact_with(lattice, &EnumConfig::default())
}

/// `{v in L : v_j = 0 for j not in keep}` in the coordinates of `keep`
/// (ascending). Computed as the leading block of the HNF after moving the
/// kept coordinates to the front, working modulo `det(L)`.
pub fn intersect_coordinate_sublattice(lattice: &IntLattice, keep: &[usize]) -> Result<IntLattice> {
    let dim = lattice.dim();
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() || keep.last().is_some_and(|&k| k >= dim) {
        return Err(Error::Input(format!("keep set must be a nonempty subset of 0..{dim}")));
    }
    let mut order = keep.clone();
    order.extend((0..dim).filter(|j| keep.binary_search(j).is_err()));
    let permuted: Vec<Row> = lattice
        .basis()
        .iter()
        .map(|r| order.iter().map(|&j| r[j].clone()).collect())
        .collect();
    let full = hnf_with_modulus(&permuted, dim, &lattice.determinant());
    let s = keep.len();
    let block: Vec<Row> = full.basis()[..s].iter().map(|r| r[..s].to_vec()).collect();
    if block.iter().enumerate().any(|(i, r)| r[i].is_zero()) {
        return Err(Error::Rank { expected: s, found: 0 });
    }
    Ok(IntLattice::from_hnf_unchecked(block))
}

/// A basis of the left kernel `{x : x M = 0}` of an integer matrix, by
/// unimodular row elimination on `[M | I]`, LLL-reduced and
/// sign-normalized.
pub fn integer_kernel(m: &[Row]) -> Vec<Row> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut aug: Vec<(Row, Row)> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut t = vec![BigInt::zero(); rows];
            t[i] = BigInt::one();
            (r.clone(), t)
        })
        .collect();
    let mut top = 0;
    for c in 0..cols {
        let Some(first) = (top..rows).find(|&i| !aug[i].0[c].is_zero()) else {
            continue;
        };
        aug.swap(top, first);
        for i in top + 1..rows {
            if aug[i].0[c].is_zero() {
                continue;
            }
            let a = aug[top].0[c].clone();
            let b = aug[i].0[c].clone();
            let ext = a.extended_gcd(&b);
            let (x, y) = (ext.x, ext.y);
            let ag = &a / &ext.gcd;
            let bg = &b / &ext.gcd;
            let (head, tail) = aug.split_at_mut(i);
            let piv = &mut head[top];
            let row = &mut tail[0];
            for (pv, rv) in piv.0.iter_mut().zip(row.0.iter_mut()).chain(piv.1.iter_mut().zip(row.1.iter_mut())) {
                let np = &x * &*pv + &y * &*rv;
                let nr = &ag * &*rv - &bg * &*pv;
                *pv = np;
                *rv = nr;
            }
        }
        top += 1;
        if top == rows {
            break;
        }
    }
    let kernel: Vec<Row> = aug.into_iter().skip(top).map(|(_, t)| t).collect();
    let mut reduced = match lll_reduce_rows(&kernel, Delta::default()) {
        Ok((r, _)) => r,
        Err(_) => kernel,
    };
    for v in reduced.iter_mut() {
        sign_normalize(v);
    }
    reduced
}

/// `sqrt(D) * det(L)^(1/D)`, an upper bound on the first minimum.
pub fn minkowski_bound(lattice: &IntLattice) -> f64 {
    let d = lattice.dim() as f64;
    d.sqrt() * (big_ln(&lattice.determinant()) / d).exp()
}

/// Parse the plain-text basis format: a line holding `D`, then `D` rows of
/// space-separated decimal integers. Blank lines and `#` comments are
/// ignored.
pub fn parse_basis(text: &str) -> Result<Vec<Row>> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty basis file".into()))?;
    let d: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension line `{header}`")))?;
    let rows: Vec<Row> = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
                .collect::<Result<Row>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(Error::Parse(format!("expected {d} rows of {d} integers")));
    }
    Ok(rows)
}

pub fn format_basis(rows: &[Row]) -> String {
    let mut out = format!("{}\n", rows.len());
    for r in rows {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Convenience: rows from small integers.
pub fn rows_from_i64(rows: &[&[i64]]) -> Vec<Row> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(rows: &[&[i64]]) -> IntLattice {
        let r = rows_from_i64(rows);
        hnf(&r, r[0].len()).unwrap()
    }

    fn ints(v: &[i64]) -> Row {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(lat(&[&[1, 0], &[0, 1]]), IntLattice::identity(2));
        let l = lat(&[&[2, 1], &[5, 0]]);
        assert_eq!(l.basis(), &rows_from_i64(&[&[5, 0], &[2, 1]])[..]);
        assert_eq!(l.determinant(), BigInt::from(5));
        assert!(matches!(
            hnf(&rows_from_i64(&[&[1, 2], &[2, 4]]), 2),
            Err(Error::Rank { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn hnf_of_ternary_4x4() {
        // p = 3, delta = 1: generators of (3, eta^2 + eta - 1) in Z[eta]/(eta^4 + 1).
        let mut rows = rows_from_i64(&[
            &[-1, 1, 1, 0],
            &[0, -1, 1, 1],
            &[-1, 0, -1, 1],
            &[-1, -1, 0, -1],
        ]);
        for i in 0..4 {
            let mut r = vec![BigInt::zero(); 4];
            r[i] = BigInt::from(3);
            rows.push(r);
        }
        let l = hnf(&rows, 4).unwrap();
        assert_eq!(l.determinant(), BigInt::from(9));
        assert!(l.contains(&ints(&[-1, 1, 1, 0])));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&IntLattice::identity(3)), BigInt::one());
        assert_eq!(
            determinant(&IntLattice::scaled_identity(4, &BigInt::from(5))),
            BigInt::from(625)
        );
    }

    #[test]
    fn lll_examples() {
        assert_eq!(lll_reduce(&IntLattice::identity(3), Delta::default()), IntLattice::identity(3).basis());
        let l = lat(&[&[2, 1], &[5, 0]]);
        let red = lll_reduce(&l, Delta::default());
        assert!(red.iter().any(|r| squared_norm(r) == BigInt::from(5)));
        assert_eq!(hnf(&red, 2).unwrap(), l);
        assert!(Delta::new(1, 4).is_err());
        assert!(Delta::new(1, 1).is_err());
        assert!(Delta::new(3, 4).is_ok());
    }

    #[test]
    fn svp_examples() {
        let v = svp_exact(&IntLattice::scaled_identity(2, &BigInt::from(2))).unwrap();
        assert_eq!(v.squared_length, BigInt::from(4));
        let v = svp_exact(&lat(&[&[2, 1], &[5, 0]])).unwrap();
        assert_eq!(v.squared_length, BigInt::from(5));
        let l = lat(&[&[-1, 1, 1, 0], &[0, -1, 1, 1], &[3, 0, 0, 0], &[0, 3, 0, 0]]);
        let v = svp_exact(&l).unwrap();
        assert_eq!(v.squared_length, BigInt::from(3));
        assert!(l.contains(&v.coords));
    }

    #[test]
    fn svp_cap() {
        let l = IntLattice::identity(5);
        let cfg = EnumConfig { cap: 4, deadline: None };
        assert_eq!(svp_exact_with(&l, &cfg), Err(Error::DimensionCap { dim: 5, cap: 4 }));
    }

    #[test]
    fn svp_tie_break_is_lexicographic() {
        let v = svp_exact(&IntLattice::identity(3)).unwrap();
        assert_eq!(v.coords, ints(&[0, 0, 1]));
    }

    #[test]
    fn intersection_examples() {
        let z4 = IntLattice::identity(4);
        assert_eq!(intersect_coordinate_sublattice(&z4, &[0, 2]).unwrap(), IntLattice::identity(2));
        let three = IntLattice::scaled_identity(2, &BigInt::from(3));
        assert_eq!(
            intersect_coordinate_sublattice(&three, &[1]).unwrap(),
            IntLattice::scaled_identity(1, &BigInt::from(3))
        );
        assert!(intersect_coordinate_sublattice(&three, &[]).is_err());
        assert!(intersect_coordinate_sublattice(&three, &[2]).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(integer_kernel(&rows_from_i64(&[&[1, 0], &[0, 1]])).is_empty());
        assert_eq!(integer_kernel(&rows_from_i64(&[&[2], &[4]])), vec![ints(&[2, -1])]);
        let k = integer_kernel(&rows_from_i64(&[&[0, 0], &[0, 0], &[0, 0]]));
        assert_eq!(hnf(&k, 3).unwrap(), IntLattice::identity(3));
    }

    #[test]
    fn equality_examples() {
        let l = lat(&[&[2, 1], &[5, 0]]);
        assert!(lattice_equal(&l, &l));
        assert!(!lattice_equal(&IntLattice::identity(2), &IntLattice::scaled_identity(2, &BigInt::from(2))));
        assert!(lattice_equal(&lat(&[&[5, 0], &[2, 1]]), &l));
    }

    #[test]
    fn minkowski_examples() {
        assert!((minkowski_bound(&IntLattice::identity(4)) - 2.0).abs() < 1e-12);
        let b = minkowski_bound(&lat(&[&[2, 1], &[5, 0]]));
        assert!((b - 10f64.sqrt()).abs() < 1e-12);
        assert!(5f64.sqrt() <= b);
        let c = minkowski_bound(&IntLattice::scaled_identity(3, &BigInt::from(7)));
        assert!((c - 7.0 * 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn basis_text_round_trip() {
        let rows = rows_from_i64(&[&[5, 0], &[-2, 1]]);
        let text = format_basis(&rows);
        assert_eq!(text, "2\n5 0\n-2 1\n");
        assert_eq!(parse_basis(&text).unwrap(), rows);
        assert!(parse_basis("2\n1 2\n").is_err());
        assert!(parse_basis("x\n").is_err());
    }

    #[test]
    fn ratio_handles_huge_operands() {
        let a = BigInt::one() << 5000u32;
        let b = BigInt::one() << 4998u32;
        assert!((ratio_to_f64(&a, &b) - 4.0).abs() < 1e-12);
        assert!((big_ln(&(BigInt::one() << 2000u32)) - 2000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }
}
