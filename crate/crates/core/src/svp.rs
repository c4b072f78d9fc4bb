//! Shortest vectors in ideal lattices by enumeration inside the
//! decomposition subring `Z[eta]`, `eta = zeta^(2^(n - r))`.
//!
//! A prime ideal `p` above an odd prime with class `r` is the direct sum
//! `sum_k zeta^k c` of shifted copies of `c = p ∩ Z[eta]`, so its first
//! minimum is that of the `2^r`-dimensional lattice `c`. For general
//! ideals the right subring is found by trying `r_bar = 1, 2, ..` until
//! the lifted basis of `I ∩ Z[eta]` spans `I`.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo::{
    direct_sum_check, subfield_intersection, CycloParams, IdealLattice, RingElement, SubfieldIdeal,
};
use crate::error::{Error, Result};
use crate::factor::{class_r, factor_cyclotomic, is_pm3_mod8, match_factor};
use crate::lattice::{
    big_ln, hnf, hnf_with_modulus, svp_exact_with, EnumConfig, IntLattice, LatticeVector, Row,
    DEFAULT_ENUM_CAP,
};
use crate::modp::{FpPoly, PrimeModulus};
use crate::parallel::{map_ordered, Execution};

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_ENV: &str = "IDEAL_SVP_ENUM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FastPm3,
    Algorithm1,
    Algorithm2,
    FullEnumeration,
    Ramified2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvpResult {
    pub method: Method,
    /// Class `r` of the prime, or the `r_bar` at which the subring search
    /// succeeded.
    pub r: u32,
    /// Dimension actually enumerated (0 when nothing was).
    pub enum_dimension: usize,
    pub squared_length: BigInt,
    pub vector: RingElement,
}

#[derive(Serialize)]
struct SvpResultJson<'a> {
    method: Method,
    r: u32,
    enum_dimension: usize,
    #[serde(serialize_with = "crate::json::big")]
    squared_length: &'a BigInt,
    #[serde(serialize_with = "crate::json::big_vec")]
    vector: &'a [BigInt],
}

impl Serialize for SvpResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SvpResultJson {
            method: self.method,
            r: self.r,
            enum_dimension: self.enum_dimension,
            squared_length: &self.squared_length,
            vector: self.vector.coeffs(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug)]
pub struct SvpConfig {
    pub cap: usize,
    pub deadline: Option<Instant>,
}

impl Default for SvpConfig {
    fn default() -> Self {
        SvpConfig { cap: DEFAULT_ENUM_CAP, deadline: None }
    }
}

impl SvpConfig {
    /// Default configuration with the cap taken from `IDEAL_SVP_ENUM_CAP`
    /// when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(ENUM_CAP_ENV) {
            cfg.cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("{ENUM_CAP_ENV}=`{v}` is not a dimension")))?;
        }
        Ok(cfg)
    }

    fn enum_config(&self) -> EnumConfig {
        EnumConfig { cap: self.cap, deadline: self.deadline }
    }

    fn check(&self, r: u32) -> Result<()> {
        let dim = 1usize << r;
        if dim > self.cap {
            return Err(Error::Cap { r, dim, cap: self.cap });
        }
        Ok(())
    }
}

fn odd_prime(p: &PrimeModulus) -> Result<()> {
    if p.is_two() {
        return Err(Error::Input("p must be odd; the prime above 2 is handled separately".into()));
    }
    Ok(())
}

/// The matching factor `h` of `x^N + 1` mod `p` for the integer polynomial `f`.
fn checked_factor(n: u32, p: &PrimeModulus, f: &[BigInt]) -> Result<FpPoly> {
    let fact = factor_cyclotomic(n, p)?;
    Ok(match_factor(&fact, f)?.1)
}

/// `c = (p, h(zeta)) ∩ Z[eta]` at level `r`, written in powers of `eta`.
/// When every exponent of `h` is a multiple of `2^(n-r)`, `c` is built
/// directly as `(p, h'(eta))` with `h(x) = h'(x^(2^(n-r)))`; otherwise the
/// full ideal is intersected with the subring.
pub fn prime_subfield_ideal(n: u32, p: &PrimeModulus, h: &FpPoly, r: u32) -> Result<SubfieldIdeal> {
    let params = CycloParams::new(n)?;
    if r == 0 || r > n {
        return Err(Error::Input(format!("level {r} outside 1..={n}")));
    }
    let s = 1usize << (n - r);
    let coeffs = h.coeffs();
    let aligned = coeffs.iter().enumerate().all(|(i, c)| i % s == 0 || c.is_zero());
    if !aligned {
        return prime_subfield_ideal_generic(n, p, h, r);
    }
    let reduced: Row = coeffs.iter().step_by(s).map(|c| BigInt::from(c.clone())).collect();
    let sub = IdealLattice::from_two_element(CycloParams::new(r)?, p, &reduced);
    Ok(SubfieldIdeal { params, r_bar: r, lattice: sub.lattice().clone() })
}

/// `c` through the generic intersection of the full `N`-dimensional ideal.
pub fn prime_subfield_ideal_generic(
    n: u32,
    p: &PrimeModulus,
    h: &FpPoly,
    r: u32,
) -> Result<SubfieldIdeal> {
    let ideal = IdealLattice::from_two_element(CycloParams::new(n)?, p, &h.to_bigints());
    subfield_intersection(&ideal, r)
}

fn lift(c: &SubfieldIdeal, v: LatticeVector) -> (BigInt, RingElement) {
    (v.squared_length, c.embed(&v.coords))
}

/// Shortest vector of the prime ideal `(p, f(zeta))` by enumerating the
/// `2^r`-dimensional lattice `c`.
pub fn solve_prime_svp(n: u32, p: &PrimeModulus, f: &[BigInt], cfg: &SvpConfig) -> Result<SvpResult> {
    odd_prime(p)?;
    let h = checked_factor(n, p, f)?;
    let r = class_r(p, n);
    cfg.check(r)?;
    let c = prime_subfield_ideal(n, p, &h, r)?;
    let v = svp_exact_with(&c.lattice, &cfg.enum_config())?;
    let (squared_length, vector) = lift(&c, v);
    Ok(SvpResult { method: Method::Algorithm1, r, enum_dimension: c.dim(), squared_length, vector })
}

/// The explicit low-dimensional lattice for `p = +-3 mod 8`: rows
/// `(u, 1), (p, 0)` for `p = 5 mod 8` (factor `x^(N/2) + u`), and for
/// `p = 3 mod 8` (factor `x^(N/2) + delta x^(N/4) - 1`) the four rotations
/// of `(-1, delta, 1, 0)` together with `p e_i`.
pub fn pm3_lattice(n: u32, p: &PrimeModulus, h: &FpPoly) -> Result<IntLattice> {
    if !is_pm3_mod8(p) {
        return Err(Error::Input(format!("{p} is not +-3 mod 8")));
    }
    if n < 2 {
        return Err(Error::Input("the +-3 mod 8 path needs n >= 2".into()));
    }
    let big_n = 1usize << n;
    let pb = BigInt::from(p.value().clone());
    let coeff = |i: usize| BigInt::from(h.coeff(i));
    if p.rem_u64(8) == 5 {
        let rows = vec![vec![coeff(0), BigInt::one()], vec![pb, BigInt::zero()]];
        return hnf(&rows, 2);
    }
    let delta = coeff(big_n / 4);
    let one = BigInt::one();
    let zero = BigInt::zero();
    let mut rows: Vec<Row> = vec![
        vec![-&one, delta.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), -&one, delta.clone(), one.clone()],
        vec![-&one, zero.clone(), -&one, delta.clone()],
        vec![-&delta, -&one, zero.clone(), -&one],
    ];
    for i in 0..4 {
        let mut r = vec![BigInt::zero(); 4];
        r[i] = pb.clone();
        rows.push(r);
    }
    Ok(hnf_with_modulus(&rows, 4, &pb))
}

/// The `p = +-3 mod 8` shortest vector, whose squared length is exactly `p`.
pub fn fast_svp_pm3(n: u32, p: &PrimeModulus, f: &[BigInt], cfg: &SvpConfig) -> Result<SvpResult> {
    if !is_pm3_mod8(p) {
        return Err(Error::Input(format!("{p} is not +-3 mod 8")));
    }
    let h = checked_factor(n, p, f)?;
    let lattice = pm3_lattice(n, p, &h)?;
    let r = if lattice.dim() == 2 { 1 } else { 2 };
    let v = svp_exact_with(&lattice, &cfg.enum_config())?;
    let pb = BigInt::from(p.value().clone());
    if v.squared_length != pb {
        return Err(Error::Invariant(format!(
            "+-3 mod 8 lattice for p = {p} has minimum {} instead of p",
            v.squared_length
        )));
    }
    let params = CycloParams::new(n)?;
    let c = SubfieldIdeal { params, r_bar: r, lattice };
    let (squared_length, vector) = lift(&c, v);
    Ok(SvpResult { method: Method::FastPm3, r, enum_dimension: c.dim(), squared_length, vector })
}

/// Shortest vector of an arbitrary nonzero ideal: the first `r_bar` at
/// which `I ∩ Z[eta]` lifts to a basis of `I` decides the dimension.
pub fn solve_ideal_svp(ideal: &IdealLattice, cfg: &SvpConfig) -> Result<SvpResult> {
    let n = ideal.params().n();
    for r_bar in 1..=n {
        let c = subfield_intersection(ideal, r_bar)?;
        if !direct_sum_check(ideal, &c) {
            continue;
        }
        cfg.check(r_bar)?;
        let v = svp_exact_with(&c.lattice, &cfg.enum_config())?;
        let (squared_length, vector) = lift(&c, v);
        return Ok(SvpResult {
            method: Method::Algorithm2,
            r: r_bar,
            enum_dimension: c.dim(),
            squared_length,
            vector,
        });
    }
    Err(Error::Invariant("I ∩ Z[zeta] must always lift to I".into()))
}

/// Enumeration of the whole `N`-dimensional ideal lattice.
pub fn full_enumeration_svp(ideal: &IdealLattice, cfg: &SvpConfig) -> Result<SvpResult> {
    let params = ideal.params();
    cfg.check(params.n())?;
    let v = svp_exact_with(ideal.lattice(), &cfg.enum_config())?;
    Ok(SvpResult {
        method: Method::FullEnumeration,
        r: params.n(),
        enum_dimension: params.degree(),
        squared_length: v.squared_length,
        vector: RingElement::new(params, v.coords)?,
    })
}

/// The prime above 2 is `(zeta + 1)`; `1 + zeta` has squared length 2.
pub fn ramified_two_svp(n: u32) -> Result<SvpResult> {
    let params = CycloParams::new(n)?;
    Ok(SvpResult {
        method: Method::Ramified2,
        r: n,
        enum_dimension: 0,
        squared_length: BigInt::from(2),
        vector: RingElement::from_i64(params, &[1, 1]),
    })
}

/// `(r, easy)` with `easy` meaning `p = +-3 mod 8` or `p = 2`.
pub fn classify(n: u32, p: &PrimeModulus) -> (u32, bool) {
    (class_r(p, n), p.is_two() || is_pm3_mod8(p))
}

/// One prime-ideal instance for batch solving.
#[derive(Clone, Debug)]
pub struct PrimeTask {
    pub n: u32,
    pub p: PrimeModulus,
    pub f: Row,
}

impl PrimeTask {
    /// The instance for factor number `index` of `x^N + 1` mod `p`.
    pub fn from_factor_index(n: u32, p: &PrimeModulus, index: usize) -> Result<Self> {
        let fact = factor_cyclotomic(n, p)?;
        let f = fact.factors.get(index).ok_or_else(|| {
            Error::Input(format!("factor index {index} out of range 0..{}", fact.factors.len()))
        })?;
        Ok(PrimeTask { n, p: p.clone(), f: f.to_bigints() })
    }
}

/// Solve independent prime instances; results come back in input order.
pub fn solve_prime_batch(tasks: &[PrimeTask], cfg: &SvpConfig, exec: Execution) -> Vec<Result<SvpResult>> {
    map_ordered(tasks, exec, |t| {
        if t.p.is_two() {
            ramified_two_svp(t.n)
        } else {
            solve_prime_svp(t.n, &t.p, &t.f, cfg)
        }
    })
}

/// Loss factor for lifting a subfield Hermite-SVP solution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermiteFactorReport {
    #[serde(rename = "N")]
    pub degree: u64,
    pub g: u64,
    #[serde(serialize_with = "crate::json::big")]
    pub disc_l: BigInt,
    #[serde(serialize_with = "crate::json::big")]
    pub disc_k: BigInt,
    /// `disc_L / disc_K^(N/g)`.
    #[serde(serialize_with = "crate::json::big")]
    pub relative_norm: BigInt,
    /// `sqrt(N/g) / relative_norm^(1/(2N))`.
    pub factor: f64,
    /// `sqrt(N/g)`.
    pub bound: f64,
}

pub fn hermite_reduction_factor(
    degree: u64,
    g: u64,
    disc_l: &BigInt,
    disc_k: &BigInt,
) -> Result<HermiteFactorReport> {
    if degree == 0 || g == 0 || !degree.is_multiple_of(g) {
        return Err(Error::Divisibility(format!("g = {g} must divide N = {degree}")));
    }
    if !disc_l.is_positive() || !disc_k.is_positive() {
        return Err(Error::Input("discriminants are given as positive integers".into()));
    }
    let t = degree / g;
    let denom = num_traits::pow(disc_k.clone(), t as usize);
    let (relative_norm, rem) = disc_l.div_rem(&denom);
    if !rem.is_zero() {
        return Err(Error::Divisibility(format!(
            "disc_K^(N/g) = {disc_k}^{t} does not divide disc_L = {disc_l}"
        )));
    }
    let bound = (t as f64).sqrt();
    let factor = bound / (big_ln(&relative_norm) / (2.0 * degree as f64)).exp();
    Ok(HermiteFactorReport {
        degree,
        g,
        disc_l: disc_l.clone(),
        disc_k: disc_k.clone(),
        relative_norm,
        factor,
        bound,
    })
}
