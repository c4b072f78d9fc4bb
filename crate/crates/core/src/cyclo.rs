//! The ring `Z[zeta] = Z[x]/(x^N + 1)`, `N = 2^n`, under the coefficient
//! embedding, and its ideals as full-rank integer lattices.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    format_basis, hnf, hnf_with_modulus, intersect_coordinate_sublattice, parse_basis, squared_norm,
    IntLattice, Row,
};
use crate::modp::{FpPoly, PrimeModulus};

/// Largest supported `n` (ring rank `2^20`).
pub const MAX_N: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycloParams {
    n: u32,
}

impl CycloParams {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Input(format!("n must lie in 1..={MAX_N}, got {n}")));
        }
        Ok(CycloParams { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Ring rank `N = 2^n`.
    pub fn degree(&self) -> usize {
        1 << self.n
    }

    pub fn conductor(&self) -> usize {
        2 << self.n
    }

    /// `log2` of the field discriminant `2^(n 2^n)`.
    pub fn discriminant_log2(&self) -> u64 {
        self.n as u64 * self.degree() as u64
    }

    pub fn discriminant(&self) -> BigInt {
        BigInt::one() << self.discriminant_log2()
    }
}

/// An element `sum a_i zeta^i` as its coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    params: CycloParams,
    coeffs: Row,
}

impl RingElement {
    pub fn new(params: CycloParams, coeffs: Row) -> Result<Self> {
        if coeffs.len() != params.degree() {
            return Err(Error::Input(format!(
                "element needs {} coefficients, got {}",
                params.degree(),
                coeffs.len()
            )));
        }
        Ok(RingElement { params, coeffs })
    }

    /// Reduce an integer polynomial of any length modulo `x^N + 1`.
    pub fn from_poly(params: CycloParams, poly: &[BigInt]) -> Self {
        let big_n = params.degree();
        let mut coeffs = vec![BigInt::zero(); big_n];
        for (i, c) in poly.iter().enumerate() {
            if (i / big_n).is_multiple_of(2) {
                coeffs[i % big_n] += c;
            } else {
                coeffs[i % big_n] -= c;
            }
        }
        RingElement { params, coeffs }
    }

    pub fn from_i64(params: CycloParams, poly: &[i64]) -> Self {
        let v: Row = poly.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_poly(params, &v)
    }

    pub fn zero(params: CycloParams) -> Self {
        RingElement { params, coeffs: vec![BigInt::zero(); params.degree()] }
    }

    pub fn one(params: CycloParams) -> Self {
        Self::constant(params, BigInt::one())
    }

    pub fn constant(params: CycloParams, c: BigInt) -> Self {
        let mut e = Self::zero(params);
        e.coeffs[0] = c;
        e
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(params: CycloParams, k: i64) -> Self {
        let big_n = params.degree() as i64;
        let k = k.rem_euclid(2 * big_n);
        let mut e = Self::zero(params);
        if k < big_n {
            e.coeffs[k as usize] = BigInt::one();
        } else {
            e.coeffs[(k - big_n) as usize] = -BigInt::one();
        }
        e
    }

    pub fn params(&self) -> CycloParams {
        self.params
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Row {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn squared_norm(&self) -> BigInt {
        squared_norm(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.params, other.params);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        RingElement { params: self.params, coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        RingElement { params: self.params, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `zeta^k`, `0 <= k < N`: a rotation with sign wrap.
    pub fn shift(&self, k: usize) -> Self {
        let big_n = self.params.degree();
        let mut coeffs = vec![BigInt::zero(); big_n];
        for (i, a) in self.coeffs.iter().enumerate() {
            let j = i + k % big_n;
            if j < big_n {
                coeffs[j] = a.clone();
            } else {
                coeffs[j - big_n] = -a;
            }
        }
        RingElement { params: self.params, coeffs }
    }

    /// Negacyclic product (`zeta^N = -1`).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.params, other.params);
        let big_n = self.params.degree();
        let mut coeffs = vec![BigInt::zero(); big_n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                if i + j < big_n {
                    coeffs[i + j] += t;
                } else {
                    coeffs[i + j - big_n] -= t;
                }
            }
        }
        RingElement { params: self.params, coeffs }
    }
}

pub fn ring_mul(a: &RingElement, b: &RingElement) -> RingElement {
    a.mul(b)
}

/// An ideal of `Z[zeta]` as its coefficient-embedding lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealLattice {
    params: CycloParams,
    lattice: IntLattice,
}

impl IdealLattice {
    /// The unit ideal.
    pub fn unit(params: CycloParams) -> Self {
        IdealLattice { params, lattice: IntLattice::identity(params.degree()) }
    }

    /// `(c)` for a nonzero rational integer `c`.
    pub fn principal_integer(params: CycloParams, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Rank { expected: params.degree(), found: 0 });
        }
        Ok(IdealLattice { params, lattice: IntLattice::scaled_identity(params.degree(), &c.abs()) })
    }

    /// `(p, f(zeta))`. With `h = gcd(f mod p, x^N + 1)` of degree `d`, the
    /// HNF has rows `p e_i` for `i < d` and `e_i - (x^i mod h)` for `i >= d`.
    pub fn from_two_element(params: CycloParams, p: &PrimeModulus, f: &[BigInt]) -> Self {
        let h = FpPoly::from_bigints(f, p)
            .gcd(&FpPoly::cyclotomic_power_of_two(params.n(), p));
        Self::from_modular_divisor(params, p, &h)
    }

    /// `(p, h(zeta))` for a monic divisor `h` of `x^N + 1` mod `p`.
    fn from_modular_divisor(params: CycloParams, p: &PrimeModulus, h: &FpPoly) -> Self {
        let big_n = params.degree();
        let d = h.degree().unwrap_or(0);
        let pb = BigInt::from(p.value().clone());
        let mut basis: Vec<Row> = Vec::with_capacity(big_n);
        for i in 0..d {
            let mut r = vec![BigInt::zero(); big_n];
            r[i] = pb.clone();
            basis.push(r);
        }
        if d < big_n {
            // x^d mod h, then multiply by x repeatedly
            let mut rem = FpPoly::monomial(d, One::one(), p).rem(h);
            for i in d..big_n {
                let mut r = vec![BigInt::zero(); big_n];
                r[i] = BigInt::one();
                for (j, c) in rem.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        r[j] = BigInt::from(p.neg(c));
                    }
                }
                basis.push(r);
                if i + 1 < big_n {
                    rem = rem.mul(&FpPoly::monomial(1, One::one(), p)).rem(h);
                }
            }
        }
        IdealLattice { params, lattice: IntLattice::from_hnf_unchecked(basis) }
    }

    /// The ideal generated by `gens`: HNF of all `zeta^j g`.
    pub fn from_generators(params: CycloParams, gens: &[RingElement]) -> Result<Self> {
        let big_n = params.degree();
        if gens.iter().any(|g| g.params != params) {
            return Err(Error::Input("generator ring does not match".into()));
        }
        let rows: Vec<Row> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .flat_map(|g| (0..big_n).map(move |j| g.shift(j).coeffs))
            .collect();
        if rows.is_empty() {
            return Err(Error::Rank { expected: big_n, found: 0 });
        }
        Ok(IdealLattice { params, lattice: hnf(&rows, big_n)? })
    }

    /// Wrap an arbitrary basis, checking closure under multiplication by
    /// `zeta`.
    pub fn from_basis(params: CycloParams, rows: &[Row]) -> Result<Self> {
        let lattice = hnf(rows, params.degree())?;
        let ideal = IdealLattice { params, lattice };
        if !ideal.is_zeta_closed() {
            return Err(Error::Input("basis is not closed under multiplication by zeta".into()));
        }
        Ok(ideal)
    }

    pub fn params(&self) -> CycloParams {
        self.params
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    pub fn norm(&self) -> BigInt {
        self.lattice.determinant()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.params == self.params && self.lattice.contains(&x.coeffs)
    }

    pub fn basis_elements(&self) -> Vec<RingElement> {
        self.lattice
            .basis()
            .iter()
            .map(|r| RingElement { params: self.params, coeffs: r.clone() })
            .collect()
    }

    pub fn is_zeta_closed(&self) -> bool {
        self.basis_elements().iter().all(|b| self.contains(&b.shift(1)))
    }
}

pub fn ideal_from_generators(params: CycloParams, gens: &[RingElement]) -> Result<IdealLattice> {
    IdealLattice::from_generators(params, gens)
}

pub fn ideal_norm(ideal: &IdealLattice) -> BigInt {
    ideal.norm()
}

/// Membership in `(p, h(zeta))` by reducing `x` modulo `p` and `h`, with no
/// lattice built.
pub fn prime_ideal_contains(p: &PrimeModulus, h: &FpPoly, x: &RingElement) -> bool {
    FpPoly::from_bigints(x.coeffs(), p).rem(h).is_zero()
}

/// `I J`, the HNF of all pairwise products of basis vectors, reduced
/// modulo `N(I) N(J)`.
pub fn ideal_product(a: &IdealLattice, b: &IdealLattice) -> Result<IdealLattice> {
    if a.params != b.params {
        return Err(Error::Input("ideals live in different rings".into()));
    }
    let big_n = a.params.degree();
    let m = a.norm() * b.norm();
    let bs = b.basis_elements();
    let rows: Vec<Row> = a
        .basis_elements()
        .iter()
        .flat_map(|x| bs.iter().map(move |y| x.mul(y).coeffs))
        .collect();
    Ok(IdealLattice { params: a.params, lattice: hnf_with_modulus(&rows, big_n, &m) })
}

fn odd_index(params: CycloParams, i: i64) -> Result<usize> {
    if i.rem_euclid(2) == 0 {
        return Err(Error::Input(format!("automorphism index {i} must be odd")));
    }
    Ok(i.rem_euclid(params.conductor() as i64) as usize)
}

fn automorphism_coeffs(params: CycloParams, coeffs: &[BigInt], i: usize) -> Row {
    let big_n = params.degree();
    let two_n = params.conductor();
    let mut out = vec![BigInt::zero(); big_n];
    for (k, a) in coeffs.iter().enumerate() {
        let e = (i * k) % two_n;
        if e < big_n {
            out[e] += a;
        } else {
            out[e - big_n] -= a;
        }
    }
    out
}

/// `sigma_i : zeta -> zeta^i` on an element.
pub fn apply_automorphism(x: &RingElement, i: i64) -> Result<RingElement> {
    let i = odd_index(x.params, i)?;
    Ok(RingElement { params: x.params, coeffs: automorphism_coeffs(x.params, &x.coeffs, i) })
}

/// `sigma_i(I)` in HNF.
pub fn apply_automorphism_ideal(ideal: &IdealLattice, i: i64) -> Result<IdealLattice> {
    let params = ideal.params;
    let i = odd_index(params, i)?;
    let rows: Vec<Row> = ideal
        .lattice
        .basis()
        .iter()
        .map(|r| automorphism_coeffs(params, r, i))
        .collect();
    let lattice = hnf_with_modulus(&rows, params.degree(), &ideal.norm());
    Ok(IdealLattice { params, lattice })
}

/// `c = I ∩ Z[eta]` with `eta = zeta^(2^(n - r_bar))`, in powers of `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldIdeal {
    pub params: CycloParams,
    pub r_bar: u32,
    pub lattice: IntLattice,
}

impl SubfieldIdeal {
    /// Spacing `2^(n - r_bar)` between subfield coordinates in the ring.
    pub fn stride(&self) -> usize {
        1 << (self.params.n() - self.r_bar)
    }

    pub fn dim(&self) -> usize {
        1 << self.r_bar
    }

    /// Place subfield coordinate `k` at ring coordinate `k * stride`.
    pub fn embed(&self, v: &[BigInt]) -> RingElement {
        let s = self.stride();
        let mut coeffs = vec![BigInt::zero(); self.params.degree()];
        for (k, c) in v.iter().enumerate() {
            coeffs[k * s] = c.clone();
        }
        RingElement { params: self.params, coeffs }
    }
}

pub fn subfield_intersection(ideal: &IdealLattice, r_bar: u32) -> Result<SubfieldIdeal> {
    let params = ideal.params;
    if r_bar > params.n() {
        return Err(Error::Input(format!("r_bar {r_bar} exceeds n = {}", params.n())));
    }
    let s = 1usize << (params.n() - r_bar);
    let keep: Vec<usize> = (0..1usize << r_bar).map(|j| j * s).collect();
    let lattice = intersect_coordinate_sublattice(&ideal.lattice, &keep)?;
    Ok(SubfieldIdeal { params, r_bar, lattice })
}

/// The `N` elements `zeta^j b_i` for the basis `b_i` of `c` and
/// `0 <= j < 2^(n - r_bar)`.
pub fn lift_decomposition_basis(c: &SubfieldIdeal) -> Vec<RingElement> {
    let s = c.stride();
    c.lattice
        .basis()
        .iter()
        .flat_map(|b| {
            let e = c.embed(b);
            (0..s).map(move |j| e.shift(j))
        })
        .collect()
}

/// Whether `I = sum_j zeta^j c` (as a direct sum).
pub fn direct_sum_check(ideal: &IdealLattice, c: &SubfieldIdeal) -> bool {
    if c.params != ideal.params {
        return false;
    }
    let det_c = c.lattice.determinant();
    if det_c.pow(c.stride() as u32) != ideal.norm() {
        return false;
    }
    let rows: Vec<Row> = lift_decomposition_basis(c).into_iter().map(|e| e.coeffs).collect();
    hnf_with_modulus(&rows, ideal.params.degree(), &det_c) == ideal.lattice
}

/// `(coefficient norm, canonical-embedding norm)`; the second evaluates the
/// element at all primitive `2N`-th roots of unity in double precision.
pub fn embedding_norms(x: &RingElement) -> (f64, f64) {
    let big_n = x.params.degree();
    let coeff = x.squared_norm().to_f64().unwrap_or(f64::INFINITY).sqrt();
    let cs: Vec<f64> = x.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let step = std::f64::consts::PI / big_n as f64;
    let mut total = 0.0;
    for k in (1..2 * big_n).step_by(2) {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in cs.iter().enumerate() {
            if *c != 0.0 {
                let angle = step * ((j * k) % (2 * big_n)) as f64;
                acc += Complex64::from_polar(*c, angle);
            }
        }
        total += acc.norm_sqr();
    }
    (coeff, total.sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealForm {
    TwoElement,
    Generators,
    Basis,
}

/// Serialized ideal; integers are decimal strings and `basis` uses the
/// plain-text basis format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub n: u32,
    pub form: IdealForm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn parse_ints(v: &[String]) -> Result<Row> {
    v.iter()
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer `{s}`"))))
        .collect()
}

impl IdealRecord {
    pub fn two_element(n: u32, p: &PrimeModulus, f: &[BigInt]) -> Self {
        IdealRecord {
            n,
            form: IdealForm::TwoElement,
            p: Some(p.to_string()),
            f: Some(strings(f)),
            gens: None,
            basis: None,
        }
    }

    pub fn generators(n: u32, gens: &[RingElement]) -> Self {
        IdealRecord {
            n,
            form: IdealForm::Generators,
            p: None,
            f: None,
            gens: Some(gens.iter().map(|g| strings(g.coeffs())).collect()),
            basis: None,
        }
    }

    pub fn basis(ideal: &IdealLattice) -> Self {
        IdealRecord {
            n: ideal.params.n(),
            form: IdealForm::Basis,
            p: None,
            f: None,
            gens: None,
            basis: Some(format_basis(ideal.lattice.basis())),
        }
    }

    pub fn to_ideal(&self) -> Result<IdealLattice> {
        let params = CycloParams::new(self.n)?;
        let missing = |what: &str| Error::Parse(format!("{what} missing for form {:?}", self.form));
        match self.form {
            IdealForm::TwoElement => {
                let p = PrimeModulus::parse(self.p.as_deref().ok_or_else(|| missing("p"))?)?;
                let f = parse_ints(self.f.as_deref().ok_or_else(|| missing("f"))?)?;
                Ok(IdealLattice::from_two_element(params, &p, &f))
            }
            IdealForm::Generators => {
                let gens = self
                    .gens
                    .as_deref()
                    .ok_or_else(|| missing("gens"))?
                    .iter()
                    .map(|g| parse_ints(g).map(|v| RingElement::from_poly(params, &v)))
                    .collect::<Result<Vec<_>>>()?;
                IdealLattice::from_generators(params, &gens)
            }
            IdealForm::Basis => {
                let rows = parse_basis(self.basis.as_deref().ok_or_else(|| missing("basis"))?)?;
                IdealLattice::from_basis(params, &rows)
            }
        }
    }
}
