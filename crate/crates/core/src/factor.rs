//! Explicit factorization of `x^(2^n) + 1` over `F_p` and the hardness
//! class `r` of the prime ideals above `p`.
//!
//! Write `p = 2^A * m + 1` when `p = 1 mod 4` and `p = 2^A * m - 1` when
//! `p = 3 mod 4`, with `m` odd. Then over `F_p`:
//!
//! | case                | factors                                              |
//! |---------------------|------------------------------------------------------|
//! | `p = 1 mod 4, n < A`  | `2^n` linear `x + u`, `u` in `U_(n+1)`              |
//! | `p = 1 mod 4, n >= A` | `2^(A-1)` binomials `x^(2^(n-A+1)) + u`, `u` in `U_A` |
//! | `p = 3 mod 4, n < A`  | `2^(n-1)` trinomials `x^2 + g x + 1`, `D_(2^(n-1))(g, 1) = 0` |
//! | `p = 3 mod 4, n >= A` | `2^(A-1)` trinomials `x^(2^(n-A+1)) + d x^(2^(n-A)) - 1`, `D_(2^(A-1))(d, -1) = 0` |
//!
//! `U_k` is the set of primitive `2^k`-th roots of unity mod `p` and `D_s`
//! the Dickson polynomial. For `p = 3 mod 4, n = 1` the polynomial `x^2 + 1`
//! is itself irreducible; for `p = 2` it is `(x + 1)^(2^n)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp::{dickson_poly, poly_roots, primitive_roots_set, FpPoly, PrimeModulus};
use crate::parallel::{map_ordered, Execution};

/// Shape of the factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    LinearRoots,
    Binomial,
    TrinomialSmall,
    TrinomialLarge,
    /// `p = 3 mod 4` and `n = 1`: `x^2 + 1` stays irreducible.
    Inert,
    Ramified2,
}

/// `p = 2^A * m + sign` with `m` odd and the sign fixed by `p mod 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitParams {
    pub sign: i8,
    pub a: u32,
    pub m: BigUint,
    pub p: PrimeModulus,
}

pub fn split_params(p: &PrimeModulus) -> Result<SplitParams> {
    if p.is_two() {
        return Err(Error::Input("p = 2 has no odd normal form 2^A m +- 1".into()));
    }
    let (sign, shifted) = if p.rem_u64(4) == 1 {
        (1i8, p.value() - 1u32)
    } else {
        (-1i8, p.value() + 1u32)
    };
    let a = shifted.trailing_zeros().expect("p +- 1 is nonzero") as u32;
    Ok(SplitParams { sign, a, m: shifted >> a, p: p.clone() })
}

/// The class parameter `r`: `min(A - 1, n)` for `p = 1 mod 4`,
/// `min(A, n)` for `p = 3 mod 4`, and `n` for `p = 2`.
pub fn class_r(p: &PrimeModulus, n: u32) -> u32 {
    match split_params(p) {
        Err(_) => n,
        Ok(sp) if sp.sign > 0 => (sp.a - 1).min(n),
        Ok(sp) => sp.a.min(n),
    }
}

/// Closed-form `(g, degree, e, family)` of the factorization, without
/// computing any factor.
pub fn factor_shape(n: u32, p: &PrimeModulus) -> (usize, usize, usize, Family) {
    let big_n = 1usize << n;
    let Ok(sp) = split_params(p) else {
        return (1, 1, big_n, Family::Ramified2);
    };
    let a = sp.a;
    match (sp.sign > 0, n < a) {
        (true, true) => (big_n, 1, 1, Family::LinearRoots),
        (true, false) => (1 << (a - 1), 1 << (n - a + 1), 1, Family::Binomial),
        (false, _) if n == 1 => (1, 2, 1, Family::Inert),
        (false, true) => (1 << (n - 1), 2, 1, Family::TrinomialSmall),
        (false, false) => (1 << (a - 1), 1 << (n - a + 1), 1, Family::TrinomialLarge),
    }
}

/// Number of distinct prime ideals above `p` in `Z[zeta_(2^(n+1))]`.
pub fn prime_ideal_count(n: u32, p: &PrimeModulus) -> usize {
    factor_shape(n, p).0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub n: u32,
    pub p: PrimeModulus,
    /// Ramification exponent.
    pub e: usize,
    pub g: usize,
    pub degree: usize,
    pub factors: Vec<FpPoly>,
    pub family: Family,
}

fn sort_factors(factors: &mut [FpPoly]) {
    factors.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
}

fn expect_count(found: usize, want: usize, what: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(Error::Invariant(format!("{what}: found {found}, expected {want}")))
    }
}

/// Factor `x^(2^n) + 1` over `F_p`. Factors are monic with coefficients in
/// `[0, p)`, sorted by their coefficient sequence starting at the constant
/// term.
pub fn factor_cyclotomic(n: u32, p: &PrimeModulus) -> Result<FactorizationResult> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    let (g, degree, e, family) = factor_shape(n, p);
    let one = BigUint::one();
    let mut factors = match family {
        Family::Ramified2 => vec![FpPoly::from_i64(&[1, 1], p)],
        Family::Inert => vec![FpPoly::cyclotomic_power_of_two(1, p)],
        Family::LinearRoots => primitive_roots_set(p, n + 1)?
            .into_iter()
            .map(|u| FpPoly::new(vec![u, one.clone()], p))
            .collect(),
        Family::Binomial => {
            let a = split_params(p)?.a;
            primitive_roots_set(p, a)?
                .into_iter()
                .map(|u| {
                    let mut f = FpPoly::monomial(degree, one.clone(), p).coeffs().to_vec();
                    f[0] = u;
                    FpPoly::new(f, p)
                })
                .collect()
        }
        Family::TrinomialSmall => {
            let dickson = dickson_poly(1 << (n - 1), &BigInt::one(), p)?;
            let gammas = poly_roots(&dickson);
            expect_count(gammas.len(), g, "roots of D_(2^(n-1))(x, 1)")?;
            gammas
                .into_iter()
                .map(|gamma| FpPoly::new(vec![one.clone(), gamma, one.clone()], p))
                .collect()
        }
        Family::TrinomialLarge => {
            let a = split_params(p)?.a;
            let dickson = dickson_poly(1 << (a - 1), &-BigInt::one(), p)?;
            let deltas = poly_roots(&dickson);
            expect_count(deltas.len(), g, "roots of D_(2^(A-1))(x, -1)")?;
            deltas
                .into_iter()
                .map(|delta| {
                    let mut f = vec![BigUint::zero(); degree + 1];
                    f[0] = p.minus_one();
                    f[degree / 2] = delta;
                    f[degree] = one.clone();
                    FpPoly::new(f, p)
                })
                .collect()
        }
    };
    sort_factors(&mut factors);
    expect_count(factors.len(), g, "factor count")?;
    Ok(FactorizationResult { n, p: p.clone(), e, g, degree, factors, family })
}

/// Factor every `(n, p)` pair of a grid.
pub fn factor_grid(
    pairs: &[(u32, PrimeModulus)],
    exec: Execution,
) -> Vec<Result<FactorizationResult>> {
    map_ordered(pairs, exec, |(n, p)| factor_cyclotomic(*n, p))
}

/// Independent check of a factorization: the product identity
/// `(prod f_i)^e = x^(2^n) + 1` over `F_p`, the counts and degrees of the
/// expected pattern, monic factors, and pairwise coprimality for odd `p`.
pub fn verify_factorization(result: &FactorizationResult) -> bool {
    let p = &result.p;
    let big_n = 1usize << result.n;
    let (g, degree, e, family) = factor_shape(result.n, p);
    if (result.g, result.degree, result.e, result.family) != (g, degree, e, family)
        || result.factors.len() != g
        || g * degree * e != big_n
    {
        return false;
    }
    if result
        .factors
        .iter()
        .any(|f| f.modulus() != p || !f.is_monic() || f.degree() != Some(degree))
    {
        return false;
    }
    let mut product = FpPoly::one(p);
    for f in &result.factors {
        product = product.mul(f);
    }
    let mut power = FpPoly::one(p);
    for _ in 0..e {
        power = power.mul(&product);
    }
    if power != FpPoly::cyclotomic_power_of_two(result.n, p) {
        return false;
    }
    if !p.is_two() {
        for (i, a) in result.factors.iter().enumerate() {
            for b in &result.factors[i + 1..] {
                if a.gcd(b).degree() != Some(0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Serialized form of a factorization; integers as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub schema: String,
    pub n: u32,
    pub p: String,
    pub sign: Option<i8>,
    #[serde(rename = "A")]
    pub a: Option<u32>,
    pub m: Option<String>,
    pub r: u32,
    pub e: usize,
    pub g: usize,
    pub degree: usize,
    pub family: Family,
    pub factors: Vec<Vec<String>>,
}

impl From<&FactorizationResult> for FactorizationRecord {
    fn from(res: &FactorizationResult) -> Self {
        let sp = split_params(&res.p).ok();
        FactorizationRecord {
            schema: crate::SCHEMA.to_string(),
            n: res.n,
            p: res.p.to_string(),
            sign: sp.as_ref().map(|s| s.sign),
            a: sp.as_ref().map(|s| s.a),
            m: sp.as_ref().map(|s| s.m.to_string()),
            r: class_r(&res.p, res.n),
            e: res.e,
            g: res.g,
            degree: res.degree,
            family: res.family,
            factors: res
                .factors
                .iter()
                .map(|f| f.coeffs().iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

impl FactorizationRecord {
    /// Rebuild the in-memory result (factors re-reduced mod `p`).
    pub fn to_result(&self) -> Result<FactorizationResult> {
        let p = PrimeModulus::parse(&self.p)?;
        let factors = self
            .factors
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|c| {
                        c.parse::<BigUint>()
                            .map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(|v| FpPoly::new(v, &p))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FactorizationResult {
            n: self.n,
            p,
            e: self.e,
            g: self.g,
            degree: self.degree,
            factors,
            family: self.family,
        })
    }
}

/// Residue of `p` modulo 8 when that makes sense, used for the
/// `p = +-3 mod 8` fast path.
pub fn is_pm3_mod8(p: &PrimeModulus) -> bool {
    matches!(p.rem_u64(8), 3 | 5)
}

/// Look up the factor of `x^(2^n) + 1` matching an integer polynomial
/// (after reduction mod `p` and normalization to monic).
pub fn match_factor(
    fact: &FactorizationResult,
    f: &[BigInt],
) -> Result<(usize, FpPoly)> {
    let reduced = FpPoly::from_bigints(f, &fact.p);
    if reduced.degree().unwrap_or(0) == 0 {
        return Err(Error::Factor("factor must have positive degree mod p".into()));
    }
    let monic = reduced.monic();
    fact.factors
        .iter()
        .position(|g| *g == monic)
        .map(|i| (i, monic.clone()))
        .ok_or_else(|| {
            Error::Factor(format!(
                "{monic} is not an irreducible factor of x^{} + 1 mod {}",
                1u64 << fact.n,
                fact.p
            ))
        })
}
