//! Modular arithmetic and univariate polynomials over a prime field `F_p`.
//!
//! Residues are `BigUint` values normalized to `[0, p)`. Randomized
//! routines take an explicit generator; the convenience wrappers without
//! one use a fixed-seed ChaCha stream, so results never depend on global
//! state.

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Seed of the internal generator used by the deterministic wrappers.
const INTERNAL_SEED: u64 = 0x5eed_1dea_15a7_2024;

/// Bases that make Miller-Rabin deterministic below 3.3 * 10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Random Miller-Rabin rounds for candidates of 64 bits or more.
const MR_RANDOM_ROUNDS: usize = 40;

/// A prime `p`, certified by a primality test at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(BigUint);

impl PrimeModulus {
    pub fn new(p: BigUint) -> Result<Self> {
        if is_prime(&p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn from_u64(p: u64) -> Result<Self> {
        Self::new(BigUint::from(p))
    }

    /// Parse a decimal string.
    pub fn parse(s: &str) -> Result<Self> {
        let p: BigUint = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not a non-negative integer")))?;
        Self::new(p)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_two(&self) -> bool {
        self.0 == BigUint::from(2u32)
    }

    /// `p mod m` for a small modulus.
    pub fn rem_u64(&self, m: u64) -> u64 {
        (&self.0 % m).to_u64().expect("remainder below m")
    }

    /// Canonical residue of an arbitrary integer, in `[0, p)`.
    pub fn residue(&self, x: &BigInt) -> BigUint {
        let p = BigInt::from_biguint(Sign::Plus, self.0.clone());
        x.mod_floor(&p).to_biguint().expect("mod_floor is non-negative")
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn signed(&self, r: &BigUint) -> BigInt {
        let r = r % &self.0;
        let half = &self.0 >> 1u32;
        if r > half {
            BigInt::from(r) - BigInt::from(self.0.clone())
        } else {
            BigInt::from(r)
        }
    }

    /// `p - 1`, the representative of `-1`.
    pub fn minus_one(&self) -> BigUint {
        &self.0 - 1u32
    }

    pub fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.0 - (a % &self.0)
        }
    }

    pub fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + b) % &self.0
    }

    pub fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + &self.0 - (b % &self.0)) % &self.0
    }

    pub fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.0
    }

    /// Multiplicative inverse; `a` must be nonzero mod `p`.
    pub fn inv(&self, a: &BigUint) -> BigUint {
        debug_assert!(!(a % &self.0).is_zero(), "inverse of zero");
        a.modpow(&(&self.0 - 2u32), &self.0)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Generator used when a caller does not supply one.
pub fn internal_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(INTERNAL_SEED)
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_BASES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mr_round(n: &BigUint, n1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n1 {
            return true;
        }
    }
    false
}

/// Primality test: deterministic below `2^64`, 40 random Miller-Rabin
/// rounds above (seeded from `n`, so the answer is reproducible).
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &q in &MR_BASES {
        if (n % q).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    for &a in &MR_BASES {
        if !mr_round(n, &n1, &d, s, &BigUint::from(a)) {
            return false;
        }
    }
    let seed = n.iter_u64_digits().fold(INTERNAL_SEED, |h, w| {
        h.rotate_left(17) ^ w.wrapping_mul(0x9e37_79b9_7f4a_7c15)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    for _ in 0..MR_RANDOM_ROUNDS {
        let a = rng.gen_biguint_range(&two, &n1);
        if !mr_round(n, &n1, &d, s, &a) {
            return false;
        }
    }
    true
}

/// `base^exp mod p` by square-and-multiply.
pub fn pow_mod(base: &BigUint, exp: &BigUint, p: &PrimeModulus) -> BigUint {
    base.modpow(exp, p.value())
}

/// An element of multiplicative order exactly `2^k` in `F_p^*`.
///
/// Samples `c` and returns `c^((p-1)/2^k)` once its order is exact.
pub fn primitive_root_of_unity<R: Rng + ?Sized>(
    p: &PrimeModulus,
    k: u32,
    rng: &mut R,
) -> Result<BigUint> {
    let pm1 = p.minus_one();
    let two_k = BigUint::one() << k;
    if !(&pm1 % &two_k).is_zero() {
        return Err(Error::Divisibility(format!(
            "2^{k} does not divide p - 1 = {pm1}"
        )));
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    let cofactor = &pm1 / &two_k;
    let half_order = BigUint::one() << (k - 1);
    loop {
        let c = rng.gen_biguint_range(&BigUint::one(), p.value());
        let u = c.modpow(&cofactor, p.value());
        if u.modpow(&half_order, p.value()) == pm1 {
            return Ok(u);
        }
    }
}

/// The full set `U_k` of primitive `2^k`-th roots of unity, sorted.
pub fn primitive_roots_set(p: &PrimeModulus, k: u32) -> Result<Vec<BigUint>> {
    let u = primitive_root_of_unity(p, k, &mut internal_rng())?;
    if k == 0 {
        return Ok(vec![BigUint::one()]);
    }
    let u2 = p.mul(&u, &u);
    let count = 1usize << (k - 1);
    let mut out = Vec::with_capacity(count);
    let mut cur = u;
    for _ in 0..count {
        out.push(cur.clone());
        cur = p.mul(&cur, &u2);
    }
    out.sort();
    Ok(out)
}

/// A polynomial over `F_p` with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<BigUint>,
    p: PrimeModulus,
}

impl FpPoly {
    pub fn new(coeffs: Vec<BigUint>, p: &PrimeModulus) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % p.value()).collect();
        let mut f = FpPoly { coeffs, p: p.clone() };
        f.trim();
        f
    }

    pub fn from_bigints(coeffs: &[BigInt], p: &PrimeModulus) -> Self {
        Self::new(coeffs.iter().map(|c| p.residue(c)).collect(), p)
    }

    pub fn from_i64(coeffs: &[i64], p: &PrimeModulus) -> Self {
        Self::new(
            coeffs.iter().map(|&c| p.residue(&BigInt::from(c))).collect(),
            p,
        )
    }

    pub fn zero(p: &PrimeModulus) -> Self {
        FpPoly { coeffs: Vec::new(), p: p.clone() }
    }

    pub fn one(p: &PrimeModulus) -> Self {
        FpPoly { coeffs: vec![BigUint::one()], p: p.clone() }
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: BigUint, p: &PrimeModulus) -> Self {
        let mut coeffs = vec![BigUint::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs, p)
    }

    /// `x^(2^n) + 1`.
    pub fn cyclotomic_power_of_two(n: u32, p: &PrimeModulus) -> Self {
        let deg = 1usize << n;
        let mut coeffs = vec![BigUint::zero(); deg + 1];
        coeffs[0] = BigUint::one();
        coeffs[deg] = BigUint::one();
        Self::new(coeffs, p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn modulus(&self) -> &PrimeModulus {
        &self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Integer lift with coefficients in `[0, p)`.
    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.coeffs.iter().cloned().map(BigInt::from).collect()
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        let p = &self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| p.add(&p.mul(&acc, x), c))
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.p.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(coeffs, &self.p)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.p.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Self::new(coeffs, &self.p)
    }

    pub fn scale(&self, c: &BigUint) -> FpPoly {
        Self::new(self.coeffs.iter().map(|a| self.p.mul(a, c)).collect(), &self.p)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.p);
        }
        // Accumulate unreduced products, reduce once per output slot.
        let mut acc = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        Self::new(acc, &self.p)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let p = &self.p;
        let lead_inv = p.inv(d.leading().unwrap());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut q = vec![BigUint::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = p.mul(&r[i], &lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = i - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[shift + j] = p.sub(&r[shift + j], &p.mul(&c, dc));
            }
            q[shift] = c;
        }
        r.truncate(dd);
        (Self::new(q, p), Self::new(r, p))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> FpPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.p.inv(l)),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^exp mod m`.
    pub fn pow_mod(&self, exp: &BigUint, m: &FpPoly) -> FpPoly {
        let mut result = Self::one(&self.p).rem(m);
        let base = self.rem(m);
        for i in (0..exp.bits()).rev() {
            result = result.mul(&result).rem(m);
            if exp.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `f * g mod p`, further reduced modulo `modpoly` when given.
pub fn poly_mul_mod(f: &FpPoly, g: &FpPoly, modpoly: Option<&FpPoly>) -> FpPoly {
    let prod = f.mul(g);
    match modpoly {
        Some(m) => prod.rem(m),
        None => prod,
    }
}

/// Exact binomial coefficient.
fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The Dickson polynomial `D_s(x, a)` reduced mod `p`, from the closed form
/// `sum_{i <= s/2} s/(s-i) * C(s-i, i) * (-a)^i * x^(s-2i)`.
pub fn dickson_poly(s: u32, a: &BigInt, p: &PrimeModulus) -> Result<FpPoly> {
    if s == 0 {
        return Err(Error::Input("Dickson index must be at least 1".into()));
    }
    let s64 = u64::from(s);
    let minus_a = p.residue(&-a);
    let mut coeffs = vec![BigUint::zero(); s as usize + 1];
    let mut pow = BigUint::one();
    for i in 0..=s64 / 2 {
        // s/(s-i) * C(s-i, i) is an integer: exact division.
        let c = binomial(s64 - i, i) * s64 / (s64 - i);
        coeffs[(s64 - 2 * i) as usize] = p.mul(&(c % p.value()), &pow);
        pow = p.mul(&pow, &minus_a);
    }
    Ok(FpPoly::new(coeffs, p))
}

/// All roots of `f` in `F_p`, sorted ascending, each once.
pub fn poly_roots(f: &FpPoly) -> Vec<BigUint> {
    poly_roots_with_rng(f, &mut internal_rng())
}

/// Root extraction by equal-degree splitting: isolate the product of the
/// linear factors with `gcd(f, x^p - x)`, then split it with
/// `gcd(g, (x + c)^((p-1)/2) - 1)` for random shifts `c`.
pub fn poly_roots_with_rng<R: Rng + ?Sized>(f: &FpPoly, rng: &mut R) -> Vec<BigUint> {
    let p = f.modulus().clone();
    match f.degree() {
        None | Some(0) => return Vec::new(),
        _ => {}
    }
    if p.is_two() {
        return [BigUint::zero(), BigUint::one()]
            .into_iter()
            .filter(|x| f.eval(x).is_zero())
            .collect();
    }
    let f = f.monic();
    let x = FpPoly::monomial(1, BigUint::one(), &p);
    let xp = x.pow_mod(p.value(), &f);
    let mut g = f.gcd(&xp.sub(&x));
    let mut roots = Vec::new();
    if g.coeff(0).is_zero() && !g.is_zero() {
        roots.push(BigUint::zero());
        g = g.div_rem(&x).0;
    }
    let half = (p.value() - 1u32) >> 1u32;
    let mut stack = vec![g];
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => continue,
            Some(1) => {
                roots.push(p.neg(&g.coeff(0)));
                continue;
            }
            _ => {}
        }
        loop {
            let c = rng.gen_biguint_below(p.value());
            let shifted = FpPoly::new(vec![c, BigUint::one()], &p);
            let t = shifted.pow_mod(&half, &g).sub(&FpPoly::one(&p));
            let h = g.gcd(&t);
            let dh = h.degree().unwrap_or(0);
            if dh > 0 && dh < g.degree().unwrap() {
                let other = g.div_rem(&h).0;
                stack.push(h);
                stack.push(other);
                break;
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::from_u64(p).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn pow_mod_examples() {
        assert_eq!(pow_mod(&big(2), &big(4), &pm(17)), big(16));
        assert_eq!(pow_mod(&big(9), &big(0), &pm(17)), big(1));
        assert_eq!(pow_mod(&big(3), &big(16), &pm(17)), big(1));
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeModulus::from_u64(1).is_err());
        assert!(PrimeModulus::from_u64(91).is_err());
        assert!(PrimeModulus::from_u64(561).is_err());
        let carmichael_big: BigUint = "3825123056546413051".parse().unwrap();
        assert!(!is_prime(&carmichael_big));
        let m61 = (BigUint::one() << 61u32) - 1u32;
        assert!(is_prime(&m61));
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m127 * &m61)));
    }

    #[test]
    fn small_primes_match_trial_division() {
        for n in 0u64..2000 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "n = {n}");
        }
    }

    #[test]
    fn primitive_roots_examples() {
        let mut rng = internal_rng();
        assert_eq!(primitive_root_of_unity(&pm(5), 1, &mut rng).unwrap(), big(4));
        let u = primitive_root_of_unity(&pm(5), 2, &mut rng).unwrap();
        assert!(u == big(2) || u == big(3));
        let u = primitive_root_of_unity(&pm(17), 3, &mut rng).unwrap();
        assert!([2u64, 8, 9, 15].iter().any(|&c| u == big(c)));
        assert_eq!(
            primitive_roots_set(&pm(17), 3).unwrap(),
            vec![big(2), big(8), big(9), big(15)]
        );
        assert!(matches!(
            primitive_root_of_unity(&pm(7), 2, &mut rng),
            Err(Error::Divisibility(_))
        ));
    }

    #[test]
    fn dickson_examples() {
        let p = pm(101);
        let d1 = dickson_poly(1, &BigInt::from(7), &p).unwrap();
        assert_eq!(d1, FpPoly::from_i64(&[0, 1], &p));
        let d2 = dickson_poly(2, &BigInt::from(-1), &p).unwrap();
        assert_eq!(d2, FpPoly::from_i64(&[2, 0, 1], &p));
        let d4 = dickson_poly(4, &BigInt::from(1), &p).unwrap();
        assert_eq!(d4, FpPoly::from_i64(&[2, 0, -4, 0, 1], &p));
        assert!(dickson_poly(0, &BigInt::from(1), &p).is_err());
    }

    #[test]
    fn roots_examples() {
        assert_eq!(poly_roots(&FpPoly::from_i64(&[-1, 1], &pm(7))), vec![big(1)]);
        assert_eq!(poly_roots(&FpPoly::from_i64(&[2, 0, 1], &pm(3))), vec![big(1), big(2)]);
        assert_eq!(poly_roots(&FpPoly::from_i64(&[2, 0, 1], &pm(11))), vec![big(3), big(8)]);
        // x^2 + 1 has no roots mod 7; x(x-3) has root 0.
        assert!(poly_roots(&FpPoly::from_i64(&[1, 0, 1], &pm(7))).is_empty());
        assert_eq!(poly_roots(&FpPoly::from_i64(&[0, -3, 1], &pm(7))), vec![big(0), big(3)]);
        assert_eq!(poly_roots(&FpPoly::from_i64(&[1, 1], &pm(2))), vec![big(1)]);
    }

    #[test]
    fn repeated_roots_reported_once() {
        let p = pm(13);
        let f = FpPoly::from_i64(&[-2, 1], &p);
        let cube = f.mul(&f).mul(&f);
        assert_eq!(poly_roots(&cube), vec![big(2)]);
    }

    #[test]
    fn mul_mod_examples() {
        let p5 = pm(5);
        let prod = poly_mul_mod(
            &FpPoly::from_i64(&[2, 0, 1], &p5),
            &FpPoly::from_i64(&[3, 0, 1], &p5),
            None,
        );
        assert_eq!(prod, FpPoly::cyclotomic_power_of_two(2, &p5));
        let f = FpPoly::from_i64(&[4, 1, 3], &p5);
        assert_eq!(poly_mul_mod(&f, &FpPoly::one(&p5), None), f);
        let p3 = pm(3);
        let prod = poly_mul_mod(
            &FpPoly::from_i64(&[-1, 1, 1], &p3),
            &FpPoly::from_i64(&[-1, 2, 1], &p3),
            None,
        );
        assert_eq!(prod, FpPoly::cyclotomic_power_of_two(2, &p3));
        let m = FpPoly::from_i64(&[1, 0, 1], &p5);
        let r = poly_mul_mod(&FpPoly::from_i64(&[0, 1], &p5), &FpPoly::from_i64(&[0, 1], &p5), Some(&m));
        assert_eq!(r, FpPoly::from_i64(&[-1], &p5));
    }

    #[test]
    fn signed_view() {
        let p = pm(7);
        assert_eq!(p.signed(&big(3)), BigInt::from(3));
        assert_eq!(p.signed(&big(4)), BigInt::from(-3));
        assert_eq!(p.signed(&big(6)), BigInt::from(-1));
        assert_eq!(p.residue(&BigInt::from(-1)), big(6));
    }

    #[test]
    fn display_poly() {
        let f = FpPoly::from_i64(&[2, 1, 0, 1], &pm(5));
        assert_eq!(f.to_string(), "x^3 + x + 2");
    }
}
