//! Independent oracles shared by the integration suites. Nothing here
//! calls the code under test except for building inputs.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use ideal_svp::lattice::{hnf, integer_kernel, IntLattice, Row};
use ideal_svp::modp::PrimeModulus;

pub fn ints(v: &[i64]) -> Row {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::from_u64(p).unwrap()
}

pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_below(m: u64) -> Vec<u64> {
    (2..m).filter(|&x| is_prime_trial(x)).collect()
}

pub fn random_prime_in<R: Rng>(rng: &mut R, lo: u64, hi: u64, residues: &[u64]) -> u64 {
    loop {
        let x = rng.gen_range(lo..hi);
        if residues.contains(&(x % 8)) && ideal_svp::modp::is_prime_u64(x) {
            return x;
        }
    }
}

fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

fn dot_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |s, t| s + t)
}

/// Exact Gram-Schmidt: squared lengths of `b*_i` and the `mu` matrix.
pub fn rational_gso(rows: &[Row]) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
    let n = rows.len();
    let b: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut star: Vec<Vec<BigRational>> = Vec::new();
    let mut bs = Vec::new();
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let mut v = b[i].clone();
        for j in 0..i {
            let m = dot_q(&b[i], &star[j]) / &bs[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &m * y;
            }
            mu[i][j] = m;
        }
        bs.push(dot_q(&v, &v));
        star.push(v);
    }
    (bs, mu)
}

/// Size reduction and the Lovasz condition at `num/den`.
pub fn is_lll_reduced(rows: &[Row], num: i64, den: i64) -> bool {
    let (bs, mu) = rational_gso(rows);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let delta = BigRational::new(BigInt::from(num), BigInt::from(den));
    for k in 0..rows.len() {
        for j in 0..k {
            if mu[k][j].abs() > half {
                return false;
            }
        }
        if k > 0 && (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bs[k - 1] > bs[k] {
            return false;
        }
    }
    true
}

/// Inverse of a nonsingular square integer matrix over the rationals.
pub fn inverse(rows: &[Row]) -> Vec<Vec<BigRational>> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: Vec<BigRational> = r.iter().map(q).collect();
            v.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            v
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero()).expect("nonsingular");
        a.swap(c, piv);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn norm2(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

pub fn sign_normalized(mut v: Row) -> Row {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v = v.into_iter().map(|x| -x).collect();
    }
    v
}

/// Exhaustive search: every coefficient vector in a box that provably
/// contains all vectors no longer than the shortest basis row. Returns the
/// minimum and all sign-normalized minimizers sorted. `None` if the box is
/// larger than `limit`.
pub fn naive_shortest(rows: &[Row], limit: u64) -> Option<(BigInt, Vec<Row>)> {
    let d = rows.len();
    let radius = rows.iter().map(|r| norm2(r)).min().unwrap();
    let inv = inverse(rows);
    let mut bounds = Vec::with_capacity(d);
    let mut volume: u64 = 1;
    for i in 0..d {
        // x_i = sum_j v_j inv[j][i], so |x_i|^2 <= |v|^2 * |column i|^2
        let col = (0..d).map(|j| &inv[j][i] * &inv[j][i]).fold(BigRational::zero(), |s, t| s + t);
        let prod = col * q(&radius);
        let c = prod.floor().to_integer().sqrt().to_i64().unwrap();
        volume = volume.checked_mul(2 * c as u64 + 1)?;
        if volume > limit {
            return None;
        }
        bounds.push(c);
    }
    let mut best: Option<BigInt> = None;
    let mut found: Vec<Row> = Vec::new();
    let mut x: Vec<i64> = bounds.iter().map(|c| -c).collect();
    loop {
        if x.iter().any(|&c| c != 0) {
            let mut v = vec![BigInt::zero(); rows[0].len()];
            for (c, r) in x.iter().zip(rows) {
                for (vi, ri) in v.iter_mut().zip(r) {
                    *vi += BigInt::from(*c) * ri;
                }
            }
            let l = norm2(&v);
            match best.as_ref().map(|b| l.cmp(b)) {
                None | Some(std::cmp::Ordering::Less) => {
                    best = Some(l);
                    found = vec![sign_normalized(v)];
                }
                Some(std::cmp::Ordering::Equal) => found.push(sign_normalized(v)),
                _ => {}
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                found.sort();
                found.dedup();
                return Some((best.unwrap(), found));
            }
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = -bounds[i];
            i += 1;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, d: usize, range: i64) -> Vec<Row> {
    (0..d).map(|_| (0..d).map(|_| BigInt::from(rng.gen_range(-range..=range))).collect()).collect()
}

pub fn random_nonsingular<R: Rng>(rng: &mut R, d: usize, range: i64) -> Vec<Row> {
    loop {
        let m = random_matrix(rng, d, range);
        if !rational_det(&m).is_zero() {
            return m;
        }
    }
}

pub fn rational_det(rows: &[Row]) -> BigRational {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if piv != c {
            a.swap(c, piv);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            let pivot_row = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Random unimodular row operations applied to `rows`.
pub fn scramble<R: Rng>(rng: &mut R, rows: &[Row], steps: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let d = m.len();
    for _ in 0..steps {
        let i = rng.gen_range(0..d);
        match rng.gen_range(0..3) {
            0 => {
                let j = (i + rng.gen_range(1..d.max(2))) % d;
                if i != j {
                    let c = BigInt::from(rng.gen_range(-3..=3));
                    let src = m[j].clone();
                    for (x, y) in m[i].iter_mut().zip(&src) {
                        *x += &c * y;
                    }
                }
            }
            1 => {
                let j = rng.gen_range(0..d);
                m.swap(i, j);
            }
            _ => {
                for x in m[i].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    m
}

/// `L ∩ span(e_j : j in keep)` through the integer left kernel of the
/// basis projected on the complement coordinates.
pub fn kernel_intersection(l: &IntLattice, keep: &[usize]) -> IntLattice {
    let d = l.dim();
    let comp: Vec<usize> = (0..d).filter(|j| !keep.contains(j)).collect();
    let basis = l.basis();
    let vectors: Vec<Row> = if comp.is_empty() {
        basis.to_vec()
    } else {
        let proj: Vec<Row> = basis.iter().map(|r| comp.iter().map(|&j| r[j].clone()).collect()).collect();
        integer_kernel(&proj)
            .iter()
            .map(|x| {
                let mut v = vec![BigInt::zero(); d];
                for (c, r) in x.iter().zip(basis) {
                    for (vi, ri) in v.iter_mut().zip(r) {
                        *vi += c * ri;
                    }
                }
                v
            })
            .collect()
    };
    let restricted: Vec<Row> = vectors.iter().map(|v| keep.iter().map(|&j| v[j].clone()).collect()).collect();
    hnf(&restricted, keep.len()).unwrap()
}

// Dense polynomials over F_p with u64 coefficients, constant term first.

pub fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(*x, *y, p)) % p;
        }
    }
    poly_trim(out)
}

pub fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    poly_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0) % p) % p)
            .collect(),
    )
}

pub fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let inv = powmod(m[dm], p - 2, p);
    while r.len() > dm && !r.is_empty() {
        let c = mulmod(*r.last().unwrap(), inv, p);
        let shift = r.len() - 1 - dm;
        for (i, mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, *mi, p)) % p;
        }
        r = poly_trim(r);
    }
    r
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^k) mod m`.
fn frobenius_power(k: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut cur = poly_rem(&[0, 1], m, p);
    for _ in 0..k {
        // cur^p by square and multiply
        let mut result = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = poly_rem(&poly_mul(&result, &base, p), m, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
            e >>= 1;
        }
        cur = result;
    }
    cur
}

/// Rabin's irreducibility test for a monic `f` of degree `d` over `F_p`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if !poly_rem(&poly_sub(&frobenius_power(d as u32, f, p), &[0, 1], p), f, p).is_empty() {
        return false;
    }
    let mut prime_divisors = Vec::new();
    let mut m = d;
    let mut q = 2;
    while m > 1 {
        if m.is_multiple_of(q) {
            prime_divisors.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    prime_divisors.iter().all(|&q| {
        let h = poly_sub(&frobenius_power((d / q) as u32, f, p), &[0, 1], p);
        let g = poly_gcd(f, &h, p);
        g.len() == 1
    })
}

/// Dickson polynomial `D_s(x, a)` mod `p` by the three-term recurrence.
pub fn dickson_recurrence(s: u32, a: i64, p: u64) -> Vec<u64> {
    let a = a.rem_euclid(p as i64) as u64;
    let mut prev = vec![2 % p];
    if s == 0 {
        return poly_trim(prev);
    }
    let mut cur = vec![0, 1];
    for _ in 1..s {
        let x_cur = poly_mul(&[0, 1], &cur, p);
        let a_prev: Vec<u64> = prev.iter().map(|c| mulmod(*c, a, p)).collect();
        let next = poly_sub(&x_cur, &a_prev, p);
        prev = cur;
        cur = next;
    }
    poly_trim(cur)
}

pub fn to_u64s(f: &ideal_svp::modp::FpPoly) -> Vec<u64> {
    f.coeffs().iter().map(|c| c.to_u64().unwrap()).collect()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
