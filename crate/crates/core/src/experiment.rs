//! Average-case sampling: how often a random prime (or prime ideal) falls
//! into the easy `p = +-3 mod 8` class or admits any reduction `r < n`.
//!
//! Samples are split into a fixed number of contiguous blocks, one per
//! worker stream, so a report depends only on the seed and the
//! configuration, never on the thread count.

use std::collections::BTreeMap;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{class_r, prime_ideal_count};
use crate::modp::{is_prime_u64, PrimeModulus};
use crate::parallel::{map_ordered, Execution};

/// Number of independent sampling streams.
pub const WORKERS: usize = 8;

/// Largest `M` for which exact population counts are sieved.
pub const POPULATION_SIEVE_LIMIT: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Distribution {
    /// Uniform over rational primes below `M`.
    #[serde(rename = "d1")]
    D1,
    /// Uniform over prime ideals lying above primes below `M`.
    #[serde(rename = "d2")]
    D2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub distribution: Distribution,
    pub n: u32,
    pub m_bound: u64,
    pub samples: usize,
    pub seed: u64,
    /// Whether `p = 2` is part of the support.
    pub include_two: bool,
}

impl ExperimentConfig {
    pub fn new(distribution: Distribution, n: u32, m_bound: u64, samples: usize, seed: u64) -> Self {
        ExperimentConfig { distribution, n, m_bound, samples, seed, include_two: true }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 62 {
            return Err(Error::Input(format!("n must lie in 1..=62, got {}", self.n)));
        }
        let min_m = if self.include_two { 3 } else { 4 };
        if self.m_bound < min_m {
            return Err(Error::Input(format!("M must be at least {min_m}, got {}", self.m_bound)));
        }
        if self.samples == 0 {
            return Err(Error::Input("samples must be at least 1".into()));
        }
        Ok(())
    }
}

/// Uniform prime below `m`, by rejection on uniform integers in `[2, m)`.
pub fn sample_distribution1<R: Rng + ?Sized>(m: u64, rng: &mut R) -> u64 {
    assert!(m >= 3, "M must be at least 3");
    loop {
        let x = rng.gen_range(2..m);
        if is_prime_u64(x) {
            return x;
        }
    }
}

fn ideal_count(n: u32, p: u64) -> usize {
    prime_ideal_count(n, &PrimeModulus::from_u64(p).expect("sampled value is prime"))
}

/// Uniform prime ideal above a prime below `m`, as `(p, factor index)`:
/// a uniform prime is kept with probability `g(p) / 2^n`.
pub fn sample_distribution2<R: Rng + ?Sized>(m: u64, n: u32, rng: &mut R) -> (u64, usize) {
    let full = 1u64 << n;
    loop {
        let p = sample_distribution1(m, rng);
        let g = ideal_count(n, p);
        if rng.gen_range(0..full) < g as u64 {
            return (p, rng.gen_range(0..g));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRow {
    pub sample_index: usize,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factor_index: Option<usize>,
    pub g: usize,
    pub r: u32,
    pub easy: bool,
}

fn is_easy(p: u64) -> bool {
    p == 2 || matches!(p % 8, 3 | 5)
}

/// Exact counts over the whole support, by sieving.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Population {
    pub primes: u64,
    pub easy_primes: u64,
    pub prime_level_easy_fraction: f64,
    pub ideals: u64,
    pub easy_ideals: u64,
    pub ideal_level_easy_fraction: f64,
}

fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit];
    let mut primes = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Prime-level and ideal-level easy fractions over all primes below `m`.
pub fn population(n: u32, m: u64, include_two: bool) -> Option<Population> {
    if m > POPULATION_SIEVE_LIMIT {
        return None;
    }
    let (mut primes, mut easy_primes, mut ideals, mut easy_ideals) = (0u64, 0u64, 0u64, 0u64);
    for p in sieve(m) {
        if p == 2 && !include_two {
            continue;
        }
        let g = ideal_count(n, p) as u64;
        primes += 1;
        ideals += g;
        if is_easy(p) {
            easy_primes += 1;
            easy_ideals += g;
        }
    }
    let frac = |a: u64, b: u64| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    Some(Population {
        primes,
        easy_primes,
        prime_level_easy_fraction: frac(easy_primes, primes),
        ideals,
        easy_ideals,
        ideal_level_easy_fraction: frac(easy_ideals, ideals),
    })
}

/// `1 / (1 + 2^(n-1))`.
pub fn bound_d2(n: u32) -> f64 {
    1.0 / (1.0 + 2f64.powi(n as i32 - 1))
}

/// `2^(n-1) ln M / sqrt(M)`.
pub fn d3_density(n: u32, m: u64) -> f64 {
    let m = m as f64;
    2f64.powi(n as i32 - 1) * m.ln() / m.sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub schema: &'static str,
    pub distribution: Distribution,
    pub n: u32,
    pub m_bound: u64,
    pub samples: usize,
    pub seed: u64,
    pub include_two: bool,
    pub easy_count: usize,
    pub easy_fraction: f64,
    pub reducible_count: usize,
    pub reducible_fraction: f64,
    pub class_histogram: BTreeMap<u32, usize>,
    pub bound_d2: f64,
    /// `easy_fraction >= bound_d2`, reported for D2 only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_d2_met: Option<bool>,
    pub d3_density_formula: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub population: Option<Population>,
    #[serde(skip)]
    pub rows: Vec<SampleRow>,
}

fn draw(cfg: &ExperimentConfig, rng: &mut ChaCha8Rng) -> (u64, Option<usize>) {
    loop {
        let (p, idx) = match cfg.distribution {
            Distribution::D1 => (sample_distribution1(cfg.m_bound, rng), None),
            Distribution::D2 => {
                let (p, i) = sample_distribution2(cfg.m_bound, cfg.n, rng);
                (p, Some(i))
            }
        };
        if cfg.include_two || p != 2 {
            return (p, idx);
        }
    }
}

fn worker_rows(cfg: &ExperimentConfig, worker: usize) -> Vec<SampleRow> {
    let per = cfg.samples.div_ceil(WORKERS);
    let start = (worker * per).min(cfg.samples);
    let end = ((worker + 1) * per).min(cfg.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(worker as u64);
    (start..end)
        .map(|sample_index| {
            let (p, factor_index) = draw(cfg, &mut rng);
            let pm = PrimeModulus::from_u64(p).expect("sampled value is prime");
            SampleRow {
                sample_index,
                p,
                factor_index,
                g: prime_ideal_count(cfg.n, &pm),
                r: class_r(&pm, cfg.n),
                easy: is_easy(p),
            }
        })
        .collect()
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment_with(cfg, Execution::default())
}

pub fn run_experiment_with(cfg: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    cfg.validate()?;
    let workers: Vec<usize> = (0..WORKERS).collect();
    let rows: Vec<SampleRow> = map_ordered(&workers, exec, |&w| worker_rows(cfg, w))
        .into_iter()
        .flatten()
        .collect();
    let easy_count = rows.iter().filter(|s| s.easy).count();
    let reducible_count = rows.iter().filter(|s| s.r < cfg.n).count();
    let mut class_histogram = BTreeMap::new();
    for s in &rows {
        *class_histogram.entry(s.r).or_insert(0) += 1;
    }
    let total = rows.len() as f64;
    let easy_fraction = easy_count as f64 / total;
    let bound = bound_d2(cfg.n);
    Ok(ExperimentReport {
        schema: crate::SCHEMA,
        distribution: cfg.distribution,
        n: cfg.n,
        m_bound: cfg.m_bound,
        samples: cfg.samples,
        seed: cfg.seed,
        include_two: cfg.include_two,
        easy_count,
        easy_fraction,
        reducible_count,
        reducible_fraction: reducible_count as f64 / total,
        class_histogram,
        bound_d2: bound,
        bound_d2_met: (cfg.distribution == Distribution::D2).then_some(easy_fraction >= bound),
        d3_density_formula: d3_density(cfg.n, cfg.m_bound),
        population: population(cfg.n, cfg.m_bound, cfg.include_two),
        rows,
    })
}

/// Sample rows as CSV: `sample_index,p,g,r,easy`.
pub fn write_csv<W: Write>(report: &ExperimentReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Input(format!("csv output failed: {e}"));
    w.write_record(["sample_index", "p", "g", "r", "easy"]).map_err(io)?;
    for s in &report.rows {
        w.write_record([
            s.sample_index.to_string(),
            s.p.to_string(),
            s.g.to_string(),
            s.r.to_string(),
            s.easy.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Input(format!("csv output failed: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_small_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut twos = 0;
        for _ in 0..10_000 {
            let p = sample_distribution1(4, &mut rng);
            assert!(p == 2 || p == 3);
            twos += (p == 2) as usize;
        }
        // chi-square with one degree of freedom, 99.9% quantile 10.83
        let e = 5000.0;
        let chi = 2.0 * (twos as f64 - e).powi(2) / e;
        assert!(chi < 10.83, "chi2 = {chi}");
    }

    #[test]
    fn d2_counts_ideals() {
        assert_eq!(ideal_count(4, 11), 2);
        assert_eq!(ideal_count(4, 13), 2);
        assert_eq!(ideal_count(3, 17), 8);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let (p, i) = sample_distribution2(50, 3, &mut rng);
            assert!(i < ideal_count(3, p));
        }
    }

    #[test]
    fn deterministic_and_thread_independent() {
        let cfg = ExperimentConfig::new(Distribution::D2, 4, 10_000, 300, 7);
        let a = run_experiment_with(&cfg, Execution::Sequential).unwrap();
        let b = run_experiment_with(&cfg, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.class_histogram.values().sum::<usize>(), 300);
        assert_eq!(a.rows.iter().map(|r| r.sample_index).collect::<Vec<_>>(), (0..300).collect::<Vec<_>>());
    }

    #[test]
    fn one_sample() {
        let cfg = ExperimentConfig::new(Distribution::D1, 3, 100, 1, 0);
        let rep = run_experiment(&cfg).unwrap();
        assert_eq!(rep.class_histogram.values().sum::<usize>(), 1);
    }

    #[test]
    fn config_errors() {
        assert!(ExperimentConfig::new(Distribution::D1, 3, 2, 1, 0).validate().is_err());
        assert!(ExperimentConfig::new(Distribution::D1, 3, 10, 0, 0).validate().is_err());
        let mut c = ExperimentConfig::new(Distribution::D1, 3, 3, 1, 0);
        c.include_two = false;
        assert!(c.validate().is_err());
    }

    #[test]
    fn formulas() {
        assert!((bound_d2(4) - 1.0 / 9.0).abs() < 1e-15);
        let m = 100_000u64;
        assert!((d3_density(4, m) - 8.0 * (m as f64).ln() / (m as f64).sqrt()).abs() < 1e-12);
        let pop = population(3, 100, true).unwrap();
        assert_eq!(pop.primes, 25);
    }

    #[test]
    fn csv_header() {
        let cfg = ExperimentConfig::new(Distribution::D1, 3, 100, 3, 5);
        let rep = run_experiment(&cfg).unwrap();
        let mut buf = Vec::new();
        write_csv(&rep, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("sample_index,p,g,r,easy\n"));
        assert_eq!(text.lines().count(), 4);
    }
}
