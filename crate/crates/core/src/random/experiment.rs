use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{sample_uniform, sample_via_permutation, short_edge_count, Seed, RNG_ID};
use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::patterns::{largest_line, largest_stack, largest_wave};
use crate::twins::{
    block_twins, default_split_m, exact_twins, split_twins, BlockTwinParams, HybridPermFinder,
    MatchingStrategy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// [`sample_uniform`]
    #[default]
    Uniform,
    /// [`sample_via_permutation`]
    Permutation,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Uniform => "uniform",
            Scheme::Permutation => "permutation",
        }
    }

    pub fn sample<R: rand::Rng + ?Sized>(self, n: usize, rng: &mut R) -> Matching {
        match self {
            Scheme::Uniform => sample_uniform(n, rng),
            Scheme::Permutation => sample_via_permutation(n, rng),
        }
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" | "online" => Ok(Scheme::Uniform),
            "permutation" => Ok(Scheme::Permutation),
            _ => Err(Error::InvalidParameter(format!("unknown scheme {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinMethod {
    Block(MatchingStrategy),
    Split,
    Exact,
}

impl TwinMethod {
    pub fn name(self) -> &'static str {
        match self {
            TwinMethod::Block(MatchingStrategy::Greedy) => "block",
            TwinMethod::Block(MatchingStrategy::Exact) => "block-exact",
            TwinMethod::Split => "split",
            TwinMethod::Exact => "exact",
        }
    }

    pub fn size(self, host: &Matching, r: usize) -> Result<usize> {
        let t = match self {
            TwinMethod::Block(strategy) => {
                let p = BlockTwinParams::default_for(host.len(), r)?.with_strategy(strategy);
                block_twins(host, &p)?
            }
            TwinMethod::Split => split_twins(
                host,
                r,
                default_split_m(host.len()),
                &HybridPermFinder::default(),
            )?,
            TwinMethod::Exact => exact_twins(host, r)?,
        };
        Ok(t.size())
    }
}

impl FromStr for TwinMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "block" | "block-greedy" => Ok(TwinMethod::Block(MatchingStrategy::Greedy)),
            "block-exact" => Ok(TwinMethod::Block(MatchingStrategy::Exact)),
            "split" => Ok(TwinMethod::Split),
            "exact" => Ok(TwinMethod::Exact),
            _ => Err(Error::InvalidParameter(format!(
                "unknown twin method {s:?}"
            ))),
        }
    }
}

/// A per-sample quantity. Textual forms: `line`, `stack`, `wave`,
/// `short_edges:<len>`, `twins:<r>:<method>` (method defaults to `block`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Statistic {
    Line,
    Stack,
    Wave,
    ShortEdges { len: u32 },
    Twins { r: usize, method: TwinMethod },
}

impl Statistic {
    pub fn name(&self) -> String {
        self.to_string()
    }

    fn validate(&self, n: usize) -> Result<()> {
        match *self {
            Statistic::ShortEdges { len } if len == 0 || len as usize > 2 * n => Err(
                Error::InvalidParameter(format!("short_edges length must be in 1..={}", 2 * n)),
            ),
            Statistic::Twins { r, .. } if r < 2 => Err(Error::InvalidParameter(format!(
                "r must be at least 2, got {r}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, m: &Matching) -> Result<f64> {
        let v = match *self {
            Statistic::Line => largest_line(m).size(),
            Statistic::Stack => largest_stack(m).size(),
            Statistic::Wave => largest_wave(m).size(),
            Statistic::ShortEdges { len } => short_edge_count(m, len),
            Statistic::Twins { r, method } => method.size(m, r)?,
        };
        Ok(v as f64)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Line => f.write_str("line"),
            Statistic::Stack => f.write_str("stack"),
            Statistic::Wave => f.write_str("wave"),
            Statistic::ShortEdges { len } => write!(f, "short_edges:{len}"),
            Statistic::Twins { r, method } => write!(f, "twins:{r}:{}", method.name()),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedStatistic(s.to_string());
        let mut parts = s.trim().split(':');
        let head = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let num = |a: &str| a.parse::<u64>().map_err(|_| unsupported());
        let stat = match (head, args.as_slice()) {
            ("line", []) => Statistic::Line,
            ("stack", []) => Statistic::Stack,
            ("wave", []) => Statistic::Wave,
            ("short_edges", [len]) => Statistic::ShortEdges {
                len: num(len)? as u32,
            },
            ("twins", [r]) => Statistic::Twins {
                r: num(r)? as usize,
                method: TwinMethod::Block(MatchingStrategy::Greedy),
            },
            ("twins", [r, method]) => Statistic::Twins {
                r: num(r)? as usize,
                method: method.parse()?,
            },
            _ => return Err(unsupported()),
        };
        Ok(stat)
    }
}

impl TryFrom<String> for Statistic {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Statistic> for String {
    fn from(s: Statistic) -> String {
        s.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub samples: usize,
    #[serde(default)]
    pub scheme: Scheme,
    pub statistics: Vec<Statistic>,
    #[serde(default)]
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(Error::InvalidParameter("samples must be at least 1".into()));
        }
        if self.statistics.is_empty() {
            return Err(Error::InvalidParameter("no statistics requested".into()));
        }
        self.statistics.iter().try_for_each(|s| s.validate(self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatSummary {
    pub name: String,
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator; 0 for one sample).
    pub sd: f64,
    pub min: f64,
    pub q05: f64,
    pub q50: f64,
    pub q95: f64,
    pub max: f64,
    /// Per-sample values in sample order.
    #[serde(skip)]
    pub values: Vec<f64>,
}

/// Linear interpolation between closest ranks.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

impl StatSummary {
    pub fn from_values(name: String, values: Vec<f64>) -> Self {
        assert!(!values.is_empty());
        let k = values.len() as f64;
        let mean = values.iter().sum::<f64>() / k;
        let sd = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
        } else {
            0.0
        };
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        StatSummary {
            name,
            mean,
            sd,
            min: sorted[0],
            q05: quantile(&sorted, 0.05),
            q50: quantile(&sorted, 0.5),
            q95: quantile(&sorted, 0.95),
            max: sorted[sorted.len() - 1],
            values,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsReport {
    pub schema: &'static str,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub scheme: Scheme,
    pub rng: &'static str,
    pub statistics: Vec<StatSummary>,
}

impl StatsReport {
    pub fn get(&self, name: &str) -> Option<&StatSummary> {
        self.statistics.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per statistic, with the run parameters repeated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("statistic,n,samples,seed,scheme,mean,sd,min,q05,q50,q95,max\n");
        for s in &self.statistics {
            out += &format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                s.name,
                self.n,
                self.samples,
                self.seed,
                self.scheme.name(),
                s.mean,
                s.sd,
                s.min,
                s.q05,
                s.q50,
                s.q95,
                s.max
            );
        }
        out
    }
}

/// Draws `samples` matchings (sample `i` from sub-stream `i` of the seed)
/// and summarizes every requested statistic. Samples run in parallel;
/// results are identical to a serial run.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<StatsReport> {
    cfg.validate()?;
    let seed = Seed(cfg.seed);
    let rows: Vec<Vec<f64>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let m = cfg.scheme.sample(cfg.n, &mut seed.substream(i as u64));
            cfg.statistics.iter().map(|s| s.evaluate(&m)).collect()
        })
        .collect::<Result<_>>()?;
    let statistics = cfg
        .statistics
        .iter()
        .enumerate()
        .map(|(k, s)| StatSummary::from_values(s.name(), rows.iter().map(|r| r[k]).collect()))
        .collect();
    Ok(StatsReport {
        schema: crate::SCHEMA,
        n: cfg.n,
        samples: cfg.samples,
        seed: cfg.seed,
        scheme: cfg.scheme,
        rng: RNG_ID,
        statistics,
    })
}
