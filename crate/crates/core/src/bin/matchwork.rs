use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use matchwork::constructions::{
    from_permutation, make_line, make_stack, make_wave, stacked_waves, triple_optimality_16,
    Permutation,
};
use matchwork::matching::{parse_any, AnyMatching, Relation, TripleRelation};
use matchwork::patterns::{
    es_witness, es_witness_triples, largest_homogeneous_triples, largest_line, largest_semi_line,
    largest_stack, largest_wave, EsParams, TripleEsParams,
};
use matchwork::random::{
    enumerate_all, run_experiment, sample_uniform_triples, ExperimentConfig, Scheme, Seed,
    Statistic, TwinMethod,
};
use matchwork::twins::{
    block_twins, default_split_m, exact_twins, split_twins, BlockTwinParams, HybridPermFinder,
    MatchingStrategy,
};
use matchwork::{classify_pair, Error, Matching, TripleMatching};

#[derive(Parser)]
#[command(
    name = "matchwork",
    version,
    about = "Ordered matchings: patterns, random samples, twins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordFormat {
    Word,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Uniform,
    Permutation,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Uniform => Scheme::Uniform,
            SchemeArg::Permutation => Scheme::Permutation,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TwinMethodArg {
    Exact,
    Block,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Greedy,
    Exact,
}

impl From<StrategyArg> for MatchingStrategy {
    fn from(s: StrategyArg) -> MatchingStrategy {
        match s {
            StrategyArg::Greedy => MatchingStrategy::Greedy,
            StrategyArg::Exact => MatchingStrategy::Exact,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Largest line/stack/wave and relation census of a matching
    /// (or the ten triple maxima for arity 3).
    Analyze {
        /// A word, `-` for stdin, or a path to a word or JSON file.
        input: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        arity: u8,
        /// Erdős–Szekeres witness for `l,s,w`.
        #[arg(long, value_name = "L,S,W")]
        es: Option<String>,
        /// Triple witness: one value for all nine parameters, or nine values
        /// row by row (rows and columns ordered line, stack, wave).
        #[arg(long, value_name = "A")]
        es_triples: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print a canonical or extremal matching.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        #[arg(long, value_enum, default_value = "word", global = true)]
        format: WordFormat,
    },
    /// Draw random matchings.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "MATCHWORK_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "uniform")]
        scheme: SchemeArg,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        arity: u8,
        #[arg(long, value_enum, default_value = "word")]
        format: WordFormat,
    },
    /// List every matching of size n (n at most 8).
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Monte Carlo statistics over random matchings.
    Experiment {
        /// JSON config; explicit flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Comma-separated: line, stack, wave, short_edges:LEN, twins:R[:METHOD].
        #[arg(long)]
        stats: Option<String>,
        #[arg(long, env = "MATCHWORK_SEED")]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        scheme: Option<SchemeArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// r-twins of one matching, or twin-size statistics over random ones.
    Twins {
        /// A word, `-` for stdin, or a file; omit to sample with --n.
        input: Option<String>,
        #[arg(long, value_enum, default_value = "block")]
        method: TwinMethodArg,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: StrategyArg,
        /// Across-edge threshold of the split method (default ⌈n/4⌉, parity-adjusted).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, env = "MATCHWORK_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    Line {
        n: usize,
    },
    Stack {
        n: usize,
    },
    Wave {
        n: usize,
    },
    StackedWaves {
        l: u64,
        s: u64,
        w: u64,
    },
    /// Values of a permutation of 1..n, space or comma separated.
    Permutation {
        #[arg(required = true, value_delimiter = ',')]
        values: Vec<u32>,
    },
    /// The sixteen-triple 3-uniform extremal example.
    #[command(name = "triple-16")]
    Triple16,
}

/// Error carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Analyze {
            input,
            arity,
            es,
            es_triples,
            format,
        } => analyze(&read_input(&input)?, arity as usize, es, es_triples, format),
        Command::Construct { kind, format } => construct(kind, format),
        Command::Sample {
            n,
            seed,
            scheme,
            count,
            arity,
            format,
        } => sample(n, Seed(seed), scheme.into(), count, arity, format),
        Command::Enumerate { n } => {
            let mut out = String::new();
            for m in enumerate_all(n)? {
                out += &m.to_word();
                out.push('\n');
            }
            Ok(out)
        }
        Command::Experiment {
            config,
            n,
            samples,
            stats,
            seed,
            scheme,
            format,
            output,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)?;
                    serde_json::from_str::<ExperimentConfig>(&text)
                        .map_err(|e| usage(format!("bad config {}: {e}", path.display())))?
                }
                None => ExperimentConfig {
                    n: n.ok_or_else(|| usage("--n is required without --config"))?,
                    samples: 100,
                    scheme: Scheme::Uniform,
                    statistics: vec![Statistic::Line, Statistic::Stack, Statistic::Wave],
                    seed: 0,
                },
            };
            if let Some(n) = n {
                cfg.n = n;
            }
            if let Some(s) = samples {
                cfg.samples = s;
            }
            if let Some(s) = stats {
                cfg.statistics = parse_stats(&s)?;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(s) = scheme {
                cfg.scheme = s.into();
            }
            let report = run_experiment(&cfg)?;
            let text = match format {
                ReportFormat::Json => report.to_json() + "\n",
                ReportFormat::Csv => report.to_csv(),
            };
            match output {
                Some(path) => {
                    std::fs::write(path, text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Twins {
            input,
            method,
            r,
            strategy,
            m,
            n,
            samples,
            seed,
            format,
        } => twins(
            input,
            method,
            r,
            strategy.into(),
            m,
            n,
            samples,
            seed,
            format,
        ),
    }
}

fn parse_stats(s: &str) -> Result<Vec<Statistic>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse::<Statistic>().map_err(Failure::from))
        .collect()
}

/// `-` reads stdin; an existing path is read; anything else is the text itself.
fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if std::path::Path::new(arg).is_file() {
        Ok(std::fs::read_to_string(arg)?)
    } else {
        Ok(arg.to_string())
    }
}

fn parse_input(text: &str, arity: usize) -> Result<AnyMatching, Failure> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let bad = |e: serde_json::Error| usage(format!("invalid matching JSON: {e}"));
        return Ok(if arity == 3 {
            AnyMatching::Triples(serde_json::from_str::<TripleMatching>(trimmed).map_err(bad)?)
        } else {
            AnyMatching::Graph(serde_json::from_str::<Matching>(trimmed).map_err(bad)?)
        });
    }
    Ok(parse_any(trimmed, arity)?)
}

fn parse_numbers(s: &str, what: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| {
                usage(format!(
                    "{what}: expected comma-separated positive integers"
                ))
            })
        })
        .collect()
}

fn analyze(
    text: &str,
    arity: usize,
    es: Option<String>,
    es_triples: Option<String>,
    format: TextFormat,
) -> CmdResult {
    match parse_input(text, arity)? {
        AnyMatching::Graph(m) => analyze_graph(&m, es, format),
        AnyMatching::Triples(m) => analyze_triples(&m, es_triples, format),
    }
}

fn analyze_graph(m: &Matching, es: Option<String>, format: TextFormat) -> CmdResult {
    let (line, stack, wave) = (largest_line(m), largest_stack(m), largest_wave(m));
    let mut census = [0usize; 3];
    let edges = m.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            census[classify_pair(e, f)? as usize] += 1;
        }
    }
    let witness = match es {
        Some(arg) => {
            let v = parse_numbers(&arg, "--es")?;
            let [l, s, w] = v[..] else {
                return Err(usage("--es expects three values l,s,w"));
            };
            Some(es_witness(m, EsParams::new(l, s, w)?)?)
        }
        None => None,
    };
    Ok(match format {
        TextFormat::Json => {
            let mut v = json!({
                "schema": matchwork::SCHEMA,
                "n": m.len(),
                "line": line.size(),
                "stack": stack.size(),
                "wave": wave.size(),
                "census": {
                    "alignment": census[Relation::Alignment as usize],
                    "nesting": census[Relation::Nesting as usize],
                    "crossing": census[Relation::Crossing as usize],
                },
            });
            if let Some(w) = &witness {
                v["es_witness"] = w.to_json();
            }
            format!("{v:#}\n")
        }
        TextFormat::Text => {
            let mut out = format!(
                "n={}\nline={} stack={} wave={}\nalignment={} nesting={} crossing={}\n",
                m.len(),
                line.size(),
                stack.size(),
                wave.size(),
                census[Relation::Alignment as usize],
                census[Relation::Nesting as usize],
                census[Relation::Crossing as usize],
            );
            if let Some(w) = witness {
                out += &format!(
                    "es_witness={} size={} word={}\n",
                    w.kind,
                    w.size(),
                    w.sub.to_word()
                );
            }
            out
        }
    })
}

fn analyze_triples(m: &TripleMatching, es: Option<String>, format: TextFormat) -> CmdResult {
    let maxima: Vec<(TripleRelation, usize)> = TripleRelation::ALL
        .iter()
        .map(|&r| (r, largest_homogeneous_triples(m, r).size()))
        .collect();
    let semi = largest_semi_line(m).size();
    let witness = match es {
        Some(arg) => {
            let v = parse_numbers(&arg, "--es-triples")?;
            let a = match v.len() {
                1 => [[v[0]; 3]; 3],
                9 => [[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]],
                _ => return Err(usage("--es-triples expects 1 or 9 values")),
            };
            Some(es_witness_triples(m, TripleEsParams::new(a)?)?)
        }
        None => None,
    };
    Ok(match format {
        TextFormat::Json => {
            let mut v = json!({
                "schema": matchwork::SCHEMA,
                "n": m.len(),
                "maxima": maxima.iter().map(|(r, k)| json!({"relation": r.word(), "key": r.key(), "size": k})).collect::<Vec<_>>(),
                "semi_line": semi,
            });
            if let Some(w) = &witness {
                v["es_witness"] = w.to_json();
            }
            format!("{v:#}\n")
        }
        TextFormat::Text => {
            let mut out = format!("n={}\n", m.len());
            for (r, k) in &maxima {
                out += &format!("{} {}={}\n", r.word(), r.key(), k);
            }
            out += &format!("semi-line={semi}\n");
            if let Some(w) = witness {
                out += &format!(
                    "es_witness={} size={} word={}\n",
                    w.kind.name(),
                    w.size(),
                    w.sub.to_word()
                );
            }
            out
        }
    })
}

fn construct(kind: ConstructKind, format: WordFormat) -> CmdResult {
    let m = match kind {
        ConstructKind::Line { n } => make_line(n),
        ConstructKind::Stack { n } => make_stack(n),
        ConstructKind::Wave { n } => make_wave(n),
        ConstructKind::StackedWaves { l, s, w } => stacked_waves(EsParams::new(l, s, w)?),
        ConstructKind::Permutation { values } => from_permutation(&Permutation::new(values)?),
        ConstructKind::Triple16 => {
            let t = triple_optimality_16();
            return Ok(match format {
                WordFormat::Word => t.to_word(),
                WordFormat::Json => t.to_json(),
            } + "\n");
        }
    };
    Ok(match format {
        WordFormat::Word => m.to_word(),
        WordFormat::Json => m.to_json(),
    } + "\n")
}

fn sample(
    n: usize,
    seed: Seed,
    scheme: Scheme,
    count: usize,
    arity: u8,
    format: WordFormat,
) -> CmdResult {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let mut out = String::new();
    for i in 0..count {
        let mut rng = seed.substream(i as u64);
        let line = if arity == 3 {
            let t = sample_uniform_triples(n, &mut rng);
            match format {
                WordFormat::Word => t.to_word(),
                WordFormat::Json => t.to_json(),
            }
        } else {
            let m = scheme.sample(n, &mut rng);
            match format {
                WordFormat::Word => m.to_word(),
                WordFormat::Json => m.to_json(),
            }
        };
        out += &line;
        out.push('\n');
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn twins(
    input: Option<String>,
    method: TwinMethodArg,
    r: usize,
    strategy: MatchingStrategy,
    m: Option<usize>,
    n: Option<usize>,
    samples: usize,
    seed: u64,
    format: TextFormat,
) -> CmdResult {
    if let Some(input) = input {
        let AnyMatching::Graph(host) = parse_input(&read_input(&input)?, 2)? else {
            unreachable!("arity 2 yields a graph matching");
        };
        let (t, name) = match method {
            TwinMethodArg::Exact => (exact_twins(&host, r)?, "exact"),
            TwinMethodArg::Block => {
                let p = BlockTwinParams::default_for(host.len(), r)?.with_strategy(strategy);
                (block_twins(&host, &p)?, TwinMethod::Block(strategy).name())
            }
            TwinMethodArg::Split => {
                let m = m.unwrap_or_else(|| default_split_m(host.len()));
                (
                    split_twins(&host, r, m, &HybridPermFinder::default())?,
                    "split",
                )
            }
        };
        return Ok(match format {
            TextFormat::Json => format!("{:#}\n", t.to_json(&host, name)),
            TextFormat::Text => {
                let mut out = format!("method={name} r={r} size={}\n", t.size());
                for s in &t.subs {
                    out += &host.sub(s)?.normalized().to_word();
                    out.push('\n');
                }
                out
            }
        });
    }

    let n = n.ok_or_else(|| usage("give an input matching or --n"))?;
    let method = match method {
        TwinMethodArg::Exact => TwinMethod::Exact,
        TwinMethodArg::Block => TwinMethod::Block(strategy),
        TwinMethodArg::Split => TwinMethod::Split,
    };
    let cfg = ExperimentConfig {
        n,
        samples,
        scheme: Scheme::Uniform,
        statistics: vec![Statistic::Twins { r, method }],
        seed,
    };
    let report = run_experiment(&cfg)?;
    Ok(match format {
        TextFormat::Json => report.to_json() + "\n",
        TextFormat::Text => {
            let s = &report.statistics[0];
            format!(
                "method={} r={r} n={n} samples={samples} seed={seed}\nmean={:.3} sd={:.3} min={} max={}\n",
                method.name(),
                s.mean,
                s.sd,
                s.min,
                s.max
            )
        }
    })
}
