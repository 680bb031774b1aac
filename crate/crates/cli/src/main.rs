//! Command-line front end: generate and augment graphs, run the exact
//! checkers, partition and regularity tools, and Monte Carlo sweeps.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dense_augment::augment::Augmenter;
use dense_augment::checkers::{
    chromatic_number_within, clique_number_within, contains_kr_within, count_kr_within, diameter, diameter_at_most,
    is_k_connected_within, max_subgraph_density, vertex_connectivity_within, Budget, DEFAULT_CHROMATIC_CAP,
};
use dense_augment::generators::GeneratorSpec;
use dense_augment::graph::{read_edge_list, write_edge_list};
use dense_augment::harness::{preset_names, theorem_preset, PresetParams, Sweep, SweepConfig};
use dense_augment::partition::{dense_partition, verify_partition};
use dense_augment::regularity::{analyze_pair, RegularityParams};
use dense_augment::{DensityParam, Graph, SeedSpec, VertexSet};

#[derive(Parser)]
#[command(name = "dense-augment", version, about = "Random edge augmentation of dense graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a named family and write it as an edge list.
    Generate {
        /// Family name, e.g. `two_cliques`, `blocked_gnp`, `turan`.
        family: String,
        /// Family parameters as `key=value`, e.g. `n=200 d=0.15`.
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Add random non-edges to a base graph.
    Augment {
        #[command(flatten)]
        source: Source,
        /// Optional; must agree with whichever of --m / --p is given.
        #[arg(long, value_parser = ["uniform", "bernoulli"])]
        model: Option<String>,
        /// Number of uniformly random non-edges to add.
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        m: Option<usize>,
        /// Add each non-edge independently with this probability.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also write the added edges and seed as JSON.
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Evaluate one property exactly and print the result as JSON.
    Check {
        #[command(flatten)]
        source: Source,
        /// One of `clique:R`, `cliquenum`, `cliquecount:R`, `diam`, `diam:D`,
        /// `kconn:K`, `kappa`, `connected`, `chi`, `density`.
        #[arg(long)]
        property: String,
        /// Abort the search after this many milliseconds (exit code 1).
        #[arg(long)]
        timeout_ms: Option<u64>,
    },
    /// Partition a graph of minimum degree k into highly connected parts.
    Partition {
        #[command(flatten)]
        source: Source,
        /// Defaults to the minimum degree.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive regularity check of a vertex pair plus tuple counts.
    Regcheck {
        #[command(flatten)]
        source: Source,
        /// First side, e.g. `0-9` or `0,2,4-6`.
        #[arg(long = "a", alias = "A")]
        a: String,
        #[arg(long = "b", alias = "B")]
        b: String,
        #[arg(long)]
        eps: DensityParam,
        #[arg(long)]
        delta: DensityParam,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Run a sweep described by a JSON config.
    Sweep {
        config: PathBuf,
        /// Replaces the config's master seed (stream 0).
        #[arg(long)]
        seed: Option<u64>,
        /// CSV destination; overrides the config. Without either, the CSV goes to stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Print (or run) a threshold preset.
    Preset {
        /// One of thm2, thm3, thm4a, thm4b, thm5, thm6.
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<DensityParam>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        r0: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the sweep instead of printing the preset.
        #[arg(long)]
        run: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// Input graph: an edge-list file, or a family with `key=value` parameters.
#[derive(Args)]
struct Source {
    #[arg(long, short, conflicts_with = "generator")]
    input: Option<PathBuf>,
    /// Generator words such as `family=two_cliques n=40`.
    #[arg(long = "gen", num_args = 1.., value_name = "KEY=VALUE")]
    generator: Vec<String>,
    /// Seed for seeded families and random draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Source {
    fn load(&self) -> Result<Graph> {
        match &self.input {
            Some(path) => read_graph(path),
            None if !self.generator.is_empty() => {
                let spec = GeneratorSpec::from_key_values(&self.generator)?;
                Ok(spec.build(SeedSpec::from_seed(self.seed))?)
            }
            None => bail!("give either --input FILE or --gen family=... key=value ..."),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_edge_list(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn write_output(out: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
            write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn print_json(value: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    writeln!(std::io::stdout().lock(), "{text}")
}

/// Parses `0-9,12,15-17` into a vertex set on `n` vertices.
fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut ids = Vec::new();
    for piece in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match piece.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi): (usize, usize) = (lo.trim().parse()?, hi.trim().parse()?);
                if lo > hi {
                    bail!("empty range `{piece}`");
                }
                ids.extend(lo..=hi);
            }
            None => ids.push(piece.parse().with_context(|| format!("bad vertex `{piece}`"))?),
        }
    }
    Ok(VertexSet::new(ids, n)?)
}

fn check(g: &Graph, property: &str, budget: &Budget) -> Result<Value> {
    let (name, arg) = match property.split_once(':') {
        Some((name, arg)) => (
            name,
            Some(arg.parse::<usize>().with_context(|| format!("bad argument `{arg}`"))?),
        ),
        None => (property, None),
    };
    let need = |what: &str| arg.with_context(|| format!("`{name}` needs an argument, e.g. `{name}:{what}`"));
    Ok(match name {
        "clique" => {
            let r = need("4")?;
            json!({ "property": format!("contains K_{r}"), "verdict": contains_kr_within(g, r, budget)? })
        }
        "cliquenum" => {
            let c = clique_number_within(g, budget)?;
            json!({ "clique_number": c.size, "clique": c.vertices })
        }
        "cliquecount" => {
            let r = need("3")?;
            json!({ "r": r, "count": count_kr_within(g, r, budget)? })
        }
        "diam" => match arg {
            Some(d) => json!({ "property": format!("diam <= {d}"), "verdict": diameter_at_most(g, d)? }),
            None => json!({ "diameter": diameter(g)? }),
        },
        "kconn" => {
            let k = need("2")?;
            json!({ "property": format!("{k}-connected"), "verdict": is_k_connected_within(g, k, budget)? })
        }
        "connected" => json!({ "property": "connected", "verdict": is_k_connected_within(g, 1, budget)? }),
        "kappa" => json!({ "vertex_connectivity": vertex_connectivity_within(g, budget)? }),
        "chi" => {
            let c = chromatic_number_within(g, DEFAULT_CHROMATIC_CAP, budget)?;
            json!({ "chromatic_number": c.chromatic_number, "coloring": c.colors })
        }
        "density" => json!(max_subgraph_density(g)?),
        other => bail!("unknown property `{other}`"),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate {
            family,
            params,
            seed,
            out,
        } => {
            let mut words = vec![format!("family={family}")];
            words.extend(params);
            let g = GeneratorSpec::from_key_values(&words)?.build(SeedSpec::from_seed(seed))?;
            write_output(out.as_deref(), |w| write_edge_list(&g, w))?;
        }
        Command::Augment {
            source,
            model,
            m,
            p,
            out,
            record,
        } => {
            let h = source.load()?;
            let aug = Augmenter::new(&h);
            let seed = SeedSpec::from_seed(source.seed);
            match (model.as_deref(), m.is_some()) {
                (Some("uniform"), false) => bail!("--model uniform needs --m"),
                (Some("bernoulli"), true) => bail!("--model bernoulli needs --p"),
                _ => {}
            }
            let result = match (m, p) {
                (Some(m), _) => aug.uniform(m, seed)?,
                (None, Some(p)) => aug.bernoulli(p, seed)?,
                (None, None) => bail!("give --m or --p"),
            };
            write_output(out.as_deref(), |w| write_edge_list(&result.graph, w))?;
            if let Some(path) = record {
                std::fs::write(&path, serde_json::to_string_pretty(&result)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Check {
            source,
            property,
            timeout_ms,
        } => {
            let g = source.load()?;
            let budget =
                timeout_ms.map_or_else(Budget::unlimited, |ms| Budget::with_timeout(Duration::from_millis(ms)));
            print_json(&check(&g, &property, &budget)?)?;
        }
        Command::Partition { source, k } => {
            let g = source.load()?;
            let k = match k {
                Some(k) => k,
                None => g.min_degree()?,
            };
            let result = dense_partition(&g, k)?;
            verify_partition(&g, &result)?;
            print_json(&json!(result))?;
        }
        Command::Regcheck {
            source,
            a,
            b,
            eps,
            delta,
            k,
        } => {
            let g = source.load()?;
            let (a, b) = (parse_vertex_set(&a, g.n())?, parse_vertex_set(&b, g.n())?);
            let params = RegularityParams::new(eps.value(), delta.value(), k)?;
            let report = analyze_pair(&g, &a, &b, &params)?;
            let bound = params.violation_bound(a.len());
            print_json(&json!({ "params": params, "violation_bound": bound.to_string(), "report": report }))?;
        }
        Command::Sweep { config, seed, out } => {
            let mut config = SweepConfig::load(&config)?;
            if let Some(seed) = seed {
                config.master_seed = SeedSpec::from_seed(seed);
            }
            if out.is_some() {
                config.output_path = out;
            }
            run_and_report(config)?;
        }
        Command::Preset {
            name,
            n,
            d,
            r,
            r0,
            k,
            trials,
            seed,
            run,
            out,
        } => {
            if !preset_names().contains(&name.as_str()) {
                bail!("unknown preset `{name}`; known presets: {}", preset_names().join(", "));
            }
            let params = PresetParams { n, d, r, r0, k };
            let mut preset = theorem_preset(&name, &params, SeedSpec::from_seed(seed), trials)?;
            if run {
                preset.config.output_path = out;
                eprintln!(
                    "reference m in [{:.2}, {:.2}]{}",
                    preset.reference.lower,
                    preset.reference.upper,
                    if preset.reference.upper_is_cap {
                        " (upper is a cap)"
                    } else {
                        ""
                    }
                );
                run_and_report(preset.config)?;
            } else {
                print_json(&json!(preset))?;
            }
        }
    }
    Ok(())
}

fn run_and_report(config: SweepConfig) -> Result<()> {
    let result = Sweep::new(config.clone())?.run()?;
    match &config.output_path {
        Some(path) => {
            let sidecar = result.write(path)?;
            eprintln!("wrote {} and {}", path.display(), sidecar.display());
        }
        None => std::io::stdout().lock().write_all(result.to_csv().as_bytes())?,
    }
    for p in &result.points {
        if p.indeterminate > 0 || p.infeasible > 0 {
            eprintln!(
                "m = {}: {} indeterminate, {} infeasible",
                p.value, p.indeterminate, p.infeasible
            );
        }
    }
    if !result.monotonicity_flags.is_empty() {
        eprintln!("monotonicity flagged at grid indices {:?}", result.monotonicity_flags);
    }
    match result.threshold() {
        Ok(t) => eprintln!("m_half = {:.3}, bracket [{}, {}]", t.m_half, t.bracket.0, t.bracket.1),
        Err(e) => eprintln!("{e}"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        let broken_pipe = e
            .downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
        if broken_pipe {
            return;
        }
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
