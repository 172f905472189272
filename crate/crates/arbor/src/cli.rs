//! Command-line surface: every table, statistic and check is one verb away.
//!
//! Machine-first output: JSON or CSV on stdout, one-line diagnostics on
//! stderr. Exit codes: 0 success, 1 domain/parse error, 2 budget
//! exhaustion, 3 a `check` run found a violated conjecture.

use clap::{Args, Parser, Subcommand};
use std::io::Read as _;

use crate::asymptotics;
use crate::closed_form;
use crate::conjectures;
use crate::enumerate::{self, DEFAULT_WORK_BUDGET};
use crate::error::{ArborError, Result};
use crate::graph::{build_family, Family, Graph};
use crate::num::dec_sig;
use crate::poly::SubtreePolynomial;
use crate::sampler::{self, Measure, SampleSpec};
use crate::stats;

#[derive(Parser)]
#[command(name = "arbor", version, about = "Exact subtree statistics of graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Worker threads for parallelizable computations
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Enumeration work budget (extension steps)
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Human-readable output instead of machine-first JSON/CSV
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args)]
struct Target {
    /// Graph family: complete | bipartite | cycle | theta
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file ("-" for stdin); first line "n m", then "u v" lines
    #[arg(long)]
    graph: Option<String>,
    /// n for complete/cycle; second side for bipartite
    #[arg(long)]
    n: Option<u64>,
    /// First side for bipartite
    #[arg(long)]
    m: Option<u64>,
    /// First theta path parameter
    #[arg(long)]
    a: Option<u64>,
    /// Second theta path parameter
    #[arg(long)]
    b: Option<u64>,
}

enum ResolvedTarget {
    Family(Family, Vec<u64>),
    File(Graph),
}

impl Target {
    fn resolve(&self) -> Result<ResolvedTarget> {
        match (&self.family, &self.graph) {
            (Some(_), Some(_)) | (None, None) => Err(ArborError::domain(
                "give exactly one of --family or --graph",
            )),
            (None, Some(path)) => {
                let text = if path == "-" {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| ArborError::domain(format!("reading stdin: {}", e)))?;
                    s
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| ArborError::domain(format!("reading {}: {}", path, e)))?
                };
                Ok(ResolvedTarget::File(Graph::parse(&text)?))
            }
            (Some(f), None) => {
                let need = |v: Option<u64>, name: &str| {
                    v.ok_or_else(|| {
                        ArborError::domain(format!("family {} requires --{}", f, name))
                    })
                };
                match f.as_str() {
                    "complete" => Ok(ResolvedTarget::Family(
                        Family::Complete,
                        vec![need(self.n, "n")?],
                    )),
                    "bipartite" => Ok(ResolvedTarget::Family(
                        Family::CompleteBipartite,
                        vec![need(self.m, "m")?, need(self.n, "n")?],
                    )),
                    "cycle" => Ok(ResolvedTarget::Family(
                        Family::Cycle,
                        vec![need(self.n, "n")?],
                    )),
                    "theta" => Ok(ResolvedTarget::Family(
                        Family::Theta,
                        vec![need(self.a, "a")?, need(self.b, "b")?],
                    )),
                    other => Err(ArborError::domain(format!(
                        "unknown family '{}'; known: complete, bipartite, cycle, theta",
                        other
                    ))),
                }
            }
        }
    }

    fn descriptor(&self) -> String {
        match (&self.family, &self.graph) {
            (Some(f), _) => f.clone(),
            (_, Some(p)) => p.clone(),
            _ => "?".into(),
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Exact global statistics (p, q, mu_p, mu_q) as JSON
    Stats {
        #[command(flatten)]
        target: Target,
        /// Also report the (n-2)-edge subtree statistics (complete only)
        #[arg(long)]
        near_spanning: bool,
    },
    /// Convergence table for K_n as CSV
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 10)]
        step: u64,
    },
    /// Subtree polynomial coefficients as a JSON array of decimal strings
    Poly {
        #[command(flatten)]
        target: Target,
        /// Stop the census at this many edges
        #[arg(long)]
        max_edges: Option<usize>,
        /// Set the constant term a_0 = n
        #[arg(long)]
        with_vertex_term: bool,
    },
    /// Local statistics of K_n at a fixed edge
    Local {
        #[arg(long)]
        n: u64,
    },
    /// Certified bound checks for the complete-graph lemmas, JSON lines
    Bounds {
        #[arg(long, default_value_t = 4)]
        from: u64,
        #[arg(long, default_value_t = 150)]
        to: u64,
    },
    /// Seeded random subtree draws; JSON header then one line per draw
    Sample {
        #[command(flatten)]
        target: Target,
        /// uniform | weighted
        #[arg(long, default_value = "uniform")]
        measure: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run a conjecture check; exits 3 when a violation is found
    Check {
        /// unimodal | monotonic | pq_identity | all | theta_mode
        name: String,
        #[command(flatten)]
        target: Target,
        /// Sweep all connected labeled graphs up to this many vertices
        #[arg(long)]
        max_n: Option<u64>,
        /// Deduplicate isomorphic graphs during a sweep
        #[arg(long)]
        dedup: bool,
        /// Check a raw comma-separated coefficient vector (unimodal only)
        #[arg(long)]
        coeffs: Option<String>,
        /// Density for the monotonicity check: uniform | weighted
        #[arg(long, default_value = "uniform")]
        density: String,
        /// Range for theta_mode
        #[arg(long, default_value_t = 4)]
        from: u64,
        #[arg(long, default_value_t = 8)]
        to: u64,
    },
    /// Certified enclosures of the limit constants
    Constants,
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let budget = cli.budget.unwrap_or(DEFAULT_WORK_BUDGET);
    match dispatch(&cli.verb, budget, cli.pretty) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("arbor: {}", e);
            e.exit_code()
        }
    }
}

fn family_counts(family: Family, params: &[u64]) -> Result<Option<(Vec<crate::num::Natural>, u64)>> {
    Ok(match family {
        Family::Complete => {
            let n = params[0];
            Some((closed_form::complete_counts(n)?.counts, n))
        }
        Family::CompleteBipartite => {
            let (m, n) = (params[0], params[1]);
            Some((closed_form::bipartite_counts(m, n)?.counts, m + n))
        }
        Family::Cycle => {
            let n = params[0];
            Some((closed_form::cycle_counts(n)?.counts, n))
        }
        Family::Theta => None,
    })
}

fn target_polynomial(
    target: &Target,
    max_edges: Option<usize>,
    budget: u64,
) -> Result<SubtreePolynomial> {
    match target.resolve()? {
        ResolvedTarget::Family(family, params) => match family_counts(family, &params)? {
            Some((counts, n)) => {
                let counts = match max_edges {
                    Some(k) if k < counts.len() => counts[..k].to_vec(),
                    _ => counts,
                };
                Ok(SubtreePolynomial::from_counts(&counts, n as u32))
            }
            None => {
                let g = build_family(family, &params)?;
                enumerate::subtree_polynomial(&g, max_edges, budget)
            }
        },
        ResolvedTarget::File(g) => enumerate::subtree_polynomial(&g, max_edges, budget),
    }
}

fn dispatch(verb: &Verb, budget: u64, pretty: bool) -> Result<i32> {
    match verb {
        Verb::Stats {
            target,
            near_spanning,
        } => {
            if *near_spanning {
                let n = match target.resolve()? {
                    ResolvedTarget::Family(Family::Complete, params) => params[0],
                    _ => {
                        return Err(ArborError::domain(
                            "--near-spanning applies to --family complete only",
                        ))
                    }
                };
                let s = asymptotics::near_spanning_stats(n)?;
                println!("{}", s.to_json());
                return Ok(0);
            }
            let poly = target_polynomial(target, None, budget)?;
            let report = stats::global_stats_from_polynomial(&poly)?;
            if pretty {
                for (name, v) in [
                    ("p", &report.p),
                    ("q", &report.q),
                    ("mu_p", &report.mu_p),
                    ("mu_q", &report.mu_q),
                ] {
                    println!("{:>5} = {}/{} = {}", name, v.numer(), v.denom(), dec_sig(v, 6));
                }
            } else {
                println!("{}", report.to_json());
            }
            Ok(0)
        }
        Verb::Table { from, to, step } => {
            if *step == 0 {
                return Err(ArborError::domain("--step must be positive"));
            }
            let ns: Vec<u64> = (*from..=*to).step_by(*step as usize).collect();
            let rows = asymptotics::convergence_table(&ns)?;
            let csv = asymptotics::table_to_csv(&rows);
            if pretty {
                for line in csv.lines() {
                    println!("{}", line.replace(',', "\t"));
                }
            } else {
                print!("{}", csv);
            }
            Ok(0)
        }
        Verb::Poly {
            target,
            max_edges,
            with_vertex_term,
        } => {
            let mut poly = target_polynomial(target, *max_edges, budget)?;
            if *with_vertex_term {
                poly = poly.with_vertex_term();
            }
            println!("{}", poly.to_json());
            Ok(0)
        }
        Verb::Local { n } => {
            let report = stats::local_stats_complete(*n)?;
            println!("{}", report.to_json());
            Ok(0)
        }
        Verb::Bounds { from, to } => {
            for n in *from..=*to {
                let b = asymptotics::verify_b_lower_bound(n)?;
                println!("{}", b.to_json("b_lower_bound"));
                let a = asymptotics::verify_a_sandwich(n)?;
                println!("{}", a.to_json("a_sandwich"));
            }
            Ok(0)
        }
        Verb::Sample {
            target,
            measure,
            seed,
            count,
        } => {
            let measure = match measure.as_str() {
                "uniform" => Measure::Uniform,
                "weighted" => Measure::Weighted,
                other => {
                    return Err(ArborError::domain(format!(
                        "unknown measure '{}'; use uniform or weighted",
                        other
                    )))
                }
            };
            let spec = SampleSpec {
                measure,
                seed: *seed,
                count: *count,
            };
            let (draws, n) = match target.resolve()? {
                ResolvedTarget::Family(Family::Complete, params) => {
                    (sampler::sample_complete(params[0], &spec)?, params[0])
                }
                ResolvedTarget::Family(family, params) => {
                    let g = build_family(family, &params)?;
                    let n = g.vertex_count() as u64;
                    (sampler::sample_generic(&g, &spec, budget)?, n)
                }
                ResolvedTarget::File(g) => {
                    let n = g.vertex_count() as u64;
                    (sampler::sample_generic(&g, &spec, budget)?, n)
                }
            };
            print!("{}", sampler::draw_log(&target.descriptor(), n, &spec, &draws));
            Ok(0)
        }
        Verb::Check {
            name,
            target,
            max_n,
            dedup,
            coeffs,
            density,
            from,
            to,
        } => run_check(
            name, target, *max_n, *dedup, coeffs.as_deref(), density, *from, *to, budget,
        ),
        Verb::Constants => {
            for c in asymptotics::limit_constants() {
                if pretty {
                    println!("{:>20} = {}", c.name.id(), c.decimal());
                } else {
                    println!("{}", c.to_json());
                }
            }
            Ok(0)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    name: &str,
    target: &Target,
    max_n: Option<u64>,
    dedup: bool,
    coeffs: Option<&str>,
    density: &str,
    from: u64,
    to: u64,
    budget: u64,
) -> Result<i32> {
    if name == "theta_mode" {
        let ns: Vec<u64> = (from..=to).collect();
        let trend = conjectures::theta_mode_trend(&ns, budget)?;
        for r in &trend.rows {
            println!(
                "{}",
                serde_json::json!({ "n": r.n, "mode": r.mode, "ratio": format!("{:.6}", r.ratio) })
            );
        }
        if let Some(n) = trend.truncated_at {
            println!("{}", serde_json::json!({ "truncated_at": n }));
        }
        return Ok(0);
    }

    if let Some(list) = coeffs {
        if name != "unimodal" {
            return Err(ArborError::domain("--coeffs applies to the unimodal check only"));
        }
        let counts: Vec<crate::num::Natural> = list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<crate::num::Natural>()
                    .map_err(|_| ArborError::domain(format!("bad coefficient '{}'", s)))
            })
            .collect::<Result<_>>()?;
        let v = conjectures::check_unimodal_counts(&counts);
        println!("{}", v.to_json());
        return Ok(if v.holds { 0 } else { 3 });
    }

    let ids: Vec<&str> = if name == "all" {
        vec!["unimodal", "monotonic", "pq_identity"]
    } else {
        conjectures::lookup_check(name)?;
        vec![name]
    };

    if let Some(max_n) = max_n {
        let summary = conjectures::search_small_graphs(
            max_n,
            &ids,
            dedup,
            budget,
            conjectures::DEFAULT_SEARCH_CAP,
        )?;
        for v in &summary.violations {
            println!("{}", v.to_json());
        }
        println!(
            "{}",
            serde_json::json!({
                "graphs_checked": summary.graphs_checked,
                "verdicts": summary.verdicts_total,
                "violations": summary.violations.len(),
            })
        );
        return Ok(if summary.violations.is_empty() { 0 } else { 3 });
    }

    let g = match target.resolve()? {
        ResolvedTarget::Family(family, params) => build_family(family, &params)?,
        ResolvedTarget::File(g) => g,
    };
    let mut any_violation = false;
    for id in ids {
        let verdicts = if id == "monotonic" {
            let kind = match density {
                "uniform" => conjectures::DensityKind::Uniform,
                "weighted" => conjectures::DensityKind::Weighted,
                other => {
                    return Err(ArborError::domain(format!(
                        "unknown density '{}'; use uniform or weighted",
                        other
                    )))
                }
            };
            conjectures::check_monotonicity(&g, kind, budget)?
        } else {
            conjectures::lookup_check(id)?.run(&g, budget)?
        };
        for v in verdicts {
            any_violation |= !v.holds;
            println!("{}", v.to_json());
        }
    }
    Ok(if any_violation { 3 } else { 0 })
}
