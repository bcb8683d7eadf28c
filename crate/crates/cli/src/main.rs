//! pncrit: construct, analyze, and verify endomorphisms of P^n over Q.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 validation error,
//! 3 resource cap hit, 4 irrational-data limitation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use pncrit::constructions::hyperplane::hyperplane_construction;
use pncrit::constructions::sympow::symmetric_power;
use pncrit::constructions::verify::{verify_minimal_branching, verify_roadmap_hypotheses};
use pncrit::constructions::{nonpcf_family, power_map};
use pncrit::dynamics::ops::{branch_locus, critical_locus, fixed_locus};
use pncrit::dynamics::Morphism;
use pncrit::jsonio;
use pncrit::pcf::{detect_pcf_type, orbit_report};
use pncrit::{limits, Error};

#[derive(Parser)]
#[command(name = "pncrit", version, about = "exact dynamics on P^n over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: Config,
}

#[derive(Args, Clone)]
struct Config {
    /// Seed for all randomized-but-deterministic searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on any intermediate total degree.
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<u32>,
    /// Cap on coefficient size in bits.
    #[arg(long = "max-bits", global = true)]
    max_bits: Option<u64>,
    /// Period bound for PCF detection.
    #[arg(long = "K", global = true, default_value_t = limits::DEFAULT_K)]
    k: u32,
    /// Tail bound for PCF detection.
    #[arg(long = "L", global = true, default_value_t = limits::DEFAULT_L)]
    l: u32,
    /// Post-critical orbit length bound.
    #[arg(long = "M", global = true, default_value_t = limits::DEFAULT_M)]
    m: u32,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the explicit map families.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run an analysis on a map JSON file.
    Analyze {
        /// critical | branch | orbit | pcf | fixed
        what: String,
        /// Map JSON file (witness JSON also accepted).
        map: PathBuf,
    },
    /// Check a branch witness; exit 1 unless every check passes.
    Verify {
        /// Witness JSON file.
        witness: PathBuf,
        /// Also check the roadmap hypotheses for this tail length.
        #[arg(long)]
        ell: Option<u32>,
        /// Automorphism map JSON for the ell = 2 precomposition route.
        #[arg(long)]
        alpha: Option<PathBuf>,
    },
    /// Full report: critical, branch, orbit, and fixed-locus data.
    Report {
        /// Map JSON file (witness JSON also accepted).
        map: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The d-power map on P^n.
    Power {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Minimally branched map with branching order e at its witness point.
    Hyperplane {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 2)]
        e: u32,
    },
    /// Symmetric power of a P^1 map given as a polynomial in z.
    Sympow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p1: String,
    },
    /// The family f_t = [x0^d + t x1^d, x1^d, ...].
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        t: String,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceCap(_)
        | Error::OrbitBudgetExceeded(_)
        | Error::SearchExhausted
        | Error::GenericityExhausted(_) => 3,
        Error::IrrationalFiberPoint { .. } | Error::IrrationalCriticalPoint => 4,
        _ => 2,
    }
}

fn apply_caps(cfg: &mut Config) -> Result<(), String> {
    if let Some(d) = cfg.max_degree {
        limits::set_max_degree(d);
    }
    if let Some(b) = cfg.max_bits {
        limits::set_max_bits(b);
    }
    // PN_CRIT_CAPS=max_degree=64,max_bits=1048576,K=6,L=3,M=8 overrides
    if let Ok(env) = std::env::var("PN_CRIT_CAPS") {
        for item in env.split(',').filter(|s| !s.trim().is_empty()) {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| format!("bad PN_CRIT_CAPS entry: {item}"))?;
            let val = val.trim();
            match key.trim() {
                "max_degree" => limits::set_max_degree(
                    val.parse().map_err(|_| format!("bad max_degree {val}"))?,
                ),
                "max_bits" => {
                    limits::set_max_bits(val.parse().map_err(|_| format!("bad max_bits {val}"))?)
                }
                "K" => cfg.k = val.parse().map_err(|_| format!("bad K {val}"))?,
                "L" => cfg.l = val.parse().map_err(|_| format!("bad L {val}"))?,
                "M" => cfg.m = val.parse().map_err(|_| format!("bad M {val}"))?,
                "fiber_retries" => {} // fixed in-library for reproducibility
                other => return Err(format!("unknown cap {other}")),
            }
        }
    }
    Ok(())
}

fn load_map(path: &PathBuf) -> Result<Morphism, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Invalid(format!("read {path:?}: {e}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("parse {path:?}: {e}")))?;
    // witness files carry the map under "map"
    let mv = v.get("map").unwrap_or(&v);
    jsonio::morphism_from_json(mv)
}

fn emit(cfg: &Config, v: &Value) -> Result<(), String> {
    let text = match cfg.format.as_str() {
        "json" => serde_json::to_string_pretty(v).expect("serializable"),
        "text" => render_text(v, 0),
        other => return Err(format!("unknown format {other}")),
    };
    match &cfg.out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| format!("write: {e}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn render_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, val)| match val {
                Value::Object(_) | Value::Array(_) => {
                    format!("{pad}{k}:\n{}", render_text(val, indent + 1))
                }
                _ => format!("{pad}{k}: {}", render_scalar(val)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(a) => a
            .iter()
            .map(|val| match val {
                Value::Object(_) | Value::Array(_) => render_text(val, indent),
                _ => format!("{pad}- {}", render_scalar(val)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => format!("{pad}{}", render_scalar(v)),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    let mut cfg = cli.config.clone();
    apply_caps(&mut cfg).map_err(|m| (2u8, m))?;
    let fail = |e: Error| (exit_code_for(&e), format!("{e}"));

    match &cli.command {
        Command::Construct { kind } => {
            let out = match kind {
                ConstructKind::Power { n, d } => {
                    let f = power_map(*n, *d).map_err(fail)?;
                    let mut params = Map::new();
                    params.insert("kind".into(), json!("power"));
                    jsonio::morphism_to_json_with_params(&f, &params)
                }
                ConstructKind::Hyperplane { n, d, e } => {
                    let w = hyperplane_construction(*n, *d, *e, cfg.seed).map_err(fail)?;
                    jsonio::witness_to_json(&w)
                }
                ConstructKind::Sympow { n, p1 } => {
                    let f1 = jsonio::p1_map_from_str(p1).map_err(fail)?;
                    let f = symmetric_power(&f1, *n).map_err(fail)?;
                    let mut params = Map::new();
                    params.insert("kind".into(), json!("sympow"));
                    params.insert("p1".into(), json!(p1));
                    jsonio::morphism_to_json_with_params(&f, &params)
                }
                ConstructKind::Family { n, d, t } => {
                    let tv = jsonio::parse_rational(t).map_err(fail)?;
                    let f = nonpcf_family(*n, *d, &tv).map_err(fail)?;
                    let mut params = Map::new();
                    params.insert("kind".into(), json!("family"));
                    params.insert("t".into(), json!(jsonio::format_rational(&tv)));
                    jsonio::morphism_to_json_with_params(&f, &params)
                }
            };
            emit(&cfg, &out).map_err(|m| (2u8, m))?;
            Ok(0)
        }
        Command::Analyze { what, map } => {
            let f = load_map(map).map_err(fail)?;
            let out = analyze(what, &f, &cfg).map_err(fail)?;
            emit(&cfg, &out).map_err(|m| (2u8, m))?;
            Ok(0)
        }
        Command::Verify {
            witness,
            ell,
            alpha,
        } => {
            let text = fs::read_to_string(witness)
                .map_err(|e| (2u8, format!("read {witness:?}: {e}")))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| (2u8, format!("parse: {e}")))?;
            let w = jsonio::witness_from_json(&v).map_err(fail)?;
            let mut report = verify_minimal_branching(&w, cfg.seed).map_err(fail)?;
            if let Some(ell) = ell {
                let alpha_map = match alpha {
                    Some(p) => Some(load_map(p).map_err(fail)?),
                    None => None,
                };
                let extra =
                    verify_roadmap_hypotheses(&w.map, *ell, Some(&w), alpha_map.as_ref(), cfg.seed)
                        .map_err(fail)?;
                report.checks.extend(extra.checks);
            }
            let ok = report.all_pass();
            emit(&cfg, &jsonio::report_to_json(&report)).map_err(|m| (2u8, m))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Report { map } => {
            let f = load_map(map).map_err(fail)?;
            let mut out = Map::new();
            for what in ["critical", "branch", "orbit", "fixed"] {
                out.insert(what.into(), analyze(what, &f, &cfg).map_err(fail)?);
            }
            emit(&cfg, &Value::Object(out)).map_err(|m| (2u8, m))?;
            Ok(0)
        }
    }
}

fn analyze(what: &str, f: &Morphism, cfg: &Config) -> Result<Value, Error> {
    match what {
        "critical" => {
            let (raw, reduced) = critical_locus(f)?;
            Ok(json!({
                "n": f.n(),
                "raw": pncrit::poly::parse::format_poly(&raw),
                "raw_degree": raw.homogeneous_degree(),
                "reduced": jsonio::hypersurface_to_json(&reduced),
            }))
        }
        "branch" => Ok(jsonio::hypersurface_to_json(&branch_locus(f)?)),
        "orbit" => orbit_report(f, cfg.m, cfg.k, cfg.l, cfg.seed),
        "pcf" => {
            let found = detect_pcf_type(f, cfg.k, cfg.l)?;
            Ok(match found {
                Some((ty, cert)) => json!({
                    "type": [ty.k, ty.ell],
                    "bounds": {"K": cfg.k, "L": cfg.l},
                    "certificate": {
                        "later": jsonio::hypersurface_to_json(&cert.later),
                        "earlier": jsonio::hypersurface_to_json(&cert.earlier),
                    },
                }),
                None => json!({"type": null, "bounds": {"K": cfg.k, "L": cfg.l}}),
            })
        }
        "fixed" => {
            let (_, dim, points) = fixed_locus(f)?;
            Ok(json!({
                "projective_dimension": dim,
                "count": points.as_ref().map(|p| p.len()),
                "points": points.map(|ps| ps.iter().map(jsonio::point_to_json).collect::<Vec<_>>()),
            }))
        }
        other => Err(Error::Invalid(format!("unknown analysis {other}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
