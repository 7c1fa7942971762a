//! Command-line front end. One verb per identity or quantity; table output
//! by default, the JSON series schema behind `--json`. Exit code 0 on
//! success or a verified identity, 1 on an identity mismatch, 2 on usage
//! errors.

use std::collections::BTreeMap;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::finite;
use crate::hesselink::{self, Weight};
use crate::hilbert;
use crate::lr::{self, LengthBounds};
use crate::partition::{Partition, PartitionTuple};
use crate::series::{IdentityReport, TruncatedSeries};

#[derive(Parser)]
#[command(name = "lrsq", version, about = "Exact Littlewood-Richardson sums, Hilbert series, and class-counting identities")]
struct Cli {
    /// Emit the outcome as JSON (integers as decimal strings).
    #[arg(long, global = true)]
    json: bool,
    /// Worker count hint for data-parallel internals.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// A single Littlewood-Richardson coefficient (two factors or a tuple).
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        /// ";"-separated tuple of factors, e.g. "2,1;3;1,1".
        #[arg(long)]
        mus: Option<String>,
    },
    /// Kostka number K_{λν}.
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
    },
    /// Σ_λ Σ_𝛍 (c^λ_𝛍)² over m-tuples of total size d.
    Lrsum {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        m: usize,
        /// Fix the degree profile (d₁,…,d_m) instead of summing over all.
        #[arg(long)]
        profile: Option<String>,
        /// Bound ℓ(λ) ≤ n.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Truncated power-series expansions.
    Series {
        #[command(subcommand)]
        which: SeriesVerb,
    },
    /// Verify an identity by computing both sides independently.
    Verify {
        #[command(subcommand)]
        which: VerifyVerb,
    },
    /// Graded dimensions of invariant and harmonic spaces.
    Dim {
        #[command(subcommand)]
        which: DimVerb,
    },
    /// Hesselink graded multiplicity m_λ(t).
    Hesselink {
        #[arg(long)]
        n: usize,
        /// Weight in ε-coordinates, e.g. "1,0,-1".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        dmax: u32,
    },
    /// Spherical Hilbert series Σ_{λ∈S} m_λ(t) for a weight file.
    Spherical {
        #[arg(long)]
        n: usize,
        /// File with one comma-separated weight vector per line.
        #[arg(long)]
        weights: std::path::PathBuf,
        #[arg(long)]
        dmax: u32,
    },
    /// Necklace count N_k(m) for k beads in m colors.
    Necklace {
        /// Number of beads k.
        #[arg(long)]
        n: u32,
        /// Number of colors m.
        #[arg(long)]
        m: u64,
    },
    /// Orbits of S_d under conjugation by the Young subgroup S_𝐝.
    Orbits {
        #[arg(long)]
        composition: String,
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        lr: bool,
        #[arg(long)]
        both: bool,
    },
    /// Conjugacy-class counts of GL_m(F_q).
    Glq {
        #[arg(long)]
        q: u64,
        /// Brute-force matrix enumeration instead of the series.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum SeriesVerb {
    /// ∏_k 1/(1 − (t₁^k + … + t_m^k)).
    MainFormula {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: u32,
    },
    /// ∏_k 1/(1 − m t^k).
    StableBlock {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: u32,
    },
    /// ∏_k (1 − t^k)/(1 − m t^k).
    Harmonic {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: u32,
    },
    /// η_m(t) = ∏_k (1/(1−t^k))^{N_k(m)}.
    Eta {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        degree: u32,
    },
    /// ∏_k (1 − t^k)/(1 − q t^k).
    Glq {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        degree: u32,
    },
    /// ∏_k 1/(1 − q t^k) in (q, t).
    PartitionsByLength {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum VerifyVerb {
    /// LR-squared sum against the product expansion, coefficient for
    /// coefficient.
    MainFormula {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: u32,
    },
    /// The (q,t)-graded identity for two copies, three routes.
    Bigraded {
        #[arg(long)]
        degree: u32,
    },
    /// Class-count series = (∏(1−t^k))·η_q(t) = necklace-exponent product.
    EtaGlq {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        degree: u32,
    },
    /// Brute-force orbit count against the LR-squared sum.
    Orbit {
        #[arg(long)]
        composition: String,
    },
    /// Finite block dimensions against ∏1/(1−mt^k) in the stable range.
    BlockStable {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum DimVerb {
    /// Invariants of simultaneous conjugation on m copies of M_n.
    Invariants {
        #[arg(long)]
        n: usize,
        /// Multidegree (d₁,…,d_m), e.g. "2,1".
        #[arg(long)]
        profile: String,
    },
    /// Block case: copies of sizes n₁,…,n_m, total degree d.
    Block {
        /// Block sizes, e.g. "2,2".
        #[arg(long)]
        composition: String,
        #[arg(long)]
        degree: u32,
    },
    /// Degree-d invariant harmonic polynomials in the block case.
    Harmonic {
        /// Block sizes, e.g. "2,2".
        #[arg(long)]
        composition: String,
        #[arg(long)]
        degree: u32,
    },
}

/// What a verb produced, in serializable form.
#[derive(Debug, Serialize)]
pub struct CommandOutcome {
    pub verb: String,
    pub parameters: BTreeMap<String, String>,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

/// Parse argv, dispatch, print, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version on stdout with exit 0, errors with 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.verb) {
        Ok((outcome, human)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome).expect("outcome serializes")
                );
            } else {
                println!("{human}");
            }
            if outcome.verified == Some(false) {
                1
            } else {
                0
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| format!("--{flag}: {e}"))
}

fn parse_tuple(flag: &str, s: &str) -> Result<PartitionTuple, String> {
    PartitionTuple::from_str(s).map_err(|e| format!("--{flag}: {e}"))
}

fn parse_u32_list(flag: &str, s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("--{flag}: `{p}` is not a non-negative integer"))
        })
        .collect()
}

fn parse_weight(flag: &str, s: &str) -> Result<Weight, String> {
    let coords: Result<Vec<i64>, String> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("--{flag}: `{p}` is not an integer"))
        })
        .collect();
    Ok(Weight::new(coords?))
}

fn series_payload(s: &TruncatedSeries, vars: &[&str]) -> Value {
    serde_json::to_value(s.to_json(vars)).expect("series serializes")
}

fn series_table(s: &TruncatedSeries, vars: &[&str]) -> String {
    let mut lines = vec![format!(
        "# vars: {}  max_degree: {}",
        vars.join(","),
        s.max_degree()
    )];
    for (exp, coeff) in s.terms() {
        let mono: Vec<String> = exp
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let mono = if mono.is_empty() {
            "1".to_string()
        } else {
            mono.join("*")
        };
        lines.push(format!("{mono}\t{coeff}"));
    }
    lines.join("\n")
}

fn report_payload(r: &IdentityReport) -> (Value, String, bool) {
    let payload = json!({
        "equal": r.equal,
        "first_discrepancy": r.first_discrepancy,
    });
    let human = if r.equal {
        "verified: both sides agree coefficient-for-coefficient".to_string()
    } else {
        let at = r
            .first_discrepancy
            .as_ref()
            .map(|e| format!("{e:?}"))
            .unwrap_or_default();
        let lhs = r.lhs.coefficient(r.first_discrepancy.as_ref().unwrap());
        let rhs = r.rhs.coefficient(r.first_discrepancy.as_ref().unwrap());
        format!(
            "MISMATCH at exponent {at}: lhs {:?} vs rhs {:?}",
            lhs, rhs
        )
    };
    (payload, human, r.equal)
}

fn scalar_outcome(
    verb: &str,
    parameters: BTreeMap<String, String>,
    value: String,
) -> (CommandOutcome, String) {
    (
        CommandOutcome {
            verb: verb.to_string(),
            parameters,
            payload: Value::String(value.clone()),
            verified: None,
        },
        value,
    )
}

fn series_outcome(
    verb: &str,
    parameters: BTreeMap<String, String>,
    s: &TruncatedSeries,
    vars: &[&str],
) -> (CommandOutcome, String) {
    (
        CommandOutcome {
            verb: verb.to_string(),
            parameters,
            payload: series_payload(s, vars),
            verified: None,
        },
        series_table(s, vars),
    )
}

fn verify_outcome(
    verb: &str,
    parameters: BTreeMap<String, String>,
    r: &IdentityReport,
) -> (CommandOutcome, String) {
    let (payload, human, equal) = report_payload(r);
    (
        CommandOutcome {
            verb: verb.to_string(),
            parameters,
            payload,
            verified: Some(equal),
        },
        human,
    )
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn dispatch(verb: &Verb) -> Result<(CommandOutcome, String), String> {
    match verb {
        Verb::Lr {
            lambda,
            mu,
            nu,
            mus,
        } => {
            let lam = parse_partition("lambda", lambda)?;
            let value = match (mu, nu, mus) {
                (Some(mu), Some(nu), None) => {
                    let mu = parse_partition("mu", mu)?;
                    let nu = parse_partition("nu", nu)?;
                    lr::lr_coefficient(&lam, &mu, &nu).to_string()
                }
                (None, None, Some(mus)) => {
                    let tuple = parse_tuple("mus", mus)?;
                    lr::lr_multi(&lam, &tuple).to_string()
                }
                _ => {
                    return Err(
                        "lr needs either --mu and --nu, or --mus (not both)".to_string()
                    )
                }
            };
            let mut p = params(&[("lambda", lambda.clone())]);
            if let Some(mu) = mu {
                p.insert("mu".into(), mu.clone());
            }
            if let Some(nu) = nu {
                p.insert("nu".into(), nu.clone());
            }
            if let Some(mus) = mus {
                p.insert("mus".into(), mus.clone());
            }
            Ok(scalar_outcome("lr", p, value))
        }
        Verb::Kostka { lambda, nu } => {
            let lam = parse_partition("lambda", lambda)?;
            let n = parse_partition("nu", nu)?;
            let p = params(&[("lambda", lambda.clone()), ("nu", nu.clone())]);
            Ok(scalar_outcome("kostka", p, lr::kostka(&lam, &n).to_string()))
        }
        Verb::Lrsum {
            degree,
            m,
            profile,
            n,
        } => {
            let prof = profile
                .as_ref()
                .map(|s| parse_u32_list("profile", s))
                .transpose()?;
            if let Some(prof) = &prof {
                if prof.len() != *m {
                    return Err(format!(
                        "--profile has {} entries but --m is {m}",
                        prof.len()
                    ));
                }
                if prof.iter().sum::<u32>() != *degree {
                    return Err("--profile must sum to --degree".to_string());
                }
            }
            let bounds = LengthBounds {
                lambda: *n,
                mus: None,
            };
            let v = lr::sum_lr_squared(*degree, *m, prof.as_deref(), &bounds);
            let mut p = params(&[("degree", degree.to_string()), ("m", m.to_string())]);
            if let Some(s) = profile {
                p.insert("profile".into(), s.clone());
            }
            if let Some(n) = n {
                p.insert("n".into(), n.to_string());
            }
            Ok(scalar_outcome("lrsum", p, v.to_string()))
        }
        Verb::Series { which } => series_verb(which),
        Verb::Verify { which } => verify_verb(which),
        Verb::Dim { which } => dim_verb(which),
        Verb::Hesselink { n, lambda, dmax } => {
            let w = parse_weight("lambda", lambda)?;
            let m = hesselink::hesselink_multiplicity(*n, &w, *dmax).map_err(|e| e.to_string())?;
            let p = params(&[
                ("n", n.to_string()),
                ("lambda", lambda.clone()),
                ("dmax", dmax.to_string()),
            ]);
            Ok(graded_outcome("hesselink", p, &m))
        }
        Verb::Spherical { n, weights, dmax } => {
            let text = std::fs::read_to_string(weights)
                .map_err(|e| format!("--weights {}: {e}", weights.display()))?;
            let mut set = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                set.push(parse_weight("weights", line)?);
            }
            let h = hesselink::spherical_hilbert(*n, &set, *dmax).map_err(|e| e.to_string())?;
            let p = params(&[
                ("n", n.to_string()),
                ("weights", weights.display().to_string()),
                ("dmax", dmax.to_string()),
            ]);
            Ok(graded_outcome("spherical", p, &h))
        }
        Verb::Necklace { n, m } => {
            if *n == 0 || *m == 0 {
                return Err("necklace needs --n ≥ 1 beads and --m ≥ 1 colors".to_string());
            }
            let p = params(&[("n", n.to_string()), ("m", m.to_string())]);
            Ok(scalar_outcome(
                "necklace",
                p,
                finite::necklace_count(*n, *m).to_string(),
            ))
        }
        Verb::Orbits {
            composition,
            brute,
            lr: lr_flag,
            both,
        } => {
            let comp = parse_u32_list("composition", composition)?;
            let use_both = *both || (*brute && *lr_flag) || (!*brute && !*lr_flag);
            let mut p = params(&[("composition", composition.clone())]);
            if use_both {
                let b = finite::orbit_count_brute(&comp).map_err(|e| e.to_string())?;
                let l = finite::orbit_count_lr(&comp);
                let equal = b == l;
                p.insert("mode".into(), "both".into());
                let payload = json!({
                    "brute": b.to_string(),
                    "lr": l.to_string(),
                    "equal": equal,
                });
                let human = format!(
                    "brute: {b}\nlr: {l}\n{}",
                    if equal { "verified: counts agree" } else { "MISMATCH" }
                );
                Ok((
                    CommandOutcome {
                        verb: "orbits".into(),
                        parameters: p,
                        payload,
                        verified: Some(equal),
                    },
                    human,
                ))
            } else if *brute {
                p.insert("mode".into(), "brute".into());
                let b = finite::orbit_count_brute(&comp).map_err(|e| e.to_string())?;
                Ok(scalar_outcome("orbits", p, b.to_string()))
            } else {
                p.insert("mode".into(), "lr".into());
                Ok(scalar_outcome(
                    "orbits",
                    p,
                    finite::orbit_count_lr(&comp).to_string(),
                ))
            }
        }
        Verb::Glq {
            q,
            brute,
            m,
            degree,
        } => {
            if *brute {
                let m = m.ok_or("glq --brute needs --m")?;
                let v = finite::glq_class_count_brute(m, *q).map_err(|e| e.to_string())?;
                let p = params(&[
                    ("q", q.to_string()),
                    ("m", m.to_string()),
                    ("mode", "brute".to_string()),
                ]);
                Ok(scalar_outcome("glq", p, v.to_string()))
            } else {
                if *q < 2 {
                    return Err("glq needs --q ≥ 2".to_string());
                }
                let s = finite::glq_class_series(*q, *degree);
                let p = params(&[("q", q.to_string()), ("degree", degree.to_string())]);
                Ok(series_outcome("glq", p, &s, &["t"]))
            }
        }
    }
}

fn graded_outcome(
    verb: &str,
    parameters: BTreeMap<String, String>,
    g: &hesselink::GradedMultiplicity,
) -> (CommandOutcome, String) {
    let coeffs: BTreeMap<String, String> = g
        .coeffs()
        .iter()
        .map(|(d, c)| (d.to_string(), c.to_string()))
        .collect();
    (
        CommandOutcome {
            verb: verb.to_string(),
            parameters,
            payload: json!({ "polynomial": g.to_string(), "coeffs": coeffs }),
            verified: None,
        },
        g.to_string(),
    )
}

fn series_verb(which: &SeriesVerb) -> Result<(CommandOutcome, String), String> {
    match which {
        SeriesVerb::MainFormula { m, degree } => {
            if *m == 0 {
                return Err("series main-formula needs --m ≥ 1".to_string());
            }
            let s = hilbert::main_formula_lhs(*m, *degree);
            let names: Vec<String> = (1..=*m).map(|j| format!("t{j}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(series_outcome("series main-formula", p, &s, &refs))
        }
        SeriesVerb::StableBlock { m, degree } => {
            if *m == 0 {
                return Err("series stable-block needs --m ≥ 1".to_string());
            }
            let s = hilbert::stable_block_series(*m, *degree);
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(series_outcome("series stable-block", p, &s, &["t"]))
        }
        SeriesVerb::Harmonic { m, degree } => {
            if *m < 2 {
                return Err("series harmonic needs --m ≥ 2".to_string());
            }
            let s = hilbert::harmonic_stable_series(*m, *degree);
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(series_outcome("series harmonic", p, &s, &["t"]))
        }
        SeriesVerb::Eta { m, degree } => {
            if *m == 0 {
                return Err("series eta needs --m ≥ 1".to_string());
            }
            let s = finite::eta_series(*m, *degree);
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(series_outcome("series eta", p, &s, &["t"]))
        }
        SeriesVerb::Glq { q, degree } => {
            if *q < 2 {
                return Err("series glq needs --q ≥ 2".to_string());
            }
            let s = finite::glq_class_series(*q, *degree);
            let p = params(&[("q", q.to_string()), ("degree", degree.to_string())]);
            Ok(series_outcome("series glq", p, &s, &["t"]))
        }
        SeriesVerb::PartitionsByLength { degree } => {
            let s = finite::partitions_by_length_series(*degree);
            let p = params(&[("degree", degree.to_string())]);
            Ok(series_outcome("series partitions-by-length", p, &s, &["q", "t"]))
        }
    }
}

fn verify_verb(which: &VerifyVerb) -> Result<(CommandOutcome, String), String> {
    match which {
        VerifyVerb::MainFormula { m, degree } => {
            if *m == 0 {
                return Err("verify main-formula needs --m ≥ 1".to_string());
            }
            let r = hilbert::verify_main_formula(*m, *degree);
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(verify_outcome("verify main-formula", p, &r))
        }
        VerifyVerb::Bigraded { degree } => {
            let r = hilbert::bigraded_identity(*degree);
            let p = params(&[("degree", degree.to_string())]);
            let payload = json!({
                "equal": r.equal,
                "first_discrepancy": r.first_discrepancy,
            });
            let human = if r.equal {
                "verified: product, harmonic product, and LR sum agree".to_string()
            } else {
                format!("MISMATCH at exponent {:?}", r.first_discrepancy)
            };
            Ok((
                CommandOutcome {
                    verb: "verify bigraded".into(),
                    parameters: p,
                    payload,
                    verified: Some(r.equal),
                },
                human,
            ))
        }
        VerifyVerb::EtaGlq { q, degree } => {
            if *q < 2 {
                return Err("verify eta-glq needs --q ≥ 2".to_string());
            }
            let r = finite::eta_glq_identity(*q, *degree);
            let p = params(&[("q", q.to_string()), ("degree", degree.to_string())]);
            Ok(verify_outcome("verify eta-glq", p, &r))
        }
        VerifyVerb::Orbit { composition } => {
            let comp = parse_u32_list("composition", composition)?;
            let b = finite::orbit_count_brute(&comp).map_err(|e| e.to_string())?;
            let l = finite::orbit_count_lr(&comp);
            let equal = b == l;
            let p = params(&[("composition", composition.clone())]);
            let payload = json!({
                "brute": b.to_string(),
                "lr": l.to_string(),
                "equal": equal,
            });
            let human = if equal {
                format!("verified: both counts are {b}")
            } else {
                format!("MISMATCH: brute {b} vs lr {l}")
            };
            Ok((
                CommandOutcome {
                    verb: "verify orbit".into(),
                    parameters: p,
                    payload,
                    verified: Some(equal),
                },
                human,
            ))
        }
        VerifyVerb::BlockStable { m, degree } => {
            if *m == 0 {
                return Err("verify block-stable needs --m ≥ 1".to_string());
            }
            let series = hilbert::stable_block_series(*m, *degree);
            let mut finite_side = TruncatedSeries::zero(1, *degree);
            for d in 0..=*degree {
                let ns = vec![d.max(1) as usize; *m];
                finite_side.set_coefficient(
                    vec![d],
                    BigInt::from(hilbert::block_invariant_dim(&ns, d)),
                );
            }
            let r = IdentityReport::compare(finite_side, series);
            let p = params(&[("m", m.to_string()), ("degree", degree.to_string())]);
            Ok(verify_outcome("verify block-stable", p, &r))
        }
    }
}

fn dim_verb(which: &DimVerb) -> Result<(CommandOutcome, String), String> {
    match which {
        DimVerb::Invariants { n, profile } => {
            if *n == 0 {
                return Err("dim invariants needs --n ≥ 1".to_string());
            }
            let prof = parse_u32_list("profile", profile)?;
            let v = hilbert::finite_invariant_dim(*n, &prof);
            let p = params(&[("n", n.to_string()), ("profile", profile.clone())]);
            Ok(scalar_outcome("dim invariants", p, v.to_string()))
        }
        DimVerb::Block {
            composition,
            degree,
        } => {
            let ns_u32 = parse_u32_list("composition", composition)?;
            let ns: Vec<usize> = ns_u32.iter().map(|&x| x as usize).collect();
            let v = hilbert::block_invariant_dim(&ns, *degree);
            let p = params(&[
                ("composition", composition.clone()),
                ("degree", degree.to_string()),
            ]);
            Ok(scalar_outcome("dim block", p, v.to_string()))
        }
        DimVerb::Harmonic {
            composition,
            degree,
        } => {
            let ns_u32 = parse_u32_list("composition", composition)?;
            let ns: Vec<usize> = ns_u32.iter().map(|&x| x as usize).collect();
            let v = hilbert::harmonic_finite_dim(&ns, *degree);
            let p = params(&[
                ("composition", composition.clone()),
                ("degree", degree.to_string()),
            ]);
            Ok(scalar_outcome("dim harmonic", p, v.to_string()))
        }
    }
}
