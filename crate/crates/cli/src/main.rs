use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use verschiebung::littlewood::{core_quotient, zasym_witness};
use verschiebung::sxp::characters::{chi, chi_skew};
use verschiebung::sxp::{sxp_schur, sxp_universal_so, sxp_wildon};
use verschiebung::symfunc::set_max_degree;
use verschiebung::universal::{factor_classical, factor_verschiebung, hamel_king, universal_char, Family};
use verschiebung::verify::{Bounds, Suite, VerifyReport};
use verschiebung::{enumerate_z_asymmetric, Basis, Partition, SkewShape};

/// Littlewood decompositions, universal-character factorizations under the
/// Verschiebung operator, and plethysm rules, all in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "verschiebung", version)]
struct Cli {
    /// Emit JSON (the default and only format).
    #[arg(long, global = true)]
    json: bool,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Largest degree for which character tables may be built.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// t-core, t-quotient and charge vector of a partition.
    Decompose {
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long)]
        t: usize,
    },
    /// Test a partition for z-asymmetry (with its witness when t is given), or
    /// list the z-asymmetric partitions up to a size.
    Zasym {
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Option<Partition>,
        #[arg(long, allow_hyphen_values = true)]
        z: i64,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Factor φ_t of 𝒳_λ(z;q) or of a classical universal character.
    Factorize {
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        target: Target,
        /// Also print both sides in the Schur basis and whether they agree.
        #[arg(long)]
        expand: bool,
    },
    /// A universal character or 𝒳_λ(z;q) as a symmetric function.
    Character {
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "s", value_parser = parse_basis)]
        basis: Basis,
    },
    /// Plethysm expansions by p_t.
    Sxp {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        /// Inner shape for the skew rule.
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true, default_value = "-")]
        mu: Partition,
        /// Left factor s_τ for the skew rule.
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true, default_value = "-")]
        tau: Partition,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Rule::Schur)]
        rule: Rule,
    },
    /// A symmetric-group character value χ^{λ/inner}(μ).
    Chi {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        inner: Option<Partition>,
    },
    /// Run a verification sweep; exits with status 1 on any failure.
    Verify {
        /// littlewood, signs, zasym, schur-verschiebung, hamel-king, rs, chiz,
        /// classical, characters, sxp or all.
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Moduli, as a list "2,3,4" or range "2..4".
        #[arg(long, value_parser = parse_moduli)]
        t: Option<Moduli>,
        /// z values (or rs shifts), as a list or inclusive range "-2..4".
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        z: Option<Ints>,
        /// Small bounds for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Target {
    #[arg(long, allow_hyphen_values = true)]
    z: Option<i64>,
    /// sp, o, so+ or so-.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Schur,
    Wildon,
    UniversalSo,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: verschiebung::Error| e.to_string())
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: verschiebung::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: verschiebung::Error| e.to_string())
}

#[derive(Clone, Debug)]
struct Ints(Vec<i64>);

#[derive(Clone, Debug)]
struct Moduli(Vec<usize>);

fn parse_ints(s: &str) -> Result<Ints, String> {
    let one = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad number {x:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (one(a)?, one(b)?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(Ints((a..=b).collect()));
    }
    s.split(',').map(one).collect::<Result<_, _>>().map(Ints)
}

fn parse_moduli(s: &str) -> Result<Moduli, String> {
    let v = parse_ints(s)?.0.into_iter().map(|x| usize::try_from(x).map_err(|_| format!("bad modulus {x}")));
    v.collect::<Result<_, _>>().map(Moduli)
}

enum Failure {
    Usage(String),
    Check,
}

impl From<verschiebung::Error> for Failure {
    fn from(e: verschiebung::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn family_or_z(target: &Target) -> Result<Option<Family>, Failure> {
    match (target.family, target.z) {
        (Some(f), _) => Ok(Some(f)),
        (None, Some(_)) => Ok(None),
        (None, None) => Err(Failure::Usage("one of --z or --family is required".into())),
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let out = match &cli.cmd {
        Cmd::Decompose { lambda, t } => serde_json::to_value(core_quotient(lambda, *t)?).expect("serializable"),
        Cmd::Zasym { lambda: Some(lambda), z, t, .. } => {
            let mut v = json!({ "lambda": lambda, "z": z, "z_asymmetric": lambda.is_z_asymmetric(*z) });
            if let Some(t) = t {
                v["witness"] = json!(zasym_witness(lambda, *z, *t)?);
            }
            v
        }
        Cmd::Zasym { lambda: None, z, max_size, .. } => {
            json!({ "z": z, "max_size": max_size, "partitions": enumerate_z_asymmetric(*z, *max_size) })
        }
        Cmd::Factorize { lambda, t, target, expand } => {
            let res = match family_or_z(target)? {
                Some(f) => factor_classical(lambda, *t, f)?,
                None => factor_verschiebung(lambda, target.z.expect("checked"), *t)?,
            };
            let mut v = serde_json::to_value(&res).expect("serializable");
            v["result"] = json!(res.to_string());
            if *expand {
                let (direct, factored) = (res.direct()?, res.expand()?);
                let equal = direct == factored;
                v["expand"] = json!({
                    "direct": direct,
                    "factored": factored,
                    "direct_text": direct.to_string(),
                    "factored_text": factored.to_string(),
                    "equal": equal,
                });
                if !equal {
                    emit(cli, &v);
                    return Err(Failure::Check);
                }
            }
            v
        }
        Cmd::Character { lambda, target, basis } => {
            let f = match family_or_z(target)? {
                Some(fam) => universal_char(fam, lambda)?,
                None => hamel_king(lambda, target.z.expect("checked"))?,
            };
            let f = f.to_basis(*basis)?;
            json!({ "lambda": lambda, "text": f.to_string(), "function": f })
        }
        Cmd::Sxp { lambda, mu, tau, t, rule } => match rule {
            Rule::Schur => json!({ "rule": "schur", "terms": sxp_schur(lambda, *t)? }),
            Rule::UniversalSo => json!({ "rule": "universal-so", "terms": sxp_universal_so(lambda, *t)? }),
            Rule::Wildon => {
                let shape = SkewShape::new(lambda.clone(), mu.clone())?;
                let terms: Vec<Value> = sxp_wildon(tau, &shape, *t)?
                    .into_iter()
                    .rev()
                    .map(|(nu, c)| json!({ "nu": nu, "coeff": c }))
                    .collect();
                json!({ "rule": "wildon", "terms": terms })
            }
        },
        Cmd::Chi { lambda, mu, inner } => match inner {
            None => json!(chi(lambda, mu)?),
            Some(inner) => json!(chi_skew(&SkewShape::new(lambda.clone(), inner.clone())?, mu)?),
        },
        Cmd::Verify { suite, max_size, t, z, quick } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let reports: Vec<VerifyReport> = suites
                .into_iter()
                .map(|s| {
                    let mut b: Bounds = if *quick { s.quick_bounds() } else { s.full_bounds() };
                    if let Some(n) = max_size {
                        b.max_size = *n;
                    }
                    if let Some(t) = t {
                        b.t = t.0.clone();
                    }
                    if let Some(z) = z {
                        b.z = z.0.clone();
                    }
                    let r = s.run(&b);
                    eprintln!("{}: {} instances, {} failed, {} ms", r.suite, r.instances, r.failed, r.wall_ms);
                    r
                })
                .collect();
            let ok = reports.iter().all(VerifyReport::passed);
            let v = json!({ "passed": ok, "reports": reports });
            if !ok {
                emit(cli, &v);
                return Err(Failure::Check);
            }
            v
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, v: &Value) {
    let s = if cli.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", s.expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_degree {
        set_max_degree(n);
    }
    match run(&cli) {
        Ok(v) => {
            emit(&cli, &v);
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
