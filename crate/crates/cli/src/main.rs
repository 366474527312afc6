use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use youngspan::continuous::{random_profile, ProfileJson, Q};
use youngspan::hull::{face_count_closed, FacesExport};
use youngspan::projection::{write_svg, SvgOptions};
use youngspan::verify::{verify, VerifyOptions};
use youngspan::{
    discretize_profile, enumerate_faces, enumerate_young, hasse_skeleton, project_skeleton,
    vertex_direct, Error, PLFunction, Partition,
};

const ENUMERATION_MAX_N: usize = 16;
const DETERMINANT_MAX_N: usize = 14;
const ORACLE_MAX_N: usize = youngspan::hull::ORACLE_MAX_N;

#[derive(Parser)]
#[command(
    name = "youngspan",
    version,
    about = "Restricted Young lattices and the injective hull of the cyclic metric"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Number of points of the cycle
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of Y_N
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        count_only: bool,
    },
    /// Hull vertex of a partition
    Vertex {
        #[command(flatten)]
        common: Common,
        /// Comma-separated parts, or 0 for the empty partition
        #[arg(long)]
        partition: Partition,
    },
    /// Faces of the hull, as Boolean cubes below a partition
    Faces {
        #[command(flatten)]
        common: Common,
        /// Face dimension
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Vertices and edges of the hull
    Skeleton {
        #[command(flatten)]
        common: Common,
    },
    /// Planar projection onto a regular N-gon
    Project {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Pixels per unit
        #[arg(long, default_value_t = 100.0)]
        scale: f64,
        /// Vertex radius in pixels
        #[arg(long, default_value_t = 2.0)]
        radius: f64,
    },
    /// Run every consistency check for one N
    Verify {
        #[command(flatten)]
        common: Common,
        /// Also compare against the brute-force vertex search
        #[arg(long)]
        oracle: bool,
        /// Random profiles for the rectangle identity
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Continuous profiles
    Continuous {
        /// Discretize this partition (needs --n)
        #[arg(long)]
        partition: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
        /// Profile JSON file to analyze
        #[arg(long, value_name = "PATH")]
        profile: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Failure {
    Validation(String),
    Mismatch(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Io(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn limit(what: &str, n: usize, max: usize) -> Result<(), Failure> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Validation(format!(
            "N = {n} is outside the supported range 2..={max} for {what}"
        )))
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn enumerate(c: &Common, count_only: bool) -> Outcome {
    limit("enumeration", c.n, ENUMERATION_MAX_N)?;
    let all = enumerate_young(c.n)?;
    Ok(match (count_only, c.format) {
        (true, Format::Text) => format!("{}\n", all.len()),
        (true, Format::Json) => json(&serde_json::json!({ "n": c.n, "count": all.len() })),
        (false, Format::Text) => all.iter().map(|p| format!("{p}\n")).collect(),
        (false, Format::Json) => json(&all),
    })
}

fn vertex(c: &Common, lambda: &Partition) -> Outcome {
    let v = vertex_direct(lambda, c.n)?;
    Ok(match c.format {
        Format::Text => format!(
            "partition {}\nf         {}\nnorm      {}\n",
            v.lambda,
            join(&v.values, " "),
            v.l1_norm()
        ),
        Format::Json => json(&v),
    })
}

fn faces(c: &Common, dim: Option<usize>, count_only: bool) -> Outcome {
    limit("face enumeration", c.n, ENUMERATION_MAX_N)?;
    let dims: Vec<usize> = match dim {
        Some(v) => vec![v],
        None if count_only => (0..=c.n / 2).collect(),
        None => {
            return Err(Failure::Validation(
                "--dim is required unless --count-only is given".into(),
            ))
        }
    };
    if count_only {
        let counts = dims
            .iter()
            .map(|&v| Ok((v, enumerate_faces(c.n, v)?.len())))
            .collect::<Result<Vec<_>, Error>>()?;
        for &(v, got) in &counts {
            let want = face_count_closed(c.n, v)?;
            if got as u64 != want {
                return Err(Failure::Mismatch(format!(
                    "v={v}: enumerated {got}, closed form {want}"
                )));
            }
        }
        return Ok(match c.format {
            Format::Text => {
                let parts: Vec<String> = counts.iter().map(|(v, k)| format!("v={v}:{k}")).collect();
                format!("{}\n", parts.join(" "))
            }
            Format::Json => {
                let map: serde_json::Map<String, serde_json::Value> = counts
                    .iter()
                    .map(|(v, k)| (v.to_string(), (*k).into()))
                    .collect();
                json(&serde_json::json!({ "n": c.n, "counts": map }))
            }
        });
    }
    let v = dims[0];
    let list = enumerate_faces(c.n, v)?;
    Ok(match c.format {
        Format::Text => {
            let mut out = String::new();
            for f in &list {
                let corners: Vec<String> = f
                    .corners
                    .iter()
                    .map(|k| format!("({},{})", k.row, k.col))
                    .collect();
                writeln!(out, "{:<16} {}", f.lambda.to_string(), corners.join(" ")).unwrap();
            }
            out
        }
        Format::Json => json(&FacesExport {
            n: c.n,
            dim: v,
            faces: list,
        }),
    })
}

fn skeleton(c: &Common) -> Outcome {
    limit("enumeration", c.n, ENUMERATION_MAX_N)?;
    let sk = hasse_skeleton(c.n)?;
    Ok(match c.format {
        Format::Json => json(&sk),
        Format::Text => {
            let width = sk
                .vertices
                .iter()
                .map(|v| v.lambda.to_string().len())
                .max()
                .unwrap_or(1);
            let mut out = format!("{} vertices, {} edges\n", sk.vertices.len(), sk.edges.len());
            for (i, v) in sk.vertices.iter().enumerate() {
                writeln!(
                    out,
                    "{i:>5}  {:<width$}  {}",
                    v.lambda.to_string(),
                    join(&v.values, " ")
                )
                .unwrap();
            }
            for [a, b] in &sk.edges {
                writeln!(out, "{a} {b}").unwrap();
            }
            out
        }
    })
}

fn project(c: &Common, svg: Option<&PathBuf>, scale: f64, radius: f64) -> Outcome {
    limit("projection", c.n, DETERMINANT_MAX_N)?;
    if !(scale > 0.0 && radius >= 0.0) {
        return Err(Failure::Validation(
            "--scale must be positive and --radius nonnegative".into(),
        ));
    }
    let emb = project_skeleton(c.n)?;
    if let Some(path) = svg {
        let opts = SvgOptions {
            scale,
            radius,
            ..SvgOptions::default()
        };
        write_svg(&emb, path, &opts)?;
    }
    let origin = emb.at_origin(1e-9);
    Ok(match c.format {
        Format::Json => json(&emb),
        Format::Text => {
            let mut out = String::new();
            for (p, pt) in emb.partitions.iter().zip(&emb.points) {
                writeln!(
                    out,
                    "{:<20} {:>10.6} {:>10.6}",
                    p.to_string(),
                    clean(pt[0]),
                    clean(pt[1])
                )
                .unwrap();
            }
            writeln!(out, "at origin: {}", join(&origin, "; ")).unwrap();
            out
        }
    })
}

fn clean(x: f64) -> f64 {
    if x.abs() < 5e-7 {
        0.0
    } else {
        x
    }
}

fn run_verify(c: &Common, oracle: bool, samples: usize, seed: u64) -> Outcome {
    limit("verification", c.n, DETERMINANT_MAX_N)?;
    if oracle {
        limit("the vertex oracle", c.n, ORACLE_MAX_N)?;
    }
    let report = verify(
        c.n,
        VerifyOptions {
            oracle,
            samples,
            seed,
        },
    )?;
    let text = match c.format {
        Format::Json => json(&report),
        Format::Text => report.to_string(),
    };
    if let Some(bad) = report.first_failure() {
        return Err(Failure::Mismatch(format!(
            "{text}check {:?} failed: {}",
            bad.name, bad.detail
        )));
    }
    Ok(text)
}

#[derive(Serialize)]
struct ProfileReport {
    profile: ProfileJson,
    zero: Option<String>,
    area_min: String,
    identity_checked: usize,
}

fn continuous(
    partition: Option<&Partition>,
    n: Option<usize>,
    profile: Option<&PathBuf>,
    samples: usize,
    seed: u64,
    format: Format,
) -> Outcome {
    let quarter = |k: i64| Q::new(BigInt::from(k), BigInt::from(4));
    if let Some(lambda) = partition {
        let n = n.ok_or_else(|| Failure::Validation("--partition needs --n".into()))?;
        limit("enumeration", n, ENUMERATION_MAX_N)?;
        let d = discretize_profile(lambda, n)?;
        let scaled = d.scaled()?;
        return Ok(match format {
            Format::Json => json(&serde_json::json!({
                "n": n,
                "partition": lambda,
                "table": d.table(),
                "profile": ProfileJson::from(&scaled),
            })),
            Format::Text => {
                let (ts, vs): (Vec<i64>, Vec<i64>) = d.table().into_iter().unzip();
                let w = ts
                    .iter()
                    .chain(&vs)
                    .map(|x| x.to_string().len())
                    .max()
                    .unwrap_or(1);
                let row = |xs: &[i64]| {
                    xs.iter()
                        .map(|x| format!("{x:>w$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                format!("t {}\nL {}\n", row(&ts), row(&vs))
            }
        });
    }
    if let Some(path) = profile {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
        let raw: ProfileJson = serde_json::from_str(&text)
            .map_err(|e| Failure::Validation(format!("invalid profile JSON: {e}")))?;
        let f = PLFunction::try_from(raw)?;
        for k in 0..4 {
            let (lhs, rhs) = f.rectangle_identity(&(f.u() + quarter(k)));
            if lhs != rhs {
                return Err(Failure::Mismatch(format!(
                    "rectangle identity: {lhs} != {rhs}"
                )));
            }
        }
        let report = ProfileReport {
            profile: ProfileJson::from(&f),
            zero: f.zero().map(|z| z.to_string()),
            area_min: f.area_min().to_string(),
            identity_checked: 4,
        };
        return Ok(match format {
            Format::Json => json(&report),
            Format::Text => format!(
                "zero of Lambda at 2r, r = {}\nmin F = {}\n",
                report.zero.as_deref().unwrap_or("none"),
                report.area_min
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut with_zero = 0usize;
    for i in 0..samples {
        let f = random_profile(&mut rng, 6, 24);
        for k in 0..4 {
            let a = f.u() + quarter(k);
            let (lhs, rhs) = f.rectangle_identity(&a);
            if lhs != rhs {
                return Err(Failure::Mismatch(format!(
                    "sample {i}, a = {a}: {lhs} != {rhs}"
                )));
            }
        }
        with_zero += usize::from(f.zero().is_some());
    }
    Ok(match format {
        Format::Json => json(&serde_json::json!({
            "samples": samples, "seed": seed, "identity": "ok", "with_zero": with_zero
        })),
        Format::Text => format!(
            "rectangle identity holds on {samples} profiles (seed {seed}); {with_zero} have a zero\n"
        ),
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Enumerate { common, count_only } => enumerate(common, *count_only),
        Command::Vertex { common, partition } => vertex(common, partition),
        Command::Faces {
            common,
            dim,
            count_only,
        } => faces(common, *dim, *count_only),
        Command::Skeleton { common } => skeleton(common),
        Command::Project {
            common,
            svg,
            scale,
            radius,
        } => project(common, svg.as_ref(), *scale, *radius),
        Command::Verify {
            common,
            oracle,
            samples,
            seed,
        } => run_verify(common, *oracle, *samples, *seed),
        Command::Continuous {
            partition,
            n,
            profile,
            samples,
            seed,
            format,
        } => continuous(
            partition.as_ref(),
            *n,
            profile.as_ref(),
            *samples,
            *seed,
            *format,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
