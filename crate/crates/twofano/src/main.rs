use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twofano::algebra::{parse_rational, Partition};
use twofano::catalog::{self, Catalog, Summary};
use twofano::chern;
use twofano::classifier as cl;
use twofano::error::{Error, Result};
use twofano::schubert;

#[derive(Parser)]
#[command(name = "twofano", version, about = "Exact Chern-character computations and 2-Fano classification checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-verify catalog entries; exit status 1 if any entry fails.
    Verify {
        /// Catalog file (the shipped catalog by default).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Verify only this entry.
        #[arg(long)]
        entry: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the rank and ch1..ch3 of a space.
    Ch {
        /// proj:n, wproj:a0,a1,..., grassmannian:k,n, og:k,n, ogplus:k, sg:k,n, g2p2 or product:n1,n2,...
        #[arg(long)]
        space: String,
    },
    /// Decide the status of a complete intersection.
    #[command(subcommand)]
    Classify(Classify),
    /// Schubert calculus on G(k,n).
    #[command(subcommand)]
    Schubert(SchubertCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Classify {
    /// Complete intersection in P^N.
    CiProj {
        #[arg(long)]
        ambient_dim: u32,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Complete intersection in a weighted projective space.
    CiWeighted {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Complete intersection of hypersurfaces in G(k,n).
    CiGrass {
        #[command(flatten)]
        g: GrassArgs,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Codimension-c linear section of G(k,n).
    LinearGrass {
        #[command(flatten)]
        g: GrassArgs,
        #[arg(long)]
        c: u32,
    },
    /// Complete intersection in OG+(k,2k).
    CiOgplus {
        #[arg(long)]
        k: u32,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Complete intersection in SG(k,2k).
    CiSg {
        #[arg(long)]
        k: u32,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Complete intersection in a Picard-rank-one manifold with b4 = 1 and ch2 = a H^2.
    CiB4one {
        #[arg(long, default_value = "Y")]
        name: String,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        index: u32,
        /// Coefficient of H^2 in ch2, e.g. 1/2.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
}

#[derive(Args)]
struct GrassArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Product of Schubert classes, e.g. `mul --k 3 --n 7 2,1 2,1`.
    Mul {
        #[command(flatten)]
        g: GrassArgs,
        #[arg(required = true)]
        partitions: Vec<String>,
    },
    /// Degree of a product of Schubert classes.
    Degree {
        #[command(flatten)]
        g: GrassArgs,
        #[arg(required = true)]
        partitions: Vec<String>,
    },
    /// Poincaré dual partition.
    Dual {
        #[command(flatten)]
        g: GrassArgs,
        partition: String,
    },
}

fn parse_partition(s: &str) -> Result<Partition> {
    let t = s.trim();
    if t.is_empty() || t == "0" {
        return Partition::new(Vec::new());
    }
    let parts =
        t.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition `{s}`")))).collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn partitions(v: &[String]) -> Result<Vec<Partition>> {
    v.iter().map(|s| parse_partition(s)).collect()
}

fn run_verify(path: Option<PathBuf>, entry: Option<String>, format: Format) -> Result<bool> {
    let cat = match path {
        Some(p) => Catalog::load(&p)?,
        None => Catalog::parse(catalog::DEFAULT_CATALOG)?,
    };
    let summary = match entry {
        Some(id) => {
            let e = cat.get(&id).ok_or_else(|| Error::Catalog(format!("no entry `{id}`")))?;
            Summary::new(vec![catalog::verify_entry(e, &cat)])
        }
        None => catalog::verify_all(&cat),
    };
    let out = match format {
        Format::Text => summary.to_text(),
        Format::Tsv => summary.to_tsv(),
        Format::Json => summary.to_json() + "\n",
    };
    emit(&out);
    Ok(summary.all_pass())
}

fn run_classify(c: Classify) -> Result<cl::Verdict> {
    match c {
        Classify::CiProj { ambient_dim, degrees } => cl::classify_ci_proj(ambient_dim, &degrees),
        Classify::CiWeighted { weights, degrees } => cl::classify_ci_weighted(&weights, &degrees),
        Classify::CiGrass { g, degrees } => cl::classify_ci_grass(g.k, g.n, &degrees),
        Classify::LinearGrass { g, c } => cl::classify_linear_section_grass(g.k, g.n, c),
        Classify::CiOgplus { k, degrees } => cl::classify_ci_og_plus(k, &degrees),
        Classify::CiSg { k, degrees } => cl::classify_ci_sg(k, &degrees),
        Classify::CiB4one { name, dim, index, a, degrees } => cl::classify_rank_one_b4(&name, dim, index, &parse_rational(&a)?, &degrees),
    }
}

fn run_schubert(c: SchubertCmd) -> Result<String> {
    match c {
        SchubertCmd::Mul { g, partitions: ps } => Ok(schubert::multiply_many(g.k, g.n, &partitions(&ps)?)?.to_string()),
        SchubertCmd::Degree { g, partitions: ps } => Ok(schubert::degree(&schubert::multiply_many(g.k, g.n, &partitions(&ps)?)?)?.to_string()),
        SchubertCmd::Dual { g, partition } => Ok(schubert::dual_class(g.k, g.n, &parse_partition(&partition)?)?.to_string()),
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<bool> = match cli.command {
        Command::Verify { catalog, entry, format } => run_verify(catalog, entry, format),
        Command::Ch { space } => chern::ch_from_space_spec(&space).map(|chs| {
            let mut s = String::new();
            for (i, c) in chs.iter().enumerate() {
                if chs.len() > 1 {
                    s += &format!("factor {}:\n", i + 1);
                }
                s += &c.to_string();
            }
            emit(&s);
            true
        }),
        Command::Classify(c) => run_classify(c).map(|v| {
            emit(&v.to_string());
            true
        }),
        Command::Schubert(c) => run_schubert(c).map(|s| {
            emit(&format!("{s}\n"));
            true
        }),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
