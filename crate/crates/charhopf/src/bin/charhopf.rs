//! Command-line surface over the symmetric-function ring, the deformed
//! products and kernels, the identity checkers and the knot invariants.
//! Every subcommand is deterministic: identical inputs yield byte-identical
//! output. Exit codes: 0 success, 1 a check found a violated identity,
//! 2 parse/usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use charhopf::{
    braid::{link_stats, BraidWord},
    knot::{invariant_closed_form, invariant_direct},
    parse::{parse_partition, parse_symfunc},
    pideform::{check_cocycle, check_yang_baxter, pi_product, PiContext},
    report::CheckReport,
    schur::{antipode, check_hopf, coproduct, outer_product, schur_hall, skew, SymFunc},
    series::{series, SeriesKind},
    Partition, TensorSF,
};

#[derive(Parser)]
#[command(
    name = "charhopf",
    version,
    about = "Exact symmetric-function Hopf algebra, deformed character products and knot invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring operations in the Schur basis
    Sf {
        #[command(subcommand)]
        op: SfOp,
    },
    /// Truncated symmetric-function series
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
    /// Deformed structure indexed by a partition
    Pi {
        #[command(subcommand)]
        op: PiOp,
    },
    /// Exhaustive identity checks (exit 1 on a violation)
    Check {
        #[command(subcommand)]
        op: CheckOp,
    },
    /// Braid-closure invariants and statistics
    Knot {
        #[command(subcommand)]
        op: KnotOp,
    },
}

#[derive(Subcommand)]
enum SfOp {
    /// Outer product of two expressions
    Mult {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Skew lhs by rhs
    Skew {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Outer coproduct
    Coprod {
        #[arg(long)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Antipode
    Antipode {
        #[arg(long)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Schur-Hall scalar product
    Scalar {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Plethysm lhs[rhs]
    Plethysm {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SeriesOp {
    /// Print a truncated series
    Show {
        #[arg(long)]
        pi: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    M,
    L,
}

#[derive(Subcommand)]
enum PiOp {
    /// Deformed character product
    Product {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Generalised Cauchy kernel
    Rker {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cauchy scalar
    Qpi {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CheckOp {
    /// Braid relation on all basis triples within the degree window
    YangBaxter {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        degree: u32,
    },
    /// Scalar 2-cocycle identity and associativity of the deformed product
    Cocycle {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        weight: u32,
    },
    /// Hopf axioms of the undeformed ring
    Hopf {
        #[arg(long)]
        weight: u32,
    },
}

#[derive(Subcommand)]
enum KnotOp {
    /// Invariant of a braid closure
    Invariant {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        braid: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        strands: Option<usize>,
        /// Evaluate the sliced tangle directly instead of the closed form
        /// (single-component closures only)
        #[arg(long)]
        direct: bool,
        #[arg(long)]
        json: bool,
    },
    /// Permutation, components, writhes and linking numbers
    Stats {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> charhopf::Result<ExitCode> {
    match cli.command {
        Command::Sf { op } => run_sf(op)?,
        Command::Series { op } => run_series(op)?,
        Command::Pi { op } => run_pi(op)?,
        Command::Check { op } => return run_check(op),
        Command::Knot { op } => run_knot(op)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn print_symfunc(f: &SymFunc, json: bool) {
    if json {
        println!("{}", f.to_json());
    } else {
        println!("{}", f);
    }
}

fn print_tensor(t: &TensorSF, json: bool) {
    if json {
        println!("{}", t.to_json());
    } else {
        println!("{}", t);
    }
}

fn run_sf(op: SfOp) -> charhopf::Result<()> {
    match op {
        SfOp::Mult { lhs, rhs, json } => {
            let f = parse_symfunc(&lhs)?;
            let g = parse_symfunc(&rhs)?;
            print_symfunc(&outer_product(&f, &g), json);
        }
        SfOp::Skew { lhs, rhs, json } => {
            let f = parse_symfunc(&lhs)?;
            let g = parse_symfunc(&rhs)?;
            print_symfunc(&skew(&f, &g), json);
        }
        SfOp::Coprod { f, json } => {
            let f = parse_symfunc(&f)?;
            print_tensor(&coproduct(&f), json);
        }
        SfOp::Antipode { f, json } => {
            let f = parse_symfunc(&f)?;
            print_symfunc(&antipode(&f), json);
        }
        SfOp::Scalar { lhs, rhs } => {
            let f = parse_symfunc(&lhs)?;
            let g = parse_symfunc(&rhs)?;
            println!("{}", schur_hall(&f, &g));
        }
        SfOp::Plethysm { lhs, rhs, json } => {
            let f = parse_symfunc(&lhs)?;
            let g = parse_symfunc(&rhs)?;
            print_symfunc(&charhopf::plethysm::plethysm(&f, &g), json);
        }
    }
    Ok(())
}

/// Optional on-disk cache of computed series, keyed by (kind, pi, degree).
fn series_cache_path(pi: &Partition, kind: SeriesKind, degree: u32) -> Option<PathBuf> {
    let dir = std::env::var_os("CHARHOPF_CACHE_DIR")?;
    let tag = if pi.is_empty() {
        "0".to_string()
    } else {
        pi.parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("-")
    };
    Some(PathBuf::from(dir).join(format!("series_{}_{}_{}.json", kind, tag, degree)))
}

fn run_series(op: SeriesOp) -> charhopf::Result<()> {
    match op {
        SeriesOp::Show {
            pi,
            kind,
            degree,
            json,
        } => {
            let pi = parse_partition(&pi)?;
            let kind = match kind {
                KindArg::M => SeriesKind::M,
                KindArg::L => SeriesKind::L,
            };
            let cache = series_cache_path(&pi, kind, degree);
            let value = match cache.as_ref().and_then(|p| std::fs::read_to_string(p).ok()) {
                Some(text) => {
                    let v: serde_json::Value = serde_json::from_str(&text)
                        .map_err(|e| charhopf::Error::Parse(format!("bad cache file: {}", e)))?;
                    SymFunc::from_json(&v)?
                }
                None => {
                    let value = series(&pi, kind, degree)?.value;
                    if let Some(path) = cache {
                        if let Some(parent) = path.parent() {
                            let _ = std::fs::create_dir_all(parent);
                        }
                        let _ = std::fs::write(&path, value.to_json().to_string());
                    }
                    value
                }
            };
            print_symfunc(&value, json);
        }
    }
    Ok(())
}

fn run_pi(op: PiOp) -> charhopf::Result<()> {
    match op {
        PiOp::Product { pi, lhs, rhs, json } => {
            let ctx = PiContext::new(parse_partition(&pi)?);
            let f = parse_symfunc(&lhs)?;
            let g = parse_symfunc(&rhs)?;
            print_symfunc(&pi_product(&ctx, &f, &g), json);
        }
        PiOp::Rker { pi, degree, json } => {
            let ctx = PiContext::new(parse_partition(&pi)?);
            print_tensor(&ctx.r_kernel(degree), json);
        }
        PiOp::Qpi { pi, degree, json } => {
            let ctx = PiContext::new(parse_partition(&pi)?);
            print_symfunc(&ctx.q_scalar(degree), json);
        }
    }
    Ok(())
}

fn finish_check(report: CheckReport) -> ExitCode {
    if report.is_ok() {
        println!("OK ({} identities verified)", report.checked);
        ExitCode::SUCCESS
    } else {
        println!(
            "FAILED {}: {} of {} identities violated",
            report.name,
            report.failures.len(),
            report.checked
        );
        for f in &report.failures {
            println!("  counterexample: {}", f);
        }
        ExitCode::from(1)
    }
}

fn run_check(op: CheckOp) -> charhopf::Result<ExitCode> {
    let report = match op {
        CheckOp::YangBaxter { pi, degree } => {
            check_yang_baxter(&PiContext::new(parse_partition(&pi)?), degree)
        }
        CheckOp::Cocycle { pi, weight } => {
            check_cocycle(&PiContext::new(parse_partition(&pi)?), weight)
        }
        CheckOp::Hopf { weight } => check_hopf(weight),
    };
    Ok(finish_check(report))
}

fn run_knot(op: KnotOp) -> charhopf::Result<()> {
    match op {
        KnotOp::Invariant {
            pi,
            braid,
            degree,
            strands,
            direct,
            json,
        } => {
            let ctx = PiContext::new(parse_partition(&pi)?);
            let b = BraidWord::parse(&braid, strands)?;
            let stats = link_stats(&b);
            let w = b.writhe();
            let invariant = if direct {
                let f = invariant_direct(&ctx, &b, &SymFunc::one(), degree)?;
                TensorSF::from_symfunc(&f, charhopf::Orientation::Primal)
            } else {
                invariant_closed_form(&ctx, &b, degree)
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "writhe": w,
                        "components": stats.component_count(),
                        "component_writhes": stats.component_writhes,
                        "linking_matrix": stats.linking_matrix,
                        "invariant": invariant.to_json(),
                    })
                );
            } else if stats.component_count() == 1 {
                println!("w = {}", w);
                println!("Q^{} = {}", w, invariant.clone().into_symfunc());
            } else {
                let writhes = stats
                    .component_writhes
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                println!(
                    "w = {}, components = {}, component writhes = [{}]",
                    w,
                    stats.component_count(),
                    writhes
                );
                for i in 0..stats.component_count() {
                    for j in (i + 1)..stats.component_count() {
                        println!("lk({},{}) = {}", i + 1, j + 1, stats.linking_matrix[i][j]);
                    }
                }
                println!("I = {}", invariant);
            }
        }
        KnotOp::Stats {
            braid,
            strands,
            json,
        } => {
            let b = BraidWord::parse(&braid, strands)?;
            let stats = link_stats(&b);
            if json {
                println!("{}", stats.to_json(&b));
            } else {
                println!(
                    "strands = {}, length = {}, writhe = {}",
                    b.strands(),
                    b.length(),
                    b.writhe()
                );
                let kappa = stats
                    .permutation
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!("kappa = [{}]", kappa);
                for (i, comp) in stats.components.iter().enumerate() {
                    let strands = comp
                        .iter()
                        .map(|v| (v + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "component {}: strands [{}], writhe {}",
                        i + 1,
                        strands,
                        stats.component_writhes[i]
                    );
                }
                for i in 0..stats.component_count() {
                    for j in (i + 1)..stats.component_count() {
                        println!("lk({},{}) = {}", i + 1, j + 1, stats.linking_matrix[i][j]);
                    }
                }
            }
        }
    }
    Ok(())
}
