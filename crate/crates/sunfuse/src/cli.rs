//! The `sunfuse` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a basis verification finds
//! mismatches, 2 for bad input (including argument parsing), 3 for
//! internal inconsistencies.

use clap::{Parser, Subcommand};

use crate::affine::{kac_walton, threshold_levels};
use crate::basis::{
    construct_fusion_basis, elementary_tensor_couplings, fusion_elementaries, verify_basis,
    ElementaryCoupling,
};
use crate::error::{Error, Result};
use crate::tableaux::{tensor_decompose, var_names};
use crate::weights::{affine_extend, AffineWeight, FiniteWeight};

#[derive(Parser)]
#[command(
    name = "sunfuse",
    version,
    about = "Exact su(N) tensor products, fusion coefficients, threshold levels, and fusion bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the su(N) tensor product λ ⊗ μ
    Tensor {
        /// The N of su(N)
        n: usize,
        /// First factor in Dynkin labels, e.g. "(2)" or "(1,1)"
        lambda: String,
        /// Second factor
        mu: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Compute the ŝu(N) fusion product λ × μ at a level
    Fuse {
        /// The N of su(N)
        n: usize,
        /// The level k
        #[arg(allow_hyphen_values = true)]
        level: i64,
        /// First factor (finite weight), e.g. "(2)"
        lambda: String,
        /// Second factor
        mu: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// List the threshold levels of the coupling λ ⊗ μ ⊃ ν
    Threshold {
        /// The N of su(N)
        n: usize,
        /// First factor
        lambda: String,
        /// Second factor
        mu: String,
        /// Coupled weight
        nu: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// List the elementary couplings of su(N)
    Elementary {
        /// The N of su(N) (2, 3 or 4)
        n: usize,
        /// List elementary fusion couplings (with a level coordinate)
        #[arg(long)]
        fusion: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Construct the su(N) fusion basis and verify it on a grid
    Basis {
        /// The N of su(N) (2, 3 or 4)
        n: usize,
        /// Verify all weights with labels up to this bound
        #[arg(long, default_value_t = 2)]
        verify_labels: i64,
        /// Verify all levels up to this bound
        #[arg(long, default_value_t = 4)]
        verify_level: i64,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("sunfuse: {e}");
            e.exit_code()
        }
    }
}

fn parse_finite(s: &str, rank_n: usize) -> Result<FiniteWeight> {
    let w = FiniteWeight::parse(s)?;
    if w.rank_n() != rank_n {
        return Err(Error::RankMismatch(format!(
            "{w} is an su({}) weight, expected su({rank_n})",
            w.rank_n()
        )));
    }
    Ok(w)
}

fn vector_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn coupling_line(e: &ElementaryCoupling) -> String {
    let triple = if e.is_fusion() {
        let (l, m, v) = e.affine_triple();
        format!("{l} × {m} ⊃ {v}")
    } else {
        format!("{} ⊗ {} ⊃ {}", e.lambda(), e.mu(), e.nu())
    };
    format!("{}  {}  {}  k0={}", e.name(), vector_str(e.vector()), triple, e.threshold())
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Tensor { n, lambda, mu, json } => {
            let lam = parse_finite(&lambda, n)?;
            let mu = parse_finite(&mu, n)?;
            let terms = tensor_decompose(&lam, &mu)?;
            if json {
                let terms_json: Vec<serde_json::Value> = terms
                    .iter()
                    .map(|(nu, mult)| serde_json::json!({"mult": mult, "nu": nu.labels()}))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "algebra": format!("su({n})"),
                        "lambda": lam.labels(),
                        "mu": mu.labels(),
                        "terms": terms_json,
                    })
                );
            } else {
                let parts: Vec<String> =
                    terms.iter().map(|(nu, mult)| format!("{nu}:{mult}")).collect();
                println!("{}", parts.join(" "));
            }
            Ok(0)
        }
        Command::Fuse { n, level, lambda, mu, json } => {
            let lam = parse_finite(&lambda, n)?;
            let mu = parse_finite(&mu, n)?;
            for w in [&lam, &mu] {
                if !w.is_integrable() {
                    return Err(Error::Domain(format!("{w} has a negative label")));
                }
                if w.label_sum() > level {
                    return Err(Error::Domain(format!("{w} does not fit at level {level}")));
                }
            }
            let result = kac_walton(level, &affine_extend(&lam, level), &affine_extend(&mu, level))?;
            // order by the finite part, ascending
            let mut items: Vec<(AffineWeight, i64)> = result.coefficients.into_iter().collect();
            items.sort_by_key(|(w, _)| w.finite_part().labels().to_vec());
            if json {
                let terms_json: Vec<serde_json::Value> = items
                    .iter()
                    .map(|(w, c)| serde_json::json!({"coeff": c, "nu": w.labels()}))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "algebra": format!("su({n})"),
                        "lambda": lam.labels(),
                        "level": level,
                        "mu": mu.labels(),
                        "terms": terms_json,
                    })
                );
            } else {
                let parts: Vec<String> = items.iter().map(|(w, c)| format!("{w}:{c}")).collect();
                println!("{}", parts.join(" "));
            }
            Ok(0)
        }
        Command::Threshold { n, lambda, mu, nu, json } => {
            let lam = parse_finite(&lambda, n)?;
            let mu = parse_finite(&mu, n)?;
            let nu = parse_finite(&nu, n)?;
            let ks = threshold_levels(&lam, &mu, &nu)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "algebra": format!("su({n})"),
                        "lambda": lam.labels(),
                        "mu": mu.labels(),
                        "nu": nu.labels(),
                        "thresholds": ks,
                    })
                );
            } else {
                let parts: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
                println!("{}", parts.join(" "));
            }
            Ok(0)
        }
        Command::Elementary { n, fusion, json } => {
            let couplings = if fusion {
                fusion_elementaries(n)?
            } else {
                elementary_tensor_couplings(n)?
            };
            if json {
                let list: Vec<serde_json::Value> = couplings.iter().map(|e| e.to_json()).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "algebra": format!("su({n})"),
                        "couplings": list,
                        "fusion": fusion,
                        "vars": var_names(n, fusion),
                    })
                );
            } else {
                for e in &couplings {
                    println!("{}", coupling_line(e));
                }
            }
            Ok(0)
        }
        Command::Basis { n, verify_labels, verify_level, json } => {
            let mut basis = construct_fusion_basis(n)?;
            let report = verify_basis(&basis, verify_labels, verify_level)?;
            let mismatch_count = report.mismatches.len();
            basis.record_verification(report);
            if json {
                println!("{}", basis.to_json());
            } else {
                println!("fusion basis for su({n})");
                println!("vars: {}", basis.system().vars().join(" "));
                for row in basis.system().rows() {
                    println!("{}", basis.system().render_row(row));
                }
                println!("elementary couplings:");
                for e in basis.elementaries() {
                    println!("{}", coupling_line(e));
                }
                println!("V:");
                for row in basis.v_matrix() {
                    println!("{row:?}");
                }
                let r = basis.verified().expect("just recorded");
                println!(
                    "verify (labels <= {}, level <= {}): cells={}, mismatches: {}",
                    r.max_label,
                    r.max_level,
                    r.cells,
                    r.mismatches.len()
                );
                for m in &r.mismatches {
                    println!(
                        "  mismatch at k={}: {} x {} > {}: counted {}, expected {}",
                        m.k, m.lambda, m.mu, m.nu, m.count, m.expected
                    );
                }
            }
            Ok(if mismatch_count > 0 { 1 } else { 0 })
        }
    }
}
