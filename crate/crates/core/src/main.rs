//! Command-line surface: line counts, degeneration splittings, identity
//! sweeps, normal-bundle types, and witness checks. Human tables go to
//! stdout (big numbers grouped with commas); `--json` switches to the
//! deterministic machine-readable envelope. Exit code 0 means every
//! emitted row is ok, 1 means a symbolic identity failed, 2 means bad
//! arguments.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubert_lines::degeneration::{self, DegenError};
use schubert_lines::output::{chow_to_human, chow_to_json, group_digits, OutputEnvelope, Status};
use schubert_lines::sweep;
use schubert_lines::witness::{witness_report, WitnessProblem};

#[derive(Parser)]
#[command(name = "schubert-lines", version, about = "Exact class computations for lines on degenerating hypersurfaces")]
struct Cli {
    /// Emit the machine-readable JSON envelope instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress human-readable output (exit code and JSON only).
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class and count of the lines on a generic degree-d hypersurface.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Splitting of the line class under degeneration into degrees k and d-k.
    Split {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
    },
    /// Sweep one of the symbolic identities over a parameter grid.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        /// Bound on k + l for the thm33 sweep.
        #[arg(long, default_value_t = 10)]
        max_sum: u32,
        /// Bound on k for the prop311 sweep.
        #[arg(long, default_value_t = 6)]
        max_k: u32,
        /// Bound on l for the prop311, lemma34, eq36 and lemma37 sweeps.
        #[arg(long, default_value_t = 6)]
        max_l: u32,
    },
    /// Admissible normal-bundle splitting types of lines on a generic
    /// degree-k hypersurface.
    NormalTypes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Exact linear-algebra checks on the explicit witness family.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum VerifyKind {
    /// Top-class splitting identity.
    Thm33,
    /// Degeneracy-locus multiplicity factorization.
    Prop311,
    /// Closed form of the Segre coefficients.
    Lemma34,
    /// Partial-fraction residue sum.
    Eq36,
    /// Alternating binomial power-sum vanishing.
    Lemma37,
}

struct Rendered {
    envelope: OutputEnvelope,
    lines: Vec<String>,
}

fn argument_error(command: &str, message: &str) -> Rendered {
    eprintln!("error: {message}");
    let mut envelope = OutputEnvelope::new(command);
    envelope.status = Status::ArgumentError;
    envelope.results = vec![json!({ "error": message })];
    Rendered {
        envelope,
        lines: Vec::new(),
    }
}

fn cmd_count(n: u32, d: u32) -> Rendered {
    let class = match degeneration::total_class(n, d) {
        Ok(class) => class,
        Err(DegenError::InvalidArgument(msg)) => return argument_error("count", &msg),
    };
    let mut envelope = OutputEnvelope::new("count").param("n", n).param("d", d);
    let mut lines = Vec::new();
    let mut result = json!({ "class": chow_to_json(&class) });
    if d == 2 * n - 3 {
        let count = schubert_lines::integrate(&class).expect("top-degree class");
        result["count"] = json!(count.to_string());
        lines.push(format!("lines on a generic degree-{d} hypersurface in P^{n}: {}", group_digits(&count)));
    } else {
        lines.push(format!("class of lines (n={n}, d={d}): {}", chow_to_human(&class)));
    }
    envelope.results = vec![result];
    Rendered { envelope, lines }
}

fn cmd_split(n: u32, d: u32, k: u32) -> Rendered {
    let report = match degeneration::report(n, d, k) {
        Ok(r) => r,
        Err(DegenError::InvalidArgument(msg)) => return argument_error("split", &msg),
    };
    let mut envelope = OutputEnvelope::new("split")
        .param("n", n)
        .param("d", d)
        .param("k", k);
    let flag = if report.sum_matches { "ok" } else { "MISMATCH" };
    let mut result = json!({
        "k": report.k,
        "l": report.l,
        "class_k": chow_to_json(&report.class_k),
        "class_l": chow_to_json(&report.class_l),
        "total": chow_to_json(&report.total),
        "sum_matches": report.sum_matches,
    });
    let line = if let Some((ck, cl, ct)) = &report.counts {
        result["counts"] = json!({
            "k": ck.to_string(),
            "l": cl.to_string(),
            "total": ct.to_string(),
        });
        format!(
            "{} | {} | {} | {}",
            group_digits(ck),
            group_digits(cl),
            group_digits(ct),
            flag
        )
    } else {
        format!(
            "{} | {} | {} | {}",
            chow_to_human(&report.class_k),
            chow_to_human(&report.class_l),
            chow_to_human(&report.total),
            flag
        )
    };
    envelope.results = vec![result];
    if !report.sum_matches {
        envelope.status = Status::IdentityViolation;
    }
    Rendered {
        envelope,
        lines: vec![line],
    }
}

fn cmd_verify(kind: VerifyKind, max_sum: u32, max_k: u32, max_l: u32) -> Rendered {
    let mut envelope = OutputEnvelope::new("verify");
    let mut results = Vec::new();
    let mut failures = Vec::new();
    match kind {
        VerifyKind::Thm33 => {
            envelope = envelope.param("kind", "thm33").param("max_sum", max_sum);
            for cell in sweep::splitting_identity_sweep(max_sum) {
                let (k, l) = cell.params;
                if !cell.result {
                    failures.push(format!("k={k}, l={l}"));
                }
                results.push(json!({ "k": k, "l": l, "ok": cell.result }));
            }
        }
        VerifyKind::Prop311 => {
            envelope = envelope
                .param("kind", "prop311")
                .param("max_k", max_k)
                .param("max_l", max_l);
            for cell in sweep::multiplicity_sweep(max_k, max_l) {
                let (k, l) = cell.params;
                let (ok, lambda) = cell.result;
                if !ok {
                    failures.push(format!("k={k}, l={l}"));
                }
                results.push(json!({ "k": k, "l": l, "ok": ok, "lambda": lambda.to_string() }));
            }
        }
        VerifyKind::Lemma34 => {
            envelope = envelope.param("kind", "lemma34").param("max_l", max_l);
            for cell in sweep::segre_closed_form_sweep(max_l) {
                if !cell.result {
                    failures.push(format!("l={}", cell.params));
                }
                results.push(json!({ "l": cell.params, "ok": cell.result }));
            }
        }
        VerifyKind::Eq36 => {
            envelope = envelope.param("kind", "eq36").param("max_l", max_l);
            for cell in sweep::vandermonde_sum_sweep(max_l) {
                if !cell.result {
                    failures.push(format!("l={}", cell.params));
                }
                results.push(json!({ "l": cell.params, "ok": cell.result }));
            }
        }
        VerifyKind::Lemma37 => {
            envelope = envelope.param("kind", "lemma37").param("max_l", max_l);
            for cell in sweep::power_sum_sweep(max_l) {
                if !cell.result {
                    failures.push(format!("l={}", cell.params));
                }
                results.push(json!({ "l": cell.params, "ok": cell.result }));
            }
        }
    }
    let total = results.len();
    let mut lines = Vec::new();
    if failures.is_empty() {
        lines.push(format!("all {total} cells pass"));
    } else {
        envelope.status = Status::IdentityViolation;
        lines.push(format!(
            "{} of {total} cells FAILED; first counterexample: {}",
            failures.len(),
            failures[0]
        ));
    }
    envelope.results = results;
    Rendered { envelope, lines }
}

fn cmd_normal_types(n: u32, k: u32) -> Rendered {
    let types = match degeneration::normal_bundle_types(n, k) {
        Ok(t) => t,
        Err(DegenError::InvalidArgument(msg)) => return argument_error("normal-types", &msg),
    };
    let mut envelope = OutputEnvelope::new("normal-types").param("n", n).param("k", k);
    let mut lines = Vec::new();
    if types.is_empty() {
        eprintln!("note: k > 2n - 3, a generic degree-{k} hypersurface in P^{n} contains no lines");
        lines.push("no admissible types".to_string());
    }
    for t in &types {
        let entries: Vec<String> = t.entries().iter().map(|e| e.to_string()).collect();
        lines.push(format!("({})", entries.join(",")));
    }
    envelope.results = types
        .iter()
        .map(|t| json!({ "type": t.entries() }))
        .collect();
    Rendered { envelope, lines }
}

fn cmd_witness(n: u32, d: u32, k: u32) -> Rendered {
    let problem = match WitnessProblem::new(n, d, k) {
        Ok(p) => p,
        Err(e) => return argument_error("witness", &e.to_string()),
    };
    let report = witness_report(&problem);
    let mut envelope = OutputEnvelope::new("witness")
        .param("n", n)
        .param("d", d)
        .param("k", k);
    envelope.results = vec![json!({
        "phi_surjective": report.phi_surjective,
        "kernel_dim": report.kernel_dim,
        "expected_kernel_dim": report.expected_kernel_dim,
        "restriction_surjective": report.restriction_surjective,
        "nodes_distinct": report.nodes_distinct,
    })];
    let lines = vec![
        format!("phi surjective:         {}", report.phi_surjective),
        format!(
            "kernel dimension:       {} (expected {})",
            report.kernel_dim, report.expected_kernel_dim
        ),
        format!("restriction surjective: {}", report.restriction_surjective),
        format!("nodes distinct:         {}", report.nodes_distinct),
    ];
    if !report.all_pass() {
        envelope.status = Status::IdentityViolation;
    }
    Rendered { envelope, lines }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match cli.command {
        Command::Count { n, d } => cmd_count(n, d),
        Command::Split { n, d, k } => cmd_split(n, d, k),
        Command::Verify {
            kind,
            max_sum,
            max_k,
            max_l,
        } => cmd_verify(kind, max_sum, max_k, max_l),
        Command::NormalTypes { n, k } => cmd_normal_types(n, k),
        Command::Witness { n, d, k } => cmd_witness(n, d, k),
    };
    if cli.json {
        println!("{}", rendered.envelope.to_json());
    } else if !cli.quiet {
        for line in &rendered.lines {
            println!("{line}");
        }
    }
    ExitCode::from(rendered.envelope.status.exit_code())
}
