//! `prelie` — command-line front end for the tree-algebra library.
//!
//! Subcommands: `enumerate`, `order`, `reduce`, `basis`, `verify`. Output
//! is deterministic for a fixed configuration (including `--seed`) and
//! comes as plain text or versioned JSON (`--format json` carries
//! `"schema_version": 1`). Set `PLGB_LOG=debug` for diagnostics on stderr.
//!
//! Exit codes: 0 success, 2 parse/input errors, 3 resource or degree cap
//! exceeded, 4 rank-defect assertion, 1 anything else (including failed
//! `verify` criteria).

use clap::{Args, Parser, Subcommand, ValueEnum};
use prelie::enumerate;
use prelie::ideal::{self, PlanarIdeal, SpanConfig};
use prelie::lie::{self, LieRenderer};
use prelie::order::cmp_trees_explain;
use prelie::parse;
use prelie::psi;
use prelie::tree::TreeNode;
use prelie::verify;
use prelie::{Alphabet, Error};
use serde_json::json;
use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "prelie",
    version,
    about = "Free pre-Lie and free Lie algebras over graded decorated rooted trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Planar,
    Nonplanar,
    Binary,
    Prelie,
    Lie,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Planar => "planar",
            Kind::Nonplanar => "nonplanar",
            Kind::Binary => "binary",
            Kind::Prelie => "prelie",
            Kind::Lie => "lie",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealName {
    /// Planar: pre-Lie relators.
    #[value(name = "J", alias = "j")]
    J,
    /// Planar: pre-Lie relators + weighted anti-symmetry.
    #[value(name = "J'", alias = "jprime")]
    JPrime,
    /// Non-planar: weighted anti-symmetry of the grafting product.
    #[value(name = "I", alias = "i")]
    I,
}

impl IdealName {
    fn name(self) -> &'static str {
        match self {
            IdealName::J => "J",
            IdealName::JPrime => "J'",
            IdealName::I => "I",
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Alphabet JSON file ({"generators":[{"name":"x","degree":1},...]});
    /// defaults to a single degree-1 generator `a`.
    #[arg(long, value_name = "PATH")]
    alphabet: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl CommonOpts {
    fn alphabet(&self) -> prelie::Result<Alphabet> {
        match &self.alphabet {
            Some(path) => Alphabet::from_json_file(path),
            None => Ok(Alphabet::single()),
        }
    }
}

fn parse_caps(s: &str) -> Result<SpanConfig, String> {
    let mut cfg = SpanConfig::default();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) =
            part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let n: usize =
            value.trim().parse().map_err(|_| format!("`{}` is not a number", value.trim()))?;
        if n == 0 {
            return Err("caps must be positive".into());
        }
        match key.trim() {
            "terms" => cfg.max_terms = n,
            "seeds" => cfg.max_seed_instances = n,
            other => return Err(format!("unknown cap `{other}` (expected `terms` or `seeds`)")),
        }
    }
    Ok(cfg)
}

#[derive(Subcommand)]
enum Command {
    /// List every tree of one degree, ascending in the monomial order.
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
        /// Tree flavour: planar, nonplanar or binary.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Homogeneous degree to list.
        #[arg(long)]
        degree: u64,
    },
    /// Sort tree expressions ascending in the monomial order.
    Order {
        #[command(flatten)]
        common: CommonOpts,
        /// Carrier whose order is used: planar or nonplanar.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Tree expressions; read from stdin (one per line) when absent.
        exprs: Vec<String>,
    },
    /// Canonical form Can(f, ideal) of a tree polynomial.
    Reduce {
        #[command(flatten)]
        common: CommonOpts,
        /// Ideal to reduce modulo: J and J' live on planar trees, I on
        /// non-planar trees.
        #[arg(long, value_enum)]
        ideal: IdealName,
        /// The polynomial f, e.g. "2*x(y) - y(x,x)".
        #[arg(long)]
        input: String,
        /// Span the ideal through this degree (default: the degree of f).
        #[arg(long)]
        max_degree: Option<u64>,
        /// Resource caps, e.g. "terms=100000,seeds=50000".
        #[arg(long, value_parser = parse_caps, default_value = "")]
        caps: SpanConfig,
    },
    /// Monomial basis at one degree: prelie lists Ψ̃(t) for every degree-n
    /// tree t; lie lists Φ(t) for t in the complement O(I)ₙ, rendered as
    /// left-normed brackets.
    Basis {
        #[command(flatten)]
        common: CommonOpts,
        /// Which basis: prelie or lie.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Homogeneous degree.
        #[arg(long)]
        degree: u64,
        /// Span the ideal through this degree (default: --degree).
        #[arg(long)]
        max_degree: Option<u64>,
        /// Resource caps, e.g. "terms=100000,seeds=50000".
        #[arg(long, value_parser = parse_caps, default_value = "")]
        caps: SpanConfig,
    },
    /// Run the thirteen end-to-end checks and print one line per criterion.
    Verify {
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 17)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("PLGB_LOG")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownGenerator(_)
        | Error::BadAlphabet(_)
        | Error::Json(_) => 2,
        Error::CapExceeded { .. } | Error::DegreeOutOfRange { .. } => 3,
        Error::RankDefect(_) => 4,
        _ => 1,
    }
}

fn run(command: Command) -> prelie::Result<ExitCode> {
    match command {
        Command::Enumerate { common, kind, degree } => cmd_enumerate(&common, kind, degree),
        Command::Order { common, kind, exprs } => cmd_order(&common, kind, exprs),
        Command::Reduce { common, ideal, input, max_degree, caps } => {
            cmd_reduce(&common, ideal, &input, max_degree, &caps)
        }
        Command::Basis { common, kind, degree, max_degree, caps } => {
            cmd_basis(&common, kind, degree, max_degree, &caps)
        }
        Command::Verify { format, seed } => cmd_verify(format, seed),
    }
}

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn cmd_enumerate(common: &CommonOpts, kind: Kind, degree: u64) -> prelie::Result<ExitCode> {
    let al = common.alphabet()?;
    let items: Vec<String> = match kind {
        Kind::Planar => enumerate::planar_by_degree(&al, degree)?
            .iter()
            .map(|t| parse::format_tree(&al, t))
            .collect(),
        Kind::Nonplanar => enumerate::nonplanar_by_degree(&al, degree)?
            .iter()
            .map(|t| parse::format_tree(&al, t))
            .collect(),
        Kind::Binary => enumerate::binary_by_degree(&al, degree)?
            .iter()
            .map(|t| parse::format_binary(&al, t))
            .collect(),
        _ => {
            return Err(Error::InvalidArgument(
                "enumerate expects --kind planar, nonplanar or binary".into(),
            ))
        }
    };
    match common.format {
        Format::Text => {
            for item in &items {
                println!("{item}");
            }
        }
        Format::Json => print_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "enumerate",
            "kind": kind.name(),
            "degree": degree,
            "count": items.len(),
            "trees": items,
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn outcome_str(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

// Sorts parsed trees and explains each adjacent comparison.
fn sort_with_steps<T: TreeNode + Ord + Clone>(
    al: &Alphabet,
    mut trees: Vec<T>,
) -> (Vec<String>, Vec<serde_json::Value>) {
    trees.sort();
    let steps = trees
        .windows(2)
        .map(|w| {
            let d = cmp_trees_explain(&w[0], &w[1]);
            json!({ "outcome": outcome_str(d.outcome), "rule": d.rule_fired })
        })
        .collect();
    (trees.iter().map(|t| parse::format_tree(al, t)).collect(), steps)
}

fn cmd_order(common: &CommonOpts, kind: Kind, exprs: Vec<String>) -> prelie::Result<ExitCode> {
    let al = common.alphabet()?;
    let exprs: Vec<String> = if exprs.is_empty() {
        std::io::read_to_string(std::io::stdin())?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect()
    } else {
        exprs
    };
    let (sorted, steps) = match kind {
        Kind::Planar => {
            let trees = exprs
                .iter()
                .map(|e| parse::parse_planar(&al, e))
                .collect::<prelie::Result<Vec<_>>>()?;
            sort_with_steps(&al, trees)
        }
        Kind::Nonplanar => {
            let trees = exprs
                .iter()
                .map(|e| parse::parse_nonplanar(&al, e))
                .collect::<prelie::Result<Vec<_>>>()?;
            sort_with_steps(&al, trees)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "order expects --kind planar or nonplanar".into(),
            ))
        }
    };
    match common.format {
        Format::Text => {
            for line in &sorted {
                println!("{line}");
            }
        }
        Format::Json => print_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "order",
            "kind": kind.name(),
            "sorted": sorted,
            "adjacent": steps,
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    common: &CommonOpts,
    ideal_name: IdealName,
    input: &str,
    max_degree: Option<u64>,
    caps: &SpanConfig,
) -> prelie::Result<ExitCode> {
    let al = common.alphabet()?;
    let spanned_to = |d: Option<u64>| -> prelie::Result<u64> {
        let input_degree = d.unwrap_or(1);
        let max = max_degree.unwrap_or(input_degree);
        if max < input_degree {
            return Err(Error::InvalidArgument(format!(
                "--max-degree {max} is below the input degree {input_degree}"
            )));
        }
        Ok(max)
    };
    let (canonical, in_ideal, max) = match ideal_name {
        IdealName::I => {
            let f = parse::parse_nonplanar_poly(&al, input)?;
            let max = spanned_to(f.max_degree())?;
            let span = ideal::span_nonplanar(&al, max, caps)?;
            let cf = ideal::can(&f, &span)?;
            (parse::format_tree_poly(&al, &cf), cf.is_zero(), max)
        }
        IdealName::J | IdealName::JPrime => {
            let kind =
                if ideal_name == IdealName::J { PlanarIdeal::J } else { PlanarIdeal::JPrime };
            let f = parse::parse_planar_poly(&al, input)?;
            let max = spanned_to(f.max_degree())?;
            let span = ideal::span_planar(&al, kind, max, caps)?;
            let cf = ideal::can(&f, &span)?;
            (parse::format_tree_poly(&al, &cf), cf.is_zero(), max)
        }
    };
    match common.format {
        Format::Text => println!("{canonical}"),
        Format::Json => print_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "reduce",
            "ideal": ideal_name.name(),
            "input": input,
            "max_degree": max,
            "canonical_form": canonical,
            "in_ideal": in_ideal,
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_basis(
    common: &CommonOpts,
    kind: Kind,
    degree: u64,
    max_degree: Option<u64>,
    caps: &SpanConfig,
) -> prelie::Result<ExitCode> {
    let al = common.alphabet()?;
    let max = max_degree.unwrap_or(degree);
    if max < degree {
        return Err(Error::InvalidArgument(format!(
            "--max-degree {max} is below --degree {degree}"
        )));
    }
    match kind {
        Kind::Prelie => {
            let pairs = psi::prelie_monomial_basis(&al, degree)?;
            let items: Vec<(String, String)> = pairs
                .iter()
                .map(|(t, p)| (parse::format_tree(&al, t), parse::format_tree_poly(&al, p)))
                .collect();
            match common.format {
                Format::Text => {
                    for (t, p) in &items {
                        println!("{t}  =>  {p}");
                    }
                }
                Format::Json => print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "basis",
                    "kind": kind.name(),
                    "degree": degree,
                    "count": items.len(),
                    "elements": items
                        .iter()
                        .map(|(t, p)| json!({ "tree": t, "image": p }))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Kind::Lie => {
            let span = ideal::span_nonplanar(&al, max, caps)?;
            let pairs = lie::lie_monomial_basis(&al, degree, &span)?;
            let renderer = LieRenderer::new(&al, degree);
            let items: Vec<(String, String, String)> = pairs
                .iter()
                .map(|(t, p)| {
                    let words = parse::format_poly(p, |w| w.format(&al));
                    // Elements of B̃ are Lie by construction, so rendering
                    // as brackets cannot fail; keep the word form as backup.
                    let brackets = renderer.render(&al, p).unwrap_or_else(|| words.clone());
                    (parse::format_tree(&al, t), brackets, words)
                })
                .collect();
            match common.format {
                Format::Text => {
                    for (t, brackets, _) in &items {
                        println!("{t}  =>  {brackets}");
                    }
                }
                Format::Json => print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "basis",
                    "kind": kind.name(),
                    "degree": degree,
                    "count": items.len(),
                    "elements": items
                        .iter()
                        .map(|(t, b, w)| json!({ "tree": t, "brackets": b, "words": w }))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        _ => {
            return Err(Error::InvalidArgument("basis expects --kind prelie or lie".into()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(format: Format, seed: u64) -> prelie::Result<ExitCode> {
    let results = verify::run_all(seed);
    let failed = results.iter().filter(|r| !r.passed).count();
    match format {
        Format::Text => {
            for r in &results {
                println!("{}", r.line());
            }
            println!("{} of {} criteria passed", results.len() - failed, results.len());
        }
        Format::Json => print_json(json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "seed": seed,
            "passed": results.len() - failed,
            "failed": failed,
            "results": results
                .iter()
                .map(|r| json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed,
                    "details": r.details,
                }))
                .collect::<Vec<_>>(),
        })),
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_parser_accepts_both_keys_in_any_order() {
        let cfg = parse_caps("seeds=7,terms=9").unwrap();
        assert_eq!((cfg.max_seed_instances, cfg.max_terms), (7, 9));
        let cfg = parse_caps("terms=5").unwrap();
        assert_eq!(cfg.max_terms, 5);
        assert_eq!(cfg.max_seed_instances, SpanConfig::default().max_seed_instances);
        assert_eq!(parse_caps("").unwrap().max_terms, SpanConfig::default().max_terms);
        assert!(parse_caps("depth=3").is_err());
        assert!(parse_caps("terms=0").is_err());
        assert!(parse_caps("terms").is_err());
    }

    #[test]
    fn exit_codes_separate_error_classes() {
        assert_eq!(exit_code(&Error::Parse { pos: 0, msg: "x".into() }), 2);
        assert_eq!(exit_code(&Error::UnknownGenerator("z".into())), 2);
        assert_eq!(exit_code(&Error::CapExceeded { what: "terms".into(), limit: 1 }), 3);
        assert_eq!(exit_code(&Error::DegreeOutOfRange { requested: 9, available: 5 }), 3);
        assert_eq!(exit_code(&Error::RankDefect("r".into())), 4);
        assert_eq!(exit_code(&Error::ZeroPolynomial), 1);
    }
}
