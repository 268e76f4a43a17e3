//! kacgen: enumerate the elliptic (twisted) conjugacy classes of a classical
//! Weyl group, print the characteristic polynomial and Kac diagram of any
//! class, and run the exact verification campaigns.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3
//! unsupported type or rank, 4 inadmissible partition.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use kacgen_core::charpoly::{canonical_m, formula_charpoly, Rep};
use kacgen_core::kac::{kac_diagram, render_ascii, render_json};
use kacgen_core::lifts::{element_order, lift, order_mod_center};
use kacgen_core::verify::{self, CaseOutcome};
use kacgen_core::weyl::is_regular_elliptic_partition;
use kacgen_core::{Error, Family, Partition, TypeTag};

#[derive(Parser)]
#[command(name = "kacgen", version, about = "Elliptic classes, characteristic polynomials, and Kac diagrams for classical Weyl groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elliptic classes of one type, one line per class
    Classes {
        /// Group type: A, B, C, D, 2A, or 2D
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
    },
    /// Print the Kac diagram of one class
    Diagram {
        /// Group type: A, B, C, D, 2A, or 2D
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Comma-separated parts, e.g. 5,4,4,1
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Keep the common label factor instead of normalizing it away
        #[arg(long)]
        raw: bool,
    },
    /// Print the characteristic polynomial attached to one class
    Charpoly {
        /// Group type: A, B, C, D, 2A, or 2D
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Comma-separated parts, e.g. 5,4,4,1
        #[arg(long)]
        partition: String,
    },
    /// Run a verification campaign and report one line per case
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Restrict to one group type (default: every type the suite covers)
        #[arg(long = "type")]
        family: Option<String>,
        /// Override the suite's default rank cap
        #[arg(long)]
        max_rank: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Expanded characteristic polynomials are pairwise distinct per rank
    Injectivity,
    /// Closed formula agrees with the matrix characteristic polynomial
    Oracle,
    /// Worked example diagrams reproduce exactly
    Examples,
    /// Brute-force check that powers stay conjugate over coprime exponents
    Rationality,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classes { family, rank } => cmd_classes(&family, rank),
        Command::Diagram { family, rank, partition, format, raw } => {
            cmd_diagram(&family, rank, &partition, format, raw)
        }
        Command::Charpoly { family, rank, partition } => cmd_charpoly(&family, rank, &partition),
        Command::Verify { suite, family, max_rank } => cmd_verify(suite, family.as_deref(), max_rank),
    };
    ExitCode::from(code)
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::UnsupportedType { .. } | Error::RankCapExceeded { .. } => 3,
        Error::InadmissiblePartition { .. } | Error::NotElliptic { .. } => 4,
        Error::InvalidPartition(_) => 2,
        _ => 1,
    }
}

fn fail(err: &Error) -> u8 {
    eprintln!("kacgen: {err}");
    exit_for(err)
}

/// Parses a type name plus rank, mapping unknown families to exit code 3.
fn parse_tag(family: &str, rank: usize) -> Result<TypeTag, u8> {
    let family = Family::from_str(family).map_err(|msg| {
        eprintln!("kacgen: {msg}");
        3u8
    })?;
    TypeTag::new(family, rank).map_err(|e| fail(&e))
}

/// Parses comma-separated parts; mis-ordered input is re-sorted with a
/// warning rather than rejected.
fn parse_partition(text: &str) -> Result<Partition, u8> {
    let mut parts = Vec::new();
    for token in text.split(',') {
        match token.trim().parse::<u64>() {
            Ok(v) => parts.push(v),
            Err(e) => {
                eprintln!("kacgen: bad partition part {token:?}: {e}");
                return Err(2);
            }
        }
    }
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != parts {
        let p: Vec<String> = sorted.iter().map(u64::to_string).collect();
        eprintln!("kacgen: warning: partition parts re-sorted to ({})", p.join(","));
    }
    Partition::new(sorted).map_err(|e| fail(&e))
}

fn cmd_classes(family: &str, rank: usize) -> u8 {
    let tag = match parse_tag(family, rank) {
        Ok(t) => t,
        Err(code) => return code,
    };
    for p in tag.admissible_partitions() {
        let e = match lift(tag, &p) {
            Ok(e) => e,
            Err(e) => return fail(&e),
        };
        let order = match element_order(&e) {
            Ok(o) => o,
            Err(e) => return fail(&e),
        };
        let regular = match is_regular_elliptic_partition(tag, &p) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        println!(
            "{p} m={} order={order} regular={}",
            canonical_m(tag, &p),
            if regular { "yes" } else { "no" }
        );
    }
    0
}

fn cmd_diagram(family: &str, rank: usize, partition: &str, format: Format, raw: bool) -> u8 {
    let tag = match parse_tag(family, rank) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let p = match parse_partition(partition) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let diagram = match kac_diagram(tag, &p) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let diagram = if raw {
        diagram
    } else {
        match diagram.normalized() {
            Ok(d) => d,
            Err(e) => return fail(&e),
        }
    };
    let rendered = match format {
        Format::Ascii => render_ascii(&diagram),
        Format::Json => render_json(&diagram),
    };
    match rendered {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(e) => fail(&e),
    }
}

fn cmd_charpoly(family: &str, rank: usize, partition: &str) -> u8 {
    let tag = match parse_tag(family, rank) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let p = match parse_partition(partition) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let q = match formula_charpoly(tag, &p) {
        Ok(q) => q,
        Err(e) => return fail(&e),
    };
    let rep = match q.rep {
        Rep::Standard => "standard",
        Rep::StandardTimesJ => "standard*J",
        Rep::Adjoint => "adjoint",
    };
    let e = match lift(tag, &p) {
        Ok(e) => e,
        Err(e) => return fail(&e),
    };
    let (group, central) = match (element_order(&e), order_mod_center(&e)) {
        (Ok(g), Ok(c)) => (g, c),
        (Err(e), _) | (_, Err(e)) => return fail(&e),
    };
    println!("{tag} partition={p} rep={rep} m={} order={group} order-mod-center={central}", q.m);
    if let Some(f) = &q.factored {
        println!("factored: {f}");
    }
    println!("expanded: {}", q.expanded);
    0
}

/// Default rank cap per suite and family, overridable by KACGEN_MAX_RANK and
/// then by --max-rank.
fn suite_cap(suite: Suite, family: Family, flag: Option<usize>) -> usize {
    if let Some(cap) = flag {
        return cap;
    }
    if let Ok(text) = std::env::var("KACGEN_MAX_RANK") {
        if let Ok(cap) = text.parse::<usize>() {
            return cap;
        }
        eprintln!("kacgen: warning: ignoring unparsable KACGEN_MAX_RANK={text:?}");
    }
    match suite {
        Suite::Injectivity => 12,
        Suite::Oracle => match family {
            Family::TwoA => 7,
            _ => 8,
        },
        Suite::Examples => 0,
        Suite::Rationality => match family {
            Family::A => 5,
            _ => 4,
        },
    }
}

fn suite_families(suite: Suite) -> Vec<Family> {
    match suite {
        Suite::Injectivity => vec![Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD],
        Suite::Oracle => vec![
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::TwoA,
            Family::TwoD,
        ],
        Suite::Examples => Vec::new(),
        Suite::Rationality => vec![Family::A, Family::B, Family::C, Family::D],
    }
}

fn cmd_verify(suite: Suite, family: Option<&str>, max_rank: Option<usize>) -> u8 {
    let families = match family {
        Some(name) => match Family::from_str(name) {
            Ok(f) => vec![f],
            Err(msg) => {
                eprintln!("kacgen: {msg}");
                return 3;
            }
        },
        None => suite_families(suite),
    };
    let mut cases: Vec<CaseOutcome> = Vec::new();
    if matches!(suite, Suite::Examples) {
        match verify::golden_diagrams() {
            Ok(mut v) => cases.append(&mut v),
            Err(e) => return fail(&e),
        }
    } else {
        for f in families {
            let cap = suite_cap(suite, f, max_rank);
            let run = match suite {
                Suite::Injectivity => verify::charpoly_injectivity(f, cap),
                Suite::Oracle => verify::oracle_agreement(f, cap),
                Suite::Rationality => verify::rationality_sweep(f, cap),
                Suite::Examples => unreachable!(),
            };
            match run {
                Ok(mut v) => cases.append(&mut v),
                Err(e) => return fail(&e),
            }
        }
    }
    let mut failed = 0usize;
    for c in &cases {
        if c.passed {
            eprintln!("PASS {}", c.name);
        } else {
            failed += 1;
            eprintln!("FAIL {}: {}", c.name, c.note);
        }
    }
    if failed == 0 {
        eprintln!("{} cases, all passed", cases.len());
        0
    } else {
        eprintln!("{} cases, {failed} failed", cases.len());
        1
    }
}
