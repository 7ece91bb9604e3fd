//! Command-line surface for the verification toolkit.
//!
//! Reports are line oriented `key: value` text with a `format-version: 1`
//! header and deterministic ordering; `--machine` switches to a JSON
//! object with the same keys. Exit status: 0 for pass verdicts, 1 for
//! completed runs with fail/split/feasible findings, 2 for usage or parse
//! errors, 3 for exhausted budgets.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crcodes::designs::qary_design_lambda;
use crcodes::nonexist::nonexistence_certificates;
use crcodes::regularity::s_regularity_level;
use crcodes::spectra::macwilliams_transform;
use crcodes::theorems::{replay, replay_all, REPLAY_IDS};
use crcodes::transitivity::{
    check_stabilizer_homogeneity, counting_bound, neighbour_transitivity_level, PartStatus,
};
use crcodes::{AutSubgroup, Budget, Code, Error, PermGroup, Vertex};

#[derive(Parser)]
#[command(
    name = "crcodes",
    about = "Verification toolkit for codes in Hamming graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on q^m for distance partitions.
    #[arg(long, global = true)]
    max_vertices: Option<u64>,
    /// Cap on enumerated subsets, tuples and orbit lengths.
    #[arg(long, global = true)]
    max_subsets: Option<u64>,
    /// Emit a JSON object instead of key: value lines.
    #[arg(long, global = true)]
    machine: bool,
    /// Write replay reports into this directory instead of stdout.
    #[arg(long, global = true)]
    report_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Distance, regularity and design structure of a code file.
    Analyze { code_file: PathBuf },
    /// Neighbour/complete transitivity of a code under an automorphism
    /// file.
    CheckTransitive {
        code_file: PathBuf,
        group_file: PathBuf,
    },
    /// Nonexistence certificates for a supported (length, distance) pair.
    Nonexist { m: u64, delta: u64 },
    /// Orbits of a permutation group file on k-subsets.
    Orbits {
        group_file: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Run one registered replay by id, or all of them.
    Replay {
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut budget = Budget::default();
    if let Some(v) = cli.max_vertices {
        budget.max_vertices = v;
    }
    if let Some(s) = cli.max_subsets {
        budget.max_subsets = s;
        budget.max_tuples = s;
        budget.max_orbit = s;
    }
    let outcome = match &cli.command {
        Command::Analyze { code_file } => analyze(code_file, &budget),
        Command::CheckTransitive {
            code_file,
            group_file,
        } => check_transitive(code_file, group_file, &budget),
        Command::Nonexist { m, delta } => nonexist(*m, *delta),
        Command::Orbits { group_file, k } => orbits(group_file, *k, &budget),
        Command::Replay { id, all } => run_replay(id.as_deref(), *all, cli.report_dir.as_deref()),
    };
    match outcome {
        Ok(report) => {
            if cli.machine {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.findings {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// An ordered key-value report; `findings` marks fail/split/feasible
/// outcomes that map to exit status 1.
struct Report {
    entries: Vec<(String, String)>,
    findings: bool,
}

impl Report {
    fn new() -> Report {
        Report {
            entries: vec![("format-version".to_string(), "1".to_string())],
            findings: false,
        }
    }

    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            if value.contains('\n') {
                writeln!(out, "{key}:").unwrap();
                for line in value.lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            } else {
                writeln!(out, "{key}: {value}").unwrap();
            }
        }
        out
    }

    fn to_json(&self) -> String {
        let escape = |s: &str| {
            let mut escaped = String::with_capacity(s.len());
            for c in s.chars() {
                match c {
                    '"' => escaped.push_str("\\\""),
                    '\\' => escaped.push_str("\\\\"),
                    '\n' => escaped.push_str("\\n"),
                    c if (c as u32) < 0x20 => {
                        write!(escaped, "\\u{:04x}", c as u32).unwrap()
                    }
                    c => escaped.push(c),
                }
            }
            escaped
        };
        let body = self
            .entries
            .iter()
            .map(|(k, v)| format!("\"{}\": \"{}\"", escape(k), escape(v)))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{{{body}}}")
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn render_vertex(v: &Vertex) -> String {
    v.entries()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("")
}

fn analyze(code_file: &Path, budget: &Budget) -> Result<Report, Error> {
    let code = Code::parse_with_budget(&read(code_file)?, *budget)?;
    let mut report = Report::new();
    report.push("length", code.m());
    report.push("alphabet", code.q());
    report.push("size", code.len());
    let delta = code.min_distance_opt()?;
    report.push(
        "min-distance",
        delta.map_or("absent".to_string(), |d| d.to_string()),
    );
    let partition = code.distance_partition()?;
    report.push("covering-radius", partition.rho());
    report.push(
        "partition-sizes",
        partition
            .sizes()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let distribution = code.distance_distribution()?;
    report.push(
        "distance-distribution",
        distribution
            .values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let transform = macwilliams_transform(distribution.values(), code.q())?;
    report.push(
        "macwilliams-transform",
        transform
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let verdict = s_regularity_level(&code)?;
    report.push(
        "regularity-level",
        verdict.level.map_or("none".to_string(), |l| l.to_string()),
    );
    report.push("completely-regular", verdict.is_completely_regular());
    if let Some(witness) = &verdict.witness {
        report.push(
            "regularity-witness",
            format!(
                "part {} vertices {} and {} differ first at distance {}",
                witness.part,
                render_vertex(&witness.first.vertex),
                render_vertex(&witness.second.vertex),
                witness.first_differing_distance
            ),
        );
    }
    if let Some(delta) = delta {
        let t = delta / 2;
        if t >= 1 {
            for k in 1..=code.m() {
                let class = code.weight_class(k);
                if class.is_empty() {
                    continue;
                }
                let t_used = t.min(k);
                let lambda = qary_design_lambda(&class, code.q(), t_used, budget)?;
                report.push(
                    format!("weight-class-{k}"),
                    format!(
                        "size {} t {} lambda {}",
                        class.len(),
                        t_used,
                        lambda.map_or("none".to_string(), |l| l.to_string())
                    ),
                );
            }
        }
    }
    Ok(report)
}

fn check_transitive(code_file: &Path, group_file: &Path, budget: &Budget) -> Result<Report, Error> {
    let code = Code::parse_with_budget(&read(code_file)?, *budget)?;
    let group = AutSubgroup::parse(&read(group_file)?)?;
    let verdict = neighbour_transitivity_level(&code, &group, budget)?;
    let mut report = Report::new();
    report.push("length", code.m());
    report.push("alphabet", code.q());
    report.push("size", code.len());
    report.push("group-order", group.order());
    report.push("covering-radius", verdict.covering_radius);
    report.push(
        "transitivity-level",
        verdict.level.map_or("none".to_string(), |l| l.to_string()),
    );
    report.push("completely-transitive", verdict.is_completely_transitive());
    report.push("kernel-trivial", group.is_faithful_on_entries());
    report.push("entry-group-order", group.entry_group().order());
    for (i, status) in verdict.parts.iter().enumerate() {
        let line = match status {
            PartStatus::SingleOrbit { size } => format!("single orbit of size {size}"),
            PartStatus::Split {
                orbit_size,
                part_size,
                seed,
                outside_orbit,
            } => format!(
                "split: orbit of {} has size {orbit_size} of {part_size}; {} lies outside",
                render_vertex(seed),
                render_vertex(outside_orbit)
            ),
            PartStatus::NotInvariant {
                seed,
                image_outside,
            } => format!(
                "not invariant: {} maps out of the part to {}",
                render_vertex(seed),
                render_vertex(image_outside)
            ),
        };
        report.push(format!("part-{i}"), line);
    }
    if !verdict.is_completely_transitive() {
        report.findings = true;
    }
    let induced = group.entry_alphabet_group(0, budget)?;
    report.push("entry-alphabet-group-order", induced.order());
    if let Some(level) = verdict.level {
        if code.len() >= 2 {
            let stab_report = check_stabilizer_homogeneity(&code, &group, level, budget)?;
            report.push(
                "stabilizer-checks",
                format!(
                    "{} checks up to radius {}: {}",
                    stab_report.checks.len(),
                    stab_report.max_radius,
                    if stab_report.all_pass() { "pass" } else { "fail" }
                ),
            );
            if !stab_report.all_pass() {
                report.findings = true;
            }
        }
    }
    let bound = counting_bound(&code, &group);
    report.push("counting-bound", bound.holds);
    Ok(report)
}

fn nonexist(m: u64, delta: u64) -> Result<Report, Error> {
    let result = nonexistence_certificates(m, delta)?;
    let mut report = Report::new();
    report.push("length", m);
    report.push("min-distance", delta);
    report.push(
        "overall",
        if result.infeasible() {
            "infeasible".to_string()
        } else {
            format!("undecided (open: {})", result.open_branches().join(", "))
        },
    );
    for branch in &result.branches {
        report.push(
            format!("branch {}", branch.name),
            if branch.closed() { "closed" } else { "open" },
        );
    }
    report.push("certificate", result.render());
    report.findings = !result.infeasible();
    Ok(report)
}

fn orbits(group_file: &Path, k: usize, budget: &Budget) -> Result<Report, Error> {
    let group = PermGroup::parse(&read(group_file)?)?;
    let orbits = group.orbits_on_ksubsets(k, budget)?;
    let mut report = Report::new();
    report.push("degree", group.degree());
    report.push("group-order", group.order());
    report.push("subset-size", k);
    report.push("orbit-count", orbits.len());
    for (i, orbit) in orbits.iter().enumerate() {
        let representative = orbit[0]
            .iter()
            .map(|p| (p + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        report.push(
            format!("orbit-{i}"),
            format!("size {} representative {{{representative}}}", orbit.len()),
        );
    }
    Ok(report)
}

fn run_replay(id: Option<&str>, all: bool, report_dir: Option<&Path>) -> Result<Report, Error> {
    let reports = if all {
        replay_all()?
    } else {
        let id = id.ok_or_else(|| {
            Error::Domain(format!(
                "pass a replay id or --all; known ids: {REPLAY_IDS:?}"
            ))
        })?;
        vec![replay(id)?]
    };
    let mut report = Report::new();
    let mut findings = false;
    for item in &reports {
        findings |= !item.pass();
        report.push(
            format!("replay {}", item.id),
            if item.pass() { "pass" } else { "fail" },
        );
        match report_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::Domain(format!("{}: {e}", dir.display())))?;
                let path = dir.join(format!("{}.txt", item.id));
                std::fs::write(&path, item.render())
                    .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
                report.push(format!("report {}", item.id), path.display());
            }
            None => {
                report.push(format!("detail {}", item.id), item.render());
            }
        }
    }
    report.findings = findings;
    Ok(report)
}
