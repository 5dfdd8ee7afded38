use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ellhyp::catalog::{catalog, find_case, ActionCase, GroupLabel, TriangularAction};
use ellhyp::group::{Family, Group, Kind};
use ellhyp::locus::{genus_record, GenusRecord};
use ellhyp::ovals::{build_full_group, build_full_group_unchecked, oval_counts, OvalReport};
use ellhyp::quad::{quotient_invariants, split, Ring};
use ellhyp::verify::{verify, VerifyOptions, VerifyReport};
use ellhyp::Error;

#[derive(Parser)]
#[command(
    name = "ellhyp",
    version,
    about = "Symmetric exceptional points of the elliptic-hyperelliptic locus"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric actions and reduced-type census at one genus or a range.
    Census {
        #[arg(long, conflicts_with_all = ["from", "to"])]
        genus: Option<u64>,
        #[arg(long, requires = "to")]
        from: Option<u64>,
        #[arg(long, requires = "from")]
        to: Option<u64>,
    },
    /// Order, relator check, class count and reduced quotient of one group.
    Group {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        variant: String,
        #[arg(long)]
        tau: bool,
        /// Allow combinations the catalog does not list.
        #[arg(long)]
        force: bool,
    },
    /// Symmetry classes and oval counts of a full action.
    Ovals {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        variant: String,
        /// Skip the fullness check.
        #[arg(long)]
        force: bool,
    },
    /// Splitting of a rational prime and the quotient by one factor.
    Rings {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long)]
        factor: u64,
    },
    /// Recompute the reference tables and report differences.
    Verify {
        /// Table numbers, e.g. `3..8`, `6` or `3,4,5`.
        #[arg(long, default_value = "3..8")]
        tables: String,
        #[arg(long, default_value_t = 4)]
        max_a: u32,
        /// Catalog fixture (JSON array of cases) replacing the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Gauss,
    Eisenstein,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Gauss => Ring::Gauss,
            RingArg::Eisenstein => Ring::Eisenstein,
        }
    }
}

/// Failure with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Mismatch(String),
    Io(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSignature(_)
            | Error::InvalidSpec(_)
            | Error::SpecMismatch
            | Error::GenusTooSmall(_)
            | Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

struct Output {
    text: String,
    failure: Option<Failure>,
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Io(e.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text).map_err(|e| {
                Failure::Io(anyhow::Error::new(e).context(format!("writing {}", path.display())))
            })?,
            None => {
                let _ = std::io::stdout().write_all(out.text.as_bytes());
            }
        }
        out.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Io(e) => eprintln!("error: {e:#}"),
                Failure::Usage(m) | Failure::Domain(m) | Failure::Mismatch(m) => {
                    eprintln!("error: {m}")
                }
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ok = |text| {
        Ok(Output {
            text,
            failure: None,
        })
    };
    match &cli.command {
        Command::Census { genus, from, to } => {
            let (lo, hi) = match (genus, from, to) {
                (Some(g), _, _) => (*g, *g),
                (None, Some(a), Some(b)) if a <= b => (*a, *b),
                (None, Some(_), Some(_)) => {
                    return Err(Failure::Usage("--from exceeds --to".into()))
                }
                _ => return Err(Failure::Usage("give --genus or --from/--to".into())),
            };
            if lo <= 5 {
                return Err(Error::GenusTooSmall(lo).into());
            }
            let records: Vec<GenusRecord> =
                (lo..=hi).map(genus_record).collect::<Result<_, _>>()?;
            match (cli.format, genus.is_some()) {
                (Format::Json, true) => ok(json(&records[0])?),
                (Format::Json, false) => ok(json(&records)?),
                (Format::Table, _) => ok(census_table(&records, genus.is_some())),
            }
        }
        Command::Group {
            case,
            n,
            variant,
            tau,
            force,
        } => {
            let (case, label) = resolve(case, variant)?;
            let cataloged = case.admits(label, *n);
            if !cataloged && !force {
                return Err(Failure::Usage(format!(
                    "{} {} is not in the catalog (use --force)",
                    case.label,
                    label.with_n(*n)
                )));
            }
            let spec = case.spec(label, *n, *tau)?;
            let g = Group::new(spec)?;
            let summary = GroupSummary {
                case: case.label.clone(),
                group: label.with_n(*n),
                with_tau: *tau,
                cataloged,
                order: g.order(),
                relators_hold: g.relators_hold(),
                classes: g.conjugacy_classes().len(),
                reduced_quotient: [
                    g.reduced_quotient().invariants.d1,
                    g.reduced_quotient().invariants.d2,
                ],
                twist: g.reduced_quotient().twist,
            };
            match cli.format {
                Format::Json => ok(json(&summary)?),
                Format::Table => ok(format!(
                    "{} {}{}{}\n  order            {}\n  relators hold    {}\n  classes          {}\n  reduced quotient Z{} x Z{} by Z{}\n",
                    summary.case,
                    summary.group,
                    if *tau { " with tau" } else { "" },
                    if cataloged { "" } else { " (uncataloged)" },
                    summary.order,
                    summary.relators_hold,
                    summary.classes,
                    summary.reduced_quotient[0],
                    summary.reduced_quotient[1],
                    summary.twist
                )),
            }
        }
        Command::Ovals {
            case,
            n,
            variant,
            force,
        } => {
            let (case, label) = resolve(case, variant)?;
            let action = TriangularAction::new(case, label, *n)?;
            if !action.is_smooth() {
                return Err(Failure::Domain(format!(
                    "{} is not a smooth action",
                    action.label()
                )));
            }
            let fg = if *force {
                build_full_group_unchecked(&action)?
            } else {
                build_full_group(&action)?
            };
            let report = oval_counts(&fg)?;
            match cli.format {
                Format::Json => ok(json(&report)?),
                Format::Table => ok(ovals_table(&report)),
            }
        }
        Command::Rings { ring, factor } => {
            let ring = Ring::from(*ring);
            let (pi, bar) = split::<i64>(*factor, ring)?;
            let inv = quotient_invariants(&pi)?;
            let rec = RingsRecord {
                ring,
                p: *factor,
                factors: [[pi.a, pi.b], [bar.a, bar.b]],
                invariants: [inv.d1, inv.d2],
            };
            match cli.format {
                Format::Json => ok(json(&rec)?),
                Format::Table => ok(format!(
                    "{} = ({}) ({}) in the {} integers; quotient by the first factor Z{} x Z{}\n",
                    factor, pi, bar, ring, inv.d1, inv.d2
                )),
            }
        }
        Command::Verify {
            tables,
            max_a,
            catalog: fixture,
        } => {
            let tables = parse_tables(tables)?;
            let loaded: Vec<ActionCase>;
            let cat: &[ActionCase] = match fixture {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        anyhow::Error::new(e).context(format!("reading {}", path.display()))
                    })?;
                    loaded = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("catalog fixture: {e}")))?;
                    &loaded
                }
                None => catalog(),
            };
            let report = verify(
                &tables,
                cat,
                VerifyOptions {
                    max_a: *max_a,
                    ..VerifyOptions::default()
                },
            )?;
            let text = match cli.format {
                Format::Json => json(&report)?,
                Format::Table => verify_table(&report),
            };
            let failure = (!report.passed).then(|| {
                let n: usize = report.tables.iter().map(|t| t.mismatches.len()).sum();
                Failure::Mismatch(format!("{n} mismatches"))
            });
            Ok(Output { text, failure })
        }
    }
}

#[derive(Serialize)]
struct GroupSummary {
    case: String,
    group: String,
    with_tau: bool,
    cataloged: bool,
    order: u64,
    relators_hold: bool,
    classes: usize,
    reduced_quotient: [u64; 2],
    twist: u32,
}

#[derive(Serialize)]
struct RingsRecord {
    ring: Ring,
    p: u64,
    factors: [[i64; 2]; 2],
    invariants: [u64; 2],
}

/// Finds the case and reads the family off the variant length (one bit for A/C/E, two
/// for B/D/F).
fn resolve(case: &str, variant: &str) -> Result<(&'static ActionCase, GroupLabel), Failure> {
    let case = find_case(case)?;
    let [single, pair] = match case.kind {
        Kind::K244 => [Family::A, Family::B],
        Kind::K236 => [Family::C, Family::D],
        Kind::K333 => [Family::E, Family::F],
    };
    let family = match variant.len() {
        1 => single,
        2 => pair,
        _ => {
            return Err(Failure::Usage(format!(
                "variant {variant:?} must have one or two bits"
            )))
        }
    };
    Ok((case, GroupLabel::parse(&format!("{family}_{variant}"))?))
}

fn parse_tables(s: &str) -> Result<Vec<u8>, Failure> {
    let bad = || Failure::Usage(format!("cannot parse table list {s:?}"));
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let (a, b): (u8, u8) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.iter().any(|t| !(3..=8).contains(t)) {
        return Err(Failure::Usage(format!(
            "tables must lie in 3..8, got {s:?}"
        )));
    }
    Ok(out)
}

fn census_table(records: &[GenusRecord], single: bool) -> String {
    let mut s = String::from("genus  k   a    actions  full  census (signature:count)\n");
    for r in records {
        if !single && r.actions.is_empty() {
            continue;
        }
        let census: Vec<String> = r
            .census
            .iter()
            .filter(|c| c.count > 0)
            .map(|c| format!("{}:{}", c.signature, c.count))
            .collect();
        let opt = |x: Option<u32>| x.map_or("-".to_string(), |v| v.to_string());
        s.push_str(&format!(
            "{:<6} {:<3} {:<4} {:<8} {:<5} {}\n",
            r.genus,
            opt(r.k),
            opt(r.a),
            r.actions.len(),
            r.full_count,
            census.join(" ")
        ));
        if single {
            for a in &r.actions {
                s.push_str(&format!(
                    "    {} {}^{}_{} {}{}\n",
                    a.case,
                    a.family,
                    a.n,
                    a.variant,
                    a.signature,
                    if a.full { " full" } else { "" }
                ));
            }
        }
    }
    s
}

fn ovals_table(r: &OvalReport) -> String {
    let mut s = format!(
        "{} {}^{}_{} genus {}\n  {:<24} {:>6} {:>6}  fixed points\n",
        r.case, r.family, r.n, r.variant, r.genus, "class", "size", "ovals"
    );
    for c in &r.classes {
        s.push_str(&format!(
            "  {:<24} {:>6} {:>6}  {}\n",
            c.rep,
            c.size,
            c.ovals,
            if c.fixed_points { "yes" } else { "no" }
        ));
    }
    s
}

fn verify_table(r: &VerifyReport) -> String {
    let mut s = String::new();
    for t in &r.tables {
        s.push_str(&format!(
            "table {}: {} checked, {} mismatches\n",
            t.table,
            t.checked,
            t.mismatches.len()
        ));
        for m in &t.mismatches {
            s.push_str(&format!(
                "  {} {}: expected {}, computed {}\n",
                m.item, m.field, m.expected, m.computed
            ));
        }
        for n in &t.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
    }
    s.push_str(if r.passed { "PASS\n" } else { "FAIL\n" });
    s
}
