use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use covrough::axioms::{
    check_lower_rough_matroid_relation, check_upper_rough_matroid_relation, check_matroid,
};
use covrough::constructions::{
    check_uniform_proposition, direct_sum, one_point_extension, uniform_family, DirectSumInput,
    UniformRange,
};
use covrough::io::{self, Fixture, Structure};
use covrough::lattice::{check_atomicity, check_distributivity, check_lattice_laws, export_dot};
use covrough::oracle::{cross_check, enumerate_rough_matroids_in, verify_enumeration, EnumerationBudget};
use covrough::{build_lattice, par, ApproximationSpace, CheckReport, Error, SetFamily};

#[derive(Parser)]
#[command(name = "covrough", version, about = "Covering-based rough sets and rough matroids")]
struct Args {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for the exhaustive scans; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Matroid,
    RoughCov,
    LowerCov,
    UpperCov,
    LowerRel,
    UpperRel,
    MatroidCond,
}

#[derive(Subcommand)]
enum Command {
    /// Neighborhood of every element.
    Neighborhoods { structure: PathBuf },
    /// Lower and upper approximations of one set.
    Approx {
        structure: PathBuf,
        /// Set literal such as "{a,d}".
        #[arg(long)]
        set: String,
    },
    /// The family of definable sets, as a family file.
    Definable { structure: PathBuf },
    /// Hasse diagram of the definable sets, with lattice law checks.
    Lattice { structure: PathBuf },
    /// Run one axiom checker on a family.
    Check {
        #[arg(value_enum)]
        check: CheckName,
        structure: PathBuf,
        family: PathBuf,
    },
    /// Uniform family {I definable : |I| <= r} and its matroid conditions.
    Uniform {
        structure: PathBuf,
        #[arg(long)]
        r: usize,
        /// Require 0 < r < n instead of 1 <= r <= n.
        #[arg(long)]
        strict: bool,
    },
    /// Direct sum of two rough matroids on label-disjoint universes.
    DirectSum {
        structure1: PathBuf,
        family1: PathBuf,
        structure2: PathBuf,
        family2: PathBuf,
    },
    /// CI1, CI2 and the maximal-cardinality form of CI3.
    Ci3prime { structure: PathBuf, family: PathBuf },
    /// Whether D1 plus one element of D2 - D1 leaves the definable sets.
    ExtensionCheck {
        structure: PathBuf,
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
        /// Element label.
        #[arg(long)]
        d: String,
    },
    /// Every rough matroid on a covering, as a fixture file.
    Enumerate {
        structure: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = EnumerationBudget::default().max_definable)]
        max_definable: usize,
        /// Omitted families re-checked by the full checker.
        #[arg(long, default_value_t = EnumerationBudget::default().trials)]
        trials: usize,
    },
    /// The law suite for one covering.
    CrossCheck {
        structure: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = EnumerationBudget::default().trials)]
        trials: usize,
    },
}

#[derive(Debug)]
struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            kind: err.kind().to_string(),
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Error::from(err).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        kind: "usage".into(),
        message: message.into(),
    }
}

/// Rendered output and whether every verdict in it passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn report_outcome(report: &CheckReport, format: Format) -> Result<Outcome, Failure> {
    let body = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
        Format::Dot => return Err(usage("--format dot is only available for `lattice`")),
    };
    Ok(Outcome {
        body,
        pass: report.pass,
    })
}

fn structure(path: &Path) -> Result<Structure, Failure> {
    io::read_structure(path).map_err(|e| with_path(e, path))
}

fn family(path: &Path, s: &Structure) -> Result<SetFamily, Failure> {
    io::read_family(path, s.universe()).map_err(|e| with_path(e, path))
}

fn with_path(err: Error, path: &Path) -> Failure {
    let mut f = Failure::from(err);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn space(s: &Structure) -> Result<ApproximationSpace, Failure> {
    Ok(ApproximationSpace::from_neighborhoods(s.neighborhoods())?)
}

fn run(command: &Command, format: Format) -> Result<Outcome, Failure> {
    if format == Format::Dot && !matches!(command, Command::Lattice { .. }) {
        return Err(usage("--format dot is only available for `lattice`"));
    }
    match command {
        Command::Neighborhoods { structure: path } => {
            let s = structure(path)?;
            let nm = s.neighborhoods();
            let u = s.universe();
            let body = match format {
                Format::Text => (0..u.len())
                    .map(|x| format!("N({}) = {}\n", u.label(x), u.format_set(nm.of(x))))
                    .collect(),
                _ => to_json(&json!({
                    "universe": u.labels(),
                    "neighborhoods": (0..u.len())
                        .map(|x| json!({"element": u.label(x), "neighborhood": u.member_labels(nm.of(x))}))
                        .collect::<Vec<_>>(),
                })),
            };
            Ok(Outcome::ok(body))
        }
        Command::Approx { structure: path, set } => {
            let s = structure(path)?;
            let u = s.universe();
            let nm = s.neighborhoods();
            let x = u.parse_set(set)?;
            let (lower, upper) = (nm.lower(x), nm.upper(x));
            let body = match format {
                Format::Text => format!(
                    "X  = {}\nXL = {}\nXH = {}\n",
                    u.format_set(x),
                    u.format_set(lower),
                    u.format_set(upper)
                ),
                _ => to_json(&json!({
                    "set": u.member_labels(x),
                    "lower": u.member_labels(lower),
                    "upper": u.member_labels(upper),
                })),
            };
            Ok(Outcome::ok(body))
        }
        Command::Definable { structure: path } => {
            let s = structure(path)?;
            let d = space(&s)?.definable().clone();
            let body = match format {
                Format::Text => format!("{}\n", d.format()),
                _ => io::family_to_json(&d),
            };
            Ok(Outcome::ok(body))
        }
        Command::Lattice { structure: path } => {
            let s = structure(path)?;
            let sp = space(&s)?;
            let ld = build_lattice(sp.definable())?;
            let laws = check_lattice_laws(&ld);
            let body = match format {
                Format::Dot => export_dot(&ld),
                Format::Text => {
                    let u = ld.universe();
                    let mut out = String::new();
                    for &(a, b) in ld.edges() {
                        out.push_str(&format!(
                            "{} < {}\n",
                            u.format_set(ld.nodes()[a]),
                            u.format_set(ld.nodes()[b])
                        ));
                    }
                    out.push_str(&laws.to_text());
                    out.push_str(&check_atomicity(&ld).to_text());
                    out
                }
                Format::Json => to_json(&json!({
                    "lattice": ld.to_json(),
                    "laws": laws,
                    "distributivity": check_distributivity(&ld),
                    "atomicity": check_atomicity(&ld),
                })),
            };
            Ok(Outcome {
                body,
                pass: laws.pass,
            })
        }
        Command::Check {
            check,
            structure: spath,
            family: fpath,
        } => {
            let s = structure(spath)?;
            let fam = family(fpath, &s)?;
            let report = match check {
                CheckName::Matroid => check_matroid(&fam),
                CheckName::RoughCov => {
                    space_of_covering(&s)?.check_rough_matroid(&fam)?
                }
                CheckName::LowerCov => space_of_covering(&s)?.check_lower_rough_matroid(&fam, "lower-cov")?,
                CheckName::UpperCov => space_of_covering(&s)?.check_upper_rough_matroid(&fam, "upper-cov")?,
                CheckName::LowerRel => check_lower_rough_matroid_relation(s.as_relation()?, &fam)?,
                CheckName::UpperRel => check_upper_rough_matroid_relation(s.as_relation()?, &fam)?,
                CheckName::MatroidCond => space_of_covering(&s)?.check_matroid_condition(&fam)?,
            };
            report_outcome(&report, format)
        }
        Command::Uniform {
            structure: path,
            r,
            strict,
        } => {
            let s = structure(path)?;
            let c = s.as_covering()?;
            let range = if *strict { UniformRange::Strict } else { UniformRange::Inclusive };
            let fam = uniform_family(c, *r, range)?;
            let mut report = check_uniform_proposition(c, *r)?;
            report.fact("family", fam.to_labels());
            report_outcome(&report, format)
        }
        Command::DirectSum {
            structure1,
            family1,
            structure2,
            family2,
        } => {
            let (s1, s2) = (structure(structure1)?, structure(structure2)?);
            let f1 = family(family1, &s1)?;
            let f2 = family(family2, &s2)?;
            let inp = DirectSumInput::new((s1.as_covering()?.clone(), f1), (s2.as_covering()?.clone(), f2))?;
            let (covering, fam, report) = direct_sum(&inp)?;
            let body = match format {
                Format::Text => format!("{}\n{}", fam.format(), report.to_text()),
                _ => {
                    let u = covering.universe();
                    to_json(&json!({
                        "universe": u.labels(),
                        "covering": covering.blocks().iter().map(|&b| u.member_labels(b)).collect::<Vec<_>>(),
                        "family": fam.to_labels(),
                        "report": report,
                    }))
                }
            };
            Ok(Outcome {
                body,
                pass: report.pass,
            })
        }
        Command::Ci3prime {
            structure: spath,
            family: fpath,
        } => {
            let s = structure(spath)?;
            let fam = family(fpath, &s)?;
            let report = space_of_covering(&s)?.check_ci3_prime(&fam)?;
            report_outcome(&report, format)
        }
        Command::ExtensionCheck {
            structure: path,
            d1,
            d2,
            d,
        } => {
            let s = structure(path)?;
            let sp = space_of_covering(&s)?;
            let u = sp.universe().clone();
            let (d1, d2) = (u.parse_set(d1)?, u.parse_set(d2)?);
            let d = u.index_of(d.trim())?;
            if d1.len() >= d2.len() {
                return Err(Error::Precondition("requires |D1| < |D2|".into()).into());
            }
            let check = one_point_extension(&sp, d1, d2, d)?;
            let mut report = CheckReport::new("extension-check");
            report.fact("blocked", check.blocked);
            report.fact("neighbor-criterion", check.neighbor_criterion);
            report.record(
                "biconditional",
                (!check.agrees()).then(|| {
                    covrough::Witness::new()
                        .with(&u, "D1", d1)
                        .with(&u, "D2", d2)
                        .with(&u, "d", covrough::Subset::singleton(d))
                }),
            );
            report_outcome(&report, format)
        }
        Command::Enumerate {
            structure: path,
            seed,
            max_definable,
            trials,
        } => {
            let s = structure(path)?;
            let c = s.as_covering()?;
            let budget = EnumerationBudget {
                max_definable: *max_definable,
                trials: *trials,
                seed: *seed,
                ..EnumerationBudget::default()
            };
            budget.validate()?;
            let sp = space_of_covering(&s)?;
            let families = enumerate_rough_matroids_in(&sp, &budget)?;
            if let Some(bad) = verify_enumeration(c, &families, &budget)? {
                return Err(Error::LawViolated(format!(
                    "enumeration disagrees with the checker on {}",
                    bad.format()
                ))
                .into());
            }
            let command = format!("covrough enumerate {} --seed {seed}", file_name(path));
            let fixture = Fixture::new(command, *seed, &families);
            let body = match format {
                Format::Text => {
                    let mut out = format!("{} rough matroids\n", families.len());
                    for f in &families {
                        out.push_str(&f.format());
                        out.push('\n');
                    }
                    out
                }
                _ => fixture.to_json(),
            };
            Ok(Outcome::ok(body))
        }
        Command::CrossCheck {
            structure: path,
            seed,
            trials,
        } => {
            let s = structure(path)?;
            let budget = EnumerationBudget {
                trials: *trials,
                seed: *seed,
                ..EnumerationBudget::default()
            };
            let report = cross_check(s.as_covering()?, &budget)?;
            report_outcome(&report, format)
        }
    }
}

fn space_of_covering(s: &Structure) -> Result<ApproximationSpace, Failure> {
    Ok(ApproximationSpace::from_covering(s.as_covering()?)?)
}

// Only the file name goes into fixtures so they do not depend on checkout paths.
fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn emit(body: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, body).map_err(|e| with_path(e.into(), path)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn fail(f: Failure) -> ExitCode {
    let err = json!({"error": {"kind": f.kind, "message": f.message}});
    eprintln!("{}", serde_json::to_string(&err).expect("json values serialize"));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) if !err.use_stderr() => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => return fail(usage(err.render().to_string().trim_end())),
    };
    let jobs = args.jobs.unwrap_or(0);
    let result = if jobs == 0 {
        run(&args.command, args.format)
    } else {
        par::with_jobs(jobs, || run(&args.command, args.format))
    };
    match result.and_then(|o| emit(&o.body, args.output.as_deref()).map(|_| o.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => fail(f),
    }
}
