//! Command-line surface for the surgery-dimension and covering-obstruction
//! library. Exit codes: 0 = ran (whatever the verdicts), 1 = input error,
//! 2 = arithmetic overflow.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use floercover::{
    builtin, emit_report, hf_table, lens_homeomorphic, moser_trefoil, parse_job, parse_profiles,
    phi, run_survey, verify_trefoil_family, CheckKind, CoverQuery, Error, KnotProfile, LensSpace,
    ReportFormat, ReportHeader, ResolvedJob, Result, Sign, Status, SurgerySlope,
};
use floercover::{cyclic_cover, survey::evaluate_checks, CheckOutcome};

#[derive(Parser)]
#[command(
    name = "floercover",
    version,
    about = "Floer dimension tables of knot surgeries and covering obstructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SlopeArgs {
    /// Surgery numerator p (non-zero)
    #[arg(long)]
    p: i64,
    /// Surgery denominator q (non-zero; sign is normalized into p)
    #[arg(long)]
    q: i64,
}

#[derive(Args)]
struct ProfileArgs {
    /// Profile name: a built-in (unknot, T(2,N), P(-2,3,7)) or a name from --profiles-file
    #[arg(long)]
    profile: String,
    /// Profile document to resolve names against before the built-ins
    #[arg(long)]
    profiles_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Count integers n with floor((i + p*n)/q) = s
    Phi {
        #[command(flatten)]
        slope: SlopeArgs,
        /// Spin^c label i (any integer; the count depends on i mod p)
        #[arg(long)]
        i: i64,
        /// Target floor value s
        #[arg(long)]
        s: i64,
    },
    /// Per-class Floer dimensions of S^3_{p/q}(K)
    HfTable {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        slope: SlopeArgs,
    },
    /// Is S^3_{p/q}(K) a Z/rZ-L-space?
    Lspace {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        slope: SlopeArgs,
    },
    /// Covering obstructions between two surgeries
    #[command(subcommand)]
    Obstruct(ObstructCommand),
    /// Lens-space arithmetic
    #[command(subcommand)]
    Lens(LensCommand),
    /// Batch slope-grid surveys
    #[command(subcommand)]
    Survey(SurveyCommand),
    /// Profile-document utilities
    #[command(subcommand)]
    Profile(ProfileCommand),
}

#[derive(Subcommand)]
enum ObstructCommand {
    /// Can p/q-surgery on K regularly cover p2/q2-surgery on the same K?
    SameKnot {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        cover: SlopeArgs,
        /// Base surgery numerator p'
        #[arg(long)]
        p2: i64,
        /// Base surgery denominator q'
        #[arg(long)]
        q2: i64,
        /// Pin the coefficient prime r of the putative r^n cover
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Can p/q-surgery on one knot regularly cover p2/q2-surgery on another?
    Pair {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        cover: SlopeArgs,
        /// Base knot profile name
        #[arg(long)]
        profile2: String,
        /// Base surgery numerator p'
        #[arg(long)]
        p2: i64,
        /// Base surgery denominator q'
        #[arg(long)]
        q2: i64,
        /// Pin the coefficient prime r of the putative r^n cover
        #[arg(long)]
        prime: Option<u64>,
    },
}

#[derive(Subcommand)]
enum LensCommand {
    /// The lens space of p/q-surgery on the right-handed trefoil, if any
    Moser {
        #[command(flatten)]
        slope: SlopeArgs,
    },
    /// The degree-d cyclic cover of L(p, q)
    Cover {
        /// Lens space order p >= 1
        #[arg(long)]
        p: u64,
        /// Lens space parameter q (any integer coprime to p)
        #[arg(long)]
        q: i64,
        /// Cover degree d >= 1
        #[arg(long)]
        degree: u64,
    },
    /// Verify one member of the trefoil lens-cover family
    Family {
        /// Family parameter q >= 1 (cover slope is (6q+sign)/q)
        #[arg(long)]
        q: u64,
        /// Family parameter k >= 1 (cover degree is 6k+1)
        #[arg(long)]
        k: u64,
        /// Moser branch: + for 6q+1, - for 6q-1
        #[arg(long, allow_hyphen_values = true, default_value = "+")]
        sign: String,
    },
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Run a survey job file and emit the report
    Run {
        /// Job document (TOML); see the README for the schema
        #[arg(long)]
        job: PathBuf,
        /// Write the report here instead of the job's output path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format: text, csv or jsonl
        #[arg(long)]
        format: Option<String>,
        /// Worker-thread bound
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ProfileCommand {
    /// Parse a profile document and report each profile's validity
    Validate {
        /// Profile document to check
        #[arg(long)]
        profiles_file: PathBuf,
    },
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn resolve_profile(name: &str, profiles_file: Option<&Path>) -> Result<KnotProfile> {
    if let Some(path) = profiles_file {
        let text = read_file(path)?;
        for (profile, report) in parse_profiles(&text)? {
            if profile.name == name {
                if !report.is_valid() {
                    return Err(Error::InvalidProfile {
                        name: name.to_string(),
                        violations: report.to_string(),
                    });
                }
                return Ok(profile);
            }
        }
    }
    builtin(name)
}

fn outcome_line(kind: CheckKind, outcome: Option<&CheckOutcome>) -> String {
    let label = format!("{kind}:");
    match outcome {
        None => format!("{label:<15} (not requested)"),
        Some(CheckOutcome::Fired { certificate }) => {
            format!("{label:<15} obstructed  [{certificate}]")
        }
        Some(CheckOutcome::Silent) => format!("{label:<15} clear"),
        Some(CheckOutcome::NotApplicable) => format!("{label:<15} n/a"),
        Some(CheckOutcome::Failed { error }) => format!("{label:<15} error: {error}"),
    }
}

fn print_obstruction(query: &CoverQuery) -> Result<()> {
    query.validate()?;
    println!(
        "query: cover {} {}  ->  base {} {}   (r^n-sheeted regular covers, r prime)",
        query.cover_profile.name, query.cover_slope, query.base_profile.name, query.base_slope
    );
    let (outcomes, _) = evaluate_checks(query, &CheckKind::all());
    let mut fired = false;
    for kind in CheckKind::all() {
        let outcome = outcomes.iter().find(|(k, _)| *k == kind).map(|(_, o)| o);
        if let Some(CheckOutcome::Fired { .. }) = outcome {
            fired = true;
        }
        if let Some(CheckOutcome::Failed { error }) = outcome {
            // A per-check arithmetic failure must surface as a real error here
            // (single-query mode, unlike surveys).
            return Err(Error::InvalidInput(format!("{kind} check failed: {error}")));
        }
        println!("{}", outcome_line(kind, outcome));
    }
    if fired {
        println!("verdict: obstructed -- no such cover exists");
    } else {
        println!("verdict: not-obstructed -- no obstruction found (cover existence is NOT asserted)");
    }
    Ok(())
}

fn cmd_survey_run(
    job_path: &Path,
    out: Option<PathBuf>,
    format: Option<String>,
    workers: Option<usize>,
) -> Result<()> {
    let job = parse_job(&read_file(job_path)?)?;

    let mut file_profiles: Vec<KnotProfile> = Vec::new();
    if let Some(rel) = &job.profiles_file {
        let base = job_path.parent().unwrap_or(Path::new("."));
        let path = base.join(rel);
        let text = read_file(&path)?;
        file_profiles = floercover::load_profiles(&text)?;
    }
    let mut profiles = Vec::new();
    for name in &job.profiles {
        let found = file_profiles.iter().find(|p| &p.name == name).cloned();
        profiles.push(match found {
            Some(p) => p,
            None => builtin(name)?,
        });
    }

    let resolved = ResolvedJob {
        cover_slopes: job.cover_slopes.enumerate()?,
        base_slopes: job.base_slopes.enumerate()?,
        checks: job.checks.clone().unwrap_or_else(|| CheckKind::all().to_vec()),
        prime: job.prime,
        workers: workers.or(job.workers),
        profiles,
    };
    let rows = run_survey(&resolved)?;
    let header = ReportHeader::new(&resolved.profiles);

    let chosen_format = match format {
        Some(f) => f.parse()?,
        None => job.output.as_ref().map(|o| o.format).unwrap_or(ReportFormat::Text),
    };
    let document = emit_report(&header, &rows, chosen_format);

    let out_path = out.or_else(|| job.output.as_ref().map(|o| PathBuf::from(&o.path)));
    match out_path {
        Some(path) => {
            write_file(&path, &document)?;
            let obstructed = rows
                .iter()
                .filter(|r| r.verdict == Status::Obstructed)
                .count();
            println!(
                "wrote {} rows ({obstructed} obstructed) to {}",
                rows.len(),
                path.display()
            );
        }
        None => print!("{document}"),
    }
    Ok(())
}

fn run() -> Result<()> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful runs; anything else is an
            // input error and must exit 1, not clap's default 2.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };

    match cli.command {
        Command::Phi { slope, i, s } => {
            let sl = SurgerySlope::new(slope.p, slope.q)?;
            println!("{}", phi(sl, i, s));
        }
        Command::HfTable { profile, slope } => {
            let prof = resolve_profile(&profile.profile, profile.profiles_file.as_deref())?;
            let sl = SurgerySlope::new(slope.p, slope.q)?;
            let table = hf_table(&prof, sl)?;
            println!("profile: {}", table.profile_name());
            println!("slope:   {}", table.slope());
            println!("class  dim");
            for (class, dim) in table.classes() {
                println!("[{}]  {}", class.index(), dim);
            }
            println!("total: {}", table.total());
            println!("L-space: {}", if table.is_lspace() { "yes" } else { "no" });
        }
        Command::Lspace { profile, slope } => {
            let prof = resolve_profile(&profile.profile, profile.profiles_file.as_deref())?;
            let sl = SurgerySlope::new(slope.p, slope.q)?;
            let table = hf_table(&prof, sl)?;
            println!("{}", if table.is_lspace() { "yes" } else { "no" });
        }
        Command::Obstruct(cmd) => match cmd {
            ObstructCommand::SameKnot {
                profile,
                cover,
                p2,
                q2,
                prime,
            } => {
                let prof = resolve_profile(&profile.profile, profile.profiles_file.as_deref())?;
                let mut query = CoverQuery::new(
                    prof.clone(),
                    SurgerySlope::new(cover.p, cover.q)?,
                    prof,
                    SurgerySlope::new(p2, q2)?,
                );
                if let Some(r) = prime {
                    query = query.with_prime(r);
                }
                print_obstruction(&query)?;
            }
            ObstructCommand::Pair {
                profile,
                cover,
                profile2,
                p2,
                q2,
                prime,
            } => {
                let cover_prof =
                    resolve_profile(&profile.profile, profile.profiles_file.as_deref())?;
                let base_prof = resolve_profile(&profile2, profile.profiles_file.as_deref())?;
                let mut query = CoverQuery::new(
                    cover_prof,
                    SurgerySlope::new(cover.p, cover.q)?,
                    base_prof,
                    SurgerySlope::new(p2, q2)?,
                );
                if let Some(r) = prime {
                    query = query.with_prime(r);
                }
                print_obstruction(&query)?;
            }
        },
        Command::Lens(cmd) => match cmd {
            LensCommand::Moser { slope } => {
                let sl = SurgerySlope::new(slope.p, slope.q)?;
                match moser_trefoil(sl) {
                    Some(lens) => println!("{lens}"),
                    None => println!("none: {sl} is not of the form (6q +/- 1)/q"),
                }
            }
            LensCommand::Cover { p, q, degree } => {
                let lens = LensSpace::new(p, q)?;
                match cyclic_cover(lens, degree) {
                    Some(cover) => println!("{cover}"),
                    None => println!("none: {degree} does not divide {p}"),
                }
            }
            LensCommand::Family { q, k, sign } => {
                let sign: Sign = sign.parse()?;
                let record = verify_trefoil_family(q, k, sign)?;
                println!(
                    "cover : {} = S^3_{{{}/{}}}(T(2,3))",
                    record.cover, record.p, record.q
                );
                println!(
                    "base  : {} = S^3_{{{}/{}}}(T(2,3))",
                    record.base, record.p_prime, record.q_prime
                );
                println!("degree: {}", record.degree);
                println!("(a) p' = p*(6k+1):            {}", record.product_identity);
                println!("(b) both slopes are Moser:    {}", record.moser_applies);
                println!("(c) cyclic cover matches:     {}", record.cover_matches);
                match record.prime_power {
                    Some((r, n)) => println!("(d) degree is a prime power:  true ({r}^{n})"),
                    None => println!("(d) degree is a prime power:  false"),
                }
                // Cross-check (c) through the public pieces, for scripts that grep.
                debug_assert!(cyclic_cover(record.base, record.degree)
                    .map(|c| lens_homeomorphic(c, record.cover))
                    .unwrap_or(false) == record.cover_matches);
            }
        },
        Command::Survey(SurveyCommand::Run {
            job,
            out,
            format,
            workers,
        }) => cmd_survey_run(&job, out, format, workers)?,
        Command::Profile(ProfileCommand::Validate { profiles_file }) => {
            let text = read_file(&profiles_file)?;
            let parsed = parse_profiles(&text)?;
            if parsed.is_empty() {
                println!("no profiles found");
            }
            for (profile, report) in parsed {
                println!("{}: {report}", profile.name);
            }
        }
    }
    Ok(())
}

fn main() {
    match run() {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Overflow(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}
