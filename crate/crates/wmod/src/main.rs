//! Thin command-line front end over the library: parse a semigroup, run the
//! requested pipeline stage, print text or JSON. Exit codes: 0 success,
//! 1 domain guard violation, 2 parse/validation error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use wmod::canonical::CanonicalModel;
use wmod::error::Error;
use wmod::report::{self, AnalysisReport, AnalyzeOptions};
use wmod::unfolding::{self, CoefficientStatus};
use wmod::{cotangent, presentation, ScalarField};
use wmod::{enumerate_semigroups, parse_generators, EnumerationFilter, NumericalSemigroup};

#[derive(Parser)]
#[command(
    name = "wmod",
    version,
    about = "Exact invariants of numerical semigroups, monomial curves, and their moduli"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: semigroup invariants, presentation, T1, moduli.
    Analyze(AnalyzeArgs),
    /// All semigroups of a fixed genus, with optional filters.
    Enumerate(EnumerateArgs),
    /// Graded dimensions of the first cotangent module.
    T1(SemigroupArgs),
    /// Unfolded defining equations and the normalized moduli coordinates.
    Unfold(SemigroupArgs),
    /// Canonical quadrics and verified syzygy certificates.
    Syzygies(SyzygiesArgs),
    /// Gap-sumset realizability screen.
    Buchweitz(BuchweitzArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Comma-separated generators, e.g. "4,7,10".
    #[arg(value_name = "GENERATORS", required_unless_present = "batch")]
    generators: Option<String>,
    /// Process one semigroup per line from a file ('#' comments allowed).
    #[arg(long, value_name = "FILE", conflicts_with = "generators")]
    batch: Option<PathBuf>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", value_name = "P", default_value_t = 0)]
    characteristic: u64,
    #[arg(long)]
    json: bool,
    /// Include the canonical model block (quadrics, syzygy certificates).
    #[arg(long)]
    canonical: bool,
    /// Fail (exit 1) instead of warning when the moduli guards reject.
    #[arg(long)]
    require_moduli: bool,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    genus: u64,
    #[arg(long)]
    symmetric: bool,
    #[arg(long)]
    ci: bool,
    /// Append the moduli dimension where the guards pass.
    #[arg(long)]
    moduli: bool,
    #[arg(long = "char", value_name = "P", default_value_t = 0)]
    characteristic: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SemigroupArgs {
    #[arg(value_name = "GENERATORS")]
    generators: String,
    #[arg(long = "char", value_name = "P", default_value_t = 0)]
    characteristic: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SyzygiesArgs {
    #[arg(value_name = "GENERATORS")]
    generators: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BuchweitzArgs {
    #[arg(value_name = "GENERATORS")]
    generators: String,
    /// Largest sumset order to screen.
    #[arg(long = "n-max", value_name = "N", default_value_t = 4)]
    n_max: u64,
    #[arg(long)]
    json: bool,
}

fn main() {
    let cli = Cli::parse();
    let json_mode = match &cli.command {
        Command::Analyze(a) => a.json,
        Command::Enumerate(a) => a.json,
        Command::T1(a) => a.json,
        Command::Unfold(a) => a.json,
        Command::Syzygies(a) => a.json,
        Command::Buchweitz(a) => a.json,
    };
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            if json_mode {
                println!("{}", serde_json::to_string_pretty(&report::error_json(&e)).unwrap());
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(e.exit_code());
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::T1(args) => cmd_t1(args),
        Command::Unfold(args) => cmd_unfold(args),
        Command::Syzygies(args) => cmd_syzygies(args),
        Command::Buchweitz(args) => cmd_buchweitz(args),
    }
}

fn semigroup_from(text: &str) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&parse_generators(text)?)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::Parse(format!("cannot create {}: {e}", path.display())))?;
            f.write_all(content.as_bytes())
                .map_err(|e| Error::Parse(format!("write failed: {e}")))?;
            Ok(())
        }
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let opts = AnalyzeOptions {
        characteristic: args.characteristic,
        canonical: args.canonical,
        require_moduli: args.require_moduli,
    };
    if let Some(batch_path) = &args.batch {
        let text = std::fs::read_to_string(batch_path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", batch_path.display())))?;
        let lines = wmod::parse_batch(&text);
        // Worker threads per chunk; results reassembled in line order.
        let results = run_batch(&lines, opts);
        let mut rendered = Vec::new();
        let mut worst: i32 = 0;
        for ((line_no, _), result) in lines.iter().zip(results) {
            match result {
                Ok(rep) => {
                    if args.json {
                        rendered.push(serde_json::to_string(&rep).unwrap());
                    } else {
                        rendered.push(format!("# line {line_no}\n{}", render_analysis(&rep)));
                    }
                }
                Err(e) => {
                    worst = worst.max(e.exit_code());
                    if args.json {
                        rendered.push(serde_json::to_string(&report::error_json(&e)).unwrap());
                    } else {
                        rendered.push(format!("# line {line_no}\nerror: {e}"));
                    }
                }
            }
        }
        emit(&args.out, &rendered.join("\n"))?;
        if worst > 0 {
            std::process::exit(worst);
        }
        return Ok(());
    }
    let s = semigroup_from(args.generators.as_deref().unwrap())?;
    let rep = report::analyze(&s, opts)?;
    let content = if args.json {
        serde_json::to_string_pretty(&rep).unwrap()
    } else {
        render_analysis(&rep)
    };
    emit(&args.out, &content)
}

fn run_batch(
    lines: &[(usize, Result<Vec<u64>, Error>)],
    opts: AnalyzeOptions,
) -> Vec<Result<AnalysisReport, Error>> {
    let analyze_one = |gens: &Result<Vec<u64>, Error>| match gens {
        Ok(g) => NumericalSemigroup::from_generators(g).and_then(|s| report::analyze(&s, opts)),
        Err(e) => Err(Error::Parse(e.to_string())),
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    if lines.len() < 2 || workers < 2 {
        return lines.iter().map(|(_, g)| analyze_one(g)).collect();
    }
    let mut slots: Vec<Option<Result<AnalysisReport, Error>>> = Vec::new();
    slots.resize_with(lines.len(), || None);
    let slots = std::sync::Mutex::new(slots);
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= lines.len() {
                    break;
                }
                let result = analyze_one(&lines[i].1);
                slots.lock().unwrap()[i] = Some(result);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|r| r.unwrap()).collect()
}

fn render_analysis(rep: &AnalysisReport) -> String {
    let mut out = String::new();
    let s = &rep.semigroup;
    let gens: Vec<String> = s.generators.iter().map(|g| g.to_string()).collect();
    out.push_str(&format!("semigroup <{}>\n", gens.join(",")));
    out.push_str(&format!(
        "  genus {}  frobenius {}  conductor {}\n",
        s.genus, s.frobenius, s.conductor
    ));
    out.push_str(&format!(
        "  symmetric {}  hyperelliptic {}  ordinary {}  complete_intersection {}\n",
        s.symmetric, s.hyperelliptic, s.ordinary, s.complete_intersection
    ));
    if let Some(p) = &rep.presentation {
        out.push_str(&format!(
            "presentation: {} binomial(s), betti weights {:?}\n",
            p.binomials.len(),
            p.betti_weights
        ));
        for (i, b) in p.binomials.iter().enumerate() {
            out.push_str(&format!("  G{} (weight {}): {}\n", i + 1, b.weight, b.text));
        }
    }
    if let Some(t1) = &rep.t1 {
        out.push_str(&format!(
            "t1 (char {}): tjurina {}  dim T1- {}  dim T1+ {}\n",
            t1.characteristic, t1.tjurina, t1.negative_dim, t1.nonnegative_dim
        ));
        let by: Vec<String> =
            t1.by_degree.iter().map(|(d, n)| format!("{d}:{n}")).collect();
        out.push_str(&format!("  by degree: {}\n", by.join(" ")));
    }
    if let Some(m) = &rep.moduli {
        out.push_str(&format!(
            "moduli: {} = P^{} as a set, {} coefficients ({} free / {} normalized)\n",
            m.space, m.dimension, m.coefficient_total, m.free, m.normalized
        ));
        for eq in &m.equations {
            out.push_str(&format!("  {eq}\n"));
        }
    }
    if let Some(c) = &rep.canonical {
        out.push_str(&format!(
            "canonical model: {} quadrics, {} excluded targets, {} certificates\n",
            c.quadrics.len(),
            c.excluded_targets.len(),
            c.certificates.len()
        ));
    }
    for w in &rep.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.pop();
    out
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Error> {
    let max_genus = match std::env::var("WMOD_MAX_GENUS") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("WMOD_MAX_GENUS is not a number: {v}")))?,
        Err(_) => wmod::DEFAULT_MAX_GENUS,
    };
    let field = ScalarField::from_characteristic(args.characteristic)?;
    let filter = EnumerationFilter { symmetric: args.symmetric, complete_intersection: args.ci };
    for s in enumerate_semigroups(args.genus, filter, max_genus)? {
        let gens: Vec<String> = s.minimal_generators().iter().map(|g| g.to_string()).collect();
        let moduli_dim = if args.moduli {
            unfolding::moduli_report(&s, field).ok().map(|m| m.dimension)
        } else {
            None
        };
        if args.json {
            println!(
                "{}",
                json!({
                    "schema_version": report::SCHEMA_VERSION,
                    "generators": s.minimal_generators(),
                    "genus": s.genus(),
                    "symmetric": s.is_symmetric(),
                    "complete_intersection": presentation::is_complete_intersection(&s),
                    "moduli_dim": moduli_dim,
                })
            );
        } else {
            match moduli_dim {
                Some(d) => println!("{}\tmoduli_dim={}", gens.join(","), d),
                None => println!("{}", gens.join(",")),
            }
        }
    }
    Ok(())
}

fn cmd_t1(args: SemigroupArgs) -> Result<(), Error> {
    let s = semigroup_from(&args.generators)?;
    let field = ScalarField::from_characteristic(args.characteristic)?;
    let rep = cotangent::t1_report(&s, field)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": report::SCHEMA_VERSION,
                "generators": s.minimal_generators(),
                "t1": rep,
            }))
            .unwrap()
        );
    } else {
        println!("semigroup {s}  (char {})", rep.characteristic);
        println!(
            "tjurina {}  dim T1- {}  dim T1+ {}",
            rep.tjurina, rep.negative_dim, rep.nonnegative_dim
        );
        for (d, n) in &rep.by_degree {
            println!("  degree {d}: {n}");
        }
        for w in &rep.warnings {
            println!("warning: {w}");
        }
    }
    Ok(())
}

fn cmd_unfold(args: SemigroupArgs) -> Result<(), Error> {
    let s = semigroup_from(&args.generators)?;
    let field = ScalarField::from_characteristic(args.characteristic)?;
    let p = presentation::minimal_presentation(&s);
    let unfolded = unfolding::unfold(&p);
    // Normalization needs a complete intersection; otherwise show the raw
    // unfold and flag it.
    let mut flag = None;
    let normalized = if p.is_complete_intersection() {
        unfolding::normalize(&unfolded, field)?
    } else {
        flag = Some("not a complete intersection; coefficients left unnormalized");
        unfolded
    };
    let moduli = unfolding::moduli_report_for(&p, field);
    if args.json {
        let coefficients: Vec<_> = normalized
            .coefficients
            .iter()
            .flatten()
            .map(|c| {
                json!({
                    "s": c.relation_weight,
                    "m": c.monomial_weight,
                    "weight": c.weight,
                    "status": match c.status {
                        CoefficientStatus::Free => "free",
                        CoefficientStatus::NormalizedToZero => "normalized_to_zero",
                    },
                })
            })
            .collect();
        let moduli_json = match &moduli {
            Ok(m) => json!({
                "dimension": m.dimension,
                "space": m.space(),
                "weights": m.weights,
            }),
            Err(_) => serde_json::Value::Null,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": report::SCHEMA_VERSION,
                "generators": s.minimal_generators(),
                "relations": normalized
                    .presentation
                    .generators
                    .iter()
                    .map(|b| b.render(s.minimal_generators()))
                    .collect::<Vec<_>>(),
                "coefficients": coefficients,
                "total": normalized.total_coefficients(),
                "free": normalized.free_coefficients().len(),
                "equations": (0..normalized.coefficients.len())
                    .map(|j| normalized.render_relation(j))
                    .collect::<Vec<_>>(),
                "moduli": moduli_json,
                "warnings": flag.map(|f| vec![f]).unwrap_or_default(),
            }))
            .unwrap()
        );
    } else {
        println!("semigroup {s}  (char {})", field.characteristic());
        if let Some(f) = flag {
            println!("warning: {f}");
            println!("coefficients: {} total", normalized.total_coefficients());
        } else {
            println!(
                "coefficients: {} total, {} free after normalization",
                normalized.total_coefficients(),
                normalized.free_coefficients().len()
            );
        }
        for j in 0..normalized.coefficients.len() {
            println!("  {}", normalized.render_relation(j));
        }
        match moduli {
            Ok(m) => println!("moduli: {} (dimension {})", m.space(), m.dimension),
            Err(e) => println!("moduli unavailable: {e}"),
        }
    }
    Ok(())
}

fn cmd_syzygies(args: SyzygiesArgs) -> Result<(), Error> {
    let s = semigroup_from(&args.generators)?;
    let model = CanonicalModel::new(&s)?;
    let ci = presentation::is_complete_intersection(&s);
    let block = report::canonical_block(&model, ci)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": report::SCHEMA_VERSION,
                "generators": s.minimal_generators(),
                "canonical": block,
            }))
            .unwrap()
        );
    } else {
        println!("semigroup {s}: {} canonical quadrics", block.quadrics.len());
        for q in &block.quadrics {
            println!("  {} = {}", q.label, q.text);
        }
        println!("excluded targets: {}", block.excluded_targets.join(" "));
        for cert in &block.certificates {
            let terms: Vec<String> = cert
                .terms
                .iter()
                .map(|t| {
                    format!("{}X{}*{}", if t.eps < 0 { "-" } else { "+" }, t.n, t.label)
                })
                .collect();
            let verified = match cert.shrunk_residue_zero {
                Some(true) => "  [shrunk residue 0]",
                Some(false) => "  [shrunk residue NONZERO]",
                None => "",
            };
            println!("syzygy {}: {} = 0{}", cert.target, terms.join(" "), verified);
        }
    }
    Ok(())
}

fn cmd_buchweitz(args: BuchweitzArgs) -> Result<(), Error> {
    let s = semigroup_from(&args.generators)?;
    let rep = s.buchweitz_screen(args.n_max);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": report::SCHEMA_VERSION,
                "generators": s.minimal_generators(),
                "genus": rep.genus,
                "entries": rep.entries,
                "obstructed": rep.obstructed,
            }))
            .unwrap()
        );
    } else {
        println!("semigroup {s}  genus {}", rep.genus);
        for e in &rep.entries {
            println!(
                "  n={}: sumset {} vs bound {}{}",
                e.n,
                e.count,
                e.bound,
                if e.exceeded { "  EXCEEDED" } else { "" }
            );
        }
        if rep.obstructed {
            let first = rep.entries.iter().find(|e| e.exceeded).unwrap();
            println!("obstructed at n={}", first.n);
        } else {
            println!("not obstructed");
        }
    }
    Ok(())
}
