//! `paraf`: solve argumentation frameworks, translate them to logic
//! programs, generate benchmark families, and cross-check the solver's
//! independent routes against each other.
//!
//! Exit codes: 0 on success, 1 on semantic "NO" answers, 2 on input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use paraf_core::af::DEFAULT_ENUM_CAP;
use paraf_core::generators;
use paraf_core::io::{self, InputFormat};
use paraf_core::paraco;
use paraf_core::reasoning;
use paraf_core::semantics::{ExtensionSet, SemanticsId};
use paraf_core::stabilizer;
use paraf_core::{Error, Framework};

#[derive(Parser)]
#[command(name = "paraf", version)]
#[command(about = "Solver for abstract argumentation semantics, classical and paracoherent")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute extensions or acceptance answers for a framework file.
    Solve {
        /// Semantics to use
        #[arg(long, value_enum)]
        sem: CliSemantics,

        /// Task: EE (enumerate), SE (some extension), DC (credulous),
        /// DS (skeptical); DC and DS take the queried argument before FILE
        #[arg(long)]
        task: String,

        /// Input format (defaults to the file extension)
        #[arg(long, value_enum)]
        format: Option<CliFormat>,

        /// Enumeration cap override (also settable via PARAF_MAX_ARGS)
        #[arg(long)]
        max_args: Option<usize>,

        /// `FILE` for EE/SE; `ARG FILE` for DC/DS
        #[arg(value_name = "ARG|FILE", required = true, num_args = 1..=2)]
        rest: Vec<String>,
    },

    /// Translate a framework into a program or a derived framework.
    Translate {
        #[arg(long, value_enum)]
        to: TranslateTarget,

        /// Input format (defaults to the file extension)
        #[arg(long, value_enum)]
        format: Option<CliFormat>,

        file: PathBuf,
    },

    /// Generate a framework from a parametric family.
    Gen {
        #[command(subcommand)]
        target: GenTarget,

        /// Output format
        #[arg(long, value_enum, default_value_t = CliFormat::Apx, global = true)]
        format: CliFormat,
    },

    /// Cross-check the solver routes on seeded random frameworks.
    Xcheck {
        /// Largest framework size to draw
        #[arg(long, default_value_t = 7)]
        max_args: usize,

        /// Number of random frameworks
        #[arg(long, default_value_t = 100)]
        trials: usize,

        /// Seed for the framework stream
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CliSemantics {
    Cf,
    Adm,
    Com,
    Stb,
    Sem,
    Stage,
    Para,
}

impl From<CliSemantics> for SemanticsId {
    fn from(s: CliSemantics) -> SemanticsId {
        match s {
            CliSemantics::Cf => SemanticsId::Cf,
            CliSemantics::Adm => SemanticsId::Adm,
            CliSemantics::Com => SemanticsId::Comp,
            CliSemantics::Stb => SemanticsId::Stb,
            CliSemantics::Sem => SemanticsId::Sem,
            CliSemantics::Stage => SemanticsId::Stage,
            CliSemantics::Para => SemanticsId::Para,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFormat {
    Tgf,
    Apx,
}

#[derive(Clone, Copy, ValueEnum)]
enum TranslateTarget {
    /// The framework's logic program
    Lp,
    /// Epistemic transformation of the program
    Kappa,
    /// Collapsed epistemic transformation (framework-shaped programs)
    KappaSimple,
    /// Epistemic transformation with belief closure
    Ht,
    /// Externally-supported rewriting with shadow atoms
    Mes,
    /// The guarded shadow framework
    ShadowAf,
}

#[derive(Subcommand)]
enum GenTarget {
    /// n-radial star polygon (2n+1 arguments)
    RadialStar { n: usize },
    /// Directed attack cycle
    Cycle { n: usize },
    /// Stable-roommates encoding of a preference profile file
    Srp { prefs: PathBuf },
    /// A named worked-example framework
    Fixture { name: String },
    /// Seeded random digraph
    Random { n: usize, p: f64, seed: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Solve {
            sem,
            task,
            format,
            max_args,
            rest,
        } => solve(sem.into(), &task, format, max_args, &rest),
        Command::Translate { to, format, file } => translate(to, format, &file),
        Command::Gen { target, format } => gen(target, format),
        Command::Xcheck {
            max_args,
            trials,
            seed,
        } => Ok(xcheck(max_args, trials, seed)),
    }
}

fn read_framework(path: &Path, format: Option<CliFormat>) -> Result<Framework, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let format = match format {
        Some(CliFormat::Tgf) => InputFormat::Tgf,
        Some(CliFormat::Apx) => InputFormat::Apx,
        None => InputFormat::from_path(path).ok_or_else(|| {
            Error::Input(format!(
                "cannot infer format of {}; pass --format tgf|apx",
                path.display()
            ))
        })?,
    };
    match format {
        InputFormat::Tgf => io::parse_tgf(&text),
        InputFormat::Apx => io::parse_apx(&text),
        InputFormat::Lp => Err(Error::Input(
            "expected a framework file, not a program".into(),
        )),
    }
}

fn enumeration_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("PARAF_MAX_ARGS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_ENUM_CAP)
}

fn render_extension(f: &Framework, e: &paraf_core::ArgSet) -> String {
    format!("[{}]", e.member_names(f).expect("bound set").join(","))
}

fn solve(
    sem: SemanticsId,
    task: &str,
    format: Option<CliFormat>,
    max_args: Option<usize>,
    rest: &[String],
) -> Result<ExitCode, Error> {
    let takes_arg = matches!(task, "DC" | "DS");
    let (query_arg, file) = match (takes_arg, rest) {
        (false, [file]) => (None, file),
        (true, [arg, file]) => (Some(arg.as_str()), file),
        (false, _) => {
            return Err(Error::Input(format!("task {task} expects just FILE")));
        }
        (true, _) => {
            return Err(Error::Input(format!("task {task} expects ARG FILE")));
        }
    };

    let f = read_framework(Path::new(file), format)?;
    let cap = enumeration_cap(max_args);
    let extensions: ExtensionSet = reasoning::extensions_with_cap(&f, sem, cap)?;

    match task {
        "EE" => {
            for e in extensions.iter() {
                println!("{}", render_extension(&f, e));
            }
            Ok(ExitCode::SUCCESS)
        }
        "SE" => match extensions.first() {
            Some(e) => {
                println!("{}", render_extension(&f, e));
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("NO");
                Ok(ExitCode::from(1))
            }
        },
        "DC" | "DS" => {
            let arg = query_arg.expect("arity checked above");
            let i = f
                .arg_index(arg)
                .ok_or_else(|| Error::UnknownArgument(arg.to_string()))?;
            if task == "DC" {
                answer(extensions.iter().any(|e| e.contains(i)))
            } else {
                if extensions.is_empty() {
                    eprintln!("# no extensions");
                }
                answer(extensions.iter().all(|e| e.contains(i)))
            }
        }
        other => Err(Error::Input(format!(
            "unknown task `{other}` (expected EE, SE, DC or DS)"
        ))),
    }
}

fn answer(yes: bool) -> Result<ExitCode, Error> {
    if yes {
        println!("YES");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("NO");
        Ok(ExitCode::from(1))
    }
}

fn translate(
    to: TranslateTarget,
    format: Option<CliFormat>,
    file: &Path,
) -> Result<ExitCode, Error> {
    let f = read_framework(file, format)?;
    let program = paraco::af_to_program(&f);
    let text = match to {
        TranslateTarget::Lp => io::render_program(&program),
        TranslateTarget::Kappa => io::render_program(&paraco::kappa_transform(&program)?),
        TranslateTarget::KappaSimple => io::render_program(&paraco::kappa_simplified(&program)?),
        TranslateTarget::Ht => io::render_program(&paraco::ht_transform(&program)?),
        TranslateTarget::Mes => io::render_program(&paraco::mes_program(&program)?),
        TranslateTarget::ShadowAf => {
            let shadowed = stabilizer::guarded_shadow_framework(&f)?;
            let as_tgf = matches!(format, Some(CliFormat::Tgf))
                || (format.is_none() && InputFormat::from_path(file) == Some(InputFormat::Tgf));
            if as_tgf {
                io::render_tgf(&shadowed)
            } else {
                io::render_apx(&shadowed)
            }
        }
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn gen(target: GenTarget, format: CliFormat) -> Result<ExitCode, Error> {
    let f = match target {
        GenTarget::RadialStar { n } => generators::gen_radial_star(n)?,
        GenTarget::Cycle { n } => generators::gen_cycle(n)?,
        GenTarget::Srp { prefs } => {
            let text = fs::read_to_string(&prefs)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", prefs.display())))?;
            let profile = generators::PreferenceProfile::parse(&text)?;
            generators::gen_srp(&profile)?
        }
        GenTarget::Fixture { name } => {
            let fx = generators::fixtures();
            fx.get(name.as_str()).cloned().ok_or_else(|| {
                Error::Input(format!(
                    "unknown fixture `{name}` (available: {})",
                    fx.keys().cloned().collect::<Vec<_>>().join(", ")
                ))
            })?
        }
        GenTarget::Random { n, p, seed } => generators::gen_random(n, p, seed)?,
    };
    match format {
        CliFormat::Tgf => print!("{}", io::render_tgf(&f)),
        CliFormat::Apx => print!("{}", io::render_apx(&f)),
    }
    Ok(ExitCode::SUCCESS)
}

fn xcheck(max_args: usize, trials: usize, seed: u64) -> ExitCode {
    use paraf_core::semantics::enumerate_with_cap;

    struct Prop {
        name: &'static str,
        holds: usize,
        failed: Vec<String>,
    }
    impl Prop {
        fn new(name: &'static str) -> Prop {
            Prop {
                name,
                holds: 0,
                failed: Vec::new(),
            }
        }
        fn record(&mut self, ok: bool, f: &Framework) {
            if ok {
                self.holds += 1;
            } else if self.failed.len() < 3 {
                self.failed.push(io::render_apx(f).replace('\n', " "));
            } else {
                self.failed.push(String::new());
            }
        }
    }

    let mut props = [
        Prop::new("taxonomy-inclusions"),
        Prop::new("stable-implies-paracoherent"),
        Prop::new("stable-present-collapses-paracoherent"),
        Prop::new("empty-stabilizer-iff-stable"),
        Prop::new("paracoherent-nonempty"),
        Prop::new("shadow-route-agrees"),
        Prop::new("seq-route-agrees"),
        Prop::new("mes-route-agrees"),
    ];

    let enum_cap = max_args.max(DEFAULT_ENUM_CAP);
    let shadow_cap = 3 * max_args + 2;
    let atom_cap = 4 * max_args + 4;

    let mut state = seed;
    let mut next = || {
        // splitmix64 over the seed stream keeps trials independent of the
        // rand crate's internals.
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };

    for _ in 0..trials {
        let r = next();
        let n = (r % (max_args as u64 + 1)) as usize;
        let p = 0.1 + (next() % 50) as f64 / 100.0;
        let f = generators::gen_random(n, p, next()).expect("generator input is valid");

        let ext = |sem| enumerate_with_cap(&f, sem, enum_cap).expect("within cap");
        let cf = ext(SemanticsId::Cf);
        let adm = ext(SemanticsId::Adm);
        let comp = ext(SemanticsId::Comp);
        let stb = ext(SemanticsId::Stb);
        let sem = ext(SemanticsId::Sem);
        let stage = ext(SemanticsId::Stage);
        let para = stabilizer::paracoherent_extensions_with_cap(&f, enum_cap).expect("within cap");

        let contained =
            |small: &ExtensionSet, big: &ExtensionSet| small.iter().all(|e| big.contains(e));
        props[0].record(
            contained(&sem, &comp)
                && contained(&comp, &adm)
                && contained(&adm, &cf)
                && contained(&stage, &cf)
                && contained(&stb, &sem)
                && contained(&stb, &stage)
                && contained(&para, &cf),
            &f,
        );
        props[1].record(contained(&stb, &para), &f);
        props[2].record(stb.is_empty() || stb == para, &f);
        let sigma =
            stabilizer::global_minimal_stabilizers_with_cap(&f, enum_cap).expect("within cap");
        props[3].record(sigma.contains_empty() == !stb.is_empty(), &f);
        props[4].record(!para.is_empty(), &f);

        let shadow = stabilizer::paracoherent_via_shadow_with_cap(&f, shadow_cap)
            .expect("within shadow cap");
        props[5].record(shadow == para, &f);
        let seq = paraco::seq_extensions_with_cap(&f, atom_cap).expect("within atom cap");
        props[6].record(seq == para, &f);
        let mes = paraco::mes_extensions_with_cap(&f, atom_cap).expect("within atom cap");
        props[7].record(mes == para, &f);
    }

    println!("xcheck: {trials} trials, up to {max_args} arguments, seed {seed}");
    let mut all_ok = true;
    for prop in &props {
        if prop.failed.is_empty() {
            println!("ok   {} ({}/{trials})", prop.name, prop.holds);
        } else {
            all_ok = false;
            println!("FAIL {} ({}/{trials})", prop.name, prop.holds);
            for example in prop.failed.iter().filter(|s| !s.is_empty()) {
                println!("     counterexample: {example}");
            }
        }
    }
    if all_ok {
        println!("xcheck: all properties hold");
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
