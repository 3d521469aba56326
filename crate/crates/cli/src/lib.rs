//! `qwhit`: compute, verify, transform and render from the command line.
//!
//! Exit codes: 0 success, 1 verification or oracle failure, 2 usage or
//! input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use qwhittaker::bijections::{omega, psi_inv, psi_inverse, psi_quinv, Stat};
use qwhittaker::lattice::LatticeDiagram;
use qwhittaker::oracle::lattice_character;
use qwhittaker::polymodels::{
    basic_character_partial, fiber, whittaker, DegreeCoefficient, ModelTag, NegativeExponent,
};
use qwhittaker::verify::{self, Suite, VerifyConfig};
use qwhittaker::{Exec, Filling, GTPattern, Partition, Pop, QPoly, Report};

/// Environment variable naming the results cache directory. Unset disables
/// caching.
pub const CACHE_ENV: &str = "QWHIT_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qwhit",
    version,
    about = "q-Whittaker polynomials and their combinatorial models"
)]
pub struct Cli {
    /// Run every enumeration on the current thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Model {
    Fermionic,
    Inv,
    Quinv,
}

impl From<Model> for ModelTag {
    fn from(m: Model) -> ModelTag {
        match m {
            Model::Fermionic => ModelTag::Fermionic,
            Model::Inv => ModelTag::Inv,
            Model::Quinv => ModelTag::Quinv,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StatArg {
    Inv,
    Quinv,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::Inv => Stat::Inv,
            StatArg::Quinv => Stat::Quinv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Equality,
    Bijections,
    Diagrams,
    Fibers,
    Maj,
    Dsplice,
    Branching,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Equality => Suite::Equality,
            SuiteArg::Bijections => Suite::Bijections,
            SuiteArg::Diagrams => Suite::Diagrams,
            SuiteArg::Fibers => Suite::Fibers,
            SuiteArg::Maj => Suite::Maj,
            SuiteArg::Dsplice => Suite::Dsplice,
            SuiteArg::Branching => Suite::Branching,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Rsort,
    Dsplice,
    PsiInv,
    PsiQuinv,
    PsiInvInverse,
    PsiQuinvInverse,
    Omega,
    Bcomp,
    Pr,
    Br,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute W_lambda(x_1..x_n; q) in one model.
    Compute {
        /// Comma separated parts, e.g. 10,6,4.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "fermionic")]
        model: Model,
        #[arg(long, value_enum, default_value = "json")]
        format: PolyFormat,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Apply a map to a JSON filling, pattern or overlaid pattern.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[arg(long)]
        input: PathBuf,
    },
    /// Enumerate the fillings that row-sort to a pattern.
    Fiber {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "quinv")]
        stat: StatArg,
    },
    /// Draw the lattice-path picture of a filling.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        /// Write the picture here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated CSF series for the basic representation character.
    Character {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        q_cap: usize,
        #[arg(long)]
        check_oracle: bool,
    },
}

#[derive(Serialize)]
struct VerifyOutput {
    suite: &'static str,
    max_size: usize,
    vars: usize,
    seed: u64,
    #[serde(flatten)]
    report: Report,
}

#[derive(Serialize)]
struct FiberOutput {
    stat: &'static str,
    size: usize,
    qgen: QPoly,
    wtq: QPoly,
    area: usize,
    qgen_equals_wtq: bool,
    area_holds: bool,
    pairs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct CharacterOutput<'a> {
    vars: usize,
    max_k: usize,
    q_cap: usize,
    coefficients: Vec<DegreeCoefficient>,
    all_stable: bool,
    negative_exponents: &'a [NegativeExponent],
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_matches: Option<bool>,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

/// Everything a command writes, plus its exit code.
struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(mut self, passed: bool) -> Output {
        self.code = if passed { EXIT_OK } else { EXIT_FAILED };
        self
    }
}

fn to_line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_shape(s: &str) -> Result<Partition, Usage> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Usage(format!("bad --shape {s:?}: {e}")))?;
    Ok(Partition::new(parts)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Usage> {
    let text = fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_csf(path: &Path) -> Result<Filling, Usage> {
    let f: Filling = read_json(path)?;
    if !f.is_csf() {
        return Err(Usage(format!("{} is not column strict", path.display())));
    }
    Ok(f)
}

/// Content-addressed store of command outputs.
struct Cache {
    dir: PathBuf,
}

impl Cache {
    fn from_env() -> Option<Cache> {
        std::env::var_os(CACHE_ENV)
            .filter(|d| !d.is_empty())
            .map(|d| Cache { dir: d.into() })
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.out", hex::encode(digest)))
    }

    fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    fn put(&self, key: &str, value: &str) {
        let target = self.path(key);
        let tmp = target.with_extension(format!("tmp{}", std::process::id()));
        let written = fs::create_dir_all(&self.dir)
            .and_then(|_| fs::write(&tmp, value))
            .and_then(|_| fs::rename(&tmp, &target));
        if written.is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
}

fn compute(
    shape: &str,
    vars: usize,
    model: Model,
    format: PolyFormat,
    exec: Exec,
) -> Result<Output, Usage> {
    let lambda = parse_shape(shape)?;
    let key = format!(
        "{}|compute|{}|{vars}|{model:?}|{format:?}",
        env!("CARGO_PKG_VERSION"),
        lambda
            .parts()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    let cache = Cache::from_env();
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(Output::ok(hit));
    }
    let w = whittaker(&lambda, vars, model.into(), exec)?;
    let text = match format {
        PolyFormat::Json => to_line(&w),
        PolyFormat::Text => w.to_text(),
    };
    if let Some(c) = cache {
        c.put(&key, &text);
    }
    Ok(Output::ok(text))
}

fn verify_cmd(
    suite: SuiteArg,
    max_size: usize,
    vars: usize,
    seed: u64,
    exec: Exec,
) -> Result<Output, Usage> {
    if vars == 0 {
        return Err(Usage("--vars must be at least 1".into()));
    }
    let suite: Suite = suite.into();
    let report = verify::run(
        suite,
        &VerifyConfig {
            max_size,
            vars,
            seed,
            exec,
        },
    );
    let body = VerifyOutput {
        suite: suite.name(),
        max_size,
        vars,
        seed,
        report,
    };
    let passed = body.report.passed();
    Ok(Output::ok(to_line(&body)).with_code(passed))
}

fn map_cmd(name: MapName, input: &Path) -> Result<Output, Usage> {
    let out = match name {
        MapName::Rsort => to_line(&read_csf(input)?.rsort()?),
        MapName::Dsplice => to_line(&read_csf(input)?.dsplice()?),
        MapName::PsiInv => to_line(&psi_inv(&read_csf(input)?)?),
        MapName::PsiQuinv => to_line(&psi_quinv(&read_csf(input)?)?),
        MapName::PsiInvInverse => to_line(&psi_inverse(&read_json::<Pop>(input)?, Stat::Inv)?),
        MapName::PsiQuinvInverse => to_line(&psi_inverse(&read_json::<Pop>(input)?, Stat::Quinv)?),
        MapName::Omega => to_line(&omega(&read_csf(input)?)?),
        MapName::Bcomp => to_line(&read_json::<Pop>(input)?.bcomp()),
        MapName::Pr => to_line(&read_json::<Pop>(input)?.pr()),
        MapName::Br => to_line(&read_json::<Pop>(input)?.br()?),
    };
    Ok(Output::ok(out))
}

fn fiber_cmd(input: &Path, stat: StatArg) -> Result<Output, Usage> {
    let t: GTPattern = read_json(input)?;
    let stat: Stat = stat.into();
    let fib = fiber(&t);
    let area = t.area();
    let wtq = t.wtq();
    let mut qgen = QPoly::zero();
    let mut pairs = Vec::with_capacity(fib.len());
    let mut area_holds = true;
    for f in &fib {
        let (i, q) = (f.inv()?, f.quinv()?);
        area_holds &= i + q == area;
        qgen.add_monomial(if stat == Stat::Inv { i } else { q });
        pairs.push([i, q]);
    }
    let matches = qgen == wtq;
    let body = FiberOutput {
        stat: stat.name(),
        size: fib.len(),
        qgen,
        wtq,
        area,
        qgen_equals_wtq: matches,
        area_holds,
        pairs,
    };
    Ok(Output::ok(to_line(&body)).with_code(matches && area_holds))
}

fn render_cmd(input: &Path, format: RenderFormat, out: Option<&Path>) -> Result<Output, Usage> {
    let f = read_csf(input)?;
    let d = LatticeDiagram::new(&f)?;
    let picture = match format {
        RenderFormat::Ascii => d.to_ascii(),
        RenderFormat::Svg => d.to_svg(),
    };
    let summary = format!(
        "crossings: {} (inv(F)={})\nnon-crossings: {} (quinv(F)={})\n",
        d.crossing_count(),
        f.inv()?,
        d.non_crossing_count(),
        f.quinv()?
    );
    let counts_agree = d.crossing_count() == f.inv()? && d.non_crossing_count() == f.quinv()?;
    let output = match out {
        Some(path) => {
            fs::write(path, &picture)
                .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
            Output::ok(summary)
        }
        None if format == RenderFormat::Svg => Output {
            stdout: picture,
            stderr: summary,
            code: EXIT_OK,
        },
        None => Output::ok(picture),
    };
    Ok(output.with_code(counts_agree))
}

fn character_cmd(
    vars: usize,
    max_k: usize,
    q_cap: usize,
    check_oracle: bool,
    exec: Exec,
) -> Result<Output, Usage> {
    if vars < 2 {
        return Err(Usage("--vars must be at least 2".into()));
    }
    let c = basic_character_partial(vars, max_k, q_cap, exec)?;
    let oracle_matches = check_oracle.then(|| c.matches(&lattice_character(vars, q_cap)));
    let passed = c.negative.is_empty() && oracle_matches.is_none_or(|m| m && c.all_stable());
    let body = CharacterOutput {
        vars,
        max_k,
        q_cap,
        coefficients: c.coefficients(),
        all_stable: c.all_stable(),
        negative_exponents: &c.negative,
        oracle_matches,
    };
    Ok(Output::ok(to_line(&body)).with_code(passed))
}

fn dispatch(cli: Cli) -> Result<Output, Usage> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.command {
        Command::Compute {
            shape,
            vars,
            model,
            format,
        } => compute(&shape, vars, model, format, exec),
        Command::Verify {
            suite,
            max_size,
            vars,
            seed,
        } => verify_cmd(suite, max_size, vars, seed, exec),
        Command::Map { name, input } => map_cmd(name, &input),
        Command::Fiber { input, stat } => fiber_cmd(&input, stat),
        Command::Render { input, format, out } => render_cmd(&input, format, out.as_deref()),
        Command::Character {
            vars,
            max_k,
            q_cap,
            check_oracle,
        } => character_cmd(vars, max_k, q_cap, check_oracle, exec),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stderr.write_all(out.stderr.as_bytes());
            out.code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}
