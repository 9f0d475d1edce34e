use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use tambara_core::adjoint::{tabulate_adjoint, verify_adjunction, RightAdjoint};
use tambara_core::bispan::{compose, evaluate_with_norm, Bispan, ElementTuple};
use tambara_core::expr::{parse, Env};
use tambara_core::finite::{burnside_mod_green, burnside_mod_unchecked, FiniteGreenFunctor, TableFunctor};
use tambara_core::free::{FreeGreenFixed, FreeGreenUnderlying, FreeTambaraFixed, FreeTambaraUnderlying};
use tambara_core::functor::{
    check_green_axioms, check_tambara_axioms, CheckMode, GreenFunctor, Level, NormFn, Report, TambaraFunctor, Value,
};
use tambara_core::Burnside;

#[derive(Parser)]
#[command(name = "tambara", version, about = "Exact computations with C2 Green and Tambara functors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Green (or, with --tambara, Tambara) axioms of a functor
    Axioms {
        /// A functor table file or a builtin spec
        functor: String,
        #[arg(long)]
        tambara: bool,
        /// Check every element, pair and triple (the default for tables)
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Check this many random tuples instead
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate an element expression
    Eval {
        #[arg(long)]
        functor: String,
        #[arg(long, value_enum, default_value = "fixed")]
        level: LevelArg,
        /// Level of `x` for --bind (table functors and Burnside)
        #[arg(long, value_enum, default_value = "fixed")]
        generator: LevelArg,
        /// `x=<element>`: an element name for tables, an expression otherwise
        #[arg(long)]
        bind: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal forms in the free functors
    Free {
        #[command(subcommand)]
        command: FreeCommand,
    },
    /// Compose and evaluate bispans
    Bispan {
        #[command(subcommand)]
        command: BispanCommand,
    },
    /// The right adjoint F(R) of a finite Green functor
    Radjoint {
        file: PathBuf,
        /// Print all operation tables as a functor table
        #[arg(long)]
        print_table: bool,
        #[arg(long)]
        check_axioms: bool,
    },
    /// Verify the adjunction between a finite Green and a finite Tambara functor
    Adjunction {
        #[arg(long)]
        green: PathBuf,
        #[arg(long)]
        tambara: PathBuf,
    },
}

#[derive(Subcommand)]
enum FreeCommand {
    /// Print the normal form of an expression
    Normalize {
        #[arg(long, value_enum)]
        generator: LevelArg,
        #[arg(long, value_enum)]
        system: SystemArg,
        #[arg(long, value_enum, default_value = "fixed")]
        level: LevelArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum BispanCommand {
    /// Compose `A: S → T` with `B: T → W`, giving `B∘A: S → W`
    Compose { a: PathBuf, b: PathBuf },
    /// Evaluate a bispan on a tuple of elements
    Eval {
        #[arg(long)]
        functor: String,
        /// `{"fixed": [...], "free": [...]}` with one entry per fixed point
        /// and per free orbit of the source
        #[arg(long)]
        input: PathBuf,
        bispan: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fixed,
    Underlying,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Fixed => Level::Fixed,
            LevelArg::Underlying => Level::Underlying,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Trivial,
    Complete,
}

/// Exit 1: a check ran and found violations. Exit 2: bad input.
enum Failure {
    Violation(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

enum Functor {
    Burnside,
    FreeGreenFixed,
    FreeGreenUnderlying,
    FreeTambaraFixed,
    FreeTambaraUnderlying,
    Table(Box<TableFunctor>),
}

/// `with_raw_norms` keeps the induced norm table of `A/n` for even `n`,
/// where it is not a Tambara structure, so the checker can report why.
fn load_functor(spec: &str, with_raw_norms: bool) -> Result<Functor, Failure> {
    Ok(match spec {
        "builtin:burnside" => Functor::Burnside,
        "builtin:free-green-fixed" => Functor::FreeGreenFixed,
        "builtin:free-green-underlying" => Functor::FreeGreenUnderlying,
        "builtin:free-tambara-fixed" => Functor::FreeTambaraFixed,
        "builtin:free-tambara-underlying" => Functor::FreeTambaraUnderlying,
        _ => {
            if let Some(n) = spec.strip_prefix("builtin:burnside-mod:") {
                let n: u64 = n.parse().map_err(|_| Failure::Input(format!("bad modulus in `{spec}`")))?;
                // Odd moduli carry the induced norm; even ones are Green only.
                let table = if n % 2 == 1 || with_raw_norms {
                    TableFunctor::Tambara(burnside_mod_unchecked(n).map_err(input_err)?)
                } else {
                    TableFunctor::Green(burnside_mod_green(n).map_err(input_err)?)
                };
                Functor::Table(Box::new(table))
            } else if spec.starts_with("builtin:") {
                return Err(Failure::Input(format!("unknown functor `{spec}`")));
            } else {
                Functor::Table(Box::new(load_table(Path::new(spec))?))
            }
        }
    })
}

fn load_table(path: &Path) -> Result<TableFunctor, Failure> {
    TableFunctor::from_json_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// How element strings (bindings, tuple entries) are read for one functor.
enum Elements<'a> {
    /// Element names of a table.
    Names(&'a FiniteGreenFunctor),
    /// Expressions, with `x` the given generator (if any).
    Expressions,
}

struct Ctx<'a, R: GreenFunctor + ?Sized> {
    r: &'a R,
    norm: Option<NormFn<'a, R>>,
    x: Option<Value<R::Fixed, R::Under>>,
    elements: Elements<'a>,
}

impl<'a, R: GreenFunctor + ?Sized> Ctx<'a, R> {
    fn env(&self) -> Env<'a, R> {
        Env { functor: self.r, x: self.x.clone(), norm: self.norm }
    }

    fn element(
        &self,
        level: Level,
        text: &str,
        by_name: impl Fn(Level, usize) -> Value<R::Fixed, R::Under>,
    ) -> Result<Value<R::Fixed, R::Under>, Failure> {
        match &self.elements {
            Elements::Names(t) => {
                let ring = match level {
                    Level::Fixed => t.fixed_ring(),
                    Level::Underlying => t.under_ring(),
                };
                let i = ring
                    .index_of(text)
                    .ok_or_else(|| Failure::Input(format!("no {level}-level element named `{text}`")))?;
                Ok(by_name(level, i))
            }
            Elements::Expressions => {
                let e = parse(text).map_err(|e| Failure::Input(format!("`{text}`: {e}")))?;
                self.env().eval(&e, level).map_err(|e| Failure::Input(format!("`{text}`: {e}")))
            }
        }
    }

    fn show(&self, v: &Value<R::Fixed, R::Under>) -> String {
        match v {
            Value::Fixed(a) => self.r.show_fixed(a),
            Value::Underlying(u) => self.r.show_under(u),
        }
    }
}

/// The operations a subcommand needs from a functor, whatever its element
/// types.
trait Session {
    fn eval(&mut self, bind: Option<(&str, Level)>, level: Level, text: &str) -> Outcome;
    fn eval_bispan(&self, p: &Bispan, tuple: &Json) -> Outcome;
}

struct Typed<'a, R: GreenFunctor + ?Sized> {
    ctx: Ctx<'a, R>,
    by_name: fn(Level, usize) -> Value<R::Fixed, R::Under>,
}

fn never<F, U>(_: Level, _: usize) -> Value<F, U> {
    unreachable!("expression-backed functors have no element names")
}

fn table_value(level: Level, i: usize) -> Value<usize, usize> {
    match level {
        Level::Fixed => Value::Fixed(i),
        Level::Underlying => Value::Underlying(i),
    }
}

impl<R: GreenFunctor + ?Sized> Session for Typed<'_, R> {
    fn eval(&mut self, bind: Option<(&str, Level)>, level: Level, text: &str) -> Outcome {
        if let Some((value, gen)) = bind {
            let x = self.ctx.element(gen, value, self.by_name)?;
            self.ctx.x = Some(x);
        }
        let e = parse(text).map_err(input_err)?;
        self.ctx.env().eval_to_string(&e, level).map_err(input_err)
    }

    fn eval_bispan(&self, p: &Bispan, tuple: &Json) -> Outcome {
        let list = |key: &str| -> Result<Vec<String>, Failure> {
            let arr = tuple
                .get(key)
                .and_then(Json::as_array)
                .ok_or_else(|| Failure::Input(format!("input tuple needs a `{key}` array")))?;
            arr.iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Failure::Input(format!("`{key}` entries must be strings")))
                })
                .collect()
        };
        let mut fixed = Vec::new();
        for s in list("fixed")? {
            match self.ctx.element(Level::Fixed, &s, self.by_name)? {
                Value::Fixed(a) => fixed.push(a),
                Value::Underlying(_) => unreachable!("evaluated at the fixed level"),
            }
        }
        let mut free = Vec::new();
        for s in list("free")? {
            match self.ctx.element(Level::Underlying, &s, self.by_name)? {
                Value::Underlying(u) => free.push(u),
                Value::Fixed(_) => unreachable!("evaluated at the underlying level"),
            }
        }
        let input = ElementTuple { fixed, free };
        let out = evaluate_with_norm(p, self.ctx.r, &input, self.ctx.norm).map_err(input_err)?;
        let fixed: Vec<String> = out.fixed.iter().map(|a| self.ctx.show(&Value::Fixed(a.clone()))).collect();
        let free: Vec<String> = out.free.iter().map(|u| self.ctx.show(&Value::Underlying(u.clone()))).collect();
        Ok(serde_json::to_string_pretty(&json!({ "fixed": fixed, "free": free })).expect("serializable"))
    }
}

/// Run `f` on a session for the functor.
fn with_session(functor: &Functor, f: &mut dyn FnMut(&mut dyn Session) -> Outcome) -> Outcome {
    macro_rules! symbolic {
        ($r:expr, $x:expr, tambara) => {{
            let r = $r;
            let norm = |u: &_| r.norm(u);
            let ctx = Ctx { r: &r, norm: Some(&norm), x: $x(&r), elements: Elements::Expressions };
            f(&mut Typed { ctx, by_name: never })
        }};
        ($r:expr, $x:expr, green) => {{
            let r = $r;
            let ctx = Ctx { r: &r, norm: None, x: $x(&r), elements: Elements::Expressions };
            f(&mut Typed { ctx, by_name: never })
        }};
    }
    match functor {
        Functor::Burnside => symbolic!(Burnside, |_: &Burnside| None, tambara),
        Functor::FreeGreenFixed => symbolic!(FreeGreenFixed, |r: &FreeGreenFixed| Some(Value::Fixed(r.x())), green),
        Functor::FreeGreenUnderlying => {
            symbolic!(FreeGreenUnderlying, |r: &FreeGreenUnderlying| Some(Value::Underlying(r.x())), green)
        }
        Functor::FreeTambaraFixed => {
            symbolic!(FreeTambaraFixed::new(), |r: &FreeTambaraFixed| Some(Value::Fixed(r.x())), tambara)
        }
        Functor::FreeTambaraUnderlying => {
            symbolic!(FreeTambaraUnderlying::new(), |r: &FreeTambaraUnderlying| Some(Value::Underlying(r.x())), tambara)
        }
        Functor::Table(table) => match table.as_ref() {
            TableFunctor::Green(g) => {
                let ctx = Ctx { r: g, norm: None, x: None, elements: Elements::Names(g) };
                f(&mut Typed { ctx, by_name: table_value })
            }
            TableFunctor::Tambara(t) => {
                let norm = |u: &usize| t.norm(u);
                let ctx = Ctx { r: t, norm: Some(&norm), x: None, elements: Elements::Names(t.green()) };
                f(&mut Typed { ctx, by_name: table_value })
            }
        },
    }
}

fn report_outcome(report: &Report, header: &str) -> Outcome {
    let text = format!("{header}{report}").trim_end().to_string();
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn axioms(spec: &str, tambara: bool, exhaustive: bool, samples: Option<usize>, seed: u64) -> Outcome {
    let functor = load_functor(spec, true)?;
    let mode = match samples {
        Some(count) if !exhaustive => CheckMode::Sampled { seed, count },
        _ => CheckMode::Exhaustive,
    };
    let result = match (&functor, tambara) {
        (Functor::Burnside, true) => check_tambara_axioms(&Burnside, mode),
        (Functor::Burnside, false) => check_green_axioms(&Burnside, mode),
        (Functor::FreeGreenFixed, false) => check_green_axioms(&FreeGreenFixed, mode),
        (Functor::FreeGreenUnderlying, false) => check_green_axioms(&FreeGreenUnderlying, mode),
        (Functor::FreeTambaraFixed, true) => check_tambara_axioms(&FreeTambaraFixed::new(), mode),
        (Functor::FreeTambaraFixed, false) => check_green_axioms(&FreeTambaraFixed::new(), mode),
        (Functor::FreeTambaraUnderlying, true) => check_tambara_axioms(&FreeTambaraUnderlying::new(), mode),
        (Functor::FreeTambaraUnderlying, false) => check_green_axioms(&FreeTambaraUnderlying::new(), mode),
        (Functor::Table(t), true) => {
            let t = t.tambara().ok_or_else(|| Failure::Input("--tambara needs a table with a `norm` map".into()))?;
            check_tambara_axioms(t, mode)
        }
        (Functor::Table(t), false) => check_green_axioms(t.green(), mode),
        (_, true) => return Err(Failure::Input(format!("`{spec}` has no norm"))),
    };
    let report = result.map_err(|e| Failure::Input(format!("{e}; use --samples")))?;
    let kind = if tambara { "Tambara" } else { "Green" };
    report_outcome(&report, &format!("{kind} axioms: "))
}

fn free_spec(generator: LevelArg, system: SystemArg) -> &'static str {
    match (system, generator) {
        (SystemArg::Trivial, LevelArg::Fixed) => "builtin:free-green-fixed",
        (SystemArg::Trivial, LevelArg::Underlying) => "builtin:free-green-underlying",
        (SystemArg::Complete, LevelArg::Fixed) => "builtin:free-tambara-fixed",
        (SystemArg::Complete, LevelArg::Underlying) => "builtin:free-tambara-underlying",
    }
}

fn parse_bind(bind: &Option<String>) -> Result<Option<&str>, Failure> {
    match bind {
        None => Ok(None),
        Some(b) => match b.split_once('=') {
            Some(("x", v)) => Ok(Some(v.trim())),
            _ => Err(Failure::Input(format!("expected --bind x=<element>, got `{b}`"))),
        },
    }
}

fn load_bispan(path: &Path) -> Result<Bispan, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn radjoint(file: &Path, print_table: bool, check: bool) -> Outcome {
    let table = load_table(file)?;
    let r = table.green();
    let f = RightAdjoint::new(r).with_membership_checks(false);
    let fixed = f.fixed_elements().expect("finite");
    let under = f.under_elements().expect("finite");
    let mut out = String::new();
    out.push_str(&format!("F(R)(C2/C2): {} elements\n", fixed.len()));
    for a in &fixed {
        out.push_str(&format!("  {}\n", f.show_fixed(a)));
    }
    out.push_str(&format!("F(R)(C2/e): {} elements\n", under.len()));
    for u in &under {
        out.push_str(&format!("  {}\n", f.show_under(u)));
    }
    if print_table {
        let t = tabulate_adjoint(r);
        out.push_str(&serde_json::to_string_pretty(&t.table.to_json()).expect("serializable"));
        out.push('\n');
    }
    if check {
        let report = check_tambara_axioms(&f, CheckMode::Exhaustive).expect("finite");
        return report_outcome(&report, &format!("{out}Tambara axioms: "));
    }
    Ok(out.trim_end().to_string())
}

fn adjunction(green: &Path, tambara: &Path) -> Outcome {
    let r = load_table(green)?;
    let s = load_table(tambara)?;
    let s = s.tambara().ok_or_else(|| Failure::Input(format!("{}: needs a `norm` map", tambara.display())))?;
    let g = check_green_axioms(r.green(), CheckMode::Exhaustive).expect("finite");
    if !g.passed() {
        return Err(Failure::Input(format!("{}: not a Green functor\n{g}", green.display())));
    }
    let t = check_tambara_axioms(s, CheckMode::Exhaustive).expect("finite");
    if !t.passed() {
        return Err(Failure::Input(format!("{}: not a Tambara functor\n{t}", tambara.display())));
    }
    let out = verify_adjunction(s, r.green());
    let text = out.to_string().trim_end().to_string();
    if out.passed() {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Axioms { functor, tambara, exhaustive, samples, seed } => {
            axioms(&functor, tambara, exhaustive, samples, seed)
        }
        Command::Eval { functor, level, generator, bind, expr } => {
            let functor = load_functor(&functor, false)?;
            let bind = parse_bind(&bind)?;
            with_session(&functor, &mut |s| s.eval(bind.map(|v| (v, generator.into())), level.into(), &expr))
        }
        Command::Free { command: FreeCommand::Normalize { generator, system, level, expr } } => {
            let functor = load_functor(free_spec(generator, system), false)?;
            with_session(&functor, &mut |s| s.eval(None, level.into(), &expr))
        }
        Command::Bispan { command: BispanCommand::Compose { a, b } } => {
            let (a, b) = (load_bispan(&a)?, load_bispan(&b)?);
            let c = compose(&b, &a).map_err(input_err)?;
            Ok(serde_json::to_string_pretty(&c).expect("serializable"))
        }
        Command::Bispan { command: BispanCommand::Eval { functor, input, bispan } } => {
            let functor = load_functor(&functor, false)?;
            let p = load_bispan(&bispan)?;
            let tuple: Json = serde_json::from_str(&read(&input)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
            with_session(&functor, &mut |s| s.eval_bispan(&p, &tuple))
        }
        Command::Radjoint { file, print_table, check_axioms } => radjoint(&file, print_table, check_axioms),
        Command::Adjunction { green, tambara } => adjunction(&green, &tambara),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
