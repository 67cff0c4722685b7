//! Command-line front end.
//!
//! Exit codes: 0 when every reported check passes, 1 when a check fails,
//! 2 on invalid input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::SemigroupError;
use crate::ideal::order::MonomialOrder;
use crate::ideal::polynomial::Polynomial;
use crate::lattice::{IntegerVector, LatticeVector};
use crate::semigroup::{FamilyOptions, SemigroupFamily, DEFAULT_MU_BOUND};
use crate::verify::{full_report, CheckEntry, EnumerationBox, Report, ReportOptions};

#[derive(Parser, Debug)]
#[command(name = "sadk", version, about = "Semigroup rings of S_{a,d,k} = <a, a+d, ..., a+kd> in N^2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Apéry set, QF, flags, ideal, Hilbert series, resolution, regularity.
    Analyze(FamilyArgs),
    /// Defining ideal with its kernel and dimension checks.
    Ideal(FamilyArgs),
    /// Gröbner basis and Buchberger's criterion.
    Groebner(FamilyArgs),
    /// Hilbert series numerator and its truncation check.
    Hilbert(FamilyArgs),
    /// Minimal free resolution (k <= 4) and regularity.
    Resolution(FamilyArgs),
    /// Extended family S^b: gluing data, Apéry set, QF, Betti numbers.
    Extend(FamilyArgs),
    /// Every applicable check, without the computed data.
    Verify(FamilyArgs),
}

impl Command {
    fn args(&self) -> &FamilyArgs {
        match self {
            Command::Analyze(a)
            | Command::Ideal(a)
            | Command::Groebner(a)
            | Command::Hilbert(a)
            | Command::Resolution(a)
            | Command::Extend(a)
            | Command::Verify(a) => a,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyArgs {
    /// First generator, as `x,y`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub a: IntegerVector,
    /// Step, as `x,y`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub d: IntegerVector,
    #[arg(long)]
    pub k: u32,
    /// Extension element, as `x,y`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub b: Option<IntegerVector>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Verification box `X,Y` for the Hilbert series check.
    #[arg(long = "box", value_parser = parse_pair)]
    pub window: Option<IntegerVector>,
    #[arg(long, default_value_t = DEFAULT_MU_BOUND)]
    pub mu_bound: u64,
    /// Print per-stage timings to stderr.
    #[arg(long)]
    pub timings: bool,
}

fn parse_pair(s: &str) -> Result<IntegerVector, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad coordinate {t:?}: {e}"));
    Ok(IntegerVector::new(parse(x)?, parse(y)?))
}

fn lattice(v: IntegerVector) -> Result<LatticeVector, SemigroupError> {
    LatticeVector::try_from(v)
}

fn build(args: &FamilyArgs) -> Result<SemigroupFamily, String> {
    let inner = || -> Result<SemigroupFamily, SemigroupError> {
        let b = args.b.map(lattice).transpose()?;
        SemigroupFamily::with_options(lattice(args.a)?, lattice(args.d)?, args.k, b, &FamilyOptions { mu_bound: args.mu_bound })
    };
    inner().map_err(|e| {
        let debug = format!("{e:?}");
        let variant: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
        format!("{variant}: {e}")
    })
}

fn window(args: &FamilyArgs) -> Result<Option<EnumerationBox>, String> {
    match args.window {
        None => Ok(None),
        Some(v) if v.x > 0 && v.y > 0 => Ok(Some(EnumerationBox::componentwise(v.x, v.y))),
        Some(v) => Err(format!("box caps must be positive, got {v}")),
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let args = cli.command.args();
    let family = match build(args) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "invalid input: {e}");
            return 2;
        }
    };
    if matches!(cli.command, Command::Extend(_)) && family.extension().is_none() {
        let _ = writeln!(err, "invalid input: extend needs --b");
        return 2;
    }
    let window = match window(args) {
        Ok(w) => w,
        Err(e) => {
            let _ = writeln!(err, "invalid input: {e}");
            return 2;
        }
    };
    let report = full_report(&family, &ReportOptions { window, ..ReportOptions::default() });
    if args.timings {
        for (stage, t) in &report.timings {
            let _ = writeln!(err, "{stage}: {:.3} s", t.as_secs_f64());
        }
    }
    let view = View::new(cli.command, &report);
    let written = match args.format {
        Format::Json => serde_json::to_string_pretty(&view.json())
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}")),
        Format::Text => write!(out, "{}", view.text()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "write failed: {e}");
        return 1;
    }
    if view.checks().iter().all(|c| c.passed) {
        0
    } else {
        1
    }
}

/// The part of a report a command shows.
struct View<'a> {
    command: Command,
    report: &'a Report,
    sections: &'static [&'static str],
    check_names: Option<&'static [&'static str]>,
}

const ALL: &[&str] =
    &["family", "apery", "qf", "cm_type", "flags", "ideal", "hilbert", "resolution", "regularity", "extension", "checks"];

impl<'a> View<'a> {
    fn new(command: Command, report: &'a Report) -> Self {
        let (sections, check_names): (&'static [&'static str], Option<&'static [&'static str]>) = match command {
            Command::Analyze(_) => (ALL, None),
            Command::Ideal(_) => {
                (&["family", "ideal", "checks"], Some(&["groebner", "ideal_identity", "quotient_dimension"]))
            }
            Command::Groebner(_) => (&["family", "ideal", "checks"], Some(&["groebner"])),
            Command::Hilbert(_) => (&["family", "hilbert", "checks"], Some(&["hilbert_truncation"])),
            Command::Resolution(_) => (&["family", "resolution", "regularity", "checks"], Some(&["complex", "regularity"])),
            Command::Extend(_) => (
                &["family", "apery", "qf", "cm_type", "flags", "ideal", "hilbert", "extension", "checks"],
                None,
            ),
            Command::Verify(_) => (&["family", "checks"], None),
        };
        View { command, report, sections, check_names }
    }

    fn checks(&self) -> Vec<&'a CheckEntry> {
        self.report
            .checks
            .iter()
            .filter(|c| self.check_names.is_none_or(|names| names.contains(&c.name.as_str())))
            .collect()
    }

    fn order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.report.analysis.names.len())
    }

    fn show(&self, p: &Polynomial) -> String {
        p.display_binomial(&self.report.analysis.names, &self.order()).to_string()
    }

    fn json(&self) -> Value {
        let mut root = Map::new();
        for &section in self.sections {
            root.insert(section.to_string(), self.section(section));
        }
        Value::Object(root)
    }

    fn section(&self, name: &str) -> Value {
        let r = self.report;
        let an = &r.analysis;
        let f = &r.family;
        match name {
            "family" => json!({
                "a": pair(f.a().to_integer()),
                "d": pair(f.d().to_integer()),
                "k": f.k(),
                "b": f.extension().map(|e| pair(e.b.to_integer())),
                "generators": f.generators().iter().map(|g| pair(g.to_integer())).collect::<Vec<_>>(),
            }),
            "apery" => an.apery.elements.iter().map(|v| pair(v.to_integer())).collect(),
            "qf" => an.qf.iter().map(|v| pair(*v)).collect(),
            "cm_type" => json!(an.cm_type),
            "flags" => json!({
                "cohen_macaulay": an.flags.cohen_macaulay,
                "gorenstein": an.flags.gorenstein,
                "normal": an.flags.normal,
                "koszul": an.flags.koszul,
            }),
            "ideal" => json!({
                "generators": an.generators.iter().map(|p| self.show(p)).collect::<Vec<_>>(),
                "groebner": an.groebner.elements.iter().map(|p| self.show(p)).collect::<Vec<_>>(),
                "mu": integer(f.mu() as i128),
            }),
            "hilbert" => match &an.hilbert {
                None => Value::Null,
                Some(h) => json!({
                    "numerator_terms": h.terms().iter().map(|&(e, c)| json!({
                        "exponent": pair(e.to_integer()),
                        "coefficient": integer(c.into()),
                    })).collect::<Vec<_>>(),
                    "denominator": h.denominator_factors.iter().map(|g| pair(g.to_integer())).collect::<Vec<_>>(),
                }),
            },
            "resolution" => match &an.resolution {
                None => Value::Null,
                Some(res) => json!({
                    "betti": res.betti,
                    "shifts": res.shifts.iter().map(|c| c.iter().map(|s| json!({
                        "multiplicity": s.multiplicity,
                        "degree": s.degree.to_string(),
                        "vector": pair(s.degree.evaluate(f).to_integer()),
                    })).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "maps": res.maps.iter().map(|m| (0..m.rows()).map(|i| m.row(i).iter().map(|p| self.show(p)).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }),
            },
            "regularity" => json!(an.regularity),
            "extension" => match &an.extension {
                None => Value::Null,
                Some(e) => json!({
                    "mu": integer(e.mu as i128),
                    "lambda": e.lambda.iter().map(|&c| integer(c as i128)).collect::<Vec<_>>(),
                    "extra_generator": self.show(&e.extra_generator),
                    "apery": e.apery.elements.iter().map(|v| pair(v.to_integer())).collect::<Vec<_>>(),
                    "qf": e.qf.iter().map(|v| pair(*v)).collect::<Vec<_>>(),
                    "betti": e.betti,
                }),
            },
            "checks" => self.checks().iter().map(|c| json!(c)).collect(),
            _ => Value::Null,
        }
    }

    fn text(&self) -> String {
        let r = self.report;
        let an = &r.analysis;
        let f = &r.family;
        let mut s = String::new();
        let mut line = |text: String| {
            s.push_str(&text);
            s.push('\n');
        };
        let vectors = |vs: &mut dyn Iterator<Item = String>| vs.collect::<Vec<_>>().join(", ");
        for &section in self.sections {
            match section {
                "family" => line(format!("family      {f}")),
                "apery" => line(format!("Ap(S,E)     {{{}}}", vectors(&mut an.apery.elements.iter().map(ToString::to_string)))),
                "qf" => line(format!("QF          {{{}}}", vectors(&mut an.qf.iter().map(ToString::to_string)))),
                "cm_type" => line(format!("type        {}", an.cm_type)),
                "flags" => {
                    let mark = |b: bool| if b { "yes" } else { "no" };
                    line(format!(
                        "flags       CM {}, Gorenstein {}, normal {}, Koszul {}",
                        mark(an.flags.cohen_macaulay),
                        mark(an.flags.gorenstein),
                        mark(an.flags.normal),
                        an.flags.koszul.map_or("n/a", mark)
                    ));
                }
                "ideal" => {
                    line(format!("ideal       <{}>", an.generators.iter().map(|p| self.show(p)).collect::<Vec<_>>().join(", ")));
                    line(format!("groebner    [{}]", an.groebner.elements.iter().map(|p| self.show(p)).collect::<Vec<_>>().join(", ")));
                }
                "hilbert" => {
                    if let Some(h) = &an.hilbert {
                        let terms: Vec<String> = h.terms().iter().map(|(e, c)| format!("{c:+} t^{e}")).collect();
                        line(format!("numerator   {}", terms.join(" ")));
                        line(format!(
                            "denominator {}",
                            h.denominator_factors.iter().map(|g| format!("(1 - t^{g})")).collect::<Vec<_>>().join("")
                        ));
                    } else {
                        line(format!("hilbert     no closed form for k = {}", f.k()));
                    }
                }
                "resolution" => match &an.resolution {
                    Some(res) => {
                        line(format!("betti       {:?}", res.betti));
                        for (i, c) in res.shifts.iter().enumerate().skip(1) {
                            let shown: Vec<String> = c
                                .iter()
                                .map(|s| if s.multiplicity == 1 { s.degree.to_string() } else { format!("{}x({})", s.multiplicity, s.degree) })
                                .collect();
                            line(format!("C{i}          {{{}}}", shown.join(", ")));
                        }
                        let order = self.order();
                        for (i, m) in res.maps.iter().enumerate() {
                            line(format!("d{}:\n{}", i + 1, m.display(&an.names, &order)));
                        }
                    }
                    None => line("resolution  not available".to_string()),
                },
                "regularity" => line(format!("reg(I)      {}", an.regularity.map_or("n/a".to_string(), |r| r.to_string()))),
                "extension" => {
                    if let Some(e) = &an.extension {
                        line(format!("mu          {}", e.mu));
                        line(format!("lambda      {:?}", e.lambda));
                        line(format!("glue        {}", self.show(&e.extra_generator)));
                        line(format!("Ap closed   {{{}}}", vectors(&mut e.apery.elements.iter().map(ToString::to_string))));
                        line(format!("QF closed   {{{}}}", vectors(&mut e.qf.iter().map(ToString::to_string))));
                        if let Some(b) = &e.betti {
                            line(format!("betti       {b:?}"));
                        }
                    }
                }
                "checks" => {
                    for c in self.checks() {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let detail = c.witness.as_deref().or(c.note.as_deref()).unwrap_or("");
                        line(format!("[{status}] {:<20} {detail}", c.name));
                    }
                    if matches!(self.command, Command::Analyze(_) | Command::Verify(_) | Command::Extend(_)) {
                        for (name, why) in &r.skipped {
                            line(format!("[SKIP] {name:<20} {why}"));
                        }
                    }
                }
                _ => {}
            }
        }
        s
    }
}

/// JSON numbers lose precision beyond 2^53; larger values become strings.
fn integer(n: i128) -> Value {
    const SAFE: i128 = 1 << 53;
    if n.abs() <= SAFE {
        json!(n as i64)
    } else {
        json!(n.to_string())
    }
}

fn pair(v: IntegerVector) -> Value {
    json!([integer(v.x.into()), integer(v.y.into())])
}
