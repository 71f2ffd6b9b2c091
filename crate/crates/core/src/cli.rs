//! Command-line front end: reads a system file, solves it and prints the
//! representation and root boxes as JSON or text.
//!
//! File format:
//!
//! ```text
//! # comment
//! vars: x, y, z
//! eps: 1/1024          (optional, also `s: 1/20, 1/2` and `d1: 1/2`)
//! x^2 + y^2 + z^2 - 3
//! x + y - z
//! ```

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lur::{lur_solve, LurSolution, SolveConfig};
use crate::numeric::{format_rational, parse_rational, ComplexInterval, Extended, Rational};
use crate::polynomial::{parse_polynomial, MultiPoly};

/// A parsed system file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub polynomials: Vec<MultiPoly>,
    pub eps: Option<Rational>,
    pub s: Option<Vec<Rational>>,
    pub d1: Option<Rational>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn rational_list(text: &str, line: usize, col: usize) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|part| parse_rational(part).map_err(|_| Error::Parse {
            line,
            column: col,
            message: format!("invalid rational `{}`", part.trim()),
        }))
        .collect()
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut variables: Option<Vec<String>> = None;
    let mut polynomials = Vec::new();
    let (mut eps, mut s, mut d1) = (None, None, None);
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        if let Some((key, value)) = body.split_once(':') {
            let key = key.trim();
            let col = body.find(':').unwrap() + 2;
            let err = |msg: String| Error::Parse {
                line,
                column: indent + 1,
                message: msg,
            };
            match key {
                "vars" => {
                    if variables.is_some() {
                        return Err(err("duplicate `vars:` header".into()));
                    }
                    let names: Vec<String> = value.split(',').map(|v| v.trim().to_string()).collect();
                    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                        return Err(err(format!("invalid variable name `{bad}`")));
                    }
                    for (i, n) in names.iter().enumerate() {
                        if names[..i].contains(n) {
                            return Err(err(format!("variable `{n}` declared twice")));
                        }
                    }
                    variables = Some(names);
                }
                "eps" => eps = Some(rational_list(value, line, col)?.remove(0)),
                "d1" => d1 = Some(rational_list(value, line, col)?.remove(0)),
                "s" => s = Some(rational_list(value, line, col)?),
                other => return Err(err(format!("unknown option `{other}`"))),
            }
            continue;
        }
        let vars = variables
            .as_ref()
            .ok_or_else(|| Error::Parse {
                line,
                column: indent + 1,
                message: "expected a `vars:` header before the first polynomial".into(),
            })?;
        polynomials.push(parse_polynomial(body, vars, line)?);
    }
    let variables = variables.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing `vars:` header".into(),
    })?;
    if polynomials.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "the system has no polynomials".into(),
        });
    }
    Ok(SystemFile {
        variables,
        polynomials,
        eps,
        s,
        d1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|_| format!("invalid rational `{s}`"))
}

/// Isolate all complex roots of a zero-dimensional polynomial system.
#[derive(Debug, Parser)]
#[command(name = "lur", version)]
pub struct Args {
    /// System file (`-` for standard input).
    pub file: PathBuf,
    /// Target width of every coordinate interval.
    #[arg(long, value_parser = rational_arg)]
    pub eps: Option<Rational>,
    /// Scale factors s_1,...,s_{n-1}.
    #[arg(long, value_parser = rational_arg, value_delimiter = ',', num_args = 1)]
    pub s: Option<Vec<Rational>>,
    /// First-level neighbourhood radius d_1.
    #[arg(long, value_parser = rational_arg)]
    pub d1: Option<Rational>,
    /// Report only real roots.
    #[arg(long)]
    pub real_only: bool,
    /// Attach multiplicities.
    #[arg(long)]
    pub multiplicities: bool,
    /// Bound r_i by isolated roots instead of the Cauchy bound.
    #[arg(long)]
    pub tight_bounds: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Include wall-clock timings in the stats.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Serialize)]
struct IntervalJson {
    re: [String; 2],
    im: [String; 2],
}

impl From<&ComplexInterval> for IntervalJson {
    fn from(b: &ComplexInterval) -> Self {
        let [a, c, d, e] = b.to_strings();
        Self { re: [a, c], im: [d, e] }
    }
}

#[derive(Serialize)]
struct LurJson {
    t: Vec<Vec<String>>,
    s: Vec<String>,
    d: Vec<String>,
    r: Vec<String>,
    rho: Vec<String>,
    prefix: Vec<String>,
    separations: Vec<String>,
    eps_schedule: Vec<String>,
}

#[derive(Serialize)]
struct BoxJson {
    coords: Vec<IntervalJson>,
    real: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<u32>,
}

#[derive(Serialize)]
struct TimingsJson {
    groebner_ms: f64,
    ladder_ms: f64,
    refine_ms: f64,
}

#[derive(Serialize)]
struct StatsJson {
    basis_size: usize,
    groebner_size: usize,
    t_bits: Vec<u64>,
    roots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<TimingsJson>,
}

#[derive(Serialize)]
struct ReportJson {
    variables: Vec<String>,
    eps: String,
    lur: Option<LurJson>,
    boxes: Vec<BoxJson>,
    stats: StatsJson,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn extended_string(e: &Extended) -> String {
    match e {
        Extended::Finite(q) => format_rational(q),
        Extended::Infinity => "inf".into(),
    }
}

fn report(vars: &[String], config: &SolveConfig, sol: &LurSolution, timings: bool) -> ReportJson {
    let lur = sol.lur.as_ref().map(|l| LurJson {
        t: l.t.iter().map(|p| strings(p.coeffs())).collect(),
        s: strings(&l.s),
        d: strings(&l.d),
        r: strings(&l.r),
        rho: strings(&l.rho),
        prefix: strings(&l.prefix),
        separations: l.separations.iter().map(extended_string).collect(),
        eps_schedule: sol.schedule.as_ref().map(|s| strings(&s.eps)).unwrap_or_default(),
    });
    let boxes: Vec<BoxJson> = sol
        .roots()
        .iter()
        .map(|r| BoxJson {
            coords: r.coords.iter().map(IntervalJson::from).collect(),
            real: r.is_real(),
            multiplicity: r.multiplicity,
        })
        .collect();
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
    ReportJson {
        variables: vars.to_vec(),
        eps: format_rational(&config.eps),
        lur,
        stats: StatsJson {
            basis_size: sol.stats.basis_size,
            groebner_size: sol.stats.groebner_size,
            t_bits: sol.stats.t_bits.clone(),
            roots: boxes.len(),
            timings: timings.then(|| TimingsJson {
                groebner_ms: ms(sol.stats.groebner_time),
                ladder_ms: ms(sol.stats.ladder_time),
                refine_ms: ms(sol.stats.refine_time),
            }),
        },
        boxes,
    }
}

fn render_text(rep: &ReportJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "variables: {}", rep.variables.join(", "));
    let _ = writeln!(out, "eps: {}", rep.eps);
    match &rep.lur {
        None => {
            let _ = writeln!(out, "the system is inconsistent");
        }
        Some(l) => {
            for (i, t) in l.t.iter().enumerate() {
                let _ = writeln!(out, "T_{}: [{}]", i + 1, t.join(", "));
            }
            let _ = writeln!(out, "s: [{}]", l.s.join(", "));
            let _ = writeln!(out, "d: [{}]", l.d.join(", "));
            let _ = writeln!(out, "r: [{}]", l.r.join(", "));
            let _ = writeln!(out, "rho: [{}]", l.rho.join(", "));
            let _ = writeln!(out, "prefix: [{}]", l.prefix.join(", "));
            let _ = writeln!(out, "separations: [{}]", l.separations.join(", "));
            let _ = writeln!(out, "eps schedule: [{}]", l.eps_schedule.join(", "));
        }
    }
    let _ = writeln!(out, "roots: {}", rep.boxes.len());
    for (k, b) in rep.boxes.iter().enumerate() {
        let kind = if b.real { "real" } else { "complex" };
        match b.multiplicity {
            Some(m) => {
                let _ = writeln!(out, "root {} ({kind}, multiplicity {m})", k + 1);
            }
            None => {
                let _ = writeln!(out, "root {} ({kind})", k + 1);
            }
        }
        for (v, c) in rep.variables.iter().zip(&b.coords) {
            let _ = writeln!(out, "  {v}: re [{}, {}] im [{}, {}]", c.re[0], c.re[1], c.im[0], c.im[1]);
        }
    }
    let s = &rep.stats;
    let bits: Vec<String> = s.t_bits.iter().map(u64::to_string).collect();
    let _ = writeln!(
        out,
        "stats: basis size {}, groebner size {}, T bits [{}]",
        s.basis_size,
        s.groebner_size,
        bits.join(", ")
    );
    if let Some(t) = &s.timings {
        let _ = writeln!(
            out,
            "timings: groebner {:.1} ms, ladder {:.1} ms, refine {:.1} ms",
            t.groebner_ms, t.ladder_ms, t.refine_ms
        );
    }
    out
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotZeroDimensional(_) => 2,
        Error::Parse { .. } | Error::ArityMismatch(..) => 3,
        Error::InvalidScale(_) | Error::NonPositiveScale(_) => 4,
        _ => 1,
    }
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let text = match read_input(&args.file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "lur: cannot read {}: {e}", args.file.display());
            return 1;
        }
    };
    match solve_text(&text, &args) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "lur: {e}");
            exit_code(&e)
        }
    }
}

/// Solves a system file's text under the given flags and renders the report.
pub fn solve_text(text: &str, args: &Args) -> Result<String> {
    let system = parse_system(text)?;
    let config = SolveConfig {
        eps: args.eps.clone().or(system.eps).unwrap_or_else(|| SolveConfig::default().eps),
        s_override: args.s.clone().or(system.s),
        d1_override: args.d1.clone().or(system.d1),
        tight_bounds: args.tight_bounds,
        real_only: args.real_only,
        multiplicities: args.multiplicities,
        separation_width: None,
    };
    let sol = lur_solve(&system.polynomials, &config)?;
    let rep = report(&system.variables, &config, &sol, args.timings);
    Ok(match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rep).map_err(|e| Error::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => render_text(&rep),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_options_and_comments() {
        let sys = parse_system("# demo\nvars: x, y\neps: 1/64\ns: 1/4\nx^2 - 2  # first\ny - x\n").unwrap();
        assert_eq!(sys.variables, vec!["x", "y"]);
        assert_eq!(sys.polynomials.len(), 2);
        assert_eq!(sys.eps, Some(Rational::new(1.into(), 64.into())));
        assert_eq!(sys.s.as_ref().map(Vec::len), Some(1));
    }

    #[test]
    fn single_polynomial() {
        let sys = parse_system("vars: x\nx^2 - 2").unwrap();
        assert_eq!((sys.variables.len(), sys.polynomials.len()), (1, 1));
    }

    #[test]
    fn rejects_bad_files() {
        let err = parse_system("vars: x\ny - 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 1, .. }), "{err:?}");
        assert!(matches!(parse_system("x - 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_system("vars: x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("vars: x, x\nx"), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("vars: x\nfoo: 1\nx"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_system("vars: x\neps: a\nx"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::NotZeroDimensional(0)), 2);
        assert_eq!(exit_code(&Error::parse(1, 1, "x")), 3);
        assert_eq!(exit_code(&Error::InvalidScale("s".into())), 4);
        assert_eq!(exit_code(&Error::BoundaryRoot), 1);
    }
}
