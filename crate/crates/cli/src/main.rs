use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matchings::bijection::{apply, Map};
use matchings::enumerate::avoiders;
use matchings::render::render_arc_diagram;
use matchings::series::{
    catalan_k, closed_f, closed_g_coeff, crossing_refined_12312, refined_double, solve_f, solve_g, FormulaValue,
};
use matchings::verify::{verify_all, Bounds};
use matchings::{Error, Matching, Pattern};

#[derive(Parser, Debug)]
#[command(name = "matchings", version, about = "Pattern-avoiding perfect matchings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the matchings on [2n] avoiding every given pattern.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "pattern")]
        patterns: Vec<Pattern>,
    },
    /// Count the matchings on [2n] avoiding every given pattern.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long = "pattern")]
        patterns: Vec<Pattern>,
        /// Only count matchings with this many crossings.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Test whether a matching contains each pattern; exits 1 if any occurs.
    Check {
        #[arg(long)]
        input: Matching,
        #[arg(long = "pattern", required = true)]
        patterns: Vec<Pattern>,
    },
    /// Apply a bijection and verify the round trip.
    Bijection {
        #[arg(long)]
        map: Map,
        #[arg(long)]
        input: String,
        /// Apply the inverse map instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Exact counts from closed forms and series expansions.
    Series {
        #[arg(long)]
        n: u64,
        /// Crossing count; all values of m are listed when omitted.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Run every exhaustive check.
    VerifyAll {
        /// Upper bound for the exhaustive scans.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Draw a matching as an ASCII arc diagram.
    Render {
        #[arg(long)]
        input: Matching,
    },
}

#[derive(Serialize)]
struct EnumerateLine {
    n: usize,
    matching: String,
}

#[derive(Serialize)]
struct CountLine {
    n: usize,
    pattern: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    count: String,
}

#[derive(Serialize)]
struct CheckLine {
    input: String,
    pattern: String,
    contains: bool,
}

#[derive(Serialize)]
struct ErrorLine {
    error: String,
}

struct Output {
    format: Format,
    out: BufWriter<io::Stdout>,
}

impl Output {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let line = serde_json::to_string(value).map_err(io::Error::other)?;
                writeln!(self.out, "{line}")
            }
            Format::Text => writeln!(self.out, "{}", text()),
        }
    }
}

fn pattern_list(patterns: &[Pattern]) -> String {
    patterns.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli, out: &mut Output) -> Result<bool, Error> {
    let io_err = |e: io::Error| Error::InvalidMatching(format!("write failed: {e}"));
    match cli.verb {
        Verb::Enumerate { n, patterns } => {
            for m in avoiders(n, &patterns) {
                let word = m.to_string();
                out.emit(&EnumerateLine { n, matching: word.clone() }, || word).map_err(io_err)?;
            }
            Ok(true)
        }
        Verb::Count { n, patterns, m } => {
            let count = avoiders(n, &patterns).filter(|x| m.is_none_or(|m| x.crossing_count() == m)).count();
            let line = CountLine { n, pattern: pattern_list(&patterns), m, count: count.to_string() };
            out.emit(&line, || count.to_string()).map_err(io_err)?;
            Ok(true)
        }
        Verb::Check { input, patterns } => {
            let mut avoids = true;
            for p in &patterns {
                let contains = p.occurs_in(&input);
                avoids &= !contains;
                let line = CheckLine { input: input.to_string(), pattern: p.to_string(), contains };
                out.emit(&line, || format!("{input} {} {p}", if contains { "contains" } else { "avoids" }))
                    .map_err(io_err)?;
            }
            Ok(avoids)
        }
        Verb::Bijection { map, input, inverse } => {
            let rt = apply(map, &input, inverse)?;
            out.emit(&rt, || format!("{} -> {} roundtrip={}", rt.input, rt.output, rt.roundtrip)).map_err(io_err)?;
            Ok(rt.roundtrip)
        }
        Verb::Series { n, m } => {
            for value in series_values(n, m)? {
                let text = match value.m {
                    Some(m) => format!("{} n={} m={m} {}", value.formula, value.n, value.value),
                    None => format!("{} n={} {}", value.formula, value.n, value.value),
                };
                out.emit(&value, || text).map_err(io_err)?;
            }
            Ok(true)
        }
        Verb::VerifyAll { max_n } => {
            let bounds = max_n.map(Bounds::capped).unwrap_or_default();
            let mut all = true;
            for report in verify_all(&bounds) {
                all &= report.pass;
                let text = format!(
                    "{} criterion {} {}: {}",
                    if report.pass { "PASS" } else { "FAIL" },
                    report.criterion,
                    report.name,
                    report.detail
                );
                out.emit(&report, || text).map_err(io_err)?;
            }
            Ok(all)
        }
        Verb::Render { input } => {
            let diagram = render_arc_diagram(&input)?;
            #[derive(Serialize)]
            struct RenderLine<'a> {
                matching: String,
                diagram: &'a str,
            }
            let line = RenderLine { matching: input.to_string(), diagram: &diagram };
            out.emit(&line, || diagram.trim_end().to_string()).map_err(io_err)?;
            Ok(true)
        }
    }
}

fn series_values(n: u64, m: Option<u64>) -> Result<Vec<FormulaValue>, Error> {
    let order = n as usize;
    let g = solve_g(order)?;
    let f = solve_f(order)?.integer_coeffs("F")?;
    let max_m = n * n.saturating_sub(1) / 2;
    let ms: Vec<u64> = match m {
        Some(m) => vec![m],
        None => (0..=max_m).collect(),
    };
    let mut out = vec![
        FormulaValue::new("catalan_3", n, None, catalan_k(n, 3)),
        FormulaValue::new("super_catalan_closed", n, None, closed_f(n)?),
        FormulaValue::new("super_catalan_series", n, None, &f[order]),
    ];
    for &m in &ms {
        out.push(FormulaValue::new("crossing_refined_closed_sum", n, Some(m), crossing_refined_12312(n, m)?));
        out.push(FormulaValue::new("crossing_refined_closed_coeff", n, Some(m), closed_g_coeff(n, m)?));
        out.push(FormulaValue::new("crossing_refined_series", n, Some(m), g.coeff(order, m as usize)?));
        if n >= 1 {
            out.push(FormulaValue::new("double_refined", n, Some(m), refined_double(n, m)?));
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = Output { format: cli.format, out: BufWriter::new(io::stdout()) };
    let result = run(cli, &mut out);
    let code = match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = out.emit(&ErrorLine { error: e.to_string() }, || format!("error: {e}"));
            2
        }
    };
    let _ = out.out.flush();
    ExitCode::from(code)
}
