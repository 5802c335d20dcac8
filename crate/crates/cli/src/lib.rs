//! Command-line front end. [`run`] does all the work and returns what would
//! be printed, so the binary is a thin wrapper and tests need no process.

use std::fmt::Display;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use pullcalc_core::diagrams::{
    build_taffy_with, build_tangle, render_taffy_svg, render_tangle_svg, tangle_cf,
    tangle_number, verify_taffy, SvgOptions, TangleWord,
};
use pullcalc_core::treewalk::counts_of;
use pullcalc_core::{
    canonical_word, canonicalize_rewrite, canonicalize_rewrite_traced, cf_expand, cw_row,
    effectiveness_report, equivalent, four_way_children, layer_counts, max_total_layers,
    slow_euclid_trace, taffy_chain, taffy_number, to_run_form, word_to_cf, Cf, EuclidMode,
    Fraction, MaxMode, TurnWord,
};
use serde_json::{json, Value};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    /// 0 on success, 1 for bad input values, 2 for bad usage.
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "pullcalc",
    version,
    about = "Exact calculator for taffy pulls, the four-way Calkin-Wilf tree and rational tangles",
    after_help = "Words use R, L and R^-1, L^-1 (or lowercase r, l) with optional ^k exponents; \
                  e is the empty word. Fractions are a/b or integers; 1/0 is infinity."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Show intermediate steps (eval, canon, invert).
    #[arg(long, global = true)]
    trace: bool,
    /// Euclidean algorithm used by invert.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Fast)]
    mode: Mode,
    /// Deepest tree row that may be listed.
    #[arg(long, global = true, default_value_t = pullcalc_core::analysis::DEFAULT_DEPTH_CAP)]
    depth: u32,
    /// Output file for SVG, `-` for stdout.
    #[arg(short = 'o', long = "output", global = true, default_value = "-")]
    output: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Slow,
    Fast,
}

#[derive(Args, Debug)]
struct Text {
    /// Joined with spaces, so quoting is optional. A value starting with
    /// `-` goes after `--`.
    #[arg(required = true, num_args = 1..)]
    parts: Vec<String>,
}

impl Text {
    fn joined(&self) -> String {
        self.parts.join(" ")
    }
}

#[derive(Args, Debug)]
struct SvgArgs {
    /// Multiplies the canvas width and height.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value_t = 2.0)]
    stroke: f64,
    /// Spacing between neighbouring taffy strands.
    #[arg(long, default_value_t = 6.0)]
    strand_gap: f64,
    /// Break in an under-strand on each side of a crossing.
    #[arg(long, default_value_t = 4.0)]
    crossing_gap: f64,
    #[arg(long, default_value_t = 8.0)]
    peg_radius: f64,
    /// Side of one tangle tile.
    #[arg(long, default_value_t = 40.0)]
    tile: f64,
}

impl SvgArgs {
    fn options(&self) -> SvgOptions {
        SvgOptions {
            scale: self.scale,
            stroke_width: self.stroke,
            strand_gap: self.strand_gap,
            crossing_gap: self.crossing_gap,
            peg_radius: self.peg_radius,
            tile: self.tile,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Taffy number, layers, continued fraction and canonical form of a word.
    Eval(Text),
    /// Canonical representative of a word.
    Canon(Text),
    /// Whether two words give equivalent pulls.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Canonical word with the given taffy number.
    Invert {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Left and right layer counts of a word.
    Layers(Text),
    /// Continued fraction of a word or fraction, or the value of `[c0; c1, ...]`.
    Cf(Text),
    /// Row of the Calkin-Wilf tree, root is row 1.
    Tree { row: u32 },
    /// The four neighbours of a fraction in the four-way tree.
    Children {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Most total layers after n forward turns.
    Maxlayers {
        n: u32,
        /// Search all 2^n words instead of using the Fibonacci closed form.
        #[arg(long)]
        brute: bool,
    },
    /// Total layers after each prefix of a word and the growth ratios.
    Report(Text),
    /// Tangle number of a word over V, H, V^-1, H^-1.
    TangleEval(Text),
    /// Taffy diagram of a fraction as SVG.
    RenderTaffy {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Tangle diagram of a twist word as SVG.
    RenderTangle {
        #[command(flatten)]
        text: Text,
        #[command(flatten)]
        svg: SvgArgs,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

fn domain(e: impl Display) -> Failure {
    Failure::Domain(e.to_string())
}

type Outcome = Result<Output, Failure>;

enum Output {
    Text(String),
    Json(Value),
}

fn word(s: &str) -> Result<TurnWord, Failure> {
    s.parse().map_err(|e| Failure::Domain(format!("bad word {s:?}: {e}")))
}

fn fraction(s: &str) -> Result<Fraction, Failure> {
    Fraction::from_str(s.trim()).map_err(domain)
}

fn int(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integers are JSON numbers"))
}

fn frac_json(q: &Fraction) -> Value {
    json!({ "num": int(q.numer()), "den": int(q.denom()) })
}

fn cf_json(cf: &Cf) -> Value {
    Value::Array(cf.coeffs().iter().map(int).collect())
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("pullcalc".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Output::Text(mut s)) => {
            if !s.is_empty() && !s.ends_with('\n') {
                s.push('\n');
            }
            CommandResult {
                exit_code: 0,
                stdout: s,
                stderr: String::new(),
            }
        }
        Ok(Output::Json(v)) => CommandResult {
            exit_code: 0,
            stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")),
            stderr: String::new(),
        },
        Err(Failure::Domain(msg)) => CommandResult {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Usage(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let mode = match cli.mode {
        Mode::Slow => EuclidMode::Slow,
        Mode::Fast => EuclidMode::Fast,
    };
    match &cli.command {
        Command::Eval(text) => eval(&word(&text.joined())?, cli),
        Command::Canon(text) => canon(&word(&text.joined())?, cli),
        Command::Equiv { first, second } => {
            let (a, b) = (word(first)?, word(second)?);
            let same = equivalent(&a, &b);
            if cli.json {
                return Ok(Output::Json(json!({
                    "first": a.to_string(),
                    "second": b.to_string(),
                    "equivalent": same,
                    "canonical": [canonicalize_rewrite(&a).to_string(), canonicalize_rewrite(&b).to_string()],
                })));
            }
            Ok(Output::Text(if same { "equivalent" } else { "not equivalent" }.into()))
        }
        Command::Invert { fraction: f } => invert(&fraction(f)?, mode, cli),
        Command::Layers(text) => {
            let counts = layer_counts::<BigInt>(&word(&text.joined())?);
            if cli.json {
                return Ok(Output::Json(json!({
                    "left": int(&counts.left),
                    "right": int(&counts.right),
                    "total": int(&counts.total()),
                })));
            }
            Ok(Output::Text(counts.to_string()))
        }
        Command::Cf(text) => cf(&text.joined(), cli),
        Command::Tree { row } => {
            let listing = cw_row::<BigInt>(*row, cli.depth).map_err(domain)?;
            if cli.json {
                return Ok(Output::Json(json!({
                    "row": listing.depth,
                    "entries": listing.entries.iter().map(frac_json).collect::<Vec<_>>(),
                })));
            }
            let parts: Vec<String> = listing.entries.iter().map(|q| q.to_string()).collect();
            Ok(Output::Text(parts.join(" ")))
        }
        Command::Children { fraction: f } => {
            let q = fraction(f)?;
            let kids = four_way_children(&q);
            if cli.json {
                let map: serde_json::Map<String, Value> = kids
                    .iter()
                    .map(|(t, c)| (t.to_string(), frac_json(c)))
                    .collect();
                return Ok(Output::Json(json!({ "fraction": frac_json(&q), "children": map })));
            }
            let lines: Vec<String> = kids.iter().map(|(t, c)| format!("{t} {c}")).collect();
            Ok(Output::Text(lines.join("\n")))
        }
        Command::Maxlayers { n, brute } => {
            let how = if *brute { MaxMode::BruteForce } else { MaxMode::ClosedForm };
            let (best, witness) = max_total_layers::<BigInt>(*n, how).map_err(domain)?;
            if cli.json {
                return Ok(Output::Json(json!({
                    "n": n,
                    "max_total_layers": int(&best),
                    "witness": witness.to_string(),
                })));
            }
            Ok(Output::Text(format!("{best} {witness}")))
        }
        Command::Report(text) => {
            let steps = effectiveness_report::<BigInt>(&word(&text.joined())?);
            if cli.json {
                let rows: Vec<Value> = steps
                    .iter()
                    .map(|s| {
                        json!({
                            "prefix_len": s.prefix_len,
                            "total": int(&s.total),
                            "ratio": s.ratio.as_ref().map(frac_json),
                        })
                    })
                    .collect();
                return Ok(Output::Json(Value::Array(rows)));
            }
            let lines: Vec<String> = steps
                .iter()
                .map(|s| match &s.ratio {
                    Some(r) => format!("{} {} {}", s.prefix_len, s.total, r),
                    None => format!("{} {} -", s.prefix_len, s.total),
                })
                .collect();
            Ok(Output::Text(lines.join("\n")))
        }
        Command::TangleEval(text) => {
            let s = text.joined();
            let tw: TangleWord = s
                .parse()
                .map_err(|e| Failure::Domain(format!("bad tangle word {s:?}: {e}")))?;
            let q = tangle_number::<BigInt>(&tw);
            if cli.json {
                let d = build_tangle(&tw);
                let crossings: Vec<Value> = d
                    .crossings
                    .iter()
                    .map(|c| json!({ "position": c.position.to_string(), "sign": c.sign }))
                    .collect();
                return Ok(Output::Json(json!({
                    "tangle": tw.to_string(),
                    "word": tw.to_turn_word().to_string(),
                    "tangle_number": frac_json(&q),
                    "continued_fraction": cf_json(&tangle_cf::<BigInt>(&tw)),
                    "crossings": crossings,
                })));
            }
            Ok(Output::Text(q.to_string()))
        }
        Command::RenderTaffy { fraction: f, svg } => {
            let q = fraction(f)?;
            let opts = svg.options();
            let d = build_taffy_with(&q, &opts.taffy_layout()).map_err(domain)?;
            let text = render_taffy_svg(&d, &opts).map_err(domain)?;
            let report = verify_taffy(&d);
            emit_svg(
                cli,
                text,
                json!({
                    "fraction": frac_json(&q),
                    "left_crossings": report.left_crossings,
                    "right_crossings": report.right_crossings,
                }),
            )
        }
        Command::RenderTangle { text, svg } => {
            let s = text.joined();
            let tw: TangleWord = s
                .parse()
                .map_err(|e| Failure::Domain(format!("bad tangle word {s:?}: {e}")))?;
            let d = build_tangle(&tw);
            let out = render_tangle_svg(&d, &svg.options()).map_err(domain)?;
            emit_svg(
                cli,
                out,
                json!({ "tangle": tw.to_string(), "crossings": d.crossings.len() }),
            )
        }
    }
}

fn emit_svg(cli: &Cli, svg: String, summary: Value) -> Outcome {
    if cli.output == "-" {
        if cli.json {
            return Err(Failure::Usage(
                "--json cannot share stdout with SVG; pass -o FILE".into(),
            ));
        }
        return Ok(Output::Text(svg));
    }
    let path = PathBuf::from(&cli.output);
    std::fs::write(&path, &svg)
        .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
    if cli.json {
        let mut summary = summary;
        summary["output"] = json!(path.display().to_string());
        summary["bytes"] = json!(svg.len());
        return Ok(Output::Json(summary));
    }
    Ok(Output::Text(format!("wrote {}", path.display())))
}

fn eval(w: &TurnWord, cli: &Cli) -> Outcome {
    let q = taffy_number::<BigInt>(w);
    if cli.json {
        let counts = counts_of(&q);
        let mut doc = json!({
            "word": w.to_string(),
            "reduced": w.reduce().to_string(),
            "runs": to_run_form(w).runs(),
            "taffy_number": frac_json(&q),
            "layers": { "left": int(&counts.left), "right": int(&counts.right) },
            "continued_fraction": cf_json(&word_to_cf(w)),
            "canonical": canonicalize_rewrite(w).to_string(),
        });
        if cli.trace {
            doc["trace"] = Value::Array(taffy_chain::<BigInt>(w).iter().map(frac_json).collect());
        }
        return Ok(Output::Json(doc));
    }
    if cli.trace {
        let chain = taffy_chain::<BigInt>(w);
        let mut lines = vec![format!("  {}", chain[0])];
        for (t, q) in w.iter().zip(&chain[1..]) {
            lines.push(format!("{t} {q}"));
        }
        return Ok(Output::Text(lines.join("\n")));
    }
    Ok(Output::Text(q.to_string()))
}

fn canon(w: &TurnWord, cli: &Cli) -> Outcome {
    let c = canonicalize_rewrite(w);
    let steps = canonicalize_rewrite_traced(w);
    if cli.json {
        let mut doc = json!({
            "word": w.to_string(),
            "canonical": c.to_string(),
            "kind": format!("{:?}", c.kind()).to_lowercase(),
        });
        if cli.trace {
            doc["trace"] = steps
                .iter()
                .map(|(t, case, c)| json!({ "turn": t.to_string(), "case": case.to_string(), "canonical": c.to_string() }))
                .collect();
        }
        return Ok(Output::Json(doc));
    }
    if cli.trace {
        let mut lines: Vec<String> = steps
            .iter()
            .map(|(t, case, c)| format!("{t} {case} -> {c}"))
            .collect();
        lines.push(c.to_string());
        return Ok(Output::Text(lines.join("\n")));
    }
    Ok(Output::Text(c.to_string()))
}

fn invert(q: &Fraction, mode: EuclidMode, cli: &Cli) -> Outcome {
    let c = canonical_word(q, mode);
    // the parent walk only exists for positive finite fractions
    let trace = if cli.trace {
        slow_euclid_trace(q).ok()
    } else {
        None
    };
    if cli.json {
        let mut doc = json!({
            "fraction": frac_json(q),
            "canonical": c.to_string(),
            "continued_fraction": cf_json(&word_to_cf(c.word())),
        });
        if let Some(steps) = &trace {
            doc["trace"] = steps
                .iter()
                .map(|s| json!({ "fraction": frac_json(&s.fraction), "side": s.side.letter().to_string() }))
                .collect();
        }
        return Ok(Output::Json(doc));
    }
    let mut lines = Vec::new();
    if let Some(steps) = trace {
        for s in steps {
            lines.push(format!("{} {}", s.fraction, s.side.letter()));
        }
    }
    lines.push(c.to_string());
    Ok(Output::Text(lines.join("\n")))
}

fn cf(arg: &str, cli: &Cli) -> Outcome {
    let arg = arg.trim();
    if arg.starts_with('[') {
        let cf: Cf = arg.parse().map_err(domain)?;
        let q = cf.eval();
        if cli.json {
            return Ok(Output::Json(json!({ "continued_fraction": cf_json(&cf), "value": frac_json(&q) })));
        }
        return Ok(Output::Text(q.to_string()));
    }
    let cf = match Fraction::from_str(arg) {
        // negative numbers and 1/0 get the signed expansion of their canonical word
        Ok(q) => cf_expand(&q)
            .unwrap_or_else(|_| word_to_cf(canonical_word(&q, EuclidMode::Fast).word())),
        Err(_) => word_to_cf(&word(arg)?),
    };
    if cli.json {
        return Ok(Output::Json(json!({ "input": arg, "continued_fraction": cf_json(&cf), "value": frac_json(&cf.eval()) })));
    }
    Ok(Output::Text(cf.to_string()))
}
