//! `braidloom`: weaving, combing, moves, web codes and table verification
//! from the command line.
//!
//! Exit status: 0 success, 1 verification or domain failure, 2 usage,
//! 3 resource cap.

use std::io::{self, Write};
use std::process::ExitCode;

use braidloom::braid::{BraidWord, TypeVector};
use braidloom::codec::{decode_int, encode_int, encode_tuple, inflate, is_canonical, WebCode};
use braidloom::error::Error;
use braidloom::invariants::{homfly, invariant_report};
use braidloom::limits::{limits, set_limits};
use braidloom::moves::{apply_move, move_ii_minus, Move};
use braidloom::pure::{comb, AWord, CombOrder};
use braidloom::tables::{
    enumerate_webs, find_row, load_table, minimality_feasible, row_minimality, verify_table,
    RowReport,
};
use braidloom::weave::{verify_weaving, weave, WovenBraid};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "braidloom",
    version,
    about = "Woven braids, web codes and knot table verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel verbs (default: all cores).
    #[arg(long, global = true, env = "BRAIDLOOM_JOBS")]
    jobs: Option<usize>,

    /// Longest accepted input word.
    #[arg(
        long,
        global = true,
        env = "BRAIDLOOM_MAX_WORD",
        default_value_t = 10_000
    )]
    max_word: usize,

    /// Cap on free-group image length in the equality oracle.
    #[arg(long, global = true)]
    max_image: Option<usize>,

    /// Cap on crossings for the bracket state sum.
    #[arg(long, global = true)]
    max_crossings: Option<usize>,

    /// Cap on strands for the HOMFLY computation.
    #[arg(long, global = true)]
    max_homfly_strands: Option<usize>,

    /// Cap on word length for the HOMFLY computation.
    #[arg(long, global = true)]
    max_homfly_len: Option<usize>,

    /// Cap on tight length for enumeration.
    #[arg(long, global = true)]
    max_enum_len: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Braid word as signed generator indices, e.g. '1 -2 -2 1'.
    #[arg(long, allow_hyphen_values = true)]
    word: String,

    /// Strand count (default: largest index + 1).
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugate a braid into woven form.
    Weave(WordArgs),
    /// Comb a pure braid into free-factor components.
    Comb {
        #[command(flatten)]
        input: WordArgs,
        #[arg(long, value_enum, default_value_t = OrderArg::Both)]
        order: OrderArg,
    },
    /// Apply a move to a woven braid of type (n).
    Move {
        #[command(flatten)]
        input: WordArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Conjugating pure braid for move I, e.g. 'A[1,4] A[2,4]^-1'.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        /// Sign of the added crossing for move II+.
        #[arg(long, value_enum, default_value_t = SignArg::Plus, allow_hyphen_values = true)]
        sign: SignArg,
        /// Also compare HOMFLY before and after.
        #[arg(long)]
        check: bool,
    },
    /// Encode a tight woven word as an integer.
    Encode(WordArgs),
    /// Decode an integer code to its tight word.
    Decode {
        #[arg(
            allow_negative_numbers = true,
            conflicts_with = "code_flag",
            required_unless_present = "code_flag"
        )]
        code: Option<i64>,
        #[arg(long = "code", id = "code_flag", allow_negative_numbers = true)]
        code_flag: Option<i64>,
    },
    /// Components, writhe, Jones, HOMFLY and MFW bound of the closure.
    Invariant(WordArgs),
    /// Verify the embedded knot table.
    VerifyTable {
        /// Restrict to one row, e.g. 9_34.
        #[arg(long)]
        row: Option<String>,
        /// Run the exhaustive minimality search on rows with b ≤ 3, l ≤ 10.
        #[arg(long)]
        minimality: bool,
    },
    /// List all tight woven words up to a length.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        /// Largest strand count (default: max-len + 1).
        #[arg(long)]
        strands: Option<usize>,
        /// Only list canonical codes (no leading or trailing zeros).
        #[arg(long)]
        canonical: bool,
        /// Include the HOMFLY polynomial of each closure.
        #[arg(long)]
        homfly: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(name = "I")]
    I,
    #[value(name = "II+")]
    IIPlus,
    #[value(name = "II-")]
    IIMinus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

struct Out {
    format: Format,
    lines: io::StdoutLock<'static>,
}

impl Out {
    fn emit(&mut self, text: &str, record: Value) {
        let line = match self.format {
            Format::Text => text.to_string(),
            Format::Records => record.to_string(),
        };
        // A closed pipe is not an error worth reporting.
        let _ = writeln!(self.lines, "{line}");
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run = Result<bool, Failure>;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceCap { .. } => 3,
        Error::Parse(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut l = limits();
    l.max_image_len = cli.max_image.unwrap_or(l.max_image_len);
    l.max_bracket_crossings = cli.max_crossings.unwrap_or(l.max_bracket_crossings);
    l.max_homfly_strands = cli.max_homfly_strands.unwrap_or(l.max_homfly_strands);
    l.max_homfly_len = cli.max_homfly_len.unwrap_or(l.max_homfly_len);
    l.max_enum_len = cli.max_enum_len.unwrap_or(l.max_enum_len);
    set_limits(l);

    let mut out = Out {
        format: cli.format,
        lines: io::stdout().lock(),
    };
    match execute(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn show(w: &BraidWord) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

fn read_word(cli: &Cli, a: &WordArgs) -> Result<BraidWord, Failure> {
    let w = BraidWord::parse(&a.word, a.strands)?;
    if w.len() > cli.max_word {
        return Err(Error::cap("input word length", cli.max_word).into());
    }
    Ok(w)
}

fn execute(cli: &Cli, out: &mut Out) -> Run {
    match &cli.command {
        Command::Weave(a) => run_weave(&read_word(cli, a)?, out),
        Command::Comb { input, order } => run_comb(&read_word(cli, input)?, *order, out),
        Command::Move {
            input,
            kind,
            kappa,
            sign,
            check,
        } => run_move(
            &read_word(cli, input)?,
            *kind,
            kappa.as_deref(),
            *sign,
            *check,
            out,
        ),
        Command::Encode(a) => run_encode(&read_word(cli, a)?, out),
        Command::Decode { code, code_flag } => {
            let j = code
                .or(*code_flag)
                .ok_or_else(|| Failure::Usage("a code is required".into()))?;
            run_decode(WebCode(j), out)
        }
        Command::Invariant(a) => run_invariant(&read_word(cli, a)?, out),
        Command::VerifyTable { row, minimality } => run_verify(row.as_deref(), *minimality, out),
        Command::Enumerate {
            max_len,
            strands,
            canonical,
            homfly,
        } => run_enumerate(*max_len, *strands, *canonical, *homfly, out),
    }
}

fn run_weave(b: &BraidWord, out: &mut Out) -> Run {
    let r = weave(b)?;
    let ok = verify_weaving(b, &r)?;
    let woven = r.woven.word();
    let text = format!(
        "input: {}\nstrands: {}\ntype: {}\nwoven: {}\nconjugator: {}\nverified: {ok}",
        show(b),
        b.strands(),
        r.woven.ty(),
        show(&woven),
        show(&r.conjugator)
    );
    let components: Vec<Value> = r
        .woven
        .components()
        .iter()
        .map(|(j, c)| json!({"j": j, "component": c.to_string()}))
        .collect();
    out.emit(
        &text,
        json!({
            "verb": "weave",
            "input": b.to_string(),
            "strands": b.strands(),
            "type": r.woven.ty().to_string(),
            "woven": woven.to_string(),
            "components": components,
            "conjugator": r.conjugator.to_string(),
            "verified": ok,
        }),
    );
    Ok(ok)
}

fn run_comb(p: &BraidWord, order: OrderArg, out: &mut Out) -> Run {
    let orders: &[CombOrder] = match order {
        OrderArg::Asc => &[CombOrder::Ascending],
        OrderArg::Desc => &[CombOrder::Descending],
        OrderArg::Both => &[CombOrder::Ascending, CombOrder::Descending],
    };
    for &o in orders {
        let f = comb(p, o)?;
        let name = match o {
            CombOrder::Ascending => "ascending",
            CombOrder::Descending => "descending",
        };
        let mut text = format!("{name}:");
        let mut comps = Vec::new();
        for (j, c) in f.components() {
            text.push_str(&format!(
                "\n  {j}: {}",
                if c.is_empty() {
                    "1".to_string()
                } else {
                    c.to_string()
                }
            ));
            comps.push(json!({"j": j, "component": c.to_string()}));
        }
        out.emit(
            &text,
            json!({"verb": "comb", "input": p.to_string(), "order": name, "components": comps}),
        );
    }
    Ok(true)
}

fn run_move(
    w: &BraidWord,
    kind: KindArg,
    kappa: Option<&str>,
    sign: SignArg,
    check: bool,
    out: &mut Out,
) -> Run {
    let n = w.strands();
    let (before, after) = match kind {
        KindArg::IIMinus => (w.free_reduce(), move_ii_minus(w)?.tight_word()),
        _ => {
            let omega = WovenBraid::from_word(w, &TypeVector::single(n))?;
            let mv = match kind {
                KindArg::I => {
                    let text =
                        kappa.ok_or_else(|| Failure::Usage("move I needs --kappa".into()))?;
                    Move::I {
                        kappa: AWord::parse(text, Some(n))?,
                    }
                }
                _ => Move::IIPlus {
                    positive: sign == SignArg::Plus,
                },
            };
            let rec = apply_move(&omega, &mv)?;
            (rec.before.tight_word(), rec.after.tight_word())
        }
    };
    let kind_name = match kind {
        KindArg::I => "I",
        KindArg::IIPlus => "II+",
        KindArg::IIMinus => "II-",
    };
    let mut text = format!(
        "move: {kind_name}\nbefore: {} ({} strands)\nafter: {} ({} strands)",
        show(&before),
        before.strands(),
        show(&after),
        after.strands()
    );
    let mut record = json!({
        "verb": "move",
        "kind": kind_name,
        "before": before.to_string(),
        "before_strands": before.strands(),
        "after": after.to_string(),
        "after_strands": after.strands(),
    });
    let mut ok = true;
    if check {
        ok = homfly(&before)? == homfly(&after)?;
        text.push_str(&format!("\nhomfly preserved: {ok}"));
        record["homfly_preserved"] = json!(ok);
    }
    out.emit(&text, record);
    Ok(ok)
}

fn run_encode(w: &BraidWord, out: &mut Out) -> Run {
    let t = encode_tuple(w)?;
    let j = encode_int(&t)?;
    let canonical = is_canonical(&t);
    out.emit(
        &format!("{j}\ntuple: {t}\ncanonical: {canonical}"),
        json!({"verb": "encode", "word": w.to_string(), "tuple": t.to_string(), "code": j.0, "canonical": canonical}),
    );
    Ok(true)
}

fn run_decode(j: WebCode, out: &mut Out) -> Run {
    let t = inflate(j)?;
    let w = decode_int(j)?;
    out.emit(
        &format!(
            "word: {}\nstrands: {}\nlength: {}\ntuple: {t}",
            show(&w),
            w.strands(),
            w.len()
        ),
        json!({
            "verb": "decode",
            "code": j.0,
            "word": w.to_string(),
            "strands": w.strands(),
            "length": w.len(),
            "tuple": t.to_string(),
        }),
    );
    Ok(true)
}

fn run_invariant(w: &BraidWord, out: &mut Out) -> Run {
    let r = invariant_report(w)?;
    out.emit(
        &format!(
            "components: {}\nwrithe: {}\njones: {}\nhomfly: {}\nmfw bound: {}",
            r.components, r.writhe, r.jones, r.homfly, r.mfw_bound
        ),
        json!({
            "verb": "invariant",
            "word": w.to_string(),
            "strands": w.strands(),
            "components": r.components,
            "writhe": r.writhe,
            "jones": r.jones,
            "homfly": r.homfly,
            "mfw_bound": r.mfw_bound,
        }),
    );
    Ok(true)
}

fn row_text(r: &RowReport) -> String {
    let status = if r.passed() {
        "PASS".to_string()
    } else {
        format!("FAIL {}", r.failed_checks().join(","))
    };
    let mfw = r.mfw.map_or("-".to_string(), |m| m.to_string());
    let mut notes = Vec::new();
    if !r.mfw_sharp {
        notes.push("mfw not sharp");
    }
    if !r.listing_convention {
        notes.push("listing convention unconfirmed");
    }
    let notes = if notes.is_empty() {
        String::new()
    } else {
        format!(" ({})", notes.join("; "))
    };
    format!("{:<6} {status} mfw={mfw}{notes}", r.label)
}

fn run_verify(row: Option<&str>, minimality: bool, out: &mut Out) -> Run {
    let table = load_table()?;
    let rows = match row {
        Some(label) => vec![find_row(&table, label)
            .ok_or_else(|| Failure::Usage(format!("no row labelled {label}")))?
            .clone()],
        None => table,
    };
    let report = verify_table(&rows);
    let mut ok = report.passed();
    for r in &report.rows {
        let mut rec = serde_json::to_value(r).unwrap_or(Value::Null);
        rec["verb"] = json!("verify-table");
        rec["passed"] = json!(r.passed());
        out.emit(&row_text(r), rec);
    }

    if minimality {
        for r in rows.iter().filter(|r| minimality_feasible(r)) {
            let m = row_minimality(r)?;
            ok &= m.reproduces;
            let text = format!(
                "{:<6} minimality {} shorter={} matches={:?} expected={:?}",
                m.label,
                if m.reproduces { "PASS" } else { "FAIL" },
                m.report.shorter.len(),
                m.report.matches,
                m.expected
            );
            let mut rec = serde_json::to_value(&m).unwrap_or(Value::Null);
            rec["verb"] = json!("minimality");
            out.emit(&text, rec);
        }
    }

    let passed = report.rows.iter().filter(|r| r.passed()).count();
    let a = report.averages;
    let strict = report.mfw_strict_rows();
    let unlisted: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| !r.listing_convention)
        .map(|r| r.label.as_str())
        .collect();
    let text = format!(
        "rows: {} passed: {passed}\nwebs per knot: {:.3}\nmean length per web: {:.3}\nmean length per row: {:.3}\n\
         knots with a symmetric web: {}\namphicheiral knots with an antisymmetric web: {}/{}\n\
         mfw not sharp: {}\nlisting convention unconfirmed: {}",
        report.rows.len(),
        a.webs_per_knot,
        a.length_per_web,
        a.length_per_row,
        report.symmetric_knots,
        report.amphicheiral_with_antisymmetric,
        report.amphicheiral_knots,
        if strict.is_empty() { "none".to_string() } else { strict.join(" ") },
        if unlisted.is_empty() { "none".to_string() } else { unlisted.join(" ") },
    );
    out.emit(
        &text,
        json!({
            "verb": "summary",
            "rows": report.rows.len(),
            "passed": passed,
            "averages": a,
            "symmetric_knots": report.symmetric_knots,
            "amphicheiral_knots": report.amphicheiral_knots,
            "amphicheiral_with_antisymmetric": report.amphicheiral_with_antisymmetric,
            "mfw_not_sharp": strict,
            "listing_unconfirmed": unlisted,
            "all_passed": ok,
        }),
    );
    Ok(ok)
}

fn run_enumerate(
    max_len: usize,
    strands: Option<usize>,
    canonical: bool,
    with_homfly: bool,
    out: &mut Out,
) -> Run {
    let top = strands.unwrap_or(max_len + 1);
    let webs = enumerate_webs(max_len, 1..=top)?;
    for (t, w) in webs {
        let canon = is_canonical(&t);
        if canonical && !canon {
            continue;
        }
        let code = if canon { Some(encode_int(&t)?.0) } else { None };
        let mut text = format!("{t} strands={} word={}", w.strands(), show(&w));
        if let Some(c) = code {
            text.push_str(&format!(" code={c}"));
        }
        let mut rec = json!({
            "verb": "enumerate",
            "tuple": t.to_string(),
            "strands": w.strands(),
            "word": w.to_string(),
            "code": code,
        });
        if with_homfly {
            let p = homfly(&w)?.to_string();
            text.push_str(&format!(" homfly={p}"));
            rec["homfly"] = json!(p);
        }
        out.emit(&text, rec);
    }
    Ok(true)
}
