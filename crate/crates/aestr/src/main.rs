//! `aestr` — query the longest border and shortest cover of a singly-edited
//! text, verify against brute force, and benchmark.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use aestr::engine::QueryAnswer;
use aestr::{corpus, oracle, AfterEditIndex, EditOp, Text};

#[derive(Parser)]
#[command(name = "aestr", version, about = "after-edit border and cover queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a query script; one tab-separated record per query on stdout.
    ///
    /// Columns: index, border_len, cover_len, n_prime, path, lce_calls,
    /// chain_jumps, window_queries. Skipped answers print "-".
    Query(QueryArgs),
    /// Run a query script and check every answer against brute force on the
    /// materialized edited string; exits 1 on the first mismatch.
    Verify(VerifyArgs),
    /// Benchmark engine queries against naive recomputation.
    Bench(BenchArgs),
    /// Exhaustive small-instance self-checks.
    Selftest,
}

#[derive(Args)]
struct QueryArgs {
    /// Text file, read as raw octets.
    #[arg(long)]
    text: PathBuf,
    /// Query script: lines "SUB i j w", "DEL i j", "INS i w", "EDIT i j w".
    /// w accepts \xNN, \\, \t, \n escapes. Positions are 1-based.
    #[arg(long)]
    script: PathBuf,
    /// Only report the longest border.
    #[arg(long, conflicts_with = "scae")]
    lbae: bool,
    /// Only report the shortest cover.
    #[arg(long)]
    scae: bool,
    /// Report both answers (the default).
    #[arg(long, conflicts_with_all = ["lbae", "scae"])]
    both: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    text: PathBuf,
    #[arg(long)]
    script: PathBuf,
    /// Shard independent queries across this many worker threads.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated text sizes.
    #[arg(long, default_value = "10000,100000,1000000")]
    sizes: String,
    /// Edits per size and family.
    #[arg(long, default_value_t = 200)]
    edits: usize,
    /// RNG seed; the AESTR_SEED environment variable takes precedence.
    #[arg(long, default_value_t = 0xA55)]
    seed: u64,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("aestr: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Query(args) => cmd_query(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn read_text(path: &PathBuf) -> Result<Vec<u8>, String> {
    std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// One parsed script line, keeping the raw line for diagnostics.
struct ScriptLine {
    number: usize,
    raw: String,
    op: EditOp,
}

fn parse_script(bytes: &[u8]) -> Result<Vec<ScriptLine>, String> {
    let mut out = Vec::new();
    for (lineno, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        let raw = String::from_utf8_lossy(line).into_owned();
        let trimmed: Vec<&[u8]> = line
            .split(|&b| b == b' ' || b == b'\t')
            .filter(|t| !t.is_empty())
            .collect();
        if trimmed.is_empty() || trimmed[0].starts_with(b"#") {
            continue;
        }
        let err = |msg: &str| format!("script line {}: {msg}: {raw}", lineno + 1);
        let pos = |tok: &[u8]| -> Result<usize, String> {
            std::str::from_utf8(tok)
                .ok()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| err("bad position"))
        };
        let op = match trimmed[0] {
            b"SUB" | b"EDIT" => {
                if trimmed.len() < 3 {
                    return Err(err("expected: SUB i j w"));
                }
                let i = pos(trimmed[1])?;
                let j = pos(trimmed[2])?;
                let w = if trimmed.len() >= 4 {
                    unescape(trimmed[3]).map_err(|m| err(&m))?
                } else {
                    Vec::new()
                };
                EditOp::substitute(i, j, w)
            }
            b"DEL" => {
                if trimmed.len() != 3 {
                    return Err(err("expected: DEL i j"));
                }
                EditOp::delete(pos(trimmed[1])?, pos(trimmed[2])?)
            }
            b"INS" => {
                if trimmed.len() != 3 {
                    return Err(err("expected: INS i w"));
                }
                let i = pos(trimmed[1])?;
                if i == 0 {
                    return Err(err("bad position"));
                }
                EditOp::insert(i, unescape(trimmed[2]).map_err(|m| err(&m))?)
            }
            _ => return Err(err("unknown directive")),
        };
        out.push(ScriptLine {
            number: lineno + 1,
            raw,
            op,
        });
    }
    Ok(out)
}

/// Decodes \xNN, \\, \t, \n; everything else is taken as raw octets.
fn unescape(tok: &[u8]) -> Result<Vec<u8>, String> {
    let mut out = Vec::with_capacity(tok.len());
    let mut it = tok.iter().copied().peekable();
    while let Some(b) = it.next() {
        if b != b'\\' {
            out.push(b);
            continue;
        }
        match it.next() {
            Some(b'\\') => out.push(b'\\'),
            Some(b't') => out.push(b'\t'),
            Some(b'n') => out.push(b'\n'),
            Some(b'x') => {
                let hi = it.next().ok_or("truncated \\xNN escape")?;
                let lo = it.next().ok_or("truncated \\xNN escape")?;
                let hex = |c: u8| -> Result<u8, String> {
                    (c as char)
                        .to_digit(16)
                        .map(|d| d as u8)
                        .ok_or_else(|| "bad hex digit in \\xNN".to_string())
                };
                out.push(hex(hi)? * 16 + hex(lo)?);
            }
            _ => return Err("unknown escape in w".to_string()),
        }
    }
    Ok(out)
}

fn escape(bytes: &[u8]) -> String {
    let mut s = String::new();
    for &b in bytes {
        match b {
            b'\\' => s.push_str("\\\\"),
            b'\t' => s.push_str("\\t"),
            b'\n' => s.push_str("\\n"),
            0x20..=0x7e => s.push(b as char),
            _ => {
                let _ = write!(s, "\\x{b:02x}");
            }
        }
    }
    s
}

fn cmd_query(args: QueryArgs) -> Result<ExitCode, String> {
    let text = read_text(&args.text)?;
    let script = parse_script(&read_text(&args.script)?)?;
    let index = AfterEditIndex::new(text).map_err(|e| e.to_string())?;
    let mut scratch = index.new_scratch();
    let both = !(args.lbae || args.scae);

    let mut stdout = String::new();
    for (qi, line) in script.iter().enumerate() {
        let (border, cover, n_prime) = if both || args.scae {
            let ans = index
                .query(&line.op, &mut scratch)
                .map_err(|e| format!("query {} ({}): {e}", qi + 1, line.raw))?;
            let b = if args.scae && !both {
                "-".to_string()
            } else {
                ans.border_len.to_string()
            };
            (b, ans.cover_len.to_string(), ans.n_prime)
        } else {
            let b = index
                .lbae(&line.op, &mut scratch)
                .map_err(|e| format!("query {} ({}): {e}", qi + 1, line.raw))?;
            (b.to_string(), "-".to_string(), line.op.n_prime(index.len()))
        };
        let st = &scratch.stats;
        let _ = writeln!(
            stdout,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            qi + 1,
            border,
            cover,
            n_prime,
            st.path.as_str(),
            st.lce_calls,
            st.chain_jumps,
            st.window_queries
        );
    }
    print!("{stdout}");
    Ok(ExitCode::SUCCESS)
}

struct Mismatch {
    query_index: usize,
    line: String,
    what: &'static str,
    expected: usize,
    got: usize,
    t_prime: Vec<u8>,
}

fn verify_range(
    index: &AfterEditIndex,
    script: &[ScriptLine],
    from: usize,
    to: usize,
) -> Result<Option<Mismatch>, String> {
    let mut scratch = index.new_scratch();
    let text = index.text();
    for (qi, line) in script.iter().enumerate().take(to).skip(from) {
        let t_prime = oracle::materialize(text, &line.op)
            .map_err(|e| format!("script line {} ({}): {e}", line.number, line.raw))?;
        let ans: QueryAnswer = index
            .query(&line.op, &mut scratch)
            .map_err(|e| format!("script line {} ({}): {e}", line.number, line.raw))?;
        let want_border = oracle::naive_border(&t_prime);
        let want_cover = oracle::naive_cover(&t_prime);
        let mismatch = |what, expected, got| Mismatch {
            query_index: qi + 1,
            line: line.raw.clone(),
            what,
            expected,
            got,
            t_prime: t_prime.clone(),
        };
        if ans.border_len != want_border {
            return Ok(Some(mismatch("border", want_border, ans.border_len)));
        }
        if ans.cover_len != want_cover {
            return Ok(Some(mismatch("cover", want_cover, ans.cover_len)));
        }
    }
    Ok(None)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let text = read_text(&args.text)?;
    let script = parse_script(&read_text(&args.script)?)?;
    let index = AfterEditIndex::new(text.clone()).map_err(|e| e.to_string())?;
    let workers = args.parallel.max(1).min(script.len().max(1));

    let first: Option<Mismatch> = if workers <= 1 {
        verify_range(&index, &script, 0, script.len())?
    } else {
        let chunk = script.len().div_ceil(workers);
        let mut found: Vec<Option<Mismatch>> = Vec::new();
        std::thread::scope(|scope| -> Result<(), String> {
            let mut handles = Vec::new();
            for wi in 0..workers {
                let from = wi * chunk;
                let to = ((wi + 1) * chunk).min(script.len());
                let index = &index;
                let script = &script;
                handles.push(scope.spawn(move || verify_range(index, script, from, to)));
            }
            for h in handles {
                found.push(h.join().map_err(|_| "worker panicked".to_string())??);
            }
            Ok(())
        })?;
        found.into_iter().flatten().min_by_key(|m| m.query_index)
    };

    if let Some(m) = first {
        eprintln!("mismatch at query {} ({})", m.query_index, m.line);
        eprintln!("  text:     {}", escape(&text));
        eprintln!("  edited:   {}", escape(&m.t_prime));
        eprintln!("  {}: expected {}, got {}", m.what, m.expected, m.got);
        return Ok(ExitCode::from(1));
    }
    println!("verified {} queries, all matching", script.len());
    Ok(ExitCode::SUCCESS)
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v[v.len() / 2]
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, String> {
    let seed = std::env::var("AESTR_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(args.seed);
    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;

    println!("size\tfamily\tbuild_ms\tengine_p50_us\tnaive_p50_us\tspeedup");
    for &n in &sizes {
        if n < 4 {
            return Err("sizes must be >= 4".into());
        }
        for family in ["uniform2", "fibonacci", "period7"] {
            let mut rng = ChaCha12Rng::seed_from_u64(seed ^ n as u64);
            let data = match family {
                "uniform2" => corpus::uniform_random(n, 2, &mut rng),
                "fibonacci" => corpus::fibonacci_word(n),
                _ => corpus::high_period(n, b"aabacab", true),
            };
            let started = Instant::now();
            let index = AfterEditIndex::new(data.clone()).map_err(|e| e.to_string())?;
            let build_ms = started.elapsed().as_secs_f64() * 1e3;
            let text = Text::new(data).unwrap();
            let mut scratch = index.new_scratch();

            let ops: Vec<EditOp> = (0..args.edits.max(1))
                .map(|_| corpus::random_edit(n, 16, 2, &mut rng))
                .collect();

            let mut engine_us = Vec::with_capacity(ops.len());
            let mut sink = 0usize;
            for op in &ops {
                let t0 = Instant::now();
                let ans = index.query(op, &mut scratch).map_err(|e| e.to_string())?;
                engine_us.push(t0.elapsed().as_secs_f64() * 1e6);
                sink ^= ans.border_len ^ ans.cover_len;
            }
            let mut naive_us = Vec::with_capacity(ops.len());
            for op in &ops {
                let t0 = Instant::now();
                let tp = oracle::materialize(&text, op).map_err(|e| e.to_string())?;
                sink ^= oracle::naive_border(&tp) ^ oracle::naive_cover(&tp);
                naive_us.push(t0.elapsed().as_secs_f64() * 1e6);
            }
            std::hint::black_box(sink);

            let ep50 = median(engine_us);
            let np50 = median(naive_us);
            println!(
                "{n}\t{family}\t{build_ms:.1}\t{ep50:.2}\t{np50:.2}\t{:.1}x",
                np50 / ep50
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_selftest() -> Result<ExitCode, String> {
    // exhaustive: all binary texts up to length 9, all edits with |w| <= 2
    let words: Vec<Vec<u8>> = {
        let mut v = vec![Vec::new()];
        for len in 1..=2usize {
            for bits in 0..(1u32 << len) {
                v.push(
                    (0..len)
                        .map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' })
                        .collect(),
                );
            }
        }
        v
    };
    let mut checked = 0u64;
    for n in 1..=9usize {
        for bits in 0..(1u32 << n) {
            let s: Vec<u8> = (0..n)
                .map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' })
                .collect();
            let index = AfterEditIndex::new(s.clone()).map_err(|e| e.to_string())?;
            let text = Text::new(s.clone()).unwrap();
            let mut scratch = index.new_scratch();
            for i in 1..=n + 1 {
                for j in (i - 1)..=n {
                    for w in &words {
                        let op = EditOp::substitute(i, j, w.clone());
                        if op.n_prime(n) == 0 {
                            continue;
                        }
                        let tp = oracle::materialize(&text, &op).map_err(|e| e.to_string())?;
                        let ans = index.query(&op, &mut scratch).map_err(|e| e.to_string())?;
                        let wb = oracle::naive_border(&tp);
                        let wc = oracle::naive_cover(&tp);
                        if ans.border_len != wb || ans.cover_len != wc {
                            eprintln!(
                                "selftest mismatch: T={} phi({},{},{}) T'={} expected ({wb},{wc}) got ({},{})",
                                escape(&s), i, j, escape(w), escape(&tp),
                                ans.border_len, ans.cover_len
                            );
                            return Ok(ExitCode::from(1));
                        }
                        checked += 1;
                        if !scratch.rstar_is_clean() {
                            eprintln!("selftest: scratch not clean after query");
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
            }
        }
    }
    // random larger instances across families and alphabets
    let mut rng = ChaCha12Rng::seed_from_u64(0xAE57);
    for trial in 0..2000usize {
        let n = rng.gen_range(50..400);
        let sigma = [2u8, 4, 26][trial % 3];
        let data = match trial % 4 {
            0 => corpus::fibonacci_word(n),
            1 => corpus::high_period(n, b"abaab", true),
            _ => corpus::uniform_random(n, sigma, &mut rng),
        };
        let index = AfterEditIndex::new(data.clone()).map_err(|e| e.to_string())?;
        let text = Text::new(data.clone()).unwrap();
        let mut scratch = index.new_scratch();
        for _ in 0..10 {
            let op = corpus::random_edit(n, 32, sigma, &mut rng);
            let tp = oracle::materialize(&text, &op).map_err(|e| e.to_string())?;
            let ans = index.query(&op, &mut scratch).map_err(|e| e.to_string())?;
            if ans.border_len != oracle::naive_border(&tp)
                || ans.cover_len != oracle::naive_cover(&tp)
            {
                eprintln!(
                    "selftest mismatch: T={} phi({},{},{}) ",
                    escape(&data),
                    op.i,
                    op.j,
                    escape(&op.w)
                );
                return Ok(ExitCode::from(1));
            }
            checked += 1;
        }
    }
    println!("selftest passed ({checked} queries verified)");
    Ok(ExitCode::SUCCESS)
}
