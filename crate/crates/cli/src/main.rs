use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use krtl::bounds::{b1, b2, b3, bound_report, cauchy_report, cone_bound, ZonePattern};
use krtl::braid::{parse_braid_file, ColoredBraid, InfiniteBraidSpec, Level};
use krtl::census::{census, resolve_nondiagonals, DEFAULT_RESOLUTION_CAP};
use krtl::diagonal::find_diagonals;
use krtl::homfly::homfly_polynomial;
use krtl::poly::{GradingShift, LaurentPoly};
use krtl::shift::{
    fork_slide_shift, fork_twist_shift, ladder_slide_shift, ladder_twist_shift,
    reidemeister_shift, ForkSlide, ForkTwist, Reidemeister,
};
use krtl::stable::{an_truncated_dims, link_estimate_report, stability_check};
use krtl::web::{colored_bracket, eval_closed_web_balanced_capped, WebSpec, DEFAULT_STATE_CAP};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "krtl", version, about = "Colored Khovanov-Rozansky toolkit for positive braids")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Enumeration cap for resolutions and web states.
    #[arg(long, global = true, env = "KRTL_CAP", value_parser = parse_cap)]
    cap: Option<u128>,

    /// Worker threads for the parallel enumerations (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy diagonals and zones of a positive braid.
    Diagonals(BraidArg),
    /// Resolution census of the crossing complexes.
    Census {
        #[command(flatten)]
        braid: BraidArg,
        /// Group resolutions of the non-diagonal crossings by zone pattern.
        #[arg(long)]
        patterns: bool,
    },
    /// Homological-order bounds for the last twist and last crossing.
    Bound(BraidArg),
    /// Bound reports along the partial braids of an infinite spec.
    Cauchy {
        /// Spec file with a `tail=` line.
        path: PathBuf,
        /// Prefix lengths to report on.
        #[arg(long, value_delimiter = ',', required = true)]
        ell: Vec<usize>,
    },
    /// Grading shift of a local move.
    Shift {
        #[command(subcommand)]
        mv: Move,
    },
    /// Evaluate a closed annular web, e.g. `n=2 m=1 N=2 rungs=(1:1)`.
    EvalWeb {
        web: String,
    },
    /// Bracket of the braid closure as a signed sum of web values.
    Bracket {
        #[command(flatten)]
        braid: BraidArg,
        /// Allow any color and finite level instead of m=1, N=2.
        #[arg(long)]
        colored: bool,
    },
    /// HOMFLY-PT polynomial of the closure.
    Homfly(BraidArg),
    /// Truncated trigraded dimensions of the stable algebra.
    Stable {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        y: u32,
        #[arg(long, allow_hyphen_values = true)]
        qmin: i32,
    },
    /// Low-degree estimate for a positive 1-colored braid.
    Report {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        qmin: i32,
    },
    /// Coefficient stability of torus-braid HOMFLY-PT polynomials.
    Stability {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
}

#[derive(Args)]
struct BraidArg {
    /// Braid file.
    path: PathBuf,
}

#[derive(Subcommand)]
enum Move {
    ForkSlide {
        i: u32,
        j: u32,
        k: u32,
        /// `t1` crosses both prongs, `t2` is shift-free.
        #[arg(long, default_value = "t1")]
        variant: String,
    },
    ForkTwist {
        i: u32,
        j: u32,
        #[arg(long, default_value = "t3")]
        variant: String,
    },
    LadderSlide {
        i: u32,
        j: u32,
        k: u32,
        l: u32,
    },
    LadderTwist {
        i: u32,
        j: u32,
        k: u32,
    },
    Reidemeister {
        /// One of r1pos, r1neg, r2.
        kind: String,
        i: u32,
        #[arg(long, default_value = "inf")]
        level: String,
    },
}

/// Bad command-line input that clap cannot catch on its own.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

fn parse_cap(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("the cap must be positive".into()),
        Ok(c) => Ok(c),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_braid(path: &Path) -> anyhow::Result<ColoredBraid> {
    let braid = parse_braid_file(&read(path)?)?.braid()?;
    for w in braid.warnings() {
        eprintln!("{w}");
    }
    Ok(braid)
}

fn load_spec(path: &Path) -> anyhow::Result<InfiniteBraidSpec> {
    Ok(parse_braid_file(&read(path)?)?.spec()?)
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Picks the format, rejecting ones the subcommand has no rendering for.
fn format(cli: &Cli, default: Format, allowed: &[Format]) -> anyhow::Result<Format> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage("this subcommand has no tsv output; use json or text"))
    }
}

const NO_TSV: &[Format] = &[Format::Json, Format::Text];
const ALL: &[Format] = &[Format::Json, Format::Tsv, Format::Text];

fn run(cli: &Cli) -> anyhow::Result<String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| anyhow!(e))?;
    }
    match &cli.command {
        Command::Diagonals(b) => diagonals(cli, &load_braid(&b.path)?),
        Command::Census { braid, patterns } => {
            let braid = load_braid(&braid.path)?;
            if *patterns {
                pattern_table(cli, &braid)
            } else {
                census_summary(cli, &braid)
            }
        }
        Command::Bound(b) => {
            let r = bound_report(&load_braid(&b.path)?)?;
            match format(cli, Format::Json, NO_TSV)? {
                Format::Text => Ok(format!(
                    "ell={} y={} z={}\nbound_f={}{}\nbound_g={}{}\n",
                    r.ell,
                    r.y,
                    r.z,
                    r.bound_f.value,
                    flag_note(r.bound_f.flag),
                    r.bound_g.value,
                    flag_note(r.bound_g.flag),
                )),
                _ => json(&r),
            }
        }
        Command::Cauchy { path, ell } => {
            let r = cauchy_report(&load_spec(path)?, ell)?;
            match format(cli, Format::Json, NO_TSV)? {
                Format::Text => {
                    let mut s = String::new();
                    for b in &r.reports {
                        s += &format!(
                            "ell={} y={} z={} bound_f={} bound_g={}\n",
                            b.ell, b.y, b.z, b.bound_f.value, b.bound_g.value
                        );
                    }
                    s += &format!(
                        "y_nondecreasing={} y_growth={}\n",
                        r.y_nondecreasing, r.y_growth
                    );
                    Ok(s)
                }
                _ => json(&r),
            }
        }
        Command::Shift { mv } => shift(cli, mv),
        Command::EvalWeb { web } => {
            let spec: WebSpec = web.parse().map_err(|e| usage(format!("{e}")))?;
            let cap = cli.cap.unwrap_or(DEFAULT_STATE_CAP);
            let v = eval_closed_web_balanced_capped(&spec.web, spec.level, cap)?;
            let v = match v.min_q() {
                Some(lo) => v.shifted(GradingShift::new(0, -lo, 0)),
                None => v,
            };
            poly_out(cli, "value", &v)
        }
        Command::Bracket { braid, colored } => {
            let braid = load_braid(&braid.path)?;
            if !colored && (braid.m() != 1 || braid.level() != Level::Finite(2)) {
                return Err(anyhow!(
                    "the bracket needs m=1 and N=2 (got m={} N={}); pass --colored for other colorings",
                    braid.m(),
                    braid.level()
                ));
            }
            let cap = cli.cap.unwrap_or(DEFAULT_RESOLUTION_CAP);
            poly_out(cli, "bracket", &colored_bracket(&braid, cap)?)
        }
        Command::Homfly(b) => {
            let p = homfly_polynomial(&load_braid(&b.path)?)?;
            match format(cli, Format::Text, NO_TSV)? {
                Format::Text => Ok(format!("{p}\n")),
                _ => json(&serde_json::json!({ "homfly": p })),
            }
        }
        Command::Stable { n, y, qmin } => {
            let table = an_truncated_dims(*n, *y, *qmin);
            match format(cli, Format::Tsv, ALL)? {
                Format::Json => json(&table),
                _ => Ok(table.to_tsv()),
            }
        }
        Command::Report { braid, qmin } => {
            let r = link_estimate_report(&load_braid(&braid.path)?, *qmin)?;
            match format(cli, Format::Text, ALL)? {
                Format::Json => json(&r),
                Format::Tsv => Ok(r.table.to_tsv()),
                Format::Text => Ok(format!(
                    "n={} ell={} y={}\n{}\n{}",
                    r.n,
                    r.ell,
                    r.y,
                    r.statement,
                    r.table.to_tsv()
                )),
            }
        }
        Command::Stability { n, k } => {
            let r = stability_check(*n, k)?;
            match format(cli, Format::Text, NO_TSV)? {
                Format::Text => {
                    let mut s = String::new();
                    for e in &r.entries {
                        s += &format!("k={}\n  homfly: {}\n  normalized: {}\n", e.k, e.homfly, e.normalized);
                    }
                    let ag: Vec<String> = r.agreements.iter().map(|a| a.to_string()).collect();
                    s += &format!("agreements: {}\nnondecreasing: {}\n", ag.join(" "), r.nondecreasing);
                    Ok(s)
                }
                _ => json(&r),
            }
        }
    }
}

fn flag_note(flag: Option<&str>) -> String {
    flag.map(|f| format!(" ({f})")).unwrap_or_default()
}

fn poly_out(cli: &Cli, key: &str, p: &LaurentPoly) -> anyhow::Result<String> {
    match format(cli, Format::Text, NO_TSV)? {
        Format::Text => Ok(format!("{p}\n")),
        _ => json(&BTreeMap::from([(key, p)])),
    }
}

#[derive(Serialize)]
struct DiagonalsOut {
    y: usize,
    z: usize,
    diagonals: Vec<Vec<usize>>,
    skipped: Vec<usize>,
    zones: BTreeMap<usize, usize>,
}

fn diagonals(cli: &Cli, braid: &ColoredBraid) -> anyhow::Result<String> {
    let d = find_diagonals(braid)?;
    let out = DiagonalsOut {
        y: d.y,
        z: d.z,
        diagonals: d.diagonals.clone(),
        skipped: d.skipped.iter().copied().collect(),
        zones: d.zone_census(),
    };
    match format(cli, Format::Json, NO_TSV)? {
        Format::Text => {
            let mut s = format!("y={} z={}\n", out.y, out.z);
            for (i, diag) in out.diagonals.iter().enumerate() {
                let ps: Vec<String> = diag.iter().map(|p| p.to_string()).collect();
                s += &format!("diagonal {}: {}\n", i + 1, ps.join(" "));
            }
            for (z, c) in &out.zones {
                s += &format!("zone {z}: {c}\n");
            }
            Ok(s)
        }
        _ => json(&out),
    }
}

#[derive(Serialize)]
struct CensusOut {
    /// Kept as a string: the count can pass what JSON numbers hold exactly.
    objects: String,
    poincare: LaurentPoly,
}

fn census_summary(cli: &Cli, braid: &ColoredBraid) -> anyhow::Result<String> {
    let c = census(braid);
    let out = CensusOut {
        objects: c
            .objects
            .map_or_else(|| "more than 2^128".to_string(), |o| o.to_string()),
        poincare: c.poincare,
    };
    match format(cli, Format::Text, NO_TSV)? {
        Format::Text => Ok(format!("objects: {}\npoincare: {}\n", out.objects, out.poincare)),
        _ => json(&out),
    }
}

#[derive(Serialize)]
struct PatternRow {
    nonempty: Vec<usize>,
    resolutions: String,
    b1: u64,
    b2: u64,
    b3: u64,
}

#[derive(Serialize)]
struct PatternsOut {
    n: usize,
    y: usize,
    z: usize,
    used: usize,
    resolutions: String,
    cone_bound: krtl::bounds::Bound,
    patterns: Vec<PatternRow>,
}

fn pattern_table(cli: &Cli, braid: &ColoredBraid) -> anyhow::Result<String> {
    // the table is structured data only
    format(cli, Format::Json, &[Format::Json])
        .map_err(|_| usage("census --patterns only prints json"))?;
    let dec = find_diagonals(braid)?;
    let cap = cli.cap.unwrap_or(DEFAULT_RESOLUTION_CAP);
    let table = resolve_nondiagonals(braid, &dec, cap)?;
    let n = braid.n();
    let patterns = table
        .patterns
        .iter()
        .map(|(zones, count)| {
            let p = ZonePattern::new(dec.used, zones.iter().copied());
            PatternRow {
                nonempty: zones.clone(),
                resolutions: count.to_string(),
                b1: b1(&p),
                b2: b2(&p, n),
                b3: b3(&p, n),
            }
        })
        .collect();
    let candidates = dec.zone_of.values().copied().collect();
    json(&PatternsOut {
        n,
        y: dec.y,
        z: dec.z,
        used: dec.used,
        resolutions: table.resolutions.to_string(),
        cone_bound: cone_bound(n, dec.used, &candidates)?,
        patterns,
    })
}

fn shift(cli: &Cli, mv: &Move) -> anyhow::Result<String> {
    let (name, s) = match mv {
        Move::ForkSlide { i, j, k, variant } => {
            let v = match variant.as_str() {
                "t1" => ForkSlide::T1,
                "t2" => ForkSlide::T2,
                other => return Err(usage(format!("unknown fork-slide variant {other:?}"))),
            };
            ("fork-slide", fork_slide_shift(*i, *j, *k, v)?)
        }
        Move::ForkTwist { i, j, variant } => {
            let v = match variant.as_str() {
                "t3" => ForkTwist::T3,
                "t4" => ForkTwist::T4,
                other => return Err(usage(format!("unknown fork-twist variant {other:?}"))),
            };
            ("fork-twist", fork_twist_shift(*i, *j, v)?)
        }
        Move::LadderSlide { i, j, k, l } => ("ladder-slide", ladder_slide_shift(*i, *j, *k, *l)?),
        Move::LadderTwist { i, j, k } => ("ladder-twist", ladder_twist_shift(*i, *j, *k)?),
        Move::Reidemeister { kind, i, level } => {
            let mv = match kind.as_str() {
                "r1pos" => Reidemeister::R1Pos,
                "r1neg" => Reidemeister::R1Neg,
                "r2" => Reidemeister::R2,
                other => return Err(usage(format!("unknown Reidemeister move {other:?}"))),
            };
            let level = match level.as_str() {
                "inf" => Level::Infinite,
                v => Level::Finite(
                    v.parse()
                        .map_err(|_| usage(format!("bad level {v:?}")))?,
                ),
            };
            ("reidemeister", reidemeister_shift(mv, *i, level)?)
        }
    };
    match format(cli, Format::Text, NO_TSV)? {
        Format::Text => Ok(format!("{s}\n")),
        _ => json(&serde_json::json!({
            "move": name,
            "monomial": s.to_string(),
            "t": s.t,
            "q": s.q,
            "a": s.a,
        })),
    }
}
