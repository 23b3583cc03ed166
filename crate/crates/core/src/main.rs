use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ghilb::chamber::{chain_order, compute_walls, ChamberConfig};
use ghilb::check::{check_group, sweep_groups};
use ghilb::io::{self, FigureFormat};
use ghilb::recipe::Recipe;
use ghilb::triangulation::{triangulate, Triangulation};
use ghilb::unlock::{unlock_all, Unlocker};
use ghilb::{parse_group_spec, Character, Error, GroupData, Result};

#[derive(Parser)]
#[command(name = "ghilb", version, about = "Reid's recipe, G-igsaw pieces and chamber walls for G-Hilb")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// the triangulation of the junior simplex and its G-graphs
    Triangulate(Common),
    /// Reid's recipe: marks on curves and divisors
    Recipe(Common),
    /// the G-igsaw piece of one curve, with the oracle verdict
    Gig(GigArgs),
    /// inequalities, redundancy certificates and walls of the chamber
    Walls(Common),
    /// the full invariant suite
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// group, e.g. "1/6(1,2,3)" or "1/2(1,1,0);1/2(0,1,1)"
    spec: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write one file per group into this directory
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    max_quotient_size: Option<usize>,
    /// run over every cyclic group of order up to this bound
    #[arg(long)]
    sweep: Option<u32>,
    /// treat warnings as failures
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct GigArgs {
    #[command(flatten)]
    common: Common,
    /// curve given by its two vertex indices
    #[arg(long, value_name = "I,J", conflicts_with_all = ["char", "index"])]
    edge: Option<String>,
    /// curve given by its character and position along the chain
    #[arg(long = "char", requires = "index")]
    char: Option<u32>,
    #[arg(long, requires = "char")]
    index: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Tikz,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Svg => "svg",
            Format::Tikz => "tex",
        }
    }
}

fn groups(c: &Common) -> Result<Vec<GroupData>> {
    match (&c.spec, c.sweep) {
        (Some(s), None) => Ok(vec![parse_group_spec(s)?]),
        (None, Some(n)) => sweep_groups(n),
        (Some(_), Some(_)) => Err(Error::Usage("give a group or --sweep, not both".into())),
        (None, None) => Err(Error::Usage("give a group or --sweep".into())),
    }
}

fn config(c: &Common) -> ChamberConfig {
    ChamberConfig { max_quotient_size: c.max_quotient_size }
}

fn figure(t: &Triangulation, r: Option<&Recipe>, f: Format) -> Option<String> {
    match f {
        Format::Svg => Some(io::figure(t, r, FigureFormat::Svg)),
        Format::Tikz => Some(io::figure(t, r, FigureFormat::Tikz)),
        _ => None,
    }
}

fn strict(c: &Common, warnings: &[String]) -> Result<()> {
    for w in warnings {
        eprintln!("warning: {w}");
    }
    match (c.strict, warnings.first()) {
        (true, Some(w)) => Err(Error::Invariant(format!("strict: {w}"))),
        _ => Ok(()),
    }
}

fn parse_edge(t: &Triangulation, s: &str) -> Result<usize> {
    let bad = || Error::Usage(format!("--edge expects two vertex indices, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    t.edges
        .iter()
        .position(|e| e.v == [a, b] || e.v == [b, a])
        .ok_or_else(|| Error::Usage(format!("no edge between v{a} and v{b}")))
}

fn gig(t: &Triangulation, r: &Recipe, a: &GigArgs) -> Result<usize> {
    let e = match (&a.edge, a.char, a.index) {
        (Some(s), _, _) => parse_edge(t, s)?,
        (None, Some(c), Some(k)) => {
            let chi = Character(c);
            if c >= t.group.order() || r.chain(chi).is_none() {
                return Err(Error::Usage(format!("character {c} marks no curve")));
            }
            let order = chain_order(t, r, chi);
            *order
                .get(k)
                .ok_or_else(|| Error::Usage(format!("the {c}-chain has {} curves", order.len())))?
        }
        _ => return Err(Error::Usage("give --edge or --char with --index".into())),
    };
    if t.edges[e].normal.is_none() {
        return Err(Error::Usage(format!("edge e{e} lies on the boundary")));
    }
    Ok(e)
}

fn run_one(cmd: &Cmd, c: &Common, g: &GroupData) -> Result<String> {
    let t = triangulate(g)?;
    let text = c.format == Format::Text;
    Ok(match cmd {
        Cmd::Triangulate(_) => match figure(&t, None, c.format) {
            Some(s) => s,
            None if text => io::triangulation_text(&t),
            None => io::to_json(&io::report(&t, None, None, None))?,
        },
        Cmd::Recipe(_) => {
            let r = Recipe::compute(&t)?;
            match figure(&t, Some(&r), c.format) {
                Some(s) => s,
                None if text => io::recipe_text(&t, &r),
                None => io::to_json(&io::report(&t, Some(&r), None, None))?,
            }
        }
        Cmd::Gig(a) => {
            let r = Recipe::compute(&t)?;
            let e = gig(&t, &r, a)?;
            let piece = Unlocker::new(&t, &r).unlock(e)?;
            match c.format {
                Format::Text => io::gig_text(&t, &r, &piece),
                Format::Json => serde_json::to_string_pretty(&piece)? + "\n",
                _ => return Err(Error::Usage("gig supports text and json".into())),
            }
        }
        Cmd::Walls(_) => {
            let r = Recipe::compute(&t)?;
            let w = compute_walls(&t, &r, &config(c))?;
            strict(c, &w.warnings)?;
            match figure(&t, Some(&r), c.format) {
                Some(s) => s,
                None if text => io::walls_text(&t, &w),
                None => {
                    let pieces = unlock_all(&t, &r)?;
                    io::to_json(&io::report(&t, Some(&r), Some(&pieces), Some(&w)))?
                }
            }
        }
        Cmd::Check(_) => {
            let rep = check_group(g, &config(c))?;
            let out = match c.format {
                Format::Json => serde_json::to_string_pretty(&rep)? + "\n",
                _ => io::check_text(&rep),
            };
            if !rep.passed() {
                print!("{out}");
                rep.into_result()?;
            }
            out
        }
    })
}

fn file_name(g: &GroupData, f: Format) -> String {
    let stem: String = g
        .to_string()
        .chars()
        .map(|ch| if ch.is_ascii_alphanumeric() { ch } else { '_' })
        .collect();
    format!("{}.{}", stem.trim_matches('_'), f.extension())
}

fn run(cli: &Cli) -> Result<()> {
    let c = match &cli.cmd {
        Cmd::Triangulate(c) | Cmd::Recipe(c) | Cmd::Walls(c) | Cmd::Check(c) => c,
        Cmd::Gig(a) => &a.common,
    };
    if let Some(dir) = &c.out {
        std::fs::create_dir_all(dir)?;
    }
    let mut stdout = std::io::stdout().lock();
    for g in groups(c)? {
        let s = run_one(&cli.cmd, c, &g)?;
        match &c.out {
            Some(dir) => std::fs::write(dir.join(file_name(&g, c.format)), s)?,
            None => stdout.write_all(s.as_bytes())?,
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // usage errors exit with 1; 2 is reserved for invariant violations
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
