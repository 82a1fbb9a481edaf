//! The `latcon` command line.

mod format;

pub use format::{emit_dot, parse_lattice_file, serialize_lattice};

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::congruence::{
    con_count, con_count_oracle, exceeds_threshold, jir_quasiorder, ORACLE_MAX,
};
use crate::enumeration::{
    cover_certificate, enumerate_lattices_with_max, spectrum_with, verify_theorem_with, RunOptions,
    DEFAULT_MAX,
};
use crate::error::{Error, Result};
use crate::lattice::{
    make_boolean, make_chain, make_l_family, make_mk, make_ordinal_sum, make_product, Lattice,
};
use crate::planarity::{is_dismantlable, is_planar_graph_oracle, is_planar_kr, kr_catalog};
use crate::poset::find_embedding;

#[derive(Parser, Debug)]
#[command(
    name = "latcon",
    version,
    about = "Congruences and planarity of finite lattices"
)]
struct Cli {
    /// Largest size accepted by enumerate, spectrum and verify.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducibles, congruence count, planarity and dismantlability.
    Analyze { file: String },
    /// Build a standard lattice: chain N, boolean K, mk K, lfamily N,
    /// ordsum FILE FILE, product FILE FILE, dual FILE, kr NAME.
    Construct {
        family: String,
        params: Vec<String>,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Canonical cover lists of all n-element lattices.
    Enumerate { n: usize },
    /// Distinct congruence counts over all n-element lattices.
    Spectrum {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check that every n-element lattice with more than 2^(n-5)
    /// congruences is planar. Exits with status 1 on a violation.
    Verify {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Also print one record per isomorphism class.
        #[arg(long)]
        records: bool,
    },
    /// Look for K as a subposet of L and of the dual of L.
    Embed { k: String, l: String },
    /// Hasse diagram in DOT.
    Dot { file: String },
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let first = text
                    .lines()
                    .next()
                    .unwrap_or("")
                    .trim_start_matches("error: ");
                let _ = writeln!(stderr, "error: usage: {first}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "error: {}: {message}", e.kind());
            2
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let mut text = String::new();
        if path == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| io_error("standard input", e))?;
        } else {
            text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        }
        Ok(text)
    }

    fn lattice(&mut self, path: &str) -> Result<Lattice> {
        parse_lattice_file(&self.read(path)?)
    }

    fn print(&mut self, text: &str) -> Result<()> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| io_error("standard output", e))
    }

    fn write_to(&mut self, path: &str, text: &str) -> Result<()> {
        if path == "-" {
            self.print(text)
        } else {
            std::fs::write(path, text).map_err(|e| io_error(path, e))
        }
    }
}

fn io_error(what: &str, e: std::io::Error) -> Error {
    Error::Io(format!("{what}: {e}"))
}

fn execute(cli: Cli, io: &mut Io) -> Result<i32> {
    let opts = |jobs| RunOptions {
        max: cli.max_n,
        jobs,
    };
    match cli.command {
        Command::Analyze { ref file } => {
            let l = io.lattice(file)?;
            io.print(&analyze(&l)?)?;
        }
        Command::Construct {
            ref family,
            ref params,
            ref output,
        } => {
            let l = construct(io, family, params)?;
            io.write_to(output, &serialize_lattice(&l))?;
        }
        Command::Enumerate { n } => {
            let all = enumerate_lattices_with_max(n, cli.max_n)?;
            let mut out = format!("n={n} classes={}\n", all.len());
            for l in &all {
                writeln!(out, "{}", cover_certificate(l)).unwrap();
            }
            io.print(&out)?;
        }
        Command::Spectrum { n, jobs } => {
            io.print(&spectrum_with(n, &opts(jobs))?.to_text())?;
        }
        Command::Verify { n, jobs, records } => {
            let report = verify_theorem_with(n, &opts(jobs))?;
            io.print(&report.summary())?;
            if records {
                io.print(&report.records_text())?;
            }
            return Ok(if report.is_clean() { 0 } else { 1 });
        }
        Command::Embed { ref k, ref l } => {
            let k = io.lattice(k)?;
            let l = io.lattice(l)?;
            let show = |found: Option<crate::poset::Embedding>| match found {
                Some(e) => {
                    let parts: Vec<String> = e
                        .map
                        .iter()
                        .enumerate()
                        .map(|(i, j)| format!("{i}->{j}"))
                        .collect();
                    parts.join(" ")
                }
                None => "none".into(),
            };
            let direct = show(find_embedding(k.poset(), l.poset()));
            let dual = show(find_embedding(k.poset(), l.dual().poset()));
            io.print(&format!("embedding: {direct}\ndual: {dual}\n"))?;
        }
        Command::Dot { ref file } => {
            let l = io.lattice(file)?;
            io.print(&emit_dot(&l))?;
        }
    }
    Ok(0)
}

fn analyze(l: &Lattice) -> Result<String> {
    let n = l.len();
    let irr = l.irreducibles();
    let con = con_count(l);
    let mut out = String::new();
    writeln!(out, "n={n}").unwrap();
    writeln!(
        out,
        "Jir={} Mir={} Jred={} Mred={}",
        irr.jir.len(),
        irr.mir.len(),
        irr.jred.len(),
        irr.mred.len()
    )
    .unwrap();
    writeln!(out, "Con={con}").unwrap();
    if n <= ORACLE_MAX {
        let oracle = con_count_oracle(l)?;
        writeln!(out, "Con_oracle={oracle} agree={}", oracle == con).unwrap();
    }
    let q = jir_quasiorder(l);
    let reps: Vec<String> = q
        .representatives()
        .iter()
        .map(|&i| q.jir[i].to_string())
        .collect();
    let qu_covers: Vec<String> = q
        .qu_poset
        .cover_pairs()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    writeln!(
        out,
        "Qu={} representatives=[{}] covers=[{}]",
        q.qu_poset.len(),
        reps.join(" "),
        qu_covers.join(" ")
    )
    .unwrap();
    let verdict = is_planar_kr(l);
    writeln!(out, "planar={}", verdict.planar).unwrap();
    writeln!(out, "planar_graph={}", is_planar_graph_oracle(l)).unwrap();
    if let Some(w) = verdict.witness {
        let side = if w.into_dual { "dual" } else { "lattice" };
        let image: Vec<String> = w.embedding.map.iter().map(|x| x.to_string()).collect();
        writeln!(
            out,
            "witness={} in {side} at [{}]",
            w.entry,
            image.join(" ")
        )
        .unwrap();
    }
    writeln!(out, "dismantlable={}", is_dismantlable(l)).unwrap();
    let verdict = if exceeds_threshold(con, n) {
        "many"
    } else {
        "few"
    };
    writeln!(out, "congruences={verdict}").unwrap();
    Ok(out)
}

fn construct(io: &mut Io, family: &str, params: &[String]) -> Result<Lattice> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "{family} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let number = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Usage(format!("expected a number, found {s:?}")))
    };
    match family {
        "chain" | "boolean" | "mk" | "lfamily" => {
            want(1)?;
            let k = number(&params[0])?;
            match family {
                "chain" => make_chain(k),
                "boolean" => make_boolean(k),
                "mk" => make_mk(k),
                _ => make_l_family(k),
            }
        }
        "ordsum" | "product" => {
            want(2)?;
            let a = io.lattice(&params[0])?;
            let b = io.lattice(&params[1])?;
            if family == "ordsum" {
                make_ordinal_sum(&a, &b)
            } else {
                make_product(&a, &b)
            }
        }
        "dual" => {
            want(1)?;
            Ok(io.lattice(&params[0])?.dual())
        }
        "kr" => {
            want(1)?;
            let name = &params[0];
            kr_catalog(crate::planarity::CATALOG_LIMIT)?
                .into_iter()
                .find(|e| &e.name == name)
                .map(|e| e.lattice)
                .ok_or_else(|| Error::Usage(format!("no catalog entry named {name}")))
        }
        other => Err(Error::Usage(format!("unknown family {other}"))),
    }
}
