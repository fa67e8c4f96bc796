//! Batch command-line front end: dimension tables, orthogonal
//! decompositions, irreducible decomposition listings, and fixture
//! verification, with JSON/CSV/text output and a persistent character
//! cache.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use symderiv::partitions::{
    dim_h_lambda, eigenvalue_poly, enumerate_partitions, load_character_cache,
    save_character_cache, Partition,
};
use symderiv::symfunc::{
    character_to_csv, character_to_json, genus1_decompose, module_char, module_sp_decomposition,
    sp_invariant_dim, Module,
};
use symderiv::verify;

#[derive(Parser)]
#[command(
    name = "symderiv",
    about = "Exact computations for symplectic derivation Lie algebras",
    version
)]
struct Cli {
    /// Directory for the persistent character cache (also honored via the
    /// SYMDERIV_CACHE environment variable). A missing cache is never an
    /// error.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format for tables and listings.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Opt in to the larger explicit-vector sizes (14 vertices).
    #[arg(long, global = true)]
    large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Stable invariant dimension table (the published genus-5 convention;
    /// pass --genus to truncate the derivation column elsewhere).
    Dims {
        /// Which column family to print.
        #[arg(value_enum)]
        kind: DimKind,
        /// Largest degree (inclusive, even).
        #[arg(long, default_value_t = 20)]
        k_max: u32,
        /// Height truncation for the derivation column; "stable" resolves
        /// to the per-degree stable genus.
        #[arg(long, default_value = "5")]
        genus: String,
    },
    /// Orthogonal decomposition of the invariant derivation space in one
    /// even degree: per-genus rows of newly admitted components and the
    /// running dimension.
    Ortho {
        /// Even degree 2k, at most 20.
        #[arg(long)]
        degree: u32,
    },
    /// Irreducible decomposition listings of the graded modules.
    Decompose {
        /// h, j, lg, hstar or hg.
        which: String,
        /// Degree k.
        #[arg(long)]
        degree: u32,
        /// GL (Schur) or Sp basis.
        #[arg(long, default_value = "Sp")]
        basis: String,
        /// Genus-one decomposition instead (one-variable characters).
        #[arg(long)]
        genus1: bool,
        /// Allow degrees beyond the table scope (k > 20).
        #[arg(long)]
        unbounded: bool,
    },
    /// Enumerate chord diagrams: the count for a vertex size, or one
    /// diagram by its 1-based lexicographic index.
    Diagrams {
        /// Even vertex count (over 12 requires --large; 16 and beyond are
        /// served by the dimension formulas only).
        #[arg(long)]
        vertices: usize,
        /// Print the diagram at this index instead of the count.
        #[arg(long)]
        index: Option<u32>,
    },
    /// Explicit chord vectors of the stable basis in one even degree,
    /// grouped by component.
    Basis {
        /// Even degree 2k (vectors live on 2k+2 vertices, at most 12).
        #[arg(long)]
        degree: usize,
    },
    /// Run the verification suites and report pass/fail per check.
    Verify {
        /// fixtures7, fixtures8, properties or all.
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DimKind {
    #[value(name = "hSp", alias = "hsp")]
    H,
    #[value(name = "jSp", alias = "jsp")]
    J,
    #[value(name = "hstarSp", alias = "hstarsp")]
    HStar,
    #[value(name = "LSp", alias = "lsp")]
    L,
    #[value(name = "hgSp", alias = "hgsp")]
    Hg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_file = cache_path(&cli);
    if let Some(path) = &cache_file {
        load_character_cache(path);
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    if let Some(path) = &cache_file {
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let _ = save_character_cache(path);
    }
    code
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SYMDERIV_CACHE").map(PathBuf::from))?;
    Some(dir.join("characters.txt"))
}

fn run(cli: &Cli) -> symderiv::Result<ExitCode> {
    match &cli.command {
        Command::Dims { kind, k_max, genus } => {
            cmd_dims(cli, *kind, *k_max, genus)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ortho { degree } => {
            cmd_ortho(cli, *degree)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose {
            which,
            degree,
            basis,
            genus1,
            unbounded,
        } => {
            cmd_decompose(cli, which, *degree, basis, *genus1, *unbounded)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagrams { vertices, index } => {
            cmd_diagrams(cli, *vertices, *index)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { degree } => {
            cmd_basis(cli, *degree)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => cmd_verify(suite),
    }
}

fn cmd_diagrams(cli: &Cli, vertices: usize, index: Option<u32>) -> symderiv::Result<()> {
    let table = symderiv::chords::diagram_table(vertices, cli.large)?;
    match index {
        Some(i) => {
            if i == 0 || i as usize > table.len() {
                return Err(symderiv::Error::IndexError(format!(
                    "index {i} out of 1..={}",
                    table.len()
                )));
            }
            println!("{}", table.diagram_at(i));
        }
        None => println!("{}", table.len()),
    }
    Ok(())
}

fn cmd_basis(cli: &Cli, degree: usize) -> symderiv::Result<()> {
    let family = symderiv::chords::p_stable_basis(degree)?;
    for (label, eigen_label, vectors) in &family.components {
        if vectors.is_empty() {
            continue;
        }
        match cli.format {
            Format::Json => {
                for v in vectors {
                    let rec = symderiv::chords::ChordVectorRecord::from_vector(v);
                    println!(
                        "{{\"component\":\"[{label}]\",\"vector\":{}}}",
                        serde_json_string(&rec)
                    );
                }
            }
            _ => {
                let eig = eigenvalue_poly(eigen_label);
                println!("component [{label}] (eigenvalue {eig}):");
                for v in vectors {
                    println!("  {}", symderiv::chords::chord_vector_dense_text(v)?);
                }
            }
        }
    }
    Ok(())
}

fn serde_json_string(rec: &symderiv::chords::ChordVectorRecord) -> String {
    // Serde is already a dependency of the library; keep the binary lean
    // by formatting through it there.
    symderiv::chords::chord_vector_record_json(rec)
}

fn cmd_dims(cli: &Cli, kind: DimKind, k_max: u32, genus: &str) -> symderiv::Result<()> {
    let mut rows: Vec<(u32, i64)> = Vec::new();
    for k in (2..=k_max).step_by(2) {
        if k % 2 != 0 {
            return Err(symderiv::Error::DegreeParity(format!(
                "invariant columns live in even degrees, got {k}"
            )));
        }
        let truncation = match genus {
            // Per-degree stable genus: k for odd half-degree, k-1 for even.
            "stable" => {
                let half = k / 2;
                if half % 2 == 1 {
                    half
                } else {
                    half.saturating_sub(1).max(1)
                }
            }
            s => s.parse::<u32>().map_err(|_| {
                symderiv::Error::DimensionMismatch(format!("bad genus value {s:?}"))
            })?,
        };
        let h = verify::truncated_invariant_dim(&module_char(Module::H, k)?, truncation);
        let j = sp_invariant_dim(&module_char(Module::J, k)?);
        let l = sp_invariant_dim(&module_char(Module::Lg, k)?);
        let value = match kind {
            DimKind::H => h,
            DimKind::J => j,
            DimKind::HStar => h - j,
            DimKind::L => l,
            DimKind::Hg => h - j - l,
        };
        rows.push((k, value));
    }
    match cli.format {
        Format::Text => {
            println!("degree  dim");
            for (k, v) in rows {
                println!("{k:>6}  {v}");
            }
        }
        Format::Csv => {
            println!("degree,dim");
            for (k, v) in rows {
                println!("{k},{v}");
            }
        }
        Format::Json => {
            let terms: Vec<String> = rows
                .iter()
                .map(|(k, v)| format!("{{\"degree\":{k},\"dim\":{v}}}"))
                .collect();
            println!("[{}]", terms.join(","));
        }
    }
    Ok(())
}

fn cmd_ortho(cli: &Cli, degree: u32) -> symderiv::Result<()> {
    if degree % 2 != 0 || degree == 0 {
        return Err(symderiv::Error::DegreeParity(format!(
            "orthogonal decompositions live in even degrees, got {degree}"
        )));
    }
    if degree > 20 {
        return Err(symderiv::Error::TooLarge(
            "decomposition tables are scoped to degree 20".into(),
        ));
    }
    let k = degree / 2;
    struct Row {
        genus: u32,
        cumulative: u64,
        entries: Vec<(Partition, u64, String)>,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut running = 0u64;
    let mut last_nonzero = 1u32;
    for g in 1..=k + 1 {
        let mut entries = Vec::new();
        for lam in enumerate_partitions(k + 1, None) {
            if lam.height() != g {
                continue;
            }
            let d = dim_h_lambda(&lam, k)?;
            if d > 0 {
                let eig = eigenvalue_poly(&lam.conjugate());
                entries.push((lam, d, eig.to_string()));
            }
        }
        running += entries.iter().map(|(_, d, _)| d).sum::<u64>();
        if !entries.is_empty() {
            last_nonzero = g;
        }
        rows.push(Row {
            genus: g,
            cumulative: running,
            entries,
        });
    }
    rows.truncate(last_nonzero as usize);
    match cli.format {
        Format::Text => {
            println!("orthogonal decomposition in degree {degree}");
            for (i, row) in rows.iter().enumerate() {
                let label = if i + 1 == rows.len() && rows.len() > 1 {
                    format!("g>={}", row.genus)
                } else {
                    format!("g={}", row.genus)
                };
                let comps: Vec<String> = row
                    .entries
                    .iter()
                    .map(|(lam, d, _)| format!("{d}[{lam}]^d"))
                    .collect();
                println!(
                    "{label:>6}  dim {:>10}  {}",
                    row.cumulative,
                    comps.join(" ")
                );
            }
        }
        Format::Csv => {
            println!("genus,cumulative,partition,dim,eigenvalue");
            for row in &rows {
                for (lam, d, eig) in &row.entries {
                    println!(
                        "{},{},\"[{}]\",{},\"{}\"",
                        row.genus, row.cumulative, lam, d, eig
                    );
                }
            }
        }
        Format::Json => {
            let rows_json: Vec<String> = rows
                .iter()
                .map(|row| {
                    let entries: Vec<String> = row
                        .entries
                        .iter()
                        .map(|(lam, d, eig)| {
                            format!(
                                "{{\"partition\":[{lam}],\"dim\":{d},\"eigenvalue\":\"{eig}\"}}"
                            )
                        })
                        .collect();
                    format!(
                        "{{\"genus\":{},\"cumulative\":{},\"components\":[{}]}}",
                        row.genus,
                        row.cumulative,
                        entries.join(",")
                    )
                })
                .collect();
            println!("{{\"degree\":{degree},\"rows\":[{}]}}", rows_json.join(","));
        }
    }
    Ok(())
}

fn cmd_decompose(
    cli: &Cli,
    which: &str,
    degree: u32,
    basis: &str,
    genus1: bool,
    unbounded: bool,
) -> symderiv::Result<()> {
    if degree > 20 && !unbounded {
        return Err(symderiv::Error::TooLarge(
            "degrees beyond 20 are outside the table scope; pass --unbounded to force".into(),
        ));
    }
    let c = if genus1 {
        genus1_decompose(degree)?
    } else {
        let module = Module::parse(which).ok_or_else(|| {
            symderiv::Error::DimensionMismatch(format!("unknown module {which:?}"))
        })?;
        match basis {
            "GL" | "gl" => module_char(module, degree)?,
            "Sp" | "sp" => module_sp_decomposition(module, degree)?,
            other => {
                return Err(symderiv::Error::DimensionMismatch(format!(
                    "unknown basis {other:?}"
                )))
            }
        }
    };
    match cli.format {
        Format::Json => println!("{}", character_to_json(degree, &c)),
        Format::Csv => print!("{}", character_to_csv(degree, &c)),
        Format::Text => {
            let terms: Vec<String> = c
                .ordered_terms()
                .into_iter()
                .map(|(p, m)| {
                    if m == 1 {
                        format!("[{p}]")
                    } else {
                        format!("{m}[{p}]")
                    }
                })
                .collect();
            if terms.is_empty() {
                println!("0");
            } else {
                println!("{}", terms.join(" + "));
            }
        }
    }
    Ok(())
}

fn cmd_verify(suite: &str) -> symderiv::Result<ExitCode> {
    let results = match suite {
        "fixtures7" => verify::run_fixtures7(),
        "fixtures8" => verify::run_fixtures8(),
        "properties" => verify::run_properties(),
        "all" => verify::run_all(),
        other => {
            return Err(symderiv::Error::DimensionMismatch(format!(
                "unknown suite {other:?} (use fixtures7, fixtures8, properties or all)"
            )))
        }
    };
    let mut failures = 0;
    for r in &results {
        println!(
            "{} {} - {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        if !r.passed {
            failures += 1;
        }
    }
    println!("{} checks, {} failed", results.len(), failures);
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
