mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sturmkit::complex::{complex_from_signed_template, Complex, ComplexFile, Decoration, Template};
use sturmkit::enumeration::{
    enumerate_octahedron_templates, scan_sturm_pairs, BarycenterGraph, PoleChoice, ScanMode,
};
use sturmkit::pairs::{
    pair_report, scoop, sigma_from_pair, sz_pair, szs_pair, zs_pair, PathPair, Side,
};
use sturmkit::{complex::solid_octahedron, Meander, Permutation, Report, ZeroMatrix};

use render::RenderSpec;

#[derive(Parser)]
#[command(
    name = "sturmkit",
    version,
    about = "Meanders, 3-cell templates and Sturm permutations"
)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, env = "STURMKIT_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Poles {
    Adjacent,
    Antipodal,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiskStyle {
    Zs,
    Sz,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScoopSide {
    East,
    West,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a permutation: dissipative, Morse, meander, Sturm, 3-meander template.
    ValidateMeander { file: PathBuf },
    /// Check a JSON complex: regularity, bipolarity and, if decorated, the 3-cell template conditions.
    ValidateComplex { file: PathBuf },
    /// Print the path pair and permutation of a disk or decorated 3-cell.
    Pair {
        file: PathBuf,
        /// Pair style for planar disks.
        #[arg(long, value_enum, default_value = "zs")]
        style: DiskStyle,
    },
    /// Print only the permutation of a disk or decorated 3-cell.
    Sigma {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "zs")]
        style: DiskStyle,
    },
    /// Complex to permutation and back; compares the result with the input.
    Roundtrip { file: PathBuf },
    /// Remove the 3-cell and one open hemisphere from a 3-meander template.
    Scoop {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "east")]
        side: ScoopSide,
    },
    /// Hamiltonian path counts and template census of the solid octahedron.
    EnumerateOctahedron {
        #[arg(long, value_enum, default_value = "both")]
        poles: Poles,
        /// Also scan all path pairs for Sturm realizations.
        #[arg(long)]
        exhaustive: bool,
        /// With --exhaustive, count every Sturm pair, not only realizations (slow).
        #[arg(long, requires = "exhaustive")]
        all_sturm: bool,
    },
    /// Draw a permutation as a meander or a JSON complex as planar hemispheres.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 900)]
        width: u32,
        #[arg(long, default_value_t = 450)]
        height: u32,
        #[arg(long)]
        no_labels: bool,
    },
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn is_json(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{')
}

fn load_permutation(path: &Path) -> Result<Permutation> {
    Ok(Permutation::parse(&read(path)?, None)?)
}

fn load_complex(path: &Path) -> Result<(Complex, Option<Decoration>)> {
    let file: ComplexFile = serde_json::from_str(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(file.into_parts()?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_report(r: &Report) {
    print!("{r}");
}

fn compute_pair(c: &Complex, d: Option<&Decoration>, style: DiskStyle) -> Result<PathPair> {
    Ok(match (c.ball(), d) {
        (Some(_), Some(d)) => szs_pair(&Template::new(c.clone(), d.clone()))?,
        (Some(_), None) => bail!("a 3-cell needs a decoration"),
        (None, _) => match style {
            DiskStyle::Zs => zs_pair(c)?,
            DiskStyle::Sz => sz_pair(c)?,
        },
    })
}

fn validate_meander(file: &Path) -> Result<bool> {
    let sigma = load_permutation(file)?;
    let m = Meander::build(&sigma);
    println!("crossings: {}", m.len());
    println!("dissipative: {}", yes(m.is_dissipative()));
    match m.morse_numbers() {
        Ok(i) => println!("morse: {}", join(&i)),
        Err(e) => println!("morse: inconsistent ({e})"),
    }
    println!("morse nonnegative and consistent: {}", yes(m.is_morse()));
    println!("meander: {}", yes(m.is_meander()));
    let sturm = m.is_sturm();
    if !sturm {
        println!("Sturm: no");
        return Ok(false);
    }
    let rep = m.three_meander_report()?;
    print_report(&rep);
    let verdict = if rep.pass() {
        "yes (i-iv pass)".to_string()
    } else {
        let failed: Vec<&str> = rep.failures().iter().map(|c| c.name.as_str()).collect();
        format!("no ({})", failed.join(", "))
    };
    println!("Sturm: yes; 3-meander template: {verdict}");
    Ok(true)
}

fn validate_complex(file: &Path) -> Result<bool> {
    let (c, d) = load_complex(file)?;
    let mut rep = c.validate_regular();
    rep.extend(c.validate_bipolar());
    if let Some(d) = d {
        rep.extend(Template::new(c, d).validate());
    }
    print_report(&rep);
    println!("valid: {}", yes(rep.pass()));
    Ok(rep.pass())
}

fn pair(file: &Path, style: DiskStyle, full: bool) -> Result<bool> {
    let (c, d) = load_complex(file)?;
    let p = compute_pair(&c, d.as_ref(), style)?;
    let sigma = sigma_from_pair(&p)?;
    if full {
        println!("style: {:?}", p.style);
        println!("h0: {}", join(&p.h0));
        println!("h1: {}", join(&p.h1));
    }
    println!("sigma: {sigma}");
    println!("cycles: {}", sigma.to_cycle_string());
    if full {
        let rep = pair_report(&p, Some(&c))?;
        print_report(&rep);
        return Ok(rep.pass());
    }
    Ok(true)
}

fn roundtrip(file: &Path) -> Result<bool> {
    let (c, d) = load_complex(file)?;
    let p = compute_pair(&c, d.as_ref(), DiskStyle::Zs)?;
    let m = p.meander()?;
    let mut rep = Report::default();
    rep.push("permutation is Sturm", m.is_sturm(), m.sigma().to_string());
    if !m.is_sturm() {
        print_report(&rep);
        return Ok(false);
    }
    let z = ZeroMatrix::new(&m)?;
    let cover = c.cover_relation();
    let graph = z.connection_graph();
    rep.push(
        "connection graph equals cell incidence",
        graph == cover,
        format!("{} vs {} edges", graph.len(), cover.len()),
    );
    match complex_from_signed_template(&z.hemisphere_template()?) {
        Ok((back, bd)) => {
            rep.push("reconstructed complex matches", back.same_as(&c), "");
            rep.push("reconstructed decoration matches", bd == d, "");
        }
        Err(e) => rep.push("reconstruction", false, e.to_string()),
    }
    print_report(&rep);
    Ok(rep.pass())
}

fn do_scoop(file: &Path, side: ScoopSide) -> Result<bool> {
    let m = Meander::build(&load_permutation(file)?);
    let side = match side {
        ScoopSide::East => Side::East,
        ScoopSide::West => Side::West,
    };
    let s = scoop(&m, side)?;
    println!("removed: {}", m.len() - s.len());
    println!("labels: {}", join(s.labels()));
    println!("sigma: {}", s.sigma());
    println!("Sturm: {}", yes(s.is_sturm()));
    Ok(s.is_sturm())
}

fn enumerate(poles: Poles, exhaustive: bool, all_sturm: bool) -> Result<bool> {
    let choices: &[PoleChoice] = match poles {
        Poles::Adjacent => &[PoleChoice::Adjacent],
        Poles::Antipodal => &[PoleChoice::Antipodal],
        Poles::Both => &[PoleChoice::Adjacent, PoleChoice::Antipodal],
    };
    let oct = solid_octahedron();
    let g = BarycenterGraph::new(&oct)?;
    for &choice in choices {
        let (n, s) = choice.poles();
        println!("{choice:?} poles {n},{s}");
        println!("  hamiltonian paths: {}", g.count_hamiltonian_paths(n, s)?);
        let census = enumerate_octahedron_templates(choice)?;
        println!(
            "  bipolar orientations: {}; decorated candidates: {}; valid templates: {}; orbits: {}",
            census.orientations,
            census.candidates,
            census.survivors.len(),
            census.orbits.len()
        );
        for (key, ids) in &census.orbits {
            let first = &census.survivors[ids[0]];
            let (a, b) = first.split();
            let lens: std::collections::BTreeSet<(usize, usize)> = ids
                .iter()
                .map(|&k| census.survivors[k].meridian_lengths())
                .collect();
            println!(
                "  orbit {}: {} templates, faces {a}+{b}, meridian edges (EW, WE) {lens:?}",
                key.to_cycle_string(),
                ids.len()
            );
        }
        if exhaustive {
            let mode = if all_sturm {
                ScanMode::AllSturm
            } else {
                ScanMode::Realizations
            };
            let stats = scan_sturm_pairs(&g, n, s, mode)?;
            println!("  scanned h0 paths: {}", stats.paths);
            if all_sturm {
                println!("  Sturm pairs: {}", stats.sturm);
            }
            println!(
                "  pairs with morse numbers equal to dimensions: {}",
                stats.realizations
            );
            println!(
                "  pairs realizing the octahedron: {}",
                stats.consistent.len()
            );
        }
    }
    Ok(true)
}

fn render_file(file: &Path, out: Option<&Path>, spec: RenderSpec) -> Result<bool> {
    if spec.width == 0 || spec.height == 0 {
        bail!("render dimensions must be positive");
    }
    let text = read(file)?;
    let svg = if is_json(file, &text) {
        let (c, d) = load_complex(file)?;
        render::complex_svg(&c, d.as_ref(), &spec)
    } else {
        render::meander_svg(&Meander::build(&Permutation::parse(&text, None)?), &spec)
    };
    match out {
        Some(p) => std::fs::write(p, svg).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{svg}"),
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.cmd {
        Cmd::ValidateMeander { file } => validate_meander(&file),
        Cmd::ValidateComplex { file } => validate_complex(&file),
        Cmd::Pair { file, style } => pair(&file, style, true),
        Cmd::Sigma { file, style } => pair(&file, style, false),
        Cmd::Roundtrip { file } => roundtrip(&file),
        Cmd::Scoop { file, side } => do_scoop(&file, side),
        Cmd::EnumerateOctahedron {
            poles,
            exhaustive,
            all_sturm,
        } => enumerate(poles, exhaustive, all_sturm),
        Cmd::Render {
            file,
            out,
            width,
            height,
            no_labels,
        } => render_file(
            &file,
            out.as_deref(),
            RenderSpec {
                width,
                height,
                labels: !no_labels,
            },
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
