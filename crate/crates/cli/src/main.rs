//! `icomusic` — golden-figure analysis of harmonies on the exceptional
//! musical icosahedra.
//!
//! Exit status: 0 on success, 1 when the answer is "golden singular",
//! 2 for usage, parse and I/O errors.

mod svg;

use std::io::Write as _;

// Output goes through these so a closed pipe (`| head`) ends quietly
// instead of panicking.
macro_rules! say {
    ($($arg:tt)*) => {{ let _ = writeln!(std::io::stdout(), $($arg)*); }};
}
macro_rules! say_raw {
    ($($arg:tt)*) => {{ let _ = write!(std::io::stdout(), $($arg)*); }};
}

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use icomusic_core::analysis::{
    golden_decompositions, mystic_chord_analysis, scan_k_subsets, seventh_chord_table, seventh_table_json,
    seventh_table_text, Decomposition, Harmony,
};
use icomusic_core::neo_riemannian::{mode_table, triad_reachability, verify_l_via_rotation};
use icomusic_core::{analyze_piece, bwv846, Atlas, Error, ExceptionalType, FigureKind, PcSet, Piece, Triad};

#[derive(Parser)]
#[command(name = "icomusic", version, about = "Golden figures of harmonies on the exceptional musical icosahedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search all assignments and print the four exceptional types.
    Derive {
        /// Write the golden structures as JSON to this file.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Name the golden figure (if any) formed by three or four tones.
    Classify(ToneArgs),
    /// List the minimum golden decompositions of a harmony.
    Decompose(ToneArgs),
    /// Decompositions of the seven C-rooted seventh chords on every type.
    Sevenths {
        #[arg(long)]
        json: bool,
    },
    /// List every golden-singular k-tone harmony of a type.
    Scan {
        #[arg(short, long = "type")]
        ty: ExceptionalType,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// How P and R are realized by golden neighborhoods on a type.
    Neoriemann {
        #[arg(short, long = "type")]
        ty: ExceptionalType,
        #[arg(long)]
        json: bool,
    },
    /// Golden analysis of a piece, one harmony per measure.
    Analyze {
        /// Piece file (text or JSON).
        #[arg(required_unless_present = "bwv846", conflicts_with = "bwv846")]
        path: Option<PathBuf>,
        /// Use the built-in C major prelude.
        #[arg(long)]
        bwv846: bool,
        #[arg(short, long = "type")]
        ty: ExceptionalType,
        #[arg(long)]
        json: bool,
    },
    /// Draw the first decomposition of a harmony on the icosahedron net.
    Render {
        #[arg(short, long = "type")]
        ty: ExceptionalType,
        #[arg(required = true, num_args = 1..)]
        tones: Vec<String>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct ToneArgs {
    #[arg(short, long = "type")]
    ty: ExceptionalType,
    /// Tone names such as C, F#, Bb.
    #[arg(required = true, num_args = 1..)]
    tones: Vec<String>,
    #[arg(long)]
    json: bool,
}

/// Why a command did not succeed.
enum Failure {
    /// A well-formed question whose answer is negative.
    Singular(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularMeasure { .. } => Failure::Singular(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Singular(msg)) => {
            if !msg.is_empty() {
                say!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("icomusic: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    let atlas = Atlas::derive()?;
    match command {
        Command::Derive { out, json } => derive(&atlas, out, json),
        Command::Classify(args) => classify(&atlas, args),
        Command::Decompose(args) => decompose(&atlas, args),
        Command::Sevenths { json } => {
            let rows = seventh_chord_table(&atlas);
            if json {
                print_json(&json!({
                    "sevenths": seventh_table_json(&rows),
                    "mystic": mystic_chord_analysis(&atlas).iter().map(|(ty, ds)| json!({
                        "type": ty.to_string(),
                        "decompositions": ds.iter().map(Decomposition::to_json).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                }));
            } else {
                say_raw!("{}", seventh_table_text(&rows));
                for (ty, ds) in mystic_chord_analysis(&atlas) {
                    say!("mystic chord on {ty}: {}", join(&ds));
                }
            }
            Ok(())
        }
        Command::Scan { ty, k, json } => {
            let found = scan_k_subsets(atlas.structure(ty), k)?;
            if json {
                print_json(&json!({
                    "type": ty.to_string(),
                    "k": k,
                    "singular": found.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                }));
            } else {
                say!("{} golden-singular {k}-tone harmonies on type {ty}", found.len());
                for s in &found {
                    say!("{s}");
                }
            }
            Ok(())
        }
        Command::Neoriemann { ty, json } => neoriemann(&atlas, ty, json),
        Command::Analyze { path, bwv846: builtin, ty, json } => {
            let piece = match path {
                Some(p) if !builtin => {
                    let text = fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    Piece::load(&text)?
                }
                _ => bwv846(),
            };
            let analysis = analyze_piece(&atlas, &piece, ty)?;
            if json {
                print_json(&analysis.to_json());
            } else {
                say_raw!("{}", analysis.to_text());
            }
            Ok(())
        }
        Command::Render { ty, tones, out } => {
            let h = harmony(&tones)?;
            let ds = golden_decompositions(atlas.structure(ty), &h);
            let Some(first) = ds.first() else {
                return Err(Failure::Singular(format!("{h} is golden singular on type {ty}")));
            };
            let title = format!("{h} on type {ty}: {first}");
            let doc = svg::render(atlas.topology(), &atlas.get(ty).assignment, first, &title);
            fs::write(&out, doc).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            Ok(())
        }
    }
}

fn derive(atlas: &Atlas, out: Option<PathBuf>, json: bool) -> Outcome {
    let report = atlas.to_json();
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&report).expect("json values serialize");
        fs::write(&path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if json {
        print_json(&report);
        return Ok(());
    }
    let search = atlas.search();
    say!(
        "{} candidates, {} with hexagon symmetry, {} golden self-dual, {} classes",
        search.candidates,
        search.hexagon_symmetric,
        search.self_dual,
        search.classes.len()
    );
    for ty in ExceptionalType::ALL {
        let s = atlas.structure(ty);
        say!("type {ty} (dual {}):", ty.dual());
        let order: Vec<String> = icomusic_core::VertexId::all()
            .map(|v| atlas.get(ty).assignment.pitch_class(v).name().to_string())
            .collect();
        say!("  vertices 0..11: {}", order.join(" "));
        for kind in [FigureKind::Triangle, FigureKind::Gnomon, FigureKind::Rectangle] {
            let sets: Vec<String> = s.of_kind(kind).iter().map(ToString::to_string).collect();
            say!("  {} ({}): {}", kind.abbreviation(), sets.len(), sets.join("  "));
        }
    }
    Ok(())
}

fn classify(atlas: &Atlas, args: ToneArgs) -> Outcome {
    let set = tones(&args.tones)?;
    let kind = atlas.structure(args.ty).chord_figure_kind(set)?;
    let name = kind.map_or("none", FigureKind::abbreviation);
    if args.json {
        print_json(&json!({ "type": args.ty.to_string(), "pcs": set.to_string(), "figure": kind.map(FigureKind::abbreviation) }));
    } else {
        say!("{set} on type {}: {name}", args.ty);
    }
    Ok(())
}

fn decompose(atlas: &Atlas, args: ToneArgs) -> Outcome {
    let h = harmony(&args.tones)?;
    let ds = golden_decompositions(atlas.structure(args.ty), &h);
    if args.json {
        print_json(&json!({
            "type": args.ty.to_string(),
            "pcs": h.to_string(),
            "singular": ds.is_empty(),
            "decompositions": ds.iter().map(Decomposition::to_json).collect::<Vec<_>>(),
        }));
    } else if !ds.is_empty() {
        for d in &ds {
            say!("{} {d}", d.shape());
        }
    }
    if ds.is_empty() {
        if !args.json {
            say!("golden singular");
        }
        return Err(Failure::Singular(String::new()));
    }
    Ok(())
}

fn neoriemann(atlas: &Atlas, ty: ExceptionalType, json: bool) -> Outcome {
    let table = mode_table(atlas, ty)?;
    let reach = triad_reachability(atlas, ty)?;
    let rotations = Triad::all().filter(|&t| verify_l_via_rotation(atlas, ty, t)).count();
    if json {
        print_json(&json!({
            "modes": table.to_json(),
            "reachability": reach,
            "l_by_rotation": rotations,
        }));
    } else {
        say_raw!("{}", table.to_text());
        say!(
            "P/R graph: {} triads, {} edges, {} component(s)",
            reach.nodes, reach.edges, reach.components
        );
        say!("L realized by a three-fold rotation for {rotations}/24 triads");
    }
    Ok(())
}

fn tones(words: &[String]) -> Result<PcSet, Failure> {
    Ok(PcSet::parse_tones(&words.join(" "))?)
}

fn harmony(words: &[String]) -> Result<Harmony, Failure> {
    Ok(Harmony::new(tones(words)?)?)
}

fn join(ds: &[Decomposition]) -> String {
    ds.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
}

fn print_json(value: &Value) {
    say!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}
