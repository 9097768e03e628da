//! Command-line interface over the library: nilpotent arithmetic, dual
//! graph reports, twist displacement checks, the two theorem sweeps, and a
//! cross-module self-test.
//!
//! Exit codes: 0 on success, 1 when a requested check fails, 2 on usage or
//! input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use levelmono::graph::{
    classify_edges, enumerate_stable_graphs, filtration, is_smooth_point, stabilizer_lattice,
    theorem_glad_check, validate, GraphJson, StableGraph,
};
use levelmono::hall::{lattice_normal_from_hall3, power_subgroup_lattice};
use levelmono::nilpotent::{
    check_identities, congruence_lattice, eval_word, oracle_agreement, NilpotentElement,
};
use levelmono::surface::{
    check_displacement, mono_grid, twist_power, verify_congruence_identities, TwistKind,
    TwistSpec,
};
use levelmono::{parse_word, Error, GroupWord};

#[derive(Parser)]
#[command(
    name = "levelmono",
    version,
    about = "Boundary monodromy of stable curves with nilpotent level structure"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the free class-3 nilpotent group on x, y, z.
    Nilpotent {
        #[command(subcommand)]
        cmd: NilpotentCmd,
    },
    /// Dual graph classification, lattices, and enumeration.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Dehn twist actions on the surface group.
    Twist {
        #[command(subcommand)]
        cmd: TwistCmd,
    },
    /// Full parameter sweeps of the two main theorems.
    Theorem {
        #[command(subcommand)]
        cmd: TheoremCmd,
    },
    /// Cross-module consistency checks.
    Selftest {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum NilpotentCmd {
    /// Multiply two elements (words or 14-coordinate JSON arrays).
    Mul { a: String, b: String },
    /// Raise an element to a power.
    Pow {
        a: String,
        #[arg(long)]
        m: i64,
    },
    /// Invert an element.
    Invert { a: String },
    /// Evaluate a word to normal-form coordinates.
    Eval { word: String },
    /// Test membership in the level subgroup of the given depth.
    Member {
        /// Element as a word or a 14-coordinate JSON array.
        #[arg(long)]
        elt: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Classify edges into bridges, genus-one bridges, cut systems, rest.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// The filtration lattices F0, F1, F2, F21 as HNF generator matrices.
    Filtration {
        #[arg(long)]
        input: PathBuf,
    },
    /// The boundary stabilizer lattice at depth k, level n.
    Stabilizer {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
    },
    /// Smoothness of the boundary point at depth k, level n.
    Smooth {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
    },
    /// All stable dual graphs of total genus g up to isomorphism.
    Enumerate {
        #[arg(long)]
        g: u32,
    },
}

/// A twist configuration, either inline or from a JSON file
/// {"kind": "bridge"|"nonsep"|"cutpair", "g": int, "g1": int, "m": int}.
#[derive(Args)]
struct TwistArgs {
    #[arg(long, conflicts_with_all = ["kind", "g"])]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[arg(long)]
    g: Option<u32>,
    #[arg(long, default_value_t = 0)]
    g1: u32,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Bridge,
    Nonsep,
    Cutpair,
}

impl TwistArgs {
    fn spec(&self) -> Result<TwistSpec, Error> {
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
            return serde_json::from_str(&text)
                .map_err(|e| Error::BadInput(format!("twist spec: {e}")));
        }
        let kind = match self.kind {
            Some(KindArg::Bridge) => TwistKind::Bridge,
            Some(KindArg::Nonsep) => TwistKind::Nonsep,
            Some(KindArg::Cutpair) => TwistKind::Cutpair,
            None => return Err(Error::BadInput("need --kind and --g, or --input".into())),
        };
        let g = self
            .g
            .ok_or_else(|| Error::BadInput("need --g with --kind".into()))?;
        Ok(TwistSpec { kind, g, g1: self.g1, m: self.m })
    }
}

#[derive(Subcommand)]
enum TwistCmd {
    /// Apply the m-th twist power to a word in the surface generators.
    Apply {
        word: String,
        #[command(flatten)]
        twist: TwistArgs,
    },
    /// Decide whether the displacement lies in the depth-(k+1) level
    /// subgroup, i.e. whether the twist power acts trivially.
    Check {
        #[command(flatten)]
        twist: TwistArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum TheoremCmd {
    /// Sweep the divisibility thresholds over all twist configurations.
    MonoGrid {
        /// Genera to sweep; default 2, 3, 4.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        g: Option<Vec<u32>>,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        k: Option<Vec<usize>>,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        n: Option<Vec<u64>>,
    },
    /// Check global boundary smoothness against the predicted verdict.
    Glad {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).unwrap()),
        Format::Text => println!("{text}"),
    }
}

/// An element argument: a 14-coordinate JSON array, or a word over x, y, z.
fn parse_element(s: &str) -> Result<NilpotentElement, Error> {
    if let Ok(coords) = serde_json::from_str::<Vec<i64>>(s) {
        let arr: [i64; 14] = coords
            .try_into()
            .map_err(|v: Vec<i64>| Error::BadInput(format!("need 14 coordinates, got {}", v.len())))?;
        return Ok(NilpotentElement::from_i64(arr));
    }
    eval_word(&parse_word(s)?)
}

fn element_text(e: &NilpotentElement) -> String {
    format!(
        "coords: {}\nword:   {}",
        serde_json::to_string(e).unwrap(),
        e.normal_form_word()
    )
}

fn read_graph(path: &PathBuf) -> Result<StableGraph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    let raw: GraphJson =
        serde_json::from_str(&text).map_err(|e| Error::BadInput(format!("graph json: {e}")))?;
    validate(&raw)
}

fn lattice_rows(l: &levelmono::lattice::IntegerLattice) -> Vec<Vec<String>> {
    l.rows()
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn rows_text(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "  (zero lattice)".into();
    }
    rows.iter()
        .map(|r| format!("  [{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Nilpotent { cmd } => run_nilpotent(format, cmd),
        Command::Graph { cmd } => run_graph(format, cmd),
        Command::Twist { cmd } => run_twist(format, cmd),
        Command::Theorem { cmd } => run_theorem(format, cmd),
        Command::Selftest { trials, seed } => run_selftest(*trials, *seed),
    }
}

fn run_nilpotent(format: Format, cmd: &NilpotentCmd) -> Result<ExitCode, Error> {
    let out = |e: NilpotentElement| {
        let text = element_text(&e);
        emit(format, &e, text);
        Ok(ExitCode::SUCCESS)
    };
    match cmd {
        NilpotentCmd::Mul { a, b } => out(parse_element(a)?.mul(&parse_element(b)?)),
        NilpotentCmd::Pow { a, m } => out(parse_element(a)?.pow(*m)),
        NilpotentCmd::Invert { a } => out(parse_element(a)?.inverse()),
        NilpotentCmd::Eval { word } => out(eval_word(&parse_word(word)?)?),
        NilpotentCmd::Member { elt, n, depth } => {
            let member = parse_element(elt)?.is_member(*n, *depth)?;
            #[derive(Serialize)]
            struct Out {
                member: bool,
                n: u64,
                depth: usize,
            }
            emit(
                format,
                &Out { member, n: *n, depth: *depth },
                format!("member: {member}"),
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_graph(format: Format, cmd: &GraphCmd) -> Result<ExitCode, Error> {
    match cmd {
        GraphCmd::Classify { input } => {
            let g = read_graph(input)?;
            let c = classify_edges(&g)?.with_ids(&g);
            let text = format!(
                "bridges:          [{}]\ngenus-one bridges: [{}]\ncut systems:      {:?}\nplain:            [{}]",
                c.bridges.join(", "),
                c.genus_one_bridges.join(", "),
                c.cut_systems,
                c.plain.join(", ")
            );
            emit(format, &c, text);
            Ok(ExitCode::SUCCESS)
        }
        GraphCmd::Filtration { input } => {
            let g = read_graph(input)?;
            let f = filtration(&g, &classify_edges(&g)?);
            #[derive(Serialize)]
            struct Out {
                edges: Vec<String>,
                f0: Vec<Vec<String>>,
                f1: Vec<Vec<String>>,
                f2: Vec<Vec<String>>,
                f21: Vec<Vec<String>>,
            }
            let o = Out {
                edges: g.edge_ids().to_vec(),
                f0: lattice_rows(&f.f0),
                f1: lattice_rows(&f.f1),
                f2: lattice_rows(&f.f2),
                f21: lattice_rows(&f.f21),
            };
            let text = format!(
                "edges: [{}]\nF0:\n{}\nF1:\n{}\nF2:\n{}\nF21:\n{}",
                o.edges.join(", "),
                rows_text(&o.f0),
                rows_text(&o.f1),
                rows_text(&o.f2),
                rows_text(&o.f21)
            );
            emit(format, &o, text);
            Ok(ExitCode::SUCCESS)
        }
        GraphCmd::Stabilizer { input, k, n } => {
            let g = read_graph(input)?;
            let s = stabilizer_lattice(&g, *k, *n)?;
            #[derive(Serialize)]
            struct Out {
                k: usize,
                n: u64,
                edges: Vec<String>,
                hnf: Vec<Vec<String>>,
            }
            let o = Out {
                k: *k,
                n: *n,
                edges: g.edge_ids().to_vec(),
                hnf: lattice_rows(&s.lattice),
            };
            let text = format!(
                "edges: [{}]\nstabilizer HNF:\n{}",
                o.edges.join(", "),
                rows_text(&o.hnf)
            );
            emit(format, &o, text);
            Ok(ExitCode::SUCCESS)
        }
        GraphCmd::Smooth { input, k, n } => {
            let g = read_graph(input)?;
            let r = is_smooth_point(&g, *k, *n)?;
            let mut text = format!("smooth: {}", r.smooth);
            if let Some(m) = &r.multipliers {
                let ms: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("\nmultipliers: [{}]", ms.join(", ")));
            }
            if let Some(o) = &r.obstruction {
                let os: Vec<String> = o.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("\nobstruction: [{}]", os.join(", ")));
            }
            emit(format, &r, text);
            Ok(ExitCode::SUCCESS)
        }
        GraphCmd::Enumerate { g } => {
            let graphs = enumerate_stable_graphs(*g)?;
            let list: Vec<GraphJson> = graphs.iter().map(|x| x.to_json()).collect();
            #[derive(Serialize)]
            struct Out {
                genus: u32,
                count: usize,
                graphs: Vec<GraphJson>,
            }
            let o = Out { genus: *g, count: list.len(), graphs: list };
            let mut text = format!("genus {}: {} stable graphs", o.genus, o.count);
            for (i, gr) in graphs.iter().enumerate() {
                let genera: Vec<String> =
                    gr.vertex_genera().iter().map(|x| x.to_string()).collect();
                let ends: Vec<String> = gr
                    .edge_ends()
                    .iter()
                    .map(|e| format!("({},{})", e[0], e[1]))
                    .collect();
                text.push_str(&format!(
                    "\n  #{i}: genera [{}], edges [{}]",
                    genera.join(", "),
                    ends.join(", ")
                ));
            }
            emit(format, &o, text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_twist(format: Format, cmd: &TwistCmd) -> Result<ExitCode, Error> {
    match cmd {
        TwistCmd::Apply { word, twist } => {
            let spec = twist.spec()?;
            let w = parse_word(word)?;
            let endo = twist_power(&spec)?;
            let image = endo.apply(&w)?.normalized();
            #[derive(Serialize)]
            struct Out {
                spec: TwistSpec,
                word: String,
                image: String,
            }
            let o = Out { spec, word: w.to_string(), image: image.to_string() };
            let text = format!("image: {}", o.image);
            emit(format, &o, text);
            Ok(ExitCode::SUCCESS)
        }
        TwistCmd::Check { twist, k, n } => {
            let spec = twist.spec()?;
            let verdict = check_displacement(&spec, *k, *n)?;
            #[derive(Serialize)]
            struct Out {
                spec: TwistSpec,
                k: usize,
                n: u64,
                #[serde(flatten)]
                verdict: levelmono::surface::MembershipVerdict,
            }
            let text = format!("verdict: {verdict:?}");
            emit(format, &Out { spec, k: *k, n: *n, verdict }, text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_theorem(format: Format, cmd: &TheoremCmd) -> Result<ExitCode, Error> {
    match cmd {
        TheoremCmd::MonoGrid { g, k, n } => {
            let gs = g.clone().unwrap_or_else(|| vec![2, 3, 4]);
            let ks = k.clone().unwrap_or_else(|| vec![1, 2, 3]);
            let ns = n.clone().unwrap_or_else(|| vec![3, 4, 5, 6, 8, 9, 12]);
            let report = mono_grid(&gs, &ks, &ns)?;
            let mut text = format!(
                "checks: {}\nunknowns: {}\nmismatches: {}",
                report.checks, report.unknowns, report.mismatches
            );
            for row in report.rows.iter().filter(|r| !r.ok) {
                text.push_str(&format!(
                    "\nFAIL {:?} k={} n={} expected member={} got {:?}",
                    row.spec, row.k, row.n, row.expected_member, row.verdict
                ));
            }
            emit(format, &report, text);
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        TheoremCmd::Glad { g, k, n } => {
            let report = theorem_glad_check(*g, *k, *n)?;
            let text = format!(
                "smooth: {}\npredicted: {}\nagrees: {}\ngraphs: {}",
                report.all_smooth, report.predicted_smooth, report.agrees, report.graphs
            );
            emit(format, &report, text);
            Ok(if report.agrees { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn random_word(rng: &mut impl rand::Rng, len: usize) -> GroupWord {
    let names = ["x", "y", "z"];
    let mut w = GroupWord::empty();
    for _ in 0..len {
        let g = names[rng.gen_range(0..3)];
        let e = loop {
            let e = rng.gen_range(-3i64..=3);
            if e != 0 {
                break e;
            }
        };
        w = w.concat(GroupWord::gen(g, e));
    }
    w
}

fn run_selftest(trials: usize, seed: u64) -> Result<ExitCode, Error> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failed = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{} - {name}", if ok { "ok  " } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    };

    let mut agree = true;
    for _ in 0..trials {
        let len = rng.gen_range(1..=10);
        let w = random_word(&mut rng, len);
        if !oracle_agreement(&w)? {
            agree = false;
            break;
        }
    }
    check("coordinate product agrees with the series oracle", agree);

    let mut pow_ok = true;
    for _ in 0..trials.min(50) {
        let len = rng.gen_range(1..=6);
        let e = eval_word(&random_word(&mut rng, len))?;
        let mut acc = NilpotentElement::identity();
        for m in 0..=8i64 {
            if e.pow(m) != acc {
                pow_ok = false;
            }
            acc = acc.mul(&e);
        }
        if e.pow(-3) != e.inverse().pow(3) {
            pow_ok = false;
        }
    }
    check("power formula agrees with iterated products", pow_ok);

    let r = check_identities(trials, seed);
    check("commutator identity suite", r.ok());

    let r = verify_congruence_identities(trials, seed ^ 1);
    check("cut-pair power congruences", r.ok());

    let mut lattice_ok = true;
    for n in [3u64, 4] {
        let saturated = lattice_normal_from_hall3(&power_subgroup_lattice(3, n, 4)?);
        let predicted = congruence_lattice(n, 4)?;
        if saturated != predicted {
            lattice_ok = false;
        }
    }
    check("power subgroup congruence lattice (saturation oracle)", lattice_ok);

    let grid = mono_grid(&[2, 3], &[1, 2, 3], &[3, 4, 5, 6])?;
    check("twist displacement thresholds (small grid)", grid.ok());

    let mut glad_ok = true;
    for g in [2u32, 3] {
        for (k, n) in [(1usize, 4u64), (2, 4), (2, 5), (3, 6), (3, 8)] {
            if !theorem_glad_check(g, k, n)?.agrees {
                glad_ok = false;
            }
        }
    }
    check("boundary smoothness verdicts (g = 2, 3)", glad_ok);

    if failed == 0 {
        println!("selftest passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("selftest failed: {failed} check(s)");
        Ok(ExitCode::from(1))
    }
}
