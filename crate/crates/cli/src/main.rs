mod verify;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mig_core::construct::{
    build_paper_pair, lbcs_from_matroid, m_s_matroid, paper_q_signs, SignAssignment,
};
use mig_core::game::{
    lbcs_solutions_with_guard, Constraint, DeterministicStrategy, IsoGameInstance, Lbcs, LBCS_GUARD,
};
use mig_core::graph::{
    automorphism_group, find_isomorphism, matroid_iso_from_graph_iso, RelColoredGraph,
};
use mig_core::io::{elems, matroid_to_json, parse_matroid, SignsJson};
use mig_core::matroid::{brute_force_isomorphic_with_guard, Girth, Matroid};
use mig_core::quantum::{
    iso_game_pvms, magic_square_observables, verify_lbcs_quantum_strategy, verify_sync_conditions,
    DEFAULT_TOLERANCE,
};
use mig_core::screen::{
    export_groundset_relations, export_pointed_relations, noncommutativity_certificate,
    screen_quantum_iso, screen_quantum_iso_forced, substitution_table, write_substitutions,
    Verdict,
};
use mig_core::structures::{covers, IsoStructure};
use mig_core::Subset;

/// Matroid isomorphism games: classical and quantum.
#[derive(Parser)]
#[command(name = "mig", version)]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerance for quantum checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Size guard for exhaustive searches.
    #[arg(long = "guard-n", global = true)]
    guard_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Bases,
    Nonbases,
    Independent,
    Circuits,
    Flats,
    Hyperplanes,
}

impl From<StructureArg> for IsoStructure {
    fn from(s: StructureArg) -> Self {
        match s {
            StructureArg::Bases => IsoStructure::Bases,
            StructureArg::Nonbases => IsoStructure::NonBases,
            StructureArg::Independent => IsoStructure::Independent,
            StructureArg::Circuits => IsoStructure::Circuits,
            StructureArg::Flats => IsoStructure::Flats,
            StructureArg::Hyperplanes => IsoStructure::Hyperplanes,
        }
    }
}

#[derive(Args)]
struct StructureOpt {
    #[arg(long, value_enum)]
    structure: StructureArg,
}

#[derive(Args)]
struct SignOpts {
    /// Sign file: {"signs": [{"hyperplane": [..], "sign": -1}, ..]}.
    #[arg(long, conflicts_with = "negative")]
    signs: Option<PathBuf>,
    /// Cyclic hyperplanes with sign -1, as comma-separated elements; all
    /// others get +1.
    #[arg(long, value_delimiter = ';')]
    negative: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Whether a structure covers the ground set.
    Cover {
        file: PathBuf,
        #[command(flatten)]
        s: StructureOpt,
    },
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Search for an isomorphism through the relation graphs.
    Iso {
        #[command(flatten)]
        s: StructureOpt,
        a: PathBuf,
        b: PathBuf,
        /// Also run the exhaustive bijection search and compare.
        #[arg(long)]
        oracle: bool,
    },
    #[command(subcommand)]
    Game(GameCmd),
    #[command(subcommand)]
    Lbcs(LbcsCmd),
    /// Build `M_S` from a rank-3 sparse paving matroid and signs.
    MsConstruct {
        file: PathBuf,
        #[command(flatten)]
        signs: SignOpts,
    },
    /// The pair `P`, `Q` built from the magic-square matroid.
    PaperPair {
        /// Run every certificate and report each.
        #[arg(long)]
        verify_all: bool,
    },
    #[command(subcommand)]
    Quantum(QuantumCmd),
    /// Counting obstructions to quantum isomorphism.
    Screen {
        #[command(flatten)]
        s: StructureOpt,
        a: PathBuf,
        b: PathBuf,
        /// Run the checks even when the structure does not cover.
        #[arg(long)]
        force: bool,
    },
    /// Write the relations of an isomorphism algebra as text.
    ExportRelations {
        #[command(flatten)]
        s: StructureOpt,
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "pointed")]
        grid: GridArg,
        /// Also write the ground-set to pointed substitution table here.
        #[arg(long)]
        substitutions: Option<PathBuf>,
    },
    /// Two disjoint automorphisms of the relation graph.
    NoncommCert {
        file: PathBuf,
        #[command(flatten)]
        s: StructureOpt,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GridArg {
    Pointed,
    Groundset,
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// Size, rank, counts and predicates.
    Info {
        file: PathBuf,
    },
    /// Every derived subset family.
    Derive {
        file: PathBuf,
    },
    Dual {
        file: PathBuf,
    },
    /// `M \ D / C`.
    Minor {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    Tutte {
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    Build {
        file: PathBuf,
        #[command(flatten)]
        s: StructureOpt,
    },
    Aut {
        file: PathBuf,
        #[command(flatten)]
        s: StructureOpt,
    },
}

#[derive(Subcommand)]
enum GameCmd {
    /// Alphabet sizes and the bisynchronous check.
    Check {
        #[command(flatten)]
        s: StructureOpt,
        a: PathBuf,
        b: PathBuf,
    },
    /// Score a deterministic strategy: {"map": [..]} over the alphabet.
    EvalStrategy {
        #[command(flatten)]
        s: StructureOpt,
        a: PathBuf,
        b: PathBuf,
        #[arg(long, conflicts_with = "from_iso")]
        strategy: Option<PathBuf>,
        /// Build the strategy from a ground-set bijection, comma-separated.
        #[arg(long, value_delimiter = ',')]
        from_iso: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum LbcsCmd {
    /// Assemble a system from constraints such as `0,1,2=-1`.
    Build {
        #[arg(long)]
        vars: usize,
        #[arg(long = "constraint")]
        constraints: Vec<String>,
    },
    /// Every satisfying assignment.
    Solve { file: PathBuf },
    /// One constraint per cyclic hyperplane.
    FromMatroid {
        file: PathBuf,
        #[command(flatten)]
        signs: SignOpts,
    },
}

#[derive(Subcommand)]
enum QuantumCmd {
    /// The Pauli grid against the signed magic-square system.
    MagicSquare,
    /// The projection family for the `P`, `Q` nonbasis game.
    VerifyIso,
}

/// A finished command: JSON output, a one-line summary, and whether the
/// answer was affirmative.
struct Outcome {
    json: Value,
    summary: String,
    affirmative: bool,
}

impl Outcome {
    fn yes(json: Value, summary: impl Into<String>) -> Outcome {
        Outcome {
            json,
            summary: summary.into(),
            affirmative: true,
        }
    }

    fn verdict(ok: bool, json: Value, summary: impl Into<String>) -> Outcome {
        Outcome {
            json,
            summary: summary.into(),
            affirmative: ok,
        }
    }
}

fn read_matroid(path: &Path) -> Result<Matroid> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matroid(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_elems(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .with_context(|| format!("bad element {x:?}"))
        })
        .collect()
}

fn sets_json(v: &[Subset]) -> Value {
    json!(v.iter().map(|&s| elems(s)).collect::<Vec<_>>())
}

fn girth_json(g: Girth) -> Value {
    match g {
        Girth::Finite(k) => json!(k),
        Girth::Infinite => json!("infinite"),
    }
}

fn sign_assignment(m: &Matroid, opts: &SignOpts) -> Result<SignAssignment> {
    if let Some(path) = &opts.signs {
        let j: SignsJson = read_json(path)?;
        return Ok(j.to_assignment());
    }
    let negative = opts
        .negative
        .iter()
        .map(|s| Ok(Subset::from_elems(parse_elems(s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SignAssignment::with_negative(m, &negative)?)
}

fn run_matroid(cmd: &MatroidCmd) -> Result<Outcome> {
    Ok(match cmd {
        MatroidCmd::Info { file } => {
            let m = read_matroid(file)?;
            let p = m.predicates()?;
            let conn = match p.connectivity {
                mig_core::matroid::Connectivity::Finite(k) => json!(k),
                mig_core::matroid::Connectivity::Infinite => json!("infinite"),
            };
            let json = json!({
                "n": m.n(),
                "rank": m.rank(),
                "bases": m.bases().len(),
                "nonbases": m.nonbases().len(),
                "circuits": m.circuits()?.len(),
                "flats": m.flats()?.len(),
                "hyperplanes": m.hyperplanes()?.len(),
                "cyclicHyperplanes": m.cyclic_hyperplanes()?.len(),
                "loops": elems(m.loops()),
                "coloops": elems(m.coloops()),
                "simple": p.is_simple,
                "paving": p.is_paving,
                "sparsePaving": p.is_sparse_paving,
                "girth": girth_json(p.girth),
                "connectivity": conn,
            });
            Outcome::yes(json, format!("rank {} on {} elements", m.rank(), m.n()))
        }
        MatroidCmd::Derive { file } => {
            let m = read_matroid(file)?;
            let r = m.derive_sets()?;
            let json = json!({
                "independent": sets_json(&r.independents),
                "circuits": sets_json(&r.circuits),
                "flats": sets_json(&r.flats),
                "hyperplanes": sets_json(&r.hyperplanes),
                "cyclicFlats": sets_json(&r.cyclic_flats),
                "loops": elems(r.loops),
                "coloops": elems(r.coloops),
                "girth": girth_json(r.girth),
            });
            Outcome::yes(
                json,
                format!("{} circuits, {} flats", r.circuits.len(), r.flats.len()),
            )
        }
        MatroidCmd::Dual { file } => {
            let d = read_matroid(file)?.dual();
            Outcome::yes(matroid_to_json(&d), format!("dual has rank {}", d.rank()))
        }
        MatroidCmd::Minor {
            file,
            delete,
            contract,
        } => {
            let m = read_matroid(file)?;
            let (d, c) = (
                Subset::from_elems(delete.iter().copied()),
                Subset::from_elems(contract.iter().copied()),
            );
            if !d.intersection(c).is_empty() {
                bail!("deleted and contracted sets overlap");
            }
            // contract first, then delete the remaining indices
            let mc = m.contract(c)?;
            let kept: Vec<usize> = (0..m.n()).filter(|&e| !c.contains(e)).collect();
            let d2 = Subset::from_elems(
                kept.iter()
                    .enumerate()
                    .filter(|(_, &e)| d.contains(e))
                    .map(|(i, _)| i),
            );
            let minor = mc.delete(d2)?;
            Outcome::yes(
                matroid_to_json(&minor),
                format!("minor of rank {} on {} elements", minor.rank(), minor.n()),
            )
        }
        MatroidCmd::Tutte { file } => {
            let m = read_matroid(file)?;
            let t = m.tutte_polynomial()?;
            let chi = m.characteristic_polynomial()?;
            let json = json!({
                "tutte": t.to_string(),
                "terms": t.terms().map(|(i, j, c)| json!({"x": i, "y": j, "c": c})).collect::<Vec<_>>(),
                "characteristic": chi.coeffs,
            });
            Outcome::yes(json, format!("T = {t}"))
        }
    })
}

fn find_iso(m: &Matroid, n: &Matroid, s: IsoStructure) -> Result<Option<Vec<usize>>> {
    let gm = RelColoredGraph::build(m, s)?;
    let gn = RelColoredGraph::build(n, s)?;
    if m.n() != n.n() {
        return Ok(None);
    }
    match find_isomorphism(gm.colored(), gn.colored()) {
        Some(theta) => Ok(Some(matroid_iso_from_graph_iso(m, n, &gm, &gn, &theta)?)),
        None => Ok(None),
    }
}

fn refuse_uncovered(m: &Matroid, s: IsoStructure) -> Result<()> {
    let c = covers(m, s)?;
    if let Some(w) = c.witness {
        bail!("{s} does not cover the ground set: element {w} is in no member");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome> {
    let guard = cli.guard_n;
    Ok(match &cli.command {
        Command::Matroid(cmd) => run_matroid(cmd)?,
        Command::Cover { file, s } => {
            let m = read_matroid(file)?;
            let r = covers(&m, s.structure.into())?;
            let summary = match r.witness {
                None => "covers".to_string(),
                Some(w) => format!("does not cover: element {w}"),
            };
            Outcome::verdict(r.covers, serde_json::to_value(&r)?, summary)
        }
        Command::Graph(GraphCmd::Build { file, s }) => {
            let m = read_matroid(file)?;
            let g = RelColoredGraph::build(&m, s.structure.into())?;
            let vertices: Vec<Value> = g
                .vertices
                .iter()
                .map(|v| json!({"set": elems(v.set), "point": v.point}))
                .collect();
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .map(|&(i, j, c)| json!([i, j, c]))
                .collect();
            let summary = format!("{} vertices, {} edges", g.len(), edges.len());
            Outcome::yes(json!({"vertices": vertices, "edges": edges}), summary)
        }
        Command::Graph(GraphCmd::Aut { file, s }) => {
            let m = read_matroid(file)?;
            let g = RelColoredGraph::build(&m, s.structure.into())?;
            let aut = automorphism_group(g.colored());
            let summary = format!("order {}", aut.order);
            Outcome::yes(serde_json::to_value(&aut)?, summary)
        }
        Command::Iso { s, a, b, oracle } => {
            let (m, n) = (read_matroid(a)?, read_matroid(b)?);
            let s: IsoStructure = s.structure.into();
            refuse_uncovered(&m, s)?;
            refuse_uncovered(&n, s)?;
            let phi = find_iso(&m, &n, s)?;
            let mut json = json!({"structure": s, "isomorphic": phi.is_some(), "isomorphism": phi});
            if *oracle {
                let bf = brute_force_isomorphic_with_guard(&m, &n, guard.unwrap_or(9))?;
                if bf.is_some() != phi.is_some() {
                    bail!("graph search and exhaustive search disagree");
                }
                json["oracle"] = json!(bf.is_some());
            }
            let summary = if phi.is_some() {
                "isomorphic"
            } else {
                "no isomorphism"
            };
            Outcome::verdict(phi.is_some(), json, summary)
        }
        Command::Game(GameCmd::Check { s, a, b }) => {
            let g = IsoGameInstance::new(read_matroid(a)?, read_matroid(b)?, s.structure.into())?;
            let bisync = match guard {
                Some(k) => g.check_bisynchronous_with_guard(k)?,
                None => g.check_bisynchronous()?,
            };
            let json = json!({
                "alphabet": g.len(),
                "mSide": g.m_count(),
                "nSide": g.len() - g.m_count(),
                "bisynchronous": bisync,
            });
            Outcome::verdict(
                bisync,
                json,
                format!("alphabet of {}, bisynchronous {bisync}", g.len()),
            )
        }
        Command::Game(GameCmd::EvalStrategy {
            s,
            a,
            b,
            strategy,
            from_iso,
        }) => {
            let g = IsoGameInstance::new(read_matroid(a)?, read_matroid(b)?, s.structure.into())?;
            let st = match strategy {
                Some(path) => read_json::<DeterministicStrategy>(path)?,
                None if !from_iso.is_empty() => g.strategy_from_iso(from_iso)?,
                None => bail!("give --strategy or --from-iso"),
            };
            let r = g.evaluate_strategy(&st)?;
            let summary = match r.counterexample {
                None => "perfect".to_string(),
                Some((x, y)) => format!("loses on questions ({x}, {y})"),
            };
            Outcome::verdict(r.perfect, serde_json::to_value(&r)?, summary)
        }
        Command::Lbcs(LbcsCmd::Build { vars, constraints }) => {
            let cs = constraints
                .iter()
                .map(|c| {
                    let (v, sign) = c
                        .split_once('=')
                        .with_context(|| format!("constraint {c:?} needs `=sign`"))?;
                    let sign: i8 = sign
                        .trim()
                        .parse()
                        .with_context(|| format!("bad sign in {c:?}"))?;
                    Ok(Constraint {
                        vars: parse_elems(v)?,
                        sign,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let l = Lbcs::new(*vars, cs)?;
            let summary = format!(
                "{} constraints on {} variables",
                l.constraints.len(),
                l.num_vars
            );
            Outcome::yes(serde_json::to_value(&l)?, summary)
        }
        Command::Lbcs(LbcsCmd::Solve { file }) => {
            let l: Lbcs = read_json(file)?;
            l.validate()?;
            let sols = lbcs_solutions_with_guard(&l, guard.unwrap_or(LBCS_GUARD))?;
            let json = json!({"count": sols.len(), "solutions": sols});
            Outcome::verdict(!sols.is_empty(), json, format!("{} solutions", sols.len()))
        }
        Command::Lbcs(LbcsCmd::FromMatroid { file, signs }) => {
            let m = read_matroid(file)?;
            let l = lbcs_from_matroid(&m, &sign_assignment(&m, signs)?)?;
            let summary = format!(
                "{} constraints on {} variables",
                l.constraints.len(),
                l.num_vars
            );
            Outcome::yes(serde_json::to_value(&l)?, summary)
        }
        Command::MsConstruct { file, signs } => {
            let m = read_matroid(file)?;
            let ms = m_s_matroid(&m, &sign_assignment(&m, signs)?)?;
            let summary = format!("{} elements, {} nonbases", ms.n(), ms.nonbases().len());
            Outcome::yes(matroid_to_json(&ms), summary)
        }
        Command::PaperPair { verify_all } => {
            let (p, q) = build_paper_pair();
            if *verify_all {
                let report = verify::run_all(&p, &q, cli.tolerance)?;
                let ok = report.iter().all(|c| c.passed);
                for c in &report {
                    eprintln!(
                        "{} {}: {}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        c.detail
                    );
                }
                let summary = format!(
                    "{}/{} checks passed",
                    report.iter().filter(|c| c.passed).count(),
                    report.len()
                );
                Outcome::verdict(
                    ok,
                    json!({"P": matroid_to_json(&p), "Q": matroid_to_json(&q), "checks": report}),
                    summary,
                )
            } else {
                Outcome::yes(
                    json!({"P": matroid_to_json(&p), "Q": matroid_to_json(&q)}),
                    "built P and Q",
                )
            }
        }
        Command::Quantum(QuantumCmd::MagicSquare) => {
            let g = mig_core::matroid::grid_matroid();
            let hom = lbcs_from_matroid(&g, &SignAssignment::homogeneous(&g)?)?;
            let signed = lbcs_from_matroid(&g, &paper_q_signs())?;
            let obs = magic_square_observables()?.variable_observables();
            let r = verify_lbcs_quantum_strategy(&signed, &obs, cli.tolerance)?;
            let json = json!({
                "classicalSolutions": {
                    "homogeneous": lbcs_solutions_with_guard(&hom, LBCS_GUARD)?.len(),
                    "signed": lbcs_solutions_with_guard(&signed, LBCS_GUARD)?.len(),
                },
                "quantum": r,
            });
            Outcome::verdict(
                r.perfect,
                json,
                format!("perfect={} minPairProb={}", r.perfect, r.min_pair_prob),
            )
        }
        Command::Quantum(QuantumCmd::VerifyIso) => {
            let (p, q) = build_paper_pair();
            let signed = lbcs_from_matroid(&mig_core::matroid::grid_matroid(), &paper_q_signs())?;
            let obs = magic_square_observables()?.variable_observables();
            let st = iso_game_pvms(&p, &q, &signed, &obs)?;
            let r = verify_sync_conditions(&st, cli.tolerance);
            let summary = format!("perfect={}", r.perfect);
            Outcome::verdict(r.perfect, serde_json::to_value(&r)?, summary)
        }
        Command::Screen { s, a, b, force } => {
            let (m, n) = (read_matroid(a)?, read_matroid(b)?);
            let r = if *force {
                screen_quantum_iso_forced(&m, &n, s.structure.into())?
            } else {
                screen_quantum_iso(&m, &n, s.structure.into())?
            };
            let ok = r.verdict == Verdict::Possibly;
            let summary = if ok {
                "possibly quantum isomorphic"
            } else {
                "not quantum isomorphic"
            };
            Outcome::verdict(ok, serde_json::to_value(&r)?, summary)
        }
        Command::ExportRelations {
            s,
            a,
            b,
            grid,
            substitutions,
        } => {
            let (m, n) = (read_matroid(a)?, read_matroid(b)?);
            let s: IsoStructure = s.structure.into();
            let bundle = match grid {
                GridArg::Pointed => export_pointed_relations(&m, &n, s)?,
                GridArg::Groundset => export_groundset_relations(&m, &n, s)?,
            };
            let mut count = 0u64;
            {
                let mut out: Box<dyn Write> = match &cli.out {
                    Some(path) => Box::new(BufWriter::new(
                        fs::File::create(path)
                            .with_context(|| format!("creating {}", path.display()))?,
                    )),
                    None => Box::new(BufWriter::new(io::stdout().lock())),
                };
                bundle.write_header(&mut out)?;
                let letter = bundle.kind.letter();
                for r in bundle.relations() {
                    writeln!(out, "{}", r.render(letter))?;
                    count += 1;
                }
                out.flush()?;
            }
            if let Some(path) = substitutions {
                let table = substitution_table(&m, &n, s)?;
                let mut f = BufWriter::new(fs::File::create(path)?);
                write_substitutions(&table, &mut f)?;
                f.flush()?;
            }
            eprintln!(
                "{count} relations on a {}x{} grid",
                bundle.rows, bundle.cols
            );
            return Ok(Outcome {
                json: Value::Null,
                summary: String::new(),
                affirmative: true,
            });
        }
        Command::NoncommCert { file, s } => {
            let m = read_matroid(file)?;
            let cert = noncommutativity_certificate(&m, s.structure.into())?;
            let summary = match &cert {
                Some(c) => format!(
                    "certificate via {}",
                    json!(c.route).as_str().unwrap_or_default()
                ),
                None => "no disjoint automorphisms".to_string(),
            };
            Outcome::verdict(cert.is_some(), json!({"certificate": cert}), summary)
        }
    })
}

fn emit(cli: &Cli, o: &Outcome) -> Result<()> {
    if o.json.is_null() {
        return Ok(());
    }
    let text = serde_json::to_string_pretty(&o.json)? + "\n";
    match &cli.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().write_all(text.as_bytes())?,
    }
    eprintln!("{}", o.summary);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli, &o).map(|_| o.affirmative)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|c| c.kind() == io::ErrorKind::BrokenPipe)
}
